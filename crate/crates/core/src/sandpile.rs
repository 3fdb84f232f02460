//! Configurations of the sandpile model and the toppling operators.
//!
//! A configuration assigns an integer number of grains to each non-sink
//! vertex; the value on the sink is ignored throughout. We identify a
//! configuration with the display word k(n) k(n-1) ... k(1).
//!
//! Stability is the strict inequality k(v) < deg(v): a vertex holding exactly
//! its degree topples.

use crate::error::{Error, Result};
use crate::graph::CliqueIndependentGraph;
use std::fmt;

/// Grain counts on vertices 1..=n, stored in ascending vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    grains: Vec<i64>,
}

impl Configuration {
    /// From values listed in ascending vertex order k(1), ..., k(n).
    pub fn from_ascending(grains: Vec<i64>) -> Self {
        Configuration { grains }
    }

    /// From the display word k(n), k(n-1), ..., k(1).
    pub fn from_display_word(word: &[i64]) -> Self {
        Configuration { grains: word.iter().rev().copied().collect() }
    }

    /// Parses the comma-separated display word, e.g. "3,10,11".
    pub fn parse(s: &str) -> Result<Self> {
        let mut word = Vec::new();
        for piece in s.trim().split(',') {
            let v: i64 = piece
                .trim()
                .parse()
                .map_err(|_| Error::ParseError(format!("bad grain count {piece:?}")))?;
            word.push(v);
        }
        Ok(Configuration::from_display_word(&word))
    }

    pub fn len(&self) -> usize {
        self.grains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grains.is_empty()
    }

    /// k(v) for a non-sink vertex v.
    pub fn value(&self, v: usize) -> i64 {
        self.grains[v - 1]
    }

    pub fn set_value(&mut self, v: usize, value: i64) {
        self.grains[v - 1] = value;
    }

    /// Values in ascending vertex order.
    pub fn values(&self) -> &[i64] {
        &self.grains
    }

    pub fn display_word(&self) -> Vec<i64> {
        self.grains.iter().rev().copied().collect()
    }

    pub fn is_non_negative(&self) -> bool {
        self.grains.iter().all(|&g| g >= 0)
    }

    pub fn grain_total(&self) -> i64 {
        self.grains.iter().sum()
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        for (i, g) in self.grains.iter().rev().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

fn check_len(g: &CliqueIndependentGraph, k: &Configuration) {
    assert_eq!(g.n(), k.len(), "configuration length must match the graph");
}

/// Topples vertex v: v donates one grain to each neighbor. Toppling the sink
/// raises every non-sink vertex by one.
pub fn topple(g: &CliqueIndependentGraph, k: &Configuration, v: usize) -> Result<Configuration> {
    check_len(g, k);
    if v > g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let mut out = k.clone();
    if v == 0 {
        for w in 1..=g.n() {
            out.set_value(w, out.value(w) + 1);
        }
        return Ok(out);
    }
    out.set_value(v, out.value(v) - g.degree(v)? as i64);
    for w in 1..=g.n() {
        if g.adjacent(v, w)? {
            out.set_value(w, out.value(w) + 1);
        }
    }
    Ok(out)
}

/// In-place toppling used by the hot loops; same semantics as [`topple`].
pub(crate) fn topple_in_place(g: &CliqueIndependentGraph, k: &mut Configuration, v: usize) {
    if v == 0 {
        for w in 1..=g.n() {
            k.set_value(w, k.value(w) + 1);
        }
        return;
    }
    k.set_value(v, k.value(v) - g.degree(v).unwrap() as i64);
    for w in 1..=g.n() {
        if w != v && g.adjacent(v, w).unwrap() {
            k.set_value(w, k.value(w) + 1);
        }
    }
}

/// Whether every non-sink vertex satisfies k(v) < deg(v).
pub fn is_stable(g: &CliqueIndependentGraph, k: &Configuration) -> bool {
    check_len(g, k);
    (1..=g.n()).all(|v| k.value(v) < g.degree(v).unwrap() as i64)
}

/// All vertices with k(v) >= deg(v), largest first.
pub fn unstable_vertices(g: &CliqueIndependentGraph, k: &Configuration) -> Vec<usize> {
    check_len(g, k);
    (1..=g.n()).rev().filter(|&v| k.value(v) >= g.degree(v).unwrap() as i64).collect()
}

/// lev(k) = -|E_s| + sum_i k(i), where E_s is the set of edges not incident
/// to the sink. Computes the formula on any configuration.
pub fn level(g: &CliqueIndependentGraph, k: &Configuration) -> i64 {
    check_len(g, k);
    k.grain_total() - g.non_sink_edge_count() as i64
}

fn check_stable_non_negative(g: &CliqueIndependentGraph, k: &Configuration) -> Result<()> {
    check_len(g, k);
    if !k.is_non_negative() {
        return Err(Error::NegativeInput);
    }
    if !is_stable(g, k) {
        return Err(Error::UnstableInput);
    }
    Ok(())
}

/// Subset criterion for recurrence: a stable configuration k is recurrent iff
/// starting from the sink-toppled configuration there is no proper (possibly
/// empty) subset A of [n] such that toppling each vertex of A once yields a
/// stable configuration.
///
/// For n <= 12 the subsets are searched exhaustively; beyond that the
/// equivalent burning fixpoint is used (repeatedly discard vertices that are
/// forced to become unstable; k is recurrent iff no vertex survives).
pub fn is_recurrent_bruteforce(g: &CliqueIndependentGraph, k: &Configuration) -> Result<bool> {
    check_stable_non_negative(g, k)?;
    let after_sink = topple(g, k, 0)?;
    if g.n() <= 12 {
        Ok(!subset_stabilizes(g, &after_sink))
    } else {
        Ok(burning_fixpoint_is_empty(g, &after_sink))
    }
}

/// Searches for a proper subset A of [n] whose once-each toppling makes the
/// given (sink-toppled) configuration stable.
fn subset_stabilizes(g: &CliqueIndependentGraph, base: &Configuration) -> bool {
    let n = g.n();
    'subsets: for mask in 0..(1u64 << n) - 1 {
        let mut cfg = base.clone();
        for v in 1..=n {
            if mask >> (v - 1) & 1 == 1 {
                topple_in_place(g, &mut cfg, v);
            }
        }
        for v in 1..=n {
            if cfg.value(v) >= g.degree(v).unwrap() as i64 {
                continue 'subsets;
            }
        }
        return true;
    }
    false
}

/// Greatest-fixpoint form of the same criterion: a nonempty survivor set U
/// with k0(v) <= #(neighbors of v in U) for all v in U exists iff the
/// configuration is not recurrent.
fn burning_fixpoint_is_empty(g: &CliqueIndependentGraph, base: &Configuration) -> bool {
    let n = g.n();
    let mut alive = vec![true; n + 1];
    loop {
        let mut changed = false;
        for v in 1..=n {
            if !alive[v] {
                continue;
            }
            let neighbors_alive =
                (1..=n).filter(|&w| alive[w] && g.adjacent(v, w).unwrap()).count() as i64;
            // v goes unstable once everything outside U has toppled.
            if base.value(v) > neighbors_alive {
                alive[v] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    !alive[1..].iter().any(|&a| a)
}
