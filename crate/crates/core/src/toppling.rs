//! The toppling algorithm and the delay statistic.
//!
//! Starting from a stable configuration, topple the sink, then repeatedly
//! sweep the non-sink vertices from n down to 1, toppling every unstable
//! vertex as it is visited, until all n vertices have toppled once. The order
//! in which vertices topple is the toppling word sigma; r_i counts the full
//! sweeps that happened before the one toppling vertex i, and
//! del(k) = r_1 + ... + r_n.

use crate::error::{Error, Result};
use crate::graph::CliqueIndependentGraph;
use crate::sandpile::{self, Configuration};

/// Output of the toppling algorithm on a recurrent configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopplingResult {
    sigma: Vec<usize>,
    rounds: Vec<u32>,
}

impl TopplingResult {
    /// The toppling word: sigma[j-1] is the j-th vertex toppled.
    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    /// Sweep indices by vertex: rounds[i-1] = r_i.
    pub fn rounds(&self) -> &[u32] {
        &self.rounds
    }

    /// Positions in the toppling word: inverse[i-1] = sigma^{-1}(i), 1-based.
    pub fn sigma_inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.sigma.len()];
        for (j, &v) in self.sigma.iter().enumerate() {
            inv[v - 1] = j + 1;
        }
        inv
    }

    /// del(k) = sum of the r_i.
    pub fn delay(&self) -> u64 {
        self.rounds.iter().map(|&r| r as u64).sum()
    }
}

/// Runs the toppling algorithm. Returns `Error::NotRecurrent` if a full sweep
/// topples nothing while untoppled vertices remain, so this doubles as a
/// recurrence test.
pub fn run(g: &CliqueIndependentGraph, k: &Configuration) -> Result<TopplingResult> {
    assert_eq!(g.n(), k.len(), "configuration length must match the graph");
    if !k.is_non_negative() {
        return Err(Error::NegativeInput);
    }
    if !sandpile::is_stable(g, k) {
        return Err(Error::UnstableInput);
    }
    let n = g.n();
    let degrees: Vec<i64> = (1..=n).map(|v| g.degree(v).unwrap() as i64).collect();

    let mut current = k.clone();
    sandpile::topple_in_place(g, &mut current, 0);

    let mut sigma = Vec::with_capacity(n);
    let mut rounds = vec![0u32; n];
    let mut toppled = vec![false; n + 1];
    let mut sweep: u32 = 0;
    while sigma.len() < n {
        let before = sigma.len();
        for v in (1..=n).rev() {
            if current.value(v) >= degrees[v - 1] {
                sandpile::topple_in_place(g, &mut current, v);
                debug_assert!(!toppled[v], "a vertex toppled twice");
                toppled[v] = true;
                rounds[v - 1] = sweep;
                sigma.push(v);
            }
        }
        if sigma.len() == before {
            return Err(Error::NotRecurrent);
        }
        sweep += 1;
    }
    debug_assert_eq!(&current, k, "a full toppling cycle must return to the input");
    Ok(TopplingResult { sigma, rounds })
}

/// Descent set (1-based positions i with word[i] > word[i+1]) and major index
/// (sum of the descent positions).
pub fn maj_stats<T: PartialOrd>(word: &[T]) -> (Vec<usize>, u64) {
    let descents: Vec<usize> =
        (1..word.len()).filter(|&i| word[i - 1] > word[i]).collect();
    let maj = descents.iter().map(|&i| i as u64).sum();
    (descents, maj)
}
