//! Sorted configurations, the lift to the all-clique graph, the u and w
//! words, and the characterization of recurrence among sorted stable
//! configurations.
//!
//! A configuration is sorted when it is weakly decreasing along each clique
//! block and weakly increasing along each independent block. The lift adds
//! nu_s - j to the j-th largest vertex of each independent block, embedding
//! the configuration into the complete graph without changing its level or
//! its toppling word.

use crate::error::{Error, Result};
use crate::graph::{CliqueIndependentGraph, Composition, ComponentKind};
use crate::qt::QtPolynomial;
use crate::sandpile::{self, Configuration};
use crate::toppling;

/// Default cap on n for the combinatorial enumerations.
pub const DEFAULT_MAX_N: usize = 8;

/// Whether k is weakly decreasing along each clique block and weakly
/// increasing along each independent block.
pub fn is_sorted(g: &CliqueIndependentGraph, k: &Configuration) -> bool {
    g.blocks().iter().all(|block| {
        let ok = |a: i64, b: i64| match block.kind {
            ComponentKind::Clique => a >= b,
            ComponentKind::Independent => a <= b,
        };
        (block.lo..block.hi).all(|v| ok(k.value(v), k.value(v + 1)))
    })
}

/// The lift of a sorted configuration: identical on clique vertices, and on
/// an independent block with vertices v_1 > v_2 > ... > v_s the value at v_j
/// gains s - j. Also returns the companion all-clique graph.
pub fn lift(
    g: &CliqueIndependentGraph,
    k: &Configuration,
) -> Result<(Configuration, CliqueIndependentGraph)> {
    if !is_sorted(g, k) {
        return Err(Error::NotSorted);
    }
    let mut lifted = k.clone();
    for block in g.blocks() {
        if block.kind == ComponentKind::Independent {
            let s = block.len() as i64;
            for (j, v) in block.vertices().rev().enumerate() {
                lifted.set_value(v, k.value(v) + s - (j as i64 + 1));
            }
        }
    }
    Ok((lifted, g.all_cliques()))
}

/// The word u with u_j = j + k_tilde(sigma(j)) - n: the number of grains left
/// on sigma(j) right after it topples in the lifted graph.
pub fn u_word(sigma: &[usize], k_tilde: &Configuration) -> Vec<i64> {
    let n = k_tilde.len() as i64;
    sigma
        .iter()
        .enumerate()
        .map(|(idx, &v)| (idx as i64 + 1) + k_tilde.value(v) - n)
        .collect()
}

/// The word w computed from the runs (maximal consecutive decreasing
/// substrings) of 0·sigma: w_j counts the members of sigma(j)'s run larger
/// than it, plus the smaller members of the run immediately to its left.
pub fn w_word(sigma: &[usize]) -> Vec<usize> {
    let mut extended = Vec::with_capacity(sigma.len() + 1);
    extended.push(0usize);
    extended.extend_from_slice(sigma);
    // runs[p] = index of the run containing position p.
    let mut runs = vec![0usize; extended.len()];
    for p in 1..extended.len() {
        runs[p] = if extended[p] > extended[p - 1] { runs[p - 1] + 1 } else { runs[p - 1] };
    }
    (1..extended.len())
        .map(|p| {
            let i = extended[p];
            let same_run_larger = (1..extended.len())
                .filter(|&q| runs[q] == runs[p] && extended[q] > i)
                .count();
            let prev_run_smaller = (0..extended.len())
                .filter(|&q| runs[p] > 0 && runs[q] == runs[p] - 1 && extended[q] < i)
                .count();
            same_run_larger + prev_run_smaller
        })
        .collect()
}

/// The pair of words attached to a sorted stable configuration and a
/// candidate toppling word, indexed by topple position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortedWitness {
    sigma: Vec<usize>,
    u: Vec<i64>,
    w: Vec<usize>,
}

impl SortedWitness {
    /// Computes u and w for a sorted stable configuration and a permutation
    /// sigma of [n].
    pub fn compute(
        g: &CliqueIndependentGraph,
        k: &Configuration,
        sigma: &[usize],
    ) -> Result<SortedWitness> {
        let (k_tilde, _) = lift(g, k)?;
        Ok(SortedWitness {
            sigma: sigma.to_vec(),
            u: u_word(sigma, &k_tilde),
            w: w_word(sigma),
        })
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn u_word(&self) -> &[i64] {
        &self.u
    }

    pub fn w_word(&self) -> &[usize] {
        &self.w
    }

    /// u at vertex i, i.e. u_{sigma^{-1}(i)}.
    pub fn u_at_vertex(&self, i: usize) -> i64 {
        self.u[self.position_of(i) - 1]
    }

    /// w at vertex i, i.e. w_{sigma^{-1}(i)}.
    pub fn w_at_vertex(&self, i: usize) -> usize {
        self.w[self.position_of(i) - 1]
    }

    fn position_of(&self, i: usize) -> usize {
        self.sigma.iter().position(|&v| v == i).expect("vertex not in sigma") + 1
    }

    /// Whether 0 <= u_j < w_j holds at every position.
    pub fn satisfies_characterization(&self) -> bool {
        self.u.iter().zip(&self.w).all(|(&u, &w)| 0 <= u && (u as u64) < w as u64)
    }
}

/// Whether the given sigma witnesses the recurrence of the sorted stable
/// configuration k, i.e. 0 <= u_j < w_j for all j.
pub fn check_characterization(
    g: &CliqueIndependentGraph,
    k: &Configuration,
    sigma: &[usize],
) -> Result<bool> {
    Ok(SortedWitness::compute(g, k, sigma)?.satisfies_characterization())
}

/// Exhaustive search for every permutation sigma with 0 <= u_j < w_j at all
/// positions. The u and w constraints prune the search position by position,
/// so this is usable well beyond plain n! for small n.
pub fn find_characterization_witnesses(
    g: &CliqueIndependentGraph,
    k: &Configuration,
) -> Result<Vec<Vec<usize>>> {
    let (k_tilde, _) = lift(g, k)?;
    let n = g.n();
    let mut witnesses = Vec::new();
    let mut sigma: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    // The run currently being extended and the completed run before it.
    // Position 0 carries the prepended 0, which always forms its own run.
    fn dfs(
        n: usize,
        k_tilde: &Configuration,
        sigma: &mut Vec<usize>,
        used: &mut [bool],
        prev_run: &[usize],
        cur_run: &[usize],
        witnesses: &mut Vec<Vec<usize>>,
    ) {
        if sigma.len() == n {
            witnesses.push(sigma.clone());
            return;
        }
        let j = sigma.len() + 1;
        let last = *cur_run.last().unwrap();
        for i in 1..=n {
            if used[i] {
                continue;
            }
            let u = j as i64 + k_tilde.value(i) - n as i64;
            if u < 0 {
                continue;
            }
            let (w, next_prev, next_cur): (usize, &[usize], Vec<usize>) = if i < last {
                // i extends the current run; everything already in it is larger.
                let w = cur_run.len() + prev_run.iter().filter(|&&x| x < i).count();
                let mut cur = cur_run.to_vec();
                cur.push(i);
                (w, prev_run, cur)
            } else {
                // i starts a new run; the current run becomes the previous one.
                let w = cur_run.iter().filter(|&&x| x < i).count();
                (w, cur_run, vec![i])
            };
            if (u as u64) >= w as u64 {
                continue;
            }
            used[i] = true;
            sigma.push(i);
            dfs(n, k_tilde, sigma, used, next_prev, &next_cur, witnesses);
            sigma.pop();
            used[i] = false;
        }
    }
    dfs(n, &k_tilde, &mut sigma, &mut used, &[], &[0], &mut witnesses);
    Ok(witnesses)
}

fn check_bound(n: usize, max_n: usize) -> Result<()> {
    if n > max_n {
        return Err(Error::BoundExceeded { n, max: max_n });
    }
    Ok(())
}

/// All sorted recurrent configurations of the graph for (mu, nu), each once,
/// in lexicographic display order. Recurrence is decided by the toppling
/// algorithm and cross-checked against the u/w characterization.
pub fn enumerate_sortrec(mu: &Composition, nu: &Composition) -> Result<Vec<Configuration>> {
    enumerate_sortrec_bounded(mu, nu, DEFAULT_MAX_N)
}

pub fn enumerate_sortrec_bounded(
    mu: &Composition,
    nu: &Composition,
    max_n: usize,
) -> Result<Vec<Configuration>> {
    let g = CliqueIndependentGraph::new(mu.clone(), nu.clone())?;
    check_bound(g.n(), max_n)?;
    let mut found = Vec::new();
    let mut values = vec![0i64; g.n()];
    enumerate_blocks(&g, 0, &mut values, &mut found)?;
    found.sort_by_key(|k| k.display_word());
    Ok(found)
}

/// Recursion over blocks: fill each block with a monotone tuple of stable
/// values, then keep the recurrent candidates.
fn enumerate_blocks(
    g: &CliqueIndependentGraph,
    block_idx: usize,
    values: &mut Vec<i64>,
    found: &mut Vec<Configuration>,
) -> Result<()> {
    if block_idx == g.blocks().len() {
        let k = Configuration::from_ascending(values.clone());
        debug_assert!(is_sorted(g, &k) && sandpile::is_stable(g, &k));
        if let Ok(res) = toppling::run(g, &k) {
            assert!(
                check_characterization(g, &k, res.sigma())?,
                "toppling word of {k} fails the u/w characterization"
            );
            found.push(k);
        }
        return Ok(());
    }
    let block = g.blocks()[block_idx];
    let max_value = g.degree(block.lo)? as i64 - 1;
    // Tuples indexed by ascending vertex: weakly decreasing on cliques,
    // weakly increasing on independents.
    #[allow(clippy::too_many_arguments)]
    fn fill(
        g: &CliqueIndependentGraph,
        block_idx: usize,
        v: usize,
        hi: usize,
        lo_val: i64,
        hi_val: i64,
        increasing: bool,
        values: &mut Vec<i64>,
        found: &mut Vec<Configuration>,
    ) -> Result<()> {
        if v > hi {
            return enumerate_blocks(g, block_idx + 1, values, found);
        }
        for val in lo_val..=hi_val {
            values[v - 1] = val;
            let (next_lo, next_hi) =
                if increasing { (val, hi_val) } else { (lo_val, val) };
            fill(g, block_idx, v + 1, hi, next_lo, next_hi, increasing, values, found)?;
        }
        Ok(())
    }
    fill(
        g,
        block_idx,
        block.lo,
        block.hi,
        0,
        max_value,
        block.kind == ComponentKind::Independent,
        values,
        found,
    )
}

/// The generating polynomial sum over SortRec(mu;nu) of q^lev t^del.
pub fn sortrec_polynomial(mu: &Composition, nu: &Composition) -> Result<QtPolynomial> {
    sortrec_polynomial_bounded(mu, nu, DEFAULT_MAX_N)
}

pub fn sortrec_polynomial_bounded(
    mu: &Composition,
    nu: &Composition,
    max_n: usize,
) -> Result<QtPolynomial> {
    let g = CliqueIndependentGraph::new(mu.clone(), nu.clone())?;
    check_bound(g.n(), max_n)?;
    let mut poly = QtPolynomial::zero();
    for k in enumerate_sortrec_bounded(mu, nu, max_n)? {
        let lev = sandpile::level(&g, &k);
        assert!(lev >= 0, "recurrent configuration {k} has negative level");
        let del = toppling::run(&g, &k)?.delay();
        poly.add_term(lev as u32, del as u32, 1);
    }
    Ok(poly)
}
