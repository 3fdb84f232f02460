//! Acceptance suite: one test per criterion, each printed as its own
//! pass/fail line by the harness.
//!
//! Exhaustive small-size checks substitute for the general statements: the
//! bijection and its statistics are verified element by element for every
//! composition pair up to n = 6, and the symbolic oracle agrees with both
//! combinatorial sides for every pair up to n = 5.

use sandpark::bijection::{phi, verify_theorem};
use sandpark::graph::{CliqueIndependentGraph, Composition};
use sandpark::parking::{enumerate_pf, pf_polynomial, LabelledDyckPath};
use sandpark::sandpile::{self, Configuration};
use sandpark::sorted::{
    enumerate_sortrec, find_characterization_witnesses, lift, sortrec_polynomial, u_word, w_word,
};
use sandpark::symfunc::SymFuncOracle;
use sandpark::toppling::{maj_stats, run};

fn compositions_of(k: usize) -> Vec<Composition> {
    if k == 0 {
        return vec![Composition::empty()];
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn go(remaining: usize, stack: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if remaining == 0 {
            out.push(Composition::new(stack.clone()).unwrap());
            return;
        }
        for part in 1..=remaining {
            stack.push(part);
            go(remaining - part, stack, out);
            stack.pop();
        }
    }
    go(k, &mut stack, &mut out);
    out
}

/// Every (mu, nu) with |mu| + |nu| = n.
fn composition_pairs(n: usize) -> Vec<(Composition, Composition)> {
    let mut out = Vec::new();
    for a in 0..=n {
        for mu in compositions_of(a) {
            for nu in compositions_of(n - a) {
                out.push((mu.clone(), nu));
            }
        }
    }
    out
}

fn worked_graph() -> CliqueIndependentGraph {
    CliqueIndependentGraph::from_parts(&[4, 3], &[3, 2]).unwrap()
}

fn worked_config() -> Configuration {
    Configuration::from_display_word(&[3, 10, 11, 11, 8, 10, 11, 10, 4, 9, 7, 3])
}

#[test]
fn criterion_1_worked_example_reproduction() {
    let start = std::time::Instant::now();
    let g = worked_graph();
    let k = worked_config();

    let res = run(&g, &k).expect("worked configuration is recurrent");
    assert_eq!(res.sigma(), &[10, 9, 7, 6, 5, 3, 2, 11, 8, 4, 1, 12]);
    assert_eq!(res.rounds(), &[1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 2]);
    assert_eq!(res.delay(), 6);
    assert_eq!(sandpile::level(&g, &k), 35);

    let (k_tilde, _) = lift(&g, &k).unwrap();
    assert_eq!(u_word(res.sigma(), &k_tilde), vec![0, 1, 1, 3, 4, 5, 3, 6, 5, 2, 2, 3]);
    assert_eq!(w_word(res.sigma()), vec![1, 2, 3, 4, 5, 6, 7, 7, 6, 4, 3, 4]);

    let d = phi(&g, &k).unwrap();
    assert_eq!(d.columns(), &[9, 4, 1, 8, 1, 1, 2, 4, 1, 1, 2, 9]);
    assert_eq!(d.labels_in_column(1), vec![3, 5, 6, 9, 10]);
    assert_eq!(d.labels_in_column(2), vec![7, 11]);
    assert_eq!(d.labels_in_column(4), vec![2, 8]);
    assert_eq!(d.labels_in_column(8), vec![4]);
    assert_eq!(d.labels_in_column(9), vec![1, 12]);

    let (area_word, area) = d.area_data();
    assert_eq!(area_word, vec![0, 1, 2, 3, 4, 4, 5, 4, 5, 2, 2, 3]);
    assert_eq!(area, 35);
    assert_eq!(d.parking_word(), res.sigma());
    assert_eq!(d.pmaj(), 6);

    assert!(start.elapsed().as_secs() < 1, "worked example must reproduce in under a second");
}

#[test]
fn criterion_2_bijection_at_desk_scale() {
    for n in 1..=6 {
        for (mu, nu) in composition_pairs(n) {
            let report = verify_theorem(&mu, &nu)
                .unwrap_or_else(|e| panic!("verify_theorem({mu};{nu}) failed: {e}"));
            assert!(report.passed(), "({mu};{nu}):\n{}", report.render_text());
            assert_eq!(report.sandpile_polynomial, report.parking_polynomial, "({mu};{nu})");
        }
    }
}

#[test]
fn criterion_3_oracle_triple_agreement() {
    let oracle = SymFuncOracle::new(5).unwrap();
    for n in 1..=5 {
        for (mu, nu) in composition_pairs(n) {
            let lhs = oracle
                .pair_nabla_e(&mu, &nu)
                .unwrap_or_else(|e| panic!("pairing failed for ({mu};{nu}): {e}"));
            let sandpile_side = sortrec_polynomial(&mu, &nu).unwrap();
            let parking_side = pf_polynomial(&mu, &nu).unwrap();
            assert_eq!(lhs, sandpile_side, "oracle vs sandpile at ({mu};{nu})");
            assert_eq!(lhs, parking_side, "oracle vs parking at ({mu};{nu})");
            assert!(lhs.is_qt_symmetric(), "q<->t symmetry at ({mu};{nu}): {lhs}");
        }
    }
}

/// All sorted stable configurations of a graph, by per-block monotone tuples.
fn sorted_stable_configs(g: &CliqueIndependentGraph) -> Vec<Configuration> {
    let mut out = Vec::new();
    let mut values = vec![0i64; g.n()];
    fn fill_block(
        g: &CliqueIndependentGraph,
        block_idx: usize,
        values: &mut Vec<i64>,
        out: &mut Vec<Configuration>,
    ) {
        if block_idx == g.blocks().len() {
            out.push(Configuration::from_ascending(values.clone()));
            return;
        }
        let block = g.blocks()[block_idx];
        let max_value = g.degree(block.lo).unwrap() as i64 - 1;
        let increasing = block.kind == sandpark::graph::ComponentKind::Independent;
        #[allow(clippy::too_many_arguments)]
        fn step(
            g: &CliqueIndependentGraph,
            block_idx: usize,
            v: usize,
            hi: usize,
            lo_val: i64,
            hi_val: i64,
            increasing: bool,
            values: &mut Vec<i64>,
            out: &mut Vec<Configuration>,
        ) {
            if v > hi {
                fill_block(g, block_idx + 1, values, out);
                return;
            }
            for val in lo_val..=hi_val {
                values[v - 1] = val;
                let (next_lo, next_hi) = if increasing { (val, hi_val) } else { (lo_val, val) };
                step(g, block_idx, v + 1, hi, next_lo, next_hi, increasing, values, out);
            }
        }
        step(g, block_idx, block.lo, block.hi, 0, max_value, increasing, values, out);
    }
    fill_block(g, 0, &mut values, &mut out);
    out
}

#[test]
fn criterion_4_characterization_equivalence() {
    for n in 1..=5 {
        for (mu, nu) in composition_pairs(n) {
            let g = CliqueIndependentGraph::new(mu.clone(), nu.clone()).unwrap();
            for k in sorted_stable_configs(&g) {
                let witnesses = find_characterization_witnesses(&g, &k).unwrap();
                let recurrent = sandpile::is_recurrent_bruteforce(&g, &k).unwrap();
                assert_eq!(
                    !witnesses.is_empty(),
                    recurrent,
                    "({mu};{nu}) configuration {k}: witnesses {witnesses:?}"
                );
                if recurrent {
                    let sigma = run(&g, &k).unwrap().sigma().to_vec();
                    assert_eq!(
                        witnesses,
                        vec![sigma],
                        "({mu};{nu}) configuration {k}: the witness must be the toppling word"
                    );
                } else {
                    assert!(
                        run(&g, &k).is_err(),
                        "({mu};{nu}) configuration {k}: the toppling algorithm must stall"
                    );
                }
            }
        }
    }
}

#[test]
fn criterion_5_lift_preserves_toppling_word() {
    for n in 1..=6 {
        for (mu, nu) in composition_pairs(n) {
            let g = CliqueIndependentGraph::new(mu.clone(), nu.clone()).unwrap();
            for k in enumerate_sortrec(&mu, &nu).unwrap() {
                let original = run(&g, &k).unwrap();
                let (k_tilde, lifted_graph) = lift(&g, &k).unwrap();
                let lifted = run(&lifted_graph, &k_tilde).unwrap_or_else(|e| {
                    panic!("lift of {k} on ({mu};{nu}) is not recurrent: {e}")
                });
                assert_eq!(
                    original.sigma(),
                    lifted.sigma(),
                    "({mu};{nu}) configuration {k}: lifted toppling word differs"
                );
            }
        }
    }
}

/// Independent count of Dyck paths of size n: walk north/east steps that stay
/// weakly above the diagonal.
fn count_dyck_paths(n: usize) -> u64 {
    fn walk(north: usize, east: usize, n: usize) -> u64 {
        if north == n && east == n {
            return 1;
        }
        let mut total = 0;
        if north < n {
            total += walk(north + 1, east, n);
        }
        if east < north {
            total += walk(north, east + 1, n);
        }
        total
    }
    walk(0, 0, n)
}

/// Independent count of parking functions of size n, through the sorted
/// preference criterion: f is a parking function iff its increasing
/// rearrangement satisfies f_(i) <= i.
fn count_parking_functions(n: usize) -> u64 {
    let mut count = 0;
    let mut f = vec![1usize; n];
    loop {
        let mut sorted = f.clone();
        sorted.sort_unstable();
        if sorted.iter().enumerate().all(|(i, &v)| v <= i + 1) {
            count += 1;
        }
        let mut i = 0;
        while i < n && f[i] == n {
            f[i] = 1;
            i += 1;
        }
        if i == n {
            return count;
        }
        f[i] += 1;
    }
}

#[test]
fn criterion_6_specialization_counts() {
    let oracle = SymFuncOracle::new(5).unwrap();
    let catalan = [1u64, 2, 5, 14, 42];
    for n in 1..=5 {
        let enumerated = count_dyck_paths(n);
        assert_eq!(enumerated, catalan[n - 1]);
        let mu = Composition::new(vec![n]).unwrap();
        let poly = oracle.pair_nabla_e(&mu, &Composition::empty()).unwrap();
        assert_eq!(poly.eval_at_one() as u64, enumerated, "q,t-Catalan at n = {n}");
    }
    for n in 1..=5 {
        let nu = Composition::new(vec![1; n]).unwrap();
        let sortrec = enumerate_sortrec(&Composition::empty(), &nu).unwrap();
        let expected = count_parking_functions(n);
        assert_eq!(expected, ((n + 1) as u64).pow(n as u32 - 1));
        assert_eq!(sortrec.len() as u64, expected, "|SortRec| at n = {n}");
    }
}

#[test]
fn criterion_7_structural_properties() {
    for n in 1..=5 {
        for (mu, nu) in composition_pairs(n) {
            let g = CliqueIndependentGraph::new(mu.clone(), nu.clone()).unwrap();
            let configs = enumerate_sortrec(&mu, &nu).unwrap();
            assert!(!configs.is_empty(), "({mu};{nu}) has no sorted recurrent configuration");
            let mut min_level = i64::MAX;
            for k in &configs {
                let lev = sandpile::level(&g, k);
                assert!(lev >= 0, "({mu};{nu}) configuration {k} has level {lev}");
                min_level = min_level.min(lev);
                let res = run(&g, k).unwrap();
                let mut reversed = res.sigma().to_vec();
                reversed.reverse();
                assert_eq!(res.delay(), maj_stats(&reversed).1, "({mu};{nu}) {k}");
            }
            assert_eq!(min_level, 0, "({mu};{nu}) has no level-0 recurrent configuration");

            for d in enumerate_pf(&mu, &nu).unwrap() {
                let mut word = d.parking_word();
                word.sort_unstable();
                let expected: Vec<usize> = (1..=n).collect();
                assert_eq!(word, expected, "({mu};{nu}) path {d}");
            }
        }
    }
    // The worked 12-vertex instance as a larger spot check.
    let g = worked_graph();
    let k = worked_config();
    assert!(sandpile::level(&g, &k) >= 0);
    let d: LabelledDyckPath = phi(&g, &k).unwrap();
    let mut word = d.parking_word();
    word.sort_unstable();
    assert_eq!(word, (1..=12).collect::<Vec<_>>());
}
