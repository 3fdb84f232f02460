//! Parking functions as labelled Dyck paths, the (area, pmaj) bistatistic,
//! and the shuffle set of two compositions.
//!
//! A parking function of size n is stored as the map label -> column; rows,
//! the lattice path and the area word are derived by listing the columns left
//! to right with each column's labels increasing bottom to top.

use crate::error::{Error, Result};
use crate::graph::{component_blocks, Block, Composition, ComponentKind};
use crate::qt::QtPolynomial;
use crate::sorted::DEFAULT_MAX_N;
use crate::toppling::maj_stats;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelledDyckPath {
    /// column_of[i-1] = column of label i, columns numbered 1..=n from the
    /// left.
    column_of: Vec<usize>,
}

impl LabelledDyckPath {
    /// Validates the Dyck condition: at least c labels must sit in the first
    /// c columns, for every c.
    pub fn new(column_of: Vec<usize>) -> Result<Self> {
        let n = column_of.len();
        if n == 0 {
            return Err(Error::NotAParkingFunction("empty label set".into()));
        }
        if let Some(&c) = column_of.iter().find(|&&c| c == 0 || c > n) {
            return Err(Error::NotAParkingFunction(format!(
                "column {c} out of range 1..={n}"
            )));
        }
        let mut counts = vec![0usize; n + 1];
        for &c in &column_of {
            counts[c] += 1;
        }
        let mut prefix = 0;
        for (c, &count) in counts.iter().enumerate().skip(1) {
            prefix += count;
            if prefix < c {
                return Err(Error::NotAParkingFunction(format!(
                    "only {prefix} labels in the first {c} columns"
                )));
            }
        }
        Ok(LabelledDyckPath { column_of })
    }

    /// Parses the classical function form "col(1),col(2),...,col(n)".
    pub fn parse(s: &str) -> Result<Self> {
        let mut cols = Vec::new();
        for piece in s.trim().split(',') {
            let c: usize = piece
                .trim()
                .parse()
                .map_err(|_| Error::ParseError(format!("bad column index {piece:?}")))?;
            cols.push(c);
        }
        LabelledDyckPath::new(cols)
    }

    pub fn n(&self) -> usize {
        self.column_of.len()
    }

    pub fn column_of(&self, label: usize) -> usize {
        self.column_of[label - 1]
    }

    pub fn columns(&self) -> &[usize] {
        &self.column_of
    }

    /// Labels in one column, increasing bottom to top.
    pub fn labels_in_column(&self, column: usize) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.column_of(i) == column).collect()
    }

    /// (label, column) of each row, bottom to top.
    pub fn rows(&self) -> Vec<(usize, usize)> {
        let mut rows = Vec::with_capacity(self.n());
        for c in 1..=self.n() {
            for label in self.labels_in_column(c) {
                rows.push((label, c));
            }
        }
        rows
    }

    /// The area word a_1 ... a_n (a_i = whole squares between the path and
    /// the diagonal in row i) and its sum.
    pub fn area_data(&self) -> (Vec<usize>, u64) {
        let word: Vec<usize> =
            self.rows().iter().enumerate().map(|(idx, &(_, c))| idx + 1 - c).collect();
        let area = word.iter().map(|&a| a as u64).sum();
        (word, area)
    }

    pub fn area(&self) -> u64 {
        self.area_data().1
    }

    /// The parking word p_1 ... p_n: greedily park the largest available
    /// label not exceeding the previous one, restarting at the maximum when
    /// none qualifies.
    pub fn parking_word(&self) -> Vec<usize> {
        let n = self.n();
        let mut available: Vec<usize> = self.labels_in_column(1);
        let mut word = Vec::with_capacity(n);
        let mut prev = *available.iter().max().expect("column 1 is nonempty");
        available.retain(|&x| x != prev);
        word.push(prev);
        for c in 2..=n {
            available.extend(self.labels_in_column(c));
            let pick = available
                .iter()
                .copied()
                .filter(|&x| x <= prev)
                .max()
                .or_else(|| available.iter().copied().max())
                .expect("the Dyck condition keeps the pool nonempty");
            available.retain(|&x| x != pick);
            word.push(pick);
            prev = pick;
        }
        word
    }

    /// pmaj = maj of the reversed parking word.
    pub fn pmaj(&self) -> u64 {
        let mut word = self.parking_word();
        word.reverse();
        maj_stats(&word).1
    }

    /// Labels read bottom to top.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows().into_iter().map(|(label, _)| label).collect()
    }
}

impl fmt::Display for LabelledDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        for (i, c) in self.column_of.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Membership in the shuffle set W(mu;nu): the subword of each clique block
/// must be increasing and the subword of each independent block decreasing.
pub fn in_shuffle(word: &[usize], mu: &Composition, nu: &Composition) -> bool {
    let blocks = component_blocks(mu, nu);
    blocks.iter().all(|block| {
        let subword: Vec<usize> =
            word.iter().copied().filter(|&x| block.contains(x)).collect();
        match block.kind {
            ComponentKind::Clique => subword.windows(2).all(|w| w[0] < w[1]),
            ComponentKind::Independent => subword.windows(2).all(|w| w[0] > w[1]),
        }
    })
}

/// All parking functions of size |mu| + |nu| whose reading word lies in
/// W(mu;nu), in lexicographic order of the column vector.
pub fn enumerate_pf(mu: &Composition, nu: &Composition) -> Result<Vec<LabelledDyckPath>> {
    enumerate_pf_bounded(mu, nu, DEFAULT_MAX_N)
}

pub fn enumerate_pf_bounded(
    mu: &Composition,
    nu: &Composition,
    max_n: usize,
) -> Result<Vec<LabelledDyckPath>> {
    let n = mu.size() + nu.size();
    if n == 0 {
        return Err(Error::InvalidComposition("both compositions are empty".into()));
    }
    if n > max_n {
        return Err(Error::BoundExceeded { n, max: max_n });
    }
    let blocks = component_blocks(mu, nu);
    let block_of: Vec<Block> = (1..=n)
        .map(|label| *blocks.iter().find(|b| b.contains(label)).unwrap())
        .collect();

    // Shuffle membership in column form: for i < j in the same block,
    // cliques force col(i) <= col(j) and independents force col(i) > col(j).
    let mut out = Vec::new();
    let mut cols = vec![0usize; n];
    fn dfs(
        n: usize,
        label: usize,
        cols: &mut Vec<usize>,
        block_of: &[Block],
        out: &mut Vec<LabelledDyckPath>,
    ) {
        if label > n {
            if let Ok(path) = LabelledDyckPath::new(cols.clone()) {
                out.push(path);
            }
            return;
        }
        let block = block_of[label - 1];
        let (lo, hi) = if label == block.lo {
            (1, n)
        } else {
            match block.kind {
                ComponentKind::Clique => (cols[label - 2], n),
                ComponentKind::Independent => (1, cols[label - 2].saturating_sub(1)),
            }
        };
        for c in lo..=hi {
            cols[label - 1] = c;
            dfs(n, label + 1, cols, block_of, out);
        }
    }
    dfs(n, 1, &mut cols, &block_of, &mut out);
    out.sort();
    for path in &out {
        debug_assert!(in_shuffle(&path.reading_word(), mu, nu));
    }
    Ok(out)
}

/// The generating polynomial sum over PF(mu;nu) of q^area t^pmaj.
pub fn pf_polynomial(mu: &Composition, nu: &Composition) -> Result<QtPolynomial> {
    pf_polynomial_bounded(mu, nu, DEFAULT_MAX_N)
}

pub fn pf_polynomial_bounded(
    mu: &Composition,
    nu: &Composition,
    max_n: usize,
) -> Result<QtPolynomial> {
    let mut poly = QtPolynomial::zero();
    for path in enumerate_pf_bounded(mu, nu, max_n)? {
        poly.add_term(path.area() as u32, path.pmaj() as u32, 1);
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The parking function of the worked example: columns of labels 1..=12.
    pub(crate) fn worked_path() -> LabelledDyckPath {
        LabelledDyckPath::new(vec![9, 4, 1, 8, 1, 1, 2, 4, 1, 1, 2, 9]).unwrap()
    }

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn worked_example_columns_and_rows() {
        let d = worked_path();
        assert_eq!(d.labels_in_column(1), vec![3, 5, 6, 9, 10]);
        assert_eq!(d.labels_in_column(2), vec![7, 11]);
        assert_eq!(d.labels_in_column(4), vec![2, 8]);
        assert_eq!(d.labels_in_column(8), vec![4]);
        assert_eq!(d.labels_in_column(9), vec![1, 12]);
        assert_eq!(d.labels_in_column(3), Vec::<usize>::new());
    }

    #[test]
    fn worked_example_area() {
        let (word, area) = worked_path().area_data();
        assert_eq!(word, vec![0, 1, 2, 3, 4, 4, 5, 4, 5, 2, 2, 3]);
        assert_eq!(area, 35);
    }

    #[test]
    fn area_edge_cases() {
        let staircase = LabelledDyckPath::new(vec![1, 2, 3, 4]).unwrap();
        assert_eq!(staircase.area_data(), (vec![0, 0, 0, 0], 0));
        let both_first = LabelledDyckPath::new(vec![1, 1]).unwrap();
        assert_eq!(both_first.area_data(), (vec![0, 1], 1));
    }

    #[test]
    fn worked_example_parking_word_and_pmaj() {
        let d = worked_path();
        assert_eq!(d.parking_word(), vec![10, 9, 7, 6, 5, 3, 2, 11, 8, 4, 1, 12]);
        assert_eq!(d.pmaj(), 6);
    }

    #[test]
    fn parking_word_edge_cases() {
        let staircase = LabelledDyckPath::new(vec![1, 2, 3]).unwrap();
        assert_eq!(staircase.parking_word(), vec![1, 2, 3]);
        assert_eq!(staircase.pmaj(), 3); // reversed word 3,2,1 descends everywhere

        let both_first = LabelledDyckPath::new(vec![1, 1]).unwrap();
        assert_eq!(both_first.parking_word(), vec![2, 1]);
        assert_eq!(both_first.pmaj(), 0);

        let two_staircase = LabelledDyckPath::new(vec![1, 2]).unwrap();
        assert_eq!(two_staircase.parking_word(), vec![1, 2]);
        assert_eq!(two_staircase.pmaj(), 1);

        let single_column = LabelledDyckPath::new(vec![1, 1, 1, 1]).unwrap();
        assert_eq!(single_column.parking_word(), vec![4, 3, 2, 1]);
        assert_eq!(single_column.pmaj(), 0);
    }

    #[test]
    fn worked_example_reading_word() {
        assert_eq!(
            worked_path().reading_word(),
            vec![3, 5, 6, 9, 10, 7, 11, 2, 8, 4, 1, 12]
        );
    }

    #[test]
    fn reading_word_edge_cases() {
        let single_column = LabelledDyckPath::new(vec![1, 1, 1]).unwrap();
        assert_eq!(single_column.reading_word(), vec![1, 2, 3]);
        let crossed = LabelledDyckPath::new(vec![2, 1]).unwrap();
        assert_eq!(crossed.reading_word(), vec![2, 1]);
    }

    #[test]
    fn shuffle_membership() {
        let word = worked_path().reading_word();
        assert!(in_shuffle(&word, &comp(&[4, 3]), &comp(&[3, 2])));
        let identity: Vec<usize> = (1..=5).collect();
        assert!(in_shuffle(&identity, &comp(&[3, 2]), &Composition::empty()));
        assert!(!in_shuffle(&[1, 2], &Composition::empty(), &comp(&[2])));
        assert!(in_shuffle(&[2, 1], &Composition::empty(), &comp(&[2])));
    }

    #[test]
    fn rejects_non_parking_input() {
        assert!(LabelledDyckPath::new(vec![2, 2]).is_err());
        assert!(LabelledDyckPath::new(vec![1, 3, 3]).is_err());
        assert!(LabelledDyckPath::new(vec![0, 1]).is_err());
        assert!(LabelledDyckPath::new(vec![]).is_err());
        assert!(LabelledDyckPath::new(vec![1, 2, 2]).is_ok());
    }

    #[test]
    fn text_form_round_trip() {
        let d = worked_path();
        assert_eq!(d.to_string(), "9,4,1,8,1,1,2,4,1,1,2,9");
        assert_eq!(LabelledDyckPath::parse(&d.to_string()).unwrap(), d);
        assert!(LabelledDyckPath::parse("2,2").is_err());
    }

    #[test]
    fn pf_enumeration_small() {
        // The three parking functions of size 2 all pass for nu = (1,1).
        let found = enumerate_pf(&Composition::empty(), &comp(&[1, 1])).unwrap();
        assert_eq!(found.len(), 3);
        let poly = pf_polynomial(&Composition::empty(), &comp(&[1, 1])).unwrap();
        let mut expected = QtPolynomial::one();
        expected.add_term(1, 0, 1);
        expected.add_term(0, 1, 1);
        assert_eq!(poly, expected);

        assert_eq!(pf_polynomial(&comp(&[1]), &Composition::empty()).unwrap(), QtPolynomial::one());

        for n in 1..=5 {
            let found = enumerate_pf(&Composition::empty(), &comp(&[n])).unwrap();
            assert_eq!(found.len(), 1);
            let expected: Vec<usize> = (1..=n).rev().collect();
            assert_eq!(found[0].columns(), &expected[..]);
            assert_eq!(found[0].area(), 0);
            assert_eq!(found[0].pmaj(), 0);
        }
    }

    #[test]
    fn all_parking_functions_count() {
        for n in 1..=5 {
            let ones = Composition::new(vec![1; n]).unwrap();
            let found = enumerate_pf(&Composition::empty(), &ones).unwrap();
            assert_eq!(found.len(), (n + 1).pow(n as u32 - 1));
        }
    }

    // The constrained enumeration agrees with a plain filter over all column
    // vectors.
    #[test]
    fn enumeration_matches_bruteforce_filter() {
        for (mu, nu) in [(vec![2], vec![2]), (vec![1, 1], vec![1]), (vec![], vec![3])] {
            let mu = comp(&mu);
            let nu = if nu.is_empty() { Composition::empty() } else { comp(&nu) };
            let n = mu.size() + nu.size();
            let mut expected = Vec::new();
            let mut cols = vec![1usize; n];
            loop {
                if let Ok(path) = LabelledDyckPath::new(cols.clone()) {
                    if in_shuffle(&path.reading_word(), &mu, &nu) {
                        expected.push(path);
                    }
                }
                let mut i = 0;
                while i < n && cols[i] == n {
                    cols[i] = 1;
                    i += 1;
                }
                if i == n {
                    break;
                }
                cols[i] += 1;
            }
            expected.sort();
            assert_eq!(enumerate_pf(&mu, &nu).unwrap(), expected);
        }
    }

    #[test]
    fn bound_is_enforced() {
        let big = Composition::new(vec![9]).unwrap();
        assert_eq!(
            enumerate_pf(&big, &Composition::empty()),
            Err(Error::BoundExceeded { n: 9, max: 8 })
        );
    }

    // Walk the lattice path cell by cell and count whole squares between the
    // path and the diagonal, as an independent check of area_data.
    fn area_by_path_walk(d: &LabelledDyckPath) -> (Vec<usize>, u64) {
        let n = d.n();
        let mut column_counts = vec![0usize; n + 1];
        for &c in d.columns() {
            column_counts[c] += 1;
        }
        // x-coordinate of the path while crossing each row.
        let mut word = Vec::with_capacity(n);
        let mut row = 0;
        for (x, &count) in column_counts.iter().enumerate().skip(1) {
            for _ in 0..count {
                row += 1;
                // Squares strictly between the vertical step at x-1 and the
                // diagonal square of row `row`.
                word.push(row - x);
            }
        }
        let total = word.iter().map(|&a| a as u64).sum();
        (word, total)
    }

    #[test]
    fn area_matches_path_walk() {
        let d = worked_path();
        assert_eq!(d.area_data(), area_by_path_walk(&d));
        for n in 1..=5 {
            let ones = Composition::new(vec![1; n]).unwrap();
            for d in enumerate_pf(&Composition::empty(), &ones).unwrap() {
                assert_eq!(d.area_data(), area_by_path_walk(&d), "{d}");
            }
        }
    }
}
