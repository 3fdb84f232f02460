//! Integer partitions and the combinatorial data the oracle needs from them:
//! conjugation, dominance order, arm and leg lengths, the z statistic, the
//! symmetric group characters (border-strip rule), and Pieri strips.

use std::fmt;

/// Weakly decreasing positive parts; the empty partition is allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts decreasingly and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at 1-based row index, zero beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// n(lambda) = sum (i-1) lambda_i.
    pub fn n_stat(&self) -> u64 {
        self.parts.iter().enumerate().map(|(i, &p)| (i as u64) * p as u64).sum()
    }

    /// (arm, leg) for every cell of the diagram.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let conj = self.conjugate();
        let mut cells = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 1..=row {
                let arm = row - j;
                let leg = conj.part(j) - (i + 1);
                cells.push((arm, leg));
            }
        }
        cells
    }

    /// z_lambda = prod_k k^{m_k} m_k! where m_k is the multiplicity of k.
    pub fn z(&self) -> u64 {
        let mut z = 1u64;
        let mut mult = std::collections::BTreeMap::new();
        for &p in &self.parts {
            *mult.entry(p).or_insert(0u64) += 1;
        }
        for (k, m) in mult {
            z *= (k as u64).pow(m as u32);
            for i in 1..=m {
                z *= i;
            }
        }
        z
    }

    /// Dominance comparison by prefix sums; only defined for equal sizes.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.size(), other.size());
        let rows = self.len().max(other.len());
        let mut a = 0usize;
        let mut b = 0usize;
        for i in 1..=rows {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of n in lexicographically ascending order, which is a
/// linear extension of dominance with the dominance-smallest first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn go(remaining: usize, max_part: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: stack.clone() });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            stack.push(p);
            go(remaining - p, p, stack, out);
            stack.pop();
        }
    }
    go(n, n, &mut stack, &mut out);
    out.sort();
    out
}

/// Character chi^lambda(rho) of the symmetric group, via the border-strip
/// recursion on beta numbers: removing a strip of size k replaces a beta
/// number b by b - k, with sign (-1)^{number of beta numbers between them}.
pub fn character(lambda: &Partition, rho: &Partition) -> i64 {
    assert_eq!(lambda.size(), rho.size(), "character needs equal sizes");
    let m = lambda.len().max(1);
    let beta: Vec<usize> = (1..=m).map(|i| lambda.part(i) + m - i).collect();
    fn go(beta: &[usize], rho: &[usize]) -> i64 {
        let Some((&k, rest)) = rho.split_first() else {
            return 1;
        };
        let mut total = 0;
        for (idx, &b) in beta.iter().enumerate() {
            if b >= k && !beta.contains(&(b - k)) {
                let height = beta.iter().filter(|&&x| b - k < x && x < b).count();
                let sign = if height % 2 == 0 { 1 } else { -1 };
                let mut next = beta.to_vec();
                next[idx] = b - k;
                total += sign * go(&next, rest);
            }
        }
        total
    }
    go(&beta, rho.parts())
}

/// Partitions obtained from lambda by adding a horizontal k-strip (no two
/// added cells in the same column), i.e. mu with
/// mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ...
pub fn add_horizontal_strip(lambda: &Partition, k: usize) -> Vec<Partition> {
    let rows = lambda.len() + 1;
    let mut out = Vec::new();
    let mut mu = Vec::new();
    fn go(
        lambda: &Partition,
        row: usize,
        rows: usize,
        remaining: usize,
        mu: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row > rows {
            if remaining == 0 {
                out.push(Partition::new(mu.clone()));
            }
            return;
        }
        let lo = lambda.part(row);
        let hi = if row == 1 { lo + remaining } else { lambda.part(row - 1).min(lo + remaining) };
        for val in lo..=hi {
            mu.push(val);
            go(lambda, row + 1, rows, remaining - (val - lo), mu, out);
            mu.pop();
        }
    }
    go(lambda, 1, rows, k, &mut mu, &mut out);
    out.sort();
    out
}

/// Vertical k-strips, by conjugating the horizontal case.
pub fn add_vertical_strip(lambda: &Partition, k: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = add_horizontal_strip(&lambda.conjugate(), k)
        .into_iter()
        .map(|mu| mu.conjugate())
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn conjugation_is_an_involution() {
        for n in 0..=6 {
            for lambda in partitions_of(n) {
                assert_eq!(lambda.conjugate().conjugate(), lambda);
                assert_eq!(lambda.conjugate().size(), lambda.size());
            }
        }
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
    }

    #[test]
    fn n_stat_from_the_conjugate() {
        // n(lambda) = sum C(lambda'_i, 2).
        for n in 0..=6 {
            for lambda in partitions_of(n) {
                let via_conjugate: u64 = lambda
                    .conjugate()
                    .parts()
                    .iter()
                    .map(|&c| (c as u64) * (c as u64 - 1) / 2)
                    .sum();
                assert_eq!(lambda.n_stat(), via_conjugate);
            }
        }
    }

    #[test]
    fn partition_counts() {
        let expected = [1, 1, 2, 3, 5, 7, 11];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(partitions_of(n).len(), count);
        }
    }

    #[test]
    fn lex_order_extends_dominance() {
        for n in 1..=6 {
            let parts = partitions_of(n);
            for (i, a) in parts.iter().enumerate() {
                for b in &parts[i + 1..] {
                    // b comes later, so b must not be dominated by a unless equal.
                    assert!(!b.dominated_by(a) || a == b);
                }
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[2, 2]).dominated_by(&p(&[3, 1])));
        assert!(!p(&[3, 1]).dominated_by(&p(&[2, 2])));
        assert!(p(&[2, 1, 1]).dominated_by(&p(&[2, 2])));
        // (3,1,1,1) and (2,2,2) are incomparable.
        assert!(!p(&[3, 1, 1, 1]).dominated_by(&p(&[2, 2, 2])));
        assert!(!p(&[2, 2, 2]).dominated_by(&p(&[3, 1, 1, 1])));
    }

    #[test]
    fn z_values() {
        assert_eq!(p(&[1]).z(), 1);
        assert_eq!(p(&[2]).z(), 2);
        assert_eq!(p(&[1, 1]).z(), 2);
        assert_eq!(p(&[2, 1]).z(), 2);
        assert_eq!(p(&[1, 1, 1]).z(), 6);
        assert_eq!(p(&[3, 2, 1]).z(), 6);
        // sum over partitions of n of n!/z = number of permutations.
        for n in 1..=6 {
            let fact: u64 = (1..=n as u64).product();
            let total: u64 = partitions_of(n).iter().map(|l| fact / l.z()).sum();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn cells_of_a_hook() {
        // (2,1): cells (arm, leg) are (1,1), (0,0) in row 1 and (0,0) in row 2.
        let mut cells = p(&[2, 1]).cells();
        cells.sort_unstable();
        assert_eq!(cells, vec![(0, 0), (0, 0), (1, 1)]);
    }

    #[test]
    fn characters_small() {
        // Trivial and sign characters.
        for n in 1..=6 {
            for rho in partitions_of(n) {
                assert_eq!(character(&p(&[n]), &rho), 1);
                let sign = if (n - rho.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(character(&Partition::new(vec![1; n]), &rho), sign);
            }
        }
        assert_eq!(character(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(character(&p(&[2, 1]), &p(&[2, 1])), 0);
        assert_eq!(character(&p(&[2, 1]), &p(&[3])), -1);
    }

    #[test]
    fn character_orthogonality() {
        // Row orthogonality: sum_rho chi^a(rho) chi^b(rho) / z_rho = delta_ab.
        for n in 1..=5 {
            let parts = partitions_of(n);
            let fact: i64 = (1..=n as i64).product();
            for a in &parts {
                for b in &parts {
                    let total: i64 = parts
                        .iter()
                        .map(|rho| character(a, rho) * character(b, rho) * (fact / rho.z() as i64))
                        .sum();
                    assert_eq!(total, if a == b { fact } else { 0 });
                }
            }
        }
    }

    #[test]
    fn horizontal_strips() {
        assert_eq!(add_horizontal_strip(&Partition::empty(), 2), vec![p(&[2])]);
        assert_eq!(add_horizontal_strip(&p(&[1]), 1), vec![p(&[1, 1]), p(&[2])]);
        // Check (2,1) + 2-strip against the interlacing condition applied to
        // all partitions of 5.
        let got = add_horizontal_strip(&p(&[2, 1]), 2);
        let mut expected: Vec<Partition> = partitions_of(5)
            .into_iter()
            .filter(|mu| {
                (1..=3).all(|i| mu.part(i) >= p(&[2, 1]).part(i))
                    && (1..=3).all(|i| p(&[2, 1]).part(i) >= mu.part(i + 1))
            })
            .collect();
        expected.sort();
        assert_eq!(got, expected);
        assert!(got.contains(&p(&[4, 1])));
        assert!(got.contains(&p(&[3, 2])));
        assert!(!got.contains(&p(&[2, 1, 1, 1])));
    }

    #[test]
    fn vertical_strips() {
        assert_eq!(add_vertical_strip(&Partition::empty(), 2), vec![p(&[1, 1])]);
        assert_eq!(add_vertical_strip(&p(&[1]), 1), vec![p(&[1, 1]), p(&[2])]);
        let got = add_vertical_strip(&p(&[2, 2]), 2);
        assert_eq!(got, vec![p(&[2, 2, 1, 1]), p(&[3, 2, 1]), p(&[3, 3])]);
    }
}
