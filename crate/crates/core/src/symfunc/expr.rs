//! Symmetric function expressions: a homogeneous degree, a basis tag, and a
//! sparse coefficient map over partitions.
//!
//! Transition data between the classical bases is derived once per degree.
//! The e, h and p expansions into monomial symmetric functions come from
//! explicit multiplication in finitely many variables (degree n needs only n
//! variables); the Schur expansion comes from the power sums via the
//! symmetric group characters.

use super::partition::{character, partitions_of, Partition};
use super::ratio::QtRational;
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Monomial,
    Elementary,
    Homogeneous,
    PowerSum,
    Schur,
    ModifiedMacdonald,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        let s = match self {
            Basis::Monomial => "m",
            Basis::Elementary => "e",
            Basis::Homogeneous => "h",
            Basis::PowerSum => "p",
            Basis::Schur => "s",
            Basis::ModifiedMacdonald => "H~",
        };
        write!(f, "{s}")
    }
}

/// A homogeneous symmetric function expanded in one basis, with exact
/// rational-function coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFuncExpr {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, QtRational>,
}

impl SymFuncExpr {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymFuncExpr { degree, basis, coeffs: BTreeMap::new() }
    }

    /// The single basis element B_lambda.
    pub fn unit(lambda: Partition, basis: Basis) -> Self {
        let mut f = SymFuncExpr::zero(lambda.size(), basis);
        f.set_coefficient(lambda, QtRational::one());
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coefficient(&self, lambda: &Partition) -> QtRational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(QtRational::zero)
    }

    pub fn set_coefficient(&mut self, lambda: Partition, value: QtRational) {
        debug_assert_eq!(lambda.size(), self.degree);
        if value.is_zero() {
            self.coeffs.remove(&lambda);
        } else {
            self.coeffs.insert(lambda, value);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &QtRational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, factor: &QtRational) -> SymFuncExpr {
        let mut out = SymFuncExpr::zero(self.degree, self.basis);
        for (l, c) in &self.coeffs {
            out.set_coefficient(l.clone(), c.mul(factor));
        }
        out
    }

    pub fn add(&self, other: &SymFuncExpr) -> SymFuncExpr {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.basis, other.basis);
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.set_coefficient(l.clone(), out.coefficient(l).add(c));
        }
        out
    }

    /// Dense coordinates with respect to the given partition list.
    pub(crate) fn to_vector(&self, parts: &[Partition]) -> Vec<QtRational> {
        parts.iter().map(|l| self.coefficient(l)).collect()
    }

    pub(crate) fn from_vector(
        degree: usize,
        basis: Basis,
        parts: &[Partition],
        values: Vec<QtRational>,
    ) -> SymFuncExpr {
        let mut out = SymFuncExpr::zero(degree, basis);
        for (l, v) in parts.iter().zip(values) {
            out.set_coefficient(l.clone(), v);
        }
        out
    }
}

impl fmt::Display for SymFuncExpr {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{c}] {}{}", self.basis, l)?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Expansions in finitely many variables. A polynomial in x_1..x_nvars is a
// map from exponent vectors to integer coefficients.
// ---------------------------------------------------------------------------

type XPoly = BTreeMap<Vec<u8>, i64>;

fn x_constant(nvars: usize) -> XPoly {
    BTreeMap::from([(vec![0u8; nvars], 1)])
}

fn x_mul(a: &XPoly, b: &XPoly) -> XPoly {
    let mut out = XPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let exp: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(exp).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// e_k = sum over k-subsets of the variables.
fn e_in_x(k: usize, nvars: usize) -> XPoly {
    let mut out = XPoly::new();
    let mut subset = Vec::new();
    fn go(start: usize, k: usize, nvars: usize, subset: &mut Vec<usize>, out: &mut XPoly) {
        if subset.len() == k {
            let mut exp = vec![0u8; nvars];
            for &i in subset.iter() {
                exp[i] = 1;
            }
            out.insert(exp, 1);
            return;
        }
        for i in start..nvars {
            subset.push(i);
            go(i + 1, k, nvars, subset, out);
            subset.pop();
        }
    }
    go(0, k, nvars, &mut subset, &mut out);
    out
}

/// h_k = sum over all monomials of degree k.
fn h_in_x(k: usize, nvars: usize) -> XPoly {
    let mut out = XPoly::new();
    let mut exp = vec![0u8; nvars];
    fn go(var: usize, remaining: usize, exp: &mut Vec<u8>, out: &mut XPoly) {
        if var + 1 == exp.len() {
            exp[var] = remaining as u8;
            out.insert(exp.clone(), 1);
            exp[var] = 0;
            return;
        }
        for take in 0..=remaining {
            exp[var] = take as u8;
            go(var + 1, remaining - take, exp, out);
        }
        exp[var] = 0;
    }
    go(0, k, &mut exp, &mut out);
    out
}

/// p_k = sum of k-th powers.
fn p_in_x(k: usize, nvars: usize) -> XPoly {
    let mut out = XPoly::new();
    for i in 0..nvars {
        let mut exp = vec![0u8; nvars];
        exp[i] = k as u8;
        out.insert(exp, 1);
    }
    out
}

/// Coefficient of x^rho (exponents sorted decreasingly) in a symmetric
/// polynomial: its monomial-basis coefficient at m_rho.
fn monomial_coefficient(p: &XPoly, rho: &Partition, nvars: usize) -> i64 {
    let mut exp = vec![0u8; nvars];
    for (i, &part) in rho.parts().iter().enumerate() {
        exp[i] = part as u8;
    }
    p.get(&exp).copied().unwrap_or(0)
}

fn product_in_m(lambda: &Partition, nvars: usize, gen: fn(usize, usize) -> XPoly) -> XPoly {
    let mut acc = x_constant(nvars);
    for &part in lambda.parts() {
        acc = x_mul(&acc, &gen(part, nvars));
    }
    acc
}

/// Expansion matrices into the monomial basis at one degree: rows indexed by
/// the basis element's partition, columns by the monomial partition, both in
/// the order of `partitions_of`.
pub(crate) struct MonomialTables {
    pub e_in_m: Vec<Vec<i64>>,
    pub h_in_m: Vec<Vec<i64>>,
    pub p_in_m: Vec<Vec<i64>>,
    pub s_in_m: Vec<Vec<i64>>,
}

pub(crate) fn monomial_tables(degree: usize) -> MonomialTables {
    let parts = partitions_of(degree);
    let nvars = degree.max(1);
    let extract = |poly: &XPoly| -> Vec<i64> {
        parts.iter().map(|rho| monomial_coefficient(poly, rho, nvars)).collect()
    };
    let e_in_m: Vec<Vec<i64>> =
        parts.iter().map(|l| extract(&product_in_m(l, nvars, e_in_x))).collect();
    let h_in_m: Vec<Vec<i64>> =
        parts.iter().map(|l| extract(&product_in_m(l, nvars, h_in_x))).collect();
    let p_in_m: Vec<Vec<i64>> =
        parts.iter().map(|l| extract(&product_in_m(l, nvars, p_in_x))).collect();

    // s_lambda = sum_rho chi^lambda(rho) p_rho / z_rho; clearing by n! keeps
    // the arithmetic integral.
    let factorial: i128 = (1..=degree as i128).product();
    let s_in_m: Vec<Vec<i64>> = parts
        .iter()
        .map(|lambda| {
            (0..parts.len())
                .map(|m_idx| {
                    let total: i128 = parts
                        .iter()
                        .enumerate()
                        .map(|(r, rho)| {
                            character(lambda, rho) as i128
                                * (factorial / rho.z() as i128)
                                * p_in_m[r][m_idx] as i128
                        })
                        .sum();
                    assert_eq!(total % factorial, 0, "Schur expansion must be integral");
                    (total / factorial) as i64
                })
                .collect()
        })
        .collect();

    MonomialTables { e_in_m, h_in_m, p_in_m, s_in_m }
}

// ---------------------------------------------------------------------------
// Dense linear algebra over the rational function field.
// ---------------------------------------------------------------------------

/// out[j] = sum_i coords[i] * matrix[i][j].
pub(crate) fn apply_rows(matrix: &[Vec<QtRational>], coords: &[QtRational]) -> Vec<QtRational> {
    let cols = matrix.first().map_or(0, Vec::len);
    let mut out = vec![QtRational::zero(); cols];
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (j, cell) in matrix[i].iter().enumerate() {
            if !cell.is_zero() {
                out[j] = out[j].add(&c.mul(cell));
            }
        }
    }
    out
}

pub(crate) fn apply_rows_int(matrix: &[Vec<i64>], coords: &[QtRational]) -> Vec<QtRational> {
    let cols = matrix.first().map_or(0, Vec::len);
    let mut out = vec![QtRational::zero(); cols];
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (j, &cell) in matrix[i].iter().enumerate() {
            if cell != 0 {
                out[j] = out[j].add(&c.mul_int(cell));
            }
        }
    }
    out
}

pub(crate) fn int_matrix_to_rational(matrix: &[Vec<i64>]) -> Vec<Vec<QtRational>> {
    matrix
        .iter()
        .map(|row| row.iter().map(|&c| QtRational::from_int(c)).collect())
        .collect()
}

/// Gauss-Jordan inverse over the rational function field.
pub(crate) fn invert_matrix(matrix: &[Vec<QtRational>]) -> Result<Vec<Vec<QtRational>>> {
    let n = matrix.len();
    let mut a: Vec<Vec<QtRational>> = matrix.to_vec();
    let mut inv: Vec<Vec<QtRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { QtRational::one() } else { QtRational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::OracleInvariant("singular transition matrix".into()))?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = a[col][col].inv().expect("pivot is nonzero");
        for j in 0..n {
            a[col][j] = a[col][j].mul(&scale);
            inv[col][j] = inv[col][j].mul(&scale);
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..n {
                let av = a[col][j].mul(&factor);
                a[r][j] = a[r][j].sub(&av);
                let iv = inv[col][j].mul(&factor);
                inv[r][j] = inv[r][j].sub(&iv);
            }
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn degree_two_tables() {
        let t = monomial_tables(2);
        // Partitions in order: (1,1), (2).
        // e_2 = m_11, e_11 = 2 m_11 + m_2.
        assert_eq!(t.e_in_m[1], vec![1, 0]);
        assert_eq!(t.e_in_m[0], vec![2, 1]);
        // h_2 = m_11 + m_2, p_2 = m_2.
        assert_eq!(t.h_in_m[1], vec![1, 1]);
        assert_eq!(t.p_in_m[1], vec![0, 1]);
        // s_2 = m_11 + m_2, s_11 = m_11.
        assert_eq!(t.s_in_m[1], vec![1, 1]);
        assert_eq!(t.s_in_m[0], vec![1, 0]);
    }

    #[test]
    fn schur_expansion_is_kostka_positive() {
        for degree in 1..=6 {
            let parts = partitions_of(degree);
            let t = monomial_tables(degree);
            for (i, lambda) in parts.iter().enumerate() {
                for (j, rho) in parts.iter().enumerate() {
                    let k = t.s_in_m[i][j];
                    assert!(k >= 0, "Kostka numbers are non-negative");
                    // Unitriangularity with respect to dominance.
                    if i == j {
                        assert_eq!(k, 1);
                    } else if k != 0 {
                        assert!(rho.dominated_by(lambda), "K_{{{lambda}{rho}}} = {k}");
                    }
                }
            }
        }
    }

    #[test]
    fn hook_content_spot_check() {
        // Degree 3, partitions (1,1,1), (2,1), (3): s_21 = m_21 + 2 m_111.
        let t = monomial_tables(3);
        assert_eq!(t.s_in_m[1], vec![2, 1, 0]);
        // p_3 = m_3; p_111 = sum over all: (x1+x2+x3)^3 expanded.
        assert_eq!(t.p_in_m[2], vec![0, 0, 1]);
        assert_eq!(t.p_in_m[0], vec![6, 3, 1]);
    }

    #[test]
    fn matrix_inverse_round_trip() {
        let t = monomial_tables(3);
        let m = int_matrix_to_rational(&t.h_in_m);
        let inv = invert_matrix(&m).unwrap();
        // m * inv = identity, checked through apply_rows on unit vectors.
        for i in 0..3 {
            let mut unit = vec![QtRational::zero(); 3];
            unit[i] = QtRational::one();
            let coords = apply_rows(&m, &unit);
            let back = apply_rows(&inv, &coords);
            assert_eq!(back, unit);
        }
    }

    #[test]
    fn singular_matrix_is_reported() {
        let row = vec![QtRational::one(), QtRational::one()];
        let m = vec![row.clone(), row];
        assert!(invert_matrix(&m).is_err());
    }

    #[test]
    fn expr_accessors() {
        let f = SymFuncExpr::unit(p(&[2, 1]), Basis::Schur);
        assert_eq!(f.degree(), 3);
        assert_eq!(f.basis(), Basis::Schur);
        assert!(f.coefficient(&p(&[2, 1])).is_one());
        assert!(f.coefficient(&p(&[3])).is_zero());
        let g = f.scale(&QtRational::from_int(2)).add(&f.scale(&QtRational::from_int(-2)));
        assert!(g.is_zero());
    }
}
