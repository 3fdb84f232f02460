//! The symbolic oracle: Macdonald polynomials by Gram-Schmidt against the
//! (q,t)-deformed Hall pairing, the modified basis diagonalizing nabla, and
//! the pairing of nabla e_n against products e_mu h_nu via Pieri rules.
//!
//! All transition data is built eagerly per degree when the oracle is
//! created, after which every method is read-only.

use super::expr::{
    apply_rows, apply_rows_int, int_matrix_to_rational, invert_matrix, monomial_tables, Basis,
    SymFuncExpr,
};
use super::partition::{add_horizontal_strip, add_vertical_strip, partitions_of, Partition};
use super::poly::ZPoly;
use super::ratio::QtRational;
use crate::error::{Error, Result};
use crate::graph::Composition;
use crate::qt::QtPolynomial;
use num_bigint::BigInt;
use std::collections::BTreeMap;

/// Default degree cap; 6 is the hard ceiling.
pub const DEFAULT_ORACLE_MAX_N: usize = 5;
pub const HARD_ORACLE_MAX_N: usize = 6;

struct DegreeTable {
    parts: Vec<Partition>,
    e_in_m: Vec<Vec<i64>>,
    h_in_m: Vec<Vec<i64>>,
    p_in_m: Vec<Vec<i64>>,
    s_in_m: Vec<Vec<i64>>,
    m_to_e: Vec<Vec<QtRational>>,
    m_to_h: Vec<Vec<QtRational>>,
    m_to_p: Vec<Vec<QtRational>>,
    m_to_s: Vec<Vec<QtRational>>,
    /// Macdonald P_lambda in monomial coordinates.
    p_lambda: Vec<Vec<QtRational>>,
    /// Modified Macdonald H~_lambda in Schur coordinates.
    ht_in_s: Vec<Vec<QtRational>>,
    s_to_ht: Vec<Vec<QtRational>>,
}

pub struct SymFuncOracle {
    max_degree: usize,
    tables: Vec<DegreeTable>,
    /// nabla e_n in Schur coordinates, index n.
    nabla: Vec<Option<SymFuncExpr>>,
}

impl SymFuncOracle {
    pub fn new(max_degree: usize) -> Result<Self> {
        if max_degree > HARD_ORACLE_MAX_N {
            return Err(Error::BoundExceeded { n: max_degree, max: HARD_ORACLE_MAX_N });
        }
        let mut tables = Vec::with_capacity(max_degree + 1);
        for degree in 0..=max_degree {
            tables.push(DegreeTable::build(degree)?);
        }
        let mut oracle = SymFuncOracle { max_degree, tables, nabla: vec![None; max_degree + 1] };
        for n in 1..=max_degree {
            let expr = oracle.compute_nabla_e(n)?;
            oracle.nabla[n] = Some(expr);
        }
        Ok(oracle)
    }

    pub fn with_default_bound() -> Result<Self> {
        SymFuncOracle::new(DEFAULT_ORACLE_MAX_N)
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn table(&self, degree: usize) -> Result<&DegreeTable> {
        self.tables
            .get(degree)
            .ok_or(Error::BoundExceeded { n: degree, max: self.max_degree })
    }

    /// Re-expands f in the target basis.
    pub fn convert(&self, f: &SymFuncExpr, target: Basis) -> Result<SymFuncExpr> {
        if f.basis() == target {
            return Ok(f.clone());
        }
        let table = self.table(f.degree())?;
        let m_coords = self.to_monomial_coords(f, table);
        let out = match target {
            Basis::Monomial => m_coords,
            Basis::Elementary => apply_rows(&table.m_to_e, &m_coords),
            Basis::Homogeneous => apply_rows(&table.m_to_h, &m_coords),
            Basis::PowerSum => apply_rows(&table.m_to_p, &m_coords),
            Basis::Schur => apply_rows(&table.m_to_s, &m_coords),
            Basis::ModifiedMacdonald => {
                let s = apply_rows(&table.m_to_s, &m_coords);
                apply_rows(&table.s_to_ht, &s)
            }
        };
        Ok(SymFuncExpr::from_vector(f.degree(), target, &table.parts, out))
    }

    fn to_monomial_coords(&self, f: &SymFuncExpr, table: &DegreeTable) -> Vec<QtRational> {
        let coords = f.to_vector(&table.parts);
        match f.basis() {
            Basis::Monomial => coords,
            Basis::Elementary => apply_rows_int(&table.e_in_m, &coords),
            Basis::Homogeneous => apply_rows_int(&table.h_in_m, &coords),
            Basis::PowerSum => apply_rows_int(&table.p_in_m, &coords),
            Basis::Schur => apply_rows_int(&table.s_in_m, &coords),
            Basis::ModifiedMacdonald => {
                let s = apply_rows(&table.ht_in_s, &coords);
                apply_rows_int(&table.s_in_m, &s)
            }
        }
    }

    /// Hall scalar product: power sums are orthogonal with <p_l, p_l> = z_l.
    pub fn hall_inner(&self, f: &SymFuncExpr, g: &SymFuncExpr) -> Result<QtRational> {
        self.inner_product(f, g, |_| QtRational::one())
    }

    /// (q,t)-deformed pairing: <p_l, p_l> = z_l prod_i (1-q^{l_i})/(1-t^{l_i}).
    pub fn qt_inner(&self, f: &SymFuncExpr, g: &SymFuncExpr) -> Result<QtRational> {
        self.inner_product(f, g, qt_deformation)
    }

    fn inner_product(
        &self,
        f: &SymFuncExpr,
        g: &SymFuncExpr,
        weight: fn(&Partition) -> QtRational,
    ) -> Result<QtRational> {
        if f.degree() != g.degree() {
            return Err(Error::DegreeMismatch { left: f.degree(), right: g.degree() });
        }
        let table = self.table(f.degree())?;
        let fp = apply_rows(&table.m_to_p, &self.to_monomial_coords(f, table));
        let gp = apply_rows(&table.m_to_p, &self.to_monomial_coords(g, table));
        let mut total = QtRational::zero();
        for (idx, rho) in table.parts.iter().enumerate() {
            if fp[idx].is_zero() || gp[idx].is_zero() {
                continue;
            }
            let term = fp[idx].mul(&gp[idx]).mul_int(rho.z() as i64).mul(&weight(rho));
            total = total.add(&term);
        }
        Ok(total)
    }

    /// Macdonald P_lambda in the monomial basis: m_lambda plus dominated
    /// terms, orthogonal under the deformed pairing.
    pub fn macdonald_p(&self, lambda: &Partition) -> Result<SymFuncExpr> {
        let table = self.table(lambda.size())?;
        let idx = table.index_of(lambda);
        Ok(SymFuncExpr::from_vector(
            lambda.size(),
            Basis::Monomial,
            &table.parts,
            table.p_lambda[idx].clone(),
        ))
    }

    /// Modified Macdonald H~_lambda in the Schur basis.
    pub fn modified_h(&self, lambda: &Partition) -> Result<SymFuncExpr> {
        let table = self.table(lambda.size())?;
        let idx = table.index_of(lambda);
        Ok(SymFuncExpr::from_vector(
            lambda.size(),
            Basis::Schur,
            &table.parts,
            table.ht_in_s[idx].clone(),
        ))
    }

    /// nabla e_n in the Schur basis, with every coefficient a polynomial.
    pub fn nabla_e(&self, n: usize) -> Result<&SymFuncExpr> {
        if n == 0 || n > self.max_degree {
            return Err(Error::BoundExceeded { n, max: self.max_degree });
        }
        Ok(self.nabla[n].as_ref().expect("built eagerly"))
    }

    fn compute_nabla_e(&self, n: usize) -> Result<SymFuncExpr> {
        let table = self.table(n)?;
        let e_n = SymFuncExpr::unit(Partition::new(vec![n]), Basis::Elementary);
        // Expand e_n over the modified Macdonald basis and scale each
        // component by the nabla eigenvalue T_lambda = q^{n(l')} t^{n(l)}.
        let d = self.convert(&e_n, Basis::ModifiedMacdonald)?;
        let mut s_coords = vec![QtRational::zero(); table.parts.len()];
        for (idx, lambda) in table.parts.iter().enumerate() {
            let c = d.coefficient(lambda);
            if c.is_zero() {
                continue;
            }
            let t_lambda = ZPoly::monomial(
                lambda.conjugate().n_stat() as u32,
                lambda.n_stat() as u32,
                BigInt::from(1),
            );
            let scaled = c.mul_poly(&t_lambda);
            for (j, cell) in table.ht_in_s[idx].iter().enumerate() {
                if !cell.is_zero() {
                    s_coords[j] = s_coords[j].add(&scaled.mul(cell));
                }
            }
        }
        for (j, c) in s_coords.iter().enumerate() {
            if c.as_polynomial().is_none() {
                return Err(Error::OracleInvariant(format!(
                    "nabla e_{n} coefficient at s{} is not polynomial: {c}",
                    table.parts[j]
                )));
            }
        }
        Ok(SymFuncExpr::from_vector(n, Basis::Schur, &table.parts, s_coords))
    }

    /// The Hall pairing of f (any basis) against e_mu h_nu, as a polynomial
    /// with non-negative integer coefficients. e_mu h_nu is expanded in the
    /// Schur basis by Pieri rules: e_k adds vertical strips, h_k horizontal
    /// strips.
    pub fn pair_with(
        &self,
        f: &SymFuncExpr,
        mu: &Composition,
        nu: &Composition,
    ) -> Result<QtPolynomial> {
        let n = mu.size() + nu.size();
        if n != f.degree() {
            return Err(Error::DegreeMismatch { left: f.degree(), right: n });
        }
        let f_s = self.convert(f, Basis::Schur)?;
        let product = e_mu_h_nu_in_schur(mu, nu);
        let mut total = QtRational::zero();
        for (lambda, &count) in &product {
            if count == 0 {
                continue;
            }
            let c = f_s.coefficient(lambda);
            if !c.is_zero() {
                total = total.add(&c.mul_int(count));
            }
        }
        rational_to_qt_polynomial(&total)
    }

    /// The pairing <nabla e_n, e_mu h_nu> for a composition pair.
    pub fn pair_nabla_e(&self, mu: &Composition, nu: &Composition) -> Result<QtPolynomial> {
        let n = mu.size() + nu.size();
        if n == 0 || n > self.max_degree {
            return Err(Error::BoundExceeded { n, max: self.max_degree });
        }
        let nabla = self.nabla_e(n)?.clone();
        self.pair_with(&nabla, mu, nu)
    }
}

fn qt_deformation(rho: &Partition) -> QtRational {
    let mut num = ZPoly::one();
    let mut den = ZPoly::one();
    for &part in rho.parts() {
        num = num.mul(&ZPoly::one_minus(part as u32, 0));
        den = den.mul(&ZPoly::one_minus(0, part as u32));
    }
    QtRational::new(num, den)
}

/// Schur expansion of e_mu h_nu with integer coefficients.
fn e_mu_h_nu_in_schur(mu: &Composition, nu: &Composition) -> BTreeMap<Partition, i64> {
    let mut acc = BTreeMap::from([(Partition::empty(), 1i64)]);
    let step = |acc: &BTreeMap<Partition, i64>, k: usize, vertical: bool| {
        let mut next: BTreeMap<Partition, i64> = BTreeMap::new();
        for (lambda, &c) in acc {
            let strips =
                if vertical { add_vertical_strip(lambda, k) } else { add_horizontal_strip(lambda, k) };
            for target in strips {
                *next.entry(target).or_insert(0) += c;
            }
        }
        next
    };
    for &k in mu.parts() {
        acc = step(&acc, k, true);
    }
    for &k in nu.parts() {
        acc = step(&acc, k, false);
    }
    acc
}

/// Converts an exact rational that must be a polynomial with i64-sized
/// non-negative integer coefficients.
fn rational_to_qt_polynomial(value: &QtRational) -> Result<QtPolynomial> {
    let poly = value.as_polynomial().ok_or_else(|| {
        Error::OracleInvariant(format!("pairing is not polynomial: {value}"))
    })?;
    let mut out = QtPolynomial::zero();
    for (q, t, c) in poly.terms() {
        let c: i64 = c.try_into().map_err(|_| {
            Error::OracleInvariant(format!("coefficient overflow at q^{q} t^{t}"))
        })?;
        if c < 0 {
            return Err(Error::OracleInvariant(format!(
                "negative coefficient {c} at q^{q} t^{t}"
            )));
        }
        out.add_term(q, t, c);
    }
    Ok(out)
}

impl DegreeTable {
    fn index_of(&self, lambda: &Partition) -> usize {
        self.parts.iter().position(|p| p == lambda).expect("partition of this degree")
    }

    fn build(degree: usize) -> Result<DegreeTable> {
        let parts = partitions_of(degree);
        let k = parts.len();
        let tables = monomial_tables(degree);
        let m_to_e = invert_matrix(&int_matrix_to_rational(&tables.e_in_m))?;
        let m_to_h = invert_matrix(&int_matrix_to_rational(&tables.h_in_m))?;
        let m_to_p = invert_matrix(&int_matrix_to_rational(&tables.p_in_m))?;
        let m_to_s = invert_matrix(&int_matrix_to_rational(&tables.s_in_m))?;

        // The deformed pairing is diagonal in power-sum coordinates, so the
        // whole Gram-Schmidt pass runs there. Row i of m_to_p is m_lambda_i
        // in p-coordinates.
        let weights: Vec<QtRational> =
            parts.iter().map(|rho| qt_deformation(rho).mul_int(rho.z() as i64)).collect();
        let qt_inner_p = |a: &[QtRational], b: &[QtRational]| -> QtRational {
            let mut total = QtRational::zero();
            for (idx, w) in weights.iter().enumerate() {
                if a[idx].is_zero() || b[idx].is_zero() {
                    continue;
                }
                total = total.add(&a[idx].mul(&b[idx]).mul(w));
            }
            total
        };

        // Gram-Schmidt along the dominance linear extension (smallest first):
        // P_lambda = m_lambda - sum of projections onto the earlier P_rho.
        // Since the earlier P_rho are already pairwise orthogonal, the
        // projection coefficients can be taken against m_lambda itself, which
        // keeps every inner product sparse.
        let mut p_lambda_p: Vec<Vec<QtRational>> = Vec::with_capacity(k);
        let mut p_norms: Vec<QtRational> = Vec::with_capacity(k);
        for (i, m_row) in m_to_p.iter().enumerate() {
            let mut cand = m_row.clone();
            for j in 0..i {
                let num = qt_inner_p(m_row, &p_lambda_p[j]);
                if num.is_zero() {
                    continue;
                }
                let coeff = num.div(&p_norms[j]).ok_or_else(|| {
                    Error::OracleInvariant("vanishing Macdonald norm".into())
                })?;
                for (slot, basis_c) in cand.iter_mut().zip(&p_lambda_p[j]) {
                    *slot = slot.sub(&coeff.mul(basis_c));
                }
            }
            let norm = qt_inner_p(&cand, &cand);
            if norm.is_zero() {
                return Err(Error::OracleInvariant("vanishing Macdonald norm".into()));
            }
            p_norms.push(norm);
            p_lambda_p.push(cand);
        }
        let p_lambda: Vec<Vec<QtRational>> =
            p_lambda_p.iter().map(|row| apply_rows_int(&tables.p_in_m, row)).collect();

        // Integral form J, then the modified basis through the power sums:
        // substitute t -> 1/t in each coefficient, divide the p_rho component
        // by prod (1 - t^{-rho_i}), and scale by t^{n(lambda)}.
        let mut ht_in_s: Vec<Vec<QtRational>> = Vec::with_capacity(k);
        for (i, lambda) in parts.iter().enumerate() {
            let mut hook = ZPoly::one();
            for (arm, leg) in lambda.cells() {
                hook = hook.mul(&ZPoly::one_minus(arm as u32, leg as u32 + 1));
            }
            let j_p: Vec<QtRational> =
                p_lambda_p[i].iter().map(|c| c.mul_poly(&hook)).collect();
            let t_n = ZPoly::monomial(0, lambda.n_stat() as u32, BigInt::from(1));
            let mut h_p = Vec::with_capacity(k);
            for (rho, c) in parts.iter().zip(&j_p) {
                if c.is_zero() {
                    h_p.push(QtRational::zero());
                    continue;
                }
                let mut value = c.subst_t_inv().mul_poly(&t_n);
                for &part in rho.parts() {
                    // 1/(1 - t^{-k}) = t^k/(t^k - 1).
                    let tk = ZPoly::monomial(0, part as u32, BigInt::from(1));
                    let factor = QtRational::new(tk.clone(), tk.sub(&ZPoly::one()));
                    value = value.mul(&factor);
                }
                h_p.push(value);
            }
            let h_m = apply_rows_int(&tables.p_in_m, &h_p);
            let h_s = apply_rows(&m_to_s, &h_m);
            for (j, c) in h_s.iter().enumerate() {
                if c.as_polynomial().is_none() {
                    return Err(Error::OracleInvariant(format!(
                        "H~{lambda} coefficient at s{} is not polynomial: {c}",
                        parts[j]
                    )));
                }
            }
            ht_in_s.push(h_s);
        }
        let s_to_ht = invert_matrix(&ht_in_s)?;

        Ok(DegreeTable {
            parts,
            e_in_m: tables.e_in_m,
            h_in_m: tables.h_in_m,
            p_in_m: tables.p_in_m,
            s_in_m: tables.s_in_m,
            m_to_e,
            m_to_h,
            m_to_p,
            m_to_s,
            p_lambda,
            ht_in_s,
            s_to_ht,
        })
    }
}
