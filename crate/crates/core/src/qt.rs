//! Exact bivariate polynomials in q and t with integer coefficients.
//!
//! This is the common output type of the three polynomial routes (sandpile,
//! parking, symbolic oracle). Terms are kept in a canonical order: no zero
//! coefficients are stored, and iteration is lexicographic by (q-exponent,
//! t-exponent).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QtPolynomial {
    terms: BTreeMap<(u32, u32), i64>,
}

impl QtPolynomial {
    pub fn zero() -> Self {
        QtPolynomial::default()
    }

    pub fn one() -> Self {
        QtPolynomial::monomial(0, 0, 1)
    }

    /// The single term c·q^a·t^b (zero if c = 0).
    pub fn monomial(q_exp: u32, t_exp: u32, coeff: i64) -> Self {
        let mut p = QtPolynomial::default();
        p.add_term(q_exp, t_exp, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, q_exp: u32, t_exp: u32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry((q_exp, t_exp)).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&(q_exp, t_exp));
        }
    }

    pub fn coefficient(&self, q_exp: u32, t_exp: u32) -> i64 {
        self.terms.get(&(q_exp, t_exp)).copied().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (q-exponent, t-exponent) lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, i64)> + '_ {
        self.terms.iter().map(|(&(q, t), &c)| (q, t, c))
    }

    /// Evaluation at q = t = 1, i.e. the sum of all coefficients.
    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// The polynomial with q and t exchanged.
    pub fn swap_variables(&self) -> QtPolynomial {
        let mut out = QtPolynomial::default();
        for (&(q, t), &c) in &self.terms {
            out.add_term(t, q, c);
        }
        out
    }

    pub fn is_qt_symmetric(&self) -> bool {
        *self == self.swap_variables()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }
}

impl AddAssign<&QtPolynomial> for QtPolynomial {
    fn add_assign(&mut self, rhs: &QtPolynomial) {
        for (&(q, t), &c) in &rhs.terms {
            self.add_term(q, t, c);
        }
    }
}

impl Add for QtPolynomial {
    type Output = QtPolynomial;
    fn add(mut self, rhs: QtPolynomial) -> QtPolynomial {
        self += &rhs;
        self
    }
}

fn write_monomial(f: &mut fmt::Formatter, q: u32, t: u32, c: i64, latex: bool) -> fmt::Result {
    if q == 0 && t == 0 {
        return write!(f, "{c}");
    }
    match c {
        1 => {}
        -1 => write!(f, "-")?,
        _ => write!(f, "{c}")?,
    }
    for (var, exp) in [("q", q), ("t", t)] {
        match exp {
            0 => {}
            1 => write!(f, "{var}")?,
            _ if latex => write!(f, "{var}^{{{exp}}}")?,
            _ => write!(f, "{var}^{exp}")?,
        }
    }
    Ok(())
}

impl fmt::Display for QtPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let latex = f.alternate();
        for (i, (&(q, t), &c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
                write_monomial(f, q, t, c.abs(), latex)?;
            } else {
                write_monomial(f, q, t, c, latex)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_drops_zero_terms() {
        let mut p = QtPolynomial::monomial(1, 0, 1);
        p.add_term(1, 0, -1);
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn term_order_is_lexicographic() {
        let mut p = QtPolynomial::zero();
        p.add_term(1, 0, 1);
        p.add_term(0, 1, 1);
        p.add_term(0, 0, 1);
        let order: Vec<_> = p.terms().collect();
        assert_eq!(order, vec![(0, 0, 1), (0, 1, 1), (1, 0, 1)]);
        assert_eq!(p.to_string(), "1 + t + q");
    }

    #[test]
    fn symmetry_check() {
        let mut p = QtPolynomial::zero();
        p.add_term(1, 0, 1);
        p.add_term(0, 1, 1);
        assert!(p.is_qt_symmetric());
        p.add_term(2, 1, 3);
        assert!(!p.is_qt_symmetric());
    }

    #[test]
    fn display_formats() {
        let mut p = QtPolynomial::zero();
        p.add_term(2, 3, 2);
        p.add_term(1, 0, -1);
        assert_eq!(p.to_string(), "-q + 2q^2t^3");
        assert_eq!(format!("{p:#}"), "-q + 2q^{2}t^{3}");
    }
}
