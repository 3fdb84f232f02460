//! The fraction field of Z[q,t]: exact rational functions used as scalars by
//! the oracle.
//!
//! Denominators are kept as a product of primitive polynomial factors with a
//! positive integer constant. Every denominator the oracle creates is built
//! from such factors (pairing weights, hook binomials, inverted norms), so
//! cancellation reduces to exact trial division and no polynomial gcds are
//! needed during arithmetic. Trial division is complete whenever a value is
//! actually a polynomial, which is exactly when completeness matters;
//! equality is decided by cross-multiplication either way.

use super::poly::ZPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A positive constant times a product of primitive, positive-lead,
/// non-constant polynomial factors with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Factors {
    constant: BigInt,
    factors: BTreeMap<ZPoly, u32>,
}

impl Factors {
    fn one() -> Self {
        Factors { constant: BigInt::one(), factors: BTreeMap::new() }
    }

    fn is_one(&self) -> bool {
        self.constant.is_one() && self.factors.is_empty()
    }

    fn expand(&self) -> ZPoly {
        let mut out = ZPoly::monomial(0, 0, self.constant.clone());
        for (f, &m) in &self.factors {
            for _ in 0..m {
                out = out.mul(f);
            }
        }
        out
    }

    fn mul(&self, other: &Factors) -> Factors {
        let mut out = self.clone();
        out.constant *= &other.constant;
        for (f, &m) in &other.factors {
            *out.factors.entry(f.clone()).or_insert(0) += m;
        }
        out
    }

    /// Pointwise maximum of multiplicities and lcm of the constants.
    fn lcm(&self, other: &Factors) -> Factors {
        let mut out = self.clone();
        out.constant = out.constant.lcm(&other.constant);
        for (f, &m) in &other.factors {
            let slot = out.factors.entry(f.clone()).or_insert(0);
            *slot = (*slot).max(m);
        }
        out
    }

    /// The complement self / other, assuming other divides self factorwise
    /// (true when other came out of an lcm with self).
    fn complement(&self, other: &Factors) -> Factors {
        let mut out = self.clone();
        let (quot, rem) = out.constant.div_rem(&other.constant);
        debug_assert!(rem.is_zero());
        out.constant = quot;
        for (f, &m) in &other.factors {
            let slot = out.factors.get_mut(f).expect("factorwise divisor");
            debug_assert!(*slot >= m);
            *slot -= m;
            if *slot == 0 {
                out.factors.remove(f);
            }
        }
        out
    }

    /// Inserts one factor of an arbitrary nonzero polynomial, splitting off
    /// its sign and content; returns the sign to be absorbed elsewhere.
    ///
    /// The polynomial is split into monomial and binomial factors
    /// (q^a t^b +- 1) by trial division first. Those are the primes all the
    /// denominators in this crate are built from, so keeping them separate
    /// makes later cancellation essentially complete.
    fn push_poly(&mut self, p: &ZPoly) -> bool {
        debug_assert!(!p.is_zero());
        let negative = p.is_negative_lead();
        let mut rest = p.primitive_part();
        let mut content = p.content();
        if content.is_negative() {
            content = -content;
        }
        self.constant *= content;
        for (var_q, var_t) in [(1u32, 0u32), (0, 1)] {
            let var = ZPoly::monomial(var_q, var_t, BigInt::one());
            while let Some(q) = rest.try_div_exact(&var) {
                *self.factors.entry(var.clone()).or_insert(0) += 1;
                rest = q;
            }
        }
        'outer: while !rest.is_one() {
            for a in 0..=rest.deg_q() {
                for b in 0..=rest.deg_t() {
                    if a == 0 && b == 0 {
                        continue;
                    }
                    for sign in [-1i64, 1] {
                        // Canonical positive-lead binomial q^a t^b + sign.
                        let mut candidate = ZPoly::monomial(a, b, BigInt::one());
                        candidate.add_term(0, 0, &BigInt::from(sign));
                        if let Some(q) = rest.try_div_exact(&candidate) {
                            *self.factors.entry(candidate).or_insert(0) += 1;
                            rest = q.primitive_part();
                            continue 'outer;
                        }
                    }
                }
            }
            break;
        }
        if !rest.is_one() {
            *self.factors.entry(rest).or_insert(0) += 1;
        }
        negative
    }
}

#[derive(Debug, Clone)]
pub struct QtRational {
    num: ZPoly,
    den: Factors,
}

impl QtRational {
    pub fn new(num: ZPoly, den: ZPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut factors = Factors::one();
        let negative = factors.push_poly(&den);
        let num = if negative { num.neg() } else { num };
        let mut r = QtRational { num, den: factors };
        r.reduce();
        r
    }

    pub fn zero() -> Self {
        QtRational { num: ZPoly::zero(), den: Factors::one() }
    }

    pub fn one() -> Self {
        QtRational { num: ZPoly::one(), den: Factors::one() }
    }

    pub fn from_int(c: i64) -> Self {
        QtRational { num: ZPoly::constant(c), den: Factors::one() }
    }

    pub fn from_poly(p: ZPoly) -> Self {
        QtRational { num: p, den: Factors::one() }
    }

    pub fn numerator(&self) -> &ZPoly {
        &self.num
    }

    /// The denominator as an expanded polynomial.
    pub fn denominator(&self) -> ZPoly {
        self.den.expand()
    }

    /// Cancels denominator factors that divide the numerator exactly, then
    /// the integer content.
    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Factors::one();
            return;
        }
        let factors: Vec<(ZPoly, u32)> =
            self.den.factors.iter().map(|(f, &m)| (f.clone(), m)).collect();
        for (f, mult) in factors {
            let mut remaining = mult;
            while remaining > 0 {
                match self.num.try_div_exact(&f) {
                    Some(q) => {
                        self.num = q;
                        remaining -= 1;
                    }
                    None => break,
                }
            }
            if remaining == 0 {
                self.den.factors.remove(&f);
            } else if remaining < mult {
                self.den.factors.insert(f, remaining);
            }
        }
        if !self.den.constant.is_one() {
            let g = self.num.content().gcd(&self.den.constant);
            if !g.is_one() {
                let g_poly = ZPoly::monomial(0, 0, g.clone());
                self.num = self.num.div_exact(&g_poly);
                self.den.constant /= g;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        if self.den.is_one() {
            self.num.is_one()
        } else {
            self.num == self.den.expand()
        }
    }

    pub fn add(&self, other: &QtRational) -> QtRational {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let mut r = QtRational { num: self.num.add(&other.num), den: self.den.clone() };
            r.reduce();
            return r;
        }
        let den = self.den.lcm(&other.den);
        let left = self.num.mul(&den.complement(&self.den).expand());
        let right = other.num.mul(&den.complement(&other.den).expand());
        let mut r = QtRational { num: left.add(&right), den };
        r.reduce();
        r
    }

    pub fn sub(&self, other: &QtRational) -> QtRational {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QtRational {
        QtRational { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &QtRational) -> QtRational {
        if self.is_zero() || other.is_zero() {
            return QtRational::zero();
        }
        let mut r = QtRational {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        };
        r.reduce();
        r
    }

    pub fn mul_poly(&self, p: &ZPoly) -> QtRational {
        if self.is_zero() || p.is_zero() {
            return QtRational::zero();
        }
        let mut r = QtRational { num: self.num.mul(p), den: self.den.clone() };
        r.reduce();
        r
    }

    pub fn mul_int(&self, c: i64) -> QtRational {
        self.mul_poly(&ZPoly::constant(c))
    }

    /// Multiplicative inverse; `None` for zero. The old numerator becomes a
    /// single (possibly composite) denominator factor.
    pub fn inv(&self) -> Option<QtRational> {
        if self.is_zero() {
            return None;
        }
        let mut den = Factors::one();
        let negative = den.push_poly(&self.num);
        let expanded = self.den.expand();
        let num = if negative { expanded.neg() } else { expanded };
        let mut r = QtRational { num, den };
        r.reduce();
        Some(r)
    }

    pub fn div(&self, other: &QtRational) -> Option<QtRational> {
        other.inv().map(|i| self.mul(&i))
    }

    /// The underlying polynomial when the denominator fully cancels.
    pub fn as_polynomial(&self) -> Option<&ZPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Substitutes t -> 1/t, returning a rational function again.
    pub fn subst_t_inv(&self) -> QtRational {
        if self.is_zero() {
            return QtRational::zero();
        }
        let mut num = self.num.reverse_t();
        let mut den = Factors { constant: self.den.constant.clone(), factors: BTreeMap::new() };
        let mut den_t_power: u32 = 0;
        let mut flip = false;
        for (f, &m) in &self.den.factors {
            den_t_power += f.deg_t() * m;
            let rev = f.reverse_t();
            for _ in 0..m {
                flip ^= den.push_poly(&rev);
            }
        }
        if flip {
            num = num.neg();
        }
        let num_t_power = self.num.deg_t();
        if den_t_power >= num_t_power {
            num = num.mul(&ZPoly::monomial(0, den_t_power - num_t_power, BigInt::one()));
        } else {
            let t = ZPoly::monomial(0, 1, BigInt::one());
            *den.factors.entry(t).or_insert(0) += num_t_power - den_t_power;
        }
        let mut r = QtRational { num, den };
        r.reduce();
        r
    }

    /// Exchanges q and t.
    pub fn swap_variables(&self) -> QtRational {
        let mut den = Factors { constant: self.den.constant.clone(), factors: BTreeMap::new() };
        let mut flip = false;
        for (f, &m) in &self.den.factors {
            let swapped = f.swap_variables();
            for _ in 0..m {
                flip ^= den.push_poly(&swapped);
            }
        }
        let mut num = self.num.swap_variables();
        if flip {
            num = num.neg();
        }
        QtRational { num, den }
    }
}

impl PartialEq for QtRational {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.mul(&other.den.expand()) == other.num.mul(&self.den.expand())
    }
}

impl Eq for QtRational {}

impl fmt::Display for QtRational {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den.expand())
        }
    }
}
