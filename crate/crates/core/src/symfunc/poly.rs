//! Bivariate polynomials in q and t over the integers, with exact gcd and
//! division. These are the numerators and denominators of the oracle's
//! rational coefficients.
//!
//! The gcd is computed recursively: the polynomial is viewed as univariate in
//! t over Z[q], reduced with a primitive pseudo-remainder sequence, and the
//! univariate gcd over Z[q] bottoms out in integer gcds. Contents are always
//! included, so gcd(2q, 2) = 2.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct ZPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly::default()
    }

    pub fn one() -> Self {
        ZPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        ZPoly::monomial(0, 0, BigInt::from(c))
    }

    pub fn monomial(q_exp: u32, t_exp: u32, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((q_exp, t_exp), coeff);
        }
        ZPoly { terms }
    }

    /// 1 - q^a t^b.
    pub fn one_minus(q_exp: u32, t_exp: u32) -> Self {
        let mut p = ZPoly::one();
        p.add_term(q_exp, t_exp, &BigInt::from(-1));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&(0, 0)))
    }

    pub fn add_term(&mut self, q_exp: u32, t_exp: u32, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((q_exp, t_exp)).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(q_exp, t_exp));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(q, t), c)| (q, t, c))
    }

    pub fn coefficient(&self, q_exp: u32, t_exp: u32) -> BigInt {
        self.terms.get(&(q_exp, t_exp)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn deg_q(&self) -> u32 {
        self.terms.keys().map(|&(q, _)| q).max().unwrap_or(0)
    }

    pub fn deg_t(&self) -> u32 {
        self.terms.keys().map(|&(_, t)| t).max().unwrap_or(0)
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        for (q, t, c) in other.terms() {
            out.add_term(q, t, c);
        }
        out
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly { terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect() }
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        let mut out = ZPoly::zero();
        for (qa, ta, ca) in self.terms() {
            for (qb, tb, cb) in other.terms() {
                out.add_term(qa + qb, ta + tb, &(ca * cb));
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &BigInt) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero();
        }
        ZPoly { terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect() }
    }

    /// Exchanges q and t.
    pub fn swap_variables(&self) -> ZPoly {
        ZPoly { terms: self.terms.iter().map(|(&(q, t), c)| ((t, q), c.clone())).collect() }
    }

    /// p(q, 1/t) t^{deg_t p}: the coefficient list reversed in t.
    pub fn reverse_t(&self) -> ZPoly {
        let d = self.deg_t();
        ZPoly { terms: self.terms.iter().map(|(&(q, t), c)| ((q, d - t), c.clone())).collect() }
    }

    /// Leading coefficient in the (q, t)-lexicographic term order.
    fn lead_coeff(&self) -> BigInt {
        self.terms.values().next_back().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_negative_lead(&self) -> bool {
        self.lead_coeff().is_negative()
    }

    /// gcd of all integer coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact division; panics if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &ZPoly) -> ZPoly {
        self.try_div_exact(divisor).expect("inexact polynomial division")
    }

    /// Quotient when `divisor` divides `self` exactly, `None` otherwise.
    pub fn try_div_exact(&self, divisor: &ZPoly) -> Option<ZPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        if divisor.is_one() {
            return Some(self.clone());
        }
        if divisor.is_constant() {
            let c = divisor.coefficient(0, 0);
            let mut terms = BTreeMap::new();
            for (&k, v) in &self.terms {
                let (quot, rem) = v.div_rem(&c);
                if !rem.is_zero() {
                    return None;
                }
                terms.insert(k, quot);
            }
            return Some(ZPoly { terms });
        }
        if self == divisor {
            return Some(ZPoly::one());
        }
        if self.deg_t() < divisor.deg_t() || self.deg_q() < divisor.deg_q() {
            return None;
        }
        let quotient = tq_try_div_exact(&to_tq(self), &to_tq(divisor))?;
        Some(from_tq(&quotient))
    }

    /// Primitive part: `self` divided by its integer content, with a positive
    /// leading coefficient. Zero stays zero.
    pub fn primitive_part(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut c = self.content();
        if self.is_negative_lead() {
            c = -c;
        }
        self.div_exact(&ZPoly::monomial(0, 0, c))
    }

    /// Full gcd in Z[q,t], content included; zero only if both are zero.
    pub fn gcd(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() {
            return normalize_sign(other.clone());
        }
        if other.is_zero() {
            return normalize_sign(self.clone());
        }
        if self.is_constant() || other.is_constant() {
            return ZPoly::monomial(0, 0, self.content().gcd(&other.content()));
        }
        if self == other {
            return normalize_sign(self.clone());
        }
        let g = tq_gcd(&to_tq(self), &to_tq(other));
        normalize_sign(from_tq(&g))
    }
}

fn normalize_sign(p: ZPoly) -> ZPoly {
    if p.is_negative_lead() {
        p.neg()
    } else {
        p
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&(q, t), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if q == 0 && t == 0 {
                write!(f, "{c}")?;
                continue;
            }
            if c.is_one() {
            } else if (-c).is_one() {
                write!(f, "-")?;
            } else {
                write!(f, "{c}")?;
            }
            if q > 0 {
                write!(f, "q")?;
                if q > 1 {
                    write!(f, "^{q}")?;
                }
            }
            if t > 0 {
                write!(f, "t")?;
                if t > 1 {
                    write!(f, "^{t}")?;
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Recursive representation: univariate in t with coefficients in Z[q].
// A QP is a dense coefficient vector in q; a TQ is a dense vector of QPs.
// ---------------------------------------------------------------------------

type Qp = Vec<BigInt>;
type Tq = Vec<Qp>;

fn qp_trim(p: &mut Qp) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn qp_is_zero(p: &Qp) -> bool {
    p.is_empty()
}

fn qp_neg(p: &Qp) -> Qp {
    p.iter().map(|c| -c).collect()
}

fn qp_sub(a: &Qp, b: &Qp) -> Qp {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    qp_trim(&mut out);
    out
}

fn qp_mul(a: &Qp, b: &Qp) -> Qp {
    if qp_is_zero(a) || qp_is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] += ca * cb;
            }
        }
    }
    qp_trim(&mut out);
    out
}

fn qp_content(p: &Qp) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn qp_scale_down(p: &Qp, d: &BigInt) -> Qp {
    p.iter()
        .map(|c| {
            let (quot, rem) = c.div_rem(d);
            debug_assert!(rem.is_zero());
            quot
        })
        .collect()
}

/// Primitive part; zero maps to zero.
fn qp_primitive(p: &Qp) -> Qp {
    if qp_is_zero(p) {
        return Vec::new();
    }
    let c = qp_content(p);
    qp_scale_down(p, &c)
}

/// Classical pseudo-remainder of a by b: lc(b)^{deg a - deg b + 1} a mod b.
fn qp_prem(a: &Qp, b: &Qp) -> Qp {
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let mut r = a.clone();
    let mut steps = a.len() - b.len() + 1;
    while !qp_is_zero(&r) && r.len() > db {
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        // r <- lb * r - lr * x^{dr-db} * b
        let mut scaled: Qp = r.iter().map(|c| c * &lb).collect();
        for (j, cb) in b.iter().enumerate() {
            scaled[dr - db + j] -= &lr * cb;
        }
        qp_trim(&mut scaled);
        r = scaled;
        steps -= 1;
    }
    // Match the exact power lc(b)^{deg a - deg b + 1}.
    for _ in 0..steps {
        r = r.iter().map(|c| c * &lb).collect();
    }
    r
}

fn qp_scalar(p: &Qp, c: &BigInt) -> Qp {
    p.iter().map(|x| x * c).collect()
}

fn qp_scale_down_int(p: &Qp, d: &BigInt) -> Qp {
    p.iter()
        .map(|c| {
            let (quot, rem) = c.div_rem(d);
            debug_assert!(rem.is_zero());
            quot
        })
        .collect()
}

/// gcd in Z[q] via the subresultant remainder sequence, content included.
fn qp_gcd(a: &Qp, b: &Qp) -> Qp {
    if qp_is_zero(a) {
        return b.clone();
    }
    if qp_is_zero(b) {
        return a.clone();
    }
    let content = qp_content(a).gcd(&qp_content(b));
    let mut r0 = qp_primitive(a);
    let mut r1 = qp_primitive(b);
    if r0.len() < r1.len() {
        std::mem::swap(&mut r0, &mut r1);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    while !qp_is_zero(&r1) {
        let delta = r0.len() - r1.len();
        let rem = qp_prem(&r0, &r1);
        r0 = r1;
        if qp_is_zero(&rem) {
            break;
        }
        let divisor = &g * pow_bigint(&h, delta as u32);
        r1 = qp_scale_down_int(&rem, &divisor);
        g = r0.last().unwrap().clone();
        // h <- g^delta h^{1-delta}, always exact.
        h = if delta == 0 {
            h
        } else {
            let num = pow_bigint(&g, delta as u32);
            let den = pow_bigint(&h, delta as u32 - 1);
            let (quot, check) = num.div_rem(&den);
            debug_assert!(check.is_zero());
            quot
        };
    }
    let mut out = qp_scalar(&qp_primitive(&r0), &content);
    if out.last().is_some_and(|c| c.is_negative()) {
        out = qp_neg(&out);
    }
    out
}

fn pow_bigint(base: &BigInt, exp: u32) -> BigInt {
    let mut out = BigInt::one();
    for _ in 0..exp {
        out *= base;
    }
    out
}

/// Exact division in Z[q]; panics when not exact.
fn qp_div_exact(a: &Qp, b: &Qp) -> Qp {
    qp_try_div_exact(a, b).expect("inexact division in Z[q]")
}

fn qp_try_div_exact(a: &Qp, b: &Qp) -> Option<Qp> {
    assert!(!qp_is_zero(b), "division by zero in Z[q]");
    if qp_is_zero(a) {
        return Some(Vec::new());
    }
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len().saturating_sub(db)];
    while !qp_is_zero(&r) {
        let dr = r.len() - 1;
        if dr < db {
            return None;
        }
        let (c, rem) = r.last().unwrap().div_rem(lb);
        if rem.is_zero() && !c.is_zero() {
            q[dr - db] = c.clone();
            for (j, cb) in b.iter().enumerate() {
                r[dr - db + j] -= &c * cb;
            }
        } else {
            return None;
        }
        qp_trim(&mut r);
    }
    qp_trim(&mut q);
    Some(q)
}

fn to_tq(p: &ZPoly) -> Tq {
    let mut out: Tq = vec![Vec::new(); p.deg_t() as usize + 1];
    for (q, t, c) in p.terms() {
        let row = &mut out[t as usize];
        if row.len() <= q as usize {
            row.resize(q as usize + 1, BigInt::zero());
        }
        row[q as usize] = c.clone();
    }
    for row in &mut out {
        qp_trim(row);
    }
    tq_trim(&mut out);
    out
}

fn from_tq(p: &Tq) -> ZPoly {
    let mut out = ZPoly::zero();
    for (t, row) in p.iter().enumerate() {
        for (q, c) in row.iter().enumerate() {
            out.add_term(q as u32, t as u32, c);
        }
    }
    out
}

fn tq_trim(p: &mut Tq) {
    while p.last().is_some_and(qp_is_zero) {
        p.pop();
    }
}

fn tq_is_zero(p: &Tq) -> bool {
    p.is_empty()
}

/// Content of a TQ as a polynomial in Z[q].
fn tq_content(p: &Tq) -> Qp {
    let mut g: Qp = Vec::new();
    for row in p {
        g = qp_gcd(&g, row);
    }
    g
}

fn tq_primitive(p: &Tq) -> Tq {
    if tq_is_zero(p) {
        return Vec::new();
    }
    let c = tq_content(p);
    p.iter().map(|row| if qp_is_zero(row) { Vec::new() } else { qp_div_exact(row, &c) }).collect()
}

/// Classical pseudo-remainder in (Z[q])[t]:
/// lc(b)^{deg a - deg b + 1} a mod b.
fn tq_prem(a: &Tq, b: &Tq) -> Tq {
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let mut r = a.clone();
    let mut steps = a.len() - b.len() + 1;
    while !tq_is_zero(&r) && r.len() > db {
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        let mut next: Tq = r.iter().map(|row| qp_mul(row, &lb)).collect();
        for (j, cb) in b.iter().enumerate() {
            next[dr - db + j] = qp_sub(&next[dr - db + j], &qp_mul(&lr, cb));
        }
        tq_trim(&mut next);
        r = next;
        steps -= 1;
    }
    for _ in 0..steps {
        r = r.iter().map(|row| qp_mul(row, &lb)).collect();
    }
    r
}

fn qp_pow(base: &Qp, exp: u32) -> Qp {
    let mut out = vec![BigInt::one()];
    for _ in 0..exp {
        out = qp_mul(&out, base);
    }
    out
}

/// gcd in (Z[q])[t] via the subresultant remainder sequence: each
/// pseudo-remainder is exactly divisible by g h^delta, which keeps the
/// coefficients from swelling without any content gcds in the loop.
fn tq_gcd(a: &Tq, b: &Tq) -> Tq {
    if tq_is_zero(a) {
        return b.clone();
    }
    if tq_is_zero(b) {
        return a.clone();
    }
    let content = qp_gcd(&tq_content(a), &tq_content(b));
    let mut r0 = tq_primitive(a);
    let mut r1 = tq_primitive(b);
    if r0.len() < r1.len() {
        std::mem::swap(&mut r0, &mut r1);
    }
    let mut g = vec![BigInt::one()];
    let mut h = vec![BigInt::one()];
    while !tq_is_zero(&r1) {
        let delta = (r0.len() - r1.len()) as u32;
        let rem = tq_prem(&r0, &r1);
        r0 = r1;
        if tq_is_zero(&rem) {
            break;
        }
        let divisor = qp_mul(&g, &qp_pow(&h, delta));
        r1 = rem.iter().map(|row| qp_div_exact(row, &divisor)).collect();
        tq_trim(&mut r1);
        g = r0.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            qp_div_exact(&qp_pow(&g, delta), &qp_pow(&h, delta - 1))
        };
    }
    tq_primitive(&r0).iter().map(|row| qp_mul(row, &content)).collect()
}

/// Exact division in (Z[q])[t]; `None` when not exact.
fn tq_try_div_exact(a: &Tq, b: &Tq) -> Option<Tq> {
    assert!(!tq_is_zero(b), "division by zero polynomial");
    if tq_is_zero(a) {
        return Some(Vec::new());
    }
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut q: Tq = vec![Vec::new(); a.len().saturating_sub(db)];
    while !tq_is_zero(&r) {
        let dr = r.len() - 1;
        if dr < db {
            return None;
        }
        let c = qp_try_div_exact(r.last().unwrap(), lb)?;
        q[dr - db] = c.clone();
        for (j, cb) in b.iter().enumerate() {
            r[dr - db + j] = qp_sub(&r[dr - db + j], &qp_mul(&c, cb));
        }
        tq_trim(&mut r);
    }
    Some(q)
}
