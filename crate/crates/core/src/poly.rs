//! Sparse multivariate polynomials in canonical form.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::{same_ring, Ring};
use crate::scalar::{Coeff, Field};

pub type Term = (Monomial, Coeff);

/// A polynomial whose terms are stored sorted descending under the ring's
/// monomial order, with no zero coefficients. The zero polynomial has no
/// terms, so structural equality is mathematical equality.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Coeff) -> Polynomial {
        Polynomial::monomial(ring, Monomial::ONE, c)
    }

    pub fn from_int(ring: &Arc<Ring>, c: i64) -> Polynomial {
        Polynomial::constant(ring, ring.field().from_i64(c))
    }

    pub fn one(ring: &Arc<Ring>) -> Polynomial {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn var(ring: &Arc<Ring>, index: usize) -> Polynomial {
        assert!(index < ring.nvars(), "variable index out of range");
        Polynomial::monomial(ring, Monomial::var(index, 1), ring.field().one())
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: Coeff) -> Polynomial {
        let terms = if ring.field().is_zero(&c) {
            Vec::new()
        } else {
            alloc::vec![(m, c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and
    /// drops zero coefficients.
    pub fn from_terms(ring: &Arc<Ring>, mut terms: Vec<Term>) -> Polynomial {
        let order = ring.order();
        let field = ring.field();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !field.is_zero(c));
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Wraps terms that are already canonical.
    pub(crate) fn from_sorted_terms(ring: &Arc<Ring>, terms: Vec<Term>) -> Polynomial {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant, i.e. a unit of the polynomial ring.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.field().is_one(&self.terms[0].1)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    /// Bitmask of variables that occur.
    pub fn support(&self) -> u32 {
        self.terms.iter().fold(0, |acc, (m, _)| acc | m.support())
    }

    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        let order = self.ring.order();
        match self.terms.binary_search_by(|(t, _)| order.cmp(m, t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.field().zero(),
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, None))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let minus = self.field().neg(&self.field().one());
        Ok(self.merge(other, Some((&Monomial::ONE, &minus))))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.mul_impl(other))
    }

    /// `self + c * m * other` computed in one merge pass.
    pub(crate) fn merge(&self, other: &Polynomial, factor: Option<(&Monomial, &Coeff)>) -> Polynomial {
        let field = self.field();
        let order = self.ring.order();
        let scaled = |t: &Term| -> Term {
            match factor {
                None => t.clone(),
                Some((m, c)) => (t.0.mul(m), field.mul(&t.1, c)),
            }
        };
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let b = scaled(&other.terms[j]);
            match order.cmp(&self.terms[i].0, &b.0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(&self.terms[i].1, &b.1);
                    if !field.is_zero(&c) {
                        out.push((b.0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(scaled));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn mul_impl(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &small.terms {
            acc = acc.merge(large, Some((m, c)));
        }
        acc
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        let field = self.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (*m, field.mul(a, c)))
                .collect(),
        }
    }

    /// Multiplication by the term `c * m`; order is preserved because
    /// monomial orders are multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        let field = self.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), field.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        self.mul_term(m, &self.field().one())
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul_impl(self);
        }
        acc
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if self.field().is_one(lc) => self.clone(),
            Some(lc) => {
                let inv = self.field().inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Homogeneous component of the given degree.
    pub fn component(&self, degree: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .cloned()
                .collect(),
        }
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// variable `map[i]` of the target ring.
    pub fn map_vars(&self, target: &Arc<Ring>, map: &[usize]) -> Result<Polynomial> {
        if target.field() != self.field() {
            return Err(Error::RingMismatch);
        }
        if map.len() != self.ring.nvars() || map.iter().any(|&i| i >= target.nvars()) {
            return Err(Error::invalid("variable map does not fit the target ring"));
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out = Monomial::ONE;
                for (i, &j) in map.iter().enumerate() {
                    out.set_exp(j, out.exp(j) + m.exp(i));
                }
                (out, c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Same variables, possibly a different order: only the sort changes.
    pub fn to_ring(&self, target: &Arc<Ring>) -> Result<Polynomial> {
        if target.names() != self.ring.names() || target.field() != self.field() {
            return Err(Error::RingMismatch);
        }
        if same_ring(target, &self.ring) {
            return Ok(self.clone());
        }
        let mut terms = self.terms.clone();
        let order = target.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Ok(Polynomial {
            ring: target.clone(),
            terms,
        })
    }

    /// Homogenization into `target`, which has one more variable than the
    /// current ring; the extra variable sits at `hom_var`.
    pub fn homogenize(&self, target: &Arc<Ring>, hom_var: usize) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if target.nvars() != n + 1 || hom_var > n {
            return Err(Error::invalid("homogenization target must add exactly one variable"));
        }
        let deg = self.degree().ok_or(Error::ZeroPolynomial)?;
        let map: Vec<usize> = (0..n).map(|i| if i < hom_var { i } else { i + 1 }).collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out = Monomial::ONE;
                for (i, &j) in map.iter().enumerate() {
                    out.set_exp(j, m.exp(i));
                }
                out.set_exp(hom_var, deg - m.degree());
                (out, c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Sets variable `hom_var` to one and drops it, landing in `target`.
    pub fn affinize(&self, target: &Arc<Ring>, hom_var: usize) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if target.nvars() + 1 != n || hom_var >= n {
            return Err(Error::invalid("affinization target must drop exactly one variable"));
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out = Monomial::ONE;
                for i in (0..n).filter(|&i| i != hom_var) {
                    let j = if i < hom_var { i } else { i - 1 };
                    out.set_exp(j, m.exp(i));
                }
                (out, c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Substitutes `var := 1` while staying in the same ring.
    pub fn dehomogenize(&self, var: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out = *m;
                out.set_exp(var, 0);
                (out, c.clone())
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Homogenizes with respect to `var` inside the same ring; assumes `var`
    /// does not occur.
    pub fn rehomogenize(&self, var: usize) -> Polynomial {
        let Some(deg) = self.degree() else {
            return self.clone();
        };
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out = *m;
                out.set_exp(var, m.exp(var) + deg - m.degree());
                (out, c.clone())
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Removes the largest power of variable `var` dividing every term.
    pub fn strip_var(&self, var: usize) -> (Polynomial, u32) {
        let Some(e) = self.terms.iter().map(|(m, _)| m.exp(var)).min() else {
            return (self.clone(), 0);
        };
        if e == 0 {
            return (self.clone(), 0);
        }
        let d = Monomial::var(var, e);
        let p = Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.div(&d), c.clone())).collect(),
        };
        (p, e)
    }

    /// Division with remainder by a single polynomial (leading-term division
    /// under the ring order). Returns `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check_ring(divisor)?;
        let (lm, lc) = divisor
            .terms
            .first()
            .map(|(m, c)| (*m, c.clone()))
            .ok_or(Error::ZeroPolynomial)?;
        let field = self.field();
        let lc_inv = field.inv(&lc).expect("nonzero");
        let mut quotient = Vec::new();
        let mut remainder = Vec::new();
        let mut p = self.clone();
        while let Some((m, c)) = p.terms.first().cloned() {
            if lm.divides(&m) {
                let q = m.div(&lm);
                let qc = field.mul(&c, &lc_inv);
                quotient.push((q, qc.clone()));
                p = p.merge(divisor, Some((&q, &field.neg(&qc))));
            } else {
                remainder.push((m, c));
                p.terms.remove(0);
            }
        }
        Ok((
            Polynomial::from_terms(&self.ring, quotient),
            Polynomial::from_terms(&self.ring, remainder),
        ))
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn divide_exact(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(if r.is_zero() { Some(q) } else { None })
    }

    /// Strips the largest power of `f` dividing `self`; returns the cofactor
    /// and the exponent.
    pub fn strip_factor(&self, f: &Polynomial) -> Result<(Polynomial, u32)> {
        if f.is_unit() || f.is_zero() || self.is_zero() {
            return Ok((self.clone(), 0));
        }
        let mut p = self.clone();
        let mut e = 0;
        while let Some(q) = p.divide_exact(f)? {
            p = q;
            e += 1;
        }
        Ok((p, e))
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    /// Panics on a ring mismatch; use `checked_add` for fallible callers.
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, field.neg(c))).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::MonomialOrder;

    fn ring(names: &[&str], field: Field) -> Arc<Ring> {
        Ring::new(names, field, MonomialOrder::GRevLex).unwrap()
    }

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn addition_cancels() {
        let r = ring(&["x0", "x1"], Field::Rational);
        assert_eq!(&p(&r, "x0 + x1") + &p(&r, "x0 - x1"), p(&r, "2*x0"));
        let f = p(&r, "x0^2 - 3*x1 + 1/2");
        assert_eq!(&f + &Polynomial::zero(&r), f);
        assert!((&f + &(-&f)).is_zero());
    }

    #[test]
    fn addition_mod_five() {
        let r = ring(&["x0"], Field::prime(5).unwrap());
        assert!((&p(&r, "3*x0") + &p(&r, "2*x0")).is_zero());
    }

    #[test]
    fn products() {
        let r = ring(&["x0", "x1"], Field::Rational);
        assert_eq!(&p(&r, "x0 + x1") * &p(&r, "x0 - x1"), p(&r, "x0^2 - x1^2"));
        let f = p(&r, "x0*x1 - 7");
        assert_eq!(&f * &Polynomial::one(&r), f);
        assert_eq!(&p(&r, "x0^2*x1") * &p(&r, "x1^2"), p(&r, "x0^2*x1^3"));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = ring(&["x"], Field::Rational);
        let b = ring(&["y"], Field::Rational);
        assert_eq!(
            Polynomial::var(&a, 0).checked_add(&Polynomial::var(&b, 0)),
            Err(Error::RingMismatch)
        );
    }

    #[test]
    fn homogenize_examples() {
        let aff = ring(&["x1", "x2"], Field::Rational);
        let proj = ring(&["x0", "x1", "x2"], Field::Rational);
        let g = p(&aff, "x1^2 + x2");
        assert_eq!(g.homogenize(&proj, 0).unwrap(), p(&proj, "x1^2 + x0*x2"));
        let g = p(&aff, "x1*x2");
        assert_eq!(g.homogenize(&proj, 0).unwrap(), p(&proj, "x1*x2"));
        let g = p(&aff, "x1^3 + x1 + 1");
        assert_eq!(
            g.homogenize(&proj, 0).unwrap(),
            p(&proj, "x1^3 + x0^2*x1 + x0^3")
        );
        assert_eq!(
            Polynomial::zero(&aff).homogenize(&proj, 0),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn affinize_examples() {
        let aff = ring(&["x1", "x2"], Field::Rational);
        let proj = ring(&["x0", "x1", "x2"], Field::Rational);
        let f = p(&proj, "x1^2 + x0*x2");
        assert_eq!(f.affinize(&aff, 0).unwrap(), p(&aff, "x1^2 + x2"));
        assert_eq!(p(&proj, "x0^3").affinize(&aff, 0).unwrap(), Polynomial::one(&aff));
        assert_eq!(f.affinize(&aff, 0).unwrap().homogenize(&proj, 0).unwrap(), f);
    }

    #[test]
    fn exact_division() {
        let r = ring(&["x", "y"], Field::Rational);
        let f = p(&r, "x^2 - y^2");
        assert_eq!(f.divide_exact(&p(&r, "x - y")).unwrap(), Some(p(&r, "x + y")));
        assert_eq!(f.divide_exact(&p(&r, "x")).unwrap(), None);
        let (q, e) = p(&r, "x^3*y - x^2*y^2").strip_factor(&p(&r, "x")).unwrap();
        assert_eq!((q, e), (p(&r, "x*y - y^2"), 2));
    }
}
