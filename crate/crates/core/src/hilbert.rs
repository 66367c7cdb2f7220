//! Hilbert functions, series and polynomials of homogeneous ideals.
//!
//! The series numerator comes from the leading monomials of a graded
//! Gröbner basis (the quotient by the initial ideal has the same Hilbert
//! function) via the pivot recursion
//! `N(I) = N(I + (p)) + t^deg(p) N(I : p)` with `p` a power of a variable
//! shared by several generators. An independent rank computation over the
//! coefficient field serves as oracle.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg;
use crate::macaulay::binomial;
use crate::monomial::Monomial;
use crate::random::monomials_of_degree;

/// `N(t) / (1 - t)^nvars`, numerator coefficients listed from `t^0` up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: Vec<BigInt>,
    pub nvars: usize,
}

impl HilbertSeries {
    /// Coefficient of `t^m`; zero for negative `m`.
    pub fn value(&self, m: i64) -> BigInt {
        let n = self.nvars as i64;
        self.numerator
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| c * binomial(m - j as i64 + n - 1, n - 1))
            .sum()
    }

    pub fn values(&self, upto: u64) -> Vec<BigInt> {
        (0..=upto as i64).map(|m| self.value(m)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.iter().all(|c| c.is_zero())
    }

    /// Cancels `(1 - t)` factors: returns the reduced numerator and the
    /// remaining pole order (the Krull dimension of the quotient). `None` for
    /// the zero series.
    pub fn reduced(&self) -> Option<(Vec<BigInt>, usize)> {
        if self.is_zero() {
            return None;
        }
        let mut num = trim(self.numerator.clone());
        let mut pole = self.nvars;
        while pole > 0 && num.iter().sum::<BigInt>().is_zero() {
            // N = (1 - t) Q with Q_j = N_0 + ... + N_j
            let mut q = Vec::with_capacity(num.len() - 1);
            let mut acc = BigInt::zero();
            for c in &num[..num.len() - 1] {
                acc += c;
                q.push(acc.clone());
            }
            num = trim(q);
            pole -= 1;
        }
        Some((num, pole))
    }
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_add(a: &mut Vec<BigInt>, b: &[BigInt], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (j, c) in b.iter().enumerate() {
        a[j + shift] += c;
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), *m));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^nvars` of
/// `k[x] / (gens)` for monomial generators.
pub fn monomial_hilbert_numerator(gens: &[Monomial]) -> Vec<BigInt> {
    let mut memo = BTreeMap::new();
    trim(numerator_rec(minimalize(gens.to_vec()), &mut memo))
}

fn numerator_rec(gens: Vec<Monomial>, memo: &mut BTreeMap<Vec<Monomial>, Vec<BigInt>>) -> Vec<BigInt> {
    if gens.is_empty() {
        return alloc::vec![BigInt::one()];
    }
    if gens.iter().any(|m| m.is_one()) {
        return alloc::vec![BigInt::zero()];
    }
    if let Some(v) = memo.get(&gens) {
        return v.clone();
    }
    // pick the variable occurring in the most generators
    let mut best = (0usize, 0usize);
    for v in 0..crate::monomial::MAX_VARS {
        let count = gens.iter().filter(|m| m.exp(v) > 0).count();
        if count > best.1 {
            best = (v, count);
        }
    }
    let result = if best.1 < 2 {
        // pairwise coprime: product of (1 - t^deg g)
        let mut acc = alloc::vec![BigInt::one()];
        for g in &gens {
            let mut next = acc.clone();
            let shifted: Vec<BigInt> = acc.iter().map(|c| -c).collect();
            poly_add(&mut next, &shifted, g.degree() as usize);
            acc = next;
        }
        acc
    } else {
        let v = best.0;
        let e = gens.iter().filter(|m| m.exp(v) > 0).map(|m| m.exp(v)).min().expect("shared");
        let p = Monomial::var(v, e);
        let mut plus = gens.clone();
        plus.push(p);
        let colon: Vec<Monomial> = gens.iter().map(|m| m.colon(&p)).collect();
        let mut n = numerator_rec(minimalize(plus), memo);
        let c = numerator_rec(minimalize(colon), memo);
        poly_add(&mut n, &c, e as usize);
        trim(n)
    };
    memo.insert(gens, result.clone());
    result
}

fn require_homogeneous(ideal: &Ideal) -> Result<()> {
    if ideal.is_homogeneous() {
        Ok(())
    } else {
        Err(Error::NotHomogeneous)
    }
}

/// Hilbert series of `k[x] / I` for homogeneous `I`.
pub fn hilbert_series(ideal: &Ideal) -> Result<HilbertSeries> {
    require_homogeneous(ideal)?;
    let nvars = ideal.ring().nvars();
    let lms = ideal.graded_basis().leading_monomials();
    Ok(HilbertSeries {
        numerator: monomial_hilbert_numerator(&lms),
        nvars,
    })
}

/// `h_I(m)`; zero for `m < 0`.
pub fn hilbert_function(ideal: &Ideal, m: i64) -> Result<BigInt> {
    Ok(hilbert_series(ideal)?.value(m))
}

/// `h_I(0), ..., h_I(upto)`.
pub fn hilbert_values(ideal: &Ideal, upto: u64) -> Result<Vec<BigInt>> {
    Ok(hilbert_series(ideal)?.values(upto))
}

/// `h_I(m)` as `C(m+n, n)` minus the rank of the products `x^a g` of
/// degree `m`, without any Gröbner basis.
pub fn hilbert_brute_force(ideal: &Ideal, m: u32) -> Result<BigInt> {
    require_homogeneous(ideal)?;
    let ring = ideal.ring();
    let field = ring.field();
    let n = ring.nvars();
    let columns = monomials_of_degree(n, m);
    let index: BTreeMap<Monomial, usize> = columns.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let mut rows = Vec::new();
    for g in ideal.generators() {
        let dg = g.degree().expect("nonzero generator");
        if dg > m {
            continue;
        }
        for a in monomials_of_degree(n, m - dg) {
            let mut row = alloc::vec![field.zero(); columns.len()];
            for (t, c) in g.terms() {
                row[index[&t.mul(&a)]] = c.clone();
            }
            rows.push(row);
        }
    }
    let rank = linalg::rank(field, &rows, columns.len());
    Ok(BigInt::from(columns.len()) - BigInt::from(rank))
}

/// Everything the Hilbert function says about a proper homogeneous ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    pub series: HilbertSeries,
    pub reduced_numerator: Vec<BigInt>,
    /// Krull dimension of the quotient.
    pub pole_order: usize,
    /// Coefficients of `p_I(m)` from `m^0` up; empty for dimension `-1`.
    pub hilbert_polynomial: Vec<BigRational>,
    pub projective_dimension: i64,
    /// `d! * leading coefficient`, or the length for dimension `-1`.
    pub degree: u64,
    /// Smallest `m >= 0` with `h_I(m') = p_I(m')` for every `m' >= m`.
    pub regularity_onset: u64,
}

impl HilbertData {
    pub fn value(&self, m: i64) -> BigInt {
        self.series.value(m)
    }

    pub fn polynomial_value(&self, m: i64) -> BigRational {
        eval(&self.hilbert_polynomial, m)
    }
}

fn eval(poly: &[BigRational], m: i64) -> BigRational {
    let x = BigRational::from_integer(BigInt::from(m));
    poly.iter().rev().fold(BigRational::zero(), |acc, c| acc * &x + c)
}

/// Newton interpolation through `(m0 + r, values[r])`, as coefficients in `m`.
fn interpolate(m0: i64, values: &[BigInt]) -> Vec<BigRational> {
    let mut diffs: Vec<BigInt> = values.to_vec();
    let mut leading = Vec::with_capacity(values.len());
    for _ in 0..values.len() {
        leading.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let mut result: Vec<BigRational> = Vec::new();
    // basis polynomial C(m - m0, r) built incrementally
    let mut basis: Vec<BigRational> = alloc::vec![BigRational::one()];
    for (r, delta) in leading.iter().enumerate() {
        if result.len() < basis.len() {
            result.resize(basis.len(), BigRational::zero());
        }
        for (k, b) in basis.iter().enumerate() {
            result[k] += b * BigRational::from_integer(delta.clone());
        }
        // basis *= (m - m0 - r) / (r + 1)
        let shift = BigRational::from_integer(BigInt::from(-(m0 + r as i64)));
        let scale = BigRational::new(BigInt::one(), BigInt::from(r as i64 + 1));
        let mut next = alloc::vec![BigRational::zero(); basis.len() + 1];
        for (k, b) in basis.iter().enumerate() {
            next[k + 1] += b * &scale;
            next[k] += b * &shift * &scale;
        }
        basis = next;
    }
    while result.last().is_some_and(|c| c.is_zero()) {
        result.pop();
    }
    result
}

/// Dimension, degree, Hilbert polynomial and regularity onset. The unit
/// ideal has none of these and yields [`Error::UnitIdeal`].
pub fn hilbert_data(ideal: &Ideal) -> Result<HilbertData> {
    let series = hilbert_series(ideal)?;
    let (reduced, pole) = series.reduced().ok_or(Error::UnitIdeal)?;
    let dim = pole as i64 - 1;
    let deg_n = reduced.len() as i64 - 1;
    let m0 = (deg_n - pole as i64 + 1).max(0);
    let count = (dim + 1) as usize;
    let samples: Vec<BigInt> = (0..count as i64).map(|r| series.value(m0 + r)).collect();
    let poly = interpolate(m0, &samples);
    for m in m0 + count as i64..m0 + count as i64 + 10 {
        assert_eq!(
            eval(&poly, m),
            BigRational::from_integer(series.value(m)),
            "Hilbert polynomial failed verification"
        );
    }
    let mut onset = m0;
    while onset > 0 && eval(&poly, onset - 1) == BigRational::from_integer(series.value(onset - 1)) {
        onset -= 1;
    }
    let degree_big: BigInt = reduced.iter().sum();
    if dim >= 0 {
        let mut fact = BigInt::one();
        for k in 1..=dim {
            fact *= k;
        }
        let lead = poly.last().cloned().unwrap_or_else(BigRational::zero);
        debug_assert_eq!(lead * BigRational::from_integer(fact), BigRational::from_integer(degree_big.clone()));
    }
    debug_assert!(degree_big.is_positive());
    Ok(HilbertData {
        series,
        reduced_numerator: reduced,
        pole_order: pole,
        hilbert_polynomial: poly,
        projective_dimension: dim,
        degree: degree_big.to_u64().expect("degree fits in 64 bits"),
        regularity_onset: onset as u64,
    })
}

/// Projective dimension (Krull dimension minus one), `-1` for ideals whose
/// quotient has finite length.
pub fn dimension(ideal: &Ideal) -> Result<i64> {
    Ok(hilbert_data(ideal)?.projective_dimension)
}

pub fn degree(ideal: &Ideal) -> Result<u64> {
    Ok(hilbert_data(ideal)?.degree)
}

/// Degree with the convention that the unit ideal has degree zero.
pub fn degree_or_zero(ideal: &Ideal) -> Result<u64> {
    match degree(ideal) {
        Err(Error::UnitIdeal) => Ok(0),
        other => other,
    }
}

/// Checks `h_{I∩J} = h_I + h_J - h_{I+J}` for `0 <= m <= cap`; returns the
/// first failing `m`.
pub fn exact_sequence_check(i: &Ideal, j: &Ideal, cap: u64) -> Result<Option<u64>> {
    let si = hilbert_series(i)?;
    let sj = hilbert_series(j)?;
    let sum = hilbert_series(&i.sum(j)?)?;
    let inter = hilbert_series(&i.intersection(j)?)?;
    for m in 0..=cap as i64 {
        if inter.value(m) != si.value(m) + sj.value(m) - sum.value(m) {
            return Ok(Some(m as u64));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::{MonomialOrder, Ring};
    use crate::scalar::Field;
    use alloc::sync::Arc;
    use alloc::vec;

    fn ring(n: usize, field: Field) -> Arc<Ring> {
        Ring::standard("x", n, 0, field).unwrap()
    }

    fn ideal(r: &Arc<Ring>, src: &[&str]) -> Ideal {
        Ideal::new(r, src.iter().map(|s| parse_polynomial(r, s).unwrap()).collect()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn monomial_numerators() {
        assert_eq!(monomial_hilbert_numerator(&[]), ints(&[1]));
        let m = Monomial::from_exponents(&[2, 1]);
        assert_eq!(monomial_hilbert_numerator(&[m]), ints(&[1, 0, 0, -1]));
        let a = Monomial::from_exponents(&[1, 1, 0]);
        let b = Monomial::from_exponents(&[0, 1, 1]);
        assert_eq!(monomial_hilbert_numerator(&[a, b]), ints(&[1, 0, -2, 1]));
    }

    #[test]
    fn zero_and_principal_ideals() {
        let r = ring(3, Field::Rational);
        let z = Ideal::zero(&r);
        for m in 0..8 {
            assert_eq!(hilbert_function(&z, m).unwrap(), binomial(m + 2, 2));
        }
        let f = ideal(&r, &["x0^3 + x1*x2^2"]);
        for m in 0..8 {
            assert_eq!(hilbert_function(&f, m).unwrap(), binomial(m + 2, 2) - binomial(m - 1, 2));
        }
        assert_eq!(degree(&f).unwrap(), 3);
        assert_eq!(dimension(&f).unwrap(), 1);
        assert_eq!(degree(&z).unwrap(), 1);
    }

    #[test]
    fn twisted_cubic() {
        let r = ring(4, Field::Rational);
        let i = ideal(&r, &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]);
        let d = hilbert_data(&i).unwrap();
        assert_eq!(d.projective_dimension, 1);
        assert_eq!(d.degree, 3);
        assert_eq!(d.regularity_onset, 0);
        for m in 0..10 {
            assert_eq!(d.value(m), BigInt::from(3 * m + 1));
        }
        assert_eq!(
            d.hilbert_polynomial,
            vec![BigRational::one(), BigRational::from_integer(3.into())]
        );
    }

    #[test]
    fn finite_length_quotients() {
        let r = ring(3, Field::Rational);
        let max = Ideal::irrelevant(&r);
        assert_eq!(dimension(&max).unwrap(), -1);
        assert_eq!(degree(&max).unwrap(), 1);
        let r2 = ring(2, Field::Rational);
        let sq = ideal(&r2, &["x0^2", "x0*x1", "x1^2"]);
        let d = hilbert_data(&sq).unwrap();
        assert_eq!((d.projective_dimension, d.degree, d.regularity_onset), (-1, 3, 2));
        assert!(d.hilbert_polynomial.is_empty());
    }

    #[test]
    fn unit_ideal_is_a_distinct_condition() {
        let r = ring(2, Field::Rational);
        let u = Ideal::unit(&r);
        assert_eq!(dimension(&u), Err(Error::UnitIdeal));
        assert_eq!(degree(&u), Err(Error::UnitIdeal));
        assert_eq!(degree_or_zero(&u), Ok(0));
        assert_eq!(hilbert_function(&u, 0).unwrap(), BigInt::zero());
    }

    #[test]
    fn hyperplane_and_late_onset() {
        let r = ring(3, Field::Rational);
        assert_eq!(dimension(&ideal(&r, &["x0"])).unwrap(), 1);
        let i = ideal(&r, &["x0*x1", "x0*x2^2", "x1^2"]);
        let d = hilbert_data(&i).unwrap();
        for m in d.regularity_onset as i64..d.regularity_onset as i64 + 12 {
            assert_eq!(d.polynomial_value(m), BigRational::from_integer(d.value(m)));
        }
        if d.regularity_onset > 0 {
            let m = d.regularity_onset as i64 - 1;
            assert_ne!(d.polynomial_value(m), BigRational::from_integer(d.value(m)));
        }
    }

    #[test]
    fn brute_force_agrees_on_examples() {
        let r = ring(3, Field::prime(32003).unwrap());
        for i in [
            Ideal::zero(&r),
            ideal(&r, &["x0^2 - x1*x2"]),
            ideal(&r, &["x0*x1", "x1*x2"]),
            ideal(&r, &["x0^2", "x1^3", "x0*x1*x2 - x2^3"]),
        ] {
            let s = hilbert_series(&i).unwrap();
            for m in 0..=8 {
                assert_eq!(s.value(m as i64), hilbert_brute_force(&i, m).unwrap());
            }
        }
    }

    #[test]
    fn exact_sequence_identity() {
        let r = ring(3, Field::Rational);
        let a = ideal(&r, &["x0"]);
        let b = ideal(&r, &["x1"]);
        assert_eq!(exact_sequence_check(&a, &b, 10).unwrap(), None);
        assert_eq!(exact_sequence_check(&a, &a, 10).unwrap(), None);
        let c = ideal(&r, &["x0", "x1^2"]);
        assert_eq!(exact_sequence_check(&a, &c, 10).unwrap(), None);
    }

    #[test]
    fn lex_ring_uses_a_graded_basis() {
        let r = Ring::new(&["a", "b", "c"], Field::Rational, MonomialOrder::Lex).unwrap();
        let i = ideal(&r, &["a*c - b^2", "a^2 - b*c"]);
        let s = hilbert_series(&i).unwrap();
        for m in 0..6 {
            assert_eq!(s.value(m as i64), hilbert_brute_force(&i, m).unwrap());
        }
    }
}
