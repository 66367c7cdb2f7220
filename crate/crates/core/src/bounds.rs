//! Closed-form bounds on Hilbert functions of projective varieties, checks
//! of those bounds against computed Hilbert functions, extremality tests and
//! fixture families with known dimension, degree and component count.
//!
//! Variables are `x0, ..., xn`, so a fixture in `P^n` lives in a ring with
//! `n + 1` variables. `d` is always the projective dimension.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::hilbert::{self, HilbertData};
use crate::macaulay::binomial;
use crate::poly::Polynomial;
use crate::random::{self, RandomPolySpec};
use crate::ring::Ring;
use crate::scalar::Field;

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

/// `C(m+d+1, d+1) - C(m-deg+d+1, d+1)`: the Hilbert function of a degree
/// `deg` hypersurface inside a `(d+1)`-dimensional linear space.
pub fn lower_bound_thm23(m: i64, d: i64, deg: u64) -> BigInt {
    assert!(d >= 0 && deg >= 1, "requires d >= 0 and deg >= 1");
    binomial(m + d + 1, d + 1) - binomial(m - deg as i64 + d + 1, d + 1)
}

/// What is known about `h_I(m)` for a zero-dimensional unmixed ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dim0Bound {
    AtLeast(BigInt),
    Equals(BigInt),
}

pub fn dim0_bounds_lemma26(m: i64, deg: u64) -> Dim0Bound {
    assert!(deg >= 1 && m >= 0, "requires deg >= 1 and m >= 0");
    if m + 2 <= deg as i64 {
        Dim0Bound::AtLeast(BigInt::from(m + 1))
    } else {
        Dim0Bound::Equals(big(deg))
    }
}

/// `deg * m^d + irr * d`.
pub fn upper_bound_thm21(m: i64, d: i64, deg: u64, irr: u64) -> BigInt {
    assert!(d >= 0, "requires d >= 0");
    big(deg) * Pow::pow(BigInt::from(m), d as u32) + big(irr) * BigInt::from(d)
}

/// `C(m+deg+d, d+1) - C(m+d, d+1)`.
pub fn upper_bound_thm22(m: i64, d: i64, deg: u64) -> BigInt {
    assert!(d >= 0 && deg >= 1, "requires d >= 0 and deg >= 1");
    binomial(m + deg as i64 + d, d + 1) - binomial(m + d, d + 1)
}

/// `deg * C(m+d, d)`.
pub fn chardin_bound(m: i64, d: i64, deg: u64) -> BigInt {
    assert!(d >= 0, "requires d >= 0");
    big(deg) * binomial(m + d, d)
}

/// Bound on `h_{(I,f)}(m)` for a nonzerodivisor `f` of degree `deg_f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SectionBound {
    AtMost(BigInt),
    /// `m` is below the first degree from which the bound is stated.
    NotApplicable { threshold: i64 },
}

impl SectionBound {
    pub fn value(&self) -> Option<&BigInt> {
        match self {
            SectionBound::AtMost(v) => Some(v),
            SectionBound::NotApplicable { .. } => None,
        }
    }
}

/// For `d >= 1`: `3 deg_f deg_I C(m+d-1, d-1)` once `m >= 5 d deg_I`.
/// For `d = 0`: `deg_I` for `m >= 1`, and `0` from `m = deg_I + deg_f - 1` on.
pub fn section_bound_thm24(m: i64, d: i64, deg: u64, deg_f: u64) -> Result<SectionBound> {
    if d < 0 {
        return Err(Error::invalid("section bound needs d >= 0"));
    }
    if deg == 0 || deg_f == 0 {
        return Err(Error::invalid("degrees must be positive"));
    }
    if d == 0 {
        if m >= (deg + deg_f) as i64 - 1 {
            return Ok(SectionBound::AtMost(BigInt::zero()));
        }
        if m >= 1 {
            return Ok(SectionBound::AtMost(big(deg)));
        }
        return Ok(SectionBound::NotApplicable { threshold: 1 });
    }
    let threshold = 5 * d * deg as i64;
    if m < threshold {
        return Ok(SectionBound::NotApplicable { threshold });
    }
    Ok(SectionBound::AtMost(big(3 * deg_f * deg) * binomial(m + d - 1, d - 1)))
}

/// Coefficients `0..=upto` of `(1 - t^deg) / (1 - t)^(d+2)`, by repeated
/// prefix sums.
pub fn poincare_lower_series(deg: u64, d: i64, upto: usize) -> Vec<BigInt> {
    assert!(d >= 0 && deg >= 1);
    let mut s = alloc::vec![BigInt::zero(); upto + 1];
    s[0] = BigInt::one();
    if (deg as usize) <= upto {
        s[deg as usize] = -BigInt::one();
    }
    for _ in 0..d + 2 {
        for i in 1..=upto {
            let prev = s[i - 1].clone();
            s[i] += prev;
        }
    }
    s
}

/// Default window `1..=max(12, 5 d deg + 5)`, truncated at `cap`.
pub fn default_m_range(d: i64, deg: u64, cap: i64) -> (i64, i64) {
    let hi = 12.max(5 * d.max(0) * deg as i64 + 5);
    (1, hi.min(cap).max(1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    LowerThm23,
    UpperThm21,
    UpperThm22,
    Chardin,
    SectionThm24,
}

impl BoundKind {
    pub fn name(&self) -> &'static str {
        match self {
            BoundKind::LowerThm23 => "lower_thm23",
            BoundKind::UpperThm21 => "upper_thm21",
            BoundKind::UpperThm22 => "upper_thm22",
            BoundKind::Chardin => "chardin",
            BoundKind::SectionThm24 => "section_thm24",
        }
    }
}

/// Whether the hypotheses of a theorem are known to hold for the input or
/// were only claimed by whoever supplied it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypotheses {
    Certified,
    AssertedByUser,
}

impl Hypotheses {
    pub fn name(&self) -> &'static str {
        match self {
            Hypotheses::Certified => "certified",
            Hypotheses::AssertedByUser => "asserted-by-user",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    ViolatedAt(i64),
    NotApplicable(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRow {
    pub m: i64,
    pub lower: Option<BigInt>,
    pub actual: BigInt,
    pub upper: Option<BigInt>,
}

impl BoundRow {
    fn violated(&self) -> bool {
        self.lower.as_ref().is_some_and(|l| *l > self.actual) || self.upper.as_ref().is_some_and(|u| *u < self.actual)
    }

    fn tight(&self) -> bool {
        self.lower.iter().chain(self.upper.iter()).all(|b| *b == self.actual)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub ideal: String,
    pub m_range: (i64, i64),
    pub dimension: i64,
    pub degree: u64,
    pub rows: Vec<BoundRow>,
    pub verdict: Verdict,
    /// Every row that carries a bound meets it with equality.
    pub extremal: bool,
    pub hypotheses: Hypotheses,
}

impl BoundReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    fn not_applicable(kind: BoundKind, ideal: &Ideal, m_range: (i64, i64), data: Option<&HilbertData>, why: String) -> Self {
        BoundReport {
            kind,
            ideal: format!("{ideal:?}"),
            m_range,
            dimension: data.map_or(-1, |d| d.projective_dimension),
            degree: data.map_or(0, |d| d.degree),
            rows: Vec::new(),
            verdict: Verdict::NotApplicable(why),
            extremal: false,
            hypotheses: Hypotheses::AssertedByUser,
        }
    }

    fn from_rows(
        kind: BoundKind,
        ideal: &Ideal,
        m_range: (i64, i64),
        data: &HilbertData,
        rows: Vec<BoundRow>,
        hypotheses: Hypotheses,
    ) -> Self {
        let verdict = match rows.iter().find(|r| r.violated()) {
            Some(r) => Verdict::ViolatedAt(r.m),
            None => Verdict::Holds,
        };
        let bounded = rows.iter().filter(|r| r.lower.is_some() || r.upper.is_some());
        let extremal = verdict == Verdict::Holds && bounded.clone().count() > 0 && bounded.clone().all(BoundRow::tight);
        BoundReport {
            kind,
            ideal: format!("{ideal:?}"),
            m_range,
            dimension: data.projective_dimension,
            degree: data.degree,
            rows,
            verdict,
            extremal,
            hypotheses,
        }
    }
}

/// Hilbert data of a proper homogeneous ideal of dimension at least zero.
fn positive_dimensional(ideal: &Ideal) -> Result<core::result::Result<HilbertData, (Option<HilbertData>, String)>> {
    let data = match hilbert::hilbert_data(ideal) {
        Ok(d) => d,
        Err(Error::UnitIdeal) => return Ok(Err((None, "unit ideal".into()))),
        Err(e) => return Err(e),
    };
    if data.projective_dimension < 0 {
        return Ok(Err((Some(data), "empty projective variety (dimension -1)".into())));
    }
    Ok(Ok(data))
}

/// Checks one of the unconditional or hypothesis-dependent bounds on
/// `h_I(m)` over `m_range`. `irr` is needed only for `UpperThm21`.
/// Section bounds go through [`check_section_bound`].
pub fn check_bound(
    kind: BoundKind,
    ideal: &Ideal,
    irr: Option<u64>,
    hypotheses: Hypotheses,
    m_range: (i64, i64),
) -> Result<BoundReport> {
    if kind == BoundKind::SectionThm24 {
        return Err(Error::invalid("section bounds need the section; use check_section_bound"));
    }
    if m_range.0 < 1 {
        return Err(Error::invalid("bounds are stated for m >= 1"));
    }
    let data = match positive_dimensional(ideal)? {
        Ok(d) => d,
        Err((data, why)) => return Ok(BoundReport::not_applicable(kind, ideal, m_range, data.as_ref(), why)),
    };
    let (d, deg) = (data.projective_dimension, data.degree);
    let irr = match (kind, irr) {
        (BoundKind::UpperThm21, None) => return Err(Error::invalid("the component count is required")),
        (_, i) => i.unwrap_or(0),
    };
    let rows = (m_range.0..=m_range.1)
        .map(|m| {
            let actual = data.value(m);
            let (lower, upper) = match kind {
                BoundKind::LowerThm23 => (Some(lower_bound_thm23(m, d, deg)), None),
                BoundKind::UpperThm21 => (None, Some(upper_bound_thm21(m, d, deg, irr))),
                BoundKind::UpperThm22 => (None, Some(upper_bound_thm22(m, d, deg))),
                BoundKind::Chardin => (None, Some(chardin_bound(m, d, deg))),
                BoundKind::SectionThm24 => unreachable!(),
            };
            BoundRow { m, lower, actual, upper }
        })
        .collect();
    // the lower bound holds for every homogeneous ideal
    let hypotheses = if kind == BoundKind::LowerThm23 { Hypotheses::Certified } else { hypotheses };
    Ok(BoundReport::from_rows(kind, ideal, m_range, &data, rows, hypotheses))
}

/// Compares `h_{(I,f)}(m)` with the section bound. `f` must be a homogeneous
/// nonzerodivisor modulo `I`; this is checked. Rows below the threshold
/// carry no bound.
pub fn check_section_bound(ideal: &Ideal, f: &Polynomial, hypotheses: Hypotheses, m_range: (i64, i64)) -> Result<BoundReport> {
    let kind = BoundKind::SectionThm24;
    let data = match positive_dimensional(ideal)? {
        Ok(d) => d,
        Err((data, why)) => return Ok(BoundReport::not_applicable(kind, ideal, m_range, data.as_ref(), why)),
    };
    if !f.is_homogeneous() || f.is_zero() {
        return Err(Error::NotHomogeneous);
    }
    if !ideal.is_nzd(f)? {
        return Err(Error::hypothesis("the section is a zero divisor"));
    }
    let deg_f = f.degree().expect("nonzero") as u64;
    let section = hilbert::hilbert_series(&ideal.with_generators(core::slice::from_ref(f))?)?;
    let mut rows = Vec::new();
    for m in m_range.0..=m_range.1 {
        let bound = section_bound_thm24(m, data.projective_dimension, data.degree, deg_f)?;
        rows.push(BoundRow {
            m,
            lower: None,
            actual: section.value(m),
            upper: bound.value().cloned(),
        });
    }
    Ok(BoundReport::from_rows(kind, ideal, m_range, &data, rows, hypotheses))
}

/// The lower bound and every upper bound at once, for ideals with a known
/// component count. Reports appear in the order lower, Thm 2.1, Thm 2.2,
/// Chardin.
pub fn sandwich(ideal: &Ideal, irr: u64, hypotheses: Hypotheses, m_range: (i64, i64)) -> Result<Vec<BoundReport>> {
    [BoundKind::LowerThm23, BoundKind::UpperThm21, BoundKind::UpperThm22, BoundKind::Chardin]
        .into_iter()
        .map(|k| check_bound(k, ideal, Some(irr), hypotheses, m_range))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionWitness {
    pub m0: i64,
    pub actual: BigInt,
    pub bound: BigInt,
    pub range: (i64, i64),
}

/// Least `m0` in `[3 deg I, 5 d deg I]` with
/// `h_{(I,eta)}(m0) <= C(m0+d, d) - C(m0+d-3 deg I, d)`.
pub fn lemma_2_7_witness(ideal: &Ideal, eta: &Polynomial) -> Result<SectionWitness> {
    let data = hilbert::hilbert_data(ideal)?;
    let (d, deg) = (data.projective_dimension, data.degree as i64);
    if d < 1 {
        return Err(Error::hypothesis("needs dimension at least one"));
    }
    if eta.degree() != Some(1) || !eta.is_homogeneous() {
        return Err(Error::invalid("eta must be a linear form"));
    }
    if !ideal.is_nzd(eta)? {
        return Err(Error::hypothesis("the linear form is a zero divisor"));
    }
    let section = hilbert::hilbert_series(&ideal.with_generators(core::slice::from_ref(eta))?)?;
    let range = (3 * deg, 5 * d * deg);
    for m0 in range.0..=range.1 {
        let actual = section.value(m0);
        let bound = binomial(m0 + d, d) - binomial(m0 + d - 3 * deg, d);
        if actual <= bound {
            return Ok(SectionWitness { m0, actual, bound, range });
        }
    }
    Err(Error::hypothesis(format!(
        "no m0 in [{}, {}] satisfies the section inequality; the ideal is not unmixed radical",
        range.0, range.1
    )))
}

/// The ideal generated by the linear forms of a homogeneous ideal.
#[derive(Debug, Clone)]
pub struct LinearClosure {
    pub ideal: Ideal,
    /// Linearly independent linear forms in the ideal.
    pub linear_forms: usize,
    /// `n - linear_forms`, the dimension of the linear span.
    pub span_dimension: i64,
}

pub fn linear_closure(ideal: &Ideal) -> Result<LinearClosure> {
    let ring = ideal.ring();
    let n = ring.nvars() as i64 - 1;
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let gens: Vec<Polynomial> = if ideal.contains_one() {
        Ideal::irrelevant(ring).generators().to_vec()
    } else {
        // a reduced graded basis holds a basis of the degree-one part
        ideal
            .graded_basis()
            .elements()
            .iter()
            .filter(|g| g.degree() == Some(1))
            .map(|g| g.to_ring(ring))
            .collect::<Result<_>>()?
    };
    let count = gens.len();
    let closure = Ideal::new(ring, gens)?;
    if !ideal.contains_one() {
        debug_assert_eq!(
            hilbert::hilbert_function(ideal, 1)?,
            BigInt::from(n + 1 - count as i64),
            "h(1) counts the linear span"
        );
    }
    Ok(LinearClosure {
        ideal: closure,
        linear_forms: count,
        span_dimension: n - count as i64,
    })
}

/// `I + J` contains every variable, i.e. the two varieties lie in disjoint
/// linear subspaces.
pub fn disjoint_subspaces_lemma23(i: &Ideal, j: &Ideal) -> Result<bool> {
    if !i.is_homogeneous() || !j.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let sum = i.sum(j)?;
    let ring = i.ring();
    for v in 0..ring.nvars() {
        if !sum.contains(&Polynomial::var(ring, v))? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extremality {
    /// Equality with the lower bound on the whole window.
    Extremal,
    NotExtremal { first_m: i64 },
    NotApplicable(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalTest {
    pub verdict: Extremality,
    /// `I = (u_1, ..., u_{n-d-1}, f)` with independent linear `u_i` and
    /// `f` of degree `deg I` outside `(u)`, checked directly.
    pub structural: Option<bool>,
    pub window: (i64, i64),
}

impl ExtremalTest {
    pub fn is_extremal(&self) -> bool {
        self.verdict == Extremality::Extremal
    }
}

/// Does `I` attain the lower bound for every `m >= 1`? Comparison runs up
/// to `regularity onset + deg I`, past which both sides are polynomials
/// that already agree on enough points.
pub fn extremal_test_prop26(ideal: &Ideal) -> Result<ExtremalTest> {
    let data = match positive_dimensional(ideal)? {
        Ok(d) => d,
        Err((_, why)) => {
            return Ok(ExtremalTest {
                verdict: Extremality::NotApplicable(why),
                structural: None,
                window: (1, 0),
            })
        }
    };
    let (d, deg) = (data.projective_dimension, data.degree);
    let window = (1, (data.regularity_onset + deg) as i64 + d + 2);
    let first = (window.0..=window.1).find(|&m| data.value(m) != lower_bound_thm23(m, d, deg));
    let verdict = match first {
        None => Extremality::Extremal,
        Some(m) => Extremality::NotExtremal { first_m: m },
    };
    Ok(ExtremalTest {
        verdict,
        structural: Some(structural_prop26(ideal, d, deg)?),
        window,
    })
}

fn structural_prop26(ideal: &Ideal, d: i64, deg: u64) -> Result<bool> {
    let ring = ideal.ring();
    let n = ring.nvars() as i64 - 1;
    let needed = (n - d - 1) as usize;
    let gb = ideal.graded_basis();
    let linear: Vec<Polynomial> = gb
        .elements()
        .iter()
        .filter(|g| g.degree() == Some(1))
        .map(|g| g.to_ring(ring))
        .collect::<Result<_>>()?;
    if linear.len() < needed {
        return Ok(false);
    }
    let u = Ideal::new(ring, linear[..needed].to_vec())?;
    for g in gb.elements() {
        if g.degree() != Some(deg as u32) || u.contains(g)? {
            continue;
        }
        // any degree-deg element outside (u) generates I together with u
        // exactly when I has the extremal shape
        return u.with_generators(&[g.to_ring(ring)?])?.equals(ideal);
    }
    Ok(false)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutCheck {
    pub degree_i: u64,
    pub degree_j: u64,
    pub degree_sum: u64,
    pub dimension_sum: i64,
    pub holds: bool,
}

/// Compares the degree of `I + J` with `deg I * deg J`. Meaningful as a
/// Bézout check only when `I + J` is radical.
pub fn bezout_check(i: &Ideal, j: &Ideal) -> Result<BezoutCheck> {
    let sum = i.sum(j)?;
    let ds = hilbert::hilbert_data(&sum)?;
    let di = hilbert::degree(i)?;
    let dj = hilbert::degree(j)?;
    Ok(BezoutCheck {
        degree_i: di,
        degree_j: dj,
        degree_sum: ds.degree,
        dimension_sum: ds.projective_dimension,
        holds: ds.degree <= di * dj,
    })
}

/// An ideal with invariants known by construction.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub ideal: Ideal,
    /// Ideals of the irreducible components, when built that way.
    pub components: Vec<Ideal>,
    pub dimension: i64,
    pub degree: u64,
    /// Number of irreducible components, when known.
    pub irreducible_components: Option<u64>,
}

fn projective_ring(n: usize, field: Field) -> Result<Arc<Ring>> {
    Ring::standard("x", n + 1, 0, field)
}

/// `(x_{d+2}, ..., x_n, f)` with `f` a random form of degree `e` in
/// `x0, ..., x_{d+1}`.
pub fn hypersurface_in_subspace(n: usize, d: usize, e: u32, field: Field, seed: u64) -> Result<Fixture> {
    if e < 1 || d + 1 > n {
        return Err(Error::invalid("needs e >= 1 and 0 <= d <= n - 1"));
    }
    let ring = projective_ring(n, field)?;
    let small = Ring::standard("x", d + 2, 0, field)?;
    let mut rng = random::rng_from_seed(seed);
    let f = random::random_polynomial(&small, RandomPolySpec::dense(e, true), &mut rng);
    let map: Vec<usize> = (0..d + 2).collect();
    let mut gens: Vec<Polynomial> = (d + 2..=n).map(|i| Polynomial::var(&ring, i)).collect();
    gens.push(f.map_vars(&ring, &map)?);
    Ok(Fixture {
        name: format!("hyp:{n}:{d}:{e}"),
        ideal: Ideal::new(&ring, gens)?,
        components: Vec::new(),
        dimension: d as i64,
        degree: e as u64,
        irreducible_components: None,
    })
}

/// 2x2 minors of the matrix with rows `(v_0 .. v_{k-1})` and
/// `(v_1 .. v_k)`, where `v` are the given variable indices.
fn rnc_minors(ring: &Arc<Ring>, vars: &[usize]) -> Vec<Polynomial> {
    let x = |i: usize| Polynomial::var(ring, vars[i]);
    let k = vars.len() - 1;
    let mut out = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            out.push(&(&x(a) * &x(b + 1)) - &(&x(a + 1) * &x(b)));
        }
    }
    out
}

/// The rational normal curve of degree `n` in `P^n`.
pub fn rational_normal_curve(n: usize, field: Field) -> Result<Fixture> {
    if n < 1 {
        return Err(Error::invalid("rational normal curves need n >= 1"));
    }
    let ring = projective_ring(n, field)?;
    let vars: Vec<usize> = (0..=n).collect();
    let ideal = Ideal::new(&ring, rnc_minors(&ring, &vars))?;
    Ok(Fixture {
        name: format!("rnc:{n}"),
        components: alloc::vec![ideal.clone()],
        ideal,
        dimension: 1,
        degree: n as u64,
        irreducible_components: Some(1),
    })
}

/// Disjoint union of rational normal curves of degrees `delta_j`, each in
/// its own block of consecutive coordinates.
pub fn c_n_delta(n: usize, delta: &[usize], field: Field) -> Result<Fixture> {
    let l = delta.len();
    let total: usize = delta.iter().sum();
    if l == 0 || delta.contains(&0) || total + l > n + 1 {
        return Err(Error::invalid("needs positive degrees with |delta| <= n + 1 - l"));
    }
    let ring = projective_ring(n, field)?;
    let mut components = Vec::with_capacity(l);
    let mut start = 0;
    for &dj in delta {
        let block: Vec<usize> = (start..=start + dj).collect();
        let mut gens = rnc_minors(&ring, &block);
        gens.extend((0..=n).filter(|i| !block.contains(i)).map(|i| Polynomial::var(&ring, i)));
        components.push(Ideal::new(&ring, gens)?);
        start += dj + 1;
    }
    let mut ideal = components[0].clone();
    for c in &components[1..] {
        ideal = ideal.intersection(c)?;
    }
    let list: Vec<String> = delta.iter().map(|d| format!("{d}")).collect();
    Ok(Fixture {
        name: format!("cndelta:{n}:{}", list.join(",")),
        ideal,
        components,
        dimension: 1,
        degree: total as u64,
        irreducible_components: Some(l as u64),
    })
}

/// `count` distinct random points of `P^n` in the chart `x0 = 1`.
pub fn points(n: usize, count: usize, field: Field, seed: u64) -> Result<Fixture> {
    if n < 1 || count < 1 {
        return Err(Error::invalid("needs n >= 1 and at least one point"));
    }
    let ring = projective_ring(n, field)?;
    let mut rng = random::rng_from_seed(seed);
    let mut coords: Vec<Vec<i64>> = Vec::new();
    while coords.len() < count {
        let p: Vec<i64> = (0..n).map(|_| rng.gen_range(-6..=6)).collect();
        if !coords.contains(&p) {
            coords.push(p);
        }
    }
    let x0 = Polynomial::var(&ring, 0);
    let mut components = Vec::with_capacity(count);
    for p in &coords {
        let gens = p
            .iter()
            .enumerate()
            .map(|(i, &c)| &Polynomial::var(&ring, i + 1) - &x0.scale(&field.from_i64(c)))
            .collect();
        components.push(Ideal::new(&ring, gens)?);
    }
    let mut ideal = components[0].clone();
    for c in &components[1..] {
        ideal = ideal.intersection(c)?;
    }
    Ok(Fixture {
        name: format!("points:{n}:{count}:{seed}"),
        ideal,
        components,
        dimension: 0,
        degree: count as u64,
        irreducible_components: Some(count as u64),
    })
}
