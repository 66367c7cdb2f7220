//! Regular sequences of controlled degree inside homogeneous ideals, and
//! the straightening of sequences that are only weakly regular after
//! inverting a form `F` into honest regular sequences.
//!
//! Every generic choice is a seeded random combination that is kept only
//! after an exact nonzerodivisor test; nothing relies on genericity alone.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Pow};
use rand::Rng;

use crate::error::{Error, Result};
use crate::groebner::{is_regular_sequence, is_weak_regular_sequence_localized, Ideal};
use crate::hilbert;
use crate::poly::Polynomial;
use crate::random::{self, RandomPolySpec};
use crate::ring::Ring;
use crate::scalar::Field;

/// Default number of random draws per degree before moving on.
pub const DEFAULT_ATTEMPTS: usize = 8;

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Largest `t` with `t^k <= x`.
pub fn integer_root(x: &BigInt, k: u32) -> u64 {
    assert!(k >= 1);
    let mut lo = 0u64;
    let mut hi = 1u64;
    while Pow::pow(BigInt::from(hi), k) <= *x {
        lo = hi;
        hi *= 2;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if Pow::pow(BigInt::from(mid), k) <= *x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// `floor((e! deg_i)^(1/(e-d)))`, the degree at which an unmixed radical
/// ideal must leave every prime of dimension `e > d`.
pub fn avoidance_cap(e: u64, d: u64, deg_i: u64) -> u64 {
    assert!(e > d, "requires e > d");
    integer_root(&(factorial(e) * deg_i), (e - d) as u32)
}

/// Random homogeneous element of `ideal` in degree `t`, combining all
/// monomial multiples of the graded basis. Zero if nothing lands there.
fn random_element<R: Rng + ?Sized>(ideal: &Ideal, t: u32, rng: &mut R) -> Result<Polynomial> {
    let ring = ideal.ring();
    let gens: Vec<Polynomial> = ideal
        .graded_basis()
        .elements()
        .iter()
        .map(|g| g.to_ring(ring))
        .collect::<Result<_>>()?;
    Ok(random::random_ideal_element(ring, &gens, t, rng))
}

fn proj_n(ring: &Ring) -> usize {
    ring.nvars() - 1
}

fn require_homogeneous(fs: &[&Polynomial]) -> Result<()> {
    for f in fs {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
    }
    Ok(())
}

/// A homogeneous `f` in `I` but not in `P`, of degree at most `cap`.
/// Degrees are swept upwards with `attempts` draws each.
pub fn find_avoiding_element<R: Rng + ?Sized>(
    ideal: &Ideal,
    avoid: &Ideal,
    cap: u32,
    attempts: usize,
    rng: &mut R,
) -> Result<Polynomial> {
    if !ideal.is_homogeneous() || !avoid.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    for t in 1..=cap {
        for _ in 0..attempts {
            let f = random_element(ideal, t, rng)?;
            if f.is_zero() {
                break;
            }
            if !avoid.contains(&f)? {
                return Ok(f);
            }
        }
    }
    Err(Error::RetriesExhausted {
        attempts: attempts * cap as usize,
        context: format!("element outside the avoided ideal of degree <= {cap}"),
    })
}

/// Elements of an ideal found together with the caps they had to meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedSequence {
    pub elements: Vec<Polynomial>,
    pub caps: Vec<u64>,
    pub degrees: Vec<u64>,
    /// The exact regular-sequence test passed on the finished sequence.
    pub certified: bool,
}

/// Sweeps degrees `1..=cap` for a homogeneous element of `source` that is a
/// nonzerodivisor modulo `modulo`.
fn nzd_element<R: Rng + ?Sized>(source: &Ideal, modulo: &Ideal, cap: u64, attempts: usize, rng: &mut R) -> Result<Polynomial> {
    for t in 1..=cap as u32 {
        for _ in 0..attempts {
            let f = random_element(source, t, rng)?;
            if f.is_zero() {
                break;
            }
            if modulo.is_nzd(&f)? {
                return Ok(f);
            }
        }
    }
    Err(Error::RetriesExhausted {
        attempts: attempts * cap as usize,
        context: format!("nonzerodivisor in the ideal of degree <= {cap}"),
    })
}

/// `e - d` forms of `I` whose images modulo `J` are a regular sequence,
/// the `j`-th within `((d+j)! deg I)^(1/j)`. `d` and `e` are the dimensions
/// of `I` and `J`. Unmixedness of `I` and Cohen–Macaulayness of `J` are the
/// caller's responsibility.
pub fn extend_regular_sequence_prop31<R: Rng + ?Sized>(
    ideal: &Ideal,
    j: &Ideal,
    attempts: usize,
    rng: &mut R,
) -> Result<BoundedSequence> {
    if j.contains_one() {
        return Err(Error::UnitIdeal);
    }
    let data = hilbert::hilbert_data(ideal)?;
    let (d, deg) = (data.projective_dimension, data.degree);
    let e = hilbert::dimension(j)?;
    if d < 0 || e < d {
        return Err(Error::hypothesis("needs 0 <= dim I <= dim J"));
    }
    let mut current = j.clone();
    let mut found = Vec::new();
    for level in (d + 1..=e).rev() {
        let cap = avoidance_cap(level as u64, d as u64, deg);
        let f = nzd_element(ideal, &current, cap, attempts, rng)?;
        current = current.with_generators(core::slice::from_ref(&f))?;
        found.push((f, cap));
    }
    // the element chosen at level d + j is the j-th of the sequence
    found.reverse();
    let elements: Vec<Polynomial> = found.iter().map(|(f, _)| f.clone()).collect();
    let mut certified = true;
    let mut modulo = j.clone();
    for f in &elements {
        if !modulo.is_nzd(f)? {
            certified = false;
        }
        modulo = modulo.with_generators(core::slice::from_ref(f))?;
    }
    Ok(BoundedSequence {
        degrees: elements.iter().map(|f| f.degree().unwrap_or(0) as u64).collect(),
        caps: found.iter().map(|(_, c)| *c).collect(),
        elements,
        certified: certified && modulo.is_proper(),
    })
}

/// Degree cap for elements of `I` extending `F` to a regular sequence:
/// `deg I + deg F - 1` for `d = 0`, `5 d deg F deg I` otherwise.
pub fn thm31_cap(d: i64, deg_i: u64, deg_f: u64) -> u64 {
    if d == 0 {
        deg_i + deg_f - 1
    } else {
        5 * d as u64 * deg_f * deg_i
    }
}

/// `n - d` forms `f_i` of `I` such that `F, f_1, ..., f_{n-d}` is a regular
/// sequence, within the dimension-dependent cap.
pub fn regseq_avoiding_hypersurface_thm31<R: Rng + ?Sized>(
    ideal: &Ideal,
    big_f: &Polynomial,
    attempts: usize,
    rng: &mut R,
) -> Result<BoundedSequence> {
    require_homogeneous(&[big_f])?;
    if !ideal.is_nzd(big_f)? {
        return Err(Error::hypothesis("F is a zero divisor modulo the ideal"));
    }
    let data = hilbert::hilbert_data(ideal)?;
    let (d, deg) = (data.projective_dimension, data.degree);
    if d < 0 {
        return Err(Error::hypothesis("needs dimension at least zero"));
    }
    let deg_f = big_f.degree().expect("nonzero") as u64;
    let cap = thm31_cap(d, deg, deg_f);
    let n = proj_n(ideal.ring()) as i64;
    let mut current = Ideal::new(ideal.ring(), alloc::vec![big_f.clone()])?;
    let mut elements = Vec::new();
    for _ in 0..n - d {
        let f = nzd_element(ideal, &current, cap, attempts, rng)?;
        current = current.with_generators(core::slice::from_ref(&f))?;
        elements.push(f);
    }
    let mut seq = alloc::vec![big_f.clone()];
    seq.extend(elements.iter().cloned());
    Ok(BoundedSequence {
        degrees: elements.iter().map(|f| f.degree().unwrap_or(0) as u64).collect(),
        caps: alloc::vec![cap; elements.len()],
        certified: is_regular_sequence(&seq)?,
        elements,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StraighteningResult {
    pub big_f: Polynomial,
    pub input: Vec<Polynomial>,
    pub output: Vec<Polynomial>,
    /// `p_i ≡ F^{c_i} f_i` modulo the earlier ideal; negative when powers of
    /// `F` were stripped.
    pub exponents: Vec<i64>,
    /// `u_i = p_i - F^{c_i} f_i`, an element of the earlier contraction.
    pub corrections: Vec<Polynomial>,
    /// `deg I^c_{i-1}`, with `I^c_0 = (0)` of degree one.
    pub contraction_degrees: Vec<u64>,
    pub degree_caps: Vec<u64>,
    pub degrees: Vec<u64>,
    /// Homogeneous forms of the output (the output itself unless affine).
    pub homogenized_output: Vec<Polynomial>,
    pub input_regular: bool,
    pub output_regular: bool,
    /// The ideals generated by the first `i` inputs and outputs agree
    /// after inverting `F` (in the affine ring for the affine variant).
    pub step_ideals_agree: bool,
}

fn straighten_cap(i: usize, n: usize, deg_fi: u64, deg_f: u64, contraction: u64) -> u64 {
    if i <= n {
        deg_fi.max(5 * (n + 1 - i) as u64 * deg_f * contraction)
    } else {
        deg_fi.max(contraction + deg_f - 1)
    }
}

/// Replaces `f_1, ..., f_s`, weakly regular once `F` is inverted, by a
/// regular sequence `p_1, ..., p_s` generating the same ideals after
/// inverting `F`. Radicality of the intermediate ideals is assumed.
pub fn straighten_prop32<R: Rng + ?Sized>(
    big_f: &Polynomial,
    fs: &[Polynomial],
    attempts: usize,
    rng: &mut R,
) -> Result<StraighteningResult> {
    require_homogeneous(&[big_f])?;
    require_homogeneous(&fs.iter().collect::<Vec<_>>())?;
    let deg_f = big_f.degree().expect("nonzero") as u64;
    if deg_f < 1 {
        return Err(Error::invalid("F must have positive degree"));
    }
    let ring = big_f.ring().with_graded(false);
    let n = proj_n(&ring);
    if fs.len() > n + 1 {
        return Err(Error::invalid("at most n + 1 polynomials"));
    }
    let fs: Vec<Polynomial> = fs.iter().map(|f| f.to_ring(&ring)).collect::<Result<_>>()?;
    let big_f = big_f.to_ring(&ring)?;
    if !is_weak_regular_sequence_localized(&fs, &big_f)? {
        return Err(Error::hypothesis("not a weak regular sequence after inverting F"));
    }
    let mut ps: Vec<Polynomial> = Vec::with_capacity(fs.len());
    let mut exponents = Vec::new();
    let mut corrections = Vec::new();
    let mut contraction_degrees = Vec::new();
    let mut caps = Vec::new();
    let mut contractions = Vec::new();
    for (k, f) in fs.iter().enumerate() {
        let i = k + 1;
        let previous = Ideal::new(&ring, ps.clone())?;
        let contraction = Ideal::new(&ring, fs[..k].to_vec())?.saturate(&big_f)?;
        let deg_c = hilbert::degree(&contraction)?;
        let deg_fi = f.degree().expect("nonzero") as u64;
        let cap = straighten_cap(i, n, deg_fi, deg_f, deg_c);
        contraction_degrees.push(deg_c);
        caps.push(cap);
        let (stripped, e) = f.strip_factor(&big_f)?;
        let accepted = if stripped.degree().unwrap_or(0) >= 1 && (k == 0 || previous.is_nzd(&stripped)?) {
            Some((stripped, -(e as i64), Polynomial::zero(&ring)))
        } else {
            correct(&previous, &contraction, f, &big_f, cap, attempts, rng)?
        };
        let Some((p, c, u)) = accepted else {
            return Err(Error::RetriesExhausted {
                attempts,
                context: format!("regular replacement for element {i} within degree {cap}"),
            });
        };
        ps.push(p);
        exponents.push(c);
        corrections.push(u);
        contractions.push(contraction);
    }
    contractions.push(Ideal::new(&ring, fs.clone())?.saturate(&big_f)?);
    let mut agree = true;
    for i in 1..=ps.len() {
        let mine = Ideal::new(&ring, ps[..i].to_vec())?.saturate(&big_f)?;
        agree &= mine.equals(&contractions[i])?;
    }
    Ok(StraighteningResult {
        degrees: ps.iter().map(|p| p.degree().unwrap_or(0) as u64).collect(),
        input_regular: is_regular_sequence(&fs)?,
        output_regular: is_regular_sequence(&ps)?,
        homogenized_output: ps.clone(),
        big_f,
        input: fs,
        output: ps,
        exponents,
        corrections,
        contraction_degrees,
        degree_caps: caps,
        step_ideals_agree: agree,
    })
}

/// `p = F^c f + u` with `u` a random element of the contraction, for
/// increasing `c` while the degree stays within `cap`.
fn correct<R: Rng + ?Sized>(
    previous: &Ideal,
    contraction: &Ideal,
    f: &Polynomial,
    big_f: &Polynomial,
    cap: u64,
    attempts: usize,
    rng: &mut R,
) -> Result<Option<(Polynomial, i64, Polynomial)>> {
    let deg_fi = f.degree().expect("nonzero") as u64;
    let deg_f = big_f.degree().expect("nonzero") as u64;
    let mut c = 0u32;
    while deg_fi + c as u64 * deg_f <= cap {
        let t = deg_fi as u32 + c * deg_f as u32;
        let base = &big_f.pow(c) * f;
        for _ in 0..attempts {
            let u = random_element(contraction, t, rng)?;
            if u.is_zero() {
                break;
            }
            let p = &base + &u;
            if !p.is_zero() && p.is_homogeneous() && previous.is_nzd(&p)? {
                return Ok(Some((p, c as i64, u)));
            }
        }
        c += 1;
    }
    Ok(None)
}

/// Affine version: homogenize, straighten with `F = x0`, set `x0 = 1`.
/// The homogenizations of the output form a regular sequence and
/// `(f_1..f_i) = (p_1..p_i)` in the affine ring.
pub fn straighten_affine_cor32<R: Rng + ?Sized>(
    fs: &[Polynomial],
    attempts: usize,
    rng: &mut R,
) -> Result<StraighteningResult> {
    let Some(first) = fs.first() else {
        return Err(Error::invalid("empty sequence"));
    };
    let affine = first.ring().with_graded(false);
    let projective = affine.projective_closure_ring()?.with_graded(false);
    let fs: Vec<Polynomial> = fs.iter().map(|f| f.to_ring(&affine)).collect::<Result<_>>()?;
    let homogenized: Vec<Polynomial> = fs.iter().map(|f| f.homogenize(&projective, 0)).collect::<Result<_>>()?;
    let x0 = Polynomial::var(&projective, 0);
    let r = straighten_prop32(&x0, &homogenized, attempts, rng)?;
    let ps: Vec<Polynomial> = r.output.iter().map(|p| p.affinize(&affine, 0)).collect::<Result<_>>()?;
    let hom_ps: Vec<Polynomial> = ps.iter().map(|p| p.homogenize(&projective, 0)).collect::<Result<_>>()?;
    let corrections = r.corrections.iter().map(|u| u.affinize(&affine, 0)).collect::<Result<_>>()?;
    let mut agree = true;
    for i in 1..=ps.len() {
        agree &= Ideal::new(&affine, ps[..i].to_vec())?.equals(&Ideal::new(&affine, fs[..i].to_vec())?)?;
    }
    Ok(StraighteningResult {
        big_f: x0,
        degrees: ps.iter().map(|p| p.degree().unwrap_or(0) as u64).collect(),
        input_regular: r.input_regular,
        output_regular: is_regular_sequence(&hom_ps)?,
        homogenized_output: hom_ps,
        input: fs,
        output: ps,
        exponents: r.exponents,
        corrections,
        contraction_degrees: r.contraction_degrees,
        degree_caps: r.degree_caps,
        step_ideals_agree: agree,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionDegree {
    /// Degree of `(f_1, ..., f_s) : F^∞`, zero for the unit ideal.
    pub contraction_degree: u64,
    pub product_bound: BigInt,
    pub holds: bool,
}

/// Compares the degree of the contraction of `(f_1..f_s)` from the ring
/// with `F` inverted against `prod deg f_i`.
pub fn bezout_contraction_lemma35(big_f: &Polynomial, fs: &[Polynomial]) -> Result<ContractionDegree> {
    require_homogeneous(&[big_f])?;
    require_homogeneous(&fs.iter().collect::<Vec<_>>())?;
    let ring = big_f.ring().with_graded(false);
    if fs.len() > proj_n(&ring) {
        return Err(Error::invalid("at most n polynomials"));
    }
    if !is_weak_regular_sequence_localized(fs, big_f)? {
        return Err(Error::hypothesis("not a weak regular sequence after inverting F"));
    }
    let contraction = Ideal::new(&ring, fs.to_vec())?.saturate(&big_f.to_ring(&ring)?)?;
    let deg = hilbert::degree_or_zero(&contraction)?;
    let product: BigInt = fs.iter().map(|f| BigInt::from(f.degree().expect("nonzero"))).product();
    Ok(ContractionDegree {
        contraction_degree: deg,
        holds: BigInt::from(deg) <= product,
        product_bound: product,
    })
}

/// `x1, x1^{d+1} + x2 F, x1^{d+1} + x3 F` in `k[x0, x1, x2, x3]`: weakly
/// regular once `F` is inverted, but not regular, because the whole curve
/// `F = x1 = 0` lies in the zero set.
pub fn example_3_1(d: u32, big_f: &Polynomial) -> Result<Vec<Polynomial>> {
    let ring = big_f.ring();
    if ring.nvars() != 4 || big_f.degree() != Some(d) || !big_f.is_homogeneous() || d < 1 {
        return Err(Error::invalid("F must be a form of degree d >= 1 in four variables"));
    }
    let x = |i| Polynomial::var(ring, i);
    let lead = x(1).pow(d + 1);
    Ok(alloc::vec![x(1), &lead + &(&x(2) * big_f), &lead + &(&x(3) * big_f)])
}

/// The same family with `F = x0^d`, restricted to the chart `x0 = 1`:
/// `x1, x1^{d+1} + x2, x1^{d+1} + x3` in `k[x1, x2, x3]`.
pub fn example_3_1_affine(d: u32, field: Field) -> Result<Vec<Polynomial>> {
    let ring: Arc<Ring> = Ring::standard("x", 3, 1, field)?;
    let x = |i| Polynomial::var(&ring, i);
    let lead = x(0).pow(d + 1);
    Ok(alloc::vec![x(0), &lead + &x(1), &lead + &x(2)])
}

/// A random form of degree `d` in `x0..x3` outside `(x1, x2)`.
pub fn example_3_1_form<R: Rng + ?Sized>(d: u32, field: Field, rng: &mut R) -> Result<Polynomial> {
    let ring = Ring::standard("x", 4, 0, field)?;
    let outside = Ideal::new(&ring, alloc::vec![Polynomial::var(&ring, 1), Polynomial::var(&ring, 2)])?;
    loop {
        let f = random::random_polynomial(&ring, RandomPolySpec::dense(d, true), rng);
        if !outside.contains(&f)? {
            return Ok(f);
        }
    }
}
