//! Effective Nullstellensatz: the geometric degree of a system, the bound
//! bookkeeping that turns it into a degree bound, and certificate search
//! `g = a_1 f_1 + ... + a_s f_s` by exact linear algebra.
//!
//! Systems live in an affine ring `k[x_1..x_n]`. Projective closures live in
//! `k[x_0..x_n]` with the homogenizing variable in front.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Pow;
use rand::Rng;

use crate::error::{Error, Result};
use crate::groebner::{is_weak_regular_sequence, Ideal};
use crate::hilbert;
use crate::linalg;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::random::{self, RandomPolySpec};
use crate::ring::Ring;
use crate::scalar::{Coeff, Field};

/// Which generic combinations a trial may form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharMode {
    /// `g_i = sum_j λ_ij f_j`.
    Char0,
    /// Combinations of `{f_j, x_k f_j}`, needed over small finite fields.
    CharP,
}

impl CharMode {
    pub fn name(&self) -> &'static str {
        match self {
            CharMode::Char0 => "char0",
            CharMode::CharP => "charp",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrialKind {
    /// `λ` is the identity: the system as given.
    Identity,
    /// Random `λ` that is upper triangular once the `f_j` are sorted by
    /// descending degree, so `deg g_i <= d_i` (plus one in char p mode).
    DegreeRespecting,
    /// Caller-supplied `λ`.
    Explicit,
}

impl TrialKind {
    pub fn name(&self) -> &'static str {
        match self {
            TrialKind::Identity => "identity",
            TrialKind::DegreeRespecting => "degree-respecting",
            TrialKind::Explicit => "explicit",
        }
    }
}

/// One draw of `λ` and what it produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeTrial {
    pub kind: TrialKind,
    pub seed: u64,
    /// Row `i` gives `g_i`. In char 0 mode column `j` multiplies `f_j`; in
    /// char p mode column `j (n+1) + k` multiplies `f_j` for `k = 0` and
    /// `x_k f_j` otherwise.
    pub lambda: Vec<Vec<Coeff>>,
    pub combinations: Vec<Polynomial>,
    /// Least `t` with `1 ∈ (g_1..g_t)`, or `s`.
    pub t: usize,
    /// `deg` of the projective closure of `(g_1..g_i)` for
    /// `1 <= i <= min(t, n) - 1`.
    pub step_degrees: Vec<u64>,
    /// `g_1..g_t` is weakly regular and generates `(f_1..f_s)`.
    pub certified: bool,
    /// Max of `step_degrees` (1 for an empty range); only for certified
    /// trials.
    pub delta: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricDegreeReport {
    pub nvars: usize,
    pub system_size: usize,
    pub char_mode: CharMode,
    pub trials: Vec<DegreeTrial>,
    /// Minimum of `δ(λ)` over certified trials. An upper estimate of the
    /// geometric degree, which is a minimum over all admissible `λ`.
    pub delta_estimate: u64,
    /// Radicality of the intermediate ideals is never checked.
    pub radicality_verified: bool,
}

/// Options shared by the certificate pipelines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NssOptions {
    pub trials: usize,
    pub seed: u64,
    pub mode: CharMode,
    pub search: SearchMode,
}

impl Default for NssOptions {
    fn default() -> Self {
        NssOptions {
            trials: 4,
            seed: 0,
            mode: CharMode::Char0,
            search: SearchMode::Incremental,
        }
    }
}

/// How the least certificate degree is located.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// `D = 0, 1, 2, ...`
    Incremental,
    /// `D = 0, 1, 2, 4, ...` up to the bound, then bisect the last gap;
    /// sound because a certificate at `D` is one at every larger `D`.
    Bisection,
}

fn affine_ring(fs: &[Polynomial]) -> Result<Arc<Ring>> {
    let first = fs.first().ok_or_else(|| Error::invalid("empty system"))?;
    let ring = first.ring().with_graded(false);
    if fs.iter().any(|f| f.ring().names() != ring.names() || f.field() != ring.field()) {
        return Err(Error::RingMismatch);
    }
    Ok(ring)
}

fn to_affine(fs: &[Polynomial], ring: &Arc<Ring>) -> Result<Vec<Polynomial>> {
    fs.iter().map(|f| f.to_ring(ring)).collect()
}

fn deg(f: &Polynomial) -> u32 {
    f.degree().unwrap_or(0)
}

/// Affine dimension of `(fs)`, `-1` for the unit ideal.
fn affine_dimension(ideal: &Ideal) -> Result<i64> {
    if ideal.contains_one() {
        return Ok(-1);
    }
    hilbert::dimension(&ideal.projective_closure()?)
}

/// Degree of the projective closure of `(gens)`; `1` for the zero ideal and
/// `0` for the unit ideal.
fn closure_degree(ring: &Arc<Ring>, gens: &[Polynomial]) -> Result<u64> {
    let ideal = Ideal::new(ring, gens.to_vec())?;
    hilbert::degree_or_zero(&ideal.projective_closure()?)
}

fn combine(ring: &Arc<Ring>, fs: &[Polynomial], row: &[Coeff], mode: CharMode) -> Polynomial {
    let n = ring.nvars();
    let mut acc = Polynomial::zero(ring);
    for (j, f) in fs.iter().enumerate() {
        match mode {
            CharMode::Char0 => {
                acc = &acc + &f.scale(&row[j]);
            }
            CharMode::CharP => {
                for k in 0..=n {
                    let c = &row[j * (n + 1) + k];
                    if ring.field().is_zero(c) {
                        continue;
                    }
                    let m = if k == 0 { Monomial::ONE } else { Monomial::var(k - 1, 1) };
                    acc = &acc + &f.mul_term(&m, c);
                }
            }
        }
    }
    acc
}

fn lambda_width(n: usize, s: usize, mode: CharMode) -> usize {
    match mode {
        CharMode::Char0 => s,
        CharMode::CharP => s * (n + 1),
    }
}

fn identity_lambda(field: Field, n: usize, s: usize, mode: CharMode) -> Vec<Vec<Coeff>> {
    let width = lambda_width(n, s, mode);
    (0..s)
        .map(|i| {
            let mut row = vec![field.zero(); width];
            let col = match mode {
                CharMode::Char0 => i,
                CharMode::CharP => i * (n + 1),
            };
            row[col] = field.one();
            row
        })
        .collect()
}

/// Indices of `fs` by descending degree, ties in input order.
fn descending_order(fs: &[Polynomial]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..fs.len()).collect();
    idx.sort_by(|&a, &b| deg(&fs[b]).cmp(&deg(&fs[a])));
    idx
}

fn degree_respecting_lambda<R: Rng + ?Sized>(
    field: Field,
    fs: &[Polynomial],
    n: usize,
    mode: CharMode,
    rng: &mut R,
) -> Vec<Vec<Coeff>> {
    let s = fs.len();
    let order = descending_order(fs);
    let width = lambda_width(n, s, mode);
    let mut rows = Vec::with_capacity(s);
    for i in 0..s {
        let mut row = vec![field.zero(); width];
        for (pos, &j) in order.iter().enumerate().skip(i) {
            match mode {
                CharMode::Char0 => row[j] = field.random_nonzero(rng, 9),
                CharMode::CharP => {
                    row[j * (n + 1)] = field.random_nonzero(rng, 9);
                    // the diagonal stays a constant multiple so that the
                    // combinations still generate (f)
                    if pos > i {
                        for k in 1..=n {
                            row[j * (n + 1) + k] = field.random_nonzero(rng, 9);
                        }
                    }
                }
            }
        }
        rows.push(row);
    }
    rows
}

/// Runs one trial for a given `λ`.
pub fn delta_for_lambda(fs: &[Polynomial], lambda: &[Vec<Coeff>], mode: CharMode) -> Result<DegreeTrial> {
    let ring = affine_ring(fs)?;
    let fs = to_affine(fs, &ring)?;
    run_trial(&ring, &fs, lambda.to_vec(), mode, TrialKind::Explicit, 0)
}

fn run_trial(
    ring: &Arc<Ring>,
    fs: &[Polynomial],
    lambda: Vec<Vec<Coeff>>,
    mode: CharMode,
    kind: TrialKind,
    seed: u64,
) -> Result<DegreeTrial> {
    let n = ring.nvars();
    let s = fs.len();
    if lambda.iter().any(|r| r.len() != lambda_width(n, s, mode)) {
        return Err(Error::invalid("λ has the wrong number of columns"));
    }
    let gs: Vec<Polynomial> = lambda.iter().map(|row| combine(ring, fs, row, mode)).collect();
    let mut t = gs.len();
    for i in 1..=gs.len() {
        if Ideal::new(ring, gs[..i].to_vec())?.contains_one() {
            t = i;
            break;
        }
    }
    let target = Ideal::new(ring, fs.to_vec())?;
    let generated = Ideal::new(ring, gs[..t].to_vec())?;
    let certified = gs[..t].iter().all(|g| !g.is_zero())
        && is_weak_regular_sequence(&gs[..t])?
        && generated.equals(&target)?;
    let mut step_degrees = Vec::new();
    let mut delta = None;
    if certified {
        for i in 1..t.min(n) {
            step_degrees.push(closure_degree(ring, &gs[..i])?);
        }
        delta = Some(step_degrees.iter().copied().max().unwrap_or(1));
    }
    Ok(DegreeTrial {
        kind,
        seed,
        lambda,
        combinations: gs,
        t,
        step_degrees,
        certified,
        delta,
    })
}

/// Estimates the geometric degree of `fs` from `trials` draws of `λ`: the
/// identity first, then degree-respecting random matrices seeded from
/// `seed`. The system must generate the unit ideal or have dimension
/// `n - s`.
pub fn geometric_degree_estimate(fs: &[Polynomial], trials: usize, seed: u64, mode: CharMode) -> Result<GeometricDegreeReport> {
    if trials == 0 {
        return Err(Error::invalid("at least one trial is required"));
    }
    let ring = affine_ring(fs)?;
    let fs = to_affine(fs, &ring)?;
    let n = ring.nvars();
    let s = fs.len();
    let ideal = Ideal::new(&ring, fs.clone())?;
    let dim = affine_dimension(&ideal)?;
    if dim != -1 && dim != n as i64 - s as i64 {
        return Err(Error::hypothesis(format!(
            "the system is neither unit nor of dimension n - s = {} (dimension {dim})",
            n as i64 - s as i64
        )));
    }
    let field = ring.field();
    let mut out = Vec::with_capacity(trials);
    for k in 0..trials {
        let trial_seed = random::derive_seed(seed, k as u64);
        let (kind, lambda) = if k == 0 {
            (TrialKind::Identity, identity_lambda(field, n, s, mode))
        } else {
            let mut rng = random::rng_from_seed(trial_seed);
            (TrialKind::DegreeRespecting, degree_respecting_lambda(field, &fs, n, mode, &mut rng))
        };
        out.push(run_trial(&ring, &fs, lambda, mode, kind, trial_seed)?);
    }
    let delta_estimate = out
        .iter()
        .filter_map(|t| t.delta)
        .min()
        .ok_or_else(|| Error::RetriesExhausted {
            attempts: trials,
            context: String::from("no trial produced a certified weak regular sequence"),
        })?;
    Ok(GeometricDegreeReport {
        nvars: n,
        system_size: s,
        char_mode: mode,
        trials: out,
        delta_estimate,
        radicality_verified: false,
    })
}

/// The degree bookkeeping attached to a weak regular sequence `h_1..h_s`.
/// Vectors indexed by `i` are stored at position `i - 1`; `closure_degrees`
/// starts with `deg Ĩ_0 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaD {
    pub nvars: usize,
    pub degrees: Vec<u32>,
    pub closure_degrees: Vec<u64>,
    pub c: Vec<i64>,
    pub gamma: Vec<i64>,
    pub d: Vec<i64>,
    /// Closed-form cap on `D_s` (see [`gamma_d_cap`]).
    pub cap: BigInt,
    pub cap_holds: bool,
}

impl GammaD {
    pub fn last_d(&self) -> i64 {
        self.d.last().copied().unwrap_or(0)
    }
}

/// `s^2 (d - 1 + 3n) max_{i<s} δ_i` for `s <= n`, and
/// `n^2 (d - 1 + 3n) max_{i<s} δ_i` for `s = n + 1`. An empty max is 1.
pub fn gamma_d_cap(n: usize, degrees: &[u32], closure_degrees: &[u64]) -> BigInt {
    let s = degrees.len();
    let d = degrees.iter().copied().max().unwrap_or(0) as i64;
    let max_delta = (1..s).map(|i| closure_degrees[i]).max().unwrap_or(1);
    let lead = if s <= n { s } else { n } as i64;
    BigInt::from(lead * lead) * BigInt::from(d - 1 + 3 * n as i64) * BigInt::from(max_delta)
}

/// `γ_i`, `c_i` and `D_i` for a weak regular affine sequence `hs`.
pub fn gamma_d_sequences(hs: &[Polynomial]) -> Result<GammaD> {
    let ring = affine_ring(hs)?;
    let hs = to_affine(hs, &ring)?;
    let n = ring.nvars();
    let s = hs.len();
    if s > n + 1 {
        return Err(Error::hypothesis("a weak regular sequence has at most n + 1 elements"));
    }
    if !is_weak_regular_sequence(&hs)? {
        return Err(Error::hypothesis("the sequence is not weakly regular"));
    }
    let degrees: Vec<u32> = hs.iter().map(deg).collect();
    let mut closure_degrees = vec![1u64];
    for i in 1..=s {
        closure_degrees.push(closure_degree(&ring, &hs[..i])?);
    }
    let dh = |i: usize| degrees[i - 1] as i64;
    let di = |i: usize| closure_degrees[i] as i64;
    let mut gamma = Vec::with_capacity(s);
    let mut c = Vec::with_capacity(s);
    for i in 1..=s {
        gamma.push(if i == 1 {
            0
        } else if i <= n {
            dh(i) * di(i - 1) - di(i)
        } else {
            dh(i) + di(n) - 1
        });
        c.push(if i <= 2 {
            0
        } else if i <= n {
            (5 * (n + 1 - i) as i64 * di(i - 1) - dh(i)).max(0)
        } else {
            (di(n) - dh(i)).max(0)
        });
    }
    let d: Vec<i64> = (1..=s)
        .map(|i| {
            let a: i64 = (2..=i).map(|j| (i + 1 - j) as i64 * gamma[j - 1]).sum();
            let b: i64 = (3..i).map(|j| (i - j) as i64 * c[j - 1]).sum();
            a + b
        })
        .collect();
    let cap = gamma_d_cap(n, &degrees, &closure_degrees);
    let cap_holds = BigInt::from(d.last().copied().unwrap_or(0)) <= cap;
    Ok(GammaD {
        nvars: n,
        degrees,
        closure_degrees,
        c,
        gamma,
        d,
        cap,
        cap_holds,
    })
}

/// `g = sum a_i f_i` with `deg a_i f_i <= deg g + achieved_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub g: Polynomial,
    pub cofactors: Vec<Polynomial>,
    pub achieved_d: u32,
    pub bound_d: Option<BigInt>,
    pub verified: bool,
}

impl Certificate {
    /// Re-expands `sum a_i f_i` and checks it equals `g` term by term, and
    /// that every product respects the degree budget.
    pub fn verify(&self, fs: &[Polynomial]) -> bool {
        if fs.len() != self.cofactors.len() {
            return false;
        }
        let budget = deg(&self.g) + self.achieved_d;
        let mut sum = Polynomial::zero(self.g.ring());
        for (a, f) in self.cofactors.iter().zip(fs) {
            let Ok(a) = a.to_ring(self.g.ring()) else { return false };
            let Ok(f) = f.to_ring(self.g.ring()) else { return false };
            let p = &a * &f;
            if p.degree().is_some_and(|e| e > budget) {
                return false;
            }
            sum = &sum + &p;
        }
        (&sum - &self.g).is_zero()
    }
}

/// Solves for cofactors `a_i` of degree `<= deg g + D - deg f_i` with
/// `sum a_i f_i = g`. `Ok(None)` when no such cofactors exist.
pub fn certificate_at_degree(g: &Polynomial, fs: &[Polynomial], big_d: u32) -> Result<Option<Certificate>> {
    let ring = affine_ring(fs)?;
    let fs = to_affine(fs, &ring)?;
    let g = g.to_ring(&ring)?;
    let field = ring.field();
    let n = ring.nvars();
    let total = deg(&g) + big_d;

    let row_monos = random::monomials_up_to_degree(n, total);
    let row_of: BTreeMap<Monomial, usize> = row_monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows: Vec<Vec<(usize, Coeff)>> = vec![Vec::new(); row_monos.len()];
    let mut blocks: Vec<Vec<Monomial>> = Vec::with_capacity(fs.len());
    let mut ncols = 0;
    for f in &fs {
        let block = match f.degree() {
            Some(df) if df <= total => random::monomials_up_to_degree(n, total - df),
            _ => Vec::new(),
        };
        for (k, m) in block.iter().enumerate() {
            for (t, c) in f.terms() {
                rows[row_of[&m.mul(t)]].push((ncols + k, c.clone()));
            }
        }
        ncols += block.len();
        blocks.push(block);
    }
    let rhs: Vec<Coeff> = row_monos.iter().map(|m| g.coeff_of(m)).collect();
    if g.terms().iter().any(|(m, _)| !row_of.contains_key(m)) {
        return Ok(None);
    }
    let Some(x) = linalg::solve_sparse(field, &rows, &rhs, ncols) else {
        return Ok(None);
    };
    let mut offset = 0;
    let mut cofactors = Vec::with_capacity(fs.len());
    for block in &blocks {
        let terms = block
            .iter()
            .enumerate()
            .filter(|(k, _)| !field.is_zero(&x[offset + k]))
            .map(|(k, m)| (*m, x[offset + k].clone()))
            .collect();
        cofactors.push(Polynomial::from_terms(&ring, terms));
        offset += block.len();
    }
    let mut cert = Certificate {
        g,
        cofactors,
        achieved_d: big_d,
        bound_d: None,
        verified: false,
    };
    cert.verified = cert.verify(&fs);
    if !cert.verified {
        return Err(Error::invalid("solver returned cofactors that do not re-expand to g"));
    }
    Ok(Some(cert))
}

fn bound_as_u32(bound: &BigInt) -> u32 {
    u32::try_from(bound).unwrap_or(u32::MAX)
}

/// The least `D <= bound` admitting a certificate, per `mode`.
pub fn search_certificate(g: &Polynomial, fs: &[Polynomial], bound: u32, mode: SearchMode) -> Result<Option<Certificate>> {
    match mode {
        SearchMode::Incremental => {
            for big_d in 0..=bound {
                if let Some(c) = certificate_at_degree(g, fs, big_d)? {
                    return Ok(Some(c));
                }
            }
            Ok(None)
        }
        SearchMode::Bisection => {
            let mut lo = 0u32;
            let mut hi = 0u32;
            let mut best = loop {
                if let Some(c) = certificate_at_degree(g, fs, hi)? {
                    break c;
                }
                if hi >= bound {
                    return Ok(None);
                }
                lo = hi + 1;
                hi = if hi == 0 { 1 } else { hi.saturating_mul(2).min(bound) };
            };
            // none below `lo`, one at `hi`
            while lo < hi {
                let mid = lo + (hi - lo) / 2;
                match certificate_at_degree(g, fs, mid)? {
                    Some(c) => {
                        best = c;
                        hi = mid;
                    }
                    None => lo = mid + 1,
                }
            }
            Ok(Some(best))
        }
    }
}

/// Least `D <= max_d` with `x_0^D g̃ ∈ (f̃_1..f̃_s)`, by Gröbner membership.
/// Independent of the linear-algebra search and equal to its answer.
pub fn least_homogenized_power(g: &Polynomial, fs: &[Polynomial], max_d: u32) -> Result<Option<u32>> {
    let ring = affine_ring(fs)?;
    let g = g.to_ring(&ring)?;
    if g.is_zero() {
        return Ok(Some(0));
    }
    let target = ring.projective_closure_ring()?;
    let hs = fs
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| f.to_ring(&ring)?.homogenize(&target, 0))
        .collect::<Result<Vec<_>>>()?;
    let big_h = Ideal::new(&target, hs)?;
    let x0 = Polynomial::var(&target, 0);
    let mut p = g.homogenize(&target, 0)?;
    for big_d in 0..=max_d {
        if big_h.contains(&p)? {
            return Ok(Some(big_d));
        }
        p = &p * &x0;
    }
    Ok(None)
}

/// Outcome of a bounded certificate search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NssRun {
    pub degree_report: GeometricDegreeReport,
    pub max_degree: u32,
    pub bound_d: BigInt,
    /// `None` means the search exhausted `bound_d`, which contradicts the
    /// theorem whenever `δ̂` is sound; the report carries the trial data.
    pub certificate: Option<Certificate>,
}

impl NssRun {
    pub fn within_bound(&self) -> bool {
        self.certificate.as_ref().is_some_and(|c| BigInt::from(c.achieved_d) <= self.bound_d)
    }
}

fn run_bounded(g: &Polynomial, fs: &[Polynomial], lead: usize, opts: NssOptions) -> Result<NssRun> {
    let ring = affine_ring(fs)?;
    let n = ring.nvars() as i64;
    let report = geometric_degree_estimate(fs, opts.trials, opts.seed, opts.mode)?;
    let d = fs.iter().map(deg).max().unwrap_or(0);
    let lead = lead as i64;
    let bound_d = BigInt::from(lead * lead) * BigInt::from(d as i64 + 3 * n) * BigInt::from(report.delta_estimate);
    let mut certificate = search_certificate(g, fs, bound_as_u32(&bound_d), opts.search)?;
    if let Some(c) = certificate.as_mut() {
        c.bound_d = Some(bound_d.clone());
    }
    Ok(NssRun {
        degree_report: report,
        max_degree: d,
        bound_d,
        certificate,
    })
}

/// `1 = sum a_i f_i` with `deg a_i f_i <= min(n, s)^2 (d + 3n) δ̂`.
pub fn certify_nss_thm44(fs: &[Polynomial], opts: NssOptions) -> Result<NssRun> {
    let ring = affine_ring(fs)?;
    let fs = to_affine(fs, &ring)?;
    if !Ideal::new(&ring, fs.clone())?.contains_one() {
        return Err(Error::hypothesis("the system has a common zero"));
    }
    let lead = ring.nvars().min(fs.len());
    run_bounded(&Polynomial::one(&ring), &fs, lead, opts)
}

/// `g = sum a_i f_i` with `deg a_i f_i <= deg g + s^2 (d + 3n) δ̂` for a
/// complete intersection `(f_1..f_s)`, `s <= n`.
pub fn represent_ci_thm43(g: &Polynomial, fs: &[Polynomial], opts: NssOptions) -> Result<NssRun> {
    let ring = affine_ring(fs)?;
    let fs = to_affine(fs, &ring)?;
    let g = g.to_ring(&ring)?;
    let n = ring.nvars();
    if fs.len() > n {
        return Err(Error::hypothesis("requires s <= n"));
    }
    let ideal = Ideal::new(&ring, fs.clone())?;
    if !ideal.is_proper() {
        return Err(Error::hypothesis("the ideal is the unit ideal"));
    }
    if affine_dimension(&ideal)? != (n - fs.len()) as i64 {
        return Err(Error::hypothesis("the ideal is not of dimension n - s"));
    }
    if !ideal.contains(&g)? {
        return Err(Error::NotInIdeal);
    }
    run_bounded(&g, &fs, fs.len(), opts)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma45Check {
    pub char_mode: CharMode,
    pub degrees_descending: Vec<u32>,
    pub bound: BigInt,
    pub delta_estimate: u64,
    pub trials_used: usize,
    pub holds: bool,
}

/// `Π_{i < min(s,n)} d_i` with `d_1 >= d_2 >= ...`, or `(d+1)^{min(s,n)-1}`
/// in char p mode.
pub fn lemma_4_5_bound(degrees: &[u32], n: usize, mode: CharMode) -> BigInt {
    let mut ds = degrees.to_vec();
    ds.sort_unstable_by(|a, b| b.cmp(a));
    let k = ds.len().min(n).saturating_sub(1);
    match mode {
        CharMode::Char0 => ds[..k].iter().fold(BigInt::from(1), |acc, &d| acc * d),
        CharMode::CharP => Pow::pow(BigInt::from(ds.first().copied().unwrap_or(0) + 1), k as u32),
    }
}

/// Compares `δ̂` against the product bound. A failure is retried once with
/// twice the trials on a fresh seed stream before it is reported.
pub fn lemma_4_5_check(fs: &[Polynomial], opts: NssOptions) -> Result<Lemma45Check> {
    let ring = affine_ring(fs)?;
    let mut degrees: Vec<u32> = fs.iter().map(deg).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let bound = lemma_4_5_bound(&degrees, ring.nvars(), opts.mode);
    let first = geometric_degree_estimate(fs, opts.trials, opts.seed, opts.mode)?;
    let mut delta = first.delta_estimate;
    let mut trials_used = opts.trials;
    if BigInt::from(delta) > bound {
        let retry_seed = random::derive_seed(opts.seed, u64::MAX);
        let second = geometric_degree_estimate(fs, 2 * opts.trials, retry_seed, opts.mode)?;
        delta = delta.min(second.delta_estimate);
        trials_used += 2 * opts.trials;
    }
    Ok(Lemma45Check {
        char_mode: opts.mode,
        degrees_descending: degrees,
        holds: BigInt::from(delta) <= bound,
        bound,
        delta_estimate: delta,
        trials_used,
    })
}

/// `x_0^D g̃ ∈ (h̃_1..h̃_s)`, after checking `g ∈ (h_1..h_s)`.
pub fn membership_power_check_prop42(g: &Polynomial, hs: &[Polynomial], big_d: u32) -> Result<bool> {
    let ring = affine_ring(hs)?;
    let g = g.to_ring(&ring)?;
    if !Ideal::new(&ring, to_affine(hs, &ring)?)?.contains(&g)? {
        return Err(Error::NotInIdeal);
    }
    if g.is_zero() {
        return Ok(true);
    }
    let target = ring.projective_closure_ring()?;
    let hom = hs
        .iter()
        .filter(|h| !h.is_zero())
        .map(|h| h.to_ring(&ring)?.homogenize(&target, 0))
        .collect::<Result<Vec<_>>>()?;
    let x0 = Polynomial::var(&target, 0).pow(big_d);
    Ideal::new(&target, hom)?.contains(&(&x0 * &g.homogenize(&target, 0)?))
}

/// A system `f_i = h_i + u_i` with `u_i ∈ (h_1..h_{i-1})` of high degree
/// over a low-degree unit-ideal sequence `h` in three variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Example41 {
    pub hs: Vec<Polynomial>,
    pub fs: Vec<Polynomial>,
    pub nvars: usize,
    pub inner_degree: u32,
    pub input_degree: u32,
}

/// `h = (x1 x2 - 1, x2 x3 - 1, x2)`; the corrections are seeded random
/// multiples of earlier `h_j` bringing `f_2, f_3` to degree `big_d`.
pub fn example_4_1(field: Field, seed: u64, big_d: u32) -> Result<Example41> {
    if big_d < 3 {
        return Err(Error::invalid("input degree must be at least 3"));
    }
    let ring = Ring::standard("x", 3, 1, field)?.with_graded(false);
    let x = |i: usize| Polynomial::var(&ring, i);
    let one = Polynomial::one(&ring);
    let hs = vec![&(&x(0) * &x(1)) - &one, &(&x(1) * &x(2)) - &one, x(1)];
    let mut rng = random::rng_from_seed(seed);
    let spec = RandomPolySpec {
        degree: big_d - 2,
        homogeneous: false,
        density: 0.5,
        coeff_bound: 9,
    };
    let mut fs = vec![hs[0].clone()];
    for i in 1..3 {
        let mut f = hs[i].clone();
        for h in &hs[..i] {
            let r = random::random_polynomial(&ring, spec, &mut rng);
            f = &f + &(&r * h);
        }
        fs.push(f);
    }
    let input_degree = fs.iter().map(deg).max().unwrap_or(0);
    let inner_degree = hs.iter().map(deg).max().unwrap_or(0);
    Ok(Example41 {
        hs,
        fs,
        nvars: 3,
        inner_degree,
        input_degree,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Example41Comparison {
    pub n: usize,
    pub s: usize,
    pub inner_degree: u32,
    pub input_degree: u32,
    /// `min(n,s)^2 (D + 3n) d^{min(n,s)-1}`.
    pub geometric_bound: BigInt,
    /// `D^{min(n,s)}`.
    pub degree_power_bound: BigInt,
    pub sharper: bool,
}

pub fn example_4_1_comparison(n: usize, s: usize, inner_degree: u32, input_degree: u32) -> Example41Comparison {
    let k = n.min(s);
    let geometric_bound = BigInt::from(k * k)
        * BigInt::from(input_degree as u64 + 3 * n as u64)
        * Pow::pow(BigInt::from(inner_degree), (k - 1) as u32);
    let degree_power_bound = Pow::pow(BigInt::from(input_degree), k as u32);
    Example41Comparison {
        n,
        s,
        inner_degree,
        input_degree,
        sharper: geometric_bound < degree_power_bound,
        geometric_bound,
        degree_power_bound,
    }
}

/// A seeded system of `n + 1` dense random polynomials of degrees in
/// `1..=max_degree` generating the unit ideal, redrawn until it does.
pub fn random_unit_system(n: usize, max_degree: u32, field: Field, seed: u64) -> Result<Vec<Polynomial>> {
    let ring = Ring::standard("x", n, 1, field)?.with_graded(false);
    let mut rng = random::rng_from_seed(seed);
    for _ in 0..32 {
        let fs: Vec<Polynomial> = (0..=n)
            .map(|_| {
                let degree = rng.gen_range(1..=max_degree.max(1));
                let spec = RandomPolySpec {
                    degree,
                    homogeneous: false,
                    density: 0.6,
                    coeff_bound: 9,
                };
                random::random_polynomial(&ring, spec, &mut rng)
            })
            .collect();
        if Ideal::new(&ring, fs.clone())?.contains_one() {
            return Ok(fs);
        }
    }
    Err(Error::RetriesExhausted {
        attempts: 32,
        context: String::from("random system kept a common zero"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ring(vars: &[&str], field: Field) -> Arc<Ring> {
        Ring::new(vars, field, crate::ring::MonomialOrder::GRevLex).unwrap().with_graded(false)
    }

    fn polys(r: &Arc<Ring>, src: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| parse_polynomial(r, s).unwrap()).collect()
    }

    #[test]
    fn univariate_pair() {
        let r = ring(&["x"], Field::Rational);
        let fs = polys(&r, &["x", "1 - x"]);
        // deg(a_i f_i) = 1 already exceeds deg 1 + 0
        assert!(certificate_at_degree(&Polynomial::one(&r), &fs, 0).unwrap().is_none());
        let c = certificate_at_degree(&Polynomial::one(&r), &fs, 1).unwrap().unwrap();
        assert_eq!(c.cofactors, polys(&r, &["1", "1"]));
        let rep = geometric_degree_estimate(&fs, 3, 7, CharMode::Char0).unwrap();
        assert_eq!(rep.delta_estimate, 1);
        let run = certify_nss_thm44(&fs, NssOptions::default()).unwrap();
        assert_eq!(run.certificate.as_ref().unwrap().achieved_d, 1);
        assert!(run.within_bound());
    }

    #[test]
    fn worked_instance_needs_four() {
        let r = ring(&["x", "y"], Field::Rational);
        let fs = polys(&r, &["x^2", "1 - x*y"]);
        let one = Polynomial::one(&r);
        for d in 0..4 {
            assert!(certificate_at_degree(&one, &fs, d).unwrap().is_none(), "D = {d}");
        }
        let c = certificate_at_degree(&one, &fs, 4).unwrap().unwrap();
        assert!(c.verify(&fs));
        // by hand: y^2 x^2 + (1 + xy)(1 - xy) = 1
        let hand = Certificate {
            g: one.clone(),
            cofactors: polys(&r, &["y^2", "1 + x*y"]),
            achieved_d: 4,
            bound_d: None,
            verified: false,
        };
        assert!(hand.verify(&fs));
        assert_eq!(least_homogenized_power(&one, &fs, 10).unwrap(), Some(4));
        let run = certify_nss_thm44(&fs, NssOptions::default()).unwrap();
        let cert = run.certificate.clone().unwrap();
        assert_eq!(cert.achieved_d, 4);
        assert_eq!(run.degree_report.delta_estimate, 2);
        assert_eq!(run.bound_d, BigInt::from(4 * 8 * 2));
        assert!(run.within_bound());
        let bis = search_certificate(&one, &fs, 64, SearchMode::Bisection).unwrap();
        assert_eq!(bis.unwrap().achieved_d, 4);
        assert!(search_certificate(&one, &fs, 3, SearchMode::Bisection).unwrap().is_none());
    }

    #[test]
    fn generator_itself() {
        let r = ring(&["x1", "x2", "x3"], Field::Rational);
        let fs = polys(&r, &["x1^2 - x2", "x3 - 1"]);
        let c = certificate_at_degree(&fs[0], &fs, 0).unwrap().unwrap();
        assert_eq!(c.cofactors[0], Polynomial::one(&r));
        assert!(c.cofactors[1].is_zero());
    }

    #[test]
    fn complete_intersection_representation() {
        let r = ring(&["x1", "x2", "x3"], Field::Rational);
        let fs = polys(&r, &["x1", "x2"]);
        let g = parse_polynomial(&r, "x1^2 + x2^2").unwrap();
        let run = represent_ci_thm43(&g, &fs, NssOptions::default()).unwrap();
        let c = run.certificate.unwrap();
        assert!(c.achieved_d <= 1 && c.verify(&fs));
        let first = represent_ci_thm43(&fs[0], &fs, NssOptions::default()).unwrap();
        assert_eq!(first.certificate.unwrap().achieved_d, 0);
        let outside = parse_polynomial(&r, "x3").unwrap();
        assert_eq!(represent_ci_thm43(&outside, &fs, NssOptions::default()), Err(Error::NotInIdeal));
    }

    #[test]
    fn gamma_d_small_cases() {
        let r = ring(&["x1", "x2"], Field::Rational);
        let g = gamma_d_sequences(&polys(&r, &["x1", "x2"])).unwrap();
        assert_eq!(g.closure_degrees, vec![1, 1, 1]);
        assert_eq!(g.gamma, vec![0, 0]);
        assert_eq!(g.d, vec![0, 0]);
        assert!(g.cap_holds);
        let g = gamma_d_sequences(&polys(&r, &["x1^2 + x2"])).unwrap();
        assert_eq!(g.d, vec![0]);
        let bad = gamma_d_sequences(&polys(&r, &["x1", "x1*x2"]));
        assert!(matches!(bad, Err(Error::Hypothesis(_))));
    }

    #[test]
    fn power_membership_after_gamma_d() {
        let r = ring(&["x1", "x2"], Field::Rational);
        let hs = polys(&r, &["x1*x2 - 1", "x1"]);
        let g = gamma_d_sequences(&hs).unwrap();
        assert_eq!(g.gamma, vec![0, 2]);
        let one = Polynomial::one(&r);
        assert!(membership_power_check_prop42(&one, &hs, g.last_d() as u32).unwrap());
        assert!(!membership_power_check_prop42(&one, &hs, 1).unwrap());
        assert!(membership_power_check_prop42(&hs[0], &hs, 0).unwrap());
        let outside = ring(&["x1", "x2"], Field::Rational);
        let hs2 = polys(&outside, &["x1"]);
        assert_eq!(
            membership_power_check_prop42(&Polynomial::var(&outside, 1), &hs2, 4),
            Err(Error::NotInIdeal)
        );
    }

    #[test]
    fn lemma_4_5_examples() {
        let r = ring(&["x", "y"], Field::Rational);
        let fs = polys(&r, &["x^2", "1 - x*y"]);
        let c0 = lemma_4_5_check(&fs, NssOptions::default()).unwrap();
        assert_eq!(c0.bound, BigInt::from(2));
        assert!(c0.holds);
        let cp = lemma_4_5_check(
            &fs,
            NssOptions {
                mode: CharMode::CharP,
                ..NssOptions::default()
            },
        )
        .unwrap();
        assert_eq!(cp.bound, BigInt::from(3));
        assert!(cp.holds);
        let lin = polys(&r, &["x + y - 1", "x - y"]);
        let cl = lemma_4_5_check(&lin, NssOptions::default()).unwrap();
        assert_eq!((cl.bound.clone(), cl.delta_estimate), (BigInt::from(1), 1));
        let three = polys(&r, &["x", "y", "x*y - 1"]);
        let rep = geometric_degree_estimate(&three, 4, 3, CharMode::Char0).unwrap();
        assert!(rep.delta_estimate <= 2);
        assert_eq!(lemma_4_5_bound(&[1, 1, 2], 2, CharMode::Char0), BigInt::from(2));
    }

    #[test]
    fn search_modes_agree() {
        for seed in 0..6 {
            let fs = random_unit_system(1 + (seed % 2) as usize, 2, Field::Prime(32003), seed).unwrap();
            let one = Polynomial::one(fs[0].ring());
            let inc = search_certificate(&one, &fs, 20, SearchMode::Incremental).unwrap().unwrap();
            let bis = search_certificate(&one, &fs, 20, SearchMode::Bisection).unwrap().unwrap();
            assert_eq!(inc.achieved_d, bis.achieved_d, "seed {seed}");
            assert!(bis.verify(&fs));
        }
    }

    #[test]
    fn trials_are_seed_deterministic() {
        let r = ring(&["x", "y"], Field::prime(32003).unwrap());
        let fs = polys(&r, &["x^2 + y - 3", "x*y - 1", "y^2 + x"]);
        let a = geometric_degree_estimate(&fs, 4, 11, CharMode::Char0).unwrap();
        let b = geometric_degree_estimate(&fs, 4, 11, CharMode::Char0).unwrap();
        assert_eq!(a, b);
        assert!(a.trials.iter().all(|t| t.delta.is_some() == t.certified));
    }

    #[test]
    fn invariance_under_invertible_recombination() {
        let f = Field::prime(32003).unwrap();
        let r = ring(&["x", "y"], f);
        let fs = polys(&r, &["x^2 + y - 3", "x*y - 1", "y^2 + x"]);
        let c = |v: i64| f.from_i64(v);
        // μ is unipotent, so μ^{-1} is explicit
        let mu = [[c(1), c(0), c(0)], [c(2), c(1), c(0)], [c(-1), c(3), c(1)]];
        let mu_inv = [[c(1), c(0), c(0)], [c(-2), c(1), c(0)], [c(7), c(-3), c(1)]];
        let gs: Vec<Polynomial> = mu
            .iter()
            .map(|row| combine(&r, &fs, row, CharMode::Char0))
            .collect();
        let lambda = vec![vec![c(3), c(1), c(4)], vec![c(0), c(5), c(9)], vec![c(0), c(0), c(2)]];
        let lambda_mapped: Vec<Vec<Coeff>> = lambda
            .iter()
            .map(|row| (0..3).map(|k| (0..3).fold(f.zero(), |acc, j| f.add(&acc, &f.mul(&row[j], &mu_inv[j][k])))).collect())
            .collect();
        let a = delta_for_lambda(&fs, &lambda, CharMode::Char0).unwrap();
        let b = delta_for_lambda(&gs, &lambda_mapped, CharMode::Char0).unwrap();
        assert_eq!(a.combinations, b.combinations);
        assert_eq!((a.t, a.certified, a.delta, a.step_degrees), (b.t, b.certified, b.delta, b.step_degrees));
    }

    #[test]
    fn example_4_1_numbers() {
        let ex = example_4_1(Field::prime(32003).unwrap(), 5, 10).unwrap();
        assert_eq!((ex.inner_degree, ex.input_degree), (2, 10));
        let cmp = example_4_1_comparison(3, 3, 2, 10);
        assert_eq!(cmp.geometric_bound, BigInt::from(684));
        assert_eq!(cmp.degree_power_bound, BigInt::from(1000));
        assert!(cmp.sharper);
        assert!(!example_4_1_comparison(3, 3, 2, 8).sharper);
        let df = geometric_degree_estimate(&ex.fs, 1, 0, CharMode::Char0).unwrap();
        let dh = geometric_degree_estimate(&ex.hs, 1, 0, CharMode::Char0).unwrap();
        assert_eq!(df.delta_estimate, dh.delta_estimate);
    }

    #[test]
    fn unit_systems_are_unit() {
        let f = Field::prime(32003).unwrap();
        for seed in 0..3 {
            let fs = random_unit_system(2, 2, f, seed).unwrap();
            assert_eq!(fs.len(), 3);
            let oracle = least_homogenized_power(&Polynomial::one(fs[0].ring()), &fs, 40).unwrap().unwrap();
            let c = search_certificate(&Polynomial::one(fs[0].ring()), &fs, 40, SearchMode::Incremental)
                .unwrap()
                .unwrap();
            assert_eq!(c.achieved_d, oracle);
            assert!(certificate_at_degree(&Polynomial::one(fs[0].ring()), &fs, c.achieved_d + 2).unwrap().is_some());
        }
    }
}
