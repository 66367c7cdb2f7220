//! Seeded randomness. Every generic choice in the library draws from a
//! `ChaCha8Rng`, so a fixed seed reproduces a run exactly.

use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derives an independent sub-seed, e.g. one per trial.
pub fn derive_seed(master: u64, stream: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(stream);
    rng.gen()
}

/// All monomials of exactly `degree` in `nvars` variables, in lex-descending
/// enumeration order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = alloc::vec![0u32; nvars];
    fill(&mut out, &mut exps, 0, degree);
    out
}

fn fill(out: &mut Vec<Monomial>, exps: &mut [u32], index: usize, remaining: u32) {
    if index + 1 == exps.len() {
        exps[index] = remaining;
        out.push(Monomial::from_exponents(exps));
        return;
    }
    for e in (0..=remaining).rev() {
        exps[index] = e;
        fill(out, exps, index + 1, remaining - e);
    }
    exps[index] = 0;
}

/// Monomials of degree at most `degree`.
pub fn monomials_up_to_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    (0..=degree)
        .rev()
        .flat_map(|d| monomials_of_degree(nvars, d))
        .collect()
}

/// Shape of a random polynomial.
#[derive(Debug, Clone, Copy)]
pub struct RandomPolySpec {
    pub degree: u32,
    pub homogeneous: bool,
    /// Probability that any given monomial gets a nonzero coefficient.
    pub density: f64,
    /// Coefficient range `[-bound, bound]` over `Q`.
    pub coeff_bound: i64,
}

impl RandomPolySpec {
    pub fn dense(degree: u32, homogeneous: bool) -> Self {
        RandomPolySpec {
            degree,
            homogeneous,
            density: 1.0,
            coeff_bound: 9,
        }
    }
}

/// A random polynomial of exactly the requested degree. At least one
/// monomial of top degree always receives a nonzero coefficient.
pub fn random_polynomial<R: Rng + ?Sized>(ring: &Arc<Ring>, spec: RandomPolySpec, rng: &mut R) -> Polynomial {
    let field = ring.field();
    let monos = if spec.homogeneous {
        monomials_of_degree(ring.nvars(), spec.degree)
    } else {
        monomials_up_to_degree(ring.nvars(), spec.degree)
    };
    let mut terms = Vec::new();
    for m in &monos {
        if spec.density >= 1.0 || rng.gen_bool(spec.density.clamp(0.0, 1.0)) {
            terms.push((*m, field.random_nonzero(rng, spec.coeff_bound)));
        }
    }
    if !terms.iter().any(|(m, _)| m.degree() == spec.degree) {
        let top: Vec<&Monomial> = monos.iter().filter(|m| m.degree() == spec.degree).collect();
        let m = *top[rng.gen_range(0..top.len())];
        terms.push((m, field.random_nonzero(rng, spec.coeff_bound)));
    }
    Polynomial::from_terms(ring, terms)
}

/// A random homogeneous element of degree `degree` in the ideal generated by
/// homogeneous `gens`: a random combination of all products `x^a * g` landing
/// in that degree. Returns zero when no generator has degree `<= degree`.
pub fn random_ideal_element<R: Rng + ?Sized>(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
    degree: u32,
    rng: &mut R,
) -> Polynomial {
    let field = ring.field();
    let mut acc = Polynomial::zero(ring);
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        if dg > degree {
            continue;
        }
        for m in monomials_of_degree(ring.nvars(), degree - dg) {
            let c = field.random_nonzero(rng, 5);
            acc = acc.merge(g, Some((&m, &c)));
        }
    }
    acc
}

/// Homogeneous generators with `1..=max_gens` elements of degrees in
/// `1..=max_degree`, each monomial kept with probability `density`.
pub fn random_homogeneous_generators<R: Rng + ?Sized>(
    ring: &Arc<Ring>,
    max_gens: usize,
    max_degree: u32,
    density: f64,
    rng: &mut R,
) -> Vec<Polynomial> {
    let count = rng.gen_range(1..=max_gens.max(1));
    (0..count)
        .map(|_| {
            let spec = RandomPolySpec {
                degree: rng.gen_range(1..=max_degree.max(1)),
                homogeneous: true,
                density,
                coeff_bound: 9,
            };
            random_polynomial(ring, spec, rng)
        })
        .collect()
}

/// A random homogeneous form of the given degree that is a nonzerodivisor
/// modulo `ideal`, certified by an ideal quotient. Gives up after
/// `attempts` draws.
pub fn certified_nonzerodivisor<R: Rng + ?Sized>(
    ideal: &Ideal,
    degree: u32,
    attempts: usize,
    rng: &mut R,
) -> Result<Polynomial> {
    let spec = RandomPolySpec::dense(degree, true);
    for _ in 0..attempts {
        let f = random_polynomial(ideal.ring(), spec, rng);
        if ideal.is_nzd(&f)? {
            return Ok(f);
        }
    }
    Err(Error::RetriesExhausted {
        attempts,
        context: alloc::format!("nonzerodivisor of degree {degree}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::MonomialOrder;
    use crate::scalar::Field;

    #[test]
    fn monomial_counts_match_binomials() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_up_to_degree(2, 3).len(), 10);
    }

    #[test]
    fn seeded_polynomials_are_reproducible() {
        let r = Ring::standard("x", 3, 0, Field::Rational).unwrap();
        let spec = RandomPolySpec::dense(2, true);
        let a = random_polynomial(&r, spec, &mut rng_from_seed(7));
        let b = random_polynomial(&r, spec, &mut rng_from_seed(7));
        assert_eq!(a, b);
        assert_eq!(a.len(), 6);
        assert!(a.terms().iter().all(|(m, _)| m.degree() == 2));
    }

    #[test]
    fn degree_zero_is_a_nonzero_constant() {
        let r = Ring::new(&["x"], Field::prime(101).unwrap(), MonomialOrder::Lex).unwrap();
        let spec = RandomPolySpec {
            degree: 0,
            homogeneous: false,
            density: 0.1,
            coeff_bound: 3,
        };
        for seed in 0..20 {
            let f = random_polynomial(&r, spec, &mut rng_from_seed(seed));
            assert!(f.is_unit());
        }
    }

    #[test]
    fn certified_forms_are_nonzerodivisors() {
        let r = Ring::standard("x", 3, 0, Field::prime(32003).unwrap()).unwrap();
        let x = |i| Polynomial::var(&r, i);
        let ideal = Ideal::new(&r, alloc::vec![&x(0) * &x(1)]).unwrap();
        let mut rng = rng_from_seed(3);
        let f = certified_nonzerodivisor(&ideal, 1, 8, &mut rng).unwrap();
        assert!(ideal.is_nzd(&f).unwrap());
        // modulo the irrelevant ideal nothing of positive degree is a nonzerodivisor
        let all = Ideal::irrelevant(&r);
        let err = certified_nonzerodivisor(&all, 1, 3, &mut rng).unwrap_err();
        assert!(matches!(err, Error::RetriesExhausted { attempts: 3, .. }));
    }

    #[test]
    fn random_generators_respect_shape() {
        let r = Ring::standard("x", 4, 0, Field::prime(32003).unwrap()).unwrap();
        let mut rng = rng_from_seed(11);
        for _ in 0..20 {
            let gens = random_homogeneous_generators(&r, 4, 4, 0.5, &mut rng);
            assert!((1..=4).contains(&gens.len()));
            assert!(gens.iter().all(|g| g.is_homogeneous() && (1..=4).contains(&g.degree().unwrap())));
        }
    }
}
