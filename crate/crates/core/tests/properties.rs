use std::sync::Arc;

use hilbound_core::bounds::{self, poincare_lower_series, BoundKind, Hypotheses};
use hilbound_core::macaulay::{binomial, is_o_sequence};
use hilbound_core::nullstellensatz::{certificate_at_degree, random_unit_system};
use hilbound_core::random::{self, RandomPolySpec};
use hilbound_core::{hilbert, Field, Ideal, Polynomial, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const FP: Field = Field::Prime(32003);

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(FP), Just(Field::Prime(7))]
}

fn ring(nvars: usize, f: Field) -> Arc<Ring> {
    Ring::standard("x", nvars, 0, f).unwrap()
}

fn poly(ring: &Arc<Ring>, seed: u64, degree: u32, homogeneous: bool) -> Polynomial {
    let mut rng = random::rng_from_seed(seed);
    let spec = RandomPolySpec {
        degree,
        homogeneous,
        density: 0.6,
        coeff_bound: 20,
    };
    random::random_polynomial(ring, spec, &mut rng)
}

fn forms(ring: &Arc<Ring>, seed: u64, count: usize) -> Vec<Polynomial> {
    (0..count as u64).map(|i| poly(ring, seed ^ (i << 40), 1 + ((seed + i) % 3) as u32, true)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(f in field(), seeds in any::<[u64; 3]>(), degs in [0u32..4, 0u32..4, 0u32..4]) {
        let r = ring(3, f);
        let [a, b, c] = [0, 1, 2].map(|i| poly(&r, seeds[i], degs[i], false));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a + &(-&a)).terms().is_empty());
        prop_assert_eq!((&a * &b).degree(), Some(degs[0] + degs[1]));
    }

    #[test]
    fn homogenize_affinize_round_trip(f in field(), seed in any::<u64>(), deg in 0u32..5) {
        let affine = ring(3, f);
        let projective = affine.projective_closure_ring().unwrap();
        let p = poly(&affine, seed, deg, false);
        let h = p.homogenize(&projective, 0).unwrap();
        prop_assert!(h.is_homogeneous());
        prop_assert_eq!(h.affinize(&affine, 0).unwrap(), p.clone());
        // a form not divisible by x0 comes back unchanged
        let q = poly(&projective, seed, deg.max(1), true);
        let (q, _) = q.strip_var(0);
        prop_assert_eq!(q.affinize(&affine, 0).unwrap().homogenize(&projective, 0).unwrap(), q);
    }

    #[test]
    fn quotients_and_saturation(seed in any::<u64>(), count in 1usize..4) {
        let r = ring(3, FP);
        let ideal = Ideal::new(&r, forms(&r, seed, count)).unwrap();
        let f = poly(&r, seed.wrapping_add(1), 1, true);
        let quotient = ideal.quotient(&f).unwrap();
        prop_assert!(quotient.contains_ideal(&ideal).unwrap());
        prop_assert_eq!(quotient.equals(&ideal).unwrap(), ideal.is_nzd(&f).unwrap());
        // a zero divisor on purpose: x0 times the ideal
        let x0 = Polynomial::var(&r, 0);
        let product = Ideal::new(&r, ideal.generators().iter().map(|g| g * &x0).collect()).unwrap();
        prop_assert!(!product.is_nzd(&x0).unwrap());
        prop_assert!(!product.quotient(&x0).unwrap().equals(&product).unwrap());
        let sat = ideal.saturate(&f).unwrap();
        prop_assert!(sat.quotient(&f).unwrap().equals(&sat).unwrap());
        prop_assert!(sat.contains_ideal(&ideal).unwrap());
    }

    #[test]
    fn projective_closure_is_saturated(seed in any::<u64>(), count in 1usize..4) {
        let affine = ring(2, FP);
        let gens: Vec<Polynomial> =
            (0..count as u64).map(|i| poly(&affine, seed ^ (i << 32), 1 + ((seed + i) % 3) as u32, false)).collect();
        let closure = Ideal::new(&affine, gens.clone()).unwrap().projective_closure().unwrap();
        let projective = closure.ring().clone();
        for g in &gens {
            prop_assert!(closure.contains(&g.homogenize(&projective, 0).unwrap()).unwrap());
        }
        let x0 = Polynomial::var(&projective, 0);
        prop_assert!(closure.quotient(&x0).unwrap().equals(&closure).unwrap());
    }

    #[test]
    fn hilbert_series_polynomial_and_bounds(seed in any::<u64>(), nvars in 2usize..5, count in 1usize..4) {
        let r = ring(nvars, FP);
        let ideal = Ideal::new(&r, forms(&r, seed, count)).unwrap();
        let Ok(data) = hilbert::hilbert_data(&ideal) else { return Ok(()); };
        let onset = data.regularity_onset as i64;
        let values = hilbert::hilbert_values(&ideal, (onset + 10) as u64).unwrap();
        prop_assert!(is_o_sequence(&values));
        for m in 0..=onset + 5 {
            prop_assert_eq!(&data.series.value(m), &values[m as usize]);
        }
        for m in onset..=onset + 10 {
            prop_assert_eq!(data.polynomial_value(m), BigRational::from(values[m as usize].clone()));
        }
        let d = data.projective_dimension;
        if d >= 0 {
            for m in 0..=10 {
                prop_assert!(values.get(m as usize).is_none_or(|h| *h >= binomial(m + d, d)));
            }
            // series form of the lower bound agrees with the per-m check
            let lower = poincare_lower_series(data.degree, d, 15);
            let all = hilbert::hilbert_values(&ideal, 15).unwrap();
            let termwise = lower.iter().zip(&all).all(|(l, h)| h >= l);
            let report = bounds::check_bound(BoundKind::LowerThm23, &ideal, None, Hypotheses::Certified, (1, 15)).unwrap();
            prop_assert_eq!(termwise, report.holds());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn certificates_persist_in_higher_degree(seed in any::<u64>(), n in 1usize..3) {
        let fs = random_unit_system(n, 2, FP, seed).unwrap();
        let one = Polynomial::one(fs[0].ring());
        let found = (0..=8).find(|&d| certificate_at_degree(&one, &fs, d).unwrap().is_some());
        prop_assume!(found.is_some());
        let d = found.unwrap();
        for higher in d..=d + 2 {
            let c = certificate_at_degree(&one, &fs, higher).unwrap();
            prop_assert!(c.is_some_and(|c| c.verify(&fs)));
        }
    }
}

#[test]
fn lower_bound_series_matches_binomials() {
    for (deg, d) in [(1u64, 0i64), (3, 1), (2, 2), (5, 3)] {
        let series = poincare_lower_series(deg, d, 15);
        for m in 1..=15 {
            let direct = binomial(m + d + 1, d + 1) - binomial(m - deg as i64 + d + 1, d + 1);
            assert_eq!(series[m as usize], direct, "deg {deg}, d {d}, m {m}");
        }
        assert_eq!(series[0], BigInt::from(1));
    }
}
