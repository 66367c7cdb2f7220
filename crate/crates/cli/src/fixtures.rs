//! Built-in fixture generators and input loading.

use std::path::Path;
use std::sync::Arc;

use hilbound_core::bounds::{self, Fixture};
use hilbound_core::parse::{parse_ideal_file, parse_polynomial};
use hilbound_core::random;
use hilbound_core::{nullstellensatz, regseq, Coeff, Field, Polynomial, Ring};

use crate::commands::Failure;
use crate::config::RunConfig;

/// A polynomial system ready for a subcommand.
#[derive(Debug, Clone)]
pub struct System {
    pub name: String,
    pub ring: Arc<Ring>,
    pub polynomials: Vec<Polynomial>,
    pub irreducible_components: Option<u64>,
    /// Fixtures satisfy their theorems' hypotheses by construction.
    pub by_construction: bool,
    /// Degree of the hidden low-degree system, for `example41`.
    pub inner_degree: Option<u32>,
}

/// `(pattern, description)` for every generator accepted by `--fixture`.
pub const FIXTURES: &[(&str, &str)] = &[
    ("rnc:<n>", "rational normal curve of degree n in P^n"),
    (
        "cndelta:<n>:<d1,d2,...>",
        "disjoint rational normal curves of degrees d_j in P^n",
    ),
    (
        "hyp:<n>:<d>:<e>",
        "degree-e hypersurface inside a (d+1)-dimensional linear subspace of P^n",
    ),
    ("points:<n>:<count>", "random points of P^n in the chart x0 = 1"),
    ("random:<seed>", "random homogeneous ideal, <= 4 variables, <= 4 generators of degree <= 4"),
    ("example31[:<d>]", "affine system x1, x1^(d+1) + x2, x1^(d+1) + x3 (d = 2 by default)"),
    ("example41:<seed>", "f_i = h_i + u_i over a degree-2 unit-ideal sequence h, input degree 10"),
    ("unit:<n>:<seed>", "n + 1 random affine polynomials of degree <= 3 generating the unit ideal"),
];

fn bad(spec: &str, why: &str) -> Failure {
    Failure::Input(format!("fixture `{spec}`: {why}"))
}

fn num<T: std::str::FromStr>(spec: &str, s: Option<&str>, what: &str) -> Result<T, Failure> {
    s.ok_or_else(|| bad(spec, &format!("missing {what}")))?
        .trim()
        .parse()
        .map_err(|_| bad(spec, &format!("bad {what}")))
}

fn from_fixture(f: Fixture) -> System {
    System {
        name: f.name,
        ring: f.ideal.ring().clone(),
        polynomials: f.ideal.generators().to_vec(),
        irreducible_components: f.irreducible_components,
        by_construction: true,
        inner_degree: None,
    }
}

fn from_polys(name: String, polys: Vec<Polynomial>) -> System {
    System {
        name,
        ring: polys[0].ring().clone(),
        polynomials: polys,
        irreducible_components: None,
        by_construction: true,
        inner_degree: None,
    }
}

/// A random homogeneous ideal in 2 to 4 variables.
pub fn random_ideal(field: Field, seed: u64) -> Result<System, Failure> {
    use rand::Rng;
    let mut rng = random::rng_from_seed(seed);
    let nvars = rng.gen_range(2..=4);
    let ring = Ring::standard("x", nvars, 0, field)?;
    let gens = random::random_homogeneous_generators(&ring, 4, 4, 0.6, &mut rng);
    Ok(System {
        name: format!("random:{seed}"),
        ring,
        polynomials: gens,
        irreducible_components: None,
        by_construction: false,
        inner_degree: None,
    })
}

pub fn parse_fixture(spec: &str, cfg: &RunConfig) -> Result<System, Failure> {
    let field = cfg.fixture_field();
    let mut parts = spec.split(':');
    let kind = parts.next().unwrap_or_default();
    let sys = match kind {
        "rnc" => from_fixture(bounds::rational_normal_curve(num(spec, parts.next(), "n")?, field)?),
        "cndelta" => {
            let n = num(spec, parts.next(), "n")?;
            let list = parts.next().ok_or_else(|| bad(spec, "missing degree list"))?;
            let delta = list
                .split(',')
                .map(|d| d.trim().parse::<usize>().map_err(|_| bad(spec, "bad degree list")))
                .collect::<Result<Vec<_>, _>>()?;
            from_fixture(bounds::c_n_delta(n, &delta, field)?)
        }
        "hyp" => {
            let n = num(spec, parts.next(), "n")?;
            let d = num(spec, parts.next(), "d")?;
            let e = num(spec, parts.next(), "e")?;
            from_fixture(bounds::hypersurface_in_subspace(n, d, e, field, cfg.seed)?)
        }
        "points" => {
            let n = num(spec, parts.next(), "n")?;
            let count = num(spec, parts.next(), "count")?;
            from_fixture(bounds::points(n, count, field, cfg.seed)?)
        }
        "random" => random_ideal(field, num(spec, parts.next(), "seed")?)?,
        "example31" => {
            let d = match parts.next() {
                Some(s) => num(spec, Some(s), "d")?,
                None => 2,
            };
            from_polys(format!("example31:{d}"), regseq::example_3_1_affine(d, field)?)
        }
        "example41" => {
            let seed = num(spec, parts.next(), "seed")?;
            let ex = nullstellensatz::example_4_1(field, seed, 10)?;
            let mut sys = from_polys(format!("example41:{seed}"), ex.fs);
            sys.inner_degree = Some(ex.inner_degree);
            sys
        }
        "unit" => {
            let n = num(spec, parts.next(), "n")?;
            let seed = num(spec, parts.next(), "seed")?;
            from_polys(format!("unit:{n}:{seed}"), nullstellensatz::random_unit_system(n, 3, field, seed)?)
        }
        _ => return Err(bad(spec, "unknown generator (see --fixtures)")),
    };
    if parts.next().is_some() {
        return Err(bad(spec, "too many fields"));
    }
    Ok(sys)
}

/// Re-expresses `p` over `ring`, which has the same variables and possibly
/// another field.
pub fn change_field(p: &Polynomial, ring: &Arc<Ring>) -> Result<Polynomial, Failure> {
    let from = p.field();
    let to = ring.field();
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| Ok((*m, to.from_ratio(&from.to_ratio(c))?)))
        .collect::<Result<Vec<(_, Coeff)>, Failure>>()?;
    Ok(Polynomial::from_terms(ring, terms))
}

pub fn load_file(path: &Path, cfg: &RunConfig) -> Result<System, Failure> {
    let src = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let file = parse_ideal_file(&src).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let mut ring = file.ring;
    let mut polynomials = file.polynomials;
    if let Some(field) = cfg.field {
        if field != ring.field() {
            ring = ring.with_field(field);
            polynomials = polynomials.iter().map(|p| change_field(p, &ring)).collect::<Result<_, _>>()?;
        }
    }
    Ok(System {
        name: path.display().to_string(),
        ring,
        polynomials,
        irreducible_components: None,
        by_construction: false,
        inner_degree: None,
    })
}

pub fn load_input(path: Option<&Path>, fixture: Option<&str>, cfg: &RunConfig) -> Result<System, Failure> {
    match (path, fixture) {
        (Some(p), None) => load_file(p, cfg),
        (None, Some(f)) => parse_fixture(f, cfg),
        _ => Err(Failure::Input("give exactly one of an input file or --fixture".into())),
    }
}

/// `"1"`, a path to a file holding one polynomial, or polynomial text.
pub fn parse_g(src: &str, ring: &Arc<Ring>) -> Result<Polynomial, Failure> {
    let path = Path::new(src);
    let text = if src != "1" && path.is_file() {
        let body = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{src}: {e}")))?;
        body.lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with("ring:"))
            .ok_or_else(|| Failure::Input(format!("{src}: no polynomial found")))?
            .to_string()
    } else {
        src.to_string()
    };
    parse_polynomial(ring, &text).map_err(|e| Failure::Input(format!("--g: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_generator_parses() {
        let cfg = RunConfig::default();
        for spec in ["rnc:3", "cndelta:4:2,1", "hyp:3:1:2", "points:2:3", "random:5", "example31", "example31:3", "example41:1", "unit:2:0"] {
            let sys = parse_fixture(spec, &cfg).unwrap_or_else(|e| panic!("{spec}: {e:?}"));
            assert!(!sys.polynomials.is_empty(), "{spec}");
        }
    }

    #[test]
    fn malformed_specs_are_input_errors() {
        let cfg = RunConfig::default();
        for spec in ["rnc", "rnc:x", "cndelta:4", "nope:1", "rnc:3:4"] {
            assert!(matches!(parse_fixture(spec, &cfg), Err(Failure::Input(_))), "{spec}");
        }
    }

    #[test]
    fn field_change_reduces_coefficients() {
        let q = Ring::standard("x", 2, 0, Field::Rational).unwrap();
        let p = parse_polynomial(&q, "1/2*x0 - 3*x1").unwrap();
        let f7 = q.with_field(Field::prime(7).unwrap());
        let r = change_field(&p, &f7).unwrap();
        assert_eq!(r, parse_polynomial(&f7, "4*x0 + 4*x1").unwrap());
    }
}
