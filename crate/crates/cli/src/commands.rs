//! One function per subcommand. Each returns its JSON reports and a status;
//! the binary turns that into output and an exit code.

use hilbound_core::bounds::{self, BoundKind, Hypotheses};
use hilbound_core::nullstellensatz::{self, CharMode, NssOptions, NssRun, SearchMode};
use hilbound_core::{hilbert, macaulay, random, regseq, Error, Ideal, Polynomial};
use serde_json::{json, Value};

use crate::config::{order_name, RunConfig};
use crate::fixtures::{parse_g, System};
use crate::json;

/// Why a run could not produce a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// Unreadable or malformed input, bad flags. Exit code 2.
    Input(String),
    /// A hypothesis could not be certified. Exit code 3.
    Hypothesis(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Input(_) => 2,
            Failure::Hypothesis(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Hypothesis(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Hypothesis(_) | Error::RetriesExhausted { .. } | Error::UnitIdeal | Error::NotInIdeal => {
                Failure::Hypothesis(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// Success, or every checked statement holds.
    Holds,
    /// A bound was violated or nothing was found within it.
    Violated,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub reports: Vec<Value>,
    pub status: Status,
}

impl Outcome {
    fn one(report: Value, ok: bool) -> Self {
        Outcome {
            reports: vec![report],
            status: if ok { Status::Holds } else { Status::Violated },
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Holds => 0,
            Status::Violated => 1,
        }
    }
}

pub type CmdResult = Result<Outcome, Failure>;

fn ideal_of(sys: &System) -> Result<Ideal, Failure> {
    Ok(Ideal::new(&sys.ring, sys.polynomials.clone())?)
}

pub fn gb(sys: &System, cfg: &RunConfig) -> CmdResult {
    let ideal = ideal_of(sys)?.to_order(cfg.order);
    let basis = ideal.groebner_basis();
    Ok(Outcome::one(
        json!({
            "command": "gb",
            "input": sys.name,
            "ring": json::ring(&sys.ring),
            "order": order_name(cfg.order),
            "basis": json::polys(basis.elements()),
            "unit_ideal": basis.is_unit(),
        }),
        true,
    ))
}

/// Hilbert data of the input; with `closure`, inhomogeneous input is
/// replaced by its projective closure.
pub fn hilbert(sys: &System, cfg: &RunConfig, closure: bool) -> CmdResult {
    let mut ideal = ideal_of(sys)?;
    let homogeneous = ideal.is_homogeneous();
    if !homogeneous {
        if !closure {
            return Err(Failure::Input("the ideal is not homogeneous (use --closure)".into()));
        }
        ideal = ideal.projective_closure()?;
    }
    let upto = cfg.max_degree as u64;
    let values = hilbert::hilbert_values(&ideal, upto)?;
    let mut report = match hilbert::hilbert_data(&ideal) {
        Ok(data) => {
            let mut v = json::hilbert(&data, upto);
            v.as_object_mut().expect("object").insert("o_sequence".into(), json!(macaulay::is_o_sequence(&values)));
            v
        }
        Err(Error::UnitIdeal) => json!({
            "unit_ideal": true,
            "hilbert_values": values.iter().map(json::big).collect::<Vec<_>>(),
        }),
        Err(e) => return Err(e.into()),
    };
    let obj = report.as_object_mut().expect("object");
    obj.insert("command".into(), json!("hilbert"));
    obj.insert("input".into(), json!(sys.name));
    obj.insert("ring".into(), json::ring(ideal.ring()));
    obj.insert("projective_closure".into(), json!(!homogeneous));
    Ok(Outcome::one(report, true))
}

/// Which bounds the `bounds` subcommand checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    Thm21,
    Thm22,
    Thm23,
    Thm24,
    Chardin,
}

impl Theorem {
    pub fn parse(s: &str) -> Result<Vec<Theorem>, Failure> {
        Ok(match s {
            "2.1" => vec![Theorem::Thm21],
            "2.2" => vec![Theorem::Thm22],
            "2.3" => vec![Theorem::Thm23],
            "2.4" => vec![Theorem::Thm24],
            "chardin" => vec![Theorem::Chardin],
            "all" => vec![Theorem::Thm23, Theorem::Thm21, Theorem::Thm22, Theorem::Chardin, Theorem::Thm24],
            other => return Err(Failure::Input(format!("unknown theorem `{other}` (2.1, 2.2, 2.3, 2.4, chardin, all)"))),
        })
    }
}

#[derive(Debug, Clone, Default)]
pub struct BoundsArgs {
    pub theorems: Vec<Theorem>,
    pub irr: Option<u64>,
    pub m_range: Option<(i64, i64)>,
    /// Section for Thm 2.4 as polynomial text.
    pub section: Option<String>,
    /// Degree of a random certified section for Thm 2.4.
    pub section_degree: Option<u32>,
}

fn skipped(theorem: &str, why: &str) -> Value {
    json!({"theorem": theorem, "verdict": {"status": "not-applicable", "reason": why}})
}

pub fn bounds(sys: &System, cfg: &RunConfig, args: &BoundsArgs) -> CmdResult {
    let ideal = ideal_of(sys)?;
    if !ideal.is_homogeneous() {
        return Err(Failure::Input("bounds need a homogeneous ideal".into()));
    }
    let explicit = args.theorems.len() == 1;
    let m_range = args.m_range.unwrap_or((1, cfg.max_degree as i64));
    let hyp = if sys.by_construction { Hypotheses::Certified } else { Hypotheses::AssertedByUser };
    let irr = args.irr.or(sys.irreducible_components);
    let gens = ideal.generators();
    let violated = |r: &bounds::BoundReport| matches!(r.verdict, bounds::Verdict::ViolatedAt(_));
    let mut reports = Vec::new();
    let mut ok = true;
    for t in &args.theorems {
        let kind = match t {
            Theorem::Thm23 => BoundKind::LowerThm23,
            Theorem::Thm22 => BoundKind::UpperThm22,
            Theorem::Chardin => BoundKind::Chardin,
            Theorem::Thm21 => BoundKind::UpperThm21,
            Theorem::Thm24 => BoundKind::SectionThm24,
        };
        let report = match kind {
            BoundKind::UpperThm21 if irr.is_none() => {
                if explicit {
                    return Err(Failure::Input("theorem 2.1 needs --irr".into()));
                }
                reports.push(skipped(kind.name(), "component count unknown (pass --irr)"));
                continue;
            }
            BoundKind::SectionThm24 => {
                let section = match (&args.section, args.section_degree) {
                    (Some(src), _) => parse_g(src, ideal.ring())?,
                    (None, Some(k)) => {
                        let mut rng = random::rng_from_seed(random::derive_seed(cfg.seed, 24));
                        random::certified_nonzerodivisor(&ideal, k, cfg.attempts, &mut rng)?
                    }
                    (None, None) if explicit => {
                        return Err(Failure::Input("theorem 2.4 needs --section or --section-degree".into()))
                    }
                    (None, None) => {
                        reports.push(skipped(kind.name(), "no section given"));
                        continue;
                    }
                };
                let r = bounds::check_section_bound(&ideal, &section, hyp, m_range)?;
                ok &= !violated(&r);
                let mut v = json::bound_report(&r, gens);
                v.as_object_mut().expect("object").insert("section".into(), json::poly(&section));
                reports.push(v);
                continue;
            }
            _ => bounds::check_bound(kind, &ideal, irr, hyp, m_range)?,
        };
        ok &= !violated(&report);
        reports.push(json::bound_report(&report, gens));
    }
    Ok(Outcome {
        reports,
        status: if ok { Status::Holds } else { Status::Violated },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegseqMode {
    /// Straighten the input (affine with no form, relative to the form
    /// otherwise).
    Straighten,
    /// Regular sequence in the ideal avoiding the form.
    AvoidForm,
}

pub fn regseq(sys: &System, cfg: &RunConfig, form: Option<&str>, mode: RegseqMode) -> CmdResult {
    let mut rng = random::rng_from_seed(cfg.seed);
    let form = form.map(|src| parse_g(src, &sys.ring)).transpose()?;
    let (report, ok) = match (mode, form) {
        (RegseqMode::Straighten, None) => {
            let r = regseq::straighten_affine_cor32(&sys.polynomials, cfg.attempts, &mut rng)?;
            let v = json::straightening(&r);
            let ok = r.output_regular && r.step_ideals_agree && r.degrees.iter().zip(&r.degree_caps).all(|(d, c)| d <= c);
            (v, ok)
        }
        (RegseqMode::Straighten, Some(f)) => {
            let r = regseq::straighten_prop32(&f, &sys.polynomials, cfg.attempts, &mut rng)?;
            let v = json::straightening(&r);
            let ok = r.output_regular && r.step_ideals_agree && r.degrees.iter().zip(&r.degree_caps).all(|(d, c)| d <= c);
            (v, ok)
        }
        (RegseqMode::AvoidForm, Some(f)) => {
            let ideal = ideal_of(sys)?;
            let s = regseq::regseq_avoiding_hypersurface_thm31(&ideal, &f, cfg.attempts, &mut rng)?;
            let ok = s.certified && s.degrees.iter().zip(&s.caps).all(|(d, c)| d <= c);
            (json::bounded_sequence(&s), ok)
        }
        (RegseqMode::AvoidForm, None) => return Err(Failure::Input("--avoid needs --form".into())),
    };
    let mut report = report;
    let obj = report.as_object_mut().expect("object");
    obj.insert("command".into(), json!("regseq"));
    obj.insert("input".into(), json!(sys.name));
    Ok(Outcome::one(report, ok))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertifyMode {
    /// `g = 1` for a system without common zeros.
    Thm44,
    /// `g` in a complete intersection.
    Thm43,
}

fn run_report(run: &NssRun) -> Value {
    json!({
        "certificate": run.certificate.as_ref().map(json::certificate),
        "geometric_degree": json::degree_report(&run.degree_report),
        "max_input_degree": run.max_degree,
        "bound_D": json::big(&run.bound_d),
        "within_bound": run.within_bound(),
    })
}

pub fn certify(sys: &System, cfg: &RunConfig, g: &str, mode: CertifyMode, char_mode: CharMode, search: SearchMode) -> CmdResult {
    let opts = NssOptions {
        trials: cfg.trials,
        seed: cfg.seed,
        mode: char_mode,
        search,
    };
    let run = match mode {
        CertifyMode::Thm44 => {
            if g != "1" {
                return Err(Failure::Input("--mode thm44 certifies g = 1".into()));
            }
            nullstellensatz::certify_nss_thm44(&sys.polynomials, opts)?
        }
        CertifyMode::Thm43 => {
            let g = parse_g(g, &sys.ring)?;
            nullstellensatz::represent_ci_thm43(&g, &sys.polynomials, opts)?
        }
    };
    let mut report = run_report(&run);
    let obj = report.as_object_mut().expect("object");
    obj.insert("command".into(), json!("certify"));
    obj.insert("input".into(), json!(sys.name));
    obj.insert("system".into(), json::polys(&sys.polynomials));
    obj.insert(
        "mode".into(),
        json!(match mode {
            CertifyMode::Thm44 => "thm44",
            CertifyMode::Thm43 => "thm43",
        }),
    );
    Ok(Outcome::one(report, run.within_bound()))
}

pub fn delta(sys: &System, cfg: &RunConfig, char_mode: CharMode) -> CmdResult {
    let opts = NssOptions {
        trials: cfg.trials,
        seed: cfg.seed,
        mode: char_mode,
        search: SearchMode::Incremental,
    };
    let report = nullstellensatz::geometric_degree_estimate(&sys.polynomials, cfg.trials, cfg.seed, char_mode)?;
    let check = nullstellensatz::lemma_4_5_check(&sys.polynomials, opts)?;
    let mut v = json!({
        "command": "delta",
        "input": sys.name,
        "system": json::polys(&sys.polynomials),
        "geometric_degree": json::degree_report(&report),
        "product_bound": json::lemma45(&check),
    });
    if let Some(inner) = sys.inner_degree {
        let big_d = sys.polynomials.iter().filter_map(Polynomial::degree).max().unwrap_or(0);
        let cmp = nullstellensatz::example_4_1_comparison(sys.ring.nvars(), sys.polynomials.len(), inner, big_d);
        v.as_object_mut().expect("object").insert("degree_comparison".into(), json::example41(&cmp));
    }
    Ok(Outcome::one(v, check.holds))
}

/// Membership of `g`, and of `x0^D g~` in the homogenized ideal, with `D`
/// from the bookkeeping of the sequence unless given.
pub fn membership(sys: &System, g: &str, power: Option<u32>) -> CmdResult {
    let ring = sys.ring.with_graded(false);
    let g = parse_g(g, &ring)?;
    let ideal = Ideal::new(&ring, sys.polynomials.iter().map(|p| p.to_ring(&ring)).collect::<Result<_, _>>()?)?;
    let in_ideal = ideal.contains(&g)?;
    let mut v = json!({
        "command": "membership",
        "input": sys.name,
        "g": json::poly(&g),
        "in_ideal": in_ideal,
    });
    if !in_ideal {
        return Ok(Outcome::one(v, false));
    }
    let obj = v.as_object_mut().expect("object");
    let big_d = match power {
        Some(d) => d,
        None => {
            let gd = nullstellensatz::gamma_d_sequences(&sys.polynomials)?;
            obj.insert("gamma_d".into(), json::gamma_d(&gd));
            u32::try_from(gd.last_d()).map_err(|_| Failure::Hypothesis("negative D".into()))?
        }
    };
    let holds = nullstellensatz::membership_power_check_prop42(&g, &sys.polynomials, big_d)?;
    obj.insert("power".into(), json!(big_d));
    obj.insert("power_membership".into(), json!(holds));
    Ok(Outcome::one(v, holds))
}
