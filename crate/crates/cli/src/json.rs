//! JSON renderings of the core reports. Integers that can outgrow 64 bits
//! (degrees, binomials, bounds) and all coefficients are decimal strings.

use hilbound_core::bounds::{BoundReport, BoundRow, Verdict};
use hilbound_core::hilbert::HilbertData;
use hilbound_core::nullstellensatz::{
    Certificate, DegreeTrial, Example41Comparison, GammaD, GeometricDegreeReport, Lemma45Check,
};
use hilbound_core::parse::format_header;
use hilbound_core::regseq::{BoundedSequence, StraighteningResult};
use hilbound_core::{Coeff, Polynomial, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

pub fn big(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

pub fn ratio(v: &BigRational) -> Value {
    if v.is_integer() {
        Value::String(v.numer().to_string())
    } else {
        Value::String(format!("{}/{}", v.numer(), v.denom()))
    }
}

pub fn poly(p: &Polynomial) -> Value {
    Value::String(p.to_string())
}

pub fn polys(ps: &[Polynomial]) -> Value {
    Value::Array(ps.iter().map(poly).collect())
}

pub fn coeff(c: &Coeff) -> Value {
    Value::String(c.to_string())
}

pub fn ring(r: &Ring) -> Value {
    Value::String(format_header(r))
}

pub fn hilbert(data: &HilbertData, upto: u64) -> Value {
    json!({
        "dimension": data.projective_dimension,
        "degree": data.degree.to_string(),
        "regularity_onset": data.regularity_onset,
        "hilbert_values": (0..=upto as i64).map(|m| big(&data.value(m))).collect::<Vec<_>>(),
        "hilbert_polynomial": data.hilbert_polynomial.iter().map(ratio).collect::<Vec<_>>(),
    })
}

fn verdict(v: &Verdict) -> Value {
    match v {
        Verdict::Holds => json!({"status": "holds"}),
        Verdict::ViolatedAt(m) => json!({"status": "violated", "m": m}),
        Verdict::NotApplicable(why) => json!({"status": "not-applicable", "reason": why}),
    }
}

fn row(r: &BoundRow) -> Value {
    json!({
        "m": r.m,
        "lower": r.lower.as_ref().map(big),
        "actual": big(&r.actual),
        "upper": r.upper.as_ref().map(big),
    })
}

pub fn bound_report(r: &BoundReport, generators: &[Polynomial]) -> Value {
    json!({
        "theorem": r.kind.name(),
        "ideal": polys(generators),
        "m_range": [r.m_range.0, r.m_range.1],
        "dimension": r.dimension,
        "degree": r.degree.to_string(),
        "rows": r.rows.iter().map(row).collect::<Vec<_>>(),
        "verdict": verdict(&r.verdict),
        "extremal": r.extremal,
        "hypotheses": r.hypotheses.name(),
    })
}

pub fn straightening(r: &StraighteningResult) -> Value {
    json!({
        "F": poly(&r.big_f),
        "input": polys(&r.input),
        "output": polys(&r.output),
        "exponents": r.exponents,
        "corrections": polys(&r.corrections),
        "contraction_degrees": r.contraction_degrees.iter().map(u64::to_string).collect::<Vec<_>>(),
        "degree_caps": r.degree_caps.iter().map(u64::to_string).collect::<Vec<_>>(),
        "degrees": r.degrees,
        "homogenized_output": polys(&r.homogenized_output),
        "input_regular": r.input_regular,
        "output_regular": r.output_regular,
        "step_ideals_agree": r.step_ideals_agree,
        "within_caps": r.degrees.iter().zip(&r.degree_caps).all(|(d, c)| d <= c),
    })
}

pub fn bounded_sequence(s: &BoundedSequence) -> Value {
    json!({
        "elements": polys(&s.elements),
        "degrees": s.degrees,
        "caps": s.caps.iter().map(u64::to_string).collect::<Vec<_>>(),
        "certified": s.certified,
    })
}

fn trial(t: &DegreeTrial) -> Value {
    json!({
        "kind": t.kind.name(),
        "seed": t.seed.to_string(),
        "lambda": t.lambda.iter().map(|r| r.iter().map(coeff).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "combinations": polys(&t.combinations),
        "t": t.t,
        "step_degrees": t.step_degrees.iter().map(u64::to_string).collect::<Vec<_>>(),
        "certified": t.certified,
        "delta": t.delta.map(|d| d.to_string()),
    })
}

pub fn degree_report(r: &GeometricDegreeReport) -> Value {
    json!({
        "n": r.nvars,
        "s": r.system_size,
        "char_mode": r.char_mode.name(),
        "trials": r.trials.iter().map(trial).collect::<Vec<_>>(),
        "delta_estimate": r.delta_estimate.to_string(),
        "estimate": "upper estimate: minimum over sampled combinations only",
        "radicality_verified": r.radicality_verified,
    })
}

pub fn certificate(c: &Certificate) -> Value {
    json!({
        "g": poly(&c.g),
        "cofactors": polys(&c.cofactors),
        "achieved_D": c.achieved_d,
        "bound_D": c.bound_d.as_ref().map(big),
        "verified": c.verified,
    })
}

pub fn gamma_d(g: &GammaD) -> Value {
    json!({
        "n": g.nvars,
        "degrees": g.degrees,
        "closure_degrees": g.closure_degrees.iter().map(u64::to_string).collect::<Vec<_>>(),
        "c": g.c.iter().map(i64::to_string).collect::<Vec<_>>(),
        "gamma": g.gamma.iter().map(i64::to_string).collect::<Vec<_>>(),
        "D": g.d.iter().map(i64::to_string).collect::<Vec<_>>(),
        "cap": big(&g.cap),
        "cap_holds": g.cap_holds,
    })
}

pub fn lemma45(c: &Lemma45Check) -> Value {
    json!({
        "char_mode": c.char_mode.name(),
        "degrees_descending": c.degrees_descending,
        "bound": big(&c.bound),
        "delta_estimate": c.delta_estimate.to_string(),
        "trials_used": c.trials_used,
        "holds": c.holds,
    })
}

pub fn example41(c: &Example41Comparison) -> Value {
    json!({
        "n": c.n,
        "s": c.s,
        "inner_degree": c.inner_degree,
        "input_degree": c.input_degree,
        "geometric_bound": big(&c.geometric_bound),
        "degree_power_bound": big(&c.degree_power_bound),
        "sharper": c.sharper,
    })
}

/// `key: value` lines for the text output format.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    flatten("", v, &mut out);
    out
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{prefix}: [{}]\n", parts.join(", ")));
        }
        _ => out.push_str(&format!("{prefix}: {}\n", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
