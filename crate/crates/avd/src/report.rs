//! Machine-readable and human-readable report rendering.
//!
//! Every number in JSON and CSV output is an exact decimal string; rationals
//! are `{"num": "...", "den": "..."}`. Floating-point approximations appear
//! only in text output and are marked with `≈`.

use avd_core::critical::{CheckReport, SetProfile, Verdict, Witness};
use avd_core::domination::{approximate, BoundCheck, BoundVerdict};
use avd_core::extremal::{ExtremalResult, SearchConstraint, TheoremReport};
use avd_core::poly::{ModeSurvey, PolyReport, SurveyRow};
use avd_core::{AvdSummary, CriticalAggregates, DominationTally, VertexSet};
use num_rational::BigRational;
use serde_json::{json, Value};

pub fn rational(r: &BigRational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

/// `p/q`, or `p` when the denominator is one.
pub fn rational_text(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn vertex_list(s: VertexSet) -> Value {
    Value::Array(s.iter().map(|v| json!(v)).collect())
}

pub fn coefficient_strings(t: &DominationTally) -> Vec<String> {
    t.coefficients().iter().map(ToString::to_string).collect()
}

pub fn tally_json(graph6: &str, t: &DominationTally, s: &AvdSummary) -> Value {
    json!({
        "graph6": graph6,
        "n": s.order,
        "d": coefficient_strings(t),
        "gamma": s.domination_number,
        "Gamma": s.total.to_string(),
        "GammaPrime": s.weighted_total.to_string(),
        "avd": rational(&s.avd),
    })
}

fn verdict_name(v: BoundVerdict) -> &'static str {
    match v {
        BoundVerdict::HoldsStrict => "holds_strict",
        BoundVerdict::HoldsEquality => "holds_equality",
        BoundVerdict::Violated => "violated",
        BoundVerdict::NotApplicable => "not_applicable",
    }
}

pub fn avd_json(graph6: &str, s: &AvdSummary, b: &BoundCheck) -> Value {
    json!({
        "graph6": graph6,
        "n": s.order,
        "gamma": s.domination_number,
        "Gamma": s.total.to_string(),
        "GammaPrime": s.weighted_total.to_string(),
        "avd": rational(&s.avd),
        "isolated": b.isolated,
        "star_like": b.star_like,
        "bound": b.bound.as_ref().map(rational),
        "verdict": verdict_name(b.verdict),
    })
}

pub fn avd_text(graph6: &str, s: &AvdSummary, b: &BoundCheck) -> String {
    let mut line = format!(
        "{graph6}\tn={}\tavd={}\t(≈ {:.6})\tGamma={}\tGammaPrime={}",
        s.order,
        rational_text(&s.avd),
        approximate(&s.avd),
        s.total,
        s.weighted_total
    );
    if let Some(bound) = &b.bound {
        line.push_str(&format!("\tbound={}\t{}", rational_text(bound), verdict_name(b.verdict)));
    }
    line
}

pub fn bound_report_json(graph6: &str, b: &BoundCheck) -> Value {
    json!({
        "check": "avd_bound",
        "graph6": graph6,
        "holds": b.holds(),
        "verdict": verdict_name(b.verdict),
        "relation": "<=",
        "lhs": b.avd.as_ref().map(rational_text),
        "rhs": b.bound.as_ref().map(rational_text),
        "witness": json!({ "star_like": b.star_like, "isolated": b.isolated, "classification_consistent": b.classification_consistent }),
    })
}

pub fn profile_json(p: &SetProfile) -> Value {
    json!({
        "S": vertex_list(p.set),
        "a": vertex_list(p.critical),
        "a1": vertex_list(p.critical_one),
        "a2": vertex_list(p.critical_two),
        "N1": vertex_list(p.outside_one),
        "N2": vertex_list(p.outside_two),
    })
}

pub fn aggregates_json(a: &CriticalAggregates) -> Value {
    json!({
        "sum_a": a.sum_a.to_string(),
        "sum_a1": a.sum_a1.to_string(),
        "sum_a2": a.sum_a2.to_string(),
        "sum_N1": a.sum_n1.to_string(),
        "sum_N2": a.sum_n2.to_string(),
        "sum_N": a.sum_n.to_string(),
        "family_size": a.family_size.to_string(),
    })
}

fn check_detail(r: &CheckReport) -> Value {
    use avd_core::critical::Check;
    match r.check {
        Check::DegreeTwo { vertex } => json!({ "vertex": vertex }),
        Check::StemLeaves { stems, stem, k } => {
            json!({ "stems": vertex_list(stems), "stem": stem, "k": k })
        }
        Check::RestrictedCriticalOne { stems } => json!({ "stems": vertex_list(stems) }),
        _ => Value::Null,
    }
}

fn verdict_holds(v: Verdict) -> Value {
    match v {
        Verdict::Holds => json!(true),
        Verdict::Violated => json!(false),
        Verdict::NotApplicable => Value::Null,
    }
}

pub fn check_json(graph6: &str, r: &CheckReport) -> Value {
    let witness = match &r.witness {
        None => Value::Null,
        Some(Witness::Profile(p)) => profile_json(p),
        Some(Witness::PairCounts(a)) => aggregates_json(a),
    };
    json!({
        "check": r.check.name(),
        "graph6": graph6,
        "holds": verdict_holds(r.verdict),
        "relation": r.relation.symbol(),
        "lhs": r.lhs.to_string(),
        "rhs": r.rhs.to_string(),
        "detail": check_detail(r),
        "witness": witness,
    })
}

pub fn check_text(graph6: &str, r: &CheckReport) -> String {
    let status = match r.verdict {
        Verdict::Holds => "holds",
        Verdict::Violated => "VIOLATED",
        Verdict::NotApplicable => "n/a",
    };
    let detail = check_detail(r);
    let detail = if detail.is_null() { String::new() } else { format!(" {detail}") };
    format!(
        "{graph6}\t{}{detail}\t{} {} {}\t{status}",
        r.check.name(),
        r.lhs,
        r.relation.symbol(),
        r.rhs
    )
}

pub fn poly_json(graph6: &str, p: &PolyReport) -> Value {
    json!({
        "graph6": graph6,
        "coeffs": coefficient_strings(&p.coefficients),
        "mode": p.mode_indices,
        "unimodal": p.unimodal,
        "real_rooted": p.real_rooted,
        "darroch": p.darroch_consistent,
        "avd": rational(&p.avd),
    })
}

pub fn constraint_json(c: &SearchConstraint) -> Value {
    json!({
        "n": c.n,
        "min_degree": c.min_degree,
        "connected": c.connected,
        "no_isolated": c.no_isolated,
    })
}

pub fn search_json(r: &ExtremalResult) -> Value {
    json!({
        "constraint": constraint_json(&r.constraint),
        "best_avd": rational(&r.best_avd),
        "argmax": r.argmax,
        "examined": r.examined,
    })
}

pub fn search_text(r: &ExtremalResult) -> String {
    format!(
        "constraint: {}\nexamined: {}\nbest avd: {} (≈ {:.6})\nargmax: {}",
        r.constraint,
        r.examined,
        rational_text(&r.best_avd),
        approximate(&r.best_avd),
        r.argmax.join(" ")
    )
}

pub fn survey_row_json(r: &SurveyRow) -> Value {
    json!({
        "graph6": r.graph6,
        "mode": r.mode_indices,
        "largest_mode": r.largest_mode,
        "star_like": r.star_like,
    })
}

pub fn survey_summary_json(n: usize, s: &ModeSurvey) -> Value {
    json!({
        "n": n,
        "examined": s.examined,
        "max_mode_index": s.max_mode_index,
        "attaining": s.attaining,
        "star_like_attains": s.star_like_attains,
    })
}

/// CSV with one row per graph followed by a summary row.
pub fn survey_csv(rows: &[SurveyRow], summary: &ModeSurvey) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["kind", "graph6", "mode", "largest_mode", "star_like"])?;
    for r in rows {
        let modes: Vec<String> = r.mode_indices.iter().map(ToString::to_string).collect();
        w.write_record([
            "graph",
            &r.graph6,
            &modes.join(";"),
            &r.largest_mode.to_string(),
            &r.star_like.to_string(),
        ])?;
    }
    w.write_record([
        "summary",
        &summary.attaining.join(";"),
        "",
        &summary.max_mode_index.map(|m| m.to_string()).unwrap_or_default(),
        &summary.star_like_attains.to_string(),
    ])?;
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("CSV of ASCII fields"))
}

pub fn theorem_json(r: &TheoremReport) -> Value {
    json!({
        "check": "avd_bound_classification",
        "n": r.n,
        "holds": r.holds(),
        "examined": r.examined,
        "star_like": r.star_like,
        "equality": r.equality,
        "mismatches": r.mismatches,
        "violations": r.violations,
    })
}
