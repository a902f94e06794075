//! JSON encodings of traces, automorphisms and decisions.
//!
//! Rationals are strings `"a"` or `"a/b"`. A trace is
//! `{"steps": [...], "degrees": [...]}` where each step carries a `type`
//! and, depending on it, `mu`, `k`, `f` or `matrix`; `degrees` lists the
//! degree reached after each step.

use serde_json::{json, Map, Value};

use tamecurve::curves::EquivDecision;
use tamecurve::et::{EtStep, ReductionTrace};
use tamecurve::poly::rat::fmt_rat;
use tamecurve::poly::{BiPoly, Rat, UniPoly};
use tamecurve::tame::{AutoStep, TameAuto};

pub fn rat(r: &Rat) -> Value {
    Value::String(fmt_rat(r))
}

fn rats<'a>(rs: impl IntoIterator<Item = &'a Rat>) -> Value {
    Value::Array(rs.into_iter().map(rat).collect())
}

pub fn et_step(step: &EtStep) -> Value {
    match step {
        EtStep::AddPower1 { mu, k } => json!({"type": "ET1", "mu": rat(mu), "k": k}),
        EtStep::AddPower2 { mu, k } => json!({"type": "ET2", "mu": rat(mu), "k": k}),
        EtStep::Linear { a1, a2, b1, b2 } => {
            json!({"type": "linear", "matrix": [rats([a1, a2]), rats([b1, b2])]})
        }
    }
}

pub fn et_trace(trace: &ReductionTrace) -> Value {
    json!({
        "steps": trace.steps.iter().map(et_step).collect::<Vec<_>>(),
        "degrees": trace.degree_profile,
    })
}

/// `(mu, k)` when `f = mu * var^k`.
fn as_monomial(f: &UniPoly) -> Option<(Rat, usize)> {
    let k = f.degree()?;
    let nonzero = f.coeffs().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count();
    (nonzero == 1).then(|| (f.coeff(k), k))
}

pub fn auto_step(step: &AutoStep) -> Value {
    let elem = |kind: &str, f: &UniPoly, var: &str| {
        let mut m = Map::new();
        m.insert("type".into(), kind.into());
        m.insert("f".into(), f.fmt_with(var).into());
        if let Some((mu, k)) = as_monomial(f) {
            m.insert("mu".into(), rat(&mu));
            m.insert("k".into(), k.into());
        }
        Value::Object(m)
    };
    match step {
        AutoStep::ElemX(f) => elem("elem_x", f, "y"),
        AutoStep::ElemY(f) => elem("elem_y", f, "x"),
        AutoStep::Affine(a) => json!({
            "type": "affine",
            "matrix": [rats([&a.a1, &a.a2, &a.a3]), rats([&a.b1, &a.b2, &a.b3])],
        }),
    }
}

/// The automorphism as a trace; `degrees` follows the total degree of `p`
/// through the steps.
pub fn auto_trace(auto: &TameAuto, p: &BiPoly) -> Value {
    let mut current = p.clone();
    let degrees: Vec<Option<u32>> = auto
        .steps
        .iter()
        .map(|s| {
            current = s.apply(&current);
            current.total_degree()
        })
        .collect();
    json!({
        "steps": auto.steps.iter().map(auto_step).collect::<Vec<_>>(),
        "degrees": degrees,
    })
}

pub fn decision(d: &EquivDecision, p: &BiPoly) -> Value {
    match d {
        EquivDecision::Equivalent { witness, scale } => json!({
            "verdict": d.verdict(),
            "witness": auto_trace(witness, p),
            "reason": "witness verified by exact substitution",
            "scale": rat(scale),
        }),
        EquivDecision::Inequivalent { reason } | EquivDecision::Unknown { reason } => json!({
            "verdict": d.verdict(),
            "witness": null,
            "reason": reason,
            "scale": null,
        }),
    }
}

pub fn error(e: &tamecurve::Error) -> Value {
    json!({"error": e.name(), "message": e.to_string()})
}
