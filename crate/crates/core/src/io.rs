//! JSON wire format. Elements are arrays of their `m·n` coefficients over
//! `F_p` (an integer is also accepted and read as an element of `F_p`);
//! polynomials are arrays of elements indexed by degree. Object keys come out
//! sorted, so equal values serialize to identical bytes.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::extension::{
    max_ratio_check, ExtensionKind, ExtensionReport, ExtensionSpec, Lhs, PlaceId, PlaceVerdict, TowerAnalysis,
};
use crate::field::{FFElement, FieldCtx};
use crate::oracle::{OracleCount, PlaceCount, Verification};
use crate::poly::{Factorization, Poly};

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

pub fn element_to_json(k: &FieldCtx, a: FFElement) -> Value {
    json!(k.coeffs(a))
}

pub fn element_from_json(k: &FieldCtx, v: &Value) -> Result<FFElement> {
    match v {
        Value::Number(n) => n.as_i64().map(|c| k.from_int(c)).ok_or_else(|| schema(format!("not an integer: {n}"))),
        Value::Array(cs) => {
            if cs.len() > k.degree() as usize {
                return Err(schema(format!("element has {} coefficients, field degree is {}", cs.len(), k.degree())));
            }
            let coeffs = cs
                .iter()
                .map(|c| {
                    c.as_u64()
                        .filter(|&c| c < k.p())
                        .ok_or_else(|| schema(format!("coefficient {c} is not in [0, {})", k.p())))
                })
                .collect::<Result<Vec<u64>>>()?;
            k.element(&coeffs)
        }
        other => Err(schema(format!("expected an element, got {other}"))),
    }
}

pub fn poly_to_json(k: &FieldCtx, f: &Poly) -> Value {
    Value::Array(f.coeffs().iter().map(|&c| element_to_json(k, c)).collect())
}

pub fn poly_from_json(k: &FieldCtx, v: &Value) -> Result<Poly> {
    let cs = v.as_array().ok_or_else(|| schema("a polynomial must be an array of elements"))?;
    let coeffs = cs.iter().map(|c| element_from_json(k, c)).collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_coeffs(coeffs))
}

pub fn field_from_json(v: &Value) -> Result<FieldCtx> {
    Ok(serde_json::from_value(v.clone())?)
}

fn field_to_json(k: &FieldCtx) -> Value {
    serde_json::to_value(k).expect("field serializes")
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| schema(format!("missing key \"{key}\"")))
}

pub fn spec_from_json(v: &Value) -> Result<ExtensionSpec> {
    let obj = v.as_object().ok_or_else(|| schema("a spec must be an object"))?;
    const KEYS: [&str; 7] = ["field", "kind", "lhs", "d", "h", "g", "qs_certified"];
    if let Some(extra) = obj.keys().find(|key| !KEYS.contains(&key.as_str())) {
        return Err(schema(format!("unknown key \"{extra}\"")));
    }
    let field = field_from_json(get(obj, "field")?)?;
    let h = poly_from_json(&field, get(obj, "h")?)?;
    let g = match obj.get("g") {
        Some(g) => poly_from_json(&field, g)?,
        None => Poly::one(),
    };
    let qs_certified = match obj.get("qs_certified") {
        None => false,
        Some(b) => b.as_bool().ok_or_else(|| schema("qs_certified must be a boolean"))?,
    };
    let kind = match get(obj, "kind")?.as_str() {
        Some("artin_schreier") => {
            if obj.contains_key("d") {
                return Err(schema("\"d\" is only valid for kummer specs"));
            }
            let lhs = match obj.get("lhs") {
                None => Lhs::FullTrace,
                Some(Value::String(s)) if s == "full_trace" => Lhs::FullTrace,
                Some(Value::Object(o)) if o.len() == 1 && o.contains_key("p_step") => {
                    Lhs::PStep(element_from_json(&field, &o["p_step"])?)
                }
                Some(Value::Object(o)) if o.len() == 1 && o.contains_key("root_space") => {
                    let basis = o["root_space"].as_array().ok_or_else(|| schema("root_space must be an array"))?;
                    Lhs::RootSpace(basis.iter().map(|b| element_from_json(&field, b)).collect::<Result<_>>()?)
                }
                Some(other) => return Err(schema(format!("unrecognized lhs {other}"))),
            };
            ExtensionKind::ArtinSchreier(lhs)
        }
        Some("kummer") => {
            if obj.contains_key("lhs") {
                return Err(schema("\"lhs\" is only valid for artin_schreier specs"));
            }
            let d = get(obj, "d")?.as_u64().ok_or_else(|| schema("d must be a non-negative integer"))?;
            ExtensionKind::Kummer(d)
        }
        _ => return Err(schema("kind must be \"artin_schreier\" or \"kummer\"")),
    };
    Ok(ExtensionSpec { field, kind, h, g, qs_certified })
}

pub fn spec_to_json(spec: &ExtensionSpec) -> Value {
    let k = &spec.field;
    let mut obj = json!({
        "field": field_to_json(k),
        "h": poly_to_json(k, &spec.h),
        "g": poly_to_json(k, &spec.g),
        "qs_certified": spec.qs_certified,
    });
    let m = obj.as_object_mut().expect("object");
    match &spec.kind {
        ExtensionKind::ArtinSchreier(lhs) => {
            m.insert("kind".into(), json!("artin_schreier"));
            let lhs = match lhs {
                Lhs::FullTrace => json!("full_trace"),
                Lhs::PStep(b) => json!({ "p_step": element_to_json(k, *b) }),
                Lhs::RootSpace(basis) => {
                    json!({ "root_space": basis.iter().map(|&b| element_to_json(k, b)).collect::<Vec<_>>() })
                }
            };
            m.insert("lhs".into(), lhs);
        }
        ExtensionKind::Kummer(d) => {
            m.insert("kind".into(), json!("kummer"));
            m.insert("d".into(), json!(d));
        }
    }
    obj
}

pub fn place_to_json(k: &FieldCtx, place: &PlaceId) -> Value {
    match place {
        PlaceId::Infinity => json!({ "name": place.render(k), "degree": 1, "poly": null }),
        PlaceId::Finite(f) => json!({ "name": place.render(k), "degree": place.degree(), "poly": poly_to_json(k, f) }),
    }
}

fn verdict_to_json(k: &FieldCtx, v: &PlaceVerdict) -> Value {
    json!({
        "place": place_to_json(k, &v.place),
        "valuation": v.valuation,
        "status": v.status,
        "places_above_degree1": v.places_above_degree1,
        "residue": v.residue.map(|r| element_to_json(k, r)),
        "justification": v.justification,
        "different_degree": v.different_degree,
    })
}

pub fn report_to_json(k: &FieldCtx, r: &ExtensionReport) -> Value {
    json!({
        "kind": r.kind,
        "field_order": r.field_order,
        "degree": r.degree,
        "verdicts": r.verdicts.iter().map(|v| verdict_to_json(k, v)).collect::<Vec<_>>(),
        "deg_different": r.deg_different,
        "genus": r.genus,
        "n_rational": r.n_rational,
        "ratio": r.ratio,
        "max_ratio": max_ratio_check(r),
        "irreducibility": r.irreducibility,
    })
}

fn count_to_json(c: PlaceCount) -> Value {
    match c {
        PlaceCount::Counted(n) => json!(n),
        PlaceCount::Delegated => json!("delegated"),
    }
}

pub fn oracle_to_json(k: &FieldCtx, o: &OracleCount) -> Value {
    json!({
        "per_alpha": o
            .per_alpha
            .iter()
            .map(|&(a, c)| json!({ "alpha": element_to_json(k, a), "count": count_to_json(c) }))
            .collect::<Vec<_>>(),
        "infinity": count_to_json(o.infinity),
        "total_degree1": o.total_degree1,
    })
}

pub fn verification_to_json(v: &Verification) -> Value {
    match v {
        Verification::Verified => json!({ "verdict": "verified" }),
        Verification::Mismatch(details) => json!({ "verdict": "mismatch", "details": details }),
    }
}

pub fn tower_to_json(k: &FieldCtx, t: &TowerAnalysis) -> Value {
    json!({
        "basis": t.tower.basis.iter().map(|&b| element_to_json(k, b)).collect::<Vec<_>>(),
        "steps": t
            .tower
            .steps
            .iter()
            .map(|s| json!({
                "index": s.index,
                "generator": s.generator,
                "b": element_to_json(k, s.b),
                "equation": s.equation(k),
            }))
            .collect::<Vec<_>>(),
        "prefixes": t.prefixes.iter().map(|r| report_to_json(k, r)).collect::<Vec<_>>(),
        "step_differents": t
            .step_differents
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| json!({
                        "step": s.step,
                        "place": place_to_json(k, &s.place),
                        "degree": s.degree,
                        "exponent": s.exponent,
                    }))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>(),
        "deg_different": t.deg_different,
    })
}

pub fn factorization_to_json(k: &FieldCtx, f: &Factorization) -> Value {
    json!({
        "unit": element_to_json(k, f.unit),
        "factors": f
            .factors
            .iter()
            .map(|(p, e)| json!({ "factor": poly_to_json(k, p), "multiplicity": e, "render": p.render(k, "x") }))
            .collect::<Vec<_>>(),
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}
