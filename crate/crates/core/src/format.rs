//! JSON documents for algebras, bialgebras, matrices and reports.
//!
//! Rationals are strings `"p/q"` (or `"p"`); plain JSON integers are accepted
//! on input. Output goes through `serde_json::Value`, whose maps are ordered,
//! so keys always come out sorted.

use serde_json::{json, Map, Value};

use crate::autact::Automorphism;
use crate::bialg::{Cobracket, DerivationReport};
use crate::classify::{ClassTag, Classification, NormalForm, OrbitCheckReport};
use crate::cohom::CohomologyReport;
use crate::error::{Error, Result};
use crate::exactnum::{format_rat, is_zero_vec, parse_rat, Mat, Rat};
use crate::liealg::{catalog_build, default_names, CatalogLabel, Family, LieAlgebra};

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::parse("document", e.to_string()))
}

pub fn to_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values always serialize")
}

pub fn rat_value(q: &Rat) -> Value {
    Value::String(format_rat(q))
}

pub fn rat_from(v: &Value, field: &str) -> Result<Rat> {
    match v {
        Value::String(s) => parse_rat(s).map_err(|e| match e {
            Error::Parse { reason, .. } => Error::parse(field, reason),
            other => Error::parse(field, other.to_string()),
        }),
        Value::Number(n) if n.is_i64() => Ok(Rat::from_integer(n.as_i64().unwrap().into())),
        _ => Err(Error::parse(
            field,
            "expected a rational string such as \"-3/4\"",
        )),
    }
}

fn array<'a>(v: &'a Value, field: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::parse(field, "expected an array"))
}

fn object<'a>(v: &'a Value, field: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::parse(field, "expected an object"))
}

fn index(v: &Value, field: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| Error::parse(field, "expected a non-negative integer"))
}

pub fn rat_vec(v: &Value, field: &str) -> Result<Vec<Rat>> {
    array(v, field)?
        .iter()
        .enumerate()
        .map(|(i, x)| rat_from(x, &format!("{field}[{i}]")))
        .collect()
}

pub fn mat_value(m: &Mat) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(rat_value).collect()))
            .collect(),
    )
}

pub fn mat_from(v: &Value, field: &str) -> Result<Mat> {
    let rows = array(v, field)?
        .iter()
        .enumerate()
        .map(|(i, r)| rat_vec(r, &format!("{field}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Mat::from_rows(rows).map_err(|_| Error::parse(field, "rows have different lengths"))
}

pub fn label_value(l: &CatalogLabel) -> Value {
    let mut m = Map::new();
    m.insert("family".into(), Value::String(l.family.name().into()));
    if let Some(lam) = &l.lambda {
        m.insert("lambda".into(), rat_value(lam));
    }
    Value::Object(m)
}

pub fn label_from(v: &Value, field: &str) -> Result<CatalogLabel> {
    let o = object(v, field)?;
    let fam_field = format!("{field}.family");
    let name = o
        .get("family")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::parse(&fam_field, "missing family name"))?;
    let family = Family::from_name(name)
        .ok_or_else(|| Error::parse(&fam_field, format!("unknown family {name:?}")))?;
    let lambda = match o.get("lambda") {
        None | Some(Value::Null) => None,
        Some(x) => Some(rat_from(x, &format!("{field}.lambda"))?),
    };
    CatalogLabel::new(family, lambda).map_err(|e| Error::parse(field, e.to_string()))
}

pub fn algebra_value(g: &LieAlgebra) -> Value {
    let n = g.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let c = g.bracket_basis(i, j);
            if !is_zero_vec(&c) {
                brackets.push(json!({
                    "i": i,
                    "j": j,
                    "coeffs": c.iter().map(rat_value).collect::<Vec<_>>(),
                }));
            }
        }
    }
    let mut m = Map::new();
    m.insert("dim".into(), json!(n));
    m.insert("basis".into(), json!(g.basis_names()));
    m.insert("brackets".into(), Value::Array(brackets));
    if let Some(l) = g.label() {
        m.insert("label".into(), label_value(l));
    }
    Value::Object(m)
}

/// Reads an algebra document. When `brackets` is absent and a label is given,
/// the catalog brackets are used.
pub fn algebra_from(v: &Value, field: &str) -> Result<LieAlgebra> {
    let o = object(v, field)?;
    let sub = |k: &str| format!("{field}.{k}");
    let label = match o.get("label") {
        None | Some(Value::Null) => None,
        Some(l) => Some(label_from(l, &sub("label"))?),
    };
    let basis: Option<Vec<String>> = match o.get("basis") {
        None => None,
        Some(b) => Some(
            array(b, &sub("basis"))?
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    s.as_str().map(str::to_string).ok_or_else(|| {
                        Error::parse(format!("{field}.basis[{i}]"), "expected a string")
                    })
                })
                .collect::<Result<_>>()?,
        ),
    };
    let dim = match (o.get("dim"), &basis, &label) {
        (Some(d), _, _) => index(d, &sub("dim"))?,
        (None, Some(b), _) => b.len(),
        (None, None, Some(l)) => l.dim(),
        (None, None, None) => return Err(Error::parse(sub("dim"), "missing")),
    };
    if !(1..=3).contains(&dim) {
        return Err(Error::parse(
            sub("dim"),
            format!("dimension {dim} is not 1, 2 or 3"),
        ));
    }
    if let Some(b) = &basis {
        if b.len() != dim {
            return Err(Error::parse(
                sub("basis"),
                format!("{} names for dimension {dim}", b.len()),
            ));
        }
    }
    if let Some(l) = &label {
        if l.dim() != dim {
            return Err(Error::parse(
                sub("label"),
                format!("{l} has dimension {}", l.dim()),
            ));
        }
    }
    let g = match (o.get("brackets"), &label) {
        (None, Some(l)) => {
            let g = catalog_build(l)?;
            match basis {
                Some(b) => LieAlgebra::from_tensor(b, g.tensor().to_vec())?,
                None => g,
            }
        }
        (br, _) => {
            let empty = Vec::new();
            let list = match br {
                Some(b) => array(b, &sub("brackets"))?,
                None => &empty,
            };
            let mut pairs = Vec::new();
            for (k, e) in list.iter().enumerate() {
                let f = format!("{field}.brackets[{k}]");
                let eo = object(e, &f)?;
                let get = |key: &str| {
                    eo.get(key)
                        .ok_or_else(|| Error::parse(format!("{f}.{key}"), "missing"))
                };
                let i = index(get("i")?, &format!("{f}.i"))?;
                let j = index(get("j")?, &format!("{f}.j"))?;
                let c = rat_vec(get("coeffs")?, &format!("{f}.coeffs"))?;
                if i >= dim || j >= dim {
                    return Err(Error::parse(
                        &f,
                        format!("index out of range for dimension {dim}"),
                    ));
                }
                if c.len() != dim {
                    return Err(Error::parse(
                        format!("{f}.coeffs"),
                        format!("expected {dim} entries"),
                    ));
                }
                pairs.push((i, j, c));
            }
            let names = basis.unwrap_or_else(|| match &label {
                Some(l) => catalog_build(l)
                    .map(|g| g.basis_names().to_vec())
                    .unwrap_or_default(),
                None => default_names(dim),
            });
            LieAlgebra::from_brackets(names, &pairs)
                .map_err(|e| Error::parse(sub("brackets"), e.to_string()))?
        }
    };
    Ok(g.with_label(label))
}

pub fn cobracket_value(d: &Cobracket) -> Value {
    mat_value(d.mat())
}

pub fn cobracket_from(v: &Value, dim: usize, field: &str) -> Result<Cobracket> {
    let m = mat_from(v, field)?;
    Cobracket::from_mat(dim, m).map_err(|e| Error::parse(field, e.to_string()))
}

pub fn bialgebra_value(g: &LieAlgebra, d: &Cobracket) -> Value {
    json!({ "algebra": algebra_value(g), "cobracket": cobracket_value(d) })
}

/// Reads a bialgebra document without checking the axioms.
pub fn bialgebra_from(v: &Value) -> Result<(LieAlgebra, Cobracket)> {
    let o = object(v, "document")?;
    let g = algebra_from(
        o.get("algebra")
            .ok_or_else(|| Error::parse("algebra", "missing"))?,
        "algebra",
    )?;
    let d = match o.get("cobracket") {
        Some(c) => cobracket_from(c, g.dim(), "cobracket")?,
        None => return Err(Error::parse("cobracket", "missing")),
    };
    Ok((g, d))
}

fn params_value<'a>(ps: impl IntoIterator<Item = (&'a String, &'a Rat)>) -> Value {
    Value::Object(
        ps.into_iter()
            .map(|(k, v)| (k.clone(), rat_value(v)))
            .collect(),
    )
}

pub fn tag_value(t: &ClassTag) -> Value {
    json!({
        "algebra": label_value(&t.algebra),
        "case_id": t.case_id,
        "params": params_value(&t.params),
        "flags": t.flags.iter().collect::<Vec<_>>(),
    })
}

pub fn classification_value(c: &Classification) -> Value {
    let mut v = tag_value(&c.tag);
    let o = v.as_object_mut().expect("tag is an object");
    o.insert("witness_available".into(), Value::Bool(c.witness.is_some()));
    if let Some(w) = &c.witness {
        o.insert("witness".into(), automorphism_value(w));
    }
    v
}

pub fn automorphism_value(phi: &Automorphism) -> Value {
    mat_value(phi.mat())
}

pub fn cohomology_value(r: &CohomologyReport) -> Value {
    json!({
        "dim_invariants": r.dim_invariants,
        "dim_coboundaries": r.dim_coboundaries,
        "dim_cocycles": r.dim_cocycles,
        "dim_h1": r.dim_h1,
        "cocycle_basis": r.cocycle_basis.iter().map(cobracket_value).collect::<Vec<_>>(),
    })
}

pub fn derivation_value(r: &DerivationReport) -> Value {
    json!({
        "matrix": mat_value(&r.d),
        "trace": rat_value(&r.trace),
        "det": rat_value(&r.det),
        "charpoly": r.charpoly.iter().map(rat_value).collect::<Vec<_>>(),
    })
}

pub fn orbit_value(r: &OrbitCheckReport) -> Value {
    json!({
        "label": label_value(&r.label),
        "representatives": r.representatives,
        "samples": r.samples,
        "failures": r.failures,
        "witness_checks": r.witness_checks,
        "witness_mismatches": r.witness_mismatches,
        "tag_collisions": r.tag_collisions,
        "passed": r.passed(),
        "details": r.details,
    })
}

pub fn normal_form_value(f: &NormalForm) -> Value {
    json!({
        "name": f.name,
        "params": params_value(f.params.iter().map(|(k, v)| (k, v))),
        "tag": tag_value(&f.tag),
        "cobracket": cobracket_value(&f.cobracket),
    })
}

pub fn vectors_value(vs: &[Vec<Rat>]) -> Value {
    Value::Array(
        vs.iter()
            .map(|v| Value::Array(v.iter().map(rat_value).collect()))
            .collect(),
    )
}
