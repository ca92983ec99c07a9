//! Canonical JSON encodings. Objects use sorted keys (serde_json's default
//! map), scalars are written at their conductor level, so emitting,
//! parsing and re-emitting a document is byte-stable.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::cohomology::{Cochain, CohomologyGroup};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::metric::QuadraticForm;
use crate::modular::{ModularData, ModularExtension, Symmetry};
use crate::scalars::{Cyc, Phase};

fn bad(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("missing field \"{key}\"")))
}

fn as_u64(v: &Value, what: &str) -> Result<u64> {
    match v {
        Value::Number(n) => n.as_u64().ok_or_else(|| bad(format!("{what} must be a nonnegative integer"))),
        Value::String(s) => s.parse().map_err(|_| bad(format!("{what} must be a nonnegative integer"))),
        _ => Err(bad(format!("{what} must be a nonnegative integer"))),
    }
}

fn as_i64(v: &Value, what: &str) -> Result<i64> {
    match v {
        Value::Number(n) => n.as_i64().ok_or_else(|| bad(format!("{what} must be an integer"))),
        Value::String(s) => s.parse().map_err(|_| bad(format!("{what} must be an integer"))),
        _ => Err(bad(format!("{what} must be an integer"))),
    }
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("{what} must be an array")))
}

fn as_usize_list(v: &Value, what: &str) -> Result<Vec<usize>> {
    as_array(v, what)?.iter().map(|x| as_u64(x, what).map(|n| n as usize)).collect()
}

fn big(v: &Value, what: &str) -> Result<BigInt> {
    match v {
        Value::String(s) => BigInt::from_str(s).map_err(|_| bad(format!("{what}: not an integer string"))),
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| bad(format!("{what}: not an integer"))),
        _ => Err(bad(format!("{what}: expected an integer string"))),
    }
}

/// Pretty-printed canonical text with a trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable value");
    s.push('\n');
    s
}

pub fn parse(text: &str) -> Result<Value> {
    Ok(serde_json::from_str(text)?)
}

pub fn phase_to_json(p: Phase) -> Value {
    json!({"num": p.num(), "den": p.den()})
}

pub fn phase_from_json(v: &Value) -> Result<Phase> {
    let num = as_i64(field(v, "num")?, "phase numerator")?;
    let den = as_u64(field(v, "den")?, "phase denominator")?;
    if den == 0 {
        return Err(bad("phase denominator must be positive"));
    }
    Ok(Phase::new(num, den))
}

pub fn cyc_to_json(z: &Cyc) -> Value {
    let m = z.minimize();
    let coeffs: Vec<Value> = m
        .coeffs()
        .iter()
        .map(|c| json!([c.numer().to_string(), c.denom().to_string()]))
        .collect();
    json!({"level": m.level(), "coeffs": coeffs})
}

pub fn cyc_from_json(v: &Value) -> Result<Cyc> {
    let level = as_u64(field(v, "level")?, "level")?;
    if level == 0 || level > u32::MAX as u64 {
        return Err(bad("level must be a positive 32-bit integer"));
    }
    let mut coeffs = Vec::new();
    for c in as_array(field(v, "coeffs")?, "coeffs")? {
        let pair = as_array(c, "coefficient")?;
        if pair.len() != 2 {
            return Err(bad("coefficient must be [num, den]"));
        }
        let num = big(&pair[0], "numerator")?;
        let den = big(&pair[1], "denominator")?;
        if den == BigInt::from(0) {
            return Err(bad("zero denominator"));
        }
        coeffs.push(BigRational::new(num, den));
    }
    Ok(Cyc::from_coeffs(level as u32, coeffs))
}

pub fn group_to_json(g: &FiniteGroup, z: Option<usize>) -> Value {
    let mut m = Map::new();
    m.insert("name".into(), json!(g.name()));
    if let Some(d) = g.coordinate_dims() {
        m.insert("abelian".into(), json!(d));
    } else if let Some(gens) = g.generators() {
        m.insert("permutations".into(), json!(gens));
    } else {
        m.insert("cayley".into(), json!(g.cayley_table()));
    }
    if let Some(z) = z {
        m.insert("z".into(), json!(z));
    }
    Value::Object(m)
}

pub fn group_from_json(v: &Value) -> Result<(FiniteGroup, Option<usize>)> {
    let name = v.get("name").and_then(|n| n.as_str());
    let present: Vec<&str> = ["permutations", "cayley", "abelian"].into_iter().filter(|k| v.get(*k).is_some()).collect();
    if present.len() != 1 {
        return Err(bad("group needs exactly one of \"permutations\", \"cayley\", \"abelian\""));
    }
    let g = match present[0] {
        "permutations" => {
            let gens = as_array(&v["permutations"], "permutations")?
                .iter()
                .map(|p| as_usize_list(p, "permutation"))
                .collect::<Result<Vec<_>>>()?;
            FiniteGroup::from_generators(name.unwrap_or("G"), &gens)?
        }
        "cayley" => {
            let rows = as_array(&v["cayley"], "cayley")?
                .iter()
                .map(|r| as_usize_list(r, "cayley row"))
                .collect::<Result<Vec<_>>>()?;
            FiniteGroup::from_table(name.unwrap_or("G"), &rows)?
        }
        _ => {
            let dims: Vec<u64> = as_array(&v["abelian"], "abelian")?
                .iter()
                .map(|d| as_u64(d, "abelian factor"))
                .collect::<Result<_>>()?;
            if dims.contains(&0) {
                return Err(bad("abelian factors must be positive"));
            }
            let prod = dims.iter().try_fold(1u64, |a, &d| a.checked_mul(d));
            if prod.map_or(true, |p| p > crate::limits::GENERATOR_CLOSURE as u64) {
                return Err(Error::CapExceeded {
                    what: "group order",
                    size: prod.unwrap_or(u64::MAX).min(usize::MAX as u64) as usize,
                    cap: crate::limits::GENERATOR_CLOSURE,
                });
            }
            let g = FiniteGroup::abelian(&dims);
            match name {
                Some(n) => g.renamed(n),
                None => g,
            }
        }
    };
    let z = match v.get("z") {
        None | Some(Value::Null) => None,
        Some(z) => {
            let z = as_u64(z, "z")? as usize;
            if z >= g.order() {
                return Err(bad("z is not an element of the group"));
            }
            Some(z)
        }
    };
    Ok((g, z))
}

pub fn cochain_to_json(c: &Cochain) -> Value {
    let entries: Vec<Value> = c.entries().into_iter().map(|(args, p)| json!([args, phase_to_json(p)])).collect();
    json!({"degree": c.degree(), "entries": entries})
}

pub fn cochain_from_json(v: &Value, group_order: usize) -> Result<Cochain> {
    let degree = as_u64(field(v, "degree")?, "degree")? as usize;
    if degree > 4 {
        return Err(bad("cochain degree must be at most 4"));
    }
    let mut c = Cochain::zero(group_order, degree);
    for e in as_array(field(v, "entries")?, "entries")? {
        let pair = as_array(e, "entry")?;
        if pair.len() != 2 {
            return Err(bad("entry must be [[g1..gn], phase]"));
        }
        let args = as_usize_list(&pair[0], "entry arguments")?;
        if args.len() != degree || args.iter().any(|&a| a >= group_order) {
            return Err(bad("entry arguments do not match the degree and group"));
        }
        c.set(&args, phase_from_json(&pair[1])?)?;
    }
    Ok(c)
}

pub fn cohomology_to_json(h: &CohomologyGroup) -> Value {
    json!({
        "degree": h.degree,
        "invariants": h.invariants,
        "order": h.order(),
        "representatives": h.representatives.iter().map(cochain_to_json).collect::<Vec<_>>(),
    })
}

pub fn modular_data_to_json(md: &ModularData) -> Value {
    json!({
        "labels": md.labels,
        "dims": md.dims.iter().map(cyc_to_json).collect::<Vec<_>>(),
        "theta": md.theta.iter().map(|&t| phase_to_json(t)).collect::<Vec<_>>(),
        "S": md.s.iter().map(|r| r.iter().map(cyc_to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "unit": md.unit,
        "D": cyc_to_json(&md.total_dim),
    })
}

pub fn modular_data_from_json(v: &Value) -> Result<ModularData> {
    let labels: Vec<String> = as_array(field(v, "labels")?, "labels")?
        .iter()
        .map(|l| l.as_str().map(String::from).ok_or_else(|| bad("labels must be strings")))
        .collect::<Result<_>>()?;
    let dims = as_array(field(v, "dims")?, "dims")?.iter().map(cyc_from_json).collect::<Result<Vec<_>>>()?;
    let theta = as_array(field(v, "theta")?, "theta")?.iter().map(phase_from_json).collect::<Result<Vec<_>>>()?;
    let s = as_array(field(v, "S")?, "S")?
        .iter()
        .map(|r| as_array(r, "S row")?.iter().map(cyc_from_json).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let unit = as_u64(field(v, "unit")?, "unit")? as usize;
    let total = match v.get("D") {
        Some(d) => cyc_from_json(d)?,
        None => {
            let sum: Cyc = dims.iter().map(|d| d * d).sum();
            let n = sum
                .as_integer()
                .and_then(|n| u64::try_from(n).ok())
                .ok_or_else(|| bad("\"D\" is required when the global dimension is not an integer"))?;
            Cyc::sqrt_int(n)
        }
    };
    ModularData::new(labels, dims, theta, s, total, unit)
}

pub fn symmetry_to_json(sym: &Symmetry) -> Value {
    match sym {
        Symmetry::Bosonic { group } => group_to_json(group, None),
        Symmetry::Fermionic { group, z } => group_to_json(group, Some(*z)),
    }
}

pub fn symmetry_from_json(v: &Value) -> Result<Symmetry> {
    let (group, z) = group_from_json(v)?;
    Ok(match z {
        Some(z) => {
            crate::groups::FermionicSymmetry::new(group.clone(), z)?;
            Symmetry::Fermionic { group, z }
        }
        None => Symmetry::Bosonic { group },
    })
}

pub fn extension_to_json(ext: &ModularExtension) -> Value {
    let mut v = modular_data_to_json(&ext.md);
    let emb: Map<String, Value> = ext
        .embedding
        .iter()
        .enumerate()
        .map(|(i, &l)| (i.to_string(), json!(ext.md.labels[l])))
        .collect();
    v["symmetry"] = symmetry_to_json(&ext.symmetry);
    v["embedding"] = Value::Object(emb);
    v
}

pub fn extension_from_json(v: &Value) -> Result<ModularExtension> {
    let md = modular_data_from_json(v)?;
    let symmetry = symmetry_from_json(field(v, "symmetry")?)?;
    let emb = field(v, "embedding")?
        .as_object()
        .ok_or_else(|| bad("embedding must map irrep index to label"))?;
    let mut embedding = vec![usize::MAX; emb.len()];
    for (k, l) in emb {
        let i: usize = k.parse().map_err(|_| bad("embedding keys must be irrep indices"))?;
        if i >= embedding.len() {
            return Err(bad("embedding keys must be 0..number of irreps"));
        }
        let name = l.as_str().ok_or_else(|| bad("embedding values must be label names"))?;
        embedding[i] = md.label_index(name).ok_or_else(|| bad(format!("unknown label {name}")))?;
    }
    let ext = ModularExtension { md, symmetry, embedding };
    ext.validate()?;
    Ok(ext)
}

pub fn quadratic_form_to_json(q: &QuadraticForm) -> Value {
    let mut v = json!({
        "abelian": q.dims,
        "q": q.q.iter().map(|&p| phase_to_json(p)).collect::<Vec<_>>(),
    });
    if let Some(n) = &q.names {
        v["names"] = json!(n);
    }
    v
}

pub fn quadratic_form_from_json(v: &Value) -> Result<QuadraticForm> {
    let dims: Vec<u64> = as_array(field(v, "abelian")?, "abelian")?
        .iter()
        .map(|d| as_u64(d, "abelian factor"))
        .collect::<Result<_>>()?;
    let q = as_array(field(v, "q")?, "q")?.iter().map(phase_from_json).collect::<Result<Vec<_>>>()?;
    let mut form = QuadraticForm::new(&dims, q)?;
    if let Some(n) = v.get("names") {
        let names: Vec<String> = as_array(n, "names")?
            .iter()
            .map(|l| l.as_str().map(String::from).ok_or_else(|| bad("names must be strings")))
            .collect::<Result<_>>()?;
        if names.len() != form.order() {
            return Err(bad("one name per element is required"));
        }
        form.names = Some(names);
    }
    Ok(form)
}

/// Modular data or an extension, as found in a file.
pub enum Document {
    Data(ModularData),
    Extension(ModularExtension),
}

pub fn document_from_json(v: &Value) -> Result<Document> {
    if v.get("embedding").is_some() || v.get("symmetry").is_some() {
        Ok(Document::Extension(extension_from_json(v)?))
    } else {
        Ok(Document::Data(modular_data_from_json(v)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::sixteenfold;

    #[test]
    fn scalars_round_trip() {
        let z = Cyc::root(8, 1) + Cyc::from_ratio(-3, 7);
        assert_eq!(cyc_from_json(&cyc_to_json(&z)).unwrap(), z);
        let lifted = Cyc::root(4, 1).lift(12);
        assert_eq!(cyc_to_json(&lifted)["level"], json!(4));
        let p = Phase::new(-1, 6);
        assert_eq!(phase_to_json(p), json!({"num": 5, "den": 6}));
    }

    #[test]
    fn extension_round_trip_is_byte_stable() {
        for nu in [0, 1, 6] {
            let e = sixteenfold(nu);
            let a = to_canonical_string(&extension_to_json(&e));
            let back = extension_from_json(&parse(&a).unwrap()).unwrap();
            assert_eq!(to_canonical_string(&extension_to_json(&back)), a);
        }
    }

    #[test]
    fn groups_round_trip() {
        for (g, z) in [(FiniteGroup::symmetric(3), None), (FiniteGroup::cyclic(4), Some(2)), (FiniteGroup::quaternion(), Some(4))] {
            let v = group_to_json(&g, z);
            let (h, z2) = group_from_json(&v).unwrap();
            assert_eq!(h.cayley_table(), g.cayley_table());
            assert_eq!(z, z2);
        }
        assert!(group_from_json(&json!({"name": "x"})).is_err());
    }
}
