//! JSON form of a [`HallTable`]. Keys come out sorted; integers beyond
//! `2^53` are written as decimal strings so that any JSON reader keeps them
//! exact.

use super::interp::CountPoly;
use super::table::{HallTable, PairInfo, Triple};
use crate::coeffring::Poly;
use crate::error::{Error, Result};
use crate::quiver::{DimVec, Quiver};
use crate::repfield::Label;
use num_bigint::BigInt;
use serde_json::{json, Value};
use std::collections::BTreeMap;

const SAFE: i64 = 1 << 53;

fn int_json(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) if (-SAFE..=SAFE).contains(&v) => json!(v),
        _ => json!(c.to_string()),
    }
}

fn poly_json(f: &CountPoly) -> Value {
    Value::Array(f.coeffs().iter().map(int_json).collect())
}

fn label_json(l: &Label) -> Value {
    Value::Array(l.parts().iter().map(|d| json!(d.0)).collect())
}

fn triples(t: &BTreeMap<Triple, CountPoly>, names: [&str; 3]) -> Value {
    Value::Array(
        t.iter()
            .map(|(k, f)| {
                let mut m = serde_json::Map::new();
                m.insert(names[0].into(), json!(k.0));
                m.insert(names[1].into(), json!(k.1));
                m.insert(names[2].into(), json!(k.2));
                m.insert("poly".into(), poly_json(f));
                Value::Object(m)
            })
            .collect(),
    )
}

pub fn to_json(t: &HallTable) -> Value {
    let q = &t.quiver;
    json!({
        "quiver": {
            "vertices": q.vertex_count(),
            "arrows": q.arrows().iter().map(|&(s, d)| json!([s + 1, d + 1])).collect::<Vec<_>>(),
        },
        "dmax": t.dmax.0,
        "max_total": t.max_total,
        "primes": t.primes,
        "check_prime": t.check_prime,
        "classes": t.classes.iter().enumerate().map(|(i, l)| json!({"id": i, "label": label_json(l)})).collect::<Vec<_>>(),
        "hom": t.hom,
        "aut": t.aut.iter().enumerate().map(|(i, f)| json!({"x": i, "poly": poly_json(f)})).collect::<Vec<_>>(),
        "hall": triples(&t.hall, ["x", "y", "z"]),
        "ext": triples(&t.ext, ["x", "y", "z"]),
        "split": triples(&t.split, ["x", "y", "z"]),
        "pairs": t.pairs.iter().enumerate().map(|(i, p)| json!({
            "id": i, "ambient": p.ambient, "label": label_json(&p.label), "sub": p.sub, "quot": p.quot,
        })).collect::<Vec<_>>(),
        "flags_up": triples(&t.flags_up, ["from", "m", "to"]),
        "flags_down": triples(&t.flags_down, ["from", "m", "to"]),
    })
}

pub fn to_json_string(t: &HallTable) -> String {
    let mut s = serde_json::to_string_pretty(&to_json(t)).expect("JSON values serialize");
    s.push('\n');
    s
}

fn bad(what: &str) -> Error {
    Error::Parse(format!("table JSON: {what}"))
}

fn get<'a>(v: &'a Value, k: &str) -> Result<&'a Value> {
    v.get(k).ok_or_else(|| bad(&format!("missing key {k:?}")))
}

fn as_usize(v: &Value) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| bad(&format!("expected a non-negative integer, got {v}")))
}

fn as_array(v: &Value) -> Result<&Vec<Value>> {
    v.as_array().ok_or_else(|| bad(&format!("expected an array, got {v}")))
}

fn int_from(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| bad(&format!("non-integer {n}"))),
        Value::String(s) => s.parse().map_err(|_| bad(&format!("bad integer string {s:?}"))),
        _ => Err(bad(&format!("expected an integer, got {v}"))),
    }
}

fn poly_from(v: &Value) -> Result<CountPoly> {
    Ok(CountPoly(Poly::from_coeffs(as_array(v)?.iter().map(int_from).collect::<Result<_>>()?)))
}

fn dimvec_from(v: &Value) -> Result<DimVec> {
    Ok(DimVec(as_array(v)?.iter().map(|x| x.as_i64().ok_or_else(|| bad("dimension entry"))).collect::<Result<_>>()?))
}

fn label_from(v: &Value) -> Result<Label> {
    Ok(Label::new(as_array(v)?.iter().map(dimvec_from).collect::<Result<_>>()?))
}

fn triples_from(v: &Value, names: [&str; 3], bound: [usize; 3]) -> Result<BTreeMap<Triple, CountPoly>> {
    let mut out = BTreeMap::new();
    for e in as_array(v)? {
        let k: Vec<usize> = names.iter().map(|n| as_usize(get(e, n)?)).collect::<Result<_>>()?;
        if k.iter().zip(bound).any(|(&a, b)| a >= b) {
            return Err(bad(&format!("index out of range in {e}")));
        }
        out.insert((k[0], k[1], k[2]), poly_from(get(e, "poly")?)?);
    }
    Ok(out)
}

pub fn from_json(v: &Value) -> Result<HallTable> {
    let qv = get(v, "quiver")?;
    let n = as_usize(get(qv, "vertices")?)?;
    let arrows = as_array(get(qv, "arrows")?)?
        .iter()
        .map(|a| {
            let a = as_array(a)?;
            if a.len() != 2 {
                return Err(bad("arrow must be [source, target]"));
            }
            let (s, t) = (as_usize(&a[0])?, as_usize(&a[1])?);
            if s == 0 || t == 0 || s > n || t > n {
                return Err(bad("arrow endpoint out of range"));
            }
            Ok((s - 1, t - 1))
        })
        .collect::<Result<Vec<_>>>()?;
    let quiver = Quiver::new(n, arrows)?;
    let dmax = dimvec_from(get(v, "dmax")?)?;
    let max_total = match get(v, "max_total")? {
        Value::Null => None,
        x => Some(as_usize(x)?),
    };
    let primes = as_array(get(v, "primes")?)?.iter().map(|x| as_usize(x).map(|p| p as u32)).collect::<Result<_>>()?;
    let check_prime = as_usize(get(v, "check_prime")?)? as u32;
    let cl = as_array(get(v, "classes")?)?;
    let mut classes = Vec::with_capacity(cl.len());
    for (i, c) in cl.iter().enumerate() {
        if as_usize(get(c, "id")?)? != i {
            return Err(bad("class ids must be 0, 1, 2, … in order"));
        }
        classes.push(label_from(get(c, "label")?)?);
    }
    let m = classes.len();
    let hom: Vec<Vec<usize>> = as_array(get(v, "hom")?)?
        .iter()
        .map(|r| as_array(r)?.iter().map(as_usize).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    if hom.len() != m || hom.iter().any(|r| r.len() != m) {
        return Err(bad("hom must be a square matrix over the classes"));
    }
    let mut aut = vec![CountPoly::zero(); m];
    for e in as_array(get(v, "aut")?)? {
        let x = as_usize(get(e, "x")?)?;
        if x >= m {
            return Err(bad("aut index out of range"));
        }
        aut[x] = poly_from(get(e, "poly")?)?;
    }
    let pairs: Vec<PairInfo> = as_array(get(v, "pairs")?)?
        .iter()
        .map(|e| {
            let p = PairInfo {
                ambient: as_usize(get(e, "ambient")?)?,
                label: label_from(get(e, "label")?)?,
                sub: as_usize(get(e, "sub")?)?,
                quot: as_usize(get(e, "quot")?)?,
            };
            if p.ambient >= m || p.sub >= m || p.quot >= m {
                return Err(bad("pair index out of range"));
            }
            Ok(p)
        })
        .collect::<Result<_>>()?;
    let np = pairs.len();
    let xyz = ["x", "y", "z"];
    let hall = triples_from(get(v, "hall")?, xyz, [m; 3])?;
    let ext = triples_from(get(v, "ext")?, xyz, [m; 3])?;
    let split = triples_from(get(v, "split")?, xyz, [m; 3])?;
    let fl = ["from", "m", "to"];
    let flags_up = triples_from(get(v, "flags_up")?, fl, [np, m, np])?;
    let flags_down = triples_from(get(v, "flags_down")?, fl, [np, m, np])?;
    Ok(HallTable::from_parts(
        quiver,
        dmax,
        max_total,
        primes,
        check_prime,
        classes,
        hom,
        aut,
        hall,
        ext,
        split,
        pairs,
        flags_up,
        flags_down,
    ))
}

pub fn from_json_str(s: &str) -> Result<HallTable> {
    let v: Value = serde_json::from_str(s).map_err(|e| bad(&e.to_string()))?;
    from_json(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hallnum::TableConfig;

    #[test]
    fn round_trip() {
        let t = HallTable::build(&Quiver::linear(2), &DimVec(vec![1, 1]), &TableConfig::default()).unwrap();
        let s = to_json_string(&t);
        let back = from_json_str(&s).unwrap();
        assert_eq!(back, t);
        assert_eq!(to_json_string(&back), s);
    }

    #[test]
    fn big_integers_become_strings() {
        let big = BigInt::from(1i64 << 60);
        assert_eq!(int_json(&big), json!("1152921504606846976"));
        assert_eq!(int_json(&BigInt::from(-5)), json!(-5));
        assert_eq!(int_from(&json!("1152921504606846976")).unwrap(), big);
    }

    #[test]
    fn rejects_garbage() {
        assert!(from_json_str("{").is_err());
        assert!(from_json_str("{}").is_err());
    }
}
