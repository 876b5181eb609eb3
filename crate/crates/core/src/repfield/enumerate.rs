//! Isomorphism classes of representations up to a dimension bound.
//!
//! Indecomposables are searched per dimension vector (seeded random arrow
//! tuples first, then an exhaustive sweep when the tuple space is small);
//! every class is a direct sum of those. Completeness is certified by the
//! mass formula: the orbits of the listed classes must exhaust the tuple
//! space, `Σ_classes #GL_d / #Aut(Z) = p^(Σ_a d_s d_t)`. A missing
//! indecomposable, or a label shared by two orbits, breaks the identity.

use super::decompose::{aut_order, label, Label};
use super::field::{gl_order, Mat};
use super::rep::Rep;
use crate::error::{Error, Result};
use crate::quiver::{DimVec, Quiver};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

const FULL_SWEEP_LIMIT: u64 = 1 << 22;

#[derive(Clone, Debug)]
pub struct EnumConfig {
    /// Upper limit on the largest total dimension enumerated, that is on
    /// `Σ dmax` or on `max_total` when it is smaller.
    pub dim_bound: usize,
    /// Only keep dimension vectors of total at most this.
    pub max_total: Option<usize>,
    /// Random arrow tuples tried per dimension vector.
    pub random_tries: usize,
    /// Largest tuple space swept exhaustively.
    pub exhaustive_limit: u64,
    pub seed: u64,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig { dim_bound: 8, max_total: None, random_tries: 64, exhaustive_limit: 1 << 16, seed: 0x6a11 }
    }
}

#[derive(Clone, Debug)]
pub struct ClassRep {
    pub label: Label,
    pub rep: Rep,
}

/// Dimension vectors `0 <= d <= dmax` within the total bound, in canonical
/// order (total first).
pub fn dims_in_bound(dmax: &DimVec, max_total: Option<usize>) -> Vec<DimVec> {
    let mut ds: Vec<DimVec> =
        dmax.below().into_iter().filter(|d| max_total.is_none_or(|m| d.total() as usize <= m)).collect();
    ds.sort_by(|a, b| a.total().cmp(&b.total()).then_with(|| b.cmp(a)));
    ds
}

fn arrow_entries(q: &Quiver, d: &DimVec) -> usize {
    q.arrows().iter().map(|&(s, t)| d.get(s) * d.get(t)).sum()
}

fn tuple_from(q: &Quiver, d: &DimVec, p: u32, entries: &[u32]) -> Rep {
    let mut k = 0;
    let maps = q
        .arrows()
        .iter()
        .map(|&(s, t)| {
            let (r, c) = (d.get(t), d.get(s));
            let m = Mat::from_rows(r, c, entries[k..k + r * c].to_vec());
            k += r * c;
            m
        })
        .collect();
    Rep::for_quiver(q, p, d, maps).expect("shapes follow the dimension vector")
}

fn is_indecomposable(r: &Rep) -> Result<bool> {
    Ok(label(r)?.is_indecomposable())
}

/// One indecomposable of dimension `d`, if the search finds any.
fn find_indecomposable(q: &Quiver, d: &DimVec, p: u32, cfg: &EnumConfig) -> Result<Option<Rep>> {
    let n = arrow_entries(q, d);
    let mut rng =
        ChaCha8Rng::seed_from_u64(cfg.seed ^ (p as u64) << 32 ^ d.0.iter().fold(0u64, |h, &x| h * 31 + x as u64));
    for _ in 0..cfg.random_tries {
        let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..p)).collect();
        let r = tuple_from(q, d, p, &e);
        if is_indecomposable(&r)? {
            return Ok(Some(r));
        }
    }
    exhaustive_indecomposable(q, d, p, cfg.exhaustive_limit)
}

fn exhaustive_indecomposable(q: &Quiver, d: &DimVec, p: u32, limit: u64) -> Result<Option<Rep>> {
    let n = arrow_entries(q, d);
    let space = match (p as u64).checked_pow(n as u32) {
        Some(s) if s <= limit => s,
        _ => return Ok(None),
    };
    let mut e = vec![0u32; n];
    for mut code in 0..space {
        for x in e.iter_mut() {
            *x = (code % p as u64) as u32;
            code /= p as u64;
        }
        let r = tuple_from(q, d, p, &e);
        if is_indecomposable(&r)? {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// All multisets of `parts` (indices, non-increasing) summing to `d`.
fn multisets(parts: &[DimVec], d: &DimVec, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if d.is_zero() {
        out.push(cur.clone());
        return;
    }
    for i in start..parts.len() {
        if parts[i].le(d) {
            cur.push(i);
            multisets(parts, &d.sub(&parts[i]), i, cur, out);
            cur.pop();
        }
    }
}

fn mass_holds(q: &Quiver, d: &DimVec, p: u32, classes: &[ClassRep]) -> Result<bool> {
    let gl: BigInt = (0..d.len()).map(|v| gl_order(d.get(v), p as u64)).product();
    let mut mass = BigInt::from(0);
    for c in classes {
        mass += &gl / aut_order(&c.rep)?;
    }
    Ok(mass == num_traits::pow(BigInt::from(p), arrow_entries(q, d)))
}

/// One representative per isomorphism class for every `d <= dmax` (within
/// `cfg.max_total`), sorted in canonical class order. The zero class comes
/// first.
pub fn enumerate_classes(q: &Quiver, dmax: &DimVec, p: u32, cfg: &EnumConfig) -> Result<Vec<ClassRep>> {
    if dmax.len() != q.vertex_count() {
        return Err(Error::DimensionMismatch { expected: q.vertex_count(), found: dmax.len() });
    }
    if !dmax.is_nonneg() {
        return Err(Error::Domain(format!("negative dimension bound {dmax}")));
    }
    let top = cfg.max_total.map_or(dmax.total() as usize, |m| m.min(dmax.total() as usize));
    if top > cfg.dim_bound {
        return Err(Error::Bound(format!("total dimension {top} exceeds the bound {}", cfg.dim_bound)));
    }
    let form = q.euler_form();
    let mut indec: Vec<Rep> = Vec::new();
    let mut all = Vec::new();
    for d in dims_in_bound(dmax, cfg.max_total) {
        if d.is_zero() {
            all.push(ClassRep { label: Label::zero(), rep: Rep::zero_maps(q, p, &d) });
            continue;
        }
        if let Some(r) = find_indecomposable(q, &d, p, cfg)? {
            if form.tits(&d)? != 1 {
                return Err(Error::UnsupportedQuiver(format!("indecomposable of dimension {d} is not a real root")));
            }
            indec.push(r);
        }
        let mut classes = classes_at(&indec, &d)?;
        if !mass_holds(q, &d, p, &classes)? {
            // The random search may have missed an indecomposable.
            let had = indec.iter().any(|r| r.dimvec() == d);
            if !had {
                let space = (p as u64).checked_pow(arrow_entries(q, &d) as u32);
                if space.is_none_or(|s| s > FULL_SWEEP_LIMIT) {
                    return Err(Error::Budget(format!("cannot certify the classes of dimension {d} over F_{p}")));
                }
                if let Some(r) = exhaustive_indecomposable(q, &d, p, FULL_SWEEP_LIMIT)? {
                    indec.push(r);
                    classes = classes_at(&indec, &d)?;
                }
            }
            if !mass_holds(q, &d, p, &classes)? {
                return Err(Error::UnsupportedQuiver(format!(
                    "isomorphism classes of dimension {d} over F_{p} are not determined by their summand dimension vectors"
                )));
            }
        }
        all.extend(classes);
    }
    all.sort_by(|a, b| a.label.cmp(&b.label));
    Ok(all)
}

fn classes_at(indec: &[Rep], d: &DimVec) -> Result<Vec<ClassRep>> {
    let parts: Vec<DimVec> = indec.iter().map(|r| r.dimvec()).collect();
    let mut combos = Vec::new();
    multisets(&parts, d, 0, &mut Vec::new(), &mut combos);
    combos
        .into_iter()
        .map(|c| {
            let mut it = c.iter();
            let first = indec[*it.next().expect("d is nonzero")].clone();
            let rep = it.fold(first, |acc, &i| acc.direct_sum(&indec[i]));
            Ok(ClassRep { label: Label::new(c.iter().map(|&i| parts[i].clone()).collect()), rep })
        })
        .collect()
}

/// Brute-force oracle: sweep every arrow tuple of dimension `d`, group by
/// label, and return the orbit count of each label as `#tuples · #Aut /
/// #GL_d` (exactly 1 when the label is a complete invariant).
pub fn orbit_census(q: &Quiver, d: &DimVec, p: u32) -> Result<BTreeMap<Label, BigInt>> {
    let n = arrow_entries(q, d);
    let space = (p as u64).pow(n as u32);
    let gl: BigInt = (0..d.len()).map(|v| gl_order(d.get(v), p as u64)).product();
    let mut seen: BTreeMap<Label, (u64, BigInt)> = BTreeMap::new();
    let mut e = vec![0u32; n];
    for mut code in 0..space {
        for x in e.iter_mut() {
            *x = (code % p as u64) as u32;
            code /= p as u64;
        }
        let r = tuple_from(q, d, p, &e);
        let l = label(&r)?;
        match seen.get_mut(&l) {
            Some(v) => v.0 += 1,
            None => {
                let a = aut_order(&r)?;
                seen.insert(l, (1, a));
            }
        }
    }
    Ok(seen.into_iter().map(|(l, (c, a))| (l, BigInt::from(c) * a / &gl)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_unit_box() {
        let q = Quiver::linear(2);
        for p in [2, 3] {
            let cs = enumerate_classes(&q, &DimVec(vec![1, 1]), p, &EnumConfig::default()).unwrap();
            let names: Vec<String> = cs.iter().map(|c| c.label.to_string()).collect();
            assert_eq!(names, ["[]", "[[1,0]]", "[[0,1]]", "[[1,1]]", "[[1,0],[0,1]]"]);
        }
    }

    #[test]
    fn single_vertex() {
        let q = Quiver::new(1, vec![]).unwrap();
        let cs = enumerate_classes(&q, &DimVec(vec![2]), 3, &EnumConfig::default()).unwrap();
        let names: Vec<String> = cs.iter().map(|c| c.label.to_string()).collect();
        assert_eq!(names, ["[]", "[[1]]", "[[1],[1]]"]);
    }

    #[test]
    fn census_agrees_with_enumeration() {
        let q = Quiver::linear(2);
        for p in [2, 3] {
            let census = orbit_census(&q, &DimVec(vec![2, 2]), p).unwrap();
            assert_eq!(census.len(), 3);
            assert!(census.values().all(|c| *c == BigInt::from(1)));
        }
    }

    #[test]
    fn kronecker_is_rejected() {
        let k = Quiver::load("vertices 2\narrow 1 2\narrow 1 2").unwrap();
        let r = enumerate_classes(&k, &DimVec(vec![1, 1]), 2, &EnumConfig::default());
        assert!(matches!(r, Err(Error::UnsupportedQuiver(_))), "{r:?}");
    }

    #[test]
    fn bound_enforced() {
        let q = Quiver::linear(2);
        assert!(matches!(enumerate_classes(&q, &DimVec(vec![5, 5]), 2, &EnumConfig::default()), Err(Error::Bound(_))));
    }
}
