//! Counting over `F_p`: Hall numbers, extension classes, splittings, pair
//! classes of subrepresentations and flags.

use super::decompose::{aut_order, label, Label};
use super::field::Mat;
use super::rep::{contained_in, Rep, Subspaces};
use crate::error::{Error, Result};
use crate::quiver::{DimVec, EulerForm};
use num_bigint::BigInt;
use std::collections::BTreeMap;

pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// `dim Ext¹(X, Y)` computed twice: as the cokernel of the intertwining map
/// and as `dim Hom(X, Y) - χ([X], [Y])`.
pub fn ext1_dim(x: &Rep, y: &Rep, form: &EulerForm) -> Result<usize> {
    let sys = Rep::hom_system(x, y);
    let rank = sys.rank(x.prime());
    let coker = sys.rows - rank;
    let hom = sys.cols - rank;
    let chi = form.eval(&x.dimvec(), &y.dimvec())?;
    if hom as i64 - chi != coker as i64 {
        return Err(Error::Consistency(format!(
            "Ext dimension routes disagree for {} -> {}: hom {hom}, chi {chi}, cokernel {coker}",
            x.dimvec(),
            y.dimvec()
        )));
    }
    Ok(coker)
}

/// `h^Z_{X,Y}`: subrepresentations `U ⊆ Z` by `(class of U, class of Z/U)`,
/// for all dimension vectors at once.
pub fn hall_counts(z: &Rep, budget: u64) -> Result<BTreeMap<(Label, Label), u64>> {
    let mut out = BTreeMap::new();
    for u in z.all_subreps(budget)? {
        let key = (label(&z.sub(&u))?, label(&z.quotient(&u))?);
        *out.entry(key).or_insert(0) += 1;
    }
    Ok(out)
}

/// `h^Z_{X,Y}` restricted to subrepresentations of dimension `dx`.
pub fn hall_count(z: &Rep, dx: &DimVec, budget: u64) -> Result<BTreeMap<(Label, Label), u64>> {
    let mut out = BTreeMap::new();
    for u in z.subreps(dx, budget)? {
        let key = (label(&z.sub(&u))?, label(&z.quotient(&u))?);
        *out.entry(key).or_insert(0) += 1;
    }
    Ok(out)
}

/// The middle term of the extension `0 -> X -> Z -> Y -> 0` with cocycle
/// `e_a : Y_s -> X_t` (one matrix per arrow).
pub fn middle_term(x: &Rep, y: &Rep, e: &[Mat]) -> Rep {
    let base = x.direct_sum(y);
    let maps: Vec<Mat> = base
        .maps()
        .iter()
        .zip(x.arrows())
        .zip(e)
        .map(|((m, &(s, t)), ea)| {
            let mut m = m.clone();
            let (xr, xc) = (x.dims()[t], x.dims()[s]);
            debug_assert_eq!((ea.rows, ea.cols), (xr, y.dims()[s]));
            for i in 0..xr {
                for j in 0..ea.cols {
                    m.set(i, xc + j, ea.get(i, j));
                }
            }
            m
        })
        .collect();
    Rep::new(x.prime(), base.dims().to_vec(), base.arrows().to_vec(), maps).expect("block shapes")
}

fn cocycle_shapes(x: &Rep, y: &Rep) -> Vec<(usize, usize)> {
    x.arrows().iter().map(|&(s, t)| (x.dims()[t], y.dims()[s])).collect()
}

/// Representatives `e` of every class of `Ext¹(Y, X)` (extensions of `Y` by
/// `X`): coboundaries `δh_a = X_a h_s - h_t Y_a` are quotiented out by
/// enumerating a complement.
pub fn ext_representatives(x: &Rep, y: &Rep) -> Vec<Vec<Mat>> {
    let p = x.prime();
    // hom_system(y, x) maps (h_v : Y_v -> X_v) to (X_a h_s - h_t Y_a)_a.
    let sys = Rep::hom_system(y, x);
    // Column space of sys = coboundaries; complete it with standard vectors.
    let mut basis_rows: Vec<Vec<u32>> = Vec::new();
    for j in 0..sys.cols {
        basis_rows.push(sys.col(j));
    }
    let mut rank = 0;
    let add_if_new = |rows: &mut Vec<Vec<u32>>, v: Vec<u32>, rank: &mut usize| -> bool {
        rows.push(v);
        let m = Mat::from_rows(rows.len(), sys.rows, rows.concat());
        let r = m.rank(p);
        if r > *rank {
            *rank = r;
            true
        } else {
            rows.pop();
            false
        }
    };
    let mut kept: Vec<Vec<u32>> = Vec::new();
    for v in basis_rows {
        add_if_new(&mut kept, v, &mut rank);
    }
    let mut complement = Vec::new();
    for i in 0..sys.rows {
        let mut v = vec![0u32; sys.rows];
        v[i] = 1;
        if add_if_new(&mut kept, v.clone(), &mut rank) {
            complement.push(v);
        }
    }
    let shapes = cocycle_shapes(x, y);
    let k = complement.len();
    let total = (p as u64).pow(k as u32);
    let mut out = Vec::with_capacity(total as usize);
    let mut c = vec![0u32; k];
    for mut code in 0..total {
        for x in c.iter_mut() {
            *x = (code % p as u64) as u32;
            code /= p as u64;
        }
        let mut flat = vec![0u32; sys.rows];
        for (coef, v) in c.iter().zip(&complement) {
            for (f, &a) in flat.iter_mut().zip(v) {
                *f = (*f + coef * a) % p;
            }
        }
        let mut off = 0;
        let e: Vec<Mat> = shapes
            .iter()
            .map(|&(r, cc)| {
                let m = Mat::from_rows(r, cc, flat[off..off + r * cc].to_vec());
                off += r * cc;
                m
            })
            .collect();
        out.push(e);
    }
    out
}

/// `#E_Z(X, Y)`: classes in `Ext¹(Y, X)` whose middle term has class `Z`.
/// The counts add up to `p^(dim Ext¹(Y, X))`, which is checked.
pub fn ext_classify(x: &Rep, y: &Rep, form: &EulerForm) -> Result<BTreeMap<Label, u64>> {
    let ext = ext1_dim(y, x, form)?;
    let mut out = BTreeMap::new();
    let reps = ext_representatives(x, y);
    for e in &reps {
        *out.entry(label(&middle_term(x, y, e))?).or_insert(0u64) += 1;
    }
    let total: u64 = out.values().sum();
    if total != (x.prime() as u64).pow(ext as u32) {
        return Err(Error::Consistency(format!(
            "extension classes of {} by {} sum to {total}, expected p^{ext}",
            y.dimvec(),
            x.dimvec()
        )));
    }
    Ok(out)
}

fn complementary(u: &[Mat], v: &[Mat], z: &Rep) -> bool {
    let p = z.prime();
    u.iter().zip(v).zip(z.dims()).all(|((a, b), &n)| {
        if a.rows + b.rows != n {
            return false;
        }
        let mut data = a.data.clone();
        data.extend_from_slice(&b.data);
        Mat::from_rows(n, n, data).rank(p) == n
    })
}

/// Ordered pairs `(U, V)` of subrepresentations with `U ⊕ V = Z` and
/// `dim U = dx`, grouped by `(class of U, class of V)`.
pub fn direct_sum_splittings(z: &Rep, dx: &DimVec, budget: u64) -> Result<BTreeMap<(Label, Label), u64>> {
    let dy = z.dimvec().sub(dx);
    let us = z.subreps(dx, budget)?;
    let vs = z.subreps(&dy, budget)?;
    let mut out = BTreeMap::new();
    let vl: Vec<Label> = vs.iter().map(|v| label(&z.sub(v))).collect::<Result<_>>()?;
    for u in &us {
        let mut lu = None;
        for (v, lv) in vs.iter().zip(&vl) {
            if complementary(u, v, z) {
                let lu = match &lu {
                    Some(l) => l,
                    None => lu.insert(label(&z.sub(u))?),
                };
                *out.entry((lu.clone(), lv.clone())).or_insert(0) += 1;
            }
        }
    }
    Ok(out)
}

/// Class of the pair `(S ⊆ Z)`: the label of the doubled-quiver
/// representation, which determines the pair up to isomorphism whenever the
/// orbit check of [`pair_classes`] passes.
pub fn pair_label(z: &Rep, s: &[Mat]) -> Result<Label> {
    label(&z.pair_rep(s))
}

#[derive(Clone, Debug)]
pub struct PairClass {
    pub label: Label,
    pub sub: Subspaces,
    pub orbit: u64,
}

/// All classes of pairs `(S ⊆ Z)`, with orbit sizes, certified by
/// `orbit · #Aut(pair) = #Aut(Z)` for every class.
pub fn pair_classes(z: &Rep, budget: u64) -> Result<Vec<PairClass>> {
    let mut by: BTreeMap<Label, PairClass> = BTreeMap::new();
    for s in z.all_subreps(budget)? {
        let l = pair_label(z, &s)?;
        by.entry(l.clone()).or_insert(PairClass { label: l, sub: s, orbit: 0 }).orbit += 1;
    }
    let az = aut_order(z)?;
    for c in by.values() {
        let ap = aut_order(&z.pair_rep(&c.sub))?;
        if BigInt::from(c.orbit) * ap != az {
            return Err(Error::UnsupportedQuiver(format!(
                "subrepresentation pairs of {} with class {} do not form a single orbit",
                z.dimvec(),
                c.label
            )));
        }
    }
    Ok(by.into_values().collect())
}

/// Upward flags from `S`: for every `S ⊆ S' ⊆ Z`, the pair
/// `(class of S'/S, class of (S' ⊆ Z))`, counted.
pub fn flag_count(z: &Rep, s: &[Mat], budget: u64) -> Result<BTreeMap<(Label, Label), u64>> {
    let p = z.prime();
    let mut out = BTreeMap::new();
    for s2 in z.all_subreps(budget)? {
        if !contained_in(s, &s2, p) {
            continue;
        }
        let sub2 = z.sub(&s2);
        let inner = coords_in(s, &s2, p);
        let m = label(&sub2.quotient(&inner))?;
        *out.entry((m, pair_label(z, &s2)?)).or_insert(0) += 1;
    }
    Ok(out)
}

/// Downward flags into `S2`: for every `S1 ⊆ S2`, the pair
/// `(class of S2/S1, class of (S1 ⊆ Z))`, counted.
pub fn flag_count_down(z: &Rep, s2: &[Mat], budget: u64) -> Result<BTreeMap<(Label, Label), u64>> {
    let p = z.prime();
    let sub2 = z.sub(s2);
    let mut out = BTreeMap::new();
    for inner in sub2.all_subreps(budget)? {
        let s1 = embed(&inner, s2, p);
        let m = label(&sub2.quotient(&inner))?;
        *out.entry((m, pair_label(z, &s1)?)).or_insert(0) += 1;
    }
    Ok(out)
}

/// Coordinates of `s ⊆ s2` in the basis of `z.sub(s2)` (pivot coordinates),
/// returned in RREF.
fn coords_in(s: &[Mat], s2: &[Mat], p: u32) -> Subspaces {
    s.iter()
        .zip(s2)
        .map(|(a, b)| {
            let piv = super::field::rref_pivots(b);
            let mut m = Mat::zero(a.rows, b.rows);
            for r in 0..a.rows {
                let row = a.row(r);
                // a row of s is a combination of rows of s2 in RREF, read off at pivots
                for (i, &c) in piv.iter().enumerate() {
                    m.set(r, i, row[c]);
                }
            }
            m.rref(p).0
        })
        .collect()
}

/// Inverse of [`coords_in`]: a subspace of `z.sub(s2)` as rows in `Z`.
fn embed(inner: &[Mat], s2: &[Mat], p: u32) -> Subspaces {
    inner.iter().zip(s2).map(|(a, b)| a.mul(b, p).rref(p).0).collect()
}
