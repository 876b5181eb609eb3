//! Hall tables: every count family of a bounded box of classes, measured at
//! several primes and interpolated to integer polynomials in `q`.

use super::interp::{interpolate_checked, CountPoly};
use crate::coeffring::RatFunc;
use crate::error::{Error, Result};
use crate::quiver::{DimVec, Quiver};
use crate::repfield::counts::flag_count_down;
use crate::repfield::{
    aut_order, direct_sum_splittings, enumerate_classes, ext_classify, flag_count, hall_counts, pair_classes,
    EnumConfig, Label, Rep, DEFAULT_BUDGET,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet, HashMap};

#[derive(Clone, Debug)]
pub struct TableConfig {
    pub primes: Vec<u32>,
    pub check_prime: u32,
    /// Added once if some family fails its held-out check.
    pub extra_primes: Vec<u32>,
    /// Only classes of total dimension at most this.
    pub max_total: Option<usize>,
    /// Pair classes and flags are tabulated for ambient classes of total
    /// dimension at most this (and direct splitting counts likewise).
    pub flag_total: usize,
    pub enumeration: EnumConfig,
    pub budget: u64,
}

impl Default for TableConfig {
    fn default() -> Self {
        TableConfig {
            primes: vec![2, 3, 5, 7, 11],
            check_prime: 13,
            extra_primes: vec![17, 19],
            max_total: None,
            flag_total: 3,
            enumeration: EnumConfig::default(),
            budget: DEFAULT_BUDGET,
        }
    }
}

/// A class of pairs `(S ⊆ Z)`: ambient class, pair label, classes of `S` and
/// `Z/S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairInfo {
    pub ambient: usize,
    pub label: Label,
    pub sub: usize,
    pub quot: usize,
}

pub type Triple = (usize, usize, usize);

#[derive(Clone, Debug, PartialEq)]
pub struct HallTable {
    pub quiver: Quiver,
    pub dmax: DimVec,
    pub max_total: Option<usize>,
    pub primes: Vec<u32>,
    pub check_prime: u32,
    pub classes: Vec<Label>,
    /// `hom[x][y] = dim Hom(X, Y)`.
    pub hom: Vec<Vec<usize>>,
    pub aut: Vec<CountPoly>,
    /// `h^Z_{X,Y}` keyed `(x, y, z)`.
    pub hall: BTreeMap<Triple, CountPoly>,
    /// `#E_Z(X, Y)` keyed `(x, y, z)`.
    pub ext: BTreeMap<Triple, CountPoly>,
    /// Ordered splittings `Z = U ⊕ V`, `U ≅ X`, `V ≅ Y`, keyed `(x, y, z)`.
    pub split: BTreeMap<Triple, CountPoly>,
    pub pairs: Vec<PairInfo>,
    /// `(c1, m, c2)`: intermediates `S1 ⊆ S2 ⊆ Z` with `(S1 ⊆ Z)` in `c1`,
    /// `S2/S1` in class `m`, `(S2 ⊆ Z)` in `c2` — counted from `S1`.
    pub flags_up: BTreeMap<Triple, CountPoly>,
    /// Same flags keyed `(c2, m, c1)` and counted from `S2`.
    pub flags_down: BTreeMap<Triple, CountPoly>,
    index: HashMap<Label, usize>,
}

/// A failed identity, with enough context to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub check: String,
    pub detail: String,
}

struct PrimeData {
    p: u32,
    labels: Vec<Label>,
    reps: Vec<Rep>,
    aut: Vec<BigInt>,
    hom: Vec<Vec<usize>>,
}

#[derive(Default)]
struct Counts {
    hall: BTreeMap<Triple, u64>,
    ext: BTreeMap<Triple, u64>,
    split: BTreeMap<Triple, u64>,
    pairs: Vec<PairInfo>,
    pair_subs: Vec<Vec<crate::repfield::Mat>>,
    up: BTreeMap<Triple, u64>,
    down: BTreeMap<Triple, u64>,
}

fn in_box(d: &DimVec, dmax: &DimVec, max_total: Option<usize>) -> bool {
    d.le(dmax) && max_total.is_none_or(|m| d.total() as usize <= m)
}

fn class_data(q: &Quiver, dmax: &DimVec, p: u32, cfg: &TableConfig) -> Result<PrimeData> {
    let mut ec = cfg.enumeration.clone();
    ec.max_total = cfg.max_total;
    let cs = enumerate_classes(q, dmax, p, &ec)?;
    let reps: Vec<Rep> = cs.iter().map(|c| c.rep.clone()).collect();
    let aut = reps.iter().map(aut_order).collect::<Result<Vec<_>>>()?;
    let hom = reps.iter().map(|x| reps.iter().map(|y| Rep::hom_dim(x, y)).collect()).collect();
    Ok(PrimeData { p, labels: cs.into_iter().map(|c| c.label).collect(), reps, aut, hom })
}

fn lookup(index: &HashMap<Label, usize>, l: &Label) -> Result<usize> {
    index.get(l).copied().ok_or_else(|| Error::Consistency(format!("class {l} missing from the enumeration")))
}

fn counts_at(pd: &PrimeData, q: &Quiver, dmax: &DimVec, cfg: &TableConfig) -> Result<Counts> {
    let index: HashMap<Label, usize> = pd.labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
    let form = q.euler_form();
    let n = q.vertex_count();
    let dims: Vec<DimVec> = pd.labels.iter().map(|l| l.dimvec(n)).collect();
    let mut c = Counts::default();
    for (z, rz) in pd.reps.iter().enumerate() {
        for ((lx, ly), k) in hall_counts(rz, cfg.budget)? {
            c.hall.insert((lookup(&index, &lx)?, lookup(&index, &ly)?, z), k);
        }
    }
    for x in 0..pd.reps.len() {
        for y in 0..pd.reps.len() {
            if !in_box(&dims[x].add(&dims[y]), dmax, cfg.max_total) {
                continue;
            }
            for (lz, k) in ext_classify(&pd.reps[x], &pd.reps[y], &form)? {
                c.ext.insert((x, y, lookup(&index, &lz)?), k);
            }
        }
    }
    let small: Vec<usize> = (0..pd.reps.len()).filter(|&z| dims[z].total() as usize <= cfg.flag_total).collect();
    for &z in &small {
        for dx in dims[z].below() {
            for ((lx, ly), k) in direct_sum_splittings(&pd.reps[z], &dx, cfg.budget)? {
                c.split.insert((lookup(&index, &lx)?, lookup(&index, &ly)?, z), k);
            }
        }
        for pc in pair_classes(&pd.reps[z], cfg.budget)? {
            let rz = &pd.reps[z];
            let sub = lookup(&index, &crate::repfield::label(&rz.sub(&pc.sub))?)?;
            let quot = lookup(&index, &crate::repfield::label(&rz.quotient(&pc.sub))?)?;
            c.pairs.push(PairInfo { ambient: z, label: pc.label, sub, quot });
            c.pair_subs.push(pc.sub);
        }
    }
    let pindex: HashMap<(usize, Label), usize> =
        c.pairs.iter().enumerate().map(|(i, pi)| ((pi.ambient, pi.label.clone()), i)).collect();
    let pl = |z: usize, l: Label| {
        pindex
            .get(&(z, l.clone()))
            .copied()
            .ok_or_else(|| Error::Consistency(format!("pair class {l} in ambient {z} missing")))
    };
    for (i, pi) in c.pairs.iter().enumerate() {
        let rz = &pd.reps[pi.ambient];
        for ((m, l2), k) in flag_count(rz, &c.pair_subs[i], cfg.budget)? {
            c.up.insert((i, lookup(&index, &m)?, pl(pi.ambient, l2)?), k);
        }
        for ((m, l1), k) in flag_count_down(rz, &c.pair_subs[i], cfg.budget)? {
            c.down.insert((i, lookup(&index, &m)?, pl(pi.ambient, l1)?), k);
        }
    }
    Ok(c)
}

fn par_map<T: Send, R: Send>(items: Vec<T>, f: impl Fn(T) -> R + Sync) -> Vec<R> {
    std::thread::scope(|s| {
        let hs: Vec<_> = items.into_iter().map(|it| s.spawn(|| f(it))).collect();
        hs.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}

/// Parameters of the automorphism normalisation: `#Aut(Z)(q) = (q-1)^r q^u R(q)`.
fn aut_shape(l: &Label, end_dim: usize) -> (usize, usize) {
    let ms = l.multiplicities();
    let r = ms.iter().map(|(_, m)| m).sum();
    let sq: usize = ms.iter().map(|(_, m)| m * m).sum();
    let tri: usize = ms.iter().map(|(_, m)| m * (m - 1) / 2).sum();
    (r, end_dim - sq + tri)
}

fn fit_family(
    keys: &BTreeSet<Triple>,
    per_prime: &[(u32, &BTreeMap<Triple, u64>)],
    check: (u32, &BTreeMap<Triple, u64>),
    what: &str,
) -> Result<BTreeMap<Triple, CountPoly>> {
    let mut out = BTreeMap::new();
    for k in keys {
        let samples: Vec<(u64, BigInt)> =
            per_prime.iter().map(|(p, m)| (*p as u64, BigInt::from(m.get(k).copied().unwrap_or(0)))).collect();
        let held = (check.0 as u64, BigInt::from(check.1.get(k).copied().unwrap_or(0)));
        let f = interpolate_checked(&samples, &held).map_err(|e| match e {
            Error::NotPolynomialCount(s) => Error::NotPolynomialCount(format!("{what} {k:?}: {s}")),
            e => e,
        })?;
        if !f.is_zero() {
            out.insert(*k, f);
        }
    }
    Ok(out)
}

impl HallTable {
    pub fn build(q: &Quiver, dmax: &DimVec, cfg: &TableConfig) -> Result<HallTable> {
        let all: Vec<u32> = cfg.primes.iter().copied().chain([cfg.check_prime]).collect();
        let mut data = par_map(all, |p| -> Result<(PrimeData, Counts)> {
            let pd = class_data(q, dmax, p, cfg)?;
            let c = counts_at(&pd, q, dmax, cfg)?;
            Ok((pd, c))
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        match Self::assemble(q, dmax, cfg, &data) {
            Err(Error::NotPolynomialCount(_)) if !cfg.extra_primes.is_empty() => {
                let extra = par_map(cfg.extra_primes.clone(), |p| -> Result<(PrimeData, Counts)> {
                    let pd = class_data(q, dmax, p, cfg)?;
                    let c = counts_at(&pd, q, dmax, cfg)?;
                    Ok((pd, c))
                })
                .into_iter()
                .collect::<Result<Vec<_>>>()?;
                let check = data.pop().expect("check prime present");
                data.extend(extra);
                data.push(check);
                Self::assemble(q, dmax, cfg, &data)
            }
            r => r,
        }
    }

    /// `data` holds the fitting primes followed by the check prime.
    fn assemble(q: &Quiver, dmax: &DimVec, cfg: &TableConfig, data: &[(PrimeData, Counts)]) -> Result<HallTable> {
        let (base, _) = &data[0];
        for (pd, c) in data {
            if pd.labels != base.labels {
                return Err(Error::UnsupportedQuiver(format!(
                    "isomorphism classes differ between F_{} and F_{}",
                    base.p, pd.p
                )));
            }
            if pd.hom != base.hom {
                return Err(Error::UnsupportedQuiver(format!("Hom dimensions depend on the prime ({})", pd.p)));
            }
            if c.pairs != data[0].1.pairs {
                return Err(Error::UnsupportedQuiver(format!("pair classes differ over F_{}", pd.p)));
            }
        }
        let (fit, check) = data.split_at(data.len() - 1);
        let check = &check[0];
        let classes = base.labels.clone();
        let index: HashMap<Label, usize> = classes.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();

        let mut aut = Vec::with_capacity(classes.len());
        for (z, l) in classes.iter().enumerate() {
            let (r, u) = aut_shape(l, base.hom[z][z]);
            let norm = |p: u32, a: &BigInt| -> Result<BigInt> {
                let d = num_traits::pow(BigInt::from(p - 1), r) * num_traits::pow(BigInt::from(p), u);
                let (qt, rem) = a.div_rem(&d);
                if !rem.is_zero() {
                    return Err(Error::NotPolynomialCount(format!(
                        "#Aut of {l} over F_{p} not divisible by (p-1)^{r} p^{u}"
                    )));
                }
                Ok(qt)
            };
            let samples =
                fit.iter().map(|(pd, _)| Ok((pd.p as u64, norm(pd.p, &pd.aut[z])?))).collect::<Result<Vec<_>>>()?;
            let held = (check.0.p as u64, norm(check.0.p, &check.0.aut[z])?);
            let resid = interpolate_checked(&samples, &held)
                .map_err(|e| Error::NotPolynomialCount(format!("#Aut of {l}: {e}")))?;
            let shape = CountPoly(crate::coeffring::Poly::from_i64s(&[-1, 1]).pow(r as u32)).mul(&CountPoly::q_pow(u));
            aut.push(shape.mul(&resid));
        }

        let fam = |sel: fn(&Counts) -> &BTreeMap<Triple, u64>, what: &str| {
            let keys: BTreeSet<Triple> = data.iter().flat_map(|(_, c)| sel(c).keys().copied()).collect();
            let per: Vec<(u32, &BTreeMap<Triple, u64>)> = fit.iter().map(|(pd, c)| (pd.p, sel(c))).collect();
            fit_family(&keys, &per, (check.0.p, sel(&check.1)), what)
        };
        let hall = fam(|c| &c.hall, "Hall number")?;
        let ext = fam(|c| &c.ext, "extension count")?;
        let flags_up = fam(|c| &c.up, "flag count")?;
        let flags_down = fam(|c| &c.down, "flag count")?;

        // Splittings: #Aut(X ⊕ Y) / (#Aut X · #Aut Y), checked against the
        // direct counts wherever those were taken.
        let n = q.vertex_count();
        let dims: Vec<DimVec> = classes.iter().map(|l| l.dimvec(n)).collect();
        let mut split = BTreeMap::new();
        for x in 0..classes.len() {
            for y in 0..classes.len() {
                let Some(&z) = index.get(&classes[x].union(&classes[y])) else { continue };
                let den = aut[x].0.mul(&aut[y].0);
                let f = aut[z].0.div_exact(&den).ok_or_else(|| {
                    Error::Consistency(format!(
                        "#Aut({}) not divisible by #Aut({})·#Aut({})",
                        classes[z], classes[x], classes[y]
                    ))
                })?;
                split.insert((x, y, z), CountPoly(f));
            }
        }
        for (pd, c) in data {
            for (k, v) in &c.split {
                let want = split.get(k).map(|f| f.eval(pd.p as u64)).unwrap_or_default();
                if want != BigInt::from(*v) {
                    return Err(Error::Consistency(format!(
                        "splitting count {k:?} over F_{}: counted {v}, Aut quotient gives {want}",
                        pd.p
                    )));
                }
            }
            for (k, f) in &split {
                if dims[k.2].total() as usize <= cfg.flag_total
                    && !c.split.contains_key(k)
                    && !f.eval(pd.p as u64).is_zero()
                {
                    return Err(Error::Consistency(format!(
                        "splitting {k:?} over F_{} not found by direct count",
                        pd.p
                    )));
                }
            }
        }

        // Per-prime Riedtmann identity on the raw counts.
        let form = q.euler_form();
        for (pd, c) in data {
            for (&(x, y, z), e) in &c.ext {
                let h = c.hall.get(&(x, y, z)).copied().unwrap_or(0);
                let lhs = BigInt::from(h) * &pd.aut[x] * &pd.aut[y] * num_traits::pow(BigInt::from(pd.p), pd.hom[y][x]);
                let rhs = BigInt::from(*e) * &pd.aut[z];
                if lhs != rhs {
                    return Err(Error::Consistency(format!(
                        "Riedtmann identity fails over F_{} for ({}, {}, {})",
                        pd.p, classes[x], classes[y], classes[z]
                    )));
                }
            }
            for x in 0..classes.len() {
                for y in 0..classes.len() {
                    let chi = form.eval(&dims[x], &dims[y])?;
                    if pd.hom[x][y] as i64 - chi < 0 {
                        return Err(Error::Consistency(format!(
                            "negative Ext between {} and {}",
                            classes[x], classes[y]
                        )));
                    }
                }
            }
        }

        let mut used: Vec<u32> = fit.iter().map(|(pd, _)| pd.p).collect();
        used.sort();
        let t = HallTable {
            quiver: q.clone(),
            dmax: dmax.clone(),
            max_total: cfg.max_total,
            primes: used,
            check_prime: check.0.p,
            classes,
            hom: base.hom.clone(),
            aut,
            hall,
            ext,
            split,
            pairs: data[0].1.pairs.clone(),
            flags_up,
            flags_down,
            index,
        };
        if let Some(v) = t.verify_identities().into_iter().next() {
            return Err(Error::Consistency(format!("{}: {}", v.check, v.detail)));
        }
        Ok(t)
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_parts(
        quiver: Quiver,
        dmax: DimVec,
        max_total: Option<usize>,
        primes: Vec<u32>,
        check_prime: u32,
        classes: Vec<Label>,
        hom: Vec<Vec<usize>>,
        aut: Vec<CountPoly>,
        hall: BTreeMap<Triple, CountPoly>,
        ext: BTreeMap<Triple, CountPoly>,
        split: BTreeMap<Triple, CountPoly>,
        pairs: Vec<PairInfo>,
        flags_up: BTreeMap<Triple, CountPoly>,
        flags_down: BTreeMap<Triple, CountPoly>,
    ) -> HallTable {
        let index = classes.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        HallTable {
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
            index,
        }
    }

    pub fn id(&self, l: &Label) -> Option<usize> {
        self.index.get(l).copied()
    }

    pub fn label(&self, id: usize) -> &Label {
        &self.classes[id]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn dimvec(&self, id: usize) -> DimVec {
        self.classes[id].dimvec(self.quiver.vertex_count())
    }

    pub fn contains_dim(&self, d: &DimVec) -> bool {
        d.is_nonneg() && in_box(d, &self.dmax, self.max_total)
    }

    pub fn indecomposables(&self) -> Vec<usize> {
        (0..self.classes.len()).filter(|&i| self.classes[i].is_indecomposable()).collect()
    }

    pub fn zero_class(&self) -> usize {
        self.id(&Label::zero()).expect("the zero class is always tabulated")
    }

    /// Classes of dimension vector `d`.
    pub fn classes_of_dim(&self, d: &DimVec) -> Vec<usize> {
        (0..self.classes.len()).filter(|&i| self.dimvec(i) == *d).collect()
    }

    /// `dim Ext¹(X, Y)`.
    pub fn ext1(&self, x: usize, y: usize) -> Result<usize> {
        let chi = self.quiver.euler_form().eval(&self.dimvec(x), &self.dimvec(y))?;
        Ok((self.hom[x][y] as i64 - chi) as usize)
    }

    /// Simple representation at vertex `i`.
    pub fn simple(&self, i: usize) -> Option<usize> {
        self.id(&Label::single(DimVec::unit(self.quiver.vertex_count(), i)))
    }

    /// Structure-constant triples `(x, y, z)` of the products with `X`, `Y`
    /// fixed (from the Hall family).
    pub fn hall_row(&self, x: usize, y: usize) -> impl Iterator<Item = (usize, &CountPoly)> {
        self.hall.range((x, y, 0)..=(x, y, usize::MAX)).map(|(k, v)| (k.2, v))
    }

    pub fn ext_row(&self, x: usize, y: usize) -> impl Iterator<Item = (usize, &CountPoly)> {
        self.ext.range((x, y, 0)..=(x, y, usize::MAX)).map(|(k, v)| (k.2, v))
    }

    /// Pair classes with ambient class `z`.
    pub fn pairs_of(&self, z: usize) -> Vec<usize> {
        (0..self.pairs.len()).filter(|&i| self.pairs[i].ambient == z).collect()
    }

    pub fn pair_id(&self, ambient: usize, label: &Label) -> Option<usize> {
        self.pairs.iter().position(|p| p.ambient == ambient && &p.label == label)
    }

    /// Polynomial identities tying the families together; empty when the
    /// table is consistent.
    pub fn verify_identities(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let form = self.quiver.euler_form();
        let m = self.classes.len();
        let zero = CountPoly::zero();
        let get = |t: &BTreeMap<Triple, CountPoly>, k: Triple| t.get(&k).cloned().unwrap_or_else(CountPoly::zero);
        for x in 0..m {
            for y in 0..m {
                let dz = self.dimvec(x).add(&self.dimvec(y));
                if !self.contains_dim(&dz) {
                    continue;
                }
                let mut total = zero.clone();
                for z in self.classes_of_dim(&dz) {
                    let h = get(&self.hall, (x, y, z));
                    let e = get(&self.ext, (x, y, z));
                    let lhs = h.mul(&self.aut[x]).mul(&self.aut[y]).mul(&CountPoly::q_pow(self.hom[y][x]));
                    let rhs = e.mul(&self.aut[z]);
                    if lhs != rhs {
                        out.push(Violation {
                            check: "riedtmann".into(),
                            detail: format!(
                                "X={} Y={} Z={}: h·Aut(X)·Aut(Y)·q^hom = {lhs}, E·Aut(Z) = {rhs}",
                                self.classes[x], self.classes[y], self.classes[z]
                            ),
                        });
                    }
                    total = total.add(&e);
                }
                let want = match self.ext1(y, x) {
                    Ok(k) => CountPoly::q_pow(k),
                    Err(e) => {
                        out.push(Violation { check: "partition".into(), detail: e.to_string() });
                        continue;
                    }
                };
                if total != want {
                    out.push(Violation {
                        check: "partition".into(),
                        detail: format!(
                            "X={} Y={}: Σ_Z E = {total}, expected {want}",
                            self.classes[x], self.classes[y]
                        ),
                    });
                }
                let chi = form.eval(&self.dimvec(x), &self.dimvec(y)).unwrap_or(0);
                if (self.hom[x][y] as i64) < chi {
                    out.push(Violation {
                        check: "euler".into(),
                        detail: format!("hom({},{}) below χ", self.classes[x], self.classes[y]),
                    });
                }
            }
        }
        for (z, a) in self.aut.iter().enumerate() {
            if self.classes[z].is_zero() {
                if !a.0.is_one() {
                    out.push(Violation { check: "aut".into(), detail: format!("#Aut(0) = {a}") });
                }
            } else if !a.at_one().is_zero() {
                out.push(Violation {
                    check: "aut".into(),
                    detail: format!("#Aut({}) = {a} does not vanish at q=1", self.classes[z]),
                });
            }
        }
        out
    }

    /// Scalar tables at `q = 1`.
    pub fn specialize_one(&self) -> Specialized<BigInt> {
        self.specialize(|f| f.at_one())
    }

    /// Scalar tables at `q = ℓ`.
    pub fn specialize_generic(&self) -> Specialized<RatFunc> {
        self.specialize(|f| f.generic())
    }

    fn specialize<T>(&self, f: impl Fn(&CountPoly) -> T) -> Specialized<T> {
        let map = |t: &BTreeMap<Triple, CountPoly>| t.iter().map(|(k, v)| (*k, f(v))).collect();
        Specialized {
            hall: map(&self.hall),
            ext: map(&self.ext),
            split: map(&self.split),
            aut: self.aut.iter().map(&f).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Specialized<T> {
    pub hall: BTreeMap<Triple, T>,
    pub ext: BTreeMap<Triple, T>,
    pub split: BTreeMap<Triple, T>,
    pub aut: Vec<T>,
}

impl Specialized<BigInt> {
    pub fn hall_at(&self, k: Triple) -> BigInt {
        self.hall.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Label {
        Label::parse(s).unwrap()
    }

    #[test]
    fn a2_small_box() {
        let q = Quiver::linear(2);
        let t = HallTable::build(&q, &DimVec(vec![1, 1]), &TableConfig::default()).unwrap();
        assert_eq!(t.indecomposables().len(), 3);
        let (v1, v2, p) = (t.id(&l("[[1,0]]")).unwrap(), t.id(&l("[[0,1]]")).unwrap(), t.id(&l("[[1,1]]")).unwrap());
        let s = t.id(&l("[[1,0],[0,1]]")).unwrap();
        assert_eq!(t.hall[&(v2, v1, p)], CountPoly::from_i64s(&[1]));
        assert_eq!(t.ext[&(v2, v1, p)], CountPoly::from_i64s(&[-1, 1]));
        assert_eq!(t.ext[&(v2, v1, s)], CountPoly::from_i64s(&[1]));
        assert!(!t.hall.contains_key(&(v1, v2, p)));
        assert_eq!(t.aut[v1], CountPoly::from_i64s(&[-1, 1]));
        assert_eq!(t.aut[s], CountPoly::from_i64s(&[1, -2, 1]));
        assert_eq!(t.ext[&(v2, v1, p)].generic().to_string(), "L-1");
        assert!(t.verify_identities().is_empty());
    }

    #[test]
    fn point_quiver_gives_gauss_binomials() {
        let q = Quiver::new(1, vec![]).unwrap();
        let t = HallTable::build(&q, &DimVec(vec![3]), &TableConfig::default()).unwrap();
        let v = |k: usize| t.id(&Label::new(vec![DimVec(vec![1]); k])).unwrap();
        assert_eq!(t.hall[&(v(1), v(1), v(2))], CountPoly::from_i64s(&[1, 1]));
        assert_eq!(t.hall[&(v(1), v(1), v(2))].at_one(), BigInt::from(2));
        for n in 0..=3usize {
            for k in 0..=n {
                let g = crate::coeffring::gauss_binomial(n as u32, k as u32).unwrap();
                assert_eq!(t.hall[&(v(k), v(n - k), v(n))].generic(), g);
            }
        }
        assert_eq!(t.aut[v(2)], CountPoly::from_i64s(&[0, 1, -1, -1, 1]));
    }

    #[test]
    fn empty_box() {
        let q = Quiver::linear(2);
        let t = HallTable::build(&q, &DimVec(vec![0, 0]), &TableConfig::default()).unwrap();
        assert_eq!(t.classes, vec![Label::zero()]);
    }
}
