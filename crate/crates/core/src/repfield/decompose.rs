//! Krull–Schmidt decomposition by Fitting splittings of endomorphisms.
//!
//! For an endomorphism `f` and a scalar `λ`, `g = f - λ` gives
//! `Z = ker g^N ⊕ im g^N` with both summands subrepresentations; the split is
//! proper exactly when `g` is neither nilpotent nor invertible. A
//! representation whose endomorphism ring is one-dimensional is a brick and
//! therefore indecomposable. Splitting candidates are tried in a fixed
//! order (basis, products, sums, seeded random combinations, then an
//! exhaustive sweep when small), so results are deterministic.

use super::field::{gl_order, Mat};
use super::rep::Rep;
use crate::error::{Error, Result};
use crate::quiver::DimVec;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::fmt;

/// Isomorphism-class label: the multiset of dimension vectors of the
/// indecomposable summands, kept in non-increasing lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Label(Vec<DimVec>);

impl Label {
    pub fn new(mut parts: Vec<DimVec>) -> Self {
        parts.retain(|d| !d.is_zero());
        parts.sort_by(|a, b| b.cmp(a));
        Label(parts)
    }

    pub fn zero() -> Self {
        Label(Vec::new())
    }

    pub fn single(d: DimVec) -> Self {
        Self::new(vec![d])
    }

    pub fn parts(&self) -> &[DimVec] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_indecomposable(&self) -> bool {
        self.0.len() == 1
    }

    pub fn dimvec(&self, n: usize) -> DimVec {
        self.0.iter().fold(DimVec::zeros(n), |a, d| a.add(d))
    }

    pub fn total(&self) -> i64 {
        self.0.iter().map(|d| d.total()).sum()
    }

    /// Distinct summands with multiplicities.
    pub fn multiplicities(&self) -> Vec<(DimVec, usize)> {
        let mut out: Vec<(DimVec, usize)> = Vec::new();
        for d in &self.0 {
            match out.last_mut() {
                Some((e, m)) if e == d => *m += 1,
                _ => out.push((d.clone(), 1)),
            }
        }
        out
    }

    pub fn union(&self, o: &Label) -> Label {
        let mut v = self.0.clone();
        v.extend(o.0.iter().cloned());
        Label::new(v)
    }

    /// Remove the summands of `o`; `None` if `o` is not a sub-multiset.
    pub fn minus(&self, o: &Label) -> Option<Label> {
        let mut v = self.0.clone();
        for d in &o.0 {
            let k = v.iter().position(|e| e == d)?;
            v.remove(k);
        }
        Some(Label(v))
    }

    /// Parse `[[1,0],[0,1]]` (also `[]` for zero).
    pub fn parse(s: &str) -> Result<Label> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("bad class label {s:?}")))?;
        let mut parts = Vec::new();
        let mut rest = inner.trim();
        while !rest.is_empty() {
            let rest1 = rest.strip_prefix('[').ok_or_else(|| Error::Parse(format!("bad class label {s:?}")))?;
            let close = rest1.find(']').ok_or_else(|| Error::Parse(format!("bad class label {s:?}")))?;
            let d = DimVec::parse(&rest1[..close])?;
            if !d.is_nonneg() {
                return Err(Error::Parse(format!("negative dimension in {s:?}")));
            }
            parts.push(d);
            rest = rest1[close + 1..].trim_start();
            rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
        }
        Ok(Label::new(parts))
    }
}

impl Ord for Label {
    /// Canonical class order: total dimension, then summed dimension vector,
    /// then fewer summands first, then the summands themselves.
    fn cmp(&self, o: &Self) -> Ordering {
        let n = self.0.first().or(o.0.first()).map_or(0, |d| d.len());
        self.total()
            .cmp(&o.total())
            .then_with(|| o.dimvec(n).cmp(&self.dimvec(n)))
            .then_with(|| self.0.len().cmp(&o.0.len()))
            .then_with(|| o.0.cmp(&self.0))
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, d) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

/// A basis of `End(Z)`.
pub fn endo_basis(z: &Rep) -> Vec<Vec<Mat>> {
    Rep::hom_basis(z, z)
}

fn combine(basis: &[Vec<Mat>], coeffs: &[u32], p: u32, dims: &[usize]) -> Vec<Mat> {
    let mut f: Vec<Mat> = dims.iter().map(|&d| Mat::zero(d, d)).collect();
    for (b, &c) in basis.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for (fv, bv) in f.iter_mut().zip(b) {
            *fv = fv.add(&bv.scale(c, p), p);
        }
    }
    f
}

/// Kernel and image bases of `(f - λ)^N` for the first `λ` giving a proper
/// Fitting decomposition.
fn fitting_split(z: &Rep, f: &[Mat]) -> Option<(Vec<Mat>, Vec<Mat>)> {
    let p = z.prime();
    let total = z.total_dim();
    let n = z.dims().iter().copied().max().unwrap_or(0);
    for lambda in 0..p {
        let powers: Vec<Mat> = f
            .iter()
            .map(|fv| {
                let g = fv.sub(&Mat::identity(fv.rows).scale(lambda, p), p);
                g.pow(n, p)
            })
            .collect();
        let rank: usize = powers.iter().map(|h| h.rank(p)).sum();
        if rank > 0 && rank < total {
            let ker = powers.iter().map(|h| h.kernel_basis(p)).collect();
            let img = powers.iter().map(|h| h.column_basis(p)).collect();
            return Some((ker, img));
        }
    }
    None
}

const RANDOM_TRIES: usize = 96;
const EXHAUSTIVE_LIMIT: u64 = 1 << 14;

fn find_split(z: &Rep, basis: &[Vec<Mat>]) -> Result<(Vec<Mat>, Vec<Mat>)> {
    let p = z.prime();
    let dims = z.dims();
    for b in basis {
        if let Some(s) = fitting_split(z, b) {
            return Ok(s);
        }
    }
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i..] {
            let prod: Vec<Mat> = a.iter().zip(b).map(|(x, y)| x.mul(y, p)).collect();
            if let Some(s) = fitting_split(z, &prod) {
                return Ok(s);
            }
            let sum: Vec<Mat> = a.iter().zip(b).map(|(x, y)| x.add(y, p)).collect();
            if let Some(s) = fitting_split(z, &sum) {
                return Ok(s);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x4b53_u64 ^ (basis.len() as u64) << 8 ^ p as u64);
    for _ in 0..RANDOM_TRIES {
        let c: Vec<u32> = (0..basis.len()).map(|_| rng.gen_range(0..p)).collect();
        if let Some(s) = fitting_split(z, &combine(basis, &c, p, dims)) {
            return Ok(s);
        }
    }
    let space = (p as u64).checked_pow(basis.len() as u32);
    match space {
        Some(sz) if sz <= EXHAUSTIVE_LIMIT => {
            let mut c = vec![0u32; basis.len()];
            for mut code in 0..sz {
                for x in c.iter_mut() {
                    *x = (code % p as u64) as u32;
                    code /= p as u64;
                }
                if let Some(s) = fitting_split(z, &combine(basis, &c, p, dims)) {
                    return Ok(s);
                }
            }
            Err(Error::UnsupportedQuiver(format!(
                "indecomposable of dimension {} has a {}-dimensional endomorphism ring (not a brick)",
                z.dimvec(),
                basis.len()
            )))
        }
        _ => Err(Error::Budget(format!(
            "no splitting endomorphism found for a representation of dimension {}",
            z.dimvec()
        ))),
    }
}

/// Decompose into indecomposable summands, each a brick.
pub fn decompose(z: &Rep) -> Result<Vec<Rep>> {
    let mut out = Vec::new();
    let mut stack = vec![z.clone()];
    while let Some(r) = stack.pop() {
        if r.total_dim() == 0 {
            continue;
        }
        let basis = endo_basis(&r);
        if basis.len() == 1 {
            out.push(r);
            continue;
        }
        let (ker, img) = find_split(&r, &basis)?;
        stack.push(r.restrict(&img));
        stack.push(r.restrict(&ker));
    }
    Ok(out)
}

pub fn label(z: &Rep) -> Result<Label> {
    Ok(Label::new(decompose(z)?.iter().map(|r| r.dimvec()).collect()))
}

/// `#Aut(Z)` from the decomposition: with bricks `V_i` of multiplicity
/// `m_i`, `End(Z)` modulo its radical is `∏ M_{m_i}(F_p)`, so
/// `#Aut = p^(dim End - Σ m_i²) ∏ #GL(m_i, p)`. This relies on summands with
/// equal labels being isomorphic, which the enumeration verifies by orbit
/// counting.
pub fn aut_order(z: &Rep) -> Result<BigInt> {
    let l = label(z)?;
    let end = Rep::hom_dim(z, z);
    Ok(aut_from_parts(&l, end, z.prime() as u64))
}

pub fn aut_from_parts(l: &Label, end_dim: usize, p: u64) -> BigInt {
    let mult = l.multiplicities();
    let sq: usize = mult.iter().map(|(_, m)| m * m).sum();
    let mut acc = num_traits::pow(BigInt::from(p), end_dim - sq);
    for (_, m) in mult {
        acc *= gl_order(m, p);
    }
    acc
}

/// `#Aut(Z)` by enumerating all of `End(Z)`. Exponential; for tests.
pub fn aut_order_direct(z: &Rep) -> u64 {
    let p = z.prime();
    let basis = endo_basis(z);
    let total = (p as u64).pow(basis.len() as u32);
    let mut c = vec![0u32; basis.len()];
    let mut count = 0;
    for mut code in 0..total {
        for x in c.iter_mut() {
            *x = (code % p as u64) as u32;
            code /= p as u64;
        }
        let f = combine(&basis, &c, p, z.dims());
        if f.iter().all(|m| m.is_invertible(p)) {
            count += 1;
        }
    }
    count
}

/// Idempotents of `End(Z)` by exhaustive search. Exponential; for tests.
pub fn idempotent_count(z: &Rep) -> usize {
    let p = z.prime();
    let basis = endo_basis(z);
    let total = (p as u64).pow(basis.len() as u32);
    let mut c = vec![0u32; basis.len()];
    let mut count = 0;
    for mut code in 0..total {
        for x in c.iter_mut() {
            *x = (code % p as u64) as u32;
            code /= p as u64;
        }
        let f = combine(&basis, &c, p, z.dims());
        if f.iter().all(|m| m.mul(m, p) == *m) {
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn proj(p: u32) -> Rep {
        Rep::for_quiver(&Quiver::linear(2), p, &DimVec(vec![1, 1]), vec![Mat::from_rows(1, 1, vec![1])]).unwrap()
    }

    #[test]
    fn label_order_and_text() {
        let l = Label::parse("[[0,1],[1,0]]").unwrap();
        assert_eq!(l.to_string(), "[[1,0],[0,1]]");
        assert!(Label::parse("[[1,1]]").unwrap() < l);
        assert_eq!(Label::parse("[]").unwrap(), Label::zero());
        assert!(Label::parse("[[1,-1]]").is_err());
    }

    #[test]
    fn decomposes_sums_of_known_pieces() {
        let q = Quiver::linear(2);
        for p in [2, 3, 5] {
            let v1 = Rep::simple(&q, p, 0);
            let v2 = Rep::simple(&q, p, 1);
            let z = proj(p).direct_sum(&v1).direct_sum(&proj(p)).direct_sum(&v2);
            assert_eq!(label(&z).unwrap().to_string(), "[[1,1],[1,1],[1,0],[0,1]]");
            assert_eq!(label(&proj(p)).unwrap().to_string(), "[[1,1]]");
        }
    }

    #[test]
    fn aut_formula_matches_direct_count() {
        let q = Quiver::linear(2);
        for p in [2, 3] {
            let v1 = Rep::simple(&q, p, 0);
            let v2 = Rep::simple(&q, p, 1);
            for z in
                [v1.clone(), v1.direct_sum(&v2), v1.direct_sum(&v1), proj(p).direct_sum(&v2), proj(p).direct_sum(&v1)]
            {
                assert_eq!(aut_order(&z).unwrap(), BigInt::from(aut_order_direct(&z)));
            }
        }
        // (p-1)^2 for V1 ⊕ V2 and |GL(2,p)| for V1 ⊕ V1
        let v1 = Rep::simple(&q, 5, 0);
        assert_eq!(aut_order(&v1.direct_sum(&Rep::simple(&q, 5, 1))).unwrap(), BigInt::from(16));
        assert_eq!(aut_order(&v1.direct_sum(&v1)).unwrap(), BigInt::from(480));
    }

    #[test]
    fn kronecker_brick_detection() {
        // A (1,1) Kronecker module is a brick, so labels alone cannot tell
        // the p+1 of them apart; the enumeration catches that by orbit counting.
        let k = Quiver::load("vertices 2\narrow 1 2\narrow 1 2").unwrap();
        let r = Rep::for_quiver(
            &k,
            3,
            &DimVec(vec![1, 1]),
            vec![Mat::from_rows(1, 1, vec![1]), Mat::from_rows(1, 1, vec![0])],
        )
        .unwrap();
        assert_eq!(label(&r).unwrap().to_string(), "[[1,1]]");
    }
}
