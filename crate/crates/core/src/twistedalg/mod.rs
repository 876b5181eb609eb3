//! Explicit algebras built from a biadditive form `χ` alone: the twisted
//! group algebra `A` on dimension vectors, the algebra `B` on labelled
//! multisets (two multiplication formulas), its `ℓ → 1` limit `C`, and the
//! maps between them.

mod graphs;
mod ik;

use crate::coeffring::RatFunc;
use crate::element::{strip_literal, Elem};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::quiver::{DimVec, EulerForm};
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};
use std::collections::HashMap;

pub use graphs::{block_graph_sum, block_partition_sum, block_tree_sum, set_partitions, MAX_EDGES, MAX_POINTS};
pub use ik::IKClass;

pub type AElem = Elem<DimVec, RatFunc>;
pub type BElem = Elem<IKClass, RatFunc>;
pub type CElem = Elem<IKClass, BigRational>;

/// The two evaluations of the `B` product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BMode {
    /// Alternating sum over refinements of each block.
    Sum,
    /// Connected graphs on each block, weighted by their first Betti number.
    Graph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketKind {
    B,
    C,
    /// `C` with the form replaced by half its antisymmetrization.
    CY,
}

fn to_big(r: Rational64) -> BigRational {
    BigRational::new((*r.numer()).into(), (*r.denom()).into())
}

/// `ℓ^r` for `r ∈ ½ℤ`, as a power of `℘`.
pub fn l_pow_q(r: Rational64) -> Result<RatFunc> {
    let twice = r * 2;
    if !twice.is_integer() {
        return Err(Error::Domain(format!("ℓ^{r} needs a root of ℘")));
    }
    Ok(RatFunc::p_pow(twice.to_integer()))
}

fn check_dim(d: &DimVec, f: &EulerForm) -> Result<()> {
    if d.len() != f.rank() {
        return Err(Error::DimensionMismatch { expected: f.rank(), found: d.len() });
    }
    Ok(())
}

// ---- A -------------------------------------------------------------------

pub fn a_basis(d: DimVec) -> AElem {
    AElem::basis(d)
}

/// `a^α ⋆ a^β = ℓ^{-χ(β,α)} a^{α+β}`.
pub fn a_mult(x: &AElem, y: &AElem, f: &EulerForm) -> Result<AElem> {
    x.bilinear(y, |a, b| {
        check_dim(a, f)?;
        check_dim(b, f)?;
        Ok(AElem::term(a.add(b), l_pow_q(-f.eval_q(b, a)?)?))
    })
}

/// Multilinear poset operation: `a^{α_1} … a^{α_n} ↦ ∏_{i≠j, i⪯j}
/// ℓ^{-χ(α_j,α_i)} a^{Σα}`. Any finite poset is allowed.
pub fn a_poset_op(p: &Poset, inputs: &[AElem], f: &EulerForm) -> Result<AElem> {
    if inputs.len() != p.len() {
        return Err(Error::DimensionMismatch { expected: p.len(), found: inputs.len() });
    }
    let pairs = p.strict_pairs();
    let mut acc: Vec<(Vec<DimVec>, RatFunc)> = vec![(Vec::new(), RatFunc::one())];
    for x in inputs {
        let mut next = Vec::new();
        for (ds, c) in &acc {
            for (d, cx) in x.terms() {
                check_dim(d, f)?;
                let mut ds = ds.clone();
                ds.push(d.clone());
                next.push((ds, c.mul(cx)));
            }
        }
        acc = next;
    }
    let mut out = AElem::zero();
    for (ds, c) in acc {
        let mut e = Rational64::zero();
        for &(i, j) in &pairs {
            e -= f.eval_q(&ds[j], &ds[i])?;
        }
        let sum = ds.iter().fold(DimVec::zeros(f.rank()), |a, d| a.add(d));
        out.add_term(sum, c.mul(&l_pow_q(e)?));
    }
    Ok(out)
}

/// `ã^α = ℘^{-χ(α,α)} a^α`.
pub fn a_tilde(d: &DimVec, f: &EulerForm) -> Result<AElem> {
    check_dim(d, f)?;
    let e = f.eval_q(d, d)?;
    if !e.is_integer() {
        return Err(Error::Domain(format!("χ({d},{d}) = {e} is not an integer")));
    }
    Ok(AElem::term(d.clone(), RatFunc::p_pow(-e.to_integer())))
}

pub fn parse_a(text: &str, n: usize) -> Result<AElem> {
    AElem::parse(text, |lit| {
        let d = DimVec::parse(strip_literal(lit, "a", '[', ']')?)?;
        if d.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: d.len() });
        }
        Ok(d)
    })
}

pub fn render_a(x: &AElem) -> String {
    x.render(|d| format!("a{d}"))
}

// ---- B and C ---------------------------------------------------------------

/// `b^α`, the singleton class.
pub fn b_single(d: DimVec) -> Result<BElem> {
    Ok(BElem::basis(IKClass::single(d)?))
}

pub fn c_single(d: DimVec) -> Result<CElem> {
    Ok(CElem::basis(IKClass::single(d)?))
}

/// Structure constants of `b_[I,κ] ⋆ b_[J,λ]`.
pub fn b_mult_basis(i: &IKClass, j: &IKClass, f: &EulerForm, mode: BMode) -> Result<BElem> {
    let (ki, kj) = (i.parts(), j.parts());
    for d in ki.iter().chain(kj) {
        check_dim(d, f)?;
    }
    let n = ki.len() + kj.len();
    if n > MAX_POINTS {
        return Err(Error::Budget(format!("{n} points exceed the limit {MAX_POINTS}")));
    }
    if mode == BMode::Graph && ki.len() * kj.len() > MAX_EDGES {
        return Err(Error::Budget(format!("{}×{} edge slots exceed {MAX_EDGES}", ki.len(), kj.len())));
    }
    // ℓ^{-χ(λ(j),κ(i))} = ℘^{w[i][j]}
    let mut w = vec![vec![0i64; kj.len()]; ki.len()];
    for (a, da) in ki.iter().enumerate() {
        for (b, db) in kj.iter().enumerate() {
            let e = -f.eval_q(db, da)? * 2;
            if !e.is_integer() {
                return Err(Error::Domain(format!("χ({db},{da}) is not a half-integer")));
            }
            w[a][b] = e.to_integer();
        }
    }
    let mut memo: HashMap<Vec<usize>, RatFunc> = HashMap::new();
    let mut out = BElem::zero();
    for part in set_partitions(n) {
        let mut coef = RatFunc::one();
        let mut dims = Vec::with_capacity(part.len());
        for block in &part {
            let left: Vec<usize> = block.iter().copied().filter(|&v| v < ki.len()).collect();
            let right: Vec<usize> = block.iter().filter(|&&v| v >= ki.len()).map(|&v| v - ki.len()).collect();
            let c = match memo.get(block) {
                Some(c) => c.clone(),
                None => {
                    let c = match mode {
                        BMode::Sum => block_partition_sum(&left, &right, &w),
                        BMode::Graph => block_graph_sum(&left, &right, &w),
                    }?;
                    memo.insert(block.clone(), c.clone());
                    c
                }
            };
            if c.is_zero() {
                coef = RatFunc::zero();
                break;
            }
            coef = coef.mul(&c);
            let d = left
                .iter()
                .map(|&a| &ki[a])
                .chain(right.iter().map(|&b| &kj[b]))
                .fold(DimVec::zeros(f.rank()), |s, d| s.add(d));
            dims.push(d);
        }
        if !coef.is_zero() {
            out.add_term(IKClass::new(dims)?, coef);
        }
    }
    Ok(out)
}

pub fn b_mult(x: &BElem, y: &BElem, f: &EulerForm, mode: BMode) -> Result<BElem> {
    x.bilinear(y, |i, j| b_mult_basis(i, j, f, mode))
}

pub fn b_bracket(x: &BElem, y: &BElem, f: &EulerForm, mode: BMode) -> Result<BElem> {
    Ok(b_mult(x, y, f, mode)?.sub(&b_mult(y, x, f, mode)?))
}

/// Every coefficient lies in the subring finite at `ℓ = 1`.
pub fn is_lambda_circ(x: &BElem) -> bool {
    x.terms().all(|(_, c)| c.is_lambda_circ())
}

/// Structure constants of `c_[I,κ] ⋆ c_[J,λ]`: spanning trees per block with
/// edge weights `-χ(λ(j),κ(i))`.
pub fn c_mult_basis(i: &IKClass, j: &IKClass, f: &EulerForm) -> Result<CElem> {
    let (ki, kj) = (i.parts(), j.parts());
    for d in ki.iter().chain(kj) {
        check_dim(d, f)?;
    }
    let n = ki.len() + kj.len();
    if n > MAX_POINTS || ki.len() * kj.len() > MAX_EDGES {
        return Err(Error::Budget(format!("{}×{} classes exceed the graph limits", ki.len(), kj.len())));
    }
    let mut w = vec![vec![BigRational::zero(); kj.len()]; ki.len()];
    for (a, da) in ki.iter().enumerate() {
        for (b, db) in kj.iter().enumerate() {
            w[a][b] = -to_big(f.eval_q(db, da)?);
        }
    }
    let mut out = CElem::zero();
    for part in set_partitions(n) {
        let mut coef = BigRational::one();
        let mut dims = Vec::with_capacity(part.len());
        for block in &part {
            let left: Vec<usize> = block.iter().copied().filter(|&v| v < ki.len()).collect();
            let right: Vec<usize> = block.iter().filter(|&&v| v >= ki.len()).map(|&v| v - ki.len()).collect();
            coef *= block_tree_sum(&left, &right, &w);
            if coef.is_zero() {
                break;
            }
            dims.push(
                left.iter()
                    .map(|&a| &ki[a])
                    .chain(right.iter().map(|&b| &kj[b]))
                    .fold(DimVec::zeros(f.rank()), |s, d| s.add(d)),
            );
        }
        if !coef.is_zero() {
            out.add_term(IKClass::new(dims)?, coef);
        }
    }
    Ok(out)
}

pub fn c_mult(x: &CElem, y: &CElem, f: &EulerForm) -> Result<CElem> {
    x.bilinear(y, |i, j| c_mult_basis(i, j, f))
}

pub fn c_bracket(x: &CElem, y: &CElem, f: &EulerForm) -> Result<CElem> {
    Ok(c_mult(x, y, f)?.sub(&c_mult(y, x, f)?))
}

/// Bracket of two singleton classes, in `B`, `C`, or the Calabi–Yau
/// version of `C` built from `½χ̄`. The result is again supported on
/// singletons.
pub fn ind_bracket(kind: BracketKind, a: &DimVec, b: &DimVec, f: &EulerForm) -> Result<IndValue> {
    let out = match kind {
        BracketKind::B => IndValue::B(b_bracket(&b_single(a.clone())?, &b_single(b.clone())?, f, BMode::Graph)?),
        BracketKind::C => IndValue::C(c_bracket(&c_single(a.clone())?, &c_single(b.clone())?, f)?),
        BracketKind::CY => IndValue::C(c_bracket(&c_single(a.clone())?, &c_single(b.clone())?, &f.half_antisym())?),
    };
    let singletons = match &out {
        IndValue::B(x) => x.keys().all(|k| k.len() == 1),
        IndValue::C(x) => x.keys().all(|k| k.len() == 1),
    };
    if !singletons {
        return Err(Error::Consistency(format!("bracket of {a} and {b} left the singleton classes")));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub enum IndValue {
    B(BElem),
    C(CElem),
}

/// Coefficientwise evaluation at `ℓ = 1`.
pub fn pi_morphism(x: &BElem) -> Result<CElem> {
    x.map_coeffs(|c| c.pi_eval())
}

/// `Δ(b_[I,κ]) = (ℓ-1)^{-|I|} a^{κ(I)}`.
pub fn delta_ba(x: &BElem, n: usize) -> Result<AElem> {
    let lm1 = RatFunc::l().sub(&RatFunc::one());
    let mut out = AElem::zero();
    for (k, c) in x.terms() {
        out.add_term(k.total(n), c.mul(&lm1.pow(-(k.len() as i64))?));
    }
    Ok(out)
}

/// `b̃^α = ℘^{1-χ(α,α)} b^α`.
pub fn b_tilde(d: &DimVec, f: &EulerForm) -> Result<BElem> {
    check_dim(d, f)?;
    let e = f.eval_q(d, d)?;
    if !e.is_integer() {
        return Err(Error::Domain(format!("χ({d},{d}) = {e} is not an integer")));
    }
    Ok(BElem::term(IKClass::single(d.clone())?, RatFunc::p_pow(1 - e.to_integer())))
}

pub fn parse_b(text: &str, n: usize) -> Result<BElem> {
    BElem::parse(text, |lit| IKClass::parse_checked(strip_literal(lit, "b", '{', '}')?, n))
}

pub fn parse_c(text: &str, n: usize) -> Result<CElem> {
    CElem::parse(text, |lit| IKClass::parse_checked(strip_literal(lit, "c", '{', '}')?, n))
}

pub fn render_b(x: &BElem) -> String {
    x.render(|k| format!("b{k}"))
}

pub fn render_c(x: &CElem) -> String {
    x.render(|k| format!("c{k}"))
}

#[cfg(test)]
mod tests;
