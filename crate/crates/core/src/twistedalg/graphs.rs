//! Per-block sums behind the `B` and `C` products.
//!
//! A block is a set of left points (from `I`) and right points (from `J`);
//! edges only run left to right. Weights for `B` are exponents of `℘`
//! (`ℓ^{-χ(λ(j),κ(i))} = ℘^{w}`), so block sums are Laurent polynomials in
//! `℘` until the final `(ℓ-1)` power is applied.

use crate::coeffring::{Poly, RatFunc};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Points of `I ⊔ J` accepted by either product.
pub const MAX_POINTS: usize = 10;
/// Edge slots of the bitmask graph enumeration.
pub const MAX_EDGES: usize = 16;

type Laurent = BTreeMap<i64, i128>;

fn laurent_mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (&ea, &ca) in a {
        for (&eb, &cb) in b {
            *out.entry(ea + eb).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn laurent_add(acc: &mut Laurent, b: &Laurent, scale: i128) {
    for (&e, &c) in b {
        *acc.entry(e).or_default() += c * scale;
    }
    acc.retain(|_, c| *c != 0);
}

fn to_ratfunc(l: &Laurent) -> RatFunc {
    let Some(&lo) = l.keys().next() else { return RatFunc::zero() };
    let hi = *l.keys().last().expect("nonempty");
    let mut c = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (&e, &v) in l {
        c[(e - lo) as usize] = BigInt::from(v);
    }
    RatFunc::from_poly(Poly::from_coeffs(c)).mul(&RatFunc::p_pow(lo))
}

/// `(ℓ-1)^{1-V}` for a block of `V` points.
fn lm1_power(v: usize) -> Result<RatFunc> {
    RatFunc::l().sub(&RatFunc::one()).pow(1 - v as i64)
}

/// All set partitions of `{0..n}`, blocks in increasing order of their
/// least element.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn go(k: usize, n: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
        if k == n {
            let blocks = if n == 0 { 0 } else { max + 1 };
            let mut p = vec![Vec::new(); blocks];
            for (i, &b) in rgs.iter().enumerate() {
                p[b].push(i);
            }
            out.push(p);
            return;
        }
        let top = if k == 0 { 0 } else { max + 1 };
        for b in 0..=top {
            rgs[k] = b;
            go(k + 1, n, max.max(b), rgs, out);
        }
    }
    go(0, n, 0, &mut rgs, &mut out);
    out
}

/// Alternating sum over refinements `Q` of the block:
/// `(ℓ-1)^{1-V} Σ_Q (-1)^{|Q|-1}(|Q|-1)! ∏_{q∈Q} ℓ^{Σ_{i,j∈q} w_ij}`.
pub fn block_partition_sum(left: &[usize], right: &[usize], w: &[Vec<i64>]) -> Result<RatFunc> {
    let pts: Vec<(bool, usize)> = left.iter().map(|&a| (true, a)).chain(right.iter().map(|&b| (false, b))).collect();
    let v = pts.len();
    let mut acc = Laurent::new();
    for q in set_partitions(v) {
        let mut e = 0i64;
        for part in &q {
            for &x in part {
                for &y in part {
                    if let ((true, a), (false, b)) = (pts[x], pts[y]) {
                        e += w[a][b];
                    }
                }
            }
        }
        let k = q.len() as i128;
        let sign = if k % 2 == 1 { 1 } else { -1 };
        let fact: i128 = (1..k).product();
        *acc.entry(e).or_default() += sign * fact;
    }
    acc.retain(|_, c| *c != 0);
    Ok(to_ratfunc(&acc).mul(&lm1_power(v)?))
}

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    let mut y = x;
    while p[y] != r {
        let n = p[y];
        p[y] = r;
        y = n;
    }
    r
}

/// Connected spanning graphs on the block:
/// `(ℓ-1)^{1-V} Σ_Γ ∏_{edges} (ℓ^{w_e} - 1)`.
pub fn block_graph_sum(left: &[usize], right: &[usize], w: &[Vec<i64>]) -> Result<RatFunc> {
    let v = left.len() + right.len();
    if v == 1 {
        return Ok(RatFunc::one());
    }
    let edges: Vec<(usize, usize)> = (0..left.len()).flat_map(|a| (0..right.len()).map(move |b| (a, b))).collect();
    if edges.len() > MAX_EDGES {
        return Err(Error::Budget(format!("{} edge slots exceed {MAX_EDGES}", edges.len())));
    }
    let factor: Vec<Laurent> = edges
        .iter()
        .map(|&(a, b)| {
            let mut f = Laurent::new();
            laurent_add(&mut f, &Laurent::from([(w[left[a]][right[b]], 1)]), 1);
            laurent_add(&mut f, &Laurent::from([(0, 1)]), -1);
            f
        })
        .collect();
    let mut acc = Laurent::new();
    for mask in 1u32..(1 << edges.len()) {
        if edges.len() < v - 1 || (mask.count_ones() as usize) < v - 1 {
            continue;
        }
        let used: Vec<usize> = (0..edges.len()).filter(|&k| mask >> k & 1 == 1).collect();
        if used.iter().any(|&k| factor[k].is_empty()) {
            continue;
        }
        let mut parent: Vec<usize> = (0..v).collect();
        let mut comps = v;
        for &k in &used {
            let (a, b) = edges[k];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, left.len() + b));
            if ra != rb {
                parent[ra] = rb;
                comps -= 1;
            }
        }
        if comps != 1 {
            continue;
        }
        let prod = used.iter().fold(Laurent::from([(0, 1)]), |p, &k| laurent_mul(&p, &factor[k]));
        laurent_add(&mut acc, &prod, 1);
    }
    Ok(to_ratfunc(&acc).mul(&lm1_power(v)?))
}

/// Weighted spanning trees of the complete bipartite graph on the block.
pub fn block_tree_sum(left: &[usize], right: &[usize], w: &[Vec<BigRational>]) -> BigRational {
    let v = left.len() + right.len();
    if v == 1 {
        return BigRational::one();
    }
    let edges: Vec<(usize, usize, BigRational)> = (0..left.len())
        .flat_map(|a| (0..right.len()).map(move |b| (a, b)))
        .map(|(a, b)| (a, left.len() + b, w[left[a]][right[b]].clone()))
        .filter(|e| !e.2.is_zero())
        .collect();
    fn extend(
        edges: &[(usize, usize, BigRational)],
        from: usize,
        parent: &[usize],
        need: usize,
        acc: &BigRational,
        total: &mut BigRational,
    ) {
        if need == 0 {
            *total += acc;
            return;
        }
        for k in from..edges.len() {
            if edges.len() - k < need {
                break;
            }
            let (a, b, ref c) = edges[k];
            let mut p = parent.to_vec();
            let (ra, rb) = (find(&mut p, a), find(&mut p, b));
            if ra == rb {
                continue;
            }
            p[ra] = rb;
            extend(edges, k + 1, &p, need - 1, &(acc * c), total);
        }
    }
    let mut total = BigRational::zero();
    let parent: Vec<usize> = (0..v).collect();
    extend(&edges, 0, &parent, v - 1, &BigRational::one(), &mut total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let b: Vec<usize> = (0..7).map(|n| set_partitions(n).len()).collect();
        assert_eq!(b, [1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn tree_counts_are_cayley_like() {
        // K_{m,n} has m^{n-1} n^{m-1} spanning trees
        let w = vec![vec![BigRational::one(); 3]; 3];
        assert_eq!(block_tree_sum(&[0, 1, 2], &[0, 1, 2], &w), BigRational::from_integer(81.into()));
        assert_eq!(block_tree_sum(&[0, 1], &[0, 1, 2], &w), BigRational::from_integer(12.into()));
        assert!(block_tree_sum(&[0, 1], &[], &w).is_zero());
    }

    #[test]
    fn single_edge_blocks() {
        // one left and one right point: (ℓ^w - 1)/(ℓ - 1)
        let w = vec![vec![4]];
        let want = "(L^2-1)/(L-1)".parse::<RatFunc>().unwrap();
        assert_eq!(block_graph_sum(&[0], &[0], &w).unwrap(), want);
        assert_eq!(block_partition_sum(&[0], &[0], &w).unwrap(), want);
    }
}
