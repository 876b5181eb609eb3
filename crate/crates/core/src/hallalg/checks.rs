//! Structural checks on the `q = 1` algebra: PBW, Serre relations, closure
//! of the bracket on indecomposables, and the bialgebra axioms.

use super::{CFElem, CfAlgebra, Tensor2};
use crate::element::rank;
use crate::error::Result;
use crate::quiver::DimVec;
use crate::report::Report;
use num_rational::BigRational;
use serde_json::json;

/// Total order on indecomposables used to build ordered monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PbwOrder {
    /// Lexicographic on dimension vectors.
    Lex,
    ReverseLex,
}

fn ordered_indecomposables(a: &CfAlgebra, order: PbwOrder) -> Vec<usize> {
    let t = a.table();
    let mut ind = t.indecomposables();
    ind.sort_by_key(|&i| t.dimvec(i));
    if order == PbwOrder::ReverseLex {
        ind.reverse();
    }
    ind
}

/// Non-decreasing index sequences into `ind` with dimension sum `w`.
fn monomials(a: &CfAlgebra, ind: &[usize], w: &DimVec) -> Vec<Vec<usize>> {
    fn go(a: &CfAlgebra, ind: &[usize], start: usize, rest: &DimVec, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_zero() {
            out.push(cur.clone());
            return;
        }
        for k in start..ind.len() {
            let d = a.table().dimvec(ind[k]);
            if d.le(rest) {
                cur.push(ind[k]);
                go(a, ind, k, &rest.sub(&d), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(a, ind, 0, w, &mut Vec::new(), &mut out);
    out
}

fn product(a: &CfAlgebra, word: &[usize]) -> Result<CFElem> {
    word.iter().try_fold(a.one(), |acc, &x| a.mult(&acc, &a.delta(x)))
}

/// Ordered monomials in the indecomposables span each weight space with no
/// redundancy: the coefficient matrix is square and of full rank for every
/// weight `<= bound` inside the table.
pub fn pbw_check(a: &CfAlgebra, bound: &DimVec, order: PbwOrder) -> Result<Report> {
    let t = a.table();
    let ind = ordered_indecomposables(a, order);
    let mut rep = Report::new();
    for w in bound.below() {
        if !t.contains_dim(&w) {
            continue;
        }
        let classes = t.classes_of_dim(&w);
        let monos = monomials(a, &ind, &w);
        let mut m = Vec::with_capacity(monos.len());
        for word in &monos {
            let p = product(a, word)?;
            m.push(classes.iter().map(|c| p.get(c)).collect::<Vec<BigRational>>());
        }
        let r = rank(m);
        let ok = monos.len() == classes.len() && r == classes.len();
        rep.record(
            format!("pbw{w}"),
            ok,
            json!({"order": format!("{order:?}"), "weight": w.0, "monomials": monos.len(), "classes": classes.len(), "rank": r}),
        );
    }
    Ok(rep)
}

/// `(ad δ_i)^{1-a_ij} δ_j = 0` for every ordered pair of distinct vertices
/// whose weight fits the table.
pub fn serre_check(a: &CfAlgebra) -> Result<Report> {
    let t = a.table();
    let n = t.quiver.vertex_count();
    let form = t.quiver.euler_form();
    let mut rep = Report::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let name = format!("serre({},{})", i + 1, j + 1);
            let aij = form.cartan_a(i, j)?;
            let k = (1 - aij) as usize;
            let w = DimVec::unit(n, i).0.iter().map(|&x| x * k as i64).collect::<Vec<_>>();
            let w = DimVec(w).add(&DimVec::unit(n, j));
            let (Some(si), Some(sj)) = (t.simple(i), t.simple(j)) else {
                rep.skip(name, "simple representation outside the table");
                continue;
            };
            if !t.contains_dim(&w) {
                rep.skip(name, format!("weight {w} outside the table"));
                continue;
            }
            let di = a.delta(si);
            let mut x = a.delta(sj);
            for _ in 0..k {
                x = a.bracket(&di, &x)?;
            }
            rep.record(name, x.is_zero(), json!({"a_ij": aij, "residue": a.render(&x)}));
        }
    }
    Ok(rep)
}

/// Brackets of indecomposables stay supported on indecomposables.
pub fn bracket_closure_check(a: &CfAlgebra) -> Result<Report> {
    let t = a.table();
    let ind = t.indecomposables();
    let mut rep = Report::new();
    let mut bad = Vec::new();
    let mut pairs = 0;
    for &x in &ind {
        for &y in &ind {
            if !t.contains_dim(&t.dimvec(x).add(&t.dimvec(y))) {
                continue;
            }
            pairs += 1;
            let b = a.bracket(&a.delta(x), &a.delta(y))?;
            if b.keys().any(|&z| !t.label(z).is_indecomposable()) {
                bad.push(json!({"x": t.label(x).to_string(), "y": t.label(y).to_string(), "bracket": a.render(&b)}));
            }
        }
    }
    let first = bad.first().cloned();
    rep.record("bracket_closure", bad.is_empty(), json!({"pairs": pairs, "counterexample": first}));
    Ok(rep)
}

fn words(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out.into_iter().flat_map(|w| (0..n).map(move |i| [w.clone(), vec![i]].concat())).collect();
    }
    out
}

/// Coassociativity, cocommutativity and counit on every class;
/// primitivity of indecomposables; multiplicativity of `Δ` on products of
/// simples of total dimension `<= max_len`.
pub fn bialgebra_check(a: &CfAlgebra, max_len: usize) -> Result<Report> {
    let t = a.table();
    let mut rep = Report::new();
    let zero = t.zero_class();
    let (mut coassoc, mut cocomm, mut counit, mut prim) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for z in 0..t.len() {
        let dz = a.delta(z);
        let d = a.comult(&dz)?;
        let (l, r) = a.coassoc_sides(&dz)?;
        if l != r {
            coassoc.push(t.label(z).to_string());
        }
        let flipped = Tensor2::from_terms(d.terms().map(|(&(x, y), c)| ((y, x), c.clone())));
        if flipped != d {
            cocomm.push(t.label(z).to_string());
        }
        let left = CFElem::from_terms(d.terms().filter(|((x, _), _)| *x == zero).map(|(&(_, y), c)| (y, c.clone())));
        let right = CFElem::from_terms(d.terms().filter(|((_, y), _)| *y == zero).map(|(&(x, _), c)| (x, c.clone())));
        if left != dz || right != dz {
            counit.push(t.label(z).to_string());
        }
        if t.label(z).is_indecomposable() {
            let want = Tensor2::from_terms([((z, zero), super::one_rat()), ((zero, z), super::one_rat())]);
            if d != want {
                prim.push(t.label(z).to_string());
            }
        }
    }
    let n = t.len();
    rep.record("coassociative", coassoc.is_empty(), json!({"classes": n, "failures": coassoc}));
    rep.record("cocommutative", cocomm.is_empty(), json!({"classes": n, "failures": cocomm}));
    rep.record("counital", counit.is_empty(), json!({"classes": n, "failures": counit}));
    rep.record(
        "primitive_indecomposables",
        prim.is_empty(),
        json!({"indecomposables": t.indecomposables().len(), "failures": prim}),
    );

    let nv = t.quiver.vertex_count();
    let simples: Vec<Option<usize>> = (0..nv).map(|i| t.simple(i)).collect();
    let mut tested = 0;
    let mut bad = Vec::new();
    for len in 1..=max_len {
        for w in words(nv, len) {
            let weight = w.iter().fold(DimVec::zeros(nv), |acc, &i| acc.add(&DimVec::unit(nv, i)));
            if !t.contains_dim(&weight) || w.iter().any(|&i| simples[i].is_none()) {
                continue;
            }
            let ids: Vec<usize> = w.iter().map(|&i| simples[i].expect("checked above")).collect();
            let prod = product(a, &ids)?;
            let lhs = a.comult(&prod)?;
            let mut rhs = Tensor2::basis((zero, zero));
            for &s in &ids {
                rhs = a.tensor_mult(&rhs, &a.comult(&a.delta(s))?)?;
            }
            tested += 1;
            if lhs != rhs && bad.is_empty() {
                bad.push(json!({"word": w.iter().map(|i| i + 1).collect::<Vec<_>>()}));
            }
        }
    }
    rep.record("multiplicative", bad.is_empty(), json!({"words": tested, "counterexample": bad.first()}));
    Ok(rep)
}
