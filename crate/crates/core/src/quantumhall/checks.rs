use super::{SFElem, SfAlgebra};
use crate::coeffring::{gauss_binomial, RatFunc};
use crate::element::rank;
use crate::error::{Error, Result};
use crate::hallalg::CfAlgebra;
use crate::poset::{Bracketing, Poset};
use crate::quiver::DimVec;
use crate::report::Report;
use crate::twistedalg::a_mult;
use num_rational::BigRational;
use serde_json::json;

fn fits(a: &SfAlgebra, xs: &[usize]) -> bool {
    let t = a.table();
    let d = xs.iter().fold(DimVec::zeros(t.quiver.vertex_count()), |acc, &x| acc.add(&t.dimvec(x)));
    t.contains_dim(&d)
}

/// `(f*g)*h = f*(g*h)` on every basis triple that fits the table.
pub fn assoc_check(a: &SfAlgebra) -> Result<Report> {
    let m = a.table().len();
    let mut triples = 0;
    let mut bad = None;
    'outer: for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                if !fits(a, &[x, y, z]) {
                    continue;
                }
                triples += 1;
                let (sx, sy, sz) = (a.s(x), a.s(y), a.s(z));
                let l = a.mult(&a.mult(&sx, &sy)?, &sz)?;
                let r = a.mult(&sx, &a.mult(&sy, &sz)?)?;
                if l != r {
                    bad = Some(json!({"x": a.table().label(x).to_string(), "y": a.table().label(y).to_string(),
                        "z": a.table().label(z).to_string(), "left": a.render(&l), "right": a.render(&r)}));
                    break 'outer;
                }
            }
        }
    }
    let mut rep = Report::new();
    rep.record("sf_assoc", bad.is_none(), json!({"triples": triples, "counterexample": bad}));
    Ok(rep)
}

/// Every structure constant, in both bases, lies in `Λ°`.
pub fn lambda_circ_check(a: &SfAlgebra) -> Result<Report> {
    let t = a.table();
    let mut bad = Vec::new();
    for (&(x, y, z), c) in a.constants() {
        let dbar = c.mul(a.aut(z)).div(&a.aut(x).mul(a.aut(y)))?;
        for (basis, v) in [("s", c), ("dbar", &dbar)] {
            if !v.is_lambda_circ() {
                bad.push(json!({"basis": basis, "x": t.label(x).to_string(), "y": t.label(y).to_string(),
                    "z": t.label(z).to_string(), "constant": v.to_string()}));
            }
        }
    }
    let mut rep = Report::new();
    rep.record("lambda_circ", bad.is_empty(), json!({"constants": a.constants().len(), "violations": bad}));
    Ok(rep)
}

/// At `ℓ = 1` the `δ̄` coordinates of `δ̄_X * δ̄_Y` are the `q = 1` Hall
/// product `δ_X * δ_Y`.
pub fn degeneration_check(a: &SfAlgebra, cf: &CfAlgebra) -> Result<Report> {
    let m = a.table().len();
    let mut pairs = 0;
    let mut bad = None;
    for x in 0..m {
        for y in 0..m {
            if !fits(a, &[x, y]) {
                continue;
            }
            pairs += 1;
            let q = a.to_dbar(&a.mult(&a.dbar(x), &a.dbar(y))?).map_coeffs(|c| c.pi_eval())?;
            let c = cf.mult(&cf.delta(x), &cf.delta(y))?;
            if q != c && bad.is_none() {
                bad = Some(json!({"x": a.table().label(x).to_string(), "y": a.table().label(y).to_string(),
                    "limit": cf.render(&q), "classical": cf.render(&c)}));
            }
        }
    }
    let mut rep = Report::new();
    rep.record("degeneration", bad.is_none(), json!({"pairs": pairs, "counterexample": bad}));
    Ok(rep)
}

fn power<T: Clone>(one: T, x: &T, k: usize, mul: impl Fn(&T, &T) -> Result<T>) -> Result<T> {
    (0..k).try_fold(one, |acc, _| mul(&acc, x))
}

/// Quantum Serre relations for every ordered pair of distinct vertices,
/// with `ℓ^{1/2}` realised as `℘`.
///
/// The relation is evaluated in the twisted product
/// ([`SfAlgebra::twisted_mult`]); the residue of the same combination in the
/// plain product is reported alongside. Each pair also gets a check that the
/// `ℓ → 1` image of the relation, term by term in `δ̄` coordinates, is the
/// classical Serre combination at `q = 1`.
pub fn qserre_check(a: &SfAlgebra, cf: &CfAlgebra) -> Result<Report> {
    let t = a.table();
    let n = t.quiver.vertex_count();
    let form = a.form();
    let mut rep = Report::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let name = format!("qserre({},{})", i + 1, j + 1);
            let aij = form.cartan_a(i, j)?;
            let k = (1 - aij) as usize;
            let (Some(si), Some(sj)) = (t.simple(i), t.simple(j)) else {
                rep.skip(name, "simple representation outside the table");
                continue;
            };
            let w = DimVec((0..n).map(|v| if v == i { k as i64 } else { (v == j) as i64 }).collect());
            if !t.contains_dim(&w) {
                rep.skip(name.clone(), format!("weight {w} outside the table"));
                rep.skip(format!("qserre_limit({},{})", i + 1, j + 1), format!("weight {w} outside the table"));
                continue;
            }
            let (di, dj) = (a.dbar(si), a.dbar(sj));
            let mut twisted = SFElem::zero();
            let mut plain = SFElem::zero();
            let mut limit = crate::hallalg::CFElem::zero();
            let mut classical = crate::hallalg::CFElem::zero();
            for r in 0..=k {
                let mut c = gauss_binomial(k as u32, r as u32)?.mul(&RatFunc::p_pow(-((r * (k - r)) as i64)));
                let mut b = BigRational::from_integer(
                    crate::element::factorial(k) / (crate::element::factorial(r) * crate::element::factorial(k - r)),
                );
                if r % 2 == 1 {
                    c = c.neg();
                    b = -b;
                }
                let tw = |f: &SFElem, g: &SFElem| a.twisted_mult(f, g);
                let pl = |f: &SFElem, g: &SFElem| a.mult(f, g);
                let word_t = tw(&tw(&power(a.one(), &di, r, tw)?, &dj)?, &power(a.one(), &di, k - r, tw)?)?;
                let word_p = pl(&pl(&power(a.one(), &di, r, pl)?, &dj)?, &power(a.one(), &di, k - r, pl)?)?;
                twisted = twisted.add(&word_t.scale(&c));
                plain = plain.add(&word_p.scale(&c));
                let term = a.to_dbar(&word_t.scale(&c)).map_coeffs(|x| x.pi_eval())?;
                limit = limit.add(&term);
                let cm = |f: &crate::hallalg::CFElem, g: &crate::hallalg::CFElem| cf.mult(f, g);
                let (ci, cj) = (cf.delta(si), cf.delta(sj));
                let word_c = cm(&cm(&power(cf.one(), &ci, r, cm)?, &cj)?, &power(cf.one(), &ci, k - r, cm)?)?;
                let expect = word_c.scale(&b);
                if term != expect {
                    return Err(Error::Consistency(format!(
                        "{name}: term {r} limits to {} but the classical term is {}",
                        cf.render(&term),
                        cf.render(&expect)
                    )));
                }
                classical = classical.add(&expect);
            }
            rep.record(
                name.clone(),
                twisted.is_zero(),
                json!({"a_ij": aij, "weight": w.0, "residue": a.render_dbar(&twisted), "untwisted_residue": a.render_dbar(&plain)}),
            );
            rep.record(
                format!("qserre_limit({},{})", i + 1, j + 1),
                limit == classical && classical.is_zero(),
                json!({"limit": cf.render(&limit), "classical": cf.render(&classical)}),
            );
        }
    }
    Ok(rep)
}

fn words_of_weight(a: &SfAlgebra, w: &DimVec) -> Vec<Vec<usize>> {
    let t = a.table();
    let n = t.quiver.vertex_count();
    fn go(n: usize, rest: &mut DimVec, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_zero() {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if rest.0[i] > 0 {
                rest.0[i] -= 1;
                cur.push(i);
                go(n, rest, cur, out);
                cur.pop();
                rest.0[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut w.clone(), &mut Vec::new(), &mut out);
    out
}

/// Words in the `δ̄` of simples span every weight space up to `bound`.
pub fn composition_span(a: &SfAlgebra, bound: &DimVec) -> Result<Report> {
    let t = a.table();
    let mut rep = Report::new();
    for w in bound.below() {
        if w.is_zero() || !t.contains_dim(&w) {
            continue;
        }
        let classes = t.classes_of_dim(&w);
        let words = words_of_weight(a, &w);
        let mut m = Vec::with_capacity(words.len());
        for word in &words {
            let mut p = a.one();
            for &v in word {
                let s = t.simple(v).ok_or_else(|| Error::Bound(format!("simple {} outside the table", v + 1)))?;
                p = a.mult(&p, &a.dbar(s))?;
            }
            let p = a.to_dbar(&p);
            m.push(classes.iter().map(|c| p.get(c)).collect::<Vec<RatFunc>>());
        }
        let r = rank(m);
        rep.record(
            format!("span{w}"),
            r == classes.len(),
            json!({"weight": w.0, "words": words.len(), "classes": classes.len(), "rank": r}),
        );
    }
    Ok(rep)
}

/// `Φ(s_X * s_Y) = Φ(s_X) ⋆ Φ(s_Y)` on every basis pair, with `χ` the
/// Euler form of the quiver.
pub fn phi_check(a: &SfAlgebra) -> Result<Report> {
    let m = a.table().len();
    let mut pairs = 0;
    let mut bad = None;
    for x in 0..m {
        for y in 0..m {
            if !fits(a, &[x, y]) {
                continue;
            }
            pairs += 1;
            let (sx, sy) = (a.s(x), a.s(y));
            let l = a.phi_lambda(&a.mult(&sx, &sy)?);
            let r = a_mult(&a.phi_lambda(&sx), &a.phi_lambda(&sy), a.form())?;
            if l != r && bad.is_none() {
                bad = Some(json!({"x": a.table().label(x).to_string(), "y": a.table().label(y).to_string()}));
            }
        }
    }
    let mut rep = Report::new();
    rep.record("phi_morphism", bad.is_none(), json!({"pairs": pairs, "counterexample": bad}));
    Ok(rep)
}

#[derive(Clone, Debug)]
pub enum IntegralMode {
    /// `I(f*g) = ℓ^{-χ(β,α)} I(f) I(g)` on all `δ̄` basis pairs.
    Pair,
    /// The product formula over a series-parallel poset, on all `δ̄` basis
    /// tuples of its size.
    Poset(String, Poset),
}

/// Multiplicativity of the integral `I(Σ c_X s_X) = Σ c_X`.
pub fn integral_identity_check(a: &SfAlgebra, mode: &IntegralMode) -> Result<Report> {
    let t = a.table();
    let m = t.len();
    let (name, p) = match mode {
        IntegralMode::Pair => ("integral_pairs".to_string(), Poset::chain(2)),
        IntegralMode::Poset(name, p) => (format!("integral_{name}"), p.clone()),
    };
    let k = p.len();
    let mut tuples = 0;
    let mut bad = None;
    let mut idx = vec![0usize; k];
    loop {
        if fits(a, &idx) {
            tuples += 1;
            let ins: Vec<SFElem> = idx.iter().map(|&x| a.dbar(x)).collect();
            let lhs = a.integral(&a.poset_product(&p, &ins, Bracketing::Left)?);
            let mut rhs = ins.iter().fold(RatFunc::one(), |acc, f| acc.mul(&a.integral(f)));
            for (i, j) in p.strict_pairs() {
                rhs = rhs.mul(&RatFunc::l_pow(-a.form().eval(&t.dimvec(idx[j]), &t.dimvec(idx[i]))?));
            }
            if lhs != rhs && bad.is_none() {
                bad = Some(json!({"inputs": idx.iter().map(|&x| t.label(x).to_string()).collect::<Vec<_>>(),
                    "lhs": lhs.to_string(), "rhs": rhs.to_string()}));
            }
        }
        let mut pos = 0;
        while pos < k && idx[pos] + 1 == m {
            idx[pos] = 0;
            pos += 1;
        }
        if pos == k {
            break;
        }
        idx[pos] += 1;
    }
    let mut rep = Report::new();
    rep.record(name, bad.is_none(), json!({"tuples": tuples, "counterexample": bad}));
    Ok(rep)
}
