//! Named verification suites, shared by the command line and the test
//! harness. Table suites run on a [`HallTable`]; the rest draw seeded random
//! forms and elements of the explicit algebras.

use crate::coeffring::RatFunc;
use crate::error::{Error, Result};
use crate::hallalg::{bialgebra_check, bracket_closure_check, pbw_check, serre_check, CfAlgebra, PbwOrder};
use crate::hallnum::{HallTable, TableConfig};
use crate::poset::Poset;
use crate::quantumhall::{self as qh, IntegralMode, SfAlgebra};
use crate::quiver::{DimVec, EulerForm, Quiver};
use crate::report::Report;
use crate::twistedalg::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Serre,
    Qserre,
    Bialgebra,
    Pbw,
    Assoc,
    Thm61,
    Thm65,
    Pi,
    Cy,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Serre,
        Suite::Qserre,
        Suite::Bialgebra,
        Suite::Pbw,
        Suite::Assoc,
        Suite::Thm61,
        Suite::Thm65,
        Suite::Pi,
        Suite::Cy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Serre => "serre",
            Suite::Qserre => "qserre",
            Suite::Bialgebra => "bialgebra",
            Suite::Pbw => "pbw",
            Suite::Assoc => "assoc",
            Suite::Thm61 => "thm61",
            Suite::Thm65 => "thm65",
            Suite::Pi => "pi",
            Suite::Cy => "cy",
        }
    }

    /// Whether the suite runs on a Hall table.
    pub fn needs_table(self) -> bool {
        matches!(self, Suite::Serre | Suite::Qserre | Suite::Bialgebra | Suite::Pbw | Suite::Thm61)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Box used when a suite builds its own table: every vertex up to 2, and
/// total dimension capped at 3 beyond two vertices (4 for the bialgebra
/// suite, which multiplies words of length 4).
pub fn default_box(q: &Quiver, suite: Suite) -> (DimVec, Option<usize>) {
    let n = q.vertex_count();
    match suite {
        Suite::Bialgebra => (DimVec(vec![4; n]), Some(4)),
        _ if n <= 2 => (DimVec(vec![2; n]), None),
        _ => (DimVec(vec![2; n]), Some(3)),
    }
}

pub fn table_for(q: &Quiver, suite: Suite) -> Result<HallTable> {
    let (dmax, max_total) = default_box(q, suite);
    HallTable::build(q, &dmax, &TableConfig { max_total, ..TableConfig::default() })
}

/// Runs a table suite.
pub fn run_table_suite(suite: Suite, t: &HallTable) -> Result<Report> {
    let cf = CfAlgebra::new(t);
    let mut rep = Report::new();
    match suite {
        Suite::Serre => {
            rep.extend(serre_check(&cf)?);
            rep.extend(bracket_closure_check(&cf)?);
        }
        Suite::Bialgebra => rep.extend(bialgebra_check(&cf, 4)?),
        Suite::Pbw => {
            for o in [PbwOrder::Lex, PbwOrder::ReverseLex] {
                rep.extend(pbw_check(&cf, &t.dmax, o)?);
            }
        }
        Suite::Qserre => {
            let a = SfAlgebra::new(t)?;
            rep.extend(qh::assoc_check(&a)?);
            rep.extend(qh::lambda_circ_check(&a)?);
            rep.extend(qh::degeneration_check(&a, &cf)?);
            rep.extend(qh::qserre_check(&a, &cf)?);
            rep.extend(qh::composition_span(&a, &t.dmax)?);
        }
        Suite::Thm61 => {
            let a = SfAlgebra::new(t)?;
            rep.extend(qh::integral_identity_check(&a, &IntegralMode::Pair)?);
            for (name, p) in [("chain", Poset::chain(3)), ("antichain", Poset::antichain(3))] {
                rep.extend(qh::integral_identity_check(&a, &IntegralMode::Poset(name.into(), p))?);
            }
            rep.extend(qh::phi_check(&a)?);
        }
        s => return Err(Error::Domain(format!("suite {s} does not run on a table"))),
    }
    Ok(rep)
}

/// Runs a seeded suite of the explicit algebras.
pub fn run_random_suite(suite: Suite, seed: u64, trials: usize) -> Result<Report> {
    let mut g = Gen { rng: ChaCha8Rng::seed_from_u64(seed) };
    match suite {
        Suite::Assoc => assoc_suite(&mut g, seed, trials),
        Suite::Thm65 => thm65_suite(&mut g, seed, trials),
        Suite::Pi => pi_suite(&mut g, seed, trials),
        Suite::Cy => cy_suite(&mut g, seed, trials),
        s => Err(Error::Domain(format!("suite {s} needs a table"))),
    }
}

const RANK: usize = 2;

fn sample() -> [DimVec; 5] {
    [DimVec(vec![1, 0]), DimVec(vec![0, 1]), DimVec(vec![1, 1]), DimVec(vec![2, 1]), DimVec(vec![1, 2])]
}

struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    fn form(&mut self) -> EulerForm {
        let m = (0..RANK).map(|_| (0..RANK).map(|_| self.rng.gen_range(-2..=2)).collect()).collect();
        EulerForm::explicit(m).expect("square")
    }

    fn symmetric(&mut self) -> EulerForm {
        let mut m = vec![vec![0i64; RANK]; RANK];
        for i in 0..RANK {
            for j in i..RANK {
                m[i][j] = self.rng.gen_range(-2..=2);
                m[j][i] = m[i][j];
            }
        }
        EulerForm::explicit(m).expect("square")
    }

    fn dim(&mut self) -> DimVec {
        let s = sample();
        s[self.rng.gen_range(0..s.len())].clone()
    }

    fn class(&mut self, max: usize) -> IKClass {
        let k = self.rng.gen_range(0..=max);
        IKClass::new((0..k).map(|_| self.dim()).collect()).expect("nonzero labels")
    }

    fn coef(&mut self) -> i64 {
        [-2, -1, 1, 2, 3][self.rng.gen_range(0..5)]
    }

    /// One or two terms with small integer coefficients.
    fn b_elem(&mut self, max: usize) -> BElem {
        let terms = self.rng.gen_range(1..=2);
        BElem::from_terms((0..terms).map(|_| (self.class(max), RatFunc::from_int(self.coef()))).collect::<Vec<_>>())
    }

    fn a_elem(&mut self) -> AElem {
        let terms = self.rng.gen_range(1..=2);
        AElem::from_terms((0..terms).map(|_| (self.dim(), RatFunc::from_int(self.coef()))).collect::<Vec<_>>())
    }
}

fn c_of(b: &BElem) -> CElem {
    pi_morphism(b).expect("integer coefficients")
}

/// Tallies a per-trial predicate into one check, keeping the first failure.
struct Tally {
    name: &'static str,
    trials: usize,
    first: Option<serde_json::Value>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, trials: 0, first: None }
    }

    fn see(&mut self, ok: bool, ctx: impl FnOnce() -> serde_json::Value) {
        self.trials += 1;
        if !ok && self.first.is_none() {
            self.first = Some(ctx());
        }
    }

    fn finish(self, rep: &mut Report, seed: u64) {
        rep.record(
            self.name,
            self.first.is_none(),
            json!({"seed": seed, "trials": self.trials, "counterexample": self.first}),
        );
    }
}

fn form_json(f: &EulerForm) -> serde_json::Value {
    json!(f.to_text())
}

fn assoc_suite(g: &mut Gen, seed: u64, trials: usize) -> Result<Report> {
    let (mut a, mut b, mut c) = (Tally::new("a_assoc"), Tally::new("b_assoc"), Tally::new("c_assoc"));
    for _ in 0..trials {
        let f = g.form();
        let (x, y, z) = (g.a_elem(), g.a_elem(), g.a_elem());
        let l = a_mult(&a_mult(&x, &y, &f)?, &z, &f)?;
        let r = a_mult(&x, &a_mult(&y, &z, &f)?, &f)?;
        a.see(l == r, || json!({"form": form_json(&f), "x": render_a(&x), "y": render_a(&y), "z": render_a(&z)}));

        let (x, y, z) = (g.b_elem(2), g.b_elem(2), g.b_elem(2));
        let l = b_mult(&b_mult(&x, &y, &f, BMode::Sum)?, &z, &f, BMode::Sum)?;
        let r = b_mult(&x, &b_mult(&y, &z, &f, BMode::Sum)?, &f, BMode::Sum)?;
        b.see(l == r, || json!({"form": form_json(&f), "x": render_b(&x), "y": render_b(&y), "z": render_b(&z)}));

        let (x, y, z) = (c_of(&g.b_elem(2)), c_of(&g.b_elem(2)), c_of(&g.b_elem(2)));
        let l = c_mult(&c_mult(&x, &y, &f)?, &z, &f)?;
        let r = c_mult(&x, &c_mult(&y, &z, &f)?, &f)?;
        c.see(l == r, || json!({"form": form_json(&f), "x": render_c(&x), "y": render_c(&y), "z": render_c(&z)}));
    }
    let mut rep = Report::new();
    for t in [a, b, c] {
        t.finish(&mut rep, seed);
    }
    Ok(rep)
}

/// Every class with at most three labels drawn from `e₁, e₂, e₁+e₂`.
pub fn small_classes() -> Vec<IKClass> {
    let s = &sample()[..3];
    let mut out = vec![IKClass::empty()];
    for a in 0..3 {
        out.push(IKClass::new(vec![s[a].clone()]).expect("nonzero"));
        for b in a..3 {
            out.push(IKClass::new(vec![s[a].clone(), s[b].clone()]).expect("nonzero"));
            for c in b..3 {
                out.push(IKClass::new(vec![s[a].clone(), s[b].clone(), s[c].clone()]).expect("nonzero"));
            }
        }
    }
    out
}

/// The partition-sum and connected-graph forms of the `B` product agree
/// coefficient by coefficient, on every pair of [`small_classes`], for
/// `trials` random forms.
fn thm65_suite(g: &mut Gen, seed: u64, trials: usize) -> Result<Report> {
    let classes = small_classes();
    let mut rep = Report::new();
    for k in 0..trials {
        let f = g.form();
        let mut bad = None;
        let mut pairs = 0;
        for i in &classes {
            for j in &classes {
                pairs += 1;
                let s = b_mult_basis(i, j, &f, BMode::Sum)?;
                let gr = b_mult_basis(i, j, &f, BMode::Graph)?;
                if s != gr && bad.is_none() {
                    bad = Some(
                        json!({"i": i.to_string(), "j": j.to_string(), "sum": render_b(&s), "graph": render_b(&gr)}),
                    );
                }
            }
        }
        rep.record(
            format!("thm65[{k}]"),
            bad.is_none(),
            json!({"seed": seed, "form": form_json(&f), "pairs": pairs, "counterexample": bad}),
        );
    }
    Ok(rep)
}

fn pi_suite(g: &mut Gen, seed: u64, trials: usize) -> Result<Report> {
    let (mut circ, mut pi, mut delta) =
        (Tally::new("b_lambda_circ"), Tally::new("pi_morphism"), Tally::new("delta_morphism"));
    for _ in 0..trials {
        let f = g.form();
        let (x, y) = (g.b_elem(3), g.b_elem(3));
        let p = b_mult(&x, &y, &f, BMode::Sum)?;
        let ctx = || json!({"form": form_json(&f), "x": render_b(&x), "y": render_b(&y)});
        circ.see(is_lambda_circ(&p), ctx);
        let l = pi_morphism(&p)?;
        let r = c_mult(&pi_morphism(&x)?, &pi_morphism(&y)?, &f)?;
        pi.see(l == r, ctx);
        let l = delta_ba(&p, RANK)?;
        let r = a_mult(&delta_ba(&x, RANK)?, &delta_ba(&y, RANK)?, &f)?;
        delta.see(l == r, ctx);
    }
    let mut rep = Report::new();
    for t in [circ, pi, delta] {
        t.finish(&mut rep, seed);
    }
    Ok(rep)
}

fn ind(kind: BracketKind, a: &DimVec, b: &DimVec, f: &EulerForm) -> Result<(RatFunc, bool)> {
    // the coefficient of the single output term, and whether that term sits at a+b
    let target = IKClass::single(a.add(b))?;
    Ok(match ind_bracket(kind, a, b, f)? {
        IndValue::B(x) => (x.get(&target), x.keys().all(|k| *k == target)),
        IndValue::C(x) => (RatFunc::from_rational(&x.get(&target)), x.keys().all(|k| *k == target)),
    })
}

fn cy_suite(g: &mut Gen, seed: u64, trials: usize) -> Result<Report> {
    let kinds = [("b", BracketKind::B), ("c", BracketKind::C), ("cy", BracketKind::CY)];
    let mut anti: Vec<Tally> =
        vec![Tally::new("b_antisymmetry"), Tally::new("c_antisymmetry"), Tally::new("cy_antisymmetry")];
    let mut jac: Vec<Tally> = vec![Tally::new("b_jacobi"), Tally::new("c_jacobi"), Tally::new("cy_jacobi")];
    let mut cy_form = Tally::new("cy_depends_on_antisymmetrisation");
    let (mut at, mut bt) = (Tally::new("a_tilde_invariance"), Tally::new("b_tilde_invariance"));
    for _ in 0..trials {
        let f = g.form();
        let s = g.symmetric();
        let fs = f.plus(&s)?;
        let (x, y, z) = (g.dim(), g.dim(), g.dim());
        let ctx = || json!({"form": form_json(&f), "x": x.to_string(), "y": y.to_string(), "z": z.to_string()});
        for (k, &(_, kind)) in kinds.iter().enumerate() {
            let (xy, ok1) = ind(kind, &x, &y, &f)?;
            let (yx, ok2) = ind(kind, &y, &x, &f)?;
            anti[k].see(ok1 && ok2 && xy.add(&yx).is_zero(), ctx);
            // [x,[y,z]] + [y,[z,x]] + [z,[x,y]], each a multiple of the same basis vector
            let cyc = [(&x, &y, &z), (&y, &z, &x), (&z, &x, &y)];
            let mut sum = RatFunc::zero();
            for (p, q, r) in cyc {
                let (inner, _) = ind(kind, q, r, &f)?;
                let (outer, _) = ind(kind, p, &q.add(r), &f)?;
                sum = sum.add(&inner.mul(&outer));
            }
            jac[k].see(sum.is_zero(), ctx);
        }
        cy_form.see(ind(BracketKind::CY, &x, &y, &f)?.0 == ind(BracketKind::CY, &x, &y, &fs)?.0, ctx);

        let coef = |f: &EulerForm| -> Result<RatFunc> {
            let p = a_mult(&a_tilde(&x, f)?, &a_tilde(&y, f)?, f)?;
            let (_, unit) =
                a_tilde(&x.add(&y), f)?.terms().next().map(|(k, c)| (k.clone(), c.clone())).expect("one term");
            p.get(&x.add(&y)).div(&unit)
        };
        at.see(coef(&f)? == coef(&fs)?, ctx);
        let coef = |f: &EulerForm| -> Result<RatFunc> {
            let br = b_bracket(&b_tilde(&x, f)?, &b_tilde(&y, f)?, f, BMode::Graph)?;
            let t = b_tilde(&x.add(&y), f)?;
            let (k, unit) = t.terms().next().expect("one term");
            br.get(k).div(unit)
        };
        bt.see(coef(&f)? == coef(&fs)?, ctx);
    }
    let mut rep = Report::new();
    for t in anti.into_iter().chain(jac).chain([cy_form, at, bt]) {
        t.finish(&mut rep, seed);
    }
    Ok(rep)
}
