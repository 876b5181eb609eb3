//! The degenerate (`q = 1`) Ringel–Hall algebra on finitely supported
//! functions of isomorphism classes, read off a [`HallTable`].
//!
//! Basis vectors `δ_[X]` are keyed by table class id, so the canonical class
//! order of the table is also the print order.

mod checks;

use crate::element::{strip_literal, Elem};
use crate::error::{Error, Result};
use crate::hallnum::{HallTable, Triple};
use crate::poset::{Bracketing, Poset};
use crate::repfield::Label;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

pub use checks::{bialgebra_check, bracket_closure_check, pbw_check, serre_check, PbwOrder};

pub type CFElem = Elem<usize, BigRational>;
/// Functions on pair classes `(S ⊆ Z)`, keyed by table pair id.
pub type FlagElem = Elem<usize, BigRational>;
pub type Tensor2 = Elem<(usize, usize), BigRational>;
pub type Tensor3 = Elem<(usize, usize, usize), BigRational>;

fn rat(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

/// The algebra of one table at `q = 1`.
pub struct CfAlgebra<'a> {
    t: &'a HallTable,
    hall: BTreeMap<Triple, BigInt>,
    split: BTreeMap<Triple, BigInt>,
    up: BTreeMap<Triple, BigInt>,
    down: BTreeMap<Triple, BigInt>,
}

impl<'a> CfAlgebra<'a> {
    pub fn new(t: &'a HallTable) -> Self {
        let one = |m: &BTreeMap<Triple, crate::hallnum::CountPoly>| {
            m.iter().map(|(k, f)| (*k, f.at_one())).filter(|(_, v)| !v.is_zero()).collect()
        };
        CfAlgebra { t, hall: one(&t.hall), split: one(&t.split), up: one(&t.flags_up), down: one(&t.flags_down) }
    }

    pub fn table(&self) -> &HallTable {
        self.t
    }

    pub fn delta(&self, id: usize) -> CFElem {
        CFElem::basis(id)
    }

    pub fn one(&self) -> CFElem {
        self.delta(self.t.zero_class())
    }

    /// `δ_[X]` for a label, which must lie in the table.
    pub fn delta_of(&self, l: &Label) -> Result<CFElem> {
        self.t.id(l).map(CFElem::basis).ok_or_else(|| Error::Bound(format!("class {l} is outside the table")))
    }

    pub fn parse(&self, text: &str) -> Result<CFElem> {
        CFElem::parse(text, |lit| {
            let l = Label::parse(&format!("[{}]", strip_literal(lit, "d", '[', ']')?))?;
            self.t.id(&l).ok_or_else(|| Error::Bound(format!("class {l} is outside the table")))
        })
    }

    pub fn render(&self, f: &CFElem) -> String {
        f.render(|&k| format!("d{}", self.t.label(k)))
    }

    fn check_sum(&self, x: usize, y: usize) -> Result<()> {
        let d = self.t.dimvec(x).add(&self.t.dimvec(y));
        if self.t.contains_dim(&d) {
            Ok(())
        } else {
            Err(Error::Bound(format!(
                "{} * {} has dimension {d}, outside the table bound",
                self.t.label(x),
                self.t.label(y)
            )))
        }
    }

    /// `(f*g)(Z) = Σ h^Z_{X,Y}(1) f(X) g(Y)`.
    pub fn mult(&self, f: &CFElem, g: &CFElem) -> Result<CFElem> {
        f.bilinear(g, |&x, &y| {
            self.check_sum(x, y)?;
            Ok(CFElem::from_terms(self.hall.range((x, y, 0)..=(x, y, usize::MAX)).map(|(k, v)| (k.2, rat(v)))))
        })
    }

    pub fn bracket(&self, f: &CFElem, g: &CFElem) -> Result<CFElem> {
        Ok(self.mult(f, g)?.sub(&self.mult(g, f)?))
    }

    /// The product attached to the two-point antichain: ordered splittings
    /// `Z = U ⊕ V` with `U ≅ X`, `V ≅ Y`, counted at `q = 1`.
    pub fn direct_sum(&self, f: &CFElem, g: &CFElem) -> Result<CFElem> {
        f.bilinear(g, |&x, &y| {
            self.check_sum(x, y)?;
            Ok(CFElem::from_terms(self.split.range((x, y, 0)..=(x, y, usize::MAX)).map(|(k, v)| (k.2, rat(v)))))
        })
    }

    /// Poset product, evaluated by replaying a series-parallel certificate:
    /// chains through [`mult`](Self::mult), antichains through
    /// [`direct_sum`](Self::direct_sum).
    pub fn poset_product(&self, p: &Poset, inputs: &[CFElem], br: Bracketing) -> Result<CFElem> {
        if inputs.len() != p.len() {
            return Err(Error::DimensionMismatch { expected: p.len(), found: inputs.len() });
        }
        if p.is_empty() {
            return Ok(self.one());
        }
        let tree = p.certificate()?;
        tree.eval(inputs, &|a, b| self.mult(a, b), &|a, b| self.direct_sum(a, b), br)
    }

    /// `Δδ_[Z] = Σ δ_[X] ⊗ δ_[Y]` over ordered pairs of sub-multisets of the
    /// summands of `Z`.
    pub fn comult(&self, f: &CFElem) -> Result<Tensor2> {
        let mut out = Tensor2::zero();
        for (&z, c) in f.terms() {
            for (a, b) in sub_multisets(self.t.label(z)) {
                let (x, y) = (self.lookup(&a)?, self.lookup(&b)?);
                out.add_term((x, y), c.clone());
            }
        }
        Ok(out)
    }

    pub fn counit(&self, f: &CFElem) -> BigRational {
        f.get(&self.t.zero_class())
    }

    fn lookup(&self, l: &Label) -> Result<usize> {
        self.t.id(l).ok_or_else(|| Error::Consistency(format!("summand class {l} missing from the table")))
    }

    /// `(a⊗b)(c⊗d) = ac ⊗ bd`.
    pub fn tensor_mult(&self, u: &Tensor2, v: &Tensor2) -> Result<Tensor2> {
        u.bilinear(v, |&(a, b), &(c, d)| {
            let l = self.mult(&self.delta(a), &self.delta(c))?;
            let r = self.mult(&self.delta(b), &self.delta(d))?;
            let mut out = Tensor2::zero();
            for (&x, cx) in l.terms() {
                for (&y, cy) in r.terms() {
                    out.add_term((x, y), cx * cy);
                }
            }
            Ok(out)
        })
    }

    /// `(Δ ⊗ id)Δ` and `(id ⊗ Δ)Δ`.
    pub fn coassoc_sides(&self, f: &CFElem) -> Result<(Tensor3, Tensor3)> {
        let d = self.comult(f)?;
        let (mut l, mut r) = (Tensor3::zero(), Tensor3::zero());
        for (&(x, y), c) in d.terms() {
            for (&(a, b), c2) in self.comult(&self.delta(x))?.terms() {
                l.add_term((a, b, y), c * c2);
            }
            for (&(a, b), c2) in self.comult(&self.delta(y))?.terms() {
                r.add_term((x, a, b), c * c2);
            }
        }
        Ok((l, r))
    }

    /// `(f *_L r)(S₁ ⊆ Z) = Σ_{S₁ ⊆ S₂ ⊆ Z} f(S₂/S₁) r(S₂ ⊆ Z)`.
    pub fn flag_left(&self, f: &CFElem, r: &FlagElem) -> FlagElem {
        let mut out = FlagElem::zero();
        for (&(c1, m, c2), w) in &self.up {
            let (a, b) = (f.get(&m), r.get(&c2));
            if !a.is_zero() && !b.is_zero() {
                out.add_term(c1, rat(w) * a * b);
            }
        }
        out
    }

    /// `(r *_R f)(S₂ ⊆ Z) = Σ_{S₁ ⊆ S₂} r(S₁ ⊆ Z) f(S₂/S₁)`.
    pub fn flag_right(&self, r: &FlagElem, f: &CFElem) -> FlagElem {
        let mut out = FlagElem::zero();
        for (&(c2, m, c1), w) in &self.down {
            let (a, b) = (r.get(&c1), f.get(&m));
            if !a.is_zero() && !b.is_zero() {
                out.add_term(c2, rat(w) * a * b);
            }
        }
        out
    }

    /// Pair classes `(S ⊆ Z)` with the given ambient, sub and quotient
    /// classes.
    pub fn pairs_with(&self, z: usize, sub: usize, quot: usize) -> Vec<usize> {
        self.t.pairs_of(z).into_iter().filter(|&i| self.t.pairs[i].sub == sub && self.t.pairs[i].quot == quot).collect()
    }

    /// `f` restricted to pairs with ambient class `z` equals `f`.
    pub fn in_v(&self, r: &FlagElem, z: usize) -> bool {
        r.keys().all(|&k| self.t.pairs[k].ambient == z)
    }
}

/// Ordered splittings of a multiset of summands into two sub-multisets.
pub fn sub_multisets(l: &Label) -> Vec<(Label, Label)> {
    let mult = l.multiplicities();
    let mut out = Vec::new();
    let mut pick = vec![0usize; mult.len()];
    loop {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for ((d, m), &k) in mult.iter().zip(&pick) {
            a.extend(std::iter::repeat_n(d.clone(), k));
            b.extend(std::iter::repeat_n(d.clone(), m - k));
        }
        out.push((Label::new(a), Label::new(b)));
        let mut i = 0;
        loop {
            if i == mult.len() {
                return out;
            }
            if pick[i] < mult[i].1 {
                pick[i] += 1;
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

pub(crate) fn one_rat() -> BigRational {
    BigRational::one()
}
