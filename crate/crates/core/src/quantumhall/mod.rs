//! The generic (quantum) Hall algebra at finite support over `ℚ(℘)`.
//!
//! Elements are kept in the `s_[X]` basis; `δ̄_[X] = s_[X] / #Aut(X)(ℓ)`.
//! Structure constants come from extension counts,
//! `s_X * s_Y = Σ_Z E_Z(X,Y)(ℓ) ℓ^{-hom(Y,X)} s_Z`, and are cross-checked
//! against the Hall-number route when the algebra is built.

mod checks;

use crate::coeffring::RatFunc;
use crate::element::{strip_literal, Elem};
use crate::error::{Error, Result};
use crate::hallnum::{HallTable, Triple};
use crate::poset::{Bracketing, Poset};
use crate::quiver::EulerForm;
use crate::repfield::Label;
use crate::twistedalg::{a_basis, AElem};
use std::collections::BTreeMap;

pub use checks::{
    assoc_check, composition_span, degeneration_check, integral_identity_check, lambda_circ_check, phi_check,
    qserre_check, IntegralMode,
};

pub type SFElem = Elem<usize, RatFunc>;

pub struct SfAlgebra<'a> {
    t: &'a HallTable,
    form: EulerForm,
    consts: BTreeMap<Triple, RatFunc>,
    aut: Vec<RatFunc>,
}

impl<'a> SfAlgebra<'a> {
    /// Fails with [`Error::Consistency`] if the extension and Hall-number
    /// routes disagree on any constant.
    pub fn new(t: &'a HallTable) -> Result<Self> {
        let g = t.specialize_generic();
        let mut consts = BTreeMap::new();
        let keys: std::collections::BTreeSet<Triple> = g.ext.keys().chain(g.hall.keys()).copied().collect();
        for (x, y, z) in keys {
            let e = g.ext.get(&(x, y, z)).cloned().unwrap_or_else(RatFunc::zero);
            let h = g.hall.get(&(x, y, z)).cloned().unwrap_or_else(RatFunc::zero);
            let by_ext = e.mul(&RatFunc::l_pow(-(t.hom[y][x] as i64)));
            let by_hall = h.mul(&g.aut[x]).mul(&g.aut[y]).div(&g.aut[z])?;
            if by_ext != by_hall {
                return Err(Error::Consistency(format!(
                    "s{} * s{} at s{}: extension route {by_ext}, Hall route {by_hall}",
                    t.label(x),
                    t.label(y),
                    t.label(z)
                )));
            }
            if !by_ext.is_zero() {
                consts.insert((x, y, z), by_ext);
            }
        }
        Ok(SfAlgebra { t, form: t.quiver.euler_form(), consts, aut: g.aut })
    }

    pub fn table(&self) -> &HallTable {
        self.t
    }

    pub fn form(&self) -> &EulerForm {
        &self.form
    }

    /// Structure constants in the `s` basis, keyed `(x, y, z)`.
    pub fn constants(&self) -> &BTreeMap<Triple, RatFunc> {
        &self.consts
    }

    pub fn aut(&self, x: usize) -> &RatFunc {
        &self.aut[x]
    }

    pub fn s(&self, x: usize) -> SFElem {
        SFElem::basis(x)
    }

    pub fn dbar(&self, x: usize) -> SFElem {
        SFElem::term(x, self.aut[x].inv().expect("automorphism polynomials are nonzero"))
    }

    pub fn one(&self) -> SFElem {
        self.s(self.t.zero_class())
    }

    fn lookup(&self, l: &Label) -> Result<usize> {
        self.t.id(l).ok_or_else(|| Error::Bound(format!("class {l} is outside the table")))
    }

    /// Reads `s[[..]]` and `dbar[[..]]` terms, possibly mixed.
    pub fn parse(&self, text: &str) -> Result<SFElem> {
        let mixed = Elem::<(bool, usize), RatFunc>::parse(text, |lit| {
            let (bar, inner) = match strip_literal(lit, "dbar", '[', ']') {
                Ok(i) => (true, i),
                Err(_) => (false, strip_literal(lit, "s", '[', ']')?),
            };
            Ok((bar, self.lookup(&Label::parse(&format!("[{inner}]"))?)?))
        })?;
        let mut out = SFElem::zero();
        for (&(bar, x), c) in mixed.terms() {
            let c = if bar { c.div(&self.aut[x])? } else { c.clone() };
            out.add_term(x, c);
        }
        Ok(out)
    }

    pub fn render(&self, f: &SFElem) -> String {
        f.render(|&k| format!("s{}", self.t.label(k)))
    }

    /// Coordinates in the `δ̄` basis.
    pub fn to_dbar(&self, f: &SFElem) -> SFElem {
        SFElem::from_terms(f.terms().map(|(&x, c)| (x, c.mul(&self.aut[x]))))
    }

    pub fn render_dbar(&self, f: &SFElem) -> String {
        self.to_dbar(f).render(|&k| format!("dbar{}", self.t.label(k)))
    }

    fn check_sum(&self, x: usize, y: usize) -> Result<()> {
        let d = self.t.dimvec(x).add(&self.t.dimvec(y));
        if self.t.contains_dim(&d) {
            Ok(())
        } else {
            Err(Error::Bound(format!(
                "s{} * s{} has dimension {d}, outside the table bound",
                self.t.label(x),
                self.t.label(y)
            )))
        }
    }

    pub fn mult(&self, f: &SFElem, g: &SFElem) -> Result<SFElem> {
        f.bilinear(g, |&x, &y| {
            self.check_sum(x, y)?;
            Ok(SFElem::from_terms(self.consts.range((x, y, 0)..=(x, y, usize::MAX)).map(|(k, v)| (k.2, v.clone()))))
        })
    }

    /// The product twisted by `℘^{-χ(α,β)}` on graded pieces, the form in
    /// which the quantum Serre relations hold.
    pub fn twisted_mult(&self, f: &SFElem, g: &SFElem) -> Result<SFElem> {
        f.bilinear(g, |&x, &y| {
            let c = self.form.eval(&self.t.dimvec(x), &self.t.dimvec(y))?;
            Ok(self.mult(&self.s(x), &self.s(y))?.scale(&RatFunc::p_pow(-c)))
        })
    }

    /// The antichain product `s_X • s_Y = s_{X⊕Y}`.
    pub fn direct_sum(&self, f: &SFElem, g: &SFElem) -> Result<SFElem> {
        f.bilinear(g, |&x, &y| {
            self.check_sum(x, y)?;
            Ok(self.s(self.lookup(&self.t.label(x).union(self.t.label(y)))?))
        })
    }

    pub fn poset_product(&self, p: &Poset, inputs: &[SFElem], br: Bracketing) -> Result<SFElem> {
        if inputs.len() != p.len() {
            return Err(Error::DimensionMismatch { expected: p.len(), found: inputs.len() });
        }
        if p.is_empty() {
            return Ok(self.one());
        }
        p.certificate()?.eval(inputs, &|a, b| self.mult(a, b), &|a, b| self.direct_sum(a, b), br)
    }

    /// `Σ c_X` for `f = Σ c_X s_X`.
    pub fn integral(&self, f: &SFElem) -> RatFunc {
        f.terms().fold(RatFunc::zero(), |acc, (_, c)| acc.add(c))
    }

    /// `Φ(Σ c_X s_X) = Σ_α (Σ_{dim X = α} c_X) a^α`.
    pub fn phi_lambda(&self, f: &SFElem) -> AElem {
        let mut out = AElem::zero();
        for (&x, c) in f.terms() {
            out.add_term(self.t.dimvec(x), c.clone());
        }
        out
    }
}

/// `a^0`, the identity of the target algebra.
pub fn phi_one(n: usize) -> AElem {
    a_basis(crate::quiver::DimVec::zeros(n))
}

#[cfg(test)]
mod tests;
