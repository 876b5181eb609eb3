//! Sparse linear combinations over a coefficient field, shared by every
//! algebra in the crate, plus the textual element grammar
//! `coef*basis + coef*basis …`.

use crate::coeffring::{parse_ratfunc, RatFunc};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt::Debug;

/// Field operations needed by the sparse algebras.
pub trait Coef: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn from_bigint(n: &BigInt) -> Self;
    fn parse(s: &str) -> Result<Self>;
    fn render(&self) -> String;

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }
}

impl Coef for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn parse(s: &str) -> Result<Self> {
        parse_ratfunc(s)?.as_constant().ok_or_else(|| Error::Parse(format!("expected a rational number, got {s:?}")))
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Coef for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RatFunc::add(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatFunc::mul(self, o)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        RatFunc::inv(self)
    }
    fn from_bigint(n: &BigInt) -> Self {
        RatFunc::from_bigint(n.clone())
    }
    fn parse(s: &str) -> Result<Self> {
        parse_ratfunc(s)
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

/// A finitely supported map `basis -> coefficient`; zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Elem<K: Ord, C> {
    terms: BTreeMap<K, C>,
}

impl<K: Ord + Clone, C: Coef> Default for Elem<K, C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone, C: Coef> Elem<K, C> {
    pub fn zero() -> Self {
        Elem { terms: BTreeMap::new() }
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, C::one())
    }

    pub fn term(k: K, c: C) -> Self {
        let mut e = Self::zero();
        e.add_term(k, c);
        e
    }

    pub fn from_terms(it: impl IntoIterator<Item = (K, C)>) -> Self {
        let mut e = Self::zero();
        for (k, c) in it {
            e.add_term(k, c);
        }
        e
    }

    pub fn add_term(&mut self, k: K, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &C)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn get(&self, k: &K) -> C {
        self.terms.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut e = self.clone();
        for (k, c) in &o.terms {
            e.add_term(k.clone(), c.clone());
        }
        e
    }

    pub fn neg(&self) -> Self {
        Elem { terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (k.clone(), c.mul(s))))
    }

    pub fn map_coeffs<D: Coef>(&self, f: impl Fn(&C) -> Result<D>) -> Result<Elem<K, D>> {
        let mut out = Elem::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Bilinear extension of a product on basis vectors.
    pub fn bilinear(&self, o: &Self, mut f: impl FnMut(&K, &K) -> Result<Self>) -> Result<Self> {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let s = ca.mul(cb);
                for (k, c) in f(a, b)?.terms {
                    out.add_term(k, c.mul(&s));
                }
            }
        }
        Ok(out)
    }

    /// Render as `coef*basis + …`, unit coefficients omitted, compound
    /// coefficients parenthesised.
    pub fn render(&self, name: impl Fn(&K) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let txt = c.render();
            let (neg, body) = match txt.strip_prefix('-') {
                Some(b) if !is_compound(b) => (true, b.to_string()),
                _ => (false, txt),
            };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if body != "1" {
                if is_compound(&body) {
                    s.push_str(&format!("({body})*"));
                } else {
                    s.push_str(&body);
                    s.push('*');
                }
            }
            s.push_str(&name(k));
        }
        s
    }

    /// Parse the grammar produced by [`render`](Self::render); `basis`
    /// reads a basis literal such as `d[[1,0]]` (including its prefix).
    pub fn parse(text: &str, basis: impl Fn(&str) -> Result<K>) -> Result<Self> {
        let t = text.trim();
        if t == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        for (sign, term) in split_terms(t)? {
            let (coef, lit) = split_basis(&term)?;
            let c = match coef.trim() {
                "" => C::one(),
                "-" => C::one().neg(),
                cs => C::parse(cs)?,
            };
            let c = if sign { c.neg() } else { c };
            out.add_term(basis(lit)?, c);
        }
        Ok(out)
    }
}

fn is_compound(s: &str) -> bool {
    s.contains(['+', '-', '/', ' '])
}

/// Split at top-level `+`/`-` that are binary operators between terms.
fn split_terms(t: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut neg = false;
    let mut prev: Option<char> = None;
    for ch in t.chars() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            _ => {}
        }
        let binary = depth == 0 && (ch == '+' || ch == '-') && matches!(prev, Some(p) if p == ']' || p == '}');
        if binary {
            out.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
        if !ch.is_whitespace() {
            prev = Some(ch);
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced brackets in {t:?}")));
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in {t:?}")));
    }
    out.push((neg, cur));
    Ok(out)
}

/// Separate `coef*` from the trailing basis literal.
fn split_basis(term: &str) -> Result<(String, &str)> {
    let t = term.trim();
    let close = t.chars().last().ok_or_else(|| Error::Parse("empty term".into()))?;
    let open = match close {
        ']' => '[',
        '}' => '{',
        _ => return Err(Error::Parse(format!("term {t:?} does not end in a basis element"))),
    };
    let bytes: Vec<char> = t.chars().collect();
    let mut depth = 0;
    let mut start = None;
    for i in (0..bytes.len()).rev() {
        if bytes[i] == close {
            depth += 1;
        } else if bytes[i] == open {
            depth -= 1;
            if depth == 0 {
                start = Some(i);
                break;
            }
        }
    }
    let mut s = start.ok_or_else(|| Error::Parse(format!("unbalanced basis literal in {t:?}")))?;
    while s > 0 && bytes[s - 1].is_ascii_alphabetic() {
        s -= 1;
    }
    let byte_start = t.char_indices().nth(s).map(|(b, _)| b).unwrap_or(0);
    let (pre, lit) = t.split_at(byte_start);
    let pre = pre.trim_end();
    let pre = match pre.strip_suffix('*') {
        Some(p) => p.to_string(),
        None if pre.is_empty() || pre == "-" || pre == "+" => pre.trim_start_matches('+').to_string(),
        None => return Err(Error::Parse(format!("missing '*' before {lit:?}"))),
    };
    Ok((pre, lit))
}

/// Parse `[[1,0],[0,1]]`-style dimension vector lists inside a literal
/// with the given prefix and brackets.
pub(crate) fn strip_literal<'a>(lit: &'a str, prefix: &str, open: char, close: char) -> Result<&'a str> {
    lit.trim()
        .strip_prefix(prefix)
        .and_then(|r| r.strip_prefix(open))
        .and_then(|r| r.strip_suffix(close))
        .ok_or_else(|| Error::Parse(format!("expected {prefix}{open}…{close}, got {lit:?}")))
}

/// Exact rank of a dense matrix over a coefficient field.
pub fn rank<C: Coef>(mut m: Vec<Vec<C>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, piv);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        let prow: Vec<C> = m[r].iter().map(|x| x.mul(&inv)).collect();
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    m[i][j] = m[i][j].sub(&f.mul(&prow[j]));
                }
            }
        }
        m[r] = prow;
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = Elem<String, RatFunc>;

    fn lit(s: &str) -> Result<String> {
        Ok(s.to_string())
    }

    #[test]
    fn render_and_parse() {
        let e = E::from_terms([
            ("s[[1,1]]".to_string(), "L-1".parse().unwrap()),
            ("s[[1,2]]".to_string(), RatFunc::one()),
            ("s[[2,2]]".to_string(), RatFunc::from_int(-3)),
            ("s[[3,3]]".to_string(), "1/(L-1)".parse().unwrap()),
        ]);
        let s = e.render(|k| k.clone());
        assert_eq!(s, "(L-1)*s[[1,1]] + s[[1,2]] - 3*s[[2,2]] + (1/(L-1))*s[[3,3]]");
        assert_eq!(E::parse(&s, lit).unwrap(), e);
        assert_eq!(E::parse("-s[] + 2*s[[1]]", lit).unwrap().len(), 2);
        assert!(E::parse("s[[1]", lit).is_err());
        assert!(E::parse("2 s[[1]]", lit).is_err());
        assert_eq!(E::zero().render(|k| k.clone()), "0");
    }

    #[test]
    fn ranks() {
        let q = |n: i64| BigRational::from_integer(n.into());
        assert_eq!(rank(vec![vec![q(1), q(2)], vec![q(2), q(4)]]), 1);
        assert_eq!(rank(vec![vec![q(1), q(2)], vec![q(2), q(5)]]), 2);
        assert_eq!(rank::<BigRational>(vec![]), 0);
    }
}
