//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored low degree first and trimmed, so the zero
//! polynomial is the empty vector and structural equality is equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    c: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    pub fn from_coeffs(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.c.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> BigInt {
        self.c.last().cloned().unwrap_or_default()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.c.iter().filter(|x| !x.is_zero()).count()
    }

    /// Largest `k` with `x^k` dividing `self` (0 for the zero polynomial).
    pub fn valuation(&self) -> usize {
        self.c.iter().position(|x| !x.is_zero()).unwrap_or(0)
    }

    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.is_zero() || self.valuation() >= k);
        Poly { c: self.c.iter().skip(k).cloned().collect() }
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.c.iter().cloned());
        Poly { c: v }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.c.get(k);
            let b = o.c.get(k);
            v.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::from_coeffs(v)
    }

    pub fn neg(&self) -> Poly {
        Poly { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(v)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, s: &BigInt) -> Poly {
        if s.is_zero() {
            return Self::zero();
        }
        Poly { c: self.c.iter().map(|x| x * s).collect() }
    }

    /// Divide every coefficient by `s`, which must divide each exactly.
    pub fn div_scalar(&self, s: &BigInt) -> Poly {
        Poly {
            c: self
                .c
                .iter()
                .map(|x| {
                    debug_assert!((x % s).is_zero());
                    x / s
                })
                .collect(),
        }
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for x in &self.c {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self / content`, with positive leading coefficient.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        self.div_scalar(&g)
    }

    /// Exact quotient over the integers, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = d.degree().unwrap();
        let mut r = self.c.clone();
        if r.len() < d.c.len() {
            return None;
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        let lc = d.lc();
        for k in (0..q.len()).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qq, rem) = top.div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dj) in d.c.iter().enumerate() {
                if !dj.is_zero() {
                    r[k + j] -= &qq * dj;
                }
            }
            q[k] = qq;
        }
        if r.iter().all(|x| x.is_zero()) {
            Some(Self::from_coeffs(q))
        } else {
            None
        }
    }

    /// Pseudo-remainder: `lc(d)^(deg a - deg d + 1) * a mod d`.
    fn pseudo_rem(&self, d: &Poly) -> Poly {
        let dd = d.degree().unwrap();
        let mut r = self.clone();
        let lc = d.lc();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let t = r.lc();
            let shifted = d.shift_up(dr - dd).scale(&t);
            r = r.scale(&lc).sub(&shifted);
        }
        r
    }

    /// Primitive gcd (positive leading coefficient) by the primitive
    /// remainder sequence. The integer content is not included.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.primitive(), b.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return Poly::one();
            }
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    pub fn eval(&self, v: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for x in self.c.iter().rev() {
            acc = acc * v + BigRational::from_integer(x.clone());
        }
        acc
    }

    pub fn eval_int(&self, v: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for x in self.c.iter().rev() {
            acc = acc * v + x;
        }
        acc
    }

    /// Substitute `x -> x^2`.
    pub fn square_variable(&self) -> Poly {
        let mut v = vec![BigInt::zero(); (2 * self.c.len()).saturating_sub(1)];
        for (k, x) in self.c.iter().enumerate() {
            v[2 * k] = x.clone();
        }
        Self::from_coeffs(v)
    }

    /// True when only even powers occur.
    pub fn is_even(&self) -> bool {
        self.c.iter().enumerate().all(|(k, x)| k % 2 == 0 || x.is_zero())
    }

    /// Inverse of [`square_variable`](Self::square_variable); requires [`is_even`](Self::is_even).
    pub fn halve_variable(&self) -> Poly {
        Self::from_coeffs(self.c.iter().step_by(2).cloned().collect())
    }

    /// Human-readable form in the given variable name, highest degree first.
    pub fn format_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for k in (0..self.c.len()).rev() {
            let x = &self.c[k];
            if x.is_zero() {
                continue;
            }
            let neg = x.is_negative();
            let a = x.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push(if neg { '-' } else { '+' });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{a}*{mono}"));
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (x^2-1)(x+2) and (x-1)(x^2+1) share exactly x-1
        let a = p(&[-1, 0, 1]).mul(&p(&[2, 1]));
        let b = p(&[-1, 1]).mul(&p(&[1, 0, 1]));
        assert_eq!(Poly::gcd(&a, &b), p(&[-1, 1]));
    }

    #[test]
    fn exact_division_detects_remainders() {
        let a = p(&[-1, 0, 0, 1]);
        assert_eq!(a.div_exact(&p(&[-1, 1])), Some(p(&[1, 1, 1])));
        assert_eq!(a.div_exact(&p(&[1, 1])), None);
        assert_eq!(p(&[2, 2]).div_exact(&p(&[0, 2])), None);
    }

    #[test]
    fn formatting() {
        assert_eq!(p(&[-1, 0, 1]).format_in("P"), "P^2-1");
        assert_eq!(p(&[1, -3]).format_in("L"), "-3*L+1");
        assert_eq!(Poly::zero().format_in("L"), "0");
    }
}
