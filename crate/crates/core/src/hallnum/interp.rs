//! Integer polynomials in `q` recovered from point counts at primes.

use crate::coeffring::{Poly, RatFunc};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// A point-count polynomial in `q` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CountPoly(pub Poly);

impl CountPoly {
    pub fn zero() -> Self {
        CountPoly(Poly::zero())
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        CountPoly(Poly::from_i64s(c))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        self.0.coeffs()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn eval(&self, q: u64) -> BigInt {
        self.0.eval_int(&BigInt::from(q))
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs().iter().sum()
    }

    /// Generic value: `q ↦ ℓ = ℘²`.
    pub fn generic(&self) -> RatFunc {
        RatFunc::from_l_poly(&self.0)
    }

    pub fn mul(&self, o: &CountPoly) -> CountPoly {
        CountPoly(self.0.mul(&o.0))
    }

    pub fn add(&self, o: &CountPoly) -> CountPoly {
        CountPoly(self.0.add(&o.0))
    }

    /// `q^k`
    pub fn q_pow(k: usize) -> CountPoly {
        CountPoly(Poly::monomial(BigInt::one(), k))
    }
}

impl fmt::Display for CountPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.format_in("q"))
    }
}

/// The unique polynomial of degree `< samples.len()` through the samples
/// (Newton divided differences over ℚ), required to have integer
/// coefficients.
pub fn interpolate_counts(samples: &[(u64, BigInt)]) -> Result<CountPoly> {
    if samples.len() < 2 {
        return Err(Error::Domain("interpolation needs at least two samples".into()));
    }
    for (i, a) in samples.iter().enumerate() {
        if samples[..i].iter().any(|b| b.0 == a.0) {
            return Err(Error::Domain(format!("repeated sample point {}", a.0)));
        }
    }
    let xs: Vec<BigRational> = samples.iter().map(|s| BigRational::from_integer(s.0.into())).collect();
    let mut dd: Vec<BigRational> = samples.iter().map(|s| BigRational::from_integer(s.1.clone())).collect();
    let n = dd.len();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    // Horner-style expansion of the Newton form into monomial coefficients.
    let mut acc: Vec<BigRational> = vec![dd[n - 1].clone()];
    for i in (0..n - 1).rev() {
        let mut next = vec![BigRational::zero(); acc.len() + 1];
        for (k, c) in acc.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * &xs[i];
        }
        next[0] += &dd[i];
        acc = next;
    }
    let coeffs = acc
        .into_iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::NotPolynomialCount(format!("non-integral coefficient {c}")))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CountPoly(Poly::from_coeffs(coeffs)))
}

/// Interpolate, then demand the held-out value.
pub fn interpolate_checked(samples: &[(u64, BigInt)], check: &(u64, BigInt)) -> Result<CountPoly> {
    let f = interpolate_counts(samples)?;
    let got = f.eval(check.0);
    if got != check.1 {
        return Err(Error::NotPolynomialCount(format!("fit {f} predicts {got} at q={}, counted {}", check.0, check.1)));
    }
    Ok(f)
}
