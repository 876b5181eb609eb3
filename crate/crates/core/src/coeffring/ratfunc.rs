use super::poly::Poly;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Exact value of the specialization ring (rationals).
pub type OmegaScalar = BigRational;

/// An element of Q(P), where the formal square root `P` of `L` is the
/// variable. Always held in canonical form: numerator and denominator
/// coprime, joint integer content 1, positive leading denominator
/// coefficient, zero as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Build and canonicalize `num/den`.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let v = num.valuation().min(den.valuation());
        let (mut num, mut den) = if v > 0 { (num.shift_down(v), den.shift_down(v)) } else { (num, den) };
        // A monomial denominator shares no non-constant factor with a
        // numerator that has a constant term, so the gcd is skipped.
        if den.term_count() > 1 && num.degree() > Some(0) {
            let g = Poly::gcd(&num, &den);
            if g.degree() > Some(0) {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let mut c = num.content().gcd(&den.content());
        if den.lc().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        RatFunc { num, den }
    }

    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        RatFunc { num: Poly::constant(n), den: Poly::one() }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::normalize(Poly::constant(q.numer().clone()), Poly::constant(q.denom().clone()))
    }

    /// A polynomial in P.
    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }.renormalized()
    }

    fn renormalized(self) -> Self {
        Self::normalize(self.num, self.den)
    }

    /// A polynomial in L given by its coefficients (constant first).
    pub fn from_l_poly(p: &Poly) -> Self {
        Self::from_poly(p.square_variable())
    }

    /// `P^k` for any integer `k`.
    pub fn p_pow(k: i64) -> Self {
        if k >= 0 {
            RatFunc { num: Poly::monomial(BigInt::one(), k as usize), den: Poly::one() }
        } else {
            RatFunc { num: Poly::one(), den: Poly::monomial(BigInt::one(), (-k) as usize) }
        }
    }

    /// `L^k = P^(2k)`.
    pub fn l_pow(k: i64) -> Self {
        Self::p_pow(2 * k)
    }

    /// The variable `P`.
    pub fn p() -> Self {
        Self::p_pow(1)
    }

    /// `L = P^2`.
    pub fn l() -> Self {
        Self::p_pow(2)
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Self::normalize(self.num.add(&o.num), self.den.clone());
        }
        Self::normalize(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { num: self.num.mul(&o.num), den: Poly::one() };
        }
        Self::normalize(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<RatFunc> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    pub fn scale_int(&self, n: i64) -> RatFunc {
        self.mul(&RatFunc::from_int(n))
    }

    /// Membership in the subring of functions without a pole at `P = ±1`.
    pub fn is_lambda_circ(&self) -> bool {
        let one = BigInt::one();
        !self.den.eval_int(&one).is_zero() && !self.den.eval_int(&-one).is_zero()
    }

    /// Value at `P = 1` (equivalently `L = 1`).
    pub fn pi_eval(&self) -> Result<OmegaScalar> {
        if !self.is_lambda_circ() {
            return Err(Error::NotLambdaCirc(self.to_string()));
        }
        self.specialize(&BigRational::one())
    }

    /// Exact value at `P = v`.
    pub fn specialize(&self, v: &BigRational) -> Result<OmegaScalar> {
        let d = self.den.eval(v);
        if d.is_zero() {
            return Err(Error::Pole(format!("{self} at P={v}")));
        }
        Ok(self.num.eval(v) / d)
    }

    /// Value at `L = v` for a function of `L` alone (only even powers of `P`).
    pub fn specialize_l(&self, v: &BigRational) -> Result<OmegaScalar> {
        if !self.num.is_even() || !self.den.is_even() {
            return Err(Error::Domain(format!("{self} is not a function of L")));
        }
        let d = self.den.halve_variable().eval(v);
        if d.is_zero() {
            return Err(Error::Pole(format!("{self} at L={v}")));
        }
        Ok(self.num.halve_variable().eval(v) / d)
    }

    /// Apply `P -> 1/P`.
    pub fn invert_variable(&self) -> RatFunc {
        // p(1/P) = P^-deg * rev(p)
        let rev = |p: &Poly| Poly::from_coeffs(p.coeffs().iter().rev().cloned().collect());
        let dn = self.num.degree().unwrap_or(0) as i64;
        let dd = self.den.degree().unwrap_or(0) as i64;
        let f = RatFunc::normalize(rev(&self.num), rev(&self.den));
        f.mul(&RatFunc::p_pow(dd - dn))
    }

    /// The constant value, if this is a constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0) {
            Some(BigRational::new(self.num.coeff(0), self.den.coeff(0)))
        } else {
            None
        }
    }
}

/// `(n choose k)` in L: `prod (L^(n-i)-1) / prod (L^(i+1)-1)` for `i < k`.
pub fn gauss_binomial(n: u32, k: u32) -> Result<RatFunc> {
    if k > n {
        return Err(Error::Domain(format!("gauss_binomial: k={k} > n={n}")));
    }
    let lm1 = |e: u32| Poly::monomial(BigInt::one(), e as usize).sub(&Poly::one());
    let mut num = Poly::one();
    let mut den = Poly::one();
    for i in 0..k {
        num = num.mul(&lm1(n - i));
        den = den.mul(&lm1(i + 1));
    }
    let q = num.div_exact(&den).ok_or_else(|| Error::Consistency("gauss binomial not polynomial".into()))?;
    Ok(RatFunc::from_l_poly(&q))
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

fn fmt_poly(p: &Poly, in_l: bool) -> (String, bool) {
    let s = if in_l { p.halve_variable().format_in("L") } else { p.format_in("P") };
    let compound = p.term_count() > 1 || (p.term_count() == 1 && p.lc().is_negative() && p.degree() > Some(0));
    (s, compound)
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let in_l = self.num.is_even() && self.den.is_even();
        let (n, nc) = fmt_poly(&self.num, in_l);
        if self.den.is_one() {
            return write!(f, "{n}");
        }
        let (d, _) = fmt_poly(&self.den, in_l);
        let n = if nc { format!("({n})") } else { n };
        let d = if self.den.term_count() > 1 || (self.den.degree() > Some(0) && !self.den.lc().is_one()) {
            format!("({d})")
        } else {
            d
        };
        write!(f, "{n}/{d}")
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl std::str::FromStr for RatFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_ratfunc(s)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl std::ops::$tr<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &RatFunc) -> RatFunc {
                RatFunc::$f(self, o)
            }
        }
        impl std::ops::$tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                RatFunc::$f(&self, &o)
            }
        }
    };
}
binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);

impl std::ops::Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn field_examples() {
        assert_eq!(RatFunc::p().add(&RatFunc::p()), r("2*P"));
        let l2 = RatFunc::l_pow(1);
        assert!(l2.mul(&l2.inv().unwrap()).is_one());
        let lm1 = RatFunc::l().sub(&RatFunc::one());
        assert_eq!(lm1.inv().unwrap().to_string(), "1/(L-1)");
        assert_eq!(RatFunc::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn gauss_examples() {
        assert_eq!(gauss_binomial(2, 1).unwrap(), r("L+1"));
        assert!(gauss_binomial(3, 0).unwrap().is_one());
        assert_eq!(gauss_binomial(4, 2).unwrap(), r("(L^2+1)*(L^2+L+1)"));
        assert!(gauss_binomial(1, 2).is_err());
    }

    #[test]
    fn lambda_circ_examples() {
        let x = r("(L^-3-1)/(L-1)");
        assert!(x.is_lambda_circ());
        assert_eq!(x.pi_eval().unwrap(), BigRational::from_integer((-3).into()));
        assert!(!r("1/(L-1)").is_lambda_circ());
        assert!(r("L^-5").is_lambda_circ());
        assert_eq!(r("L^-5").denom(), &Poly::monomial(BigInt::one(), 10));
        assert_eq!(gauss_binomial(4, 2).unwrap().pi_eval().unwrap(), BigRational::from_integer(6.into()));
        assert_eq!(r("7/3").pi_eval().unwrap(), BigRational::new(7.into(), 3.into()));
        assert!(matches!(r("1/(L-1)").pi_eval(), Err(Error::NotLambdaCirc(_))));
        assert!(!r("1/(P+1)").is_lambda_circ());
    }

    #[test]
    fn specialize_examples() {
        let two = BigRational::from_integer(2.into());
        assert_eq!(r("L+1").specialize_l(&two).unwrap(), BigRational::from_integer(3.into()));
        assert!(r("P-1").specialize(&BigRational::one()).unwrap().is_zero());
        assert!(matches!(r("1/P").specialize(&BigRational::zero()), Err(Error::Pole(_))));
    }

    #[test]
    fn display_round_trips() {
        for s in ["(L-1)", "L^-5", "(P^3-P)/(2*P^2+1)", "-7/3", "(L^3-1)/(L-1)", "1/(3*L)", "-P"] {
            let x = r(s);
            assert_eq!(r(&x.to_string()), x, "{s} -> {x}");
        }
    }

    #[test]
    fn variable_inversion() {
        let x = r("(P^2+P^-2)/(P-P^-1)");
        assert_eq!(x.invert_variable(), x.neg());
    }
}
