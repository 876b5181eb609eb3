use crate::element::factorial;
use crate::error::{Error, Result};
use crate::quiver::DimVec;
use num_bigint::BigInt;
use std::fmt;

/// Class `[I,κ]` of a finite set labelled by nonzero dimension vectors:
/// the multiset of labels, kept sorted (largest first).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct IKClass(Vec<DimVec>);

impl IKClass {
    pub fn new(mut v: Vec<DimVec>) -> Result<Self> {
        if let Some(d) = v.iter().find(|d| d.is_zero() || !d.is_nonneg()) {
            return Err(Error::Domain(format!("class labels must be nonzero and non-negative, got {d}")));
        }
        v.sort_by(|a, b| b.cmp(a));
        Ok(IKClass(v))
    }

    pub fn empty() -> Self {
        IKClass(Vec::new())
    }

    pub fn single(d: DimVec) -> Result<Self> {
        Self::new(vec![d])
    }

    pub fn parts(&self) -> &[DimVec] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `κ(I)`, the sum of the labels.
    pub fn total(&self, n: usize) -> DimVec {
        self.0.iter().fold(DimVec::zeros(n), |a, d| a.add(d))
    }

    /// `|Aut(I,κ)| = ∏ m!` over the multiplicities of distinct labels.
    pub fn aut_order(&self) -> BigInt {
        let mut out = BigInt::from(1);
        let mut k = 0;
        while k < self.0.len() {
            let m = self.0[k..].iter().take_while(|d| **d == self.0[k]).count();
            out *= factorial(m);
            k += m;
        }
        out
    }

    pub fn union(&self, o: &IKClass) -> IKClass {
        let mut v = self.0.clone();
        v.extend(o.0.iter().cloned());
        v.sort_by(|a, b| b.cmp(a));
        IKClass(v)
    }

    /// Parse the inside of `{[1,0],[0,1]}`.
    pub fn parse_checked(inner: &str, n: usize) -> Result<Self> {
        let mut parts = Vec::new();
        let mut rest = inner.trim();
        while !rest.is_empty() {
            let r = rest.strip_prefix('[').ok_or_else(|| Error::Parse(format!("bad class {inner:?}")))?;
            let close = r.find(']').ok_or_else(|| Error::Parse(format!("bad class {inner:?}")))?;
            let d = DimVec::parse(&r[..close])?;
            if d.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: d.len() });
            }
            parts.push(d);
            rest = r[close + 1..].trim_start();
            rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
        }
        Self::new(parts)
    }
}

impl fmt::Display for IKClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, d) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}
