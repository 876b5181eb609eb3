//! Quivers, dimension vectors and Euler forms.

use crate::error::{Error, Result};
use num_rational::Rational64;
use num_traits::{One, Zero};
use std::fmt;

/// Integer vector indexed by the vertices of a quiver.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct DimVec(pub Vec<i64>);

impl DimVec {
    pub fn zeros(n: usize) -> Self {
        DimVec(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        DimVec(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// In the closed positive cone (all coordinates non-negative).
    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// In the positive cone: non-negative and nonzero.
    pub fn is_positive(&self) -> bool {
        self.is_nonneg() && !self.is_zero()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, o: &DimVec) -> DimVec {
        assert_eq!(self.len(), o.len(), "dimension vector length mismatch");
        DimVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &DimVec) -> DimVec {
        assert_eq!(self.len(), o.len(), "dimension vector length mismatch");
        DimVec(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    /// Coordinatewise `<=`.
    pub fn le(&self, o: &DimVec) -> bool {
        self.len() == o.len() && self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    pub fn get(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// All vectors `d` with `0 <= d <= self`, in lexicographic order.
    pub fn below(&self) -> Vec<DimVec> {
        let mut out = vec![DimVec::zeros(self.len())];
        for i in 0..self.len() {
            let mut next = Vec::new();
            for d in &out {
                for x in 0..=self.0[i] {
                    let mut e = d.clone();
                    e.0[i] = x;
                    next.push(e);
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    pub fn parse(s: &str) -> Result<DimVec> {
        let t = s.trim();
        let t = t.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(t);
        if t.trim().is_empty() {
            return Ok(DimVec(Vec::new()));
        }
        t.split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad dimension vector {s:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(DimVec)
    }
}

impl fmt::Display for DimVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// A finite quiver without loops or oriented cycles. Vertices are `0..n`
/// internally and `1..=n` in files.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quiver {
    n: usize,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(n: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse("a quiver needs at least one vertex".into()));
        }
        for &(s, t) in &arrows {
            if s >= n || t >= n {
                return Err(Error::Parse(format!("arrow {} {} outside 1..={n}", s + 1, t + 1)));
            }
            if s == t {
                return Err(Error::SelfLoop(s + 1));
            }
        }
        let q = Quiver { n, arrows };
        q.topo_order()?;
        Ok(q)
    }

    /// Linear quiver `1 -> 2 -> ... -> n`.
    pub fn linear(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i)).collect()).expect("linear quiver is acyclic")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Vertices in an order where every arrow goes forward.
    pub fn topo_order(&self) -> Result<Vec<usize>> {
        let mut indeg = vec![0usize; self.n];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut ready: Vec<usize> = (0..self.n).filter(|&v| indeg[v] == 0).rev().collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = ready.pop() {
            order.push(v);
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        ready.push(t);
                    }
                }
            }
        }
        if order.len() < self.n {
            let stuck = (0..self.n).find(|&v| indeg[v] > 0).unwrap();
            return Err(Error::OrientedCycle(stuck + 1));
        }
        Ok(order)
    }

    /// Read the line-oriented quiver format.
    pub fn load(text: &str) -> Result<Self> {
        let mut n = None;
        let mut arrows = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let words: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Parse(format!("line {}: {raw:?}", lineno + 1));
            let num = |w: &str| w.parse::<usize>().map_err(|_| bad());
            match (n, words.as_slice()) {
                (None, ["vertices", k]) => n = Some(num(k)?),
                (Some(_), ["arrow", s, t]) => {
                    let (s, t) = (num(s)?, num(t)?);
                    if s == 0 || t == 0 {
                        return Err(bad());
                    }
                    arrows.push((s - 1, t - 1));
                }
                _ => return Err(bad()),
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing `vertices N` line".into()))?;
        Self::new(n, arrows)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("vertices {}\n", self.n);
        for &(a, b) in &self.arrows {
            s.push_str(&format!("arrow {} {}\n", a + 1, b + 1));
        }
        s
    }

    pub fn euler_form(&self) -> EulerForm {
        let mut m = vec![vec![0i64; self.n]; self.n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(s, t) in &self.arrows {
            m[s][t] -= 1;
        }
        EulerForm { matrix: to_q(&m), quiver_derived: true }
    }
}

fn to_q(m: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    m.iter().map(|r| r.iter().map(|&x| Rational64::from_integer(x)).collect()).collect()
}

/// Bilinear form `chi(a, b) = a^T M b` on dimension vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EulerForm {
    matrix: Vec<Vec<Rational64>>,
    quiver_derived: bool,
}

impl EulerForm {
    /// An arbitrary integer form, not tied to a quiver.
    pub fn explicit(m: Vec<Vec<i64>>) -> Result<Self> {
        Self::explicit_rational(to_q(&m))
    }

    /// An arbitrary rational form.
    pub fn explicit_rational(m: Vec<Vec<Rational64>>) -> Result<Self> {
        let n = m.len();
        for r in &m {
            if r.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: r.len() });
            }
        }
        Ok(EulerForm { matrix: m, quiver_derived: false })
    }

    /// Parse `"1,-1;0,1"` (rows separated by `;`, entries may be `a/b`).
    pub fn parse(s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|r| r.split(',').map(|x| parse_rational(x.trim())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::explicit_rational(rows)
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_quiver_derived(&self) -> bool {
        self.quiver_derived
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational64 {
        self.matrix[i][j]
    }

    pub fn is_integral(&self) -> bool {
        self.matrix.iter().flatten().all(|x| x.is_integer())
    }

    fn check(&self, a: &DimVec) -> Result<()> {
        if a.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: a.len() });
        }
        Ok(())
    }

    /// Rational value of the form.
    pub fn eval_q(&self, a: &DimVec, b: &DimVec) -> Result<Rational64> {
        self.check(a)?;
        self.check(b)?;
        let mut acc = Rational64::zero();
        for (i, &ai) in a.0.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.0.iter().enumerate() {
                if bj != 0 {
                    acc += self.matrix[i][j] * (ai * bj);
                }
            }
        }
        Ok(acc)
    }

    /// Integer value of the form; errors if the value is fractional.
    pub fn eval(&self, a: &DimVec, b: &DimVec) -> Result<i64> {
        let v = self.eval_q(a, b)?;
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(Error::Domain(format!("form value {v} is not an integer")))
        }
    }

    /// `chi(a,b) - chi(b,a)`.
    pub fn antisym_q(&self, a: &DimVec, b: &DimVec) -> Result<Rational64> {
        Ok(self.eval_q(a, b)? - self.eval_q(b, a)?)
    }

    pub fn antisym(&self, a: &DimVec, b: &DimVec) -> Result<i64> {
        Ok(self.eval(a, b)? - self.eval(b, a)?)
    }

    /// `a_ij = chi(e_i,e_j) + chi(e_j,e_i)` for `i != j`.
    pub fn cartan_a(&self, i: usize, j: usize) -> Result<i64> {
        if i == j {
            return Err(Error::Domain("cartan_a is only defined for distinct vertices".into()));
        }
        if i >= self.rank() || j >= self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: i.max(j) + 1 });
        }
        let v = self.matrix[i][j] + self.matrix[j][i];
        if !v.is_integer() {
            return Err(Error::Domain(format!("a_ij = {v} is not an integer")));
        }
        Ok(v.to_integer())
    }

    /// The form `M + S` where `S` is given.
    pub fn plus(&self, o: &EulerForm) -> Result<EulerForm> {
        if o.rank() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: o.rank() });
        }
        let m =
            (0..self.rank()).map(|i| (0..self.rank()).map(|j| self.matrix[i][j] + o.matrix[i][j]).collect()).collect();
        Ok(EulerForm { matrix: m, quiver_derived: false })
    }

    /// Half the antisymmetrization, `(chi - chi^T)/2`.
    pub fn half_antisym(&self) -> EulerForm {
        let half = Rational64::new(1, 2);
        let m = (0..self.rank())
            .map(|i| (0..self.rank()).map(|j| (self.matrix[i][j] - self.matrix[j][i]) * half).collect())
            .collect();
        EulerForm { matrix: m, quiver_derived: false }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.rank()).all(|i| (0..self.rank()).all(|j| self.matrix[i][j] == self.matrix[j][i]))
    }

    /// Quadratic form `chi(d,d)`; equals 1 exactly on positive roots of a
    /// Dynkin quiver.
    pub fn tits(&self, d: &DimVec) -> Result<i64> {
        self.eval(d, d)
    }

    pub fn identity(n: usize) -> EulerForm {
        let m = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }).collect())
            .collect();
        EulerForm { matrix: m, quiver_derived: false }
    }

    pub fn to_text(&self) -> String {
        self.matrix
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";")
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational64> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let d: i64 = b.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational64::new(a.trim().parse().map_err(|_| bad())?, d))
        }
        None => Ok(Rational64::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_form() {
        let q = Quiver::load("vertices 2\narrow 1 2").unwrap();
        let f = q.euler_form();
        let (e1, e2) = (DimVec::unit(2, 0), DimVec::unit(2, 1));
        assert_eq!(f.eval(&e1, &e2).unwrap(), -1);
        assert_eq!(f.eval(&e2, &e1).unwrap(), 0);
        assert_eq!(f.eval(&DimVec::zeros(2), &e2).unwrap(), 0);
        assert_eq!(f.cartan_a(0, 1).unwrap(), -1);
        assert!(f.cartan_a(1, 1).is_err());
        assert_eq!(f.antisym(&e1, &e2).unwrap(), -1);
        assert_eq!(f.antisym(&e2, &e1).unwrap(), 1);
        assert_eq!(f.antisym(&e1, &e1).unwrap(), 0);
        assert!(f.eval(&DimVec::zeros(3), &e1).is_err());
    }

    #[test]
    fn cartan_of_other_graphs() {
        let disc = Quiver::new(2, vec![]).unwrap().euler_form();
        assert_eq!(disc.cartan_a(0, 1).unwrap(), 0);
        let double = Quiver::load("vertices 2\narrow 1 2\narrow 1 2").unwrap().euler_form();
        assert_eq!(double.cartan_a(0, 1).unwrap(), -2);
    }

    #[test]
    fn load_errors() {
        assert_eq!(Quiver::load("vertices 1\narrow 1 1"), Err(Error::SelfLoop(1)));
        assert!(matches!(Quiver::load("vertices 3\narrow 1 2\narrow 2 3\narrow 3 1"), Err(Error::OrientedCycle(_))));
        assert!(matches!(Quiver::load("arrow 1 2"), Err(Error::Parse(_))));
        assert!(matches!(Quiver::load("vertices 2\narrow 1 3"), Err(Error::Parse(_))));
    }

    #[test]
    fn round_trip_keeps_arrow_order() {
        let text = "vertices 3\narrow 2 3\narrow 1 2\n";
        assert_eq!(Quiver::load(text).unwrap().to_text(), text);
        let commented = "# A3\nvertices 3  # three\narrow 2 3\n\narrow 1 2\n";
        assert_eq!(Quiver::load(commented).unwrap().to_text(), text);
    }

    #[test]
    fn half_antisym_is_rational() {
        let f = EulerForm::parse("1,-1;0,1").unwrap().half_antisym();
        assert_eq!(f.entry(0, 1), Rational64::new(-1, 2));
        assert!(!f.is_integral());
    }
}
