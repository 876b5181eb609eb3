//! Finite posets and series-parallel certificates.
//!
//! A poset is series-parallel when it is built from points by disjoint
//! union (antichain substitution) and ordinal sum (chain substitution).
//! The decomposition is found greedily: a disconnected comparability graph
//! splits in parallel, a disconnected incomparability graph splits in
//! series, and anything else (e.g. the "N" poset) has no certificate.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    le: Vec<Vec<bool>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpTree {
    Leaf(usize),
    /// Children in increasing order.
    Series(Vec<SpTree>),
    Parallel(Vec<SpTree>),
}

/// How chains and antichains of length > 2 are bracketed when replayed
/// through a binary product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bracketing {
    Left,
    Right,
}

impl Poset {
    /// The order generated by `rel` (pairs `i ⪯ j`, 0-based).
    pub fn new(n: usize, rel: &[(usize, usize)]) -> Result<Self> {
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in rel {
            if i >= n || j >= n {
                return Err(Error::Domain(format!("poset relation ({i},{j}) out of range")));
            }
            le[i][j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if le[i][k] {
                    for j in 0..n {
                        if le[k][j] {
                            le[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..i {
                if le[i][j] && le[j][i] {
                    return Err(Error::Domain(format!("relation is not antisymmetric at ({j},{i})")));
                }
            }
        }
        Ok(Poset { n, le })
    }

    pub fn chain(n: usize) -> Self {
        Self::new(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).expect("a chain is a poset")
    }

    pub fn antichain(n: usize) -> Self {
        Self::new(n, &[]).expect("an antichain is a poset")
    }

    /// Parse `"0<2,1<2"` on `n` points (0-based).
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let mut rel = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (a, b) = part.split_once('<').ok_or_else(|| Error::Parse(format!("bad relation {part:?}")))?;
            let a = a.trim().parse().map_err(|_| Error::Parse(format!("bad relation {part:?}")))?;
            let b = b.trim().parse().map_err(|_| Error::Parse(format!("bad relation {part:?}")))?;
            rel.push((a, b));
        }
        Self::new(n, &rel)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le[i][j]
    }

    /// Strictly comparable pairs `(i, j)` with `i ≺ j`.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && self.le[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn certificate(&self) -> Result<SpTree> {
        if self.n == 0 {
            return Err(Error::UnsupportedPoset("empty poset".into()));
        }
        let t = self.decompose(&(0..self.n).collect::<Vec<_>>())?;
        debug_assert_eq!(t.replay(self.n), *self);
        Ok(t)
    }

    fn components(&self, pts: &[usize], linked: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; pts.len()];
        let mut out = Vec::new();
        for s in 0..pts.len() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            comp[s] = id;
            let mut members = Vec::new();
            while let Some(a) = stack.pop() {
                members.push(pts[a]);
                for b in 0..pts.len() {
                    if comp[b] == usize::MAX && linked(pts[a], pts[b]) {
                        comp[b] = id;
                        stack.push(b);
                    }
                }
            }
            members.sort();
            out.push(members);
        }
        out
    }

    fn decompose(&self, pts: &[usize]) -> Result<SpTree> {
        if pts.len() == 1 {
            return Ok(SpTree::Leaf(pts[0]));
        }
        let comp = self.components(pts, |a, b| a != b && (self.le[a][b] || self.le[b][a]));
        if comp.len() > 1 {
            return Ok(SpTree::Parallel(comp.iter().map(|c| self.decompose(c)).collect::<Result<_>>()?));
        }
        let mut comp = self.components(pts, |a, b| a != b && !self.le[a][b] && !self.le[b][a]);
        if comp.len() > 1 {
            comp.sort_by(
                |x, y| {
                    if self.le[x[0]][y[0]] {
                        std::cmp::Ordering::Less
                    } else {
                        std::cmp::Ordering::Greater
                    }
                },
            );
            return Ok(SpTree::Series(comp.iter().map(|c| self.decompose(c)).collect::<Result<_>>()?));
        }
        Err(Error::UnsupportedPoset(format!("points {pts:?} admit no series or parallel split")))
    }
}

impl SpTree {
    pub fn leaves(&self) -> Vec<usize> {
        match self {
            SpTree::Leaf(i) => vec![*i],
            SpTree::Series(c) | SpTree::Parallel(c) => c.iter().flat_map(|t| t.leaves()).collect(),
        }
    }

    /// The order the certificate describes.
    pub fn replay(&self, n: usize) -> Poset {
        let mut rel = Vec::new();
        self.collect(&mut rel);
        Poset::new(n, &rel).expect("series-parallel trees describe posets")
    }

    fn collect(&self, rel: &mut Vec<(usize, usize)>) {
        match self {
            SpTree::Leaf(_) => {}
            SpTree::Parallel(c) => c.iter().for_each(|t| t.collect(rel)),
            SpTree::Series(c) => {
                for (k, t) in c.iter().enumerate() {
                    t.collect(rel);
                    for u in &c[k + 1..] {
                        for a in t.leaves() {
                            for b in u.leaves() {
                                rel.push((a, b));
                            }
                        }
                    }
                }
            }
        }
    }

    /// Evaluate through binary series and parallel products.
    pub fn eval<T: Clone>(
        &self,
        inputs: &[T],
        series: &dyn Fn(&T, &T) -> Result<T>,
        parallel: &dyn Fn(&T, &T) -> Result<T>,
        br: Bracketing,
    ) -> Result<T> {
        let fold = |c: &[SpTree], op: &dyn Fn(&T, &T) -> Result<T>| -> Result<T> {
            let vals: Vec<T> = c.iter().map(|t| t.eval(inputs, series, parallel, br)).collect::<Result<_>>()?;
            match br {
                Bracketing::Left => {
                    let mut acc = vals[0].clone();
                    for v in &vals[1..] {
                        acc = op(&acc, v)?;
                    }
                    Ok(acc)
                }
                Bracketing::Right => {
                    let mut acc = vals[vals.len() - 1].clone();
                    for v in vals[..vals.len() - 1].iter().rev() {
                        acc = op(v, &acc)?;
                    }
                    Ok(acc)
                }
            }
        };
        match self {
            SpTree::Leaf(i) => Ok(inputs[*i].clone()),
            SpTree::Series(c) => fold(c, series),
            SpTree::Parallel(c) => fold(c, parallel),
        }
    }
}
