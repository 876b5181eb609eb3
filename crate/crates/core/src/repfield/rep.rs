use super::field::{reduce_mod, rref_pivots, subspaces, Mat};
use crate::error::{Error, Result};
use crate::quiver::{DimVec, Quiver};

/// A representation over `F_p`: one space per vertex, one matrix per arrow
/// (shape `dim(target) x dim(source)`, acting on column vectors).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rep {
    p: u32,
    dims: Vec<usize>,
    arrows: Vec<(usize, usize)>,
    maps: Vec<Mat>,
}

/// A subrepresentation given by one RREF row basis per vertex.
pub type Subspaces = Vec<Mat>;

impl Rep {
    pub fn new(p: u32, dims: Vec<usize>, arrows: Vec<(usize, usize)>, maps: Vec<Mat>) -> Result<Self> {
        if maps.len() != arrows.len() {
            return Err(Error::DimensionMismatch { expected: arrows.len(), found: maps.len() });
        }
        for (&(s, t), m) in arrows.iter().zip(&maps) {
            if s >= dims.len() || t >= dims.len() {
                return Err(Error::DimensionMismatch { expected: dims.len(), found: s.max(t) + 1 });
            }
            if m.rows != dims[t] || m.cols != dims[s] {
                return Err(Error::DimensionMismatch { expected: dims[t] * dims[s], found: m.rows * m.cols });
            }
            if m.data.iter().any(|&x| x >= p) {
                return Err(Error::Domain(format!("matrix entry not reduced mod {p}")));
            }
        }
        Ok(Rep { p, dims, arrows, maps })
    }

    pub fn for_quiver(q: &Quiver, p: u32, dims: &DimVec, maps: Vec<Mat>) -> Result<Self> {
        if dims.len() != q.vertex_count() || !dims.is_nonneg() {
            return Err(Error::DimensionMismatch { expected: q.vertex_count(), found: dims.len() });
        }
        Self::new(p, dims.0.iter().map(|&x| x as usize).collect(), q.arrows().to_vec(), maps)
    }

    pub fn zero_maps(q: &Quiver, p: u32, dims: &DimVec) -> Self {
        let maps = q.arrows().iter().map(|&(s, t)| Mat::zero(dims.get(t), dims.get(s))).collect();
        Self::for_quiver(q, p, dims, maps).expect("zero maps have matching shapes")
    }

    /// The simple representation at vertex `i`.
    pub fn simple(q: &Quiver, p: u32, i: usize) -> Self {
        Self::zero_maps(q, p, &DimVec::unit(q.vertex_count(), i))
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dimvec(&self) -> DimVec {
        DimVec(self.dims.iter().map(|&x| x as i64).collect())
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn maps(&self) -> &[Mat] {
        &self.maps
    }

    pub fn vertex_count(&self) -> usize {
        self.dims.len()
    }

    fn compatible(&self, o: &Rep) {
        assert!(self.p == o.p && self.arrows == o.arrows, "representations of different quivers or fields");
    }

    pub fn direct_sum(&self, o: &Rep) -> Rep {
        self.compatible(o);
        let dims: Vec<usize> = self.dims.iter().zip(&o.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .arrows
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                let mut m = Mat::zero(dims[t], dims[s]);
                let (a, b) = (&self.maps[k], &o.maps[k]);
                for i in 0..a.rows {
                    for j in 0..a.cols {
                        m.set(i, j, a.get(i, j));
                    }
                }
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        m.set(a.rows + i, a.cols + j, b.get(i, j));
                    }
                }
                m
            })
            .collect();
        Rep { p: self.p, dims, arrows: self.arrows.clone(), maps }
    }

    /// Offsets of the per-vertex blocks of unknowns `f_v : X_v -> Y_v`.
    fn hom_offsets(x: &Rep, y: &Rep) -> Vec<usize> {
        let mut off = Vec::with_capacity(x.dims.len() + 1);
        let mut acc = 0;
        for v in 0..x.dims.len() {
            off.push(acc);
            acc += y.dims[v] * x.dims[v];
        }
        off.push(acc);
        off
    }

    /// Matrix of the map `(f_v) -> (Y_a f_s - f_t X_a)_a` from
    /// `⊕_v Hom(X_v, Y_v)` to `⊕_a Hom(X_s, Y_t)`; its kernel is `Hom(X, Y)`.
    pub fn hom_system(x: &Rep, y: &Rep) -> Mat {
        x.compatible(y);
        let p = x.p;
        let off = Self::hom_offsets(x, y);
        let cols = *off.last().unwrap();
        let rows: usize = x.arrows.iter().map(|&(s, t)| y.dims[t] * x.dims[s]).sum();
        let mut m = Mat::zero(rows, cols);
        let mut r0 = 0;
        for (k, &(s, t)) in x.arrows.iter().enumerate() {
            let (xa, ya) = (&x.maps[k], &y.maps[k]);
            let (yt, xs, ys, xt) = (y.dims[t], x.dims[s], y.dims[s], x.dims[t]);
            for i in 0..yt {
                for j in 0..xs {
                    let row = r0 + i * xs + j;
                    // (Y_a f_s)[i][j] = sum_k Y_a[i][k] f_s[k][j]
                    for kk in 0..ys {
                        let c = ya.get(i, kk);
                        if c != 0 {
                            let col = off[s] + kk * xs + j;
                            m.set(row, col, (m.get(row, col) + c) % p);
                        }
                    }
                    // -(f_t X_a)[i][j] = -sum_l f_t[i][l] X_a[l][j]
                    for l in 0..xt {
                        let c = xa.get(l, j);
                        if c != 0 {
                            let col = off[t] + i * xt + l;
                            m.set(row, col, (m.get(row, col) + p - c) % p);
                        }
                    }
                }
            }
            r0 += yt * xs;
        }
        m
    }

    /// A basis of `Hom(X, Y)`, each element one matrix per vertex.
    pub fn hom_basis(x: &Rep, y: &Rep) -> Vec<Vec<Mat>> {
        let off = Self::hom_offsets(x, y);
        Self::hom_system(x, y)
            .nullspace(x.p)
            .into_iter()
            .map(|v| {
                (0..x.dims.len())
                    .map(|u| Mat::from_rows(y.dims[u], x.dims[u], v[off[u]..off[u + 1]].to_vec()))
                    .collect()
            })
            .collect()
    }

    pub fn hom_dim(x: &Rep, y: &Rep) -> usize {
        let m = Self::hom_system(x, y);
        m.cols - m.rank(x.p)
    }

    /// Restrict to the subrepresentation spanned by the columns of `bases[v]`
    /// (each of full column rank); panics if the span is not invariant.
    pub fn restrict(&self, bases: &[Mat]) -> Rep {
        let maps = self
            .arrows
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                let img = self.maps[k].mul(&bases[s], self.p);
                bases[t].solve_full_rank(&img, self.p).expect("restriction to a non-invariant subspace")
            })
            .collect();
        Rep { p: self.p, dims: bases.iter().map(|b| b.cols).collect(), arrows: self.arrows.clone(), maps }
    }

    /// Is the tuple of row spaces `u` arrow-invariant?
    pub fn is_invariant(&self, u: &[Mat]) -> bool {
        self.arrows.iter().enumerate().all(|(k, &(s, t))| self.arrow_invariant(k, &u[s], &u[t]))
    }

    fn arrow_invariant(&self, k: usize, us: &Mat, ut: &Mat) -> bool {
        if us.rows == 0 {
            return true;
        }
        if ut.rows == ut.cols {
            return true;
        }
        let piv = rref_pivots(ut);
        (0..us.rows).all(|r| {
            let img = self.maps[k].mul_vec(us.row(r), self.p);
            reduce_mod(&img, ut, &piv, self.p).iter().all(|&x| x == 0)
        })
    }

    /// The subrepresentation on an invariant tuple of RREF row bases.
    pub fn sub(&self, u: &[Mat]) -> Rep {
        let maps = self
            .arrows
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                let piv = rref_pivots(&u[t]);
                let mut m = Mat::zero(u[t].rows, u[s].rows);
                for r in 0..u[s].rows {
                    let img = self.maps[k].mul_vec(u[s].row(r), self.p);
                    for (i, &c) in piv.iter().enumerate() {
                        m.set(i, r, img[c]);
                    }
                }
                m
            })
            .collect();
        Rep { p: self.p, dims: u.iter().map(|m| m.rows).collect(), arrows: self.arrows.clone(), maps }
    }

    /// The quotient by an invariant tuple of RREF row bases, with basis the
    /// standard vectors at non-pivot positions.
    pub fn quotient(&self, u: &[Mat]) -> Rep {
        let pivs: Vec<Vec<usize>> = u.iter().map(rref_pivots).collect();
        let keep: Vec<Vec<usize>> =
            (0..self.dims.len()).map(|v| (0..self.dims[v]).filter(|c| !pivs[v].contains(c)).collect()).collect();
        let maps = self
            .arrows
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                let mut m = Mat::zero(keep[t].len(), keep[s].len());
                for (jj, &j) in keep[s].iter().enumerate() {
                    let img = reduce_mod(&self.maps[k].col(j), &u[t], &pivs[t], self.p);
                    for (ii, &i) in keep[t].iter().enumerate() {
                        m.set(ii, jj, img[i]);
                    }
                }
                m
            })
            .collect();
        Rep { p: self.p, dims: keep.iter().map(|k| k.len()).collect(), arrows: self.arrows.clone(), maps }
    }

    /// The pair `(U ⊆ Z)` as a representation of the doubled quiver with
    /// vertices `v` (for `U`) and `n + v` (for `Z`) and inclusion arrows
    /// `v -> n + v`.
    pub fn pair_rep(&self, u: &[Mat]) -> Rep {
        let n = self.dims.len();
        let s = self.sub(u);
        let mut arrows = Vec::new();
        let mut maps = Vec::new();
        for (k, &(a, b)) in self.arrows.iter().enumerate() {
            arrows.push((a, b));
            maps.push(s.maps[k].clone());
        }
        for (k, &(a, b)) in self.arrows.iter().enumerate() {
            arrows.push((n + a, n + b));
            maps.push(self.maps[k].clone());
        }
        for (v, uv) in u.iter().enumerate() {
            arrows.push((v, n + v));
            maps.push(uv.transpose());
        }
        let mut dims = s.dims.clone();
        dims.extend(self.dims.iter().copied());
        Rep { p: self.p, dims, arrows, maps }
    }

    /// Every invariant subspace tuple of dimension vector `d`.
    pub fn subreps(&self, d: &DimVec, budget: u64) -> Result<Vec<Subspaces>> {
        let n = self.dims.len();
        if d.len() != n || !d.le(&self.dimvec()) || !d.is_nonneg() {
            return Ok(Vec::new());
        }
        let choices: Vec<Vec<Mat>> = (0..n).map(|v| subspaces(self.dims[v], d.get(v), self.p)).collect();
        let mut out = Vec::new();
        let mut cur: Vec<Mat> = Vec::with_capacity(n);
        let mut visited = 0u64;
        self.subrep_dfs(&choices, &mut cur, &mut out, &mut visited, budget)?;
        Ok(out)
    }

    fn subrep_dfs(
        &self,
        choices: &[Vec<Mat>],
        cur: &mut Vec<Mat>,
        out: &mut Vec<Subspaces>,
        visited: &mut u64,
        budget: u64,
    ) -> Result<()> {
        let v = cur.len();
        if v == choices.len() {
            out.push(cur.clone());
            return Ok(());
        }
        for u in &choices[v] {
            *visited += 1;
            if *visited > budget {
                return Err(Error::Budget(format!("subrepresentation search exceeded {budget} nodes")));
            }
            cur.push(u.clone());
            let ok = self.arrows.iter().enumerate().all(|(k, &(s, t))| {
                if s.max(t) != v {
                    return true;
                }
                self.arrow_invariant(k, &cur[s], &cur[t])
            });
            if ok {
                self.subrep_dfs(choices, cur, out, visited, budget)?;
            }
            cur.pop();
        }
        Ok(())
    }

    /// Every subrepresentation, of every dimension vector.
    pub fn all_subreps(&self, budget: u64) -> Result<Vec<Subspaces>> {
        let mut out = Vec::new();
        for d in self.dimvec().below() {
            out.extend(self.subreps(&d, budget)?);
        }
        Ok(out)
    }

    /// Apply an endomorphism-like tuple of matrices and test the
    /// intertwining relations.
    pub fn is_hom_to(&self, y: &Rep, f: &[Mat]) -> bool {
        self.arrows
            .iter()
            .enumerate()
            .all(|(k, &(s, t))| y.maps[k].mul(&f[s], self.p) == f[t].mul(&self.maps[k], self.p))
    }
}

/// Does `u ⊆ w` hold vertexwise (row spaces in RREF)?
pub fn contained_in(u: &[Mat], w: &[Mat], p: u32) -> bool {
    u.iter().zip(w).all(|(uv, wv)| {
        if uv.rows == 0 {
            return true;
        }
        if wv.rows == wv.cols {
            return true;
        }
        let piv = rref_pivots(wv);
        (0..uv.rows).all(|r| reduce_mod(uv.row(r), wv, &piv, p).iter().all(|&x| x == 0))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::linear(2)
    }

    fn proj(p: u32) -> Rep {
        Rep::for_quiver(&a2(), p, &DimVec(vec![1, 1]), vec![Mat::from_rows(1, 1, vec![1])]).unwrap()
    }

    #[test]
    fn hom_dims_on_a2() {
        let q = a2();
        for p in [2, 3, 5] {
            let (v1, v2) = (Rep::simple(&q, p, 0), Rep::simple(&q, p, 1));
            assert_eq!(Rep::hom_dim(&v1, &v2), 0);
            assert_eq!(Rep::hom_dim(&v1, &v1), 1);
            assert_eq!(Rep::hom_dim(&proj(p), &v2), 0);
            assert_eq!(Rep::hom_dim(&v2, &proj(p)), 1);
            assert_eq!(Rep::hom_dim(&proj(p), &v1), 1);
        }
    }

    #[test]
    fn subreps_of_projective() {
        let z = proj(3);
        assert_eq!(z.subreps(&DimVec(vec![0, 1]), 1 << 20).unwrap().len(), 1);
        assert_eq!(z.subreps(&DimVec(vec![1, 0]), 1 << 20).unwrap().len(), 0);
        assert_eq!(z.all_subreps(1 << 20).unwrap().len(), 3);
    }

    #[test]
    fn quotient_and_sub_shapes() {
        let z = proj(5);
        let u = z.subreps(&DimVec(vec![0, 1]), 1 << 20).unwrap().remove(0);
        assert_eq!(z.sub(&u).dims(), &[0, 1]);
        assert_eq!(z.quotient(&u).dims(), &[1, 0]);
        let pr = z.pair_rep(&u);
        assert_eq!(pr.dims(), &[0, 1, 1, 1]);
    }
}
