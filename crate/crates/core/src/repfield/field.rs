//! Dense matrices over a small prime field `F_p` (p < 2^16).

/// Row-major matrix with entries reduced mod the prime carried by the caller.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u32>,
}

pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Mat { rows, cols, data }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, o: &Mat, p: u32) -> Mat {
        assert_eq!(self.cols, o.rows, "matrix shape mismatch");
        let mut m = Mat::zero(self.rows, o.cols);
        let p64 = p as u64;
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..o.cols {
                    let idx = i * o.cols + j;
                    m.data[idx] = ((m.data[idx] as u64 + a * o.get(k, j) as u64) % p64) as u32;
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[u32], p: u32) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                for (k, &x) in v.iter().enumerate() {
                    acc += self.get(i, k) as u64 * x as u64;
                }
                (acc % p as u64) as u32
            })
            .collect()
    }

    pub fn add(&self, o: &Mat, p: u32) -> Mat {
        assert!(self.rows == o.rows && self.cols == o.cols);
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| (a + b) % p).collect(),
        }
    }

    pub fn sub(&self, o: &Mat, p: u32) -> Mat {
        assert!(self.rows == o.rows && self.cols == o.cols);
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| (a + p - b) % p).collect(),
        }
    }

    pub fn scale(&self, s: u32, p: u32) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| ((a as u64 * s as u64) % p as u64) as u32).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn pow(&self, e: usize, p: u32) -> Mat {
        let mut acc = Mat::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self, p);
        }
        acc
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref_in_place(&mut self, p: u32) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        let p64 = p as u64;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(piv) = (r..self.rows).find(|&i| self.get(i, c) != 0) else { continue };
            if piv != r {
                for j in 0..self.cols {
                    self.data.swap(piv * self.cols + j, r * self.cols + j);
                }
            }
            let inv = inv_mod(self.get(r, c), p) as u64;
            for j in c..self.cols {
                let idx = r * self.cols + j;
                self.data[idx] = ((self.data[idx] as u64 * inv) % p64) as u32;
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c) as u64;
                if f == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let v = self.get(r, j) as u64;
                    if v != 0 {
                        let idx = i * self.cols + j;
                        self.data[idx] = ((self.data[idx] as u64 + (p64 - f) * v) % p64) as u32;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self, p: u32) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let piv = m.rref_in_place(p);
        (m, piv)
    }

    pub fn rank(&self, p: u32) -> usize {
        self.rref(p).1.len()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn nullspace(&self, p: u32) -> Vec<Vec<u32>> {
        let (r, piv) = self.rref(p);
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u32; self.cols];
                v[f] = 1;
                for (i, &pc) in piv.iter().enumerate() {
                    v[pc] = (p - r.get(i, f)) % p;
                }
                v
            })
            .collect()
    }

    /// Columns forming a basis of the column space, as an `rows x rank` matrix.
    pub fn column_basis(&self, p: u32) -> Mat {
        let (_, piv) = self.rref(p);
        let mut m = Mat::zero(self.rows, piv.len());
        for (k, &c) in piv.iter().enumerate() {
            for i in 0..self.rows {
                m.set(i, k, self.get(i, c));
            }
        }
        m
    }

    /// Kernel basis as the columns of a matrix.
    pub fn kernel_basis(&self, p: u32) -> Mat {
        let ns = self.nullspace(p);
        let mut m = Mat::zero(self.cols, ns.len());
        for (k, v) in ns.iter().enumerate() {
            for (i, &x) in v.iter().enumerate() {
                m.set(i, k, x);
            }
        }
        m
    }

    /// Solve `self * X = rhs` where `self` has full column rank. Returns
    /// `None` when the system is inconsistent.
    pub fn solve_full_rank(&self, rhs: &Mat, p: u32) -> Option<Mat> {
        assert_eq!(self.rows, rhs.rows);
        let k = self.cols;
        let mut aug = Mat::zero(self.rows, k + rhs.cols);
        for i in 0..self.rows {
            for j in 0..k {
                aug.set(i, j, self.get(i, j));
            }
            for j in 0..rhs.cols {
                aug.set(i, k + j, rhs.get(i, j));
            }
        }
        let piv = aug.rref_in_place(p);
        if piv.len() < k || piv[..k].iter().enumerate().any(|(i, &c)| c != i) {
            panic!("solve_full_rank: matrix is not of full column rank");
        }
        if piv.len() > k {
            return None;
        }
        let mut x = Mat::zero(k, rhs.cols);
        for i in 0..k {
            for j in 0..rhs.cols {
                x.set(i, j, aug.get(i, k + j));
            }
        }
        Some(x)
    }

    pub fn is_invertible(&self, p: u32) -> bool {
        self.rows == self.cols && self.rank(p) == self.rows
    }
}

/// Whether the affine system `a x = b` has a solution.
pub fn affine_consistent(a: &Mat, b: &[u32], p: u32) -> bool {
    assert_eq!(a.rows, b.len());
    let mut aug = Mat::zero(a.rows, a.cols + 1);
    for i in 0..a.rows {
        for j in 0..a.cols {
            aug.set(i, j, a.get(i, j));
        }
        aug.set(i, a.cols, b[i]);
    }
    let piv = aug.rref_in_place(p);
    !piv.contains(&a.cols)
}

/// `|GL(n, F_q)|` as an exact integer.
pub fn gl_order(n: usize, q: u64) -> num_bigint::BigInt {
    use num_bigint::BigInt;
    let q = BigInt::from(q);
    let qn = num_traits::pow(q.clone(), n);
    let mut acc = BigInt::from(1);
    let mut qi = BigInt::from(1);
    for _ in 0..n {
        acc *= &qn - &qi;
        qi *= &q;
    }
    acc
}

/// All subspaces of `F_p^n` of dimension `k`, each as its `k x n` reduced
/// row echelon basis, in a fixed deterministic order.
pub fn subspaces(n: usize, k: usize, p: u32) -> Vec<Mat> {
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(k);
    fn choose(start: usize, n: usize, k: usize, p: u32, pivots: &mut Vec<usize>, out: &mut Vec<Mat>) {
        if pivots.len() == k {
            let mut free = Vec::new();
            for (r, &pc) in pivots.iter().enumerate() {
                for c in pc + 1..n {
                    if !pivots.contains(&c) {
                        free.push((r, c));
                    }
                }
            }
            let total = (p as u64).pow(free.len() as u32);
            for code in 0..total {
                let mut m = Mat::zero(k, n);
                for (r, &pc) in pivots.iter().enumerate() {
                    m.set(r, pc, 1);
                }
                let mut c = code;
                for &(r, col) in &free {
                    m.set(r, col, (c % p as u64) as u32);
                    c /= p as u64;
                }
                out.push(m);
            }
            return;
        }
        for c in start..n {
            pivots.push(c);
            choose(c + 1, n, k, p, pivots, out);
            pivots.pop();
        }
    }
    choose(0, n, k, p, &mut pivots, &mut out);
    out
}

/// Reduce `v` modulo the row space of an RREF basis `u` (pivot columns
/// `piv`), returning the residue.
pub fn reduce_mod(v: &[u32], u: &Mat, piv: &[usize], p: u32) -> Vec<u32> {
    let mut w = v.to_vec();
    for (r, &c) in piv.iter().enumerate() {
        let f = w[c];
        if f != 0 {
            for (j, wj) in w.iter_mut().enumerate() {
                let x = u.get(r, j);
                if x != 0 {
                    *wj = ((*wj as u64 + (p - f) as u64 * x as u64) % p as u64) as u32;
                }
            }
        }
    }
    w
}

/// Pivot columns of a matrix already in RREF.
pub fn rref_pivots(u: &Mat) -> Vec<usize> {
    (0..u.rows).map(|r| u.row(r).iter().position(|&x| x != 0).expect("zero row in basis")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subspace_counts_are_gaussian() {
        // Gr(k, n) over F_p has (n choose k)_p points
        assert_eq!(subspaces(2, 1, 3).len(), 4);
        assert_eq!(subspaces(4, 2, 2).len(), 35);
        assert_eq!(subspaces(3, 0, 5).len(), 1);
        assert_eq!(subspaces(3, 3, 5).len(), 1);
    }

    #[test]
    fn gl_orders() {
        assert_eq!(gl_order(2, 3), 48.into());
        assert_eq!(gl_order(0, 7), 1.into());
        assert_eq!(gl_order(1, 5), 4.into());
    }

    #[test]
    fn nullspace_and_solve() {
        let p = 5;
        let a = Mat::from_rows(2, 3, vec![1, 2, 3, 2, 4, 2]);
        for v in a.nullspace(p) {
            assert!(a.mul_vec(&v, p).iter().all(|&x| x == 0));
        }
        assert_eq!(a.nullspace(p).len(), 1);
        let b = Mat::from_rows(3, 2, vec![1, 0, 0, 1, 1, 1]);
        let x = Mat::from_rows(2, 1, vec![3, 4]);
        let rhs = b.mul(&x, p);
        assert_eq!(b.solve_full_rank(&rhs, p), Some(x));
        let bad = Mat::from_rows(3, 1, vec![1, 1, 0]);
        assert_eq!(b.solve_full_rank(&bad, p), None);
    }
}
