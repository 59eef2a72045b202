//! Integer matrices and the Smith normal form.

use super::ZVector;
use num::{BigInt, Integer, Signed, Zero};
use std::fmt;
use std::ops::Mul;

#[derive(Clone, PartialEq, Eq)]
pub struct ZMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl ZMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ZMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::from(1);
        }
        m
    }

    pub fn from_rows(rows: Vec<ZVector>) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        ZMatrix {
            rows: nr,
            cols: nc,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds the matrix whose j-th column is `cols[j]`.
    pub fn from_cols(cols: Vec<ZVector>) -> Self {
        let nc = cols.len();
        let nr = cols.first().map_or(0, Vec::len);
        assert!(cols.iter().all(|c| c.len() == nr), "ragged columns");
        let mut m = Self::zero(nr, nc);
        for (j, c) in cols.into_iter().enumerate() {
            for (i, v) in c.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ZMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn col(&self, j: usize) -> ZVector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> ZVector {
        assert_eq!(v.len(), self.cols, "mul_vec dimension");
        (0..self.rows)
            .map(|i| {
                let mut acc = BigInt::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc += &self[(i, j)] * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row a += q * row b
    fn add_row(&mut self, a: usize, b: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(a, j)] + q * &self[(b, j)];
            self[(a, j)] = v;
        }
    }

    /// col a += q * col b
    fn add_col(&mut self, a: usize, b: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, a)] + q * &self[(i, b)];
            self[(i, a)] = v;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self[(a, j)].clone();
            self[(a, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for ZMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ZMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &ZMatrix {
    type Output = ZMatrix;
    fn mul(self, rhs: &ZMatrix) -> ZMatrix {
        assert_eq!(self.cols, rhs.rows, "matmul dimension");
        ZMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = BigInt::zero();
            for k in 0..self.cols {
                if !self[(i, k)].is_zero() && !rhs[(k, j)].is_zero() {
                    acc += &self[(i, k)] * &rhs[(k, j)];
                }
            }
            acc
        })
    }
}

impl fmt::Debug for ZMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ZMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

pub struct SmithDecomposition {
    pub u: ZMatrix,
    pub d: ZMatrix,
    pub v: ZMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries of D padded with zeros up to `min(rows, cols)`.
    pub fn diagonal(&self) -> ZVector {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Smith normal form: U * a * V = D with U, V unimodular, D diagonal with
/// non-negative entries satisfying d_i | d_{i+1}.
///
/// Pivoting always selects a minimal-absolute-value nonzero entry, which
/// keeps coefficient growth modest at the problem sizes this crate targets.
pub fn smith_normal_form(a: &ZMatrix) -> SmithDecomposition {
    let (nr, nc) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = ZMatrix::identity(nr);
    let mut v = ZMatrix::identity(nc);

    for t in 0..nr.min(nc) {
        'pivot: loop {
            // minimal |entry| != 0 in the trailing submatrix
            let mut best: Option<(usize, usize)> = None;
            for i in t..nr {
                for j in t..nc {
                    if !d[(i, j)].is_zero()
                        && best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish_signs(u, d, v, t);
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut dirty = false;
            for i in t + 1..nr {
                if !d[(i, t)].is_zero() {
                    let q = -div_round(&d[(i, t)], &d[(t, t)]);
                    d.add_row(i, t, &q);
                    u.add_row(i, t, &q);
                    dirty |= !d[(i, t)].is_zero();
                }
            }
            for j in t + 1..nc {
                if !d[(t, j)].is_zero() {
                    let q = -div_round(&d[(t, j)], &d[(t, t)]);
                    d.add_col(j, t, &q);
                    v.add_col(j, t, &q);
                    dirty |= !d[(t, j)].is_zero();
                }
            }
            if dirty {
                continue 'pivot;
            }
            // enforce divisibility of the trailing block by the pivot
            let p = d[(t, t)].clone();
            for i in t + 1..nr {
                for j in t + 1..nc {
                    if !(&d[(i, j)] % &p).is_zero() {
                        let one = BigInt::from(1);
                        d.add_row(t, i, &one);
                        u.add_row(t, i, &one);
                        continue 'pivot;
                    }
                }
            }
            break;
        }
    }
    let t = nr.min(nc);
    finish_signs(u, d, v, t)
}

fn finish_signs(mut u: ZMatrix, mut d: ZMatrix, v: ZMatrix, upto: usize) -> SmithDecomposition {
    for i in 0..upto.min(d.rows()).min(d.cols()) {
        if d[(i, i)].is_negative() {
            d.negate_row(i);
            u.negate_row(i);
        }
    }
    SmithDecomposition { u, d, v }
}

/// Nearest-integer division, so remainders satisfy |r| <= |b|/2.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(b);
    if r.abs() * 2 > b.abs() {
        if (a.is_negative()) == (b.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// Lattice basis of `{ v : map * v = 0 }` over the integers.
///
/// The basis columns come from the unimodular V of the Smith form, so they
/// generate the full (saturated) kernel lattice.
pub fn abelian_kernel(map: &ZMatrix) -> Vec<ZVector> {
    let snf = smith_normal_form(map);
    let rank = snf.rank();
    (rank..map.cols()).map(|j| snf.v.col(j)).collect()
}
