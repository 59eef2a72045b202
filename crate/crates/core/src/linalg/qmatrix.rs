//! Dense matrices over the rationals: RREF, kernels, solving, quotient spaces.

use super::{qone, qzero, QVector, Rational};
use num::Zero;
use std::fmt;
use std::ops::{Add, Mul, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![qzero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = qone();
        }
        m
    }

    pub fn from_rows(rows: Vec<QVector>) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        QMatrix {
            rows: nr,
            cols: nc,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        QMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul_vec(&self, v: &[Rational]) -> QVector {
        assert_eq!(v.len(), self.cols, "mul_vec dimension");
        (0..self.rows)
            .map(|i| {
                let mut acc = qzero();
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

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let v = &m[(i, j)] - &f * &m[(r, j)];
                        m[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                qone()
            } else {
                qzero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots != (0..n).collect::<Vec<_>>() {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// One exact solution of `self * x = b`, or `None` when inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[Rational]) -> Option<QVector> {
        assert_eq!(b.len(), self.rows, "solve dimension");
        let mut aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        aug = aug.rref().0;
        let mut x = vec![qzero(); self.cols];
        for i in 0..self.rows {
            let Some(lead) = (0..=self.cols).find(|&j| !aug[(i, j)].is_zero()) else {
                continue;
            };
            if lead == self.cols {
                return None; // row (0 ... 0 | nonzero)
            }
            // pivot coefficient is 1; free columns contribute 0
            x[lead] = aug[(i, self.cols)].clone();
        }
        Some(x)
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "matmul dimension");
        QMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = qzero();
            for k in 0..self.cols {
                if !self[(i, k)].is_zero() && !rhs[(k, j)].is_zero() {
                    acc += &self[(i, k)] * &rhs[(k, j)];
                }
            }
            acc
        })
    }
}

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(super::rational_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Basis of the right null space of `m`.
pub fn kernel_basis(m: &QMatrix) -> Vec<QVector> {
    let (r, pivots) = m.rref();
    let mut basis = Vec::new();
    for free in (0..m.cols()).filter(|c| !pivots.contains(c)) {
        let mut v = vec![qzero(); m.cols()];
        v[free] = qone();
        for (k, &p) in pivots.iter().enumerate() {
            v[p] = -r[(k, free)].clone();
        }
        basis.push(v);
    }
    basis
}

/// Quotient of the ambient space by the span of `subspace_gens`.
///
/// Returns `(projection, section)`: the projection has full row rank
/// `ambient - dim span`, annihilates exactly the span, and
/// `projection * section` is the identity on the quotient. The quotient
/// basis is the RREF complement (non-pivot coordinates), so results are
/// deterministic.
pub fn quotient_space(ambient_dim: usize, subspace_gens: &[QVector]) -> (QMatrix, QMatrix) {
    for g in subspace_gens {
        assert_eq!(g.len(), ambient_dim, "generator outside ambient space");
    }
    if subspace_gens.is_empty() {
        return (
            QMatrix::identity(ambient_dim),
            QMatrix::identity(ambient_dim),
        );
    }
    let gens = QMatrix::from_rows(subspace_gens.to_vec());
    let (r, pivots) = gens.rref();
    let free: Vec<usize> = (0..ambient_dim).filter(|c| !pivots.contains(c)).collect();
    let q = free.len();
    let mut projection = QMatrix::zero(q, ambient_dim);
    for (a, &fc) in free.iter().enumerate() {
        projection[(a, fc)] = qone();
        // a pivot coordinate e_p is congruent to -sum_j r[k][j] e_j over free j
        for (k, &p) in pivots.iter().enumerate() {
            projection[(a, p)] = -r[(k, fc)].clone();
        }
    }
    let mut section = QMatrix::zero(ambient_dim, q);
    for (a, &fc) in free.iter().enumerate() {
        section[(fc, a)] = qone();
    }
    (projection, section)
}

#[cfg(test)]
mod tests {
    use super::super::{is_zero_vec, rat};
    use super::*;

    fn qm(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_proportional_rows() {
        let m = qm(&[&[1, 2], &[2, 4]]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0]);
        assert_eq!(r, qm(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_identity_fixed() {
        let m = QMatrix::identity(3);
        let (r, pivots) = m.rref();
        assert_eq!(r, QMatrix::identity(3));
        assert_eq!(pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_zero_matrix() {
        let m = qm(&[&[0, 0]]);
        let (r, pivots) = m.rref();
        assert_eq!(r, m);
        assert!(pivots.is_empty());
    }

    #[test]
    fn rref_idempotent_and_rank_transpose() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let (r, p) = m.rref();
        let (r2, p2) = r.rref();
        assert_eq!(r, r2);
        assert_eq!(p, p2);
        assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kernel_simple() {
        let m = qm(&[&[1, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k, vec![vec![rat(-1), rat(1)]]);
        assert!(kernel_basis(&QMatrix::identity(4)).is_empty());
    }

    #[test]
    fn kernel_rank_one() {
        // oracle: every kernel vector is annihilated and the count matches
        // cols - rank computed from the RREF
        let m = qm(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 3 - m.rank());
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_zero_vec(&m.mul_vec(v)));
        }
        // independence
        assert_eq!(QMatrix::from_rows(k).rank(), 2);
    }

    #[test]
    fn quotient_line_in_plane() {
        let gens = vec![vec![rat(1), rat(-1)]];
        let (p, s) = quotient_space(2, &gens);
        assert_eq!(p.rows(), 1);
        assert_eq!(&p * &s, QMatrix::identity(1));
        assert_eq!(p.mul_vec(&[rat(1), rat(0)]), p.mul_vec(&[rat(0), rat(1)]));
        assert!(is_zero_vec(&p.mul_vec(&gens[0])));
    }

    #[test]
    fn quotient_no_gens_is_identity() {
        let (p, s) = quotient_space(3, &[]);
        assert_eq!(p, QMatrix::identity(3));
        assert_eq!(s, QMatrix::identity(3));
    }

    #[test]
    fn quotient_codim_one() {
        // ambient 4, three independent generators: quotient dim 1,
        // annihilation checked by direct multiplication
        let gens = vec![
            vec![rat(1), rat(0), rat(0), rat(1)],
            vec![rat(0), rat(1), rat(0), rat(2)],
            vec![rat(0), rat(0), rat(1), rat(3)],
        ];
        let (p, s) = quotient_space(4, &gens);
        assert_eq!(p.rows(), 1);
        assert_eq!(&p * &s, QMatrix::identity(1));
        for g in &gens {
            assert!(is_zero_vec(&p.mul_vec(g)));
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = qm(&[&[1, 1], &[0, 1]]);
        let x = m.solve(&[rat(3), rat(1)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![rat(3), rat(1)]);
        let sing = qm(&[&[1, 1], &[1, 1]]);
        assert!(sing.solve(&[rat(0), rat(1)]).is_none());
        let under = qm(&[&[1, 1]]);
        let x = under.solve(&[rat(5)]).unwrap();
        assert_eq!(under.mul_vec(&x), vec![rat(5)]);
    }
}
