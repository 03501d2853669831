//! Dense matrices over exact rationals.
//!
//! Row-major storage. The Kronecker product uses the composite-index
//! convention `(i*dim(B)+k, j*dim(B)+l) -> A[i,j]*B[k,l]`, fixed once for the
//! whole crate so that tensor-leg order always matches left-to-right factor
//! order.

use super::scalar::Rat;
use crate::error::Error;
use crate::Result;
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn scalar(n: usize, s: &Rat) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = s.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Matrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor from integer entries.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn scale(&self, s: &Rat) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// Largest absolute numerator over all entries; 0 for the zero matrix.
    /// Used in residual reports.
    pub fn max_abs_numer(&self) -> BigInt {
        let mut best = BigInt::zero();
        for x in &self.data {
            let a = x.numer().magnitude();
            if a > best.magnitude() {
                best = BigInt::from(a.clone());
            }
        }
        best
    }

    /// Kronecker product in the fixed row-major convention.
    pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
        let mut m = Matrix::zero(a.rows * b.rows, a.cols * b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                if a[(i, j)].is_zero() {
                    continue;
                }
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        if b[(k, l)].is_zero() {
                            continue;
                        }
                        m[(i * b.rows + k, j * b.cols + l)] = &a[(i, j)] * &b[(k, l)];
                    }
                }
            }
        }
        m
    }

    /// Matrix power by repeated multiplication (exponents stay small here).
    pub fn pow(&self, e: usize) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
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
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let t = &m[(r, j)] * &f;
                        m[(i, j)] = &m[(i, j)] - &t;
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

    /// Nonzero rows of the RREF: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Matrix {
        let (m, pivots) = self.rref();
        Matrix::from_rows((0..pivots.len()).map(|i| m.row(i).to_vec()).collect())
    }

    /// Basis of `{ w : w * self = 0 }` (left null space), rows of the result.
    pub fn row_kernel(&self) -> Matrix {
        let t = self.transpose();
        let (r, pivots) = t.rref();
        let free: Vec<usize> = (0..t.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::new();
        for &fc in &free {
            let mut v = vec![Rat::zero(); t.cols];
            v[fc] = Rat::one();
            for (pi, &pc) in pivots.iter().enumerate() {
                v[pc] = -r[(pi, fc)].clone();
            }
            rows.push(v);
        }
        if rows.is_empty() {
            Matrix::zero(0, self.rows)
        } else {
            Matrix::from_rows(rows)
        }
    }

    /// Exact inverse; `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rat::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// Solves `self * X = B` exactly; `None` if inconsistent or underdetermined.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows);
        let n = self.cols;
        let mut aug = Matrix::zero(self.rows, n + b.cols);
        for i in 0..self.rows {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..b.cols {
                aug[(i, n + j)] = b[(i, j)].clone();
            }
        }
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return None; // inconsistent
        }
        if pivots.len() < n {
            return None; // underdetermined; callers here always want unique solutions
        }
        Some(Matrix::from_fn(n, b.cols, |i, j| r[(i, n + j)].clone()))
    }

    /// Coordinates of the row vector `w` in the span of `basis` rows, if any.
    pub fn row_coordinates(basis: &Matrix, w: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(basis.cols(), w.len());
        let bt = basis.transpose();
        let rhs = Matrix::from_fn(w.len(), 1, |i, _| w[i].clone());
        // Solve basis^T * c = w^T; basis rows are independent in all call sites.
        let n = bt.cols;
        let mut aug = Matrix::zero(bt.rows, n + 1);
        for i in 0..bt.rows {
            for j in 0..n {
                aug[(i, j)] = bt[(i, j)].clone();
            }
            aug[(i, n)] = rhs[(i, 0)].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut c = vec![Rat::zero(); n];
        for (pi, &pc) in pivots.iter().enumerate() {
            c[pc] = r[(pi, n)].clone();
        }
        Some(c)
    }

    /// Row vector times matrix.
    pub fn apply_row(w: &[Rat], m: &Matrix) -> Vec<Rat> {
        assert_eq!(w.len(), m.rows);
        let mut out = vec![Rat::zero(); m.cols];
        for (i, wi) in w.iter().enumerate() {
            if wi.is_zero() {
                continue;
            }
            for j in 0..m.cols {
                if !m[(i, j)].is_zero() {
                    let t = wi * &m[(i, j)];
                    out[j] += &t;
                }
            }
        }
        out
    }

    /// Stacks the rows of `a` on top of the rows of `b`.
    pub fn vstack(a: &Matrix, b: &Matrix) -> Matrix {
        assert_eq!(a.cols, b.cols);
        let mut data = a.data.clone();
        data.extend(b.data.iter().cloned());
        Matrix {
            rows: a.rows + b.rows,
            cols: a.cols,
            data,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Checks both shape and exact entrywise equality against an identity
    /// multiple.
    pub fn is_scalar_multiple_of_identity(&self) -> Option<Rat> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let s = self[(0, 0)].clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let expect = if i == j { s.clone() } else { Rat::zero() };
                if self[(i, j)] != expect {
                    return None;
                }
            }
        }
        Some(s)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        let c = self.cols;
        &mut self.data[i * c + j]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product shape mismatch {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let t = a * b;
                        out[(i, j)] += &t;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shape guard used by operations whose contract demands a square input.
pub(crate) fn require_square(m: &Matrix) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!(
            "expected square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn diag(entries: &[Rat]) -> Matrix {
        let n = entries.len();
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                Rat::zero()
            }
        })
    }

    #[test]
    fn kron_identities() {
        let i2 = Matrix::identity(2);
        assert_eq!(Matrix::kron(&i2, &i2), Matrix::identity(4));
        let a = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(Matrix::kron(&a, &Matrix::identity(1)), a);
    }

    #[test]
    fn kron_diag_example() {
        // kron(diag(q, q^-1), diag(q^-1, q)) = diag(1, q^2, q^-2, 1), by hand
        let q = Rat::new(3, 2);
        let a = diag(&[q.clone(), q.recip()]);
        let b = diag(&[q.recip(), q.clone()]);
        let expect = diag(&[Rat::one(), q.pow(2), q.pow(-2), Rat::one()]);
        assert_eq!(Matrix::kron(&a, &b), expect);
    }

    #[test]
    fn rref_inverse_solve() {
        let a = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2));
        let b = Matrix::from_i64(&[&[3], &[2]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(&a * &x, b);
        let sing = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
        assert_eq!(sing.rank(), 1);
    }

    #[test]
    fn row_kernel_annihilates() {
        let a = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let k = a.row_kernel();
        assert_eq!(k.rows(), 1);
        for i in 0..k.rows() {
            let w = Matrix::apply_row(k.row(i), &a);
            assert!(w.iter().all(Rat::is_zero));
        }
    }

    #[test]
    fn row_coordinates_roundtrip() {
        let basis = Matrix::from_i64(&[&[1, 0, 1], &[0, 1, 2]]);
        let w = vec![Rat::from_int(3), Rat::from_int(-1), Rat::from_int(1)];
        let c = Matrix::row_coordinates(&basis, &w).unwrap();
        let back = Matrix::apply_row(&c, &basis);
        assert_eq!(back, w);
        let outside = vec![Rat::zero(), Rat::zero(), Rat::one()];
        assert!(Matrix::row_coordinates(&basis, &outside).is_none());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn kron_associativity(
            a in proptest::collection::vec(-5i64..5, 4),
            b in proptest::collection::vec(-5i64..5, 4),
            c in proptest::collection::vec(-5i64..5, 4),
        ) {
            let m = |v: &[i64]| Matrix::from_fn(2, 2, |i, j| Rat::from_int(v[2*i+j]));
            let (a, b, c) = (m(&a), m(&b), m(&c));
            prop_assert_eq!(
                Matrix::kron(&Matrix::kron(&a, &b), &c),
                Matrix::kron(&a, &Matrix::kron(&b, &c))
            );
        }
    }
}
