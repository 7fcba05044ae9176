//! Dense matrices over a generic (possibly non-commutative) ring.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_traits::Zero;

use crate::ring::{ExactDiv, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = R::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// `[[a, b], [c, d]]`.
    pub fn two_by_two(a: R, b: R, c: R, d: R) -> Self {
        Self { rows: 2, cols: 2, data: vec![a, b, c, d] }
    }

    /// Diagonal matrix.
    pub fn diagonal(entries: Vec<R>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
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

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &R> {
        self.data.iter()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Keeps the listed rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self[(i, j)].clone());
            }
        }
        Self { rows: rows.len(), cols: cols.len(), data }
    }

    /// `n×n` identity with `block` placed on the diagonal at `offset`.
    pub fn embed(n: usize, offset: usize, block: &Self) -> Self {
        assert!(offset + block.rows <= n && block.is_square());
        let mut m = Self::identity(n);
        for i in 0..block.rows {
            for j in 0..block.cols {
                m[(offset + i, offset + j)] = block[(i, j)].clone();
            }
        }
        m
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    /// Multiplies every entry of row `i` on the left by `c`.
    pub fn scale_row_left(&mut self, i: usize, c: &R) {
        for j in 0..self.cols {
            self[(i, j)] = c.clone() * self[(i, j)].clone();
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    /// Matrix-vector product `M·v`.
    pub fn apply(&self, v: &[R]) -> Vec<R> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(R::zero(), |acc, (a, x)| acc + a.clone() * x.clone())
            })
            .collect()
    }
}

impl<R> Index<(usize, usize)> for Matrix<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        &self.data[i * self.cols + j]
    }
}

impl<R> IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        &mut self.data[i * self.cols + j]
    }
}

impl<'a, R: Ring> Mul<&'a Matrix<R>> for &'a Matrix<R> {
    type Output = Matrix<R>;
    fn mul(self, rhs: &'a Matrix<R>) -> Matrix<R> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let slot = &mut out[(i, j)];
                    *slot = std::mem::replace(slot, R::zero()) + a.clone() * b.clone();
                }
            }
        }
        out
    }
}

impl<R: Ring> Mul for Matrix<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

/// Determinant over a commutative domain by Bareiss' fraction-free
/// elimination: every intermediate entry is a minor of the input, and each
/// division is exact.
pub fn bareiss_det<R: ExactDiv>(m: &Matrix<R>) -> R {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return R::one();
    }
    let mut a: Vec<Vec<R>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return R::zero();
            };
            a.swap(k, p);
            negate = !negate;
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..n {
                let v = pivot.clone() * row[j].clone() - factor.clone() * pivot_row[j].clone();
                row[j] = v.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            row[k] = R::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Cofactor expansion along the first row; exponential, kept for tests and
/// tiny matrices.
pub fn laplace_det<R: Ring>(m: &Matrix<R>) -> R {
    assert!(m.is_square());
    let n = m.rows;
    if n == 0 {
        return R::one();
    }
    if n == 1 {
        return m[(0, 0)].clone();
    }
    let rest: Vec<usize> = (1..n).collect();
    let mut acc = R::zero();
    for j in 0..n {
        if m[(0, j)].is_zero() {
            continue;
        }
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let term = m[(0, j)].clone() * laplace_det(&m.submatrix(&rest, &cols));
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

impl<R: Ring + fmt::Display> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|c| c.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::ring::{rat, Rational};
    use num_bigint::BigInt;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect())
    }

    #[test]
    fn bareiss_matches_laplace() {
        let a = m(&[&[2, -1, 0, 3], &[1, 4, 2, 0], &[0, 0, 0, 5], &[3, 1, -2, 1]]);
        assert_eq!(bareiss_det(&a), laplace_det(&a));
        let b = m(&[&[0, 1, 2], &[0, 3, 4], &[5, 6, 7]]);
        assert_eq!(bareiss_det(&b), laplace_det(&b));
        assert_eq!(bareiss_det(&b), rat(-10));
    }

    #[test]
    fn singular() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(bareiss_det(&a), rat(0));
        let z = m(&[&[0, 1], &[0, 2]]);
        assert_eq!(bareiss_det(&z), rat(0));
    }

    #[test]
    fn polynomial_entries() {
        // det [[x, 1], [1, x]] = x^2 - 1 over Z[x]
        let x = Poly::new(vec![BigInt::from(0), BigInt::from(1)]);
        let one = Poly::constant(BigInt::from(1));
        let a = Matrix::two_by_two(x.clone(), one.clone(), one.clone(), x);
        let expected = Poly::new(vec![BigInt::from(-1), BigInt::from(0), BigInt::from(1)]);
        assert_eq!(bareiss_det(&a), expected);
    }

    #[test]
    fn embed_and_apply() {
        let s = m(&[&[1, 2], &[3, 4]]);
        let e = Matrix::embed(3, 1, &s);
        assert_eq!(e, m(&[&[1, 0, 0], &[0, 1, 2], &[0, 3, 4]]));
        assert_eq!(e.apply(&[rat(1), rat(1), rat(1)]), vec![rat(1), rat(3), rat(7)]);
    }
}
