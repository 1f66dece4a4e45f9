use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::Serialize;

use super::Rational;
use crate::error::{Error, Result};

/// Commutative ring element usable as a matrix entry.
///
/// `det_square` picks the determinant algorithm for the ring. The default is
/// Laplace expansion, which never divides; fields override it with
/// elimination.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn det_square(m: &Matrix<Self>) -> Self {
        det_cofactor(m)
    }
}

impl Ring for Rational {
    fn det_square(m: &Matrix<Self>) -> Self {
        det_bareiss(m)
    }
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn try_from_fn<E>(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> std::result::Result<T, E>,
    ) -> std::result::Result<Self, E> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j)?);
            }
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
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

    pub fn get(&self, i: usize, j: usize) -> Option<&T> {
        (i < self.rows && j < self.cols).then(|| &self.entries[i * self.cols + j])
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<T>>
    where
        T: Clone,
    {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self
    where
        T: Clone,
    {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Submatrix keeping the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self
    where
        T: Clone,
    {
        Matrix::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.entries[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.entries[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = (0..self.rows).map(|i| self.row(i)).collect();
        f.debug_list().entries(rows).finish()
    }
}

impl<R: Ring> Matrix<R> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| R::zero())
    }

    /// Exact determinant; errors on non-square input.
    pub fn det(&self) -> Result<R> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(R::det_square(self))
    }

    pub fn mul(&self, rhs: &Matrix<R>) -> Result<Matrix<R>> {
        mat_mul(self, rhs)
    }
}

pub fn mat_mul<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> Result<Matrix<R>> {
    if a.cols != b.rows {
        return Err(Error::Dimension(format!(
            "{}x{} times {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    Ok(Matrix::from_fn(a.rows, b.cols, |i, j| {
        (0..a.cols).fold(R::zero(), |acc, k| {
            acc + a[(i, k)].clone() * b[(k, j)].clone()
        })
    }))
}

/// Laplace expansion along the first row, memoized over the set of columns
/// still in play. Division-free, so it works over any commutative ring.
pub fn det_cofactor<R: Ring>(m: &Matrix<R>) -> R {
    assert!(m.is_square(), "det_cofactor needs a square matrix");
    let n = m.rows;
    if n == 0 {
        return R::one();
    }
    assert!(n < 64, "matrix too large for cofactor expansion");
    let mut memo: HashMap<u64, R> = HashMap::new();
    cofactor_rec(m, 0, (1u64 << n) - 1, &mut memo)
}

fn cofactor_rec<R: Ring>(m: &Matrix<R>, row: usize, cols: u64, memo: &mut HashMap<u64, R>) -> R {
    if row == m.rows {
        return R::one();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = R::zero();
    let mut position = 0usize;
    for j in 0..m.cols {
        if cols & (1 << j) == 0 {
            continue;
        }
        let entry = &m[(row, j)];
        if !entry.is_zero() {
            let minor = cofactor_rec(m, row + 1, cols & !(1 << j), memo);
            let term = entry.clone() * minor;
            acc = if position.is_multiple_of(2) {
                acc + term
            } else {
                acc - term
            };
        }
        position += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Fraction-free (Bareiss) elimination with row pivoting.
pub fn det_bareiss(m: &Matrix<Rational>) -> Rational {
    assert!(m.is_square(), "det_bareiss needs a square matrix");
    let n = m.rows;
    if n == 0 {
        return Rational::one();
    }
    let mut a = m.to_rows();
    let mut sign = Rational::one();
    let mut prev = Rational::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Gauss–Jordan inverse over the rationals.
pub fn inverse(m: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    if !m.is_square() {
        return Err(Error::Dimension("inverse of a non-square matrix".into()));
    }
    let n = m.rows;
    let mut a = m.to_rows();
    let mut inv = Matrix::<Rational>::identity(n).to_rows();
    for c in 0..n {
        let p = (c..n)
            .find(|&r| !a[r][c].is_zero())
            .ok_or(Error::Singular)?;
        a.swap(c, p);
        inv.swap(c, p);
        let pivot = a[c][c].recip()?;
        for j in 0..n {
            a[c][j] *= &pivot;
            inv[c][j] *= &pivot;
        }
        for r in 0..n {
            if r == c || a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].clone();
            for j in 0..n {
                let t = &f * &a[c][j];
                a[r][j] -= &t;
                let t = &f * &inv[c][j];
                inv[r][j] -= &t;
            }
        }
    }
    Matrix::from_rows(inv)
}

/// `m^e` for any integer `e`; negative powers go through the exact inverse.
pub fn mat_pow_signed(m: &Matrix<Rational>, e: i64) -> Result<Matrix<Rational>> {
    if !m.is_square() {
        return Err(Error::Dimension("power of a non-square matrix".into()));
    }
    let base = if e < 0 { inverse(m)? } else { m.clone() };
    let mut exp = e.unsigned_abs();
    let mut acc = Matrix::identity(m.rows);
    let mut sq = base;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mat_mul(&acc, &sq)?;
        }
        exp >>= 1;
        if exp > 0 {
            sq = mat_mul(&sq, &sq)?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn det_small_cases() {
        assert_eq!(
            Matrix::<Rational>::identity(2).det().unwrap(),
            Rational::one()
        );
        let m = qm(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.det().unwrap(), Rational::from(-2));
        assert_eq!(det_cofactor(&m), Rational::from(-2));
        assert_eq!(
            Matrix::<Rational>::zeros(0, 0).det().unwrap(),
            Rational::one()
        );
    }

    #[test]
    fn bareiss_needs_pivot() {
        let m = qm(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_eq!(det_bareiss(&m), det_cofactor(&m));
        assert_eq!(det_bareiss(&m), Rational::from(-2));
        let singular = qm(&[&[1, 2], &[2, 4]]);
        assert_eq!(det_bareiss(&singular), Rational::zero());
    }

    #[test]
    fn non_square_rejected() {
        let m = Matrix::<Rational>::zeros(2, 3);
        assert!(matches!(m.det(), Err(Error::Dimension(_))));
        assert!(matches!(mat_mul(&m, &m), Err(Error::Dimension(_))));
    }

    #[test]
    fn companion_square() {
        let c = qm(&[&[0, -2], &[1, 3]]);
        assert_eq!(mat_mul(&Matrix::identity(2), &c).unwrap(), c);
        assert_eq!(mat_mul(&c, &c).unwrap(), qm(&[&[-2, -6], &[3, 7]]));
        assert_eq!(mat_pow_signed(&c, 2).unwrap(), qm(&[&[-2, -6], &[3, 7]]));
        assert_eq!(mat_pow_signed(&c, 0).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn companion_inverse() {
        let c = qm(&[&[0, -2], &[1, 3]]);
        let expected = Matrix::from_rows(vec![
            vec![rat(3, 2), rat(1, 1)],
            vec![rat(-1, 2), rat(0, 1)],
        ])
        .unwrap();
        assert_eq!(mat_pow_signed(&c, -1).unwrap(), expected);
    }

    #[test]
    fn singular_negative_power() {
        let m = qm(&[&[1, 2], &[2, 4]]);
        assert_eq!(mat_pow_signed(&m, -1), Err(Error::Singular));
        assert!(mat_pow_signed(&m, 3).is_ok());
    }
}
