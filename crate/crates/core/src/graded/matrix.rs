use crate::scalars::{CyclotomicField, Scalar};

use super::Element;

/// Dense square-or-rectangular matrix over `Q(ζ_N)`. Column `j` holds the
/// image of the `j`-th basis vector: `(row, col)` is the coefficient of
/// `v_row` in `op(v_col)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: &'static CyclotomicField,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: &'static CyclotomicField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &'static CyclotomicField, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Row-major data.
    pub fn from_rows(field: &'static CyclotomicField, rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> &'static CyclotomicField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.data[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        self.data[row * self.cols + col] = value;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Nonzero entries as `(row, col, value)`, row-major.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn column(&self, col: usize) -> Element {
        Element::from_coeffs((0..self.rows).map(|r| self.get(r, col).clone()).collect())
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            field: self.field,
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        if c.is_one() {
            return self.clone();
        }
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, c: &Scalar, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shape");
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                if c.is_one() {
                    *a += b;
                } else {
                    *a += &(c * b);
                }
            }
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut data: Vec<Option<Scalar>> = vec![None; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let term = a * b;
                    match &mut data[i * other.cols + j] {
                        Some(acc) => *acc += &term,
                        slot => *slot = Some(term),
                    }
                }
            }
        }
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: other.cols,
            data: data
                .into_iter()
                .map(|v| v.unwrap_or_else(|| self.field.zero()))
                .collect(),
        }
    }

    pub fn apply(&self, v: &Element) -> Element {
        assert_eq!(self.cols, v.dim(), "matrix-vector shape");
        let mut out = vec![self.field.zero(); self.rows];
        for (j, x) in v.coeffs().iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        Element::from_coeffs(out)
    }
}

impl std::ops::Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        let mut out = self.clone();
        out.add_scaled(&self.field.one(), rhs);
        out
    }
}

impl std::ops::Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        let mut out = self.clone();
        out.add_scaled(&self.field.integer(-1), rhs);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_application() {
        let f = CyclotomicField::get(4).unwrap();
        let i = f.root(1);
        // rotation-like matrix [[0, -1], [1, 0]] squares to -1
        let m = Matrix::from_rows(f, 2, 2, vec![f.zero(), f.integer(-1), f.one(), f.zero()]);
        let sq = m.mul(&m);
        assert_eq!(sq, Matrix::identity(f, 2).scale(&f.integer(-1)));
        let v = Element::from_coeffs(vec![i.clone(), f.one()]);
        assert_eq!(m.apply(&v), Element::from_coeffs(vec![f.integer(-1), i]));
        assert_eq!(m.transpose().transpose(), m);
        assert!((&m - &m).is_zero());
        assert_eq!(m.column(0), Element::from_coeffs(vec![f.zero(), f.one()]));
    }

    #[test]
    fn empty_matrices() {
        let f = CyclotomicField::get(1).unwrap();
        let e = Matrix::zero(f, 0, 0);
        assert!(e.mul(&e).is_zero());
        assert_eq!(e.apply(&Element::from_coeffs(vec![])).dim(), 0);
    }
}
