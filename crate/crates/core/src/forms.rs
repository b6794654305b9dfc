//! Bilinear forms and the invariant-form route to coherence.

use thiserror::Error;

use crate::graded::{AlgebraSpec, Element, GradedError, GradedModule, Matrix};
use crate::identities::{self, all_passed, Bindings, CheckError, CheckReport, IdentityId, Suite};
use crate::scalars::Scalar;

/// `B(b_i, b_j) = matrix[i][j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    matrix: Matrix,
}

impl BilinearForm {
    pub fn new(module: &GradedModule, matrix: Matrix) -> Result<Self, GradedError> {
        let n = module.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(GradedError::Dimension {
                what: "form matrix",
                expected: n,
                got: matrix.rows().max(matrix.cols()),
            });
        }
        if !std::ptr::eq(matrix.field(), module.field()) {
            return Err(GradedError::ContextMismatch);
        }
        Ok(BilinearForm { matrix })
    }

    /// From `(i, j, c)` entries; repeated entries add.
    pub fn from_entries(
        module: &GradedModule,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
        name: &str,
    ) -> Result<Self, GradedError> {
        let n = module.dim();
        let mut matrix = Matrix::zero(module.field(), n, n);
        for (i, j, c) in entries {
            if let Some(idx) = [i, j].into_iter().find(|&k| k >= n) {
                return Err(GradedError::IndexOutOfRange {
                    what: format!("form `{name}`"),
                    index: idx,
                    bound: n,
                });
            }
            if !std::ptr::eq(c.field(), module.field()) {
                return Err(GradedError::ContextMismatch);
            }
            let v = matrix.get(i, j) + &c;
            matrix.set(i, j, v);
        }
        Ok(BilinearForm { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Nonzero `(i, j, c)` entries, row-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.matrix.nonzero()
    }

    pub fn eval(&self, x: &Element, y: &Element) -> Scalar {
        let mut acc = self.matrix.field().zero();
        for i in x.support() {
            for j in y.support() {
                let b = self.matrix.get(i, j);
                if !b.is_zero() {
                    acc += &(&(&x.coeffs()[i] * b) * &y.coeffs()[j]);
                }
            }
        }
        acc
    }

    pub fn determinant(&self) -> Scalar {
        determinant(&self.matrix)
    }

    /// A nonzero `v` with `B(v, ·) = 0`, if the form is degenerate.
    pub fn left_radical_vector(&self) -> Option<Element> {
        kernel_vector(&self.matrix.transpose())
    }
}

/// Row reduction to echelon form; returns the reduced rows, pivot columns,
/// and the determinant factor accumulated (sign and pivots).
fn eliminate(m: &Matrix) -> (Vec<Vec<Scalar>>, Vec<usize>, Scalar) {
    let field = m.field();
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<Scalar>> = (0..rows)
        .map(|r| (0..cols).map(|c| m.get(r, c).clone()).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut det = field.one();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(p) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            det = field.zero();
            continue;
        };
        if p != row {
            a.swap(p, row);
            det = -det;
        }
        let inv = a[row][col].inverse().expect("pivot is nonzero");
        det = &det * &a[row][col];
        for x in &mut a[row][col..] {
            *x = &*x * &inv;
        }
        let pivot_row = a[row].clone();
        for (r, target) in a.iter_mut().enumerate() {
            if r != row && !target[col].is_zero() {
                let factor = target[col].clone();
                for (x, p) in target[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &(&factor * p);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if pivots.len() < rows.min(cols) || rows != cols {
        det = field.zero();
    }
    (a, pivots, det)
}

pub fn determinant(m: &Matrix) -> Scalar {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    eliminate(m).2
}

/// A nonzero vector `v` with `m v = 0`, or `None` when `m` has full column rank.
pub fn kernel_vector(m: &Matrix) -> Option<Element> {
    let field = m.field();
    let (a, pivots, _) = eliminate(m);
    let free = (0..m.cols()).find(|c| !pivots.contains(c))?;
    let mut v = vec![field.zero(); m.cols()];
    v[free] = field.one();
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = -&a[r][free];
    }
    Some(Element::from_coeffs(v))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("hypotheses do not hold")]
    Precondition(Vec<CheckReport>),
    /// The hypotheses hold but a conclusion fails. This contradicts the
    /// theorem and points at a kernel bug.
    #[error("hypotheses hold but coherence fails")]
    ConclusionFailed(Vec<CheckReport>),
    #[error(transparent)]
    Check(#[from] CheckError),
}

/// Symmetry, invariance and nondegeneracy of the bound form.
pub fn check_form(spec: &AlgebraSpec, bindings: &Bindings) -> Result<Vec<CheckReport>, CheckError> {
    identities::check_suite(spec, Suite::InvariantForm, bindings)
}

/// Runs `coherence-1`, `coherence-2` and the transfer identity
/// `B(P_x(y,z),w) = ε(x+y,z) B(z,P_x(y,w))` after confirming that the
/// algebra is an F-manifold color algebra and the form is symmetric,
/// invariant and nondegenerate.
pub fn coherence_from_form(spec: &AlgebraSpec, bindings: &Bindings) -> Result<Vec<CheckReport>, FormError> {
    let mut hypotheses = identities::check_suite(spec, Suite::FManifoldColor, bindings)?;
    hypotheses.extend(check_form(spec, bindings)?);
    if !all_passed(&hypotheses) {
        return Err(FormError::Precondition(hypotheses));
    }
    let reports = [IdentityId::Coherence1, IdentityId::Coherence2, IdentityId::FormPTransfer]
        .into_iter()
        .map(|id| identities::check(spec, id, bindings))
        .collect::<Result<Vec<_>, _>>()?;
    if !all_passed(&reports) {
        return Err(FormError::ConclusionFailed(reports));
    }
    Ok(reports)
}
