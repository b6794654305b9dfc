use crate::scalars::Scalar;

use super::{BilinearMap, Element, GradedError, GradedModule, Matrix};

/// A linear map `A → gl(V)`, stored as one matrix per basis vector of `A`.
///
/// Grading: the operator of `a_i` sends `V_b` into `V_{deg(a_i) + b}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    carrier: GradedModule,
    actions: Vec<Matrix>,
}

impl Representation {
    pub fn new(
        algebra: &GradedModule,
        carrier: GradedModule,
        actions: Vec<Matrix>,
        name: &str,
    ) -> Result<Self, GradedError> {
        if !algebra.same_context(&carrier) {
            return Err(GradedError::ContextMismatch);
        }
        if actions.len() != algebra.dim() {
            return Err(GradedError::Dimension {
                what: "representation action list",
                expected: algebra.dim(),
                got: actions.len(),
            });
        }
        let n = carrier.dim();
        for m in &actions {
            if m.rows() != n || m.cols() != n {
                return Err(GradedError::Dimension {
                    what: "representation matrix",
                    expected: n,
                    got: m.rows().max(m.cols()),
                });
            }
            if !std::ptr::eq(m.field(), carrier.field()) {
                return Err(GradedError::ContextMismatch);
            }
        }
        let rep = Representation { carrier, actions };
        rep.validate_grading(algebra, name)?;
        Ok(rep)
    }

    /// Builds from `(i, row, col, c)` entries: the coefficient of `v_row` in
    /// the image of `v_col` under the operator of `a_i`. Repeated entries add.
    pub fn from_entries(
        algebra: &GradedModule,
        carrier: GradedModule,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        name: &str,
    ) -> Result<Self, GradedError> {
        let field = carrier.field();
        let n = carrier.dim();
        let mut actions = vec![Matrix::zero(field, n, n); algebra.dim()];
        for (i, row, col, c) in entries {
            for (what, idx, bound) in [("algebra", i, algebra.dim()), ("row", row, n), ("column", col, n)] {
                if idx >= bound {
                    return Err(GradedError::IndexOutOfRange {
                        what: format!("`{name}` {what}"),
                        index: idx,
                        bound,
                    });
                }
            }
            if !std::ptr::eq(c.field(), field) {
                return Err(GradedError::ContextMismatch);
            }
            let value = actions[i].get(row, col) + &c;
            actions[i].set(row, col, value);
        }
        Representation::new(algebra, carrier, actions, name)
    }

    pub fn zero(algebra: &GradedModule, carrier: GradedModule) -> Self {
        let n = carrier.dim();
        let actions = vec![Matrix::zero(carrier.field(), n, n); algebra.dim()];
        Representation { carrier, actions }
    }

    /// Left multiplication `x ↦ (y ↦ m(x, y))` on the algebra itself.
    pub fn left_multiplication(algebra: &GradedModule, product: &BilinearMap) -> Self {
        let n = algebra.dim();
        let field = algebra.field();
        let actions = (0..n)
            .map(|i| {
                let mut m = Matrix::zero(field, n, n);
                for j in 0..n {
                    if let Some(v) = product.basis_value(i, j) {
                        for k in v.support() {
                            m.set(k, j, v.coeffs()[k].clone());
                        }
                    }
                }
                m
            })
            .collect();
        Representation {
            carrier: algebra.clone(),
            actions,
        }
    }

    fn validate_grading(&self, algebra: &GradedModule, name: &str) -> Result<(), GradedError> {
        let grading = algebra.grading();
        for (i, m) in self.actions.iter().enumerate() {
            for (row, col, _) in m.nonzero() {
                let target = grading.add(algebra.degree(i), self.carrier.degree(col));
                if *self.carrier.degree(row) != target {
                    return Err(GradedError::GradingViolation {
                        name: name.to_string(),
                        indices: vec![i, col],
                        target: row,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn carrier(&self) -> &GradedModule {
        &self.carrier
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.actions[i]
    }

    pub fn algebra_dim(&self) -> usize {
        self.actions.len()
    }

    /// The operator of an arbitrary algebra element, by linearity.
    pub fn operator(&self, x: &Element) -> Matrix {
        let n = self.carrier.dim();
        let mut out = Matrix::zero(self.carrier.field(), n, n);
        for i in x.support() {
            out.add_scaled(&x.coeffs()[i], &self.actions[i]);
        }
        out
    }

    /// `(i, row, col, c)` with `c ≠ 0`, lexicographic.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.actions
            .iter()
            .enumerate()
            .flat_map(|(i, m)| m.nonzero().map(move |(r, c, v)| (i, r, c, v)))
    }
}
