use crate::scalars::Scalar;

use super::{Element, GradedError, GradedModule};

/// Bilinear product given by its values on pairs of basis vectors.
///
/// Every stored value `m(b_i, b_j)` is supported on basis vectors of degree
/// `deg(b_i) + deg(b_j)`; this is enforced on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearMap {
    name: String,
    dim: usize,
    /// Dense `dim × dim` table, `None` for a zero value.
    table: Vec<Option<Element>>,
}

impl BilinearMap {
    pub fn zero(module: &GradedModule, name: impl Into<String>) -> Self {
        let dim = module.dim();
        BilinearMap {
            name: name.into(),
            dim,
            table: vec![None; dim * dim],
        }
    }

    /// Builds a map from basis values. Later entries for the same pair are
    /// added to earlier ones.
    pub fn from_entries(
        module: &GradedModule,
        name: impl Into<String>,
        entries: impl IntoIterator<Item = ((usize, usize), Element)>,
    ) -> Result<Self, GradedError> {
        let mut map = BilinearMap::zero(module, name);
        for ((i, j), value) in entries {
            map.accumulate(module, i, j, &value)?;
        }
        map.validate_grading(module)?;
        Ok(map)
    }

    /// Builds a map from structure constants `m(b_i, b_j) ∋ c·b_k`.
    pub fn from_constants(
        module: &GradedModule,
        name: impl Into<String>,
        constants: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self, GradedError> {
        let name = name.into();
        let mut map = BilinearMap::zero(module, name.clone());
        let n = module.dim();
        for (i, j, k, c) in constants {
            for (what, idx) in [("left", i), ("right", j), ("output", k)] {
                if idx >= n {
                    return Err(GradedError::IndexOutOfRange {
                        what: format!("`{name}` {what}"),
                        index: idx,
                        bound: n,
                    });
                }
            }
            if !std::ptr::eq(c.field(), module.field()) {
                return Err(GradedError::ContextMismatch);
            }
            let slot = map.table[i * n + j].get_or_insert_with(|| module.zero());
            slot.coeffs_mut()[k] += &c;
        }
        map.normalize();
        map.validate_grading(module)?;
        Ok(map)
    }

    fn accumulate(
        &mut self,
        module: &GradedModule,
        i: usize,
        j: usize,
        value: &Element,
    ) -> Result<(), GradedError> {
        let n = self.dim;
        if i >= n || j >= n {
            return Err(GradedError::IndexOutOfRange {
                what: format!("`{}` argument", self.name),
                index: i.max(j),
                bound: n,
            });
        }
        module.check_element(value)?;
        if value.coeffs().iter().any(|c| !std::ptr::eq(c.field(), module.field())) {
            return Err(GradedError::ContextMismatch);
        }
        let slot = self.table[i * n + j].get_or_insert_with(|| module.zero());
        *slot += value;
        if slot.is_zero() {
            self.table[i * n + j] = None;
        }
        Ok(())
    }

    fn normalize(&mut self) {
        for slot in &mut self.table {
            if slot.as_ref().is_some_and(Element::is_zero) {
                *slot = None;
            }
        }
    }

    fn validate_grading(&self, module: &GradedModule) -> Result<(), GradedError> {
        if module.dim() != self.dim {
            return Err(GradedError::Dimension {
                what: "bilinear map",
                expected: module.dim(),
                got: self.dim,
            });
        }
        let grading = module.grading();
        for ((i, j), value) in self.entries() {
            let target = grading.add(module.degree(i), module.degree(j));
            if let Some(k) = value.support().find(|&k| *module.degree(k) != target) {
                return Err(GradedError::GradingViolation {
                    name: self.name.clone(),
                    indices: vec![i, j],
                    target: k,
                });
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(Option::is_none)
    }

    /// `m(b_i, b_j)`, or `None` when it vanishes.
    pub fn basis_value(&self, i: usize, j: usize) -> Option<&Element> {
        self.table[i * self.dim + j].as_ref()
    }

    /// Nonzero basis values in lexicographic order of `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Element)> {
        let n = self.dim;
        self.table
            .iter()
            .enumerate()
            .filter_map(move |(idx, v)| v.as_ref().map(|v| ((idx / n, idx % n), v)))
    }

    /// Structure constants `(i, j, k, c)` in lexicographic order, zeros omitted.
    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.entries().flat_map(|((i, j), v)| {
            v.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(k, c)| (i, j, k, c))
        })
    }

    /// `m(x, y)` by bilinear extension.
    pub fn apply(&self, module: &GradedModule, x: &Element, y: &Element) -> Element {
        let mut out = module.zero();
        self.apply_into(&mut out, &module.field().one(), x, y);
        out
    }

    /// `out += c · m(x, y)`
    pub(crate) fn apply_into(&self, out: &mut Element, c: &Scalar, x: &Element, y: &Element) {
        for i in x.support() {
            let xi = &x.coeffs()[i];
            for j in y.support() {
                if let Some(v) = self.basis_value(i, j) {
                    let coeff = c * &(xi * &y.coeffs()[j]);
                    out.add_scaled(&coeff, v);
                }
            }
        }
    }

    pub fn try_apply(
        &self,
        module: &GradedModule,
        x: &Element,
        y: &Element,
    ) -> Result<Element, GradedError> {
        if module.dim() != self.dim {
            return Err(GradedError::ContextMismatch);
        }
        module.check_element(x)?;
        module.check_element(y)?;
        Ok(self.apply(module, x, y))
    }

    /// Builds a map from a function on basis pairs, which must respect the grading.
    pub(crate) fn from_fn(
        module: &GradedModule,
        name: impl Into<String>,
        mut f: impl FnMut(usize, usize) -> Element,
    ) -> Self {
        let n = module.dim();
        let mut map = BilinearMap::zero(module, name);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                if !v.is_zero() {
                    map.table[i * n + j] = Some(v);
                }
            }
        }
        debug_assert!(map.validate_grading(module).is_ok());
        map
    }
}

/// `[b_i, b_j] = b_i ∗ b_j - ε(b_i, b_j) b_j ∗ b_i`
pub fn commutator(module: &GradedModule, product: &BilinearMap, name: &str) -> BilinearMap {
    let grading = module.grading();
    BilinearMap::from_fn(module, name, |i, j| {
        let mut v = module.zero();
        if let Some(a) = product.basis_value(i, j) {
            v += a;
        }
        if let Some(b) = product.basis_value(j, i) {
            let eps = grading.eps(module.degree(i), module.degree(j));
            v.add_scaled(&-eps, b);
        }
        v
    })
}

/// `b_i · b_j = b_i ◇ b_j + ε(b_i, b_j) b_j ◇ b_i`
pub fn symmetrization(module: &GradedModule, product: &BilinearMap, name: &str) -> BilinearMap {
    let grading = module.grading();
    BilinearMap::from_fn(module, name, |i, j| {
        let mut v = module.zero();
        if let Some(a) = product.basis_value(i, j) {
            v += a;
        }
        if let Some(b) = product.basis_value(j, i) {
            let eps = grading.eps(module.degree(i), module.degree(j));
            v.add_scaled(&eps, b);
        }
        v
    })
}
