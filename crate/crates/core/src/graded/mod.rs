//! Graded modules, their elements, structure-constant maps, representations,
//! and the pointwise operators built from them.

mod bilinear;
mod matrix;
pub mod ops;
mod representation;
mod spec;

use std::sync::Arc;

use thiserror::Error;

use crate::grading::{GradingError, Grading, GroupElement};
use crate::scalars::{CyclotomicField, Scalar};

pub use bilinear::{commutator, symmetrization, BilinearMap};
pub use matrix::Matrix;
pub use ops::Homogeneous;
pub use representation::Representation;
pub use spec::AlgebraSpec;

/// Largest module dimension accepted from external input.
pub const MAX_DIMENSION: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("{what} has length {got}, expected {expected}")]
    Dimension {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("dimension {0} exceeds the supported maximum {max}", max = MAX_DIMENSION)]
    TooLarge(usize),
    #[error("{what} index {index} out of range (bound {bound})")]
    IndexOutOfRange {
        what: String,
        index: usize,
        bound: usize,
    },
    #[error("`{name}` violates the grading at {indices:?}: component {target} has the wrong degree")]
    GradingViolation {
        name: String,
        indices: Vec<usize>,
        target: usize,
    },
    #[error("objects live over different gradings or scalar fields")]
    ContextMismatch,
    #[error("element is not homogeneous")]
    NonHomogeneous,
    #[error(transparent)]
    Grading(#[from] GradingError),
}

/// A finite-dimensional `G`-graded vector space with a homogeneous basis.
#[derive(Debug, Clone)]
pub struct GradedModule {
    grading: Arc<Grading>,
    degrees: Vec<GroupElement>,
}

impl PartialEq for GradedModule {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.grading, &other.grading) || self.grading == other.grading)
            && self.degrees == other.degrees
    }
}

impl Eq for GradedModule {}

impl GradedModule {
    pub fn new(grading: Arc<Grading>, degrees: Vec<GroupElement>) -> Result<Self, GradedError> {
        if degrees.len() > MAX_DIMENSION {
            return Err(GradedError::TooLarge(degrees.len()));
        }
        for d in &degrees {
            grading.group().validate(d)?;
        }
        Ok(GradedModule { grading, degrees })
    }

    /// Module whose basis vectors all have degree zero.
    pub fn ungraded(grading: Arc<Grading>, dim: usize) -> Result<Self, GradedError> {
        let zero = grading.group().zero();
        GradedModule::new(grading, vec![zero; dim])
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn grading(&self) -> &Arc<Grading> {
        &self.grading
    }

    pub fn field(&self) -> &'static CyclotomicField {
        self.grading.field()
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> &GroupElement {
        &self.degrees[i]
    }

    pub fn same_context(&self, other: &GradedModule) -> bool {
        Arc::ptr_eq(&self.grading, &other.grading) || self.grading == other.grading
    }

    pub fn zero(&self) -> Element {
        Element {
            coeffs: vec![self.field().zero(); self.dim()],
        }
    }

    pub fn basis(&self, i: usize) -> Element {
        let mut e = self.zero();
        e.coeffs[i] = self.field().one();
        e
    }

    pub fn basis_homogeneous(&self, i: usize) -> Homogeneous {
        Homogeneous {
            element: self.basis(i),
            degree: self.degrees[i].clone(),
        }
    }

    pub fn element(&self, coeffs: Vec<Scalar>) -> Result<Element, GradedError> {
        if coeffs.len() != self.dim() {
            return Err(GradedError::Dimension {
                what: "element",
                expected: self.dim(),
                got: coeffs.len(),
            });
        }
        if coeffs.iter().any(|c| !std::ptr::eq(c.field(), self.field())) {
            return Err(GradedError::ContextMismatch);
        }
        Ok(Element { coeffs })
    }

    pub(crate) fn check_element(&self, x: &Element) -> Result<(), GradedError> {
        if x.dim() != self.dim() {
            return Err(GradedError::Dimension {
                what: "element",
                expected: self.dim(),
                got: x.dim(),
            });
        }
        Ok(())
    }

    /// `Some(degree)` for a nonzero homogeneous element, `None` for zero.
    pub fn homogeneous_degree(&self, x: &Element) -> Result<Option<GroupElement>, GradedError> {
        self.check_element(x)?;
        let mut degree: Option<&GroupElement> = None;
        for i in x.support() {
            match degree {
                None => degree = Some(&self.degrees[i]),
                Some(d) if *d == self.degrees[i] => {}
                Some(_) => return Err(GradedError::NonHomogeneous),
            }
        }
        Ok(degree.cloned())
    }

    /// Splits an element into its homogeneous components, in order of first
    /// appearance in the basis.
    pub fn decompose(&self, x: &Element) -> Result<Vec<Homogeneous>, GradedError> {
        self.check_element(x)?;
        let mut parts: Vec<Homogeneous> = Vec::new();
        for i in x.support() {
            let d = &self.degrees[i];
            let part = match parts.iter_mut().find(|p| p.degree == *d) {
                Some(p) => p,
                None => {
                    parts.push(Homogeneous {
                        element: self.zero(),
                        degree: d.clone(),
                    });
                    parts.last_mut().expect("just pushed")
                }
            };
            part.element.coeffs[i] = x.coeffs[i].clone();
        }
        Ok(parts)
    }

    /// Basis of `self ⊕ other`: this module's basis first, then `other`'s.
    pub fn direct_sum(&self, other: &GradedModule) -> Result<GradedModule, GradedError> {
        if !self.same_context(other) {
            return Err(GradedError::ContextMismatch);
        }
        let degrees = self.degrees.iter().chain(&other.degrees).cloned().collect();
        GradedModule::new(self.grading.clone(), degrees)
    }

    /// The dual space with the dual basis; `α_i` has degree `-deg(v_i)`.
    pub fn dual(&self) -> GradedModule {
        GradedModule {
            grading: self.grading.clone(),
            degrees: self.degrees.iter().map(|d| self.grading.neg(d)).collect(),
        }
    }
}

/// Coefficient vector with respect to a module's basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    coeffs: Vec<Scalar>,
}

impl Element {
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_one() {
            return self.clone();
        }
        Element {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, c: &Scalar, other: &Element) {
        debug_assert_eq!(self.dim(), other.dim());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                if c.is_one() {
                    *a += b;
                } else {
                    *a += &(c * b);
                }
            }
        }
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut [Scalar] {
        &mut self.coeffs
    }

    pub(crate) fn from_coeffs(coeffs: Vec<Scalar>) -> Element {
        Element { coeffs }
    }
}

impl std::ops::Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element dimension mismatch");
        Element {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl std::ops::Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element dimension mismatch");
        Element {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl std::ops::Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl std::ops::AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        assert_eq!(self.dim(), rhs.dim(), "element dimension mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl std::ops::SubAssign<&Element> for Element {
    fn sub_assign(&mut self, rhs: &Element) {
        assert_eq!(self.dim(), rhs.dim(), "element dimension mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}
