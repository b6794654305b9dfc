//! Exact arithmetic in the cyclotomic field `Q(ζ_N)`.
//!
//! Every coefficient and every bicharacter value in the crate lives here. A
//! [`Scalar`] stores its coordinates in the power basis modulo `Φ_N`, which is
//! a unique normal form, so equality is coefficient-wise.

mod field;
mod literal;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use thiserror::Error;

pub use field::{cyclotomic_polynomial, CyclotomicField, MAX_ROOT_ORDER};
pub use literal::LiteralError;

/// Arbitrary precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("root order must lie in 1..={max}, got {0}", max = MAX_ROOT_ORDER)]
    InvalidRootOrder(u32),
    #[error("mismatched root orders: {0} vs {1}")]
    MismatchedOrder(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
}

/// An element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct Scalar {
    field: &'static CyclotomicField,
    coeffs: Box<[Rational]>,
}

impl Scalar {
    pub(crate) fn from_parts(field: &'static CyclotomicField, coeffs: Vec<Rational>) -> Self {
        debug_assert_eq!(coeffs.len(), field.degree());
        Scalar {
            field,
            coeffs: coeffs.into_boxed_slice(),
        }
    }

    /// Builds a scalar from power-basis coordinates of any length; the input
    /// is reduced modulo `Φ_N`.
    pub fn from_coeffs(field: &'static CyclotomicField, coeffs: Vec<Rational>) -> Self {
        Scalar::from_parts(field, field.reduce(coeffs))
    }

    /// `ζ_n^k` in canonical form.
    pub fn root_of_unity(k: i64, n: u32) -> Result<Self, ScalarError> {
        Ok(CyclotomicField::get(n)?.root(k))
    }

    pub fn field(&self) -> &'static CyclotomicField {
        self.field
    }

    pub fn root_order(&self) -> u32 {
        self.field.order()
    }

    /// Coordinates in the power basis, length `φ(N)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational, if it lies in `Q`.
    pub fn to_rational(&self) -> Option<&Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    fn same_field(&self, other: &Scalar) -> Result<(), ScalarError> {
        if std::ptr::eq(self.field, other.field) {
            Ok(())
        } else {
            Err(ScalarError::MismatchedOrder(self.root_order(), other.root_order()))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        let coeffs = self.coeffs.iter().zip(other.coeffs.iter()).map(|(a, b)| a + b).collect();
        Ok(Scalar::from_parts(self.field, coeffs))
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        let coeffs = self.coeffs.iter().zip(other.coeffs.iter()).map(|(a, b)| a - b).collect();
        Ok(Scalar::from_parts(self.field, coeffs))
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.field.zero());
        }
        Ok(Scalar::from_parts(self.field, self.field.mul_coeffs(&self.coeffs, &other.coeffs)))
    }

    /// Multiplicative inverse via the field norm.
    pub fn inverse(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(self.field.rational(r.recip()));
        }
        let inv = self.field.inverse_coeffs(&self.coeffs).ok_or(ScalarError::DivisionByZero)?;
        Ok(Scalar::from_parts(self.field, inv))
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        self.try_mul(&other.inverse()?)
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, r: &Rational) -> Scalar {
        let coeffs = self.coeffs.iter().map(|c| c * r).collect();
        Scalar::from_parts(self.field, coeffs)
    }

    /// Parses a scalar literal such as `1/2`, `-3*z^5` or `z^2+1/3`, where `z`
    /// stands for `ζ_N` of the given field.
    pub fn parse(text: &str, field: &'static CyclotomicField) -> Result<Scalar, LiteralError> {
        literal::parse(text, field)
    }

    /// Canonical literal: power-basis terms in increasing exponent, `0` for zero.
    pub fn to_literal(&self) -> String {
        literal::format(self)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.field, other.field) && self.coeffs == other.coeffs
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.root_order().hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (N={})", self.to_literal(), self.root_order())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

// Operator impls panic on mismatched root orders; all scalars inside one
// algebra share a field, and the fallible `try_*` forms exist for the rest.

impl<'a> Add<&'a Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.try_add(rhs).expect("scalar addition")
    }
}

impl<'a> Sub<&'a Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.try_sub(rhs).expect("scalar subtraction")
    }
}

impl<'a> Mul<&'a Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalar multiplication")
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let coeffs = self.coeffs.iter().map(|c| -c).collect();
        Scalar::from_parts(self.field, coeffs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.same_field(rhs).expect("scalar addition");
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a += b;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.same_field(rhs).expect("scalar subtraction");
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a -= b;
        }
    }
}
