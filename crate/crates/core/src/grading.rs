//! Finite abelian grading groups and skew-symmetric bicharacters.
//!
//! The group is `Z_{d_1} × … × Z_{d_k}`. A bicharacter is stored as an integer
//! exponent matrix `M` into the `N`-th roots of unity, with
//! `ε(g_i, g_j) = ζ_N^{M[i][j]}` on generators and the biadditive extension
//! `ε(a, b) = ζ_N^{Σ a_i M[i][j] b_j}` everywhere else.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use smallvec::SmallVec;
use thiserror::Error;

use crate::identities::{CheckReport, Defect, IdentityId, Witness};
use crate::scalars::{CyclotomicField, Scalar, ScalarError};

/// Largest group order accepted; degree bookkeeping enumerates the group.
pub const MAX_GROUP_ORDER: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("cyclic order {0} is invalid (each factor must be at least 2)")]
    InvalidCyclicOrder(u64),
    #[error("group order exceeds {max}", max = MAX_GROUP_ORDER)]
    GroupTooLarge,
    #[error("group element has {got} components, expected {expected}")]
    Rank { expected: usize, got: usize },
    #[error("group element component {index} = {value} is not reduced modulo {order}")]
    Unreduced { index: usize, value: u32, order: u32 },
    #[error("bicharacter exponent matrix must be {rank}x{rank}")]
    Shape { rank: usize },
    #[error("bicharacter violates its axioms at generators ({0}, {1})")]
    Violation(usize, usize),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(SmallVec<[u32; 4]>);

impl GroupElement {
    pub fn components(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    orders: Vec<u32>,
}

impl FiniteAbelianGroup {
    pub fn new(cyclic_orders: Vec<u64>) -> Result<Self, GradingError> {
        let mut total: u64 = 1;
        for &d in &cyclic_orders {
            if d < 2 {
                return Err(GradingError::InvalidCyclicOrder(d));
            }
            total = total
                .checked_mul(d)
                .filter(|&t| t <= MAX_GROUP_ORDER)
                .ok_or(GradingError::GroupTooLarge)?;
        }
        Ok(FiniteAbelianGroup {
            orders: cyclic_orders.into_iter().map(|d| d as u32).collect(),
        })
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { orders: Vec::new() }
    }

    pub fn cyclic_orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().map(|&d| d as u64).product()
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1u64, |acc, &d| acc.lcm(&(d as u64)))
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(SmallVec::from_elem(0, self.rank()))
    }

    /// Reduces arbitrary integers componentwise.
    pub fn element(&self, components: &[i64]) -> Result<GroupElement, GradingError> {
        if components.len() != self.rank() {
            return Err(GradingError::Rank {
                expected: self.rank(),
                got: components.len(),
            });
        }
        Ok(GroupElement(
            components
                .iter()
                .zip(&self.orders)
                .map(|(&c, &d)| c.mod_floor(&(d as i64)) as u32)
                .collect(),
        ))
    }

    pub fn validate(&self, a: &GroupElement) -> Result<(), GradingError> {
        if a.0.len() != self.rank() {
            return Err(GradingError::Rank {
                expected: self.rank(),
                got: a.0.len(),
            });
        }
        for (index, (&value, &order)) in a.0.iter().zip(&self.orders).enumerate() {
            if value >= order {
                return Err(GradingError::Unreduced {
                    index,
                    value,
                    order,
                });
            }
        }
        Ok(())
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement, GradingError> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(self.add_unchecked(a, b))
    }

    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement, GradingError> {
        self.validate(a)?;
        Ok(self.neg_unchecked(a))
    }

    pub(crate) fn add_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.orders)
                .map(|((&x, &y), &d)| (x + y) % d)
                .collect(),
        )
    }

    pub(crate) fn neg_unchecked(&self, a: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&self.orders)
                .map(|(&x, &d)| (d - x) % d)
                .collect(),
        )
    }

    /// All elements in lexicographic order of components.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = vec![self.zero()];
        for (i, &d) in self.orders.iter().enumerate() {
            out = out
                .into_iter()
                .flat_map(|g| {
                    (0..d).map(move |c| {
                        let mut h = g.clone();
                        h.0[i] = c;
                        h
                    })
                })
                .collect();
        }
        out
    }

    /// The `i`-th standard generator.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut g = self.zero();
        g.0[i] = 1;
        g
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bicharacter {
    root_order: u32,
    /// Reduced modulo `root_order`.
    exponents: Vec<Vec<u32>>,
}

impl Bicharacter {
    /// Square exponent matrix; entries are reduced modulo `root_order`. No
    /// axioms are checked here, see [`bicharacter_validate`].
    pub fn new(root_order: u32, exponents: Vec<Vec<i64>>) -> Result<Self, GradingError> {
        CyclotomicField::get(root_order)?;
        let rank = exponents.len();
        if exponents.iter().any(|row| row.len() != rank) {
            return Err(GradingError::Shape { rank });
        }
        let n = root_order as i64;
        Ok(Bicharacter {
            root_order,
            exponents: exponents
                .into_iter()
                .map(|row| row.into_iter().map(|e| e.mod_floor(&n) as u32).collect())
                .collect(),
        })
    }

    /// `ε ≡ 1` on the trivial group.
    pub fn trivial() -> Self {
        Bicharacter {
            root_order: 1,
            exponents: Vec::new(),
        }
    }

    /// `ε(a, b) = (-1)^{ab}` on `Z_2`.
    pub fn super_sign() -> Self {
        Bicharacter {
            root_order: 2,
            exponents: vec![vec![1]],
        }
    }

    pub fn root_order(&self) -> u32 {
        self.root_order
    }

    pub fn exponents(&self) -> &[Vec<u32>] {
        &self.exponents
    }

    pub fn field(&self) -> &'static CyclotomicField {
        CyclotomicField::get(self.root_order).expect("root order checked at construction")
    }

    /// Exponent `k` with `ε(a, b) = ζ_N^k`.
    pub fn exponent(&self, a: &GroupElement, b: &GroupElement) -> u32 {
        let n = self.root_order as u64;
        let mut acc = 0u64;
        for (i, &ai) in a.0.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.0.iter().enumerate() {
                acc = (acc + ai as u64 * self.exponents[i][j] as u64 % n * bj as u64) % n;
            }
        }
        acc as u32
    }

    pub fn eval(&self, a: &GroupElement, b: &GroupElement) -> Scalar {
        self.field().root(self.exponent(a, b) as i64)
    }
}

/// Checks `M[i][j] + M[j][i] ≡ 0` and `d_i M[i][j] ≡ d_j M[i][j] ≡ 0 (mod N)`.
///
/// The defect at a failing generator pair `(i, j)` has three components:
/// `ζ^{M_ij + M_ji} - 1`, `ζ^{d_i M_ij} - 1` and `ζ^{d_j M_ij} - 1`.
pub fn bicharacter_validate(group: &FiniteAbelianGroup, eps: &Bicharacter) -> CheckReport {
    let id = IdentityId::BicharacterAxioms;
    let k = group.rank();
    if eps.exponents.len() != k {
        // A shape mismatch has no generator pair to blame; report the
        // dimension as a one-index witness.
        let field = eps.field();
        let witness = Witness {
            indices: vec![eps.exponents.len()],
            defect: Defect::Vector(vec![field.one()]),
        };
        return CheckReport::fail(id, witness, 0);
    }
    let n = eps.root_order as u64;
    let field = eps.field();
    let mut checked = 0;
    for i in 0..k {
        for j in 0..k {
            checked += 1;
            let m = eps.exponents[i][j] as u64;
            let skew = (m + eps.exponents[j][i] as u64) % n;
            let left = (group.orders[i] as u64 * m) % n;
            let right = (group.orders[j] as u64 * m) % n;
            if skew != 0 || left != 0 || right != 0 {
                let one = field.one();
                let defect = [skew, left, right]
                    .iter()
                    .map(|&e| &field.root(e as i64) - &one)
                    .collect();
                let witness = Witness {
                    indices: vec![i, j],
                    defect: Defect::Vector(defect),
                };
                return CheckReport::fail(id, witness, checked);
            }
        }
    }
    CheckReport::pass(id, checked)
}

/// A validated pair of grading group and bicharacter: the shared context of
/// every module, map and representation.
#[derive(Debug, PartialEq, Eq)]
pub struct Grading {
    group: FiniteAbelianGroup,
    bicharacter: Bicharacter,
}

impl Grading {
    pub fn new(group: FiniteAbelianGroup, bicharacter: Bicharacter) -> Result<Arc<Self>, GradingError> {
        if bicharacter.exponents.len() != group.rank() {
            return Err(GradingError::Shape { rank: group.rank() });
        }
        let report = bicharacter_validate(&group, &bicharacter);
        if let Some(w) = report.witness {
            return Err(GradingError::Violation(w.indices[0], w.indices[1]));
        }
        Ok(Arc::new(Grading { group, bicharacter }))
    }

    pub fn trivial() -> Arc<Self> {
        Grading::new(FiniteAbelianGroup::trivial(), Bicharacter::trivial()).expect("trivial grading")
    }

    /// `Z_2` with `ε(a, b) = (-1)^{ab}`.
    pub fn super_z2() -> Arc<Self> {
        Grading::new(FiniteAbelianGroup::new(vec![2]).expect("Z_2"), Bicharacter::super_sign())
            .expect("super grading")
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn bicharacter(&self) -> &Bicharacter {
        &self.bicharacter
    }

    pub fn field(&self) -> &'static CyclotomicField {
        self.bicharacter.field()
    }

    pub fn eps(&self, a: &GroupElement, b: &GroupElement) -> Scalar {
        self.bicharacter.eval(a, b)
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.group.add_unchecked(a, b)
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        self.group.neg_unchecked(a)
    }
}
