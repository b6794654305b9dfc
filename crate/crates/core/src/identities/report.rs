use crate::graded::Matrix;
use crate::scalars::Scalar;

use super::IdentityId;

/// The nonzero residue of an identity at a witness tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Defect {
    /// Coefficients of an algebra element, or a list of scalar components.
    Vector(Vec<Scalar>),
    /// An operator on a representation space.
    Matrix(Matrix),
}

impl Defect {
    pub fn is_zero(&self) -> bool {
        match self {
            Defect::Vector(v) => v.iter().all(Scalar::is_zero),
            Defect::Matrix(m) => m.is_zero(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Basis indices of the failing tuple (generator indices for the
    /// bicharacter axioms, empty for nondegeneracy).
    pub indices: Vec<usize>,
    pub defect: Defect,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

/// Outcome of checking one identity.
///
/// On failure `tuples_checked` is the lexicographic rank of the witness plus
/// one, so the count does not depend on how the tuple space was scheduled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub identity: IdentityId,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub tuples_checked: u64,
}

impl CheckReport {
    pub fn pass(identity: IdentityId, tuples_checked: u64) -> Self {
        CheckReport {
            identity,
            verdict: Verdict::Pass,
            witness: None,
            tuples_checked,
        }
    }

    pub fn fail(identity: IdentityId, witness: Witness, tuples_checked: u64) -> Self {
        CheckReport {
            identity,
            verdict: Verdict::Fail,
            witness: Some(witness),
            tuples_checked,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(CheckReport::passed)
}
