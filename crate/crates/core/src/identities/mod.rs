//! Catalog of identity systems and the exhaustive basis-tuple checker.
//!
//! Every identity here is multilinear over homogeneous components and its
//! `ε` factors depend only on degrees, so evaluating it on all tuples of
//! basis vectors decides it.

mod check;
mod eval;
mod report;

use std::fmt;
use std::str::FromStr;

pub use check::{check, check_suite, check_targets, evaluate, evaluate_homogeneous, CheckError};
pub use eval::Evaluator;
pub use report::{all_passed, CheckReport, Defect, Verdict, Witness};

/// Named identity in the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    /// Skew symmetry and well-definedness of the bicharacter exponents.
    BicharacterAxioms,
    /// `x·y = ε(x,y) y·x`
    EpsCommutative,
    /// `(x·y)·z = x·(y·z)`
    Associative,
    /// `[x,y] = -ε(x,y)[y,x]`
    LieColorSkew,
    /// `ε(z,x)[x,[y,z]] + ε(y,z)[z,[x,y]] + ε(x,y)[y,[z,x]] = 0`
    LieColorJacobi,
    /// `(x∗y)∗z - x∗(y∗z) = ε(x,y)((y∗x)∗z - y∗(x∗z))`
    PreLieColor,
    /// `x◇(y◇z) = (x◇y)◇z + ε(x,y)(y◇x)◇z`
    ZinbielColor,
    /// `P_{x·y}(z,w) = x·P_y(z,w) + ε(x,y) y·P_x(z,w)`
    HertlingManin,
    /// `μ(x·y) = μ(x)μ(y)`
    AssocRep,
    /// `ρ([x,y]) = ρ(x)ρ(y) - ε(x,y)ρ(y)ρ(x)`
    LieRep,
    /// `R(x₁·x₂,x₃) = μ(x₁)R(x₂,x₃) + ε(x₁,x₂)μ(x₂)R(x₁,x₃)`
    FmRepR,
    /// `μ(P_{x₁}(x₂,x₃)) = ε(x₁,x₂+x₃)S(x₂,x₃)μ(x₁) - μ(x₁)S(x₂,x₃)`
    FmRepS,
    /// `R(x·y,z) = ε(x,y+z)R(y,z)μ(x) + ε(y,z)R(x,z)μ(y)`
    DualHypR,
    /// `μ(P_x(y,z)) = -ε(x,y+z)T(y,z)μ(x) + μ(x)T(y,z)`
    DualHypT,
    /// `P_{x·y}(z,w) = ε(x,y+z)P_y(z,x·w) + ε(y,z)P_x(z,y·w)`
    Coherence1,
    /// `P_x(y,z)·w = -ε(x,y+z)T(y,z)(x·w) + x·T(y,z)(w)`
    Coherence2,
    /// `F₁(x·y,z,w) = x◇F₁(y,z,w) + ε(x,y)y◇F₁(x,z,w)`
    PreFm1,
    /// `(F₁(x,y,z) + ε(y,z)F₁(x,z,y) + ε(x,y+z)F₂(y,z,x))◇w
    ///     = ε(x,y+z)F₂(y,z,x◇w) - x◇F₂(y,z,w)`
    PreFm2,
    /// `B(x,y) = B(y,x)`
    FormSymmetric,
    /// `B(x·y,z) = B(x,y·z)`, `B([x,y],z) = B(x,[y,z])` and `B(x,y) = B(y,x)`
    FormInvariance,
    /// `det B ≠ 0`
    FormNondegenerate,
    /// `B(P_x(y,z),w) = ε(x+y,z) B(z,P_x(y,w))`
    FormPTransfer,
}

/// Inputs an identity reads from an [`AlgebraSpec`](crate::graded::AlgebraSpec).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Requirements {
    pub dot: bool,
    pub bracket: bool,
    pub zinbiel: bool,
    pub prelie: bool,
    pub rho: bool,
    pub mu: bool,
    pub form: bool,
}

impl Requirements {
    pub fn union(self, other: Requirements) -> Requirements {
        Requirements {
            dot: self.dot || other.dot,
            bracket: self.bracket || other.bracket,
            zinbiel: self.zinbiel || other.zinbiel,
            prelie: self.prelie || other.prelie,
            rho: self.rho || other.rho,
            mu: self.mu || other.mu,
            form: self.form || other.form,
        }
    }
}

impl IdentityId {
    pub const ALL: [IdentityId; 22] = [
        IdentityId::BicharacterAxioms,
        IdentityId::EpsCommutative,
        IdentityId::Associative,
        IdentityId::LieColorSkew,
        IdentityId::LieColorJacobi,
        IdentityId::PreLieColor,
        IdentityId::ZinbielColor,
        IdentityId::HertlingManin,
        IdentityId::AssocRep,
        IdentityId::LieRep,
        IdentityId::FmRepR,
        IdentityId::FmRepS,
        IdentityId::DualHypR,
        IdentityId::DualHypT,
        IdentityId::Coherence1,
        IdentityId::Coherence2,
        IdentityId::PreFm1,
        IdentityId::PreFm2,
        IdentityId::FormSymmetric,
        IdentityId::FormInvariance,
        IdentityId::FormNondegenerate,
        IdentityId::FormPTransfer,
    ];

    pub fn name(self) -> &'static str {
        use IdentityId::*;
        match self {
            BicharacterAxioms => "bicharacter",
            EpsCommutative => "eps-commutative",
            Associative => "associative",
            LieColorSkew => "lie-color-skew",
            LieColorJacobi => "lie-color-jacobi",
            PreLieColor => "pre-lie-color",
            ZinbielColor => "zinbiel-color",
            HertlingManin => "hertling-manin",
            AssocRep => "assoc-rep",
            LieRep => "lie-rep",
            FmRepR => "fm-rep-R",
            FmRepS => "fm-rep-S",
            DualHypR => "dual-hyp-R",
            DualHypT => "dual-hyp-T",
            Coherence1 => "coherence-1",
            Coherence2 => "coherence-2",
            PreFm1 => "pre-fm-1",
            PreFm2 => "pre-fm-2",
            FormSymmetric => "form-symmetric",
            FormInvariance => "form-invariance",
            FormNondegenerate => "form-nondegenerate",
            FormPTransfer => "form-p-transfer",
        }
    }

    /// Number of basis indices quantified over.
    pub fn arity(self) -> usize {
        use IdentityId::*;
        match self {
            FormNondegenerate => 0,
            BicharacterAxioms | EpsCommutative | LieColorSkew | AssocRep | LieRep
            | FormSymmetric => 2,
            Associative | LieColorJacobi | PreLieColor | ZinbielColor | FmRepR | FmRepS
            | DualHypR | DualHypT | FormInvariance => 3,
            HertlingManin | Coherence1 | Coherence2 | PreFm1 | PreFm2 | FormPTransfer => 4,
        }
    }

    pub fn requirements(self) -> Requirements {
        use IdentityId::*;
        let none = Requirements::default();
        let fm = Requirements {
            dot: true,
            bracket: true,
            ..none
        };
        let fm_rep = Requirements {
            rho: true,
            mu: true,
            ..fm
        };
        match self {
            BicharacterAxioms => none,
            EpsCommutative | Associative => Requirements { dot: true, ..none },
            LieColorSkew | LieColorJacobi => Requirements {
                bracket: true,
                ..none
            },
            PreLieColor => Requirements {
                prelie: true,
                ..none
            },
            ZinbielColor => Requirements {
                zinbiel: true,
                ..none
            },
            HertlingManin | Coherence1 | Coherence2 => fm,
            AssocRep => Requirements {
                dot: true,
                mu: true,
                ..none
            },
            LieRep => Requirements {
                bracket: true,
                rho: true,
                ..none
            },
            FmRepR | FmRepS | DualHypR | DualHypT => fm_rep,
            PreFm1 | PreFm2 => Requirements {
                zinbiel: true,
                prelie: true,
                ..none
            },
            FormSymmetric | FormNondegenerate => Requirements { form: true, ..none },
            FormInvariance | FormPTransfer => Requirements { form: true, ..fm },
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown identity or suite `{0}`")]
pub struct UnknownName(pub String);

impl FromStr for IdentityId {
    type Err = UnknownName;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| UnknownName(s.to_string()))
    }
}

/// Named bundles of identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    FManifoldColor,
    FmRepresentation,
    Coherence,
    PreFManifoldColor,
    /// Hypotheses on a form: symmetric, invariant, nondegenerate.
    InvariantForm,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::FManifoldColor,
        Suite::FmRepresentation,
        Suite::Coherence,
        Suite::PreFManifoldColor,
        Suite::InvariantForm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::FManifoldColor => "f-manifold-color",
            Suite::FmRepresentation => "fm-representation",
            Suite::Coherence => "coherence",
            Suite::PreFManifoldColor => "pre-f-manifold-color",
            Suite::InvariantForm => "invariant-form",
        }
    }

    pub fn members(self) -> &'static [IdentityId] {
        use IdentityId::*;
        match self {
            Suite::FManifoldColor => &[
                EpsCommutative,
                Associative,
                LieColorSkew,
                LieColorJacobi,
                HertlingManin,
            ],
            Suite::FmRepresentation => &[AssocRep, LieRep, FmRepR, FmRepS],
            Suite::Coherence => &[
                EpsCommutative,
                Associative,
                LieColorSkew,
                LieColorJacobi,
                HertlingManin,
                Coherence1,
                Coherence2,
            ],
            Suite::PreFManifoldColor => &[ZinbielColor, PreLieColor, PreFm1, PreFm2],
            Suite::InvariantForm => &[FormSymmetric, FormInvariance, FormNondegenerate],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = UnknownName;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| UnknownName(s.to_string()))
    }
}

/// A single identity or a suite, as named on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Identity(IdentityId),
    Suite(Suite),
}

impl Target {
    pub fn identities(&self) -> Vec<IdentityId> {
        match self {
            Target::Identity(id) => vec![*id],
            Target::Suite(s) => s.members().to_vec(),
        }
    }

    pub fn requirements(&self) -> Requirements {
        self.identities()
            .into_iter()
            .fold(Requirements::default(), |acc, id| acc.union(id.requirements()))
    }
}

impl FromStr for Target {
    type Err = UnknownName;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse()
            .map(Target::Suite)
            .or_else(|_| s.parse().map(Target::Identity))
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Identity(id) => id.fmt(f),
            Target::Suite(s) => s.fmt(f),
        }
    }
}

/// Which named representations and form of a spec play the roles of
/// `ρ`, `μ` and `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bindings {
    pub rho: String,
    pub mu: String,
    pub form: String,
}

impl Default for Bindings {
    fn default() -> Self {
        Bindings {
            rho: "rho".into(),
            mu: "mu".into(),
            form: "B".into(),
        }
    }
}

impl Bindings {
    /// Representation pair stored as `<prefix>.rho` / `<prefix>.mu`.
    pub fn with_rep_prefix(prefix: &str) -> Self {
        Bindings {
            rho: format!("{prefix}.rho"),
            mu: format!("{prefix}.mu"),
            ..Bindings::default()
        }
    }

    pub fn with_form(mut self, form: &str) -> Self {
        self.form = form.to_string();
        self
    }
}
