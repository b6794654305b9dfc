//! Commutator, symmetrization, adjoint representation, semidirect product,
//! dual representation and the pre-F induction.
//!
//! Constructions with hypotheses check them first and refuse with the
//! failing reports.

use thiserror::Error;

use crate::graded::{
    commutator, symmetrization, AlgebraSpec, BilinearMap, Element, GradedError, GradedModule, Matrix,
    Representation,
};
use crate::identities::{self, all_passed, Bindings, CheckError, CheckReport, IdentityId, Suite};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{construction}: hypotheses do not hold")]
    Precondition {
        construction: &'static str,
        reports: Vec<CheckReport>,
    },
    #[error("{construction}: spec has no {what}")]
    Missing {
        construction: &'static str,
        what: String,
    },
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Graded(#[from] GradedError),
}

impl ConstructionError {
    /// The failing reports of a refused precondition.
    pub fn failures(&self) -> Vec<&CheckReport> {
        match self {
            ConstructionError::Precondition { reports, .. } => {
                reports.iter().filter(|r| !r.passed()).collect()
            }
            _ => Vec::new(),
        }
    }
}

fn require_suites(
    construction: &'static str,
    spec: &AlgebraSpec,
    suites: &[Suite],
    extra: &[IdentityId],
    bindings: &Bindings,
) -> Result<Vec<CheckReport>, ConstructionError> {
    let mut reports = Vec::new();
    for &suite in suites {
        reports.extend(identities::check_suite(spec, suite, bindings)?);
    }
    for &id in extra {
        reports.push(identities::check(spec, id, bindings)?);
    }
    if !all_passed(&reports) {
        return Err(ConstructionError::Precondition {
            construction,
            reports,
        });
    }
    Ok(reports)
}

fn product<'a>(
    construction: &'static str,
    spec: &'a AlgebraSpec,
    name: &str,
) -> Result<&'a BilinearMap, ConstructionError> {
    spec.product(name).ok_or_else(|| ConstructionError::Missing {
        construction,
        what: format!("product `{name}`"),
    })
}

fn rep_pair<'a>(
    construction: &'static str,
    spec: &'a AlgebraSpec,
    bindings: &Bindings,
) -> Result<(&'a Representation, &'a Representation), ConstructionError> {
    let get = |name: &str| {
        spec.representation(name).ok_or_else(|| ConstructionError::Missing {
            construction,
            what: format!("representation `{name}`"),
        })
    };
    let (rho, mu) = (get(&bindings.rho)?, get(&bindings.mu)?);
    if rho.carrier() != mu.carrier() {
        return Err(CheckError::ContextMismatch(format!(
            "`{}` and `{}` act on different carriers",
            bindings.rho, bindings.mu
        ))
        .into());
    }
    Ok((rho, mu))
}

/// `[x,y] = x∗y - ε(x,y) y∗x`. No hypothesis: a pre-Lie color input gives a
/// Lie color bracket, anything else gives whatever the formula gives.
pub fn commutator_bracket(module: &GradedModule, prelie: &BilinearMap) -> BilinearMap {
    commutator(module, prelie, "bracket")
}

/// `x·y = x◇y + ε(x,y) y◇x` and `𝔏_x y = x◇y`, from the spec's `zinbiel`
/// product, which must satisfy the Zinbiel color identity.
pub fn symmetrize_zinbiel(spec: &AlgebraSpec) -> Result<(BilinearMap, Representation), ConstructionError> {
    const NAME: &str = "symmetrize";
    let zinbiel = product(NAME, spec, "zinbiel")?;
    require_suites(NAME, spec, &[], &[IdentityId::ZinbielColor], &Bindings::default())?;
    let module = spec.module();
    Ok((
        symmetrization(module, zinbiel, "dot"),
        Representation::left_multiplication(module, zinbiel),
    ))
}

/// `(ad, L)` with `ad_x y = [x,y]` and `L_x y = x·y`, for an F-manifold color algebra.
pub fn adjoint_fm_representation(
    spec: &AlgebraSpec,
) -> Result<(Representation, Representation), ConstructionError> {
    const NAME: &str = "adjoint";
    let dot = product(NAME, spec, "dot")?;
    let bracket = product(NAME, spec, "bracket")?;
    require_suites(NAME, spec, &[Suite::FManifoldColor], &[], &Bindings::default())?;
    let module = spec.module();
    Ok((
        Representation::left_multiplication(module, bracket),
        Representation::left_multiplication(module, dot),
    ))
}

/// `A ⊕ V` with `[x₁+v₁, x₂+v₂] = [x₁,x₂] + ρ(x₁)v₂ - ε(x₁,x₂)ρ(x₂)v₁` and
/// `(x₁+v₁)·(x₂+v₂) = x₁·x₂ + μ(x₁)v₂ + ε(x₁,x₂)μ(x₂)v₁`.
///
/// The basis lists `A` first, then `V`. Only `dot` and `bracket` are carried over.
pub fn semidirect_product(spec: &AlgebraSpec, bindings: &Bindings) -> Result<AlgebraSpec, ConstructionError> {
    const NAME: &str = "semidirect";
    let dot = product(NAME, spec, "dot")?;
    let bracket = product(NAME, spec, "bracket")?;
    let (rho, mu) = rep_pair(NAME, spec, bindings)?;
    require_suites(
        NAME,
        spec,
        &[Suite::FManifoldColor, Suite::FmRepresentation],
        &[],
        bindings,
    )?;
    let a = spec.module();
    let v = rho.carrier();
    let sum = a.direct_sum(v)?;
    let (n, m) = (a.dim(), v.dim());
    let grading = a.grading();
    let embed_a = |x: &Element| {
        let mut coeffs = x.coeffs().to_vec();
        coeffs.extend((0..m).map(|_| a.field().zero()));
        Element::from_coeffs(coeffs)
    };
    let embed_v = |x: Element| {
        let mut coeffs: Vec<_> = (0..n).map(|_| a.field().zero()).collect();
        coeffs.extend(x.into_coeffs());
        Element::from_coeffs(coeffs)
    };
    let build = |name: &str, base: &BilinearMap, rep: &Representation, sign: i64| {
        BilinearMap::from_fn(&sum, name, |i, j| match (i < n, j < n) {
            (true, true) => base.basis_value(i, j).map(embed_a).unwrap_or_else(|| sum.zero()),
            (true, false) => embed_v(rep.action(i).column(j - n)),
            (false, true) => {
                let e = grading.eps(v.degree(i - n), a.degree(j));
                let c = if sign < 0 { -e } else { e };
                embed_v(rep.action(j).column(i - n).scale(&c))
            }
            (false, false) => sum.zero(),
        })
    };
    let mut out = AlgebraSpec::new(sum.clone());
    out.insert_product(build("bracket", bracket, rho, -1))?;
    out.insert_product(build("dot", dot, mu, 1))?;
    Ok(out)
}

/// Dual action: `⟨φ*(x)α, v⟩ = -ε(x, α)⟨α, φ(x)v⟩` on the dual basis.
fn dual_action(module: &GradedModule, rep: &Representation, sign: i64) -> Vec<Matrix> {
    let carrier = rep.carrier();
    let grading = module.grading();
    let field = module.field();
    let n = carrier.dim();
    (0..module.dim())
        .map(|i| {
            let src = rep.action(i);
            let mut out = Matrix::zero(field, n, n);
            for (r, c, val) in src.nonzero() {
                // ⟨φ*(a_i) α_r, v_c⟩ = -ε(a_i, -deg v_r) φ(a_i)_{rc}
                let e = grading.eps(module.degree(i), &grading.neg(carrier.degree(r)));
                let coeff = if sign < 0 { -&(&e * val) } else { &e * val };
                out.set(c, r, coeff);
            }
            out
        })
        .collect()
}

/// `(V*, ρ*, -μ*)`, with the dual basis of degrees `-deg v_i` and
/// `⟨ρ*(x)α, v⟩ = -ε(x,α)⟨α, ρ(x)v⟩`, `⟨μ*(x)α, v⟩ = -ε(x,α)⟨α, μ(x)v⟩`.
/// No hypotheses are checked; see [`dual_representation_checked`].
pub fn dual_representation(
    spec: &AlgebraSpec,
    bindings: &Bindings,
) -> Result<(Representation, Representation), ConstructionError> {
    let (rho, mu) = rep_pair("dual", spec, bindings)?;
    let module = spec.module();
    let dual = rho.carrier().dual();
    let rho_star = Representation::new(module, dual.clone(), dual_action(module, rho, -1), "rho*")?;
    let minus_mu_star = Representation::new(module, dual, dual_action(module, mu, 1), "-mu*")?;
    Ok((rho_star, minus_mu_star))
}

/// [`dual_representation`] after confirming that `A` is an F-manifold color
/// algebra, `(V, ρ, μ)` a representation, and `dual-hyp-R`, `dual-hyp-T` hold.
pub fn dual_representation_checked(
    spec: &AlgebraSpec,
    bindings: &Bindings,
) -> Result<(Representation, Representation), ConstructionError> {
    rep_pair("dual", spec, bindings)?;
    require_suites(
        "dual",
        spec,
        &[Suite::FManifoldColor, Suite::FmRepresentation],
        &[IdentityId::DualHypR, IdentityId::DualHypT],
        bindings,
    )?;
    dual_representation(spec, bindings)
}

/// The canonical map `V → V**`, `v_i ↦ ε(v_i, v_i) α**_i`, as a diagonal matrix.
/// Conjugating the double dual's actions by it recovers the original actions.
pub fn double_dual_identification(carrier: &GradedModule) -> Matrix {
    let grading = carrier.grading();
    let n = carrier.dim();
    let mut m = Matrix::zero(carrier.field(), n, n);
    for i in 0..n {
        let d = carrier.degree(i);
        m.set(i, i, grading.eps(d, d));
    }
    m
}

/// Output of [`induce_from_pre_f`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Induced {
    /// The input with `dot` and `bracket` added.
    pub spec: AlgebraSpec,
    /// `L_x y = x∗y`, in the `ρ` role.
    pub l: Representation,
    /// `𝔏_x y = x◇y`, in the `μ` role.
    pub frak_l: Representation,
}

/// `x·y = x◇y + ε(x,y)y◇x`, `[x,y] = x∗y - ε(x,y)y∗x` with the representation
/// `(L, 𝔏)`, for a pre-F-manifold color algebra.
pub fn induce_from_pre_f(spec: &AlgebraSpec) -> Result<Induced, ConstructionError> {
    const NAME: &str = "from-pre-f";
    let zinbiel = product(NAME, spec, "zinbiel")?;
    let prelie = product(NAME, spec, "prelie")?;
    require_suites(NAME, spec, &[Suite::PreFManifoldColor], &[], &Bindings::default())?;
    let module = spec.module();
    let mut out = spec.clone();
    out.insert_product(symmetrization(module, zinbiel, "dot"))?;
    out.insert_product(commutator_bracket(module, prelie))?;
    Ok(Induced {
        spec: out,
        l: Representation::left_multiplication(module, prelie),
        frak_l: Representation::left_multiplication(module, zinbiel),
    })
}
