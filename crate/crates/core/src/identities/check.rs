use rayon::prelude::*;
use thiserror::Error;

use crate::graded::{AlgebraSpec, GradedError, Homogeneous};
use crate::grading::bicharacter_validate;

use super::{Bindings, CheckReport, Defect, Evaluator, IdentityId, Suite, Target, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("`{identity}` needs {input}, which the spec does not provide")]
    Missing { identity: IdentityId, input: String },
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("`{identity}` takes {expected} arguments, got {got}")]
    Arity {
        identity: IdentityId,
        expected: usize,
        got: usize,
    },
    #[error("`{0}` is not evaluated on algebra elements")]
    NotPointwise(IdentityId),
    #[error(transparent)]
    Graded(#[from] GradedError),
}

/// Digits of `rank` in base `n`, most significant first.
fn tuple_at(mut rank: u64, n: u64, arity: usize) -> Vec<usize> {
    let mut out = vec![0; arity];
    for slot in out.iter_mut().rev() {
        *slot = (rank % n) as usize;
        rank /= n;
    }
    out
}

/// Checks `id` on every tuple of basis vectors, in lexicographic order.
pub fn check(spec: &AlgebraSpec, id: IdentityId, bindings: &Bindings) -> Result<CheckReport, CheckError> {
    let ev = Evaluator::new(spec, bindings);
    ev.require(id)?;
    match id {
        IdentityId::BicharacterAxioms => {
            let g = spec.module().grading();
            return Ok(bicharacter_validate(g.group(), g.bicharacter()));
        }
        IdentityId::FormNondegenerate => {
            let form = ev.form().expect("requirements checked");
            // one global test, none at all on the zero module
            let count = u64::from(spec.dim() > 0);
            return Ok(match form.left_radical_vector() {
                None => CheckReport::pass(id, count),
                Some(v) => CheckReport::fail(
                    id,
                    Witness {
                        indices: vec![],
                        defect: Defect::Vector(v.into_coeffs()),
                    },
                    count,
                ),
            });
        }
        _ => {}
    }
    let module = spec.module();
    let n = module.dim() as u64;
    let arity = id.arity();
    let total = n.pow(arity as u32);
    let basis: Vec<Homogeneous> = (0..module.dim()).map(|i| module.basis_homogeneous(i)).collect();
    let first_failure = (0..total).into_par_iter().find_map_first(|rank| {
        let indices = tuple_at(rank, n, arity);
        let args: Vec<Homogeneous> = indices.iter().map(|&i| basis[i].clone()).collect();
        let defect = ev.evaluate(id, &args);
        (!defect.is_zero()).then_some((rank, Witness { indices, defect }))
    });
    Ok(match first_failure {
        Some((rank, witness)) => CheckReport::fail(id, witness, rank + 1),
        None => CheckReport::pass(id, total),
    })
}

pub fn check_suite(spec: &AlgebraSpec, suite: Suite, bindings: &Bindings) -> Result<Vec<CheckReport>, CheckError> {
    suite.members().iter().map(|&id| check(spec, id, bindings)).collect()
}

/// Checks the union of the targets' identities, each once, in first-mention order.
pub fn check_targets(
    spec: &AlgebraSpec,
    targets: &[Target],
    bindings: &Bindings,
) -> Result<Vec<CheckReport>, CheckError> {
    let mut ids: Vec<IdentityId> = Vec::new();
    for t in targets {
        for id in t.identities() {
            if !ids.contains(&id) {
                ids.push(id);
            }
        }
    }
    ids.into_iter().map(|id| check(spec, id, bindings)).collect()
}

/// Defect of `id` at a tuple of basis indices (generator indices for
/// `bicharacter`, the empty tuple for `form-nondegenerate`).
pub fn evaluate(
    spec: &AlgebraSpec,
    id: IdentityId,
    indices: &[usize],
    bindings: &Bindings,
) -> Result<Defect, CheckError> {
    if indices.len() != id.arity() {
        return Err(CheckError::Arity {
            identity: id,
            expected: id.arity(),
            got: indices.len(),
        });
    }
    let ev = Evaluator::new(spec, bindings);
    ev.require(id)?;
    let module = spec.module();
    match id {
        IdentityId::BicharacterAxioms => {
            let g = module.grading();
            let k = g.group().rank();
            if let Some(&i) = indices.iter().find(|&&i| i >= k) {
                return Err(GradedError::IndexOutOfRange {
                    what: "generator".into(),
                    index: i,
                    bound: k,
                }
                .into());
            }
            let (i, j) = (indices[0], indices[1]);
            let eps = g.bicharacter();
            let n = eps.root_order() as u64;
            let m = eps.exponents()[i][j] as u64;
            let d = g.group().cyclic_orders();
            let field = g.field();
            let one = field.one();
            let exps = [
                (m + eps.exponents()[j][i] as u64) % n,
                d[i] as u64 * m % n,
                d[j] as u64 * m % n,
            ];
            Ok(Defect::Vector(
                exps.iter().map(|&e| &field.root(e as i64) - &one).collect(),
            ))
        }
        IdentityId::FormNondegenerate => {
            let form = ev.form().expect("requirements checked");
            Ok(Defect::Vector(match form.left_radical_vector() {
                Some(v) => v.into_coeffs(),
                None => module.zero().into_coeffs(),
            }))
        }
        _ => {
            if let Some(&i) = indices.iter().find(|&&i| i >= module.dim()) {
                return Err(GradedError::IndexOutOfRange {
                    what: "basis".into(),
                    index: i,
                    bound: module.dim(),
                }
                .into());
            }
            let args: Vec<Homogeneous> = indices.iter().map(|&i| module.basis_homogeneous(i)).collect();
            Ok(ev.evaluate(id, &args))
        }
    }
}

/// Defect of `id` at arbitrary homogeneous arguments.
pub fn evaluate_homogeneous(
    spec: &AlgebraSpec,
    id: IdentityId,
    args: &[Homogeneous],
    bindings: &Bindings,
) -> Result<Defect, CheckError> {
    if matches!(id, IdentityId::BicharacterAxioms | IdentityId::FormNondegenerate) {
        return Err(CheckError::NotPointwise(id));
    }
    if args.len() != id.arity() {
        return Err(CheckError::Arity {
            identity: id,
            expected: id.arity(),
            got: args.len(),
        });
    }
    let module = spec.module();
    for h in args {
        match module.homogeneous_degree(&h.element)? {
            Some(d) if d != h.degree => return Err(GradedError::NonHomogeneous.into()),
            _ => module.grading().group().validate(&h.degree).map_err(GradedError::from)?,
        }
    }
    let ev = Evaluator::new(spec, bindings);
    ev.require(id)?;
    Ok(ev.evaluate(id, args))
}
