//! Instance search: fill grading-respecting structure constants from a
//! finite coefficient pool and keep the candidates that pass the targets.
//!
//! When the pool admits at most `trials` assignments the space is
//! enumerated in full; otherwise `trials` assignments are sampled. A sampled
//! trial first draws a density in {0, 1/3, 2/3, 1} per product, then fills
//! each slot with a nonzero pool value with that probability (zero
//! otherwise), so sparse and vanishing products are common. Trial `t` draws
//! from stream `t` of a ChaCha8 generator seeded with `seed`, so the result
//! does not depend on thread scheduling.

use std::collections::HashSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::forms::BilinearForm;
use crate::graded::{AlgebraSpec, BilinearMap, GradedError, GradedModule};
use crate::grading::{Grading, GroupElement};
use crate::identities::{self, Bindings, CheckError, IdentityId, Target};
use crate::io::emit_spec;
use crate::scalars::Scalar;

#[derive(Debug, Clone)]
pub struct SearchParams {
    pub grading: Arc<Grading>,
    pub degrees: Vec<GroupElement>,
    pub targets: Vec<Target>,
    pub pool: Vec<Scalar>,
    pub trials: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("invalid search parameters: {0}")]
    Invalid(String),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Graded(#[from] GradedError),
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    /// Distinct passing instances in order of discovery.
    pub found: Vec<AlgebraSpec>,
    pub candidates: u64,
    pub exhaustive: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Dot,
    Bracket,
    Zinbiel,
    Prelie,
    Form,
}

impl Kind {
    fn product_name(self) -> &'static str {
        match self {
            Kind::Dot => "dot",
            Kind::Bracket => "bracket",
            Kind::Zinbiel => "zinbiel",
            Kind::Prelie => "prelie",
            Kind::Form => "B",
        }
    }
}

/// A free coefficient at `(i, j, k)`, mirrored to `(j, i, k)` times `mirror`.
#[derive(Debug, Clone)]
struct Slot {
    kind: Kind,
    i: usize,
    j: usize,
    k: usize,
    mirror: Option<Scalar>,
}

fn slots(module: &GradedModule, kinds: &[(Kind, bool)]) -> Vec<Slot> {
    let g = module.grading();
    let n = module.dim();
    let mut out = Vec::new();
    for &(kind, symmetric) in kinds {
        for i in 0..n {
            for j in 0..n {
                if symmetric && j < i {
                    continue;
                }
                let e = g.eps(module.degree(j), module.degree(i));
                let mirror = match (symmetric && i != j, kind) {
                    (false, _) => None,
                    (true, Kind::Dot) => Some(e.clone()),
                    (true, Kind::Bracket) => Some(-&e),
                    (true, _) => Some(module.field().one()),
                };
                // x·x = ε(x,x) x·x and [x,x] = -ε(x,x)[x,x] force zeros
                if symmetric && i == j {
                    let forced = match kind {
                        Kind::Dot => !e.is_one(),
                        Kind::Bracket => e.is_one(),
                        _ => false,
                    };
                    if forced {
                        continue;
                    }
                }
                if kind == Kind::Form {
                    out.push(Slot { kind, i, j, k: 0, mirror });
                    continue;
                }
                let target = g.add(module.degree(i), module.degree(j));
                for k in (0..n).filter(|&k| *module.degree(k) == target) {
                    out.push(Slot {
                        kind,
                        i,
                        j,
                        k,
                        mirror: mirror.clone(),
                    });
                }
            }
        }
    }
    out
}

fn build(module: &GradedModule, kinds: &[(Kind, bool)], slots: &[Slot], values: &[&Scalar]) -> AlgebraSpec {
    let mut spec = AlgebraSpec::new(module.clone());
    for &(kind, _) in kinds {
        let mut constants = Vec::new();
        for (slot, &v) in slots.iter().zip(values).filter(|(s, _)| s.kind == kind) {
            if v.is_zero() {
                continue;
            }
            constants.push((slot.i, slot.j, slot.k, v.clone()));
            if let Some(m) = &slot.mirror {
                constants.push((slot.j, slot.i, slot.k, m * v));
            }
        }
        if kind == Kind::Form {
            let form = BilinearForm::from_entries(module, constants.into_iter().map(|(i, j, _, c)| (i, j, c)), "B")
                .expect("indices in range");
            spec.insert_form("B", form).expect("same module");
        } else {
            let map = BilinearMap::from_constants(module, kind.product_name(), constants)
                .expect("slots respect the grading");
            spec.insert_product(map).expect("same module");
        }
    }
    spec
}

fn sample<'a>(
    seed: u64,
    trial: u64,
    kinds: &[(Kind, bool)],
    slots: &[Slot],
    pool: &'a [Scalar],
    nonzero: &[&'a Scalar],
) -> Vec<&'a Scalar> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    if nonzero.len() == pool.len() {
        return slots.iter().map(|_| &pool[rng.gen_range(0..pool.len())]).collect();
    }
    let zero = pool.iter().find(|c| c.is_zero()).expect("pool contains zero");
    let density: Vec<(Kind, u32)> = kinds.iter().map(|&(k, _)| (k, rng.gen_range(0..4))).collect();
    slots
        .iter()
        .map(|slot| {
            let d = density.iter().find(|(k, _)| *k == slot.kind).expect("kind sampled").1;
            if rng.gen_range(0..3) < d {
                nonzero[rng.gen_range(0..nonzero.len())]
            } else {
                zero
            }
        })
        .collect()
}

pub fn search(params: &SearchParams) -> Result<SearchOutcome, SearchError> {
    if params.trials == 0 {
        return Err(SearchError::Invalid("trials must be at least 1".into()));
    }
    if params.pool.is_empty() {
        return Err(SearchError::Invalid("coefficient pool is empty".into()));
    }
    if params.targets.is_empty() {
        return Err(SearchError::Invalid("no target identity or suite".into()));
    }
    let field = params.grading.field();
    if params.pool.iter().any(|c| !std::ptr::eq(c.field(), field)) {
        return Err(SearchError::Invalid("pool scalars live in a different field".into()));
    }
    let module = GradedModule::new(params.grading.clone(), params.degrees.clone())?;

    let mut ids: Vec<IdentityId> = Vec::new();
    for id in params.targets.iter().flat_map(Target::identities) {
        if !ids.contains(&id) {
            ids.push(id);
        }
    }
    let req = params
        .targets
        .iter()
        .fold(Default::default(), |acc: identities::Requirements, t| acc.union(t.requirements()));
    if req.rho || req.mu {
        return Err(SearchError::Invalid(
            "representation identities are not searched; target algebra identities".into(),
        ));
    }
    let has = |id| ids.contains(&id);
    let mut kinds = Vec::new();
    for (needed, kind, symmetric) in [
        (req.dot, Kind::Dot, has(IdentityId::EpsCommutative)),
        (req.bracket, Kind::Bracket, has(IdentityId::LieColorSkew)),
        (req.zinbiel, Kind::Zinbiel, false),
        (req.prelie, Kind::Prelie, false),
        (
            req.form,
            Kind::Form,
            has(IdentityId::FormSymmetric) || has(IdentityId::FormInvariance),
        ),
    ] {
        if needed {
            kinds.push((kind, symmetric));
        }
    }
    let slots = slots(&module, &kinds);
    let pool = &params.pool;
    let p = pool.len() as u64;
    let space = u32::try_from(slots.len()).ok().and_then(|s| p.checked_pow(s));
    let exhaustive = space.is_some_and(|s| s <= params.trials);
    let candidates = if exhaustive { space.expect("checked") } else { params.trials };

    let nonzero: Vec<&Scalar> = pool.iter().filter(|c| !c.is_zero()).collect();
    let bindings = Bindings::default();
    let results: Vec<Option<(String, AlgebraSpec)>> = (0..candidates)
        .into_par_iter()
        .map(|t| {
            let values: Vec<&Scalar> = if exhaustive {
                let mut r = t;
                (0..slots.len())
                    .map(|_| {
                        let v = &pool[(r % p) as usize];
                        r /= p;
                        v
                    })
                    .collect()
            } else {
                sample(params.seed, t, &kinds, &slots, pool, &nonzero)
            };
            let spec = build(&module, &kinds, &slots, &values);
            // stop at the first failing identity
            for &id in &ids {
                if !identities::check(&spec, id, &bindings)?.passed() {
                    return Ok(None);
                }
            }
            Ok(Some((emit_spec(&spec), spec)))
        })
        .collect::<Result<_, CheckError>>()?;

    let mut seen = HashSet::new();
    let found = results
        .into_iter()
        .flatten()
        .filter(|(text, _)| seen.insert(text.clone()))
        .map(|(_, spec)| spec)
        .collect();
    Ok(SearchOutcome {
        found,
        candidates,
        exhaustive,
    })
}
