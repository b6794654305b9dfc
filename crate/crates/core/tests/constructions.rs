mod common;

use std::sync::Arc;

use common::{dense, with_adjoint, Naive};
use fmc_core::constructions::{
    adjoint_fm_representation, double_dual_identification, dual_representation, dual_representation_checked,
    induce_from_pre_f, semidirect_product, symmetrize_zinbiel, ConstructionError,
};
use fmc_core::graded::{AlgebraSpec, Element, GradedModule, Homogeneous, Matrix};
use fmc_core::grading::{Bicharacter, FiniteAbelianGroup, Grading};
use fmc_core::identities::{all_passed, check, check_suite, evaluate_homogeneous, Bindings, IdentityId, Suite};
use fmc_core::io::corpus::corpus_entry;
use fmc_core::io::{emit_spec, parse_spec};
use fmc_core::scalars::Scalar;
use fmc_core::search::{search, SearchParams};
use proptest::prelude::*;

fn corpus(name: &str) -> AlgebraSpec {
    corpus_entry(name).unwrap().spec()
}

fn suite_passes(spec: &AlgebraSpec, suite: Suite, b: &Bindings) -> bool {
    all_passed(&check_suite(spec, suite, b).unwrap())
}

fn column(m: &common::Mx, c: usize) -> Vec<Scalar> {
    m.iter().map(|row| row[c].clone()).collect()
}

#[test]
fn adjoint_is_a_representation_with_p_as_r_and_s() {
    for name in ["E1", "E2", "E3"] {
        let spec = with_adjoint(&corpus(name));
        let b = Bindings::with_rep_prefix("adjoint");
        assert!(suite_passes(&spec, Suite::FmRepresentation, &b), "{name}");

        let naive = Naive::from_text(&emit_spec(&spec)).with_reps("adjoint.rho", "adjoint.mu");
        for id in ["assoc-rep", "lie-rep", "fm-rep-R", "fm-rep-S"] {
            assert!(naive.check(id).passed, "{name}: {id}");
        }
        let n = spec.dim();
        for x in 0..n {
            for y in 0..n {
                let r = naive.basis_r(x, y);
                let s = naive.basis_s(x, y);
                for z in 0..n {
                    // R_{ad,L}(x,y)z = P_x(y,z)
                    assert_eq!(column(&r, z), naive.basis_p(x, y, z), "{name} R at {x},{y},{z}");
                    // S_{ad,L}(x,y)z = ε(x+y,z) P_z(x,y)
                    let e = naive.eps_sum_first(x, y, z);
                    let p: Vec<Scalar> = naive.basis_p(z, x, y).iter().map(|c| &e * c).collect();
                    assert_eq!(column(&s, z), p, "{name} S at {x},{y},{z}");
                }
            }
        }
    }
}

#[test]
fn p_is_nonzero_on_e2() {
    let naive = Naive::from_text(corpus_entry("E2").unwrap().text);
    let f = naive.field;
    assert_eq!(naive.basis_p(1, 0, 0), vec![f.zero(), f.one()]);
}

#[test]
fn semidirect_product_of_e2_with_its_adjoint() {
    let spec = with_adjoint(&corpus("E2"));
    let semi = semidirect_product(&spec, &Bindings::with_rep_prefix("adjoint")).unwrap();
    assert_eq!(semi.dim(), 4);
    let reports = check_suite(&semi, Suite::FManifoldColor, &Bindings::default()).unwrap();
    assert!(all_passed(&reports));
    let hm = reports.iter().find(|r| r.identity == IdentityId::HertlingManin).unwrap();
    assert_eq!(hm.tuples_checked, 256);

    let naive = Naive::from_text(&emit_spec(&semi));
    for id in ["eps-commutative", "associative", "lie-color-skew", "lie-color-jacobi", "hertling-manin"] {
        assert!(naive.check(id).passed, "{id}");
    }
    // A is a subalgebra, V an abelian ideal squaring to zero
    let e2 = corpus("E2");
    for name in ["dot", "bracket"] {
        let (a, s) = (e2.product(name).unwrap(), semi.product(name).unwrap());
        for i in 0..2 {
            for j in 0..2 {
                let got = s.basis_value(i, j).map(|v| v.coeffs()[..2].to_vec());
                let want = a.basis_value(i, j).map(|v| v.coeffs().to_vec());
                assert_eq!(got.unwrap_or_else(|| vec![e2.module().field().zero(); 2]), want.unwrap_or_else(|| vec![e2.module().field().zero(); 2]));
            }
        }
        for i in 2..4 {
            for j in 2..4 {
                assert!(s.basis_value(i, j).is_none_or(Element::is_zero));
            }
        }
    }
}

/// Conjugates every action matrix by the diagonal `d`, which squares to 1.
fn conjugate(m: &Matrix, d: &Matrix) -> Matrix {
    d.mul(m).mul(d)
}

fn dual_round_trip(spec: &AlgebraSpec, prefix: &str) {
    let b = Bindings::with_rep_prefix(prefix);
    let (rho_star, mu_star) = dual_representation(spec, &b).unwrap();
    let mut once = spec.clone();
    once.insert_representation("d.rho", rho_star).unwrap();
    once.insert_representation("d.mu", mu_star).unwrap();
    let (rho2, mu2) = dual_representation(&once, &Bindings::with_rep_prefix("d")).unwrap();
    let rho = spec.representation(&b.rho).unwrap();
    let mu = spec.representation(&b.mu).unwrap();
    assert_eq!(rho2.carrier(), rho.carrier());
    let s = double_dual_identification(rho.carrier());
    for i in 0..spec.dim() {
        assert_eq!(&conjugate(rho2.action(i), &s), rho.action(i));
        assert_eq!(&conjugate(mu2.action(i), &s), mu.action(i));
    }
}

#[test]
fn dual_of_dual_returns_the_original() {
    for name in ["E1", "E2", "E3"] {
        dual_round_trip(&with_adjoint(&corpus(name)), "adjoint");
    }
    // an odd carrier, where the identification is not the identity
    let g = Grading::super_z2();
    let odd = g.group().element(&[1]).unwrap();
    let carrier = GradedModule::new(g.clone(), vec![odd.clone(), g.group().zero()]).unwrap();
    let spec = corpus("E2");
    let f = spec.module().field();
    let rho = fmc_core::graded::Representation::from_entries(
        spec.module(),
        carrier.clone(),
        [(0, 0, 0, f.one()), (1, 0, 1, f.integer(3))],
        "rho",
    )
    .unwrap();
    let mu = fmc_core::graded::Representation::from_entries(spec.module(), carrier, [(1, 1, 0, f.one())], "mu").unwrap();
    let mut spec = spec;
    spec.insert_representation("x.rho", rho).unwrap();
    spec.insert_representation("x.mu", mu).unwrap();
    dual_round_trip(&spec, "x");
}

#[test]
fn dual_representation_closure_on_corpus_and_search() {
    let mut instances: Vec<AlgebraSpec> = ["E1", "E2", "E3"].iter().map(|n| with_adjoint(&corpus(n))).collect();
    instances.push(with_adjoint(&semidirect_product(&with_adjoint(&corpus("E2")), &Bindings::with_rep_prefix("adjoint")).unwrap()));
    let g = Grading::super_z2();
    let found = search(&SearchParams {
        grading: g.clone(),
        degrees: vec![g.group().zero(), g.group().element(&[1]).unwrap()],
        targets: vec![fmc_core::identities::Target::Suite(Suite::FManifoldColor)],
        pool: ["0", "1", "-1"].iter().map(|l| Scalar::parse(l, g.field()).unwrap()).collect(),
        trials: 1000,
        seed: 3,
    })
    .unwrap()
    .found;
    instances.extend(found.iter().map(with_adjoint));

    let b = Bindings::with_rep_prefix("adjoint");
    let mut qualifying = 0;
    for spec in &instances {
        let hyp = [IdentityId::DualHypR, IdentityId::DualHypT]
            .iter()
            .all(|&id| check(spec, id, &b).unwrap().passed());
        match dual_representation_checked(spec, &b) {
            Ok((rho, mu)) => {
                assert!(hyp);
                qualifying += 1;
                let mut out = spec.clone();
                out.insert_representation("d.rho", rho).unwrap();
                out.insert_representation("d.mu", mu).unwrap();
                assert!(suite_passes(&out, Suite::FmRepresentation, &Bindings::with_rep_prefix("d")));
                let naive = Naive::from_text(&emit_spec(&out)).with_reps("d.rho", "d.mu");
                for id in ["assoc-rep", "lie-rep", "fm-rep-R", "fm-rep-S"] {
                    assert!(naive.check(id).passed, "{id}");
                }
            }
            Err(ConstructionError::Precondition { .. }) => assert!(!hyp),
            Err(e) => panic!("{e}"),
        }
    }
    assert!(qualifying >= 3, "only {qualifying} instances satisfy the dual hypotheses");
}

#[test]
fn symmetrized_zinbiel_is_commutative_associative() {
    let e4 = corpus("E4");
    let (dot, frak_l) = symmetrize_zinbiel(&e4).unwrap();
    let mut out = e4.with_product(dot).unwrap();
    out.insert_representation("frakL.mu", frak_l).unwrap();
    let b = Bindings::with_rep_prefix("frakL");
    for id in [IdentityId::EpsCommutative, IdentityId::Associative, IdentityId::AssocRep] {
        assert!(check(&out, id, &b).unwrap().passed(), "{id}");
    }
    let naive = Naive::from_text(&emit_spec(&out)).with_reps("frakL.rho", "frakL.mu");
    for id in ["eps-commutative", "associative", "assoc-rep"] {
        assert!(naive.check(id).passed, "{id}");
    }
    // a·a = 2b
    let f = out.module().field();
    assert_eq!(out.product("dot").unwrap().basis_value(0, 0).unwrap().coeffs(), &[f.zero(), f.integer(2)]);
}

fn induced_checks(spec: &AlgebraSpec) {
    let induced = induce_from_pre_f(spec).unwrap();
    let mut out = induced.spec;
    out.insert_representation("induced.rho", induced.l).unwrap();
    out.insert_representation("induced.mu", induced.frak_l).unwrap();
    let b = Bindings::with_rep_prefix("induced");
    assert!(suite_passes(&out, Suite::FManifoldColor, &b));
    assert!(suite_passes(&out, Suite::FmRepresentation, &b));
    let naive = Naive::from_text(&emit_spec(&out)).with_reps("induced.rho", "induced.mu");
    let n = out.dim();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                assert!(naive.pointwise_pf_defect(x, y, z).iter().all(Scalar::is_zero));
            }
        }
    }
    assert!(naive.check("hertling-manin").passed);
}

#[test]
fn pre_f_induction_on_e5_and_search_results() {
    induced_checks(&corpus("E5"));
    for (grading, degrees) in [
        (Grading::trivial(), vec![vec![], vec![]]),
        (Grading::super_z2(), vec![vec![0], vec![1]]),
        (
            Grading::new(FiniteAbelianGroup::new(vec![3]).unwrap(), Bicharacter::new(3, vec![vec![0]]).unwrap()).unwrap(),
            vec![vec![0], vec![1]],
        ),
    ] {
        let degrees = degrees.iter().map(|d| grading.group().element(d).unwrap()).collect();
        let out = search(&SearchParams {
            grading: Arc::clone(&grading),
            degrees,
            targets: vec![fmc_core::identities::Target::Suite(Suite::PreFManifoldColor)],
            pool: ["0", "1", "-1"].iter().map(|l| Scalar::parse(l, grading.field()).unwrap()).collect(),
            trials: 2000,
            seed: 5,
        })
        .unwrap();
        assert!(!out.found.is_empty());
        for spec in &out.found {
            induced_checks(spec);
        }
    }
}

#[test]
fn constructions_refuse_failed_hypotheses() {
    let text = corpus_entry("E2").unwrap().text.replacen(r#"[1, 0, 1, "-1"]"#, r#"[1, 0, 1, "1"]"#, 1);
    let bad = parse_spec(&text).unwrap();
    let err = adjoint_fm_representation(&bad).unwrap_err();
    let failures = err.failures();
    assert!(failures.iter().any(|r| r.identity == IdentityId::LieColorSkew));
    assert!(matches!(induce_from_pre_f(&corpus("E4")), Err(ConstructionError::Missing { .. })));
    assert!(matches!(
        semidirect_product(&corpus("E2"), &Bindings::default()),
        Err(ConstructionError::Missing { .. })
    ));
}

// ---- basis sufficiency: multilinearity carries basis verdicts to all homogeneous arguments ----

fn random_homogeneous(spec: &AlgebraSpec, picks: &[(usize, i64, i64)]) -> Vec<Homogeneous> {
    let m = spec.module();
    let f = m.field();
    picks
        .iter()
        .map(|&(i, a, b)| {
            // combination of all basis vectors sharing b_i's degree
            let d = m.degree(i % m.dim()).clone();
            let mut coeffs = vec![f.zero(); m.dim()];
            for (k, c) in coeffs.iter_mut().enumerate() {
                if *m.degree(k) == d {
                    *c = f.integer(a + (k as i64) * b);
                }
            }
            Homogeneous {
                element: m.element(coeffs).unwrap(),
                degree: d,
            }
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn passing_identities_hold_on_homogeneous_combinations(
        which in 0usize..4,
        picks in proptest::collection::vec((0usize..4, -3i64..4, -3i64..4), 4),
    ) {
        let (spec, b) = match which {
            0 => (corpus("E1"), Bindings::default()),
            1 => (with_adjoint(&corpus("E2")), Bindings::with_rep_prefix("adjoint")),
            2 => (corpus("E3"), Bindings::default()),
            _ => (semidirect_product(&with_adjoint(&corpus("E2")), &Bindings::with_rep_prefix("adjoint")).unwrap(), Bindings::default()),
        };
        let mut ids = Suite::FManifoldColor.members().to_vec();
        if which == 1 {
            ids.extend(Suite::FmRepresentation.members());
        }
        for id in ids {
            prop_assert!(check(&spec, id, &b).unwrap().passed());
            let args = random_homogeneous(&spec, &picks[..id.arity()]);
            let d = evaluate_homogeneous(&spec, id, &args, &b).unwrap();
            prop_assert!(common::Dense::is_zero(&dense(&d)), "{} at {:?}", id, picks);
        }
    }
}
