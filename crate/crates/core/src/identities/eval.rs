use crate::forms::BilinearForm;
use crate::graded::ops::Ops;
use crate::graded::{AlgebraSpec, BilinearMap, Element, GradedModule, Homogeneous, Matrix, Representation};
use crate::grading::GroupElement;
use crate::scalars::Scalar;

use super::check::CheckError;
use super::{Bindings, Defect, IdentityId};

/// Resolved inputs of a spec, ready to evaluate identities pointwise.
pub struct Evaluator<'a> {
    module: &'a GradedModule,
    ops: Ops<'a>,
    dot: Option<&'a BilinearMap>,
    bracket: Option<&'a BilinearMap>,
    zinbiel: Option<&'a BilinearMap>,
    prelie: Option<&'a BilinearMap>,
    rho: Option<&'a Representation>,
    mu: Option<&'a Representation>,
    form: Option<&'a BilinearForm>,
    bindings: Bindings,
}

impl<'a> Evaluator<'a> {
    pub fn new(spec: &'a AlgebraSpec, bindings: &Bindings) -> Self {
        Evaluator {
            module: spec.module(),
            ops: Ops::new(spec.module()),
            dot: spec.product("dot"),
            bracket: spec.product("bracket"),
            zinbiel: spec.product("zinbiel"),
            prelie: spec.product("prelie"),
            rho: spec.representation(&bindings.rho),
            mu: spec.representation(&bindings.mu),
            form: spec.form(&bindings.form),
            bindings: bindings.clone(),
        }
    }

    pub fn module(&self) -> &'a GradedModule {
        self.module
    }

    pub fn form(&self) -> Option<&'a BilinearForm> {
        self.form
    }

    /// Fails with the first input `id` needs that the spec lacks.
    pub fn require(&self, id: IdentityId) -> Result<(), CheckError> {
        let req = id.requirements();
        let missing = |name: &str| Err(CheckError::Missing {
            identity: id,
            input: name.to_string(),
        });
        for (needed, present, name) in [
            (req.dot, self.dot.is_some(), "product `dot`".to_string()),
            (req.bracket, self.bracket.is_some(), "product `bracket`".to_string()),
            (req.zinbiel, self.zinbiel.is_some(), "product `zinbiel`".to_string()),
            (req.prelie, self.prelie.is_some(), "product `prelie`".to_string()),
            (req.rho, self.rho.is_some(), format!("representation `{}`", self.bindings.rho)),
            (req.mu, self.mu.is_some(), format!("representation `{}`", self.bindings.mu)),
            (req.form, self.form.is_some(), format!("form `{}`", self.bindings.form)),
        ] {
            if needed && !present {
                return missing(&name);
            }
        }
        if req.rho && req.mu {
            let (rho, mu) = (self.rho.expect("checked"), self.mu.expect("checked"));
            if rho.carrier() != mu.carrier() {
                return Err(CheckError::ContextMismatch(format!(
                    "`{}` and `{}` act on different carriers",
                    self.bindings.rho, self.bindings.mu
                )));
            }
        }
        Ok(())
    }

    fn dot(&self) -> &'a BilinearMap {
        self.dot.expect("requirements checked")
    }
    fn bracket(&self) -> &'a BilinearMap {
        self.bracket.expect("requirements checked")
    }
    fn zinbiel(&self) -> &'a BilinearMap {
        self.zinbiel.expect("requirements checked")
    }
    fn prelie(&self) -> &'a BilinearMap {
        self.prelie.expect("requirements checked")
    }
    fn rho(&self) -> &'a Representation {
        self.rho.expect("requirements checked")
    }
    fn mu(&self) -> &'a Representation {
        self.mu.expect("requirements checked")
    }
    fn b(&self) -> &'a BilinearForm {
        self.form.expect("requirements checked")
    }

    fn eps(&self, a: &GroupElement, b: &GroupElement) -> Scalar {
        self.ops.eps(a, b)
    }

    fn eps_sum(&self, a: &GroupElement, b: &GroupElement, c: &GroupElement) -> Scalar {
        self.ops.eps(a, &self.ops.add(b, c))
    }

    fn one(&self) -> Scalar {
        self.module.field().one()
    }

    /// `Σ c_i v_i` over elements of the module.
    fn lin(&self, terms: &[(Scalar, &Element)]) -> Defect {
        let mut out = self.module.zero();
        for (c, v) in terms {
            out.add_scaled(c, v);
        }
        Defect::Vector(out.into_coeffs())
    }

    fn lin_matrix(&self, first: Matrix, rest: &[(Scalar, &Matrix)]) -> Defect {
        let mut out = first;
        for (c, m) in rest {
            out.add_scaled(c, m);
        }
        Defect::Matrix(out)
    }

    /// Value of the identity's defect (left side minus right side) on
    /// homogeneous arguments. The argument count must equal the arity;
    /// arity-0 identities are not pointwise and are handled by the checker.
    pub fn evaluate(&self, id: IdentityId, a: &[Homogeneous]) -> Defect {
        use IdentityId::*;
        debug_assert_eq!(a.len(), id.arity());
        let o = &self.ops;
        let one = self.one();
        let m1 = -&one;
        match id {
            BicharacterAxioms | FormNondegenerate => {
                unreachable!("{id} is not evaluated pointwise")
            }
            EpsCommutative => {
                let (x, y) = (&a[0], &a[1]);
                let xy = o.mul(self.dot(), x, y);
                let yx = o.mul(self.dot(), y, x);
                self.lin(&[(one, &xy.element), (-self.eps(&x.degree, &y.degree), &yx.element)])
            }
            Associative => {
                let (x, y, z) = (&a[0], &a[1], &a[2]);
                let d = self.dot();
                let l = o.mul(d, &o.mul(d, x, y), z);
                let r = o.mul(d, x, &o.mul(d, y, z));
                self.lin(&[(one, &l.element), (m1, &r.element)])
            }
            LieColorSkew => {
                let (x, y) = (&a[0], &a[1]);
                let xy = o.mul(self.bracket(), x, y);
                let yx = o.mul(self.bracket(), y, x);
                self.lin(&[(one, &xy.element), (self.eps(&x.degree, &y.degree), &yx.element)])
            }
            LieColorJacobi => {
                let (x, y, z) = (&a[0], &a[1], &a[2]);
                let br = self.bracket();
                let t1 = o.mul(br, x, &o.mul(br, y, z));
                let t2 = o.mul(br, z, &o.mul(br, x, y));
                let t3 = o.mul(br, y, &o.mul(br, z, x));
                self.lin(&[
                    (self.eps(&z.degree, &x.degree), &t1.element),
                    (self.eps(&y.degree, &z.degree), &t2.element),
                    (self.eps(&x.degree, &y.degree), &t3.element),
                ])
            }
            PreLieColor => {
                let (x, y, z) = (&a[0], &a[1], &a[2]);
                let p = self.prelie();
                let t1 = o.mul(p, &o.mul(p, x, y), z);
                let t2 = o.mul(p, x, &o.mul(p, y, z));
                let t3 = o.mul(p, &o.mul(p, y, x), z);
                let t4 = o.mul(p, y, &o.mul(p, x, z));
                let e = self.eps(&x.degree, &y.degree);
                self.lin(&[
                    (one, &t1.element),
                    (m1, &t2.element),
                    (-&e, &t3.element),
                    (e, &t4.element),
                ])
            }
            ZinbielColor => {
                let (x, y, z) = (&a[0], &a[1], &a[2]);
                let zb = self.zinbiel();
                let t1 = o.mul(zb, x, &o.mul(zb, y, z));
                let t2 = o.mul(zb, &o.mul(zb, x, y), z);
                let t3 = o.mul(zb, &o.mul(zb, y, x), z);
                self.lin(&[
                    (one, &t1.element),
                    (m1, &t2.element),
                    (-self.eps(&x.degree, &y.degree), &t3.element),
                ])
            }
            HertlingManin => {
                let (x, y, z, w) = (&a[0], &a[1], &a[2], &a[3]);
                let (d, br) = (self.dot(), self.bracket());
                let l = o.p(d, br, &o.mul(d, x, y), z, w);
                let r1 = o.mul(d, x, &o.p(d, br, y, z, w));
                let r2 = o.mul(d, y, &o.p(d, br, x, z, w));
                self.lin(&[
                    (one, &l.element),
                    (m1, &r1.element),
                    (-self.eps(&x.degree, &y.degree), &r2.element),
                ])
            }
            AssocRep => {
                let (x, y) = (&a[0], &a[1]);
                let mu = self.mu();
                let l = o.rep(mu, &o.mul(self.dot(), x, y));
                let r = o.rep(mu, x).mul(&o.rep(mu, y));
                self.lin_matrix(l, &[(m1, &r)])
            }
            LieRep => {
                let (x, y) = (&a[0], &a[1]);
                let rho = self.rho();
                let l = o.rep(rho, &o.mul(self.bracket(), x, y));
                let (rx, ry) = (o.rep(rho, x), o.rep(rho, y));
                let e = self.eps(&x.degree, &y.degree);
                self.lin_matrix(l, &[(m1, &rx.mul(&ry)), (e, &ry.mul(&rx))])
            }
            FmRepR => {
                let (x1, x2, x3) = (&a[0], &a[1], &a[2]);
                let (rho, mu, br) = (self.rho(), self.mu(), self.bracket());
                let l = o.r(rho, mu, br, &o.mul(self.dot(), x1, x2), x3);
                let t1 = o.rep(mu, x1).mul(&o.r(rho, mu, br, x2, x3));
                let t2 = o.rep(mu, x2).mul(&o.r(rho, mu, br, x1, x3));
                let e = self.eps(&x1.degree, &x2.degree);
                self.lin_matrix(l, &[(m1, &t1), (-e, &t2)])
            }
            FmRepS => {
                let (x1, x2, x3) = (&a[0], &a[1], &a[2]);
                let (rho, mu, d) = (self.rho(), self.mu(), self.dot());
                let l = o.rep(mu, &o.p(d, self.bracket(), x1, x2, x3));
                let s = o.s(rho, mu, d, x2, x3);
                let m = o.rep(mu, x1);
                let e = self.eps_sum(&x1.degree, &x2.degree, &x3.degree);
                self.lin_matrix(l, &[(-e, &s.mul(&m)), (one, &m.mul(&s))])
            }
            DualHypR => {
                let (x, y, z) = (&a[0], &a[1], &a[2]);
                let (rho, mu, br) = (self.rho(), self.mu(), self.bracket());
                let l = o.r(rho, mu, br, &o.mul(self.dot(), x, y), z);
                let t1 = o.r(rho, mu, br, y, z).mul(&o.rep(mu, x));
                let t2 = o.r(rho, mu, br, x, z).mul(&o.rep(mu, y));
                let e1 = self.eps_sum(&x.degree, &y.degree, &z.degree);
                let e2 = self.eps(&y.degree, &z.degree);
                self.lin_matrix(l, &[(-e1, &t1), (-e2, &t2)])
            }
            DualHypT => {
                let (x, y, z) = (&a[0], &a[1], &a[2]);
                let (rho, mu, d) = (self.rho(), self.mu(), self.dot());
                let l = o.rep(mu, &o.p(d, self.bracket(), x, y, z));
                let t = o.t_rep(rho, mu, d, y, z);
                let m = o.rep(mu, x);
                let e = self.eps_sum(&x.degree, &y.degree, &z.degree);
                self.lin_matrix(l, &[(e, &t.mul(&m)), (m1, &m.mul(&t))])
            }
            Coherence1 => {
                let (x, y, z, w) = (&a[0], &a[1], &a[2], &a[3]);
                let (d, br) = (self.dot(), self.bracket());
                let l = o.p(d, br, &o.mul(d, x, y), z, w);
                let r1 = o.p(d, br, y, z, &o.mul(d, x, w));
                let r2 = o.p(d, br, x, z, &o.mul(d, y, w));
                self.lin(&[
                    (one, &l.element),
                    (-self.eps_sum(&x.degree, &y.degree, &z.degree), &r1.element),
                    (-self.eps(&y.degree, &z.degree), &r2.element),
                ])
            }
            Coherence2 => {
                let (x, y, z, w) = (&a[0], &a[1], &a[2], &a[3]);
                let (d, br) = (self.dot(), self.bracket());
                let l = o.mul(d, &o.p(d, br, x, y, z), w);
                let r1 = o.t_coherence(d, br, y, z, &o.mul(d, x, w));
                let r2 = o.mul(d, x, &o.t_coherence(d, br, y, z, w));
                self.lin(&[
                    (one, &l.element),
                    (self.eps_sum(&x.degree, &y.degree, &z.degree), &r1.element),
                    (m1, &r2.element),
                ])
            }
            PreFm1 => {
                let (x, y, z, w) = (&a[0], &a[1], &a[2], &a[3]);
                let (zb, pl) = (self.zinbiel(), self.prelie());
                let xy = o.symmetrized(zb, x, y);
                let l = o.f1(zb, pl, &xy, z, w);
                let r1 = o.mul(zb, x, &o.f1(zb, pl, y, z, w));
                let r2 = o.mul(zb, y, &o.f1(zb, pl, x, z, w));
                self.lin(&[
                    (one, &l.element),
                    (m1, &r1.element),
                    (-self.eps(&x.degree, &y.degree), &r2.element),
                ])
            }
            PreFm2 => {
                let (x, y, z, w) = (&a[0], &a[1], &a[2], &a[3]);
                let (zb, pl) = (self.zinbiel(), self.prelie());
                let e_yz = self.eps(&y.degree, &z.degree);
                let e_x_yz = self.eps_sum(&x.degree, &y.degree, &z.degree);
                let f1 = o.f1(zb, pl, x, y, z);
                let f1s = o.f1(zb, pl, x, z, y);
                let f2 = o.f2(zb, pl, y, z, x);
                let inner = o.combine(f1.degree.clone(), &[(one.clone(), &f1), (e_yz, &f1s), (e_x_yz.clone(), &f2)]);
                let l = o.mul(zb, &inner, w);
                let r1 = o.f2(zb, pl, y, z, &o.mul(zb, x, w));
                let r2 = o.mul(zb, x, &o.f2(zb, pl, y, z, w));
                self.lin(&[(one.clone(), &l.element), (-e_x_yz, &r1.element), (one, &r2.element)])
            }
            FormSymmetric => {
                let (x, y) = (&a[0].element, &a[1].element);
                let b = self.b();
                Defect::Vector(vec![&b.eval(x, y) - &b.eval(y, x)])
            }
            FormInvariance => {
                let (x, y, z) = (&a[0], &a[1], &a[2]);
                let (d, br, b) = (self.dot(), self.bracket(), self.b());
                let dot_part = &b.eval(&o.mul(d, x, y).element, &z.element)
                    - &b.eval(&x.element, &o.mul(d, y, z).element);
                let bracket_part = &b.eval(&o.mul(br, x, y).element, &z.element)
                    - &b.eval(&x.element, &o.mul(br, y, z).element);
                let symmetry = &b.eval(&x.element, &y.element) - &b.eval(&y.element, &x.element);
                Defect::Vector(vec![dot_part, bracket_part, symmetry])
            }
            FormPTransfer => {
                let (x, y, z, w) = (&a[0], &a[1], &a[2], &a[3]);
                let (d, br, b) = (self.dot(), self.bracket(), self.b());
                let l = b.eval(&o.p(d, br, x, y, z).element, &w.element);
                let r = b.eval(&z.element, &o.p(d, br, x, y, w).element);
                let e = self.eps(&o.add(&x.degree, &y.degree), &z.degree);
                Defect::Vector(vec![&l - &(&e * &r)])
            }
        }
    }
}
