//! Pointwise operators on homogeneous arguments.
//!
//! `ε` factors are read from the degrees carried by [`Homogeneous`], never
//! from the support of an element, so a zero element may carry any degree.
//! The `op_*` functions at the bottom are the checked entry points for
//! plain elements.

use crate::grading::GroupElement;
use crate::scalars::Scalar;

use super::{BilinearMap, Element, GradedError, GradedModule, Matrix, Representation};

/// An element together with the degree it is homogeneous of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homogeneous {
    pub element: Element,
    pub degree: GroupElement,
}

/// Evaluation context for the operators: the module whose grading supplies `ε`.
#[derive(Clone, Copy)]
pub struct Ops<'a> {
    module: &'a GradedModule,
}

impl<'a> Ops<'a> {
    pub fn new(module: &'a GradedModule) -> Self {
        Ops { module }
    }

    pub fn module(&self) -> &'a GradedModule {
        self.module
    }

    pub fn eps(&self, a: &GroupElement, b: &GroupElement) -> Scalar {
        self.module.grading().eps(a, b)
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.module.grading().add(a, b)
    }

    fn add3(&self, a: &GroupElement, b: &GroupElement, c: &GroupElement) -> GroupElement {
        self.add(&self.add(a, b), c)
    }

    fn zero_scalar(&self) -> Scalar {
        self.module.field().zero()
    }

    fn one(&self) -> Scalar {
        self.module.field().one()
    }

    fn minus_one(&self) -> Scalar {
        self.module.field().integer(-1)
    }

    /// `m(x, y)`, homogeneous of degree `deg x + deg y`.
    pub fn mul(&self, m: &BilinearMap, x: &Homogeneous, y: &Homogeneous) -> Homogeneous {
        Homogeneous {
            element: m.apply(self.module, &x.element, &y.element),
            degree: self.add(&x.degree, &y.degree),
        }
    }

    /// `Σ c_i · h_i` for terms of one common degree.
    pub fn combine(&self, degree: GroupElement, terms: &[(Scalar, &Homogeneous)]) -> Homogeneous {
        let mut element = self.module.zero();
        for (c, h) in terms {
            debug_assert!(h.element.is_zero() || h.degree == degree);
            element.add_scaled(c, &h.element);
        }
        Homogeneous { element, degree }
    }

    /// `x ∗ y - ε(x, y) y ∗ x`
    pub fn commutator(&self, prod: &BilinearMap, x: &Homogeneous, y: &Homogeneous) -> Homogeneous {
        let xy = self.mul(prod, x, y);
        let yx = self.mul(prod, y, x);
        let e = self.eps(&x.degree, &y.degree);
        self.combine(xy.degree.clone(), &[(self.one(), &xy), (-e, &yx)])
    }

    /// `x ◇ y + ε(x, y) y ◇ x`
    pub fn symmetrized(&self, prod: &BilinearMap, x: &Homogeneous, y: &Homogeneous) -> Homogeneous {
        let xy = self.mul(prod, x, y);
        let yx = self.mul(prod, y, x);
        let e = self.eps(&x.degree, &y.degree);
        self.combine(xy.degree.clone(), &[(self.one(), &xy), (e, &yx)])
    }

    /// `P_x(y,z) = [x, y·z] - [x,y]·z - ε(x,y) y·[x,z]`
    pub fn p(
        &self,
        dot: &BilinearMap,
        bracket: &BilinearMap,
        x: &Homogeneous,
        y: &Homogeneous,
        z: &Homogeneous,
    ) -> Homogeneous {
        let t1 = self.mul(bracket, x, &self.mul(dot, y, z));
        let t2 = self.mul(dot, &self.mul(bracket, x, y), z);
        let t3 = self.mul(dot, y, &self.mul(bracket, x, z));
        let e = self.eps(&x.degree, &y.degree);
        let degree = self.add3(&x.degree, &y.degree, &z.degree);
        self.combine(degree, &[(self.one(), &t1), (self.minus_one(), &t2), (-e, &t3)])
    }

    /// Coherence operator `T(y,z)(w) = -ε(y,z)[z, y·w] - [y, z·w] + [y·z, w]`.
    pub fn t_coherence(
        &self,
        dot: &BilinearMap,
        bracket: &BilinearMap,
        y: &Homogeneous,
        z: &Homogeneous,
        w: &Homogeneous,
    ) -> Homogeneous {
        let t1 = self.mul(bracket, z, &self.mul(dot, y, w));
        let t2 = self.mul(bracket, y, &self.mul(dot, z, w));
        let t3 = self.mul(bracket, &self.mul(dot, y, z), w);
        let e = self.eps(&y.degree, &z.degree);
        let degree = self.add3(&y.degree, &z.degree, &w.degree);
        self.combine(degree, &[(-e, &t1), (self.minus_one(), &t2), (self.one(), &t3)])
    }

    /// `F₁(x,y,z) = x∗(y◇z) - ε(x,y) y◇(x∗z) - [x,y]◇z` with `[x,y] = x∗y - ε(x,y) y∗x`.
    pub fn f1(
        &self,
        zinbiel: &BilinearMap,
        prelie: &BilinearMap,
        x: &Homogeneous,
        y: &Homogeneous,
        z: &Homogeneous,
    ) -> Homogeneous {
        let t1 = self.mul(prelie, x, &self.mul(zinbiel, y, z));
        let t2 = self.mul(zinbiel, y, &self.mul(prelie, x, z));
        let t3 = self.mul(zinbiel, &self.commutator(prelie, x, y), z);
        let e = self.eps(&x.degree, &y.degree);
        let degree = self.add3(&x.degree, &y.degree, &z.degree);
        self.combine(degree, &[(self.one(), &t1), (-e, &t2), (self.minus_one(), &t3)])
    }

    /// `F₂(x,y,z) = x◇(y∗z) + ε(x,y) y◇(x∗z) - (x·y)∗z` with `x·y = x◇y + ε(x,y) y◇x`.
    pub fn f2(
        &self,
        zinbiel: &BilinearMap,
        prelie: &BilinearMap,
        x: &Homogeneous,
        y: &Homogeneous,
        z: &Homogeneous,
    ) -> Homogeneous {
        let t1 = self.mul(zinbiel, x, &self.mul(prelie, y, z));
        let t2 = self.mul(zinbiel, y, &self.mul(prelie, x, z));
        let t3 = self.mul(prelie, &self.symmetrized(zinbiel, x, y), z);
        let e = self.eps(&x.degree, &y.degree);
        let degree = self.add3(&x.degree, &y.degree, &z.degree);
        self.combine(degree, &[(self.one(), &t1), (e, &t2), (self.minus_one(), &t3)])
    }

    pub fn rep(&self, rep: &Representation, x: &Homogeneous) -> Matrix {
        rep.operator(&x.element)
    }

    /// `R(x₁,x₂) = ρ(x₁)μ(x₂) - ε(x₁,x₂)μ(x₂)ρ(x₁) - μ([x₁,x₂])`
    pub fn r(
        &self,
        rho: &Representation,
        mu: &Representation,
        bracket: &BilinearMap,
        x1: &Homogeneous,
        x2: &Homogeneous,
    ) -> Matrix {
        let rho1 = self.rep(rho, x1);
        let mu2 = self.rep(mu, x2);
        let mut out = rho1.mul(&mu2);
        out.add_scaled(&-self.eps(&x1.degree, &x2.degree), &mu2.mul(&rho1));
        out.add_scaled(&self.minus_one(), &self.rep(mu, &self.mul(bracket, x1, x2)));
        out
    }

    /// `S(x₁,x₂) = μ(x₁)ρ(x₂) + ε(x₁,x₂)μ(x₂)ρ(x₁) - ρ(x₁·x₂)`
    pub fn s(
        &self,
        rho: &Representation,
        mu: &Representation,
        dot: &BilinearMap,
        x1: &Homogeneous,
        x2: &Homogeneous,
    ) -> Matrix {
        let mut out = self.rep(mu, x1).mul(&self.rep(rho, x2));
        out.add_scaled(
            &self.eps(&x1.degree, &x2.degree),
            &self.rep(mu, x2).mul(&self.rep(rho, x1)),
        );
        out.add_scaled(&self.minus_one(), &self.rep(rho, &self.mul(dot, x1, x2)));
        out
    }

    /// `T_{ρ,μ}(x,y) = -ε(x,y)ρ(y)μ(x) - ρ(x)μ(y) + ρ(x·y)`
    pub fn t_rep(
        &self,
        rho: &Representation,
        mu: &Representation,
        dot: &BilinearMap,
        x: &Homogeneous,
        y: &Homogeneous,
    ) -> Matrix {
        let mut out = self.rep(rho, &self.mul(dot, x, y));
        out.add_scaled(
            &-self.eps(&x.degree, &y.degree),
            &self.rep(rho, y).mul(&self.rep(mu, x)),
        );
        out.add_scaled(&self.minus_one(), &self.rep(rho, x).mul(&self.rep(mu, y)));
        out
    }

    pub(crate) fn zero_matrix(&self, n: usize) -> Matrix {
        let _ = self.zero_scalar();
        Matrix::zero(self.module.field(), n, n)
    }
}

/// Reads degrees off the arguments. `Ok(None)` when some argument is zero,
/// in which case every multilinear operator vanishes.
fn homogeneous_args(
    module: &GradedModule,
    args: &[&Element],
) -> Result<Option<Vec<Homogeneous>>, GradedError> {
    let mut out = Vec::with_capacity(args.len());
    let mut any_zero = false;
    for x in args {
        match module.homogeneous_degree(x)? {
            Some(degree) => out.push(Homogeneous {
                element: (*x).clone(),
                degree,
            }),
            None => any_zero = true,
        }
    }
    Ok((!any_zero).then_some(out))
}

fn check_map(module: &GradedModule, m: &BilinearMap) -> Result<(), GradedError> {
    if m.dim() != module.dim() {
        return Err(GradedError::ContextMismatch);
    }
    Ok(())
}

fn check_rep(module: &GradedModule, rep: &Representation) -> Result<(), GradedError> {
    if rep.algebra_dim() != module.dim() || !rep.carrier().same_context(module) {
        return Err(GradedError::ContextMismatch);
    }
    Ok(())
}

fn check_carriers(a: &Representation, b: &Representation) -> Result<(), GradedError> {
    if a.carrier() != b.carrier() {
        return Err(GradedError::ContextMismatch);
    }
    Ok(())
}

pub fn op_p(
    module: &GradedModule,
    dot: &BilinearMap,
    bracket: &BilinearMap,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Result<Element, GradedError> {
    check_map(module, dot)?;
    check_map(module, bracket)?;
    Ok(match homogeneous_args(module, &[x, y, z])? {
        Some(h) => Ops::new(module).p(dot, bracket, &h[0], &h[1], &h[2]).element,
        None => module.zero(),
    })
}

pub fn op_t_coherence(
    module: &GradedModule,
    dot: &BilinearMap,
    bracket: &BilinearMap,
    y: &Element,
    z: &Element,
    w: &Element,
) -> Result<Element, GradedError> {
    check_map(module, dot)?;
    check_map(module, bracket)?;
    Ok(match homogeneous_args(module, &[y, z, w])? {
        Some(h) => Ops::new(module).t_coherence(dot, bracket, &h[0], &h[1], &h[2]).element,
        None => module.zero(),
    })
}

pub fn op_f1(
    module: &GradedModule,
    zinbiel: &BilinearMap,
    prelie: &BilinearMap,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Result<Element, GradedError> {
    check_map(module, zinbiel)?;
    check_map(module, prelie)?;
    Ok(match homogeneous_args(module, &[x, y, z])? {
        Some(h) => Ops::new(module).f1(zinbiel, prelie, &h[0], &h[1], &h[2]).element,
        None => module.zero(),
    })
}

pub fn op_f2(
    module: &GradedModule,
    zinbiel: &BilinearMap,
    prelie: &BilinearMap,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Result<Element, GradedError> {
    check_map(module, zinbiel)?;
    check_map(module, prelie)?;
    Ok(match homogeneous_args(module, &[x, y, z])? {
        Some(h) => Ops::new(module).f2(zinbiel, prelie, &h[0], &h[1], &h[2]).element,
        None => module.zero(),
    })
}

fn rep_op(
    module: &GradedModule,
    rho: &Representation,
    mu: &Representation,
    product: &BilinearMap,
    x1: &Element,
    x2: &Element,
    f: impl FnOnce(&Ops, &Homogeneous, &Homogeneous) -> Matrix,
) -> Result<Matrix, GradedError> {
    check_map(module, product)?;
    check_rep(module, rho)?;
    check_rep(module, mu)?;
    check_carriers(rho, mu)?;
    let ops = Ops::new(module);
    Ok(match homogeneous_args(module, &[x1, x2])? {
        Some(h) => f(&ops, &h[0], &h[1]),
        None => ops.zero_matrix(rho.carrier().dim()),
    })
}

pub fn op_r(
    module: &GradedModule,
    rho: &Representation,
    mu: &Representation,
    bracket: &BilinearMap,
    x1: &Element,
    x2: &Element,
) -> Result<Matrix, GradedError> {
    rep_op(module, rho, mu, bracket, x1, x2, |ops, a, b| ops.r(rho, mu, bracket, a, b))
}

pub fn op_s(
    module: &GradedModule,
    rho: &Representation,
    mu: &Representation,
    dot: &BilinearMap,
    x1: &Element,
    x2: &Element,
) -> Result<Matrix, GradedError> {
    rep_op(module, rho, mu, dot, x1, x2, |ops, a, b| ops.s(rho, mu, dot, a, b))
}

pub fn op_t_rep(
    module: &GradedModule,
    rho: &Representation,
    mu: &Representation,
    dot: &BilinearMap,
    x: &Element,
    y: &Element,
) -> Result<Matrix, GradedError> {
    rep_op(module, rho, mu, dot, x, y, |ops, a, b| ops.t_rep(rho, mu, dot, a, b))
}
