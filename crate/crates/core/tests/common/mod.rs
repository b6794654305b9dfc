//! Independent naive evaluator. Reads spec JSON directly into dense arrays,
//! computes ε from the exponent matrix, and evaluates every identity by
//! writing each formula out on dense vectors and matrices. Only scalar
//! arithmetic is shared with the library.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;

use fmc_core::identities::Defect;
use fmc_core::scalars::{CyclotomicField, Scalar};
use rand::seq::SliceRandom;
use rand::Rng;
use serde_json::Value;

pub type V = Vec<Scalar>;
pub type Mx = Vec<Vec<Scalar>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dense {
    V(V),
    M(Mx),
}

impl Dense {
    pub fn is_zero(&self) -> bool {
        match self {
            Dense::V(v) => v.iter().all(Scalar::is_zero),
            Dense::M(m) => m.iter().flatten().all(Scalar::is_zero),
        }
    }
}

/// The library's defect in the oracle's representation.
pub fn dense(defect: &Defect) -> Dense {
    match defect {
        Defect::Vector(v) => Dense::V(v.clone()),
        Defect::Matrix(m) => Dense::M((0..m.rows()).map(|r| (0..m.cols()).map(|c| m.get(r, c).clone()).collect()).collect()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveReport {
    pub passed: bool,
    pub indices: Option<Vec<usize>>,
    pub defect: Option<Dense>,
    pub tuples_checked: u64,
}

/// A degree-tagged vector.
#[derive(Clone)]
struct H {
    v: V,
    d: Vec<i64>,
}

pub struct Naive {
    pub n: usize,
    pub field: &'static CyclotomicField,
    root: i64,
    orders: Vec<i64>,
    exps: Vec<Vec<i64>>,
    pub deg: Vec<Vec<i64>>,
    products: BTreeMap<String, Vec<Vec<V>>>,
    reps: BTreeMap<String, Vec<Mx>>,
    forms: BTreeMap<String, Mx>,
    pub rho: String,
    pub mu: String,
    pub form: String,
}

fn ints(v: &Value) -> Vec<i64> {
    v.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect()
}

impl Naive {
    pub fn from_text(text: &str) -> Naive {
        let doc: Value = serde_json::from_str(text).unwrap();
        let orders = ints(&doc["group"]["cyclic_orders"]);
        let root = doc["bicharacter"]["root_order"].as_i64().unwrap();
        let exps: Vec<Vec<i64>> = doc["bicharacter"]["exponents"].as_array().unwrap().iter().map(ints).collect();
        let field = CyclotomicField::get(root as u32).unwrap();
        let reduce = |d: Vec<i64>| -> Vec<i64> { d.iter().zip(&orders).map(|(a, m)| a.rem_euclid(*m)).collect() };
        let n = doc["module"]["dimension"].as_u64().unwrap() as usize;
        let deg: Vec<Vec<i64>> = doc["module"]["degrees"].as_array().unwrap().iter().map(|d| reduce(ints(d))).collect();
        let lit = |v: &Value| Scalar::parse(v.as_str().unwrap(), field).unwrap();
        let zero_v = |m: usize| vec![field.zero(); m];

        let mut products = BTreeMap::new();
        if let Some(ps) = doc.get("products").and_then(Value::as_object) {
            for (name, rows) in ps {
                let mut t = vec![vec![zero_v(n); n]; n];
                for r in rows.as_array().unwrap() {
                    let (i, j, k) = (r[0].as_u64().unwrap() as usize, r[1].as_u64().unwrap() as usize, r[2].as_u64().unwrap() as usize);
                    t[i][j][k] = &t[i][j][k] + &lit(&r[3]);
                }
                products.insert(name.clone(), t);
            }
        }
        let mut reps = BTreeMap::new();
        if let Some(rs) = doc.get("representations").and_then(Value::as_object) {
            for (name, rep) in rs {
                let m = match &rep["carrier"] {
                    Value::String(s) if s == "self" => n,
                    c => c["dimension"].as_u64().unwrap() as usize,
                };
                let mut a = vec![vec![zero_v(m); m]; n];
                for r in rep["action"].as_array().unwrap() {
                    let (i, row, col) = (r[0].as_u64().unwrap() as usize, r[1].as_u64().unwrap() as usize, r[2].as_u64().unwrap() as usize);
                    a[i][row][col] = &a[i][row][col] + &lit(&r[3]);
                }
                reps.insert(name.clone(), a);
            }
        }
        let mut forms = BTreeMap::new();
        if let Some(fs) = doc.get("forms").and_then(Value::as_object) {
            for (name, rows) in fs {
                let mut b = vec![zero_v(n); n];
                for r in rows.as_array().unwrap() {
                    let (i, j) = (r[0].as_u64().unwrap() as usize, r[1].as_u64().unwrap() as usize);
                    b[i][j] = &b[i][j] + &lit(&r[2]);
                }
                forms.insert(name.clone(), b);
            }
        }
        Naive {
            n,
            field,
            root,
            orders,
            exps,
            deg,
            products,
            reps,
            forms,
            rho: "rho".into(),
            mu: "mu".into(),
            form: "B".into(),
        }
    }

    pub fn with_reps(mut self, rho: &str, mu: &str) -> Self {
        self.rho = rho.into();
        self.mu = mu.into();
        self
    }

    // ---- grading ----

    fn dsum(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter().zip(b).zip(&self.orders).map(|((x, y), m)| (x + y).rem_euclid(*m)).collect()
    }

    pub fn eps(&self, a: &[i64], b: &[i64]) -> Scalar {
        let mut e = 0i64;
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                e += ai * self.exps[i][j] * bj;
            }
        }
        self.field.root(e.rem_euclid(self.root))
    }

    // ---- dense algebra ----

    fn basis(&self, i: usize) -> H {
        let mut v = vec![self.field.zero(); self.n];
        v[i] = self.field.one();
        H { v, d: self.deg[i].clone() }
    }

    fn one(&self) -> Scalar {
        self.field.one()
    }

    fn comb(&self, d: Vec<i64>, terms: &[(Scalar, &H)]) -> H {
        let len = terms.first().map_or(self.n, |t| t.1.v.len());
        let mut v = vec![self.field.zero(); len];
        for (c, h) in terms {
            for (o, x) in v.iter_mut().zip(&h.v) {
                *o = &*o + &(c * x);
            }
        }
        H { v, d }
    }

    fn mul(&self, name: &str, x: &H, y: &H) -> H {
        let t = &self.products[name];
        let mut v = vec![self.field.zero(); self.n];
        for i in 0..self.n {
            if x.v[i].is_zero() {
                continue;
            }
            for j in 0..self.n {
                if y.v[j].is_zero() {
                    continue;
                }
                let c = &x.v[i] * &y.v[j];
                for k in 0..self.n {
                    v[k] = &v[k] + &(&c * &t[i][j][k]);
                }
            }
        }
        H { v, d: self.dsum(&x.d, &y.d) }
    }

    fn dot(&self, x: &H, y: &H) -> H {
        self.mul("dot", x, y)
    }
    fn br(&self, x: &H, y: &H) -> H {
        self.mul("bracket", x, y)
    }
    fn zb(&self, x: &H, y: &H) -> H {
        self.mul("zinbiel", x, y)
    }
    fn pl(&self, x: &H, y: &H) -> H {
        self.mul("prelie", x, y)
    }

    fn p(&self, x: &H, y: &H, z: &H) -> H {
        let d = self.dsum(&self.dsum(&x.d, &y.d), &z.d);
        let t1 = self.br(x, &self.dot(y, z));
        let t2 = self.dot(&self.br(x, y), z);
        let t3 = self.dot(y, &self.br(x, z));
        self.comb(d, &[(self.one(), &t1), (-self.one(), &t2), (-self.eps(&x.d, &y.d), &t3)])
    }

    fn t_coh(&self, y: &H, z: &H, w: &H) -> H {
        let d = self.dsum(&self.dsum(&y.d, &z.d), &w.d);
        let t1 = self.br(z, &self.dot(y, w));
        let t2 = self.br(y, &self.dot(z, w));
        let t3 = self.br(&self.dot(y, z), w);
        self.comb(d, &[(-self.eps(&y.d, &z.d), &t1), (-self.one(), &t2), (self.one(), &t3)])
    }

    fn sym_zb(&self, x: &H, y: &H) -> H {
        let (a, b) = (self.zb(x, y), self.zb(y, x));
        self.comb(a.d.clone(), &[(self.one(), &a), (self.eps(&x.d, &y.d), &b)])
    }

    fn comm_pl(&self, x: &H, y: &H) -> H {
        let (a, b) = (self.pl(x, y), self.pl(y, x));
        self.comb(a.d.clone(), &[(self.one(), &a), (-self.eps(&x.d, &y.d), &b)])
    }

    fn f1(&self, x: &H, y: &H, z: &H) -> H {
        let d = self.dsum(&self.dsum(&x.d, &y.d), &z.d);
        let t1 = self.pl(x, &self.zb(y, z));
        let t2 = self.zb(y, &self.pl(x, z));
        let t3 = self.zb(&self.comm_pl(x, y), z);
        self.comb(d, &[(self.one(), &t1), (-self.eps(&x.d, &y.d), &t2), (-self.one(), &t3)])
    }

    fn f2(&self, x: &H, y: &H, z: &H) -> H {
        let d = self.dsum(&self.dsum(&x.d, &y.d), &z.d);
        let t1 = self.zb(x, &self.pl(y, z));
        let t2 = self.zb(y, &self.pl(x, z));
        let t3 = self.pl(&self.sym_zb(x, y), z);
        self.comb(d, &[(self.one(), &t1), (self.eps(&x.d, &y.d), &t2), (-self.one(), &t3)])
    }

    // ---- matrices ----

    fn op(&self, rep: &str, x: &H) -> Mx {
        let a = &self.reps[rep];
        let m = a.first().map_or(0, Vec::len);
        let mut out = vec![vec![self.field.zero(); m]; m];
        for (i, c) in x.v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for r in 0..m {
                for s in 0..m {
                    out[r][s] = &out[r][s] + &(c * &a[i][r][s]);
                }
            }
        }
        out
    }

    fn mm(&self, a: &Mx, b: &Mx) -> Mx {
        let m = a.len();
        let mut out = vec![vec![self.field.zero(); m]; m];
        for r in 0..m {
            for k in 0..m {
                if a[r][k].is_zero() {
                    continue;
                }
                for c in 0..m {
                    out[r][c] = &out[r][c] + &(&a[r][k] * &b[k][c]);
                }
            }
        }
        out
    }

    fn mcomb(&self, terms: &[(Scalar, &Mx)]) -> Mx {
        let m = terms[0].1.len();
        let mut out = vec![vec![self.field.zero(); m]; m];
        for (c, a) in terms {
            for r in 0..m {
                for s in 0..m {
                    out[r][s] = &out[r][s] + &(c * &a[r][s]);
                }
            }
        }
        out
    }

    fn rho_op(&self, x: &H) -> Mx {
        self.op(&self.rho, x)
    }
    fn mu_op(&self, x: &H) -> Mx {
        self.op(&self.mu, x)
    }

    fn r(&self, x1: &H, x2: &H) -> Mx {
        let (r1, m2) = (self.rho_op(x1), self.mu_op(x2));
        let mb = self.mu_op(&self.br(x1, x2));
        self.mcomb(&[(self.one(), &self.mm(&r1, &m2)), (-self.eps(&x1.d, &x2.d), &self.mm(&m2, &r1)), (-self.one(), &mb)])
    }

    fn s(&self, x1: &H, x2: &H) -> Mx {
        let a = self.mm(&self.mu_op(x1), &self.rho_op(x2));
        let b = self.mm(&self.mu_op(x2), &self.rho_op(x1));
        let c = self.rho_op(&self.dot(x1, x2));
        self.mcomb(&[(self.one(), &a), (self.eps(&x1.d, &x2.d), &b), (-self.one(), &c)])
    }

    fn t_rep(&self, x: &H, y: &H) -> Mx {
        let a = self.mm(&self.rho_op(y), &self.mu_op(x));
        let b = self.mm(&self.rho_op(x), &self.mu_op(y));
        let c = self.rho_op(&self.dot(x, y));
        self.mcomb(&[(-self.eps(&x.d, &y.d), &a), (-self.one(), &b), (self.one(), &c)])
    }

    fn bf(&self, x: &H, y: &H) -> Scalar {
        let b = &self.forms[&self.form];
        let mut s = self.field.zero();
        for i in 0..self.n {
            for j in 0..self.n {
                s = &s + &(&(&x.v[i] * &b[i][j]) * &y.v[j]);
            }
        }
        s
    }

    // ---- basis-level operators for construction tests ----

    pub fn basis_p(&self, i: usize, j: usize, k: usize) -> V {
        self.p(&self.basis(i), &self.basis(j), &self.basis(k)).v
    }

    pub fn basis_r(&self, i: usize, j: usize) -> Mx {
        self.r(&self.basis(i), &self.basis(j))
    }

    pub fn basis_s(&self, i: usize, j: usize) -> Mx {
        self.s(&self.basis(i), &self.basis(j))
    }

    /// `ε(deg b_i + deg b_j, deg b_k)`
    pub fn eps_sum_first(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.eps(&self.dsum(&self.deg[i], &self.deg[j]), &self.deg[k])
    }

    /// `P_x(y,z) - F₁(x,y,z) - ε(y,z)F₁(x,z,y) - ε(x,y+z)F₂(y,z,x)` on basis
    /// vectors, with `P` read from the spec's `dot` and `bracket`.
    pub fn pointwise_pf_defect(&self, i: usize, j: usize, k: usize) -> V {
        let (x, y, z) = (self.basis(i), self.basis(j), self.basis(k));
        let p = self.p(&x, &y, &z);
        let f1 = self.f1(&x, &y, &z);
        let f1s = self.f1(&x, &z, &y);
        let f2 = self.f2(&y, &z, &x);
        let e_yz = self.eps(&y.d, &z.d);
        let e_x_yz = self.eps(&x.d, &self.dsum(&y.d, &z.d));
        self.comb(p.d.clone(), &[(self.one(), &p), (-self.one(), &f1), (-e_yz, &f1s), (-e_x_yz, &f2)]).v
    }

    // ---- identities ----

    pub fn arity(name: &str) -> usize {
        match name {
            "form-nondegenerate" => 0,
            "bicharacter" | "eps-commutative" | "lie-color-skew" | "assoc-rep" | "lie-rep" | "form-symmetric" => 2,
            "associative" | "lie-color-jacobi" | "pre-lie-color" | "zinbiel-color" | "fm-rep-R" | "fm-rep-S"
            | "dual-hyp-R" | "dual-hyp-T" | "form-invariance" => 3,
            "hertling-manin" | "coherence-1" | "coherence-2" | "pre-fm-1" | "pre-fm-2" | "form-p-transfer" => 4,
            other => panic!("unknown identity {other}"),
        }
    }

    /// Defect (left minus right) of `name` at basis indices `idx`.
    pub fn defect(&self, name: &str, idx: &[usize]) -> Dense {
        let a: Vec<H> = idx.iter().map(|&i| self.basis(i)).collect();
        let one = self.one();
        let m1 = -self.one();
        let e = |p: &H, q: &H| self.eps(&p.d, &q.d);
        let e3 = |p: &H, q: &H, r: &H| self.eps(&p.d, &self.dsum(&q.d, &r.d));
        let vec = |terms: &[(Scalar, &H)]| Dense::V(self.comb(vec![], terms).v);
        let mat = |terms: &[(Scalar, &Mx)]| Dense::M(self.mcomb(terms));
        match name {
            "eps-commutative" => {
                let (x, y) = (&a[0], &a[1]);
                vec(&[(one, &self.dot(x, y)), (-e(x, y), &self.dot(y, x))])
            }
            "associative" => {
                let (x, y, z) = (&a[0], &a[1], &a[2]);
                vec(&[(one, &self.dot(&self.dot(x, y), z)), (m1, &self.dot(x, &self.dot(y, z)))])
            }
            "lie-color-skew" => {
                let (x, y) = (&a[0], &a[1]);
                vec(&[(one, &self.br(x, y)), (e(x, y), &self.br(y, x))])
            }
            "lie-color-jacobi" => {
                let (x, y, z) = (&a[0], &a[1], &a[2]);
                vec(&[
                    (e(z, x), &self.br(x, &self.br(y, z))),
                    (e(y, z), &self.br(z, &self.br(x, y))),
                    (e(x, y), &self.br(y, &self.br(z, x))),
                ])
            }
            "pre-lie-color" => {
                let (x, y, z) = (&a[0], &a[1], &a[2]);
                vec(&[
                    (one, &self.pl(&self.pl(x, y), z)),
                    (m1, &self.pl(x, &self.pl(y, z))),
                    (-e(x, y), &self.pl(&self.pl(y, x), z)),
                    (e(x, y), &self.pl(y, &self.pl(x, z))),
                ])
            }
            "zinbiel-color" => {
                let (x, y, z) = (&a[0], &a[1], &a[2]);
                vec(&[
                    (one, &self.zb(x, &self.zb(y, z))),
                    (m1, &self.zb(&self.zb(x, y), z)),
                    (-e(x, y), &self.zb(&self.zb(y, x), z)),
                ])
            }
            "hertling-manin" => {
                let (x, y, z, w) = (&a[0], &a[1], &a[2], &a[3]);
                vec(&[
                    (one, &self.p(&self.dot(x, y), z, w)),
                    (m1, &self.dot(x, &self.p(y, z, w))),
                    (-e(x, y), &self.dot(y, &self.p(x, z, w))),
                ])
            }
            "assoc-rep" => {
                let (x, y) = (&a[0], &a[1]);
                mat(&[(one, &self.mu_op(&self.dot(x, y))), (m1, &self.mm(&self.mu_op(x), &self.mu_op(y)))])
            }
            "lie-rep" => {
                let (x, y) = (&a[0], &a[1]);
                let (rx, ry) = (self.rho_op(x), self.rho_op(y));
                mat(&[(one, &self.rho_op(&self.br(x, y))), (m1, &self.mm(&rx, &ry)), (e(x, y), &self.mm(&ry, &rx))])
            }
            "fm-rep-R" => {
                let (x1, x2, x3) = (&a[0], &a[1], &a[2]);
                mat(&[
                    (one, &self.r(&self.dot(x1, x2), x3)),
                    (m1, &self.mm(&self.mu_op(x1), &self.r(x2, x3))),
                    (-e(x1, x2), &self.mm(&self.mu_op(x2), &self.r(x1, x3))),
                ])
            }
            "fm-rep-S" => {
                let (x1, x2, x3) = (&a[0], &a[1], &a[2]);
                let s = self.s(x2, x3);
                let m = self.mu_op(x1);
                mat(&[(one.clone(), &self.mu_op(&self.p(x1, x2, x3))), (-e3(x1, x2, x3), &self.mm(&s, &m)), (one, &self.mm(&m, &s))])
            }
            "dual-hyp-R" => {
                let (x, y, z) = (&a[0], &a[1], &a[2]);
                mat(&[
                    (one, &self.r(&self.dot(x, y), z)),
                    (-e3(x, y, z), &self.mm(&self.r(y, z), &self.mu_op(x))),
                    (-e(y, z), &self.mm(&self.r(x, z), &self.mu_op(y))),
                ])
            }
            "dual-hyp-T" => {
                let (x, y, z) = (&a[0], &a[1], &a[2]);
                let t = self.t_rep(y, z);
                let m = self.mu_op(x);
                mat(&[(one, &self.mu_op(&self.p(x, y, z))), (e3(x, y, z), &self.mm(&t, &m)), (m1, &self.mm(&m, &t))])
            }
            "coherence-1" => {
                let (x, y, z, w) = (&a[0], &a[1], &a[2], &a[3]);
                vec(&[
                    (one, &self.p(&self.dot(x, y), z, w)),
                    (-e3(x, y, z), &self.p(y, z, &self.dot(x, w))),
                    (-e(y, z), &self.p(x, z, &self.dot(y, w))),
                ])
            }
            "coherence-2" => {
                let (x, y, z, w) = (&a[0], &a[1], &a[2], &a[3]);
                vec(&[
                    (one, &self.dot(&self.p(x, y, z), w)),
                    (e3(x, y, z), &self.t_coh(y, z, &self.dot(x, w))),
                    (m1, &self.dot(x, &self.t_coh(y, z, w))),
                ])
            }
            "pre-fm-1" => {
                let (x, y, z, w) = (&a[0], &a[1], &a[2], &a[3]);
                vec(&[
                    (one, &self.f1(&self.sym_zb(x, y), z, w)),
                    (m1, &self.zb(x, &self.f1(y, z, w))),
                    (-e(x, y), &self.zb(y, &self.f1(x, z, w))),
                ])
            }
            "pre-fm-2" => {
                let (x, y, z, w) = (&a[0], &a[1], &a[2], &a[3]);
                let inner = self.comb(
                    self.dsum(&self.dsum(&x.d, &y.d), &z.d),
                    &[(one.clone(), &self.f1(x, y, z)), (e(y, z), &self.f1(x, z, y)), (e3(x, y, z), &self.f2(y, z, x))],
                );
                vec(&[
                    (one.clone(), &self.zb(&inner, w)),
                    (-e3(x, y, z), &self.f2(y, z, &self.zb(x, w))),
                    (one, &self.zb(x, &self.f2(y, z, w))),
                ])
            }
            "form-symmetric" => {
                let (x, y) = (&a[0], &a[1]);
                Dense::V(vec![&self.bf(x, y) - &self.bf(y, x)])
            }
            "form-invariance" => {
                let (x, y, z) = (&a[0], &a[1], &a[2]);
                Dense::V(vec![
                    &self.bf(&self.dot(x, y), z) - &self.bf(x, &self.dot(y, z)),
                    &self.bf(&self.br(x, y), z) - &self.bf(x, &self.br(y, z)),
                    &self.bf(x, y) - &self.bf(y, x),
                ])
            }
            "form-p-transfer" => {
                let (x, y, z, w) = (&a[0], &a[1], &a[2], &a[3]);
                let l = self.bf(&self.p(x, y, z), w);
                let r = self.bf(z, &self.p(x, y, w));
                Dense::V(vec![&l - &(&self.eps(&self.dsum(&x.d, &y.d), &z.d) * &r)])
            }
            other => panic!("{other} is not pointwise"),
        }
    }

    /// Determinant by fraction-free elimination over the field.
    pub fn form_det(&self) -> Scalar {
        let mut m = self.forms[&self.form].clone();
        let n = self.n;
        let mut det = self.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det = &det * &m[c][c];
            let inv = m[c][c].inverse().unwrap();
            for r in c + 1..n {
                let f = &m[r][c] * &inv;
                for k in c..n {
                    m[r][k] = &m[r][k] - &(&f * &m[c][k]);
                }
            }
        }
        det
    }

    /// Lexicographic scan; the first nonzero defect is the witness.
    pub fn check(&self, name: &str) -> NaiveReport {
        if name == "form-nondegenerate" {
            let passed = !self.form_det().is_zero();
            return NaiveReport {
                passed,
                indices: (!passed).then(Vec::new),
                defect: None,
                tuples_checked: u64::from(self.n > 0),
            };
        }
        let k = Naive::arity(name);
        let total = (self.n as u64).pow(k as u32);
        for rank in 0..total {
            let mut idx = vec![0usize; k];
            let mut r = rank;
            for slot in idx.iter_mut().rev() {
                *slot = (r % self.n as u64) as usize;
                r /= self.n as u64;
            }
            let d = self.defect(name, &idx);
            if !d.is_zero() {
                return NaiveReport {
                    passed: false,
                    indices: Some(idx),
                    defect: Some(d),
                    tuples_checked: rank + 1,
                };
            }
        }
        NaiveReport {
            passed: true,
            indices: None,
            defect: None,
            tuples_checked: total,
        }
    }
}

// ---- random instances ----

/// Gradings with |G| ≤ 4 and N ≤ 12: (cyclic orders, N).
const GRADINGS: &[(&[i64], i64)] = &[
    (&[], 1),
    (&[], 3),
    (&[2], 2),
    (&[2], 4),
    (&[2], 6),
    (&[3], 3),
    (&[3], 6),
    (&[3], 12),
    (&[4], 4),
    (&[4], 8),
    (&[4], 12),
    (&[2, 2], 2),
    (&[2, 2], 4),
];

/// A random exponent matrix satisfying skew symmetry and well-definedness.
fn random_exponents<R: Rng>(rng: &mut R, orders: &[i64], n: i64) -> Vec<Vec<i64>> {
    let k = orders.len();
    let mut m = vec![vec![0; k]; k];
    for i in 0..k {
        for j in i..k {
            let allowed: Vec<i64> = (0..n)
                .filter(|&v| (orders[i] * v) % n == 0 && (orders[j] * v) % n == 0 && (i != j || (2 * v) % n == 0))
                .collect();
            let v = *allowed.choose(rng).unwrap();
            m[i][j] = v;
            m[j][i] = (n - v) % n;
        }
    }
    m
}

fn random_degree<R: Rng>(rng: &mut R, orders: &[i64]) -> Vec<i64> {
    orders.iter().map(|&d| rng.gen_range(0..d)).collect()
}

fn random_literal<R: Rng>(rng: &mut R, n: i64) -> String {
    let a = rng.gen_range(-2i64..=2);
    let a = if a == 0 { 1 } else { a };
    match rng.gen_range(0..4) {
        0 if n > 1 => format!("{a}*z^{}", rng.gen_range(1..n)),
        1 => format!("{a}/{}", rng.gen_range(2..4)),
        _ => a.to_string(),
    }
}

fn sum_deg(a: &[i64], b: &[i64], orders: &[i64]) -> Vec<i64> {
    a.iter().zip(b).zip(orders).map(|((x, y), m)| (x + y) % m).collect()
}

fn random_constants<R: Rng>(rng: &mut R, degs: &[Vec<i64>], orders: &[i64], n: i64, density: f64) -> Vec<Value> {
    let dim = degs.len();
    let mut out = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let target = sum_deg(&degs[i], &degs[j], orders);
            for k in 0..dim {
                if degs[k] == target && rng.gen_bool(density) {
                    out.push(serde_json::json!([i, j, k, random_literal(rng, n)]));
                }
            }
        }
    }
    out
}

/// A random spec: dimension 1..=3, every product, a pair `rho`/`mu` on a
/// random carrier, and a form `B`. Sparse enough that both verdicts occur.
pub fn random_spec_text<R: Rng>(rng: &mut R) -> String {
    let (orders, n) = *GRADINGS.choose(rng).unwrap();
    let exps = random_exponents(rng, orders, n);
    let dim = rng.gen_range(1..=3);
    let degs: Vec<Vec<i64>> = (0..dim).map(|_| random_degree(rng, orders)).collect();
    let mut products = serde_json::Map::new();
    for name in ["dot", "bracket", "zinbiel", "prelie"] {
        let density = [0.0, 0.2, 0.5][rng.gen_range(0..3)];
        products.insert(name.into(), Value::Array(random_constants(rng, &degs, orders, n, density)));
    }
    let m = rng.gen_range(1..=2);
    let cdegs: Vec<Vec<i64>> = (0..m).map(|_| random_degree(rng, orders)).collect();
    let mut reps = serde_json::Map::new();
    for name in ["rho", "mu"] {
        let density = [0.0, 0.3, 0.6][rng.gen_range(0..3)];
        let mut action = Vec::new();
        for i in 0..dim {
            for col in 0..m {
                let target = sum_deg(&degs[i], &cdegs[col], orders);
                for row in 0..m {
                    if cdegs[row] == target && rng.gen_bool(density) {
                        action.push(serde_json::json!([i, row, col, random_literal(rng, n)]));
                    }
                }
            }
        }
        reps.insert(
            name.into(),
            serde_json::json!({"carrier": {"dimension": m, "degrees": cdegs}, "action": action}),
        );
    }
    let mut form = Vec::new();
    for i in 0..dim {
        for j in i..dim {
            if rng.gen_bool(0.5) {
                let c = random_literal(rng, n);
                form.push(serde_json::json!([i, j, c]));
                if i != j && rng.gen_bool(0.7) {
                    form.push(serde_json::json!([j, i, c]));
                }
            }
        }
    }
    serde_json::json!({
        "group": {"cyclic_orders": orders},
        "bicharacter": {"root_order": n, "exponents": exps},
        "scalars": {"cyclotomic_order": n},
        "module": {"dimension": dim, "degrees": degs},
        "products": products,
        "representations": reps,
        "forms": {"B": form},
    })
    .to_string()
}

/// Every identity name the checker evaluates on basis tuples, plus the two
/// global ones.
pub const ALL_IDENTITIES: &[&str] = &[
    "eps-commutative",
    "associative",
    "lie-color-skew",
    "lie-color-jacobi",
    "pre-lie-color",
    "zinbiel-color",
    "hertling-manin",
    "assoc-rep",
    "lie-rep",
    "fm-rep-R",
    "fm-rep-S",
    "dual-hyp-R",
    "dual-hyp-T",
    "coherence-1",
    "coherence-2",
    "pre-fm-1",
    "pre-fm-2",
    "form-symmetric",
    "form-invariance",
    "form-nondegenerate",
    "form-p-transfer",
];

/// `spec` with its adjoint pair stored as `adjoint.rho` / `adjoint.mu`.
pub fn with_adjoint(spec: &fmc_core::graded::AlgebraSpec) -> fmc_core::graded::AlgebraSpec {
    let (ad, l) = fmc_core::constructions::adjoint_fm_representation(spec).unwrap();
    let mut out = spec.clone();
    out.insert_representation("adjoint.rho", ad).unwrap();
    out.insert_representation("adjoint.mu", l).unwrap();
    out
}
