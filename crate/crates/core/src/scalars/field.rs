//! Per-order field context for `Q(ζ_N)`: the cyclotomic polynomial `Φ_N`,
//! a reduction table for powers of `ζ_N`, and the cached roots of unity.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Rational, Scalar, ScalarError};

/// Largest root order accepted anywhere in the crate. Field contexts are
/// cached for the lifetime of the process, so the order space is bounded.
pub const MAX_ROOT_ORDER: u32 = 360;

/// The field `Q(ζ_N) = Q[x]/(Φ_N(x))` in the power basis `1, ζ, …, ζ^(φ(N)-1)`.
pub struct CyclotomicField {
    order: u32,
    phi: usize,
    /// `Φ_N`, low degree first, monic.
    modulus: Vec<Rational>,
    /// `powers[k]` is `x^k mod Φ_N` for `0 <= k < max(2φ - 1, N)`.
    powers: Vec<Vec<Rational>>,
    /// The same table over the integers; `Φ_N` is monic so no denominators arise.
    int_powers: Vec<Vec<BigInt>>,
    roots: OnceLock<Vec<Scalar>>,
}

impl std::fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Q(z_{})", self.order)
    }
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl Eq for CyclotomicField {}

fn registry() -> &'static Mutex<HashMap<u32, &'static CyclotomicField>> {
    static REGISTRY: OnceLock<Mutex<HashMap<u32, &'static CyclotomicField>>> = OnceLock::new();
    REGISTRY.get_or_init(|| Mutex::new(HashMap::new()))
}

impl CyclotomicField {
    /// Returns the shared context for `Q(ζ_order)`.
    pub fn get(order: u32) -> Result<&'static CyclotomicField, ScalarError> {
        if order == 0 || order > MAX_ROOT_ORDER {
            return Err(ScalarError::InvalidRootOrder(order));
        }
        let mut map = registry().lock().unwrap_or_else(|e| e.into_inner());
        if let Some(field) = map.get(&order) {
            return Ok(field);
        }
        let field: &'static CyclotomicField = Box::leak(Box::new(Self::build(order)));
        map.insert(order, field);
        Ok(field)
    }

    fn build(order: u32) -> Self {
        let modulus: Vec<Rational> = cyclotomic_polynomial(order as usize)
            .into_iter()
            .map(|c| Rational::from_integer(c.into()))
            .collect();
        let phi = modulus.len() - 1;
        let rows = (2 * phi - 1).max(order as usize);
        let mut powers = Vec::with_capacity(rows);
        let mut current = vec![Rational::zero(); phi];
        current[0] = Rational::one();
        for _ in 0..rows {
            powers.push(current.clone());
            // multiply by x, then fold the overflowing top coefficient back in
            let top = current[phi - 1].clone();
            for i in (1..phi).rev() {
                current[i] = current[i - 1].clone();
            }
            current[0] = Rational::zero();
            if !top.is_zero() {
                for (c, m) in current.iter_mut().zip(&modulus) {
                    *c -= &top * m;
                }
            }
        }
        let int_powers = powers
            .iter()
            .map(|row| row.iter().map(|c| c.to_integer()).collect())
            .collect();
        CyclotomicField {
            order,
            phi,
            modulus,
            powers,
            int_powers,
            roots: OnceLock::new(),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Degree of the extension, `φ(N)`.
    pub fn degree(&self) -> usize {
        self.phi
    }

    /// Coefficients of `Φ_N`, constant term first.
    pub fn modulus(&self) -> &[Rational] {
        &self.modulus
    }

    pub fn zero(&'static self) -> Scalar {
        Scalar::from_parts(self, vec![Rational::zero(); self.phi])
    }

    pub fn one(&'static self) -> Scalar {
        self.rational(Rational::one())
    }

    pub fn rational(&'static self, value: Rational) -> Scalar {
        let mut coeffs = vec![Rational::zero(); self.phi];
        coeffs[0] = value;
        Scalar::from_parts(self, coeffs)
    }

    pub fn integer(&'static self, value: i64) -> Scalar {
        self.rational(Rational::from_integer(value.into()))
    }

    /// `ζ_N^k` for any integer `k`.
    pub fn root(&'static self, k: i64) -> Scalar {
        let idx = k.mod_floor(&(self.order as i64)) as usize;
        self.roots()[idx].clone()
    }

    pub(crate) fn roots(&'static self) -> &'static [Scalar] {
        self.roots.get_or_init(|| {
            (0..self.order as usize)
                .map(|k| Scalar::from_parts(self, self.powers[k].clone()))
                .collect()
        })
    }

    /// Reduces a coefficient vector of arbitrary length modulo `Φ_N`.
    pub(crate) fn reduce(&self, mut poly: Vec<Rational>) -> Vec<Rational> {
        if poly.len() <= self.phi {
            poly.resize(self.phi, Rational::zero());
            return poly;
        }
        // Exponents past the table wrap through ζ^N = 1 first.
        if poly.len() > self.powers.len() {
            let n = self.order as usize;
            let mut folded = vec![Rational::zero(); n.max(self.phi)];
            for (k, c) in poly.into_iter().enumerate() {
                if !c.is_zero() {
                    folded[k % n] += c;
                }
            }
            poly = folded;
        }
        let mut out: Vec<Rational> = poly.iter().take(self.phi).cloned().collect();
        out.resize(self.phi, Rational::zero());
        for (k, c) in poly.iter().enumerate().skip(self.phi) {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&self.powers[k]) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        out
    }

    /// `σ_k(a)`, the image of `a` under `ζ ↦ ζ^k`.
    fn conjugate(&self, a: &[Rational], k: usize) -> Vec<Rational> {
        let n = self.order as usize;
        let mut poly = vec![Rational::zero(); n.max(self.phi)];
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                poly[(i * k) % n] += c;
            }
        }
        self.reduce(poly)
    }

    /// Inverse as `∏_{k ≠ 1} σ_k(a) / N(a)` over the units `k` mod `N`.
    /// The denominators are cleared first so every product stays integral.
    pub(crate) fn inverse_coeffs(&self, a: &[Rational]) -> Option<Vec<Rational>> {
        let (ints, d) = clear_denominators(a);
        let a: Vec<Rational> = ints.into_iter().map(Rational::from_integer).collect();
        let n = self.order as usize;
        let mut b = vec![Rational::zero(); self.phi];
        b[0] = Rational::one();
        for k in 2..n {
            if k.gcd(&n) == 1 {
                b = self.mul_coeffs(&b, &self.conjugate(&a, k));
            }
        }
        let norm = self.mul_coeffs(&a, &b);
        debug_assert!(norm[1..].iter().all(Zero::is_zero), "norm outside Q");
        if norm[0].is_zero() {
            return None;
        }
        let scale = Rational::from_integer(d) / &norm[0];
        Some(b.into_iter().map(|c| c * &scale).collect())
    }

    /// Multiplies over the integers after clearing denominators, so only
    /// the final coefficients pay for a gcd.
    pub(crate) fn mul_coeffs(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let (a, da) = clear_denominators(a);
        let (b, db) = clear_denominators(b);
        let phi = self.phi;
        let mut prod = vec![BigInt::zero(); 2 * phi - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let mut out: Vec<BigInt> = prod[..phi].to_vec();
        for (k, c) in prod.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&self.int_powers[k]) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        let d = da * db;
        out.into_iter().map(|c| Rational::new(c, d.clone())).collect()
    }
}

/// Integer numerators over the lcm of the denominators.
fn clear_denominators(v: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let d = v.iter().fold(BigInt::one(), |acc, c| {
        if c.is_integer() { acc } else { acc.lcm(c.denom()) }
    });
    let ints = v.iter().map(|c| c.numer() * (&d / c.denom())).collect();
    (ints, d)
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, constant term
/// first, via `Φ_n = (x^n - 1) / ∏_{d | n, d < n} Φ_d`.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    assert!(n > 0, "cyclotomic polynomial of order 0");
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = exact_div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        q[k] = c;
        if c != 0 {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    q
}
