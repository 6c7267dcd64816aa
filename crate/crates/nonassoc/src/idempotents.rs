//! Enumeration and certification of idempotents.
//!
//! Three enumeration routes produce the same [`IdempotentSet`] shape:
//!
//! - a closed form for the cyclotomic model, built from the value recursion
//!   `v_{k+1}^2 = v_k` over (2^n - 1)-th roots of unity followed by an
//!   inverse DFT (certified post hoc by idempotency residuals, the count,
//!   and the vanishing-sum syzygy);
//! - damped-free Newton iteration on `F(x) = x x - x` with Jacobian
//!   `2 L_x - I` from seeded complex-Gaussian starts;
//! - exhaustive search over F_p^n.
//!
//! On top of the enumerations sit the genericity certificate (count
//! 2^n - 1, no 1/2 in any spectrum, no 2-nilpotents) and the Euler-Jacobi
//! syzygies of generic algebras.

use num_complex::Complex64;
use rand::SeedableRng;
use serde_json::{json, Value};

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::poly_eval;
use crate::scalar::{half, FieldDescriptor, Scalar, Tolerance};

/// How an idempotent set was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Newton,
    BruteForce,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::Newton => "newton",
            Method::BruteForce => "brute-force",
        }
    }

    pub fn parse(s: &str) -> Option<Method> {
        match s {
            "closed-form" => Some(Method::ClosedForm),
            "newton" => Some(Method::Newton),
            "brute-force" | "brute" => Some(Method::BruteForce),
            _ => None,
        }
    }
}

/// A list of verified nonzero idempotents with per-element residuals.
///
/// `complete` claims exhaustiveness: all 2^n - 1 nonzero idempotents of a
/// generic algebra, or the full search space over a prime field.
#[derive(Debug, Clone)]
pub struct IdempotentSet {
    pub elements: Vec<Element>,
    pub residuals: Vec<f64>,
    pub method: Method,
    pub complete: bool,
    /// Converged Newton roots whose Jacobian 2L_c - I was singular; a
    /// nonzero count signals a non-generic algebra.
    pub singular_roots: usize,
}

impl IdempotentSet {
    /// Wraps caller-supplied elements after verifying each is a nonzero
    /// idempotent and that they are pairwise distinct. The given order is
    /// kept, so labeled sets (like the seven c_i of the 3-dimensional
    /// model) stay in their labeling.
    pub fn from_verified(
        alg: &Algebra,
        elements: Vec<Element>,
        method: Method,
        complete: bool,
        tol: &Tolerance,
    ) -> Result<Self> {
        let mut residuals = Vec::with_capacity(elements.len());
        for e in &elements {
            if e.is_zero() {
                return Err(Error::ZeroInput);
            }
            let (ok, r) = alg.is_idempotent(e, tol);
            if !ok {
                return Err(Error::NotAnIdempotent { residual: r });
            }
            residuals.push(r);
        }
        for i in 0..elements.len() {
            for j in 0..i {
                if elements[i].dist_linf(&elements[j]) <= tol.dedupe_tol {
                    return Err(Error::AlgebraMismatch(format!(
                        "idempotents {j} and {i} coincide within dedupe_tol"
                    )));
                }
            }
        }
        Ok(IdempotentSet {
            elements,
            residuals,
            method,
            complete,
            singular_roots: 0,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Sorts into canonical order (coordinates rounded to six decimals over
    /// C, residues over F_p), carrying residuals along.
    pub fn canonicalize(&mut self) {
        let mut paired: Vec<(Element, f64)> = self
            .elements
            .drain(..)
            .zip(self.residuals.drain(..))
            .collect();
        paired.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        for (e, r) in paired {
            self.elements.push(e);
            self.residuals.push(r);
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "method": self.method.as_str(),
            "complete": self.complete,
            "elements": self.elements.iter().map(Element::to_json).collect::<Vec<_>>(),
            "residuals": self.residuals,
        })
    }

    pub fn from_json(v: &Value, field: &FieldDescriptor) -> Result<Self> {
        let method = v
            .get("method")
            .and_then(Value::as_str)
            .and_then(Method::parse)
            .ok_or_else(|| Error::Json("idempotent set missing \"method\"".into()))?;
        let complete = v
            .get("complete")
            .and_then(Value::as_bool)
            .ok_or_else(|| Error::Json("idempotent set missing \"complete\"".into()))?;
        let elements = v
            .get("elements")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("idempotent set missing \"elements\"".into()))?
            .iter()
            .map(|row| {
                let coords = row
                    .as_array()
                    .ok_or_else(|| Error::Json("element is not an array".into()))?;
                Ok(Element::new(
                    coords
                        .iter()
                        .map(|s| Scalar::from_json(s, field))
                        .collect::<Result<Vec<_>>>()?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let residuals = v
            .get("residuals")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("idempotent set missing \"residuals\"".into()))?
            .iter()
            .map(|r| r.as_f64().unwrap_or(f64::NAN))
            .collect();
        Ok(IdempotentSet {
            elements,
            residuals,
            method,
            complete,
            singular_roots: 0,
        })
    }

    pub fn save(&self, path: &std::path::Path) -> Result<()> {
        let mut text = serde_json::to_string_pretty(&self.to_json())
            .map_err(|e| Error::Json(e.to_string()))?;
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }
}

/// Certificate that an algebra is generic: exactly 2^n - 1 nonzero
/// idempotents, no eigenvalue 1/2, no 2-nilpotents.
#[derive(Debug, Clone)]
pub struct GenericityReport {
    pub count: usize,
    pub expected: usize,
    pub half_in_spectrum: bool,
    pub nilpotent_found: Option<Element>,
    pub verdict: bool,
}

fn mod_pow_u128(mut base: u128, mut exp: u128, m: u128) -> u128 {
    let mut acc = 1u128;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Closed-form enumeration for the cyclotomic model over C.
///
/// For each j in 1..=2^n - 1 the boundary values `v_k = w^(j 2^((n-1)k))`
/// with `w = exp(2 pi i / (2^n - 1))` satisfy `v_{k+1}^2 = v_k` because
/// `2^n = 1 mod 2^n - 1`; the coefficients are recovered by inverse DFT.
/// Returns exactly 2^n - 1 distinct nonzero idempotents.
pub fn enumerate_closed_form(alg: &Algebra, tol: &Tolerance) -> Result<IdempotentSet> {
    if alg.field().is_prime() {
        return Err(Error::PrimeFieldUnsupported);
    }
    let n = match alg.model() {
        Some(tag) if tag.name == "cn" => tag.n.unwrap_or(alg.dim() as u64) as usize,
        _ => {
            return Err(Error::AlgebraMismatch(
                "closed-form enumeration needs a cyclotomic model (cn) file".into(),
            ))
        }
    };
    assert_eq!(n, alg.dim());
    let big_n = (1u128 << n) - 1;
    let omega = 2.0 * std::f64::consts::PI / big_n as f64;
    let eps = 2.0 * std::f64::consts::PI / n as f64;
    let mut elements = Vec::with_capacity(big_n as usize);
    for j in 1..=big_n {
        let values: Vec<Complex64> = (0..n)
            .map(|k| {
                let pw = mod_pow_u128(2, ((n - 1) * k) as u128, big_n);
                let e = j * pw % big_n;
                Complex64::from_polar(1.0, omega * e as f64)
            })
            .collect();
        let coeffs: Vec<Scalar> = (0..n)
            .map(|m| {
                let mut acc = Complex64::new(0.0, 0.0);
                for (k, v) in values.iter().enumerate() {
                    acc += v * Complex64::from_polar(1.0, -eps * (m * k) as f64);
                }
                Scalar::Complex(acc / n as f64)
            })
            .collect();
        elements.push(Element::new(coeffs));
    }
    let mut set = IdempotentSet::from_verified(alg, elements, Method::ClosedForm, true, tol)?;
    set.canonicalize();
    Ok(set)
}

/// Newton iteration on `F(x) = x x - x` from seeded complex-Gaussian
/// starts. The default budget is `200 * 2^n` starts; once the generic count
/// 2^n - 1 is reached, a confirmation window of further starts must produce
/// no new root before the set is declared complete. Finding more than
/// 2^n - 1 distinct roots marks the set incomplete immediately (the
/// idempotent variety is then positive-dimensional).
pub fn enumerate_newton(
    alg: &Algebra,
    seed: u64,
    budget: Option<usize>,
    tol: &Tolerance,
) -> Result<IdempotentSet> {
    if alg.field().is_prime() {
        return Err(Error::PrimeFieldUnsupported);
    }
    let n = alg.dim();
    let expected = (1usize << n) - 1;
    let budget = budget.unwrap_or(200 * (1 << n));
    let confirmation = 40 * n.max(1);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut roots: Vec<Element> = Vec::new();
    let mut singular = 0usize;
    let mut overflow = false;
    let mut since_new = 0usize;
    for _ in 0..budget {
        let mut x = alg.random_element(&mut rng);
        let mut converged = false;
        for _ in 0..80 {
            let f = alg.mul(&x, &x)?.sub(&x);
            if f.norm() < tol.newton_tol {
                converged = true;
                break;
            }
            let mut jac = alg
                .left_mul_matrix(&x)
                .matrix()
                .scale(&Scalar::complex(2.0, 0.0));
            for i in 0..n {
                let v = jac.get(i, i).sub(&alg.field().one());
                jac.set(i, i, v);
            }
            match jac.solve(f.coeffs()) {
                Ok(dx) => {
                    x = x.sub(&Element::new(dx));
                }
                Err(_) => break,
            }
            if x.norm() > 1e8 {
                break;
            }
        }
        if !converged {
            continue;
        }
        if x.norm() <= tol.dedupe_tol {
            continue; // the zero idempotent is excluded
        }
        if roots.iter().any(|r| r.dist_linf(&x) <= tol.dedupe_tol) {
            since_new += 1;
        } else {
            let mut jac = alg
                .left_mul_matrix(&x)
                .matrix()
                .scale(&Scalar::complex(2.0, 0.0));
            for i in 0..n {
                let v = jac.get(i, i).sub(&alg.field().one());
                jac.set(i, i, v);
            }
            let min_sv = jac.singular_values().first().copied().unwrap_or(0.0);
            if min_sv < tol.eq_tol {
                singular += 1;
            }
            roots.push(x);
            since_new = 0;
            if roots.len() > expected {
                overflow = true;
                break;
            }
        }
        if roots.len() == expected && since_new >= confirmation {
            break;
        }
    }
    let complete = !overflow && roots.len() == expected;
    let mut set = IdempotentSet::from_verified(alg, roots, Method::Newton, complete, tol)?;
    set.singular_roots = singular;
    set.canonicalize();
    Ok(set)
}

const BRUTE_FORCE_CAP: u128 = 10_000_000;

/// Exhaustive idempotent search over F_p^n (bounded by p^n <= 10^7).
pub fn enumerate_brute_force(alg: &Algebra) -> Result<IdempotentSet> {
    if alg.field().is_complex() {
        return Err(Error::ComplexFieldUnsupported);
    }
    let p = alg.field().modulus();
    let n = alg.dim();
    let size = (p as u128).pow(n as u32);
    if size > BRUTE_FORCE_CAP {
        return Err(Error::SearchSpaceTooLarge {
            size,
            cap: BRUTE_FORCE_CAP,
        });
    }
    let mut found = Vec::new();
    let mut odometer = vec![0u64; n];
    loop {
        let x = Element::new(
            odometer
                .iter()
                .map(|v| alg.field().from_i64(*v as i64))
                .collect(),
        );
        if !x.is_zero() {
            let sq = alg.mul(&x, &x)?;
            if sq == x {
                found.push(x);
            }
        }
        let mut carry = 0;
        while carry < n {
            odometer[carry] += 1;
            if odometer[carry] < p {
                break;
            }
            odometer[carry] = 0;
            carry += 1;
        }
        if carry == n {
            break;
        }
    }
    let tol = Tolerance::default();
    let mut set = IdempotentSet::from_verified(alg, found, Method::BruteForce, true, &tol)?;
    set.canonicalize();
    Ok(set)
}

/// Picks the enumeration route from the algebra: closed form for tagged
/// cyclotomic models, brute force over prime fields, Newton otherwise.
pub fn enumerate_auto(alg: &Algebra, seed: u64, tol: &Tolerance) -> Result<IdempotentSet> {
    if alg.field().is_prime() {
        enumerate_brute_force(alg)
    } else if alg.model().is_some_and(|t| t.name == "cn") {
        enumerate_closed_form(alg, tol)
    } else {
        enumerate_newton(alg, seed, None, tol)
    }
}

/// Checks the genericity certificate. A complete enumeration is required
/// unless the count already disagrees with 2^n - 1, in which case the
/// verdict is a definite `false`.
pub fn check_generic(
    alg: &Algebra,
    idm: &IdempotentSet,
    tol: &Tolerance,
    seed: u64,
) -> Result<GenericityReport> {
    let n = alg.dim();
    let expected = (1usize << n) - 1;
    if !idm.complete && idm.len() == expected {
        return Err(Error::IncompleteSet);
    }
    let count = idm.len();
    let mut half_in_spectrum = false;
    for c in &idm.elements {
        let op = alg.left_mul_matrix(c);
        if alg.field().is_complex() {
            let half_c = Complex64::new(0.5, 0.0);
            for pair in op.eigen(tol)? {
                if (pair.value - half_c).norm() <= 1e-6 {
                    half_in_spectrum = true;
                }
            }
        } else {
            let h = half(&alg.field()).as_residue();
            if op.prime_eigen()?.roots.iter().any(|(r, _)| *r == h) {
                half_in_spectrum = true;
            }
        }
    }
    let nilpotent_found = find_2nilpotent(alg, tol, seed)?;
    let verdict = count == expected && !half_in_spectrum && nilpotent_found.is_none();
    Ok(GenericityReport {
        count,
        expected,
        half_in_spectrum,
        nilpotent_found,
        verdict,
    })
}

/// Searches for a nonzero solution of `x x = 0`: Newton with sphere
/// renormalization over C, exhaustive scan over F_p.
pub fn find_2nilpotent(alg: &Algebra, tol: &Tolerance, seed: u64) -> Result<Option<Element>> {
    let n = alg.dim();
    if alg.field().is_prime() {
        let p = alg.field().modulus();
        let size = (p as u128).pow(n as u32);
        if size > BRUTE_FORCE_CAP {
            return Err(Error::SearchSpaceTooLarge {
                size,
                cap: BRUTE_FORCE_CAP,
            });
        }
        let mut odometer = vec![0u64; n];
        loop {
            let x = Element::new(
                odometer
                    .iter()
                    .map(|v| alg.field().from_i64(*v as i64))
                    .collect(),
            );
            if !x.is_zero() && alg.mul(&x, &x)?.is_zero() {
                return Ok(Some(x));
            }
            let mut carry = 0;
            while carry < n {
                odometer[carry] += 1;
                if odometer[carry] < p {
                    break;
                }
                odometer[carry] = 0;
                carry += 1;
            }
            if carry == n {
                return Ok(None);
            }
        }
    }
    // Plain Newton on the homogeneous map x^2 only rescales x (the step is
    // exactly x/2), so the cone of nilpotent directions is found instead by
    // Gauss-Newton on the affinely sliced system (x^2, <a, x> - 1) with a
    // random slice a. At a nilpotent direction the system has an isolated
    // zero-residual solution.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x6e696c);
    let _ = tol;
    for _ in 0..20 * n {
        let slice = alg.random_element(&mut rng);
        let mut x = alg.random_element(&mut rng);
        for _ in 0..80 {
            let sq = alg.mul(&x, &x)?;
            let affine = slice.inner(&x) - Complex64::new(1.0, 0.0);
            if sq.norm() <= 1e-12 * (1.0 + x.norm() * x.norm()) && affine.norm() <= 1e-9 {
                let norm = x.norm();
                if norm == 0.0 {
                    break;
                }
                let dir = x.scale(&Scalar::complex(1.0 / norm, 0.0));
                if alg.mul(&dir, &dir)?.norm() <= 1e-10 {
                    return Ok(Some(dir));
                }
                break;
            }
            // residual g and Jacobian J = [2 L_x ; conj(slice)^T], solved
            // in least squares through the normal equations.
            let jac_top = alg
                .left_mul_matrix(&x)
                .matrix()
                .scale(&Scalar::complex(2.0, 0.0));
            let mut jac = crate::linalg::Matrix::zero(alg.field(), n + 1, n);
            for r in 0..n {
                for c in 0..n {
                    jac.set(r, c, jac_top.get(r, c));
                }
            }
            for c in 0..n {
                jac.set(n, c, slice.get(c).conj());
            }
            let mut g: Vec<Scalar> = sq.coeffs().to_vec();
            g.push(Scalar::Complex(affine));
            let jh = jac.adjoint();
            let normal = jh.matmul(&jac);
            let rhs = jh.apply(&g);
            match normal.solve(&rhs) {
                Ok(dx) => x = x.sub(&Element::new(dx)),
                Err(_) => break,
            }
            if !x.norm().is_finite() {
                break;
            }
        }
    }
    Ok(None)
}

/// Maximum over the sample points of
/// `| sum_c chi_c(t) / chi_c(1/2) - 2^n (1 - t^n) |`.
pub fn syzygy_charpoly(alg: &Algebra, idm: &IdempotentSet, t_samples: &[Complex64]) -> Result<f64> {
    if alg.field().is_prime() {
        return Err(Error::PrimeFieldUnsupported);
    }
    if !idm.complete {
        return Err(Error::IncompleteSet);
    }
    let n = alg.dim();
    let polys: Vec<Vec<Scalar>> = idm
        .elements
        .iter()
        .map(|c| alg.left_mul_matrix(c).char_poly())
        .collect();
    let half_s = Scalar::complex(0.5, 0.0);
    let denoms: Vec<Complex64> = polys
        .iter()
        .map(|p| poly_eval(p, &half_s).as_complex())
        .collect();
    if denoms.iter().any(|d| d.norm() < 1e-12) {
        return Err(Error::HalfEigenvalue);
    }
    let mut worst = 0.0f64;
    for t in t_samples {
        let ts = Scalar::Complex(*t);
        let mut sum = Complex64::new(0.0, 0.0);
        for (p, d) in polys.iter().zip(&denoms) {
            sum += poly_eval(p, &ts).as_complex() / d;
        }
        let target = 2f64.powi(n as i32) * (Complex64::new(1.0, 0.0) - t.powu(n as u32));
        worst = worst.max((sum - target).norm());
    }
    Ok(worst)
}

/// Norm of `sum_c H(c)` (isospectral syzygy) or of
/// `sum_c H(c) / chi_c(1/2)` (weighted Euler-Jacobi form). `degree` is the
/// declared homogeneity degree of H and must be at most n - 1.
pub fn syzygy_moment(
    alg: &Algebra,
    idm: &IdempotentSet,
    degree: usize,
    h: impl Fn(&Algebra, &Element) -> Element,
    weighted: bool,
) -> Result<f64> {
    if !idm.complete {
        return Err(Error::IncompleteSet);
    }
    let n = alg.dim();
    if degree == 0 || degree > n - 1 {
        return Err(Error::DegreeTooHigh {
            deg: degree,
            max: n - 1,
        });
    }
    let mut sum = alg.zero_element();
    let half_s = half(&alg.field());
    for c in &idm.elements {
        let mut term = h(alg, c);
        if weighted {
            let chi_half = poly_eval(&alg.left_mul_matrix(c).char_poly(), &half_s);
            let inv = chi_half.inv().ok_or(Error::HalfEigenvalue)?;
            term = term.scale(&inv);
        }
        sum = sum.add(&term);
    }
    Ok(sum.norm())
}

/// The orbit `{p(eps^k z)}` of an idempotent of the cyclotomic model under
/// the substitution action, duplicates collapsed, in order of first
/// appearance.
pub fn cyclotomic_orbit(alg: &Algebra, p: &Element, tol: &Tolerance) -> Result<Vec<Element>> {
    let n = match alg.model() {
        Some(tag) if tag.name == "cn" => tag.n.unwrap_or(alg.dim() as u64) as usize,
        _ => {
            return Err(Error::AlgebraMismatch(
                "orbit requires a cyclotomic model (cn) algebra".into(),
            ))
        }
    };
    let (ok, residual) = alg.is_idempotent(p, tol);
    if !ok {
        return Err(Error::NotAnIdempotent { residual });
    }
    let eps = crate::scalar::primitive_root_of_unity(n, &alg.field())?;
    let mut orbit: Vec<Element> = Vec::new();
    for k in 0..n {
        let twisted = Element::new(
            (0..n)
                .map(|m| p.get(m).mul(&eps.pow((k * m) as u64)))
                .collect(),
        );
        if !orbit
            .iter()
            .any(|q| q.dist_linf(&twisted) <= tol.dedupe_tol)
        {
            orbit.push(twisted);
        }
    }
    Ok(orbit)
}
