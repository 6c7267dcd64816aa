//! Per-idempotent spectral structure.
//!
//! For an idempotent c of a generic isospectral algebra the spectrum of
//! `L_c` is exactly the n-th roots of unity, each eigenspace is a line, and
//! products of eigenvectors obey the fusion rule
//! `w_k w_j in span(w_(k+j mod n))`. The canonical form fixes the remaining
//! basis freedom: `w_1` is scaled so that its n-th principal power is c
//! itself, and the structure tensor in the basis of principal powers then
//! matches a closed pattern in the root of unity alone. Two medial generic
//! isospectral algebras are isomorphic precisely when those canonical
//! tensors agree, which pins the isomorphism matrix explicitly.

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::idempotents::{enumerate_auto, IdempotentSet};
use crate::linalg::Matrix;
use crate::scalar::{Scalar, Tolerance};

/// Spectral data of one idempotent: the eigenvalue multiset of `L_c`, an
/// eigenbasis (one column per eigenvector found, eigenvalue recorded per
/// column), and the semisimplicity verdict.
#[derive(Debug, Clone)]
pub struct PeirceData {
    pub idempotent: Element,
    pub spectrum: Vec<Complex64>,
    pub column_values: Vec<Complex64>,
    pub eigenbasis: Matrix,
    pub semisimple: bool,
}

impl PeirceData {
    pub fn to_json(&self) -> Value {
        json!({
            "idempotent": self.idempotent.to_json(),
            "spectrum": self.spectrum.iter().map(|z| json!([z.re, z.im])).collect::<Vec<_>>(),
            "semisimple": self.semisimple,
            "eigenbasis": (0..self.eigenbasis.cols()).map(|j| {
                Value::Array(self.eigenbasis.col(j).iter().map(Scalar::to_json).collect())
            }).collect::<Vec<_>>(),
        })
    }
}

/// Canonical data of a medial generic isospectral algebra: the base
/// idempotent, the normalized eigenvector `w_1` with `w_1^n = c`, the basis
/// of principal powers (columns), and the structure tensor in that basis.
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    pub idempotent: Element,
    pub w1: Element,
    pub basis: Matrix,
    pub tensor: Vec<Scalar>,
    pub dim: usize,
}

impl CanonicalForm {
    pub fn tensor_entry(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.tensor[(i * self.dim + j) * self.dim + k]
    }

    pub fn to_json(&self) -> Value {
        let n = self.dim;
        json!({
            "idempotent": self.idempotent.to_json(),
            "w1": self.w1.to_json(),
            "tensor": (0..n).map(|i| (0..n).map(|j| {
                Value::Array((0..n).map(|k| self.tensor_entry(i, j, k).to_json()).collect())
            }).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// Peirce decomposition of the algebra relative to c.
pub fn peirce_decompose(alg: &Algebra, c: &Element, tol: &Tolerance) -> Result<PeirceData> {
    let (ok, residual) = alg.is_idempotent(c, tol);
    if !ok {
        return Err(Error::NotAnIdempotent { residual });
    }
    let op = alg.left_mul_matrix(c);
    let pairs = op.eigen(tol)?;
    let n = alg.dim();
    let mut spectrum = Vec::with_capacity(n);
    let mut column_values = Vec::new();
    let mut columns: Vec<Vec<Scalar>> = Vec::new();
    let mut geometric = 0usize;
    let mut residual_ok = true;
    for pair in &pairs {
        for _ in 0..pair.multiplicity {
            spectrum.push(pair.value);
        }
        geometric += pair.vectors.len();
        for v in &pair.vectors {
            let image = alg.mul(c, v)?;
            let target = v.scale(&Scalar::Complex(pair.value));
            if image.sub(&target).norm() > tol.eq_tol.max(1e-8) * v.norm() {
                residual_ok = false;
            }
            column_values.push(pair.value);
            columns.push(v.coeffs().to_vec());
        }
    }
    let eigenbasis = Matrix::from_cols(alg.field(), &columns);
    Ok(PeirceData {
        idempotent: c.clone(),
        spectrum,
        column_values,
        eigenbasis,
        semisimple: geometric == n && residual_ok,
    })
}

/// Expands the eigenvalue multiset of one idempotent, sorted canonically.
fn spectrum_of(alg: &Algebra, c: &Element, tol: &Tolerance) -> Result<Vec<Complex64>> {
    let pairs = alg.left_mul_matrix(c).eigen(tol)?;
    let mut out = Vec::new();
    for p in pairs {
        for _ in 0..p.multiplicity {
            out.push(p.value);
        }
    }
    Ok(out)
}

/// Whether two eigenvalue multisets agree within `tol` under greedy
/// nearest matching (valid here because distinct eigenvalues are O(1)
/// apart).
fn multisets_match(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    for x in a {
        let best = b
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .min_by(|(_, p), (_, q)| (x - *p).norm().partial_cmp(&(x - *q).norm()).unwrap());
        match best {
            Some((i, y)) if (x - y).norm() <= tol => used[i] = true,
            _ => return false,
        }
    }
    true
}

/// All idempotents share one spectrum as a multiset; the witness is the
/// first disagreeing pair of indices otherwise.
///
/// Over a prime field the comparison is exact equality of characteristic
/// polynomials, which carries the multiset information without requiring
/// the polynomial to split.
pub fn is_isospectral(
    alg: &Algebra,
    idm: &IdempotentSet,
    tol: &Tolerance,
) -> Result<(bool, Option<(usize, usize)>)> {
    if !idm.complete {
        return Err(Error::IncompleteSet);
    }
    spectra_agree(alg, &idm.elements, tol)
}

/// The comparison core of [`is_isospectral`], usable on sampled
/// (incomplete) idempotent lists.
pub fn spectra_agree(
    alg: &Algebra,
    elements: &[Element],
    tol: &Tolerance,
) -> Result<(bool, Option<(usize, usize)>)> {
    if elements.len() <= 1 {
        return Ok((true, None));
    }
    if alg.field().is_prime() {
        let polys: Vec<Vec<Scalar>> = elements
            .iter()
            .map(|c| alg.left_mul_matrix(c).char_poly())
            .collect();
        for (i, p) in polys.iter().enumerate() {
            if *p != polys[0] {
                return Ok((false, Some((0, i))));
            }
        }
        return Ok((true, None));
    }
    let spectra: Vec<Vec<Complex64>> = elements
        .iter()
        .map(|c| spectrum_of(alg, c, tol))
        .collect::<Result<_>>()?;
    let match_tol = tol.eq_tol.max(1e-8);
    for (i, s) in spectra.iter().enumerate().skip(1) {
        if !multisets_match(&spectra[0], s, match_tol) {
            return Ok((false, Some((0, i))));
        }
    }
    Ok((true, None))
}

/// Maps each eigenvalue of a simple-spectrum idempotent to its exponent k
/// with `value = eps_n^k`, returning eigenvectors ordered by k. Over a
/// prime field the characteristic polynomial must split with exactly the
/// n-th roots of unity as simple roots.
pub(crate) fn root_indexed_eigenbasis(
    alg: &Algebra,
    c: &Element,
    tol: &Tolerance,
) -> Result<Vec<Element>> {
    let n = alg.dim();
    if alg.field().is_prime() {
        return root_indexed_eigenbasis_prime(alg, c, tol);
    }
    let pairs = alg.left_mul_matrix(c).eigen(tol)?;
    let mut slots: Vec<Option<Element>> = vec![None; n];
    let step = 2.0 * std::f64::consts::PI / n as f64;
    for pair in pairs {
        if pair.multiplicity != 1 || pair.vectors.len() != 1 {
            return Err(Error::NotSimpleSpectrum);
        }
        let mut angle = pair.value.arg();
        if angle < 0.0 {
            angle += 2.0 * std::f64::consts::PI;
        }
        let k = (angle / step).round() as usize % n;
        let target = Complex64::from_polar(1.0, step * k as f64);
        if (pair.value - target).norm() > 1e-6 || slots[k].is_some() {
            return Err(Error::NotSimpleSpectrum);
        }
        slots[k] = Some(pair.vectors.into_iter().next().unwrap());
    }
    slots
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::NotSimpleSpectrum)
}

fn root_indexed_eigenbasis_prime(
    alg: &Algebra,
    c: &Element,
    tol: &Tolerance,
) -> Result<Vec<Element>> {
    let n = alg.dim();
    let field = alg.field();
    let eps = crate::scalar::primitive_root_of_unity(n, &field)?;
    let op = alg.left_mul_matrix(c);
    let pe = op.prime_eigen()?;
    if !pe.split || pe.roots.len() != n || pe.roots.iter().any(|(_, m)| *m != 1) {
        return Err(Error::NotSimpleSpectrum);
    }
    let mut basis = Vec::with_capacity(n);
    for k in 0..n {
        let value = eps.pow(k as u64);
        if !pe.roots.iter().any(|(r, _)| *r == value.as_residue()) {
            return Err(Error::NotSimpleSpectrum);
        }
        let shifted = op.matrix().sub(&Matrix::identity(field, n).scale(&value));
        let kernel = shifted.null_space(tol.eq_tol);
        if kernel.len() != 1 {
            return Err(Error::NotSimpleSpectrum);
        }
        basis.push(Element::new(kernel.into_iter().next().unwrap()));
    }
    Ok(basis)
}

/// Fusion check at one idempotent: expand each product `w_k w_j` in the
/// eigenbasis and measure the mass outside the `w_(k+j mod n)` component.
/// Returns the maximum over all pairs.
pub fn fusion_check(alg: &Algebra, c: &Element, tol: &Tolerance) -> Result<f64> {
    let n = alg.dim();
    let w = root_indexed_eigenbasis(alg, c, tol)?;
    let basis = Matrix::from_cols(
        alg.field(),
        &w.iter().map(|e| e.coeffs().to_vec()).collect::<Vec<_>>(),
    );
    let mut worst = 0.0f64;
    for k in 0..n {
        for j in 0..=k {
            let prod = alg.mul(&w[k], &w[j])?;
            let coords = basis
                .solve(prod.coeffs())
                .map_err(|_| Error::NotSimpleSpectrum)?;
            let target = (k + j) % n;
            let leak: f64 = coords
                .iter()
                .enumerate()
                .filter(|(m, _)| *m != target)
                .map(|(_, s)| s.abs() * s.abs())
                .sum::<f64>()
                .sqrt();
            worst = worst.max(leak);
        }
    }
    Ok(worst)
}

/// Cross-idempotent fusion: for eigenvectors u of c1 (eigenvalue l1) and v
/// of c2 (eigenvalue l2), the product u v must lie in the l1 l2 eigenspace
/// of c1 c2. Requires invertible multiplication operators throughout.
pub fn cross_fusion_check(
    alg: &Algebra,
    c1: &Element,
    c2: &Element,
    tol: &Tolerance,
) -> Result<f64> {
    for c in [c1, c2] {
        if alg.left_mul_matrix(c).matrix().det().abs() < 1e-9 {
            return Err(Error::NotReduced);
        }
    }
    let c3 = alg.mul(c1, c2)?;
    let (ok, residual) = alg.is_idempotent(&c3, tol);
    if !ok {
        return Err(Error::NotAnIdempotent { residual });
    }
    if alg.left_mul_matrix(&c3).matrix().det().abs() < 1e-9 {
        return Err(Error::NotReduced);
    }
    let p1 = peirce_decompose(alg, c1, tol)?;
    let p2 = peirce_decompose(alg, c2, tol)?;
    let p3 = peirce_decompose(alg, &c3, tol)?;
    // spec(c1) and spec(c2) embed into spec(c1 c2)
    for s in p1.spectrum.iter().chain(&p2.spectrum) {
        if !p3.spectrum.iter().any(|t| (s - t).norm() <= 1e-6) {
            return Err(Error::NotSimpleSpectrum);
        }
    }
    let mut worst = 0.0f64;
    for (i, l1) in p1.column_values.iter().enumerate() {
        let u = Element::new(p1.eigenbasis.col(i));
        for (j, l2) in p2.column_values.iter().enumerate() {
            let v = Element::new(p2.eigenbasis.col(j));
            let prod = alg.mul(&u, &v)?;
            // project onto the l1 l2 eigenspace of c3 (columns are
            // orthonormal per eigenvalue)
            let mut remainder = prod.clone();
            for (m, l3) in p3.column_values.iter().enumerate() {
                if (l1 * l2 - l3).norm() <= 1e-6 {
                    let wcol = Element::new(p3.eigenbasis.col(m));
                    let coeff = wcol.inner(&remainder);
                    remainder = remainder.sub(&wcol.scale(&Scalar::Complex(coeff)));
                }
            }
            worst = worst.max(remainder.norm());
        }
    }
    Ok(worst)
}

/// The DFT-style projection `z = sum_m eps^(-mk) L_c^m y`, which lands in
/// the k-th Peirce line; returns the coefficient relative to `w_k` and z
/// itself. For k = 0 the reference vector is c, making theta_{c,0}
/// basis-free.
pub fn theta_projection(
    alg: &Algebra,
    c: &Element,
    k: usize,
    y: &Element,
    tol: &Tolerance,
) -> Result<(Complex64, Element)> {
    if alg.field().is_prime() {
        return Err(Error::PrimeFieldUnsupported);
    }
    let n = alg.dim();
    let step = 2.0 * std::f64::consts::PI / n as f64;
    let mut z = alg.zero_element();
    let mut power = y.clone();
    for m in 0..n {
        let phase = Scalar::Complex(Complex64::from_polar(1.0, -step * (m * k) as f64));
        z = z.add(&power.scale(&phase));
        if m + 1 < n {
            power = alg.mul(c, &power)?;
        }
    }
    let w = if k == 0 {
        c.clone()
    } else {
        root_indexed_eigenbasis(alg, c, tol)?[k].clone()
    };
    let theta = w.inner(&z) / w.inner(&w);
    let leak = z.sub(&w.scale(&Scalar::Complex(theta))).norm();
    if leak > tol.eq_tol.max(1e-8) * (1.0 + z.norm()) {
        return Err(Error::ProjectionLeakage { leak });
    }
    Ok((theta, z))
}

/// Relative error of reconstructing y from its theta_{c,0} coefficients:
/// `y = 1/(2^n - 1) sum_c theta_{c,0}(y) c`.
pub fn idempotent_reconstruction(
    alg: &Algebra,
    idm: &IdempotentSet,
    y: &Element,
    tol: &Tolerance,
) -> Result<f64> {
    if !idm.complete {
        return Err(Error::IncompleteSet);
    }
    let mut sum = alg.zero_element();
    for c in &idm.elements {
        let (theta, _) = theta_projection(alg, c, 0, y, tol)?;
        sum = sum.add(&c.scale(&Scalar::Complex(theta)));
    }
    let scale = Scalar::complex(1.0 / idm.len() as f64, 0.0);
    let rebuilt = sum.scale(&scale);
    Ok(rebuilt.sub(y).norm() / y.norm().max(1e-300))
}

/// The constant mu with `target = mu * reference` when the two vectors are
/// proportional (exact over F_p, within tolerance over C).
fn proportionality_constant(target: &Element, reference: &Element, prime: bool) -> Option<Scalar> {
    let pivot = (0..reference.len()).max_by(|a, b| {
        reference
            .get(*a)
            .abs()
            .partial_cmp(&reference.get(*b).abs())
            .unwrap()
    })?;
    let mu = target.get(pivot).mul(&reference.get(pivot).inv()?);
    let residual = target.sub(&reference.scale(&mu)).norm();
    let ok = if prime {
        residual == 0.0
    } else {
        residual <= 1e-8 * (1.0 + target.norm())
    };
    ok.then_some(mu)
}

/// An n-th root of `a`, shifted by the given branch: over C the principal
/// root rotated by eps^branch, over F_p the (branch+1)-th solution of
/// `x^n = a` in residue order (brute force; the fields in play are small).
fn nth_root(a: &Scalar, n: usize, branch: usize) -> Option<Scalar> {
    match a {
        Scalar::Complex(z) => {
            let step = 2.0 * std::f64::consts::PI / n as f64;
            let root = z.powf(1.0 / n as f64) * Complex64::from_polar(1.0, step * branch as f64);
            Some(Scalar::Complex(root))
        }
        Scalar::Prime { modulus, .. } => {
            let field = a.field();
            let mut hits = Vec::new();
            for r in 1..*modulus {
                let cand = field.from_i64(r as i64);
                if cand.pow(n as u64) == *a {
                    hits.push(cand);
                }
            }
            hits.get(branch % hits.len().max(1)).copied()
        }
    }
}

fn canonical_form_with_branch(
    alg: &Algebra,
    idm: &IdempotentSet,
    branch: usize,
    tol: &Tolerance,
) -> Result<CanonicalForm> {
    if idm.is_empty() {
        return Err(Error::NotMedialIsospectral("no idempotents".into()));
    }
    let n = alg.dim();
    let field = alg.field();
    let prime = field.is_prime();
    let close = |residual: f64, scale: f64| {
        if prime {
            residual == 0.0
        } else {
            residual <= tol.eq_tol.max(1e-8) * (1.0 + scale)
        }
    };
    let c = idm.elements[0].clone();
    let w = root_indexed_eigenbasis(alg, &c, tol).map_err(|_| {
        Error::NotMedialIsospectral("spectrum is not the simple n-th roots of unity".into())
    })?;
    let mut w1 = w[1].clone();
    // w1^n is proportional to c; rescale so the constant becomes 1.
    let wn = alg.principal_power(&w1, n);
    let mu = proportionality_constant(&wn, &c, prime).ok_or_else(|| {
        Error::NotMedialIsospectral("n-th principal power of w1 is not proportional to c".into())
    })?;
    let mu_inv = mu
        .inv()
        .ok_or_else(|| Error::NotMedialIsospectral("w1^n vanishes".into()))?;
    let lambda = nth_root(&mu_inv, n, branch).ok_or_else(|| {
        Error::NotMedialIsospectral("the normalization constant has no n-th root here".into())
    })?;
    w1 = w1.scale(&lambda);
    let mut basis_cols = Vec::with_capacity(n);
    basis_cols.push(c.coeffs().to_vec());
    let mut power = w1.clone();
    for _ in 1..n {
        basis_cols.push(power.coeffs().to_vec());
        power = alg.mul(&w1, &power)?;
    }
    // `power` now holds w1^n, which must equal c after normalization.
    if !close(power.sub(&c).norm(), c.norm()) {
        return Err(Error::NotMedialIsospectral(
            "normalization w1^n = c failed".into(),
        ));
    }
    let basis = Matrix::from_cols(field, &basis_cols);
    let elems: Vec<Element> = basis_cols.iter().map(|v| Element::new(v.clone())).collect();
    let mut tensor = vec![field.zero(); n * n * n];
    for k in 0..n {
        for m in 0..=k {
            let prod = alg.mul(&elems[k], &elems[m])?;
            let coords = basis.solve(prod.coeffs()).map_err(|_| {
                Error::NotMedialIsospectral("principal powers are dependent".into())
            })?;
            for (r, s) in coords.iter().enumerate() {
                tensor[(k * n + m) * n + r] = *s;
                tensor[(m * n + k) * n + r] = *s;
            }
        }
    }
    // Verify the closed pattern in eps_n (exact over F_p).
    let eps_base = crate::scalar::primitive_root_of_unity(n, &field)?;
    let eps = |e: i64| -> Scalar {
        let e = e.rem_euclid(n as i64) as u64;
        eps_base.pow(e)
    };
    let mut worst = 0.0f64;
    for k in 0..n {
        for m in 0..n {
            let (target_idx, coeff) = if k == 0 {
                (m, eps(m as i64))
            } else if m == 0 {
                (k, eps(k as i64))
            } else {
                let e = -((k as i64 - 1) * (m as i64 - 1));
                let s = k + m;
                if s < n {
                    (s, eps(e))
                } else if s == n {
                    (0, eps(e))
                } else {
                    (s - n, eps(e + 1))
                }
            };
            for r in 0..n {
                let want = if r == target_idx { coeff } else { field.zero() };
                let got = tensor[(k * n + m) * n + r];
                worst = worst.max(got.sub(&want).abs());
            }
        }
    }
    if !close(worst, 1.0) {
        return Err(Error::NotMedialIsospectral(format!(
            "canonical tensor deviates from the reference pattern by {worst:.3e}"
        )));
    }
    Ok(CanonicalForm {
        idempotent: c,
        w1,
        basis,
        tensor,
        dim: n,
    })
}

/// Canonical form at the first idempotent of a complete enumeration:
/// basis `{c, w1, w1^2, ..., w1^(n-1)}` of principal powers with the
/// normalization `w1^n = c`, plus the structure tensor in that basis,
/// verified against the closed reference pattern.
///
/// The tensor does not depend on which n-th root is used in the
/// normalization; the first branch is fixed for reproducibility.
pub fn canonical_form(
    alg: &Algebra,
    idm: &IdempotentSet,
    tol: &Tolerance,
) -> Result<CanonicalForm> {
    canonical_form_with_branch(alg, idm, 0, tol)
}

/// Isomorphism test for medial generic isospectral algebras: canonical
/// tensors are compared entrywise; on success the change-of-basis matrix
/// `M = S_B S_A^(-1)` is verified to preserve products on all basis pairs.
///
/// An isomorphism maps idempotents to idempotents, so differing complete
/// idempotent counts settle the question negatively before any spectral
/// work (this is what separates the twisted pair algebras over F_5 and the
/// 2-dimensional model, which only become isomorphic when -3 is a square).
pub fn are_isomorphic(
    a: &Algebra,
    b: &Algebra,
    seed: u64,
    tol: &Tolerance,
) -> Result<Option<Matrix>> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(a.dim(), b.dim()));
    }
    let idm_a = enumerate_auto(a, seed, tol)?;
    let idm_b = enumerate_auto(b, seed, tol)?;
    if idm_a.complete && idm_b.complete && idm_a.len() != idm_b.len() {
        return Ok(None);
    }
    let cf_a = canonical_form(a, &idm_a, tol)?;
    let cf_b = canonical_form(b, &idm_b, tol)?;
    let n = a.dim();
    let entry_tol = if a.field().is_prime() {
        0.0
    } else {
        2.0 * tol.eq_tol.max(1e-8)
    };
    for i in 0..n * n * n {
        if cf_a.tensor[i].sub(&cf_b.tensor[i]).abs() > entry_tol {
            return Ok(None);
        }
    }
    let m = cf_b
        .basis
        .matmul(&cf_a.basis.inverse().map_err(|_| Error::SingularMatrix)?);
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let ei = a.basis_element(i);
            let ej = a.basis_element(j);
            let lhs = Element::new(m.apply(a.mul(&ei, &ej)?.coeffs()));
            let rhs = b.mul(
                &Element::new(m.apply(ei.coeffs())),
                &Element::new(m.apply(ej.coeffs())),
            )?;
            worst = worst.max(lhs.sub(&rhs).norm());
        }
    }
    if worst > 1e-8 {
        return Err(Error::NotMedialIsospectral(format!(
            "canonical tensors matched but the induced map fails product preservation ({worst:.3e})"
        )));
    }
    Ok(Some(m))
}

/// A nonassociative word in a single letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Word {
    X,
    Product(Box<Word>, Box<Word>),
}

impl Word {
    pub fn product(a: Word, b: Word) -> Word {
        Word::Product(Box::new(a), Box::new(b))
    }

    /// The left-nested principal word of degree m.
    pub fn principal(m: usize) -> Word {
        assert!(m >= 1);
        let mut w = Word::X;
        for _ in 1..m {
            w = Word::product(Word::X, w);
        }
        w
    }

    pub fn degree(&self) -> usize {
        match self {
            Word::X => 1,
            Word::Product(a, b) => a.degree() + b.degree(),
        }
    }

    pub fn eval(&self, alg: &Algebra, x: &Element) -> Result<Element> {
        match self {
            Word::X => Ok(x.clone()),
            Word::Product(a, b) => alg.mul(&a.eval(alg, x)?, &b.eval(alg, x)?),
        }
    }
}

/// Evaluates a nonassociative word at w1 and certifies that the value is
/// `b w1^deg` for a power of the root of unity b = eps^s; returns (b, s).
pub fn verify_weak_power_associativity(
    alg: &Algebra,
    w1: &Element,
    word: &Word,
    tol: &Tolerance,
) -> Result<(Complex64, usize)> {
    if alg.field().is_prime() {
        return Err(Error::PrimeFieldUnsupported);
    }
    let n = alg.dim();
    let value = word.eval(alg, w1)?;
    let pp = alg.principal_power(w1, word.degree());
    let b = pp.inner(&value) / pp.inner(&pp);
    if value.sub(&pp.scale(&Scalar::Complex(b))).norm()
        > tol.eq_tol.max(1e-8) * (1.0 + value.norm())
    {
        return Err(Error::NotProportional);
    }
    let step = 2.0 * std::f64::consts::PI / n as f64;
    let (s, dist) = (0..n)
        .map(|s| (s, (b - Complex64::from_polar(1.0, step * s as f64)).norm()))
        .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
        .unwrap();
    if dist > 1e-6 {
        return Err(Error::NotProportional);
    }
    Ok((b, s))
}
