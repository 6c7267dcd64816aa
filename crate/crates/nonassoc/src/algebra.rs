//! Structure-constant representation of a commutative nonassociative algebra.
//!
//! An [`Algebra`] stores the tensor `gamma[i][j][k]` with
//! `e_i e_j = sum_k gamma[i][j][k] e_k`; commutativity
//! `gamma[i][j][k] = gamma[j][i][k]` is enforced at construction and when
//! loading from JSON. Elements are plain coefficient vectors; every product
//! goes through the tensor, which is the single source of truth for the
//! multiplication.

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{poly_divide_linear, poly_eval, poly_roots, Matrix};
use crate::scalar::{FieldDescriptor, Scalar, Tolerance};

/// Optional constructor provenance carried in the JSON format, used by the
/// CLI to pick the closed-form idempotent enumeration for cyclotomic models.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelTag {
    pub name: String,
    pub n: Option<u64>,
}

/// A finite-dimensional commutative algebra over C or F_p.
#[derive(Debug, Clone, PartialEq)]
pub struct Algebra {
    field: FieldDescriptor,
    dim: usize,
    gamma: Vec<Scalar>,
    model: Option<ModelTag>,
}

/// Coefficient vector of an algebra element in the defining basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Element {
    coeffs: Vec<Scalar>,
}

impl Element {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        Element { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, i: usize) -> Scalar {
        self.coeffs[i]
    }

    pub fn add(&self, other: &Element) -> Element {
        Element::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Element) -> Element {
        Element::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        )
    }

    pub fn neg(&self) -> Element {
        Element::new(self.coeffs.iter().map(Scalar::neg).collect())
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        Element::new(self.coeffs.iter().map(|a| a.mul(s)).collect())
    }

    /// Euclidean norm over C; over F_p zero iff the element is zero.
    pub fn norm(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|s| s.abs() * s.abs())
            .sum::<f64>()
            .sqrt()
    }

    /// Max-coordinate distance, the metric used for deduplication.
    pub fn dist_linf(&self, other: &Element) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.sub(b).abs())
            .fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_exactly_zero)
    }

    /// Hermitian inner product <self, other> (conjugating self) over C.
    pub fn inner(&self, other: &Element) -> Complex64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.conj().as_complex() * b.as_complex())
            .sum()
    }

    /// Canonical comparison: lexicographic on coordinates rounded to six
    /// decimals over C, on residues over F_p.
    pub fn canonical_cmp(&self, other: &Element) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            let ord = match (a, b) {
                (Scalar::Complex(x), Scalar::Complex(y)) => {
                    let key =
                        |z: &Complex64| ((z.re * 1e6).round() as i64, (z.im * 1e6).round() as i64);
                    key(x).cmp(&key(y))
                }
                (Scalar::Prime { value: x, .. }, Scalar::Prime { value: y, .. }) => x.cmp(y),
                _ => Ordering::Equal,
            };
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(Scalar::to_json).collect())
    }
}

/// The (left = right) multiplication operator `L_x : y -> x y` as a matrix
/// acting on coefficient vectors: `L[k][j] = sum_i x_i gamma[i][j][k]`.
#[derive(Debug, Clone)]
pub struct MulOperator {
    matrix: Matrix,
}

/// One distinct eigenvalue of a multiplication operator together with its
/// algebraic multiplicity and an orthonormal basis of its eigenspace.
#[derive(Debug, Clone)]
pub struct EigenPair {
    pub value: Complex64,
    pub multiplicity: usize,
    pub vectors: Vec<Element>,
}

/// Roots of the characteristic polynomial over F_p. `split` is true iff the
/// multiplicities sum to the dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeEigen {
    pub roots: Vec<(u64, usize)>,
    pub split: bool,
}

impl MulOperator {
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// Coefficients of det(L - tI) in ascending powers of t.
    pub fn char_poly(&self) -> Vec<Scalar> {
        self.matrix.char_poly()
    }

    /// Basis of `{v : Lv = 0}`: orthonormal over C, reduced echelon over F_p.
    pub fn kernel(&self, tol: &Tolerance) -> Vec<Element> {
        self.matrix
            .null_space(tol.eq_tol)
            .into_iter()
            .map(Element::new)
            .collect()
    }

    /// All eigenvalues with multiplicity, plus an eigenspace basis each.
    /// Complex fields only; sorted by angle then modulus.
    pub fn eigen(&self, tol: &Tolerance) -> Result<Vec<EigenPair>> {
        if self.matrix.field().is_prime() {
            return Err(Error::PrimeFieldUnsupported);
        }
        let coeffs: Vec<Complex64> = self.char_poly().iter().map(Scalar::as_complex).collect();
        let roots = poly_roots(&coeffs);
        // Cluster the root list: eigenvalue separations in this domain are
        // O(1), so a loose clustering radius is safe and the cluster mean is
        // far more accurate than any single member for repeated roots.
        let scale = 1.0 + roots.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let radius = 1e-5 * scale;
        let mut clusters: Vec<(Complex64, usize)> = Vec::new();
        for r in roots {
            match clusters
                .iter_mut()
                .find(|(mean, _)| (*mean - r).norm() <= radius)
            {
                Some((mean, count)) => {
                    *mean = (*mean * (*count as f64) + r) / (*count as f64 + 1.0);
                    *count += 1;
                }
                None => clusters.push((r, 1)),
            }
        }
        let vec_tol = tol.eq_tol.max(1e-7 * (1.0 + self.matrix.max_abs()));
        let mut pairs = Vec::with_capacity(clusters.len());
        for (value, multiplicity) in clusters {
            let value = crate::linalg::polish_root(&coeffs, value, multiplicity);
            let shifted = self.matrix.sub(
                &Matrix::identity(self.matrix.field(), self.dim()).scale(&Scalar::Complex(value)),
            );
            let vectors = shifted
                .null_space(vec_tol)
                .into_iter()
                .map(Element::new)
                .collect();
            pairs.push(EigenPair {
                value,
                multiplicity,
                vectors,
            });
        }
        pairs.sort_by(|a, b| {
            let key = |z: &Complex64| {
                let mut angle = z.arg();
                if angle < 0.0 {
                    angle += 2.0 * std::f64::consts::PI;
                }
                if angle > 2.0 * std::f64::consts::PI - 1e-9 {
                    angle = 0.0;
                }
                (angle, z.norm())
            };
            let (aa, am) = key(&a.value);
            let (ba, bm) = key(&b.value);
            aa.partial_cmp(&ba)
                .unwrap()
                .then(am.partial_cmp(&bm).unwrap())
        });
        Ok(pairs)
    }

    /// Exhaustive root search of the characteristic polynomial over F_p with
    /// multiplicities via repeated synthetic division.
    pub fn prime_eigen(&self) -> Result<PrimeEigen> {
        if self.matrix.field().is_complex() {
            return Err(Error::ComplexFieldUnsupported);
        }
        let field = self.matrix.field();
        let p = field.modulus();
        let n = self.dim();
        let poly = self.char_poly();
        let mut roots = Vec::new();
        let mut total = 0usize;
        for r in 0..p {
            let cand = field.from_i64(r as i64);
            if !poly_eval(&poly, &cand).is_exactly_zero() {
                continue;
            }
            let mut mult = 0usize;
            let mut current = poly.clone();
            loop {
                let (quot, rem) = poly_divide_linear(&current, &cand);
                if !rem.is_exactly_zero() || quot.is_empty() {
                    break;
                }
                mult += 1;
                current = quot;
                if poly_eval(&current, &cand).is_exactly_zero() {
                    continue;
                }
                break;
            }
            roots.push((r, mult));
            total += mult;
        }
        Ok(PrimeEigen {
            roots,
            split: total == n,
        })
    }
}

impl Algebra {
    /// Builds an algebra from the structure tensor, flattened as
    /// `gamma[(i*dim + j)*dim + k]`. Rejects non-commutative tensors.
    pub fn new(field: FieldDescriptor, dim: usize, gamma: Vec<Scalar>) -> Result<Self> {
        assert!(dim >= 1, "algebra dimension must be positive");
        assert_eq!(gamma.len(), dim * dim * dim, "tensor size mismatch");
        for i in 0..dim {
            for j in 0..i {
                for k in 0..dim {
                    if gamma[(i * dim + j) * dim + k] != gamma[(j * dim + i) * dim + k] {
                        return Err(Error::NotCommutative { i, j, k });
                    }
                }
            }
        }
        Ok(Algebra {
            field,
            dim,
            gamma,
            model: None,
        })
    }

    pub fn with_model(mut self, tag: ModelTag) -> Self {
        self.model = Some(tag);
        self
    }

    pub fn model(&self) -> Option<&ModelTag> {
        self.model.as_ref()
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gamma(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.gamma[(i * self.dim + j) * self.dim + k]
    }

    pub fn element(&self, coeffs: Vec<Scalar>) -> Result<Element> {
        if coeffs.len() != self.dim {
            return Err(Error::AlgebraMismatch(format!(
                "element length {} vs dimension {}",
                coeffs.len(),
                self.dim
            )));
        }
        if coeffs.iter().any(|s| s.field() != self.field) {
            return Err(Error::AlgebraMismatch("scalar field mismatch".into()));
        }
        Ok(Element::new(coeffs))
    }

    pub fn element_from_i64(&self, coeffs: &[i64]) -> Element {
        Element::new(coeffs.iter().map(|v| self.field.from_i64(*v)).collect())
    }

    pub fn zero_element(&self) -> Element {
        Element::new(vec![self.field.zero(); self.dim])
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut e = self.zero_element();
        e.coeffs[i] = self.field.one();
        e
    }

    /// Seeded random element: complex Gaussian coordinates over C, uniform
    /// residues over F_p.
    pub fn random_element(&self, rng: &mut impl rand::Rng) -> Element {
        let coeffs = (0..self.dim)
            .map(|_| match self.field.kind() {
                crate::scalar::FieldKind::Complex => Scalar::complex(gaussian(rng), gaussian(rng)),
                crate::scalar::FieldKind::Prime => self
                    .field
                    .from_i64(rng.random_range(0..self.field.modulus()) as i64),
            })
            .collect();
        Element::new(coeffs)
    }

    fn check_pair(&self, x: &Element, y: &Element) -> Result<()> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::AlgebraMismatch(format!(
                "element lengths {} and {} vs dimension {}",
                x.len(),
                y.len(),
                self.dim
            )));
        }
        Ok(())
    }

    /// The bilinear product `(xy)_k = sum_{i,j} x_i y_j gamma[i][j][k]`.
    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_pair(x, y)?;
        let n = self.dim;
        let mut out = vec![self.field.zero(); n];
        for i in 0..n {
            let xi = x.coeffs[i];
            if xi.is_exactly_zero() {
                continue;
            }
            for j in 0..n {
                let w = xi.mul(&y.coeffs[j]);
                if w.is_exactly_zero() {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o = o.add(&w.mul(&self.gamma[(i * n + j) * n + k]));
                }
            }
        }
        Ok(Element::new(out))
    }

    pub fn left_mul_matrix(&self, x: &Element) -> MulOperator {
        let n = self.dim;
        let mut m = Matrix::zero(self.field, n, n);
        for k in 0..n {
            for j in 0..n {
                let mut acc = self.field.zero();
                for i in 0..n {
                    acc = acc.add(&x.coeffs[i].mul(&self.gamma[(i * n + j) * n + k]));
                }
                m.set(k, j, acc);
            }
        }
        MulOperator { matrix: m }
    }

    /// Principal (left-nested) power: `x^1 = x`, `x^(m+1) = x x^m`.
    pub fn principal_power(&self, x: &Element, m: usize) -> Element {
        assert!(m >= 1, "principal power exponent must be >= 1");
        let mut acc = x.clone();
        for _ in 1..m {
            acc = self.mul(x, &acc).expect("same algebra");
        }
        acc
    }

    /// Idempotency test; returns the verdict and the residual `|x x - x|`.
    pub fn is_idempotent(&self, x: &Element, tol: &Tolerance) -> (bool, f64) {
        let sq = self.mul(x, x).expect("same algebra");
        let residual = sq.sub(x).norm();
        (residual <= tol.eq_tol, residual)
    }

    /// 2-nilpotency test for nonzero x: `|x x| <= eq_tol |x|^2`.
    pub fn is_2nilpotent(&self, x: &Element, tol: &Tolerance) -> Result<bool> {
        if x.is_zero() {
            return Err(Error::ZeroInput);
        }
        let sq = self.mul(x, x)?;
        Ok(sq.norm() <= tol.eq_tol * x.norm() * x.norm())
    }

    /// Quotient by the span of `ideal`, which must be closed under
    /// multiplication by the whole algebra. Returns the quotient algebra and
    /// the projection matrix onto the complement basis.
    ///
    /// The complement is the set of non-pivot standard basis vectors of the
    /// ideal's reduced echelon form, so quotients are reproducible.
    pub fn quotient(&self, ideal: &[Element], tol: &Tolerance) -> Result<(Algebra, Matrix)> {
        let n = self.dim;
        let mut span = Matrix::zero(self.field, ideal.len().max(1), n);
        for (r, v) in ideal.iter().enumerate() {
            for j in 0..n {
                span.set(r, j, v.coeffs[j]);
            }
        }
        let pivots = span.rref(tol.eq_tol);
        let reduce = |x: &Element| -> Element {
            let mut v = x.clone();
            for (row, col) in pivots.iter().enumerate() {
                let factor = v.coeffs[*col];
                if factor.is_exactly_zero() {
                    continue;
                }
                for j in 0..n {
                    v.coeffs[j] = v.coeffs[j].sub(&factor.mul(&span.get(row, j)));
                }
            }
            v
        };
        // Ideal closure: every product of a basis vector with a span vector
        // must reduce to zero modulo the span.
        for i in 0..n {
            let e = self.basis_element(i);
            for (row, _) in pivots.iter().enumerate() {
                let gen = Element::new(
                    span.col(0)
                        .iter()
                        .enumerate()
                        .map(|_| self.field.zero())
                        .collect(),
                );
                let _ = gen;
                let gen = Element::new((0..n).map(|j| span.get(row, j)).collect());
                let prod = self.mul(&e, &gen)?;
                let rem = reduce(&prod);
                if rem.norm() > tol.eq_tol * (1.0 + prod.norm()) {
                    return Err(Error::NotAnIdeal {
                        witness: format!(
                            "e_{} * (ideal basis {}) leaves the span (residual {:.3e})",
                            i,
                            row,
                            rem.norm()
                        ),
                    });
                }
            }
        }
        let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
        let m = free.len();
        assert!(m >= 1, "quotient by the whole algebra");
        // Projection matrix: class coordinates of each standard basis vector.
        let mut proj = Matrix::zero(self.field, m, n);
        for j in 0..n {
            let r = reduce(&self.basis_element(j));
            for (a, fa) in free.iter().enumerate() {
                proj.set(a, j, r.coeffs[*fa]);
            }
        }
        let mut gamma = vec![self.field.zero(); m * m * m];
        for a in 0..m {
            for b in 0..=a {
                let prod = self.mul(&self.basis_element(free[a]), &self.basis_element(free[b]))?;
                let class = proj.apply(prod.coeffs());
                for (k, v) in class.iter().enumerate() {
                    gamma[(a * m + b) * m + k] = *v;
                    gamma[(b * m + a) * m + k] = *v;
                }
            }
        }
        Ok((Algebra::new(self.field, m, gamma)?, proj))
    }

    pub fn to_json(&self) -> Value {
        let n = self.dim;
        let gamma: Vec<Value> = (0..n)
            .map(|i| {
                Value::Array(
                    (0..n)
                        .map(|j| {
                            Value::Array((0..n).map(|k| self.gamma(i, j, k).to_json()).collect())
                        })
                        .collect(),
                )
            })
            .collect();
        let mut obj = json!({
            "field": self.field.to_json(),
            "dim": n,
            "gamma": gamma,
        });
        if let Some(tag) = &self.model {
            obj["model"] = match tag.n {
                Some(n) => json!({"name": tag.name, "n": n}),
                None => json!({"name": tag.name}),
            };
        }
        obj
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = FieldDescriptor::from_json(
            v.get("field")
                .ok_or_else(|| Error::Json("algebra missing \"field\"".into()))?,
        )?;
        let dim =
            v.get("dim")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Json("algebra missing \"dim\"".into()))? as usize;
        let rows = v
            .get("gamma")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("algebra missing \"gamma\"".into()))?;
        if rows.len() != dim {
            return Err(Error::Json("gamma has wrong outer length".into()));
        }
        let mut gamma = Vec::with_capacity(dim * dim * dim);
        for row in rows {
            let cols = row
                .as_array()
                .filter(|a| a.len() == dim)
                .ok_or_else(|| Error::Json("gamma row has wrong length".into()))?;
            for cell in cols {
                let fibers = cell
                    .as_array()
                    .filter(|a| a.len() == dim)
                    .ok_or_else(|| Error::Json("gamma fiber has wrong length".into()))?;
                for s in fibers {
                    gamma.push(Scalar::from_json(s, &field)?);
                }
            }
        }
        let mut alg = Algebra::new(field, dim, gamma)?;
        if let Some(tag) = v.get("model") {
            let name = tag
                .get("name")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Json("model tag missing \"name\"".into()))?;
            alg = alg.with_model(ModelTag {
                name: name.to_string(),
                n: tag.get("n").and_then(Value::as_u64),
            });
        }
        Ok(alg)
    }

    pub fn save(&self, path: &std::path::Path) -> Result<()> {
        let mut text = serde_json::to_string_pretty(&self.to_json())
            .map_err(|e| Error::Json(e.to_string()))?;
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let v: Value = serde_json::from_str(&text).map_err(|e| Error::Json(e.to_string()))?;
        Algebra::from_json(&v)
    }
}

fn gaussian(rng: &mut impl rand::Rng) -> f64 {
    // Box-Muller from two uniforms.
    let u: f64 = rng.random::<f64>().max(1e-300);
    let v: f64 = rng.random();
    (-2.0 * u.ln()).sqrt() * (2.0 * std::f64::consts::PI * v).cos()
}
