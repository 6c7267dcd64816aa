//! Dense linear algebra over the two scalar backends.
//!
//! Everything here is sized for desk-scale algebras (n <= 16): LU with
//! partial pivoting, reduced row echelon over F_p, a cyclic Jacobi
//! eigensolver for Hermitian complex matrices (used for singular values and
//! orthonormal null spaces), Durand-Kerner polynomial root finding, and
//! characteristic polynomials via Faddeev-LeVerrier with a division-free
//! Berkowitz fallback for small prime characteristics.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::{FieldDescriptor, Scalar};

/// Dense matrix with entries in a single scalar field.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    field: FieldDescriptor,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: FieldDescriptor, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldDescriptor, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        field: FieldDescriptor,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut m = Matrix::zero(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Column-major assembly from coefficient vectors.
    pub fn from_cols(field: FieldDescriptor, cols: &[Vec<Scalar>]) -> Self {
        let rows = cols.first().map_or(0, Vec::len);
        Matrix::from_fn(field, rows, cols.len(), |i, j| cols[j][i])
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.get(i, j).add(&other.get(i, j))
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.get(i, j).sub(&other.get(i, j))
        })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.get(i, j).mul(s)
        })
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_exactly_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).add(&a.mul(&other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    acc = acc.add(&self.get(i, j).mul(&v[j]));
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.matmul(&base);
            }
            base = base.matmul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            acc = acc.add(&self.get(i, i));
        }
        acc
    }

    /// Conjugate transpose (plain transpose over F_p).
    pub fn adjoint(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| {
            self.get(j, i).conj()
        })
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(Scalar::abs).fold(0.0, f64::max)
    }

    /// Frobenius-style norm: sqrt(sum |a_ij|^2). Over F_p this counts
    /// nonzero entries, so it is zero iff the matrix is zero.
    pub fn norm(&self) -> f64 {
        self.data
            .iter()
            .map(|s| s.abs() * s.abs())
            .sum::<f64>()
            .sqrt()
    }

    fn pivot_threshold(&self) -> f64 {
        if self.field.is_prime() {
            0.5
        } else {
            1e-13 * (1.0 + self.max_abs())
        }
    }

    /// Determinant by LU with partial pivoting (exact over F_p).
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = self.field.one();
        for col in 0..n {
            let mut best = col;
            let mut best_abs = a.get(col, col).abs();
            for r in col + 1..n {
                let v = a.get(r, col).abs();
                if v > best_abs {
                    best = r;
                    best_abs = v;
                }
            }
            if best_abs == 0.0 {
                return self.field.zero();
            }
            if best != col {
                for j in 0..n {
                    let (x, y) = (a.get(col, j), a.get(best, j));
                    a.set(col, j, y);
                    a.set(best, j, x);
                }
                det = det.neg();
            }
            let pivot = a.get(col, col);
            det = det.mul(&pivot);
            let inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                let factor = a.get(r, col).mul(&inv);
                if factor.is_exactly_zero() {
                    continue;
                }
                for j in col..n {
                    let v = a.get(r, j).sub(&factor.mul(&a.get(col, j)));
                    a.set(r, j, v);
                }
            }
        }
        det
    }

    /// Solves A x = b for square A. Errors on (numerically) singular systems.
    pub fn solve(&self, b: &[Scalar]) -> Result<Vec<Scalar>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(self.rows, b.len());
        let n = self.rows;
        let thresh = self.pivot_threshold();
        let mut a = self.clone();
        let mut rhs = b.to_vec();
        for col in 0..n {
            let mut best = col;
            let mut best_abs = a.get(col, col).abs();
            for r in col + 1..n {
                let v = a.get(r, col).abs();
                if v > best_abs {
                    best = r;
                    best_abs = v;
                }
            }
            if best_abs < thresh {
                return Err(Error::SingularMatrix);
            }
            if best != col {
                for j in 0..n {
                    let (x, y) = (a.get(col, j), a.get(best, j));
                    a.set(col, j, y);
                    a.set(best, j, x);
                }
                rhs.swap(col, best);
            }
            let inv = a.get(col, col).inv().expect("nonzero pivot");
            for r in col + 1..n {
                let factor = a.get(r, col).mul(&inv);
                if factor.is_exactly_zero() {
                    continue;
                }
                for j in col..n {
                    let v = a.get(r, j).sub(&factor.mul(&a.get(col, j)));
                    a.set(r, j, v);
                }
                rhs[r] = rhs[r].sub(&factor.mul(&rhs[col]));
            }
        }
        let mut x = vec![self.field.zero(); n];
        for row in (0..n).rev() {
            let mut acc = rhs[row];
            for j in row + 1..n {
                acc = acc.sub(&a.get(row, j).mul(&x[j]));
            }
            x[row] = acc.mul(&a.get(row, row).inv().expect("nonzero pivot"));
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![self.field.zero(); n];
            e[j] = self.field.one();
            cols.push(self.solve(&e)?);
        }
        Ok(Matrix::from_cols(self.field, &cols))
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    /// Exact over F_p; over C entries below `tol` are treated as zero.
    pub fn rref(&mut self, tol: f64) -> Vec<usize> {
        let zero_tol = if self.field.is_prime() { 0.5 } else { tol };
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            let mut best = row;
            let mut best_abs = self.get(row, col).abs();
            for r in row + 1..self.rows {
                let v = self.get(r, col).abs();
                if v > best_abs {
                    best = r;
                    best_abs = v;
                }
            }
            if best_abs < zero_tol {
                continue;
            }
            if best != row {
                for j in 0..self.cols {
                    let (x, y) = (self.get(row, j), self.get(best, j));
                    self.set(row, j, y);
                    self.set(best, j, x);
                }
            }
            let inv = self.get(row, col).inv().expect("nonzero pivot");
            for j in 0..self.cols {
                let v = self.get(row, j).mul(&inv);
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor.abs() < zero_tol {
                    continue;
                }
                for j in 0..self.cols {
                    let v = self.get(r, j).sub(&factor.mul(&self.get(row, j)));
                    self.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Orthonormal (C) or reduced-echelon (F_p) basis of the null space.
    ///
    /// Over C the rank decision uses singular values <= `tol`.
    pub fn null_space(&self, tol: f64) -> Vec<Vec<Scalar>> {
        if self.field.is_prime() {
            return self.null_space_prime();
        }
        let (svals, vecs) = self.singular_triplets();
        let mut basis: Vec<(f64, Vec<Scalar>)> = svals
            .iter()
            .zip(vecs)
            .filter(|(s, _)| **s <= tol)
            .map(|(s, v)| (*s, canonical_phase(v)))
            .collect();
        basis.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        basis.into_iter().map(|(_, v)| v).collect()
    }

    fn null_space_prime(&self) -> Vec<Vec<Scalar>> {
        let mut r = self.clone();
        let pivots = r.rref(0.0);
        let pivot_set: Vec<usize> = pivots.clone();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (prow, pcol) in pivot_set.iter().enumerate() {
                v[*pcol] = r.get(prow, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Singular values (ascending with their right singular vectors) via a
    /// Jacobi eigensolve of A^H A. Complex fields only.
    pub fn singular_triplets(&self) -> (Vec<f64>, Vec<Vec<Scalar>>) {
        assert!(self.field.is_complex());
        let gram = self.adjoint().matmul(self);
        let n = gram.rows;
        let mut h = vec![vec![Complex64::new(0.0, 0.0); n]; n];
        for i in 0..n {
            for j in 0..n {
                h[i][j] = gram.get(i, j).as_complex();
            }
        }
        let (evals, evecs) = hermitian_jacobi(&mut h);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| evals[a].partial_cmp(&evals[b]).unwrap());
        let svals: Vec<f64> = order.iter().map(|&i| evals[i].max(0.0).sqrt()).collect();
        let vecs: Vec<Vec<Scalar>> = order
            .iter()
            .map(|&i| (0..n).map(|r| Scalar::Complex(evecs[r][i])).collect())
            .collect();
        (svals, vecs)
    }

    pub fn singular_values(&self) -> Vec<f64> {
        self.singular_triplets().0
    }

    /// Coefficients of det(A - tI) in ascending powers of t.
    ///
    /// Faddeev-LeVerrier, which divides by 1..n, is used whenever those are
    /// invertible (always over C; over F_p when p > n). The division-free
    /// Berkowitz recursion covers the remaining small-characteristic cases.
    pub fn char_poly(&self) -> Vec<Scalar> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let descending = if self.field.is_prime() && self.field.modulus() <= n as u64 {
            self.char_poly_berkowitz()
        } else {
            self.char_poly_faddeev_leverrier()
        };
        // descending[i] is the coefficient of t^(n-i) in det(tI - A);
        // det(A - tI) = (-1)^n det(tI - A).
        let sign = if n % 2 == 0 {
            self.field.one()
        } else {
            self.field.one().neg()
        };
        (0..=n).map(|k| descending[n - k].mul(&sign)).collect()
    }

    fn char_poly_faddeev_leverrier(&self) -> Vec<Scalar> {
        let n = self.rows;
        let field = self.field;
        let mut c = vec![field.zero(); n + 1];
        c[n] = field.one();
        let mut m = Matrix::zero(field, n, n);
        for k in 1..=n {
            m = self.matmul(&m);
            let ck = c[n - k + 1];
            for i in 0..n {
                let v = m.get(i, i).add(&ck);
                m.set(i, i, v);
            }
            let t = self.matmul(&m).trace();
            let kinv = field.from_i64(k as i64).inv().expect("k invertible");
            c[n - k] = t.neg().mul(&kinv);
        }
        let mut out = vec![field.zero(); n + 1];
        for i in 0..=n {
            out[n - i] = c[i];
        }
        out
    }

    fn char_poly_berkowitz(&self) -> Vec<Scalar> {
        let n = self.rows;
        let field = self.field;
        // p holds the descending coefficients for the leading principal
        // submatrix handled so far.
        let mut p = vec![field.one(), self.get(0, 0).neg()];
        for k in 1..n {
            let mut q = vec![field.zero(); k + 2];
            q[0] = field.one();
            q[1] = self.get(k, k).neg();
            // q[j+2] = -(R M^j C) with R the new row, C the new column.
            let mut v: Vec<Scalar> = (0..k).map(|i| self.get(i, k)).collect();
            for j in 0..k {
                let mut dot = field.zero();
                for i in 0..k {
                    dot = dot.add(&self.get(k, i).mul(&v[i]));
                }
                q[j + 2] = dot.neg();
                if j + 1 < k {
                    let mut next = vec![field.zero(); k];
                    for r in 0..k {
                        let mut acc = field.zero();
                        for t in 0..k {
                            acc = acc.add(&self.get(r, t).mul(&v[t]));
                        }
                        next[r] = acc;
                    }
                    v = next;
                }
            }
            let mut newp = vec![field.zero(); k + 2];
            for (i, np) in newp.iter_mut().enumerate() {
                for (j, pj) in p.iter().enumerate() {
                    if i >= j && i - j < q.len() {
                        *np = np.add(&q[i - j].mul(pj));
                    }
                }
            }
            p = newp;
        }
        p
    }
}

/// Deterministic phase normalization: scale so the largest-magnitude
/// component is real and positive (serialized bases stay reproducible).
pub fn canonical_phase(v: Vec<Scalar>) -> Vec<Scalar> {
    let mut best = 0usize;
    let mut best_abs = 0.0;
    for (i, s) in v.iter().enumerate() {
        if s.abs() > best_abs {
            best_abs = s.abs();
            best = i;
        }
    }
    if best_abs == 0.0 {
        return v;
    }
    let z = v[best].as_complex();
    let phase = Scalar::Complex(z.conj() / z.norm());
    v.iter().map(|s| s.mul(&phase)).collect()
}

/// Cyclic Jacobi eigensolver for a Hermitian matrix. Returns eigenvalues
/// and the unitary eigenvector matrix (columns). Destroys the input.
fn hermitian_jacobi(h: &mut [Vec<Complex64>]) -> (Vec<f64>, Vec<Vec<Complex64>>) {
    let n = h.len();
    let mut v = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = Complex64::new(1.0, 0.0);
    }
    let scale = h
        .iter()
        .flat_map(|r| r.iter().map(|z| z.norm()))
        .fold(0.0, f64::max)
        .max(1.0);
    for _sweep in 0..80 {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += h[p][q].norm_sqr();
            }
        }
        if off.sqrt() <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let hpq = h[p][q];
                if hpq.norm() <= 1e-18 * scale {
                    continue;
                }
                let phase = hpq / hpq.norm();
                let app = h[p][p].re;
                let aqq = h[q][q].re;
                let tau = (aqq - app) / (2.0 * hpq.norm());
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // Columns of the unitary: U[.,p] = c e_p - s conj(phase) e_q,
                // U[.,q] = s phase e_p + c e_q. Apply H <- U^H H U, V <- V U.
                let (cp, sp) = (Complex64::new(c, 0.0), Complex64::new(s, 0.0));
                for i in 0..n {
                    let (hip, hiq) = (h[i][p], h[i][q]);
                    h[i][p] = hip * cp - hiq * sp * phase.conj();
                    h[i][q] = hip * sp * phase + hiq * cp;
                }
                for j in 0..n {
                    let (hpj, hqj) = (h[p][j], h[q][j]);
                    h[p][j] = hpj * cp - hqj * sp * phase;
                    h[q][j] = hpj * sp * phase.conj() + hqj * cp;
                }
                for i in 0..n {
                    let (vip, viq) = (v[i][p], v[i][q]);
                    v[i][p] = vip * cp - viq * sp * phase.conj();
                    v[i][q] = vip * sp * phase + viq * cp;
                }
            }
        }
    }
    let evals: Vec<f64> = (0..n).map(|i| h[i][i].re).collect();
    (evals, v)
}

/// All complex roots (with multiplicity) of a polynomial given by ascending
/// coefficients, via Durand-Kerner iteration.
pub fn poly_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let mut c = coeffs.to_vec();
    while c.len() > 1 && c.last().unwrap().norm() == 0.0 {
        c.pop();
    }
    let deg = c.len().saturating_sub(1);
    if deg == 0 {
        return Vec::new();
    }
    let lead = *c.last().unwrap();
    let monic: Vec<Complex64> = c.iter().map(|a| a / lead).collect();
    let radius = 1.0 + monic[..deg].iter().map(|a| a.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            radius * seed.powu(k as u32 + 1) / seed.norm().powi(k as i32 + 1)
                * Complex64::from_polar(1.0, 0.123)
        })
        .collect();
    let eval = |x: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for a in monic.iter().rev() {
            acc = acc * x + a;
        }
        acc
    };
    for _ in 0..600 {
        let mut max_step = 0.0f64;
        for i in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if j != i {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                // Coincident iterates: nudge apart and keep going.
                z[i] += Complex64::new(1e-8, 1e-8);
                max_step = f64::MAX;
                continue;
            }
            let step = eval(z[i]) / denom;
            z[i] -= step;
            max_step = max_step.max(step.norm() / (1.0 + z[i].norm()));
        }
        if max_step < 1e-15 {
            break;
        }
    }
    z
}

/// Refines an estimated root of known multiplicity by Newton iteration on
/// the (m-1)-th derivative, where the root is simple. Durand-Kerner
/// clusters around a repeated root stall at a noise floor of order
/// eps^(1/m); this recovers full precision from the cluster mean.
pub fn polish_root(coeffs: &[Complex64], guess: Complex64, multiplicity: usize) -> Complex64 {
    let mut c = coeffs.to_vec();
    for _ in 1..multiplicity {
        c = derivative(&c);
    }
    let d = derivative(&c);
    let eval = |coeffs: &[Complex64], x: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for a in coeffs.iter().rev() {
            acc = acc * x + a;
        }
        acc
    };
    let mut z = guess;
    for _ in 0..40 {
        let denom = eval(&d, z);
        if denom.norm() == 0.0 {
            break;
        }
        let step = eval(&c, z) / denom;
        z -= step;
        if step.norm() <= 1e-16 * (1.0 + z.norm()) {
            break;
        }
    }
    z
}

fn derivative(coeffs: &[Complex64]) -> Vec<Complex64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, a)| a * k as f64)
        .collect()
}

/// Horner evaluation of an ascending-coefficient polynomial.
pub fn poly_eval(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    let field = x.field();
    let mut acc = field.zero();
    for a in coeffs.iter().rev() {
        acc = acc.mul(x).add(a);
    }
    acc
}

/// Divides an ascending-coefficient polynomial by (t - root); returns the
/// quotient (ascending) and the remainder.
pub fn poly_divide_linear(coeffs: &[Scalar], root: &Scalar) -> (Vec<Scalar>, Scalar) {
    let n = coeffs.len();
    if n <= 1 {
        return (
            Vec::new(),
            coeffs.first().copied().unwrap_or(root.field().zero()),
        );
    }
    let mut quot = vec![root.field().zero(); n - 1];
    let mut carry = coeffs[n - 1];
    for k in (0..n - 1).rev() {
        quot[k] = carry;
        carry = coeffs[k].add(&carry.mul(root));
    }
    (quot, carry)
}
