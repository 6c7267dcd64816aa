//! Constructors for the concrete algebras used throughout: the
//! two- and three-dimensional isospectral algebras, the cyclotomic model
//! C_n, twisted doubles and twisted powers, direct products, the
//! non-generic circle algebra, and medial extensions of quasigroup tables.
//!
//! Every constructor emits a plain [`Algebra`]; nothing downstream treats
//! the models specially except for the optional `ModelTag` that lets the
//! CLI pick the closed-form idempotent enumeration for `cn` files.

use num_complex::Complex64;

use crate::algebra::{Algebra, Element, ModelTag};
use crate::error::{Error, Result};
use crate::quasigroup::QuasigroupTable;
use crate::scalar::{half, primitive_root_of_unity, FieldDescriptor, Scalar, Tolerance};

/// The ground field as a one-dimensional algebra (e * e = e).
pub fn build_field_algebra(field: FieldDescriptor) -> Algebra {
    Algebra::new(field, 1, vec![field.one()])
        .expect("1-dim tensor is commutative")
        .with_model(ModelTag {
            name: "f".into(),
            n: None,
        })
}

/// The two-dimensional algebra with `c_i c_i = c_i`, `c1 c2 = -c1 - c2`.
/// Its three nonzero idempotents are c1, c2 and c3 = -c1 - c2.
pub fn build_a2(field: FieldDescriptor) -> Result<Algebra> {
    let mut gamma = vec![field.zero(); 8];
    let idx = |i: usize, j: usize, k: usize| (i * 2 + j) * 2 + k;
    gamma[idx(0, 0, 0)] = field.one();
    gamma[idx(1, 1, 1)] = field.one();
    for k in 0..2 {
        gamma[idx(0, 1, k)] = field.one().neg();
        gamma[idx(1, 0, k)] = field.one().neg();
    }
    Ok(Algebra::new(field, 2, gamma)?.with_model(ModelTag {
        name: "a2".into(),
        n: None,
    }))
}

/// The multiplication table of the seven idempotents of the 3-dimensional
/// model, 1-indexed: `A3_TABLE[i][j]` is the label of `c_{i+1} c_{j+1}`.
pub const A3_TABLE: [[usize; 7]; 7] = [
    [1, 5, 7, 3, 6, 2, 4],
    [5, 2, 6, 1, 4, 7, 3],
    [7, 6, 3, 2, 1, 4, 5],
    [3, 1, 2, 4, 7, 5, 6],
    [6, 4, 1, 7, 5, 3, 2],
    [2, 7, 4, 5, 3, 6, 1],
    [4, 3, 5, 6, 2, 1, 7],
];

/// The three-dimensional isospectral algebra over C together with its seven
/// idempotents c1..c7 in the standard labeling.
///
/// The structure constants use gamma = (1 + i sqrt(7))/4, the root of
/// 2 g^2 - g + 1 = 0 with positive imaginary part; the conjugate root gives
/// the complex-conjugate algebra. The constructor recomputes all seven
/// idempotents and asserts the full multiplication table instead of
/// hard-coding it.
pub fn build_a3() -> (Algebra, Vec<Element>) {
    let field = FieldDescriptor::complex();
    let g = Complex64::new(0.25, 7f64.sqrt() / 4.0);
    let gm1 = g - 1.0;
    let sc = |z: Complex64| Scalar::Complex(z);
    let n = 3usize;
    let mut gamma = vec![field.zero(); n * n * n];
    let mut put = |i: usize, j: usize, v: [Complex64; 3]| {
        for (k, z) in v.iter().enumerate() {
            gamma[(i * n + j) * n + k] = sc(*z);
            gamma[(j * n + i) * n + k] = sc(*z);
        }
    };
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    put(0, 0, [one, zero, zero]);
    put(1, 1, [zero, one, zero]);
    put(2, 2, [zero, zero, one]);
    put(0, 1, [gm1, -g, g]); // c5
    put(1, 2, [g, gm1, -g]); // c6
    put(2, 0, [-g, g, gm1]); // c7
    let alg = Algebra::new(field, 3, gamma)
        .expect("tensor built symmetric")
        .with_model(ModelTag {
            name: "a3".into(),
            n: None,
        });

    let e = |i: usize| alg.basis_element(i);
    let idm = vec![
        e(0),
        e(1),
        e(2),
        Element::new(vec![sc(-g), sc(-g), sc(-g)]),
        Element::new(vec![sc(gm1), sc(-g), sc(g)]),
        Element::new(vec![sc(g), sc(gm1), sc(-g)]),
        Element::new(vec![sc(-g), sc(g), sc(gm1)]),
    ];
    let tol = Tolerance::default();
    for (i, c) in idm.iter().enumerate() {
        let (ok, r) = alg.is_idempotent(c, &tol);
        assert!(ok, "c{} is not idempotent (residual {r:.3e})", i + 1);
    }
    for (i, ci) in idm.iter().enumerate() {
        for (j, cj) in idm.iter().enumerate() {
            let p = alg.mul(ci, cj).expect("same algebra");
            let target = &idm[A3_TABLE[i][j] - 1];
            assert!(
                p.sub(target).norm() < 1e-9,
                "c{} c{} does not match the table entry c{}",
                i + 1,
                j + 1,
                A3_TABLE[i][j]
            );
        }
    }
    (alg, idm)
}

/// The cyclotomic model: F[z]/(z^n - 1) with the twisted product
/// `p o q = p(e z) q(e z) mod z^n - 1`, in the monomial basis
/// `z^i o z^j = e^(i+j) z^((i+j) mod n)`.
///
/// Over a prime field, n must divide p - 1 so the root of unity exists.
pub fn build_cn(n: usize, field: FieldDescriptor) -> Result<Algebra> {
    assert!(n >= 2, "the cyclotomic model needs n >= 2");
    let eps = primitive_root_of_unity(n, &field)?;
    let mut gamma = vec![field.zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            gamma[(i * n + j) * n + (i + j) % n] = eps.pow((i + j) as u64);
        }
    }
    Ok(Algebra::new(field, n, gamma)?.with_model(ModelTag {
        name: "cn".into(),
        n: Some(n as u64),
    }))
}

/// Twisted doubling: `(x, y) o (z, w) = (xz + yw, zeta (xw + yz))` with
/// `zeta` in {-1, +1}.
pub fn twisted_double(a: &Algebra, zeta: i64) -> Result<Algebra> {
    assert!(zeta == 1 || zeta == -1, "zeta must be +1 or -1");
    let field = a.field();
    let m = a.dim();
    let n = 2 * m;
    let z = field.from_i64(zeta);
    let mut gamma = vec![field.zero(); n * n * n];
    let mut idx = |i: usize, j: usize, k: usize, v: Scalar| {
        gamma[(i * n + j) * n + k] = v;
    };
    for p in 0..m {
        for q in 0..m {
            for k in 0..m {
                let g = a.gamma(p, q, k);
                // first components multiply into the first component
                idx(p, q, k, g);
                // second components multiply into the first component
                idx(m + p, m + q, k, g);
                // cross terms land in the second component, twisted
                idx(p, m + q, m + k, z.mul(&g));
                idx(m + p, q, m + k, z.mul(&g));
            }
        }
    }
    Ok(Algebra::new(field, n, gamma)?.with_model(ModelTag {
        name: "twisted-double".into(),
        n: None,
    }))
}

/// The twisted power `A^(x d)_zeta`: polynomials of degree < d with
/// coefficients in A and product `p o q = p(zeta z) q(zeta z) mod z^d - 1`.
/// Requires `zeta^d = 1`.
pub fn twisted_power(a: &Algebra, d: usize, zeta: &Scalar) -> Result<Algebra> {
    assert!(d >= 1);
    let field = a.field();
    let one = field.one();
    let pow_ok = match zeta.pow(d as u64).sub(&one).abs() {
        r if field.is_prime() => r == 0.0,
        r => r <= 1e-9,
    };
    if !pow_ok {
        return Err(Error::NotARoot);
    }
    let m = a.dim();
    let n = d * m;
    let mut gamma = vec![field.zero(); n * n * n];
    for i in 0..d {
        for j in 0..d {
            let tw = zeta.pow((i + j) as u64);
            let kdeg = (i + j) % d;
            for p in 0..m {
                for q in 0..m {
                    for k in 0..m {
                        gamma[((i * m + p) * n + (j * m + q)) * n + (kdeg * m + k)] =
                            tw.mul(&a.gamma(p, q, k));
                    }
                }
            }
        }
    }
    Ok(Algebra::new(field, n, gamma)?.with_model(ModelTag {
        name: "twisted-power".into(),
        n: None,
    }))
}

/// Componentwise direct product `(a, x)(b, y) = (ab, xy)`.
pub fn direct_product(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let field = a.field();
    let (ma, mb) = (a.dim(), b.dim());
    let n = ma + mb;
    let mut gamma = vec![field.zero(); n * n * n];
    for i in 0..ma {
        for j in 0..ma {
            for k in 0..ma {
                gamma[(i * n + j) * n + k] = a.gamma(i, j, k);
            }
        }
    }
    for i in 0..mb {
        for j in 0..mb {
            for k in 0..mb {
                gamma[((ma + i) * n + (ma + j)) * n + (ma + k)] = b.gamma(i, j, k);
            }
        }
    }
    Ok(Algebra::new(field, n, gamma)?.with_model(ModelTag {
        name: "direct-product".into(),
        n: None,
    }))
}

/// The three-dimensional non-generic isospectral algebra whose nonzero
/// idempotents form the circle `sum x_i = sum x_i^2 = 1`.
///
/// The product is the symmetric completion
/// `(x o y)_i = x_i y_i - (x_j y_k + x_k y_j)/2` over `{i,j,k} = {1,2,3}`.
pub fn build_t() -> Algebra {
    let field = FieldDescriptor::complex();
    let n = 3;
    let mut gamma = vec![field.zero(); 27];
    let minus_half = half(&field).neg();
    for i in 0..3 {
        gamma[(i * n + i) * n + i] = field.one();
        let j = (i + 1) % 3;
        let k = (i + 2) % 3;
        gamma[(j * n + k) * n + i] = minus_half;
        gamma[(k * n + j) * n + i] = minus_half;
    }
    Algebra::new(field, 3, gamma)
        .expect("tensor built symmetric")
        .with_model(ModelTag {
            name: "t".into(),
            n: None,
        })
}

/// A point of the idempotent circle of [`build_t`], parametrized by angle.
pub fn t_circle_idempotent(t: f64) -> Element {
    let center = 1.0 / 3.0;
    let r = (2.0f64 / 3.0).sqrt();
    let u = [1.0 / 2f64.sqrt(), -1.0 / 2f64.sqrt(), 0.0];
    let v = [1.0 / 6f64.sqrt(), 1.0 / 6f64.sqrt(), -2.0 / 6f64.sqrt()];
    Element::new(
        (0..3)
            .map(|i| Scalar::complex(center + r * (t.cos() * u[i] + t.sin() * v[i]), 0.0))
            .collect(),
    )
}

/// The free algebra on an idempotent medial commutative quasigroup: basis
/// elements multiply exactly by the table. The maximal medial extension.
pub fn medial_extension(table: &QuasigroupTable, field: FieldDescriptor) -> Result<Algebra> {
    if !table.is_commutative() || !table.is_idempotent() {
        return Err(Error::NotIMCQuasigroup(
            "table is not commutative idempotent".into(),
        ));
    }
    if !table.is_latin() {
        return Err(Error::NotIMCQuasigroup(
            "table is not a Latin square".into(),
        ));
    }
    if !table.is_medial() {
        return Err(Error::NotIMCQuasigroup("table is not medial".into()));
    }
    let n = table.order();
    let mut gamma = vec![field.zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            gamma[(i * n + j) * n + table.get(i, j)] = field.one();
        }
    }
    Ok(Algebra::new(field, n, gamma)?.with_model(ModelTag {
        name: "medial-extension".into(),
        n: None,
    }))
}
