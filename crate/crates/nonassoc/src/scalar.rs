//! Scalar backends: double-precision complex numbers and prime fields F_p.
//!
//! Every algebra in this crate is defined over one of two scalar fields.
//! Complex scalars compare with a tolerance; prime-field scalars are exact
//! residues. Characteristic 2 and 3 are rejected outright, so 1/2 always
//! exists.

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Which scalar backend an algebra lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Complex,
    Prime,
}

/// Runtime descriptor of the scalar field.
///
/// `p` is meaningful only when `kind == Prime` and is then a prime >= 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldDescriptor {
    kind: FieldKind,
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Multiplicative order of `a` modulo `p` (assumes gcd(a, p) = 1).
fn mod_order(a: u64, p: u64) -> u64 {
    let mut k = 1u64;
    let mut v = a % p;
    while v != 1 {
        v = ((v as u128 * a as u128) % p as u128) as u64;
        k += 1;
    }
    k
}

impl FieldDescriptor {
    pub fn complex() -> Self {
        FieldDescriptor {
            kind: FieldKind::Complex,
            p: 0,
        }
    }

    /// Prime field F_p. Rejects composite p and characteristics 2, 3.
    pub fn prime(p: u64) -> Result<Self> {
        if p < 5 || !is_prime(p) {
            return Err(Error::BadCharacteristic(p));
        }
        Ok(FieldDescriptor {
            kind: FieldKind::Prime,
            p,
        })
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn is_complex(&self) -> bool {
        self.kind == FieldKind::Complex
    }

    pub fn is_prime(&self) -> bool {
        self.kind == FieldKind::Prime
    }

    /// The characteristic p. Panics if the field is complex.
    pub fn modulus(&self) -> u64 {
        assert!(self.is_prime(), "modulus() on a complex field");
        self.p
    }

    pub fn zero(&self) -> Scalar {
        match self.kind {
            FieldKind::Complex => Scalar::Complex(Complex64::new(0.0, 0.0)),
            FieldKind::Prime => Scalar::Prime {
                value: 0,
                modulus: self.p,
            },
        }
    }

    pub fn one(&self) -> Scalar {
        match self.kind {
            FieldKind::Complex => Scalar::Complex(Complex64::new(1.0, 0.0)),
            FieldKind::Prime => Scalar::Prime {
                value: 1,
                modulus: self.p,
            },
        }
    }

    /// Embed a signed integer.
    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.kind {
            FieldKind::Complex => Scalar::Complex(Complex64::new(v as f64, 0.0)),
            FieldKind::Prime => {
                let p = self.p as i128;
                let r = ((v as i128 % p) + p) % p;
                Scalar::Prime {
                    value: r as u64,
                    modulus: self.p,
                }
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match self.kind {
            FieldKind::Complex => json!({"kind": "complex"}),
            FieldKind::Prime => json!({"kind": "prime", "p": self.p}),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let kind = v
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Json("field descriptor missing \"kind\"".into()))?;
        match kind {
            "complex" => Ok(FieldDescriptor::complex()),
            "prime" => {
                let p = v
                    .get("p")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| Error::Json("prime field missing \"p\"".into()))?;
                FieldDescriptor::prime(p)
            }
            other => Err(Error::Json(format!("unknown field kind {other:?}"))),
        }
    }
}

/// A scalar value in either backend. Prime residues are stored reduced mod p
/// and carry their modulus so mixed-field arithmetic can be caught.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Scalar {
    Complex(Complex64),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn complex(re: f64, im: f64) -> Self {
        Scalar::Complex(Complex64::new(re, im))
    }

    pub fn field(&self) -> FieldDescriptor {
        match self {
            Scalar::Complex(_) => FieldDescriptor::complex(),
            Scalar::Prime { modulus, .. } => FieldDescriptor {
                kind: FieldKind::Prime,
                p: *modulus,
            },
        }
    }

    pub fn as_complex(&self) -> Complex64 {
        match self {
            Scalar::Complex(z) => *z,
            Scalar::Prime { .. } => panic!("as_complex() on a prime-field scalar"),
        }
    }

    pub fn as_residue(&self) -> u64 {
        match self {
            Scalar::Prime { value, .. } => *value,
            Scalar::Complex(_) => panic!("as_residue() on a complex scalar"),
        }
    }

    /// |x| for complex; 0.0 or 1.0 for prime residues (exact zero test).
    pub fn abs(&self) -> f64 {
        match self {
            Scalar::Complex(z) => z.norm(),
            Scalar::Prime { value, .. } => {
                if *value == 0 {
                    0.0
                } else {
                    1.0
                }
            }
        }
    }

    pub fn is_exactly_zero(&self) -> bool {
        match self {
            Scalar::Complex(z) => z.re == 0.0 && z.im == 0.0,
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Complex(z) => Scalar::Complex(z.conj()),
            s => *s,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Complex(a), Scalar::Complex(b)) => Scalar::Complex(a + b),
            (
                Scalar::Prime {
                    value: a,
                    modulus: p,
                },
                Scalar::Prime {
                    value: b,
                    modulus: q,
                },
            ) => {
                assert_eq!(p, q, "mixed prime moduli");
                Scalar::Prime {
                    value: (a + b) % p,
                    modulus: *p,
                }
            }
            _ => panic!("mixed-field scalar arithmetic"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Complex(z) => Scalar::Complex(-z),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Complex(a), Scalar::Complex(b)) => Scalar::Complex(a * b),
            (
                Scalar::Prime {
                    value: a,
                    modulus: p,
                },
                Scalar::Prime {
                    value: b,
                    modulus: q,
                },
            ) => {
                assert_eq!(p, q, "mixed prime moduli");
                Scalar::Prime {
                    value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => panic!("mixed-field scalar arithmetic"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Complex(z) => {
                if z.norm() == 0.0 {
                    None
                } else {
                    Some(Scalar::Complex(z.inv()))
                }
            }
            Scalar::Prime { value, modulus } => {
                if *value == 0 {
                    None
                } else {
                    Some(Scalar::Prime {
                        value: mod_pow(*value, modulus - 2, *modulus),
                        modulus: *modulus,
                    })
                }
            }
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut acc = self.field().one();
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        match self {
            Scalar::Complex(z) => json!([z.re, z.im]),
            Scalar::Prime { value, .. } => json!(value),
        }
    }

    pub fn from_json(v: &Value, field: &FieldDescriptor) -> Result<Scalar> {
        match field.kind {
            FieldKind::Complex => {
                let arr = v
                    .as_array()
                    .filter(|a| a.len() == 2)
                    .ok_or_else(|| Error::Json("complex scalar must be a [re, im] pair".into()))?;
                let re = arr[0]
                    .as_f64()
                    .ok_or_else(|| Error::Json("non-numeric scalar component".into()))?;
                let im = arr[1]
                    .as_f64()
                    .ok_or_else(|| Error::Json("non-numeric scalar component".into()))?;
                Ok(Scalar::complex(re, im))
            }
            FieldKind::Prime => {
                let raw = v.as_u64().ok_or_else(|| {
                    Error::Json("prime scalar must be a nonnegative integer".into())
                })?;
                Ok(Scalar::Prime {
                    value: raw % field.p,
                    modulus: field.p,
                })
            }
        }
    }
}

impl std::fmt::Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Scalar::Complex(z) => {
                if z.im == 0.0 {
                    write!(f, "{:.6}", z.re)
                } else {
                    write!(f, "{:.6}{:+.6}i", z.re, z.im)
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Numerical tolerances used throughout.
///
/// `eq_tol` is the general comparison tolerance, `newton_tol` the Newton
/// convergence threshold, `dedupe_tol` the root deduplication distance.
#[derive(Debug, Clone, Copy)]
pub struct Tolerance {
    pub eq_tol: f64,
    pub newton_tol: f64,
    pub dedupe_tol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eq_tol: 1e-9,
            newton_tol: 1e-12,
            dedupe_tol: 1e-6,
        }
    }
}

impl Tolerance {
    pub fn new(eq_tol: f64, newton_tol: f64, dedupe_tol: f64) -> Result<Self> {
        if !(eq_tol > 0.0) {
            return Err(Error::BadTolerance("eq_tol must be positive".into()));
        }
        if !(newton_tol > 0.0 && newton_tol <= dedupe_tol) {
            return Err(Error::BadTolerance(
                "need 0 < newton_tol <= dedupe_tol".into(),
            ));
        }
        Ok(Tolerance {
            eq_tol,
            newton_tol,
            dedupe_tol,
        })
    }
}

/// The primitive root of unity of order `n`: exp(2 pi i / n) over C, or
/// g^((p-1)/n) over F_p where g is the least primitive root mod p.
///
/// Over F_p the root exists iff n divides p - 1.
pub fn primitive_root_of_unity(n: usize, field: &FieldDescriptor) -> Result<Scalar> {
    assert!(n >= 1, "order must be positive");
    match field.kind {
        FieldKind::Complex => {
            let theta = 2.0 * std::f64::consts::PI / n as f64;
            Ok(Scalar::Complex(Complex64::from_polar(1.0, theta)))
        }
        FieldKind::Prime => {
            let p = field.p;
            if (p - 1) % n as u64 != 0 {
                return Err(Error::NoRootOfUnity { n, p });
            }
            let mut g = 2u64;
            while mod_order(g, p) != p - 1 {
                g += 1;
            }
            Ok(Scalar::Prime {
                value: mod_pow(g, (p - 1) / n as u64, p),
                modulus: p,
            })
        }
    }
}

/// The inverse of 2: 0.5 over C, (p+1)/2 over F_p.
pub fn half(field: &FieldDescriptor) -> Scalar {
    match field.kind {
        FieldKind::Complex => Scalar::complex(0.5, 0.0),
        FieldKind::Prime => Scalar::Prime {
            value: (field.p + 1) / 2,
            modulus: field.p,
        },
    }
}

/// Tolerance-based equality over C, exact equality over F_p.
pub fn approx_eq(a: &Scalar, b: &Scalar, tol: &Tolerance) -> Result<bool> {
    match (a, b) {
        (Scalar::Complex(x), Scalar::Complex(y)) => Ok((x - y).norm() <= tol.eq_tol),
        (
            Scalar::Prime {
                value: x,
                modulus: p,
            },
            Scalar::Prime {
                value: y,
                modulus: q,
            },
        ) => {
            if p != q {
                return Err(Error::FieldMismatch);
            }
            Ok(x == y)
        }
        _ => Err(Error::FieldMismatch),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent oracle: multiplicative order by brute-force powering.
    fn brute_order(a: u64, p: u64) -> u64 {
        let mut v = a % p;
        let mut k = 1;
        while v != 1 {
            v = v * a % p;
            k += 1;
            assert!(k <= p, "not a unit");
        }
        k
    }

    #[test]
    fn field_descriptor_rejects_bad_characteristics() {
        assert!(FieldDescriptor::prime(2).is_err());
        assert!(FieldDescriptor::prime(3).is_err());
        assert!(FieldDescriptor::prime(15).is_err());
        assert!(FieldDescriptor::prime(7).is_ok());
    }

    #[test]
    fn root_of_unity_complex_small_orders() {
        let f = FieldDescriptor::complex();
        let e1 = primitive_root_of_unity(1, &f).unwrap().as_complex();
        assert!((e1 - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        let e2 = primitive_root_of_unity(2, &f).unwrap().as_complex();
        assert!((e2 - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn root_of_unity_f7_order_three() {
        // Least primitive root mod 7 is 3, and 3^2 = 2 has order 3 in F_7.
        let f = FieldDescriptor::prime(7).unwrap();
        let e3 = primitive_root_of_unity(3, &f).unwrap();
        assert_eq!(e3.as_residue(), 2);
        assert_eq!(brute_order(e3.as_residue(), 7), 3);
    }

    #[test]
    fn root_of_unity_requires_divisibility() {
        let f = FieldDescriptor::prime(7).unwrap();
        assert!(matches!(
            primitive_root_of_unity(4, &f),
            Err(Error::NoRootOfUnity { .. })
        ));
    }

    #[test]
    fn root_order_is_exact() {
        // The returned root has multiplicative order exactly n: no smaller
        // positive power is 1.
        for p in [5u64, 7, 13] {
            let f = FieldDescriptor::prime(p).unwrap();
            for n in 1..=(p - 1) as usize {
                if (p - 1) % n as u64 != 0 {
                    continue;
                }
                let e = primitive_root_of_unity(n, &f).unwrap();
                assert_eq!(brute_order(e.as_residue().max(1), p), n as u64);
            }
        }
        let f = FieldDescriptor::complex();
        for n in 1..=12usize {
            let e = primitive_root_of_unity(n, &f).unwrap();
            for k in 1..n {
                assert!(e.pow(k as u64).sub(&f.one()).abs() > 1e-3);
            }
            assert!(e.pow(n as u64).sub(&f.one()).abs() < 1e-12);
        }
    }

    #[test]
    fn half_times_two_is_one() {
        let fc = FieldDescriptor::complex();
        assert!(half(&fc).mul(&fc.from_i64(2)).sub(&fc.one()).abs() < 1e-15);
        let f7 = FieldDescriptor::prime(7).unwrap();
        assert_eq!(half(&f7).as_residue(), 4);
        assert_eq!(half(&f7).mul(&f7.from_i64(2)), f7.one());
    }

    #[test]
    fn approx_eq_cases() {
        let tol = Tolerance::default();
        let a = Scalar::complex(1.0, 0.0);
        let b = Scalar::complex(1.0 + 1e-12, 0.0);
        assert!(approx_eq(&a, &b, &tol).unwrap());
        let c = Scalar::complex(0.5, 0.0);
        let d = Scalar::complex(0.5 + 1e-3, 0.0);
        assert!(!approx_eq(&c, &d, &tol).unwrap());

        let f7 = FieldDescriptor::prime(7).unwrap();
        assert!(approx_eq(&f7.from_i64(3), &f7.from_i64(3), &tol).unwrap());
        assert!(!approx_eq(&f7.from_i64(3), &f7.from_i64(4), &tol).unwrap());
        assert!(approx_eq(&a, &f7.from_i64(1), &tol).is_err());
    }

    #[test]
    fn tolerance_validation() {
        assert!(Tolerance::new(1e-9, 1e-12, 1e-6).is_ok());
        assert!(Tolerance::new(0.0, 1e-12, 1e-6).is_err());
        assert!(Tolerance::new(1e-9, 1e-3, 1e-6).is_err());
    }

    #[test]
    fn scalar_json_round_trip() {
        let fc = FieldDescriptor::complex();
        let z = Scalar::complex(-0.5, 0.125);
        assert_eq!(Scalar::from_json(&z.to_json(), &fc).unwrap(), z);
        let f7 = FieldDescriptor::prime(7).unwrap();
        let r = f7.from_i64(-1);
        assert_eq!(r.as_residue(), 6);
        assert_eq!(Scalar::from_json(&r.to_json(), &f7).unwrap(), r);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn field_axioms_f7(a in 0i64..7, b in 0i64..7, c in 0i64..7) {
                let f = FieldDescriptor::prime(7).unwrap();
                let (x, y, z) = (f.from_i64(a), f.from_i64(b), f.from_i64(c));
                prop_assert_eq!(x.add(&y), y.add(&x));
                prop_assert_eq!(x.mul(&y), y.mul(&x));
                prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
                prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
                prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
                if !x.is_exactly_zero() {
                    prop_assert_eq!(x.mul(&x.inv().unwrap()), f.one());
                }
            }

            #[test]
            fn field_axioms_complex(re in -5.0f64..5.0, im in -5.0f64..5.0,
                                    re2 in -5.0f64..5.0, im2 in -5.0f64..5.0,
                                    re3 in -5.0f64..5.0, im3 in -5.0f64..5.0) {
                let tol = Tolerance::default();
                let x = Scalar::complex(re, im);
                let y = Scalar::complex(re2, im2);
                let z = Scalar::complex(re3, im3);
                prop_assert!(approx_eq(&x.add(&y), &y.add(&x), &tol).unwrap());
                prop_assert!(approx_eq(&x.mul(&y), &y.mul(&x), &tol).unwrap());
                prop_assert!(x.mul(&y).mul(&z).sub(&x.mul(&y.mul(&z))).abs() < 1e-9);
                prop_assert!(x.mul(&y.add(&z)).sub(&x.mul(&y).add(&x.mul(&z))).abs() < 1e-9);
            }
        }
    }
}
