//! The medial law `(xy)(zw) = (xz)(yw)` on basis quadruples, its squared
//! form, and what breaks it.
//!
//! ```bash
//! cargo run -p nonassoc --example mediality
//! ```

use nonassoc::algebra::Algebra;
use nonassoc::medial::{endomorphism_check, is_medial_basis, squared_identity_check};
use nonassoc::models;
use nonassoc::scalar::{FieldDescriptor, Scalar, Tolerance};
use rand::{Rng, SeedableRng};

fn main() {
    let tol = Tolerance::default();
    let f = FieldDescriptor::complex();

    for (name, alg) in [
        ("A2", models::build_a2(f).unwrap()),
        ("A3", models::build_a3().0),
        ("C4", models::build_cn(4, f).unwrap()),
        (
            "(A2 x A2)_-1",
            models::twisted_double(&models::build_a2(f).unwrap(), -1).unwrap(),
        ),
    ] {
        let report = is_medial_basis(&alg, &tol);
        println!(
            "{name}: medial = {}, quadruple residual {:.2e}, squared residual {:.2e}",
            report.verdict, report.basis_quadruple_residual, report.squared_identity_residual
        );
    }

    // the circle algebra is isospectral but NOT medial: the law already
    // fails at (e1, e1, e2, e2)
    let t = models::build_t();
    let report = is_medial_basis(&t, &tol);
    println!(
        "circle algebra: medial = {} (quadruple residual {:.3}, the witness being (e1 e1)(e2 e2) = (0,0,-1/2) vs (e1 e2)(e1 e2) = (0,0,1/4))",
        report.verdict, report.basis_quadruple_residual
    );

    // a generic random symmetric tensor is nowhere near medial
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    let mut gamma = vec![f.zero(); 27];
    for i in 0..3usize {
        for j in 0..=i {
            for k in 0..3 {
                let v = Scalar::complex(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5);
                gamma[(i * 3 + j) * 3 + k] = v;
                gamma[(j * 3 + i) * 3 + k] = v;
            }
        }
    }
    let random = Algebra::new(f, 3, gamma).unwrap();
    println!(
        "random symmetric tensor: quadruple residual {:.2e}, squared residual {:.2e}",
        is_medial_basis(&random, &tol).basis_quadruple_residual,
        squared_identity_check(&random, 30, 5)
    );

    // in a medial algebra L_c is an algebra endomorphism for idempotent c
    let c3 = models::build_cn(3, f).unwrap();
    println!(
        "C3: L_1 endomorphism residual {:.2e}",
        endomorphism_check(&c3, &c3.basis_element(0), &tol).unwrap()
    );
}
