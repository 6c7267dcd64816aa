//! The Kaplansky isotope `x o y = L_c^{-1}(xy)`: a unital commutative
//! associative algebra hiding inside every medial algebra with an
//! invertible idempotent.
//!
//! ```bash
//! cargo run -p nonassoc --example kaplansky
//! ```

use nonassoc::medial::{det_homomorphism_check, kaplansky_isotope};
use nonassoc::models;
use nonassoc::report::associativity_residual;
use nonassoc::scalar::{FieldDescriptor, Tolerance};

fn main() {
    let tol = Tolerance::default();
    let f = FieldDescriptor::complex();

    // the isotope of the cyclotomic model at 1 is the plain quotient ring
    let c4 = models::build_cn(4, f).unwrap();
    let iso = kaplansky_isotope(&c4, &c4.basis_element(0), &tol).unwrap();
    let plain = (0..4).all(|i| {
        (0..4).all(|j| {
            (0..4).all(|k| {
                let want = if (i + j) % 4 == k { 1.0 } else { 0.0 };
                (iso.gamma(i, j, k).as_complex().re - want).abs() < 1e-12
                    && iso.gamma(i, j, k).as_complex().im.abs() < 1e-12
            })
        })
    });
    println!("C4 isotope at 1 equals F[z]/(z^4 - 1): {plain}");
    println!(
        "C4 isotope associativity residual: {:.2e}",
        associativity_residual(&iso)
    );

    // same trick on the 2-dim model
    let a2 = models::build_a2(f).unwrap();
    let iso = kaplansky_isotope(&a2, &a2.basis_element(0), &tol).unwrap();
    println!(
        "A2 isotope at c1: associativity residual {:.2e}",
        associativity_residual(&iso)
    );

    // the isotope explains why det L_x / det L_c is multiplicative
    let r = det_homomorphism_check(&a2, &a2.basis_element(0), 100, 1, &tol).unwrap();
    println!("A2: phi(xy) = phi(x) phi(y) within {r:.2e} over 100 random pairs");

    // over a prime field everything is exact
    let f7 = FieldDescriptor::prime(7).unwrap();
    let a2f7 = models::build_a2(f7).unwrap();
    let iso = kaplansky_isotope(&a2f7, &a2f7.basis_element(0), &tol).unwrap();
    println!(
        "A2(F7) isotope associativity residual: {:.1} (exact arithmetic)",
        associativity_residual(&iso)
    );
}
