//! The three idempotent enumeration routes side by side.
//!
//! ```bash
//! cargo run -p nonassoc --example idempotents
//! ```

use nonassoc::idempotents::{
    check_generic, enumerate_brute_force, enumerate_closed_form, enumerate_newton,
};
use nonassoc::models;
use nonassoc::scalar::{FieldDescriptor, Tolerance};

fn main() {
    let tol = Tolerance::default();
    let f = FieldDescriptor::complex();

    // closed form on the cyclotomic model: 2^n - 1 roots from the value
    // recursion over (2^n - 1)-th roots of unity
    let c4 = models::build_cn(4, f).unwrap();
    let closed = enumerate_closed_form(&c4, &tol).unwrap();
    println!(
        "C4 closed form: {} idempotents, worst residual {:.2e}",
        closed.len(),
        closed.residuals.iter().cloned().fold(0.0, f64::max)
    );

    // Newton iteration on F(x) = x^2 - x with seeded Gaussian starts
    let (a3, _) = models::build_a3();
    let newton = enumerate_newton(&a3, 7, None, &tol).unwrap();
    println!(
        "A3 Newton: {} idempotents, complete = {}",
        newton.len(),
        newton.complete
    );
    let report = check_generic(&a3, &newton, &tol, 7).unwrap();
    println!(
        "A3 genericity: verdict {}, count {}/{}, 1/2 in spectrum: {}",
        report.verdict, report.count, report.expected, report.half_in_spectrum
    );

    // the circle algebra never completes: its idempotents form a curve
    let t = models::build_t();
    let sampled = enumerate_newton(&t, 7, Some(500), &tol).unwrap();
    println!(
        "circle algebra Newton: {} distinct roots found, complete = {} (idempotent variety is a circle)",
        sampled.len(),
        sampled.complete
    );

    // exhaustive search over a prime field
    let f7 = FieldDescriptor::prime(7).unwrap();
    let pairs = models::twisted_double(&models::build_field_algebra(f7), -1).unwrap();
    let brute = enumerate_brute_force(&pairs).unwrap();
    print!("(F7 x F7)_-1 brute force:");
    for e in &brute.elements {
        print!(" ({}, {})", e.get(0), e.get(1));
    }
    println!();
}
