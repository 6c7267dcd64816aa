//! Exact arithmetic over prime fields: brute-force idempotent search and
//! the F_5 / F_7 dichotomy for the twisted pair algebra.
//!
//! ```bash
//! cargo run -p nonassoc --example finite_fields
//! ```

use nonassoc::idempotents::enumerate_brute_force;
use nonassoc::medial::is_medial_basis;
use nonassoc::models;
use nonassoc::peirce::is_isospectral;
use nonassoc::scalar::{FieldDescriptor, Scalar, Tolerance};

fn main() {
    let tol = Tolerance::default();

    // whether (F_p x F_p)_-1 is generic depends on -3 being a square mod p
    for p in [5u64, 7, 13] {
        let fp = FieldDescriptor::prime(p).unwrap();
        let pairs = models::twisted_double(&models::build_field_algebra(fp), -1).unwrap();
        let set = enumerate_brute_force(&pairs).unwrap();
        let coords: Vec<(u64, u64)> = set
            .elements
            .iter()
            .map(|e| (e.get(0).as_residue(), e.get(1).as_residue()))
            .collect();
        println!(
            "(F_{p} x F_{p})_-1: {} nonzero idempotents {coords:?}",
            set.len()
        );
    }

    // A2 over F_7 matches the pair algebra: same count, same spectra
    let f7 = FieldDescriptor::prime(7).unwrap();
    let a2 = models::build_a2(f7).unwrap();
    let set = enumerate_brute_force(&a2).unwrap();
    println!("A2(F_7): {} idempotents, medial: {}", set.len(), {
        is_medial_basis(&a2, &tol).verdict
    });
    let (iso, _) = is_isospectral(&a2, &set, &tol).unwrap();
    println!("A2(F_7) isospectral (equal characteristic polynomials): {iso}");
    for c in &set.elements {
        let pe = a2.left_mul_matrix(c).prime_eigen().unwrap();
        let coords: Vec<u64> = c.coeffs().iter().map(Scalar::as_residue).collect();
        println!(
            "  c = {coords:?}: roots {:?}, split: {}",
            pe.roots, pe.split
        );
    }

    // the cyclotomic model lives over F_p whenever n divides p - 1
    let f13 = FieldDescriptor::prime(13).unwrap();
    let c3 = models::build_cn(3, f13).unwrap();
    let set = enumerate_brute_force(&c3).unwrap();
    println!(
        "C3 over F_13 (3 | 12): {} idempotents by brute force, medial: {}",
        set.len(),
        is_medial_basis(&c3, &tol).verdict
    );
}
