//! The generic determinant and the operator identities it satisfies:
//! `L_x^n = d(x) I` and `x^(n+1) = b_n(x) x` with `b_n = d` multiplicative.
//!
//! ```bash
//! cargo run -p nonassoc --example determinant_identities
//! ```

use nonassoc::medial::{
    generic_determinant, generic_determinant_routes, verify_bn, verify_lxn_identity,
};
use nonassoc::models;
use nonassoc::scalar::{FieldDescriptor, Tolerance};
use rand::SeedableRng;

fn main() {
    let tol = Tolerance::default();
    let f = FieldDescriptor::complex();

    for n in 2..=5usize {
        let cn = models::build_cn(n, f).unwrap();
        let c = cn.basis_element(0);
        let (power, mult) = verify_bn(&cn, &c, 60, 42, &tol).unwrap();
        let lxn = verify_lxn_identity(&cn, &c, 40, 43, &tol).unwrap();
        println!(
            "C{n}: x^(n+1) = b(x) x within {power:.2e}; b multiplicative within {mult:.2e}; L_x^n = d(x) I within {lxn:.2e}"
        );
    }

    // the two routes to d(x): product of generic traces vs circulant det
    let c4 = models::build_cn(4, f).unwrap();
    let c = c4.basis_element(0);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
    let x = c4.random_element(&mut rng);
    let (prod, circ) = generic_determinant_routes(&c4, &c, &x, &tol).unwrap();
    println!("C4 random x: product route {prod:.6}, circulant route {circ:.6}");

    // on the 2-dim model the determinant is the binary quadratic form
    // x1^2 - x1 x2 + x2^2
    let a2 = models::build_a2(f).unwrap();
    let c1 = a2.basis_element(0);
    for (x1, x2) in [(1i64, 0i64), (2, 1), (-1, 3)] {
        let d = generic_determinant(&a2, &c1, &a2.element_from_i64(&[x1, x2]), &tol)
            .unwrap()
            .as_complex();
        println!(
            "A2 delta({x1}, {x2}) = {:.4} (x1^2 - x1 x2 + x2^2 = {})",
            d.re,
            x1 * x1 - x1 * x2 + x2 * x2
        );
    }
}
