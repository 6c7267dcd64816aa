//! The Euler-Jacobi syzygies of generic algebras: the idempotents satisfy
//! a priori linear constraints, most visibly a vanishing sum.
//!
//! ```bash
//! cargo run -p nonassoc --example syzygies
//! ```

use nonassoc::idempotents::{enumerate_closed_form, syzygy_charpoly, syzygy_moment};
use nonassoc::models;
use nonassoc::scalar::{FieldDescriptor, Tolerance};
use num_complex::Complex64;

fn main() {
    let tol = Tolerance::default();
    let f = FieldDescriptor::complex();

    for n in 2..=5usize {
        let cn = models::build_cn(n, f).unwrap();
        let idm = enumerate_closed_form(&cn, &tol).unwrap();
        let sum = syzygy_moment(&cn, &idm, 1, |_, c| c.clone(), false).unwrap();
        let samples: Vec<Complex64> = (0..8)
            .map(|k| Complex64::from_polar(0.1 + 0.1 * k as f64, 0.7 * k as f64))
            .collect();
        let charpoly = syzygy_charpoly(&cn, &idm, &samples).unwrap();
        println!(
            "C{n}: |sum of {} idempotents| = {sum:.2e}, char-poly syzygy residual {charpoly:.2e}",
            idm.len()
        );
    }

    // the weighted Euler-Jacobi form with a quadratic map
    let c4 = models::build_cn(4, f).unwrap();
    let idm = enumerate_closed_form(&c4, &tol).unwrap();
    let weighted = syzygy_moment(&c4, &idm, 2, |a, c| a.mul(c, c).unwrap(), true).unwrap();
    println!("C4 weighted quadratic moment norm: {weighted:.2e}");

    // hand check in dimension 2: each char poly is t^2 - 1, so the sum is
    // 3 (t^2-1)/(-3/4) = 4 (1 - t^2)
    let c2 = models::build_cn(2, f).unwrap();
    let idm = enumerate_closed_form(&c2, &tol).unwrap();
    let residual = syzygy_charpoly(&c2, &idm, &[Complex64::new(0.0, 0.0)]).unwrap();
    println!("C2 at t = 0 matches the hand value 4: residual {residual:.2e}");
}
