//! Peirce decomposition, isospectrality and fusion rules.
//!
//! ```bash
//! cargo run -p nonassoc --example peirce_spectra
//! ```

use nonassoc::idempotents::enumerate_closed_form;
use nonassoc::models;
use nonassoc::peirce::{fusion_check, is_isospectral, peirce_decompose, theta_projection};
use nonassoc::scalar::{FieldDescriptor, Tolerance};

fn main() {
    let tol = Tolerance::default();
    let f = FieldDescriptor::complex();

    let c4 = models::build_cn(4, f).unwrap();
    let data = peirce_decompose(&c4, &c4.basis_element(0), &tol).unwrap();
    println!("C4 at the unit: semisimple = {}", data.semisimple);
    for (j, v) in data.column_values.iter().enumerate() {
        println!("  eigenvalue {j}: {v:.6}");
    }

    let idm = enumerate_closed_form(&c4, &tol).unwrap();
    let (iso, _) = is_isospectral(&c4, &idm, &tol).unwrap();
    println!("C4 isospectral across all {} idempotents: {iso}", idm.len());

    // fusion: w_k w_j lands in the (k+j mod n) eigenline
    let mut worst = 0.0f64;
    for c in &idm.elements {
        worst = worst.max(fusion_check(&c4, c, &tol).unwrap());
    }
    println!("C4 fusion residual over all idempotents: {worst:.2e}");

    // the circle algebra is isospectral too, with spectrum {1, -1/2, 1/2}
    let t = models::build_t();
    let c = models::t_circle_idempotent(0.3);
    let data = peirce_decompose(&t, &c, &tol).unwrap();
    let mut spec: Vec<f64> = data.spectrum.iter().map(|z| z.re).collect();
    spec.sort_by(|a, b| a.partial_cmp(b).unwrap());
    println!("circle algebra spectrum at a sampled idempotent: {spec:?}");

    // theta projections pick out Peirce components with coefficient n
    let c2 = models::build_cn(2, f).unwrap();
    let one = c2.basis_element(0);
    let (theta, _) = theta_projection(&c2, &one, 0, &one, &tol).unwrap();
    println!("theta_0 of the base idempotent on itself: {theta:.6} (equals dim)");
}
