//! Canonical forms and the one-isomorphism-class theorem: all medial
//! generic isospectral algebras of one dimension collapse to the same
//! canonical tensor.
//!
//! ```bash
//! cargo run -p nonassoc --example canonical_isomorphism
//! ```

use nonassoc::idempotents::{enumerate_closed_form, enumerate_newton};
use nonassoc::models;
use nonassoc::peirce::{are_isomorphic, canonical_form, verify_weak_power_associativity, Word};
use nonassoc::scalar::{FieldDescriptor, Tolerance};

fn main() {
    let tol = Tolerance::default();
    let f = FieldDescriptor::complex();

    let c3 = models::build_cn(3, f).unwrap();
    let idm = enumerate_closed_form(&c3, &tol).unwrap();
    let cf = canonical_form(&c3, &idm, &tol).unwrap();
    println!("C3 canonical tensor in the principal-power basis (b_k b_m -> coefficients):");
    for k in 0..3 {
        for m in 0..3 {
            let entries: Vec<String> = (0..3)
                .map(|r| cf.tensor_entry(k, m, r).to_string())
                .collect();
            println!("  b{k} b{m} = [{}]", entries.join(", "));
        }
    }

    let (a3, _) = models::build_a3();
    let idm_a3 = enumerate_newton(&a3, 5, None, &tol).unwrap();
    let cf_a3 = canonical_form(&a3, &idm_a3, &tol).unwrap();
    let same = (0..27).all(|i| cf.tensor[i].sub(&cf_a3.tensor[i]).abs() < 1e-8);
    println!("A3 produces the same canonical tensor: {same}");

    match are_isomorphic(&a3, &c3, 5, &tol).unwrap() {
        Some(m) => {
            println!("A3 and C3 are isomorphic; change of basis:");
            for i in 0..3 {
                let row: Vec<String> = (0..3).map(|j| m.get(i, j).to_string()).collect();
                println!("  [{}]", row.join(", "));
            }
        }
        None => println!("not isomorphic"),
    }

    // weak power associativity: every word in w1 is a principal power up
    // to a root of unity, e.g. (w1^2)(w1^2) = eps^(-1) w1^4
    let word = Word::product(Word::principal(2), Word::principal(2));
    let (b, s) = verify_weak_power_associativity(&c3, &cf.w1, &word, &tol).unwrap();
    println!("(w1^2)(w1^2) / w1^4 = {b:.6} = eps^{s}");
}
