//! Gallery of the built-in algebra models.
//!
//! ```bash
//! cargo run -p nonassoc --example models
//! ```

use nonassoc::models;
use nonassoc::scalar::{primitive_root_of_unity, FieldDescriptor, Tolerance};

fn main() {
    let f = FieldDescriptor::complex();
    let f7 = FieldDescriptor::prime(7).unwrap();
    let tol = Tolerance::default();

    let a2 = models::build_a2(f).unwrap();
    println!("A2: dim {}, c1 c2 = {:?}", a2.dim(), {
        let p = a2.mul(&a2.basis_element(0), &a2.basis_element(1)).unwrap();
        (p.get(0).to_string(), p.get(1).to_string())
    });

    let (a3, idm) = models::build_a3();
    println!(
        "A3: dim {}, built with gamma = (1 + i sqrt 7)/4 and {} verified idempotents",
        a3.dim(),
        idm.len()
    );

    for n in [2usize, 3, 4] {
        let cn = models::build_cn(n, f).unwrap();
        let z = cn.basis_element(1);
        let sq = cn.principal_power(&z, 2);
        println!(
            "C{n}: z o z = {} z^2  (the twist shows up as a root-of-unity factor)",
            sq.get(2 % n)
        );
    }

    let dbl = models::twisted_double(&models::build_field_algebra(f7), -1).unwrap();
    let p = dbl
        .mul(
            &dbl.element_from_i64(&[1, 0]),
            &dbl.element_from_i64(&[3, 1]),
        )
        .unwrap();
    println!("(F7 x F7)_-1: (1,0) o (3,1) = ({}, {})", p.get(0), p.get(1));

    let eps = primitive_root_of_unity(3, &f).unwrap();
    let tp = models::twisted_power(&models::build_field_algebra(f), 3, &eps).unwrap();
    println!(
        "F^(x3) at a primitive cube root reproduces C3 entrywise: {}",
        (0..27).all(|i| {
            let (a, b, c) = (i / 9, (i / 3) % 3, i % 3);
            tp.gamma(a, b, c)
                .sub(&models::build_cn(3, f).unwrap().gamma(a, b, c))
                .abs()
                < 1e-12
        })
    );

    let t = models::build_t();
    let c = models::t_circle_idempotent(1.234);
    let (ok, r) = t.is_idempotent(&c, &tol);
    println!("circle algebra: sampled circle point is idempotent: {ok} (residual {r:.2e})");

    let zn = nonassoc::quasigroup::build_zn_quasigroup(5).unwrap();
    let ext = models::medial_extension(&zn, f).unwrap();
    println!(
        "medial extension of Z_5: dim {}, every basis vector idempotent: {}",
        ext.dim(),
        (0..5).all(|i| ext.is_idempotent(&ext.basis_element(i), &tol).0)
    );
}
