//! The idempotent quasigroup: Latin/medial certificates, the hidden
//! cyclic group, and the relabeling onto Z_N with the half-sum rule.
//!
//! ```bash
//! cargo run -p nonassoc --example quasigroup_table
//! ```

use nonassoc::idempotents::{enumerate_closed_form, IdempotentSet, Method};
use nonassoc::models;
use nonassoc::quasigroup::{
    boxplus_group, find_generator, idm_table, isotopy_to_zn, QuasigroupTable,
};
use nonassoc::scalar::{FieldDescriptor, Tolerance};

fn main() {
    let tol = Tolerance::default();

    // the seven idempotents of the 3-dim model in their standard labeling
    let (a3, labeled) = models::build_a3();
    let table = QuasigroupTable::from_elements(&a3, &labeled, &tol).unwrap();
    println!("multiplication table of the seven idempotents (c_i c_j):");
    print!("{}", table.render_ascii());
    println!(
        "latin: {}, commutative: {}, idempotent: {}, medial: {}",
        table.is_latin(),
        table.is_commutative(),
        table.is_idempotent(),
        table.is_medial()
    );

    let set = IdempotentSet::from_verified(&a3, labeled, Method::Newton, true, &tol).unwrap();
    let rel = isotopy_to_zn(&a3, &set, &tol).unwrap();
    println!(
        "relabeling onto Z_7 verified on all 49 pairs: {} (phi = {:?})",
        rel.verified, rel.phi
    );

    // after relabeling the table is (i + j)/2 mod 7
    let n = set.len();
    let mut inverse = vec![0usize; n];
    for (i, v) in rel.phi.iter().enumerate() {
        inverse[*v as usize] = i;
    }
    let relabeled: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| rel.phi[table.get(inverse[u], inverse[v])] as usize)
                .collect()
        })
        .collect();
    println!("relabeled (half-sum rule):");
    print!(
        "{}",
        QuasigroupTable::from_indices(relabeled).render_ascii()
    );

    // the boxplus group of the cyclotomic models is cyclic of order 2^n-1
    for n in 2..=5usize {
        let cn = models::build_cn(n, FieldDescriptor::complex()).unwrap();
        let idm = enumerate_closed_form(&cn, &tol).unwrap();
        let group = boxplus_group(&cn, &idm, 0, &tol).unwrap();
        let g = find_generator(&group);
        let table = idm_table(&cn, &idm, &tol).unwrap();
        println!(
            "C{n}: boxplus group of order {} cyclic: {}, table medial: {}",
            idm.len(),
            g.is_some(),
            table.is_medial()
        );
    }
}
