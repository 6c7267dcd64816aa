//! The standalone Z_N quasigroup `u o v = (u + v)/2 mod N`: orders,
//! orbits, and the set of possible orders P(n) on Z_(2^n - 1).
//!
//! ```bash
//! cargo run -p nonassoc --example zn_model
//! ```

use nonassoc::quasigroup::{
    build_zn_quasigroup, circ_order, minimal_order_set, orbits, p_set, p_set_gcd,
};

fn main() {
    let t = build_zn_quasigroup(7).unwrap();
    println!("Z_7 with u o v = 4(u + v) mod 7:");
    print!("{}", t.render_ascii());
    println!(
        "latin: {}, idempotent: {}, medial: {}",
        t.is_latin(),
        t.is_idempotent(),
        t.is_medial()
    );

    println!("\nZ_15: ord_1(2) = {}", circ_order(1, 2, 15));
    println!("Z_15: ord_1(6) = {}", circ_order(1, 6, 15));
    println!("orbits of L_1 on Z_15:");
    for cycle in orbits(15, 1) {
        let path: Vec<String> = cycle.iter().map(u64::to_string).collect();
        println!("  {}", path.join(" -> "));
    }

    for n in [4u32, 6, 8] {
        let possible: Vec<u64> = p_set(n).into_iter().collect();
        let minimal: Vec<u64> = minimal_order_set(n).into_iter().collect();
        println!(
            "n = {n}: possible orders P(n) = {possible:?} (gcd rule {:?}), minimal orders = {minimal:?}",
            p_set_gcd(n).into_iter().collect::<Vec<_>>()
        );
    }
}
