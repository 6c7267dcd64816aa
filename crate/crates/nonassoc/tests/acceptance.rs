//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (run with `--nocapture` to see them). Tolerances are
//! pinned in the assertions.
//!
//! `criterion_04_mediality_of_circle_algebra` is expected to fail: it
//! asserts the stated requirement that the circle algebra passes the
//! medial quadruple check, which is mathematically false — see the panic message
//! for the two-line counterexample. Everything else is green.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nonassoc::algebra::{Algebra, Element};
use nonassoc::idempotents::{
    enumerate_brute_force, enumerate_closed_form, enumerate_newton, syzygy_charpoly, syzygy_moment,
    IdempotentSet, Method,
};
use nonassoc::medial::{
    det_homomorphism_check, generic_determinant_routes, is_medial_basis, kaplansky_isotope,
    squared_identity_check, verify_bn, verify_lxn_identity,
};
use nonassoc::models;
use nonassoc::peirce::are_isomorphic;
use nonassoc::quasigroup::{
    boxplus_group, find_generator, find_relabel_permutation, idm_table, isotopy_to_zn, orbits,
    p_set, p_set_gcd, QuasigroupTable,
};
use nonassoc::report::associativity_residual;
use nonassoc::scalar::{FieldDescriptor, Scalar, Tolerance};

fn pass(criterion: &str, detail: &str) {
    println!("[PASS] {criterion}: {detail}");
}

fn complex() -> FieldDescriptor {
    FieldDescriptor::complex()
}

#[test]
fn criterion_01_idempotent_counts() {
    let start = std::time::Instant::now();
    let tol = Tolerance::default();
    let mut worst_residual = 0.0f64;
    for n in 2..=8usize {
        let cn = models::build_cn(n, complex()).unwrap();
        let set = enumerate_closed_form(&cn, &tol).unwrap();
        assert_eq!(set.len(), (1 << n) - 1, "closed form count at n = {n}");
        assert!(set.complete);
        for r in &set.residuals {
            assert!(*r < 1e-10, "closed-form residual {r:.3e} at n = {n}");
            worst_residual = worst_residual.max(*r);
        }
    }
    let a2 = models::build_a2(complex()).unwrap();
    let set = enumerate_newton(&a2, 12345, None, &tol).unwrap();
    assert_eq!(set.len(), 3, "Newton count on the 2-dim model");
    let (a3, _) = models::build_a3();
    let set = enumerate_newton(&a3, 12345, None, &tol).unwrap();
    assert_eq!(set.len(), 7, "Newton count on the 3-dim model");
    for r in &set.residuals {
        assert!(*r < 1e-10);
        worst_residual = worst_residual.max(*r);
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "enumeration took {elapsed:?}, budget is 5 s"
    );
    pass(
        "criterion 1 (idempotent counts)",
        &format!(
            "closed form 3..255 roots for n=2..8, Newton 3 and 7; worst residual {worst_residual:.2e}; {elapsed:?}"
        ),
    );
}

#[test]
fn criterion_02_isospectrality() {
    let tol = Tolerance::default();
    let mut worst = 0.0f64;
    for n in 2..=6usize {
        let cn = models::build_cn(n, complex()).unwrap();
        let set = enumerate_closed_form(&cn, &tol).unwrap();
        let step = 2.0 * std::f64::consts::PI / n as f64;
        for c in &set.elements {
            let pairs = cn.left_mul_matrix(c).eigen(&tol).unwrap();
            let mut remaining: Vec<Complex64> = (0..n)
                .map(|k| Complex64::from_polar(1.0, step * k as f64))
                .collect();
            for p in &pairs {
                assert_eq!(p.multiplicity, 1, "multiplicity 1 at n = {n}");
                let (idx, dist) = remaining
                    .iter()
                    .enumerate()
                    .map(|(i, t)| (i, (p.value - t).norm()))
                    .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
                    .unwrap();
                assert!(dist < 1e-8, "eigenvalue off the root lattice by {dist:.3e}");
                worst = worst.max(dist);
                remaining.remove(idx);
            }
            assert!(remaining.is_empty());
        }
    }
    // sampled idempotents of the circle algebra all have spectrum {1, -1/2, 1/2}
    let t = models::build_t();
    for k in 0..12 {
        let c = models::t_circle_idempotent(0.5 + 0.51 * k as f64);
        let pairs = t.left_mul_matrix(&c).eigen(&tol).unwrap();
        let mut expected = vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(-0.5, 0.0),
            Complex64::new(0.5, 0.0),
        ];
        for p in &pairs {
            let (idx, dist) = expected
                .iter()
                .enumerate()
                .map(|(i, t)| (i, (p.value - t).norm()))
                .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
                .unwrap();
            assert!(dist < 1e-10, "circle-algebra eigenvalue off by {dist:.3e}");
            expected.remove(idx);
        }
        assert!(expected.is_empty());
    }
    pass(
        "criterion 2 (isospectrality)",
        &format!("cyclotomic spectra for n=2..6 within {worst:.2e}; circle algebra spectrum within 1e-10 on 12 samples"),
    );
}

#[test]
fn criterion_03_syzygies() {
    let tol = Tolerance::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5359);
    let samples: Vec<Complex64> = (0..10)
        .map(|_| {
            Complex64::from_polar(
                rng.random::<f64>().sqrt(),
                2.0 * std::f64::consts::PI * rng.random::<f64>(),
            )
        })
        .collect();
    let mut sets: Vec<(String, Algebra, IdempotentSet)> = Vec::new();
    for n in 2..=6usize {
        let cn = models::build_cn(n, complex()).unwrap();
        let set = enumerate_closed_form(&cn, &tol).unwrap();
        sets.push((format!("C{n}"), cn, set));
    }
    let (a3, _) = models::build_a3();
    let set = enumerate_newton(&a3, 12345, None, &tol).unwrap();
    sets.push(("A3".into(), a3, set));
    let mut worst_sum = 0.0f64;
    let mut worst_charpoly = 0.0f64;
    for (name, alg, idm) in &sets {
        let sum = syzygy_moment(alg, idm, 1, |_, c| c.clone(), false).unwrap();
        assert!(sum < 1e-8, "{name}: idempotent sum norm {sum:.3e}");
        worst_sum = worst_sum.max(sum);
        let r = syzygy_charpoly(alg, idm, &samples).unwrap();
        assert!(r < 1e-8, "{name}: char-poly syzygy residual {r:.3e}");
        worst_charpoly = worst_charpoly.max(r);
    }
    // hand value for the 2-dim cyclotomic model: the sum is 4 (1 - t^2)
    let (_, c2, idm2) = &sets[0];
    let t0 = Scalar::complex(0.3, 0.2);
    let mut total = Complex64::new(0.0, 0.0);
    for c in &idm2.elements {
        let chi = c2.left_mul_matrix(c).char_poly();
        let at_t = nonassoc::linalg::poly_eval(&chi, &t0).as_complex();
        let at_half = nonassoc::linalg::poly_eval(&chi, &Scalar::complex(0.5, 0.0)).as_complex();
        total += at_t / at_half;
    }
    let t0c = t0.as_complex();
    let hand = 4.0 * (Complex64::new(1.0, 0.0) - t0c * t0c);
    assert!(
        (total - hand).norm() < 1e-8,
        "hand value 4(1 - t^2) missed: {total} vs {hand}"
    );
    pass(
        "criterion 3 (syzygies)",
        &format!(
            "sum of idempotents within {worst_sum:.2e}, char-poly syzygy within {worst_charpoly:.2e} at 10 points, hand value 4(1-t^2) reproduced"
        ),
    );
}

fn medial_model_list() -> Vec<(String, Algebra)> {
    let f = complex();
    let mut list = vec![
        ("A2".to_string(), models::build_a2(f).unwrap()),
        ("A3".to_string(), models::build_a3().0),
    ];
    for n in 2..=6usize {
        list.push((format!("C{n}"), models::build_cn(n, f).unwrap()));
    }
    list.push((
        "(A2 x A2)_-1".to_string(),
        models::twisted_double(&models::build_a2(f).unwrap(), -1).unwrap(),
    ));
    let eps3 = nonassoc::scalar::primitive_root_of_unity(3, &f).unwrap();
    list.push((
        "A2^(x3)".to_string(),
        models::twisted_power(&models::build_a2(f).unwrap(), 3, &eps3).unwrap(),
    ));
    list
}

#[test]
fn criterion_04_mediality() {
    let tol = Tolerance::default();
    let mut worst_pass = 0.0f64;
    for (name, alg) in medial_model_list() {
        let report = is_medial_basis(&alg, &tol);
        assert!(
            report.basis_quadruple_residual < 1e-10,
            "{name}: quadruple residual {:.3e}",
            report.basis_quadruple_residual
        );
        assert!(
            report.squared_identity_residual < 1e-9,
            "{name}: verdicts must agree"
        );
        worst_pass = worst_pass.max(report.basis_quadruple_residual);
    }
    // 50 seeded random symmetric 3-dim tensors all fail, with agreeing
    // squared-identity verdicts
    let f = complex();
    let mut weakest_fail = f64::MAX;
    for seed in 0..50u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(40_000 + seed);
        let mut gamma = vec![f.zero(); 27];
        for i in 0..3usize {
            for j in 0..=i {
                for k in 0..3 {
                    let v = Scalar::complex(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5);
                    gamma[(i * 3 + j) * 3 + k] = v;
                    gamma[(j * 3 + i) * 3 + k] = v;
                }
            }
        }
        let alg = Algebra::new(f, 3, gamma).unwrap();
        let report = is_medial_basis(&alg, &tol);
        assert!(
            report.basis_quadruple_residual > 1e-3,
            "random tensor {seed} looks medial"
        );
        assert!(squared_identity_check(&alg, 20, seed) > 1e-3);
        weakest_fail = weakest_fail.min(report.basis_quadruple_residual);
    }
    pass(
        "criterion 4 (mediality, attainable part)",
        &format!(
            "models pass within {worst_pass:.2e}; 50 random tensors fail with residual >= {weakest_fail:.2e}; verdicts agree"
        ),
    );
}

#[test]
fn criterion_04_mediality_of_circle_algebra() {
    // Stated criterion: the circle algebra passes the basis-quadruple
    // check with residual < 1e-10. It cannot: with the product forced by
    // polarization of the squares x_i^2 - x_j x_k,
    //   (e1 e1)(e2 e2) = e1 o e2 = (0, 0, -1/2)
    //   (e1 e2)(e1 e2) = (0, 0, 1/4),
    // so the medial law fails at (e1, e1, e2, e2) with residual exactly
    // 3/4. The algebra is isospectral and non-generic but provably not
    // medial; this test records the stated requirement and therefore
    // fails.
    let tol = Tolerance::default();
    let t = models::build_t();
    let report = is_medial_basis(&t, &tol);
    println!(
        "[FAIL] criterion 4 (circle-algebra clause): quadruple residual is {:.6} (exactly 3/4), not < 1e-10; the circle algebra is not medial",
        report.basis_quadruple_residual
    );
    assert!(
        report.basis_quadruple_residual < 1e-10,
        "the circle algebra is not medial: (e1 e1)(e2 e2) = (0,0,-1/2) but (e1 e2)(e1 e2) = (0,0,1/4); max quadruple residual {}",
        report.basis_quadruple_residual
    );
}

#[test]
fn criterion_05_identities() {
    let tol = Tolerance::default();
    let mut worst_power = 0.0f64;
    let mut worst_mult = 0.0f64;
    let mut worst_lxn = 0.0f64;
    let mut worst_routes = 0.0f64;
    for n in 2..=5usize {
        let cn = models::build_cn(n, complex()).unwrap();
        let c = cn.basis_element(0);
        let (rp, rm) = verify_bn(&cn, &c, 100, 777, &tol).unwrap();
        assert!(rp < 1e-8, "C{n}: x^(n+1) = b(x) x residual {rp:.3e}");
        assert!(rm < 1e-8, "C{n}: multiplicativity residual {rm:.3e}");
        worst_power = worst_power.max(rp);
        worst_mult = worst_mult.max(rm);
        let r = verify_lxn_identity(&cn, &c, 50, 778, &tol).unwrap();
        assert!(r < 1e-8, "C{n}: L_x^n residual {r:.3e}");
        worst_lxn = worst_lxn.max(r);
        // product formula vs circulant determinant
        let mut rng = ChaCha8Rng::seed_from_u64(779 + n as u64);
        for _ in 0..100 {
            let x = cn.random_element(&mut rng);
            let (prod, circ) = generic_determinant_routes(&cn, &c, &x, &tol).unwrap();
            let rel = (prod - circ).norm() / (1.0f64.max(prod.norm()));
            assert!(rel < 1e-10, "C{n}: route disagreement {rel:.3e}");
            worst_routes = worst_routes.max(rel);
        }
    }
    pass(
        "criterion 5 (identities)",
        &format!(
            "x^(n+1)=b(x)x within {worst_power:.2e}, b multiplicative within {worst_mult:.2e}, L_x^n=d(x)I within {worst_lxn:.2e}, delta routes within {worst_routes:.2e}"
        ),
    );
}

#[test]
fn criterion_06_kaplansky_isotope() {
    let tol = Tolerance::default();
    let mut worst = 0.0f64;
    let mut isotopes = 0usize;
    for (name, alg) in medial_model_list() {
        let idm = if alg.model().is_some_and(|t| t.name == "cn") {
            enumerate_closed_form(&alg, &tol).unwrap()
        } else {
            enumerate_newton(&alg, 12345, None, &tol).unwrap()
        };
        assert!(idm.complete, "{name}: enumeration incomplete");
        for c in &idm.elements {
            if alg.left_mul_matrix(c).matrix().det().abs() < 1e-9 {
                continue;
            }
            let iso = kaplansky_isotope(&alg, c, &tol)
                .unwrap_or_else(|e| panic!("{name}: isotope failed: {e}"));
            let r = associativity_residual(&iso);
            assert!(r < 1e-10, "{name}: associativity residual {r:.3e}");
            // commutativity is structural; the unit is checked inside
            worst = worst.max(r);
            isotopes += 1;
        }
    }
    // the isotope of the cyclotomic model at 1 is the plain quotient ring
    for n in 2..=6usize {
        let cn = models::build_cn(n, complex()).unwrap();
        let iso = kaplansky_isotope(&cn, &cn.basis_element(0), &tol).unwrap();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let want = if (i + j) % n == k { 1.0 } else { 0.0 };
                    let got = iso.gamma(i, j, k).as_complex();
                    assert!(
                        (got - Complex64::new(want, 0.0)).norm() < 1e-12,
                        "C{n} isotope is not the quotient ring at ({i},{j},{k})"
                    );
                }
            }
        }
    }
    pass(
        "criterion 6 (Kaplansky isotope)",
        &format!("{isotopes} isotopes unital associative within {worst:.2e}; cyclotomic isotopes equal the quotient ring"),
    );
}

#[test]
fn criterion_07_determinant_homomorphism() {
    let tol = Tolerance::default();
    let f = complex();
    let mut worst = 0.0f64;
    let cases: Vec<(String, Algebra, Element)> = vec![
        (
            "A2".into(),
            models::build_a2(f).unwrap(),
            models::build_a2(f).unwrap().basis_element(0),
        ),
        (
            "A3".into(),
            models::build_a3().0,
            models::build_a3().0.basis_element(0),
        ),
        (
            "C3".into(),
            models::build_cn(3, f).unwrap(),
            models::build_cn(3, f).unwrap().basis_element(0),
        ),
        (
            "C4".into(),
            models::build_cn(4, f).unwrap(),
            models::build_cn(4, f).unwrap().basis_element(0),
        ),
    ];
    for (name, alg, c) in &cases {
        let r = det_homomorphism_check(alg, c, 100, 4242, &tol).unwrap();
        assert!(r < 1e-8, "{name}: det-hom residual {r:.3e}");
        worst = worst.max(r);
    }
    // A2: phi is exactly x1^2 - x1 x2 + x2^2 as a polynomial
    let a2 = models::build_a2(f).unwrap();
    let det_c = a2.left_mul_matrix(&a2.basis_element(0)).matrix().det();
    let phi = |x: &Element| -> Complex64 {
        a2.left_mul_matrix(x)
            .matrix()
            .det()
            .mul(&det_c.inv().unwrap())
            .as_complex()
    };
    let alpha = phi(&a2.element_from_i64(&[1, 0]));
    let gamma = phi(&a2.element_from_i64(&[0, 1]));
    let beta = phi(&a2.element_from_i64(&[1, 1])) - alpha - gamma;
    assert!((alpha - Complex64::new(1.0, 0.0)).norm() < 1e-10);
    assert!((beta - Complex64::new(-1.0, 0.0)).norm() < 1e-10);
    assert!((gamma - Complex64::new(1.0, 0.0)).norm() < 1e-10);
    pass(
        "criterion 7 (determinant homomorphism)",
        &format!("phi multiplicative within {worst:.2e} on 100 pairs for 4 models; A2 coefficients (1, -1, 1) exact to 1e-10"),
    );
}

#[test]
fn criterion_08_uniqueness_isomorphism() {
    let tol = Tolerance::default();
    let f = complex();
    let a2 = models::build_a2(f).unwrap();
    let c2 = models::build_cn(2, f).unwrap();
    let m = are_isomorphic(&a2, &c2, 12345, &tol).unwrap();
    assert!(m.is_some(), "A2(C) and C_2 must be isomorphic");
    let (a3, _) = models::build_a3();
    let c3 = models::build_cn(3, f).unwrap();
    let m = are_isomorphic(&a3, &c3, 12345, &tol).unwrap();
    assert!(m.is_some(), "A3 and C_3 must be isomorphic");
    // product preservation is verified inside are_isomorphic at 1e-8 on
    // all basis pairs; re-check one instance explicitly
    let m = m.unwrap();
    let mut worst = 0.0f64;
    for i in 0..3 {
        for j in 0..3 {
            let ei = a3.basis_element(i);
            let ej = a3.basis_element(j);
            let lhs = Element::new(m.apply(a3.mul(&ei, &ej).unwrap().coeffs()));
            let rhs = c3
                .mul(
                    &Element::new(m.apply(ei.coeffs())),
                    &Element::new(m.apply(ej.coeffs())),
                )
                .unwrap();
            worst = worst.max(lhs.sub(&rhs).norm());
        }
    }
    assert!(worst < 1e-8);
    pass(
        "criterion 8 (uniqueness / isomorphism)",
        &format!(
            "A2 = C_2 and A3 = C_3 with verified matrices; product preservation within {worst:.2e}"
        ),
    );
}

#[test]
fn criterion_09_quasigroup_suite() {
    let tol = Tolerance::default();
    // the labeled multiplication table of the seven idempotents
    let (a3, labeled) = models::build_a3();
    let table = QuasigroupTable::from_elements(&a3, &labeled, &tol).unwrap();
    for i in 0..7 {
        for j in 0..7 {
            assert_eq!(
                table.get(i, j) + 1,
                models::A3_TABLE[i][j],
                "published table mismatch at ({i},{j})"
            );
        }
    }
    assert!(table.is_commutative());
    assert!(table.is_idempotent());
    assert!(table.is_latin());
    assert!(table.is_medial());
    // relabeling onto Z_7 with the half-sum rule, verified on all 49 pairs
    let phi = find_relabel_permutation(&table).expect("relabeling exists");
    for i in 0..7 {
        for j in 0..7 {
            assert_eq!(phi[table.get(i, j)], (phi[i] + phi[j]) % 7 * 4 % 7);
        }
    }
    let labeled_set =
        IdempotentSet::from_verified(&a3, labeled, Method::Newton, true, &tol).unwrap();
    let rel = isotopy_to_zn(&a3, &labeled_set, &tol).unwrap();
    assert!(rel.verified);
    // cyclic boxplus groups of order 2^n - 1 with full-pair verification
    for n in 2..=5usize {
        let cn = models::build_cn(n, complex()).unwrap();
        let idm = enumerate_closed_form(&cn, &tol).unwrap();
        let group = boxplus_group(&cn, &idm, 0, &tol).unwrap();
        assert!(
            find_generator(&group).is_some(),
            "C{n}: boxplus group must be cyclic"
        );
        assert_eq!(group.op.len(), (1 << n) - 1);
        let rel = isotopy_to_zn(&cn, &idm, &tol).unwrap();
        assert!(rel.verified, "C{n}: half-sum rule on all pairs");
        let table = idm_table(&cn, &idm, &tol).unwrap();
        assert!(table.is_latin() && table.is_medial());
    }
    pass(
        "criterion 9 (quasigroup suite)",
        "published 7x7 table reproduced; IMC certificates + Z_7 relabeling verified on 49 pairs; cyclic groups of order 3, 7, 15, 31 with full-pair relabelings",
    );
}

#[test]
fn criterion_10_zn_analytics() {
    assert_eq!(nonassoc::quasigroup::circ_order(1, 2, 15), 4);
    assert_eq!(nonassoc::quasigroup::circ_order(1, 6, 15), 2);
    let mut lengths: Vec<usize> = orbits(15, 1).iter().map(Vec::len).collect();
    lengths.sort();
    assert_eq!(lengths, vec![1, 2, 4, 4, 4]);
    let p4: Vec<u64> = p_set(4).into_iter().collect();
    assert_eq!(p4, vec![2, 4]);
    for n in 2..=10u32 {
        assert_eq!(p_set(n), p_set_gcd(n), "gcd characterization at n = {n}");
    }
    pass(
        "criterion 10 (Z_N analytics)",
        "orders (1,2)->4 and (1,6)->2 on Z_15; orbit lengths {1,2,4,4,4}; P(4) = {2,4}; gcd rule verified for n=2..10",
    );
}

#[test]
fn criterion_11_finite_fields() {
    let f7 = FieldDescriptor::prime(7).unwrap();
    let f5 = FieldDescriptor::prime(5).unwrap();
    let pairs7 = models::twisted_double(&models::build_field_algebra(f7), -1).unwrap();
    let set7 = enumerate_brute_force(&pairs7).unwrap();
    let coords: Vec<Vec<u64>> = set7
        .elements
        .iter()
        .map(|e| e.coeffs().iter().map(Scalar::as_residue).collect())
        .collect();
    assert_eq!(coords, vec![vec![1, 0], vec![3, 1], vec![3, 6]]);
    let pairs5 = models::twisted_double(&models::build_field_algebra(f5), -1).unwrap();
    let set5 = enumerate_brute_force(&pairs5).unwrap();
    assert_eq!(set5.len(), 1);
    assert_eq!(
        set5.elements[0]
            .coeffs()
            .iter()
            .map(Scalar::as_residue)
            .collect::<Vec<_>>(),
        vec![1, 0]
    );
    // A2(F_7) and the twisted pair algebra have the same counts and spectra
    let a2f7 = models::build_a2(f7).unwrap();
    let seta = enumerate_brute_force(&a2f7).unwrap();
    assert_eq!(seta.len(), set7.len());
    let spectra = |alg: &Algebra, set: &IdempotentSet| -> Vec<Vec<(u64, usize)>> {
        set.elements
            .iter()
            .map(|c| alg.left_mul_matrix(c).prime_eigen().unwrap().roots)
            .collect()
    };
    let sa = spectra(&a2f7, &seta);
    let sb = spectra(&pairs7, &set7);
    for s in sa.iter().chain(sb.iter()) {
        assert_eq!(
            *s,
            vec![(1u64, 1usize), (6u64, 1usize)],
            "spectrum {{1, -1}}"
        );
    }
    pass(
        "criterion 11 (finite fields)",
        "Idm over F_7 is {(1,0), (3,1), (3,6)}, over F_5 just {(1,0)}; A2(F_7) matches with spectra {1, 6}",
    );
}
