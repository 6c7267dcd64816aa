//! Structured verification reports.
//!
//! `run_checks` drives the named check suites over an algebra and its
//! idempotent set and returns a [`Report`] whose process exit status is 0
//! exactly when every entry passed. The CLI is a thin shell over this.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::idempotents::{check_generic, syzygy_charpoly, syzygy_moment, IdempotentSet};
use crate::medial::{
    det_homomorphism_check, is_medial_basis, kaplansky_isotope, verify_bn, verify_lxn_identity,
};
use crate::peirce::{fusion_check, idempotent_reconstruction, is_isospectral, spectra_agree};
use crate::scalar::Tolerance;

/// One check outcome.
#[derive(Debug, Clone)]
pub struct CheckEntry {
    pub check: String,
    pub pass: bool,
    pub residual: f64,
    pub detail: String,
}

/// A command echo plus the list of check outcomes.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub checks: Vec<CheckEntry>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: &str, pass: bool, residual: f64, detail: impl Into<String>) {
        self.checks.push(CheckEntry {
            check: check.to_string(),
            pass,
            residual,
            detail: detail.into(),
        });
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// 0 when all checks pass, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.pass() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "checks": self.checks.iter().map(|c| json!({
                "check": c.check,
                "pass": c.pass,
                "residual": c.residual,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
            "pass": self.pass(),
        })
    }
}

/// Options shared by the verification checks.
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub seed: u64,
    pub samples: usize,
    /// Treat the idempotent list as a sample instead of requiring a
    /// complete enumeration (for algebras with idempotent varieties of
    /// positive dimension).
    pub sampled: bool,
    pub tol: Tolerance,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 12345,
            samples: 100,
            sampled: false,
            tol: Tolerance::default(),
        }
    }
}

pub const ALL_CHECKS: &[&str] = &[
    "medial",
    "isospectral",
    "generic",
    "syzygy",
    "fusion",
    "bn",
    "lxn",
    "det-hom",
    "kaplansky",
    "theta",
];

/// The subset of checks that make sense for the algebra's field: the
/// eigenvector-based checks need the complex backend.
pub fn applicable_checks(alg: &Algebra) -> Vec<&'static str> {
    if alg.field().is_complex() {
        ALL_CHECKS.to_vec()
    } else {
        vec!["medial", "isospectral", "generic", "det-hom", "kaplansky"]
    }
}

fn first_invertible_idempotent<'a>(alg: &Algebra, idm: &'a IdempotentSet) -> Option<&'a Element> {
    idm.elements
        .iter()
        .find(|c| alg.left_mul_matrix(c).matrix().det().abs() > 1e-9)
}

/// Runs the named checks and collects a report. Unknown names error out
/// (the CLI maps that to a usage failure).
pub fn run_checks(
    alg: &Algebra,
    idm: &IdempotentSet,
    checks: &[String],
    opts: &VerifyOptions,
) -> Result<Report> {
    let tol = opts.tol;
    let mut report = Report::new(String::new());
    for name in checks {
        match name.as_str() {
            "medial" => {
                let r = is_medial_basis(alg, &tol);
                report.push(
                    "medial",
                    r.verdict,
                    r.basis_quadruple_residual,
                    format!(
                        "basis quadruples {:.3e}, squared identity {:.3e}",
                        r.basis_quadruple_residual, r.squared_identity_residual
                    ),
                );
            }
            "isospectral" => {
                let outcome = if opts.sampled {
                    spectra_agree(alg, &idm.elements, &tol)
                } else {
                    is_isospectral(alg, idm, &tol)
                };
                match outcome {
                    Ok((ok, witness)) => {
                        let detail = match witness {
                            Some((i, j)) => format!("spectra of idempotents {i} and {j} differ"),
                            None => format!("{} spectra agree", idm.len()),
                        };
                        report.push("isospectral", ok, if ok { 0.0 } else { 1.0 }, detail);
                    }
                    Err(e) => report.push("isospectral", false, f64::NAN, e.to_string()),
                }
            }
            "generic" => match check_generic(alg, idm, &tol, opts.seed) {
                Ok(g) => {
                    let detail = format!(
                        "count {}/{}, half-in-spectrum {}, nilpotent {}",
                        g.count,
                        g.expected,
                        g.half_in_spectrum,
                        g.nilpotent_found.is_some()
                    );
                    report.push(
                        "generic",
                        g.verdict,
                        (g.count as f64 - g.expected as f64).abs(),
                        detail,
                    );
                }
                Err(e) => report.push("generic", false, f64::NAN, e.to_string()),
            },
            "syzygy" => {
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(opts.seed ^ 0x737a);
                let samples: Vec<Complex64> = (0..10)
                    .map(|_| {
                        Complex64::from_polar(
                            rng.random::<f64>().sqrt(),
                            2.0 * std::f64::consts::PI * rng.random::<f64>(),
                        )
                    })
                    .collect();
                let outcome = syzygy_charpoly(alg, idm, &samples).and_then(|r1| {
                    let r2 = syzygy_moment(alg, idm, 1, |_, c| c.clone(), false)?;
                    Ok(r1.max(r2))
                });
                match outcome {
                    Ok(r) => report.push(
                        "syzygy",
                        r < 1e-8,
                        r,
                        "char-poly syzygy at 10 points in the unit disk + vanishing idempotent sum",
                    ),
                    Err(e) => report.push("syzygy", false, f64::NAN, e.to_string()),
                }
            }
            "fusion" => {
                let mut worst = 0.0f64;
                let mut failure = None;
                for c in &idm.elements {
                    match fusion_check(alg, c, &tol) {
                        Ok(r) => worst = worst.max(r),
                        Err(e) => {
                            failure = Some(e.to_string());
                            break;
                        }
                    }
                }
                match failure {
                    None => report.push(
                        "fusion",
                        worst < 1e-8,
                        worst,
                        format!("eigenvector products over {} idempotents", idm.len()),
                    ),
                    Some(e) => report.push("fusion", false, f64::NAN, e),
                }
            }
            "bn" => match first_invertible_idempotent(alg, idm) {
                Some(c) => match verify_bn(alg, c, opts.samples, opts.seed, &tol) {
                    Ok((rp, rm)) => report.push(
                        "bn",
                        rp < 1e-8 && rm < 1e-8,
                        rp.max(rm),
                        format!("x^(n+1) = b(x) x residual {rp:.3e}, multiplicativity {rm:.3e}"),
                    ),
                    Err(e) => report.push("bn", false, f64::NAN, e.to_string()),
                },
                None => report.push("bn", false, f64::NAN, "no invertible idempotent"),
            },
            "lxn" => match first_invertible_idempotent(alg, idm) {
                Some(c) => match verify_lxn_identity(alg, c, opts.samples, opts.seed, &tol) {
                    Ok(r) => report.push("lxn", r < 1e-8, r, "L_x^n = d(x) I on random samples"),
                    Err(e) => report.push("lxn", false, f64::NAN, e.to_string()),
                },
                None => report.push("lxn", false, f64::NAN, "no invertible idempotent"),
            },
            "det-hom" => match first_invertible_idempotent(alg, idm) {
                Some(c) => match det_homomorphism_check(alg, c, opts.samples, opts.seed, &tol) {
                    Ok(r) => report.push(
                        "det-hom",
                        r < 1e-8,
                        r,
                        "phi(xy) = phi(x) phi(y) for phi = det L_x / det L_c",
                    ),
                    Err(e) => report.push("det-hom", false, f64::NAN, e.to_string()),
                },
                None => report.push("det-hom", false, f64::NAN, "no invertible idempotent"),
            },
            "kaplansky" => match first_invertible_idempotent(alg, idm) {
                Some(c) => match kaplansky_isotope(alg, c, &tol) {
                    Ok(iso) => {
                        let r = associativity_residual(&iso);
                        report.push(
                            "kaplansky",
                            r < 1e-9,
                            r,
                            "isotope at the first invertible idempotent is unital associative",
                        );
                    }
                    Err(e) => report.push("kaplansky", false, f64::NAN, e.to_string()),
                },
                None => report.push("kaplansky", false, f64::NAN, "no invertible idempotent"),
            },
            "theta" => {
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(opts.seed ^ 0x7468);
                let y = alg.random_element(&mut rng);
                match idempotent_reconstruction(alg, idm, &y, &tol) {
                    Ok(r) => report.push(
                        "theta",
                        r < 1e-8,
                        r,
                        "reconstruction of a random element from theta coefficients",
                    ),
                    Err(e) => report.push("theta", false, f64::NAN, e.to_string()),
                }
            }
            other => {
                return Err(Error::Json(format!("unknown check name {other:?}")));
            }
        }
    }
    Ok(report)
}

/// Max associativity residual over basis triples.
pub fn associativity_residual(alg: &Algebra) -> f64 {
    let n = alg.dim();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = alg
                    .mul(
                        &alg.mul(&alg.basis_element(i), &alg.basis_element(j))
                            .expect("basis"),
                        &alg.basis_element(k),
                    )
                    .expect("basis");
                let rhs = alg
                    .mul(
                        &alg.basis_element(i),
                        &alg.mul(&alg.basis_element(j), &alg.basis_element(k))
                            .expect("basis"),
                    )
                    .expect("basis");
                worst = worst.max(lhs.sub(&rhs).norm());
            }
        }
    }
    worst
}
