//! Command-line shell over the library: build model algebras, enumerate
//! idempotents, run verification suites, analyze the idempotent quasigroup,
//! explore the Z_N model, and test isomorphism. All interchange is JSON.
//!
//! Exit codes: 0 all checks pass, 1 a check failed or a negative verdict,
//! 2 usage error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use nonassoc::algebra::Algebra;
use nonassoc::error::Error;
use nonassoc::idempotents::{
    enumerate_auto, enumerate_brute_force, enumerate_closed_form, enumerate_newton, IdempotentSet,
};
use nonassoc::models;
use nonassoc::peirce::are_isomorphic;
use nonassoc::quasigroup::{
    boxplus_group, build_zn_quasigroup, circ_order, find_generator, idm_table, isotopy_to_zn,
    orbits, p_set, QuasigroupTable,
};
use nonassoc::report::{applicable_checks, run_checks, Report, VerifyOptions};
use nonassoc::scalar::{FieldDescriptor, Tolerance};

#[derive(Parser)]
#[command(
    name = "nonassoc",
    version,
    about = "Commutative nonassociative algebra workbench"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FieldArgs {
    /// Scalar field: complex or prime
    #[arg(long, default_value = "complex")]
    field: String,
    /// Characteristic for prime fields (a prime >= 5)
    #[arg(long)]
    p: Option<u64>,
}

impl FieldArgs {
    fn resolve(&self) -> Result<FieldDescriptor, Error> {
        match self.field.as_str() {
            "complex" => Ok(FieldDescriptor::complex()),
            "prime" => {
                let p = self
                    .p
                    .ok_or_else(|| Error::Json("prime field needs --p".into()))?;
                FieldDescriptor::prime(p)
            }
            other => Err(Error::Json(format!("unknown field {other:?}"))),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a model algebra and write it as JSON
    Model {
        /// One of: a2, a3, cn, twisted-double, twisted-power,
        /// direct-product, t, fp-pairs, medial-extension, f
        name: String,
        #[command(flatten)]
        field: FieldArgs,
        /// Dimension parameter for cn / order for medial-extension
        #[arg(long)]
        n: Option<usize>,
        /// Degree for twisted-power
        #[arg(long)]
        d: Option<usize>,
        /// Twist +1 or -1 for twisted-double / fp-pairs
        #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
        zeta: i64,
        /// Twist as a primitive root of unity of this order (twisted-power)
        #[arg(long)]
        zeta_root: Option<usize>,
        /// Base algebra for twisted constructions: "f" or a JSON path
        #[arg(long, default_value = "f")]
        base: String,
        /// First factor for direct-product
        #[arg(long)]
        a: Option<PathBuf>,
        /// Second factor for direct-product
        #[arg(long)]
        b: Option<PathBuf>,
        /// Output path
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Enumerate the nonzero idempotents of an algebra
    Idempotents {
        algebra: PathBuf,
        /// auto, closed-form, newton or brute
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(long)]
        seed: Option<u64>,
        /// Newton start budget (default 200 * 2^n)
        #[arg(long)]
        budget: Option<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run verification checks and print a JSON report
    Verify {
        algebra: PathBuf,
        /// Idempotent set JSON (enumerated automatically when omitted)
        #[arg(long)]
        idm: Option<PathBuf>,
        /// Comma-separated check names, or "all"
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Treat the idempotent list as a sample (non-generic algebras)
        #[arg(long)]
        sampled: bool,
    },
    /// Idempotent quasigroup analytics
    Quasigroup {
        algebra: PathBuf,
        #[arg(long)]
        idm: Option<PathBuf>,
        /// Comma-separated actions: table, latin, medial, cyclic, relabel
        #[arg(long, default_value = "table")]
        actions: String,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// The Z_N model with u o v = (u + v)/2 mod N
    Zn {
        #[arg(long = "N")]
        n: u64,
        /// Print ord_x(y) for the two given elements
        #[arg(long, num_args = 2)]
        orders: Option<Vec<u64>>,
        /// Print the orbit decomposition under L_x
        #[arg(long)]
        orbits: Option<u64>,
        /// Print the set P(n) of possible orders on Z_(2^n - 1)
        #[arg(long)]
        pset: Option<u32>,
        /// Print the multiplication table
        #[arg(long)]
        table: bool,
    },
    /// Canonical-form isomorphism test between two algebra files
    Iso { a: PathBuf, b: PathBuf },
}

fn resolve_seed(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("NONASSOC_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(12345)
}

fn load_algebra(path: &Path) -> Result<Algebra, Error> {
    Algebra::load(path)
}

fn base_algebra(source: &str, field: FieldDescriptor) -> Result<Algebra, Error> {
    if source == "f" {
        Ok(models::build_field_algebra(field))
    } else {
        Algebra::load(&PathBuf::from(source))
    }
}

fn run() -> Result<i32, Error> {
    let cli = Cli::parse();
    let tol = Tolerance::default();
    match cli.command {
        Command::Model {
            name,
            field,
            n,
            d,
            zeta,
            zeta_root,
            base,
            a,
            b,
            out,
        } => {
            let fd = field.resolve()?;
            let alg = match name.as_str() {
                "f" => models::build_field_algebra(fd),
                "a2" => models::build_a2(fd)?,
                "a3" => models::build_a3().0,
                "t" => models::build_t(),
                "cn" => {
                    let n = n.ok_or_else(|| Error::Json("cn needs --n".into()))?;
                    models::build_cn(n, fd)?
                }
                "twisted-double" => {
                    let base = base_algebra(&base, fd)?;
                    models::twisted_double(&base, zeta)?
                }
                "fp-pairs" => {
                    if !fd.is_prime() {
                        return Err(Error::Json("fp-pairs needs --field prime --p P".into()));
                    }
                    models::twisted_double(&models::build_field_algebra(fd), zeta)?
                }
                "twisted-power" => {
                    let base = base_algebra(&base, fd)?;
                    let d = d.ok_or_else(|| Error::Json("twisted-power needs --d".into()))?;
                    let z = match zeta_root {
                        Some(m) => nonassoc::scalar::primitive_root_of_unity(m, &fd)?,
                        None => fd.from_i64(zeta),
                    };
                    models::twisted_power(&base, d, &z)?
                }
                "direct-product" => {
                    let a = load_algebra(
                        &a.ok_or_else(|| Error::Json("direct-product needs --a".into()))?,
                    )?;
                    let b = load_algebra(
                        &b.ok_or_else(|| Error::Json("direct-product needs --b".into()))?,
                    )?;
                    models::direct_product(&a, &b)?
                }
                "medial-extension" => {
                    let n = n.ok_or_else(|| {
                        Error::Json("medial-extension needs --n (odd Z_N order)".into())
                    })?;
                    let table = build_zn_quasigroup(n as u64)?;
                    models::medial_extension(&table, fd)?
                }
                other => return Err(Error::Json(format!("unknown model {other:?}"))),
            };
            alg.save(&out)?;
            println!(
                "wrote {} (dim {}, field {})",
                out.display(),
                alg.dim(),
                if alg.field().is_complex() {
                    "complex".to_string()
                } else {
                    format!("F_{}", alg.field().modulus())
                }
            );
            Ok(0)
        }
        Command::Idempotents {
            algebra,
            method,
            seed,
            budget,
            out,
        } => {
            let alg = load_algebra(&algebra)?;
            let seed = resolve_seed(seed);
            let set = match method.as_str() {
                "auto" => enumerate_auto(&alg, seed, &tol)?,
                "closed-form" => enumerate_closed_form(&alg, &tol)?,
                "newton" => enumerate_newton(&alg, seed, budget, &tol)?,
                "brute" | "brute-force" => enumerate_brute_force(&alg)?,
                other => return Err(Error::Json(format!("unknown method {other:?}"))),
            };
            println!(
                "{} idempotents, {}",
                set.len(),
                if set.complete {
                    "complete"
                } else {
                    "complete=false (enumeration is a sample)"
                }
            );
            if set.singular_roots > 0 {
                println!(
                    "warning: {} converged roots had singular Jacobians (non-generic algebra)",
                    set.singular_roots
                );
            }
            if let Some(path) = out {
                set.save(&path)?;
                println!("wrote {}", path.display());
            }
            Ok(if set.complete { 0 } else { 1 })
        }
        Command::Verify {
            algebra,
            idm,
            checks,
            seed,
            samples,
            sampled,
        } => {
            let alg = load_algebra(&algebra)?;
            let opts = VerifyOptions {
                seed: resolve_seed(seed),
                samples,
                sampled,
                tol,
            };
            let set = load_or_enumerate(&alg, idm, opts.seed, &tol)?;
            let names: Vec<String> = if checks == "all" {
                applicable_checks(&alg)
                    .iter()
                    .map(|s| s.to_string())
                    .collect()
            } else {
                checks.split(',').map(|s| s.trim().to_string()).collect()
            };
            let mut report = run_checks(&alg, &set, &names, &opts)?;
            report.command = command_echo();
            println!(
                "{}",
                serde_json::to_string_pretty(&report.to_json()).unwrap()
            );
            Ok(report.exit_code())
        }
        Command::Quasigroup {
            algebra,
            idm,
            actions,
            seed,
        } => {
            let alg = load_algebra(&algebra)?;
            let seed = resolve_seed(seed);
            let set = load_or_enumerate(&alg, idm, seed, &tol)?;
            if !set.complete {
                return Err(Error::IncompleteSet);
            }
            let table = idm_table(&alg, &set, &tol)?;
            let mut report = Report::new(command_echo());
            for action in actions.split(',').map(str::trim) {
                match action {
                    "table" => {
                        println!("idempotent multiplication table (1-indexed):");
                        print!("{}", table.render_ascii());
                    }
                    "latin" => {
                        let ok = table.is_latin();
                        report.push("latin", ok, if ok { 0.0 } else { 1.0 }, "Latin square");
                        println!("latin: {ok}");
                    }
                    "medial" => {
                        let ok = table.is_medial();
                        report.push("medial-table", ok, if ok { 0.0 } else { 1.0 }, "medial law");
                        println!("medial: {ok}");
                    }
                    "cyclic" => {
                        let group = boxplus_group(&alg, &set, 0, &tol)?;
                        match find_generator(&group) {
                            Some(g) => {
                                report.push("cyclic", true, 0.0, "boxplus group is cyclic");
                                println!(
                                    "cyclic of order {}, generator index {}",
                                    set.len(),
                                    g + 1
                                );
                            }
                            None => {
                                report.push("cyclic", false, 1.0, "no generator");
                                println!("not cyclic");
                            }
                        }
                    }
                    "relabel" => {
                        let rel = isotopy_to_zn(&alg, &set, &tol)?;
                        report.push(
                            "relabel",
                            rel.verified,
                            if rel.verified { 0.0 } else { 1.0 },
                            "half-sum rule on all pairs",
                        );
                        println!(
                            "relabeling onto Z_{} (verified: {}): {:?}",
                            set.len(),
                            rel.verified,
                            rel.phi
                        );
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
                        println!("relabeled table (1-indexed residues):");
                        print!(
                            "{}",
                            QuasigroupTable::from_indices(relabeled).render_ascii()
                        );
                    }
                    other => return Err(Error::Json(format!("unknown action {other:?}"))),
                }
            }
            Ok(report.exit_code())
        }
        Command::Zn {
            n,
            orders,
            orbits: orbit_of,
            pset,
            table,
        } => {
            if n % 2 == 0 {
                return Err(Error::EvenOrder(n));
            }
            if let Some(pair) = orders {
                let order = circ_order(pair[0], pair[1], n);
                println!("ord_{}({}) = {} in Z_{}", pair[0], pair[1], order, n);
            }
            if let Some(x) = orbit_of {
                let cycles = orbits(n, x);
                println!("orbits of L_{x} on Z_{n}:");
                for cycle in &cycles {
                    let path: Vec<String> = cycle.iter().map(u64::to_string).collect();
                    println!("  {}", path.join(" -> "));
                }
                let mut lengths: Vec<usize> = cycles.iter().map(Vec::len).collect();
                lengths.sort();
                println!("cycle lengths: {lengths:?}");
            }
            if let Some(nn) = pset {
                let set: Vec<u64> = p_set(nn).into_iter().collect();
                println!("P({nn}) = {set:?}");
            }
            if table {
                print!("{}", build_zn_quasigroup(n)?.render_ascii());
            }
            Ok(0)
        }
        Command::Iso { a, b } => {
            let alg_a = load_algebra(&a)?;
            let alg_b = load_algebra(&b)?;
            let seed = resolve_seed(None);
            match are_isomorphic(&alg_a, &alg_b, seed, &tol) {
                Ok(Some(m)) => {
                    println!("isomorphic");
                    println!("change of basis (rows):");
                    for i in 0..m.rows() {
                        let row: Vec<String> =
                            (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
                        println!("  [{}]", row.join(", "));
                    }
                    Ok(0)
                }
                Ok(None) => {
                    println!("not isomorphic (canonical tensors differ)");
                    Ok(1)
                }
                Err(Error::DimensionMismatch(x, y)) => {
                    println!("not isomorphic: dimension mismatch {x} vs {y}");
                    Ok(1)
                }
                Err(e) => Err(e),
            }
        }
    }
}

fn load_or_enumerate(
    alg: &Algebra,
    idm: Option<PathBuf>,
    seed: u64,
    tol: &Tolerance,
) -> Result<IdempotentSet, Error> {
    match idm {
        Some(path) => {
            let text = std::fs::read_to_string(&path)?;
            let v: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| Error::Json(e.to_string()))?;
            IdempotentSet::from_json(&v, &alg.field())
        }
        None => enumerate_auto(alg, seed, tol),
    }
}

fn command_echo() -> String {
    std::env::args().collect::<Vec<_>>().join(" ")
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
