//! Command-line front end: instance generation, individual computations,
//! and suite execution.
//!
//! Exit codes: 0 success / all checks passed, 1 a theorem check failed,
//! 2 hypothesis unmet or degenerate input (including ring size caps),
//! 3 usage or I/O error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use caylex::complexes::{h_from_f, CayleyCombinatorics, FVector, HVector};
use caylex::facering::{coordinate_linear_forms, GradedQuotient};
use caylex::io;
use caylex::polytope::cayley::cayley_polytope;
use caylex::polytope::generators::{cyclic_polytope, simplex_polytope, stacked_polytope};
use caylex::polytope::minkowski::minkowski_sum;
use caylex::polytope::{Polytope, PureCollection};
use caylex::verify::{self, SuiteConfig};
use caylex::Error;

const EXIT_PASS: u8 = 0;
const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_HYPOTHESIS: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "caylex",
    about = "Exact computations on Cayley polytopes: Minkowski sum face numbers, h-vector identities, and Lefschetz rank certificates",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Cyclic,
    Stacked,
    Simplex,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Target {
    /// Boundary of the polytope in the file (or of each summand's sum).
    Sum,
    /// The Cayley complex of the collection.
    Cayley,
    /// The relative Cayley complex of the collection.
    Relative,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a polytope and write it as JSON.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long)]
        d: usize,
        /// Vertex count (ignored for simplex).
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minkowski sum of a collection, written as a polytope JSON.
    Sum {
        collection: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cayley polytope of a collection, written as JSON.
    Cayley {
        collection: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// f-vector of a polytope boundary, a Minkowski sum, or a Cayley-side
    /// complex.
    Fvec {
        /// Polytope or collection JSON file.
        input: PathBuf,
        /// What to measure when the input is a collection.
        #[arg(long, value_enum, default_value = "sum")]
        target: Target,
        #[arg(long)]
        json: bool,
    },
    /// h-vector at an explicit dimension parameter.
    Hvec {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "sum")]
        target: Target,
        /// Dimension parameter D; defaults to the natural one for the
        /// target (d for sums and boundaries, d+m-1 on the Cayley side).
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Graded quotient of the Stanley-Reisner ring of the Cayley complex:
    /// per-degree dimensions, compared against the h-vector.
    Ring {
        collection: PathBuf,
        /// Refuse ring computations that need degrees above this cap.
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        /// Also print the full Lefschetz certificate sweep.
        #[arg(long)]
        certificates: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run one named check on a collection.
    Check {
        /// face_correspondence | dsm | schenzel | lefschetz | monotonicity | equality
        name: String,
        collection: PathBuf,
        #[arg(long, default_value_t = 17)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run a configured suite of checks over generated instances.
    Suite {
        config: PathBuf,
        /// Worker threads (default: CAYLEX_JOBS or all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Output stem for the CSV and JSON reports (overrides the
        /// config's "output" field; default "suite_report").
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::DegenerateInput(_)
        | Error::NotSimplicial { .. }
        | Error::PerturbationFailed(_)
        | Error::DegreeCapExceeded(_)
        | Error::DimensionOverflow { .. } => EXIT_HYPOTHESIS,
        _ => EXIT_USAGE,
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> caylex::Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text)?;
            Ok(())
        }
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> caylex::Result<u8> {
    match cli.command {
        Command::Gen {
            kind,
            d,
            n,
            seed,
            out,
        } => {
            let polytope = match kind {
                GenKind::Cyclic => cyclic_polytope(d, n)?,
                GenKind::Stacked => stacked_polytope(d, n, seed)?,
                GenKind::Simplex => simplex_polytope(d)?,
            };
            emit(&out, &io::polytope_to_json(&polytope))?;
            Ok(EXIT_PASS)
        }
        Command::Sum { collection, out } => {
            let c = io::load_collection(&collection)?;
            let sum = minkowski_sum(&c)?;
            emit(&out, &io::polytope_to_json(&sum))?;
            Ok(EXIT_PASS)
        }
        Command::Cayley { collection, out } => {
            let c = io::load_collection(&collection)?;
            let k = cayley_polytope(&c);
            let report = caylex::polytope::check_cayley_simplicial(&k)?;
            emit(&out, &io::cayley_to_json(&k))?;
            eprintln!(
                "cayley polytope: dimension {}, simplicial: {}",
                k.dim(),
                report.simplicial
            );
            if let Some(face) = report.offending_face {
                eprintln!("first offending face: {face:?}");
            }
            Ok(EXIT_PASS)
        }
        Command::Fvec {
            input,
            target,
            json,
        } => {
            let f = fvector_for(&input, target)?;
            if json {
                println!("{}", io::fvector_to_json(&f));
            } else {
                print_fvector(&f);
            }
            Ok(EXIT_PASS)
        }
        Command::Hvec {
            input,
            target,
            dim,
            json,
        } => {
            let (f, natural_dim) = fvector_and_dim_for(&input, target)?;
            let d = dim.unwrap_or(natural_dim);
            let h = h_from_f(&f, d)?;
            if json {
                println!("{}", io::hvector_to_json(&h));
            } else {
                print_hvector(&h);
            }
            Ok(EXIT_PASS)
        }
        Command::Ring {
            collection,
            max_degree,
            certificates,
            json,
        } => ring_command(&collection, max_degree, certificates, json),
        Command::Check {
            name,
            collection,
            seed,
            json,
        } => {
            let c = io::load_collection(&collection)?;
            let instance = format!("file {}", collection.display());
            let report = verify::run_check(&name, &c, &instance, seed)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print_report(&report);
            }
            Ok(if report.skipped {
                EXIT_HYPOTHESIS
            } else if report.passed {
                EXIT_PASS
            } else {
                EXIT_CHECK_FAILED
            })
        }
        Command::Suite {
            config,
            jobs,
            output,
        } => {
            let text = std::fs::read_to_string(&config)?;
            let suite = SuiteConfig::from_json(&text)?;
            configure_jobs(jobs);
            let reports = verify::run_suite(&suite)?;
            let stem = output
                .or_else(|| suite.output.as_ref().map(PathBuf::from))
                .unwrap_or_else(|| PathBuf::from("suite_report"));
            let (csv_path, json_path) = verify::write_outputs(&reports, &stem)?;
            let failed = reports.iter().filter(|r| !r.passed && !r.skipped).count();
            let skipped = reports.iter().filter(|r| r.skipped).count();
            for r in &reports {
                let status = if r.skipped {
                    "skip"
                } else if r.passed {
                    "pass"
                } else {
                    "FAIL"
                };
                println!("[{status}] {:<20} {}", r.check_name, r.instance);
            }
            println!(
                "{} checks, {} failed, {} skipped; reports: {} {}",
                reports.len(),
                failed,
                skipped,
                csv_path.display(),
                json_path.display()
            );
            Ok(if failed > 0 { EXIT_CHECK_FAILED } else { EXIT_PASS })
        }
    }
}

fn configure_jobs(flag: Option<usize>) {
    let jobs = flag.or_else(|| {
        std::env::var("CAYLEX_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(n) = jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Either a polytope file (boundary f-vector) or a collection file.
enum LoadedInput {
    Polytope(Polytope),
    Collection(PureCollection),
}

fn load_input(path: &Path) -> caylex::Result<LoadedInput> {
    let text = std::fs::read_to_string(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    if value.get("polytopes").is_some() {
        Ok(LoadedInput::Collection(io::collection_from_json(&text)?))
    } else {
        Ok(LoadedInput::Polytope(io::polytope_from_json(&text)?))
    }
}

fn fvector_for(path: &Path, target: Target) -> caylex::Result<FVector> {
    Ok(fvector_and_dim_for(path, target)?.0)
}

fn fvector_and_dim_for(path: &Path, target: Target) -> caylex::Result<(FVector, usize)> {
    match load_input(path)? {
        LoadedInput::Polytope(p) => {
            let f = p.face_lattice()?.boundary_f_vector();
            Ok((f, p.dim()))
        }
        LoadedInput::Collection(c) => match target {
            Target::Sum => {
                let sum = minkowski_sum(&c)?;
                let f = sum.face_lattice()?.boundary_f_vector();
                Ok((f, c.d()))
            }
            Target::Cayley => {
                let comb = CayleyCombinatorics::new(&cayley_polytope(&c))?;
                Ok((comb.cayley_complex()?.f_vector(), comb.h_dim()))
            }
            Target::Relative => {
                let comb = CayleyCombinatorics::new(&cayley_polytope(&c))?;
                Ok((comb.relative_complex()?.f_vector(), comb.h_dim()))
            }
        },
    }
}

fn ring_command(
    collection: &Path,
    max_degree: usize,
    certificates: bool,
    json: bool,
) -> caylex::Result<u8> {
    let c = io::load_collection(collection)?;
    let d = c.d();
    if d > max_degree {
        return Err(Error::DegreeCapExceeded(format!(
            "the quotient needs components up to degree {d}, above the --max-degree cap {max_degree}; \
             monomial spaces grow combinatorially, raise the cap explicitly to proceed"
        )));
    }
    let k = cayley_polytope(&c);
    let comb = CayleyCombinatorics::new(&k)?;
    let t = comb.cayley_complex()?;
    let h = h_from_f(&t.f_vector(), comb.h_dim())?;
    let quotient = GradedQuotient::build(&t, &coordinate_linear_forms(&k), d)?;
    let dims = quotient.dims();
    let certs = if certificates {
        Some(quotient.all_certificates(d)?)
    } else {
        None
    };
    if json {
        let h_slice: Vec<i64> = (0..=d as i64).map(|i| h.get(i)).collect();
        let payload = serde_json::json!({
            "dims": dims,
            "h": h_slice,
            "certificates": certs,
        });
        println!("{}", serde_json::to_string_pretty(&payload)?);
    } else {
        println!("degree  dim A^i  h_i");
        for (i, dim) in dims.iter().enumerate() {
            println!("{i:>6}  {dim:>7}  {:>3}", h.get(i as i64));
        }
        if let Some(certs) = &certs {
            println!("\ncertificates (i, j, rank, dim source, injective):");
            for cert in certs {
                println!(
                    "  ({}, {})  rank {} / {}  {}",
                    cert.i, cert.j, cert.map_rank, cert.dim_source, cert.injective
                );
            }
        }
    }
    Ok(EXIT_PASS)
}

fn print_fvector(f: &FVector) {
    let parts: Vec<String> = f.iter().map(|(d, c)| format!("f_{d} = {c}")).collect();
    if parts.is_empty() {
        println!("f = ()");
    } else {
        println!("f = ({})", parts.join(", "));
    }
}

fn print_hvector(h: &HVector) {
    let entries: Vec<String> = h.entries().iter().map(i64::to_string).collect();
    println!("h = ({}) at D = {}", entries.join(", "), h.d());
}

fn print_report(report: &verify::CheckReport) {
    println!(
        "check {} on {}: {}",
        report.check_name,
        report.instance,
        if report.skipped {
            "hypothesis unmet"
        } else if report.passed {
            "passed"
        } else {
            "FAILED"
        }
    );
    if let Some(reason) = &report.reason {
        println!("  reason: {reason}");
    }
    if !report.rows.is_empty() {
        println!("  {:<12} {:>8} {:>8}  ok", "index", "lhs", "rhs");
        for row in &report.rows {
            println!(
                "  {:<12} {:>8} {:>8}  {}",
                row.label, row.lhs, row.rhs, row.passed
            );
        }
    }
    for (key, value) in &report.parameters {
        println!("  {key}: {value}");
    }
}
