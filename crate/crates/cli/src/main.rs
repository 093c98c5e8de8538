//! Command-line front end for `liebound`.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use liebound::bounded::Analysis;
use liebound::catalog;
use liebound::format::{parse_element, read_algebra, read_subspace, serialize_algebra};
use liebound::oracle::{verdict, Projection, WalkConfig};
use liebound::report::{report_from, AnalyzeOptions};
use liebound::{Error, Result};

#[derive(Parser)]
#[command(name = "liebound", version, about = "Structure and bounded vectors of real Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an algebra file and check the Jacobi identity.
    Validate { file: PathBuf },
    /// Full structure report with the bounded subalgebra.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also run orbit walks of this many steps on each basis vector.
        #[arg(long)]
        walk_steps: Option<usize>,
        #[arg(long, env = "LIEBOUND_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Decide whether one vector is bounded.
    Check {
        file: PathBuf,
        /// Comma-separated rational coordinates.
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Escape witness or random orbit walk for one vector.
    Oracle {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        #[arg(long, default_value_t = 100_000)]
        steps: usize,
        #[arg(long, env = "LIEBOUND_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        /// Isotropy subalgebra: a file of vectors, `;`-separated vectors,
        /// or comma-separated basis labels.
        #[arg(long, allow_hyphen_values = true)]
        isotropy: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Built-in example algebras.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    List,
    /// Print an entry in the algebra file format.
    Show {
        name: String,
        #[arg(long, allow_hyphen_values = true)]
        param: Option<i64>,
    },
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Validate { file } => {
            let alg = read_algebra(&file)?;
            println!("ok: {} (dim {}) satisfies the Jacobi identity", alg.name(), alg.dim());
        }
        Command::Analyze {
            file,
            format,
            walk_steps,
            seed,
        } => {
            let alg = read_algebra(&file)?;
            let an = Analysis::compute(&alg)?;
            let report = report_from(&alg, &an, &AnalyzeOptions { walk_steps, seed })?;
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            if let Some(c) = report.certificates.iter().find(|c| !c.passed) {
                return Err(Error::Verification(c.name.clone()));
            }
        }
        Command::Check {
            file,
            vector,
            format,
        } => {
            let alg = read_algebra(&file)?;
            let x = parse_element(&alg, &vector)?;
            let an = Analysis::compute(&alg)?;
            let vr = an.classify(&alg, &x)?;
            match format {
                Format::Text => {
                    println!("X   = {}", alg.format_element(&vr.x));
                    println!("X_r = {}", alg.format_element(&vr.x_r));
                    println!("X_s = {}", alg.format_element(&vr.x_s));
                    println!("X_s in c_sc(r): {}", vr.xs_in_c_sc_r);
                    println!("X_r in c(n):    {}", vr.xr_in_c_n);
                    println!("char poly of ad X: {}", vr.char_poly);
                    println!("purely imaginary spectrum: {}", vr.spectrum_imaginary);
                    println!("{}", if vr.bounded { "bounded" } else { "unbounded" });
                }
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "vector": alg.format_element(&vr.x),
                        "x_r": alg.format_element(&vr.x_r),
                        "x_s": alg.format_element(&vr.x_s),
                        "xs_in_c_sc_r": vr.xs_in_c_sc_r,
                        "xr_in_c_n": vr.xr_in_c_n,
                        "char_poly": vr.char_poly.to_string(),
                        "spectrum_imaginary": vr.spectrum_imaginary,
                        "bounded": vr.bounded,
                    }))
                    .expect("serializable")
                ),
            }
            if let Some(c) = &vr.jordan_certificate {
                c.clone().into_result()?;
            }
        }
        Command::Oracle {
            file,
            vector,
            steps,
            seed,
            scale,
            isotropy,
            format,
        } => {
            let alg = read_algebra(&file)?;
            let x = parse_element(&alg, &vector)?;
            let an = Analysis::compute(&alg)?;
            let projection = match isotropy {
                Some(spec) => {
                    let h = read_subspace(&alg, &spec)?;
                    Some(Projection::new(&alg, &an.structure, &h)?)
                }
                None => None,
            };
            let cfg = WalkConfig {
                steps,
                scale,
                seed,
                projection,
                ..WalkConfig::default()
            };
            let outcome = verdict(&alg, &an.structure.nilradical, &x, &cfg)?;
            let exact = an.bounded.total.contains(&x);
            let agrees = exact != outcome.verdict.is_unbounded();
            match format {
                Format::Text => {
                    println!("verdict: {}", outcome.verdict);
                    if let Some(w) = &outcome.witness {
                        println!(
                            "escape along {} (degree {}): {}",
                            alg.format_element(&w.direction),
                            w.degree(),
                            w.format(&alg)
                        );
                    }
                    if let Some(w) = &outcome.walk {
                        println!(
                            "walk: {} steps, seed {}, sup norm {:.6e}, growth {:.6e}",
                            w.steps_taken,
                            w.seed,
                            w.sup_norm,
                            w.growth()
                        );
                    }
                    println!("exact membership in b: {exact}");
                    println!("agreement: {agrees}");
                }
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "verdict": outcome.verdict,
                        "witness": outcome.witness.as_ref().map(|w| json!({
                            "direction": alg.format_element(&w.direction),
                            "degree": w.degree(),
                            "polynomial": w.format(&alg),
                        })),
                        "walk": outcome.walk,
                        "exact_bounded": exact,
                        "agreement": agrees,
                    }))
                    .expect("serializable")
                ),
            }
        }
        Command::Catalog { command } => match command {
            CatalogCommand::List => {
                for e in catalog::ENTRIES {
                    let name = match e.parameter {
                        Some(p) => format!("{} [--param {p}]", e.name),
                        None => e.name.to_string(),
                    };
                    println!("{name:<28} {}", e.summary);
                }
            }
            CatalogCommand::Show { name, param } => {
                let alg = catalog::catalog(&name, param)?;
                println!("{}", serialize_algebra(&alg));
            }
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_internal() { 2 } else { 1 })
        }
    }
}
