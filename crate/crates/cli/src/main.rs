use std::fs::File;
use std::io::{self, BufWriter, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use karpelevich::arcs::{all_arcs, arc_params, g_hat, ito_roots};
use karpelevich::boundary::sample_boundary_with;
use karpelevich::farey::farey_sequence;
use karpelevich::poly::{all_roots, DEFAULT_MAX_ITER, DEFAULT_ROOT_TOL};
use karpelevich::realize::{realize_subdominant, RealizationKind};
use karpelevich::region::{contains_with, min_order_with, DEFAULT_CAP, DEFAULT_TOL_MEMBER};
use karpelevich::{BoundaryConfig, Complex64};
use serde_json::json;

use karpelevich_cli::error::{CliError, EXIT_INSIDE, EXIT_OUTSIDE};
use karpelevich_cli::input::{parse_complex, parse_pair};
use karpelevich_cli::output::{write_csv, write_json, write_svg, OutputRecord};

#[derive(Parser)]
#[command(name = "karpelevich", version, about = "Eigenvalue regions of stochastic matrices")]
struct Cli {
    /// Bisection tolerance for boundary moduli and update tolerance for root finding.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Slack allowed beyond the boundary when testing membership.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL_MEMBER)]
    tol_member: f64,
    /// Largest order tried by `minn`.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Farey sequence of order n, one fraction per line.
    Farey {
        #[arg(long)]
        n: u64,
    },
    /// Arc parameters of every Farey pair of order n.
    Arcs {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// Boundary samples (uniform angles plus all Farey angles).
    Boundary {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Write to this file instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Is z in the region of order n? Exit status 0 if inside, 1 if outside.
    Member {
        #[arg(long)]
        n: u64,
        /// `re+imi` or `modulus@turns`, e.g. `0.9@7/24`.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z: Complex64,
        #[arg(long)]
        json: bool,
    },
    /// Smallest order whose region contains z.
    Minn {
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z: Complex64,
    },
    /// Stochastic matrix of order n with z as a subdominant eigenvalue.
    Realize {
        #[arg(long)]
        n: u64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z: Complex64,
    },
    /// Roots of the arc polynomial of a Farey pair (or of one trinomial factor).
    Roots {
        #[arg(long)]
        n: u64,
        /// Farey pair `p/q,r/s` of order n.
        #[arg(long)]
        pair: String,
        #[arg(long)]
        alpha: f64,
        /// Roots of the trinomial factor with this index instead.
        #[arg(long)]
        j: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

fn colored(text: &str, code: &str) -> String {
    if io::stdout().is_terminal() && std::env::var_os("NO_COLOR").is_none() {
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

fn cfg(cli: &Cli) -> BoundaryConfig {
    let mut c = BoundaryConfig::default();
    if let Some(t) = cli.tol {
        c.tol_rho = t;
    }
    c
}

fn pair_json(c: Complex64) -> serde_json::Value {
    json!([c.re, c.im])
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    if let Some(t) = cli.tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(CliError::Usage(format!("--tol must be positive, got {t}")));
        }
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match &cli.command {
        Command::Farey { n } => {
            if *n < 1 {
                return Err(CliError::Usage("n must be at least 1".into()));
            }
            for f in farey_sequence(*n) {
                writeln!(out, "{f}")?;
            }
        }
        Command::Arcs { n, json } => {
            let arcs = all_arcs(*n)?;
            if *json {
                let rows: Vec<_> = arcs
                    .iter()
                    .map(|a| {
                        json!({
                            "pair": [a.pair.left().to_string(), a.pair.right().to_string()],
                            "type": a.arc_type.name(),
                            "p": a.p, "q": a.q, "r": a.r, "s": a.s, "d": a.d,
                            "delta": a.delta, "d1": a.d1, "s1": a.s1, "r1": a.r1,
                            "j0": a.j0, "rhat": a.rhat, "l0": a.l0, "y": a.y,
                        })
                    })
                    .collect();
                serde_json::to_writer_pretty(&mut out, &rows)?;
                writeln!(out)?;
            } else {
                writeln!(out, "{:<14}{:<9}{:>4}{:>4}{:>4}{:>6}{:>4}{:>4}{:>4}{:>4}{:>5}{:>4}",
                    "pair", "type", "q", "s", "d", "delta", "d1", "s1", "r1", "j0", "rhat", "l0")?;
                for a in &arcs {
                    writeln!(out, "{:<14}{:<9}{:>4}{:>4}{:>4}{:>6}{:>4}{:>4}{:>4}{:>4}{:>5}{:>4}",
                        a.pair.to_string(), a.arc_type.name(), a.q, a.s, a.d, a.delta, a.d1, a.s1,
                        a.r1, a.j0, a.rhat, a.l0)?;
                }
            }
        }
        Command::Boundary { n, samples, format, output } => {
            let points = sample_boundary_with(*n, *samples, &cfg(cli))?;
            let records: Vec<OutputRecord> = points.iter().map(OutputRecord::from).collect();
            let sink: Box<dyn Write> = match output {
                Some(path) => Box::new(BufWriter::new(File::create(path)?)),
                None => Box::new(&mut out),
            };
            match format {
                Format::Csv => write_csv(&records, sink)?,
                Format::Json => write_json(&records, sink)?,
                Format::Svg => write_svg(&records, *n, sink)?,
            }
        }
        Command::Member { n, z, json } => {
            let v = contains_with(*n, *z, cli.tol_member, &cfg(cli))?;
            if *json {
                let doc = json!({
                    "n": n, "z": pair_json(*z), "inside": v.inside,
                    "boundary_modulus": v.boundary_modulus, "margin": v.margin,
                });
                writeln!(out, "{doc}")?;
            } else {
                let word = if v.inside { colored("inside", "32") } else { colored("outside", "31") };
                writeln!(out, "{word} n={n} |z|={} boundary={} margin={:e}", z.norm(), v.boundary_modulus, v.margin)?;
            }
            return Ok(if v.inside { EXIT_INSIDE } else { EXIT_OUTSIDE });
        }
        Command::Minn { z } => {
            let n = min_order_with(*z, cli.cap, cli.tol_member, &cfg(cli))?;
            writeln!(out, "{n}")?;
        }
        Command::Realize { n, z } => {
            let r = realize_subdominant(*n, *z)?;
            let mut doc = json!({
                "n": n,
                "kind": match r.kind {
                    RealizationKind::Matrix => "Matrix",
                    RealizationKind::PolynomialCertificate => "PolynomialCertificate",
                },
                "target": pair_json(r.target),
                "achieved": pair_json(r.achieved),
                "scale": r.scale,
                "arc_type": r.params.map(|p| p.arc_type.name()),
            });
            if let Some(m) = &r.matrix {
                doc["matrix"] = json!(m.rows());
            }
            if let Some(c) = &r.certificate {
                doc["certificate"] = json!({
                    "f_alpha": c.f_alpha.coeffs().iter().map(|&x| pair_json(x)).collect::<Vec<_>>(),
                    "roots": c.roots.roots.iter().map(|&x| pair_json(x)).collect::<Vec<_>>(),
                    "subdominance_ok": c.subdominance_ok,
                });
            }
            serde_json::to_writer_pretty(&mut out, &doc)?;
            writeln!(out)?;
        }
        Command::Roots { n, pair, alpha, j, json } => {
            let pair = parse_pair(pair, *n).map_err(CliError::Usage)?;
            let params = arc_params(&pair)?;
            let rs = match j {
                Some(j) => all_roots(
                    &g_hat(&params, *alpha, *j)?,
                    cli.tol.unwrap_or(DEFAULT_ROOT_TOL),
                    DEFAULT_MAX_ITER,
                )?,
                None => ito_roots(&params, *alpha)?,
            };
            let mut roots = rs.roots.clone();
            roots.sort_by(|a, b| b.norm().total_cmp(&a.norm()).then(a.arg().total_cmp(&b.arg())));
            if *json {
                let doc = json!({
                    "pair": pair.to_string(), "type": params.arc_type.name(), "alpha": alpha,
                    "roots": roots.iter().map(|&x| pair_json(x)).collect::<Vec<_>>(),
                    "residual": rs.residual,
                });
                writeln!(out, "{doc}")?;
            } else {
                for z in roots {
                    writeln!(out, "{:.16e} {:.16e} {:.16e}", z.re, z.im, z.norm())?;
                }
            }
        }
    }
    out.flush()?;
    Ok(EXIT_INSIDE)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
