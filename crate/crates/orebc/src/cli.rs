//! Command-line front end. `run` is a pure function from argv to exit
//! code plus captured output so golden tests can compare bytes.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::annihilator::{self, DEFAULT_BOUND_CAP};
use crate::bivar::CoeffMode;
use crate::centralizer;
use crate::config::{parse_coeff_ring, parse_field, AlgebraSettings};
use crate::error::{Error, Result};
use crate::ore::{OreAlgebra, OreElem};
use crate::parse::{eval_bivar_expr, eval_expr, parse_expr};
use crate::render::{json_ore, render_bivar, render_ore};

#[derive(Parser, Debug)]
#[command(name = "orebc", disable_version_flag = true)]
struct Cli {
    /// Algebra preset: weyl, qweyl (requires --q) or power (uses --sigma/--delta)
    #[arg(long)]
    preset: Option<String>,
    /// q for the qweyl preset (scalar literal, e.g. -1 or 2/3)
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// sigma(y) as a polynomial in y
    #[arg(long)]
    sigma: Option<String>,
    /// delta(y) as a polynomial in y
    #[arg(long)]
    delta: Option<String>,
    /// Ground field: Q or F<p>
    #[arg(long)]
    field: Option<String>,
    /// Coefficient ring: poly or ratfunc
    #[arg(long = "coeff-ring")]
    coeff_ring: Option<String>,
    /// Config file with `key = value` lines (field, coeff_ring, sigma, delta)
    #[arg(long)]
    config: Option<std::path::PathBuf>,
    /// Emit machine-readable JSON for element-valued commands
    #[arg(long)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Product A*B in canonical form
    Mul { a: String, b: String },
    /// Sum A+B
    Add { a: String, b: String },
    /// Commutator A*B - B*A
    Commutator { a: String, b: String },
    /// Truncated centralizer basis of A
    Centralizer {
        a: String,
        #[arg(long = "deg-x")]
        deg_x: usize,
        #[arg(long = "deg-y")]
        deg_y: Option<usize>,
        #[arg(long = "module-basis")]
        module_basis: bool,
    },
    /// Search for an annihilating polynomial of a commuting pair
    Annihilate {
        p: String,
        q: String,
        /// scalars or poly
        #[arg(long, default_value = "scalars")]
        coeffs: String,
        #[arg(long = "max-s")]
        max_s: Option<usize>,
        #[arg(long = "max-t")]
        max_t: Option<usize>,
        #[arg(long = "max-y")]
        max_y: Option<usize>,
    },
    /// Check f(P,Q) = 0 for a bivariate polynomial f(s,t)
    Verify { f: String, p: String, q: String },
    /// Check whether P lies in the center
    Central { p: String },
}

#[derive(Debug)]
pub struct CliOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn build_algebra(cli: &Cli) -> Result<OreAlgebra> {
    let mut settings = AlgebraSettings::default();
    if let Some(path) = &cli.config {
        settings.apply_config_file(path)?;
    }
    if let Some(field) = &cli.field {
        settings.field = parse_field(field)?;
    }
    if let Some(ring) = &cli.coeff_ring {
        settings.coeff_ring = parse_coeff_ring(ring)?;
    }
    if let Some(sigma) = &cli.sigma {
        settings.sigma_src = sigma.clone();
    }
    if let Some(delta) = &cli.delta {
        settings.delta_src = delta.clone();
    }
    if let Some(preset) = &cli.preset {
        settings.apply_preset(preset, cli.q.as_deref())?;
    }
    settings.build()
}

fn parse_elem(src: &str, alg: &OreAlgebra) -> Result<OreElem> {
    eval_expr(&parse_expr(src)?, alg)
}

fn elem_output(e: &OreElem, json: bool) -> String {
    if json {
        json_ore(e).to_string()
    } else {
        render_ore(e)
    }
}

fn bound_cap() -> usize {
    std::env::var("OREBC_MAX_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_BOUND_CAP)
}

fn dispatch(cli: &Cli, out: &mut String) -> Result<()> {
    let alg = build_algebra(cli)?;
    match &cli.command {
        Command::Mul { a, b } => {
            let r = parse_elem(a, &alg)?.mul(&parse_elem(b, &alg)?)?;
            out.push_str(&elem_output(&r, cli.json));
            out.push('\n');
        }
        Command::Add { a, b } => {
            let r = parse_elem(a, &alg)?.add(&parse_elem(b, &alg)?)?;
            out.push_str(&elem_output(&r, cli.json));
            out.push('\n');
        }
        Command::Commutator { a, b } => {
            let r = parse_elem(a, &alg)?.commutator(&parse_elem(b, &alg)?)?;
            out.push_str(&elem_output(&r, cli.json));
            out.push('\n');
        }
        Command::Centralizer {
            a,
            deg_x,
            deg_y,
            module_basis,
        } => {
            let a = parse_elem(a, &alg)?;
            if *module_basis {
                let mb = centralizer::module_basis(&a, *deg_x, *deg_y)?;
                for (i, p) in &mb.residue_classes {
                    out.push_str(&format!("p_{} = {}\n", i, render_ore(p)));
                }
                out.push_str(&format!("rank {}\n", mb.rank()));
            } else {
                let by = deg_y.unwrap_or_else(|| centralizer::default_y_bound(&a, *deg_x));
                let basis = centralizer::centralizer_kbasis(&a, *deg_x, by)?;
                for e in &basis {
                    out.push_str(&render_ore(e));
                    out.push('\n');
                }
                out.push_str(&format!("dimension {}\n", basis.len()));
            }
        }
        Command::Annihilate {
            p,
            q,
            coeffs,
            max_s,
            max_t,
            max_y,
        } => {
            let p = parse_elem(p, &alg)?;
            let q = parse_elem(q, &alg)?;
            let mode = match coeffs.as_str() {
                "scalars" => CoeffMode::Scalars,
                "poly" => CoeffMode::PolyCoeffs,
                other => {
                    return Err(Error::InvalidConfig(format!(
                        "invalid --coeffs `{}` (expected scalars or poly)",
                        other
                    )))
                }
            };
            let explicit = max_s.is_some() || max_t.is_some() || max_y.is_some();
            let (found, s, t, y) = if explicit {
                let s = max_s.unwrap_or_else(|| q.degree().finite().unwrap_or(0).max(1));
                let t = max_t.unwrap_or_else(|| p.degree().finite().unwrap_or(0).max(1));
                let y = match mode {
                    CoeffMode::Scalars => 0,
                    CoeffMode::PolyCoeffs => max_y.unwrap_or(1),
                };
                (annihilator::annihilate(&p, &q, mode, s, t, y)?, s, t, y)
            } else {
                let outcome = annihilator::annihilate_scheduled(&p, &q, mode, bound_cap())?;
                let b = outcome.bounds;
                (outcome.found, b.max_s, b.max_t, b.max_y)
            };
            match found {
                Some(f) => {
                    out.push_str(&render_bivar(&f));
                    out.push('\n');
                }
                None => {
                    out.push_str(&format!(
                        "NOT FOUND (bounds s\u{2264}{} t\u{2264}{} y\u{2264}{})\n",
                        s, t, y
                    ));
                }
            }
        }
        Command::Verify { f, p, q } => {
            let f = eval_bivar_expr(&parse_expr(f)?, alg.field())?;
            let p = parse_elem(p, &alg)?;
            let q = parse_elem(q, &alg)?;
            out.push_str(if annihilator::verify(&f, &p, &q)? {
                "true\n"
            } else {
                "false\n"
            });
        }
        Command::Central { p } => {
            let p = parse_elem(p, &alg)?;
            out.push_str(if p.is_central()? { "true\n" } else { "false\n" });
        }
    }
    Ok(())
}

/// Runs the CLI on the given argv (including the program name).
pub fn run<I, S>(args: I) -> CliOutcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliOutcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => CliOutcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    let mut stdout = String::new();
    match dispatch(&cli, &mut stdout) {
        Ok(()) => CliOutcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => CliOutcome {
            code: if e.is_syntax() { 2 } else { 1 },
            stdout,
            stderr: format!("{}: {}\n", e.name(), e),
        },
    }
}
