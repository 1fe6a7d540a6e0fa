use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use vr_core::grid::{analyze_grid, verify_grid, Fault};
use vr_core::numberfield::{analyze_seeded, DEFAULT_SEED};
use vr_core::report::{knot_dump, to_csv, to_json, to_markdown, TableRow};
use vr_core::tqft::{surface_signature, SurfaceSpec};
use vr_core::Params;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "vr",
    version,
    about = "Signed Verlinde algebras and Riley polynomials of two-bridge knots"
)]
struct Cli {
    /// Seed for the random splitting step of modular factorization.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Riley polynomial, chi, its factorization and signatures of K(r, s).
    Knot { r: i64, s: i64 },
    /// sig(eta+) for every valid (r, s) with r <= RMAX.
    Table {
        rmax: u32,
        #[arg(long)]
        so3: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the identity suite on every valid (r, s) with r <= RMAX.
    Verify {
        rmax: u32,
        #[arg(long)]
        jobs: Option<usize>,
        /// Corrupt one structure constant of the given cell, as "r,s".
        #[arg(long, hide = true, value_parser = parse_pair)]
        inject_fault: Option<(i64, i64)>,
    },
    /// List the (r, s) with |sig(eta+)| < r1.
    Scan { rmin: u32, rmax: u32 },
    /// eps(Omega^g e_a e_b ...) for a colored closed surface.
    Invariant {
        r: i64,
        s: i64,
        #[arg(long)]
        genus: u32,
        #[arg(long, value_delimiter = ',')]
        colors: Vec<usize>,
        #[arg(long)]
        so3: bool,
    },
    /// Write both algebras and the polynomials of K(r, s) as JSON.
    Dump {
        r: i64,
        s: i64,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Md,
}

fn parse_pair(s: &str) -> std::result::Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or("expected r,s")?;
    Ok((
        a.trim().parse().map_err(|_| "bad r")?,
        b.trim().parse().map_err(|_| "bad s")?,
    ))
}

/// Errors that should exit with the usage code.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn params(r: i64, s: i64) -> Result<Params> {
    Params::new(r, s).map_err(|e| Usage(e.to_string()).into())
}

fn odd_range(rmin: u32, rmax: u32) -> Result<()> {
    if rmax < 3 || rmin > rmax {
        return Err(Usage(format!("empty range {rmin}..={rmax}")).into());
    }
    Ok(())
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout()
            .write_all(text.as_bytes())
            .context("writing to stdout"),
    }
}

fn knot(p: Params, seed: u64) -> Result<()> {
    let a = analyze_seeded(p, seed)?;
    let mut out = String::new();
    let degrees: Vec<String> = a.factor_degrees.iter().map(usize::to_string).collect();
    out += &format!("K{p}\n");
    out += &format!("riley           {}\n", a.riley.display_with("t"));
    out += &format!("chi             {}\n", a.chi.display_with("t"));
    for (f, m) in &a.chi_factors.factors {
        let pow = if *m > 1 {
            format!("^{m}")
        } else {
            String::new()
        };
        out += &format!("  factor        ({}){pow}\n", f.display_with("t"));
    }
    out += &format!("factor degrees  {}\n", degrees.join(" "));
    out += &format!("simple          {}\n", a.simple);
    out += &format!("r1              {}\n", a.r1);
    out += &format!("sig(eta+)       {}\n", a.sig_eta_plus);
    out += &format!("knot signature  {}\n", a.knot_sig);
    let relation = if a.inequality_strict {
        "strict"
    } else {
        "equality"
    };
    out += &format!("|sig| <= r1     {relation}\n");
    emit(&out, None)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Knot { r, s } => knot(params(r, s)?, cli.seed)?,
        Command::Table {
            rmax,
            so3,
            format,
            output,
        } => {
            odd_range(3, rmax)?;
            let rows: Vec<TableRow> = analyze_grid(3, rmax, cli.seed)?
                .iter()
                .map(TableRow::from)
                .collect();
            let text = match format {
                Format::Csv => to_csv(&rows),
                Format::Json => to_json(&rows, so3),
                Format::Md => to_markdown(&rows, so3),
            };
            emit(&text, output.as_ref())?;
        }
        Command::Verify {
            rmax,
            jobs,
            inject_fault,
        } => {
            odd_range(3, rmax)?;
            let fault = inject_fault
                .map(|(r, s)| params(r, s))
                .transpose()?
                .map(|target| Fault { target });
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()?;
            let reports = pool.install(|| verify_grid(rmax, fault));
            let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
            let failures: Vec<_> = reports.iter().flat_map(|r| r.failures()).collect();
            for c in &failures {
                println!("FAIL {}: {}", c.name, c.detail);
            }
            println!(
                "{} cells, {checks} checks, {} failed",
                reports.len(),
                failures.len()
            );
            if !failures.is_empty() {
                return Ok(ExitCode::from(EXIT_FAILURE));
            }
        }
        Command::Scan { rmin, rmax } => {
            odd_range(rmin, rmax)?;
            let mut out = String::from("r,s,sig_eta_plus,r1\n");
            for a in analyze_grid(rmin, rmax, cli.seed)?
                .iter()
                .filter(|a| a.inequality_strict)
            {
                out += &format!(
                    "{},{},{},{}\n",
                    a.params.r(),
                    a.params.s(),
                    a.sig_eta_plus,
                    a.r1
                );
            }
            emit(&out, None)?;
        }
        Command::Invariant {
            r,
            s,
            genus,
            colors,
            so3,
        } => {
            let p = params(r, s)?;
            let spec = SurfaceSpec { genus, colors, so3 };
            let value = surface_signature(p, &spec).map_err(|e| Usage(e.to_string()))?;
            println!("{value}");
        }
        Command::Dump { r, s, output } => {
            let dump = knot_dump(params(r, s)?)?;
            let text = serde_json::to_string_pretty(&dump)? + "\n";
            emit(&text, Some(&output))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<Usage>() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::from(EXIT_FAILURE)
            }
        }
    }
}
