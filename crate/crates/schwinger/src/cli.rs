//! Argument parsing and dispatch for the `schwinger` binary.
//!
//! Exit codes: 0 on success, 2 on any validation error (bad flags, invalid
//! labels, malformed JSON), 1 when `verify` finds a defect.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};

use schwinger_core::basis::{basis_state, traceless_part, BasisKey};
use schwinger_core::catalog::{self, IrrepLabel, Subgroup};
use schwinger_core::induced::equivalence_map;
use schwinger_core::{Error, Result};

use crate::format::{state_latex, state_text};
use crate::json;
use crate::labels::{parse_half, parse_third};
use crate::table::{self, TableKind};
use crate::verify::{Harness, VerifyConfig};

#[derive(Parser, Debug)]
#[command(
    name = "schwinger",
    version,
    about = "Exact six-oscillator SU(3) x Sp(2,R) toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension of the irrep (p,q)
    Dim { p: u32, q: u32 },
    /// Isospin-hypercharge multiplets of (p,q)
    Spectrum {
        p: u32,
        q: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Irreps in (p,0) x (0,q)
    Cg {
        p: u32,
        q: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Multiplicity of (p,q) in the representation induced from a subgroup
    Mult {
        p: u32,
        q: u32,
        /// U1xU1, SU2, U2 or SO3
        #[arg(long)]
        subgroup: String,
    },
    /// Normalized basis state |p,q; I M Y; m>
    State {
        p: u32,
        q: u32,
        #[arg(long = "I", allow_hyphen_values = true)]
        i: String,
        #[arg(long = "M", allow_hyphen_values = true)]
        m_iso: String,
        #[arg(long = "Y", allow_hyphen_values = true)]
        y: String,
        #[arg(long = "m", allow_hyphen_values = true)]
        m: String,
        #[arg(long, conflicts_with = "latex")]
        json: bool,
        #[arg(long)]
        latex: bool,
    },
    /// Traceless part of a polynomial given as JSON (file or stdin)
    Project { input: Option<String> },
    /// Image of an H0 polynomial (JSON) under the map to sphere functions
    Map { input: Option<String> },
    /// Run the verification suites and print a JSON summary
    Verify {
        #[arg(long, default_value_t = 5)]
        max_pq: u32,
        #[arg(long, default_value_t = 6)]
        degree: u32,
        #[arg(long)]
        numeric: bool,
        #[arg(long, default_value_t = 100)]
        samples: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        projector_samples: u32,
    },
    /// Tabulate dims, spectra, cg or mult over 0 <= p <= max-p, 0 <= q <= max-q
    Table {
        kind: String,
        #[arg(long, default_value_t = 3)]
        max_p: u32,
        #[arg(long, default_value_t = 3)]
        max_q: u32,
        /// Restrict the mult table to one subgroup
        #[arg(long)]
        subgroup: Option<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
}

enum Outcome {
    Ok(String),
    VerifyFailed(String),
}

/// Runs one command line; returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, stdin) {
        Ok(Outcome::Ok(s)) => {
            let _ = out.write_all(s.as_bytes());
            0
        }
        Ok(Outcome::VerifyFailed(s)) => {
            let _ = out.write_all(s.as_bytes());
            1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read_input(input: Option<String>, stdin: &mut dyn Read) -> Result<String> {
    let mut s = String::new();
    match input.as_deref() {
        None | Some("-") => {
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::Argument(format!("reading stdin: {e}")))?;
        }
        Some(path) => {
            s = std::fs::read_to_string(path)
                .map_err(|e| Error::Argument(format!("reading {path}: {e}")))?;
        }
    }
    Ok(s)
}

fn dispatch(cmd: Command, stdin: &mut dyn Read) -> Result<Outcome> {
    let text = match cmd {
        Command::Dim { p, q } => format!("{}\n", IrrepLabel::new(p, q).dim()),
        Command::Spectrum { p, q, format } => {
            let rows = table::spectrum_rows(IrrepLabel::new(p, q));
            match format {
                Format::Csv => table::to_csv(&rows)?,
                Format::Json => table::to_json(&rows),
                Format::Text => rows
                    .iter()
                    .map(|r| format!("I={} Y={} (r={}, s={})\n", r.I, r.Y, r.r, r.s))
                    .collect(),
            }
        }
        Command::Cg { p, q, format } => {
            let rows = table::cg_rows(p, q);
            match format {
                Format::Csv => table::to_csv(&rows)?,
                Format::Json => table::to_json(&rows),
                Format::Text => {
                    let parts: Vec<String> = catalog::cg_series(p, q)
                        .iter()
                        .map(|r| r.to_string())
                        .collect();
                    format!("{}\n", parts.join(" + "))
                }
            }
        }
        Command::Mult { p, q, subgroup } => {
            let g = Subgroup::parse(&subgroup)?;
            format!(
                "{}\n",
                catalog::induced_multiplicity(g, IrrepLabel::new(p, q))
            )
        }
        Command::State {
            p,
            q,
            i,
            m_iso,
            y,
            m,
            json: as_json,
            latex,
        } => {
            let key = BasisKey::new(
                p,
                q,
                parse_half(&i)?,
                parse_half(&m_iso)?,
                parse_third(&y)?,
                parse_half(&m)?,
            )?;
            let s = basis_state(&key)?;
            if as_json {
                json::state_to_json(&s)
            } else if latex {
                format!("{}\n", state_latex(&s))
            } else {
                state_text(&s)
            }
        }
        Command::Project { input } => {
            let f = json::poly_from_json(&read_input(input, stdin)?)?;
            json::poly_to_json(&traceless_part(&f))
        }
        Command::Map { input } => {
            let f = json::poly_from_json(&read_input(input, stdin)?)?;
            json::sphere_to_json(&equivalence_map(&f)?)
        }
        Command::Verify {
            max_pq,
            degree,
            numeric,
            samples,
            seed,
            projector_samples,
        } => {
            let cfg = VerifyConfig {
                projector_samples,
                ..VerifyConfig::from_flags(max_pq, degree, numeric, samples, seed)
            };
            let summary = Harness::new(cfg).run_all();
            let s = summary.to_json();
            return Ok(if summary.all_passed {
                Outcome::Ok(s)
            } else {
                Outcome::VerifyFailed(s)
            });
        }
        Command::Table {
            kind,
            max_p,
            max_q,
            subgroup,
            format,
        } => {
            let kind = TableKind::parse(&kind)?;
            if subgroup.is_some() && kind != TableKind::Mult {
                return Err(Error::Argument(
                    "--subgroup only applies to the mult table".into(),
                ));
            }
            macro_rules! emit {
                ($rows:expr) => {{
                    let rows = $rows;
                    match format {
                        TableFormat::Csv => table::to_csv(&rows)?,
                        TableFormat::Json => table::to_json(&rows),
                    }
                }};
            }
            match kind {
                TableKind::Dims => emit!(table::dim_rows(max_p, max_q)),
                TableKind::Spectra => emit!((0..=max_p)
                    .flat_map(|p| (0..=max_q)
                        .flat_map(move |q| table::spectrum_rows(IrrepLabel::new(p, q))))
                    .collect::<Vec<_>>()),
                TableKind::Cg => emit!((0..=max_p)
                    .flat_map(|p| (0..=max_q).flat_map(move |q| table::cg_rows(p, q)))
                    .collect::<Vec<_>>()),
                TableKind::Mult => {
                    let groups = match subgroup {
                        Some(s) => vec![Subgroup::parse(&s)?],
                        None => Subgroup::ALL.to_vec(),
                    };
                    emit!(table::mult_rows(&groups, max_p, max_q))
                }
            }
        }
    };
    Ok(Outcome::Ok(text))
}
