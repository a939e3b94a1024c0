use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hypersimplex::wlah::{WlahTable, DEFAULT_ENUM_CAP};
use hypersimplex::{ehrhart_polynomial, wlah, wlah_row, EhrhartMethod, WlahMethod};
use hypersimplex_cli::{render_polynomial, render_table, run_crosscheck, CrosscheckConfig, Format};

#[derive(Parser)]
#[command(
    name = "hypersimplex",
    version,
    about = "Exact Ehrhart polynomials of hypersimplices and weighted Lah numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum EhrhartArg {
    Katzman,
    Stirling,
    Wlah,
    Oracle,
}

impl From<EhrhartArg> for EhrhartMethod {
    fn from(a: EhrhartArg) -> Self {
        match a {
            EhrhartArg::Katzman => EhrhartMethod::Katzman,
            EhrhartArg::Stirling => EhrhartMethod::Stirling,
            EhrhartArg::Wlah => EhrhartMethod::Wlah,
            EhrhartArg::Oracle => EhrhartMethod::Oracle,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum WlahArg {
    Enum,
    RecA,
    RecB,
    Closed,
    Genfun,
}

impl From<WlahArg> for WlahMethod {
    fn from(a: WlahArg) -> Self {
        match a {
            WlahArg::Enum => WlahMethod::Enum,
            WlahArg::RecA => WlahMethod::RecA,
            WlahArg::RecB => WlahMethod::RecB,
            WlahArg::Closed => WlahMethod::Closed,
            WlahArg::Genfun => WlahMethod::Genfun,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Ehrhart polynomial of the hypersimplex Δ(k,n), ascending coefficients
    Ehrhart {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "katzman")]
        method: EhrhartArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Weighted Lah numbers: one value with --m and --l, one row with --m, else the table
    Wlah {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, requires = "m", allow_negative_numbers = true)]
        l: Option<i64>,
        #[arg(long, value_enum, default_value = "rec-b")]
        method: WlahArg,
    },
    /// Table of W(l,n,m), rows m and columns l
    WlahTable {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Run every identity suite; exit 0 when all pass, 1 otherwise
    Crosscheck {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 8)]
        oracle_max_n: usize,
        #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
        enum_cap: usize,
    },
}

const USAGE_ERROR: u8 = 2;

fn run(cli: Cli) -> Result<(String, u8), String> {
    match cli.command {
        Command::Ehrhart {
            k,
            n,
            method,
            format,
        } => {
            let r = ehrhart_polynomial(k, n, method.into()).map_err(|e| e.to_string())?;
            Ok((render_polynomial(&r, format), 0))
        }
        Command::Wlah { n, m, l, method } => {
            let method = method.into();
            let out = match (m, l) {
                (Some(m), Some(l)) => {
                    format!("{}\n", wlah(l, n, m, method).map_err(|e| e.to_string())?)
                }
                (Some(m), None) => {
                    let row = wlah_row(n, m, method).map_err(|e| e.to_string())?;
                    let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                    format!("{}\n", cells.join(","))
                }
                _ => {
                    let t = WlahTable::build(n, method).map_err(|e| e.to_string())?;
                    render_table(&t, Format::Text)
                }
            };
            Ok((out, 0))
        }
        Command::WlahTable { n, format } => {
            let t = hypersimplex::wlah_table(n).map_err(|e| e.to_string())?;
            Ok((render_table(&t, format), 0))
        }
        Command::Crosscheck {
            max_n,
            oracle_max_n,
            enum_cap,
        } => {
            let report = run_crosscheck(&CrosscheckConfig {
                max_n,
                oracle_max_n,
                enum_cap,
                fault: None,
            })
            .map_err(|e| e.to_string())?;
            Ok((report.render(), report.exit_code() as u8))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}
