mod params;
mod tables;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use twistoid::enumerate::{enumerate, grid_by_flags, realized_families, Bounds};
use twistoid::groups::tricosm_integral_senses;
use twistoid::oracle::verify_with_bound;
use twistoid::record::CSV_HEADER;
use twistoid::{
    analyze_twist, build_group, petrie_handedness, screw_handedness, table2_witnesses, Error,
    Handedness, ManifoldKind, OutputRecord, PetrieHandedness, TricosmParams, TwistoidParams,
    DEFAULT_FLAG_BOUND,
};

use params::ParamArgs;

#[derive(Parser)]
#[command(name = "twistoid", version, about = "Classify cubic twistoids on the dicosm, tricosm and tetracosm")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Table {
    Table1,
    Table2,
    Families,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one twistoid given in natural units
    Classify {
        manifold: ManifoldKind,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        with_cover: bool,
        /// Also count flag orbits by brute force
        #[arg(long)]
        with_oracle: bool,
        /// Refuse oracle runs above this many flags
        #[arg(long, default_value_t = DEFAULT_FLAG_BOUND)]
        max_flags: usize,
    },
    /// List every normalized parameter set within the bounds
    Enumerate {
        manifold: ManifoldKind,
        #[arg(long)]
        max_c: Option<i64>,
        #[arg(long)]
        max_n: Option<i64>,
        #[arg(long)]
        max_m: Option<i64>,
        #[arg(long)]
        max_p2: Option<i64>,
        #[arg(long)]
        max_q3: Option<i64>,
        #[arg(long)]
        max_ab: Option<i64>,
        #[arg(long)]
        max_pq: Option<i64>,
        /// One witness per realized family, then the family count
        #[arg(long)]
        families_only: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compare closed forms with the brute-force oracle
    Verify {
        #[arg(long, default_value_t = 2304)]
        max_flags: u64,
        /// A manifold name, `table2` or `petrie`
        #[arg(long)]
        only: Option<String>,
        /// Largest m checked by `--only petrie`
        #[arg(long, default_value_t = 9)]
        max_m: i64,
    },
    /// Emit a reference table as CSV
    Table { name: Table },
    /// Minimal toroidal cover of one twistoid
    Cover {
        manifold: ManifoldKind,
        #[command(flatten)]
        params: ParamArgs,
    },
}

/// Exit codes: 1 verification failure or I/O, 2 invalid input, 3 oracle bound.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ComplexityBound { .. } => 3,
        Error::InvalidParameters(_) | Error::HexacosmImpossible | Error::NonIntegralGenerator { .. } => 2,
        _ => 1,
    }
}

enum Failure {
    Model(Error),
    Io(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Model(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type Out<'a> = BufWriter<io::StdoutLock<'a>>;

fn emit(out: &mut Out, records: &[OutputRecord], format: Format) -> Result<(), Failure> {
    match format {
        Format::Json => {
            for r in records {
                writeln!(out, "{}", r.to_json())?;
            }
        }
        Format::Text => {
            for (i, r) in records.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                write!(out, "{}", r.to_text())?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(CSV_HEADER)?;
            for r in records {
                w.write_record(r.csv_row())?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn bounds(
    [max_c, max_n, max_m, max_p2, max_q3, max_ab, max_pq]: [Option<i64>; 7],
) -> Bounds {
    let d = Bounds::default();
    Bounds {
        max_c: max_c.unwrap_or(d.max_c),
        max_n: max_n.unwrap_or(d.max_n),
        max_m: max_m.unwrap_or(d.max_m),
        max_p2: max_p2.unwrap_or(d.max_p2),
        max_q3: max_q3.unwrap_or(d.max_q3),
        max_ab: max_ab.unwrap_or(d.max_ab),
        max_pq: max_pq.unwrap_or(d.max_pq),
    }
}

fn verify_grid(out: &mut Out, params: Vec<TwistoidParams>, label: &str) -> Result<bool, Failure> {
    let reports: Vec<_> = params
        .par_iter()
        .map(|p| verify_with_bound(p, usize::MAX))
        .collect();
    let mut failed = 0;
    for (p, r) in params.iter().zip(reports) {
        let problems = match r {
            Ok(r) if r.pass => continue,
            Ok(r) => r.mismatches(),
            Err(e) => vec![e.to_string()],
        };
        failed += 1;
        let record = json!({"params": p.to_string(), "discrepancies": problems});
        writeln!(out, "{record}")?;
    }
    let total = params.len();
    writeln!(out, "{label}: {}/{total} pass, {failed} fail", total - failed)?;
    Ok(failed == 0)
}

fn verify_petrie(out: &mut Out, max_m: i64) -> Result<bool, Failure> {
    let mut ok = true;
    for m in 1..=max_m {
        let senses = tricosm_integral_senses(m).len();
        let g = build_group(&TricosmParams::new(m, 1, 0).into())?;
        let t = analyze_twist(g.base_twist())?;
        let rule = petrie_handedness(&t)?;
        let sense = screw_handedness(&t);
        let vertex = t.centroid_incidence().vertex;
        let pass = match rule {
            PetrieHandedness::VertexAxis => vertex && senses == 2,
            PetrieHandedness::RightPetrie => !vertex && senses == 1 && sense == Some(Handedness::Right),
            PetrieHandedness::LeftPetrie => !vertex && senses == 1 && sense == Some(Handedness::Left),
        };
        ok &= pass;
        let sense = sense.map_or("none".to_string(), |s| format!("{s:?}").to_lowercase());
        writeln!(
            out,
            "m={m} rule={rule} screw={sense} vertexAxis={vertex} integralSenses={senses} {}",
            if pass { "PASS" } else { "FAIL" }
        )?;
    }
    Ok(ok)
}

fn run(cli: Cli, out: &mut Out) -> Result<(), Failure> {
    match cli.command {
        Command::Classify {
            manifold,
            params,
            format,
            with_cover,
            with_oracle,
            max_flags,
        } => {
            let p = params.encode(manifold)?;
            let record = OutputRecord::build(&p, with_cover, with_oracle.then_some(max_flags))?;
            emit(out, &[record], format)
        }
        Command::Enumerate {
            manifold,
            max_c,
            max_n,
            max_m,
            max_p2,
            max_q3,
            max_ab,
            max_pq,
            families_only,
            format,
        } => {
            if manifold == ManifoldKind::Hexacosm {
                return Err(Error::HexacosmImpossible.into());
            }
            let b = bounds([max_c, max_n, max_m, max_p2, max_q3, max_ab, max_pq]);
            let mut params = enumerate(manifold, &b);
            if families_only {
                params = realized_families(&params).into_values().collect();
            }
            let records = params
                .par_iter()
                .map(|p| OutputRecord::build(p, false, None))
                .collect::<Result<Vec<_>, _>>()?;
            emit(out, &records, format)?;
            if families_only {
                let summary = json!({"realizedFamilies": records.len()});
                match format {
                    Format::Json => writeln!(out, "{summary}")?,
                    _ => eprintln!("{summary}"),
                }
            }
            Ok(())
        }
        Command::Verify {
            max_flags,
            only,
            max_m,
        } => {
            let ok = match only.as_deref() {
                Some("petrie") => verify_petrie(out, max_m)?,
                Some("table2") => {
                    let ws = table2_witnesses().into_iter().map(|w| w.params.into()).collect();
                    verify_grid(out, ws, "table2")?
                }
                filter => {
                    let kind = filter
                        .map(|s| s.parse::<ManifoldKind>().map_err(Error::InvalidParameters))
                        .transpose()?;
                    if kind == Some(ManifoldKind::Hexacosm) {
                        return Err(Error::HexacosmImpossible.into());
                    }
                    let grid = grid_by_flags(max_flags)
                        .into_iter()
                        .filter(|p| kind.is_none_or(|k| p.kind() == k))
                        .collect();
                    verify_grid(out, grid, &format!("flags <= {max_flags}"))?
                }
            };
            if ok {
                Ok(())
            } else {
                Err(Failure::Verify)
            }
        }
        Command::Table { name } => {
            let rows = match name {
                Table::Table1 => tables::table1()?,
                Table::Table2 => tables::table2()?,
                Table::Families => tables::families_table(),
            };
            tables::write_csv(&mut *out, &rows)?;
            Ok(())
        }
        Command::Cover { manifold, params } => {
            let p = params.encode(manifold)?;
            let record = OutputRecord::build(&p, true, None)?;
            let v = record.value();
            let summary = json!({
                "manifold": v["manifold"],
                "params": v["params"],
                "cover": v["cover"],
            });
            writeln!(out, "{summary}")?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match result {
        Ok(()) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(()) => ExitCode::from(1),
        Err(Failure::Model(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verify) => ExitCode::from(1),
    }
}
