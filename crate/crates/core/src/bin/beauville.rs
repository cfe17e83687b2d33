use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use beauville::catalog::{self, CATALOG};
use beauville::classify::{classify_with, ClassifyOptions};
use beauville::group::DEFAULT_ELEMENT_CAP;
use beauville::report::RunReport;
use beauville::tables::{rows_of, run_row, RowStatus};
use beauville::{Error, Signature};

#[derive(Parser)]
#[command(
    name = "beauville",
    version,
    about = "Classify surfaces isogenous to a product with q = 0"
)]
struct Cli {
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the components for one group and signature pair.
    Classify {
        /// Catalog name, or `@path` to a group definition file.
        #[arg(long)]
        group: String,
        #[arg(long)]
        t1: Signature,
        #[arg(long)]
        t2: Signature,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        element_cap: usize,
        #[arg(long)]
        orbit_cap: Option<usize>,
    },
    /// Recompute one of the published tables and compare row by row.
    Reproduce {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        table: u8,
        /// Also run the rows that take minutes.
        #[arg(long)]
        slow: bool,
    },
    /// List the built-in groups.
    Groups,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Classify {
            group,
            t1,
            t2,
            format,
            element_cap,
            orbit_cap,
        } => run_classify(&group, &t1, &t2, format, element_cap, orbit_cap),
        Command::Reproduce { table, slow } => run_reproduce(table, slow),
        Command::Groups => {
            for entry in CATALOG {
                println!("{entry}");
            }
            Ok(0)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run_classify(
    spec: &str,
    t1: &Signature,
    t2: &Signature,
    format: Format,
    element_cap: usize,
    orbit_cap: Option<usize>,
) -> Result<u8, Error> {
    let (name, group) = catalog::resolve(spec, element_cap)?;
    let mut opts = ClassifyOptions::default();
    if let Some(cap) = orbit_cap {
        opts.orbit_cap = cap;
    }
    let result = classify_with(&group, t1, t2, &opts)?;
    let report = RunReport::new(&name, &group, t1, t2, &result.invariants, &result.records);
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
        Format::Tsv => print!("{}", report.to_tsv()),
    }
    Ok(0)
}

fn run_reproduce(table: u8, slow: bool) -> Result<u8, Error> {
    let opts = ClassifyOptions::default();
    let (mut pass, mut fail, mut skip) = (0, 0, 0);
    for row in rows_of(table) {
        if row.slow && !slow {
            println!("{:<44} SKIPPED (slow row, rerun with --slow)", row.label());
            skip += 1;
            continue;
        }
        let outcome = run_row(row, &opts)?;
        println!("{}", outcome.line());
        match outcome.status {
            RowStatus::Pass => pass += 1,
            RowStatus::Fail(_) => fail += 1,
            RowStatus::Skipped(_) => skip += 1,
        }
    }
    println!("table {table}: {pass} passed, {fail} failed, {skip} skipped");
    Ok(if fail > 0 { 5 } else { 0 })
}
