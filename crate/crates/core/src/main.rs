use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ordlift::steinhaus::{self, ZnSequence};
use ordlift::{Function, Table, TableSpec};

/// Multiplicative orders modulo n, the alpha/beta order functions, and
/// Steinhaus triangles.
#[derive(Debug, Parser)]
#[command(name = "ordlift", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FunctionArg {
    Alpha,
    Beta,
    Order,
    ProjOrder,
}

impl From<FunctionArg> for Function {
    fn from(f: FunctionArg) -> Self {
        match f {
            FunctionArg::Alpha => Function::Alpha,
            FunctionArg::Beta => Function::Beta,
            FunctionArg::Order => Function::Order,
            FunctionArg::ProjOrder => Function::ProjOrder,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a single value, e.g. `eval alpha 2 11`.
    #[command(allow_negative_numbers = true)]
    Eval {
        function: FunctionArg,
        a: i64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Print a grid of values, one row per n and one column per a.
    #[command(allow_negative_numbers = true)]
    Table {
        #[arg(long, value_enum, default_value = "alpha")]
        function: FunctionArg,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        n_min: u64,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(long, default_value_t = 1)]
        a_min: i64,
        #[arg(long, default_value_t = 20)]
        a_max: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Check every lifting law over 1 <= n <= N_MAX, |a| <= A_MAX.
    Verify {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        a_max: u64,
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Steinhaus triangles and balanced progressions.
    Steinhaus {
        #[command(subcommand)]
        command: SteinhausCommand,
    },
}

#[derive(Debug, Subcommand)]
enum SteinhausCommand {
    /// Triangle of a comma-separated sequence, e.g. `triangle 5 2,2,3,3`.
    #[command(allow_negative_numbers = true)]
    Triangle {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        modulus: u64,
        #[arg(value_delimiter = ',', num_args = 1.., required = true, allow_hyphen_values = true)]
        sequence: Vec<i64>,
    },
    /// First balanced progression (c, d) of length M in Z/NZ, N odd.
    Search {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
    },
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Eval { function, a, n } => {
            let value = Function::from(function)
                .eval(a, n)
                .map_err(|e| e.to_string())?;
            println!("{value}");
        }
        Command::Table {
            function,
            n_min,
            n_max,
            a_min,
            a_max,
            format,
            workers,
        } => {
            let format = match format {
                FormatArg::Csv => ordlift::Format::Csv,
                FormatArg::Json => ordlift::Format::Json,
                FormatArg::Text => ordlift::Format::Text,
            };
            let spec = TableSpec::new(function.into(), n_min..=n_max, a_min..=a_max, format)
                .map_err(|e| format!("usage: {e}"))?;
            let table =
                with_workers(workers, || Table::compute(&spec)).map_err(|e| e.to_string())?;
            print!("{}", table.render(spec.format));
        }
        Command::Verify {
            n_max,
            a_max,
            workers,
            format,
        } => {
            let report = ordlift::verify_claims_with_workers(n_max, a_max, workers);
            match format {
                FormatArg::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
                _ => {
                    for law in &report.laws {
                        let verdict = if law.passed() { "PASS" } else { "FAIL" };
                        println!(
                            "{verdict} {:<28} checks={:<9} failures={}",
                            law.name, law.checks, law.failures
                        );
                        if let Some(example) = &law.first_counterexample {
                            println!("     first counterexample: {example}");
                        }
                    }
                    println!(
                        "total: {} checks, {} failures",
                        report.total_checks(),
                        report.total_failures()
                    );
                }
            }
            if !report.passed() {
                return Err(format!("{} law violations", report.total_failures()));
            }
        }
        Command::Steinhaus { command } => match command {
            SteinhausCommand::Triangle { modulus, sequence } => {
                let seq =
                    ZnSequence::from_integers(modulus, &sequence).map_err(|e| e.to_string())?;
                let summary = steinhaus::triangle(&seq);
                let counts: Vec<String> = summary
                    .occurring()
                    .map(|(r, c)| format!("{r}:{c}"))
                    .collect();
                println!(
                    "balanced: {}; counts: {}",
                    summary.balanced,
                    counts.join(" ")
                );
            }
            SteinhausCommand::Search { n, m } => {
                match steinhaus::search_balanced_ap(n, m as usize).map_err(|e| e.to_string())? {
                    Some((c, d)) => println!("({c},{d})"),
                    None => println!("none"),
                }
            }
        },
    }
    Ok(())
}

fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) if message.starts_with("usage: ") => {
            eprintln!("error: {}", &message[7..]);
            ExitCode::from(2)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}
