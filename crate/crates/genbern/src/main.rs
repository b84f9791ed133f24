use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};

use genbern::bell::bell_closed;
use genbern::render::{self, BellEval, OutputFormat};
use genbern::verify::{self, VerifyOptions};
use genbern::{bern, bernoulli_number, parse_rational, BernResult, Method, Rational};

/// Exact generalized Bernoulli polynomials B_n^a(x), computed by three
/// independent methods that are machine-checked against each other.
#[derive(Parser)]
#[command(name = "genbern", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a single B_n^a(x)
    Bern {
        /// Polynomial index n >= 0
        #[arg(long)]
        n: u32,
        /// Order a (a = 0 only with --method series)
        #[arg(long)]
        a: u32,
        /// Evaluation strategy: bell, doublesum, or series
        #[arg(long, default_value = "doublesum", value_parser = parse_method)]
        method: Method,
        #[arg(long, default_value = "plain", value_parser = parse_format)]
        format: OutputFormat,
    },
    /// Table of B_n^a(x) for n = 0..=max-n
    Table {
        #[arg(long = "max-n")]
        max_n: u32,
        /// Order a >= 1
        #[arg(long)]
        a: u32,
        #[arg(long, default_value = "plain", value_parser = parse_format)]
        format: OutputFormat,
    },
    /// Bernoulli numbers B_0..B_max-n
    Bernoulli {
        #[arg(long = "max-n")]
        max_n: u32,
        #[arg(long, default_value = "plain", value_parser = parse_format)]
        format: OutputFormat,
    },
    /// Partial Bell polynomial B_{n,k} over the order-a coefficient sequence
    Bell {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Order a >= 1
        #[arg(long)]
        a: u32,
        /// Evaluate the polynomial at a rational point, e.g. --at-x -3/2
        #[arg(long = "at-x", value_parser = parse_rat, allow_hyphen_values = true)]
        at_x: Option<Rational>,
        #[arg(long, default_value = "plain", value_parser = parse_format)]
        format: OutputFormat,
    },
    /// Run the self-verification suite; exits 1 if any check fails
    Verify {
        #[arg(long = "max-n", default_value_t = 20)]
        max_n: u32,
        #[arg(long = "max-a", default_value_t = 4)]
        max_a: u32,
        /// Cap for the exponential partition-enumeration route
        #[arg(long = "enum-cap", default_value_t = 10)]
        enum_cap: u32,
        #[arg(long, default_value = "plain", value_parser = parse_format)]
        format: OutputFormat,
    },
}

fn parse_method(s: &str) -> Result<Method, String> {
    Method::from_str(s)
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    OutputFormat::from_str(s)
}

fn parse_rat(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn usage_error(flag: &str, message: &str) -> ExitCode {
    eprintln!("error: invalid value for {flag}: {message}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Bern { n, a, method, format } => {
            if a == 0 && method != Method::Series {
                return usage_error("--a", "a=0 requires --method series");
            }
            let result = bern(n, a, method).expect("validated above");
            println!("{}", render::render_bern(&result, format));
            ExitCode::SUCCESS
        }
        Command::Table { max_n, a, format } => {
            if a == 0 {
                return usage_error("--a", "table requires a >= 1");
            }
            let rows: Vec<BernResult> = (0..=max_n)
                .map(|n| bern(n, a, Method::DoubleSum).expect("a >= 1"))
                .collect();
            println!("{}", render::render_table(&rows, format));
            ExitCode::SUCCESS
        }
        Command::Bernoulli { max_n, format } => {
            let values: Vec<Rational> = (0..=max_n).map(bernoulli_number).collect();
            println!("{}", render::render_bernoulli(&values, format));
            ExitCode::SUCCESS
        }
        Command::Bell { n, k, a, at_x, format } => {
            if a == 0 {
                return usage_error("--a", "bell requires a >= 1");
            }
            let poly = bell_closed(n, k, a);
            let at = at_x.map(|x| {
                let value = poly.eval(&x);
                (x, value)
            });
            let eval = BellEval { n, k, a, poly, at };
            println!("{}", render::render_bell(&eval, format));
            ExitCode::SUCCESS
        }
        Command::Verify { max_n, max_a, enum_cap, format } => {
            let report = verify::run(&VerifyOptions { max_n, max_a, enum_cap });
            println!("{}", render::render_verify(&report, format));
            if report.overall {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
