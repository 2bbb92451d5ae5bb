//! Command-line front end: single-point evaluation and CSV tables of
//! the trigonometric sums and Clausen functions.

use clap::{Parser, Subcommand, ValueEnum};
use clausen::{clausen, clausen_cos, clausen_sin};

#[derive(Parser)]
#[command(
    name = "clausen",
    about = "Evaluate the sums C_j(x), S_j(x) and the Clausen functions Cl_j(x)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Sin,
    Cos,
    Clausen,
}

impl KindArg {
    fn eval(self, order: i32, x: f64) -> f64 {
        match self {
            KindArg::Sin => clausen_sin(order, x),
            KindArg::Cos => clausen_cos(order, x),
            KindArg::Clausen => clausen(order, x),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function value
    Eval {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Order j >= 1
        #[arg(long)]
        order: i32,
        /// Argument in radians
        #[arg(long)]
        x: f64,
    },
    /// Emit a CSV table of equally spaced values
    Table {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Order j >= 1
        #[arg(long)]
        order: i32,
        /// Lower bound of the x range
        #[arg(long)]
        from: f64,
        /// Upper bound of the x range (inclusive)
        #[arg(long)]
        to: f64,
        /// Number of steps; the table has steps+1 rows
        #[arg(long)]
        steps: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
}

/// Fixed 17-significant-digit plain-decimal formatting; round-trip
/// exact for doubles and byte-stable across platforms.
fn format_value(v: f64) -> String {
    if v.is_nan() {
        return "nan".to_string();
    }
    if v == 0.0 {
        return "0.0000000000000000".to_string();
    }
    let exp = v.abs().log10().floor() as i32;
    let decimals = (16 - exp).max(0) as usize;
    format!("{v:.decimals$}")
}

fn main() {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval { kind, order, x } => {
            println!("{}", format_value(kind.eval(order, x)));
        }
        Command::Table {
            kind,
            order,
            from,
            to,
            steps,
            format: TableFormat::Csv,
        } => {
            if !(from < to) || steps < 2 {
                eprintln!("error: table requires from < to and steps >= 2");
                std::process::exit(2);
            }
            println!("x,value");
            for i in 0..=steps {
                let x = from + (to - from) * i as f64 / steps as f64;
                println!("{},{}", format_value(x), format_value(kind.eval(order, x)));
            }
        }
    }
}
