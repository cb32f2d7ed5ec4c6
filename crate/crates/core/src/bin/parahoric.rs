use std::io::Write;
use std::process;

use clap::{Parser, Subcommand};

use parahoric::cli::{self, Format, Which};

/// Root-system, Weyl double coset and apartment checks for generalized
/// Steinberg representations.
///
/// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error,
/// 3 resource cap (group or subset sweep too large).
#[derive(Debug, Parser)]
#[command(name = "parahoric", version)]
struct Args {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Roots, marks, Weyl group order and alcove vertices.
    Info {
        /// Root system, e.g. A2, B3, A1xA2.
        spec: String,
    },
    /// Admissible subsets, with a witness root for each inadmissible one.
    Admissible { spec: String },
    /// Run verification sweeps over all subsets of simple roots.
    Verify {
        spec: String,
        #[arg(value_enum, default_value = "all")]
        which: Which,
    },
    /// Steinberg polynomial of a subset and its presentation data.
    Steinberg {
        spec: String,
        /// Subset of simple roots, e.g. "1,3", "{}" or "all".
        #[arg(long, short = 'I', default_value = "")]
        subset: String,
        /// Evaluate the polynomial at this q.
        #[arg(long)]
        q: Option<i64>,
    },
    /// Double cosets W_{I1}\W/W_{I2}.
    Cosets {
        spec: String,
        left: String,
        right: String,
    },
}

fn main() {
    let args = Args::parse();
    let result = match &args.command {
        Command::Info { spec } => cli::cmd_info(spec),
        Command::Admissible { spec } => cli::cmd_admissible(spec),
        Command::Verify { spec, which } => cli::cmd_verify(spec, *which),
        Command::Steinberg { spec, subset, q } => cli::cmd_steinberg(spec, subset, *q),
        Command::Cosets { spec, left, right } => cli::cmd_cosets(spec, left, right),
    };
    let code = match result {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(report.render(args.format).as_bytes());
            report.exit_code()
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    };
    process::exit(code as i32);
}
