use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use jonq_cli::batch::EntryDefaults;
use jonq_cli::commands::{
    cmd_batch, cmd_classify, cmd_iterate, cmd_mu, cmd_normal_form, cmd_ns_matrix,
};
use jonq_cli::{exit, Options, Outcome};
use jonq_core::mu::{Method, DEFAULT_KMAX};
use jonq_core::parser::MapSource;

/// Classify Jonquieres maps and compute their dynamical number of base-points.
///
/// Maps are written as fiber matrices "[[A, B],[C, D]]" with polynomial
/// entries in the base variable, meaning (x, y) -> ((A x + B)/(C x + D), h(y)).
/// Exit codes: 0 ok, 1 oracle or internal failure, 2 parse error, 3 domain
/// error, 4 formula/oracle mismatch.
#[derive(Parser, Debug)]
#[command(name = "jonq", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Base action "[[a, b],[c, d]]" with constant entries.
    #[arg(long, global = true)]
    base: Option<String>,
    /// Name of the base variable.
    #[arg(long, global = true, default_value = "y")]
    var: String,
    /// Number of iterates used by the degree-growth oracle.
    #[arg(long, global = true, default_value_t = DEFAULT_KMAX)]
    kmax: usize,
    #[arg(long, global = true, value_enum, default_value_t = MethodArg::Both)]
    method: MethodArg,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Batch: exit with the code of the first failing entry.
    #[arg(long, global = true, conflicts_with = "keep_going")]
    strict: bool,
    /// Batch: record failing entries and exit 0 (the default).
    #[arg(long, global = true)]
    keep_going: bool,
    /// Add wall-clock timings to reports.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum MethodArg {
    Formula,
    Oracle,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Formula => Method::Formula,
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full report: invariants, case, witnesses, mu by both methods.
    Classify { map: String },
    /// The dynamical number of base-points.
    Mu { map: String },
    /// Degrees and base-point counts of the first iterates.
    Iterate {
        map: String,
        #[arg(short = 'k', default_value_t = 10)]
        k: usize,
    },
    /// The conjugate model used by the classification.
    NormalForm { map: String },
    /// Neron-Severi pushforward matrix of a degree d Jonquieres map.
    NsMatrix {
        #[arg(short = 'd')]
        d: u32,
    },
    /// Reports for every map in FILE ("-" reads standard input).
    Batch {
        file: String,
        /// Worker threads; 1 runs sequentially, 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

fn read_input(file: &str) -> std::io::Result<String> {
    if file == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(file)
    }
}

fn run(cli: Cli) -> Outcome {
    let g = &cli.global;
    let source = |map: &str| MapSource {
        fiber: map.to_string(),
        base: g.base.clone(),
        var: g.var.clone(),
    };
    let opts = Options {
        method: g.method.into(),
        kmax: g.kmax,
        timings: g.timings,
    };
    match &cli.command {
        Command::Classify { map } => cmd_classify(&source(map), &opts, g.json),
        Command::Mu { map } => cmd_mu(&source(map), &opts, g.json),
        Command::Iterate { map, k } => cmd_iterate(&source(map), *k, g.json),
        Command::NormalForm { map } => cmd_normal_form(&source(map), g.json),
        Command::NsMatrix { d } => cmd_ns_matrix(*d, g.json),
        Command::Batch { file, jobs } => match read_input(file) {
            Ok(text) => {
                let defaults = EntryDefaults {
                    base: g.base.clone(),
                    var: g.var.clone(),
                };
                cmd_batch(&text, &defaults, &opts, *jobs, g.strict, g.json)
            }
            Err(e) => Outcome {
                stdout: String::new(),
                stderr: format!("error: cannot read {file}: {e}\n"),
                code: exit::FAILURE,
            },
        },
    }
}

fn main() -> ExitCode {
    let out = run(Cli::parse());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
