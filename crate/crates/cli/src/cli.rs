//! Argument definitions and the `solve`, `verify` and `bench` commands.

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use prefixdp_core::problems::{GLengthsSpec, MixedRadixSpec, ReservedSpec};
use prefixdp_core::{Algorithm, Codeword, SolveOptions, WeightSeq};

use crate::bench::{self, Distribution};
use crate::error::{CliError, EXIT_MISMATCH};
use crate::input;
use crate::problem::{self, Outcome, ProblemSpec};

#[derive(Parser, Debug)]
#[command(name = "prefixdp", version, about = "Optimal prefix-free codes by top-down dynamic programming")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build an optimal code and print it as JSON.
    Solve(SolveArgs),
    /// Compare the solver against the matching oracle.
    Verify(SolveArgs),
    /// Count DP cell updates over a range of sizes (CSV on stdout).
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProblemKind {
    Gmr,
    MixedRadix,
    ReservedGiven,
    ReservedG,
    OneEnded,
    Huffman,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmArg {
    Naive,
    Batched,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Naive => Algorithm::Naive,
            AlgorithmArg::Batched => Algorithm::Batched,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Cost,
    Code,
    Leafseq,
    Trace,
}

#[derive(Args, Debug, Clone)]
pub struct ProblemArgs {
    #[arg(long, value_enum)]
    pub problem: ProblemKind,
    /// Alphabet size (huffman, reserved-given, reserved-g); defaults to 2.
    #[arg(long)]
    pub radix: Option<usize>,
    /// Allowed codeword lengths for reserved-given, e.g. "1,3,6".
    #[arg(long)]
    pub lengths: Option<String>,
    /// Number of distinct codeword lengths for reserved-g.
    #[arg(long)]
    pub g: Option<usize>,
    /// GMR levels: "binary", a file, or inline "2:1,3:1" / JSON [[2,1],[3,1]].
    #[arg(long)]
    pub spec: Option<String>,
    /// Mixed-radix arities, e.g. "2,3"; the last one repeats.
    #[arg(long)]
    pub arities: Option<String>,
}

impl ProblemArgs {
    /// The problem for `n` weights; rejects flags the problem does not use.
    pub fn build(&self, n: usize) -> Result<ProblemSpec, CliError> {
        let kind = self.problem;
        let allowed: &[&str] = match kind {
            ProblemKind::Gmr => &["spec"],
            ProblemKind::MixedRadix => &["arities"],
            ProblemKind::ReservedGiven => &["radix", "lengths"],
            ProblemKind::ReservedG => &["radix", "g"],
            ProblemKind::OneEnded => &[],
            ProblemKind::Huffman => &["radix"],
        };
        let given = [
            ("radix", self.radix.is_some()),
            ("lengths", self.lengths.is_some()),
            ("g", self.g.is_some()),
            ("spec", self.spec.is_some()),
            ("arities", self.arities.is_some()),
        ];
        for (flag, set) in given {
            if set && !allowed.contains(&flag) {
                let name = kind.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default();
                return Err(CliError::usage(format!("--{flag} does not apply to --problem {name}")));
            }
        }
        let radix = self.radix.unwrap_or(2);
        let missing = |flag: &str| CliError::usage(format!("--{flag} is required for this problem"));
        Ok(match kind {
            ProblemKind::Gmr => ProblemSpec::Gmr(input::parse_level_spec(self.spec.as_deref().unwrap_or("binary"), n)?),
            ProblemKind::MixedRadix => {
                let arities = input::parse_list(self.arities.as_deref().ok_or_else(|| missing("arities"))?, "arity")?;
                ProblemSpec::MixedRadix(MixedRadixSpec::new(arities)?)
            }
            ProblemKind::ReservedGiven => {
                let lengths = input::parse_list(self.lengths.as_deref().ok_or_else(|| missing("lengths"))?, "length")?;
                ProblemSpec::ReservedGiven(ReservedSpec::new(radix, lengths)?)
            }
            ProblemKind::ReservedG => ProblemSpec::ReservedG(GLengthsSpec::new(radix, self.g.ok_or_else(|| missing("g"))?)?),
            ProblemKind::OneEnded => ProblemSpec::OneEnded,
            ProblemKind::Huffman => {
                if radix < 2 {
                    return Err(CliError::usage("radix must be at least 2"));
                }
                ProblemSpec::Huffman(radix)
            }
        })
    }
}

#[derive(Args, Debug, Clone)]
pub struct SolveArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long, value_enum, default_value = "batched")]
    pub algorithm: AlgorithmArg,
    /// Inline weights, e.g. "3 2 1 1" or "[3,2,1,1]".
    #[arg(long, conflicts_with = "weights_file", required_unless_present = "weights_file")]
    pub weights: Option<String>,
    /// Weights file: one integer per line, or a JSON array; "-" reads stdin.
    #[arg(long)]
    pub weights_file: Option<String>,
    #[arg(long, value_enum, default_value = "code")]
    pub output: OutputMode,
    /// Deepest tree level the DP may use.
    #[arg(long)]
    pub max_level: Option<usize>,
    /// Leave out the elapsed time so identical runs print identical bytes.
    #[arg(long)]
    pub stable: bool,
}

impl SolveArgs {
    fn weights(&self) -> Result<Vec<u64>, CliError> {
        match (&self.weights, &self.weights_file) {
            (Some(w), _) => input::parse_weights(w),
            (None, Some(path)) => input::read_weights_file(path),
            (None, None) => Err(CliError::usage("--weights or --weights-file is required")),
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct BenchArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Comma-separated algorithms to run.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "naive,batched")]
    pub algorithms: Vec<AlgorithmArg>,
    /// Comma-separated instance sizes.
    #[arg(long, value_delimiter = ',', default_value = "50,100,200,400")]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    pub reps: usize,
    #[arg(long, value_enum, default_value = "uniform")]
    pub distribution: Distribution,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Serialize)]
struct SolveReport<'a> {
    problem: &'a str,
    n: usize,
    cost: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    lengths: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    codewords: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    leaf_sequence: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    expansion: Option<Vec<[usize; 2]>>,
    algorithm: &'a str,
    cells_updated: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    problem: &'a str,
    n: usize,
    algorithm: &'a str,
    solver_cost: u64,
    oracle: &'a str,
    oracle_cost: u64,
    agree: bool,
}

/// Writes a codeword: digits for alphabets up to 10, base-36 characters up
/// to 36, dot-separated numbers beyond.
pub fn render_codeword(word: &Codeword, alphabet: usize) -> String {
    if alphabet <= 36 {
        word.iter().map(|&s| char::from_digit(s as u32, 36).expect("symbol below 36")).collect()
    } else {
        word.iter().map(usize::to_string).collect::<Vec<_>>().join(".")
    }
}

/// Runs a command, writing results to `out`. Returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Solve(args) => solve(&args, out),
        Command::Verify(args) => verify(&args, out),
        Command::Bench(args) => bench_cmd(&args, out),
    }
}

fn io(e: std::io::Error) -> CliError {
    CliError::usage(format!("write failed: {e}"))
}

fn solve(args: &SolveArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let w = WeightSeq::new(&args.weights()?)?;
    let spec = args.problem.build(w.n())?;
    let algorithm = Algorithm::from(args.algorithm);
    let keep_tables = args.output != OutputMode::Cost || matches!(spec, ProblemSpec::OneEnded);
    let start = Instant::now();
    let o: Outcome = problem::solve(&spec, &w, SolveOptions { algorithm, max_level: args.max_level, keep_tables })?;
    let elapsed = start.elapsed().as_secs_f64() * 1e3;

    let mode = args.output;
    let book = o.codebook.as_ref().filter(|_| mode != OutputMode::Cost);
    let lengths = book.map(|b| w.to_caller_order(&b.depths));
    let codewords = book.filter(|_| matches!(mode, OutputMode::Code | OutputMode::Trace)).map(|b| {
        w.to_caller_order(&b.words).iter().map(|c| render_codeword(c, spec.alphabet())).collect()
    });
    let leaf_sequence = o
        .leaves
        .as_ref()
        .filter(|_| matches!(mode, OutputMode::Leafseq | OutputMode::Trace))
        .map(|l| l.counts().to_vec());
    let expansion = (mode == OutputMode::Trace && !o.expansion.is_empty())
        .then(|| o.expansion.iter().map(|s| [s.m, s.b]).collect());
    let report = SolveReport {
        problem: spec.name(),
        n: w.n(),
        cost: o.cost,
        lengths,
        codewords,
        leaf_sequence,
        expansion,
        algorithm: bench::algorithm_name(algorithm),
        cells_updated: o.cells_updated,
        elapsed_ms: (!args.stable).then_some(elapsed),
    };
    writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("plain data serializes")).map_err(io)?;
    Ok(0)
}

fn verify(args: &SolveArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let w = WeightSeq::new(&args.weights()?)?;
    let spec = args.problem.build(w.n())?;
    let algorithm = Algorithm::from(args.algorithm);
    let (oracle, oracle_cost) = problem::oracle_cost(&spec, &w, args.max_level)?;
    let got = problem::solve_full(&spec, &w, algorithm, args.max_level)?;
    let agree = got.cost == oracle_cost;
    let report = VerifyReport {
        problem: spec.name(),
        n: w.n(),
        algorithm: bench::algorithm_name(algorithm),
        solver_cost: got.cost,
        oracle,
        oracle_cost,
        agree,
    };
    writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("plain data serializes")).map_err(io)?;
    if !agree {
        eprintln!("mismatch: solver {} vs {oracle} {oracle_cost}", got.cost);
        return Ok(EXIT_MISMATCH);
    }
    Ok(0)
}

fn bench_cmd(args: &BenchArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if args.sizes.is_empty() || args.sizes.contains(&0) {
        return Err(CliError::usage("--sizes must list positive sizes"));
    }
    let algorithms: Vec<Algorithm> = args.algorithms.iter().map(|&a| a.into()).collect();
    let problem_args = args.problem.clone();
    let build = move |n: usize| problem_args.build(n).map_err(|e| prefixdp_core::Error::InvalidInput(e.message));
    // surface flag errors with their own exit code before timing anything
    args.problem.build(args.sizes[0])?;
    let samples = bench::measure(&build, &args.sizes, &algorithms, args.distribution, args.seed, args.reps)?;
    let name = args.problem.build(args.sizes[0])?.name();
    write!(out, "{}", bench::csv(name, &samples, args.distribution, args.seed)).map_err(io)?;
    for &a in &algorithms {
        match bench::cells_slope(&samples, a) {
            Some(s) => eprintln!("{name} {}: log-log slope of cells_updated = {s:.3}", bench::algorithm_name(a)),
            None => eprintln!("{name} {}: slope needs at least two sizes", bench::algorithm_name(a)),
        }
    }
    Ok(0)
}
