//! Command-line surface: gate powers, adder evaluation, probability
//! surfaces, classifier train/classify/evaluate, and the Euler
//! fractionation demo.
//!
//! Exit codes: 0 success, 2 input error, 3 numerical validation failure.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fracgate::{
    adder_n_simulated, build_vocabulary, gate_power, project_to_su2, quat_to_su2, su2_to_quat,
    surface, train, AdderSpec, ClassifierModel, Corpus, GeneratorTag, ScoreMode, StateVector,
    Unitary2,
};
use fracgate_cli::{euler_demo, format_complex, format_matrix, parse_gate_spec};

const EXIT_INPUT: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;

#[derive(Parser)]
#[command(name = "fracgate", version, about = "Fractional single-qubit gate powers, CNOT adders, and a bag-of-words classifier")]
struct Cli {
    /// Digits printed after the decimal point.
    #[arg(long, global = true, default_value_t = 12)]
    precision: usize,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Seed for every sampling subcommand.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Raise a gate to a real exponent via its quaternion.
    Power(PowerArgs),
    /// Emit a CSV probability surface for a two-input adder.
    Surface(SurfaceArgs),
    /// Evaluate an adder circuit analytically and optionally by sampling.
    Adder(AdderArgs),
    /// Train a classifier model from a corpus file.
    Train(TrainArgs),
    /// Classify a phrase with a trained model.
    Classify(ClassifyArgs),
    /// Evaluate a trained model against a labeled corpus.
    Evaluate(EvaluateArgs),
    /// Compare Euler-angle fractionation of H against the quaternion root.
    EulerDemo,
}

#[derive(Args)]
struct PowerArgs {
    /// Gate name (X, Y, Z, H, I) or four comma-separated complex entries
    /// in row-major order, e.g. "0,1,1,0".
    #[arg(long)]
    gate: String,

    /// Real exponent e; the result is gate^e.
    #[arg(long, allow_hyphen_values = true)]
    exponent: f64,

    /// Multiply by the phase root so the result powers back to the gate
    /// exactly, not just up to phase.
    #[arg(long)]
    recover_phase: bool,

    /// Also enumerate all n branches of the n-th root.
    #[arg(long)]
    roots: Option<u32>,
}

#[derive(Args)]
struct SurfaceArgs {
    /// Generator pair, e.g. "x,x", "x,h", or "h,h".
    #[arg(long)]
    generators: String,

    /// Grid points per axis over [0, 2pi], endpoints included.
    #[arg(long)]
    resolution: usize,

    /// Output path for the CSV (falls back to --output, then stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AdderArgs {
    /// Comma-separated generator tags, one per summand, e.g. "x,x,h".
    #[arg(long)]
    generators: String,

    /// Comma-separated rotation angles, one per summand.
    #[arg(long, allow_hyphen_values = true)]
    angles: String,

    /// Interpret the angles as degrees instead of radians.
    #[arg(long)]
    degrees: bool,

    /// Also sample the sum qubit this many times.
    #[arg(long)]
    shots: Option<u64>,

    /// Sampling seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct TrainArgs {
    /// Training corpus: one `topic<TAB>phrase` per line.
    #[arg(long)]
    corpus: PathBuf,

    /// Where to write the model file.
    #[arg(long)]
    model: PathBuf,

    /// Rotation added per (word, topic) co-occurrence, in radians.
    #[arg(long, default_value_t = std::f64::consts::PI / 24.0)]
    increment: f64,

    /// Keep this many of the most salient words.
    #[arg(long, default_value_t = 9)]
    vocab_size: usize,

    /// Use an explicit vocabulary (one word per line) instead of the
    /// salience ranking.
    #[arg(long)]
    vocab_file: Option<PathBuf>,

    /// Fractional generator family: "x" or "h".
    #[arg(long, default_value = "x")]
    generator: String,

    /// Collapse repeated words within a phrase ("on", the default) or
    /// count every occurrence ("off").
    #[arg(long, default_value = "on")]
    dedupe: String,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    model: PathBuf,

    /// Phrase to classify.
    #[arg(long)]
    phrase: String,

    /// Score by sampling this many shots instead of analytically.
    #[arg(long)]
    shots: Option<u64>,

    #[arg(long, default_value = "on")]
    dedupe: String,
}

#[derive(Args)]
struct EvaluateArgs {
    #[arg(long)]
    model: PathBuf,

    /// Labeled test corpus.
    #[arg(long)]
    corpus: PathBuf,

    #[arg(long)]
    shots: Option<u64>,

    #[arg(long, default_value = "on")]
    dedupe: String,
}

/// Failures carrying the process exit code.
enum CmdError {
    Input(String),
    Numerical(String),
}

impl CmdError {
    fn code(&self) -> u8 {
        match self {
            Self::Input(_) => EXIT_INPUT,
            Self::Numerical(_) => EXIT_NUMERICAL,
        }
    }

    fn message(&self) -> &str {
        match self {
            Self::Input(m) | Self::Numerical(m) => m,
        }
    }
}

fn input_err<E: std::fmt::Display>(e: E) -> CmdError {
    CmdError::Input(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let precision = cli.precision;
    let result = match &cli.command {
        Command::Power(args) => cmd_power(args, precision),
        Command::Surface(args) => cmd_surface(args, precision),
        Command::Adder(args) => cmd_adder(args, precision, cli.seed),
        Command::Train(args) => cmd_train(args, precision),
        Command::Classify(args) => cmd_classify(args, precision, cli.seed),
        Command::Evaluate(args) => cmd_evaluate(args, precision, cli.seed),
        Command::EulerDemo => cmd_euler_demo(precision),
    };
    match result {
        Ok(text) => {
            let target = match &cli.command {
                Command::Surface(args) => args.out.clone().or(cli.output),
                _ => cli.output,
            };
            match write_output(target.as_deref(), &text) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("fracgate: {e}");
                    ExitCode::from(EXIT_INPUT)
                }
            }
        }
        Err(e) => {
            eprintln!("fracgate: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn write_output(path: Option<&std::path::Path>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())
        }
    }
}

fn cmd_power(args: &PowerArgs, precision: usize) -> Result<String, CmdError> {
    let gate = parse_gate_spec(&args.gate).map_err(CmdError::Input)?;
    if args.exponent == 0.0 || !args.exponent.is_finite() {
        return Err(CmdError::Input(format!(
            "exponent must be finite and nonzero, got {}",
            args.exponent
        )));
    }
    // gate^e is the k-th root with k = 1/e.
    let k = 1.0 / args.exponent;
    let result = gate_power(&gate, k, args.recover_phase).map_err(input_err)?;
    let mut out = format_matrix(&result, precision);

    if args.recover_phase {
        if let Some((p, q)) = small_rational(k) {
            let lhs = repeated_product(&result, p);
            let rhs = repeated_product(&gate, q);
            let deviation = lhs.max_abs_diff(&rhs);
            out.push_str(&format!(
                "selfcheck: max |B^{p} - A^{q}| = {deviation:.3e}\n"
            ));
            if deviation > 1e-9 {
                out.push_str("selfcheck failed\n");
                eprint!("{out}");
                return Err(CmdError::Numerical(format!(
                    "self-check deviation {deviation:.3e} exceeds 1e-9"
                )));
            }
        } else {
            out.push_str("selfcheck: skipped (root index has no small rational form)\n");
        }
    }

    if let Some(n) = args.roots {
        let (special, _) = project_to_su2(&gate);
        let q = su2_to_quat(&special.as_unitary()).map_err(input_err)?;
        let branches = q.roots(n).map_err(input_err)?;
        for (m, root) in branches.iter().enumerate() {
            out.push_str(&format!("root branch {m}:\n"));
            out.push_str(&format_matrix(&quat_to_su2(*root).as_unitary(), precision));
        }
    }
    Ok(out)
}

/// Matches `k` to a small fraction p/q with q <= 64, within 1e-9. The
/// self-check B^p = A^q only needs integer matrix powers.
fn small_rational(k: f64) -> Option<(u32, u32)> {
    if k <= 0.0 {
        return None;
    }
    for q in 1..=64u32 {
        let p = (k * f64::from(q)).round();
        if (1.0..=1e6).contains(&p) && (k - p / f64::from(q)).abs() < 1e-9 {
            return Some((p as u32, q));
        }
    }
    None
}

fn repeated_product(u: &Unitary2, times: u32) -> Unitary2 {
    let mut acc = Unitary2::identity();
    for _ in 0..times {
        acc = u.mul(&acc);
    }
    acc
}

fn parse_generator_list(text: &str) -> Result<Vec<GeneratorTag>, CmdError> {
    text.split(',')
        .map(|t| GeneratorTag::parse(t).map_err(input_err))
        .collect()
}

fn cmd_surface(args: &SurfaceArgs, precision: usize) -> Result<String, CmdError> {
    let tags = parse_generator_list(&args.generators)?;
    if tags.len() != 2 {
        return Err(CmdError::Input(format!(
            "surface needs exactly two generators, got {}",
            tags.len()
        )));
    }
    let grid = surface(tags[0], tags[1], args.resolution).map_err(input_err)?;
    Ok(grid.to_csv(precision))
}

fn cmd_adder(args: &AdderArgs, precision: usize, seed: u64) -> Result<String, CmdError> {
    let tags = parse_generator_list(&args.generators)?;
    let angles: Vec<f64> = args
        .angles
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| CmdError::Input(format!("bad angle {t:?}")))
        })
        .collect::<Result<_, _>>()?;
    if tags.len() != angles.len() {
        return Err(CmdError::Input(format!(
            "{} generators but {} angles",
            tags.len(),
            angles.len()
        )));
    }
    let scale = if args.degrees {
        std::f64::consts::PI / 180.0
    } else {
        1.0
    };
    let pairs: Vec<(GeneratorTag, f64)> = tags
        .into_iter()
        .zip(angles.iter().map(|a| a * scale))
        .collect();
    let spec = AdderSpec::from_angles(&pairs).map_err(input_err)?;
    let p = adder_n_simulated(&spec).map_err(input_err)?;
    let mut out = format!("p_one={:.p$}\n", p, p = precision);

    if let Some(shots) = args.shots {
        let n = spec.inputs().len();
        let mut state = StateVector::new(n + 1).map_err(input_err)?;
        for (i, g) in spec.inputs().iter().enumerate() {
            state.apply_1q(&g.gate().as_unitary(), i).map_err(input_err)?;
            state.apply_cnot(i, n).map_err(input_err)?;
        }
        let result = state.sample(n, shots, seed).map_err(input_err)?;
        out.push_str(&format!(
            "sampled_frequency={:.p$} shots={} seed={} rng={}\n",
            result.frequency_one(),
            result.shots,
            result.seed,
            result.rng_algorithm,
            p = precision
        ));
    }
    Ok(out)
}

fn parse_dedupe(text: &str) -> Result<bool, CmdError> {
    match text {
        "on" => Ok(true),
        "off" => Ok(false),
        other => Err(CmdError::Input(format!(
            "--dedupe must be \"on\" or \"off\", got {other:?}"
        ))),
    }
}

fn cmd_train(args: &TrainArgs, precision: usize) -> Result<String, CmdError> {
    let corpus = Corpus::load(&args.corpus).map_err(input_err)?;
    let generator = GeneratorTag::parse(&args.generator).map_err(input_err)?;
    let dedupe = parse_dedupe(&args.dedupe)?;
    let vocabulary = match &args.vocab_file {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(input_err)?;
            let words: Vec<String> = text
                .lines()
                .map(|l| l.trim().to_lowercase())
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .collect();
            if words.is_empty() {
                return Err(CmdError::Input(format!(
                    "vocabulary file {} has no words",
                    path.display()
                )));
            }
            words
        }
        None => build_vocabulary(&corpus, args.vocab_size).map_err(input_err)?,
    };
    let model = train(&corpus, args.increment, vocabulary, generator, dedupe)
        .map_err(input_err)?;
    model.save(&args.model).map_err(input_err)?;
    Ok(format!(
        "model written to {}\ntopics={}\nvocabulary={}\nincrement={:.p$}\ngenerator={}\n",
        args.model.display(),
        model.topics().join(","),
        model.vocabulary().join(","),
        model.increment(),
        model.generator().tag,
        p = precision
    ))
}

fn score_mode(shots: Option<u64>, seed: u64) -> ScoreMode {
    match shots {
        Some(shots) => ScoreMode::Sampled { shots, seed },
        None => ScoreMode::Analytic,
    }
}

fn cmd_classify(args: &ClassifyArgs, precision: usize, seed: u64) -> Result<String, CmdError> {
    let mut model = ClassifierModel::load(&args.model).map_err(input_err)?;
    model.set_dedupe(parse_dedupe(&args.dedupe)?);
    let words = fracgate::tokenize(&args.phrase);
    let result = model
        .classify(&words, score_mode(args.shots, seed))
        .map_err(input_err)?;
    let mut out = String::new();
    for (topic, score) in model.topics().iter().zip(&result.scores) {
        out.push_str(&format!("{topic}\t{:.p$}\n", score, p = precision));
    }
    out.push_str(&format!("chosen={}\ntie={}\n", result.chosen, result.tie));
    Ok(out)
}

fn cmd_evaluate(args: &EvaluateArgs, precision: usize, seed: u64) -> Result<String, CmdError> {
    let mut model = ClassifierModel::load(&args.model).map_err(input_err)?;
    model.set_dedupe(parse_dedupe(&args.dedupe)?);
    let corpus = Corpus::load(&args.corpus).map_err(input_err)?;
    let eval = model
        .evaluate(&corpus, score_mode(args.shots, seed))
        .map_err(input_err)?;
    Ok(eval.report(precision))
}

fn cmd_euler_demo(precision: usize) -> Result<String, CmdError> {
    let demo = euler_demo();
    let fmt_state = |s: [num_complex::Complex64; 2]| {
        format!(
            "({}, {})",
            format_complex(s[0], precision),
            format_complex(s[1], precision)
        )
    };
    let mut out = String::new();
    out.push_str(
        "Hadamard splits into a 90 deg Y rotation followed by a 180 deg X rotation,\n\
         but repeating tenth-size Euler steps ten times does not recover H:\n",
    );
    out.push_str(&format!("target H|0> = {}\n", fmt_state(demo.target)));
    for path in &demo.euler_paths {
        out.push_str(&format!(
            "euler [{}]^10 |0> = {}  overlap={:.p$}\n",
            path.label,
            fmt_state(path.state),
            path.overlap_with_target,
            p = precision
        ));
    }
    out.push_str(&format!(
        "quaternion tenth root: B^10 |0> = {}  overlap={:.p$}  max|B^10 - H|={:.3e}\n",
        fmt_state(demo.quaternion_state),
        demo.quaternion_overlap,
        demo.quaternion_deviation,
        p = precision
    ));
    if demo.quaternion_deviation > 1e-9 {
        return Err(CmdError::Numerical(format!(
            "quaternion tenth-root deviation {:.3e} exceeds 1e-9",
            demo.quaternion_deviation
        )));
    }
    Ok(out)
}
