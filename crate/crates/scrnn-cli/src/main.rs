//! Command-line front end: vocabulary building, corruption, training,
//! evaluation, correction, the encoder-variant experiment, and the gradient
//! check, as subcommands of one binary.
//!
//! Exit codes: 0 on success, 1 on runtime failure (one-line diagnostic on
//! stderr), 2 on bad flags.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use scrnn::corpus::{build_alphabet, build_vocabulary, Corpus, Dataset};
use scrnn::eval::{
    accuracy, baseline_correct, correct_sentence, error_analysis, variant_experiment,
    ExperimentData,
};
use scrnn::gradcheck;
use scrnn::noise::{corrupt_dataset_region, JumbleRegion, NoiseKind};
use scrnn::trainer::{
    emit_learning_curve, load_model, save_model, train, TrainingConfig,
};

#[derive(Parser)]
#[command(
    name = "scrnn",
    about = "Robust recognition of words with jumbled, deleted, or inserted characters",
    version
)]
struct Cli {
    /// Worker threads for data-parallel sections (0 = auto).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the vocabulary and alphabet dumps from a tokenized corpus.
    BuildVocab(BuildVocabArgs),
    /// Corrupt a corpus and emit a TSV of corruption records.
    Corrupt(CorruptArgs),
    /// Train a model.
    Train(TrainArgs),
    /// Score a trained model on a corpus corrupted on the fly.
    Eval(EvalArgs),
    /// Run a model over (possibly noisy) text and print its word predictions.
    Correct(CorrectArgs),
    /// Train and score all four encoder variants under matching jumble
    /// conditions.
    Replicate(ReplicateArgs),
    /// Verify analytic gradients against central finite differences.
    Gradcheck(GradcheckArgs),
}

#[derive(Args)]
struct BuildVocabArgs {
    /// Tokenized corpus, one sentence per line.
    corpus: PathBuf,
    /// Vocabulary size including the UNK class [default: 10000].
    #[arg(long, default_value_t = 10_000)]
    size: usize,
    /// Output path for the vocabulary dump (first line is `<unk>`).
    #[arg(long)]
    vocab_out: PathBuf,
    /// Output path for the alphabet dump (one character per line).
    #[arg(long)]
    alphabet_out: Option<PathBuf>,
}

#[derive(Args)]
struct CorruptArgs {
    /// Tokenized corpus, one sentence per line.
    corpus: PathBuf,
    /// Noise kind: jumble, delete, or insert.
    #[arg(long)]
    kind: String,
    /// Corruption seed.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Jumble span: int, end, beg, or all [default: int].
    #[arg(long, default_value = "int")]
    region: String,
    /// Output TSV path; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Training knobs shared by `train` and `replicate`. Values left unset fall
/// back to the config file, then to the built-in defaults.
#[derive(Args, Clone)]
struct ConfigFlags {
    /// Flat key=value config file; flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    /// BPTT window length [default: 3].
    #[arg(long)]
    beta: Option<usize>,
    /// Sentences per mini-batch [default: 20].
    #[arg(long)]
    batch_size: Option<usize>,
    /// Training epochs [default: 5].
    #[arg(long)]
    epochs: Option<usize>,
    /// Hidden units [default: 650].
    #[arg(long)]
    hidden: Option<usize>,
    /// Vocabulary size including UNK [default: 10000].
    #[arg(long)]
    vocab_size: Option<usize>,
    /// Encoder variant: int, end, beg, or all [default: int].
    #[arg(long)]
    variant: Option<String>,
    /// Training noise: jumble, delete, or insert [default: jumble].
    #[arg(long)]
    noise: Option<String>,
    /// SGD learning rate [default: 0.5].
    #[arg(long)]
    learning_rate: Option<f64>,
    /// Global gradient-norm cap [default: 5].
    #[arg(long)]
    grad_clip: Option<f64>,
    /// Seed for initialization, shuffling, and corruption [default: 1].
    #[arg(long)]
    seed: Option<u64>,
    /// Mini-batches between dev evaluations [default: 100].
    #[arg(long)]
    eval_every: Option<usize>,
    /// Epochs at full learning rate before halving begins [default: 3].
    #[arg(long)]
    lr_halve_after: Option<usize>,
    /// Candidate-gate activation: tanh or sigmoid [default: tanh].
    #[arg(long)]
    candidate_activation: Option<String>,
}

impl ConfigFlags {
    fn resolve(&self) -> Result<TrainingConfig> {
        let mut config = TrainingConfig::default();
        if let Some(path) = &self.config {
            config
                .apply_file(path)
                .map_err(|e| anyhow::anyhow!("config file: {e}"))?;
        }
        let mut apply = |key: &str, value: Option<String>| -> Result<()> {
            if let Some(v) = value {
                config
                    .apply_kv(key, &v)
                    .map_err(|e| anyhow::anyhow!("flag --{}: {e}", key.replace('_', "-")))?;
            }
            Ok(())
        };
        apply("beta", self.beta.map(|v| v.to_string()))?;
        apply("batch_size", self.batch_size.map(|v| v.to_string()))?;
        apply("epochs", self.epochs.map(|v| v.to_string()))?;
        apply("hidden", self.hidden.map(|v| v.to_string()))?;
        apply("vocab_size", self.vocab_size.map(|v| v.to_string()))?;
        apply("variant", self.variant.clone())?;
        apply("noise", self.noise.clone())?;
        apply("learning_rate", self.learning_rate.map(|v| v.to_string()))?;
        apply("grad_clip", self.grad_clip.map(|v| v.to_string()))?;
        apply("seed", self.seed.map(|v| v.to_string()))?;
        apply("eval_every", self.eval_every.map(|v| v.to_string()))?;
        apply("lr_halve_after", self.lr_halve_after.map(|v| v.to_string()))?;
        apply("candidate_activation", self.candidate_activation.clone())?;
        Ok(config)
    }
}

#[derive(Args)]
struct TrainArgs {
    /// Training corpus.
    #[arg(long)]
    train: PathBuf,
    /// Dev corpus for learning-curve evaluations.
    #[arg(long)]
    dev: PathBuf,
    /// Output model path.
    #[arg(long)]
    model: PathBuf,
    /// Optional learning-curve CSV path.
    #[arg(long)]
    curve: Option<PathBuf>,
    #[command(flatten)]
    config: ConfigFlags,
}

#[derive(Args)]
struct EvalArgs {
    /// Trained model file.
    #[arg(long)]
    model: PathBuf,
    /// Gold test corpus, corrupted on the fly before scoring.
    #[arg(long)]
    test: PathBuf,
    /// Noise kind applied to the test corpus.
    #[arg(long, default_value = "jumble")]
    kind: String,
    /// Corruption seed.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Write the full report as JSON here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Confusion groups to print [default: 10].
    #[arg(long, default_value_t = 10)]
    top_errors: usize,
}

#[derive(Args)]
struct CorrectArgs {
    /// Trained model file.
    #[arg(long)]
    model: PathBuf,
    /// Input text, one tokenized sentence per line.
    input: PathBuf,
    /// Also print the edit-distance baseline's corrections to stderr.
    #[arg(long)]
    with_baseline: bool,
}

#[derive(Args)]
struct ReplicateArgs {
    #[arg(long)]
    train: PathBuf,
    #[arg(long)]
    dev: PathBuf,
    #[arg(long)]
    test: PathBuf,
    /// Output CSV path for the variant table.
    #[arg(long)]
    output: PathBuf,
    /// Comma-separated training seeds.
    #[arg(long, default_value = "1,2,3")]
    seeds: String,
    #[command(flatten)]
    config: ConfigFlags,
}

#[derive(Args)]
struct GradcheckArgs {
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Failure threshold on the max relative error.
    #[arg(long, default_value_t = 1e-4)]
    tolerance: f64,
}

fn read_corpus(path: &Path) -> Result<Corpus> {
    let corpus = Corpus::read_file(path).with_context(|| format!("reading {}", path.display()))?;
    if corpus.sentences.is_empty() {
        bail!("{} contains no sentences", path.display());
    }
    Ok(corpus)
}

fn parse_kind(s: &str) -> Result<NoiseKind> {
    match NoiseKind::parse(s) {
        Some(NoiseKind::None) | None => bail!("noise kind must be jumble, delete, or insert"),
        Some(k) => Ok(k),
    }
}

fn parse_region(s: &str) -> Result<JumbleRegion> {
    Ok(match s.to_ascii_lowercase().as_str() {
        "int" => JumbleRegion::Internal,
        "end" => JumbleRegion::InternalAndLast,
        "beg" => JumbleRegion::FirstAndInternal,
        "all" => JumbleRegion::All,
        _ => bail!("region must be int, end, beg, or all"),
    })
}

fn cmd_build_vocab(args: BuildVocabArgs) -> Result<()> {
    let corpus = read_corpus(&args.corpus)?;
    let vocab = build_vocabulary(&corpus, args.size)?;
    vocab.write_dump(&args.vocab_out)?;
    let alphabet = build_alphabet(&corpus)?;
    if let Some(path) = &args.alphabet_out {
        alphabet.write_dump(path)?;
    }
    println!(
        "vocabulary: {} classes (requested {}), coverage {:.4}",
        vocab.len(),
        args.size,
        vocab.coverage(&corpus)
    );
    println!("alphabet: {} slots including OTHER", alphabet.n());
    Ok(())
}

fn cmd_corrupt(args: CorruptArgs) -> Result<()> {
    let corpus = read_corpus(&args.corpus)?;
    let kind = parse_kind(&args.kind)?;
    let region = parse_region(&args.region)?;
    // Corruption does not need labels; a size-2 vocabulary satisfies the
    // dataset type.
    let vocab = build_vocabulary(&corpus, 2)?;
    let data = Dataset::label(&corpus, &vocab);
    let records = corrupt_dataset_region(&data, kind, region, args.seed)?;
    let mut out = String::from("original\tcorrupted\tkind\teligible\n");
    for sentence in &records {
        for r in sentence {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}",
                r.original,
                r.corrupted,
                r.kind.name(),
                r.eligible
            );
        }
    }
    match &args.output {
        Some(path) => fs::write(path, out).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{out}"),
    }
    Ok(())
}

fn cmd_train(args: TrainArgs) -> Result<()> {
    let config = args.config.resolve()?;
    let train_corpus = read_corpus(&args.train)?;
    let dev_corpus = read_corpus(&args.dev)?;
    let alphabet = build_alphabet(&train_corpus)?;
    let vocab = build_vocabulary(&train_corpus, config.vocab_size)?;
    let train_data = Dataset::label(&train_corpus, &vocab);
    let dev_data = Dataset::label(&dev_corpus, &vocab);
    eprintln!(
        "training: {} sentences, vocab {}, alphabet {}, input dim {}",
        train_data.sentences.len(),
        vocab.len(),
        alphabet.n(),
        scrnn::encoder::dimension(config.variant, alphabet.n())
    );
    let (ckpt, curve) = train(&train_data, &dev_data, &alphabet, &vocab, &config)?;
    save_model(&ckpt, &args.model)?;
    if let Some(path) = &args.curve {
        emit_learning_curve(&curve, path)?;
    }
    let last = curve.last();
    println!(
        "trained {} iterations; dev accuracy {}; model {}",
        ckpt.iteration,
        last.map_or("n/a".to_string(), |p| format!("{:.4}", p.dev_accuracy)),
        args.model.display()
    );
    Ok(())
}

fn cmd_eval(args: EvalArgs) -> Result<()> {
    let ckpt = load_model(&args.model)?;
    let kind = parse_kind(&args.kind)?;
    let gold_corpus = read_corpus(&args.test)?;
    let gold = Dataset::label(&gold_corpus, &ckpt.vocab);
    let region = JumbleRegion::for_variant(ckpt.variant());
    let records = corrupt_dataset_region(&gold, kind, region, args.seed)?;
    let report = accuracy(&ckpt, &records, &gold, kind)?;
    println!(
        "noise={} variant={} eligible={} correct={} accuracy={:.2}%",
        report.noise_kind.name(),
        report.variant.name(),
        report.n_eligible,
        report.n_correct,
        100.0 * report.accuracy
    );
    let confusions = error_analysis(&report, args.top_errors);
    if !confusions.is_empty() {
        println!("top confusions (gold -> predicted x count):");
        for c in &confusions {
            println!("  {} -> {} x{}", c.gold, c.predicted, c.count);
        }
    }
    if let Some(path) = &args.json {
        fs::write(path, serde_json::to_string_pretty(&report)?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn cmd_correct(args: CorrectArgs) -> Result<()> {
    let ckpt = load_model(&args.model)?;
    let corpus = read_corpus(&args.input)?;
    for sentence in &corpus.sentences {
        let corrected = correct_sentence(&ckpt, sentence);
        println!("{}", corrected.join(" "));
        if args.with_baseline {
            let baseline: Vec<String> = sentence
                .iter()
                .map(|t| baseline_correct(t, &ckpt.vocab))
                .collect();
            eprintln!("{}", baseline.join(" "));
        }
    }
    Ok(())
}

fn cmd_replicate(args: ReplicateArgs) -> Result<()> {
    let config = args.config.resolve()?;
    let seeds: Vec<u64> = args
        .seeds
        .split(',')
        .map(|s| s.trim().parse::<u64>().context("seeds must be integers"))
        .collect::<Result<_>>()?;
    if seeds.is_empty() {
        bail!("at least one seed is required");
    }
    let train_corpus = read_corpus(&args.train)?;
    let dev_corpus = read_corpus(&args.dev)?;
    let test_corpus = read_corpus(&args.test)?;
    let alphabet = build_alphabet(&train_corpus)?;
    let vocab = build_vocabulary(&train_corpus, config.vocab_size)?;
    let train_data = Dataset::label(&train_corpus, &vocab);
    let dev_data = Dataset::label(&dev_corpus, &vocab);
    let test_data = Dataset::label(&test_corpus, &vocab);
    let data = ExperimentData {
        train: &train_data,
        dev: &dev_data,
        test: &test_data,
        alphabet: &alphabet,
        vocab: &vocab,
    };
    let table = variant_experiment(&data, &config, &seeds)?;
    fs::write(&args.output, table.to_csv())
        .with_context(|| format!("writing {}", args.output.display()))?;
    for row in &table.rows {
        println!(
            "{:4}  accuracy {:.4}  n {}",
            row.variant.name(),
            row.accuracy,
            row.n
        );
    }
    for (i, p) in table.p_adjacent.iter().enumerate() {
        println!(
            "paired bootstrap p ({} vs {}): {:.4}",
            table.rows[i].variant.name(),
            table.rows[i + 1].variant.name(),
            p
        );
    }
    Ok(())
}

fn cmd_gradcheck(args: GradcheckArgs) -> Result<()> {
    let report = gradcheck::run_suite(args.seed);
    for (variant, check) in &report.per_variant {
        println!(
            "variant {:4}  max relative error {:.3e}",
            variant.name(),
            check.max_rel_err()
        );
    }
    let max = report.max_rel_err();
    println!("overall max relative error {max:.3e}");
    if max >= args.tolerance {
        bail!("gradient check failed: {max:.3e} >= {:.1e}", args.tolerance);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .context("initializing thread pool")?;
    }
    match cli.command {
        Command::BuildVocab(args) => cmd_build_vocab(args),
        Command::Corrupt(args) => cmd_corrupt(args),
        Command::Train(args) => cmd_train(args),
        Command::Eval(args) => cmd_eval(args),
        Command::Correct(args) => cmd_correct(args),
        Command::Replicate(args) => cmd_replicate(args),
        Command::Gradcheck(args) => cmd_gradcheck(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
