//! Mini-batch training with truncated backpropagation through time.
//!
//! Each epoch shuffles the sentences, corrupts every eligible token afresh
//! with the configured noise, and walks each sentence left to right from a
//! zero state. At every word position the summed cross-entropy of the last
//! `min(beta, position + 1)` steps is backpropagated with the entering state
//! held constant. Gradients are averaged per word over the mini-batch,
//! clipped to a global-norm cap, and applied by plain gradient descent. The
//! learning rate is halved each epoch once `lr_halve_after` epochs have run
//! (three by default).
//!
//! Per-sentence gradients inside a batch may be computed in parallel; they
//! are reduced in sentence order, so the result is independent of thread
//! count and bit-reproducible for a given seed.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::Rng as _;
use rayon::prelude::*;
use thiserror::Error;

use crate::corpus::{Alphabet, Dataset, Vocabulary, UNK_ID};
use crate::encoder::{dimension, encode, EncodingVariant};
use crate::network::{
    argmax, backward_window_into, init_params, logits, lstm_step, predict, CandidateActivation,
    Gradients, HiddenState, LstmParams, SoftmaxParams, StepTrace, TENSOR_NAMES,
};
use crate::noise::{corrupt_dataset_region, JumbleRegion, NoiseError, NoiseKind};
use crate::rng::{self, DOMAIN_DEV_NOISE, DOMAIN_NOISE, DOMAIN_SHUFFLE};

pub use crate::model_file::{load_model, save_model, Checkpoint, ModelFileError};

/// Parameter initialization half-width.
pub const INIT_SCALE: f64 = 0.1;

#[derive(Debug, Error)]
pub enum TrainError {
    #[error("training dataset is empty")]
    EmptyTrain,
    #[error("dev dataset is empty")]
    EmptyDev,
    #[error("bad config: {0}")]
    BadConfig(String),
    #[error("training diverged: non-finite loss at iteration {iteration}")]
    Diverged { iteration: u64 },
    #[error(transparent)]
    Noise(#[from] NoiseError),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// All knobs of a training run. Defaults:
/// window 3, batch 20, 5 epochs, 650 hidden units, 10k vocabulary, learning
/// rate 0.5, clip 5.0.
#[derive(Clone, Debug, PartialEq)]
pub struct TrainingConfig {
    /// BPTT window length.
    pub beta: usize,
    /// Sentences per mini-batch.
    pub batch_size: usize,
    pub epochs: usize,
    /// Hidden units.
    pub hidden: usize,
    /// Vocabulary classes including UNK.
    pub vocab_size: usize,
    pub variant: EncodingVariant,
    /// Corruption applied to eligible training tokens.
    pub noise: NoiseKind,
    pub learning_rate: f64,
    /// Global L2 norm cap for the averaged batch gradient.
    pub grad_clip: f64,
    pub seed: u64,
    /// Mini-batches between dev evaluations.
    pub eval_every: usize,
    /// Epochs trained at the full learning rate before halving begins.
    pub lr_halve_after: usize,
    /// Activation of the candidate gate.
    pub candidate_activation: CandidateActivation,
}

impl Default for TrainingConfig {
    fn default() -> Self {
        TrainingConfig {
            beta: 3,
            batch_size: 20,
            epochs: 5,
            hidden: 650,
            vocab_size: 10_000,
            variant: EncodingVariant::Int,
            noise: NoiseKind::Jumble,
            learning_rate: 0.5,
            grad_clip: 5.0,
            seed: 1,
            eval_every: 100,
            lr_halve_after: 3,
            candidate_activation: CandidateActivation::Tanh,
        }
    }
}

impl TrainingConfig {
    /// Applies one `key=value` pair. Keys mirror the CLI flags.
    pub fn apply_kv(&mut self, key: &str, value: &str) -> Result<(), String> {
        fn parse<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, String> {
            value
                .parse::<T>()
                .map_err(|_| format!("invalid value {value:?} for {key}"))
        }
        match key {
            "beta" => self.beta = parse(key, value)?,
            "batch_size" => self.batch_size = parse(key, value)?,
            "epochs" => self.epochs = parse(key, value)?,
            "hidden" => self.hidden = parse(key, value)?,
            "vocab_size" => self.vocab_size = parse(key, value)?,
            "variant" => {
                self.variant = EncodingVariant::parse(value)
                    .ok_or_else(|| format!("unknown variant {value:?}"))?
            }
            "noise" => {
                self.noise = NoiseKind::parse(value)
                    .ok_or_else(|| format!("unknown noise kind {value:?}"))?
            }
            "learning_rate" => self.learning_rate = parse(key, value)?,
            "grad_clip" => self.grad_clip = parse(key, value)?,
            "seed" => self.seed = parse(key, value)?,
            "eval_every" => self.eval_every = parse(key, value)?,
            "lr_halve_after" => self.lr_halve_after = parse(key, value)?,
            "candidate_activation" => {
                self.candidate_activation = CandidateActivation::parse(value)
                    .ok_or_else(|| format!("unknown candidate activation {value:?}"))?
            }
            _ => return Err(format!("unknown config key {key:?}")),
        }
        Ok(())
    }

    /// Applies a whole `key=value` text (one pair per line, `#` comments).
    pub fn apply_kv_text(&mut self, text: &str) -> Result<(), String> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key=value", lineno + 1))?;
            self.apply_kv(key.trim(), value.trim())?;
        }
        Ok(())
    }

    /// Reads a config file over the current values.
    pub fn apply_file(&mut self, path: &Path) -> Result<(), String> {
        let text =
            fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        self.apply_kv_text(&text)
    }

    /// Renders the config as the same `key=value` text the file loader
    /// accepts.
    pub fn to_kv_string(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "beta={}", self.beta);
        let _ = writeln!(s, "batch_size={}", self.batch_size);
        let _ = writeln!(s, "epochs={}", self.epochs);
        let _ = writeln!(s, "hidden={}", self.hidden);
        let _ = writeln!(s, "vocab_size={}", self.vocab_size);
        let _ = writeln!(s, "variant={}", self.variant.name());
        let _ = writeln!(s, "noise={}", self.noise.name());
        let _ = writeln!(s, "learning_rate={}", self.learning_rate);
        let _ = writeln!(s, "grad_clip={}", self.grad_clip);
        let _ = writeln!(s, "seed={}", self.seed);
        let _ = writeln!(s, "eval_every={}", self.eval_every);
        let _ = writeln!(s, "lr_halve_after={}", self.lr_halve_after);
        let _ = writeln!(
            s,
            "candidate_activation={}",
            self.candidate_activation.name()
        );
        s
    }

    fn validate(&self) -> Result<(), TrainError> {
        let positive = [
            ("beta", self.beta),
            ("batch_size", self.batch_size),
            ("epochs", self.epochs),
            ("hidden", self.hidden),
            ("eval_every", self.eval_every),
        ];
        for (name, v) in positive {
            if v == 0 {
                return Err(TrainError::BadConfig(format!("{name} must be positive")));
            }
        }
        if self.vocab_size < 2 {
            return Err(TrainError::BadConfig(
                "vocab_size must be at least 2".into(),
            ));
        }
        if !(self.learning_rate >= 0.0 && self.learning_rate.is_finite()) {
            return Err(TrainError::BadConfig("learning_rate must be finite".into()));
        }
        if !self.grad_clip.is_finite() || self.grad_clip <= 0.0 {
            return Err(TrainError::BadConfig("grad_clip must be positive".into()));
        }
        if self.noise == NoiseKind::None {
            return Err(TrainError::BadConfig(
                "training noise kind must be jumble, delete, or insert".into(),
            ));
        }
        Ok(())
    }
}

/// One dev evaluation during training.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LearningCurvePoint {
    /// Mini-batches seen so far.
    pub iteration: u64,
    /// Mean window cross-entropy since the previous point.
    pub train_loss: f64,
    /// Accuracy on the corrupted dev set (eligible, in-vocabulary tokens).
    pub dev_accuracy: f64,
}

/// Writes the learning curve as CSV with an
/// `iteration,train_loss,dev_accuracy` header.
pub fn emit_learning_curve(points: &[LearningCurvePoint], path: &Path) -> Result<(), TrainError> {
    let mut out = String::from("iteration,train_loss,dev_accuracy\n");
    for p in points {
        let _ = writeln!(out, "{},{},{}", p.iteration, p.train_loss, p.dev_accuracy);
    }
    fs::write(path, out).map_err(|source| TrainError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// A token prepared for the forward pass: encoded input, gold label, and
/// whether dev accuracy counts it.
struct PreparedToken {
    x: Vec<f32>,
    label: usize,
    scored: bool,
}

fn prepare_sentences(
    data: &Dataset,
    records: &[Vec<crate::noise::CorruptionRecord>],
    alphabet: &Alphabet,
    variant: EncodingVariant,
) -> Vec<Vec<PreparedToken>> {
    data.sentences
        .par_iter()
        .zip(records.par_iter())
        .map(|(sentence, recs)| {
            sentence
                .iter()
                .zip(recs.iter())
                .map(|(token, rec)| PreparedToken {
                    x: encode(&rec.corrupted, variant, alphabet)
                        .expect("corpus tokens are non-empty")
                        .to_reals::<f32>(),
                    label: token.label,
                    scored: rec.eligible && token.label != UNK_ID,
                })
                .collect()
        })
        .collect()
}

/// Forward over one prepared sentence, applying the windowed backward at
/// every position. Returns (summed window loss, number of windows).
fn sentence_gradient(
    lstm: &LstmParams<f32>,
    softmax: &SoftmaxParams<f32>,
    sentence: &[PreparedToken],
    beta: usize,
    grads: &mut Gradients<f32>,
) -> (f64, usize) {
    let mut state = HiddenState::zeros(lstm.hidden());
    let mut traces: Vec<StepTrace<f32>> = Vec::with_capacity(sentence.len());
    let mut probs: Vec<Vec<f32>> = Vec::with_capacity(sentence.len());
    let mut targets: Vec<usize> = Vec::with_capacity(sentence.len());
    let mut loss_sum = 0.0f64;
    let mut windows = 0usize;

    for token in sentence {
        let (next, trace) = lstm_step(lstm, &state, &token.x).expect("dims fixed per run");
        state = next;
        probs.push(predict(softmax, &trace.h));
        traces.push(trace);
        targets.push(token.label);

        let pos = traces.len() - 1;
        let start = pos + 1 - beta.min(pos + 1);
        let loss = backward_window_into(
            lstm,
            softmax,
            &traces[start..=pos],
            &targets[start..=pos],
            Some(&probs[start..=pos]),
            grads,
        )
        .expect("dims fixed per run");
        loss_sum += loss as f64;
        windows += 1;
    }
    (loss_sum, windows)
}

fn dev_accuracy(
    lstm: &LstmParams<f32>,
    softmax: &SoftmaxParams<f32>,
    dev: &[Vec<PreparedToken>],
) -> f64 {
    let (correct, scored) = dev
        .par_iter()
        .map(|sentence| {
            let mut state = HiddenState::zeros(lstm.hidden());
            let mut correct = 0usize;
            let mut scored = 0usize;
            for token in sentence {
                let (next, _) = lstm_step(lstm, &state, &token.x).expect("dims fixed");
                state = next;
                if token.scored {
                    scored += 1;
                    if argmax(&logits(softmax, &state.h)) == token.label {
                        correct += 1;
                    }
                }
            }
            (correct, scored)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    if scored == 0 {
        0.0
    } else {
        correct as f64 / scored as f64
    }
}

/// Learning-rate schedule: full rate for the first `halve_after` epochs,
/// then halved each further epoch.
fn epoch_learning_rate(base: f64, epoch: usize, halve_after: usize) -> f64 {
    if epoch < halve_after {
        base
    } else {
        base * 0.5f64.powi((epoch - halve_after + 1) as i32)
    }
}

/// Trains a model. The alphabet and vocabulary must be prebuilt from the
/// training corpus; datasets must be labeled against that vocabulary.
pub fn train(
    train_data: &Dataset,
    dev_data: &Dataset,
    alphabet: &Alphabet,
    vocab: &Vocabulary,
    config: &TrainingConfig,
) -> Result<(Checkpoint, Vec<LearningCurvePoint>), TrainError> {
    config.validate()?;
    if train_data.is_empty() {
        return Err(TrainError::EmptyTrain);
    }
    if dev_data.is_empty() {
        return Err(TrainError::EmptyDev);
    }

    let vocab_len = vocab.len();
    let input_dim = dimension(config.variant, alphabet.n());
    let region = JumbleRegion::for_variant(config.variant);

    let (mut lstm, mut softmax) =
        init_params::<f32>(config.seed, config.hidden, input_dim, vocab_len, INIT_SCALE);
    lstm.candidate_activation = config.candidate_activation;

    // Dev corruption is fixed for the whole run so the curve is stable.
    let dev_seed = rng::stream(config.seed, DOMAIN_DEV_NOISE, 0, 0).next_u64();
    let dev_records = corrupt_dataset_region(dev_data, config.noise, region, dev_seed)?;
    let dev_prepared = prepare_sentences(dev_data, &dev_records, alphabet, config.variant);

    let mut curve = Vec::new();
    let mut iteration = 0u64;
    let mut loss_acc = 0.0f64;
    let mut window_acc = 0usize;

    for epoch in 0..config.epochs {
        let epoch_seed = rng::stream(config.seed, DOMAIN_NOISE, 0x5EED, epoch as u64).next_u64();
        let records = corrupt_dataset_region(train_data, config.noise, region, epoch_seed)?;
        let prepared = prepare_sentences(train_data, &records, alphabet, config.variant);

        let mut order: Vec<usize> = (0..prepared.len()).collect();
        order.shuffle(&mut rng::stream(config.seed, DOMAIN_SHUFFLE, epoch as u64, 0));
        let lr = epoch_learning_rate(config.learning_rate, epoch, config.lr_halve_after);

        for batch in order.chunks(config.batch_size) {
            // Per-sentence gradients in parallel, reduced in sentence order.
            let parts: Vec<(Gradients<f32>, f64, usize)> = batch
                .par_iter()
                .map(|&si| {
                    let mut grads = Gradients::zeros_like(&lstm, &softmax);
                    let (loss, windows) =
                        sentence_gradient(&lstm, &softmax, &prepared[si], config.beta, &mut grads);
                    (grads, loss, windows)
                })
                .collect();

            let mut batch_grads = Gradients::zeros_like(&lstm, &softmax);
            let mut batch_loss = 0.0f64;
            let mut batch_windows = 0usize;
            for (grads, loss, windows) in &parts {
                batch_grads.add_assign(grads);
                batch_loss += loss;
                batch_windows += windows;
            }
            if batch_windows == 0 {
                continue;
            }

            iteration += 1;
            let mean_loss = batch_loss / batch_windows as f64;
            if !mean_loss.is_finite() {
                return Err(TrainError::Diverged { iteration });
            }
            loss_acc += batch_loss;
            window_acc += batch_windows;

            batch_grads.scale(1.0 / batch_windows as f32);
            batch_grads.clip_global_norm(config.grad_clip);
            let step = lr as f32;
            for t in 0..TENSOR_NAMES.len() {
                let g = batch_grads.tensor(t).to_vec();
                let dst = crate::network::param_tensor_mut(&mut lstm, &mut softmax, t);
                for (p, gv) in dst.iter_mut().zip(g) {
                    *p -= step * gv;
                }
            }

            if iteration.is_multiple_of(config.eval_every as u64) {
                let point = LearningCurvePoint {
                    iteration,
                    train_loss: loss_acc / window_acc.max(1) as f64,
                    dev_accuracy: dev_accuracy(&lstm, &softmax, &dev_prepared),
                };
                curve.push(point);
                loss_acc = 0.0;
                window_acc = 0;
            }
        }
    }

    // Snapshot the effective settings (the actual vocabulary can be smaller
    // than requested on tiny corpora).
    let mut snapshot = config.clone();
    snapshot.vocab_size = vocab_len;
    let checkpoint = Checkpoint {
        lstm,
        softmax,
        alphabet: alphabet.clone(),
        vocab: vocab.clone(),
        config: snapshot,
        iteration,
    };
    Ok((checkpoint, curve))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{build_alphabet, build_vocabulary, Corpus};
    use crate::model_file::to_bytes;

    fn tiny_setup(lines: &[&str], k: usize) -> (Dataset, Alphabet, Vocabulary) {
        let corpus = Corpus::from_lines(lines.iter().copied());
        let alphabet = build_alphabet(&corpus).unwrap();
        let vocab = build_vocabulary(&corpus, k).unwrap();
        let data = Dataset::label(&corpus, &vocab);
        (data, alphabet, vocab)
    }

    fn quick_config(hidden: usize, vocab: usize, epochs: usize) -> TrainingConfig {
        TrainingConfig {
            hidden,
            vocab_size: vocab,
            epochs,
            batch_size: 4,
            eval_every: 5,
            seed: 11,
            ..TrainingConfig::default()
        }
    }

    const LINES: [&str; 6] = [
        "the market closed higher today",
        "investors sold shares during the morning",
        "the report shows steady growth",
        "prices moved lower after the report",
        "traders expect another strong quarter",
        "the company raised its forecast again",
    ];

    #[test]
    fn training_is_bit_deterministic() {
        let (data, alphabet, vocab) = tiny_setup(&LINES, 30);
        let config = quick_config(8, vocab.len(), 2);
        let (a, curve_a) = train(&data, &data, &alphabet, &vocab, &config).unwrap();
        let (b, curve_b) = train(&data, &data, &alphabet, &vocab, &config).unwrap();
        assert_eq!(to_bytes(&a), to_bytes(&b));
        assert_eq!(curve_a, curve_b);
    }

    #[test]
    fn zero_learning_rate_freezes_parameters() {
        let (data, alphabet, vocab) = tiny_setup(&LINES, 30);
        let mut config = quick_config(8, vocab.len(), 1);
        config.learning_rate = 0.0;
        let (ckpt, _) = train(&data, &data, &alphabet, &vocab, &config).unwrap();
        let (init_lstm, init_sm) = init_params::<f32>(
            config.seed,
            config.hidden,
            dimension(config.variant, alphabet.n()),
            vocab.len(),
            INIT_SCALE,
        );
        assert_eq!(ckpt.lstm.w_i, init_lstm.w_i);
        assert_eq!(ckpt.lstm.b_f, init_lstm.b_f);
        assert_eq!(ckpt.softmax.w_h, init_sm.w_h);
    }

    #[test]
    fn loss_non_increasing_on_fixed_repeated_batch() {
        // Every token is too short to corrupt, so each epoch repeats the
        // identical mini-batch; with a small step the loss must never rise.
        let (data, alphabet, vocab) = tiny_setup(
            &["the cat sat on a mat", "we go to it now", "a dog ran by us"],
            40,
        );
        let mut config = quick_config(8, vocab.len(), 50);
        config.batch_size = 3;
        config.learning_rate = 0.05;
        config.lr_halve_after = 1000;
        config.eval_every = 1;
        let (_, curve) = train(&data, &data, &alphabet, &vocab, &config).unwrap();
        assert_eq!(curve.len(), 50);
        for w in curve.windows(2) {
            assert!(
                w[1].train_loss <= w[0].train_loss + 1e-9,
                "loss rose from {} to {}",
                w[0].train_loss,
                w[1].train_loss
            );
        }
        assert!(curve.last().unwrap().train_loss < curve[0].train_loss);
    }

    #[test]
    fn loss_decreases_on_small_corpus() {
        let (data, alphabet, vocab) = tiny_setup(&LINES[..4], 30);
        let mut config = quick_config(8, vocab.len(), 50);
        config.batch_size = 4;
        config.learning_rate = 0.05;
        config.eval_every = 1;
        let (_, curve) = train(&data, &data, &alphabet, &vocab, &config).unwrap();
        assert!(curve.len() >= 40);
        let losses: Vec<f64> = curve.iter().map(|p| p.train_loss).collect();
        let head: f64 = losses[..5].iter().sum::<f64>() / 5.0;
        let tail: f64 = losses[losses.len() - 5..].iter().sum::<f64>() / 5.0;
        assert!(tail < head, "loss did not decrease: head {head}, tail {tail}");
    }

    #[test]
    fn curve_iterations_strictly_increase() {
        let (data, alphabet, vocab) = tiny_setup(&LINES, 30);
        let config = quick_config(6, vocab.len(), 3);
        let (_, curve) = train(&data, &data, &alphabet, &vocab, &config).unwrap();
        assert!(!curve.is_empty());
        for w in curve.windows(2) {
            assert!(w[1].iteration > w[0].iteration);
        }
    }

    #[test]
    fn emit_curve_format() {
        let dir = std::env::temp_dir().join("scrnn-curve-test");
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("curve.csv");
        emit_learning_curve(&[], &path).unwrap();
        assert_eq!(
            fs::read_to_string(&path).unwrap(),
            "iteration,train_loss,dev_accuracy\n"
        );
        let points = [
            LearningCurvePoint {
                iteration: 5,
                train_loss: 2.5,
                dev_accuracy: 0.25,
            },
            LearningCurvePoint {
                iteration: 10,
                train_loss: 1.25,
                dev_accuracy: 0.5,
            },
        ];
        emit_learning_curve(&points, &path).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        assert_eq!(
            text,
            "iteration,train_loss,dev_accuracy\n5,2.5,0.25\n10,1.25,0.5\n"
        );
        fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn corruption_rerandomizes_across_epochs() {
        // Long tokens have hundreds of internal arrangements, so corrupted
        // forms should differ between epochs almost always.
        let corpus = Corpus::from_lines(std::iter::repeat_n(
            "somewhere beneath yesterday afternoon",
            400,
        ));
        let vocab = build_vocabulary(&corpus, 10).unwrap();
        let data = Dataset::label(&corpus, &vocab);
        let seed_a = rng::stream(9, DOMAIN_NOISE, 0x5EED, 0).next_u64();
        let seed_b = rng::stream(9, DOMAIN_NOISE, 0x5EED, 1).next_u64();
        let a = crate::noise::corrupt_dataset(&data, NoiseKind::Jumble, seed_a).unwrap();
        let b = crate::noise::corrupt_dataset(&data, NoiseKind::Jumble, seed_b).unwrap();
        let mut differing = 0usize;
        let mut total = 0usize;
        for (sa, sb) in a.iter().zip(&b) {
            for (ra, rb) in sa.iter().zip(sb) {
                total += 1;
                if ra.corrupted != rb.corrupted {
                    differing += 1;
                }
            }
        }
        let frac = differing as f64 / total as f64;
        assert!(frac > 0.95, "only {frac} of corruptions differ across epochs");
    }

    #[test]
    fn learning_rate_schedule_halves_after_third_epoch() {
        assert_eq!(epoch_learning_rate(0.5, 0, 3), 0.5);
        assert_eq!(epoch_learning_rate(0.5, 2, 3), 0.5);
        assert_eq!(epoch_learning_rate(0.5, 3, 3), 0.25);
        assert_eq!(epoch_learning_rate(0.5, 4, 3), 0.125);
        // A late halving start keeps the rate flat for long runs.
        assert_eq!(epoch_learning_rate(0.5, 300, 1000), 0.5);
    }

    #[test]
    fn config_kv_round_trip_and_overrides() {
        let mut config = TrainingConfig::default();
        config
            .apply_kv_text("beta=5\nhidden=32\nvariant=all\nnoise=delete\n# comment\n\nseed=9\n")
            .unwrap();
        assert_eq!(config.beta, 5);
        assert_eq!(config.hidden, 32);
        assert_eq!(config.variant, EncodingVariant::All);
        assert_eq!(config.noise, NoiseKind::Delete);
        assert_eq!(config.seed, 9);

        let mut round = TrainingConfig::default();
        round.apply_kv_text(&config.to_kv_string()).unwrap();
        assert_eq!(round, config);

        assert!(config.apply_kv("no_such_key", "1").is_err());
        assert!(config.apply_kv("beta", "x").is_err());
    }

    #[test]
    fn rejects_bad_configs() {
        let (data, alphabet, vocab) = tiny_setup(&LINES, 30);
        let mut config = quick_config(8, vocab.len(), 1);
        config.beta = 0;
        assert!(matches!(
            train(&data, &data, &alphabet, &vocab, &config),
            Err(TrainError::BadConfig(_))
        ));
        let mut config = quick_config(8, vocab.len(), 1);
        config.noise = NoiseKind::None;
        assert!(matches!(
            train(&data, &data, &alphabet, &vocab, &config),
            Err(TrainError::BadConfig(_))
        ));
        let config = quick_config(8, vocab.len(), 1);
        assert!(matches!(
            train(&Dataset::default(), &data, &alphabet, &vocab, &config),
            Err(TrainError::EmptyTrain)
        ));
    }
}
