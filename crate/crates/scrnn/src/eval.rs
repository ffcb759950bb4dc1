//! Evaluation: spelling-correction accuracy, the encoder-variant ordering
//! experiment, error analysis, and an edit-distance dictionary baseline.
//!
//! Accuracy counts only tokens that were eligible for corruption and whose
//! gold form is in the vocabulary; a prediction is correct when the predicted
//! word string equals the gold surface string. Gold-UNK tokens are excluded
//! from denominators.

use rand::Rng as _;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::corpus::{Dataset, Vocabulary, UNK_ID};
use crate::encoder::{encode, EncodingVariant};
use crate::model_file::Checkpoint;
use crate::network::{argmax, logits, lstm_step, HiddenState};
use crate::noise::{corrupt_dataset_region, CorruptionRecord, JumbleRegion, NoiseKind};
use crate::rng::{self, DOMAIN_BOOTSTRAP, DOMAIN_DEV_NOISE};
use crate::trainer::{train, TrainError, TrainingConfig};

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("corrupted input does not align with gold: {0}")]
    Misaligned(String),
    #[error(transparent)]
    Train(#[from] TrainError),
    #[error(transparent)]
    Noise(#[from] crate::noise::NoiseError),
}

/// One scored mistake.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ErrorCase {
    pub gold: String,
    pub predicted: String,
    pub corrupted: String,
    pub sentence: usize,
}

/// Accuracy over one corrupted test set.
#[derive(Clone, Debug, Serialize)]
pub struct EvalReport {
    pub noise_kind: NoiseKind,
    pub variant: EncodingVariant,
    pub n_eligible: usize,
    pub n_correct: usize,
    pub accuracy: f64,
    pub errors: Vec<ErrorCase>,
}

/// A grouped confusion from error analysis.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Confusion {
    pub gold: String,
    pub predicted: String,
    pub count: usize,
}

/// One row of the variant experiment.
#[derive(Clone, Debug, Serialize)]
pub struct VariantRow {
    pub variant: EncodingVariant,
    pub accuracy: f64,
    pub n: usize,
}

/// Per-variant accuracy under matching jumble conditions, with paired
/// bootstrap p-values between adjacent rows.
#[derive(Clone, Debug, Serialize)]
pub struct VariantTable {
    pub rows: Vec<VariantRow>,
    /// `p_adjacent[i]` estimates how often row `i` fails to beat row `i+1`
    /// under paired bootstrap resampling (small means reliably better).
    pub p_adjacent: Vec<f64>,
}

impl VariantTable {
    /// CSV with a `variant,accuracy,n` header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("variant,accuracy,n\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{}\n",
                row.variant.name(),
                row.accuracy,
                row.n
            ));
        }
        out
    }
}

/// Runs the model over one tokenized sentence and returns the argmax
/// vocabulary word at every position (UNK included).
pub fn correct_sentence(ckpt: &Checkpoint, tokens: &[String]) -> Vec<String> {
    predict_ids(ckpt, tokens)
        .into_iter()
        .map(|id| ckpt.vocab.word(id).to_string())
        .collect()
}

/// Argmax class ids for one sentence.
pub fn predict_ids(ckpt: &Checkpoint, tokens: &[String]) -> Vec<usize> {
    let mut state = HiddenState::zeros(ckpt.hidden());
    let mut out = Vec::with_capacity(tokens.len());
    for token in tokens {
        let x = encode(token, ckpt.variant(), &ckpt.alphabet)
            .expect("tokens are non-empty")
            .to_reals::<f32>();
        let (next, _) = lstm_step(&ckpt.lstm, &state, &x).expect("checkpoint dims consistent");
        state = next;
        out.push(argmax(&logits(&ckpt.softmax, &state.h)));
    }
    out
}

/// Pure scoring of already-computed predictions against corruption records
/// and gold labels. Factored out so the counting rules can be verified
/// against hand-scored fixtures.
pub fn score_predictions(
    vocab: &Vocabulary,
    predictions: &[Vec<usize>],
    corrupted: &[Vec<CorruptionRecord>],
    gold: &Dataset,
    noise_kind: NoiseKind,
    variant: EncodingVariant,
) -> Result<EvalReport, EvalError> {
    if predictions.len() != gold.sentences.len() || corrupted.len() != gold.sentences.len() {
        return Err(EvalError::Misaligned(format!(
            "{} prediction sentences, {} corrupted, {} gold",
            predictions.len(),
            corrupted.len(),
            gold.sentences.len()
        )));
    }
    let mut n_eligible = 0usize;
    let mut n_correct = 0usize;
    let mut errors = Vec::new();
    for (si, ((preds, recs), sentence)) in predictions
        .iter()
        .zip(corrupted)
        .zip(&gold.sentences)
        .enumerate()
    {
        if preds.len() != sentence.len() || recs.len() != sentence.len() {
            return Err(EvalError::Misaligned(format!(
                "sentence {si}: {} predictions, {} records, {} gold tokens",
                preds.len(),
                recs.len(),
                sentence.len()
            )));
        }
        for ((&pred, rec), token) in preds.iter().zip(recs).zip(sentence) {
            if rec.original != token.surface {
                return Err(EvalError::Misaligned(format!(
                    "sentence {si}: record for {:?} against gold {:?}",
                    rec.original, token.surface
                )));
            }
            if !rec.eligible || token.label == UNK_ID {
                continue;
            }
            n_eligible += 1;
            let predicted = vocab.word(pred);
            if predicted == token.surface {
                n_correct += 1;
            } else {
                errors.push(ErrorCase {
                    gold: token.surface.clone(),
                    predicted: predicted.to_string(),
                    corrupted: rec.corrupted.clone(),
                    sentence: si,
                });
            }
        }
    }
    Ok(EvalReport {
        noise_kind,
        variant,
        n_eligible,
        n_correct,
        accuracy: if n_eligible == 0 {
            0.0
        } else {
            n_correct as f64 / n_eligible as f64
        },
        errors,
    })
}

/// Scores the checkpoint on a corrupted test set aligned 1:1 with gold.
pub fn accuracy(
    ckpt: &Checkpoint,
    corrupted: &[Vec<CorruptionRecord>],
    gold: &Dataset,
    noise_kind: NoiseKind,
) -> Result<EvalReport, EvalError> {
    let predictions: Vec<Vec<usize>> = corrupted
        .par_iter()
        .map(|sentence| {
            let tokens: Vec<String> = sentence.iter().map(|r| r.corrupted.clone()).collect();
            predict_ids(ckpt, &tokens)
        })
        .collect();
    score_predictions(
        &ckpt.vocab,
        &predictions,
        corrupted,
        gold,
        noise_kind,
        ckpt.variant(),
    )
}

/// Groups error cases by (gold, predicted) pair, most frequent first, ties
/// broken lexicographically. At most `top_k` groups are returned.
pub fn error_analysis(report: &EvalReport, top_k: usize) -> Vec<Confusion> {
    let mut counts: std::collections::HashMap<(&str, &str), usize> =
        std::collections::HashMap::new();
    for e in &report.errors {
        *counts
            .entry((e.gold.as_str(), e.predicted.as_str()))
            .or_insert(0) += 1;
    }
    let mut grouped: Vec<Confusion> = counts
        .into_iter()
        .map(|((gold, predicted), count)| Confusion {
            gold: gold.to_string(),
            predicted: predicted.to_string(),
            count,
        })
        .collect();
    grouped.sort_by(|a, b| {
        b.count
            .cmp(&a.count)
            .then_with(|| a.gold.cmp(&b.gold))
            .then_with(|| a.predicted.cmp(&b.predicted))
    });
    grouped.truncate(top_k);
    grouped
}

/// Restricted Damerau-Levenshtein distance (optimal string alignment):
/// insertions, deletions, substitutions, and adjacent transpositions, each
/// costing one.
pub fn damerau_levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let (n, m) = (a.len(), b.len());
    if n == 0 {
        return m;
    }
    if m == 0 {
        return n;
    }
    // Three rolling rows of the DP table.
    let mut prev2: Vec<usize> = vec![0; m + 1];
    let mut prev: Vec<usize> = (0..=m).collect();
    let mut cur: Vec<usize> = vec![0; m + 1];
    for i in 1..=n {
        cur[0] = i;
        for j in 1..=m {
            let cost = usize::from(a[i - 1] != b[j - 1]);
            let mut best = (prev[j] + 1).min(cur[j - 1] + 1).min(prev[j - 1] + cost);
            if i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1] {
                best = best.min(prev2[j - 2] + 1);
            }
            cur[j] = best;
        }
        std::mem::swap(&mut prev2, &mut prev);
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[m]
}

/// Dictionary baseline: the in-vocabulary word closest to `token` by
/// restricted Damerau-Levenshtein distance. Ties break toward higher
/// training frequency, then lexicographically. An exact vocabulary match
/// returns immediately.
pub fn baseline_correct(token: &str, vocab: &Vocabulary) -> String {
    if let Some(id) = vocab.id(token) {
        if id != UNK_ID {
            return token.to_string();
        }
    }
    let mut best: Option<(usize, u64, &str)> = None;
    for word in &vocab.words()[1..] {
        let dist = damerau_levenshtein(token, word);
        let freq = vocab.frequency(word);
        let better = match &best {
            None => true,
            Some((bd, bf, bw)) => {
                dist < *bd || (dist == *bd && (freq > *bf || (freq == *bf && word.as_str() < *bw)))
            }
        };
        if better {
            best = Some((dist, freq, word));
        }
    }
    best.map(|(_, _, w)| w.to_string())
        .unwrap_or_else(|| vocab.word(UNK_ID).to_string())
}

/// One-sided paired bootstrap: the fraction of resamples in which system `a`
/// fails to outscore system `b`. Outcome slices must align item-for-item.
pub fn paired_bootstrap_p(a: &[bool], b: &[bool], resamples: usize, seed: u64) -> f64 {
    assert_eq!(a.len(), b.len(), "paired outcomes must align");
    if a.is_empty() {
        return 1.0;
    }
    use rand::RngExt;
    let mut rng = rng::stream(seed, DOMAIN_BOOTSTRAP, a.len() as u64, 0);
    let mut not_better = 0usize;
    for _ in 0..resamples {
        let mut ca = 0i64;
        let mut cb = 0i64;
        for _ in 0..a.len() {
            let i = rng.random_range(0..a.len());
            ca += a[i] as i64;
            cb += b[i] as i64;
        }
        if ca <= cb {
            not_better += 1;
        }
    }
    not_better as f64 / resamples as f64
}

/// Inputs shared by all trainings of the variant experiment.
pub struct ExperimentData<'a> {
    pub train: &'a Dataset,
    pub dev: &'a Dataset,
    pub test: &'a Dataset,
    pub alphabet: &'a crate::corpus::Alphabet,
    pub vocab: &'a Vocabulary,
}

/// Trains and tests one model per encoder variant and seed; each variant is
/// corrupted over exactly the span it collapses, at train and test time.
/// Accuracies are pooled over seeds; adjacent rows get paired bootstrap
/// p-values (10k resamples).
pub fn variant_experiment(
    data: &ExperimentData,
    base: &TrainingConfig,
    seeds: &[u64],
) -> Result<VariantTable, EvalError> {
    let mut rows = Vec::new();
    // Outcome vectors aligned across variants: (seed, sentence, token).
    let mut outcomes: Vec<Vec<bool>> = Vec::new();
    for variant in EncodingVariant::ALL_VARIANTS {
        let region = JumbleRegion::for_variant(variant);
        let mut correct = 0usize;
        let mut scored = 0usize;
        let mut outcome = Vec::new();
        for &seed in seeds {
            let mut config = base.clone();
            config.variant = variant;
            config.noise = NoiseKind::Jumble;
            config.seed = seed;
            let (ckpt, _) = train(data.train, data.dev, data.alphabet, data.vocab, &config)?;
            let test_seed = rng::stream(seed, DOMAIN_DEV_NOISE, 1, 0).next_u64();
            let records = corrupt_dataset_region(data.test, NoiseKind::Jumble, region, test_seed)?;
            let predictions: Vec<Vec<usize>> = records
                .par_iter()
                .map(|sentence| {
                    let tokens: Vec<String> =
                        sentence.iter().map(|r| r.corrupted.clone()).collect();
                    predict_ids(&ckpt, &tokens)
                })
                .collect();
            for (si, sentence) in data.test.sentences.iter().enumerate() {
                for (ti, token) in sentence.iter().enumerate() {
                    if records[si][ti].eligible && token.label != UNK_ID {
                        let ok = ckpt.vocab.word(predictions[si][ti]) == token.surface;
                        outcome.push(ok);
                        scored += 1;
                        correct += ok as usize;
                    }
                }
            }
        }
        rows.push(VariantRow {
            variant,
            accuracy: if scored == 0 {
                0.0
            } else {
                correct as f64 / scored as f64
            },
            n: scored,
        });
        outcomes.push(outcome);
    }
    let mut p_adjacent = Vec::new();
    for pair in outcomes.windows(2) {
        p_adjacent.push(paired_bootstrap_p(&pair[0], &pair[1], 10_000, base.seed));
    }
    Ok(VariantTable { rows, p_adjacent })
}
