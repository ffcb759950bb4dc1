//! Finite-difference verification of the analytic window gradient.
//!
//! The check perturbs every parameter entry by ±step, re-evaluates the
//! summed window cross-entropy by running the forward pass from the same
//! entering state, and compares the central difference against the entry
//! produced by `backward_window`. Everything runs in f64.

use rand::RngExt;

use crate::corpus::Alphabet;
use crate::encoder::{dimension, encode, EncodingVariant};
use crate::network::{
    backward_window, cross_entropy, init_params, lstm_step, param_tensor, param_tensor_mut,
    predict, Gradients, HiddenState, LstmParams, SoftmaxParams, TENSOR_NAMES,
};
use crate::rng::{self};

/// Default central-difference step.
pub const DEFAULT_STEP: f64 = 1e-5;

/// Worst relative error found for one parameter tensor.
#[derive(Clone, Debug)]
pub struct TensorReport {
    pub name: &'static str,
    pub entries: usize,
    pub max_rel_err: f64,
}

/// Outcome of one finite-difference sweep.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub tensors: Vec<TensorReport>,
}

impl CheckReport {
    pub fn max_rel_err(&self) -> f64 {
        self.tensors
            .iter()
            .map(|t| t.max_rel_err)
            .fold(0.0, f64::max)
    }
}

fn window_loss(
    params: &LstmParams<f64>,
    sm: &SoftmaxParams<f64>,
    entering: &HiddenState<f64>,
    xs: &[Vec<f64>],
    targets: &[usize],
) -> f64 {
    let mut state = entering.clone();
    let mut loss = 0.0;
    for (x, &target) in xs.iter().zip(targets) {
        let (next, _) = lstm_step(params, &state, x).expect("consistent dims");
        loss += cross_entropy(&predict(sm, &next.h), target);
        state = next;
    }
    loss
}

/// Compares `backward_window` against central finite differences for every
/// parameter entry. `entering` is the state at the start of the window; the
/// check holds it constant exactly as the truncated backward does.
pub fn check_window_gradients(
    mut params: LstmParams<f64>,
    mut sm: SoftmaxParams<f64>,
    entering: &HiddenState<f64>,
    xs: &[Vec<f64>],
    targets: &[usize],
    step: f64,
) -> CheckReport {
    let mut state = entering.clone();
    let mut traces = Vec::with_capacity(xs.len());
    for x in xs {
        let (next, trace) = lstm_step(&params, &state, x).expect("consistent dims");
        state = next;
        traces.push(trace);
    }
    let analytic: Gradients<f64> =
        backward_window(&params, &sm, &traces, targets).expect("consistent dims");

    let mut tensors = Vec::with_capacity(TENSOR_NAMES.len());
    for (t, &name) in TENSOR_NAMES.iter().enumerate() {
        let entries = param_tensor(&params, &sm, t).len();
        let mut max_rel = 0.0f64;
        for idx in 0..entries {
            let original = param_tensor(&params, &sm, t)[idx];
            param_tensor_mut(&mut params, &mut sm, t)[idx] = original + step;
            let plus = window_loss(&params, &sm, entering, xs, targets);
            param_tensor_mut(&mut params, &mut sm, t)[idx] = original - step;
            let minus = window_loss(&params, &sm, entering, xs, targets);
            param_tensor_mut(&mut params, &mut sm, t)[idx] = original;

            let numeric = (plus - minus) / (2.0 * step);
            let a = analytic.tensor(t)[idx];
            let denom = a.abs().max(numeric.abs());
            // Entries the loss provably never touches are zero on both
            // sides; skip the quotient for those.
            if denom > 1e-10 {
                max_rel = max_rel.max((a - numeric).abs() / denom);
            }
        }
        tensors.push(TensorReport {
            name,
            entries,
            max_rel_err: max_rel,
        });
    }
    CheckReport { tensors }
}

/// Result of the standard suite: one sweep per encoder variant on a tiny
/// network fed through the real encoder.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub per_variant: Vec<(EncodingVariant, CheckReport)>,
}

impl SuiteReport {
    pub fn max_rel_err(&self) -> f64 {
        self.per_variant
            .iter()
            .map(|(_, r)| r.max_rel_err())
            .fold(0.0, f64::max)
    }
}

/// Runs the finite-difference suite on a 5-slot alphabet, 8 hidden units, a
/// 12-word vocabulary, and a window of 3 encoded tokens, once per encoder
/// variant.
pub fn run_suite(seed: u64) -> SuiteReport {
    let alphabet = Alphabet::from_chars(vec!['a', 'b', 'c', 'd']);
    let n = alphabet.n();
    debug_assert_eq!(n, 5);
    let hidden = 8;
    let vocab = 12;
    let window = 3;

    let mut per_variant = Vec::new();
    for (vi, variant) in EncodingVariant::ALL_VARIANTS.into_iter().enumerate() {
        let input_dim = dimension(variant, n);
        let (params, sm) = init_params::<f64>(seed ^ vi as u64, hidden, input_dim, vocab, 0.4);
        let mut stream = rng::stream(seed, 0xF1D0, vi as u64, 0);

        // Random tokens over the alphabet (plus one char that exercises the
        // OTHER slot), encoded with the variant under test.
        let mut xs = Vec::with_capacity(window);
        let mut targets = Vec::with_capacity(window);
        for _ in 0..window {
            let len = stream.random_range(3..=8);
            let token: String = (0..len)
                .map(|_| {
                    if stream.random::<f64>() < 0.1 {
                        'z'
                    } else {
                        ['a', 'b', 'c', 'd'][stream.random_range(0..4)]
                    }
                })
                .collect();
            xs.push(encode(&token, variant, &alphabet).expect("non-empty").to_reals::<f64>());
            targets.push(stream.random_range(0..vocab));
        }

        // A nonzero entering state so truncation is actually exercised.
        let entering = HiddenState {
            h: (0..hidden).map(|_| stream.random::<f64>() - 0.5).collect(),
            c: (0..hidden).map(|_| stream.random::<f64>() - 0.5).collect(),
        };

        let report = check_window_gradients(params, sm, &entering, &xs, &targets, DEFAULT_STEP);
        per_variant.push((variant, report));
    }
    SuiteReport { per_variant }
}
