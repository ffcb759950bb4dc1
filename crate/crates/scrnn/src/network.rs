//! The recurrent network: a single LSTM cell feeding a softmax word
//! classifier, with exact analytic gradients over a truncated window.
//!
//! The forward pass per step is
//!
//! ```text
//! i = sigmoid(W_i [h_prev; x] + b_i)
//! f = sigmoid(W_f [h_prev; x] + b_f)
//! o = sigmoid(W_o [h_prev; x] + b_o)
//! g = act(W_g [h_prev; x] + b_g)        act = tanh (default) or sigmoid
//! c = f * c_prev + i * g
//! h = o * tanh(c)
//! ```
//!
//! and the output layer is a bias-free softmax over the vocabulary,
//! `softmax(W_h h)`. `backward_window` differentiates the summed
//! cross-entropy of the last few steps with respect to every parameter,
//! treating the state that entered the window as constant.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::math::{axpy, dot, Mat, Real};
use crate::rng::{self, DOMAIN_INIT};

/// Probabilities are clamped here before taking the log.
pub const PROB_FLOOR: f64 = 1e-30;

#[derive(Debug, Error)]
pub enum NetworkError {
    #[error("dimension mismatch in {what}: expected {expected}, got {got}")]
    DimMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("backward window is empty")]
    EmptyWindow,
}

/// Activation applied to the candidate gate `g`. The default is `tanh`; the
/// sigmoid reading is kept available as a configuration switch.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum CandidateActivation {
    #[default]
    Tanh,
    Sigmoid,
}

impl CandidateActivation {
    pub fn name(self) -> &'static str {
        match self {
            CandidateActivation::Tanh => "tanh",
            CandidateActivation::Sigmoid => "sigmoid",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tanh" => Some(CandidateActivation::Tanh),
            "sigmoid" => Some(CandidateActivation::Sigmoid),
            _ => None,
        }
    }

    fn apply<R: Real>(self, z: R) -> R {
        match self {
            CandidateActivation::Tanh => z.tanh(),
            CandidateActivation::Sigmoid => z.sigmoid(),
        }
    }

    /// Derivative in terms of the activation value `a`.
    fn derivative<R: Real>(self, a: R) -> R {
        match self {
            CandidateActivation::Tanh => R::ONE - a * a,
            CandidateActivation::Sigmoid => a * (R::ONE - a),
        }
    }
}

/// All LSTM cell weights. Each gate matrix has shape `hidden x (hidden +
/// input_dim)`, acting on the concatenation `[h_prev; x]`.
#[derive(Clone, Debug, PartialEq)]
pub struct LstmParams<R> {
    pub w_i: Mat<R>,
    pub w_f: Mat<R>,
    pub w_o: Mat<R>,
    pub w_g: Mat<R>,
    pub b_i: Vec<R>,
    pub b_f: Vec<R>,
    pub b_o: Vec<R>,
    pub b_g: Vec<R>,
    pub candidate_activation: CandidateActivation,
}

impl<R: Real> LstmParams<R> {
    pub fn zeros(hidden: usize, input_dim: usize) -> Self {
        LstmParams {
            w_i: Mat::zeros(hidden, hidden + input_dim),
            w_f: Mat::zeros(hidden, hidden + input_dim),
            w_o: Mat::zeros(hidden, hidden + input_dim),
            w_g: Mat::zeros(hidden, hidden + input_dim),
            b_i: vec![R::ZERO; hidden],
            b_f: vec![R::ZERO; hidden],
            b_o: vec![R::ZERO; hidden],
            b_g: vec![R::ZERO; hidden],
            candidate_activation: CandidateActivation::default(),
        }
    }

    pub fn hidden(&self) -> usize {
        self.w_i.rows()
    }

    pub fn input_dim(&self) -> usize {
        self.w_i.cols() - self.w_i.rows()
    }

    pub fn convert<T: Real>(&self) -> LstmParams<T> {
        LstmParams {
            w_i: self.w_i.convert(),
            w_f: self.w_f.convert(),
            w_o: self.w_o.convert(),
            w_g: self.w_g.convert(),
            b_i: self.b_i.iter().map(|v| T::from_f64(v.to_f64())).collect(),
            b_f: self.b_f.iter().map(|v| T::from_f64(v.to_f64())).collect(),
            b_o: self.b_o.iter().map(|v| T::from_f64(v.to_f64())).collect(),
            b_g: self.b_g.iter().map(|v| T::from_f64(v.to_f64())).collect(),
            candidate_activation: self.candidate_activation,
        }
    }
}

/// Output-layer weights, shape `vocab x hidden`. No bias term.
#[derive(Clone, Debug, PartialEq)]
pub struct SoftmaxParams<R> {
    pub w_h: Mat<R>,
}

impl<R: Real> SoftmaxParams<R> {
    pub fn zeros(vocab: usize, hidden: usize) -> Self {
        SoftmaxParams {
            w_h: Mat::zeros(vocab, hidden),
        }
    }

    pub fn vocab(&self) -> usize {
        self.w_h.rows()
    }

    pub fn convert<T: Real>(&self) -> SoftmaxParams<T> {
        SoftmaxParams {
            w_h: self.w_h.convert(),
        }
    }
}

/// Recurrent state. Initial state is all zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct HiddenState<R> {
    pub h: Vec<R>,
    pub c: Vec<R>,
}

impl<R: Real> HiddenState<R> {
    pub fn zeros(hidden: usize) -> Self {
        HiddenState {
            h: vec![R::ZERO; hidden],
            c: vec![R::ZERO; hidden],
        }
    }
}

/// Cached values from one forward step, enough to run the step backward.
#[derive(Clone, Debug)]
pub struct StepTrace<R> {
    pub x: Vec<R>,
    /// Indices and values of the nonzero entries of `x`; semi-character
    /// inputs are sparse and the gate updates only touch these columns.
    pub x_nnz: Vec<(u32, R)>,
    pub h_prev: Vec<R>,
    pub c_prev: Vec<R>,
    pub i: Vec<R>,
    pub f: Vec<R>,
    pub o: Vec<R>,
    pub g: Vec<R>,
    pub c: Vec<R>,
    pub h: Vec<R>,
}

/// Gradient accumulator with one tensor per parameter tensor.
#[derive(Clone, Debug)]
pub struct Gradients<R> {
    pub w_i: Mat<R>,
    pub w_f: Mat<R>,
    pub w_o: Mat<R>,
    pub w_g: Mat<R>,
    pub b_i: Vec<R>,
    pub b_f: Vec<R>,
    pub b_o: Vec<R>,
    pub b_g: Vec<R>,
    pub w_h: Mat<R>,
}

/// Serialization and gradient-walk order of the parameter tensors.
pub const TENSOR_NAMES: [&str; 9] = [
    "w_i", "w_f", "w_o", "w_g", "b_i", "b_f", "b_o", "b_g", "w_h",
];

impl<R: Real> Gradients<R> {
    pub fn zeros_like(params: &LstmParams<R>, sm: &SoftmaxParams<R>) -> Self {
        let (h, hd) = (params.hidden(), params.hidden() + params.input_dim());
        Gradients {
            w_i: Mat::zeros(h, hd),
            w_f: Mat::zeros(h, hd),
            w_o: Mat::zeros(h, hd),
            w_g: Mat::zeros(h, hd),
            b_i: vec![R::ZERO; h],
            b_f: vec![R::ZERO; h],
            b_o: vec![R::ZERO; h],
            b_g: vec![R::ZERO; h],
            w_h: Mat::zeros(sm.vocab(), h),
        }
    }

    pub fn reset(&mut self) {
        for t in 0..TENSOR_NAMES.len() {
            self.tensor_mut(t).iter_mut().for_each(|v| *v = R::ZERO);
        }
    }

    pub fn tensor(&self, idx: usize) -> &[R] {
        match idx {
            0 => self.w_i.as_slice(),
            1 => self.w_f.as_slice(),
            2 => self.w_o.as_slice(),
            3 => self.w_g.as_slice(),
            4 => &self.b_i,
            5 => &self.b_f,
            6 => &self.b_o,
            7 => &self.b_g,
            8 => self.w_h.as_slice(),
            _ => panic!("tensor index out of range"),
        }
    }

    pub fn tensor_mut(&mut self, idx: usize) -> &mut [R] {
        match idx {
            0 => self.w_i.as_mut_slice(),
            1 => self.w_f.as_mut_slice(),
            2 => self.w_o.as_mut_slice(),
            3 => self.w_g.as_mut_slice(),
            4 => &mut self.b_i,
            5 => &mut self.b_f,
            6 => &mut self.b_o,
            7 => &mut self.b_g,
            8 => self.w_h.as_mut_slice(),
            _ => panic!("tensor index out of range"),
        }
    }

    pub fn add_assign(&mut self, other: &Gradients<R>) {
        for t in 0..TENSOR_NAMES.len() {
            let src = other.tensor(t).to_vec();
            let dst = self.tensor_mut(t);
            for (d, s) in dst.iter_mut().zip(src) {
                *d += s;
            }
        }
    }

    pub fn scale(&mut self, factor: R) {
        for t in 0..TENSOR_NAMES.len() {
            self.tensor_mut(t).iter_mut().for_each(|v| *v *= factor);
        }
    }

    /// Global L2 norm across all tensors.
    pub fn global_norm(&self) -> f64 {
        let mut acc = 0.0f64;
        for t in 0..TENSOR_NAMES.len() {
            for v in self.tensor(t) {
                let x = v.to_f64();
                acc += x * x;
            }
        }
        acc.sqrt()
    }

    /// Scales the gradient down so its global norm is at most `max_norm`.
    pub fn clip_global_norm(&mut self, max_norm: f64) {
        let norm = self.global_norm();
        if norm > max_norm && norm > 0.0 {
            self.scale(R::from_f64(max_norm / norm));
        }
    }
}

/// Tensor access in the same fixed order for the parameters themselves
/// (used by the gradient checker and the model file writer).
pub fn param_tensor<'p, R: Real>(
    params: &'p LstmParams<R>,
    sm: &'p SoftmaxParams<R>,
    idx: usize,
) -> &'p [R] {
    match idx {
        0 => params.w_i.as_slice(),
        1 => params.w_f.as_slice(),
        2 => params.w_o.as_slice(),
        3 => params.w_g.as_slice(),
        4 => &params.b_i,
        5 => &params.b_f,
        6 => &params.b_o,
        7 => &params.b_g,
        8 => sm.w_h.as_slice(),
        _ => panic!("tensor index out of range"),
    }
}

pub fn param_tensor_mut<'p, R: Real>(
    params: &'p mut LstmParams<R>,
    sm: &'p mut SoftmaxParams<R>,
    idx: usize,
) -> &'p mut [R] {
    match idx {
        0 => params.w_i.as_mut_slice(),
        1 => params.w_f.as_mut_slice(),
        2 => params.w_o.as_mut_slice(),
        3 => params.w_g.as_mut_slice(),
        4 => &mut params.b_i,
        5 => &mut params.b_f,
        6 => &mut params.b_o,
        7 => &mut params.b_g,
        8 => sm.w_h.as_mut_slice(),
        _ => panic!("tensor index out of range"),
    }
}

fn nonzeros<R: Real>(x: &[R]) -> Vec<(u32, R)> {
    x.iter()
        .enumerate()
        .filter(|(_, v)| v.to_f64() != 0.0)
        .map(|(i, &v)| (i as u32, v))
        .collect()
}

/// Affine map of one gate: `W [h_prev; x] + b`, exploiting the sparsity of x.
fn gate_preactivation<R: Real>(
    w: &Mat<R>,
    b: &[R],
    h_prev: &[R],
    x_nnz: &[(u32, R)],
    out: &mut [R],
) {
    let hidden = h_prev.len();
    for r in 0..w.rows() {
        let row = w.row(r);
        let mut z = b[r] + dot(&row[..hidden], h_prev);
        for &(j, v) in x_nnz {
            z += row[hidden + j as usize] * v;
        }
        out[r] = z;
    }
}

/// One forward step. Returns the new state and the cache needed to run the
/// step backward.
pub fn lstm_step<R: Real>(
    params: &LstmParams<R>,
    state: &HiddenState<R>,
    x: &[R],
) -> Result<(HiddenState<R>, StepTrace<R>), NetworkError> {
    let hidden = params.hidden();
    let input_dim = params.input_dim();
    if x.len() != input_dim {
        return Err(NetworkError::DimMismatch {
            what: "input vector",
            expected: input_dim,
            got: x.len(),
        });
    }
    if state.h.len() != hidden {
        return Err(NetworkError::DimMismatch {
            what: "hidden state",
            expected: hidden,
            got: state.h.len(),
        });
    }

    let x_nnz = nonzeros(x);
    let mut i = vec![R::ZERO; hidden];
    let mut f = vec![R::ZERO; hidden];
    let mut o = vec![R::ZERO; hidden];
    let mut g = vec![R::ZERO; hidden];
    gate_preactivation(&params.w_i, &params.b_i, &state.h, &x_nnz, &mut i);
    gate_preactivation(&params.w_f, &params.b_f, &state.h, &x_nnz, &mut f);
    gate_preactivation(&params.w_o, &params.b_o, &state.h, &x_nnz, &mut o);
    gate_preactivation(&params.w_g, &params.b_g, &state.h, &x_nnz, &mut g);
    let act = params.candidate_activation;
    for r in 0..hidden {
        i[r] = i[r].sigmoid();
        f[r] = f[r].sigmoid();
        o[r] = o[r].sigmoid();
        g[r] = act.apply(g[r]);
    }

    let mut c = vec![R::ZERO; hidden];
    let mut h = vec![R::ZERO; hidden];
    for r in 0..hidden {
        c[r] = f[r] * state.c[r] + i[r] * g[r];
        h[r] = o[r] * c[r].tanh();
    }

    let next = HiddenState {
        h: h.clone(),
        c: c.clone(),
    };
    let trace = StepTrace {
        x: x.to_vec(),
        x_nnz,
        h_prev: state.h.clone(),
        c_prev: state.c.clone(),
        i,
        f,
        o,
        g,
        c,
        h,
    };
    Ok((next, trace))
}

/// Softmax over the vocabulary, computed with max-subtraction.
pub fn predict<R: Real>(sm: &SoftmaxParams<R>, h: &[R]) -> Vec<R> {
    let mut logits = logits(sm, h);
    let mut max = logits[0];
    for &v in &logits[1..] {
        max = max.maximum(v);
    }
    let mut sum = R::ZERO;
    for v in logits.iter_mut() {
        *v = (*v - max).exp();
        sum += *v;
    }
    for v in logits.iter_mut() {
        *v = *v / sum;
    }
    logits
}

/// Raw (unnormalized) class scores `W_h h`.
pub fn logits<R: Real>(sm: &SoftmaxParams<R>, h: &[R]) -> Vec<R> {
    (0..sm.w_h.rows()).map(|r| dot(sm.w_h.row(r), h)).collect()
}

/// Index of the largest entry; ties resolve to the lowest index.
pub fn argmax<R: Real>(values: &[R]) -> usize {
    let mut best = 0;
    for (idx, &v) in values.iter().enumerate().skip(1) {
        if v > values[best] {
            best = idx;
        }
    }
    best
}

/// Negative log-probability of the target class, with the probability
/// clamped at `PROB_FLOOR`.
pub fn cross_entropy<R: Real>(probs: &[R], target: usize) -> R {
    let p = probs[target].maximum(R::from_f64(PROB_FLOOR));
    -p.ln()
}

/// Exact gradient of the summed window cross-entropy with respect to every
/// parameter. `traces` are chronologically ordered; the state entering the
/// first trace is treated as constant (truncation).
pub fn backward_window<R: Real>(
    params: &LstmParams<R>,
    sm: &SoftmaxParams<R>,
    traces: &[StepTrace<R>],
    targets: &[usize],
) -> Result<Gradients<R>, NetworkError> {
    let mut grads = Gradients::zeros_like(params, sm);
    backward_window_into(params, sm, traces, targets, None, &mut grads)?;
    Ok(grads)
}

/// Accumulating form of [`backward_window`]: adds the window gradient into
/// `grads` and returns the summed window cross-entropy. `probs` optionally
/// supplies precomputed softmax outputs for each window position (they only
/// depend on the traces, so callers evaluating the loss anyway can reuse
/// them).
pub fn backward_window_into<R: Real>(
    params: &LstmParams<R>,
    sm: &SoftmaxParams<R>,
    traces: &[StepTrace<R>],
    targets: &[usize],
    probs: Option<&[Vec<R>]>,
    grads: &mut Gradients<R>,
) -> Result<R, NetworkError> {
    if traces.is_empty() {
        return Err(NetworkError::EmptyWindow);
    }
    if targets.len() != traces.len() {
        return Err(NetworkError::DimMismatch {
            what: "window targets",
            expected: traces.len(),
            got: targets.len(),
        });
    }
    let hidden = params.hidden();
    let vocab = sm.vocab();
    for trace in traces {
        if trace.h.len() != hidden {
            return Err(NetworkError::DimMismatch {
                what: "trace hidden size",
                expected: hidden,
                got: trace.h.len(),
            });
        }
        if trace.x.len() != params.input_dim() {
            return Err(NetworkError::DimMismatch {
                what: "trace input",
                expected: params.input_dim(),
                got: trace.x.len(),
            });
        }
    }
    if let Some(p) = probs {
        if p.len() != traces.len() {
            return Err(NetworkError::DimMismatch {
                what: "window probabilities",
                expected: traces.len(),
                got: p.len(),
            });
        }
    }

    let act = params.candidate_activation;
    let mut loss = R::ZERO;
    // Carried derivatives with respect to the state produced by step k-1.
    let mut dh_carry = vec![R::ZERO; hidden];
    let mut dc_carry = vec![R::ZERO; hidden];
    let mut dlogits = vec![R::ZERO; vocab];
    let mut dh = vec![R::ZERO; hidden];
    let mut dz = vec![R::ZERO; hidden];

    for k in (0..traces.len()).rev() {
        let trace = &traces[k];
        let target = targets[k];
        if target >= vocab {
            return Err(NetworkError::DimMismatch {
                what: "target class",
                expected: vocab,
                got: target,
            });
        }

        let p_owned;
        let p = match probs {
            Some(cached) => &cached[k],
            None => {
                p_owned = predict(sm, &trace.h);
                &p_owned
            }
        };
        loss += cross_entropy(p, target);

        // Softmax + cross-entropy backward: d logits = p - onehot(target).
        dlogits.copy_from_slice(p);
        dlogits[target] -= R::ONE;

        dh.copy_from_slice(&dh_carry);
        dh_carry.iter_mut().for_each(|v| *v = R::ZERO);
        for (r, &d) in dlogits.iter().enumerate() {
            if d.to_f64() != 0.0 {
                axpy(d, sm.w_h.row(r), &mut dh);
                axpy(d, &trace.h, grads.w_h.row_mut(r));
            }
        }

        // Through h = o * tanh(c).
        let mut dc = dc_carry.clone();
        dc_carry.iter_mut().for_each(|v| *v = R::ZERO);
        let mut do_gate = vec![R::ZERO; hidden];
        for r in 0..hidden {
            let tc = trace.c[r].tanh();
            do_gate[r] = dh[r] * tc;
            dc[r] += dh[r] * trace.o[r] * (R::ONE - tc * tc);
        }

        // Through c = f * c_prev + i * g, then each gate's affine map.
        // Gate order matches the tensor order: i, f, o, g.
        for (gate, w, db) in [
            (0usize, &params.w_i, &mut grads.b_i),
            (1, &params.w_f, &mut grads.b_f),
            (2, &params.w_o, &mut grads.b_o),
            (3, &params.w_g, &mut grads.b_g),
        ] {
            for r in 0..hidden {
                let d_act = match gate {
                    0 => dc[r] * trace.g[r],
                    1 => dc[r] * trace.c_prev[r],
                    2 => do_gate[r],
                    _ => dc[r] * trace.i[r],
                };
                dz[r] = match gate {
                    0 => d_act * trace.i[r] * (R::ONE - trace.i[r]),
                    1 => d_act * trace.f[r] * (R::ONE - trace.f[r]),
                    2 => d_act * trace.o[r] * (R::ONE - trace.o[r]),
                    _ => d_act * act.derivative(trace.g[r]),
                };
            }
            let dw = match gate {
                0 => &mut grads.w_i,
                1 => &mut grads.w_f,
                2 => &mut grads.w_o,
                _ => &mut grads.w_g,
            };
            for r in 0..hidden {
                let d = dz[r];
                if d.to_f64() == 0.0 {
                    continue;
                }
                db[r] += d;
                let row = dw.row_mut(r);
                axpy(d, &trace.h_prev, &mut row[..hidden]);
                for &(j, v) in &trace.x_nnz {
                    row[hidden + j as usize] += d * v;
                }
                // Backpropagate into h_prev through this gate's weights.
                axpy(d, &w.row(r)[..hidden], &mut dh_carry);
            }
        }

        for r in 0..hidden {
            dc_carry[r] = dc[r] * trace.f[r];
        }
        // At k == 0 the carries refer to the state entering the window and
        // are discarded: truncation treats that state as constant.
    }
    Ok(loss)
}

/// Draws all parameters uniformly from `[-scale, scale]`, then sets the
/// forget-gate bias to 1. Each tensor reads its own ChaCha12 stream keyed by
/// `(seed, tensor index)`; values are produced as 53-bit uniform doubles and
/// rounded to the target precision, so any precision sees the same draw
/// sequence.
pub fn init_params<R: Real>(
    seed: u64,
    hidden: usize,
    input_dim: usize,
    vocab: usize,
    scale: f64,
) -> (LstmParams<R>, SoftmaxParams<R>) {
    use rand::Rng;

    let mut params = LstmParams::zeros(hidden, input_dim);
    let mut sm = SoftmaxParams::zeros(vocab, hidden);
    for t in 0..TENSOR_NAMES.len() {
        let mut stream = rng::stream(seed, DOMAIN_INIT, t as u64, 0);
        for v in param_tensor_mut(&mut params, &mut sm, t) {
            // 53-bit mantissa uniform in [0, 1).
            let unit = (stream.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
            *v = R::from_f64((2.0 * unit - 1.0) * scale);
        }
    }
    params.b_f.iter_mut().for_each(|v| *v = R::ONE);
    (params, sm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny_zero_net(hidden: usize, input: usize, vocab: usize) -> (LstmParams<f64>, SoftmaxParams<f64>) {
        (LstmParams::zeros(hidden, input), SoftmaxParams::zeros(vocab, hidden))
    }

    #[test]
    fn zero_params_fixed_point() {
        let (params, _) = tiny_zero_net(4, 3, 5);
        let state = HiddenState::zeros(4);
        let x = vec![1.0, 0.0, 2.0];
        let (next, trace) = lstm_step(&params, &state, &x).unwrap();
        for r in 0..4 {
            assert_eq!(trace.i[r], 0.5);
            assert_eq!(trace.f[r], 0.5);
            assert_eq!(trace.o[r], 0.5);
            assert_eq!(trace.g[r], 0.0);
            assert_eq!(next.c[r], 0.0);
            assert_eq!(next.h[r], 0.0);
        }
    }

    #[test]
    fn scalar_step_matches_hand_computation() {
        // H = 1, D = 1 with hand-set parameters; the expected values are
        // evaluated with explicit formulas, independent of lstm_step.
        let mut params = LstmParams::<f64>::zeros(1, 1);
        params.w_i = Mat::from_vec(1, 2, vec![0.5, -0.3]);
        params.w_f = Mat::from_vec(1, 2, vec![-0.2, 0.4]);
        params.w_o = Mat::from_vec(1, 2, vec![0.3, 0.25]);
        params.w_g = Mat::from_vec(1, 2, vec![0.6, -0.5]);
        params.b_i = vec![0.1];
        params.b_f = vec![0.2];
        params.b_o = vec![-0.1];
        params.b_g = vec![0.05];
        let state = HiddenState {
            h: vec![0.2],
            c: vec![-0.4],
        };
        let x = [0.7];

        let sig = |z: f64| 1.0 / (1.0 + (-z).exp());
        let i = sig(0.5 * 0.2 + (-0.3) * 0.7 + 0.1);
        let f = sig(-0.2 * 0.2 + 0.4 * 0.7 + 0.2);
        let o = sig(0.3 * 0.2 + 0.25 * 0.7 + (-0.1));
        let g = (0.6 * 0.2 + (-0.5) * 0.7 + 0.05_f64).tanh();
        let c = f * (-0.4) + i * g;
        let h = o * c.tanh();

        let (next, trace) = lstm_step(&params, &state, &x).unwrap();
        assert!((trace.i[0] - i).abs() < 1e-12);
        assert!((trace.f[0] - f).abs() < 1e-12);
        assert!((trace.o[0] - o).abs() < 1e-12);
        assert!((trace.g[0] - g).abs() < 1e-12);
        assert!((next.c[0] - c).abs() < 1e-12);
        assert!((next.h[0] - h).abs() < 1e-12);
    }

    #[test]
    fn saturated_gates_carry_memory() {
        // b_f large positive and b_i large negative force f ~ 1, i ~ 0, so
        // the memory cell is carried unchanged across steps.
        let mut params = LstmParams::<f64>::zeros(2, 2);
        params.b_f = vec![100.0, 100.0];
        params.b_i = vec![-100.0, -100.0];
        let state = HiddenState {
            h: vec![0.0, 0.0],
            c: vec![0.7, -1.3],
        };
        let x = [0.5, 0.25];
        let (next, _) = lstm_step(&params, &state, &x).unwrap();
        assert!((next.c[0] - 0.7).abs() < 1e-12);
        assert!((next.c[1] + 1.3).abs() < 1e-12);
    }

    #[test]
    fn step_rejects_dim_mismatch() {
        let (params, _) = tiny_zero_net(4, 3, 5);
        let state = HiddenState::zeros(4);
        assert!(matches!(
            lstm_step(&params, &state, &[1.0, 2.0]),
            Err(NetworkError::DimMismatch { .. })
        ));
    }

    #[test]
    fn predict_uniform_for_zero_weights() {
        let sm = SoftmaxParams::<f64>::zeros(4, 3);
        let p = predict(&sm, &[0.3, -1.0, 2.0]);
        for v in &p {
            assert!((v - 0.25).abs() < 1e-12);
        }
        assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn predict_closed_form_two_classes() {
        // Logits (ln 3, 0) -> probabilities (0.75, 0.25).
        let mut sm = SoftmaxParams::<f64>::zeros(2, 1);
        sm.w_h = Mat::from_vec(2, 1, vec![3.0f64.ln(), 0.0]);
        let p = predict(&sm, &[1.0]);
        assert!((p[0] - 0.75).abs() < 1e-12);
        assert!((p[1] - 0.25).abs() < 1e-12);
    }

    #[test]
    fn predict_is_simplex_point_and_argmax_stable() {
        let mut sm = SoftmaxParams::<f64>::zeros(6, 4);
        for r in 0..6 {
            for c in 0..4 {
                sm.w_h.set(r, c, ((r * 7 + c * 3) % 11) as f64 - 5.0);
            }
        }
        let h = [1.5, -2.0, 0.5, 3.0];
        let p = predict(&sm, &h);
        assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(p.iter().all(|&v| v > 0.0));
        assert_eq!(argmax(&p), argmax(&logits(&sm, &h)));
        // Extreme hidden values: max-subtraction keeps everything finite and
        // normalized (tiny entries may underflow to zero).
        let extreme = [1000.0, -2000.0, 0.5, 3.0];
        let p = predict(&sm, &extreme);
        assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(p.iter().all(|&v| v.is_finite() && v >= 0.0));
        assert_eq!(argmax(&p), argmax(&logits(&sm, &extreme)));
    }

    #[test]
    fn argmax_breaks_ties_low() {
        assert_eq!(argmax(&[0.25f64, 0.25, 0.25, 0.25]), 0);
        assert_eq!(argmax(&[0.1f64, 0.4, 0.4, 0.1]), 1);
    }

    #[test]
    fn cross_entropy_values() {
        assert_eq!(cross_entropy(&[0.0f64, 1.0], 1), 0.0);
        let uniform = [0.25f64; 4];
        assert!((cross_entropy(&uniform, 2) - 4.0f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn cross_entropy_monotone_in_target_probability() {
        let mut last = f64::INFINITY;
        for p in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let probs = [p, 1.0 - p];
            let l = cross_entropy(&probs, 0);
            assert!(l < last);
            last = l;
        }
    }

    #[test]
    fn cross_entropy_clamps_zero_probability() {
        let l = cross_entropy(&[0.0f64, 1.0], 0);
        assert!(l.is_finite());
        assert!((l - (-PROB_FLOOR.ln())).abs() < 1e-9);
    }

    fn random_case(
        seed: u64,
        hidden: usize,
        input: usize,
        vocab: usize,
        window: usize,
    ) -> (
        LstmParams<f64>,
        SoftmaxParams<f64>,
        Vec<Vec<f64>>,
        Vec<usize>,
    ) {
        use rand::RngExt;
        let (params, sm) = init_params::<f64>(seed, hidden, input, vocab, 0.4);
        let mut stream = crate::rng::stream(seed, 77, 0, 0);
        let xs: Vec<Vec<f64>> = (0..window)
            .map(|_| {
                (0..input)
                    .map(|_| {
                        if stream.random::<f64>() < 0.4 {
                            stream.random_range(1..=2) as f64
                        } else {
                            0.0
                        }
                    })
                    .collect()
            })
            .collect();
        let targets: Vec<usize> = (0..window).map(|_| stream.random_range(0..vocab)).collect();
        (params, sm, xs, targets)
    }

    fn run_window(
        params: &LstmParams<f64>,
        _sm: &SoftmaxParams<f64>,
        xs: &[Vec<f64>],
    ) -> Vec<StepTrace<f64>> {
        let mut state = HiddenState::zeros(params.hidden());
        let mut traces = Vec::new();
        for x in xs {
            let (next, trace) = lstm_step(params, &state, x).unwrap();
            state = next;
            traces.push(trace);
        }
        traces
    }

    #[test]
    fn window_of_one_equals_single_step_backprop() {
        let (params, sm, xs, targets) = random_case(3, 5, 7, 6, 1);
        let traces = run_window(&params, &sm, &xs);
        let grads = backward_window(&params, &sm, &traces, &targets).unwrap();
        // Independent single-step backward for the softmax layer:
        // dW_h = (p - onehot) h^T.
        let p = predict(&sm, &traces[0].h);
        for (r, &pr) in p.iter().enumerate() {
            for c in 0..params.hidden() {
                let expect = (pr - if r == targets[0] { 1.0 } else { 0.0 }) * traces[0].h[c];
                assert!((grads.w_h.get(r, c) - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn cached_probabilities_do_not_change_gradient() {
        let (params, sm, xs, targets) = random_case(5, 4, 6, 5, 3);
        let traces = run_window(&params, &sm, &xs);
        let grads_plain = backward_window(&params, &sm, &traces, &targets).unwrap();
        let probs: Vec<Vec<f64>> = traces.iter().map(|t| predict(&sm, &t.h)).collect();
        let mut grads_cached = Gradients::zeros_like(&params, &sm);
        backward_window_into(&params, &sm, &traces, &targets, Some(&probs), &mut grads_cached)
            .unwrap();
        for t in 0..TENSOR_NAMES.len() {
            assert_eq!(grads_plain.tensor(t), grads_cached.tensor(t));
        }
    }

    #[test]
    fn gradient_additivity() {
        // Accumulating the same window twice doubles every entry: the
        // backward pass is linear in the loss.
        let (params, sm, xs, targets) = random_case(9, 4, 5, 6, 3);
        let traces = run_window(&params, &sm, &xs);
        let once = backward_window(&params, &sm, &traces, &targets).unwrap();
        let mut twice = Gradients::zeros_like(&params, &sm);
        backward_window_into(&params, &sm, &traces, &targets, None, &mut twice).unwrap();
        backward_window_into(&params, &sm, &traces, &targets, None, &mut twice).unwrap();
        for t in 0..TENSOR_NAMES.len() {
            for (a, b) in once.tensor(t).iter().zip(twice.tensor(t)) {
                assert!((2.0 * a - b).abs() <= 1e-12 * b.abs().max(1.0));
            }
        }
    }

    #[test]
    fn backward_rejects_bad_shapes() {
        let (params, sm, xs, mut targets) = random_case(11, 4, 5, 6, 3);
        let traces = run_window(&params, &sm, &xs);
        targets.pop();
        assert!(matches!(
            backward_window(&params, &sm, &traces, &targets),
            Err(NetworkError::DimMismatch { .. })
        ));
        assert!(matches!(
            backward_window(&params, &sm, &[], &[]),
            Err(NetworkError::EmptyWindow)
        ));
    }

    #[test]
    fn gates_stay_in_open_interval() {
        let (params, sm, xs, _) = random_case(13, 6, 8, 5, 4);
        let traces = run_window(&params, &sm, &xs);
        for trace in traces {
            for r in 0..params.hidden() {
                for v in [trace.i[r], trace.f[r], trace.o[r]] {
                    assert!(v > 0.0 && v < 1.0);
                }
                assert!(trace.g[r] > -1.0 && trace.g[r] < 1.0);
                let tc = trace.c[r].tanh();
                assert!(tc > -1.0 && tc < 1.0);
            }
        }
    }

    #[test]
    fn init_is_deterministic_and_bounded() {
        let (a_l, a_s) = init_params::<f32>(42, 8, 10, 12, 0.1);
        let (b_l, b_s) = init_params::<f32>(42, 8, 10, 12, 0.1);
        assert_eq!(a_l, b_l);
        assert_eq!(a_s.w_h, b_s.w_h);
        for t in 0..TENSOR_NAMES.len() {
            for v in param_tensor(&a_l, &a_s, t) {
                assert!(v.abs() <= 0.1 || (*v - 1.0).abs() < 1e-6); // b_f is 1
            }
        }
    }

    #[test]
    fn init_scale_zero_is_all_zeros_except_forget_bias() {
        let (params, sm) = init_params::<f64>(7, 4, 6, 5, 0.0);
        for (t, &name) in TENSOR_NAMES.iter().enumerate() {
            for (idx, v) in param_tensor(&params, &sm, t).iter().enumerate() {
                if name == "b_f" {
                    assert_eq!(*v, 1.0, "b_f[{idx}]");
                } else {
                    assert_eq!(*v, 0.0, "{name}[{idx}]");
                }
            }
        }
    }

    #[test]
    fn init_sample_mean_near_zero() {
        // W_i at H=100, D=900 has 1e5 entries; the sample mean of
        // U(-0.1, 0.1) draws must sit within 3 sigma of zero.
        let (params, _sm) = init_params::<f64>(123, 100, 900, 2, 0.1);
        let entries = params.w_i.as_slice();
        let n = entries.len() as f64;
        assert_eq!(n, 1e5);
        let mean = entries.iter().sum::<f64>() / n;
        let sigma_mean = 0.1 / 3.0f64.sqrt() / n.sqrt();
        assert!(
            mean.abs() < 3.0 * sigma_mean,
            "mean {mean} exceeds 3 sigma {}",
            3.0 * sigma_mean
        );
    }

    #[test]
    fn sigmoid_candidate_mode_changes_forward() {
        let mut params = LstmParams::<f64>::zeros(1, 1);
        params.candidate_activation = CandidateActivation::Sigmoid;
        let state = HiddenState::zeros(1);
        let (_, trace) = lstm_step(&params, &state, &[0.0]).unwrap();
        // sigmoid(0) = 0.5, unlike tanh(0) = 0.
        assert_eq!(trace.g[0], 0.5);
    }

    #[test]
    fn clip_caps_global_norm() {
        let (params, sm, xs, targets) = random_case(17, 4, 5, 6, 3);
        let traces = run_window(&params, &sm, &xs);
        let mut grads = backward_window(&params, &sm, &traces, &targets).unwrap();
        grads.scale(100.0);
        let big = grads.global_norm();
        assert!(big > 1.0);
        grads.clip_global_norm(1.0);
        assert!(grads.global_norm() <= 1.0 + 1e-9);
        // Clipping below the cap is a no-op.
        let before = grads.clone();
        grads.clip_global_norm(10.0);
        for t in 0..TENSOR_NAMES.len() {
            assert_eq!(before.tensor(t), grads.tensor(t));
        }
    }
}
