//! Self-contained model checkpoints and their binary file format.
//!
//! Layout (all integers little-endian):
//!
//! ```text
//! magic            6 bytes, literal "SCRNN1"
//! metadata_len     u64
//! metadata block:
//!   hidden         u64
//!   input_dim      u64
//!   vocab          u64
//!   alphabet_n     u64      (slot count including OTHER)
//!   variant        u8       (0 int, 1 end, 2 beg, 3 all)
//!   candidate_act  u8       (0 tanh, 1 sigmoid)
//!   iteration      u64
//!   config_len     u64, then that many bytes of key=value UTF-8 text
//!   alphabet count u64, then per character: u32 byte length + UTF-8 bytes
//!   vocab count    u64, then per word: u32 byte length + UTF-8 bytes + u64 count
//! tensors, in TENSOR_NAMES order:
//!   name           u32 byte length + UTF-8 bytes
//!   ndim           u8, then ndim u64 dims
//!   data           row-major f32
//! ```
//!
//! The file must end exactly after the last tensor. A checkpoint is
//! self-contained: loading one is sufficient for inference.

use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::corpus::{Alphabet, Vocabulary, UNK_TOKEN};
use crate::encoder::{dimension, EncodingVariant};
use crate::network::{
    param_tensor, param_tensor_mut, CandidateActivation, LstmParams, SoftmaxParams, TENSOR_NAMES,
};
use crate::trainer::TrainingConfig;

pub const MAGIC: &[u8; 6] = b"SCRNN1";

#[derive(Debug, Error)]
pub enum ModelFileError {
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("bad magic: file does not start with {expected:?}", expected = MAGIC)]
    BadMagic,
    #[error("truncated file: needed {needed} more bytes for {what}")]
    Truncated { what: &'static str, needed: usize },
    #[error("invalid UTF-8 in {what}")]
    BadUtf8 { what: &'static str },
    #[error("unknown {what} code {code}")]
    BadEnum { what: &'static str, code: u8 },
    #[error("tensor name mismatch: expected {expected}, found {found}")]
    TensorName { expected: &'static str, found: String },
    #[error("dimension mismatch in {what}: expected {expected:?}, found {found:?}")]
    DimensionMismatch {
        what: &'static str,
        expected: Vec<usize>,
        found: Vec<usize>,
    },
    #[error("{count} trailing bytes after the last tensor")]
    TrailingBytes { count: usize },
    #[error("config text in metadata failed to parse: {0}")]
    BadConfig(String),
}

/// Everything needed to run inference: parameters, alphabet, vocabulary, and
/// the training configuration that produced them.
#[derive(Clone, Debug)]
pub struct Checkpoint {
    pub lstm: LstmParams<f32>,
    pub softmax: SoftmaxParams<f32>,
    pub alphabet: Alphabet,
    pub vocab: Vocabulary,
    pub config: TrainingConfig,
    pub iteration: u64,
}

impl Checkpoint {
    pub fn variant(&self) -> EncodingVariant {
        self.config.variant
    }

    pub fn hidden(&self) -> usize {
        self.lstm.hidden()
    }

    pub fn input_dim(&self) -> usize {
        self.lstm.input_dim()
    }
}

fn variant_code(v: EncodingVariant) -> u8 {
    match v {
        EncodingVariant::Int => 0,
        EncodingVariant::End => 1,
        EncodingVariant::Beg => 2,
        EncodingVariant::All => 3,
    }
}

fn variant_from_code(c: u8) -> Result<EncodingVariant, ModelFileError> {
    Ok(match c {
        0 => EncodingVariant::Int,
        1 => EncodingVariant::End,
        2 => EncodingVariant::Beg,
        3 => EncodingVariant::All,
        _ => {
            return Err(ModelFileError::BadEnum {
                what: "encoding variant",
                code: c,
            })
        }
    })
}

fn activation_code(a: CandidateActivation) -> u8 {
    match a {
        CandidateActivation::Tanh => 0,
        CandidateActivation::Sigmoid => 1,
    }
}

fn activation_from_code(c: u8) -> Result<CandidateActivation, ModelFileError> {
    Ok(match c {
        0 => CandidateActivation::Tanh,
        1 => CandidateActivation::Sigmoid,
        _ => {
            return Err(ModelFileError::BadEnum {
                what: "candidate activation",
                code: c,
            })
        }
    })
}

struct Writer {
    buf: Vec<u8>,
}

impl Writer {
    fn u8(&mut self, v: u8) {
        self.buf.push(v);
    }
    fn u32(&mut self, v: u32) {
        self.buf.extend_from_slice(&v.to_le_bytes());
    }
    fn u64(&mut self, v: u64) {
        self.buf.extend_from_slice(&v.to_le_bytes());
    }
    fn f32(&mut self, v: f32) {
        self.buf.extend_from_slice(&v.to_le_bytes());
    }
    fn str32(&mut self, s: &str) {
        self.u32(s.len() as u32);
        self.buf.extend_from_slice(s.as_bytes());
    }
}

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize, what: &'static str) -> Result<&'a [u8], ModelFileError> {
        if self.pos + n > self.buf.len() {
            return Err(ModelFileError::Truncated {
                what,
                needed: self.pos + n - self.buf.len(),
            });
        }
        let s = &self.buf[self.pos..self.pos + n];
        self.pos += n;
        Ok(s)
    }
    fn u8(&mut self, what: &'static str) -> Result<u8, ModelFileError> {
        Ok(self.take(1, what)?[0])
    }
    fn u32(&mut self, what: &'static str) -> Result<u32, ModelFileError> {
        Ok(u32::from_le_bytes(self.take(4, what)?.try_into().unwrap()))
    }
    fn u64(&mut self, what: &'static str) -> Result<u64, ModelFileError> {
        Ok(u64::from_le_bytes(self.take(8, what)?.try_into().unwrap()))
    }
    fn f32(&mut self, what: &'static str) -> Result<f32, ModelFileError> {
        Ok(f32::from_le_bytes(self.take(4, what)?.try_into().unwrap()))
    }
    fn str32(&mut self, what: &'static str) -> Result<String, ModelFileError> {
        let len = self.u32(what)? as usize;
        let bytes = self.take(len, what)?;
        String::from_utf8(bytes.to_vec()).map_err(|_| ModelFileError::BadUtf8 { what })
    }
}

fn tensor_dims(ckpt: &Checkpoint, idx: usize) -> Vec<usize> {
    let (h, hd, v) = (
        ckpt.lstm.hidden(),
        ckpt.lstm.hidden() + ckpt.lstm.input_dim(),
        ckpt.softmax.vocab(),
    );
    match TENSOR_NAMES[idx] {
        "w_i" | "w_f" | "w_o" | "w_g" => vec![h, hd],
        "b_i" | "b_f" | "b_o" | "b_g" => vec![h],
        "w_h" => vec![v, h],
        _ => unreachable!(),
    }
}

/// Serializes the checkpoint to its byte representation.
pub fn to_bytes(ckpt: &Checkpoint) -> Vec<u8> {
    let mut meta = Writer { buf: Vec::new() };
    meta.u64(ckpt.lstm.hidden() as u64);
    meta.u64(ckpt.lstm.input_dim() as u64);
    meta.u64(ckpt.softmax.vocab() as u64);
    meta.u64(ckpt.alphabet.n() as u64);
    meta.u8(variant_code(ckpt.config.variant));
    meta.u8(activation_code(ckpt.lstm.candidate_activation));
    meta.u64(ckpt.iteration);
    let config_text = ckpt.config.to_kv_string();
    meta.u64(config_text.len() as u64);
    meta.buf.extend_from_slice(config_text.as_bytes());
    meta.u64(ckpt.alphabet.chars().len() as u64);
    for &c in ckpt.alphabet.chars() {
        meta.str32(&c.to_string());
    }
    meta.u64(ckpt.vocab.len() as u64);
    for w in ckpt.vocab.words() {
        meta.str32(w);
        meta.u64(ckpt.vocab.frequency(w));
    }

    let mut out = Writer { buf: Vec::new() };
    out.buf.extend_from_slice(MAGIC);
    out.u64(meta.buf.len() as u64);
    out.buf.extend_from_slice(&meta.buf);
    for (idx, tensor_name) in TENSOR_NAMES.iter().enumerate() {
        out.str32(tensor_name);
        let dims = tensor_dims(ckpt, idx);
        out.u8(dims.len() as u8);
        for d in &dims {
            out.u64(*d as u64);
        }
        for &v in param_tensor(&ckpt.lstm, &ckpt.softmax, idx) {
            out.f32(v);
        }
    }
    out.buf
}

/// Parses a checkpoint from bytes, validating magic, dimensions, tensor
/// names and exact length.
pub fn from_bytes(bytes: &[u8]) -> Result<Checkpoint, ModelFileError> {
    if bytes.len() < MAGIC.len() || &bytes[..MAGIC.len()] != MAGIC {
        return Err(ModelFileError::BadMagic);
    }
    let mut r = Reader {
        buf: bytes,
        pos: MAGIC.len(),
    };
    let meta_len = r.u64("metadata length")? as usize;
    let meta_end = r.pos + meta_len;
    if meta_end > bytes.len() {
        return Err(ModelFileError::Truncated {
            what: "metadata block",
            needed: meta_end - bytes.len(),
        });
    }

    let hidden = r.u64("hidden size")? as usize;
    let input_dim = r.u64("input dim")? as usize;
    let vocab_len = r.u64("vocab size")? as usize;
    let alphabet_n = r.u64("alphabet size")? as usize;
    let variant = variant_from_code(r.u8("variant")?)?;
    let activation = activation_from_code(r.u8("candidate activation")?)?;
    let iteration = r.u64("iteration")?;
    let config_len = r.u64("config length")? as usize;
    let config_bytes = r.take(config_len, "config text")?;
    let config_text = std::str::from_utf8(config_bytes)
        .map_err(|_| ModelFileError::BadUtf8 { what: "config text" })?;
    let mut config = TrainingConfig::default();
    config
        .apply_kv_text(config_text)
        .map_err(ModelFileError::BadConfig)?;

    let char_count = r.u64("alphabet count")? as usize;
    if char_count + 1 != alphabet_n {
        return Err(ModelFileError::DimensionMismatch {
            what: "alphabet entry count",
            expected: vec![alphabet_n - 1],
            found: vec![char_count],
        });
    }
    let mut chars = Vec::with_capacity(char_count);
    for _ in 0..char_count {
        let s = r.str32("alphabet entry")?;
        let mut it = s.chars();
        match (it.next(), it.next()) {
            (Some(c), None) => chars.push(c),
            _ => return Err(ModelFileError::BadUtf8 { what: "alphabet entry" }),
        }
    }
    let alphabet = Alphabet::from_chars(chars);
    if alphabet.n() != alphabet_n {
        return Err(ModelFileError::DimensionMismatch {
            what: "alphabet size",
            expected: vec![alphabet_n],
            found: vec![alphabet.n()],
        });
    }

    let word_count = r.u64("vocab count")? as usize;
    if word_count != vocab_len {
        return Err(ModelFileError::DimensionMismatch {
            what: "vocabulary entry count",
            expected: vec![vocab_len],
            found: vec![word_count],
        });
    }
    let mut words = Vec::with_capacity(word_count);
    let mut freq = std::collections::HashMap::new();
    for i in 0..word_count {
        let w = r.str32("vocab entry")?;
        let count = r.u64("vocab frequency")?;
        if i == 0 && w != UNK_TOKEN {
            return Err(ModelFileError::BadUtf8 { what: "unk entry" });
        }
        if count > 0 {
            freq.insert(w.clone(), count);
        }
        words.push(w);
    }
    let vocab = Vocabulary::from_parts(words, freq);

    if r.pos != meta_end {
        return Err(ModelFileError::DimensionMismatch {
            what: "metadata length",
            expected: vec![meta_len],
            found: vec![r.pos - MAGIC.len() - 8],
        });
    }
    if dimension(variant, alphabet_n) != input_dim {
        return Err(ModelFileError::DimensionMismatch {
            what: "input dim for variant",
            expected: vec![dimension(variant, alphabet_n)],
            found: vec![input_dim],
        });
    }

    let mut lstm = LstmParams::<f32>::zeros(hidden, input_dim);
    lstm.candidate_activation = activation;
    let mut softmax = SoftmaxParams::<f32>::zeros(vocab_len, hidden);
    for (idx, &expected_name) in TENSOR_NAMES.iter().enumerate() {
        let name = r.str32("tensor name")?;
        if name != expected_name {
            return Err(ModelFileError::TensorName {
                expected: expected_name,
                found: name,
            });
        }
        let ndim = r.u8("tensor rank")? as usize;
        let mut dims = Vec::with_capacity(ndim);
        for _ in 0..ndim {
            dims.push(r.u64("tensor dim")? as usize);
        }
        let expected = {
            let (h, hd) = (hidden, hidden + input_dim);
            match TENSOR_NAMES[idx] {
                "w_i" | "w_f" | "w_o" | "w_g" => vec![h, hd],
                "b_i" | "b_f" | "b_o" | "b_g" => vec![h],
                "w_h" => vec![vocab_len, h],
                _ => unreachable!(),
            }
        };
        if dims != expected {
            return Err(ModelFileError::DimensionMismatch {
                what: "tensor shape",
                expected,
                found: dims,
            });
        }
        let dst = param_tensor_mut(&mut lstm, &mut softmax, idx);
        for v in dst.iter_mut() {
            *v = r.f32("tensor data")?;
        }
    }
    if r.pos != bytes.len() {
        return Err(ModelFileError::TrailingBytes {
            count: bytes.len() - r.pos,
        });
    }

    config.variant = variant;
    config.candidate_activation = activation;
    Ok(Checkpoint {
        lstm,
        softmax,
        alphabet,
        vocab,
        config,
        iteration,
    })
}

/// Writes the checkpoint to `path`.
pub fn save_model(ckpt: &Checkpoint, path: &Path) -> Result<(), ModelFileError> {
    fs::write(path, to_bytes(ckpt)).map_err(|source| ModelFileError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Reads a checkpoint back from `path`.
pub fn load_model(path: &Path) -> Result<Checkpoint, ModelFileError> {
    let bytes = fs::read(path).map_err(|source| ModelFileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    from_bytes(&bytes)
}
