//! Semi-character encoding: a token becomes a stack of per-character-position
//! sub-vectors over the alphabet.
//!
//! The full layout (INT) is `[one-hot(first); counts(internal);
//! one-hot(last)]`. The ablated layouts merge sub-vectors into unordered
//! counts: END merges internal+last, BEG merges first+internal, and ALL is a
//! plain bag of characters. Counts are raw integers stored as reals, so two
//! tokens have equal encodings exactly when the variant cannot tell them
//! apart.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::Alphabet;
use crate::math::Real;

#[derive(Debug, Error)]
pub enum EncodeError {
    #[error("cannot encode an empty token")]
    EmptyToken,
}

/// Input-layer layout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EncodingVariant {
    /// `[b; i; e]` — first and last one-hot, internal counts.
    Int,
    /// `[b; i + e]` — first one-hot, internal and last merged.
    End,
    /// `[b + i; e]` — first and internal merged, last one-hot.
    Beg,
    /// `[b + i + e]` — bag of characters.
    All,
}

impl EncodingVariant {
    pub const ALL_VARIANTS: [EncodingVariant; 4] = [
        EncodingVariant::Int,
        EncodingVariant::End,
        EncodingVariant::Beg,
        EncodingVariant::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EncodingVariant::Int => "int",
            EncodingVariant::End => "end",
            EncodingVariant::Beg => "beg",
            EncodingVariant::All => "all",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "int" => Some(EncodingVariant::Int),
            "end" => Some(EncodingVariant::End),
            "beg" => Some(EncodingVariant::Beg),
            "all" => Some(EncodingVariant::All),
            _ => None,
        }
    }
}

/// Input vector length for `variant` over an alphabet of `n` slots.
pub fn dimension(variant: EncodingVariant, n: usize) -> usize {
    match variant {
        EncodingVariant::Int => 3 * n,
        EncodingVariant::End | EncodingVariant::Beg => 2 * n,
        EncodingVariant::All => n,
    }
}

/// Encoded token. Entries are non-negative integers stored as reals.
#[derive(Clone, Debug, PartialEq)]
pub struct SemiCharVector {
    variant: EncodingVariant,
    values: Vec<f32>,
}

impl SemiCharVector {
    pub fn variant(&self) -> EncodingVariant {
        self.variant
    }

    pub fn values(&self) -> &[f32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Element-wise copy at the network's precision.
    pub fn to_reals<R: Real>(&self) -> Vec<R> {
        self.values.iter().map(|&v| R::from_f64(v as f64)).collect()
    }
}

/// Encodes `token` under `variant`. Characters missing from the alphabet land
/// in the OTHER slot. A length-1 token serves as its own first and last
/// character; length-1 and length-2 tokens have empty internal counts.
pub fn encode(
    token: &str,
    variant: EncodingVariant,
    alphabet: &Alphabet,
) -> Result<SemiCharVector, EncodeError> {
    let chars: Vec<char> = token.chars().collect();
    if chars.is_empty() {
        return Err(EncodeError::EmptyToken);
    }
    let n = alphabet.n();
    let first = alphabet.slot(chars[0]);
    let last = alphabet.slot(*chars.last().expect("non-empty"));
    let mut values = vec![0.0f32; dimension(variant, n)];

    // Offsets of the (first, internal, last) sub-vectors; shared offsets
    // realize the merged layouts.
    let (off_b, off_i, off_e) = match variant {
        EncodingVariant::Int => (0, n, 2 * n),
        EncodingVariant::End => (0, n, n),
        EncodingVariant::Beg => (0, 0, n),
        EncodingVariant::All => (0, 0, 0),
    };

    values[off_b + first] += 1.0;
    if chars.len() >= 2 {
        values[off_e + last] += 1.0;
        for &c in &chars[1..chars.len() - 1] {
            values[off_i + alphabet.slot(c)] += 1.0;
        }
    } else if variant != EncodingVariant::All {
        // Single character plays both boundary roles; under ALL the merged
        // bag counts it once.
        values[off_e + last] += 1.0;
    }
    Ok(SemiCharVector { variant, values })
}
