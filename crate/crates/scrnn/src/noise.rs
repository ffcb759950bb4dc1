//! Corruption generators: jumble, delete, and insert applied to the internal
//! characters of eligible tokens.
//!
//! A token is eligible when it is at least four characters long and contains
//! no decimal digit. No corruption ever touches the first or last character.
//! Randomness for each record is drawn from an independent ChaCha12 stream
//! keyed by `(seed, sentence index, token index)`, so the corruption of one
//! token does not depend on corpus order and whole datasets corrupt
//! bit-identically for a given seed on any platform.

use rand::seq::SliceRandom;
use rand::{Rng, RngExt};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::Dataset;
use crate::encoder::EncodingVariant;
use crate::rng::{self, DOMAIN_NOISE};

#[derive(Debug, Error)]
pub enum NoiseError {
    #[error("token {0:?} is not eligible for corruption")]
    Ineligible(String),
    #[error("corrupt_dataset requires a concrete noise kind, got NONE")]
    NoneKind,
}

/// The three corruption types, plus NONE for passed-through tokens.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NoiseKind {
    Jumble,
    Delete,
    Insert,
    None,
}

impl NoiseKind {
    pub fn name(self) -> &'static str {
        match self {
            NoiseKind::Jumble => "jumble",
            NoiseKind::Delete => "delete",
            NoiseKind::Insert => "insert",
            NoiseKind::None => "none",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "jumble" => Some(NoiseKind::Jumble),
            "delete" => Some(NoiseKind::Delete),
            "insert" => Some(NoiseKind::Insert),
            "none" => Some(NoiseKind::None),
            _ => None,
        }
    }
}

/// Character span a jumble permutes. `Internal` is the ordinary condition;
/// the other regions match what each encoder variant collapses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum JumbleRegion {
    /// Positions 1..len-1 (first and last fixed).
    Internal,
    /// Positions 1..len (only first fixed).
    InternalAndLast,
    /// Positions 0..len-1 (only last fixed).
    FirstAndInternal,
    /// Every position.
    All,
}

impl JumbleRegion {
    /// Region whose jumble exactly matches the positions `variant` collapses
    /// into unordered counts.
    pub fn for_variant(variant: EncodingVariant) -> Self {
        match variant {
            EncodingVariant::Int => JumbleRegion::Internal,
            EncodingVariant::End => JumbleRegion::InternalAndLast,
            EncodingVariant::Beg => JumbleRegion::FirstAndInternal,
            EncodingVariant::All => JumbleRegion::All,
        }
    }

    fn bounds(self, len: usize) -> (usize, usize) {
        match self {
            JumbleRegion::Internal => (1, len - 1),
            JumbleRegion::InternalAndLast => (1, len),
            JumbleRegion::FirstAndInternal => (0, len - 1),
            JumbleRegion::All => (0, len),
        }
    }
}

/// One token's corruption outcome.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorruptionRecord {
    pub original: String,
    pub corrupted: String,
    pub kind: NoiseKind,
    pub eligible: bool,
}

/// True iff the token is at least 4 characters long and digit-free.
pub fn is_eligible(token: &str) -> bool {
    token.chars().count() >= 4 && !token.chars().any(|c| c.is_ascii_digit())
}

/// Permutes `chars[lo..hi]` uniformly over the distinct arrangements that
/// differ from the current one. When every arrangement is identical (fewer
/// than two positions, or all characters equal) the span is left unchanged.
fn permute_span<R: Rng>(chars: &mut [char], lo: usize, hi: usize, rng: &mut R) {
    let span = hi - lo;
    if span < 2 || chars[lo..hi].iter().all(|&c| c == chars[lo]) {
        return;
    }
    let original: Vec<char> = chars[lo..hi].to_vec();
    // A uniformly random permutation of positions induces the uniform
    // distribution over distinct arrangements (each arrangement corresponds
    // to the same number of position orderings), so rejecting the identity
    // arrangement leaves the uniform distribution over the rest.
    loop {
        chars[lo..hi].shuffle(rng);
        if chars[lo..hi] != original[..] {
            return;
        }
    }
}

/// Jumbles the token over `region`. First/last preservation follows the
/// region; the output is always an anagram of the input.
pub fn jumble_region<R: Rng>(
    token: &str,
    region: JumbleRegion,
    rng: &mut R,
) -> Result<String, NoiseError> {
    if !is_eligible(token) {
        return Err(NoiseError::Ineligible(token.to_string()));
    }
    let mut chars: Vec<char> = token.chars().collect();
    let (lo, hi) = region.bounds(chars.len());
    permute_span(&mut chars, lo, hi, rng);
    Ok(chars.into_iter().collect())
}

/// Permutes the internal characters, keeping first and last fixed.
pub fn jumble<R: Rng>(token: &str, rng: &mut R) -> Result<String, NoiseError> {
    jumble_region(token, JumbleRegion::Internal, rng)
}

/// Removes one internal character chosen uniformly.
pub fn delete<R: Rng>(token: &str, rng: &mut R) -> Result<String, NoiseError> {
    if !is_eligible(token) {
        return Err(NoiseError::Ineligible(token.to_string()));
    }
    let mut chars: Vec<char> = token.chars().collect();
    let pos = rng.random_range(1..chars.len() - 1);
    chars.remove(pos);
    Ok(chars.into_iter().collect())
}

/// Inserts a uniformly chosen lowercase letter at a uniformly chosen internal
/// boundary. The boundary is drawn first, then the letter.
pub fn insert<R: Rng>(token: &str, rng: &mut R) -> Result<String, NoiseError> {
    if !is_eligible(token) {
        return Err(NoiseError::Ineligible(token.to_string()));
    }
    let mut chars: Vec<char> = token.chars().collect();
    let pos = rng.random_range(1..chars.len());
    let letter = (b'a' + rng.random_range(0..26u8)) as char;
    chars.insert(pos, letter);
    Ok(chars.into_iter().collect())
}

fn corrupt_token<R: Rng>(
    token: &str,
    kind: NoiseKind,
    region: JumbleRegion,
    rng: &mut R,
) -> CorruptionRecord {
    if !is_eligible(token) {
        return CorruptionRecord {
            original: token.to_string(),
            corrupted: token.to_string(),
            kind: NoiseKind::None,
            eligible: false,
        };
    }
    let corrupted = match kind {
        NoiseKind::Jumble => jumble_region(token, region, rng),
        NoiseKind::Delete => delete(token, rng),
        NoiseKind::Insert => insert(token, rng),
        NoiseKind::None => unreachable!("corrupt_token is never called with NONE"),
    }
    .expect("eligibility already checked");
    CorruptionRecord {
        original: token.to_string(),
        corrupted,
        kind,
        eligible: true,
    }
}

/// Corrupts every eligible token of the dataset with `kind`, jumbling over
/// `region` when `kind` is jumble. Ineligible tokens pass through with kind
/// NONE. Deterministic for a given seed.
pub fn corrupt_dataset_region(
    data: &Dataset,
    kind: NoiseKind,
    region: JumbleRegion,
    seed: u64,
) -> Result<Vec<Vec<CorruptionRecord>>, NoiseError> {
    if kind == NoiseKind::None {
        return Err(NoiseError::NoneKind);
    }
    Ok(data
        .sentences
        .par_iter()
        .enumerate()
        .map(|(si, sentence)| {
            sentence
                .iter()
                .enumerate()
                .map(|(ti, token)| {
                    let mut rng = rng::stream(seed, DOMAIN_NOISE, si as u64, ti as u64);
                    corrupt_token(&token.surface, kind, region, &mut rng)
                })
                .collect()
        })
        .collect())
}

/// Corrupts with the ordinary internal jumble region.
pub fn corrupt_dataset(
    data: &Dataset,
    kind: NoiseKind,
    seed: u64,
) -> Result<Vec<Vec<CorruptionRecord>>, NoiseError> {
    corrupt_dataset_region(data, kind, JumbleRegion::Internal, seed)
}
