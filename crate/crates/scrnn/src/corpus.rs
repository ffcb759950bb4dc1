//! Corpus ingestion: tokenized text in, character alphabet, word vocabulary
//! and label-indexed datasets out.
//!
//! Input files hold one pre-tokenized sentence per line, tokens separated by
//! single spaces, UTF-8 with LF line endings. The alphabet is derived from the
//! training corpus (sorted by code point) with one reserved OTHER slot at the
//! end for characters never seen in training. The vocabulary is the top `k-1`
//! training words by frequency plus the reserved UNK class at id 0.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use thiserror::Error;

/// Literal string written as the first line of a vocabulary dump.
pub const UNK_TOKEN: &str = "<unk>";
/// Class id of the UNK label.
pub const UNK_ID: usize = 0;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("corpus is empty")]
    EmptyCorpus,
    #[error("corpus has no words")]
    NoWords,
    #[error("vocabulary size must be at least 2, got {0}")]
    VocabTooSmall(usize),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Character index space: every distinct corpus character, sorted by code
/// point, plus one reserved OTHER slot at position `n - 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Alphabet {
    chars: Vec<char>,
    index: HashMap<char, usize>,
}

impl Alphabet {
    pub fn from_chars(mut chars: Vec<char>) -> Self {
        chars.sort_unstable();
        chars.dedup();
        let index = chars.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        Alphabet { chars, index }
    }

    /// Number of slots including the reserved OTHER slot.
    pub fn n(&self) -> usize {
        self.chars.len() + 1
    }

    /// Characters in index order. The OTHER slot has no character and is not
    /// listed.
    pub fn chars(&self) -> &[char] {
        &self.chars
    }

    /// Slot for `c`; unseen characters map to the OTHER slot.
    pub fn slot(&self, c: char) -> usize {
        self.index.get(&c).copied().unwrap_or(self.chars.len())
    }

    /// Writes the dump format: one character per line, line number = index.
    pub fn write_dump(&self, path: &Path) -> Result<(), CorpusError> {
        let mut out = String::new();
        for c in &self.chars {
            out.push(*c);
            out.push('\n');
        }
        fs::write(path, out).map_err(|source| CorpusError::Io {
            path: path.display().to_string(),
            source,
        })
    }
}

/// Word label space: UNK at id 0 followed by the most frequent training
/// words, with training counts retained for frequency tie-breaks downstream.
#[derive(Clone, Debug, PartialEq)]
pub struct Vocabulary {
    words: Vec<String>,
    index: HashMap<String, usize>,
    freq: HashMap<String, u64>,
}

impl Vocabulary {
    pub fn from_parts(words: Vec<String>, freq: HashMap<String, u64>) -> Self {
        debug_assert_eq!(words[UNK_ID], UNK_TOKEN);
        let index = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        Vocabulary { words, index, freq }
    }

    /// Number of classes including UNK.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Words in class-id order; entry 0 is the UNK literal.
    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn word(&self, id: usize) -> &str {
        &self.words[id]
    }

    pub fn id(&self, word: &str) -> Option<usize> {
        self.index.get(word).copied()
    }

    /// Training-corpus count of `word` (0 when unseen or out of vocabulary).
    pub fn frequency(&self, word: &str) -> u64 {
        self.freq.get(word).copied().unwrap_or(0)
    }

    pub fn freq_map(&self) -> &HashMap<String, u64> {
        &self.freq
    }

    /// Fraction of corpus tokens covered by the vocabulary.
    pub fn coverage(&self, corpus: &Corpus) -> f64 {
        let mut covered = 0usize;
        let mut total = 0usize;
        for sentence in &corpus.sentences {
            for token in sentence {
                total += 1;
                if self.index.contains_key(token) {
                    covered += 1;
                }
            }
        }
        if total == 0 {
            0.0
        } else {
            covered as f64 / total as f64
        }
    }

    /// Writes the dump format: one word per line, line number = class id,
    /// first line the literal `<unk>`.
    pub fn write_dump(&self, path: &Path) -> Result<(), CorpusError> {
        let mut buf = Vec::new();
        for w in &self.words {
            writeln!(buf, "{w}").expect("write to vec");
        }
        fs::write(path, buf).map_err(|source| CorpusError::Io {
            path: path.display().to_string(),
            source,
        })
    }
}

/// Tokenized sentences before labeling.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Corpus {
    pub sentences: Vec<Vec<String>>,
}

impl Corpus {
    pub fn from_lines<I: IntoIterator<Item = S>, S: AsRef<str>>(lines: I) -> Self {
        let sentences = lines
            .into_iter()
            .map(|l| tokenize_line(l.as_ref()))
            .filter(|s| !s.is_empty())
            .collect();
        Corpus { sentences }
    }

    pub fn read_file(path: &Path) -> Result<Self, CorpusError> {
        let text = fs::read_to_string(path).map_err(|source| CorpusError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Ok(Self::from_lines(text.lines()))
    }

    pub fn token_count(&self) -> usize {
        self.sentences.iter().map(|s| s.len()).sum()
    }
}

/// One labeled token.
#[derive(Clone, Debug, PartialEq)]
pub struct Token {
    pub surface: String,
    pub label: usize,
}

/// Sentences of (surface, class id) pairs ready for training or evaluation.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Dataset {
    pub sentences: Vec<Vec<Token>>,
}

impl Dataset {
    pub fn label(corpus: &Corpus, vocab: &Vocabulary) -> Self {
        let sentences = corpus
            .sentences
            .iter()
            .map(|s| {
                s.iter()
                    .map(|t| Token {
                        surface: t.clone(),
                        label: label_token(t, vocab),
                    })
                    .collect()
            })
            .collect();
        Dataset { sentences }
    }

    pub fn token_count(&self) -> usize {
        self.sentences.iter().map(|s| s.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }
}

/// Splits a line on runs of whitespace, preserving case and punctuation.
pub fn tokenize_line(line: &str) -> Vec<String> {
    line.split_whitespace().map(str::to_owned).collect()
}

/// Collects every distinct character in the corpus, sorted by code point,
/// plus the OTHER slot.
pub fn build_alphabet(corpus: &Corpus) -> Result<Alphabet, CorpusError> {
    if corpus.sentences.is_empty() {
        return Err(CorpusError::EmptyCorpus);
    }
    let mut chars: Vec<char> = corpus
        .sentences
        .iter()
        .flat_map(|s| s.iter())
        .flat_map(|t| t.chars())
        .collect();
    chars.sort_unstable();
    chars.dedup();
    Ok(Alphabet::from_chars(chars))
}

/// Builds the UNK + top `k-1` vocabulary. Frequency ties break
/// lexicographically, so the result is deterministic for a given corpus.
pub fn build_vocabulary(corpus: &Corpus, k: usize) -> Result<Vocabulary, CorpusError> {
    if k < 2 {
        return Err(CorpusError::VocabTooSmall(k));
    }
    let mut freq: HashMap<String, u64> = HashMap::new();
    for sentence in &corpus.sentences {
        for token in sentence {
            *freq.entry(token.clone()).or_insert(0) += 1;
        }
    }
    if freq.is_empty() {
        return Err(CorpusError::NoWords);
    }
    let mut ranked: Vec<(&String, &u64)> = freq.iter().collect();
    ranked.sort_by(|a, b| b.1.cmp(a.1).then_with(|| a.0.cmp(b.0)));
    let mut words = Vec::with_capacity(k.min(ranked.len() + 1));
    words.push(UNK_TOKEN.to_string());
    words.extend(ranked.iter().take(k - 1).map(|(w, _)| (*w).clone()));
    Ok(Vocabulary::from_parts(words, freq))
}

/// Class id for a token: its vocabulary id, or UNK for out-of-vocabulary.
pub fn label_token(token: &str, vocab: &Vocabulary) -> usize {
    vocab.id(token).unwrap_or(UNK_ID)
}
