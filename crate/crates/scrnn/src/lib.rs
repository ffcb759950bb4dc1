//! Robust recognition of words with jumbled, deleted, or inserted internal
//! characters.
//!
//! A word is encoded as a semi-character vector (first character, unordered
//! internal counts, last character), fed through a from-scratch LSTM, and
//! classified against a fixed vocabulary by a softmax layer. Training runs
//! truncated backpropagation through time over a short window at every word
//! position. The crate also ships the three matching noise generators
//! (jumble, delete, insert), the ablated encoder layouts, an edit-distance
//! dictionary baseline, and evaluation tooling.

pub mod corpus;
pub mod encoder;
pub mod eval;
pub mod gradcheck;
pub mod math;
pub mod model_file;
pub mod network;
pub mod noise;
pub mod rng;
pub mod synth;
pub mod trainer;
