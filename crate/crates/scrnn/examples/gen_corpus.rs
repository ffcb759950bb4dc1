//! Writes deterministic synthetic train/dev/test corpora.
//!
//! ```text
//! cargo run --release -p scrnn --example gen_corpus -- OUT_DIR [TRAIN_TOKENS] [SEED]
//! ```
//!
//! Dev and test each get a tenth of the training tokens.

use std::env;
use std::fs;
use std::path::PathBuf;

use scrnn::synth::Generator;

fn main() {
    let mut args = env::args().skip(1);
    let out_dir = PathBuf::from(args.next().unwrap_or_else(|| "corpus".into()));
    let train_tokens: usize = args
        .next()
        .map(|v| v.parse().expect("TRAIN_TOKENS must be an integer"))
        .unwrap_or(100_000);
    let seed: u64 = args
        .next()
        .map(|v| v.parse().expect("SEED must be an integer"))
        .unwrap_or(1);

    fs::create_dir_all(&out_dir).expect("create output directory");
    for (name, tokens, s) in [
        ("train.txt", train_tokens, seed),
        ("dev.txt", train_tokens / 10, seed.wrapping_add(1)),
        ("test.txt", train_tokens / 10, seed.wrapping_add(2)),
    ] {
        let lines = Generator::new(s).lines(tokens);
        let path = out_dir.join(name);
        fs::write(&path, lines.join("\n") + "\n").expect("write corpus file");
        println!("{}: {} sentences", path.display(), lines.len());
    }
}
