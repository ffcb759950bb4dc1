//! End-to-end checks of the binary: flag handling, determinism, exit codes,
//! and the documented file formats.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn scrnn() -> Command {
    Command::new(env!("CARGO_BIN_EXE_scrnn"))
}

fn tmp_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("scrnn-cli-{name}-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_corpus(path: &Path) {
    let text = "\
The traders sold the shares near the harbor .
Every morning the market opened without a problem .
Linda explained that the report could not cover the losses .
The first answer and the last answer are at the right place .
Because the quarter was strong , the company moved .
There are three letters in the word .
";
    fs::write(path, text).unwrap();
}

fn run(cmd: &mut Command) -> Output {
    cmd.output().expect("binary runs")
}

#[test]
fn corrupt_is_deterministic_and_tsv_shaped() {
    let dir = tmp_dir("corrupt");
    let corpus = dir.join("in.txt");
    write_corpus(&corpus);
    let out_a = dir.join("a.tsv");
    let out_b = dir.join("b.tsv");
    for out in [&out_a, &out_b] {
        let output = run(scrnn()
            .args(["corrupt", "--kind", "jumble", "--seed", "1", "--output"])
            .arg(out)
            .arg(&corpus));
        assert!(output.status.success(), "{output:?}");
    }
    let a = fs::read(&out_a).unwrap();
    let b = fs::read(&out_b).unwrap();
    assert_eq!(a, b, "same seed must produce identical files");

    let text = String::from_utf8(a).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("original\tcorrupted\tkind\teligible"));
    for line in lines {
        let fields: Vec<&str> = line.split('\t').collect();
        assert_eq!(fields.len(), 4, "bad row {line:?}");
        assert!(matches!(fields[2], "jumble" | "none"));
        assert!(matches!(fields[3], "true" | "false"));
    }

    let changed = run(scrnn()
        .args(["corrupt", "--kind", "jumble", "--seed", "2", "--output"])
        .arg(dir.join("c.tsv"))
        .arg(&corpus));
    assert!(changed.status.success());
    assert_ne!(fs::read(dir.join("c.tsv")).unwrap(), b);
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn gradcheck_exits_zero_and_reports_error() {
    let output = run(scrnn().args(["gradcheck", "--seed", "7"]));
    assert!(output.status.success());
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.contains("max relative error"));
    for variant in ["int", "end", "beg", "all"] {
        assert!(stdout.contains(variant), "missing {variant} in {stdout}");
    }
}

#[test]
fn bad_flags_exit_two() {
    let output = run(scrnn().args(["corrupt", "--no-such-flag"]));
    assert_eq!(output.status.code(), Some(2));
    let output = run(scrnn().args(["no-such-command"]));
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn runtime_failures_exit_one() {
    let output = run(scrnn().args(["eval", "--model", "/nonexistent.scrnn", "--test", "/nonexistent.txt"]));
    assert_eq!(output.status.code(), Some(1));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.starts_with("error:"), "{stderr}");
    // Unknown noise kinds are runtime errors too.
    let dir = tmp_dir("badkind");
    let corpus = dir.join("in.txt");
    write_corpus(&corpus);
    let output = run(scrnn().args(["corrupt", "--kind", "warp"]).arg(&corpus));
    assert_eq!(output.status.code(), Some(1));
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn help_lists_documented_defaults() {
    let output = run(scrnn().args(["train", "--help"]));
    assert!(output.status.success());
    let help = String::from_utf8(output.stdout).unwrap();
    for needle in ["[default: 3]", "[default: 20]", "[default: 5]", "[default: 650]"] {
        assert!(help.contains(needle), "help missing {needle}:\n{help}");
    }
}

#[test]
fn build_vocab_dump_format() {
    let dir = tmp_dir("vocab");
    let corpus = dir.join("in.txt");
    write_corpus(&corpus);
    let vocab_out = dir.join("vocab.txt");
    let alphabet_out = dir.join("alphabet.txt");
    let output = run(scrnn()
        .args(["build-vocab", "--size", "10", "--vocab-out"])
        .arg(&vocab_out)
        .arg("--alphabet-out")
        .arg(&alphabet_out)
        .arg(&corpus));
    assert!(output.status.success(), "{output:?}");
    let vocab = fs::read_to_string(&vocab_out).unwrap();
    let lines: Vec<&str> = vocab.lines().collect();
    assert_eq!(lines[0], "<unk>");
    assert_eq!(lines.len(), 10);
    assert_eq!(lines[1], "the", "most frequent word at id 1");
    let alphabet = fs::read_to_string(&alphabet_out).unwrap();
    for line in alphabet.lines() {
        assert_eq!(line.chars().count(), 1);
    }
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.contains("coverage"));
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn train_eval_correct_pipeline() {
    let dir = tmp_dir("pipeline");
    let corpus = dir.join("train.txt");
    write_corpus(&corpus);
    let model = dir.join("model.scrnn");
    let curve = dir.join("curve.csv");

    // Tiny but real training run through the full flag surface, with a
    // config file providing values the flags partially override.
    let config_file = dir.join("run.conf");
    fs::write(&config_file, "hidden=12\nepochs=40\nbatch_size=3\n").unwrap();
    let output = run(scrnn()
        .args(["train", "--train"])
        .arg(&corpus)
        .arg("--dev")
        .arg(&corpus)
        .arg("--model")
        .arg(&model)
        .arg("--curve")
        .arg(&curve)
        .arg("--config")
        .arg(&config_file)
        .args([
            "--vocab-size",
            "40",
            "--eval-every",
            "10",
            "--seed",
            "5",
            "--learning-rate",
            "1.0",
            "--threads",
            "1",
        ]));
    assert!(output.status.success(), "{output:?}");
    assert!(model.exists());
    let curve_text = fs::read_to_string(&curve).unwrap();
    assert!(curve_text.starts_with("iteration,train_loss,dev_accuracy\n"));
    assert!(curve_text.lines().count() > 1);

    let output = run(scrnn()
        .args(["eval", "--model"])
        .arg(&model)
        .arg("--test")
        .arg(&corpus)
        .args(["--kind", "jumble", "--seed", "3", "--json"])
        .arg(dir.join("report.json")));
    assert!(output.status.success(), "{output:?}");
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.contains("accuracy="), "{stdout}");
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.join("report.json")).unwrap()).unwrap();
    assert!(json["n_eligible"].as_u64().unwrap() > 0);

    let output = run(scrnn()
        .args(["correct", "--with-baseline", "--model"])
        .arg(&model)
        .arg(&corpus));
    assert!(output.status.success(), "{output:?}");
    let corrected = String::from_utf8(output.stdout).unwrap();
    assert_eq!(corrected.lines().count(), 6, "one output line per sentence");
    for (out_line, in_line) in corrected.lines().zip(fs::read_to_string(&corpus).unwrap().lines())
    {
        assert_eq!(
            out_line.split(' ').count(),
            in_line.split(' ').count(),
            "token counts must match"
        );
    }
    let baseline = String::from_utf8(output.stderr).unwrap();
    assert_eq!(baseline.lines().count(), 6, "baseline lines on stderr");
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn replicate_writes_variant_table() {
    let dir = tmp_dir("replicate");
    let corpus = dir.join("train.txt");
    write_corpus(&corpus);
    let table = dir.join("table.csv");
    let output = run(scrnn()
        .args(["replicate", "--train"])
        .arg(&corpus)
        .arg("--dev")
        .arg(&corpus)
        .arg("--test")
        .arg(&corpus)
        .arg("--output")
        .arg(&table)
        .args([
            "--seeds", "1", "--hidden", "6", "--epochs", "2", "--vocab-size", "30",
            "--batch-size", "3",
        ]));
    assert!(output.status.success(), "{output:?}");
    let csv = fs::read_to_string(&table).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "variant,accuracy,n");
    assert_eq!(lines.len(), 5, "one row per variant");
    for (line, name) in lines[1..].iter().zip(["int", "end", "beg", "all"]) {
        assert!(line.starts_with(&format!("{name},")), "{line}");
    }
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.contains("paired bootstrap p"), "{stdout}");
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn train_is_deterministic_across_runs() {
    let dir = tmp_dir("determinism");
    let corpus = dir.join("train.txt");
    write_corpus(&corpus);
    let model_a = dir.join("a.scrnn");
    let model_b = dir.join("b.scrnn");
    for model in [&model_a, &model_b] {
        let output = run(scrnn()
            .args(["train", "--train"])
            .arg(&corpus)
            .arg("--dev")
            .arg(&corpus)
            .arg("--model")
            .arg(model)
            .args([
                "--hidden", "8", "--epochs", "3", "--vocab-size", "30", "--seed", "9",
                "--batch-size", "2",
            ]));
        assert!(output.status.success(), "{output:?}");
    }
    assert_eq!(
        fs::read(&model_a).unwrap(),
        fs::read(&model_b).unwrap(),
        "identical seeds and configs must produce bit-identical model files"
    );
    fs::remove_dir_all(&dir).ok();
}
