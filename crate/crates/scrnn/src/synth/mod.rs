//! Deterministic synthetic corpus generator.
//!
//! Produces pre-tokenized English-like sentences from a fixed word inventory
//! and template set, with Zipf-distributed word choice. The inventory front-
//! loads the demo passage's vocabulary and a set of anagram families, so
//! models trained on this corpus face the same confusions (form/from,
//! stop/post/tops, views/wives) that real text produces. Output is fully
//! determined by the seed.

mod words;

use rand::RngExt;
use rand_chacha::ChaCha12Rng;

use crate::corpus::Corpus;
use crate::rng::{self, DOMAIN_SYNTH};

/// Verbs whose final consonant doubles before -ed/-ing.
const DOUBLED: &[&str] = &["stop", "trap", "plan", "star", "emit", "chat", "stir"];

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

fn plural(noun: &str) -> String {
    match noun {
        "man" => return "men".into(),
        "woman" => return "women".into(),
        "child" => return "children".into(),
        "person" => return "people".into(),
        "sheep" => return "sheep".into(),
        "wife" => return "wives".into(),
        _ => {}
    }
    let last = noun.chars().last().unwrap_or('x');
    if noun.ends_with('s')
        || noun.ends_with('x')
        || noun.ends_with('z')
        || noun.ends_with("ch")
        || noun.ends_with("sh")
    {
        format!("{noun}es")
    } else if last == 'y' && !noun.chars().rev().nth(1).map(is_vowel).unwrap_or(true) {
        format!("{}ies", &noun[..noun.len() - 1])
    } else {
        format!("{noun}s")
    }
}

fn third_person(verb: &str) -> String {
    plural(verb) // same orthography
}

fn past(verb: &str) -> String {
    if verb == "read" {
        return "read".into();
    }
    if DOUBLED.contains(&verb) {
        let last = verb.chars().last().unwrap();
        return format!("{verb}{last}ed");
    }
    let last = verb.chars().last().unwrap_or('x');
    if last == 'e' {
        format!("{verb}d")
    } else if last == 'y' && !verb.chars().rev().nth(1).map(is_vowel).unwrap_or(true) {
        format!("{}ied", &verb[..verb.len() - 1])
    } else {
        format!("{verb}ed")
    }
}

fn gerund(verb: &str) -> String {
    if DOUBLED.contains(&verb) {
        let last = verb.chars().last().unwrap();
        return format!("{verb}{last}ing");
    }
    if verb.ends_with('e') && !verb.ends_with("ee") {
        format!("{}ing", &verb[..verb.len() - 1])
    } else {
        format!("{verb}ing")
    }
}

/// One slot of a sentence template.
#[derive(Clone, Copy)]
enum Slot {
    /// Literal token.
    L(&'static str),
    /// Singular noun.
    N,
    /// Plural noun.
    Ns,
    /// Base verb.
    V,
    /// Third-person verb.
    Vs,
    /// Past-tense verb.
    Vp,
    /// Gerund.
    Vg,
    Adj,
    Adv,
    Name,
    Num,
}

use Slot::*;

const TEMPLATES: &[&[Slot]] = &[
    &[L("the"), Adj, N, Vp, L("the"), N, L(".")],
    &[L("According"), L("to"), L("the"), N, L(","), L("the"), N, Vp, Adv, L(".")],
    &[Name, Vp, L("that"), L("the"), N, L("could"), L("not"), V, L("the"), N, L(".")],
    &[
        L("the"), N, L("does"), L("n't"), V, L("the"), N, L("because"), L("the"), N,
        L("is"), Adj, L("."),
    ],
    &[L("there"), L("are"), L("three"), Ns, L("in"), L("the"), N, L(".")],
    &[L("the"), Ns, Vp, L("from"), L("the"), N, L("to"), L("the"), N, L(".")],
    &[L("every"), N, L("has"), L("a"), Adj, N, L(".")],
    &[L("this"), N, L("is"), L("the"), Adj, N, L("in"), L("the"), N, L(".")],
    &[L("once"), L("the"), N, Vp, L(","), L("the"), Ns, Vp, L(".")],
    &[L("the"), N, L("of"), L("the"), N, Vp, L("without"), L("a"), N, L(".")],
    &[Name, L("and"), Name, Vp, L("the"), N, L("near"), L("the"), N, L(".")],
    &[L("the"), N, L("itself"), Vs, L("the"), Adj, N, L(".")],
    &[L("what"), L("the"), N, Vp, L("is"), L("not"), L("the"), Adj, N, L(".")],
    &[L("the"), Adj, N, L("and"), L("the"), Adj, N, Vp, L("again"), L(".")],
    &[L("in"), L("the"), N, L(","), L("the"), Ns, L("are"), Adj, L(".")],
    &[L("the"), N, Vp, L("the"), Ns, L("that"), Vp, L("the"), N, L(".")],
    &[Name, L("'s"), N, Vp, L("a"), Adj, N, L("at"), L("the"), N, L(".")],
    &[L("the"), Ns, L("at"), Name, L("University"), Vp, L("the"), N, L(".")],
    &[L("the"), N, L("read"), L("the"), L("whole"), N, L("yesterday"), L(".")],
    &[L("it"), L("does"), L("n't"), V, L("what"), L("the"), N, Vs, L(".")],
    &[
        L("the"), L("first"), N, L("and"), L("the"), L("last"), N, L("are"), L("at"),
        L("the"), L("right"), N, L("."),
    ],
    &[L("the"), N, L("can"), L("still"), V, L("the"), N, L("without"), L("a"), N, L(".")],
    &[L("the"), Adj, N, Vp, L(","), L("but"), L("the"), N, Vp, Adv, L(".")],
    &[Num, Ns, Vp, L("the"), N, L("in"), Num, L(".")],
    &[L("a"), N, L("is"), L("a"), N, L(","), L("not"), L("a"), N, L(".")],
    &[L("the"), N, Vs, L("the"), N, L("every"), N, L(".")],
    &[L("the"), Ns, L("of"), Name, Vp, L("the"), Adj, N, L(".")],
    &[L("because"), L("the"), N, L("was"), Adj, L(","), L("the"), N, Vp, L(".")],
    &[L("the"), N, L("must"), V, L("the"), N, L("before"), L("the"), N, Vs, L(".")],
    &[L("the"), N, Vg, L("the"), N, Vp, L("the"), N, L(".")],
    &[L("she"), Vp, L("the"), N, L("and"), Vp, L("the"), N, L(".")],
    &[L("he"), Vp, L("the"), Adj, N, L("this"), N, L(".")],
    &[L("the"), N, L("is"), L("only"), L("a"), N, L("of"), L("the"), N, L(".")],
    &[L("they"), Vp, L("a"), Adj, N, L("for"), L("the"), N, L(".")],
    &[L("the"), N, L("can"), V, L("it"), L("without"), L("problem"), L(".")],
    &[Ns, Vp, L("the"), N, L(".")],
    &[Adj, Ns, L("are"), Adv, Adj, L(".")],
    &[L("the"), N, L("was"), L("a"), L("total"), N, L(".")],
];

/// Zipf-ranked sampler over one word list.
struct Ranked {
    words: Vec<&'static str>,
    cumulative: Vec<f64>,
}

impl Ranked {
    fn new(list: &[&'static str], exponent: f64) -> Self {
        // Keep first occurrence of any duplicate so ranks stay meaningful.
        let mut seen = std::collections::HashSet::new();
        let words: Vec<&'static str> = list
            .iter()
            .copied()
            .filter(|w| seen.insert(*w))
            .collect();
        let mut cumulative = Vec::with_capacity(words.len());
        let mut acc = 0.0f64;
        for rank in 0..words.len() {
            acc += 1.0 / ((rank + 3) as f64).powf(exponent);
            cumulative.push(acc);
        }
        Ranked { words, cumulative }
    }

    fn sample(&self, rng: &mut ChaCha12Rng) -> &'static str {
        let total = *self.cumulative.last().expect("non-empty list");
        let u = rng.random::<f64>() * total;
        let idx = self.cumulative.partition_point(|&c| c < u);
        self.words[idx.min(self.words.len() - 1)]
    }
}

/// Deterministic sentence generator.
pub struct Generator {
    rng: ChaCha12Rng,
    nouns: Ranked,
    verbs: Ranked,
    adjectives: Ranked,
    adverbs: Ranked,
    names: Ranked,
    numbers: Ranked,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        let exponent = 0.75;
        Generator {
            rng: rng::stream(seed, DOMAIN_SYNTH, 0, 0),
            nouns: Ranked::new(words::NOUNS, exponent),
            verbs: Ranked::new(words::VERBS, exponent),
            adjectives: Ranked::new(words::ADJECTIVES, exponent),
            adverbs: Ranked::new(words::ADVERBS, exponent),
            names: Ranked::new(words::NAMES, exponent),
            numbers: Ranked::new(words::NUMBERS, 0.5),
        }
    }

    fn fill(&mut self, slot: Slot) -> String {
        match slot {
            L(s) => s.to_string(),
            N => self.nouns.sample(&mut self.rng).to_string(),
            Ns => plural(self.nouns.sample(&mut self.rng)),
            V => self.verbs.sample(&mut self.rng).to_string(),
            Vs => third_person(self.verbs.sample(&mut self.rng)),
            Vp => past(self.verbs.sample(&mut self.rng)),
            Vg => gerund(self.verbs.sample(&mut self.rng)),
            Adj => self.adjectives.sample(&mut self.rng).to_string(),
            Adv => self.adverbs.sample(&mut self.rng).to_string(),
            Name => self.names.sample(&mut self.rng).to_string(),
            Num => {
                // Half the number tokens are synthesized years, giving the
                // vocabulary a realistic digit-bearing tail.
                if self.rng.random::<f64>() < 0.5 {
                    format!("19{:02}", self.rng.random_range(0..100))
                } else {
                    self.numbers.sample(&mut self.rng).to_string()
                }
            }
        }
    }

    /// One tokenized sentence; the first token is capitalized.
    pub fn sentence(&mut self) -> Vec<String> {
        let template = TEMPLATES[self.rng.random_range(0..TEMPLATES.len())];
        let mut tokens: Vec<String> = template.iter().map(|&s| self.fill(s)).collect();
        if let Some(first) = tokens.first_mut() {
            let mut chars = first.chars();
            if let Some(c) = chars.next() {
                if c.is_ascii_lowercase() {
                    *first = c.to_ascii_uppercase().to_string() + chars.as_str();
                }
            }
        }
        tokens
    }

    /// Space-joined sentences totalling at least `target_tokens` tokens.
    pub fn lines(&mut self, target_tokens: usize) -> Vec<String> {
        let mut lines = Vec::new();
        let mut tokens = 0usize;
        while tokens < target_tokens {
            let sentence = self.sentence();
            tokens += sentence.len();
            lines.push(sentence.join(" "));
        }
        lines
    }
}

/// Convenience: a labeled-ready corpus of at least `target_tokens` tokens.
pub fn generate_corpus(target_tokens: usize, seed: u64) -> Corpus {
    Corpus::from_lines(Generator::new(seed).lines(target_tokens))
}

/// Train/dev/test splits from independent streams of the same distribution.
pub fn generate_splits(
    train_tokens: usize,
    dev_tokens: usize,
    test_tokens: usize,
    seed: u64,
) -> (Corpus, Corpus, Corpus) {
    (
        generate_corpus(train_tokens, seed),
        generate_corpus(dev_tokens, seed.wrapping_add(1)),
        generate_corpus(test_tokens, seed.wrapping_add(2)),
    )
}
