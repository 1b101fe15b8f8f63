//! Bag-of-words topic classifier built on the CNOT adder circuits.
//!
//! Training counts (word, topic) co-occurrences and stores them as
//! accumulated rotation angles, one small increment per occurrence. A
//! phrase is scored against a topic by rotating one qubit per
//! in-vocabulary word through its accumulated angle and collecting all of
//! them into a scoring qubit with CNOTs; the topic whose scoring qubit is
//! most likely to read 1 wins. Topics never share qubits, so each topic's
//! subcircuit is simulated independently; this is exactly equivalent to
//! the single large register and keeps the working set small.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gates::{GeneratorKind, GeneratorTag};
use crate::sim::{CircuitOp, StateVector, MAX_QUBITS};

/// Model file format version.
pub const MODEL_FORMAT_VERSION: u32 = 1;

/// One labeled training or test phrase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusRecord {
    pub topic: String,
    pub words: Vec<String>,
}

/// A list of (topic, phrase) records.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    records: Vec<CorpusRecord>,
}

impl Corpus {
    pub fn from_records(records: Vec<CorpusRecord>) -> Result<Self> {
        if records.is_empty() {
            return Err(Error::EmptyCorpus);
        }
        Ok(Self { records })
    }

    /// Parses the corpus file format: UTF-8 text, one `topic<TAB>phrase`
    /// record per line, lines starting with `#` ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut records = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((topic, phrase)) = line.split_once('\t') else {
                return Err(Error::CorpusLine {
                    line: line_no,
                    reason: "expected topic<TAB>phrase".to_string(),
                });
            };
            let topic = topic.trim();
            if topic.is_empty() {
                return Err(Error::CorpusLine {
                    line: line_no,
                    reason: "empty topic".to_string(),
                });
            }
            let words = tokenize(phrase);
            if words.is_empty() {
                return Err(Error::CorpusLine {
                    line: line_no,
                    reason: "phrase has no word tokens".to_string(),
                });
            }
            records.push(CorpusRecord {
                topic: topic.to_string(),
                words,
            });
        }
        Self::from_records(records)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn records(&self) -> &[CorpusRecord] {
        &self.records
    }

    /// Topic labels in order of first appearance.
    pub fn topics(&self) -> Vec<String> {
        let mut seen = BTreeSet::new();
        let mut topics = Vec::new();
        for r in &self.records {
            if seen.insert(r.topic.clone()) {
                topics.push(r.topic.clone());
            }
        }
        topics
    }
}

/// Lowercases and splits on whitespace and ASCII punctuation.
pub fn tokenize(phrase: &str) -> Vec<String> {
    phrase
        .split(|c: char| c.is_whitespace() || c.is_ascii_punctuation())
        .filter(|t| !t.is_empty())
        .map(|t| t.to_lowercase())
        .collect()
}

/// Number of phrases of each topic containing each word. With `dedupe`
/// a phrase counts each of its words once; without it every occurrence
/// counts.
fn word_topic_counts(
    corpus: &Corpus,
    topics: &[String],
    dedupe: bool,
) -> std::collections::BTreeMap<String, Vec<u64>> {
    let mut counts: std::collections::BTreeMap<String, Vec<u64>> = Default::default();
    for record in corpus.records() {
        let topic_idx = topics
            .iter()
            .position(|t| *t == record.topic)
            .expect("topics cover the corpus");
        let mut once = BTreeSet::new();
        for w in &record.words {
            if dedupe && !once.insert(w.clone()) {
                continue;
            }
            counts
                .entry(w.clone())
                .or_insert_with(|| vec![0; topics.len()])[topic_idx] += 1;
        }
    }
    counts
}

/// Ranks the corpus vocabulary by salience and keeps the top `size`
/// words.
///
/// Salience of a word is the largest deviation of its per-topic count
/// from its mean count over topics, so words spread evenly across topics
/// score zero and words concentrated in one topic score highest. Ties
/// break lexicographically.
pub fn build_vocabulary(corpus: &Corpus, size: usize) -> Result<Vec<String>> {
    if size == 0 {
        return Err(Error::ZeroVocabularySize);
    }
    let topics = corpus.topics();
    if topics.len() < 2 {
        return Err(Error::SingleTopicCorpus {
            topic: topics.first().cloned().unwrap_or_default(),
        });
    }
    let counts = word_topic_counts(corpus, &topics, true);
    let mut ranked: Vec<(String, f64)> = counts
        .into_iter()
        .map(|(word, per_topic)| {
            let mean = per_topic.iter().sum::<u64>() as f64 / per_topic.len() as f64;
            let salience = per_topic
                .iter()
                .map(|&c| (c as f64 - mean).abs())
                .fold(0.0, f64::max);
            (word, salience)
        })
        .collect();
    ranked.sort_by(|(wa, sa), (wb, sb)| sb.partial_cmp(sa).unwrap().then_with(|| wa.cmp(wb)));
    ranked.truncate(size);
    Ok(ranked.into_iter().map(|(w, _)| w).collect())
}

/// Scoring mode: exact probabilities or seeded shot frequencies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScoreMode {
    Analytic,
    Sampled { shots: u64, seed: u64 },
}

/// Per-(word, topic) accumulated rotation angles plus the vocabulary and
/// generator choice.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassifierModel {
    topics: Vec<String>,
    vocabulary: Vec<String>,
    increment: f64,
    generator: GeneratorKind,
    /// angles[w][t] in radians, vocabulary-major.
    angles: Vec<Vec<f64>>,
    dedupe: bool,
}

impl ClassifierModel {
    pub fn topics(&self) -> &[String] {
        &self.topics
    }

    pub fn vocabulary(&self) -> &[String] {
        &self.vocabulary
    }

    pub fn increment(&self) -> f64 {
        self.increment
    }

    pub fn generator(&self) -> GeneratorKind {
        self.generator
    }

    /// Whether repeated words within a phrase are collapsed to one
    /// occurrence (the default; disabling it exposes the CNOT
    /// cancellation pathology).
    pub fn dedupe(&self) -> bool {
        self.dedupe
    }

    pub fn set_dedupe(&mut self, dedupe: bool) {
        self.dedupe = dedupe;
    }

    pub fn angle(&self, word_idx: usize, topic_idx: usize) -> f64 {
        self.angles[word_idx][topic_idx]
    }

    fn topic_index(&self, topic: &str) -> Result<usize> {
        self.topics
            .iter()
            .position(|t| t == topic)
            .ok_or_else(|| Error::UnknownTopic {
                topic: topic.to_string(),
            })
    }

    /// The per-topic scoring subcircuit for a phrase: one qubit per
    /// distinct in-vocabulary word rotated through its accumulated angle,
    /// then one CNOT per occurrence (or per word with dedupe) into a
    /// fresh scoring qubit. Returns P(scoring qubit = 1).
    pub fn score_topic(&self, words: &[String], topic: &str) -> Result<f64> {
        let topic_idx = self.topic_index(topic)?;
        let s = self.build_topic_state(words, topic_idx)?;
        let sum_qubit = s.n_qubits() - 1;
        s.prob_one(sum_qubit)
    }

    fn topic_ops(&self, words: &[String], topic_idx: usize) -> (usize, Vec<CircuitOp>) {
        // Distinct in-vocabulary words in first-appearance order, with
        // occurrence counts.
        let mut distinct: Vec<(usize, u64)> = Vec::new();
        for w in words {
            let Some(vocab_idx) = self.vocabulary.iter().position(|v| v == w) else {
                continue;
            };
            match distinct.iter_mut().find(|(idx, _)| *idx == vocab_idx) {
                Some((_, count)) => *count += 1,
                None => distinct.push((vocab_idx, 1)),
            }
        }
        let sum_qubit = distinct.len();
        let mut ops = Vec::new();
        for (qubit, (vocab_idx, occurrences)) in distinct.iter().enumerate() {
            let angle = self.angles[*vocab_idx][topic_idx];
            let gate = GeneratorKind::from_angle(self.generator.tag, angle)
                .gate()
                .as_unitary();
            ops.push(CircuitOp::Gate {
                matrix: gate,
                target: qubit,
            });
            let cnots = if self.dedupe { 1 } else { *occurrences };
            for _ in 0..cnots {
                ops.push(CircuitOp::Cnot {
                    control: qubit,
                    target: sum_qubit,
                });
            }
        }
        (sum_qubit + 1, ops)
    }

    fn build_topic_state(&self, words: &[String], topic_idx: usize) -> Result<StateVector> {
        let (n_qubits, ops) = self.topic_ops(words, topic_idx);
        if n_qubits > MAX_QUBITS {
            return Err(Error::QubitCountOutOfRange {
                n: n_qubits,
                max: MAX_QUBITS,
            });
        }
        let mut s = StateVector::new(n_qubits)?;
        s.apply_all(&ops)?;
        Ok(s)
    }

    /// Scores every topic and picks the argmax, with ties broken toward
    /// the first topic in model order and flagged.
    ///
    /// In sampled mode each topic's subcircuit is measured with its own
    /// seed, derived as `seed + topic_index`.
    pub fn classify(&self, words: &[String], mode: ScoreMode) -> Result<ClassificationResult> {
        let mut scores = Vec::with_capacity(self.topics.len());
        for topic_idx in 0..self.topics.len() {
            let s = self.build_topic_state(words, topic_idx)?;
            let sum_qubit = s.n_qubits() - 1;
            let score = match mode {
                ScoreMode::Analytic => s.prob_one(sum_qubit)?,
                ScoreMode::Sampled { shots, seed } => s
                    .sample(sum_qubit, shots, seed.wrapping_add(topic_idx as u64))?
                    .frequency_one(),
            };
            scores.push(score);
        }
        let mut best = 0;
        for (i, &v) in scores.iter().enumerate().skip(1) {
            if v > scores[best] {
                best = i;
            }
        }
        let tie = scores
            .iter()
            .enumerate()
            .any(|(i, &v)| i != best && v == scores[best]);
        Ok(ClassificationResult {
            chosen: self.topics[best].clone(),
            chosen_index: best,
            scores,
            tie,
            mode,
        })
    }

    /// Classifies every record of a labeled corpus and reports accuracy.
    ///
    /// In sampled mode record `r` uses base seed
    /// `seed + r * number_of_topics` so records draw disjoint streams.
    pub fn evaluate(&self, test: &Corpus, mode: ScoreMode) -> Result<Evaluation> {
        let mut records = Vec::with_capacity(test.records().len());
        let mut correct = 0usize;
        for (i, record) in test.records().iter().enumerate() {
            let record_mode = match mode {
                ScoreMode::Analytic => ScoreMode::Analytic,
                ScoreMode::Sampled { shots, seed } => ScoreMode::Sampled {
                    shots,
                    seed: seed.wrapping_add((i * self.topics.len()) as u64),
                },
            };
            let outcome = self.classify(&record.words, record_mode)?;
            if outcome.chosen == record.topic {
                correct += 1;
            }
            records.push(RecordResult {
                expected: record.topic.clone(),
                predicted: outcome.chosen.clone(),
                scores: outcome.scores,
                tie: outcome.tie,
            });
        }
        let accuracy = correct as f64 / records.len() as f64;
        Ok(Evaluation { records, accuracy })
    }

    pub fn to_json(&self) -> String {
        let file = ModelFile {
            format: MODEL_FORMAT_VERSION,
            topics: self.topics.clone(),
            vocabulary: self.vocabulary.clone(),
            increment_radians: self.increment,
            generator: self.generator,
            angles: self.angles.clone(),
        };
        serde_json::to_string_pretty(&file).expect("model serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ModelFile = serde_json::from_str(text).map_err(|e| Error::ModelFormat {
            reason: e.to_string(),
        })?;
        if file.format != MODEL_FORMAT_VERSION {
            return Err(Error::ModelVersion {
                found: file.format,
                expected: MODEL_FORMAT_VERSION,
            });
        }
        if file.angles.len() != file.vocabulary.len()
            || file
                .angles
                .iter()
                .any(|row| row.len() != file.topics.len())
        {
            return Err(Error::ModelFormat {
                reason: format!(
                    "angle matrix must be {} x {}",
                    file.vocabulary.len(),
                    file.topics.len()
                ),
            });
        }
        Ok(Self {
            topics: file.topics,
            vocabulary: file.vocabulary,
            increment: file.increment_radians,
            generator: file.generator,
            angles: file.angles,
            dedupe: true,
        })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

/// Structured text form of the model (JSON-shaped, versioned).
#[derive(Debug, Serialize, Deserialize)]
struct ModelFile {
    format: u32,
    topics: Vec<String>,
    vocabulary: Vec<String>,
    increment_radians: f64,
    generator: GeneratorKind,
    angles: Vec<Vec<f64>>,
}

/// Builds a model from a training corpus: `angle(w, t)` is the increment
/// times the number of topic-`t` phrases containing `w` (once per phrase
/// with `dedupe`, once per occurrence otherwise).
pub fn train(
    corpus: &Corpus,
    increment: f64,
    vocabulary: Vec<String>,
    generator: GeneratorTag,
    dedupe: bool,
) -> Result<ClassifierModel> {
    if increment <= 0.0 || !increment.is_finite() {
        return Err(Error::InvalidIncrement { increment });
    }
    let topics = corpus.topics();
    if topics.len() < 2 {
        return Err(Error::SingleTopicCorpus {
            topic: topics.first().cloned().unwrap_or_default(),
        });
    }
    let counts = word_topic_counts(corpus, &topics, dedupe);
    let angles = vocabulary
        .iter()
        .map(|w| match counts.get(w) {
            Some(per_topic) => per_topic.iter().map(|&c| c as f64 * increment).collect(),
            None => vec![0.0; topics.len()],
        })
        .collect();
    Ok(ClassifierModel {
        topics,
        vocabulary,
        increment,
        generator: GeneratorKind::new(generator, 1.0),
        angles,
        dedupe,
    })
}

/// Outcome of classifying one phrase.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationResult {
    /// P(1) of each topic's scoring qubit, in model topic order.
    pub scores: Vec<f64>,
    pub chosen: String,
    pub chosen_index: usize,
    /// Set when another topic scored exactly the same as the winner.
    pub tie: bool,
    pub mode: ScoreMode,
}

/// Per-record outcome in an evaluation run.
#[derive(Debug, Clone, PartialEq)]
pub struct RecordResult {
    pub expected: String,
    pub predicted: String,
    pub scores: Vec<f64>,
    pub tie: bool,
}

/// Evaluation of a labeled corpus.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub records: Vec<RecordResult>,
    pub accuracy: f64,
}

impl Evaluation {
    /// Report format: one `expected<TAB>predicted<TAB>score,score,...`
    /// line per record, then a final `accuracy=<value>` line.
    pub fn report(&self, precision: usize) -> String {
        let mut out = String::new();
        for r in &self.records {
            let scores = r
                .scores
                .iter()
                .map(|s| format!("{:.p$}", s, p = precision))
                .collect::<Vec<_>>()
                .join(",");
            out.push_str(&format!("{}\t{}\t{}\n", r.expected, r.predicted, scores));
        }
        out.push_str(&format!("accuracy={:.p$}\n", self.accuracy, p = precision));
        out
    }
}
