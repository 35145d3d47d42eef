//! Verb lexicon: loading, validation, and stem arithmetic.
//!
//! Past stems are derived from infinitives; present stems are lexical data
//! (weak suppletive allomorphs that no phonological rule predicts). Passive
//! stems are derived from the present stem of a transitive verb.

use crate::features::Voice;
use crate::morph::{Role, StemTense};
use crate::phonology::{realize_parts, Part, RuleOrder};
use std::collections::BTreeMap;
use thiserror::Error;

/// Past stem derivational suffixes, longest first. `dira` is the passive
/// past marker, included so passive stems decompose over their roots.
pub const PAST_SUFFIXES: [&str; 14] = [
    "dira", "and", "ard", "îşt", "îrd", "ird", "a", "d", "ê", "î", "t", "û", "y", "",
];

/// Present stem derivational suffixes, longest first. `dirê` is the passive
/// present marker.
pub const PRESENT_SUFFIXES: [&str; 6] = ["dirê", "ên", "êr", "e", "ê", ""];

/// Verbal particles.
pub const VERBAL_PARTICLES: [&str; 8] = ["ber", "da", "der", "hel", "ser", "řa", "řo", "wer"];

/// Absolute adpositions usable as verbal derivational prefixes.
pub const ABSOLUTE_ADPOSITIONS: [&str; 8] =
    ["bo", "lê", "pê", "tê", "wê", "legel", "degel", "letek"];

/// Absolute reciprocal adpositions.
pub const ABSOLUTE_RECIPROCALS: [&str; 4] = ["lêk", "pêk", "têk", "wêk"];

/// Independent and affixed pronouns, southern variety: (cell, independent,
/// affixed).
pub const PRONOUNS_SOUTHERN: [(&str, &str, &str); 6] = [
    ("1SG", "min", "im"),
    ("2SG", "to", "it"),
    ("3SG", "ew", "î"),
    ("1PL", "ême", "man"),
    ("2PL", "êwe", "tan"),
    ("3PL", "ewan", "yan"),
];

/// Independent pronouns, northern varieties: (cell, nominative, other cases).
pub const PRONOUNS_NORTHERN: [(&str, &str, &str); 6] = [
    ("1SG", "emin", "min"),
    ("2SG", "eto", "to"),
    ("3SG", "ew", "wî"),
    ("1PL", "ême", "me"),
    ("2PL", "engo", "ingo"),
    ("3PL", "ewan", "wan"),
];

/// Primary prepositions: (simple, absolute, gloss). Empty absolute means the
/// preposition has no absolute form.
pub const PREPOSITIONS: [(&str, &str, &str); 8] = [
    ("be", "pê", "with, by, to"),
    ("bê", "", "without"),
    ("bo", "bo", "to, for, towards"),
    ("de", "tê", "at, in"),
    ("le", "lê", "from, in"),
    ("legel", "legel", "with"),
    ("ře", "", "with"),
    ("we", "wê", "to"),
];

/// Postpositions: (form, gloss).
pub const POSTPOSITIONS: [(&str, &str); 3] = [("da", "in"), ("řa", "from"), ("ewe", "from")];

/// Reciprocal adpositions: (simple, absolute, gloss).
pub const RECIPROCALS: [(&str, &str, &str); 4] = [
    ("le yek", "lêk", "from each other"),
    ("be yek", "pêk", "to each other"),
    ("de yek", "têk", "in each other"),
    ("we yek", "wêk", "to/with each other"),
];

/// Every form usable as a verbal derivational prefix.
pub fn derivational_prefixes() -> Vec<&'static str> {
    VERBAL_PARTICLES
        .iter()
        .chain(ABSOLUTE_ADPOSITIONS.iter())
        .chain(ABSOLUTE_RECIPROCALS.iter())
        .copied()
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexeme {
    /// Infinitive citation form, particle included.
    pub lemma: String,
    /// Root alternates; any alternate counts as the root.
    pub roots: Vec<String>,
    pub past_stem: String,
    pub present_stem: String,
    pub transitive: bool,
    pub voice: Voice,
    pub particle: Option<String>,
    /// Whole-surface overrides for listed exceptional cells, e.g.
    /// `IMP.2SG=biço`.
    pub irregulars: BTreeMap<String, String>,
    /// The lemma carries a lexicalized -ewe (e.g. XWARDINEWE).
    pub lexical_ewe: bool,
}

impl Lexeme {
    /// Citation form in small caps convention for glosses.
    pub fn gloss_tag(&self) -> String {
        self.lemma.to_uppercase()
    }
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("line {line}: expected at least 5 tab-separated columns, got {got}")]
    Malformed { line: usize, got: usize },
    #[error("line {line}, column {column}: {message}")]
    BadField {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: duplicate lemma {lemma}")]
    Duplicate { line: usize, lemma: String },
    #[error("line {line}, lexeme {lemma}: {message}")]
    Invariant {
        line: usize,
        lemma: String,
        message: String,
    },
}

#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    entries: Vec<Lexeme>,
    by_lemma: BTreeMap<String, usize>,
    by_past: BTreeMap<String, Vec<usize>>,
    by_present: BTreeMap<String, Vec<usize>>,
}

impl Lexicon {
    /// The embedded seed lexicon.
    pub fn seed() -> Lexicon {
        Lexicon::parse(include_str!("../data/lexicon.tsv"))
            .expect("embedded lexicon is valid")
    }

    pub fn parse(text: &str) -> Result<Lexicon, LexiconError> {
        let mut lex = Lexicon::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim_end_matches(['\r', '\n']);
            if trimmed.trim().is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = trimmed.split('\t').collect();
            if cols.len() < 5 {
                return Err(LexiconError::Malformed {
                    line,
                    got: cols.len(),
                });
            }
            let lemma = crate::alphabet::normalize(cols[0].trim());
            let roots: Vec<String> = cols[1]
                .split('/')
                .map(|r| crate::alphabet::normalize(r.trim()))
                .filter(|r| !r.is_empty())
                .collect();
            if roots.is_empty() {
                return Err(LexiconError::BadField {
                    line,
                    column: 2,
                    message: "no root given".to_string(),
                });
            }
            let past_stem = crate::alphabet::normalize(cols[2].trim());
            let present_stem = crate::alphabet::normalize(cols[3].trim());
            let transitive = match cols[4].trim() {
                "transitive" => true,
                "intransitive" => false,
                other => {
                    return Err(LexiconError::BadField {
                        line,
                        column: 5,
                        message: format!("unknown transitivity {other:?}"),
                    })
                }
            };
            let particle = cols
                .get(5)
                .map(|p| p.trim())
                .filter(|p| !p.is_empty())
                .map(str::to_string);
            if let Some(p) = &particle {
                if !derivational_prefixes().contains(&p.as_str()) {
                    return Err(LexiconError::BadField {
                        line,
                        column: 6,
                        message: format!("unknown verbal particle {p:?}"),
                    });
                }
            }
            let mut irregulars = BTreeMap::new();
            if let Some(raw) = cols.get(6).map(|c| c.trim()).filter(|c| !c.is_empty()) {
                for pair in raw.split(';') {
                    let (slot, form) =
                        pair.split_once('=').ok_or_else(|| LexiconError::BadField {
                            line,
                            column: 7,
                            message: format!("irregular entry {pair:?} lacks '='"),
                        })?;
                    irregulars.insert(slot.trim().to_string(), form.trim().to_string());
                }
            }

            let voice = if lemma.ends_with("diran")
                && past_stem.ends_with("dira")
                && present_stem.ends_with("dirê")
            {
                Voice::Passive
            } else {
                Voice::Active
            };

            let base_inf = realize_infinitive(particle.as_deref(), &past_stem, false);
            let ewe_inf = realize_infinitive(particle.as_deref(), &past_stem, true);
            let lexical_ewe = if lemma == base_inf {
                false
            } else if lemma == ewe_inf {
                true
            } else {
                return Err(LexiconError::Invariant {
                    line,
                    lemma: lemma.clone(),
                    message: format!(
                        "lemma does not match realized infinitive {base_inf:?}"
                    ),
                });
            };

            let entry = Lexeme {
                lemma: lemma.clone(),
                roots,
                past_stem,
                present_stem,
                transitive,
                voice,
                particle,
                irregulars,
                lexical_ewe,
            };
            validate_roots(&entry).map_err(|message| LexiconError::Invariant {
                line,
                lemma: lemma.clone(),
                message,
            })?;

            if lex.by_lemma.contains_key(&lemma) {
                return Err(LexiconError::Duplicate { line, lemma });
            }
            let idx = lex.entries.len();
            lex.by_lemma.insert(lemma, idx);
            lex.by_past
                .entry(entry.past_stem.clone())
                .or_default()
                .push(idx);
            lex.by_present
                .entry(entry.present_stem.clone())
                .or_default()
                .push(idx);
            lex.entries.push(entry);
        }
        Ok(lex)
    }

    pub fn get(&self, lemma: &str) -> Option<&Lexeme> {
        self.by_lemma.get(lemma).map(|&i| &self.entries[i])
    }

    pub fn by_past_stem(&self, stem: &str) -> Vec<&Lexeme> {
        self.by_past
            .get(stem)
            .map(|v| v.iter().map(|&i| &self.entries[i]).collect())
            .unwrap_or_default()
    }

    pub fn by_present_stem(&self, stem: &str) -> Vec<&Lexeme> {
        self.by_present
            .get(stem)
            .map(|v| v.iter().map(|&i| &self.entries[i]).collect())
            .unwrap_or_default()
    }

    /// Lexemes in load order.
    pub fn iter(&self) -> impl Iterator<Item = &Lexeme> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Some root alternate must appear among the decompositions of each stem.
fn validate_roots(entry: &Lexeme) -> Result<(), String> {
    let past_roots: Vec<String> = decompose_stem(&entry.past_stem, StemTense::Past)
        .into_iter()
        .map(|(r, _)| r)
        .collect();
    let present_roots: Vec<String> = decompose_stem(&entry.present_stem, StemTense::Present)
        .into_iter()
        .map(|(r, _)| r)
        .collect();
    if !entry.roots.iter().any(|r| past_roots.contains(r)) {
        return Err(format!(
            "no root alternate decomposes the past stem {:?} (roots found: {:?})",
            entry.past_stem, past_roots
        ));
    }
    if !entry.roots.iter().any(|r| present_roots.contains(r)) {
        return Err(format!(
            "no root alternate decomposes the present stem {:?} (roots found: {:?})",
            entry.present_stem, present_roots
        ));
    }
    Ok(())
}

fn realize_infinitive(particle: Option<&str>, past_stem: &str, ewe: bool) -> String {
    let mut parts = Vec::new();
    if let Some(p) = particle {
        parts.push(Part::new(p, Role::Particle));
    }
    parts.push(Part::new(past_stem, Role::Root));
    parts.push(Part::new("in", Role::Infinitive));
    if ewe {
        parts.push(Part::new("ewe", Role::Repetition));
    }
    realize_parts(&parts, &RuleOrder::default()).surface
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StemError {
    #[error("{0:?} is not analyzable as a stem plus the infinitive suffix")]
    NotAnInfinitive(String),
}

/// Strips the infinitive suffix: -in after a consonant, its reduced -n after
/// a vowel.
pub fn derive_past_stem(infinitive: &str) -> Result<String, StemError> {
    let inf = crate::alphabet::normalize(infinitive);
    let chars: Vec<char> = inf.chars().collect();
    let n = chars.len();
    if n >= 3 && chars[n - 1] == 'n' && chars[n - 2] == 'i' && !crate::alphabet::is_vowel(chars[n - 3])
    {
        let stem: String = chars[..n - 2].iter().collect();
        if realize_infinitive(None, &stem, false) == inf {
            return Ok(stem);
        }
    }
    if n >= 2 && chars[n - 1] == 'n' && crate::alphabet::is_vowel(chars[n - 2]) {
        let stem: String = chars[..n - 1].iter().collect();
        if realize_infinitive(None, &stem, false) == inf {
            return Ok(stem);
        }
    }
    Err(StemError::NotAnInfinitive(inf))
}

/// All (root, suffix) decompositions of a stem over the suffix inventory,
/// longest suffix first. Roots are recovered through the cascade, so elided
/// material (GE + îşt = geyîşt) is restored.
pub fn decompose_stem(stem: &str, tense: StemTense) -> Vec<(String, String)> {
    let stem = crate::alphabet::normalize(stem);
    let suffixes: &[&str] = match tense {
        StemTense::Past => &PAST_SUFFIXES,
        StemTense::Present => &PRESENT_SUFFIXES,
    };
    let chars: Vec<char> = stem.chars().collect();
    let mut out: Vec<(String, String)> = Vec::new();
    for &suffix in suffixes {
        if suffix.is_empty() {
            out.push((stem.clone(), String::new()));
            continue;
        }
        // Candidate roots: every proper prefix, with or without a restored
        // final i.
        for i in 1..chars.len() {
            let prefix: String = chars[..i].iter().collect();
            for root in [prefix.clone(), format!("{prefix}i")] {
                let parts = [
                    Part::new(&root, Role::Root),
                    Part::new(suffix, Role::StemSuffix(tense)),
                ];
                if realize_parts(&parts, &RuleOrder::default()).surface == stem
                    && !out.iter().any(|(r, s)| *r == root && s == suffix)
                {
                    out.push((root, suffix.to_string()));
                }
            }
        }
    }
    out
}

/// Passive stems from the present stem of a transitive verb.
pub fn derive_passive_stems(present_stem: &str) -> (String, String) {
    (format!("{present_stem}dira"), format!("{present_stem}dirê"))
}

/// Passive infinitive from the present stem of a transitive verb.
pub fn derive_passive_infinitive(present_stem: &str) -> String {
    format!("{present_stem}diran")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_lexicon_loads() {
        let lex = Lexicon::seed();
        assert_eq!(lex.len(), 30);
        let girtin = lex.get("girtin").unwrap();
        assert!(girtin.transitive);
        assert_eq!(girtin.past_stem, "girt");
        assert_eq!(girtin.roots, ["gir", "gi"]);
        let cun = lex.get("çûn").unwrap();
        assert_eq!(cun.irregulars.get("IMP.2SG").map(String::as_str), Some("biço"));
        let xwe = lex.get("xwardinewe").unwrap();
        assert!(xwe.lexical_ewe);
        assert!(!lex.get("xwardin").unwrap().lexical_ewe);
        let pasv = lex.get("hêndiran").unwrap();
        assert_eq!(pasv.voice, Voice::Passive);
        assert!(!pasv.transitive);
    }

    #[test]
    fn past_stem_derivation() {
        assert_eq!(derive_past_stem("birdin").unwrap(), "bird");
        assert_eq!(derive_past_stem("kêlan").unwrap(), "kêla");
        assert_eq!(derive_past_stem("çûn").unwrap(), "çû");
        assert_eq!(derive_past_stem("man").unwrap(), "ma");
        assert!(derive_past_stem("gir").is_err());
    }

    #[test]
    fn table_of_stems_round_trips() {
        // Every seed entry rebuilds its lemma from the past stem.
        let lex = Lexicon::seed();
        for e in lex.iter() {
            let inf = realize_infinitive(e.particle.as_deref(), &e.past_stem, e.lexical_ewe);
            assert_eq!(inf, e.lemma);
            if e.particle.is_none() && !e.lexical_ewe {
                assert_eq!(derive_past_stem(&e.lemma).unwrap(), e.past_stem);
            }
        }
    }

    #[test]
    fn stem_decomposition() {
        let d = decompose_stem("sûtand", StemTense::Past);
        assert!(d.contains(&("sût".to_string(), "and".to_string())));
        assert!(d.contains(&("sûtand".to_string(), "".to_string())));
        assert!(d.contains(&("sûtan".to_string(), "d".to_string())));
        let d = decompose_stem("kewt", StemTense::Past);
        assert!(d.contains(&("kew".to_string(), "t".to_string())));
        let d = decompose_stem("sûtên", StemTense::Present);
        assert!(d.contains(&("sût".to_string(), "ên".to_string())));
        // Elided material is restored through the cascade.
        let d = decompose_stem("geyîşt", StemTense::Past);
        assert!(d.contains(&("ge".to_string(), "îşt".to_string())));
        let d = decompose_stem("çû", StemTense::Past);
        assert!(d.contains(&("çi".to_string(), "û".to_string())));
        let d = decompose_stem("bird", StemTense::Past);
        assert!(d.contains(&("bi".to_string(), "ird".to_string())));
    }

    #[test]
    fn passive_stems() {
        assert_eq!(
            derive_passive_stems("hên"),
            ("hêndira".to_string(), "hêndirê".to_string())
        );
        assert_eq!(derive_passive_infinitive("kêl"), "kêldiran");
        let lex = Lexicon::seed();
        for e in lex.iter().filter(|e| e.transitive && e.particle.is_none()) {
            let (pa, pr) = derive_passive_stems(&e.present_stem);
            assert!(pa.ends_with('a'));
            assert!(pr.ends_with('ê'));
        }
    }

    #[test]
    fn load_errors_carry_position() {
        let err = Lexicon::parse("girtin\tgir\tgirt\n").unwrap_err();
        assert!(matches!(err, LexiconError::Malformed { line: 1, got: 3 }));
        let err =
            Lexicon::parse("girtin\tgir\tgirt\tgir\tditransitive\n").unwrap_err();
        assert!(matches!(err, LexiconError::BadField { line: 1, column: 5, .. }));
        let two = "girtin\tgir\tgirt\tgir\ttransitive\ngirtin\tgir\tgirt\tgir\ttransitive\n";
        let err = Lexicon::parse(two).unwrap_err();
        assert!(matches!(err, LexiconError::Duplicate { line: 2, .. }));
        let err = Lexicon::parse("girtin\tgir\tkewt\tgir\ttransitive\n").unwrap_err();
        assert!(matches!(err, LexiconError::Invariant { line: 1, .. }));
    }

    #[test]
    fn static_tables() {
        assert_eq!(PRONOUNS_SOUTHERN[5], ("3PL", "ewan", "yan"));
        assert_eq!(RECIPROCALS[1].1, "pêk");
        assert!(derivational_prefixes().contains(&"hel"));
        assert!(derivational_prefixes().contains(&"têk"));
    }
}
