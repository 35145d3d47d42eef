//! Surface-form analysis by exhaustive generation and indexing.
//!
//! The index enumerates every valid feature bundle and free-variant choice
//! for every lexicon entry, realizes each one, and maps the surface back to
//! its analyses. Lookup is therefore the exact inverse of generation.

use crate::alphabet::{is_vowel, normalize};
use crate::features::{enumerate_bundles, FeatureBundle, Voice};
use crate::lexicon::Lexicon;
use crate::morph::MorphemeSequence;
use crate::phonology::{realize, unrealize, UnrealizeConfig, UnrealizeResult};
use crate::verb::{generate_verb_opts, VariantOpts};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    pub lemma: String,
    pub bundle: FeatureBundle,
    pub opts: VariantOpts,
    pub sequence: MorphemeSequence,
    /// A trailing emphasis clitic was stripped before lookup.
    pub emphasis: bool,
}

impl Analysis {
    pub fn underlying(&self) -> String {
        let mut s = self.sequence.underlying();
        if self.emphasis {
            s.push_str("·îş");
        }
        s
    }

    /// Segmented form and gloss line, Leipzig style.
    pub fn gloss(&self) -> (String, String) {
        let mut seg = self.sequence.leipzig();
        let mut tags = self.sequence.glosses();
        if self.emphasis {
            seg.push_str("=îş");
            tags.push_str("-EMPH");
        }
        (seg, tags)
    }

    pub fn feature_string(&self) -> String {
        let mut s = self.bundle.feature_string();
        if self.emphasis {
            s.push_str(" emph");
        }
        s
    }
}

pub struct Analyzer {
    index: BTreeMap<String, Vec<Analysis>>,
}

impl Analyzer {
    /// Builds the full surface index for a lexicon.
    pub fn build(lexicon: &Lexicon) -> Analyzer {
        let mut index: BTreeMap<String, Vec<Analysis>> = BTreeMap::new();
        for lex in lexicon.iter() {
            let passive = lex.voice == Voice::Passive;
            for bundle in enumerate_bundles(lex.transitive, passive) {
                let mask = VariantOpts::relevant_bits(&bundle);
                let mut seen = Vec::new();
                for bits in 0..1 << VariantOpts::ALL_FLAGS {
                    if bits & !mask != 0 {
                        continue;
                    }
                    let opts = VariantOpts::from_bits(bits);
                    let Ok(seq) = generate_verb_opts(lex, &bundle, &opts) else {
                        continue;
                    };
                    let surface = realize(&seq).surface;
                    let key = (surface.clone(), seq.underlying());
                    if seen.contains(&key) {
                        continue;
                    }
                    seen.push(key);
                    index.entry(surface).or_default().push(Analysis {
                        lemma: lex.lemma.clone(),
                        bundle: bundle.clone(),
                        opts,
                        sequence: seq,
                        emphasis: false,
                    });
                }
            }
        }
        Analyzer { index }
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn surfaces(&self) -> impl Iterator<Item = &str> {
        self.index.keys().map(String::as_str)
    }

    /// All analyses of a word. A trailing emphasis clitic (îş, or ş after a
    /// vowel) is peeled off if the remainder is itself analyzable.
    pub fn analyze(&self, word: &str) -> Vec<Analysis> {
        let word = normalize(word);
        let mut out = self.index.get(&word).cloned().unwrap_or_default();
        for host in emphasis_hosts(&word) {
            if let Some(hits) = self.index.get(&host) {
                out.extend(hits.iter().cloned().map(|mut a| {
                    a.emphasis = true;
                    a
                }));
            }
        }
        out
    }

    /// Phonological segmentation guesses for out-of-lexicon words.
    pub fn guess(&self, word: &str, cfg: &UnrealizeConfig) -> UnrealizeResult {
        unrealize(word, cfg)
    }
}

fn emphasis_hosts(word: &str) -> Vec<String> {
    let chars: Vec<char> = word.chars().collect();
    let mut out = Vec::new();
    if word.ends_with("îş") && chars.len() > 2 {
        out.push(chars[..chars.len() - 2].iter().collect());
    }
    if word.ends_with('ş') && chars.len() > 1 && is_vowel(chars[chars.len() - 2]) {
        // The vowel swallowed the î of the clitic.
        out.push(chars[..chars.len() - 1].iter().collect());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::features::{Construction, Mood};
    use crate::morph::{Number, PersonNumber};
    use std::sync::OnceLock;

    fn analyzer() -> &'static Analyzer {
        static A: OnceLock<Analyzer> = OnceLock::new();
        A.get_or_init(|| Analyzer::build(&Lexicon::seed()))
    }

    #[test]
    fn finds_gold_forms() {
        let a = analyzer();
        for (surface, lemma) in [
            ("serkewtim", "serkewtin"),
            ("neyanbirdînewe", "birdin"),
            ("girtman", "girtin"),
            ("helhatûwetewe", "helhatin"),
            ("geyîştibûm", "geyîştin"),
            ("daydesûtandîm", "dasûtandin"),
            ("biyanbey", "birdin"),
            ("naxwatewe", "xwardinewe"),
            ("were", "hatin"),
            ("kêldira", "kêldiran"),
        ] {
            let hits = a.analyze(surface);
            assert!(
                hits.iter().any(|h| h.lemma == lemma),
                "{surface}: expected {lemma}, got {:?}",
                hits.iter().map(|h| &h.lemma).collect::<Vec<_>>()
            );
        }
        assert!(a.analyze("qqqq").is_empty());
    }

    #[test]
    fn analyses_regenerate() {
        let a = analyzer();
        let lexicon = Lexicon::seed();
        for surface in ["girtman", "deçûm", "biyanbey", "nemabûyne"] {
            let hits = a.analyze(surface);
            assert!(!hits.is_empty());
            for hit in hits {
                let lex = lexicon.get(&hit.lemma).unwrap();
                let seq = generate_verb_opts(lex, &hit.bundle, &hit.opts).unwrap();
                assert_eq!(realize(&seq).surface, surface);
            }
        }
    }

    #[test]
    fn ambiguity_is_reported() {
        // 2PL and 3PL share the marker form, so girtinin is at least two ways
        // ambiguous.
        let hits = analyzer().analyze("girtmanin");
        let features: Vec<String> = hits.iter().map(|h| h.feature_string()).collect();
        assert!(hits.len() >= 2, "{features:?}");
        assert!(hits
            .iter()
            .all(|h| h.bundle.construction == Construction::SimplePastTr));
        assert!(hits
            .iter()
            .any(|h| h.bundle.patient == Some(PersonNumber::new(2, Number::Pl))));
        assert!(hits
            .iter()
            .any(|h| h.bundle.patient == Some(PersonNumber::new(3, Number::Pl))));
    }

    #[test]
    fn emphasis_is_stripped() {
        let a = analyzer();
        let hits = a.analyze("girtmanîş");
        assert!(hits.iter().any(|h| h.lemma == "girtin" && h.emphasis));
        assert!(a
            .analyze("girtman")
            .iter()
            .all(|h| !h.emphasis));
    }

    #[test]
    fn glosses_are_leipzig() {
        let a = analyzer();
        let hits = a.analyze("deçûm");
        let hit = hits
            .iter()
            .find(|h| h.bundle.construction == Construction::PastProgressiveIntr)
            .unwrap();
        assert_eq!(hit.bundle.mood, Mood::Indicative);
        let (seg, tags) = hit.gloss();
        assert_eq!(seg, "de-çi-û=im");
        assert!(tags.contains("PROG"), "{tags}");
        assert!(tags.contains("1SG"), "{tags}");
    }

    #[test]
    fn guess_mode_segments_unknown_words() {
        let a = analyzer();
        let cfg = UnrealizeConfig::default();
        let result = a.guess("nameyek", &cfg);
        assert!(result.candidates.iter().any(|c| c == "name·êk"));
    }
}
