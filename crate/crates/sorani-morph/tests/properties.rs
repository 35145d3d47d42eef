//! Randomized invariants over the public API.

use proptest::prelude::*;

use sorani_morph::alphabet;
use sorani_morph::analyzer::Analyzer;
use sorani_morph::features::{enumerate_bundles, FeatureBundle};
use sorani_morph::lexicon::Lexicon;
use sorani_morph::morph::PersonNumber;
use sorani_morph::phonology::realize;
use sorani_morph::script::{arabic_to_latin, latin_to_arabic, DEFAULT_BOUND};
use sorani_morph::verb::generate_verb;

fn all_bundles() -> Vec<FeatureBundle> {
    let mut v = enumerate_bundles(true, false);
    v.extend(enumerate_bundles(false, false));
    v.extend(enumerate_bundles(false, true));
    v
}

proptest! {
    #[test]
    fn latin_to_arabic_total(s in "\\PC{0,24}") {
        let _ = latin_to_arabic(&s);
    }

    #[test]
    fn arabic_to_latin_total(s in "\\PC{0,16}", bound in 1usize..128) {
        let r = arabic_to_latin(&s, bound);
        prop_assert!(r.candidates.len() <= bound);
        let mut sorted = r.candidates.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted, r.candidates);
    }

    #[test]
    fn normalize_idempotent(s in "\\PC{0,24}") {
        let once = alphabet::normalize(&s);
        prop_assert_eq!(alphabet::normalize(&once), once);
    }

    #[test]
    fn feature_string_round_trips(idx in 0usize..10_000) {
        let bundles = all_bundles();
        let f = &bundles[idx % bundles.len()];
        let s = f.feature_string();
        let tokens: Vec<&str> = s.split_whitespace().collect();
        let parsed = FeatureBundle::parse(&tokens).unwrap();
        prop_assert_eq!(&parsed, f);
    }

    #[test]
    fn person_number_round_trips(p in 1u8..=3, pl in proptest::bool::ANY) {
        let n = if pl {
            sorani_morph::morph::Number::Pl
        } else {
            sorani_morph::morph::Number::Sg
        };
        let pn = PersonNumber::new(p, n);
        prop_assert_eq!(PersonNumber::parse(&pn.tag()), Some(pn));
    }

    #[test]
    fn surfaces_use_the_alphabet(idx in 0usize..10_000) {
        let lexicon = Lexicon::seed();
        let lexemes: Vec<_> = lexicon.iter().collect();
        let lex = lexemes[idx % lexemes.len()];
        let bundles = enumerate_bundles(lex.transitive, lex.voice == sorani_morph::features::Voice::Passive);
        let f = &bundles[idx / lexemes.len() % bundles.len()];
        let seq = generate_verb(lex, f).unwrap();
        let surface = realize(&seq).surface;
        prop_assert!(!surface.is_empty());
        for c in alphabet::segments(&surface) {
            prop_assert!(alphabet::is_letter(c), "bad char {c:?} in {surface}");
        }
        prop_assert!(!surface.contains("ii"));
    }
}

#[test]
fn analyzer_index_is_self_consistent() {
    let lexicon = Lexicon::seed();
    let analyzer = Analyzer::build(&lexicon);
    for surface in analyzer.surfaces().take(500) {
        for a in analyzer.analyze(surface) {
            if !a.emphasis {
                assert_eq!(realize(&a.sequence).surface, surface, "{surface}");
            }
        }
    }
}
