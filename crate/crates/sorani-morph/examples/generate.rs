//! Generates a handful of verb forms and prints the underlying morpheme
//! string, the surface form, and the gloss line for each.

use sorani_morph::features::{Construction, FeatureBundle, Mood};
use sorani_morph::lexicon::Lexicon;
use sorani_morph::morph::{Number, PersonNumber};
use sorani_morph::phonology::realize;
use sorani_morph::verb::generate_verb;

fn main() {
    let lexicon = Lexicon::seed();
    let pn = |p, n| PersonNumber::new(p, n);

    let cases = [
        (
            "girtin",
            FeatureBundle::new(Construction::SimplePastTr)
                .with_agent(pn(1, Number::Pl))
                .with_patient(pn(3, Number::Sg)),
        ),
        (
            "kewtin",
            FeatureBundle::new(Construction::PresentIntr).with_agent(pn(1, Number::Pl)),
        ),
        (
            "birdin",
            FeatureBundle::new(Construction::SimplePastTr)
                .with_agent(pn(3, Number::Pl))
                .with_patient(pn(1, Number::Pl))
                .negated()
                .repeated(),
        ),
        (
            "xwardinewe",
            FeatureBundle::new(Construction::PresentTr)
                .with_mood(Mood::Imperative)
                .with_agent(pn(2, Number::Pl))
                .negated(),
        ),
        ("hênan", FeatureBundle::new(Construction::Infinitive)),
    ];

    for (lemma, bundle) in cases {
        let lex = lexicon.get(lemma).expect("seed lexeme");
        let seq = generate_verb(lex, &bundle).expect("valid bundle");
        let real = realize(&seq);
        println!("{} + {}", lemma, bundle.feature_string());
        println!("  underlying  {}", seq.underlying());
        println!("  surface     {}", real.surface);
        println!("  gloss       {}", seq.leipzig());
        println!("              {}", seq.glosses());
        println!();
    }
}
