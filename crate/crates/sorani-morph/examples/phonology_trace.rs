//! Shows the rewrite trace that takes an underlying morpheme string to its
//! surface form, one rule application per line.

use sorani_morph::features::{Construction, FeatureBundle};
use sorani_morph::lexicon::Lexicon;
use sorani_morph::morph::{Number, PersonNumber};
use sorani_morph::phonology::realize;
use sorani_morph::verb::generate_verb;

fn main() {
    let lexicon = Lexicon::seed();

    let cases = [
        (
            "helhatin",
            FeatureBundle::new(Construction::PresentPerfectIntr)
                .with_agent(PersonNumber::new(3, Number::Sg))
                .repeated(),
        ),
        (
            "birdin",
            FeatureBundle::new(Construction::SimplePastTr)
                .with_agent(PersonNumber::new(3, Number::Pl))
                .with_patient(PersonNumber::new(1, Number::Pl))
                .negated()
                .repeated(),
        ),
    ];

    for (lemma, bundle) in cases {
        let lex = lexicon.get(lemma).expect("seed lexeme");
        let seq = generate_verb(lex, &bundle).expect("valid bundle");
        let real = realize(&seq);
        println!("{} + {}", lemma, bundle.feature_string());
        println!("  {}", seq.underlying());
        for step in &real.trace {
            println!("  {:<20} {} > {}", step.rule, step.before, step.after);
        }
        println!("  surface: {}", real.surface);
        println!();
    }
}
