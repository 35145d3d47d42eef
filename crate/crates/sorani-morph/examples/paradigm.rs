//! Prints a full paradigm table for one lexeme and one construction.

use sorani_morph::features::Construction;
use sorani_morph::lexicon::Lexicon;
use sorani_morph::verb::paradigm;

fn main() {
    let lexicon = Lexicon::seed();
    let lex = lexicon.get("girtin").expect("seed lexeme");

    for c in [Construction::SimplePastTr, Construction::PresentTr] {
        println!("== {} {} ==", lex.lemma, c.name());
        for row in paradigm(lex, &[c]) {
            println!(
                "{:<44} {:<24} {}",
                row.bundle.feature_string(),
                row.sequence.underlying(),
                row.realization.surface
            );
        }
        println!();
    }
}
