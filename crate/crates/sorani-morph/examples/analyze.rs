//! Builds the analysis index over the seed lexicon and analyzes a few
//! surface words, printing every reading.

use sorani_morph::analyzer::Analyzer;
use sorani_morph::lexicon::Lexicon;

fn main() {
    let lexicon = Lexicon::seed();
    let analyzer = Analyzer::build(&lexicon);
    println!("index holds {} surface forms", analyzer.len());
    println!();

    for word in ["girtman", "deyangirîn", "mekewe", "helhatûwetewe", "girtimîş"] {
        let hits = analyzer.analyze(word);
        println!("{word}");
        if hits.is_empty() {
            println!("  no analysis");
        }
        for a in hits {
            let (seg, tags) = a.gloss();
            println!("  {} {}", a.lemma, a.feature_string());
            println!("    {seg}");
            println!("    {tags}");
        }
        println!();
    }
}
