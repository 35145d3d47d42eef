//! Inflects nouns for determination, possession, and emphasis, links
//! heads to dependents with the three izafa constructions, and grades
//! adjectives.

use sorani_morph::morph::{Degree, Determiner, Number, PersonNumber};
use sorani_morph::nominal::{
    attach_izafa, grade, inflect_noun_surface, IzafaLink, NominalConfig, NominalFeatures,
};

fn main() {
    let cfg = NominalConfig::default();

    let nouns = [
        ("gul", NominalFeatures::new(Determiner::Absolute, Number::Sg)),
        ("name", NominalFeatures::new(Determiner::Indefinite, Number::Sg)),
        ("sawa", NominalFeatures::new(Determiner::Definite, Number::Sg)),
        (
            "kitêb",
            NominalFeatures::new(Determiner::Definite, Number::Sg)
                .with_possessor(PersonNumber::new(2, Number::Sg)),
        ),
        (
            "name",
            NominalFeatures::new(Determiner::Absolute, Number::Sg).emphatic(),
        ),
    ];
    for (stem, nf) in nouns {
        let real = inflect_noun_surface(stem, &nf, &cfg).expect("valid features");
        println!("{stem:<8} -> {}", real.surface);
    }
    println!();

    let phrases = [
        ("gul", Determiner::Absolute, Number::Sg, "ciwan", IzafaLink::Construct),
        ("gul", Determiner::Definite, Number::Sg, "ciwan", IzafaLink::Close),
        ("gul", Determiner::Demonstrative, Number::Pl, "ciwan", IzafaLink::Close),
        ("xas", Determiner::Absolute, Number::Sg, "kew", IzafaLink::Prepositive),
    ];
    for (head, det, num, dep, link) in phrases {
        let nf = NominalFeatures::new(det, num);
        let phrase = attach_izafa(head, &nf, dep, link, &cfg).expect("valid phrase");
        println!("{head} + {dep:<8} -> {phrase}");
    }
    println!();

    for base in ["nwê", "ciwan"] {
        println!(
            "{base:<8} {} / {}",
            grade(base, Degree::Comparative),
            grade(base, Degree::Superlative)
        );
    }
}
