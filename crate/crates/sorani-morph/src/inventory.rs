//! Embedded bound-morpheme inventory.

use crate::morph::MorphemeKind;
use std::collections::BTreeMap;
use std::sync::OnceLock;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InventoryEntry {
    pub id: String,
    pub latin: String,
    pub arabic: String,
    pub kind: MorphemeKind,
    pub gloss: String,
    pub notes: String,
}

fn parse_kind(s: &str) -> MorphemeKind {
    match s {
        "root" => MorphemeKind::Root,
        "derivational-prefix" => MorphemeKind::DerivationalPrefix,
        "derivational-suffix" => MorphemeKind::DerivationalSuffix,
        "inflectional-prefix" => MorphemeKind::InflectionalPrefix,
        "inflectional-suffix" => MorphemeKind::InflectionalSuffix,
        "proclitic" => MorphemeKind::Proclitic,
        "enclitic" => MorphemeKind::Enclitic,
        "endoclitic" => MorphemeKind::Endoclitic,
        other => panic!("unknown morpheme kind {other:?}"),
    }
}

fn parse() -> BTreeMap<String, InventoryEntry> {
    let mut out = BTreeMap::new();
    for line in include_str!("../data/inventory.tsv").lines() {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols.len(), 6, "bad inventory line {line:?}");
        let entry = InventoryEntry {
            id: cols[0].to_string(),
            latin: cols[1].to_string(),
            arabic: if cols[2] == "-" { String::new() } else { cols[2].to_string() },
            kind: parse_kind(cols[3]),
            gloss: cols[4].to_string(),
            notes: cols[5].to_string(),
        };
        let prev = out.insert(entry.id.clone(), entry);
        assert!(prev.is_none(), "duplicate inventory id");
    }
    out
}

pub fn inventory() -> &'static BTreeMap<String, InventoryEntry> {
    static INV: OnceLock<BTreeMap<String, InventoryEntry>> = OnceLock::new();
    INV.get_or_init(parse)
}

pub fn lookup(id: &str) -> Option<&'static InventoryEntry> {
    inventory().get(id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::features::enumerate_bundles;
    use crate::lexicon::Lexicon;
    use crate::morph::{Determiner, Number, PersonNumber};
    use crate::nominal::{inflect_noun, NominalConfig, NominalFeatures};
    use crate::verb::{generate_verb_opts, VariantOpts};

    #[test]
    fn loads_and_is_unique() {
        let inv = inventory();
        assert!(inv.len() > 80);
        assert_eq!(lookup("pm4.3pl").unwrap().latin, "yan");
        assert_eq!(lookup("neg.me").unwrap().gloss, "NEG.IMP");
        assert!(lookup("nope").is_none());
    }

    #[test]
    fn every_generated_id_is_listed() {
        let lexicon = Lexicon::seed();
        let cfg = NominalConfig { northern_cases: true };
        let mut ids = std::collections::BTreeSet::new();
        for lemma in ["helgirtin", "sûtandin", "hatin", "kêldiran"] {
            let lex = lexicon.get(lemma).unwrap();
            let passive = lex.voice == crate::features::Voice::Passive;
            for bundle in enumerate_bundles(lex.transitive, passive) {
                let mask = VariantOpts::relevant_bits(&bundle);
                for bits in 0..1 << VariantOpts::ALL_FLAGS {
                    if bits & !mask != 0 {
                        continue;
                    }
                    let opts = VariantOpts::from_bits(bits);
                    if let Ok(seq) = generate_verb_opts(lex, &bundle, &opts) {
                        ids.extend(seq.items.iter().map(|m| m.id.clone()));
                    }
                }
            }
        }
        for det in [
            Determiner::Absolute,
            Determiner::Indefinite,
            Determiner::Definite,
            Determiner::Demonstrative,
        ] {
            for number in [Number::Sg, Number::Pl] {
                let nf = NominalFeatures::new(det, number)
                    .with_possessor(PersonNumber::new(2, Number::Sg))
                    .emphatic();
                let seq = inflect_noun("kitêb", &nf, &cfg).unwrap();
                ids.extend(seq.items.iter().map(|m| m.id.clone()));
            }
        }
        for id in ids {
            assert!(
                id.starts_with("lex.") || lookup(&id).is_some(),
                "id {id:?} missing from inventory"
            );
        }
    }
}
