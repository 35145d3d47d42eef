//! Verb inflection: assembles underlying morpheme sequences for the fourteen
//! constructions, including mobile agent-marker placement.

use crate::features::{
    validate_features, Construction, FeatureBundle, Mood, Violation, Voice,
};
use crate::lexicon::{decompose_stem, Lexeme};
use crate::morph::{
    Morpheme, MorphemeKind, MorphemeSequence, NegFlavor, Number, PersonNumber, Role, Series,
    StemTense,
};
use crate::phonology::{realize, Realization};
use thiserror::Error;

/// Free-variant choices that do not change the feature bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VariantOpts {
    /// Use the short 2SG/3SG marker variants (î, ê) instead of ît, êt.
    pub short_marker: bool,
    /// Use the progressive e- instead of de-.
    pub progressive_e: bool,
    /// Drop the subjunctive bi- (listed as a free alternative).
    pub subjunctive_zero: bool,
    /// Conditional with -aye after the agent instead of -ba before it.
    pub conditional_aye: bool,
    /// Conditional with the optional bi- prefix.
    pub conditional_bi: bool,
}

impl VariantOpts {
    pub const ALL_FLAGS: usize = 5;

    pub fn from_bits(bits: usize) -> VariantOpts {
        VariantOpts {
            short_marker: bits & 1 != 0,
            progressive_e: bits & 2 != 0,
            subjunctive_zero: bits & 4 != 0,
            conditional_aye: bits & 8 != 0,
            conditional_bi: bits & 16 != 0,
        }
    }

    /// Parses a comma-separated flag list; `-` or the empty string is the
    /// default.
    pub fn parse(s: &str) -> Result<VariantOpts, String> {
        let mut opts = VariantOpts::default();
        if s == "-" || s.is_empty() {
            return Ok(opts);
        }
        for flag in s.split(',') {
            match flag {
                "short" => opts.short_marker = true,
                "prog-e" => opts.progressive_e = true,
                "sbjv-zero" => opts.subjunctive_zero = true,
                "aye" => opts.conditional_aye = true,
                "bi" => opts.conditional_bi = true,
                other => return Err(format!("unknown variant flag {other:?}")),
            }
        }
        Ok(opts)
    }

    /// Bit mask of the flags that can affect output for this bundle; the
    /// other flags are no-ops and need not be enumerated.
    pub fn relevant_bits(f: &FeatureBundle) -> usize {
        let c = f.construction;
        let mut mask = 1;
        let progressive = matches!(
            c,
            Construction::PastProgressiveIntr | Construction::PastProgressiveTr
        );
        if progressive || (c.is_present() && f.mood == Mood::Indicative && !f.negation) {
            mask |= 2;
        }
        if c.is_present() && f.mood == Mood::Subjunctive && !f.negation {
            mask |= 4;
        }
        if c.is_conditional() {
            mask |= 8;
            if !f.negation {
                mask |= 16;
            }
        }
        mask
    }
}

#[derive(Debug, Error)]
pub enum GenerateError {
    #[error("invalid feature bundle: {0:?}")]
    Invalid(Vec<Violation>),
    #[error("lexeme {lemma} is {lexeme}, bundle requires a {bundle} construction")]
    Transitivity {
        lemma: String,
        lexeme: &'static str,
        bundle: &'static str,
    },
    #[error("voice of bundle does not match lexeme {lemma}")]
    VoiceMismatch { lemma: String },
}

fn marker(series: Series, pn: PersonNumber, short: bool, agent: bool) -> Option<Morpheme> {
    let form = series.form(pn, short)?;
    let kind = if series == Series::Pm4 {
        MorphemeKind::Endoclitic
    } else {
        MorphemeKind::Enclitic
    };
    let role = if agent {
        Role::Agent(series, pn)
    } else {
        Role::Patient(series, pn)
    };
    let id = format!("{}.{}", series.name().to_lowercase(), pn.tag().to_lowercase());
    Some(Morpheme::new(form, kind, role, &pn.tag(), &id))
}

fn negation(flavor: NegFlavor) -> Morpheme {
    let (gloss, id) = match flavor {
        NegFlavor::Ne => ("NEG", "neg.ne"),
        NegFlavor::Na => ("NEG", "neg.na"),
        NegFlavor::Me => ("NEG", "neg.me"),
    };
    Morpheme::new(
        flavor.form(),
        MorphemeKind::InflectionalPrefix,
        Role::Negation(flavor),
        gloss,
        id,
    )
}

fn particle(form: &str) -> Morpheme {
    Morpheme::new(
        form,
        MorphemeKind::DerivationalPrefix,
        Role::Particle,
        "PTCL",
        &format!("dp.{}", form),
    )
}

fn directional() -> Morpheme {
    Morpheme::new("e", MorphemeKind::Enclitic, Role::Directional, "DRC", "dir.e")
}

fn repetition() -> Morpheme {
    Morpheme::new(
        "ewe",
        MorphemeKind::DerivationalSuffix,
        Role::Repetition,
        "REP",
        "rep.ewe",
    )
}

fn stem_suffix_id(suffix: &str, tense: StemTense) -> String {
    let key = match (tense, suffix) {
        (StemTense::Past, "") => "ds.pst.0",
        (StemTense::Past, "a") => "ds.pst.a",
        (StemTense::Past, "and") => "ds.pst.and",
        (StemTense::Past, "ard") => "ds.pst.ard",
        (StemTense::Past, "d") => "ds.pst.d",
        (StemTense::Past, "ê") => "ds.pst.e",
        (StemTense::Past, "î") => "ds.pst.i",
        (StemTense::Past, "îşt") => "ds.pst.ist",
        (StemTense::Past, "ird") => "ds.pst.ird",
        (StemTense::Past, "îrd") => "ds.pst.ird2",
        (StemTense::Past, "t") => "ds.pst.t",
        (StemTense::Past, "û") => "ds.pst.u",
        (StemTense::Past, "y") => "ds.pst.y",
        (StemTense::Past, "dira") => "ds.pst.dira",
        (StemTense::Present, "") => "ds.prs.0",
        (StemTense::Present, "e") => "ds.prs.e",
        (StemTense::Present, "ê") => "ds.prs.e2",
        (StemTense::Present, "ên") => "ds.prs.en",
        (StemTense::Present, "êr") => "ds.prs.er",
        (StemTense::Present, "dirê") => "ds.prs.dire",
        _ => "ds.unknown",
    };
    key.to_string()
}

/// The stem as root + derivational suffix, decomposed over the lexeme's
/// root alternates.
fn stem_split(lex: &Lexeme, tense: StemTense) -> (String, String) {
    use std::collections::HashMap;
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<HashMap<(String, StemTense), (String, String)>>> =
        OnceLock::new();
    let stem = match tense {
        StemTense::Past => &lex.past_stem,
        StemTense::Present => &lex.present_stem,
    };
    let key = (format!("{}|{stem}", lex.lemma), tense);
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let decomps = decompose_stem(stem, tense);
    let pick = lex
        .roots
        .iter()
        .find_map(|root| {
            decomps
                .iter()
                .filter(|(r, _)| r == root)
                .max_by_key(|(_, s)| s.chars().count())
        })
        .cloned()
        .unwrap_or_else(|| (stem.clone(), String::new()));
    cache.lock().unwrap().insert(key, pick.clone());
    pick
}

fn stem_morphemes(lex: &Lexeme, tense: StemTense) -> Vec<Morpheme> {
    let (root, suffix) = stem_split(lex, tense);
    let tense_gloss = match tense {
        StemTense::Past => "PST",
        StemTense::Present => "PRS",
    };
    vec![
        Morpheme::new(
            &root,
            MorphemeKind::Root,
            Role::Root,
            &lex.gloss_tag(),
            &format!("lex.{}", lex.lemma),
        ),
        Morpheme::new(
            &suffix,
            MorphemeKind::DerivationalSuffix,
            Role::StemSuffix(tense),
            tense_gloss,
            &stem_suffix_id(&suffix, tense),
        ),
    ]
}

/// Inserts the mobile PM4 marker: at index 1 when anything precedes the
/// stem, otherwise directly after the stem group (perfect and auxiliary
/// markers included), before any patient marker.
pub fn place_agent_marker(seq: &MorphemeSequence, marker: Morpheme) -> MorphemeSequence {
    let mut items = seq.items.clone();
    let pos = if seq.stem_index > 0 {
        1
    } else {
        let mut end = seq.stem_end();
        while end < items.len()
            && matches!(
                items[end].role,
                Role::Perfect
                    | Role::PerfectLink
                    | Role::AuxPast
                    | Role::AuxSubjunctive
                    | Role::Conditional
            )
        {
            end += 1;
        }
        end
    };
    items.insert(pos, marker);
    MorphemeSequence::new(items)
}

pub fn generate_verb(lex: &Lexeme, f: &FeatureBundle) -> Result<MorphemeSequence, GenerateError> {
    generate_verb_opts(lex, f, &VariantOpts::default())
}

pub fn generate_verb_opts(
    lex: &Lexeme,
    f: &FeatureBundle,
    opts: &VariantOpts,
) -> Result<MorphemeSequence, GenerateError> {
    let violations = validate_features(f);
    if !violations.is_empty() {
        return Err(GenerateError::Invalid(violations));
    }
    let lex_transitive = lex.transitive && lex.voice == Voice::Active;
    if !f.construction.is_impersonal() && f.construction.is_transitive() != lex_transitive {
        return Err(GenerateError::Transitivity {
            lemma: lex.lemma.clone(),
            lexeme: if lex_transitive { "transitive" } else { "intransitive" },
            bundle: if f.construction.is_transitive() { "transitive" } else { "intransitive" },
        });
    }
    if (f.voice == Voice::Passive) != (lex.voice == Voice::Passive) {
        return Err(GenerateError::VoiceMismatch {
            lemma: lex.lemma.clone(),
        });
    }

    let mut items: Vec<Morpheme> = Vec::new();
    if let Some(p) = &lex.particle {
        items.push(particle(p));
    }
    let neg = f.negation_flavor();
    let want_ewe = lex.lexical_ewe || f.repetition;
    let short = opts.short_marker;

    use Construction::*;
    match f.construction {
        Infinitive => {
            if let Some(n) = neg {
                items.push(negation(n));
            }
            items.extend(stem_morphemes(lex, StemTense::Past));
            items.push(Morpheme::new(
                "in",
                MorphemeKind::InflectionalSuffix,
                Role::Infinitive,
                "INF",
                "inf.in",
            ));
            if want_ewe {
                items.push(repetition());
            }
        }
        SimplePastIntr | SimplePastTr => {
            if let Some(n) = neg {
                items.push(negation(n));
            }
            items.extend(stem_morphemes(lex, StemTense::Past));
            let pm3_cell = if f.construction == SimplePastTr {
                f.patient.unwrap()
            } else {
                f.agent.unwrap()
            };
            items.push(
                marker(Series::Pm3, pm3_cell, short, f.construction == SimplePastIntr).unwrap(),
            );
            if f.directional {
                items.push(directional());
            }
            if want_ewe {
                items.push(repetition());
            }
        }
        PerfectParticiple => {
            if let Some(n) = neg {
                items.push(negation(n));
            }
            items.extend(stem_morphemes(lex, StemTense::Past));
            items.push(perfect());
            if want_ewe {
                items.push(repetition());
            }
        }
        PresentPerfectIntr => {
            if let Some(n) = neg {
                items.push(negation(n));
            }
            items.extend(stem_morphemes(lex, StemTense::Past));
            items.push(perfect());
            items.push(marker(Series::Cop, f.agent.unwrap(), short, true).unwrap());
            if f.directional {
                items.push(directional());
            }
            if want_ewe {
                items.push(repetition());
            }
        }
        PresentPerfectTr => {
            if let Some(n) = neg {
                items.push(negation(n));
            }
            items.extend(stem_morphemes(lex, StemTense::Past));
            items.push(perfect());
            items.push(marker(Series::Pm3, f.patient.unwrap(), short, false).unwrap());
            items.push(Morpheme::new(
                "e",
                MorphemeKind::Enclitic,
                Role::Copula3Sg,
                "COP.3SG",
                "cop.3sg.e",
            ));
            if f.directional {
                items.push(directional());
            }
            if want_ewe {
                items.push(repetition());
            }
        }
        PastPerfectIntr | PastPerfectTr => {
            if let Some(n) = neg {
                items.push(negation(n));
            }
            items.extend(stem_morphemes(lex, StemTense::Past));
            items.push(perfect_link());
            items.push(if f.mood == Mood::Subjunctive {
                Morpheme::new(
                    "bêt",
                    MorphemeKind::InflectionalSuffix,
                    Role::AuxSubjunctive,
                    "AUX.SBJV",
                    "aux.bet",
                )
            } else {
                Morpheme::new(
                    "bû",
                    MorphemeKind::InflectionalSuffix,
                    Role::AuxPast,
                    "AUX.PST",
                    "aux.bu",
                )
            });
            let pm3_cell = if f.construction == PastPerfectTr {
                f.patient.unwrap()
            } else {
                f.agent.unwrap()
            };
            items.push(
                marker(Series::Pm3, pm3_cell, short, f.construction == PastPerfectIntr).unwrap(),
            );
            if f.directional {
                items.push(directional());
            }
            if want_ewe {
                items.push(repetition());
            }
        }
        PastProgressiveIntr | PastProgressiveTr => {
            if let Some(n) = neg {
                items.push(negation(n));
            }
            items.push(progressive(opts.progressive_e));
            items.extend(stem_morphemes(lex, StemTense::Past));
            if f.construction == PastProgressiveTr {
                let cell = f.patient.unwrap();
                let mut m = marker(Series::Pm3, cell, short, false).unwrap();
                // The 1SG patient of the past progressive surfaces as îm.
                if cell == PersonNumber::new(1, Number::Sg) {
                    m.form = "îm".to_string();
                }
                items.push(m);
            } else {
                items.push(marker(Series::Pm3, f.agent.unwrap(), short, true).unwrap());
            }
            if f.directional {
                items.push(directional());
            }
            if want_ewe {
                items.push(repetition());
            }
        }
        PastConditionalIntr | PastConditionalTr => {
            if opts.conditional_bi && neg.is_none() {
                items.push(Morpheme::new(
                    "bi",
                    MorphemeKind::InflectionalPrefix,
                    Role::Subjunctive,
                    "SBJV",
                    "sbjv.bi",
                ));
            } else if let Some(n) = neg {
                items.push(negation(n));
            }
            items.extend(stem_morphemes(lex, StemTense::Past));
            items.push(perfect_link());
            let pm3_cell = if f.construction == PastConditionalTr {
                f.patient.unwrap()
            } else {
                f.agent.unwrap()
            };
            let agent_role = f.construction == PastConditionalIntr;
            if opts.conditional_aye {
                items.push(marker(Series::Pm3, pm3_cell, short, agent_role).unwrap());
                items.push(Morpheme::new(
                    "aye",
                    MorphemeKind::InflectionalSuffix,
                    Role::ConditionalAye,
                    "COND",
                    "cond.aye",
                ));
            } else {
                items.push(Morpheme::new(
                    "ba",
                    MorphemeKind::InflectionalSuffix,
                    Role::Conditional,
                    "COND",
                    "cond.ba",
                ));
                items.push(marker(Series::Pm3, pm3_cell, short, agent_role).unwrap());
            }
            if f.directional {
                items.push(directional());
            }
            if want_ewe {
                items.push(repetition());
            }
        }
        PresentIntr | PresentTr => {
            if let Some(irr) = irregular_override(lex, f) {
                items.push(Morpheme::new(
                    &irr,
                    MorphemeKind::Root,
                    Role::Root,
                    &format!("{}.IMP.2SG", lex.gloss_tag()),
                    &format!("lex.{}", lex.lemma),
                ));
                return Ok(MorphemeSequence::new(items));
            }
            match (f.mood, neg) {
                (Mood::Imperative, Some(n)) => items.push(negation(n)),
                (Mood::Imperative, None) => items.push(Morpheme::new(
                    "bi",
                    MorphemeKind::InflectionalPrefix,
                    Role::Imperative,
                    "IMP",
                    "imp.bi",
                )),
                (Mood::Subjunctive, Some(n)) => items.push(negation(n)),
                (Mood::Subjunctive, None) => {
                    let zero_ok = opts.subjunctive_zero && f.patient.is_none();
                    if !zero_ok {
                        items.push(Morpheme::new(
                            "bi",
                            MorphemeKind::InflectionalPrefix,
                            Role::Subjunctive,
                            "SBJV",
                            "sbjv.bi",
                        ));
                    }
                }
                (_, Some(n)) => items.push(negation(n)),
                (_, None) => items.push(progressive(opts.progressive_e)),
            }
            items.extend(stem_morphemes(lex, StemTense::Present));
            let agent = f.agent.unwrap();
            let series = if f.mood == Mood::Imperative {
                Series::Pm2
            } else {
                Series::Pm1
            };
            items.push(marker(series, agent, short, true).unwrap());
            if f.directional {
                items.push(directional());
            }
            if want_ewe {
                items.push(repetition());
            }
        }
    }

    let mut seq = MorphemeSequence::new(items);

    // The mobile PM4 marker: agent of past transitives, patient of the
    // present transitive.
    if f.construction.is_past_transitive() {
        let m = marker(Series::Pm4, f.agent.unwrap(), short, true).unwrap();
        seq = place_agent_marker(&seq, m);
    } else if f.construction == Construction::PresentTr {
        if let Some(p) = f.patient {
            let m = marker(Series::Pm4, p, short, false).unwrap();
            seq = place_agent_marker(&seq, m);
        }
    }
    Ok(seq)
}

fn perfect() -> Morpheme {
    Morpheme::new(
        "û",
        MorphemeKind::InflectionalSuffix,
        Role::Perfect,
        "PRF",
        "prf.u",
    )
}

fn perfect_link() -> Morpheme {
    Morpheme::new(
        "i",
        MorphemeKind::InflectionalSuffix,
        Role::PerfectLink,
        "PRF",
        "prf.link.i",
    )
}

fn progressive(e_variant: bool) -> Morpheme {
    if e_variant {
        Morpheme::new(
            "e",
            MorphemeKind::InflectionalPrefix,
            Role::Progressive,
            "PROG",
            "prog.e",
        )
    } else {
        Morpheme::new(
            "de",
            MorphemeKind::InflectionalPrefix,
            Role::Progressive,
            "PROG",
            "prog.de",
        )
    }
}

/// Exceptional imperative surfaces (were, biço) replace the whole template
/// for the plain affirmative 2SG cell.
fn irregular_override(lex: &Lexeme, f: &FeatureBundle) -> Option<String> {
    if f.mood != Mood::Imperative
        || f.negation
        || f.directional
        || f.repetition
        || f.patient.is_some()
        || lex.particle.is_some()
        || lex.lexical_ewe
    {
        return None;
    }
    let slot = format!("IMP.{}", f.agent?.tag());
    lex.irregulars.get(&slot).cloned()
}

#[derive(Debug, Clone)]
pub struct ParadigmRow {
    pub bundle: FeatureBundle,
    pub sequence: MorphemeSequence,
    pub realization: Realization,
}

/// Every valid form of the lexeme for the requested constructions, in
/// deterministic order.
pub fn paradigm(lex: &Lexeme, constructions: &[Construction]) -> Vec<ParadigmRow> {
    let passive = lex.voice == Voice::Passive;
    crate::features::enumerate_bundles(lex.transitive && !passive, passive)
        .into_iter()
        .filter(|f| constructions.is_empty() || constructions.contains(&f.construction))
        .map(|f| {
            let sequence = generate_verb(lex, &f).expect("enumerated bundle is valid");
            let realization = realize(&sequence);
            ParadigmRow {
                bundle: f,
                sequence,
                realization,
            }
        })
        .collect()
}
