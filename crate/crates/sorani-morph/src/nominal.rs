//! Noun inflection, Izafa constructions and degree suffixes.

use crate::morph::{
    Case, Degree, Determiner, Morpheme, MorphemeKind, MorphemeSequence, Number, PersonNumber,
    Role,
};
use crate::phonology::{realize, Realization};
use thiserror::Error;

/// Indefinite plural suffix choice; -an is the unmarked default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PluralSuffix {
    #[default]
    An,
    Gel,
    Ha,
    At,
}

impl PluralSuffix {
    fn form(&self) -> &'static str {
        match self {
            PluralSuffix::An => "an",
            PluralSuffix::Gel => "gel",
            PluralSuffix::Ha => "ha",
            PluralSuffix::At => "at",
        }
    }

    fn id(&self) -> &'static str {
        match self {
            PluralSuffix::An => "det.indef.pl",
            PluralSuffix::Gel => "det.indef.pl.gel",
            PluralSuffix::Ha => "det.indef.pl.ha",
            PluralSuffix::At => "det.indef.pl.at",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NominalFeatures {
    pub determiner: Determiner,
    pub number: Number,
    /// Case marking; only available under the northern-cases configuration.
    pub case: Option<Case>,
    pub plural_suffix: PluralSuffix,
    pub possessor: Option<PersonNumber>,
    pub emphasis: bool,
}

impl NominalFeatures {
    pub fn new(determiner: Determiner, number: Number) -> Self {
        NominalFeatures {
            determiner,
            number,
            case: None,
            plural_suffix: PluralSuffix::An,
            possessor: None,
            emphasis: false,
        }
    }

    pub fn with_possessor(mut self, pn: PersonNumber) -> Self {
        self.possessor = Some(pn);
        self
    }

    pub fn with_case(mut self, case: Case) -> Self {
        self.case = Some(case);
        self
    }

    pub fn emphatic(mut self) -> Self {
        self.emphasis = true;
        self
    }
}

/// Dialect switches for the nominal system.
#[derive(Debug, Clone, Copy, Default)]
pub struct NominalConfig {
    /// Enables the case suffixes, which are respected mainly in the
    /// northern innovation zone.
    pub northern_cases: bool,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NominalError {
    #[error("case marking requires the northern-cases configuration")]
    CasesDisabled,
    #[error("the locative occurs only on absolute nouns")]
    LocativeNotAbsolute,
    #[error("the plural vocative requires a plural noun")]
    VocativeNumber,
    #[error("close Izafa requires a definite or demonstrative head")]
    CloseIzafaGate,
}

fn noun_stem(stem: &str) -> Morpheme {
    Morpheme::new(
        stem,
        MorphemeKind::Root,
        Role::NounStem,
        &stem.to_uppercase(),
        &format!("lex.noun.{stem}"),
    )
}

fn determiner_suffix(nf: &NominalFeatures) -> Morpheme {
    let (form, gloss, id) = match (nf.determiner, nf.number) {
        (Determiner::Absolute, _) => ("", "ABS", "det.abs".to_string()),
        (Determiner::Indefinite, Number::Sg) => ("êk", "INDF.SG", "det.indef.sg".to_string()),
        (Determiner::Indefinite, Number::Pl) => {
            (nf.plural_suffix.form(), "INDF.PL", nf.plural_suffix.id().to_string())
        }
        (Determiner::Definite, Number::Sg) => ("eke", "DEF.SG", "det.def.sg".to_string()),
        (Determiner::Definite, Number::Pl) => ("ekan", "DEF.PL", "det.def.pl".to_string()),
        (Determiner::Demonstrative, Number::Sg) => ("e", "DEM.SG", "det.dem.sg".to_string()),
        (Determiner::Demonstrative, Number::Pl) => {
            if nf.plural_suffix == PluralSuffix::Gel {
                ("gele", "DEM.PL", "det.dem.pl.gele".to_string())
            } else {
                ("ane", "DEM.PL", "det.dem.pl".to_string())
            }
        }
    };
    Morpheme::new(
        form,
        MorphemeKind::InflectionalSuffix,
        Role::Determiner(nf.determiner, nf.number),
        gloss,
        &id,
    )
}

fn case_suffix(case: Case) -> Option<Morpheme> {
    let (form, gloss, id) = match case {
        Case::Nominative => return None,
        Case::ObliqueM => ("î", "OBL.M", "case.obl.m"),
        Case::ObliqueF => ("ê", "OBL.F", "case.obl.f"),
        Case::VocativeM => ("e", "VOC.M", "case.voc.m"),
        Case::VocativeF => ("ê", "VOC.F", "case.voc.f"),
        Case::VocativePl => ("îne", "VOC.PL", "case.voc.pl"),
        Case::Locative => ("ê", "LOC", "case.loc"),
    };
    Some(Morpheme::new(
        form,
        MorphemeKind::InflectionalSuffix,
        Role::Case(case),
        gloss,
        id,
    ))
}

pub fn validate_nominal(nf: &NominalFeatures, cfg: &NominalConfig) -> Result<(), NominalError> {
    if let Some(case) = nf.case {
        if !cfg.northern_cases {
            return Err(NominalError::CasesDisabled);
        }
        if case == Case::Locative && nf.determiner != Determiner::Absolute {
            return Err(NominalError::LocativeNotAbsolute);
        }
        if case == Case::VocativePl && nf.number != Number::Pl {
            return Err(NominalError::VocativeNumber);
        }
    }
    Ok(())
}

/// Inflects a noun stem: determiner suffix, then case, then possessor, then
/// emphasis.
pub fn inflect_noun(
    stem: &str,
    nf: &NominalFeatures,
    cfg: &NominalConfig,
) -> Result<MorphemeSequence, NominalError> {
    validate_nominal(nf, cfg)?;
    let mut items = vec![noun_stem(stem), determiner_suffix(nf)];
    if let Some(case) = nf.case {
        if let Some(m) = case_suffix(case) {
            items.push(m);
        }
    }
    if let Some(pn) = nf.possessor {
        let form = crate::morph::Series::Pm4.form(pn, false).unwrap();
        items.push(Morpheme::new(
            form,
            MorphemeKind::Enclitic,
            Role::Possessive(pn),
            &format!("POSS.{}", pn.tag()),
            &format!("pm4.{}", pn.tag().to_lowercase()),
        ));
    }
    if nf.emphasis {
        items.push(Morpheme::new(
            "îş",
            MorphemeKind::Endoclitic,
            Role::Emphasis,
            "EMPH",
            "emph.is",
        ));
    }
    Ok(MorphemeSequence::new(items))
}

/// Convenience wrapper returning the surface form.
pub fn inflect_noun_surface(
    stem: &str,
    nf: &NominalFeatures,
    cfg: &NominalConfig,
) -> Result<Realization, NominalError> {
    Ok(realize(&inflect_noun(stem, nf, cfg)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IzafaLink {
    /// Open construction: head + î + dependent.
    Construct,
    /// Close construction: head + e + dependent, determiner suffix moving
    /// onto the dependent.
    Close,
    /// Prepositive adjective: adjective + e + noun.
    Prepositive,
}

fn izafa(form: &str, id: &str) -> Morpheme {
    Morpheme::new(form, MorphemeKind::Enclitic, Role::Izafa, "EZ", id)
}

/// Builds a two-word Izafa phrase.
pub fn attach_izafa(
    head_stem: &str,
    head_nf: &NominalFeatures,
    dependent: &str,
    link: IzafaLink,
    cfg: &NominalConfig,
) -> Result<String, NominalError> {
    validate_nominal(head_nf, cfg)?;
    match link {
        IzafaLink::Construct => {
            let mut seq = inflect_noun(head_stem, head_nf, cfg)?;
            seq.items.push(izafa("î", "izafa.i"));
            let head = realize(&seq).surface;
            Ok(format!("{head} {dependent}"))
        }
        IzafaLink::Close => {
            if !matches!(
                head_nf.determiner,
                Determiner::Definite | Determiner::Demonstrative
            ) {
                return Err(NominalError::CloseIzafaGate);
            }
            // The head keeps only the e allomorph; its determiner suffix
            // lands on the dependent.
            let head_seq = MorphemeSequence::new(vec![noun_stem(head_stem), izafa("e", "izafa.e")]);
            let head = realize(&head_seq).surface;
            let dep_seq =
                MorphemeSequence::new(vec![noun_stem(dependent), determiner_suffix(head_nf)]);
            let dep = realize(&dep_seq).surface;
            Ok(format!("{head} {dep}"))
        }
        IzafaLink::Prepositive => {
            let adj_seq = MorphemeSequence::new(vec![noun_stem(head_stem), izafa("e", "izafa.e")]);
            let adj = realize(&adj_seq).surface;
            Ok(format!("{adj} {dependent}"))
        }
    }
}

/// Parses nominal feature tokens: `det=`, `num=`, `poss=`, `plural=`,
/// `case=`, `izafa=`, `dep=` pairs and the bare `emph` flag.
pub fn parse_nominal(
    features: &[&str],
) -> Result<(NominalFeatures, Option<(IzafaLink, String)>), String> {
    let mut nf = NominalFeatures::new(Determiner::Absolute, Number::Sg);
    let mut izafa = None;
    let mut dependent = None;
    for token in features {
        match token.split_once('=') {
            Some(("det", v)) => {
                nf.determiner = match v {
                    "abs" => Determiner::Absolute,
                    "indef" => Determiner::Indefinite,
                    "def" => Determiner::Definite,
                    "dem" => Determiner::Demonstrative,
                    _ => return Err(format!("unknown determiner {v:?}")),
                };
            }
            Some(("num", v)) => {
                nf.number = match v {
                    "sg" => Number::Sg,
                    "pl" => Number::Pl,
                    _ => return Err(format!("unknown number {v:?}")),
                };
            }
            Some(("poss", v)) => {
                nf.possessor =
                    Some(PersonNumber::parse(v).ok_or_else(|| format!("bad possessor {v:?}"))?);
            }
            Some(("plural", v)) => {
                nf.plural_suffix = match v {
                    "an" => PluralSuffix::An,
                    "gel" => PluralSuffix::Gel,
                    "ha" => PluralSuffix::Ha,
                    "at" => PluralSuffix::At,
                    _ => return Err(format!("unknown plural suffix {v:?}")),
                };
            }
            Some(("case", v)) => {
                nf.case = Some(match v {
                    "obl-m" => Case::ObliqueM,
                    "obl-f" => Case::ObliqueF,
                    "voc-m" => Case::VocativeM,
                    "voc-f" => Case::VocativeF,
                    "voc-pl" => Case::VocativePl,
                    "loc" => Case::Locative,
                    _ => return Err(format!("unknown case {v:?}")),
                });
            }
            Some(("izafa", v)) => {
                izafa = Some(match v {
                    "construct" => IzafaLink::Construct,
                    "close" => IzafaLink::Close,
                    "prepositive" => IzafaLink::Prepositive,
                    _ => return Err(format!("unknown izafa link {v:?}")),
                });
            }
            Some(("dep", v)) => dependent = Some(v.to_string()),
            Some((k, _)) => return Err(format!("unknown key {k:?}")),
            None => match *token {
                "emph" => nf.emphasis = true,
                other => return Err(format!("unknown flag {other:?}")),
            },
        }
    }
    match (izafa, dependent) {
        (Some(link), Some(dep)) => Ok((nf, Some((link, dep)))),
        (None, None) => Ok((nf, None)),
        _ => Err("izafa= and dep= must be given together".to_string()),
    }
}

/// Comparative and superlative, purely concatenative.
pub fn grade(base: &str, degree: Degree) -> String {
    let (form, gloss, id) = match degree {
        Degree::Comparative => ("tir", "CMPR", "deg.tir"),
        Degree::Superlative => ("tirîn", "SUPL", "deg.tirin"),
    };
    let seq = MorphemeSequence::new(vec![
        noun_stem(base),
        Morpheme::new(
            form,
            MorphemeKind::DerivationalSuffix,
            Role::Degree(degree),
            gloss,
            id,
        ),
    ]);
    realize(&seq).surface
}
