//! Core domain vocabulary: morphemes, personal-marker paradigms, feature
//! bundles and morpheme sequences.

use serde::Serialize;
use std::fmt;

/// Grammatical person and number. Exactly six values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PersonNumber {
    pub person: u8,
    pub number: Number,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Number {
    Sg,
    Pl,
}

impl PersonNumber {
    pub const ALL: [PersonNumber; 6] = [
        PersonNumber { person: 1, number: Number::Sg },
        PersonNumber { person: 2, number: Number::Sg },
        PersonNumber { person: 3, number: Number::Sg },
        PersonNumber { person: 1, number: Number::Pl },
        PersonNumber { person: 2, number: Number::Pl },
        PersonNumber { person: 3, number: Number::Pl },
    ];

    pub fn new(person: u8, number: Number) -> Self {
        assert!((1..=3).contains(&person));
        PersonNumber { person, number }
    }

    pub fn tag(&self) -> String {
        format!(
            "{}{}",
            self.person,
            match self.number {
                Number::Sg => "SG",
                Number::Pl => "PL",
            }
        )
    }

    pub fn parse(s: &str) -> Option<Self> {
        let (p, n) = s.split_at(1);
        let person: u8 = p.parse().ok()?;
        if !(1..=3).contains(&person) {
            return None;
        }
        let number = match n.to_ascii_uppercase().as_str() {
            "SG" => Number::Sg,
            "PL" => Number::Pl,
            _ => return None,
        };
        Some(PersonNumber { person, number })
    }
}

impl fmt::Display for PersonNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

/// The five personal-marker series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Series {
    /// Present copula enclitics.
    Cop,
    /// Present indicative/subjunctive subject markers.
    Pm1,
    /// Imperative subject markers (2nd person only).
    Pm2,
    /// Past intransitive subject / past transitive patient markers.
    Pm3,
    /// Mobile past transitive agent / present transitive patient markers.
    Pm4,
}

impl Series {
    pub const ALL: [Series; 5] = [Series::Cop, Series::Pm1, Series::Pm2, Series::Pm3, Series::Pm4];

    pub fn name(&self) -> &'static str {
        match self {
            Series::Cop => "COP",
            Series::Pm1 => "PM1",
            Series::Pm2 => "PM2",
            Series::Pm3 => "PM3",
            Series::Pm4 => "PM4",
        }
    }

    /// The marker form for a cell. `None` means the series does not define
    /// the cell (PM2 outside the 2nd person). The zero morpheme is `Some("")`.
    ///
    /// Cells with free variants (2SG `î/ît`, PM1 3SG `ê/êt`) return the long
    /// form unless `short` is set; cells without a variant ignore `short`.
    pub fn form(&self, pn: PersonNumber, short: bool) -> Option<&'static str> {
        use Number::*;
        let pick = |long: &'static str, sh: &'static str| if short { sh } else { long };
        match self {
            Series::Cop | Series::Pm1 => Some(match (pn.person, pn.number) {
                (1, Sg) => "im",
                (2, Sg) => pick("ît", "î"),
                (3, Sg) => match self {
                    Series::Cop => "e",
                    _ => pick("êt", "ê"),
                },
                (1, Pl) => "în",
                (2, Pl) | (3, Pl) => "in",
                _ => unreachable!(),
            }),
            Series::Pm2 => match (pn.person, pn.number) {
                (2, Sg) => Some("e"),
                (2, Pl) => Some("in"),
                _ => None,
            },
            Series::Pm3 => Some(match (pn.person, pn.number) {
                (1, Sg) => "im",
                (2, Sg) => pick("ît", "î"),
                (3, Sg) => "",
                (1, Pl) => "în",
                (2, Pl) | (3, Pl) => "in",
                _ => unreachable!(),
            }),
            Series::Pm4 => Some(match (pn.person, pn.number) {
                (1, Sg) => "im",
                (2, Sg) => "it",
                (3, Sg) => "î",
                (1, Pl) => "man",
                (2, Pl) => "tan",
                (3, Pl) => "yan",
                _ => unreachable!(),
            }),
        }
    }

    /// Whether the cell has a long/short free-variant pair.
    pub fn has_variant(&self, pn: PersonNumber) -> bool {
        match self {
            Series::Cop | Series::Pm3 => pn.person == 2 && pn.number == Number::Sg,
            Series::Pm1 => pn.number == Number::Sg && (pn.person == 2 || pn.person == 3),
            _ => false,
        }
    }

    /// Reverse lookup: every cell of this series whose form (long or short
    /// variant) equals `form`. Forms are ambiguous across cells and series,
    /// so this returns a set.
    pub fn cells_for_form(&self, form: &str) -> Vec<PersonNumber> {
        PersonNumber::ALL
            .iter()
            .copied()
            .filter(|pn| {
                self.form(*pn, false) == Some(form)
                    || (self.has_variant(*pn) && self.form(*pn, true) == Some(form))
            })
            .collect()
    }
}

/// Kind of a morpheme, by attachment behaviour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MorphemeKind {
    Root,
    InflectionalPrefix,
    InflectionalSuffix,
    DerivationalPrefix,
    DerivationalSuffix,
    Enclitic,
    Endoclitic,
    Proclitic,
}

impl MorphemeKind {
    /// Leipzig boundary sign preceding a morpheme of this kind.
    pub fn boundary_sign(&self) -> &'static str {
        match self {
            MorphemeKind::Enclitic | MorphemeKind::Endoclitic | MorphemeKind::Proclitic => "=",
            _ => "-",
        }
    }
}

/// Which verb stem a stem suffix derives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum StemTense {
    Past,
    Present,
}

/// Role of a morpheme within a word form. Phonological guards and the
/// morphotactic parsers both dispatch on this.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Role {
    Root,
    StemSuffix(StemTense),
    Particle,
    Negation(NegFlavor),
    Progressive,
    Subjunctive,
    Imperative,
    Infinitive,
    /// Perfect participle marker -û.
    Perfect,
    /// Auxiliary link -i- of the perfect tenses.
    PerfectLink,
    /// bû, 3SG past of BÛN.
    AuxPast,
    /// bêt, 3SG present of BÛN.
    AuxSubjunctive,
    /// ba, 3SG past subjunctive of BÛN.
    Conditional,
    /// -aye, alternative conditional marker.
    ConditionalAye,
    Agent(Series, PersonNumber),
    Patient(Series, PersonNumber),
    /// 3SG copula -e of the present perfect transitive.
    Copula3Sg,
    /// Postposed directional complement =e.
    Directional,
    /// Repetition suffix -ewe.
    Repetition,
    // Nominal roles.
    NounStem,
    Determiner(Determiner, Number),
    Izafa,
    Possessive(PersonNumber),
    Emphasis,
    Case(Case),
    Degree(Degree),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum NegFlavor {
    Ne,
    Na,
    Me,
}

impl NegFlavor {
    pub fn form(&self) -> &'static str {
        match self {
            NegFlavor::Ne => "ne",
            NegFlavor::Na => "na",
            NegFlavor::Me => "me",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Determiner {
    Absolute,
    Indefinite,
    Definite,
    Demonstrative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Case {
    Nominative,
    ObliqueM,
    ObliqueF,
    VocativeM,
    VocativeF,
    VocativePl,
    Locative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Degree {
    Comparative,
    Superlative,
}

/// An atomic morph: a surface shape in the working alphabet plus its role.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Morpheme {
    pub form: String,
    pub kind: MorphemeKind,
    pub role: Role,
    /// Gloss tag, e.g. `NEG`, `INF`, `AGT.1SG`.
    pub gloss: String,
    /// Stable identifier into the bound-morpheme inventory file.
    pub id: String,
}

impl Morpheme {
    pub fn new(form: &str, kind: MorphemeKind, role: Role, gloss: &str, id: &str) -> Self {
        Morpheme {
            form: form.to_string(),
            kind,
            role,
            gloss: gloss.to_string(),
            id: id.to_string(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.form.is_empty()
    }

    /// Display form, with the zero morpheme rendered as ∅.
    pub fn display_form(&self) -> &str {
        if self.form.is_empty() {
            "∅"
        } else {
            &self.form
        }
    }
}

/// An ordered underlying segmentation. The stem group is the contiguous run
/// of root plus stem derivational suffix starting at `stem_index`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MorphemeSequence {
    pub items: Vec<Morpheme>,
    pub stem_index: usize,
}

impl MorphemeSequence {
    pub fn new(items: Vec<Morpheme>) -> Self {
        let stem_index = items
            .iter()
            .position(|m| matches!(m.role, Role::Root | Role::NounStem))
            .unwrap_or(0);
        MorphemeSequence { items, stem_index }
    }

    /// End of the stem group (exclusive): root plus any stem suffixes.
    pub fn stem_end(&self) -> usize {
        let mut end = self.stem_index + 1;
        while end < self.items.len() && matches!(self.items[end].role, Role::StemSuffix(_)) {
            end += 1;
        }
        end
    }

    /// The underlying string fed to phonology: non-zero forms joined by `·`.
    pub fn underlying(&self) -> String {
        self.items
            .iter()
            .filter(|m| !m.is_zero())
            .map(|m| m.form.as_str())
            .collect::<Vec<_>>()
            .join("·")
    }

    /// Segmentation for display, zero morphemes included.
    pub fn display(&self) -> String {
        self.items
            .iter()
            .map(|m| m.display_form())
            .collect::<Vec<_>>()
            .join("·")
    }

    /// Leipzig-style segmentation with `-`/`=` boundary signs.
    pub fn leipzig(&self) -> String {
        let mut out = String::new();
        for (i, m) in self.items.iter().enumerate() {
            if i > 0 {
                out.push_str(m.kind.boundary_sign());
            }
            out.push_str(m.display_form());
        }
        out
    }

    pub fn glosses(&self) -> String {
        self.items
            .iter()
            .map(|m| m.gloss.as_str())
            .collect::<Vec<_>>()
            .join("-")
    }
}

impl fmt::Display for MorphemeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_person_number_values() {
        assert_eq!(PersonNumber::ALL.len(), 6);
        assert_eq!(PersonNumber::parse("2PL"), Some(PersonNumber::new(2, Number::Pl)));
        assert_eq!(PersonNumber::parse("4SG"), None);
    }

    #[test]
    fn pm2_defines_only_second_person() {
        for pn in PersonNumber::ALL {
            let defined = Series::Pm2.form(pn, false).is_some();
            assert_eq!(defined, pn.person == 2, "PM2 cell {pn}");
        }
    }

    #[test]
    fn pm3_third_singular_is_zero() {
        assert_eq!(Series::Pm3.form(PersonNumber::new(3, Number::Sg), false), Some(""));
    }

    #[test]
    fn pm4_cells() {
        let forms: Vec<_> = PersonNumber::ALL
            .iter()
            .map(|pn| Series::Pm4.form(*pn, false).unwrap())
            .collect();
        assert_eq!(forms, ["im", "it", "î", "man", "tan", "yan"]);
    }

    #[test]
    fn marker_paradigms_round_trip() {
        // Looking up a form then reverse-looking it up recovers the cell.
        for series in Series::ALL {
            for pn in PersonNumber::ALL {
                for short in [false, true] {
                    if let Some(form) = series.form(pn, short) {
                        assert!(
                            series.cells_for_form(form).contains(&pn),
                            "{} {} ({})",
                            series.name(),
                            pn,
                            form
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn variant_pairs() {
        let two_sg = PersonNumber::new(2, Number::Sg);
        let three_sg = PersonNumber::new(3, Number::Sg);
        assert_eq!(Series::Pm1.form(two_sg, true), Some("î"));
        assert_eq!(Series::Pm1.form(two_sg, false), Some("ît"));
        assert_eq!(Series::Pm1.form(three_sg, true), Some("ê"));
        assert_eq!(Series::Pm1.form(three_sg, false), Some("êt"));
        assert!(!Series::Pm4.has_variant(two_sg));
    }
}
