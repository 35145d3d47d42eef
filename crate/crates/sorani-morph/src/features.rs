//! Verb feature bundles and their well-formedness constraints.

use crate::morph::{NegFlavor, Number, PersonNumber};
use serde::Serialize;
use std::fmt;

/// The fourteen verb constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Construction {
    Infinitive,
    SimplePastIntr,
    SimplePastTr,
    PerfectParticiple,
    PresentPerfectIntr,
    PresentPerfectTr,
    PastPerfectIntr,
    PastPerfectTr,
    PastProgressiveIntr,
    PastProgressiveTr,
    PastConditionalIntr,
    PastConditionalTr,
    PresentIntr,
    PresentTr,
}

impl Construction {
    pub const ALL: [Construction; 14] = [
        Construction::Infinitive,
        Construction::SimplePastIntr,
        Construction::SimplePastTr,
        Construction::PerfectParticiple,
        Construction::PresentPerfectIntr,
        Construction::PresentPerfectTr,
        Construction::PastPerfectIntr,
        Construction::PastPerfectTr,
        Construction::PastProgressiveIntr,
        Construction::PastProgressiveTr,
        Construction::PastConditionalIntr,
        Construction::PastConditionalTr,
        Construction::PresentIntr,
        Construction::PresentTr,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Construction::Infinitive => "infinitive",
            Construction::SimplePastIntr => "simple-past-intr",
            Construction::SimplePastTr => "simple-past-tr",
            Construction::PerfectParticiple => "perfect-participle",
            Construction::PresentPerfectIntr => "present-perfect-intr",
            Construction::PresentPerfectTr => "present-perfect-tr",
            Construction::PastPerfectIntr => "past-perfect-intr",
            Construction::PastPerfectTr => "past-perfect-tr",
            Construction::PastProgressiveIntr => "past-progressive-intr",
            Construction::PastProgressiveTr => "past-progressive-tr",
            Construction::PastConditionalIntr => "past-conditional-intr",
            Construction::PastConditionalTr => "past-conditional-tr",
            Construction::PresentIntr => "present-intr",
            Construction::PresentTr => "present-tr",
        }
    }

    pub fn parse(s: &str) -> Option<Construction> {
        // The past perfect doubles as the past subjunctive, so accept the
        // longer aliases too.
        let s = match s {
            "past-perfect-or-subj-intr" => "past-perfect-intr",
            "past-perfect-or-subj-tr" => "past-perfect-tr",
            other => other,
        };
        Construction::ALL.iter().copied().find(|c| c.name() == s)
    }

    pub fn is_transitive(&self) -> bool {
        matches!(
            self,
            Construction::SimplePastTr
                | Construction::PresentPerfectTr
                | Construction::PastPerfectTr
                | Construction::PastProgressiveTr
                | Construction::PastConditionalTr
                | Construction::PresentTr
        )
    }

    /// Past transitive constructions take the mobile PM4 agent marker.
    pub fn is_past_transitive(&self) -> bool {
        self.is_transitive() && !matches!(self, Construction::PresentTr)
    }

    pub fn is_present(&self) -> bool {
        matches!(self, Construction::PresentIntr | Construction::PresentTr)
    }

    pub fn is_conditional(&self) -> bool {
        matches!(
            self,
            Construction::PastConditionalIntr | Construction::PastConditionalTr
        )
    }

    pub fn is_past_perfect(&self) -> bool {
        matches!(self, Construction::PastPerfectIntr | Construction::PastPerfectTr)
    }

    /// Constructions with no person marking at all.
    pub fn is_impersonal(&self) -> bool {
        matches!(self, Construction::Infinitive | Construction::PerfectParticiple)
    }

    /// Whether the postposed directional =e has a slot in this construction.
    pub fn allows_directional(&self) -> bool {
        !self.is_impersonal()
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Default)]
pub enum Mood {
    #[default]
    Indicative,
    Subjunctive,
    Imperative,
    Conditional,
}

impl Mood {
    pub fn name(&self) -> &'static str {
        match self {
            Mood::Indicative => "IND",
            Mood::Subjunctive => "SBJV",
            Mood::Imperative => "IMP",
            Mood::Conditional => "COND",
        }
    }

    pub fn parse(s: &str) -> Option<Mood> {
        match s.to_ascii_uppercase().as_str() {
            "IND" => Some(Mood::Indicative),
            "SBJV" | "SUBJ" => Some(Mood::Subjunctive),
            "IMP" => Some(Mood::Imperative),
            "COND" => Some(Mood::Conditional),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Default)]
pub enum Voice {
    #[default]
    Active,
    Passive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Default)]
pub enum Pos {
    #[default]
    Verb,
    Noun,
    Adjective,
    Adverb,
}

/// A complete verb feature bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FeatureBundle {
    pub construction: Construction,
    pub mood: Mood,
    pub agent: Option<PersonNumber>,
    pub patient: Option<PersonNumber>,
    pub negation: bool,
    pub directional: bool,
    pub repetition: bool,
    pub voice: Voice,
}

impl FeatureBundle {
    pub fn new(construction: Construction) -> Self {
        let mood = if construction.is_conditional() {
            Mood::Conditional
        } else {
            Mood::Indicative
        };
        FeatureBundle {
            construction,
            mood,
            agent: None,
            patient: None,
            negation: false,
            directional: false,
            repetition: false,
            voice: Voice::Active,
        }
    }

    pub fn with_agent(mut self, pn: PersonNumber) -> Self {
        self.agent = Some(pn);
        self
    }

    pub fn with_patient(mut self, pn: PersonNumber) -> Self {
        self.patient = Some(pn);
        self
    }

    pub fn with_mood(mut self, mood: Mood) -> Self {
        self.mood = mood;
        self
    }

    pub fn negated(mut self) -> Self {
        self.negation = true;
        self
    }

    pub fn directional(mut self) -> Self {
        self.directional = true;
        self
    }

    pub fn repeated(mut self) -> Self {
        self.repetition = true;
        self
    }

    pub fn passive(mut self) -> Self {
        self.voice = Voice::Passive;
        self
    }

    /// The negation prefix this bundle selects: me- in the imperative, na-
    /// in the present indicative, ne- everywhere else.
    pub fn negation_flavor(&self) -> Option<NegFlavor> {
        if !self.negation {
            return None;
        }
        Some(if self.mood == Mood::Imperative {
            NegFlavor::Me
        } else if self.construction.is_present() && self.mood == Mood::Indicative {
            NegFlavor::Na
        } else {
            NegFlavor::Ne
        })
    }

    /// Compact feature string, `key=value` pairs separated by spaces.
    pub fn feature_string(&self) -> String {
        let mut parts = vec![self.construction.name().to_string()];
        if self.mood != Mood::Indicative || self.construction.is_conditional() {
            parts.push(format!("mood={}", self.mood.name()));
        }
        if let Some(a) = self.agent {
            parts.push(format!("agent={a}"));
        }
        if let Some(p) = self.patient {
            parts.push(format!("patient={p}"));
        }
        if self.negation {
            parts.push("neg".to_string());
        }
        if self.directional {
            parts.push("dir".to_string());
        }
        if self.repetition {
            parts.push("rep".to_string());
        }
        if self.voice == Voice::Passive {
            parts.push("passive".to_string());
        }
        parts.join(" ")
    }

    /// Parses the `feature_string` format: construction name first, then
    /// `key=value` pairs and bare flags.
    pub fn parse(tokens: &[&str]) -> Result<FeatureBundle, String> {
        let first = tokens.first().ok_or("missing construction name")?;
        let construction =
            Construction::parse(first).ok_or_else(|| format!("unknown construction {first:?}"))?;
        let mut bundle = FeatureBundle::new(construction);
        for token in &tokens[1..] {
            match token.split_once('=') {
                Some(("mood", v)) => {
                    bundle.mood = Mood::parse(v).ok_or_else(|| format!("unknown mood {v:?}"))?;
                }
                Some(("agent", v)) => {
                    bundle.agent =
                        Some(PersonNumber::parse(v).ok_or_else(|| format!("bad agent {v:?}"))?);
                }
                Some(("patient", v)) => {
                    bundle.patient =
                        Some(PersonNumber::parse(v).ok_or_else(|| format!("bad patient {v:?}"))?);
                }
                Some((k, _)) => return Err(format!("unknown key {k:?}")),
                None => match *token {
                    "neg" => bundle.negation = true,
                    "dir" => bundle.directional = true,
                    "rep" => bundle.repetition = true,
                    "passive" => bundle.voice = Voice::Passive,
                    other => return Err(format!("unknown flag {other:?}")),
                },
            }
        }
        Ok(bundle)
    }
}

/// A violated feature-bundle invariant. Violations are data, not failures.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    PatientOnIntransitive,
    PatientMissing,
    AgentMissing,
    AgentOnImpersonal,
    ImperativeNotSecondPerson,
    ImperativeMoodNotPresent,
    SubjunctiveMoodUnavailable,
    ConditionalMoodMismatch,
    DirectionalUnavailable,
    PassiveTransitive,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            Violation::PatientOnIntransitive => "patient marker on an intransitive construction",
            Violation::PatientMissing => "past transitive construction requires a patient",
            Violation::AgentMissing => "construction requires an agent",
            Violation::AgentOnImpersonal => {
                "infinitive and perfect participle take no person markers"
            }
            Violation::ImperativeNotSecondPerson => "imperative is restricted to 2nd person",
            Violation::ImperativeMoodNotPresent => {
                "imperative mood exists only in the present constructions"
            }
            Violation::SubjunctiveMoodUnavailable => {
                "subjunctive mood exists only in the present and past perfect constructions"
            }
            Violation::ConditionalMoodMismatch => {
                "conditional constructions require conditional mood and vice versa"
            }
            Violation::DirectionalUnavailable => {
                "the directional =e has no slot in this construction"
            }
            Violation::PassiveTransitive => "passive bundles conjugate as intransitives",
        };
        f.write_str(msg)
    }
}

/// Checks a bundle against the co-occurrence constraints. Returns every
/// violated invariant; an empty list means the bundle is generable by some
/// word-structure rule.
pub fn validate_features(f: &FeatureBundle) -> Vec<Violation> {
    let mut v = Vec::new();
    let c = f.construction;

    if f.patient.is_some() && !c.is_transitive() {
        v.push(Violation::PatientOnIntransitive);
    }
    if c.is_past_transitive() && f.patient.is_none() {
        v.push(Violation::PatientMissing);
    }
    if c.is_impersonal() {
        if f.agent.is_some() || f.patient.is_some() {
            v.push(Violation::AgentOnImpersonal);
        }
    } else if f.agent.is_none() {
        v.push(Violation::AgentMissing);
    }
    match f.mood {
        Mood::Imperative => {
            if !c.is_present() {
                v.push(Violation::ImperativeMoodNotPresent);
            }
            if let Some(a) = f.agent {
                if a.person != 2 {
                    v.push(Violation::ImperativeNotSecondPerson);
                }
            }
        }
        Mood::Subjunctive => {
            if !c.is_present() && !c.is_past_perfect() {
                v.push(Violation::SubjunctiveMoodUnavailable);
            }
        }
        Mood::Conditional => {
            if !c.is_conditional() {
                v.push(Violation::ConditionalMoodMismatch);
            }
        }
        Mood::Indicative => {
            if c.is_conditional() {
                v.push(Violation::ConditionalMoodMismatch);
            }
        }
    }
    if f.directional && !c.allows_directional() {
        v.push(Violation::DirectionalUnavailable);
    }
    if f.voice == Voice::Passive && c.is_transitive() {
        v.push(Violation::PassiveTransitive);
    }
    v
}

/// Enumerates every valid bundle for a lexeme of the given transitivity and
/// voice, in deterministic order: construction, mood, agent, patient, flags.
pub fn enumerate_bundles(transitive: bool, passive: bool) -> Vec<FeatureBundle> {
    let mut out = Vec::new();
    for c in Construction::ALL {
        if !c.is_impersonal() && c.is_transitive() != (transitive && !passive) {
            continue;
        }
        let moods: &[Mood] = if c.is_conditional() {
            &[Mood::Conditional]
        } else if c.is_past_perfect() {
            &[Mood::Indicative, Mood::Subjunctive]
        } else if c.is_present() {
            &[Mood::Indicative, Mood::Subjunctive, Mood::Imperative]
        } else {
            &[Mood::Indicative]
        };
        for &mood in moods {
            let agents: Vec<Option<PersonNumber>> = if c.is_impersonal() {
                vec![None]
            } else if mood == Mood::Imperative {
                vec![
                    Some(PersonNumber::new(2, Number::Sg)),
                    Some(PersonNumber::new(2, Number::Pl)),
                ]
            } else {
                PersonNumber::ALL.iter().copied().map(Some).collect()
            };
            let patients: Vec<Option<PersonNumber>> = if c.is_past_transitive() {
                PersonNumber::ALL.iter().copied().map(Some).collect()
            } else if c == Construction::PresentTr {
                let mut p: Vec<_> = vec![None];
                p.extend(PersonNumber::ALL.iter().copied().map(Some));
                p
            } else {
                vec![None]
            };
            for agent in &agents {
                for patient in &patients {
                    for negation in [false, true] {
                        let dirs: &[bool] = if c.allows_directional() {
                            &[false, true]
                        } else {
                            &[false]
                        };
                        for &directional in dirs {
                            for repetition in [false, true] {
                                let f = FeatureBundle {
                                    construction: c,
                                    mood,
                                    agent: *agent,
                                    patient: *patient,
                                    negation,
                                    directional,
                                    repetition,
                                    voice: if passive { Voice::Passive } else { Voice::Active },
                                };
                                debug_assert!(validate_features(&f).is_empty(), "{f:?}");
                                out.push(f);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}
