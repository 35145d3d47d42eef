//! The alternation cascade: underlying morpheme sequences to surface forms
//! and back.
//!
//! Realization walks the boundaries left to right. At each juncture the
//! guarded alternations fire first (they need to know which morpheme they
//! are touching), then the four automatic alternations run to a fixpoint in
//! a configurable order, then the boundary is erased. Every mutation is
//! recorded in a trace that can be replayed.

use crate::alphabet::{is_consonant, is_long_vowel, is_rounded, is_vowel, normalize};
use crate::morph::{MorphemeSequence, Number, PersonNumber, Role, Series};
use serde::Serialize;
use std::collections::HashSet;

/// One underlying chunk: a surface-less morpheme shape plus its role.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Part {
    pub form: String,
    pub role: Role,
}

impl Part {
    pub fn new(form: &str, role: Role) -> Self {
        Part { form: form.to_string(), role }
    }
}

/// The four automatic (context-only) alternations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum AutoRule {
    /// Two identical adjacent vowels reduce to one.
    Degemination,
    /// Short `i` is lost next to a vowel, and after `w`/`y`.
    IElision,
    /// Hiatus resolution: marker-initial `î` and the perfect `û` turn into
    /// glides after a vowel; elsewhere a glide is inserted.
    Glide,
    /// /..V:CiC/ loses its `i` before the directional `e`.
    Contraction,
}

impl AutoRule {
    pub const ALL: [AutoRule; 4] = [
        AutoRule::Degemination,
        AutoRule::IElision,
        AutoRule::Glide,
        AutoRule::Contraction,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            AutoRule::Degemination => "degemination",
            AutoRule::IElision => "i-elision",
            AutoRule::Glide => "glide",
            AutoRule::Contraction => "contraction",
        }
    }
}

/// An ordering of the automatic alternations. The order is a configuration
/// value, not a constant: the ordering oracle re-runs realization under all
/// permutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RuleOrder(pub [AutoRule; 4]);

impl Default for RuleOrder {
    fn default() -> Self {
        RuleOrder(AutoRule::ALL)
    }
}

impl RuleOrder {
    /// All 24 permutations, in a fixed order.
    pub fn all() -> Vec<RuleOrder> {
        let mut out = Vec::with_capacity(24);
        let r = AutoRule::ALL;
        for a in 0..4 {
            for b in 0..4 {
                if b == a {
                    continue;
                }
                for c in 0..4 {
                    if c == a || c == b {
                        continue;
                    }
                    let d = 6 - a - b - c;
                    out.push(RuleOrder([r[a], r[b], r[c], r[d]]));
                }
            }
        }
        out
    }

    pub fn name(&self) -> String {
        self.0
            .iter()
            .map(|r| r.name())
            .collect::<Vec<_>>()
            .join(">")
    }
}

/// One mutation of the working string. `before` and `after` are the whole
/// working string with `·` boundaries, so a trace replays by chaining.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub rule: String,
    pub before: String,
    pub after: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Realization {
    pub surface: String,
    pub trace: Vec<TraceStep>,
}

pub fn realize(seq: &MorphemeSequence) -> Realization {
    realize_ordered(seq, &RuleOrder::default())
}

pub fn realize_ordered(seq: &MorphemeSequence, order: &RuleOrder) -> Realization {
    let parts: Vec<Part> = seq
        .items
        .iter()
        .filter(|m| !m.is_zero())
        .map(|m| Part::new(&m.form, m.role))
        .collect();
    realize_parts(&parts, order)
}

fn is_marker_role(role: Role) -> bool {
    matches!(
        role,
        Role::Agent(_, _) | Role::Patient(_, _) | Role::Possessive(_)
    )
}

fn chunk_string(acc: &[char], r: &[char], rest: &[String]) -> String {
    let mut s: String = acc.iter().collect();
    if !r.is_empty() || !rest.is_empty() {
        s.push('·');
        s.push_str(&r.iter().collect::<String>());
    }
    for chunk in rest {
        s.push('·');
        s.push_str(chunk);
    }
    s
}

pub fn realize_parts(parts: &[Part], order: &RuleOrder) -> Realization {
    let mut parts: Vec<Part> = parts.to_vec();
    let mut trace = Vec::new();

    // A directional =e directly before -ewe is absorbed by it.
    let mut i = 0;
    while i + 1 < parts.len() {
        if parts[i].role == Role::Directional && parts[i + 1].role == Role::Repetition {
            let before = parts
                .iter()
                .map(|p| p.form.clone())
                .collect::<Vec<_>>()
                .join("·");
            parts.remove(i);
            let after = parts
                .iter()
                .map(|p| p.form.clone())
                .collect::<Vec<_>>()
                .join("·");
            trace.push(TraceStep {
                rule: "directional-absorbed".to_string(),
                before,
                after,
            });
        } else {
            i += 1;
        }
    }

    if parts.is_empty() {
        return Realization {
            surface: String::new(),
            trace,
        };
    }

    let mut acc: Vec<char> = normalize(&parts[0].form).chars().collect();
    let mut last_role = parts[0].role;

    for idx in 1..parts.len() {
        let part = &parts[idx];
        let mut r: Vec<char> = normalize(&part.form).chars().collect();
        let rest: Vec<String> = parts[idx + 1..].iter().map(|p| p.form.clone()).collect();

        loop {
            let before = chunk_string(&acc, &r, &rest);
            let applied = apply_guarded(&mut acc, &mut r, last_role, part.role)
                .or_else(|| apply_auto(&mut acc, &mut r, part.role, order));
            match applied {
                Some(rule) => {
                    trace.push(TraceStep {
                        rule: rule.to_string(),
                        before,
                        after: chunk_string(&acc, &r, &rest),
                    });
                }
                None => break,
            }
        }

        let before = chunk_string(&acc, &r, &rest);
        acc.extend(r.iter());
        let mut after: String = acc.iter().collect();
        for chunk in &rest {
            after.push('·');
            after.push_str(chunk);
        }
        trace.push(TraceStep {
            rule: "join".to_string(),
            before,
            after,
        });
        last_role = part.role;
    }

    Realization {
        surface: acc.iter().collect(),
        trace,
    }
}

/// Morphologically guarded alternations. These outrank the automatic set.
fn apply_guarded(
    acc: &mut Vec<char>,
    r: &mut Vec<char>,
    last_role: Role,
    incoming: Role,
) -> Option<&'static str> {
    let l = *acc.last()?;
    let three_sg = PersonNumber::new(3, Number::Sg);
    let two_sg = PersonNumber::new(2, Number::Sg);

    let left_is_cop_3sg = last_role == Role::Copula3Sg
        || last_role == Role::Agent(Series::Cop, three_sg);
    if left_is_cop_3sg
        && l == 'e'
        && matches!(incoming, Role::Directional | Role::Repetition)
    {
        acc.push('t');
        return Some("t-insertion");
    }

    if last_role == Role::Agent(Series::Pm2, two_sg) && l == 'e' && incoming == Role::Repetition
    {
        acc.push('r');
        return Some("r-insertion");
    }

    let left_is_present_stem = matches!(
        last_role,
        Role::Root | Role::StemSuffix(crate::morph::StemTense::Present)
    );
    if left_is_present_stem && incoming == Role::Agent(Series::Pm1, three_sg) {
        if l == 'e' && r.first() == Some(&'ê') {
            acc.pop();
            acc.push('a');
            r.remove(0);
            return Some("e-lowering");
        }
        if l == 'o' && r.first() == Some(&'ê') {
            acc.pop();
            acc.push('w');
            acc.push('a');
            r.remove(0);
            return Some("o-gliding");
        }
    }

    if incoming == Role::Emphasis && is_vowel(l) && r.first() == Some(&'î') {
        r.remove(0);
        return Some("emphasis-reduction");
    }

    if incoming == Role::Determiner(crate::morph::Determiner::Indefinite, Number::Sg)
        && is_vowel(l)
        && r.as_slice() == ['ê', 'k']
    {
        *r = vec!['y', 'e', 'k'];
        return Some("indefinite-y");
    }

    if matches!(incoming, Role::Determiner(crate::morph::Determiner::Definite, _))
        && is_vowel(l)
        && r.first() == Some(&'e')
    {
        r.remove(0);
        return Some("definite-e-drop");
    }

    None
}

/// Automatic alternations, tried in the configured order; the first that
/// applies wins and the scan restarts.
fn apply_auto(
    acc: &mut Vec<char>,
    r: &mut Vec<char>,
    incoming: Role,
    order: &RuleOrder,
) -> Option<&'static str> {
    for rule in order.0 {
        let l = match acc.last() {
            Some(&c) => c,
            None => return None,
        };
        let r0 = match r.first() {
            Some(&c) => c,
            None => return None,
        };
        match rule {
            AutoRule::Degemination => {
                if l == r0 && is_vowel(l) {
                    r.remove(0);
                    return Some(rule.name());
                }
            }
            AutoRule::IElision => {
                if l == 'i' && is_vowel(r0) {
                    acc.pop();
                    return Some(rule.name());
                }
                if r0 == 'i' && (is_vowel(l) || l == 'w' || l == 'y') {
                    r.remove(0);
                    return Some(rule.name());
                }
            }
            AutoRule::Glide => {
                if is_vowel(l) && is_vowel(r0) {
                    if r0 == 'î' && is_marker_role(incoming) {
                        r[0] = 'y';
                    } else if incoming == Role::Perfect && r.as_slice() == ['û'] {
                        r[0] = 'w';
                    } else if is_rounded(l) || is_rounded(r0) {
                        acc.push('w');
                    } else {
                        acc.push('y');
                    }
                    return Some(rule.name());
                }
            }
            AutoRule::Contraction => {
                let n = acc.len();
                if incoming == Role::Directional
                    && r.as_slice() == ['e']
                    && n >= 4
                    && is_long_vowel(acc[n - 4])
                    && is_consonant(acc[n - 3])
                    && acc[n - 2] == 'i'
                    && is_consonant(acc[n - 1])
                {
                    acc.remove(n - 2);
                    return Some(rule.name());
                }
            }
        }
    }
    None
}

/// Verifies that a trace chains: each step starts from the previous result.
pub fn replay(underlying: &str, trace: &[TraceStep], surface: &str) -> bool {
    let mut cur = underlying.to_string();
    for step in trace {
        if step.before != cur {
            return false;
        }
        cur = step.after.clone();
    }
    cur == surface
}

#[derive(Debug, Clone, Copy)]
pub struct UnrealizeConfig {
    /// Maximum number of candidate segmentations.
    pub cap: usize,
    /// Maximum number of boundaries per candidate.
    pub max_boundaries: usize,
}

impl Default for UnrealizeConfig {
    fn default() -> Self {
        UnrealizeConfig {
            cap: 20_000,
            max_boundaries: 8,
        }
    }
}

#[derive(Debug, Clone)]
pub struct UnrealizeResult {
    pub candidates: Vec<String>,
    pub truncated: bool,
}

/// Inverts the cascade locally: returns underlying segmentations that could
/// realize as `surface`. Overgenerates by design; a parser downstream
/// discards segmentations that no word-structure rule licenses.
pub fn unrealize(surface: &str, cfg: &UnrealizeConfig) -> UnrealizeResult {
    let surface = normalize(surface);
    let chars: Vec<char> = surface.chars().collect();
    let mut out: Vec<String> = Vec::new();
    let mut emitted: HashSet<String> = HashSet::new();
    let mut truncated = false;
    // Deepen on boundary count so sparse segmentations are emitted before
    // the cap bites.
    for budget in 0..=cfg.max_boundaries {
        let mut visited: HashSet<String> = HashSet::new();
        go(
            String::new(),
            &[],
            &chars,
            budget,
            cfg,
            &mut out,
            &mut emitted,
            &mut visited,
            &mut truncated,
        );
        if truncated {
            break;
        }
    }
    out.sort();
    UnrealizeResult {
        candidates: out,
        truncated,
    }
}

#[allow(clippy::too_many_arguments)]
fn go(
    prefix: String,
    ctx: &[char],
    rest: &[char],
    budget: usize,
    cfg: &UnrealizeConfig,
    out: &mut Vec<String>,
    emitted: &mut HashSet<String>,
    visited: &mut HashSet<String>,
    truncated: &mut bool,
) {
    if out.len() >= cfg.cap {
        *truncated = true;
        return;
    }
    if rest.is_empty() {
        return;
    }
    let candidate = format!("{}{}", prefix, rest.iter().collect::<String>());
    if !visited.insert(candidate.clone()) {
        return;
    }
    if emitted.insert(candidate.clone()) {
        out.push(candidate);
    }
    let used = prefix.chars().filter(|&c| c == '·').count();
    if used >= budget {
        return;
    }
    for i in 1..=rest.len() {
        for (head, tail) in split_variants(ctx, rest, i) {
            if tail.is_empty() {
                continue;
            }
            // A head carrying its own boundary spends part of the budget.
            if used + 1 + head.iter().filter(|&&c| c == '·').count() > budget {
                continue;
            }
            let new_prefix = format!(
                "{}{}·",
                prefix,
                head.iter().collect::<String>()
            );
            let mut new_ctx: Vec<char> = ctx.to_vec();
            new_ctx.extend(head.iter().filter(|&&c| c != '·'));
            go(
                new_prefix, &new_ctx, &tail, budget, cfg, out, emitted, visited, truncated,
            );
            if *truncated {
                return;
            }
        }
    }
}

/// The inverse local rewrites at one split point: each returns the underlying
/// first chunk and the (possibly restored) remaining surface.
fn split_variants(ctx: &[char], rest: &[char], i: usize) -> Vec<(Vec<char>, Vec<char>)> {
    let head: Vec<char> = rest[..i].to_vec();
    let tail: Vec<char> = rest[i..].to_vec();
    let l = *head.last().unwrap();
    let r0 = tail.first().copied();
    // Surface left context across earlier boundaries, for window patterns.
    let mut full: Vec<char> = ctx.to_vec();
    full.extend(head.iter());
    let mut out: Vec<(Vec<char>, Vec<char>)> = Vec::new();

    let stable_plain = match r0 {
        None => false,
        Some(r0) => {
            !(is_vowel(l) && is_vowel(r0))
                && !(l == 'i' && is_vowel(r0))
                && !(r0 == 'i' && (is_vowel(l) || l == 'w' || l == 'y'))
        }
    };
    if stable_plain {
        out.push((head.clone(), tail.clone()));
        // A directional e may have been absorbed before -ewe.
        if tail.starts_with(&['e', 'w', 'e']) {
            let mut h = head.clone();
            h.extend(['·', 'e']);
            out.push((h, tail.clone()));
        }
    }

    // Degemination: restore the dropped copy of a vowel.
    if is_vowel(l) {
        let mut t = vec![l];
        t.extend(tail.iter());
        out.push((head.clone(), t));
    }

    // i-elision, right side: V·i.. or w/y·i.. lost the i.
    if is_vowel(l) || l == 'w' || l == 'y' {
        let mut t = vec!['i'];
        t.extend(tail.iter());
        out.push((head.clone(), t));
    }

    // i-elision, left side: ..i·V lost the i.
    if r0.is_some_and(is_vowel) {
        let mut h = head.clone();
        h.push('i');
        out.push((h, tail.clone()));
    }

    // Contraction with the boundary between the consonants: ..V:C·Ce was
    // ..V:C·iCe.
    // The window is checked over the underlying context, which may still
    // carry a short i that elides on the way to the surface.
    let m = full.len();
    let window_vowel = m >= 2
        && (is_long_vowel(full[m - 2])
            || (m >= 3 && full[m - 2] == 'i' && is_long_vowel(full[m - 3])));
    if window_vowel
        && is_consonant(l)
        && tail.len() >= 2
        && r0.is_some_and(is_consonant)
        && tail[1] == 'e'
    {
        let mut t = vec!['i'];
        t.extend(tail.iter());
        out.push((head.clone(), t));
    }

    // Definite article after a vowel lost its e.
    if is_vowel(l) && (tail.starts_with(&['k', 'e']) || tail.starts_with(&['k', 'a', 'n'])) {
        let mut t = vec!['e'];
        t.extend(tail.iter());
        out.push((head, t));
    }

    out.extend(rewrite_variants(rest, i));
    out
}

/// Split variants that consume or rewrite surface material at the juncture.
fn rewrite_variants(rest: &[char], i: usize) -> Vec<(Vec<char>, Vec<char>)> {
    let mut out = Vec::new();
    let head: Vec<char> = rest[..i].to_vec();
    let tail: Vec<char> = rest[i..].to_vec();
    let n = head.len();
    let l = head[n - 1];

    // Glide removal: V(y|w)V was V·V underneath.
    if i < rest.len()
        && (rest[i] == 'y' || rest[i] == 'w')
        && is_vowel(l)
        && rest.get(i + 1).copied().is_some_and(is_vowel)
    {
        out.push((head.clone(), rest[i + 1..].to_vec()));
    }

    if n >= 2 && is_vowel(head[n - 2]) {
        // Marker î surfaced as y after a vowel.
        if l == 'y' {
            let mut t = vec!['î'];
            t.extend(tail.iter());
            out.push((head[..n - 1].to_vec(), t));
        }
        // Perfect û surfaced as w after a vowel.
        if l == 'w' {
            let mut t = vec!['û'];
            t.extend(tail.iter());
            out.push((head[..n - 1].to_vec(), t));
        }
    }

    // t-insertion before the directional/repetition after a copular e.
    if n >= 2 && head[n - 2] == 'e' && l == 't' && (tail.starts_with(&['e'])) {
        out.push((head[..n - 1].to_vec(), tail.clone()));
    }

    // r-insertion in the imperative before -ewe.
    if n >= 2 && head[n - 2] == 'e' && l == 'r' && tail.starts_with(&['e', 'w', 'e']) {
        out.push((head[..n - 1].to_vec(), tail.clone()));
    }

    // e-lowering: Ca(t) was Ce·ê(t).
    if n >= 2 && l == 'a' && is_consonant(head[n - 2]) {
        let mut h = head[..n - 1].to_vec();
        h.push('e');
        if tail.first() == Some(&'t') {
            let mut t = vec!['ê', 't'];
            t.extend(tail[1..].iter());
            out.push((h.clone(), t));
        }
        let mut t = vec!['ê'];
        t.extend(tail.iter());
        out.push((h, t));
    }

    // o-gliding: wa(t) was o·ê(t).
    if n >= 2 && head[n - 2] == 'w' && l == 'a' {
        let mut h = head[..n - 2].to_vec();
        h.push('o');
        if !h.is_empty() {
            if tail.first() == Some(&'t') {
                let mut t = vec!['ê', 't'];
                t.extend(tail[1..].iter());
                out.push((h.clone(), t));
            }
            let mut t = vec!['ê'];
            t.extend(tail.iter());
            out.push((h, t));
        }
    }

    // Contraction: ..V:CC·e was ..V:CiC·e.
    if n >= 3
        && is_long_vowel(head[n - 3])
        && is_consonant(head[n - 2])
        && is_consonant(l)
        && tail.starts_with(&['e'])
    {
        let mut h = head[..n - 1].to_vec();
        h.push('i');
        h.push(l);
        out.push((h, tail.clone()));
    }

    // Emphasis îş reduced to ş after a vowel.
    if is_vowel(l) && tail.first() == Some(&'ş') {
        let mut t = vec!['î', 'ş'];
        t.extend(tail[1..].iter());
        out.push((head.clone(), t));
    }

    // Indefinite êk surfaced as yek (or as yêk via glide) after a vowel.
    if is_vowel(l) && tail.starts_with(&['y', 'e', 'k']) {
        let mut t = vec!['ê', 'k'];
        t.extend(tail[3..].iter());
        out.push((head, t));
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morph::{Determiner, NegFlavor, Role, Series, StemTense};
    use Number::{Pl, Sg};

    fn pn(p: u8, n: Number) -> PersonNumber {
        PersonNumber::new(p, n)
    }

    fn surf(parts: &[Part]) -> String {
        realize_parts(parts, &RuleOrder::default()).surface
    }

    #[test]
    fn degemination() {
        let parts = [
            Part::new("şêwe", Role::NounStem),
            Part::new("e", Role::Determiner(Determiner::Demonstrative, Sg)),
        ];
        assert_eq!(surf(&parts), "şêwe");
    }

    #[test]
    fn i_elision_both_sides() {
        let parts = [
            Part::new("çi", Role::Root),
            Part::new("û", Role::StemSuffix(StemTense::Past)),
        ];
        assert_eq!(surf(&parts), "çû");
        let parts = [
            Part::new("hêna", Role::Root),
            Part::new("û", Role::Perfect),
            Part::new("im", Role::Agent(Series::Pm4, pn(1, Sg))),
        ];
        assert_eq!(surf(&parts), "hênawm");
    }

    #[test]
    fn glide_insertion_and_marker_glides() {
        let parts = [
            Part::new("ge", Role::Root),
            Part::new("îşt", Role::StemSuffix(StemTense::Past)),
        ];
        assert_eq!(surf(&parts), "geyîşt");
        let parts = [
            Part::new("çi", Role::Root),
            Part::new("û", Role::StemSuffix(StemTense::Past)),
            Part::new("e", Role::Directional),
        ];
        assert_eq!(surf(&parts), "çûwe");
        let parts = [
            Part::new("da", Role::Particle),
            Part::new("î", Role::Agent(Series::Pm4, pn(3, Sg))),
            Part::new("sûtand", Role::Root),
            Part::new("im", Role::Patient(Series::Pm3, pn(1, Sg))),
        ];
        assert_eq!(surf(&parts), "daysûtandim");
    }

    #[test]
    fn contraction_only_before_directional() {
        let dir = [
            Part::new("bird", Role::Root),
            Part::new("û", Role::Perfect),
            Part::new("im", Role::Agent(Series::Pm4, pn(1, Sg))),
            Part::new("in", Role::Patient(Series::Pm3, pn(3, Pl))),
            Part::new("e", Role::Directional),
        ];
        assert_eq!(surf(&dir), "birdûmne");
        let cop = [
            Part::new("bird", Role::Root),
            Part::new("û", Role::Perfect),
            Part::new("im", Role::Agent(Series::Pm4, pn(1, Sg))),
            Part::new("in", Role::Patient(Series::Pm3, pn(3, Pl))),
            Part::new("e", Role::Copula3Sg),
        ];
        assert_eq!(surf(&cop), "birdûmine");
    }

    #[test]
    fn t_insertion_after_copula() {
        let parts = [
            Part::new("bird", Role::Root),
            Part::new("û", Role::Perfect),
            Part::new("im", Role::Agent(Series::Pm4, pn(1, Sg))),
            Part::new("e", Role::Copula3Sg),
            Part::new("e", Role::Directional),
        ];
        assert_eq!(surf(&parts), "birdûmete");
        let parts = [
            Part::new("hel", Role::Particle),
            Part::new("hat", Role::Root),
            Part::new("û", Role::Perfect),
            Part::new("e", Role::Agent(Series::Cop, pn(3, Sg))),
            Part::new("ewe", Role::Repetition),
        ];
        assert_eq!(surf(&parts), "helhatûwetewe");
    }

    #[test]
    fn r_insertion_in_imperative() {
        let parts = [
            Part::new("bi", Role::Imperative),
            Part::new("xwên", Role::Root),
            Part::new("e", Role::Agent(Series::Pm2, pn(2, Sg))),
            Part::new("ewe", Role::Repetition),
        ];
        assert_eq!(surf(&parts), "bixwênerewe");
    }

    #[test]
    fn stem_final_vowel_with_third_singular() {
        let parts = [
            Part::new("de", Role::Progressive),
            Part::new("ge", Role::Root),
            Part::new("ê", Role::Agent(Series::Pm1, pn(3, Sg))),
        ];
        assert_eq!(surf(&parts), "dega");
        let parts = [
            Part::new("de", Role::Progressive),
            Part::new("xo", Role::Root),
            Part::new("ê", Role::Agent(Series::Pm1, pn(3, Sg))),
        ];
        assert_eq!(surf(&parts), "dexwa");
        let parts = [
            Part::new("na", Role::Negation(NegFlavor::Na)),
            Part::new("xo", Role::Root),
            Part::new("êt", Role::Agent(Series::Pm1, pn(3, Sg))),
            Part::new("ewe", Role::Repetition),
        ];
        assert_eq!(surf(&parts), "naxwatewe");
    }

    #[test]
    fn nominal_guards() {
        let parts = [
            Part::new("sawa", Role::NounStem),
            Part::new("eke", Role::Determiner(Determiner::Definite, Sg)),
        ];
        assert_eq!(surf(&parts), "sawake");
        let parts = [
            Part::new("name", Role::NounStem),
            Part::new("îş", Role::Emphasis),
        ];
        assert_eq!(surf(&parts), "nameş");
        let parts = [
            Part::new("name", Role::NounStem),
            Part::new("êk", Role::Determiner(Determiner::Indefinite, Sg)),
        ];
        assert_eq!(surf(&parts), "nameyek");
    }

    #[test]
    fn directional_absorbed_by_repetition() {
        let parts = [
            Part::new("gir", Role::Root),
            Part::new("t", Role::StemSuffix(StemTense::Past)),
            Part::new("im", Role::Agent(Series::Pm4, pn(1, Sg))),
            Part::new("in", Role::Patient(Series::Pm3, pn(3, Pl))),
            Part::new("e", Role::Directional),
            Part::new("ewe", Role::Repetition),
        ];
        let r = realize_parts(&parts, &RuleOrder::default());
        assert_eq!(r.surface, "girtiminewe");
        assert_eq!(r.trace[0].rule, "directional-absorbed");
    }

    #[test]
    fn trace_replays() {
        let parts = [
            Part::new("ne", Role::Negation(NegFlavor::Ne)),
            Part::new("ma", Role::Root),
            Part::new("û", Role::Perfect),
            Part::new("î", Role::Agent(Series::Cop, pn(2, Sg))),
            Part::new("e", Role::Directional),
        ];
        let r = realize_parts(&parts, &RuleOrder::default());
        assert_eq!(r.surface, "nemawîye");
        let underlying = parts
            .iter()
            .map(|p| p.form.as_str())
            .collect::<Vec<_>>()
            .join("·");
        assert!(replay(&underlying, &r.trace, &r.surface));
    }

    #[test]
    fn surface_phonotactics() {
        // No generated surface keeps an identical vowel pair or an i next
        // to a vowel at a resolved juncture.
        for parts in [
            vec![
                Part::new("bi", Role::Root),
                Part::new("ird", Role::StemSuffix(StemTense::Past)),
            ],
            vec![
                Part::new("mi", Role::Root),
                Part::new("a", Role::StemSuffix(StemTense::Past)),
            ],
            vec![
                Part::new("ki", Role::Root),
                Part::new("e", Role::StemSuffix(StemTense::Present)),
            ],
        ] {
            let s = surf(&parts);
            let cs: Vec<char> = s.chars().collect();
            for w in cs.windows(2) {
                assert!(!(is_vowel(w[0]) && w[0] == w[1]), "{s}");
            }
        }
        assert_eq!(
            surf(&[
                Part::new("bi", Role::Root),
                Part::new("ird", Role::StemSuffix(StemTense::Past))
            ]),
            "bird"
        );
    }

    #[test]
    fn rule_order_permutations() {
        assert_eq!(RuleOrder::all().len(), 24);
        // i-elision before glide matters: hêna + im must elide, not glide.
        let parts = [
            Part::new("hêna", Role::Root),
            Part::new("im", Role::Agent(Series::Pm3, pn(1, Sg))),
        ];
        assert_eq!(surf(&parts), "hênam");
        let glide_first = RuleOrder([
            AutoRule::Glide,
            AutoRule::IElision,
            AutoRule::Degemination,
            AutoRule::Contraction,
        ]);
        assert_eq!(realize_parts(&parts, &glide_first).surface, "hênaym");
    }

    #[test]
    fn unrealize_recovers_underlying() {
        let cfg = UnrealizeConfig {
            cap: 200_000,
            max_boundaries: 6,
        };
        for (surface, underlying) in [
            ("bird", "bi·ird"),
            ("çûwe", "çi·û·e"),
            ("geyîşt", "ge·îşt"),
            ("sawake", "sawa·eke"),
            ("hênawm", "hêna·û·im"),
            ("birdûmne", "bird·û·im·in·e"),
            ("birdûmete", "bird·û·im·e·e"),
            ("deba", "de·be·ê"),
            ("dexwa", "de·xo·ê"),
            ("nameş", "name·îş"),
            ("nameyek", "name·êk"),
            ("bixwênerewe", "bi·xwên·e·ewe"),
            ("girtiminewe", "gir·t·im·in·e·ewe"),
        ] {
            let res = unrealize(surface, &cfg);
            assert!(
                res.candidates.iter().any(|c| c == underlying),
                "{surface}: {underlying} not among {} candidates (truncated={})",
                res.candidates.len(),
                res.truncated
            );
        }
    }
}
