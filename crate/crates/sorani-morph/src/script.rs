//! Latin/Arabic script conversion.
//!
//! Latin to Arabic is deterministic: the short i is unwritten and a
//! word-initial vowel takes a hamza carrier. Arabic to Latin is ambiguous
//! (وو runs, ی readings, unwritten i) and returns a bounded candidate set
//! filtered by surface phonotactics.

use crate::alphabet::{is_vowel, normalize};

pub const DEFAULT_BOUND: usize = 64;

const LETTER_MAP: &[(char, &str)] = &[
    ('a', "ا"),
    ('b', "ب"),
    ('c', "ج"),
    ('ç', "چ"),
    ('d', "د"),
    ('e', "ە"),
    ('ê', "ێ"),
    ('f', "ف"),
    ('g', "گ"),
    ('h', "ه"),
    ('i', ""),
    ('î', "ی"),
    ('j', "ژ"),
    ('k', "ک"),
    ('l', "ل"),
    ('ł', "ڵ"),
    ('m', "م"),
    ('n', "ن"),
    ('o', "ۆ"),
    ('p', "پ"),
    ('q', "ق"),
    ('r', "ر"),
    ('ř', "ڕ"),
    ('s', "س"),
    ('ş', "ش"),
    ('t', "ت"),
    ('u', "و"),
    ('û', "وو"),
    ('v', "ڤ"),
    ('w', "و"),
    ('x', "خ"),
    ('y', "ی"),
    ('z', "ز"),
    ('\'', "ع"),
    ('ḧ', "ح"),
    ('ẍ', "غ"),
];

fn to_arabic_char(c: char) -> Option<&'static str> {
    LETTER_MAP.iter().find(|(l, _)| *l == c).map(|(_, a)| *a)
}

/// Converts one Latin-script word. Unknown characters pass through.
pub fn latin_to_arabic(word: &str) -> String {
    let word = normalize(word);
    let mut out = String::new();
    for (i, c) in word.chars().enumerate() {
        if i == 0 && is_vowel(c) {
            out.push('ئ');
        }
        match to_arabic_char(c) {
            Some(a) => out.push_str(a),
            None => out.push(c),
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslitResult {
    pub candidates: Vec<String>,
    pub truncated: bool,
}

/// One Arabic-script token, decomposed for candidate generation.
enum Token {
    /// Fixed reading.
    Fixed(&'static str),
    /// A run of و, read as any mix of w/u/û.
    WawRun(usize),
    /// A run of ی, read as any mix of y/î.
    YehRun(usize),
    /// Unknown character, passed through.
    Other(char),
}

fn fixed_reading(c: char) -> Option<&'static str> {
    Some(match c {
        'ا' => "a",
        'ب' => "b",
        'ج' => "c",
        'چ' => "ç",
        'د' => "d",
        'ە' => "e",
        'ه' => "h",
        'ێ' => "ê",
        'ف' => "f",
        'گ' => "g",
        'ژ' => "j",
        'ک' | 'ك' => "k",
        'ل' => "l",
        'ڵ' => "ł",
        'م' => "m",
        'ن' => "n",
        'ۆ' => "o",
        'پ' => "p",
        'ق' => "q",
        'ر' => "r",
        'ڕ' => "ř",
        'س' => "s",
        'ش' => "ş",
        'ت' => "t",
        'ڤ' => "v",
        'خ' => "x",
        'ز' => "z",
        'ع' => "'",
        'ح' => "ḧ",
        'غ' => "ẍ",
        _ => return None,
    })
}

fn tokenize(word: &str) -> (bool, Vec<Token>) {
    let mut chars = word.chars().peekable();
    let mut vowel_initial = false;
    if chars.peek() == Some(&'ئ') {
        vowel_initial = true;
        chars.next();
    }
    let mut tokens = Vec::new();
    while let Some(c) = chars.next() {
        match c {
            'و' => {
                let mut n = 1;
                while chars.peek() == Some(&'و') {
                    chars.next();
                    n += 1;
                }
                tokens.push(Token::WawRun(n));
            }
            'ی' | 'ي' => {
                let mut n = 1;
                while matches!(chars.peek(), Some('ی') | Some('ي')) {
                    chars.next();
                    n += 1;
                }
                tokens.push(Token::YehRun(n));
            }
            _ => match fixed_reading(c) {
                Some(s) => tokens.push(Token::Fixed(s)),
                None => tokens.push(Token::Other(c)),
            },
        }
    }
    (vowel_initial, tokens)
}

/// Readings of a homogeneous semivowel run: every string over the given
/// letters whose widths sum to the run length.
fn run_readings(n: usize, units: &[(&'static str, usize)]) -> Vec<String> {
    if n == 0 {
        return vec![String::new()];
    }
    let mut out = Vec::new();
    for (s, w) in units {
        if *w <= n {
            for rest in run_readings(n - w, units) {
                out.push(format!("{s}{rest}"));
            }
        }
    }
    out
}

fn letter_ok(prev: Option<char>, c: char) -> bool {
    match prev {
        None => true,
        Some(p) => {
            // No adjacent vowels; glides never geminate. Consonant geminates
            // do occur (contraction), so only w/y doubling is rejected.
            !(is_vowel(p) && is_vowel(c))
                && !(p == c && (c == 'w' || c == 'y'))
                && !(p == 'u' && c == 'w')
                && !(p == 'w' && c == 'u')
        }
    }
}

/// Semivowels flank a vowel; a w or y with consonants on both sides is not a
/// possible reading.
fn semivowels_flanked(s: &str) -> bool {
    let chars: Vec<char> = s.chars().collect();
    chars.iter().enumerate().all(|(i, &c)| {
        if c != 'w' && c != 'y' {
            return true;
        }
        let before = i > 0 && is_vowel(chars[i - 1]);
        let after = i + 1 < chars.len() && is_vowel(chars[i + 1]);
        before || after
    })
}

/// Surface-shape checks applied to finished candidates: some vowel, and no
/// word-initial cluster except C+glide.
fn shape_ok(s: &str) -> bool {
    let chars: Vec<char> = s.chars().collect();
    if !chars.iter().any(|&c| is_vowel(c)) {
        return false;
    }
    if chars.len() >= 2
        && !is_vowel(chars[0])
        && !is_vowel(chars[1])
        && chars[1] != 'w'
        && chars[1] != 'y'
    {
        return false;
    }
    true
}

/// Converts one Arabic-script word into Latin candidates.
pub fn arabic_to_latin(word: &str, bound: usize) -> TranslitResult {
    let (vowel_initial, tokens) = tokenize(&normalize(word));
    let mut partials: Vec<String> = vec![String::new()];
    let waw = [("û", 2), ("u", 1), ("w", 1)];
    let yeh = [("î", 1), ("y", 1)];
    let mut truncated = false;
    let cap = bound.saturating_mul(16).max(1024);
    for token in &tokens {
        let pieces: Vec<String> = match token {
            Token::Fixed(s) => vec![s.to_string()],
            Token::Other(c) => vec![c.to_string()],
            Token::WawRun(n) => run_readings(*n, &waw),
            Token::YehRun(n) => run_readings(*n, &yeh),
        };
        let mut next = Vec::new();
        'outer: for p in &partials {
            for piece in &pieces {
                for with_i in [false, true] {
                    let mut cand = p.clone();
                    if with_i {
                        // The unwritten i can stand between consonants and,
                        // after the hamza carrier, word-initially.
                        let prev = cand.chars().last();
                        let first = piece.chars().next().unwrap();
                        // An i next to a glide would be written û/î, so
                        // those sites are impossible.
                        let site_ok = match prev {
                            None => vowel_initial,
                            Some(pc) => !is_vowel(pc) && pc != 'w' && pc != 'y',
                        } && !is_vowel(first)
                            && first != 'w';
                        if !site_ok {
                            continue;
                        }
                        cand.push('i');
                    }
                    let mut ok = true;
                    for c in piece.chars() {
                        if !letter_ok(cand.chars().last(), c) {
                            ok = false;
                            break;
                        }
                        cand.push(c);
                    }
                    if ok {
                        next.push(cand);
                        if next.len() > cap {
                            truncated = true;
                            break 'outer;
                        }
                    }
                }
            }
        }
        partials = next;
    }
    let mut candidates: Vec<String> = partials
        .into_iter()
        .filter(|c| {
            let first = c.chars().next();
            let starts_with_vowel = first.is_some_and(is_vowel);
            starts_with_vowel == vowel_initial && semivowels_flanked(c) && shape_ok(c)
        })
        .collect();
    candidates.sort();
    candidates.dedup();
    if candidates.len() > bound {
        candidates.truncate(bound);
        truncated = true;
    }
    TranslitResult { candidates, truncated }
}
