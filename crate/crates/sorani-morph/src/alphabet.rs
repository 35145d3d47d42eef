//! The Latin-based working alphabet.
//!
//! All processing in this crate is segment-wise: a segment is one letter of
//! the working alphabet, which after NFC normalization is always a single
//! `char`. The vowel inventory drives the alternation rules, which are stated
//! over vowel/consonant templates.

use unicode_normalization::UnicodeNormalization;

/// The eight vowels of Sorani Kurdish.
pub const VOWELS: [char; 8] = ['a', 'e', 'ê', 'i', 'î', 'o', 'u', 'û'];

/// Semivowels, used as hiatus breakers between vowels.
pub const SEMIVOWELS: [char; 2] = ['y', 'w'];

/// Long (non-reduced) vowels. The short `i` (Bizroke) and `e` are excluded.
pub const LONG_VOWELS: [char; 6] = ['a', 'ê', 'î', 'o', 'u', 'û'];

/// Rounded vowels; these select `w` as the hiatus breaker.
pub const ROUNDED_VOWELS: [char; 3] = ['o', 'u', 'û'];

/// Every letter of the working alphabet.
pub const LETTERS: [char; 36] = [
    'a', 'b', 'c', 'ç', 'd', 'e', 'ê', 'f', 'g', 'h', 'ḧ', 'i', 'î', 'j', 'k', 'l', 'ł', 'm',
    'n', 'o', 'p', 'q', 'r', 'ř', 's', 'ş', 't', 'u', 'û', 'v', 'w', 'x', 'ẍ', 'y', 'z', '\'',
];

pub fn is_vowel(c: char) -> bool {
    VOWELS.contains(&c)
}

pub fn is_semivowel(c: char) -> bool {
    SEMIVOWELS.contains(&c)
}

pub fn is_long_vowel(c: char) -> bool {
    LONG_VOWELS.contains(&c)
}

pub fn is_rounded(c: char) -> bool {
    ROUNDED_VOWELS.contains(&c)
}

/// A consonant for the purposes of the alternation rules: any letter that is
/// neither a vowel nor a semivowel.
pub fn is_consonant(c: char) -> bool {
    !is_vowel(c) && !is_semivowel(c)
}

pub fn is_letter(c: char) -> bool {
    LETTERS.contains(&c)
}

/// Normalizes input to NFC and returns the segment sequence.
///
/// Decomposed sequences such as `e` + U+0302 collapse to the single-`char`
/// letters the rest of the crate expects.
pub fn segments(text: &str) -> Vec<char> {
    text.nfc().collect()
}

/// NFC normalization as a string, applied to all external input.
pub fn normalize(text: &str) -> String {
    text.nfc().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vowel_classes_are_disjoint_from_consonants() {
        for c in LETTERS {
            assert!(
                !(is_vowel(c) && is_consonant(c)),
                "letter {c} classified as both vowel and consonant"
            );
        }
        assert!(is_consonant('ř'));
        assert!(is_consonant('ł'));
        assert!(!is_consonant('y'));
    }

    #[test]
    fn nfc_composes_decomposed_letters() {
        // e + combining circumflex, s + combining cedilla
        let decomposed = "ge\u{302}y\u{00ee}s\u{327}t";
        assert_eq!(normalize(decomposed), "gêyîşt");
        assert_eq!(segments("şêwe").len(), 4);
    }

    #[test]
    fn bizroke_is_short() {
        assert!(is_vowel('i'));
        assert!(!is_long_vowel('i'));
        assert!(!is_long_vowel('e'));
    }
}
