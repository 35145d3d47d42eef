//! Converts Latin forms to Arabic script and back, showing the candidate
//! readings the reverse direction produces.

use sorani_morph::script::{arabic_to_latin, latin_to_arabic, DEFAULT_BOUND};

fn main() {
    for word in ["girtman", "helhatûwetewe", "nameyek", "biyanbey", "çûwe"] {
        let arabic = latin_to_arabic(word);
        let back = arabic_to_latin(&arabic, DEFAULT_BOUND);
        println!("{word} > {arabic}");
        println!(
            "  {} candidate(s){}",
            back.candidates.len(),
            if back.truncated { " (truncated)" } else { "" }
        );
        for c in &back.candidates {
            let marker = if c == word { " <- original" } else { "" };
            println!("    {c}{marker}");
        }
        println!();
    }
}
