//! Morphological generator and analyzer for Sorani (Central) Kurdish.

pub mod alphabet;
pub mod analyzer;
pub mod cli;
pub mod features;
pub mod inventory;
pub mod lexicon;
pub mod morph;
pub mod nominal;
pub mod phonology;
pub mod script;
pub mod verb;
