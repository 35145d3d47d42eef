//! Batch command-line front end.
//!
//! All output goes through a writer so the commands are testable; the binary
//! is a thin wrapper around [`run`]. Output ordering is fixed everywhere, so
//! identical inputs produce byte-identical output.

use crate::analyzer::Analyzer;
use crate::features::FeatureBundle;
use crate::lexicon::Lexicon;
use crate::morph::Degree;
use crate::nominal::{attach_izafa, inflect_noun, parse_nominal, NominalConfig};
use crate::phonology::{realize, UnrealizeConfig};
use crate::script::{arabic_to_latin, latin_to_arabic, DEFAULT_BOUND};
use crate::verb::{generate_verb_opts, paradigm, VariantOpts};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_LEXICON: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "sorani", version, about = "Sorani Kurdish morphology toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Lexicon TSV; falls back to the embedded seed lexicon.
    #[arg(long, global = true, env = "SORANI_LEXICON")]
    pub lexicon: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Text)]
    pub output: OutputMode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Text,
    Jsonl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Script {
    Latin,
    Arabic,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Analyze whitespace-separated tokens from a file or standard input.
    Analyze {
        input: Option<PathBuf>,
        /// Script of the input tokens.
        #[arg(long, value_enum, default_value_t = Script::Latin)]
        script: Script,
        /// Also report phonological segmentation guesses for unknown tokens.
        #[arg(long)]
        guess: bool,
    },
    /// Generate one surface form from a lemma and a feature string.
    Generate {
        lemma: String,
        /// Feature tokens, e.g. `simple-past-tr agent=1PL patient=3SG`.
        features: Vec<String>,
        #[command(flatten)]
        dialect: DialectArgs,
        /// Treat the lemma as a noun stem; features become nominal
        /// (det=, num=, poss=, case=, plural=, emph, izafa=, dep=).
        #[arg(long)]
        noun: bool,
        /// Treat the lemma as an adjective or adverb base; features are
        /// `cmpr` or `supl`.
        #[arg(long)]
        adjective: bool,
    },
    /// Print the full paradigm of a verb lemma.
    Paradigm {
        lemma: String,
        /// Restrict to these constructions; repeatable.
        #[arg(long = "construction")]
        constructions: Vec<String>,
    },
    /// Transliterate lines between scripts.
    Translit {
        #[arg(long, value_enum)]
        to: Script,
        input: Option<PathBuf>,
        /// Candidate bound for Arabic-to-Latin conversion.
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Validate a lexicon file and report the first violation.
    LexiconCheck { path: Option<PathBuf> },
}

#[derive(Args, Debug, Default)]
pub struct DialectArgs {
    /// Use the e- progressive prefix instead of de-.
    #[arg(long)]
    pub progressive_e: bool,
    /// Use the short person-marker variants.
    #[arg(long)]
    pub short_marker: bool,
    /// Enable the northern case suffixes.
    #[arg(long)]
    pub northern_cases: bool,
}

impl DialectArgs {
    fn variant_opts(&self) -> VariantOpts {
        VariantOpts {
            short_marker: self.short_marker,
            progressive_e: self.progressive_e,
            ..VariantOpts::default()
        }
    }
}

fn load_lexicon(path: &Option<PathBuf>, err: &mut impl Write) -> Result<Lexicon, i32> {
    match path {
        None => Ok(Lexicon::seed()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| {
                let _ = writeln!(err, "cannot read lexicon {}: {e}", p.display());
                EXIT_LEXICON
            })?;
            Lexicon::parse(&text).map_err(|e| {
                let _ = writeln!(err, "lexicon {}: {e}", p.display());
                EXIT_LEXICON
            })
        }
    }
}

fn read_input(path: &Option<PathBuf>, err: &mut impl Write) -> Result<String, i32> {
    match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| {
            let _ = writeln!(err, "cannot read {}: {e}", p.display());
            EXIT_USAGE
        }),
        None => {
            let mut buf = String::new();
            std::io::Read::read_to_string(&mut std::io::stdin(), &mut buf).map_err(|e| {
                let _ = writeln!(err, "cannot read standard input: {e}");
                EXIT_USAGE
            })?;
            Ok(buf)
        }
    }
}

pub fn run(cli: Cli, out: &mut impl Write, err: &mut impl Write) -> i32 {
    match run_inner(cli, out, err) {
        Ok(()) => EXIT_OK,
        Err(code) => code,
    }
}

fn run_inner(cli: Cli, out: &mut impl Write, err: &mut impl Write) -> Result<(), i32> {
    match cli.command {
        Command::Analyze { input, script, guess } => {
            let lexicon = load_lexicon(&cli.lexicon, err)?;
            let analyzer = Analyzer::build(&lexicon);
            let text = read_input(&input, err)?;
            for token in text.split_whitespace() {
                analyze_token(&analyzer, token, script, guess, cli.output, out);
            }
            Ok(())
        }
        Command::Generate { lemma, features, dialect, noun, adjective } => {
            if noun && adjective {
                let _ = writeln!(err, "--noun and --adjective are mutually exclusive");
                return Err(EXIT_USAGE);
            }
            let features: Vec<&str> = features.iter().map(String::as_str).collect();
            if noun {
                generate_noun(&lemma, &features, &dialect, cli.output, out, err)
            } else if adjective {
                generate_adjective(&lemma, &features, cli.output, out, err)
            } else {
                let lexicon = load_lexicon(&cli.lexicon, err)?;
                generate_verb_cmd(&lexicon, &lemma, &features, &dialect, cli.output, out, err)
            }
        }
        Command::Paradigm { lemma, constructions } => {
            let lexicon = load_lexicon(&cli.lexicon, err)?;
            let Some(lex) = lexicon.get(&lemma) else {
                let _ = writeln!(err, "unknown lemma {lemma:?}");
                return Err(EXIT_USAGE);
            };
            let mut wanted = Vec::new();
            for name in &constructions {
                match crate::features::Construction::parse(name) {
                    Some(c) => wanted.push(c),
                    None => {
                        let _ = writeln!(err, "unknown construction {name:?}");
                        return Err(EXIT_USAGE);
                    }
                }
            }
            for row in paradigm(lex, &wanted) {
                match cli.output {
                    OutputMode::Text => {
                        let _ = writeln!(
                            out,
                            "{}\t{}\t{}",
                            row.bundle.feature_string(),
                            row.realization.surface,
                            row.sequence.underlying()
                        );
                    }
                    OutputMode::Jsonl => {
                        let record = json!({
                            "lemma": lemma,
                            "features": row.bundle.feature_string(),
                            "surface": row.realization.surface,
                            "underlying": row.sequence.underlying(),
                        });
                        let _ = writeln!(out, "{record}");
                    }
                }
            }
            Ok(())
        }
        Command::Translit { to, input, bound } => {
            let text = read_input(&input, err)?;
            for line in text.lines() {
                let converted: Vec<String> = line
                    .split_whitespace()
                    .map(|token| match to {
                        Script::Arabic => latin_to_arabic(token),
                        Script::Latin => {
                            let r = arabic_to_latin(token, bound);
                            let mut s = r.candidates.join("|");
                            if r.truncated {
                                s.push('…');
                            }
                            s
                        }
                    })
                    .collect();
                let _ = writeln!(out, "{}", converted.join(" "));
            }
            Ok(())
        }
        Command::LexiconCheck { path } => {
            let source = path.or(cli.lexicon);
            let Some(p) = source else {
                let _ = writeln!(err, "lexicon-check needs a path");
                return Err(EXIT_USAGE);
            };
            let text = std::fs::read_to_string(&p).map_err(|e| {
                let _ = writeln!(err, "cannot read lexicon {}: {e}", p.display());
                EXIT_LEXICON
            })?;
            match Lexicon::parse(&text) {
                Ok(lexicon) => {
                    let _ = writeln!(out, "ok: {} entries", lexicon.len());
                    Ok(())
                }
                Err(e) => {
                    let _ = writeln!(err, "{e}");
                    Err(EXIT_LEXICON)
                }
            }
        }
    }
}

fn analyze_token(
    analyzer: &Analyzer,
    token: &str,
    script: Script,
    guess: bool,
    output: OutputMode,
    out: &mut impl Write,
) {
    // Arabic input maps to several Latin candidates; all are analyzed.
    let candidates: Vec<String> = match script {
        Script::Latin => vec![token.to_string()],
        Script::Arabic => arabic_to_latin(token, DEFAULT_BOUND).candidates,
    };
    let mut analyses = Vec::new();
    for candidate in &candidates {
        for a in analyzer.analyze(candidate) {
            analyses.push((candidate.clone(), a));
        }
    }
    let guesses: Vec<String> = if guess && analyses.is_empty() {
        candidates
            .iter()
            .flat_map(|c| analyzer.guess(c, &UnrealizeConfig::default()).candidates)
            .collect()
    } else {
        Vec::new()
    };
    match output {
        OutputMode::Text => {
            if analyses.is_empty() && guesses.is_empty() {
                let _ = writeln!(out, "{token}\t-");
            }
            for (surface, a) in &analyses {
                let (seg, tags) = a.gloss();
                let _ = writeln!(
                    out,
                    "{token}\t{surface}\t{}\t{}\t{seg}\t{tags}",
                    a.lemma,
                    a.feature_string()
                );
            }
            for g in &guesses {
                let _ = writeln!(out, "{token}\t?\t{g}");
            }
        }
        OutputMode::Jsonl => {
            let records: Vec<_> = analyses
                .iter()
                .map(|(surface, a)| {
                    let (seg, tags) = a.gloss();
                    json!({
                        "surface": surface,
                        "lemma": a.lemma,
                        "construction": a.bundle.construction.name(),
                        "features": a.feature_string(),
                        "segmentation": seg,
                        "gloss": tags,
                    })
                })
                .collect();
            let record = json!({
                "surface": token,
                "analyses": records,
                "guesses": guesses,
            });
            let _ = writeln!(out, "{record}");
        }
    }
}

fn generate_verb_cmd(
    lexicon: &Lexicon,
    lemma: &str,
    features: &[&str],
    dialect: &DialectArgs,
    output: OutputMode,
    out: &mut impl Write,
    err: &mut impl Write,
) -> Result<(), i32> {
    let Some(lex) = lexicon.get(lemma) else {
        let _ = writeln!(err, "unknown lemma {lemma:?}");
        return Err(EXIT_USAGE);
    };
    let bundle = FeatureBundle::parse(features).map_err(|e| {
        let _ = writeln!(err, "{e}");
        EXIT_USAGE
    })?;
    let seq = generate_verb_opts(lex, &bundle, &dialect.variant_opts()).map_err(|e| {
        let _ = writeln!(err, "{e}");
        EXIT_USAGE
    })?;
    let surface = realize(&seq).surface;
    emit_generated(lemma, &bundle.feature_string(), &surface, &seq.underlying(), output, out);
    Ok(())
}

fn emit_generated(
    lemma: &str,
    features: &str,
    surface: &str,
    underlying: &str,
    output: OutputMode,
    out: &mut impl Write,
) {
    match output {
        OutputMode::Text => {
            let _ = writeln!(out, "{surface}");
        }
        OutputMode::Jsonl => {
            let record = json!({
                "lemma": lemma,
                "features": features,
                "surface": surface,
                "underlying": underlying,
            });
            let _ = writeln!(out, "{record}");
        }
    }
}

fn generate_noun(
    stem: &str,
    features: &[&str],
    dialect: &DialectArgs,
    output: OutputMode,
    out: &mut impl Write,
    err: &mut impl Write,
) -> Result<(), i32> {
    let (nf, izafa) = parse_nominal(features).map_err(|e| {
        let _ = writeln!(err, "{e}");
        EXIT_USAGE
    })?;
    let cfg = NominalConfig { northern_cases: dialect.northern_cases };
    let features_str = features.join(" ");
    match izafa {
        Some((link, dep)) => {
            let phrase = attach_izafa(stem, &nf, &dep, link, &cfg).map_err(|e| {
                let _ = writeln!(err, "{e}");
                EXIT_USAGE
            })?;
            emit_generated(stem, &features_str, &phrase, "", output, out);
        }
        None => {
            let seq = inflect_noun(stem, &nf, &cfg).map_err(|e| {
                let _ = writeln!(err, "{e}");
                EXIT_USAGE
            })?;
            let surface = realize(&seq).surface;
            emit_generated(stem, &features_str, &surface, &seq.underlying(), output, out);
        }
    }
    Ok(())
}

fn generate_adjective(
    base: &str,
    features: &[&str],
    output: OutputMode,
    out: &mut impl Write,
    err: &mut impl Write,
) -> Result<(), i32> {
    let degree = match features {
        ["cmpr"] => Degree::Comparative,
        ["supl"] => Degree::Superlative,
        other => {
            let _ = writeln!(err, "expected cmpr or supl, got {other:?}");
            return Err(EXIT_USAGE);
        }
    };
    let surface = crate::nominal::grade(base, degree);
    emit_generated(base, &features.join(" "), &surface, "", output, out);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let cli = Cli::try_parse_from(args).expect("args parse");
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(cli, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn generate_verb_form() {
        let (code, out, _) = run_args(&[
            "sorani", "generate", "girtin", "simple-past-tr", "agent=1PL", "patient=3SG",
        ]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "girtman\n");
    }

    #[test]
    fn generate_noun_and_adjective() {
        let (code, out, _) =
            run_args(&["sorani", "generate", "--noun", "gul", "det=indef", "num=sg"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "gulêk\n");
        let (code, out, _) = run_args(&[
            "sorani", "generate", "--noun", "gul", "det=def", "izafa=close", "dep=ciwan",
        ]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "gule ciwaneke\n");
        let (code, out, _) = run_args(&["sorani", "generate", "--adjective", "ciwan", "supl"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "ciwantirîn\n");
    }

    #[test]
    fn generate_rejects_bad_features() {
        let cli = Cli::try_parse_from(["sorani", "generate", "girtin", "no-such-thing"]).unwrap();
        let mut out = Vec::new();
        let mut err = Vec::new();
        assert_eq!(run(cli, &mut out, &mut err), EXIT_USAGE);
        assert!(!err.is_empty());
    }

    #[test]
    fn analyze_from_file() {
        let dir = std::env::temp_dir().join("sorani-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let input = dir.join("analyze-input.txt");
        std::fs::write(&input, "mekewe qqq\n").unwrap();
        let (code, out, _) = run_args(&[
            "sorani", "analyze", input.to_str().unwrap(),
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("KEWTIN"), "{out}");
        assert!(out.contains("mood=IMP"), "{out}");
        assert!(out.contains("neg"), "{out}");
        assert!(out.contains("qqq\t-"), "{out}");
        let (code, jsonl, _) = run_args(&[
            "sorani", "analyze", "--output", "jsonl", input.to_str().unwrap(),
        ]);
        assert_eq!(code, EXIT_OK);
        for line in jsonl.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert!(v.get("surface").is_some());
        }
        assert_eq!(jsonl.lines().count(), 2);
    }

    #[test]
    fn translit_round() {
        let dir = std::env::temp_dir().join("sorani-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let input = dir.join("translit-input.txt");
        std::fs::write(&input, "b girtman\n").unwrap();
        let (code, out, _) = run_args(&[
            "sorani", "translit", "--to", "arabic", input.to_str().unwrap(),
        ]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "ب گرتمان\n");
        let back = dir.join("translit-back.txt");
        std::fs::write(&back, "گرتمان\n").unwrap();
        let (code, out, _) = run_args(&[
            "sorani", "translit", "--to", "latin", back.to_str().unwrap(),
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(out.trim_end().split('|').any(|c| c == "girtman"), "{out}");
    }

    #[test]
    fn lexicon_check_reports_position() {
        let dir = std::env::temp_dir().join("sorani-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let good = dir.join("good.tsv");
        std::fs::write(&good, "kewtin\tkew\tkewt\tkew\tintransitive\t\t\n").unwrap();
        let (code, out, _) = run_args(&["sorani", "lexicon-check", good.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "ok: 1 entries\n");
        let bad = dir.join("bad.tsv");
        std::fs::write(&bad, "kewtin\tkew\tkewt\tkew\tnonsense\t\t\n").unwrap();
        let (code, _, err) = run_args(&["sorani", "lexicon-check", bad.to_str().unwrap()]);
        assert_eq!(code, EXIT_LEXICON);
        assert!(err.contains("line 1"), "{err}");
    }

    #[test]
    fn custom_lexicon_failure_exit_code() {
        let (code, _, err) = run_args(&[
            "sorani", "--lexicon", "/no/such/file.tsv", "generate", "girtin", "infinitive",
        ]);
        assert_eq!(code, EXIT_LEXICON);
        assert!(err.contains("cannot read lexicon"), "{err}");
    }
}
