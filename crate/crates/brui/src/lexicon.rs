use std::fs;
use std::path::Path;

use brui_core::lexicon::{DEFAULT_EXCLUSION_CONTEXT, DEFAULT_EXCLUSION_TRIGGER};
use brui_core::Lexicon;
use serde::Deserialize;

use crate::{Error, Result};

/// The bundled lexicon file.
pub const DEFAULT_LEXICON_TOML: &str = include_str!("../data/lexicon.toml");

/// Lexicon file layout. Omitted lists fall back to the bundled ones; a list
/// that is present but empty is an error.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct LexiconFile {
    uncertainty: Option<Vec<String>>,
    event_a: Option<Vec<String>>,
    event_b: Option<Vec<String>>,
    exclusion_trigger: Option<String>,
    exclusion_context: Option<Vec<String>>,
}

fn bundled() -> LexiconFile {
    toml::from_str(DEFAULT_LEXICON_TOML).expect("bundled lexicon parses")
}

pub fn parse_lexicon(text: &str, origin: &Path) -> Result<Lexicon> {
    let file: LexiconFile = toml::from_str(text).map_err(|e| Error::parse(origin, e.message()))?;
    let base = bundled();
    let pick = |v: Option<Vec<String>>, d: Option<Vec<String>>| v.or(d).unwrap_or_default();
    let lexicon = Lexicon::new(
        &pick(file.uncertainty, base.uncertainty),
        &pick(file.event_a, base.event_a),
        &pick(file.event_b, base.event_b),
        file.exclusion_trigger
            .as_deref()
            .unwrap_or(DEFAULT_EXCLUSION_TRIGGER),
        &file
            .exclusion_context
            .unwrap_or_else(|| DEFAULT_EXCLUSION_CONTEXT.map(String::from).to_vec()),
    );
    lexicon.map_err(|e| Error::data(origin.display(), e))
}

/// Reads a lexicon file, or the bundled default when `path` is `None`.
pub fn load_lexicon(path: Option<&Path>) -> Result<Lexicon> {
    match path {
        None => Ok(Lexicon::standard()),
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| Error::io(p, e))?;
            parse_lexicon(&text, p)
        }
    }
}
