use std::fs;
use std::path::Path;

use brui_core::{assemble_corpus, Month, Report};
use rayon::prelude::*;

use crate::{Error, Result};

/// Parses `YYYY-MM.txt` (extension case-insensitive).
pub fn month_from_filename(name: &str) -> Option<Month> {
    let (stem, ext) = name.rsplit_once('.')?;
    if !ext.eq_ignore_ascii_case("txt") {
        return None;
    }
    stem.parse().ok()
}

/// Loads one report per `YYYY-MM.txt` file in `dir`, sorted by month.
///
/// Hidden files and subdirectories are skipped; any other file name, an
/// empty report or two files for one month is an error.
pub fn load_corpus(dir: &Path) -> Result<Vec<Report>> {
    let entries = fs::read_dir(dir).map_err(|e| Error::io(dir, e))?;
    let mut files = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| Error::io(dir, e))?;
        let path = entry.path();
        let name = entry.file_name().to_string_lossy().into_owned();
        if name.starts_with('.') || path.is_dir() {
            continue;
        }
        let month = month_from_filename(&name)
            .ok_or_else(|| Error::parse(&path, "report file names must be YYYY-MM.txt"))?;
        files.push((month, path));
    }
    files.sort();
    let reports = files
        .par_iter()
        .map(|(month, path)| {
            let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
            Report::new(*month, text).map_err(|e| Error::data(path.display(), e))
        })
        .collect::<Result<Vec<_>>>()?;
    assemble_corpus(reports).map_err(|e| Error::data(dir.display(), e))
}
