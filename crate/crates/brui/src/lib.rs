//! File formats, configuration and command workflows around `brui_core`.

pub mod analysis;
pub mod build;
pub mod compare;
pub mod config;
pub mod corpus;
pub mod error;
pub mod format;
pub mod index_io;
pub mod lexicon;
pub mod panel_io;
pub mod parallel;
pub mod plot;

pub use error::{Error, Result};
