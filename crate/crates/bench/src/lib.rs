//! Shared helpers for the benchmark targets.

use centro::{parse_document, Document};

/// Loads a document fixture shipped with the core crate.
pub fn fixture(name: &str) -> Document {
    let path = format!(
        "{}/../core/fixtures/{name}.json",
        env!("CARGO_MANIFEST_DIR")
    );
    let bytes = std::fs::read(&path).unwrap_or_else(|e| panic!("read {path}: {e}"));
    parse_document(&bytes).unwrap_or_else(|e| panic!("parse {path}: {e}"))
}
