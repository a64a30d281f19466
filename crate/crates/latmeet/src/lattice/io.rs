//! JSON serialization of lattices.
//!
//! The on-disk shape is `{"elements": [...], "covers": [["a","b"], ...]}`
//! where each cover pair is `(lower, upper)`. Loading validates the full
//! lattice axioms; saving emits the canonical cover list (transitive edges
//! dropped) with the stored element order, so save → load → save is
//! byte-identical.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Lattice, LatticeError};

#[derive(Debug, Error)]
pub enum LatticeIoError {
    #[error("invalid JSON: {0}")]
    Parse(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Serialize, Deserialize)]
struct LatticeFile {
    elements: Vec<String>,
    covers: Vec<(String, String)>,
}

/// Parses a lattice from its JSON description.
pub fn lattice_from_json(text: &str) -> Result<Lattice, LatticeIoError> {
    let file: LatticeFile =
        serde_json::from_str(text).map_err(|e| LatticeIoError::Parse(e.to_string()))?;
    Ok(Lattice::from_covers(&file.elements, &file.covers)?)
}

/// Serializes a lattice to pretty-printed JSON with a trailing newline.
pub fn lattice_to_json(l: &Lattice) -> String {
    let file = LatticeFile {
        elements: l.names().to_vec(),
        covers: l
            .covers()
            .iter()
            .map(|&(a, b)| (l.name(a).to_string(), l.name(b).to_string()))
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&file).expect("serialization cannot fail");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::super::families;
    use super::*;

    #[test]
    fn round_trip_is_byte_identical() {
        for l in [
            families::diamond(4).unwrap(),
            families::lk(3, 2).unwrap(),
            families::boolean(3).unwrap(),
        ] {
            let text = lattice_to_json(&l);
            let back = lattice_from_json(&text).unwrap();
            assert_eq!(back, l);
            assert_eq!(lattice_to_json(&back), text);
        }
    }

    #[test]
    fn accepts_spec_shape() {
        let l = lattice_from_json(
            r#"{"elements": ["a", "b", "c", "d"],
                "covers": [["a","b"], ["a","c"], ["b","d"], ["c","d"]]}"#,
        )
        .unwrap();
        assert_eq!(l.len(), 4);
        assert_eq!(l.name(l.bottom()), "a");
        assert_eq!(l.name(l.top()), "d");
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(lattice_from_json("not json"), Err(LatticeIoError::Parse(_))));
        assert!(matches!(
            lattice_from_json(r#"{"elements": ["a", "b", "c"], "covers": [["a","b"],["a","c"]]}"#),
            Err(LatticeIoError::Lattice(LatticeError::NotALattice { .. }))
        ));
        assert!(matches!(
            lattice_from_json(r#"{"elements": ["a", "1b"], "covers": [["a","1b"]]}"#),
            Err(LatticeIoError::Lattice(LatticeError::BadName(_)))
        ));
    }
}
