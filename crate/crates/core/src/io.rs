//! The JSON complex file format: an object with an optional `name` and a
//! required `facets` array of vertex-id arrays. Loading normalizes (absorbs
//! non-maximal faces); writing is canonical, so equal complexes serialize to
//! identical bytes.

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub facets: Vec<Vec<u32>>,
}

/// Parses the JSON complex format and normalizes the facet set.
pub fn parse_complex(json: &str) -> Result<(SimplicialComplex, Option<String>)> {
    let file: ComplexFile =
        serde_json::from_str(json).map_err(|e| Error::malformed(format!("complex file: {e}")))?;
    let complex = SimplicialComplex::from_facets(&file.facets)?;
    Ok((complex, file.name))
}

pub fn read_complex(path: &std::path::Path) -> Result<(SimplicialComplex, Option<String>)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::malformed(format!("reading {}: {e}", path.display())))?;
    parse_complex(&text)
}

/// Canonical serialization: facets sorted lexicographically, each sorted
/// ascending, pretty-printed with a trailing newline.
pub fn to_canonical_json(k: &SimplicialComplex, name: Option<&str>) -> String {
    let file = ComplexFile {
        name: name.map(str::to_owned),
        facets: k.facets().iter().map(|f| f.ids()).collect(),
    };
    let mut out = serde_json::to_string_pretty(&file).expect("serializable");
    out.push('\n');
    out
}

pub fn write_complex(
    path: &std::path::Path,
    k: &SimplicialComplex,
    name: Option<&str>,
) -> Result<()> {
    std::fs::write(path, to_canonical_json(k, name))
        .map_err(|e| Error::malformed(format!("writing {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn roundtrip_is_identity_and_byte_stable() {
        let k = generators::octahedron();
        let json = to_canonical_json(&k, Some("octahedron"));
        let (parsed, name) = parse_complex(&json).unwrap();
        assert_eq!(parsed, k);
        assert_eq!(name.as_deref(), Some("octahedron"));
        assert_eq!(to_canonical_json(&parsed, Some("octahedron")), json);
    }

    #[test]
    fn loader_normalizes() {
        let (k, _) = parse_complex(r#"{"facets": [[2, 0, 1], [0, 1]]}"#).unwrap();
        assert_eq!(k.facets().len(), 1);
        assert_eq!(k.facets()[0].ids(), vec![0, 1, 2]);
    }

    #[test]
    fn loader_rejects_bad_input() {
        assert!(parse_complex("{").is_err());
        assert!(parse_complex(r#"{"facets": [[0, 0]]}"#).is_err());
        assert!(parse_complex(r#"{"facets": [[]]}"#).is_err());
        assert!(parse_complex(r#"{"facets": [[-1]]}"#).is_err());
    }
}
