//! The JSON algebra file format.
//!
//! ```json
//! {"name": "h3", "dim": 3, "basis": ["x", "y", "z"],
//!  "brackets": {"0,1": [["2", "1"]]}}
//! ```
//!
//! Keys `"i,j"` are zero-based with `i < j`; each value lists
//! `[k, c]` pairs meaning `[e_i, e_j] = sum c e_k`. Omitted pairs bracket
//! to zero.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use num_traits::Zero;
use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::rational::{format_rational, parse_rational, parse_vector, Rational};
use crate::linalg::Subspace;

/// Bracket table entries in file order, duplicates preserved.
#[derive(Clone, Debug, Default, PartialEq)]
struct BracketEntries(Vec<(String, Vec<(String, String)>)>);

impl<'de> Deserialize<'de> for BracketEntries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct EntriesVisitor;
        impl<'de> Visitor<'de> for EntriesVisitor {
            type Value = BracketEntries;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object mapping \"i,j\" keys to [[k, c], ...] lists")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Self::Value, A::Error> {
                let mut out = Vec::new();
                while let Some(entry) = map.next_entry::<String, Vec<(String, String)>>()? {
                    out.push(entry);
                }
                Ok(BracketEntries(out))
            }
        }
        deserializer.deserialize_map(EntriesVisitor)
    }
}

impl Serialize for BracketEntries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    name: String,
    dim: usize,
    basis: Vec<String>,
    #[serde(default)]
    brackets: BracketEntries,
}

fn parse_key(key: &str, dim: usize) -> Result<(usize, usize)> {
    let bad = || Error::Format(format!("invalid bracket key \"{key}\": expected \"i,j\""));
    let (a, b) = key.split_once(',').ok_or_else(bad)?;
    let i: usize = a.trim().parse().map_err(|_| bad())?;
    let j: usize = b.trim().parse().map_err(|_| bad())?;
    if i.max(j) >= dim {
        return Err(Error::Format(format!(
            "bracket key \"{key}\": index out of range for dimension {dim}"
        )));
    }
    if i > j {
        return Err(Error::Format(format!(
            "lower-triangular key \"{key}\": brackets must be given with i < j"
        )));
    }
    if i == j {
        return Err(Error::Format(format!(
            "diagonal key \"{key}\": [e_i, e_i] is always zero"
        )));
    }
    Ok((i, j))
}

/// Parses and validates an algebra file, including the Jacobi identity.
pub fn parse_algebra(text: &str) -> Result<LieAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if file.dim != file.basis.len() {
        return Err(Error::Format(format!(
            "dim is {} but {} basis labels are given",
            file.dim,
            file.basis.len()
        )));
    }
    let labels: BTreeSet<&String> = file.basis.iter().collect();
    if labels.len() != file.basis.len() {
        return Err(Error::Format("basis labels must be distinct".into()));
    }
    let dim = file.dim;
    let mut brackets = BTreeMap::new();
    for (key, terms) in &file.brackets.0 {
        let (i, j) = parse_key(key, dim)?;
        if brackets.contains_key(&(i, j)) {
            return Err(Error::Format(format!("duplicate bracket key \"{key}\"")));
        }
        let mut v = vec![Rational::zero(); dim];
        let mut seen = BTreeSet::new();
        for (k, c) in terms {
            let k: usize = k.trim().parse().map_err(|_| {
                Error::Format(format!("bracket \"{key}\": invalid index \"{k}\""))
            })?;
            if k >= dim {
                return Err(Error::Format(format!(
                    "bracket \"{key}\": index {k} out of range for dimension {dim}"
                )));
            }
            if !seen.insert(k) {
                return Err(Error::Format(format!(
                    "bracket \"{key}\": index {k} listed twice"
                )));
            }
            v[k] = parse_rational(c).ok_or_else(|| {
                Error::Format(format!("bracket \"{key}\": invalid rational \"{c}\""))
            })?;
        }
        brackets.insert((i, j), v);
    }
    let alg = LieAlgebra::new(file.name, file.basis, brackets)?;
    alg.ensure_valid()?;
    Ok(alg)
}

pub fn read_algebra(path: &Path) -> Result<LieAlgebra> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Format(format!("cannot read {}: {e}", path.display())))?;
    parse_algebra(&text)
}

/// Pretty JSON in the file format, brackets in `(i, j)` order.
pub fn serialize_algebra(alg: &LieAlgebra) -> String {
    let entries = alg
        .brackets()
        .iter()
        .map(|(&(i, j), v)| {
            let terms = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k.to_string(), format_rational(c)))
                .collect();
            (format!("{i},{j}"), terms)
        })
        .collect();
    let file = AlgebraFile {
        name: alg.name().to_string(),
        dim: alg.dim(),
        basis: alg.labels().to_vec(),
        brackets: BracketEntries(entries),
    };
    serde_json::to_string_pretty(&file).expect("serializable")
}

/// Parses a vector given as comma-separated rationals.
pub fn parse_element(alg: &LieAlgebra, text: &str) -> Result<crate::lie::Element> {
    let v = parse_vector(text)
        .ok_or_else(|| Error::Format(format!("invalid vector \"{text}\"")))?;
    if v.len() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: v.len(),
        });
    }
    Ok(crate::lie::Element::new(v))
}

/// Parses a subspace given as `;`-separated vectors (`"1,0,0;0,1,0"`) or as
/// comma-separated basis labels (`"L1,z"`). The empty string is the zero
/// subspace.
pub fn parse_subspace(alg: &LieAlgebra, text: &str) -> Result<Subspace> {
    let text = text.trim();
    let n = alg.dim();
    if text.is_empty() || text == "0" && n != 1 {
        return Ok(Subspace::zero(n));
    }
    let tokens: Vec<&str> = text.split(',').map(str::trim).collect();
    if !text.contains(';') && tokens.iter().all(|t| alg.labels().iter().any(|l| l == t)) {
        let idx: Vec<usize> = tokens
            .iter()
            .map(|t| alg.labels().iter().position(|l| l == t).expect("checked"))
            .collect();
        return Ok(Subspace::coordinate(n, &idx));
    }
    let vectors = text
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_element(alg, s).map(|e| e.into_coords()))
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(n, &vectors)
}

/// Reads a subspace from a file when `spec` names one, else parses it
/// inline. Files hold one vector per line; `#` starts a comment.
pub fn read_subspace(alg: &LieAlgebra, spec: &str) -> Result<Subspace> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Format(format!("cannot read {spec}: {e}")))?;
        let joined: Vec<&str> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .collect();
        return parse_subspace(alg, &joined.join(";"));
    }
    parse_subspace(alg, spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    const H3: &str = r#"{"name": "h3", "dim": 3, "basis": ["x", "y", "z"],
        "brackets": {"0,1": [["2", "1"]]}}"#;

    #[test]
    fn parses_heisenberg() {
        let g = parse_algebra(H3).unwrap();
        assert_eq!(g.dim(), 3);
        assert!(g.validate().is_empty());
        assert_eq!(g.basis_bracket(0, 1), crate::lie::Element::basis(3, 2).into_coords());
    }

    #[test]
    fn rejects_lower_triangular_key() {
        let text = r#"{"name": "x", "dim": 2, "basis": ["a", "b"], "brackets": {"1,0": [["1", "1"]]}}"#;
        match parse_algebra(text) {
            Err(Error::Format(m)) => assert!(m.contains("lower-triangular key")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn reports_jacobi_triple() {
        let text = r#"{"name": "bad", "dim": 3, "basis": ["e1", "e2", "e3"],
            "brackets": {"0,1": [["2", "1"]], "0,2": [["0", "1"]]}}"#;
        match parse_algebra(text) {
            Err(Error::Jacobi { i, j, k, residual }) => {
                assert_eq!((i, j, k), (0, 1, 2));
                assert_eq!(residual, "e3");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn other_errors() {
        let syntax = parse_algebra("{\"name\": \"x\",\n \"dim\": }");
        match syntax {
            Err(Error::Syntax { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        let dup = r#"{"name": "x", "dim": 2, "basis": ["a", "b"],
            "brackets": {"0,1": [["1", "1"]], "0, 1": [["1", "2"]]}}"#;
        assert!(matches!(parse_algebra(dup), Err(Error::Format(m)) if m.contains("duplicate")));
        let range = r#"{"name": "x", "dim": 2, "basis": ["a", "b"], "brackets": {"0,2": []}}"#;
        assert!(matches!(parse_algebra(range), Err(Error::Format(m)) if m.contains("out of range")));
        let rat = r#"{"name": "x", "dim": 2, "basis": ["a", "b"], "brackets": {"0,1": [["1", "1/0"]]}}"#;
        assert!(matches!(parse_algebra(rat), Err(Error::Format(m)) if m.contains("rational")));
    }

    #[test]
    fn round_trip_catalog() {
        for alg in catalog::all() {
            let back = parse_algebra(&serialize_algebra(&alg)).unwrap();
            assert_eq!(back, alg);
        }
    }

    #[test]
    fn subspace_specs() {
        let g = catalog::catalog("oscillator", None).unwrap();
        assert_eq!(parse_subspace(&g, "z").unwrap(), Subspace::coordinate(4, &[3]));
        assert_eq!(
            parse_subspace(&g, "1,0,0,0;0,0,0,1").unwrap(),
            Subspace::coordinate(4, &[0, 3])
        );
        assert!(parse_subspace(&g, "").unwrap().is_zero());
        assert!(parse_subspace(&g, "1,2").is_err());
    }
}
