//! Facet-list interchange formats.
//!
//! JSON: `{"m": 4, "facets": [[1,2],[2,3],[3,4],[1,4]]}`.
//!
//! Text: the first non-comment line holds `m`, every following line one
//! facet as space-separated vertices. Blank lines and lines starting with
//! `#` are ignored, so `{∅}` is written as the header line alone.

use serde::{Deserialize, Serialize};

use super::SimplicialComplex;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct ComplexFile {
    m: usize,
    facets: Vec<Vec<usize>>,
}

pub fn to_json(k: &SimplicialComplex) -> String {
    let file = ComplexFile {
        m: k.m(),
        facets: k
            .facets()
            .iter()
            .filter(|f| !f.is_empty())
            .map(|f| f.to_vec())
            .collect(),
    };
    serde_json::to_string(&file).expect("serializable")
}

pub fn from_json(s: &str) -> Result<SimplicialComplex> {
    let file: ComplexFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    SimplicialComplex::from_vertex_lists(file.m, &file.facets).map_err(as_parse)
}

pub fn to_text(k: &SimplicialComplex) -> String {
    let mut out = format!("{}\n", k.m());
    for f in k.facets().iter().filter(|f| !f.is_empty()) {
        let line: Vec<String> = f.vertices().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn from_text(s: &str) -> Result<SimplicialComplex> {
    let mut lines = s
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("missing vertex count".into()))?;
    let m: usize = header
        .parse()
        .map_err(|_| Error::Parse(format!("bad vertex count `{header}`")))?;
    let mut facets = Vec::new();
    for line in lines {
        let facet = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad vertex `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        facets.push(facet);
    }
    SimplicialComplex::from_vertex_lists(m, &facets).map_err(as_parse)
}

/// JSON when the input starts with `{`, text otherwise.
pub fn parse_auto(s: &str) -> Result<SimplicialComplex> {
    if s.trim_start().starts_with('{') {
        from_json(s)
    } else {
        from_text(s)
    }
}

fn as_parse(e: Error) -> Error {
    match e {
        Error::Parse(_) => e,
        other => Error::Parse(other.to_string()),
    }
}
