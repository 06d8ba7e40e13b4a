//! Plain-text pattern documents.
//!
//! A document is either a family request (`family`, `param`, and an optional
//! `offset` line) or an explicit vertex list (`v` lines). Blank lines and
//! lines starting with `#` are skipped. parse and serialize invert each
//! other on the structured form.

use crate::family;
use tridom::constructions::{construct, PatternSpec};
use tridom::domination::VertexSet;
use tridom::lattice::{Coord, TorusSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocumentBody {
    Family {
        name: String,
        params: Vec<(String, String)>,
        offset: Option<(i64, i64)>,
    },
    Vertices(Vec<(i64, i64)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternDocument {
    pub body: DocumentBody,
}

/// Why a document could not be turned into a vertex set.
#[derive(Debug)]
pub enum RealizeError {
    /// The document itself is inconsistent.
    Document(String),
    /// The requested family does not fit the torus.
    Construction(tridom::Error),
}

impl PatternDocument {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut name: Option<String> = None;
        let mut params = Vec::new();
        let mut offset: Option<(i64, i64)> = None;
        let mut vertices = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let lineno = idx + 1;
            let toks: Vec<&str> = line.split_whitespace().collect();
            let arity = |want: usize| -> Result<(), String> {
                if toks.len() == want + 1 {
                    Ok(())
                } else {
                    Err(format!("line {lineno}: `{}` takes {want} value(s)", toks[0]))
                }
            };
            let int = |tok: &str| -> Result<i64, String> {
                tok.parse()
                    .map_err(|_| format!("line {lineno}: `{tok}` is not an integer"))
            };
            match toks[0] {
                "family" => {
                    arity(1)?;
                    if name.replace(toks[1].to_string()).is_some() {
                        return Err(format!("line {lineno}: repeated `family` line"));
                    }
                }
                "param" => {
                    arity(2)?;
                    params.push((toks[1].to_string(), toks[2].to_string()));
                }
                "offset" => {
                    arity(2)?;
                    if offset.replace((int(toks[1])?, int(toks[2])?)).is_some() {
                        return Err(format!("line {lineno}: repeated `offset` line"));
                    }
                }
                "v" => {
                    arity(2)?;
                    vertices.push((int(toks[1])?, int(toks[2])?));
                }
                other => return Err(format!("line {lineno}: unknown directive `{other}`")),
            }
        }

        if let Some(name) = name {
            if !vertices.is_empty() {
                return Err("document mixes `family` and `v` lines".to_string());
            }
            Ok(PatternDocument {
                body: DocumentBody::Family { name, params, offset },
            })
        } else if !vertices.is_empty() {
            if !params.is_empty() || offset.is_some() {
                return Err("`param` and `offset` lines require a `family` line".to_string());
            }
            Ok(PatternDocument {
                body: DocumentBody::Vertices(vertices),
            })
        } else {
            Err("document declares neither a family nor vertices".to_string())
        }
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        match &self.body {
            DocumentBody::Family { name, params, offset } => {
                out.push_str(&format!("family {name}\n"));
                for (k, v) in params {
                    out.push_str(&format!("param {k} {v}\n"));
                }
                if let Some((a, b)) = offset {
                    out.push_str(&format!("offset {a} {b}\n"));
                }
            }
            DocumentBody::Vertices(vs) => {
                for (a, b) in vs {
                    out.push_str(&format!("v {a} {b}\n"));
                }
            }
        }
        out
    }

    pub fn from_pattern(pattern: &PatternSpec) -> Self {
        let offset = if pattern.offset == Coord::new(0, 0) {
            None
        } else {
            Some((pattern.offset.x1, pattern.offset.x2))
        };
        PatternDocument {
            body: DocumentBody::Family {
                name: family::family_name(&pattern.family).to_string(),
                params: family::family_params(&pattern.family),
                offset,
            },
        }
    }

    /// Realize the document as a vertex set on the given torus. Explicit
    /// vertices are reduced into the fundamental rectangle.
    pub fn realize(&self, spec: TorusSpec) -> Result<VertexSet, RealizeError> {
        match &self.body {
            DocumentBody::Family { name, params, offset } => {
                let fam = family::build_family(name, params).map_err(RealizeError::Document)?;
                let off = offset.map_or(Coord::new(0, 0), |(a, b)| Coord::new(a, b));
                let pattern = PatternSpec { family: fam, offset: off };
                construct(&pattern, spec).map_err(RealizeError::Construction)
            }
            DocumentBody::Vertices(vs) => Ok(VertexSet::from_coords(
                spec,
                vs.iter().map(|&(a, b)| Coord::new(a, b)),
            )),
        }
    }
}
