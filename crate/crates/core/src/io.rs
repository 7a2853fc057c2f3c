//! JSON documents for every object the command line reads or writes.
//!
//! Each document is a single JSON object whose first two fields are
//! `format_version` and `kind`; the remaining fields depend on the kind.
//! Output is compact, fields appear in a fixed order and a trailing newline
//! ends the file, so writing a document that was just read reproduces it byte
//! for byte. `docs/schema.md` at the repository root describes every kind.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::builders::{CategorySpec, DirectedGraph, OuterFaceComplex, PartialMonoidSpec};
use crate::error::{Error, Result};
use crate::pullback::CheckReport;
use crate::sset::{SimplicialMap, TruncatedSSet};

pub const FORMAT_VERSION: u64 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    SSet(TruncatedSSet),
    Map(SimplicialMap),
    Ofc(OuterFaceComplex),
    Category(CategorySpec),
    PartialMonoid(PartialMonoidSpec),
    PartialCategory(CategorySpec),
    Graph(DirectedGraph),
    Report(CheckReport),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::SSet(_) => "sset",
            Document::Map(_) => "map",
            Document::Ofc(_) => "ofc",
            Document::Category(_) => "category",
            Document::PartialMonoid(_) => "partial_monoid",
            Document::PartialCategory(_) => "partial_category",
            Document::Graph(_) => "graph",
            Document::Report(_) => "report",
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SSetBody {
    level: usize,
    cells: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<usize>>>,
    degeneracies: Vec<Vec<Vec<usize>>>,
}

impl SSetBody {
    fn from_sset(x: &TruncatedSSet) -> Self {
        SSetBody {
            level: x.level(),
            cells: (0..=x.level()).map(|n| x.cells(n).to_vec()).collect(),
            faces: x.face_tables().to_vec(),
            degeneracies: x.degeneracy_tables().to_vec(),
        }
    }

    fn into_sset(self, at: &str) -> Result<TruncatedSSet> {
        if self.cells.len() != self.level + 1 {
            return Err(Error::schema(
                format!("{at}/level"),
                format!("level {} does not match {} cell levels", self.level, self.cells.len()),
            ));
        }
        TruncatedSSet::from_tables(self.cells, self.faces, self.degeneracies).map_err(|e| structural(at, e))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapBody {
    level: usize,
    source: SSetBody,
    target: SSetBody,
    components: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct Envelope<'a, T> {
    format_version: u64,
    kind: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

/// Malformed tables inside a document are schema violations, not builder failures.
fn structural(at: &str, e: Error) -> Error {
    match e {
        Error::Structural(message) => Error::schema(at, message),
        other => other,
    }
}

fn envelope<T: Serialize>(kind: &str, body: &T) -> String {
    let mut out = serde_json::to_string(&Envelope { format_version: FORMAT_VERSION, kind, body })
        .expect("documents serialize to JSON");
    out.push('\n');
    out
}

/// Serializes a document: compact JSON followed by a newline.
pub fn to_string(doc: &Document) -> String {
    let kind = doc.kind();
    match doc {
        Document::SSet(x) => envelope(kind, &SSetBody::from_sset(x)),
        Document::Map(f) => envelope(
            kind,
            &MapBody {
                level: f.level(),
                source: SSetBody::from_sset(f.source()),
                target: SSetBody::from_sset(f.target()),
                components: f.components().to_vec(),
            },
        ),
        Document::Ofc(a) => envelope(kind, a),
        Document::Category(c) | Document::PartialCategory(c) => envelope(kind, c),
        Document::PartialMonoid(m) => envelope(kind, m),
        Document::Graph(g) => envelope(kind, g),
        Document::Report(r) => envelope(kind, r),
    }
}

fn pointer(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut out = String::new();
    for segment in path.iter() {
        out.push('/');
        match segment {
            Segment::Seq { index } => out.push_str(&index.to_string()),
            Segment::Map { key } => out.push_str(&key.replace('~', "~0").replace('/', "~1")),
            Segment::Enum { variant } => out.push_str(variant),
            Segment::Unknown => out.push('?'),
        }
    }
    out
}

fn decode<T: DeserializeOwned>(value: Value) -> Result<T> {
    serde_path_to_error::deserialize(value).map_err(|e| Error::schema(pointer(e.path()), e.inner().to_string()))
}

/// Parses a document, reporting schema violations with a JSON pointer.
pub fn from_str(text: &str) -> Result<Document> {
    let mut value: Value = serde_json::from_str(text).map_err(|e| Error::schema("", e.to_string()))?;
    let fields = value.as_object_mut().ok_or_else(|| Error::schema("", "expected a JSON object"))?;
    match fields.remove("format_version") {
        Some(Value::Number(n)) if n.as_u64() == Some(FORMAT_VERSION) => {}
        Some(other) => {
            return Err(Error::schema("/format_version", format!("unsupported format version {other}")))
        }
        None => return Err(Error::schema("/format_version", "missing field")),
    }
    let kind = match fields.remove("kind") {
        Some(Value::String(k)) => k,
        Some(_) => return Err(Error::schema("/kind", "expected a string")),
        None => return Err(Error::schema("/kind", "missing field")),
    };
    Ok(match kind.as_str() {
        "sset" => Document::SSet(decode::<SSetBody>(value)?.into_sset("")?),
        "map" => {
            let body: MapBody = decode(value)?;
            let source = body.source.into_sset("/source")?;
            let target = body.target.into_sset("/target")?;
            let level = source.level().min(target.level());
            if body.level != level {
                return Err(Error::schema("/level", format!("level {} does not match the common level {level}", body.level)));
            }
            let f = SimplicialMap::new(Arc::new(source), Arc::new(target), body.components)
                .map_err(|e| structural("/components", e))?;
            Document::Map(f)
        }
        "ofc" => {
            let a: OuterFaceComplex = decode(value)?;
            a.check().map_err(|e| structural("", e))?;
            Document::Ofc(a)
        }
        "category" => Document::Category(decode(value)?),
        "partial_monoid" => Document::PartialMonoid(decode(value)?),
        "partial_category" => Document::PartialCategory(decode(value)?),
        "graph" => Document::Graph(decode(value)?),
        "report" => Document::Report(decode(value)?),
        other => return Err(Error::schema("/kind", format!("unknown kind {other:?}"))),
    })
}

pub fn read(path: &Path) -> Result<Document> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    from_str(&text)
}

/// Writes `contents` to `path` through a temporary file in the same directory,
/// so readers never observe a partial file.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let io = |source| Error::Io { path: path.display().to_string(), source };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

pub fn write(path: &Path, doc: &Document) -> Result<()> {
    write_atomic(path, &to_string(doc))
}

fn wrong_kind(expected: &str, found: &Document) -> Error {
    Error::schema("/kind", format!("expected a {expected} document, found {}", found.kind()))
}

pub fn read_sset(path: &Path) -> Result<TruncatedSSet> {
    match read(path)? {
        Document::SSet(x) => Ok(x),
        other => Err(wrong_kind("sset", &other)),
    }
}

pub fn read_map(path: &Path) -> Result<SimplicialMap> {
    match read(path)? {
        Document::Map(f) => Ok(f),
        other => Err(wrong_kind("map", &other)),
    }
}
