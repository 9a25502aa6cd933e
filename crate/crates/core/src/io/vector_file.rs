//! Vector-set files.
//!
//! JSON (canonical, exact round-trip):
//!
//! ```json
//! {"format": "frame-vectors", "version": 1, "dim": 2, "field": "complex", "count": 1,
//!  "vectors": [[[0.6, 0.0], [0.0, 0.8]]]}
//! ```
//!
//! Real-field vectors are plain number arrays. CSV is an importer/exporter
//! convenience: an optional `# dim=2 field=complex count=1` header line, then
//! one vector per row with complex cells written `re:im`.

use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Result as FrameResult;
use crate::linalg::UnitVectorSequence;
use crate::scalar::Field;

pub const VECTOR_FILE_FORMAT: &str = "frame-vectors";
pub const VECTOR_FILE_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("malformed vector file: {0}")]
    Malformed(String),
}

fn malformed<T>(msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError::Malformed(msg.into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FileFormat {
    Json,
    Csv,
}

impl FileFormat {
    /// `.csv` selects CSV, anything else JSON.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("csv") => FileFormat::Csv,
            _ => FileFormat::Json,
        }
    }
}

/// Parsed coordinates before unit-norm validation.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorData {
    pub dim: usize,
    pub field: Field,
    pub vectors: Vec<Vec<Complex<f64>>>,
    pub labels: Option<Vec<String>>,
}

impl VectorData {
    pub fn from_sequence(seq: &UnitVectorSequence<f64>) -> Self {
        Self {
            dim: seq.dim(),
            field: seq.field(),
            vectors: seq.vectors().to_vec(),
            labels: seq.labels().map(<[String]>::to_vec),
        }
    }

    /// Validates unit norms, optionally rescaling first.
    pub fn into_sequence(self, renormalize: bool) -> FrameResult<UnitVectorSequence<f64>> {
        if renormalize {
            UnitVectorSequence::renormalized(self.dim, self.field, self.vectors, self.labels)
        } else {
            UnitVectorSequence::new(self.dim, self.field, self.vectors, self.labels)
        }
    }

    /// `sha256:<hex>` over the numeric content (dimension, field and the
    /// little-endian bit patterns of every coordinate). Independent of the
    /// file format the data came from.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        h.update(VECTOR_FILE_FORMAT.as_bytes());
        h.update((self.dim as u64).to_le_bytes());
        h.update([matches!(self.field, Field::Complex) as u8]);
        h.update((self.vectors.len() as u64).to_le_bytes());
        for v in &self.vectors {
            for z in v {
                h.update(z.re.to_bits().to_le_bytes());
                h.update(z.im.to_bits().to_le_bytes());
            }
        }
        format!("sha256:{}", hex::encode(h.finalize()))
    }

    fn check(&self) -> Result<(), FormatError> {
        if self.dim == 0 {
            return malformed("dim must be positive");
        }
        if self.vectors.is_empty() {
            return malformed("no vectors");
        }
        for (i, v) in self.vectors.iter().enumerate() {
            if v.len() != self.dim {
                return malformed(format!("vector {i} has {} coordinates, expected {}", v.len(), self.dim));
            }
            if v.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return malformed(format!("vector {i} has a non-finite coordinate"));
            }
            if self.field == Field::Real && v.iter().any(|z| z.im != 0.0) {
                return malformed(format!("vector {i} has an imaginary part in a real file"));
            }
        }
        if let Some(l) = &self.labels {
            if l.len() != self.vectors.len() {
                return malformed("label count differs from vector count");
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonCoord {
    Real(f64),
    Complex([f64; 2]),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonVectorFile {
    format: String,
    version: u32,
    dim: usize,
    field: Field,
    count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    vectors: Vec<Vec<JsonCoord>>,
}

pub fn to_json(data: &VectorData) -> String {
    let vectors = data
        .vectors
        .iter()
        .map(|v| {
            v.iter()
                .map(|z| match data.field {
                    Field::Real => JsonCoord::Real(z.re),
                    Field::Complex => JsonCoord::Complex([z.re, z.im]),
                })
                .collect()
        })
        .collect();
    let file = JsonVectorFile {
        format: VECTOR_FILE_FORMAT.into(),
        version: VECTOR_FILE_VERSION,
        dim: data.dim,
        field: data.field,
        count: data.vectors.len(),
        labels: data.labels.clone(),
        vectors,
    };
    let mut s = serde_json::to_string_pretty(&file).expect("vector file serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<VectorData, FormatError> {
    let file: JsonVectorFile = serde_json::from_str(text).map_err(|e| FormatError::Malformed(e.to_string()))?;
    if file.format != VECTOR_FILE_FORMAT {
        return malformed(format!("unexpected format tag `{}`", file.format));
    }
    if file.version != VECTOR_FILE_VERSION {
        return malformed(format!("unsupported version {}", file.version));
    }
    if file.count != file.vectors.len() {
        return malformed(format!("count {} but {} vectors", file.count, file.vectors.len()));
    }
    let mut vectors = Vec::with_capacity(file.vectors.len());
    for (i, v) in file.vectors.into_iter().enumerate() {
        let mut out = Vec::with_capacity(v.len());
        for c in v {
            out.push(match (file.field, c) {
                (Field::Real, JsonCoord::Real(x)) => Complex::new(x, 0.0),
                (Field::Complex, JsonCoord::Complex([re, im])) => Complex::new(re, im),
                (Field::Real, JsonCoord::Complex(_)) => {
                    return malformed(format!("vector {i}: complex coordinate in a real file"))
                }
                (Field::Complex, JsonCoord::Real(_)) => {
                    return malformed(format!("vector {i}: complex files need [re, im] pairs"))
                }
            });
        }
        vectors.push(out);
    }
    let data = VectorData {
        dim: file.dim,
        field: file.field,
        vectors,
        labels: file.labels,
    };
    data.check()?;
    Ok(data)
}

pub fn to_csv(data: &VectorData) -> String {
    let mut s = format!("# dim={} field={} count={}\n", data.dim, data.field, data.vectors.len());
    for v in &data.vectors {
        let cells: Vec<String> = v
            .iter()
            .map(|z| match data.field {
                Field::Real => format!("{:?}", z.re),
                Field::Complex => format!("{:?}:{:?}", z.re, z.im),
            })
            .collect();
        let _ = writeln!(s, "{}", cells.join(","));
    }
    s
}

pub fn from_csv(text: &str) -> Result<VectorData, FormatError> {
    let mut dim = None;
    let mut field = None;
    let mut count = None;
    if let Some(header) = text.lines().next().and_then(|l| l.trim().strip_prefix('#')) {
        for kv in header.split_whitespace() {
            let Some((k, v)) = kv.split_once('=') else { continue };
            let bad = || FormatError::Malformed(format!("bad header entry `{kv}`"));
            match k {
                "dim" => dim = Some(v.parse::<usize>().map_err(|_| bad())?),
                "count" => count = Some(v.parse::<usize>().map_err(|_| bad())?),
                "field" => field = Some(v.parse::<Field>().map_err(FormatError::Malformed)?),
                _ => {}
            }
        }
    }

    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows: Vec<Vec<String>> = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| FormatError::Malformed(e.to_string()))?;
        if rec.iter().all(str::is_empty) {
            continue;
        }
        rows.push(rec.iter().map(str::to_owned).collect());
    }
    let field = field.unwrap_or_else(|| {
        if rows.iter().flatten().any(|c| c.contains(':')) {
            Field::Complex
        } else {
            Field::Real
        }
    });
    let parse = |s: &str| -> Result<f64, FormatError> {
        s.parse::<f64>()
            .map_err(|_| FormatError::Malformed(format!("not a number: `{s}`")))
    };
    let mut vectors = Vec::with_capacity(rows.len());
    for row in &rows {
        let mut v = Vec::with_capacity(row.len());
        for cell in row {
            let z = match (field, cell.split_once(':')) {
                (Field::Complex, Some((re, im))) => Complex::new(parse(re)?, parse(im)?),
                (Field::Complex, None) => Complex::new(parse(cell)?, 0.0),
                (Field::Real, None) => Complex::new(parse(cell)?, 0.0),
                (Field::Real, Some(_)) => return malformed(format!("complex cell `{cell}` in a real file")),
            };
            v.push(z);
        }
        vectors.push(v);
    }
    let dim = dim.or_else(|| vectors.first().map(Vec::len)).unwrap_or(0);
    if let Some(c) = count {
        if c != vectors.len() {
            return malformed(format!("header count {c} but {} rows", vectors.len()));
        }
    }
    let data = VectorData {
        dim,
        field,
        vectors,
        labels: None,
    };
    data.check()?;
    Ok(data)
}

pub fn read_vector_file(path: &Path) -> Result<VectorData, FormatError> {
    let text = std::fs::read_to_string(path)?;
    match FileFormat::from_path(path) {
        FileFormat::Json => from_json(&text),
        FileFormat::Csv => from_csv(&text),
    }
}

pub fn write_vector_file(path: &Path, data: &VectorData, format: FileFormat) -> Result<(), FormatError> {
    let text = match format {
        FileFormat::Json => to_json(data),
        FileFormat::Csv => to_csv(data),
    };
    std::fs::write(path, text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex_data() -> VectorData {
        VectorData {
            dim: 2,
            field: Field::Complex,
            vectors: vec![
                vec![Complex::new(0.6, 0.0), Complex::new(0.0, 0.8)],
                vec![Complex::new(0.1f64.sqrt(), -1e-300), Complex::new(0.9f64.sqrt(), 0.0)],
            ],
            labels: Some(vec!["a".into(), "b".into()]),
        }
    }

    #[test]
    fn json_round_trip_is_exact() {
        let d = complex_data();
        assert_eq!(from_json(&to_json(&d)).unwrap(), d);
    }

    #[test]
    fn csv_round_trip_is_exact() {
        let mut d = complex_data();
        d.labels = None;
        let text = to_csv(&d);
        assert!(text.starts_with("# dim=2 field=complex count=2\n"));
        assert_eq!(from_csv(&text).unwrap(), d);
    }

    #[test]
    fn csv_without_header() {
        let d = from_csv("1,0\n0.6, 0.8\n").unwrap();
        assert_eq!((d.dim, d.field, d.vectors.len()), (2, Field::Real, 2));
        let c = from_csv("1:0,0:0\n").unwrap();
        assert_eq!(c.field, Field::Complex);
    }

    #[test]
    fn malformed_inputs() {
        assert!(from_json("{").is_err());
        assert!(
            from_json(r#"{"format":"other","version":1,"dim":1,"field":"real","count":1,"vectors":[[1.0]]}"#).is_err()
        );
        assert!(from_json(
            r#"{"format":"frame-vectors","version":1,"dim":1,"field":"real","count":2,"vectors":[[1.0]]}"#
        )
        .is_err());
        assert!(from_json(
            r#"{"format":"frame-vectors","version":1,"dim":2,"field":"real","count":1,"vectors":[[1.0]]}"#
        )
        .is_err());
        assert!(from_json(
            r#"{"format":"frame-vectors","version":1,"dim":1,"field":"complex","count":1,"vectors":[[1.0]]}"#
        )
        .is_err());
        assert!(from_csv("1,x\n").is_err());
        assert!(from_csv("# field=real\n1:0\n").is_err());
        assert!(from_csv("1,0\n1\n").is_err());
        assert!(from_csv("").is_err());
    }

    #[test]
    fn digest_ignores_format_and_labels() {
        let d = complex_data();
        let mut e = d.clone();
        e.labels = None;
        assert_eq!(d.digest(), e.digest());
        assert_eq!(d.digest(), from_csv(&to_csv(&e)).unwrap().digest());
        e.vectors[0][0].re = 0.6000000000000001;
        assert_ne!(d.digest(), e.digest());
        assert!(d.digest().starts_with("sha256:"));
    }
}
