//! File formats: algebra and map files (JSON), matrix dumps (plain, CSV,
//! JSON) and sampling reports.
//!
//! Scalars are always written as literal strings (`"-3/4"`, `"17"`).

use std::sync::{Arc, LazyLock};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::SkewAlgebra;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::lab::SampleReport;
use crate::linear_map::LinearMap;
use crate::matrix::Matrix;
use crate::registry::{Named, Registry};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum FieldFile {
    Rational,
    Prime { p: u64 },
}

impl FieldFile {
    fn resolve(&self) -> Result<FieldSpec> {
        match self {
            FieldFile::Rational => Ok(FieldSpec::Rational),
            FieldFile::Prime { p } => FieldSpec::prime(*p).map_err(|e| Error::format("field.p", e)),
        }
    }

    fn from_spec(field: FieldSpec) -> Self {
        match field {
            FieldSpec::Rational => FieldFile::Rational,
            FieldSpec::Prime(m) => FieldFile::Prime { p: m.get() },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProductFile {
    left: usize,
    right: usize,
    coeffs: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    dim: usize,
    field: FieldFile,
    products: Vec<ProductFile>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapFile {
    dim: usize,
    field: FieldFile,
    columns: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        let location = format!("line {} column {}", e.line(), e.column());
        let message = e.to_string();
        let message = message.strip_suffix(&format!(" at {location}")).unwrap_or(&message).to_string();
        Error::format(location, message)
    })
}

fn literals(field: FieldSpec, items: &[String], context: &str) -> Result<Vec<Scalar>> {
    items
        .iter()
        .enumerate()
        .map(|(k, s)| field.parse_scalar(s).map_err(|e| Error::format(format!("{context}[{k}]"), e)))
        .collect()
}

fn to_literals(xs: &[Scalar]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

pub fn parse_algebra(text: &str) -> Result<SkewAlgebra> {
    let file: AlgebraFile = parse_json(text)?;
    let field = file.field.resolve()?;
    if file.dim == 0 {
        return Err(Error::format("dim", "dimension must be positive"));
    }
    let mut products = Vec::with_capacity(file.products.len());
    for (idx, p) in file.products.iter().enumerate() {
        let context = format!("products[{idx}]");
        let coeffs = literals(field, &p.coeffs, &format!("{context}.coeffs"))?;
        // validate each entry on its own so errors carry its position
        SkewAlgebra::new(file.dim, field, [(p.left, p.right, coeffs.clone())])
            .map_err(|e| Error::format(&context, e))?;
        products.push((p.left, p.right, coeffs));
    }
    SkewAlgebra::new(file.dim, field, products).map_err(|e| Error::format("products", e))
}

pub fn algebra_to_json(algebra: &SkewAlgebra) -> Value {
    let file = AlgebraFile {
        dim: algebra.dim(),
        field: FieldFile::from_spec(algebra.field()),
        products: algebra
            .constants()
            .iter()
            .map(|(&(left, right), c)| ProductFile {
                left,
                right,
                coeffs: to_literals(c),
            })
            .collect(),
    };
    serde_json::to_value(file).expect("serializable")
}

pub fn parse_map(text: &str) -> Result<LinearMap> {
    let file: MapFile = parse_json(text)?;
    map_from_file(file)
}

fn map_from_file(file: MapFile) -> Result<LinearMap> {
    let field = file.field.resolve()?;
    if file.dim == 0 {
        return Err(Error::format("dim", "dimension must be positive"));
    }
    if file.columns.len() != file.dim {
        return Err(Error::format(
            "columns",
            format!("expected {} columns, found {}", file.dim, file.columns.len()),
        ));
    }
    let mut columns = Vec::with_capacity(file.dim);
    for (q, col) in file.columns.iter().enumerate() {
        if col.len() != file.dim {
            return Err(Error::format(
                format!("columns[{q}]"),
                format!("expected {} entries, found {}", file.dim, col.len()),
            ));
        }
        columns.push(literals(field, col, &format!("columns[{q}]"))?);
    }
    LinearMap::from_columns(field, columns)
}

pub fn map_to_json(map: &LinearMap) -> Value {
    let file = MapFile {
        dim: map.dim(),
        field: FieldFile::from_spec(map.field()),
        columns: map.columns().iter().map(|c| to_literals(c)).collect(),
    };
    serde_json::to_value(file).expect("serializable")
}

/// A JSON array of map files.
pub fn maps_to_json(maps: &[LinearMap]) -> Value {
    Value::Array(maps.iter().map(map_to_json).collect())
}

pub fn parse_maps(text: &str) -> Result<Vec<LinearMap>> {
    let files: Vec<MapFile> = parse_json(text)?;
    files
        .into_iter()
        .enumerate()
        .map(|(i, f)| map_from_file(f).map_err(|e| e.at(&format!("[{i}]."))))
        .collect()
}

pub fn report_to_json(report: &SampleReport) -> Value {
    let histogram: serde_json::Map<String, Value> = report
        .histogram
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    json!({
        "dim": report.dim,
        "p": report.field.modulus(),
        "trials": report.trials,
        "seed": report.seed,
        "histogram": histogram,
        "full_rank": report.full_rank,
        "elapsed_ms": report.elapsed.as_millis() as u64,
        "evidence": "random sampling; not a proof",
    })
}

/// A matrix text format, selectable by name.
pub trait MatrixCodec: Named + Send + Sync {
    fn encode(&self, m: &Matrix) -> String;
    fn decode(&self, text: &str, field: FieldSpec) -> Result<Matrix>;
}

fn rows_to_matrix(field: FieldSpec, rows: Vec<Vec<String>>, cols: usize) -> Result<Matrix> {
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(r, row)| literals(field, row, &format!("row {}", r + 1)))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, cols, parsed)
}

/// Rows of space-separated literals, one per line.
pub struct PlainText;

impl Named for PlainText {
    fn name(&self) -> &'static str {
        "plain"
    }
}

impl MatrixCodec for PlainText {
    fn encode(&self, m: &Matrix) -> String {
        m.to_string()
    }

    fn decode(&self, text: &str, field: FieldSpec) -> Result<Matrix> {
        let rows = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split_whitespace().map(str::to_string).collect())
            .collect();
        rows_to_matrix(field, rows, 0)
    }
}

pub struct Csv;

impl Named for Csv {
    fn name(&self) -> &'static str {
        "csv"
    }
}

impl MatrixCodec for Csv {
    fn encode(&self, m: &Matrix) -> String {
        let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
        for r in 0..m.rows() {
            w.write_record(m.row(r).iter().map(ToString::to_string))
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    fn decode(&self, text: &str, field: FieldSpec) -> Result<Matrix> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let mut rows = Vec::new();
        for (i, record) in reader.records().enumerate() {
            let record = record.map_err(|e| Error::format(format!("record {}", i + 1), e))?;
            rows.push(record.iter().map(str::to_string).collect());
        }
        rows_to_matrix(field, rows, 0)
    }
}

/// `{"rows": r, "cols": c, "entries": [[...]]}`
pub struct Json;

impl Named for Json {
    fn name(&self) -> &'static str {
        "json"
    }
}

impl Json {
    pub fn to_value(m: &Matrix) -> Value {
        serde_json::to_value(MatrixFile {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.row_vecs().iter().map(|r| to_literals(r)).collect(),
        })
        .expect("serializable")
    }
}

impl MatrixCodec for Json {
    fn encode(&self, m: &Matrix) -> String {
        let mut s = Json::to_value(m).to_string();
        s.push('\n');
        s
    }

    fn decode(&self, text: &str, field: FieldSpec) -> Result<Matrix> {
        let file: MatrixFile = parse_json(text)?;
        if file.entries.len() != file.rows {
            return Err(Error::format(
                "entries",
                format!("expected {} rows, found {}", file.rows, file.entries.len()),
            ));
        }
        if let Some(r) = file.entries.iter().position(|row| row.len() != file.cols) {
            return Err(Error::format(
                format!("entries[{r}]"),
                format!("expected {} columns", file.cols),
            ));
        }
        rows_to_matrix(field, file.entries, file.cols)
    }
}

static CODECS: LazyLock<Registry<dyn MatrixCodec>> = LazyLock::new(|| {
    let mut reg: Registry<dyn MatrixCodec> = Registry::new("matrix format");
    reg.register(Arc::new(PlainText));
    reg.register(Arc::new(Csv));
    reg.register(Arc::new(Json));
    reg
});

pub fn matrix_codecs() -> &'static Registry<dyn MatrixCodec> {
    &CODECS
}
