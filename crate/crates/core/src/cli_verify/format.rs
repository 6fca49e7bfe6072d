//! Text encodings for tables. JSON round-trips exactly; CSV and LaTeX are
//! for reading.
//!
//! Tables are written in the library's `(w, y)` orientation. The JSON
//! header spells out what rows and columns mean for the table's chamber.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::parabolic::ParabolicRestrictionTable;
use crate::poly_ring::{parse_ratio, Monomial, Poly, Scalar, MAX_VARS};
use crate::root_system::{CosetSpace, WeylElement, WeylGroup};
use crate::schubert_limit::SchubertRestrictionTable;
use crate::stable_basis::{Chamber, Method, RestrictionTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OutputFormat {
    Json,
    Csv,
    Latex,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Latex => "latex",
        })
    }
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "latex" | "tex" => Ok(OutputFormat::Latex),
            _ => Err(Error::ConfigInvalid(format!("unknown format `{s}`"))),
        }
    }
}

fn var_names(rank: usize) -> Vec<String> {
    (1..=rank).map(|i| format!("a{i}")).chain(std::iter::once("h".to_string())).collect()
}

fn ratio_text<C: Scalar>(c: &C) -> String {
    let s = c.to_string();
    if s.contains('/') {
        s
    } else {
        format!("{s}/1")
    }
}

/// `{"vars":[...],"terms":[{"c":"n/d","e":[...]}]}`, terms ascending in
/// graded-lex order, the last exponent being that of ℏ.
pub fn poly_to_json<C: Scalar>(p: &Poly<C>) -> Value {
    let rank = p.rank();
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| json!({ "c": ratio_text(c), "e": (0..=rank).map(|k| m.exponent(k)).collect::<Vec<u8>>() }))
        .collect();
    json!({ "vars": var_names(rank), "terms": terms })
}

pub fn poly_from_json<C: Scalar>(v: &Value) -> Result<Poly<C>> {
    let bad = |msg: &str| Error::Parse(format!("polynomial: {msg}"));
    let vars = v.get("vars").and_then(Value::as_array).ok_or_else(|| bad("missing vars"))?;
    let rank = vars.len().checked_sub(1).ok_or_else(|| bad("empty vars"))?;
    if rank + 1 > MAX_VARS || vars.iter().map(|x| x.as_str().map(String::from)).collect::<Option<Vec<_>>>() != Some(var_names(rank)) {
        return Err(bad("unexpected variable names"));
    }
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
    let mut out = Poly::zero(rank);
    for t in terms {
        let c = t.get("c").and_then(Value::as_str).ok_or_else(|| bad("missing coefficient"))?;
        let c: C = parse_ratio(c).ok_or_else(|| bad("bad coefficient"))?;
        let e = t.get("e").and_then(Value::as_array).ok_or_else(|| bad("missing exponents"))?;
        if e.len() != rank + 1 {
            return Err(bad("exponent vector has the wrong length"));
        }
        let exps = e
            .iter()
            .map(|x| x.as_u64().and_then(|k| u8::try_from(k).ok()))
            .collect::<Option<Vec<u8>>>()
            .ok_or_else(|| bad("bad exponent"))?;
        out.add_term(Monomial::from_exponents(&exps), c);
    }
    Ok(out)
}

/// LaTeX form with `\alpha_{i}` and `\hbar`, terms in the same order as
/// the canonical text.
pub fn poly_to_latex<C: Scalar>(p: &Poly<C>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let rank = p.rank();
    let mut out = String::new();
    for (k, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = c.abs();
        let mut factors = String::new();
        let hexp = m.exponent(rank);
        if hexp > 0 {
            factors.push_str("\\hbar");
            if hexp > 1 {
                let _ = write!(factors, "^{{{hexp}}}");
            }
        }
        for i in 0..rank {
            let e = m.exponent(i);
            if e > 0 {
                let _ = write!(factors, "\\alpha_{{{}}}", i + 1);
                if e > 1 {
                    let _ = write!(factors, "^{{{e}}}");
                }
            }
        }
        if !mag.is_one() || factors.is_empty() {
            let s = mag.to_string();
            match s.split_once('/') {
                Some((n, d)) => {
                    let _ = write!(out, "\\frac{{{n}}}{{{d}}}");
                }
                None => out.push_str(&s),
            }
        }
        out.push_str(&factors);
    }
    out
}

fn latex_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    word.iter().map(|i| format!("s_{{{}}}", i + 1)).collect()
}

/// A labelled square table ready to be written out.
pub struct TableArtifact<'a, C> {
    header: Map<String, Value>,
    labels: Vec<String>,
    latex_labels: Vec<String>,
    entries: &'a [Poly<C>],
}

impl<C: Scalar> TableArtifact<'_, C> {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("json values serialize");
                s.push('\n');
                s
            }
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Latex => self.to_latex(),
        }
    }

    pub fn to_json(&self) -> Value {
        let n = self.labels.len();
        let mut obj = self.header.clone();
        obj.insert("labels".into(), json!(self.labels));
        let rows: Vec<Value> = (0..n).map(|w| Value::Array((0..n).map(|y| poly_to_json(&self.entries[w * n + y])).collect())).collect();
        obj.insert("entries".into(), Value::Array(rows));
        Value::Object(obj)
    }

    pub fn to_csv(&self) -> String {
        let n = self.labels.len();
        let mut out = String::new();
        out.push_str("w\\y");
        for l in &self.labels {
            let _ = write!(out, ",{l}");
        }
        out.push('\n');
        for w in 0..n {
            out.push_str(&self.labels[w]);
            for y in 0..n {
                let _ = write!(out, ",{}", self.entries[w * n + y]);
            }
            out.push('\n');
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let n = self.labels.len();
        let mut out = format!("\\begin{{array}}{{c|{}}}\n", "c".repeat(n));
        out.push_str("w \\backslash y");
        for l in &self.latex_labels {
            let _ = write!(out, " & {l}");
        }
        out.push_str(" \\\\\n\\hline\n");
        for w in 0..n {
            out.push_str(&self.latex_labels[w]);
            for y in 0..n {
                let _ = write!(out, " & {}", poly_to_latex(&self.entries[w * n + y]));
            }
            out.push_str(" \\\\\n");
        }
        out.push_str("\\end{array}\n");
        out
    }
}

fn base_header(group: &WeylGroup, kind: &str) -> Map<String, Value> {
    let rs = group.root_system();
    let mut h = Map::new();
    h.insert("kind".into(), json!(kind));
    h.insert("type".into(), json!(rs.cartan_type().to_string()));
    h.insert("rank".into(), json!(rs.rank()));
    h
}

fn orientation(chamber: Chamber, what: &str) -> String {
    match chamber {
        Chamber::Minus => format!("row w is the label, column y the point: entry stab_-(w)|_y, zero unless {what}"),
        Chamber::Plus => format!("row w is the point, column y the label: entry stab_+(y)|_w, zero unless {what}"),
    }
}

fn element_labels(group: &WeylGroup, elems: impl Iterator<Item = WeylElement> + Clone) -> (Vec<String>, Vec<String>) {
    (
        elems.clone().map(|w| group.format_element(w)).collect(),
        elems.map(|w| latex_word(group.word(w))).collect(),
    )
}

pub fn restriction_artifact<'a, C: Scalar>(group: &WeylGroup, table: &'a RestrictionTable<C>) -> TableArtifact<'a, C> {
    let mut header = base_header(group, "stable_restriction");
    header.insert("chamber".into(), json!(table.chamber().to_string()));
    header.insert("method".into(), json!(table.method().to_string()));
    header.insert("orientation".into(), json!(orientation(table.chamber(), "w <= y")));
    let (labels, latex_labels) = element_labels(group, group.elements());
    TableArtifact { header, labels, latex_labels, entries: table.entries() }
}

pub fn parabolic_artifact<'a, C: Scalar>(
    group: &WeylGroup,
    cs: &CosetSpace,
    table: &'a ParabolicRestrictionTable<C>,
) -> TableArtifact<'a, C> {
    let mut header = base_header(group, "parabolic_restriction");
    header.insert("subset".into(), json!(cs.subset().iter().map(|i| i + 1).collect::<Vec<_>>()));
    header.insert("chamber".into(), json!(table.chamber().to_string()));
    header.insert("orientation".into(), json!(orientation(table.chamber(), "w <= y in W/W_P") + "; cosets named by minimal representatives"));
    let (labels, latex_labels) = element_labels(group, cs.minimal_reps().iter().copied());
    TableArtifact { header, labels, latex_labels, entries: table.entries() }
}

pub fn schubert_artifact<'a, C: Scalar>(group: &WeylGroup, table: &'a SchubertRestrictionTable<C>) -> TableArtifact<'a, C> {
    let mut header = base_header(group, "schubert_restriction");
    header.insert("orientation".into(), json!("row w is the Schubert class, column y the point: entry [B^-wB/B]|_y, zero unless w <= y"));
    let (labels, latex_labels) = element_labels(group, group.elements());
    TableArtifact { header, labels, latex_labels, entries: table.entries() }
}

/// Inverse of the JSON rendering of [`restriction_artifact`].
pub fn restriction_table_from_json<C: Scalar>(text: &str) -> Result<RestrictionTable<C>> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let field = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("missing `{k}`")));
    if field("kind")?.as_str() != Some("stable_restriction") {
        return Err(Error::Parse("not a stable restriction table".into()));
    }
    let chamber: Chamber = field("chamber")?.as_str().ok_or_else(|| Error::Parse("bad chamber".into()))?.parse()?;
    let method: Method = field("method")?.as_str().ok_or_else(|| Error::Parse("bad method".into()))?.parse()?;
    let rank = field("rank")?.as_u64().ok_or_else(|| Error::Parse("bad rank".into()))? as usize;
    let rows = field("entries")?.as_array().ok_or_else(|| Error::Parse("bad entries".into()))?;
    let size = rows.len();
    let mut entries = Vec::with_capacity(size * size);
    for row in rows {
        let row = row.as_array().filter(|r| r.len() == size).ok_or_else(|| Error::Parse("table is not square".into()))?;
        for cell in row {
            entries.push(poly_from_json(cell)?);
        }
    }
    RestrictionTable::from_entries(chamber, method, rank, size, entries)
}
