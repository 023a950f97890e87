//! Text formats for tables, pair maps, coset data and enumeration reports.
//!
//! A document is a sequence of `key: value` lines. The keys `table`, `dot`
//! and `star` take no inline value; their `n` rows follow on the next lines,
//! entries separated by spaces and/or commas. Blank lines and lines starting
//! with `#` are ignored. Canonical output uses single spaces and ends every
//! line with a newline.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::algebra::{Element, Group, Magma, Subgroup};
use crate::enumeration::{Counts, EnumerationReport, Method};
use crate::error::{Error, Result};
use crate::pentagon::{PairMap, SolutionProfile};
use crate::theta::CosetDatum;

/// A parsed table document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableFile {
    Magma {
        name: Option<String>,
        magma: Magma,
    },
    Group {
        name: Option<String>,
        group: Group,
    },
    PairMap {
        name: Option<String>,
        group_ref: Option<String>,
        map: PairMap,
    },
}

impl TableFile {
    pub fn name(&self) -> Option<&str> {
        match self {
            TableFile::Magma { name, .. }
            | TableFile::Group { name, .. }
            | TableFile::PairMap { name, .. } => name.as_deref(),
        }
    }
}

#[derive(Debug)]
struct Field {
    key: String,
    line: usize,
    value: String,
    rows: Vec<(usize, Vec<usize>)>,
}

const BLOCK_KEYS: [&str; 3] = ["table", "dot", "star"];
const INLINE_KEYS: [&str; 5] = ["name", "n", "group", "K", "R"];

fn parse_fields(text: &str) -> Result<Vec<Field>> {
    let mut fields: Vec<Field> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some((key, value)) = trimmed.split_once(':') {
            let key = key.trim();
            let value = value.trim();
            if !BLOCK_KEYS.contains(&key) && !INLINE_KEYS.contains(&key) {
                return Err(Error::parse(line, format!("unknown field `{key}`")));
            }
            if fields.iter().any(|f| f.key == key) {
                return Err(Error::parse(line, format!("duplicate field `{key}`")));
            }
            if BLOCK_KEYS.contains(&key) && !value.is_empty() {
                return Err(Error::parse(
                    line,
                    format!("rows of `{key}` must start on the next line"),
                ));
            }
            fields.push(Field {
                key: key.to_string(),
                line,
                value: value.to_string(),
                rows: Vec::new(),
            });
        } else {
            let Some(open) = fields
                .last_mut()
                .filter(|f| BLOCK_KEYS.contains(&f.key.as_str()))
            else {
                return Err(Error::parse(line, "table row outside a table field"));
            };
            open.rows.push((line, parse_list(trimmed, line)?));
        }
    }
    Ok(fields)
}

fn parse_list(text: &str, line: usize) -> Result<Vec<usize>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::parse(line, format!("`{t}` is not a non-negative integer")))
        })
        .collect()
}

fn field<'a>(fields: &'a [Field], key: &str) -> Option<&'a Field> {
    fields.iter().find(|f| f.key == key)
}

fn required<'a>(fields: &'a [Field], key: &str) -> Result<&'a Field> {
    field(fields, key).ok_or_else(|| Error::parse(0, format!("missing field `{key}`")))
}

fn allow_only(fields: &[Field], allowed: &[&str]) -> Result<()> {
    match fields.iter().find(|f| !allowed.contains(&f.key.as_str())) {
        Some(f) => Err(Error::parse(
            f.line,
            format!("field `{}` is not allowed here", f.key),
        )),
        None => Ok(()),
    }
}

fn parse_size(fields: &[Field]) -> Result<usize> {
    let f = required(fields, "n")?;
    match f.value.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(Error::parse(
            f.line,
            format!("`n` must be a positive integer, got `{}`", f.value),
        )),
    }
}

fn parse_grid(f: &Field, n: usize) -> Result<Vec<Vec<usize>>> {
    if f.rows.len() != n {
        let line = f.rows.last().map_or(f.line, |r| r.0);
        return Err(Error::parse(
            line,
            format!("`{}` has {} rows, expected {n}", f.key, f.rows.len()),
        ));
    }
    for (row, (line, entries)) in f.rows.iter().enumerate() {
        if entries.len() != n {
            return Err(Error::parse(
                *line,
                format!(
                    "row {row} of `{}` has {} entries, expected {n}",
                    f.key,
                    entries.len()
                ),
            ));
        }
        if let Some((col, value)) = entries.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::parse(
                *line,
                format!(
                    "entry {value} at row {row}, col {col} of `{}` is outside 0..{n}",
                    f.key
                ),
            ));
        }
    }
    Ok(f.rows.iter().map(|(_, r)| r.clone()).collect())
}

fn optional_string(fields: &[Field], key: &str) -> Option<String> {
    field(fields, key).map(|f| f.value.clone())
}

/// Parses a magma, group or pair-map document. Tables that satisfy the
/// group axioms come back as `TableFile::Group`.
pub fn parse_table_document(text: &str) -> Result<TableFile> {
    let fields = parse_fields(text)?;
    let name = optional_string(&fields, "name");
    if field(&fields, "table").is_some() {
        allow_only(&fields, &["name", "n", "table"])?;
        let n = parse_size(&fields)?;
        let rows = parse_grid(required(&fields, "table")?, n)?;
        let magma = Magma::new(n, &rows)?;
        return Ok(match Group::from_magma(magma.clone()) {
            Ok(group) => TableFile::Group { name, group },
            Err(_) => TableFile::Magma { name, magma },
        });
    }
    if field(&fields, "dot").is_some() || field(&fields, "star").is_some() {
        allow_only(&fields, &["name", "n", "dot", "star", "group"])?;
        let n = parse_size(&fields)?;
        let dot = parse_grid(required(&fields, "dot")?, n)?;
        let star = parse_grid(required(&fields, "star")?, n)?;
        return Ok(TableFile::PairMap {
            name,
            group_ref: optional_string(&fields, "group"),
            map: PairMap::new(n, &dot, &star)?,
        });
    }
    Err(Error::parse(
        0,
        "document has no `table`, `dot` or `star` field",
    ))
}

/// Reads and parses a table document from disk.
pub fn parse_table_file(path: &Path) -> Result<TableFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_table_document(&text)
}

fn write_rows<'a>(out: &mut String, rows: impl Iterator<Item = &'a [Element]>) {
    for row in rows {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
}

pub fn magma_to_string(name: Option<&str>, m: &Magma) -> String {
    let mut out = String::new();
    if let Some(name) = name {
        let _ = writeln!(out, "name: {name}");
    }
    let _ = writeln!(out, "n: {}", m.size());
    out.push_str("table:\n");
    write_rows(&mut out, m.rows());
    out
}

/// Canonical group document; the identity is relabelled to index 0.
pub fn group_to_string(name: Option<&str>, g: &Group) -> String {
    magma_to_string(name, g.normalized().magma())
}

pub fn pairmap_to_string(name: Option<&str>, group_ref: Option<&str>, s: &PairMap) -> String {
    let mut out = String::new();
    if let Some(name) = name {
        let _ = writeln!(out, "name: {name}");
    }
    if let Some(group) = group_ref {
        let _ = writeln!(out, "group: {group}");
    }
    let _ = writeln!(out, "n: {}", s.size());
    out.push_str("dot:\n");
    write_rows(&mut out, s.dot_table().chunks(s.size()));
    out.push_str("star:\n");
    write_rows(&mut out, s.star_table().chunks(s.size()));
    out
}

pub fn table_file_to_string(file: &TableFile) -> String {
    match file {
        TableFile::Magma { name, magma } => magma_to_string(name.as_deref(), magma),
        TableFile::Group { name, group } => group_to_string(name.as_deref(), group),
        TableFile::PairMap {
            name,
            group_ref,
            map,
        } => pairmap_to_string(name.as_deref(), group_ref.as_deref(), map),
    }
}

fn join(list: &[Element]) -> String {
    list.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// `n`, `K` and `R` lines; `μ` is recomputed on parsing.
pub fn coset_datum_to_string(g: &Group, d: &CosetDatum) -> String {
    format!(
        "n: {}\nK: {}\nR: {}\n",
        g.order(),
        join(d.kernel().elements()),
        join(d.representatives())
    )
}

pub fn parse_coset_datum(text: &str, g: &Group) -> Result<CosetDatum> {
    let fields = parse_fields(text)?;
    allow_only(&fields, &["n", "K", "R"])?;
    let n_field = required(&fields, "n")?;
    if parse_size(&fields)? != g.order() {
        return Err(Error::parse(
            n_field.line,
            format!(
                "datum is for order {}, group has order {}",
                n_field.value,
                g.order()
            ),
        ));
    }
    let k_field = required(&fields, "K")?;
    let r_field = required(&fields, "R")?;
    let k = parse_list(&k_field.value, k_field.line)?;
    let r = parse_list(&r_field.value, r_field.line)?;
    let kernel = Subgroup::new(g, &k)?;
    CosetDatum::new(g, &kernel, &r)
}

/// Plain-text report with a fixed field order.
pub fn report_to_text(report: &EnumerationReport) -> String {
    let mut out = String::new();
    let c = report.counts();
    let _ = writeln!(out, "carrier: {}", report.carrier);
    let _ = writeln!(out, "n: {}", report.n);
    let _ = writeln!(out, "method: {}", report.method);
    let _ = writeln!(out, "solutions: {}", c.solutions);
    let _ = writeln!(out, "reversed: {}", c.reversed);
    let _ = writeln!(out, "invertible: {}", c.invertible);
    let _ = writeln!(out, "commutative: {}", c.commutative);
    let _ = writeln!(out, "cocommutative: {}", c.cocommutative);
    if let Some(classes) = &report.classes {
        let _ = writeln!(out, "classes: {}", classes.len());
    }
    for (i, (s, p)) in report.solutions.iter().zip(&report.profiles).enumerate() {
        let _ = writeln!(out, "solution {i}: {}", s.encoding());
        let _ = writeln!(out, "  {p}");
    }
    if let Some(classes) = &report.classes {
        for (i, class) in classes.iter().enumerate() {
            let _ = writeln!(out, "class {i}: {}", join(class));
        }
    }
    out
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    carrier: &'a str,
    n: usize,
    method: Method,
    counts: Counts,
    solutions: Vec<SolutionDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    classes: Option<&'a Vec<Vec<usize>>>,
}

#[derive(Serialize)]
struct SolutionDoc {
    index: usize,
    dot: Vec<Vec<Element>>,
    star: Vec<Vec<Element>>,
    profile: SolutionProfile,
}

/// JSON report mirroring the text fields one-to-one.
pub fn report_to_json(report: &EnumerationReport) -> String {
    let doc = ReportDoc {
        carrier: &report.carrier,
        n: report.n,
        method: report.method,
        counts: report.counts(),
        solutions: report
            .solutions
            .iter()
            .zip(&report.profiles)
            .enumerate()
            .map(|(index, (s, p))| SolutionDoc {
                index,
                dot: s.dot_rows(),
                star: s.star_rows(),
                profile: *p,
            })
            .collect(),
        classes: report.classes.as_ref(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
    text.push('\n');
    text
}
