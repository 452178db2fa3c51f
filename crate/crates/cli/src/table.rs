//! Sweeps over extension shapes, one row per twist list.

use std::fmt::Write as _;

use hilbext_core::hilbext::{closed_form, lower_bound, trivial_extension_length, ExtensionSpec, Length};
use hilbext_core::polyring::FieldSpec;
use rayon::prelude::*;
use serde::Serialize;

use crate::{Failure, Output};

#[derive(Debug, Serialize)]
pub struct Row {
    pub twists: Vec<i64>,
    pub length: Length,
    /// The closed form for this shape, when one is known.
    pub formula: Option<u64>,
    /// Lower bound treating the first twist as the first layer and the rest
    /// as the second.
    pub lower_bound: Option<u64>,
    pub agreement: Vec<String>,
}

fn row(twists: &[i64], field: FieldSpec) -> Result<Row, Failure> {
    let spec = ExtensionSpec::from_twists(twists, field)?;
    let report = trivial_extension_length(&spec)?;
    let lower = match spec.ds() {
        [first, rest @ ..] if *first > 0 && !rest.is_empty() => {
            Some(lower_bound(*first, &ExtensionSpec::new(rest.to_vec(), field)?)?)
        }
        _ => None,
    };
    Ok(Row {
        twists: spec.twists(),
        length: report.length,
        formula: closed_form(&spec),
        lower_bound: lower,
        agreement: report.agreement.iter().map(|m| m.name().to_string()).collect(),
    })
}

fn cell<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or("-".into(), |v| v.to_string())
}

pub fn sweep(shapes: &[Vec<i64>], field: FieldSpec) -> Result<Output, Failure> {
    let rows: Vec<Row> = shapes.par_iter().map(|t| row(t, field)).collect::<Result<_, _>>()?;
    let header = ["twists", "length", "formula", "lower", "agreement"];
    let body: Vec<[String; 5]> = rows
        .iter()
        .map(|r| {
            let twists = r.twists.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",");
            let length = match &r.length {
                Length::Finite(n) => n.to_string(),
                Length::NotArtinian(_) => "inf".into(),
            };
            let agreement = if r.agreement.is_empty() { "-".into() } else { r.agreement.join(",") };
            [twists, length, cell(&r.formula), cell(&r.lower_bound), agreement]
        })
        .collect();
    let mut widths = header.map(str::len);
    for b in &body {
        for (w, c) in widths.iter_mut().zip(b) {
            *w = (*w).max(c.len());
        }
    }
    let mut text = String::new();
    let fmt_row = |cells: Vec<&str>, text: &mut String| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        let _ = writeln!(text, "{}", padded.join("  ").trim_end());
    };
    fmt_row(header.to_vec(), &mut text);
    for b in &body {
        fmt_row(b.iter().map(String::as_str).collect(), &mut text);
    }
    let json = serde_json::json!({"field": field.to_string(), "rows": rows});
    Ok(Output { json, text, failure: None })
}
