//! Reader and writer for the KEEL `.dat` format.
//!
//! ```text
//! @relation pima
//! @attribute Preg real [0.0, 17.0]
//! @attribute Class {positive, negative}
//! @inputs Preg
//! @outputs Class
//! @data
//! 6, positive
//! ```

use super::dataset::{Dataset, Feature, FeatureValues};
use super::number::format_g17;
use crate::error::{Error, Result};
use std::collections::HashSet;
use std::fmt::Write;

#[derive(Debug)]
enum AttrType {
    Numeric,
    Nominal(Vec<String>),
}

#[derive(Debug)]
struct Attribute {
    name: String,
    kind: AttrType,
    line: usize,
}

fn strip_quotes(s: &str) -> &str {
    let s = s.trim();
    for q in ['\'', '"'] {
        if s.len() >= 2 && s.starts_with(q) && s.ends_with(q) {
            return &s[1..s.len() - 1];
        }
    }
    s
}

/// Splits a keyword line into `(keyword, rest)`, keyword lowercased.
fn keyword(line: &str) -> (String, &str) {
    let end = line
        .find(|c: char| c.is_whitespace() || c == '{')
        .unwrap_or(line.len());
    (line[..end].to_ascii_lowercase(), line[end..].trim())
}

fn parse_attribute(rest: &str, line: usize) -> Result<Attribute> {
    let (name, tail) = if let Some(q) = rest.chars().next().filter(|c| *c == '\'' || *c == '"') {
        let close = rest[1..]
            .find(q)
            .ok_or_else(|| Error::parse(line, "unterminated quoted attribute name"))?;
        (&rest[1..close + 1], rest[close + 2..].trim())
    } else {
        let end = rest
            .find(|c: char| c.is_whitespace() || c == '{')
            .ok_or_else(|| Error::parse(line, "attribute declaration without a type"))?;
        (&rest[..end], rest[end..].trim())
    };
    if name.is_empty() {
        return Err(Error::parse(line, "empty attribute name"));
    }
    let kind = if let Some(body) = tail.strip_prefix('{') {
        let body = body
            .trim_end()
            .strip_suffix('}')
            .ok_or_else(|| Error::parse(line, "unterminated category list"))?;
        let cats: Vec<String> = body
            .split(',')
            .map(|c| strip_quotes(c).to_string())
            .collect();
        if cats.iter().any(String::is_empty) {
            return Err(Error::parse(line, "empty category in list"));
        }
        AttrType::Nominal(cats)
    } else {
        let type_end = tail.find(|c: char| c.is_whitespace() || c == '[').unwrap_or(tail.len());
        let ty = tail[..type_end].to_ascii_lowercase();
        match ty.as_str() {
            "real" | "integer" | "numeric" => {}
            "" => return Err(Error::parse(line, "attribute declaration without a type")),
            other => return Err(Error::parse(line, format!("unknown attribute type '{other}'"))),
        }
        let range = tail[type_end..].trim();
        if !range.is_empty() && !(range.starts_with('[') && range.ends_with(']')) {
            return Err(Error::parse(line, format!("malformed range '{range}'")));
        }
        AttrType::Numeric
    };
    Ok(Attribute {
        name: name.to_string(),
        kind,
        line,
    })
}

fn name_list(rest: &str) -> Vec<String> {
    rest.split(',')
        .map(|s| strip_quotes(s).to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

/// Parses KEEL text. The `@outputs` attribute (or the last attribute when
/// `@outputs` is absent) becomes the label; the remaining attributes become
/// features in declaration order.
pub fn parse_keel(text: &str) -> Result<Dataset> {
    let mut relation = String::new();
    let mut attributes: Vec<Attribute> = Vec::new();
    let mut inputs: Option<(Vec<String>, usize)> = None;
    let mut outputs: Option<(Vec<String>, usize)> = None;
    let mut data_start = None;
    let mut last_line = 0;

    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    for (no, line) in lines.by_ref() {
        last_line = no;
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        if !line.starts_with('@') {
            return Err(Error::parse(no, format!("unexpected content before @data: '{line}'")));
        }
        let (kw, rest) = keyword(line);
        match kw.as_str() {
            "@relation" => relation = strip_quotes(rest).to_string(),
            "@attribute" => attributes.push(parse_attribute(rest, no)?),
            "@inputs" | "@input" => inputs = Some((name_list(rest), no)),
            "@outputs" | "@output" => outputs = Some((name_list(rest), no)),
            "@data" => {
                data_start = Some(no);
                break;
            }
            other => return Err(Error::parse(no, format!("unknown header keyword '{other}'"))),
        }
    }
    let data_line = data_start.ok_or_else(|| Error::parse(last_line.max(1), "missing @data section"))?;
    if attributes.len() < 2 {
        return Err(Error::parse(
            data_line,
            "at least one input and one output attribute are required",
        ));
    }

    let mut seen = HashSet::new();
    for a in &attributes {
        if !seen.insert(a.name.as_str()) {
            return Err(Error::parse(a.line, format!("duplicate attribute '{}'", a.name)));
        }
    }
    let find = |name: &str, line: usize| {
        attributes
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::parse(line, format!("undeclared attribute '{name}'")))
    };
    let label_idx = match &outputs {
        Some((names, line)) => {
            if names.len() != 1 {
                return Err(Error::parse(*line, "exactly one output attribute is supported"));
            }
            find(&names[0], *line)?
        }
        None => attributes.len() - 1,
    };
    let feature_idx: Vec<usize> = match &inputs {
        Some((names, line)) => {
            let idx = names
                .iter()
                .map(|n| find(n, *line))
                .collect::<Result<Vec<_>>>()?;
            if idx.contains(&label_idx) {
                return Err(Error::parse(*line, "the output attribute is also listed as input"));
            }
            let mut sorted = idx.clone();
            sorted.sort_unstable();
            sorted
        }
        None => (0..attributes.len()).filter(|&i| i != label_idx).collect(),
    };

    let n_attr = attributes.len();
    let mut columns: Vec<Vec<&str>> = vec![Vec::new(); n_attr];
    for (no, line) in lines {
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        let cells: Vec<&str> = line.split(',').map(strip_quotes).collect();
        if cells.len() != n_attr {
            return Err(Error::parse(
                no,
                format!("expected {n_attr} values, found {}", cells.len()),
            ));
        }
        for (j, cell) in cells.into_iter().enumerate() {
            if cell.is_empty() || cell == "?" || cell == "<null>" {
                return Err(Error::parse(
                    no,
                    format!("missing value for attribute '{}'", attributes[j].name),
                ));
            }
            if let AttrType::Nominal(cats) = &attributes[j].kind {
                if !cats.iter().any(|c| c == cell) {
                    return Err(Error::parse(
                        no,
                        format!("unknown value '{cell}' for attribute '{}'", attributes[j].name),
                    ));
                }
            }
            columns[j].push(cell);
        }
        // Numeric cells are validated eagerly so that the error carries the line.
        for &j in &feature_idx {
            if let AttrType::Numeric = attributes[j].kind {
                let cell = *columns[j].last().expect("just pushed");
                match cell.parse::<f64>() {
                    Ok(v) if v.is_finite() => {}
                    _ => {
                        return Err(Error::parse(
                            no,
                            format!("'{cell}' is not a number (attribute '{}')", attributes[j].name),
                        ))
                    }
                }
            }
        }
    }

    let labels: Vec<String> = columns[label_idx].iter().map(|s| s.to_string()).collect();
    if labels.is_empty() {
        return Err(Error::parse(data_line, "no data rows"));
    }
    let features = feature_idx
        .iter()
        .map(|&j| {
            let a = &attributes[j];
            let values = match &a.kind {
                AttrType::Numeric => FeatureValues::Numeric(
                    columns[j].iter().map(|c| c.parse().expect("validated")).collect(),
                ),
                AttrType::Nominal(cats) => FeatureValues::Categorical {
                    values: columns[j].iter().map(|s| s.to_string()).collect(),
                    declared: cats.clone(),
                },
            };
            Feature {
                name: a.name.clone(),
                values,
            }
        })
        .collect();
    Dataset::new(relation, features, attributes[label_idx].name.clone(), labels)
}

fn needs_quotes(name: &str) -> bool {
    name.chars().any(|c| c.is_whitespace() || c == ',' || c == '{' || c == '}')
}

fn quoted(name: &str) -> String {
    if needs_quotes(name) {
        format!("'{name}'")
    } else {
        name.to_string()
    }
}

/// Serializes a dataset as KEEL. Encoded categorical features are written
/// back as their category strings; non-integral codes (e.g. produced by
/// interpolation) are rounded to the nearest valid category.
pub fn write_keel(dataset: &Dataset) -> String {
    let mut out = String::new();
    let relation = if dataset.relation().is_empty() { "dataset" } else { dataset.relation() };
    writeln!(out, "@relation {}", quoted(relation)).unwrap();
    for f in dataset.features() {
        match &f.values {
            FeatureValues::Numeric(_) => writeln!(out, "@attribute {} real", quoted(&f.name)).unwrap(),
            FeatureValues::Categorical { declared: cats, .. }
            | FeatureValues::Encoded { categories: cats, .. } => {
                writeln!(out, "@attribute {} {{{}}}", quoted(&f.name), cats.join(", ")).unwrap()
            }
        }
    }
    let classes: Vec<String> = dataset.class_counts().into_iter().map(|(c, _)| c).collect();
    writeln!(out, "@attribute {} {{{}}}", quoted(dataset.label_name()), classes.join(", ")).unwrap();
    let inputs: Vec<String> = dataset.features().iter().map(|f| quoted(&f.name)).collect();
    writeln!(out, "@inputs {}", inputs.join(", ")).unwrap();
    writeln!(out, "@outputs {}", quoted(dataset.label_name())).unwrap();
    writeln!(out, "@data").unwrap();
    for (i, label) in dataset.labels().iter().enumerate() {
        for f in dataset.features() {
            match &f.values {
                FeatureValues::Numeric(v) => out.push_str(&format_g17(v[i])),
                FeatureValues::Categorical { values, .. } => out.push_str(&values[i]),
                FeatureValues::Encoded { codes, categories } => {
                    let code = codes[i].round().clamp(0.0, (categories.len() - 1) as f64);
                    out.push_str(&categories[code as usize]);
                }
            }
            out.push(',');
        }
        out.push_str(label);
        out.push('\n');
    }
    out
}
