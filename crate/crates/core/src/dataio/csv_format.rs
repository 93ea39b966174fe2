use super::dataset::{Dataset, Feature, FeatureValues};
use super::number::format_g17;
use crate::error::{Error, Result};

/// Which CSV column holds the class label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelColumn {
    Name(String),
    Index(usize),
    Last,
}

/// Parses a rectangular CSV document with a header row. Columns whose every
/// value parses as a finite number become numeric features; all others are
/// categorical.
pub fn parse_csv(text: &str, label_column: LabelColumn) -> Result<Dataset> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let header: Vec<String> = reader.headers()?.iter().map(str::to_string).collect();
    if header.len() < 2 {
        return Err(Error::parse(1, "at least one feature column and a label column are required"));
    }
    let label_idx = match &label_column {
        LabelColumn::Name(name) => header
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::parse(1, format!("label column '{name}' not found")))?,
        LabelColumn::Index(i) if *i < header.len() => *i,
        LabelColumn::Index(i) => {
            return Err(Error::parse(1, format!("label column index {i} out of range")))
        }
        LabelColumn::Last => header.len() - 1,
    };

    let mut columns: Vec<Vec<String>> = vec![Vec::new(); header.len()];
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map(|p| p.line() as usize).unwrap_or(0);
            match e.kind() {
                csv::ErrorKind::UnequalLengths { expected_len, len, .. } => Error::parse(
                    line,
                    format!("expected {expected_len} values, found {len}"),
                ),
                _ => Error::parse(line, e.to_string()),
            }
        })?;
        let line = record.position().map(|p| p.line() as usize).unwrap_or(0);
        for (j, cell) in record.iter().enumerate() {
            if cell.is_empty() || cell == "?" {
                return Err(Error::parse(line, format!("missing value in column '{}'", header[j])));
            }
            columns[j].push(cell.to_string());
        }
    }
    if columns[0].is_empty() {
        return Err(Error::parse(1, "no data rows"));
    }

    let labels = std::mem::take(&mut columns[label_idx]);
    let features = header
        .iter()
        .zip(columns)
        .enumerate()
        .filter(|(j, _)| *j != label_idx)
        .map(|(_, (name, cells))| {
            let numeric: Option<Vec<f64>> = cells
                .iter()
                .map(|c| c.parse::<f64>().ok().filter(|v| v.is_finite()))
                .collect();
            let values = match numeric {
                Some(v) => FeatureValues::Numeric(v),
                None => {
                    let mut declared: Vec<String> = Vec::new();
                    for c in &cells {
                        if !declared.contains(c) {
                            declared.push(c.clone());
                        }
                    }
                    FeatureValues::Categorical {
                        values: cells,
                        declared,
                    }
                }
            };
            Feature {
                name: name.clone(),
                values,
            }
        })
        .collect();
    Dataset::new("", features, header[label_idx].clone(), labels)
}

/// Writes the dataset as CSV with the label in the last column. Numbers use
/// 17 significant digits so that a re-parse reproduces them exactly.
pub fn write_csv(dataset: &Dataset) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = dataset.feature_names();
    header.push(dataset.label_name().to_string());
    writer.write_record(&header)?;
    for (i, label) in dataset.labels().iter().enumerate() {
        let mut row: Vec<String> = dataset
            .features()
            .iter()
            .map(|f| match &f.values {
                FeatureValues::Numeric(v) => format_g17(v[i]),
                FeatureValues::Encoded { codes, .. } => format_g17(codes[i]),
                FeatureValues::Categorical { values, .. } => values[i].clone(),
            })
            .collect();
        row.push(label.clone());
        writer.write_record(&row)?;
    }
    let bytes = writer.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
