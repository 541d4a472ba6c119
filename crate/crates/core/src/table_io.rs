//! Reading and writing Cayley tables as CSV or JSON, plus the bundled
//! example tables.
//!
//! CSV comes in two shapes. A plain table is `N` lines of `N` comma-separated
//! element indices. A labeled table starts with a header whose first cell is
//! a corner marker (anything non-numeric, e.g. `*`) followed by the element
//! labels; each following line is a row label and then the row's entries.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gyro::GyroGroup;

/// Environment variable that overrides the bundled data directory.
pub const DATA_DIR_ENV: &str = "GYROGRAPH_DATA_DIR";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableFile {
    pub order: usize,
    pub table: Vec<Vec<serde_json::Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity: Option<serde_json::Value>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

impl TableFormat {
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => TableFormat::Json,
            _ => TableFormat::Csv,
        }
    }
}

pub fn read_table(path: &Path) -> Result<GyroGroup> {
    let text = std::fs::read_to_string(path)?;
    parse_table(&text, TableFormat::from_path(path))
}

pub fn parse_table(text: &str, format: TableFormat) -> Result<GyroGroup> {
    match format {
        TableFormat::Csv => parse_csv(text),
        TableFormat::Json => parse_json(text),
    }
}

pub fn parse_csv(text: &str) -> Result<GyroGroup> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut records = Vec::new();
    for record in reader.records() {
        let record = record?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        records.push(record.iter().map(str::to_string).collect::<Vec<_>>());
    }
    let Some(first) = records.first() else {
        return Err(Error::EmptyTable);
    };
    if first.iter().all(|cell| cell.parse::<i64>().is_ok()) {
        let rows = records
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| {
                        cell.parse::<i64>()
                            .map_err(|_| Error::Parse(format!("not an integer: {cell:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        return GyroGroup::from_rows(&rows, None);
    }

    let labels: Vec<String> = first[1..].to_vec();
    let mut rows = Vec::with_capacity(labels.len());
    for (r, record) in records[1..].iter().enumerate() {
        let Some(label) = labels.get(r) else {
            return Err(Error::NotSquare {
                row: r,
                len: records.len() - 1,
                expected: labels.len(),
            });
        };
        if record.first() != Some(label) {
            return Err(Error::Parse(format!(
                "row {r} is labeled {:?}, expected {label:?}",
                record.first()
            )));
        }
        rows.push(record[1..].to_vec());
    }
    GyroGroup::from_labeled(labels, &rows, None)
}

pub fn parse_json(text: &str) -> Result<GyroGroup> {
    let file: TableFile = serde_json::from_str(text)?;
    if file.table.len() != file.order {
        return Err(Error::NotSquare {
            row: file.table.len().min(file.order),
            len: file.table.len(),
            expected: file.order,
        });
    }
    match &file.labels {
        None => {
            let rows = file
                .table
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|v| {
                            v.as_i64()
                                .ok_or_else(|| Error::Parse(format!("not an integer: {v}")))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            let hint = match &file.identity {
                None => None,
                Some(v) => Some(
                    v.as_u64()
                        .ok_or_else(|| Error::Parse(format!("bad identity {v}")))?
                        as usize,
                ),
            };
            GyroGroup::from_rows(&rows, hint)
        }
        Some(labels) => {
            let rows: Vec<Vec<String>> = file
                .table
                .iter()
                .map(|row| row.iter().map(|v| json_label(v, labels)).collect())
                .collect::<Result<_>>()?;
            let hint = file
                .identity
                .as_ref()
                .map(|v| json_label(v, labels))
                .transpose()?;
            GyroGroup::from_labeled(labels.clone(), &rows, hint.as_deref())
        }
    }
}

/// With labels present, strings name elements and integers index `labels`.
fn json_label(v: &serde_json::Value, labels: &[String]) -> Result<String> {
    match v {
        serde_json::Value::String(s) => Ok(s.clone()),
        other => other
            .as_u64()
            .and_then(|i| labels.get(i as usize))
            .cloned()
            .ok_or_else(|| Error::Parse(format!("bad table entry {other}"))),
    }
}

/// Canonical JSON form: integer entries, labels only when they differ from
/// the indices.
pub fn to_table_file(g: &GyroGroup) -> TableFile {
    let plain = g
        .labels()
        .iter()
        .enumerate()
        .all(|(i, l)| *l == i.to_string());
    TableFile {
        order: g.order(),
        table: g
            .rows()
            .into_iter()
            .map(|row| row.into_iter().map(serde_json::Value::from).collect())
            .collect(),
        labels: (!plain).then(|| g.labels().to_vec()),
        identity: Some(serde_json::Value::from(g.identity())),
    }
}

pub fn to_json(g: &GyroGroup) -> String {
    let file = to_table_file(g);
    let mut out = String::new();
    out.push_str(&format!(
        "{{\n  \"order\": {},\n  \"identity\": {},\n",
        file.order,
        g.identity()
    ));
    if let Some(labels) = &file.labels {
        out.push_str(&format!(
            "  \"labels\": {},\n",
            serde_json::to_string(labels).unwrap()
        ));
    }
    out.push_str("  \"table\": [\n");
    let rows: Vec<String> = g
        .rows()
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            format!("    [{}]", cells.join(", "))
        })
        .collect();
    out.push_str(&rows.join(",\n"));
    out.push_str("\n  ]\n}\n");
    out
}

pub fn to_csv(g: &GyroGroup) -> String {
    g.rows()
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            cells.join(",") + "\n"
        })
        .collect()
}

/// The example tables shipped with the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bundled {
    /// K(1)
    K1,
    /// N(1)
    N1,
    /// G₈
    G8,
    /// M(1)
    M1,
    /// G(3)
    G3,
}

impl Bundled {
    pub const ALL: [Bundled; 5] = [
        Bundled::K1,
        Bundled::N1,
        Bundled::G8,
        Bundled::M1,
        Bundled::G3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Bundled::K1 => "k1",
            Bundled::N1 => "n1",
            Bundled::G8 => "g8",
            Bundled::M1 => "m1",
            Bundled::G3 => "g3",
        }
    }

    pub fn display_name(self) -> &'static str {
        match self {
            Bundled::K1 => "K(1)",
            Bundled::N1 => "N(1)",
            Bundled::G8 => "G8",
            Bundled::M1 => "M(1)",
            Bundled::G3 => "G(3)",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(name))
    }

    pub fn csv(self) -> &'static str {
        match self {
            Bundled::K1 => include_str!("../data/k1.csv"),
            Bundled::N1 => include_str!("../data/n1.csv"),
            Bundled::G8 => include_str!("../data/g8.csv"),
            Bundled::M1 => include_str!("../data/m1.csv"),
            Bundled::G3 => include_str!("../data/g3.csv"),
        }
    }

    pub fn json(self) -> &'static str {
        match self {
            Bundled::K1 => include_str!("../data/k1.json"),
            Bundled::N1 => include_str!("../data/n1.json"),
            Bundled::G8 => include_str!("../data/g8.json"),
            Bundled::M1 => include_str!("../data/m1.json"),
            Bundled::G3 => include_str!("../data/g3.json"),
        }
    }

    /// Gyration symbol pattern printed next to the Cayley table (`I` is the
    /// identity). Absent for G(3), which has no printed gyration table.
    pub fn gyration_pattern(self) -> Option<[&'static str; 8]> {
        match self {
            Bundled::K1 => Some([
                "IIIIIIII", "IIIIIIII", "IIIIAAAA", "IIIIAAAA", "IIAAIIAA", "IIAAIIAA", "IIAAAAII",
                "IIAAAAII",
            ]),
            Bundled::N1 => Some([
                "IIIIIIII", "IIIIIIII", "IIIIDDDD", "IIIIDDDD", "IIDDIIDD", "IIDDIIDD", "IIDDDDII",
                "IIDDDDII",
            ]),
            Bundled::G8 => Some([
                "IIIIIIII", "IIIIAAAA", "IIIIAAAA", "IIIIIIII", "IAAIIAIA", "IAAIAIAI", "IAAIIAIA",
                "IAAIAIAI",
            ]),
            Bundled::M1 => Some([
                "IIIIIIII", "IIIIIIII", "IIIICCCC", "IIIICCCC", "IICCIICC", "IICCIICC", "IICCCCII",
                "IICCCCII",
            ]),
            Bundled::G3 => None,
        }
    }

    /// Loads the table, preferring `$GYROGRAPH_DATA_DIR/<name>.json` (then
    /// `.csv`) when the variable is set.
    pub fn load(self) -> Result<GyroGroup> {
        if let Some(dir) = std::env::var_os(DATA_DIR_ENV) {
            let dir = PathBuf::from(dir);
            for ext in ["json", "csv"] {
                let path = dir.join(format!("{}.{ext}", self.name()));
                if path.is_file() {
                    return read_table(&path);
                }
            }
        }
        parse_json(self.json())
    }
}
