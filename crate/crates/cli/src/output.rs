//! Output documents. The JSON forms are the documented schema; every
//! document deserializes back to itself.

use clap::ValueEnum;
use heckechar::{BaseChar, LaurentHalf};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

/// One character value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharDoc {
    pub family: String,
    /// The subgroup (induced characters) or partition (irreducible ones).
    pub character: String,
    pub kind: CharKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<BaseChar>,
    pub element: String,
    pub route: String,
    pub value: LaurentHalf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CharKind {
    Induced,
    Irreducible,
}

/// A table in long form: one entry per (row, column) pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub family: String,
    pub kind: CharKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<BaseChar>,
    pub row_header: String,
    pub column_header: String,
    pub entries: Vec<TableEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub row: String,
    pub column: String,
    pub value: LaurentHalf,
}

/// `s_mu * pbar_r` in the Schur basis, largest shapes first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpandDoc {
    pub mu: String,
    pub r: usize,
    pub terms: Vec<ExpandTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpandTerm {
    pub shape: String,
    pub coeff: LaurentHalf,
}

pub fn json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

impl TableDoc {
    pub fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([&self.row_header, &self.column_header, "value"])
            .expect("in-memory write");
        for e in &self.entries {
            w.write_record([&e.row, &e.column, &e.value.to_string()])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn pretty(&self) -> String {
        let mut out = String::new();
        let mut last: Option<&str> = None;
        for e in &self.entries {
            if last != Some(e.row.as_str()) {
                out.push_str(&format!("{} = {}\n", self.row_header, e.row));
                last = Some(&e.row);
            }
            out.push_str(&format!(
                "  {} = {}: {}\n",
                self.column_header, e.column, e.value
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_partitions() {
        let doc = TableDoc {
            family: "A(2)".into(),
            kind: CharKind::Irreducible,
            base: None,
            row_header: "lambda".into(),
            column_header: "mu".into(),
            entries: vec![TableEntry {
                row: "1,1".into(),
                column: "2".into(),
                value: "-1".parse().unwrap(),
            }],
        };
        assert_eq!(doc.csv(), "lambda,mu,value\n\"1,1\",2,-1\n");
        assert_eq!(doc.pretty(), "lambda = 1,1\n  mu = 2: -1\n");
        let back: TableDoc = serde_json::from_str(&json(&doc)).unwrap();
        assert_eq!(back, doc);
    }
}
