//! Deterministic tabular output.
//!
//! Every artifact the crate emits is a [`Table`]: a named header plus rows of
//! typed cells. The same table serializes to CSV (the human interface) and to
//! JSON (the machine interface) with identical column names and identical
//! numeric content, so downstream tooling can switch formats without
//! re-mapping anything. Floats are rendered once, through [`fmt_sig`] at 12
//! significant digits, and the JSON numbers are re-parsed from that rendering
//! so the two formats can never drift apart.

use serde_json::{Map, Value};

/// Format `x` with `digits` significant digits, printf `%g` style: positional
/// notation when the decimal exponent lies in `[-4, digits)`, scientific
/// otherwise, trailing zeros trimmed. Output is locale-independent (`.`
/// decimal point) and deterministic for a given `(x, digits)`.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 {
        return "0".to_string();
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci
        .split_once('e')
        .expect("float formatted with {:e} always has an exponent");
    let exp: i32 = exp.parse().expect("exponent is a small integer");
    if exp < -4 || exp >= digits as i32 {
        format!("{}e{:+03}", trim_zeros(mantissa), exp)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}"))
    }
}

fn trim_zeros(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// One typed cell of an output table.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(i64),
    Num(f64),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Text(s) => {
                debug_assert!(
                    !s.contains(',') && !s.contains('\n'),
                    "text cells must not need CSV quoting"
                );
                s.clone()
            }
            Cell::Int(i) => i.to_string(),
            Cell::Num(x) => fmt_sig(*x, 12),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Int(i) => Value::from(*i),
            // Round-trip through the CSV rendering so both formats carry the
            // same 12-digit value. Non-finite floats become JSON null.
            Cell::Num(x) => {
                let printed = fmt_sig(*x, 12);
                match printed.parse::<f64>() {
                    Ok(v) => Value::from(v),
                    Err(_) => Value::Null,
                }
            }
        }
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<i64> for Cell {
    fn from(i: i64) -> Self {
        Cell::Int(i)
    }
}

impl From<u32> for Cell {
    fn from(i: u32) -> Self {
        Cell::Int(i64::from(i))
    }
}

impl From<i32> for Cell {
    fn from(i: i32) -> Self {
        Cell::Int(i64::from(i))
    }
}

/// A named table with a fixed column set; the unit all commands emit.
#[derive(Debug, Clone)]
pub struct Table {
    pub name: String,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: impl Into<String>, columns: &[&'static str]) -> Self {
        Table {
            name: name.into(),
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    /// Append a row; its arity must match the header.
    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(
            row.len(),
            self.columns.len(),
            "row arity {} does not match header arity {} in table {}",
            row.len(),
            self.columns.len(),
            self.name
        );
        self.rows.push(row);
    }

    /// Header line plus one line per row, `\n` separators, trailing newline.
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// `{"name", "columns", "rows"}` where each row is an object keyed by
    /// column name, mirroring the CSV one-to-one.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (col, cell) in self.columns.iter().zip(row) {
                    obj.insert((*col).to_string(), cell.json());
                }
                Value::Object(obj)
            })
            .collect();
        let mut table = Map::new();
        table.insert("name".to_string(), Value::String(self.name.clone()));
        table.insert(
            "columns".to_string(),
            Value::from(
                self.columns
                    .iter()
                    .map(|c| Value::String((*c).to_string()))
                    .collect::<Vec<_>>(),
            ),
        );
        table.insert("rows".to_string(), Value::from(rows));
        Value::Object(table)
    }
}
