//! Parsing and serialization: words in two text formats, and tabular output
//! as CSV or JSON.
//!
//! Exact values never pass through floating point on the way out: integers
//! are rendered as plain decimals and non-integral rationals as `"p/q"`.

use std::io::Write;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{ExactInt, ExactRatio};
use crate::word::Word;

/// Text representation of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordFormat {
    /// One character per letter, A..Z. Only valid for alphabets of at most
    /// 26 letters.
    CompactLetters,
    /// Whitespace-separated positive integers; the token is the letter
    /// identity, not a position.
    IntegerTokens,
}

/// Guess the format of `text`: anything containing a digit is read as
/// integer tokens.
pub fn detect_format(text: &str) -> WordFormat {
    if text.chars().any(|c| c.is_ascii_digit()) {
        WordFormat::IntegerTokens
    } else {
        WordFormat::CompactLetters
    }
}

/// Parse a word. Letter ids are `0..` for `A..` in compact form and
/// `token - 1` for integer tokens, so parsing and rendering round-trip.
pub fn parse_word(text: &str, format: WordFormat) -> Result<Word> {
    match format {
        WordFormat::CompactLetters => {
            let trimmed = text.trim();
            if trimmed.is_empty() {
                return Err(Error::EmptyInput);
            }
            let mut letters = Vec::with_capacity(trimmed.len());
            for (pos, ch) in trimmed.chars().enumerate() {
                if !ch.is_ascii_uppercase() {
                    return Err(Error::InvalidCharacter { ch, pos: pos + 1 });
                }
                letters.push(ch as u32 - 'A' as u32);
            }
            Ok(Word::new(letters))
        }
        WordFormat::IntegerTokens => {
            let mut letters = Vec::new();
            for (pos, token) in text.split_whitespace().enumerate() {
                match token.parse::<u32>() {
                    Ok(v) if v >= 1 => letters.push(v - 1),
                    _ => {
                        return Err(Error::InvalidCharacter {
                            ch: token.chars().next().unwrap_or(' '),
                            pos: pos + 1,
                        });
                    }
                }
            }
            if letters.is_empty() {
                return Err(Error::EmptyInput);
            }
            Ok(Word::new(letters))
        }
    }
}

/// Render a word in the requested format. Compact rendering fails if any
/// letter id is 26 or larger.
pub fn render_word(w: &Word, format: WordFormat) -> Result<String> {
    match format {
        WordFormat::CompactLetters => {
            let mut out = String::with_capacity(w.len());
            for &l in w.letters() {
                if l >= 26 {
                    return Err(Error::MalformedWord(format!(
                        "letter id {l} cannot be rendered as A..Z"
                    )));
                }
                out.push((b'A' + l as u8) as char);
            }
            Ok(out)
        }
        WordFormat::IntegerTokens => {
            let tokens: Vec<String> = w.letters().iter().map(|l| (l + 1).to_string()).collect();
            Ok(tokens.join(" "))
        }
    }
}

/// A single table cell.
#[derive(Debug, Clone)]
pub enum Cell {
    Int(i64),
    Exact(ExactInt),
    Ratio(ExactRatio),
    Float(f64),
    Text(String),
    Bool(bool),
}

impl Cell {
    /// The text form used in CSV output.
    pub fn render(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Exact(v) => v.to_string(),
            Cell::Ratio(v) => {
                if v.is_integer() {
                    v.numer().to_string()
                } else {
                    format!("{}/{}", v.numer(), v.denom())
                }
            }
            Cell::Float(v) => v.to_string(),
            Cell::Text(v) => v.clone(),
            Cell::Bool(v) => v.to_string(),
        }
    }

    /// The value used in JSON output: numbers where they fit, decimal or
    /// `"p/q"` strings otherwise.
    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::Value;
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Exact(v) => match v.to_i64() {
                Some(small) => Value::from(small),
                None => Value::from(v.to_string()),
            },
            Cell::Ratio(v) => {
                if v.is_integer() {
                    match v.numer().to_i64() {
                        Some(small) => Value::from(small),
                        None => Value::from(v.numer().to_string()),
                    }
                } else {
                    Value::from(format!("{}/{}", v.numer(), v.denom()))
                }
            }
            Cell::Float(v) => Value::from(*v),
            Cell::Text(v) => Value::from(v.clone()),
            Cell::Bool(v) => Value::from(*v),
        }
    }
}

/// A homogeneous table: named columns, rows of cells.
#[derive(Debug, Clone)]
pub struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: Vec<S>) -> Self {
        Table {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        assert_eq!(
            row.len(),
            self.columns.len(),
            "row width does not match header"
        );
        self.rows.push(row);
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Write a table to `sink`. CSV output has a mandatory header row and LF
/// line endings; JSON output is an array of objects with keys in column
/// order.
pub fn emit_table(table: &Table, sink: &mut dyn Write, format: TableFormat) -> Result<()> {
    match format {
        TableFormat::Csv => {
            let header: Vec<String> = table.columns.iter().map(|c| csv_escape(c)).collect();
            writeln!(sink, "{}", header.join(","))?;
            for row in &table.rows {
                let fields: Vec<String> = row.iter().map(|c| csv_escape(&c.render())).collect();
                writeln!(sink, "{}", fields.join(","))?;
            }
        }
        TableFormat::Json => {
            let mut array = Vec::with_capacity(table.rows.len());
            for row in &table.rows {
                let mut obj = serde_json::Map::new();
                for (name, cell) in table.columns.iter().zip(row) {
                    obj.insert(name.clone(), cell.to_json());
                }
                array.push(serde_json::Value::Object(obj));
            }
            serde_json::to_writer(&mut *sink, &serde_json::Value::Array(array))
                .map_err(std::io::Error::other)?;
            writeln!(sink)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn parse_compact_example() {
        let w = parse_word("ABBCAC", WordFormat::CompactLetters).unwrap();
        assert_eq!(w.letters(), &[0, 1, 1, 2, 0, 2]);
    }

    #[test]
    fn parse_integer_tokens() {
        let w = parse_word("1 2 2 1", WordFormat::IntegerTokens).unwrap();
        assert_eq!(w.canonical().letters(), &[0, 1, 1, 0]);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            parse_word("AB-BA", WordFormat::CompactLetters),
            Err(Error::InvalidCharacter { ch: '-', pos: 3 })
        ));
        assert!(matches!(
            parse_word("", WordFormat::CompactLetters),
            Err(Error::EmptyInput)
        ));
        assert!(parse_word("1 0 2", WordFormat::IntegerTokens).is_err());
    }

    #[test]
    fn csv_matches_expected_bytes() {
        let mut t = Table::new(vec!["n", "j", "s"]);
        t.push_row(vec![Cell::Int(3), Cell::Int(2), Cell::Int(8)]);
        let mut out = Vec::new();
        emit_table(&t, &mut out, TableFormat::Csv).unwrap();
        assert_eq!(out, b"n,j,s\n3,2,8\n");
    }

    #[test]
    fn json_renders_rationals_as_strings() {
        let mut t = Table::new(vec!["n", "exk"]);
        t.push_row(vec![Cell::Int(1), Cell::Ratio(ratio(1, 2))]);
        let mut out = Vec::new();
        emit_table(&t, &mut out, TableFormat::Json).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap().trim(),
            r#"[{"n":1,"exk":"1/2"}]"#
        );
    }

    #[test]
    fn empty_table_is_header_only() {
        let t = Table::new(vec!["a", "b"]);
        let mut out = Vec::new();
        emit_table(&t, &mut out, TableFormat::Csv).unwrap();
        assert_eq!(out, b"a,b\n");
    }

    #[test]
    fn integral_ratio_renders_as_decimal() {
        assert_eq!(Cell::Ratio(ratio(14, 7)).render(), "2");
        assert_eq!(Cell::Ratio(ratio(7, 6)).render(), "7/6");
    }

    #[test]
    fn csv_quotes_awkward_fields() {
        let mut t = Table::new(vec!["a"]);
        t.push_row(vec![Cell::Text("x,y".into())]);
        t.push_row(vec![Cell::Text("say \"hi\"".into())]);
        let mut out = Vec::new();
        emit_table(&t, &mut out, TableFormat::Csv).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "a\n\"x,y\"\n\"say \"\"hi\"\"\"\n"
        );
    }
}
