//! Binary operation tables over a finite carrier and their text format.
//!
//! A table file holds optional `#` comment lines, a header line with the
//! whitespace-separated element symbols, and then one line per row where
//! row `i` lists `i·j` for every column `j` in header order.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::subset::SubsetMask;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("table input is empty")]
    Empty,
    #[error("line {line}: symbol `{symbol}` declared twice in the header")]
    DuplicateSymbol { line: usize, symbol: String },
    #[error("line {line}: unknown symbol `{symbol}`")]
    UnknownSymbol { line: usize, symbol: String },
    #[error("line {line}: row has {found} entries, expected {expected}")]
    RaggedRow {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: unexpected content after the last row")]
    Malformed { line: usize },
    #[error("table declares {expected} symbols but has {found} rows")]
    MissingRows { expected: usize, found: usize },
    #[error("cell ({row}, {col}) holds {value}, outside carrier of size {n}")]
    CellOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
    #[error("table must have {expected} cells, got {found}")]
    WrongCellCount { expected: usize, found: usize },
    #[error("symbol list has {found} entries, expected {expected}")]
    WrongSymbolCount { expected: usize, found: usize },
    #[error("empty subset")]
    EmptySubset,
}

/// An `n × n` operation table over the elements `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    n: usize,
    cells: Vec<usize>,
    symbols: Vec<String>,
}

/// The default display symbols `1..=n`.
pub fn default_symbols(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

impl CayleyTable {
    /// Builds a table from row-major cells and display symbols.
    pub fn new(symbols: Vec<String>, cells: Vec<usize>) -> Result<Self, TableError> {
        let n = symbols.len();
        if n == 0 {
            return Err(TableError::Empty);
        }
        if cells.len() != n * n {
            return Err(TableError::WrongCellCount {
                expected: n * n,
                found: cells.len(),
            });
        }
        let mut seen = HashMap::new();
        for s in &symbols {
            if seen.insert(s.as_str(), ()).is_some() {
                return Err(TableError::DuplicateSymbol {
                    line: 0,
                    symbol: s.clone(),
                });
            }
        }
        if let Some((i, &v)) = cells.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(TableError::CellOutOfRange {
                row: i / n,
                col: i % n,
                value: v,
                n,
            });
        }
        Ok(CayleyTable { n, cells, symbols })
    }

    /// Table of `f` on `0..n` with the default symbols.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self, TableError> {
        let cells = (0..n * n).map(|i| f(i / n, i % n)).collect();
        Self::new(default_symbols(n), cells)
    }

    /// Table from explicit rows with the default symbols.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, TableError> {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(TableError::RaggedRow {
                    line: i + 1,
                    expected: n,
                    found: r.len(),
                });
            }
        }
        Self::new(default_symbols(n), rows.concat())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.cells[x * self.n..(x + 1) * self.n]
    }

    pub fn column(&self, y: usize) -> Vec<usize> {
        (0..self.n).map(|x| self.get(x, y)).collect()
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, x: usize) -> &str {
        &self.symbols[x]
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == symbol)
    }

    /// Same table with new display symbols.
    pub fn with_symbols(&self, symbols: Vec<String>) -> Result<Self, TableError> {
        if symbols.len() != self.n {
            return Err(TableError::WrongSymbolCount {
                expected: self.n,
                found: symbols.len(),
            });
        }
        Self::new(symbols, self.cells.clone())
    }

    /// Parses a whitespace-separated symbol list such as `"1 2 7 8"`.
    pub fn parse_subset(&self, text: &str) -> Result<SubsetMask, TableError> {
        let mut s = SubsetMask::empty(self.n);
        for tok in text.split_whitespace() {
            let x = self
                .index_of(tok)
                .ok_or_else(|| TableError::UnknownSymbol {
                    line: 0,
                    symbol: tok.to_string(),
                })?;
            s.insert(x);
        }
        if s.is_empty() {
            return Err(TableError::EmptySubset);
        }
        Ok(s)
    }

    /// The table of `·` restricted to `h`, or `None` if `h` is empty or not
    /// closed under `·`. Elements are renumbered in ascending order and keep
    /// their symbols.
    pub fn induced(&self, h: &SubsetMask) -> Option<CayleyTable> {
        if h.is_empty() || h.universe() != self.n {
            return None;
        }
        let members = h.elements();
        let mut local = vec![usize::MAX; self.n];
        for (i, &x) in members.iter().enumerate() {
            local[x] = i;
        }
        let mut cells = Vec::with_capacity(members.len() * members.len());
        for &x in &members {
            for &y in &members {
                let z = self.get(x, y);
                if !h.contains(z) {
                    return None;
                }
                cells.push(local[z]);
            }
        }
        let symbols = members.iter().map(|&x| self.symbols[x].clone()).collect();
        CayleyTable::new(symbols, cells).ok()
    }
}

/// Parses the table file format.
pub fn parse_table(text: &str) -> Result<CayleyTable, TableError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(TableError::Empty)?;
    let symbols: Vec<String> = header.split_whitespace().map(str::to_string).collect();
    let mut index = HashMap::with_capacity(symbols.len());
    for (i, s) in symbols.iter().enumerate() {
        if index.insert(s.as_str(), i).is_some() {
            return Err(TableError::DuplicateSymbol {
                line: header_line,
                symbol: s.clone(),
            });
        }
    }
    let n = symbols.len();

    let mut cells = Vec::with_capacity(n * n);
    let mut rows = 0;
    for (line, content) in lines {
        if rows == n {
            return Err(TableError::Malformed { line });
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks.len() != n {
            return Err(TableError::RaggedRow {
                line,
                expected: n,
                found: toks.len(),
            });
        }
        for tok in toks {
            let v = index.get(tok).ok_or_else(|| TableError::UnknownSymbol {
                line,
                symbol: tok.to_string(),
            })?;
            cells.push(*v);
        }
        rows += 1;
    }
    if rows != n {
        return Err(TableError::MissingRows {
            expected: n,
            found: rows,
        });
    }
    CayleyTable::new(symbols, cells)
}

/// Writes a table in the file format, without comments.
pub fn emit_table(table: &CayleyTable) -> String {
    let mut out = String::new();
    out.push_str(&table.symbols.join(" "));
    out.push('\n');
    for x in 0..table.n {
        let row: Vec<&str> = table.row(x).iter().map(|&v| table.symbol(v)).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q6: &str = include_str!("../fixtures/q6.tbl");

    #[test]
    fn parses_order_six_fixture() {
        let t = parse_table(Q6).unwrap();
        assert_eq!(t.order(), 6);
        assert_eq!(t.symbols(), default_symbols(6).as_slice());
        // 2·3 = 5 (0-based: 1·2 = 4)
        assert_eq!(t.get(1, 2), 4);
    }

    #[test]
    fn singleton_table() {
        let t = parse_table("1\n1\n").unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(t.get(0, 0), 0);
    }

    #[test]
    fn ragged_row_reports_line() {
        let err = parse_table("# c\n1 2 3\n1 2 3\n2 3\n3 1 2\n").unwrap_err();
        assert_eq!(
            err,
            TableError::RaggedRow {
                line: 4,
                expected: 3,
                found: 2
            }
        );
    }

    #[test]
    fn unknown_and_duplicate_symbols() {
        assert_eq!(
            parse_table("a b\na b\nb c\n").unwrap_err(),
            TableError::UnknownSymbol {
                line: 3,
                symbol: "c".into()
            }
        );
        assert_eq!(
            parse_table("a a\n").unwrap_err(),
            TableError::DuplicateSymbol {
                line: 1,
                symbol: "a".into()
            }
        );
    }

    #[test]
    fn row_count_errors() {
        assert_eq!(
            parse_table("a b\na b\n").unwrap_err(),
            TableError::MissingRows {
                expected: 2,
                found: 1
            }
        );
        assert_eq!(
            parse_table("a\na\na\n").unwrap_err(),
            TableError::Malformed { line: 3 }
        );
        assert_eq!(
            parse_table("# only comments\n").unwrap_err(),
            TableError::Empty
        );
    }

    #[test]
    fn emit_round_trip() {
        let canonical = "x y z\nx z y\nz y x\ny x z\n";
        assert_eq!(emit_table(&parse_table(canonical).unwrap()), canonical);
        let t = parse_table(Q6).unwrap();
        assert_eq!(parse_table(&emit_table(&t)).unwrap(), t);
    }

    #[test]
    fn induced_subtable() {
        let t = parse_table(Q6).unwrap();
        let h = t.parse_subset("1 3 4").unwrap();
        let sub = t.induced(&h).unwrap();
        assert_eq!(emit_table(&sub), "1 3 4\n1 3 4\n3 4 1\n4 1 3\n");
        assert!(t.induced(&t.parse_subset("1 2 3").unwrap()).is_none());
        assert_eq!(t.parse_subset("  ").unwrap_err(), TableError::EmptySubset);
    }
}
