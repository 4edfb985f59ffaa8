//! Fillings of shifted diagrams.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Cell, StrictPartition};

/// A filling of a shifted diagram, stored as dense rows.
///
/// `rows[i - 1][k]` is the entry in row `i`, column `row_start(i) + k`.
/// The same type carries bijective fillings (standard and balanced tableaux)
/// and letter fillings (insertion tableaux).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTableau")]
pub struct ShiftedTableau {
    shape: StrictPartition,
    rows: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawTableau {
    shape: Option<Vec<usize>>,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<RawTableau> for ShiftedTableau {
    type Error = Error;

    fn try_from(raw: RawTableau) -> Result<Self> {
        let t = ShiftedTableau::from_rows(raw.rows)?;
        if let Some(shape) = raw.shape {
            if shape != t.shape.parts() {
                return Err(Error::InvalidTableau(format!(
                    "declared shape {shape:?} does not match row lengths {:?}",
                    t.shape.parts()
                )));
            }
        }
        Ok(t)
    }
}

impl ShiftedTableau {
    pub fn new(shape: StrictPartition, rows: Vec<Vec<usize>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        if lens != shape.parts() {
            return Err(Error::InvalidTableau(format!(
                "row lengths {lens:?} do not match shape {shape}"
            )));
        }
        Ok(ShiftedTableau { shape, rows })
    }

    /// Builds a tableau whose shape is read off the row lengths.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = StrictPartition::from_parts_allow_empty(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(e.to_string()))?;
        Ok(ShiftedTableau { shape, rows })
    }

    pub fn empty() -> Self {
        ShiftedTableau {
            shape: StrictPartition::empty(),
            rows: Vec::new(),
        }
    }

    /// Builds a tableau by evaluating `f` on every cell of `shape`.
    pub fn from_fn(shape: &StrictPartition, mut f: impl FnMut(Cell) -> usize) -> Self {
        let rows = (1..=shape.len())
            .map(|i| {
                (shape.row_start(i)..=shape.row_end(i))
                    .map(|c| f(Cell::new(i, c)))
                    .collect()
            })
            .collect();
        ShiftedTableau {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &StrictPartition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<usize>> {
        self.rows
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i - 1]
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    fn index(&self, c: Cell) -> Option<(usize, usize)> {
        if !self.shape.contains(c) {
            return None;
        }
        Some((c.row - 1, (c.col - self.shape.row_start(c.row)) as usize))
    }

    pub fn get(&self, c: Cell) -> Option<usize> {
        self.index(c).map(|(i, k)| self.rows[i][k])
    }

    /// Entry at `c`; panics if `c` is outside the shape.
    pub fn at(&self, c: Cell) -> usize {
        self.get(c)
            .unwrap_or_else(|| panic!("cell {c} outside shape {}", self.shape))
    }

    pub fn set(&mut self, c: Cell, value: usize) -> Result<()> {
        let (i, k) = self.index(c).ok_or(Error::CellOutOfShape(c))?;
        self.rows[i][k] = value;
        Ok(())
    }

    /// `(cell, entry)` pairs in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(i, row)| {
            let start = self.shape.row_start(i + 1);
            row.iter()
                .enumerate()
                .map(move |(k, &v)| (Cell::new(i + 1, start + k as i32), v))
        })
    }

    pub fn position_of(&self, value: usize) -> Option<Cell> {
        self.entries().find(|&(_, v)| v == value).map(|(c, _)| c)
    }

    /// True if the entries are exactly `1..=N`.
    pub fn is_bijective(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for (_, v) in self.entries() {
            if v == 0 || v > n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    pub fn require_bijective(&self) -> Result<()> {
        if self.is_bijective() {
            Ok(())
        } else {
            Err(Error::InvalidTableau(format!(
                "entries must be exactly 1..={}",
                self.size()
            )))
        }
    }

    /// The filling of the extended shape: agrees with `self` on the diagram,
    /// and the extra box of row `i` repeats the entry at `(i, 0)`.
    pub fn extended_filling(&self) -> BTreeMap<Cell, usize> {
        let mut map: BTreeMap<Cell, usize> = self.entries().collect();
        for i in 1..=self.shape.len() {
            map.insert(self.shape.extra_cell(i), self.at(Cell::new(i, 0)));
        }
        map
    }

    /// Plain-text form: one row per line, rows shifted right by placeholder
    /// dots so that columns line up.
    pub fn to_text(&self) -> String {
        let width = self.entries().map(|(_, v)| v.to_string().len()).max().unwrap_or(1);
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            let mut tokens: Vec<String> = vec![format!("{:>width$}", "."); i];
            tokens.extend(row.iter().map(|v| format!("{v:>width$}")));
            out.push_str(tokens.join(" ").trim_end());
            out.push('\n');
        }
        out
    }

    /// Parses the plain-text form. Dots are ignored, blank lines skipped.
    pub fn parse_text(s: &str) -> Result<Self> {
        let rows = s
            .lines()
            .map(|line| {
                line.split_whitespace()
                    .filter(|t| *t != ".")
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad tableau entry {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .filter(|r| !matches!(r, Ok(v) if v.is_empty()))
            .collect::<Result<Vec<_>>>()?;
        ShiftedTableau::from_rows(rows)
    }

    /// Parses either the JSON object form or the plain-text form.
    pub fn parse(s: &str) -> Result<Self> {
        let trimmed = s.trim_start();
        if trimmed.starts_with('{') {
            serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))
        } else if trimmed.starts_with('[') {
            let rows: Vec<Vec<usize>> = serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
            ShiftedTableau::from_rows(rows)
        } else {
            ShiftedTableau::parse_text(s)
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tableau serializes")
    }
}

impl fmt::Display for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Shorthand used throughout the tests: a tableau from literal rows.
pub fn tableau(rows: &[&[usize]]) -> ShiftedTableau {
    ShiftedTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).expect("valid tableau rows")
}
