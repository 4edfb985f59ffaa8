//! Strict partitions and the cells of their shifted diagrams.
//!
//! Rows are numbered `1..=d` from the top. Columns are signed: row `i` of a
//! shape with `d` parts starts at column `i - d`, so column `0` is the
//! right edge of the flipped staircase formed by the first `d` columns.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A box of a shifted diagram, in signed column coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: i32,
}

impl Cell {
    pub const fn new(row: usize, col: i32) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A strictly decreasing sequence of positive integers.
///
/// The empty partition is representable through [`StrictPartition::empty`]
/// so that insertion can start from, and reverse insertion can unwind to,
/// the empty tableau. [`StrictPartition::new`] rejects it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct StrictPartition {
    parts: Vec<usize>,
}

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition {
                parts,
                reason: "a strict partition needs at least one part".into(),
            });
        }
        Self::from_parts_allow_empty(parts)
    }

    /// Like [`StrictPartition::new`] but also accepts `[]`.
    pub fn from_parts_allow_empty(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be positive".into(),
            });
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be strictly decreasing".into(),
            });
        }
        Ok(StrictPartition { parts })
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts `d`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes `N`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `i` (1-based); zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Column of the leftmost box in row `i`.
    pub fn row_start(&self, i: usize) -> i32 {
        i as i32 - self.len() as i32
    }

    /// Column of the rightmost box in row `i`.
    pub fn row_end(&self, i: usize) -> i32 {
        self.row_start(i) + self.part(i) as i32 - 1
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.row <= self.len() && c.col >= self.row_start(c.row) && c.col <= self.row_end(c.row)
    }

    /// Number of boxes in column `col`.
    pub fn column_len(&self, col: i32) -> usize {
        (1..=self.len()).filter(|&i| self.contains(Cell::new(i, col))).count()
    }

    /// The extra box attached to row `i` of the extended shape.
    pub fn extra_cell(&self, i: usize) -> Cell {
        Cell::new(i, -((self.len() + 1 - i) as i32))
    }

    /// `D(λ)` in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.len())
            .flat_map(|i| (self.row_start(i)..=self.row_end(i)).map(move |c| Cell::new(i, c)))
            .collect()
    }

    /// `D(λ)` together with the `d` extra boxes `(i, -(d+1-i))`, in row-major
    /// order.
    pub fn extended_cells(&self) -> Vec<Cell> {
        (1..=self.len())
            .flat_map(|i| {
                let start = self.extra_cell(i).col;
                (start..=self.row_end(i)).map(move |c| Cell::new(i, c))
            })
            .collect()
    }

    /// True if every row of `self` is at most as long as the same row of
    /// `other` and both have the same number of rows.
    pub fn fits_in(&self, other: &StrictPartition) -> bool {
        self.len() == other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// All strict partitions of `n`, largest first part first.
    pub fn all_of_size(n: usize) -> Vec<StrictPartition> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
            if rest == 0 {
                out.push(StrictPartition { parts: prefix.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                prefix.push(p);
                go(rest - p, p - 1, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            go(n, n, &mut Vec::new(), &mut out);
        }
        out
    }

    /// All nonempty strict partitions of size at most `n`.
    pub fn all_up_to(n: usize) -> Vec<StrictPartition> {
        (1..=n).flat_map(StrictPartition::all_of_size).collect()
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    /// Parses `6,2,1`, `(6,2,1)`, `[6, 2, 1]` or `6 2 1`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in shape {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        StrictPartition::new(parts)
    }
}

impl<'de> Deserialize<'de> for StrictPartition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        StrictPartition::from_parts_allow_empty(parts).map_err(serde::de::Error::custom)
    }
}
