//! Shifted hooks, extended hooks and the rank function.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::partition::{Cell, StrictPartition};

fn require_cell(shape: &StrictPartition, c: Cell) -> Result<()> {
    if shape.contains(c) {
        Ok(())
    } else {
        Err(Error::CellOutOfShape(c))
    }
}

/// The hook of `c`: its arm, its leg, `c` itself, and for a box in column
/// `-j < 0` the whole of row `d - j + 1`.
pub fn hook(shape: &StrictPartition, c: Cell) -> Result<Vec<Cell>> {
    require_cell(shape, c)?;
    let mut cells = vec![c];
    cells.extend((c.col + 1..=shape.row_end(c.row)).map(|col| Cell::new(c.row, col)));
    cells.extend(
        (c.row + 1..=shape.len())
            .map(|i| Cell::new(i, c.col))
            .take_while(|&x| shape.contains(x)),
    );
    if c.col < 0 {
        let mirror_row = (shape.len() as i32 + c.col + 1) as usize;
        cells.extend((shape.row_start(mirror_row)..=shape.row_end(mirror_row)).map(|col| Cell::new(mirror_row, col)));
    }
    Ok(cells)
}

/// The hook plus, for a negative column `-j`, the extra box `(d+1-j, -j)`.
pub fn extended_hook(shape: &StrictPartition, c: Cell) -> Result<Vec<Cell>> {
    let mut cells = hook(shape, c)?;
    if c.col < 0 {
        let j = (-c.col) as usize;
        cells.push(Cell::new(shape.len() + 1 - j, c.col));
    }
    Ok(cells)
}

pub fn hook_length(shape: &StrictPartition, c: Cell) -> Result<usize> {
    hook(shape, c).map(|h| h.len())
}

pub fn extended_hook_length(shape: &StrictPartition, c: Cell) -> Result<usize> {
    extended_hook(shape, c).map(|h| h.len())
}

/// The position, counted from the largest, that a balanced entry at `c`
/// must take within its extended hook.
pub fn rank(shape: &StrictPartition, c: Cell) -> Result<usize> {
    require_cell(shape, c)?;
    let d = shape.len() as i64;
    let i = c.row as i64;
    let j = c.col as i64;
    let li = shape.part(c.row) as i64;
    let r = if j >= 0 {
        li - d + i - j
    } else {
        let mirror = shape.part((d + 1 + j) as usize) as i64;
        li - d + i + mirror + j + 1
    };
    Ok(r as usize)
}

/// The rank obtained by counting boxes of the hook rather than by formula:
/// the row-`i` part of the hook for `j >= 0`, otherwise two more than the
/// number of hook boxes in positive columns.
pub fn rank_by_count(shape: &StrictPartition, c: Cell) -> Result<usize> {
    let h = hook(shape, c)?;
    Ok(if c.col >= 0 {
        h.iter().filter(|x| x.row == c.row).count()
    } else {
        2 + h.iter().filter(|x| x.col > 0).count()
    })
}

/// Number of standard tableaux of shifted shape `shape`, `N! / ∏ h(x)`.
///
/// Panics if the division leaves a remainder, which can only mean the
/// hooks were computed wrongly.
pub fn hook_length_formula_count(shape: &StrictPartition) -> BigUint {
    let n = shape.size();
    let numerator = (1..=n as u64).fold(BigUint::from(1u32), |acc, k| acc * k);
    let denominator = shape
        .cells()
        .into_iter()
        .map(|c| hook_length(shape, c).expect("cell of its own shape") as u64)
        .fold(BigUint::from(1u32), |acc, h| acc * h);
    let quotient = &numerator / &denominator;
    assert!(
        &quotient * &denominator == numerator,
        "hook-length division for {shape} is not exact"
    );
    quotient
}
