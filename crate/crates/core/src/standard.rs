//! Standard shifted tableaux.

use crate::partition::{Cell, StrictPartition};
use crate::tableau::ShiftedTableau;

/// Rows and columns strictly increase.
pub fn is_standard(t: &ShiftedTableau) -> bool {
    let shape = t.shape();
    let rows_ok = t.rows().iter().all(|row| row.windows(2).all(|w| w[0] < w[1]));
    let cols_ok = t.entries().all(|(c, v)| match t.get(Cell::new(c.row + 1, c.col)) {
        Some(below) => v < below,
        None => true,
    });
    rows_ok && cols_ok && shape.len() == t.rows().len() && t.is_bijective()
}

/// Iterator over the standard tableaux of a shape.
///
/// Values `1, 2, …, N` are placed one at a time into an addable box, trying
/// rows top to bottom, so the output is ordered lexicographically by the
/// rows that hold `1, 2, …`.
pub struct SytIter {
    shape: StrictPartition,
    filled: Vec<usize>,
    rows: Vec<Vec<usize>>,
    stack: Vec<usize>,
    next_row: usize,
    emitted: bool,
    done: bool,
}

impl SytIter {
    fn addable(&self, r: usize) -> bool {
        let k = self.filled[r];
        k < self.shape.part(r + 1) && (r == 0 || self.filled[r - 1] >= k + 2)
    }
}

impl Iterator for SytIter {
    type Item = ShiftedTableau;

    fn next(&mut self) -> Option<ShiftedTableau> {
        let n = self.shape.size();
        let d = self.shape.len();
        loop {
            if self.done {
                return None;
            }
            let placed = self.stack.len();
            if placed == n && !self.emitted {
                self.emitted = true;
                let t =
                    ShiftedTableau::new(self.shape.clone(), self.rows.clone()).expect("filled rows match the shape");
                return Some(t);
            }
            if placed < n {
                if let Some(r) = (self.next_row..d).find(|&r| self.addable(r)) {
                    let k = self.filled[r];
                    self.rows[r][k] = placed + 1;
                    self.filled[r] += 1;
                    self.stack.push(r);
                    self.next_row = 0;
                    continue;
                }
            }
            match self.stack.pop() {
                None => self.done = true,
                Some(r) => {
                    self.filled[r] -= 1;
                    self.rows[r][self.filled[r]] = 0;
                    self.next_row = r + 1;
                    self.emitted = false;
                }
            }
        }
    }
}

/// Every standard tableau of `shape`, each exactly once.
pub fn enumerate_syt(shape: &StrictPartition) -> SytIter {
    SytIter {
        shape: shape.clone(),
        filled: vec![0; shape.len()],
        rows: shape.parts().iter().map(|&p| vec![0; p]).collect(),
        stack: Vec::new(),
        next_row: 0,
        emitted: false,
        done: shape.is_empty(),
    }
}
