//! Balanced shifted tableaux: the defining check, a brute-force enumerator,
//! and the root-theoretic reformulation on trapezoids.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::hook::{extended_hook, rank};
use crate::partition::{Cell, StrictPartition};
use crate::tableau::ShiftedTableau;
use crate::trapezoid::{root_label, trapezoid_params};
use crate::typeb::Root;

/// Default largest size accepted by [`enumerate_bs_bruteforce`].
pub const DEFAULT_BS_BRUTEFORCE_CAP: usize = 9;

/// The extended hook of `c` with each extra box replaced by the box in
/// column 0 whose entry it repeats.
fn extended_hook_sources(shape: &StrictPartition, c: Cell) -> Vec<Cell> {
    let d = shape.len();
    extended_hook(shape, c)
        .expect("cell of its own shape")
        .into_iter()
        .map(|x| if shape.contains(x) { x } else { Cell::new(x.row, 0) })
        .inspect(|x| debug_assert!(shape.contains(*x) && x.row <= d))
        .collect()
}

/// Every entry is the `rk`-th largest of its extended hook, where the
/// position of a value is one more than the number of strictly larger
/// values (counted with multiplicity).
pub fn is_balanced(t: &ShiftedTableau) -> bool {
    let shape = t.shape();
    shape.cells().into_iter().all(|c| {
        let v = t.at(c);
        let larger = extended_hook_sources(shape, c)
            .into_iter()
            .filter(|&x| t.at(x) > v)
            .count();
        larger + 1 == rank(shape, c).expect("cell of its own shape")
    })
}

/// The straight-shape analogue: every entry is the `(arm + 1)`-th largest
/// of its extended hook. Kept only to contrast with [`is_balanced`]; it
/// already admits fewer tableaux than `f^λ` for `λ = (4,2)`.
pub fn is_balanced_naive(t: &ShiftedTableau) -> bool {
    let shape = t.shape();
    shape.cells().into_iter().all(|c| {
        let v = t.at(c);
        let arm = (shape.row_end(c.row) - c.col) as usize;
        let larger = extended_hook_sources(shape, c)
            .into_iter()
            .filter(|&x| t.at(x) > v)
            .count();
        larger == arm
    })
}

/// Every balanced tableau of `shape`, found by placing `N, N-1, …, 1` in
/// turn. A value may go into a box only if exactly `rk - 1` boxes of its
/// extended hook are already filled; branches where some empty box already
/// sees too many filled boxes are cut.
///
/// Refuses shapes with more than `cap` boxes.
pub fn enumerate_bs_bruteforce(shape: &StrictPartition, cap: usize) -> Result<Vec<ShiftedTableau>> {
    let n = shape.size();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "balanced brute-force shape size",
            size: n,
            cap,
        });
    }
    let cells = shape.cells();
    let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let need: Vec<usize> = cells.iter().map(|&c| rank(shape, c).expect("own cell") - 1).collect();
    // watchers[s] lists, with multiplicity, the boxes whose extended hook sees box s.
    let mut watchers: Vec<Vec<usize>> = vec![Vec::new(); cells.len()];
    for (k, &c) in cells.iter().enumerate() {
        for s in extended_hook_sources(shape, c) {
            watchers[index[&s]].push(k);
        }
    }

    struct Search<'a> {
        need: &'a [usize],
        watchers: &'a [Vec<usize>],
        seen: Vec<usize>,
        value: Vec<usize>,
        out: Vec<Vec<usize>>,
    }

    impl Search<'_> {
        fn go(&mut self, v: usize) {
            if v == 0 {
                self.out.push(self.value.clone());
                return;
            }
            for k in 0..self.value.len() {
                if self.value[k] != 0 || self.seen[k] != self.need[k] {
                    continue;
                }
                self.value[k] = v;
                for &w in &self.watchers[k] {
                    self.seen[w] += 1;
                }
                let viable = self.watchers[k]
                    .iter()
                    .all(|&w| self.value[w] != 0 || self.seen[w] <= self.need[w]);
                if viable {
                    self.go(v - 1);
                }
                for &w in &self.watchers[k] {
                    self.seen[w] -= 1;
                }
                self.value[k] = 0;
            }
        }
    }

    let mut search = Search {
        need: &need,
        watchers: &watchers,
        seen: vec![0; cells.len()],
        value: vec![0; cells.len()],
        out: Vec::new(),
    };
    search.go(n);
    let mut out: Vec<ShiftedTableau> = search
        .out
        .into_iter()
        .map(|values| {
            let mut it = values.into_iter();
            ShiftedTableau::from_fn(shape, |_| it.next().expect("one value per cell"))
        })
        .collect();
    out.sort();
    Ok(out)
}

fn between(x: usize, a: usize, b: usize) -> bool {
    (a < x && x < b) || (b < x && x < a)
}

/// The root-by-root reformulation of balancedness for a tableau of
/// trapezoid shape `Z(d,r)`, read through the labeling of its boxes by the
/// inversions of `w^(d,r)`.
pub fn check_strongly_balanced(t: &ShiftedTableau) -> Result<bool> {
    let (d, r) = trapezoid_params(t.shape()).ok_or_else(|| Error::NotTrapezoid(t.shape().parts().to_vec()))?;
    let mut value: HashMap<Root, usize> = HashMap::new();
    for (c, v) in t.entries() {
        value.insert(root_label(d, r, c)?, v);
    }
    // `e_x - e_y` in signed-index form; `2e_k` reads the entry of `e_k`.
    let at = |x: i32, y: i32| -> usize {
        let root = Root::from_difference(x, y).expect("positive root");
        let root = match root {
            Root::Double(k) => Root::Short(k),
            other => other,
        };
        value[&root]
    };
    let (di, ri) = (d as i32, r as i32);
    let n = di + ri;

    for i in 1..=di {
        // (1) e_i - e_j
        for j in 1..i {
            let v = at(i, j);
            if !(j + 1..i).all(|k| between(v, at(i, k), at(k, j))) {
                return Ok(false);
            }
        }
        // (2) e_i + e_p
        for p in di + 1..=n {
            let v = at(p, -i);
            if !(p + 1..=n).all(|q| v < at(q, -i)) || !(1..i).all(|k| between(v, at(i, k), at(p, -k))) {
                return Ok(false);
            }
        }
        // (3) e_i
        let v = at(i, 0);
        if !(di + 1..=n).all(|q| v < at(q, -i)) || !(1..i).all(|k| between(v, at(i, k), at(k, 0))) {
            return Ok(false);
        }
        // (4) e_i + e_j
        for j in 1..i {
            let v = at(i, -j);
            if !(di + 1..=n).all(|q| v < at(q, -i) && v < at(q, -j))
                || !(-j + 1..i).all(|k| between(v, at(i, k), at(j, -k)))
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
