//! Trapezoids `Z(d,r)`, their root labeling, and the data tying a shape
//! `λ` to an ambient trapezoid.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Cell, StrictPartition};
use crate::tableau::ShiftedTableau;
use crate::typeb::{Root, SignedPermutation, Word};

/// `Z(d,r) = (r+2d-1, r+2d-3, …, r+1)`.
pub fn trapezoid(d: usize, r: usize) -> Result<StrictPartition> {
    if d == 0 {
        return Err(Error::InvalidPartition {
            parts: vec![],
            reason: "a trapezoid needs d >= 1".into(),
        });
    }
    StrictPartition::new((1..=d).map(|i| r + 2 * (d - i) + 1).collect())
}

/// The `(d, r)` with `Z(d,r)` a trapezoid, if `shape` is one.
pub fn trapezoid_params(shape: &StrictPartition) -> Option<(usize, usize)> {
    let d = shape.len();
    let last = *shape.parts().last()?;
    let r = last - 1;
    (trapezoid(d, r).ok()?.parts() == shape.parts()).then_some((d, r))
}

/// The least `r` with `λ ⊆ Z(d,r)`, where `d` is the number of parts.
pub fn min_trapezoid(shape: &StrictPartition) -> (usize, usize) {
    let d = shape.len();
    let r = (1..=d)
        .map(|i| shape.part(i) as i64 - 2 * (d - i) as i64 - 1)
        .max()
        .unwrap_or(0)
        .max(0);
    (d, r as usize)
}

fn label(d: usize, r: usize, c: Cell) -> Root {
    let top = (d + 1 - c.row) as i32;
    let (d, r) = (d as i32, r as i32);
    let root = if c.col <= 0 {
        Root::from_difference(top, c.col)
    } else if c.col <= r {
        Root::from_difference(c.col + d, -top)
    } else {
        Root::from_difference(top, c.col - r)
    };
    root.expect("cells of a trapezoid carry positive labels")
}

/// The label `f(c)` of a box of `Z(d,r)`; these are exactly the roots of
/// `Inv(w^(d,r))`.
pub fn root_label(d: usize, r: usize, c: Cell) -> Result<Root> {
    if !trapezoid(d, r)?.contains(c) {
        return Err(Error::CellOutOfShape(c));
    }
    Ok(label(d, r, c))
}

/// `f̃`: extends [`root_label`] by `2e_{d+1-i}` on the extra box of row `i`.
pub fn extended_root_label(d: usize, r: usize, c: Cell) -> Result<Root> {
    let z = trapezoid(d, r)?;
    if z.contains(c) || (c.row >= 1 && c.row <= d && z.extra_cell(c.row) == c) {
        Ok(label(d, r, c))
    } else {
        Err(Error::CellOutOfShape(c))
    }
}

/// `w^(d,r)`: `i ↦ d+i` for `i <= r`, `i ↦ -(i-r)` for `i > r`.
pub fn w_dr(d: usize, r: usize) -> SignedPermutation {
    let window = (1..=(d + r) as i32)
        .map(|i| if i <= r as i32 { d as i32 + i } else { -(i - r as i32) })
        .collect();
    SignedPermutation::new(window).expect("w^(d,r) is a signed permutation")
}

/// The insertion tableau shared by all reduced words of `w^(d,r)`:
/// `r - j` in negative columns and `j` elsewhere.
pub fn p_tableau_trapezoid(d: usize, r: usize) -> Result<ShiftedTableau> {
    let z = trapezoid(d, r)?;
    Ok(ShiftedTableau::from_fn(&z, |c| {
        if c.col < 0 {
            (r as i32 - c.col) as usize
        } else {
            c.col as usize
        }
    }))
}

/// A shape `λ` together with an ambient trapezoid `Z(d,r) ⊇ λ` of the same
/// height and the quantities derived from the pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrapezoidContext {
    pub d: usize,
    pub r: usize,
    pub lambda: StrictPartition,
    pub z: StrictPartition,
    /// `μ_i = Z_i - λ_i`.
    pub mu: Vec<usize>,
    /// `σ_i = μ_1 + … + μ_i`, with `σ_0 = 0` at index 0.
    pub sigma: Vec<usize>,
    /// `ν_i = min(μ_i, …, μ_d)`.
    pub nu: Vec<usize>,
}

/// JSON form of a [`TrapezoidContext`] and its derived data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrapezoidSummary {
    pub d: usize,
    pub r: usize,
    pub lambda: Vec<usize>,
    pub a_lambda: Vec<usize>,
    pub w_lambda: Vec<i32>,
    pub p_lambda: Vec<Vec<usize>>,
}

impl TrapezoidContext {
    /// Context for `λ ⊆ Z(d,r)`; `d` must equal the number of parts.
    pub fn new(lambda: &StrictPartition, d: usize, r: usize) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::InvalidPartition {
                parts: vec![],
                reason: "shape must be nonempty".into(),
            });
        }
        let not_contained = || Error::NotContained {
            lambda: lambda.parts().to_vec(),
            d,
            r,
        };
        if d != lambda.len() {
            return Err(not_contained());
        }
        let z = trapezoid(d, r)?;
        if !lambda.fits_in(&z) {
            return Err(not_contained());
        }
        let mu: Vec<usize> = (1..=d).map(|i| z.part(i) - lambda.part(i)).collect();
        let sigma: Vec<usize> = std::iter::once(0)
            .chain(mu.iter().scan(0, |acc, &m| {
                *acc += m;
                Some(*acc)
            }))
            .collect();
        let mut nu = mu.clone();
        for i in (0..d.saturating_sub(1)).rev() {
            nu[i] = nu[i].min(nu[i + 1]);
        }
        Ok(TrapezoidContext {
            d,
            r,
            lambda: lambda.clone(),
            z,
            mu,
            sigma,
            nu,
        })
    }

    /// Context with the smallest containing trapezoid.
    pub fn minimal(lambda: &StrictPartition) -> Result<Self> {
        let (d, r) = min_trapezoid(lambda);
        Self::new(lambda, d, r)
    }

    /// Context for `λ` with optional overrides of `d` and `r`.
    pub fn with_overrides(lambda: &StrictPartition, d: Option<usize>, r: Option<usize>) -> Result<Self> {
        let (d0, r0) = min_trapezoid(lambda);
        Self::new(lambda, d.unwrap_or(d0), r.unwrap_or(r0))
    }

    /// Rank `n = d + r` of the ambient group.
    pub fn n(&self) -> usize {
        self.d + self.r
    }

    /// `N = |λ|`.
    pub fn size(&self) -> usize {
        self.lambda.size()
    }

    /// `ℓ = |Z(d,r)|`.
    pub fn ell(&self) -> usize {
        self.z.size()
    }

    pub fn mu(&self, i: usize) -> usize {
        self.mu[i - 1]
    }

    pub fn nu(&self, i: usize) -> usize {
        self.nu[i - 1]
    }

    /// `a^λ`: the letters of `P(w^(d,r))` on `Z(d,r) ∖ λ`, read row by row.
    pub fn a_lambda(&self) -> Word {
        let n = self.n();
        let letters = (1..=self.d).flat_map(|i| (n - i + 1 - self.mu(i))..=(n - i)).collect();
        Word::new(letters, n).expect("letters of a^λ are below d + r")
    }

    /// `w^λ = w^(d,r) s_{a_ℓ} ⋯ s_{a_{N+1}}`.
    pub fn w_lambda(&self) -> SignedPermutation {
        let mut w = w_dr(self.d, self.r);
        for &a in self.a_lambda().letters().iter().rev() {
            w.mul_simple_in_place(a);
        }
        w
    }

    /// `P(w^λ)`: `j` in columns `j >= 0`, `r - j - ν_{d+1+j}` in column `j < 0`.
    pub fn p_lambda(&self) -> ShiftedTableau {
        ShiftedTableau::from_fn(&self.lambda, |c| {
            if c.col >= 0 {
                c.col as usize
            } else {
                let nu = self.nu((self.d as i32 + 1 + c.col) as usize);
                (self.r as i32 - c.col - nu as i32) as usize
            }
        })
    }

    /// `w^λ` read off the lattice path bordering `λ`.
    ///
    /// The boxes of `Z(d,r)` in positive columns form a triangle standing on
    /// a path of semilength `d + r`; box `(i, j)` sits at abscissa
    /// `n - i + j` and height `n + 1 - i - j`. Lowering the path by the boxes
    /// of `λ` leaves it bordering `Z(d,r) ∖ λ`. Its upsteps are labelled
    /// `n, n-1, …, d+1, -1, …, -d` from left to right, each label moves to
    /// the matching downstep, and the downsteps are read left to right.
    pub fn w_lambda_via_path(&self) -> SignedPermutation {
        let n = self.n() as i64;
        let (d, r) = (self.d as i64, self.r as i64);
        let base = |x: i64| {
            if x <= r {
                x
            } else if x <= 2 * r {
                2 * r - x
            } else {
                (x - 2 * r) % 2
            }
        };
        let removed: Vec<(i64, i64)> = (1..=self.d)
            .flat_map(|i| {
                let first = self.lambda.row_end(i) + 1;
                let last = self.z.row_end(i);
                (first..=last).map(move |j| (n - i as i64 + j as i64, n + 1 - i as i64 - j as i64))
            })
            .collect();
        let height = |x: i64| {
            removed
                .iter()
                .map(|&(cx, cy)| cy + 1 - (x - cx).abs())
                .fold(base(x), i64::max)
        };
        let mut labels = (d + 1..=n).rev().chain((1..=d).map(|k| -k));
        let mut open: Vec<i32> = Vec::new();
        let mut window = Vec::with_capacity(self.n());
        for x in 0..2 * n {
            if height(x + 1) > height(x) {
                open.push(labels.next().expect("n upsteps") as i32);
            } else {
                window.push(open.pop().expect("path stays above the axis"));
            }
        }
        SignedPermutation::new(window).expect("path labels form a signed permutation")
    }

    pub fn summary(&self) -> TrapezoidSummary {
        TrapezoidSummary {
            d: self.d,
            r: self.r,
            lambda: self.lambda.parts().to_vec(),
            a_lambda: self.a_lambda().letters().to_vec(),
            w_lambda: self.w_lambda().window().to_vec(),
            p_lambda: self.p_lambda().into_rows(),
        }
    }
}
