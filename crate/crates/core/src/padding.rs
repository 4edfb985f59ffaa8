//! Extending tableaux of shape `λ` to the ambient trapezoid `Z(d,r)` and
//! back.

use crate::balanced::is_balanced;
use crate::error::{Error, Result};
use crate::partition::Cell;
use crate::standard::is_standard;
use crate::tableau::ShiftedTableau;
use crate::trapezoid::TrapezoidContext;

fn require_shape(t: &ShiftedTableau, expected: &crate::partition::StrictPartition) -> Result<()> {
    if t.shape() == expected {
        Ok(())
    } else {
        Err(Error::InvalidTableau(format!(
            "expected shape {expected}, found {}",
            t.shape()
        )))
    }
}

/// The cells of `Z(d,r) ∖ λ` in row-major order.
pub fn complement_cells(ctx: &TrapezoidContext) -> Vec<Cell> {
    ctx.z.cells().into_iter().filter(|&c| !ctx.lambda.contains(c)).collect()
}

/// `T⁺`: `T` with `N+1, …, ℓ` written into `Z(d,r) ∖ λ` row by row.
pub fn pad_syt(t: &ShiftedTableau, ctx: &TrapezoidContext) -> Result<ShiftedTableau> {
    require_shape(t, &ctx.lambda)?;
    if !is_standard(t) {
        return Err(Error::NotStandard);
    }
    let mut next = ctx.size();
    let padded = ShiftedTableau::from_fn(&ctx.z, |c| {
        t.get(c).unwrap_or_else(|| {
            next += 1;
            next
        })
    });
    assert!(is_standard(&padded), "padding a standard tableau keeps it standard");
    Ok(padded)
}

/// Inverse of [`pad_syt`]: rejects tableaux whose entries above `N` are not
/// exactly the row-major filling of `Z(d,r) ∖ λ`.
pub fn unpad_syt(t: &ShiftedTableau, ctx: &TrapezoidContext) -> Result<ShiftedTableau> {
    require_shape(t, &ctx.z)?;
    if !is_standard(t) {
        return Err(Error::NotStandard);
    }
    let n = ctx.size();
    for (k, c) in complement_cells(ctx).into_iter().enumerate() {
        if t.at(c) != n + k + 1 {
            return Err(Error::InvalidTableau(format!(
                "entry {} at {c} should be {}: the tableau is not a padded tableau of shape {}",
                t.at(c),
                n + k + 1,
                ctx.lambda
            )));
        }
    }
    Ok(ShiftedTableau::from_fn(&ctx.lambda, |c| t.at(c)))
}

/// `B⁺`: grows `B` to `Z(d,r)` one box at a time, `μ_1` boxes in row 1,
/// then `μ_2` in row 2, and so on. Each new box at `(i, j)` first swaps
/// columns `j` and `j+1` in the rows above and then receives the next
/// value.
pub fn pad_bs(b: &ShiftedTableau, ctx: &TrapezoidContext) -> Result<ShiftedTableau> {
    require_shape(b, &ctx.lambda)?;
    b.require_bijective()?;
    if !is_balanced(b) {
        return Err(Error::NotBalanced);
    }
    Ok(pad_bs_unchecked(b, ctx))
}

fn pad_bs_unchecked(b: &ShiftedTableau, ctx: &TrapezoidContext) -> ShiftedTableau {
    let d = ctx.d;
    let mut rows = b.rows().to_vec();
    let mut size = ctx.size();
    for i in 1..=d {
        for _ in 0..ctx.mu(i) {
            // new box sits at column j = len_i + i - d, i.e. dense index len_i
            let k = rows[i - 1].len();
            let j = k as i32 + i as i32 - d as i32;
            for (a, row) in rows.iter_mut().enumerate().take(i - 1) {
                let start = a as i32 + 1 - d as i32;
                let (x, y) = ((j - start) as usize, (j + 1 - start) as usize);
                row.swap(x, y);
            }
            size += 1;
            rows[i - 1].push(size);
        }
    }
    ShiftedTableau::new(ctx.z.clone(), rows).expect("padding fills Z(d,r)")
}

/// Inverse of [`pad_bs`]: removes the largest entry from the end of row
/// `d` (`μ_d` times), then row `d-1`, …, swapping columns back each time.
/// Rejects tableaux that are not the padding of a balanced tableau of
/// shape `λ`.
pub fn unpad_bs(b: &ShiftedTableau, ctx: &TrapezoidContext) -> Result<ShiftedTableau> {
    require_shape(b, &ctx.z)?;
    b.require_bijective()?;
    if !is_balanced(b) {
        return Err(Error::NotBalanced);
    }
    let d = ctx.d;
    let mut rows = b.rows().to_vec();
    let mut size = ctx.ell();
    let not_padded = |why: String| {
        Error::InvalidTableau(format!(
            "not the padding of a balanced tableau of shape {}: {why}",
            ctx.lambda
        ))
    };
    for i in (1..=d).rev() {
        for _ in 0..ctx.mu(i) {
            let last = rows[i - 1].pop().expect("row still longer than λ_i");
            if last != size {
                return Err(not_padded(format!(
                    "expected {size} at the end of row {i}, found {last}"
                )));
            }
            size -= 1;
            let k = rows[i - 1].len();
            let j = k as i32 + i as i32 - d as i32;
            for (a, row) in rows.iter_mut().enumerate().take(i - 1) {
                let start = a as i32 + 1 - d as i32;
                row.swap((j - start) as usize, (j + 1 - start) as usize);
            }
        }
    }
    let out = ShiftedTableau::new(ctx.lambda.clone(), rows).expect("unpadding restores λ");
    if !is_balanced(&out) {
        return Err(not_padded("the restriction is not balanced".into()));
    }
    debug_assert_eq!(pad_bs_unchecked(&out, ctx), *b);
    Ok(out)
}
