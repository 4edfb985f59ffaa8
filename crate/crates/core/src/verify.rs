//! Exhaustive check of the bijection on one shape.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::balanced::{enumerate_bs_bruteforce, is_balanced};
use crate::bijection::{bs_to_syt, syt_to_bs};
use crate::error::Result;
use crate::hook::hook_length_formula_count;
use crate::standard::enumerate_syt;
use crate::tableau::ShiftedTableau;
use crate::trapezoid::TrapezoidContext;

/// Outcome of [`verify_shape`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub shape: Vec<usize>,
    pub d: usize,
    pub r: usize,
    /// Number of standard tableaux enumerated.
    pub syt: usize,
    /// Hook-length formula value.
    pub hook_formula: String,
    /// Number of distinct balanced images.
    pub bs: usize,
    /// Whether the images agree with the brute-force balanced tableaux;
    /// `None` when the shape is above the brute-force cap.
    pub brute_force: Option<bool>,
    /// Descriptions of everything that went wrong.
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "SYT={} BS={} {}",
            self.syt,
            self.bs,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// Sends every standard tableau of `ctx.lambda` through the bijection and
/// checks that the images are balanced and distinct, that the inverse map
/// recovers each tableau, that the count matches the hook-length formula,
/// and, for shapes of at most `bs_cap` boxes, that the images are exactly
/// the balanced tableaux found by brute force.
pub fn verify_shape(ctx: &TrapezoidContext, bs_cap: usize) -> Result<VerifyReport> {
    let shape = &ctx.lambda;
    let syts: Vec<ShiftedTableau> = enumerate_syt(shape).collect();
    let results: Vec<std::result::Result<ShiftedTableau, String>> = syts
        .par_iter()
        .map(|t| {
            let b = syt_to_bs(t, ctx).map_err(|e| format!("syt_to_bs failed on {}: {e}", t.to_json()))?;
            if !is_balanced(&b) {
                return Err(format!("image {} is not balanced", b.to_json()));
            }
            let back = bs_to_syt(&b, ctx).map_err(|e| format!("bs_to_syt failed on {}: {e}", b.to_json()))?;
            if back != *t {
                return Err(format!("{} maps back to {}", t.to_json(), back.to_json()));
            }
            Ok(b)
        })
        .collect();

    let mut failures = Vec::new();
    let mut images = BTreeSet::new();
    for r in results {
        match r {
            Ok(b) => {
                images.insert(b);
            }
            Err(e) => failures.push(e),
        }
    }
    if failures.is_empty() && images.len() != syts.len() {
        failures.push(format!(
            "{} tableaux have only {} distinct images",
            syts.len(),
            images.len()
        ));
    }
    let hook = hook_length_formula_count(shape);
    if hook.to_string() != syts.len().to_string() {
        failures.push(format!("enumerated {} tableaux, formula gives {hook}", syts.len()));
    }
    let brute_force = if shape.size() <= bs_cap {
        let oracle: BTreeSet<ShiftedTableau> = enumerate_bs_bruteforce(shape, bs_cap)?.into_iter().collect();
        let same = oracle == images;
        if !same {
            failures.push(format!(
                "brute force finds {} balanced tableaux, the bijection reaches {}",
                oracle.len(),
                images.len()
            ));
        }
        Some(same)
    } else {
        None
    };
    Ok(VerifyReport {
        shape: shape.parts().to_vec(),
        d: ctx.d,
        r: ctx.r,
        syt: syts.len(),
        hook_formula: hook.to_string(),
        bs: images.len(),
        brute_force,
        failures,
    })
}
