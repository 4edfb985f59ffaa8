//! The bijection between standard and balanced tableaux of a shifted shape,
//! assembled from padding, reduced words of `w^(d,r)` and insertion.

use serde::Serialize;

use crate::balanced::is_balanced;
use crate::error::{Error, Result};
use crate::kraskiewicz::{kraskiewicz_insert, reverse_insert_all, InsertionPair};
use crate::padding::{pad_bs, pad_syt, unpad_bs, unpad_syt};
use crate::standard::is_standard;
use crate::tableau::ShiftedTableau;
use crate::trapezoid::{p_tableau_trapezoid, root_label, trapezoid_params, w_dr, TrapezoidContext};
use crate::typeb::{reflection_order, reflection_order_to_word, ReflectionOrder, Root, Word};

/// The word of a balanced tableau of trapezoid shape: its entries order the
/// root labels of the boxes, and that order is a reflection order.
pub fn bs_to_reduced_word(b: &ShiftedTableau) -> Result<Word> {
    Ok(bs_to_reflection_order(b)?.1)
}

fn bs_to_reflection_order(b: &ShiftedTableau) -> Result<(ReflectionOrder, Word)> {
    let (d, r) = trapezoid_params(b.shape()).ok_or_else(|| Error::NotTrapezoid(b.shape().parts().to_vec()))?;
    b.require_bijective()?;
    if !is_balanced(b) {
        return Err(Error::NotBalanced);
    }
    let mut roots: Vec<Option<Root>> = vec![None; b.size()];
    for (c, v) in b.entries() {
        roots[v - 1] = Some(root_label(d, r, c)?);
    }
    let order = ReflectionOrder::new(roots.into_iter().map(|r| r.expect("bijective filling")).collect())?;
    let word = reflection_order_to_word(&order, d + r)?;
    Ok((order, word))
}

/// Inverse of [`bs_to_reduced_word`]: the box labelled by the `k`-th root
/// of the reflection order of `a` receives `k`.
pub fn reduced_word_to_bs(a: &Word, d: usize, r: usize) -> Result<ShiftedTableau> {
    let w = w_dr(d, r);
    let a = a.with_rank(d + r)?;
    let order = reflection_order(&a)?;
    if a.to_perm() != w {
        return Err(Error::InvalidWord(format!("{a} is not a reduced word of {w}")));
    }
    let position = |root: Root| {
        order
            .roots()
            .iter()
            .position(|&g| g == root)
            .expect("labels are the inversions")
    };
    let z = crate::trapezoid::trapezoid(d, r)?;
    Ok(ShiftedTableau::from_fn(&z, |c| {
        position(root_label(d, r, c).expect("cell of Z")) + 1
    }))
}

/// Every intermediate of one pass through the bijection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub d: usize,
    pub r: usize,
    /// Standard tableau of shape `λ`.
    pub syt: ShiftedTableau,
    /// `T⁺`, standard of shape `Z(d,r)`.
    pub syt_padded: ShiftedTableau,
    /// `(P(w^(d,r)), T⁺)`.
    pub insertion: InsertionPair,
    /// Reduced word of `w^(d,r)` ending in `a^λ`.
    pub word: Word,
    pub reflection_order: ReflectionOrder,
    /// `B⁺`, balanced of shape `Z(d,r)`.
    pub bs_padded: ShiftedTableau,
    /// Balanced tableau of shape `λ`.
    pub bs: ShiftedTableau,
}

impl Trace {
    /// Multi-line text listing of the stages.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("trapezoid: Z({},{})\n", self.d, self.r));
        out.push_str(&format!("T:\n{}", self.syt.to_text()));
        out.push_str(&format!("T+:\n{}", self.syt_padded.to_text()));
        out.push_str(&format!("P:\n{}", self.insertion.p.to_text()));
        out.push_str(&format!("word: {}\n", self.word));
        out.push_str(&format!("reflection order: {}\n", self.reflection_order));
        out.push_str(&format!("B+:\n{}", self.bs_padded.to_text()));
        out.push_str(&format!("B:\n{}", self.bs.to_text()));
        out
    }
}

fn require_tail(word: &Word, ctx: &TrapezoidContext) -> Result<()> {
    let tail = ctx.a_lambda();
    if word.letters().ends_with(tail.letters()) {
        Ok(())
    } else {
        Err(Error::InvalidWord(format!("{word} does not end with a^λ = {tail}")))
    }
}

/// `SYT(λ) → BS(λ)` with all intermediates.
pub fn syt_to_bs_trace(t: &ShiftedTableau, ctx: &TrapezoidContext) -> Result<Trace> {
    if t.shape() != &ctx.lambda {
        return Err(Error::InvalidTableau(format!("expected shape {}, found {}", ctx.lambda, t.shape())).at("input"));
    }
    t.require_bijective().map_err(|e| e.at("input"))?;
    if !is_standard(t) {
        return Err(Error::NotStandard.at("input"));
    }
    let syt_padded = pad_syt(t, ctx).map_err(|e| e.at("pad_syt"))?;
    let insertion = InsertionPair::new(p_tableau_trapezoid(ctx.d, ctx.r)?, syt_padded.clone())
        .map_err(|e| e.at("reverse_insertion"))?;
    let word = reverse_insert_all(&insertion, ctx.n()).map_err(|e| e.at("reverse_insertion"))?;
    require_tail(&word, ctx).map_err(|e| e.at("a_lambda_tail"))?;
    let bs_padded = reduced_word_to_bs(&word, ctx.d, ctx.r).map_err(|e| e.at("reduced_word_to_bs"))?;
    let reflection_order = reflection_order(&word).map_err(|e| e.at("reduced_word_to_bs"))?;
    let bs = unpad_bs(&bs_padded, ctx).map_err(|e| e.at("unpad_bs"))?;
    Ok(Trace {
        d: ctx.d,
        r: ctx.r,
        syt: t.clone(),
        syt_padded,
        insertion,
        word,
        reflection_order,
        bs_padded,
        bs,
    })
}

/// `BS(λ) → SYT(λ)` with all intermediates.
pub fn bs_to_syt_trace(b: &ShiftedTableau, ctx: &TrapezoidContext) -> Result<Trace> {
    if b.shape() != &ctx.lambda {
        return Err(Error::InvalidTableau(format!("expected shape {}, found {}", ctx.lambda, b.shape())).at("input"));
    }
    b.require_bijective().map_err(|e| e.at("input"))?;
    if !is_balanced(b) {
        return Err(Error::NotBalanced.at("input"));
    }
    let bs_padded = pad_bs(b, ctx).map_err(|e| e.at("pad_bs"))?;
    let (reflection_order, word) = bs_to_reflection_order(&bs_padded).map_err(|e| e.at("bs_to_reduced_word"))?;
    require_tail(&word, ctx).map_err(|e| e.at("a_lambda_tail"))?;
    let insertion = kraskiewicz_insert(&word).map_err(|e| e.at("insertion"))?;
    if insertion.p != p_tableau_trapezoid(ctx.d, ctx.r)? {
        return Err(Error::Insertion("insertion tableau differs from P(w^(d,r))".into()).at("insertion"));
    }
    let syt_padded = insertion.q.clone();
    let syt = unpad_syt(&syt_padded, ctx).map_err(|e| e.at("unpad_syt"))?;
    Ok(Trace {
        d: ctx.d,
        r: ctx.r,
        syt,
        syt_padded,
        insertion,
        word,
        reflection_order,
        bs_padded,
        bs: b.clone(),
    })
}

pub fn syt_to_bs(t: &ShiftedTableau, ctx: &TrapezoidContext) -> Result<ShiftedTableau> {
    syt_to_bs_trace(t, ctx).map(|trace| trace.bs)
}

pub fn bs_to_syt(b: &ShiftedTableau, ctx: &TrapezoidContext) -> Result<ShiftedTableau> {
    bs_to_syt_trace(b, ctx).map(|trace| trace.syt)
}
