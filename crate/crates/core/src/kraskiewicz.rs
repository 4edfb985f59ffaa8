//! Kraśkiewicz insertion of type-`B` reduced words into pairs of shifted
//! tableaux, and its inverse.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Cell;
use crate::standard::is_standard;
use crate::tableau::ShiftedTableau;
use crate::typeb::{enumerate_reduced_words, SignedPermutation, Word};

/// True if `s` strictly decreases and then strictly increases.
pub fn is_unimodal(s: &[usize]) -> bool {
    let m = min_index(s);
    s[..m].windows(2).all(|w| w[0] > w[1])
        && s.get(m..).unwrap_or(&[]).windows(2).all(|w| w[0] < w[1])
        && (m == 0 || s.is_empty() || s[m - 1] > s[m])
}

fn min_index(s: &[usize]) -> usize {
    s.iter().enumerate().min_by_key(|&(_, v)| *v).map_or(0, |(k, _)| k)
}

/// A unimodal row, viewed as its decreasing part `R↓` (which holds the
/// minimum) followed by its increasing part `R↑`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnimodalRow<'a> {
    pub down: &'a [usize],
    pub up: &'a [usize],
}

impl<'a> UnimodalRow<'a> {
    pub fn split(row: &'a [usize]) -> Result<Self> {
        if !is_unimodal(row) {
            return Err(Error::InvalidTableau(format!("row {row:?} is not unimodal")));
        }
        let m = if row.is_empty() { 0 } else { min_index(row) + 1 };
        let (down, up) = row.split_at(m);
        Ok(UnimodalRow { down, up })
    }
}

/// `π(T) = T_d T_{d-1} ⋯ T_1`: rows read left to right, bottom to top.
pub fn reading_word(t: &ShiftedTableau) -> Vec<usize> {
    t.rows().iter().rev().flatten().copied().collect()
}

/// [`reading_word`] as a word of the given rank.
pub fn reading_word_of_rank(t: &ShiftedTableau, rank: usize) -> Result<Word> {
    Word::new(reading_word(t), rank)
}

/// Outcome of inserting one letter into one row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowStep {
    /// The letter was appended; insertion stops here.
    Placed(Vec<usize>),
    /// The row changed to the first component and the second component
    /// moves on to the next row.
    Bumped(Vec<usize>, usize),
}

/// One row of Kraśkiewicz insertion.
pub fn insert_into_row(row: &[usize], a: usize) -> Result<RowStep> {
    let mut appended = row.to_vec();
    appended.push(a);
    if is_unimodal(&appended) {
        return Ok(RowStep::Placed(appended));
    }
    let parts = UnimodalRow::split(row)?;
    let not_reduced = || Error::Insertion(format!("cannot insert {a} into row {row:?}: word is not reduced"));
    let offset = parts.down.len();
    let q = parts.up.iter().position(|&u| u >= a).ok_or_else(not_reduced)?;
    let b = parts.up[q];
    if a == 0 && contains_101(row) {
        return Ok(RowStep::Bumped(row.to_vec(), 0));
    }
    let mut new_row = row.to_vec();
    let c = if b != a {
        new_row[offset + q] = a;
        b
    } else {
        a + 1
    };
    let p = parts.down.iter().position(|&x| x <= c).ok_or_else(not_reduced)?;
    let d = parts.down[p];
    let bumped = if d != c {
        new_row[p] = c;
        d
    } else {
        c.checked_sub(1).ok_or_else(not_reduced)?
    };
    Ok(RowStep::Bumped(new_row, bumped))
}

fn contains_101(row: &[usize]) -> bool {
    let Some(first) = row.iter().position(|&x| x == 1) else {
        return false;
    };
    let Some(zero) = row[first..].iter().position(|&x| x == 0).map(|k| k + first) else {
        return false;
    };
    row[zero..].contains(&1)
}

/// A pair of tableaux of equal shape: the insertion tableau `P`, whose rows
/// are unimodal, and the standard recording tableau `Q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InsertionPair {
    pub p: ShiftedTableau,
    pub q: ShiftedTableau,
}

#[derive(Serialize, Deserialize)]
struct RawPair {
    shape: Vec<usize>,
    #[serde(rename = "P")]
    p: Vec<Vec<usize>>,
    #[serde(rename = "Q")]
    q: Vec<Vec<usize>>,
}

impl Serialize for InsertionPair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawPair {
            shape: self.p.shape().parts().to_vec(),
            p: self.p.rows().to_vec(),
            q: self.q.rows().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for InsertionPair {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawPair::deserialize(d)?;
        let p = ShiftedTableau::from_rows(raw.p).map_err(serde::de::Error::custom)?;
        let q = ShiftedTableau::from_rows(raw.q).map_err(serde::de::Error::custom)?;
        if p.shape().parts() != raw.shape.as_slice() {
            return Err(serde::de::Error::custom("P does not have the declared shape"));
        }
        InsertionPair::new(p, q).map_err(serde::de::Error::custom)
    }
}

impl InsertionPair {
    /// Checks that the shapes agree, `P` has unimodal rows and `Q` is
    /// standard.
    pub fn new(p: ShiftedTableau, q: ShiftedTableau) -> Result<Self> {
        if p.shape() != q.shape() {
            return Err(Error::InvalidTableau(format!(
                "P has shape {} but Q has shape {}",
                p.shape(),
                q.shape()
            )));
        }
        if let Some(row) = p.rows().iter().find(|r| !is_unimodal(r)) {
            return Err(Error::InvalidTableau(format!("row {row:?} of P is not unimodal")));
        }
        if !q.shape().is_empty() && !is_standard(&q) {
            return Err(Error::NotStandard);
        }
        Ok(InsertionPair { p, q })
    }

    pub fn empty() -> Self {
        InsertionPair {
            p: ShiftedTableau::empty(),
            q: ShiftedTableau::empty(),
        }
    }

    pub fn size(&self) -> usize {
        self.p.size()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("pair serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// `P` and `Q` side by side, both in shifted text layout.
    pub fn to_text(&self) -> String {
        let p = self.p.to_text();
        let q = self.q.to_text();
        let p_lines: Vec<&str> = p.lines().collect();
        let width = p_lines.iter().map(|l| l.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, q_line) in q.lines().enumerate() {
            out.push_str(&format!("{:<width$}   {q_line}\n", p_lines[k]));
        }
        out
    }
}

/// Inserts `a` into `P`, recording `stamp` in `Q` at the new box.
///
/// The caller is responsible for `π(P)·a` being reduced; violations are
/// reported when the insertion cannot proceed.
pub fn insert_letter(state: &InsertionPair, a: usize, stamp: usize) -> Result<InsertionPair> {
    let mut p_rows: Vec<Vec<usize>> = state.p.rows().to_vec();
    let mut q_rows: Vec<Vec<usize>> = state.q.rows().to_vec();
    let mut letter = a;
    for i in 0..=p_rows.len() {
        if i == p_rows.len() {
            p_rows.push(Vec::new());
            q_rows.push(Vec::new());
        }
        match insert_into_row(&p_rows[i], letter)? {
            RowStep::Placed(row) => {
                p_rows[i] = row;
                q_rows[i].push(stamp);
                break;
            }
            RowStep::Bumped(row, next) => {
                p_rows[i] = row;
                letter = next;
            }
        }
    }
    let shape_ok = p_rows.windows(2).all(|w| w[0].len() > w[1].len());
    if !shape_ok {
        return Err(Error::Insertion(format!(
            "inserting {a} breaks the shifted shape: word is not reduced"
        )));
    }
    Ok(InsertionPair {
        p: ShiftedTableau::from_rows(p_rows)?,
        q: ShiftedTableau::from_rows(q_rows)?,
    })
}

/// Inserts every letter of a reduced word, recording `1, 2, …` in `Q`.
pub fn kraskiewicz_insert(word: &Word) -> Result<InsertionPair> {
    word.require_reduced()?;
    insert_unchecked(word.letters())
}

/// Insertion of a word known to be reduced.
pub(crate) fn insert_unchecked(letters: &[usize]) -> Result<InsertionPair> {
    letters
        .iter()
        .enumerate()
        .try_fold(InsertionPair::empty(), |state, (k, &a)| insert_letter(&state, a, k + 1))
}

/// Every `(R, a)` that [`insert_into_row`] sends to `Bumped(new_row, out)`.
fn row_preimages(new_row: &[usize], out: usize) -> Vec<(Vec<usize>, usize)> {
    let mut found: BTreeSet<(Vec<usize>, usize)> = BTreeSet::new();
    let mut consider = |row: Vec<usize>, a: usize| {
        if is_unimodal(&row) {
            if let Ok(RowStep::Bumped(r, o)) = insert_into_row(&row, a) {
                if r == new_row && o == out {
                    found.insert((row, a));
                }
            }
        }
    };
    if out == 0 {
        consider(new_row.to_vec(), 0);
    }
    for k in 1..=new_row.len() {
        let (down, up) = new_row.split_at(k);
        // undo the change to the decreasing part, recovering c
        let mut down_options: Vec<(Vec<usize>, usize)> = Vec::new();
        for (p, &x) in down.iter().enumerate() {
            if x > out {
                let mut old = down.to_vec();
                old[p] = out;
                down_options.push((old, x));
            }
        }
        if down.contains(&(out + 1)) {
            down_options.push((down.to_vec(), out + 1));
        }
        for (old_down, c) in down_options {
            // undo the change to the increasing part, recovering a
            for (q, &x) in up.iter().enumerate() {
                if x < c {
                    let mut old_up = up.to_vec();
                    old_up[q] = c;
                    consider([old_down.clone(), old_up].concat(), x);
                }
            }
            if c >= 1 && up.contains(&(c - 1)) {
                consider([old_down.clone(), up.to_vec()].concat(), c - 1);
            }
        }
    }
    found.into_iter().collect()
}

/// Undoes the insertion that created the largest entry of `Q`, returning
/// the smaller pair and the letter that was inserted.
pub fn reverse_insert(state: &InsertionPair) -> Result<(InsertionPair, usize)> {
    let state = InsertionPair::new(state.p.clone(), state.q.clone())?;
    let n = state.size();
    if n == 0 {
        return Err(Error::Insertion("cannot reverse-insert from an empty pair".into()));
    }
    let cell = state.q.position_of(n).ok_or(Error::NotStandard)?;
    let x = cell.row - 1;
    let mut p_rows = state.p.rows().to_vec();
    let mut q_rows = state.q.rows().to_vec();
    let y = p_rows[x].pop().expect("row holding the maximum is nonempty");
    q_rows[x].pop();
    if p_rows[x].is_empty() {
        p_rows.pop();
        q_rows.pop();
    }

    // Depth-first over the row-by-row preimages, from row x-1 up to row 1.
    fn unwind(rows: &mut Vec<Vec<usize>>, i: usize, out: usize, acc: &mut Vec<(Vec<Vec<usize>>, usize)>) {
        if i == 0 {
            acc.push((rows.clone(), out));
            return;
        }
        let current = rows[i - 1].clone();
        for (row, a) in row_preimages(&current, out) {
            rows[i - 1] = row;
            unwind(rows, i - 1, a, acc);
        }
        rows[i - 1] = current;
    }
    let mut candidates = Vec::new();
    unwind(&mut p_rows, x, y, &mut candidates);

    let q = ShiftedTableau::from_rows(q_rows)?;
    let mut survivors: Vec<(InsertionPair, usize)> = Vec::new();
    for (rows, a) in candidates {
        let Ok(p) = ShiftedTableau::from_rows(rows) else {
            continue;
        };
        let smaller = InsertionPair { p, q: q.clone() };
        let redone = insert_letter(&smaller, a, n);
        if redone.as_ref().is_ok_and(|r| *r == state) {
            let mut word = reading_word(&smaller.p);
            word.push(a);
            if Word::minimal(word).is_reduced() {
                survivors.push((smaller, a));
            }
        }
    }
    if survivors.len() > 1 {
        survivors.retain(|(s, _)| {
            let w = Word::minimal(reading_word(&s.p)).to_perm();
            is_sdt(&s.p, &w)
        });
    }
    match survivors.len() {
        1 => Ok(survivors.pop().expect("one survivor")),
        0 => Err(Error::Insertion(format!(
            "no pair inserts to the given one at box {cell}; P is not an insertion tableau"
        ))),
        k => Err(Error::Insertion(format!(
            "{k} pairs insert to the given one at box {cell}"
        ))),
    }
}

/// Reverse-inserts until the pair is empty and returns the recovered word,
/// in the given rank.
pub fn reverse_insert_all(state: &InsertionPair, rank: usize) -> Result<Word> {
    let mut letters = Vec::with_capacity(state.size());
    let mut current = state.clone();
    while current.size() > 0 {
        let (smaller, a) = reverse_insert(&current)?;
        letters.push(a);
        current = smaller;
    }
    letters.reverse();
    Word::new(letters, rank)
}

/// Length of the longest unimodal subsequence of `s`.
fn longest_unimodal(s: &[usize]) -> usize {
    let n = s.len();
    let mut down = vec![1; n];
    let mut uni = vec![1; n];
    for k in 0..n {
        for j in 0..k {
            if s[j] > s[k] {
                down[k] = down[k].max(down[j] + 1);
            }
            if s[j] < s[k] {
                uni[k] = uni[k].max(uni[j] + 1);
            }
        }
        uni[k] = uni[k].max(down[k]);
    }
    uni.into_iter().max().unwrap_or(0)
}

/// Standard decomposition tableau of `w`: the reading word is a reduced
/// word of `w`, and each row is unimodal and as long as the longest
/// unimodal subsequence of itself and the rows below it.
pub fn is_sdt(t: &ShiftedTableau, w: &SignedPermutation) -> bool {
    let word = reading_word(t);
    if word.iter().any(|&a| a >= w.rank()) {
        return false;
    }
    let word = Word::new(word, w.rank()).expect("letters checked");
    if !word.is_reduced() || word.to_perm() != *w {
        return false;
    }
    let rows = t.rows();
    (0..rows.len()).all(|i| {
        let suffix: Vec<usize> = rows[i..].iter().rev().flatten().copied().collect();
        is_unimodal(&rows[i]) && longest_unimodal(&suffix) == rows[i].len()
    })
}

/// True if all reduced words of `w` have the same insertion tableau.
/// Refuses elements longer than `cap`.
pub fn has_unique_p_tableau(w: &SignedPermutation, cap: usize) -> Result<bool> {
    let mut first: Option<ShiftedTableau> = None;
    for a in enumerate_reduced_words(w, cap)? {
        let p = insert_unchecked(a.letters())?.p;
        match &first {
            None => first = Some(p),
            Some(f) if *f != p => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(true)
}

/// Cell of `Q` holding `value`, if any.
pub fn recording_cell(pair: &InsertionPair, value: usize) -> Option<Cell> {
    pair.q.position_of(value)
}
