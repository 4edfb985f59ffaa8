use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::perm::SignedPermutation;
use crate::error::{Error, Result};

/// Default cap on the length of elements whose reduced words are listed.
pub const DEFAULT_REDUCED_WORD_CAP: usize = 16;

/// A word in the simple reflections `s_0, …, s_{n-1}` of `B_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<usize>,
    rank: usize,
}

impl Word {
    pub fn new(letters: Vec<usize>, rank: usize) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&a| a >= rank) {
            return Err(Error::InvalidWord(format!("letter {bad} out of range for rank {rank}")));
        }
        Ok(Word { letters, rank })
    }

    /// A word whose rank is one more than its largest letter (at least 1).
    pub fn minimal(letters: Vec<usize>) -> Self {
        let rank = letters.iter().max().map_or(1, |m| m + 1);
        Word { letters, rank }
    }

    /// Parses `21031` (one digit per letter) or `2 1 0 3 1`. Without an
    /// explicit rank the smallest rank containing every letter is used.
    pub fn parse(s: &str, rank: Option<usize>) -> Result<Self> {
        let s = s.trim();
        let letters: Vec<usize> = if s.contains(|c: char| c.is_whitespace() || c == ',') {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad letter {t:?}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad letter {c:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        match rank {
            Some(n) => Word::new(letters, n),
            None => Ok(Word::minimal(letters)),
        }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Same letters regarded in a different rank.
    pub fn with_rank(&self, rank: usize) -> Result<Self> {
        Word::new(self.letters.clone(), rank)
    }

    /// `s_{a_1} s_{a_2} ⋯ s_{a_k}`.
    pub fn to_perm(&self) -> SignedPermutation {
        let mut w = SignedPermutation::identity(self.rank);
        for &a in &self.letters {
            w.mul_simple_in_place(a);
        }
        w
    }

    pub fn is_reduced(&self) -> bool {
        self.to_perm().length() == self.len()
    }

    pub fn require_reduced(&self) -> Result<()> {
        if self.is_reduced() {
            Ok(())
        } else {
            Err(Error::NotReduced(self.letters.clone()))
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank <= 10 {
            for a in &self.letters {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|a| a.to_string()).collect();
            f.write_str(&parts.join(" "))
        }
    }
}

pub fn word_to_perm(word: &Word) -> SignedPermutation {
    word.to_perm()
}

pub fn is_reduced(word: &Word) -> bool {
    word.is_reduced()
}

/// Depth-first iterator over `Red(w)`.
///
/// The first letter of a reduced word of `w` is a left descent of `w`, so
/// recursing on left descents in increasing order lists the words in
/// lexicographic order.
pub struct ReducedWords {
    rank: usize,
    // (element still to be written, letters not yet tried as its first letter)
    stack: Vec<(SignedPermutation, std::vec::IntoIter<usize>)>,
    prefix: Vec<usize>,
    done: bool,
}

fn left_descents(w: &SignedPermutation) -> Vec<usize> {
    w.inverse().right_descents()
}

impl Iterator for ReducedWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        loop {
            let Some((w, choices)) = self.stack.last_mut() else {
                self.done = true;
                return None;
            };
            if w.is_identity() {
                let word = Word {
                    letters: self.prefix.clone(),
                    rank: self.rank,
                };
                self.stack.pop();
                self.prefix.pop();
                if self.stack.is_empty() {
                    self.done = true;
                }
                return Some(word);
            }
            match choices.next() {
                Some(a) => {
                    let rest = w.left_mul_simple(a).expect("descent is in range");
                    let descents = left_descents(&rest);
                    self.prefix.push(a);
                    self.stack.push((rest, descents.into_iter()));
                }
                None => {
                    self.stack.pop();
                    self.prefix.pop();
                }
            }
        }
    }
}

/// All reduced words of `w` in lexicographic order. Refuses elements longer
/// than `cap`.
pub fn enumerate_reduced_words(w: &SignedPermutation, cap: usize) -> Result<ReducedWords> {
    let len = w.length();
    if len > cap {
        return Err(Error::CapExceeded {
            what: "reduced-word length",
            size: len,
            cap,
        });
    }
    Ok(ReducedWords {
        rank: w.rank(),
        stack: vec![(w.clone(), left_descents(w).into_iter())],
        prefix: Vec::new(),
        done: false,
    })
}

/// `|Red(w)|`, memoized over the elements below `w`.
pub fn count_reduced_words(w: &SignedPermutation) -> BigUint {
    fn go(w: &SignedPermutation, memo: &mut HashMap<SignedPermutation, BigUint>) -> BigUint {
        if w.is_identity() {
            return BigUint::from(1u32);
        }
        if let Some(c) = memo.get(w) {
            return c.clone();
        }
        let total = w
            .right_descents()
            .into_iter()
            .map(|a| go(&w.mul_simple(a).expect("descent is in range"), memo))
            .sum::<BigUint>();
        memo.insert(w.clone(), total.clone());
        total
    }
    go(w, &mut HashMap::new())
}
