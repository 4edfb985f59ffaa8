use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::root::{positive_roots, Root};
use crate::error::{Error, Result};

/// An element of the hyperoctahedral group `W(B_n)`, stored by its window
/// `w(1), …, w(n)`. Values on negative indices follow from `w(-i) = -w(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl TryFrom<Vec<i32>> for SignedPermutation {
    type Error = Error;

    fn try_from(window: Vec<i32>) -> Result<Self> {
        SignedPermutation::new(window)
    }
}

impl From<SignedPermutation> for Vec<i32> {
    fn from(w: SignedPermutation) -> Vec<i32> {
        w.window
    }
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidPermutation(format!(
                    "{window:?}: absolute values must be a permutation of 1..={n}"
                )));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i32).collect(),
        }
    }

    /// The simple reflection `s_a` of `B_n`: `s_0` negates 1, `s_a` swaps
    /// `a` and `a + 1`.
    pub fn simple_reflection(n: usize, a: usize) -> Result<Self> {
        if a >= n {
            return Err(Error::InvalidWord(format!("letter {a} out of range for rank {n}")));
        }
        let mut w = SignedPermutation::identity(n);
        w.mul_simple_in_place(a);
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `w(i)` for `i ∈ ±[n]`; `w(0) = 0` by convention.
    pub fn apply(&self, i: i32) -> Result<i32> {
        let a = i.unsigned_abs() as usize;
        if i == 0 {
            return Err(Error::InvalidPermutation("index 0 is not in ±[n]".into()));
        }
        if a > self.rank() {
            return Err(Error::InvalidPermutation(format!(
                "index {i} out of range for rank {}",
                self.rank()
            )));
        }
        Ok(self.value(i))
    }

    /// Unchecked evaluation, extended by `w(0) = 0`.
    pub(crate) fn value(&self, i: i32) -> i32 {
        match i.signum() {
            0 => 0,
            1 => self.window[i as usize - 1],
            _ => -self.window[(-i) as usize - 1],
        }
    }

    /// `self ∘ other`, i.e. `(self·other)(i) = self(other(i))`.
    pub fn compose(&self, other: &SignedPermutation) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::InvalidPermutation(format!(
                "rank mismatch: {} vs {}",
                self.rank(),
                other.rank()
            )));
        }
        Ok(SignedPermutation {
            window: other.window.iter().map(|&x| self.value(x)).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut window = vec![0; self.rank()];
        for (k, &x) in self.window.iter().enumerate() {
            let pos = (k + 1) as i32;
            window[x.unsigned_abs() as usize - 1] = if x > 0 { pos } else { -pos };
        }
        SignedPermutation { window }
    }

    /// Right multiplication by `s_a`, acting on positions.
    pub(crate) fn mul_simple_in_place(&mut self, a: usize) {
        if a == 0 {
            self.window[0] = -self.window[0];
        } else {
            self.window.swap(a - 1, a);
        }
    }

    /// `self · s_a`.
    pub fn mul_simple(&self, a: usize) -> Result<Self> {
        if a >= self.rank() {
            return Err(Error::InvalidWord(format!(
                "letter {a} out of range for rank {}",
                self.rank()
            )));
        }
        let mut w = self.clone();
        w.mul_simple_in_place(a);
        Ok(w)
    }

    /// `s_a · self`, acting on values.
    pub fn left_mul_simple(&self, a: usize) -> Result<Self> {
        Ok(self.inverse().mul_simple(a)?.inverse())
    }

    /// True if `self` sends the positive root `root` to a negative one
    /// under `self⁻¹`, i.e. `root ∈ Inv(self)`.
    fn inverts(&self, inv: &SignedPermutation, root: Root) -> bool {
        let (x, y) = root.to_difference();
        debug_assert!(root.max_index() <= self.rank());
        inv.value(x) < inv.value(y)
    }

    /// `Inv(w) = Φ⁺ ∩ wΦ⁻`, in the order of [`positive_roots`].
    pub fn inversion_set(&self) -> Vec<Root> {
        let inv = self.inverse();
        positive_roots(self.rank())
            .into_iter()
            .filter(|&r| self.inverts(&inv, r))
            .collect()
    }

    /// Coxeter length.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let n = w.len();
        let mut count = w.iter().filter(|&&x| x < 0).count();
        for i in 0..n {
            for j in i + 1..n {
                if w[i] > w[j] {
                    count += 1;
                }
                if -w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `a` with `ℓ(w s_a) < ℓ(w)`.
    pub fn is_right_descent(&self, a: usize) -> bool {
        if a == 0 {
            self.window[0] < 0
        } else {
            self.window[a - 1] > self.window[a]
        }
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&a| self.is_right_descent(a)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(k, &x)| x == k as i32 + 1)
    }

    /// The longest element `1̄ 2̄ … n̄`.
    pub fn longest(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i32).map(|x| -x).collect(),
        }
    }

    /// All `2^n n!` elements of `W(B_n)`.
    pub fn all(n: usize) -> Vec<SignedPermutation> {
        let mut out = Vec::new();
        for perm in (1..=n as i32).permutations(n) {
            for signs in 0..(1u32 << n) {
                let window = perm
                    .iter()
                    .enumerate()
                    .map(|(k, &x)| if signs >> k & 1 == 1 { -x } else { x })
                    .collect();
                out.push(SignedPermutation { window });
            }
        }
        out
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.window.iter().join(" "))
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses a window such as `-2 -1 4 -3 5` (commas also accepted).
    fn from_str(s: &str) -> Result<Self> {
        let window = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')'])
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad window entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::new(window)
    }
}
