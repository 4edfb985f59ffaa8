use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A positive root of type `B`, or the doubled label `2e_a` that only
/// appears on the extra boxes of an extended trapezoid.
///
/// Indices are 1-based; in `Minus(b, a)` and `Plus(b, a)` always `b > a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Root {
    /// `e_a`
    Short(usize),
    /// `e_b - e_a`
    Minus(usize, usize),
    /// `e_b + e_a`
    Plus(usize, usize),
    /// `2e_a`
    Double(usize),
}

impl Root {
    /// The positive root `e_x - e_y` in signed-index form, where
    /// `e_{-k} = -e_k` and `e_0 = 0`. Returns `None` when the vector is zero
    /// or negative.
    pub fn from_difference(x: i32, y: i32) -> Option<Root> {
        if x <= y {
            return None;
        }
        let (ax, ay) = (x.unsigned_abs() as usize, y.unsigned_abs() as usize);
        Some(match (x.signum(), y.signum()) {
            (1, 0) => Root::Short(ax),
            (0, -1) => Root::Short(ay),
            (1, 1) => Root::Minus(ax, ay),
            (1, -1) if ax == ay => Root::Double(ax),
            (1, -1) => Root::Plus(ax.max(ay), ax.min(ay)),
            // both negative: e_{|y|} - e_{|x|} with |y| > |x|
            (-1, -1) => Root::Minus(ay, ax),
            _ => unreachable!("x > y excludes the remaining sign patterns"),
        })
    }

    /// Signed-index form `(x, y)` with `self = e_x - e_y` and `x > y`.
    pub fn to_difference(self) -> (i32, i32) {
        match self {
            Root::Short(a) => (a as i32, 0),
            Root::Minus(b, a) => (b as i32, a as i32),
            Root::Plus(b, a) => (b as i32, -(a as i32)),
            Root::Double(a) => (a as i32, -(a as i32)),
        }
    }

    /// Coordinates in `R^n`.
    pub fn to_vector(self, n: usize) -> Vec<i32> {
        let mut v = vec![0; n];
        match self {
            Root::Short(a) => v[a - 1] = 1,
            Root::Minus(b, a) => {
                v[b - 1] = 1;
                v[a - 1] = -1;
            }
            Root::Plus(b, a) => {
                v[b - 1] = 1;
                v[a - 1] = 1;
            }
            Root::Double(a) => v[a - 1] = 2,
        }
        v
    }

    /// Inverse of [`Root::to_vector`] on positive roots and doubled labels.
    pub fn from_vector(v: &[i32]) -> Option<Root> {
        let nz: Vec<(usize, i32)> = v
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k + 1, c))
            .collect();
        match nz.as_slice() {
            [(a, 1)] => Some(Root::Short(*a)),
            [(a, 2)] => Some(Root::Double(*a)),
            [(a, -1), (b, 1)] => Some(Root::Minus(*b, *a)),
            [(a, 1), (b, 1)] => Some(Root::Plus(*b, *a)),
            _ => None,
        }
    }

    /// Largest coordinate index involved.
    pub fn max_index(self) -> usize {
        match self {
            Root::Short(a) | Root::Double(a) => a,
            Root::Minus(b, _) | Root::Plus(b, _) => b,
        }
    }

    pub fn is_doubled(self) -> bool {
        matches!(self, Root::Double(_))
    }

    /// The index of the simple root this is, if any.
    pub fn simple_index(self) -> Option<usize> {
        match self {
            Root::Short(1) => Some(0),
            Root::Minus(b, a) if b == a + 1 => Some(a),
            _ => None,
        }
    }

    /// The simple root `α_a`: `e_1` for `a = 0`, else `e_{a+1} - e_a`.
    pub fn simple(a: usize) -> Root {
        if a == 0 {
            Root::Short(1)
        } else {
            Root::Minus(a + 1, a)
        }
    }
}

/// All positive roots of `B_n`.
pub fn positive_roots(n: usize) -> Vec<Root> {
    let mut out: Vec<Root> = (1..=n).map(Root::Short).collect();
    for b in 1..=n {
        for a in 1..b {
            out.push(Root::Minus(b, a));
            out.push(Root::Plus(b, a));
        }
    }
    out
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Root::Short(a) => write!(f, "e{a}"),
            Root::Minus(b, a) => write!(f, "e{b}-e{a}"),
            Root::Plus(b, a) => write!(f, "e{b}+e{a}"),
            Root::Double(a) => write!(f, "2e{a}"),
        }
    }
}

impl FromStr for Root {
    type Err = Error;

    fn from_str(s: &str) -> Result<Root> {
        let bad = || Error::Parse(format!("bad root {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let index = |p: &str| -> Result<usize> {
            let n: usize = p.strip_prefix('e').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if n == 0 {
                Err(bad())
            } else {
                Ok(n)
            }
        };
        if t.is_empty() {
            return Err(bad());
        }
        if let Some(rest) = t.strip_prefix('2') {
            return Ok(Root::Double(index(rest)?));
        }
        if let Some(k) = t[1..].find(['+', '-']).map(|k| k + 1) {
            let (x, y) = (index(&t[..k])?, index(&t[k + 1..])?);
            let root = if &t[k..=k] == "+" {
                Root::from_difference(x as i32, -(y as i32))
            } else {
                Root::from_difference(x as i32, y as i32)
            };
            return match root {
                Some(r) if !r.is_doubled() => Ok(r),
                _ => Err(Error::Parse(format!("{s:?} is not a positive root"))),
            };
        }
        Ok(Root::Short(index(&t)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_normalization() {
        assert_eq!(Root::from_difference(3, 2), Some(Root::Minus(3, 2)));
        assert_eq!(Root::from_difference(1, -3), Some(Root::Plus(3, 1)));
        assert_eq!(Root::from_difference(-1, -3), Some(Root::Minus(3, 1)));
        assert_eq!(Root::from_difference(0, -2), Some(Root::Short(2)));
        assert_eq!(Root::from_difference(2, -2), Some(Root::Double(2)));
        assert_eq!(Root::from_difference(2, 3), None);
        assert_eq!(Root::from_difference(-2, 1), None);
        assert_eq!(Root::from_difference(0, 0), None);
        for r in positive_roots(4) {
            let (x, y) = r.to_difference();
            assert_eq!(Root::from_difference(x, y), Some(r));
            assert_eq!(Root::from_vector(&r.to_vector(4)), Some(r));
        }
    }

    #[test]
    fn text_form() {
        for s in ["e3-e2", "e3+e1", "e3", "2e3"] {
            assert_eq!(s.parse::<Root>().unwrap().to_string(), s);
        }
        assert_eq!("e1+e4".parse::<Root>().unwrap(), Root::Plus(4, 1));
        assert!("e2-e3".parse::<Root>().is_err());
        assert!("e0".parse::<Root>().is_err());
        assert!("x3".parse::<Root>().is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(positive_roots(3).len(), 9);
        assert_eq!(positive_roots(5).len(), 25);
    }
}
