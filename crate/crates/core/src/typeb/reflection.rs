//! Reflection orders of reduced words and their biconvexity test.

use std::collections::{HashMap, HashSet};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::perm::SignedPermutation;
use super::root::{positive_roots, Root};
use super::word::Word;
use crate::error::{Error, Result};

/// A sequence of distinct positive roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReflectionOrder {
    roots: Vec<Root>,
}

impl ReflectionOrder {
    pub fn new(roots: Vec<Root>) -> Result<Self> {
        if let Some(r) = roots.iter().find(|r| r.is_doubled()) {
            return Err(Error::NotReflectionOrder(format!("{r} is not a root")));
        }
        if roots.iter().collect::<HashSet<_>>().len() != roots.len() {
            return Err(Error::NotReflectionOrder("roots repeat".into()));
        }
        Ok(ReflectionOrder { roots })
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

impl fmt::Display for ReflectionOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.roots.iter().join(", "))
    }
}

/// `γ_j = s_{a_1} ⋯ s_{a_{j-1}} α_{a_j}` for a reduced word `a`.
pub fn reflection_order(word: &Word) -> Result<ReflectionOrder> {
    word.require_reduced()?;
    let mut v = SignedPermutation::identity(word.rank());
    let mut roots = Vec::with_capacity(word.len());
    for &a in word.letters() {
        let (x, y) = Root::simple(a).to_difference();
        let root = Root::from_difference(v.value(x), v.value(y)).expect("reduced words only cross positive roots");
        roots.push(root);
        v.mul_simple_in_place(a);
    }
    Ok(ReflectionOrder { roots })
}

/// The word `a` of rank `n` whose reflection order is `order`.
///
/// At each step the next root, pulled back by the prefix product, must be a
/// simple root; its index is the next letter.
pub fn reflection_order_to_word(order: &ReflectionOrder, n: usize) -> Result<Word> {
    if let Some(r) = order.roots().iter().find(|r| r.max_index() > n) {
        return Err(Error::NotReflectionOrder(format!("{r} is not a root of B_{n}")));
    }
    let mut v = SignedPermutation::identity(n);
    let mut inv = v.inverse();
    let mut letters = Vec::with_capacity(order.len());
    for (step, &root) in order.roots().iter().enumerate() {
        let (x, y) = root.to_difference();
        let pulled = Root::from_difference(inv.value(x), inv.value(y));
        let a = pulled.and_then(Root::simple_index).ok_or_else(|| {
            Error::NotReflectionOrder(format!(
                "step {}: {root} pulls back to {}, which is not simple",
                step + 1,
                pulled.map_or_else(|| "a negative root".to_string(), |p| p.to_string())
            ))
        })?;
        letters.push(a);
        v.mul_simple_in_place(a);
        inv = v.inverse();
    }
    Word::new(letters, n)
}

/// The biconvexity criterion: `order` is a reflection order of `w` iff for
/// all triples `α, β, α+β ∈ Φ⁺` with `α, α+β ∈ Inv(w)`, `α` precedes `α+β`
/// when `β ∉ Inv(w)`, and `α+β` sits strictly between `α` and `β` when
/// `β ∈ Inv(w)`.
///
/// Errors if the roots of `order` are not exactly `Inv(w)`.
pub fn is_valid_reflection_order(order: &ReflectionOrder, w: &SignedPermutation) -> Result<bool> {
    ReflectionOrderChecker::new(w).check(order)
}

/// [`is_valid_reflection_order`] for many orders of the same element: the
/// relevant root triples are found once.
#[derive(Debug, Clone)]
pub struct ReflectionOrderChecker {
    w: SignedPermutation,
    inv: HashSet<Root>,
    // (α, β or None when β ∉ Inv(w), α+β)
    triples: Vec<(Root, Option<Root>, Root)>,
}

impl ReflectionOrderChecker {
    pub fn new(w: &SignedPermutation) -> Self {
        let inv: HashSet<Root> = w.inversion_set().into_iter().collect();
        let triples = root_triples(w.rank())
            .into_iter()
            .filter(|(alpha, _, sum)| inv.contains(alpha) && inv.contains(sum))
            .map(|(alpha, beta, sum)| (alpha, inv.contains(&beta).then_some(beta), sum))
            .collect();
        ReflectionOrderChecker {
            w: w.clone(),
            inv,
            triples,
        }
    }

    pub fn check(&self, order: &ReflectionOrder) -> Result<bool> {
        let given: HashSet<Root> = order.roots().iter().copied().collect();
        if self.inv != given || given.len() != order.len() {
            return Err(Error::NotReflectionOrder(format!(
                "roots [{order}] are not the inversion set of {}",
                self.w
            )));
        }
        let pos: HashMap<Root, usize> = order.roots().iter().enumerate().map(|(k, &r)| (r, k)).collect();
        Ok(self.triples.iter().all(|(alpha, beta, sum)| {
            let (pa, ps) = (pos[alpha], pos[sum]);
            match beta {
                None => pa < ps,
                Some(beta) => {
                    let pb = pos[beta];
                    (pa < ps && ps < pb) || (pb < ps && ps < pa)
                }
            }
        }))
    }
}

/// Every ordered triple `(α, β, α+β)` of positive roots of `B_n`.
pub fn root_triples(n: usize) -> Vec<(Root, Root, Root)> {
    let roots = positive_roots(n);
    let vectors: Vec<Vec<i32>> = roots.iter().map(|r| r.to_vector(n)).collect();
    let mut out = Vec::new();
    for (i, &alpha) in roots.iter().enumerate() {
        for (j, &beta) in roots.iter().enumerate() {
            let sum: Vec<i32> = vectors[i].iter().zip(&vectors[j]).map(|(a, b)| a + b).collect();
            if let Some(s) = Root::from_vector(&sum).filter(|s| !s.is_doubled()) {
                out.push((alpha, beta, s));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::typeb::word::enumerate_reduced_words;

    fn roots(s: &[&str]) -> Vec<Root> {
        s.iter().map(|r| r.parse().unwrap()).collect()
    }

    #[test]
    fn reflection_order_of_21031() {
        let a = Word::parse("21031", Some(4)).unwrap();
        let ro = reflection_order(&a).unwrap();
        assert_eq!(
            ro.roots(),
            roots(&["e3-e2", "e3-e1", "e3", "e4-e2", "e3+e1"]).as_slice()
        );
        assert_eq!(reflection_order_to_word(&ro, 4).unwrap(), a);
    }

    #[test]
    fn reflection_order_of_trapezoid_word() {
        let a = Word::parse("101213014201324", Some(5)).unwrap();
        let ro = reflection_order(&a).unwrap();
        let expected = roots(&[
            "e2-e1", "e2", "e2+e1", "e3+e2", "e3-e1", "e4+e2", "e3", "e3+e1", "e5+e2", "e4+e3", "e1", "e4+e1", "e5+e3",
            "e5+e1", "e3-e2",
        ]);
        assert_eq!(ro.roots(), expected.as_slice());
        assert_eq!(reflection_order_to_word(&ro, 5).unwrap(), a);
    }

    #[test]
    fn single_letter() {
        let a = Word::parse("0", Some(1)).unwrap();
        let ro = reflection_order(&a).unwrap();
        assert_eq!(ro.roots(), &[Root::Short(1)]);
        let back = reflection_order_to_word(&ReflectionOrder::new(vec![Root::Short(1)]).unwrap(), 1).unwrap();
        assert_eq!(back.letters(), &[0]);
    }

    #[test]
    fn rejects_non_reduced_and_bad_orders() {
        assert!(reflection_order(&Word::parse("00", None).unwrap()).is_err());
        let bad = ReflectionOrder::new(roots(&["e2", "e2-e1"])).unwrap();
        assert!(reflection_order_to_word(&bad, 2).is_err());
        assert!(ReflectionOrder::new(roots(&["e1", "e1"])).is_err());
        assert!(ReflectionOrder::new(vec![Root::Double(1)]).is_err());
    }

    #[test]
    fn round_trip_over_longest_b2() {
        let w0: SignedPermutation = "-1 -2".parse().unwrap();
        for a in enumerate_reduced_words(&w0, 16).unwrap() {
            let ro = reflection_order(&a).unwrap();
            assert_eq!(reflection_order_to_word(&ro, 2).unwrap(), a);
            assert!(is_valid_reflection_order(&ro, &w0).unwrap());
        }
    }

    #[test]
    fn exactly_two_of_24_orders_are_valid_for_longest_b2() {
        let w0: SignedPermutation = "-1 -2".parse().unwrap();
        let inv = w0.inversion_set();
        let valid = inv
            .iter()
            .copied()
            .permutations(4)
            .filter(|p| is_valid_reflection_order(&ReflectionOrder::new(p.clone()).unwrap(), &w0).unwrap())
            .count();
        assert_eq!(valid, 2);
        let bad = ReflectionOrder::new(roots(&["e2", "e2-e1", "e2+e1", "e1"])).unwrap();
        assert!(!is_valid_reflection_order(&bad, &w0).unwrap());
    }

    #[test]
    fn wrong_root_set_is_an_error() {
        let w: SignedPermutation = "-1 2".parse().unwrap();
        let order = ReflectionOrder::new(roots(&["e2"])).unwrap();
        assert!(is_valid_reflection_order(&order, &w).is_err());
    }
}
