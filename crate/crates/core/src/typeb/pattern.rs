//! Signed pattern containment and the vexillary elements of type `B`.

use itertools::Itertools;

use super::perm::SignedPermutation;

/// The minimal non-vexillary signed permutations; an element is vexillary
/// iff it contains none of them.
pub const VEXILLARY_PATTERNS: [&[i32]; 18] = [
    &[-3, 2, -1],
    &[-3, 2, 1],
    &[3, 2, -1],
    &[3, 2, 1],
    &[3, -1, 2],
    &[-2, 3, 1],
    &[-1, 3, 2],
    &[-4, -1, -2, 3],
    &[-4, 1, -2, 3],
    &[-3, -4, -1, -2],
    &[-3, -4, 1, -2],
    &[3, -4, -1, -2],
    &[3, -4, 1, -2],
    &[3, 1, 4, 2],
    &[-2, -3, 4, -1],
    &[2, 4, 1, 3],
    &[2, -3, 4, -1],
    &[2, 1, 4, 3],
];

/// True if some subsequence `w(i_1), …, w(i_k)` of the window has the signs
/// of `pattern` and its absolute values in the same relative order.
pub fn pattern_embeds(w: &SignedPermutation, pattern: &[i32]) -> bool {
    let k = pattern.len();
    let window = w.window();
    if k > window.len() {
        return false;
    }
    window.iter().combinations(k).any(|sub| {
        sub.iter().zip(pattern).all(|(&&x, &p)| (x < 0) == (p < 0))
            && (0..k)
                .tuple_combinations()
                .all(|(a, b)| (sub[a].abs() < sub[b].abs()) == (pattern[a].abs() < pattern[b].abs()))
    })
}

pub fn is_vexillary(w: &SignedPermutation) -> bool {
    VEXILLARY_PATTERNS.iter().all(|p| !pattern_embeds(w, p))
}
