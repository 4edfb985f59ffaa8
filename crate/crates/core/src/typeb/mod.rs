//! The hyperoctahedral group `W(B_n)`: signed permutations, roots, words
//! and reflection orders.

pub mod pattern;
pub mod perm;
pub mod reflection;
pub mod root;
pub mod word;

pub use pattern::{is_vexillary, pattern_embeds, VEXILLARY_PATTERNS};
pub use perm::SignedPermutation;
pub use reflection::{
    is_valid_reflection_order, reflection_order, reflection_order_to_word, ReflectionOrder, ReflectionOrderChecker,
};
pub use root::{positive_roots, Root};
pub use word::{count_reduced_words, enumerate_reduced_words, Word, DEFAULT_REDUCED_WORD_CAP};
