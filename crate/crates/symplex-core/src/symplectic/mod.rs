//! The matrix layer: the standard alternating form, its coordinate
//! pairing, elementary generators, diagonal conjugators over index
//! sets, generator words, subgroup shape predicates, and the
//! transvections acting on a split extension of the base module.

pub mod delta;
pub mod generators;
pub mod matrix;
pub mod perm;
pub mod shapes;
pub mod transvection;
pub mod word;

pub use delta::{delta, delta_conjugate, DeltaPair};
pub use generators::{se, se_diag, sw, sw_fault_count, tilde};
pub use matrix::SympMatrix;
pub use perm::{sigma, IndexSet, PairPermutation};
pub use shapes::{subgroup_shape, ShapeSpec};
pub use transvection::{combined_form, phi_q, transvection_delta, transvection_gamma, SplitVector};
pub use word::{random_word, word_eval, word_invert, GenWord, Token, WordContext, WordToken};
