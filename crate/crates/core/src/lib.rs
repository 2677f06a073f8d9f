//! Sign-set projection of pure virtual braids onto classical braids.
//!
//! Words in the generators `a_{ij}^{±1}` act on sign sets, an antisymmetric
//! `±1` labelling of strand pairs. Starting from the sign set of the natural
//! order, each letter is *good* when its two strands are adjacent in the state
//! before it. Deleting bad letters gives a map `d` that respects the defining
//! relations of the pure virtual braid group and of its quotient by
//! virtualization. Iterating `d` to a fixpoint lands on all-good words, and an
//! all-good word acting trivially can be redrawn as a classical pure braid up
//! to virtualization.
//!
//! Modules:
//!
//! - [`types`]: letters, words, group modes
//! - [`sign`]: sign sets, the action, realizability, adjacency
//! - [`classify`]: good/bad flags
//! - [`projection`]: `d`, its fixpoint, classical reconstruction
//! - [`rewrite`]: relations as moves and the bounded equivalence oracle
//! - [`diagram`]: `σ`/`v` diagrams and the map `o`
//! - [`classical`]: the classical braid group on `σ`-words
//! - [`campaign`]: exhaustive and randomized checks of the lemmas
//! - [`text`], [`render`], [`cli`]: text formats, ASCII output, command line

pub mod campaign;
pub mod classical;
pub mod classify;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod projection;
pub mod render;
pub mod rewrite;
pub mod search;
pub mod sign;
pub mod text;
pub mod types;

pub use classify::{classify, classify_from, AnnotatedWord};
pub use diagram::{end_permutation, o_map, DiagramLetter, DiagramWord};
pub use error::{Error, Result};
pub use projection::{d_stab, delete_bad, reconstruct_classical, ClassicalReconstruction};
pub use rewrite::{equivalent, neighbors, pair_exponent_sums, EquivalenceVerdict, SearchBounds};
pub use sign::{act, adjacent, apply_letter, is_realizable, prefix_states, Realization, SignSet};
pub use types::{six_letter_example, BraidWord, Exponent, GroupMode, Letter};
