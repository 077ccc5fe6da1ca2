//! Exact symbolic toolkit for determinant–derivative identities.
//!
//! The crate provides four layers:
//!
//! * [`poly`] — sparse multivariate polynomials over arbitrary-precision
//!   integers in the matrix indeterminates `x[i,j]`, with formal partial
//!   derivatives and exact integer evaluation.
//! * [`perm`] — permutations viewed as bipartite matchings, inversion and
//!   crossing counts, partial and partitioned permutations, partition
//!   schemes, and the sign bookkeeping for removing edges from a diagram.
//! * [`matrix`] — the generic matrix of indeterminates, minors and cominors,
//!   determinants by permutation expansion, and the determinant-of-partial-
//!   derivatives operator.
//! * [`lab`] — the verification harness: every identity becomes a checkable
//!   case that produces a machine-readable [`lab::VerificationReport`].
//!
//! All values are immutable after construction and all operations are pure,
//! so everything can be shared freely across threads.

pub mod lab;
pub mod matrix;
pub mod perm;
pub mod poly;
