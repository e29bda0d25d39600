//! Exact-arithmetic computations on graded Betti diagrams and h-vectors.
//!
//! A *diagram* of codimension `p` is a finitely supported matrix of rational
//! numbers `D[i][j]`, with columns `0..=p` (homological degree) and integer
//! rows (internal degree), whose alternating generating function
//! `S(t) = sum (-1)^i D[i][j] t^j` is divisible by `(1-t)^p`. The quotient
//! `h(t) = S(t)/(1-t)^p` is the h-vector and `h(1)` the multiplicity.
//!
//! On top of the diagram model this crate provides:
//!
//! * Herzog-Kuhl pure diagrams, greedy Boij-Soderberg decomposition into
//!   chains of pure diagrams, and cone-membership tests ([`pure`]);
//! * the consecutive-cancellation calculus, including certificates between
//!   diagrams with the same h-vector ([`cancel`]);
//! * h-vector conditions: maximal Betti combinations, compressed-level
//!   combinations, rational/dual cancellability, weak-Lefschetz splits
//!   ([`analysis`]);
//! * exact lexicographic Betti numbers of quotients of free modules
//!   generated in degree zero, via Macaulay growth and Eliahou-Kervaire
//!   counting ([`lex`]);
//! * multiplicity bounds: Herzog-Huneke-Srinivasan shift bounds, Zanello
//!   index bounds, and a codimension-3 upper-bound certificate ([`bounds`]);
//! * exhaustive enumeration and classification of candidate h-vectors
//!   ([`census`]).
//!
//! All arithmetic is exact (`BigRational`); no floating point anywhere.
//! Every value is immutable after construction and every operation is a pure
//! function, so everything here is safe to share across threads.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analysis;
pub mod bounds;
pub mod cancel;
pub mod census;
pub mod diagram;
pub mod hvector;
pub mod lex;
pub mod pure;
pub mod rational;

pub use diagram::{BettiDiagram, DiagramError, Shifts};
pub use hvector::HVector;
pub use rational::Rational;
