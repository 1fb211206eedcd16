//! Generalized inverses over finite rings given by explicit Cayley tables.
//!
//! The crate is organised bottom-up:
//!
//! * [`ring`] and [`construct`]: immutable table rings, possibly non-unital and
//!   possibly carrying an involution, plus the usual test-ring generators.
//! * [`sets`]: annihilators, principal multiple-sets, kernels and commutants as
//!   bitsets, precomputed once per ring.
//! * [`inverses`]: verified search for (b,c)-inverses, annihilator (b,c)-inverses
//!   and their one-sided variants, Moore–Penrose, Drazin and core inverses.
//! * [`lab`]: exhaustive checkers that enumerate every instance of a statement
//!   on a ring and collect counterexamples.
//!
//! Everything here is `no_std` + `alloc`; file formats, threading and the CLI live
//! in the `ringinv` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod construct;
pub mod inverses;
pub mod lab;
pub mod mask;
pub mod ring;
pub mod sets;
pub mod unital;
mod validate;

pub use construct::{
    attach_involution, closure_elements, make_direct_product, make_matrix_ring, make_zmod,
    subring_closure, transpose_permutation, RingFactory,
};
pub use inverses::{InverseCertificate, InverseError, InverseKind, SidedSolutionSet, Violation};
pub use lab::{Counterexample, Lab, LabConfig, ScanResult, Sink, Theorem, Value};
pub use mask::SubsetMask;
pub use ring::{Arith, Elem, FiniteRing, RingError, RingTables, DEFAULT_SIZE_CAP};
pub use sets::{RingContext, Side};
pub use unital::{adjoin_identity, Mult, UnitalExtension};
pub use validate::{validate_axioms, Axiom, AxiomCheck, ValidationReport};
