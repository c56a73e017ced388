//! Exact arithmetic for three constructive presentations of ordinals:
//!
//! * [`cnf`] — Cantor normal forms as validated binary trees. Order,
//!   arithmetic, subtraction, division and classification are all decidable.
//! * [`brouwer`] — Brouwer trees built from zero, successor and limits of
//!   strictly increasing sequences. Order queries are fuel-bounded and
//!   three-valued; CNF certificates restore decidability where available.
//! * [`ewo`] — finite extensional wellfounded orders with exhaustive
//!   checkers, simulation search and the classical order constructions.
//!
//! The [`axiom`] module packages the shared axiomatic expectations (strict
//! and weak order laws, zero/successor/supremum behaviour, classification,
//! arithmetic specifications) as a seeded property suite that runs against
//! any of the three carriers. [`oracle`] holds an independent exponent-list
//! model of the ordinals below omega^omega used as ground truth in
//! differential tests.

pub mod axiom;
pub mod brouwer;
pub mod cnf;
pub mod ewo;
pub mod oracle;
pub mod sample;

pub use brouwer::{BisimVerdict, Brw, BrwSeq, Verdict};
pub use cnf::{Cnf, CnfClass, CnfError, CnfTree};
pub use ewo::{FiniteOrder, OrderError, OrderReport, Simulation};
