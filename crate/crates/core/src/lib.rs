//! Exact computations in real Clifford algebras `C(p, q, z)` with null
//! generators: the radical split, simple/split structure of the
//! non-degenerate part, and the lattice of two-sided ideals.

pub mod blade;
pub mod cli;
pub mod error;
pub mod ideals;
pub mod linalg;
pub mod multivector;
pub mod oracle;
pub mod parse;
pub mod structure;

pub use blade::{
    blade_mul, blade_parts, generator_square, BasisBlade, BladeParts, Role, Signature,
};
pub use error::{Error, Result};
pub use ideals::{
    ascending_chain, classify, descending_chain, ideal_from_null_set, jacobson_radical,
    nil_radical, prime_ideals, ClassificationReport, Ideal, IdealRecord, NullSupport, Verdict,
};
pub use multivector::{Multivector, Nilpotency, Rational};
pub use parse::{parse_expression, parse_signature, ParsedSignature};
pub use structure::{
    central_idempotents, classify_pq, split_decompose, volume_element, AlgebraClass, SplitParts,
};
