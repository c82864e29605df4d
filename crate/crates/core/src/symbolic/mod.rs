//! Exact polynomial arithmetic and verification of explicit monads.

pub mod field;
pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod presentation;
pub mod verify;

pub use field::{Field, PrimeField, Rationals};
pub use groebner::{degeneracy_locus_empty, groebner_basis, normal_form, s_polynomial};
pub use linalg::{rank, Matrix};
pub use poly::{Monomial, Poly};
pub use presentation::{MapKind, MonadPresentation};
pub use verify::{verify_monad, Outcome, VerificationReport, VerifyConfig, BACKUP_PRIME, DEFAULT_PRIME};
