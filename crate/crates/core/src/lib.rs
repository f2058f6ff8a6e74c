//! Exact combinatorics of rational affine hyperplane arrangements: the
//! bounded complex, the intersection pairing of its top-dimensional
//! regions, the independence complex of the normals' matroid with the
//! signed cycle map into it, and exact definiteness certificates.
//!
//! ```
//! use arrangement_pairing::{fixtures, pairing, rational::Verdict};
//!
//! let report = pairing::verify(&fixtures::pts3()).unwrap();
//! assert_eq!(report.phi.rows(), vec![vec![-2, 1], vec![1, -2]]);
//! assert_eq!(report.phi_verdict, Verdict::NegativeDefinite);
//! ```

pub mod arrangement;
pub mod error;
pub mod fixtures;
pub mod nerve;
pub mod pairing;
pub mod rational;

pub use error::{Error, Result};
