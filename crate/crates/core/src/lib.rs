//! Cayley graphs on dihedral groups `D_2n`: construction, closed-form and
//! exact spectra, and the isomorphism classification of cubic Cayley graphs
//! on `D_2p` for odd primes `p`.
//!
//! ```
//! use dihedral_cayley::cayley::ConnectionSet;
//! use dihedral_cayley::classify::classify_all;
//! use dihedral_cayley::spectra::cospectral;
//!
//! let s = ConnectionSet::parse("b, b*a, b*a^2", 7).unwrap();
//! let t = ConnectionSet::parse("b, b*a, b*a^4", 7).unwrap();
//! assert!(cospectral(&s, &t).unwrap());
//! assert_eq!(classify_all(7).unwrap().len(), 3);
//! ```

pub mod cayley;
pub mod classify;
pub mod dihedral;
pub mod error;
pub mod export;
pub mod graph;
pub mod iso;
pub mod number_theory;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
