//! Exact homology of braid groups and type-B Artin groups with coefficients
//! in braided vector spaces.
//!
//! Coefficients come from (left-)braided vector spaces over ℚ or a cyclotomic
//! field. Three chain complexes compute the same homology: the Fox–Neuwirth
//! complex with induced coefficients, the punctured-plane complex, and a bar
//! complex over the quantum shuffle algebra. [`oracle`] holds the closed-form
//! answers for one-dimensional coefficients.
//!
//! ```
//! use artin_core::braid::{Family, LeftBraidedSpace};
//! use artin_core::complexes::{artin_homology, Coefficients, Route};
//! use artin_core::field::Field;
//!
//! let f = Field::rationals();
//! let one = f.one();
//! let space = LeftBraidedSpace::one_dim(&one, &one, Some(&one)).unwrap();
//! let table = artin_homology(Family::B, 3, &Coefficients::LeftBraided(space), Route::D, None).unwrap();
//! assert_eq!(table.dims_vec(), vec![1, 2, 2, 1]);
//! ```

pub mod braid;
pub mod complexes;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod linear;
pub mod matrix;
pub mod oracle;
pub mod par;
pub mod shuffle_algebra;
pub mod shuffles;

pub use error::{Error, Result};
