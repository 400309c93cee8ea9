//! Exact character theory of finite Weyl groups.
//!
//! The crate enumerates a Weyl group as permutations of its roots, computes
//! its conjugacy classes and integer character table, and implements parabolic
//! induction and restriction of class functions. On top of that sits the
//! Deligne–Lusztig operator on virtual characters,
//! `DL(V) = sum_I (-1)^|I| ind_{W_I} res_{W_I} V`, and checks of the
//! identities it satisfies: `DL = sgn ⊗ -`, `DL ∘ DL = Id`, Frobenius
//! reciprocity, the Mackey formula and the Springer pairing.
//!
//! ```
//! use weyl_core::{dl, CartanType, Weyl};
//!
//! let weyl = Weyl::new(CartanType::A, 2)?;
//! assert_eq!(weyl.group().order(), 6);
//! let pairs = dl::springer_table(&weyl)?;
//! assert_eq!(dl::render_pairing(&pairs), "(3) ↔ (1,1,1); (2,1) fixed");
//! # Ok::<(), weyl_core::Error>(())
//! ```

pub mod chars;
pub mod dl;
mod error;
pub mod grp;
pub mod indres;
pub mod linalg;
pub mod partition;
pub mod rootsys;
pub mod verify;
mod weyl;

pub use error::{Error, Result};
pub use rootsys::{CartanDatum, CartanType};
pub use weyl::{Options, Weyl};
