//! Marked chain-order polytopes of Gelfand-Tsetlin posets, lex valuations of
//! flag-variety sections and their Newton-Okounkov value sets.
//!
//! ```
//! use chainorder::no_body::verify_main_theorem;
//! use chainorder::{gt_poset, mco_lattice_points, DominantWeight, Partition, TypeTag};
//!
//! let rho = DominantWeight::rho(TypeTag::A, 2);
//! let poset = gt_poset(TypeTag::A, 2, &rho)?;
//! let part = Partition::from_mask("010")?;
//! assert_eq!(mco_lattice_points(&poset, &part)?.len(), 8);
//! assert!(verify_main_theorem(2, &part, &rho)?.pass);
//! # Ok::<(), chainorder::Error>(())
//! ```

#![allow(clippy::needless_range_loop)]

pub mod chevalley;
pub mod crystal;
pub mod error;
pub mod no_body;
pub mod linalg;
pub mod poly;
pub mod poset;
pub mod polytope;
pub mod rational;
pub mod rep_basis;

pub use error::{Error, Result};
pub use polytope::{
    hull, hull_int, lattice_points, minkowski, unimodular_equiv, vertices, volume, AffineUnimodularMap, HPolytope,
    Ineq, LatticePointSet, VPolytope,
};
pub use rational::Rational;
pub use poly::{high_val, low_val, val, val_quotient, value_set, Mode, Poly, ValuationVector, VarOrder};
pub use poset::{
    gt_poset, mco_hrep, mco_lattice_points, order_lattice_points, transfer, DominantWeight, MarkedPoset, Partition,
    TypeTag,
};
