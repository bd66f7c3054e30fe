//! Characteristic data of torus actions on pseudomanifolds.
//!
//! A torus pseudomanifold `X` with an effective `T^m`-action is recorded by
//! its orbit space `Q`, a characteristic functor `lambda` sending each
//! stratum of `Q` to a subtorus of `T^m`, and a Chern class `c`. This crate
//! validates such data, decides (weak) isomorphism, builds cellular models
//! over graph bases and classifies the low-dimensional cases.

pub mod chardata;
pub mod classify;
pub mod document;
pub mod iso;
pub mod lattice;
pub mod model;
pub mod report;
pub mod strata;

pub use chardata::{CharacteristicData, CharacteristicFunctor, ChernClass, DataError, Lmn};
pub use iso::{decide_iso, IsoVerdict, Witness};
pub use lattice::{IntMatrix, PrimitiveSubtorus, PrimitiveVector};
pub use model::{build_canonical_complex, homology, ChainComplex, HomologyProfile};
pub use strata::{OrbitSpace, StratumId};
