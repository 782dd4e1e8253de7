//! Exact log and local BPS numbers of del Pezzo surface pairs `(S, E)`.
//!
//! A del Pezzo surface is modelled numerically by its Picard lattice: either
//! the blowup `S_r` of the projective plane in `r <= 8` general points, with
//! basis `h, e_1, .., e_r`, or `P1 x P1` with basis `h_1, h_2`. Curve classes
//! are integer coordinate vectors in that basis. Every invariant computed by
//! this crate is an exact rational number ([`Rat`]); no floating point is
//! involved anywhere.
//!
//! Module map:
//!
//! * [`lattice`]: surfaces, curve classes, intersection pairing, genus.
//! * [`exceptional`]: line and conic classes, the count `eta`, blow-downs.
//! * [`numtheory`]: Moebius function, generalized binomials, Jordan totient.
//! * [`bps`]: multiple-cover conversions between GW and BPS numbers.
//! * [`series`]: truncated power series over the rationals.
//! * [`quiver`]: DT invariants of loop quivers.
//! * [`torsion`]: points of `E(dh)` on the plane and their primitivity strata.
//! * [`tables`]: closed-form log and local BPS numbers for genus `<= 2`.
//! * [`p2cycles`]: component-by-component evaluation for `dh`, `d <= 4`.

pub mod bps;
pub mod exceptional;
pub mod lattice;
pub mod numtheory;
pub mod p2cycles;
pub mod quiver;
pub mod series;
pub mod tables;
pub mod torsion;

mod error;

pub use error::{Error, Result};
pub use lattice::{CurveClass, Surface, SurfaceKind};
pub use numtheory::Rat;
