//! Exact-arithmetic engine for incidence theorems encoded as graph
//! connections on surface maps.
//!
//! The crate is organised bottom-up:
//!
//! * [`ring`] — exact elements of the supported coefficient rings
//!   (rationals, prime fields, rational quaternions, dual numbers,
//!   matrix rings) together with unit and normal-subgroup predicates;
//! * [`linalg`] — row reduction, solving and rank over division rings
//!   with the left-module convention, plus base-field oracles;
//! * [`surface`] — combinatorial maps on closed orientable surfaces,
//!   the catalog of named maps, tilings and tree–cotree decompositions;
//! * [`connection`] — unit-group connections on map skeletons:
//!   holonomy, gauge moves, flatness defects and defect construction;
//! * [`projective`] — points and hyperplanes over a ring, the
//!   Menelaus/Ceva multiratio and coherence predicates;
//! * [`realize`] — realizations of subdivisions and tilings, extraction
//!   of connections from realizations and synthesis in the other
//!   direction;
//! * [`engine`] — end-to-end theorem checking, counterexample
//!   certificates and fixture reproduction.

pub mod connection;
pub mod engine;
pub mod linalg;
pub mod projective;
pub mod realize;
pub mod ring;
pub mod surface;
