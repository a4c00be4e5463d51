//! Exact-arithmetic toolkit for geometric-invariant-theory semistability
//! questions about degenerating families, at desk scale.
//!
//! The library covers five areas, all over exact rationals:
//!
//! - [`curve`]: dual graphs of weighted pointed nodal curves with degree
//!   bookkeeping for the dualizing sheaf, its log twist, and subcurves.
//! - [`chow`]: the subcurve criterion for Chow (semi)stability of a
//!   polarized pointed nodal curve, its asymptotic form, and a box search
//!   for semistabilizing polarization twists.
//! - [`quotient`]: Hirzebruch-Jung chains of cyclic quotient surface
//!   singularities, class-T recognition, fundamental-cycle multiplicities,
//!   the Mumford multiplicity obstruction, and weighted-blowup numerics.
//! - [`heights`]: Donaldson-Futaki invariants and geometric heights as
//!   exact polynomials in supplied intersection numbers, with the
//!   leading-term identity tying the two together.
//! - [`torus`]: Hilbert-Mumford weights and semistability for diagonal
//!   torus actions, plus heights and fiberwise profiles of sections of
//!   split projective bundles over a rational curve.
//!
//! No floating point participates in any verdict.

pub mod chow;
pub mod curve;
pub mod heights;
pub mod poly;
pub mod quotient;
pub mod random;
pub mod rational;
pub mod simplex;
pub mod torus;

pub use chow::{
    check_asymptotic, check_finite, chow_margin, ph_threshold, twist_search, StabilityVerdict,
    Status,
};
pub use curve::{Multidegree, NodalCurve, Subcurve};
pub use quotient::{hj_contract, hj_expand, multiplicity, t_recognize, ChainData, QuotientType};
pub use rational::Rational;
