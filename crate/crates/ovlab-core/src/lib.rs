//! Numerical core for the `ovlab` toolbox.
//!
//! Everything here is pure: no I/O, no globals, no randomness. The crate is
//! `no_std`-compatible (with `alloc`); the companion `ovlab` crate carries the
//! CLI and file emitters.
//!
//! The geometry under study is the family of quadratic differentials
//! `(z^2 + 2m) dz^2` on the sphere, its branched double cover, the WKB
//! spectral networks it generates, and the flat connections attached to it.
//! Module layout:
//!
//! - [`moduli`]: parameter/tangent types shared by all modules,
//! - [`cover`]: the spectral cover, branch-tracked square roots and
//!   antiderivatives,
//! - [`quad`]: adaptive path quadrature for 1-forms on the cover,
//! - [`specfun`]: modified Bessel functions `K0`, `K1`,
//! - [`ovspace`]: the Ooguri-Vafa potential, twistor coordinates and metric
//!   norms,
//! - [`network`]: spectral-network tracing and anti-Stokes ray labelling,
//! - [`stokes`]: flat-section transport and Stokes data,
//! - [`gluing`]: regularized holonomies and symplectic pairings on the cover,
//! - [`hitchin`]: the self-duality PDE and regularized metric integrals.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod cover;
pub mod error;
pub mod gluing;
pub mod hitchin;
pub mod moduli;
pub mod network;
pub mod ovspace;
pub mod quad;
pub mod specfun;
pub mod stokes;

pub use error::{Error, Result};
pub use moduli::{ModuliPoint, TangentVector, TwistorParam};

pub type C64 = num_complex::Complex64;
