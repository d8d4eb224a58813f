//! Analytical eigenmodes of bent rectangular dielectric waveguides.
//!
//! A guide of rectangular cross-section `[r1, r2] × [−b/2, b/2]`, curved
//! around the `z` axis, separates in cylindrical coordinates into
//!
//! * a vertical slab problem ([`slab`]) fixing `β_w`, `β_s` and the in-plane
//!   momentum `h`,
//! * a radial Bessel problem ([`radial`]) fixing the azimuthal order `m`
//!   through the cross-product condition,
//!
//! which [`modes`] assembles into mode records with an average radial
//! position and effective index. [`oracle`] re-derives `h` by finite
//! differences, independently of the Bessel machinery in [`specfun`].
//!
//! ```
//! use bentguide::{assemble_catalog, Geometry, SolverOptions};
//!
//! let g = Geometry::new(0.5, 1.5, 0.5, 2.3, 1.0, 0.8)?;
//! let catalog = assemble_catalog(&g, &SolverOptions::default())?;
//! assert_eq!(catalog.len(), 12);
//! let fundamental = &catalog[0];
//! assert!((fundamental.m - 20.54).abs() < 0.01);
//! assert!(fundamental.r_av > g.mid_radius());
//! # Ok::<(), bentguide::Error>(())
//! ```
//!
//! The `book/` directory next to this crate walks through each step; its
//! code listings are compiled and run as doctests of this crate.

pub mod cli;
pub mod error;
pub mod geometry;
pub mod modes;
pub mod oracle;
pub mod radial;
pub mod roots;
pub mod slab;
pub mod specfun;

pub use error::{Error, Result};
pub use geometry::Geometry;
pub use modes::{assemble_catalog, FieldGrid, ModeRecord, RavWeighting, SolverOptions};
pub use radial::{RadialSolution, RadialSpectrum};
pub use slab::{Parity, SlabFamily, ZModeSolution};
pub use specfun::{bessel_jy, BesselPair};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/bessel.md")]
    mod bessel {}
    #[doc = include_str!("../../../book/src/slab.md")]
    mod slab {}
    #[doc = include_str!("../../../book/src/radial.md")]
    mod radial {}
    #[doc = include_str!("../../../book/src/catalog.md")]
    mod catalog {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/reproduction.md")]
    mod reproduction {}
}
