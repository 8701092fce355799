//! Rationally-extended Morse and radial-oscillator potentials.
//!
//! The crate builds the conventional Morse potential, its first-order SUSY
//! partners generated from Laguerre-type seed solutions (the isospectral
//! type II and the state-adding type III extensions), and the quasi-exactly
//! solvable potentials obtained by point canonical transformations between
//! radial-oscillator and Morse problems.
//!
//! Every analytic statement is checkable: polynomials are exact rationals,
//! nodelessness is certified with Sturm sequences, and spectra can be
//! compared against an independent finite-difference eigensolver in
//! [`numerics`].
//!
//! Units are fixed to `hbar = 2m = 1`.

pub mod error;
pub mod extensions;
pub mod laguerre;
pub mod morse;
pub mod numerics;
pub mod pct;
pub mod poly;
pub mod polyode;
pub mod potential;
pub mod rational;
pub mod roots;
pub mod susy;

pub use error::{Error, Result};
pub use extensions::{
    build_extension, enlarged_partner, explicit_rational_part, extension_spectrum, extension_wavefunction,
    ode_residual, y_identity_residual, y_polynomial, EnlargedPartner, ExtendedPotential, ExtensionSpec, Family,
    YPolynomial,
};
pub use laguerre::{laguerre_coeffs, laguerre_eval, LaguerreSpec, Orientation};
pub use morse::{morse_potential, morse_spectrum, morse_wavefunction, nu_max, MorseParams, MorseState};
pub use pct::{
    pct_forward, pct_inverse, qes_morse_build, qes_ro_build, ro_extended_potential, ro_potential, RadialParams,
    RoExtensionSpec, RoType,
};
pub use poly::PolyQ;
pub use potential::Potential;
pub use rational::{parse_rational, Q};
pub use roots::{count_roots_interval, Bound, OpenInterval};
pub use susy::{classify_case, FactoredSeed, SeedFunction, Superpotential, SusyCase, SusyPair};
