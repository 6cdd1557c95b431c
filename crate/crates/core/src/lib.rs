//! Radial diffusion on three-dimensional hyperbolic space.
//!
//! The crate evaluates the transition density of radial Brownian motion on
//! H₃ in closed form, and cross-validates it along four independent routes:
//!
//! * a Hermite-series expansion and the Laplace-domain form it resums,
//! * a Crank–Nicolson finite-difference solver for the radial diffusion
//!   equation,
//! * Monte Carlo sampling (exact inverse-CDF draws and Euler–Maruyama
//!   paths of the radial stochastic process),
//! * quadrature identities (normalization, Chapman–Kolmogorov composition).
//!
//! On top of the kernel sits a small physics layer: interpreting the radial
//! coordinate as radial rapidity ρ = asinh(|p|/m) turns the kernel into a
//! model for transverse-momentum spectra, which can be fit to data by χ²
//! minimization.

pub mod check;
pub mod fit;
pub mod grid;
pub mod kernel;
pub mod numeric;
pub mod pde;
pub mod quad;
pub mod sim;
pub mod spectra;

pub use grid::RadialGrid;
pub use kernel::{
    eval_g, eval_hermite_series, eval_kernel, eval_kernel_origin, eval_laplace_g,
    normalization_integral, pde_residual, DiffusionParams, KernelQuery, LaplaceQuery, LogDensity,
    SeriesConfig,
};
