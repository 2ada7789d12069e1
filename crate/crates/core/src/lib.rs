//! Limits, lower limits and upper limits of quotients `g/h` of real analytic
//! functions of several variables at a point where `h` has an isolated zero.
//!
//! The crate is organised bottom-up:
//!
//! - [`polyalg`]: exact rationals, polynomials, real algebraic numbers
//! - [`series`]: expression parsing and exact Taylor truncation
//! - [`puiseux`]: real Newton-Puiseux branches of plane curves
//! - [`ratlimit`]: limits of rational functions at the origin
//! - [`mlim`]: the degree-raising driver for analytic quotients
//! - [`cli`]: argument parsing and result rendering
//!
//! Each capability has a runnable program under `examples/`:
//!
//! ```bash
//! cargo run --example worked_example
//! ```

pub mod cli;
pub mod mlim;
pub mod polyalg;
pub mod puiseux;
pub mod ratlimit;
pub mod series;
