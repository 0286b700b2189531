//! Local signatures of fiber germs of fibered surfaces.
//!
//! Given an effective divisor `D ~ a*lambda - sum b_i*delta_i` on the moduli
//! space of stable curves, each fiber germ `F` of a fibration `f: S -> B`
//! gets a local Hodge contribution `lambda_D(F)`, a local Euler contribution
//! `delta(F)`, and a local signature `sigma_D(F) = 4 lambda_D(F) - delta(F)`.
//! Summed over the fibers these recover `chi_f`, `e_f` and `Sign(S)`.
//!
//! All arithmetic is exact over the rationals.
//!
//! Modules, bottom up:
//!
//! * [`rational`]: exact scalars.
//! * [`picard`]: divisor classes and representatives, including the genus-2
//!   relation `10*lambda = delta_0 + 2*delta_1`.
//! * [`catalog`]: published classes (exceptional Weierstrass loci,
//!   hyperelliptic and hyperflex loci in genus 3, bielliptic locus in genus 2).
//! * [`germ`]: local invariants of one germ.
//! * [`fibration`]: global invariants and the localization check.
//! * [`scenarios`]: built-in worked fibrations.
//! * [`cli`]: the `locsig` command line front end.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod fibration;
pub mod germ;
pub mod picard;
pub mod rational;
pub mod scenarios;
pub mod warning;

pub use error::Error;
pub use fibration::{Fibration, LocalizationReport};
pub use germ::{FiberGerm, LocalProfile};
pub use picard::{DivisorClass, DivisorRep};
pub use rational::Rational;
pub use warning::Warning;
