//! Casimir–Polder, optical dipole and laser-induced Casimir–Polder
//! potentials for a ground-state atom above a planar surface, and the
//! landscape analysis built on them.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod cli;
pub mod config;
pub mod domain;
pub mod error;
pub mod greens;
pub mod material;
pub mod optics;
pub mod potentials;
pub mod quadrature;
pub mod search;

pub use analysis::{GridKind, SweepPlan, SweepReport};
pub use config::ScenarioConfig;
pub use domain::{AtomSpecies, ExtremumKind, ExtremumRecord, FieldModel, LaserSpec, PotentialCurve, Transition};
pub use error::{Error, Result};
pub use material::{PlasmonSign, SurfaceModel};
pub use potentials::{Component, EvalOptions, Mode, PolarizabilityModel, PotentialComponents, Scenario};
pub use quadrature::QuadratureConfig;
