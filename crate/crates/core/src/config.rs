//! TOML scenario files and the built-in presets `fig2`, `fig3` and `fig4`.
//!
//! ```toml
//! [atom]
//! omega10 = 2.37e15
//! dipole = 2.53e-29
//!
//! [surface]
//! model = "plasmon_direct"
//! q = 60.0
//! sign = -1
//!
//! [laser]
//! detuning = 628318530.7179586
//! theta = 1.5707963267948966
//! field = "evanescent"
//! c0 = 4.51e-23
//! power = 39e-6
//! z0 = 430e-9
//!
//! [sweep]
//! z_min = 50e-9
//! z_max = 2e-6
//! z_points = 512
//! grid = "log"
//! mode = "nonretarded"
//! powers = [39e-6]
//! ```
//!
//! Unknown keys are rejected everywhere.

use std::f64::consts::PI;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::analysis::{GridKind, SweepPlan};
use crate::domain::{AtomSpecies, FieldModel, LaserSpec, Transition};
use crate::error::{Error, Result};
use crate::material::{PlasmonSign, SurfaceModel};
use crate::potentials::{EvalOptions, Mode, PolarizabilityModel, Scenario};
use crate::quadrature::{QuadratureConfig, DAMPING_EFOLDS};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub atom: AtomBlock,
    pub surface: SurfaceBlock,
    pub laser: LaserBlock,
    #[serde(default)]
    pub potential: PotentialBlock,
    #[serde(default)]
    pub quadrature: QuadratureBlock,
    #[serde(default)]
    pub sweep: SweepBlock,
    #[serde(default)]
    pub output: OutputBlock,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomBlock {
    pub omega10: f64,
    pub dipole: f64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub downward: Vec<TransitionBlock>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransitionBlock {
    pub frequency: f64,
    pub dipole: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case", deny_unknown_fields)]
pub enum SurfaceBlock {
    PerfectMirror,
    ConstantEps {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        eps: Option<f64>,
        /// Refractive index; ε = n².
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<f64>,
    },
    DrudeLorentz {
        omega0: f64,
        omega_p: f64,
        gamma: f64,
    },
    PlasmonDirect {
        q: f64,
        sign: i32,
    },
}

// Unknown laser keys are rejected by the flattened field enum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LaserBlock {
    pub detuning: f64,
    pub theta: f64,
    #[serde(flatten)]
    pub field: FieldBlock,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "field", rename_all = "snake_case", deny_unknown_fields)]
pub enum FieldBlock {
    Uniform {
        intensity: f64,
    },
    Evanescent {
        c0: f64,
        power: f64,
        z0: f64,
        /// Beam waists and prism index that fixed `c0`; recorded only.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        waist_x: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        waist_y: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        prism_index: Option<f64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum PolarizabilityChoice {
    #[default]
    TwoLevel,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct PotentialBlock {
    /// Replaces the surface-derived C3 in nonretarded mode, J·m³.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c3: Option<f64>,
    #[serde(default)]
    pub polarizability: PolarizabilityChoice,
    #[serde(default)]
    pub additive_only: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct QuadratureBlock {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    pub freq_cutoff_factor: f64,
}

impl Default for QuadratureBlock {
    fn default() -> Self {
        let q = QuadratureConfig::default();
        Self {
            rel_tol: q.rel_tol,
            abs_tol: q.abs_tol,
            max_subdivisions: q.max_subdivisions,
            freq_cutoff_factor: q.freq_cutoff_factor,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum GridChoice {
    Linear,
    #[default]
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum ModeChoice {
    #[default]
    Nonretarded,
    Full,
}

impl From<ModeChoice> for Mode {
    fn from(m: ModeChoice) -> Self {
        match m {
            ModeChoice::Nonretarded => Mode::Nonretarded,
            ModeChoice::Full => Mode::Full,
        }
    }
}

impl From<Mode> for ModeChoice {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Nonretarded => ModeChoice::Nonretarded,
            Mode::Full => ModeChoice::Full,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SweepBlock {
    pub z_min: f64,
    pub z_max: f64,
    pub z_points: usize,
    pub grid: GridChoice,
    pub mode: ModeChoice,
    pub powers: Vec<f64>,
}

impl Default for SweepBlock {
    fn default() -> Self {
        Self {
            z_min: 50e-9,
            z_max: 2e-6,
            z_points: 512,
            grid: GridChoice::Log,
            mode: ModeChoice::Nonretarded,
            powers: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum EnergyUnit {
    #[default]
    J,
    #[serde(rename = "hbar_delta")]
    HbarDelta,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct OutputBlock {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<PathBuf>,
    #[serde(default)]
    pub unit: EnergyUnit,
}

impl ScenarioConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let cfg: Self = toml::from_str(text).map_err(|e| Error::invalid(format!("config: {e}")))?;
        cfg.build()?;
        Ok(cfg)
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::invalid(format!("config serialization: {e}")))
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn atom(&self) -> Result<AtomSpecies> {
        let down = self
            .atom
            .downward
            .iter()
            .map(|t| Transition {
                frequency: t.frequency,
                dipole: t.dipole,
            })
            .collect();
        AtomSpecies::with_downward(self.atom.omega10, self.atom.dipole, down)
    }

    pub fn surface(&self) -> Result<SurfaceModel> {
        match self.surface {
            SurfaceBlock::PerfectMirror => Ok(SurfaceModel::PerfectMirror),
            SurfaceBlock::ConstantEps { eps, n } => match (eps, n) {
                (Some(eps), None) => SurfaceModel::constant_eps(eps),
                (None, Some(n)) => SurfaceModel::constant_eps(n * n),
                _ => Err(Error::invalid("constant_eps surface needs exactly one of `eps` or `n`")),
            },
            SurfaceBlock::DrudeLorentz { omega0, omega_p, gamma } => {
                SurfaceModel::drude_lorentz(omega0, omega_p, gamma)
            }
            SurfaceBlock::PlasmonDirect { q, sign } => SurfaceModel::plasmon_direct(q, PlasmonSign::from_i32(sign)?),
        }
    }

    pub fn laser(&self) -> Result<LaserSpec> {
        let field = match self.laser.field {
            FieldBlock::Uniform { intensity } => FieldModel::Uniform { intensity },
            FieldBlock::Evanescent { c0, power, z0, .. } => FieldModel::Evanescent { c0, power, z0 },
        };
        LaserSpec::new(self.laser.detuning, field, self.laser.theta)
    }

    pub fn quadrature(&self) -> Result<QuadratureConfig> {
        let q = QuadratureConfig {
            rel_tol: self.quadrature.rel_tol,
            abs_tol: self.quadrature.abs_tol,
            max_subdivisions: self.quadrature.max_subdivisions,
            freq_cutoff_factor: self.quadrature.freq_cutoff_factor,
        };
        q.validate()?;
        Ok(q)
    }

    pub fn options(&self) -> Result<EvalOptions> {
        Ok(EvalOptions {
            mode: self.sweep.mode.into(),
            polarizability: match self.potential.polarizability {
                PolarizabilityChoice::TwoLevel => PolarizabilityModel::TwoLevel,
                PolarizabilityChoice::Full => PolarizabilityModel::Full,
            },
            c3_override: self.potential.c3,
            additive_only: self.potential.additive_only,
            quad: self.quadrature()?,
        })
    }

    pub fn plan(&self) -> Result<SweepPlan> {
        let s = &self.sweep;
        let plan = SweepPlan {
            z_min: s.z_min,
            z_max: s.z_max,
            z_points: s.z_points,
            grid: match s.grid {
                GridChoice::Linear => GridKind::Linear,
                GridChoice::Log => GridKind::Logarithmic,
            },
            powers: s.powers.clone(),
            mode: s.mode.into(),
        };
        plan.validate()?;
        Ok(plan)
    }

    pub fn scenario(&self) -> Result<Scenario> {
        Scenario::new(self.atom()?, self.surface()?, self.laser()?, self.options()?)
    }

    /// Validate every block by building the evaluation types.
    pub fn build(&self) -> Result<(Scenario, SweepPlan)> {
        Ok((self.scenario()?, self.plan()?))
    }

    pub fn preset(name: &str) -> Result<Self> {
        match name {
            "fig2" => Ok(preset_fig2()),
            "fig3" => Ok(preset_fig3()),
            "fig4" => Ok(preset_fig4()),
            other => Err(Error::invalid(format!(
                "unknown preset `{other}` (expected fig2, fig3 or fig4)"
            ))),
        }
    }
}

pub const RB_OMEGA10: f64 = 2.37e15;
pub const RB_DIPOLE: f64 = 2.53e-29;
pub const DETUNING: f64 = 2.0 * PI * 1e8;
pub const C0: f64 = 4.51e-23;
pub const Z0: f64 = 430e-9;
pub const POWER: f64 = 39e-6;
pub const ENHANCEMENT: f64 = 60.0;
pub const PRISM_INDEX: f64 = 1.512;

fn rb_block() -> AtomBlock {
    AtomBlock {
        omega10: RB_OMEGA10,
        dipole: RB_DIPOLE,
        downward: Vec::new(),
    }
}

fn evanescent_block(power: f64) -> LaserBlock {
    LaserBlock {
        detuning: DETUNING,
        theta: PI / 2.0,
        field: FieldBlock::Evanescent {
            c0: C0,
            power,
            z0: Z0,
            waist_x: Some(170e-6),
            waist_y: Some(227e-6),
            prism_index: Some(PRISM_INDEX),
        },
    }
}

fn default_quadrature() -> QuadratureBlock {
    QuadratureBlock {
        freq_cutoff_factor: DAMPING_EFOLDS,
        ..QuadratureBlock::default()
    }
}

/// Perfect mirror under 5 W/cm², full retarded evaluation.
pub fn preset_fig2() -> ScenarioConfig {
    ScenarioConfig {
        atom: rb_block(),
        surface: SurfaceBlock::PerfectMirror,
        laser: LaserBlock {
            detuning: DETUNING,
            theta: PI / 2.0,
            field: FieldBlock::Uniform { intensity: 5e4 },
        },
        potential: PotentialBlock::default(),
        quadrature: default_quadrature(),
        sweep: SweepBlock {
            mode: ModeChoice::Full,
            ..SweepBlock::default()
        },
        output: OutputBlock::default(),
    }
}

/// Evanescent barrier at 39 µW with a resonantly enhanced surface (Re r_p = −60).
pub fn preset_fig3() -> ScenarioConfig {
    ScenarioConfig {
        atom: rb_block(),
        surface: SurfaceBlock::PlasmonDirect {
            q: ENHANCEMENT,
            sign: -1,
        },
        laser: evanescent_block(POWER),
        potential: PotentialBlock::default(),
        quadrature: default_quadrature(),
        sweep: SweepBlock {
            powers: vec![POWER],
            ..SweepBlock::default()
        },
        output: OutputBlock::default(),
    }
}

/// Powers bracketing the trap window plus the four reference powers.
pub fn fig4_powers() -> Vec<f64> {
    // 20 to 30 µW in 0.25 µW steps, from integers so each value is the nearest double.
    let mut p: Vec<f64> = (0..=40).map(|i| (2000 + 25 * i) as f64 / 1e8).collect();
    p.extend([10e-6, 39e-6, 100e-6, 400e-6]);
    p.sort_by(f64::total_cmp);
    p.dedup();
    p
}

/// Power sweep from 5 nm so the near-surface trap stays inside the window.
pub fn preset_fig4() -> ScenarioConfig {
    ScenarioConfig {
        sweep: SweepBlock {
            z_min: 5e-9,
            powers: fig4_powers(),
            ..SweepBlock::default()
        },
        ..preset_fig3()
    }
}
