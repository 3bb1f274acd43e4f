//! Potential curves, Casimir–Polder minus laser-induced difference, extremum
//! location and laser-power sweeps.
//!
//! Every grid point and every power is independent; work is spread over the
//! rayon pool and reassembled by index, so results do not depend on the
//! thread count.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::domain::{ExtremumKind, ExtremumRecord, FieldModel, PotentialCurve};
use crate::error::{Error, Result};
use crate::material::SurfaceModel;
use crate::potentials::{total_potential, Mode, Scenario};
use crate::search::{golden_section_max, golden_section_min};

/// Extrema with |U| below this are treated as numerical noise, J.
pub const ENERGY_FLOOR: f64 = 1e-34;

/// Width of the refined extremum bracket at termination, m.
pub const REFINE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum GridKind {
    Linear,
    #[default]
    Logarithmic,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepPlan {
    pub z_min: f64,
    pub z_max: f64,
    pub z_points: usize,
    pub grid: GridKind,
    pub powers: Vec<f64>,
    pub mode: Mode,
}

impl SweepPlan {
    /// 50 nm to 2 µm, 512 logarithmic points.
    pub fn standard(mode: Mode) -> Self {
        Self {
            z_min: 50e-9,
            z_max: 2e-6,
            z_points: 512,
            grid: GridKind::Logarithmic,
            powers: Vec::new(),
            mode,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.z_min > 0.0 && self.z_min < self.z_max && self.z_max.is_finite()) {
            return Err(Error::invalid(format!(
                "need 0 < z_min < z_max, got [{}, {}]",
                self.z_min, self.z_max
            )));
        }
        if self.z_points < 16 {
            return Err(Error::invalid(format!("z_points must be >= 16, got {}", self.z_points)));
        }
        if let Some(p) = self.powers.iter().find(|p| !(**p >= 0.0 && p.is_finite())) {
            return Err(Error::invalid(format!("powers must be >= 0, got {p}")));
        }
        Ok(())
    }

    pub fn grid_points(&self) -> Vec<f64> {
        let n = self.z_points;
        let last = (n - 1) as f64;
        let mut z: Vec<f64> = (0..n)
            .map(|i| {
                let t = i as f64 / last;
                match self.grid {
                    GridKind::Linear => self.z_min + t * (self.z_max - self.z_min),
                    GridKind::Logarithmic => self.z_min * (self.z_max / self.z_min).powf(t),
                }
            })
            .collect();
        z[0] = self.z_min;
        z[n - 1] = self.z_max;
        z
    }
}

/// Sample every potential component on the plan's grid in the plan's mode.
pub fn potential_curve(scenario: &Scenario, plan: &SweepPlan) -> Result<PotentialCurve> {
    plan.validate()?;
    let s = scenario.with_mode(plan.mode);
    let z = plan.grid_points();
    let rows: Vec<_> = z
        .par_iter()
        .map(|&zi| total_potential(&s, zi).map_err(|e| e.at("potential_curve", zi)))
        .collect::<Result<_>>()?;
    PotentialCurve::from_components(
        z,
        rows.iter().map(|r| r.u_cp).collect(),
        rows.iter().map(|r| r.u_l).collect(),
        rows.iter().map(|r| r.u_lcp).collect(),
    )
}

/// `(z, U_CP − U_LCP)` in full mode for a mirror or dielectric under uniform illumination.
pub fn delta_u(scenario: &Scenario, plan: &SweepPlan) -> Result<Vec<(f64, f64)>> {
    match scenario.surface {
        SurfaceModel::PerfectMirror | SurfaceModel::ConstantEps { .. } => {}
        _ => {
            return Err(Error::invalid(format!(
                "difference curve needs a perfect mirror or constant-permittivity surface, got {}",
                scenario.surface.name()
            )))
        }
    }
    if !matches!(scenario.laser.field(), FieldModel::Uniform { .. }) {
        return Err(Error::invalid("difference curve needs a uniform laser field"));
    }
    let plan = SweepPlan {
        mode: Mode::Full,
        ..plan.clone()
    };
    let curve = potential_curve(&scenario.with_additive_only(false), &plan)?;
    Ok(curve
        .z_grid
        .iter()
        .zip(curve.u_cp.iter().zip(&curve.u_lcp))
        .map(|(&z, (cp, lcp))| (z, cp - lcp))
        .collect())
}

/// A grid-level extremum awaiting refinement: index range of the plateau
/// (a single index when there is none) and the bracketing neighbours.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Candidate {
    kind: ExtremumKind,
    lo: usize,
    mid: usize,
    hi: usize,
}

fn candidates(u: &[f64]) -> Vec<Candidate> {
    let mut out = Vec::new();
    // Last index `j` whose diff u[j] - u[j-1] was non-zero, and its sign.
    let mut prev: Option<(usize, Ordering)> = None;
    for i in 1..u.len() {
        let s = u[i].partial_cmp(&u[i - 1]).unwrap_or(Ordering::Equal);
        if s == Ordering::Equal {
            continue;
        }
        if let Some((j, ps)) = prev {
            if ps != s {
                // Plateau spans j..=i-1; bracket is [j-1, i].
                let lo = j - 1;
                let (a, b) = (j, i - 1);
                let mid = a + (b - a) / 2;
                let second = u[i] - 2.0 * u[mid] + u[lo];
                let kind = if second < 0.0 || (second == 0.0 && ps == Ordering::Greater) {
                    ExtremumKind::Maximum
                } else {
                    ExtremumKind::Minimum
                };
                out.push(Candidate { kind, lo, mid, hi: i });
            }
        }
        prev = Some((i, s));
    }
    out
}

/// Locate interior extrema of `u_tot` and refine them on the continuous
/// evaluator `eval` by golden-section search.
pub fn find_extrema<F>(curve: &PotentialCurve, power: f64, eval: F) -> Result<Vec<ExtremumRecord>>
where
    F: Fn(f64) -> Result<f64>,
{
    if curve.len() < 3 {
        return Ok(Vec::new());
    }
    let z = &curve.z_grid;
    let mut out = Vec::new();
    for c in candidates(&curve.u_tot) {
        let (a, b) = (z[c.lo], z[c.hi]);
        let tol = REFINE_TOL.min(0.5 * (b - a));
        let refined = match c.kind {
            ExtremumKind::Minimum => golden_section_min(&eval, a, b, tol),
            ExtremumKind::Maximum => golden_section_max(&eval, a, b, tol),
        }
        .map_err(|e| e.at("find_extrema", z[c.mid]))?;
        if refined.fx.abs() < ENERGY_FLOOR {
            continue;
        }
        out.push(ExtremumRecord {
            power,
            kind: c.kind,
            z_position: refined.x,
            value: refined.fx,
        });
    }
    out.sort_by(|p, q| p.z_position.total_cmp(&q.z_position));
    Ok(out)
}

/// Curve plus refined extrema for one scenario.
pub fn scenario_extrema(scenario: &Scenario, plan: &SweepPlan) -> Result<Vec<ExtremumRecord>> {
    let s = scenario.with_mode(plan.mode);
    let curve = potential_curve(&s, plan)?;
    let power = s.laser.power().unwrap_or(0.0);
    find_extrema(&curve, power, |x| total_potential(&s, x).map(|u| u.u_tot))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepFailure {
    pub power: f64,
    pub error: Error,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SweepReport {
    /// Sorted by (power, z).
    pub records: Vec<ExtremumRecord>,
    pub failures: Vec<SweepFailure>,
}

impl SweepReport {
    /// Lowest swept power that produced a minimum.
    pub fn minimum_threshold(&self) -> Option<f64> {
        self.records
            .iter()
            .filter(|r| r.kind == ExtremumKind::Minimum)
            .map(|r| r.power)
            .min_by(f64::total_cmp)
    }

    pub fn at_power(&self, power: f64) -> impl Iterator<Item = &ExtremumRecord> {
        self.records.iter().filter(move |r| r.power == power)
    }
}

/// Extrema of the total potential for every power in the plan.
pub fn power_sweep(template: &Scenario, plan: &SweepPlan) -> Result<SweepReport> {
    plan.validate()?;
    if plan.powers.is_empty() {
        return Err(Error::invalid("power sweep needs at least one power"));
    }
    if template.laser.power().is_none() {
        return Err(Error::invalid("power sweep needs an evanescent laser field"));
    }
    let results: Vec<(f64, Result<Vec<ExtremumRecord>>)> = plan
        .powers
        .par_iter()
        .map(|&p| (p, template.with_power(p).and_then(|s| scenario_extrema(&s, plan))))
        .collect();
    let mut report = SweepReport::default();
    for (power, r) in results {
        match r {
            Ok(recs) => report.records.extend(recs),
            Err(error) => report.failures.push(SweepFailure { power, error }),
        }
    }
    report
        .records
        .sort_by(|a, b| a.power.total_cmp(&b.power).then(a.z_position.total_cmp(&b.z_position)));
    report.failures.sort_by(|a, b| a.power.total_cmp(&b.power));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{AtomSpecies, LaserSpec};
    use crate::material::PlasmonSign;
    use crate::potentials::{force, Component, EvalOptions};
    use std::f64::consts::PI;

    fn scenario(power: f64, sign: PlasmonSign, additive_only: bool) -> Scenario {
        let laser = LaserSpec::new(
            2.0 * PI * 1e8,
            FieldModel::Evanescent {
                c0: 4.51e-23,
                power,
                z0: 430e-9,
            },
            PI / 2.0,
        )
        .unwrap();
        let opts = EvalOptions {
            additive_only,
            ..EvalOptions::default()
        };
        Scenario::new(
            AtomSpecies::rubidium(),
            SurfaceModel::plasmon_direct(60.0, sign).unwrap(),
            laser,
            opts,
        )
        .unwrap()
    }

    fn plan(points: usize) -> SweepPlan {
        SweepPlan {
            z_points: points,
            ..SweepPlan::standard(Mode::Nonretarded)
        }
    }

    /// Brute-force scan: index of the largest interior sample.
    fn fine_scan_max(s: &Scenario, a: f64, b: f64, n: usize) -> f64 {
        let mut best = (a, f64::NEG_INFINITY);
        for i in 0..=n {
            let z = a + (b - a) * i as f64 / n as f64;
            let u = s.components(z).unwrap().u_tot;
            if u > best.1 {
                best = (z, u);
            }
        }
        best.0
    }

    #[test]
    fn plan_validation_and_grid() {
        let p = plan(16);
        let z = p.grid_points();
        assert_eq!(z.len(), 16);
        assert_eq!(z[0], 50e-9);
        assert_eq!(z[15], 2e-6);
        assert!(z.windows(2).all(|w| w[1] > w[0]));
        let ratio = z[1] / z[0];
        assert!((z[8] / z[7] - ratio).abs() < 1e-12);
        assert!(plan(15).validate().is_err());
        let lin = SweepPlan {
            grid: GridKind::Linear,
            ..plan(21)
        };
        let zl = lin.grid_points();
        assert!(((zl[2] - zl[1]) - (zl[1] - zl[0])).abs() < 1e-20);
        let bad = SweepPlan {
            z_min: 1e-6,
            z_max: 1e-7,
            ..plan(32)
        };
        assert!(bad.validate().is_err());
        let neg = SweepPlan {
            powers: vec![-1.0],
            ..plan(32)
        };
        assert!(neg.validate().is_err());
    }

    #[test]
    fn zero_power_curve_is_pure_cp_and_monotone() {
        let s = scenario(0.0, PlasmonSign::Negative, false);
        let c = potential_curve(&s, &plan(64)).unwrap();
        assert!(c.u_l.iter().all(|&v| v == 0.0));
        assert!(c.u_lcp.iter().all(|&v| v == 0.0));
        assert!(find_extrema(&c, 0.0, |z| Ok(s.components(z)?.u_tot))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn additive_barrier_matches_fine_scan() {
        let s = scenario(39e-6, PlasmonSign::Negative, true);
        let ext = scenario_extrema(&s, &plan(512)).unwrap();
        assert_eq!(ext.len(), 1);
        assert_eq!(ext[0].kind, ExtremumKind::Maximum);
        let scan = fine_scan_max(&s, 50e-9, 2e-6, 200_000);
        assert!((ext[0].z_position - scan).abs() < 2e-11);
    }

    #[test]
    fn refined_extremum_has_vanishing_force() {
        let s = scenario(39e-6, PlasmonSign::Negative, true);
        let ext = scenario_extrema(&s, &plan(512)).unwrap();
        let z = ext[0].z_position;
        let f = force(&s, z, Component::Total).unwrap();
        let scale = force(&s, z, Component::CasimirPolder).unwrap().abs();
        assert!(f.abs() < 1e-3 * scale, "force {f:e} vs scale {scale:e}");
    }

    #[test]
    fn grid_refinement_does_not_move_extrema() {
        for sign in [PlasmonSign::Positive, PlasmonSign::Negative] {
            let s = scenario(26e-6, sign, false);
            let p = SweepPlan {
                z_min: 5e-9,
                ..plan(256)
            };
            let coarse = scenario_extrema(&s, &p).unwrap();
            let fine = scenario_extrema(
                &s,
                &SweepPlan {
                    z_points: 1024,
                    ..p.clone()
                },
            )
            .unwrap();
            assert_eq!(coarse.len(), fine.len());
            for (a, b) in coarse.iter().zip(&fine) {
                assert_eq!(a.kind, b.kind);
                assert!((a.z_position - b.z_position).abs() < 0.5e-9);
            }
        }
    }

    #[test]
    fn plateau_is_a_single_extremum_at_midpoint() {
        let u = [0.0, 1.0, 2.0, 2.0, 2.0, 1.0, 0.5, 0.5, 1.0];
        let c = candidates(&u);
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].kind, ExtremumKind::Maximum);
        assert_eq!((c[0].lo, c[0].mid, c[0].hi), (1, 3, 5));
        assert_eq!(c[1].kind, ExtremumKind::Minimum);
        assert_eq!((c[1].lo, c[1].hi), (5, 8));
        assert!(candidates(&[3.0, 2.0, 1.0]).is_empty());
    }

    #[test]
    fn sweeps_are_sorted_and_empty_at_zero_power() {
        let s = scenario(0.0, PlasmonSign::Negative, true);
        let zero = power_sweep(
            &s,
            &SweepPlan {
                powers: vec![0.0, 0.0],
                ..plan(64)
            },
        )
        .unwrap();
        assert!(zero.records.is_empty() && zero.failures.is_empty());
        let p = SweepPlan {
            powers: vec![400e-6, 10e-6, 100e-6, 39e-6],
            ..plan(256)
        };
        let r = power_sweep(&s, &p).unwrap();
        let z: Vec<f64> = r.records.iter().map(|x| x.z_position).collect();
        assert_eq!(z.len(), 4);
        assert!(r.records.windows(2).all(|w| w[0].power < w[1].power));
        assert!(z.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn delta_u_at_zero_intensity_is_cp() {
        let laser = LaserSpec::new(2.0 * PI * 1e8, FieldModel::Uniform { intensity: 0.0 }, PI / 2.0).unwrap();
        let s = Scenario::new(
            AtomSpecies::rubidium(),
            SurfaceModel::PerfectMirror,
            laser,
            EvalOptions::default(),
        )
        .unwrap();
        let p = SweepPlan {
            z_points: 16,
            ..SweepPlan::standard(Mode::Full)
        };
        let d = delta_u(&s, &p).unwrap();
        let c = potential_curve(&s, &p).unwrap();
        for (i, (z, v)) in d.iter().enumerate() {
            assert_eq!(*z, c.z_grid[i]);
            assert_eq!(*v, c.u_cp[i]);
        }
        assert!(delta_u(&scenario(1e-6, PlasmonSign::Negative, false), &p).is_err());
    }
}
