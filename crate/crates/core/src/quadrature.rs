//! Globally adaptive 21-point Gauss–Kronrod quadrature over finite intervals.
//!
//! Integrands return fixed-size arrays so several related integrals (real
//! and imaginary parts, tensor components) share one set of evaluations.

use crate::error::{Error, Result};

/// Tolerances and limits shared by every adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    /// Number of e-folds of the exp(-2ξz/c) damping retained in the
    /// imaginary-frequency integral before it is truncated.
    pub freq_cutoff_factor: f64,
}

/// ln(1e16): the damping factor at truncation is 1e-16.
pub const DAMPING_EFOLDS: f64 = 36.841_361_487_904_734;

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-9,
            abs_tol: 1e-300,
            max_subdivisions: 400,
            freq_cutoff_factor: DAMPING_EFOLDS,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0) {
            return Err(Error::invalid("quadrature tolerances must be > 0"));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::invalid("max_subdivisions must be >= 1"));
        }
        if !(self.freq_cutoff_factor > 0.0) {
            return Err(Error::invalid("freq_cutoff_factor must be > 0"));
        }
        Ok(())
    }

    pub fn with_rel_tol(self, rel_tol: f64) -> Self {
        Self { rel_tol, ..self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate<const N: usize> {
    pub value: [f64; N],
    pub error: [f64; N],
    pub subdivisions: usize,
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689,
    0.973_906_528_517_171_720_077_964_012_084,
    0.930_157_491_355_708_226_001_207_180_060,
    0.865_063_366_688_984_510_732_096_688_423,
    0.780_817_726_586_416_897_063_717_578_345,
    0.679_409_568_299_024_406_234_327_365_115,
    0.562_757_134_668_604_683_339_000_099_273,
    0.433_395_394_129_247_190_799_265_943_166,
    0.294_392_862_701_460_198_131_126_603_104,
    0.148_874_338_981_631_210_884_826_001_130,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062,
    0.032_558_162_307_964_727_478_818_972_459,
    0.054_755_896_574_351_996_031_381_300_245,
    0.075_039_674_810_919_952_767_043_140_916,
    0.093_125_454_583_697_605_535_065_465_083,
    0.109_387_158_802_297_641_899_210_590_326,
    0.123_491_976_262_065_851_077_208_464_135,
    0.134_709_217_311_473_325_928_054_001_772,
    0.142_775_938_577_060_080_797_094_273_139,
    0.147_739_104_901_338_491_374_841_515_972,
    0.149_445_554_002_916_905_664_936_468_390,
];

// Gauss weights for the odd-indexed Kronrod nodes.
#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893,
    0.149_451_349_150_580_593_145_776_339_658,
    0.219_086_362_515_982_043_995_534_934_228,
    0.269_266_719_309_996_355_091_226_921_569,
    0.295_524_224_714_752_870_173_892_994_651,
];

#[derive(Debug, Clone, Copy)]
struct Segment<const N: usize> {
    a: f64,
    b: f64,
    value: [f64; N],
    error: [f64; N],
}

impl<const N: usize> Segment<N> {
    fn worst(&self) -> f64 {
        self.error.iter().cloned().fold(0.0, f64::max)
    }
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }
    scaled
}

fn gk21<const N: usize, F>(f: &F, a: f64, b: f64) -> Segment<N>
where
    F: Fn(f64) -> [f64; N],
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);

    let mut kronrod = [0.0; N];
    let mut gauss = [0.0; N];
    let mut res_abs = [0.0; N];
    let mut fv1 = [[0.0; N]; 10];
    let mut fv2 = [[0.0; N]; 10];
    for c in 0..N {
        kronrod[c] = WGK[10] * fc[c];
        res_abs[c] = WGK[10] * fc[c].abs();
    }
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        for c in 0..N {
            kronrod[c] += WGK[j] * (f1[c] + f2[c]);
            res_abs[c] += WGK[j] * (f1[c].abs() + f2[c].abs());
            if j % 2 == 1 {
                gauss[c] += WG[j / 2] * (f1[c] + f2[c]);
            }
        }
    }

    let mut value = [0.0; N];
    let mut error = [0.0; N];
    for c in 0..N {
        let mean = 0.5 * kronrod[c];
        let mut res_asc = WGK[10] * (fc[c] - mean).abs();
        for j in 0..10 {
            res_asc += WGK[j] * ((fv1[j][c] - mean).abs() + (fv2[j][c] - mean).abs());
        }
        let h = half.abs();
        value[c] = kronrod[c] * half;
        error[c] = rescale_error((kronrod[c] - gauss[c]) * half, res_abs[c] * h, res_asc * h);
    }
    Segment { a, b, value, error }
}

/// Integrate `f` over `[a, b]`.
///
/// Converges when every component error is below
/// `max(abs_tol, rel_tol * max_c |I_c|)`.
pub fn integrate<const N: usize, F>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<Estimate<N>>
where
    F: Fn(f64) -> [f64; N],
{
    if a == b {
        return Ok(Estimate {
            value: [0.0; N],
            error: [0.0; N],
            subdivisions: 0,
        });
    }
    let mut segments = vec![gk21(&f, a, b)];
    loop {
        let mut value = [0.0; N];
        let mut error = [0.0; N];
        for s in &segments {
            for c in 0..N {
                value[c] += s.value[c];
                error[c] += s.error[c];
            }
        }
        let scale = value.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let tol = cfg.abs_tol.max(cfg.rel_tol * scale);
        let worst_total = error.iter().cloned().fold(0.0, f64::max);
        if worst_total <= tol {
            return Ok(Estimate {
                value,
                error,
                subdivisions: segments.len(),
            });
        }
        let n_seg = segments.len();
        let fail = || Error::Quadrature {
            estimate: scale,
            error_bound: worst_total,
            subdivisions: n_seg,
        };
        if segments.len() >= cfg.max_subdivisions {
            return Err(fail());
        }
        let (idx, _) = segments
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.worst().total_cmp(&y.1.worst()))
            .expect("non-empty");
        let seg = segments.swap_remove(idx);
        let mid = 0.5 * (seg.a + seg.b);
        if !(mid > seg.a.min(seg.b) && mid < seg.a.max(seg.b)) {
            return Err(fail());
        }
        segments.push(gk21(&f, seg.a, mid));
        segments.push(gk21(&f, mid, seg.b));
    }
}

pub fn integrate_scalar<F>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<(f64, f64)>
where
    F: Fn(f64) -> f64,
{
    let est = integrate(|x| [f(x)], a, b, cfg)?;
    Ok((est.value[0], est.error[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn polynomial_exact() {
        let cfg = QuadratureConfig::default();
        let (v, _) = integrate_scalar(|x| x.powi(7) - 3.0 * x * x, 0.0, 2.0, &cfg).unwrap();
        assert_relative_eq!(v, 256.0 / 8.0 - 8.0, max_relative = 1e-14);
    }

    #[test]
    fn reversed_and_empty_interval() {
        let cfg = QuadratureConfig::default();
        let (v, _) = integrate_scalar(f64::exp, 1.0, 0.0, &cfg).unwrap();
        assert_relative_eq!(v, 1.0 - std::f64::consts::E, max_relative = 1e-13);
        assert_eq!(integrate_scalar(f64::exp, 1.0, 1.0, &cfg).unwrap().0, 0.0);
    }

    #[test]
    fn sharp_peak_needs_subdivision() {
        let cfg = QuadratureConfig::default();
        let w = 1e-4;
        let est = integrate(|x| [w / ((x - 0.3).powi(2) + w * w)], 0.0, 1.0, &cfg).unwrap();
        let exact = (0.7f64 / w).atan() + (0.3f64 / w).atan();
        assert_relative_eq!(est.value[0], exact, max_relative = 1e-9);
        assert!(est.subdivisions > 1);
    }

    #[test]
    fn vector_components_share_nodes() {
        let cfg = QuadratureConfig::default();
        let est = integrate(|x| [x.sin(), x.cos()], 0.0, std::f64::consts::PI, &cfg).unwrap();
        assert_relative_eq!(est.value[0], 2.0, max_relative = 1e-13);
        assert!(est.value[1].abs() < 1e-12);
    }

    #[test]
    fn subdivision_limit_reports_estimate() {
        let cfg = QuadratureConfig {
            max_subdivisions: 2,
            ..QuadratureConfig::default()
        };
        let err = integrate_scalar(|x| 1.0 / x.sqrt(), 1e-300, 1.0, &cfg).unwrap_err();
        match err {
            Error::Quadrature {
                estimate,
                error_bound,
                subdivisions,
            } => {
                assert!(estimate > 0.0 && error_bound > 0.0);
                assert_eq!(subdivisions, 2);
            }
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn config_validation() {
        assert!(QuadratureConfig::default().validate().is_ok());
        let bad = QuadratureConfig {
            rel_tol: 0.0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        let bad = QuadratureConfig {
            max_subdivisions: 0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }
}
