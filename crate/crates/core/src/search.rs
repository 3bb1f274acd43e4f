//! Golden-section search for a bracketed extremum.

use crate::error::{Error, Result};

const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, PartialEq)]
pub struct GoldenResult {
    pub x: f64,
    pub fx: f64,
    /// Best abscissa after each iteration, starting with the initial probe.
    pub trace: Vec<f64>,
}

/// Minimise a unimodal `f` on `[a, b]` until the bracket is narrower than `tol`.
pub fn golden_section_min<F>(f: F, a: f64, b: f64, tol: f64) -> Result<GoldenResult>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(a < b) || !(tol > 0.0) {
        return Err(Error::invalid(format!(
            "bad golden-section bracket [{a}, {b}] with tol {tol}"
        )));
    }
    let (mut lo, mut hi) = (a, b);
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    let best = |x1: f64, f1: f64, x2: f64, f2: f64| if f1 <= f2 { (x1, f1) } else { (x2, f2) };
    let mut trace = vec![best(x1, f1, x2, f2).0];
    while hi - lo > tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            if !(x1 > lo && x1 < x2) {
                break;
            }
            f1 = f(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            if !(x2 > x1 && x2 < hi) {
                break;
            }
            f2 = f(x2)?;
        }
        trace.push(best(x1, f1, x2, f2).0);
    }
    let (x, fx) = best(x1, f1, x2, f2);
    Ok(GoldenResult { x, fx, trace })
}

/// Maximise a unimodal `f` on `[a, b]`; `fx` is the maximum value.
pub fn golden_section_max<F>(f: F, a: f64, b: f64, tol: f64) -> Result<GoldenResult>
where
    F: Fn(f64) -> Result<f64>,
{
    let mut r = golden_section_min(|x| f(x).map(|v| -v), a, b, tol)?;
    r.fx = -r.fx;
    Ok(r)
}
