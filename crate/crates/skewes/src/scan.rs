//! Detection scans of the truncated explicit-formula surrogate
//!
//! ```text
//! f_T(ω) = −1 − Σ_{0<γ≤T} 2·Re(e^{iωγ}/ρ),      F_T(u) = f_T(u·ln 10),
//! ```
//!
//! the undamped (α = ∞) zero sum. Values of f_T near or above zero flag
//! ω-regions worth certifying; the scan itself proves nothing — it drops
//! the analytic error terms — but it reproduces the classical crossover
//! landscape (the first candidate region near ω ≈ 727.95 corresponds to
//! x ≈ 10^316.1).

use crate::catalog::ZeroCatalog;
use crate::error::{Error, Result};
use crate::sum;
use crate::zero_sum::{s_term, ALPHA_UNDAMPED};
use rayon::prelude::*;
use std::fmt::Write as _;

/// `f_T(ω)` at a single point, truncating the zero sum at `t_height`.
pub fn f_t(catalog: &ZeroCatalog, omega: f64, t_height: f64) -> Result<f64> {
    if t_height > catalog.last() {
        return Err(Error::CatalogExhausted {
            requested: t_height,
            last: catalog.last(),
        });
    }
    let n = catalog.count_below(t_height);
    Ok(value_at(&catalog.ordinates()[..n], omega))
}

/// `F_T(u) = f_T(u·ln 10)` — the same sum on a base-10 exponent axis.
pub fn f_t_log10(catalog: &ZeroCatalog, u: f64, t_height: f64) -> Result<f64> {
    f_t(catalog, u * std::f64::consts::LN_10, t_height)
}

fn value_at(ordinates: &[f64], omega: f64) -> f64 {
    -1.0 - sum::chunked_sum(ordinates.len(), |i| s_term(ALPHA_UNDAMPED, omega, ordinates[i]))
}

/// A sampled scan of f_T over an inclusive grid.
#[derive(Clone, Debug)]
pub struct ScanSeries {
    /// Grid abscissas (ω, or log₁₀ x when `axis_log10`).
    pub omegas: Vec<f64>,
    /// f_T at each abscissa.
    pub values: Vec<f64>,
    /// Truncation height of the zero sum.
    pub t_height: f64,
    /// Number of ordinates in each sum.
    pub zeros_used: usize,
    /// Grid spacing (hi − lo)/(points − 1).
    pub grid_spacing: f64,
    /// Whether the abscissa is log₁₀ x rather than ω.
    pub axis_log10: bool,
}

/// Sample f_T (or F_T with `axis_log10`) on an inclusive uniform grid.
///
/// The grid has exactly `points` abscissas; the first is `lo`, the last is
/// exactly `hi`. Points are evaluated independently (in parallel) and each
/// point's zero sum is chunk-deterministic, so the whole series is
/// reproducible bit for bit.
pub fn scan(
    catalog: &ZeroCatalog,
    lo: f64,
    hi: f64,
    points: usize,
    t_height: f64,
    axis_log10: bool,
) -> Result<ScanSeries> {
    if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
        return Err(Error::Usage(format!(
            "scan range [{lo}, {hi}] must be finite and increasing"
        )));
    }
    if points < 2 {
        return Err(Error::Usage("scan needs at least two grid points".into()));
    }
    if t_height > catalog.last() {
        return Err(Error::CatalogExhausted {
            requested: t_height,
            last: catalog.last(),
        });
    }
    let n = catalog.count_below(t_height);
    let ordinates = &catalog.ordinates()[..n];
    let spacing = (hi - lo) / (points - 1) as f64;
    let mut omegas: Vec<f64> = (0..points).map(|i| lo + i as f64 * spacing).collect();
    *omegas.last_mut().unwrap() = hi;
    let scale = if axis_log10 {
        std::f64::consts::LN_10
    } else {
        1.0
    };
    let values: Vec<f64> = omegas
        .par_iter()
        .map(|&w| value_at(ordinates, w * scale))
        .collect();
    Ok(ScanSeries {
        omegas,
        values,
        t_height,
        zeros_used: n,
        grid_spacing: spacing,
        axis_log10,
    })
}

/// A strict interior local maximum of a scan at or above a threshold.
#[derive(Clone, Copy, Debug)]
pub struct Candidate {
    pub omega: f64,
    pub value: f64,
}

impl Candidate {
    /// Whether the surrogate itself is positive here (strong candidate).
    pub fn positive(&self) -> bool {
        self.value > 0.0
    }
}

/// Extract strict interior local maxima with value ≥ `min_value`.
/// Endpoints are never candidates (their one-sidedness says nothing).
pub fn find_candidates(series: &ScanSeries, min_value: f64) -> Vec<Candidate> {
    let v = &series.values;
    let mut out = Vec::new();
    for i in 1..v.len().saturating_sub(1) {
        if v[i] > v[i - 1] && v[i] > v[i + 1] && v[i] >= min_value {
            out.push(Candidate {
                omega: series.omegas[i],
                value: v[i],
            });
        }
    }
    out
}

/// Iterated zoom around the running argmax — the second-stage scan workflow
/// for pinning a local extremum that a coarse grid straddles. Each round
/// scans `points` abscissas over the current window, recenters the window on
/// the round's argmax, and shrinks it to ±2 grid spacings. The returned
/// candidate is the best point seen across all rounds, so the result is
/// monotone in `rounds` and bit-reproducible.
///
/// Near-crossing humps can be far narrower than any practical grid: a
/// 500-point sweep of F_T over [300, 320] with the first 10⁵ zeros reads
/// ≈ −0.35 near the Bays–Hudson region, while three zoom rounds started from
/// the hot window [316.05, 316.25] land on the genuine positive peak
/// (≈ +0.008 at u ≈ 316.14558, a basin only ~2×10⁻⁵ wide). The zoom is a
/// search heuristic, not a bound: it refines whatever basin the starting
/// window's maxima lead it into.
pub fn refine_maximum(
    catalog: &ZeroCatalog,
    lo: f64,
    hi: f64,
    points: usize,
    t_height: f64,
    axis_log10: bool,
    rounds: usize,
) -> Result<Candidate> {
    let (mut lo, mut hi) = (lo, hi);
    let mut best = Candidate {
        omega: f64::NAN,
        value: f64::NEG_INFINITY,
    };
    for _ in 0..rounds.max(1) {
        let series = scan(catalog, lo, hi, points, t_height, axis_log10)?;
        let (i, &v) = series
            .values
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .unwrap();
        if v > best.value {
            best = Candidate {
                omega: series.omegas[i],
                value: v,
            };
        }
        let half = 2.0 * series.grid_spacing;
        lo = series.omegas[i] - half;
        hi = series.omegas[i] + half;
        if !(lo < hi) {
            break; // window has collapsed to ulp scale
        }
    }
    Ok(best)
}

/// CSV rendering: a `omega,f_value` header plus one row per grid point,
/// 15 significant digits, no comment lines.
pub fn emit_csv(series: &ScanSeries) -> String {
    let mut out = String::with_capacity(series.omegas.len() * 48 + 16);
    out.push_str("omega,f_value\n");
    for (w, v) in series.omegas.iter().zip(&series.values) {
        let _ = writeln!(out, "{w:.14e},{v:.14e}");
    }
    out
}

/// Minimal self-contained SVG: one polyline for the series, one horizontal
/// zero line, and text labels for the axis ranges and grid spacing.
pub fn emit_svg(series: &ScanSeries) -> String {
    const W: f64 = 800.0;
    const H: f64 = 400.0;
    const M: f64 = 46.0; // margin for labels
    let (xlo, xhi) = (series.omegas[0], *series.omegas.last().unwrap());
    let mut ylo = series.values.iter().cloned().fold(f64::INFINITY, f64::min);
    let mut yhi = series
        .values
        .iter()
        .cloned()
        .fold(f64::NEG_INFINITY, f64::max);
    // Always include the zero level so the reference line is in frame.
    ylo = ylo.min(0.0);
    yhi = yhi.max(0.0);
    if yhi - ylo < 1e-30 {
        yhi = ylo + 1.0;
    }
    let px = |w: f64| M + (w - xlo) / (xhi - xlo) * (W - 2.0 * M);
    let py = |v: f64| H - M - (v - ylo) / (yhi - ylo) * (H - 2.0 * M);

    let mut points = String::with_capacity(series.omegas.len() * 16);
    for (w, v) in series.omegas.iter().zip(&series.values) {
        let _ = write!(points, "{:.2},{:.2} ", px(*w), py(*v));
    }
    let axis = if series.axis_log10 { "log10 x" } else { "omega" };
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {W} {H}\" \
         font-family=\"monospace\" font-size=\"11\">"
    );
    let _ = writeln!(
        out,
        "  <line x1=\"{:.2}\" y1=\"{y0:.2}\" x2=\"{:.2}\" y2=\"{y0:.2}\" \
         stroke=\"#888\" stroke-dasharray=\"4 3\"/>",
        px(xlo),
        px(xhi),
        y0 = py(0.0)
    );
    let _ = writeln!(
        out,
        "  <polyline fill=\"none\" stroke=\"#1a5fb4\" stroke-width=\"1.2\" points=\"{}\"/>",
        points.trim_end()
    );
    let _ = writeln!(
        out,
        "  <text x=\"{:.2}\" y=\"{:.2}\">{axis} in [{xlo}, {xhi}]</text>",
        M,
        H - 10.0
    );
    let _ = writeln!(
        out,
        "  <text x=\"{:.2}\" y=\"{:.2}\">f range [{ylo:.4}, {yhi:.4}]</text>",
        M, 16.0
    );
    let _ = writeln!(
        out,
        "  <text x=\"{:.2}\" y=\"{:.2}\">T = {}, zeros = {}, spacing = {:.6e}</text>",
        M, 30.0, series.t_height, series.zeros_used, series.grid_spacing
    );
    out.push_str("</svg>\n");
    out
}
