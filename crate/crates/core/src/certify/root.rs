use serde::Serialize;

use crate::error::{Error, Result};

const BRACKET_LO: f64 = 1e-9;
const BRACKET_HI: f64 = 1.0 - 1e-9;
const MAX_BISECTIONS: usize = 200;

/// `f(x) = (m-4) x^4 - (m-1) x^3 - x + 1`, evaluated in Horner form.
pub fn quartic(m: usize, x: f64) -> f64 {
    let a = m as f64 - 4.0;
    let b = m as f64 - 1.0;
    (((a * x - b) * x) * x - 1.0) * x + 1.0
}

/// The root `y = alpha^{1/3}` of [`quartic`] in `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AlphaRoot {
    pub m: usize,
    pub y: f64,
    pub alpha: f64,
}

/// Bisection for the unique zero of `f` in `(0, 1)`.
///
/// `f(0) = 1` and `f(1) = -3` for every `m`, so the bracket always changes
/// sign.
pub fn solve_bl1_alpha(m: usize) -> Result<AlphaRoot> {
    if m < 5 {
        return Err(Error::RootParameter(m));
    }
    let (mut lo, mut hi) = (BRACKET_LO, BRACKET_HI);
    debug_assert!(quartic(m, lo) > 0.0 && quartic(m, hi) < 0.0);
    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f = quartic(m, mid);
        if f == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if f > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // closer endpoint in |f|
    let y = if quartic(m, lo).abs() <= quartic(m, hi).abs() {
        lo
    } else {
        hi
    };
    Ok(AlphaRoot {
        m,
        y,
        alpha: y * y * y,
    })
}

/// Roots for every `m` in `m_lo..=m_hi`.
pub fn root_monotonicity_scan(m_lo: usize, m_hi: usize) -> Result<Vec<(usize, f64)>> {
    if m_lo < 5 || m_lo >= m_hi {
        return Err(Error::ScanRange { lo: m_lo, hi: m_hi });
    }
    (m_lo..=m_hi)
        .map(|m| solve_bl1_alpha(m).map(|r| (m, r.y)))
        .collect()
}
