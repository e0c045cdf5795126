use serde::{Deserialize, Serialize};

/// Relative tolerance for "holds" and "satisfied" decisions.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Relative tolerance for equality detection (a two-sided test).
pub const DEFAULT_EQ_TOL: f64 = 1e-7;

/// Magnitudes below this are treated as zero wherever a quantity must not vanish.
pub const DENOMINATOR_FLOOR: f64 = 1e-300;

/// Environment variable overriding [`DEFAULT_TOL`].
pub const TOL_ENV: &str = "SCHWARZ_TOL";

/// Slack convention for comparing floating-point sides of an exact inequality.
///
/// Every comparison is `value >= -tol * scale`, where `scale` is the largest
/// magnitude entering the expression (never below 1).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub tol: f64,
    pub eq_tol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            tol: DEFAULT_TOL,
            eq_tol: DEFAULT_EQ_TOL,
        }
    }
}

impl Tolerance {
    pub fn new(tol: f64, eq_tol: f64) -> Self {
        Tolerance { tol, eq_tol }
    }

    /// Tolerance with zero slack on both tests.
    pub fn exact() -> Self {
        Tolerance {
            tol: 0.0,
            eq_tol: 0.0,
        }
    }

    /// Defaults, with `tol` taken from `SCHWARZ_TOL` when it parses as a
    /// finite non-negative number.
    pub fn from_env() -> Self {
        let mut t = Tolerance::default();
        if let Some(v) = std::env::var(TOL_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<f64>().ok())
            .filter(|v| v.is_finite() && *v >= 0.0)
        {
            t.tol = v;
        }
        t
    }

    pub fn admits(&self, margin: f64, scale: f64) -> bool {
        margin >= -self.tol * scale
    }

    pub fn is_tight(&self, margin: f64, scale: f64) -> bool {
        margin.abs() <= self.eq_tol * scale
    }
}

/// `max(1, |v| for v in values)`.
pub fn scale_of(values: &[f64]) -> f64 {
    values.iter().fold(1.0_f64, |acc, v| acc.max(v.abs()))
}
