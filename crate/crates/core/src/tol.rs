use serde::{Deserialize, Serialize};

/// Shared numerical thresholds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub eq_abs: f64,
    pub eq_rel: f64,
    /// Factor for reality and sign tests in the classifier.
    pub classify_scale: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eq_abs: 1e-10,
            eq_rel: 1e-10,
            classify_scale: 1e-9,
        }
    }
}

impl Tolerances {
    pub fn new(eq_abs: f64, eq_rel: f64, classify_scale: f64) -> Option<Self> {
        let ok = |x: f64| x.is_finite() && x > 0.0;
        if ok(eq_abs) && ok(eq_rel) && ok(classify_scale) {
            Some(Tolerances {
                eq_abs,
                eq_rel,
                classify_scale,
            })
        } else {
            None
        }
    }

    /// Threshold for comparing two quantities of the given magnitudes.
    pub fn threshold(&self, scale: f64) -> f64 {
        self.eq_abs + self.eq_rel * scale
    }
}
