use csd_core::Level;

use crate::error::{CliError, CliResult};

/// Maps real values in `[0, max_value]` onto the levels `0..=t`.
///
/// A value `x` lands on `ceil(x * t / max_value)`, so level `i` holds the
/// values in `((i - 1) * max_value / t, i * max_value / t]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quantizer {
    t: Level,
    max_value: f64,
}

impl Quantizer {
    pub fn new(t: Level, max_value: f64) -> CliResult<Self> {
        if !(max_value.is_finite() && max_value > 0.0) {
            return Err(CliError::Invariant(format!(
                "quantizer range must be positive and finite, got {max_value}"
            )));
        }
        Ok(Quantizer { t, max_value })
    }

    pub fn t(&self) -> Level {
        self.t
    }

    pub fn max_value(&self) -> f64 {
        self.max_value
    }

    pub fn level(&self, x: f64) -> CliResult<Level> {
        if !(x.is_finite() && x >= 0.0) {
            return Err(CliError::Invariant(format!("cannot quantize {x}")));
        }
        if x > self.max_value {
            return Err(CliError::Invariant(format!(
                "{x} exceeds the quantizer range {}",
                self.max_value
            )));
        }
        let level = (x * self.t as f64 / self.max_value).ceil() as Level;
        Ok(level.min(self.t))
    }
}
