//! Sweep ranges for the verification suite.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::BigRational;
use num_bigint::BigInt;

/// Parameter ranges, one key per family sweep. Unlisted keys take the
/// defaults.
///
/// ```toml
/// bridge_max_m = 12
/// width_exp = 30
/// ```
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    /// `B(m, n)` determinant and bound sweeps: `1 <= n <= m <= bridge_max_m`.
    pub bridge_max_m: usize,
    /// Determinant-equality pairing over `m + n <= det_equality_max_sum`.
    pub det_equality_max_sum: usize,
    pub inverse_min_sum: usize,
    pub inverse_max_sum: usize,
    pub suspension_max_sum: usize,
    /// `B(m, m-1)` char poly and spectrum sweeps.
    pub charpoly_bridge_min_m: usize,
    pub charpoly_bridge_max_m: usize,
    /// `R̃_n` char poly, spectrum and bound sweeps.
    pub charpoly_reseminant_max_n: usize,
    pub golden_max_n: usize,
    pub isomorphism_max_n: usize,
    pub recognition_bridge_max_sum: usize,
    pub minimal_reseminant_max_n: usize,
    /// Root intervals are refined to width `2^-width_exp`.
    pub width_exp: u32,
    pub float_tol: f64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            bridge_max_m: 12,
            det_equality_max_sum: 24,
            inverse_min_sum: 5,
            inverse_max_sum: 12,
            suspension_max_sum: 14,
            charpoly_bridge_min_m: 3,
            charpoly_bridge_max_m: 10,
            charpoly_reseminant_max_n: 10,
            golden_max_n: 12,
            isomorphism_max_n: 8,
            recognition_bridge_max_sum: 12,
            minimal_reseminant_max_n: 6,
            width_exp: 30,
            float_tol: 1e-9,
        }
    }
}

/// Largest matrix the suite is meant to build.
pub const MAX_ORDER: usize = 30;

impl SweepConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: SweepConfig =
            toml::from_str(text).map_err(|e| Error::InvalidConfig(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config is plain data")
    }

    pub fn width(&self) -> BigRational {
        BigRational::new(BigInt::from(1), BigInt::from(1) << self.width_exp as usize)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        let orders = [
            ("bridge_max_m", 2 * self.bridge_max_m),
            ("det_equality_max_sum", self.det_equality_max_sum),
            ("inverse_max_sum", self.inverse_max_sum),
            ("suspension_max_sum", self.suspension_max_sum + 1),
            ("charpoly_bridge_max_m", (2 * self.charpoly_bridge_max_m).saturating_sub(1)),
            ("charpoly_reseminant_max_n", self.charpoly_reseminant_max_n + 5),
            ("golden_max_n", self.golden_max_n + 5),
            ("isomorphism_max_n", self.isomorphism_max_n + 5),
            ("recognition_bridge_max_sum", self.recognition_bridge_max_sum),
            ("minimal_reseminant_max_n", self.minimal_reseminant_max_n + 5),
        ];
        for (key, order) in orders {
            if order > MAX_ORDER {
                return bad(format!("{key} implies {order}x{order} matrices; the limit is {MAX_ORDER}"));
            }
        }
        if self.bridge_max_m == 0 {
            return bad("bridge_max_m must be at least 1".into());
        }
        if self.charpoly_bridge_min_m < 3 {
            return bad("charpoly_bridge_min_m must be at least 3".into());
        }
        if self.charpoly_bridge_min_m > self.charpoly_bridge_max_m {
            return bad("charpoly_bridge_min_m exceeds charpoly_bridge_max_m".into());
        }
        if self.inverse_min_sum < 2 || self.inverse_min_sum > self.inverse_max_sum {
            return bad("inverse sums must satisfy 2 <= inverse_min_sum <= inverse_max_sum".into());
        }
        if !(1..=200).contains(&self.width_exp) {
            return bad("width_exp must be in 1..=200".into());
        }
        if !(self.float_tol > 0.0 && self.float_tol < 1.0) {
            return bad("float_tol must be in (0, 1)".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid_and_round_trip() {
        let d = SweepConfig::default();
        d.validate().unwrap();
        assert_eq!(SweepConfig::from_toml(&d.to_toml()).unwrap(), d);
        assert_eq!(SweepConfig::from_toml("").unwrap(), d);
    }

    #[test]
    fn partial_override() {
        let c = SweepConfig::from_toml("bridge_max_m = 5\nwidth_exp = 20").unwrap();
        assert_eq!(c.bridge_max_m, 5);
        assert_eq!(c.width(), BigRational::new(1.into(), (1 << 20).into()));
        assert_eq!(c.golden_max_n, 12);
    }

    #[test]
    fn rejects_bad_configs() {
        for text in [
            "bridge_max_m = 16",
            "charpoly_bridge_min_m = 2",
            "inverse_min_sum = 9\ninverse_max_sum = 6",
            "width_exp = 0",
            "float_tol = -1.0",
            "unknown_key = 3",
            "bridge_max_m = \"ten\"",
        ] {
            assert!(matches!(SweepConfig::from_toml(text), Err(Error::InvalidConfig(_))), "{text}");
        }
    }
}
