use serde::{Deserialize, Serialize};

use super::mhcd;
use crate::error::{Error, Result};
use crate::poset::Poset;

/// `Min_h(P - z) <= Min_h(P) <= 2 Min_h(P - z) + 1`, with the raw values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LipschitzCheck {
    pub lower_ok: bool,
    pub upper_ok: bool,
    pub min_h: usize,
    pub min_h_without: usize,
}

impl LipschitzCheck {
    pub fn passed(&self) -> bool {
        self.lower_ok && self.upper_ok
    }
}

pub fn lipschitz_check(p: &Poset, z: usize) -> Result<LipschitzCheck> {
    if z >= p.len() {
        return Err(Error::UnknownElement(z.to_string()));
    }
    let min_h = mhcd(p).len();
    let min_h_without = mhcd(&p.without(z)).len();
    Ok(LipschitzCheck {
        lower_ok: min_h_without <= min_h,
        upper_ok: min_h <= 2 * min_h_without + 1,
        min_h,
        min_h_without,
    })
}
