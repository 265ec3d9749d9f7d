//! Gaussian test vectors.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;

use crate::{Frame, HeisenbergElement};

/// Shape of a Gaussian packet `exp(−(x−x₀)²/(2w²) + iξx)·(1 + s·k)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Packet {
    pub width: f64,
    pub center: f64,
    pub freq: f64,
    pub sector_slope: f64,
}

impl Packet {
    pub fn centered(width: f64) -> Self {
        Packet { width, center: 0.0, freq: 0.0, sector_slope: 0.0 }
    }

    pub fn build(&self, frame: &Arc<Frame>, m: i64) -> HeisenbergElement {
        let p = *self;
        HeisenbergElement::from_fn(frame, m, move |x, k| {
            let t = (x - p.center) / p.width;
            Complex64::from_polar(1.0, p.freq * x) * (-0.5 * t * t).exp() * (1.0 + p.sector_slope * k as f64)
        })
        .expect("grade must be non-zero")
    }
}

/// Width `ε^{m/2}/√(2π)`: balances the decay of both pairings of `P_m` with `P_{−m}`.
pub fn natural_width(frame: &Frame, m: i64) -> f64 {
    frame.eps.powf(m as f64 / 2.0) / (2.0 * PI).sqrt()
}

/// Packet of natural width with a small offset, phase and sector profile.
pub fn natural(frame: &Arc<Frame>, m: i64, variant: u32) -> HeisenbergElement {
    let w = natural_width(frame, m);
    let v = variant as f64;
    Packet { width: w, center: 0.15 * w * (v - 1.0), freq: 0.4 * (v - 0.5), sector_slope: 0.3 + 0.1 * v }.build(frame, m)
}
