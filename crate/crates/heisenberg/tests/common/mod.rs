#![allow(dead_code)]

use std::sync::Arc;

use heisenberg::packets::natural;
use heisenberg::*;
use nc_torus::TorusElement;
use num_complex::Complex64;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn default_frame() -> Arc<Frame> {
    Frame::golden(GridSpec::default())
}

/// Finer grid for identities involving derivatives of narrow packets.
pub fn fine_frame() -> Arc<Frame> {
    Frame::golden(GridSpec { n: 2048, mode_cutoff: 10, ..GridSpec::default() })
}

/// Wider window for products whose factors include grade ±2.
pub fn wide_frame() -> Arc<Frame> {
    Frame::golden(GridSpec { l: 20.0, n: 2048, mode_cutoff: 10, ..GridSpec::default() })
}

pub fn packet(fr: &Arc<Frame>, m: i64, v: u32) -> GradedElement {
    if m == 0 {
        GradedElement::torus(fr, torus_sample(fr.theta, v))
    } else {
        GradedElement::module(natural(fr, m, v))
    }
}

pub fn torus_sample(theta: f64, v: u32) -> TorusElement {
    let s = v as f64;
    TorusElement::from_terms(
        theta,
        &[(0, 0, c(0.7, 0.1 * s)), (1, 0, c(0.4, -0.2)), (0, -1, c(0.3 - 0.1 * s, 0.2)), (-1, 1, c(0.1, 0.15))],
    )
}
