use std::sync::Arc;

use quad_field::QuadContext;

use crate::{GridSpec, HeisError};

/// Number-theoretic context plus sampling grid, shared by all elements.
#[derive(Debug, Clone)]
pub struct Frame {
    pub quad: QuadContext,
    pub grid: GridSpec,
    pub theta: f64,
    pub eps: f64,
}

/// Floating copy of `Φ(ε^m)` and `ε^m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GradeData {
    pub m: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    /// `ε^m`
    pub e: f64,
}

impl GradeData {
    pub fn sectors(&self) -> usize {
        self.c.unsigned_abs() as usize
    }

    /// `k mod |c|`.
    pub fn sector(&self, k: i64) -> usize {
        k.rem_euclid(self.c.abs()) as usize
    }
}

impl Frame {
    pub fn new(quad: QuadContext, grid: GridSpec) -> Result<Arc<Frame>, HeisError> {
        grid.validate()?;
        Ok(Arc::new(Frame { theta: quad.theta_f64, eps: quad.eps_f64, quad, grid }))
    }

    pub fn golden(grid: GridSpec) -> Arc<Frame> {
        Frame::new(QuadContext::golden(), grid).expect("valid default grid")
    }

    pub fn grade(&self, m: i64) -> GradeData {
        let p = self.quad.power(m);
        GradeData { m, a: p.a_i64(), b: p.b_i64(), c: p.c_i64(), d: p.d_i64(), e: self.quad.eps_pow_f64(m) }
    }

    /// Same frame with a different grid.
    pub fn with_grid(&self, grid: GridSpec) -> Result<Arc<Frame>, HeisError> {
        Frame::new(self.quad.clone(), grid)
    }
}
