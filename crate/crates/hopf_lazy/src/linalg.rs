use nalgebra::{DMatrix, DVector};
pub use num_complex::Complex64 as C;

pub type Vector = DVector<C>;
pub type Matrix = DMatrix<C>;

pub fn basis(dim: usize, i: usize) -> Vector {
    let mut v = Vector::zeros(dim);
    v[i] = C::new(1.0, 0.0);
    v
}

/// `S·conj(v)`.
pub fn antilinear(star: &Matrix, v: &Vector) -> Vector {
    star * v.map(|c| c.conj())
}

pub fn max_norm(v: &Vector) -> f64 {
    v.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// Bilinear map `X × Y → Z`, one `Y → Z` matrix per basis vector of `X`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bilinear {
    pub maps: Vec<Matrix>,
    y_dim: usize,
    z_dim: usize,
}

impl Bilinear {
    pub fn from_fn(dx: usize, dy: usize, dz: usize, f: impl Fn(usize, usize) -> Vector) -> Self {
        let maps = (0..dx)
            .map(|i| {
                let mut m = Matrix::zeros(dz, dy);
                for j in 0..dy {
                    m.set_column(j, &f(i, j));
                }
                m
            })
            .collect();
        Bilinear { maps, y_dim: dy, z_dim: dz }
    }

    pub fn zero(dx: usize, dy: usize, dz: usize) -> Self {
        Bilinear { maps: vec![Matrix::zeros(dz, dy); dx], y_dim: dy, z_dim: dz }
    }

    /// Wraps per-basis matrices, each `dz × dy`.
    pub fn from_maps(maps: Vec<Matrix>, dy: usize, dz: usize) -> Self {
        assert!(maps.iter().all(|m| m.shape() == (dz, dy)), "bilinear slices must be {dz}x{dy}");
        Bilinear { maps, y_dim: dy, z_dim: dz }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.maps.len(), self.y_dim, self.z_dim)
    }

    pub fn apply(&self, x: &Vector, y: &Vector) -> Vector {
        let (_, _, dz) = self.dims();
        let mut out = Vector::zeros(dz);
        for (i, xi) in x.iter().enumerate() {
            if *xi != C::new(0.0, 0.0) {
                out += (&self.maps[i] * y) * *xi;
            }
        }
        out
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        self.maps[i].column(j).into_owned()
    }
}

fn padded_svd(a: &DMatrix<f64>) -> (DVector<f64>, DMatrix<f64>) {
    let (r, c) = a.shape();
    let a = if r < c { a.clone().resize_vertically(c, 0.0) } else { a.clone() };
    let svd = a.svd(false, true);
    (svd.singular_values, svd.v_t.expect("requested V"))
}

/// Orthonormal basis of `ker a`, singular values below `tol` counted as zero.
pub fn real_nullspace(a: &DMatrix<f64>, tol: f64) -> Vec<DVector<f64>> {
    let c = a.ncols();
    if a.nrows() == 0 {
        return (0..c).map(|i| DVector::from_fn(c, |k, _| if k == i { 1.0 } else { 0.0 })).collect();
    }
    let (s, vt) = padded_svd(a);
    (0..c).filter(|&i| s[i] <= tol).map(|i| vt.row(i).transpose()).collect()
}

pub fn real_rank(a: &DMatrix<f64>, tol: f64) -> usize {
    if a.nrows() == 0 || a.ncols() == 0 {
        return 0;
    }
    a.clone().svd(false, false).singular_values.iter().filter(|&&s| s > tol).count()
}
