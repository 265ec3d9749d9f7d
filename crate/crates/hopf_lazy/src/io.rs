//! JSON structure-tensor format. Complex numbers are `[re, im]`; matrices are
//! lists of columns; a bilinear map is `[i][j] ↦ vector`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::linalg::{Bilinear, Matrix, Vector, C};
use crate::{FiniteHopf, LazyError, ModuleAlgebra, Piece, SecondOrder};

type Cx = [f64; 2];
type VecJ = Vec<Cx>;
type MatJ = Vec<VecJ>;

#[derive(Serialize, Deserialize)]
struct HopfJson {
    labels: Vec<String>,
    mul: Vec<Vec<VecJ>>,
    unit: VecJ,
    /// `comul[i][j][k]` is the coefficient of `e_j ⊗ e_k` in `Δ(e_i)`.
    comul: Vec<Vec<VecJ>>,
    counit: VecJ,
    antipode: MatJ,
    star: MatJ,
}

#[derive(Serialize, Deserialize)]
struct PieceJson {
    labels: Vec<String>,
    star: MatJ,
    action: Vec<MatJ>,
}

#[derive(Serialize, Deserialize)]
struct SecondJson {
    omega2: PieceJson,
    left: Vec<Vec<VecJ>>,
    right: Vec<Vec<VecJ>>,
    wedge: Vec<Vec<VecJ>>,
    d1: MatJ,
}

#[derive(Serialize, Deserialize)]
struct ModuleJson {
    name: String,
    hopf: HopfJson,
    b: PieceJson,
    b_mul: Vec<Vec<VecJ>>,
    b_unit: VecJ,
    m: PieceJson,
    left: Vec<Vec<VecJ>>,
    right: Vec<Vec<VecJ>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    d: Option<MatJ>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    second: Option<SecondJson>,
}

fn shape(msg: String) -> LazyError {
    LazyError::Shape(msg)
}

fn vec_out(v: &Vector) -> VecJ {
    v.iter().map(|c| [c.re, c.im]).collect()
}

fn vec_in(v: &VecJ, len: usize, what: &str) -> Result<Vector, LazyError> {
    if v.len() != len {
        return Err(shape(format!("{what}: expected length {len}, found {}", v.len())));
    }
    Ok(Vector::from_iterator(len, v.iter().map(|[re, im]| C::new(*re, *im))))
}

fn mat_out(m: &Matrix) -> MatJ {
    m.column_iter().map(|c| vec_out(&c.into_owned())).collect()
}

fn mat_in(m: &MatJ, rows: usize, cols: usize, what: &str) -> Result<Matrix, LazyError> {
    if m.len() != cols {
        return Err(shape(format!("{what}: expected {cols} columns, found {}", m.len())));
    }
    let cols = m.iter().map(|c| vec_in(c, rows, what)).collect::<Result<Vec<_>, _>>()?;
    if cols.is_empty() {
        return Ok(Matrix::zeros(rows, 0));
    }
    Ok(Matrix::from_columns(&cols))
}

fn bil_out(b: &Bilinear) -> Vec<Vec<VecJ>> {
    b.maps.iter().map(mat_out).collect()
}

fn bil_in(b: &[Vec<VecJ>], dims: (usize, usize, usize), what: &str) -> Result<Bilinear, LazyError> {
    let (dx, dy, dz) = dims;
    if b.len() != dx {
        return Err(shape(format!("{what}: expected {dx} slices, found {}", b.len())));
    }
    Ok(Bilinear::from_maps(b.iter().map(|m| mat_in(m, dz, dy, what)).collect::<Result<_, _>>()?, dy, dz))
}

fn hopf_out(h: &FiniteHopf) -> HopfJson {
    HopfJson {
        labels: h.labels.clone(),
        mul: bil_out(&h.mul),
        unit: vec_out(&h.unit),
        comul: h.comul.iter().map(|m| m.row_iter().map(|r| vec_out(&r.transpose())).collect()).collect(),
        counit: vec_out(&h.counit),
        antipode: mat_out(&h.antipode),
        star: mat_out(&h.star),
    }
}

fn hopf_in(j: &HopfJson) -> Result<FiniteHopf, LazyError> {
    let n = j.labels.len();
    if n == 0 {
        return Err(shape("Hopf algebra has no basis".into()));
    }
    if j.comul.len() != n {
        return Err(shape(format!("comul: expected {n} entries, found {}", j.comul.len())));
    }
    let comul = j
        .comul
        .iter()
        .map(|rows| mat_in(rows, n, n, "comul").map(|m| m.transpose()))
        .collect::<Result<_, _>>()?;
    Ok(FiniteHopf {
        labels: j.labels.clone(),
        mul: bil_in(&j.mul, (n, n, n), "mul")?,
        unit: vec_in(&j.unit, n, "unit")?,
        comul,
        counit: vec_in(&j.counit, n, "counit")?,
        antipode: mat_in(&j.antipode, n, n, "antipode")?,
        star: mat_in(&j.star, n, n, "star")?,
    })
}

fn piece_out(p: &Piece) -> PieceJson {
    PieceJson { labels: p.labels.clone(), star: mat_out(&p.star), action: p.action.iter().map(mat_out).collect() }
}

fn piece_in(j: &PieceJson, nh: usize, what: &str) -> Result<Piece, LazyError> {
    let n = j.labels.len();
    if j.action.len() != nh {
        return Err(shape(format!("{what}.action: expected {nh} matrices, found {}", j.action.len())));
    }
    Ok(Piece {
        labels: j.labels.clone(),
        star: mat_in(&j.star, n, n, what)?,
        action: j.action.iter().map(|m| mat_in(m, n, n, what)).collect::<Result<_, _>>()?,
    })
}

impl FiniteHopf {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&hopf_out(self)).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, LazyError> {
        hopf_in(&serde_json::from_str(s)?)
    }
}

impl ModuleAlgebra {
    pub fn to_json(&self) -> String {
        let j = ModuleJson {
            name: self.name.clone(),
            hopf: hopf_out(&self.hopf),
            b: piece_out(&self.b),
            b_mul: bil_out(&self.b_mul),
            b_unit: vec_out(&self.b_unit),
            m: piece_out(&self.m),
            left: bil_out(&self.left),
            right: bil_out(&self.right),
            d: self.d.as_ref().map(mat_out),
            second: self.second.as_ref().map(|s| SecondJson {
                omega2: piece_out(&s.omega2),
                left: bil_out(&s.left),
                right: bil_out(&s.right),
                wedge: bil_out(&s.wedge),
                d1: mat_out(&s.d1),
            }),
        };
        serde_json::to_string(&j).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, LazyError> {
        let j: ModuleJson = serde_json::from_str(s)?;
        let hopf = hopf_in(&j.hopf)?;
        let nh = hopf.dim();
        let b = piece_in(&j.b, nh, "b")?;
        let m = piece_in(&j.m, nh, "m")?;
        let (nb, nm) = (b.dim(), m.dim());
        let second = match &j.second {
            None => None,
            Some(s) => {
                let omega2 = piece_in(&s.omega2, nh, "omega2")?;
                let n2 = omega2.dim();
                Some(SecondOrder {
                    left: bil_in(&s.left, (nb, n2, n2), "omega2 left")?,
                    right: bil_in(&s.right, (n2, nb, n2), "omega2 right")?,
                    wedge: bil_in(&s.wedge, (nm, nm, n2), "wedge")?,
                    d1: mat_in(&s.d1, n2, nm, "d1")?,
                    omega2,
                })
            }
        };
        Ok(ModuleAlgebra {
            name: j.name.clone(),
            b_mul: bil_in(&j.b_mul, (nb, nb, nb), "b_mul")?,
            b_unit: vec_in(&j.b_unit, nb, "b_unit")?,
            left: bil_in(&j.left, (nb, nm, nm), "left")?,
            right: bil_in(&j.right, (nm, nb, nm), "right")?,
            d: j.d.as_ref().map(|d| mat_in(d, nm, nb, "d")).transpose()?,
            hopf,
            b,
            m,
            second,
        })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, LazyError> {
        let s = std::fs::read_to_string(path.as_ref())
            .map_err(|e| shape(format!("{}: {e}", path.as_ref().display())))?;
        Self::from_json(&s)
    }
}
