//! JSON and CSV encodings of the core types.

use bms_core::{Bms21Element, FourierFunctional, Sl2Matrix, Vector21};
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
pub struct MatrixJson {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FunctionalJson {
    pub a0: f64,
    #[serde(default)]
    pub modes: Vec<(f64, f64)>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ElementJson {
    pub alpha: FunctionalJson,
    pub g: MatrixJson,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VectorJson {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
}

impl MatrixJson {
    pub fn to_matrix(&self) -> bms_core::Result<Sl2Matrix> {
        Sl2Matrix::new(self.a, self.b, self.c, self.d)
    }

    pub fn from_matrix(g: &Sl2Matrix) -> MatrixJson {
        MatrixJson {
            a: g.a(),
            b: g.b(),
            c: g.c(),
            d: g.d(),
        }
    }
}

impl FunctionalJson {
    pub fn to_functional(&self) -> FourierFunctional {
        FourierFunctional::from_coeffs(self.a0, self.modes.clone())
    }

    pub fn from_functional(f: &FourierFunctional) -> FunctionalJson {
        FunctionalJson {
            a0: f.a0(),
            modes: f.modes().to_vec(),
        }
    }
}

impl ElementJson {
    pub fn to_element(&self) -> bms_core::Result<Bms21Element> {
        Ok(Bms21Element::new(
            self.alpha.to_functional(),
            self.g.to_matrix()?,
        ))
    }

    pub fn from_element(h: &Bms21Element) -> ElementJson {
        ElementJson {
            alpha: FunctionalJson::from_functional(&h.alpha),
            g: MatrixJson::from_matrix(&h.g),
        }
    }
}

impl VectorJson {
    pub fn to_vector(&self) -> Vector21 {
        Vector21::new(self.x0, self.x1, self.x2)
    }
}

/// CSV dump of sampled functional values (theta, value), for plotting.
pub fn functional_csv(f: &FourierFunctional, samples: usize) -> String {
    let mut out = String::from("theta,value\n");
    for j in 0..samples {
        let t = std::f64::consts::TAU * j as f64 / samples as f64;
        out.push_str(&format!("{t:.17e},{:.17e}\n", f.evaluate(t)));
    }
    out
}
