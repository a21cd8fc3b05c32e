//! Deterministic random generators for group elements, functionals and
//! orbit points, shared by the verification suites and the acceptance tests.

use bms_core::{
    Bms21Element, FourierFunctional, IwasawaCoords, LittleGroup, OrbitPoint, Sl2Matrix,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// A random SL(2,R) element with every entry bounded by `max_entry`,
/// drawn through Iwasawa coordinates with rejection on the bound. The
/// coordinate spread scales with the bound so truncated spectral actions
/// on sampled elements stay well resolved at the default mode counts.
pub fn sl2(rng: &mut ChaCha8Rng, max_entry: f64) -> Sl2Matrix {
    let x_max = 0.3 * max_entry;
    let ly_max = 0.275 * max_entry;
    loop {
        let g = IwasawaCoords {
            x: rng.gen_range(-x_max..x_max),
            y: (rng.gen_range(-ly_max..ly_max)).exp(),
            theta_k: rng.gen_range(0.0..std::f64::consts::TAU),
        }
        .recompose();
        if g.max_abs_entry() <= max_entry {
            return g;
        }
    }
}

/// A random rotation.
pub fn rotation(rng: &mut ChaCha8Rng) -> Sl2Matrix {
    Sl2Matrix::rotation(rng.gen_range(0.0..std::f64::consts::TAU))
}

/// A smooth random functional: `order` harmonic pairs with geometrically
/// decaying amplitudes, so truncated actions stay well resolved.
pub fn functional(rng: &mut ChaCha8Rng, order: usize) -> FourierFunctional {
    let a0 = rng.gen_range(-1.0..1.0);
    let modes = (0..order)
        .map(|k| {
            let decay = 0.7f64.powi(k as i32);
            (
                decay * rng.gen_range(-1.0..1.0),
                decay * rng.gen_range(-1.0..1.0),
            )
        })
        .collect();
    FourierFunctional::from_coeffs(a0, modes)
}

/// A random group element with bounded Lorentz part.
pub fn element(rng: &mut ChaCha8Rng, max_entry: f64, order: usize) -> Bms21Element {
    Bms21Element::new(functional(rng, order), sl2(rng, max_entry))
}

/// A random point on the given orbit model, with y in a moderate band.
pub fn orbit_point(rng: &mut ChaCha8Rng, group: LittleGroup) -> OrbitPoint {
    let x = rng.gen_range(-1.5..1.5);
    let y = (rng.gen_range(-1.0f64..1.0)).exp();
    match group {
        LittleGroup::So2 => OrbitPoint::so2(x, y),
        LittleGroup::Cyclic(n) => {
            OrbitPoint::cyclic(n, x, y, rng.gen_range(0.0..std::f64::consts::TAU)).unwrap()
        }
    }
}

/// The fixed grid of section sample points used by the induced-operator
/// suites: an x/y tensor grid (with a fiber sweep on cyclic orbits).
pub fn section_grid(group: LittleGroup, per_axis: usize) -> Vec<OrbitPoint> {
    let mut pts = Vec::new();
    for i in 0..per_axis {
        for j in 0..per_axis {
            let x = -1.0 + 2.0 * (i as f64 + 0.5) / per_axis as f64;
            let y = (-0.7 + 1.4 * (j as f64 + 0.5) / per_axis as f64).exp();
            match group {
                LittleGroup::So2 => pts.push(OrbitPoint::so2(x, y)),
                LittleGroup::Cyclic(n) => {
                    let phi = std::f64::consts::TAU * ((i * per_axis + j) as f64 + 0.5)
                        / (per_axis * per_axis) as f64;
                    pts.push(OrbitPoint::cyclic(n, x, y, phi).unwrap());
                }
            }
        }
    }
    pts
}
