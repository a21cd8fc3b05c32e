//! Orbit models G/SO(2) ≅ H² and G/C_n, their Iwasawa coset sections, the
//! Wigner cocycle, the orbit functionals f_q = T′(s(q))·f_base, and the
//! G-invariant measures obtained by projecting Haar measure.
//!
//! Haar measure on SL(2,ℝ) is normalized as dμ = (1/2π)·dx·dy·y⁻²·dθ_k in
//! Iwasawa coordinates, so the compact fiber has unit mass; the projected
//! orbit densities are 1/y² on H² and (n/2π)/y² on the C_n model.

use crate::error::Error;
use crate::fourier::{self, FourierFunctional};
use crate::little::{self, LittleGroup, LittleGroupElement};
use crate::math;
use crate::sl2::{IwasawaCoords, Sl2Matrix};
use crate::Result;

/// A point of an orbit model: upper-half-plane coordinates (x, y) for the
/// SO(2) orbit, plus a fiber angle φ ∈ [0, 2π/n) for the C_n orbit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OrbitPoint {
    So2 { x: f64, y: f64 },
    Cyclic { n: u32, x: f64, y: f64, phi: f64 },
}

/// The projected-Haar measure on an orbit model, fixed up to the one global
/// constant which we pin to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OrbitMeasure {
    So2,
    Cyclic { n: u32 },
}

impl OrbitPoint {
    pub fn so2(x: f64, y: f64) -> OrbitPoint {
        assert!(y > 0.0, "orbit point needs y > 0");
        OrbitPoint::So2 { x, y }
    }

    /// φ is normalized into [0, 2π/n).
    pub fn cyclic(n: u32, x: f64, y: f64, phi: f64) -> Result<OrbitPoint> {
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::OddCyclicOrder { n });
        }
        assert!(y > 0.0, "orbit point needs y > 0");
        let period = math::TAU / n as f64;
        let mut p = phi - period * math::floor(phi / period);
        if p >= period || p < 0.0 {
            p = 0.0;
        }
        Ok(OrbitPoint::Cyclic { n, x, y, phi: p })
    }

    /// The base coset of the model.
    pub fn base(group: LittleGroup) -> OrbitPoint {
        match group {
            LittleGroup::So2 => OrbitPoint::So2 { x: 0.0, y: 1.0 },
            LittleGroup::Cyclic(n) => OrbitPoint::Cyclic {
                n,
                x: 0.0,
                y: 1.0,
                phi: 0.0,
            },
        }
    }

    pub fn little_group(&self) -> LittleGroup {
        match self {
            OrbitPoint::So2 { .. } => LittleGroup::So2,
            OrbitPoint::Cyclic { n, .. } => LittleGroup::Cyclic(*n),
        }
    }

    pub fn same_kind(&self, other: &OrbitPoint) -> bool {
        self.little_group() == other.little_group()
    }

    pub fn coords(&self) -> (f64, f64, Option<f64>) {
        match self {
            OrbitPoint::So2 { x, y } => (*x, *y, None),
            OrbitPoint::Cyclic { x, y, phi, .. } => (*x, *y, Some(*phi)),
        }
    }
}

/// The Iwasawa (Borel) coset representative s(q): the NA matrix
/// [[√y, x/√y], [0, 1/√y]], times R(φ) on the cyclic model.
pub fn section(q: &OrbitPoint) -> Sl2Matrix {
    match q {
        OrbitPoint::So2 { x, y } => IwasawaCoords {
            x: *x,
            y: *y,
            theta_k: 0.0,
        }
        .recompose(),
        OrbitPoint::Cyclic { x, y, phi, .. } => IwasawaCoords {
            x: *x,
            y: *y,
            theta_k: *phi,
        }
        .recompose(),
    }
}

/// Left coset action: decomposes g·s(q) = s(q′)·ℓ with ℓ in the little
/// group, returning (q′, ℓ). On the cyclic model the rotation angle splits
/// as θ_k = φ′ + 2πj/n with φ′ ∈ [0, 2π/n), ties resolved toward j.
pub fn coset_act(g: &Sl2Matrix, q: &OrbitPoint) -> (OrbitPoint, LittleGroupElement) {
    let iw = (*g * section(q)).iwasawa();
    match q {
        OrbitPoint::So2 { .. } => (
            OrbitPoint::So2 { x: iw.x, y: iw.y },
            LittleGroupElement::So2 { angle: iw.theta_k },
        ),
        OrbitPoint::Cyclic { n, .. } => {
            let period = math::TAU / *n as f64;
            let mut j = math::floor(iw.theta_k / period) as i64;
            let mut phi = iw.theta_k - j as f64 * period;
            // fold a tie at the upper fiber boundary into the next j
            if phi >= period {
                phi = 0.0;
                j += 1;
            }
            let j = j.rem_euclid(*n as i64) as u32;
            (
                OrbitPoint::Cyclic {
                    n: *n,
                    x: iw.x,
                    y: iw.y,
                    phi,
                },
                LittleGroupElement::Cyclic { n: *n, j },
            )
        }
    }
}

/// The functional sitting over coset q: f_q = T′(s(q))·f_base. The base
/// functional must be invariant under the orbit's little group.
pub fn orbit_functional(
    f_base: &FourierFunctional,
    q: &OrbitPoint,
    n_out: usize,
    m: usize,
) -> Result<FourierFunctional> {
    let residual = little::invariance_residual(f_base, q.little_group());
    if residual > 1e-9 {
        return Err(Error::NotInvariant { residual });
    }
    Ok(fourier::act_dual(&section(q), f_base, n_out, m).functional)
}

/// Density of the projected Haar measure at q (global constant pinned to 1).
pub fn measure_density(mu: &OrbitMeasure, q: &OrbitPoint) -> f64 {
    match (mu, q) {
        (OrbitMeasure::So2, OrbitPoint::So2 { y, .. }) => 1.0 / (y * y),
        (OrbitMeasure::Cyclic { n }, OrbitPoint::Cyclic { y, .. }) => {
            *n as f64 / math::TAU / (y * y)
        }
        _ => panic!("measure/orbit kind mismatch"),
    }
}

impl OrbitMeasure {
    pub fn for_orbit(q: &OrbitPoint) -> OrbitMeasure {
        match q {
            OrbitPoint::So2 { .. } => OrbitMeasure::So2,
            OrbitPoint::Cyclic { n, .. } => OrbitMeasure::Cyclic { n: *n },
        }
    }
}

/// dμ_g/dμ at q, computed honestly: the density ratio times the finite-
/// difference Jacobian of q ↦ g⁻¹·q. Invariance of the projected Haar
/// measure forces the value 1; a deviation beyond 1e-4 is reported as an
/// implementation bug.
pub fn radon_nikodym(g: &Sl2Matrix, q: &OrbitPoint) -> Result<f64> {
    // the identity moves nothing; skip the finite-difference noise
    if g.a() == 1.0 && g.b() == 0.0 && g.c() == 0.0 && g.d() == 1.0 {
        return Ok(1.0);
    }
    let ginv = g.inverse();
    let mu = OrbitMeasure::for_orbit(q);
    let value = match q {
        OrbitPoint::So2 { x, y } => {
            let map = |x: f64, y: f64| {
                let iw = (ginv * section(&OrbitPoint::So2 { x, y })).iwasawa();
                (iw.x, iw.y)
            };
            let hx = 1e-6 * (1.0 + math::fabs(*x));
            let hy = 1e-6 * y;
            let (xp, yp) = map(x + hx, *y);
            let (xm, ym) = map(x - hx, *y);
            let (xq, yq) = map(*x, y + hy);
            let (xr, yr) = map(*x, y - hy);
            let j11 = (xp - xm) / (2.0 * hx);
            let j12 = (yp - ym) / (2.0 * hx);
            let j21 = (xq - xr) / (2.0 * hy);
            let j22 = (yq - yr) / (2.0 * hy);
            let jac = math::fabs(j11 * j22 - j12 * j21);
            let moved = coset_act(&ginv, q).0;
            jac * measure_density(&mu, &moved) / measure_density(&mu, q)
        }
        OrbitPoint::Cyclic { n, x, y, phi } => {
            // differentiate through the unwrapped Iwasawa angle; φ and θ_k
            // agree locally up to a constant, so the Jacobians coincide
            let map = |x: f64, y: f64, phi: f64| {
                let s = IwasawaCoords {
                    x,
                    y,
                    theta_k: phi,
                }
                .recompose();
                let iw = (ginv * s).iwasawa();
                (iw.x, iw.y, iw.theta_k)
            };
            let hx = 1e-6 * (1.0 + math::fabs(*x));
            let hy = 1e-6 * y;
            let hp = 1e-6;
            let base = map(*x, *y, *phi);
            let col = |p: (f64, f64, f64), m_: (f64, f64, f64), h: f64| {
                [
                    (p.0 - m_.0) / (2.0 * h),
                    (p.1 - m_.1) / (2.0 * h),
                    math::wrap_symmetric(p.2 - m_.2) / (2.0 * h),
                ]
            };
            let r1 = col(map(x + hx, *y, *phi), map(x - hx, *y, *phi), hx);
            let r2 = col(map(*x, y + hy, *phi), map(*x, y - hy, *phi), hy);
            let r3 = col(map(*x, *y, phi + hp), map(*x, *y, phi - hp), hp);
            let jac = math::fabs(
                r1[0] * (r2[1] * r3[2] - r2[2] * r3[1])
                    - r1[1] * (r2[0] * r3[2] - r2[2] * r3[0])
                    + r1[2] * (r2[0] * r3[1] - r2[1] * r3[0]),
            );
            let moved = OrbitPoint::cyclic(*n, base.0, base.1, base.2)?;
            jac * measure_density(&mu, &moved) / measure_density(&mu, q)
        }
    };
    if math::fabs(value - 1.0) > 1e-4 {
        return Err(Error::MeasureNotInvariant { value });
    }
    Ok(value)
}
