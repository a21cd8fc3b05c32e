//! ℝ^{2,1} machinery: the Minkowski inner product, the symmetric-matrix map
//! b(x), the double cover γ: SL(2,ℝ) → SO(2,1), the spinor parametrization
//! of the future null cone, and the bridge from circle functions to
//! degree-one homogeneous functions on the cone.
//!
//! Row-vector conventions throughout: vectors transform as x ↦ xΛ and
//! spinors as s ↦ sg.

use crate::error::Error;
use crate::fourier::FourierFunctional;
use crate::math;
use crate::sl2::{ProjectivePoint, Sl2Matrix};
use crate::Result;

/// A vector x = (x⁰, x¹, x²) of ℝ^{2,1}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vector21 {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
}

/// A symmetric 2×2 matrix [[m11, m12], [m12, m22]].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymMatrix2 {
    pub m11: f64,
    pub m12: f64,
    pub m22: f64,
}

/// A 3×3 matrix acting on row vectors, x ↦ xΛ; entries[mu][nu] is the
/// ν-component of the image of the μ-th basis vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lorentz3Matrix {
    pub entries: [[f64; 3]; 3],
}

impl Vector21 {
    pub const ZERO: Vector21 = Vector21 {
        x0: 0.0,
        x1: 0.0,
        x2: 0.0,
    };

    pub fn new(x0: f64, x1: f64, x2: f64) -> Vector21 {
        Vector21 { x0, x1, x2 }
    }

    /// x·y = x⁰y⁰ − x¹y¹ − x²y².
    pub fn dot(&self, other: &Vector21) -> f64 {
        self.x0 * other.x0 - self.x1 * other.x1 - self.x2 * other.x2
    }

    /// b(x) = [[x⁰ − x¹, x²], [x², x⁰ + x¹]]; det b(x) = x·x.
    pub fn to_sym(&self) -> SymMatrix2 {
        SymMatrix2 {
            m11: self.x0 - self.x1,
            m12: self.x2,
            m22: self.x0 + self.x1,
        }
    }

    pub fn scaled(&self, t: f64) -> Vector21 {
        Vector21 {
            x0: t * self.x0,
            x1: t * self.x1,
            x2: t * self.x2,
        }
    }
}

impl SymMatrix2 {
    pub fn det(&self) -> f64 {
        self.m11 * self.m22 - self.m12 * self.m12
    }

    pub fn trace(&self) -> f64 {
        self.m11 + self.m22
    }

    /// Inverse of the map b.
    pub fn to_vector(&self) -> Vector21 {
        Vector21 {
            x0: 0.5 * (self.m11 + self.m22),
            x1: 0.5 * (self.m22 - self.m11),
            x2: self.m12,
        }
    }

    /// gᵀ·m·g, the SL(2,ℝ) action on symmetric matrices.
    pub fn congruence(&self, g: &Sl2Matrix) -> SymMatrix2 {
        let (a, b, c, d) = (g.a(), g.b(), g.c(), g.d());
        // columns of g act: (gᵀ m g)_{ij} = gᵀ_i · m · g_j with g_1 = (a, c), g_2 = (b, d)
        let m11 = a * (self.m11 * a + self.m12 * c) + c * (self.m12 * a + self.m22 * c);
        let m12 = a * (self.m11 * b + self.m12 * d) + c * (self.m12 * b + self.m22 * d);
        let m22 = b * (self.m11 * b + self.m12 * d) + d * (self.m12 * b + self.m22 * d);
        SymMatrix2 { m11, m12, m22 }
    }
}

impl Lorentz3Matrix {
    pub const IDENTITY: Lorentz3Matrix = Lorentz3Matrix {
        entries: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
    };

    pub fn apply(&self, x: &Vector21) -> Vector21 {
        let r = [x.x0, x.x1, x.x2];
        let mut out = [0.0f64; 3];
        for (nu, slot) in out.iter_mut().enumerate() {
            *slot = (0..3).map(|mu| r[mu] * self.entries[mu][nu]).sum();
        }
        Vector21::new(out[0], out[1], out[2])
    }

    /// Composition in row convention: x(Λ₁Λ₂) = (xΛ₁)Λ₂.
    pub fn compose(&self, other: &Lorentz3Matrix) -> Lorentz3Matrix {
        let mut entries = [[0.0f64; 3]; 3];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = (0..3).map(|k| self.entries[i][k] * other.entries[k][j]).sum();
            }
        }
        Lorentz3Matrix { entries }
    }

    pub fn det(&self) -> f64 {
        let e = &self.entries;
        e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
            - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
            + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0])
    }

    /// max |ΛᵀηΛ − η| with η = diag(1, −1, −1).
    pub fn eta_residual(&self) -> f64 {
        let eta = [1.0, -1.0, -1.0];
        let mut worst = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                let mut s = 0.0;
                for (k, sign) in eta.iter().enumerate() {
                    s += self.entries[i][k] * sign * self.entries[j][k];
                }
                let target = if i == j { eta[i] } else { 0.0 };
                worst = worst.max(math::fabs(s - target));
            }
        }
        worst
    }

    pub fn max_abs_diff(&self, other: &Lorentz3Matrix) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                worst = worst.max(math::fabs(self.entries[i][j] - other.entries[i][j]));
            }
        }
        worst
    }
}

/// The double cover γ: SL(2,ℝ) → SO(2,1), defined by b(xγ(g)) = gᵀ b(x) g.
/// γ(−I) = γ(I) = identity.
pub fn gamma(g: &Sl2Matrix) -> Lorentz3Matrix {
    let basis = [
        Vector21::new(1.0, 0.0, 0.0),
        Vector21::new(0.0, 1.0, 0.0),
        Vector21::new(0.0, 0.0, 1.0),
    ];
    let mut entries = [[0.0f64; 3]; 3];
    for (mu, e) in basis.iter().enumerate() {
        let image = e.to_sym().congruence(g).to_vector();
        entries[mu] = [image.x0, image.x1, image.x2];
    }
    Lorentz3Matrix { entries }
}

/// Rank-one parametrization of the future null cone: s ↦ sᵀs.
/// s and −s label the same null ray.
pub fn spinor_to_null(s1: f64, s2: f64) -> Result<SymMatrix2> {
    if s1 == 0.0 && s2 == 0.0 {
        return Err(Error::ZeroSpinor);
    }
    Ok(SymMatrix2 {
        m11: s1 * s1,
        m12: s1 * s2,
        m22: s2 * s2,
    })
}

/// The projective angle of the null ray through x (future cone only).
pub fn projective_angle(x: &Vector21) -> Result<ProjectivePoint> {
    if x.x0 <= 0.0 || math::fabs(x.dot(x)) > 1e-9 * x.x0 * x.x0 {
        return Err(Error::NotOnNullCone);
    }
    let m = x.to_sym();
    let tr = m.trace();
    // normalized spinor with s1 = sin(θ/2) >= 0
    let (s1, s2) = if m.m11 >= m.m22 {
        let s1 = math::sqrt(m.m11 / tr);
        (s1, m.m12 / (tr * s1))
    } else {
        let mag = math::sqrt(m.m22 / tr);
        let s2 = if m.m12 >= 0.0 { mag } else { -mag };
        if m.m12 == 0.0 {
            (0.0, mag)
        } else {
            (m.m12 / (tr * s2), s2)
        }
    };
    Ok(ProjectivePoint::from_spinor(s1, s2))
}

/// Evaluates the degree-one homogeneous lift of β at a point x of the
/// future null cone: f(x) = x⁰·β(θ(x)), so that f(tx) = t·f(x) for t > 0.
pub fn lift_homogeneous(beta: &FourierFunctional, x: &Vector21) -> Result<f64> {
    let p = projective_angle(x)?;
    Ok(x.x0 * beta.evaluate(p.theta()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use core::f64::consts::PI;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sample_sl2(rng: &mut ChaCha8Rng) -> Sl2Matrix {
        crate::sl2::IwasawaCoords {
            x: rng.gen_range(-1.0..1.0),
            y: math::exp(rng.gen_range(-1.2..1.2)),
            theta_k: rng.gen_range(0.0..math::TAU),
        }
        .recompose()
    }

    #[test]
    fn dot_examples() {
        let t = Vector21::new(1.0, 0.0, 0.0);
        assert_eq!(t.dot(&t), 1.0);
        let n = Vector21::new(1.0, 1.0, 0.0);
        assert_eq!(n.dot(&n), 0.0);
        let e1 = Vector21::new(0.0, 1.0, 0.0);
        assert_eq!(t.dot(&e1), 0.0);
    }

    #[test]
    fn to_sym_examples() {
        let z = Vector21::ZERO.to_sym();
        assert_eq!((z.m11, z.m12, z.m22), (0.0, 0.0, 0.0));
        let m = Vector21::new(1.0, 1.0, 0.0).to_sym();
        assert_eq!((m.m11, m.m12, m.m22), (0.0, 0.0, 2.0));
    }

    #[test]
    fn det_of_b_is_minkowski_norm() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let x = Vector21::new(
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
            );
            let lhs = x.to_sym().det();
            let rhs = x.dot(&x);
            assert!((lhs - rhs).abs() <= 1e-13 * (1.0 + rhs.abs()));
        }
    }

    #[test]
    fn gamma_of_identity_and_minus_identity() {
        assert_eq!(gamma(&Sl2Matrix::IDENTITY), Lorentz3Matrix::IDENTITY);
        let m = gamma(&-Sl2Matrix::IDENTITY);
        assert!(m.max_abs_diff(&Lorentz3Matrix::IDENTITY) <= 1e-14);
    }

    #[test]
    fn gamma_is_homomorphism_and_orthochronous() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let g1 = sample_sl2(&mut rng);
            let g2 = sample_sl2(&mut rng);
            let lhs = gamma(&(g1 * g2));
            let rhs = gamma(&g1).compose(&gamma(&g2));
            assert!(lhs.max_abs_diff(&rhs) <= 1e-12 * (1.0 + lhs.entries[0][0].abs()));
            let l = gamma(&g1);
            assert!(l.eta_residual() <= 1e-12);
            assert!((l.det() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn gamma_preserves_dot_and_equivariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..200 {
            let g = sample_sl2(&mut rng);
            let l = gamma(&g);
            let x = Vector21::new(
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            );
            let y = Vector21::new(
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            );
            assert_abs_diff_eq!(l.apply(&x).dot(&l.apply(&y)), x.dot(&y), epsilon = 1e-11);
            // to_sym(x γ(g)) = gᵀ to_sym(x) g
            let lhs = l.apply(&x).to_sym();
            let rhs = x.to_sym().congruence(&g);
            assert_abs_diff_eq!(lhs.m11, rhs.m11, epsilon = 1e-11);
            assert_abs_diff_eq!(lhs.m12, rhs.m12, epsilon = 1e-11);
            assert_abs_diff_eq!(lhs.m22, rhs.m22, epsilon = 1e-11);
        }
    }

    #[test]
    fn spinor_examples() {
        let m = spinor_to_null(0.0, math::sqrt(2.0)).unwrap();
        assert_abs_diff_eq!(m.m11, 0.0);
        assert_abs_diff_eq!(m.m12, 0.0);
        assert_abs_diff_eq!(m.m22, 2.0, epsilon = 1e-15);
        let v = m.to_vector();
        assert_abs_diff_eq!(v.x0, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(v.x1, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(v.x2, 0.0, epsilon = 1e-15);
        let m = spinor_to_null(1.0, 0.0).unwrap();
        assert_eq!((m.m11, m.m12, m.m22), (1.0, 0.0, 0.0));
        // sign flip gives the same matrix
        let p = spinor_to_null(0.6, -0.8).unwrap();
        let q = spinor_to_null(-0.6, 0.8).unwrap();
        assert_eq!(p, q);
        assert!(spinor_to_null(0.0, 0.0).is_err());
        // always rank one and future pointing
        assert!(p.det().abs() <= 1e-15 && p.trace() > 0.0);
    }

    #[test]
    fn lift_examples() {
        let one = FourierFunctional::constant(1.0);
        let x = Vector21::new(5.0, 3.0, 4.0);
        assert_abs_diff_eq!(lift_homogeneous(&one, &x).unwrap(), 5.0, epsilon = 1e-12);
        // rays on the x⁰ = 1 slice: θ recovered through the spinor chart
        let beta = FourierFunctional::from_coeffs(0.2, vec![(0.7, -0.4), (0.1, 0.3)]);
        for i in 0..16 {
            let phi = math::TAU * i as f64 / 16.0;
            let x = Vector21::new(1.0, math::cos(phi), math::sin(phi));
            let theta = projective_angle(&x).unwrap().theta();
            // brute-force oracle: the spinor of this ray satisfies sᵀs = b(x)/2...
            // check the defining property instead: spinor_to_null(spinor) ∝ b(x)
            let p = ProjectivePoint::new(theta);
            let (s1, s2) = p.spinor();
            let m = spinor_to_null(s1, s2).unwrap();
            let b = x.to_sym();
            let scale = b.trace() / m.trace();
            assert_abs_diff_eq!(m.m11 * scale, b.m11, epsilon = 1e-12);
            assert_abs_diff_eq!(m.m12 * scale, b.m12, epsilon = 1e-12);
            assert_abs_diff_eq!(m.m22 * scale, b.m22, epsilon = 1e-12);
            assert_abs_diff_eq!(
                lift_homogeneous(&beta, &x).unwrap(),
                beta.evaluate(theta),
                epsilon = 1e-13
            );
        }
    }

    #[test]
    fn homogeneity() {
        let beta = FourierFunctional::from_coeffs(0.4, vec![(1.0, 0.5)]);
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..500 {
            let phi = rng.gen_range(0.0..math::TAU);
            let r = math::exp(rng.gen_range(-1.0..2.0));
            let x = Vector21::new(r, r * math::cos(phi), r * math::sin(phi));
            let f = lift_homogeneous(&beta, &x).unwrap();
            for t in [0.1, 1.0, 7.3] {
                let ft = lift_homogeneous(&beta, &x.scaled(t)).unwrap();
                assert!((ft - t * f).abs() <= 1e-12 * (1.0 + f.abs() * t));
            }
        }
    }

    #[test]
    fn rejects_off_cone_and_past_cone() {
        let beta = FourierFunctional::constant(1.0);
        assert_eq!(
            lift_homogeneous(&beta, &Vector21::new(1.0, 0.0, 0.0)),
            Err(Error::NotOnNullCone)
        );
        assert_eq!(
            lift_homogeneous(&beta, &Vector21::new(-1.0, 1.0, 0.0)),
            Err(Error::NotOnNullCone)
        );
    }

    #[test]
    fn projective_angle_quadrant_coverage() {
        // θ(x) must be consistent with the action chart: the ray of angle θ
        // is (1, cos..) — verify round trip through spinor_to_null for a grid
        for i in 0..64 {
            let theta = math::TAU * (i as f64 + 0.5) / 64.0;
            let (s1, s2) = ProjectivePoint::new(theta).spinor();
            let x = spinor_to_null(s1, s2).unwrap().to_vector();
            let back = projective_angle(&x).unwrap().theta();
            assert!(
                crate::math::wrap_symmetric(back - theta).abs() <= 1e-12,
                "theta={theta} back={back}"
            );
        }
        let _ = PI;
    }
}
