//! SL(2,ℝ) arithmetic, its right action on the projective circle, the
//! conformal factor κ, and the Iwasawa (NA·K) decomposition.
//!
//! A point of P¹(ℝ) is stored as the angle θ ∈ [0, 2π) with inhomogeneous
//! coordinate σ = tan(θ/2) and homogeneous row spinor
//! s = (sin(θ/2), cos(θ/2)). All circle-action formulas are evaluated in
//! homogeneous form, so σ = ∞ (θ = π) needs no special casing.

use crate::error::Error;
use crate::math;
use crate::Result;

/// A real unimodular 2×2 matrix, row-major `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sl2Matrix {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

/// Coordinates of the factorization g = [[√y, x/√y], [0, 1/√y]] · R(θ_k).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IwasawaCoords {
    pub x: f64,
    /// Strictly positive.
    pub y: f64,
    /// Rotation angle in [0, 2π).
    pub theta_k: f64,
}

/// A point of P¹(ℝ), stored as the circle angle θ ∈ [0, 2π).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectivePoint {
    theta: f64,
}

impl Sl2Matrix {
    pub const IDENTITY: Sl2Matrix = Sl2Matrix {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 1.0,
    };

    /// Builds a matrix, renormalizing determinant drift in `(1e-13, 1e-9]`
    /// by scaling and rejecting anything worse.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Sl2Matrix> {
        let det = a * d - b * c;
        let drift = math::fabs(det - 1.0);
        if drift <= 1e-13 {
            Ok(Sl2Matrix { a, b, c, d })
        } else if drift <= 1e-9 && det > 0.0 {
            let s = 1.0 / math::sqrt(det);
            Ok(Sl2Matrix {
                a: a * s,
                b: b * s,
                c: c * s,
                d: d * s,
            })
        } else {
            Err(Error::NotUnimodular { det })
        }
    }

    /// Internal constructor for entries that are unimodular by construction.
    pub(crate) fn new_unchecked(a: f64, b: f64, c: f64, d: f64) -> Sl2Matrix {
        Sl2Matrix { a, b, c, d }
    }

    /// The rotation R(α) = [[cos α, −sin α], [sin α, cos α]]; R(π) = −I.
    pub fn rotation(alpha: f64) -> Sl2Matrix {
        let (s, c) = math::sincos(alpha);
        Sl2Matrix {
            a: c,
            b: -s,
            c: s,
            d: c,
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn max_abs_entry(&self) -> f64 {
        math::fabs(self.a)
            .max(math::fabs(self.b))
            .max(math::fabs(self.c))
            .max(math::fabs(self.d))
    }

    /// Closed-form inverse [[d, −b], [−c, a]].
    pub fn inverse(&self) -> Sl2Matrix {
        Sl2Matrix {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// Returns α with `self = R(α)` if the matrix is a rotation.
    pub fn rotation_angle(&self) -> Option<f64> {
        if math::fabs(self.a - self.d) <= 1e-14 && math::fabs(self.b + self.c) <= 1e-14 {
            Some(math::atan2(self.c, self.a))
        } else {
            None
        }
    }

    /// Right action of `self` on a circle point: σ ↦ (σa + c)/(σb + d),
    /// evaluated homogeneously as s′ = s·g.
    pub fn act(&self, p: ProjectivePoint) -> ProjectivePoint {
        let (s1, s2) = p.spinor();
        let t1 = s1 * self.a + s2 * self.c;
        let t2 = s1 * self.b + s2 * self.d;
        ProjectivePoint::from_spinor(t1, t2)
    }

    /// Conformal factor κ_g(σ) = ((σb + d)² + (σa + c)²)/(1 + σ²),
    /// computed as |s·g|² with the unit spinor s. Strictly positive.
    pub fn kappa(&self, p: ProjectivePoint) -> f64 {
        let (s1, s2) = p.spinor();
        let t1 = s1 * self.a + s2 * self.c;
        let t2 = s1 * self.b + s2 * self.d;
        t1 * t1 + t2 * t2
    }

    /// NA·K factorization. Always defined: c² + d² > 0 for unimodular g.
    pub fn iwasawa(&self) -> IwasawaCoords {
        let y = 1.0 / (self.c * self.c + self.d * self.d);
        let theta_k = math::wrap_angle(math::atan2(self.c, self.d));
        let x = (self.a * self.c + self.b * self.d) * y;
        IwasawaCoords { x, y, theta_k }
    }
}

impl core::ops::Mul for Sl2Matrix {
    type Output = Sl2Matrix;

    /// Group multiplication; determinant drift beyond 1e-13 is scaled away
    /// to keep long products on the group manifold.
    fn mul(self, rhs: Sl2Matrix) -> Sl2Matrix {
        let mut m = Sl2Matrix {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        };
        let det = m.det();
        if math::fabs(det - 1.0) > 1e-13 && det > 0.0 {
            let s = 1.0 / math::sqrt(det);
            m.a *= s;
            m.b *= s;
            m.c *= s;
            m.d *= s;
        }
        m
    }
}

impl core::ops::Neg for Sl2Matrix {
    type Output = Sl2Matrix;

    fn neg(self) -> Sl2Matrix {
        Sl2Matrix {
            a: -self.a,
            b: -self.b,
            c: -self.c,
            d: -self.d,
        }
    }
}

impl IwasawaCoords {
    /// Reassembles [[√y, x/√y], [0, 1/√y]] · R(θ_k).
    pub fn recompose(&self) -> Sl2Matrix {
        let r = math::sqrt(self.y);
        let (s, c) = math::sincos(self.theta_k);
        // NA = [[r, x/r], [0, 1/r]]
        Sl2Matrix::new_unchecked(
            r * c + self.x / r * s,
            -r * s + self.x / r * c,
            s / r,
            c / r,
        )
    }
}

impl ProjectivePoint {
    /// Normalizes θ into [0, 2π); θ = 2π folds to 0.
    pub fn new(theta: f64) -> ProjectivePoint {
        ProjectivePoint {
            theta: math::wrap_angle(theta),
        }
    }

    /// Recovers the point from a homogeneous spinor (s₁, s₂) ≠ 0.
    /// (s₁, s₂) and (−s₁, −s₂) give the same point.
    pub fn from_spinor(s1: f64, s2: f64) -> ProjectivePoint {
        ProjectivePoint::new(2.0 * math::atan2(s1, s2))
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Inhomogeneous coordinate σ = tan(θ/2); infinite at θ = π.
    pub fn sigma(&self) -> f64 {
        let (s1, s2) = self.spinor();
        s1 / s2
    }

    /// Unit homogeneous row vector (sin(θ/2), cos(θ/2)).
    pub fn spinor(&self) -> (f64, f64) {
        math::sincos(0.5 * self.theta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use core::f64::consts::PI;
    use proptest::prelude::*;

    fn assert_mat_eq(g: Sl2Matrix, h: Sl2Matrix, tol: f64) {
        assert_abs_diff_eq!(g.a(), h.a(), epsilon = tol);
        assert_abs_diff_eq!(g.b(), h.b(), epsilon = tol);
        assert_abs_diff_eq!(g.c(), h.c(), epsilon = tol);
        assert_abs_diff_eq!(g.d(), h.d(), epsilon = tol);
    }

    #[test]
    fn constructor_rejects_non_unimodular() {
        assert!(Sl2Matrix::new(2.0, 0.0, 0.0, 2.0).is_err());
        assert!(Sl2Matrix::new(1.0, 0.0, 0.0, -1.0).is_err());
        // drift inside the renormalization band is repaired
        let g = Sl2Matrix::new(1.0 + 3e-10, 0.0, 0.0, 1.0).unwrap();
        assert!((g.det() - 1.0).abs() <= 1e-13);
    }

    #[test]
    fn identity_times_g_is_g() {
        let g = Sl2Matrix::new(1.0, 1.0, 0.0, 1.0).unwrap();
        assert_mat_eq(Sl2Matrix::IDENTITY * g, g, 0.0);
    }

    #[test]
    fn rotation_addition() {
        let (a, b) = (0.7, -1.3);
        assert_mat_eq(
            Sl2Matrix::rotation(a) * Sl2Matrix::rotation(b),
            Sl2Matrix::rotation(a + b),
            1e-14,
        );
    }

    #[test]
    fn hand_multiplication() {
        let g = Sl2Matrix::new(1.0, 0.0, 1.0, 1.0).unwrap();
        let h = Sl2Matrix::new(1.0, 1.0, 0.0, 1.0).unwrap();
        assert_mat_eq(g * h, Sl2Matrix::new(1.0, 1.0, 1.0, 2.0).unwrap(), 0.0);
    }

    #[test]
    fn inverse_cases() {
        assert_mat_eq(Sl2Matrix::IDENTITY.inverse(), Sl2Matrix::IDENTITY, 0.0);
        assert_mat_eq(
            Sl2Matrix::rotation(0.4).inverse(),
            Sl2Matrix::rotation(-0.4),
            1e-15,
        );
        let g = Sl2Matrix::new(2.0, 0.0, 0.0, 0.5).unwrap();
        assert_mat_eq(g.inverse(), Sl2Matrix::new(0.5, 0.0, 0.0, 2.0).unwrap(), 0.0);
        let h = Sl2Matrix::new(1.7, 0.3, 2.0, (1.0 + 0.3 * 2.0) / 1.7).unwrap();
        assert_mat_eq(h * h.inverse(), Sl2Matrix::IDENTITY, 1e-13);
    }

    #[test]
    fn act_point_examples() {
        let p = ProjectivePoint::new(2.13);
        assert_abs_diff_eq!(
            Sl2Matrix::IDENTITY.act(p).theta(),
            p.theta(),
            epsilon = 1e-15
        );
        // σ = 0 under [[1,0],[1,1]] goes to σ' = 1 (θ' = π/2)
        let g = Sl2Matrix::new(1.0, 0.0, 1.0, 1.0).unwrap();
        assert_abs_diff_eq!(
            g.act(ProjectivePoint::new(0.0)).theta(),
            PI / 2.0,
            epsilon = 1e-14
        );
        // rotations shift θ by 2α
        let a = 0.9;
        let q = Sl2Matrix::rotation(a).act(p);
        assert_abs_diff_eq!(q.theta(), p.theta() + 2.0 * a, epsilon = 1e-13);
    }

    #[test]
    fn act_point_at_infinity() {
        // θ = π is σ = ∞; [[1,1],[0,1]] sends σ ↦ σ/(σ + 1) → 1 at infinity
        let g = Sl2Matrix::new(1.0, 1.0, 0.0, 1.0).unwrap();
        let q = g.act(ProjectivePoint::new(PI));
        assert_abs_diff_eq!(q.sigma(), 1.0, epsilon = 1e-13);
    }

    #[test]
    fn kappa_examples() {
        let p = ProjectivePoint::new(1.1);
        assert_abs_diff_eq!(Sl2Matrix::IDENTITY.kappa(p), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(Sl2Matrix::rotation(2.5).kappa(p), 1.0, epsilon = 1e-14);
        let g = Sl2Matrix::new(2.0, 0.0, 0.0, 0.5).unwrap();
        assert_abs_diff_eq!(g.kappa(ProjectivePoint::new(0.0)), 0.25, epsilon = 1e-15);
    }

    #[test]
    fn minus_identity_in_kernel() {
        let m = -Sl2Matrix::IDENTITY;
        for i in 0..16 {
            let p = ProjectivePoint::new(0.4 * i as f64);
            assert_abs_diff_eq!(m.act(p).theta(), p.theta(), epsilon = 1e-13);
            assert_abs_diff_eq!(m.kappa(p), 1.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn rotation_examples() {
        assert_mat_eq(Sl2Matrix::rotation(0.0), Sl2Matrix::IDENTITY, 0.0);
        assert_mat_eq(Sl2Matrix::rotation(PI), -Sl2Matrix::IDENTITY, 1e-15);
        let q = Sl2Matrix::rotation(PI / 2.0);
        assert_mat_eq(q, Sl2Matrix::new_unchecked(0.0, -1.0, 1.0, 0.0), 1e-15);
    }

    #[test]
    fn iwasawa_examples() {
        let iw = Sl2Matrix::IDENTITY.iwasawa();
        assert_eq!((iw.x, iw.y, iw.theta_k), (0.0, 1.0, 0.0));
        let iw = Sl2Matrix::new(2.0, 0.0, 0.0, 0.5).unwrap().iwasawa();
        assert_abs_diff_eq!(iw.x, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(iw.y, 4.0, epsilon = 1e-14);
        assert_abs_diff_eq!(iw.theta_k, 0.0, epsilon = 1e-15);
        let a = 1.2;
        let iw = Sl2Matrix::rotation(a).iwasawa();
        assert_abs_diff_eq!(iw.x, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(iw.y, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(iw.theta_k, a, epsilon = 1e-14);
    }

    #[test]
    fn jacobian_matches_inverse_kappa() {
        // dθ'/dθ = 1/κ_g(θ), central differences at h = 1e-6
        let g = Sl2Matrix::new(1.4, 0.3, 0.5, (1.0 + 0.3 * 0.5) / 1.4).unwrap();
        let h = 1e-6;
        for i in 0..50 {
            let t = 0.125 * i as f64;
            let tp = g.act(ProjectivePoint::new(t + h)).theta();
            let tm = g.act(ProjectivePoint::new(t - h)).theta();
            let d = crate::math::wrap_symmetric(tp - tm) / (2.0 * h);
            let k = g.kappa(ProjectivePoint::new(t));
            assert!((d * k - 1.0).abs() < 1e-6, "t={t} err={}", (d * k - 1.0).abs());
        }
    }

    fn arb_sl2() -> impl Strategy<Value = Sl2Matrix> {
        (-1.0f64..1.0, -1.2f64..1.2, 0.0f64..crate::math::TAU).prop_map(|(x, ly, th)| {
            IwasawaCoords {
                x,
                y: crate::math::exp(ly),
                theta_k: th,
            }
            .recompose()
        })
    }

    proptest! {
        #[test]
        fn kappa_cocycle(g1 in arb_sl2(), g2 in arb_sl2(), t in 0.0f64..crate::math::TAU) {
            let p = ProjectivePoint::new(t);
            let lhs = (g1 * g2).kappa(p);
            let rhs = g1.kappa(p) * g2.kappa(g1.act(p));
            prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0));
        }

        #[test]
        fn action_composes(g1 in arb_sl2(), g2 in arb_sl2(), t in 0.0f64..crate::math::TAU) {
            let p = ProjectivePoint::new(t);
            let lhs = g2.act(g1.act(p));
            let rhs = (g1 * g2).act(p);
            let d = crate::math::wrap_symmetric(lhs.theta() - rhs.theta()).abs();
            prop_assert!(d <= 1e-11);
        }

        #[test]
        fn iwasawa_round_trip(g in arb_sl2()) {
            let r = g.iwasawa().recompose();
            prop_assert!((g.a() - r.a()).abs() <= 1e-12);
            prop_assert!((g.b() - r.b()).abs() <= 1e-12);
            prop_assert!((g.c() - r.c()).abs() <= 1e-12);
            prop_assert!((g.d() - r.d()).abs() <= 1e-12);
        }
    }
}
