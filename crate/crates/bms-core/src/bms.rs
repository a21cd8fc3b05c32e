//! The semidirect product B(2,1) itself: pairs (α, g) with
//! (α₁, g₁)·(α₂, g₂) = (α₁ + T(g₁)α₂, g₁g₂).

use crate::fourier::{self, FourierFunctional};
use crate::sl2::Sl2Matrix;

/// An element (α, g) of B(2,1) = L²(P¹(ℝ), λ, ℝ) ⋊_T SL(2,ℝ).
#[derive(Debug, Clone)]
pub struct Bms21Element {
    pub alpha: FourierFunctional,
    pub g: Sl2Matrix,
}

/// Default truncation order for the supertranslation part of a product.
const DEFAULT_ORDER: usize = 32;

impl Bms21Element {
    pub fn new(alpha: FourierFunctional, g: Sl2Matrix) -> Bms21Element {
        Bms21Element { alpha, g }
    }

    pub fn identity() -> Bms21Element {
        Bms21Element {
            alpha: FourierFunctional::zero(),
            g: Sl2Matrix::IDENTITY,
        }
    }

    /// Group law (α₁ + T(g₁)α₂, g₁g₂) with the default truncation policy:
    /// the product keeps max(N₁, N₂, 32) modes from 8·N quadrature nodes.
    pub fn compose(&self, other: &Bms21Element) -> Bms21Element {
        let n = self
            .alpha
            .order()
            .max(other.alpha.order())
            .max(DEFAULT_ORDER);
        self.compose_with(other, n, 8 * n).0
    }

    /// Group law with explicit truncation order and node count; also returns
    /// the tail energy of the T(g₁)α₂ projection so callers can gate on it.
    pub fn compose_with(&self, other: &Bms21Element, n_out: usize, m: usize) -> (Bms21Element, f64) {
        let moved = fourier::act(&self.g, &other.alpha, n_out, m);
        (
            Bms21Element {
                alpha: self.alpha.add(&moved.functional),
                g: self.g * other.g,
            },
            moved.tail_energy,
        )
    }

    /// (−T(g⁻¹)α, g⁻¹), forced by the group law.
    pub fn invert(&self) -> Bms21Element {
        let n = self.alpha.order().max(DEFAULT_ORDER);
        self.invert_with(n, 8 * n)
    }

    pub fn invert_with(&self, n_out: usize, m: usize) -> Bms21Element {
        let ginv = self.g.inverse();
        let moved = fourier::act(&ginv, &self.alpha, n_out, m);
        Bms21Element {
            alpha: moved.functional.scaled(-1.0),
            g: ginv,
        }
    }

    /// Tolerance-based equality: max of the Lorentz entrywise error and the
    /// supertranslation norm error.
    pub fn approx_eq(&self, other: &Bms21Element, tol: f64) -> bool {
        self.distance(other) <= tol
    }

    pub fn distance(&self, other: &Bms21Element) -> f64 {
        let dg = [
            self.g.a() - other.g.a(),
            self.g.b() - other.g.b(),
            self.g.c() - other.g.c(),
            self.g.d() - other.g.d(),
        ]
        .into_iter()
        .fold(0.0f64, |m, v| m.max(crate::math::fabs(v)));
        dg.max(self.alpha.sub(&other.alpha).norm())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn identity_element() {
        let h = Bms21Element::new(
            FourierFunctional::from_coeffs(0.5, vec![(1.0, 0.0)]),
            Sl2Matrix::rotation(0.3),
        );
        assert!(Bms21Element::identity().compose(&h).approx_eq(&h, 1e-14));
        assert!(h.compose(&Bms21Element::identity()).approx_eq(&h, 1e-14));
    }

    #[test]
    fn supertranslations_are_abelian() {
        let a = Bms21Element::new(
            FourierFunctional::from_coeffs(1.0, vec![(0.3, -0.2)]),
            Sl2Matrix::IDENTITY,
        );
        let b = Bms21Element::new(
            FourierFunctional::from_coeffs(-0.4, vec![(0.0, 0.9), (0.1, 0.0)]),
            Sl2Matrix::IDENTITY,
        );
        let ab = a.compose(&b);
        let expected = a.alpha.add(&b.alpha);
        assert!(ab.alpha.sub(&expected).norm() <= 1e-15);
        assert!(ab.compose(&a.invert()).compose(&b.invert()).approx_eq(&Bms21Element::identity(), 1e-14));
    }

    #[test]
    fn rotation_moves_supertranslation_exactly() {
        // (0, R(a))·(cos kθ, I) = (cos(k(θ + 2a)), R(a))
        let a = 0.65;
        let k = 3;
        let rot = Bms21Element::new(FourierFunctional::zero(), Sl2Matrix::rotation(a));
        let st = Bms21Element::new(FourierFunctional::cosine(k, 1.0), Sl2Matrix::IDENTITY);
        let prod = rot.compose(&st);
        let expected = FourierFunctional::cosine(k, 1.0).rotated(2.0 * a);
        assert!(prod.alpha.sub(&expected).norm() <= 1e-14);
        assert!((prod.g.a() - Sl2Matrix::rotation(a).a()).abs() <= 1e-15);
    }

    #[test]
    fn invert_examples() {
        assert!(Bms21Element::identity()
            .invert()
            .approx_eq(&Bms21Element::identity(), 0.0));
        let st = Bms21Element::new(
            FourierFunctional::from_coeffs(0.2, vec![(1.0, -1.0)]),
            Sl2Matrix::IDENTITY,
        );
        assert!(st
            .invert()
            .alpha
            .add(&st.alpha)
            .norm()
            .abs()
            <= 1e-15);
        // invert((cos θ, R(a))) = (−cos(θ − 2a), R(−a))
        let a = 1.1;
        let h = Bms21Element::new(FourierFunctional::cosine(1, 1.0), Sl2Matrix::rotation(a));
        let inv = h.invert();
        let expected = FourierFunctional::cosine(1, 1.0).rotated(-2.0 * a).scaled(-1.0);
        assert!(inv.alpha.sub(&expected).norm() <= 1e-14);
        assert!((inv.g.a() - math_cos(a)).abs() <= 1e-15);
        assert!(h.compose(&inv).approx_eq(&Bms21Element::identity(), 1e-13));
    }

    fn math_cos(x: f64) -> f64 {
        crate::math::cos(x)
    }

    #[test]
    fn associativity_rotation_parts_exact() {
        let h1 = Bms21Element::new(FourierFunctional::cosine(2, 0.7), Sl2Matrix::rotation(0.4));
        let h2 = Bms21Element::new(FourierFunctional::sine(1, -0.3), Sl2Matrix::rotation(PI / 3.0));
        let h3 = Bms21Element::new(FourierFunctional::constant(0.9), Sl2Matrix::rotation(2.2));
        let lhs = h1.compose(&h2).compose(&h3);
        let rhs = h1.compose(&h2.compose(&h3));
        assert!(lhs.approx_eq(&rhs, 1e-12));
    }

    #[test]
    fn associativity_generic_parts() {
        let g1 = Sl2Matrix::new(1.2, 0.3, 0.4, (1.0 + 0.12) / 1.2).unwrap();
        let g2 = Sl2Matrix::new(0.8, -0.2, 0.1, (1.0 - 0.02) / 0.8).unwrap();
        let g3 = Sl2Matrix::rotation(1.0);
        let h1 = Bms21Element::new(FourierFunctional::from_coeffs(0.5, vec![(0.4, 0.1)]), g1);
        let h2 = Bms21Element::new(FourierFunctional::from_coeffs(-0.1, vec![(0.2, -0.3)]), g2);
        let h3 = Bms21Element::new(FourierFunctional::from_coeffs(0.3, vec![(0.0, 0.6)]), g3);
        let n = 96;
        let m = 8 * n;
        let lhs = h1.compose_with(&h2, n, m).0.compose_with(&h3, n, m).0;
        let rhs = h1.compose_with(&h2.compose_with(&h3, n, m).0, n, m).0;
        assert!(lhs.distance(&rhs) <= 1e-8, "distance = {}", lhs.distance(&rhs));
    }

    #[test]
    fn supertranslations_are_normal() {
        // (0, g)·(α, I)·(0, g)⁻¹ = (T(g)α, I)
        let g = Sl2Matrix::new(1.4, 0.2, 0.5, (1.0 + 0.1) / 1.4).unwrap();
        let lorentz = Bms21Element::new(FourierFunctional::zero(), g);
        let alpha = FourierFunctional::from_coeffs(0.6, vec![(0.5, 0.2)]);
        let st = Bms21Element::new(alpha.clone(), Sl2Matrix::IDENTITY);
        let conj = lorentz.compose(&st).compose(&lorentz.invert());
        let expected = crate::fourier::act(&g, &alpha, 32, 256).functional;
        assert!(conj.alpha.sub(&expected).norm() <= 1e-9);
        assert!((conj.g.a() - 1.0).abs() <= 1e-12);
        assert!((conj.g.b()).abs() <= 1e-12);
        assert!((conj.g.c()).abs() <= 1e-12);
    }
}
