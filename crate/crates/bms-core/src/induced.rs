//! The Mackey induced unitary operators of B(2,1) on sections over an
//! orbit. In the Iwasawa trivialization the abstract action
//! (hψ)(p) = √(dμ_h/dμ)(p)·h(ψ(h⁻¹p)) unpacks, for h = (α, g), to
//!
//!   (hψ)(q) = √rn(g, q) · e^{i⟨f_q, α⟩} · U(ℓ(g, q)) · ψ(g⁻¹·q),
//!
//! with f_q = T′(s(q))·f_base, ℓ(g, q) = s(q)⁻¹·g·s(g⁻¹·q) the Wigner
//! cocycle, and U the little-group character. All little groups of B(2,1)
//! are abelian, so the fiber is one complex dimension.

use alloc::rc::Rc;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::bms::Bms21Element;
use crate::error::Error;
use crate::fourier::FourierFunctional;
use crate::little::{self, CharacterRep, LittleGroup};
use crate::math;
use crate::orbit::{self, OrbitPoint};
use crate::sl2::{ProjectivePoint, Sl2Matrix};
use crate::Result;

/// Inducing data: a nonzero base functional invariant under the little
/// group, and a character of that group.
#[derive(Debug, Clone)]
pub struct InducedRepSpec {
    f_base: FourierFunctional,
    rep: CharacterRep,
    /// Quadrature nodes for the ⟨f_q, α⟩ pairings.
    quad_nodes: usize,
}

/// A section of the associated line bundle, known at finitely many orbit
/// points. The section carries an evaluator so the operator can read it at
/// transported points off the sample grid.
#[derive(Clone)]
pub struct SampledSection {
    points: Vec<OrbitPoint>,
    values: Vec<Complex64>,
    profile: Rc<dyn Fn(&OrbitPoint) -> Complex64>,
}

impl InducedRepSpec {
    pub fn new(f_base: FourierFunctional, rep: CharacterRep) -> Result<InducedRepSpec> {
        Self::with_quadrature(f_base, rep, 1024)
    }

    pub fn with_quadrature(
        f_base: FourierFunctional,
        rep: CharacterRep,
        quad_nodes: usize,
    ) -> Result<InducedRepSpec> {
        if f_base.norm() == 0.0 {
            return Err(Error::ZeroFunctional);
        }
        let residual = little::invariance_residual(&f_base, rep.group());
        if residual > 1e-9 {
            return Err(Error::NotInvariant { residual });
        }
        Ok(InducedRepSpec {
            f_base,
            rep,
            quad_nodes,
        })
    }

    pub fn f_base(&self) -> &FourierFunctional {
        &self.f_base
    }

    pub fn rep(&self) -> CharacterRep {
        self.rep
    }

    pub fn little_group(&self) -> LittleGroup {
        self.rep.group()
    }

    /// The supertranslation character at coset q: e^{i⟨f_q, α⟩}.
    pub fn character_of_point(&self, q: &OrbitPoint, alpha: &FourierFunctional) -> Complex64 {
        let arg = self.pairing(q, alpha);
        let (s, c) = math::sincos(arg);
        Complex64::new(c, s)
    }

    /// ⟨f_q, α⟩ = ⟨T′(s(q))f_base, α⟩, evaluated by trapezoid quadrature of
    /// κ_{s(q)}⁻²(θ)·f_base(θ·s(q))·α(θ) on the uniform grid — spectrally
    /// accurate for these smooth periodic integrands and equal, up to the
    /// discarded aliasing tail, to Parseval on the projected coefficients.
    pub fn pairing(&self, q: &OrbitPoint, alpha: &FourierFunctional) -> f64 {
        let s = orbit::section(q);
        let m = self.quad_nodes;
        let step = math::TAU / m as f64;
        let mut acc = 0.0;
        for j in 0..m {
            let t = step * j as f64;
            let p = ProjectivePoint::new(t);
            let k = s.kappa(p);
            acc += self.f_base.evaluate(s.act(p).theta()) / (k * k) * alpha.evaluate(t);
        }
        acc / m as f64
    }
}

impl SampledSection {
    /// Builds a section from a closed-form profile. Points must all lie on
    /// one orbit model and be pairwise distinct.
    pub fn from_profile(
        points: Vec<OrbitPoint>,
        profile: impl Fn(&OrbitPoint) -> Complex64 + 'static,
    ) -> Result<SampledSection> {
        Self::from_rc(points, Rc::new(profile))
    }

    fn from_rc(
        points: Vec<OrbitPoint>,
        profile: Rc<dyn Fn(&OrbitPoint) -> Complex64>,
    ) -> Result<SampledSection> {
        if let Some(first) = points.first() {
            if !points.iter().all(|p| p.same_kind(first)) {
                return Err(Error::OrbitKindMismatch);
            }
        }
        for (i, p) in points.iter().enumerate() {
            if points[..i].contains(p) {
                return Err(Error::DuplicateSamplePoint);
            }
        }
        let values = points.iter().map(|p| profile(p)).collect();
        Ok(SampledSection {
            points,
            values,
            profile,
        })
    }

    pub fn points(&self) -> &[OrbitPoint] {
        &self.points
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Evaluates the section anywhere on the orbit.
    pub fn value_at(&self, q: &OrbitPoint) -> Complex64 {
        (self.profile)(q)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&OrbitPoint, Complex64)> {
        self.points.iter().zip(self.values.iter().copied())
    }
}

/// The induced operator for h = (α, g). The result is sampled at the same
/// points and carries the transported closed-form evaluator, so operators
/// compose.
pub fn apply(spec: &InducedRepSpec, h: &Bms21Element, psi: &SampledSection) -> Result<SampledSection> {
    let group = spec.little_group();
    if let Some(first) = psi.points.first() {
        if first.little_group() != group {
            return Err(Error::OrbitKindMismatch);
        }
    }
    // surface measure or cocycle defects eagerly at the sample points
    for q in &psi.points {
        fiber_factor(spec, h, q)?;
    }
    let spec_c = spec.clone();
    let h_c = h.clone();
    let inner = Rc::clone(&psi.profile);
    let points = psi.points.clone();
    let profile = move |q: &OrbitPoint| -> Complex64 {
        let (factor, q_back) =
            fiber_factor(&spec_c, &h_c, q).expect("invariant orbit measure violated");
        factor * inner(&q_back)
    };
    SampledSection::from_rc(points, Rc::new(profile))
}

/// √rn(g, q) · e^{i⟨f_q, α⟩} · U(ℓ(g, q)) and the transported point g⁻¹·q.
fn fiber_factor(
    spec: &InducedRepSpec,
    h: &Bms21Element,
    q: &OrbitPoint,
) -> Result<(Complex64, OrbitPoint)> {
    let ginv = h.g.inverse();
    let (q_back, ell_back) = orbit::coset_act(&ginv, q);
    let ell = ell_back.inverse();
    // the measure is invariant, so the validated derivative is exactly 1;
    // using the unit value avoids finite-difference noise in the operator
    orbit::radon_nikodym(&h.g, q)?;
    let phase = spec.character_of_point(q, &h.alpha);
    let u = spec.rep().eval(&ell)?;
    Ok((phase * u, q_back))
}

/// The Wigner cocycle ℓ(g, q) = s(q)⁻¹·g·s(g⁻¹·q) as a matrix, exposed for
/// verification.
pub fn wigner_cocycle(g: &Sl2Matrix, q: &OrbitPoint) -> Sl2Matrix {
    orbit::coset_act(&g.inverse(), q).1.inverse().matrix()
}
