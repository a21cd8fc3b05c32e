//! Little groups inside SO(2): every stabilizer of a functional under the
//! dual action is (up to conjugacy) SO(2) itself or a cyclic group C_n of
//! even order, since every little group contains −I = R(π). This module
//! carries the descriptors, invariant-subspace projectors, stabilizer
//! detection on Fourier coefficients, and the one-dimensional characters
//! U^{(ν)}(R(θ)) = e^{iνθ} and U^{(λ)}(R(2πj/n)) = e^{i2πλj/n}.

use num_complex::Complex64;

use crate::error::Error;
use crate::fourier::FourierFunctional;
use crate::math;
use crate::sl2::Sl2Matrix;
use crate::Result;

/// A little group of B(2,1): SO(2) or a cyclic group of even order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LittleGroup {
    So2,
    /// C_n with n even and ≥ 2.
    Cyclic(u32),
}

/// An element of a little group: a rotation angle for SO(2), an index
/// j ∈ 0..n (representing R(2πj/n)) for C_n.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LittleGroupElement {
    So2 { angle: f64 },
    Cyclic { n: u32, j: u32 },
}

/// A one-dimensional unitary irrep of a little group: ν ∈ ℤ for SO(2),
/// λ ∈ 0..n for C_n.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharacterRep {
    group: LittleGroup,
    label: i64,
}

impl LittleGroup {
    /// Builds C_n, rejecting odd or zero n: every little group contains −I.
    pub fn cyclic(n: u32) -> Result<LittleGroup> {
        if n == 0 || !n.is_multiple_of(2) {
            Err(Error::OddCyclicOrder { n })
        } else {
            Ok(LittleGroup::Cyclic(n))
        }
    }

    pub fn identity_element(&self) -> LittleGroupElement {
        match self {
            LittleGroup::So2 => LittleGroupElement::So2 { angle: 0.0 },
            LittleGroup::Cyclic(n) => LittleGroupElement::Cyclic { n: *n, j: 0 },
        }
    }
}

impl LittleGroupElement {
    /// The element as an SL(2,ℝ) rotation matrix.
    pub fn matrix(&self) -> Sl2Matrix {
        match self {
            LittleGroupElement::So2 { angle } => Sl2Matrix::rotation(*angle),
            LittleGroupElement::Cyclic { n, j } => {
                Sl2Matrix::rotation(math::TAU * *j as f64 / *n as f64)
            }
        }
    }

    pub fn inverse(&self) -> LittleGroupElement {
        match self {
            LittleGroupElement::So2 { angle } => LittleGroupElement::So2 {
                angle: math::wrap_angle(-angle),
            },
            LittleGroupElement::Cyclic { n, j } => LittleGroupElement::Cyclic {
                n: *n,
                j: (n - j) % n,
            },
        }
    }

    pub fn compose(&self, other: &LittleGroupElement) -> Result<LittleGroupElement> {
        match (self, other) {
            (LittleGroupElement::So2 { angle: a }, LittleGroupElement::So2 { angle: b }) => {
                Ok(LittleGroupElement::So2 {
                    angle: math::wrap_angle(a + b),
                })
            }
            (
                LittleGroupElement::Cyclic { n: n1, j: j1 },
                LittleGroupElement::Cyclic { n: n2, j: j2 },
            ) if n1 == n2 => Ok(LittleGroupElement::Cyclic {
                n: *n1,
                j: (j1 + j2) % n1,
            }),
            _ => Err(Error::GroupMismatch),
        }
    }
}

impl CharacterRep {
    /// For cyclic groups the label is reduced mod n.
    pub fn new(group: LittleGroup, label: i64) -> CharacterRep {
        let label = match group {
            LittleGroup::So2 => label,
            LittleGroup::Cyclic(n) => label.rem_euclid(n as i64),
        };
        CharacterRep { group, label }
    }

    pub fn group(&self) -> LittleGroup {
        self.group
    }

    pub fn label(&self) -> i64 {
        self.label
    }

    /// Unit-modulus character value at a group element; multiplicative.
    pub fn eval(&self, element: &LittleGroupElement) -> Result<Complex64> {
        match (self.group, element) {
            (LittleGroup::So2, LittleGroupElement::So2 { angle }) => {
                Ok(unit_phase(self.label as f64 * angle))
            }
            (LittleGroup::Cyclic(n), LittleGroupElement::Cyclic { n: ne, j }) => {
                if n != *ne {
                    return Err(Error::GroupMismatch);
                }
                if *j >= n {
                    return Err(Error::IndexOutOfRange {
                        index: *j as i64,
                        order: n,
                    });
                }
                // reduce the exponent in exact integer arithmetic first
                let e = (self.label * i64::from(*j)).rem_euclid(i64::from(n));
                Ok(unit_phase(math::TAU * e as f64 / f64::from(n)))
            }
            _ => Err(Error::GroupMismatch),
        }
    }

    /// Convenience: U^{(ν)}(R(θ)) for SO(2) labels.
    pub fn eval_angle(&self, theta: f64) -> Complex64 {
        unit_phase(self.label as f64 * theta)
    }

    /// Convenience: U^{(λ)}(R(2πj/n)) for cyclic labels.
    pub fn eval_index(&self, j: u32) -> Result<Complex64> {
        match self.group {
            LittleGroup::Cyclic(n) => self.eval(&LittleGroupElement::Cyclic { n, j }),
            LittleGroup::So2 => Err(Error::GroupMismatch),
        }
    }
}

fn unit_phase(arg: f64) -> Complex64 {
    // reduce the argument first so multiplicativity holds to machine epsilon
    let (s, c) = math::sincos(math::wrap_angle(arg));
    Complex64::new(c, s)
}

/// Orthogonal projection of f onto the subspace of S-invariant functionals:
/// constants for SO(2); for C_n with n = 2m the mode lattice {k : m | k}
/// (period 4π/n in θ). Idempotent and norm-nonincreasing.
pub fn invariant_projector(group: LittleGroup, f: &FourierFunctional) -> FourierFunctional {
    match group {
        LittleGroup::So2 => FourierFunctional::constant(f.a0()),
        LittleGroup::Cyclic(n) => {
            let m = (n / 2) as usize;
            let modes = f
                .modes()
                .iter()
                .enumerate()
                .map(|(i, &mode)| if (i + 1) % m == 0 { mode } else { (0.0, 0.0) })
                .collect();
            FourierFunctional::from_coeffs(f.a0(), modes)
        }
    }
}

/// True iff f is fixed by the dual action of the group's generators within
/// tol. Rotations act exactly on coefficients (κ ≡ 1), so the check is a
/// coefficient-level shift test: SO(2) uses a dense sample of 32 angles,
/// C_n its generator R(2π/n).
pub fn is_invariant(f: &FourierFunctional, group: LittleGroup, tol: f64) -> bool {
    invariance_residual(f, group) <= tol
}

/// max over generators of ‖T′(R(α))f − f‖.
pub fn invariance_residual(f: &FourierFunctional, group: LittleGroup) -> f64 {
    match group {
        LittleGroup::So2 => {
            // irrationally spaced sweep so no cyclic invariance masquerades
            // as full SO(2) invariance
            const GOLDEN: f64 = 0.618_033_988_749_894_9;
            (1..=32)
                .map(|j| {
                    let alpha = math::wrap_angle(j as f64 * GOLDEN * math::TAU);
                    f.rotated(2.0 * alpha).sub(f).norm()
                })
                .fold(0.0f64, f64::max)
        }
        LittleGroup::Cyclic(n) => {
            let alpha = math::TAU / n as f64;
            f.rotated(2.0 * alpha).sub(f).norm()
        }
    }
}

/// Certifies the stabilizer of f inside SO(2) only (the paper's compactness
/// theorem, which we do not re-derive, upgrades this to the stabilizer in
/// all of SL(2,ℝ) up to conjugacy). Modes with amplitude above tol are the
/// support; SO(2) if the support is empty, else C_{2m} with m the gcd of
/// the supported indices. The returned order is always even.
pub fn detect_stabilizer_in_so2(f: &FourierFunctional, tol: f64) -> Result<LittleGroup> {
    if f.norm() <= tol {
        return Err(Error::ZeroFunctional);
    }
    let tol_sq = tol * tol;
    let mut g: usize = 0;
    for (i, &(a, b)) in f.modes().iter().enumerate() {
        if a * a + b * b > tol_sq {
            g = gcd(g, i + 1);
        }
    }
    if g == 0 {
        Ok(LittleGroup::So2)
    } else {
        Ok(LittleGroup::Cyclic(2 * g as u32))
    }
}

/// Default support threshold separating genuine zeros from rounding dust.
pub fn default_support_tol(f: &FourierFunctional) -> f64 {
    1e-10 * f.norm()
}

/// T′(g)f: maps a functional into the standard SO(2) chart of a conjugated
/// little group gSg⁻¹.
pub fn conjugate_functional(
    g: &Sl2Matrix,
    f: &FourierFunctional,
    n_out: usize,
    m: usize,
) -> FourierFunctional {
    crate::fourier::act_dual(g, f, n_out, m).functional
}

fn gcd(a: usize, b: usize) -> usize {
    if a == 0 {
        b
    } else {
        gcd(b % a, a)
    }
}
