//! Truncated real Fourier series on the projective circle: the
//! supertranslation space A = L²(P¹(ℝ), λ, ℝ) with dλ = dθ/2π, its scalar
//! product, and the conformally weighted actions
//! (T(g)α)(σ) = κ_g(σ)·α(σg) and (T′(g)f)(σ) = κ_g⁻²(σ)·f(σg).
//!
//! The only approximation in the whole library lives here: a weighted action
//! of a non-rotation g is not band-limited, so it is sampled on a uniform
//! grid and projected back onto finitely many modes. Every such projection
//! reports a tail-energy estimate that tests gate on.

use alloc::vec;
use alloc::vec::Vec;

use crate::math;
use crate::sl2::{ProjectivePoint, Sl2Matrix};

/// α(θ) = a0 + Σ_k a_k cos kθ + b_k sin kθ, k = 1..N.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierFunctional {
    a0: f64,
    modes: Vec<(f64, f64)>,
}

/// Result of a weighted action: the projected functional together with the
/// energy found in the top half of the retained band.
#[derive(Debug, Clone)]
pub struct ActionOutput {
    pub functional: FourierFunctional,
    pub tail_energy: f64,
}

impl ActionOutput {
    /// True when the tail energy exceeds 1e-8 of the result's norm², i.e.
    /// the truncation order was too small for this input.
    pub fn truncation_warning(&self) -> bool {
        self.tail_energy > 1e-8 * self.functional.norm_sq()
    }
}

impl FourierFunctional {
    pub fn zero() -> FourierFunctional {
        FourierFunctional {
            a0: 0.0,
            modes: Vec::new(),
        }
    }

    pub fn constant(c: f64) -> FourierFunctional {
        FourierFunctional {
            a0: c,
            modes: Vec::new(),
        }
    }

    /// amp·cos(kθ) for k ≥ 1.
    pub fn cosine(k: usize, amp: f64) -> FourierFunctional {
        Self::harmonic(k, amp, 0.0)
    }

    /// amp·sin(kθ) for k ≥ 1.
    pub fn sine(k: usize, amp: f64) -> FourierFunctional {
        Self::harmonic(k, 0.0, amp)
    }

    /// a·cos(kθ) + b·sin(kθ), k ≥ 1.
    pub fn harmonic(k: usize, a: f64, b: f64) -> FourierFunctional {
        assert!(k >= 1, "harmonic index must be >= 1");
        let mut modes = vec![(0.0, 0.0); k];
        modes[k - 1] = (a, b);
        FourierFunctional { a0: 0.0, modes }
    }

    pub fn from_coeffs(a0: f64, modes: Vec<(f64, f64)>) -> FourierFunctional {
        FourierFunctional { a0, modes }
    }

    pub fn a0(&self) -> f64 {
        self.a0
    }

    /// Truncation order N (number of stored harmonic pairs).
    pub fn order(&self) -> usize {
        self.modes.len()
    }

    /// (a_k, b_k) for k ≥ 1; zero beyond the stored order.
    pub fn coeff(&self, k: usize) -> (f64, f64) {
        if k == 0 {
            (self.a0, 0.0)
        } else {
            self.modes.get(k - 1).copied().unwrap_or((0.0, 0.0))
        }
    }

    pub fn modes(&self) -> &[(f64, f64)] {
        &self.modes
    }

    pub fn evaluate(&self, theta: f64) -> f64 {
        let (s1, c1) = math::sincos(theta);
        let mut acc = self.a0;
        let (mut sk, mut ck) = (s1, c1);
        for &(a, b) in &self.modes {
            acc += a * ck + b * sk;
            let s_next = sk * c1 + ck * s1;
            let c_next = ck * c1 - sk * s1;
            sk = s_next;
            ck = c_next;
        }
        acc
    }

    /// Parseval norm²: a0² + ½ Σ (a_k² + b_k²).
    pub fn norm_sq(&self) -> f64 {
        let mut s = self.a0 * self.a0;
        for &(a, b) in &self.modes {
            s += 0.5 * (a * a + b * b);
        }
        s
    }

    pub fn norm(&self) -> f64 {
        math::sqrt(self.norm_sq())
    }

    /// ∫ αβ dθ/2π via Parseval on coefficients (zero-padded to common N).
    pub fn inner(&self, other: &FourierFunctional) -> f64 {
        let mut s = self.a0 * other.a0;
        let n = self.order().min(other.order());
        for k in 0..n {
            let (a1, b1) = self.modes[k];
            let (a2, b2) = other.modes[k];
            s += 0.5 * (a1 * a2 + b1 * b2);
        }
        s
    }

    pub fn add(&self, other: &FourierFunctional) -> FourierFunctional {
        let n = self.order().max(other.order());
        let mut modes = Vec::with_capacity(n);
        for k in 1..=n {
            let (a1, b1) = self.coeff(k);
            let (a2, b2) = other.coeff(k);
            modes.push((a1 + a2, b1 + b2));
        }
        FourierFunctional {
            a0: self.a0 + other.a0,
            modes,
        }
    }

    pub fn sub(&self, other: &FourierFunctional) -> FourierFunctional {
        self.add(&other.scaled(-1.0))
    }

    pub fn scaled(&self, c: f64) -> FourierFunctional {
        FourierFunctional {
            a0: c * self.a0,
            modes: self.modes.iter().map(|&(a, b)| (c * a, c * b)).collect(),
        }
    }

    /// θ ↦ θ + δ on coefficients, exact: the circle rotation action.
    pub fn rotated(&self, delta: f64) -> FourierFunctional {
        let modes = self
            .modes
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| {
                let (s, c) = math::sincos((i + 1) as f64 * delta);
                (a * c + b * s, -a * s + b * c)
            })
            .collect();
        FourierFunctional { a0: self.a0, modes }
    }

    /// Values at the uniform grid θ_j = 2πj/M, evaluated with exact node
    /// trig tables (the index k·j mod M reuses the same table).
    pub fn sample_uniform(&self, m: usize) -> Vec<f64> {
        let (cos_t, sin_t) = node_tables(m);
        (0..m)
            .map(|j| {
                let mut acc = self.a0;
                let mut idx = 0usize;
                for &(a, b) in &self.modes {
                    idx += j;
                    if idx >= m {
                        idx -= m;
                    }
                    acc += a * cos_t[idx] + b * sin_t[idx];
                }
                acc
            })
            .collect()
    }

    /// Discrete Fourier projection of samples on the uniform grid
    /// θ_j = 2πj/M onto modes 0..=n_out. Exact (to rounding) for inputs
    /// band-limited below M/2.
    pub fn from_samples(values: &[f64], n_out: usize) -> FourierFunctional {
        let m = values.len();
        assert!(m > 2 * n_out, "need M > 2N for an unaliased projection");
        let (cos_t, sin_t) = node_tables(m);
        let inv_m = 1.0 / m as f64;
        let a0 = values.iter().sum::<f64>() * inv_m;
        let mut modes = Vec::with_capacity(n_out);
        for k in 1..=n_out {
            let mut ca = 0.0;
            let mut cb = 0.0;
            let mut idx = 0usize;
            for &v in values {
                ca += v * cos_t[idx];
                cb += v * sin_t[idx];
                idx += k;
                if idx >= m {
                    idx -= m;
                }
            }
            modes.push((2.0 * ca * inv_m, 2.0 * cb * inv_m));
        }
        FourierFunctional { a0, modes }
    }

    /// Energy in the top half of the band, modes N/2..=N.
    pub fn tail_energy(&self) -> f64 {
        let n = self.order();
        let mut s = 0.0;
        for k in (n / 2).max(1)..=n {
            let (a, b) = self.coeff(k);
            s += 0.5 * (a * a + b * b);
        }
        s
    }
}

fn node_tables(m: usize) -> (Vec<f64>, Vec<f64>) {
    let step = math::TAU / m as f64;
    let mut cos_t = Vec::with_capacity(m);
    let mut sin_t = Vec::with_capacity(m);
    for j in 0..m {
        let (s, c) = math::sincos(step * j as f64);
        cos_t.push(c);
        sin_t.push(s);
    }
    (cos_t, sin_t)
}

/// (T(g)α)(θ) = κ_g(θ)·α(θg), projected onto n_out modes from m uniform
/// nodes. Rotations take the exact coefficient path.
pub fn act(g: &Sl2Matrix, alpha: &FourierFunctional, n_out: usize, m: usize) -> ActionOutput {
    act_weighted(g, alpha, n_out, m, 1)
}

/// Dual action (T′(g)f)(θ) = κ_g⁻²(θ)·f(θg).
pub fn act_dual(g: &Sl2Matrix, f: &FourierFunctional, n_out: usize, m: usize) -> ActionOutput {
    act_weighted(g, f, n_out, m, -2)
}

fn act_weighted(
    g: &Sl2Matrix,
    alpha: &FourierFunctional,
    n_out: usize,
    m: usize,
    kappa_pow: i32,
) -> ActionOutput {
    if let Some(a) = g.rotation_angle() {
        // κ ≡ 1 on rotations and θ ↦ θ + 2a is exact on coefficients.
        let mut rotated = alpha.rotated(2.0 * a);
        rotated.modes.truncate(n_out);
        let tail_energy = rotated.tail_energy();
        return ActionOutput {
            functional: rotated,
            tail_energy,
        };
    }
    let m = m.max(4 * n_out).max(4 * alpha.order()).max(16);
    let step = math::TAU / m as f64;
    let values: Vec<f64> = (0..m)
        .map(|j| {
            let p = ProjectivePoint::new(step * j as f64);
            let w = match kappa_pow {
                1 => g.kappa(p),
                -2 => {
                    let k = g.kappa(p);
                    1.0 / (k * k)
                }
                _ => unreachable!(),
            };
            w * alpha.evaluate(g.act(p).theta())
        })
        .collect();
    let functional = FourierFunctional::from_samples(&values, n_out);
    let tail_energy = functional.tail_energy();
    ActionOutput {
        functional,
        tail_energy,
    }
}
