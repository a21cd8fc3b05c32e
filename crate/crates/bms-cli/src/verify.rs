//! Property-verification suites covering every invariant of every module.
//! Each check runs a sampled identity, records its worst error against a
//! pinned tolerance, and the report renders deterministically for a fixed
//! seed (timing is kept out of the rendered text on purpose).

use bms_core::fourier;
use bms_core::induced::{self, InducedRepSpec, SampledSection};
use bms_core::little::{self, CharacterRep, LittleGroup};
use bms_core::minkowski::{self, Lorentz3Matrix, Vector21};
use bms_core::orbit::{self, OrbitMeasure, OrbitPoint};
use bms_core::{Bms21Element, FourierFunctional, ProjectivePoint, Sl2Matrix};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::sampling;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

impl Level {
    pub fn parse(s: &str) -> Option<Level> {
        match s {
            "quick" => Some(Level::Quick),
            "full" => Some(Level::Full),
            _ => None,
        }
    }

    fn scale(&self, quick: usize, full: usize) -> usize {
        match self {
            Level::Quick => quick,
            Level::Full => full,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckRecord {
    pub name: &'static str,
    pub samples: usize,
    pub max_err: f64,
    pub tol: f64,
}

impl CheckRecord {
    pub fn pass(&self) -> bool {
        self.max_err.is_finite() && self.max_err <= self.tol
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub seed: u64,
    pub level: Level,
    pub records: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.records.iter().all(CheckRecord::pass)
    }

    /// Deterministic textual report: one line per property plus a summary.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "# bms verify report (seed={} level={})\n",
            self.seed,
            match self.level {
                Level::Quick => "quick",
                Level::Full => "full",
            }
        ));
        for r in &self.records {
            out.push_str(&format!(
                "{} {} samples={} max_err={:.3e} tol={:.1e}\n",
                if r.pass() { "PASS" } else { "FAIL" },
                r.name,
                r.samples,
                r.max_err,
                r.tol
            ));
        }
        let failed = self.records.iter().filter(|r| !r.pass()).count();
        out.push_str(&format!(
            "RESULT {} checks={} failed={}\n",
            if failed == 0 { "PASS" } else { "FAIL" },
            self.records.len(),
            failed
        ));
        out
    }
}

struct Harness {
    rng: ChaCha8Rng,
    level: Level,
    records: Vec<CheckRecord>,
    /// Fault injection for the mutation-testing path of `verify`.
    kappa_bias: f64,
}

impl Harness {
    fn kappa(&self, g: &Sl2Matrix, p: ProjectivePoint) -> f64 {
        g.kappa(p) * (1.0 + self.kappa_bias)
    }

    fn record(&mut self, name: &'static str, samples: usize, max_err: f64, tol: f64) {
        self.records.push(CheckRecord {
            name,
            samples,
            max_err,
            tol,
        });
    }
}

pub fn run(seed: u64, level: Level, mutate_kappa: bool) -> VerificationReport {
    let mut h = Harness {
        rng: ChaCha8Rng::seed_from_u64(seed),
        level,
        records: Vec::new(),
        kappa_bias: if mutate_kappa { 1e-6 } else { 0.0 },
    };
    sl2_suite(&mut h);
    fourier_suite(&mut h);
    bms_suite(&mut h);
    minkowski_suite(&mut h);
    little_suite(&mut h);
    orbit_suite(&mut h);
    induced_suite(&mut h);
    VerificationReport {
        seed,
        level,
        records: h.records,
    }
}

fn rel(err: f64, scale: f64) -> f64 {
    err / scale.abs().max(1.0)
}

fn sl2_suite(h: &mut Harness) {
    let n = h.level.scale(2000, 10000);
    let mut worst = 0.0f64;
    for _ in 0..n {
        let g1 = sampling::sl2(&mut h.rng, 3.0);
        let g2 = sampling::sl2(&mut h.rng, 3.0);
        let p = ProjectivePoint::new(h.rng.gen_range(0.0..std::f64::consts::TAU));
        let lhs = h.kappa(&(g1 * g2), p);
        let rhs = h.kappa(&g1, p) * h.kappa(&g2, g1.act(p));
        worst = worst.max((lhs - rhs).abs() / lhs);
    }
    h.record("sl2/kappa_cocycle", n, worst, 1e-12);

    let n = h.level.scale(300, 1000);
    let mut worst = 0.0f64;
    let step = 1e-6;
    for _ in 0..n {
        let g = sampling::sl2(&mut h.rng, 3.0);
        let t = h.rng.gen_range(0.0..std::f64::consts::TAU);
        let tp = g.act(ProjectivePoint::new(t + step)).theta();
        let tm = g.act(ProjectivePoint::new(t - step)).theta();
        let deriv = wrap_sym(tp - tm) / (2.0 * step);
        let k = h.kappa(&g, ProjectivePoint::new(t));
        worst = worst.max((deriv * k - 1.0).abs());
    }
    h.record("sl2/jacobian_inverse_kappa", n, worst, 1e-6);

    let n = h.level.scale(2000, 10000);
    let mut worst = 0.0f64;
    for _ in 0..n {
        let g1 = sampling::sl2(&mut h.rng, 3.0);
        let g2 = sampling::sl2(&mut h.rng, 3.0);
        let p = ProjectivePoint::new(h.rng.gen_range(0.0..std::f64::consts::TAU));
        let lhs = g2.act(g1.act(p));
        let rhs = (g1 * g2).act(p);
        worst = worst.max(wrap_sym(lhs.theta() - rhs.theta()).abs());
    }
    h.record("sl2/action_composition", n, worst, 1e-10);

    let mut worst = 0.0f64;
    let minus = -Sl2Matrix::IDENTITY;
    for i in 0..64 {
        let p = ProjectivePoint::new(std::f64::consts::TAU * i as f64 / 64.0);
        worst = worst.max(wrap_sym(minus.act(p).theta() - p.theta()).abs());
        worst = worst.max((minus.kappa(p) - 1.0).abs());
    }
    h.record("sl2/minus_identity_kernel", 64, worst, 1e-13);

    let n = h.level.scale(1000, 5000);
    let mut worst = 0.0f64;
    for _ in 0..n {
        let g = sampling::sl2(&mut h.rng, 4.0);
        let r = g.iwasawa().recompose();
        worst = worst
            .max((g.a() - r.a()).abs())
            .max((g.b() - r.b()).abs())
            .max((g.c() - r.c()).abs())
            .max((g.d() - r.d()).abs());
    }
    h.record("sl2/iwasawa_round_trip", n, worst, 1e-12);
}

fn fourier_suite(h: &mut Harness) {
    let (n_modes, m_nodes) = (72, 512);

    let n = h.level.scale(20, 100);
    let mut worst = 0.0f64;
    for _ in 0..n {
        let g1 = sampling::sl2(&mut h.rng, 2.0);
        let g2 = sampling::sl2(&mut h.rng, 2.0);
        let a = sampling::functional(&mut h.rng, 4);
        let lhs = fourier::act(&(g1 * g2), &a, n_modes, m_nodes).functional;
        let inner = fourier::act(&g2, &a, n_modes, m_nodes).functional;
        let rhs = fourier::act(&g1, &inner, n_modes, m_nodes).functional;
        worst = worst.max(rel(lhs.sub(&rhs).norm(), lhs.norm()));
    }
    h.record("supertranslations/left_action_T", n, worst, 1e-8);

    let n = h.level.scale(20, 100);
    let mut worst = 0.0f64;
    for _ in 0..n {
        let g1 = sampling::sl2(&mut h.rng, 2.0);
        let g2 = sampling::sl2(&mut h.rng, 2.0);
        let f = sampling::functional(&mut h.rng, 4);
        let lhs = fourier::act_dual(&(g1 * g2), &f, n_modes, m_nodes).functional;
        let inner = fourier::act_dual(&g2, &f, n_modes, m_nodes).functional;
        let rhs = fourier::act_dual(&g1, &inner, n_modes, m_nodes).functional;
        worst = worst.max(rel(lhs.sub(&rhs).norm(), lhs.norm()));
    }
    h.record("supertranslations/left_action_T_dual", n, worst, 1e-8);

    let n = h.level.scale(50, 200);
    let mut worst = 0.0f64;
    for _ in 0..n {
        let g = sampling::sl2(&mut h.rng, 2.0);
        let f = sampling::functional(&mut h.rng, 6);
        let a = sampling::functional(&mut h.rng, 6);
        let tf = fourier::act_dual(&g, &f, 32, 512).functional;
        let ta = fourier::act(&g, &a, 32, 512).functional;
        worst = worst.max(rel((tf.inner(&ta) - f.inner(&a)).abs(), f.inner(&a)));
    }
    h.record("supertranslations/duality_pairing", n, worst, 1e-8);

    let n = h.level.scale(100, 500);
    let mut worst = 0.0f64;
    for _ in 0..n {
        let a = h.rng.gen_range(0.0..std::f64::consts::TAU);
        let f = sampling::functional(&mut h.rng, 8);
        let out = fourier::act(&Sl2Matrix::rotation(a), &f, 8, 64).functional;
        worst = worst.max((out.norm_sq() - f.norm_sq()).abs());
        worst = worst.max(out.sub(&f.rotated(2.0 * a)).norm());
    }
    h.record("supertranslations/rotation_exactness", n, worst, 1e-13);

    let n = h.level.scale(50, 200);
    let mut worst = 0.0f64;
    for _ in 0..n {
        let g = sampling::sl2(&mut h.rng, 2.0);
        let f = sampling::functional(&mut h.rng, 4);
        let a = sampling::functional(&mut h.rng, 4);
        let c = h.rng.gen_range(-2.0..2.0);
        let lhs = fourier::act(&g, &f.add(&a.scaled(c)), 32, 256).functional;
        let rhs = fourier::act(&g, &f, 32, 256)
            .functional
            .add(&fourier::act(&g, &a, 32, 256).functional.scaled(c));
        worst = worst.max(lhs.sub(&rhs).norm());
    }
    h.record("supertranslations/linearity", n, worst, 1e-13);

    let n = h.level.scale(50, 200);
    let mut worst = 0.0f64;
    for _ in 0..n {
        let f = sampling::functional(&mut h.rng, 10);
        let m = 2 * f.order() + 1 + h.rng.gen_range(0..16);
        let back = FourierFunctional::from_samples(&f.sample_uniform(m), f.order());
        worst = worst.max(back.sub(&f).norm());
    }
    h.record("supertranslations/projection_round_trip", n, worst, 1e-13);
}

fn bms_suite(h: &mut Harness) {
    let (n_modes, m_nodes) = (96, 768);

    let n = h.level.scale(10, 40);
    let mut worst = 0.0f64;
    for _ in 0..n {
        let h1 = sampling::element(&mut h.rng, 2.0, 3);
        let h2 = sampling::element(&mut h.rng, 2.0, 3);
        let h3 = sampling::element(&mut h.rng, 2.0, 3);
        let lhs = h1
            .compose_with(&h2, n_modes, m_nodes)
            .0
            .compose_with(&h3, n_modes, m_nodes)
            .0;
        let rhs = h1
            .compose_with(&h2.compose_with(&h3, n_modes, m_nodes).0, n_modes, m_nodes)
            .0;
        worst = worst.max(lhs.distance(&rhs));
    }
    h.record("bms/associativity", n, worst, 1e-8);

    let n = h.level.scale(20, 100);
    let mut worst = 0.0f64;
    for _ in 0..n {
        let h1 = Bms21Element::new(
            sampling::functional(&mut h.rng, 3),
            sampling::rotation(&mut h.rng),
        );
        let h2 = Bms21Element::new(
            sampling::functional(&mut h.rng, 3),
            sampling::rotation(&mut h.rng),
        );
        let h3 = Bms21Element::new(
            sampling::functional(&mut h.rng, 3),
            sampling::rotation(&mut h.rng),
        );
        let lhs = h1.compose(&h2).compose(&h3);
        let rhs = h1.compose(&h2.compose(&h3));
        worst = worst.max(lhs.distance(&rhs));
    }
    h.record("bms/associativity_rotations", n, worst, 1e-12);

    let n = h.level.scale(20, 100);
    let mut worst = 0.0f64;
    let id = Bms21Element::identity();
    for _ in 0..n {
        let e = sampling::element(&mut h.rng, 2.0, 3);
        worst = worst.max(id.compose(&e).distance(&e));
        worst = worst.max(e.compose(&id).distance(&e));
        worst = worst.max(e.compose_with(&e.invert_with(96, 768), 96, 768).0.distance(&id));
    }
    h.record("bms/identity_and_inverse", n, worst, 1e-10);

    let n = h.level.scale(10, 30);
    let mut worst = 0.0f64;
    for _ in 0..n {
        let g = sampling::sl2(&mut h.rng, 2.0);
        let lorentz = Bms21Element::new(FourierFunctional::zero(), g);
        let alpha = sampling::functional(&mut h.rng, 3);
        let st = Bms21Element::new(alpha.clone(), Sl2Matrix::IDENTITY);
        let conj = lorentz
            .compose_with(&st, 96, 768)
            .0
            .compose_with(&lorentz.invert_with(96, 768), 96, 768)
            .0;
        let expected = fourier::act(&g, &alpha, 96, 768).functional;
        worst = worst.max(conj.alpha.sub(&expected).norm());
        worst = worst.max((conj.g.a() - 1.0).abs() + conj.g.b().abs() + conj.g.c().abs());
    }
    h.record("bms/supertranslations_normal", n, worst, 1e-8);
}

fn minkowski_suite(h: &mut Harness) {
    let n = h.level.scale(300, 1000);
    let mut worst_hom = 0.0f64;
    let mut worst_eta = 0.0f64;
    for _ in 0..n {
        let g1 = sampling::sl2(&mut h.rng, 3.0);
        let g2 = sampling::sl2(&mut h.rng, 3.0);
        let lhs = minkowski::gamma(&(g1 * g2));
        let rhs = minkowski::gamma(&g1).compose(&minkowski::gamma(&g2));
        worst_hom = worst_hom.max(rel(lhs.max_abs_diff(&rhs), 1.0));
        worst_eta = worst_eta.max(minkowski::gamma(&g1).eta_residual());
        worst_eta = worst_eta.max((minkowski::gamma(&g1).det() - 1.0).abs());
    }
    h.record("minkowski/gamma_homomorphism", n, worst_hom, 1e-12);
    h.record("minkowski/gamma_preserves_eta", n, worst_eta, 1e-12);

    let kernel = minkowski::gamma(&-Sl2Matrix::IDENTITY).max_abs_diff(&Lorentz3Matrix::IDENTITY);
    h.record("minkowski/gamma_kernel_minus_identity", 1, kernel, 1e-14);

    let n = h.level.scale(300, 1000);
    let mut worst = 0.0f64;
    for _ in 0..n {
        let x = Vector21::new(
            h.rng.gen_range(-3.0..3.0),
            h.rng.gen_range(-3.0..3.0),
            h.rng.gen_range(-3.0..3.0),
        );
        worst = worst.max(rel((x.to_sym().det() - x.dot(&x)).abs(), x.dot(&x)));
    }
    h.record("minkowski/det_b_is_norm", n, worst, 1e-13);

    let n = h.level.scale(200, 500);
    let mut worst_dot = 0.0f64;
    let mut worst_eq = 0.0f64;
    for _ in 0..n {
        let g = sampling::sl2(&mut h.rng, 3.0);
        let l = minkowski::gamma(&g);
        let x = Vector21::new(
            h.rng.gen_range(-2.0..2.0),
            h.rng.gen_range(-2.0..2.0),
            h.rng.gen_range(-2.0..2.0),
        );
        let y = Vector21::new(
            h.rng.gen_range(-2.0..2.0),
            h.rng.gen_range(-2.0..2.0),
            h.rng.gen_range(-2.0..2.0),
        );
        worst_dot = worst_dot.max(rel((l.apply(&x).dot(&l.apply(&y)) - x.dot(&y)).abs(), 4.0));
        let lhs = l.apply(&x).to_sym();
        let rhs = x.to_sym().congruence(&g);
        worst_eq = worst_eq
            .max((lhs.m11 - rhs.m11).abs())
            .max((lhs.m12 - rhs.m12).abs())
            .max((lhs.m22 - rhs.m22).abs());
    }
    h.record("minkowski/gamma_preserves_dot", n, worst_dot, 1e-12);
    h.record("minkowski/to_sym_equivariance", n, worst_eq, 1e-11);

    let n = h.level.scale(300, 1000);
    let beta = FourierFunctional::from_coeffs(0.4, vec![(1.0, 0.5), (-0.3, 0.2)]);
    let mut worst = 0.0f64;
    for _ in 0..n {
        let phi = h.rng.gen_range(0.0..std::f64::consts::TAU);
        let r = (h.rng.gen_range(-1.0f64..2.0)).exp();
        let x = Vector21::new(r, r * phi.cos(), r * phi.sin());
        let f = minkowski::lift_homogeneous(&beta, &x).unwrap();
        for t in [0.1, 1.0, 7.3] {
            let ft = minkowski::lift_homogeneous(&beta, &x.scaled(t)).unwrap();
            worst = worst.max((ft - t * f).abs() / (1.0 + (t * f).abs()));
        }
    }
    h.record("minkowski/lift_homogeneity", n, worst, 1e-12);

    let n = h.level.scale(200, 500);
    let mut worst = 0.0f64;
    for _ in 0..n {
        let s1 = h.rng.gen_range(-2.0..2.0);
        let s2 = h.rng.gen_range(-2.0..2.0);
        if s1 == 0.0 && s2 == 0.0 {
            continue;
        }
        let m = minkowski::spinor_to_null(s1, s2).unwrap();
        worst = worst.max(m.det().abs());
        if m.trace() <= 0.0 {
            worst = f64::INFINITY;
        }
        let flipped = minkowski::spinor_to_null(-s1, -s2).unwrap();
        worst = worst
            .max((m.m11 - flipped.m11).abs())
            .max((m.m12 - flipped.m12).abs())
            .max((m.m22 - flipped.m22).abs());
    }
    h.record("minkowski/spinor_rank_one_future", n, worst, 1e-13);
}

fn little_suite(h: &mut Harness) {
    let groups = [
        LittleGroup::So2,
        LittleGroup::Cyclic(2),
        LittleGroup::Cyclic(4),
        LittleGroup::Cyclic(6),
    ];
    let n = h.level.scale(50, 200);
    let mut worst_idem = 0.0f64;
    let mut worst_inv = 0.0f64;
    for _ in 0..n {
        let f = sampling::functional(&mut h.rng, 12);
        for group in groups {
            let p = little::invariant_projector(group, &f);
            let pp = little::invariant_projector(group, &p);
            worst_idem = worst_idem.max(pp.sub(&p).norm());
            if p.norm_sq() > f.norm_sq() + 1e-15 {
                worst_idem = f64::INFINITY;
            }
            worst_inv = worst_inv.max(little::invariance_residual(&p, group));
        }
    }
    h.record("little/projector_idempotent", n, worst_idem, 0.0);
    h.record("little/projector_output_invariant", n, worst_inv, 1e-12);

    let mut worst = 0.0f64;
    let mut pairs = 0usize;
    for n_ord in [2u32, 4, 6, 8, 12] {
        let group = LittleGroup::cyclic(n_ord).unwrap();
        for l1 in 0..n_ord {
            for l2 in 0..n_ord {
                let r1 = CharacterRep::new(group, l1 as i64);
                let r2 = CharacterRep::new(group, l2 as i64);
                let s: Complex64 = (0..n_ord)
                    .map(|j| r1.eval_index(j).unwrap() * r2.eval_index(j).unwrap().conj())
                    .sum();
                let avg = s / n_ord as f64;
                let expect = if l1 == l2 { 1.0 } else { 0.0 };
                worst = worst.max((avg - expect).norm());
                pairs += 1;
            }
        }
    }
    h.record("little/character_orthogonality", pairs, worst, 1e-14);

    let n = h.level.scale(100, 400);
    let mut worst = 0.0f64;
    for _ in 0..n {
        let nu = h.rng.gen_range(-2i64..=2);
        let rep = CharacterRep::new(LittleGroup::So2, nu);
        let t1 = h.rng.gen_range(0.0..std::f64::consts::TAU);
        let t2 = h.rng.gen_range(0.0..std::f64::consts::TAU);
        let gap = (rep.eval_angle(t1) * rep.eval_angle(t2) - rep.eval_angle(t1 + t2)).norm();
        worst = worst.max(gap);
        worst = worst.max((rep.eval_angle(t1).norm() - 1.0).abs());
        let n_ord = 2 * h.rng.gen_range(1u32..=6);
        let repc = CharacterRep::new(LittleGroup::cyclic(n_ord).unwrap(), h.rng.gen_range(0..n_ord as i64));
        let j1 = h.rng.gen_range(0..n_ord);
        let j2 = h.rng.gen_range(0..n_ord);
        let gap = (repc.eval_index(j1).unwrap() * repc.eval_index(j2).unwrap()
            - repc.eval_index((j1 + j2) % n_ord).unwrap())
        .norm();
        worst = worst.max(gap);
    }
    h.record("little/character_multiplicative", n, worst, 1e-14);

    let mut failures = 0usize;
    let mut cases = 0usize;
    for m in 1..=8usize {
        let f = FourierFunctional::cosine(m, 1.0);
        let got = little::detect_stabilizer_in_so2(&f, little::default_support_tol(&f)).unwrap();
        cases += 1;
        if got != LittleGroup::Cyclic(2 * m as u32) {
            failures += 1;
        }
    }
    let c = FourierFunctional::constant(2.0);
    cases += 1;
    if little::detect_stabilizer_in_so2(&c, little::default_support_tol(&c)).unwrap()
        != LittleGroup::So2
    {
        failures += 1;
    }
    for _ in 0..h.level.scale(30, 100) {
        let f = sampling::functional(&mut h.rng, 6);
        cases += 1;
        match little::detect_stabilizer_in_so2(&f, little::default_support_tol(&f)) {
            Ok(LittleGroup::So2) => {}
            Ok(LittleGroup::Cyclic(n)) => {
                // every detected order is even and R(π) = −I fixes f
                if n % 2 != 0 || f.rotated(2.0 * std::f64::consts::PI).sub(&f).norm() > 1e-12 {
                    failures += 1;
                }
            }
            Err(_) => failures += 1,
        }
    }
    h.record("little/stabilizer_detection", cases, failures as f64, 0.0);

    let n = h.level.scale(50, 200);
    let mut worst = 0.0f64;
    for _ in 0..n {
        // the rotation action is an isometry: distinct invariant
        // functionals stay separated along their orbits
        let f1 = little::invariant_projector(LittleGroup::Cyclic(4), &sampling::functional(&mut h.rng, 8));
        let f2 = little::invariant_projector(LittleGroup::Cyclic(4), &sampling::functional(&mut h.rng, 8));
        let gap = f1.sub(&f2).norm();
        let a = h.rng.gen_range(0.0..std::f64::consts::TAU);
        let moved = f1.rotated(2.0 * a).sub(&f2.rotated(2.0 * a)).norm();
        worst = worst.max((moved - gap).abs());
    }
    h.record("little/rotation_isometry_on_invariants", n, worst, 1e-13);
}

fn orbit_suite(h: &mut Harness) {
    let kinds = [LittleGroup::So2, LittleGroup::Cyclic(4)];

    let n = h.level.scale(300, 1000);
    let mut worst = 0.0f64;
    for kind in kinds {
        for _ in 0..n / 2 {
            let g1 = sampling::sl2(&mut h.rng, 3.0);
            let g2 = sampling::sl2(&mut h.rng, 3.0);
            let q = sampling::orbit_point(&mut h.rng, kind);
            let ell = |g: &Sl2Matrix, q: &OrbitPoint| orbit::coset_act(&g.inverse(), q).1.inverse();
            let lhs = ell(&(g1 * g2), &q).matrix();
            let q_back = orbit::coset_act(&g1.inverse(), &q).0;
            let rhs = (ell(&g1, &q).compose(&ell(&g2, &q_back)).unwrap()).matrix();
            worst = worst
                .max((lhs.a() - rhs.a()).abs())
                .max((lhs.c() - rhs.c()).abs());
        }
    }
    h.record("orbits/wigner_cocycle", n, worst, 1e-12);

    let n = h.level.scale(300, 1000);
    let mut worst = 0.0f64;
    for kind in kinds {
        for _ in 0..n / 2 {
            let g1 = sampling::sl2(&mut h.rng, 3.0);
            let g2 = sampling::sl2(&mut h.rng, 3.0);
            let q = sampling::orbit_point(&mut h.rng, kind);
            let lhs = orbit::coset_act(&(g1 * g2), &q).0;
            let rhs = orbit::coset_act(&g1, &orbit::coset_act(&g2, &q).0).0;
            let (x1, y1, p1) = lhs.coords();
            let (x2, y2, p2) = rhs.coords();
            worst = worst.max((x1 - x2).abs()).max((y1 - y2).abs());
            if let (Some(p1), Some(p2)) = (p1, p2) {
                worst = worst.max(wrap_sym(p1 - p2).abs());
            }
        }
    }
    h.record("orbits/left_action", n, worst, 1e-11);

    // stabilizer of the base coset is exactly the little group
    let mut failures = 0usize;
    let q0 = OrbitPoint::base(LittleGroup::Cyclic(4));
    for j in 0..4u32 {
        let g = Sl2Matrix::rotation(std::f64::consts::TAU * j as f64 / 4.0);
        let (q, _) = orbit::coset_act(&g, &q0);
        let (x, y, phi) = q.coords();
        if x.abs() > 1e-12 || (y - 1.0).abs() > 1e-12 || phi.unwrap() > 1e-12 {
            failures += 1;
        }
    }
    for _ in 0..h.level.scale(20, 50) {
        let g = sampling::sl2(&mut h.rng, 2.0);
        let q0 = OrbitPoint::base(LittleGroup::So2);
        let (q, _) = orbit::coset_act(&g, &q0);
        let (x, y, _) = q.coords();
        let moved = x.abs() > 1e-9 || (y - 1.0).abs() > 1e-9;
        let is_rotation = g.rotation_angle().is_some();
        if moved == is_rotation {
            failures += 1;
        }
    }
    h.record("orbits/base_stabilizer_is_little_group", 4 + h.level.scale(20, 50), failures as f64, 0.0);

    let n = h.level.scale(300, 1000);
    let mut worst = 0.0f64;
    for kind in kinds {
        for _ in 0..n / 2 {
            let g = sampling::sl2(&mut h.rng, 3.0);
            let q = sampling::orbit_point(&mut h.rng, kind);
            match orbit::radon_nikodym(&g, &q) {
                Ok(v) => worst = worst.max((v - 1.0).abs()),
                Err(_) => worst = f64::INFINITY,
            }
        }
    }
    h.record("orbits/radon_nikodym_unity", n, worst, 1e-6);

    // equivariance of the coset functional: f_{g·q} = T′(g) f_q
    let n = h.level.scale(20, 60);
    let mut worst = 0.0f64;
    for kind in kinds {
        let f_base = match kind {
            LittleGroup::So2 => FourierFunctional::constant(1.0),
            LittleGroup::Cyclic(_) => FourierFunctional::cosine(2, 1.0),
        };
        for _ in 0..n / 2 {
            // keep the combined boost of g·s(q) inside the truncation budget
            let g = sampling::sl2(&mut h.rng, 1.5);
            let x = h.rng.gen_range(-0.8..0.8);
            let y = (h.rng.gen_range(-0.5f64..0.5)).exp();
            let q = match kind {
                LittleGroup::So2 => OrbitPoint::so2(x, y),
                LittleGroup::Cyclic(nn) => {
                    OrbitPoint::cyclic(nn, x, y, h.rng.gen_range(0.0..core::f64::consts::TAU))
                        .unwrap()
                }
            };
            let fq = orbit::orbit_functional(&f_base, &q, 96, 768).unwrap();
            let gq = orbit::coset_act(&g, &q).0;
            let lhs = orbit::orbit_functional(&f_base, &gq, 96, 768).unwrap();
            let rhs = fourier::act_dual(&g, &fq, 96, 768).functional;
            worst = worst.max(lhs.sub(&rhs).norm() / lhs.norm().max(1.0));
        }
    }
    h.record("orbits/functional_equivariance", n, worst, 1e-8);

    // integral form of measure invariance on a truncated domain
    let grid = h.level.scale(240, 320);
    let mut worst = 0.0f64;
    let cases = h.level.scale(1, 3);
    for _ in 0..cases {
        let g = sampling::sl2(&mut h.rng, 1.5);
        let ginv = g.inverse();
        let bump = |q: &OrbitPoint| {
            let (x, y, _) = q.coords();
            let u = x / 0.8;
            let v = (y - 1.0) / 0.6;
            let r2 = u * u + v * v;
            if r2 < 1.0 {
                (-1.0 / (1.0 - r2)).exp()
            } else {
                0.0
            }
        };
        let (x_lo, x_hi, y_lo, y_hi) = (-4.0, 4.0, 0.1, 6.0);
        let dx = (x_hi - x_lo) / grid as f64;
        let dy = (y_hi - y_lo) / grid as f64;
        let mu = OrbitMeasure::So2;
        let mut plain = 0.0;
        let mut moved = 0.0;
        for i in 0..grid {
            for j in 0..grid {
                let q = OrbitPoint::so2(
                    x_lo + (i as f64 + 0.5) * dx,
                    y_lo + (j as f64 + 0.5) * dy,
                );
                let w = orbit::measure_density(&mu, &q) * dx * dy;
                plain += bump(&q) * w;
                moved += bump(&orbit::coset_act(&ginv, &q).0) * w;
            }
        }
        worst = worst.max((plain - moved).abs() / plain.abs().max(1e-9));
    }
    h.record("orbits/measure_invariance_integral", cases, worst, 1e-3);
}

fn induced_suite(h: &mut Harness) {
    let c4 = LittleGroup::cyclic(4).unwrap();
    let specs: Vec<(InducedRepSpec, LittleGroup)> = vec![
        (
            InducedRepSpec::new(
                FourierFunctional::constant(1.0),
                CharacterRep::new(LittleGroup::So2, 1),
            )
            .unwrap(),
            LittleGroup::So2,
        ),
        (
            InducedRepSpec::new(
                FourierFunctional::cosine(2, 1.0),
                CharacterRep::new(c4, 3),
            )
            .unwrap(),
            c4,
        ),
    ];

    let pairs = h.level.scale(4, 15);
    let mut worst = 0.0f64;
    let mut worst_rot = 0.0f64;
    let mut worst_mod = 0.0f64;
    let mut samples = 0usize;
    for (spec, kind) in &specs {
        let points = sampling::section_grid(*kind, 4);
        let psi = SampledSection::from_profile(points, gaussian_profile()).unwrap();
        for _ in 0..pairs {
            let h1 = sampling::element(&mut h.rng, 2.0, 3);
            let h2 = sampling::element(&mut h.rng, 2.0, 3);
            let two = induced::apply(spec, &h1, &induced::apply(spec, &h2, &psi).unwrap()).unwrap();
            let (h12, _) = h1.compose_with(&h2, 96, 768);
            let one = induced::apply(spec, &h12, &psi).unwrap();
            for (v, w) in two.values().iter().zip(one.values()) {
                worst = worst.max((v - w).norm() / v.norm().max(1.0));
                samples += 1;
            }
        }
        // rotation-only Lorentz parts: exact to 1e-12
        for _ in 0..pairs {
            let h1 = Bms21Element::new(
                sampling::functional(&mut h.rng, 3),
                sampling::rotation(&mut h.rng),
            );
            let h2 = Bms21Element::new(
                sampling::functional(&mut h.rng, 3),
                sampling::rotation(&mut h.rng),
            );
            let two = induced::apply(spec, &h1, &induced::apply(spec, &h2, &psi).unwrap()).unwrap();
            let one = induced::apply(spec, &h1.compose(&h2), &psi).unwrap();
            for (v, w) in two.values().iter().zip(one.values()) {
                worst_rot = worst_rot.max((v - w).norm() / v.norm().max(1.0));
            }
        }
        // supertranslations act by unit-modulus phases
        let alpha = sampling::functional(&mut h.rng, 4);
        let hst = Bms21Element::new(alpha, Sl2Matrix::IDENTITY);
        let out = induced::apply(spec, &hst, &psi).unwrap();
        for (v, w) in psi.values().iter().zip(out.values()) {
            worst_mod = worst_mod.max((w.norm() - v.norm()).abs());
        }
    }
    h.record("induced/homomorphism", samples, worst, 1e-8);
    h.record("induced/homomorphism_rotations", samples, worst_rot, 1e-12);
    h.record("induced/supertranslation_unit_phase", 32, worst_mod, 1e-13);

    // |e^{i⟨f_q,α⟩} · U(ℓ)| = 1 for arbitrary group elements
    let n = h.level.scale(50, 200);
    let mut worst = 0.0f64;
    for _ in 0..n {
        let (spec, kind) = &specs[h.rng.gen_range(0..specs.len())];
        let q = sampling::orbit_point(&mut h.rng, *kind);
        let hel = sampling::element(&mut h.rng, 2.0, 4);
        let phase = spec.character_of_point(&q, &hel.alpha);
        let ell = orbit::coset_act(&hel.g.inverse(), &q).1.inverse();
        let u = spec.rep().eval(&ell).unwrap();
        worst = worst.max(((phase * u).norm() - 1.0).abs());
    }
    h.record("induced/fiber_unit_modulus", n, worst, 1e-14);

    // norm preservation under invariant-measure quadrature
    let grid = h.level.scale(160, 240);
    let g = sampling::sl2(&mut h.rng, 1.5);
    let hel = Bms21Element::new(sampling::functional(&mut h.rng, 3), g);
    let spec = &specs[0].0;
    let psi = SampledSection::from_profile(
        sampling::section_grid(LittleGroup::So2, 4),
        gaussian_profile(),
    )
    .unwrap();
    let out = induced::apply(spec, &hel, &psi).unwrap();
    let (x_lo, x_hi, y_lo, y_hi) = (-5.0, 5.0, 0.05, 8.0);
    let dx = (x_hi - x_lo) / grid as f64;
    let dy = (y_hi - y_lo) / grid as f64;
    let mu = OrbitMeasure::So2;
    let mut before = 0.0;
    let mut after = 0.0;
    for i in 0..grid {
        for j in 0..grid {
            let q = OrbitPoint::so2(x_lo + (i as f64 + 0.5) * dx, y_lo + (j as f64 + 0.5) * dy);
            let w = orbit::measure_density(&mu, &q) * dx * dy;
            before += psi.value_at(&q).norm_sqr() * w;
            after += out.value_at(&q).norm_sqr() * w;
        }
    }
    h.record(
        "induced/norm_preservation",
        grid * grid,
        (after.sqrt() - before.sqrt()).abs() / before.sqrt(),
        1e-3,
    );

    // distinct labels produce operators that differ on a rotation element
    let base = OrbitPoint::base(LittleGroup::So2);
    let hrot = Bms21Element::new(FourierFunctional::zero(), Sl2Matrix::rotation(0.5));
    let mut min_gap = f64::INFINITY;
    for nu in [0i64, 1, 2, -1, -2] {
        for nu2 in [0i64, 1, 2, -1, -2] {
            if nu == nu2 {
                continue;
            }
            let s1 = InducedRepSpec::new(
                FourierFunctional::constant(1.0),
                CharacterRep::new(LittleGroup::So2, nu),
            )
            .unwrap();
            let s2 = InducedRepSpec::new(
                FourierFunctional::constant(1.0),
                CharacterRep::new(LittleGroup::So2, nu2),
            )
            .unwrap();
            let v1 = induced::apply(&s1, &hrot, &psi).unwrap().value_at(&base);
            let v2 = induced::apply(&s2, &hrot, &psi).unwrap().value_at(&base);
            min_gap = min_gap.min((v1 - v2).norm());
        }
    }
    // record as "error" the shortfall below a visible separation
    h.record(
        "induced/distinct_labels_distinguishable",
        20,
        (0.1 - min_gap).max(0.0),
        0.0,
    );
}

fn gaussian_profile() -> impl Fn(&OrbitPoint) -> Complex64 + 'static {
    |q: &OrbitPoint| {
        let (x, y, phi) = q.coords();
        let ly = y.ln();
        let r2 = x * x + ly * ly;
        let arg = 0.7 * x + phi.unwrap_or(0.0);
        (-r2).exp() * Complex64::new(arg.cos(), arg.sin())
    }
}

fn wrap_sym(t: f64) -> f64 {
    let tau = std::f64::consts::TAU;
    let mut r = t % tau;
    if r > std::f64::consts::PI {
        r -= tau;
    }
    if r < -std::f64::consts::PI {
        r += tau;
    }
    r
}
