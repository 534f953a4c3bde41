//! The verification harness: every structural identity of the construction
//! checked exhaustively on a finite truncation, exact wherever the quantity
//! is rational and at fixed tolerances for the floating-point group action.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use schwinger_core::algebra::{
    commutator_defect, number_operator, sp2r_generator, su2_ladder, Generators, OperatorExpr,
    Sector, Sp2rGenerator, Su2Ladder,
};
use schwinger_core::basis::{
    basis_keys, basis_state, basis_state_closed_form, cn_closed_form, cn_recursion, gram_rank,
    h0_membership, k_minus_kernel_dim, ladder_product_check, sp2r_casimir_check, traceless_part,
    traceless_project, NormalizedState,
};
use schwinger_core::catalog::{self, IrrepLabel};
use schwinger_core::induced::{
    equivalence_map, induced_inner_formula, normalising_factor, sphere_inner_direct, SphereFunction,
};
use schwinger_core::numeric::{
    act_bargmann, act_induced, equivalence_shadow, equivariance_defect, haar_random_su3,
    representation_defect, tensor_transform, GroupElement, NumericPolynomial, GROUP_TOLERANCE,
};
use schwinger_core::scalar::frac;
use schwinger_core::{ComplexScalar, Error, Monomial, Polynomial, Scalar};

pub const SINGLE_TOLERANCE: f64 = 1e-10;
pub const COMPOSED_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    CgCounting,
    CnDualRoute,
    InducedOracle,
    Isometry,
    KernelDimension,
    KminusStructure,
    NumericEquivariance,
    Orthonormality,
    Projector,
    Sp2rCasimir,
    Sp2rRelations,
    Su3Closure,
}

impl Suite {
    /// Sorted by name.
    pub const ALL: [Suite; 12] = [
        Suite::CgCounting,
        Suite::CnDualRoute,
        Suite::InducedOracle,
        Suite::Isometry,
        Suite::KernelDimension,
        Suite::KminusStructure,
        Suite::NumericEquivariance,
        Suite::Orthonormality,
        Suite::Projector,
        Suite::Sp2rCasimir,
        Suite::Sp2rRelations,
        Suite::Su3Closure,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::CgCounting => "cg_counting",
            Suite::CnDualRoute => "cn_dual_route",
            Suite::InducedOracle => "induced_oracle",
            Suite::Isometry => "isometry",
            Suite::KernelDimension => "kernel_dimension",
            Suite::KminusStructure => "kminus_structure",
            Suite::NumericEquivariance => "numeric_equivariance",
            Suite::Orthonormality => "orthonormality",
            Suite::Projector => "projector",
            Suite::Sp2rCasimir => "sp2r_casimir",
            Suite::Sp2rRelations => "sp2r_relations",
            Suite::Su3Closure => "su3_closure",
        }
    }

    fn stream(&self) -> u64 {
        *self as u64 + 1
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyConfig {
    pub su3_degree: u32,
    pub sp2r_degree: u32,
    /// Basis states with `p + q ≤ basis_max_pq`.
    pub basis_max_pq: u32,
    /// Basis states with `m − k ≤ basis_max_rho`.
    pub basis_max_rho: u32,
    /// `p, q ≤ kernel_max`.
    pub kernel_max: u32,
    /// Bidegrees up to `(projector_max, projector_max)`.
    pub projector_max: u32,
    pub projector_samples: u32,
    pub cg_max: u32,
    pub spectrum_max: u32,
    /// Channels with `p + q ≤ induced_max_total`.
    pub induced_max_total: u32,
    pub normalising_max_total: u32,
    pub isometry_max: u32,
    pub isometry_samples: u32,
    pub cn_max: u32,
    pub numeric: bool,
    pub numeric_samples: u32,
    pub equivariance_bidegree: (u32, u32),
    pub representation_max: u32,
    pub seed: u64,
}

impl VerifyConfig {
    /// The full acceptance truncation.
    pub fn full() -> Self {
        VerifyConfig {
            su3_degree: 6,
            sp2r_degree: 8,
            basis_max_pq: 5,
            basis_max_rho: 2,
            kernel_max: 4,
            projector_max: 4,
            projector_samples: 200,
            cg_max: 20,
            spectrum_max: 10,
            induced_max_total: 4,
            normalising_max_total: 6,
            isometry_max: 4,
            isometry_samples: 100,
            cn_max: 8,
            numeric: true,
            numeric_samples: 100,
            equivariance_bidegree: (2, 2),
            representation_max: 3,
            seed: 0,
        }
    }

    /// The truncation selected by the command-line flags.
    pub fn from_flags(max_pq: u32, degree: u32, numeric: bool, samples: u32, seed: u64) -> Self {
        VerifyConfig {
            su3_degree: degree,
            sp2r_degree: degree + 2,
            basis_max_pq: max_pq,
            kernel_max: max_pq,
            projector_max: max_pq,
            induced_max_total: max_pq,
            normalising_max_total: max_pq + 2,
            isometry_max: max_pq,
            cn_max: 2 * max_pq,
            numeric,
            numeric_samples: samples,
            seed,
            ..VerifyConfig::full()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub status: &'static str,
    pub checks: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_defect: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumericSummary {
    pub max_defect: f64,
    pub samples: u32,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifySummary {
    pub all_passed: bool,
    pub config: VerifyConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric: Option<NumericSummary>,
    pub suites: Vec<SuiteReport>,
}

impl VerifySummary {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("summary serializes");
        s.push('\n');
        s
    }
}

#[derive(Default)]
struct Tally {
    checks: u64,
    failures: u64,
    detail: Option<String>,
    max_defect: Option<f64>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.detail.is_none() {
                self.detail = Some(what());
            }
        }
    }

    fn defect(&mut self, d: f64, tol: f64, what: impl FnOnce() -> String) {
        self.max_defect = Some(self.max_defect.map_or(d, |m| m.max(d)));
        self.check(d <= tol && d.is_finite(), || {
            format!("{} (defect {d:e} > {tol:e})", what())
        });
    }

    fn merge(&mut self, other: Tally) {
        self.checks += other.checks;
        self.failures += other.failures;
        if self.detail.is_none() {
            self.detail = other.detail;
        }
        if let Some(d) = other.max_defect {
            self.max_defect = Some(self.max_defect.map_or(d, |m| m.max(d)));
        }
    }

    fn report(self, suite: Suite) -> SuiteReport {
        SuiteReport {
            name: suite.name(),
            status: if self.failures == 0 { "PASS" } else { "FAIL" },
            checks: self.checks,
            failures: self.failures,
            max_defect: self.max_defect,
            detail: self.detail,
        }
    }
}

fn merge_all(parts: Vec<Tally>) -> Tally {
    let mut t = Tally::default();
    for p in parts {
        t.merge(p);
    }
    t
}

/// Runs suites against one configuration, sharing the constructed basis.
pub struct Harness {
    cfg: VerifyConfig,
    states: OnceLock<Result<Vec<NormalizedState>, String>>,
}

impl Harness {
    pub fn new(cfg: VerifyConfig) -> Self {
        Harness {
            cfg,
            states: OnceLock::new(),
        }
    }

    pub fn config(&self) -> &VerifyConfig {
        &self.cfg
    }

    /// All basis states with `p + q ≤ basis_max_pq` and `m − k ≤ basis_max_rho`.
    pub fn states(&self) -> Result<&[NormalizedState], String> {
        self.states
            .get_or_init(|| {
                let keys: Vec<_> = (0..=self.cfg.basis_max_pq)
                    .flat_map(|t| (0..=t).map(move |p| IrrepLabel::new(p, t - p)))
                    .flat_map(|rep| basis_keys(rep, self.cfg.basis_max_rho))
                    .collect();
                keys.par_iter()
                    .map(|k| basis_state(k).map_err(|e| format!("{k:?}: {e}")))
                    .collect()
            })
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(|e| e.clone())
    }

    pub fn run(&self, suite: Suite) -> SuiteReport {
        let tally = match suite {
            Suite::CgCounting => self.cg_counting(),
            Suite::CnDualRoute => self.cn_dual_route(),
            Suite::InducedOracle => self.induced_oracle(),
            Suite::Isometry => self.isometry(),
            Suite::KernelDimension => self.kernel_dimension(),
            Suite::KminusStructure => self.with_states(Self::kminus_structure),
            Suite::NumericEquivariance => self.numeric_equivariance(),
            Suite::Orthonormality => self.with_states(Self::orthonormality),
            Suite::Projector => self.projector(),
            Suite::Sp2rCasimir => self.with_states(Self::sp2r_casimir),
            Suite::Sp2rRelations => self.sp2r_relations(),
            Suite::Su3Closure => self.su3_closure(),
        };
        tally.report(suite)
    }

    /// Every suite (the numeric one only when enabled), in name order.
    pub fn run_all(&self) -> VerifySummary {
        let suites: Vec<Suite> = Suite::ALL
            .into_iter()
            .filter(|s| self.cfg.numeric || *s != Suite::NumericEquivariance)
            .collect();
        let reports: Vec<SuiteReport> = suites.par_iter().map(|s| self.run(*s)).collect();
        let numeric = reports
            .iter()
            .find(|r| r.name == Suite::NumericEquivariance.name())
            .map(|r| NumericSummary {
                max_defect: r.max_defect.unwrap_or(0.0),
                samples: self.cfg.numeric_samples,
                seed: self.cfg.seed,
            });
        VerifySummary {
            all_passed: reports.iter().all(SuiteReport::passed),
            config: self.cfg.clone(),
            numeric,
            suites: reports,
        }
    }

    fn with_states(&self, f: fn(&Self, &[NormalizedState]) -> Tally) -> Tally {
        match self.states() {
            Ok(states) => f(self, states),
            Err(e) => {
                let mut t = Tally::default();
                t.check(false, || format!("basis construction failed: {e}"));
                t
            }
        }
    }

    fn rng(&self, suite: Suite) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.cfg.seed);
        rng.set_stream(suite.stream());
        rng
    }

    fn su3_closure(&self) -> Tally {
        let gens = Generators::new();
        let deg = self.cfg.su3_degree;
        let mut jobs = Vec::new();
        for sector in Sector::ALL {
            for a in 1..=8 {
                for b in (a + 1)..=8 {
                    jobs.push((sector, a, b));
                }
            }
        }
        let parts = jobs
            .par_iter()
            .map(|&(sector, a, b)| {
                let mut t = Tally::default();
                let x = gens.su3(a, sector).expect("alpha in range");
                let y = gens.su3(b, sector).expect("alpha in range");
                let z = gens
                    .su3_commutator_rhs(a, b, sector)
                    .expect("alpha in range");
                let d = commutator_defect(&x, &y, &z, deg);
                t.check(d.is_empty(), || {
                    format!("[Q{a},Q{b}] ({sector:?}) fails on {:?}", d[0].monomial)
                });
                t
            })
            .collect();
        merge_all(parts)
    }

    fn sp2r_relations(&self) -> Tally {
        use Sp2rGenerator::*;
        let deg = self.cfg.sp2r_degree;
        let g = |w| sp2r_generator(w);
        let i = ComplexScalar::i();
        let minus_i = -&i;
        let mut rels: Vec<(String, OperatorExpr, OperatorExpr, OperatorExpr)> = vec![
            ("[J0,K1] = iK2".into(), g(J0), g(K1), g(K2).scale(&i)),
            ("[J0,K2] = -iK1".into(), g(J0), g(K2), g(K1).scale(&minus_i)),
            ("[K1,K2] = -iJ0".into(), g(K1), g(K2), g(J0).scale(&minus_i)),
            (
                "[K+,K-] = -2J0".into(),
                g(Kplus),
                g(Kminus),
                g(J0).scale_real(&Scalar::from_int(-2)),
            ),
            ("[J0,K+] = K+".into(), g(J0), g(Kplus), g(Kplus)),
            ("[J0,K-] = -K-".into(), g(J0), g(Kminus), -&g(Kminus)),
        ];
        let gens = Generators::new();
        for w in Sp2rGenerator::ALL {
            for a in 1..=8 {
                rels.push((
                    format!("[{w:?},Q{a}] = 0"),
                    g(w),
                    gens.su3(a, Sector::Total).expect("alpha in range"),
                    OperatorExpr::zero(),
                ));
            }
        }
        // the isospin ladder and the number operators sit inside the commutant too
        for l in [Su2Ladder::Jplus, Su2Ladder::Jminus, Su2Ladder::J3] {
            rels.push((
                format!("[J0,{l:?}] = 0"),
                g(J0),
                su2_ladder(l),
                OperatorExpr::zero(),
            ));
        }
        let n_diff = &number_operator(true) - &number_operator(false);
        rels.push(("[K1,Na-Nb] = 0".into(), g(K1), n_diff, OperatorExpr::zero()));
        let parts = rels
            .par_iter()
            .map(|(name, x, y, z)| {
                let mut t = Tally::default();
                let d = commutator_defect(x, y, z, deg);
                t.check(d.is_empty(), || {
                    format!("{name} fails on {:?}", d[0].monomial)
                });
                t
            })
            .collect();
        merge_all(parts)
    }

    fn orthonormality(&self, states: &[NormalizedState]) -> Tally {
        let mut t = Tally::default();
        let j3 = su2_ladder(Su2Ladder::J3);
        let j0 = sp2r_generator(Sp2rGenerator::J0);
        let per_state: Vec<Tally> = states
            .par_iter()
            .map(|s| {
                let mut t = Tally::default();
                t.check(s.normalized_norm_sq().is_one(), || {
                    format!("{:?} not unit norm", s.key)
                });
                let m_half = frac(s.key.weight.m2 as i64, 2);
                t.check(
                    j3.apply_real(&s.poly) == Some(s.poly.scale_rational(&m_half)),
                    || format!("{:?} not a J3 eigenvector", s.key),
                );
                let m_sp = frac(s.key.m2 as i64, 2);
                t.check(
                    j0.apply_real(&s.poly) == Some(s.poly.scale_rational(&m_sp)),
                    || format!("{:?} not a J0 eigenvector", s.key),
                );
                let rho = s.key.rho();
                t.check(
                    s.poly.bidegree().ok().flatten()
                        == Some((s.key.rep.p + rho, s.key.rep.q + rho)),
                    || format!("{:?} has the wrong occupation numbers", s.key),
                );
                let closed = basis_state_closed_form(&s.key);
                t.check(closed.as_ref().is_ok_and(|c| c.same_vector(s)), || {
                    format!("{:?} differs from the closed-form expression", s.key)
                });
                t
            })
            .collect();
        t.merge(merge_all(per_state));

        let mut by_bidegree: BTreeMap<(u32, u32), Vec<&NormalizedState>> = BTreeMap::new();
        for s in states {
            let rho = s.key.rho();
            by_bidegree
                .entry((s.key.rep.p + rho, s.key.rep.q + rho))
                .or_default()
                .push(s);
        }
        let groups: Vec<_> = by_bidegree.values().collect();
        let pair_tallies: Vec<Tally> = groups
            .par_iter()
            .map(|group| {
                let mut t = Tally::default();
                for (i, a) in group.iter().enumerate() {
                    for b in &group[i + 1..] {
                        t.check(a.poly.bargmann_inner(&b.poly).is_zero(), || {
                            format!("{:?} and {:?} not orthogonal", a.key, b.key)
                        });
                    }
                }
                t
            })
            .collect();
        t.merge(merge_all(pair_tallies));

        let mut counts: BTreeMap<(u32, u32), u64> = BTreeMap::new();
        for s in states.iter().filter(|s| s.key.rho() == 0) {
            *counts.entry((s.key.rep.p, s.key.rep.q)).or_default() += 1;
        }
        for total in 0..=self.cfg.basis_max_pq {
            for p in 0..=total {
                let rep = IrrepLabel::new(p, total - p);
                let n = counts.get(&(rep.p, rep.q)).copied().unwrap_or(0);
                t.check(n == rep.dim(), || {
                    format!("{rep}: {n} states at m = k, expected {}", rep.dim())
                });
            }
        }
        t
    }

    fn kminus_structure(&self, states: &[NormalizedState]) -> Tally {
        let bases: BTreeMap<_, &NormalizedState> = states
            .iter()
            .filter(|s| s.key.rho() == 0)
            .map(|s| ((s.key.rep, s.key.weight), s))
            .collect();
        let jp = su2_ladder(Su2Ladder::Jplus);
        let parts = states
            .par_iter()
            .map(|s| {
                let mut t = Tally::default();
                let rho = s.key.rho();
                if rho == 0 {
                    t.check(s.poly.contract().is_zero(), || {
                        format!("K- does not annihilate {:?}", s.key)
                    });
                    if s.key.weight.m2 == s.key.weight.i2 as i32 {
                        t.check(jp.apply_real(&s.poly).is_some_and(|f| f.is_zero()), || {
                            format!("{:?} is not a J+ highest weight", s.key)
                        });
                    }
                } else {
                    let Some(base) = bases.get(&(s.key.rep, s.key.weight)) else {
                        t.check(false, || format!("no m = k partner for {:?}", s.key));
                        return t;
                    };
                    let mut g = base.poly.clone();
                    for _ in 0..rho {
                        g = g.mul_zw();
                    }
                    t.check(positive_multiple(&s.poly, &g), || {
                        format!("{:?} is not (z.w)^{rho} times its m = k partner", s.key)
                    });
                }
                t
            })
            .collect();
        merge_all(parts)
    }

    fn sp2r_casimir(&self, states: &[NormalizedState]) -> Tally {
        let parts = states
            .par_iter()
            .map(|s| {
                let mut t = Tally::default();
                t.check(sp2r_casimir_check(s), || {
                    format!("Casimir fails on {:?}", s.key)
                });
                t.check(ladder_product_check(s), || {
                    format!("K+^n K-^n eigenvalue wrong on {:?}", s.key)
                });
                t
            })
            .collect();
        merge_all(parts)
    }

    fn projector(&self) -> Tally {
        let max = self.cfg.projector_max;
        let samples = self.cfg.projector_samples;
        let mut rng = self.rng(Suite::Projector);
        // draw every sample up front so the stream does not depend on scheduling
        let mut jobs = Vec::new();
        for p in 0..=max {
            for q in 0..=max {
                for _ in 0..samples {
                    let f = random_bihomogeneous(&mut rng, p, q);
                    let g = (p > 0 && q > 0).then(|| random_bihomogeneous(&mut rng, p - 1, q - 1));
                    jobs.push((p, q, f, g));
                }
            }
        }
        let parts = jobs
            .par_iter()
            .map(|(p, q, f, g)| {
                let mut t = Tally::default();
                let Ok(f0) = traceless_project(f) else {
                    t.check(false, || format!("projection failed at ({p},{q})"));
                    return t;
                };
                t.check(f0.contract().is_zero(), || {
                    format!("K- P f != 0 at ({p},{q})")
                });
                t.check(traceless_project(&f0).ok() == Some(f0.clone()), || {
                    format!("P not idempotent at ({p},{q})")
                });
                let (_, rem) = (f - &f0).div_rem_zw();
                t.check(rem.is_zero(), || {
                    format!("f - Pf not divisible by z.w at ({p},{q})")
                });
                if let Some(g) = g {
                    t.check(
                        traceless_project(&g.mul_zw()).is_ok_and(|h| h.is_zero()),
                        || format!("P(z.w g) != 0 at ({p},{q})"),
                    );
                }
                t
            })
            .collect();
        merge_all(parts)
    }

    fn kernel_dimension(&self) -> Tally {
        let max = self.cfg.kernel_max;
        let reps: Vec<IrrepLabel> = (0..=max)
            .flat_map(|p| (0..=max).map(move |q| IrrepLabel::new(p, q)))
            .collect();
        let parts = reps
            .par_iter()
            .map(|rep| {
                let mut t = Tally::default();
                let kd = k_minus_kernel_dim(rep.p, rep.q) as u64;
                t.check(kd == rep.dim(), || {
                    format!("dim ker K- at {rep} is {kd}, expected {}", rep.dim())
                });
                let states: Result<Vec<_>, _> =
                    basis_keys(*rep, 0).iter().map(basis_state).collect();
                match states {
                    Ok(states) => {
                        t.check(states.iter().all(|s| h0_membership(&s.poly)), || {
                            format!("an m = k state of {rep} leaves ker K-")
                        });
                        let rank = gram_rank(&states) as u64;
                        t.check(rank == rep.dim(), || format!("Gram rank {rank} at {rep}"));
                    }
                    Err(e) => t.check(false, || format!("{rep}: {e}")),
                }
                t
            })
            .collect();
        merge_all(parts)
    }

    fn cg_counting(&self) -> Tally {
        let mut t = Tally::default();
        for p in 0..=self.cfg.cg_max {
            for q in 0..=self.cfg.cg_max {
                let lhs = IrrepLabel::new(p, 0).dim() * IrrepLabel::new(0, q).dim();
                let rhs: u64 = catalog::cg_series(p, q).iter().map(|r| r.dim()).sum();
                t.check(lhs == rhs, || format!("CG dimension mismatch at ({p},{q})"));
                let rep = IrrepLabel::new(p, q);
                t.check(rep.dim() == rep.conjugate().dim(), || {
                    format!("d{rep} != d(q,p)")
                });
            }
        }
        for p in 0..=self.cfg.spectrum_max {
            for q in 0..=self.cfg.spectrum_max {
                let rep = IrrepLabel::new(p, q);
                let n: u64 = catalog::iy_spectrum(rep).iter().map(|e| e.size()).sum();
                t.check(n == rep.dim(), || {
                    format!("spectrum of {rep} counts {n} states")
                });
            }
        }
        t
    }

    fn induced_oracle(&self) -> Tally {
        let mut t = Tally::default();
        let half = Scalar::from_frac(1, 2);
        let one = SphereFunction::new(Polynomial::one());
        t.check(
            sphere_inner_direct(&one, &one).ok() == Some(half.clone()),
            || "|1|^2 != 1/2 (direct)".into(),
        );
        t.check(induced_inner_formula(&one, &one).ok() == Some(half), || {
            "|1|^2 != 1/2 (formula)".into()
        });
        for total in 0..=self.cfg.normalising_max_total {
            for p in 0..=total {
                let q = total - p;
                let n = normalising_factor(p, q);
                let expect = BigRational::one() / BigRational::from_integer(factorial(p + q + 2));
                t.check(n == expect, || {
                    format!("normalising factor at ({p},{q}) is {n}")
                });
            }
        }
        let nontraceless = SphereFunction::new(Polynomial::zw());
        t.check(
            matches!(
                induced_inner_formula(&nontraceless, &nontraceless),
                Err(Error::NotTraceless)
            ),
            || "non-traceless input accepted".into(),
        );

        let mut channels = Vec::new();
        for total in 0..=self.cfg.induced_max_total {
            for p in 0..=total {
                channels.push((p, total - p));
            }
        }
        let spans: Vec<Vec<SphereFunction>> = channels
            .par_iter()
            .map(|&(p, q)| traceless_span(p, q))
            .collect();
        let parts: Vec<Tally> = channels
            .par_iter()
            .zip(spans.par_iter())
            .map(|(ch, span)| {
                let mut t = Tally::default();
                for (i, a) in span.iter().enumerate() {
                    for b in &span[i..] {
                        let f = induced_inner_formula(a, b);
                        let d = sphere_inner_direct(a, b);
                        t.check(f.is_ok() && f.ok() == d.ok(), || {
                            format!("formula and direct integral disagree in channel {ch:?}")
                        });
                    }
                }
                t
            })
            .collect();
        t.merge(merge_all(parts));

        // distinct traceless channels never overlap, and sums split channelwise
        let mut rng = self.rng(Suite::InducedOracle);
        let reps: Vec<SphereFunction> = spans
            .iter()
            .map(|span| random_combination(&mut rng, span))
            .collect();
        for (i, a) in reps.iter().enumerate() {
            for (j, b) in reps.iter().enumerate() {
                if i != j {
                    t.check(sphere_inner_direct(a, b).is_ok_and(|v| v.is_zero()), || {
                        format!("channels {:?} and {:?} overlap", channels[i], channels[j])
                    });
                }
            }
        }
        let sum_a = SphereFunction::new(
            reps.iter()
                .fold(Polynomial::zero(), |acc, f| &acc + &f.poly),
        );
        let sum_b = SphereFunction::new(reps.iter().rev().fold(Polynomial::zero(), |acc, f| {
            &acc.scale(&Scalar::from_int(2)) + &f.poly
        }));
        let f = induced_inner_formula(&sum_a, &sum_b);
        let d = sphere_inner_direct(&sum_a, &sum_b);
        t.check(f.is_ok() && f.ok() == d.ok(), || {
            "multi-channel sums disagree".into()
        });
        t
    }

    fn isometry(&self) -> Tally {
        let mut t = Tally::default();
        t.check(
            matches!(equivalence_map(&Polynomial::zw()), Err(Error::NotTraceless)),
            || "equivalence map accepted a function outside H0".into(),
        );
        let max = self.cfg.isometry_max;
        let mut rng = self.rng(Suite::Isometry);
        let mut jobs = Vec::new();
        for _ in 0..self.cfg.isometry_samples {
            let n_channels = rng.gen_range(1..=3);
            let chans: Vec<(u32, u32)> = (0..n_channels)
                .map(|_| (rng.gen_range(0..=max), rng.gen_range(0..=max)))
                .collect();
            let make = |rng: &mut ChaCha8Rng| {
                chans.iter().fold(Polynomial::zero(), |acc, &(p, q)| {
                    &acc + &random_bihomogeneous(rng, p, q)
                })
            };
            let f = make(&mut rng);
            let g = make(&mut rng);
            jobs.push((f, g));
        }
        let parts = jobs
            .par_iter()
            .map(|(f, g)| {
                let mut t = Tally::default();
                let f0 = traceless_part(f);
                let g0 = traceless_part(g);
                let (Ok(ef), Ok(eg)) = (equivalence_map(&f0), equivalence_map(&g0)) else {
                    t.check(false, || {
                        "projected function rejected by the equivalence map".into()
                    });
                    return t;
                };
                let fock = f0.bargmann_inner(&g0);
                t.check(
                    induced_inner_formula(&ef, &eg).ok() == Some(fock.clone()),
                    || format!("induced formula != Bargmann product for {f0}"),
                );
                t.check(sphere_inner_direct(&ef, &eg).ok() == Some(fock), || {
                    format!("sphere integral != Bargmann product for {f0}")
                });
                t.check(
                    induced_inner_formula(&ef, &ef).ok() == Some(f0.norm_sq()),
                    || format!("norm not preserved for {f0}"),
                );
                t
            })
            .collect();
        t.merge(merge_all(parts));
        t
    }

    fn cn_dual_route(&self) -> Tally {
        let mut t = Tally::default();
        let max = self.cfg.cn_max;
        for p in 0..=max {
            for q in 0..=max {
                for r in 0..=p {
                    for s in 0..=q {
                        let a = cn_recursion(p, q, r, s);
                        let b = cn_closed_form(p, q, r, s);
                        t.check(a.is_ok() && a.ok() == b.ok(), || {
                            format!("C_n routes disagree at ({p},{q},{r},{s})")
                        });
                    }
                }
            }
        }
        t
    }

    fn numeric_equivariance(&self) -> Tally {
        let cfg = &self.cfg;
        let (ep, eq) = cfg.equivariance_bidegree;
        let parts = (0..cfg.numeric_samples as u64)
            .into_par_iter()
            .map(|i| {
                let mut t = Tally::default();
                let a = haar_random_su3(cfg.seed.wrapping_add(2 * i));
                let b = haar_random_su3(cfg.seed.wrapping_add(2 * i + 1));
                let (u, d) = a.defects();
                t.defect(u.max(d), GROUP_TOLERANCE, || {
                    format!("sample {i} not in SU(3)")
                });
                t.defect(equivariance_defect(&a, ep, eq), SINGLE_TOLERANCE, || {
                    format!("projection does not commute with sample {i}")
                });
                t.defect(
                    representation_defect(&a, &b, cfg.representation_max, cfg.representation_max),
                    COMPOSED_TOLERANCE,
                    || format!("U(A)U(B) != U(AB) at sample {i}"),
                );
                single_application_checks(&mut t, &a, i);
                t
            })
            .collect();
        merge_all(parts)
    }
}

fn single_application_checks(t: &mut Tally, a: &GroupElement, i: u64) {
    let zw = NumericPolynomial::from_exact(&Polynomial::zw());
    t.defect(
        act_bargmann(a, &zw).max_abs_diff(&zw),
        SINGLE_TOLERANCE,
        || format!("z.w not invariant at sample {i}"),
    );
    let f = NumericPolynomial::from_exact(&sample_poly());
    let g =
        NumericPolynomial::from_exact(&sample_poly().mode_diff(schwinger_core::Mode::A1).mul_zw());
    let (uf, ug) = (act_bargmann(a, &f), act_bargmann(a, &g));
    let scale = f.bargmann_inner(&f).norm().max(1.0);
    t.defect(
        (uf.bargmann_inner(&ug) - f.bargmann_inner(&g)).norm() / scale,
        SINGLE_TOLERANCE,
        || format!("inner product not preserved at sample {i}"),
    );
    for (p, q) in [(1, 0), (0, 1), (2, 1), (2, 2)] {
        let h = bidegree_part(&f, p, q);
        let via_tensor = tensor_transform(a, &h).expect("bihomogeneous");
        t.defect(
            via_tensor.max_abs_diff(&act_bargmann(&a.conj(), &h)),
            SINGLE_TOLERANCE,
            || format!("tensor rule and substitution disagree at ({p},{q}), sample {i}"),
        );
        let h0 = NumericPolynomial::from_exact(
            &traceless_project(&bidegree_exact(&sample_poly(), p, q)).expect("bihomogeneous"),
        );
        let moved = tensor_transform(a, &h0).expect("bihomogeneous");
        t.defect(moved.contract().max_abs(), SINGLE_TOLERANCE, || {
            format!("tracelessness lost at ({p},{q}), sample {i}")
        });
        let induced_then_map = act_induced(a, &equivalence_shadow(&h0));
        let map_then_act = equivalence_shadow(&act_bargmann(a, &h0));
        t.defect(
            induced_then_map.max_abs_diff(&map_then_act),
            COMPOSED_TOLERANCE,
            || {
                format!(
                    "induced action and equivalence map do not commute at ({p},{q}), sample {i}"
                )
            },
        );
    }
}

fn sample_poly() -> Polynomial {
    let mut f = Polynomial::zero();
    for (k, m) in Monomial::up_to_degree(4).into_iter().enumerate() {
        let c = ((k * 7 + 3) % 11) as i64 - 5;
        if c != 0 {
            f.add_term(m, &Scalar::from_frac(c, 4));
        }
    }
    f
}

fn bidegree_exact(f: &Polynomial, p: u32, q: u32) -> Polynomial {
    f.bidegree_split()
        .remove(&(p, q))
        .unwrap_or_else(Polynomial::zero)
}

fn bidegree_part(f: &NumericPolynomial, p: u32, q: u32) -> NumericPolynomial {
    f.bidegree_split().remove(&(p, q)).unwrap_or_default()
}

fn factorial(n: u32) -> BigInt {
    schwinger_core::factorial::factorial(n)
}

/// `a = c·b` with rational `c > 0`.
fn positive_multiple(a: &Polynomial, b: &Polynomial) -> bool {
    let (Some((m, ca)), false) = (a.leading(), b.is_zero()) else {
        return false;
    };
    let cb = b.coeff(m);
    let (Some(ca), Some(cb)) = (ca.as_rational(), cb.as_rational()) else {
        return false;
    };
    if cb.is_zero() {
        return false;
    }
    let c = ca / cb;
    c.is_positive() && *a == b.scale_rational(&c)
}

fn random_bihomogeneous(rng: &mut ChaCha8Rng, p: u32, q: u32) -> Polynomial {
    let monos = Monomial::of_bidegree(p, q);
    let n_terms = rng.gen_range(1..=monos.len().min(8));
    let mut f = Polynomial::zero();
    for _ in 0..n_terms {
        let m = monos[rng.gen_range(0..monos.len())];
        let mut num = rng.gen_range(-9i64..=9);
        if num == 0 {
            num = 1;
        }
        let den = rng.gen_range(1i64..=6);
        f.add_term(m, &Scalar::from_frac(num, den));
    }
    f
}

/// Traceless projections of every monomial of bidegree `(p, q)`; they span
/// the traceless part of that channel.
fn traceless_span(p: u32, q: u32) -> Vec<SphereFunction> {
    Monomial::of_bidegree(p, q)
        .into_iter()
        .map(|m| traceless_project(&Polynomial::monomial(m)).expect("bihomogeneous"))
        .filter(|f| !f.is_zero())
        .map(SphereFunction::new)
        .collect()
}

fn random_combination(rng: &mut ChaCha8Rng, span: &[SphereFunction]) -> SphereFunction {
    let f = span.iter().fold(Polynomial::zero(), |acc, s| {
        let c = Scalar::from_frac(rng.gen_range(-5i64..=5), rng.gen_range(1i64..=3));
        &acc + &s.poly.scale(&c)
    });
    SphereFunction::new(f)
}
