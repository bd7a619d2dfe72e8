//! Bundled verification suites. Items run on a worker pool and are
//! reported in a fixed order.

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cohomology::oracle::{cyclic_oracle, truncated_polynomial_oracle};
use crate::cohomology::{cohomology_presentations, h0_invariants_check, hochschild_complex};
use crate::error::Result;
use crate::hopf::{antipode_properties_check, convolution, dual_hopf, hopf_from_json, hopf_to_json, verify_hopf, VerificationReport};
use crate::integrals::{bounded_torsion_certificate, default_torsion_family, frobenius_isomorphism, trace_map};
use crate::linalg::{Matrix, ModulePresentation, RingSpec};
use crate::rep::{comodule_from_representation, dual_hopf_module, hopf_module_structure, invariants, regular_representation, ComoduleData, Side};
use crate::schemes::{builtin_group, builtin_names, GroupSchemeData};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteName {
    Axioms,
    CohomologyOracles,
    Torsion,
    Frobenius,
}

impl SuiteName {
    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Axioms => "axioms",
            SuiteName::CohomologyOracles => "cohomology-oracles",
            SuiteName::Torsion => "torsion",
            SuiteName::Frobenius => "frobenius",
        }
    }
}

type Task = Box<dyn Fn() -> Result<VerificationReport> + Send + Sync>;

const RINGS: [RingSpec; 4] = [RingSpec::Integers, RingSpec::Rationals, RingSpec::PrimeField(2), RingSpec::PrimeField(3)];

/// Runs every item of the suite; an item that errors becomes a failed check.
pub fn run_suite(name: SuiteName, seed: u64) -> VerificationReport {
    let tasks = match name {
        SuiteName::Axioms => axiom_tasks(seed),
        SuiteName::CohomologyOracles => oracle_tasks(),
        SuiteName::Torsion => torsion_tasks(),
        SuiteName::Frobenius => frobenius_tasks(),
    };
    let reports: Vec<VerificationReport> = tasks
        .par_iter()
        .map(|(label, task)| match task() {
            Ok(r) => r.prefixed(label),
            Err(e) => {
                let mut r = VerificationReport::new();
                r.flag(label, false, Some(e.to_string()));
                r
            }
        })
        .collect();
    let mut all = VerificationReport::new();
    reports.into_iter().for_each(|r| all.extend(r));
    all
}

fn builtins(rings: &[RingSpec]) -> Vec<(String, RingSpec)> {
    rings.iter().flat_map(|&r| builtin_names(r).into_iter().map(move |n| (n, r))).collect()
}

fn random_matrix(rng: &mut ChaCha8Rng, ring: RingSpec, d: usize) -> Matrix {
    Matrix::from_fn(ring, d, d, |_, _| ring.from_i64(rng.gen_range(-3..=3)))
}

fn axiom_tasks(seed: u64) -> Vec<(String, Task)> {
    builtins(&RINGS)
        .into_iter()
        .enumerate()
        .map(|(k, (name, ring))| {
            let label = format!("{name}@{ring}");
            let task: Task = Box::new(move || {
                let h = builtin_group(&name, ring)?.hopf().clone();
                let mut r = verify_hopf(&h);
                r.extend(antipode_properties_check(&h));
                let dual = dual_hopf(&h);
                r.extend(verify_hopf(&dual).prefixed("dual"));
                let dd = dual_hopf(&dual);
                let same = dd.mul() == h.mul() && dd.unit() == h.unit() && dd.comul() == h.comul() && dd.counit() == h.counit() && dd.antipode() == h.antipode();
                r.flag("dual involution", same, None);
                r.flag("json round trip", hopf_from_json(&hopf_to_json(&h))? == h, None);
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
                let (c, a, d) = (h.coalgebra(), h.algebra(), h.rank());
                for t in 0..4 {
                    let (f, g, e) = (random_matrix(&mut rng, ring, d), random_matrix(&mut rng, ring, d), random_matrix(&mut rng, ring, d));
                    let lhs = convolution(c, a, &convolution(c, a, &f, &g)?, &e)?;
                    let rhs = convolution(c, a, &f, &convolution(c, a, &g, &e)?)?;
                    r.compare(&format!("convolution associativity, triple {t}"), &lhs, &rhs);
                }
                Ok(r)
            });
            (label, task)
        })
        .collect()
}

/// Oracle comparison plus `∂² = 0` and `H^0 = invariants` for one pair.
fn compare_with_oracle(g: &GroupSchemeData, m: &ComoduleData, oracle: &[ModulePresentation]) -> Result<VerificationReport> {
    let nmax = oracle.len() - 1;
    let computed = cohomology_presentations(g, m, nmax)?;
    let mut r = VerificationReport::new();
    for (n, (c, o)) in computed.iter().zip(oracle).enumerate() {
        r.flag(&format!("H^{n} = {o}"), c == o, (c != o).then(|| format!("computed {c}")));
    }
    r.extend(hochschild_complex(g, m, nmax)?.verify_square_zero());
    r.extend(h0_invariants_check(g, m)?);
    Ok(r)
}

fn modules_for(g: &GroupSchemeData) -> Vec<(&'static str, ComoduleData)> {
    vec![("trivial", ComoduleData::trivial(g.hopf(), 1)), ("regular", regular_representation(g.hopf(), Side::Left))]
}

fn oracle_tasks() -> Vec<(String, Task)> {
    const NMAX: usize = 4;
    let mut tasks: Vec<(String, Task)> = Vec::new();
    for (name, n) in [("constant-C2", 2usize), ("constant-C3", 3)] {
        for ring in [RingSpec::Integers, RingSpec::PrimeField(n as u64), RingSpec::IntegersMod(n as u64)] {
            for kind in ["trivial", "regular"] {
                tasks.push((
                    format!("{name}@{ring} {kind} vs periodic resolution"),
                    Box::new(move || {
                        let g = builtin_group(name, ring)?;
                        let m = modules_for(&g).into_iter().find(|(k, _)| *k == kind).expect("known kind").1;
                        compare_with_oracle(&g, &m, &cyclic_oracle(&m, 1, n, NMAX)?)
                    }),
                ));
            }
        }
    }
    tasks.push((
        "constant-C2@Z sign vs periodic resolution".into(),
        Box::new(|| {
            let z = RingSpec::Integers;
            let g = builtin_group("constant-C2", z)?;
            let m = comodule_from_representation(&g, &[Matrix::from_i64(z, &[vec![1]]), Matrix::from_i64(z, &[vec![-1]])])?;
            compare_with_oracle(&g, &m, &cyclic_oracle(&m, 1, 2, NMAX)?)
        }),
    ));
    for (name, p) in [("alpha2", 2u64), ("alpha3", 3)] {
        for kind in ["trivial", "regular"] {
            tasks.push((
                format!("{name}@F{p} {kind} vs truncated polynomial resolution"),
                Box::new(move || {
                    let g = builtin_group(name, RingSpec::PrimeField(p))?;
                    let m = modules_for(&g).into_iter().find(|(k, _)| *k == kind).expect("known kind").1;
                    compare_with_oracle(&g, &m, &truncated_polynomial_oracle(&m, 1, p as usize, NMAX)?)
                }),
            ));
        }
    }
    // diagonalizable: the dual algebra is a product of copies of the base
    for name in ["mu2", "mu3"] {
        for kind in ["trivial", "regular"] {
            tasks.push((
                format!("{name}@Z {kind} vanishes in positive degrees"),
                Box::new(move || {
                    let z = RingSpec::Integers;
                    let g = builtin_group(name, z)?;
                    let m = modules_for(&g).into_iter().find(|(k, _)| *k == kind).expect("known kind").1;
                    let mut oracle = vec![ModulePresentation::zero(z); NMAX + 1];
                    oracle[0] = ModulePresentation::free(z, invariants(&m).cols());
                    compare_with_oracle(&g, &m, &oracle)
                }),
            ));
        }
    }
    tasks
}

fn torsion_tasks() -> Vec<(String, Task)> {
    builtin_names(RingSpec::Integers)
        .into_iter()
        .map(|name| {
            let label = format!("{name}@Z");
            let task: Task = Box::new(move || {
                let g = builtin_group(&name, RingSpec::Integers)?;
                let cert = bounded_torsion_certificate(&g, &default_torsion_family(&g)?, 4)?;
                let mut r = VerificationReport::new();
                for e in &cert.evidence {
                    let all = e.annihilated.iter().all(|&a| a);
                    r.flag(&format!("{} annihilates H^1..H^4 of {}", cert.n, e.module), all, None);
                }
                Ok(r)
            });
            (label, task)
        })
        .collect()
}

fn frobenius_tasks() -> Vec<(String, Task)> {
    let mut tasks: Vec<(String, Task)> = builtins(&RINGS)
        .into_iter()
        .map(|(name, ring)| {
            let label = format!("{name}@{ring}");
            let task: Task = Box::new(move || {
                let h = builtin_group(&name, ring)?.hopf().clone();
                let mut r = frobenius_isomorphism(&h)?.report.prefixed("frobenius");
                r.extend(trace_map(&h)?.report.prefixed("trace"));
                Ok(r)
            });
            (label, task)
        })
        .collect();
    for (name, ring) in [("group-algebra-C2", RingSpec::Integers), ("group-algebra-C3", RingSpec::Integers), ("group-algebra-C3", RingSpec::PrimeField(3))] {
        tasks.push((
            format!("{name}@{ring} dual Hopf module"),
            Box::new(move || {
                let h = builtin_group(name, ring)?.hopf().clone();
                let hm = dual_hopf_module(&h);
                let s = hopf_module_structure(&hm)?;
                let mut r = VerificationReport::new();
                r.compare("rho theta = id", &s.rho.mul(&s.theta), &Matrix::identity(ring, hm.rank()));
                r.compare("theta rho = id", &s.theta.mul(&s.rho), &Matrix::identity(ring, s.theta.rows()));
                Ok(r)
            }),
        ));
    }
    tasks
}
