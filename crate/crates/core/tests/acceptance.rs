//! Acceptance gate: one line per criterion with its timing and budget.
//! Exits nonzero if any criterion fails or overruns its budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hopfcoh::cli::{run_suite, SuiteName, DEFAULT_SEED};
use hopfcoh::cohomology::oracle::{cyclic_oracle, truncated_polynomial_oracle};
use hopfcoh::cohomology::{acyclicity_check_induced, algebra_cohomology_ring, cohomology_presentations, graded_commutativity_check};
use hopfcoh::integrals::{bounded_torsion_certificate, default_torsion_family, frobenius_isomorphism, power_reductivity_witness, symmetric_power, trace_map};
use hopfcoh::linalg::{rank, Matrix, ModulePresentation, RingSpec};
use hopfcoh::rep::{comodule_from_representation, dual_hopf_module, hopf_module_structure, invariants, regular_representation, trivial_galgebra, ComoduleData, Side};
use hopfcoh::schemes::{alpha_pr, builtin_group, builtin_names, is_separable, mu_n, GroupSchemeData};
use malachite::Integer;

type Outcome = Result<String, String>;

const RINGS: [RingSpec; 4] = [RingSpec::Integers, RingSpec::Rationals, RingSpec::PrimeField(2), RingSpec::PrimeField(3)];

fn check(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn group(name: &str, ring: RingSpec) -> Result<GroupSchemeData, String> {
    builtin_group(name, ring).map_err(|e| e.to_string())
}

fn cyclic_of_order(ring: RingSpec, orders: &[u32]) -> ModulePresentation {
    ModulePresentation::new(ring, 0, orders.iter().map(|&n| Integer::from(n)).collect()).expect("valid presentation")
}

fn all_builtins() -> Vec<(String, RingSpec)> {
    RINGS.iter().flat_map(|&r| builtin_names(r).into_iter().map(move |n| (n, r))).collect()
}

fn first_cohomology_of_cyclic() -> Outcome {
    let mut seen = Vec::new();
    for p in [2u32, 3] {
        let zp = RingSpec::IntegersMod(p as u64);
        let g = group(&format!("constant-C{p}"), RingSpec::Integers)?.base_change(zp).map_err(|e| e.to_string())?;
        let h = cohomology_presentations(&g, &ComoduleData::trivial(g.hopf(), 1), 1).map_err(|e| e.to_string())?;
        // Hom(C_p, Z/p) is cyclic of order p
        let as_group = h[1].as_abelian_group().map_err(|e| e.to_string())?;
        check(as_group == cyclic_of_order(RingSpec::Integers, &[p]), || format!("H^1(C{p}, Z/{p}) = {as_group}"))?;
        seen.push(format!("p={p}: {as_group}"));
    }
    Ok(seen.join(", "))
}

fn cyclic_two_integral() -> Outcome {
    let z = RingSpec::Integers;
    let g = group("constant-C2", z)?;
    let m = ComoduleData::trivial(g.hopf(), 1);
    let computed = cohomology_presentations(&g, &m, 4).map_err(|e| e.to_string())?;
    let expected = vec![
        ModulePresentation::free(z, 1),
        ModulePresentation::zero(z),
        cyclic_of_order(z, &[2]),
        ModulePresentation::zero(z),
        cyclic_of_order(z, &[2]),
    ];
    let oracle = cyclic_oracle(&m, 1, 2, 4).map_err(|e| e.to_string())?;
    check(oracle == expected, || "oracle disagrees with the expected groups".into())?;
    check(computed == oracle, || format!("computed {computed:?}"))?;
    Ok(computed.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "))
}

fn induced_acyclicity() -> Outcome {
    let groups = [("constant-C2", RingSpec::Integers), ("constant-C3", RingSpec::Integers), ("klein", RingSpec::Integers), ("mu2", RingSpec::Integers), ("alpha2", RingSpec::PrimeField(2))];
    let mut pairs = 0;
    for (name, ring) in groups {
        let g = group(name, ring)?;
        for m in [ComoduleData::trivial(g.hopf(), 1), regular_representation(g.hopf(), Side::Left)] {
            let r = acyclicity_check_induced(&g, &m, 3).map_err(|e| e.to_string())?;
            check(r.passed(), || format!("{name}@{ring} with M of rank {}: {r}", m.rank()))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (G, M) pairs"))
}

fn bounded_torsion() -> Outcome {
    let names = builtin_names(RingSpec::Integers);
    for name in &names {
        let g = group(name, RingSpec::Integers)?;
        let family = default_torsion_family(&g).map_err(|e| e.to_string())?;
        check(family.len() == 3, || "family of three modules".into())?;
        let cert = bounded_torsion_certificate(&g, &family, 4).map_err(|e| format!("{name}: {e}"))?;
        check(cert.n == g.rank(), || format!("{name}: n = {}", cert.n))?;
        let all = cert.evidence.iter().all(|e| e.groups.len() == 4 && e.annihilated.iter().all(|&a| a));
        check(all, || format!("{name}: evidence incomplete"))?;
    }
    Ok(format!("{} groups, H^1..H^4", names.len()))
}

fn trace_identities() -> Outcome {
    let all = all_builtins();
    for (name, ring) in &all {
        let t = trace_map(group(name, *ring)?.hopf()).map_err(|e| e.to_string())?;
        check(t.report.passed(), || format!("{name}@{ring}: {}", t.report))?;
    }
    Ok(format!("{} Hopf algebras", all.len()))
}

fn hopf_module_theorem() -> Outcome {
    for (name, ring) in [("group-algebra-C2", RingSpec::Integers), ("group-algebra-C3", RingSpec::Integers), ("group-algebra-C3", RingSpec::PrimeField(3))] {
        let h = group(name, ring)?.hopf().clone();
        let hm = dual_hopf_module(&h);
        let s = hopf_module_structure(&hm).map_err(|e| e.to_string())?;
        check(s.rho.mul(&s.theta) == Matrix::identity(ring, hm.rank()), || format!("{name}@{ring}: rho theta"))?;
        check(s.theta.mul(&s.rho) == Matrix::identity(ring, s.theta.rows()), || format!("{name}@{ring}: theta rho"))?;
    }
    Ok("3 Hopf modules".into())
}

fn frobenius() -> Outcome {
    let all = all_builtins();
    for (name, ring) in &all {
        let f = frobenius_isomorphism(group(name, *ring)?.hopf()).map_err(|e| e.to_string())?;
        check(f.report.passed(), || format!("{name}@{ring}: {}", f.report))?;
    }
    Ok(format!("{} Hopf algebras over Z, Q, F2, F3", all.len()))
}

fn swap_module(ring: RingSpec) -> Result<ComoduleData, String> {
    let g = group("constant-C2", ring)?;
    let swap = Matrix::from_i64(ring, &[vec![0, 1], vec![1, 0]]);
    comodule_from_representation(&g, &[Matrix::identity(ring, 2), swap]).map_err(|e| e.to_string())
}

fn symmetric_group_two() -> Outcome {
    let f2 = RingSpec::PrimeField(2);
    let m = swap_module(f2)?;
    let phi = Matrix::from_i64(f2, &[vec![1, 1]]);
    let rep = power_reductivity_witness(&m, &phi, 4).map_err(|e| e.to_string())?;
    check(rep.witness == Some(2), || format!("F2 witness {:?}", rep.witness))?;
    check(!rep.degrees[0].surjective, || "degree one surjects over F2".into())?;
    // x^2 + xy + y^2 is invariant and maps to z^2
    let sp = symmetric_power(&m, 2).map_err(|e| e.to_string())?;
    check(sp.monomials == vec![vec![2, 0], vec![1, 1], vec![0, 2]], || format!("monomials {:?}", sp.monomials))?;
    let inv = invariants(&sp.comodule);
    let q = Matrix::from_i64(f2, &[vec![1], vec![1], vec![1]]);
    let (r0, r1) = (rank(&inv).map_err(|e| e.to_string())?, rank(&inv.hstack(&q)).map_err(|e| e.to_string())?);
    check(r0 == r1, || "x^2 + xy + y^2 is not invariant".into())?;
    let image = (0..3).fold(f2.zero(), |acc, i| f2.add(&acc, q.get(i, 0)));
    check(image == f2.one(), || "x^2 + xy + y^2 does not map to z^2".into())?;

    let qq = RingSpec::Rationals;
    let rep = power_reductivity_witness(&swap_module(qq)?, &Matrix::from_i64(qq, &[vec![1, 1]]), 3).map_err(|e| e.to_string())?;
    check(rep.witness == Some(1), || format!("Q witness {:?}", rep.witness))?;
    Ok("d = 2 over F2, d = 1 over Q".into())
}

fn cartier() -> Outcome {
    let q = RingSpec::Rationals;
    let mut separable: Vec<GroupSchemeData> = ["trivial", "constant-C2", "constant-C3", "klein", "constant-S3"].iter().map(|n| group(n, q)).collect::<Result<_, _>>()?;
    for n in 1..=4 {
        separable.push(mu_n(n, q).map_err(|e| e.to_string())?);
    }
    let mut inseparable = Vec::new();
    for (p, r) in [(2u64, 1u32), (2, 2), (3, 1)] {
        inseparable.push(alpha_pr(p, r, RingSpec::PrimeField(p)).map_err(|e| e.to_string())?);
    }
    for p in [2u64, 3] {
        inseparable.push(mu_n(p as usize, RingSpec::PrimeField(p)).map_err(|e| e.to_string())?);
    }
    for g in &separable {
        check(is_separable(g.hopf()).map_err(|e| e.to_string())?, || format!("{} over Q is not separable", g.name))?;
    }
    for g in &inseparable {
        check(!is_separable(g.hopf()).map_err(|e| e.to_string())?, || format!("{} is separable", g.name))?;
    }
    Ok(format!("{} separable, {} not", separable.len(), inseparable.len()))
}

fn alpha_two_ring() -> Outcome {
    let f2 = RingSpec::PrimeField(2);
    let g = group("alpha2", f2)?;
    let ring = algebra_cohomology_ring(&g, &trivial_galgebra(g.hopf()), 4).map_err(|e| e.to_string())?;
    check(ring.report.passed(), || ring.report.to_string())?;
    let oracle = truncated_polynomial_oracle(&ComoduleData::trivial(g.hopf(), 1), 1, 2, 4).map_err(|e| e.to_string())?;
    check(ring.groups == oracle, || format!("groups {:?}", ring.groups))?;
    let positive: Vec<_> = ring.generators.iter().filter(|c| c.degree > 0).collect();
    check(positive.len() == 1 && positive[0].degree == 1, || "expected one generator, in degree one".into())?;
    let x = positive[0];
    let mut power = x.clone();
    for i in 2..=4 {
        power = ring.multiply(&power, x).map_err(|e| e.to_string())?;
        check(!power.is_zero(), || format!("x^{i} = 0"))?;
    }
    let gc = graded_commutativity_check(ring.cohomology()).map_err(|e| e.to_string())?;
    check(gc.passed(), || gc.to_string())?;
    Ok(format!("x^1..x^4 nonzero, {} commutativity checks", gc.checks.len()))
}

fn property_suites() -> Outcome {
    let mut counts = Vec::new();
    for name in [SuiteName::Axioms, SuiteName::CohomologyOracles] {
        let r = run_suite(name, DEFAULT_SEED);
        check(r.passed(), || format!("{}: {}", name.as_str(), r.failures().map(|c| c.name.clone()).collect::<Vec<_>>().join("; ")))?;
        counts.push(format!("{} {}", name.as_str(), r.checks.len()));
        if name == SuiteName::CohomologyOracles {
            let h0 = r.checks.iter().filter(|c| c.name.contains("H^0") && c.name.contains("invariants")).count();
            check(h0 >= 10, || format!("only {h0} H^0 cross-checks"))?;
            // named "d(n+1) d(n) = 0"
            let sq = r.checks.iter().filter(|c| c.name.ends_with(" = 0") && c.name.rsplit(": ").next().is_some_and(|s| s.starts_with('d'))).count();
            check(sq > 0, || "no square-zero checks".into())?;
        }
        if name == SuiteName::Axioms {
            for needle in ["dual involution", "convolution associativity"] {
                check(r.checks.iter().any(|c| c.name.contains(needle)), || format!("no {needle} checks"))?;
            }
        }
    }
    Ok(counts.join(", "))
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 11] = [
        ("H^1(C_p, Z/p) = Z/p for p = 2, 3", 5, first_cohomology_of_cyclic),
        ("H^*(C2, Z) = (Z, 0, Z/2, 0, Z/2) against the periodic resolution", 30, cyclic_two_integral),
        ("induced modules are acyclic", 120, induced_acyclicity),
        ("rank(k[G]) annihilates H^1..H^4 for every built-in over Z", 180, bounded_torsion),
        ("trace identities for all built-ins", 5, trace_identities),
        ("Hopf module structure on the dual", 5, hopf_module_theorem),
        ("Frobenius structure over Z, Q, F2, F3", 10, frobenius),
        ("power reductivity for the symmetric group on two letters", 5, symmetric_group_two),
        ("separability of constant, multiplicative and additive group schemes", 5, cartier),
        ("cup-product ring of alpha2 over F2 through degree 4", 60, alpha_two_ring),
        ("property suites", 120, property_suites),
    ];
    let total = Instant::now();
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(*budget);
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over budget")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} [{:>2}] {name} ({:.2?} / {budget} s): {detail}", i + 1, elapsed);
    }
    println!("{} of {} criteria passed in {:.2?}", criteria.len() - failed, criteria.len(), total.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
