use super::*;
use crate::hopf::dual_hopf;
use crate::linalg::span_basis;
use crate::rep::{galgebra_from_action, trivial_galgebra, GAlgebraData};
use crate::schemes::builtin_group;

fn ints(m: &Matrix) -> Vec<Vec<String>> {
    m.to_string_rows()
}

fn same_span(a: &Matrix, b: &Matrix) -> bool {
    span_basis(a) == span_basis(b)
}

#[test]
fn integrals_of_group_algebras() {
    let g = builtin_group("group-algebra-C2", RingSpec::Integers).unwrap();
    assert_eq!(ints(&left_integrals(g.hopf().algebra()).unwrap()), vec![vec!["1"], vec!["1"]]);
    let g = builtin_group("group-algebra-C3", RingSpec::Rationals).unwrap();
    let n = left_integrals(g.hopf().algebra()).unwrap();
    assert_eq!(n.cols(), 1);
    assert!(n.column(0).iter().all(|x| *x == n.column(0)[0]));
}

#[test]
fn integral_of_function_algebra_is_the_identity_idempotent() {
    let g = builtin_group("constant-C2", RingSpec::Integers).unwrap();
    let n = left_integrals(g.hopf().algebra()).unwrap();
    let eps = g.hopf().counit();
    assert_eq!(n.cols(), 1);
    // the idempotent at the identity: its only nonzero coordinate is where ε is 1
    let idx: Vec<usize> = (0..2).filter(|&i| *n.get(i, 0) != 0u32).collect();
    assert_eq!(idx.len(), 1);
    assert_eq!(*eps.get(0, idx[0]), 1u32);
}

#[test]
fn dual_coinvariants_have_rank_one() {
    for (name, ring) in [("constant-C2", RingSpec::Integers), ("group-algebra-C2", RingSpec::PrimeField(2)), ("mu2", RingSpec::Rationals), ("alpha4", RingSpec::PrimeField(2))] {
        let g = builtin_group(name, ring).unwrap();
        assert_eq!(dual_coinvariants(g.hopf()).unwrap().cols(), 1, "{name}");
    }
}

#[test]
fn dual_integrals_are_the_dual_coinvariants() {
    for ring in [RingSpec::Integers, RingSpec::PrimeField(2), RingSpec::PrimeField(3)] {
        for name in crate::schemes::builtin_names(ring) {
            let g = builtin_group(&name, ring).unwrap();
            let li = left_integrals(dual_hopf(g.hopf()).algebra()).unwrap();
            assert_eq!(li.cols(), 1, "{name}");
            assert!(same_span(&li, &dual_coinvariants(g.hopf()).unwrap()), "{name} over {ring}");
        }
    }
}

#[test]
fn products_with_integrals_are_integrals() {
    for name in ["group-algebra-C3", "constant-C3", "mu3"] {
        let g = builtin_group(name, RingSpec::Integers).unwrap();
        let a = g.hopf().algebra();
        let n = left_integrals(a).unwrap();
        for x in 0..a.rank() {
            let nx = a.product(&n, &crate::hopf::basis_vector(a.ring, a.rank(), x));
            assert!(same_span(&n.hstack(&nx), &n), "{name}");
        }
    }
}

#[test]
fn frobenius_structures() {
    for (name, ring) in [("group-algebra-C2", RingSpec::PrimeField(3)), ("constant-C3", RingSpec::Integers), ("trivial", RingSpec::Integers), ("alpha2", RingSpec::PrimeField(2)), ("mu2", RingSpec::Integers)] {
        let g = builtin_group(name, ring).unwrap();
        let f = frobenius_isomorphism(g.hopf()).unwrap();
        assert!(f.report.passed(), "{name}");
        if name == "trivial" {
            assert_eq!(f.norm, vec![Scalar::from(1u32)]);
        }
    }
}

#[test]
fn traces() {
    let g = builtin_group("constant-C2", RingSpec::Integers).unwrap();
    let t = trace_map(g.hopf()).unwrap();
    assert_eq!(t.trace.mul(g.hopf().unit()).get(0, 0), &Scalar::from(2u32));
    let g = builtin_group("constant-C3", RingSpec::Rationals).unwrap();
    assert!(trace_map(g.hopf()).unwrap().trace.row(0).iter().all(|x| *x == 1u32));
    let g = builtin_group("mu2", RingSpec::Integers).unwrap();
    assert_eq!(ints(&trace_map(g.hopf()).unwrap().trace), vec![vec!["2", "0"]]);
}

#[test]
fn torsion_certificates() {
    for (name, n) in [("constant-C2", 2), ("klein", 4), ("trivial", 1), ("mu2", 2)] {
        let g = builtin_group(name, RingSpec::Integers).unwrap();
        let fam = default_torsion_family(&g).unwrap();
        let c = bounded_torsion_certificate(&g, &fam, 3).unwrap();
        assert_eq!(c.n, Integer::from(n));
        assert_eq!(c.evidence.len(), 3);
        if name == "trivial" {
            assert!(c.evidence.iter().all(|e| e.groups.iter().all(|p| p.is_zero())));
        }
    }
    let g = builtin_group("constant-C2", RingSpec::Rationals).unwrap();
    assert!(bounded_torsion_certificate(&g, &[], 2).is_err());
}

fn swap_module(ring: RingSpec) -> ComoduleData {
    let g = builtin_group("constant-C2", ring).unwrap();
    let swap = Matrix::from_i64(ring, &[vec![0, 1], vec![1, 0]]);
    crate::rep::comodule_from_representation(&g, &[Matrix::identity(ring, 2), swap]).unwrap()
}

#[test]
fn symmetric_group_two_over_f2_needs_degree_two() {
    let r = RingSpec::PrimeField(2);
    let m = swap_module(r);
    let phi = Matrix::from_i64(r, &[vec![1, 1]]);
    let rep = power_reductivity_witness(&m, &phi, 4).unwrap();
    assert_eq!(rep.witness, Some(2));
    assert!(!rep.degrees[0].surjective);
    // x^2 + xy + y^2 is invariant and maps to z^2
    let sp = symmetric_power(&m, 2).unwrap();
    assert_eq!(sp.monomials, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
    let inv = invariants(&sp.comodule);
    let q = Matrix::from_i64(r, &[vec![1], vec![1], vec![1]]);
    assert!(same_span(&inv.hstack(&q), &inv));
}

#[test]
fn symmetric_group_two_over_rationals_and_identity() {
    let q = RingSpec::Rationals;
    let rep = power_reductivity_witness(&swap_module(q), &Matrix::from_i64(q, &[vec![1, 1]]), 3).unwrap();
    assert_eq!(rep.witness, Some(1));
    let g = builtin_group("constant-C2", q).unwrap();
    let l = ComoduleData::trivial(g.hopf(), 1);
    assert_eq!(power_reductivity_witness(&l, &Matrix::identity(q, 1), 2).unwrap().witness, Some(1));
}

/// Truncated polynomial algebra on the given monomials.
fn truncated(ring: RingSpec, monos: &[Vec<usize>]) -> (Matrix, Matrix) {
    let k = monos.len();
    let mut mul = Matrix::zeros(ring, k, k * k);
    for (i, a) in monos.iter().enumerate() {
        for (j, b) in monos.iter().enumerate() {
            let s: Vec<usize> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            if let Some(t) = monos.iter().position(|m| *m == s) {
                mul.set(t, i * k + j, ring.one());
            }
        }
    }
    let unit = Matrix::from_fn(ring, k, 1, |i, _| Scalar::from((i == 0) as u32));
    (mul, unit)
}

#[test]
fn power_surjectivity() {
    let r = RingSpec::PrimeField(2);
    let g = builtin_group("constant-C2", r).unwrap();
    let monos = vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0], vec![1, 1], vec![0, 2]];
    let (mul, unit) = truncated(r, &monos);
    let swap = Matrix::from_fn(r, 6, 6, |i, j| {
        let (a, b) = (&monos[i], &monos[j]);
        Scalar::from((a[0] == b[1] && a[1] == b[0]) as u32)
    });
    let a = galgebra_from_action(&g, mul, unit, &[Matrix::identity(r, 6), swap]).unwrap();
    let zs = vec![vec![0], vec![1], vec![2]];
    let (bmul, bunit) = truncated(r, &zs);
    let b = GAlgebraData::new(ComoduleData::trivial(g.hopf(), 3), bmul, bunit).unwrap();
    // x, y ↦ z
    let f = Matrix::from_fn(r, 3, 6, |i, j| Scalar::from((zs[i][0] == monos[j][0] + monos[j][1]) as u32));
    let rep = power_surjectivity_check(&a, &b, &f, 4).unwrap();
    assert!(rep.all_found);
    let exps: Vec<Option<usize>> = rep.entries.iter().map(|e| e.exponent).collect();
    assert!(exps.contains(&Some(2)), "{exps:?}");
    // identity
    let id = power_surjectivity_check(&a, &a, &Matrix::identity(r, 6), 2).unwrap();
    assert!(id.entries.iter().all(|e| e.exponent == Some(1)));
    // k → k × k is never power surjective on the idempotents
    let k = trivial_galgebra(g.hopf());
    let (pmul, _) = truncated(r, &[vec![0]]);
    let _ = pmul;
    let kk = GAlgebraData::new(
        ComoduleData::trivial(g.hopf(), 2),
        Matrix::from_i64(r, &[vec![1, 0, 0, 0], vec![0, 0, 0, 1]]),
        Matrix::from_i64(r, &[vec![1], vec![1]]),
    )
    .unwrap();
    let diag = Matrix::from_i64(r, &[vec![1], vec![1]]);
    let rep = power_surjectivity_check(&k, &kk, &diag, 5).unwrap();
    assert!(!rep.all_found);
}
