use hopfcoh::cohomology::{h0_invariants_check, hochschild_complex};
use hopfcoh::hopf::{convolution, dual_hopf, hopf_from_json, hopf_to_json, verify_hopf, HopfAlgebraData};
use hopfcoh::linalg::{Matrix, RingSpec};
use hopfcoh::rep::{direct_sum, regular_representation, tensor_comodule, ComoduleData, Side};
use hopfcoh::schemes::{builtin_group, GroupSchemeData};
use proptest::prelude::*;

const RINGS: [RingSpec; 5] = [RingSpec::Integers, RingSpec::Rationals, RingSpec::PrimeField(2), RingSpec::PrimeField(3), RingSpec::IntegersMod(4)];
const SMALL: [&str; 6] = ["trivial", "constant-C2", "constant-C3", "group-algebra-C2", "mu2", "mu3"];

fn group(name: &str, ring: RingSpec) -> GroupSchemeData {
    builtin_group(name, ring).unwrap()
}

fn any_builtin() -> impl Strategy<Value = HopfAlgebraData> {
    let names = ["trivial", "constant-C2", "constant-C3", "klein", "constant-S3", "group-algebra-C2", "group-algebra-C3", "mu2", "mu3"];
    (0..names.len(), 0..RINGS.len()).prop_map(move |(i, r)| group(names[i], RINGS[r]).hopf().clone())
}

fn matrix_for(h: &HopfAlgebraData, entries: &[i64]) -> Matrix {
    let d = h.rank();
    Matrix::from_fn(h.ring(), d, d, |i, j| h.ring().from_i64(entries[(i * d + j) % entries.len()]))
}

/// A comodule built from trivial and regular pieces by sums and tensors.
fn small_module(g: &GroupSchemeData, shape: u8) -> ComoduleData {
    let t = ComoduleData::trivial(g.hopf(), 1);
    let r = regular_representation(g.hopf(), Side::Left);
    match shape % 4 {
        0 => t,
        1 => r,
        2 => direct_sum(&t, &r).unwrap(),
        _ => tensor_comodule(&r, &ComoduleData::trivial(g.hopf(), 2)).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn convolution_is_associative(h in any_builtin(), a in prop::collection::vec(-4i64..=4, 36), b in prop::collection::vec(-4i64..=4, 36), c in prop::collection::vec(-4i64..=4, 36)) {
        let (co, al) = (h.coalgebra(), h.algebra());
        let (f, g, e) = (matrix_for(&h, &a), matrix_for(&h, &b), matrix_for(&h, &c));
        let lhs = convolution(co, al, &convolution(co, al, &f, &g).unwrap(), &e).unwrap();
        let rhs = convolution(co, al, &f, &convolution(co, al, &g, &e).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn unit_counit_is_the_convolution_unit(h in any_builtin(), a in prop::collection::vec(-4i64..=4, 36)) {
        let f = matrix_for(&h, &a);
        prop_assert_eq!(convolution(h.coalgebra(), h.algebra(), &f, &h.unit_counit()).unwrap(), f);
    }

    #[test]
    fn dual_is_an_involution(h in any_builtin()) {
        let dd = dual_hopf(&dual_hopf(&h));
        prop_assert!(verify_hopf(&dual_hopf(&h)).passed());
        prop_assert_eq!(dd.mul(), h.mul());
        prop_assert_eq!(dd.unit(), h.unit());
        prop_assert_eq!(dd.comul(), h.comul());
        prop_assert_eq!(dd.counit(), h.counit());
        prop_assert_eq!(dd.antipode(), h.antipode());
    }

    #[test]
    fn json_round_trip(h in any_builtin()) {
        prop_assert_eq!(hopf_from_json(&hopf_to_json(&h)).unwrap(), h);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn coboundaries_square_to_zero(name in 0..SMALL.len(), ring in 0..RINGS.len(), shape in 0u8..4) {
        let g = group(SMALL[name], RINGS[ring]);
        let m = small_module(&g, shape);
        let report = hochschild_complex(&g, &m, 3).unwrap().verify_square_zero();
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn degree_zero_is_the_invariants(name in 0..SMALL.len(), ring in 0..RINGS.len(), shape in 0u8..4) {
        let g = group(SMALL[name], RINGS[ring]);
        let m = small_module(&g, shape);
        let report = h0_invariants_check(&g, &m).unwrap();
        prop_assert!(report.passed(), "{}", report);
    }
}

#[test]
fn degree_zero_matches_invariants_on_a_fixed_family() {
    let mut pairs = 0;
    for name in SMALL {
        for ring in [RingSpec::Integers, RingSpec::PrimeField(2)] {
            let g = group(name, ring);
            for shape in 0..4 {
                let report = h0_invariants_check(&g, &small_module(&g, shape)).unwrap();
                assert!(report.passed(), "{name}@{ring} shape {shape}: {report}");
                pairs += 1;
            }
        }
    }
    assert!(pairs >= 10);
}
