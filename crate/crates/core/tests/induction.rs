use hopfcoh::cohomology::acyclicity_check_induced;
use hopfcoh::linalg::{Matrix, RingSpec};
use hopfcoh::rep::{adjunction_check, induce, invariants, regular_representation, restrict, verify_comodule, ComoduleData, Side};
use hopfcoh::schemes::{builtin_group, constant_group_scheme, subgroup_from_ideal, verify_subgroup, GroupTable, SubgroupData};

/// `{e, s}` inside S3 for an involution `s`.
fn transposition_subgroup(ring: RingSpec) -> SubgroupData {
    let table = GroupTable::symmetric3();
    let e = table.identity();
    let s = (0..table.order()).find(|&a| a != e && table.mul(a, a) == e).unwrap();
    let g = constant_group_scheme(&table, ring).unwrap();
    let outside: Vec<usize> = (0..table.order()).filter(|&a| a != e && a != s).collect();
    let mut ideal = Matrix::zeros(ring, table.order(), outside.len());
    for (c, &a) in outside.iter().enumerate() {
        ideal.set(a, c, ring.one());
    }
    subgroup_from_ideal(&g, &ideal).unwrap()
}

#[test]
fn induction_from_a_non_normal_subgroup() {
    for ring in [RingSpec::Integers, RingSpec::Rationals, RingSpec::PrimeField(2)] {
        let sub = transposition_subgroup(ring);
        assert!(verify_subgroup(&sub).passed());
        assert_eq!(sub.sub.rank(), 2);
        let ind = induce(&ComoduleData::trivial(sub.sub.hopf(), 1), &sub).unwrap();
        assert_eq!(ind.rank(), 3);
        assert!(verify_comodule(&ind).passed());
        assert_eq!(invariants(&ind).cols(), 1);
        let reg = regular_representation(sub.ambient.hopf(), Side::Right);
        assert!(adjunction_check(&reg, &ComoduleData::trivial(sub.sub.hopf(), 1), &sub).unwrap().isomorphic);
    }
}

#[test]
fn restriction_of_the_regular_module_is_free() {
    let sub = transposition_subgroup(RingSpec::Integers);
    let res = restrict(&regular_representation(sub.ambient.hopf(), Side::Right), &sub).unwrap();
    assert_eq!(res.rank(), 6);
    assert_eq!(invariants(&res).cols(), 3);
}

#[test]
fn inducing_the_regular_module_of_the_whole_group() {
    let g = builtin_group("constant-C3", RingSpec::Integers).unwrap();
    let ideal = Matrix::zeros(RingSpec::Integers, 3, 0);
    let sub = subgroup_from_ideal(&g, &ideal).unwrap();
    let ind = induce(&regular_representation(sub.sub.hopf(), Side::Right), &sub).unwrap();
    assert_eq!(ind.rank(), 3);
    assert_eq!(invariants(&ind).cols(), 1);
}

#[test]
fn induced_modules_are_acyclic() {
    for (name, ring) in [("constant-C2", RingSpec::Integers), ("klein", RingSpec::Integers), ("alpha2", RingSpec::PrimeField(2))] {
        let g = builtin_group(name, ring).unwrap();
        let r = acyclicity_check_induced(&g, &ComoduleData::trivial(g.hopf(), 2), 3).unwrap();
        assert!(r.passed(), "{name}: {r}");
    }
}
