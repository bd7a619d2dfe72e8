use hopfcoh::cohomology::oracle::{cyclic_oracle, truncated_polynomial_oracle};
use hopfcoh::cohomology::{algebra_cohomology_ring, cohomology_presentations};
use hopfcoh::linalg::{Matrix, ModulePresentation, RingSpec};
use hopfcoh::rep::{comodule_from_representation, regular_representation, trivial_galgebra, ComoduleData, Side};
use hopfcoh::schemes::builtin_group;
use malachite::Integer;

fn torsion(ring: RingSpec, orders: &[i64]) -> ModulePresentation {
    ModulePresentation::new(ring, 0, orders.iter().map(|&n| Integer::from(n)).collect()).unwrap()
}

#[test]
fn cyclic_two_over_integers_is_periodic() {
    let z = RingSpec::Integers;
    let g = builtin_group("constant-C2", z).unwrap();
    let m = ComoduleData::trivial(g.hopf(), 1);
    let computed = cohomology_presentations(&g, &m, 4).unwrap();
    let expected = vec![ModulePresentation::free(z, 1), ModulePresentation::zero(z), torsion(z, &[2]), ModulePresentation::zero(z), torsion(z, &[2])];
    assert_eq!(computed, expected);
    assert_eq!(cyclic_oracle(&m, 1, 2, 4).unwrap(), expected);
}

#[test]
fn first_cohomology_is_hom_from_the_group() {
    for p in [2u64, 3] {
        let g = builtin_group(&format!("constant-C{p}"), RingSpec::Integers).unwrap();
        let gp = g.base_change(RingSpec::IntegersMod(p)).unwrap();
        let m = ComoduleData::trivial(gp.hopf(), 1);
        let h = cohomology_presentations(&gp, &m, 1).unwrap();
        assert_eq!(h[1], ModulePresentation::free(RingSpec::IntegersMod(p), 1), "p = {p}");
        assert_eq!(h[1].as_abelian_group().unwrap(), torsion(RingSpec::Integers, &[p as i64]));
    }
}

#[test]
fn cyclic_three_with_regular_and_trivial_coefficients() {
    for ring in [RingSpec::Integers, RingSpec::PrimeField(3), RingSpec::IntegersMod(9)] {
        let g = builtin_group("constant-C3", ring).unwrap();
        for m in [ComoduleData::trivial(g.hopf(), 1), regular_representation(g.hopf(), Side::Left)] {
            assert_eq!(cohomology_presentations(&g, &m, 4).unwrap(), cyclic_oracle(&m, 1, 3, 4).unwrap(), "{ring}");
        }
    }
}

#[test]
fn sign_representation_of_cyclic_two() {
    let z = RingSpec::Integers;
    let g = builtin_group("constant-C2", z).unwrap();
    let sign = comodule_from_representation(&g, &[Matrix::from_i64(z, &[vec![1]]), Matrix::from_i64(z, &[vec![-1]])]).unwrap();
    let computed = cohomology_presentations(&g, &sign, 4).unwrap();
    assert_eq!(computed, cyclic_oracle(&sign, 1, 2, 4).unwrap());
    assert_eq!(computed[1], torsion(z, &[2]));
}

#[test]
fn alpha_p_ext_is_one_dimensional_in_each_degree() {
    for p in [2u64, 3] {
        let f = RingSpec::PrimeField(p);
        let g = builtin_group(&format!("alpha{p}"), f).unwrap();
        let m = ComoduleData::trivial(g.hopf(), 1);
        let computed = cohomology_presentations(&g, &m, 4).unwrap();
        assert!(computed.iter().all(|h| *h == ModulePresentation::free(f, 1)), "p = {p}");
        assert_eq!(computed, truncated_polynomial_oracle(&m, 1, p as usize, 4).unwrap());
    }
}

#[test]
fn alpha_two_ring_is_polynomial_on_a_degree_one_class() {
    let g = builtin_group("alpha2", RingSpec::PrimeField(2)).unwrap();
    let ring = algebra_cohomology_ring(&g, &trivial_galgebra(g.hopf()), 4).unwrap();
    assert!(ring.report.passed(), "{}", ring.report);
    let degrees: Vec<usize> = ring.generators.iter().map(|c| c.degree).collect();
    assert_eq!(degrees, vec![0, 1]);
    assert!(ring.relations.is_empty());
    let x = &ring.generators[1];
    let mut power = x.clone();
    for _ in 2..=4 {
        power = ring.multiply(&power, x).unwrap();
        assert!(!power.is_zero());
    }
}
