//! The cohomology ring of alpha2 over F2: a polynomial ring on one class
//! of degree one.

use hopfcoh::cohomology::{algebra_cohomology_ring, graded_commutativity_check};
use hopfcoh::linalg::RingSpec;
use hopfcoh::rep::trivial_galgebra;
use hopfcoh::schemes::builtin_group;

fn main() -> hopfcoh::Result<()> {
    let g = builtin_group("alpha2", RingSpec::PrimeField(2))?;
    let ring = algebra_cohomology_ring(&g, &trivial_galgebra(g.hopf()), 4)?;
    let degrees: Vec<usize> = ring.generators.iter().map(|c| c.degree).collect();
    println!("generator degrees {degrees:?}, relations {}", ring.relations.len());
    println!("route {:?}, checks pass: {}", ring.route, ring.report.passed());

    let x = ring.generators.iter().find(|c| c.degree == 1).expect("a degree-one class");
    let mut power = x.clone();
    for i in 2..=4 {
        power = ring.multiply(&power, x)?;
        println!("x^{i} nonzero: {}", !power.is_zero());
    }
    println!("graded commutative: {}", graded_commutativity_check(ring.cohomology())?.passed());
    Ok(())
}
