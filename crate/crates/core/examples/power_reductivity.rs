//! The symmetric group on two letters acting on k^2 by swapping: over F2
//! the first invariant hitting z^d lives in degree two, over Q in degree
//! one.

use hopfcoh::integrals::power_reductivity_witness;
use hopfcoh::linalg::{Matrix, RingSpec};
use hopfcoh::rep::comodule_from_representation;
use hopfcoh::schemes::builtin_group;

fn main() -> hopfcoh::Result<()> {
    for ring in [RingSpec::PrimeField(2), RingSpec::Rationals] {
        let g = builtin_group("constant-C2", ring)?;
        let swap = Matrix::from_i64(ring, &[vec![0, 1], vec![1, 0]]);
        let m = comodule_from_representation(&g, &[Matrix::identity(ring, 2), swap])?;
        // x, y ↦ z
        let phi = Matrix::from_i64(ring, &[vec![1, 1]]);
        let rep = power_reductivity_witness(&m, &phi, 3)?;
        println!("{ring}: witness degree {:?}", rep.witness);
        for d in &rep.degrees {
            println!("  d = {}: {} invariant(s), surjective {}", d.degree, d.invariant_rank, d.surjective);
        }
        if let Some(inv) = &rep.witness_invariant {
            println!("  invariant {inv:?}");
        }
    }
    Ok(())
}
