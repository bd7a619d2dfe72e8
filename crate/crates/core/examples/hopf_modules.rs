//! The dual H^* as a Hopf module over H, and the isomorphism with
//! coinvariants tensored with H.

use hopfcoh::linalg::{Matrix, RingSpec};
use hopfcoh::rep::{dual_hopf_module, hopf_module_structure, verify_hopf_module};
use hopfcoh::schemes::builtin_group;

fn main() -> hopfcoh::Result<()> {
    for (name, ring) in [("group-algebra-C2", RingSpec::Integers), ("group-algebra-C3", RingSpec::PrimeField(3))] {
        let h = builtin_group(name, ring)?.hopf().clone();
        let hm = dual_hopf_module(&h);
        println!("{name}@{ring}: Hopf module axioms pass: {}", verify_hopf_module(&hm).passed());
        let s = hopf_module_structure(&hm)?;
        println!("  coinvariants of rank {}", s.coinvariants.cols());
        println!("  rho theta = id: {}", s.rho.mul(&s.theta) == Matrix::identity(ring, hm.rank()));
        println!("  theta rho = id: {}", s.theta.mul(&s.rho) == Matrix::identity(ring, s.theta.rows()));
    }
    Ok(())
}
