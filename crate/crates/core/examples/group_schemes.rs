//! Built-in finite group schemes, constructors and the separability test.

use hopfcoh::hopf::verify_hopf;
use hopfcoh::linalg::RingSpec;
use hopfcoh::schemes::{alpha_pr, builtin_group, builtin_names, is_separable, matrix_coefficients, mu_n, product};

fn main() -> hopfcoh::Result<()> {
    let z = RingSpec::Integers;
    for name in builtin_names(z) {
        let g = builtin_group(&name, z)?;
        println!("{:<18} rank {:>2}  axioms {}", g.name, g.rank(), verify_hopf(g.hopf()).passed());
    }

    let q = RingSpec::Rationals;
    let f2 = RingSpec::PrimeField(2);
    println!("mu3 over Q separable: {}", is_separable(mu_n(3, q)?.hopf())?);
    println!("mu2 over F2 separable: {}", is_separable(mu_n(2, f2)?.hopf())?);
    println!("alpha4 over F2 separable: {}", is_separable(alpha_pr(2, 2, f2)?.hopf())?);

    let g = product(&builtin_group("constant-C2", z)?, &mu_n(2, z)?)?;
    println!("C2 x mu2 has rank {} and passes: {}", g.rank(), verify_hopf(g.hopf()).passed());

    let mc = matrix_coefficients(&builtin_group("constant-C3", z)?);
    println!("matrix coefficients recover the basis: {}", mc.counit_identity_holds(builtin_group("constant-C3", z)?.hopf()));

    let over_f3 = builtin_group("constant-C3", z)?.base_change(RingSpec::PrimeField(3))?;
    println!("C3 over F3 separable: {}", is_separable(over_f3.hopf())?);
    Ok(())
}
