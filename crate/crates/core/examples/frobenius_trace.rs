//! Integrals, the Frobenius isomorphism and the regular trace for a few
//! built-in group schemes.

use hopfcoh::integrals::{frobenius_isomorphism, left_integrals, trace_map};
use hopfcoh::linalg::RingSpec;
use hopfcoh::schemes::builtin_group;

fn main() -> hopfcoh::Result<()> {
    for (name, ring) in [("group-algebra-C3", RingSpec::Integers), ("mu2", RingSpec::Integers), ("alpha2", RingSpec::PrimeField(2))] {
        let h = builtin_group(name, ring)?.hopf().clone();
        let ints = left_integrals(h.algebra())?;
        let frob = frobenius_isomorphism(&h)?;
        let norm: Vec<String> = frob.norm.iter().map(|x| x.to_string()).collect();
        let tr = trace_map(&h)?;
        println!("{name}@{ring}: {} left integral(s), norm [{}]", ints.cols(), norm.join(", "));
        println!("  frobenius checks pass: {}", frob.report.passed());
        println!("  trace {:?}, identities pass: {}", tr.trace.row(0).iter().map(|x| x.to_string()).collect::<Vec<_>>(), tr.report.passed());
    }
    Ok(())
}
