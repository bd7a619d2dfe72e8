//! The Bockstein sequence 0 → Z → Z → Z/2 → 0 for C2 and its connecting
//! maps.

use hopfcoh::cohomology::{long_exact_sequence, ShortExactSequence};
use hopfcoh::linalg::{Matrix, RingSpec};
use hopfcoh::rep::ComoduleData;
use hopfcoh::schemes::builtin_group;

fn main() -> hopfcoh::Result<()> {
    let z = RingSpec::Integers;
    let f2 = RingSpec::PrimeField(2);
    let g = builtin_group("constant-C2", z)?;
    let g2 = g.base_change(f2)?;
    let ses = ShortExactSequence {
        sub: ComoduleData::trivial(g.hopf(), 1),
        middle: ComoduleData::trivial(g.hopf(), 1),
        quotient: ComoduleData::trivial(g2.hopf(), 1),
        inclusion: Matrix::from_i64(z, &[vec![2]]),
        projection: Matrix::from_i64(f2, &[vec![1]]),
    };
    let les = long_exact_sequence(&g, &ses, 3)?;
    for (n, [a, b, c]) in les.groups.iter().enumerate() {
        println!("H^{n}:  {a}  →  {b}  →  {c}");
    }
    for (n, d) in les.connecting.iter().enumerate() {
        println!("δ^{n} has shape {:?}", d.shape());
    }
    println!("exactness checks pass: {}", les.report.passed());
    Ok(())
}
