//! Assemble the group algebra of C2 over Z by hand, check its axioms and
//! look at its dual.

use hopfcoh::hopf::{antipode_properties_check, convolution, dual_hopf, hopf_from_json, hopf_to_json, verify_hopf, HopfAlgebraData};
use hopfcoh::linalg::{Matrix, RingSpec};

fn main() -> hopfcoh::Result<()> {
    let z = RingSpec::Integers;
    // basis 1, g with g^2 = 1, both group-like
    let mul = Matrix::from_i64(z, &[vec![1, 0, 0, 1], vec![0, 1, 1, 0]]);
    let unit = Matrix::from_i64(z, &[vec![1], vec![0]]);
    let comul = Matrix::from_i64(z, &[vec![1, 0], vec![0, 0], vec![0, 0], vec![0, 1]]);
    let counit = Matrix::from_i64(z, &[vec![1, 1]]);
    let antipode = Matrix::identity(z, 2);
    let h = HopfAlgebraData::new(z, vec!["1".into(), "g".into()], mul, unit, comul, counit, antipode)?;

    let report = verify_hopf(&h);
    println!("axioms:\n{report}");
    println!("antipode properties pass: {}", antipode_properties_check(&h).passed());

    // S is the convolution inverse of the identity
    let s_id = convolution(h.coalgebra(), h.algebra(), h.antipode(), &h.identity())?;
    println!("S * id = unit∘counit: {}", s_id == h.unit_counit());

    let dual = dual_hopf(&h);
    println!("dual passes: {}, commutative: {}", verify_hopf(&dual).passed(), dual.commutative());

    let back = hopf_from_json(&hopf_to_json(&h))?;
    println!("json round trip: {}", back == h);
    Ok(())
}
