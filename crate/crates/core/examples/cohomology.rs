//! Cohomology of C2 over Z with trivial and sign coefficients, compared
//! with the periodic resolution.

use hopfcoh::cohomology::oracle::cyclic_oracle;
use hopfcoh::cohomology::{cohomology_groups, cohomology_presentations};
use hopfcoh::linalg::{Matrix, RingSpec};
use hopfcoh::rep::{comodule_from_representation, ComoduleData};
use hopfcoh::schemes::builtin_group;

fn main() -> hopfcoh::Result<()> {
    let z = RingSpec::Integers;
    let g = builtin_group("constant-C2", z)?;
    let trivial = ComoduleData::trivial(g.hopf(), 1);
    let cg = cohomology_groups(&g, &trivial, 4)?;
    for n in 0..=cg.top_degree() {
        let gens = cg.generators(n);
        let rep = gens.first().map(|c| format!("{:?}", c.representative)).unwrap_or_default();
        println!("H^{n}(C2, Z) = {:<4} {rep}", cg.group(n).to_string());
    }
    println!("matches the periodic resolution: {}", cg.groups() == cyclic_oracle(&trivial, 1, 2, 4)?);

    let sign = comodule_from_representation(&g, &[Matrix::from_i64(z, &[vec![1]]), Matrix::from_i64(z, &[vec![-1]])])?;
    let groups: Vec<String> = cohomology_presentations(&g, &sign, 4)?.iter().map(|p| p.to_string()).collect();
    println!("H^*(C2, Z_sign) = {}", groups.join(", "));
    Ok(())
}
