//! Comodules, restriction and induction along C2 inside C4, and the
//! adjunction between them.

use hopfcoh::linalg::{Matrix, RingSpec};
use hopfcoh::rep::{adjunction_check, induce, invariants, regular_representation, restrict, verify_comodule, ComoduleData, Side};
use hopfcoh::schemes::{constant_group_scheme, subgroup_from_ideal, verify_subgroup, GroupTable};

fn main() -> hopfcoh::Result<()> {
    let q = RingSpec::Rationals;
    let c4 = constant_group_scheme(&GroupTable::cyclic(4), q)?;
    // C2 = {0, 2}: the ideal is spanned by the indicator functions of 1 and 3
    let ideal = Matrix::from_i64(q, &[vec![0, 0], vec![1, 0], vec![0, 0], vec![0, 1]]);
    let sub = subgroup_from_ideal(&c4, &ideal)?;
    println!("subgroup of rank {} passes: {}", sub.sub.rank(), verify_subgroup(&sub).passed());

    let reg = regular_representation(c4.hopf(), Side::Right);
    println!("regular C4-comodule has {} invariant(s)", invariants(&reg).cols());
    let res = restrict(&reg, &sub)?;
    println!("restricted to C2: rank {}, invariants {}", res.rank(), invariants(&res).cols());

    let ind = induce(&ComoduleData::trivial(sub.sub.hopf(), 1), &sub)?;
    println!("ind(k) has rank {} and passes: {}", ind.rank(), verify_comodule(&ind).passed());

    let adj = adjunction_check(&reg, &ComoduleData::trivial(sub.sub.hopf(), 1), &sub)?;
    println!("Hom(res V, W) = {}, Hom(V, ind W) = {}", adj.restricted_side, adj.induced_side);
    Ok(())
}
