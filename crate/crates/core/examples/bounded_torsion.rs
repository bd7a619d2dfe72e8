//! A certificate that the order of the Klein four-group annihilates its
//! higher cohomology on a family of coefficient modules.

use hopfcoh::integrals::{bounded_torsion_certificate, default_torsion_family};
use hopfcoh::linalg::RingSpec;
use hopfcoh::schemes::builtin_group;

fn main() -> hopfcoh::Result<()> {
    let g = builtin_group("klein", RingSpec::Integers)?;
    let cert = bounded_torsion_certificate(&g, &default_torsion_family(&g)?, 3)?;
    println!("n = {} ({})", cert.n, cert.justification);
    for e in &cert.evidence {
        let groups: Vec<String> = e.groups.iter().map(|p| p.to_string()).collect();
        println!("  {:<12} {:<40} annihilated {:?}", e.module, groups.join(", "), e.annihilated);
    }
    Ok(())
}
