//! Cohomology from 2-periodic resolutions, independent of the cobar complex.
//!
//! When the dual algebra `k[G]^*` is `k[x]/(f)` with `f = x·g`, the trivial
//! module has the periodic free resolution `… → A →g→ A →x→ A → k`, so
//! `H^*(G, M)` is the cohomology of `M →x→ M →g→ M →x→ …`.

use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, subquotient, Matrix, ModulePresentation};
use crate::rep::{comodule_to_module, ComoduleData};

/// `H^0 … H^nmax` of `M →a→ M →b→ M →a→ …`; requires `ab = ba = 0`.
pub fn periodic_cohomology(a: &Matrix, b: &Matrix, nmax: usize) -> Result<Vec<ModulePresentation>> {
    if !a.is_square() || a.shape() != b.shape() {
        return Err(Error::Malformed("periodic maps must be square of equal size".into()));
    }
    if !a.mul(b).is_zero() || !b.mul(a).is_zero() {
        return Err(Error::Malformed("periodic maps must compose to zero".into()));
    }
    let m = a.rows();
    let zero = Matrix::zeros(a.ring(), m, 0);
    let ka = kernel_basis(a);
    let kb = kernel_basis(b);
    let h0 = subquotient(m, &ka, &zero)?;
    let odd = subquotient(m, &kb, a)?;
    let even = subquotient(m, &ka, b)?;
    Ok((0..=nmax)
        .map(|n| match n {
            0 => h0.clone(),
            n if n % 2 == 1 => odd.clone(),
            _ => even.clone(),
        })
        .collect())
}

fn power(t: &Matrix, e: usize) -> Matrix {
    (0..e).fold(Matrix::identity(t.ring(), t.rows()), |acc, _| acc.mul(t))
}

/// Matrix by which the dual basis element `generator` acts on `M`.
fn acting(m: &ComoduleData, generator: usize) -> Result<Matrix> {
    if generator >= m.over().rank() {
        return Err(Error::Malformed(format!("no dual basis element {generator}")));
    }
    Ok(comodule_to_module(m).acting_matrix(generator))
}

/// For `k[G]^* = k[T]/(T^n - 1)` with `T` the dual basis element
/// `generator`, e.g. a constant cyclic group: `x = T - 1`, `g = 1 + … + T^{n-1}`.
pub fn cyclic_oracle(m: &ComoduleData, generator: usize, order: usize, nmax: usize) -> Result<Vec<ModulePresentation>> {
    if order == 0 || m.over().rank() != order {
        return Err(Error::Malformed(format!("a cyclic dual algebra of order {order} needs rank {order}")));
    }
    let t = acting(m, generator)?;
    let id = Matrix::identity(t.ring(), t.rows());
    if power(&t, order) != id {
        return Err(Error::Malformed(format!("T^{order} is not the identity")));
    }
    let norm = (1..order).fold(id.clone(), |acc, k| acc.add(&power(&t, k)));
    periodic_cohomology(&t.sub(&id), &norm, nmax)
}

/// For `k[G]^* = k[u]/(u^p)` with `u` the dual basis element `generator`,
/// e.g. `α_p` over `F_p`: `x = u`, `g = u^{p-1}`.
pub fn truncated_polynomial_oracle(m: &ComoduleData, generator: usize, p: usize, nmax: usize) -> Result<Vec<ModulePresentation>> {
    if p < 2 || m.over().rank() != p {
        return Err(Error::Malformed(format!("a truncated polynomial dual algebra of height {p} needs rank {p}")));
    }
    let u = acting(m, generator)?;
    if !power(&u, p).is_zero() {
        return Err(Error::Malformed(format!("u^{p} does not vanish")));
    }
    periodic_cohomology(&u, &power(&u, p - 1), nmax)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::RingSpec;
    use crate::schemes::builtin_group;
    use malachite::Integer;

    #[test]
    fn c2_trivial_integers() {
        let g = builtin_group("constant-C2", RingSpec::Integers).unwrap();
        let groups = cyclic_oracle(&ComoduleData::trivial(g.hopf(), 1), 1, 2, 4).unwrap();
        let z = RingSpec::Integers;
        let c2 = ModulePresentation::new(z, 0, vec![Integer::from(2)]).unwrap();
        assert_eq!(groups, vec![ModulePresentation::free(z, 1), ModulePresentation::zero(z), c2.clone(), ModulePresentation::zero(z), c2]);
    }

    #[test]
    fn alpha2_trivial() {
        let f2 = RingSpec::PrimeField(2);
        let g = builtin_group("alpha2", f2).unwrap();
        let groups = truncated_polynomial_oracle(&ComoduleData::trivial(g.hopf(), 1), 1, 2, 4).unwrap();
        assert!(groups.iter().all(|p| *p == ModulePresentation::free(f2, 1)));
    }

    #[test]
    fn mismatched_algebra_rejected() {
        let g = builtin_group("constant-C3", RingSpec::Integers).unwrap();
        let m = crate::rep::regular_representation(g.hopf(), crate::rep::Side::Left);
        assert!(cyclic_oracle(&m, 1, 2, 2).is_err());
        assert!(truncated_polynomial_oracle(&m, 1, 3, 2).is_err());
    }
}
