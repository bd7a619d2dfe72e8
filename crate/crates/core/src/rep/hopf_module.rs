use serde::{Deserialize, Serialize};

use super::{invariants, verify_comodule, ComoduleData};
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebraData, VerificationReport};
use crate::linalg::{solve, Matrix};

/// A right Hopf module: a comodule with a compatible right `H`-action.
/// `action` is `m × (m·d)`, column `v·d + j` holding `e_v · h_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfModuleData {
    pub comodule: ComoduleData,
    pub action: Matrix,
}

impl HopfModuleData {
    pub fn new(comodule: ComoduleData, action: Matrix) -> Result<Self> {
        let (m, d) = (comodule.rank(), comodule.over().rank());
        if action.shape() != (m, m * d) {
            return Err(Error::Malformed(format!("action is {}x{}, expected {m}x{}", action.rows(), action.cols(), m * d)));
        }
        Ok(HopfModuleData { comodule, action })
    }

    pub fn over(&self) -> &HopfAlgebraData {
        self.comodule.over()
    }

    pub fn rank(&self) -> usize {
        self.comodule.rank()
    }
}

pub fn verify_hopf_module(hm: &HopfModuleData) -> VerificationReport {
    let h = hm.over();
    let ring = h.ring();
    let (m, d) = (hm.rank(), h.rank());
    let id = |n| Matrix::identity(ring, n);
    let mut r = verify_comodule(&hm.comodule);
    r.compare(
        "right action associativity",
        &hm.action.mul(&hm.action.kron(&id(d))),
        &hm.action.mul(&id(m).kron(h.mul())),
    );
    r.compare("right action unit", &hm.action.mul(&id(m).kron(h.unit())), &id(m));
    let coaction = hm.comodule.coaction();
    let split = coaction.kron(h.comul()).permute_tensor_rows(&[m, d, d, d], &[0, 2, 1, 3]);
    r.compare(
        "Hopf module compatibility",
        &coaction.mul(&hm.action),
        &hm.action.kron(h.mul()).mul(&split),
    );
    r
}

/// The data of `M ≅ M^{coH} ⊗ H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfModuleStructure {
    /// `φ(x) = x₀ S(x₁)`, an `m × m` matrix.
    pub retraction: Matrix,
    /// Columns spanning `M^{coH}`.
    pub coinvariants: Matrix,
    /// `ρ(y ⊗ h) = y h`, from `M^{coH} ⊗ H` to `M`.
    pub rho: Matrix,
    /// `θ(x) = φ(x₀) ⊗ x₁`, the inverse of `ρ`.
    pub theta: Matrix,
}

pub fn hopf_module_structure(hm: &HopfModuleData) -> Result<HopfModuleStructure> {
    let h = hm.over();
    let ring = h.ring();
    let (m, d) = (hm.rank(), h.rank());
    let id = |n| Matrix::identity(ring, n);
    let coaction = hm.comodule.coaction();
    let retraction = hm.action.mul(&id(m).kron(h.antipode())).mul(coaction);
    let coinvariants = invariants(&hm.comodule);
    let r = coinvariants.cols();
    let into_coinv = coaction.sub(&id(m).kron(h.unit())).mul(&retraction);
    if !into_coinv.is_zero() {
        return Err(Error::TheoremViolation("the retraction does not land in the coinvariants".into()));
    }
    if retraction.mul(&coinvariants) != coinvariants {
        return Err(Error::TheoremViolation("the retraction is not the identity on coinvariants".into()));
    }
    let rho = hm.action.mul(&coinvariants.kron(&id(d)));
    let target = retraction.kron(&id(d)).mul(coaction);
    let lifted = coinvariants.kron(&id(d));
    let mut theta = Matrix::zeros(ring, r * d, m);
    for (c, col) in target.columns().into_iter().enumerate() {
        let x = solve(&lifted, &col)?
            .ok_or_else(|| Error::TheoremViolation("θ does not factor through the coinvariants".into()))?;
        for (i, v) in x.into_iter().enumerate() {
            theta.set(i, c, v);
        }
    }
    if rho.mul(&theta) != id(m) {
        return Err(Error::TheoremViolation("ρθ is not the identity".into()));
    }
    if theta.mul(&rho) != id(r * d) {
        return Err(Error::TheoremViolation("θρ is not the identity".into()));
    }
    Ok(HopfModuleStructure { retraction, coinvariants, rho, theta })
}

/// `H^*` as a right Hopf module over `H`: `H^*` coacts through left
/// convolution, `H` acts by `(f · h)(a) = f(a S(h))`.
pub fn dual_hopf_module(h: &HopfAlgebraData) -> HopfModuleData {
    let d = h.rank();
    let ring = h.ring();
    let mut coaction = Matrix::zeros(ring, d * d, d);
    let mut action = Matrix::zeros(ring, d, d * d);
    for w in 0..d {
        for i in 0..d {
            for v in 0..d {
                coaction.set(w * d + i, v, h.comul().get(i * d + v, w).clone());
                let mut acc = ring.zero();
                for k in 0..d {
                    acc = ring.add(&acc, &ring.mul(h.mul().get(v, w * d + k), h.antipode().get(k, i)));
                }
                action.set(w, v * d + i, acc);
            }
        }
    }
    let comodule = ComoduleData::new(h.clone(), coaction).expect("shape");
    HopfModuleData { comodule, action }
}

/// `H` over itself with `Δ` and right multiplication.
pub fn regular_hopf_module(h: &HopfAlgebraData) -> HopfModuleData {
    let comodule = ComoduleData::new(h.clone(), h.comul().clone()).expect("shape");
    HopfModuleData { comodule, action: h.mul().clone() }
}

/// `k^m ⊗ H` with structure on the `H` factor.
pub fn free_hopf_module(h: &HopfAlgebraData, m: usize) -> HopfModuleData {
    let id = Matrix::identity(h.ring(), m);
    let comodule = ComoduleData::new(h.clone(), id.kron(h.comul())).expect("shape");
    HopfModuleData { comodule, action: id.kron(h.mul()) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::RingSpec;
    use crate::schemes::builtin_group;

    #[test]
    fn dual_module_structure_theorem() {
        for (name, ring) in [("constant-C2", RingSpec::Integers), ("constant-C3", RingSpec::Integers), ("constant-C3", RingSpec::PrimeField(3))] {
            let g = builtin_group(name, ring).unwrap();
            let hm = dual_hopf_module(g.hopf());
            assert!(verify_hopf_module(&hm).passed(), "{name}: {}", verify_hopf_module(&hm));
            let s = hopf_module_structure(&hm).unwrap();
            assert_eq!(s.coinvariants.cols(), 1);
        }
    }

    #[test]
    fn group_algebra_dual_module() {
        let h = crate::schemes::group_algebra(&crate::schemes::GroupTable::symmetric3(), RingSpec::Integers).unwrap();
        let hm = dual_hopf_module(&h);
        assert!(verify_hopf_module(&hm).passed());
        assert_eq!(hopf_module_structure(&hm).unwrap().coinvariants.cols(), 1);
    }

    #[test]
    fn regular_and_free() {
        let g = builtin_group("klein", RingSpec::Integers).unwrap();
        let reg = regular_hopf_module(g.hopf());
        assert!(verify_hopf_module(&reg).passed());
        let s = hopf_module_structure(&reg).unwrap();
        assert_eq!(s.coinvariants, g.hopf().unit().clone());
        let free = free_hopf_module(g.hopf(), 2);
        assert!(super::super::same_structure(&reg.comodule.over, &free.comodule.over));
        assert!(verify_hopf_module(&free).passed());
        assert_eq!(hopf_module_structure(&free).unwrap().coinvariants.cols(), 2);
    }
}
