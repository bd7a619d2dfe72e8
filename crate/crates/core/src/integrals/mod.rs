//! Integrals of finite free Hopf algebras, the Frobenius structure they
//! induce, the regular trace, bounded-torsion certificates and bounded
//! searches for power surjectivity and power reductivity.

mod power;

pub use power::{
    power_reductivity_witness, power_surjectivity_check, symmetric_power, DegreeEvidence, PowerReductivityReport,
    PowerSurjectivityReport, SurjectivityEntry, SymmetricPower,
};

use malachite::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::cohomology_presentations;
use crate::error::{Error, Result};
use crate::hopf::{AlgebraData, HopfAlgebraData, VerificationReport};
use crate::linalg::{inverse, kernel_basis, Matrix, ModulePresentation, RingSpec, Scalar};
use crate::rep::{dual_hopf_module, invariants, regular_representation, ComoduleData, Side};
use crate::schemes::{regular_traces, GroupSchemeData};

/// Basis of `{x : b x = ε(b) x for all b}`.
pub fn left_integrals(a: &AlgebraData) -> Result<Matrix> {
    let aug = a.augmentation.as_ref().ok_or_else(|| Error::Malformed("left integrals need an augmentation".into()))?;
    let ring = a.ring;
    let d = a.rank();
    let mut system = Matrix::zeros(ring, d * d, d);
    for b in 0..d {
        let eps = aug.get(0, b);
        for i in 0..d {
            for x in 0..d {
                let mut v = a.mul.get(i, b * d + x).clone();
                if i == x {
                    v = ring.sub(&v, eps);
                }
                system.set(b * d + i, x, v);
            }
        }
    }
    Ok(kernel_basis(&system))
}

/// Basis of the coinvariants of `H^*` as a right Hopf module over `H`.
pub fn dual_coinvariants(h: &HopfAlgebraData) -> Result<Matrix> {
    let c = invariants(&dual_hopf_module(h).comodule);
    if c.cols() != 1 {
        return Err(Error::TheoremViolation(format!("the coinvariants of the dual have rank {}", c.cols())));
    }
    Ok(c)
}

fn column(m: &Matrix) -> Vec<Scalar> {
    m.column(0)
}

fn scalar_strings<S: serde::Serializer>(v: &[Scalar], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// `H ≅ H^*` as left `H`-modules, where `H` acts on `H^*` by
/// `(b · f)(a) = f(a b)`.
#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusData {
    #[serde(skip)]
    pub hopf: HopfAlgebraData,
    /// Generator of the coinvariants of `H^*`, in the dual basis.
    #[serde(serialize_with = "scalar_strings")]
    pub psi: Vec<Scalar>,
    /// `Φ(h) = ψ · S^{-1}(h)`, so `Φ(h)(a) = ψ(a h)`.
    pub phi: Matrix,
    /// `N = Φ^{-1}(ε)`.
    #[serde(serialize_with = "scalar_strings")]
    pub norm: Vec<Scalar>,
    pub report: VerificationReport,
}

/// Matrix of `f ↦ b · f` on `H^*`.
fn dual_left_action(h: &HopfAlgebraData, b: usize) -> Matrix {
    let d = h.rank();
    Matrix::from_fn(h.ring(), d, d, |a, k| h.mul().get(k, a * d + b).clone())
}

pub fn frobenius_isomorphism(h: &HopfAlgebraData) -> Result<FrobeniusData> {
    let ring = h.ring();
    let d = h.rank();
    let psi = dual_coinvariants(h)?;
    let s_inv = inverse(h.antipode()).ok_or_else(|| Error::TheoremViolation("the antipode is not invertible".into()))?;
    let hm = dual_hopf_module(h);
    // h ↦ ψ · h through the Hopf-module action, then precomposed with S^{-1}
    let act_on_psi = hm.action.mul(&psi.kron(&Matrix::identity(ring, d)));
    let phi = act_on_psi.mul(&s_inv);
    let direct = Matrix::from_fn(ring, d, d, |a, x| {
        (0..d).fold(ring.zero(), |acc, k| ring.add(&acc, &ring.mul(psi.get(k, 0), h.mul().get(k, a * d + x))))
    });
    let phi_inv = inverse(&phi).ok_or_else(|| Error::TheoremViolation("Φ is not invertible".into()))?;
    let eps = h.counit().transpose();
    let norm = phi_inv.mul(&eps);

    let mut report = VerificationReport::new();
    report.compare("Φ(h)(a) = ψ(a h)", &phi, &direct);
    report.compare("Φ is invertible", &phi.mul(&phi_inv), &Matrix::identity(ring, d));
    for b in 0..d {
        let lb = h.algebra().left_mult(&crate::hopf::basis_vector(ring, d, b));
        report.compare(&format!("Φ is left linear for e_{b}"), &phi.mul(&lb), &dual_left_action(h, b).mul(&phi));
    }
    let n_psi = hm.action.mul(&psi.kron(&s_inv.mul(&norm)));
    report.compare("N · ψ = ε", &n_psi, &eps);
    for a in 0..d {
        let an = h.algebra().product(&crate::hopf::basis_vector(ring, d, a), &norm);
        report.compare(&format!("e_{a} N = ε(e_{a}) N"), &an, &norm.scale(h.counit().get(0, a)));
    }
    if let Some(c) = report.failures().next() {
        return Err(Error::TheoremViolation(format!("Frobenius structure: {} fails", c.name)));
    }
    Ok(FrobeniusData { hopf: h.clone(), psi: column(&psi), phi, norm: column(&norm), report })
}

/// The functional `b ↦ tr(x ↦ b x)` on `k[G]`.
#[derive(Clone, Debug, Serialize)]
pub struct TraceData {
    #[serde(skip)]
    pub hopf: HopfAlgebraData,
    /// `1 × d`.
    pub trace: Matrix,
    pub report: VerificationReport,
}

pub fn trace_map(h: &HopfAlgebraData) -> Result<TraceData> {
    let ring = h.ring();
    let d = h.rank();
    let trace = Matrix::row_vector(ring, regular_traces(h));
    let mut report = VerificationReport::new();
    report.compare("tr η = rank", &trace.mul(h.unit()), &Matrix::from_fn(ring, 1, 1, |_, _| ring.from_i64(d as i64)));
    report.compare("(tr ⊗ id) Δ = η tr", &trace.kron(&Matrix::identity(ring, d)).mul(h.comul()), &h.unit().mul(&trace));
    if let Some(c) = report.failures().next() {
        return Err(Error::TheoremViolation(format!("trace: {} fails", c.name)));
    }
    Ok(TraceData { hopf: h.clone(), trace, report })
}

/// Evidence for one coefficient module.
#[derive(Clone, Debug, Serialize)]
pub struct ModuleEvidence {
    pub module: String,
    /// `H^1 … H^nmax`.
    pub groups: Vec<ModulePresentation>,
    /// Whether `n` annihilates each of them.
    pub annihilated: Vec<bool>,
}

/// `rank(k[G])` annihilates `H^i(G, M)` for `1 ≤ i ≤ nmax` on each module.
#[derive(Clone, Debug, Serialize)]
pub struct TorsionCertificate {
    pub group: String,
    #[serde(serialize_with = "integer_string")]
    pub n: Integer,
    /// Why `n` suffices: the regular trace composed with the unit is
    /// multiplication by the rank.
    pub justification: String,
    pub max_degree: usize,
    pub evidence: Vec<ModuleEvidence>,
}

fn integer_string<S: serde::Serializer>(v: &Integer, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Trivial `Z`, the regular comodule and trivial `Z/4`.
pub fn default_torsion_family(g: &GroupSchemeData) -> Result<Vec<(String, ComoduleData)>> {
    let h = g.hopf();
    let z4 = g.base_change(RingSpec::integers_mod(4)?)?;
    Ok(vec![
        ("trivial Z".to_string(), ComoduleData::trivial(h, 1)),
        ("regular".to_string(), regular_representation(h, Side::Left)),
        ("trivial Z/4".to_string(), ComoduleData::trivial(z4.hopf(), 1)),
    ])
}

pub fn bounded_torsion_certificate(g: &GroupSchemeData, modules: &[(String, ComoduleData)], nmax: usize) -> Result<TorsionCertificate> {
    if g.ring() != RingSpec::Integers {
        return Err(Error::UnsupportedRing { ring: g.ring(), what: "bounded torsion certificates" });
    }
    let trace = trace_map(g.hopf())?;
    let n = Integer::from(g.rank());
    let evidence: Vec<ModuleEvidence> = modules
        .par_iter()
        .map(|(name, m)| -> Result<ModuleEvidence> {
            let gm = g.base_change(m.ring())?;
            let groups: Vec<ModulePresentation> = cohomology_presentations(&gm, m, nmax)?.into_iter().skip(1).collect();
            let annihilated = groups.iter().map(|p| p.annihilated_by(&n)).collect::<Result<Vec<bool>>>()?;
            Ok(ModuleEvidence { module: name.clone(), groups, annihilated })
        })
        .collect::<Result<_>>()?;
    for e in &evidence {
        if let Some(i) = e.annihilated.iter().position(|ok| !ok) {
            return Err(Error::TheoremViolation(format!("{n} does not annihilate H^{}({}, {})", i + 1, g.name, e.module)));
        }
    }
    let justification = format!("tr η = {} on k[G], trace identities {}", n, if trace.report.passed() { "verified" } else { "failed" });
    Ok(TorsionCertificate { group: g.name.clone(), n, justification, max_degree: nmax, evidence })
}

#[cfg(test)]
mod tests;
