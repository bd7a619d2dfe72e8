//! Hochschild cohomology `H^*(G, M)` of a finite group scheme with
//! coefficients in a comodule, computed from the cobar complex
//! `C^n = M ⊗ k[G]^{⊗n}`.
//!
//! Groups are computed on the normalized subcomplex `M ⊗ (ker ε)^{⊗n}`
//! whenever `1` can be completed to a basis by dropping one basis vector;
//! representatives are reported on the full complex.

mod complex;
mod cup;
mod les;
pub mod oracle;

pub use complex::{size_limit, CochainComplex, DEFAULT_MAX_RANK};
pub use cup::{
    algebra_cohomology_ring, algebra_cohomology_ring_with, cross_product, cup_product, graded_commutativity_check, yoneda_product, AlgebraCohomologyRing,
    ProductRoute, RelationWitness,
};
pub use les::{long_exact_sequence, LongExactSequence, ShortExactSequence};

pub(crate) use complex::Cobar;

use malachite::base::num::arithmetic::traits::{Lcm, UnsignedAbs};
use malachite::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebraData, VerificationReport};
use crate::linalg::{
    lattice_contains, lattice_reduce, sparse_kernel, sparse_rank_factors, AnySubquotient, ModulePresentation, RingSpec, Scalar, SparseVec,
};
use crate::rep::{invariants, regular_representation, same_structure, tensor_comodule, ComoduleData, Side};
use crate::schemes::GroupSchemeData;

/// Default degree cap.
pub const DEFAULT_MAX_DEGREE: usize = 6;

fn serialize_sparse<S: Serializer>(v: &SparseVec, s: S) -> std::result::Result<S::Ok, S::Error> {
    let pairs: Vec<(usize, String)> = v.iter().map(|(i, x)| (*i, x.to_string())).collect();
    pairs.serialize(s)
}

fn serialize_scalars<S: Serializer>(v: &[Scalar], s: S) -> std::result::Result<S::Ok, S::Error> {
    let strings: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    strings.serialize(s)
}

/// A class `[λ] ∈ H^n`, given by a cocycle of the full complex and its
/// coordinates on the generators of `H^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyClass {
    pub degree: usize,
    /// Sparse `(index, value)` pairs in `M ⊗ k[G]^{⊗n}`.
    #[serde(serialize_with = "serialize_sparse")]
    pub representative: SparseVec,
    #[serde(serialize_with = "serialize_scalars")]
    pub coordinates: Vec<Scalar>,
    pub group: ModulePresentation,
    #[serde(skip)]
    cochain: SparseVec,
}

impl CohomologyClass {
    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(|c| *c == 0u32)
    }

    /// The cocycle in the basis the groups were computed in.
    pub(crate) fn cochain(&self) -> &SparseVec {
        &self.cochain
    }
}

struct Degree {
    sq: AnySubquotient,
    boundaries: Vec<SparseVec>,
    generators: Vec<CohomologyClass>,
    presentation: ModulePresentation,
}

/// `H^0 … H^N` together with what is needed to name classes.
pub struct CohomologyGroups {
    cobar: Cobar,
    complex: CochainComplex,
    trivial_coefficients: bool,
    degrees: Vec<Degree>,
}

impl CohomologyGroups {
    pub fn ring(&self) -> RingSpec {
        self.cobar.ring
    }

    pub fn top_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn group(&self, n: usize) -> &ModulePresentation {
        &self.degrees[n].presentation
    }

    pub fn groups(&self) -> Vec<ModulePresentation> {
        self.degrees.iter().map(|d| d.presentation.clone()).collect()
    }

    /// Classes of the presentation generators of `H^n`.
    pub fn generators(&self, n: usize) -> &[CohomologyClass] {
        &self.degrees[n].generators
    }

    /// Orders of the generators of `H^n`; zero means free.
    pub fn generator_orders(&self, n: usize) -> Vec<Scalar> {
        self.degrees[n].sq.generator_orders()
    }

    /// The complex the groups were computed from (normalized when
    /// possible).
    pub fn complex(&self) -> &CochainComplex {
        &self.complex
    }

    pub fn is_normalized(&self) -> bool {
        self.cobar.normalized
    }

    pub fn has_trivial_coefficients(&self) -> bool {
        self.trivial_coefficients
    }

    pub(crate) fn cobar(&self) -> &Cobar {
        &self.cobar
    }

    /// Names the class of a cocycle given in the computation basis.
    pub(crate) fn class_of(&self, n: usize, cochain: SparseVec) -> Result<CohomologyClass> {
        let deg = self.degrees.get(n).ok_or(Error::DegreeOverflow { requested: n, available: self.top_degree() })?;
        let coordinates = deg.sq.classify(&cochain).ok_or_else(|| Error::Malformed(format!("not a cocycle in degree {n}")))?;
        let representative = self.cobar.to_full(n, &cochain);
        Ok(CohomologyClass { degree: n, representative, coordinates, group: deg.presentation.clone(), cochain })
    }

    /// The class `Σ c_i g_i` of a coordinate vector.
    pub fn class_from_coordinates(&self, n: usize, coords: &[Scalar]) -> Result<CohomologyClass> {
        let gens = self.degrees.get(n).ok_or(Error::DegreeOverflow { requested: n, available: self.top_degree() })?;
        if coords.len() != gens.generators.len() {
            return Err(Error::Malformed(format!("H^{n} has {} generators", gens.generators.len())));
        }
        let ring = self.ring();
        let mut acc: std::collections::BTreeMap<usize, Scalar> = Default::default();
        for (c, g) in coords.iter().zip(&gens.generators) {
            for (i, x) in &g.cochain {
                let e = acc.entry(*i).or_insert_with(|| ring.zero());
                *e = ring.add(e, &ring.mul(c, x));
            }
        }
        self.class_of(n, acc.into_iter().filter(|(_, x)| *x != 0u32).collect())
    }

    /// The class of `1 ∈ H^0(G, k)` for trivial rank-one coefficients.
    pub fn unit_class(&self) -> Result<CohomologyClass> {
        if !self.trivial_coefficients || self.cobar.m != 1 {
            return Err(Error::Malformed("the unit class needs trivial rank-one coefficients".into()));
        }
        self.class_of(0, vec![(0, self.ring().one())])
    }

    pub fn zero_class(&self, n: usize) -> Result<CohomologyClass> {
        self.class_of(n, Vec::new())
    }

}

fn check_over(g: &GroupSchemeData, m: &ComoduleData) -> Result<()> {
    if same_structure(g.hopf(), m.over()) {
        Ok(())
    } else {
        Err(Error::Malformed("the comodule is not over the given group scheme".into()))
    }
}

fn is_trivial(h: &HopfAlgebraData, m: &ComoduleData) -> bool {
    *m.coaction() == ComoduleData::trivial(h, m.rank()).coaction().clone()
}

pub(crate) fn compute_groups(h: &HopfAlgebraData, m: &ComoduleData, nmax: usize, normalize: bool) -> Result<CohomologyGroups> {
    let cobar = if normalize { Cobar::best(h, m.coaction()) } else { Cobar::full(h, m.coaction()) };
    let complex = cobar.complex(nmax + 1)?;
    let ring = h.ring();
    let mut degrees = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        let cycles = sparse_kernel(complex.differential(n));
        let boundaries: Vec<SparseVec> = if n == 0 {
            Vec::new()
        } else {
            let dn = complex.differential(n - 1);
            (0..dn.cols()).map(|j| dn.column(j).to_vec()).filter(|c: &SparseVec| !c.is_empty()).collect()
        };
        let sq = AnySubquotient::new(ring, cobar.rank(n), &cycles, &boundaries, true)?;
        let presentation = sq.presentation();
        let mut deg = Degree { sq, boundaries, generators: Vec::new(), presentation: presentation.clone() };
        let reps = deg.sq.generators();
        for (i, rep) in reps.into_iter().enumerate() {
            let cochain = lattice_reduce(ring, cobar.rank(n), &deg.boundaries, &rep);
            let mut coordinates = vec![ring.zero(); deg.sq.generator_orders().len()];
            coordinates[i] = ring.one();
            let representative = cobar.to_full(n, &cochain);
            deg.generators.push(CohomologyClass { degree: n, representative, coordinates, group: presentation.clone(), cochain });
        }
        degrees.push(deg);
    }
    Ok(CohomologyGroups { trivial_coefficients: is_trivial(h, m), cobar, complex, degrees })
}

/// The full cobar complex `C^0 … C^nmax` on the given bases.
pub fn hochschild_complex(g: &GroupSchemeData, m: &ComoduleData, nmax: usize) -> Result<CochainComplex> {
    check_over(g, m)?;
    Cobar::full(g.hopf(), m.coaction()).complex(nmax)
}

/// The normalized subcomplex used for computation, when available.
pub fn normalized_complex(g: &GroupSchemeData, m: &ComoduleData, nmax: usize) -> Result<Option<CochainComplex>> {
    check_over(g, m)?;
    Cobar::normalized(g.hopf(), m.coaction()).map(|c| c.complex(nmax)).transpose()
}

/// `H^0 … H^nmax` with generator representatives.
pub fn cohomology_groups(g: &GroupSchemeData, m: &ComoduleData, nmax: usize) -> Result<CohomologyGroups> {
    check_over(g, m)?;
    compute_groups(g.hopf(), m, nmax, true)
}

/// `H^0 … H^nmax` as presentations only. Over `Z` the torsion of `H^n` is
/// read off the invariant factors of `∂^{n-1}` and the free rank from the
/// ranks of the two adjacent differentials, all by sparse elimination.
pub fn cohomology_presentations(g: &GroupSchemeData, m: &ComoduleData, nmax: usize) -> Result<Vec<ModulePresentation>> {
    check_over(g, m)?;
    presentations_of(g.hopf(), m, nmax)
}

pub(crate) fn presentations_of(h: &HopfAlgebraData, m: &ComoduleData, nmax: usize) -> Result<Vec<ModulePresentation>> {
    let cobar = Cobar::best(h, m.coaction());
    let complex = cobar.complex(nmax + 1)?;
    let ring = h.ring();
    if let RingSpec::IntegersMod(_) = ring {
        return (0..=nmax)
            .map(|n| {
                let cycles = sparse_kernel(complex.differential(n));
                let boundaries: Vec<SparseVec> = if n == 0 {
                    Vec::new()
                } else {
                    let dn = complex.differential(n - 1);
                    (0..dn.cols()).map(|j| dn.column(j).to_vec()).collect()
                };
                Ok(AnySubquotient::new(ring, cobar.rank(n), &cycles, &boundaries, false)?.presentation())
            })
            .collect();
    }
    let facts: Vec<(usize, Vec<Integer>)> = (0..=nmax).map(|n| sparse_rank_factors(complex.differential(n))).collect();
    Ok((0..=nmax)
        .map(|n| {
            let (before, factors) = if n == 0 { (0, Vec::new()) } else { (facts[n - 1].0, facts[n - 1].1.clone()) };
            let free = cobar.rank(n) - facts[n].0 - before;
            ModulePresentation { ring, free_rank: free, invariant_factors: factors }
        })
        .collect())
}

/// The lcm of the torsion exponents of `H^1 … H^nmax` over `Z`; `None`
/// when all of them are torsion-free.
pub fn torsion_bound(g: &GroupSchemeData, m: &ComoduleData, nmax: usize) -> Result<Option<Integer>> {
    if g.ring() != RingSpec::Integers {
        return Err(Error::UnsupportedRing { ring: g.ring(), what: "torsion bounds" });
    }
    let groups = cohomology_presentations(g, m, nmax)?;
    let mut out: Option<Integer> = None;
    for p in groups.iter().skip(1) {
        if let Some(e) = p.torsion_exponent()? {
            out = Some(match out {
                None => e,
                Some(x) => Integer::from(x.unsigned_abs().lcm(e.unsigned_abs())),
            });
        }
    }
    Ok(out)
}

/// `H^i(G, M ⊗ k[G]) = 0` for `1 ≤ i ≤ nmax` and `H^0 ≅ M`.
pub fn acyclicity_check_induced(g: &GroupSchemeData, m_base: &ComoduleData, nmax: usize) -> Result<VerificationReport> {
    check_over(g, m_base)?;
    let induced = tensor_comodule(m_base, &regular_representation(g.hopf(), Side::Right))?;
    let groups = presentations_of(g.hopf(), &induced, nmax)?;
    let mut r = VerificationReport::new();
    let expect = ModulePresentation::free(g.ring(), m_base.rank());
    r.flag("H^0 = M", groups[0] == expect, Some(groups[0].to_string()));
    for (i, p) in groups.iter().enumerate().skip(1) {
        r.flag(&format!("H^{i} = 0"), p.is_zero(), Some(p.to_string()));
    }
    Ok(r)
}

/// `H^0(G, M)` and the comodule invariants span the same submodule of `M`.
pub fn h0_invariants_check(g: &GroupSchemeData, m: &ComoduleData) -> Result<VerificationReport> {
    check_over(g, m)?;
    let ring = g.ring();
    let cg = compute_groups(g.hopf(), m, 0, true)?;
    let h0: Vec<SparseVec> = cg.generators(0).iter().map(|c| c.representative.clone()).collect();
    let inv = invariants(m);
    let inv: Vec<SparseVec> = (0..inv.cols())
        .map(|j| inv.column(j).into_iter().enumerate().filter(|(_, x)| *x != 0u32).collect())
        .collect();
    let modulus = match ring {
        RingSpec::IntegersMod(n) => Some(n),
        _ => None,
    };
    let rank = m.rank();
    let mut r = VerificationReport::new();
    r.flag("H^0 lies in the invariants", h0.iter().all(|v| lattice_contains(ring, rank, &inv, modulus, v)), None);
    r.flag("invariants lie in H^0", inv.iter().all(|v| lattice_contains(ring, rank, &h0, modulus, v)), None);
    Ok(r)
}

#[cfg(test)]
mod tests;
