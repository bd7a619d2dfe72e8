use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebraData, VerificationReport};
use crate::linalg::{lattice_contains, lattice_solve, Matrix, RingSpec, Scalar, SparseVec};
use crate::rep::{invariants, is_comodule_map, verify_galgebra, ComoduleData, GAlgebraData};

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn sparse(v: &[Scalar]) -> SparseVec {
    v.iter().cloned().enumerate().filter(|(_, x)| *x != 0u32).collect()
}

fn modulus(ring: RingSpec) -> Option<u64> {
    match ring {
        RingSpec::IntegersMod(n) => Some(n),
        _ => None,
    }
}

/// `S^d V` on the monomial basis, exponent vectors in graded
/// lexicographic order, with the diagonal coaction.
#[derive(Clone, Debug)]
pub struct SymmetricPower {
    pub degree: usize,
    pub monomials: Vec<Vec<usize>>,
    pub comodule: ComoduleData,
}

fn exponent_vectors(vars: usize, degree: usize) -> Vec<Vec<usize>> {
    fn go(vars: usize, left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() + 1 == vars {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            go(vars, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if vars > 0 {
        go(vars, degree, &mut Vec::new(), &mut out);
    }
    out
}

pub fn symmetric_power(v: &ComoduleData, degree: usize) -> Result<SymmetricPower> {
    let h = v.over();
    let ring = h.ring();
    let (m, d) = (v.rank(), h.rank());
    let monomials = exponent_vectors(m, degree);
    let index: BTreeMap<Vec<usize>, usize> = monomials.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let n = monomials.len();
    let mut coaction = Matrix::zeros(ring, n * d, n);
    for (col, exps) in monomials.iter().enumerate() {
        // expand the product of the coactions of the factors
        let mut terms: BTreeMap<(Vec<usize>, usize), Scalar> = BTreeMap::new();
        let one = h.unit();
        for a in 0..d {
            if *one.get(a, 0) != 0u32 {
                terms.insert((vec![0; m], a), one.get(a, 0).clone());
            }
        }
        for (var, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                let mut next: BTreeMap<(Vec<usize>, usize), Scalar> = BTreeMap::new();
                for ((mono, a), c) in &terms {
                    for r in 0..m * d {
                        let x = v.coaction().get(r, var);
                        if *x == 0u32 {
                            continue;
                        }
                        let (w, b) = (r / d, r % d);
                        let mut mono2 = mono.clone();
                        mono2[w] += 1;
                        for z in 0..d {
                            let y = h.mul().get(z, a * d + b);
                            if *y != 0u32 {
                                let e = next.entry((mono2.clone(), z)).or_insert_with(|| ring.zero());
                                *e = ring.add(e, &ring.mul(c, &ring.mul(x, y)));
                            }
                        }
                    }
                }
                terms = next;
            }
        }
        for ((mono, z), c) in terms {
            if c != 0u32 {
                coaction.set(index[&mono] * d + z, col, c);
            }
        }
    }
    Ok(SymmetricPower { degree, monomials, comodule: ComoduleData::new(h.clone(), coaction)? })
}

/// Invariants of `S^d M` in one degree and their images in `S^d L`.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeEvidence {
    pub degree: usize,
    pub invariant_rank: usize,
    pub images: Vec<String>,
    pub surjective: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PowerReductivityReport {
    /// Least `d ≤ d_max` with `(S^d M)^G → S^d L` onto; absent means the
    /// search was inconclusive.
    pub witness: Option<usize>,
    /// An invariant mapping to a generator of `S^d L`, as
    /// `(exponents, coefficient)` pairs.
    pub witness_invariant: Option<Vec<(Vec<usize>, String)>>,
    pub degrees: Vec<DegreeEvidence>,
}

/// `φ : M → L` is a `1 × m` row onto a trivial rank-one comodule.
pub fn power_reductivity_witness(m: &ComoduleData, phi: &Matrix, d_max: usize) -> Result<PowerReductivityReport> {
    let h: &HopfAlgebraData = m.over();
    let ring = h.ring();
    if phi.shape() != (1, m.rank()) {
        return Err(Error::Malformed(format!("φ must be 1x{}", m.rank())));
    }
    let l = ComoduleData::trivial(h, 1);
    if !is_comodule_map(m, &l, phi) {
        return Err(Error::Malformed("φ is not a comodule map onto the trivial module".into()));
    }
    let one = vec![(0, ring.one())];
    let images: Vec<SparseVec> = (0..m.rank()).map(|i| sparse(&[phi.get(0, i).clone()])).collect();
    if !lattice_contains(ring, 1, &images, modulus(ring), &one) {
        return Err(Error::Malformed("φ is not surjective".into()));
    }
    let mut degrees = Vec::new();
    for d in 1..=d_max {
        let sp = symmetric_power(m, d)?;
        let inv = invariants(&sp.comodule);
        // S^d φ on monomials: x^α ↦ Π φ_i^{α_i} z^d
        let values: Vec<Scalar> = sp
            .monomials
            .iter()
            .map(|e| e.iter().enumerate().fold(ring.one(), |acc, (i, &k)| (0..k).fold(acc, |a, _| ring.mul(&a, phi.get(0, i)))))
            .collect();
        let imgs: Vec<Scalar> = (0..inv.cols())
            .map(|j| (0..values.len()).fold(ring.zero(), |acc, r| ring.add(&acc, &ring.mul(&values[r], inv.get(r, j)))))
            .collect();
        let cols: Vec<SparseVec> = imgs.iter().map(|x| sparse(std::slice::from_ref(x))).collect();
        let surjective = lattice_contains(ring, 1, &cols, modulus(ring), &one);
        degrees.push(DegreeEvidence { degree: d, invariant_rank: inv.cols(), images: strings(&imgs), surjective });
        if surjective {
            let coeffs = lattice_solve(ring, 1, &cols, modulus(ring), &one).ok_or_else(|| Error::Internal("lost a solution".into()))?;
            let mut element = vec![ring.zero(); values.len()];
            for (j, c) in coeffs {
                for (r, e) in element.iter_mut().enumerate() {
                    *e = ring.add(e, &ring.mul(&ring.reduce(c.clone()), inv.get(r, j)));
                }
            }
            let witness_invariant = Some(
                element
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| **x != 0u32)
                    .map(|(r, x)| (sp.monomials[r].clone(), x.to_string()))
                    .collect(),
            );
            return Ok(PowerReductivityReport { witness: Some(d), witness_invariant, degrees });
        }
    }
    Ok(PowerReductivityReport { witness: None, witness_invariant: None, degrees })
}

/// One invariant generator of `B^G`.
#[derive(Clone, Debug, Serialize)]
pub struct SurjectivityEntry {
    pub generator: Vec<String>,
    /// Least `e ≤ e_max` with `b^e` in the image of `A^G`.
    pub exponent: Option<usize>,
    /// `a ∈ A^G` with `f(a) = b^e`.
    pub preimage: Option<Vec<String>>,
    /// `t^e - f(a)`, a monic polynomial over the image killing `b`.
    pub integrality_witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PowerSurjectivityReport {
    pub map_checks: VerificationReport,
    pub entries: Vec<SurjectivityEntry>,
    /// True when every generator has a power in the image; false means
    /// inconclusive, never refuted.
    pub all_found: bool,
}

/// Searches `b^e ∈ f(A^G)` for each basis invariant `b` of `B^G`.
pub fn power_surjectivity_check(a: &GAlgebraData, b: &GAlgebraData, f: &Matrix, e_max: usize) -> Result<PowerSurjectivityReport> {
    let ring = a.over().ring();
    if f.shape() != (b.rank(), a.rank()) {
        return Err(Error::Malformed(format!("f must be {}x{}", b.rank(), a.rank())));
    }
    let mut map_checks = verify_galgebra(a).prefixed("source: ");
    map_checks.extend(verify_galgebra(b).prefixed("target: "));
    map_checks.flag("f is a comodule map", is_comodule_map(&a.comodule, &b.comodule, f), None);
    map_checks.compare("f is multiplicative", &f.mul(&a.mul), &b.mul.mul(&f.kron(f)));
    map_checks.compare("f is unital", &f.mul(&a.unit), &b.unit);
    if let Some(c) = map_checks.failures().next() {
        return Err(Error::Malformed(format!("not a map of G-algebras: {} fails", c.name)));
    }
    let inv_a = invariants(&a.comodule);
    let image = f.mul(&inv_a);
    let image_cols: Vec<SparseVec> = image.columns().iter().map(|c| sparse(c)).collect();
    let inv_b = invariants(&b.comodule);
    let mut entries = Vec::new();
    for j in 0..inv_b.cols() {
        let gen = inv_b.select_columns(&[j]);
        let mut power = gen.clone();
        let mut found = None;
        for e in 1..=e_max {
            if e > 1 {
                power = b.mul.mul(&power.kron(&gen));
            }
            let target = sparse(&power.column(0));
            if let Some(x) = lattice_solve(ring, b.rank(), &image_cols, modulus(ring), &target) {
                let mut pre = Matrix::zeros(ring, inv_a.cols(), 1);
                for (i, c) in x {
                    pre.set(i, 0, ring.reduce(c));
                }
                let a_elem = inv_a.mul(&pre).column(0);
                found = Some((e, a_elem));
                break;
            }
        }
        entries.push(match found {
            Some((e, pre)) => SurjectivityEntry {
                generator: strings(&gen.column(0)),
                exponent: Some(e),
                integrality_witness: Some(format!("t^{e} - f([{}])", strings(&pre).join(", "))),
                preimage: Some(strings(&pre)),
            },
            None => SurjectivityEntry { generator: strings(&gen.column(0)), exponent: None, preimage: None, integrality_witness: None },
        });
    }
    let all_found = entries.iter().all(|e| e.exponent.is_some());
    Ok(PowerSurjectivityReport { map_checks, entries, all_found })
}
