use serde::Serialize;

use super::{compute_groups, Cobar, CohomologyGroups};
use crate::error::{Error, Result};
use crate::hopf::VerificationReport;
use crate::linalg::{lattice_contains, lattice_solve, scalar_to_integer, sparse_kernel, Matrix, ModulePresentation, RingSpec, Scalar, SparseMatrix, SparseVec};
use crate::rep::{same_structure, ComoduleData};
use crate::schemes::GroupSchemeData;

/// `0 → M' → M → M'' → 0`. The three comodules may live over different
/// rings (e.g. `Z, Z, Z/2`), each over the matching base change of `G`.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    pub sub: ComoduleData,
    pub middle: ComoduleData,
    pub quotient: ComoduleData,
    /// `m × m'`.
    pub inclusion: Matrix,
    /// `m'' × m`.
    pub projection: Matrix,
}

/// `… → H^n(M') → H^n(M) → H^n(M'') → H^{n+1}(M') → …` with every map
/// written on the presentation generators.
#[derive(Clone, Debug, Serialize)]
pub struct LongExactSequence {
    /// `[H^n(M'), H^n(M), H^n(M'')]` per degree.
    pub groups: Vec<[ModulePresentation; 3]>,
    /// `[f^*, p^*]` per degree.
    pub maps: Vec<[Matrix; 2]>,
    /// `δ^n : H^n(M'') → H^{n+1}(M')` for `n < nmax`.
    pub connecting: Vec<Matrix>,
    pub report: VerificationReport,
}

fn lattice_ring(rings: [RingSpec; 3]) -> Result<RingSpec> {
    if rings.iter().all(|r| *r == rings[0]) && rings[0].is_field() {
        return Ok(rings[0]);
    }
    if rings.iter().all(|r| *r != RingSpec::Rationals) {
        return Ok(RingSpec::Integers);
    }
    Err(Error::RingMismatch(rings[0], rings[2]))
}

fn relabel(m: &Matrix, ring: RingSpec) -> Matrix {
    Matrix::from_fn(ring, m.rows(), m.cols(), |i, j| m.get(i, j).clone())
}

fn divides(order: &Scalar, x: &Scalar) -> bool {
    if *order == 0u32 {
        return *x == 0u32;
    }
    match (scalar_to_integer(order), scalar_to_integer(x)) {
        (Some(o), Some(v)) => v % o == 0,
        _ => false,
    }
}

fn congruent(a: &Matrix, b: &Matrix, modulus: Option<u64>) -> bool {
    let m = Scalar::from(modulus.unwrap_or(0));
    a.shape() == b.shape()
        && a.entries().iter().zip(b.entries()).all(|(x, y)| if a.ring().is_field() { x == y } else { divides(&m, &(x - y)) })
}

fn sparse_columns(m: &Matrix) -> Vec<SparseVec> {
    (0..m.cols())
        .map(|j| (0..m.rows()).filter(|&i| *m.get(i, j) != 0u32).map(|i| (i, m.get(i, j).clone())).collect())
        .collect()
}

/// `(f ⊗ I) z` for a cochain with `en` tensor digits per coefficient.
fn apply_coefficient_map(f: &Matrix, en: usize, z: &SparseVec, target: RingSpec) -> SparseVec {
    let mut acc: std::collections::BTreeMap<usize, Scalar> = Default::default();
    for (idx, c) in z {
        let (v, jj) = (idx / en, idx % en);
        for w in 0..f.rows() {
            let x = f.get(w, v);
            if *x != 0u32 {
                *acc.entry(w * en + jj).or_insert_with(|| Scalar::from(0u32)) += x * c;
            }
        }
    }
    acc.into_iter().map(|(i, x)| (i, target.reduce(x))).filter(|(_, x)| *x != 0u32).collect()
}

/// Columns of `f ⊗ I_en`.
fn tensor_identity_columns(f: &Matrix, en: usize) -> Vec<SparseVec> {
    let cols = sparse_columns(f);
    let mut out = Vec::with_capacity(f.cols() * en);
    for col in &cols {
        for jj in 0..en {
            out.push(col.iter().map(|(w, x)| (w * en + jj, x.clone())).collect());
        }
    }
    out
}

/// Kernel of `x ↦ βx` on `⊕ Z/oB → ⊕ Z/oC` lies in the image of `α`.
fn exact_at(l: RingSpec, alpha: &Matrix, beta: &Matrix, ob: &[Scalar], oc: &[Scalar]) -> (bool, bool) {
    let kb = beta.cols();
    let gamma = beta.mul(alpha);
    let composite = (0..gamma.rows()).all(|i| (0..gamma.cols()).all(|j| divides(&oc[i], gamma.get(i, j))));
    let mut cols = sparse_columns(beta);
    for (i, o) in oc.iter().enumerate() {
        if *o != 0u32 && !l.is_field() {
            cols.push(vec![(i, o.clone())]);
        }
    }
    let kernel = sparse_kernel(&SparseMatrix::new(l, beta.rows(), cols));
    let mut gens = sparse_columns(alpha);
    for (i, o) in ob.iter().enumerate() {
        if *o != 0u32 && !l.is_field() {
            gens.push(vec![(i, o.clone())]);
        }
    }
    let contained = kernel.iter().all(|k| {
        let v: SparseVec = k.iter().filter(|(i, _)| *i < kb).cloned().collect();
        lattice_contains(l, kb, &gens, None, &v)
    });
    (composite, contained)
}

fn check_sequence(l: RingSpec, ses: &ShortExactSequence, report: &mut VerificationReport) {
    let (a, b, c) = (&ses.sub, &ses.middle, &ses.quotient);
    let (na, nb, nc) = (a.ring().modulus(), b.ring().modulus(), c.ring().modulus());
    let f = relabel(&ses.inclusion, l);
    let p = relabel(&ses.projection, l);
    let d = a.over().rank();
    let id = Matrix::identity(l, d);
    let (ca, cb, cc) = (relabel(a.coaction(), l), relabel(b.coaction(), l), relabel(c.coaction(), l));
    report.flag("inclusion is a comodule map", congruent(&cb.mul(&f), &f.kron(&id).mul(&ca), nb), None);
    report.flag("projection is a comodule map", congruent(&cc.mul(&p), &p.kron(&id).mul(&cb), nc), None);
    report.flag("projection after inclusion vanishes", congruent(&p.mul(&f), &Matrix::zeros(l, p.rows(), f.cols()), nc), None);
    let with_modulus = |m: &Matrix, n: Option<u64>| {
        let mut cols = sparse_columns(m);
        if let Some(n) = n {
            cols.extend((0..m.rows()).map(|i| vec![(i, Scalar::from(n))]));
        }
        SparseMatrix::new(l, m.rows(), cols)
    };
    let scalar_gens = |dim: usize, n: Option<u64>| -> Vec<SparseVec> {
        n.map(|n| (0..dim).map(|i| vec![(i, Scalar::from(n))]).collect()).unwrap_or_default()
    };
    let injective = sparse_kernel(&with_modulus(&f, nb)).iter().all(|k| {
        let v: SparseVec = k.iter().filter(|(i, _)| *i < f.cols()).cloned().collect();
        lattice_contains(l, f.cols(), &scalar_gens(f.cols(), na), None, &v)
    });
    report.flag("inclusion is injective", injective, None);
    let mut image = sparse_columns(&f);
    image.extend(scalar_gens(f.rows(), nb));
    let middle = sparse_kernel(&with_modulus(&p, nc)).iter().all(|k| {
        let v: SparseVec = k.iter().filter(|(i, _)| *i < p.cols()).cloned().collect();
        lattice_contains(l, p.cols(), &image, None, &v)
    });
    report.flag("kernel of projection is the image of inclusion", middle, None);
    let mut pcols = sparse_columns(&p);
    pcols.extend(scalar_gens(p.rows(), nc));
    let onto = (0..p.rows()).all(|i| lattice_contains(l, p.rows(), &pcols, None, &vec![(i, Scalar::from(1u32))]));
    report.flag("projection is surjective", onto, None);
}

/// Generator orders as seen in the lattice ring: over `Z` a free
/// generator of a group over `F_p` has order `p`.
fn orders(g: &CohomologyGroups, n: usize, l: RingSpec) -> Vec<Scalar> {
    let p = match g.ring() {
        RingSpec::PrimeField(p) if !l.is_field() => Some(Scalar::from(p)),
        _ => None,
    };
    g.generator_orders(n).into_iter().map(|o| if o == 0u32 { p.clone().unwrap_or(o) } else { o }).collect()
}

fn induced_map(f: &Matrix, source: &CohomologyGroups, target: &CohomologyGroups, n: usize, l: RingSpec) -> Result<Matrix> {
    let en = source.cobar().e.pow(n as u32);
    let cols: Vec<Vec<Scalar>> = source
        .generators(n)
        .iter()
        .map(|g| target.class_of(n, apply_coefficient_map(f, en, g.cochain(), target.ring())).map(|c| c.coordinates))
        .collect::<Result<_>>()?;
    Ok(Matrix::from_columns(l, target.generators(n).len(), &cols))
}

/// Builds the long exact sequence in degrees `0 … nmax` and checks that
/// it is exact at every interior term.
pub fn long_exact_sequence(g: &GroupSchemeData, ses: &ShortExactSequence, nmax: usize) -> Result<LongExactSequence> {
    let mods = [&ses.sub, &ses.middle, &ses.quotient];
    let l = lattice_ring([ses.sub.ring(), ses.middle.ring(), ses.quotient.ring()])?;
    let mut hs = Vec::with_capacity(3);
    for x in mods {
        let gx = g.base_change(x.ring())?;
        if !same_structure(gx.hopf(), x.over()) {
            return Err(Error::Malformed("a comodule of the sequence is not over the group scheme".into()));
        }
        hs.push(gx.hopf().clone());
    }
    if ses.inclusion.shape() != (ses.middle.rank(), ses.sub.rank()) || ses.projection.shape() != (ses.quotient.rank(), ses.middle.rank()) {
        return Err(Error::Malformed("maps of the sequence have the wrong shape".into()));
    }
    let mut report = VerificationReport::new();
    check_sequence(l, ses, &mut report);
    if let Some(c) = report.failures().next() {
        return Err(Error::NotExact(c.name.clone()));
    }
    let pivots: Vec<Option<usize>> = hs.iter().map(Cobar::pivot).collect();
    let normalize = pivots[0].is_some() && pivots.iter().all(|p| *p == pivots[0]);
    let groups: Vec<CohomologyGroups> =
        (0..3).map(|i| compute_groups(&hs[i], mods[i], nmax + 1, normalize)).collect::<Result<_>>()?;
    let (ga, gb, gc) = (&groups[0], &groups[1], &groups[2]);
    let f = relabel(&ses.inclusion, l);
    let p = relabel(&ses.projection, l);

    let mut maps = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        maps.push([induced_map(&f, ga, gb, n, l)?, induced_map(&p, gb, gc, n, l)?]);
    }
    let mut connecting = Vec::with_capacity(nmax);
    for n in 0..nmax {
        let en = gb.cobar().e.pow(n as u32);
        let en1 = en * gb.cobar().e;
        let pcols = tensor_identity_columns(&p, en);
        let fcols = tensor_identity_columns(&f, en1);
        let dn = gb.complex().differential(n);
        let mut cols = Vec::new();
        for z in gc.generators(n) {
            let y = lattice_solve(l, ses.quotient.rank() * en, &pcols, ses.quotient.ring().modulus(), z.cochain())
                .ok_or_else(|| Error::NotExact(format!("cannot lift a cocycle of degree {n}")))?;
            let mut dense = vec![Scalar::from(0u32); gb.cobar().rank(n)];
            for (i, x) in y {
                dense[i] = ses.middle.ring().reduce(x);
            }
            let w: SparseVec = dn.apply(&dense).into_iter().enumerate().filter(|(_, x)| *x != 0u32).collect();
            let x = lattice_solve(l, ses.middle.rank() * en1, &fcols, ses.middle.ring().modulus(), &w)
                .ok_or_else(|| Error::NotExact(format!("coboundary of a lift is not in the submodule in degree {}", n + 1)))?;
            let x: SparseVec = x.into_iter().map(|(i, v)| (i, ses.sub.ring().reduce(v))).filter(|(_, v)| *v != 0u32).collect();
            cols.push(ga.class_of(n + 1, x)?.coordinates);
        }
        connecting.push(Matrix::from_columns(l, ga.generators(n + 1).len(), &cols));
    }

    let empty = |rows: usize| Matrix::zeros(l, rows, 0);
    for n in 0..=nmax {
        let [fa, pb] = &maps[n];
        let into_sub = if n == 0 { empty(ga.generators(0).len()) } else { connecting[n - 1].clone() };
        let checks = [
            (format!("H^{n}(M')"), into_sub, fa.clone(), orders(ga, n, l), orders(gb, n, l)),
            (format!("H^{n}(M)"), fa.clone(), pb.clone(), orders(gb, n, l), orders(gc, n, l)),
        ];
        for (name, alpha, beta, ob, oc) in checks {
            let (zero, exact) = exact_at(l, &alpha, &beta, &ob, &oc);
            report.flag(&format!("composite through {name} vanishes"), zero, None);
            report.flag(&format!("exact at {name}"), exact, None);
        }
        if n < nmax {
            let (zero, exact) = exact_at(l, pb, &connecting[n], &orders(gc, n, l), &orders(ga, n + 1, l));
            report.flag(&format!("composite through H^{n}(M'') vanishes"), zero, None);
            report.flag(&format!("exact at H^{n}(M'')"), exact, None);
        }
    }
    let groups = (0..=nmax).map(|n| [ga.group(n).clone(), gb.group(n).clone(), gc.group(n).clone()]).collect();
    Ok(LongExactSequence { groups, maps, connecting, report })
}
