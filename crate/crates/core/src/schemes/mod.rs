//! Finite group schemes as commutative Hopf algebras: constant groups,
//! group algebras, roots of unity, Frobenius kernels of the additive group,
//! products, and subgroups cut out by Hopf ideals.

mod group;
mod registry;

pub use group::GroupTable;
pub use registry::{builtin_group, builtin_names, parse_builtin_ref, BuiltinRef};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hopf::{base_change, tensor_hopf, HopfAlgebraData, VerificationReport};
use crate::linalg::{
    columns_of, is_prime, rank, smith_normal_form, with_domain, Domain, EchelonBasis, Matrix, RingSpec, Row, Scalar,
};

/// How a group scheme was built.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub constructor: String,
    pub params: Value,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GroupSchemeData {
    hopf: HopfAlgebraData,
    pub name: String,
    pub provenance: Provenance,
}

impl GroupSchemeData {
    /// Wraps a commutative Hopf algebra.
    pub fn new(hopf: HopfAlgebraData, name: impl Into<String>, provenance: Provenance) -> Result<Self> {
        if !hopf.commutative() {
            return Err(Error::Malformed("the coordinate algebra of a group scheme must be commutative".into()));
        }
        Ok(GroupSchemeData { hopf, name: name.into(), provenance })
    }

    pub fn hopf(&self) -> &HopfAlgebraData {
        &self.hopf
    }

    pub fn ring(&self) -> RingSpec {
        self.hopf.ring()
    }

    pub fn rank(&self) -> usize {
        self.hopf.rank()
    }

    /// The group table when the scheme is constant.
    pub fn constant_table(&self) -> Option<GroupTable> {
        if self.provenance.constructor != "constant" {
            return None;
        }
        serde_json::from_value(self.provenance.params.get("table")?.clone()).ok()
    }

    pub fn base_change(&self, target: RingSpec) -> Result<Self> {
        let mut params = self.provenance.params.clone();
        if let Some(obj) = params.as_object_mut() {
            obj.insert("ring".into(), json!(target.to_string()));
        }
        GroupSchemeData::new(
            base_change(&self.hopf, target)?,
            self.name.clone(),
            Provenance { constructor: self.provenance.constructor.clone(), params },
        )
    }
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

fn provenance(constructor: &str, params: Value) -> Provenance {
    Provenance { constructor: constructor.into(), params }
}

/// Coordinate algebra of the constant group scheme: functions on the group
/// with idempotent basis `f_g`.
pub fn constant_group_scheme(table: &GroupTable, ring: RingSpec) -> Result<GroupSchemeData> {
    let n = table.order();
    let one = ring.one();
    let mut mul = Matrix::zeros(ring, n, n * n);
    let mut comul = Matrix::zeros(ring, n * n, n);
    let mut antipode = Matrix::zeros(ring, n, n);
    for g in 0..n {
        mul.set(g, g * n + g, one.clone());
        antipode.set(table.inverse(g), g, one.clone());
        for h in 0..n {
            comul.set(g * n + h, table.mul(g, h), one.clone());
        }
    }
    let unit = Matrix::from_fn(ring, n, 1, |_, _| ring.one());
    let mut counit = Matrix::zeros(ring, 1, n);
    counit.set(0, table.identity(), one);
    let hopf = HopfAlgebraData::new(ring, labels("f", n), mul, unit, comul, counit, antipode)?;
    let name = format!("constant group of order {n}");
    GroupSchemeData::new(hopf, name, provenance("constant", json!({ "table": table.rows(), "ring": ring.to_string() })))
}

/// The group algebra `k[Γ]` with group-like basis `e_g`. It is a group
/// scheme (the Cartier dual of the constant one) exactly when `Γ` is
/// abelian.
pub fn group_algebra(table: &GroupTable, ring: RingSpec) -> Result<HopfAlgebraData> {
    let n = table.order();
    let one = ring.one();
    let mut mul = Matrix::zeros(ring, n, n * n);
    let mut comul = Matrix::zeros(ring, n * n, n);
    let mut antipode = Matrix::zeros(ring, n, n);
    for g in 0..n {
        comul.set(g * n + g, g, one.clone());
        antipode.set(table.inverse(g), g, one.clone());
        for h in 0..n {
            mul.set(table.mul(g, h), g * n + h, one.clone());
        }
    }
    let mut unit = Matrix::zeros(ring, n, 1);
    unit.set(table.identity(), 0, one);
    let counit = Matrix::from_fn(ring, 1, n, |_, _| ring.one());
    HopfAlgebraData::new(ring, labels("e", n), mul, unit, comul, counit, antipode)
}

/// `k[Γ]` for abelian `Γ`, as a group scheme.
pub fn group_algebra_scheme(table: &GroupTable, ring: RingSpec) -> Result<GroupSchemeData> {
    let hopf = group_algebra(table, ring)?;
    let name = format!("dual of the constant group of order {}", table.order());
    GroupSchemeData::new(hopf, name, provenance("group-algebra", json!({ "table": table.rows(), "ring": ring.to_string() })))
}

/// `μ_n = Spec k[t]/(t^n - 1)` on the basis `1, t, …, t^{n-1}`.
pub fn mu_n(n: usize, ring: RingSpec) -> Result<GroupSchemeData> {
    if n == 0 {
        return Err(Error::Malformed("mu_n needs n >= 1".into()));
    }
    let one = ring.one();
    let mut mul = Matrix::zeros(ring, n, n * n);
    let mut comul = Matrix::zeros(ring, n * n, n);
    let mut antipode = Matrix::zeros(ring, n, n);
    for i in 0..n {
        comul.set(i * n + i, i, one.clone());
        antipode.set((n - i) % n, i, one.clone());
        for j in 0..n {
            mul.set((i + j) % n, i * n + j, one.clone());
        }
    }
    let mut unit = Matrix::zeros(ring, n, 1);
    unit.set(0, 0, one);
    let counit = Matrix::from_fn(ring, 1, n, |_, _| ring.one());
    let hopf = HopfAlgebraData::new(ring, labels("t^", n), mul, unit, comul, counit, antipode)?;
    GroupSchemeData::new(hopf, format!("mu_{n}"), provenance("mu", json!({ "n": n, "ring": ring.to_string() })))
}

fn binomial_mod(n: usize, k: usize, p: u64) -> u64 {
    // Lucas' theorem
    let (mut n, mut k, mut acc) = (n as u64, k as u64, 1u64);
    while n > 0 || k > 0 {
        let (a, b) = (n % p, k % p);
        if b > a {
            return 0;
        }
        let mut c = 1u64;
        for i in 0..b {
            c = c * (a - i) / (i + 1);
        }
        acc = acc * (c % p) % p;
        n /= p;
        k /= p;
    }
    acc
}

/// The `r`-th Frobenius kernel `α_{p^r} = Spec k[t]/(t^{p^r})` of the
/// additive group, with `t` primitive.
pub fn alpha_pr(p: u64, r: u32, ring: RingSpec) -> Result<GroupSchemeData> {
    if !is_prime(p) {
        return Err(Error::Malformed(format!("{p} is not prime")));
    }
    if r == 0 {
        return Err(Error::Malformed("alpha_{p^r} needs r >= 1".into()));
    }
    if ring.characteristic() != p {
        return Err(Error::CharacteristicMismatch { expected: p, found: ring.characteristic(), ring });
    }
    let n = p.checked_pow(r).filter(|&n| n <= 1 << 12).ok_or_else(|| Error::Malformed("p^r is too large".into()))? as usize;
    let one = ring.one();
    let mut mul = Matrix::zeros(ring, n, n * n);
    let mut comul = Matrix::zeros(ring, n * n, n);
    let mut antipode = Matrix::zeros(ring, n, n);
    for i in 0..n {
        antipode.set(i, i, ring.from_i64(if i % 2 == 0 { 1 } else { -1 }));
        for j in 0..n {
            if i + j < n {
                mul.set(i + j, i * n + j, one.clone());
            }
        }
        for k in 0..=i {
            let c = binomial_mod(i, k, p);
            if c != 0 {
                comul.set(k * n + (i - k), i, ring.from_i64(c as i64));
            }
        }
    }
    let mut unit = Matrix::zeros(ring, n, 1);
    unit.set(0, 0, one.clone());
    let mut counit = Matrix::zeros(ring, 1, n);
    counit.set(0, 0, one);
    let hopf = HopfAlgebraData::new(ring, labels("t^", n), mul, unit, comul, counit, antipode)?;
    GroupSchemeData::new(hopf, format!("alpha_{n}"), provenance("alpha", json!({ "p": p, "r": r, "ring": ring.to_string() })))
}

/// `G₁ × G₂` with coordinate algebra `k[G₁] ⊗ k[G₂]`.
pub fn product(g1: &GroupSchemeData, g2: &GroupSchemeData) -> Result<GroupSchemeData> {
    let hopf = tensor_hopf(g1.hopf(), g2.hopf())?;
    let mut prov = provenance("product", json!({ "factors": [g1.name, g2.name] }));
    if let (Some(a), Some(b)) = (g1.constant_table(), g2.constant_table()) {
        // the product of constant groups is constant on the product group
        prov = provenance("constant", json!({ "table": a.direct_product(&b).rows(), "ring": g1.ring().to_string() }));
    }
    GroupSchemeData::new(hopf, format!("{} x {}", g1.name, g2.name), prov)
}

/// A closed subgroup scheme `H ⊆ G` presented by `k[G] → k[H]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SubgroupData {
    pub ambient: GroupSchemeData,
    /// `d_H × d_G` surjection.
    pub projection: Matrix,
    /// A right inverse of the projection.
    pub section: Matrix,
    pub sub: GroupSchemeData,
}

/// Saturates the generators to the ideal they span, as a module basis.
fn saturate_ideal<D: Domain>(d: &D, h: &HopfAlgebraData, gens: Vec<Row<D::E>>) -> Vec<Row<D::E>> {
    let n = h.rank();
    let mult: Vec<Vec<Row<D::E>>> = (0..n)
        .map(|j| columns_of(d, &h.algebra().left_mult(&crate::hopf::basis_vector(h.ring(), n, j))))
        .collect();
    let apply = |m: &Vec<Row<D::E>>, x: &Row<D::E>| -> Row<D::E> {
        let mut acc: Row<D::E> = Vec::new();
        for (i, v) in x {
            acc = crate::linalg::row_combine(d, &d.one(), &acc, v, &m[*i]);
        }
        acc
    };
    let mut basis = EchelonBasis::new(d.clone(), gens, true).rows;
    loop {
        let mut all = basis.clone();
        for x in &basis {
            for m in &mult {
                all.push(apply(m, x));
            }
        }
        let next = EchelonBasis::new(d.clone(), all, true).rows;
        if next == basis {
            return basis;
        }
        basis = next;
    }
}

/// Projection onto the span of the non-pivot standard basis vectors, with
/// pivots taken at the highest possible index. `None` when some pivot is
/// not a unit.
fn standard_projection<D: Domain>(d: &D, n: usize, ideal: &[Row<D::E>]) -> Option<(Vec<usize>, Vec<Row<D::E>>)> {
    let rev = |r: &Row<D::E>| -> Row<D::E> {
        let mut out: Row<D::E> = r.iter().map(|(c, v)| (n - 1 - c, v.clone())).collect();
        out.reverse();
        out
    };
    let basis = EchelonBasis::new(d.clone(), ideal.iter().map(rev), true).rows;
    let mut pivot_rows = Vec::new();
    for r in &basis {
        let (c, v) = &r[0];
        if !d.is_unit(v) {
            return None;
        }
        let inv = d.inv(v);
        pivot_rows.push((n - 1 - c, rev(&crate::linalg::row_scale(d, &inv, r))));
    }
    let pivots: Vec<usize> = pivot_rows.iter().map(|(c, _)| *c).collect();
    let keep: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    // column j of the projection, in ambient coordinates restricted to `keep`
    let mut images: Vec<Row<D::E>> = Vec::with_capacity(n);
    for j in 0..n {
        if let Some((_, row)) = pivot_rows.iter().find(|(c, _)| *c == j) {
            // e_j ≡ e_j - row, which is supported on kept indices
            let img: Row<D::E> = row
                .iter()
                .filter(|(c, _)| *c != j)
                .map(|(c, v)| (keep.binary_search(c).expect("reduced row"), d.neg(v)))
                .collect();
            images.push(img);
        } else {
            images.push(vec![(keep.binary_search(&j).unwrap(), d.one())]);
        }
    }
    Some((keep, images))
}

/// Builds `H ⊆ G` from generators of a Hopf ideal `I` (the columns of
/// `ideal_gens`). The generators are first saturated to the ideal they
/// generate, then the Hopf ideal conditions are checked.
pub fn subgroup_from_ideal(g: &GroupSchemeData, ideal_gens: &Matrix) -> Result<SubgroupData> {
    let h = g.hopf();
    let ring = h.ring();
    let n = h.rank();
    if ideal_gens.rows() != n || ideal_gens.ring() != ring {
        return Err(Error::Malformed(format!("ideal generators must be columns of length {n} over {ring}")));
    }
    if let RingSpec::IntegersMod(_) = ring {
        return Err(Error::UnsupportedRing { ring, what: "subgroups from Hopf ideals" });
    }
    let (ideal, projection, section) = with_domain!(ring, d => {
        let ideal = saturate_ideal(&d, h, columns_of(&d, ideal_gens));
        let ideal_m = crate::linalg::matrix_from_columns(&d, ring, n, &ideal);
        match standard_projection(&d, n, &ideal) {
            Some((keep, images)) => {
                let proj = crate::linalg::matrix_from_columns(&d, ring, keep.len(), &images);
                let mut sec = Matrix::zeros(ring, n, keep.len());
                for (i, k) in keep.iter().enumerate() {
                    sec.set(*k, i, ring.one());
                }
                (ideal_m, proj, sec)
            }
            None => smith_projection(&ideal_m)?,
        }
    });
    let pi = &projection;
    let sigma = &section;
    for (j, x) in ideal.columns().into_iter().enumerate() {
        let x = Matrix::column_vector(ring, x);
        let fail = |condition| Err(Error::HopfIdealViolation { condition, generator: j });
        for b in 0..n {
            let e = crate::hopf::basis_vector(ring, n, b);
            if !pi.mul(&h.algebra().product(&e, &x)).is_zero() || !pi.mul(&h.algebra().product(&x, &e)).is_zero() {
                return fail("ideal");
            }
        }
        if !pi.kron(pi).mul(h.comul()).mul(&x).is_zero() {
            return fail("coideal");
        }
        if !pi.mul(h.antipode()).mul(&x).is_zero() {
            return fail("antipode-stable");
        }
        if !h.counit().mul(&x).is_zero() {
            return fail("counit");
        }
    }
    let m = pi.mul(h.mul()).mul(&sigma.kron(sigma));
    let unit = pi.mul(h.unit());
    let comul = pi.kron(pi).mul(h.comul()).mul(sigma);
    let counit = h.counit().mul(sigma);
    let s = pi.mul(h.antipode()).mul(sigma);
    let keep_labels = quotient_labels(h, pi);
    let sub_hopf = HopfAlgebraData::new(ring, keep_labels, m, unit, comul, counit, s)?;
    let sub = GroupSchemeData::new(
        sub_hopf,
        format!("subgroup of {}", g.name),
        provenance("subgroup", json!({ "ambient": g.name, "ideal": ideal.to_string_rows() })),
    )?;
    Ok(SubgroupData { ambient: g.clone(), projection, section, sub })
}

fn quotient_labels(h: &HopfAlgebraData, pi: &Matrix) -> Vec<String> {
    (0..pi.rows())
        .map(|i| {
            // a basis vector mapping exactly to the i-th coordinate vector names it
            (0..pi.cols())
                .find(|&j| (0..pi.rows()).all(|k| *pi.get(k, j) == if k == i { pi.ring().one() } else { pi.ring().zero() }))
                .map(|j| h.basis_labels()[j].clone())
                .unwrap_or_else(|| format!("q{i}"))
        })
        .collect()
}

/// Projection from the Smith form of the ideal lattice, for ideals whose
/// complement is not spanned by standard basis vectors.
fn smith_projection(ideal: &Matrix) -> Result<(Matrix, Matrix, Matrix)> {
    let ring = ideal.ring();
    let n = ideal.rows();
    let (u, dm, _) = smith_normal_form(ideal)?;
    let r = (0..n.min(dm.cols())).filter(|&i| *dm.get(i, i) != 0u32).count();
    if (0..r).any(|i| !ring.is_unit(dm.get(i, i))) {
        return Err(Error::Malformed("quotient by the ideal is not free".into()));
    }
    let keep: Vec<usize> = (r..n).collect();
    let proj = u.select_rows(&keep);
    let uinv = crate::linalg::inverse(&u).ok_or_else(|| Error::Internal("Smith transform not invertible".into()))?;
    let sec = uinv.select_columns(&keep);
    Ok((ideal.clone(), proj, sec))
}

/// Checks that the projection is a surjective Hopf algebra map.
pub fn verify_subgroup(s: &SubgroupData) -> VerificationReport {
    let (g, h) = (s.ambient.hopf(), s.sub.hopf());
    let pi = &s.projection;
    let mut r = VerificationReport::new();
    r.compare("projection has a section", &pi.mul(&s.section), &h.identity());
    r.compare("projection is multiplicative", &pi.mul(g.mul()), &h.mul().mul(&pi.kron(pi)));
    r.compare("projection is unital", &pi.mul(g.unit()), h.unit());
    r.compare("projection is comultiplicative", &pi.kron(pi).mul(g.comul()), &h.comul().mul(pi));
    r.compare("projection preserves counit", g.counit(), &h.counit().mul(pi));
    r.compare("projection commutes with antipode", &pi.mul(g.antipode()), &h.antipode().mul(pi));
    r
}

/// Whether the trace form `(x, y) ↦ tr(xy)` is nondegenerate.
pub fn is_separable(h: &HopfAlgebraData) -> Result<bool> {
    let ring = h.ring();
    if !ring.is_field() {
        return Err(Error::UnsupportedRing { ring, what: "separability needs a field" });
    }
    let gram = trace_form(h);
    Ok(rank(&gram)? == h.rank())
}

/// Traces of left multiplication by each basis vector.
pub(crate) fn regular_traces(h: &HopfAlgebraData) -> Vec<Scalar> {
    let d = h.rank();
    let ring = h.ring();
    (0..d)
        .map(|k| (0..d).fold(ring.zero(), |acc, j| ring.add(&acc, h.mul().get(j, k * d + j))))
        .collect()
}

/// Gram matrix of the trace form on the basis.
pub fn trace_form(h: &HopfAlgebraData) -> Matrix {
    let d = h.rank();
    let ring = h.ring();
    let t = regular_traces(h);
    Matrix::from_fn(ring, d, d, |i, j| {
        (0..d).fold(ring.zero(), |acc, k| ring.add(&acc, &ring.mul(h.mul().get(k, i * d + j), &t[k])))
    })
}

/// The matrix coefficients `α_{ji} ∈ k[G]` with `Δ(e_i) = Σ_j e_j ⊗ α_{ji}`.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixCoefficients {
    ring: RingSpec,
    rank: usize,
    /// `entries[j][i]` is the coordinate vector of `α_{ji}`.
    entries: Vec<Vec<Vec<Scalar>>>,
}

impl MatrixCoefficients {
    pub fn get(&self, j: usize, i: usize) -> &[Scalar] {
        &self.entries[j][i]
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `e_i = Σ_j ε(e_j) α_{ji}` for every `i`.
    pub fn counit_identity_holds(&self, h: &HopfAlgebraData) -> bool {
        let ring = self.ring;
        (0..self.rank).all(|i| {
            let mut acc = vec![ring.zero(); self.rank];
            for j in 0..self.rank {
                let e = h.counit().get(0, j);
                for (k, x) in self.entries[j][i].iter().enumerate() {
                    acc[k] = ring.add(&acc[k], &ring.mul(e, x));
                }
            }
            acc.iter().enumerate().all(|(k, x)| *x == if k == i { ring.one() } else { ring.zero() })
        })
    }
}

pub fn matrix_coefficients(g: &GroupSchemeData) -> MatrixCoefficients {
    let h = g.hopf();
    let d = h.rank();
    let entries = (0..d)
        .map(|j| (0..d).map(|i| (0..d).map(|k| h.comul().get(j * d + k, i).clone()).collect()).collect())
        .collect();
    MatrixCoefficients { ring: h.ring(), rank: d, entries }
}
