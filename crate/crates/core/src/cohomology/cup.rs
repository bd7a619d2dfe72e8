use std::collections::{BTreeMap, HashMap};

use serde::{Serialize, Serializer};

use super::{compute_groups, is_trivial, CohomologyClass, CohomologyGroups};
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebraData, VerificationReport};
use crate::linalg::{lattice_contains, sparse_kernel, ModulePresentation, RingSpec, Scalar, SparseMatrix, SparseVec};
use crate::rep::{same_structure, GAlgebraData};
use crate::schemes::GroupSchemeData;

fn accumulate(ring: RingSpec, acc: BTreeMap<usize, Scalar>) -> SparseVec {
    acc.into_iter().map(|(i, x)| (i, ring.reduce(x))).filter(|(_, x)| *x != 0u32).collect()
}

fn sign(ring: RingSpec, negative: bool, x: Scalar) -> Scalar {
    if negative {
        ring.neg(&x)
    } else {
        x
    }
}

/// `x ∪ y` for trivial rank-one coefficients: concatenation of tensors.
pub fn cup_product(cg: &CohomologyGroups, x: &CohomologyClass, y: &CohomologyClass) -> Result<CohomologyClass> {
    if !cg.has_trivial_coefficients() || cg.cobar().m != 1 {
        return Err(Error::Malformed("cup products need trivial rank-one coefficients".into()));
    }
    let n = x.degree + y.degree;
    if n > cg.top_degree() {
        return Err(Error::DegreeOverflow { requested: n, available: cg.top_degree() });
    }
    let ring = cg.ring();
    let eq = cg.cobar().e.pow(y.degree as u32);
    let mut acc = BTreeMap::new();
    for (i, a) in x.cochain() {
        for (j, b) in y.cochain() {
            acc.insert(i * eq + j, ring.mul(a, b));
        }
    }
    cg.class_of(n, accumulate(ring, acc))
}

fn difference_is_zero(cg: &CohomologyGroups, a: &CohomologyClass, b: &CohomologyClass, negate: bool) -> Result<bool> {
    let ring = cg.ring();
    let coords: Vec<Scalar> =
        a.coordinates.iter().zip(&b.coordinates).map(|(u, v)| if negate { ring.add(u, v) } else { ring.sub(u, v) }).collect();
    Ok(cg.class_from_coordinates(a.degree, &coords)?.is_zero())
}

/// `x ∪ y = (-1)^{pq} y ∪ x` on all pairs of generators in positive
/// degrees up to the computed range.
pub fn graded_commutativity_check(cg: &CohomologyGroups) -> Result<VerificationReport> {
    let mut r = VerificationReport::new();
    let top = cg.top_degree();
    for p in 1..=top {
        for q in p..=top.saturating_sub(p) {
            let mut ok = true;
            for x in cg.generators(p) {
                for y in cg.generators(q) {
                    let xy = cup_product(cg, x, y)?;
                    let yx = cup_product(cg, y, x)?;
                    ok &= difference_is_zero(cg, &xy, &yx, p * q % 2 == 1)?;
                }
            }
            r.flag(&format!("graded commutativity in degrees ({p}, {q})"), ok, None);
        }
    }
    Ok(r)
}

fn digits(mut idx: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for k in (0..len).rev() {
        out[k] = idx % base;
        idx /= base;
    }
    out
}

fn undigits(ds: &[usize], base: usize) -> usize {
    ds.iter().fold(0, |acc, d| acc * base + d)
}

/// The dual algebra `A = k[G]^*` and its bar resolution, used to compose
/// extensions.
struct Bar<'a> {
    h: &'a HopfAlgebraData,
    ring: RingSpec,
    d: usize,
    lifts: HashMap<(usize, usize), Vec<Scalar>>,
}

impl<'a> Bar<'a> {
    /// `δ_a δ_b` in the dual basis.
    fn product(&self, a: usize, b: usize) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        let r = a * self.d + b;
        (0..self.d).map(move |c| (c, self.h.comul().get(r, c))).filter(|(_, x)| **x != 0u32)
    }

    fn augmentation(&self, a: usize) -> &Scalar {
        self.h.unit().get(a, 0)
    }

    /// `d : B_k → B_{k-1}` on a basis tensor `a_0 ⊗ … ⊗ a_k`.
    fn boundary(&self, ds: &[usize]) -> BTreeMap<usize, Scalar> {
        let ring = self.ring;
        let k = ds.len() - 1;
        let mut out: BTreeMap<usize, Scalar> = BTreeMap::new();
        for i in 0..k {
            for (c, x) in self.product(ds[i], ds[i + 1]) {
                let mut t = ds[..i].to_vec();
                t.push(c);
                t.extend_from_slice(&ds[i + 2..]);
                let e = out.entry(undigits(&t, self.d)).or_insert_with(|| ring.zero());
                *e = ring.add(e, &sign(ring, i % 2 == 1, x.clone()));
            }
        }
        let eps = self.augmentation(ds[k]);
        if *eps != 0u32 {
            let e = out.entry(undigits(&ds[..k], self.d)).or_insert_with(|| ring.zero());
            *e = ring.add(e, &sign(ring, k % 2 == 1, eps.clone()));
        }
        out
    }

    /// `a · v` for `v ∈ B_k`, acting on the first factor.
    fn act(&self, a: usize, v: &[Scalar], k: usize, out: &mut [Scalar], scale: &Scalar) {
        let ring = self.ring;
        let tail = self.d.pow(k as u32);
        for (idx, x) in v.iter().enumerate() {
            if *x == 0u32 {
                continue;
            }
            let (b0, rest) = (idx / tail, idx % tail);
            for (c, y) in self.product(a, b0) {
                let t = c * tail + rest;
                out[t] = ring.add(&out[t], &ring.mul(&ring.mul(scale, x), y));
            }
        }
    }

    /// `F_k(1 ⊗ rest)` for the chain map lifting the cocycle `x` of degree
    /// `p`, where `rest` has `p + k` factors.
    fn lift(&mut self, x: &[Scalar], p: usize, k: usize, rest: usize) -> Vec<Scalar> {
        if let Some(v) = self.lifts.get(&(k, rest)) {
            return v.clone();
        }
        let ring = self.ring;
        let d = self.d;
        let size = d.pow(k as u32 + 1);
        let mut out = vec![ring.zero(); size];
        if k == 0 {
            if x[rest] != 0u32 {
                for u in 0..d {
                    let one = self.h.counit().get(0, u);
                    out[u] = ring.mul(&x[rest], one);
                }
            }
        } else {
            let mut ds = vec![0];
            ds.extend(digits(rest, d, p + k));
            // s(F_{k-1}(d(1 ⊗ rest)))
            let mut inner = vec![ring.zero(); d.pow(k as u32)];
            for (t, c) in self.boundary(&ds) {
                if c == 0u32 {
                    continue;
                }
                let tail = d.pow((p + k - 1) as u32);
                let (b0, r) = (t / tail, t % tail);
                let f = self.lift(x, p, k - 1, r);
                self.act(b0, &f, k - 1, &mut inner, &c);
            }
            let one_row = self.h.counit();
            for (idx, val) in inner.iter().enumerate() {
                if *val == 0u32 {
                    continue;
                }
                for u in 0..d {
                    let e = one_row.get(0, u);
                    if *e != 0u32 {
                        let t = u * d.pow(k as u32) + idx;
                        out[t] = ring.add(&out[t], &ring.mul(val, e));
                    }
                }
            }
        }
        self.lifts.insert((k, rest), out.clone());
        out
    }
}

fn dense(ring: RingSpec, n: usize, v: &SparseVec) -> Vec<Scalar> {
    let mut out = vec![ring.zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// The Yoneda composite of two cocycles with trivial rank-one
/// coefficients, given on the full cobar basis: `x` of degree `p` is lifted
/// to a chain map of the bar resolution of `k` over `k[G]^*` and then
/// followed by `y` of degree `q`. Agrees with `x ∪ y` up to the sign
/// `(-1)^{pq}` on cohomology.
pub fn yoneda_product(h: &HopfAlgebraData, x: &SparseVec, p: usize, y: &SparseVec, q: usize) -> Result<SparseVec> {
    let ring = h.ring();
    let d = h.rank();
    let total = d.pow((p + q) as u32);
    if total > super::size_limit() {
        return Err(Error::SizeLimit { rank: total, limit: super::size_limit() });
    }
    let xd = dense(ring, d.pow(p as u32), x);
    let yd = dense(ring, d.pow(q as u32), y);
    let mut bar = Bar { h, ring, d, lifts: HashMap::new() };
    let tail = d.pow(q as u32);
    let mut out = Vec::new();
    for rest in 0..total {
        let f = bar.lift(&xd, p, q, rest);
        let mut acc = ring.zero();
        for (idx, c) in f.iter().enumerate() {
            if *c == 0u32 {
                continue;
            }
            let (c0, r) = (idx / tail, idx % tail);
            let eps = bar.augmentation(c0);
            if *eps != 0u32 && yd[r] != 0u32 {
                acc = ring.add(&acc, &ring.mul(&ring.mul(c, eps), &yd[r]));
            }
        }
        if acc != 0u32 {
            out.push((rest, acc));
        }
    }
    Ok(out)
}

/// Structure constants needed for the product on `C^*(G, A)`.
struct Cross<'a> {
    h: &'a HopfAlgebraData,
    a: &'a GAlgebraData,
    /// `Δ^{(p)}(e_c)` per `p` then per `c`.
    iterated: Vec<Vec<Vec<(usize, Scalar)>>>,
}

impl<'a> Cross<'a> {
    fn new(h: &'a HopfAlgebraData, a: &'a GAlgebraData, top: usize) -> Self {
        let ring = h.ring();
        let d = h.rank();
        let counit = (0..d).map(|c| accumulate(ring, BTreeMap::from([(0, h.counit().get(0, c).clone())]))).collect();
        let mut iterated: Vec<Vec<SparseVec>> = vec![counit];
        for p in 1..=top {
            let mut level = Vec::with_capacity(d);
            for c in 0..d {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                if p == 1 {
                    acc.insert(c, ring.one());
                } else {
                    for r in 0..d * d {
                        let x = h.comul().get(r, c);
                        if *x == 0u32 {
                            continue;
                        }
                        let (a0, b0) = (r / d, r % d);
                        for (t, y) in &iterated[p - 1][a0] {
                            let e = acc.entry(t * d + b0).or_insert_with(|| ring.zero());
                            *e = ring.add(e, &ring.mul(x, y));
                        }
                    }
                }
                level.push(accumulate(ring, acc));
            }
            iterated.push(level);
        }
        Cross { h, a, iterated }
    }

    /// `(x ⊗ h) × (y ⊗ k) = x y_0 ⊗ h Δ^{(p)}(y_1) ⊗ k`.
    fn product(&self, x: &SparseVec, p: usize, y: &SparseVec, q: usize) -> SparseVec {
        let ring = self.h.ring();
        let d = self.h.rank();
        let m = self.a.rank();
        let (dp, dq) = (d.pow(p as u32), d.pow(q as u32));
        let coaction = self.a.comodule.coaction();
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (xi, cx) in x {
            let (xa, hidx) = (xi / dp, xi % dp);
            let hs = digits(hidx, d, p);
            for (yi, cy) in y {
                let (yb, kidx) = (yi / dq, yi % dq);
                let cxy = ring.mul(cx, cy);
                for r in 0..m * d {
                    let co = coaction.get(r, yb);
                    if *co == 0u32 {
                        continue;
                    }
                    let (w, c1) = (r / d, r % d);
                    for (t, tc) in &self.iterated[p][c1] {
                        let ts = digits(*t, d, p);
                        let mut terms: Vec<(usize, Scalar)> = vec![(0, ring.mul(&cxy, &ring.mul(co, tc)))];
                        for i in 0..p {
                            let col = hs[i] * d + ts[i];
                            let mut next = Vec::new();
                            for (u, val) in &terms {
                                for z in 0..d {
                                    let mz = self.h.mul().get(z, col);
                                    if *mz != 0u32 {
                                        next.push((u * d + z, ring.mul(val, mz)));
                                    }
                                }
                            }
                            terms = next;
                        }
                        for z in 0..m {
                            let ma = self.a.mul.get(z, xa * m + w);
                            if *ma == 0u32 {
                                continue;
                            }
                            for (hh, val) in &terms {
                                let idx = (z * dp + hh) * dq + kidx;
                                let e = acc.entry(idx).or_insert_with(|| ring.zero());
                                *e = ring.add(e, &ring.mul(val, ma));
                            }
                        }
                    }
                }
            }
        }
        accumulate(ring, acc)
    }
}

/// The product `C^p(G, A) × C^q(G, A) → C^{p+q}(G, A)` on the full cobar
/// basis.
pub fn cross_product(h: &HopfAlgebraData, a: &GAlgebraData, x: &SparseVec, p: usize, y: &SparseVec, q: usize) -> SparseVec {
    Cross::new(h, a, p).product(x, p, y, q)
}

fn add_into(ring: RingSpec, acc: &mut BTreeMap<usize, Scalar>, v: &SparseVec, negate: bool) {
    for (i, x) in v {
        let e = acc.entry(*i).or_insert_with(|| ring.zero());
        *e = ring.add(e, &sign(ring, negate, x.clone()));
    }
}

fn apply(m: &SparseMatrix, v: &SparseVec) -> SparseVec {
    let ring = m.ring();
    let mut acc = BTreeMap::new();
    for (j, x) in v {
        for (i, y) in m.column(*j) {
            let e = acc.entry(*i).or_insert_with(|| ring.zero());
            *e = ring.add(e, &ring.mul(x, y));
        }
    }
    accumulate(ring, acc)
}

/// `∂(u × v) = ∂u × v + (-1)^p u × ∂v` on basis cochains with
/// `p + q < top`.
fn leibniz_check(cross: &Cross, cg: &CohomologyGroups, top: usize) -> bool {
    let ring = cg.ring();
    let cx = cg.complex();
    for n in 0..top {
        for p in 0..=n {
            let q = n - p;
            for u in 0..cg.cobar().rank(p) {
                let uv = vec![(u, ring.one())];
                let du = apply(cx.differential(p), &uv);
                for v in 0..cg.cobar().rank(q) {
                    let vv = vec![(v, ring.one())];
                    let lhs = apply(cx.differential(n), &cross.product(&uv, p, &vv, q));
                    let mut acc = BTreeMap::new();
                    add_into(ring, &mut acc, &cross.product(&du, p + 1, &vv, q), false);
                    add_into(ring, &mut acc, &cross.product(&uv, p, &apply(cx.differential(q), &vv), q + 1), p % 2 == 1);
                    if lhs != accumulate(ring, acc) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// How products of classes were computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProductRoute {
    /// The explicit cochain-level product.
    CrossProduct,
    /// Composition of extensions over the bar resolution.
    Yoneda,
}

fn serialize_scalars<S: Serializer>(v: &[Scalar], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// `Σ c_i m_i = 0` where each `m_i` lists generator indices multiplied
/// left to right.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationWitness {
    pub degree: usize,
    pub monomials: Vec<Vec<usize>>,
    #[serde(serialize_with = "serialize_scalars")]
    pub coefficients: Vec<Scalar>,
}

/// `H^*(G, A)` through degree `degree_cap` for a `G`-algebra `A`.
#[derive(Serialize)]
pub struct AlgebraCohomologyRing {
    pub degree_cap: usize,
    pub groups: Vec<ModulePresentation>,
    /// Algebra generators: all module generators of `H^0`, then module
    /// generators of `H^n` modulo products of positive-degree classes.
    pub generators: Vec<CohomologyClass>,
    pub relations: Vec<RelationWitness>,
    pub route: ProductRoute,
    pub report: VerificationReport,
    #[serde(skip)]
    cohomology: CohomologyGroups,
    #[serde(skip)]
    products: Products,
}

enum Products {
    Cross(Vec<Vec<Vec<(usize, Scalar)>>>, GAlgebraData),
    Yoneda(GAlgebraData),
}

impl AlgebraCohomologyRing {
    pub fn cohomology(&self) -> &CohomologyGroups {
        &self.cohomology
    }

    /// The product of two classes.
    pub fn multiply(&self, x: &CohomologyClass, y: &CohomologyClass) -> Result<CohomologyClass> {
        multiply(&self.cohomology, &self.products, x, y)
    }
}

fn multiply(cg: &CohomologyGroups, products: &Products, x: &CohomologyClass, y: &CohomologyClass) -> Result<CohomologyClass> {
    let n = x.degree + y.degree;
    if n > cg.top_degree() {
        return Err(Error::DegreeOverflow { requested: n, available: cg.top_degree() });
    }
    let h = cg.cobar();
    let v = match products {
        Products::Cross(iterated, a) => {
            let cross = Cross { h: a.over(), a, iterated: iterated.clone() };
            cross.product(x.cochain(), x.degree, y.cochain(), y.degree)
        }
        Products::Yoneda(a) => {
            let ring = cg.ring();
            let m = a.rank();
            let (dp, dq) = (h.d.pow(x.degree as u32), h.d.pow(y.degree as u32));
            let split = |v: &SparseVec, block: usize| -> Vec<SparseVec> {
                let mut out = vec![Vec::new(); m];
                for (i, c) in v {
                    out[i / block].push((i % block, c.clone()));
                }
                out
            };
            let (xs, ys) = (split(x.cochain(), dp), split(y.cochain(), dq));
            let mut acc = BTreeMap::new();
            for (ia, xa) in xs.iter().enumerate().filter(|(_, v)| !v.is_empty()) {
                for (ib, yb) in ys.iter().enumerate().filter(|(_, v)| !v.is_empty()) {
                    // cup(xa, yb) = (-1)^{pq} yoneda(yb after xa)
                    let t = yoneda_product(a.over(), xa, x.degree, yb, y.degree)?;
                    let negative = x.degree * y.degree % 2 == 1;
                    for z in 0..m {
                        let c = a.mul.get(z, ia * m + ib);
                        if *c == 0u32 {
                            continue;
                        }
                        for (i, val) in &t {
                            let e = acc.entry(z * dp * dq + i).or_insert_with(|| ring.zero());
                            *e = ring.add(e, &sign(ring, negative, ring.mul(c, val)));
                        }
                    }
                }
            }
            accumulate(ring, acc)
        }
    };
    cg.class_of(n, v)
}

/// Bound on monomials enumerated per degree when searching for relations.
const MAX_MONOMIALS: usize = 4096;

/// `H^*(G, A)` with products, checked against the Leibniz identity on
/// cochains. Falls back to composing extensions when the cochain product
/// fails that check and `A` has trivial coaction.
pub fn algebra_cohomology_ring(g: &GroupSchemeData, a: &GAlgebraData, degree_cap: usize) -> Result<AlgebraCohomologyRing> {
    algebra_cohomology_ring_with(g, a, degree_cap, None)
}

/// As [`algebra_cohomology_ring`] with the product route forced.
pub fn algebra_cohomology_ring_with(g: &GroupSchemeData, a: &GAlgebraData, degree_cap: usize, route: Option<ProductRoute>) -> Result<AlgebraCohomologyRing> {
    if !same_structure(g.hopf(), a.over()) {
        return Err(Error::Malformed("the algebra is not over the given group scheme".into()));
    }
    let h = g.hopf();
    let ring = h.ring();
    let cg = compute_groups(h, &a.comodule, degree_cap, false)?;
    let mut report = VerificationReport::new();
    let cross = Cross::new(h, a, degree_cap);
    let leibniz = route == Some(ProductRoute::Yoneda) || leibniz_check(&cross, &cg, degree_cap);
    report.flag("cochain product satisfies the Leibniz rule", leibniz, None);
    let trivial = is_trivial(h, &a.comodule);
    let route = match route {
        Some(r) => r,
        None if leibniz => ProductRoute::CrossProduct,
        None => ProductRoute::Yoneda,
    };
    if route == ProductRoute::Yoneda && !trivial {
        return Err(Error::Internal("extension composition is only available for algebras with trivial coaction".into()));
    }
    let products = match route {
        ProductRoute::CrossProduct => Products::Cross(cross.iterated, a.clone()),
        ProductRoute::Yoneda => Products::Yoneda(a.clone()),
    };

    let unit = cg.class_of(0, a.unit.column(0).into_iter().enumerate().filter(|(_, x)| *x != 0u32).collect())?;
    let mut unit_ok = true;
    for n in 0..=degree_cap {
        for x in cg.generators(n) {
            let l = multiply(&cg, &products, &unit, x)?;
            let r = multiply(&cg, &products, x, &unit)?;
            unit_ok &= l.coordinates == x.coordinates && r.coordinates == x.coordinates;
        }
    }
    report.flag("unit acts as the identity", unit_ok, None);

    let lattice = if ring.is_field() { ring } else { RingSpec::Integers };
    let mut generators: Vec<CohomologyClass> = cg.generators(0).to_vec();
    let mut relations = Vec::new();
    for n in 1..=degree_cap {
        let k = cg.generators(n).len();
        let orders = cg.generator_orders(n);
        let mut span: Vec<SparseVec> = orders
            .iter()
            .enumerate()
            .filter(|(_, o)| **o != 0u32 && !lattice.is_field())
            .map(|(i, o)| vec![(i, o.clone())])
            .collect();
        for i in 1..n {
            for x in cg.generators(i) {
                for y in cg.generators(n - i) {
                    let c = multiply(&cg, &products, x, y)?;
                    span.push(c.coordinates.iter().cloned().enumerate().filter(|(_, v)| *v != 0u32).collect());
                }
            }
        }
        for (i, gen) in cg.generators(n).iter().enumerate() {
            let e = vec![(i, ring.one())];
            if !lattice_contains(lattice, k, &span, None, &e) {
                span.push(e);
                generators.push(gen.clone());
            }
        }

        // monomials of total degree n in positive-degree generators
        let positive: Vec<usize> = (0..generators.len()).filter(|&i| generators[i].degree > 0).collect();
        let mut monomials: Vec<Vec<usize>> = Vec::new();
        let mut stack: Vec<(Vec<usize>, usize, usize)> = vec![(Vec::new(), 0, 0)];
        while let Some((mono, start, deg)) = stack.pop() {
            if deg == n {
                monomials.push(mono);
                if monomials.len() > MAX_MONOMIALS {
                    return Err(Error::SizeLimit { rank: monomials.len(), limit: MAX_MONOMIALS });
                }
                continue;
            }
            for (pos, &gi) in positive.iter().enumerate().skip(start) {
                let gd = generators[gi].degree;
                if deg + gd <= n {
                    let mut next = mono.clone();
                    next.push(gi);
                    stack.push((next, pos, deg + gd));
                }
            }
        }
        monomials.sort();
        let mut cols: Vec<SparseVec> = Vec::with_capacity(monomials.len() + k);
        for mono in &monomials {
            let mut c = generators[mono[0]].clone();
            for &gi in &mono[1..] {
                c = multiply(&cg, &products, &c, &generators[gi])?;
            }
            cols.push(c.coordinates.iter().cloned().enumerate().filter(|(_, v)| *v != 0u32).collect());
        }
        let nm = monomials.len();
        if !lattice.is_field() {
            cols.extend(orders.iter().enumerate().filter(|(_, o)| **o != 0u32).map(|(i, o)| vec![(i, o.clone())]));
        }
        for rel in sparse_kernel(&SparseMatrix::new(lattice, k, cols)) {
            let picked: Vec<(usize, Scalar)> = rel.into_iter().filter(|(i, _)| *i < nm).collect();
            if picked.is_empty() {
                continue;
            }
            relations.push(RelationWitness {
                degree: n,
                monomials: picked.iter().map(|(i, _)| monomials[*i].clone()).collect(),
                coefficients: picked.into_iter().map(|(_, c)| c).collect(),
            });
        }
    }
    Ok(AlgebraCohomologyRing { degree_cap, groups: cg.groups(), generators, relations, route, report, cohomology: cg, products })
}
