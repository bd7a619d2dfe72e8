//! Comodules over finite free Hopf algebras and their calculus.
//!
//! A comodule of rank `m` over `H` of rank `d` is stored as its coaction
//! matrix of shape `(m·d) × m`; row `w·d + j` of column `v` is the
//! coefficient of `e_w ⊗ c_j` in `Δ_V(e_v)`.

mod galgebra;
mod hopf_module;
mod json;

pub use galgebra::{galgebra_from_action, regular_galgebra, trivial_galgebra, verify_galgebra, GAlgebraData};
pub use hopf_module::{
    dual_hopf_module, free_hopf_module, hopf_module_structure, regular_hopf_module, verify_hopf_module, HopfModuleData,
    HopfModuleStructure,
};
pub use json::{comodule_from_json, comodule_to_json, resolve_hopf_ref, COMODULE_SCHEMA};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::{dual_hopf, AlgebraData, HopfAlgebraData, VerificationReport};
use crate::linalg::{kernel_basis, solve, span_basis, subquotient, Matrix, ModulePresentation, RingSpec, Scalar};
use crate::schemes::{GroupSchemeData, SubgroupData};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleData {
    over: HopfAlgebraData,
    coaction: Matrix,
}

impl ComoduleData {
    /// Checks shapes only; see [`verify_comodule`] for the axioms.
    pub fn new(over: HopfAlgebraData, coaction: Matrix) -> Result<Self> {
        let d = over.rank();
        if coaction.ring() != over.ring() {
            return Err(Error::RingMismatch(over.ring(), coaction.ring()));
        }
        let m = coaction.cols();
        if coaction.rows() != m * d {
            return Err(Error::Malformed(format!("coaction is {}x{m}, expected {}x{m}", coaction.rows(), m * d)));
        }
        Ok(ComoduleData { over, coaction })
    }

    /// `V = k^m` with `Δ_V(x) = x ⊗ 1`.
    pub fn trivial(over: &HopfAlgebraData, m: usize) -> Self {
        let coaction = Matrix::identity(over.ring(), m).kron(over.unit());
        ComoduleData { over: over.clone(), coaction }
    }

    pub fn over(&self) -> &HopfAlgebraData {
        &self.over
    }

    pub fn ring(&self) -> RingSpec {
        self.over.ring()
    }

    pub fn rank(&self) -> usize {
        self.coaction.cols()
    }

    pub fn coaction(&self) -> &Matrix {
        &self.coaction
    }

    pub fn base_change(&self, target: RingSpec) -> Result<Self> {
        ComoduleData::new(crate::hopf::base_change(&self.over, target)?, self.coaction.base_change(target)?)
    }

    /// The same comodule regarded over another presentation of the same
    /// Hopf algebra, e.g. a group scheme with different labels.
    pub fn with_over(&self, over: &HopfAlgebraData) -> Result<Self> {
        if !same_structure(&self.over, over) {
            return Err(Error::Malformed("comodule is over a different Hopf algebra".into()));
        }
        Ok(ComoduleData { over: over.clone(), coaction: self.coaction.clone() })
    }
}

/// Equality of structure constants, ignoring labels.
pub(crate) fn same_structure(a: &HopfAlgebraData, b: &HopfAlgebraData) -> bool {
    a.ring() == b.ring()
        && a.mul() == b.mul()
        && a.unit() == b.unit()
        && a.comul() == b.comul()
        && a.counit() == b.counit()
        && a.antipode() == b.antipode()
}

/// Coassociativity and counit axioms of the coaction.
pub fn verify_comodule(v: &ComoduleData) -> VerificationReport {
    let ring = v.ring();
    let (m, d) = (v.rank(), v.over.rank());
    let idm = Matrix::identity(ring, m);
    let mut r = VerificationReport::new();
    r.compare(
        "coaction coassociativity",
        &v.coaction.kron(&Matrix::identity(ring, d)).mul(&v.coaction),
        &idm.kron(v.over.comul()).mul(&v.coaction),
    );
    r.compare("coaction counit", &idm.kron(v.over.counit()).mul(&v.coaction), &idm);
    r
}

/// A left module: `action` is `m × (d·m)`, column `i·m + v` holding
/// `e_i · e_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleData {
    pub over: AlgebraData,
    pub action: Matrix,
}

impl ModuleData {
    pub fn new(over: AlgebraData, action: Matrix) -> Result<Self> {
        let m = action.rows();
        if action.cols() != over.rank() * m {
            return Err(Error::Malformed(format!("action is {m}x{}, expected {m}x{}", action.cols(), over.rank() * m)));
        }
        if action.ring() != over.ring {
            return Err(Error::RingMismatch(over.ring, action.ring()));
        }
        Ok(ModuleData { over, action })
    }

    pub fn rank(&self) -> usize {
        self.action.rows()
    }

    /// Matrix by which the basis element `e_i` acts.
    pub fn acting_matrix(&self, i: usize) -> Matrix {
        let m = self.rank();
        self.action.select_columns(&(i * m..(i + 1) * m).collect::<Vec<_>>())
    }
}

pub fn verify_module(md: &ModuleData) -> VerificationReport {
    let ring = md.over.ring;
    let (m, d) = (md.rank(), md.over.rank());
    let idm = Matrix::identity(ring, m);
    let mut r = VerificationReport::new();
    r.compare(
        "action associativity",
        &md.action.mul(&md.over.mul.kron(&idm)),
        &md.action.mul(&Matrix::identity(ring, d).kron(&md.action)),
    );
    r.compare("action unit", &md.action.mul(&md.over.unit.kron(&idm)), &idm);
    r
}

/// The `H^*`-module with `f · x = (id ⊗ f)(Δ_V(x))`.
pub fn comodule_to_module(v: &ComoduleData) -> ModuleData {
    let (m, d) = (v.rank(), v.over.rank());
    let dual = dual_hopf(&v.over);
    let mut action = Matrix::zeros(v.ring(), m, d * m);
    for w in 0..m {
        for i in 0..d {
            for u in 0..m {
                action.set(w, i * m + u, v.coaction.get(w * d + i, u).clone());
            }
        }
    }
    ModuleData { over: dual.algebra().clone(), action }
}

/// Inverse of [`comodule_to_module`]: `md` must be a module over the dual
/// algebra of `h`.
pub fn module_to_comodule(md: &ModuleData, h: &HopfAlgebraData) -> Result<ComoduleData> {
    let dual = dual_hopf(h);
    if md.over.mul != *dual.mul() || md.over.unit != *dual.unit() {
        return Err(Error::Malformed("module is not over the dual algebra".into()));
    }
    let (m, d) = (md.rank(), h.rank());
    let mut coaction = Matrix::zeros(h.ring(), m * d, m);
    for w in 0..m {
        for i in 0..d {
            for u in 0..m {
                coaction.set(w * d + i, u, md.action.get(w, i * m + u).clone());
            }
        }
    }
    ComoduleData::new(h.clone(), coaction)
}

/// Columns spanning `V^G = {x : Δ_V(x) = x ⊗ 1}`. Over `Z` the span is
/// saturated, being the kernel of an integer matrix.
pub fn invariants(v: &ComoduleData) -> Matrix {
    let triv = Matrix::identity(v.ring(), v.rank()).kron(v.over.unit());
    kernel_basis(&v.coaction.sub(&triv))
}

/// Vectors fixed by an augmented algebra: `a · x = ε(a) x` for all `a`.
pub fn fixed_vectors(md: &ModuleData) -> Result<Matrix> {
    let aug = md.over.augmentation.as_ref().ok_or_else(|| Error::Malformed("algebra has no augmentation".into()))?;
    let m = md.rank();
    let id = Matrix::identity(md.over.ring, m);
    let mut stacked = Matrix::zeros(md.over.ring, 0, m);
    for i in 0..md.over.rank() {
        stacked = stacked.vstack(&md.acting_matrix(i).sub(&id.scale(aug.get(0, i))));
    }
    Ok(kernel_basis(&stacked))
}

/// The components `x_j` of `Δ_V(x) = Σ_j x_j ⊗ c_j`, as columns.
fn coaction_components(v: &ComoduleData, x: &Matrix) -> Matrix {
    let (m, d) = (v.rank(), v.over.rank());
    let image = v.coaction.mul(x);
    Matrix::from_fn(v.ring(), m, d, |w, j| image.get(w * d + j, 0).clone())
}

/// The subcomodule generated by `x`, as the span of the components of
/// `Δ_V(x)`. The result is checked to be closed under the coaction.
pub fn subcomodule_generated(v: &ComoduleData, x: &[Scalar]) -> Result<Matrix> {
    if x.len() != v.rank() {
        return Err(Error::Malformed(format!("vector has length {} instead of {}", x.len(), v.rank())));
    }
    let x = Matrix::column_vector(v.ring(), x.to_vec());
    let basis = span_basis(&coaction_components(v, &x));
    for j in 0..basis.cols() {
        let comps = coaction_components(v, &basis.select_columns(&[j]));
        for c in comps.columns() {
            if solve(&basis, &c)?.is_none() {
                return Err(Error::Internal(format!("generated span is not closed under the coaction at basis vector {j}")));
            }
        }
    }
    Ok(basis)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// `H` as a comodule over itself: `Δ` on the right, `τ∘(S⊗id)∘Δ` on the
/// left.
pub fn regular_representation(h: &HopfAlgebraData, side: Side) -> ComoduleData {
    let d = h.rank();
    let ring = h.ring();
    let coaction = match side {
        Side::Right => h.comul().clone(),
        Side::Left => Matrix::swap(ring, d, d).mul(&h.antipode().kron(&Matrix::identity(ring, d))).mul(h.comul()),
    };
    ComoduleData { over: h.clone(), coaction }
}

/// Tensor product with the diagonal coaction
/// `v ⊗ w ↦ v₀ ⊗ w₀ ⊗ v₁w₁`.
pub fn tensor_comodule(v: &ComoduleData, w: &ComoduleData) -> Result<ComoduleData> {
    if !same_structure(&v.over, &w.over) {
        return Err(Error::Malformed("comodules over different Hopf algebras".into()));
    }
    let (m1, m2, d) = (v.rank(), w.rank(), v.over.rank());
    let ring = v.ring();
    let split = v.coaction.kron(&w.coaction).permute_tensor_rows(&[m1, d, m2, d], &[0, 2, 1, 3]);
    let coaction = Matrix::identity(ring, m1 * m2).kron(v.over.mul()).mul(&split);
    ComoduleData::new(v.over.clone(), coaction)
}

pub fn direct_sum(v: &ComoduleData, w: &ComoduleData) -> Result<ComoduleData> {
    if !same_structure(&v.over, &w.over) {
        return Err(Error::Malformed("comodules over different Hopf algebras".into()));
    }
    let (m1, m2, d) = (v.rank(), w.rank(), v.over.rank());
    let mut coaction = Matrix::zeros(v.ring(), (m1 + m2) * d, m1 + m2);
    for c in 0..m1 {
        for r in 0..m1 * d {
            coaction.set(r, c, v.coaction.get(r, c).clone());
        }
    }
    for c in 0..m2 {
        for r in 0..m2 * d {
            coaction.set(m1 * d + r, m1 + c, w.coaction.get(r, c).clone());
        }
    }
    ComoduleData::new(v.over.clone(), coaction)
}

/// The comodule of a linear action of a constant group: `Δ(e_v) = Σ_g
/// ρ(g) e_v ⊗ f_g`, with `mats[g] = ρ(g)`.
pub fn comodule_from_representation(g: &GroupSchemeData, mats: &[Matrix]) -> Result<ComoduleData> {
    let table = g.constant_table().ok_or_else(|| Error::Malformed("representations need a constant group scheme".into()))?;
    let n = table.order();
    if mats.len() != n {
        return Err(Error::Malformed(format!("expected {n} matrices, found {}", mats.len())));
    }
    let m = mats[0].rows();
    let ring = g.ring();
    let mut coaction = Matrix::zeros(ring, m * n, m);
    for (gi, a) in mats.iter().enumerate() {
        if a.shape() != (m, m) || a.ring() != ring {
            return Err(Error::Malformed(format!("matrix {gi} is not {m}x{m} over {ring}")));
        }
        for w in 0..m {
            for v in 0..m {
                coaction.set(w * n + gi, v, a.get(w, v).clone());
            }
        }
    }
    let out = ComoduleData::new(g.hopf().clone(), coaction)?;
    if !verify_comodule(&out).passed() {
        return Err(Error::Malformed("the matrices do not define a representation".into()));
    }
    Ok(out)
}

/// Whether `f: V → W` (an `m_W × m_V` matrix) commutes with the coactions.
pub fn is_comodule_map(v: &ComoduleData, w: &ComoduleData, f: &Matrix) -> bool {
    let d = v.over.rank();
    f.shape() == (w.rank(), v.rank())
        && w.coaction.mul(f) == f.kron(&Matrix::identity(v.ring(), d)).mul(&v.coaction)
}

/// Basis of `Hom^H(V, W)`: each column is a map `f` flattened row-major,
/// entry `w·m_V + v`.
pub fn hom_comodules(v: &ComoduleData, w: &ComoduleData) -> Result<Matrix> {
    if !same_structure(&v.over, &w.over) {
        return Err(Error::Malformed("comodules over different Hopf algebras".into()));
    }
    let (mv, mw, d) = (v.rank(), w.rank(), v.over.rank());
    let ring = v.ring();
    // column (a, b) is the image of the elementary map e_b ↦ e_a
    let mut system = Matrix::zeros(ring, mw * d * mv, mw * mv);
    for a in 0..mw {
        for b in 0..mv {
            let col = a * mv + b;
            for r in 0..mw * d {
                system.add_to(r * mv + b, col, w.coaction.get(r, a));
            }
            for j in 0..d {
                for c in 0..mv {
                    system.add_to((a * d + j) * mv + c, col, &ring.neg(v.coaction.get(b * d + j, c)));
                }
            }
        }
    }
    Ok(kernel_basis(&system))
}

/// Unflattens a column of [`hom_comodules`].
pub fn hom_element(v: &ComoduleData, w: &ComoduleData, flat: &[Scalar]) -> Matrix {
    let mv = v.rank();
    Matrix::from_fn(v.ring(), w.rank(), mv, |a, b| flat[a * mv + b].clone())
}

fn kernel_presentation(dim: usize, ker: &Matrix) -> Result<ModulePresentation> {
    subquotient(dim, ker, &Matrix::zeros(ker.ring(), dim, 0))
}

fn check_ambient(v: &ComoduleData, sub: &SubgroupData) -> Result<()> {
    if same_structure(&v.over, sub.ambient.hopf()) {
        Ok(())
    } else {
        Err(Error::Malformed("comodule is not over the ambient group of the subgroup".into()))
    }
}

fn check_sub(w: &ComoduleData, sub: &SubgroupData) -> Result<()> {
    if same_structure(&w.over, sub.sub.hopf()) {
        Ok(())
    } else {
        Err(Error::Malformed("comodule is not over the subgroup".into()))
    }
}

/// Restriction along `k[G] → k[H]`.
pub fn restrict(v: &ComoduleData, sub: &SubgroupData) -> Result<ComoduleData> {
    check_ambient(v, sub)?;
    let coaction = Matrix::identity(v.ring(), v.rank()).kron(&sub.projection).mul(&v.coaction);
    ComoduleData::new(sub.sub.hopf().clone(), coaction)
}

/// `ind_H^G(W) = (W ⊗ k[G])^H`, where `H` coacts on `k[G]` through the
/// left regular coaction `f ↦ f₂ ⊗ π(S f₁)` and `G` through `Δ`.
pub fn induce(w: &ComoduleData, sub: &SubgroupData) -> Result<ComoduleData> {
    check_sub(w, sub)?;
    let g = sub.ambient.hopf();
    let h = sub.sub.hopf();
    let ring = g.ring();
    let (m, dg, dh) = (w.rank(), g.rank(), h.rank());
    let id = |n| Matrix::identity(ring, n);
    // w ⊗ f ↦ w₀ ⊗ w₁ ⊗ π(S f₁) ⊗ f₂
    let split = id(m * dh).kron(&sub.projection.mul(g.antipode())).kron(&id(dg)).mul(&w.coaction.kron(g.comul()));
    let reordered = split.permute_tensor_rows(&[m, dh, dh, dg], &[0, 3, 1, 2]);
    let h_coaction = id(m * dg).kron(h.mul()).mul(&reordered);
    let k = kernel_basis(&h_coaction.sub(&id(m * dg).kron(h.unit())));
    let g_coaction = id(m).kron(g.comul()).mul(&k);
    let lifted = k.kron(&id(dg));
    let mut coaction = Matrix::zeros(ring, k.cols() * dg, k.cols());
    for (c, col) in g_coaction.columns().into_iter().enumerate() {
        let x = solve(&lifted, &col)?
            .ok_or_else(|| Error::Internal("the G-coaction does not preserve the H-invariants".into()))?;
        for (r, val) in x.into_iter().enumerate() {
            coaction.set(r, c, val);
        }
    }
    ComoduleData::new(g.clone(), coaction)
}

/// Both sides of `Hom^H(res V, W) ≅ Hom^G(V, ind W)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AdjunctionReport {
    pub restricted_side: ModulePresentation,
    pub induced_side: ModulePresentation,
    pub isomorphic: bool,
}

pub fn adjunction_check(v: &ComoduleData, w: &ComoduleData, sub: &SubgroupData) -> Result<AdjunctionReport> {
    let res = restrict(v, sub)?;
    let ind = induce(w, sub)?;
    let lhs = kernel_presentation(w.rank() * res.rank(), &hom_comodules(&res, w)?)?;
    let rhs = kernel_presentation(ind.rank() * v.rank(), &hom_comodules(v, &ind)?)?;
    let isomorphic = lhs == rhs;
    Ok(AdjunctionReport { restricted_side: lhs, induced_side: rhs, isomorphic })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schemes::{builtin_group, constant_group_scheme, mu_n, subgroup_from_ideal, GroupTable};

    fn z() -> RingSpec {
        RingSpec::Integers
    }

    fn c2() -> GroupSchemeData {
        builtin_group("constant-C2", z()).unwrap()
    }

    /// `{0, 2} ⊂ C_4`, cut out by the functions `f_1` and `f_3`.
    fn c2_in_c4(ring: RingSpec) -> SubgroupData {
        let g = constant_group_scheme(&GroupTable::cyclic(4), ring).unwrap();
        let gens = Matrix::from_i64(ring, &[vec![0, 0], vec![1, 0], vec![0, 0], vec![0, 1]]);
        subgroup_from_ideal(&g, &gens).unwrap()
    }

    #[test]
    fn trivial_is_fully_invariant() {
        let v = ComoduleData::trivial(c2().hopf(), 3);
        assert!(verify_comodule(&v).passed());
        assert_eq!(invariants(&v).cols(), 3);
    }

    #[test]
    fn regular_c2_invariants_are_constants() {
        let v = regular_representation(c2().hopf(), Side::Right);
        let inv = invariants(&v);
        assert_eq!(inv, Matrix::from_i64(z(), &[vec![1], vec![1]]));
        let left = regular_representation(c2().hopf(), Side::Left);
        assert!(verify_comodule(&left).passed());
        assert_eq!(invariants(&left).cols(), 1);
    }

    #[test]
    fn mu2_regular_coaction() {
        let mu = mu_n(2, RingSpec::Rationals).unwrap();
        let v = regular_representation(mu.hopf(), Side::Right);
        // Δ(t) = t ⊗ t: column 1 is e_1 ⊗ e_1
        let q = RingSpec::Rationals;
        assert_eq!(v.coaction().column(1), vec![q.zero(), q.zero(), q.zero(), q.one()]);
    }

    #[test]
    fn module_round_trip_and_fixed_vectors() {
        let g = builtin_group("constant-C3", RingSpec::Rationals).unwrap();
        let v = regular_representation(g.hopf(), Side::Right);
        let md = comodule_to_module(&v);
        assert!(verify_module(&md).passed());
        assert_eq!(module_to_comodule(&md, g.hopf()).unwrap(), v);
        assert_eq!(fixed_vectors(&md).unwrap(), invariants(&v));
    }

    #[test]
    fn trivial_module_acts_by_evaluation_at_one() {
        let h = c2().hopf().clone();
        let md = comodule_to_module(&ComoduleData::trivial(&h, 2));
        for i in 0..2 {
            let expect = Matrix::identity(z(), 2).scale(h.unit().get(i, 0));
            assert_eq!(md.acting_matrix(i), expect);
        }
    }

    #[test]
    fn sign_representation() {
        let g = c2();
        let r = z();
        let mats = [Matrix::identity(r, 1), Matrix::from_i64(r, &[vec![-1]])];
        let v = comodule_from_representation(&g, &mats).unwrap();
        let md = comodule_to_module(&v);
        assert_eq!(md.acting_matrix(1), Matrix::from_i64(r, &[vec![-1]]));
    }

    #[test]
    fn generated_subcomodules() {
        let g = c2();
        let v = regular_representation(g.hopf(), Side::Right);
        let r = z();
        assert_eq!(subcomodule_generated(&v, &[r.one(), r.zero()]).unwrap().cols(), 2);
        assert_eq!(subcomodule_generated(&v, &[r.one(), r.one()]).unwrap().cols(), 1);
        // ZC_2 as a comodule over its dual, x = e_1 + e_σ
        let zc2 = crate::schemes::group_algebra(&GroupTable::cyclic(2), r).unwrap();
        let w = regular_representation(&dual_hopf(&zc2), Side::Right);
        assert_eq!(subcomodule_generated(&w, &[r.one(), r.one()]).unwrap().cols(), 1);
        assert_eq!(invariants(&w).cols(), 1);
    }

    #[test]
    fn tensor_and_sum_verify() {
        let g = builtin_group("constant-S3", z()).unwrap();
        let v = regular_representation(g.hopf(), Side::Right);
        let t = tensor_comodule(&v, &v).unwrap();
        assert!(verify_comodule(&t).passed());
        assert_eq!(invariants(&t).cols(), 6);
        let s = direct_sum(&v, &ComoduleData::trivial(g.hopf(), 1)).unwrap();
        assert!(verify_comodule(&s).passed());
        assert_eq!(invariants(&s).cols(), 2);
    }

    #[test]
    fn restriction_and_induction() {
        let r = RingSpec::Rationals;
        let sub = c2_in_c4(r);
        let reg = regular_representation(sub.ambient.hopf(), Side::Right);
        let res = restrict(&reg, &sub).unwrap();
        assert_eq!(res.rank(), 4);
        assert!(verify_comodule(&res).passed());
        let triv_h = ComoduleData::trivial(sub.sub.hopf(), 1);
        let ind = induce(&triv_h, &sub).unwrap();
        assert_eq!(ind.rank(), 2);
        assert!(verify_comodule(&ind).passed());
        let rep = adjunction_check(&reg, &triv_h, &sub).unwrap();
        assert!(rep.isomorphic);
        let reg_h = regular_representation(sub.sub.hopf(), Side::Right);
        assert!(adjunction_check(&ComoduleData::trivial(sub.ambient.hopf(), 1), &reg_h, &sub).unwrap().isomorphic);
    }

    #[test]
    fn hom_is_fixed_points_of_maps() {
        let g = c2();
        let v = regular_representation(g.hopf(), Side::Right);
        let t = ComoduleData::trivial(g.hopf(), 1);
        let homs = hom_comodules(&v, &t).unwrap();
        assert_eq!(homs.cols(), 1);
        assert!(is_comodule_map(&v, &t, &hom_element(&v, &t, &homs.column(0))));
    }
}
