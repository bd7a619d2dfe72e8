//! Coalgebras, algebras and Hopf algebras given by structure constants.
//!
//! A rank `d` object has basis `e_0 … e_{d-1}`; `e_i ⊗ e_j` has index
//! `i·d + j`. Structure maps are matrices acting on coordinate columns:
//! `comul` is `d² × d`, `mul` is `d × d²`, `unit` is `d × 1`, `counit` is
//! `1 × d`, and column `i` of `antipode` is `S(e_i)`.

pub(crate) mod json;
mod report;

pub use json::{hopf_from_json, hopf_to_json, HOPF_SCHEMA};
pub use report::{Check, VerificationReport};

use crate::error::{Error, Result};
use crate::linalg::{inverse, Matrix, RingSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData {
    pub ring: RingSpec,
    pub basis_labels: Vec<String>,
    pub comul: Matrix,
    pub counit: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    pub ring: RingSpec,
    pub basis_labels: Vec<String>,
    pub mul: Matrix,
    pub unit: Matrix,
    pub augmentation: Option<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebraData {
    coalgebra: CoalgebraData,
    algebra: AlgebraData,
    antipode: Matrix,
    commutative: bool,
    cocommutative: bool,
}

fn expect_shape(name: &str, m: &Matrix, rows: usize, cols: usize, ring: RingSpec) -> Result<()> {
    if m.ring() != ring {
        return Err(Error::RingMismatch(ring, m.ring()));
    }
    if m.shape() != (rows, cols) {
        return Err(Error::Malformed(format!("{name} is {}x{}, expected {rows}x{cols}", m.rows(), m.cols())));
    }
    Ok(())
}

pub(crate) fn default_labels(d: usize) -> Vec<String> {
    (0..d).map(|i| format!("e{i}")).collect()
}

impl CoalgebraData {
    pub fn new(ring: RingSpec, basis_labels: Vec<String>, comul: Matrix, counit: Matrix) -> Result<Self> {
        let d = basis_labels.len();
        if d == 0 {
            return Err(Error::Malformed("rank must be positive".into()));
        }
        expect_shape("comul", &comul, d * d, d, ring)?;
        expect_shape("counit", &counit, 1, d, ring)?;
        Ok(CoalgebraData { ring, basis_labels, comul, counit })
    }

    pub fn rank(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn is_cocommutative(&self) -> bool {
        let d = self.rank();
        Matrix::swap(self.ring, d, d).mul(&self.comul) == self.comul
    }

    pub fn base_change(&self, target: RingSpec) -> Result<Self> {
        Ok(CoalgebraData {
            ring: target,
            basis_labels: self.basis_labels.clone(),
            comul: self.comul.base_change(target)?,
            counit: self.counit.base_change(target)?,
        })
    }
}

impl AlgebraData {
    pub fn new(ring: RingSpec, basis_labels: Vec<String>, mul: Matrix, unit: Matrix, augmentation: Option<Matrix>) -> Result<Self> {
        let d = basis_labels.len();
        if d == 0 {
            return Err(Error::Malformed("rank must be positive".into()));
        }
        expect_shape("mul", &mul, d, d * d, ring)?;
        expect_shape("unit", &unit, d, 1, ring)?;
        if let Some(a) = &augmentation {
            expect_shape("augmentation", a, 1, d, ring)?;
        }
        Ok(AlgebraData { ring, basis_labels, mul, unit, augmentation })
    }

    pub fn rank(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.rank();
        self.mul.mul(&Matrix::swap(self.ring, d, d)) == self.mul
    }

    /// Matrix of left multiplication by the vector `x`.
    pub fn left_mult(&self, x: &Matrix) -> Matrix {
        let d = self.rank();
        self.mul.mul(&x.kron(&Matrix::identity(self.ring, d)))
    }

    /// Matrix of right multiplication by the vector `x`.
    pub fn right_mult(&self, x: &Matrix) -> Matrix {
        let d = self.rank();
        self.mul.mul(&Matrix::identity(self.ring, d).kron(x))
    }

    /// Product of two coordinate columns.
    pub fn product(&self, x: &Matrix, y: &Matrix) -> Matrix {
        self.mul.mul(&x.kron(y))
    }

    pub fn base_change(&self, target: RingSpec) -> Result<Self> {
        Ok(AlgebraData {
            ring: target,
            basis_labels: self.basis_labels.clone(),
            mul: self.mul.base_change(target)?,
            unit: self.unit.base_change(target)?,
            augmentation: self.augmentation.as_ref().map(|a| a.base_change(target)).transpose()?,
        })
    }
}

/// Coordinate column of the basis vector `e_i`.
pub fn basis_vector(ring: RingSpec, d: usize, i: usize) -> Matrix {
    let mut v = Matrix::zeros(ring, d, 1);
    v.set(i, 0, ring.one());
    v
}

impl HopfAlgebraData {
    /// Assembles a Hopf algebra from its structure matrices. Shapes are
    /// checked here; axioms are checked by [`verify_hopf`]. The
    /// (co)commutativity flags are computed once.
    pub fn new(
        ring: RingSpec,
        basis_labels: Vec<String>,
        mul: Matrix,
        unit: Matrix,
        comul: Matrix,
        counit: Matrix,
        antipode: Matrix,
    ) -> Result<Self> {
        let d = basis_labels.len();
        let coalgebra = CoalgebraData::new(ring, basis_labels.clone(), comul, counit)?;
        let augmentation = Some(coalgebra.counit.clone());
        let algebra = AlgebraData::new(ring, basis_labels, mul, unit, augmentation)?;
        expect_shape("antipode", &antipode, d, d, ring)?;
        let commutative = algebra.is_commutative();
        let cocommutative = coalgebra.is_cocommutative();
        Ok(HopfAlgebraData { coalgebra, algebra, antipode, commutative, cocommutative })
    }

    pub fn from_parts(coalgebra: CoalgebraData, algebra: AlgebraData, antipode: Matrix) -> Result<Self> {
        if coalgebra.basis_labels.len() != algebra.basis_labels.len() {
            return Err(Error::Malformed("algebra and coalgebra ranks differ".into()));
        }
        Self::new(
            coalgebra.ring,
            coalgebra.basis_labels,
            algebra.mul,
            algebra.unit,
            coalgebra.comul,
            coalgebra.counit,
            antipode,
        )
    }

    pub fn ring(&self) -> RingSpec {
        self.coalgebra.ring
    }

    pub fn rank(&self) -> usize {
        self.coalgebra.rank()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.coalgebra.basis_labels
    }

    pub fn coalgebra(&self) -> &CoalgebraData {
        &self.coalgebra
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn mul(&self) -> &Matrix {
        &self.algebra.mul
    }

    pub fn unit(&self) -> &Matrix {
        &self.algebra.unit
    }

    pub fn comul(&self) -> &Matrix {
        &self.coalgebra.comul
    }

    pub fn counit(&self) -> &Matrix {
        &self.coalgebra.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn commutative(&self) -> bool {
        self.commutative
    }

    pub fn cocommutative(&self) -> bool {
        self.cocommutative
    }

    /// Same structure with another antipode matrix.
    pub fn with_antipode(&self, antipode: Matrix) -> Result<Self> {
        expect_shape("antipode", &antipode, self.rank(), self.rank(), self.ring())?;
        Ok(HopfAlgebraData { antipode, ..self.clone() })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.rank() {
            return Err(Error::Malformed("wrong number of basis labels".into()));
        }
        self.coalgebra.basis_labels = labels.clone();
        self.algebra.basis_labels = labels;
        Ok(self)
    }

    /// `η∘ε`, the unit for convolution.
    pub fn unit_counit(&self) -> Matrix {
        self.unit().mul(self.counit())
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(self.ring(), self.rank())
    }
}

/// Coassociativity and both counit identities.
pub fn verify_coalgebra(c: &CoalgebraData) -> VerificationReport {
    let d = c.rank();
    let id = Matrix::identity(c.ring, d);
    let mut r = VerificationReport::new();
    let left = c.comul.kron(&id).mul(&c.comul);
    let right = id.kron(&c.comul).mul(&c.comul);
    r.compare("coassociativity", &left, &right);
    r.compare("left counit", &c.counit.kron(&id).mul(&c.comul), &id);
    r.compare("right counit", &id.kron(&c.counit).mul(&c.comul), &id);
    r
}

/// Associativity, unit, and (if present) multiplicativity of the
/// augmentation.
pub fn verify_algebra(a: &AlgebraData) -> VerificationReport {
    let d = a.rank();
    let ring = a.ring;
    let id = Matrix::identity(ring, d);
    let mut r = VerificationReport::new();
    let left = a.mul.mul(&a.mul.kron(&id));
    let right = a.mul.mul(&id.kron(&a.mul));
    r.compare("associativity", &left, &right);
    r.compare("left unit", &a.mul.mul(&a.unit.kron(&id)), &id);
    r.compare("right unit", &a.mul.mul(&id.kron(&a.unit)), &id);
    if let Some(aug) = &a.augmentation {
        r.compare("augmentation multiplicative", &aug.mul(&a.mul), &aug.kron(aug));
        r.compare("augmentation unital", &aug.mul(&a.unit), &Matrix::identity(ring, 1));
    }
    r
}

/// Algebra and coalgebra axioms, the four bialgebra diagrams, the antipode
/// identity, and agreement of the stored flags with the structure.
pub fn verify_hopf(h: &HopfAlgebraData) -> VerificationReport {
    let d = h.rank();
    let ring = h.ring();
    let mut r = verify_algebra(h.algebra());
    r.extend(verify_coalgebra(h.coalgebra()));
    let (m, dl, u, e, s) = (h.mul(), h.comul(), h.unit(), h.counit(), h.antipode());
    let mid = Matrix::middle_swap(ring, d, d, d, d);
    r.compare("comultiplication is multiplicative", &dl.mul(m), &m.kron(m).mul(&mid).mul(&dl.kron(dl)));
    r.compare("counit is multiplicative", &e.mul(m), &e.kron(e));
    r.compare("unit is comultiplicative", &dl.mul(u), &u.kron(u));
    r.compare("counit of unit", &e.mul(u), &Matrix::identity(ring, 1));
    let id = h.identity();
    let ue = h.unit_counit();
    r.compare("antipode left", &m.mul(&s.kron(&id)).mul(dl), &ue);
    r.compare("antipode right", &m.mul(&id.kron(s)).mul(dl), &ue);
    r.flag("commutative flag", h.commutative == h.algebra.is_commutative(), None);
    r.flag("cocommutative flag", h.cocommutative == h.coalgebra.is_cocommutative(), None);
    r
}

/// `m∘(f⊗g)∘Δ` for linear maps `f, g : C → A`.
pub fn convolution(c: &CoalgebraData, a: &AlgebraData, f: &Matrix, g: &Matrix) -> Result<Matrix> {
    if c.ring != a.ring || f.ring() != c.ring || g.ring() != c.ring {
        return Err(Error::RingMismatch(c.ring, a.ring));
    }
    for (name, x) in [("f", f), ("g", g)] {
        if x.shape() != (a.rank(), c.rank()) {
            return Err(Error::Malformed(format!("{name} must be {}x{}", a.rank(), c.rank())));
        }
    }
    a.mul.try_mul(&f.kron(g))?.try_mul(&c.comul)
}

/// The dual Hopf algebra on the dual basis: every structure map is
/// transposed, multiplication and comultiplication trade places.
pub fn dual_hopf(h: &HopfAlgebraData) -> HopfAlgebraData {
    let labels = h.basis_labels().iter().map(|l| format!("{l}*")).collect();
    HopfAlgebraData::new(
        h.ring(),
        labels,
        h.comul().transpose(),
        h.counit().transpose(),
        h.mul().transpose(),
        h.unit().transpose(),
        h.antipode().transpose(),
    )
    .expect("transposed shapes are consistent")
}

/// Tensor product coalgebra with `Δ = (id⊗τ⊗id)(Δ₁⊗Δ₂)`.
pub fn tensor_coalgebra(c1: &CoalgebraData, c2: &CoalgebraData) -> Result<CoalgebraData> {
    if c1.ring != c2.ring {
        return Err(Error::RingMismatch(c1.ring, c2.ring));
    }
    let (d1, d2) = (c1.rank(), c2.rank());
    let comul = Matrix::middle_swap(c1.ring, d1, d1, d2, d2).mul(&c1.comul.kron(&c2.comul));
    CoalgebraData::new(c1.ring, tensor_labels(&c1.basis_labels, &c2.basis_labels), comul, c1.counit.kron(&c2.counit))
}

pub fn tensor_algebra(a1: &AlgebraData, a2: &AlgebraData) -> Result<AlgebraData> {
    if a1.ring != a2.ring {
        return Err(Error::RingMismatch(a1.ring, a2.ring));
    }
    let (d1, d2) = (a1.rank(), a2.rank());
    let mul = a1.mul.kron(&a2.mul).mul(&Matrix::middle_swap(a1.ring, d1, d2, d1, d2));
    let augmentation = match (&a1.augmentation, &a2.augmentation) {
        (Some(x), Some(y)) => Some(x.kron(y)),
        _ => None,
    };
    AlgebraData::new(a1.ring, tensor_labels(&a1.basis_labels, &a2.basis_labels), mul, a1.unit.kron(&a2.unit), augmentation)
}

pub fn tensor_hopf(h1: &HopfAlgebraData, h2: &HopfAlgebraData) -> Result<HopfAlgebraData> {
    let c = tensor_coalgebra(h1.coalgebra(), h2.coalgebra())?;
    let a = tensor_algebra(h1.algebra(), h2.algebra())?;
    HopfAlgebraData::from_parts(c, a, h1.antipode().kron(h2.antipode()))
}

fn tensor_labels(a: &[String], b: &[String]) -> Vec<String> {
    a.iter().flat_map(|x| b.iter().map(move |y| format!("{x}⊗{y}"))).collect()
}

/// Anti-multiplicativity, anti-comultiplicativity, `S(1) = 1`, `ε∘S = ε`
/// and bijectivity of the antipode. For (co)commutative input also
/// `S² = id`.
pub fn antipode_properties_check(h: &HopfAlgebraData) -> VerificationReport {
    let d = h.rank();
    let ring = h.ring();
    let s = h.antipode();
    let tau = Matrix::swap(ring, d, d);
    let mut r = VerificationReport::new();
    r.compare("S is an algebra antimorphism", &s.mul(h.mul()), &h.mul().mul(&s.kron(s)).mul(&tau));
    r.compare("S(1) = 1", &s.mul(h.unit()), h.unit());
    r.compare("S is a coalgebra antimorphism", &h.comul().mul(s), &s.kron(s).mul(&tau).mul(h.comul()));
    r.compare("counit of S", &h.counit().mul(s), h.counit());
    r.flag("S is bijective", inverse(s).is_some(), None);
    if h.commutative() || h.cocommutative() {
        r.compare("S^2 = id", &s.mul(s), &h.identity());
    }
    r
}

/// Entrywise image under a canonical ring map.
pub fn base_change(h: &HopfAlgebraData, target: RingSpec) -> Result<HopfAlgebraData> {
    h.ring().canonical_map_to(target)?;
    HopfAlgebraData::new(
        target,
        h.basis_labels().to_vec(),
        h.mul().base_change(target)?,
        h.unit().base_change(target)?,
        h.comul().base_change(target)?,
        h.counit().base_change(target)?,
        h.antipode().base_change(target)?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `Z C_2` written out by hand.
    fn zc2() -> HopfAlgebraData {
        let z = RingSpec::Integers;
        let mul = Matrix::from_i64(z, &[vec![1, 0, 0, 1], vec![0, 1, 1, 0]]);
        let unit = Matrix::from_i64(z, &[vec![1], vec![0]]);
        let comul = Matrix::from_i64(z, &[vec![1, 0], vec![0, 0], vec![0, 0], vec![0, 1]]);
        let counit = Matrix::from_i64(z, &[vec![1, 1]]);
        let s = Matrix::identity(z, 2);
        HopfAlgebraData::new(z, default_labels(2), mul, unit, comul, counit, s).unwrap()
    }

    #[test]
    fn hand_written_group_algebra_passes() {
        let h = zc2();
        assert!(verify_hopf(&h).passed(), "{}", verify_hopf(&h));
        assert!(h.commutative() && h.cocommutative());
        assert!(antipode_properties_check(&h).passed());
    }

    /// Coordinate coalgebra of constant `C_2` with the given counit.
    fn c2_coalgebra(counit: &[i64]) -> CoalgebraData {
        let z = RingSpec::Integers;
        let comul = Matrix::from_i64(z, &[vec![1, 0], vec![0, 1], vec![0, 1], vec![1, 0]]);
        CoalgebraData::new(z, default_labels(2), comul, Matrix::from_i64(z, &[counit.to_vec()])).unwrap()
    }

    #[test]
    fn coalgebra_counit_checks() {
        assert!(verify_coalgebra(&c2_coalgebra(&[1, 0])).passed());
        let bad = verify_coalgebra(&c2_coalgebra(&[0, 1]));
        assert!(bad.get("coassociativity").unwrap().passed);
        for name in ["left counit", "right counit"] {
            let c = bad.get(name).unwrap();
            assert!(!c.passed);
            assert_eq!(c.witness, Some(0));
        }
        let z = RingSpec::Integers;
        let unit = CoalgebraData::new(z, default_labels(1), Matrix::from_i64(z, &[vec![1]]), Matrix::from_i64(z, &[vec![1]])).unwrap();
        assert!(verify_coalgebra(&unit).passed());
    }

    #[test]
    fn dual_is_involutive_on_matrices() {
        let h = zc2();
        let dd = dual_hopf(&dual_hopf(&h));
        assert_eq!(dd.mul(), h.mul());
        assert_eq!(dd.comul(), h.comul());
        assert_eq!(dd.antipode(), h.antipode());
        assert!(verify_hopf(&dual_hopf(&h)).passed());
    }

    #[test]
    fn shape_errors() {
        let z = RingSpec::Integers;
        let bad = CoalgebraData::new(z, default_labels(2), Matrix::zeros(z, 3, 2), Matrix::zeros(z, 1, 2));
        assert!(matches!(bad, Err(Error::Malformed(_))));
    }

    #[test]
    fn convolution_unit() {
        let h = zc2();
        let f = Matrix::from_i64(RingSpec::Integers, &[vec![3, -1], vec![2, 5]]);
        let ue = h.unit_counit();
        assert_eq!(convolution(h.coalgebra(), h.algebra(), &f, &ue).unwrap(), f);
        assert_eq!(convolution(h.coalgebra(), h.algebra(), &ue, &f).unwrap(), f);
    }
}
