use super::{comodule_from_representation, regular_representation, verify_comodule, ComoduleData, Side};
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebraData, VerificationReport};
use crate::linalg::Matrix;
use crate::schemes::GroupSchemeData;

/// An algebra in the category of comodules: the multiplication and unit
/// are comodule maps for the diagonal coaction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GAlgebraData {
    pub comodule: ComoduleData,
    /// `m × m²`.
    pub mul: Matrix,
    /// `m × 1`.
    pub unit: Matrix,
}

impl GAlgebraData {
    pub fn new(comodule: ComoduleData, mul: Matrix, unit: Matrix) -> Result<Self> {
        let m = comodule.rank();
        if mul.shape() != (m, m * m) || unit.shape() != (m, 1) {
            return Err(Error::Malformed(format!("multiplication must be {m}x{} and unit {m}x1", m * m)));
        }
        Ok(GAlgebraData { comodule, mul, unit })
    }

    pub fn rank(&self) -> usize {
        self.comodule.rank()
    }

    pub fn over(&self) -> &HopfAlgebraData {
        self.comodule.over()
    }
}

pub fn verify_galgebra(a: &GAlgebraData) -> VerificationReport {
    let h = a.over();
    let ring = h.ring();
    let (m, d) = (a.rank(), h.rank());
    let id = Matrix::identity(ring, m);
    let mut r = verify_comodule(&a.comodule);
    r.compare("associativity", &a.mul.mul(&a.mul.kron(&id)), &a.mul.mul(&id.kron(&a.mul)));
    r.compare("left unit", &a.mul.mul(&a.unit.kron(&id)), &id);
    r.compare("right unit", &a.mul.mul(&id.kron(&a.unit)), &id);
    let coaction = a.comodule.coaction();
    let split = coaction.kron(coaction).permute_tensor_rows(&[m, d, m, d], &[0, 2, 1, 3]);
    r.compare("multiplication is a comodule map", &coaction.mul(&a.mul), &a.mul.kron(h.mul()).mul(&split));
    r.compare("unit is a comodule map", &coaction.mul(&a.unit), &a.unit.kron(h.unit()));
    r
}

/// The base ring with trivial coaction.
pub fn trivial_galgebra(h: &HopfAlgebraData) -> GAlgebraData {
    let one = Matrix::identity(h.ring(), 1);
    GAlgebraData { comodule: ComoduleData::trivial(h, 1), mul: one.clone(), unit: one }
}

/// `k[G]` with its own multiplication and the right regular coaction.
pub fn regular_galgebra(h: &HopfAlgebraData) -> GAlgebraData {
    GAlgebraData { comodule: regular_representation(h, Side::Right), mul: h.mul().clone(), unit: h.unit().clone() }
}

/// An algebra on which a constant group acts through the matrices `mats`;
/// fails unless every matrix is an algebra automorphism.
pub fn galgebra_from_action(g: &GroupSchemeData, mul: Matrix, unit: Matrix, mats: &[Matrix]) -> Result<GAlgebraData> {
    let comodule = comodule_from_representation(g, mats)?;
    let a = GAlgebraData::new(comodule, mul, unit)?;
    let report = verify_galgebra(&a);
    if let Some(c) = report.failures().next() {
        return Err(Error::Malformed(format!("not a G-algebra: {} fails", c.name)));
    }
    Ok(a)
}
