//! Ring-erased entry points for sparse vectors of [`Scalar`]s, used by the
//! cochain-level code.

use malachite::Integer;

use super::domain::{Domain, Fp, Row, QQ, ZZ};
use super::presentation::{ModulePresentation, Subquotient};
use super::ring::{scalar_to_integer, RingSpec, Scalar};
use super::{kernel_rows, lift_modulus, sparse_columns_of, sparse_invariant_factors, with_domain, ColumnReduction, EchelonBasis, SparseMatrix};
use crate::error::Result;

pub type SparseVec = Vec<(usize, Scalar)>;

fn to_row<D: Domain>(d: &D, v: &SparseVec) -> Row<D::E> {
    v.iter().filter(|(_, x)| *x != 0u32).map(|(i, x)| (*i, d.from_scalar(x))).collect()
}

fn from_row<D: Domain>(d: &D, ring: RingSpec, r: &Row<D::E>) -> SparseVec {
    r.iter().map(|(i, x)| (*i, ring.reduce(d.to_scalar(x)))).filter(|(_, x)| *x != 0u32).collect()
}

/// A [`Subquotient`] with the back end chosen at run time.
pub(crate) enum AnySubquotient {
    Z(Subquotient<ZZ>, RingSpec),
    Q(Subquotient<QQ>),
    F(Subquotient<Fp>, RingSpec),
}

macro_rules! dispatch {
    ($self:expr, $s:ident, $d:ident, $ring:ident => $body:expr) => {
        match $self {
            AnySubquotient::Z($s, r) => {
                let $ring = *r;
                let $d = &$s.d;
                $body
            }
            AnySubquotient::Q($s) => {
                let $ring = RingSpec::Rationals;
                let $d = &$s.d;
                $body
            }
            AnySubquotient::F($s, r) => {
                let $ring = *r;
                let $d = &$s.d;
                $body
            }
        }
    };
}

impl AnySubquotient {
    /// `span(kernel) / span(image)` in `ring^ambient`; over `Z/n` both
    /// spans are enlarged by `n Z^ambient`.
    pub fn new(ring: RingSpec, ambient: usize, kernel: &[SparseVec], image: &[SparseVec], with_generators: bool) -> Result<Self> {
        Ok(match ring {
            RingSpec::Integers | RingSpec::IntegersMod(_) => {
                let d = ZZ;
                let k = kernel.iter().map(|v| to_row(&d, v)).collect();
                let i = image.iter().map(|v| to_row(&d, v)).collect();
                AnySubquotient::Z(Subquotient::new(d, ambient, k, i, lift_modulus(&d, ring), with_generators)?, ring)
            }
            RingSpec::Rationals => {
                let d = QQ;
                let k = kernel.iter().map(|v| to_row(&d, v)).collect();
                let i = image.iter().map(|v| to_row(&d, v)).collect();
                AnySubquotient::Q(Subquotient::new(d, ambient, k, i, None, with_generators)?)
            }
            RingSpec::PrimeField(p) => {
                let d = Fp { p };
                let k = kernel.iter().map(|v| to_row(&d, v)).collect();
                let i = image.iter().map(|v| to_row(&d, v)).collect();
                AnySubquotient::F(Subquotient::new(d, ambient, k, i, None, with_generators)?, ring)
            }
        })
    }

    pub fn presentation(&self) -> ModulePresentation {
        dispatch!(self, s, _d, ring => s.presentation(ring))
    }

    pub fn generators(&self) -> Vec<SparseVec> {
        dispatch!(self, s, d, ring => s.generators().iter().map(|r| from_row(d, ring, r)).collect())
    }

    /// Orders of the generators as integers; zero means infinite order.
    /// Over `Z/n` an order equal to `n` is reported as `n`.
    pub fn generator_orders(&self) -> Vec<Scalar> {
        dispatch!(self, s, d, _ring => s.generator_orders().iter().map(|x| d.to_scalar(x)).collect())
    }

    /// Coordinates of the class of `z`, reduced modulo the generator
    /// orders; `None` when `z` is not in the cycle span.
    pub fn classify(&self, z: &SparseVec) -> Option<Vec<Scalar>> {
        dispatch!(self, s, d, ring => {
            let c = s.classify(&to_row(d, z))?;
            Some(c.iter().map(|x| ring.reduce(d.to_scalar(x))).collect())
        })
    }

}

/// Generators of the kernel of `m`, reduced into its ring.
pub(crate) fn sparse_kernel(m: &SparseMatrix) -> Vec<SparseVec> {
    let ring = m.ring();
    with_domain!(ring, d => {
        kernel_rows(&d, ring, m.rows(), sparse_columns_of(&d, m)).iter().map(|r| from_row(&d, ring, r)).collect()
    })
}

/// Rank and non-unit invariant factors (absolute values) of `m`. Over a
/// field the factor list is empty.
pub(crate) fn sparse_rank_factors(m: &SparseMatrix) -> (usize, Vec<Integer>) {
    let ring = m.ring();
    with_domain!(ring, d => {
        let sf = sparse_invariant_factors(&d, m.rows(), sparse_columns_of(&d, m));
        let factors = sf
            .factors
            .iter()
            .map(|x| {
                let i = scalar_to_integer(&d.to_scalar(x)).expect("integral factor");
                if i < 0 { -i } else { i }
            })
            .collect();
        (sf.rank, factors)
    })
}

/// Some `x` with `Σ x_j cols_j ≡ b` modulo `modulus`, computed over the
/// back end of `ring` (the integer one for `Z` and `Z/n`).
pub(crate) fn lattice_solve(ring: RingSpec, nrows: usize, cols: &[SparseVec], modulus: Option<u64>, b: &SparseVec) -> Option<SparseVec> {
    with_domain!(ring, d => {
        let mut c: Vec<Row<_>> = cols.iter().map(|v| to_row(&d, v)).collect();
        let n = c.len();
        if let Some(m) = modulus {
            let m = d.from_scalar(&Scalar::from(m));
            c.extend((0..nrows).map(|i| vec![(i, m.clone())]));
        }
        let red = ColumnReduction::new(d.clone(), nrows, c);
        red.solve(&to_row(&d, b)).map(|x| {
            x.into_iter().filter(|(j, _)| *j < n).map(|(j, v)| (j, d.to_scalar(&v))).filter(|(_, v)| *v != 0u32).collect()
        })
    })
}

/// Whether `v` lies in the span of `gens` plus `modulus · Z^dim`.
pub(crate) fn lattice_contains(ring: RingSpec, dim: usize, gens: &[SparseVec], modulus: Option<u64>, v: &SparseVec) -> bool {
    with_domain!(ring, d => {
        let mut rows: Vec<Row<_>> = gens.iter().map(|g| to_row(&d, g)).collect();
        if let Some(m) = modulus {
            rows = super::modn::lattice_basis_mod(&d, &d.from_scalar(&Scalar::from(m)), dim, rows);
        }
        EchelonBasis::new(d.clone(), rows, false).contains(&to_row(&d, v))
    })
}

/// Canonical representative of `v` modulo the span of `gens` (and of
/// `modulus · Z^dim`), reduced into `ring`.
pub(crate) fn lattice_reduce(ring: RingSpec, dim: usize, gens: &[SparseVec], v: &SparseVec) -> SparseVec {
    with_domain!(ring, d => {
        let mut rows: Vec<Row<_>> = gens.iter().map(|g| to_row(&d, g)).collect();
        if let Some(m) = lift_modulus(&d, ring) {
            rows = super::modn::lattice_basis_mod(&d, &m, dim, rows);
        }
        let basis = EchelonBasis::new(d.clone(), rows, true);
        from_row(&d, ring, &basis.reduce(&to_row(&d, v)))
    })
}
