//! Exact linear algebra over `Z`, `Q`, `F_p` and `Z/n`.
//!
//! Elimination runs on sparse rows through an internal [`Domain`] back end.
//! `Z/n` is handled by lifting to `Z` and adjoining `n` times the identity
//! as extra relations.

mod domain;
mod echelon;
mod matrix;
mod modn;
mod presentation;
mod ring;
mod snf;
mod sparse;

pub use matrix::{Matrix, SparseMatrix};
pub use presentation::ModulePresentation;
pub use ring::{is_prime, RingSpec, Scalar};

pub(crate) use domain::{row_combine, row_scale, Domain, Fp, Row, QQ, ZZ};
pub(crate) use echelon::{ColumnReduction, EchelonBasis};
pub(crate) use presentation::Subquotient;
pub(crate) use ring::{gcd_u64, scalar_to_integer};
pub(crate) use snf::{dense_snf, sparse_invariant_factors};
pub(crate) use sparse::{lattice_contains, lattice_reduce, lattice_solve, sparse_kernel, sparse_rank_factors, AnySubquotient};
pub use sparse::SparseVec;

use malachite::base::num::arithmetic::traits::Mod;
use malachite::{Integer, Rational};

use crate::error::{Error, Result};

/// Runs `$body` with `$d` bound to the back end for `$ring`. `Z/n` binds the
/// integer back end; callers pass the modulus separately.
macro_rules! with_domain {
    ($ring:expr, $d:ident => $body:expr) => {
        match $ring {
            $crate::linalg::RingSpec::Integers | $crate::linalg::RingSpec::IntegersMod(_) => {
                let $d = $crate::linalg::ZZ;
                $body
            }
            $crate::linalg::RingSpec::Rationals => {
                let $d = $crate::linalg::QQ;
                $body
            }
            $crate::linalg::RingSpec::PrimeField(p) => {
                let $d = $crate::linalg::Fp { p };
                $body
            }
        }
    };
}
pub(crate) use with_domain;

/// Modulus element for the lifted `Z/n` back end.
pub(crate) fn lift_modulus<D: Domain>(d: &D, ring: RingSpec) -> Option<D::E> {
    match ring {
        RingSpec::IntegersMod(n) => Some(d.from_scalar(&Rational::from(n))),
        _ => None,
    }
}

pub(crate) fn columns_of<D: Domain>(d: &D, m: &Matrix) -> Vec<Row<D::E>> {
    let mut cols: Vec<Row<D::E>> = vec![Vec::new(); m.cols()];
    for i in 0..m.rows() {
        for (j, v) in m.row(i).iter().enumerate() {
            if *v != 0u32 {
                cols[j].push((i, d.from_scalar(v)));
            }
        }
    }
    cols
}

pub(crate) fn rows_of<D: Domain>(d: &D, m: &Matrix) -> Vec<Row<D::E>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().enumerate().filter(|(_, v)| **v != 0u32).map(|(j, v)| (j, d.from_scalar(v))).collect())
        .collect()
}

pub(crate) fn sparse_columns_of<D: Domain>(d: &D, m: &SparseMatrix) -> Vec<Row<D::E>> {
    (0..m.cols()).map(|j| m.column(j).iter().map(|(i, v)| (*i, d.from_scalar(v))).collect()).collect()
}

/// Matrix whose columns are the given sparse vectors.
pub(crate) fn matrix_from_columns<D: Domain>(d: &D, ring: RingSpec, nrows: usize, cols: &[Row<D::E>]) -> Matrix {
    let mut m = Matrix::zeros(ring, nrows, cols.len());
    for (j, c) in cols.iter().enumerate() {
        for (i, v) in c {
            m.set(i.to_owned(), j, ring.reduce(d.to_scalar(v)));
        }
    }
    m
}

pub(crate) fn vector_to_row<D: Domain>(d: &D, v: &[Scalar]) -> Row<D::E> {
    v.iter().enumerate().filter(|(_, x)| **x != 0u32).map(|(i, x)| (i, d.from_scalar(x))).collect()
}

pub(crate) fn row_to_vector<D: Domain>(d: &D, ring: RingSpec, r: &Row<D::E>, n: usize) -> Vec<Scalar> {
    let mut v = vec![ring.zero(); n];
    for (i, x) in r {
        v[*i] = ring.reduce(d.to_scalar(x));
    }
    v
}

/// Kernel generators of the map with the given columns, reduced into the
/// ring. Over `Z/n` elimination runs modulo `n`.
pub(crate) fn kernel_rows<D: Domain>(d: &D, ring: RingSpec, nrows: usize, cols: Vec<Row<D::E>>) -> Vec<Row<D::E>> {
    match lift_modulus(d, ring) {
        None => ColumnReduction::new(d.clone(), nrows, cols).kernel().to_vec(),
        Some(n) => echelon_rows(d, ring, modn::kernel_mod(d, &n, cols)),
    }
}

/// Echelon basis of the span of `rows`; over `Z/n` the span is taken
/// modulo `n` and the rows are reduced into `[0, n)`.
pub(crate) fn echelon_rows<D: Domain>(d: &D, ring: RingSpec, rows: Vec<Row<D::E>>) -> Vec<Row<D::E>> {
    match lift_modulus(d, ring) {
        None => EchelonBasis::new(d.clone(), rows, true).rows,
        Some(n) => modn::echelon_mod(d, &n, rows),
    }
}

/// Columns spanning the same submodule as the columns of `m`, in echelon
/// form.
pub fn span_basis(m: &Matrix) -> Matrix {
    let ring = m.ring();
    with_domain!(ring, d => {
        let rows = echelon_rows(&d, ring, columns_of(&d, m));
        matrix_from_columns(&d, ring, m.rows(), &rows)
    })
}

/// Smith normal form `U m V = D` over `Z` or `Z/n`.
pub fn smith_normal_form(m: &Matrix) -> Result<(Matrix, Matrix, Matrix)> {
    let ring = m.ring();
    if ring.is_field() {
        return Err(Error::UseRowReduction(ring));
    }
    let d = ZZ;
    let a: Vec<Vec<Integer>> = (0..m.rows()).map(|i| m.row(i).iter().map(|v| d.from_scalar(v)).collect()).collect();
    let snf = dense_snf(&d, a, m.rows(), m.cols(), true, true);
    let (u, v) = (snf.u.unwrap(), snf.v.unwrap());
    let mut u = Matrix::from_fn(ring, m.rows(), m.rows(), |i, j| Rational::from(u[i][j].clone()));
    let v = Matrix::from_fn(ring, m.cols(), m.cols(), |i, j| Rational::from(v[i][j].clone()));
    let mut dm = Matrix::zeros(ring, m.rows(), m.cols());
    for (i, x) in snf.diag.iter().enumerate() {
        let mut x = x.clone();
        if let Some(n) = ring.modulus() {
            // replace d_i by its associate gcd(d_i, n) through a unit on row i
            let nn = Integer::from(n);
            let g = Integer::from(x.unsigned_abs_ref().gcd_ref(nn.unsigned_abs_ref()));
            if x.clone().mod_op(&nn) != 0u32 {
                let unit = associate_unit(&x, &g, n);
                let unit_s = ring.from_i64(unit as i64);
                for j in 0..u.cols() {
                    let val = ring.mul(u.get(i, j), &unit_s);
                    u.set(i, j, val);
                }
                x = g;
            }
        }
        dm.set(i, i, ring.reduce(Rational::from(x)));
    }
    Ok((u, dm, v))
}

/// A unit `u` of `Z/n` with `u x ≡ g (mod n)`, where `g = gcd(x, n)`.
fn associate_unit(x: &Integer, g: &Integer, n: u64) -> u64 {
    let xr = u64::try_from(&x.clone().mod_op(Integer::from(n))).unwrap();
    let gr = u64::try_from(g).unwrap();
    (1..n).find(|&u| gcd_u64(u, n) == 1 && (u as u128 * xr as u128) % n as u128 == gr as u128).expect("associate unit exists")
}

trait GcdRef {
    fn gcd_ref(&self, other: &malachite::Natural) -> malachite::Natural;
}

impl GcdRef for malachite::Natural {
    fn gcd_ref(&self, other: &malachite::Natural) -> malachite::Natural {
        use malachite::base::num::arithmetic::traits::Gcd;
        self.clone().gcd(other.clone())
    }
}

/// Columns generating the kernel of `m`.
pub fn kernel_basis(m: &Matrix) -> Matrix {
    let ring = m.ring();
    with_domain!(ring, d => {
        let ker = kernel_rows(&d, ring, m.rows(), columns_of(&d, m));
        matrix_from_columns(&d, ring, m.cols(), &ker)
    })
}

/// Some column `x` with `m x = b`.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    let ring = m.ring();
    if b.len() != m.rows() {
        return Err(Error::Malformed(format!("right-hand side has length {} instead of {}", b.len(), m.rows())));
    }
    Ok(with_domain!(ring, d => {
        let mut cols = columns_of(&d, m);
        let ncols = cols.len();
        if let Some(n) = lift_modulus(&d, ring) {
            cols.extend((0..m.rows()).map(|i| vec![(i, n.clone())]));
        }
        let red = ColumnReduction::new(d.clone(), m.rows(), cols);
        red.solve(&vector_to_row(&d, b)).map(|x| {
            let x: Row<_> = x.into_iter().filter(|(c, _)| *c < ncols).collect();
            row_to_vector(&d, ring, &x, ncols)
        })
    }))
}

/// Rank over `Z`, `Q` or `F_p`.
pub fn rank(m: &Matrix) -> Result<usize> {
    let ring = m.ring();
    if let RingSpec::IntegersMod(_) = ring {
        return Err(Error::UnsupportedRing { ring, what: "rank" });
    }
    Ok(with_domain!(ring, d => sparse_invariant_factors(&d, m.cols(), rows_of(&d, m)).rank))
}

/// Two-sided inverse, if `m` is invertible over its ring.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let ring = m.ring();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![ring.zero(); n];
        e[j] = ring.one();
        cols.push(solve(m, &e).ok()??);
    }
    let mut inv = Matrix::zeros(ring, n, n);
    for (j, c) in cols.into_iter().enumerate() {
        for (i, v) in c.into_iter().enumerate() {
            inv.set(i, j, v);
        }
    }
    (m.mul(&inv) == Matrix::identity(ring, n)).then_some(inv)
}

/// Determinant of a square matrix.
pub fn determinant(m: &Matrix) -> Result<Scalar> {
    if !m.is_square() {
        return Err(Error::Malformed("determinant of a non-square matrix".into()));
    }
    let ring = m.ring();
    let n = m.rows();
    // over Q, then reduced into the ring
    let mut a: Vec<Vec<Rational>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut det = Rational::from(1);
    for t in 0..n {
        let Some(p) = (t..n).find(|&i| a[i][t] != 0u32) else { return Ok(ring.zero()) };
        if p != t {
            a.swap(p, t);
            det = -det;
        }
        let pv = a[t][t].clone();
        det *= &pv;
        for i in t + 1..n {
            if a[i][t] == 0u32 {
                continue;
            }
            let q = &a[i][t] / &pv;
            let (top, bottom) = a.split_at_mut(i);
            for (x, y) in bottom[0].iter_mut().zip(&top[t]).skip(t) {
                *x -= &q * y;
            }
        }
    }
    ring.normalize(&det)
}

/// Presentation of `span(kernel_gens) / span(image_gens)` inside
/// `R^ambient_rank`; generators are the matrix columns.
pub fn subquotient(ambient_rank: usize, kernel_gens: &Matrix, image_gens: &Matrix) -> Result<ModulePresentation> {
    let ring = kernel_gens.ring();
    if image_gens.ring() != ring {
        return Err(Error::RingMismatch(ring, image_gens.ring()));
    }
    if kernel_gens.rows() != ambient_rank || image_gens.rows() != ambient_rank {
        return Err(Error::Malformed("generator columns must have length ambient_rank".into()));
    }
    with_domain!(ring, d => {
        let sq = Subquotient::new(
            d,
            ambient_rank,
            columns_of(&d, kernel_gens),
            columns_of(&d, image_gens),
            lift_modulus(&d, ring),
            false,
        )?;
        Ok(sq.presentation(ring))
    })
}

/// Largest invariant factor of a presentation over `Z`.
pub fn torsion_exponent(p: &ModulePresentation) -> Result<Option<Integer>> {
    p.torsion_exponent()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snf_over_z_mod_n_uses_gcd_associates() {
        let r = RingSpec::IntegersMod(4);
        let m = Matrix::from_i64(r, &[vec![3, 0], vec![0, 2]]);
        let (u, d, v) = smith_normal_form(&m).unwrap();
        assert_eq!(u.mul(&m).mul(&v), d);
        assert_eq!(d, Matrix::from_i64(r, &[vec![1, 0], vec![0, 2]]));
        assert!(inverse(&u).is_some() && inverse(&v).is_some());
    }

    #[test]
    fn snf_rejects_fields() {
        let m = Matrix::identity(RingSpec::Rationals, 2);
        assert!(matches!(smith_normal_form(&m), Err(Error::UseRowReduction(_))));
    }

    #[test]
    fn kernel_mod_four() {
        let m = Matrix::from_i64(RingSpec::IntegersMod(4), &[vec![2]]);
        assert_eq!(kernel_basis(&m), Matrix::from_i64(RingSpec::IntegersMod(4), &[vec![2]]));
    }

    #[test]
    fn solve_mod_n_and_determinant() {
        let r = RingSpec::IntegersMod(6);
        let m = Matrix::from_i64(r, &[vec![5]]);
        assert_eq!(solve(&m, &[r.from_i64(1)]).unwrap(), Some(vec![r.from_i64(5)]));
        let z = Matrix::from_i64(RingSpec::Integers, &[vec![2, 1], vec![1, 1]]);
        assert_eq!(determinant(&z).unwrap(), Rational::from(1));
        assert_eq!(inverse(&z).unwrap(), Matrix::from_i64(RingSpec::Integers, &[vec![1, -1], vec![-1, 2]]));
    }

    #[test]
    fn subquotient_over_f2() {
        let f2 = RingSpec::PrimeField(2);
        let k = Matrix::identity(f2, 3);
        let i = Matrix::from_i64(f2, &[vec![1], vec![1], vec![0]]);
        let p = subquotient(3, &k, &i).unwrap();
        assert_eq!((p.free_rank, p.invariant_factors.len()), (2, 0));
    }
}
