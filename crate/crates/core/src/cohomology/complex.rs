use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebraData, VerificationReport};
use crate::linalg::{inverse, Matrix, RingSpec, Scalar, SparseMatrix, SparseVec};

/// Default cap on the rank of a single cochain module.
pub const DEFAULT_MAX_RANK: usize = 200_000;

/// The rank cap, overridable through `HOPFCOH_MAX_RANK`.
pub fn size_limit() -> usize {
    std::env::var("HOPFCOH_MAX_RANK").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_MAX_RANK)
}

/// `C^0 → C^1 → … → C^N` with `∂^n` stored column-sparse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainComplex {
    ring: RingSpec,
    ranks: Vec<usize>,
    #[serde(skip)]
    differentials: Vec<SparseMatrix>,
}

impl CochainComplex {
    /// Checks shapes and `∂^{n+1} ∂^n = 0`.
    pub fn new(ring: RingSpec, ranks: Vec<usize>, differentials: Vec<SparseMatrix>) -> Result<Self> {
        if ranks.is_empty() || differentials.len() + 1 != ranks.len() {
            return Err(Error::Malformed("a complex with N+1 modules needs N differentials".into()));
        }
        for (n, dn) in differentials.iter().enumerate() {
            if dn.ring() != ring {
                return Err(Error::RingMismatch(ring, dn.ring()));
            }
            if (dn.rows(), dn.cols()) != (ranks[n + 1], ranks[n]) {
                return Err(Error::Malformed(format!("differential {n} has the wrong shape")));
            }
        }
        for n in 0..differentials.len().saturating_sub(1) {
            if !differentials[n + 1].compose(&differentials[n]).is_zero() {
                return Err(Error::Internal(format!("∂^{} ∂^{} is not zero", n + 1, n)));
            }
        }
        Ok(CochainComplex { ring, ranks, differentials })
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Highest degree present.
    pub fn top_degree(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn differential(&self, n: usize) -> &SparseMatrix {
        &self.differentials[n]
    }

    pub fn differentials(&self) -> &[SparseMatrix] {
        &self.differentials
    }

    pub fn verify_square_zero(&self) -> VerificationReport {
        let mut r = VerificationReport::new();
        for n in 0..self.differentials.len().saturating_sub(1) {
            let zero = self.differentials[n + 1].compose(&self.differentials[n]).is_zero();
            r.flag(&format!("d{} d{} = 0", n + 1, n), zero, None);
        }
        r
    }
}

/// Structure constants of `(H, M)` prepared for building cobar
/// differentials. In normalized form the basis of `H` is `1` followed by
/// `e_j - ε(e_j) 1` for `j ≠ j0`, and only the second kind appears in
/// cochains: `C^n = M ⊗ (ker ε)^{⊗n}`.
#[derive(Clone, Debug)]
pub(crate) struct Cobar {
    pub ring: RingSpec,
    /// Rank of the coefficient module.
    pub m: usize,
    /// Rank of `H`.
    pub d: usize,
    /// Number of basis vectors of `H` used in cochains.
    pub e: usize,
    /// Per basis vector of `M`: `(w, a, c)` for `c e_w ⊗ b_a`.
    coaction: Vec<Vec<(usize, usize, Scalar)>>,
    /// Per cochain digit `j`: `(a, b, c)` for `c b_a ⊗ b_b` in `Δ(b_j)`.
    comul: Vec<Vec<(usize, usize, Scalar)>>,
    /// The unit in digits; empty in normalized form.
    unit: Vec<(usize, Scalar)>,
    /// Coordinates in the original basis of each cochain digit.
    digit_vectors: Vec<SparseVec>,
    pub normalized: bool,
}

fn column_entries(m: &Matrix, j: usize) -> Vec<(usize, Scalar)> {
    (0..m.rows()).filter(|&i| *m.get(i, j) != 0u32).map(|i| (i, m.get(i, j).clone())).collect()
}

impl Cobar {
    pub fn full(h: &HopfAlgebraData, coaction: &Matrix) -> Self {
        let d = h.rank();
        let m = coaction.cols();
        let split = |r: usize| (r / d, r % d);
        Cobar {
            ring: h.ring(),
            m,
            d,
            e: d,
            coaction: (0..m)
                .map(|v| column_entries(coaction, v).into_iter().map(|(r, c)| (split(r).0, split(r).1, c)).collect())
                .collect(),
            comul: (0..d)
                .map(|j| column_entries(h.comul(), j).into_iter().map(|(r, c)| (split(r).0, split(r).1, c)).collect())
                .collect(),
            unit: column_entries(h.unit(), 0),
            digit_vectors: (0..d).map(|j| vec![(j, h.ring().one())]).collect(),
            normalized: false,
        }
    }

    /// The index `j0` replaced by the unit: the first coefficient of `1`
    /// equal to `±1`, else the first unit coefficient.
    pub(crate) fn pivot(h: &HopfAlgebraData) -> Option<usize> {
        let ring = h.ring();
        let u = h.unit();
        let minus_one = ring.neg(&ring.one());
        (0..h.rank())
            .find(|&j| *u.get(j, 0) == ring.one() || *u.get(j, 0) == minus_one)
            .or_else(|| (0..h.rank()).find(|&j| ring.is_unit(u.get(j, 0))))
    }

    pub fn normalized(h: &HopfAlgebraData, coaction: &Matrix) -> Option<Self> {
        let ring = h.ring();
        let d = h.rank();
        let j0 = Cobar::pivot(h)?;
        let mut p = Matrix::zeros(ring, d, d);
        for i in 0..d {
            p.set(i, 0, h.unit().get(i, 0).clone());
        }
        let others: Vec<usize> = (0..d).filter(|&j| j != j0).collect();
        for (k, &j) in others.iter().enumerate() {
            let eps = h.counit().get(0, j).clone();
            for i in 0..d {
                let val = ring.sub(&if i == j { ring.one() } else { ring.zero() }, &ring.mul(&eps, h.unit().get(i, 0)));
                p.set(i, k + 1, val);
            }
        }
        let pinv = inverse(&p)?;
        let comul = pinv.kron(&pinv).mul(h.comul()).mul(&p);
        let m = coaction.cols();
        let coact = Matrix::identity(ring, m).kron(&pinv).mul(coaction);
        let keep = |r: usize| -> Option<(usize, usize)> {
            let (a, b) = (r / d, r % d);
            (b != 0).then(|| (a, b - 1))
        };
        let keep2 = |r: usize| -> Option<(usize, usize)> {
            let (a, b) = (r / d, r % d);
            (a != 0 && b != 0).then(|| (a - 1, b - 1))
        };
        Some(Cobar {
            ring,
            m,
            d,
            e: d - 1,
            coaction: (0..m)
                .map(|v| column_entries(&coact, v).into_iter().filter_map(|(r, c)| keep(r).map(|(w, a)| (w, a, c))).collect())
                .collect(),
            comul: (1..d)
                .map(|j| column_entries(&comul, j).into_iter().filter_map(|(r, c)| keep2(r).map(|(a, b)| (a, b, c))).collect())
                .collect(),
            unit: Vec::new(),
            digit_vectors: (1..d).map(|k| column_entries(&p, k)).collect(),
            normalized: true,
        })
    }

    /// Normalized when possible, full otherwise.
    pub fn best(h: &HopfAlgebraData, coaction: &Matrix) -> Self {
        Cobar::normalized(h, coaction).unwrap_or_else(|| Cobar::full(h, coaction))
    }

    pub fn rank(&self, n: usize) -> usize {
        self.m * self.e.pow(n as u32)
    }

    /// `∂^n = Σ_{i=0}^{n+1} (-1)^i ∂_i`: `∂_0` applies the coaction, `∂_i`
    /// for `1 ≤ i ≤ n` the comultiplication on the `i`-th tensor factor and
    /// `∂_{n+1}` appends the unit.
    pub fn differential(&self, n: usize) -> SparseMatrix {
        let ring = self.ring;
        let e = self.e;
        let en = e.pow(n as u32);
        let en1 = en * e;
        let mut columns = Vec::with_capacity(self.m * en);
        let mut acc: Vec<(usize, Scalar)> = Vec::new();
        for v in 0..self.m {
            for jj in 0..en {
                acc.clear();
                for (w, a, c) in &self.coaction[v] {
                    acc.push(((w * e + a) * en + jj, c.clone()));
                }
                for i in 1..=n {
                    let low = e.pow((n - i) as u32);
                    let prefix = jj / (low * e);
                    let digit = (jj / low) % e;
                    let suffix = jj % low;
                    let neg = i % 2 == 1;
                    for (a, b, c) in &self.comul[digit] {
                        let t = v * en1 + ((prefix * e + a) * e + b) * low + suffix;
                        acc.push((t, if neg { ring.neg(c) } else { c.clone() }));
                    }
                }
                let neg = (n + 1) % 2 == 1;
                for (u, c) in &self.unit {
                    acc.push((v * en1 + jj * e + u, if neg { ring.neg(c) } else { c.clone() }));
                }
                acc.sort_by_key(|(i, _)| *i);
                let mut col: Vec<(usize, Scalar)> = Vec::with_capacity(acc.len());
                for (i, c) in acc.drain(..) {
                    match col.last_mut() {
                        Some((j, x)) if *j == i => *x = ring.add(x, &c),
                        _ => col.push((i, c)),
                    }
                }
                col.retain(|(_, x)| *x != 0u32);
                columns.push(col);
            }
        }
        SparseMatrix::new(ring, self.m * en1, columns)
    }

    /// `C^0 … C^top`, refusing ranks above [`size_limit`].
    pub fn complex(&self, top: usize) -> Result<CochainComplex> {
        let limit = size_limit();
        let rank = self.rank(top);
        if rank > limit {
            return Err(Error::SizeLimit { rank, limit });
        }
        let ranks: Vec<usize> = (0..=top).map(|n| self.rank(n)).collect();
        let diffs = (0..top).map(|n| self.differential(n)).collect();
        CochainComplex::new(self.ring, ranks, diffs)
    }

    /// A cochain in this basis rewritten in `M ⊗ H^{⊗n}` on the original
    /// basis of `H`.
    pub fn to_full(&self, n: usize, v: &SparseVec) -> SparseVec {
        if !self.normalized {
            return v.clone();
        }
        let ring = self.ring;
        let (e, d) = (self.e, self.d);
        let en = e.pow(n as u32);
        let mut out: std::collections::BTreeMap<usize, Scalar> = Default::default();
        for (idx, c) in v {
            let (w, mut jj) = (idx / en, idx % en);
            let mut digits = vec![0; n];
            for k in (0..n).rev() {
                digits[k] = jj % e;
                jj /= e;
            }
            let mut terms: Vec<(usize, Scalar)> = vec![(w, c.clone())];
            for &dg in &digits {
                let mut next = Vec::with_capacity(terms.len() * self.digit_vectors[dg].len());
                for (t, x) in &terms {
                    for (i, y) in &self.digit_vectors[dg] {
                        next.push((t * d + i, ring.mul(x, y)));
                    }
                }
                terms = next;
            }
            for (t, x) in terms {
                let entry = out.entry(t).or_insert_with(|| ring.zero());
                *entry = ring.add(entry, &x);
            }
        }
        out.into_iter().filter(|(_, x)| *x != 0u32).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::ComoduleData;
    use crate::schemes::builtin_group;

    #[test]
    fn full_and_normalized_square_to_zero() {
        for (name, ring) in [("constant-C3", RingSpec::Integers), ("mu2", RingSpec::Rationals), ("alpha4", RingSpec::PrimeField(2)), ("constant-S3", RingSpec::Integers)] {
            let g = builtin_group(name, ring).unwrap();
            let reg = crate::rep::regular_representation(g.hopf(), crate::rep::Side::Left);
            for c in [Cobar::full(g.hopf(), reg.coaction()), Cobar::normalized(g.hopf(), reg.coaction()).unwrap()] {
                let top = if c.normalized { 3 } else { 2 };
                let cx = c.complex(top).unwrap();
                assert!(cx.verify_square_zero().passed(), "{name}");
            }
        }
    }

    #[test]
    fn mu2_first_differential_vanishes_on_trivial() {
        let g = builtin_group("mu2", RingSpec::Rationals).unwrap();
        let m = ComoduleData::trivial(g.hopf(), 1);
        let cx = Cobar::full(g.hopf(), m.coaction()).complex(1).unwrap();
        assert_eq!(cx.ranks(), &[1, 2]);
        assert!(cx.differential(0).is_zero());
    }

    #[test]
    fn size_guard() {
        let g = builtin_group("constant-S3", RingSpec::Integers).unwrap();
        let m = ComoduleData::trivial(g.hopf(), 1);
        let err = Cobar::full(g.hopf(), m.coaction()).complex(8).unwrap_err();
        assert!(matches!(err, Error::SizeLimit { .. }));
    }
}
