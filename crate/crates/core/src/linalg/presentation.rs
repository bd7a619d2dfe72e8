//! Finitely presented modules in invariant-factor form, and the subquotient
//! machinery that produces them together with explicit generators.

use std::fmt;

use malachite::base::num::arithmetic::traits::UnsignedAbs;
use malachite::Integer;
use serde::{Deserialize, Serialize};

use super::domain::{Domain, Row};
use super::echelon::EchelonBasis;
use super::ring::RingSpec;
use super::snf::{dense_snf, sparse_invariant_factors};
use crate::error::{Error, Result};

/// `R^free_rank ⊕ R/(d_1) ⊕ … ⊕ R/(d_k)` with `d_1 | d_2 | … | d_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModulePresentation {
    pub ring: RingSpec,
    pub free_rank: usize,
    #[serde(with = "integer_strings")]
    pub invariant_factors: Vec<Integer>,
}

mod integer_strings {
    use std::str::FromStr;

    use malachite::Integer;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Integer], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Integer>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter().map(|s| Integer::from_str(s).map_err(|_| D::Error::custom(format!("bad integer {s:?}")))).collect()
    }
}

impl ModulePresentation {
    pub fn new(ring: RingSpec, free_rank: usize, invariant_factors: Vec<Integer>) -> Result<Self> {
        let p = ModulePresentation { ring, free_rank, invariant_factors };
        p.validate()?;
        Ok(p)
    }

    pub fn zero(ring: RingSpec) -> Self {
        ModulePresentation { ring, free_rank: 0, invariant_factors: Vec::new() }
    }

    pub fn free(ring: RingSpec, rank: usize) -> Self {
        ModulePresentation { ring, free_rank: rank, invariant_factors: Vec::new() }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Malformed(m));
        if self.ring.is_field() && !self.invariant_factors.is_empty() {
            return bad("invariant factors over a field".into());
        }
        for w in self.invariant_factors.windows(2) {
            if w[0] == 0u32 || &w[1] % &w[0] != 0u32 {
                return bad(format!("{} does not divide {}", w[0], w[1]));
            }
        }
        for f in &self.invariant_factors {
            if *f <= 1u32 {
                return bad(format!("invariant factor {f} is not a positive non-unit"));
            }
            if let Some(n) = self.ring.modulus() {
                if Integer::from(n) % f != 0u32 || *f == n {
                    return bad(format!("invariant factor {f} is not a proper divisor of {n}"));
                }
            }
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Number of generators in the presentation.
    pub fn num_generators(&self) -> usize {
        self.free_rank + self.invariant_factors.len()
    }

    /// The same module viewed as an abelian group, presented over `Z`.
    pub fn as_abelian_group(&self) -> Result<ModulePresentation> {
        match self.ring {
            RingSpec::Integers => Ok(self.clone()),
            RingSpec::Rationals => {
                if self.is_zero() {
                    Ok(ModulePresentation::zero(RingSpec::Integers))
                } else {
                    Err(Error::UnsupportedRing { ring: self.ring, what: "not a finitely generated abelian group" })
                }
            }
            RingSpec::PrimeField(n) | RingSpec::IntegersMod(n) => {
                let mut f = self.invariant_factors.clone();
                f.extend(std::iter::repeat_n(Integer::from(n), self.free_rank));
                Ok(ModulePresentation { ring: RingSpec::Integers, free_rank: 0, invariant_factors: f })
            }
        }
    }

    /// Largest invariant factor over `Z`.
    pub fn torsion_exponent(&self) -> Result<Option<Integer>> {
        if self.ring != RingSpec::Integers {
            return Err(Error::UnsupportedRing { ring: self.ring, what: "torsion exponent" });
        }
        Ok(self.invariant_factors.last().cloned())
    }

    /// Whether multiplication by `n` kills the module.
    pub fn annihilated_by(&self, n: &Integer) -> Result<bool> {
        let g = self.as_abelian_group()?;
        Ok(g.free_rank == 0 && g.invariant_factors.iter().all(|f| n % f == 0u32))
    }
}

impl fmt::Display for ModulePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let base = match self.ring {
            RingSpec::IntegersMod(n) => format!("(Z/{n})"),
            r => r.to_string(),
        };
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push(base.clone()),
            r => parts.push(format!("{base}^{r}")),
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// A subquotient `L1 / L2` of `D^ambient`, with `L1` spanned by cycles and
/// `L2` by boundaries. Over `Z` with a modulus `n` both lattices contain
/// `n Z^ambient`, which realizes the subquotient over `Z/n`.
pub(crate) struct Subquotient<D: Domain> {
    pub d: D,
    modulus: Option<D::E>,
    kernel: EchelonBasis<D>,
    /// Diagonal entry per transformed coordinate; zero means free.
    diag: Vec<D::E>,
    /// Present when generators were requested.
    transforms: Option<(Vec<Vec<D::E>>, Vec<Vec<D::E>>)>,
    rank: usize,
    factors: Vec<D::E>,
}

impl<D: Domain> Subquotient<D> {
    pub fn new(
        d: D,
        ambient: usize,
        kernel_gens: Vec<Row<D::E>>,
        image_gens: Vec<Row<D::E>>,
        modulus: Option<D::E>,
        with_generators: bool,
    ) -> Result<Self> {
        let (kernel_gens, image_gens) = match &modulus {
            Some(n) => (
                super::modn::lattice_basis_mod(&d, n, ambient, kernel_gens),
                super::modn::lattice_basis_mod(&d, n, ambient, image_gens),
            ),
            None => (kernel_gens, image_gens),
        };
        let kernel = EchelonBasis::new(d.clone(), kernel_gens, true);
        let k = kernel.rank();
        let mut relations = Vec::with_capacity(image_gens.len());
        for (j, g) in image_gens.iter().enumerate() {
            match kernel.coordinates(g) {
                Some(c) => relations.push(c),
                None => return Err(Error::ContainmentViolation { column: j }),
            }
        }
        if with_generators {
            let r = relations.len();
            let snf = dense_snf(&d, relations, r, k, false, true);
            let mut diag = snf.diag;
            diag.truncate(k);
            while diag.len() < k {
                diag.push(d.zero());
            }
            let rank = diag.iter().filter(|x| !d.is_zero(x)).count();
            let factors = diag.iter().filter(|x| !d.is_zero(x) && !d.is_unit(x)).cloned().collect();
            Ok(Subquotient {
                d,
                modulus,
                kernel,
                diag,
                transforms: Some((snf.v.unwrap(), snf.vinv.unwrap())),
                rank,
                factors,
            })
        } else {
            let rows = relations.iter().map(|c| super::domain::dense_to_row(&d, c)).collect();
            let sf = sparse_invariant_factors(&d, k, rows);
            Ok(Subquotient { d, modulus, kernel, diag: Vec::new(), transforms: None, rank: sf.rank, factors: sf.factors })
        }
    }

    pub fn presentation(&self, ring: RingSpec) -> ModulePresentation {
        let free = self.kernel.rank() - self.rank;
        let to_int = |x: &D::E| -> Integer {
            let s = self.d.to_scalar(x);
            Integer::from_sign_and_abs_ref(s >= 0u32, s.numerator_ref())
        };
        let mut factors: Vec<Integer> = self.factors.iter().map(|x| to_int(x).unsigned_abs().into()).collect();
        let mut free_rank = free;
        if let Some(n) = &self.modulus {
            let n = to_int(n).unsigned_abs();
            let n = Integer::from(n);
            let before = factors.len();
            factors.retain(|f| *f != n);
            free_rank += before - factors.len();
        }
        ModulePresentation { ring, free_rank, invariant_factors: factors }
    }

    fn visible(&self) -> Vec<usize> {
        let d = &self.d;
        let mut tors: Vec<usize> = (0..self.diag.len()).filter(|&i| !d.is_zero(&self.diag[i]) && !d.is_unit(&self.diag[i])).collect();
        let free: Vec<usize> = (0..self.diag.len()).filter(|&i| d.is_zero(&self.diag[i])).collect();
        if let Some(n) = &self.modulus {
            // factors equal to the modulus are free summands over Z/n
            let (full, part): (Vec<usize>, Vec<usize>) = tors.into_iter().partition(|&i| self.diag[i] == *n);
            tors = part;
            tors.extend(full);
        }
        tors.extend(free);
        tors
    }

    /// Orders of the generators, in presentation order; zero means free.
    pub fn generator_orders(&self) -> Vec<D::E> {
        self.visible().into_iter().map(|i| self.diag[i].clone()).collect()
    }

    /// Cycle representatives of the presentation generators.
    pub fn generators(&self) -> Vec<Row<D::E>> {
        let (_, vinv) = self.transforms.as_ref().expect("subquotient built without generators");
        let d = &self.d;
        self.visible()
            .into_iter()
            .map(|i| {
                let mut acc: Row<D::E> = Vec::new();
                for (j, c) in vinv[i].iter().enumerate() {
                    if !d.is_zero(c) {
                        acc = super::domain::row_combine(d, &d.one(), &acc, c, &self.kernel.rows[j]);
                    }
                }
                self.reduce_mod(acc)
            })
            .collect()
    }

    fn reduce_mod(&self, row: Row<D::E>) -> Row<D::E> {
        match &self.modulus {
            None => row,
            Some(n) => row
                .into_iter()
                .map(|(c, v)| (c, self.d.div_rem_canonical(&v, n).1))
                .filter(|(_, v)| !self.d.is_zero(v))
                .collect(),
        }
    }

    /// Class of a cycle in generator coordinates, each reduced modulo its
    /// order. `None` when `z` is not a cycle.
    pub fn classify(&self, z: &Row<D::E>) -> Option<Vec<D::E>> {
        let (v, _) = self.transforms.as_ref().expect("subquotient built without generators");
        let d = &self.d;
        let coords = self.kernel.coordinates(z)?;
        let k = coords.len();
        let mut out = Vec::new();
        for i in self.visible() {
            let mut acc = d.zero();
            for (j, c) in coords.iter().enumerate().take(k) {
                if !d.is_zero(c) && !d.is_zero(&v[j][i]) {
                    acc = d.add(&acc, &d.mul(c, &v[j][i]));
                }
            }
            let ord = &self.diag[i];
            if !d.is_zero(ord) {
                acc = d.div_rem_canonical(&acc, ord).1;
            }
            out.push(acc);
        }
        Some(out)
    }

}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::domain::ZZ;

    fn zrow(v: &[i64]) -> Row<Integer> {
        v.iter().enumerate().filter(|(_, x)| **x != 0).map(|(i, x)| (i, Integer::from(*x))).collect()
    }

    #[test]
    fn z2_mod_2z() {
        let sq = Subquotient::new(ZZ, 2, vec![zrow(&[1, 0]), zrow(&[0, 1])], vec![zrow(&[2, 0])], None, true).unwrap();
        let p = sq.presentation(RingSpec::Integers);
        assert_eq!(p.free_rank, 1);
        assert_eq!(p.invariant_factors, vec![Integer::from(2)]);
        let gens = sq.generators();
        assert_eq!(gens.len(), 2);
        // the generator of order 2 classifies as 1, twice it as 0
        let c = sq.classify(&gens[0]).unwrap();
        assert_eq!(c, vec![Integer::from(1), Integer::from(0)]);
        let twice: Row<Integer> = gens[0].iter().map(|(i, v)| (*i, v * Integer::from(2))).collect();
        assert_eq!(sq.classify(&twice).unwrap(), vec![Integer::from(0), Integer::from(0)]);
    }

    #[test]
    fn containment_is_checked() {
        let err = Subquotient::new(ZZ, 2, vec![zrow(&[1, 0])], vec![zrow(&[0, 1])], None, false);
        assert!(matches!(err, Err(Error::ContainmentViolation { column: 0 })));
    }

    #[test]
    fn modular_lifting() {
        // Z/4 with cycles all of (Z/4)^1, boundaries 2 -> Z/2
        let sq = Subquotient::new(ZZ, 1, vec![zrow(&[1])], vec![zrow(&[2])], Some(Integer::from(4)), true).unwrap();
        let p = sq.presentation(RingSpec::IntegersMod(4));
        assert_eq!((p.free_rank, p.invariant_factors.clone()), (0, vec![Integer::from(2)]));
        let sq = Subquotient::new(ZZ, 1, vec![zrow(&[1])], vec![], Some(Integer::from(4)), false).unwrap();
        assert_eq!(sq.presentation(RingSpec::IntegersMod(4)).free_rank, 1);
    }

    #[test]
    fn abelian_group_view() {
        let p = ModulePresentation::new(RingSpec::IntegersMod(4), 1, vec![Integer::from(2)]).unwrap();
        let g = p.as_abelian_group().unwrap();
        assert_eq!(g.invariant_factors, vec![Integer::from(2), Integer::from(4)]);
        assert_eq!(g.torsion_exponent().unwrap(), Some(Integer::from(4)));
        assert!(p.torsion_exponent().is_err());
    }

    #[test]
    fn presentation_json_round_trip() {
        let p = ModulePresentation::new(RingSpec::Integers, 2, vec![Integer::from(2), Integer::from(6)]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"ring":{"kind":"Integers"},"free_rank":2,"invariant_factors":["2","6"]}"#);
        assert_eq!(serde_json::from_str::<ModulePresentation>(&s).unwrap(), p);
    }
}
