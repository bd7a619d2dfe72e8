//! Exact coefficient rings and their scalars.
//!
//! Every scalar is carried as a [`Rational`]; the ring decides which
//! rationals are canonical. Over `Z` only integers are allowed, over `Q`
//! every reduced fraction, and over `F_p` / `Z/n` the residues in `[0, m)`.

use std::fmt;
use std::str::FromStr;

use malachite::base::num::arithmetic::traits::{ExtendedGcd, Mod};
use malachite::base::num::basic::traits::{One, Zero};
use malachite::{Integer, Rational};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Scalar = Rational;

/// One of the supported exact coefficient rings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingSpec {
    Integers,
    Rationals,
    PrimeField(u64),
    IntegersMod(u64),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    // deterministic Miller-Rabin for 64-bit inputs
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        r
    };
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl RingSpec {
    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        Ok(RingSpec::PrimeField(p))
    }

    pub fn integers_mod(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRing(format!("modulus {n} must be at least 2")));
        }
        Ok(RingSpec::IntegersMod(n))
    }

    /// Re-checks the invariants of a value that may have been built directly.
    pub fn validate(self) -> Result<Self> {
        match self {
            RingSpec::PrimeField(p) => RingSpec::prime_field(p),
            RingSpec::IntegersMod(n) => RingSpec::integers_mod(n),
            r => Ok(r),
        }
    }

    pub fn is_field(self) -> bool {
        matches!(self, RingSpec::Rationals | RingSpec::PrimeField(_))
    }

    pub fn modulus(self) -> Option<u64> {
        match self {
            RingSpec::PrimeField(m) | RingSpec::IntegersMod(m) => Some(m),
            _ => None,
        }
    }

    /// Characteristic of the ring; zero for `Z` and `Q`.
    pub fn characteristic(self) -> u64 {
        self.modulus().unwrap_or(0)
    }

    pub fn kind_name(self) -> &'static str {
        match self {
            RingSpec::Integers => "Integers",
            RingSpec::Rationals => "Rationals",
            RingSpec::PrimeField(_) => "PrimeField",
            RingSpec::IntegersMod(_) => "IntegersMod",
        }
    }

    pub fn zero(self) -> Scalar {
        Rational::ZERO
    }

    pub fn one(self) -> Scalar {
        self.normalize_int(Integer::ONE)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        self.normalize_int(Integer::from(v))
    }

    pub(crate) fn normalize_int(self, v: Integer) -> Scalar {
        match self.modulus() {
            Some(m) => Rational::from(v.mod_op(Integer::from(m))),
            None => Rational::from(v),
        }
    }

    /// Maps an arbitrary rational to its canonical representative, if the
    /// ring contains it.
    pub fn normalize(self, v: &Rational) -> Result<Scalar> {
        match self {
            RingSpec::Rationals => Ok(v.clone()),
            RingSpec::Integers => {
                if v.denominator_ref() == &1u32 {
                    Ok(v.clone())
                } else {
                    Err(Error::NotInRing { value: v.to_string(), ring: self })
                }
            }
            RingSpec::PrimeField(m) | RingSpec::IntegersMod(m) => {
                let modulus = Integer::from(m);
                let num = Integer::from_sign_and_abs_ref(*v >= 0u32, v.numerator_ref());
                let den = Integer::from(v.denominator_ref().clone());
                let num = num.mod_op(&modulus);
                if den == 1u32 {
                    return Ok(Rational::from(num));
                }
                let (g, inv, _) = den.mod_op(&modulus).extended_gcd(modulus.clone());
                if g != 1u32 {
                    return Err(Error::NotInRing { value: v.to_string(), ring: self });
                }
                Ok(Rational::from((num * inv).mod_op(&modulus)))
            }
        }
    }

    pub(crate) fn reduce(self, v: Rational) -> Scalar {
        match self {
            RingSpec::Integers | RingSpec::Rationals => v,
            _ => self.normalize(&v).expect("scalar outside ring"),
        }
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a + b)
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a - b)
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a * b)
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        self.reduce(-a)
    }

    pub fn is_canonical(self, v: &Scalar) -> bool {
        match self.normalize(v) {
            Ok(n) => &n == v,
            Err(_) => false,
        }
    }

    pub fn is_unit(self, a: &Scalar) -> bool {
        self.inverse(a).is_some()
    }

    pub fn inverse(self, a: &Scalar) -> Option<Scalar> {
        match self {
            RingSpec::Rationals => (*a != 0u32).then(|| Rational::ONE / a),
            RingSpec::Integers => (*a == 1u32 || *a == -1i32).then(|| a.clone()),
            RingSpec::PrimeField(m) | RingSpec::IntegersMod(m) => {
                let modulus = Integer::from(m);
                let x = scalar_to_integer(a)?;
                let (g, inv, _) = x.extended_gcd(modulus.clone());
                (g == 1u32).then(|| Rational::from(inv.mod_op(&modulus)))
            }
        }
    }

    /// Whether a canonical ring map `self -> target` exists.
    pub fn canonical_map_to(self, target: RingSpec) -> Result<()> {
        use RingSpec::*;
        let ok = match (self, target) {
            (a, b) if a == b => true,
            (Integers, _) => true,
            (PrimeField(p), IntegersMod(n)) => p == n,
            (IntegersMod(n), PrimeField(p)) => n % p == 0,
            (IntegersMod(n), IntegersMod(m)) => n % m == 0,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedBaseChange { from: self, to: target })
        }
    }

    pub fn parse_scalar(self, s: &str) -> Result<Scalar> {
        let v = Rational::from_str(s.trim())
            .map_err(|_| Error::Parse(format!("not an exact scalar: {s:?}")))?;
        self.normalize(&v)
    }
}

pub(crate) fn scalar_to_integer(v: &Rational) -> Option<Integer> {
    if v.denominator_ref() != &1u32 {
        return None;
    }
    Some(Integer::from_sign_and_abs_ref(*v >= 0u32, v.numerator_ref()))
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::Rationals => write!(f, "Q"),
            RingSpec::PrimeField(p) => write!(f, "F{p}"),
            RingSpec::IntegersMod(n) => write!(f, "Z/{n}"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    /// Short names: `Z`, `Q`, `F<p>`, `Z/<n>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "Z" | "ZZ" => return Ok(RingSpec::Integers),
            "Q" | "QQ" => return Ok(RingSpec::Rationals),
            _ => {}
        }
        let bad = || Error::Parse(format!("unknown ring {s:?}"));
        if let Some(n) = s.strip_prefix("Z/") {
            return RingSpec::integers_mod(n.parse().map_err(|_| bad())?);
        }
        if let Some(p) = s.strip_prefix('F') {
            return RingSpec::prime_field(p.parse().map_err(|_| bad())?);
        }
        Err(bad())
    }
}

#[derive(Serialize, Deserialize)]
struct RingJson {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    modulus: Option<u64>,
}

impl Serialize for RingSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RingJson { kind: self.kind_name().to_string(), modulus: self.modulus() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RingSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RingJson::deserialize(deserializer)?;
        let need = |m: Option<u64>| m.ok_or_else(|| D::Error::custom("missing modulus"));
        let ring = match raw.kind.as_str() {
            "Integers" => RingSpec::Integers,
            "Rationals" => RingSpec::Rationals,
            "PrimeField" => RingSpec::prime_field(need(raw.modulus)?).map_err(D::Error::custom)?,
            "IntegersMod" => RingSpec::integers_mod(need(raw.modulus)?).map_err(D::Error::custom)?,
            other => return Err(D::Error::custom(format!("unknown ring kind {other:?}"))),
        };
        Ok(ring)
    }
}
