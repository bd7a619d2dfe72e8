//! Built-in group schemes addressed as `builtin:<name>@<ring>`.

use super::{alpha_pr, constant_group_scheme, group_algebra_scheme, mu_n, GroupSchemeData, GroupTable};
use crate::error::{Error, Result};
use crate::linalg::{is_prime, RingSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuiltinRef {
    pub name: String,
    pub ring: RingSpec,
}

/// Parses `builtin:<name>@<ring>`; the `builtin:` prefix is optional.
pub fn parse_builtin_ref(s: &str) -> Result<BuiltinRef> {
    let body = s.strip_prefix("builtin:").unwrap_or(s);
    let (name, ring) = body
        .rsplit_once('@')
        .ok_or_else(|| Error::Parse(format!("expected <name>@<ring> in {s:?}")))?;
    Ok(BuiltinRef { name: name.to_string(), ring: ring.parse()? })
}

fn suffix_number(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok().filter(|&n| n >= 1)
}

/// `n = p^r` with `p` prime.
fn prime_power(n: usize) -> Option<(u64, u32)> {
    let p = (2..=n as u64).find(|p| n as u64 % p == 0)?;
    let (mut m, mut r) = (n as u64, 0);
    while m % p == 0 {
        m /= p;
        r += 1;
    }
    (m == 1 && is_prime(p)).then_some((p, r))
}

pub fn builtin_group(name: &str, ring: RingSpec) -> Result<GroupSchemeData> {
    let unknown = || Error::Parse(format!("unknown built-in group {name:?}"));
    let mut g = if name == "trivial" {
        constant_group_scheme(&GroupTable::trivial(), ring)?
    } else if name == "klein" {
        constant_group_scheme(&GroupTable::klein(), ring)?
    } else if name == "constant-S3" {
        constant_group_scheme(&GroupTable::symmetric3(), ring)?
    } else if let Some(n) = suffix_number(name, "constant-C") {
        constant_group_scheme(&GroupTable::cyclic(n), ring)?
    } else if let Some(n) = suffix_number(name, "group-algebra-C") {
        group_algebra_scheme(&GroupTable::cyclic(n), ring)?
    } else if let Some(n) = suffix_number(name, "mu") {
        mu_n(n, ring)?
    } else if let Some(n) = suffix_number(name, "alpha") {
        let (p, r) = prime_power(n).ok_or_else(unknown)?;
        alpha_pr(p, r, ring)?
    } else {
        return Err(unknown());
    };
    g.name = format!("{name}@{ring}");
    Ok(g)
}

/// The standard built-ins that make sense over `ring`.
pub fn builtin_names(ring: RingSpec) -> Vec<String> {
    let mut names: Vec<String> = ["trivial", "constant-C2", "constant-C3", "klein", "constant-S3", "group-algebra-C2", "group-algebra-C3", "mu2", "mu3"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let p = ring.characteristic();
    if p != 0 && is_prime(p) {
        names.push(format!("alpha{p}"));
        if p * p <= 9 {
            names.push(format!("alpha{}", p * p));
        }
    }
    names
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_refs() {
        let r = parse_builtin_ref("builtin:constant-C2@Z").unwrap();
        assert_eq!((r.name.as_str(), r.ring), ("constant-C2", RingSpec::Integers));
        let r = parse_builtin_ref("alpha4@F2").unwrap();
        assert_eq!(builtin_group(&r.name, r.ring).unwrap().rank(), 4);
        assert!(builtin_group("alpha6", RingSpec::PrimeField(2)).is_err());
        assert!(builtin_group("nonsense", RingSpec::Integers).is_err());
    }

    #[test]
    fn every_listed_builtin_builds() {
        for ring in [RingSpec::Integers, RingSpec::Rationals, RingSpec::PrimeField(2), RingSpec::PrimeField(3), RingSpec::IntegersMod(4)] {
            for n in builtin_names(ring) {
                builtin_group(&n, ring).unwrap_or_else(|e| panic!("{n}@{ring}: {e}"));
            }
        }
    }
}
