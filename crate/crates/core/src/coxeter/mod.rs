//! Coxeter groups of types `A(n)` (the symmetric group on `n` letters),
//! `B(n)` (signed permutations), `D(n)` (signed permutations with an even
//! number of sign changes) and the dihedral groups `I2(m)`.
//!
//! Permutations are functions and products are composed right to left:
//! `(w * v)(i) = w(v(i))`. Elements of types A, B and D are stored in
//! one-line notation; dihedral elements are stored as an alternating word
//! `(length, first letter)`.

mod composition;
mod element;
mod subgroup;

pub use composition::{comp_to_gens, gens_to_comp, SignedComposition};
pub use element::{enumerate_group, parabolic_element, GroupElement};
pub use subgroup::Subgroup;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the four infinite families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CoxFamily {
    /// The symmetric group on `n` letters (Coxeter rank `n - 1`).
    A(usize),
    /// Signed permutations of `n`.
    B(usize),
    /// Even signed permutations of `n`.
    D(usize),
    /// The dihedral group of order `2m`.
    I(usize),
}

impl CoxFamily {
    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            CoxFamily::A(n) | CoxFamily::B(n) => (1..=100).contains(&n),
            CoxFamily::D(n) => (2..=100).contains(&n),
            CoxFamily::I(m) => m >= 3,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::Invalid(format!("{self} is not a valid family")))
        }
    }

    /// Length of the one-line notation (0 for dihedral groups).
    pub fn degree(self) -> usize {
        match self {
            CoxFamily::A(n) | CoxFamily::B(n) | CoxFamily::D(n) => n,
            CoxFamily::I(_) => 0,
        }
    }

    pub fn is_signed(self) -> bool {
        matches!(self, CoxFamily::B(_) | CoxFamily::D(_))
    }

    /// The simple generators in canonical order (`t` first, then
    /// `s_1 < s_2 < ...`; `g1 < g2` for dihedral groups).
    pub fn generators(self) -> Vec<Generator> {
        match self {
            CoxFamily::A(n) => (1..n).map(Generator::S).collect(),
            CoxFamily::B(n) | CoxFamily::D(n) => std::iter::once(Generator::T)
                .chain((1..n).map(Generator::S))
                .collect(),
            CoxFamily::I(_) => vec![Generator::G1, Generator::G2],
        }
    }

    pub fn has_generator(self, s: Generator) -> bool {
        match (self, s) {
            (CoxFamily::A(n), Generator::S(i)) => i >= 1 && i < n,
            (CoxFamily::B(n) | CoxFamily::D(n), Generator::S(i)) => i >= 1 && i < n,
            (CoxFamily::B(_) | CoxFamily::D(_), Generator::T) => true,
            (CoxFamily::I(_), Generator::G1 | Generator::G2) => true,
            _ => false,
        }
    }

    pub fn check_generator(self, s: Generator) -> Result<()> {
        if self.has_generator(s) {
            Ok(())
        } else {
            Err(Error::Invalid(format!("{s} is not a generator of {self}")))
        }
    }

    /// Group order.
    pub fn order(self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match self {
            CoxFamily::A(n) => fact(n),
            CoxFamily::B(n) => fact(n) << n,
            CoxFamily::D(n) => fact(n) << (n - 1),
            CoxFamily::I(m) => 2 * m as u128,
        }
    }

    pub(crate) fn same_as(self, other: CoxFamily) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FamilyMismatch(self.to_string(), other.to_string()))
        }
    }
}

impl fmt::Display for CoxFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxFamily::A(n) => write!(f, "A({n})"),
            CoxFamily::B(n) => write!(f, "B({n})"),
            CoxFamily::D(n) => write!(f, "D({n})"),
            CoxFamily::I(m) => write!(f, "I({m})"),
        }
    }
}

impl FromStr for CoxFamily {
    type Err = Error;

    /// Accepts `A(6)`, `A6`, `B(5)`, `I(14)`, ...
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid family {s:?}"));
        let mut chars = s.chars();
        let tag = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str().trim();
        let rest = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(rest);
        let n: usize = rest.trim().parse().map_err(|_| bad())?;
        let fam = match tag.to_ascii_uppercase() {
            'A' => CoxFamily::A(n),
            'B' => CoxFamily::B(n),
            'D' => CoxFamily::D(n),
            'I' => CoxFamily::I(n),
            _ => return Err(bad()),
        };
        fam.validate()
    }
}

/// A simple reflection. The derived order is the canonical generator
/// order `t < s_1 < s_2 < ...`, `g1 < g2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    /// `t`: the sign change `(1)^-` in type B, `(1,-2)` in type D.
    T,
    /// `s_i = (i, i+1)`.
    S(usize),
    /// First dihedral generator.
    G1,
    /// Second dihedral generator.
    G2,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::T => write!(f, "t"),
            Generator::S(i) => write!(f, "s{i}"),
            Generator::G1 => write!(f, "g1"),
            Generator::G2 => write!(f, "g2"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "t" | "T" => return Ok(Generator::T),
            "g1" | "G1" => return Ok(Generator::G1),
            "g2" | "G2" => return Ok(Generator::G2),
            _ => {}
        }
        s.strip_prefix(['s', 'S'])
            .and_then(|i| i.parse::<usize>().ok())
            .filter(|&i| i >= 1)
            .map(Generator::S)
            .ok_or_else(|| Error::Parse(format!("invalid generator {s:?}")))
    }
}

/// Parses a comma separated generator set such as `t,s1,s3`. The empty
/// string (or `-`, `{}`) is the empty set.
pub fn parse_generator_set(s: &str) -> Result<BTreeSet<Generator>> {
    let s = s.trim();
    let s = s
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .unwrap_or(s);
    if s.trim().is_empty() || s.trim() == "-" {
        return Ok(BTreeSet::new());
    }
    s.split(',').map(str::parse).collect()
}

/// Renders a generator set as `t,s1,s3` (`-` for the empty set).
pub fn format_generator_set(gens: &BTreeSet<Generator>) -> String {
    if gens.is_empty() {
        return "-".to_string();
    }
    gens.iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Advances `v` to the next lexicographic permutation, returning `false`
/// (and leaving `v` sorted) after the last one. Handles repeated entries.
/// All subsets of the generators of `family`, ordered by bitmask over the
/// canonical generator order.
pub fn generator_subsets(family: CoxFamily) -> Vec<BTreeSet<Generator>> {
    let all = family.generators();
    (0u32..1 << all.len())
        .map(|mask| {
            all.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &g)| g)
                .collect()
        })
        .collect()
}

pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_order_is_canonical() {
        let mut gens = vec![Generator::S(3), Generator::T, Generator::S(1)];
        gens.sort();
        assert_eq!(gens, vec![Generator::T, Generator::S(1), Generator::S(3)]);
        assert!(Generator::G1 < Generator::G2);
    }

    #[test]
    fn family_parsing_and_orders() {
        assert_eq!("A(6)".parse::<CoxFamily>().unwrap(), CoxFamily::A(6));
        assert_eq!("b5".parse::<CoxFamily>().unwrap(), CoxFamily::B(5));
        assert!("D1".parse::<CoxFamily>().is_err());
        assert!("I(2)".parse::<CoxFamily>().is_err());
        assert_eq!(CoxFamily::A(3).order(), 6);
        assert_eq!(CoxFamily::B(2).order(), 8);
        assert_eq!(CoxFamily::D(2).order(), 4);
        assert_eq!(CoxFamily::B(5).order(), 3840);
        assert_eq!(CoxFamily::D(5).order(), 1920);
        assert_eq!(CoxFamily::I(7).order(), 14);
    }

    #[test]
    fn generator_sets() {
        let j = parse_generator_set("t,s1,s3").unwrap();
        assert_eq!(format_generator_set(&j), "t,s1,s3");
        assert!(parse_generator_set("").unwrap().is_empty());
        assert!(parse_generator_set("s0").is_err());
        assert!(parse_generator_set("x1").is_err());
    }

    #[test]
    fn permutations_with_repeats() {
        let mut v = vec![1, 1, 2];
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(seen, vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
    }
}
