use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{CoxFamily, Generator};
use crate::error::{Error, Result};

/// A sequence of nonzero integers `(λ_1, ..., λ_p)`. A negative part marks a
/// block on which sign changes are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SignedComposition {
    parts: Vec<i32>,
}

impl SignedComposition {
    pub fn new(parts: Vec<i32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Invalid(
                "a composition needs at least one part".into(),
            ));
        }
        if parts.contains(&0) {
            return Err(Error::Invalid("composition parts must be nonzero".into()));
        }
        Ok(SignedComposition { parts })
    }

    pub fn parts(&self) -> &[i32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `Σ |λ_k|`.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|p| p.unsigned_abs() as usize).sum()
    }

    pub fn is_unsigned(&self) -> bool {
        self.parts.iter().all(|&p| p > 0)
    }

    /// True when only the first part may be negative, i.e. the composition
    /// describes a parabolic subgroup of the signed permutation group.
    pub fn is_parabolic(&self) -> bool {
        self.parts[1..].iter().all(|&p| p > 0)
    }

    /// Block index (0-based) of each position `1..=n`.
    pub fn block_of_positions(&self) -> Vec<usize> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(k, &p)| std::iter::repeat_n(k, p.unsigned_abs() as usize))
            .collect()
    }

    /// First position (1-based) of each block.
    pub fn block_starts(&self) -> Vec<usize> {
        let mut start = 1;
        self.parts
            .iter()
            .map(|&p| {
                let s = start;
                start += p.unsigned_abs() as usize;
                s
            })
            .collect()
    }

    pub(crate) fn check_family(&self, family: CoxFamily) -> Result<()> {
        if self.size() != family.degree() {
            return Err(Error::Invalid(format!(
                "composition {self} has size {}, but {family} needs {}",
                self.size(),
                family.degree()
            )));
        }
        match family {
            CoxFamily::A(_) if !self.is_unsigned() => Err(Error::Invalid(format!(
                "type A compositions have positive parts, got {self}"
            ))),
            CoxFamily::D(_) if !self.is_parabolic() => Err(Error::Unsupported(format!(
                "type D supports parabolic compositions only, got {self}"
            ))),
            CoxFamily::I(_) => Err(Error::Unsupported(
                "dihedral subgroups are given by generator sets".into(),
            )),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for SignedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for SignedComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Parse(format!("invalid composition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedComposition::new(parts)
    }
}

impl TryFrom<String> for SignedComposition {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SignedComposition> for String {
    fn from(c: SignedComposition) -> String {
        c.to_string()
    }
}

/// The generator set of the parabolic subgroup described by `λ`:
/// `s_i ∈ J` unless `i` is a partial sum of `|λ|`, and `t ∈ J` iff `λ_1 < 0`.
pub fn comp_to_gens(family: CoxFamily, lambda: &SignedComposition) -> Result<BTreeSet<Generator>> {
    lambda.check_family(family)?;
    if !lambda.is_parabolic() {
        return Err(Error::Invalid(format!(
            "{lambda} is quasi-parabolic and has no generator set"
        )));
    }
    let n = family.degree();
    let cuts: BTreeSet<usize> = lambda
        .parts()
        .iter()
        .scan(0, |acc, &p| {
            *acc += p.unsigned_abs() as usize;
            Some(*acc)
        })
        .collect();
    let mut gens: BTreeSet<Generator> = (1..n)
        .filter(|i| !cuts.contains(i))
        .map(Generator::S)
        .collect();
    if lambda.parts()[0] < 0 {
        if family == CoxFamily::D(n) && lambda.parts()[0] == -1 {
            return Err(Error::Unsupported(
                "in type D the block (-1) would need t without s1; use (1,...) instead".into(),
            ));
        }
        gens.insert(Generator::T);
    }
    Ok(gens)
}

/// Inverse of [`comp_to_gens`].
pub fn gens_to_comp(family: CoxFamily, gens: &BTreeSet<Generator>) -> Result<SignedComposition> {
    for &g in gens {
        family.check_generator(g)?;
    }
    if let CoxFamily::I(_) = family {
        return Err(Error::Unsupported(
            "dihedral subgroups have no composition".into(),
        ));
    }
    let n = family.degree();
    let has_t = gens.contains(&Generator::T);
    if family == CoxFamily::D(n) && has_t && !gens.contains(&Generator::S(1)) {
        return Err(Error::Unsupported(
            "type D generator sets containing t but not s1 are not normalized; \
             swap t and s1 (conjugate by the diagram automorphism) first"
                .into(),
        ));
    }
    let mut parts = Vec::new();
    let mut run = 1i32;
    for i in 1..n {
        if gens.contains(&Generator::S(i)) {
            run += 1;
        } else {
            parts.push(run);
            run = 1;
        }
    }
    parts.push(run);
    if has_t {
        parts[0] = -parts[0];
    }
    SignedComposition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::parse_generator_set;

    fn gens(s: &str) -> BTreeSet<Generator> {
        parse_generator_set(s).unwrap()
    }

    #[test]
    fn type_a_correspondence() {
        let a = CoxFamily::A(8);
        let c = gens_to_comp(a, &gens("s1,s2,s4,s7")).unwrap();
        assert_eq!(c.to_string(), "3,2,1,2");
        assert_eq!(comp_to_gens(a, &c).unwrap(), gens("s1,s2,s4,s7"));
        let c: SignedComposition = "1,4,2,1".parse().unwrap();
        assert_eq!(comp_to_gens(a, &c).unwrap(), gens("s2,s3,s4,s6"));
    }

    #[test]
    fn type_b_correspondence() {
        let b = CoxFamily::B(5);
        let c = gens_to_comp(b, &gens("t,s1,s3")).unwrap();
        assert_eq!(c.to_string(), "-2,2,1");
        assert_eq!(comp_to_gens(b, &c).unwrap(), gens("t,s1,s3"));
        let c = gens_to_comp(b, &gens("t,s1,s2,s4")).unwrap();
        assert_eq!(c.to_string(), "-3,2");
        assert_eq!(
            gens_to_comp(b, &gens("t")).unwrap().to_string(),
            "-1,1,1,1,1"
        );
        let q: SignedComposition = "2,-3".parse().unwrap();
        assert!(comp_to_gens(b, &q).is_err());
    }

    #[test]
    fn type_d_normalization() {
        let d = CoxFamily::D(5);
        assert!(matches!(
            gens_to_comp(d, &gens("t,s3")),
            Err(Error::Unsupported(_))
        ));
        assert_eq!(
            gens_to_comp(d, &gens("t,s1,s3")).unwrap().to_string(),
            "-2,2,1"
        );
    }

    #[test]
    fn round_trip_all_generator_sets() {
        for family in [CoxFamily::A(5), CoxFamily::B(4)] {
            let all = family.generators();
            for mask in 0u32..(1 << all.len()) {
                let j: BTreeSet<_> = all
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &g)| g)
                    .collect();
                let c = gens_to_comp(family, &j).unwrap();
                assert_eq!(comp_to_gens(family, &c).unwrap(), j);
            }
        }
    }

    #[test]
    fn parsing() {
        assert!("1,0,2".parse::<SignedComposition>().is_err());
        assert!("".parse::<SignedComposition>().is_err());
        let c: SignedComposition = "(-2,2,1)".parse().unwrap();
        assert_eq!(c.size(), 5);
        assert_eq!(c.block_of_positions(), vec![0, 0, 1, 1, 2]);
        assert_eq!(c.block_starts(), vec![1, 3, 5]);
    }
}
