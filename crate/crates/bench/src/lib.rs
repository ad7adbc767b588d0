//! Fixtures shared by the benchmarks.

use std::collections::BTreeSet;

use heckechar::coxeter::{parabolic_element, parse_generator_set};
use heckechar::{CoxFamily, Generator, GroupElement, Partition, SignedComposition};

pub fn gens(s: &str) -> BTreeSet<Generator> {
    parse_generator_set(s).expect("valid generator set")
}

pub fn comp(s: &str) -> SignedComposition {
    s.parse().expect("valid composition")
}

pub fn part(s: &str) -> Partition {
    s.parse().expect("valid partition")
}

/// The parabolic element of type `k`.
pub fn element(family: CoxFamily, k: &str) -> GroupElement {
    parabolic_element(family, &gens(k)).expect("generators of the family")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_parse() {
        assert_eq!(element(CoxFamily::A(6), "s1,s3").to_string(), "214356");
        assert_eq!(comp("-3,2").size(), 5);
        assert_eq!(part("3,2,1").size(), 6);
    }
}
