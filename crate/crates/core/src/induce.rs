//! Induced characters from first principles.
//!
//! For a subgroup `H` with minimal coset representatives `X` and a linear
//! character `χ0` of its Hecke subalgebra,
//!
//! ```text
//! χ(T_w) = Σ_{x ∈ X} Σ_{u ∈ H} χ0(T_u) [T_{xu}] (T_w T_x).
//! ```
//!
//! Also here: the classical permutation-character values at `q = 1`, and the
//! type A recurrence that extends values from parabolic elements to all of
//! the symmetric group.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bounds::Bounds;
use crate::coxeter::{enumerate_group, CoxFamily, Generator, GroupElement, Subgroup};
use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::qpoly::LaurentHalf;

/// The one-dimensional character induced from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseChar {
    /// `T_u ↦ q^{ℓ(u)}`.
    Trivial,
    /// `T_u ↦ (-1)^{ℓ(u)}`.
    Sign,
}

impl BaseChar {
    pub const ALL: [BaseChar; 2] = [BaseChar::Trivial, BaseChar::Sign];

    /// The character value on `T_u` for `u` of length `len`.
    pub fn value_at_length(self, len: usize) -> LaurentHalf {
        match self {
            BaseChar::Trivial => LaurentHalf::q_pow(len as i64),
            BaseChar::Sign => LaurentHalf::constant(if len.is_multiple_of(2) { 1 } else { -1 }),
        }
    }

    /// Value at `q = 1`.
    pub fn value_q1(self, len: usize) -> i64 {
        match self {
            BaseChar::Trivial => 1,
            BaseChar::Sign => {
                if len.is_multiple_of(2) {
                    1
                } else {
                    -1
                }
            }
        }
    }
}

impl fmt::Display for BaseChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaseChar::Trivial => "trivial",
            BaseChar::Sign => "sign",
        })
    }
}

impl FromStr for BaseChar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "trivial" | "eta" | "1" => Ok(BaseChar::Trivial),
            "sign" | "eps" | "epsilon" => Ok(BaseChar::Sign),
            _ => Err(Error::Parse(format!("unknown base character {s:?}"))),
        }
    }
}

/// `χ0(T_u)` for the trivial or sign character.
pub fn base_char_value(base: BaseChar, u: &GroupElement) -> LaurentHalf {
    base.value_at_length(u.length())
}

/// Values of one induced character on a set of elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharValueTable {
    pub family: CoxFamily,
    /// The inducing subgroup, as a signed composition or generator set.
    pub lambda: String,
    pub base: BaseChar,
    pub values: BTreeMap<GroupElement, LaurentHalf>,
}

impl CharValueTable {
    pub fn new(family: CoxFamily, lambda: impl Into<String>, base: BaseChar) -> Self {
        CharValueTable {
            family,
            lambda: lambda.into(),
            base,
            values: BTreeMap::new(),
        }
    }

    pub fn get(&self, w: &GroupElement) -> Option<&LaurentHalf> {
        self.values.get(w)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<_> = self
            .values
            .iter()
            .map(|(w, v)| serde_json::json!({ "element": w.to_string(), "value": v.to_string() }))
            .collect();
        serde_json::json!({
            "family": self.family.to_string(),
            "lambda": self.lambda,
            "base": self.base.to_string(),
            "entries": entries,
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("character table JSON: bad {what}"));
        let field = |k: &str| value.get(k).and_then(|v| v.as_str()).ok_or_else(|| bad(k));
        let family: CoxFamily = field("family")?.parse()?;
        let mut table = CharValueTable::new(family, field("lambda")?, field("base")?.parse()?);
        for e in value
            .get("entries")
            .and_then(|v| v.as_array())
            .ok_or_else(|| bad("entries"))?
        {
            let w = e
                .get("element")
                .and_then(|v| v.as_str())
                .ok_or_else(|| bad("element"))?;
            let v = e
                .get("value")
                .and_then(|v| v.as_str())
                .ok_or_else(|| bad("value"))?;
            table
                .values
                .insert(GroupElement::parse(family, w)?, v.parse()?);
        }
        Ok(table)
    }
}

fn subgroup_label(h: &Subgroup) -> String {
    match (h.composition(), h.generators()) {
        (Some(c), _) => c.to_string(),
        (None, Some(g)) => crate::coxeter::format_generator_set(g),
        (None, None) => String::new(),
    }
}

/// Cached `T_w T_x` for a fixed `w`, shared between oracles for different
/// subgroups.
pub struct ProductCache {
    tw: HeckeElement,
    products: HashMap<GroupElement, HeckeElement>,
}

impl ProductCache {
    pub fn new(w: &GroupElement) -> Self {
        ProductCache {
            tw: HeckeElement::t_elt(w),
            products: HashMap::new(),
        }
    }

    pub fn product(&mut self, x: &GroupElement) -> &HeckeElement {
        let tw = &self.tw;
        self.products
            .entry(x.clone())
            .or_insert_with(|| tw.mul_basis_right(x))
    }
}

/// The induction sum for one subgroup, with its transversal precomputed.
pub struct InductionOracle {
    subgroup: Subgroup,
    transversal: Vec<(GroupElement, GroupElement)>,
}

impl InductionOracle {
    /// Prepares the oracle. For quasi-parabolic subgroups the construction
    /// needs `ℓ(xu) = ℓ(x) + ℓ(u)` for every `x ∈ X`, `u ∈ H`; this is
    /// checked and an [`Error::Unsupported`] is returned when it fails.
    pub fn new(subgroup: &Subgroup, bounds: &Bounds) -> Result<Self> {
        let transversal = subgroup.transversal(bounds)?;
        if !subgroup.is_parabolic() {
            let elements = subgroup.elements(bounds)?;
            let pairs = transversal.len() as u128 * elements.len() as u128;
            bounds.check_group("length additivity check", pairs)?;
            for x in &transversal {
                for u in &elements {
                    if x.mul_unchecked(u).length() != x.length() + u.length() {
                        return Err(Error::Unsupported(format!(
                            "{subgroup}: lengths are not additive on x u for x = {x}, u = {u}; \
                             the induction sum is not defined"
                        )));
                    }
                }
            }
        }
        Ok(Self::new_unchecked_inner(subgroup, transversal))
    }

    /// Like [`new`](Self::new) but without the length additivity check, so
    /// the sum can be evaluated for experiments on quasi-parabolic subgroups.
    pub fn new_unchecked(subgroup: &Subgroup, bounds: &Bounds) -> Result<Self> {
        let transversal = subgroup.transversal(bounds)?;
        Ok(Self::new_unchecked_inner(subgroup, transversal))
    }

    fn new_unchecked_inner(subgroup: &Subgroup, transversal: Vec<GroupElement>) -> Self {
        InductionOracle {
            subgroup: subgroup.clone(),
            transversal: transversal
                .into_iter()
                .map(|x| {
                    let inv = x.inverse();
                    (x, inv)
                })
                .collect(),
        }
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// `(χ_trivial(T_w), χ_sign(T_w))` using the products in `cache`.
    pub fn values(&self, cache: &mut ProductCache) -> (LaurentHalf, LaurentHalf) {
        let mut eta = LaurentHalf::zero();
        let mut eps = LaurentHalf::zero();
        for (x, x_inv) in &self.transversal {
            for (z, c) in cache.product(x).terms() {
                let u = x_inv.mul_unchecked(z);
                if self.subgroup.contains(&u) {
                    let len = u.length();
                    eta += &c.scale_halfpower(2 * len as i64);
                    if len % 2 == 0 {
                        eps += c;
                    } else {
                        eps -= c;
                    }
                }
            }
        }
        (eta, eps)
    }

    pub fn value(&self, base: BaseChar, w: &GroupElement) -> LaurentHalf {
        let (eta, eps) = self.values(&mut ProductCache::new(w));
        match base {
            BaseChar::Trivial => eta,
            BaseChar::Sign => eps,
        }
    }

    /// Values on each of `elements`, computed in parallel.
    pub fn table(&self, base: BaseChar, elements: &[GroupElement]) -> CharValueTable {
        use rayon::prelude::*;
        let values = elements
            .par_iter()
            .map(|w| (w.clone(), self.value(base, w)))
            .collect();
        CharValueTable {
            family: self.subgroup.family(),
            lambda: subgroup_label(&self.subgroup),
            base,
            values,
        }
    }
}

/// The induced character value `χ(T_w)`, straight from the definition.
pub fn induced_char_oracle(
    subgroup: &Subgroup,
    base: BaseChar,
    w: &GroupElement,
    bounds: &Bounds,
) -> Result<LaurentHalf> {
    subgroup.family().same_as(w.family())?;
    Ok(InductionOracle::new(subgroup, bounds)?.value(base, w))
}

/// Left cosets of `subgroup`, listed by a representative (the first element
/// of each coset in enumeration order, not necessarily the shortest).
pub fn coset_representatives(subgroup: &Subgroup, bounds: &Bounds) -> Result<Vec<GroupElement>> {
    let group = enumerate_group(subgroup.family(), bounds)?;
    let elements = subgroup.elements(bounds)?;
    let mut seen = HashSet::with_capacity(group.len());
    let mut reps = Vec::new();
    for g in group {
        if seen.contains(&g) {
            continue;
        }
        for u in &elements {
            seen.insert(g.mul_unchecked(u));
        }
        reps.push(g);
    }
    Ok(reps)
}

/// The induced character at `q = 1` via the permutation action on cosets:
/// the sum of `χ0(x⁻¹ w x)` over cosets `xH` fixed by `w`.
pub fn classical_induced_q1(
    subgroup: &Subgroup,
    base: BaseChar,
    w: &GroupElement,
    bounds: &Bounds,
) -> Result<BigInt> {
    subgroup.family().same_as(w.family())?;
    let reps = coset_representatives(subgroup, bounds)?;
    Ok(classical_from_reps(subgroup, &reps, base, w))
}

pub(crate) fn classical_from_reps(
    subgroup: &Subgroup,
    reps: &[GroupElement],
    base: BaseChar,
    w: &GroupElement,
) -> BigInt {
    reps.iter()
        .filter_map(|x| {
            let c = x.inverse().mul_unchecked(w).mul_unchecked(x);
            subgroup.contains(&c).then(|| base.value_q1(c.length()))
        })
        .sum::<i64>()
        .into()
}

/// Number of ordered set partitions `(B_1, ..., B_p)` of the parts of `mu`
/// with `Σ_{i ∈ B_j} mu_i = lambda_j`.
pub fn r_count(mu: &[usize], lambda: &[usize]) -> u64 {
    fn go(mu: &[usize], remaining: &mut [usize]) -> u64 {
        match mu.split_first() {
            None => remaining.iter().all(|&r| r == 0) as u64,
            Some((&m, rest)) => {
                let mut total = 0;
                for j in 0..remaining.len() {
                    if remaining[j] >= m {
                        remaining[j] -= m;
                        total += go(rest, remaining);
                        remaining[j] += m;
                    }
                }
                total
            }
        }
    }
    if mu.iter().sum::<usize>() != lambda.iter().sum::<usize>() {
        return 0;
    }
    go(mu, &mut lambda.to_vec())
}

/// True when the type A permutation `w` is the canonical parabolic element
/// of its type, i.e. `w(i) <= i + 1` for all `i`.
pub fn is_canonical_parabolic_a(w: &GroupElement) -> bool {
    w.perm()
        .iter()
        .enumerate()
        .all(|(i, &v)| v as usize <= i + 2)
}

/// Extends a character of the type A Hecke algebra from its values on the
/// canonical parabolic elements to an arbitrary `w`.
///
/// If `w` is not parabolic, take the smallest `i` with `w(i) = j + 1 > i + 1`
/// and `s = s_j`. Then either `ℓ(s w s) = ℓ(w)` and `χ(T_w) = χ(T_{sws})`,
/// or `ℓ(s w s) = ℓ(w) - 2` and `χ(T_w) = q χ(T_{sws}) + (q - 1) χ(T_{ws})`.
pub fn extend_char_a<F>(parabolic_value: F, w: &GroupElement) -> Result<LaurentHalf>
where
    F: FnMut(&GroupElement) -> Result<LaurentHalf>,
{
    let mut ext = Extender {
        lookup: parabolic_value,
        memo: HashMap::new(),
        active: HashSet::new(),
    };
    ext.value(w)
}

/// [`extend_char_a`] reading the parabolic values from a table.
pub fn extend_char_a_table(table: &CharValueTable, w: &GroupElement) -> Result<LaurentHalf> {
    table.family.same_as(w.family())?;
    extend_char_a(
        |p| {
            table.get(p).cloned().ok_or_else(|| {
                Error::Invalid(format!("table has no value for parabolic element {p}"))
            })
        },
        w,
    )
}

/// Checks the conjugation recurrences satisfied by every character: with
/// `χ̃(w) = q^{-ℓ(w)/2} χ(T_w)` and `R = q^{1/2} - q^{-1/2}`,
/// `χ̃(sws) = χ̃(w)` if `ℓ(sws) = ℓ(w)`, and
/// `χ̃(sws) = χ̃(w) ± R χ̃(sw) = χ̃(w) ± R χ̃(ws)` if `ℓ(sws) = ℓ(w) ± 2`.
/// Returns the first `(w, s)` that fails, if any.
pub fn recurrence_violation(table: &CharValueTable) -> Option<(GroupElement, Generator)> {
    let tilde = |w: &GroupElement| {
        table
            .get(w)
            .map(|v| v.scale_halfpower(-(w.length() as i64)))
    };
    let r = LaurentHalf::r();
    for w in table.values.keys() {
        for s in table.family.generators() {
            let sw = w.lmul(s);
            let ws = w.rmul(s);
            let sws = sw.rmul(s);
            let (Some(a), Some(b), Some(x), Some(y)) =
                (tilde(w), tilde(&sws), tilde(&sw), tilde(&ws))
            else {
                continue;
            };
            let ok = match sws.length() as i64 - w.length() as i64 {
                0 => a == b,
                2 => b == &a + &(&r * &x) && b == &a + &(&r * &y),
                -2 => b == &a - &(&r * &x) && b == &a - &(&r * &y),
                _ => false,
            };
            if !ok {
                return Some((w.clone(), s));
            }
        }
    }
    None
}

struct Extender<F> {
    lookup: F,
    memo: HashMap<GroupElement, LaurentHalf>,
    active: HashSet<GroupElement>,
}

impl<F: FnMut(&GroupElement) -> Result<LaurentHalf>> Extender<F> {
    fn value(&mut self, w: &GroupElement) -> Result<LaurentHalf> {
        if !matches!(w.family(), CoxFamily::A(_)) {
            return Err(Error::Unsupported(
                "the recurrence extension is implemented for type A only".into(),
            ));
        }
        if let Some(v) = self.memo.get(w) {
            return Ok(v.clone());
        }
        if is_canonical_parabolic_a(w) {
            let v = (self.lookup)(w)?;
            self.memo.insert(w.clone(), v.clone());
            return Ok(v);
        }
        if !self.active.insert(w.clone()) {
            return Err(Error::Invalid(format!("recurrence revisits {w}")));
        }
        let p = w.perm();
        let i = (0..p.len())
            .find(|&i| p[i] as usize > i + 2)
            .expect("non-parabolic element has an i with w(i) > i + 1");
        let s = Generator::S(p[i] as usize - 1);
        let sws = w.lmul(s).rmul(s);
        let v = if sws.length() == w.length() {
            self.value(&sws)?
        } else if sws.length() + 2 == w.length() {
            let ws = w.rmul(s);
            self.value(&sws)? * LaurentHalf::q() + self.value(&ws)? * LaurentHalf::q_minus_one()
        } else {
            return Err(Error::Invalid(format!(
                "recurrence does not descend at {w} with {s}"
            )));
        };
        self.active.remove(w);
        self.memo.insert(w.clone(), v.clone());
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::coxeter::{parabolic_element, parse_generator_set, SignedComposition};

    fn p(s: &str) -> LaurentHalf {
        s.parse().unwrap()
    }

    fn sub(family: CoxFamily, lam: &str) -> Subgroup {
        Subgroup::from_composition(family, lam.parse().unwrap()).unwrap()
    }

    fn el(family: CoxFamily, s: &str) -> GroupElement {
        GroupElement::parse(family, s).unwrap()
    }

    #[test]
    fn base_values() {
        let a3 = CoxFamily::A(3);
        assert_eq!(
            base_char_value(BaseChar::Trivial, &GroupElement::identity(a3)),
            p("1")
        );
        assert_eq!(base_char_value(BaseChar::Trivial, &el(a3, "213")), p("q"));
        assert_eq!(base_char_value(BaseChar::Sign, &el(a3, "321")), p("-1"));
    }

    #[test]
    fn oracle_goldens() {
        let b = Bounds::default();
        let a6 = CoxFamily::A(6);
        let h = sub(a6, "3,2,1");
        let w = el(a6, "214356");
        assert_eq!(
            induced_char_oracle(&h, BaseChar::Trivial, &w, &b).unwrap(),
            p("24*q^2 - 28*q + 8")
        );
        assert_eq!(
            induced_char_oracle(&h, BaseChar::Sign, &w, &b).unwrap(),
            p("8*q^2 - 28*q + 24")
        );
    }

    #[test]
    fn classical_goldens() {
        let b = Bounds::default();
        let a6 = CoxFamily::A(6);
        let h = sub(a6, "3,2,1");
        let w = el(a6, "214356");
        assert_eq!(
            classical_induced_q1(&h, BaseChar::Trivial, &w, &b).unwrap(),
            4.into()
        );
        assert_eq!(
            classical_induced_q1(&h, BaseChar::Sign, &w, &b).unwrap(),
            4.into()
        );
        let whole = sub(a6, "6");
        assert_eq!(
            classical_induced_q1(&whole, BaseChar::Trivial, &w, &b).unwrap(),
            1.into()
        );
    }

    #[test]
    fn r_counts() {
        assert_eq!(r_count(&[2, 2, 1, 1], &[3, 2, 1]), 4);
        assert_eq!(r_count(&[5], &[5]), 1);
        assert_eq!(r_count(&[1, 1], &[2]), 1);
        assert_eq!(r_count(&[1, 1], &[1, 1]), 2);
        assert_eq!(r_count(&[3], &[2, 1]), 0);
    }

    #[test]
    fn q1_specialization_and_permutation_oracle() {
        let b = Bounds::default();
        for (family, lams) in [
            (CoxFamily::A(4), vec!["2,2", "1,2,1", "3,1"]),
            (CoxFamily::B(3), vec!["-1,2", "2,1", "1,-2", "-1,-1,1"]),
            (CoxFamily::D(3), vec!["-2,1", "1,2"]),
        ] {
            let group = enumerate_group(family, &b).unwrap();
            for lam in lams {
                let h = sub(family, lam);
                let reps = coset_representatives(&h, &b).unwrap();
                let Ok(oracle) = InductionOracle::new(&h, &b) else {
                    continue;
                };
                for w in &group {
                    let mut cache = ProductCache::new(w);
                    let (eta, eps) = oracle.values(&mut cache);
                    assert_eq!(
                        eta.eval_q1(),
                        classical_from_reps(&h, &reps, BaseChar::Trivial, w)
                    );
                    assert_eq!(
                        eps.eval_q1(),
                        classical_from_reps(&h, &reps, BaseChar::Sign, w)
                    );
                }
            }
        }
    }

    #[test]
    fn dihedral_oracle() {
        let b = Bounds::default();
        let family = CoxFamily::I(5);
        let group = enumerate_group(family, &b).unwrap();
        let whole = Subgroup::parabolic(family, parse_generator_set("g1,g2").unwrap()).unwrap();
        let trivial = Subgroup::parabolic(family, BTreeSet::new()).unwrap();
        for w in &group {
            assert_eq!(
                induced_char_oracle(&whole, BaseChar::Trivial, w, &b).unwrap(),
                LaurentHalf::q_pow(w.length() as i64)
            );
            // The regular representation: trace q^0 coefficient structure.
            let reg = induced_char_oracle(&trivial, BaseChar::Trivial, w, &b).unwrap();
            if w.is_identity() {
                assert_eq!(reg, LaurentHalf::constant(10));
            }
            assert_eq!(
                reg.eval_q1(),
                if w.is_identity() { 10.into() } else { 0.into() }
            );
        }
    }

    #[test]
    fn quasi_parabolic_additivity_is_checked() {
        let b = Bounds::default();
        let h = sub(CoxFamily::B(2), "1,-1");
        assert!(matches!(
            InductionOracle::new(&h, &b),
            Err(Error::Unsupported(_))
        ));
        assert!(InductionOracle::new_unchecked(&h, &b).is_ok());
    }

    #[test]
    fn class_function_property() {
        let b = Bounds::default();
        let family = CoxFamily::B(3);
        let group = enumerate_group(family, &b).unwrap();
        let h = sub(family, "-1,2");
        let oracle = InductionOracle::new(&h, &b).unwrap();
        for w in &group {
            for s in family.generators() {
                let sws = w.lmul(s).rmul(s);
                if sws.length() == w.length() {
                    assert_eq!(
                        oracle.value(BaseChar::Trivial, w),
                        oracle.value(BaseChar::Trivial, &sws)
                    );
                }
            }
        }
    }

    #[test]
    fn extension_matches_oracle() {
        let b = Bounds::default();
        for n in 1..=4 {
            let family = CoxFamily::A(n);
            let group = enumerate_group(family, &b).unwrap();
            for mask in 0u32..(1 << (n - 1)) {
                let j: BTreeSet<_> = (1..n)
                    .filter(|i| mask >> (i - 1) & 1 == 1)
                    .map(Generator::S)
                    .collect();
                let h = Subgroup::parabolic(family, j).unwrap();
                let oracle = InductionOracle::new(&h, &b).unwrap();
                for base in BaseChar::ALL {
                    let parabolics: Vec<_> = (0u32..(1 << (n - 1)))
                        .map(|k| {
                            let k: BTreeSet<_> = (1..n)
                                .filter(|i| k >> (i - 1) & 1 == 1)
                                .map(Generator::S)
                                .collect();
                            parabolic_element(family, &k).unwrap()
                        })
                        .collect();
                    let table = oracle.table(base, &parabolics);
                    for w in &group {
                        assert_eq!(
                            extend_char_a_table(&table, w).unwrap(),
                            oracle.value(base, w),
                            "{w}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn extension_examples() {
        let a3 = CoxFamily::A(3);
        let w0 = el(a3, "321");
        let whole: SignedComposition = "3".parse().unwrap();
        let h = Subgroup::from_composition(a3, whole).unwrap();
        let oracle = InductionOracle::new(&h, &Bounds::default()).unwrap();
        let v = extend_char_a(|p| Ok(oracle.value(BaseChar::Trivial, p)), &w0).unwrap();
        assert_eq!(v, p("q^3"));
        assert!(is_canonical_parabolic_a(&el(a3, "231")));
        assert!(!is_canonical_parabolic_a(&el(a3, "312")));
    }

    #[test]
    fn table_json_round_trip() {
        let a3 = CoxFamily::A(3);
        let h = sub(a3, "2,1");
        let oracle = InductionOracle::new(&h, &Bounds::default()).unwrap();
        let group = enumerate_group(a3, &Bounds::default()).unwrap();
        let table = oracle.table(BaseChar::Sign, &group);
        let json = table.to_json();
        assert_eq!(json["lambda"], "2,1");
        assert_eq!(CharValueTable::from_json(&json).unwrap(), table);
    }

    #[test]
    fn recurrences_hold_for_induced_tables() {
        let b = Bounds::default();
        for (family, j) in [
            (CoxFamily::A(4), "s1,s3"),
            (CoxFamily::B(3), "t"),
            (CoxFamily::D(4), "s2"),
            (CoxFamily::I(5), "g1"),
        ] {
            let s = Subgroup::parabolic(family, parse_generator_set(j).unwrap()).unwrap();
            let oracle = InductionOracle::new(&s, &b).unwrap();
            let group = enumerate_group(family, &b).unwrap();
            for base in BaseChar::ALL {
                let mut table = oracle.table(base, &group);
                assert_eq!(recurrence_violation(&table), None, "{family} {j} {base}");
                let w = group.iter().find(|w| w.length() == 2).unwrap().clone();
                let v = table.values.get_mut(&w).unwrap();
                *v += &LaurentHalf::one();
                assert!(recurrence_violation(&table).is_some());
            }
        }
    }
}
