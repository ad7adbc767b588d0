use std::collections::BTreeSet;
use std::fmt;

use super::{
    comp_to_gens, enumerate_group, gens_to_comp, next_permutation, CoxFamily, Generator,
    GroupElement, SignedComposition,
};
use crate::bounds::Bounds;
use crate::error::{Error, Result};

/// A parabolic subgroup `W_J`, or a quasi-parabolic subgroup `S^B_λ` of a
/// signed permutation group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    family: CoxFamily,
    gens: Option<BTreeSet<Generator>>,
    comp: Option<SignedComposition>,
    /// Block index of each position, for types A, B and D.
    block: Vec<usize>,
}

impl Subgroup {
    /// The parabolic subgroup generated by `gens`.
    pub fn parabolic(family: CoxFamily, gens: BTreeSet<Generator>) -> Result<Self> {
        family.validate()?;
        for &g in &gens {
            family.check_generator(g)?;
        }
        let comp = match family {
            CoxFamily::I(_) => None,
            _ => Some(gens_to_comp(family, &gens)?),
        };
        let block = comp
            .as_ref()
            .map(|c| c.block_of_positions())
            .unwrap_or_default();
        Ok(Subgroup {
            family,
            gens: Some(gens),
            comp,
            block,
        })
    }

    /// The (quasi-)parabolic subgroup of a signed composition.
    pub fn from_composition(family: CoxFamily, lambda: SignedComposition) -> Result<Self> {
        family.validate()?;
        lambda.check_family(family)?;
        let gens = if lambda.is_parabolic() {
            Some(comp_to_gens(family, &lambda)?)
        } else {
            None
        };
        let block = lambda.block_of_positions();
        Ok(Subgroup {
            family,
            gens,
            comp: Some(lambda),
            block,
        })
    }

    pub fn family(&self) -> CoxFamily {
        self.family
    }

    pub fn is_parabolic(&self) -> bool {
        self.gens.is_some()
    }

    /// Generator set, for parabolic subgroups.
    pub fn generators(&self) -> Option<&BTreeSet<Generator>> {
        self.gens.as_ref()
    }

    pub fn composition(&self) -> Option<&SignedComposition> {
        self.comp.as_ref()
    }

    fn parts(&self) -> &[i32] {
        self.comp.as_ref().map(|c| c.parts()).unwrap_or(&[])
    }

    fn block_negative(&self, k: usize) -> bool {
        self.parts()[k] < 0
    }

    /// Membership test.
    pub fn contains(&self, u: &GroupElement) -> bool {
        if u.family() != self.family {
            return false;
        }
        if let CoxFamily::I(_) = self.family {
            let gens = self
                .gens
                .as_ref()
                .expect("dihedral subgroups are parabolic");
            let (len, start) = u.dihedral_parts().expect("dihedral element");
            return match gens.len() {
                2 => true,
                1 => {
                    let g = if gens.contains(&Generator::G1) { 1 } else { 2 };
                    len == 0 || (len == 1 && start == g)
                }
                _ => len == 0,
            };
        }
        u.perm().iter().enumerate().all(|(i, &v)| {
            let k = self.block[i];
            self.block[v.unsigned_abs() as usize - 1] == k && (v > 0 || self.block_negative(k))
        })
    }

    /// `x ~ y`, i.e. `x` and `y` lie in the same left coset.
    pub fn same_coset(&self, x: &GroupElement, y: &GroupElement) -> bool {
        self.contains(&x.inverse().mul_unchecked(y))
    }

    pub fn order(&self) -> u128 {
        let fact = |n: u32| (1..=n as u128).product::<u128>();
        match self.family {
            CoxFamily::I(m) => match self.gens.as_ref().map_or(0, |g| g.len()) {
                2 => 2 * m as u128,
                1 => 2,
                _ => 1,
            },
            CoxFamily::D(_) => self
                .parts()
                .iter()
                .map(|&p| {
                    let a = p.unsigned_abs();
                    if p < 0 {
                        fact(a) << (a - 1)
                    } else {
                        fact(a)
                    }
                })
                .product(),
            _ => self
                .parts()
                .iter()
                .map(|&p| {
                    let a = p.unsigned_abs();
                    if p < 0 {
                        fact(a) << a
                    } else {
                        fact(a)
                    }
                })
                .product(),
        }
    }

    /// Number of left cosets.
    pub fn index(&self) -> u128 {
        self.family.order() / self.order()
    }

    /// Every element of the subgroup.
    pub fn elements(&self, bounds: &Bounds) -> Result<Vec<GroupElement>> {
        bounds.check_subgroup("subgroup", self.order())?;
        if let CoxFamily::I(m) = self.family {
            let all = enumerate_group(
                self.family,
                &Bounds {
                    max_group_order: 2 * m as u128,
                    ..*bounds
                },
            )?;
            return Ok(all.into_iter().filter(|u| self.contains(u)).collect());
        }
        let mut out: Vec<Vec<i32>> = vec![Vec::new()];
        let mut offset = 0i32;
        for &p in self.parts() {
            let size = p.unsigned_abs() as usize;
            let local = local_perms(size, p < 0, matches!(self.family, CoxFamily::D(_)));
            let mut next = Vec::with_capacity(out.len() * local.len());
            for prefix in &out {
                for l in &local {
                    let mut v = prefix.clone();
                    v.extend(l.iter().map(|&x| x.signum() * (x.abs() + offset)));
                    next.push(v);
                }
            }
            out = next;
            offset += size as i32;
        }
        out.into_iter()
            .map(|p| GroupElement::from_one_line(self.family, &p))
            .collect()
    }

    /// All coset labels `a_1 .. a_n` (the image of the Φ bijection): `|a_i|`
    /// takes the value `k` exactly `|λ_k|` times and `a_i > 0` whenever
    /// `λ_{|a_i|} < 0`.
    pub fn sequences(&self, bounds: &Bounds) -> Result<Vec<Vec<i32>>> {
        self.require_signed_perm_kind()?;
        bounds.check_subgroup("coset transversal", self.index())?;
        let mut labels: Vec<i32> = self
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(k, &p)| std::iter::repeat_n(k as i32 + 1, p.unsigned_abs() as usize))
            .collect();
        let signed = self.family == CoxFamily::B(self.family.degree());
        let mut out = Vec::new();
        loop {
            let free: Vec<usize> = (0..labels.len())
                .filter(|&i| signed && self.parts()[labels[i] as usize - 1] > 0)
                .collect();
            for mask in 0u64..(1u64 << free.len()) {
                let mut a = labels.clone();
                for (b, &i) in free.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        a[i] = -a[i];
                    }
                }
                out.push(a);
            }
            if !next_permutation(&mut labels) {
                break;
            }
        }
        Ok(out)
    }

    fn require_signed_perm_kind(&self) -> Result<()> {
        match self.family {
            CoxFamily::A(_) | CoxFamily::B(_) => Ok(()),
            f => Err(Error::Unsupported(format!(
                "coset sequences are defined for types A and B, not {f}"
            ))),
        }
    }

    /// Minimal length left coset representatives, one per coset.
    pub fn transversal(&self, bounds: &Bounds) -> Result<Vec<GroupElement>> {
        match self.family {
            CoxFamily::A(_) | CoxFamily::B(_) => self
                .sequences(bounds)?
                .iter()
                .map(|a| self.phi_inverse(a))
                .collect(),
            _ => {
                bounds.check_subgroup("coset transversal", self.index())?;
                let gens = self.gens.clone().expect("D and I subgroups are parabolic");
                Ok(enumerate_group(self.family, bounds)?
                    .into_iter()
                    .filter(|x| gens.iter().all(|&s| !x.is_right_descent(s)))
                    .collect())
            }
        }
    }

    /// The coset label of `x` (types A and B): `a_i = ±k` when
    /// `|x⁻¹(i)|` lies in block `k`, with the sign of `x⁻¹(i)`, and the
    /// sign dropped when block `k` is negative.
    pub fn phi(&self, x: &GroupElement) -> Result<Vec<i32>> {
        self.require_signed_perm_kind()?;
        self.family.same_as(x.family())?;
        let mut a = vec![0i32; self.block.len()];
        for (j, &v) in x.perm().iter().enumerate() {
            let k = self.block[j];
            let label = k as i32 + 1;
            a[v.unsigned_abs() as usize - 1] = if v < 0 && !self.block_negative(k) {
                -label
            } else {
                label
            };
        }
        Ok(a)
    }

    /// The minimal length element of the coset with label `a`.
    pub fn phi_inverse(&self, a: &[i32]) -> Result<GroupElement> {
        self.require_signed_perm_kind()?;
        let n = self.block.len();
        let bad = |why: &str| Error::Invalid(format!("{a:?} is not a coset label: {why}"));
        if a.len() != n {
            return Err(bad("wrong length"));
        }
        let parts = self.parts();
        let mut x = Vec::with_capacity(n);
        for (k, &p) in parts.iter().enumerate() {
            let label = k as i32 + 1;
            let mut slots: Vec<i32> = Vec::new();
            for (i, &ai) in a.iter().enumerate() {
                if ai.abs() == label {
                    if ai < 0 && (p < 0 || self.family == CoxFamily::A(n)) {
                        return Err(bad("negative entry for an unsigned block"));
                    }
                    slots.push(ai.signum() * (i as i32 + 1));
                }
            }
            if slots.len() != p.unsigned_abs() as usize {
                return Err(bad("block multiplicities do not match"));
            }
            slots.sort_unstable();
            x.extend(slots);
        }
        if x.len() != n {
            return Err(bad("entry out of range"));
        }
        GroupElement::from_one_line(self.family, &x)
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.comp, &self.gens) {
            (Some(c), _) => write!(f, "{} in {}", c, self.family),
            (None, Some(g)) => write!(f, "<{}> in {}", super::format_generator_set(g), self.family),
            (None, None) => write!(f, "{}", self.family),
        }
    }
}

/// Permutations of `1..=size` in one-line form, with all sign patterns when
/// `signed` (only even ones when `even`).
fn local_perms(size: usize, signed: bool, even: bool) -> Vec<Vec<i32>> {
    let mut perm: Vec<i32> = (1..=size as i32).collect();
    let mut out = Vec::new();
    loop {
        if signed {
            for mask in 0u64..(1u64 << size) {
                if even && mask.count_ones() % 2 == 1 {
                    continue;
                }
                out.push(
                    perm.iter()
                        .enumerate()
                        .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                        .collect(),
                );
            }
        } else {
            out.push(perm.clone());
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}
