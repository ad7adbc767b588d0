//! The Iwahori-Hecke algebra in the `T` basis.
//!
//! Products use `T_s T_w = T_{sw}` when `ℓ(sw) > ℓ(w)` and
//! `T_s T_w = q T_{sw} + (q - 1) T_w` otherwise (and the mirror rule on the
//! right). The modified basis `T̃_w = q^{-ℓ(w)/2} T_w` is handled by
//! rescaling coefficients.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::coxeter::{CoxFamily, Generator, GroupElement, Subgroup};
use crate::error::Result;
use crate::qpoly::LaurentHalf;

const WORD_CACHE_LIMIT: usize = 1 << 16;

thread_local! {
    static WORD_CACHE: RefCell<HashMap<GroupElement, Vec<Generator>>> =
        RefCell::new(HashMap::new());
}

/// Reduced word of `w`, memoized per thread.
pub fn cached_reduced_word(w: &GroupElement) -> Vec<Generator> {
    WORD_CACHE.with(|cache| {
        if let Some(word) = cache.borrow().get(w) {
            return word.clone();
        }
        let word = w.reduced_word();
        let mut cache = cache.borrow_mut();
        if cache.len() >= WORD_CACHE_LIMIT {
            cache.clear();
        }
        cache.insert(w.clone(), word.clone());
        word
    })
}

/// A finite linear combination `Σ c_w T_w`.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    family: CoxFamily,
    terms: BTreeMap<GroupElement, LaurentHalf>,
}

impl HeckeElement {
    pub fn zero(family: CoxFamily) -> Self {
        HeckeElement {
            family,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(family: CoxFamily) -> Self {
        Self::t_elt(&GroupElement::identity(family))
    }

    /// The basis element `T_w`.
    pub fn t_elt(w: &GroupElement) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w.clone(), LaurentHalf::one());
        HeckeElement {
            family: w.family(),
            terms,
        }
    }

    /// `T_{s_1} T_{s_2} ... T_{s_k}` for an arbitrary (not necessarily
    /// reduced) word.
    pub fn from_word(family: CoxFamily, word: &[Generator]) -> Result<Self> {
        word.iter()
            .try_fold(Self::one(family), |h, &s| h.gen_mul_right(s))
    }

    pub fn family(&self) -> CoxFamily {
        self.family
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &LaurentHalf)> {
        self.terms.iter()
    }

    /// Coefficient of `T_w`.
    pub fn coeff(&self, w: &GroupElement) -> LaurentHalf {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Coefficient of `T_w` without cloning.
    pub fn coeff_ref(&self, w: &GroupElement) -> Option<&LaurentHalf> {
        self.terms.get(w)
    }

    /// Adds `c T_w`.
    pub fn add_term(&mut self, w: GroupElement, c: LaurentHalf) {
        debug_assert_eq!(w.family(), self.family);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `c · self`.
    pub fn scale(&self, c: &LaurentHalf) -> Self {
        let mut out = Self::zero(self.family);
        if c.is_zero() {
            return out;
        }
        for (w, a) in &self.terms {
            out.terms.insert(w.clone(), a * c);
        }
        out
    }

    /// `T_s · self`.
    pub fn gen_mul_left(&self, s: Generator) -> Result<Self> {
        self.family.check_generator(s)?;
        Ok(self.mul_gen(s, true))
    }

    /// `self · T_s`.
    pub fn gen_mul_right(&self, s: Generator) -> Result<Self> {
        self.family.check_generator(s)?;
        Ok(self.mul_gen(s, false))
    }

    fn mul_gen(&self, s: Generator, left: bool) -> Self {
        let qm1 = LaurentHalf::q_minus_one();
        let q = LaurentHalf::q();
        let mut out = Self::zero(self.family);
        for (w, c) in &self.terms {
            let sw = if left { w.lmul(s) } else { w.rmul(s) };
            if sw.length() > w.length() {
                out.add_term(sw, c.clone());
            } else {
                out.add_term(sw, &q * c);
                out.add_term(w.clone(), &qm1 * c);
            }
        }
        out
    }

    /// `self · T_v`.
    pub fn mul_basis_right(&self, v: &GroupElement) -> Self {
        cached_reduced_word(v)
            .into_iter()
            .fold(self.clone(), |h, s| h.mul_gen(s, false))
    }

    /// Algebra product.
    pub fn mul(&self, other: &HeckeElement) -> Result<Self> {
        self.family.same_as(other.family)?;
        let mut out = Self::zero(self.family);
        for (v, c) in &other.terms {
            let part = self.mul_basis_right(v);
            for (w, a) in part.terms {
                out.add_term(w, a * c);
            }
        }
        Ok(out)
    }

    /// Applies `T_w ↦ T̃_w = q^{-ℓ(w)/2} T_w` termwise. Reading the input as
    /// `T̃`-coordinates, the output is the same element in `T`-coordinates.
    pub fn to_modified(&self) -> Self {
        self.rescale(-1)
    }

    /// Inverse of [`to_modified`](Self::to_modified): turns `T`-coordinates
    /// into `T̃`-coordinates.
    pub fn from_modified(&self) -> Self {
        self.rescale(1)
    }

    fn rescale(&self, sign: i64) -> Self {
        HeckeElement {
            family: self.family,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.scale_halfpower(sign * w.length() as i64)))
                .collect(),
        }
    }

    /// Product of two elements given in `T̃`-coordinates, returned in
    /// `T̃`-coordinates.
    pub fn mul_modified(&self, other: &HeckeElement) -> Result<Self> {
        Ok(self
            .to_modified()
            .mul(&other.to_modified())?
            .from_modified())
    }

    /// Keeps the terms `T_v` with `v` in the left coset `x W_J`.
    pub fn project_coset(&self, subgroup: &Subgroup, x: &GroupElement) -> Self {
        let x_inv = x.inverse();
        HeckeElement {
            family: self.family,
            terms: self
                .terms
                .iter()
                .filter(|(v, _)| subgroup.contains(&x_inv.mul_unchecked(v)))
                .map(|(v, c)| (v.clone(), c.clone()))
                .collect(),
        }
    }

    /// Value of the linear functional `T_w ↦ f(w)`.
    pub fn pair<F: FnMut(&GroupElement) -> LaurentHalf>(&self, mut f: F) -> LaurentHalf {
        self.terms.iter().map(|(w, c)| c * &f(w)).sum()
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                if *c == LaurentHalf::one() {
                    format!("T[{w}]")
                } else {
                    format!("T[{w}]*({c})")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &HeckeElement {
    type Output = HeckeElement;

    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &HeckeElement {
    type Output = HeckeElement;

    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        self + &(-rhs)
    }
}

impl Neg for &HeckeElement {
    type Output = HeckeElement;

    fn neg(self) -> HeckeElement {
        HeckeElement {
            family: self.family,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}
