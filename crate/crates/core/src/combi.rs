//! Combinatorial formulas for the induced trivial and sign characters on
//! parabolic elements.
//!
//! Each formula is a sum over integer sequences `a_1 .. a_n` subject to
//! type-specific conditions, weighted by `q^{e+g} (q-1)^{d+f}` (trivial) or
//! `(-1)^{e+g} (q-1)^{d+f}` (sign). The dihedral case has closed forms.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::bounds::Bounds;
use crate::coxeter::{gens_to_comp, CoxFamily, Generator, GroupElement, SignedComposition};
use crate::error::{Error, Result};
use crate::induce::BaseChar;
use crate::qpoly::LaurentHalf;

/// Statistics of one sequence.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct WeightStats {
    pub d: u32,
    pub e: u32,
    pub f: u32,
    pub g: u32,
}

impl WeightStats {
    /// `q^{e+g} (q-1)^{d+f}` or `(-1)^{e+g} (q-1)^{d+f}`.
    pub fn weight(&self, base: BaseChar) -> LaurentHalf {
        match base {
            BaseChar::Trivial => LaurentHalf::weight(self.e + self.g, self.d + self.f),
            BaseChar::Sign => LaurentHalf::signed_weight(self.e + self.g, self.d + self.f),
        }
    }

    /// The weight written the way the tables print it, e.g. `q^2(q-1)^1`.
    pub fn render(&self, base: BaseChar) -> String {
        let (a, b) = (self.e + self.g, self.d + self.f);
        match base {
            BaseChar::Trivial => format!("q^{a}(q-1)^{b}"),
            BaseChar::Sign => format!("(-1)^{a}(q-1)^{b}"),
        }
    }
}

/// A sequence that contributes to one of the sums, with its statistics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibleSequence {
    pub entries: Vec<i32>,
    pub stats: WeightStats,
}

/// The two readings of the statistic `e` in type D: count the `s_i ∈ K`
/// with `a_i = a_{i+1}`, or with `a_i <= a_{i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DEReading {
    Equal,
    LessOrEqual,
}

/// The reading of `e` that agrees with the induction oracle. The
/// `Equal` reading undercounts the `(-1, 1)` pairs allowed when `t ∈ J`.
pub const D_E_READING: DEReading = DEReading::LessOrEqual;

struct Context<'a> {
    n: usize,
    parts: &'a [i32],
    k: &'a BTreeSet<Generator>,
}

impl Context<'_> {
    fn in_k(&self, s: Generator) -> bool {
        self.k.contains(&s)
    }
}

/// Enumerates sequences with `|a_i| = k` exactly `|λ_k|` times. `local`
/// checks the entry at position `i` (0-based) against the prefix; `stats`
/// filters complete sequences.
fn enumerate<L, S>(
    parts: &[i32],
    signed: bool,
    bounds: &Bounds,
    mut local: L,
    mut stats: S,
) -> Result<Vec<AdmissibleSequence>>
where
    L: FnMut(usize, i32, &[i32]) -> bool,
    S: FnMut(&[i32]) -> Option<WeightStats>,
{
    let n: usize = parts.iter().map(|p| p.unsigned_abs() as usize).sum();
    let mut candidates = multinomial(parts);
    if signed {
        candidates <<= n;
    }
    bounds.check_group("sequence candidates", candidates)?;
    let mut remaining: Vec<u32> = parts.iter().map(|p| p.unsigned_abs()).collect();
    let mut prefix = Vec::with_capacity(n);
    let mut out = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn go<L, S>(
        n: usize,
        signed: bool,
        remaining: &mut [u32],
        prefix: &mut Vec<i32>,
        local: &mut L,
        stats: &mut S,
        out: &mut Vec<AdmissibleSequence>,
    ) where
        L: FnMut(usize, i32, &[i32]) -> bool,
        S: FnMut(&[i32]) -> Option<WeightStats>,
    {
        if prefix.len() == n {
            if let Some(st) = stats(prefix) {
                out.push(AdmissibleSequence {
                    entries: prefix.clone(),
                    stats: st,
                });
            }
            return;
        }
        let i = prefix.len();
        for k in 0..remaining.len() {
            if remaining[k] == 0 {
                continue;
            }
            let label = k as i32 + 1;
            let choices: &[i32] = if signed { &[label, -label] } else { &[label] };
            for &v in choices {
                if !local(i, v, prefix) {
                    continue;
                }
                remaining[k] -= 1;
                prefix.push(v);
                go(n, signed, remaining, prefix, local, stats, out);
                prefix.pop();
                remaining[k] += 1;
            }
        }
    }
    go(
        n,
        signed,
        &mut remaining,
        &mut prefix,
        &mut local,
        &mut stats,
        &mut out,
    );
    Ok(out)
}

fn multinomial(parts: &[i32]) -> u128 {
    let mut total = 0u128;
    let mut acc = 1u128;
    for &p in parts {
        for i in 1..=p.unsigned_abs() as u128 {
            total += 1;
            acc = acc * total / i;
        }
    }
    acc
}

/// Counts `s_i ∈ K` with `a_i > a_{i+1}` (d) and with `a_i = a_{i+1}` or
/// `a_i <= a_{i+1}` (e).
fn de_stats(ctx: &Context, a: &[i32], reading: DEReading) -> (u32, u32) {
    let (mut d, mut e) = (0, 0);
    for i in 1..ctx.n {
        if !ctx.in_k(Generator::S(i)) {
            continue;
        }
        let (x, y) = (a[i - 1], a[i]);
        if x > y {
            d += 1;
        } else if x == y || reading == DEReading::LessOrEqual {
            e += 1;
        }
    }
    (d, e)
}

fn family_parts(family: CoxFamily, lambda: &SignedComposition) -> Result<()> {
    lambda.check_family(family)?;
    Ok(())
}

fn check_k(family: CoxFamily, k: &BTreeSet<Generator>) -> Result<()> {
    k.iter().try_for_each(|&s| family.check_generator(s))
}

/// Sequences for the symmetric group.
pub fn sequences_a(
    lambda: &SignedComposition,
    k: &BTreeSet<Generator>,
    bounds: &Bounds,
) -> Result<Vec<AdmissibleSequence>> {
    let family = CoxFamily::A(lambda.size());
    family_parts(family, lambda)?;
    check_k(family, k)?;
    let ctx = Context {
        n: lambda.size(),
        parts: lambda.parts(),
        k,
    };
    enumerate(
        ctx.parts,
        false,
        bounds,
        |i, v, prefix| i == 0 || !ctx.in_k(Generator::S(i)) || prefix[i - 1] >= v,
        |a| {
            let (d, e) = de_stats(&ctx, a, DEReading::Equal);
            Some(WeightStats { d, e, f: 0, g: 0 })
        },
    )
}

/// Sequences for signed permutations and a parabolic subgroup.
pub fn sequences_b(
    lambda: &SignedComposition,
    k: &BTreeSet<Generator>,
    bounds: &Bounds,
) -> Result<Vec<AdmissibleSequence>> {
    let family = CoxFamily::B(lambda.size());
    family_parts(family, lambda)?;
    check_k(family, k)?;
    if !lambda.is_parabolic() {
        return Err(Error::Invalid(format!(
            "{lambda} is not parabolic; use the quasi-parabolic formula"
        )));
    }
    let t_in_j = lambda.parts()[0] < 0;
    let t_in_k = k.contains(&Generator::T);
    let ctx = Context {
        n: lambda.size(),
        parts: lambda.parts(),
        k,
    };
    enumerate(
        ctx.parts,
        true,
        bounds,
        |i, v, prefix| {
            if t_in_j && v == -1 {
                return false;
            }
            if i == 0 && t_in_k && !(v < 0 || (v == 1 && t_in_j)) {
                return false;
            }
            i == 0 || !ctx.in_k(Generator::S(i)) || prefix[i - 1] >= v
        },
        |a| {
            let (d, e) = de_stats(&ctx, a, DEReading::Equal);
            let f = (t_in_k && a[0] < 0) as u32;
            let g = (t_in_k && a[0] > 0) as u32;
            Some(WeightStats { d, e, f, g })
        },
    )
}

/// Sequences for even signed permutations, with the chosen reading of `e`.
pub fn sequences_d(
    lambda: &SignedComposition,
    k: &BTreeSet<Generator>,
    reading: DEReading,
    bounds: &Bounds,
) -> Result<Vec<AdmissibleSequence>> {
    let family = CoxFamily::D(lambda.size());
    family_parts(family, lambda)?;
    check_k(family, k)?;
    // Rejects the non-normalized (-1, ...) case.
    crate::coxeter::comp_to_gens(family, lambda)?;
    let t_in_j = lambda.parts()[0] < 0;
    let t_in_k = k.contains(&Generator::T);
    let ctx = Context {
        n: lambda.size(),
        parts: lambda.parts(),
        k,
    };
    enumerate(
        ctx.parts,
        true,
        bounds,
        |i, v, prefix| {
            if t_in_j && v == -1 && (prefix.contains(&-1) || prefix.contains(&1)) {
                return false;
            }
            if i == 0 || !ctx.in_k(Generator::S(i)) {
                return true;
            }
            let u = prefix[i - 1];
            u >= v || (t_in_j && u == -1 && v == 1)
        },
        |a| {
            if a.iter().filter(|&&x| x < 0).count() % 2 == 1 {
                return None;
            }
            let (mut f, mut g) = (0, 0);
            if t_in_k {
                let (a1, a2) = (a[0], a[1]);
                let ok = match a1.abs().cmp(&a2.abs()) {
                    std::cmp::Ordering::Greater => a1 < 0,
                    std::cmp::Ordering::Less => a2 < 0,
                    std::cmp::Ordering::Equal => a1 < 0 || a2 < 0 || (a1 == 1 && a2 == 1 && t_in_j),
                };
                if !ok {
                    return None;
                }
                f = ((a1 == a2 && a1 < 0) || a1.abs() != a2.abs()) as u32;
                g = (a1 == -a2 || (a1 == 1 && a2 == 1)) as u32;
            }
            let (d, e) = de_stats(&ctx, a, reading);
            Some(WeightStats { d, e, f, g })
        },
    )
}

/// Sequences for an arbitrary signed composition (quasi-parabolic
/// subgroup) of the signed permutation group.
pub fn sequences_b_quasi(
    lambda: &SignedComposition,
    k: &BTreeSet<Generator>,
    bounds: &Bounds,
) -> Result<Vec<AdmissibleSequence>> {
    let family = CoxFamily::B(lambda.size());
    family_parts(family, lambda)?;
    check_k(family, k)?;
    let parts = lambda.parts();
    let t_in_k = k.contains(&Generator::T);
    let ctx = Context {
        n: lambda.size(),
        parts,
        k,
    };
    enumerate(
        parts,
        true,
        bounds,
        |i, v, prefix| {
            if v < 0 && parts[(-v) as usize - 1] < 0 {
                return false;
            }
            if i == 0 && t_in_k && !(v < 0 || parts[v as usize - 1] < 0) {
                return false;
            }
            i == 0 || !ctx.in_k(Generator::S(i)) || prefix[i - 1] >= v
        },
        |a| {
            let (d, e) = de_stats(&ctx, a, DEReading::Equal);
            let f = (t_in_k && a[0] < 0) as u32;
            let g = if t_in_k && a[0] > 0 {
                let before: u32 = parts[..a[0] as usize - 1]
                    .iter()
                    .map(|p| p.unsigned_abs())
                    .sum();
                1 + 2 * before
            } else {
                0
            };
            Some(WeightStats { d, e, f, g })
        },
    )
}

fn weighted_sum(seqs: &[AdmissibleSequence], base: BaseChar) -> LaurentHalf {
    seqs.iter().map(|s| s.stats.weight(base)).sum()
}

/// `η_λ(T_w)` and `ε_λ(T_w)` in the symmetric group.
pub fn char_a(
    lambda: &SignedComposition,
    k: &BTreeSet<Generator>,
    base: BaseChar,
    bounds: &Bounds,
) -> Result<LaurentHalf> {
    Ok(weighted_sum(&sequences_a(lambda, k, bounds)?, base))
}

pub fn eta_a(lambda: &SignedComposition, k: &BTreeSet<Generator>) -> Result<LaurentHalf> {
    char_a(lambda, k, BaseChar::Trivial, &Bounds::default())
}

pub fn eps_a(lambda: &SignedComposition, k: &BTreeSet<Generator>) -> Result<LaurentHalf> {
    char_a(lambda, k, BaseChar::Sign, &Bounds::default())
}

/// Type B, parabolic `λ`.
pub fn char_b(
    lambda: &SignedComposition,
    k: &BTreeSet<Generator>,
    base: BaseChar,
    bounds: &Bounds,
) -> Result<LaurentHalf> {
    Ok(weighted_sum(&sequences_b(lambda, k, bounds)?, base))
}

pub fn eta_b(lambda: &SignedComposition, k: &BTreeSet<Generator>) -> Result<LaurentHalf> {
    char_b(lambda, k, BaseChar::Trivial, &Bounds::default())
}

pub fn eps_b(lambda: &SignedComposition, k: &BTreeSet<Generator>) -> Result<LaurentHalf> {
    char_b(lambda, k, BaseChar::Sign, &Bounds::default())
}

/// Type D with the oracle-selected reading of `e`.
pub fn char_d(
    lambda: &SignedComposition,
    k: &BTreeSet<Generator>,
    base: BaseChar,
    bounds: &Bounds,
) -> Result<LaurentHalf> {
    char_d_with(lambda, k, base, D_E_READING, bounds)
}

pub fn char_d_with(
    lambda: &SignedComposition,
    k: &BTreeSet<Generator>,
    base: BaseChar,
    reading: DEReading,
    bounds: &Bounds,
) -> Result<LaurentHalf> {
    Ok(weighted_sum(
        &sequences_d(lambda, k, reading, bounds)?,
        base,
    ))
}

pub fn eta_d(lambda: &SignedComposition, k: &BTreeSet<Generator>) -> Result<LaurentHalf> {
    char_d(lambda, k, BaseChar::Trivial, &Bounds::default())
}

pub fn eps_d(lambda: &SignedComposition, k: &BTreeSet<Generator>) -> Result<LaurentHalf> {
    char_d(lambda, k, BaseChar::Sign, &Bounds::default())
}

/// Type B, arbitrary signed composition. Returned in the `T` normalization,
/// in which it agrees with [`char_b`] for parabolic `λ`.
pub fn char_b_quasi(
    lambda: &SignedComposition,
    k: &BTreeSet<Generator>,
    base: BaseChar,
    bounds: &Bounds,
) -> Result<LaurentHalf> {
    Ok(weighted_sum(&sequences_b_quasi(lambda, k, bounds)?, base))
}

pub fn eta_b_quasi(lambda: &SignedComposition, k: &BTreeSet<Generator>) -> Result<LaurentHalf> {
    char_b_quasi(lambda, k, BaseChar::Trivial, &Bounds::default())
}

pub fn eps_b_quasi(lambda: &SignedComposition, k: &BTreeSet<Generator>) -> Result<LaurentHalf> {
    char_b_quasi(lambda, k, BaseChar::Sign, &Bounds::default())
}

/// Dispatches on the family: the combinatorial value of the character
/// induced from `J` (given as a generator set) on the parabolic element of
/// type `K`.
pub fn induced_char_combi(
    family: CoxFamily,
    j: &BTreeSet<Generator>,
    k: &BTreeSet<Generator>,
    base: BaseChar,
    bounds: &Bounds,
) -> Result<LaurentHalf> {
    match family {
        CoxFamily::A(_) => char_a(&gens_to_comp(family, j)?, k, base, bounds),
        CoxFamily::B(_) => char_b(&gens_to_comp(family, j)?, k, base, bounds),
        CoxFamily::D(_) => char_d(&gens_to_comp(family, j)?, k, base, bounds),
        CoxFamily::I(m) => {
            let c = dihedral_c(j)?;
            let w = crate::coxeter::parabolic_element(family, k)?;
            char_i(m, c, base, &w)
        }
    }
}

/// The index `c` of a dihedral parabolic subalgebra: 0 for the trivial one,
/// 1 or 2 for the one generated by `g1` or `g2`.
pub fn dihedral_c(j: &BTreeSet<Generator>) -> Result<u8> {
    match (j.contains(&Generator::G1), j.contains(&Generator::G2)) {
        (false, false) => Ok(0),
        (true, false) => Ok(1),
        (false, true) => Ok(2),
        (true, true) => Err(Error::Unsupported(
            "inducing from the whole dihedral algebra gives the base character itself".into(),
        )),
    }
}

/// Renders a sequence with bars between positions `i` and `i + 1` for the
/// `s_i` not in `K`. Entries are concatenated when every label is a single
/// digit, and comma separated otherwise.
pub fn render_sequence(a: &[i32], k: &BTreeSet<Generator>) -> String {
    let compact = a.iter().all(|x| x.abs() < 10);
    let mut out = String::new();
    for (i, x) in a.iter().enumerate() {
        if i > 0 {
            if !k.contains(&Generator::S(i)) {
                out.push('|');
            } else if !compact {
                out.push(',');
            }
        }
        write!(out, "{x}").unwrap();
    }
    out
}

/// The sequence and weight table, one `sequence<TAB>weight` line per
/// sequence, followed by the total.
pub fn render_table(
    seqs: &[AdmissibleSequence],
    k: &BTreeSet<Generator>,
    base: BaseChar,
) -> String {
    let mut out = String::from("a\tweight\n");
    for s in seqs {
        writeln!(
            out,
            "{}\t{}",
            render_sequence(&s.entries, k),
            s.stats.render(base)
        )
        .unwrap();
    }
    writeln!(out, "total\t{}", weighted_sum(seqs, base)).unwrap();
    out
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn term(coeff: BigInt, qexp: i64, qm1exp: i64) -> LaurentHalf {
    LaurentHalf::monomial(coeff, 2 * qexp) * LaurentHalf::q_minus_one().pow(qm1exp as u32)
}

/// For an odd-length element of a dihedral group, whether it is conjugate
/// to the generator `g_c`. Reflections are conjugate to the middle letter
/// of their reduced word; for odd `m` all reflections are conjugate.
pub fn reflection_conjugate_to(m: usize, w: &GroupElement, c: u8) -> bool {
    let (len, start) = w.dihedral_parts().expect("dihedral element");
    if len % 2 == 0 {
        return false;
    }
    if m % 2 == 1 {
        return true;
    }
    let middle = len.div_ceil(2);
    let letter = if middle % 2 == 1 { start } else { 3 - start };
    letter == c
}

/// The closed forms for `η_c(T_w)` and `ε_c(T_w)` in `I2(m)`, where `c = 0`
/// is the trivial subalgebra and `c = 1, 2` the subalgebra generated by
/// `T_{g_c}`.
pub fn char_i(m: usize, c: u8, base: BaseChar, w: &GroupElement) -> Result<LaurentHalf> {
    CoxFamily::I(m).validate()?;
    CoxFamily::I(m).same_as(w.family())?;
    if c > 2 {
        return Err(Error::Invalid(format!("c must be 0, 1 or 2, got {c}")));
    }
    let l = w.length() as i64;
    let mi = m as i64;
    let eta = base == BaseChar::Trivial;
    if l == 0 {
        return Ok(LaurentHalf::constant(if c == 0 { 2 * mi } else { mi }));
    }
    let mut out = LaurentHalf::zero();
    if c == 0 {
        let top = if l % 2 == 0 { l / 2 - 1 } else { (l - 3) / 2 };
        if l % 2 == 1 {
            out += &term(BigInt::from(mi), (l + 1) / 2, 0);
            out -= &term(BigInt::from(mi), (l - 1) / 2, 0);
        }
        for j in 0..=top {
            let num = binomial(l - j, j) * l;
            let den = BigInt::from(l - j);
            debug_assert!((&num % &den).is_zero());
            out += &term(num / den, j, l - 2 * j);
        }
        return Ok(out);
    }
    if l % 2 == 0 {
        let h = l / 2;
        for j in 1..=h {
            let b = binomial(h + j - 1, 2 * j - 1);
            if eta {
                out += &term(b, h + 1 - j, 2 * j - 1);
            } else {
                out -= &term(b, h - j, 2 * j - 1);
            }
        }
        for j in 1..h {
            out += &term(binomial(h + j - 1, 2 * j), h - j, 2 * j);
        }
        return Ok(out);
    }
    let h = (l - 1) / 2;
    let conj = reflection_conjugate_to(m, w, c);
    let (hi, lo) = match (m % 2 == 1, conj, eta) {
        (true, _, true) => ((mi + 1) / 2, (mi - 1) / 2),
        (true, _, false) => ((mi - 1) / 2, (mi + 1) / 2),
        (false, true, true) => (mi / 2 + 1, mi / 2 - 1),
        (false, true, false) => (mi / 2 - 1, mi / 2 + 1),
        (false, false, _) => (mi / 2, mi / 2),
    };
    out += &term(BigInt::from(hi), h + 1, 0);
    out -= &term(BigInt::from(lo), h, 0);
    for j in 2..=h {
        out += &term(binomial(h + j - 1, 2 * j - 1), h + 1 - j, 2 * j - 1);
    }
    for j in 1..=h {
        let b = binomial(h + j, 2 * j);
        if eta {
            out += &term(b, h + 1 - j, 2 * j);
        } else {
            out -= &term(b, h - j, 2 * j);
        }
    }
    Ok(out)
}
