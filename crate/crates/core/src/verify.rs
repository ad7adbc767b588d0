//! Verification sweeps: every formula against an independent oracle on all
//! small cases.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::Bounds;
use crate::combi;
use crate::coxeter::{
    enumerate_group, generator_subsets, parabolic_element, CoxFamily, Generator, GroupElement,
    SignedComposition, Subgroup,
};
use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::induce::{
    classical_from_reps, coset_representatives, extend_char_a, r_count, recurrence_violation,
    BaseChar, CharValueTable, InductionOracle, ProductCache,
};
use crate::qpoly::LaurentHalf;
use crate::symfun::{self, Partition};

/// The verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    A,
    B,
    D,
    I,
    Omega,
    Irreducible,
    Extend,
    Structural,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::A,
        Suite::B,
        Suite::D,
        Suite::I,
        Suite::Omega,
        Suite::Irreducible,
        Suite::Extend,
        Suite::Structural,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::A => "A",
            Suite::B => "B",
            Suite::D => "D",
            Suite::I => "I",
            Suite::Omega => "omega",
            Suite::Irreducible => "irreducible",
            Suite::Extend => "extend",
            Suite::Structural => "structural",
        };
        f.write_str(s)
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Outcome of one family of checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub checked: u64,
    /// The first counterexample, in enumeration order.
    pub failure: Option<String>,
}

impl Check {
    fn new(name: &str) -> Self {
        Check {
            name: name.to_string(),
            checked: 0,
            failure: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn absorb(&mut self, other: Check) {
        self.checked += other.checked;
        if self.failure.is_none() {
            self.failure = other.failure;
        }
    }
}

/// All checks of one suite run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub size: Option<usize>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    /// One `PASS`/`FAIL` line per check.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            match &c.failure {
                None => out.push_str(&format!("PASS {} ({} checks)\n", c.name, c.checked)),
                Some(f) => out.push_str(&format!("FAIL {} ({} checks): {f}\n", c.name, c.checked)),
            }
        }
        out
    }
}

fn merge(into: &mut [Check], parts: Vec<Vec<Check>>) {
    for part in parts {
        for (slot, c) in into.iter_mut().zip(part) {
            slot.absorb(c);
        }
    }
}

/// Runs `suite` at rank or size `size`. The structural suite ignores `size`.
pub fn run_suite(suite: Suite, size: Option<usize>, bounds: &Bounds) -> Result<Report> {
    let need = |default: usize| size.unwrap_or(default);
    let checks = match suite {
        Suite::A => parabolic_sweep(CoxFamily::A(need(4)).validate()?, bounds)?,
        Suite::B => parabolic_sweep(CoxFamily::B(need(3)).validate()?, bounds)?,
        Suite::D => parabolic_sweep(CoxFamily::D(need(4)).validate()?, bounds)?,
        Suite::I => dihedral_sweep(need(6), bounds)?,
        Suite::Omega => omega_suite(need(5))?,
        Suite::Irreducible => irreducible_suite(need(5), bounds)?,
        Suite::Extend => extend_suite(need(4), bounds)?,
        Suite::Structural => structural_suite(bounds)?,
    };
    Ok(Report {
        suite,
        size: if suite == Suite::Structural {
            None
        } else {
            Some(need(0))
        },
        checks,
    })
}

fn set_string(j: &BTreeSet<Generator>) -> String {
    crate::coxeter::format_generator_set(j)
}

struct Induced {
    j: BTreeSet<Generator>,
    subgroup: Subgroup,
    oracle: InductionOracle,
    reps: Vec<GroupElement>,
}

fn parabolic_subgroups(family: CoxFamily, bounds: &Bounds) -> Result<Vec<Induced>> {
    let mut out = Vec::new();
    for j in generator_subsets(family) {
        let subgroup = match Subgroup::parabolic(family, j.clone()) {
            Ok(s) => s,
            // Type D sets with t but not s1 are images of normalized ones
            // under the diagram automorphism.
            Err(Error::Unsupported(_)) => continue,
            Err(e) => return Err(e),
        };
        let oracle = InductionOracle::new(&subgroup, bounds)?;
        let reps = coset_representatives(&subgroup, bounds)?;
        out.push(Induced {
            j,
            subgroup,
            oracle,
            reps,
        });
    }
    Ok(out)
}

/// The sequence formulas against the induction oracle for all `(J, K)`,
/// and their `q = 1` values against the coset-fixing count.
pub fn parabolic_sweep(family: CoxFamily, bounds: &Bounds) -> Result<Vec<Check>> {
    bounds.check_group("group", family.order())?;
    let subs = parabolic_subgroups(family, bounds)?;
    let ks = generator_subsets(family);
    let is_a = matches!(family, CoxFamily::A(_));
    let names = [
        "sequence formula = induction oracle",
        "q=1 value = coset-fixing count",
        "q=1 value = ordered set partition count",
    ];
    let parts: Vec<Result<Vec<Check>>> = ks
        .par_iter()
        .map(|k| {
            let mut checks: Vec<Check> = names.iter().map(|n| Check::new(n)).collect();
            let w = parabolic_element(family, k)?;
            let mut cache = ProductCache::new(&w);
            for sub in &subs {
                let (eta, eps) = sub.oracle.values(&mut cache);
                for (base, want) in [(BaseChar::Trivial, &eta), (BaseChar::Sign, &eps)] {
                    let got = combi::induced_char_combi(family, &sub.j, k, base, bounds)?;
                    checks[0].record(&got == want, || {
                        format!(
                            "{family} J={} K={} {base}: formula {got}, oracle {want}",
                            set_string(&sub.j),
                            set_string(k)
                        )
                    });
                    let cl = classical_from_reps(&sub.subgroup, &sub.reps, base, &w);
                    checks[1].record(want.eval_q1() == cl, || {
                        format!(
                            "{family} J={} K={} {base}: {want} at q=1 vs {cl}",
                            set_string(&sub.j),
                            set_string(k)
                        )
                    });
                    if is_a {
                        let lambda: Vec<usize> = sub
                            .subgroup
                            .composition()
                            .expect("type A subgroups have compositions")
                            .parts()
                            .iter()
                            .map(|&p| p as usize)
                            .collect();
                        let r = BigInt::from(r_count(&w.cycle_type(), &lambda));
                        let r = match base {
                            BaseChar::Trivial => r,
                            BaseChar::Sign if w.length() % 2 == 1 => -r,
                            BaseChar::Sign => r,
                        };
                        checks[2].record(want.eval_q1() == r, || {
                            format!(
                                "{family} J={} K={} {base}: R count {r}",
                                set_string(&sub.j),
                                set_string(k)
                            )
                        });
                    }
                }
            }
            Ok(checks)
        })
        .collect();
    let mut out: Vec<Check> = names.iter().map(|n| Check::new(n)).collect();
    merge(&mut out, parts.into_iter().collect::<Result<Vec<_>>>()?);
    if !is_a {
        out.pop();
    }
    Ok(out)
}

/// The dihedral closed forms against the oracle on every element.
pub fn dihedral_sweep(m: usize, bounds: &Bounds) -> Result<Vec<Check>> {
    let family = CoxFamily::I(m).validate()?;
    let group = enumerate_group(family, bounds)?;
    let mut formula = Check::new("closed form = induction oracle");
    let mut classical = Check::new("q=1 value = coset-fixing count");
    for j in [vec![], vec![Generator::G1], vec![Generator::G2]] {
        let j: BTreeSet<Generator> = j.into_iter().collect();
        let c = combi::dihedral_c(&j)?;
        let subgroup = Subgroup::parabolic(family, j)?;
        let oracle = InductionOracle::new(&subgroup, bounds)?;
        let reps = coset_representatives(&subgroup, bounds)?;
        for w in &group {
            let mut cache = ProductCache::new(w);
            let (eta, eps) = oracle.values(&mut cache);
            for (base, want) in [(BaseChar::Trivial, eta), (BaseChar::Sign, eps)] {
                let got = combi::char_i(m, c, base, w)?;
                formula.record(got == want, || {
                    format!("m={m} c={c} {w} {base}: {got} vs {want}")
                });
                let cl = classical_from_reps(&subgroup, &reps, base, w);
                classical.record(want.eval_q1() == cl, || {
                    format!("m={m} c={c} {w} {base}: q=1 {cl}")
                });
            }
        }
    }
    Ok(vec![formula, classical])
}

/// `⟨p̄_μ, s_λ⟩ = ⟨p̃_μ, s_λ'⟩` for all `μ, λ ⊢ n`.
pub fn omega_suite(n: usize) -> Result<Vec<Check>> {
    let mut c = Check::new("<pbar_mu, s_lambda> = <ptilde_mu, s_lambda'>");
    let results: Vec<(Partition, Result<bool>)> = Partition::all(n)
        .into_par_iter()
        .map(|mu| {
            let ok = symfun::omega_corollary_check(mu.parts());
            (mu, ok)
        })
        .collect();
    for (mu, ok) in results {
        c.record(ok?, || format!("mu={mu}"));
    }
    Ok(vec![c])
}

/// The irreducible type A characters by every route, on every parabolic
/// type (as a composition).
pub fn irreducible_suite(n: usize, bounds: &Bounds) -> Result<Vec<Check>> {
    let family = CoxFamily::A(n).validate()?;
    let names = [
        "tableau sum = sum of K^-1(nu,lambda) eta_nu",
        "tableau sum = sum of K^-1(nu,lambda') eps_nu",
        "tableau sum = iterated quantum MN",
        "tableau sum = <pbar_mu, s_lambda>",
        "q=1 value = border strip rule",
    ];
    let use_symfun = n <= 6;
    let types: Vec<Vec<u32>> = generator_subsets(family)
        .iter()
        .map(|k| {
            let c = crate::coxeter::gens_to_comp(family, k)?;
            Ok(c.parts().iter().map(|&p| p as u32).collect())
        })
        .collect::<Result<_>>()?;
    let parts: Vec<Result<Vec<Check>>> = Partition::all(n)
        .into_par_iter()
        .map(|lambda| {
            let mut checks: Vec<Check> = names.iter().map(|n| Check::new(n)).collect();
            for mu in &types {
                let direct: LaurentHalf = symfun::bbst_enumerate(&lambda, mu)
                    .iter()
                    .map(|t| t.weight())
                    .sum();
                let label = || format!("lambda={lambda} mu={}", fmt_comp(mu));
                let k = symfun::chi_a_kostka(&lambda, mu, bounds)?;
                checks[0].record(k == direct, || format!("{}: {direct} vs {k}", label()));
                let e = symfun::chi_a_kostka_eps(&lambda, mu, bounds)?;
                checks[1].record(e == direct, || format!("{}: {direct} vs {e}", label()));
                let m = symfun::chi_a_mn(&lambda, mu);
                checks[2].record(m == direct, || format!("{}: {direct} vs {m}", label()));
                if use_symfun {
                    let s = symfun::chi_a_symfun(&lambda, mu)?;
                    checks[3].record(s == direct, || format!("{}: {direct} vs {s}", label()));
                }
                let cl = symfun::chi_classical(&lambda, mu);
                checks[4].record(direct.eval_q1() == BigInt::from(cl), || {
                    format!("{}: {cl}", label())
                });
            }
            Ok(checks)
        })
        .collect();
    let mut out: Vec<Check> = names.iter().map(|n| Check::new(n)).collect();
    merge(&mut out, parts.into_iter().collect::<Result<Vec<_>>>()?);
    if !use_symfun {
        out.remove(3);
    }
    Ok(out)
}

fn fmt_comp(mu: &[u32]) -> String {
    mu.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Values on parabolic elements extended by the recurrence to all of the
/// symmetric group, against the oracle; the extended irreducible
/// characters must satisfy the recurrences and specialize correctly.
pub fn extend_suite(n: usize, bounds: &Bounds) -> Result<Vec<Check>> {
    let family = CoxFamily::A(n).validate()?;
    let group = enumerate_group(family, bounds)?;
    let subs = parabolic_subgroups(family, bounds)?;
    let mut induced = Check::new("extended induced character = induction oracle");
    let parts: Vec<Result<Check>> = subs
        .par_iter()
        .map(|sub| {
            let mut c = Check::new("");
            let lambda = sub.subgroup.composition().expect("type A").clone();
            for base in BaseChar::ALL {
                let table = sub.oracle.table(base, &group);
                for w in &group {
                    let got =
                        extend_char_a(|p| combi::char_a(&lambda, &p.support(), base, bounds), w)?;
                    let want = &table.values[w];
                    c.record(&got == want, || {
                        format!("lambda={lambda} {base} w={w}: {got} vs {want}")
                    });
                }
            }
            Ok(c)
        })
        .collect();
    for p in parts {
        induced.absorb(p?);
    }

    let mut rec = Check::new("extended irreducible character satisfies the recurrences");
    let mut q1 = Check::new("extended irreducible character at q=1 = border strip rule");
    for lambda in Partition::all(n) {
        let mut table = CharValueTable::new(family, lambda.to_string(), BaseChar::Trivial);
        for w in &group {
            let v = extend_char_a(
                |p| {
                    let mu = cycle_type_u32(p);
                    Ok(symfun::chi_a_bbst(&lambda, &mu))
                },
                w,
            )?;
            let cl = symfun::chi_classical(&lambda, &cycle_type_u32(w));
            q1.record(v.eval_q1() == BigInt::from(cl), || {
                format!("lambda={lambda} w={w}: {v} vs {cl}")
            });
            table.values.insert(w.clone(), v);
        }
        let bad = recurrence_violation(&table);
        rec.record(bad.is_none(), || {
            let (w, s) = bad.clone().unwrap();
            format!("lambda={lambda} at w={w}, s={s}")
        });
    }
    Ok(vec![induced, rec, q1])
}

fn cycle_type_u32(w: &GroupElement) -> Vec<u32> {
    w.cycle_type().into_iter().map(|c| c as u32).collect()
}

/// Hecke algebra and coset structure: associativity, independence of the
/// reduced word, the character recurrences, the descending-coset lemma,
/// transversal factorization and the coset labelling bijection.
pub fn structural_suite(bounds: &Bounds) -> Result<Vec<Check>> {
    Ok(vec![
        associativity(bounds)?,
        reduced_words(bounds)?,
        recurrences(bounds)?,
        descending_cosets(bounds)?,
        transversals(bounds)?,
        labelling(bounds)?,
    ])
}

fn associativity(bounds: &Bounds) -> Result<Check> {
    let mut c = Check::new("Hecke product is associative");
    let triple = |a: &GroupElement, b: &GroupElement, d: &GroupElement| -> Result<bool> {
        let (ta, tb, td) = (
            HeckeElement::t_elt(a),
            HeckeElement::t_elt(b),
            HeckeElement::t_elt(d),
        );
        Ok(ta.mul(&tb)?.mul(&td)? == ta.mul(&tb.mul(&td)?)?)
    };
    for family in [CoxFamily::A(3), CoxFamily::B(2), CoxFamily::I(4)] {
        let group = enumerate_group(family, bounds)?;
        let results: Vec<Result<Option<String>>> = group
            .par_iter()
            .map(|a| {
                for b in &group {
                    for d in &group {
                        if !triple(a, b, d)? {
                            return Ok(Some(format!("{family}: ({a},{b},{d})")));
                        }
                    }
                }
                Ok(None)
            })
            .collect();
        for r in results {
            let bad = r?;
            c.checked += (group.len() * group.len()) as u64 - 1;
            c.record(bad.is_none(), || bad.unwrap());
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for family in [CoxFamily::A(4), CoxFamily::B(3)] {
        let group = enumerate_group(family, bounds)?;
        for _ in 0..300 {
            let pick = |rng: &mut StdRng| group[rng.random_range(0..group.len())].clone();
            let (a, b, d) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            // Also combine two basis elements, so that products of sums are
            // exercised.
            let e = pick(&mut rng);
            let mut x = HeckeElement::t_elt(&a);
            x.add_term(e.clone(), LaurentHalf::q_half_pow(1));
            let (tb, td) = (HeckeElement::t_elt(&b), HeckeElement::t_elt(&d));
            let ok = x.mul(&tb)?.mul(&td)? == x.mul(&tb.mul(&td)?)?;
            c.record(ok, || format!("{family}: ({a} + q^(1/2) {e}, {b}, {d})"));
        }
    }
    Ok(c)
}

/// All reduced words of `w`, as generator sequences.
pub fn all_reduced_words(w: &GroupElement) -> Vec<Vec<Generator>> {
    if w.is_identity() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for s in w.family().generators() {
        if w.is_left_descent(s) {
            for mut rest in all_reduced_words(&w.lmul(s)) {
                rest.insert(0, s);
                out.push(rest);
            }
        }
    }
    out
}

fn reduced_words(bounds: &Bounds) -> Result<Check> {
    let mut c = Check::new("T_w is independent of the reduced word");
    for family in [
        CoxFamily::A(4),
        CoxFamily::B(3),
        CoxFamily::D(4),
        CoxFamily::I(6),
    ] {
        for w in enumerate_group(family, bounds)? {
            let t = HeckeElement::t_elt(&w);
            for word in all_reduced_words(&w) {
                let ok = word.len() == w.length() && HeckeElement::from_word(family, &word)? == t;
                c.record(ok, || format!("{family} {w} via {:?}", word));
            }
        }
    }
    Ok(c)
}

fn recurrences(bounds: &Bounds) -> Result<Check> {
    let mut c = Check::new("induced characters satisfy the conjugation recurrences");
    let mut families = vec![CoxFamily::A(4), CoxFamily::B(3), CoxFamily::D(4)];
    families.extend((3..=8).map(CoxFamily::I));
    for family in families {
        let group = enumerate_group(family, bounds)?;
        let subs = parabolic_subgroups(family, bounds)?;
        let results: Vec<(String, bool)> = subs
            .par_iter()
            .flat_map_iter(|sub| {
                BaseChar::ALL.into_iter().map(|base| {
                    let table = sub.oracle.table(base, &group);
                    let bad = recurrence_violation(&table);
                    let msg = match &bad {
                        Some((w, s)) => {
                            format!("{family} J={} {base} at w={w}, s={s}", set_string(&sub.j))
                        }
                        None => String::new(),
                    };
                    (msg, bad.is_none())
                })
            })
            .collect();
        for (msg, ok) in results {
            c.record(ok, || msg);
        }
    }
    Ok(c)
}

fn descending_cosets(bounds: &Bounds) -> Result<Check> {
    // If v s x ~ x while s x is not ~ x, then s occurs in every reduced
    // word of v.
    let mut c = Check::new("descending-coset lemma on A4");
    let family = CoxFamily::A(4);
    let group = enumerate_group(family, bounds)?;
    for j in generator_subsets(family) {
        let h = Subgroup::parabolic(family, j.clone())?;
        let supports: BTreeMap<&GroupElement, BTreeSet<Generator>> =
            group.iter().map(|v| (v, v.support())).collect();
        for x in &group {
            for s in family.generators() {
                let sx = x.lmul(s);
                if h.same_coset(x, &sx) {
                    continue;
                }
                for v in &group {
                    if h.same_coset(&v.mul_unchecked(&sx), x) {
                        c.record(supports[v].contains(&s), || {
                            format!("J={} x={x} s={s} v={v}", set_string(&j))
                        });
                    }
                }
            }
        }
    }
    Ok(c)
}

fn transversals(bounds: &Bounds) -> Result<Check> {
    let mut c = Check::new("unique length-additive factorization w = x u");
    for family in [
        CoxFamily::A(4),
        CoxFamily::B(3),
        CoxFamily::D(4),
        CoxFamily::I(5),
    ] {
        let group = enumerate_group(family, bounds)?;
        for j in generator_subsets(family) {
            let Ok(h) = Subgroup::parabolic(family, j.clone()) else {
                continue;
            };
            let xs = h.transversal(bounds)?;
            c.record(xs.len() as u128 == h.index(), || {
                format!("{family} J={}: index", set_string(&j))
            });
            for w in &group {
                let reps: Vec<&GroupElement> = xs.iter().filter(|x| h.same_coset(x, w)).collect();
                let ok = reps.len() == 1 && {
                    let u = reps[0].inverse().mul_unchecked(w);
                    w.length() == reps[0].length() + u.length()
                };
                c.record(ok, || format!("{family} J={} w={w}", set_string(&j)));
            }
        }
    }
    Ok(c)
}

fn labelling(bounds: &Bounds) -> Result<Check> {
    let mut c = Check::new("coset labelling is a bijection");
    let a8 = CoxFamily::A(8);
    let b8 = CoxFamily::B(8);
    let h: SignedComposition = "3,2,3".parse()?;
    let ha = Subgroup::from_composition(a8, h.clone())?;
    let x = GroupElement::parse(a8, "41573286")?;
    c.record(ha.phi(&x)? == [1, 3, 2, 1, 1, 3, 2, 3], || {
        "phi(41573286)".into()
    });
    let y = ha.phi_inverse(&[3, 1, 2, 1, 3, 3, 2, 1])?;
    c.record(y.to_string() == "24837156", || {
        format!("phi^-1(31213321) = {y}")
    });
    let v = GroupElement::parse(b8, "4,-1,5,7,3,-2,-8,6")?;
    let hb = Subgroup::from_composition(b8, h)?;
    c.record(hb.phi(&v)? == [-1, -3, 2, 1, 1, 3, 2, -3], || {
        "phi_B(4,-1,5,7,3,-2,-8,6)".into()
    });
    let hb = Subgroup::from_composition(b8, "-3,2,3".parse()?)?;
    c.record(hb.phi(&v)? == [1, -3, 2, 1, 1, 3, 2, -3], || {
        "phi_B with negative block".into()
    });

    let mut cases: Vec<(CoxFamily, SignedComposition)> = Vec::new();
    for n in 1..=5 {
        for k in generator_subsets(CoxFamily::A(n)) {
            cases.push((
                CoxFamily::A(n),
                crate::coxeter::gens_to_comp(CoxFamily::A(n), &k)?,
            ));
        }
    }
    for n in 1..=3 {
        for lambda in all_signed_compositions(n) {
            cases.push((CoxFamily::B(n), lambda));
        }
    }
    for (family, lambda) in cases {
        let h = Subgroup::from_composition(family, lambda.clone())?;
        let seqs = h.sequences(bounds)?;
        c.record(seqs.len() as u128 == h.index(), || {
            format!("{family} {lambda}: label count")
        });
        for a in &seqs {
            let x = h.phi_inverse(a)?;
            c.record(&h.phi(&x)? == a, || {
                format!("{family} {lambda}: phi(phi^-1({a:?}))")
            });
        }
        for w in enumerate_group(family, bounds)? {
            let x = h.phi_inverse(&h.phi(&w)?)?;
            c.record(h.same_coset(&x, &w), || {
                format!("{family} {lambda}: coset of {w}")
            });
        }
    }
    Ok(c)
}

/// Every signed composition of `n`.
pub fn all_signed_compositions(n: usize) -> Vec<SignedComposition> {
    fn go(rest: i32, cur: &mut Vec<i32>, out: &mut Vec<SignedComposition>) {
        if rest == 0 {
            out.push(SignedComposition::new(cur.clone()).expect("nonzero parts"));
            return;
        }
        for p in 1..=rest {
            for v in [p, -p] {
                cur.push(v);
                go(rest - p, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n as i32, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("Q".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let b = Bounds::default();
        for (suite, size) in [
            (Suite::A, 3),
            (Suite::B, 2),
            (Suite::D, 3),
            (Suite::I, 5),
            (Suite::Omega, 4),
            (Suite::Irreducible, 4),
            (Suite::Extend, 3),
        ] {
            let r = run_suite(suite, Some(size), &b).unwrap();
            assert!(r.passed(), "{}", r.render());
            assert!(r.checks.iter().all(|c| c.checked > 0), "{}", r.render());
        }
    }

    #[test]
    fn reduced_word_counts() {
        let w0 = GroupElement::parse(CoxFamily::A(4), "4321").unwrap();
        assert_eq!(all_reduced_words(&w0).len(), 16);
        assert_eq!(all_signed_compositions(2).len(), 6);
    }

    #[test]
    fn failures_are_reported() {
        let mut c = Check::new("x");
        c.record(true, || unreachable!());
        c.record(false, || "first".into());
        c.record(false, || "second".into());
        assert_eq!(c.failure.as_deref(), Some("first"));
        assert_eq!(c.checked, 3);
    }
}
