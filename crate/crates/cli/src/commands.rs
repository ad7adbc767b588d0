use std::collections::BTreeSet;

use heckechar::combi::{self, D_E_READING};
use heckechar::coxeter::{
    comp_to_gens, enumerate_group, format_generator_set, generator_subsets, gens_to_comp,
    parabolic_element, parse_generator_set,
};
use heckechar::induce::{extend_char_a, InductionOracle};
use heckechar::symfun::{self, quantum_mn_step, render_schur_expansion};
use heckechar::verify::{run_suite, Report, Suite};
use heckechar::{
    BaseChar, Bounds, CoxFamily, Error, Generator, GroupElement, LaurentHalf, Partition,
    SignedComposition, Subgroup,
};

use crate::output::{json, CharDoc, CharKind, ExpandDoc, ExpandTerm, Format, TableDoc, TableEntry};
use crate::{CharArgs, ExpandArgs, Failure, GroupArgs, Route, TableArgs, TypeTag, VerifyArgs};

type Res<T> = Result<T, Failure>;

/// A table column: its label, the element, and the element's type.
type Column = (String, GroupElement, Option<BTreeSet<Generator>>);

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn family(g: &GroupArgs) -> Res<CoxFamily> {
    let f = match (g.family, g.n, g.m) {
        (TypeTag::A, Some(n), None) => CoxFamily::A(n),
        (TypeTag::B, Some(n), None) => CoxFamily::B(n),
        (TypeTag::D, Some(n), None) => CoxFamily::D(n),
        (TypeTag::I, None, Some(m)) => CoxFamily::I(m),
        (TypeTag::I, _, _) => return Err(usage("type I takes --m and no --n")),
        _ => return Err(usage("types A, B and D take --n and no --m")),
    };
    Ok(f.validate()?)
}

/// What a character is induced from, or which irreducible it is.
enum Character {
    Induced { subgroup: Subgroup, base: BaseChar },
    Irreducible(Partition),
}

impl Character {
    fn label(&self) -> String {
        match self {
            Character::Induced { subgroup, .. } => match subgroup.composition() {
                Some(c) => c.to_string(),
                None => format_generator_set(subgroup.generators().expect("parabolic")),
            },
            Character::Irreducible(l) => l.to_string(),
        }
    }

    fn kind(&self) -> CharKind {
        match self {
            Character::Induced { .. } => CharKind::Induced,
            Character::Irreducible(_) => CharKind::Irreducible,
        }
    }

    fn base(&self) -> Option<BaseChar> {
        match self {
            Character::Induced { base, .. } => Some(*base),
            Character::Irreducible(_) => None,
        }
    }
}

fn character(family: CoxFamily, g: &GroupArgs) -> Res<Character> {
    if let Some(l) = &g.irreducible {
        let CoxFamily::A(n) = family else {
            return Err(Failure::Lib(Error::Unsupported(
                "irreducible characters are available in type A only".into(),
            )));
        };
        let lambda: Partition = l.parse()?;
        if lambda.size() != n {
            return Err(Failure::Lib(Error::Invalid(format!(
                "{lambda} is not a partition of {n}"
            ))));
        }
        return Ok(Character::Irreducible(lambda));
    }
    let base: BaseChar = g.base.parse()?;
    let subgroup = match (family, &g.lambda, &g.j, g.c) {
        (CoxFamily::I(_), None, None, Some(c)) => {
            let j = [vec![], vec![Generator::G1], vec![Generator::G2]]
                .into_iter()
                .map(|v| v.into_iter().collect::<BTreeSet<_>>())
                .find(|j| combi::dihedral_c(j).ok() == Some(c))
                .ok_or_else(|| usage(format!("--c must be 0, 1 or 2, got {c}")))?;
            Subgroup::parabolic(family, j)?
        }
        (_, None, Some(j), None) => Subgroup::parabolic(family, parse_generator_set(j)?)?,
        (CoxFamily::I(_), Some(_), _, _) => {
            return Err(usage("type I takes --J or --c, not --lambda"))
        }
        (_, Some(l), None, None) => {
            let lambda: SignedComposition = l.parse()?;
            if lambda.size() != family.degree() {
                return Err(Failure::Lib(Error::Invalid(format!(
                    "{lambda} is not a composition of {}",
                    family.degree()
                ))));
            }
            if lambda.is_parabolic() {
                // Goes through the generator set so that type D rejects the
                // compositions it cannot represent.
                let gens = comp_to_gens(family, &lambda)?;
                let h = Subgroup::parabolic(family, gens)?;
                Subgroup::from_composition(family, h.composition().cloned().unwrap_or(lambda))?
            } else {
                Subgroup::from_composition(family, lambda)?
            }
        }
        _ => {
            return Err(usage(
                "give exactly one of --lambda, --J or --c (or --irreducible)",
            ))
        }
    };
    Ok(Character::Induced { subgroup, base })
}

/// Accepts the library's element formats plus words like `s1*s2*t`
/// (`e` for the identity).
fn parse_element(family: CoxFamily, s: &str) -> Res<GroupElement> {
    let t = s.trim();
    let is_word = t
        .chars()
        .next()
        .is_some_and(|c| matches!(c, 's' | 't' | 'g' | 'e'))
        && !t.contains('=');
    if !is_word {
        return Ok(GroupElement::parse(family, t)?);
    }
    if t == "e" {
        return Ok(GroupElement::identity(family));
    }
    let word: Vec<Generator> = t
        .split(['*', '.', ' '])
        .filter(|x| !x.is_empty())
        .map(str::parse)
        .collect::<heckechar::Result<_>>()?;
    Ok(GroupElement::from_word(family, &word)?)
}

/// The element, and its parabolic type when it is a product of distinct
/// simple generators.
fn element(family: CoxFamily, a: &CharArgs) -> Res<(GroupElement, Option<BTreeSet<Generator>>)> {
    let w = match (&a.k, &a.w, a.len, a.start) {
        (Some(k), None, None, None) => {
            let k = parse_generator_set(k)?;
            for &s in &k {
                family.check_generator(s)?;
            }
            let w = parabolic_element(family, &k)?;
            return Ok((w, Some(k)));
        }
        (None, Some(w), None, None) => parse_element(family, w)?,
        (None, None, Some(len), Some(start)) => match family {
            CoxFamily::I(m) => GroupElement::dihedral(m, len, start)?,
            _ => return Err(usage("--len and --start are for type I")),
        },
        _ => return Err(usage("give exactly one of --K, --w or --len/--start")),
    };
    let support = w.support();
    let k = (support.len() == w.length()).then_some(support);
    Ok((w, k))
}

struct Value {
    value: LaurentHalf,
    route: &'static str,
}

fn oracle_value(
    subgroup: &Subgroup,
    base: BaseChar,
    w: &GroupElement,
    bounds: &Bounds,
) -> Res<LaurentHalf> {
    Ok(InductionOracle::new(subgroup, bounds)?.value(base, w))
}

fn induced_value(
    subgroup: &Subgroup,
    base: BaseChar,
    w: &GroupElement,
    k: Option<&BTreeSet<Generator>>,
    route: Route,
    bounds: &Bounds,
) -> Res<Value> {
    let family = subgroup.family();
    if route == Route::Oracle {
        return Ok(Value {
            value: oracle_value(subgroup, base, w, bounds)?,
            route: "induction oracle",
        });
    }
    let formula = match (family, subgroup.generators(), k) {
        (CoxFamily::I(m), Some(j), _) => Some((
            combi::char_i(m, combi::dihedral_c(j)?, base, w)?,
            "dihedral closed form",
        )),
        (_, Some(j), Some(k)) => Some((
            combi::induced_char_combi(family, j, k, base, bounds)?,
            "sequence formula",
        )),
        (CoxFamily::B(_), None, Some(k)) => Some((
            combi::char_b_quasi(subgroup.composition().expect("quasi"), k, base, bounds)?,
            "sequence formula (quasi-parabolic)",
        )),
        (CoxFamily::A(_), Some(_), None) => {
            let lambda = subgroup.composition().expect("type A");
            let v = extend_char_a(|p| combi::char_a(lambda, &p.support(), base, bounds), w)?;
            Some((v, "recurrence extension of the sequence formula"))
        }
        _ => None,
    };
    match (formula, route) {
        (Some((value, route)), _) => Ok(Value { value, route }),
        (None, Route::Formula) => Err(Failure::Lib(Error::Unsupported(format!(
            "no closed formula for {family} at the non-parabolic element {w}"
        )))),
        (None, _) => Ok(Value {
            value: oracle_value(subgroup, base, w, bounds)?,
            route: "induction oracle",
        }),
    }
}

fn irreducible_value(
    lambda: &Partition,
    family: CoxFamily,
    w: &GroupElement,
    k: Option<&BTreeSet<Generator>>,
    route: Route,
    bounds: &Bounds,
) -> Res<Value> {
    if route == Route::Oracle {
        // Sum over h_nu in s_lambda of the induced characters from the oracle.
        let mut value = LaurentHalf::zero();
        for (nu, coeff) in symfun::schur_in_h(lambda) {
            let comp = SignedComposition::new(nu.parts().iter().map(|&p| p as i32).collect())?;
            let h = Subgroup::from_composition(family, comp)?;
            value.add_scaled(
                &oracle_value(&h, BaseChar::Trivial, w, bounds)?,
                &coeff.into(),
            );
        }
        return Ok(Value {
            value,
            route: "inverse Kostka over the induction oracle",
        });
    }
    match k {
        Some(k) => {
            let mu: Vec<u32> = gens_to_comp(family, k)?
                .parts()
                .iter()
                .map(|&p| p as u32)
                .collect();
            Ok(Value {
                value: symfun::chi_a_bbst(lambda, &mu),
                route: "broken border strip tableaux",
            })
        }
        None => {
            let value = extend_char_a(
                |p| {
                    let mu: Vec<u32> = p.cycle_type().into_iter().map(|c| c as u32).collect();
                    Ok(symfun::chi_a_bbst(lambda, &mu))
                },
                w,
            )?;
            Ok(Value {
                value,
                route: "recurrence extension of the tableau sum",
            })
        }
    }
}

fn value_of(
    ch: &Character,
    family: CoxFamily,
    w: &GroupElement,
    k: Option<&BTreeSet<Generator>>,
    route: Route,
    bounds: &Bounds,
) -> Res<Value> {
    match ch {
        Character::Induced { subgroup, base } => {
            induced_value(subgroup, *base, w, k, route, bounds)
        }
        Character::Irreducible(lambda) => irreducible_value(lambda, family, w, k, route, bounds),
    }
}

fn sequence_table(
    ch: &Character,
    family: CoxFamily,
    k: &BTreeSet<Generator>,
    bounds: &Bounds,
) -> Res<String> {
    let Character::Induced { subgroup, base } = ch else {
        return Err(usage("--sequences applies to induced characters"));
    };
    let lambda = subgroup
        .composition()
        .ok_or_else(|| usage("--sequences applies to types A, B and D"))?;
    let seqs = match family {
        CoxFamily::A(_) => combi::sequences_a(lambda, k, bounds)?,
        CoxFamily::B(_) if subgroup.is_parabolic() => combi::sequences_b(lambda, k, bounds)?,
        CoxFamily::B(_) => combi::sequences_b_quasi(lambda, k, bounds)?,
        CoxFamily::D(_) => combi::sequences_d(lambda, k, D_E_READING, bounds)?,
        CoxFamily::I(_) => return Err(usage("--sequences applies to types A, B and D")),
    };
    Ok(combi::render_table(&seqs, k, *base))
}

pub fn char_cmd(a: &CharArgs, bounds: &Bounds) -> Res<String> {
    let family = family(&a.group)?;
    let ch = character(family, &a.group)?;
    let (w, k) = element(family, a)?;
    if a.sequences {
        if a.format != Format::Pretty {
            return Err(usage("--sequences prints a plain table"));
        }
        let k = k.ok_or_else(|| usage("--sequences needs a parabolic element"))?;
        return sequence_table(&ch, family, &k, bounds);
    }
    let v = value_of(&ch, family, &w, k.as_ref(), a.group.route, bounds)?;
    match a.format {
        Format::Pretty => {
            eprintln!("route: {}", v.route);
            Ok(format!("{}\n", v.value))
        }
        Format::Json => Ok(json(&CharDoc {
            family: family.to_string(),
            character: ch.label(),
            kind: ch.kind(),
            base: ch.base(),
            element: w.to_string(),
            route: v.route.to_string(),
            value: v.value,
        })),
        Format::Csv => Err(usage("csv output is available for tables")),
    }
}

pub fn table_cmd(a: &TableArgs, bounds: &Bounds) -> Res<String> {
    let g = &a.group;
    let family = family(g)?;
    let no_subgroup =
        g.lambda.is_none() && g.j.is_none() && g.c.is_none() && g.irreducible.is_none();
    let doc = if no_subgroup {
        let CoxFamily::A(n) = family else {
            return Err(usage(
                "give --lambda, --J or --c; the irreducible table is for type A",
            ));
        };
        bounds.check_degree("irreducible table", n)?;
        irreducible_table(family, n, g, bounds)?
    } else {
        let ch = character(family, g)?;
        let mut entries = Vec::new();
        let (column_header, columns): (&str, Vec<Column>) = match family {
            CoxFamily::I(_) => (
                "w",
                enumerate_group(family, bounds)?
                    .into_iter()
                    .map(|w| (w.to_string(), w, None))
                    .collect(),
            ),
            _ => (
                "K",
                generator_subsets(family)
                    .into_iter()
                    .map(|k| {
                        Ok((
                            format_generator_set(&k),
                            parabolic_element(family, &k)?,
                            Some(k),
                        ))
                    })
                    .collect::<heckechar::Result<_>>()?,
            ),
        };
        for (label, w, k) in columns {
            let v = value_of(&ch, family, &w, k.as_ref(), g.route, bounds)?;
            entries.push(TableEntry {
                row: ch.label(),
                column: label,
                value: v.value,
            });
        }
        TableDoc {
            family: family.to_string(),
            kind: ch.kind(),
            base: ch.base(),
            row_header: match ch {
                Character::Induced { .. } => "subgroup".into(),
                Character::Irreducible(_) => "lambda".into(),
            },
            column_header: column_header.into(),
            entries,
        }
    };
    Ok(match a.format {
        Format::Pretty => doc.pretty(),
        Format::Json => json(&doc),
        Format::Csv => doc.csv(),
    })
}

fn irreducible_table(family: CoxFamily, n: usize, g: &GroupArgs, bounds: &Bounds) -> Res<TableDoc> {
    let shapes = Partition::all(n);
    let mut entries = Vec::new();
    if g.route == Route::Oracle {
        for lambda in &shapes {
            for mu in &shapes {
                let k = comp_to_gens(
                    family,
                    &SignedComposition::new(mu.parts().iter().map(|&p| p as i32).collect())?,
                )?;
                let w = parabolic_element(family, &k)?;
                let v = irreducible_value(lambda, family, &w, Some(&k), Route::Oracle, bounds)?;
                entries.push(TableEntry {
                    row: lambda.to_string(),
                    column: mu.to_string(),
                    value: v.value,
                });
            }
        }
    } else {
        for (lambda, values) in symfun::irreducible_table(n) {
            for (mu, value) in shapes.iter().zip(values) {
                entries.push(TableEntry {
                    row: lambda.to_string(),
                    column: mu.to_string(),
                    value,
                });
            }
        }
    }
    Ok(TableDoc {
        family: family.to_string(),
        kind: CharKind::Irreducible,
        base: None,
        row_header: "lambda".into(),
        column_header: "mu".into(),
        entries,
    })
}

pub fn verify_cmd(a: &VerifyArgs, bounds: &Bounds) -> Res<String> {
    let reports: Vec<Report> = if a.suite.eq_ignore_ascii_case("all") {
        if a.n.is_some() || a.m.is_some() {
            return Err(usage("--suite all runs every suite at its default size"));
        }
        Suite::ALL
            .into_iter()
            .map(|s| run_suite(s, None, bounds))
            .collect::<heckechar::Result<_>>()?
    } else {
        let suite: Suite = a.suite.parse()?;
        let size = match (suite, a.n, a.m) {
            (_, Some(_), Some(_)) => return Err(usage("give --n or --m, not both")),
            (Suite::I, Some(_), None) => return Err(usage("suite I takes --m")),
            (Suite::I, None, m) => m,
            (_, None, Some(_)) => return Err(usage("only suite I takes --m")),
            (_, n, None) => n,
        };
        vec![run_suite(suite, size, bounds)?]
    };
    let out = match a.format {
        Format::Pretty => {
            let mut out = String::new();
            for r in &reports {
                match (r.suite, r.size) {
                    (Suite::Structural, _) | (_, None) => {
                        out.push_str(&format!("suite {}\n", r.suite))
                    }
                    (Suite::I, Some(m)) => out.push_str(&format!("suite I m={m}\n")),
                    (s, Some(n)) => out.push_str(&format!("suite {s} n={n}\n")),
                }
                out.push_str(&r.render());
            }
            out
        }
        Format::Json => json(&reports),
        Format::Csv => return Err(usage("csv output is available for tables")),
    };
    if reports.iter().all(Report::passed) {
        Ok(out)
    } else {
        Err(Failure::VerifyFailed(out))
    }
}

pub fn expand_cmd(a: &ExpandArgs, bounds: &Bounds) -> Res<String> {
    let mu: Partition = a.mu.parse()?;
    if a.r == 0 {
        return Err(Failure::Lib(Error::Invalid("r must be positive".into())));
    }
    bounds.check_degree("expansion degree", mu.size() + a.r)?;
    let terms = quantum_mn_step(&mu, a.r);
    match a.format {
        Format::Pretty => Ok(format!("{}\n", render_schur_expansion(&terms))),
        Format::Json => Ok(json(&ExpandDoc {
            mu: mu.to_string(),
            r: a.r,
            terms: terms
                .into_iter()
                .rev()
                .map(|(shape, coeff)| ExpandTerm {
                    shape: shape.to_string(),
                    coeff,
                })
                .collect(),
        })),
        Format::Csv => Err(usage("csv output is available for tables")),
    }
}
