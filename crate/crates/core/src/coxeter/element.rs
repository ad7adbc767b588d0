use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{next_permutation, CoxFamily, Generator};
use crate::bounds::Bounds;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
enum Body {
    /// One-line notation `w(1), ..., w(n)`.
    Perm(Vec<i8>),
    /// Alternating word of length `len` starting with generator `start`.
    Dihedral { len: u32, start: u8 },
}

/// An element of one of the supported Coxeter groups, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    family: CoxFamily,
    body: Body,
}

impl GroupElement {
    pub fn identity(family: CoxFamily) -> Self {
        let body = match family {
            CoxFamily::I(_) => Body::Dihedral { len: 0, start: 1 },
            _ => Body::Perm((1..=family.degree() as i8).collect()),
        };
        GroupElement { family, body }
    }

    /// Builds a type A/B/D element from its one-line notation.
    pub fn from_one_line(family: CoxFamily, values: &[i32]) -> Result<Self> {
        let n = family.degree();
        if matches!(family, CoxFamily::I(_)) {
            return Err(Error::Invalid(
                "dihedral elements have no one-line form".into(),
            ));
        }
        if values.len() != n {
            return Err(Error::Invalid(format!(
                "{family} needs {n} entries, got {}",
                values.len()
            )));
        }
        let mut seen = vec![false; n + 1];
        let mut negatives = 0;
        for &v in values {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::Invalid(format!("{values:?} is not a permutation")));
            }
            seen[a] = true;
            if v < 0 {
                negatives += 1;
            }
        }
        match family {
            CoxFamily::A(_) if negatives > 0 => {
                return Err(Error::Invalid("type A permutations have no signs".into()))
            }
            CoxFamily::D(_) if negatives % 2 == 1 => {
                return Err(Error::Invalid(
                    "type D elements need an even number of negative entries".into(),
                ))
            }
            _ => {}
        }
        Ok(GroupElement {
            family,
            body: Body::Perm(values.iter().map(|&v| v as i8).collect()),
        })
    }

    /// The dihedral element with reduced word `start, other, start, ...` of
    /// length `len`.
    pub fn dihedral(m: usize, len: u32, start: u8) -> Result<Self> {
        CoxFamily::I(m).validate()?;
        if len as usize > m || !(start == 1 || start == 2) {
            return Err(Error::Invalid(format!(
                "no element of length {len} starting with g{start} in I({m})"
            )));
        }
        Ok(Self::dihedral_canonical(m, len, start))
    }

    fn dihedral_canonical(m: usize, len: u32, start: u8) -> Self {
        let start = if len == 0 || len as usize == m {
            1
        } else {
            start
        };
        GroupElement {
            family: CoxFamily::I(m),
            body: Body::Dihedral { len, start },
        }
    }

    pub fn family(&self) -> CoxFamily {
        self.family
    }

    /// One-line notation for types A, B and D.
    pub fn one_line(&self) -> Option<Vec<i32>> {
        match &self.body {
            Body::Perm(p) => Some(p.iter().map(|&v| v as i32).collect()),
            Body::Dihedral { .. } => None,
        }
    }

    pub(crate) fn perm(&self) -> &[i8] {
        match &self.body {
            Body::Perm(p) => p,
            Body::Dihedral { .. } => &[],
        }
    }

    /// `(len, start)` for dihedral elements.
    pub fn dihedral_parts(&self) -> Option<(u32, u8)> {
        match self.body {
            Body::Dihedral { len, start } => Some((len, start)),
            Body::Perm(_) => None,
        }
    }

    /// `w(i)` for `1 <= |i| <= n`, using `w(-i) = -w(i)`.
    pub fn value(&self, i: i32) -> i32 {
        let p = self.perm();
        let v = p[i.unsigned_abs() as usize - 1] as i32;
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn is_identity(&self) -> bool {
        self.length() == 0
    }

    /// Coxeter length.
    pub fn length(&self) -> usize {
        match &self.body {
            Body::Dihedral { len, .. } => *len as usize,
            Body::Perm(p) => {
                let n = p.len();
                let mut len = 0;
                for i in 0..n {
                    if self.family == CoxFamily::B(n) && p[i] < 0 {
                        len += 1;
                    }
                    for j in i + 1..n {
                        let (a, b) = (p[i], p[j]);
                        if a.abs() > b.abs() {
                            len += 1;
                        }
                        if b < 0 && a.abs() < b.abs() {
                            len += 2;
                        }
                    }
                }
                len
            }
        }
    }

    /// `s * self`.
    pub fn left_mul_gen(&self, s: Generator) -> Result<Self> {
        self.family.check_generator(s)?;
        Ok(self.lmul(s))
    }

    /// `self * s`.
    pub fn right_mul_gen(&self, s: Generator) -> Result<Self> {
        self.family.check_generator(s)?;
        Ok(self.rmul(s))
    }

    /// Unchecked `s * self`; `s` must belong to the family.
    pub(crate) fn lmul(&self, s: Generator) -> Self {
        match &self.body {
            Body::Dihedral { len, start } => {
                let m = self.dihedral_m();
                let g = gen_index(s);
                let (len, start) = (*len, *start);
                let (l, st) = if len == 0 {
                    (1, g)
                } else if len as usize == m {
                    (len - 1, other(g))
                } else if g == start {
                    (len - 1, other(start))
                } else {
                    (len + 1, g)
                };
                Self::dihedral_canonical(m, l, st)
            }
            Body::Perm(p) => {
                let mut p = p.clone();
                let signed_map = |v: i8, f: &dyn Fn(i8) -> i8| {
                    if v < 0 {
                        -f(-v)
                    } else {
                        f(v)
                    }
                };
                match (self.family, s) {
                    (_, Generator::S(i)) => {
                        let i = i as i8;
                        let f = |a: i8| {
                            if a == i {
                                i + 1
                            } else if a == i + 1 {
                                i
                            } else {
                                a
                            }
                        };
                        for v in p.iter_mut() {
                            *v = signed_map(*v, &f);
                        }
                    }
                    (CoxFamily::B(_), Generator::T) => {
                        for v in p.iter_mut() {
                            if v.abs() == 1 {
                                *v = -*v;
                            }
                        }
                    }
                    (CoxFamily::D(_), Generator::T) => {
                        // t = (1, -2): 1 -> -2 and 2 -> -1.
                        for v in p.iter_mut() {
                            *v = match *v {
                                1 => -2,
                                2 => -1,
                                -1 => 2,
                                -2 => 1,
                                a => a,
                            };
                        }
                    }
                    _ => unreachable!("generator {s} not in {}", self.family),
                }
                GroupElement {
                    family: self.family,
                    body: Body::Perm(p),
                }
            }
        }
    }

    /// Unchecked `self * s`; `s` must belong to the family.
    pub(crate) fn rmul(&self, s: Generator) -> Self {
        match &self.body {
            Body::Dihedral { len, start } => {
                let m = self.dihedral_m();
                let g = gen_index(s);
                let (len, start) = (*len, *start);
                let last = if len % 2 == 1 { start } else { other(start) };
                let (l, st) = if len == 0 {
                    (1, g)
                } else if len as usize == m {
                    let st = if m % 2 == 1 { g } else { other(g) };
                    (len - 1, st)
                } else if g == last {
                    (len - 1, start)
                } else {
                    (len + 1, start)
                };
                Self::dihedral_canonical(m, l, st)
            }
            Body::Perm(p) => {
                let mut p = p.clone();
                match (self.family, s) {
                    (_, Generator::S(i)) => p.swap(i - 1, i),
                    (CoxFamily::B(_), Generator::T) => p[0] = -p[0],
                    (CoxFamily::D(_), Generator::T) => {
                        let (a, b) = (p[0], p[1]);
                        p[0] = -b;
                        p[1] = -a;
                    }
                    _ => unreachable!("generator {s} not in {}", self.family),
                }
                GroupElement {
                    family: self.family,
                    body: Body::Perm(p),
                }
            }
        }
    }

    fn dihedral_m(&self) -> usize {
        match self.family {
            CoxFamily::I(m) => m,
            _ => 0,
        }
    }

    /// The group product `self * other`.
    pub fn multiply(&self, other: &GroupElement) -> Result<Self> {
        self.family.same_as(other.family)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &GroupElement) -> Self {
        match (&self.body, &other.body) {
            (Body::Perm(w), Body::Perm(v)) => {
                let p = v
                    .iter()
                    .map(|&x| {
                        let y = w[x.unsigned_abs() as usize - 1];
                        if x < 0 {
                            -y
                        } else {
                            y
                        }
                    })
                    .collect();
                GroupElement {
                    family: self.family,
                    body: Body::Perm(p),
                }
            }
            _ => other
                .reduced_word()
                .into_iter()
                .fold(self.clone(), |acc, s| acc.rmul(s)),
        }
    }

    pub fn inverse(&self) -> Self {
        match &self.body {
            Body::Perm(p) => {
                let mut inv = vec![0i8; p.len()];
                for (i, &v) in p.iter().enumerate() {
                    let pos = i as i8 + 1;
                    inv[v.unsigned_abs() as usize - 1] = if v < 0 { -pos } else { pos };
                }
                GroupElement {
                    family: self.family,
                    body: Body::Perm(inv),
                }
            }
            Body::Dihedral { len, start } => {
                let last = if len % 2 == 1 { *start } else { other(*start) };
                Self::dihedral_canonical(self.dihedral_m(), *len, last)
            }
        }
    }

    pub fn is_left_descent(&self, s: Generator) -> bool {
        self.family.has_generator(s) && self.lmul(s).length() < self.length()
    }

    pub fn is_right_descent(&self, s: Generator) -> bool {
        self.family.has_generator(s) && self.rmul(s).length() < self.length()
    }

    /// Reduced word obtained by repeatedly peeling the smallest left
    /// descent.
    pub fn reduced_word(&self) -> Vec<Generator> {
        if let Body::Dihedral { len, start } = self.body {
            let mut g = start;
            return (0..len)
                .map(|_| {
                    let s = if g == 1 { Generator::G1 } else { Generator::G2 };
                    g = other(g);
                    s
                })
                .collect();
        }
        let gens = self.family.generators();
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        let mut len = w.length();
        while len > 0 {
            let (s, next) = gens
                .iter()
                .find_map(|&s| {
                    let next = w.lmul(s);
                    (next.length() < len).then_some((s, next))
                })
                .expect("nonidentity element has a left descent");
            word.push(s);
            w = next;
            len -= 1;
        }
        word
    }

    /// Product of a word of generators.
    pub fn from_word(family: CoxFamily, word: &[Generator]) -> Result<Self> {
        word.iter()
            .try_fold(Self::identity(family), |w, &s| w.right_mul_gen(s))
    }

    /// Generators occurring in a reduced word (the same for every reduced
    /// word).
    pub fn support(&self) -> BTreeSet<Generator> {
        self.reduced_word().into_iter().collect()
    }

    /// Cycle type of a type A permutation, as a weakly decreasing list.
    pub fn cycle_type(&self) -> Vec<usize> {
        let p = self.perm();
        let mut seen = vec![false; p.len()];
        let mut cycles = Vec::new();
        for i in 0..p.len() {
            if seen[i] {
                continue;
            }
            let mut len = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = p[j].unsigned_abs() as usize - 1;
                len += 1;
            }
            cycles.push(len);
        }
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        cycles
    }

    /// Signed cycle notation such as `(1,2)^-(3,4)(5)`. Each cycle lists
    /// `a, w(a), w(w(a)), ...` with signs; a trailing `^-` marks a cycle
    /// that returns to `-a`. Fixed points are written as 1-cycles.
    pub fn to_cycle_string(&self) -> String {
        let n = self.perm().len();
        let mut seen = vec![false; n + 1];
        let mut out = String::new();
        for a in 1..=n as i32 {
            if seen[a as usize] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = a;
            let negative = loop {
                seen[cur.unsigned_abs() as usize] = true;
                cycle.push(cur.to_string());
                let next = self.value(cur);
                if next.abs() == a {
                    break next < 0;
                }
                cur = next;
            };
            out.push('(');
            out.push_str(&cycle.join(","));
            out.push(')');
            if negative {
                out.push_str("^-");
            }
        }
        out
    }

    /// Parses signed cycle notation as produced by
    /// [`to_cycle_string`](Self::to_cycle_string). Missing points are fixed.
    pub fn from_cycle_string(family: CoxFamily, s: &str) -> Result<Self> {
        let n = family.degree() as i32;
        let bad = || Error::Parse(format!("invalid cycle notation {s:?}"));
        let mut p: Vec<i32> = (1..=n).collect();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let inner = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = inner.find(')').ok_or_else(bad)?;
            let body = &inner[..close];
            rest = &inner[close + 1..];
            let negative = if let Some(r) = rest.strip_prefix("^-") {
                rest = r;
                true
            } else {
                false
            };
            let pts: Vec<i32> = body
                .split(',')
                .map(|x| x.trim().parse::<i32>().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            if pts.iter().any(|&x| x == 0 || x.abs() > n) {
                return Err(bad());
            }
            for (k, &c) in pts.iter().enumerate() {
                let target = match pts.get(k + 1) {
                    Some(&d) => d,
                    None if negative => -pts[0],
                    None => pts[0],
                };
                p[c.unsigned_abs() as usize - 1] = c.signum() * target;
            }
            rest = rest.trim_start();
        }
        Self::from_one_line(family, &p)
    }

    /// Parses the text formats `214356`, `2,-1,4,3,5`, cycle notation
    /// starting with `(`, and `I:m=14,len=9,start=1` (or just
    /// `len=9,start=1`) for dihedral groups.
    pub fn parse(family: CoxFamily, s: &str) -> Result<Self> {
        let s = s.trim();
        if let CoxFamily::I(m) = family {
            let body = s.strip_prefix("I:").unwrap_or(s);
            let (mut len, mut start, mut mm) = (None, None, None);
            for kv in body.split(',') {
                let (k, v) = kv
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("invalid dihedral element {s:?}")))?;
                let v: u32 = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid number in {s:?}")))?;
                match k.trim() {
                    "m" => mm = Some(v as usize),
                    "len" => len = Some(v),
                    "start" => start = Some(v as u8),
                    _ => return Err(Error::Parse(format!("unknown key in {s:?}"))),
                }
            }
            if mm.is_some_and(|mm| mm != m) {
                return Err(Error::FamilyMismatch(
                    format!("I({})", mm.unwrap_or(0)),
                    family.to_string(),
                ));
            }
            let len = len.ok_or_else(|| Error::Parse(format!("missing len in {s:?}")))?;
            return Self::dihedral(m, len, start.unwrap_or(1));
        }
        if s.starts_with('(') {
            return Self::from_cycle_string(family, s);
        }
        let values: Vec<i32> = if s.contains(',') || s.contains(' ') {
            s.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| t.trim().parse::<i32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse(format!("invalid one-line notation {s:?}")))?
        } else if family.degree() <= 9 && s.chars().all(|c| c.is_ascii_digit()) {
            s.chars().map(|c| c as i32 - '0' as i32).collect()
        } else {
            s.parse::<i32>()
                .map(|v| vec![v])
                .map_err(|_| Error::Parse(format!("invalid one-line notation {s:?}")))?
        };
        Self::from_one_line(family, &values)
    }
}

fn gen_index(s: Generator) -> u8 {
    match s {
        Generator::G1 => 1,
        Generator::G2 => 2,
        _ => unreachable!("{s} is not a dihedral generator"),
    }
}

fn other(g: u8) -> u8 {
    3 - g
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.body, self.family) {
            (Body::Dihedral { len, start }, CoxFamily::I(m)) => {
                write!(f, "I:m={m},len={len},start={start}")
            }
            (Body::Perm(p), CoxFamily::A(n)) if n <= 9 => {
                for v in p {
                    write!(f, "{v}")?;
                }
                Ok(())
            }
            (Body::Perm(p), _) => {
                let parts: Vec<String> = p.iter().map(|v| v.to_string()).collect();
                write!(f, "{}", parts.join(","))
            }
            _ => unreachable!(),
        }
    }
}

/// The product of the generators in `k`, taken in canonical order.
pub fn parabolic_element(family: CoxFamily, k: &BTreeSet<Generator>) -> Result<GroupElement> {
    let mut w = GroupElement::identity(family);
    for &s in k {
        w = w.right_mul_gen(s)?;
    }
    Ok(w)
}

/// Every element of the group, each exactly once.
pub fn enumerate_group(family: CoxFamily, bounds: &Bounds) -> Result<Vec<GroupElement>> {
    bounds.check_group(&format!("group {family}"), family.order())?;
    if let CoxFamily::I(m) = family {
        let mut out = vec![GroupElement::identity(family)];
        for len in 1..m as u32 {
            out.push(GroupElement::dihedral_canonical(m, len, 1));
            out.push(GroupElement::dihedral_canonical(m, len, 2));
        }
        out.push(GroupElement::dihedral_canonical(m, m as u32, 1));
        return Ok(out);
    }
    let n = family.degree();
    let mut perm: Vec<i8> = (1..=n as i8).collect();
    let mut out = Vec::with_capacity(family.order() as usize);
    loop {
        match family {
            CoxFamily::A(_) => out.push(GroupElement {
                family,
                body: Body::Perm(perm.clone()),
            }),
            _ => {
                for mask in 0u64..(1u64 << n) {
                    if family == CoxFamily::D(n) && mask.count_ones() % 2 == 1 {
                        continue;
                    }
                    let p = perm
                        .iter()
                        .enumerate()
                        .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                        .collect();
                    out.push(GroupElement {
                        family,
                        body: Body::Perm(p),
                    });
                }
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::collections::{HashMap, VecDeque};

    use super::*;
    use crate::coxeter::parse_generator_set;
    use proptest::prelude::*;

    fn el(family: CoxFamily, s: &str) -> GroupElement {
        GroupElement::parse(family, s).unwrap()
    }

    /// Lengths by breadth-first search in the Cayley graph.
    fn bfs_lengths(family: CoxFamily) -> HashMap<GroupElement, usize> {
        let mut dist = HashMap::new();
        let e = GroupElement::identity(family);
        dist.insert(e.clone(), 0);
        let mut queue = VecDeque::from([e]);
        while let Some(w) = queue.pop_front() {
            let d = dist[&w];
            for s in family.generators() {
                let v = w.lmul(s);
                if !dist.contains_key(&v) {
                    dist.insert(v.clone(), d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Standard inversion-count formulas for B and D.
    fn inversion_length(w: &GroupElement) -> usize {
        let p = w.one_line().unwrap();
        let n = p.len();
        let mut inv = 0;
        let mut neg_sums = 0;
        for i in 0..n {
            for j in i + 1..n {
                if p[i] > p[j] {
                    inv += 1;
                }
                if p[i] + p[j] < 0 {
                    neg_sums += 1;
                }
            }
        }
        let negs = p.iter().filter(|&&v| v < 0).count();
        match w.family() {
            CoxFamily::A(_) => inv,
            CoxFamily::B(_) => inv + neg_sums + negs,
            _ => inv + neg_sums,
        }
    }

    #[test]
    fn golden_lengths() {
        assert_eq!(el(CoxFamily::A(6), "214356").length(), 2);
        assert_eq!(el(CoxFamily::B(5), "2,-1,4,3,5").length(), 3);
        assert_eq!(el(CoxFamily::D(5), "-1,-2,4,3,5").length(), 3);
    }

    #[test]
    fn generator_actions() {
        let a3 = CoxFamily::A(3);
        let e = GroupElement::identity(a3);
        assert_eq!(e.left_mul_gen(Generator::S(1)).unwrap(), el(a3, "213"));
        let b2 = GroupElement::identity(CoxFamily::B(2));
        assert_eq!(b2.left_mul_gen(Generator::T).unwrap().to_string(), "-1,2");
        let d2 = GroupElement::identity(CoxFamily::D(2));
        assert_eq!(d2.left_mul_gen(Generator::T).unwrap().to_string(), "-2,-1");
        assert!(e.left_mul_gen(Generator::S(3)).is_err());
        assert!(e.left_mul_gen(Generator::T).is_err());
    }

    #[test]
    fn products() {
        let b5 = CoxFamily::B(5);
        let t = GroupElement::from_word(b5, &[Generator::T]).unwrap();
        let s1 = GroupElement::from_word(b5, &[Generator::S(1)]).unwrap();
        let s3 = GroupElement::from_word(b5, &[Generator::S(3)]).unwrap();
        let ts1 = t.multiply(&s1).unwrap();
        assert_eq!(ts1.to_string(), "2,-1,3,4,5");
        assert_eq!(ts1.multiply(&s3).unwrap().to_string(), "2,-1,4,3,5");
        assert!(s1.multiply(&s1).unwrap().is_identity());
        let w = el(b5, "2,-1,4,3,5");
        assert_eq!(w.multiply(&GroupElement::identity(b5)).unwrap(), w);
        assert!(w
            .multiply(&GroupElement::identity(CoxFamily::B(4)))
            .is_err());
    }

    #[test]
    fn parabolic_goldens() {
        let k = parse_generator_set("s1,s3").unwrap();
        assert_eq!(
            parabolic_element(CoxFamily::A(6), &k).unwrap().to_string(),
            "214356"
        );
        let k = parse_generator_set("t,s1,s3").unwrap();
        assert_eq!(
            parabolic_element(CoxFamily::B(5), &k).unwrap().to_string(),
            "2,-1,4,3,5"
        );
        assert_eq!(
            parabolic_element(CoxFamily::D(5), &k).unwrap().to_string(),
            "-1,-2,4,3,5"
        );
    }

    #[test]
    fn reduced_words() {
        let a6 = CoxFamily::A(6);
        assert!(GroupElement::identity(a6).reduced_word().is_empty());
        assert_eq!(
            el(a6, "214356").reduced_word(),
            vec![Generator::S(1), Generator::S(3)]
        );
        let w = GroupElement::dihedral(5, 3, 2).unwrap();
        assert_eq!(
            w.reduced_word(),
            vec![Generator::G2, Generator::G1, Generator::G2]
        );
    }

    #[test]
    fn descents() {
        let a6 = CoxFamily::A(6);
        assert!(el(a6, "214356").is_left_descent(Generator::S(1)));
        assert!(!el(a6, "214356").is_left_descent(Generator::S(2)));
        assert!(el(CoxFamily::B(2), "-1,2").is_left_descent(Generator::T));
    }

    #[test]
    fn group_sizes() {
        let b = Bounds::default();
        assert_eq!(enumerate_group(CoxFamily::A(3), &b).unwrap().len(), 6);
        assert_eq!(enumerate_group(CoxFamily::B(2), &b).unwrap().len(), 8);
        assert_eq!(enumerate_group(CoxFamily::D(2), &b).unwrap().len(), 4);
        assert_eq!(enumerate_group(CoxFamily::I(5), &b).unwrap().len(), 10);
        assert!(matches!(
            enumerate_group(CoxFamily::A(9), &b),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn lengths_match_bfs_and_inversions() {
        let bounds = Bounds::default();
        for family in [
            CoxFamily::A(4),
            CoxFamily::B(3),
            CoxFamily::D(2),
            CoxFamily::D(4),
            CoxFamily::I(3),
            CoxFamily::I(6),
        ] {
            let dist = bfs_lengths(family);
            let all = enumerate_group(family, &bounds).unwrap();
            assert_eq!(dist.len(), all.len(), "{family}");
            for w in &all {
                assert_eq!(w.length(), dist[w], "{family} {w}");
                if !matches!(family, CoxFamily::I(_)) {
                    assert_eq!(w.length(), inversion_length(w), "{family} {w}");
                }
            }
        }
    }

    #[test]
    fn reduced_word_products_and_lengths() {
        let bounds = Bounds::default();
        for family in [
            CoxFamily::A(5),
            CoxFamily::B(4),
            CoxFamily::D(4),
            CoxFamily::I(7),
        ] {
            for w in enumerate_group(family, &bounds).unwrap() {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                assert_eq!(GroupElement::from_word(family, &word).unwrap(), w);
                assert_eq!(
                    w.multiply(&w.inverse()).unwrap(),
                    GroupElement::identity(family)
                );
                assert_eq!(w.inverse().length(), w.length());
            }
        }
    }

    #[test]
    fn dihedral_products_match_matrices() {
        // Realise I2(m) as symmetries of the regular m-gon: rotations r^k
        // and reflections.
        let m = 7usize;
        let to_pair = |w: &GroupElement| -> (usize, bool) {
            // g1 = reflection f, g2 = f r; product composes as dihedral maps.
            let mut state = (0usize, false);
            for s in w.reduced_word() {
                let g = match s {
                    Generator::G1 => (0, true),
                    _ => (1, true),
                };
                // (k1, f1) then (k2, f2): x -> r^k1 f1 (r^k2 f2 x)
                let (k1, f1) = state;
                let (k2, f2) = g;
                let k = if f1 { (k1 + m - k2) % m } else { (k1 + k2) % m };
                state = (k, f1 ^ f2);
            }
            state
        };
        let all = enumerate_group(CoxFamily::I(m), &Bounds::default()).unwrap();
        let images: BTreeSet<_> = all.iter().map(to_pair).collect();
        assert_eq!(images.len(), 2 * m);
        for w in &all {
            for v in &all {
                let wv = w.multiply(v).unwrap();
                let (k1, f1) = to_pair(w);
                let (k2, f2) = to_pair(v);
                let k = if f1 { (k1 + m - k2) % m } else { (k1 + k2) % m };
                assert_eq!(to_pair(&wv), (k, f1 ^ f2));
            }
        }
    }

    #[test]
    fn d_type_parity_is_preserved() {
        let family = CoxFamily::D(5);
        let mut w = GroupElement::identity(family);
        for s in [
            Generator::T,
            Generator::S(1),
            Generator::T,
            Generator::S(3),
            Generator::T,
        ] {
            w = w.lmul(s);
            let negs = w.one_line().unwrap().iter().filter(|&&v| v < 0).count();
            assert_eq!(negs % 2, 0);
        }
        assert!(GroupElement::from_one_line(family, &[-1, 2, 3, 4, 5]).is_err());
    }

    #[test]
    fn text_formats() {
        let b5 = CoxFamily::B(5);
        let w = el(b5, "2,-1,4,3,5");
        assert_eq!(GroupElement::parse(b5, &w.to_string()).unwrap(), w);
        assert_eq!(w.to_cycle_string(), "(1,2)^-(3,4)(5)");
        assert_eq!(GroupElement::parse(b5, "(1,2)^-(3,4)").unwrap(), w);
        let d = el(CoxFamily::I(14), "I:m=14,len=9,start=1");
        assert_eq!(d.to_string(), "I:m=14,len=9,start=1");
        assert_eq!(
            el(CoxFamily::I(14), "len=14,start=2").to_string(),
            "I:m=14,len=14,start=1"
        );
        assert!(GroupElement::parse(CoxFamily::I(14), "I:m=5,len=1").is_err());
        assert!(GroupElement::parse(CoxFamily::A(3), "124").is_err());
        assert_eq!(el(CoxFamily::A(3), "231").cycle_type(), vec![3]);
    }

    fn arb_perm(n: usize, signed: bool) -> impl Strategy<Value = Vec<i32>> {
        (
            Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(),
            proptest::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(p, signs)| {
                p.into_iter()
                    .zip(signs)
                    .map(|(v, s)| if signed && s { -v } else { v })
                    .collect()
            })
    }

    proptest! {
        #[test]
        fn length_is_subadditive_with_parity(a in arb_perm(6, true), b in arb_perm(6, true)) {
            let family = CoxFamily::B(6);
            let w = GroupElement::from_one_line(family, &a).unwrap();
            let v = GroupElement::from_one_line(family, &b).unwrap();
            let wv = w.multiply(&v).unwrap();
            prop_assert!(wv.length() <= w.length() + v.length());
            prop_assert_eq!((wv.length() + w.length() + v.length()) % 2, 0);
        }

        #[test]
        fn multiplication_is_associative(a in arb_perm(5, false), b in arb_perm(5, false), c in arb_perm(5, false)) {
            let family = CoxFamily::A(5);
            let [x, y, z] = [a, b, c].map(|p| GroupElement::from_one_line(family, &p).unwrap());
            prop_assert_eq!(
                x.multiply(&y).unwrap().multiply(&z).unwrap(),
                x.multiply(&y.multiply(&z).unwrap()).unwrap()
            );
        }

        #[test]
        fn cycle_notation_round_trips(a in arb_perm(7, true)) {
            let family = CoxFamily::B(7);
            let w = GroupElement::from_one_line(family, &a).unwrap();
            prop_assert_eq!(GroupElement::from_cycle_string(family, &w.to_cycle_string()).unwrap(), w);
        }
    }
}
