//! Integer polynomials in segment variables `z[a,b]`, ladder determinants, and
//! the unimodularity check for RSK-standard classes.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::segment::{Ladder, Multisegment, Segment};
use crate::socle::rsk_standard_factors;

/// Sparse polynomial; a monomial is a genuine multisegment, the unit is `0`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RingElement {
    terms: BTreeMap<Multisegment, BigInt>,
}

impl RingElement {
    pub fn zero() -> RingElement {
        RingElement::default()
    }

    pub fn one() -> RingElement {
        RingElement::monomial(Multisegment::zero(), BigInt::one())
    }

    pub fn var(s: Segment) -> RingElement {
        assert!(s.is_genuine(), "ring variables are genuine segments");
        RingElement::monomial(Multisegment::new([s]), BigInt::one())
    }

    pub fn monomial(m: Multisegment, c: BigInt) -> RingElement {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        RingElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Multisegment, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, m: &Multisegment) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, m: Multisegment, c: BigInt) {
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None if !c.is_zero() => {
                self.terms.insert(m, c);
            }
            None => {}
        }
    }

    /// Total length of each monomial, if they all agree.
    pub fn degree(&self) -> Option<u64> {
        let mut it = self.terms.keys().map(Multisegment::size);
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }
}

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        let mut out = RingElement::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.sum(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Highest monomials first, matching the canonical segment order.
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = m.iter().map(|s| format!("z{s}")).collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Matrix entry `[a, b]`: a variable, the unit when `b = a - 1`, zero below that.
fn entry(a: i32, b: i32) -> Option<RingElement> {
    match b - a {
        d if d >= 0 => Some(RingElement::var(Segment::raw(a, b))),
        -1 => Some(RingElement::one()),
        _ => None,
    }
}

/// `det([a_i, b_j])` for a genuine ladder `[a_1,b_1] ≫ … ≫ [a_k,b_k]`.
pub fn ladder_class(l: &Ladder) -> Result<RingElement> {
    if !l.is_genuine() {
        return Err(Error::Enhanced("ladder_class"));
    }
    let segs = l.segments();
    let k = segs.len();
    // Expansion row by row, memoized on the set of columns already used.
    fn expand(row: usize, used: u32, segs: &[Segment], memo: &mut HashMap<u32, RingElement>) -> RingElement {
        if row == segs.len() {
            return RingElement::one();
        }
        if let Some(r) = memo.get(&used) {
            return r.clone();
        }
        let mut acc = RingElement::zero();
        let mut free_before = 0;
        for j in 0..segs.len() {
            if used & (1 << j) != 0 {
                continue;
            }
            if let Some(x) = entry(segs[row].b(), segs[j].e()) {
                let rest = expand(row + 1, used | (1 << j), segs, memo);
                let term = &x * &rest;
                acc = if free_before % 2 == 0 { &acc + &term } else { &acc + &-&term };
            }
            free_before += 1;
        }
        memo.insert(used, acc.clone());
        acc
    }
    if k > 31 {
        return Err(Error::Domain("ladder too long for determinant expansion".into()));
    }
    Ok(expand(0, 0, segs, &mut HashMap::new()))
}

/// `[Λ_∂(m)]`, the product of the ladder classes along `RSK(m + ∂)`.
pub fn rsk_standard_class(m: &Multisegment, dummies: &Multisegment) -> Result<RingElement> {
    let mut acc = RingElement::one();
    for l in rsk_standard_factors(m, dummies)? {
        acc = &acc * &ladder_class(&l)?;
    }
    Ok(acc)
}

/// Content of a homogeneous piece: the multisets of begin and end points.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct Grade {
    pub begins: Vec<i32>,
    pub ends: Vec<i32>,
}

impl Grade {
    pub fn new(mut begins: Vec<i32>, mut ends: Vec<i32>) -> Result<Grade> {
        if begins.len() != ends.len() {
            return Err(Error::Domain(format!("{} begins but {} ends", begins.len(), ends.len())));
        }
        begins.sort_unstable();
        ends.sort_unstable();
        Ok(Grade { begins, ends })
    }

    pub fn of(m: &Multisegment) -> Grade {
        Grade::new(m.iter().map(Segment::b).collect(), m.iter().map(Segment::e).collect()).expect("same count")
    }

    pub fn len(&self) -> usize {
        self.begins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.begins.is_empty()
    }

    /// Every genuine multisegment with this content, in canonical string order.
    pub fn multisegments(&self) -> Vec<Multisegment> {
        let mut bs: Vec<(i32, usize)> = Vec::new();
        for &b in &self.begins {
            match bs.last_mut() {
                Some((v, c)) if *v == b => *c += 1,
                _ => bs.push((b, 1)),
            }
        }
        let mut es: Vec<(i32, usize)> = Vec::new();
        for &e in &self.ends {
            match es.last_mut() {
                Some((v, c)) if *v == e => *c += 1,
                _ => es.push((e, 1)),
            }
        }
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(&bs, 0, 0, &mut es, &mut cur, &mut out);
        out.sort_by_cached_key(|m| m.to_string());
        out
    }
}

// Distributes the copies of begin point `bs[i]` over the remaining end points.
fn fill(
    bs: &[(i32, usize)],
    i: usize,
    j: usize,
    es: &mut Vec<(i32, usize)>,
    cur: &mut Vec<Segment>,
    out: &mut Vec<Multisegment>,
) {
    if i == bs.len() {
        out.push(Multisegment::new(cur.iter().copied()));
        return;
    }
    let placed = cur.iter().filter(|s| s.b() == bs[i].0).count();
    let left = bs[i].1 - placed;
    if left == 0 {
        fill(bs, i + 1, 0, es, cur, out);
        return;
    }
    if j == es.len() {
        return;
    }
    let (e, avail) = es[j];
    let max = if e >= bs[i].0 { avail.min(left) } else { 0 };
    for take in (0..=max).rev() {
        es[j].1 -= take;
        cur.extend(std::iter::repeat_n(Segment::raw(bs[i].0, e), take));
        fill(bs, i, j + 1, es, cur, out);
        cur.truncate(cur.len() - take);
        es[j].1 += take;
    }
}

impl std::str::FromStr for Grade {
    type Err = Error;
    /// `1,1,2/2,3,3`: begin points, a slash, end points.
    fn from_str(s: &str) -> Result<Grade> {
        let (b, e) = s.split_once('/').ok_or_else(|| Error::Parse { pos: 0, msg: "grade needs begins/ends".into() })?;
        Grade::new(parse_points(b)?, parse_points(e)?)
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[i32]| v.iter().map(i32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{}/{}", j(&self.begins), j(&self.ends))
    }
}

/// Comma-separated integers; the empty string is the empty list.
pub fn parse_points(s: &str) -> Result<Vec<i32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let mut pos = 0;
    let mut out = Vec::new();
    for part in s.split(',') {
        let v = part.trim().parse::<i32>().map_err(|_| Error::Parse { pos, msg: format!("bad integer {part:?}") })?;
        out.push(v);
        pos += part.len() + 1;
    }
    Ok(out)
}

/// Fraction-free Gaussian elimination.
pub fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

#[derive(Clone, Debug, Serialize)]
pub struct DrsReport {
    pub begins: Vec<i32>,
    pub ends: Vec<i32>,
    pub grade: String,
    pub saturated: bool,
    /// Row and column labels, in the same order.
    pub basis: Vec<String>,
    pub matrix: Vec<Vec<String>>,
    pub determinant: String,
    pub unimodular: bool,
    /// Terms whose content leaves the grade (only possible off the saturated case).
    pub stray_terms: usize,
}

pub fn is_saturated(a: &[i32], b: &[i32]) -> bool {
    a.iter().all(|&x| b.iter().all(|&y| x <= y))
}

/// Expands `[Λ(m)]` for every `m` of the grade with begins in `a` and ends in
/// `b` and takes the determinant of the transition matrix to monomials.
/// Off the saturated case this errors unless `report_only` is set.
pub fn drs_basis_check(a: &[i32], b: &[i32], grade: &Grade, report_only: bool) -> Result<DrsReport> {
    let saturated = is_saturated(a, b);
    if !saturated && !report_only {
        return Err(Error::Domain("the begin and end sets are not saturated (need a <= b throughout)".into()));
    }
    if let Some(x) = grade.begins.iter().find(|x| !a.contains(x)) {
        return Err(Error::Domain(format!("begin point {x} is outside the begin set")));
    }
    if let Some(x) = grade.ends.iter().find(|x| !b.contains(x)) {
        return Err(Error::Domain(format!("end point {x} is outside the end set")));
    }
    let basis = grade.multisegments();
    let index: HashMap<&Multisegment, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut stray = 0;
    let mut matrix = Vec::with_capacity(basis.len());
    for m in &basis {
        let mut row = vec![BigInt::zero(); basis.len()];
        if !m.is_zero() {
            for (mono, c) in rsk_standard_class(m, &Multisegment::zero())?.terms() {
                match index.get(mono) {
                    Some(&j) => row[j] = c.clone(),
                    None => stray += 1,
                }
            }
        } else {
            row[0] = BigInt::one();
        }
        matrix.push(row);
    }
    let det = bareiss_determinant(matrix.clone());
    Ok(DrsReport {
        begins: a.to_vec(),
        ends: b.to_vec(),
        grade: grade.to_string(),
        saturated,
        basis: basis.iter().map(|m| m.to_string()).collect(),
        matrix: matrix.iter().map(|r| r.iter().map(BigInt::to_string).collect()).collect(),
        unimodular: det.abs().is_one(),
        determinant: det.to_string(),
        stray_terms: stray,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::segment::seg;

    fn lad(s: &str) -> Ladder {
        s.parse().unwrap()
    }

    fn z(b: i32, e: i32) -> RingElement {
        RingElement::var(seg(b, e))
    }

    #[test]
    fn ladder_determinants() {
        assert_eq!(ladder_class(&lad("[3,5]")).unwrap(), z(3, 5));
        let two = &(&z(2, 3) * &z(1, 2)) + &-&(&z(2, 2) * &z(1, 3));
        assert_eq!(ladder_class(&lad("[2,3]+[1,2]")).unwrap(), two);
        let unit = &(&z(1, 1) * &z(0, 0)) + &-&z(0, 1);
        assert_eq!(ladder_class(&lad("[1,1]+[0,0]")).unwrap(), unit);
        // [2,2]+[0,0]: the off-diagonal [2,0] vanishes.
        assert_eq!(ladder_class(&lad("[2,2]+[0,0]")).unwrap(), &z(2, 2) * &z(0, 0));
        let three = ladder_class(&lad("[3,4]+[2,3]+[1,2]")).unwrap();
        assert_eq!(three.coefficient(&"[3,4]+[2,3]+[1,2]".parse().unwrap()), BigInt::one());
        assert_eq!(three.degree(), Some(6));
        assert_eq!(three.terms().len(), 6);
    }

    #[test]
    fn standard_class() {
        let m: Multisegment = "[1,3]+[2,2]".parse().unwrap();
        let want = &ladder_class(&lad("[1,2]")).unwrap() * &ladder_class(&lad("[2,3]")).unwrap();
        assert_eq!(rsk_standard_class(&m, &Multisegment::zero()).unwrap(), want);
        assert_eq!(want.to_string(), "z[2,3]*z[1,2]");
    }

    #[test]
    fn grades() {
        let g: Grade = "1,2/2,3".parse().unwrap();
        let ms: Vec<String> = g.multisegments().iter().map(|m| m.to_string()).collect();
        assert_eq!(ms, vec!["[2,2]+[1,3]", "[2,3]+[1,2]"]);
        let g: Grade = "/".parse().unwrap();
        assert_eq!(g.multisegments(), vec![Multisegment::zero()]);
        assert!("1,2/3".parse::<Grade>().is_err());
        assert!("1,x/2".parse::<Grade>().unwrap_err().to_string().contains("bad integer"));
    }

    #[test]
    fn bareiss() {
        let m = |v: Vec<Vec<i64>>| v.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
        assert_eq!(bareiss_determinant(m(vec![vec![0, 1], vec![1, 0]])), BigInt::from(-1));
        assert_eq!(bareiss_determinant(m(vec![vec![2, 3, 1], vec![4, 1, 0], vec![5, 2, 7]])), BigInt::from(-67));
        assert_eq!(bareiss_determinant(m(vec![vec![1, 2], vec![2, 4]])), BigInt::zero());
    }

    #[test]
    fn drs() {
        let r = drs_basis_check(&[1], &[1], &"1,1,1/1,1,1".parse().unwrap(), false).unwrap();
        assert_eq!(r.matrix, vec![vec!["1"]]);
        let r = drs_basis_check(&[1, 2], &[2, 3], &"1,2/2,3".parse().unwrap(), false).unwrap();
        assert!(r.unimodular);
        assert_eq!(r.basis.len(), 2);
        let r = drs_basis_check(&[1, 2], &[2, 3], &"/".parse().unwrap(), false).unwrap();
        assert_eq!(r.determinant, "1");
        assert!(drs_basis_check(&[1, 3], &[2, 3], &"/".parse().unwrap(), false).is_err());
        assert!(drs_basis_check(&[1, 3], &[2, 3], &"/".parse().unwrap(), true).is_ok());
    }
}
