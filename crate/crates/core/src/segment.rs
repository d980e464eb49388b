//! Segments, multisegments and ladders.
//!
//! A segment is a pair `(b, e)` with `b <= e + 1`. When `b == e + 1` it is the dummy
//! `d(e)`, an empty segment that still carries a position. Multisegments keep dummies
//! in the same multiset as genuine segments, tagged only by that invariant.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest absolute coordinate accepted by the constructors. Derived operations
/// (shifts, truncation, negation) move a coordinate by at most one unit, so values
/// never approach the `i32` limits.
pub const COORD_BOUND: i64 = 1 << 24;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Segment {
    b: i32,
    e: i32,
}

fn check_coord(x: i64) -> Result<i32> {
    if x.abs() > COORD_BOUND {
        Err(Error::CoordinateOverflow(x))
    } else {
        Ok(x as i32)
    }
}

impl Segment {
    pub fn new(b: i64, e: i64) -> Result<Segment> {
        let (bb, ee) = (check_coord(b)?, check_coord(e)?);
        if b > e + 1 {
            return Err(Error::InvalidSegment { b, e });
        }
        Ok(Segment { b: bb, e: ee })
    }

    /// The dummy `d(a) = (a+1, a)`.
    pub fn dummy(a: i64) -> Result<Segment> {
        check_coord(a + 1)?;
        Segment::new(a + 1, a)
    }

    pub(crate) const fn raw(b: i32, e: i32) -> Segment {
        Segment { b, e }
    }

    pub fn b(&self) -> i32 {
        self.b
    }

    pub fn e(&self) -> i32 {
        self.e
    }

    pub fn is_genuine(&self) -> bool {
        self.b <= self.e
    }

    pub fn is_dummy(&self) -> bool {
        self.b == self.e + 1
    }

    /// Number of points, zero exactly for dummies.
    pub fn len(&self) -> u32 {
        (self.e - self.b + 1) as u32
    }

    pub fn is_singleton(&self) -> bool {
        self.b == self.e
    }

    pub fn precedes(&self, other: &Segment) -> bool {
        self.b < other.b && self.e < other.e
    }

    /// `self ⊆ other` in the coordinate sense, which also applies to dummies.
    pub fn is_contained_in(&self, other: &Segment) -> bool {
        other.b <= self.b && self.e <= other.e
    }

    pub fn left_shift(&self) -> Segment {
        Segment::raw(self.b - 1, self.e - 1)
    }

    /// `[a+1, b]`; `None` when the segment is a singleton (the genuine convention).
    pub fn truncate(&self) -> Option<Segment> {
        if self.b < self.e {
            Some(Segment::raw(self.b + 1, self.e))
        } else {
            None
        }
    }

    /// Truncation keeping `[a,a]` as the dummy `d(a)`.
    pub fn truncate_enhanced(&self) -> Segment {
        debug_assert!(self.is_genuine());
        Segment::raw(self.b + 1, self.e)
    }

    pub fn contragredient(&self) -> Segment {
        Segment::raw(-self.e, -self.b)
    }
}

/// Panicking shorthand for `Segment::new`, convenient in tests and examples.
pub fn seg(b: i32, e: i32) -> Segment {
    Segment::new(b as i64, e as i64).expect("valid segment")
}

/// Panicking shorthand for `Segment::dummy`.
pub fn dummy(a: i32) -> Segment {
    Segment::dummy(a as i64).expect("valid dummy")
}

pub fn precedes(d1: &Segment, d2: &Segment) -> bool {
    d1.precedes(d2)
}

pub fn contains(d1: &Segment, d2: &Segment) -> bool {
    d1.is_contained_in(d2)
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_dummy() {
            write!(f, "d({})", self.e)
        } else {
            write!(f, "[{},{}]", self.b, self.e)
        }
    }
}

/// Canonical order: begin descending, then end descending.
pub(crate) fn canonical_cmp(x: &Segment, y: &Segment) -> std::cmp::Ordering {
    y.cmp(x)
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(into = "MultisegmentJson", try_from = "MultisegmentJson")]
pub struct Multisegment {
    segs: Vec<Segment>,
}

impl Multisegment {
    pub fn new<I: IntoIterator<Item = Segment>>(segs: I) -> Multisegment {
        let mut segs: Vec<Segment> = segs.into_iter().collect();
        segs.sort_by(canonical_cmp);
        Multisegment { segs }
    }

    pub fn zero() -> Multisegment {
        Multisegment::default()
    }

    pub fn is_zero(&self) -> bool {
        self.segs.is_empty()
    }

    /// Entries in canonical order. Index-based algorithms refer to this order.
    pub fn segments(&self) -> &[Segment] {
        &self.segs
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Segment> {
        self.segs.iter()
    }

    /// Number of entries, dummies included.
    pub fn len(&self) -> usize {
        self.segs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segs.is_empty()
    }

    /// The genuine part (underline).
    pub fn genuine(&self) -> Multisegment {
        Multisegment { segs: self.segs.iter().copied().filter(Segment::is_genuine).collect() }
    }

    /// The dummy part.
    pub fn dummy_part(&self) -> Multisegment {
        Multisegment { segs: self.segs.iter().copied().filter(Segment::is_dummy).collect() }
    }

    pub fn is_genuine(&self) -> bool {
        self.segs.iter().all(Segment::is_genuine)
    }

    pub fn has_genuine(&self) -> bool {
        self.segs.iter().any(Segment::is_genuine)
    }

    /// `|m|`: total length of the genuine segments.
    pub fn size(&self) -> u64 {
        self.segs.iter().map(|s| s.len() as u64).sum()
    }

    /// Smallest begin point over the genuine part.
    pub fn min_begin(&self) -> Option<i32> {
        self.segs.iter().filter(|s| s.is_genuine()).map(Segment::b).min()
    }

    /// Largest end point over the genuine part.
    pub fn max_end(&self) -> Option<i32> {
        self.segs.iter().filter(|s| s.is_genuine()).map(Segment::e).max()
    }

    pub fn count(&self, s: &Segment) -> usize {
        self.segs.iter().filter(|x| *x == s).count()
    }

    /// Multiplicity of `d(a)`.
    pub fn dummy_multiplicity(&self, a: i32) -> usize {
        self.count(&Segment::raw(a + 1, a))
    }

    /// Points `a` with `d(a)` present, without multiplicity, ascending.
    pub fn dummy_support(&self) -> Vec<i32> {
        let mut v: Vec<i32> = self.segs.iter().filter(|s| s.is_dummy()).map(Segment::e).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn sum(&self, other: &Multisegment) -> Multisegment {
        Multisegment::new(self.segs.iter().chain(other.segs.iter()).copied())
    }

    pub fn with(&self, s: Segment) -> Multisegment {
        Multisegment::new(self.segs.iter().copied().chain(std::iter::once(s)))
    }

    /// Removes one copy of `s`; `None` if absent.
    pub fn without(&self, s: &Segment) -> Option<Multisegment> {
        let pos = self.segs.iter().position(|x| x == s)?;
        let mut segs = self.segs.clone();
        segs.remove(pos);
        Some(Multisegment { segs })
    }

    /// Multiset difference; `None` unless `other <= self`.
    pub fn difference(&self, other: &Multisegment) -> Option<Multisegment> {
        let mut out = self.clone();
        for s in &other.segs {
            out = out.without(s)?;
        }
        Some(out)
    }

    pub fn contragredient(&self) -> Multisegment {
        Multisegment::new(self.segs.iter().map(Segment::contragredient))
    }

    /// Translates every coordinate by `c`.
    pub fn shifted(&self, c: i32) -> Result<Multisegment> {
        let segs = self
            .segs
            .iter()
            .map(|s| Segment::new(s.b as i64 + c as i64, s.e as i64 + c as i64))
            .collect::<Result<Vec<_>>>()?;
        Ok(Multisegment::new(segs))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("multisegment serializes")
    }

    pub fn from_json(text: &str) -> Result<Multisegment> {
        serde_json::from_str(text).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })
    }

    /// Accepts either the text grammar or the JSON form.
    pub fn parse_any(text: &str) -> Result<Multisegment> {
        if text.trim_start().starts_with('{') {
            Multisegment::from_json(text)
        } else {
            text.parse()
        }
    }
}

impl FromIterator<Segment> for Multisegment {
    fn from_iter<I: IntoIterator<Item = Segment>>(iter: I) -> Self {
        Multisegment::new(iter)
    }
}

impl<'a> IntoIterator for &'a Multisegment {
    type Item = &'a Segment;
    type IntoIter = std::slice::Iter<'a, Segment>;
    fn into_iter(self) -> Self::IntoIter {
        self.segs.iter()
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.segs.is_empty() {
            return write!(f, "0");
        }
        for (i, s) in self.segs.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MultisegmentJson {
    segments: Vec<[i64; 2]>,
    #[serde(default)]
    dummies: Vec<i64>,
}

impl From<Multisegment> for MultisegmentJson {
    fn from(m: Multisegment) -> Self {
        let segments = m.segs.iter().filter(|s| s.is_genuine()).map(|s| [s.b as i64, s.e as i64]).collect();
        let mut dummies: Vec<i64> = m.segs.iter().filter(|s| s.is_dummy()).map(|s| s.e as i64).collect();
        dummies.sort_unstable();
        MultisegmentJson { segments, dummies }
    }
}

impl TryFrom<MultisegmentJson> for Multisegment {
    type Error = Error;
    fn try_from(j: MultisegmentJson) -> Result<Multisegment> {
        let mut segs = Vec::with_capacity(j.segments.len() + j.dummies.len());
        for [b, e] in j.segments {
            if b > e {
                return Err(Error::InvalidSegment { b, e });
            }
            segs.push(Segment::new(b, e)?);
        }
        for a in j.dummies {
            segs.push(Segment::dummy(a)?);
        }
        Ok(Multisegment::new(segs))
    }
}

struct Scanner<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.text.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.text[start..self.pos]).unwrap_or("");
        match s.parse::<i64>() {
            Ok(v) if v.abs() <= COORD_BOUND => Ok(v),
            Ok(v) => Err(Error::CoordinateOverflow(v)),
            Err(_) => {
                self.pos = start;
                self.err("expected an integer")
            }
        }
    }

    fn segment(&mut self) -> Result<Segment> {
        let start = self.pos;
        match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let b = self.int()?;
                self.expect(b',')?;
                let e = self.int()?;
                self.expect(b']')?;
                Segment::new(b, e).map_err(|err| match err {
                    Error::InvalidSegment { .. } => {
                        Error::Parse { pos: start, msg: format!("[{b},{e}] has end below begin - 1") }
                    }
                    other => other,
                })
            }
            Some(b'd') => {
                self.pos += 1;
                self.expect(b'(')?;
                let a = self.int()?;
                self.expect(b')')?;
                Segment::dummy(a)
            }
            _ => self.err("expected `[a,b]` or `d(a)`"),
        }
    }
}

/// Parses a sum of `[a,b]` and `d(a)` terms; `0` is the empty multisegment.
/// `[a,a-1]` is accepted and read as the dummy `d(a-1)`.
pub fn parse_segments(text: &str) -> Result<Vec<Segment>> {
    let mut sc = Scanner { text: text.as_bytes(), pos: 0 };
    if sc.peek() == Some(b'0') {
        sc.pos += 1;
        if sc.peek().is_some() {
            return sc.err("trailing input after `0`");
        }
        return Ok(Vec::new());
    }
    if sc.peek().is_none() {
        return sc.err("empty input (write `0` for the empty multisegment)");
    }
    let mut out = vec![sc.segment()?];
    while sc.peek() == Some(b'+') {
        sc.pos += 1;
        out.push(sc.segment()?);
    }
    if sc.peek().is_some() {
        return sc.err("expected `+` or end of input");
    }
    Ok(out)
}

impl std::str::FromStr for Multisegment {
    type Err = Error;
    fn from_str(s: &str) -> Result<Multisegment> {
        Ok(Multisegment::new(parse_segments(s)?))
    }
}

/// A nonempty chain `Δ1 ≫ Δ2 ≫ …`, stored top segment first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Ladder {
    segs: Vec<Segment>,
}

impl Ladder {
    pub fn new<I: IntoIterator<Item = Segment>>(segs: I) -> Result<Ladder> {
        let mut segs: Vec<Segment> = segs.into_iter().collect();
        if segs.is_empty() {
            return Err(Error::NotLadder("a ladder is nonempty".into()));
        }
        segs.sort_by(canonical_cmp);
        for w in segs.windows(2) {
            if !w[1].precedes(&w[0]) {
                return Err(Error::NotLadder(format!("{} does not precede {}", w[1], w[0])));
            }
        }
        Ok(Ladder { segs })
    }

    pub fn single(s: Segment) -> Ladder {
        Ladder { segs: vec![s] }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segs
    }

    pub fn len(&self) -> usize {
        self.segs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_genuine(&self) -> bool {
        self.segs.iter().all(Segment::is_genuine)
    }

    pub fn to_multisegment(&self) -> Multisegment {
        Multisegment { segs: self.segs.clone() }
    }

    /// Genuine segments of the ladder, still a chain; possibly empty.
    pub fn genuine_segments(&self) -> Vec<Segment> {
        self.segs.iter().copied().filter(Segment::is_genuine).collect()
    }

    pub fn genuine(&self) -> Option<Ladder> {
        let g = self.genuine_segments();
        if g.is_empty() {
            None
        } else {
            Some(Ladder { segs: g })
        }
    }

    pub fn contragredient(&self) -> Ladder {
        let mut segs: Vec<Segment> = self.segs.iter().map(Segment::contragredient).collect();
        segs.sort_by(canonical_cmp);
        Ladder { segs }
    }

    pub fn min_begin(&self) -> Option<i32> {
        self.to_multisegment().min_begin()
    }
}

impl TryFrom<&Multisegment> for Ladder {
    type Error = Error;
    fn try_from(m: &Multisegment) -> Result<Ladder> {
        Ladder::new(m.segments().iter().copied())
    }
}

impl std::str::FromStr for Ladder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Ladder> {
        Ladder::new(parse_segments(s)?)
    }
}

impl fmt::Display for Ladder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_multisegment().fmt(f)
    }
}
