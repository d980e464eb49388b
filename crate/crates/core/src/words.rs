//! Words, semistandard tableaux and tuples of row words.
//!
//! Tableaux are stored in matrix orientation: rows weakly increase to the right,
//! columns strictly increase downward. The reading word lists rows bottom to top.
//! Row tuples are indexed from 1, `u^(j)` holding a weakly increasing word.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::segment::{Multisegment, Segment};
use crate::tableaux::{InvertedTableau, Shape};

pub type Word = Vec<i32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Tableau {
    rows: Vec<Vec<i32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<i32>>) -> Result<Tableau> {
        Shape::new(rows.iter().map(Vec::len).collect())?;
        for r in &rows {
            if r.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau(format!("row {r:?} decreases")));
            }
        }
        for w in rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(lo, hi)| lo <= hi) {
                return Err(Error::InvalidTableau(format!("columns not strict between {:?} and {:?}", w[0], w[1])));
            }
        }
        Ok(Tableau { rows })
    }

    pub fn empty() -> Tableau {
        Tableau::default()
    }

    pub fn rows(&self) -> &[Vec<i32>] {
        &self.rows
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn word(&self) -> Word {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Column `j` read top to bottom.
    pub fn column(&self, j: usize) -> Vec<i32> {
        self.rows.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<i32>> {
        (0..self.rows.first().map_or(0, Vec::len)).map(|j| self.column(j)).collect()
    }

    pub fn from_columns(cols: &[Vec<i32>]) -> Result<Tableau> {
        let h = cols.first().map_or(0, Vec::len);
        let rows = (0..h).map(|i| cols.iter().take_while(|c| c.len() > i).map(|c| c[i]).collect()).collect();
        Tableau::new(rows)
    }

    pub fn min(&self) -> Option<i32> {
        self.rows.first().map(|r| r[0])
    }

    pub fn max_entry(&self) -> Option<i32> {
        self.rows.iter().flatten().copied().max()
    }

    /// Multiplicities of `1..=n`.
    pub fn weight(&self, n: usize) -> Vec<usize> {
        let mut w = vec![0; n];
        for &x in self.rows.iter().flatten() {
            if x >= 1 && (x as usize) <= n {
                w[x as usize - 1] += 1;
            }
        }
        w
    }

    /// Every column, as a set, contains the column to its right.
    pub fn is_key(&self) -> bool {
        let cols = self.columns();
        cols.windows(2).all(|w| w[1].iter().all(|x| w[0].contains(x)))
    }

    fn height(&self, c: usize) -> usize {
        self.rows.iter().take_while(|r| r.len() > c).count()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(i32::to_string).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// Schensted row insertion; returns the new box.
pub fn row_insert(t: &mut Tableau, mut x: i32) -> (usize, usize) {
    let mut r = 0;
    loop {
        if r == t.rows.len() {
            t.rows.push(vec![x]);
            return (r, 0);
        }
        let row = &mut t.rows[r];
        let j = row.partition_point(|&y| y <= x);
        if j == row.len() {
            row.push(x);
            return (r, j);
        }
        std::mem::swap(&mut row[j], &mut x);
        r += 1;
    }
}

/// Column insertion: bump the smallest entry `>= x` into the next column.
pub fn column_insert(t: &mut Tableau, mut x: i32) -> (usize, usize) {
    let mut c = 0;
    loop {
        let h = t.height(c);
        match (0..h).find(|&i| t.rows[i][c] >= x) {
            Some(i) => {
                std::mem::swap(&mut t.rows[i][c], &mut x);
                c += 1;
            }
            None => {
                if h == t.rows.len() {
                    t.rows.push(Vec::new());
                }
                t.rows[h].push(x);
                return (h, c);
            }
        }
    }
}

/// Removes the last box of row `r` and reverse-bumps upward.
pub fn reverse_row_insert(t: &mut Tableau, r: usize) -> Result<i32> {
    if r >= t.rows.len() || t.rows.get(r + 1).is_some_and(|n| n.len() == t.rows[r].len()) {
        return Err(Error::InvalidTableau(format!("row {r} does not end in a corner")));
    }
    let mut y = t.rows[r].pop().unwrap();
    if t.rows[r].is_empty() {
        t.rows.pop();
    }
    for rr in (0..r).rev() {
        let row = &mut t.rows[rr];
        let j = row.partition_point(|&v| v < y) - 1;
        std::mem::swap(&mut row[j], &mut y);
    }
    Ok(y)
}

/// Removes the bottom box of column `c` and reverse-bumps leftward.
pub fn reverse_column_insert(t: &mut Tableau, c: usize) -> Result<i32> {
    let h = t.height(c);
    if h == 0 || t.rows[h - 1].len() != c + 1 {
        return Err(Error::InvalidTableau(format!("column {c} does not end in a corner")));
    }
    let mut y = t.rows[h - 1].pop().unwrap();
    if t.rows[h - 1].is_empty() {
        t.rows.pop();
    }
    for cc in (0..c).rev() {
        let i = (0..t.height(cc)).rev().find(|&i| t.rows[i][cc] <= y).expect("reverse column bump");
        std::mem::swap(&mut t.rows[i][cc], &mut y);
    }
    Ok(y)
}

/// `ℙ(u)` by row insertion.
pub fn knuth_p(word: &[i32]) -> Tableau {
    let mut t = Tableau::empty();
    for &x in word {
        row_insert(&mut t, x);
    }
    t
}

/// `ℙ` of the reversed complemented word `x -> n - x`.
pub fn evacuation(t: &Tableau, n: i32) -> Tableau {
    let w: Word = t.word().iter().rev().map(|&x| n - x).collect();
    knuth_p(&w)
}

/// Antinormal tableau: rows right-aligned, weakly increasing; columns strictly
/// increasing downward; row lengths weakly increase downward.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AntiTableau {
    rows: Vec<Vec<i32>>,
}

impl AntiTableau {
    pub fn rows(&self) -> &[Vec<i32>] {
        &self.rows
    }

    pub fn width(&self) -> usize {
        self.rows.last().map_or(0, Vec::len)
    }

    pub fn word(&self) -> Word {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Entry at absolute column `j` of row `i`, if that cell exists.
    pub fn get(&self, i: usize, j: usize) -> Option<i32> {
        let row = self.rows.get(i)?;
        let off = self.width() - row.len();
        j.checked_sub(off).and_then(|k| row.get(k).copied())
    }
}

fn anti_insert(a: &mut AntiTableau, mut x: i32) {
    let mut r = a.rows.len();
    while r > 0 {
        let row = &mut a.rows[r - 1];
        let j = row.partition_point(|&v| v < x);
        if j == 0 {
            row.insert(0, x);
            return;
        }
        std::mem::swap(&mut row[j - 1], &mut x);
        r -= 1;
    }
    a.rows.insert(0, vec![x]);
}

/// The antitableau in the Knuth class of `word(t)`, by insertion from the
/// right end of the word.
pub fn antitableau(t: &Tableau) -> AntiTableau {
    antitableau_of_word(&t.word())
}

pub fn antitableau_of_word(w: &[i32]) -> AntiTableau {
    let mut a = AntiTableau::default();
    for &x in w.iter().rev() {
        anti_insert(&mut a, x);
    }
    a
}

/// Antitableau followed by the antidiagonal flip.
pub fn inv(t: &Tableau) -> InvertedTableau {
    let a = antitableau(t);
    let (r, c) = (a.rows.len(), a.width());
    let rows: Vec<Vec<i32>> = (0..c).map(|p| (0..r).map_while(|q| a.get(r - 1 - q, c - 1 - p)).collect()).collect();
    InvertedTableau::new(rows).expect("flipped antitableau is inverted")
}

pub fn inv_inverse(y: &InvertedTableau) -> Tableau {
    let yr = y.rows();
    let c = yr.len();
    let r = yr.first().map_or(0, Vec::len);
    // Antitableau cell (i, j) holds Y[c-1-j][r-1-i].
    let mut word = Vec::with_capacity(y.entries().len());
    for i in (0..r).rev() {
        for j in 0..c {
            if let Some(&v) = yr[c - 1 - j].get(r - 1 - i) {
                word.push(v);
            }
        }
    }
    knuth_p(&word)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strip {
    Row,
    Column,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieriFactor {
    /// A row word (weakly increasing) or a column word (strictly decreasing).
    pub word: Word,
    pub tableau: Tableau,
}

/// Splits `t` of shape `λ` into a tableau of shape `mu` and a row or column word,
/// so that `ℙ(u · word(T)) = t` (left) or `ℙ(word(T) · u) = t` (right).
pub fn pieri_factor(t: &Tableau, mu: &Shape, side: Side, strip: Strip) -> Result<PieriFactor> {
    let lam = t.shape();
    let l = lam.rows();
    let m: Vec<usize> = (0..l.len()).map(|i| mu.rows().get(i).copied().unwrap_or(0)).collect();
    if mu.rows().len() > l.len() || (0..l.len()).any(|i| m[i] > l[i]) {
        return Err(Error::Domain(format!("{:?} is not inside {:?}", mu.rows(), l)));
    }
    let strip_ok = match strip {
        Strip::Column => (0..l.len()).all(|i| l[i] - m[i] <= 1),
        Strip::Row => (1..l.len()).all(|i| l[i] <= m[i - 1]),
    };
    if !strip_ok {
        return Err(Error::Domain(format!("{:?}/{:?} is not a {strip:?} strip", l, mu.rows())));
    }
    // Strip boxes, in removal order.
    let mut boxes: Vec<(usize, usize)> = (0..l.len()).flat_map(|i| (m[i]..l[i]).map(move |j| (i, j))).collect();
    match strip {
        Strip::Column => boxes.sort_by(|a, b| b.0.cmp(&a.0)),
        Strip::Row => boxes.sort_by(|a, b| b.1.cmp(&a.1)),
    }
    let mut tab = t.clone();
    let mut letters = Vec::with_capacity(boxes.len());
    for (i, j) in boxes {
        letters.push(match side {
            Side::Right => reverse_row_insert(&mut tab, i)?,
            Side::Left => reverse_column_insert(&mut tab, j)?,
        });
    }
    if side == Side::Right {
        letters.reverse();
    }
    Ok(PieriFactor { word: letters, tableau: tab })
}

/// `λ` with one box removed from each of the first `r` rows.
fn grounded(lam: &Shape, r: usize) -> Shape {
    Shape(lam.rows().iter().enumerate().map(|(i, &x)| if i < r { x - 1 } else { x }).filter(|&x| x > 0).collect())
}

fn key_with(t: &Tableau, side: Side) -> Tableau {
    let lam = t.shape();
    let cols: Vec<Vec<i32>> = lam
        .conjugate()
        .rows()
        .iter()
        .map(|&r| {
            let mut c = pieri_factor(t, &grounded(&lam, r), side, Strip::Column).expect("grounded strip").word;
            c.sort_unstable();
            c
        })
        .collect();
    Tableau::from_columns(&cols).expect("key columns form a tableau")
}

/// `K_+(t)`.
pub fn right_key(t: &Tableau) -> Tableau {
    key_with(t, Side::Right)
}

/// `K_-(t)`.
pub fn left_key(t: &Tableau) -> Tableau {
    key_with(t, Side::Left)
}

/// The key tableau of shape `β⁺` and weight `β`.
pub fn key_tableau_of_weight(beta: &[usize]) -> Tableau {
    let top = beta.iter().copied().max().unwrap_or(0);
    let cols: Vec<Vec<i32>> =
        (0..top).map(|j| (0..beta.len()).filter(|&i| beta[i] > j).map(|i| i as i32 + 1).collect()).collect();
    Tableau::from_columns(&cols).expect("nested columns")
}

/// `w_β` in one-line notation: `w(i)` is the position in `β` of the `i`-th
/// largest entry, equal entries taken left to right.
pub fn w_beta(beta: &[usize]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..beta.len()).collect();
    idx.sort_by(|&a, &b| beta[b].cmp(&beta[a]).then(a.cmp(&b)));
    idx.into_iter().map(|i| i + 1).collect()
}

/// A reduced word `w = s_{a_1} ⋯ s_{a_l}`, peeling the largest right descent.
pub fn reduced_word(w: &[usize]) -> Vec<usize> {
    let mut w = w.to_vec();
    let mut out = Vec::new();
    while let Some(i) = (0..w.len().saturating_sub(1)).rev().find(|&i| w[i] > w[i + 1]) {
        w.swap(i, i + 1);
        out.push(i + 1);
    }
    out.reverse();
    out
}

pub fn format_reduced_word(w: &[usize]) -> String {
    if w.is_empty() {
        return "e".into();
    }
    w.iter().map(|a| format!("s{a}")).collect()
}

/// Bruhat order by comparing sorted prefixes.
pub fn bruhat_leq(u: &[usize], v: &[usize]) -> bool {
    assert_eq!(u.len(), v.len(), "permutations of different degrees");
    let (mut a, mut b) = (Vec::with_capacity(u.len()), Vec::with_capacity(v.len()));
    for k in 0..u.len() {
        let pa = a.partition_point(|&x| x < u[k]);
        a.insert(pa, u[k]);
        let pb = b.partition_point(|&x| x < v[k]);
        b.insert(pb, v[k]);
        if a.iter().zip(&b).any(|(x, y)| x > y) {
            return false;
        }
    }
    true
}

/// `α ≤ β` on a common orbit.
pub fn bruhat_leq_weights(alpha: &[usize], beta: &[usize]) -> Result<bool> {
    let sorted = |x: &[usize]| {
        let mut v = x.to_vec();
        v.sort_unstable();
        v
    };
    if alpha.len() != beta.len() || sorted(alpha) != sorted(beta) {
        return Err(Error::Domain(format!("{alpha:?} and {beta:?} lie in different orbits")));
    }
    Ok(bruhat_leq(&w_beta(alpha), &w_beta(beta)))
}

/// Sparse tuple of row words; `u^(j)` for `j >= 1`, values positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RowTuple {
    words: BTreeMap<u32, Word>,
}

impl RowTuple {
    pub fn new(words: BTreeMap<u32, Word>) -> Result<RowTuple> {
        let mut out = BTreeMap::new();
        for (j, w) in words {
            if j == 0 {
                return Err(Error::InvalidTuple("indices start at 1".into()));
            }
            if w.iter().any(|&x| x < 1) {
                return Err(Error::InvalidTuple(format!("u^({j}) has a nonpositive letter")));
            }
            if w.windows(2).any(|p| p[0] > p[1]) {
                return Err(Error::InvalidTuple(format!("u^({j}) = {w:?} is not a row word")));
            }
            if !w.is_empty() {
                out.insert(j, w);
            }
        }
        Ok(RowTuple { words: out })
    }

    /// Letters are sorted into row words.
    pub fn from_letters<I: IntoIterator<Item = (u32, i32)>>(pairs: I) -> Result<RowTuple> {
        let mut words: BTreeMap<u32, Word> = BTreeMap::new();
        for (j, x) in pairs {
            words.entry(j).or_default().push(x);
        }
        for w in words.values_mut() {
            w.sort_unstable();
        }
        RowTuple::new(words)
    }

    pub fn get(&self, j: u32) -> &[i32] {
        self.words.get(&j).map_or(&[], Vec::as_slice)
    }

    pub fn words(&self) -> &BTreeMap<u32, Word> {
        &self.words
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn total_len(&self) -> usize {
        self.words.values().map(Vec::len).sum()
    }

    pub fn max_index(&self) -> u32 {
        self.words.keys().next_back().copied().unwrap_or(0)
    }

    pub fn min_value(&self) -> Option<i32> {
        self.words.values().flatten().copied().min()
    }

    pub fn max_value(&self) -> Option<i32> {
        self.words.values().flatten().copied().max()
    }

    /// Every letter of `u^(i)` is at most `i`.
    pub fn is_flagged(&self) -> bool {
        self.words.iter().all(|(&j, w)| w.iter().all(|&x| x <= j as i32))
    }

    /// Every letter of `u^(i)` is at most `i + 1`.
    pub fn is_flagged_enhanced(&self) -> bool {
        self.words.iter().all(|(&j, w)| w.iter().all(|&x| x <= j as i32 + 1))
    }

    /// `⋯ u^(2) u^(1)` together with the span of each index inside it.
    pub fn reading_word(&self) -> (Word, Vec<(u32, std::ops::Range<usize>)>) {
        let mut w = Vec::with_capacity(self.total_len());
        let mut spans = Vec::with_capacity(self.words.len());
        for (&j, u) in self.words.iter().rev() {
            let s = w.len();
            w.extend_from_slice(u);
            spans.push((j, s..w.len()));
        }
        (w, spans)
    }

    pub fn to_json(&self) -> String {
        let m: BTreeMap<String, &Word> = self.words.iter().map(|(j, w)| (j.to_string(), w)).collect();
        serde_json::to_string(&m).expect("tuple serializes")
    }

    pub fn from_json(text: &str) -> Result<RowTuple> {
        let m: BTreeMap<String, Word> =
            serde_json::from_str(text).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })?;
        let mut words = BTreeMap::new();
        for (k, w) in m {
            let j: u32 = k.parse().map_err(|_| Error::InvalidTuple(format!("bad index `{k}`")))?;
            words.insert(j, w);
        }
        RowTuple::new(words)
    }

    pub fn parse_any(text: &str) -> Result<RowTuple> {
        if text.trim_start().starts_with('{') {
            RowTuple::from_json(text)
        } else {
            text.parse()
        }
    }
}

impl fmt::Display for RowTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.words.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self
            .words
            .iter()
            .rev()
            .map(|(j, w)| format!("{j}:{}", w.iter().map(i32::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{}", parts.join(";"))
    }
}

impl std::str::FromStr for RowTuple {
    type Err = Error;
    /// `3:1,2;2:2` maps index to row word; `()` or blank is the empty tuple.
    fn from_str(s: &str) -> Result<RowTuple> {
        let t = s.trim();
        if t.is_empty() || t == "()" {
            return Ok(RowTuple::default());
        }
        let mut words: BTreeMap<u32, Word> = BTreeMap::new();
        let mut pos = 0;
        for part in s.split(';') {
            let err = |msg: &str| Error::Parse { pos, msg: msg.into() };
            let (j, w) = part.split_once(':').ok_or_else(|| err("expected `index:letters`"))?;
            let j: u32 = j.trim().parse().map_err(|_| err("bad index"))?;
            let mut letters = Vec::new();
            for x in w.split(',').map(str::trim).filter(|x| !x.is_empty()) {
                letters.push(x.parse::<i32>().map_err(|_| err("bad letter"))?);
            }
            let entry = words.entry(j).or_default();
            entry.extend(letters);
            entry.sort_unstable();
            pos += part.len() + 1;
        }
        RowTuple::new(words)
    }
}

/// `ι(m)`: `[i,j]` puts the letter `i` in `u^(j)`; a dummy `d(a)` puts `a+1` in `u^(a)`.
pub fn iota(m: &Multisegment) -> Result<RowTuple> {
    let mut pairs = Vec::with_capacity(m.len());
    for s in m {
        if s.b() < 1 || s.e() < 1 {
            return Err(Error::Domain(format!("{s} is not supported on positive integers")));
        }
        pairs.push((s.e() as u32, s.b()));
    }
    RowTuple::from_letters(pairs)
}

pub fn iota_inverse(u: &RowTuple) -> Result<Multisegment> {
    let mut segs = Vec::with_capacity(u.total_len());
    for (&j, w) in &u.words {
        for &x in w {
            if x > j as i32 + 1 {
                return Err(Error::Domain(format!("letter {x} in u^({j}) exceeds {}", j + 1)));
            }
            segs.push(Segment::new(x as i64, j as i64)?);
        }
    }
    Ok(Multisegment::new(segs))
}

/// Column-insertion RSK: `P_j = ℙ(u^(j) P_{j-1})`, with `Q` recording `j` on the
/// new horizontal strip.
pub fn crsk(u: &RowTuple) -> (Tableau, Tableau) {
    let mut p = Tableau::empty();
    let mut q = Tableau::empty();
    for (&j, w) in &u.words {
        for &x in w.iter().rev() {
            let (i, _) = column_insert(&mut p, x);
            if i == q.rows.len() {
                q.rows.push(Vec::new());
            }
            q.rows[i].push(j as i32);
        }
    }
    (p, q)
}

pub fn crsk_inverse(p: &Tableau, q: &Tableau) -> Result<RowTuple> {
    if p.shape() != q.shape() {
        return Err(Error::InvalidTableau("P and Q have different shapes".into()));
    }
    let mut p = p.clone();
    let mut q = q.clone();
    let mut words = BTreeMap::new();
    while let Some(j) = q.max_entry() {
        if j < 1 {
            return Err(Error::InvalidTableau("recording entries start at 1".into()));
        }
        let boxes: Vec<(usize, usize)> = q
            .rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().filter(|(_, &x)| x == j).map(move |(c, _)| (i, c)))
            .collect();
        let mut letters = Vec::with_capacity(boxes.len());
        let mut order = boxes.clone();
        order.sort_by(|a, b| b.1.cmp(&a.1));
        for &(i, c) in &order {
            if q.rows[i].len() != c + 1 {
                return Err(Error::InvalidTableau(format!("entries {j} of Q are not a horizontal strip")));
            }
            q.rows[i].pop();
            if q.rows[i].is_empty() {
                q.rows.pop();
            }
            letters.push(reverse_column_insert(&mut p, c)?);
        }
        if letters.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidTableau(format!("letters recorded by {j} do not form a row word")));
        }
        words.insert(j as u32, letters);
    }
    RowTuple::new(words)
}

/// `U_m`: selects the rightmost `m`, then the next `m+1` to its left, and so on,
/// incrementing every selected letter. Returns the count of selected letters.
pub fn u_operator(word: &[i32], m: i32) -> (Word, usize) {
    let mut w = word.to_vec();
    let mut pos = w.len();
    let mut cur = m;
    let mut count = 0;
    while let Some(p) = w[..pos].iter().rposition(|&x| x == cur) {
        w[p] += 1;
        pos = p;
        cur += 1;
        count += 1;
    }
    (w, count)
}

/// `U_m` on a tableau through its reading word, refilled into the same shape.
pub fn u_operator_tableau(t: &Tableau, m: i32) -> Result<(Tableau, usize)> {
    let (w, count) = u_operator(&t.word(), m);
    let mut rows = Vec::with_capacity(t.rows.len());
    let mut pos = 0;
    for r in t.rows.iter().rev() {
        rows.push(w[pos..pos + r.len()].to_vec());
        pos += r.len();
    }
    rows.reverse();
    Ok((Tableau::new(rows)?, count))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MwWords {
    pub u_hat: RowTuple,
    pub dagger: RowTuple,
    pub delta_circ: Segment,
    pub m: i32,
    pub k_hat: usize,
}

/// The MW step on a tuple of row words: `u† = U_{m+k̂}(Û(u))`.
pub fn mw_words(u: &RowTuple) -> Result<MwWords> {
    let m = u.min_value().ok_or(Error::Empty("mw_words"))?;
    let mut words = u.words.clone();
    let mut k_hat = 0usize;
    loop {
        let c = m + k_hat as i32;
        let Some(w) = words.get_mut(&(c as u32)) else { break };
        let Some(p) = w.iter().position(|&x| x == c) else { break };
        w.remove(p);
        k_hat += 1;
    }
    let u_hat = RowTuple::new(words)?;
    let (w, spans) = u_hat.reading_word();
    let (w2, count) = u_operator(&w, m + k_hat as i32);
    let mut out = BTreeMap::new();
    for (j, r) in spans {
        let mut part = w2[r].to_vec();
        part.sort_unstable();
        out.insert(j, part);
    }
    let k = k_hat + count;
    Ok(MwWords {
        u_hat,
        dagger: RowTuple::new(out)?,
        delta_circ: Segment::new(m as i64, m as i64 + k as i64 - 1)?,
        m,
        k_hat,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlStep {
    pub p_dagger: Tableau,
    pub q_dagger: Tableau,
    /// Right column factor: `ℙ(word(T) c) = P`.
    pub t: Tableau,
    pub c: Word,
    pub k_hat: usize,
    /// Number of consecutive values `m, m+1, …` topping the first column of `P`.
    pub k: usize,
}

fn top_run(first_col: &[i32], m: i32) -> usize {
    first_col.iter().enumerate().take_while(|&(j, &x)| x == m + j as i32).count()
}

/// `(P, Q) -> (P†, Q†)` computed on the tableaux alone.
pub fn gl_step(p: &Tableau, q: &Tableau) -> Result<GlStep> {
    if p.shape() != q.shape() {
        return Err(Error::InvalidTableau("P and Q have different shapes".into()));
    }
    let m = p.min().ok_or(Error::Empty("gl_step"))?;
    let k_hat = top_run(&q.column(0), m);
    let k = top_run(&p.column(0), m);
    let skew: Word = q
        .rows
        .iter()
        .enumerate()
        .rev()
        .flat_map(|(i, r)| if i < k_hat { &r[1..] } else { &r[..] }.iter().copied())
        .collect();
    let q_dagger = knuth_p(&skew);
    let mu = q_dagger.shape();
    let lam = q.shape();
    let inner = |i: usize| mu.rows().get(i).copied().unwrap_or(0);
    let vertical = mu.rows().len() <= lam.rows().len()
        && lam.rows().iter().enumerate().all(|(i, &l)| l >= inner(i) && l - inner(i) <= 1);
    if !vertical || lam.size() != mu.size() + k_hat {
        return Err(Error::Mismatch(format!("shape(Q)/shape(Q†) is not a vertical {k_hat}-strip")));
    }
    let f = pieri_factor(p, &mu, Side::Right, Strip::Column)?;
    let (p_dagger, _) = u_operator_tableau(&f.tableau, m + k_hat as i32)?;
    Ok(GlStep { p_dagger, q_dagger, t: f.tableau, c: f.word, k_hat, k })
}

fn key_weight_bound(u: &RowTuple, p: &Tableau) -> usize {
    let v = u.max_value().unwrap_or(0).max(0) as usize;
    v.max(u.max_index() as usize).max(p.rows.len())
}

/// `wt(K_+(ℙ(u))) ≤ wt(K_-(ℚ(u)))`.
pub fn flagged_iff_key(u: &RowTuple) -> bool {
    key_predicates(u).0
}

/// The shifted comparison `wt(K_+(ℙ)) ≤ (0, wt(K_-(ℚ)))`, which detects the
/// enhanced flag condition.
pub fn flagged_iff_key_enhanced(u: &RowTuple) -> bool {
    key_predicates(u).1
}

/// Both key comparisons from a single insertion and key computation.
pub fn key_predicates(u: &RowTuple) -> (bool, bool) {
    let (p, q) = crsk(u);
    let n = key_weight_bound(u, &p);
    let (kp, kq) = (right_key(&p), left_key(&q));
    let a = kp.weight(n);
    let b = kq.weight(n);
    let plain = bruhat_leq(&w_beta(&a), &w_beta(&b));
    let a = kp.weight(n + 1);
    let mut b = vec![0];
    b.extend(kq.weight(n));
    (plain, bruhat_leq(&w_beta(&a), &w_beta(&b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(rows: &[&[i32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn example() -> RowTuple {
        "6:5,6;5:3,4;4:2,3,3;3:1,2,2;2:1,2;1:1".parse().unwrap()
    }

    #[test]
    fn insertion_basics() {
        assert!(knuth_p(&[]).is_empty());
        let t = tab(&[&[1, 1, 2], &[2, 3]]);
        assert_eq!(knuth_p(&t.word()), t);
        let mut s = t.clone();
        let b = column_insert(&mut s, 1);
        assert_eq!(s, tab(&[&[1, 1, 1, 2], &[2, 3]]));
        assert_eq!(b, (0, 3));
        assert_eq!(reverse_column_insert(&mut s, 3).unwrap(), 1);
        assert_eq!(s, t);
        let mut s = t.clone();
        row_insert(&mut s, 1);
        assert_eq!(reverse_row_insert(&mut s, 2).unwrap(), 1);
        assert_eq!(s, t);
        assert!(reverse_row_insert(&mut s.clone(), 0).is_ok());
        assert!(reverse_column_insert(&mut s, 0).is_err());
    }

    #[test]
    fn example_pq() {
        let (p, q) = crsk(&example());
        assert_eq!(p, tab(&[&[1, 1, 1, 2], &[2, 2, 2], &[3, 3, 3], &[4, 6], &[5]]));
        assert_eq!(q, tab(&[&[1, 2, 3, 3], &[2, 3, 4], &[4, 4, 5], &[5, 6], &[6]]));
        assert_eq!(crsk_inverse(&p, &q).unwrap(), example());
        let (w, _) = example().reading_word();
        assert_eq!(knuth_p(&w), p);
    }

    #[test]
    fn inv_example() {
        let y = inv(&tab(&[&[1, 1, 4], &[2, 3]]));
        assert_eq!(y.rows(), &[vec![4, 1], vec![3, 1], vec![2]]);
        assert_eq!(antitableau(&tab(&[&[1, 1, 4], &[2, 3]])).rows(), &[vec![1, 1], vec![2, 3, 4]]);
        assert_eq!(inv_inverse(&y), tab(&[&[1, 1, 4], &[2, 3]]));
    }

    #[test]
    fn iota_examples() {
        let u = iota(&"[1,3]+[2,2]".parse().unwrap()).unwrap();
        assert_eq!(u.to_string(), "3:1;2:2");
        assert!(u.is_flagged());
        let e = iota(&"d(2)+[1,1]".parse().unwrap()).unwrap();
        assert_eq!(e.to_string(), "2:3;1:1");
        assert_eq!(iota_inverse(&e).unwrap().to_string(), "d(2)+[1,1]");
        assert!(iota(&"[0,2]".parse().unwrap()).is_err());
        assert!(iota_inverse(&"1:3".parse().unwrap()).is_err());
    }

    #[test]
    fn example_mw() {
        let r = mw_words(&example()).unwrap();
        assert_eq!(r.u_hat.to_string(), "6:5,6;5:3,4;4:2,3,3;3:1,2,2;2:1");
        assert_eq!((r.m, r.k_hat), (1, 2));
        assert_eq!(r.dagger.to_string(), "6:6,6;5:3,5;4:2,3,4;3:1,2,2;2:1");
        assert_eq!(r.delta_circ, Segment::new(1, 5).unwrap());
        let single = mw_words(&"4:4".parse().unwrap()).unwrap();
        assert!(single.dagger.is_empty());
        assert_eq!(single.delta_circ, Segment::new(4, 4).unwrap());
    }

    #[test]
    fn example_gl() {
        let (p, q) = crsk(&example());
        let g = gl_step(&p, &q).unwrap();
        assert_eq!(g.p_dagger, tab(&[&[1, 1, 2], &[2, 2, 4], &[3, 3], &[5, 6], &[6]]));
        assert_eq!(g.q_dagger, tab(&[&[2, 3, 3], &[3, 4, 4], &[4, 5], &[5, 6], &[6]]));
        assert_eq!(g.t, tab(&[&[1, 1, 2], &[2, 2, 3], &[3, 3], &[4, 6], &[5]]));
        assert_eq!(g.c, vec![2, 1]);
        assert_eq!((g.k_hat, g.k), (2, 5));
    }

    #[test]
    fn example_keys() {
        let (p, q) = crsk(&example());
        let kp = right_key(&p);
        assert_eq!(kp, tab(&[&[1, 1, 1, 2], &[2, 2, 2], &[3, 3, 3], &[4, 6], &[6]]));
        assert_eq!(kp.weight(6), vec![3, 4, 3, 1, 0, 2]);
        let kq = left_key(&q);
        assert_eq!(kq, tab(&[&[1, 1, 1, 2], &[2, 2, 2], &[4, 4, 4], &[5, 6], &[6]]));
        assert_eq!(kq.weight(6), vec![3, 4, 0, 3, 1, 2]);
        let (wa, wb) = (w_beta(&kp.weight(6)), w_beta(&kq.weight(6)));
        assert_eq!(wa, vec![2, 1, 3, 6, 4, 5]);
        assert_eq!(wb, vec![2, 1, 4, 6, 5, 3]);
        assert_eq!(format_reduced_word(&reduced_word(&wa)), "s1s5s4");
        assert_eq!(format_reduced_word(&reduced_word(&wb)), "s1s3s5s4s5");
        assert!(bruhat_leq(&wa, &wb));
        assert!(!bruhat_leq(&wb, &wa));
        assert!(flagged_iff_key(&example()));
    }

    #[test]
    fn example_column_factors() {
        let x = tab(&[&[1, 2, 3, 3], &[2, 3, 4], &[4, 4, 5], &[5, 6], &[6]]);
        let f = pieri_factor(&x, &Shape(vec![3, 2, 2, 1, 1]), Side::Left, Strip::Column).unwrap();
        assert_eq!(f.word, vec![6, 4, 2, 1]);
        let y = tab(&[&[1, 1, 1, 2], &[2, 2, 2], &[3, 3, 3], &[4, 6], &[5]]);
        let f = pieri_factor(&y, &Shape(vec![3, 2, 2, 1, 1]), Side::Right, Strip::Column).unwrap();
        let mut c = f.word.clone();
        c.sort_unstable();
        assert_eq!(c, vec![1, 2, 3, 6]);
        assert!(pieri_factor(&y, &Shape(vec![2, 2, 2, 1, 1]), Side::Right, Strip::Column).is_err());
    }

    #[test]
    fn keys_of_keys() {
        let k = key_tableau_of_weight(&[1, 0, 2]);
        assert_eq!(k, tab(&[&[1, 3], &[3]]));
        assert!(k.is_key());
        assert_eq!(right_key(&k), k);
        assert_eq!(left_key(&k), k);
        assert!(!tab(&[&[1, 2], &[3]]).is_key());
    }

    #[test]
    fn flag_detection() {
        assert!(flagged_iff_key(&iota(&"[1,3]+[2,2]".parse().unwrap()).unwrap()));
        assert!(!flagged_iff_key(&"2:3".parse().unwrap()));
        assert!(flagged_iff_key_enhanced(&"2:3".parse().unwrap()));
        assert!(!flagged_iff_key_enhanced(&"1:3".parse().unwrap()));
    }

    #[test]
    fn bruhat_small() {
        assert!(bruhat_leq(&[1, 2, 3], &[3, 2, 1]));
        assert!(!bruhat_leq(&[2, 1, 3], &[1, 3, 2]));
        assert!(bruhat_leq_weights(&[1, 0], &[0, 1]).unwrap());
        assert!(bruhat_leq_weights(&[1, 0], &[1, 1]).is_err());
    }

    #[test]
    fn tuple_text_and_json() {
        let u = example();
        assert_eq!(u.to_string().parse::<RowTuple>().unwrap(), u);
        assert_eq!(RowTuple::from_json(&u.to_json()).unwrap(), u);
        assert!("3:2,1".parse::<RowTuple>().is_ok());
        assert!("0:1".parse::<RowTuple>().is_err());
        assert!("3;1".parse::<RowTuple>().is_err());
    }

    #[test]
    fn evacuation_is_involutive_here() {
        let t = tab(&[&[1, 1, 3], &[2, 4]]);
        assert_eq!(evacuation(&evacuation(&t, 5), 5), t);
    }
}
