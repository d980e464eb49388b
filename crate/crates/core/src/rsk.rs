//! Depth, the map `K(m) = (l(m), m')`, the ladder-valued RSK and its inverse.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::segment::{parse_segments, Ladder, Multisegment, Segment};

/// Depth of every entry of an arbitrary segment list: the length of the longest
/// `≪`-increasing chain starting there, counted in steps.
pub fn depths(segs: &[Segment]) -> Vec<usize> {
    // Larger begin points first; anything strictly above an entry comes before it.
    let mut order: Vec<usize> = (0..segs.len()).collect();
    order.sort_by(|&x, &y| segs[y].b().cmp(&segs[x].b()));
    let mut d = vec![0usize; segs.len()];
    for (pos, &i) in order.iter().enumerate() {
        d[i] = order[..pos].iter().filter(|&&j| segs[i].precedes(&segs[j])).map(|&j| d[j] + 1).max().unwrap_or(0);
    }
    d
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthTable {
    pub depth: Vec<usize>,
    /// Admissible enumeration of each fiber, largest segment first.
    pub fibers: Vec<Vec<usize>>,
    pub distinguished: Vec<bool>,
    /// Successor within the fiber cycle.
    pub sigma: Vec<usize>,
}

impl DepthTable {
    pub fn max_depth(&self) -> usize {
        self.fibers.len() - 1
    }
}

pub fn depth_table(m: &Multisegment) -> Result<DepthTable> {
    if m.is_zero() {
        return Err(Error::Empty("depth"));
    }
    let segs = m.segments();
    let depth = depths(segs);
    let d = *depth.iter().max().unwrap();
    let mut fibers = vec![Vec::new(); d + 1];
    for (i, &k) in depth.iter().enumerate() {
        fibers[k].push(i);
    }
    let mut distinguished = vec![false; segs.len()];
    let mut sigma = vec![0; segs.len()];
    for fib in &mut fibers {
        // b ascending then e descending gives a decreasing containment chain;
        // ties keep index order.
        fib.sort_by_key(|&i| (segs[i].b(), -segs[i].e(), i));
        let l = fib.len();
        for r in 0..l {
            sigma[fib[r]] = fib[(r + 1) % l];
            distinguished[fib[r]] = r + 1 == l || segs[fib[r + 1]] != segs[fib[r]];
        }
    }
    Ok(DepthTable { depth, fibers, distinguished, sigma })
}

/// Largest depth attained on a genuine entry.
pub fn essential_depth(m: &Multisegment) -> Option<usize> {
    let d = depths(m.segments());
    m.iter().zip(d).filter(|(s, _)| s.is_genuine()).map(|(_, k)| k).max()
}

fn joined(b: i32, e: i32) -> Result<Segment> {
    Segment::new(b as i64, e as i64).map_err(|_| Error::Internal(format!("derived pair ({b},{e}) is not a segment")))
}

/// `K(m)`: the highest ladder and the derived multisegment.
pub fn k_step(m: &Multisegment) -> Result<(Ladder, Multisegment)> {
    let t = depth_table(m)?;
    let segs = m.segments();
    let mut lad = Vec::with_capacity(t.fibers.len());
    let mut rest = Vec::with_capacity(segs.len());
    for fib in &t.fibers {
        let last = *fib.last().unwrap();
        for &i in fib {
            let s = joined(segs[i].b(), segs[t.sigma[i]].e())?;
            if i == last {
                lad.push(s);
            } else {
                rest.push(s);
            }
        }
    }
    Ok((Ladder::new(lad)?, Multisegment::new(rest)))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LadderTuple {
    pub ladders: Vec<Ladder>,
}

impl LadderTuple {
    pub fn new(ladders: Vec<Ladder>) -> LadderTuple {
        LadderTuple { ladders }
    }

    pub fn len(&self) -> usize {
        self.ladders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ladders.is_empty()
    }

    /// Consecutive dominance.
    pub fn is_dominance_chain(&self) -> bool {
        self.ladders.windows(2).all(|w| is_dominant(&w[0], &w[1]))
    }

    /// Pairwise permissibility for all `i < j`.
    pub fn is_pairwise_permissible(&self) -> bool {
        let n = self.ladders.len();
        (0..n).all(|i| (i + 1..n).all(|j| is_permissible(&self.ladders[i], &self.ladders[j])))
    }

    pub fn contragredient(&self) -> LadderTuple {
        LadderTuple { ladders: self.ladders.iter().map(Ladder::contragredient).collect() }
    }

    pub fn to_multisegments(&self) -> Vec<Multisegment> {
        self.ladders.iter().map(Ladder::to_multisegment).collect()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Row {
            segments: Vec<[i32; 2]>,
            dummies: Vec<i32>,
        }
        let rows: Vec<Row> = self
            .ladders
            .iter()
            .map(|l| Row {
                segments: l.segments().iter().filter(|s| s.is_genuine()).map(|s| [s.b(), s.e()]).collect(),
                dummies: l.segments().iter().filter(|s| s.is_dummy()).map(|s| s.e()).collect(),
            })
            .collect();
        serde_json::to_value(rows).expect("ladder rows serialize")
    }
}

impl fmt::Display for LadderTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ladders.is_empty() {
            return write!(f, "()");
        }
        for (i, l) in self.ladders.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for LadderTuple {
    type Err = Error;
    /// Ladders separated by `;`; `()` or blank is the empty tuple.
    fn from_str(s: &str) -> Result<LadderTuple> {
        let t = s.trim();
        if t.is_empty() || t == "()" {
            return Ok(LadderTuple::default());
        }
        let mut ladders = Vec::new();
        let mut offset = 0;
        for part in s.split(';') {
            let segs = parse_segments(part).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse { pos: pos + offset, msg },
                other => other,
            })?;
            ladders.push(Ladder::new(segs)?);
            offset += part.len() + 1;
        }
        Ok(LadderTuple { ladders })
    }
}

/// Iterates `K` down to zero.
pub fn rsk(m: &Multisegment) -> LadderTuple {
    let mut ladders = Vec::new();
    let mut cur = m.clone();
    while !cur.is_zero() {
        let (l, next) = k_step(&cur).expect("nonzero input");
        ladders.push(l);
        cur = next;
    }
    LadderTuple { ladders }
}

/// `l2` dominant with respect to `l1`.
pub fn is_dominant(l2: &Ladder, l1: &Ladder) -> bool {
    let (a, b) = (l2.segments(), l1.segments());
    a.len() >= b.len() && b.iter().zip(a).all(|(x, y)| x.left_shift().precedes(y))
}

fn dominant_slices(a: &[Segment], b: &[Segment]) -> bool {
    a.len() >= b.len() && b.iter().zip(a).all(|(x, y)| x.left_shift().precedes(y))
}

/// First violated clause of permissibility for `(l2, l1)`, both top-first.
fn permissibility_violation(a: &[Segment], b: &[Segment]) -> Option<String> {
    if !dominant_slices(a, b) {
        return Some(format!(
            "{} is not dominant over {}",
            Multisegment::new(a.to_vec()),
            Multisegment::new(b.to_vec())
        ));
    }
    let kp = a.len();
    for (i, x) in b.iter().enumerate() {
        let xs = x.left_shift();
        for j in 0..kp {
            if xs.precedes(&a[j]) && (j + 1 == kp || !xs.precedes(&a[j + 1])) {
                for r in 0..=i {
                    if b[r].e() < a[j - i + r].b() {
                        return Some(format!("e({}) < b({})", b[r], a[j - i + r]));
                    }
                }
            }
        }
    }
    None
}

pub fn is_permissible(l2: &Ladder, l1: &Ladder) -> bool {
    permissibility_violation(l2.segments(), l1.segments()).is_none()
}

/// Maximal `≪`-chains over the distinct values of `m`, each top-first.
pub fn maximal_chains(m: &Multisegment) -> Vec<Vec<Segment>> {
    let mut vals: Vec<Segment> = m.segments().to_vec();
    vals.dedup();
    let n = vals.len();
    let covers_below: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| {
                    vals[y].precedes(&vals[x])
                        && !(0..n).any(|z| vals[y].precedes(&vals[z]) && vals[z].precedes(&vals[x]))
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> =
        (0..n).filter(|&x| !(0..n).any(|y| vals[x].precedes(&vals[y]))).map(|x| vec![x]).collect();
    stack.reverse();
    while let Some(path) = stack.pop() {
        let below = &covers_below[*path.last().unwrap()];
        if below.is_empty() {
            out.push(path.iter().map(|&i| vals[i]).collect());
        } else {
            for &y in below.iter().rev() {
                let mut p = path.clone();
                p.push(y);
                stack.push(p);
            }
        }
    }
    out
}

fn pair_violation(l: &Ladder, m: &Multisegment) -> Option<String> {
    maximal_chains(m).into_iter().find_map(|c| permissibility_violation(l.segments(), &c))
}

/// `(l, l')` permissible for every ladder `l'` inside `m`.
pub fn is_permissible_pair(l: &Ladder, m: &Multisegment) -> bool {
    pair_violation(l, m).is_none()
}

/// `K'(l, m)`, the inverse of `k_step` on permissible pairs.
pub fn k_inverse(l: &Ladder, m: &Multisegment) -> Result<Multisegment> {
    if let Some(w) = pair_violation(l, m) {
        return Err(Error::NotPermissible(w));
    }
    let segs = m.segments();
    let lad = l.segments();
    let n = segs.len();
    let mut f = vec![0usize; n];
    // Canonical order has decreasing begin points, so reverse order sees every
    // `Δ_j ≪ Δ_i` before `i`.
    for i in (0..n).rev() {
        let xs = segs[i].left_shift();
        let g = (0..lad.len())
            .rev()
            .find(|&j| xs.precedes(&lad[j]))
            .ok_or_else(|| Error::NotPermissible(format!("no ladder segment above {xs}")))?;
        let mut v = g as i64;
        for j in i + 1..n {
            if segs[j].precedes(&segs[i]) {
                v = v.min(f[j] as i64 - 1);
            }
        }
        if v < 0 {
            return Err(Error::NotPermissible(format!("{} cannot be placed below the ladder", segs[i])));
        }
        f[i] = v as usize;
    }
    let mut out = Vec::with_capacity(n + lad.len());
    for (j, top) in lad.iter().enumerate() {
        let mut y: Vec<usize> = (0..n).filter(|&i| f[i] == j).collect();
        y.sort_by_key(|&i| (segs[i].b(), -segs[i].e(), i));
        let mut cyc: Vec<Segment> = y.iter().map(|&i| segs[i]).collect();
        cyc.push(*top);
        for r in 0..cyc.len() {
            let next = cyc[(r + 1) % cyc.len()];
            out.push(joined(next.b(), cyc[r].e())?);
        }
    }
    let res = Multisegment::new(out);
    let (l2, m2) = k_step(&res)?;
    if &l2 != l || &m2 != m {
        return Err(Error::Internal(format!("K'({l}, {m}) = {res} does not invert")));
    }
    Ok(res)
}

/// Inverse of `rsk`, rebuilding from the last ladder. Fails with the first
/// non-permissible pair, or when the rebuilt multisegment has a different RSK.
pub fn rsk_inverse(t: &LadderTuple) -> Result<Multisegment> {
    let mut acc = Multisegment::zero();
    for l in t.ladders.iter().rev() {
        acc = if acc.is_zero() { l.to_multisegment() } else { k_inverse(l, &acc)? };
    }
    if rsk(&acc) != *t {
        return Err(Error::Mismatch(format!("rsk({acc}) = {} differs from {t}", rsk(&acc))));
    }
    Ok(acc)
}

pub fn in_image(t: &LadderTuple) -> bool {
    rsk_inverse(t).is_ok()
}

/// Longest containment chain over distinct indices.
pub fn width(m: &Multisegment) -> usize {
    let mut segs: Vec<Segment> = m.segments().to_vec();
    segs.sort_by_key(|s| (std::cmp::Reverse(s.len()), s.b(), s.e()));
    let mut best = vec![1usize; segs.len()];
    for i in 0..segs.len() {
        for j in 0..i {
            if segs[i].is_contained_in(&segs[j]) {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// `V(m) = (l_k, RSK⁻¹(l_1, …, l_{k-1}))`; `rest` is `None` when the prefix
/// is not in the image of RSK.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowestLadder {
    pub lowest: Ladder,
    pub rest: Option<Multisegment>,
}

pub fn lowest_ladder(m: &Multisegment) -> Option<LowestLadder> {
    let mut t = rsk(m);
    let lowest = t.ladders.pop()?;
    let rest = rsk_inverse(&t).ok();
    Some(LowestLadder { lowest, rest })
}
