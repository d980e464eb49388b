//! Independent reference implementations used to cross-check the library.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use mwrsk::rsk::is_permissible;
use mwrsk::{Ladder, Multisegment, Segment};

/// Box-by-box insertion: segments in order of decreasing end (ties by
/// increasing begin), begins bump the first entry `<=` them, ends are recorded.
pub fn bump_rsk(m: &Multisegment) -> (Vec<Vec<i32>>, Vec<Vec<i32>>) {
    let mut segs: Vec<(i32, i32)> = m.iter().map(|s| (s.b(), s.e())).collect();
    segs.sort_by_key(|&(b, e)| (-e, b));
    let (mut p, mut q): (Vec<Vec<i32>>, Vec<Vec<i32>>) = (Vec::new(), Vec::new());
    for (b, e) in segs {
        let mut x = b;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![e]);
                break;
            }
            match p[r].iter().position(|&y| y <= x) {
                None => {
                    p[r].push(x);
                    q[r].push(e);
                    break;
                }
                Some(j) => {
                    std::mem::swap(&mut p[r][j], &mut x);
                    r += 1;
                }
            }
        }
    }
    (p, q)
}

fn compose_simple(w: &mut [usize], i: usize) {
    w.swap(i - 1, i);
}

fn inversions(w: &[usize]) -> usize {
    (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
}

/// Some reduced word of `w`, built by bubble sort and independent of the library.
fn bubble_word(w: &[usize]) -> Vec<usize> {
    let mut v = w.to_vec();
    let mut word = Vec::new();
    loop {
        let Some(i) = (1..v.len()).find(|&i| v[i - 1] > v[i]) else { break };
        v.swap(i - 1, i);
        word.push(i);
    }
    // v = w * s_{word[0]} * ... ; so w = s_{word[last]} ... s_{word[0]} applied on the right of identity.
    word.reverse();
    word
}

/// Everything below `v` in Bruhat order: products of reduced subwords of a
/// reduced word of `v`.
pub fn bruhat_interval(v: &[usize]) -> BTreeSet<Vec<usize>> {
    let word = bubble_word(v);
    let n = v.len();
    let mut id: Vec<usize> = (1..=n).collect();
    for &i in &word {
        compose_simple(&mut id, i);
    }
    assert_eq!(id, v, "bubble word does not spell the permutation");
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << word.len()) {
        let mut w: Vec<usize> = (1..=n).collect();
        let mut len = 0;
        for (k, &i) in word.iter().enumerate() {
            if mask & (1 << k) != 0 {
                compose_simple(&mut w, i);
                len += 1;
            }
        }
        if inversions(&w) == len {
            out.insert(w);
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for k in 1..=n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..k).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, k);
                    q
                })
            })
            .collect();
    }
    out
}

/// One elementary Knuth move in either direction at every position.
fn knuth_neighbours(w: &[i32]) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for i in 0..w.len().saturating_sub(2) {
        let (a, b, c) = (w[i], w[i + 1], w[i + 2]);
        // x z y <-> z x y with x <= y < z
        if (a <= c && c < b) || (b <= c && c < a) {
            let mut v = w.to_vec();
            v.swap(i, i + 1);
            out.push(v);
        }
        // y x z <-> y z x with x < y <= z
        if (b < a && a <= c) || (c < a && a <= b) {
            let mut v = w.to_vec();
            v.swap(i + 1, i + 2);
            out.push(v);
        }
    }
    out
}

pub fn knuth_class(w: &[i32]) -> BTreeSet<Vec<i32>> {
    let mut seen = BTreeSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(u) = queue.pop_front() {
        for v in knuth_neighbours(&u) {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen
}

/// All ways to cut `w` into consecutive nonempty rows, listed bottom row first.
fn cuts(w: &[i32]) -> Vec<Vec<Vec<i32>>> {
    if w.is_empty() {
        return vec![vec![]];
    }
    let n = w.len();
    (0u32..(1 << (n - 1)))
        .map(|mask| {
            let mut rows = vec![vec![w[0]]];
            for i in 1..n {
                if mask & (1 << (i - 1)) != 0 {
                    rows.push(Vec::new());
                }
                rows.last_mut().unwrap().push(w[i]);
            }
            rows
        })
        .collect()
}

/// Rows left-aligned, weakly increasing, columns strictly increasing downward.
pub fn is_tableau_word(w: &[i32]) -> bool {
    cuts(w).into_iter().any(|mut rows| {
        rows.reverse();
        rows.iter().all(|r| r.windows(2).all(|p| p[0] <= p[1]))
            && rows.windows(2).all(|p| p[0].len() >= p[1].len() && p[1].iter().zip(&p[0]).all(|(lo, hi)| hi < lo))
    })
}

/// Rows right-aligned, weakly increasing, columns strictly increasing downward.
pub fn is_antitableau_word(w: &[i32]) -> bool {
    cuts(w).into_iter().any(|mut rows| {
        rows.reverse();
        rows.iter().all(|r| r.windows(2).all(|p| p[0] <= p[1]))
            && rows.windows(2).all(|p| {
                p[0].len() <= p[1].len() && p[0].iter().rev().zip(p[1].iter().rev()).all(|(up, down)| up < down)
            })
    })
}

pub fn words(len: usize, alphabet: i32) -> Vec<Vec<i32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<i32>| {
                (1..=alphabet).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// Partition of a Knuth-closed set of words into classes.
pub fn knuth_classes(all: Vec<Vec<i32>>) -> Vec<BTreeSet<Vec<i32>>> {
    let mut owner: HashMap<Vec<i32>, usize> = HashMap::new();
    let mut classes = Vec::new();
    for w in all {
        if owner.contains_key(&w) {
            continue;
        }
        let c = knuth_class(&w);
        for u in &c {
            owner.insert(u.clone(), classes.len());
        }
        classes.push(c);
    }
    classes
}

/// Permissibility of `(l, l')` for every ladder `l'` inside `m`, over all
/// sub-chains rather than the maximal ones.
pub fn permissible_all_chains(l: &Ladder, m: &Multisegment) -> bool {
    let mut vals: Vec<Segment> = m.segments().to_vec();
    vals.dedup();
    let n = vals.len();
    for mask in 1u32..(1 << n) {
        let chain: Vec<Segment> = (0..n).filter(|&i| mask & (1 << i) != 0).map(|i| vals[i]).collect();
        if let Ok(sub) = Ladder::new(chain) {
            if !is_permissible(l, &sub) {
                return false;
            }
        }
    }
    true
}
