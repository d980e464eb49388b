//! The socle recursion `soc(m, l)` and what is built from it.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mw::{mw_involution, mw_step};
use crate::rsk::{rsk, LadderTuple};
use crate::segment::{Ladder, Multisegment, Segment};

/// Multisegment label of the socle of `Z(m) × Z(l)`. Only genuine parts take part.
pub fn socle(m: &Multisegment, l: &Ladder) -> Result<Multisegment> {
    socle_segments(&m.genuine(), l.genuine_segments())
}

fn socle_segments(m: &Multisegment, mut l: Vec<Segment>) -> Result<Multisegment> {
    if l.is_empty() {
        return Ok(m.clone());
    }
    if m.is_zero() {
        return Ok(Multisegment::new(l));
    }
    let min_l = l.iter().map(Segment::b).min().unwrap();
    let min_m = m.min_begin().unwrap();
    if min_l <= min_m {
        // The bottom of the ladder absorbs the segments of m it contains at b(Δ).
        let pos = l.iter().position(|s| s.b() == min_l).unwrap();
        let d = l.remove(pos);
        let n: Vec<Segment> = m.iter().copied().filter(|s| s.b() == d.b() && s.e() <= d.e()).collect();
        let rest = m.difference(&Multisegment::new(n.clone())).expect("n is part of m");
        let inner = socle_segments(&rest, l)?;
        return Ok(inner.sum(&Multisegment::new(n)).with(d));
    }
    let step = mw_step(m)?;
    let n = socle_segments(&step.m_dagger, l.clone())?;
    let limit = if cfg!(debug_assertions) { 2 } else { 1 };
    let pre = mw_preimages(&n, step.delta_circ, limit);
    match pre.as_slice() {
        [p] => Ok(p.clone()),
        [] => Err(Error::Internal(format!(
            "no MW preimage of ({n}, {}) while computing soc({m}, {})",
            step.delta_circ,
            Multisegment::new(l)
        ))),
        _ => Err(Error::Internal(format!("MW preimage of ({n}, {}) is not unique", step.delta_circ))),
    }
}

/// Multisegments `p` with `MW(p) = (n, Δ)`, by re-attaching the column
/// `a, a+1, …, b` of `Δ = [a,b]`: each point either starts a new `[c,c]` or is
/// prepended to a segment `[c+1, e]` of `n`. Stops after `limit` distinct hits.
pub fn mw_preimages(n: &Multisegment, delta: Segment, limit: usize) -> Vec<Multisegment> {
    let segs = n.segments();
    let k = delta.len() as usize;
    let mut found = BTreeSet::new();
    let mut used = vec![false; segs.len()];
    let mut created = Vec::new();
    fn go(
        j: usize,
        prev_e: i64,
        ctx: (&[Segment], usize, Segment, &Multisegment, usize),
        used: &mut Vec<bool>,
        created: &mut Vec<Segment>,
        found: &mut BTreeSet<Multisegment>,
    ) {
        let (segs, k, delta, n, limit) = ctx;
        if found.len() >= limit {
            return;
        }
        if j == k {
            let p = Multisegment::new(
                segs.iter()
                    .zip(used.iter())
                    .map(|(s, &u)| if u { Segment::raw(s.b() - 1, s.e()) } else { *s })
                    .chain(created.iter().copied()),
            );
            if let Ok(r) = mw_step(&p) {
                if &r.m_dagger == n && r.delta_circ == delta {
                    found.insert(p);
                }
            }
            return;
        }
        let c = delta.b() + j as i32;
        if c as i64 > prev_e {
            created.push(Segment::raw(c, c));
            go(j + 1, c as i64, ctx, used, created, found);
            created.pop();
        }
        for t in 0..segs.len() {
            // Equal segments are interchangeable; try the first unused copy only.
            if used[t] || (t > 0 && segs[t - 1] == segs[t] && !used[t - 1]) {
                continue;
            }
            if segs[t].b() == c + 1 && segs[t].e() as i64 > prev_e {
                used[t] = true;
                go(j + 1, segs[t].e() as i64, ctx, used, created, found);
                used[t] = false;
            }
        }
    }
    go(0, i64::MIN, (segs, k, delta, n, limit), &mut used, &mut created, &mut found);
    found.into_iter().collect()
}

/// `(soc(m∨, l∨))∨`, the socle of `Z(l) × Z(m)`.
pub fn socle_left(l: &Ladder, m: &Multisegment) -> Result<Multisegment> {
    Ok(socle(&m.contragredient(), &l.contragredient())?.contragredient())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

/// Folds the socle over a ladder tuple. The right side starts from the last
/// ladder, `π_i = soc(π_{i+1} × Z(l_i))`; the left side starts from the first,
/// `π'_i = soc(Z(l_i) × π'_{i-1})`.
pub fn socle_chain(t: &LadderTuple, side: Side) -> Result<Multisegment> {
    let mut acc = Multisegment::zero();
    match side {
        Side::Right => {
            for l in t.ladders.iter().rev() {
                acc = socle(&acc, l)?;
            }
        }
        Side::Left => {
            for l in &t.ladders {
                acc = socle_left(l, &acc)?;
            }
        }
    }
    Ok(acc)
}

/// Factor order of `ζ(m)`: no earlier segment precedes a later one.
pub fn zeta_factors(m: &Multisegment) -> Vec<Segment> {
    m.genuine().segments().to_vec()
}

/// Factor order of `λ(m) = L(Δ_k) × ⋯ × L(Δ_1)`.
pub fn lambda_factors(m: &Multisegment) -> Vec<Segment> {
    let mut v = zeta_factors(m);
    v.reverse();
    v
}

/// `Λ_∂(m)`: genuine parts of the ladders of `RSK(m + ∂)`, empty ones dropped,
/// in product order `l_k, …, l_1`.
pub fn rsk_standard_factors(m: &Multisegment, dummies: &Multisegment) -> Result<Vec<Ladder>> {
    if !m.has_genuine() {
        return Err(Error::Empty("rsk_standard_factors"));
    }
    if dummies.has_genuine() {
        return Err(Error::Domain("the dummy part may only hold dummies".into()));
    }
    let t = rsk(&m.sum(dummies));
    Ok(t.ladders.iter().rev().filter_map(Ladder::genuine).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Interpolation {
    ZelevinskyMatch,
    LanglandsMatch,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpolationReport {
    /// `None` when a hypothesis of the clause fails, otherwise whether the factors match.
    pub zelevinsky: Option<bool>,
    pub langlands: Option<bool>,
    pub factors: Vec<Ladder>,
}

impl InterpolationReport {
    /// A clause whose hypotheses hold but whose factors differ is a mismatch.
    /// When both clauses apply, the Zelevinsky side is reported.
    pub fn classification(&self) -> Result<Interpolation> {
        if self.zelevinsky == Some(false) || self.langlands == Some(false) {
            return Err(Error::Mismatch("standard-module factors disagree with a satisfied clause".into()));
        }
        Ok(if self.zelevinsky == Some(true) {
            Interpolation::ZelevinskyMatch
        } else if self.langlands == Some(true) {
            Interpolation::LanglandsMatch
        } else {
            Interpolation::Neither
        })
    }
}

fn sorted(mut v: Vec<Ladder>) -> Vec<Ladder> {
    v.sort();
    v
}

pub fn interpolation_report(m: &Multisegment, dummies: &Multisegment) -> Result<InterpolationReport> {
    if !m.is_genuine() {
        return Err(Error::Enhanced("interpolation_check (pass dummies separately)"));
    }
    let factors = rsk_standard_factors(m, dummies)?;
    let nd = |a: i32| dummies.dummy_multiplicity(a);
    let ends: Vec<i32> = m.iter().map(Segment::e).collect();
    let count_e = |e: i32| ends.iter().filter(|&&x| x == e).count();
    let support = dummies.dummy_support();

    let first_a = ends.iter().all(|&ei| ends.iter().filter(|&&ej| ej < ei).all(|&ej| nd(ei) >= nd(ej) + count_e(ej)));
    let first_b = ends.iter().all(|&ei| support.iter().filter(|&&t| t < ei).all(|&t| nd(t) <= nd(ei)));
    let r = m.len();
    let (lo, hi) = (m.min_begin().unwrap(), m.max_end().unwrap());
    let second = (lo..hi).all(|i| nd(i) >= nd(i + 1) + r);

    let have = sorted(factors.clone());
    let zelevinsky = (first_a && first_b).then(|| have == sorted(m.iter().map(|s| Ladder::single(*s)).collect()));
    let langlands = if second {
        let sharp = mw_involution(m)?;
        let target: Vec<Ladder> = sharp
            .iter()
            .map(|s| Ladder::new((s.b()..=s.e()).map(|c| Segment::raw(c, c))).expect("singletons form a ladder"))
            .collect();
        Some(have == sorted(target))
    } else {
        None
    };
    Ok(InterpolationReport { zelevinsky, langlands, factors })
}

pub fn interpolation_check(m: &Multisegment, dummies: &Multisegment) -> Result<Interpolation> {
    interpolation_report(m, dummies)?.classification()
}
