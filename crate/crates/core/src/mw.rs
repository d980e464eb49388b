//! The Moeglin-Waldspurger step `m -> (m†, Δ°(m))` and its iterates.

use crate::error::{Error, Result};
use crate::segment::{Multisegment, Segment};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MwStepResult {
    pub m_dagger: Multisegment,
    pub delta_circ: Segment,
    /// Indices into `m.segments()` of the leading chain, in chain order.
    pub leading: Vec<usize>,
}

/// Greedy leading chain, drawn from the genuine part only.
pub fn leading_indices(m: &Multisegment) -> Result<Vec<usize>> {
    let segs = m.segments();
    let pick = |pred: &dyn Fn(&Segment) -> bool| -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, s) in segs.iter().enumerate() {
            if s.is_genuine() && pred(s) && best.is_none_or(|j| s.e() < segs[j].e()) {
                best = Some(i);
            }
        }
        best
    };
    let lo = m.min_begin().ok_or(Error::Empty("the leading chain"))?;
    let mut chain = vec![pick(&|s| s.b() == lo).expect("min is attained")];
    loop {
        let last = segs[*chain.last().unwrap()];
        match pick(&|s| s.b() == last.b() + 1 && s.e() > last.e()) {
            Some(i) => chain.push(i),
            None => return Ok(chain),
        }
    }
}

fn step(m: &Multisegment, keep_dummies: bool) -> Result<MwStepResult> {
    let leading = leading_indices(m)?;
    let lo = m.segments()[leading[0]].b();
    let mut out = Vec::with_capacity(m.len());
    for (i, s) in m.segments().iter().enumerate() {
        if !leading.contains(&i) {
            out.push(*s);
        } else if keep_dummies {
            out.push(s.truncate_enhanced());
        } else if let Some(t) = s.truncate() {
            out.push(t);
        }
    }
    Ok(MwStepResult {
        m_dagger: Multisegment::new(out),
        delta_circ: Segment::raw(lo, lo + leading.len() as i32 - 1),
        leading,
    })
}

/// One MW step on a genuine multisegment; truncated singletons are discarded.
pub fn mw_step(m: &Multisegment) -> Result<MwStepResult> {
    if !m.is_genuine() {
        return Err(Error::Enhanced("mw_step (use mw_step_enhanced)"));
    }
    step(m, false)
}

/// The enhanced step: a leading `[a,a]` becomes `d(a)` and dummies pass through.
pub fn mw_step_enhanced(m: &Multisegment) -> Result<MwStepResult> {
    step(m, true)
}

/// End-point variant `((m∨)†)∨`, with `Δ_∘ = (Δ°(m∨))∨`. Enhanced
/// inputs use the enhanced step.
pub fn mw_step_dual(m: &Multisegment) -> Result<MwStepResult> {
    let mv = m.contragredient();
    let r = if m.is_genuine() { mw_step(&mv)? } else { mw_step_enhanced(&mv)? };
    // Carry the leading indices back to positions in `m`, matching by value.
    let mut used = vec![false; m.len()];
    let mut leading = Vec::with_capacity(r.leading.len());
    for &i in &r.leading {
        let target = mv.segments()[i].contragredient();
        let j = (0..m.len())
            .find(|&j| !used[j] && m.segments()[j] == target)
            .ok_or_else(|| Error::Internal("dual leading index lost".into()))?;
        used[j] = true;
        leading.push(j);
    }
    Ok(MwStepResult { m_dagger: r.m_dagger.contragredient(), delta_circ: r.delta_circ.contragredient(), leading })
}

/// `m#`, accumulated iteratively.
pub fn mw_involution(m: &Multisegment) -> Result<Multisegment> {
    if !m.is_genuine() {
        return Err(Error::Enhanced("mw_involution"));
    }
    let mut acc = Vec::new();
    let mut cur = m.clone();
    while !cur.is_zero() {
        let r = step(&cur, false)?;
        acc.push(r.delta_circ);
        cur = r.m_dagger;
    }
    Ok(Multisegment::new(acc))
}

/// Iterates the enhanced step until no genuine segment is left. Returns the
/// accumulated `Δ°` segments and the dummies remaining at the end.
pub fn mw_involution_enhanced(m: &Multisegment) -> (Multisegment, Multisegment) {
    let mut acc = Vec::new();
    let mut cur = m.clone();
    while cur.has_genuine() {
        let r = step(&cur, true).expect("genuine part is nonzero");
        acc.push(r.delta_circ);
        cur = r.m_dagger;
    }
    (Multisegment::new(acc), cur)
}

/// True iff `[min m, min m]` does not occur in `m`.
pub fn is_nondegenerate(m: &Multisegment) -> Result<bool> {
    let lo = m.min_begin().ok_or(Error::Empty("is_nondegenerate"))?;
    Ok(!m.iter().any(|s| s.b() == lo && s.e() == lo))
}
