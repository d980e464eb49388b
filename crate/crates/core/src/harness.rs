//! Desk-scale enumeration and the verification suites built on it.
//!
//! Every suite maps a per-instance check over a finite domain. Instances are
//! split into tasks in a fixed order, checked in parallel, and merged in task
//! order, so a report never depends on scheduling.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mw::{
    is_nondegenerate, leading_indices, mw_involution, mw_involution_enhanced, mw_step, mw_step_dual, mw_step_enhanced,
};
use crate::ring::{drs_basis_check, is_saturated, Grade};
use crate::rsk::{
    depth_table, depths, in_image, is_dominant, is_permissible_pair, k_inverse, k_step, lowest_ladder, rsk,
    rsk_inverse, width, LadderTuple,
};
use crate::segment::{Ladder, Multisegment, Segment};
use crate::socle::{interpolation_report, mw_preimages, socle, socle_chain, socle_left, Interpolation, Side};
use crate::tableaux::{
    dominance, from_ladder_tuple, restrict_geq, rsk_pair, schuetzenberger_report, tableau_leq, to_ladder_tuple,
    InvertedTableau, Shape,
};
use crate::words::{
    self, crsk, crsk_inverse, gl_step, inv, inv_inverse, iota, iota_inverse, key_predicates, mw_words, pieri_factor,
    RowTuple, Strip,
};

/// Environment variable overriding the enumeration cap.
pub const CAP_ENV: &str = "MWRSK_ENUM_CAP";
const DEFAULT_CAP: u128 = 20_000_000;
const KEPT_FAILURES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumSpec {
    /// Begin and end points (or letters and indices for row tuples) lie in `lo..=hi`.
    pub lo: i32,
    pub hi: i32,
    /// Genuine segments, letters, or grade size, depending on the domain.
    pub max_segments: usize,
    pub max_size: Option<u64>,
    /// Maximal multiplicity of each dummy `d(a)`, `lo - 1 <= a <= hi`.
    pub dummy_budget: usize,
}

impl EnumSpec {
    pub const fn window(lo: i32, hi: i32, max_segments: usize) -> EnumSpec {
        EnumSpec { lo, hi, max_segments, max_size: None, dummy_budget: 0 }
    }

    pub const fn with_dummies(self, dummy_budget: usize) -> EnumSpec {
        EnumSpec { dummy_budget, ..self }
    }

    fn validate(&self) -> Result<()> {
        if self.lo > self.hi {
            return Err(Error::Domain(format!("empty window {}..{}", self.lo, self.hi)));
        }
        Segment::new(self.lo as i64 - 1, self.hi as i64)?;
        Ok(())
    }
}

impl fmt::Display for EnumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "window {}..{}, at most {}", self.lo, self.hi, self.max_segments)?;
        if let Some(s) = self.max_size {
            write!(f, ", size <= {s}")?;
        }
        if self.dummy_budget > 0 {
            write!(f, ", dummies <= {} per point", self.dummy_budget)?;
        }
        Ok(())
    }
}

pub fn enum_cap() -> u128 {
    std::env::var(CAP_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_CAP)
}

fn choose(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Multisets of size at most `k` drawn from `n` kinds.
fn multisets_up_to(n: usize, k: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    choose((n + k) as u128, k as u128)
}

fn check_budget(projected: u128) -> Result<()> {
    let cap = enum_cap();
    if projected > cap {
        return Err(Error::Budget { projected, cap });
    }
    Ok(())
}

fn window_segments(lo: i32, hi: i32) -> Vec<Segment> {
    (lo..=hi).flat_map(|a| (a..=hi).map(move |b| Segment::raw(a, b))).collect()
}

/// Calls `f` on every multiset of exactly `k` items (as indices, non-decreasing).
fn for_each_multiset(n: usize, k: usize, first: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for i in first..n {
        cur.push(i);
        for_each_multiset(n, k, i, cur, f);
        cur.pop();
    }
}

/// Projected size of [`enumerate`] without generating anything.
pub fn projected_count(spec: &EnumSpec) -> u128 {
    let n = window_segments(spec.lo, spec.hi).len();
    let points = (spec.hi - spec.lo + 2) as u32;
    multisets_up_to(n, spec.max_segments).saturating_mul(((spec.dummy_budget + 1) as u128).saturating_pow(points))
}

/// All multisegments within the spec, each exactly once: by number of genuine
/// segments, then lexicographically, then by dummy configuration.
pub fn enumerate(spec: &EnumSpec) -> Result<Vec<Multisegment>> {
    spec.validate()?;
    check_budget(projected_count(spec))?;
    let segs = window_segments(spec.lo, spec.hi);
    let mut genuine = Vec::new();
    for k in 0..=spec.max_segments {
        for_each_multiset(segs.len(), k, 0, &mut Vec::new(), &mut |ix| {
            let m = Multisegment::new(ix.iter().map(|&i| segs[i]));
            if spec.max_size.is_none_or(|s| m.size() <= s) {
                genuine.push(m);
            }
        });
    }
    if spec.dummy_budget == 0 {
        return Ok(genuine);
    }
    let tails = dummy_configurations(spec);
    Ok(genuine.iter().flat_map(|g| tails.iter().map(move |d| g.sum(d))).collect())
}

fn dummy_configurations(spec: &EnumSpec) -> Vec<Multisegment> {
    let mut out = vec![Multisegment::zero()];
    for a in spec.lo - 1..=spec.hi {
        out = out
            .iter()
            .flat_map(|d| {
                (0..=spec.dummy_budget).map(move |c| d.sum(&Multisegment::new(vec![Segment::raw(a + 1, a); c])))
            })
            .collect();
    }
    out
}

/// Row tuples of total length at most `max_segments`, letters and indices in
/// `lo..=hi` (at least 1), streamed in blocks keyed by (length, first letter).
fn tuple_tasks(spec: &EnumSpec) -> Result<Vec<Task>> {
    if spec.lo < 1 {
        return Err(Error::Domain("row tuples need positive letters and indices".into()));
    }
    let pairs: Vec<(u32, i32)> =
        (spec.lo..=spec.hi).flat_map(|i| (spec.lo..=spec.hi).map(move |v| (i as u32, v))).collect();
    check_budget(multisets_up_to(pairs.len(), spec.max_segments))?;
    let mut tasks: Vec<Task> = vec![Box::new(|f: &mut dyn FnMut(Instance)| f(Instance::Tuple(RowTuple::default())))];
    for k in 1..=spec.max_segments {
        for first in 0..pairs.len() {
            let pairs = pairs.clone();
            tasks.push(Box::new(move |f: &mut dyn FnMut(Instance)| {
                let mut cur = vec![first];
                for_each_multiset(pairs.len(), k, first, &mut cur, &mut |ix| {
                    let u = RowTuple::from_letters(ix.iter().map(|&i| pairs[i])).expect("letters in range");
                    f(Instance::Tuple(u));
                });
            }));
        }
    }
    Ok(tasks)
}

pub fn window_ladders(lo: i32, hi: i32, max_len: usize) -> Vec<Ladder> {
    let segs = window_segments(lo, hi);
    let mut out = Vec::new();
    fn grow(chain: &mut Vec<Segment>, segs: &[Segment], max_len: usize, out: &mut Vec<Ladder>) {
        out.push(Ladder::new(chain.iter().copied()).expect("strict chain"));
        if chain.len() == max_len {
            return;
        }
        let last = *chain.last().unwrap();
        for &s in segs {
            if s.precedes(&last) {
                chain.push(s);
                grow(chain, segs, max_len, out);
                chain.pop();
            }
        }
    }
    for &s in &segs {
        grow(&mut vec![s], &segs, max_len, &mut out);
    }
    out
}

/// Dominance chains of ladders with at most `max_segments` segments in total.
pub fn window_ladder_tuples(spec: &EnumSpec) -> Vec<LadderTuple> {
    let ladders = window_ladders(spec.lo, spec.hi, spec.max_segments);
    let mut out = Vec::new();
    fn grow(cur: &mut Vec<Ladder>, left: usize, ladders: &[Ladder], out: &mut Vec<LadderTuple>) {
        out.push(LadderTuple::new(cur.clone()));
        for l in ladders {
            if l.len() <= left && cur.last().is_none_or(|p| is_dominant(p, l)) {
                cur.push(l.clone());
                grow(cur, left - l.len(), ladders, out);
                cur.pop();
            }
        }
    }
    grow(&mut Vec::new(), spec.max_segments, &ladders, &mut out);
    out
}

fn subsets(points: &[i32], max: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << points.len()) {
        if mask.count_ones() as usize <= max {
            out.push((0..points.len()).filter(|&i| mask & (1 << i) != 0).map(|i| points[i]).collect());
        }
    }
    out
}

/// Multisets of size `k` over `set` using every element at least once.
fn covering_multisets(set: &[i32], k: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    if k < set.len() {
        return out;
    }
    for_each_multiset(set.len(), k - set.len(), 0, &mut Vec::new(), &mut |ix| {
        let mut v: Vec<i32> = set.to_vec();
        v.extend(ix.iter().map(|&i| set[i]));
        v.sort_unstable();
        out.push(v);
    });
    out
}

const DRS_SET_MAX: usize = 3;

fn drs_instances(spec: &EnumSpec, saturated: bool) -> Vec<Instance> {
    let points: Vec<i32> = (spec.lo..=spec.hi).collect();
    let sets = subsets(&points, DRS_SET_MAX);
    let mut out = Vec::new();
    for a in &sets {
        for b in &sets {
            if is_saturated(a, b) != saturated {
                continue;
            }
            for k in a.len().max(b.len())..=spec.max_segments {
                for gb in covering_multisets(a, k) {
                    for ge in covering_multisets(b, k) {
                        let grade = Grade::new(gb.clone(), ge).expect("equal sizes");
                        out.push(Instance::Drs { a: a.clone(), b: b.clone(), grade });
                    }
                }
            }
        }
    }
    out
}

/// Inverted tableaux filled with exactly the given entries.
pub fn inverted_tableaux_with(entries: &[i32]) -> Vec<InvertedTableau> {
    let mut pool: BTreeMap<i32, usize> = BTreeMap::new();
    for &x in entries {
        *pool.entry(x).or_default() += 1;
    }
    let mut out = Vec::new();
    for shape in partitions(entries.len()) {
        let mut rows: Vec<Vec<i32>> = shape.iter().map(|&l| Vec::with_capacity(l)).collect();
        fill_inverted(&shape, 0, &mut rows, &mut pool, &mut out);
    }
    out
}

fn fill_inverted(
    shape: &[usize],
    cell: usize,
    rows: &mut Vec<Vec<i32>>,
    pool: &mut BTreeMap<i32, usize>,
    out: &mut Vec<InvertedTableau>,
) {
    let total: usize = shape.iter().sum();
    if cell == total {
        out.push(InvertedTableau::new(rows.clone()).expect("constraints enforced while filling"));
        return;
    }
    let (mut i, mut j, mut acc) = (0, 0, 0);
    while acc + shape[i] <= cell {
        acc += shape[i];
        i += 1;
    }
    j += cell - acc;
    let values: Vec<i32> = pool.iter().filter(|(_, &c)| c > 0).map(|(&v, _)| v).collect();
    for v in values {
        let row_ok = j == 0 || rows[i][j - 1] > v;
        let col_ok = i == 0 || rows[i - 1][j] >= v;
        if row_ok && col_ok {
            *pool.get_mut(&v).unwrap() -= 1;
            rows[i].push(v);
            fill_inverted(shape, cell + 1, rows, pool, out);
            rows[i].pop();
            *pool.get_mut(&v).unwrap() += 1;
        }
    }
}

fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

// ---------------------------------------------------------------------------
// Instances and reports

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Multi(Multisegment),
    Pair(Ladder, Multisegment),
    Tuple(RowTuple),
    Ladders(LadderTuple),
    Drs { a: Vec<i32>, b: Vec<i32>, grade: Grade },
    Entries(Vec<i32>),
}

fn join(v: &[i32]) -> String {
    v.iter().map(i32::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Multi(m) => write!(f, "{m}"),
            Instance::Pair(l, m) => write!(f, "{l} | {m}"),
            Instance::Tuple(u) => write!(f, "{u}"),
            Instance::Ladders(t) => write!(f, "{t}"),
            Instance::Drs { a, b, grade } => write!(f, "a={};b={};grade={grade}", join(a), join(b)),
            Instance::Entries(v) => write!(f, "{}", join(v)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Domain {
    /// Genuine multisegments, or enhanced ones when the spec allows dummies.
    Multisegments,
    /// Like `Multisegments` but the genuine part must be nonzero.
    NonzeroGenuinePart,
    /// A ladder and a multisegment, `|l| + |m| <= max_segments`.
    Pairs,
    RowTuples,
    LadderTuples,
    DrsSaturated,
    DrsUnsaturated,
    TableauEntries,
}

impl Domain {
    pub fn parse_instance(self, text: &str) -> Result<Instance> {
        Ok(match self {
            Domain::Multisegments | Domain::NonzeroGenuinePart => Instance::Multi(Multisegment::parse_any(text)?),
            Domain::Pairs => {
                let (l, m) = text
                    .split_once('|')
                    .ok_or_else(|| Error::Parse { pos: 0, msg: "expected `ladder | multisegment`".into() })?;
                Instance::Pair(l.parse()?, m.parse()?)
            }
            Domain::RowTuples => Instance::Tuple(RowTuple::parse_any(text)?),
            Domain::LadderTuples => Instance::Ladders(text.parse()?),
            Domain::DrsSaturated | Domain::DrsUnsaturated => {
                let mut a = None;
                let mut b = None;
                let mut grade = None;
                for part in text.split(';') {
                    match part.trim().split_once('=') {
                        Some(("a", v)) => a = Some(crate::ring::parse_points(v)?),
                        Some(("b", v)) => b = Some(crate::ring::parse_points(v)?),
                        Some(("grade", v)) => grade = Some(v.parse()?),
                        _ => return Err(Error::Parse { pos: 0, msg: format!("unexpected field {part:?}") }),
                    }
                }
                let missing = || Error::Parse { pos: 0, msg: "expected a=…;b=…;grade=…".into() };
                Instance::Drs {
                    a: a.ok_or_else(missing)?,
                    b: b.ok_or_else(missing)?,
                    grade: grade.ok_or_else(missing)?,
                }
            }
            Domain::TableauEntries => {
                let mut v = crate::ring::parse_points(text)?;
                v.sort_unstable();
                Instance::Entries(v)
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteKind {
    /// Failures are test failures.
    Assertion,
    /// Only tallies; outcomes never fail the run.
    Scan,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub message: String,
    pub reproducer: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub kind: SuiteKind,
    pub spec: EnumSpec,
    pub instances: u64,
    pub failures_total: u64,
    /// The first few failures in enumeration order.
    pub failures: Vec<Failure>,
    pub tallies: BTreeMap<String, u64>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.kind == SuiteKind::Scan || self.failures_total == 0
    }

    /// Canonical JSON; the wall time is left out so reports compare bit for bit.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn summary(&self) -> String {
        let mut s = format!(
            "{}: {} instances, {} failures ({}) [{:.2?}]",
            self.suite, self.instances, self.failures_total, self.spec, self.wall_time
        );
        for (k, v) in &self.tallies {
            s.push_str(&format!("\n  {k}: {v}"));
        }
        for f in &self.failures {
            s.push_str(&format!("\n  FAIL {}: {}\n    {}", f.input, f.message, f.reproducer));
        }
        s
    }
}

#[derive(Default)]
struct Partial {
    instances: u64,
    failures_total: u64,
    failures: Vec<Failure>,
    tallies: BTreeMap<String, u64>,
}

impl Partial {
    fn absorb(&mut self, other: Partial) {
        self.instances += other.instances;
        self.failures_total += other.failures_total;
        for f in other.failures {
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(f);
            }
        }
        for (k, v) in other.tallies {
            *self.tallies.entry(k).or_default() += v;
        }
    }
}

/// Per-instance sink for assertions and tallies.
pub struct Probe<'a> {
    tallies: &'a mut BTreeMap<String, u64>,
    problems: Vec<String>,
}

impl Probe<'_> {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.problems.push(what());
        }
    }

    pub fn count(&mut self, key: &str) {
        *self.tallies.entry(key.to_string()).or_default() += 1;
    }
}

type Check = fn(&Instance, &mut Probe) -> Result<()>;
type Task = Box<dyn Fn(&mut dyn FnMut(Instance)) + Send + Sync>;

pub struct Suite {
    pub name: &'static str,
    pub kind: SuiteKind,
    pub domain: Domain,
    pub about: &'static str,
    pub default_spec: EnumSpec,
    check: Check,
}

fn chunked(items: Vec<Instance>) -> Vec<Task> {
    let mut tasks: Vec<Task> = Vec::new();
    let mut it = items.into_iter().peekable();
    while it.peek().is_some() {
        let chunk: Vec<Instance> = it.by_ref().take(256).collect();
        tasks.push(Box::new(move |f: &mut dyn FnMut(Instance)| chunk.iter().cloned().for_each(&mut *f)));
    }
    tasks
}

fn materialized(items: Vec<Instance>) -> Result<Vec<Task>> {
    check_budget(items.len() as u128)?;
    Ok(chunked(items))
}

impl Suite {
    fn tasks(&self, spec: &EnumSpec) -> Result<Vec<Task>> {
        spec.validate()?;
        match self.domain {
            Domain::Multisegments => Ok(chunked(enumerate(spec)?.into_iter().map(Instance::Multi).collect())),
            Domain::NonzeroGenuinePart => Ok(chunked(
                enumerate(spec)?.into_iter().filter(Multisegment::has_genuine).map(Instance::Multi).collect(),
            )),
            Domain::Pairs => {
                let ladders = window_ladders(spec.lo, spec.hi, spec.max_segments);
                let rest = enumerate(&EnumSpec { max_segments: spec.max_segments.saturating_sub(1), ..spec.clone() })?;
                check_budget((ladders.len() as u128).saturating_mul(rest.len() as u128))?;
                let mut items = Vec::new();
                for l in &ladders {
                    for m in rest.iter().filter(|m| m.len() + l.len() <= spec.max_segments) {
                        items.push(Instance::Pair(l.clone(), m.clone()));
                    }
                }
                Ok(chunked(items))
            }
            Domain::RowTuples => tuple_tasks(spec),
            Domain::LadderTuples => {
                check_budget(multisets_up_to(window_segments(spec.lo, spec.hi).len(), spec.max_segments))?;
                materialized(window_ladder_tuples(spec).into_iter().map(Instance::Ladders).collect())
            }
            Domain::DrsSaturated => materialized(drs_instances(spec, true)),
            Domain::DrsUnsaturated => materialized(drs_instances(spec, false)),
            Domain::TableauEntries => {
                let values: Vec<i32> = (spec.lo..=spec.hi).collect();
                check_budget(multisets_up_to(values.len(), spec.max_segments))?;
                let mut items = Vec::new();
                for k in 1..=spec.max_segments {
                    for_each_multiset(values.len(), k, 0, &mut Vec::new(), &mut |ix| {
                        items.push(Instance::Entries(ix.iter().map(|&i| values[i]).collect()));
                    });
                }
                Ok(chunked(items))
            }
        }
    }

    fn run_one(&self, inst: &Instance, out: &mut Partial) {
        let mut probe = Probe { tallies: &mut out.tallies, problems: Vec::new() };
        if let Err(e) = (self.check)(inst, &mut probe) {
            probe.problems.push(format!("error: {e}"));
        }
        out.instances += 1;
        if !probe.problems.is_empty() {
            out.failures_total += 1;
            if out.failures.len() < KEPT_FAILURES {
                let input = inst.to_string();
                out.failures.push(Failure {
                    reproducer: format!("mwrsk check {} '{}'", self.name, input),
                    message: probe.problems.join("; "),
                    input,
                });
            }
        }
    }

    /// Runs the suite over the whole domain of `spec`.
    pub fn run(&self, spec: &EnumSpec) -> Result<SuiteReport> {
        let start = Instant::now();
        let tasks = self.tasks(spec)?;
        let partials: Vec<Partial> = tasks
            .par_iter()
            .map(|task| {
                let mut p = Partial::default();
                task(&mut |inst| self.run_one(&inst, &mut p));
                p
            })
            .collect();
        let mut total = Partial::default();
        for p in partials {
            total.absorb(p);
        }
        Ok(self.report(spec, total, start.elapsed()))
    }

    /// Checks a single instance given in the domain's text syntax.
    pub fn check_one(&self, text: &str) -> Result<SuiteReport> {
        let start = Instant::now();
        let inst = self.domain.parse_instance(text)?;
        let mut p = Partial::default();
        self.run_one(&inst, &mut p);
        Ok(self.report(&self.default_spec, p, start.elapsed()))
    }

    fn report(&self, spec: &EnumSpec, p: Partial, wall_time: Duration) -> SuiteReport {
        SuiteReport {
            suite: self.name.to_string(),
            kind: self.kind,
            spec: spec.clone(),
            instances: p.instances,
            failures_total: p.failures_total,
            failures: p.failures,
            tallies: p.tallies,
            wall_time,
        }
    }
}

pub fn suites() -> &'static [Suite] {
    SUITES
}

pub fn suite(name: &str) -> Result<&'static Suite> {
    SUITES.iter().find(|s| s.name == name).ok_or_else(|| Error::UnknownSuite(name.to_string()))
}

/// Runs a suite with an optional number of worker threads.
pub fn run_suite(name: &str, spec: &EnumSpec, jobs: Option<usize>) -> Result<SuiteReport> {
    let s = suite(name)?;
    match jobs {
        None => s.run(spec),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?
            .install(|| s.run(spec)),
    }
}

// ---------------------------------------------------------------------------
// Checks

fn multi(inst: &Instance) -> Result<&Multisegment> {
    match inst {
        Instance::Multi(m) => Ok(m),
        other => Err(Error::Domain(format!("expected a multisegment, got {other}"))),
    }
}

fn step_any(m: &Multisegment) -> Result<crate::mw::MwStepResult> {
    if m.is_genuine() {
        mw_step(m)
    } else {
        mw_step_enhanced(m)
    }
}

fn check_mw_involution(inst: &Instance, p: &mut Probe) -> Result<()> {
    let m = multi(inst)?;
    let sharp = mw_involution(m)?;
    p.check(mw_involution(&sharp)? == *m, || format!("m## = {}", mw_involution(&sharp).unwrap()));
    if Ladder::try_from(m).is_ok() {
        p.count("ladders");
        p.check(Ladder::try_from(&sharp).is_ok(), || format!("m# = {sharp} is not a ladder"));
    }
    p.check(mw_involution(&m.contragredient())? == sharp.contragredient(), || "(m#)∨ != (m∨)#".into());
    Ok(())
}

fn check_mw_injective(inst: &Instance, p: &mut Probe) -> Result<()> {
    let m = multi(inst)?;
    if m.is_zero() {
        return Ok(());
    }
    let r = mw_step(m)?;
    let pre = mw_preimages(&r.m_dagger, r.delta_circ, 3);
    p.check(pre == vec![m.clone()], || format!("MW preimages of ({}, {}): {pre:?}", r.m_dagger, r.delta_circ));
    Ok(())
}

fn check_mw_enhanced(inst: &Instance, p: &mut Probe) -> Result<()> {
    let m = multi(inst)?;
    let g = m.genuine();
    let re = mw_step_enhanced(m)?;
    let rg = mw_step(&g)?;
    p.check(re.m_dagger.genuine() == rg.m_dagger, || format!("genuine part of m† is {}", re.m_dagger.genuine()));
    p.check(re.delta_circ == rg.delta_circ, || "Δ° differs from the genuine step".into());
    p.check(re.m_dagger.dummy_part().difference(&m.dummy_part()).is_some(), || "dummies were not kept".into());
    let (acc, _) = mw_involution_enhanced(m);
    p.check(acc == mw_involution(&g)?, || format!("enhanced iterate gives {acc}"));
    let dual = mw_step_dual(m)?;
    let conj = step_any(&m.contragredient())?;
    p.check(dual.delta_circ == conj.delta_circ.contragredient(), || "dual Δ differs from the conjugated one".into());
    Ok(())
}

fn check_mw_depth(inst: &Instance, p: &mut Probe) -> Result<()> {
    let m = multi(inst)?;
    if m.is_zero() {
        return Ok(());
    }
    if !is_nondegenerate(m)? {
        p.count("degenerate (skipped)");
        return Ok(());
    }
    p.count("non-degenerate");
    let segs = m.segments();
    let d = depths(segs);
    let lead = leading_indices(m)?;
    let star = segs
        .iter()
        .enumerate()
        .map(|(i, s)| if lead.contains(&i) { s.truncate() } else { Some(*s) })
        .collect::<Option<Vec<Segment>>>()
        .ok_or_else(|| Error::Internal("non-degenerate input lost a segment".into()))?;
    let dd = depths(&star);
    let n = segs.len();
    p.check((0..n).all(|i| d[i] <= dd[i] && dd[i] <= d[i] + 1), || format!("depth bounds {d:?} vs {dd:?}"));
    let witnesses = |i: usize| -> Vec<usize> {
        lead.iter()
            .copied()
            .filter(|&j| {
                segs[i].b() == segs[j].b() && segs[i].is_contained_in(&segs[j]) && segs[i] != segs[j] && d[i] == d[j]
            })
            .collect()
    };
    for i in 0..n {
        let w = witnesses(i);
        let flat = !w.is_empty();
        p.check(!(flat && lead.contains(&i)), || format!("index {i} is leading and in the flat set"));
        p.check((dd[i] == d[i] + 1) == flat, || format!("depth jump at {} does not match the flat set", segs[i]));
        for j in w {
            let pos = lead.iter().position(|&x| x == j).unwrap();
            p.check(pos > 0, || format!("witness for {} is the first leading index", segs[i]));
            if pos > 0 {
                p.check(dd[i] == d[lead[pos - 1]], || {
                    format!("d†({}) differs from d of the previous leading", segs[i])
                });
            }
        }
    }
    p.check(d.iter().max() == dd.iter().max(), || "depth of m† differs".into());
    let lead_depths: BTreeSet<usize> = lead.iter().map(|&i| d[i]).collect();
    p.check(lead_depths.len() == lead.len(), || "depth not injective on leading indices".into());
    for w in lead.windows(2) {
        p.count(if d[w[0]] == d[w[1]] + 1 { "previous-leading depth gap 1" } else { "previous-leading depth gap > 1" });
    }
    Ok(())
}

fn check_rsk_depths(m: &Multisegment, p: &mut Probe) -> Result<()> {
    let segs = m.segments();
    let t = depth_table(m)?;
    let d = &t.depth;
    let n = segs.len();
    let strict_in = |x: &Segment, y: &Segment| x.is_contained_in(y) && x != y;
    // Chains below the depth are realised at every level.
    for i in 0..n {
        for k in 0..d[i] {
            p.check((0..n).any(|j| segs[i].precedes(&segs[j]) && d[j] == k), || {
                format!("no depth-{k} successor of {}", segs[i])
            });
        }
    }
    // Sandwich statement.
    for i1 in 0..n {
        for i2 in 0..n {
            if d[i1] != d[i2] || !segs[i2].is_contained_in(&segs[i1]) {
                continue;
            }
            let between = |x: &Segment| segs[i2].is_contained_in(x) && x.is_contained_in(&segs[i1]);
            for i in (0..n).filter(|&i| between(&segs[i]) && d[i] > d[i1]) {
                let ok = (0..n).any(|j| between(&segs[j]) && d[j] == d[i1] && segs[i].precedes(&segs[j]));
                p.check(ok, || format!("sandwich fails for {} inside {}..{}", segs[i], segs[i2], segs[i1]));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if strict_in(&segs[t.sigma[i]], &segs[j]) && strict_in(&segs[j], &segs[i]) {
                p.check(d[j] < d[i], || format!("{} sits strictly between {} and its successor", segs[j], segs[i]));
            }
        }
    }
    let last: BTreeSet<usize> = t.fibers.iter().map(|f| *f.last().unwrap()).collect();
    let rest: Vec<usize> = (0..n).filter(|i| !last.contains(i)).collect();
    let primes: Vec<Segment> = rest.iter().map(|&i| Segment::raw(segs[i].b(), segs[t.sigma[i]].e())).collect();
    let dp = depths(&primes);
    p.check(rest.iter().zip(&dp).all(|(&i, &x)| x <= d[i]), || "derived depths exceed the original ones".into());

    let (l, mp) = k_step(m)?;
    if l.min_begin() == m.min_begin() && m.is_genuine() {
        p.count("inductive case");
        let top = t.max_depth();
        let fib = &t.fibers[top];
        let i0 = fib[0];
        p.check(fib.iter().all(|&i| segs[i].is_contained_in(&segs[i0])), || {
            "deepest fiber has no largest member".into()
        });
        let lo = m.min_begin().unwrap();
        let expect: BTreeSet<usize> =
            (0..n).filter(|&i| segs[i].b() == lo && segs[i].is_contained_in(&segs[i0])).collect();
        p.check(expect == fib.iter().copied().collect(), || {
            "deepest fiber is not the segments at min m inside Δ_0".into()
        });
        p.check(l.segments().contains(&segs[i0]), || format!("{} is not in the highest ladder", segs[i0]));
        let others = Multisegment::new(fib[1..].iter().map(|&i| segs[i]));
        let reduced_derived = mp.difference(&others);
        p.check(reduced_derived.is_some(), || "rest of the deepest fiber is not inside m'".into());
        let removed = m.difference(&Multisegment::new(fib.iter().map(|&i| segs[i]))).expect("fiber is part of m");
        let l_rest: Vec<Segment> = l.segments().iter().copied().filter(|s| *s != segs[i0]).collect();
        if removed.is_zero() {
            p.check(l_rest.is_empty() && reduced_derived.is_some_and(|x| x.is_zero()), || {
                "reduction is not empty".into()
            });
        } else if let Some(rd) = reduced_derived {
            let (l2, mp2) = k_step(&removed)?;
            p.check(l2.segments() == l_rest.as_slice() && mp2 == rd, || "K of the reduced multisegment differs".into());
        }
    }
    Ok(())
}

fn check_rsk_bijection(inst: &Instance, p: &mut Probe) -> Result<()> {
    let m = multi(inst)?;
    let t = rsk(m);
    p.check(rsk_inverse(&t).as_ref() == Ok(m), || format!("RSK⁻¹(RSK(m)) = {:?}", rsk_inverse(&t)));
    p.check(t.is_dominance_chain(), || format!("{t} is not a dominance chain"));
    p.check(t.is_pairwise_permissible(), || format!("{t} is not pairwise permissible"));
    p.check(width(m) == t.len(), || format!("width {} but {} ladders", width(m), t.len()));
    let pair = from_ladder_tuple(&t)?;
    p.check(to_ladder_tuple(&pair)? == t, || "tableau pair does not convert back".into());
    let mut bs: Vec<i32> = m.iter().map(Segment::b).collect();
    let mut es: Vec<i32> = m.iter().map(Segment::e).collect();
    bs.sort_unstable();
    es.sort_unstable();
    p.check(pair.p.entries() == bs && pair.q.entries() == es, || "tableau entries differ from the end points".into());
    if m.is_zero() {
        return Ok(());
    }
    let (l, mp) = k_step(m)?;
    p.check(is_permissible_pair(&l, &mp), || format!("K(m) = ({l}, {mp}) is not permissible"));
    p.check(k_inverse(&l, &mp).as_ref() == Ok(m), || format!("K'(K(m)) = {:?}", k_inverse(&l, &mp)));
    check_rsk_depths(m, p)
}

fn pair(inst: &Instance) -> Result<(&Ladder, &Multisegment)> {
    match inst {
        Instance::Pair(l, m) => Ok((l, m)),
        other => Err(Error::Domain(format!("expected a ladder | multisegment pair, got {other}"))),
    }
}

fn check_rsk_image_pairs(inst: &Instance, p: &mut Probe) -> Result<()> {
    let (l, n) = pair(inst)?;
    if !is_permissible_pair(l, n) {
        p.count("not permissible");
        p.check(matches!(k_inverse(l, n), Err(Error::NotPermissible(_))), || {
            "K' accepted a non-permissible pair".into()
        });
        return Ok(());
    }
    p.count("permissible");
    let m = k_inverse(l, n)?;
    p.check(k_step(&m)? == (l.clone(), n.clone()), || format!("K(K'(l, m)) = {:?} from {m}", k_step(&m)));
    Ok(())
}

fn check_socle_kinverse(inst: &Instance, p: &mut Probe) -> Result<()> {
    let (l, n) = pair(inst)?;
    if !is_permissible_pair(l, n) {
        p.count("not permissible (skipped)");
        return Ok(());
    }
    p.count("permissible");
    let s = socle(n, l)?;
    let k = k_inverse(l, n)?;
    p.check(s == k, || format!("soc = {s} but K' = {k}"));
    Ok(())
}

fn check_commutation(inst: &Instance, p: &mut Probe) -> Result<()> {
    let m = multi(inst)?;
    if !m.has_genuine() {
        return Ok(());
    }
    let (l, mp) = k_step(m)?;
    // An all-dummy ladder has minimum +∞.
    let applies = l.min_begin().is_none_or(|x| m.min_begin().unwrap() < x);
    if !applies {
        p.count("min m = min l(m) (skipped)");
        return Ok(());
    }
    p.count(if m.is_genuine() { "applies (genuine)" } else { "applies (enhanced)" });
    let step = if m.is_genuine() { mw_step } else { mw_step_enhanced };
    let r = step(m)?;
    let (l2, mpd) = k_step(&r.m_dagger)?;
    let r2 = step(&mp)?;
    p.check(l2 == l, || format!("l(m†) = {l2} but l(m) = {l}"));
    p.check(r2.delta_circ == r.delta_circ, || format!("Δ°(m') = {} but Δ°(m) = {}", r2.delta_circ, r.delta_circ));
    p.check(mpd == r2.m_dagger, || format!("(m†)' = {mpd} but (m')† = {}", r2.m_dagger));
    Ok(())
}

fn check_socle_chain(inst: &Instance, p: &mut Probe) -> Result<()> {
    let m = multi(inst)?;
    if m.is_zero() {
        return Ok(());
    }
    let (l, mp) = k_step(m)?;
    let s = socle(&mp, &l)?;
    p.check(s == *m, || format!("soc(m', l(m)) = {s}"));
    let c = socle_chain(&rsk(m), Side::Right)?;
    p.check(c == *m, || format!("socle chain gives {c}"));
    if mp.min_begin().zip(l.min_begin()).is_some_and(|(a, b)| a < b) {
        p.count("second case");
        let r = mw_step(&mp)?;
        let inner = socle(&r.m_dagger, &l)?;
        let top = mw_step(&s)?;
        p.check(top.m_dagger == inner && top.delta_circ == r.delta_circ, || {
            "MW(soc) differs from (soc(m'†, l), Δ°)".into()
        });
    }
    Ok(())
}

fn check_thm_dummy(inst: &Instance, p: &mut Probe) -> Result<()> {
    let m = multi(inst)?;
    let g = m.genuine();
    let (l, mp) = k_step(m)?;
    let s = socle(&mp, &l)?;
    p.check(s == g, || format!("soc(m', l(m)) = {s}"));
    let c = socle_chain(&rsk(m), Side::Right)?;
    p.check(c == g, || format!("socle chain gives {c}"));
    Ok(())
}

fn check_prop_std(inst: &Instance, p: &mut Probe) -> Result<()> {
    let m = multi(inst)?;
    let r = interpolation_report(&m.genuine(), &m.dummy_part())?;
    match r.classification() {
        Ok(c) => {
            p.count(match c {
                Interpolation::ZelevinskyMatch => "zelevinsky",
                Interpolation::LanglandsMatch => "langlands",
                Interpolation::Neither => "neither",
            });
            if r.zelevinsky.is_some() && r.langlands.is_some() {
                p.count("both clauses apply");
            }
        }
        Err(e) => {
            p.check(false, || format!("{e}: factors {:?}", r.factors.iter().map(|l| l.to_string()).collect::<Vec<_>>()))
        }
    }
    Ok(())
}

fn tuple(inst: &Instance) -> Result<&RowTuple> {
    match inst {
        Instance::Tuple(u) => Ok(u),
        other => Err(Error::Domain(format!("expected a row tuple, got {other}"))),
    }
}

fn check_triangular_key(inst: &Instance, p: &mut Probe) -> Result<()> {
    let u = tuple(inst)?;
    let (plain, enhanced) = key_predicates(u);
    let (f, fe) = (u.is_flagged(), u.is_flagged_enhanced());
    p.count(if f { "flagged" } else { "not flagged" });
    if fe {
        p.count("enhanced-flagged");
    }
    p.check(plain == f, || format!("key comparison {plain} but flagged {f}"));
    p.check(enhanced == fe, || format!("shifted key comparison {enhanced} but enhanced flag {fe}"));
    Ok(())
}

fn check_words_gl(inst: &Instance, p: &mut Probe) -> Result<()> {
    let u = tuple(inst)?;
    if !u.is_flagged() || u.is_empty() {
        p.count("outside the flagged domain (skipped)");
        return Ok(());
    }
    p.count("flagged");
    let (pt, qt) = crsk(u);
    let mw = mw_words(u)?;
    let g = gl_step(&pt, &qt)?;
    let (pd, qd) = crsk(&mw.dagger);
    p.check(g.k_hat == mw.k_hat, || format!("k̂ from Q is {} but {} from the words", g.k_hat, mw.k_hat));
    p.check(g.k == mw.delta_circ.len() as usize, || format!("k from P is {} but Δ° = {}", g.k, mw.delta_circ));
    p.check(g.q_dagger == qd, || format!("Q† = {} but expected {qd}", g.q_dagger));
    p.check(g.t == crsk(&mw.u_hat).0, || "T differs from P(Û)".into());
    let column: Vec<i32> = (mw.m..mw.m + mw.k_hat as i32).rev().collect();
    p.check(g.c == column, || format!("c = {:?}", g.c));
    p.check(g.p_dagger == pd, || format!("P† = {} but expected {pd}", g.p_dagger));
    Ok(())
}

fn check_words_square(inst: &Instance, p: &mut Probe) -> Result<()> {
    let m = multi(inst)?;
    let u = iota(m)?;
    let (pt, qt) = crsk(&u);
    let pair = rsk_pair(m);
    p.check(inv(&pt) == pair.p && inv(&qt) == pair.q, || "inv(cRSK(ι m)) differs from RSK'(m)".into());
    p.check(inv_inverse(&pair.p) == pt && inv_inverse(&pair.q) == qt, || "inv is not invertible here".into());
    p.check(crsk_inverse(&pt, &qt)? == u, || "cRSK does not invert".into());
    p.check(iota_inverse(&u)? == *m, || "ι does not invert".into());
    p.check(u.is_flagged(), || "ι(m) is not flagged".into());
    if m.is_zero() {
        return Ok(());
    }
    let (l, mp) = k_step(m)?;
    let top_p: Vec<i32> = l.segments().iter().map(Segment::b).collect();
    let top_q: Vec<i32> = l.segments().iter().map(Segment::e).collect();
    p.check(pair.p.rows()[0] == top_p && pair.q.rows()[0] == top_q, || "first rows differ from l(m)".into());
    let rest = rsk_pair(&mp);
    p.check(rest.p.rows() == &pair.p.rows()[1..] && rest.q.rows() == &pair.q.rows()[1..], || {
        "m' is not the lower rows".into()
    });
    let mu = Shape(pt.shape().rows().iter().filter(|&&r| r > 1).map(|r| r - 1).collect());
    let fp = pieri_factor(&pt, &mu, words::Side::Right, Strip::Column)?;
    let fq = pieri_factor(&qt, &mu, words::Side::Right, Strip::Column)?;
    let (mut bs, mut es) = (fp.word.clone(), fq.word.clone());
    bs.sort_unstable_by(|a, b| b.cmp(a));
    es.sort_unstable_by(|a, b| b.cmp(a));
    let lad = Ladder::new(bs.iter().zip(&es).map(|(&b, &e)| Segment::raw(b, e)));
    p.check(lad.as_ref() == Ok(&l), || format!("column factors give {lad:?}"));
    p.check(crsk(&iota(&mp)?) == (fp.tableau, fq.tableau), || "column-factor remainders differ from cRSK(ι m')".into());
    let mw = mw_words(&u)?;
    let r = mw_step_enhanced(m)?;
    p.check(mw.delta_circ == r.delta_circ, || format!("Δ° on words is {}", mw.delta_circ));
    // Words carry no dummies, so the two steps can only agree on genuine parts.
    let back = iota_inverse(&mw.dagger)?;
    p.check(back == r.m_dagger.genuine(), || format!("MW on words gives {back}, enhanced MW gives {}", r.m_dagger));
    if !r.m_dagger.is_genuine() {
        p.count("enhanced step leaves a dummy");
    }
    Ok(())
}

fn ladder_tuple(inst: &Instance) -> Result<&LadderTuple> {
    match inst {
        Instance::Ladders(t) => Ok(t),
        other => Err(Error::Domain(format!("expected a ladder tuple, got {other}"))),
    }
}

fn check_image_tuples(inst: &Instance, p: &mut Probe) -> Result<()> {
    let t = ladder_tuple(inst)?;
    let image = in_image(t);
    p.count(if image { "in image" } else { "outside image" });
    let pair = from_ladder_tuple(t)?;
    let u = crsk_inverse(&inv_inverse(&pair.p), &inv_inverse(&pair.q))?;
    p.check(image == u.is_flagged(), || format!("in_image {image} but the row tuple {u} flagged {}", u.is_flagged()));
    p.check(image == key_predicates(&u).0, || "key characterisation disagrees with in_image".into());
    let segs: Vec<Segment> = t.ladders.iter().flat_map(|l| l.segments().iter().copied()).collect();
    let saturated = segs.iter().all(|x| segs.iter().all(|y| x.b() <= y.e()));
    if saturated {
        p.count("saturated");
        p.check(image, || "saturated dominance chain outside the image".into());
    }
    Ok(())
}

fn check_drs(inst: &Instance, p: &mut Probe, report_only: bool) -> Result<()> {
    let Instance::Drs { a, b, grade } = inst else {
        return Err(Error::Domain(format!("expected a DRS instance, got {inst}")));
    };
    let r = drs_basis_check(a, b, grade, report_only)?;
    let size = r.basis.len();
    p.count(&format!("matrix size {size:02}"));
    if report_only {
        p.count(if r.unimodular { "unimodular" } else { "not unimodular" });
        if r.stray_terms > 0 {
            p.count("terms outside the grade");
        }
    } else {
        p.check(r.unimodular, || format!("determinant {}", r.determinant));
        p.check(r.stray_terms == 0, || "terms outside the grade".into());
    }
    Ok(())
}

fn check_drs_basis(inst: &Instance, p: &mut Probe) -> Result<()> {
    check_drs(inst, p, false)
}

fn check_drs_nonsaturated(inst: &Instance, p: &mut Probe) -> Result<()> {
    check_drs(inst, p, true)
}

fn check_left_chain(inst: &Instance, p: &mut Probe) -> Result<()> {
    let m = multi(inst)?;
    if m.is_zero() {
        return Ok(());
    }
    let c = socle_chain(&rsk(m), Side::Left)?;
    p.count(if c == *m { "left chain returns m" } else { "left chain differs" });
    Ok(())
}

fn check_lowest_ladder(inst: &Instance, p: &mut Probe) -> Result<()> {
    let m = multi(inst)?;
    let Some(v) = lowest_ladder(m) else { return Ok(()) };
    let Some(rest) = v.rest else {
        p.count("prefix outside the image");
        return Ok(());
    };
    p.count("prefix invertible");
    p.count(if socle_left(&v.lowest, &rest)? == *m { "soc(Z(l_k) x Z('m)) = m" } else { "soc(Z(l_k) x Z('m)) != m" });
    let top = if let (Some(a), Some(b)) = (v.lowest.to_multisegment().max_end(), m.max_end()) { a < b } else { false };
    if top && !rest.is_zero() {
        let md = mw_step_dual(m)?.m_dagger;
        let rd = mw_step_dual(&rest)?.m_dagger;
        let ok = lowest_ladder(&md).is_some_and(|w| w.lowest == v.lowest && w.rest.as_ref() == Some(&rd));
        p.count(if ok { "end-point relation holds" } else { "end-point relation fails" });
    }
    Ok(())
}

fn check_tableau_order(inst: &Instance, p: &mut Probe) -> Result<()> {
    let Instance::Entries(v) = inst else {
        return Err(Error::Domain(format!("expected an entry list, got {inst}")));
    };
    let ts = inverted_tableaux_with(v);
    let lo = v[0] - 2;
    let hi = v[v.len() - 1] + 2;
    let n = ts.len();
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq[i][j] = tableau_leq(&ts[i], &ts[j])?;
            let sweep = (lo..=hi).all(
                |r| matches!(dominance(&restrict_geq(&ts[i], r), &restrict_geq(&ts[j], r)), Ok(Some(o)) if o.is_le()),
            );
            p.check(leq[i][j] == sweep, || "finite quantifier disagrees with the wide sweep".into());
        }
    }
    p.count("tableau pairs compared");
    for i in 0..n {
        p.check(leq[i][i], || "not reflexive".into());
        for j in 0..n {
            if i != j && leq[i][j] && leq[j][i] {
                p.check(false, || format!("{:?} and {:?} are mutually below", ts[i].rows(), ts[j].rows()));
            }
            if leq[i][j] {
                for k in 0..n {
                    if leq[j][k] && !leq[i][k] {
                        p.check(false, || "not transitive".into());
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_schuetzenberger(inst: &Instance, p: &mut Probe) -> Result<()> {
    let r = schuetzenberger_report(multi(inst)?);
    p.count(if r.swapped { "evacuation with P and Q swapped" } else { "swapped pairing fails" });
    p.count(if r.same_order { "evacuation in the same order" } else { "same-order pairing fails" });
    p.count(if r.shapes_equal { "shapes agree" } else { "shapes differ" });
    Ok(())
}

static SUITES: &[Suite] = &[
    Suite {
        name: "mw-involution",
        kind: SuiteKind::Assertion,
        domain: Domain::Multisegments,
        about: "m## = m, ladders stay ladders, and # commutes with the contragredient",
        default_spec: EnumSpec::window(1, 4, 5),
        check: check_mw_involution,
    },
    Suite {
        name: "mw-injective",
        kind: SuiteKind::Assertion,
        domain: Domain::Multisegments,
        about: "each MW image has exactly one preimage",
        default_spec: EnumSpec::window(1, 4, 5),
        check: check_mw_injective,
    },
    Suite {
        name: "mw-enhanced",
        kind: SuiteKind::Assertion,
        domain: Domain::NonzeroGenuinePart,
        about: "the dummy-keeping step agrees with the genuine one; dual step is the conjugate",
        default_spec: EnumSpec::window(1, 4, 4).with_dummies(1),
        check: check_mw_enhanced,
    },
    Suite {
        name: "mw-depth",
        kind: SuiteKind::Assertion,
        domain: Domain::Multisegments,
        about: "depth changes under one MW step on non-degenerate input",
        default_spec: EnumSpec::window(1, 4, 5),
        check: check_mw_depth,
    },
    Suite {
        name: "rsk-bijection",
        kind: SuiteKind::Assertion,
        domain: Domain::Multisegments,
        about: "K'(K(m)) = m, RSK outputs are permissible chains, depth facts",
        default_spec: EnumSpec::window(1, 4, 5),
        check: check_rsk_bijection,
    },
    Suite {
        name: "rsk-image-pairs",
        kind: SuiteKind::Assertion,
        domain: Domain::Pairs,
        about: "K(K'(l, m)) = (l, m) on permissible pairs; K' rejects the rest",
        default_spec: EnumSpec::window(1, 4, 5),
        check: check_rsk_image_pairs,
    },
    Suite {
        name: "rsk-image-tuples",
        kind: SuiteKind::Assertion,
        domain: Domain::LadderTuples,
        about: "image of RSK among dominance chains: flagged words, keys, saturated case",
        default_spec: EnumSpec::window(1, 4, 5),
        check: check_image_tuples,
    },
    Suite {
        name: "commutation",
        kind: SuiteKind::Assertion,
        domain: Domain::NonzeroGenuinePart,
        about: "K and MW commute when min m < min l(m)",
        default_spec: EnumSpec::window(1, 4, 5),
        check: check_commutation,
    },
    Suite {
        name: "thm-main-socle-chain",
        kind: SuiteKind::Assertion,
        domain: Domain::Multisegments,
        about: "soc(m', l(m)) = m and the socle chain of RSK(m) returns m",
        default_spec: EnumSpec::window(1, 4, 5),
        check: check_socle_chain,
    },
    Suite {
        name: "socle-kinverse",
        kind: SuiteKind::Assertion,
        domain: Domain::Pairs,
        about: "soc(m, l) = K'(l, m) on permissible pairs",
        default_spec: EnumSpec::window(1, 4, 5),
        check: check_socle_kinverse,
    },
    Suite {
        name: "thm-dummy",
        kind: SuiteKind::Assertion,
        domain: Domain::NonzeroGenuinePart,
        about: "soc(m', l(m)) = genuine part of m for enhanced m",
        default_spec: EnumSpec::window(1, 3, 4).with_dummies(2),
        check: check_thm_dummy,
    },
    Suite {
        name: "prop-std",
        kind: SuiteKind::Assertion,
        domain: Domain::NonzeroGenuinePart,
        about: "dummy choices recover the Zelevinsky and Langlands factors",
        default_spec: EnumSpec::window(1, 3, 3).with_dummies(4),
        check: check_prop_std,
    },
    Suite {
        name: "words-triangular-key",
        kind: SuiteKind::Assertion,
        domain: Domain::RowTuples,
        about: "flagged iff the right key of P is Bruhat below the left key of Q (and the shifted variant)",
        default_spec: EnumSpec::window(1, 6, 6),
        check: check_triangular_key,
    },
    Suite {
        name: "words-gl",
        kind: SuiteKind::Assertion,
        domain: Domain::RowTuples,
        about: "MW computed on the cRSK pair alone agrees with MW on the words",
        default_spec: EnumSpec::window(1, 6, 6),
        check: check_words_gl,
    },
    Suite {
        name: "words-square",
        kind: SuiteKind::Assertion,
        domain: Domain::Multisegments,
        about: "RSK' and cRSK agree through ι and inv, for K and for MW",
        default_spec: EnumSpec::window(1, 4, 4),
        check: check_words_square,
    },
    Suite {
        name: "drs-basis",
        kind: SuiteKind::Assertion,
        domain: Domain::DrsSaturated,
        about: "RSK-standard classes are a Z-basis of each saturated graded piece",
        default_spec: EnumSpec::window(1, 5, 6),
        check: check_drs_basis,
    },
    Suite {
        name: "tableau-order",
        kind: SuiteKind::Assertion,
        domain: Domain::TableauEntries,
        about: "the tableau order is a partial order; the finite r-quantifier suffices",
        default_spec: EnumSpec::window(1, 4, 5),
        check: check_tableau_order,
    },
    Suite {
        name: "conj-left-chain",
        kind: SuiteKind::Scan,
        domain: Domain::Multisegments,
        about: "does the left-sided socle chain of RSK(m) return m",
        default_spec: EnumSpec::window(1, 4, 5),
        check: check_left_chain,
    },
    Suite {
        name: "lowest-ladder",
        kind: SuiteKind::Scan,
        domain: Domain::Multisegments,
        about: "V(m): invertibility of the prefix, its socle, and the end-point relation",
        default_spec: EnumSpec::window(1, 4, 5),
        check: check_lowest_ladder,
    },
    Suite {
        name: "schuetzenberger",
        kind: SuiteKind::Scan,
        domain: Domain::Multisegments,
        about: "RSK(m∨) against the evacuation of the cRSK pair",
        default_spec: EnumSpec::window(1, 3, 3),
        check: check_schuetzenberger,
    },
    Suite {
        name: "conj-basis-nonsaturated",
        kind: SuiteKind::Scan,
        domain: Domain::DrsUnsaturated,
        about: "the unimodularity test off the saturated case",
        default_spec: EnumSpec::window(1, 3, 4),
        check: check_drs_nonsaturated,
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        let one: Vec<String> = enumerate(&EnumSpec::window(1, 2, 1)).unwrap().iter().map(|m| m.to_string()).collect();
        assert_eq!(one, vec!["0", "[1,1]", "[1,2]", "[2,2]"]);
        assert_eq!(enumerate(&EnumSpec::window(1, 2, 2)).unwrap().len(), 10);
        // One point of dummies at budget 1 doubles each point's choices.
        let spec = EnumSpec::window(1, 1, 1).with_dummies(1);
        assert_eq!(enumerate(&spec).unwrap().len(), 2 * 4);
        assert_eq!(projected_count(&EnumSpec::window(1, 4, 5)), 3003);
        let sized = EnumSpec { max_size: Some(2), ..EnumSpec::window(1, 2, 2) };
        assert!(enumerate(&sized).unwrap().iter().all(|m| m.size() <= 2));
    }

    #[test]
    fn budget_cap() {
        assert!(matches!(enumerate(&EnumSpec::window(1, 30, 8)), Err(Error::Budget { .. })));
    }

    #[test]
    fn small_suites_pass() {
        let spec = EnumSpec::window(1, 3, 3);
        for name in
            ["mw-involution", "mw-injective", "mw-depth", "rsk-bijection", "commutation", "thm-main-socle-chain"]
        {
            let r = run_suite(name, &spec, None).unwrap();
            assert!(r.passed(), "{}", r.summary());
            assert!(r.instances > 0);
        }
    }

    #[test]
    fn reproducible_reports() {
        let spec = EnumSpec::window(1, 3, 3);
        let a = run_suite("conj-left-chain", &spec, Some(1)).unwrap();
        let b = run_suite("conj-left-chain", &spec, Some(2)).unwrap();
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn single_checks() {
        let r = suite("socle-kinverse").unwrap().check_one("[2,3] | [1,2]").unwrap();
        assert!(r.passed());
        assert_eq!(r.tallies.get("permissible"), Some(&1));
        let r = suite("drs-basis").unwrap().check_one("a=1,2;b=2,3;grade=1,2/2,3").unwrap();
        assert!(r.passed());
        assert!(suite("nope").is_err());
    }

    #[test]
    fn inverted_fillings() {
        assert_eq!(inverted_tableaux_with(&[1, 2]).len(), 2);
        assert_eq!(inverted_tableaux_with(&[1, 1]).len(), 1);
    }
}
