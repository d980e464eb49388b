//! Inverted Young tableaux, the ladder-tuple identification and the tableau orders.

use std::cmp::Ordering;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rsk::{rsk, LadderTuple};
use crate::segment::{Ladder, Multisegment, Segment};
use crate::words;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Shape(pub Vec<usize>);

impl Shape {
    pub fn new(rows: Vec<usize>) -> Result<Shape> {
        if rows.windows(2).any(|w| w[0] < w[1]) || rows.contains(&0) {
            return Err(Error::InvalidTableau(format!("{rows:?} is not a partition")));
        }
        Ok(Shape(rows))
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Shape {
        let cols = self.0.first().copied().unwrap_or(0);
        Shape((0..cols).map(|j| self.0.iter().filter(|&&r| r > j).count()).collect())
    }
}

/// `Less` means `λ ≺ λ'`: no more rows, and partial sums at least as large.
pub fn dominance(a: &Shape, b: &Shape) -> Result<Option<Ordering>> {
    if a.size() != b.size() {
        return Err(Error::Domain(format!("shapes {:?} and {:?} have different sizes", a.0, b.0)));
    }
    let below = |x: &Shape, y: &Shape| {
        let (mut sx, mut sy) = (0, 0);
        x.0.len() <= y.0.len()
            && (0..y.0.len()).all(|j| {
                sx += x.0.get(j).copied().unwrap_or(0);
                sy += y.0[j];
                sx >= sy
            })
    };
    Ok(match (below(a, b), below(b, a)) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    })
}

/// Rows strictly decreasing, columns weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct InvertedTableau {
    rows: Vec<Vec<i32>>,
}

impl InvertedTableau {
    pub fn new(rows: Vec<Vec<i32>>) -> Result<InvertedTableau> {
        Shape::new(rows.iter().map(Vec::len).collect())?;
        for r in &rows {
            if r.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::InvalidTableau(format!("row {r:?} is not strictly decreasing")));
            }
        }
        for w in rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(lo, hi)| lo > hi) {
                return Err(Error::InvalidTableau(format!("columns increase between {:?} and {:?}", w[0], w[1])));
            }
        }
        Ok(InvertedTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<i32>] {
        &self.rows
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(Vec::len).collect())
    }

    pub fn entries(&self) -> Vec<i32> {
        let mut v: Vec<i32> = self.rows.iter().flatten().copied().collect();
        v.sort_unstable();
        v
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({ "shape": self.shape().0, "rows": self.rows })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TableauPair {
    pub p: InvertedTableau,
    pub q: InvertedTableau,
}

impl TableauPair {
    pub fn new(p: InvertedTableau, q: InvertedTableau) -> Result<TableauPair> {
        if p.shape() != q.shape() {
            return Err(Error::InvalidTableau("P and Q have different shapes".into()));
        }
        Ok(TableauPair { p, q })
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({ "P": self.p.to_json_value(), "Q": self.q.to_json_value() })
    }
}

/// Row `i` of P (resp. Q) lists the begin (resp. end) points of the `i`-th ladder.
pub fn from_ladder_tuple(t: &LadderTuple) -> Result<TableauPair> {
    let p = t.ladders.iter().map(|l| l.segments().iter().map(Segment::b).collect()).collect();
    let q = t.ladders.iter().map(|l| l.segments().iter().map(Segment::e).collect()).collect();
    TableauPair::new(InvertedTableau::new(p)?, InvertedTableau::new(q)?)
}

pub fn to_ladder_tuple(pair: &TableauPair) -> Result<LadderTuple> {
    let mut ladders = Vec::with_capacity(pair.p.rows.len());
    for (rp, rq) in pair.p.rows.iter().zip(&pair.q.rows) {
        let segs = rp
            .iter()
            .zip(rq)
            .map(|(&b, &e)| {
                Segment::new(b as i64, e as i64)
                    .map_err(|_| Error::InvalidTableau(format!("entry pair P={b} > Q+1={}", e + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        ladders.push(Ladder::new(segs)?);
    }
    Ok(LadderTuple::new(ladders))
}

/// `RSK'(m) = (P_m, Q_m)`.
pub fn rsk_pair(m: &Multisegment) -> TableauPair {
    from_ladder_tuple(&rsk(m)).expect("RSK output is a pair of inverted tableaux")
}

/// Shape of the entries `>= r`.
pub fn restrict_geq(y: &InvertedTableau, r: i32) -> Shape {
    let rows: Vec<Vec<i32>> = y
        .rows
        .iter()
        .map(|row| row.iter().copied().filter(|&x| x >= r).collect::<Vec<_>>())
        .filter(|row| !row.is_empty())
        .collect();
    let sub = InvertedTableau::new(rows).expect("a restriction of an inverted tableau is one");
    sub.shape()
}

/// `Y ≤ Y'`: `sh(Y_{≥r}) ≺ sh(Y'_{≥r})` for every `r`. The shapes only change at
/// entry values, so those are the only `r` examined.
pub fn tableau_leq(y: &InvertedTableau, y2: &InvertedTableau) -> Result<bool> {
    let e = y.entries();
    if e != y2.entries() {
        return Err(Error::Domain("tableau order needs equal entry multisets".into()));
    }
    let mut rs = e;
    rs.dedup();
    for r in rs {
        match dominance(&restrict_geq(y, r), &restrict_geq(y2, r))? {
            Some(Ordering::Less) | Some(Ordering::Equal) => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

pub fn pair_leq(a: &TableauPair, b: &TableauPair) -> Result<bool> {
    Ok(tableau_leq(&a.p, &b.p)? && tableau_leq(&a.q, &b.q)?)
}

/// Comparison of `RSK(m∨)` with the evacuation of `RSK(m)`, computed through the
/// row-word picture. Both pairings are recorded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SchuetzenbergerReport {
    /// `cRSK(ι(m∨)) = (evac Q, evac P)`.
    pub swapped: bool,
    /// `cRSK(ι(m∨)) = (evac P, evac Q)`.
    pub same_order: bool,
    pub shapes_equal: bool,
}

pub fn schuetzenberger_report(m: &Multisegment) -> SchuetzenbergerReport {
    let g = m.genuine();
    let (lo, hi) = match (g.min_begin(), g.max_end()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return SchuetzenbergerReport { swapped: true, same_order: true, shapes_equal: true },
    };
    // Translate into positive values, then reflect inside [1, n-1].
    let base = g.shifted(1 - lo).expect("shift stays in range");
    let n = hi - lo + 2;
    let dual = base.contragredient().shifted(n).expect("shift stays in range");
    let (p, q) = words::crsk(&words::iota(&base).expect("positive multisegment"));
    let (pv, qv) = words::crsk(&words::iota(&dual).expect("positive multisegment"));
    let (ep, eq) = (words::evacuation(&p, n), words::evacuation(&q, n));
    SchuetzenbergerReport {
        swapped: pv == eq && qv == ep,
        same_order: pv == ep && qv == eq,
        shapes_equal: rsk_pair(m).p.shape() == rsk_pair(&m.contragredient()).p.shape(),
    }
}

pub fn schuetzenberger_relation_check(m: &Multisegment) -> bool {
    schuetzenberger_report(m).swapped
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Json,
    Latex,
}

impl std::str::FromStr for RenderFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<RenderFormat> {
        match s {
            "ascii" => Ok(RenderFormat::Ascii),
            "json" => Ok(RenderFormat::Json),
            "latex" => Ok(RenderFormat::Latex),
            _ => Err(Error::Domain(format!("unknown format `{s}` (ascii, json, latex)"))),
        }
    }
}

/// Top row first, one box per entry.
pub fn render_rows(rows: &[Vec<i32>], format: RenderFormat) -> String {
    match format {
        RenderFormat::Json => {
            let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
            serde_json::json!({ "shape": shape, "rows": rows }).to_string()
        }
        RenderFormat::Latex => {
            let body: Vec<String> =
                rows.iter().map(|r| r.iter().map(i32::to_string).collect::<Vec<_>>().join("&")).collect();
            format!("\\begin{{ytableau}}\n{}\n\\end{{ytableau}}", body.join("\\\\\n"))
        }
        RenderFormat::Ascii => {
            if rows.is_empty() {
                return "(empty)".into();
            }
            let w = rows.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
            let rule = |n: usize| format!("+{}", format!("{}+", "-".repeat(w + 2)).repeat(n));
            let mut out = String::new();
            let mut prev = 0;
            for r in rows {
                let _ = writeln!(out, "{}", rule(prev.max(r.len())));
                out.push('|');
                for x in r {
                    let _ = write!(out, " {x:>w$} |");
                }
                out.push('\n');
                prev = r.len();
            }
            out.push_str(&rule(prev));
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(s: &str) -> Multisegment {
        s.parse().unwrap()
    }

    fn it(rows: &[&[i32]]) -> InvertedTableau {
        InvertedTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn ladder_pairs() {
        let pair = from_ladder_tuple(&"[2,3]; [1,2]".parse().unwrap()).unwrap();
        assert_eq!(pair.p.rows(), &[vec![2], vec![1]]);
        assert_eq!(pair.q.rows(), &[vec![3], vec![2]]);
        let pair = from_ladder_tuple(&"[3,4]+[1,2]".parse().unwrap()).unwrap();
        assert_eq!(pair.p.rows(), &[vec![3, 1]]);
        assert_eq!(pair.q.rows(), &[vec![4, 2]]);
        assert_eq!(to_ladder_tuple(&pair).unwrap().to_string(), "[3,4]+[1,2]");
        let bad = TableauPair::new(it(&[&[3]]), it(&[&[1]])).unwrap();
        assert!(to_ladder_tuple(&bad).is_err());
        let dum = TableauPair::new(it(&[&[2]]), it(&[&[1]])).unwrap();
        assert_eq!(to_ladder_tuple(&dum).unwrap().to_string(), "d(1)");
    }

    #[test]
    fn validity() {
        assert!(InvertedTableau::new(vec![vec![1, 2]]).is_err());
        assert!(InvertedTableau::new(vec![vec![2, 1], vec![3]]).is_err());
        assert!(InvertedTableau::new(vec![vec![2], vec![2, 1]]).is_err());
        assert!(InvertedTableau::new(vec![vec![3, 1], vec![3]]).is_ok());
    }

    #[test]
    fn restriction() {
        let y = it(&[&[2], &[1]]);
        assert_eq!(restrict_geq(&y, 2), Shape(vec![1]));
        assert_eq!(restrict_geq(&y, 0), Shape(vec![1, 1]));
        assert_eq!(restrict_geq(&y, 3), Shape(vec![]));
    }

    #[test]
    fn dominance_examples() {
        let s = |v: &[usize]| Shape(v.to_vec());
        assert_eq!(dominance(&s(&[2]), &s(&[1, 1])).unwrap(), Some(Ordering::Less));
        assert_eq!(dominance(&s(&[2, 1]), &s(&[1, 1, 1])).unwrap(), Some(Ordering::Less));
        assert_eq!(dominance(&s(&[2, 1]), &s(&[2, 1])).unwrap(), Some(Ordering::Equal));
        assert_eq!(dominance(&s(&[3, 1, 1, 1]), &s(&[2, 2, 2])).unwrap(), None);
        assert!(dominance(&s(&[2]), &s(&[1])).is_err());
        assert_eq!(s(&[3, 1]).conjugate(), s(&[2, 1, 1]));
    }

    #[test]
    fn tableau_order() {
        let row = it(&[&[2, 1]]);
        let col = it(&[&[2], &[1]]);
        assert!(tableau_leq(&row, &row).unwrap());
        assert!(tableau_leq(&row, &col).unwrap());
        assert!(!tableau_leq(&col, &row).unwrap());
        assert!(tableau_leq(&row, &it(&[&[3, 1]])).is_err());
    }

    #[test]
    fn rsk_pair_rows_match_width() {
        let m = ms("[1,3]+[2,2]+[2,4]");
        let pair = rsk_pair(&m);
        assert_eq!(pair.p.shape().rows().len(), crate::rsk::width(&m));
        assert_eq!(pair.p.entries(), vec![1, 2, 2]);
        assert_eq!(pair.q.entries(), vec![2, 3, 4]);
    }

    #[test]
    fn schuetzenberger_small() {
        assert!(schuetzenberger_relation_check(&ms("[2,5]")));
        let r = schuetzenberger_report(&ms("[1,3]+[2,2]"));
        assert!(r.swapped && r.shapes_equal);
    }

    #[test]
    fn renderings() {
        let rows = vec![vec![3, 1], vec![2]];
        assert_eq!(render_rows(&rows, RenderFormat::Ascii), "+---+---+\n| 3 | 1 |\n+---+---+\n| 2 |\n+---+");
        assert_eq!(render_rows(&rows, RenderFormat::Json), r#"{"rows":[[3,1],[2]],"shape":[2,1]}"#);
        assert_eq!(render_rows(&rows, RenderFormat::Latex), "\\begin{ytableau}\n3&1\\\\\n2\n\\end{ytableau}");
    }
}
