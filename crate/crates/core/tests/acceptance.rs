//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::time::{Duration, Instant};

use mwrsk::harness::{enumerate, run_suite, window_ladders, EnumSpec, SuiteReport};
use mwrsk::rsk::{in_image, is_permissible_pair, rsk, LadderTuple};
use mwrsk::tableaux::rsk_pair;
use mwrsk::words::{
    antitableau_of_word, bruhat_leq, crsk, format_reduced_word, gl_step, knuth_p, left_key, mw_words, reduced_word,
    right_key, w_beta, RowTuple, Tableau,
};
use mwrsk::{Multisegment, Segment};

struct Outcome {
    ok: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Outcome {
        Outcome { ok: true, notes: Vec::new() }
    }

    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.ok = false;
            self.notes.push(format!("mismatch: {}", what.into()));
        }
    }

    fn suite(&mut self, name: &str, spec: EnumSpec) -> Option<SuiteReport> {
        match run_suite(name, &spec, None) {
            Ok(r) => {
                self.notes.push(format!(
                    "{name}: {} instances, {} failures ({}) in {:.1?}",
                    r.instances, r.failures_total, r.spec, r.wall_time
                ));
                for f in r.failures.iter().take(3) {
                    self.notes.push(format!("  {}: {} [{}]", f.input, f.message, f.reproducer));
                }
                self.ok &= r.passed();
                Some(r)
            }
            Err(e) => {
                self.ok = false;
                self.notes.push(format!("{name}: {e}"));
                None
            }
        }
    }

    fn within(&mut self, elapsed: Duration, limit: Duration) {
        if elapsed > limit {
            self.ok = false;
            self.notes.push(format!("took {elapsed:.1?}, limit {limit:?}"));
        }
    }

    fn tally_positive(&mut self, r: &Option<SuiteReport>, key: &str) {
        let n = r.as_ref().and_then(|r| r.tallies.get(key).copied()).unwrap_or(0);
        self.expect(n > 0, format!("no instance tallied as `{key}`"));
    }
}

fn tab(rows: &[&[i32]]) -> Tableau {
    Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn ms(s: &str) -> Multisegment {
    s.parse().unwrap()
}

fn goldens() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    o.expect(rsk(&ms("[1,3]+[2,2]")).to_string() == "[2,3]; [1,2]", "RSK([1,3]+[2,2])");
    let t: LadderTuple = "[3,3]+[1,2]; [2,3]; [1,2]".parse().unwrap();
    o.expect(!in_image(&t), "([3,3]+[1,2], [2,3], [1,2]) reported inside the image");

    let u: RowTuple = "6:5,6;5:3,4;4:2,3,3;3:1,2,2;2:1,2;1:1".parse().unwrap();
    let (p, q) = crsk(&u);
    o.expect(p == tab(&[&[1, 1, 1, 2], &[2, 2, 2], &[3, 3, 3], &[4, 6], &[5]]), "P of the row tuple");
    o.expect(q == tab(&[&[1, 2, 3, 3], &[2, 3, 4], &[4, 4, 5], &[5, 6], &[6]]), "Q of the row tuple");

    let w = mw_words(&u).unwrap();
    o.expect(w.u_hat.to_string() == "6:5,6;5:3,4;4:2,3,3;3:1,2,2;2:1", "Û");
    o.expect((w.m, w.k_hat) == (1, 2), "m and k̂");
    o.expect(w.dagger.to_string() == "6:6,6;5:3,5;4:2,3,4;3:1,2,2;2:1", "u†");
    o.expect(w.delta_circ == Segment::new(1, 5).unwrap(), "k = 5");

    let g = gl_step(&p, &q).unwrap();
    o.expect(g.p_dagger == tab(&[&[1, 1, 2], &[2, 2, 4], &[3, 3], &[5, 6], &[6]]), "P†");
    o.expect(g.q_dagger == tab(&[&[2, 3, 3], &[3, 4, 4], &[4, 5], &[5, 6], &[6]]), "Q†");

    let (kp, kq) = (right_key(&p), left_key(&q));
    o.expect(kp.weight(6) == [3, 4, 3, 1, 0, 2], "weight of the right key of P");
    o.expect(kq.weight(6) == [3, 4, 0, 3, 1, 2], "weight of the left key of Q");
    let (wa, wb) = (w_beta(&kp.weight(6)), w_beta(&kq.weight(6)));
    o.expect(format_reduced_word(&reduced_word(&wa)) == "s1s5s4", "w_α");
    o.expect(format_reduced_word(&reduced_word(&wb)) == "s1s3s5s4s5", "w_β");
    o.expect(bruhat_leq(&wa, &wb), "w_α <= w_β");
    o.within(start.elapsed(), Duration::from_secs(1));
    o
}

const MAIN: EnumSpec = EnumSpec::window(1, 4, 5);
const ENHANCED: EnumSpec = EnumSpec::window(1, 4, 5).with_dummies(2);
const TUPLES: EnumSpec = EnumSpec::window(1, 6, 6);

fn mw_involution() -> Outcome {
    let mut o = Outcome::new();
    let r = o.suite("mw-involution", MAIN);
    if let Some(r) = r {
        o.within(r.wall_time, Duration::from_secs(60));
    }
    o.suite("mw-injective", MAIN);
    o.suite("mw-enhanced", ENHANCED);
    o.suite("mw-depth", MAIN);
    o
}

fn bijection() -> Outcome {
    let mut o = Outcome::new();
    o.suite("rsk-bijection", MAIN);
    let r = o.suite("rsk-image-pairs", MAIN);
    o.tally_positive(&r, "permissible");
    o.suite("rsk-image-tuples", MAIN);
    o
}

fn commutation() -> Outcome {
    let mut o = Outcome::new();
    let r = o.suite("commutation", MAIN);
    o.tally_positive(&r, "applies (genuine)");
    let r = o.suite("commutation", ENHANCED);
    o.tally_positive(&r, "applies (enhanced)");
    o
}

fn socle() -> Outcome {
    let mut o = Outcome::new();
    let r = o.suite("thm-main-socle-chain", MAIN);
    o.tally_positive(&r, "second case");
    let r = o.suite("socle-kinverse", MAIN);
    o.tally_positive(&r, "permissible");
    o
}

fn dummy() -> Outcome {
    let mut o = Outcome::new();
    o.suite("thm-dummy", ENHANCED);
    o
}

fn standard() -> Outcome {
    let mut o = Outcome::new();
    for spec in [EnumSpec::window(1, 3, 3).with_dummies(4), ENHANCED] {
        let r = o.suite("prop-std", spec);
        o.tally_positive(&r, "zelevinsky");
        o.tally_positive(&r, "langlands");
    }
    o
}

fn triangular_key() -> Outcome {
    let mut o = Outcome::new();
    let r = o.suite("words-triangular-key", TUPLES);
    o.tally_positive(&r, "flagged");
    if let Some(r) = r {
        o.within(r.wall_time, Duration::from_secs(300));
    }
    o
}

fn words_gl() -> Outcome {
    let mut o = Outcome::new();
    let r = o.suite("words-gl", TUPLES);
    o.tally_positive(&r, "flagged");
    o.suite("words-square", MAIN);
    o
}

fn drs() -> Outcome {
    let mut o = Outcome::new();
    let r = o.suite("drs-basis", EnumSpec::window(1, 5, 6));
    o.tally_positive(&r, "matrix size 12");
    o
}

fn oracles() -> Outcome {
    let mut o = Outcome::new();
    let mut bad = 0;
    for m in enumerate(&MAIN).unwrap() {
        let pair = rsk_pair(&m);
        bad += usize::from((pair.p.rows().to_vec(), pair.q.rows().to_vec()) != common::bump_rsk(&m));
    }
    o.expect(bad == 0, format!("{bad} multisegments where RSK differs from bumping"));

    let mut bad = 0;
    for n in 1..=5 {
        let perms = common::permutations(n);
        for v in &perms {
            let below = common::bruhat_interval(v);
            bad += perms.iter().filter(|u| bruhat_leq(u, v) != below.contains(*u)).count();
        }
    }
    o.expect(bad == 0, format!("{bad} Bruhat comparisons differ from the subword oracle"));

    let mut all: Vec<Vec<i32>> = (0..=7).flat_map(|n| common::words(n, 3)).collect();
    all.extend(common::permutations(7).into_iter().map(|p| p.into_iter().map(|x| x as i32).collect::<Vec<_>>()));
    let mut bad = 0;
    let mut classes = 0;
    for class in common::knuth_classes(all) {
        classes += 1;
        let tabs: Vec<_> = class.iter().filter(|w| common::is_tableau_word(w)).collect();
        let antis: Vec<_> = class.iter().filter(|w| common::is_antitableau_word(w)).collect();
        let unique = tabs.len() == 1 && antis.len() == 1;
        let agree =
            unique && class.iter().all(|w| &knuth_p(w).word() == tabs[0] && &antitableau_of_word(w).word() == antis[0]);
        bad += usize::from(!agree);
    }
    o.expect(bad == 0, format!("{bad} of {classes} Knuth classes"));

    let mut bad = 0;
    let small = enumerate(&EnumSpec::window(1, 4, 4)).unwrap();
    for l in &window_ladders(1, 4, 3) {
        bad += small
            .iter()
            .filter(|m| !m.is_zero() && is_permissible_pair(l, m) != common::permissible_all_chains(l, m))
            .count();
    }
    o.expect(bad == 0, format!("{bad} pairs where maximal chains miss a violation"));
    o
}

fn scans() -> Outcome {
    let mut o = Outcome::new();
    let r = o.suite("conj-left-chain", MAIN);
    if let Some(r) = &r {
        o.notes.extend(r.tallies.iter().map(|(k, v)| format!("  {k}: {v}")));
    }
    o.suite("lowest-ladder", MAIN);
    o.suite("schuetzenberger", MAIN);
    o.suite("conj-basis-nonsaturated", EnumSpec::window(1, 3, 4));
    o.suite("tableau-order", MAIN);
    o
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("golden examples", goldens),
        ("MW involution", mw_involution),
        ("K and K' are inverse bijections", bijection),
        ("K commutes with MW", commutation),
        ("socle recursion", socle),
        ("enhanced socle identity", dummy),
        ("standard-module interpolation", standard),
        ("triangular key characterisation", triangular_key),
        ("MW on cRSK pairs", words_gl),
        ("RSK-standard basis at desk scale", drs),
        ("oracle equivalences", oracles),
        ("report-only scans", scans),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        println!("criterion {:>2} {}: {} ({:.1?})", i + 1, if o.ok { "PASS" } else { "FAIL" }, name, start.elapsed());
        for n in &o.notes {
            println!("    {n}");
        }
        failed += usize::from(!o.ok);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
