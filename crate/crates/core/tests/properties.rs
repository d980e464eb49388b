//! Randomised checks beyond the exhaustive windows.

mod common;

use proptest::prelude::*;

use mwrsk::mw::mw_involution;
use mwrsk::rsk::{k_inverse, k_step, rsk, rsk_inverse};
use mwrsk::socle::{socle, socle_chain, Side as Chain};
use mwrsk::tableaux::rsk_pair;
use mwrsk::words::{antitableau_of_word, knuth_p, pieri_factor, Side, Strip};
use mwrsk::{Multisegment, Segment};

fn multisegment(max: usize) -> impl Strategy<Value = Multisegment> {
    prop::collection::vec((-3i64..8, 0i64..5), 0..=max)
        .prop_map(|v| Multisegment::new(v.into_iter().map(|(b, len)| Segment::new(b, b + len).unwrap())))
}

fn word() -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(1i32..6, 0..=8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn rsk_round_trip_on_wide_windows(m in multisegment(8)) {
        let t = rsk(&m);
        prop_assert_eq!(rsk_inverse(&t).unwrap(), m.clone());
        prop_assert!(t.is_dominance_chain() && t.is_pairwise_permissible());
        let pair = rsk_pair(&m);
        prop_assert_eq!((pair.p.rows().to_vec(), pair.q.rows().to_vec()), common::bump_rsk(&m));
    }

    #[test]
    fn involution_and_socle_on_wide_windows(m in multisegment(7)) {
        prop_assert_eq!(mw_involution(&mw_involution(&m).unwrap()).unwrap(), m.clone());
        if !m.is_zero() {
            let (l, mp) = k_step(&m).unwrap();
            prop_assert_eq!(k_inverse(&l, &mp).unwrap(), m.clone());
            prop_assert_eq!(socle(&mp, &l).unwrap(), m.clone());
            prop_assert_eq!(socle_chain(&rsk(&m), Chain::Right).unwrap(), m.clone());
        }
    }

    #[test]
    fn insertion_stays_in_the_knuth_class(w in word()) {
        let class = common::knuth_class(&w);
        prop_assert!(class.contains(&knuth_p(&w).word()));
        prop_assert!(class.contains(&antitableau_of_word(&w).word()));
    }

    #[test]
    fn pieri_factors_multiply_back(w in word(), r in 0usize..4) {
        let t = knuth_p(&w);
        let lam = t.shape();
        let rows = lam.rows();
        // One box off each of the first `r` rows stays a partition when `r` is a column height.
        let heights = lam.conjugate().rows().to_vec();
        let r = if heights.is_empty() { 0 } else { heights[r % heights.len()] };
        let column = mwrsk::tableaux::Shape(
            rows.iter().enumerate().map(|(i, &x)| if i < r { x - 1 } else { x }).filter(|&x| x > 0).collect(),
        );
        let row = mwrsk::tableaux::Shape(rows[..rows.len().saturating_sub(1)].to_vec());
        for (mu, strip) in [(column, Strip::Column), (row, Strip::Row)] {
            for side in [Side::Left, Side::Right] {
                let f = pieri_factor(&t, &mu, side, strip).unwrap();
                prop_assert_eq!(f.tableau.shape(), mu.clone());
                match strip {
                    Strip::Row => prop_assert!(f.word.windows(2).all(|p| p[0] <= p[1])),
                    Strip::Column => prop_assert!(f.word.windows(2).all(|p| p[0] > p[1])),
                }
                let joined: Vec<i32> = match side {
                    Side::Left => f.word.iter().chain(&f.tableau.word()).copied().collect(),
                    Side::Right => f.tableau.word().iter().chain(&f.word).copied().collect(),
                };
                prop_assert_eq!(knuth_p(&joined), t.clone());
            }
        }
    }
}
