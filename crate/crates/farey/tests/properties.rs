//! Randomised structural invariants of funnels and Stern–Brocot
//! decompositions.

use proptest::prelude::*;
use twobridge_farey::{
    braid_word, center_corner_index, continued_fraction, funnel_edges, hubs, reverse, tet_number,
    Fraction,
};

fn arb_slope(max_den: i64) -> impl Strategy<Value = Fraction> {
    (2..=max_den)
        .prop_flat_map(|q| (1..q, Just(q)))
        .prop_map(|(p, q)| Fraction::new(p, q))
}

proptest! {
    #[test]
    fn funnel_is_a_nested_chain_of_farey_intervals(alpha in arb_slope(10_000)) {
        let funnel = funnel_edges(alpha);
        prop_assert_eq!(funnel[0].left(), Fraction::ZERO);
        prop_assert_eq!(funnel[0].right(), Fraction::ONE);
        for e in &funnel {
            prop_assert!(e.left() < alpha && alpha < e.right());
            prop_assert!(e.left().is_farey_pair(e.right()));
        }
        for w in funnel.windows(2) {
            let m = w[0].mediant();
            // Each wall replaces one endpoint of the previous one by its mediant.
            prop_assert!(
                (w[1].left() == m && w[1].right() == w[0].right())
                    || (w[1].right() == m && w[1].left() == w[0].left())
            );
        }
        prop_assert_eq!(funnel.last().unwrap().mediant(), alpha);
    }

    #[test]
    fn denominators_grow_along_the_funnel(alpha in arb_slope(10_000)) {
        let funnel = funnel_edges(alpha);
        for w in funnel.windows(2) {
            prop_assert!(w[1].plus().den() > w[0].plus().den());
            prop_assert!(w[1].minus().den() >= w[0].minus().den());
        }
        for e in &funnel {
            prop_assert_eq!(e.minus().mediant(e.hat()), e.plus());
        }
    }

    #[test]
    fn center_corner_reassembles_the_slope(gamma in arb_slope(10_000)) {
        let (center, corner, j) = center_corner_index(gamma);
        prop_assert!(j >= 2);
        prop_assert_eq!(corner.mediant_pow(center, j), gamma);
        prop_assert!(center.is_farey_pair(corner));
        prop_assert!(center.den() < gamma.den());
    }

    #[test]
    fn diagram_statistics_come_from_partial_quotients(alpha in arb_slope(10_000)) {
        let cf = continued_fraction(alpha);
        let total: i64 = cf.iter().sum();
        prop_assert_eq!(crossings_as_i64(alpha), total);
        prop_assert_eq!(braid_word(alpha), cf[1..].to_vec());
        if alpha != Fraction::new(1, 2) {
            prop_assert_eq!(tet_number(alpha) as i64, 2 * (total - 3));
        }
        let spoke_total: usize = hubs(alpha).iter().map(|h| h.spokes).sum();
        prop_assert_eq!(spoke_total, funnel_edges(alpha).len());
    }

    #[test]
    fn reversal_preserves_diagram_statistics(alpha in arb_slope(5_000)) {
        prop_assume!(2 * alpha.num() <= alpha.den());
        let rev = reverse(alpha);
        prop_assert_eq!(reverse(rev), alpha);
        prop_assert_eq!(rev.den(), alpha.den());
        prop_assert_eq!(crossings_as_i64(rev), crossings_as_i64(alpha));
    }
}

fn crossings_as_i64(alpha: Fraction) -> i64 {
    twobridge_farey::crossings(alpha) as i64
}
