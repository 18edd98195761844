//! Frozen worked examples for the funnel combinatorics, each checked by hand
//! against the Stern–Brocot picture.

use twobridge_farey::{
    braid_word, center_corner_index, corners, crossings, funnel_edges, hubs, interior_edges,
    is_palindrome, reverse, tet_number, Fraction, Side,
};

fn f(p: i64, q: i64) -> Fraction {
    Fraction::new(p, q)
}

#[test]
fn slope_2_7() {
    let a = f(2, 7);
    assert_eq!(center_corner_index(a), (f(1, 3), Fraction::ZERO, 2));
    assert_eq!(corners(a), (f(1, 4), f(1, 3)));
    let walls: Vec<String> = funnel_edges(a).iter().map(|e| e.to_string()).collect();
    assert_eq!(walls, ["[0, 1]", "[0, 1/2]", "[0, 1/3]", "[1/4, 1/3]"]);
    assert_eq!(braid_word(a), [3, 2]);
    assert_eq!(crossings(a), 5);
    assert_eq!(tet_number(a), 4);
    assert_eq!(reverse(a), f(3, 7));
}

#[test]
fn slope_24_103() {
    let a = f(24, 103);
    let walls: Vec<String> = funnel_edges(a).iter().map(|e| e.to_string()).collect();
    assert_eq!(
        walls,
        [
            "[0, 1]",
            "[0, 1/2]",
            "[0, 1/3]",
            "[0, 1/4]",
            "[1/5, 1/4]",
            "[2/9, 1/4]",
            "[3/13, 1/4]",
            "[3/13, 4/17]",
            "[3/13, 7/30]",
            "[10/43, 7/30]",
            "[17/73, 7/30]",
        ]
    );
    assert_eq!(braid_word(a), [4, 3, 2, 3]);
    assert_eq!(crossings(a), 12);
    assert_eq!(tet_number(a), 18);
    assert_eq!(interior_edges(a).len(), 9);

    let h = hubs(a);
    let view: Vec<(Fraction, usize, Side)> =
        h.iter().map(|h| (h.slope, h.spokes, h.side)).collect();
    assert_eq!(
        view,
        [
            (Fraction::ZERO, 4, Side::Left),
            (f(1, 4), 3, Side::Right),
            (f(3, 13), 2, Side::Left),
            (f(7, 30), 2, Side::Right),
        ]
    );
}

#[test]
fn slope_2_5() {
    let a = f(2, 5);
    let walls: Vec<String> = funnel_edges(a).iter().map(|e| e.to_string()).collect();
    assert_eq!(walls, ["[0, 1]", "[0, 1/2]", "[1/3, 1/2]"]);
    assert_eq!(braid_word(a), [2, 2]);
    assert_eq!(crossings(a), 4);
    assert_eq!(tet_number(a), 2);
    assert!(is_palindrome(a));
}

#[test]
fn torus_knot_slopes_have_no_interior_edges() {
    // 1/3 (the trefoil): two walls, no tetrahedra.
    assert_eq!(funnel_edges(f(1, 3)).len(), 2);
    assert_eq!(tet_number(f(1, 3)), 0);
    assert_eq!(crossings(f(1, 3)), 3);
    // 1/2 (the Hopf link): a single wall.
    assert_eq!(funnel_edges(f(1, 2)).len(), 1);
    assert_eq!(crossings(f(1, 2)), 2);
}

#[test]
fn slope_42967_90783() {
    let a = f(42967, 90783);
    assert_eq!(braid_word(a), [2, 8, 1, 6, 5, 6, 1, 8, 2]);
    assert!(is_palindrome(a));
    assert_eq!(crossings(a), 39);
    assert_eq!(tet_number(a), 72);
    // It is the palindrome slope attached to the Farey edge [133/281, 195/412].
    let e = twobridge_farey::Edge::new(f(133, 281), f(195, 412));
    assert_eq!(e.palindrome_slope(), a);
    assert_eq!(e.minus(), f(133, 281));
    // 195/412 is numerically smaller than 133/281 even though it is "outer".
    assert_eq!(e.left(), f(195, 412));
}
