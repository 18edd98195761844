//! Closed forms for the edge polynomials of torus links.
//!
//! For the slopes 1/n the Q family collapses to rescaled Chebyshev
//! polynomials of the second kind.  With U₀ = 1, U₁ = 2x and
//! U_{j+1} = 2x·U_j − U_{j−1},
//!
//!   Q(1/(2m))   = x^{m−1}·U_{m−1}((1 − 2x)/(2x)),
//!   Q(1/(2m+1)) = x^m·(U_m + U_{m−1})((1 − 2x)/(2x)).
//!
//! Substituting u_k = x^k·U_k((1 − 2x)/(2x)) clears the denominators and
//! leaves an integer recurrence:
//!
//!   u₀ = 1,  u₁ = 1 − 2x,  u_{k+1} = (1 − 2x)·u_k − x²·u_{k−1}.
//!
//! Consequently every root of Q(1/n) is real and the root multiset is
//! { ¼·sec²(kπ/n) : 1 ≤ k ≤ (n−1)/2 }, which pins the cusp shapes of the
//! (2, n) torus links without any root finding.

use crate::poly::IntPoly;
use num_bigint::BigInt;

/// Q(1/n) computed from the Chebyshev recurrence instead of the Farey one.
///
/// ```
/// use twobridge_frf::q_torus;
/// assert_eq!(q_torus(3).to_string(), "-x + 1");
/// assert_eq!(q_torus(5).to_string(), "x^2 - 3x + 1");
/// assert_eq!(q_torus(6).to_string(), "3x^2 - 4x + 1");
/// ```
pub fn q_torus(n: u64) -> IntPoly {
    assert!(n >= 2, "torus slope 1/n needs n >= 2, got {n}");
    let one_minus_2x = IntPoly::from_coeffs(vec![BigInt::from(1), BigInt::from(-2)]);
    let x_squared = IntPoly::monomial(BigInt::from(1), 2);
    let mut u_prev = IntPoly::one();
    let mut u = one_minus_2x.clone();
    // After k steps of the loop, u = u_{k+1} and u_prev = u_k.
    let steps = if n % 2 == 0 { n / 2 - 1 } else { n / 2 };
    for _ in 1..steps {
        let next = &(&one_minus_2x * &u) - &(&x_squared * &u_prev);
        u_prev = u;
        u = next;
    }
    if n == 2 {
        IntPoly::one()
    } else if n % 2 == 0 {
        u
    } else {
        // w_m = u_m + x·u_{m−1}
        &u + &u_prev.shift_up(1)
    }
}
