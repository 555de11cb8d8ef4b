//! Whether `Z[alpha]` is the full ring of integers, by four explicit
//! conditions on `(a, b)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::residue;
use crate::factor::is_squarefree;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Maximality {
    pub maximal: bool,
    /// The first violated condition, e.g. `"(2): (a,b) = (3,0) mod 4"`.
    pub failed: Option<String>,
}

impl Maximality {
    fn fail(detail: String) -> Self {
        Maximality { maximal: false, failed: Some(detail) }
    }
}

const MOD9_CLASSES: &[(u64, u64)] = &[
    (0, 2),
    (0, 5),
    (3, 8),
    // (3, 2) and (6, -1) are two separate pairs
    (3, 2),
    (6, 8),
    (6, 5),
    (0, 4),
    (0, 7),
    (3, 1),
    (3, 7),
    (6, 1),
    (6, 4),
];

/// Removes from `n` every prime that also divides `m`.
fn strip_common(mut n: BigInt, m: &BigInt) -> BigInt {
    loop {
        let g = n.gcd(m);
        if g.is_one() {
            return n;
        }
        n /= g;
    }
}

/// Evaluates the conditions in order; errors with `Indeterminate` only if
/// a number that must be checked for squarefreeness resists factoring.
pub fn is_order_maximal(a: &BigInt, b: &BigInt) -> Result<Maximality> {
    // (1) p | a, p | b  =>  v_p(b) = 1; with g = gcd(a, b) that is g
    // squarefree and coprime to b / g
    let g = a.gcd(b);
    if g.is_zero() {
        return Ok(Maximality::fail("(1): a = b = 0".into()));
    }
    if !g.is_one() && (!is_squarefree(&g)? || !(b / &g).gcd(&g).is_one()) {
        return Ok(Maximality::fail(format!("(1): some prime divides a and b with p^2 | b (gcd {g})")));
    }
    // (2) 2 ∤ a, 2 | b  =>  (a, b) in {(1, 0), (3, 2)} mod 4
    if a.is_odd() && b.is_even() {
        let class = (residue(a, 4), residue(b, 4));
        if class != (1, 0) && class != (3, 2) {
            return Ok(Maximality::fail(format!("(2): (a,b) = ({},{}) mod 4", class.0, class.1)));
        }
    }
    // (3) 3 | a, 3 ∤ b  =>  (a, b) mod 9 in the list
    let three = BigInt::from(3);
    if a.is_multiple_of(&three) && !b.is_multiple_of(&three) {
        let class = (residue(a, 9), residue(b, 9));
        if !MOD9_CLASSES.contains(&class) {
            return Ok(Maximality::fail(format!("(3): (a,b) = ({},{}) mod 9", class.0, class.1)));
        }
    }
    // (4) p ∉ {2, 3}, p ∤ ab, p | disc  =>  v_p(disc) = 1
    let d = super::disc(a, b);
    let rest = strip_common(d, &(BigInt::from(6) * a * b));
    if !rest.is_zero() && !is_squarefree(&rest)? {
        return Ok(Maximality::fail("(4): p^2 | disc for some p not dividing 6ab".into()));
    }
    Ok(Maximality { maximal: true, failed: None })
}

/// The conditions that concern `p` alone: `Z[alpha]` is maximal at `p`.
pub fn is_locally_maximal(a: &BigInt, b: &BigInt, p: u64) -> bool {
    let pb = BigInt::from(p);
    let (pa, pbb) = (a.is_multiple_of(&pb), b.is_multiple_of(&pb));
    if pa && pbb {
        return !b.is_multiple_of(&(&pb * &pb));
    }
    match p {
        2 => !(a.is_odd() && b.is_even()) || [(1, 0), (3, 2)].contains(&(residue(a, 4), residue(b, 4))),
        3 => !pa || MOD9_CLASSES.contains(&(residue(a, 9), residue(b, 9))),
        _ => pa || pbb || !super::disc(a, b).is_multiple_of(&(&pb * &pb)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::dedekind_divides;
    use crate::IntPoly;

    fn max(a: i64, b: i64) -> Maximality {
        is_order_maximal(&BigInt::from(a), &BigInt::from(b)).unwrap()
    }

    #[test]
    fn examples() {
        assert!(max(51, 122).maximal);
        let m = max(35, 20);
        assert!(!m.maximal);
        assert!(m.failed.unwrap().starts_with("(2)"));
        assert!(!max(3, 4).maximal);
        assert!(max(2, 2).maximal);
        assert!(max(4, 2).maximal);
        assert!(!max(4, 4).maximal);
    }

    /// Same verdict as Dedekind's criterion at every prime dividing the
    /// discriminant.
    #[test]
    fn agrees_with_dedekind() {
        for a in -30..60i64 {
            for b in 1..60i64 {
                let (ab, bb) = (BigInt::from(a), BigInt::from(b));
                let d = super::super::disc(&ab, &bb);
                if d.is_zero() {
                    continue;
                }
                let f = IntPoly::trinomial(&ab, &bb);
                let primes = crate::factor::factor_bounded(&d).unwrap();
                // v_p(disc) = 1 forces p ∤ (Z_K : Z[alpha])
                let dedekind = primes
                    .iter()
                    .filter(|(_, k)| *k >= 2)
                    .all(|(p, _)| !dedekind_divides(&f, p.try_into().unwrap()).unwrap());
                assert_eq!(max(a, b).maximal, dedekind, "({a},{b})");
                for p in [2u64, 3, 5, 7] {
                    assert_eq!(is_locally_maximal(&ab, &bb, p), !dedekind_divides(&f, p).unwrap(), "({a},{b}) p={p}");
                }
            }
        }
    }
}
