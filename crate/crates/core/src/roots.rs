//! Exact real-root counting with Sturm sequences.
//!
//! Endpoints are handled by one-sided signs: the sign of `q` just right of
//! `a` is the sign of the first nonzero derivative `q^(k)(a)`, and just left
//! of `b` it is that sign times `(-1)^k`. Counting sign variations at `a+`
//! and `b-` therefore gives the number of distinct roots strictly inside
//! `(a, b)` even when an endpoint is itself a root.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::PolyQ;
use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    Finite(Q),
    PosInfinity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenInterval {
    pub lo: Bound,
    pub hi: Bound,
}

impl OpenInterval {
    pub fn new(lo: Bound, hi: Bound) -> Self {
        OpenInterval { lo, hi }
    }

    /// `(0, +inf)`.
    pub fn positive_half_line() -> Self {
        Self::new(Bound::Finite(Q::zero()), Bound::PosInfinity)
    }

    pub fn real_line() -> Self {
        Self::new(Bound::NegInfinity, Bound::PosInfinity)
    }

    pub fn finite(a: Q, b: Q) -> Self {
        Self::new(Bound::Finite(a), Bound::Finite(b))
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInfinity => write!(f, "-inf"),
            Bound::PosInfinity => write!(f, "+inf"),
            Bound::Finite(q) => write!(f, "{q}"),
        }
    }
}

impl fmt::Display for OpenInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

/// Canonical Sturm sequence `p, p', -rem(p, p'), ...`, each member scaled
/// by a positive constant to keep coefficients small.
pub fn sturm_sequence(p: &PolyQ) -> Vec<PolyQ> {
    let mut seq = vec![p.normalize_positive()];
    let d = p.derivative();
    if d.is_zero() {
        return seq;
    }
    seq.push(d.normalize_positive());
    loop {
        let n = seq.len();
        let (_, rem) = seq[n - 2].div_rem(&seq[n - 1]);
        if rem.is_zero() {
            break;
        }
        seq.push((-rem).normalize_positive());
    }
    seq
}

fn sign_of(q: &Q) -> i8 {
    match q.cmp(&Q::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Sign of `p` on `(a, a+delta)` for small delta (`right = true`) or on
/// `(a-delta, a)` (`right = false`).
fn one_sided_sign(p: &PolyQ, a: &Q, right: bool) -> i8 {
    let mut q = p.clone();
    let mut k = 0usize;
    while !q.is_zero() {
        let s = sign_of(&q.eval(a));
        if s != 0 {
            return if right || k.is_multiple_of(2) { s } else { -s };
        }
        q = q.derivative();
        k += 1;
    }
    0
}

fn sign_at(p: &PolyQ, bound: &Bound, right: bool) -> i8 {
    match bound {
        Bound::Finite(a) => one_sided_sign(p, a, right),
        Bound::PosInfinity => p.leading().map_or(0, |l| if l.is_positive() { 1 } else { -1 }),
        Bound::NegInfinity => {
            let s = p.leading().map_or(0, |l| if l.is_positive() { 1 } else { -1 });
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }
    }
}

fn variations(seq: &[PolyQ], bound: &Bound, right: bool) -> usize {
    let signs: Vec<i8> = seq
        .iter()
        .map(|q| sign_at(q, bound, right))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` strictly inside `interval`.
pub fn count_roots_interval(p: &PolyQ, interval: &OpenInterval) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if let (Bound::Finite(a), Bound::Finite(b)) = (&interval.lo, &interval.hi) {
        if a >= b {
            return Ok(0);
        }
    }
    if matches!(interval.lo, Bound::PosInfinity) || matches!(interval.hi, Bound::NegInfinity) {
        return Ok(0);
    }
    if p.degree() == Some(0) {
        return Ok(0);
    }
    let seq = sturm_sequence(p);
    let lo = variations(&seq, &interval.lo, true);
    let hi = variations(&seq, &interval.hi, false);
    Ok(lo.saturating_sub(hi))
}

/// Convenience wrapper: roots on `(0, +inf)`.
pub fn count_positive_roots(p: &PolyQ) -> Result<usize> {
    count_roots_interval(p, &OpenInterval::positive_half_line())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laguerre::{laguerre_coeffs, LaguerreSpec};
    use crate::rational::{q, qi, to_f64};
    use proptest::prelude::*;

    #[test]
    fn laguerre_examples() {
        let half = OpenInterval::positive_half_line();
        let l2m3 = laguerre_coeffs(&LaguerreSpec::positive(2, qi(-3)));
        assert_eq!(count_roots_interval(&l2m3, &half).unwrap(), 0);
        let l2m1 = laguerre_coeffs(&LaguerreSpec::positive(2, qi(-1)));
        assert_eq!(count_roots_interval(&l2m1, &half).unwrap(), 1);
        assert_eq!(count_roots_interval(&PolyQ::one(), &half).unwrap(), 0);
        assert_eq!(count_roots_interval(&PolyQ::zero(), &half), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn endpoint_roots_are_excluded() {
        // z^2 (z - 1)(z - 3): roots 0 (double), 1, 3.
        let p = PolyQ::from_coeffs(vec![qi(0), qi(0), qi(3), qi(-4), qi(1)]);
        assert_eq!(
            count_roots_interval(&p, &OpenInterval::positive_half_line()).unwrap(),
            2
        );
        assert_eq!(
            count_roots_interval(&p, &OpenInterval::finite(qi(1), qi(3))).unwrap(),
            0
        );
        assert_eq!(
            count_roots_interval(&p, &OpenInterval::finite(qi(0), qi(3))).unwrap(),
            1
        );
        assert_eq!(count_roots_interval(&p, &OpenInterval::real_line()).unwrap(), 3);
        assert_eq!(
            count_roots_interval(&p, &OpenInterval::finite(q(-1, 2), q(1, 2))).unwrap(),
            1
        );
    }

    #[test]
    fn multiple_roots_counted_once() {
        // (z - 2)^3 (z + 1)^2
        let a = PolyQ::from_coeffs(vec![qi(-2), qi(1)]);
        let b = PolyQ::from_coeffs(vec![qi(1), qi(1)]);
        let p = &(&(&a * &a) * &a) * &(&b * &b);
        assert_eq!(count_roots_interval(&p, &OpenInterval::real_line()).unwrap(), 2);
        assert_eq!(
            count_roots_interval(&p, &OpenInterval::positive_half_line()).unwrap(),
            1
        );
    }

    /// Dense numerical isolation: sign changes over 10^4 samples, each
    /// bracket refined by bisection; roots found are deflated out and the
    /// remaining sampled sign changes re-counted.
    fn numeric_root_count(p: &PolyQ, a: f64, b: f64) -> usize {
        let pf = p.to_f64();
        let n = 10_000;
        let xs: Vec<f64> = (1..n).map(|i| a + (b - a) * i as f64 / n as f64).collect();
        let mut roots = Vec::new();
        for w in xs.windows(2) {
            let (mut lo, mut hi) = (w[0], w[1]);
            let (flo, fhi) = (pf.eval(lo), pf.eval(hi));
            if flo == 0.0 {
                roots.push(lo);
                continue;
            }
            if flo * fhi < 0.0 {
                for _ in 0..80 {
                    let mid = 0.5 * (lo + hi);
                    if pf.eval(mid) * pf.eval(lo) <= 0.0 {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                roots.push(0.5 * (lo + hi));
            }
        }
        // Deflate: divide out the located roots and make sure no sign change
        // is left over in the quotient.
        let mut coeffs: Vec<f64> = pf.coeffs().to_vec();
        for &r in &roots {
            let deg = coeffs.len() - 1;
            let mut quot = vec![0.0; deg];
            let mut acc = 0.0;
            for k in (0..=deg).rev() {
                acc = acc * r + coeffs[k];
                if k > 0 {
                    quot[k - 1] = acc;
                }
            }
            coeffs = quot;
        }
        let defl = crate::poly::PolyF64::new(coeffs);
        let leftover = xs
            .windows(2)
            .filter(|w| defl.eval(w[0]) * defl.eval(w[1]) < 0.0)
            .count();
        roots.len() + leftover
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn sturm_matches_numeric_isolation(
            roots in proptest::collection::btree_set(-6i64..=6, 0..=5),
            quad in proptest::collection::vec((1i64..5, -3i64..=3), 0..=1),
            lead in prop_oneof![Just(1i64), Just(-2), Just(3)],
        ) {
            // Distinct integer roots shifted by 1/3 so none sits on a sample
            // point; an optional positive-definite quadratic adds complex pairs.
            let mut p = PolyQ::constant(qi(lead));
            for &r in &roots {
                p = &p * &PolyQ::from_coeffs(vec![q(-(3 * r + 1), 3), qi(1)]);
            }
            for &(c, s) in &quad {
                // (z - s)^2 + c
                p = &p * &PolyQ::from_coeffs(vec![qi(s * s + c), qi(-2 * s), qi(1)]);
            }
            prop_assume!(p.degree().unwrap_or(0) <= 8);
            let interval = OpenInterval::finite(qi(-4), qi(5));
            let exact = count_roots_interval(&p, &interval).unwrap();
            let numeric = numeric_root_count(&p, -4.0, 5.0);
            prop_assert_eq!(exact, numeric);
            // Construction oracle.
            let inside = roots.iter().filter(|&&r| {
                let v = to_f64(&q(3 * r + 1, 3));
                v > -4.0 && v < 5.0
            }).count();
            prop_assert_eq!(exact, inside);
        }
    }
}
