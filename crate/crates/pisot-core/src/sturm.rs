//! Sturm chains: exact real-root counting and isolation for squarefree
//! integer polynomials.
//!
//! The chain is the signed pseudo-remainder sequence of (p, p') with contents
//! stripped. Each pseudo-division multiplier is a positive scalar after sign
//! correction, so the sign pattern at any point matches the rational Sturm
//! chain exactly. For squarefree p, V(a) - V(b) counts roots in the half-open
//! interval (a, b] with no condition on the endpoints, so open/closed
//! endpoint flags reduce to exact bookkeeping on p(a), p(b).

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::interval::RationalInterval;
use crate::poly::IntPoly;

/// The signed remainder chain of (p, p').
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    /// Builds the chain. Errors on zero input and on input that is not
    /// squarefree (detected exactly: the chain then terminates at a
    /// nonconstant gcd).
    pub fn new(p: &IntPoly) -> Result<Self, Error> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut chain = vec![p.primitive_part()];
        if p.deg() >= 1 {
            chain.push(p.derivative().primitive_part());
            loop {
                let a = &chain[chain.len() - 2];
                let b = &chain[chain.len() - 1];
                let r = a.pseudo_rem(b);
                if r.is_zero() {
                    break;
                }
                // prem = lc(b)^(delta+1) (a mod b); flip so the new element is
                // a positive multiple of -(a mod b).
                let delta_plus_one = a.deg() - b.deg() + 1;
                let m_negative = b.leading().is_negative() && delta_plus_one % 2 == 1;
                let next = if m_negative { r } else { -&r };
                chain.push(next.primitive_part());
            }
        }
        if chain.last().expect("nonempty chain").deg() > 0 {
            return Err(Error::NotSquarefree);
        }
        Ok(SturmChain { chain })
    }

    pub fn polynomial(&self) -> &IntPoly {
        &self.chain[0]
    }

    fn count_variations<I: Iterator<Item = i8>>(signs: I) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    /// Sign variations at a finite rational point.
    pub fn variations_at(&self, q: &BigRational) -> usize {
        Self::count_variations(self.chain.iter().map(|f| f.sign_at(q)))
    }

    /// Sign variations at +infinity (leading coefficient signs).
    pub fn variations_at_pos_inf(&self) -> usize {
        Self::count_variations(self.chain.iter().map(|f| {
            if f.leading().is_negative() {
                -1
            } else {
                1
            }
        }))
    }

    /// Sign variations at -infinity.
    pub fn variations_at_neg_inf(&self) -> usize {
        Self::count_variations(self.chain.iter().map(|f| {
            let s: i8 = if f.leading().is_negative() { -1 } else { 1 };
            if f.deg() % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Number of roots in (a, b], exact for any rational endpoints.
    pub fn count_half_open(&self, a: &BigRational, b: &BigRational) -> usize {
        if a >= b {
            return 0;
        }
        self.variations_at(a) - self.variations_at(b)
    }
}

/// Number of real roots of squarefree `p` in `iv`, honoring the endpoint
/// flags exactly.
pub fn count_roots_in(p: &IntPoly, iv: &RationalInterval) -> Result<usize, Error> {
    let chain = SturmChain::new(p)?;
    if iv.lo == iv.hi {
        return Ok(if p.sign_at(&iv.lo) == 0 { 1 } else { 0 });
    }
    let mut n = chain.count_half_open(&iv.lo, &iv.hi);
    if !iv.hi_closed && p.sign_at(&iv.hi) == 0 {
        n -= 1;
    }
    if iv.lo_closed && p.sign_at(&iv.lo) == 0 {
        n += 1;
    }
    Ok(n)
}

/// Number of real roots of squarefree `p` in (a, +inf), or [a, +inf) when
/// `closed` is set.
pub fn count_roots_above(p: &IntPoly, a: &BigRational, closed: bool) -> Result<usize, Error> {
    let chain = SturmChain::new(p)?;
    let mut n = chain.variations_at(a) - chain.variations_at_pos_inf();
    if closed && p.sign_at(a) == 0 {
        n += 1;
    }
    Ok(n)
}

/// Total number of real roots of squarefree `p`.
pub fn count_real_roots(p: &IntPoly) -> Result<usize, Error> {
    let chain = SturmChain::new(p)?;
    Ok(chain.variations_at_neg_inf() - chain.variations_at_pos_inf())
}

/// A half-open interval (lo, hi] containing exactly one real root.
/// Endpoints are dyadic rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealBracket {
    pub lo: BigRational,
    pub hi: BigRational,
}

/// An integer B with every real root of p strictly inside (-B, B).
pub fn cauchy_root_bound(p: &IntPoly) -> BigInt {
    let d = p.deg();
    let lc = p.leading().abs();
    let mut m = BigInt::zero();
    for i in 0..d {
        let a = p.coeff(i).abs();
        if a > m {
            m = a;
        }
    }
    // |root| <= 1 + max|c_i| / |lc|; round up and add one for strictness.
    BigInt::from(2) + (m + &lc - 1) / lc
}

/// Isolating brackets for all real roots of squarefree `p`, in ascending
/// order. Each bracket (lo, hi] holds exactly one root; a root may sit
/// exactly at `hi`.
pub fn isolate_real_roots(p: &IntPoly) -> Result<Vec<RealBracket>, Error> {
    let chain = SturmChain::new(p)?;
    if p.deg() == 0 {
        return Ok(Vec::new());
    }
    let b = cauchy_root_bound(p);
    let lo = BigRational::from_integer(-&b);
    let hi = BigRational::from_integer(b);
    let mut out = Vec::new();
    split(&chain, &lo, chain.variations_at(&lo), &hi, chain.variations_at(&hi), &mut out);
    Ok(out)
}

fn split(
    chain: &SturmChain,
    lo: &BigRational,
    vlo: usize,
    hi: &BigRational,
    vhi: usize,
    out: &mut Vec<RealBracket>,
) {
    let count = vlo - vhi;
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push(RealBracket {
            lo: lo.clone(),
            hi: hi.clone(),
        });
        return;
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let mid = (lo + hi) / &two;
    let vmid = chain.variations_at(&mid);
    split(chain, lo, vlo, &mid, vmid, out);
    split(chain, &mid, vmid, hi, vhi, out);
}

/// Shrinks a one-root bracket by sign bisection until hi - lo <= width.
/// Returns (lo, hi) with the root in [lo, hi]; lo == hi when the root is
/// hit exactly (it is then rational).
pub fn refine_bracket(
    p: &IntPoly,
    bracket: &RealBracket,
    width: &BigRational,
) -> (BigRational, BigRational) {
    let mut lo = bracket.lo.clone();
    let mut hi = bracket.hi.clone();
    if p.sign_at(&hi) == 0 {
        return (hi.clone(), hi);
    }
    let s_hi = p.sign_at(&hi);
    let mut s_lo = p.sign_at(&lo);
    if s_lo == 0 {
        // lo itself is a (different, adjacent) root; just right of it the
        // sign is opposite to s_hi because exactly one root lies in (lo, hi].
        s_lo = -s_hi;
    }
    debug_assert!(s_hi != 0 && s_lo != s_hi);
    let two = BigRational::from_integer(BigInt::from(2));
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / &two;
        let s_mid = p.sign_at(&mid);
        if s_mid == 0 {
            return (mid.clone(), mid);
        }
        if s_mid == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_descending_i64(c)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn counts_simple_quadratic() {
        let f = p(&[1, 0, -2]); // x^2 - 2
        assert_eq!(count_real_roots(&f).unwrap(), 2);
        let iv = RationalInterval::left_open(q(1, 1), q(3, 2)).unwrap();
        assert_eq!(count_roots_in(&f, &iv).unwrap(), 1);
        let iv = RationalInterval::open(q(-1, 1), q(1, 1)).unwrap();
        assert_eq!(count_roots_in(&f, &iv).unwrap(), 0);
        assert_eq!(count_roots_above(&f, &q(0, 1), false).unwrap(), 1);
        assert_eq!(count_roots_above(&f, &q(-2, 1), false).unwrap(), 2);
    }

    #[test]
    fn cubic_with_one_real_root() {
        let f = p(&[1, 0, -1, -1]); // x^3 - x - 1
        assert_eq!(count_real_roots(&f).unwrap(), 1);
        let iv = RationalInterval::open(q(1, 1), q(2, 1)).unwrap();
        assert_eq!(count_roots_in(&f, &iv).unwrap(), 1);
        let iv = RationalInterval::open(q(-2, 1), q(1, 1)).unwrap();
        assert_eq!(count_roots_in(&f, &iv).unwrap(), 0);
        assert_eq!(count_roots_above(&f, &q(1, 1), false).unwrap(), 1);
    }

    #[test]
    fn endpoint_flags_are_exact() {
        // (x-1)(x-2)(x-3)
        let f = &(&p(&[1, -1]) * &p(&[1, -2])) * &p(&[1, -3]);
        let count = |a: i64, b: i64, lc: bool, hc: bool| {
            let iv = RationalInterval::new(q(a, 1), q(b, 1), lc, hc).unwrap();
            count_roots_in(&f, &iv).unwrap()
        };
        assert_eq!(count(1, 3, true, true), 3);
        assert_eq!(count(1, 3, false, true), 2);
        assert_eq!(count(1, 3, true, false), 2);
        assert_eq!(count(1, 3, false, false), 1);
        assert_eq!(count(0, 4, false, false), 3);
        assert_eq!(count(2, 2, true, true), 1);
        assert_eq!(count_roots_above(&f, &q(3, 1), false).unwrap(), 0);
        assert_eq!(count_roots_above(&f, &q(3, 1), true).unwrap(), 1);
    }

    #[test]
    fn rejects_non_squarefree() {
        let f = &p(&[1, -1]) * &p(&[1, -1]);
        assert!(matches!(SturmChain::new(&f), Err(Error::NotSquarefree)));
        assert!(matches!(
            count_real_roots(&IntPoly::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn isolation_and_refinement() {
        let f = p(&[1, 0, -2]); // roots -sqrt2, sqrt2
        let brackets = isolate_real_roots(&f).unwrap();
        assert_eq!(brackets.len(), 2);
        assert!(brackets[0].hi <= brackets[1].lo);
        let width = q(1, 1 << 30);
        let (lo, hi) = refine_bracket(&f, &brackets[1], &width);
        // sqrt2 = 1.41421356...
        assert!(lo <= hi && &hi - &lo <= width);
        assert!(lo < q(141421357, 100000000) && hi > q(141421356, 100000000));

        // rational roots are isolated like any others
        let g = p(&[2, -7, 3]); // (2x-1)(x-3)
        let brackets = isolate_real_roots(&g).unwrap();
        assert_eq!(brackets.len(), 2);
        let (lo, hi) = refine_bracket(&g, &brackets[0], &q(1, 1 << 40));
        assert!(lo <= q(1, 2) && q(1, 2) <= hi);
        // a dyadic root gets hit exactly by bisection
        let lin = p(&[2, -1]);
        let bracket = RealBracket {
            lo: q(0, 1),
            hi: q(1, 1),
        };
        let (lo, hi) = refine_bracket(&lin, &bracket, &q(1, 1 << 40));
        assert_eq!(lo, hi);
        assert_eq!(lo, q(1, 2));
    }

    #[test]
    fn refinement_copes_with_root_at_lower_endpoint() {
        // x(x^2 - 1): isolation splits at 0, which is itself a root, so the
        // bracket for the root at 1 starts exactly at a root of f.
        let f = p(&[1, 0, -1, 0]);
        let brackets = isolate_real_roots(&f).unwrap();
        assert_eq!(brackets.len(), 3);
        for (b, root) in brackets.iter().zip([-1i64, 0, 1]) {
            let r = q(root, 1);
            assert!(b.lo < r && r <= b.hi);
            let (lo, hi) = refine_bracket(&f, b, &q(1, 1 << 20));
            assert!(lo <= r && r <= hi);
        }
    }

    #[test]
    fn isolation_handles_many_roots() {
        // (x-1)(x-2)(x-3)(x+5)
        let f = &(&(&p(&[1, -1]) * &p(&[1, -2])) * &p(&[1, -3])) * &p(&[1, 5]);
        let brackets = isolate_real_roots(&f).unwrap();
        assert_eq!(brackets.len(), 4);
        for (b, root) in brackets.iter().zip([-5i64, 1, 2, 3]) {
            let r = q(root, 1);
            assert!(b.lo < r && r <= b.hi);
        }
    }
}
