//! Complete enumeration of Pisot numbers of a fixed degree in an interval.
//!
//! The search walks integer power sums s_1, s_2, ... of the candidate's
//! conjugates. If theta is a Pisot number of degree d, its d - 1 other
//! conjugates each have modulus < 1, so |s_k - theta^k| < d - 1 strictly.
//! Maintaining a dyadic window around theta therefore bounds each s_k to a
//! short integer range, Newton's identities convert the s-prefix to integer
//! elementary symmetric values (with non-integrality as a pruning signal),
//! and every leaf polynomial is checked by the exact `is_pisot` filter, so
//! over-inclusive pruning bounds never produce wrong output, only wasted
//! work. Window arithmetic rounds outward, so no true candidate is lost:
//! the enumeration is provably complete.
//!
//! `oracle_enumerate` is an independent completeness oracle: it exhausts
//! the whole coefficient box allowed by the elementary-symmetric bounds and
//! filters with `is_pisot`. It shares no search logic with the power-sum
//! walk, which is what makes the equivalence tests meaningful.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::dyadic::{Dyadic, RoundMode};
use crate::error::Error;
use crate::interval::RationalInterval;
use crate::pisot::{is_pisot, PisotRecord};
use crate::poly::IntPoly;

/// Working precision for window arithmetic: 64 guard bits over a generous
/// base. Outward rounding keeps every true candidate regardless.
const WINDOW_PREC: u32 = 128;

/// Elementary symmetric values e_1..e_k from power sums s_1..s_k via
/// Newton's identities, requiring |s| <= d. `None` when some k e_k fails to
/// divide exactly, which cannot happen for genuine integer polynomials and
/// so serves as a pruning signal.
pub fn newton_e_from_s(s: &[BigInt], d: usize) -> Result<Option<Vec<BigInt>>, Error> {
    if s.len() > d {
        return Err(Error::PowerSumLength);
    }
    let mut e: Vec<BigInt> = Vec::with_capacity(s.len());
    for k in 1..=s.len() {
        match newton_step(&e, &s[..k]) {
            Some(ek) => e.push(ek),
            None => return Ok(None),
        }
    }
    Ok(Some(e))
}

/// One Newton identity: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} s_i with
/// e_0 = 1. `None` if k does not divide the right-hand side.
fn newton_step(e: &[BigInt], s: &[BigInt]) -> Option<BigInt> {
    let k = s.len();
    debug_assert_eq!(e.len(), k - 1);
    let mut sum = BigInt::zero();
    for i in 1..=k {
        let mut term = if i == k {
            s[i - 1].clone()
        } else {
            &e[k - i - 1] * &s[i - 1]
        };
        if i % 2 == 0 {
            term = -term;
        }
        sum += term;
    }
    let kb = BigInt::from(k);
    let (q, r) = sum.div_rem(&kb);
    if r.is_zero() {
        Some(q)
    } else {
        None
    }
}

/// x^d - e_1 x^(d-1) + e_2 x^(d-2) - ... + (-1)^d e_d.
pub fn poly_from_elem_syms(e: &[BigInt]) -> IntPoly {
    let d = e.len();
    let mut coeffs = vec![BigInt::zero(); d + 1];
    coeffs[d] = BigInt::one();
    for (k, ek) in e.iter().enumerate() {
        let v = if (k + 1) % 2 == 1 { -ek } else { ek.clone() };
        coeffs[d - (k + 1)] = v;
    }
    IntPoly::from_ascending(coeffs)
}

/// C(n, k) as a big integer.
fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// |e_k| bounds from the triangle inequality: d - 1 conjugates of modulus
/// < 1 and a dominant root of modulus <= B give
/// |e_k| <= C(d-1, k) + B C(d-1, k-1).
fn elem_sym_bounds(d: usize, b: &BigRational) -> Vec<BigRational> {
    (1..=d)
        .map(|k| {
            BigRational::from_integer(binomial(d - 1, k))
                + b * BigRational::from_integer(binomial(d - 1, k - 1))
        })
        .collect()
}

fn check_search_interval(iv: &RationalInterval) -> Result<(), Error> {
    let one = BigRational::one();
    let above_one = iv.lo > one || (iv.lo == one && !iv.lo_closed);
    if !above_one {
        return Err(Error::InvalidInterval("search interval must lie inside (1, oo)"));
    }
    Ok(())
}

/// All Pisot numbers of degree exactly `d` with theta in `iv`, as records
/// sorted by coefficient sequence.
pub fn enumerate_pisot(d: usize, iv: &RationalInterval) -> Result<Vec<PisotRecord>, Error> {
    if d == 0 {
        return Err(Error::BadDegree("enumeration needs degree at least 1"));
    }
    check_search_interval(iv)?;
    let window = (
        Dyadic::from_rational(&iv.lo, WINDOW_PREC, RoundMode::Floor),
        Dyadic::from_rational(&iv.hi, WINDOW_PREC, RoundMode::Ceil),
    );
    let bounds = elem_sym_bounds(d, &iv.hi);
    let mut state = Search {
        d,
        iv,
        bounds,
        s: Vec::with_capacity(d),
        e: Vec::with_capacity(d),
        out: Vec::new(),
    };
    state.descend(window)?;
    let mut out = state.out;
    out.sort_by(|a, b| a.poly.cmp_desc_lex(&b.poly));
    Ok(out)
}

struct Search<'a> {
    d: usize,
    iv: &'a RationalInterval,
    bounds: Vec<BigRational>,
    s: Vec<BigInt>,
    e: Vec<BigInt>,
    out: Vec<PisotRecord>,
}

impl Search<'_> {
    fn descend(&mut self, window: (Dyadic, Dyadic)) -> Result<(), Error> {
        if self.s.len() == self.d {
            let p = poly_from_elem_syms(&self.e);
            if let Some(rec) = is_pisot(&p, self.iv)? {
                self.out.push(rec);
            }
            return Ok(());
        }
        let k = self.s.len() + 1;
        let slack = BigInt::from(self.d - 1);
        // s_k ranges over [ceil(lo^k - slack), floor(hi^k + slack)].
        let lo_pow = window.0.pow_round(k as u32, WINDOW_PREC, RoundMode::Floor);
        let hi_pow = window.1.pow_round(k as u32, WINDOW_PREC, RoundMode::Ceil);
        let s_min = (lo_pow.to_rational() - BigRational::from_integer(slack.clone()))
            .ceil()
            .to_integer();
        let s_max = (hi_pow.to_rational() + BigRational::from_integer(slack.clone()))
            .floor()
            .to_integer();
        let mut sk = s_min;
        while sk <= s_max {
            self.s.push(sk.clone());
            if let Some(ek) = newton_step(&self.e, &self.s) {
                let within = BigRational::from_integer(ek.abs()) <= self.bounds[k - 1];
                if within {
                    if let Some(next) = shrink_window(&window, &sk, &slack, k as u32) {
                        self.e.push(ek);
                        self.descend(next)?;
                        self.e.pop();
                    }
                }
            }
            self.s.pop();
            sk += 1;
        }
        Ok(())
    }
}

/// Intersects the window with the outward-rounded k-th root band
/// ((s_k - slack)^(1/k), (s_k + slack)^(1/k)); `None` when provably empty.
fn shrink_window(
    window: &(Dyadic, Dyadic),
    sk: &BigInt,
    slack: &BigInt,
    k: u32,
) -> Option<(Dyadic, Dyadic)> {
    let upper_arg = sk + slack;
    if !upper_arg.is_positive() {
        return None; // t^k < s_k + slack <= 0 is impossible for t > 1
    }
    let hi_band = kth_root(&upper_arg, k, RoundMode::Ceil);
    let lower_arg = sk - slack;
    let lo_band = if lower_arg.is_positive() {
        Some(kth_root(&lower_arg, k, RoundMode::Floor))
    } else {
        None // no lower constraint beyond the current window
    };
    let lo = match lo_band {
        Some(lb) if lb > window.0 => lb,
        _ => window.0.clone(),
    };
    let hi = if hi_band < window.1 {
        hi_band
    } else {
        window.1.clone()
    };
    if lo > hi {
        return None;
    }
    Some((lo, hi))
}

fn kth_root(n: &BigInt, k: u32, mode: RoundMode) -> Dyadic {
    let x = Dyadic::from_int(n.clone());
    if k == 1 {
        return x;
    }
    x.nth_root(k, WINDOW_PREC, mode)
}

/// Independent completeness oracle: exhausts every monic integer
/// coefficient vector inside the elementary-symmetric box and filters with
/// `is_pisot`. Limited to d <= 5 because the box grows exponentially.
pub fn oracle_enumerate(d: usize, iv: &RationalInterval) -> Result<Vec<PisotRecord>, Error> {
    if d == 0 {
        return Err(Error::BadDegree("enumeration needs degree at least 1"));
    }
    if d > 5 {
        return Err(Error::BadDegree("oracle enumeration is limited to degree 5"));
    }
    check_search_interval(iv)?;
    let bounds = elem_sym_bounds(d, &iv.hi);
    // |e_k| < bound strictly except possibly at k = 1 for degree 1, so a
    // non-strict integer cap is always safe.
    let caps: Vec<BigInt> = bounds.iter().map(|b| b.floor().to_integer()).collect();
    let mut e: Vec<BigInt> = Vec::with_capacity(d);
    let mut out = Vec::new();
    oracle_walk(d, iv, &caps, &mut e, &mut out)?;
    out.sort_by(|a, b| a.poly.cmp_desc_lex(&b.poly));
    Ok(out)
}

fn oracle_walk(
    d: usize,
    iv: &RationalInterval,
    caps: &[BigInt],
    e: &mut Vec<BigInt>,
    out: &mut Vec<PisotRecord>,
) -> Result<(), Error> {
    if e.len() == d {
        let p = poly_from_elem_syms(e);
        if let Some(rec) = is_pisot(&p, iv)? {
            out.push(rec);
        }
        return Ok(());
    }
    let cap = caps[e.len()].clone();
    let mut v = -cap.clone();
    while v <= cap {
        e.push(v.clone());
        oracle_walk(d, iv, caps, e, out)?;
        e.pop();
        v += 1;
    }
    Ok(())
}
