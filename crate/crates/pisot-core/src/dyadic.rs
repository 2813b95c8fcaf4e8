//! Dyadic rationals (mantissa times a power of two) with directed rounding.
//!
//! These are the working numbers for every certified numeric step: window
//! endpoints in the enumerator, root enclosures, residual bounds. Addition
//! and multiplication are exact; division, roots and powers take an explicit
//! precision and rounding direction, so callers can always keep error on the
//! safe side of an inequality.

use alloc::format;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Rounding direction for inexact operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RoundMode {
    /// Toward minus infinity.
    Floor,
    /// Toward plus infinity.
    Ceil,
    /// To nearest (ties away from zero). Not directed; only for display and
    /// for iteration steps whose outcome is certified separately.
    Nearest,
}

/// A number of the form man * 2^exp, normalized so man is odd (or zero with
/// exp zero). Equality of values is equality of representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    man: BigInt,
    exp: i64,
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dyadic({} * 2^{})", self.man, self.exp)
    }
}

impl Dyadic {
    pub fn new(man: BigInt, exp: i64) -> Self {
        let mut d = Dyadic { man, exp };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        if self.man.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.man.trailing_zeros().expect("nonzero mantissa");
        if tz > 0 {
            self.man >>= tz;
            self.exp += tz as i64;
        }
    }

    pub fn zero() -> Self {
        Dyadic {
            man: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic {
            man: BigInt::one(),
            exp: 0,
        }
    }

    pub fn from_int(n: BigInt) -> Self {
        Dyadic::new(n, 0)
    }

    pub fn from_i64(n: i64) -> Self {
        Dyadic::new(BigInt::from(n), 0)
    }

    /// man * 2^exp from machine integers.
    pub fn from_parts(man: i64, exp: i64) -> Self {
        Dyadic::new(BigInt::from(man), exp)
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i8 {
        match self.man.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.man.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.man.is_positive()
    }

    /// Mantissa bit length (0 for zero).
    pub fn bits(&self) -> u64 {
        self.man.bits()
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic {
            man: self.man.abs(),
            exp: if self.man.is_zero() { 0 } else { self.exp },
        }
    }

    /// Multiplies by 2^k (exact).
    pub fn mul_pow2(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic {
            man: self.man.clone(),
            exp: self.exp + k,
        }
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.man << self.exp as u64)
        } else {
            BigRational::new(self.man.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    /// Directed dyadic approximation of a rational.
    pub fn from_rational(q: &BigRational, prec: u32, mode: RoundMode) -> Dyadic {
        Dyadic::div(
            &Dyadic::from_int(q.numer().clone()),
            &Dyadic::from_int(q.denom().clone()),
            prec,
            mode,
        )
    }

    /// Keeps `prec` significant bits, rounding in the given direction.
    pub fn round(&self, prec: u32, mode: RoundMode) -> Dyadic {
        assert!(prec >= 1);
        let bits = self.man.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = bits - prec as u64;
        let pow = BigInt::one() << shift;
        let (mut q, r) = self.man.div_rem(&pow);
        match mode {
            RoundMode::Floor => {
                if r.is_negative() {
                    q -= 1;
                }
            }
            RoundMode::Ceil => {
                if r.is_positive() {
                    q += 1;
                }
            }
            RoundMode::Nearest => {
                if (r.abs() << 1) >= pow {
                    if self.man.is_negative() {
                        q -= 1;
                    } else {
                        q += 1;
                    }
                }
            }
        }
        Dyadic::new(q, self.exp + shift as i64)
    }

    /// Quotient with `prec` significant bits, rounded in the given direction.
    pub fn div(a: &Dyadic, b: &Dyadic, prec: u32, mode: RoundMode) -> Dyadic {
        assert!(!b.is_zero(), "dyadic division by zero");
        if a.is_zero() {
            return Dyadic::zero();
        }
        let la = a.man.bits() as i64;
        let lb = b.man.bits() as i64;
        let k = (prec as i64 + lb - la + 2).max(0) as u64;
        let num = &a.man << k;
        let (mut q, r) = num.div_rem(&b.man);
        if !r.is_zero() {
            let quotient_negative = (num.sign() == Sign::Minus) != (b.man.sign() == Sign::Minus);
            match mode {
                RoundMode::Floor => {
                    if quotient_negative {
                        q -= 1;
                    }
                }
                RoundMode::Ceil => {
                    if !quotient_negative {
                        q += 1;
                    }
                }
                RoundMode::Nearest => {
                    if (r.abs() << 1) >= b.man.abs() {
                        if quotient_negative {
                            q -= 1;
                        } else {
                            q += 1;
                        }
                    }
                }
            }
        }
        Dyadic::new(q, a.exp - b.exp - k as i64).round(prec, mode)
    }

    /// Square root of a nonnegative value with `prec` significant bits.
    /// `mode` must be `Floor` or `Ceil`.
    pub fn sqrt(&self, prec: u32, mode: RoundMode) -> Dyadic {
        self.nth_root(2, prec, mode)
    }

    /// n-th root of a nonnegative value with `prec` significant bits.
    /// `mode` must be `Floor` or `Ceil`.
    pub fn nth_root(&self, n: u32, prec: u32, mode: RoundMode) -> Dyadic {
        assert!(n >= 1);
        assert!(!self.is_negative(), "root of a negative dyadic");
        assert!(matches!(mode, RoundMode::Floor | RoundMode::Ceil));
        if self.is_zero() {
            return Dyadic::zero();
        }
        if n == 1 {
            return self.round(prec, mode);
        }
        let mut man = self.man.clone();
        let mut exp = self.exp;
        let rem = exp.rem_euclid(n as i64);
        if rem != 0 {
            man <<= rem as u64;
            exp -= rem;
        }
        // Pad so the integer root carries at least prec + 2 bits.
        let want = (n as u64) * (prec as u64 + 2);
        let have = man.bits();
        if have < want {
            let j = (want - have).div_ceil(n as u64);
            man <<= j * n as u64;
            exp -= (j * n as u64) as i64;
        }
        let r = man.nth_root(n);
        let root_exp = exp / n as i64;
        match mode {
            RoundMode::Floor => Dyadic::new(r, root_exp),
            _ => {
                if r.pow(n) == man {
                    Dyadic::new(r, root_exp)
                } else {
                    Dyadic::new(r + 1, root_exp)
                }
            }
        }
    }

    /// k-th power of a nonnegative value, rounded per step; the result is a
    /// directed bound for `Floor`/`Ceil`.
    pub fn pow_round(&self, k: u32, prec: u32, mode: RoundMode) -> Dyadic {
        assert!(!self.is_negative(), "directed pow needs a nonnegative base");
        if k == 0 {
            return Dyadic::one();
        }
        let mut acc = Dyadic::one();
        let mut base = self.clone();
        let mut k = k;
        loop {
            if k & 1 == 1 {
                acc = (&acc * &base).round(prec, mode);
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = (&base * &base).round(prec, mode);
        }
        acc
    }

    /// Decimal string with exactly `digits` fractional digits, rounded to
    /// nearest.
    pub fn decimal(&self, digits: u32) -> String {
        let ten_d = BigInt::from(10u32).pow(digits);
        let mag = self.man.abs() * &ten_d;
        let n = if self.exp >= 0 {
            mag << self.exp as u64
        } else {
            let pow = BigInt::one() << (-self.exp) as u64;
            let (q, r) = mag.div_rem(&pow);
            if (r << 1) >= pow {
                q + 1
            } else {
                q
            }
        };
        let (ipart, fpart) = n.div_rem(&ten_d);
        let sign = if self.man.is_negative() && !n.is_zero() {
            "-"
        } else {
            ""
        };
        if digits == 0 {
            format!("{sign}{ipart}")
        } else {
            format!("{sign}{ipart}.{fpart:0>width$}", width = digits as usize)
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let sa = self.signum();
        let sb = other.signum();
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        // Same nonzero sign: compare magnitudes, cheaply when the binades
        // are disjoint. |x| lies in [2^(bits+exp-1), 2^(bits+exp)).
        let ha = self.man.bits() as i64 + self.exp;
        let hb = other.man.bits() as i64 + other.exp;
        let mag = if ha < hb {
            Ordering::Less
        } else if ha > hb {
            Ordering::Greater
        } else {
            let d = self.exp - other.exp;
            if d >= 0 {
                (self.man.abs() << d as u64).cmp(&other.man.abs())
            } else {
                self.man.abs().cmp(&(other.man.abs() << (-d) as u64))
            }
        };
        if sa > 0 {
            mag
        } else {
            mag.reverse()
        }
    }
}

impl core::ops::Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            man: -&self.man,
            exp: self.exp,
        }
    }
}

impl core::ops::Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let m = self.exp.min(rhs.exp);
        let a = &self.man << (self.exp - m) as u64;
        let b = &rhs.man << (rhs.exp - m) as u64;
        Dyadic::new(a + b, m)
    }
}

impl core::ops::Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl core::ops::Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() || rhs.is_zero() {
            return Dyadic::zero();
        }
        Dyadic {
            man: &self.man * &rhs.man,
            exp: self.exp + rhs.exp,
        }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.decimal(12))
    }
}

/// Exact rational partial sum of atanh(t) with a rigorous tail bound:
/// atanh(t) lies in [s, s + tail]. Requires 0 <= t <= 1/3.
fn atanh_bounds(t: &BigRational, prec: u32) -> (BigRational, BigRational) {
    assert!(!t.is_negative());
    assert!(t <= &BigRational::new(BigInt::from(1), BigInt::from(3)));
    if t.is_zero() {
        return (BigRational::zero(), BigRational::zero());
    }
    let t2 = t * t;
    let eps = BigRational::new(BigInt::one(), BigInt::one() << prec as u64);
    let mut sum = t.clone();
    let mut term = t.clone(); // t^(2k+1)
    let mut k = 0u32;
    loop {
        k += 1;
        term *= &t2;
        sum += &term / BigRational::from_integer(BigInt::from(2 * k + 1));
        // Tail after the (2k+1)-term: sum_{j>k} t^(2j+1)/(2j+1)
        //   <= t^(2k+3) / ((2k+3)(1 - t^2)) <= (9/8) t^(2k+3) / (2k+3).
        let tail = &term * &t2 * BigRational::new(BigInt::from(9), BigInt::from(8 * (2 * k + 3)));
        if tail < eps {
            return (sum, tail);
        }
    }
}

/// Rigorous enclosure of ln(x) for x > 0: returns (lo, hi) dyadics with
/// lo <= ln x <= hi and about `prec` significant bits.
pub fn ln_bounds(x: &Dyadic, prec: u32) -> Result<(Dyadic, Dyadic), Error> {
    if !x.is_positive() {
        return Err(Error::InvalidInterval("ln requires a positive argument"));
    }
    // x = m * 2^e with m in [1, 2).
    let e = x.exp + x.man.bits() as i64 - 1;
    let m = Dyadic {
        man: x.man.clone(),
        exp: -(x.man.bits() as i64 - 1),
    }
    .to_rational();
    let one = BigRational::one();
    let t = (&m - &one) / (&m + &one);
    let wp = prec + 8;
    let (s, tail) = atanh_bounds(&t, wp);
    let two = BigRational::from_integer(BigInt::from(2));
    let (lnm_lo, lnm_hi) = (&two * &s, &two * &(&s + &tail));
    let third = BigRational::new(BigInt::one(), BigInt::from(3));
    let (s2, tail2) = atanh_bounds(&third, wp + 8);
    let (ln2_lo, ln2_hi) = (&two * &s2, &two * &(&s2 + &tail2));
    let er = BigRational::from_integer(BigInt::from(e));
    let (lo, hi) = if e >= 0 {
        (&lnm_lo + &er * &ln2_lo, &lnm_hi + &er * &ln2_hi)
    } else {
        (&lnm_lo + &er * &ln2_hi, &lnm_hi + &er * &ln2_lo)
    };
    Ok((
        Dyadic::from_rational(&lo, prec, RoundMode::Floor),
        Dyadic::from_rational(&hi, prec, RoundMode::Ceil),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(man: i64, exp: i64) -> Dyadic {
        Dyadic::from_parts(man, exp)
    }

    #[test]
    fn normalization_and_equality() {
        assert_eq!(d(4, 0), d(1, 2));
        assert_eq!(d(-6, 1), d(-3, 2));
        assert_eq!(Dyadic::new(BigInt::zero(), 55), Dyadic::zero());
    }

    #[test]
    fn ordering() {
        assert!(d(1, -1) < Dyadic::one()); // 1/2 < 1
        assert!(d(3, -1) > Dyadic::one()); // 3/2 > 1
        assert!(d(-1, 10) < d(1, -10));
        assert!(d(5, -2) == d(5, -2));
        assert!(d(1, 100) > d(1, 50));
        assert!(d(-1, 100) < d(-1, 50));
        // overlapping binades
        assert!(d(7, -3) < Dyadic::one()); // 7/8 < 1
        assert!(d(9, -3) > Dyadic::one());
    }

    #[test]
    fn exact_ring_ops() {
        let a = d(3, -1); // 3/2
        let b = d(5, -2); // 5/4
        assert_eq!(&a + &b, d(11, -2));
        assert_eq!(&a - &b, d(1, -2));
        assert_eq!(&a * &b, d(15, -3));
        assert_eq!(-&a, d(-3, -1));
        assert_eq!(a.mul_pow2(3), d(3, 2));
    }

    #[test]
    fn rounding_directions() {
        let x = d(22, 0); // 10110
        assert_eq!(x.round(3, RoundMode::Floor), d(20, 0));
        assert_eq!(x.round(3, RoundMode::Ceil), d(24, 0));
        let y = d(-22, 0);
        assert_eq!(y.round(3, RoundMode::Floor), d(-24, 0));
        assert_eq!(y.round(3, RoundMode::Ceil), d(-20, 0));
        // nearest: 10110 to 3 bits is between 10100 and 11000, closer to 10100? 22 vs {20, 24}: tie -> away from zero
        assert_eq!(x.round(3, RoundMode::Nearest), d(24, 0));
        assert_eq!(d(21, 0).round(3, RoundMode::Nearest), d(20, 0));
    }

    #[test]
    fn directed_division() {
        let one = Dyadic::one();
        let three = d(3, 0);
        let lo = Dyadic::div(&one, &three, 20, RoundMode::Floor);
        let hi = Dyadic::div(&one, &three, 20, RoundMode::Ceil);
        assert!(lo < hi);
        let third = BigRational::new(BigInt::one(), BigInt::from(3));
        assert!(lo.to_rational() < third && third < hi.to_rational());
        let gap = (&hi - &lo).to_rational();
        assert!(gap < BigRational::new(BigInt::one(), BigInt::from(1 << 18)));
        // negative numerator flips the directed pair
        let nlo = Dyadic::div(&-&one, &three, 20, RoundMode::Floor);
        assert!(nlo.to_rational() < -&third);
        // exact division stays exact
        assert_eq!(
            Dyadic::div(&d(3, 0), &d(4, 0), 10, RoundMode::Floor),
            d(3, -2)
        );
    }

    #[test]
    fn roots_bracket_truth() {
        let two = d(2, 0);
        let lo = two.sqrt(40, RoundMode::Floor);
        let hi = two.sqrt(40, RoundMode::Ceil);
        assert!(lo < hi);
        assert!((&lo * &lo).to_rational() < two.to_rational());
        assert!((&hi * &hi).to_rational() > two.to_rational());
        // exact cases collapse
        assert_eq!(d(9, 0).sqrt(30, RoundMode::Floor), d(3, 0));
        assert_eq!(d(9, 0).sqrt(30, RoundMode::Ceil), d(3, 0));
        assert_eq!(d(8, 0).nth_root(3, 30, RoundMode::Ceil), d(2, 0));
        let five = d(5, 0);
        let l = five.nth_root(7, 33, RoundMode::Floor);
        let h = five.nth_root(7, 33, RoundMode::Ceil);
        let pl = l.pow_round(7, 200, RoundMode::Floor);
        let ph = h.pow_round(7, 200, RoundMode::Ceil);
        assert!(pl.to_rational() < five.to_rational());
        assert!(ph.to_rational() > five.to_rational());
    }

    #[test]
    fn decimal_strings() {
        assert_eq!(d(1, -1).decimal(12), "0.500000000000");
        assert_eq!(d(-5, -2).decimal(4), "-1.2500");
        assert_eq!(d(1, -60).decimal(6), "0.000000");
        assert_eq!(d(7, 0).decimal(0), "7");
        assert_eq!(d(1325, 0).decimal(2), "1325.00");
    }

    #[test]
    fn ln_enclosure() {
        let (lo, hi) = ln_bounds(&d(2, 0), 60).unwrap();
        assert!(lo <= hi);
        let l = lo.to_rational();
        let h = hi.to_rational();
        // ln 2 = 0.69314718055994530941...
        let below = BigRational::new(BigInt::from(6931471805u64), BigInt::from(10_000_000_000u64));
        let above = BigRational::new(BigInt::from(6931471806u64), BigInt::from(10_000_000_000u64));
        assert!(l > below && h < above);
        let (lo1, hi1) = ln_bounds(&Dyadic::one(), 40).unwrap();
        assert!(lo1.signum() <= 0 && hi1.signum() >= 0);
        // ln(1/2) = -ln 2
        let (ll, hh) = ln_bounds(&d(1, -1), 60).unwrap();
        assert!(ll.to_rational() < -&below && hh.to_rational() > -&above);
        assert!(ln_bounds(&Dyadic::zero(), 10).is_err());
    }
}
