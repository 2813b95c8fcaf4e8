//! Rational intervals with explicit endpoint membership.

use core::fmt;

use num_rational::BigRational;

use crate::error::Error;

/// An interval with rational endpoints; each endpoint is independently open
/// or closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl RationalInterval {
    /// Builds an interval, rejecting empty or inverted ones. A degenerate
    /// point [a, a] is allowed only with both endpoints closed.
    pub fn new(
        lo: BigRational,
        hi: BigRational,
        lo_closed: bool,
        hi_closed: bool,
    ) -> Result<Self, Error> {
        if lo > hi {
            return Err(Error::InvalidInterval("inverted endpoints"));
        }
        if lo == hi && !(lo_closed && hi_closed) {
            return Err(Error::InvalidInterval("empty at coincident endpoints"));
        }
        Ok(RationalInterval {
            lo,
            hi,
            lo_closed,
            hi_closed,
        })
    }

    /// (lo, hi), both endpoints open.
    pub fn open(lo: BigRational, hi: BigRational) -> Result<Self, Error> {
        Self::new(lo, hi, false, false)
    }

    /// (lo, hi], the shape shard tiles use.
    pub fn left_open(lo: BigRational, hi: BigRational) -> Result<Self, Error> {
        Self::new(lo, hi, false, true)
    }

    /// [lo, hi), the shape the sieve targets use.
    pub fn left_closed(lo: BigRational, hi: BigRational) -> Result<Self, Error> {
        Self::new(lo, hi, true, false)
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        let lo_ok = if self.lo_closed {
            q >= &self.lo
        } else {
            q > &self.lo
        };
        let hi_ok = if self.hi_closed {
            q <= &self.hi
        } else {
            q < &self.hi
        };
        lo_ok && hi_ok
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Is this interval contained in (1, +inf)?
    pub fn strictly_above_one(&self) -> bool {
        let one = BigRational::from_integer(1.into());
        self.lo > one || (self.lo == one && !self.lo_closed)
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = if self.lo_closed { '[' } else { '(' };
        let r = if self.hi_closed { ']' } else { ')' };
        write!(f, "{}{}, {}{}", l, self.lo, self.hi, r)
    }
}
