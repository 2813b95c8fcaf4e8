//! The Pisot decision procedure.
//!
//! A Pisot number is a real algebraic integer theta > 1 all of whose other
//! conjugates lie strictly inside the unit circle. `is_pisot` decides, with
//! no floating-point trust anywhere, whether a monic integer polynomial is
//! the minimal polynomial of a Pisot number in a given interval:
//!
//! 1. nonzero constant term (a zero one means a factor of x);
//! 2. p(1) < 0: necessary, since p(1) is the product of (1 - root) over all
//!    roots, where the Pisot root contributes a negative factor and every
//!    conjugate a positive one;
//! 3. no root on the unit circle (exact test);
//! 4. exactly deg - 1 roots in the open unit disk (exact count), leaving
//!    exactly one root of modulus > 1, necessarily real by conjugation
//!    symmetry;
//! 5. that root lies in (1, infinity), not (-infinity, -1) (Sturm count);
//! 6. interval membership by exact sign evaluation at the endpoints.
//!
//! Irreducibility needs no factoring: a proper monic factor avoiding the
//! dominant root would have all roots of modulus < 1 and hence an integer
//! constant term of absolute value strictly between 0 and 1, which does not
//! exist. So any polynomial passing steps 1-4 is irreducible over Q, and
//! its dominant root is Pisot.
//!
//! Degree 1: x - n is accepted for integers n >= 2; rational integers of
//! size at least 2 count as Pisot numbers by convention.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::dyadic::Dyadic;
use crate::error::Error;
use crate::interval::RationalInterval;
use crate::poly::IntPoly;
use crate::roots::{self, RootEnclosure};
use crate::sturm;
use crate::unitdisk;

/// A certified Pisot number: its minimal polynomial and an enclosure of the
/// dominant root with radius at most 10^-12.
#[derive(Clone, Debug)]
pub struct PisotRecord {
    /// Monic irreducible minimal polynomial.
    pub poly: IntPoly,
    /// Enclosure of the dominant (Pisot) root; real, center > 1.
    pub theta: RootEnclosure,
    /// Degree of the minimal polynomial.
    pub degree: usize,
}

/// Enclosure radius target for records: 10^-13, comfortably under the
/// documented 10^-12 bound.
fn theta_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64.pow(13)))
}

/// Decides whether monic `p` is the minimal polynomial of a Pisot number
/// theta with theta in `iv`; if so, returns the record.
pub fn is_pisot(p: &IntPoly, iv: &RationalInterval) -> Result<Option<PisotRecord>, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = p.deg();
    if d == 0 {
        return Err(Error::BadDegree("is_pisot needs degree at least 1"));
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    if d == 1 {
        // p = x - n with root n.
        let n = -p.constant_term();
        let root = BigRational::from_integer(n.clone());
        if n >= BigInt::from(2) && iv.contains(&root) {
            return Ok(Some(PisotRecord {
                poly: p.clone(),
                theta: RootEnclosure {
                    re: Dyadic::from_int(n),
                    im: Dyadic::zero(),
                    radius: Dyadic::zero(),
                    is_real: true,
                },
                degree: 1,
            }));
        }
        return Ok(None);
    }

    if p.constant_term().is_zero() {
        return Ok(None);
    }
    let one_i = BigInt::one();
    if p.eval_int(&one_i).sign() != num_bigint::Sign::Minus {
        return Ok(None);
    }
    if unitdisk::has_root_on_unit_circle(p)? {
        return Ok(None);
    }
    if unitdisk::count_in_open_unit_disk(p)? != d - 1 {
        return Ok(None);
    }
    // One root of modulus > 1 remains; by conjugation symmetry it is real.
    // From here on p is irreducible (see module docs), hence squarefree.
    let one = BigRational::one();
    if sturm::count_roots_above(p, &one, false)? != 1 {
        return Ok(None); // the dominant root is below -1
    }

    // Exact interval membership. p is negative on (1, theta) and positive
    // on (theta, infinity), so a single sign decides each side.
    let lo_ok = if iv.lo <= one {
        true // theta > 1 >= lo
    } else {
        let s = p.sign_at(&iv.lo);
        if iv.lo_closed {
            s <= 0
        } else {
            s < 0
        }
    };
    if !lo_ok {
        return Ok(None);
    }
    let hi_ok = if iv.hi <= one {
        false
    } else {
        let s = p.sign_at(&iv.hi);
        if iv.hi_closed {
            s >= 0
        } else {
            s > 0
        }
    };
    if !hi_ok {
        return Ok(None);
    }

    Ok(Some(PisotRecord {
        poly: p.clone(),
        theta: dominant_root_enclosure(p)?,
        degree: d,
    }))
}

/// Tight enclosure of the unique root above 1 of an accepted polynomial.
fn dominant_root_enclosure(p: &IntPoly) -> Result<RootEnclosure, Error> {
    let brackets = sturm::isolate_real_roots(p)?;
    // The dominant root is the largest real root.
    let last = brackets.last().ok_or(Error::RootRefinementFailed)?;
    let one = BigRational::one();
    let clamped = sturm::RealBracket {
        lo: if last.lo < one { one } else { last.lo.clone() },
        hi: last.hi.clone(),
    };
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    let width = theta_width() * quarter;
    let (lo, hi) = sturm::refine_bracket(p, &clamped, &width);
    let (c, r) = roots::real_center_radius(&lo, &hi, 96);
    debug_assert!(r.to_rational() <= theta_width());
    Ok(RootEnclosure {
        re: c,
        im: Dyadic::zero(),
        radius: r,
        is_real: true,
    })
}
