//! Search planning: height-derived degree bounds, per-degree target
//! intervals with an exact membership sieve, degree admissibility filters,
//! and the shard schedule.
//!
//! The height argument: if a relation with `terms` summands holds among the
//! conjugates of a Pisot number alpha < alpha_max, the Weil height forces
//! deg(alpha) <= 2 * terms * log(alpha_max) / log(tau), tau the golden
//! ratio, and alpha > tau^(d / (2 * terms)). The left endpoint is
//! irrational, so enumeration runs over a slightly larger rational cover
//! and every captured record is re-tested exactly: theta > tau^(d/(2t))
//! iff theta^(2t) > tau^d, and tau^d = (L_d + F_d * sqrt(5)) / 2 in
//! Fibonacci-Lucas form admits certified rational bounds to any precision.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::dyadic::{ln_bounds, Dyadic, RoundMode};
use crate::error::Error;
use crate::interval::RationalInterval;
use crate::pisot::PisotRecord;
use crate::poly::IntPoly;
use crate::relations::RelationType;

/// Upper bound of the search range for the dominant root.
///
/// The full-scale runs use rational bounds (2 and 3); the golden-power
/// variant exists because the height bound is exact there: the degree
/// bound for alpha_max = tau^k is 2 * terms * k with no rounding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphaMax {
    Rational(BigRational),
    /// tau^k for the golden ratio tau.
    GoldenPower(u32),
}

impl AlphaMax {
    pub fn from_u32(n: u32) -> AlphaMax {
        AlphaMax::Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

/// F_n with F_0 = 0, F_1 = 1.
pub fn fibonacci(n: u32) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// L_n with L_0 = 2, L_1 = 1.
pub fn lucas(n: u32) -> BigInt {
    let (mut a, mut b) = (BigInt::from(2), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// Rational bounds lo < sqrt(5) < hi with about `prec` bits.
fn sqrt5_bounds(prec: u32) -> (BigRational, BigRational) {
    let five = Dyadic::from_i64(5);
    (
        five.sqrt(prec, RoundMode::Floor).to_rational(),
        five.sqrt(prec, RoundMode::Ceil).to_rational(),
    )
}

/// Rational bounds on tau^d via tau^d = (L_d + F_d * sqrt(5)) / 2.
fn golden_power_bounds(d: u32, prec: u32) -> (BigRational, BigRational) {
    let l = BigRational::from_integer(lucas(d));
    let f = BigRational::from_integer(fibonacci(d));
    let (s_lo, s_hi) = sqrt5_bounds(prec);
    let two = BigRational::from_integer(BigInt::from(2));
    ((&l + &f * s_lo) / &two, (&l + &f * s_hi) / &two)
}

/// Minimal polynomial of tau^k for k >= 1: x^2 - L_k x + (-1)^k.
fn golden_power_minpoly(k: u32) -> IntPoly {
    debug_assert!(k >= 1);
    let unit = if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    IntPoly::from_descending(alloc::vec![BigInt::one(), -lucas(k), unit])
}

fn rat_pow(x: &BigRational, n: usize) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..n {
        acc *= x;
    }
    acc
}

/// Largest degree a `terms`-summand relation permits below `alpha_max`:
/// floor(2 * terms * ln(alpha_max) / ln(tau)), computed with certified
/// rounding so the floor is exact.
pub fn degree_bound(terms: u32, alpha_max: &AlphaMax) -> Result<usize, Error> {
    if terms != 3 && terms != 4 {
        return Err(Error::BadTermCount(terms));
    }
    let a = match alpha_max {
        // ln(tau^k)/ln(tau) = k exactly; no numerics needed.
        AlphaMax::GoldenPower(k) => return Ok((2 * terms * k) as usize),
        AlphaMax::Rational(a) => a,
    };
    if a <= &BigRational::one() {
        return Err(Error::InvalidInterval("alpha bound must exceed 1"));
    }
    let factor = BigRational::from_integer(BigInt::from(2 * terms));
    let mut prec = 48u32;
    // The ratio is irrational for rational alpha > 1 (an integer or
    // rational value would force a rational power of tau to be rational),
    // so the two floors coincide once the enclosure is tight enough.
    for _ in 0..16 {
        let a_lo = Dyadic::from_rational(a, prec, RoundMode::Floor);
        let a_hi = Dyadic::from_rational(a, prec, RoundMode::Ceil);
        let la_lo = ln_bounds(&a_lo, prec)?.0.to_rational();
        let la_hi = ln_bounds(&a_hi, prec)?.1.to_rational();
        let (t_lo, t_hi) = golden_power_bounds(1, prec);
        let tau_lo = Dyadic::from_rational(&t_lo, prec, RoundMode::Floor);
        let tau_hi = Dyadic::from_rational(&t_hi, prec, RoundMode::Ceil);
        let lt_lo = ln_bounds(&tau_lo, prec)?.0.to_rational();
        let lt_hi = ln_bounds(&tau_hi, prec)?.1.to_rational();
        if la_lo.is_positive() && lt_lo.is_positive() {
            let r_lo = &factor * &la_lo / &lt_hi;
            let r_hi = &factor * &la_hi / &lt_lo;
            let f_lo = r_lo.floor().to_integer();
            let f_hi = r_hi.floor().to_integer();
            if f_lo == f_hi {
                return f_lo
                    .to_usize()
                    .ok_or(Error::BadDegree("height bound does not fit in usize"));
            }
        }
        prec *= 2;
    }
    Err(Error::RootRefinementFailed)
}

/// The search target for one degree: the real interval
/// (tau^(degree/(2*terms)), alpha_max), carried as a rational cover for the
/// enumerator plus the data needed to sieve captured records exactly.
#[derive(Clone, Debug)]
pub struct TargetInterval {
    pub degree: usize,
    pub terms: u32,
    pub alpha_max: BigRational,
    /// [lo, alpha_max) with lo <= tau^(degree/(2*terms)) rounded down; the
    /// enumerator runs over this and `contains_exact` removes over-capture.
    pub cover: RationalInterval,
}

/// Builds the degree-d target. Errors when d is zero or exceeds the height
/// bound for (terms, alpha_max).
pub fn target_interval(
    d: usize,
    terms: u32,
    alpha_max: &BigRational,
) -> Result<TargetInterval, Error> {
    let bound = degree_bound(terms, &AlphaMax::Rational(alpha_max.clone()))?;
    if d == 0 || d > bound {
        return Err(Error::BadDegree("degree outside the height-bound range"));
    }
    let (p_lo, _) = golden_power_bounds(d as u32, 96);
    let lo = Dyadic::from_rational(&p_lo, 96, RoundMode::Floor)
        .nth_root(2 * terms, 96, RoundMode::Floor)
        .to_rational();
    // lo <= tau^(d/(2t)) < alpha_max: the right inequality is strict
    // because equality would make an irrational golden power rational.
    let cover = RationalInterval::left_closed(lo, alpha_max.clone())?;
    Ok(TargetInterval {
        degree: d,
        terms,
        alpha_max: alpha_max.clone(),
        cover,
    })
}

impl TargetInterval {
    /// Exact membership of the record's dominant root in the true open
    /// interval (tau^(degree/(2*terms)), alpha_max).
    ///
    /// The right endpoint is decided by one sign evaluation. The left
    /// endpoint compares theta^(2t) against tau^d: equality is possible
    /// only when theta itself is a power of tau (theta^(2t) = tau^d makes
    /// theta a unit of the golden field, hence tau^k with 2tk = d), which
    /// one syntactic check rules out; after that, certified enclosures of
    /// both sides separate in finitely many refinement rounds.
    pub fn contains_exact(&self, rec: &PisotRecord) -> Result<bool, Error> {
        // theta < alpha_max: for b > 1 the sign of p(b) is the sign of
        // b - theta, every other factor of the monic product being positive.
        if rec.poly.sign_at(&self.alpha_max) <= 0 {
            return Ok(false);
        }
        let two_t = 2 * self.terms as usize;
        if self.degree % two_t == 0 {
            let k = (self.degree / two_t) as u32;
            if rec.poly == golden_power_minpoly(k) {
                // theta equals the endpoint exactly; the interval is open.
                return Ok(false);
            }
        }
        let one = BigRational::one();
        let (mut th_lo, mut th_hi) = rec.theta.re_bounds();
        if th_lo < one {
            th_lo = one.clone();
        }
        let two = BigRational::from_integer(BigInt::from(2));
        let mut prec = 96u32;
        for _ in 0..64 {
            let (p_lo, p_hi) = golden_power_bounds(self.degree as u32, prec);
            let t_lo = rat_pow(&th_lo, two_t);
            let t_hi = rat_pow(&th_hi, two_t);
            if t_lo > p_hi {
                return Ok(true);
            }
            if t_hi < p_lo {
                return Ok(false);
            }
            prec *= 2;
            // Tighten the theta bracket by exact bisection; a point bracket
            // (rational theta) needs no tightening, only sharper tau bounds.
            if th_lo < th_hi {
                for _ in 0..8 {
                    let mid = (&th_lo + &th_hi) / &two;
                    match rec.poly.sign_at(&mid) {
                        1 => th_hi = mid,
                        -1 => th_lo = mid,
                        _ => {
                            th_lo = mid.clone();
                            th_hi = mid;
                        }
                    }
                }
            }
        }
        Err(Error::RootRefinementFailed)
    }
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// Degrees worth searching for one relation type: from the relation's
/// arity up to the height bound, excluding primes. An all-positive
/// sum-to-zero relation keeps the prime equal to its arity (the excluded
/// coefficient pattern must be non-constant, and at d = arity it is
/// constant). With `use_combinatorial`, the trace and symmetric-function
/// arguments restrict further: three-way zero sums to {3, 6} and
/// sum-of-two to {8}.
pub fn admissible_degrees(
    relation: RelationType,
    alpha_max: &AlphaMax,
    use_combinatorial: bool,
) -> Result<Vec<usize>, Error> {
    let arity = relation.arity();
    let bound = degree_bound(arity as u32, alpha_max)?;
    let keeps_prime_at_arity = matches!(
        relation,
        RelationType::Sum3Zero | RelationType::Sum4Zero
    );
    let mut out = Vec::new();
    for d in arity..=bound {
        if is_prime(d) && !(keeps_prime_at_arity && d == arity) {
            continue;
        }
        if use_combinatorial {
            let kept = match relation {
                RelationType::Sum3Zero => d == 3 || d == 6,
                RelationType::EqSum2 => d == 8,
                _ => true,
            };
            if !kept {
                continue;
            }
        }
        out.push(d);
    }
    Ok(out)
}

/// One unit of enumeration work: a degree and a slice of its target cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShardJob {
    pub degree: usize,
    pub interval: RationalInterval,
    pub job_id: String,
}

/// Shard width for a degree: `base` up to degree 12, then divided by 3 per
/// degree beyond (deeper degrees enumerate slower per unit of interval).
pub fn shard_width(d: usize, base: &BigRational) -> BigRational {
    if d <= 12 {
        base.clone()
    } else {
        let mut div = BigInt::one();
        for _ in 12..d {
            div *= BigInt::from(3);
        }
        base / BigRational::from_integer(div)
    }
}

/// Default shard width base: 1/10.
pub fn default_shard_base() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10))
}

/// Tiles each degree's interval into shards of the scheduled width (the
/// last shard may be shorter). Interior boundaries are half-open so the
/// shards partition the interval; endpoint membership at the outer ends is
/// inherited. Job ids are deterministic in the input order.
pub fn shard_plan(
    targets: &[(usize, RationalInterval)],
    base: &BigRational,
) -> Result<Vec<ShardJob>, Error> {
    if !base.is_positive() {
        return Err(Error::InvalidInterval("shard width must be positive"));
    }
    let mut jobs = Vec::new();
    for (d, iv) in targets {
        if iv.lo == iv.hi {
            jobs.push(ShardJob {
                degree: *d,
                interval: iv.clone(),
                job_id: format!("d{:02}-s{:05}", d, 0),
            });
            continue;
        }
        let eps = shard_width(*d, base);
        let mut cuts = Vec::new();
        let mut c = &iv.lo + &eps;
        while c < iv.hi {
            cuts.push(c.clone());
            c += &eps;
        }
        let mut shard_lo = iv.lo.clone();
        let mut shard_lo_closed = iv.lo_closed;
        let mut index = 0usize;
        for cut in cuts {
            jobs.push(ShardJob {
                degree: *d,
                interval: RationalInterval::new(shard_lo, cut.clone(), shard_lo_closed, true)?,
                job_id: format!("d{:02}-s{:05}", d, index),
            });
            shard_lo = cut;
            shard_lo_closed = false;
            index += 1;
        }
        jobs.push(ShardJob {
            degree: *d,
            interval: RationalInterval::new(shard_lo, iv.hi.clone(), shard_lo_closed, iv.hi_closed)?,
            job_id: format!("d{:02}-s{:05}", d, index),
        });
    }
    Ok(jobs)
}

/// Certified enclosure of the Weil height log(theta)/degree. For a Pisot
/// number the Mahler measure is the number itself: the polynomial is monic
/// and every other conjugate lies inside the unit circle.
pub fn weil_height(rec: &PisotRecord) -> Result<(Dyadic, Dyadic), Error> {
    let (lo, hi) = rec.theta.re_bounds();
    let lo_dy = Dyadic::from_rational(&lo, 96, RoundMode::Floor);
    let hi_dy = Dyadic::from_rational(&hi, 96, RoundMode::Ceil);
    let h_lo = ln_bounds(&lo_dy, 80)?.0;
    let h_hi = ln_bounds(&hi_dy, 80)?.1;
    let deg = Dyadic::from_i64(rec.degree as i64);
    Ok((
        Dyadic::div(&h_lo, &deg, 96, RoundMode::Floor),
        Dyadic::div(&h_hi, &deg, 96, RoundMode::Ceil),
    ))
}
