//! Certified root enclosures for squarefree integer polynomials.
//!
//! The output is a list of pairwise disjoint disks, one per root, each
//! carrying a proof obligation discharged in exact arithmetic:
//!
//! * real roots come from Sturm isolation and sign bisection, so their
//!   intervals are unconditionally correct;
//! * complex roots start as double-precision Aberth-Ehrlich approximations
//!   (a heuristic), are polished by Newton steps in dyadic arithmetic, and
//!   are then certified: for any point z, the disk centered at z of radius
//!   d |p(z)/p'(z)| contains at least one root of p. Both |p(z)|^2 and
//!   |p'(z)|^2 are computed exactly (dyadic Horner has no rounding), so the
//!   radius bound is rigorous.
//!
//! With d pairwise disjoint disks each containing at least one of the d
//! roots, every disk contains exactly one. Disks strictly off the real axis
//! therefore hold non-real roots, and the conjugate of each certified disk
//! certifies the conjugate root. Disjointness and axis separation are
//! checked by comparing exact squared distances, so no step of the
//! certification trusts floating point. If any check fails the working
//! precision escalates; the heuristic stage can only cause retries or an
//! explicit error, never a wrong certificate.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::dyadic::{Dyadic, RoundMode};
use crate::error::Error;
use crate::poly::IntPoly;
use crate::sturm;

/// A disk |z - (re + i im)| <= radius containing exactly one root of the
/// polynomial it was produced for. Real roots have im = 0 exactly and
/// `is_real` set; complex enclosures are strictly separated from the real
/// axis and come in conjugate pairs.
#[derive(Clone, Debug)]
pub struct RootEnclosure {
    pub re: Dyadic,
    pub im: Dyadic,
    pub radius: Dyadic,
    pub is_real: bool,
}

impl RootEnclosure {
    /// Exact rational bounds for the real part of the enclosed root.
    pub fn re_bounds(&self) -> (BigRational, BigRational) {
        let c = self.re.to_rational();
        let r = self.radius.to_rational();
        (&c - &r, &c + &r)
    }

    /// Exact rational bounds for the imaginary part of the enclosed root.
    pub fn im_bounds(&self) -> (BigRational, BigRational) {
        if self.is_real {
            let z = BigRational::zero();
            return (z.clone(), z);
        }
        let c = self.im.to_rational();
        let r = self.radius.to_rational();
        (&c - &r, &c + &r)
    }

    /// Exact rational upper bound for the enclosure radius.
    pub fn radius_rational(&self) -> BigRational {
        self.radius.to_rational()
    }
}

/// Certified enclosures for all roots of squarefree `p`, every radius at
/// most `eps`. Ordering: real roots in descending order, then conjugate
/// pairs by descending real part (ties by descending imaginary part), the
/// upper-half-plane member first.
pub fn certified_roots(p: &IntPoly, eps: &BigRational) -> Result<Vec<RootEnclosure>, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !eps.is_positive() {
        return Err(Error::InvalidInterval("enclosure radius bound must be positive"));
    }
    let d = p.deg();
    if d == 0 {
        return Ok(Vec::new());
    }
    if IntPoly::gcd_primitive(p, &p.derivative())?.deg() != 0 {
        return Err(Error::NotSquarefree);
    }

    let brackets = sturm::isolate_real_roots(p)?;
    let n_real = brackets.len();
    debug_assert_eq!((d - n_real) % 2, 0);
    let n_upper = (d - n_real) / 2;

    let deriv = p.derivative();
    let mut centers = if n_upper > 0 {
        upper_seeds(p, n_upper)?
    } else {
        Vec::new()
    };

    let mut prec: u32 = 96;
    let quarter = BigRational::new(BigInt::from(1), BigInt::from(4));
    let mut width = eps * &quarter;
    for _attempt in 0..10 {
        for z in centers.iter_mut() {
            *z = newton_refine(p, &deriv, z.clone(), prec);
        }
        if let Some(out) = try_certify(p, &deriv, &brackets, &centers, eps, &width, prec) {
            return Ok(out);
        }
        prec *= 2;
        width = &width / BigRational::from_integer(BigInt::from(1u64 << 10));
    }
    Err(Error::RootRefinementFailed)
}

/// One certification attempt at the current precision; `None` requests
/// escalation.
fn try_certify(
    p: &IntPoly,
    deriv: &IntPoly,
    brackets: &[sturm::RealBracket],
    centers: &[(Dyadic, Dyadic)],
    eps: &BigRational,
    width: &BigRational,
    prec: u32,
) -> Option<Vec<RootEnclosure>> {
    let d = p.deg();
    let mut reals = Vec::with_capacity(brackets.len());
    for b in brackets {
        let (lo, hi) = sturm::refine_bracket(p, b, width);
        let (c, r) = real_center_radius(&lo, &hi, prec);
        if &r.to_rational() > eps {
            return None;
        }
        reals.push(RootEnclosure {
            re: c,
            im: Dyadic::zero(),
            radius: r,
            is_real: true,
        });
    }

    let mut uppers = Vec::with_capacity(centers.len());
    for z in centers {
        let r = certified_radius(p, deriv, z, d, prec)?;
        if &r.to_rational() > eps {
            return None;
        }
        // Strict separation from the axis: the enclosed root is non-real.
        if !(z.1 > r) {
            return None;
        }
        uppers.push(RootEnclosure {
            re: z.0.clone(),
            im: z.1.clone(),
            radius: r,
            is_real: false,
        });
    }

    // The full disk system: reals, upper roots, and their conjugates.
    let mut disks: Vec<(Dyadic, Dyadic, Dyadic)> = Vec::with_capacity(d);
    for e in &reals {
        disks.push((e.re.clone(), Dyadic::zero(), e.radius.clone()));
    }
    for e in &uppers {
        disks.push((e.re.clone(), e.im.clone(), e.radius.clone()));
        disks.push((e.re.clone(), -&e.im, e.radius.clone()));
    }
    debug_assert_eq!(disks.len(), d);
    for i in 0..disks.len() {
        for j in (i + 1)..disks.len() {
            let dx = &disks[i].0 - &disks[j].0;
            let dy = &disks[i].1 - &disks[j].1;
            let dist2 = &(&dx * &dx) + &(&dy * &dy);
            let rs = &disks[i].2 + &disks[j].2;
            if !(dist2 > &rs * &rs) {
                return None;
            }
        }
    }

    // d disjoint disks, each holding at least one of the d roots: exactly
    // one each. Assemble in the documented order.
    reals.sort_by(|a, b| b.re.cmp(&a.re));
    uppers.sort_by(|a, b| b.re.cmp(&a.re).then_with(|| b.im.cmp(&a.im)));
    let mut out = reals;
    for u in uppers {
        let conj = RootEnclosure {
            re: u.re.clone(),
            im: -&u.im,
            radius: u.radius.clone(),
            is_real: false,
        };
        out.push(u);
        out.push(conj);
    }
    Some(out)
}

/// Dyadic center and covering radius for a real root known to lie in
/// [lo, hi]. A root hit exactly at a dyadic point gets radius zero; strict
/// disjointness still holds because distinct roots have distinct centers.
pub(crate) fn real_center_radius(lo: &BigRational, hi: &BigRational, prec: u32) -> (Dyadic, Dyadic) {
    let two = BigRational::from_integer(BigInt::from(2));
    let center = (lo + hi) / &two;
    let c = Dyadic::from_rational(&center, prec, RoundMode::Nearest);
    let cq = c.to_rational();
    let cover = if &cq - lo > hi - &cq { &cq - lo } else { hi - &cq };
    (c, Dyadic::from_rational(&cover, 64, RoundMode::Ceil))
}

/// Exact evaluation of p at a dyadic complex point by Horner's rule.
fn eval_complex(p: &IntPoly, z: &(Dyadic, Dyadic)) -> (Dyadic, Dyadic) {
    let mut re = Dyadic::zero();
    let mut im = Dyadic::zero();
    for c in p.coeffs_descending() {
        let t = &(&re * &z.0) - &(&im * &z.1);
        im = &(&re * &z.1) + &(&im * &z.0);
        re = &t + &Dyadic::from_int(c);
    }
    (re, im)
}

/// A few Newton steps z <- z - p(z)/p'(z) in dyadic arithmetic, rounding to
/// `prec` bits after each step.
fn newton_refine(p: &IntPoly, deriv: &IntPoly, z: (Dyadic, Dyadic), prec: u32) -> (Dyadic, Dyadic) {
    let mut z = (
        z.0.round(prec, RoundMode::Nearest),
        z.1.round(prec, RoundMode::Nearest),
    );
    for _ in 0..3 {
        let (a, b) = eval_complex(p, &z);
        if a.is_zero() && b.is_zero() {
            return z;
        }
        let (c, e) = eval_complex(deriv, &z);
        let den = &(&c * &c) + &(&e * &e);
        if den.is_zero() {
            return z;
        }
        let nr = &(&a * &c) + &(&b * &e);
        let ni = &(&b * &c) - &(&a * &e);
        let qr = Dyadic::div(&nr, &den, prec, RoundMode::Nearest);
        let qi = Dyadic::div(&ni, &den, prec, RoundMode::Nearest);
        z = (
            (&z.0 - &qr).round(prec, RoundMode::Nearest),
            (&z.1 - &qi).round(prec, RoundMode::Nearest),
        );
    }
    z
}

/// Rigorous upper bound for d |p(z)/p'(z)|; the disk of that radius around
/// z contains at least one root. `None` if p'(z) = 0.
fn certified_radius(
    p: &IntPoly,
    deriv: &IntPoly,
    z: &(Dyadic, Dyadic),
    d: usize,
    prec: u32,
) -> Option<Dyadic> {
    let (a, b) = eval_complex(p, z);
    let (c, e) = eval_complex(deriv, z);
    let num = &(&a * &a) + &(&b * &b);
    let den = &(&c * &c) + &(&e * &e);
    if den.is_zero() {
        return None;
    }
    let ratio = Dyadic::div(&num, &den, 2 * prec, RoundMode::Ceil);
    let d2 = Dyadic::from_i64((d * d) as i64);
    let r2 = &ratio * &d2;
    Some(r2.sqrt(prec, RoundMode::Ceil))
}

/// Heuristic stage: double-precision Aberth-Ehrlich iteration, keeping the
/// `n_upper` approximations of largest imaginary part. Soundness never
/// depends on this; a bad seed set only fails certification later.
fn upper_seeds(p: &IntPoly, n_upper: usize) -> Result<Vec<(Dyadic, Dyadic)>, Error> {
    let mut coeffs = Vec::with_capacity(p.deg() + 1);
    for c in p.coeffs_ascending() {
        let v = c.to_f64().unwrap_or(f64::INFINITY);
        if !v.is_finite() {
            return Err(Error::RootRefinementFailed);
        }
        coeffs.push(v);
    }
    for phase in [0.93_f64, 2.71, 4.17, 5.55] {
        let approx = aberth(&coeffs, phase);
        let mut upper: Vec<Complex64> = approx.into_iter().filter(|z| z.im > 0.0).collect();
        upper.sort_by(|a, b| b.im.partial_cmp(&a.im).unwrap_or(core::cmp::Ordering::Equal));
        upper.truncate(n_upper);
        if upper.len() < n_upper {
            continue;
        }
        // Reject seed sets where two approximations collapsed together.
        let mut distinct = true;
        for i in 0..upper.len() {
            for j in (i + 1)..upper.len() {
                if (upper[i] - upper[j]).norm_sqr() < 1e-24 {
                    distinct = false;
                }
            }
        }
        if !distinct {
            continue;
        }
        return Ok(upper
            .into_iter()
            .map(|z| (dyadic_from_f64(z.re), dyadic_from_f64(z.im)))
            .collect());
    }
    Err(Error::RootRefinementFailed)
}

/// Aberth-Ehrlich simultaneous iteration in f64, Gauss-Seidel style.
fn aberth(coeffs: &[f64], phase: f64) -> Vec<Complex64> {
    let d = coeffs.len() - 1;
    let lead = coeffs[d];
    let maxc = coeffs[..d]
        .iter()
        .map(|c| (c / lead).abs())
        .fold(0.0_f64, f64::max);
    let r = 1.0 + maxc;
    let tau = core::f64::consts::TAU;
    // Staggered radii break the symmetry that can stall the iteration on
    // even or palindromic polynomials.
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let rad = r * (0.4 + 0.5 * (k as f64 + 1.0) / d as f64);
            Complex64::from_polar(rad, tau * k as f64 / d as f64 + phase)
        })
        .collect();
    for _ in 0..400 {
        let mut done = true;
        for i in 0..d {
            let (pv, dv) = horner_pair(coeffs, z[i]);
            if pv.norm_sqr() == 0.0 {
                continue;
            }
            if dv.norm_sqr() == 0.0 {
                z[i] += Complex64::new(1e-6, 1e-6);
                done = false;
                continue;
            }
            let n = pv / dv;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..d {
                if j != i {
                    s += Complex64::new(1.0, 0.0) / (z[i] - z[j]);
                }
            }
            let denom = Complex64::new(1.0, 0.0) - n * s;
            let w = if denom.norm_sqr() == 0.0 { n } else { n / denom };
            z[i] -= w;
            if w.norm_sqr() > 1e-28 * (1.0 + z[i].norm_sqr()) {
                done = false;
            }
        }
        if done {
            break;
        }
    }
    z
}

/// Evaluates p and p' together by Horner's rule.
fn horner_pair(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut pv = Complex64::new(0.0, 0.0);
    let mut dv = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dv = dv * z + pv;
        pv = pv * z + Complex64::new(c, 0.0);
    }
    (pv, dv)
}

/// Exact conversion: every finite f64 is a dyadic rational.
fn dyadic_from_f64(x: f64) -> Dyadic {
    if x == 0.0 {
        return Dyadic::zero();
    }
    debug_assert!(x.is_finite());
    let bits = x.to_bits();
    let neg = bits >> 63 == 1;
    let exp = ((bits >> 52) & 0x7ff) as i64;
    let frac = (bits & ((1u64 << 52) - 1)) as i64;
    let (man, e) = if exp == 0 {
        (frac, -1074)
    } else {
        (frac | (1i64 << 52), exp - 1075)
    };
    Dyadic::from_parts(if neg { -man } else { man }, e)
}

/// Number of roots of `q` strictly inside the unit circle, by certified
/// numeric classification. Precondition: no root of modulus exactly 1.
/// Works for non-squarefree q through its squarefree decomposition.
pub(crate) fn count_inside_unit_circle_numeric(q: &IntPoly) -> Result<usize, Error> {
    let mut total = 0usize;
    for part in q.squarefree_decomposition()? {
        if part.factor.deg() == 0 {
            continue;
        }
        total += part.multiplicity * count_inside_squarefree(&part.factor)?;
    }
    Ok(total)
}

fn count_inside_squarefree(f: &IntPoly) -> Result<usize, Error> {
    let one = BigRational::from_integer(BigInt::from(1));
    let mut eps = BigRational::new(BigInt::from(1), BigInt::from(1024));
    for _ in 0..40 {
        let roots = certified_roots(f, &eps)?;
        let mut inside = 0usize;
        let mut decided = true;
        for rt in &roots {
            let cre = rt.re.to_rational();
            let cim = rt.im.to_rational();
            let c2 = &cre * &cre + &cim * &cim;
            let r = rt.radius.to_rational();
            // |root| <= |center| + r and |root| >= |center| - r, so both
            // tests below are conclusive; neither holding means the disk
            // still straddles the circle.
            let lo_gap = &one - &r;
            if r < one && c2 < &lo_gap * &lo_gap {
                inside += 1;
            } else {
                let hi_gap = &one + &r;
                if c2 > &hi_gap * &hi_gap {
                    // outside
                } else {
                    decided = false;
                    break;
                }
            }
        }
        if decided {
            return Ok(inside);
        }
        eps = &eps / BigRational::from_integer(BigInt::from(1024));
    }
    Err(Error::RootRefinementFailed)
}
