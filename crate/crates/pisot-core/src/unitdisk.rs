//! Exact root counting relative to the unit circle: a circle-root detector
//! and a count of roots in the open unit disk.
//!
//! The disk count runs the Schur-Cohn reduction in exact integer arithmetic.
//! The reduction step q -> T(q) = q(0) q - lc(q) rev(q) is degenerate when
//! gamma = q(0)^2 - lc(q)^2 vanishes, which happens immediately for every
//! monic polynomial with constant term +-1, so degeneracy is the common case
//! here, not the exception. Two exact rescues keep the computation fast:
//!
//! * if p equals +-rev(p), its root multiset is closed under z -> 1/z, and
//!   with no circle roots exactly half the roots (with multiplicity) lie
//!   inside: the count is deg/2 outright;
//! * otherwise conjugate by the disk automorphism z -> (z+c)/(1+cz) for a
//!   small rational c = u/v. The conjugated polynomial has integer
//!   coefficients, identical inside/on/outside root counts, and generically a
//!   degeneracy-free Schur-Cohn run; a short list of c values is tried.
//!
//! Only if every conjugate degenerates does the count fall back to certified
//! numeric isolation, which the no-circle-root precondition makes sound.

use alloc::vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::interval::RationalInterval;
use crate::poly::IntPoly;
use crate::sturm;

/// Does `p` have a root of modulus exactly 1? Requires a nonzero constant
/// term. Exact: inversion-symmetric factors are extracted with a gcd, and
/// their circle roots are counted through the substitution y = x + 1/x,
/// which maps them into the real interval (-2, 2).
pub fn has_root_on_unit_circle(p: &IntPoly) -> Result<bool, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    if p.deg() == 0 {
        return Ok(false);
    }
    let one = BigInt::from(1);
    if p.eval_int(&one).is_zero() || p.eval_int(&-&one).is_zero() {
        return Ok(true);
    }
    let c = IntPoly::gcd_primitive(p, &p.reciprocal())?;
    if c.deg() == 0 {
        return Ok(false);
    }
    let c = c.squarefree_part()?;
    // Roots of c are closed under inversion and exclude +-1, so c is
    // self-reciprocal of even degree.
    assert_eq!(c, c.reciprocal(), "inversion-symmetric factor");
    let w = half_substitution(&c);
    let iv = RationalInterval::open(
        BigRational::from_integer(BigInt::from(-2)),
        BigRational::from_integer(BigInt::from(2)),
    )
    .expect("(-2, 2) is valid");
    Ok(sturm::count_roots_in(&w, &iv)? > 0)
}

/// For self-reciprocal c of even degree 2m, the polynomial w with
/// c(x) = x^m w(x + 1/x). Circle roots of c (other than +-1) correspond to
/// real roots of w in (-2, 2).
fn half_substitution(c: &IntPoly) -> IntPoly {
    let d = c.deg();
    assert!(d % 2 == 0, "self-reciprocal factor has even degree");
    let m = d / 2;
    // C_j(y) = x^j + x^-j in terms of y = x + 1/x.
    let mut cj_prev = IntPoly::constant(BigInt::from(2));
    let mut cj = IntPoly::x();
    let mut w = IntPoly::constant(c.coeff(m));
    for j in 1..=m {
        debug_assert_eq!(c.coeff(m + j), c.coeff(m - j));
        w = &w + &cj.mul_scalar(&c.coeff(m + j));
        if j < m {
            let next = &(&IntPoly::x() * &cj) - &cj_prev;
            cj_prev = cj;
            cj = next;
        }
    }
    w
}

/// Number of roots of `p` in the open unit disk, counted with multiplicity.
///
/// Precondition: no root on the unit circle (establish with
/// `has_root_on_unit_circle`). Degenerate cases that can only arise from a
/// circle root are reported as `Error::CircleRoot`.
pub fn count_in_open_unit_disk(p: &IntPoly) -> Result<usize, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.deg() == 0 {
        return Ok(0);
    }
    // Roots at the origin are inside; strip them.
    let at_zero = p
        .coeffs_ascending()
        .iter()
        .take_while(|c| c.is_zero())
        .count();
    if at_zero > 0 {
        let q = IntPoly::from_ascending(p.coeffs_ascending()[at_zero..].to_vec());
        return Ok(at_zero + count_nonzero_constant(&q)?);
    }
    count_nonzero_constant(p)
}

fn count_nonzero_constant(q: &IntPoly) -> Result<usize, Error> {
    let d = q.deg();
    if d == 0 {
        return Ok(0);
    }
    let rev = q.reciprocal();
    if *q == -&rev {
        // q(1) = -q(1) forces a root at 1.
        return Err(Error::CircleRoot);
    }
    if *q == rev {
        if d % 2 == 1 {
            // Odd self-reciprocal has a root at -1.
            return Err(Error::CircleRoot);
        }
        return Ok(d / 2);
    }
    if let Some(n) = schur_cohn_run(q) {
        return Ok(n);
    }
    for &(u, v) in MOBIUS_CENTERS {
        let uq = BigRational::new(BigInt::from(u), BigInt::from(v));
        let vq = BigRational::new(BigInt::from(v), BigInt::from(u));
        if q.sign_at(&uq) == 0 || q.sign_at(&vq) == 0 {
            continue; // c or 1/c is a root; the conjugate would drop degree
        }
        let t = mobius_unit_disk(q, u, v);
        debug_assert_eq!(t.degree(), Some(d));
        if let Some(n) = schur_cohn_run(&t) {
            return Ok(n);
        }
    }
    if has_root_on_unit_circle(q)? {
        return Err(Error::CircleRoot);
    }
    crate::roots::count_inside_unit_circle_numeric(q)
}

/// Fixed list of disk-automorphism centers c = u/v in (0, 1).
const MOBIUS_CENTERS: &[(i64, i64)] = &[
    (1, 2),
    (1, 3),
    (2, 3),
    (1, 4),
    (3, 4),
    (1, 5),
    (2, 5),
    (3, 5),
    (4, 5),
    (1, 7),
    (2, 7),
    (3, 7),
    (4, 7),
    (5, 7),
    (6, 7),
    (1, 8),
];

/// sum_k q_k (vz + u)^k (uz + v)^(d-k): the integer form of
/// (1 + cz)^d q((z + c)/(1 + cz)) for c = u/v, scaled by v^d.
fn mobius_unit_disk(q: &IntPoly, u: i64, v: i64) -> IntPoly {
    let a = IntPoly::from_ascending(vec![BigInt::from(u), BigInt::from(v)]);
    let b = IntPoly::from_ascending(vec![BigInt::from(v), BigInt::from(u)]);
    let coeffs = q.coeffs_ascending();
    let d = q.deg();
    let mut acc = IntPoly::constant(coeffs[d].clone());
    let mut bpow = IntPoly::one();
    for k in (0..d).rev() {
        bpow = &bpow * &b;
        acc = &(&acc * &a) + &bpow.mul_scalar(&coeffs[k]);
    }
    acc
}

/// The exact Schur-Cohn reduction; `None` on any degenerate step.
fn schur_cohn_run(q: &IntPoly) -> Option<usize> {
    let cur = q.primitive_part();
    let d = cur.deg();
    if d == 0 {
        return Some(0);
    }
    let a0 = cur.constant_term();
    let ad = cur.leading();
    let gamma = &a0 * &a0 - ad * ad;
    if gamma.is_zero() {
        return None;
    }
    // T(q) = a0 q - ad rev(q); its constant term is gamma, so it is nonzero.
    let t = &cur.mul_scalar(&a0) - &cur.reciprocal().mul_scalar(ad);
    let sub = schur_cohn_run(&t)?;
    Some(if gamma.is_positive() { sub } else { d - sub })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_descending_i64(c)
    }

    #[test]
    fn circle_detection() {
        assert!(!has_root_on_unit_circle(&p(&[1, -3, 1])).unwrap());
        assert!(has_root_on_unit_circle(&p(&[1, 0, 1])).unwrap()); // x^2 + 1
        assert!(has_root_on_unit_circle(&p(&[1, 0, -1])).unwrap()); // roots +-1
        assert!(!has_root_on_unit_circle(&p(&[1, 0, -1, -1])).unwrap());
        // (x^2 - x + 1)(x - 3): sixth roots of unity on the circle
        let f = &p(&[1, -1, 1]) * &p(&[1, -3]);
        assert!(has_root_on_unit_circle(&f).unwrap());
        // cyclotomic: all roots on the circle
        assert!(has_root_on_unit_circle(&p(&[1, 1, 1, 1, 1])).unwrap());
        assert!(matches!(
            has_root_on_unit_circle(&p(&[1, 0])),
            Err(Error::ZeroConstantTerm)
        ));
        assert!(matches!(
            has_root_on_unit_circle(&IntPoly::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn disk_count_direct_cases() {
        assert_eq!(count_in_open_unit_disk(&p(&[1, -2])).unwrap(), 0);
        assert_eq!(count_in_open_unit_disk(&p(&[2, -1])).unwrap(), 1);
        assert_eq!(count_in_open_unit_disk(&p(&[1, -5, 6])).unwrap(), 0);
        assert_eq!(count_in_open_unit_disk(&p(&[3, -1, -1])).unwrap(), 2);
    }

    #[test]
    fn disk_count_self_reciprocal_shortcut() {
        // x^2 - 3x + 1: roots 2.618 and 0.382
        assert_eq!(count_in_open_unit_disk(&p(&[1, -3, 1])).unwrap(), 1);
        // (x - 2)(2x - 1)
        assert_eq!(count_in_open_unit_disk(&p(&[2, -5, 2])).unwrap(), 1);
    }

    #[test]
    fn disk_count_mobius_rescue() {
        // Every monic polynomial with constant term -1 degenerates at step
        // one; these go through the conjugation rescue.
        assert_eq!(count_in_open_unit_disk(&p(&[1, -1, -1])).unwrap(), 1);
        assert_eq!(count_in_open_unit_disk(&p(&[1, 0, -1, -1])).unwrap(), 2);
        assert_eq!(count_in_open_unit_disk(&p(&[1, -2, 0, 1, -1])).unwrap(), 3);
        assert_eq!(count_in_open_unit_disk(&p(&[1, -1, 0, -1])).unwrap(), 2);
    }

    #[test]
    fn disk_count_with_multiplicity() {
        // (x^2 - x - 1)^2: the inside root doubles
        let f = &p(&[1, -1, -1]) * &p(&[1, -1, -1]);
        assert_eq!(count_in_open_unit_disk(&f).unwrap(), 2);
        // x^2 (x - 2): origin roots count
        assert_eq!(count_in_open_unit_disk(&p(&[1, -2, 0, 0])).unwrap(), 2);
        assert_eq!(count_in_open_unit_disk(&p(&[1, 0, 0])).unwrap(), 2);
    }

    #[test]
    fn mobius_transform_preserves_structure() {
        let q = p(&[1, 0, -1, -1]);
        let t = mobius_unit_disk(&q, 1, 2);
        assert_eq!(t.degree(), Some(3));
        // hand-expanded: sum q_k (2z+1)^k (z+2)^(3-k) = 5z^3 - 3z^2 - 18z - 11
        assert_eq!(t, p(&[5, -3, -18, -11]));
    }
}
