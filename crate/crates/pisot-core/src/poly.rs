//! Dense integer polynomials and the exact operations the rest of the crate
//! builds on: ring arithmetic, argument transforms, pseudo-division, primitive
//! PRS gcd, and Yun squarefree decomposition.
//!
//! Coefficients are stored ascending (index = exponent) with no trailing
//! zeros, so the zero polynomial is the empty vector. All operations are
//! exact; nothing here rounds.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// A polynomial with `BigInt` coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// One component of a squarefree decomposition: a primitive factor together
/// with its multiplicity in the original polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreePart {
    pub factor: IntPoly,
    pub multiplicity: usize,
}

impl IntPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The monomial x.
    pub fn x() -> Self {
        IntPoly {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    /// Builds from ascending coefficients (index = exponent), trimming
    /// trailing zeros.
    pub fn from_ascending(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Builds from descending coefficients, highest power first.
    pub fn from_descending(coeffs: Vec<BigInt>) -> Self {
        let mut c = coeffs;
        c.reverse();
        Self::from_ascending(c)
    }

    /// Convenience constructor from machine integers, highest power first.
    pub fn from_descending_i64(coeffs: &[i64]) -> Self {
        Self::from_descending(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The constant polynomial `c`.
    pub fn constant(c: BigInt) -> Self {
        Self::from_ascending(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of a polynomial known to be nonzero.
    ///
    /// Panics on the zero polynomial.
    pub fn deg(&self) -> usize {
        self.degree().expect("deg of zero polynomial")
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending coefficient slice (empty for zero).
    pub fn coeffs_ascending(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Descending coefficient vector, highest power first (empty for zero).
    pub fn coeffs_descending(&self) -> Vec<BigInt> {
        self.coeffs.iter().rev().cloned().collect()
    }

    /// Leading coefficient.
    ///
    /// Panics on the zero polynomial.
    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("leading of zero polynomial")
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// a(-x).
    pub fn negate_argument(&self) -> IntPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        IntPoly::from_ascending(coeffs)
    }

    /// The reciprocal polynomial x^deg * a(1/x), i.e. the coefficients
    /// reversed. An involution exactly when the constant term is nonzero.
    pub fn reciprocal(&self) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPoly::from_ascending(coeffs)
    }

    /// f(x + c): shifts every root by -c.
    pub fn translate(&self, c: &BigInt) -> IntPoly {
        let base = IntPoly::from_ascending(vec![c.clone(), BigInt::one()]);
        let mut acc = IntPoly::zero();
        for k in self.coeffs.iter().rev() {
            acc = &(&acc * &base) + &IntPoly::constant(k.clone());
        }
        acc
    }

    /// 2^deg * a(x/2): coefficient of x^i picks up a factor 2^(deg-i).
    pub fn scale_half(&self) -> IntPoly {
        let Some(d) = self.degree() else {
            return IntPoly::zero();
        };
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c << (d - i))
            .collect();
        IntPoly::from_ascending(coeffs)
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::from_ascending(coeffs)
    }

    /// Multiplies by x^k.
    pub fn mul_pow_x(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn mul_scalar(&self, s: &BigInt) -> IntPoly {
        if s.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Exact evaluation at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// den^deg * a(num/den), an integer whose sign is the sign of a at
    /// num/den when den > 0. Cheaper than rational evaluation.
    pub fn homogeneous_eval(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let Some(d) = self.degree() else {
            return BigInt::zero();
        };
        let mut acc = self.coeffs[d].clone();
        let mut dpow = BigInt::one();
        for i in (0..d).rev() {
            dpow *= den;
            acc = acc * num + &self.coeffs[i] * &dpow;
        }
        acc
    }

    /// Sign of a(q) for rational q, computed without building rationals.
    /// Requires a positive denominator.
    pub fn sign_at(&self, q: &BigRational) -> i8 {
        let v = self.homogeneous_eval(q.numer(), q.denom());
        match v.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    /// Positive gcd of the coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Primitive part with a positive leading coefficient.
    pub fn primitive_positive(&self) -> IntPoly {
        let p = self.primitive_part();
        if p.coeffs.last().is_some_and(Signed::is_negative) {
            -&p
        } else {
            p
        }
    }

    /// Pseudo-remainder: the remainder of lc(b)^(deg a - deg b + 1) * a
    /// divided by b, which stays in Z[x]. Returns a clone of `self` when
    /// deg a < deg b. Panics if b is zero.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        assert!(!b.is_zero(), "pseudo_rem by zero");
        let db = b.deg();
        let Some(da) = self.degree() else {
            return IntPoly::zero();
        };
        if da < db {
            return self.clone();
        }
        let lb = b.leading().clone();
        let m = lb.pow((da - db + 1) as u32);
        let mut r = self.mul_scalar(&m).coeffs;
        // Long division; every quotient step divides exactly by construction.
        for k in (db..=da).rev() {
            if r.get(k).is_none_or(Zero::is_zero) {
                continue;
            }
            let (q, rem) = r[k].div_rem(&lb);
            debug_assert!(rem.is_zero());
            for (j, bc) in b.coeffs.iter().enumerate() {
                let t = &q * bc;
                r[k - db + j] -= t;
            }
            debug_assert!(r[k].is_zero());
        }
        r.truncate(db);
        IntPoly::from_ascending(r)
    }

    /// Exact division in Z[x]: returns `self / d` when the division leaves no
    /// remainder and every coefficient step is integral, else `None`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dd = d.deg();
        let da = self.deg();
        if da < dd {
            return None;
        }
        let ld = d.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); da - dd + 1];
        for k in (dd..=da).rev() {
            if r[k].is_zero() {
                continue;
            }
            let (qc, rem) = r[k].div_rem(ld);
            if !rem.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &qc * dc;
                r[k - dd + j] -= t;
            }
            q[k - dd] = qc;
        }
        if r.iter().take(dd).any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_ascending(q))
    }

    /// Does `self` divide `b` in Q[x]?
    ///
    /// Uses the fact that the pseudo-remainder is lc^k times the true
    /// remainder, so it vanishes exactly when the rational remainder does.
    pub fn divides_in_q(&self, b: &IntPoly) -> Result<bool, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if b.is_zero() {
            return Ok(true);
        }
        if self.deg() > b.deg() {
            return Ok(false);
        }
        Ok(b.pseudo_rem(self).is_zero())
    }

    /// Primitive gcd in Z[x] via the primitive PRS, normalized to a positive
    /// leading coefficient. Integer content of the inputs is discarded, so a
    /// constant result is exactly 1 and means the inputs are coprime in Q[x].
    pub fn gcd_primitive(a: &IntPoly, b: &IntPoly) -> Result<IntPoly, Error> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::BothZero);
        }
        if a.is_zero() {
            return Ok(b.primitive_positive());
        }
        if b.is_zero() {
            return Ok(a.primitive_positive());
        }
        let (mut f, mut g) = if a.deg() >= b.deg() {
            (a.primitive_part(), b.primitive_part())
        } else {
            (b.primitive_part(), a.primitive_part())
        };
        loop {
            let r = f.pseudo_rem(&g);
            if r.is_zero() {
                return Ok(g.primitive_positive());
            }
            if r.degree() == Some(0) {
                return Ok(IntPoly::one());
            }
            f = g;
            g = r.primitive_part();
        }
    }

    /// The radical: the product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Result<IntPoly, Error> {
        let parts = self.squarefree_decomposition()?;
        let mut out = IntPoly::one();
        for p in &parts {
            out = &out * &p.factor;
        }
        Ok(out)
    }

    /// Yun's squarefree decomposition over Z[x].
    ///
    /// Returns pairwise coprime primitive factors with their multiplicities,
    /// sorted by multiplicity; the product of factor^multiplicity equals the
    /// primitive positive part of the input. Every division below is exact in
    /// Z[x] by Gauss's lemma. Errors on the zero polynomial; constants give an
    /// empty decomposition.
    pub fn squarefree_decomposition(&self) -> Result<Vec<SquarefreePart>, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.primitive_positive();
        if f.deg() == 0 {
            return Ok(Vec::new());
        }
        let df = f.derivative();
        let g = Self::gcd_primitive(&f, &df)?;
        let mut out = Vec::new();
        if g.deg() == 0 {
            out.push(SquarefreePart {
                factor: f,
                multiplicity: 1,
            });
            return Ok(out);
        }
        let mut c = f.div_exact(&g).expect("Yun: f divisible by gcd(f, f')");
        let mut d = &df.div_exact(&g).expect("Yun: f' divisible by gcd(f, f')") - &c.derivative();
        let mut i = 1usize;
        while c.deg() > 0 {
            let p = Self::gcd_primitive(&c, &d)?;
            if p.deg() > 0 {
                out.push(SquarefreePart {
                    factor: p.clone(),
                    multiplicity: i,
                });
            }
            c = c.div_exact(&p).expect("Yun: c divisible by factor");
            d = &d.div_exact(&p).expect("Yun: d divisible by factor") - &c.derivative();
            i += 1;
        }
        Ok(out)
    }

    /// Largest multiplicity in the decomposition, optionally ignoring the
    /// factor x. Constants give 0.
    pub fn max_multiplicity(&self, exclude_x: bool) -> Result<usize, Error> {
        let parts = self.squarefree_decomposition()?;
        Ok(parts
            .iter()
            .filter(|p| !(exclude_x && p.factor == IntPoly::x()))
            .map(|p| p.multiplicity)
            .max()
            .unwrap_or(0))
    }

    /// Coefficientwise comparison, highest power first, longer (higher degree)
    /// polynomials last. Gives the canonical ordering for result listings.
    pub fn cmp_desc_lex(&self, other: &IntPoly) -> Ordering {
        match self.coeffs.len().cmp(&other.coeffs.len()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.coeffs.iter().rev().zip(other.coeffs.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// Human-readable form like `x^3 - x - 1`.
    pub fn pretty(&self) -> String {
        let mut s = String::new();
        fmt::write(&mut s, format_args!("{self}")).expect("write to String");
        s
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl core::ops::Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl core::ops::Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(b) = rhs.coeffs.get(i) {
                c += b;
            }
            coeffs.push(c);
        }
        IntPoly::from_ascending(coeffs)
    }
}

impl core::ops::Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(b) = rhs.coeffs.get(i) {
                c -= b;
            }
            coeffs.push(c);
        }
        IntPoly::from_ascending(coeffs)
    }
}

impl core::ops::Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_ascending(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_descending_i64(c)
    }

    #[test]
    fn construction_trims_and_degrees() {
        assert!(IntPoly::from_descending_i64(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 0, -1, -1]).degree(), Some(3));
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(p(&[5]).deg(), 0);
        assert_eq!(p(&[2, 0, 0]).coeff(2), BigInt::from(2));
        assert_eq!(p(&[2, 0, 0]).coeff(5), BigInt::zero());
    }

    #[test]
    fn ring_ops() {
        let a = p(&[1, -1, -1]); // x^2 - x - 1
        let b = p(&[1, 1, -1]); // x^2 + x - 1
        assert_eq!(&a + &b, p(&[2, 0, -2]));
        assert_eq!(&a - &b, p(&[-2, 0]));
        assert_eq!(&a * &b, p(&[1, 0, -3, 0, 1]));
        assert_eq!(-&a, p(&[-1, 1, 1]));
        assert_eq!(a.mul_pow_x(2), p(&[1, -1, -1, 0, 0]));
    }

    #[test]
    fn argument_transforms() {
        // a(-x) of x^3 - x - 1
        assert_eq!(p(&[1, 0, -1, -1]).negate_argument(), p(&[-1, 0, 1, -1]));
        // reciprocal of x^4 - 2x^3 + x - 1
        assert_eq!(p(&[1, -2, 0, 1, -1]).reciprocal(), p(&[-1, 1, 0, -2, 1]));
        // 2^2 * a(x/2) for x^2 - x - 1
        assert_eq!(p(&[1, -1, -1]).scale_half(), p(&[1, -2, -4]));
        // involutions away from zero constant term
        let f = p(&[3, -2, 5, 7]);
        assert_eq!(f.negate_argument().negate_argument(), f);
        assert_eq!(f.reciprocal().reciprocal(), f);
    }

    #[test]
    fn derivative_and_eval() {
        let f = p(&[1, 0, -1, -1]); // x^3 - x - 1
        assert_eq!(f.derivative(), p(&[3, 0, -1]));
        assert_eq!(f.eval_int(&BigInt::from(2)), BigInt::from(5));
        let q = BigRational::new(BigInt::from(3), BigInt::from(2));
        // (3/2)^3 - 3/2 - 1 = 7/8
        assert_eq!(
            f.eval_rational(&q),
            BigRational::new(BigInt::from(7), BigInt::from(8))
        );
        assert_eq!(f.sign_at(&q), 1);
        assert_eq!(
            f.homogeneous_eval(&BigInt::from(3), &BigInt::from(2)),
            BigInt::from(7)
        );
        let root = BigRational::new(BigInt::from(1), BigInt::from(1));
        assert_eq!(p(&[1, -1]).sign_at(&root), 0);
    }

    #[test]
    fn content_and_primitive() {
        let f = p(&[-6, 9, -3]);
        assert_eq!(f.content(), BigInt::from(3));
        assert_eq!(f.primitive_part(), p(&[-2, 3, -1]));
        assert_eq!(f.primitive_positive(), p(&[2, -3, 1]));
    }

    #[test]
    fn pseudo_rem_matches_scaled_remainder() {
        // prem(a, b) = lc(b)^(da-db+1) * (a mod b); for monic b it is a mod b.
        let a = p(&[1, 0, 0, 0, -1]); // x^4 - 1
        let b = p(&[1, 0, -1]); // x^2 - 1
        assert!(a.pseudo_rem(&b).is_zero());
        let b2 = p(&[2, 0, -1]); // 2x^2 - 1
        // 2^3 (x^4 - 1) mod (2x^2 - 1): x^4 - 1 = (2x^2-1)(x^2/2 + 1/4) + (1/4 - 1)
        // so remainder is -3/4, scaled by 8 gives -6.
        assert_eq!(a.pseudo_rem(&b2), p(&[-6]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, -1, -1]);
        let b = p(&[1, 1, -1]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.div_exact(&p(&[1, 0])), None); // x does not divide it
        assert_eq!(p(&[2, 0]).div_exact(&p(&[2])), Some(p(&[1, 0])));
    }

    #[test]
    fn divides_in_q_ignores_content() {
        let f = p(&[2, -2]); // 2x - 2
        assert!(f.divides_in_q(&p(&[1, 0, -1])).unwrap()); // divides x^2 - 1 in Q[x]
        let g = p(&[1, -4, 1, 6, -4]);
        assert!(!p(&[1, -1, -1]).divides_in_q(&g).unwrap());
    }

    #[test]
    fn gcd_fixtures() {
        let g = IntPoly::gcd_primitive(&p(&[1, 0, -5, 0, 0]), &p(&[1, 0, 0])).unwrap();
        assert_eq!(g, p(&[1, 0, 0])); // gcd(x^4 - 5x^2, x^2) = x^2
        let g = IntPoly::gcd_primitive(&p(&[1, -1, -1]), &p(&[1, 1, -1])).unwrap();
        assert_eq!(g, IntPoly::one());
        // common factor with content in the way: gcd(4(x-1)^2(x+1), -6(x-1)(x+2))
        let a = (&p(&[1, -1]) * &p(&[1, 0, -1])).mul_scalar(&BigInt::from(4));
        let b = (&p(&[1, -1]) * &p(&[1, 2])).mul_scalar(&BigInt::from(-6));
        assert_eq!(IntPoly::gcd_primitive(&a, &b).unwrap(), p(&[1, -1]));
    }

    #[test]
    fn gcd_shared_factor() {
        // a = (x-1)(x+1)^2, b = (x+1)(x+2)
        let a = &(&p(&[1, -1]) * &p(&[1, 1])) * &p(&[1, 1]);
        let b = &p(&[1, 1]) * &p(&[1, 2]);
        assert_eq!(IntPoly::gcd_primitive(&a, &b).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn squarefree_decomposition_fixture() {
        // x^4 - 4x^3 + x^2 + 6x - 4 = (x^2 - 2x - 4)(x - 1)^2
        let f = p(&[1, -4, 1, 6, -4]);
        let parts = f.squarefree_decomposition().unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].factor, p(&[1, -2, -4]));
        assert_eq!(parts[0].multiplicity, 1);
        assert_eq!(parts[1].factor, p(&[1, -1]));
        assert_eq!(parts[1].multiplicity, 2);
        assert_eq!(f.max_multiplicity(false).unwrap(), 2);

        let sf = p(&[1, 0, -1, -1]);
        let parts = sf.squarefree_decomposition().unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].multiplicity, 1);

        // x^3 (x - 1)^2, excluding x
        let f = &p(&[1, 0, 0, 0]) * &(&p(&[1, -1]) * &p(&[1, -1]));
        assert_eq!(f.max_multiplicity(true).unwrap(), 2);
        assert_eq!(f.max_multiplicity(false).unwrap(), 3);
    }

    #[test]
    fn squarefree_part_is_radical() {
        let f = &(&p(&[1, -1]) * &p(&[1, -1])) * &p(&[1, 0, -2]);
        let r = f.squarefree_part().unwrap();
        assert_eq!(r.primitive_positive(), &p(&[1, -1]) * &p(&[1, 0, -2]));
    }

    #[test]
    fn ordering_and_display() {
        let a = p(&[1, -1, -1]);
        let b = p(&[1, 0, -1]);
        assert_eq!(a.cmp_desc_lex(&b), Ordering::Less);
        assert_eq!(a.cmp_desc_lex(&a), Ordering::Equal);
        assert_eq!(p(&[1, 0, 0, 0]).cmp_desc_lex(&b), Ordering::Greater);
        assert_eq!(p(&[1, 0, -1, -1]).pretty(), "x^3 - x - 1");
        assert_eq!(p(&[-2, 1]).pretty(), "-2x + 1");
        assert_eq!(IntPoly::zero().pretty(), "0");
        assert_eq!(p(&[1, -2, 0, 1, -1]).pretty(), "x^4 - 2x^3 + x - 1");
    }
}
