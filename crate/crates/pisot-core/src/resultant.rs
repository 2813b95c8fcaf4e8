//! Exact resultants, and the two sum/difference resultants that drive the
//! conjugate-relation criteria.
//!
//! For monic f of degree d with roots a_1..a_d:
//!
//!   g(x) = Res_y(f(x-y), f(y))       = (-1)^d prod_{i,j} (x - a_i - a_j)
//!   h(x) = (-1)^d Res_y(f(x+y), f(y)) =        prod_{i,j} (x - a_i + a_j)
//!
//! Both have degree d^2; lc(g) = (-1)^d and h is monic. The normative route
//! evaluates at the integer points 0..d^2 and interpolates with exact forward
//! differences; a fraction-free Sylvester determinant over Z[x] provides an
//! independent route used for cross-checking.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::poly::IntPoly;

/// Exact resultant of two integer polynomials (0 if either is zero).
///
/// Classical PRS recursion with a rational correction factor; the final value
/// is an integer by theory and asserted to be one.
pub fn resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    let mut acc = BigRational::one();
    let mut f;
    let mut g;
    if a.deg() >= b.deg() {
        f = a.clone();
        g = b.clone();
    } else {
        f = b.clone();
        g = a.clone();
        if (a.deg() * b.deg()) % 2 == 1 {
            acc = -acc;
        }
    }
    loop {
        let m = f.deg();
        let n = g.deg();
        if n == 0 {
            let c = BigRational::from_integer(g.constant_term());
            let mut v = acc;
            for _ in 0..m {
                v *= &c;
            }
            assert!(v.is_integer(), "resultant must be an integer");
            return v.to_integer();
        }
        let r = f.pseudo_rem(&g);
        if r.is_zero() {
            return BigInt::zero();
        }
        let cont = r.content();
        let rt = r.primitive_part();
        let p = rt.deg();
        // res(f, g) = (-1)^(mn) lc(g)^(m - p - n(m-n+1)) cont^n res(g, r/cont)
        if (m * n) % 2 == 1 {
            acc = -acc;
        }
        let lc = BigRational::from_integer(g.leading().clone());
        let e = m as i64 - p as i64 - n as i64 * (m as i64 - n as i64 + 1);
        if e >= 0 {
            for _ in 0..e {
                acc *= &lc;
            }
        } else {
            for _ in 0..-e {
                acc /= &lc;
            }
        }
        let cr = BigRational::from_integer(cont);
        for _ in 0..n {
            acc *= &cr;
        }
        f = g;
        g = rt;
    }
}

/// f(a + y) or f(a - y) as a polynomial in y.
fn compose_linear(f: &IntPoly, a: &BigInt, minus: bool) -> IntPoly {
    let base = IntPoly::from_ascending(vec![
        a.clone(),
        if minus { -BigInt::one() } else { BigInt::one() },
    ]);
    let mut acc = IntPoly::zero();
    for c in f.coeffs_ascending().iter().rev() {
        acc = &(&acc * &base) + &IntPoly::constant(c.clone());
    }
    acc
}

/// Interpolates the unique degree <= n polynomial through (i, values[i]) for
/// i = 0..n using integer forward differences. The result must have integer
/// coefficients; this is asserted.
fn interpolate_consecutive(values: &[BigInt]) -> IntPoly {
    let n = values.len() - 1;
    // Forward difference table in place: after pass k, diffs[0] = Delta^k y_0.
    let mut diffs = values.to_vec();
    let mut deltas = Vec::with_capacity(n + 1);
    deltas.push(diffs[0].clone());
    for k in 1..=n {
        for i in 0..=(n - k) {
            let d = &diffs[i + 1] - &diffs[i];
            diffs[i] = d;
        }
        deltas.push(diffs[0].clone());
    }
    // p(x) = sum_k Delta^k y_0 * binom(x, k)
    //      = (1/n!) sum_k Delta^k y_0 * (n!/k!) * x(x-1)...(x-k+1).
    let mut nfact = BigInt::one();
    for i in 2..=n {
        nfact *= BigInt::from(i);
    }
    let mut scale = nfact.clone(); // n!/k! for current k
    let mut falling = IntPoly::one(); // x(x-1)...(x-k+1)
    let mut total = IntPoly::zero();
    for (k, delta) in deltas.iter().enumerate() {
        if k > 0 {
            scale /= BigInt::from(k);
            let lin = IntPoly::from_ascending(vec![BigInt::from(-((k as i64) - 1)), BigInt::one()]);
            falling = &falling * &lin;
        }
        if !delta.is_zero() {
            total = &total + &falling.mul_scalar(&(delta * &scale));
        }
    }
    let out = total
        .div_exact(&IntPoly::constant(nfact))
        .expect("interpolation result has integer coefficients");
    out
}

/// The pair (g, h) for nonzero f of degree >= 1, by evaluation at x = 0..d^2
/// and exact interpolation.
pub fn relation_resultants(f: &IntPoly) -> Result<(IntPoly, IntPoly), Error> {
    let Some(d) = f.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    if d < 1 {
        return Err(Error::BadDegree("relation resultants need degree >= 1"));
    }
    let n = d * d;
    let fy = f.clone();
    let mut gv = Vec::with_capacity(n + 1);
    let mut hv = Vec::with_capacity(n + 1);
    for x0 in 0..=n {
        let a = BigInt::from(x0);
        gv.push(resultant(&compose_linear(f, &a, true), &fy));
        hv.push(resultant(&compose_linear(f, &a, false), &fy));
    }
    let g = interpolate_consecutive(&gv);
    let mut h = interpolate_consecutive(&hv);
    if d % 2 == 1 {
        h = -&h;
    }
    debug_assert_eq!(g.degree(), Some(n));
    debug_assert_eq!(h.degree(), Some(n));
    Ok((g, h))
}

/// Bivariate polynomials in y with coefficients in Z[x]: index = power of y.
type Bivar = Vec<IntPoly>;

fn bivar_trim(v: &mut Bivar) {
    while v.last().is_some_and(IntPoly::is_zero) {
        v.pop();
    }
}

/// f(x - y) or f(x + y) as a polynomial in y over Z[x].
fn compose_linear_bivar(f: &IntPoly, minus: bool) -> Bivar {
    // Horner in the bivariate ring: acc = acc * (x -+ y) + c_k.
    let mut acc: Bivar = Vec::new();
    for c in f.coeffs_ascending().iter().rev() {
        let mut next: Bivar = vec![IntPoly::zero(); acc.len() + 1];
        for (j, q) in acc.iter().enumerate() {
            next[j] = &next[j] + &q.mul_pow_x(1); // times x
            let shifted = if minus { -q } else { q.clone() };
            next[j + 1] = &next[j + 1] + &shifted; // times -+y
        }
        next[0] = &next[0] + &IntPoly::constant(c.clone());
        bivar_trim(&mut next);
        acc = next;
    }
    acc
}

/// Determinant of a square matrix over Z[x] by fraction-free Bareiss
/// elimination; every division is exact in Z[x].
fn bareiss_det(mut m: Vec<Vec<IntPoly>>) -> IntPoly {
    let n = m.len();
    if n == 0 {
        return IntPoly::one();
    }
    let mut sign = false;
    let mut prev = IntPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return IntPoly::zero();
            };
            m.swap(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = IntPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -&det
    } else {
        det
    }
}

/// Resultant with respect to y of two bivariate polynomials, via the
/// Sylvester determinant over Z[x].
fn resultant_y_bivar(a: &Bivar, b: &Bivar) -> IntPoly {
    let m = a.len() - 1;
    let n = b.len() - 1;
    if m == 0 && n == 0 {
        return IntPoly::one();
    }
    let size = m + n;
    let mut mat = vec![vec![IntPoly::zero(); size]; size];
    for (row, mrow) in mat.iter_mut().enumerate().take(n) {
        for (j, c) in a.iter().rev().enumerate() {
            mrow[row + j] = c.clone();
        }
    }
    for row in 0..m {
        for (j, c) in b.iter().rev().enumerate() {
            mat[n + row][row + j] = c.clone();
        }
    }
    bareiss_det(mat)
}

/// The pair (g, h) computed through the Sylvester determinant. Independent of
/// `relation_resultants`; intended for cross-checks at small degree (the
/// determinant route is much more expensive).
pub fn relation_resultants_direct(f: &IntPoly) -> Result<(IntPoly, IntPoly), Error> {
    let Some(d) = f.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    if d < 1 {
        return Err(Error::BadDegree("relation resultants need degree >= 1"));
    }
    let fy: Bivar = f
        .coeffs_ascending()
        .iter()
        .map(|c| IntPoly::constant(c.clone()))
        .collect();
    let g = resultant_y_bivar(&compose_linear_bivar(f, true), &fy);
    let mut h = resultant_y_bivar(&compose_linear_bivar(f, false), &fy);
    if d % 2 == 1 {
        h = -&h;
    }
    Ok((g, h))
}
