//! Error type shared by the crate.

use core::fmt;

/// Everything that can go wrong in this crate.
///
/// Most operations have preconditions (nonzero input, squarefree input, an
/// interval of the right shape); violating one yields a variant here rather
/// than a wrong answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An operation received the zero polynomial where it is not meaningful.
    ZeroPolynomial,
    /// gcd(0, 0) requested.
    BothZero,
    /// The polynomial has a zero constant term where a nonzero one is required.
    ZeroConstantTerm,
    /// A squarefree polynomial was required.
    NotSquarefree,
    /// A monic polynomial was required.
    NotMonic,
    /// A root on the unit circle was detected where the contract forbids one.
    CircleRoot,
    /// An interval was empty, inverted, or outside the domain an operation supports.
    InvalidInterval(&'static str),
    /// A degree argument was out of the supported range.
    BadDegree(&'static str),
    /// The number of relation terms must be 3 or 4.
    BadTermCount(u32),
    /// f(x) and f(-x) share a nonconstant factor, so the resultant criteria do not apply.
    SharedFactorWithReflection,
    /// Two independent criteria for the same relation disagreed.
    ///
    /// This indicates a bug in the resultant machinery and is asserted never to
    /// occur; it is reported rather than silently trusted.
    CrossCheckMismatch(&'static str),
    /// Certified root refinement failed to reach the requested radius.
    RootRefinementFailed,
    /// A power-sum prefix was longer than the degree it is for.
    PowerSumLength,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroPolynomial => write!(f, "zero polynomial"),
            Error::BothZero => write!(f, "gcd of two zero polynomials"),
            Error::ZeroConstantTerm => write!(f, "polynomial has zero constant term"),
            Error::NotSquarefree => write!(f, "polynomial is not squarefree"),
            Error::NotMonic => write!(f, "polynomial is not monic"),
            Error::CircleRoot => write!(f, "root on the unit circle"),
            Error::InvalidInterval(why) => write!(f, "invalid interval: {why}"),
            Error::BadDegree(why) => write!(f, "bad degree: {why}"),
            Error::BadTermCount(t) => write!(f, "unsupported term count {t} (need 3 or 4)"),
            Error::SharedFactorWithReflection => {
                write!(f, "f(x) and f(-x) share a nonconstant factor")
            }
            Error::CrossCheckMismatch(what) => write!(f, "cross-check mismatch: {what}"),
            Error::RootRefinementFailed => write!(f, "root refinement failed to converge"),
            Error::PowerSumLength => write!(f, "power-sum prefix longer than the degree"),
        }
    }
}

impl core::error::Error for Error {}
