//! Exact certification of additive relations among the conjugates of an
//! irreducible polynomial, with a certified numeric prefilter.
//!
//! For monic irreducible f with roots a_1..a_d such that f(x) and f(-x)
//! share no root, the two resultants
//!
//!   g(x) = Res_y(f(x - y), f(y))   (roots a_i + a_j)
//!   h(x) = +-Res_y(f(x + y), f(y)) (roots a_i - a_j)
//!
//! turn each relation into a divisibility or multiplicity statement that
//! exact integer arithmetic decides outright:
//!
//! * three conjugates sum to zero      iff f(-x) divides g;
//! * one conjugate is a sum of two     iff f divides g (equivalently h);
//! * two disjoint pairs share a sum    iff g has a factor of multiplicity
//!   at least 4 (equivalently h has a repeated factor other than x);
//! * one conjugate is a sum of three   iff gcd(g, h) is nonconstant;
//! * four conjugates sum to zero       iff gcd(g(x), g(-x)) is nonconstant.
//!
//! Where two formulations exist, both are computed and must agree; a
//! disagreement is reported as an error rather than trusted. Witness
//! indices ride along from the certified numeric side but verdicts never
//! depend on them.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::dyadic::{Dyadic, RoundMode};
use crate::error::Error;
use crate::poly::IntPoly;
use crate::resultant::relation_resultants;
use crate::roots::{certified_roots, RootEnclosure};

/// The five relation types among conjugates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationType {
    /// a_i + a_j + a_k = 0 over three distinct indices.
    Sum3Zero,
    /// a_i = a_j + a_k over three distinct indices.
    EqSum2,
    /// a_i + a_j = a_k + a_l over four distinct indices.
    PairEq,
    /// a_i = a_j + a_k + a_l over four distinct indices.
    EqSum3,
    /// a_i + a_j + a_k + a_l = 0 over four distinct indices.
    Sum4Zero,
}

impl RelationType {
    pub const ALL: [RelationType; 5] = [
        RelationType::Sum3Zero,
        RelationType::EqSum2,
        RelationType::PairEq,
        RelationType::EqSum3,
        RelationType::Sum4Zero,
    ];

    /// Number of distinct conjugates the relation involves.
    pub fn arity(self) -> usize {
        match self {
            RelationType::Sum3Zero | RelationType::EqSum2 => 3,
            RelationType::PairEq | RelationType::EqSum3 | RelationType::Sum4Zero => 4,
        }
    }

    /// Stable lowercase tag used by text formats and the CLI.
    pub fn tag(self) -> &'static str {
        match self {
            RelationType::Sum3Zero => "sum3zero",
            RelationType::EqSum2 => "eqsum2",
            RelationType::PairEq => "paireq",
            RelationType::EqSum3 => "eqsum3",
            RelationType::Sum4Zero => "sum4zero",
        }
    }

    pub fn from_tag(tag: &str) -> Option<RelationType> {
        RelationType::ALL.iter().copied().find(|r| r.tag() == tag)
    }
}

/// Outcome of an exact relation test.
#[derive(Clone, Debug)]
pub struct RelationVerdict {
    pub relation: RelationType,
    pub holds: bool,
    /// 1-based root indices realizing the relation, in the documented root
    /// order; present only when `holds`.
    pub witness: Option<Vec<usize>>,
    /// Residual of the best numeric combination; present only when `holds`
    /// (it then certifies which indices realize the relation).
    pub residual: Option<Dyadic>,
}

/// Precondition for every resultant criterion: f(x) and f(-x) share no root.
pub fn precondition_check(f: &IntPoly) -> Result<bool, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(IntPoly::gcd_primitive(f, &f.negate_argument())?.deg() == 0)
}

/// Exact test of one relation type; computes the resultants internally.
pub fn test_relation(f: &IntPoly, relation: RelationType) -> Result<RelationVerdict, Error> {
    let (g, h) = checked_resultants(f, relation)?;
    test_relation_with(f, relation, &g, &h)
}

/// Validates preconditions and computes (g, h) once; callers testing many
/// relations on the same polynomial reuse the pair.
pub fn checked_resultants(
    f: &IntPoly,
    relation: RelationType,
) -> Result<(IntPoly, IntPoly), Error> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if d < relation.arity() {
        return Err(Error::BadDegree("degree below the relation arity"));
    }
    if !precondition_check(f)? {
        return Err(Error::SharedFactorWithReflection);
    }
    relation_resultants(f)
}

/// Exact test of one relation type on precomputed resultants (g, h).
pub fn test_relation_with(
    f: &IntPoly,
    relation: RelationType,
    g: &IntPoly,
    h: &IntPoly,
) -> Result<RelationVerdict, Error> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if d < relation.arity() {
        return Err(Error::BadDegree("degree below the relation arity"));
    }
    let holds = match relation {
        RelationType::Sum3Zero => f.negate_argument().divides_in_q(g)?,
        RelationType::EqSum2 => {
            let via_g = f.divides_in_q(g)?;
            let via_h = f.divides_in_q(h)?;
            if via_g != via_h {
                return Err(Error::CrossCheckMismatch(
                    "f | g and f | h disagree for the sum-of-two relation",
                ));
            }
            via_g
        }
        RelationType::PairEq => {
            let via_g = g.max_multiplicity(false)? >= 4;
            let via_h = h.max_multiplicity(true)? >= 2;
            if via_g != via_h {
                return Err(Error::CrossCheckMismatch(
                    "g-multiplicity and h-multiplicity disagree for the pair relation",
                ));
            }
            via_g
        }
        RelationType::EqSum3 => IntPoly::gcd_primitive(g, h)?.deg() > 0,
        RelationType::Sum4Zero => IntPoly::gcd_primitive(g, &g.negate_argument())?.deg() > 0,
    };
    if !holds {
        return Ok(RelationVerdict {
            relation,
            holds: false,
            witness: None,
            residual: None,
        });
    }
    let (witness, residual) = recover_witness(f, relation)?;
    Ok(RelationVerdict {
        relation,
        holds: true,
        witness: Some(witness),
        residual: Some(residual),
    })
}

/// Witness precision: enclosure radius 10^-12 per the reporting contract.
fn witness_eps() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64.pow(12)))
}

fn recover_witness(f: &IntPoly, relation: RelationType) -> Result<(Vec<usize>, Dyadic), Error> {
    let roots = certified_roots(f, &witness_eps())?;
    let best = best_combination(&roots, relation).ok_or(Error::RootRefinementFailed)?;
    Ok((best.indices, modulus_upper(&best.norm_sq)))
}

/// A combination's exact squared residual together with the radii of the
/// enclosures involved.
struct Combination {
    indices: Vec<usize>,
    norm_sq: Dyadic,
    radii_sum: BigRational,
}

/// Upper bound of sqrt(norm_sq), 96 bits.
fn modulus_upper(norm_sq: &Dyadic) -> Dyadic {
    norm_sq.sqrt(96, RoundMode::Ceil)
}

/// The residual of a signed combination sum of root centers, exactly.
fn combination_norm_sq(roots: &[RootEnclosure], signed: &[(usize, i8)]) -> (Dyadic, BigRational) {
    let mut re = Dyadic::zero();
    let mut im = Dyadic::zero();
    let mut radii = BigRational::zero();
    for &(idx, sign) in signed {
        let r = &roots[idx];
        let rim = if r.is_real { Dyadic::zero() } else { r.im.clone() };
        if sign > 0 {
            re = &re + &r.re;
            im = &im + &rim;
        } else {
            re = &re - &r.re;
            im = &im - &rim;
        }
        radii += r.radius_rational();
    }
    (&(&re * &re) + &(&im * &im), radii)
}

/// Minimizes the exact squared residual over the admissible index
/// combinations of `relation`; ties resolve to the earliest combination in
/// lexicographic order. 0-based indices internally, 1-based in the result.
fn best_combination(roots: &[RootEnclosure], relation: RelationType) -> Option<Combination> {
    let d = roots.len();
    if d < relation.arity() {
        return None;
    }
    let mut best: Option<Combination> = None;
    let mut consider = |indices: Vec<usize>, signed: &[(usize, i8)]| {
        let (norm_sq, radii_sum) = combination_norm_sq(roots, signed);
        let better = match &best {
            None => true,
            Some(b) => norm_sq < b.norm_sq,
        };
        if better {
            best = Some(Combination {
                indices: indices.iter().map(|i| i + 1).collect(),
                norm_sq,
                radii_sum,
            });
        }
    };
    match relation {
        RelationType::Sum3Zero => {
            for_each_subset3(d, |i, j, k| {
                consider(alloc::vec![i, j, k], &[(i, 1), (j, 1), (k, 1)]);
            });
        }
        RelationType::EqSum2 => {
            // a_i = a_j + a_k: i free, j < k, all distinct.
            for i in 0..d {
                for j in 0..d {
                    if j == i {
                        continue;
                    }
                    for k in (j + 1)..d {
                        if k == i {
                            continue;
                        }
                        consider(alloc::vec![i, j, k], &[(i, 1), (j, -1), (k, -1)]);
                    }
                }
            }
        }
        RelationType::PairEq => {
            // a_i + a_j = a_k + a_l: three pairings per 4-subset.
            for_each_subset4(d, |i, j, k, l| {
                consider(alloc::vec![i, j, k, l], &[(i, 1), (j, 1), (k, -1), (l, -1)]);
                consider(alloc::vec![i, k, j, l], &[(i, 1), (k, 1), (j, -1), (l, -1)]);
                consider(alloc::vec![i, l, j, k], &[(i, 1), (l, 1), (j, -1), (k, -1)]);
            });
        }
        RelationType::EqSum3 => {
            // a_i = a_j + a_k + a_l: four assignments per 4-subset.
            for i in 0..d {
                for j in 0..d {
                    if j == i {
                        continue;
                    }
                    for k in (j + 1)..d {
                        if k == i {
                            continue;
                        }
                        for l in (k + 1)..d {
                            if l == i {
                                continue;
                            }
                            consider(
                                alloc::vec![i, j, k, l],
                                &[(i, 1), (j, -1), (k, -1), (l, -1)],
                            );
                        }
                    }
                }
            }
        }
        RelationType::Sum4Zero => {
            for_each_subset4(d, |i, j, k, l| {
                consider(alloc::vec![i, j, k, l], &[(i, 1), (j, 1), (k, 1), (l, 1)]);
            });
        }
    }
    best
}

fn for_each_subset3(d: usize, mut f: impl FnMut(usize, usize, usize)) {
    for i in 0..d {
        for j in (i + 1)..d {
            for k in (j + 1)..d {
                f(i, j, k);
            }
        }
    }
}

fn for_each_subset4(d: usize, mut f: impl FnMut(usize, usize, usize, usize)) {
    for i in 0..d {
        for j in (i + 1)..d {
            for k in (j + 1)..d {
                for l in (k + 1)..d {
                    f(i, j, k, l);
                }
            }
        }
    }
}

/// Prefilter outcome for one relation type.
#[derive(Clone, Debug)]
pub struct PrefilterOutcome {
    pub relation: RelationType,
    /// Minimum residual over all combinations (upper bound, 96 bits).
    pub residual: Dyadic,
    /// True when the relation cannot be ruled out numerically: the minimum
    /// residual is below the threshold inflated by the enclosure radii, so
    /// a true relation can never be unflagged.
    pub flagged: bool,
}

/// Default enclosure radius for prefilter roots: 10^-10.
pub fn prefilter_root_eps() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64.pow(10)))
}

/// Default prefilter threshold: 10^-5.
pub fn default_prefilter_threshold() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64.pow(5)))
}

/// Certified numeric screen: for each requested relation type, the minimum
/// modulus of the relation expression over all admissible combinations of
/// certified root enclosures. Types whose arity exceeds the degree are
/// omitted. All comparisons are exact (squared moduli against squared
/// inflated thresholds), so flagging is sound.
pub fn numeric_prefilter(
    f: &IntPoly,
    types: &[RelationType],
    threshold: &BigRational,
) -> Result<Vec<PrefilterOutcome>, Error> {
    let roots = certified_roots(f, &prefilter_root_eps())?;
    let mut out = Vec::new();
    for &relation in types {
        let Some(best) = best_combination(&roots, relation) else {
            continue;
        };
        let inflated = threshold + &best.radii_sum;
        let flagged = best.norm_sq.to_rational() < &inflated * &inflated;
        out.push(PrefilterOutcome {
            relation,
            residual: modulus_upper(&best.norm_sq),
            flagged,
        });
    }
    Ok(out)
}
