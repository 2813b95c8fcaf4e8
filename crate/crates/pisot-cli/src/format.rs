//! Text formats shared by the CLI and the pipeline artifacts.
//!
//! Record line: `<degree> <c_d> <c_{d-1}> ... <c_0> | <theta>` where the
//! coefficients are in descending order and theta is printed with twelve
//! fractional digits. Verdict line: `<tag> <holds> <residual> <witness>`
//! where holds is 0 or 1 and absent fields are a single dash.

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use pisot_core::interval::RationalInterval;
use pisot_core::pisot::{is_pisot, PisotRecord};
use pisot_core::relations::RelationVerdict;
use pisot_core::IntPoly;
use serde::Serialize;

/// Fractional digits used when printing a record's dominant root.
pub const THETA_DIGITS: u32 = 12;

/// Fractional digits used when printing residuals in verdict lines.
pub const RESIDUAL_DIGITS: u32 = 15;

/// Renders a record as one line of the record file format.
pub fn record_line(rec: &PisotRecord) -> String {
    let coeffs: Vec<String> = rec
        .poly
        .coeffs_descending()
        .iter()
        .map(|c| c.to_string())
        .collect();
    format!(
        "{} {} | {}",
        rec.degree,
        coeffs.join(" "),
        rec.theta.re.decimal(THETA_DIGITS)
    )
}

/// Renders the polynomial half of a record line, without the root part.
/// Used for report entries and for `check` output headers.
pub fn poly_line(p: &IntPoly) -> String {
    let coeffs: Vec<String> = p.coeffs_descending().iter().map(|c| c.to_string()).collect();
    format!("{} {}", p.deg(), coeffs.join(" "))
}

/// Parses a record line back into a certified record. The polynomial is
/// re-certified from scratch; the printed root is only used to locate the
/// dominant root and to cross-check the stored decimal.
pub fn parse_record_line(line: &str) -> Result<PisotRecord> {
    let (poly_part, theta_part) = line
        .split_once('|')
        .ok_or_else(|| anyhow!("record line has no '|' separator: {line:?}"))?;
    let mut tokens = poly_part.split_whitespace();
    let degree: usize = tokens
        .next()
        .ok_or_else(|| anyhow!("empty record line"))?
        .parse()
        .with_context(|| format!("bad degree in record line {line:?}"))?;
    let coeffs: Vec<BigInt> = tokens
        .map(|t| {
            t.parse::<BigInt>()
                .with_context(|| format!("bad coefficient {t:?} in record line"))
        })
        .collect::<Result<_>>()?;
    if coeffs.len() != degree + 1 {
        bail!(
            "record line announces degree {degree} but carries {} coefficients",
            coeffs.len()
        );
    }
    let poly = IntPoly::from_descending(coeffs);
    if poly.deg() != degree {
        bail!("record line degree {degree} does not match leading coefficient");
    }
    let theta = parse_rational(theta_part.trim())
        .with_context(|| format!("bad root value in record line {line:?}"))?;
    // Re-certify inside a tight window around the stored root; a corrupted
    // line fails here rather than producing a wrong record.
    let slack = BigRational::new(BigInt::one(), BigInt::from(1_000_000u64));
    let iv = RationalInterval::new(&theta - &slack, &theta + &slack, true, true)
        .map_err(|e| anyhow!("record line root window: {e}"))?;
    let rec = is_pisot(&poly, &iv)
        .map_err(|e| anyhow!("record line re-certification: {e}"))?
        .ok_or_else(|| {
            anyhow!("record line does not describe a Pisot number near its stored root: {line:?}")
        })?;
    Ok(rec)
}

/// Renders a verdict as one line of the verdict file format.
pub fn verdict_line(v: &RelationVerdict) -> String {
    let residual = match &v.residual {
        Some(r) => r.decimal(RESIDUAL_DIGITS),
        None => "-".to_string(),
    };
    let witness = match &v.witness {
        Some(w) => w
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(" "),
        None => "-".to_string(),
    };
    format!(
        "{} {} {} {}",
        v.relation.tag(),
        u8::from(v.holds),
        residual,
        witness
    )
}

/// JSON mirror of a verdict line.
#[derive(Serialize)]
pub struct VerdictJson {
    pub relation: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

impl From<&RelationVerdict> for VerdictJson {
    fn from(v: &RelationVerdict) -> Self {
        VerdictJson {
            relation: v.relation.tag().to_string(),
            holds: v.holds,
            residual: v.residual.as_ref().map(|r| r.decimal(RESIDUAL_DIGITS)),
            witness: v.witness.clone(),
        }
    }
}

/// Parses a rational from `p/q`, decimal, or integer notation.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        bail!("empty rational");
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .with_context(|| format!("bad numerator in {s:?}"))?;
        let d: BigInt = den
            .trim()
            .parse()
            .with_context(|| format!("bad denominator in {s:?}"))?;
        if d.is_zero() {
            bail!("zero denominator in {s:?}");
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((ipart, fpart)) = s.split_once('.') {
        let negative = ipart.trim_start().starts_with('-');
        let i: BigInt = if ipart == "-" || ipart.is_empty() {
            BigInt::zero()
        } else {
            ipart
                .parse()
                .with_context(|| format!("bad integer part in {s:?}"))?
        };
        if fpart.is_empty() || !fpart.bytes().all(|b| b.is_ascii_digit()) {
            bail!("bad fractional part in {s:?}");
        }
        let f: BigInt = fpart.parse().expect("digits parse");
        let scale = BigInt::from(10u32).pow(fpart.len() as u32);
        let mag = i.abs() * &scale + f;
        let signed = if negative { -mag } else { mag };
        return Ok(BigRational::new(signed, scale));
    }
    let n: BigInt = s.parse().with_context(|| format!("bad rational {s:?}"))?;
    Ok(BigRational::from_integer(n))
}

/// Parses a whitespace-separated descending coefficient list into a
/// polynomial, e.g. "1 0 -1 -1" for the cube minus x minus one.
pub fn poly_from_coeff_str(s: &str) -> Result<IntPoly> {
    let coeffs: Vec<BigInt> = s
        .split_whitespace()
        .map(|t| {
            t.parse::<BigInt>()
                .with_context(|| format!("bad coefficient {t:?}"))
        })
        .collect::<Result<_>>()?;
    if coeffs.is_empty() {
        bail!("no coefficients given");
    }
    if coeffs[0].is_zero() {
        bail!("leading coefficient must be nonzero");
    }
    Ok(IntPoly::from_descending(coeffs))
}
