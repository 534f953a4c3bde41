//! Parsing of half-integer and third-integer quantum numbers from the
//! command line. Accepts integers, decimals (`0.5`) and fractions (`1/2`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use schwinger_core::{Error, Result};

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Argument(format!("cannot read {s:?} as a number"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int_part: BigInt = match int {
            "" | "-" | "+" => BigInt::zero(),
            _ => int.parse().map_err(|_| bad())?,
        };
        let frac_part: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let mag = BigRational::new(frac_part, scale);
        let v = BigRational::from_integer(int_part.clone());
        return Ok(if negative || int_part < BigInt::zero() {
            v - mag
        } else {
            v + mag
        });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

fn scaled(s: &str, by: i64, what: &str) -> Result<i64> {
    let v = parse_rational(s)? * BigRational::from_integer(BigInt::from(by));
    if !v.is_integer() {
        return Err(Error::Argument(format!(
            "{s:?} is not a multiple of 1/{by} ({what})"
        )));
    }
    v.to_integer()
        .to_i64()
        .ok_or_else(|| Error::Argument(format!("{s:?} out of range")))
}

/// `"1/2"`, `"0.5"` → 1 (the doubled value).
pub fn parse_half(s: &str) -> Result<i64> {
    scaled(s, 2, "half-integer")
}

/// `"-2/3"` → -2 (the tripled value).
pub fn parse_third(s: &str) -> Result<i64> {
    scaled(s, 3, "third-integer")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halves() {
        assert_eq!(parse_half("0.5").unwrap(), 1);
        assert_eq!(parse_half("1/2").unwrap(), 1);
        assert_eq!(parse_half("-0.5").unwrap(), -1);
        assert_eq!(parse_half("-3/2").unwrap(), -3);
        assert_eq!(parse_half("2").unwrap(), 4);
        assert_eq!(parse_half("2.50").unwrap(), 5);
        assert!(parse_half("1/3").is_err());
        assert!(parse_half("abc").is_err());
        assert!(parse_half("1/0").is_err());
    }

    #[test]
    fn thirds() {
        assert_eq!(parse_third("1/3").unwrap(), 1);
        assert_eq!(parse_third("-2/3").unwrap(), -2);
        assert_eq!(parse_third("1").unwrap(), 3);
        assert_eq!(parse_third("0").unwrap(), 0);
        assert!(parse_third("0.5").is_err());
    }
}
