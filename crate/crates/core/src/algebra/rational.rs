use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational. `Ratio` keeps the representation reduced
/// with a positive denominator.
pub type Rat = BigRational;

pub fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// `n/d`; panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` (optional sign on `p`, `q > 0`).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::invalid(format!("malformed rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    if den.starts_with(['+', '-']) {
        return Err(bad());
    }
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::invalid(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(num, den))
}

/// Canonical `"p/q"`, or `"p"` when `q = 1`.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

/// Generalized binomial coefficient `κ(κ−1)⋯(κ−p+1)/p!`.
pub fn gen_binomial(kappa: &Rat, p: u32) -> Rat {
    let mut acc = Rat::one();
    for i in 0..p {
        acc *= kappa - int(i as i64);
        acc /= int(i as i64 + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_are_canonical() {
        assert_eq!(format_rat(&parse_rat("6/4").unwrap()), "3/2");
        assert_eq!(format_rat(&parse_rat("-2/-1").unwrap_or_else(|_| int(99))), "99");
        assert_eq!(format_rat(&parse_rat(" -4/2 ").unwrap()), "-2");
        assert_eq!(format_rat(&parse_rat("7").unwrap()), "7");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1.5").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn gen_binomial_values() {
        assert_eq!(gen_binomial(&rat(7, 3), 0), int(1));
        assert_eq!(gen_binomial(&rat(1, 2), 2), rat(-1, 8));
        assert_eq!(gen_binomial(&int(3), 4), int(0));
        assert_eq!(gen_binomial(&int(5), 2), int(10));
        // binom(-1, p) = (-1)^p
        assert_eq!(gen_binomial(&int(-1), 3), int(-1));
    }
}
