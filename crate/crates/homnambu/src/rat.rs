//! Exact rational scalars.
//!
//! All arithmetic in the crate runs over `Rat`, an arbitrary-precision
//! rational kept in canonical lowest terms with a positive denominator
//! (zero is `0/1`). The text syntax accepted by [`parse_rat`] is an
//! optional sign, an integer, and an optional `/` followed by a positive
//! integer, e.g. `-3/7` or `4`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Rat = num_rational::BigRational;

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as an exact rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

/// Parses the strict rational grammar: `[+-]? digits ( "/" digits )?`
/// with a nonzero denominator. Unlike `BigRational::from_str`, a signed
/// or zero denominator is rejected at the syntax level.
pub fn parse_rat(text: &str) -> Result<Rat, String> {
    let s = text.trim();
    if s.is_empty() {
        return Err("empty rational literal".into());
    }
    let (numer_text, denom_text) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let rest = numer_text.strip_prefix(['+', '-']).unwrap_or(numer_text);
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("bad numerator in rational literal `{s}`"));
    }
    let numer: BigInt = numer_text
        .parse()
        .map_err(|_| format!("bad rational literal `{s}`"))?;
    let denom = match denom_text {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(format!("denominator in `{s}` must be a positive integer"));
            }
            let d: BigInt = d
                .parse()
                .map_err(|_| format!("bad rational literal `{s}`"))?;
            if d.is_zero() {
                return Err(format!("zero denominator in `{s}`"));
            }
            d
        }
    };
    Ok(Rat::new(numer, denom))
}

/// Canonical display form: `p` when the denominator is one, else `p/q`.
pub fn fmt_rat(r: &Rat) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn parse_accepts_canonical_forms() {
        assert_eq!(parse_rat("4").unwrap(), rat_int(4));
        assert_eq!(parse_rat("-3/7").unwrap(), rat(-3, 7));
        assert_eq!(parse_rat("+6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rat("0").unwrap(), rat_zero());
    }

    #[test]
    fn parse_rejects_bad_syntax() {
        for bad in [
            "", "1/0", "1/-2", "1/+2", "x", "1.5", "3/", "/4", "1 / 2", "--1",
        ] {
            assert!(parse_rat(bad).is_err(), "accepted `{bad}`");
        }
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(fmt_rat(&rat(8, 2)), "4");
        assert_eq!(fmt_rat(&rat(4, -6)), "-2/3");
        assert_eq!(fmt_rat(&rat(0, 5)), "0");
    }

    #[test]
    fn invariants_hold_after_normalization() {
        let r = rat(4, -6);
        assert!(r.denom().is_positive());
        let n = r.numer().abs();
        assert!(num_integer::gcd(n, r.denom().clone()).is_one());
    }
}
