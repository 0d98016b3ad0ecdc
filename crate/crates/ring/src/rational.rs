use crate::RingError;

/// Arbitrary precision rational, always kept in lowest terms by GMP.
pub type Rational = rug::Rational;

/// `num/den` as a rational.
///
/// # Panics
/// If `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::from((num, den))
}

/// Canonical text form: `"n"` for integers, `"n/d"` otherwise, sign on the numerator.
pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational, RingError> {
    let t = s.trim();
    let parsed = t
        .parse::<Rational>()
        .map_err(|e| RingError::Parse(format!("{t:?}: {e}")))?;
    Ok(parsed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces() {
        let r = rat(6, -4);
        assert_eq!(rational_to_string(&r), "-3/2");
        assert_eq!(rational_to_string(&rat(4, 2)), "2");
    }

    #[test]
    fn round_trip() {
        for s in ["0", "-7", "319/6", "-844871/8"] {
            assert_eq!(rational_to_string(&parse_rational(s).unwrap()), s);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }
}
