//! Exact rational values for threshold margins and indicator weights.
//!
//! All reported fractions are kept in lowest terms with a positive
//! denominator, so equality is plain field equality and the JSON encoding
//! (`{"num": ..., "den": ...}`) is canonical. No floating point is involved
//! anywhere boundary slacks are computed or compared.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Frac {
    num: i64,
    den: i64,
}

impl Frac {
    /// Builds `num/den` reduced to lowest terms with `den > 0`.
    ///
    /// # Panics
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "fraction denominator must be nonzero");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        if num == 0 {
            return Frac { num: 0, den: 1 };
        }
        let g = num.abs().gcd(&den);
        Frac {
            num: num / g,
            den: den / g,
        }
    }

    pub fn from_int(value: i64) -> Self {
        Frac { num: value, den: 1 }
    }

    pub fn zero() -> Self {
        Frac { num: 0, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    pub fn is_positive(&self) -> bool {
        self.num > 0
    }

    pub fn is_non_negative(&self) -> bool {
        self.num >= 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(out, "{}", self.num)
        } else {
            write!(out, "{}/{}", self.num, self.den)
        }
    }
}

impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Frac {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl<'de> Deserialize<'de> for Frac {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Frac, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: i64,
            den: i64,
        }
        let raw = Raw::deserialize(de)?;
        if raw.den == 0 {
            return Err(serde::de::Error::custom("fraction denominator is zero"));
        }
        Ok(Frac::new(raw.num, raw.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms_with_positive_denominator() {
        assert_eq!(Frac::new(4, 6), Frac::new(2, 3));
        assert_eq!(Frac::new(-4, 6), Frac::new(2, -3));
        assert_eq!(Frac::new(0, 7), Frac::zero());
        assert_eq!(Frac::new(21, -3), Frac::from_int(-7));
    }

    #[test]
    fn ordering_uses_cross_multiplication() {
        assert!(Frac::new(-1, 5) < Frac::zero());
        assert!(Frac::new(1, 3) < Frac::new(2, 5));
        assert!(Frac::new(7, 1) > Frac::new(20, 3));
    }

    #[test]
    fn json_shape_is_num_over_den() {
        let text = serde_json::to_string(&Frac::new(-2, 10)).unwrap();
        assert_eq!(text, r#"{"num":-1,"den":5}"#);
        let back: Frac = serde_json::from_str(&text).unwrap();
        assert_eq!(back, Frac::new(-1, 5));
    }

    #[test]
    fn display_omits_unit_denominator() {
        assert_eq!(Frac::new(6, 3).to_string(), "2");
        assert_eq!(Frac::new(-1, 5).to_string(), "-1/5");
    }
}
