use std::fmt;
use std::str::FromStr;

use num::{BigRational, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::lgroup::LexElem;
use crate::{Error, Result};

/// An element of the Chang algebra in `nc` / `1 − nc` notation (`n ≥ 0`).
/// `0 = 0c` and `1 = 1 − 0c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChangElem {
    /// `nc`, an infinitesimal (or 0).
    Multiple(i64),
    /// `1 − nc`, a co-infinitesimal (or 1).
    CoMultiple(i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChangOp {
    Oplus,
    Neg,
}

impl ChangElem {
    fn coefficient(self) -> i64 {
        match self {
            ChangElem::Multiple(n) | ChangElem::CoMultiple(n) => n,
        }
    }

    pub fn validate(self) -> Result<Self> {
        if self.coefficient() < 0 {
            return Err(Error::Invalid(format!("coefficient of {self:?} must be nonnegative")));
        }
        Ok(self)
    }

    /// `nc ↦ (0, n)` and `1 − nc ↦ (1, −n)` in `ℤ lex ℤ`.
    pub fn to_lex(self) -> LexElem {
        match self {
            ChangElem::Multiple(n) => LexElem::from_ints(&[0, n]),
            ChangElem::CoMultiple(n) => LexElem::from_ints(&[1, -n]),
        }
    }

    pub fn from_lex(x: &LexElem) -> Option<Self> {
        if x.rank() != 2 || !x.coord(0).is_integer() || !x.coord(1).is_integer() {
            return None;
        }
        let z = x.coord(1).to_integer().to_i64()?;
        if x.coord(0).is_zero() && !x.coord(1).is_negative() {
            Some(ChangElem::Multiple(z))
        } else if x.coord(0) == &BigRational::one() && !x.coord(1).is_positive() {
            Some(ChangElem::CoMultiple(-z))
        } else {
            None
        }
    }
}

impl fmt::Display for ChangElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ChangElem::Multiple(0) => f.write_str("0"),
            ChangElem::CoMultiple(0) => f.write_str("1"),
            ChangElem::Multiple(n) => write!(f, "{n}c"),
            ChangElem::CoMultiple(n) => write!(f, "1-{n}c"),
        }
    }
}

impl FromStr for ChangElem {
    type Err = Error;

    /// `0`, `1`, `nc`, `c`, `1-nc`, `1-c` (the Unicode minus is accepted).
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().replace('−', "-");
        let bad = || Error::Invalid(format!("cannot parse {s:?} as a Chang element"));
        let coeff = |body: &str| -> Result<i64> {
            let digits = body.strip_suffix('c').ok_or_else(bad)?;
            if digits.is_empty() {
                Ok(1)
            } else {
                digits.parse::<i64>().map_err(|_| bad())
            }
        };
        let e = match t.as_str() {
            "0" => ChangElem::Multiple(0),
            "1" => ChangElem::CoMultiple(0),
            _ => match t.strip_prefix("1-") {
                Some(rest) => ChangElem::CoMultiple(coeff(rest)?),
                None => ChangElem::Multiple(coeff(&t)?),
            },
        };
        e.validate()
    }
}

/// The Chang algebra by its case table:
///
/// * `nc ⊕ mc = (n + m)c`
/// * `(1 − nc) ⊕ mc = 1 − (n − m)c` if `m < n`, else `1`
/// * `nc ⊕ (1 − mc) = 1 − (m − n)c` if `n < m`, else `1`
/// * `(1 − nc) ⊕ (1 − mc) = 1`
/// * `¬(nc) = 1 − nc`, `¬(1 − nc) = nc`
///
/// `y` is ignored for negation.
pub fn chang_op(op: ChangOp, x: ChangElem, y: ChangElem) -> Result<ChangElem> {
    use ChangElem::*;
    let x = x.validate()?;
    let y = y.validate()?;
    Ok(match op {
        ChangOp::Neg => match x {
            Multiple(n) => CoMultiple(n),
            CoMultiple(n) => Multiple(n),
        },
        ChangOp::Oplus => match (x, y) {
            (Multiple(n), Multiple(m)) => Multiple(n.checked_add(m).ok_or_else(|| Error::Invalid("coefficient overflow".into()))?),
            (CoMultiple(n), Multiple(m)) | (Multiple(m), CoMultiple(n)) => {
                if m < n {
                    CoMultiple(n - m)
                } else {
                    CoMultiple(0)
                }
            }
            (CoMultiple(_), CoMultiple(_)) => CoMultiple(0),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functors::chang;
    use crate::mv::MvOps;

    fn c(s: &str) -> ChangElem {
        s.parse().unwrap()
    }

    #[test]
    fn table_values() {
        assert_eq!(chang_op(ChangOp::Oplus, c("2c"), c("3c")).unwrap(), c("5c"));
        assert_eq!(chang_op(ChangOp::Oplus, c("1-3c"), c("2c")).unwrap(), c("1-c"));
        assert_eq!(chang_op(ChangOp::Oplus, c("2c"), c("1-2c")).unwrap(), c("1"));
        let x = c("5c");
        let nx = chang_op(ChangOp::Neg, x, x).unwrap();
        assert_eq!(nx, c("1-5c"));
        assert_eq!(chang_op(ChangOp::Oplus, x, nx).unwrap(), c("1"));
    }

    #[test]
    fn malformed() {
        assert!(chang_op(ChangOp::Oplus, ChangElem::Multiple(-1), c("0")).is_err());
        assert!("2d".parse::<ChangElem>().is_err());
        assert!("1-".parse::<ChangElem>().is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in ["0", "1", "c", "7c", "1-c", "1-4c"] {
            let e = c(s);
            assert_eq!(e.to_string().parse::<ChangElem>().unwrap(), e);
        }
        assert_eq!(c("c").to_string(), "1c");
    }

    #[test]
    fn lex_encoding_round_trip() {
        let alg = chang();
        for e in [c("0"), c("1"), c("3c"), c("1-3c")] {
            let x = alg.element(e.to_lex()).unwrap();
            assert_eq!(ChangElem::from_lex(&x), Some(e));
        }
        assert_eq!(alg.display(&alg.neg(&c("2c").to_lex())), "1-2c");
    }
}
