use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A non-negative rational activation threshold, kept in lowest terms.
///
/// Thresholds are only ever compared against integer counts of active
/// predecessors, so `count >= label` is decided exactly as
/// `count >= ceil(label)` without leaving integer arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label(Ratio<u64>);

impl Label {
    pub const ZERO: Label = Label(Ratio::new_raw(0, 1));
    pub const ONE: Label = Label(Ratio::new_raw(1, 1));

    pub fn new(numer: u64, denom: u64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::InvalidLabel {
                label: format!("{numer}/{denom}"),
                reason: "zero denominator".into(),
            });
        }
        Ok(Label(Ratio::new(numer, denom)))
    }

    pub fn integer(value: u64) -> Self {
        Label(Ratio::from_integer(value))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Smallest integer count that meets this threshold.
    pub fn threshold(&self) -> u64 {
        Integer::div_ceil(self.0.numer(), self.0.denom())
    }

    /// Whether `count` active predecessors meet the threshold.
    pub fn is_met_by(&self, count: usize) -> bool {
        (count as u64) >= self.threshold()
    }

    /// `max(label - 1, 0)`.
    pub fn decremented(&self) -> Self {
        if self.0 <= Ratio::from_integer(1) {
            Label::ZERO
        } else {
            Label(self.0 - 1)
        }
    }

    /// Compare against an integer without rounding.
    pub fn cmp_integer(&self, value: u64) -> Ordering {
        self.0.cmp(&Ratio::from_integer(value))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl Default for Label {
    fn default() -> Self {
        Label::ONE
    }
}

impl From<u64> for Label {
    fn from(value: u64) -> Self {
        Label::integer(value)
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidLabel {
            label: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        match t.split_once('/') {
            None => t
                .parse::<u64>()
                .map(Label::integer)
                .map_err(|_| bad("expected a non-negative integer or p/q")),
            Some((p, q)) => {
                let p = p.trim().parse::<u64>().map_err(|_| bad("bad numerator"))?;
                let q = q.trim().parse::<u64>().map_err(|_| bad("bad denominator"))?;
                Label::new(p, q).map_err(|_| bad("zero denominator"))
            }
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!("3".parse::<Label>().unwrap(), Label::integer(3));
        let l: Label = "6/4".parse().unwrap();
        assert_eq!((l.numer(), l.denom()), (3, 2));
        assert_eq!(l.to_string(), "3/2");
        assert!("1/0".parse::<Label>().is_err());
        assert!("-1".parse::<Label>().is_err());
        assert!("x".parse::<Label>().is_err());
    }

    #[test]
    fn threshold_is_exact_ceiling() {
        assert_eq!(Label::new(3, 2).unwrap().threshold(), 2);
        assert_eq!(Label::new(4, 2).unwrap().threshold(), 2);
        assert_eq!(Label::new(1, 3).unwrap().threshold(), 1);
        assert_eq!(Label::ZERO.threshold(), 0);
        assert!(Label::new(3, 2).unwrap().is_met_by(2));
        assert!(!Label::new(3, 2).unwrap().is_met_by(1));
    }

    #[test]
    fn decrement_floors_at_zero() {
        assert_eq!(Label::integer(2).decremented(), Label::ONE);
        assert_eq!(Label::ONE.decremented(), Label::ZERO);
        assert_eq!(Label::ZERO.decremented(), Label::ZERO);
        assert_eq!(Label::new(1, 2).unwrap().decremented(), Label::ZERO);
        assert_eq!(Label::new(5, 2).unwrap().decremented(), Label::new(3, 2).unwrap());
    }
}
