//! Exact rational values and their display forms. All optimization runs on
//! `BigRational`; base-2 logarithms exist only at the reporting layer.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(k: usize) -> Rational {
    BigRational::from_integer(BigInt::from(k))
}

/// Canonical `"p/q"` form (reduced, `q >= 1`), e.g. `"5/2"`, `"3/1"`, `"0/1"`.
pub fn format_ratio(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_ratio(text: &str) -> Result<Rational> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|e| Error::Parse(format!("bad rational {text:?}: {e}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|e| Error::Parse(format!("bad rational {text:?}: {e}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("bad rational {text:?}: zero denominator")));
    }
    Ok(BigRational::new(num, den))
}

/// Display-only logarithm of a positive rational.
pub fn log2_ratio(r: &Rational) -> f64 {
    debug_assert!(r.is_positive());
    let (n, d) = (r.numer(), r.denom());
    bigint_log2(n) - bigint_log2(d)
}

fn bigint_log2(x: &BigInt) -> f64 {
    // f64 conversion saturates far beyond any value this crate produces,
    // but route through bit length to stay safe for huge certificates.
    let bits = x.bits();
    if bits <= 52 {
        return (x.to_f64()).unwrap_or(f64::NAN).log2();
    }
    let shift = bits - 52;
    let top = (x >> shift).to_f64().unwrap_or(f64::NAN);
    top.log2() + shift as f64
}

pub fn ratio_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// A value of the form `base^(1/root)` with `base` a positive rational.
/// Bound sandwiches compare these exactly by cross-powering, e.g. the t-th
/// root of a power-graph parameter against a cited square-root constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootRational {
    pub base: Rational,
    pub root: u32,
}

impl RootRational {
    pub fn new(base: Rational, root: u32) -> Self {
        debug_assert!(root >= 1 && base.is_positive());
        RootRational { base, root }
    }

    pub fn integer(k: usize) -> Self {
        RootRational::new(rat_int(k), 1)
    }

    pub fn of(r: Rational) -> Self {
        RootRational::new(r, 1)
    }

    pub fn log2(&self) -> f64 {
        log2_ratio(&self.base) / self.root as f64
    }

    /// Exact comparison: `a^(1/r) <=> b^(1/s)` iff `a^s <=> b^r`.
    pub fn cmp_exact(&self, other: &RootRational) -> std::cmp::Ordering {
        let lhs = pow_ratio(&self.base, other.root);
        let rhs = pow_ratio(&other.base, self.root);
        lhs.cmp(&rhs)
    }

    pub fn format(&self) -> String {
        if self.root == 1 {
            format_ratio(&self.base)
        } else {
            format!("({})^(1/{})", format_ratio(&self.base), self.root)
        }
    }
}

pub fn pow_ratio(r: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= r;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_parse_round_trip() {
        let r = rat(-10, 4);
        assert_eq!(format_ratio(&r), "-5/2");
        assert_eq!(parse_ratio("-5/2").unwrap(), r);
        assert_eq!(parse_ratio("7").unwrap(), rat(7, 1));
        assert!(parse_ratio("1/0").is_err());
        assert_eq!(format_ratio(&Rational::zero()), "0/1");
    }

    #[test]
    fn log2_values() {
        assert!((log2_ratio(&rat(3, 2)) - 1.5f64.log2()).abs() < 1e-12);
        assert_eq!(log2_ratio(&rat(8, 1)), 3.0);
    }

    #[test]
    fn root_comparisons() {
        // 6^(1/2) < 5/2 < 2^(1/1) is false; check the true chain sqrt5 < sqrt6 < 5/2
        let sqrt5 = RootRational::new(rat(5, 1), 2);
        let sqrt6 = RootRational::new(rat(6, 1), 2);
        let five_halves = RootRational::of(rat(5, 2));
        assert_eq!(sqrt5.cmp_exact(&sqrt6), std::cmp::Ordering::Less);
        assert_eq!(sqrt6.cmp_exact(&five_halves), std::cmp::Ordering::Less);
        assert_eq!(
            RootRational::new(rat(9, 4), 2).cmp_exact(&RootRational::of(rat(3, 2))),
            std::cmp::Ordering::Equal
        );
    }
}
