//! Sparse exact Laurent polynomials over the integers in the variable `v`.
//!
//! Coefficients are checked 64-bit integers; any overflow surfaces as
//! [`Error::CoefficientOverflow`] instead of wrapping.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// An element of `Z[v, v^{-1}]`, stored as exponent -> nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent {
    terms: BTreeMap<i32, i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Laurent::monomial(0, c)
    }

    /// `c * v^k`.
    pub fn monomial(exponent: i32, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(exponent, c);
        }
        Laurent { terms }
    }

    /// `v^k`.
    pub fn v_pow(exponent: i32) -> Self {
        Laurent::monomial(exponent, 1)
    }

    pub fn from_pairs(pairs: &[(i32, i64)]) -> Result<Self> {
        let mut out = Laurent::zero();
        for &(e, c) in pairs {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponent: i32) -> i64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    /// Membership in `v Z[v]`: every exponent is >= 1. Vacuously true for 0.
    pub fn in_v_times_n(&self) -> bool {
        self.terms.keys().all(|&e| e >= 1)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    fn add_term(&mut self, exponent: i32, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(exponent).or_insert(0);
        *entry = entry.checked_add(c).ok_or(Error::CoefficientOverflow)?;
        if *entry == 0 {
            self.terms.remove(&exponent);
        }
        Ok(())
    }

    pub fn add(&self, other: &Laurent) -> Result<Laurent> {
        let mut out = self.clone();
        for (&e, &c) in &other.terms {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Laurent) -> Result<Laurent> {
        self.add(&other.negate())
    }

    pub fn negate(&self) -> Laurent {
        // i64::MIN has no negation, but it can never be stored: reaching it
        // would require an add or mul that already overflowed.
        Laurent {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Laurent) -> Result<Laurent> {
        let mut out = Laurent::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &other.terms {
                let e = e1.checked_add(e2).ok_or(Error::CoefficientOverflow)?;
                let c = c1.checked_mul(c2).ok_or(Error::CoefficientOverflow)?;
                out.add_term(e, c)?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> Result<Laurent> {
        self.mul(&Laurent::constant(c))
    }

    /// The bar involution `v -> v^{-1}`: negates every exponent.
    pub fn bar(&self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// Sorted `(exponent, coefficient)` pairs; the JSON form.
    pub fn to_pairs(&self) -> Vec<(i32, i64)> {
        self.terms.iter().map(|(&e, &c)| (e, c)).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(&e, &c)| serde_json::json!([e, c]))
                .collect(),
        )
    }
}

/// Canonical text form: terms in increasing exponent order, exponent 0 as a
/// bare integer, e.g. `v^-1 + 2 + v^3`.
impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, &c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.unsigned_abs();
            match e {
                0 => write!(f, "{a}")?,
                1 => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    write!(f, "v")?;
                }
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    write!(f, "v^{e}")?;
                }
            }
        }
        Ok(())
    }
}
