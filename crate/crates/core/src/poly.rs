//! Laurent polynomials in `q` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// Builds `sum coeff q^exp` from `(exp, coeff)` pairs.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (exp, c) in terms {
            p.add_term(exp, c);
        }
        p
    }

    /// `q + q^-1`.
    pub fn quantum_two() -> Self {
        Self::from_terms([(1, 1), (-1, 1)])
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = self.terms.entry(exp).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplies by `q^d`.
    pub fn shift(&self, d: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e + d, c)).collect() }
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (exp, c)) in self.terms().enumerate() {
            if c < 0 {
                write!(f, "-")?;
            } else if n > 0 {
                write!(f, "+")?;
            }
            let mag = c.abs();
            let var = match exp {
                0 => String::new(),
                1 => "q".to_string(),
                e if e < 0 => format!("q^{{{e}}}"),
                e => format!("q^{e}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}{var}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = LaurentPoly::quantum_two();
        let sq = p.pow(2);
        assert_eq!(sq, LaurentPoly::from_terms([(-2, 1), (0, 2), (2, 1)]));
        assert_eq!(sq.at_one(), 4);
        assert!((&p + &LaurentPoly::from_terms([(1, -1), (-1, -1)])).is_zero());
    }

    #[test]
    fn printing() {
        assert_eq!(LaurentPoly::from_terms([(0, 1), (2, 2), (4, 2), (6, 1)]).to_string(), "1+2q^2+2q^4+q^6");
        assert_eq!(LaurentPoly::from_terms([(-2, 1), (1, -3)]).to_string(), "q^{-2}-3q");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
