//! The dihedral group `D_2n = <a, b | a^n = b^2 = 1, bab = a^-1>`.
//!
//! Elements are kept in the normal form `a^k` or `b*a^k` with `0 <= k < n`.
//! Products follow left-to-right word concatenation, so `x.then(y)` is the
//! word `x` followed by the word `y`:
//!
//! ```text
//! a^i   * a^j   = a^(i+j)
//! a^i   * b*a^j = b*a^(j-i)
//! b*a^i * a^j   = b*a^(i+j)
//! b*a^i * b*a^j = a^(j-i)
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::number_theory::{gcd, mod_inverse, ModInt};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DihedralElement {
    reflected: bool,
    exponent: u64,
}

impl DihedralElement {
    pub const IDENTITY: Self = Self {
        reflected: false,
        exponent: 0,
    };

    pub fn rotation(exponent: i64, n: u64) -> Self {
        Self {
            reflected: false,
            exponent: exponent.rem_euclid(n as i64) as u64,
        }
    }

    pub fn reflection(exponent: i64, n: u64) -> Self {
        Self {
            reflected: true,
            exponent: exponent.rem_euclid(n as i64) as u64,
        }
    }

    pub fn is_reflection(self) -> bool {
        self.reflected
    }

    pub fn exponent(self) -> u64 {
        self.exponent
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }

    /// Position in the fixed vertex order `a^0..a^(n-1), b*a^0..b*a^(n-1)`.
    pub fn index(self, n: u64) -> usize {
        (self.exponent + if self.reflected { n } else { 0 }) as usize
    }

    pub fn from_index(index: usize, n: u64) -> Self {
        let index = index as u64;
        Self {
            reflected: index >= n,
            exponent: index % n,
        }
    }

    /// Parses `e`, `a`, `a^k`, `b`, `b*a`, `b*a^k` (also `ba^k`), reducing `k` mod `n`.
    pub fn parse(text: &str, n: u64) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("unrecognised element {text:?}"));
        if compact == "e" || compact == "1" {
            return Ok(Self::IDENTITY);
        }
        let (reflected, rest) = if let Some(rest) = compact.strip_prefix('b') {
            (true, rest.strip_prefix('*').unwrap_or(rest))
        } else {
            (false, compact.as_str())
        };
        let exponent = if rest.is_empty() {
            if !reflected {
                return Err(bad());
            }
            0
        } else {
            let power = rest.strip_prefix('a').ok_or_else(bad)?;
            if power.is_empty() {
                1
            } else {
                let digits = power.strip_prefix('^').ok_or_else(bad)?;
                let digits = digits
                    .strip_prefix('(')
                    .and_then(|d| d.strip_suffix(')'))
                    .unwrap_or(digits);
                digits.parse::<i64>().map_err(|_| bad())?
            }
        };
        Ok(if reflected {
            Self::reflection(exponent, n)
        } else {
            Self::rotation(exponent, n)
        })
    }

    fn check(self, n: u64) -> Result<()> {
        if self.exponent < n {
            Ok(())
        } else {
            Err(Error::MismatchedModulus(n))
        }
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.reflected, self.exponent) {
            (false, 0) => f.write_str("e"),
            (false, k) => write!(f, "a^{k}"),
            (true, 0) => f.write_str("b"),
            (true, k) => write!(f, "b*a^{k}"),
        }
    }
}

/// Product without range checks; both exponents must already be below `n`.
#[inline]
pub(crate) fn product(x: DihedralElement, y: DihedralElement, n: u64) -> DihedralElement {
    let exponent = if y.reflected {
        (y.exponent + n - x.exponent) % n
    } else {
        (x.exponent + y.exponent) % n
    };
    DihedralElement {
        reflected: x.reflected != y.reflected,
        exponent,
    }
}

#[inline]
pub(crate) fn inverse_of(x: DihedralElement, n: u64) -> DihedralElement {
    if x.reflected {
        x
    } else {
        DihedralElement {
            reflected: false,
            exponent: (n - x.exponent) % n,
        }
    }
}

pub fn multiply(x: DihedralElement, y: DihedralElement, n: u64) -> Result<DihedralElement> {
    x.check(n)?;
    y.check(n)?;
    Ok(product(x, y, n))
}

pub fn inverse(x: DihedralElement, n: u64) -> Result<DihedralElement> {
    x.check(n)?;
    Ok(inverse_of(x, n))
}

/// All `2n` elements in vertex order.
pub fn elements(n: u64) -> impl Iterator<Item = DihedralElement> {
    (0..2 * n as usize).map(move |i| DihedralElement::from_index(i, n))
}

/// The automorphism `a^i -> a^(lambda*i)`, `b*a^j -> b*a^(lambda*j + k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DihedralAutomorphism {
    lambda: u64,
    k: u64,
    n: u64,
}

impl DihedralAutomorphism {
    pub fn new(lambda: i64, k: i64, n: u64) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidOrder(n));
        }
        let lambda = ModInt::new(lambda, n)?;
        if gcd(lambda.value(), n) != 1 {
            return Err(Error::NotInvertible {
                value: lambda.value(),
                modulus: n,
            });
        }
        Ok(Self {
            lambda: lambda.value(),
            k: k.rem_euclid(n as i64) as u64,
            n,
        })
    }

    pub fn identity(n: u64) -> Result<Self> {
        Self::new(1, 0, n)
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn apply(&self, x: DihedralElement) -> Result<DihedralElement> {
        x.check(self.n)?;
        Ok(self.apply_unchecked(x))
    }

    #[inline]
    pub(crate) fn apply_unchecked(&self, x: DihedralElement) -> DihedralElement {
        let scaled = (self.lambda as u128 * x.exponent as u128 % self.n as u128) as u64;
        DihedralElement {
            reflected: x.reflected,
            exponent: if x.reflected {
                (scaled + self.k) % self.n
            } else {
                scaled
            },
        }
    }

    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if self.n != inner.n {
            return Err(Error::MismatchedModulus(self.n));
        }
        let n = self.n as i64;
        // self(inner(b*a^j)) = b*a^(l1*(l2*j + k2) + k1)
        let lambda = (self.lambda as i64 * inner.lambda as i64) % n;
        let k = (self.lambda as i64 * inner.k as i64 + self.k as i64) % n;
        Self::new(lambda, k, self.n)
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv = mod_inverse(ModInt::new(self.lambda as i64, self.n)?)?.value() as i64;
        Self::new(inv, -inv * self.k as i64, self.n)
    }
}

impl fmt::Display for DihedralAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "sigma[lambda={}, k={}] on D_{}",
            self.lambda,
            self.k,
            2 * self.n
        )
    }
}

/// Every automorphism of `D_2n`, `phi(n) * n` of them, ordered by `(lambda, k)`.
pub fn enumerate_automorphisms(n: u64) -> Result<Vec<DihedralAutomorphism>> {
    if n < 3 {
        return Err(Error::InvalidOrder(n));
    }
    Ok((1..n)
        .filter(|&l| gcd(l, n) == 1)
        .flat_map(|lambda| (0..n).map(move |k| DihedralAutomorphism { lambda, k, n }))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rot(k: i64, n: u64) -> DihedralElement {
        DihedralElement::rotation(k, n)
    }

    fn refl(k: i64, n: u64) -> DihedralElement {
        DihedralElement::reflection(k, n)
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(multiply(refl(2, 7), refl(5, 7), 7).unwrap(), rot(3, 7));
        assert_eq!(multiply(rot(3, 7), rot(5, 7), 7).unwrap(), rot(1, 7));
        assert_eq!(
            multiply(refl(0, 7), refl(0, 7), 7).unwrap(),
            DihedralElement::IDENTITY
        );
        assert_eq!(
            multiply(refl(9, 7), rot(0, 7), 7),
            Ok(refl(2, 7)),
            "reflection exponent is reduced at construction"
        );
        let stale = DihedralElement::from_index(20, 11);
        assert_eq!(
            multiply(stale, rot(1, 5), 5),
            Err(Error::MismatchedModulus(5))
        );
    }

    #[test]
    fn inverse_examples() {
        for k in 0..7 {
            assert_eq!(inverse(refl(k, 7), 7).unwrap(), refl(k, 7));
        }
        assert_eq!(inverse(rot(3, 7), 7).unwrap(), rot(4, 7));
        assert_eq!(
            inverse(DihedralElement::IDENTITY, 7).unwrap(),
            DihedralElement::IDENTITY
        );
    }

    #[test]
    fn automorphism_examples() {
        let s = DihedralAutomorphism::new(2, 1, 5).unwrap();
        assert_eq!(s.apply(refl(2, 5)).unwrap(), refl(0, 5));
        assert_eq!(s.apply(rot(2, 5)).unwrap(), rot(4, 5));
        let id = DihedralAutomorphism::identity(9).unwrap();
        for x in elements(9) {
            assert_eq!(id.apply(x).unwrap(), x);
        }
        assert!(DihedralAutomorphism::new(2, 0, 6).is_err());
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(enumerate_automorphisms(5).unwrap().len(), 20);
        assert_eq!(enumerate_automorphisms(3).unwrap().len(), 6);
        assert_eq!(enumerate_automorphisms(7).unwrap().len(), 42);
        assert_eq!(enumerate_automorphisms(2), Err(Error::InvalidOrder(2)));
    }

    #[test]
    fn compose_and_invert() {
        let n = 10;
        let auts = enumerate_automorphisms(n).unwrap();
        for f in &auts {
            let inv = f.inverse().unwrap();
            for g in auts.iter().step_by(7) {
                let fg = f.compose(g).unwrap();
                for x in elements(n) {
                    assert_eq!(fg.apply(x).unwrap(), f.apply(g.apply(x).unwrap()).unwrap());
                }
            }
            for x in elements(n) {
                assert_eq!(inv.apply(f.apply(x).unwrap()).unwrap(), x);
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let n = 7;
        assert_eq!(
            DihedralElement::parse("e", n).unwrap(),
            DihedralElement::IDENTITY
        );
        assert_eq!(DihedralElement::parse("a", n).unwrap(), rot(1, n));
        assert_eq!(DihedralElement::parse("a^-1", n).unwrap(), rot(6, n));
        assert_eq!(DihedralElement::parse("b", n).unwrap(), refl(0, n));
        assert_eq!(
            DihedralElement::parse(" b * a ^ 3 ", n).unwrap(),
            refl(3, n)
        );
        assert_eq!(DihedralElement::parse("ba^10", n).unwrap(), refl(3, n));
        assert!(DihedralElement::parse("c", n).is_err());
        assert!(DihedralElement::parse("a^", n).is_err());
        for x in elements(n) {
            assert_eq!(DihedralElement::parse(&x.to_string(), n).unwrap(), x);
        }
        assert_eq!(refl(0, n).to_string(), "b");
        assert_eq!(refl(4, n).to_string(), "b*a^4");
        assert_eq!(rot(1, n).to_string(), "a^1");
    }
}
