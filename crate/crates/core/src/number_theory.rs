//! Arithmetic in `Z_n`, Legendre symbols and the class-count formulas for
//! type-II cubic Cayley graphs on `D_2p`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Element of `Z_n`, always reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModInt {
    value: u64,
    modulus: u64,
}

// Arithmetic is fallible across moduli, so these cannot be the std operator traits.
#[allow(clippy::should_implement_trait)]
impl ModInt {
    /// Reduces `value` modulo `modulus`. Negative values wrap around.
    pub fn new(value: i64, modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::MismatchedModulus(modulus));
        }
        Ok(Self {
            value: value.rem_euclid(modulus as i64) as u64,
            modulus,
        })
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    fn same_ring(self, other: Self) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::MismatchedModulus(self.modulus))
        }
    }

    pub fn add(self, other: Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(Self {
            value: (self.value + other.value) % self.modulus,
            modulus: self.modulus,
        })
    }

    pub fn sub(self, other: Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(Self {
            value: (self.value + self.modulus - other.value) % self.modulus,
            modulus: self.modulus,
        })
    }

    pub fn mul(self, other: Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(Self {
            value: mul_mod(self.value, other.value, self.modulus),
            modulus: self.modulus,
        })
    }

    pub fn neg(self) -> Self {
        Self {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for ModInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut result = 1 % m;
    let mut base = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    result
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Euler's totient by trial factorisation.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            while m.is_multiple_of(d) {
                m /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Trial division; only small primes are ever used here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn is_odd_prime(n: u64) -> bool {
    n != 2 && is_prime(n)
}

pub(crate) fn require_odd_prime(p: u64) -> Result<()> {
    if is_odd_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidModulus(p))
    }
}

/// Inverse via the extended Euclidean algorithm, so composite moduli work too.
pub fn mod_inverse(x: ModInt) -> Result<ModInt> {
    let n = x.modulus as i128;
    let (mut old_r, mut r) = (x.value as i128, n);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return Err(Error::NotInvertible {
            value: x.value,
            modulus: x.modulus,
        });
    }
    Ok(ModInt {
        value: old_s.rem_euclid(n) as u64,
        modulus: x.modulus,
    })
}

/// gcd of `values` together with `n`. Signs are ignored; an empty list gives `n`.
pub fn gcd_many(values: &[i64], n: u64) -> u64 {
    values.iter().fold(n, |acc, &v| gcd(acc, v.unsigned_abs()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LegendreValue {
    MinusOne,
    Zero,
    PlusOne,
}

impl LegendreValue {
    pub fn as_i8(self) -> i8 {
        match self {
            LegendreValue::MinusOne => -1,
            LegendreValue::Zero => 0,
            LegendreValue::PlusOne => 1,
        }
    }
}

/// Legendre symbol `(a/p)` by Euler's criterion `a^((p-1)/2) mod p`.
pub fn legendre(a: i64, p: u64) -> Result<LegendreValue> {
    require_odd_prime(p)?;
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return Ok(LegendreValue::Zero);
    }
    Ok(if pow_mod(a, (p - 1) / 2, p) == 1 {
        LegendreValue::PlusOne
    } else {
        LegendreValue::MinusOne
    })
}

const EXHAUSTIVE_SQRT_LIMIT: u64 = 1000;

/// Square roots of `a` modulo an odd prime, ascending. Empty when `a` is a
/// non-residue, `[0]` when `p | a`.
pub fn sqrt_mod(a: i64, p: u64) -> Result<Vec<ModInt>> {
    let root = match legendre(a, p)? {
        LegendreValue::Zero => {
            return Ok(vec![ModInt {
                value: 0,
                modulus: p,
            }])
        }
        LegendreValue::MinusOne => return Ok(Vec::new()),
        LegendreValue::PlusOne => {
            let a = a.rem_euclid(p as i64) as u64;
            if p < EXHAUSTIVE_SQRT_LIMIT {
                (1..p)
                    .find(|&x| mul_mod(x, x, p) == a)
                    .expect("residue has a root")
            } else {
                tonelli_shanks(a, p)
            }
        }
    };
    let mut roots = [root, p - root];
    roots.sort_unstable();
    Ok(roots
        .iter()
        .map(|&value| ModInt { value, modulus: p })
        .collect())
}

/// Caller guarantees `a` is a nonzero quadratic residue modulo the odd prime `p`.
fn tonelli_shanks(a: u64, p: u64) -> u64 {
    let mut q = p - 1;
    let mut s = 0;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    if s == 1 {
        return pow_mod(a, (p + 1) / 4, p);
    }
    let z = (2..p)
        .find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)
        .expect("odd prime has a non-residue");
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    r
}

/// Roots of `s^2 - s + 1` in `Z_p` for `p >= 5`, found through `(2s - 1)^2 = -3`.
/// Present exactly when `p = 1 (mod 6)`; the pair is ascending and multiplies to 1.
pub fn roots_s2_minus_s_plus_1(p: u64) -> Result<Option<(ModInt, ModInt)>> {
    require_odd_prime(p)?;
    if p < 5 {
        return Err(Error::InvalidModulus(p));
    }
    let roots = sqrt_mod(-3, p)?;
    let [x0, _] = roots[..] else {
        return Ok(None);
    };
    let half = mod_inverse(ModInt::new(2, p)?)?;
    let one = ModInt::new(1, p)?;
    let s0 = half.mul(one.add(x0)?)?;
    let s1 = half.mul(one.sub(x0)?)?;
    Ok(Some(if s0 <= s1 { (s0, s1) } else { (s1, s0) }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CountBranch {
    #[serde(rename = "p=3")]
    PEqualsThree,
    #[serde(rename = "p=1 mod 6")]
    OneModSix,
    #[serde(rename = "p=5 mod 6")]
    FiveModSix,
}

impl fmt::Display for CountBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountBranch::PEqualsThree => "p = 3",
            CountBranch::OneModSix => "p = 1 (mod 6)",
            CountBranch::FiveModSix => "p = 5 (mod 6)",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub p: u64,
    /// Number of isomorphism classes of type-II cubic Cayley graphs on `D_2p`.
    pub n_tilde: u64,
    /// Number of isomorphism classes of all cubic Cayley graphs on `D_2p`.
    #[serde(rename = "N_tilde")]
    pub big_n_tilde: u64,
    pub branch: CountBranch,
}

pub fn count_classes(p: u64) -> Result<CountReport> {
    require_odd_prime(p)?;
    let (n_tilde, branch) = match p % 6 {
        _ if p == 3 => (1, CountBranch::PEqualsThree),
        1 => ((p - 1) / 6 + 1, CountBranch::OneModSix),
        5 => ((p - 5) / 6 + 1, CountBranch::FiveModSix),
        _ => unreachable!("primes above 3 are 1 or 5 mod 6"),
    };
    Ok(CountReport {
        p,
        n_tilde,
        big_n_tilde: n_tilde + 1,
        branch,
    })
}

/// Both sides of the supplementary laws, quadratic reciprocity and
/// multiplicativity, evaluated with [`legendre`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReciprocityCheck {
    pub minus_one: bool,
    pub two: bool,
    pub reciprocity: bool,
    pub multiplicative: bool,
}

impl ReciprocityCheck {
    pub fn all(&self) -> bool {
        self.minus_one && self.two && self.reciprocity && self.multiplicative
    }
}

fn minus_one_pow(e: u64) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn reciprocity_identities(p: u64, q: u64) -> Result<ReciprocityCheck> {
    require_odd_prime(p)?;
    require_odd_prime(q)?;
    if p == q {
        return Err(Error::InvalidModulus(q));
    }
    let l = |a: i64, m: u64| legendre(a, m).map(|v| v.as_i8() as i64);

    let minus_one = l(-1, p)? == minus_one_pow((p - 1) / 2);
    let two = l(2, p)? == minus_one_pow((p * p - 1) / 8);
    let reciprocity = l(q as i64, p)? == minus_one_pow((p - 1) * (q - 1) / 4) * l(p as i64, q)?;

    let mut multiplicative = true;
    'outer: for m in 0..p as i64 {
        let lm = l(m, p)?;
        for n in 0..p as i64 {
            if l(m * n, p)? != lm * l(n, p)? {
                multiplicative = false;
                break 'outer;
            }
        }
    }
    Ok(ReciprocityCheck {
        minus_one,
        two,
        reciprocity,
        multiplicative,
    })
}
