//! Spectra of Cayley graphs on `D_2n` from the character table, exact
//! characteristic polynomials, and cospectrality tests.

pub mod charpoly;
pub mod jacobi;

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cayley::{build_graph, ConnectionSet, CubicType};
use crate::dihedral::{product, DihedralElement};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::number_theory::require_odd_prime;

pub use charpoly::{char_poly, char_poly_matrix, SpectrumFingerprint};
pub use jacobi::symmetric_eigenvalues;

/// `2cos(2*pi*m/n)` with `m` reduced first so large products stay accurate.
pub fn two_cos(m: i64, n: u64) -> f64 {
    let m = m.rem_euclid(n as i64) as f64;
    2.0 * (2.0 * PI * m / n as f64).cos()
}

fn angle(m: u64, n: u64) -> f64 {
    2.0 * PI * (m % n) as f64 / n as f64
}

fn sign_of_parity(e: u64) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Irreducible characters of `D_2n`: `psi_1, psi_2` (and `psi_3, psi_4` for
/// even `n`) followed by the degree-2 characters `chi_h`,
/// `1 <= h <= (n-1)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CharacterTable {
    n: u64,
}

impl CharacterTable {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn linear_count(&self) -> usize {
        if self.n.is_multiple_of(2) {
            4
        } else {
            2
        }
    }

    pub fn two_dim_count(&self) -> usize {
        ((self.n - 1) / 2) as usize
    }

    /// `psi_(index+1)(x)`.
    pub fn linear(&self, index: usize, x: DihedralElement) -> i64 {
        let k = x.exponent();
        let r = x.is_reflection();
        match index {
            0 => 1,
            1 => {
                if r {
                    -1
                } else {
                    1
                }
            }
            2 => sign_of_parity(k),
            3 => {
                if r {
                    -sign_of_parity(k)
                } else {
                    sign_of_parity(k)
                }
            }
            _ => panic!("linear character index {index} out of range"),
        }
    }

    /// `chi_h(x)` for `1 <= h <= (n-1)/2`.
    pub fn two_dim(&self, h: u64, x: DihedralElement) -> f64 {
        assert!(
            h >= 1 && h as usize <= self.two_dim_count(),
            "h out of range"
        );
        if x.is_reflection() {
            0.0
        } else {
            two_cos((h * x.exponent()) as i64, self.n)
        }
    }

    /// All characters evaluated at `x`, linear first.
    pub fn column(&self, x: DihedralElement) -> Vec<f64> {
        (0..self.linear_count())
            .map(|i| self.linear(i, x) as f64)
            .chain((1..=self.two_dim_count() as u64).map(|h| self.two_dim(h, x)))
            .collect()
    }

    pub fn degrees(&self) -> Vec<u64> {
        std::iter::repeat_n(1, self.linear_count())
            .chain(std::iter::repeat_n(2, self.two_dim_count()))
            .collect()
    }
}

pub fn character_table(n: u64) -> Result<CharacterTable> {
    if n < 3 {
        return Err(Error::InvalidOrder(n));
    }
    Ok(CharacterTable { n })
}

/// Eigenvalues `sum_{k in R} cos(2*pi*h*k/n)` of the circulant
/// with residue multiset `R`, listed for `h = 1..=n`. Symmetric multisets
/// make the exponential sum real.
pub fn circulant_spectrum(n: u64, residues: &[i64]) -> Result<Vec<f64>> {
    if n < 1 {
        return Err(Error::InvalidOrder(n));
    }
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for &r in residues {
        *counts.entry(r.rem_euclid(n as i64) as u64).or_default() += 1;
    }
    if counts.contains_key(&0) {
        return Err(Error::ContainsZero);
    }
    for (&r, &c) in &counts {
        if counts.get(&((n - r) % n)) != Some(&c) {
            return Err(Error::NotSymmetric(r.to_string()));
        }
    }
    Ok((1..=n)
        .map(|h| {
            residues
                .iter()
                .map(|&k| two_cos(h as i64 * k, n) / 2.0)
                .sum()
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NumericEigenvalue {
    pub value: f64,
    pub multiplicity: u32,
}

/// Discriminants below this are treated as rounding noise around zero.
const DISCRIMINANT_SLACK: f64 = 1e-9;

/// Spectrum of `X(D_2n, S)` for any connection set: one eigenvalue per
/// linear character, and for each `chi_h` the pair with sum `e1` and sum of
/// squares `e2`, each of multiplicity 2.
pub fn general_dihedral_spectrum(set: &ConnectionSet) -> Result<Vec<NumericEigenvalue>> {
    let n = set.n();
    let table = character_table(n)?;
    let elements = set.elements();
    let mut spectrum: Vec<NumericEigenvalue> = (0..table.linear_count())
        .map(|i| NumericEigenvalue {
            value: elements.iter().map(|&s| table.linear(i, s)).sum::<i64>() as f64,
            multiplicity: 1,
        })
        .collect();
    for h in 1..=table.two_dim_count() as u64 {
        let e1: f64 = elements.iter().map(|&s| table.two_dim(h, s)).sum();
        let e2: f64 = elements
            .iter()
            .flat_map(|&s1| elements.iter().map(move |&s2| product(s1, s2, n)))
            .map(|x| table.two_dim(h, x))
            .sum();
        let discriminant = 2.0 * e2 - e1 * e1;
        if discriminant < -DISCRIMINANT_SLACK {
            return Err(Error::NegativeDiscriminant(discriminant));
        }
        // sqrt(discriminant) / 2 equals |sum of e^(2 pi i h j / n)| over the
        // reflections b*a^j; summing the phases avoids the cancellation.
        let (re, im) = elements
            .iter()
            .filter(|s| s.is_reflection())
            .map(|s| angle(h * s.exponent(), n))
            .fold((0.0, 0.0), |(re, im), t| (re + t.cos(), im + t.sin()));
        let half_root = re.hypot(im);
        for value in [e1 / 2.0 + half_root, e1 / 2.0 - half_root] {
            spectrum.push(NumericEigenvalue {
                value,
                multiplicity: 2,
            });
        }
    }
    Ok(spectrum)
}

/// Expands multiplicities and sorts ascending.
pub fn expand_sorted(values: impl IntoIterator<Item = (f64, u32)>) -> Vec<f64> {
    let mut out: Vec<f64> = values
        .into_iter()
        .flat_map(|(v, m)| std::iter::repeat_n(v, m as usize))
        .collect();
    out.sort_by(f64::total_cmp);
    out
}

/// One closed-form eigenvalue of a cubic Cayley graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EigenForm {
    Integer(i64),
    /// `2cos(2*pi*h*k/n) + sign`
    CosPm {
        n: u64,
        h: u64,
        k: u64,
        sign: i8,
    },
    /// `sign * sqrt(a_h(S))` for the reflections `b*a^k1, b*a^k2, b*a^k3`
    SqrtAh {
        n: u64,
        h: u64,
        exponents: [u64; 3],
        sign: i8,
    },
    /// `(-1)^h + sign * sqrt(2cos(2*pi*h*(i-j)/n) + 2)`
    ParitySqrt {
        n: u64,
        h: u64,
        i: u64,
        j: u64,
        sign: i8,
    },
}

/// `a_h(S) = 3 + 2[cos(2*pi*h(k1-k2)/n) + cos(2*pi*h(k1-k3)/n) + cos(2*pi*h(k2-k3)/n)]`.
pub fn a_h(n: u64, h: u64, exponents: [u64; 3]) -> f64 {
    let [k1, k2, k3] = exponents.map(|k| k as i64);
    let h = h as i64;
    3.0 + two_cos(h * (k1 - k2), n) + two_cos(h * (k1 - k3), n) + two_cos(h * (k2 - k3), n)
}

impl EigenForm {
    pub fn value(&self) -> f64 {
        match *self {
            EigenForm::Integer(v) => v as f64,
            EigenForm::CosPm { n, h, k, sign } => two_cos((h * k) as i64, n) + sign as f64,
            EigenForm::SqrtAh {
                n,
                h,
                exponents,
                sign,
            } => {
                // a_h(S) = |sum of three roots of unity|^2 >= 0
                sign as f64 * a_h(n, h, exponents).max(0.0).sqrt()
            }
            EigenForm::ParitySqrt { n, h, i, j, sign } => {
                let inner = two_cos(h as i64 * (i as i64 - j as i64), n) + 2.0;
                sign_of_parity(h) as f64 + sign as f64 * inner.max(0.0).sqrt()
            }
        }
    }
}

fn pm(sign: i8) -> &'static str {
    if sign < 0 {
        "-"
    } else {
        "+"
    }
}

impl fmt::Display for EigenForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EigenForm::Integer(v) => write!(f, "{v}"),
            EigenForm::CosPm { n, h, k, sign } => {
                write!(f, "2cos(2pi*{h}*{k}/{n}){}1", pm(sign))
            }
            EigenForm::SqrtAh { h, sign, .. } => write!(f, "{}sqrt(a_{h}(S))", pm(sign)),
            EigenForm::ParitySqrt { n, h, i, j, sign } => {
                write!(f, "(-1)^{h}{}sqrt(2cos(2pi*{h}*({i}-{j})/{n})+2)", pm(sign))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicEigenvalue {
    pub form: EigenForm,
    pub multiplicity: u32,
}

impl SymbolicEigenvalue {
    fn once(v: i64) -> Self {
        Self {
            form: EigenForm::Integer(v),
            multiplicity: 1,
        }
    }

    fn twice(form: EigenForm) -> Self {
        Self {
            form,
            multiplicity: 2,
        }
    }

    pub fn value(&self) -> f64 {
        self.form.value()
    }
}

/// Closed-form spectrum of a cubic Cayley graph on `D_2n`, `2n` values
/// counted with multiplicity.
pub fn cubic_closed_form(set: &ConnectionSet) -> Result<Vec<SymbolicEigenvalue>> {
    let n = set.n();
    let even = n.is_multiple_of(2);
    let half_range = 1..=(n - 1) / 2;
    let mut out = Vec::with_capacity(2 * n as usize);
    match set.require_cubic()? {
        CubicType::TypeI { k, i } => {
            out.extend([SymbolicEigenvalue::once(3), SymbolicEigenvalue::once(1)]);
            if even {
                let (pk, pi) = (sign_of_parity(k), sign_of_parity(i));
                out.extend([
                    SymbolicEigenvalue::once(2 * pk + pi),
                    SymbolicEigenvalue::once(2 * pk - pi),
                ]);
            }
            for h in half_range {
                for sign in [1, -1] {
                    out.push(SymbolicEigenvalue::twice(EigenForm::CosPm {
                        n,
                        h,
                        k,
                        sign,
                    }));
                }
            }
        }
        CubicType::TypeII { k1, k2, k3 } => {
            out.extend([SymbolicEigenvalue::once(3), SymbolicEigenvalue::once(-3)]);
            if even {
                let sum = sign_of_parity(k1) + sign_of_parity(k2) + sign_of_parity(k3);
                out.extend([
                    SymbolicEigenvalue::once(sum),
                    SymbolicEigenvalue::once(-sum),
                ]);
            }
            for h in half_range {
                for sign in [1, -1] {
                    out.push(SymbolicEigenvalue::twice(EigenForm::SqrtAh {
                        n,
                        h,
                        exponents: [k1, k2, k3],
                        sign,
                    }));
                }
            }
        }
        CubicType::TypeIII { i, j } => {
            // psi_3 and psi_4 evaluated on {a^(n/2), b*a^i, b*a^j}
            let (ph, pi, pj) = (sign_of_parity(n / 2), sign_of_parity(i), sign_of_parity(j));
            out.extend([
                SymbolicEigenvalue::once(3),
                SymbolicEigenvalue::once(-1),
                SymbolicEigenvalue::once(ph + pi + pj),
                SymbolicEigenvalue::once(ph - pi - pj),
            ]);
            for h in half_range {
                for sign in [1, -1] {
                    out.push(SymbolicEigenvalue::twice(EigenForm::ParitySqrt {
                        n,
                        h,
                        i,
                        j,
                        sign,
                    }));
                }
            }
        }
    }
    Ok(out)
}

/// Sorted numeric values of a symbolic spectrum, multiplicities expanded.
pub fn evaluate_sorted(spectrum: &[SymbolicEigenvalue]) -> Vec<f64> {
    expand_sorted(spectrum.iter().map(|e| (e.value(), e.multiplicity)))
}

/// Adjacency eigenvalues by Jacobi rotation, ascending.
pub fn eigenvalues(graph: &Graph) -> Vec<f64> {
    symmetric_eigenvalues(&graph.adjacency_f64(), graph.order())
}

pub fn fingerprint(set: &ConnectionSet) -> SpectrumFingerprint {
    char_poly(build_graph(set).graph())
}

/// Exact cospectrality of two Cayley graphs on the same `D_2n`.
pub fn cospectral(s: &ConnectionSet, t: &ConnectionSet) -> Result<bool> {
    if s.n() != t.n() {
        return Err(Error::MismatchedOrder(s.n(), t.n()));
    }
    if s == t {
        return Ok(true);
    }
    Ok(fingerprint(s) == fingerprint(t))
}

fn sorted_scaled(values: &[i64], factor: u64, p: u64) -> Vec<u64> {
    let mut out: Vec<u64> = values
        .iter()
        .map(|&v| (v.rem_euclid(p as i64) as u64 * factor) % p)
        .collect();
    out.sort_unstable();
    out
}

/// Smallest `k` in `Z_p^*` with `S = k*T` as multisets.
pub fn circulant_scale_equivalent(s: &[i64], t: &[i64], p: u64) -> Result<Option<u64>> {
    require_odd_prime(p)?;
    if s.len() != t.len() {
        return Ok(None);
    }
    let target = sorted_scaled(s, 1, p);
    Ok((1..p).find(|&k| sorted_scaled(t, k, p) == target))
}

/// `{+-(x1-x2), +-(x1-x3), +-(x2-x3)}` as a multiset of integers.
fn signed_differences(x: [u64; 3]) -> Vec<i64> {
    let [a, b, c] = x.map(|v| v as i64);
    let d = [a - b, a - c, b - c];
    d.iter().flat_map(|&v| [v, -v]).collect()
}

/// Smallest `lambda` in `Z_p^*` with `D(S) = lambda * D(T)`, where `D` is the
/// multiset of signed pairwise exponent differences.
pub fn type2_cospectral_criterion(s: [u64; 3], t: [u64; 3], p: u64) -> Result<Option<u64>> {
    circulant_scale_equivalent(&signed_differences(s), &signed_differences(t), p)
}
