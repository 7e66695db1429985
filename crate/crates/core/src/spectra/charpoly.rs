//! Exact characteristic polynomials via Berkowitz's division-free algorithm.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `det(xI - A)` as integer coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpectrumFingerprint {
    coefficients: Vec<BigInt>,
}

impl SpectrumFingerprint {
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coefficients.iter().map(ToString::to_string).collect()
    }

    pub fn from_decimal_strings<S: AsRef<str>>(coefficients: &[S]) -> Result<Self> {
        let coefficients = coefficients
            .iter()
            .map(|c| {
                c.as_ref()
                    .parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("coefficient {:?}: {e}", c.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        if coefficients.last().is_none_or(|c| !c.is_one()) {
            return Err(Error::Parse(
                "characteristic polynomial must be monic".into(),
            ));
        }
        Ok(Self { coefficients })
    }

    /// Horner evaluation in floating point.
    pub fn evaluate(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

/// Characteristic polynomial of a square integer matrix (row-major).
pub fn char_poly_matrix(matrix: &[i64], order: usize) -> SpectrumFingerprint {
    assert_eq!(matrix.len(), order * order, "matrix is not order x order");
    let entry = |i: usize, j: usize| matrix[i * order + j];
    // descending coefficients of the leading principal minor processed so far
    let mut poly: Vec<BigInt> = vec![BigInt::one()];

    for r in 0..order {
        // Toeplitz column: 1, -a_rr, -R C, -R M C, ..., -R M^(r-1) C
        let mut column: Vec<BigInt> = Vec::with_capacity(r + 2);
        column.push(BigInt::one());
        column.push(BigInt::from(-entry(r, r)));
        let mut v: Vec<BigInt> = (0..r).map(|i| BigInt::from(entry(i, r))).collect();
        for step in 0..r {
            let dot: BigInt = (0..r)
                .filter(|&j| entry(r, j) != 0)
                .map(|j| &v[j] * entry(r, j))
                .sum();
            column.push(-dot);
            if step + 1 < r {
                v = (0..r)
                    .map(|i| {
                        (0..r)
                            .filter(|&j| entry(i, j) != 0 && !v[j].is_zero())
                            .map(|j| &v[j] * entry(i, j))
                            .sum()
                    })
                    .collect();
            }
        }
        poly = (0..r + 2)
            .map(|i| (0..=i.min(r)).map(|j| &column[i - j] * &poly[j]).sum())
            .collect();
    }

    poly.reverse();
    SpectrumFingerprint { coefficients: poly }
}

pub fn char_poly(graph: &Graph) -> SpectrumFingerprint {
    let n = graph.order();
    let mut a = vec![0i64; n * n];
    for (u, v) in graph.edges() {
        a[u * n + v] = 1;
        a[v * n + u] = 1;
    }
    char_poly_matrix(&a, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::build_prism;

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    /// Multiplies out `prod (x - r)` in ascending order.
    fn expand(roots: &[i64]) -> Vec<BigInt> {
        let mut p = vec![BigInt::one()];
        for &r in roots {
            let mut next = vec![BigInt::zero(); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r;
            }
            p = next;
        }
        p
    }

    #[test]
    fn examples() {
        assert_eq!(
            char_poly(&Graph::empty(4)).coefficients(),
            ints(&[0, 0, 0, 0, 1])
        );
        let k2 = Graph::from_edges(2, [(0, 1)]);
        assert_eq!(char_poly(&k2).coefficients(), ints(&[-1, 0, 1]));
        let prism = build_prism(3).unwrap();
        assert_eq!(
            char_poly(&prism).coefficients(),
            expand(&[3, 1, 0, 0, -2, -2])
        );
    }

    #[test]
    fn general_integer_matrix() {
        // [[2, 1], [-3, 4]]: x^2 - 6x + 11
        assert_eq!(
            char_poly_matrix(&[2, 1, -3, 4], 2).coefficients(),
            ints(&[11, -6, 1])
        );
        // upper triangular: product of (x - d_i)
        let m = [1, 5, -2, 0, -3, 7, 0, 0, 4];
        assert_eq!(char_poly_matrix(&m, 3).coefficients(), expand(&[1, -3, 4]));
    }

    #[test]
    fn decimal_round_trip() {
        let f = char_poly(&build_prism(7).unwrap());
        let back = SpectrumFingerprint::from_decimal_strings(&f.to_decimal_strings()).unwrap();
        assert_eq!(back, f);
        assert!(SpectrumFingerprint::from_decimal_strings(&["1", "2"]).is_err());
        assert!(SpectrumFingerprint::from_decimal_strings(&["x", "1"]).is_err());
    }
}
