//! Cyclic Jacobi eigenvalue iteration for real symmetric matrices.

/// Sweeps stop once the off-diagonal Frobenius norm drops below this.
pub const OFF_DIAGONAL_TOLERANCE: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;
const THRESHOLD_SWEEPS: usize = 3;

/// Eigenvalues of the symmetric row-major `order x order` matrix, ascending.
///
/// Rotations visit `(p, q)` pairs in row-cyclic order, so the result is
/// deterministic for a given input.
pub fn symmetric_eigenvalues(matrix: &[f64], order: usize) -> Vec<f64> {
    assert_eq!(matrix.len(), order * order, "matrix is not order x order");
    let n = order;
    let mut a = matrix.to_vec();
    let mut new_p = vec![0.0; n];
    let mut new_q = vec![0.0; n];

    for sweep in 0..MAX_SWEEPS {
        let off = off_diagonal_norm(&a, n);
        if off < OFF_DIAGONAL_TOLERANCE {
            break;
        }
        // early sweeps only rotate away the larger entries
        let threshold = if sweep < THRESHOLD_SWEEPS {
            0.2 * off / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= threshold {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let tiny = 100.0 * apq.abs();
                if sweep >= THRESHOLD_SWEEPS
                    && app.abs() + tiny == app.abs()
                    && aqq.abs() + tiny == aqq.abs()
                {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                // rows p and q of J^T A
                let (head, tail) = a.split_at_mut(q * n);
                let row_p = &mut head[p * n..(p + 1) * n];
                let row_q = &mut tail[..n];
                for (x, y) in row_p.iter_mut().zip(row_q.iter_mut()) {
                    let (xp, xq) = (*x, *y);
                    *x = c * xp - s * xq;
                    *y = s * xp + c * xq;
                }
                // columns p and q of (J^T A) J mirror the new rows
                new_p.copy_from_slice(row_p);
                new_q.copy_from_slice(row_q);
                for (row, (&xp, &xq)) in a.chunks_exact_mut(n).zip(new_p.iter().zip(&new_q)) {
                    row[p] = xp;
                    row[q] = xq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }

    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eigenvalues.sort_by(f64::total_cmp);
    eigenvalues
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[i * n + j] * a[i * n + j];
            }
        }
    }
    sum.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_and_two_by_two() {
        assert_eq!(
            symmetric_eigenvalues(&[3.0, 0.0, 0.0, -1.0], 2),
            vec![-1.0, 3.0]
        );
        let ev = symmetric_eigenvalues(&[2.0, 1.0, 1.0, 2.0], 2);
        assert!((ev[0] - 1.0).abs() < 1e-14 && (ev[1] - 3.0).abs() < 1e-14);
        assert!(symmetric_eigenvalues(&[], 0).is_empty());
    }

    #[test]
    fn path_graph_closed_form() {
        // P_n has eigenvalues 2cos(pi*j/(n+1))
        let n = 12;
        let mut a = vec![0.0; n * n];
        for i in 0..n - 1 {
            a[i * n + i + 1] = 1.0;
            a[(i + 1) * n + i] = 1.0;
        }
        let mut expected: Vec<f64> = (1..=n)
            .map(|j| 2.0 * (std::f64::consts::PI * j as f64 / (n as f64 + 1.0)).cos())
            .collect();
        expected.sort_by(f64::total_cmp);
        for (x, y) in symmetric_eigenvalues(&a, n).iter().zip(&expected) {
            assert!((x - y).abs() < 1e-12, "{x} vs {y}");
        }
    }

    #[test]
    fn trace_and_frobenius_are_preserved() {
        let n = 9;
        let a: Vec<f64> = (0..n * n)
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                ((i * 7 + j * 7 + i * j) % 5) as f64 - 2.0
            })
            .collect();
        let ev = symmetric_eigenvalues(&a, n);
        let trace: f64 = (0..n).map(|i| a[i * n + i]).sum();
        let frob: f64 = a.iter().map(|x| x * x).sum();
        assert!((ev.iter().sum::<f64>() - trace).abs() < 1e-10);
        assert!((ev.iter().map(|x| x * x).sum::<f64>() - frob).abs() < 1e-9);
    }
}
