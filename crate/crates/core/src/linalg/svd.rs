use alloc::vec;
use alloc::vec::Vec;

use super::Mat;

/// Result of a singular value decomposition `A = U Σ Vᵀ`.
///
/// Singular values are non-negative and sorted in descending order; `u` is
/// `m×n` and `v` is `n×n` (thin decomposition, `m ≥ n`).
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: Mat,
    pub singular_values: Vec<f64>,
    pub v: Mat,
}

const MAX_SWEEPS: usize = 64;

/// One-sided Jacobi SVD.
///
/// Rotates column pairs of `A` until they are mutually orthogonal; the column
/// norms are then the singular values. Quadratic convergence makes a few
/// dozen sweeps ample at the sizes used here, and accuracy on small singular
/// values is better than what a bidiagonalization would give, which matters
/// for the rank decisions in correspondence analysis.
///
/// Requires `rows ≥ cols`.
pub fn svd(a: &Mat) -> Svd {
    assert!(a.rows() >= a.cols(), "svd requires rows >= cols");
    let m = a.rows();
    let n = a.cols();
    // Work on Aᵀ so the columns being rotated are contiguous rows.
    let mut w = a.transpose();
    let mut vt = Mat::identity(n);
    let tol = 1e-14;

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let mut app = 0.0;
                let mut aqq = 0.0;
                let mut apq = 0.0;
                {
                    let (head, tail) = w.as_slice().split_at(q * m);
                    let wp = &head[p * m..p * m + m];
                    let wq = &tail[..m];
                    for (&x, &y) in wp.iter().zip(wq) {
                        app += x * x;
                        aqq += y * y;
                        apq += x * y;
                    }
                }
                if apq.abs() <= tol * libm::sqrt(app * aqq) {
                    continue;
                }
                rotated = true;
                let tau = (aqq - app) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + libm::sqrt(1.0 + tau * tau))
                } else {
                    -1.0 / (-tau + libm::sqrt(1.0 + tau * tau))
                };
                let c = 1.0 / libm::sqrt(1.0 + t * t);
                let s = c * t;
                rotate_rows(&mut w, p, q, c, s);
                rotate_rows(&mut vt, p, q, c, s);
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<f64> = (0..n)
        .map(|k| libm::sqrt(w.row(k).iter().map(|x| x * x).sum()))
        .collect();
    order.sort_by(|&a, &b| norms[b].total_cmp(&norms[a]).then(a.cmp(&b)));

    let mut u = Mat::zeros(m, n);
    let mut v = Mat::zeros(n, n);
    let mut singular_values = vec![0.0; n];
    for (dst, &src) in order.iter().enumerate() {
        let sigma = norms[src];
        singular_values[dst] = sigma;
        if sigma > 0.0 {
            let inv = 1.0 / sigma;
            for (i, &x) in w.row(src).iter().enumerate() {
                u[(i, dst)] = x * inv;
            }
        }
        for (i, &x) in vt.row(src).iter().enumerate() {
            v[(i, dst)] = x;
        }
    }
    Svd {
        u,
        singular_values,
        v,
    }
}

/// `[row_p; row_q] ← [c·row_p + s·row_q; −s·row_p + c·row_q]`.
fn rotate_rows(m: &mut Mat, p: usize, q: usize, c: f64, s: f64) {
    let cols = m.cols();
    let data = m.as_mut_slice();
    let (head, tail) = data.split_at_mut(q * cols);
    let row_p = &mut head[p * cols..p * cols + cols];
    let row_q = &mut tail[..cols];
    for (x, y) in row_p.iter_mut().zip(row_q.iter_mut()) {
        let xp = c * *x + s * *y;
        let xq = -s * *x + c * *y;
        *x = xp;
        *y = xq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn reconstruct(s: &Svd) -> Mat {
        let n = s.v.rows();
        let m = s.u.rows();
        Mat::from_fn(m, n, |i, j| {
            (0..n)
                .map(|k| s.u[(i, k)] * s.singular_values[k] * s.v[(j, k)])
                .sum()
        })
    }

    #[test]
    fn reconstructs_diagonal_matrix() {
        let a = Mat::from_vec(3, 3, vec![3.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 2.0]);
        let s = svd(&a);
        assert_abs_diff_eq!(s.singular_values[0], 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.singular_values[1], 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.singular_values[2], 1.0, epsilon = 1e-12);
        assert!(reconstruct(&s).max_abs_diff(&a) < 1e-12);
    }

    #[test]
    fn matches_nalgebra_on_random_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for trial in 0..20 {
            let n = 2 + trial % 7;
            let a = Mat::from_fn(n, n, |_, _| rng.random_range(-1.0..1.0));
            let ours = svd(&a);
            let na = nalgebra::DMatrix::from_fn(n, n, |i, j| a[(i, j)]);
            let theirs = na.svd(false, false);
            let mut ref_sv: Vec<f64> = theirs.singular_values.iter().copied().collect();
            ref_sv.sort_by(|x, y| y.total_cmp(x));
            for (o, r) in ours.singular_values.iter().zip(&ref_sv) {
                assert_abs_diff_eq!(o, r, epsilon = 1e-10);
            }
            assert!(reconstruct(&ours).max_abs_diff(&a) < 1e-10);
        }
    }

    #[test]
    fn handles_rank_deficiency() {
        // Rank-1 outer product: one positive singular value, rest zero.
        let v = [1.0, 2.0, 3.0, 4.0];
        let a = Mat::from_fn(4, 4, |i, j| v[i] * v[j]);
        let s = svd(&a);
        let norm2: f64 = v.iter().map(|x| x * x).sum();
        assert_abs_diff_eq!(s.singular_values[0], norm2, epsilon = 1e-10);
        for k in 1..4 {
            assert!(s.singular_values[k] < 1e-10);
        }
    }
}
