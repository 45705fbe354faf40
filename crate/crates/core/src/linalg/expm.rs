use super::Mat;

// Degree-m Padé thresholds for the 1-norm, from the standard
// scaling-and-squaring analysis.
const THETA_3: f64 = 1.495585217958292e-2;
const THETA_5: f64 = 2.539398330063230e-1;
const THETA_7: f64 = 9.504178996162932e-1;
const THETA_9: f64 = 2.097847961257068;
const THETA_13: f64 = 5.371920351148152;

const B3: [f64; 4] = [120.0, 60.0, 12.0, 1.0];
const B5: [f64; 6] = [30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0];
const B7: [f64; 8] = [
    17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0,
];
const B9: [f64; 10] = [
    17643225600.0,
    8821612800.0,
    2075673600.0,
    302702400.0,
    30270240.0,
    2162160.0,
    110880.0,
    3960.0,
    90.0,
    1.0,
];
const B13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

/// Dense matrix exponential by Padé approximation with scaling and squaring.
///
/// Picks the smallest Padé degree in {3, 5, 7, 9, 13} whose backward-error
/// bound covers `‖A‖₁`; larger norms are halved `s` times first and the
/// result squared back. Accuracy is near machine precision for the
/// well-conditioned rate matrices this crate feeds it.
pub fn expm(a: &Mat) -> Mat {
    assert!(a.is_square(), "expm requires a square matrix");
    let norm = a.one_norm();
    if norm <= THETA_3 {
        return pade_low(a, &B3);
    }
    if norm <= THETA_5 {
        return pade_low(a, &B5);
    }
    if norm <= THETA_7 {
        return pade_low(a, &B7);
    }
    if norm <= THETA_9 {
        return pade_low(a, &B9);
    }
    let s = if norm > THETA_13 {
        libm::ceil(libm::log2(norm / THETA_13)) as u32
    } else {
        0
    };
    let mut scaled = a.clone();
    scaled.scale(libm::pow(0.5, f64::from(s)));
    let mut x = pade_13(&scaled);
    for _ in 0..s {
        x = x.matmul(&x);
    }
    x
}

/// Degree 3/5/7/9 Padé approximant: evaluates the even/odd split
/// `U = A·Σ b_{2k+1} A^{2k}`, `V = Σ b_{2k} A^{2k}` and solves
/// `(V − U)·X = (V + U)`.
fn pade_low(a: &Mat, b: &[f64]) -> Mat {
    let n = a.rows();
    let a2 = a.matmul(a);
    let mut even = Mat::identity(n);
    even.scale(b[0]);
    let mut odd_poly = Mat::identity(n);
    odd_poly.scale(b[1]);
    let mut power = Mat::identity(n); // A^(2k)
    for k in 1..=(b.len() - 1) / 2 {
        power = power.matmul(&a2);
        even.add_scaled(&power, b[2 * k]);
        if 2 * k + 1 < b.len() {
            odd_poly.add_scaled(&power, b[2 * k + 1]);
        }
    }
    let u = a.matmul(&odd_poly);
    solve_pade(&even, &u)
}

fn pade_13(a: &Mat) -> Mat {
    let n = a.rows();
    let b = &B13;
    let a2 = a.matmul(a);
    let a4 = a2.matmul(&a2);
    let a6 = a2.matmul(&a4);

    // U = A·(A6·(b13 A6 + b11 A4 + b9 A2) + b7 A6 + b5 A4 + b3 A2 + b1 I)
    let mut inner_u = Mat::zeros(n, n);
    inner_u.add_scaled(&a6, b[13]);
    inner_u.add_scaled(&a4, b[11]);
    inner_u.add_scaled(&a2, b[9]);
    let mut u_poly = a6.matmul(&inner_u);
    u_poly.add_scaled(&a6, b[7]);
    u_poly.add_scaled(&a4, b[5]);
    u_poly.add_scaled(&a2, b[3]);
    let mut ident = Mat::identity(n);
    ident.scale(b[1]);
    u_poly.add_scaled(&ident, 1.0);
    let u = a.matmul(&u_poly);

    // V = A6·(b12 A6 + b10 A4 + b8 A2) + b6 A6 + b4 A4 + b2 A2 + b0 I
    let mut inner_v = Mat::zeros(n, n);
    inner_v.add_scaled(&a6, b[12]);
    inner_v.add_scaled(&a4, b[10]);
    inner_v.add_scaled(&a2, b[8]);
    let mut v = a6.matmul(&inner_v);
    v.add_scaled(&a6, b[6]);
    v.add_scaled(&a4, b[4]);
    v.add_scaled(&a2, b[2]);
    let mut ident = Mat::identity(n);
    ident.scale(b[0]);
    v.add_scaled(&ident, 1.0);

    solve_pade(&v, &u)
}

fn solve_pade(v: &Mat, u: &Mat) -> Mat {
    let mut denom = v.clone();
    denom.add_scaled(u, -1.0);
    let mut numer = v.clone();
    numer.add_scaled(u, 1.0);
    denom
        .solve(&numer)
        .expect("Padé denominator is singular; matrix norm outside supported range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn taylor_expm(a: &Mat, terms: usize) -> Mat {
        let n = a.rows();
        let mut sum = Mat::identity(n);
        let mut term = Mat::identity(n);
        for k in 1..=terms {
            term = term.matmul(a);
            term.scale(1.0 / k as f64);
            sum.add_scaled(&term, 1.0);
        }
        sum
    }

    #[test]
    fn zero_matrix_gives_identity() {
        let z = Mat::zeros(4, 4);
        assert!(expm(&z).max_abs_diff(&Mat::identity(4)) < 1e-15);
    }

    #[test]
    fn diagonal_matrix_exponentiates_entrywise() {
        let d = Mat::from_vec(2, 2, vec![1.0, 0.0, 0.0, -2.0]);
        let e = expm(&d);
        assert!((e[(0, 0)] - libm::exp(1.0)).abs() < 1e-14);
        assert!((e[(1, 1)] - libm::exp(-2.0)).abs() < 1e-14);
        assert!(e[(0, 1)].abs() < 1e-15 && e[(1, 0)].abs() < 1e-15);
    }

    #[test]
    fn matches_taylor_series_on_small_norms() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let n = 5;
            let a = Mat::from_fn(n, n, |_, _| rng.random_range(-0.2..0.2));
            let e = expm(&a);
            let t = taylor_expm(&a, 30);
            assert!(e.max_abs_diff(&t) < 1e-12);
        }
    }

    #[test]
    fn squaring_path_agrees_with_argument_reduction() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let n = 6;
        // Norm well above theta_13 to force scaling.
        let a = Mat::from_fn(n, n, |_, _| rng.random_range(-2.0..2.0));
        let e = expm(&a);
        // Oracle: exp(A) = exp(A/16)^16 with the small factor from Taylor.
        let mut small = a.clone();
        small.scale(1.0 / 16.0);
        let mut t = taylor_expm(&small, 40);
        for _ in 0..4 {
            t = t.matmul(&t);
        }
        let scale: f64 = e
            .as_slice()
            .iter()
            .fold(1.0f64, |m, &x| m.max(x.abs()));
        assert!(e.max_abs_diff(&t) / scale < 1e-11);
    }

    #[test]
    fn low_degree_branches_cover_small_norms() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for &scale in &[0.01, 0.1, 0.5, 1.5] {
            let a = Mat::from_fn(4, 4, |_, _| rng.random_range(-scale..scale));
            let e = expm(&a);
            let t = taylor_expm(&a, 40);
            assert!(e.max_abs_diff(&t) < 1e-12, "scale {scale}");
        }
    }

    #[test]
    fn nilpotent_matrix_is_exact() {
        // exp of strictly upper triangular 3x3 is I + A + A²/2.
        let a = Mat::from_vec(3, 3, vec![0.0, 1.0, 2.0, 0.0, 0.0, 3.0, 0.0, 0.0, 0.0]);
        let e = expm(&a);
        let expected: Vec<f64> = vec![1.0, 1.0, 3.5, 0.0, 1.0, 3.0, 0.0, 0.0, 1.0];
        for (x, y) in e.as_slice().iter().zip(&expected) {
            assert!((x - y).abs() < 1e-13);
        }
    }
}
