//! Minimal complex 4×4 linear algebra: LU decomposition with partial
//! pivoting, inversion and norms. The linearized input-output system is
//! a fixed 4×4, so a direct deterministic solver beats pulling in a
//! general-purpose library.

use num_complex::Complex64;

pub type CMat4 = [[Complex64; 4]; 4];

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

pub fn zeros() -> CMat4 {
    [[ZERO; 4]; 4]
}

pub fn identity() -> CMat4 {
    let mut m = zeros();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = ONE;
    }
    m
}

pub fn scale(m: &CMat4, s: Complex64) -> CMat4 {
    let mut out = *m;
    for row in out.iter_mut() {
        for v in row.iter_mut() {
            *v *= s;
        }
    }
    out
}

pub fn add(a: &CMat4, b: &CMat4) -> CMat4 {
    let mut out = *a;
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] += b[i][j];
        }
    }
    out
}

pub fn sub(a: &CMat4, b: &CMat4) -> CMat4 {
    let mut out = *a;
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] -= b[i][j];
        }
    }
    out
}

pub fn mul(a: &CMat4, b: &CMat4) -> CMat4 {
    let mut out = zeros();
    for i in 0..4 {
        for k in 0..4 {
            let aik = a[i][k];
            if aik == ZERO {
                continue;
            }
            for j in 0..4 {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub fn conj_transpose(a: &CMat4) -> CMat4 {
    let mut out = zeros();
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[j][i].conj();
        }
    }
    out
}

/// Maximum absolute row sum (∞-norm).
pub fn inf_norm(a: &CMat4) -> f64 {
    a.iter()
        .map(|row| row.iter().map(|v| v.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Invert by LU decomposition with partial pivoting.
///
/// Returns the inverse and an ∞-norm condition-number estimate
/// ‖A‖·‖A⁻¹‖. `None` if a pivot vanishes (singular to machine
/// precision).
pub fn invert(a: &CMat4) -> Option<(CMat4, f64)> {
    let mut lu = *a;
    let mut piv = [0usize; 4];

    for col in 0..4 {
        // partial pivot: largest magnitude on or below the diagonal
        let (p, mag) = (col..4)
            .map(|r| (r, lu[r][col].norm()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if mag == 0.0 {
            return None;
        }
        piv[col] = p;
        if p != col {
            lu.swap(p, col);
        }
        let inv_pivot = ONE / lu[col][col];
        let pivot_row = lu[col];
        for row in lu.iter_mut().skip(col + 1) {
            let factor = row[col] * inv_pivot;
            row[col] = factor;
            for (c, pivot_entry) in pivot_row.iter().enumerate().skip(col + 1) {
                let sub = factor * pivot_entry;
                row[c] -= sub;
            }
        }
    }

    // forward/back substitution per unit vector
    let mut inv = zeros();
    for k in 0..4 {
        let mut x = [ZERO; 4];
        x[k] = ONE;
        // apply row swaps
        for (col, &p) in piv.iter().enumerate() {
            if p != col {
                x.swap(p, col);
            }
        }
        // L y = x
        for i in 1..4 {
            for j in 0..i {
                let sub = lu[i][j] * x[j];
                x[i] -= sub;
            }
        }
        // U z = y
        for i in (0..4).rev() {
            for j in (i + 1)..4 {
                let sub = lu[i][j] * x[j];
                x[i] -= sub;
            }
            x[i] /= lu[i][i];
        }
        for i in 0..4 {
            inv[i][k] = x[i];
        }
    }

    let cond = inf_norm(a) * inf_norm(&inv);
    Some((inv, cond))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_mat(rng: &mut ChaCha8Rng) -> CMat4 {
        let mut m = zeros();
        for row in m.iter_mut() {
            for v in row.iter_mut() {
                *v = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            }
        }
        m
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let a = random_mat(&mut rng);
            let Some((inv, cond)) = invert(&a) else {
                continue;
            };
            if cond > 1e8 {
                continue;
            }
            let prod = mul(&a, &inv);
            let diff = sub(&prod, &identity());
            assert!(
                inf_norm(&diff) < 1e-12 * cond.max(1.0),
                "residual {}",
                inf_norm(&diff)
            );
        }
    }

    #[test]
    fn singular_matrix_detected() {
        let mut a = zeros();
        a[0][0] = ONE;
        a[1][1] = ONE;
        // rows 2 and 3 identical → rank deficient
        a[2][0] = Complex64::new(1.0, 2.0);
        a[2][3] = Complex64::new(-0.5, 0.0);
        a[3][0] = a[2][0];
        a[3][3] = a[2][3];
        assert!(invert(&a).is_none());
    }

    #[test]
    fn diagonal_inverse_exact() {
        let mut a = zeros();
        for (i, v) in [2.0, 4.0, 0.5, -1.0].into_iter().enumerate() {
            a[i][i] = Complex64::new(v, 0.0);
        }
        let (inv, _) = invert(&a).unwrap();
        for (i, v) in [0.5, 0.25, 2.0, -1.0].into_iter().enumerate() {
            assert_eq!(inv[i][i], Complex64::new(v, 0.0));
        }
    }
}
