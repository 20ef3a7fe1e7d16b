//! Small dense complex linear algebra.

use alloc::vec::Vec;

use crate::C64;

/// Gaussian elimination with partial pivoting. `None` if a pivot is
/// numerically zero.
pub(crate) fn solve(a: &[Vec<C64>], b: &[C64]) -> Option<Vec<C64>> {
    let n = b.len();
    let mut m: Vec<Vec<C64>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    let scale = a.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return None;
    }
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| m[i][col].norm().total_cmp(&m[j][col].norm()))?;
        if m[pivot][col].norm() <= 1e-14 * scale {
            return None;
        }
        m.swap(col, pivot);
        for row in col + 1..n {
            let factor = m[row][col] / m[col][col];
            if factor == C64::new(0.0, 0.0) {
                continue;
            }
            for k in col..=n {
                let sub = factor * m[col][k];
                m[row][k] -= sub;
            }
        }
    }
    let mut x = alloc::vec![C64::new(0.0, 0.0); n];
    for row in (0..n).rev() {
        let mut acc = m[row][n];
        for k in row + 1..n {
            acc -= m[row][k] * x[k];
        }
        x[row] = acc / m[row][row];
    }
    Some(x)
}

/// `max_i |(A x - b)_i|`.
pub(crate) fn residual(a: &[Vec<C64>], x: &[C64], b: &[C64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(row, &bi)| {
            let ax: C64 = row.iter().zip(x).map(|(r, xi)| r * xi).sum();
            (ax - bi).norm()
        })
        .fold(0.0, f64::max)
}

/// Largest singular value of the 2x2 matrix `[[a, b], [c, d]]`.
pub(crate) fn sigma_max_2x2(a: C64, b: C64, c: C64, d: C64) -> f64 {
    // Eigenvalues of M^H M: (t +- sqrt(t^2 - 4 det^2)) / 2 with
    // t = |a|^2+|b|^2+|c|^2+|d|^2 and det = |ad - bc|.
    let t = a.norm_sqr() + b.norm_sqr() + c.norm_sqr() + d.norm_sqr();
    let det = (a * d - b * c).norm();
    let disc = ((t - 2.0 * det) * (t + 2.0 * det)).max(0.0);
    libm::sqrt(0.5 * (t + libm::sqrt(disc)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use alloc::vec;

    #[test]
    fn solve_small_system() {
        let a = vec![
            vec![c64(2.0, 0.0), c64(1.0, 1.0), c64(0.0, 0.0)],
            vec![c64(0.0, 1.0), c64(3.0, 0.0), c64(1.0, 0.0)],
            vec![c64(1.0, 0.0), c64(0.0, 0.0), c64(1.0, -1.0)],
        ];
        let x_true = vec![c64(1.0, 2.0), c64(-0.5, 0.0), c64(0.25, 0.75)];
        let b: Vec<C64> = a
            .iter()
            .map(|r| r.iter().zip(&x_true).map(|(p, q)| p * q).sum())
            .collect();
        let x = solve(&a, &b).unwrap();
        assert!(residual(&a, &x, &b) < 1e-14);
        for (p, q) in x.iter().zip(&x_true) {
            assert!((p - q).norm() < 1e-14);
        }
    }

    #[test]
    fn singular_system_is_rejected() {
        let a = vec![
            vec![c64(1.0, 0.0), c64(2.0, 0.0)],
            vec![c64(2.0, 0.0), c64(4.0, 0.0)],
        ];
        assert!(solve(&a, &[c64(1.0, 0.0), c64(0.0, 0.0)]).is_none());
    }

    #[test]
    fn sigma_max_of_diagonal_and_rank_one() {
        let z = c64(0.0, 0.0);
        assert!((sigma_max_2x2(c64(3.0, 0.0), z, z, c64(0.0, -2.0)) - 3.0).abs() < 1e-14);
        // [[1,1],[1,1]] has singular values 2, 0.
        let o = c64(1.0, 0.0);
        assert!((sigma_max_2x2(o, o, o, o) - 2.0).abs() < 1e-14);
    }
}
