//! Real 3-vectors, 3×3 matrices and rotations.

use crate::scalar::Real;

pub type Vec3<T> = [T; 3];
/// Row-major.
pub type Mat3<T> = [[T; 3]; 3];

pub fn dot<T: Real>(a: &Vec3<T>, b: &Vec3<T>) -> T {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross<T: Real>(a: &Vec3<T>, b: &Vec3<T>) -> Vec3<T> {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn norm<T: Real>(a: &Vec3<T>) -> T {
    dot(a, a).sqrt()
}

pub fn scale<T: Real>(a: &Vec3<T>, k: T) -> Vec3<T> {
    [a[0] * k, a[1] * k, a[2] * k]
}

pub fn add<T: Real>(a: &Vec3<T>, b: &Vec3<T>) -> Vec3<T> {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub fn sub<T: Real>(a: &Vec3<T>, b: &Vec3<T>) -> Vec3<T> {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub fn neg<T: Real>(a: &Vec3<T>) -> Vec3<T> {
    [-a[0], -a[1], -a[2]]
}

/// Unit vector along `a`; `None` for the zero vector.
pub fn normalize<T: Real>(a: &Vec3<T>) -> Option<Vec3<T>> {
    let n = norm(a);
    if n > T::zero() && n.is_finite() {
        Some(scale(a, T::one() / n))
    } else {
        None
    }
}

pub fn identity<T: Real>() -> Mat3<T> {
    let (o, l) = (T::zero(), T::one());
    [[l, o, o], [o, l, o], [o, o, l]]
}

pub fn diag<T: Real>(d: Vec3<T>) -> Mat3<T> {
    let o = T::zero();
    [[d[0], o, o], [o, d[1], o], [o, o, d[2]]]
}

pub fn transpose<T: Real>(m: &Mat3<T>) -> Mat3<T> {
    let mut t = *m;
    for i in 0..3 {
        for j in 0..3 {
            t[i][j] = m[j][i];
        }
    }
    t
}

pub fn mat_mul<T: Real>(a: &Mat3<T>, b: &Mat3<T>) -> Mat3<T> {
    let mut m = [[T::zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
        }
    }
    m
}

pub fn mat_vec<T: Real>(m: &Mat3<T>, v: &Vec3<T>) -> Vec3<T> {
    [dot(&m[0], v), dot(&m[1], v), dot(&m[2], v)]
}

/// `aᵀ M b`.
pub fn bilinear<T: Real>(a: &Vec3<T>, m: &Mat3<T>, b: &Vec3<T>) -> T {
    dot(a, &mat_vec(m, b))
}

pub fn det<T: Real>(m: &Mat3<T>) -> T {
    dot(&m[0], &cross(&m[1], &m[2]))
}

pub fn max_abs_diff<T: Real>(a: &Mat3<T>, b: &Mat3<T>) -> T {
    let mut d = T::zero();
    for i in 0..3 {
        for j in 0..3 {
            d = d.max((a[i][j] - b[i][j]).abs());
        }
    }
    d
}

/// max |(M Mᵀ − 𝟙)_ij|: how far the rows are from orthonormal.
pub fn gram_deviation<T: Real>(m: &Mat3<T>) -> T {
    max_abs_diff(&mat_mul(m, &transpose(m)), &identity())
}

/// Right-handed rotation by `angle` about the unit `axis` (Rodrigues).
pub fn rotation_about<T: Real>(axis: &Vec3<T>, angle: T) -> Mat3<T> {
    let (s, c) = angle.sin_cos();
    let t = T::one() - c;
    let [x, y, z] = *axis;
    [
        [t * x * x + c, t * x * y - s * z, t * x * z + s * y],
        [t * x * y + s * z, t * y * y + c, t * y * z - s * x],
        [t * x * z - s * y, t * y * z + s * x, t * z * z + c],
    ]
}

/// Rotation matrix of the quaternion `(w, x, y, z)`; the input need not be
/// normalized. A zero quaternion maps to the identity.
pub fn quaternion_to_rotation<T: Real>(q: &[T; 4]) -> Mat3<T> {
    let n2 = q.iter().fold(T::zero(), |acc, &x| acc + x * x);
    if !(n2 > T::zero()) || !n2.is_finite() {
        return identity();
    }
    let s = T::lit(2.0) / n2;
    let [w, x, y, z] = *q;
    let l = T::one();
    [
        [l - s * (y * y + z * z), s * (x * y - w * z), s * (x * z + w * y)],
        [s * (x * y + w * z), l - s * (x * x + z * z), s * (y * z - w * x)],
        [s * (x * z - w * y), s * (y * z + w * x), l - s * (x * x + y * y)],
    ]
}

/// Unit quaternion of a proper rotation (Shepperd's method).
pub fn rotation_to_quaternion<T: Real>(m: &Mat3<T>) -> [T; 4] {
    let tr = m[0][0] + m[1][1] + m[2][2];
    let one = T::one();
    let two = T::lit(2.0);
    let quarter = T::lit(0.25);
    let q = if tr > T::zero() {
        let s = (tr + one).sqrt() * two;
        [
            quarter * s,
            (m[2][1] - m[1][2]) / s,
            (m[0][2] - m[2][0]) / s,
            (m[1][0] - m[0][1]) / s,
        ]
    } else if m[0][0] > m[1][1] && m[0][0] > m[2][2] {
        let s = (one + m[0][0] - m[1][1] - m[2][2]).sqrt() * two;
        [
            (m[2][1] - m[1][2]) / s,
            quarter * s,
            (m[0][1] + m[1][0]) / s,
            (m[0][2] + m[2][0]) / s,
        ]
    } else if m[1][1] > m[2][2] {
        let s = (one + m[1][1] - m[0][0] - m[2][2]).sqrt() * two;
        [
            (m[0][2] - m[2][0]) / s,
            (m[0][1] + m[1][0]) / s,
            quarter * s,
            (m[1][2] + m[2][1]) / s,
        ]
    } else {
        let s = (one + m[2][2] - m[0][0] - m[1][1]).sqrt() * two;
        [
            (m[1][0] - m[0][1]) / s,
            (m[0][2] + m[2][0]) / s,
            (m[1][2] + m[2][1]) / s,
            quarter * s,
        ]
    };
    let n = q.iter().fold(T::zero(), |acc, &x| acc + x * x).sqrt();
    q.map(|x| x / n)
}

/// One-sided (Hestenes) Jacobi SVD of a real `N×N` matrix.
///
/// Column rotations orthogonalize `M V`; they are computed from entries of
/// `MᵀM` without ever forming it. Returns `(σ, U, V)` with `σ` sorted
/// descending and `M = U·diag(σ)·Vᵀ`. Columns of `U` belonging to
/// (numerically) zero singular values are completed by Gram–Schmidt.
pub fn svd<T: Real, const N: usize>(m: &[[T; N]; N]) -> ([T; N], [[T; N]; N], [[T; N]; N]) {
    let mut w = *m;
    let mut v = [[T::zero(); N]; N];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = T::one();
    }
    let eps = T::epsilon();
    for _sweep in 0..60 {
        let mut rotated = false;
        for p in 0..N {
            for q in (p + 1)..N {
                let (mut alpha, mut beta, mut gamma) = (T::zero(), T::zero(), T::zero());
                for row in w.iter() {
                    alpha += row[p] * row[p];
                    beta += row[q] * row[q];
                    gamma += row[p] * row[q];
                }
                if gamma.abs() <= eps * (alpha * beta).sqrt() || gamma == T::zero() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (T::lit(2.0) * gamma);
                let t = zeta.signum() / (zeta.abs() + (T::one() + zeta * zeta).sqrt());
                let cs = T::one() / (T::one() + t * t).sqrt();
                let sn = cs * t;
                for mat in [&mut w, &mut v] {
                    for row in mat.iter_mut() {
                        let (xp, xq) = (row[p], row[q]);
                        row[p] = cs * xp - sn * xq;
                        row[q] = sn * xp + cs * xq;
                    }
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut sigma = [T::zero(); N];
    for (j, s) in sigma.iter_mut().enumerate() {
        *s = w.iter().fold(T::zero(), |acc, row| acc + row[j] * row[j]).sqrt();
    }
    let mut order: [usize; N] = std::array::from_fn(|i| i);
    order.sort_by(|&a, &b| sigma[b].partial_cmp(&sigma[a]).expect("finite singular values"));

    let sigma_sorted: [T; N] = std::array::from_fn(|k| sigma[order[k]]);
    let mut v_sorted = [[T::zero(); N]; N];
    for i in 0..N {
        for k in 0..N {
            v_sorted[i][k] = v[i][order[k]];
        }
    }
    let cutoff = eps * T::lit(16.0) * sigma_sorted[0].max(T::one());
    let mut u_cols: [[T; N]; N] = [[T::zero(); N]; N];
    let mut have = 0;
    for k in 0..N {
        if sigma_sorted[k] > cutoff {
            for i in 0..N {
                u_cols[k][i] = w[i][order[k]] / sigma_sorted[k];
            }
            have += 1;
        }
    }
    // Complete the basis with canonical vectors, orthogonalized.
    let mut candidate = 0;
    while have < N && candidate < N {
        let mut e = [T::zero(); N];
        e[candidate] = T::one();
        candidate += 1;
        for col in u_cols.iter().take(have) {
            let d = (0..N).fold(T::zero(), |acc, i| acc + col[i] * e[i]);
            for i in 0..N {
                e[i] -= d * col[i];
            }
        }
        let n = e.iter().fold(T::zero(), |acc, &x| acc + x * x).sqrt();
        if n > T::lit(0.5) {
            for i in 0..N {
                u_cols[have][i] = e[i] / n;
            }
            have += 1;
        }
    }
    let mut u = [[T::zero(); N]; N];
    for i in 0..N {
        for k in 0..N {
            u[i][k] = u_cols[k][i];
        }
    }
    (sigma_sorted, u, v_sorted)
}
