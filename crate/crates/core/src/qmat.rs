//! Small dense complex matrices for one- and two-qubit operators.
//!
//! Everything here is fixed-size (`2×2` and `4×4`) and value-typed. The
//! basis order for two qubits is `|↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩`, i.e. index
//! `2i + k` for first-qubit index `i` and second-qubit index `k`.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

pub use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SquareMatrix<T, const N: usize> {
    data: [[Complex<T>; N]; N],
}

pub type Mat2<T> = SquareMatrix<T, 2>;
pub type Mat4<T> = SquareMatrix<T, 4>;

/// Complex column vector of length `N`.
pub type CVector<T, const N: usize> = [Complex<T>; N];

#[inline]
pub fn c<T: Real>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

#[inline]
pub fn re<T: Real>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

impl<T: Real, const N: usize> SquareMatrix<T, N> {
    pub fn zeros() -> Self {
        Self {
            data: [[Complex::new(T::zero(), T::zero()); N]; N],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.data[i][i] = re(T::one());
        }
        m
    }

    pub fn from_rows(data: [[Complex<T>; N]; N]) -> Self {
        Self { data }
    }

    pub fn from_real_rows(rows: [[T; N]; N]) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.data[i][j] = re(rows[i][j]);
            }
        }
        m
    }

    pub fn diagonal(d: [T; N]) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.data[i][i] = re(d[i]);
        }
        m
    }

    /// Outer product `|u⟩⟨v|`.
    pub fn outer(u: &CVector<T, N>, v: &CVector<T, N>) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.data[i][j] = u[i] * v[j].conj();
            }
        }
        m
    }

    pub fn rows(&self) -> &[[Complex<T>; N]; N] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.data[i][j] = self.data[j][i].conj();
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.data[i][j] = self.data[j][i];
            }
        }
        m
    }

    pub fn trace(&self) -> Complex<T> {
        (0..N).fold(re(T::zero()), |acc, i| acc + self.data[i][i])
    }

    pub fn scale(&self, k: T) -> Self {
        self.map(|z| z * k)
    }

    pub fn scale_c(&self, k: Complex<T>) -> Self {
        self.map(|z| z * k)
    }

    fn map(&self, f: impl Fn(Complex<T>) -> Complex<T>) -> Self {
        let mut m = *self;
        for row in m.data.iter_mut() {
            for z in row.iter_mut() {
                *z = f(*z);
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &CVector<T, N>) -> CVector<T, N> {
        let mut out = [re(T::zero()); N];
        for i in 0..N {
            for j in 0..N {
                out[i] += self.data[i][j] * v[j];
            }
        }
        out
    }

    /// `⟨u|M|v⟩`.
    pub fn sandwich(&self, u: &CVector<T, N>, v: &CVector<T, N>) -> Complex<T> {
        inner(u, &self.mul_vec(v))
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> T {
        self.data
            .iter()
            .flatten()
            .fold(T::zero(), |acc, z| acc.max(z.norm()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        (*self - *other).max_abs()
    }

    /// ‖M − M†‖∞ taken entrywise.
    pub fn hermiticity_deviation(&self) -> T {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().flatten().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        *self * *other + *other * *self
    }

    pub fn frobenius_norm(&self) -> T {
        self.data
            .iter()
            .flatten()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
            .sqrt()
    }
}

impl<T, const N: usize> Index<(usize, usize)> for SquareMatrix<T, N> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i][j]
    }
}

impl<T, const N: usize> IndexMut<(usize, usize)> for SquareMatrix<T, N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i][j]
    }
}

impl<T: Real, const N: usize> Add for SquareMatrix<T, N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut m = self;
        for i in 0..N {
            for j in 0..N {
                m.data[i][j] += rhs.data[i][j];
            }
        }
        m
    }
}

impl<T: Real, const N: usize> Sub for SquareMatrix<T, N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut m = self;
        for i in 0..N {
            for j in 0..N {
                m.data[i][j] -= rhs.data[i][j];
            }
        }
        m
    }
}

impl<T: Real, const N: usize> Neg for SquareMatrix<T, N> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|z| -z)
    }
}

impl<T: Real, const N: usize> Mul for SquareMatrix<T, N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for k in 0..N {
                let a = self.data[i][k];
                for j in 0..N {
                    m.data[i][j] += a * rhs.data[k][j];
                }
            }
        }
        m
    }
}

/// `⟨u|v⟩`, conjugate-linear in `u`.
pub fn inner<T: Real, const N: usize>(u: &CVector<T, N>, v: &CVector<T, N>) -> Complex<T> {
    u.iter()
        .zip(v)
        .fold(re(T::zero()), |acc, (a, b)| acc + a.conj() * b)
}

pub fn vector_norm<T: Real, const N: usize>(v: &CVector<T, N>) -> T {
    v.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr()).sqrt()
}

/// Pauli matrix `σ_k` with `σ_0 = 𝟙`.
pub fn pauli<T: Real>(k: usize) -> Mat2<T> {
    let (o, l) = (T::zero(), T::one());
    match k {
        0 => Mat2::identity(),
        1 => Mat2::from_rows([[c(o, o), c(l, o)], [c(l, o), c(o, o)]]),
        2 => Mat2::from_rows([[c(o, o), c(o, -l)], [c(o, l), c(o, o)]]),
        3 => Mat2::from_rows([[c(l, o), c(o, o)], [c(o, o), c(-l, o)]]),
        _ => panic!("Pauli index {k} out of range 0..=3"),
    }
}

pub fn sigma_x<T: Real>() -> Mat2<T> {
    pauli(1)
}

pub fn sigma_y<T: Real>() -> Mat2<T> {
    pauli(2)
}

pub fn sigma_z<T: Real>() -> Mat2<T> {
    pauli(3)
}

/// Kronecker product: `(a ⊗ b)[2i+k][2j+l] = a[i][j]·b[k][l]`.
pub fn kron<T: Real>(a: &Mat2<T>, b: &Mat2<T>) -> Mat4<T> {
    let mut m = Mat4::zeros();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    m[(2 * i + k, 2 * j + l)] = a[(i, j)] * b[(k, l)];
                }
            }
        }
    }
    m
}

/// `a ⊗ 𝟙`.
pub fn on_first<T: Real>(a: &Mat2<T>) -> Mat4<T> {
    kron(a, &Mat2::identity())
}

/// `𝟙 ⊗ b`.
pub fn on_second<T: Real>(b: &Mat2<T>) -> Mat4<T> {
    kron(&Mat2::identity(), b)
}

/// Tensor factor that a partial transpose acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

/// Transposes the indices of one tensor factor only.
pub fn partial_transpose<T: Real>(m: &Mat4<T>, side: Side) -> Mat4<T> {
    let mut out = Mat4::zeros();
    for i in 0..2 {
        for k in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    out[(2 * i + k, 2 * j + l)] = match side {
                        Side::Second => m[(2 * i + l, 2 * j + k)],
                        Side::First => m[(2 * j + k, 2 * i + l)],
                    };
                }
            }
        }
    }
    out
}

/// `Tr[a·b]` without forming the product.
pub fn trace_product<T: Real, const N: usize>(
    a: &SquareMatrix<T, N>,
    b: &SquareMatrix<T, N>,
) -> Complex<T> {
    let mut acc = re(T::zero());
    for i in 0..N {
        for j in 0..N {
            acc += a[(i, j)] * b[(j, i)];
        }
    }
    acc
}

/// `Re Tr[ρ·O]`; the imaginary part is returned alongside as a diagnostic.
pub fn expectation_with_residual<T: Real>(
    rho: &Mat4<T>,
    obs: &Mat4<T>,
    hermiticity_tol: T,
) -> Result<(T, T)> {
    let dev = obs.hermiticity_deviation();
    if dev > hermiticity_tol {
        return Err(Error::NotHermitian {
            deviation: dev.to_f64_lossy(),
        });
    }
    let t = trace_product(rho, obs);
    Ok((t.re, t.im))
}

/// `Re Tr[ρ·O]` for a Hermitian observable `O`.
pub fn expectation<T: Real>(rho: &Mat4<T>, obs: &Mat4<T>, hermiticity_tol: T) -> Result<T> {
    expectation_with_residual(rho, obs, hermiticity_tol).map(|(v, _)| v)
}

/// Eigen-decomposition of a `4×4` Hermitian matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum<T> {
    /// Ascending.
    pub eigenvalues: [T; 4],
    /// `eigenvectors[k]` belongs to `eigenvalues[k]`; unit norm.
    pub eigenvectors: [CVector<T, 4>; 4],
    /// max_k ‖M v_k − λ_k v_k‖.
    pub residual: T,
}

impl<T: Real> Spectrum<T> {
    pub fn min(&self) -> T {
        self.eigenvalues[0]
    }

    pub fn max(&self) -> T {
        self.eigenvalues[3]
    }
}

const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi diagonalization of a real symmetric matrix.
///
/// Returns eigenvalues (unsorted) and the orthogonal matrix whose columns
/// are the matching eigenvectors.
pub fn jacobi_symmetric<T: Real, const N: usize>(
    mut a: [[T; N]; N],
) -> Result<([T; N], [[T; N]; N])> {
    let mut v = [[T::zero(); N]; N];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = T::one();
    }
    let frob = a
        .iter()
        .flatten()
        .fold(T::zero(), |acc, &x| acc + x * x)
        .sqrt();
    let threshold = T::lit(1e-13).max(T::epsilon() * T::lit(4.0) * frob);
    let off_norm = |a: &[[T; N]; N]| {
        let mut s = T::zero();
        for p in 0..N {
            for q in 0..N {
                if p != q {
                    s += a[p][q] * a[p][q];
                }
            }
        }
        s.sqrt()
    };

    for _ in 0..MAX_SWEEPS {
        if off_norm(&a) < threshold {
            let mut d = [T::zero(); N];
            for i in 0..N {
                d[i] = a[i][i];
            }
            return Ok((d, v));
        }
        for p in 0..N {
            for q in (p + 1)..N {
                let apq = a[p][q];
                if apq == T::zero() {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (T::lit(2.0) * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let cs = T::one() / (t * t + T::one()).sqrt();
                let sn = t * cs;
                for row in a.iter_mut() {
                    let (akp, akq) = (row[p], row[q]);
                    row[p] = cs * akp - sn * akq;
                    row[q] = sn * akp + cs * akq;
                }
                for k in 0..N {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = cs * apk - sn * aqk;
                    a[q][k] = sn * apk + cs * aqk;
                }
                a[p][q] = T::zero();
                a[q][p] = T::zero();
                for row in v.iter_mut() {
                    let (vkp, vkq) = (row[p], row[q]);
                    row[p] = cs * vkp - sn * vkq;
                    row[q] = sn * vkp + cs * vkq;
                }
            }
        }
    }
    Err(Error::NoConvergence {
        sweeps: MAX_SWEEPS,
        off_norm: off_norm(&a).to_f64_lossy(),
    })
}

/// Eigenvalues and eigenvectors of a Hermitian `4×4` matrix.
///
/// Diagonalizes the real-symmetric `8×8` embedding `[[Re, −Im], [Im, Re]]`,
/// whose spectrum is the complex spectrum with every eigenvalue doubled.
/// A real eigenvector `(u, v)` maps to the complex eigenvector `u + iv`; the
/// duplicate partner `(−v, u)` is dropped by complex Gram–Schmidt.
pub fn hermitian_eigen<T: Real>(m: &Mat4<T>, hermiticity_tol: T) -> Result<Spectrum<T>> {
    let dev = m.hermiticity_deviation();
    if dev > hermiticity_tol || !m.is_finite() {
        return Err(Error::NotHermitian {
            deviation: dev.to_f64_lossy(),
        });
    }
    // Symmetrize so the embedding is exactly symmetric.
    let h = (*m + m.adjoint()).scale(T::lit(0.5));
    let mut big = [[T::zero(); 8]; 8];
    for i in 0..4 {
        for j in 0..4 {
            let z = h[(i, j)];
            big[i][j] = z.re;
            big[i + 4][j + 4] = z.re;
            big[i][j + 4] = -z.im;
            big[i + 4][j] = z.im;
        }
    }
    let (vals, vecs) = jacobi_symmetric(big)?;
    let mut order: Vec<usize> = (0..8).collect();
    order.sort_by(|&x, &y| vals[x].partial_cmp(&vals[y]).expect("finite eigenvalues"));

    let zero = re(T::zero());
    let mut eigenvalues = [T::zero(); 4];
    let mut eigenvectors = [[zero; 4]; 4];
    let mut found = 0;
    for &k in &order {
        if found == 4 {
            break;
        }
        let mut z = [zero; 4];
        for i in 0..4 {
            z[i] = c(vecs[i][k], vecs[i + 4][k]);
        }
        for prev in eigenvectors.iter().take(found) {
            let overlap = inner(prev, &z);
            for i in 0..4 {
                z[i] -= prev[i] * overlap;
            }
        }
        let n = vector_norm(&z);
        if n * n > T::lit(0.5) {
            for zi in z.iter_mut() {
                *zi /= n;
            }
            eigenvalues[found] = vals[k];
            eigenvectors[found] = z;
            found += 1;
        }
    }
    if found != 4 {
        return Err(Error::NoConvergence {
            sweeps: MAX_SWEEPS,
            off_norm: f64::NAN,
        });
    }
    let mut residual = T::zero();
    for k in 0..4 {
        let mv = h.mul_vec(&eigenvectors[k]);
        let mut r = [zero; 4];
        for i in 0..4 {
            r[i] = mv[i] - eigenvectors[k][i] * eigenvalues[k];
        }
        residual = residual.max(vector_norm(&r));
    }
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
        residual,
    })
}

/// Eigenvalues only, ascending.
pub fn hermitian_eigenvalues<T: Real>(m: &Mat4<T>, hermiticity_tol: T) -> Result<[T; 4]> {
    hermitian_eigen(m, hermiticity_tol).map(|s| s.eigenvalues)
}
