//! Biorthogonal (Schmidt) decomposition of pure two-qubit states.

use super::PureState;
use crate::qmat::{re, Complex, Mat2};
use crate::scalar::Real;

/// `|Ψ⟩ = r|a₀⟩|b₁⟩ − s|a₁⟩|b₀⟩` with `r ≥ s ≥ 0`, `r² + s² = 1`, where
/// `aₖ`, `bₖ` are the columns of `basis_a`, `basis_b`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchmidtForm<T> {
    pub r: T,
    pub s: T,
    pub basis_a: Mat2<T>,
    pub basis_b: Mat2<T>,
}

impl<T: Real> SchmidtForm<T> {
    pub fn is_product(&self, tol: T) -> bool {
        self.s <= tol
    }

    pub fn reconstruct(&self) -> [Complex<T>; 4] {
        let col = |m: &Mat2<T>, k: usize| [m[(0, k)], m[(1, k)]];
        let (a0, a1) = (col(&self.basis_a, 0), col(&self.basis_a, 1));
        let (b0, b1) = (col(&self.basis_b, 0), col(&self.basis_b, 1));
        let mut out = [re(T::zero()); 4];
        for i in 0..2 {
            for k in 0..2 {
                out[2 * i + k] = a0[i] * b1[k] * self.r - a1[i] * b0[k] * self.s;
            }
        }
        out
    }
}

fn perp<T: Real>(u: [Complex<T>; 2]) -> [Complex<T>; 2] {
    [-u[1].conj(), u[0].conj()]
}

fn unit<T: Real>(v: [Complex<T>; 2]) -> [Complex<T>; 2] {
    let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    [v[0] / n, v[1] / n]
}

fn columns<T: Real>(u: [Complex<T>; 2], v: [Complex<T>; 2]) -> Mat2<T> {
    Mat2::from_rows([[u[0], v[0]], [u[1], v[1]]])
}

/// Schmidt decomposition from the singular values of the amplitude matrix
/// `C = [[a, b], [c, d]]`.
///
/// `r·s = |det C| = |ad − bc|` holds by construction, so `s` keeps full
/// relative accuracy for nearly-product states.
pub fn schmidt<T: Real>(psi: &PureState<T>) -> SchmidtForm<T> {
    let [a, b, cc, d] = *psi.amplitudes();
    let det = (a * d - b * cc).norm();
    let half = T::lit(0.5);
    let disc = (T::one() - T::lit(4.0) * det * det).max(T::zero()).sqrt();
    let r = ((T::one() + disc) * half).sqrt();
    let s = det / r;

    // Leading right-singular vector: eigenvector of C†C for eigenvalue r².
    let h00 = a.norm_sqr() + cc.norm_sqr();
    let h11 = b.norm_sqr() + d.norm_sqr();
    let h01 = a.conj() * b + cc.conj() * d;
    let lambda = r * r;
    let v1 = [h01, re(lambda - h00)];
    let v2 = [re(lambda - h11), h01.conj()];
    let n1 = v1[0].norm_sqr() + v1[1].norm_sqr();
    let n2 = v2[0].norm_sqr() + v2[1].norm_sqr();
    let floor = T::epsilon() * T::lit(64.0);
    let w0 = if n1.max(n2) <= floor * floor {
        [re(T::one()), re(T::zero())]
    } else if n1 >= n2 {
        unit(v1)
    } else {
        unit(v2)
    };
    let apply = |w: [Complex<T>; 2]| [a * w[0] + b * w[1], cc * w[0] + d * w[1]];
    let u0 = unit(apply(w0));
    let u1 = perp(u0);
    let mut w1 = perp(w0);
    let cw1 = apply(w1);
    let z = u1[0].conj() * cw1[0] + u1[1].conj() * cw1[1];
    if z.norm() > T::zero() {
        let phase = z.conj() / z.norm();
        w1 = [w1[0] * phase, w1[1] * phase];
    }
    let b1 = [w0[0].conj(), w0[1].conj()];
    let b0 = [-w1[0].conj(), -w1[1].conj()];
    SchmidtForm {
        r,
        s,
        basis_a: columns(u0, u1),
        basis_b: columns(b0, b1),
    }
}
