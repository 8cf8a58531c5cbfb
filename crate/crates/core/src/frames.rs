//! Locally orthogonal spin triples, setting pairs and the operator octet.

use std::collections::BTreeMap;
use std::f64::consts::FRAC_PI_4;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg3::{self, Mat3, Vec3};
use crate::qmat::{c, kron, pauli, Mat2, Mat4};
use crate::scalar::Real;

/// `n·σ` for a unit vector `n`.
pub fn spin_operator<T: Real>(n: &Vec3<T>, tol: T) -> Result<Mat2<T>> {
    let dev = (linalg3::norm(n) - T::one()).abs();
    if !(dev <= tol) {
        return Err(Error::NotUnit {
            deviation: dev.to_f64_lossy(),
        });
    }
    Ok(spin_operator_unchecked(n))
}

/// `n·σ` without the unit-length check.
pub fn spin_operator_unchecked<T: Real>(n: &Vec3<T>) -> Mat2<T> {
    pauli::<T>(1).scale(n[0]) + pauli(2).scale(n[1]) + pauli(3).scale(n[2])
}

/// An ordered orthonormal triple of spin directions `(A, A′, A″)`.
///
/// Rows of `axes` are the three directions; `handedness` is `det(axes)`.
/// A right-handed triple satisfies `[A, A′] = 2iA″`, a left-handed one
/// `[A, A′] = −2iA″`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpinTriple<T> {
    axes: Mat3<T>,
    handedness: i8,
}

impl<T: Real> SpinTriple<T> {
    pub fn from_matrix(axes: Mat3<T>, tol: T) -> Result<Self> {
        let finite = axes.iter().flatten().all(|x| x.is_finite());
        let dev = if finite {
            linalg3::gram_deviation(&axes)
        } else {
            T::infinity()
        };
        if !(dev <= tol) {
            return Err(Error::NotOrthonormal {
                deviation: dev.to_f64_lossy(),
            });
        }
        let handedness = if linalg3::det(&axes) < T::zero() { -1 } else { 1 };
        let triple = Self { axes, handedness };
        let odev = triple.orientation_deviation();
        if odev > T::lit(8.0) * tol.max(T::epsilon()) {
            return Err(Error::OrientationMismatch {
                deviation: odev.to_f64_lossy(),
            });
        }
        Ok(triple)
    }

    /// `(σx, σy, σz)`.
    pub fn pauli() -> Self {
        Self {
            axes: linalg3::identity(),
            handedness: 1,
        }
    }

    /// Columns of the proper rotation `r` as `(A, A′)`, and `handedness`
    /// times the third column as `A″`.
    pub fn from_rotation(r: &Mat3<T>, handedness: i8) -> Self {
        let h = if handedness < 0 { -T::one() } else { T::one() };
        let mut axes = linalg3::transpose(r);
        axes[2] = linalg3::scale(&axes[2], h);
        Self {
            axes,
            handedness: if handedness < 0 { -1 } else { 1 },
        }
    }

    pub fn axes(&self) -> &Mat3<T> {
        &self.axes
    }

    pub fn axis(&self, k: usize) -> &Vec3<T> {
        &self.axes[k]
    }

    pub fn handedness(&self) -> i8 {
        self.handedness
    }

    /// The 2×2 observables `(A, A′, A″)`.
    pub fn observables(&self) -> [Mat2<T>; 3] {
        [0, 1, 2].map(|k| spin_operator_unchecked(&self.axes[k]))
    }

    /// `max |[A, A′] − 2i·h·A″|` over the entries.
    pub fn orientation_deviation(&self) -> T {
        let [a, a1, a2] = self.observables();
        let h = T::lit(f64::from(self.handedness));
        let expected = a2.scale_c(c(T::zero(), T::lit(2.0) * h));
        a.commutator(&a1).max_abs_diff(&expected)
    }

    /// `(A, −A′, −A″)`. Applying it to one side of a pair exchanges the
    /// roles of the tilde and plain octet members.
    pub fn flip_orientation(&self) -> Self {
        let mut axes = self.axes;
        axes[1] = linalg3::neg(&axes[1]);
        axes[2] = linalg3::neg(&axes[2]);
        Self {
            axes,
            handedness: self.handedness,
        }
    }

    /// Each axis mapped through the rotation `r` (conjugation `U n·σ U†`).
    pub fn rotated(&self, r: &Mat3<T>) -> Self {
        let axes = self.axes.map(|row| linalg3::mat_vec(r, &row));
        let handedness = if linalg3::det(r) < T::zero() {
            -self.handedness
        } else {
            self.handedness
        };
        Self { axes, handedness }
    }

    /// `(A, A′)` rotated by `angle` about `A″`, `A″` unchanged.
    pub fn rotated_in_plane(&self, angle: T) -> Self {
        let (s, co) = angle.sin_cos();
        let [a, a1, a2] = self.axes;
        Self {
            axes: [
                linalg3::add(&linalg3::scale(&a, co), &linalg3::scale(&a1, s)),
                linalg3::sub(&linalg3::scale(&a1, co), &linalg3::scale(&a, s)),
                a2,
            ],
            handedness: self.handedness,
        }
    }
}

/// Triples for particles 1 and 2.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SettingPair<T> {
    pub a: SpinTriple<T>,
    pub b: SpinTriple<T>,
}

impl<T: Real> SettingPair<T> {
    pub fn new(a: SpinTriple<T>, b: SpinTriple<T>) -> Self {
        Self { a, b }
    }

    pub fn pauli() -> Self {
        Self::new(SpinTriple::pauli(), SpinTriple::pauli())
    }

    /// `(−σx, −σy, −σz)` on particle 1 and `(σx, σy, σz)` on particle 2: the
    /// spin parts of the reference LOO bases.
    pub fn negated_pauli() -> Self {
        let minus = SpinTriple {
            axes: linalg3::diag([-T::one(); 3]),
            handedness: -1,
        };
        Self::new(minus, SpinTriple::pauli())
    }

    pub fn same_orientation(&self) -> bool {
        self.a.handedness == self.b.handedness
    }
}

/// The eight two-qubit operators built from a setting pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OperatorOctet<T> {
    pub i: Mat4<T>,
    pub i_t: Mat4<T>,
    pub x: Mat4<T>,
    pub x_t: Mat4<T>,
    pub y: Mat4<T>,
    pub y_t: Mat4<T>,
    pub z: Mat4<T>,
    pub z_t: Mat4<T>,
}

impl<T: Real> OperatorOctet<T> {
    pub const NAMES: [&'static str; 8] = ["I", "I~", "X", "X~", "Y", "Y~", "Z", "Z~"];

    /// Members in the order of [`Self::NAMES`].
    pub fn members(&self) -> [&Mat4<T>; 8] {
        [
            &self.i, &self.i_t, &self.x, &self.x_t, &self.y, &self.y_t, &self.z, &self.z_t,
        ]
    }
}

/// `I = ½(𝟙 + A″B″)`, `Ĩ = ½(𝟙 − A″B″)`, `X = ½(AB − A′B′)`,
/// `X̃ = ½(AB + A′B′)`, `Y = ½(A′B + AB′)`, `Ỹ = ½(A′B − AB′)`,
/// `Z = ½(A″ + B″)`, `Z̃ = ½(A″ − B″)`.
pub fn eight_operators<T: Real>(pair: &SettingPair<T>) -> OperatorOctet<T> {
    let [a, a1, a2] = pair.a.observables();
    let [b, b1, b2] = pair.b.observables();
    let one = Mat2::identity();
    let half = T::lit(0.5);
    let id = Mat4::identity();
    let ab = kron(&a, &b);
    let a1b1 = kron(&a1, &b1);
    let a1b = kron(&a1, &b);
    let ab1 = kron(&a, &b1);
    let a2b2 = kron(&a2, &b2);
    let a2 = kron(&a2, &one);
    let b2 = kron(&one, &b2);
    OperatorOctet {
        i: (id + a2b2).scale(half),
        i_t: (id - a2b2).scale(half),
        x: (ab - a1b1).scale(half),
        x_t: (ab + a1b1).scale(half),
        y: (a1b + ab1).scale(half),
        y_t: (a1b - ab1).scale(half),
        z: (a2 + b2).scale(half),
        z_t: (a2 - b2).scale(half),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedSetting {
    Alpha,
    Beta,
    Gamma,
    BetaPrime,
    GammaPrime,
    BetaPrimeLiteral,
    GammaPrimeLiteral,
}

impl NamedSetting {
    pub const ALL: [NamedSetting; 7] = [
        NamedSetting::Alpha,
        NamedSetting::Beta,
        NamedSetting::Gamma,
        NamedSetting::BetaPrime,
        NamedSetting::GammaPrime,
        NamedSetting::BetaPrimeLiteral,
        NamedSetting::GammaPrimeLiteral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedSetting::Alpha => "alpha",
            NamedSetting::Beta => "beta",
            NamedSetting::Gamma => "gamma",
            NamedSetting::BetaPrime => "beta_prime",
            NamedSetting::GammaPrime => "gamma_prime",
            NamedSetting::BetaPrimeLiteral => "beta_prime_literal",
            NamedSetting::GammaPrimeLiteral => "gamma_prime_literal",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.name() == name)
    }

    pub fn pair<T: Real>(self) -> SettingPair<T> {
        let x = [T::one(), T::zero(), T::zero()];
        let y = [T::zero(), T::one(), T::zero()];
        let z = [T::zero(), T::zero(), T::one()];
        let n = linalg3::neg::<T>;
        let both = |axes: Mat3<T>| {
            let t = triple(axes);
            SettingPair::new(t, t)
        };
        match self {
            NamedSetting::Alpha => both([x, y, z]),
            NamedSetting::Beta => both([z, y, x]),
            NamedSetting::Gamma => both([z, x, y]),
            NamedSetting::BetaPrime => SettingPair::new(triple([z, y, x]), triple([x, y, n(&z)])),
            NamedSetting::GammaPrime => SettingPair::new(triple([z, x, y]), triple([n(&y), x, z])),
            NamedSetting::BetaPrimeLiteral => {
                let u = rotation_u();
                SettingPair::new(triple([z, y, x]).rotated(&u), triple([z, y, x]))
            }
            NamedSetting::GammaPrimeLiteral => {
                let vu = rotation_vu();
                SettingPair::new(triple([z, x, y]).rotated(&vu), triple([z, x, y]))
            }
        }
    }
}

fn triple<T: Real>(axes: Mat3<T>) -> SpinTriple<T> {
    let handedness = if linalg3::det(&axes) < T::zero() { -1 } else { 1 };
    SpinTriple { axes, handedness }
}

/// 45° about the y axis.
pub fn rotation_u<T: Real>() -> Mat3<T> {
    linalg3::rotation_about(&[T::zero(), T::one(), T::zero()], T::lit(FRAC_PI_4))
}

/// 45° about the y axis followed by 45° about the z axis.
pub fn rotation_vu<T: Real>() -> Mat3<T> {
    let v = linalg3::rotation_about(&[T::zero(), T::zero(), T::one()], T::lit(FRAC_PI_4));
    linalg3::mat_mul(&v, &rotation_u())
}

/// The five pairs α, β, γ, β′, γ′ keyed by name.
pub fn named_triples<T: Real>() -> BTreeMap<&'static str, SettingPair<T>> {
    [
        NamedSetting::Alpha,
        NamedSetting::Beta,
        NamedSetting::Gamma,
        NamedSetting::BetaPrime,
        NamedSetting::GammaPrime,
    ]
    .into_iter()
    .map(|s| (s.name(), s.pair()))
    .collect()
}
