use serde::{Deserialize, Serialize};

use crate::mat::{add3, csqrt, cross3, dot3, dot_sigma, scale3, CMat2, Vec3, C64, I};

/// `M = a0 * 1 + a . sigma`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PauliDecomposition {
    pub a0: C64,
    pub a: Vec3,
}

impl PauliDecomposition {
    /// Unit vector `a / sqrt(a . a)` (bilinear), if `a . a` is nonzero.
    pub fn n(&self) -> Option<Vec3> {
        let aa = dot3(&self.a, &self.a);
        if aa.norm() == 0.0 {
            return None;
        }
        let s = csqrt(aa);
        Some(scale3(s.inv(), &self.a))
    }

    pub fn n3(&self) -> Option<C64> {
        self.n().map(|n| n[2])
    }
}

pub fn pauli_decompose(m: &CMat2) -> PauliDecomposition {
    let [[m11, m12], [m21, m22]] = m.m;
    PauliDecomposition {
        a0: (m11 + m22) * 0.5,
        a: [(m12 + m21) * 0.5, I * (m12 - m21) * 0.5, (m11 - m22) * 0.5],
    }
}

pub fn pauli_compose(d: &PauliDecomposition) -> CMat2 {
    CMat2::identity() * d.a0 + dot_sigma(&d.a)
}

/// `(u.s)(v.s) = u.v + i (u x v).s`
pub fn pauli_double_product(u: &Vec3, v: &Vec3) -> (C64, Vec3) {
    (dot3(u, v), scale3(I, &cross3(u, v)))
}

/// `(u.s)(e.s)(v.s) = (u.e) v.s + (v.e) u.s - (u.v) e.s - i e.(u x v)`
pub fn pauli_triple_product(u: &Vec3, e: &Vec3, v: &Vec3) -> (C64, Vec3) {
    let scalar = -I * dot3(e, &cross3(u, v));
    let vector = add3(
        &add3(&scale3(dot3(u, e), v), &scale3(dot3(v, e), u)),
        &scale3(-dot3(u, v), e),
    );
    (scalar, vector)
}
