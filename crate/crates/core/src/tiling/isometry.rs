//! Planar isometries with exact data: z -> zeta^k z + t, optionally composed
//! with complex conjugation.

use crate::cyclo::CycNum;

/// z -> zeta^rot * z + trans (direct), or z -> zeta^rot * conj(z) + trans
/// (reflective). Rotations are twelfth-of-a-turn multiples.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarIsometry {
    pub rot: u8,
    pub reflect: bool,
    pub trans: CycNum,
}

impl PlanarIsometry {
    pub fn identity() -> Self {
        PlanarIsometry { rot: 0, reflect: false, trans: CycNum::zero() }
    }

    pub fn translation(t: CycNum) -> Self {
        PlanarIsometry { rot: 0, reflect: false, trans: t }
    }

    /// Rotation by k twelfths of a turn about `center`.
    pub fn rotation_about(center: &CycNum, k: u8) -> Self {
        let u = CycNum::zeta_pow(k as i64);
        let trans = center - &(&u * center);
        PlanarIsometry { rot: k % 12, reflect: false, trans }
    }

    /// Reflection (or glide) z -> zeta^k conj(z) + t fixing `anchor` when
    /// t is chosen so that anchor maps to itself.
    pub fn reflection_fixing(anchor: &CycNum, k: u8) -> Self {
        let u = CycNum::zeta_pow(k as i64);
        let trans = anchor - &(&u * &anchor.conj());
        PlanarIsometry { rot: k % 12, reflect: true, trans }
    }

    pub fn apply(&self, z: &CycNum) -> CycNum {
        let zz = if self.reflect { z.conj() } else { z.clone() };
        &CycNum::zeta_pow(self.rot as i64) * &zz + &self.trans
    }

    pub fn compose(&self, inner: &Self) -> Self {
        // self(inner(z))
        let u = CycNum::zeta_pow(self.rot as i64);
        if inner.reflect {
            // self(u' conj z + t') with possible outer conj
            if self.reflect {
                // conj(u' conj z + t') = conj(u') z + conj(t')
                PlanarIsometry {
                    rot: (self.rot + 12 - inner.rot % 12) % 12,
                    reflect: false,
                    trans: &u * &inner.trans.conj() + &self.trans,
                }
            } else {
                PlanarIsometry {
                    rot: (self.rot + inner.rot) % 12,
                    reflect: true,
                    trans: &u * &inner.trans + &self.trans,
                }
            }
        } else if self.reflect {
            PlanarIsometry {
                rot: (self.rot + 12 - inner.rot % 12) % 12,
                reflect: true,
                trans: &u * &inner.trans.conj() + &self.trans,
            }
        } else {
            PlanarIsometry {
                rot: (self.rot + inner.rot) % 12,
                reflect: false,
                trans: &u * &inner.trans + &self.trans,
            }
        }
    }

    pub fn inverse(&self) -> Self {
        if self.reflect {
            // (u conj z + t)^-1: z -> conj(u^-1 (z - t)) = conj(u^-1) conj z - conj(u^-1 t)
            let uinv = CycNum::zeta_pow(-(self.rot as i64));
            let m = (&uinv * &self.trans).conj();
            PlanarIsometry {
                rot: (12 - self.rot % 12) % 12,
                reflect: true,
                trans: -m,
            }
        } else {
            let uinv = CycNum::zeta_pow(-(self.rot as i64));
            PlanarIsometry {
                rot: (12 - self.rot % 12) % 12,
                reflect: false,
                trans: -(&uinv * &self.trans),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_inverse() {
        let isos = [
            PlanarIsometry::rotation_about(&CycNum::omega(), 4),
            PlanarIsometry::rotation_about(&CycNum::one().div_int(3), 2),
            PlanarIsometry::reflection_fixing(&CycNum::i(), 5),
            PlanarIsometry::translation(CycNum::sqrt3()),
        ];
        let z = CycNum::from_coeffs_i64([1, 2, -1, 3]);
        for a in &isos {
            assert_eq!(a.inverse().apply(&a.apply(&z)), z);
            for b in &isos {
                let direct = a.apply(&b.apply(&z));
                let composed = a.compose(b).apply(&z);
                assert_eq!(direct, composed, "compose mismatch");
            }
        }
    }

    #[test]
    fn rotation_fixes_center() {
        let c = CycNum::omega().div_int(3) + CycNum::one();
        let r = PlanarIsometry::rotation_about(&c, 4);
        assert_eq!(r.apply(&c), c);
        // Order three.
        let r3 = r.compose(&r).compose(&r);
        assert_eq!(r3, PlanarIsometry::identity());
    }

    #[test]
    fn reflection_fixes_anchor() {
        let p = CycNum::one() + CycNum::i();
        let m = PlanarIsometry::reflection_fixing(&p, 6);
        assert_eq!(m.apply(&p), p);
        assert_eq!(m.compose(&m), PlanarIsometry::identity());
    }
}
