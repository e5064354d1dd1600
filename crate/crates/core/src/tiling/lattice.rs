//! Translation lattices spanned by two plane vectors with exact coordinates.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::cyclo::CycNum;
use crate::geom::cross;
use crate::sqrt3::SqrtThreeRat;

use super::TilingError;

/// Rank-2 lattice Z*t1 + Z*t2 in the plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    t1: CycNum,
    t2: CycNum,
    det: SqrtThreeRat,
}

impl Lattice {
    pub fn new(t1: CycNum, t2: CycNum) -> Result<Self, TilingError> {
        let det = cross(&t1, &t2);
        if det.is_zero() {
            return Err(TilingError::DegenerateBasis {
                t1: t1.to_string(),
                t2: t2.to_string(),
            });
        }
        Ok(Lattice { t1, t2, det })
    }

    pub fn basis(&self) -> (&CycNum, &CycNum) {
        (&self.t1, &self.t2)
    }

    /// Area of the fundamental parallelogram.
    pub fn covolume(&self) -> SqrtThreeRat {
        self.det.abs()
    }

    /// Real coordinates (s, t) with z = s*t1 + t*t2, solved exactly in Q(sqrt3).
    pub fn coords(&self, z: &CycNum) -> (SqrtThreeRat, SqrtThreeRat) {
        let s = &cross(z, &self.t2) / &self.det;
        let t = &cross(&self.t1, z) / &self.det;
        (s, t)
    }

    /// Lattice vector k1*t1 + k2*t2.
    pub fn vector(&self, k1: &BigInt, k2: &BigInt) -> CycNum {
        self.t1.scale(&BigRational::from_integer(k1.clone()))
            + self.t2.scale(&BigRational::from_integer(k2.clone()))
    }

    /// Translates `z` by a lattice vector so its coordinates land in [0,1)^2.
    /// Returns the representative and the applied lattice vector.
    pub fn reduce(&self, z: &CycNum) -> (CycNum, CycNum) {
        let (s, t) = self.coords(z);
        let k1 = s.floor();
        let k2 = t.floor();
        let shift = self.vector(&k1, &k2);
        (z - &shift, shift)
    }

    /// True iff z is a lattice vector.
    pub fn contains(&self, z: &CycNum) -> bool {
        let (s, t) = self.coords(z);
        is_integer(&s) && is_integer(&t)
    }

    /// Lagrange-reduced basis: u shortest, |dot(u, v)| <= |u|^2 / 2.
    pub fn reduced_basis(&self) -> (CycNum, CycNum) {
        let mut u = self.t1.clone();
        let mut v = self.t2.clone();
        loop {
            if v.norm_sq() < u.norm_sq() {
                std::mem::swap(&mut u, &mut v);
            }
            let mu = (&crate::geom::dot(&u, &v) / &u.norm_sq()).round();
            if mu == BigInt::from(0) {
                break;
            }
            v = &v - &u.scale(&BigRational::from_integer(mu));
        }
        (u, v)
    }

    /// Exact squared length of the shortest nonzero lattice vector.
    pub fn shortest_sq(&self) -> SqrtThreeRat {
        self.reduced_basis().0.norm_sq()
    }

    /// All bases (w1, w2) with positive orientation realizing the successive
    /// minima; used for canonical forms. Every minimal vector of a
    /// Lagrange-reduced lattice is a small combination of the reduced basis.
    pub fn minimal_bases(&self) -> Vec<(CycNum, CycNum)> {
        let (u, v) = self.reduced_basis();
        let mut cands: Vec<CycNum> = Vec::new();
        for a in -2i64..=2 {
            for b in -2i64..=2 {
                if a == 0 && b == 0 {
                    continue;
                }
                let w = u.scale(&BigRational::from_integer(BigInt::from(a)))
                    + v.scale(&BigRational::from_integer(BigInt::from(b)));
                cands.push(w);
            }
        }
        let m1 = cands.iter().map(|w| w.norm_sq()).min().unwrap();
        let shortest: Vec<&CycNum> = cands.iter().filter(|w| w.norm_sq() == m1).collect();
        let mut out = Vec::new();
        let covol = self.covolume();
        for w1 in &shortest {
            // Second vector: minimal norm among candidates completing a basis.
            let mut best: Option<&CycNum> = None;
            for w2 in &cands {
                if cross(w1, w2).abs() != covol {
                    continue;
                }
                match best {
                    None => best = Some(w2),
                    Some(b) if w2.norm_sq() < b.norm_sq() => best = Some(w2),
                    _ => {}
                }
            }
            let m2 = best.expect("reduced basis must complete").norm_sq();
            for w2 in &cands {
                if w2.norm_sq() == m2 && cross(w1, w2) == covol {
                    out.push(((*w1).clone(), w2.clone()));
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Checks (s1, s2) spans a finite-index sublattice; returns the index.
    pub fn sublattice_index(&self, s1: &CycNum, s2: &CycNum) -> Result<BigInt, TilingError> {
        if !self.contains(s1) || !self.contains(s2) {
            return Err(TilingError::NotASublattice(format!("{s1}; {s2}")));
        }
        let sub_det = cross(s1, s2);
        if sub_det.is_zero() {
            return Err(TilingError::NotASublattice("degenerate sub-basis".into()));
        }
        let ratio = &sub_det.abs() / &self.det.abs();
        if !is_integer(&ratio) {
            return Err(TilingError::NotASublattice(format!(
                "index {ratio:?} is not an integer"
            )));
        }
        Ok(ratio.a.to_integer())
    }
}

fn is_integer(x: &SqrtThreeRat) -> bool {
    x.is_rational() && x.a.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hex_lattice() -> Lattice {
        Lattice::new(CycNum::one(), CycNum::omega()).unwrap()
    }

    #[test]
    fn degenerate_rejected() {
        let got = Lattice::new(CycNum::one(), CycNum::from_int(-3));
        assert!(matches!(got, Err(TilingError::DegenerateBasis { .. })));
    }

    #[test]
    fn coords_and_reduce() {
        let l = hex_lattice();
        let z = CycNum::from_int(5) + CycNum::omega().scale(&crate::sqrt3::rat(-7, 2));
        let (s, t) = l.coords(&z);
        assert_eq!(s, SqrtThreeRat::from_int(5));
        assert_eq!(t, SqrtThreeRat::from_parts(-7, 2, 0, 1));
        let (red, shift) = l.reduce(&z);
        assert_eq!(&red + &shift, z);
        let (s, t) = l.coords(&red);
        assert!(s.signum() >= 0 && s < SqrtThreeRat::one());
        assert!(t.signum() >= 0 && t < SqrtThreeRat::one());
    }

    #[test]
    fn lagrange_shortest() {
        // Badly skewed basis of the hexagonal lattice.
        let t1 = CycNum::from_int(5) + CycNum::omega().scale(&crate::sqrt3::int(3));
        let t2 = CycNum::from_int(7) + CycNum::omega().scale(&crate::sqrt3::int(4));
        let l = Lattice::new(t1, t2).unwrap();
        assert_eq!(l.covolume(), hex_lattice().covolume());
        assert_eq!(l.shortest_sq(), SqrtThreeRat::one());
        // Hexagonal lattice has 6 minimal vectors -> several minimal bases.
        assert!(l.minimal_bases().len() >= 6);
        for (w1, w2) in l.minimal_bases() {
            assert_eq!(cross(&w1, &w2), l.covolume());
            assert!(l.contains(&w1) && l.contains(&w2));
        }
    }

    #[test]
    fn sublattice_indices() {
        let l = hex_lattice();
        let idx = l
            .sublattice_index(&CycNum::from_int(2), &(CycNum::omega() + CycNum::one()))
            .unwrap();
        assert_eq!(idx, BigInt::from(2));
        assert!(l.sublattice_index(&CycNum::one().div_int(2), &CycNum::omega()).is_err());
    }
}
