//! The obstruction pipeline: carrier detection, the three-tiling
//! classification, counting obstructions, exact inequality audits, and
//! half-edge orbit analysis.

pub mod audit;
pub mod orbits;
pub mod pairs;
pub mod patch;
pub mod risc;
pub mod slop;

pub use risc::{find_riscs, Risc, RiscKind};

use num_bigint::BigInt;
use num_integer::Integer;
use thiserror::Error;

use crate::sqrt3::SqrtThreeRat;
use crate::tiling::TilingError;

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("group contains no order-3 rotation")]
    NoOrderThree,
    #[error("square not covered by any carrier: {square}")]
    SquareNotCovered { square: String },
    #[error("tiling error: {0}")]
    Tiling(#[from] TilingError),
    #[error("rotation centers do not form a triangular lattice: {0}")]
    BadCenterLattice(String),
    #[error("patch search exceeded its budget: {explored} states explored")]
    SearchBudget { explored: usize },
    #[error("patch search radius {radius} exceeds the cap {cap}")]
    RadiusCap { radius: String, cap: String },
    #[error("carrier extension failed to tile: {0}")]
    ExtensionFailed(String),
}

/// Tetrahedron-type counts for the counting obstruction: `a` tetrahedra
/// surrounded by tetrahedra, `b` with two octahedral neighbors, `c` with
/// one; `d` squares and `sigma` octahedra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TetTypeCounts {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
    pub sigma: BigInt,
    pub sigma_even: bool,
}

/// Solves the triangle-type counting system for a pattern with `d` squares:
///
/// d = 2b + 3c (OTT triangles), d = 2b (OOT), d = 3(4a + c) (TTT).
///
/// The first two force c = 0, then a = d/12 and b = d/2, so solutions exist
/// exactly when 12 divides d. Also reports sigma = d/6 and its parity.
pub fn noace_count_solver(d: u64) -> Option<TetTypeCounts> {
    let d = BigInt::from(d);
    // c = 0 from the first two equations.
    let (a, ra) = d.div_rem(&BigInt::from(12));
    let (b, rb) = d.div_rem(&BigInt::from(2));
    let (sigma, rs) = d.div_rem(&BigInt::from(6));
    if !ra.is_zero() || !rb.is_zero() || !rs.is_zero() {
        return None;
    }
    let sigma_even = (&sigma % BigInt::from(2)).is_zero();
    Some(TetTypeCounts { a, b, c: BigInt::from(0), d, sigma, sigma_even })
}

/// Result of the fundamental-domain area obstruction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AreaObstruction {
    /// Exact area ell_sq * sqrt3 / 2.
    pub area: SqrtThreeRat,
    /// The unique (n1, n2) with n1 * sqrt3/4 + n2 = area and n1, n2 >= 1,
    /// when it exists.
    pub solution: Option<(BigInt, BigInt)>,
}

/// Computes the area of a fundamental domain for a hexagonal translation
/// lattice of squared length `ell_sq` and matches it against counts of unit
/// triangles and squares: n1 * sqrt3/4 + n2 = ell_sq * sqrt3/2 with
/// n1, n2 >= 1 integers. No solution excludes the translation length.
pub fn area_obstruction(ell_sq: &SqrtThreeRat) -> AreaObstruction {
    assert!(ell_sq.is_positive(), "translation length must be positive");
    let area = ell_sq * &SqrtThreeRat::new(crate::sqrt3::int(0), crate::sqrt3::rat(1, 2));
    // area = q + p*sqrt3 must match n2 + (n1/4) sqrt3.
    let n2 = &area.a;
    let n1 = &area.b * crate::sqrt3::int(4);
    let ok = n1.denom().is_one()
        && n2.denom().is_one()
        && n1.numer() >= &BigInt::from(1)
        && n2.numer() >= &BigInt::from(1);
    AreaObstruction {
        area: area.clone(),
        solution: if ok {
            Some((n1.numer().clone(), n2.numer().clone()))
        } else {
            None
        },
    }
}

/// The triangular lattice formed by order-3 rotation centers.
#[derive(Debug, Clone)]
pub struct RotationCenterLattice {
    /// One center chosen as the origin of the description.
    pub origin: crate::cyclo::CycNum,
    /// Side vector of the equilateral lattice; side^2 = t^2 / 3.
    pub side: crate::cyclo::CycNum,
    pub side_sq: SqrtThreeRat,
    /// Covering radius^2 = t^2 / 9: every point lies this close to a center.
    pub covering_radius_sq: SqrtThreeRat,
    /// Number of center classes per translation period (always 3).
    pub centers_per_period: usize,
}

/// Verifies that the order-3 fixed points of the group form the vertex set
/// of an equilateral triangulation with side t/sqrt(3), t the minimal
/// translation length, and returns that lattice.
pub fn rotation_center_lattice(
    group: &crate::tiling::SymmetryGroup,
) -> Result<RotationCenterLattice, ClassifyError> {
    use crate::cyclo::CycNum;
    use num_rational::BigRational;

    let centers = group.order3_centers();
    if centers.is_empty() {
        return Err(ClassifyError::NoOrderThree);
    }
    let t_sq = group.min_translation_sq.clone();
    let side_sq = &t_sq / &SqrtThreeRat::from_int(3);

    // Gather all centers in a 3x3 block of periods and find the lattice they
    // generate from a fixed origin.
    let (b1, b2) = group.lattice.basis();
    let origin = centers[0].clone();
    let mut points: Vec<CycNum> = Vec::new();
    for c in &centers {
        for k1 in -1i64..=1 {
            for k2 in -1i64..=1 {
                let shift = b1.scale(&BigRational::from_integer(BigInt::from(k1)))
                    + b2.scale(&BigRational::from_integer(BigInt::from(k2)));
                points.push(&(c + &shift) - &origin);
            }
        }
    }
    // Shortest nonzero difference is the side vector.
    let side = points
        .iter()
        .filter(|p| !p.is_zero())
        .min_by(|a, b| a.norm_sq().cmp(&b.norm_sq()).then(a.lex_cmp(b)))
        .expect("more than one center")
        .clone();
    if side.norm_sq() != side_sq {
        return Err(ClassifyError::BadCenterLattice(format!(
            "shortest center distance^2 is {}, want t^2/3 = {}",
            side.norm_sq(),
            side_sq
        )));
    }
    // The triangular lattice spanned by `side` and its 60-degree rotation
    // must contain every center difference, and conversely every lattice
    // point within the sampled block must be a center.
    let tri = crate::tiling::Lattice::new(side.clone(), &CycNum::omega() * &side)
        .expect("side vector nonzero");
    for p in &points {
        if !tri.contains(p) {
            return Err(ClassifyError::BadCenterLattice(format!(
                "center offset {p} is not in the triangular lattice"
            )));
        }
    }
    // Index check: 3 center classes per translation period.
    let per_period = (&group.lattice.covolume() / &tri.covolume()).a.clone();
    if per_period != BigRational::from_integer(BigInt::from(3)) {
        return Err(ClassifyError::BadCenterLattice(format!(
            "{per_period} centers per period, want 3"
        )));
    }
    let covering_radius_sq = &t_sq / &SqrtThreeRat::from_int(9);
    Ok(RotationCenterLattice {
        origin,
        side,
        side_sq,
        covering_radius_sq,
        centers_per_period: 3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn noace_solutions() {
        let s = noace_count_solver(12).unwrap();
        assert_eq!(
            (s.a, s.b, s.c, s.sigma.clone()),
            (BigInt::from(1), BigInt::from(6), BigInt::from(0), BigInt::from(2))
        );
        assert!(s.sigma_even);
        assert!(noace_count_solver(6).is_none());
        let s24 = noace_count_solver(24).unwrap();
        assert_eq!((s24.a, s24.b), (BigInt::from(2), BigInt::from(12)));
        for d in 1..100u64 {
            assert_eq!(noace_count_solver(d).is_some(), d % 12 == 0, "d = {d}");
        }
    }

    #[test]
    fn area_obstruction_cases() {
        // ell^2 = 2 + sqrt3: area sqrt3 + 3/2, no integer decomposition.
        let r = area_obstruction(&SqrtThreeRat::from_parts(2, 1, 1, 1));
        assert_eq!(r.area, SqrtThreeRat::from_parts(3, 2, 1, 1));
        assert!(r.solution.is_none());
        // ell^2 = 7 + 4 sqrt3: area 6 + (7/2) sqrt3 = 14 * sqrt3/4 + 6.
        let r = area_obstruction(&SqrtThreeRat::from_parts(7, 1, 4, 1));
        assert_eq!(r.area, SqrtThreeRat::from_parts(6, 1, 7, 2));
        assert_eq!(r.solution, Some((BigInt::from(14), BigInt::from(6))));
        // ell^2 = 4: area 2 sqrt3 needs n2 = 0, rejected.
        let r = area_obstruction(&SqrtThreeRat::from_int(4));
        assert!(r.solution.is_none());
    }
}
