//! The two rotation-invariant square carriers: fixed tile configurations,
//! each invariant under an order-3 rotation about a triangle centroid, that
//! together must contain every square of a tiling admitting order-3 symmetry
//! and a short translation.

use std::sync::OnceLock;

use crate::cyclo::CycNum;
use crate::geom::point_segment_dist_sq;
use crate::sqrt3::SqrtThreeRat;
use crate::tiling::{PeriodicTiling, PlanarIsometry, SymmetryGroup, Tile, TileKind};

use super::ClassifyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RiscKind {
    /// Small carrier: a triangle ringed by three squares and six triangles
    /// (ten tiles). Carries an open disk of radius 1 + 1/(2 sqrt3).
    LeftType,
    /// Large carrier: sixteen tiles, two squares per arm. Carries an open
    /// disk of radius 1 + 1/sqrt3.
    RightType,
}

impl RiscKind {
    pub fn inscribed_radius_sq(self) -> SqrtThreeRat {
        match self {
            // (1 + 1/(2 sqrt3))^2 = 13/12 + (1/3) sqrt3
            RiscKind::LeftType => SqrtThreeRat::new(
                crate::sqrt3::rat(13, 12),
                crate::sqrt3::rat(1, 3),
            ),
            // (1 + 1/sqrt3)^2 = 4/3 + (2/3) sqrt3
            RiscKind::RightType => SqrtThreeRat::new(
                crate::sqrt3::rat(4, 3),
                crate::sqrt3::rat(2, 3),
            ),
        }
    }
}

impl std::fmt::Display for RiscKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RiscKind::LeftType => write!(f, "left"),
            RiscKind::RightType => write!(f, "right"),
        }
    }
}

/// A placed carrier: template tiles rotated by zeta^rotation about the
/// origin, then translated so the invariant centroid sits at `center`.
#[derive(Clone, Debug)]
pub struct Risc {
    pub kind: RiscKind,
    pub center: CycNum,
    pub rotation: u8,
    pub tiles: Vec<Tile>,
}

impl Risc {
    pub fn place(kind: RiscKind, center: &CycNum, rotation: u8) -> Risc {
        let iso = PlanarIsometry {
            rot: rotation % 12,
            reflect: false,
            trans: center.clone(),
        };
        let tiles = template(kind).iter().map(|t| t.transformed(&iso)).collect();
        Risc { kind, center: center.clone(), rotation: rotation % 12, tiles }
    }

    pub fn squares(&self) -> impl Iterator<Item = &Tile> {
        self.tiles.iter().filter(|t| t.kind() == TileKind::Square)
    }
}

fn pt(re: SqrtThreeRat, im: SqrtThreeRat) -> CycNum {
    CycNum::from_re_im(&re, &im)
}

fn q3(n: i64, d: i64, bn: i64, bd: i64) -> SqrtThreeRat {
    SqrtThreeRat::from_parts(n, d, bn, bd)
}

/// Template tiles for a carrier, centered at the origin with the central
/// triangle pointing down. Validated once on first use.
pub fn template(kind: RiscKind) -> &'static [Tile] {
    match kind {
        RiscKind::LeftType => {
            static LEFT: OnceLock<Vec<Tile>> = OnceLock::new();
            LEFT.get_or_init(|| validate_template(RiscKind::LeftType, build_left()))
        }
        RiscKind::RightType => {
            static RIGHT: OnceLock<Vec<Tile>> = OnceLock::new();
            RIGHT.get_or_init(|| validate_template(RiscKind::RightType, build_right()))
        }
    }
}

fn orbit_under_rotation(seed: Vec<Tile>) -> Vec<Tile> {
    let r = PlanarIsometry::rotation_about(&CycNum::zero(), 4);
    let mut out = seed;
    let mut k = out.clone();
    for _ in 0..2 {
        k = k.iter().map(|t| t.transformed(&r)).collect();
        out.extend(k.clone());
    }
    out.sort();
    out.dedup();
    out
}

fn build_left() -> Vec<Tile> {
    // Central down triangle with centroid at the origin, plus one arm:
    // the square on its top edge and the two triangles east of that square.
    // The remaining tiles are the order-3 orbit.
    let t = Tile::triangle(
        pt(q3(-1, 2, 0, 1), q3(0, 1, 1, 6)),
        pt(q3(1, 2, 0, 1), q3(0, 1, 1, 6)),
        pt(q3(0, 1, 0, 1), q3(0, 1, -1, 3)),
    )
    .unwrap();
    let sq = Tile::square(
        pt(q3(-1, 2, 0, 1), q3(0, 1, 1, 6)),
        pt(q3(1, 2, 0, 1), q3(0, 1, 1, 6)),
        pt(q3(1, 2, 0, 1), q3(1, 1, 1, 6)),
        pt(q3(-1, 2, 0, 1), q3(1, 1, 1, 6)),
    )
    .unwrap();
    let a1 = Tile::triangle(
        pt(q3(1, 2, 0, 1), q3(0, 1, 1, 6)),
        pt(q3(1, 2, 0, 1), q3(1, 1, 1, 6)),
        pt(q3(1, 2, 1, 2), q3(1, 2, 1, 6)),
    )
    .unwrap();
    let a2 = Tile::triangle(
        pt(q3(1, 2, 0, 1), q3(0, 1, 1, 6)),
        pt(q3(1, 2, 1, 2), q3(1, 2, 1, 6)),
        pt(q3(1, 2, 1, 2), q3(-1, 2, 1, 6)),
    )
    .unwrap();
    orbit_under_rotation(vec![t, sq, a1, a2])
}

fn build_right() -> Vec<Tile> {
    // Figure coordinates with unit side, then recentered so the centroid of
    // the central down triangle is at the origin.
    let c = pt(q3(1, 2, 0, 1), q3(0, 1, -1, 6));
    let v = |re: SqrtThreeRat, im: SqrtThreeRat| &pt(re, im) - &c;
    let t = Tile::triangle(
        v(q3(0, 1, 0, 1), q3(0, 1, 0, 1)),
        v(q3(1, 1, 0, 1), q3(0, 1, 0, 1)),
        v(q3(1, 2, 0, 1), q3(0, 1, -1, 2)),
    )
    .unwrap();
    let t1 = Tile::triangle(
        v(q3(0, 1, 0, 1), q3(0, 1, 0, 1)),
        v(q3(1, 1, 0, 1), q3(0, 1, 0, 1)),
        v(q3(1, 2, 0, 1), q3(0, 1, 1, 2)),
    )
    .unwrap();
    let ne_sq = Tile::square(
        v(q3(1, 1, 0, 1), q3(0, 1, 0, 1)),
        v(q3(1, 1, 1, 2), q3(1, 2, 0, 1)),
        v(q3(1, 2, 1, 2), q3(1, 2, 1, 2)),
        v(q3(1, 2, 0, 1), q3(0, 1, 1, 2)),
    )
    .unwrap();
    let s4 = Tile::square(
        v(q3(1, 1, 0, 1), q3(0, 1, 0, 1)),
        v(q3(1, 1, 1, 2), q3(1, 2, 0, 1)),
        v(q3(3, 2, 1, 2), q3(1, 2, -1, 2)),
        v(q3(3, 2, 0, 1), q3(0, 1, -1, 2)),
    )
    .unwrap();
    let e1 = Tile::triangle(
        v(q3(3, 2, 0, 1), q3(0, 1, -1, 2)),
        v(q3(3, 2, 1, 2), q3(1, 2, -1, 2)),
        v(q3(3, 2, 1, 2), q3(-1, 2, -1, 2)),
    )
    .unwrap();
    let e2 = Tile::triangle(
        v(q3(3, 2, 0, 1), q3(0, 1, -1, 2)),
        v(q3(3, 2, 1, 2), q3(-1, 2, -1, 2)),
        v(q3(3, 2, 0, 1), q3(-1, 1, -1, 2)),
    )
    .unwrap();
    orbit_under_rotation(vec![t, t1, ne_sq, s4, e1, e2])
}

fn validate_template(kind: RiscKind, tiles: Vec<Tile>) -> Vec<Tile> {
    let expect = match kind {
        RiscKind::LeftType => (7usize, 3usize),
        RiscKind::RightType => (10, 6),
    };
    let tri = tiles.iter().filter(|t| t.kind() == TileKind::Triangle).count();
    let sq = tiles.len() - tri;
    assert_eq!((tri, sq), expect, "{kind} carrier has wrong tile census");

    // Invariant under the order-3 rotation about the origin.
    let r = PlanarIsometry::rotation_about(&CycNum::zero(), 4);
    let mut rotated: Vec<Tile> = tiles.iter().map(|t| t.transformed(&r)).collect();
    rotated.sort();
    assert_eq!(rotated, tiles, "{kind} carrier is not rotation invariant");

    // Tiles are pairwise compatible (identical or interior-disjoint).
    for (i, a) in tiles.iter().enumerate() {
        for b in tiles.iter().skip(i + 1) {
            assert!(
                !crate::geom::convex_interiors_intersect(a.vertices(), b.vertices()),
                "{kind} carrier tiles overlap"
            );
        }
    }

    // The open inscribed disk about the center has exactly the stated radius:
    // the minimum distance from the origin to the boundary edges.
    let min_boundary = boundary_dist_sq(&tiles, &CycNum::zero());
    assert_eq!(
        min_boundary,
        kind.inscribed_radius_sq(),
        "{kind} carrier inscribed radius mismatch"
    );
    tiles
}

/// Minimum squared distance from `p` to the outer boundary of a tile union.
/// Boundary edges are those used by exactly one tile.
pub fn boundary_dist_sq(tiles: &[Tile], p: &CycNum) -> SqrtThreeRat {
    use std::collections::BTreeMap;
    let mut counts: BTreeMap<(CycNum, CycNum), usize> = BTreeMap::new();
    for t in tiles {
        for k in 0..t.vertices().len() {
            let (a, b) = t.edge(k);
            let key = if a.lex_cmp(b).is_lt() {
                (a.clone(), b.clone())
            } else {
                (b.clone(), a.clone())
            };
            *counts.entry(key).or_insert(0) += 1;
        }
    }
    counts
        .iter()
        .filter(|(_, &c)| c == 1)
        .map(|((a, b), _)| point_segment_dist_sq(p, a, b))
        .min()
        .expect("tile union has a boundary")
}

/// Finds every carrier of the tiling: for each order-3 rotation center and
/// each template orientation, tests whether the placed carrier's tiles all
/// belong to the tiling. Fails if some square of the tiling is covered by no
/// carrier, which certifies that the tiling cannot both carry order-3
/// symmetry and a translation of squared length at most 7 + 4 sqrt3.
pub fn find_riscs(
    tiling: &PeriodicTiling,
    group: &SymmetryGroup,
) -> Result<Vec<Risc>, ClassifyError> {
    let centers = group.order3_centers();
    if centers.is_empty() {
        return Err(ClassifyError::NoOrderThree);
    }
    let mut found: Vec<Risc> = Vec::new();
    for center in &centers {
        for kind in [RiscKind::LeftType, RiscKind::RightType] {
            for rotation in 0..4u8 {
                // Rotations k, k+4, k+8 place the same carrier.
                let risc = Risc::place(kind, center, rotation);
                if risc.tiles.iter().all(|t| tiling.contains_tile(t)) {
                    if found.iter().any(|r| r.center == risc.center && r.kind == risc.kind) {
                        continue;
                    }
                    found.push(risc);
                }
            }
        }
    }
    // Every square must be covered. Squares and carriers are compared
    // modulo the tiling lattice.
    for sq in tiling.tiles().iter().filter(|t| t.kind() == TileKind::Square) {
        let covered = found.iter().any(|r| {
            r.squares().any(|s| {
                tiling.tile_id(s).map(|id| &tiling.tiles()[id] == sq).unwrap_or(false)
            })
        });
        if !covered {
            return Err(ClassifyError::SquareNotCovered {
                square: format!("{:?}", sq.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>()),
            });
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn templates_validate() {
        assert_eq!(template(RiscKind::LeftType).len(), 10);
        assert_eq!(template(RiscKind::RightType).len(), 16);
    }

    #[test]
    fn inscribed_disks() {
        // Checked inside validate_template; reassert the exact values here.
        let left = boundary_dist_sq(template(RiscKind::LeftType), &CycNum::zero());
        assert_eq!(left, RiscKind::LeftType.inscribed_radius_sq());
        let right = boundary_dist_sq(template(RiscKind::RightType), &CycNum::zero());
        assert_eq!(right, RiscKind::RightType.inscribed_radius_sq());
        assert!(left < right);
    }

    #[test]
    fn placement_is_isometric() {
        let c = CycNum::from_coeffs_i64([1, 1, 0, -1]).div_int(3);
        let r = Risc::place(RiscKind::LeftType, &c, 7);
        assert_eq!(r.tiles.len(), 10);
        // The placed tile set is invariant under the order-3 rotation about c.
        let rot = PlanarIsometry::rotation_about(&c, 4);
        let mut rotated: Vec<Tile> = r.tiles.iter().map(|t| t.transformed(&rot)).collect();
        rotated.sort();
        assert_eq!(rotated, r.tiles);
    }
}
