//! Detection of the orientation-preserving symmetry group of a periodic
//! tiling, by exhaustive testing of the finite candidate set of rotation
//! centers: tile centroids and centers, vertices, and edge midpoints.

use std::collections::BTreeSet;
use std::fmt;

use crate::cyclo::CycNum;
use crate::sqrt3::SqrtThreeRat;

use super::{Lattice, PeriodicTiling, PlanarIsometry, TileKind, TilingError};

/// Crystallographic class of the orientation-preserving group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GroupTag {
    P1,
    P2,
    P3,
    P4,
    P6,
}

impl GroupTag {
    pub fn max_order(self) -> u8 {
        match self {
            GroupTag::P1 => 1,
            GroupTag::P2 => 2,
            GroupTag::P3 => 3,
            GroupTag::P4 => 4,
            GroupTag::P6 => 6,
        }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupTag::P1 => "p1",
            GroupTag::P2 => "p2",
            GroupTag::P3 => "p3",
            GroupTag::P4 => "p4",
            GroupTag::P6 => "p6",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug)]
pub struct RotationCenter {
    pub center: CycNum,
    /// Maximal rotation order at this center (2, 3, 4, or 6).
    pub order: u8,
}

/// Orientation-preserving symmetry data of a periodic tiling. Reflections
/// and glides are detected and listed separately; the classification tag
/// refers to the rotation subgroup only.
#[derive(Clone, Debug)]
pub struct SymmetryGroup {
    pub lattice: Lattice,
    pub centers: Vec<RotationCenter>,
    pub tag: GroupTag,
    pub min_translation_sq: SqrtThreeRat,
    pub reflections: Vec<PlanarIsometry>,
}

impl SymmetryGroup {
    /// All rotations of the group modulo lattice translations, identity
    /// included. For p6 this has six elements, for p3 three.
    pub fn rotations_mod_lattice(&self) -> Vec<PlanarIsometry> {
        let mut seen: BTreeSet<(u8, bool, CycNum)> = BTreeSet::new();
        let mut out = vec![PlanarIsometry::identity()];
        seen.insert((0, false, CycNum::zero()));
        let gens: Vec<PlanarIsometry> = self
            .centers
            .iter()
            .map(|c| PlanarIsometry::rotation_about(&c.center, 12 / c.order))
            .collect();
        let mut frontier = out.clone();
        while let Some(g) = frontier.pop() {
            for gen in &gens {
                let h = gen.compose(&g);
                let reduced = self.reduce_iso(&h);
                let key = (reduced.rot, reduced.reflect, reduced.trans.clone());
                if seen.insert(key) {
                    out.push(reduced.clone());
                    frontier.push(reduced);
                }
            }
        }
        out.sort();
        out
    }

    /// Normalizes the translation part into the fundamental parallelogram.
    pub fn reduce_iso(&self, iso: &PlanarIsometry) -> PlanarIsometry {
        let (t, _) = self.lattice.reduce(&iso.trans);
        PlanarIsometry { rot: iso.rot, reflect: iso.reflect, trans: t }
    }

    /// The subgroup generated by the order-3 parts of all rotation centers.
    /// For a p6 group this is its unique index-two p3 subgroup.
    pub fn p3_subgroup(&self) -> SymmetryGroup {
        let centers: Vec<RotationCenter> = self
            .centers
            .iter()
            .filter(|c| c.order % 3 == 0)
            .map(|c| RotationCenter { center: c.center.clone(), order: 3 })
            .collect();
        assert!(!centers.is_empty(), "group has no order-3 rotations");
        SymmetryGroup {
            lattice: self.lattice.clone(),
            centers,
            tag: GroupTag::P3,
            min_translation_sq: self.min_translation_sq.clone(),
            reflections: Vec::new(),
        }
    }

    /// Centers whose rotation order is divisible by 3.
    pub fn order3_centers(&self) -> Vec<CycNum> {
        self.centers
            .iter()
            .filter(|c| c.order % 3 == 0)
            .map(|c| c.center.clone())
            .collect()
    }
}

/// Computes the orientation-preserving symmetry group of a valid tiling.
pub fn symmetry_group(t: &PeriodicTiling) -> Result<SymmetryGroup, TilingError> {
    let analysis = t.analysis()?;
    let lattice = t.lattice().clone();

    // Finite candidate set for rotation centers.
    let mut candidates: BTreeSet<CycNum> = BTreeSet::new();
    for v in &analysis.vertices {
        candidates.insert(v.rep.clone());
    }
    for e in &analysis.edges {
        candidates.insert(lattice.reduce(&e.midpoint()).0);
    }
    for tile in t.tiles() {
        candidates.insert(lattice.reduce(&tile.centroid()).0);
        if tile.kind() == TileKind::Square {
            candidates.insert(lattice.reduce(&tile.circumcenter()).0);
        }
    }

    let mut centers = Vec::new();
    let mut max_order = 1u8;
    for c in &candidates {
        let mut found: Option<u8> = None;
        for order in [6u8, 4, 3, 2] {
            let iso = PlanarIsometry::rotation_about(c, 12 / order);
            if t.is_symmetry(&iso) {
                found = Some(order);
                break;
            }
        }
        if let Some(order) = found {
            max_order = max_order.max(order);
            centers.push(RotationCenter { center: c.clone(), order });
        }
    }

    let tag = match max_order {
        1 => GroupTag::P1,
        2 => GroupTag::P2,
        3 => GroupTag::P3,
        4 => GroupTag::P4,
        6 => GroupTag::P6,
        _ => unreachable!(),
    };

    // Reflections and glides: z -> zeta^k conj(z) + t with t determined by
    // sending one vertex representative to another.
    let mut reflections = Vec::new();
    let mut seen: BTreeSet<(u8, CycNum)> = BTreeSet::new();
    for k in 0..12u8 {
        let u = CycNum::zeta_pow(k as i64);
        for v in &analysis.vertices {
            for w in &analysis.vertices {
                let trans = &w.rep - &(&u * &v.rep.conj());
                let iso = PlanarIsometry { rot: k, reflect: true, trans };
                let reduced = {
                    let (tr, _) = lattice.reduce(&iso.trans);
                    PlanarIsometry { trans: tr, ..iso }
                };
                if !seen.insert((k, reduced.trans.clone())) {
                    continue;
                }
                if t.is_symmetry(&reduced) {
                    reflections.push(reduced);
                }
            }
        }
    }
    reflections.sort();

    Ok(SymmetryGroup {
        min_translation_sq: lattice.shortest_sq(),
        lattice,
        centers,
        tag,
        reflections,
    })
}
