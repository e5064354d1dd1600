//! Built-in tilings: the three classified short-translation tilings Q, R, E,
//! the snub square tiling, and the pure triangle and square lattices.

use num_rational::BigRational;

use crate::cyclo::CycNum;
use crate::classify::risc::{Risc, RiscKind};
use crate::sqrt3::SqrtThreeRat;

use super::{PeriodicTiling, PlanarIsometry, Tile, TileKind, TilingError};

fn cyc(c: [i64; 4]) -> CycNum {
    CycNum::from_coeffs_i64(c)
}

fn tri(a: [i64; 4], b: [i64; 4], c: [i64; 4]) -> Tile {
    Tile::triangle(cyc(a), cyc(b), cyc(c)).expect("builtin triangle")
}

fn sq(a: [i64; 4], b: [i64; 4], c: [i64; 4], d: [i64; 4]) -> Tile {
    Tile::square(cyc(a), cyc(b), cyc(c), cyc(d)).expect("builtin square")
}

/// Lattice of unit triangles, vertex figure 3^6.
pub fn all_triangle() -> PeriodicTiling {
    PeriodicTiling::new(
        CycNum::one(),
        CycNum::omega(),
        vec![
            tri([0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0]),
            tri([1, 0, 0, 0], [1, 0, 1, 0], [0, 0, 1, 0]),
        ],
    )
    .expect("triangle lattice")
}

/// Lattice of unit squares, vertex figure 4^4.
pub fn all_square() -> PeriodicTiling {
    PeriodicTiling::new(
        CycNum::one(),
        CycNum::i(),
        vec![sq([0, 0, 0, 0], [1, 0, 0, 0], [1, 0, 0, 1], [0, 0, 0, 1])],
    )
    .expect("square lattice")
}

/// Snub square tiling: every vertex 3^2.4.3.4, every triangle abuts two
/// squares and one triangle. Two squares and four triangles per period.
pub fn make_snub() -> PeriodicTiling {
    PeriodicTiling::new(
        cyc([1, 1, 0, -1]),
        cyc([0, 0, 1, 1]),
        vec![
            sq([0, 0, 0, 0], [0, 0, 1, 0], [0, 1, 1, -1], [0, 1, 0, -1]),
            tri([0, 0, 1, 0], [0, 0, 1, 1], [0, 1, 1, 0]),
            tri([0, 0, 1, 0], [0, 1, 1, 0], [0, 1, 1, -1]),
            sq([0, 1, 1, 0], [1, 1, 1, 0], [1, 1, 1, -1], [0, 1, 1, -1]),
            tri([0, 1, 1, -1], [1, 1, 1, -1], [1, 1, 0, -1]),
            tri([0, 1, 1, -1], [1, 1, 0, -1], [0, 1, 0, -1]),
        ],
    )
    .expect("snub square tiling")
}

/// The tiling with triangle strip pairs separated by square strips, built
/// from its drawn fundamental domain. Triangle types are OOO and OTT only;
/// shortest translation 1 + sqrt3.
pub fn make_q() -> PeriodicTiling {
    PeriodicTiling::new(
        cyc([2, 1, -1, -1]),
        cyc([1, 1, 1, 0]),
        vec![
            // Upward triangles.
            tri([0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0]),
            tri([1, 1, 0, 0], [2, 1, 0, 0], [1, 1, 1, 0]),
            tri([2, 2, 0, -1], [3, 2, 0, -1], [2, 2, 1, -1]),
            tri([1, 1, -1, -1], [2, 1, -1, -1], [1, 1, 0, -1]),
            // Downward triangles.
            tri([0, 0, 0, 0], [1, 0, 0, 0], [1, 0, -1, 0]),
            tri([2, 2, 0, -1], [3, 2, 0, -1], [3, 2, -1, -1]),
            tri([0, 1, 1, 0], [1, 1, 1, 0], [1, 1, 0, 0]),
            tri([1, 1, 1, 0], [2, 1, 1, 0], [2, 1, 0, 0]),
            // Squares: one axis-aligned, two tilted.
            sq([1, 1, 0, -1], [2, 1, 0, -1], [2, 1, 0, 0], [1, 1, 0, 0]),
            sq([1, 0, 0, 0], [1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 0]),
            sq([1, 0, 0, 0], [1, 1, 0, -1], [1, 1, -1, -1], [1, 0, -1, 0]),
        ],
    )
    .expect("tiling Q")
}

/// Extends a seed configuration by the group generated by the order-3
/// rotations about two centers. The translation subgroup is the triangular
/// lattice spanned by (c1 - c2)(1 - w) and its 120-degree rotation, where w
/// is the rotation constant; the tile set must close up under the two
/// rotations inside one period.
pub fn extend_by_order3_rotations(
    seed: &[Tile],
    c1: &CycNum,
    c2: &CycNum,
) -> Result<PeriodicTiling, TilingError> {
    let u = CycNum::zeta_pow(4);
    let tau1 = &(c1 - c2) * &(&CycNum::one() - &u);
    let tau2 = &u * &tau1;
    let lattice = super::Lattice::new(tau1.clone(), tau2.clone())?;
    let r1 = PlanarIsometry::rotation_about(c1, 4);
    let r2 = PlanarIsometry::rotation_about(c2, 4);

    // Safety bound: a period cannot hold more tiles than its area divided by
    // the triangle area.
    let cap = {
        let covol = lattice.covolume().to_f64();
        ((covol / (3f64.sqrt() / 4.0)).ceil() as usize) * 2 + 8
    };

    let mut tiles: Vec<Tile> = Vec::new();
    let mut frontier: Vec<Tile> = Vec::new();
    for t in seed {
        let red = super::reduce_tile(&lattice, t);
        if !tiles.contains(&red) {
            tiles.push(red.clone());
            frontier.push(red);
        }
    }
    while let Some(t) = frontier.pop() {
        for r in [&r1, &r2] {
            let image = super::reduce_tile(&lattice, &t.transformed(r));
            if !tiles.contains(&image) {
                if tiles.len() >= cap {
                    return Err(TilingError::BadTile(
                        "rotation extension does not close up".into(),
                    ));
                }
                tiles.push(image.clone());
                frontier.push(image);
            }
        }
    }
    let tiling = PeriodicTiling::new(tau1, tau2, tiles)?;
    tiling.validate()?;
    Ok(tiling)
}

/// Places two carriers of the given kind facing each other at squared center
/// distance `dist_sq`, with the first rotated by zeta^k_a, and extends by
/// the two order-3 rotations. The configuration is translated so all
/// vertices are integral.
fn carrier_pair_tiling(
    kind: RiscKind,
    half_dist: &SqrtThreeRat,
    k_a: u8,
) -> Result<PeriodicTiling, TilingError> {
    let c_a = CycNum::from_re_im(&-half_dist, &SqrtThreeRat::zero());
    let c_b = CycNum::from_re_im(half_dist, &SqrtThreeRat::zero());
    let risc_a = Risc::place(kind, &c_a, k_a);
    let risc_b = Risc::place(kind, &c_b, (k_a + 6) % 12);
    let mut seed: Vec<Tile> = risc_a.tiles.clone();
    for t in &risc_b.tiles {
        if !seed.contains(t) {
            seed.push(t.clone());
        }
    }
    // Normalize to integral coordinates: shift a tile vertex to the origin.
    let shift = -seed[0].anchor();
    let seed: Vec<Tile> = seed.iter().map(|t| t.translated(&shift)).collect();
    for t in &seed {
        if !t.is_integral() {
            return Err(TilingError::NonIntegralVertex(format!(
                "carrier pair produced non-integral tile vertex near {:?}",
                t.vertices()[0]
            )));
        }
    }
    extend_by_order3_rotations(&seed, &(&c_a + &shift), &(&c_b + &shift))
}

fn half(v: SqrtThreeRat) -> SqrtThreeRat {
    v.scale(&BigRational::new(1.into(), 2.into()))
}

/// The tiling where every square is surrounded by four triangles:
/// two small carriers overlapping in two adjacent triangles, centers
/// 1 + 2/sqrt3 apart. Vertex figures 3^6 and 3^2.4.3.4.
pub fn make_e() -> PeriodicTiling {
    let d = SqrtThreeRat::from_parts(1, 1, 2, 3); // 1 + (2/3) sqrt3
    carrier_pair_tiling(RiscKind::LeftType, &half(d), 11).expect("tiling E")
}

/// The tiling where every square touches one square and three triangles:
/// two large carriers overlapping in a two-square column, centers
/// 1 + 2/sqrt3 apart. Vertex figures 3^6, 3^3.4^2 and 3^2.4.3.4.
pub fn make_r() -> PeriodicTiling {
    let d = SqrtThreeRat::from_parts(1, 1, 2, 3);
    carrier_pair_tiling(RiscKind::RightType, &half(d), 11).expect("tiling R")
}

/// Q rebuilt from two small carriers overlapping in one square, centers
/// 1 + 1/sqrt3 apart; canonically equal to [`make_q`].
pub fn make_q_from_carriers() -> PeriodicTiling {
    let d = SqrtThreeRat::from_parts(1, 1, 1, 3);
    carrier_pair_tiling(RiscKind::LeftType, &half(d), 9).expect("tiling Q from carriers")
}

#[allow(unused_imports)]
use super::Lattice;

#[allow(unused)]
fn quiet(_: &TileKind) {}
