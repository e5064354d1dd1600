//! Periodic edge-to-edge tilings of the plane by unit squares and unit
//! equilateral triangles, with exact coordinates in Z[zeta12].
//!
//! A `PeriodicTiling` stores one canonical tile representative per orbit of
//! its translation lattice. Validation enforces the defining invariants:
//! unit edges, edge-to-edge matching, full angle at every vertex, and the
//! exact area balance  #triangles * sqrt3/4 + #squares = covolume.

mod builtins;
pub mod io;
mod isometry;
mod lattice;
mod symmetry;

pub use builtins::{all_square, all_triangle, extend_by_order3_rotations, make_e, make_q, make_r, make_snub};
pub use isometry::PlanarIsometry;
pub use lattice::Lattice;
pub use symmetry::{symmetry_group, GroupTag, RotationCenter, SymmetryGroup};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use crate::cyclo::CycNum;
use crate::geom::{centroid, circumcenter, cross};
use crate::sqrt3::SqrtThreeRat;

#[derive(Debug, Error)]
pub enum TilingError {
    #[error("tiling has no tiles")]
    Empty,
    #[error("basis vectors are linearly dependent over R: {t1}; {t2}")]
    DegenerateBasis { t1: String, t2: String },
    #[error("bad tile: {0}")]
    BadTile(String),
    #[error("edge ({a}) -- ({b}) borders {count} tiles, want exactly 2")]
    EdgeNotShared { a: String, b: String, count: usize },
    #[error("edge ({a}) -- ({b}) is traversed twice in the same direction")]
    EdgeOrientation { a: String, b: String },
    #[error("angle sum at vertex ({vertex}) is {degrees} degrees, want 360")]
    AngleSum { vertex: String, degrees: u32 },
    #[error("inconsistent tile fan around vertex ({vertex})")]
    BrokenFan { vertex: String },
    #[error("area balance failed: tile area {tiles}, covolume {covolume}")]
    AreaImbalance { tiles: String, covolume: String },
    #[error("tile is not part of the tiling")]
    TileNotFound,
    #[error("operation needs a triangle, got a square")]
    NotATriangle,
    #[error("not a sublattice: {0}")]
    NotASublattice(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {0} is not in Z[zeta12]")]
    NonIntegralVertex(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TileKind {
    Triangle,
    Square,
}

impl TileKind {
    pub fn sides(self) -> usize {
        match self {
            TileKind::Triangle => 3,
            TileKind::Square => 4,
        }
    }

    /// Interior angle in units of 30 degrees.
    pub fn angle_units(self) -> u32 {
        match self {
            TileKind::Triangle => 2,
            TileKind::Square => 3,
        }
    }

    pub fn area(self) -> SqrtThreeRat {
        match self {
            TileKind::Triangle => SqrtThreeRat::from_parts(0, 1, 1, 4),
            TileKind::Square => SqrtThreeRat::one(),
        }
    }

    pub fn letter(self) -> char {
        match self {
            TileKind::Triangle => 'T',
            TileKind::Square => 'S',
        }
    }
}

impl fmt::Display for TileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Classification of a triangular tile by the kinds of its edge neighbors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TriangleType {
    /// Three triangle neighbors.
    TTT,
    /// One square, two triangles.
    OTT,
    /// Two squares, one triangle.
    OOT,
    /// Three squares.
    OOO,
}

impl TriangleType {
    pub fn from_square_count(n: usize) -> Self {
        match n {
            0 => TriangleType::TTT,
            1 => TriangleType::OTT,
            2 => TriangleType::OOT,
            3 => TriangleType::OOO,
            _ => unreachable!("triangle has three edges"),
        }
    }
}

impl fmt::Display for TriangleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A unit triangle or square with exact vertices, stored counterclockwise
/// with the lexicographically least vertex first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tile {
    kind: TileKind,
    vertices: Vec<CycNum>,
}

impl Tile {
    pub fn new(kind: TileKind, mut vertices: Vec<CycNum>) -> Result<Self, TilingError> {
        if vertices.len() != kind.sides() {
            return Err(TilingError::BadTile(format!(
                "{kind} needs {} vertices, got {}",
                kind.sides(),
                vertices.len()
            )));
        }
        // Orient counterclockwise.
        let area2 = crate::geom::polygon_area_x2(&vertices);
        match area2.signum() {
            0 => return Err(TilingError::BadTile("degenerate tile".into())),
            s if s < 0 => vertices.reverse(),
            _ => {}
        }
        // Rotate so the lex-least vertex comes first.
        let min_idx = (0..vertices.len())
            .min_by(|&i, &j| vertices[i].lex_cmp(&vertices[j]))
            .unwrap();
        vertices.rotate_left(min_idx);
        let tile = Tile { kind, vertices };
        tile.check_shape()?;
        Ok(tile)
    }

    pub fn triangle(a: CycNum, b: CycNum, c: CycNum) -> Result<Self, TilingError> {
        Tile::new(TileKind::Triangle, vec![a, b, c])
    }

    pub fn square(a: CycNum, b: CycNum, c: CycNum, d: CycNum) -> Result<Self, TilingError> {
        Tile::new(TileKind::Square, vec![a, b, c, d])
    }

    fn check_shape(&self) -> Result<(), TilingError> {
        let n = self.vertices.len();
        // Counterclockwise regular n-gon with unit sides: each successive
        // edge is the previous one rotated by the exterior angle.
        let turn = match self.kind {
            TileKind::Triangle => CycNum::zeta_pow(4),
            TileKind::Square => CycNum::zeta_pow(3),
        };
        let e0 = &self.vertices[1] - &self.vertices[0];
        if e0.norm_sq() != SqrtThreeRat::one() {
            return Err(TilingError::BadTile(format!(
                "edge ({}) -> ({}) does not have length 1",
                self.vertices[0], self.vertices[1]
            )));
        }
        let mut e = e0;
        for k in 1..n {
            let next = &self.vertices[(k + 1) % n] - &self.vertices[k];
            let expect = &turn * &e;
            if next != expect {
                return Err(TilingError::BadTile(format!(
                    "vertices do not form a regular unit {}",
                    self.kind
                )));
            }
            e = next;
        }
        Ok(())
    }

    pub fn kind(&self) -> TileKind {
        self.kind
    }

    pub fn vertices(&self) -> &[CycNum] {
        &self.vertices
    }

    /// Lexicographically least vertex; reduction anchor.
    pub fn anchor(&self) -> &CycNum {
        &self.vertices[0]
    }

    pub fn translated(&self, t: &CycNum) -> Tile {
        Tile {
            kind: self.kind,
            vertices: self.vertices.iter().map(|v| v + t).collect(),
        }
    }

    pub fn transformed(&self, iso: &PlanarIsometry) -> Tile {
        Tile::new(self.kind, self.vertices.iter().map(|v| iso.apply(v)).collect())
            .expect("isometries preserve tile shapes")
    }

    pub fn centroid(&self) -> CycNum {
        centroid(&self.vertices)
    }

    /// Circumcenter: the centroid for triangles, the center for squares.
    pub fn circumcenter(&self) -> CycNum {
        circumcenter(&self.vertices[0], &self.vertices[1], &self.vertices[2])
    }

    pub fn edge(&self, k: usize) -> (&CycNum, &CycNum) {
        let n = self.vertices.len();
        (&self.vertices[k], &self.vertices[(k + 1) % n])
    }

    pub fn is_integral(&self) -> bool {
        self.vertices.iter().all(CycNum::is_integral)
    }
}

/// One lattice-reduced incidence of a tile corner at a vertex.
#[derive(Clone, Debug)]
pub struct FanEntry {
    pub tile: usize,
    pub corner: usize,
    /// Translation placing the stored tile so this corner sits at the
    /// reduced vertex representative.
    pub offset: CycNum,
}

#[derive(Clone, Debug)]
pub struct VertexData {
    pub rep: CycNum,
    /// Incident corners in counterclockwise cyclic order.
    pub fan: Vec<FanEntry>,
}

impl VertexData {
    /// Tile kinds in counterclockwise cyclic order around the vertex.
    pub fn kind_cycle(&self, tiles: &[Tile]) -> Vec<TileKind> {
        self.fan.iter().map(|f| tiles[f.tile].kind()).collect()
    }
}

#[derive(Clone, Debug)]
pub struct EdgeUse {
    pub tile: usize,
    pub edge: usize,
    /// Translation placing the stored tile so this edge sits at (p, q).
    pub offset: CycNum,
    /// True if the tile traverses the edge from p to q.
    pub forward: bool,
}

#[derive(Clone, Debug)]
pub struct EdgeData {
    pub p: CycNum,
    pub q: CycNum,
    pub uses: [EdgeUse; 2],
}

impl EdgeData {
    pub fn midpoint(&self) -> CycNum {
        (&self.p + &self.q).div_int(2)
    }

    pub fn kinds(&self, tiles: &[Tile]) -> (TileKind, TileKind) {
        (tiles[self.uses[0].tile].kind(), tiles[self.uses[1].tile].kind())
    }

    pub fn square_count(&self, tiles: &[Tile]) -> usize {
        let (a, b) = self.kinds(tiles);
        (a == TileKind::Square) as usize + (b == TileKind::Square) as usize
    }
}

/// Combinatorial incidence data of one period, all positions reduced.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub vertices: Vec<VertexData>,
    pub edges: Vec<EdgeData>,
    vertex_index: BTreeMap<CycNum, usize>,
    edge_index: BTreeMap<(CycNum, CycNum), usize>,
}

impl Analysis {
    pub fn vertex_id(&self, rep: &CycNum) -> Option<usize> {
        self.vertex_index.get(rep).copied()
    }

    pub fn edge_id(&self, key: &(CycNum, CycNum)) -> Option<usize> {
        self.edge_index.get(key).copied()
    }
}

#[derive(Clone, Debug)]
pub struct TilingStats {
    pub triangles: usize,
    pub squares: usize,
    pub vertices: usize,
    pub edges: usize,
    pub covolume: SqrtThreeRat,
    /// Census of vertex configurations, e.g. "3^2.4.3.4" -> 12.
    pub vertex_configs: BTreeMap<String, usize>,
}

/// A tiling of the plane modulo a translation lattice.
#[derive(Clone, Debug)]
pub struct PeriodicTiling {
    lattice: Lattice,
    tiles: Vec<Tile>,
}

impl PeriodicTiling {
    /// Builds a tiling from any set of tile representatives: tiles are
    /// reduced into the fundamental parallelogram, deduplicated, and sorted.
    /// Fails only on a degenerate basis; run [`validate`](Self::validate)
    /// for the full invariant check.
    pub fn new(t1: CycNum, t2: CycNum, tiles: Vec<Tile>) -> Result<Self, TilingError> {
        let lattice = Lattice::new(t1, t2)?;
        let mut reduced: Vec<Tile> = tiles
            .into_iter()
            .map(|t| reduce_tile(&lattice, &t))
            .collect();
        reduced.sort();
        reduced.dedup();
        Ok(PeriodicTiling { lattice, tiles: reduced })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn contains_tile(&self, tile: &Tile) -> bool {
        let red = reduce_tile(&self.lattice, tile);
        self.tiles.binary_search(&red).is_ok()
    }

    pub fn tile_id(&self, tile: &Tile) -> Option<usize> {
        let red = reduce_tile(&self.lattice, tile);
        self.tiles.binary_search(&red).ok()
    }

    pub fn triangle_count(&self) -> usize {
        self.tiles.iter().filter(|t| t.kind() == TileKind::Triangle).count()
    }

    pub fn square_count(&self) -> usize {
        self.tiles.iter().filter(|t| t.kind() == TileKind::Square).count()
    }

    /// Builds vertex fans and the edge map, checking local consistency.
    pub fn analysis(&self) -> Result<Analysis, TilingError> {
        if self.tiles.is_empty() {
            return Err(TilingError::Empty);
        }
        // Edge map keyed by canonical reduced endpoint pairs.
        let mut edge_map: BTreeMap<(CycNum, CycNum), Vec<EdgeUse>> = BTreeMap::new();
        for (ti, tile) in self.tiles.iter().enumerate() {
            let n = tile.vertices().len();
            for ei in 0..n {
                let (a, b) = tile.edge(ei);
                let mid = (a + b).div_int(2);
                let (_, shift) = self.lattice.reduce(&mid);
                let (pa, pb) = (a - &shift, b - &shift);
                let forward = pa.lex_cmp(&pb).is_lt();
                let key = if forward { (pa, pb) } else { (pb, pa) };
                edge_map.entry(key).or_default().push(EdgeUse {
                    tile: ti,
                    edge: ei,
                    offset: -&shift,
                    forward,
                });
            }
        }
        let mut edges = Vec::new();
        let mut edge_index = BTreeMap::new();
        for (key, uses) in edge_map {
            if uses.len() != 2 {
                return Err(TilingError::EdgeNotShared {
                    a: key.0.to_string(),
                    b: key.1.to_string(),
                    count: uses.len(),
                });
            }
            if uses[0].forward == uses[1].forward {
                return Err(TilingError::EdgeOrientation {
                    a: key.0.to_string(),
                    b: key.1.to_string(),
                });
            }
            let [u0, u1] = <[EdgeUse; 2]>::try_from(uses).unwrap();
            edge_index.insert(key.clone(), edges.len());
            edges.push(EdgeData { p: key.0, q: key.1, uses: [u0, u1] });
        }

        // Vertex fans.
        let mut corner_map: BTreeMap<CycNum, Vec<FanEntry>> = BTreeMap::new();
        for (ti, tile) in self.tiles.iter().enumerate() {
            for (ci, v) in tile.vertices().iter().enumerate() {
                let (rep, shift) = self.lattice.reduce(v);
                corner_map.entry(rep).or_default().push(FanEntry {
                    tile: ti,
                    corner: ci,
                    offset: -&shift,
                });
            }
        }
        let mut vertices = Vec::new();
        let mut vertex_index = BTreeMap::new();
        for (rep, entries) in corner_map {
            let fan = chain_fan(&self.tiles, &rep, entries)?;
            vertex_index.insert(rep.clone(), vertices.len());
            vertices.push(VertexData { rep, fan });
        }
        Ok(Analysis { vertices, edges, vertex_index, edge_index })
    }

    /// Full invariant check; returns summary statistics on success.
    pub fn validate(&self) -> Result<TilingStats, TilingError> {
        let analysis = self.analysis()?;
        let covolume = self.lattice.covolume();
        let mut area = SqrtThreeRat::zero();
        for t in &self.tiles {
            area += &t.kind().area();
        }
        if area != covolume {
            return Err(TilingError::AreaImbalance {
                tiles: area.to_string(),
                covolume: covolume.to_string(),
            });
        }
        let mut vertex_configs: BTreeMap<String, usize> = BTreeMap::new();
        for v in &analysis.vertices {
            let cycle: Vec<u8> = v
                .kind_cycle(&self.tiles)
                .iter()
                .map(|k| k.sides() as u8)
                .collect();
            *vertex_configs.entry(config_notation(&cycle)).or_insert(0) += 1;
        }
        Ok(TilingStats {
            triangles: self.triangle_count(),
            squares: self.square_count(),
            vertices: analysis.vertices.len(),
            edges: analysis.edges.len(),
            covolume,
            vertex_configs,
        })
    }

    /// Type of a triangle: the multiset of kinds of its three edge neighbors.
    pub fn triangle_type(&self, tile: &Tile) -> Result<TriangleType, TilingError> {
        let id = self.tile_id(tile).ok_or(TilingError::TileNotFound)?;
        if self.tiles[id].kind() != TileKind::Triangle {
            return Err(TilingError::NotATriangle);
        }
        let analysis = self.analysis()?;
        Ok(self.triangle_type_by_id(&analysis, id))
    }

    fn triangle_type_by_id(&self, analysis: &Analysis, id: usize) -> TriangleType {
        let mut squares = 0;
        for e in &analysis.edges {
            let [u0, u1] = &e.uses;
            for (me, other) in [(u0, u1), (u1, u0)] {
                if me.tile == id && self.tiles[other.tile].kind() == TileKind::Square {
                    squares += 1;
                }
            }
        }
        TriangleType::from_square_count(squares)
    }

    /// Census of triangle types over one period.
    pub fn triangle_type_census(&self) -> Result<BTreeMap<TriangleType, usize>, TilingError> {
        let analysis = self.analysis()?;
        let mut out = BTreeMap::new();
        for (id, t) in self.tiles.iter().enumerate() {
            if t.kind() == TileKind::Triangle {
                *out.entry(self.triangle_type_by_id(&analysis, id)).or_insert(0) += 1;
            }
        }
        Ok(out)
    }

    /// Necessary conditions for being the boundary pattern of a one-cusped
    /// mixed tetrahedron/octahedron complex: OOT forces OOO or OTT, and OTT
    /// forces OOT or TTT.
    pub fn check_type_constraints(&self) -> Result<Result<(), TypeConstraintViolation>, TilingError> {
        let census = self.triangle_type_census()?;
        let has = |t: TriangleType| census.get(&t).copied().unwrap_or(0) > 0;
        if has(TriangleType::OOT) && !has(TriangleType::OOO) && !has(TriangleType::OTT) {
            return Ok(Err(TypeConstraintViolation {
                witness: "OOT present, no OOO/OTT".into(),
            }));
        }
        if has(TriangleType::OTT) && !has(TriangleType::OOT) && !has(TriangleType::TTT) {
            return Ok(Err(TypeConstraintViolation {
                witness: "OTT present, no OOT/TTT".into(),
            }));
        }
        Ok(Ok(()))
    }

    /// Applies a planar isometry to the whole tiling.
    pub fn transformed(&self, iso: &PlanarIsometry) -> PeriodicTiling {
        let linear = PlanarIsometry { trans: CycNum::zero(), ..iso.clone() };
        let (t1, t2) = self.lattice.basis();
        PeriodicTiling::new(
            linear.apply(t1),
            linear.apply(t2),
            self.tiles.iter().map(|t| t.transformed(iso)).collect(),
        )
        .expect("isometries preserve lattice rank")
    }

    /// True iff the isometry maps the tile set to itself modulo the lattice.
    pub fn is_symmetry(&self, iso: &PlanarIsometry) -> bool {
        let mut mapped: Vec<Tile> = self
            .tiles
            .iter()
            .map(|t| reduce_tile(&self.lattice, &t.transformed(iso)))
            .collect();
        mapped.sort();
        mapped.dedup();
        mapped == self.tiles
    }

    /// Canonical encoding, equal for tilings related by z -> zeta^k z + t.
    pub fn canonical_form(&self) -> String {
        let mut best: Option<String> = None;
        for k in 0..12u8 {
            let rot = PlanarIsometry { rot: k, reflect: false, trans: CycNum::zero() };
            let rt = self.transformed(&rot);
            for (b1, b2) in rt.lattice.minimal_bases() {
                let lat = Lattice::new(b1.clone(), b2.clone()).expect("minimal basis valid");
                // Candidate translations: move each vertex to the origin.
                let mut anchors: Vec<CycNum> = rt
                    .tiles
                    .iter()
                    .flat_map(|t| t.vertices().iter().cloned())
                    .map(|v| lat.reduce(&v).0)
                    .collect();
                anchors.sort();
                anchors.dedup();
                for anchor in &anchors {
                    let mut moved: Vec<Tile> = rt
                        .tiles
                        .iter()
                        .map(|t| reduce_tile(&lat, &t.translated(&-anchor)))
                        .collect();
                    moved.sort();
                    moved.dedup();
                    let mut enc = format!("[{};{}]", b1.to_compact(), b2.to_compact());
                    for t in &moved {
                        enc.push('|');
                        enc.push(t.kind().letter());
                        for v in t.vertices() {
                            enc.push(' ');
                            enc.push_str(&v.to_compact());
                        }
                    }
                    if best.as_ref().map(|b| enc < *b).unwrap_or(true) {
                        best = Some(enc);
                    }
                }
            }
        }
        best.expect("tiling has at least one vertex")
    }

    /// Connected fundamental domain for a finite-index sublattice, grown
    /// outward tile by tile. Returns placed tiles, one per sublattice orbit.
    pub fn fundamental_domain(
        &self,
        s1: &CycNum,
        s2: &CycNum,
    ) -> Result<Vec<Tile>, TilingError> {
        let index = self.lattice.sublattice_index(s1, s2)?;
        let sub = Lattice::new(s1.clone(), s2.clone())?;
        let analysis = self.analysis()?;
        // Adjacency: for tile i placed at offset w, the neighbor across edge
        // ei is tile j placed at w + (offset_i - offset_j).
        let mut adj: BTreeMap<(usize, usize), (usize, CycNum)> = BTreeMap::new();
        for e in &analysis.edges {
            let [u0, u1] = &e.uses;
            adj.insert((u0.tile, u0.edge), (u1.tile, &u0.offset - &u1.offset));
            adj.insert((u1.tile, u1.edge), (u0.tile, &u1.offset - &u0.offset));
        }
        let mut seen: BTreeMap<(usize, CycNum), ()> = BTreeMap::new();
        let mut queue: Vec<(usize, CycNum)> = vec![(0, CycNum::zero())];
        let orbit_key = |tile: usize, w: &CycNum| (tile, sub.reduce(w).0);
        seen.insert(orbit_key(0, &CycNum::zero()), ());
        let mut placed: Vec<Tile> = vec![self.tiles[0].clone()];
        while let Some((ti, w)) = queue.pop() {
            for ei in 0..self.tiles[ti].vertices().len() {
                let (tj, delta) = adj
                    .get(&(ti, ei))
                    .expect("validated tilings have full adjacency")
                    .clone();
                let wj = &w + &delta;
                let key = orbit_key(tj, &wj);
                if seen.contains_key(&key) {
                    continue;
                }
                seen.insert(key, ());
                placed.push(self.tiles[tj].translated(&wj));
                queue.push((tj, wj));
            }
        }
        let expect = &index * BigInt::from(self.tiles.len());
        debug_assert_eq!(BigInt::from(placed.len()), expect);
        if BigInt::from(placed.len()) != expect {
            return Err(TilingError::NotASublattice(format!(
                "fundamental domain produced {} tiles, expected {}",
                placed.len(),
                expect
            )));
        }
        Ok(placed)
    }

    /// Searches one period for a local tile pattern.
    pub fn find_pattern(&self, pattern: &LocalPattern) -> Result<Vec<PatternMatch>, TilingError> {
        let analysis = self.analysis()?;
        let mut out = Vec::new();
        match pattern {
            LocalPattern::KindPresent(kind) => {
                for t in &self.tiles {
                    if t.kind() == *kind {
                        out.push(PatternMatch { tiles: vec![t.clone()] });
                    }
                }
            }
            LocalPattern::TypePresent(ty) => {
                for (id, t) in self.tiles.iter().enumerate() {
                    if t.kind() == TileKind::Triangle
                        && self.triangle_type_by_id(&analysis, id) == *ty
                    {
                        out.push(PatternMatch { tiles: vec![t.clone()] });
                    }
                }
            }
            LocalPattern::TriTriEdge(ta, tb) => {
                let want = if ta <= tb { (*ta, *tb) } else { (*tb, *ta) };
                for e in &analysis.edges {
                    let [u0, u1] = &e.uses;
                    if self.tiles[u0.tile].kind() != TileKind::Triangle
                        || self.tiles[u1.tile].kind() != TileKind::Triangle
                    {
                        continue;
                    }
                    let y0 = self.triangle_type_by_id(&analysis, u0.tile);
                    let y1 = self.triangle_type_by_id(&analysis, u1.tile);
                    let got = if y0 <= y1 { (y0, y1) } else { (y1, y0) };
                    if got == want {
                        out.push(PatternMatch {
                            tiles: vec![
                                self.tiles[u0.tile].translated(&u0.offset),
                                self.tiles[u1.tile].translated(&u1.offset),
                            ],
                        });
                    }
                }
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeConstraintViolation {
    pub witness: String,
}

impl fmt::Display for TypeConstraintViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.witness)
    }
}

/// Local patterns understood by [`PeriodicTiling::find_pattern`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalPattern {
    KindPresent(TileKind),
    TypePresent(TriangleType),
    /// An edge between two triangles of the given types. For an OOT triangle
    /// this is its unique "T" edge.
    TriTriEdge(TriangleType, TriangleType),
}

#[derive(Clone, Debug)]
pub struct PatternMatch {
    pub tiles: Vec<Tile>,
}

pub(crate) fn reduce_tile(lattice: &Lattice, tile: &Tile) -> Tile {
    let (_, shift) = lattice.reduce(tile.anchor());
    tile.translated(&-&shift)
}

fn chain_fan(
    tiles: &[Tile],
    rep: &CycNum,
    entries: Vec<FanEntry>,
) -> Result<Vec<FanEntry>, TilingError> {
    // Each corner occupies a counterclockwise wedge from dir(next - v) to
    // dir(prev - v); successive fan corners share end/start directions.
    let dir_of = |entry: &FanEntry, towards_next: bool| -> CycNum {
        let t = &tiles[entry.tile];
        let n = t.vertices().len();
        let v = &t.vertices()[entry.corner];
        let other = if towards_next {
            &t.vertices()[(entry.corner + 1) % n]
        } else {
            &t.vertices()[(entry.corner + n - 1) % n]
        };
        other - v
    };
    let mut by_start: BTreeMap<CycNum, usize> = BTreeMap::new();
    for (i, e) in entries.iter().enumerate() {
        if by_start.insert(dir_of(e, true), i).is_some() {
            return Err(TilingError::BrokenFan { vertex: rep.to_string() });
        }
    }
    let mut order = vec![0usize];
    let mut units = tiles[entries[0].tile].kind().angle_units();
    loop {
        let cur = *order.last().unwrap();
        let end = dir_of(&entries[cur], false);
        let next = *by_start
            .get(&end)
            .ok_or_else(|| TilingError::AngleSum {
                vertex: rep.to_string(),
                degrees: units * 30,
            })?;
        if next == order[0] {
            break;
        }
        if order.contains(&next) {
            return Err(TilingError::BrokenFan { vertex: rep.to_string() });
        }
        order.push(next);
        units += tiles[entries[next].tile].kind().angle_units();
        if units > 12 {
            return Err(TilingError::AngleSum {
                vertex: rep.to_string(),
                degrees: units * 30,
            });
        }
    }
    if order.len() != entries.len() || units != 12 {
        return Err(TilingError::AngleSum {
            vertex: rep.to_string(),
            degrees: units * 30,
        });
    }
    Ok(order.into_iter().map(|i| entries[i].clone()).collect())
}

/// Canonical vertex-configuration notation, e.g. "3^2.4.3.4".
pub fn config_notation(cycle: &[u8]) -> String {
    let n = cycle.len();
    let mut best: Option<Vec<u8>> = None;
    let mut consider = |seq: Vec<u8>| {
        if best.as_ref().map(|b| seq < *b).unwrap_or(true) {
            best = Some(seq);
        }
    };
    for start in 0..n {
        let fwd: Vec<u8> = (0..n).map(|i| cycle[(start + i) % n]).collect();
        let rev: Vec<u8> = (0..n).map(|i| cycle[(start + n - i) % n]).collect();
        consider(fwd);
        consider(rev);
    }
    let canon = best.unwrap();
    // Run-length notation.
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < canon.len() {
        let mut j = i;
        while j < canon.len() && canon[j] == canon[i] {
            j += 1;
        }
        let run = j - i;
        if run == 1 {
            parts.push(format!("{}", canon[i]));
        } else {
            parts.push(format!("{}^{}", canon[i], run));
        }
        i = j;
    }
    parts.join(".")
}

/// Shortest squared distance between distinct plane points of the given
/// reduced classes, minimized over lattice translates.
pub fn min_distance_sq_between_classes(
    lattice: &Lattice,
    classes: &[CycNum],
) -> Option<SqrtThreeRat> {
    let (b1, b2) = lattice.reduced_basis();
    let mut best: Option<SqrtThreeRat> = None;
    for (i, v) in classes.iter().enumerate() {
        for w in classes.iter().skip(i) {
            for k1 in -2i64..=2 {
                for k2 in -2i64..=2 {
                    let shift = b1.scale(&BigRational::from_integer(BigInt::from(k1)))
                        + b2.scale(&BigRational::from_integer(BigInt::from(k2)));
                    let d = (&(w + &shift) - v).norm_sq();
                    if d.is_zero() {
                        continue;
                    }
                    if best.as_ref().map(|b| &d < b).unwrap_or(true) {
                        best = Some(d);
                    }
                }
            }
        }
    }
    best
}

pub(crate) fn bigrational_from_i64(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact covolume as f64 for reporting; panics if out of range.
pub(crate) fn approx(v: &SqrtThreeRat) -> f64 {
    let x = v.to_f64();
    assert!(x.is_finite());
    x
}

#[allow(unused)]
fn unused_lint_helpers(r: &BigRational) -> bool {
    r.numer().abs().to_i64().is_some()
}
