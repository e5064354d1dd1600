//! Text interchange format for periodic tilings.
//!
//! ```text
//! # optional comments
//! basis <cycnum> <cycnum>
//! T <v> <v> <v>
//! S <v> <v> <v> <v>
//! ```
//!
//! Coordinates use the compact Q(zeta12) serialization
//! `c0+c1*z+c2*z^2+c3*z^3` with rationals `p/q`. Vertices must lie in
//! Z[zeta12]; the parser rejects anything else.

use crate::cyclo::CycNum;

use super::{PeriodicTiling, Tile, TileKind, TilingError};

pub fn write_tiling(t: &PeriodicTiling) -> String {
    let (t1, t2) = t.lattice().basis();
    let mut out = String::new();
    out.push_str(&format!("basis {} {}\n", t1.to_compact(), t2.to_compact()));
    for tile in t.tiles() {
        out.push(tile.kind().letter());
        for v in tile.vertices() {
            out.push(' ');
            out.push_str(&v.to_compact());
        }
        out.push('\n');
    }
    out
}

pub fn parse_tiling(text: &str) -> Result<PeriodicTiling, TilingError> {
    let mut basis: Option<(CycNum, CycNum)> = None;
    let mut tiles: Vec<Tile> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut fields = content.split_whitespace();
        let head = fields.next().unwrap();
        let rest: Vec<&str> = fields.collect();
        match head {
            "basis" => {
                if rest.len() != 2 {
                    return Err(TilingError::Parse {
                        line,
                        msg: format!("basis needs 2 vectors, got {}", rest.len()),
                    });
                }
                let t1 = parse_vertex(rest[0], line, false)?;
                let t2 = parse_vertex(rest[1], line, false)?;
                if basis.replace((t1, t2)).is_some() {
                    return Err(TilingError::Parse { line, msg: "duplicate basis line".into() });
                }
            }
            "T" | "S" => {
                let kind = if head == "T" { TileKind::Triangle } else { TileKind::Square };
                if rest.len() != kind.sides() {
                    return Err(TilingError::Parse {
                        line,
                        msg: format!("{head} tile needs {} vertices, got {}", kind.sides(), rest.len()),
                    });
                }
                let vertices = rest
                    .iter()
                    .map(|s| parse_vertex(s, line, true))
                    .collect::<Result<Vec<_>, _>>()?;
                tiles.push(Tile::new(kind, vertices).map_err(|e| TilingError::Parse {
                    line,
                    msg: e.to_string(),
                })?);
            }
            other => {
                return Err(TilingError::Parse {
                    line,
                    msg: format!("unknown record {other:?}"),
                });
            }
        }
    }
    let (t1, t2) = basis.ok_or(TilingError::Parse { line: 0, msg: "missing basis line".into() })?;
    PeriodicTiling::new(t1, t2, tiles)
}

fn parse_vertex(s: &str, line: usize, must_be_integral: bool) -> Result<CycNum, TilingError> {
    let v: CycNum = s
        .parse()
        .map_err(|e| TilingError::Parse { line, msg: format!("{e}") })?;
    if must_be_integral && !v.is_integral() {
        return Err(TilingError::NonIntegralVertex(v.to_string()));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::{all_square, make_q};

    #[test]
    fn roundtrip() {
        for t in [all_square(), make_q()] {
            let text = write_tiling(&t);
            let back = parse_tiling(&text).unwrap();
            assert_eq!(back.tiles(), t.tiles());
            assert_eq!(back.lattice().basis(), t.lattice().basis());
            back.validate().unwrap();
        }
    }

    #[test]
    fn rejects_non_integral_vertex() {
        let text = "basis 1+0*z+0*z^2+0*z^3 0+0*z+0*z^2+1*z^3\nS 1/2+0*z+0*z^2+0*z^3 3/2+0*z+0*z^2+0*z^3 3/2+0*z+0*z^2+1*z^3 1/2+0*z+0*z^2+1*z^3\n";
        match parse_tiling(text) {
            Err(TilingError::NonIntegralVertex(_)) => {}
            other => panic!("expected NonIntegralVertex, got {other:?}"),
        }
    }

    #[test]
    fn comments_and_errors() {
        assert!(matches!(
            parse_tiling("# empty\n"),
            Err(TilingError::Parse { .. })
        ));
        assert!(matches!(
            parse_tiling("basis 1 1\nT 0 1 0\nbogus\n"),
            Err(TilingError::Parse { line: 3, .. })
        ));
    }
}
