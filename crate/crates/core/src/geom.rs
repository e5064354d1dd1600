//! Exact planar geometry over Q(zeta12) points: dot/cross products, convex
//! polygon predicates, point-segment distances, and circumcenters. All
//! predicates reduce to sign computations in Q(sqrt3).

use crate::cyclo::CycNum;
use crate::sqrt3::SqrtThreeRat;

/// Re(conj(a) * b): the Euclidean dot product of a and b as plane vectors.
pub fn dot(a: &CycNum, b: &CycNum) -> SqrtThreeRat {
    (&a.conj() * b).re()
}

/// Im(conj(a) * b): the z-component of the cross product a x b.
pub fn cross(a: &CycNum, b: &CycNum) -> SqrtThreeRat {
    (&a.conj() * b).im()
}

/// Squared Euclidean distance.
pub fn dist_sq(a: &CycNum, b: &CycNum) -> SqrtThreeRat {
    (a - b).norm_sq()
}

/// Sign of the signed area of triangle (a, b, c): >0 for counterclockwise.
pub fn orient(a: &CycNum, b: &CycNum, c: &CycNum) -> i32 {
    cross(&(b - a), &(c - a)).signum()
}

/// Twice the signed area of a polygon (shoelace).
pub fn polygon_area_x2(vertices: &[CycNum]) -> SqrtThreeRat {
    let mut acc = SqrtThreeRat::zero();
    let n = vertices.len();
    for i in 0..n {
        acc += &cross(&vertices[i], &vertices[(i + 1) % n]);
    }
    acc
}

/// Exact squared distance from point `p` to segment [a, b].
pub fn point_segment_dist_sq(p: &CycNum, a: &CycNum, b: &CycNum) -> SqrtThreeRat {
    let ab = b - a;
    let ap = p - a;
    let len = ab.norm_sq();
    if len.is_zero() {
        return ap.norm_sq();
    }
    let t = dot(&ab, &ap); // parameter * len
    if t.signum() <= 0 {
        return ap.norm_sq();
    }
    if t >= len {
        return dist_sq(p, b);
    }
    // Perpendicular distance: |ap|^2 - t^2/len
    &ap.norm_sq() - &(&(&t * &t) / &len)
}

/// True iff the closed point `p` lies inside or on the convex ccw polygon.
pub fn point_in_convex(p: &CycNum, polygon: &[CycNum]) -> bool {
    let n = polygon.len();
    (0..n).all(|i| orient(&polygon[i], &polygon[(i + 1) % n], p) >= 0)
}

/// True iff `p` lies strictly inside the convex ccw polygon.
pub fn point_in_convex_open(p: &CycNum, polygon: &[CycNum]) -> bool {
    let n = polygon.len();
    (0..n).all(|i| orient(&polygon[i], &polygon[(i + 1) % n], p) > 0)
}

fn project_range(axis: &CycNum, points: &[CycNum]) -> (SqrtThreeRat, SqrtThreeRat) {
    let mut lo = dot(axis, &points[0]);
    let mut hi = lo.clone();
    for p in &points[1..] {
        let v = dot(axis, p);
        if v < lo {
            lo = v.clone();
        }
        if v > hi {
            hi = v;
        }
    }
    (lo, hi)
}

fn edge_normals(polygon: &[CycNum]) -> Vec<CycNum> {
    let n = polygon.len();
    (0..n)
        .map(|i| {
            let e = &polygon[(i + 1) % n] - &polygon[i];
            // Rotate by 90 degrees: multiply by i = z^3.
            &CycNum::zeta_pow(3) * &e
        })
        .collect()
}

/// Separating-axis test: true iff the interiors of two convex polygons meet.
pub fn convex_interiors_intersect(a: &[CycNum], b: &[CycNum]) -> bool {
    for axis in edge_normals(a).iter().chain(edge_normals(b).iter()) {
        let (alo, ahi) = project_range(axis, a);
        let (blo, bhi) = project_range(axis, b);
        if ahi <= blo || bhi <= alo {
            return false;
        }
    }
    true
}

/// Separating-axis test for a closed segment against a closed convex polygon.
pub fn segment_intersects_convex(s0: &CycNum, s1: &CycNum, polygon: &[CycNum]) -> bool {
    let seg = [s0.clone(), s1.clone()];
    let d = s1 - s0;
    let mut axes = edge_normals(polygon);
    if !d.is_zero() {
        axes.push(&CycNum::zeta_pow(3) * &d);
        axes.push(d);
    }
    for axis in &axes {
        if axis.is_zero() {
            continue;
        }
        let (alo, ahi) = project_range(axis, &seg);
        let (blo, bhi) = project_range(axis, polygon);
        if ahi < blo || bhi < alo {
            return false;
        }
    }
    true
}

/// Circumcenter of three non-collinear exact points.
pub fn circumcenter(a: &CycNum, b: &CycNum, c: &CycNum) -> CycNum {
    // Solve |x - a|^2 = |x - b|^2 = |x - c|^2 by Cramer's rule on
    // 2 (b-a).x = |b|^2-|a|^2 ; 2 (c-a).x = |c|^2-|a|^2.
    let ab = b - a;
    let ac = c - a;
    let d = &SqrtThreeRat::from_int(2) * &cross(&ab, &ac);
    assert!(!d.is_zero(), "circumcenter of collinear points");
    let ab2 = ab.norm_sq();
    let ac2 = ac.norm_sq();
    let ux = &(&(&ac.im() * &ab2) - &(&ab.im() * &ac2)) / &d;
    let uy = &(&(&ab.re() * &ac2) - &(&ac.re() * &ab2)) / &d;
    a + &CycNum::from_re_im(&ux, &uy)
}

/// Center of mass of a vertex list.
pub fn centroid(vertices: &[CycNum]) -> CycNum {
    let mut acc = CycNum::zero();
    for v in vertices {
        acc += v;
    }
    acc.div_int(vertices.len() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(re: f64, im: f64, v: &CycNum) {
        let (r, i) = v.to_complex_f64();
        assert!((r - re).abs() < 1e-9 && (i - im).abs() < 1e-9, "{v:?}");
    }

    #[test]
    fn dot_cross_basics() {
        let one = CycNum::one();
        let i = CycNum::i();
        assert_eq!(dot(&one, &i), SqrtThreeRat::zero());
        assert_eq!(cross(&one, &i), SqrtThreeRat::one());
        assert_eq!(cross(&i, &one), -SqrtThreeRat::one());
        assert_eq!(dot(&CycNum::zeta(), &CycNum::zeta()), SqrtThreeRat::one());
    }

    #[test]
    fn circumcenters() {
        // Equilateral triangle 0, 1, omega: circumcenter = centroid.
        let a = CycNum::zero();
        let b = CycNum::one();
        let c = CycNum::omega();
        let cc = circumcenter(&a, &b, &c);
        assert_eq!(cc, centroid(&[a.clone(), b.clone(), c.clone()]));
        assert_eq!(dist_sq(&cc, &a), SqrtThreeRat::from_parts(1, 3, 0, 1));
        pt(0.5, 0.2886751345948129, &cc);
        // Unit square corner triple.
        let s = circumcenter(&CycNum::zero(), &CycNum::one(), &(CycNum::one() + CycNum::i()));
        pt(0.5, 0.5, &s);
        assert_eq!(dist_sq(&s, &CycNum::zero()), SqrtThreeRat::from_parts(1, 2, 0, 1));
    }

    #[test]
    fn sat_disjoint_and_overlap() {
        let unit_sq = vec![
            CycNum::zero(),
            CycNum::one(),
            CycNum::one() + CycNum::i(),
            CycNum::i(),
        ];
        let shifted: Vec<CycNum> = unit_sq.iter().map(|v| v + &CycNum::one()).collect();
        // Sharing an edge: interiors disjoint.
        assert!(!convex_interiors_intersect(&unit_sq, &shifted));
        let half: Vec<CycNum> = unit_sq.iter().map(|v| v + &CycNum::one().div_int(2)).collect();
        assert!(convex_interiors_intersect(&unit_sq, &half));
        assert!(convex_interiors_intersect(&unit_sq, &unit_sq));
    }

    #[test]
    fn segment_polygon() {
        let tri = vec![CycNum::zero(), CycNum::one(), CycNum::omega()];
        // Segment passing through the interior.
        let p = CycNum::from_re_im(
            &SqrtThreeRat::from_parts(1, 2, 0, 1),
            &SqrtThreeRat::from_parts(-1, 1, 0, 1),
        );
        let q = CycNum::from_re_im(
            &SqrtThreeRat::from_parts(1, 2, 0, 1),
            &SqrtThreeRat::from_parts(2, 1, 0, 1),
        );
        assert!(segment_intersects_convex(&p, &q, &tri));
        // Touching at a vertex counts (closed intersection).
        let r = CycNum::one() + CycNum::one();
        assert!(segment_intersects_convex(&CycNum::one(), &r, &tri));
        // Fully outside.
        let far = CycNum::from_int(5);
        let far2 = CycNum::from_int(6);
        assert!(!segment_intersects_convex(&far, &far2, &tri));
    }

    #[test]
    fn point_segment() {
        let a = CycNum::zero();
        let b = CycNum::from_int(2);
        let p = CycNum::one() + CycNum::i();
        assert_eq!(point_segment_dist_sq(&p, &a, &b), SqrtThreeRat::one());
        let q = CycNum::from_int(-1);
        assert_eq!(point_segment_dist_sq(&q, &a, &b), SqrtThreeRat::one());
        let r = CycNum::from_int(3) + CycNum::i();
        assert_eq!(point_segment_dist_sq(&r, &a, &b), SqrtThreeRat::from_int(2));
    }
}
