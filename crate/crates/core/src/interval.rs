//! Directed-rounding interval arithmetic over f64, plus rigorous complex
//! enclosures of Q(zeta12) elements.
//!
//! Endpoint rounding is done by ulp-stepping: every primitive f64 operation
//! is correctly rounded to within 1/2 ulp, so widening each endpoint by one
//! ulp gives a sound enclosure without touching the FPU rounding mode.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::cyclo::CycNum;
use crate::sqrt3::SqrtThreeRat;

/// Next f64 above `x` (total-order bit increment).
pub fn next_up(x: f64) -> f64 {
    if x.is_nan() || x == f64::INFINITY {
        return x;
    }
    if x == 0.0 {
        return f64::from_bits(1);
    }
    let bits = x.to_bits();
    if x > 0.0 {
        f64::from_bits(bits + 1)
    } else {
        f64::from_bits(bits - 1)
    }
}

/// Next f64 below `x`.
pub fn next_down(x: f64) -> f64 {
    -next_up(-x)
}

/// Closed floating interval [lo, hi] with outward-rounded arithmetic.
#[derive(Clone, Copy, PartialEq)]
pub struct RealInterval {
    pub lo: f64,
    pub hi: f64,
}

impl RealInterval {
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "inverted interval [{lo}, {hi}]");
        RealInterval { lo, hi }
    }

    pub fn point(x: f64) -> Self {
        RealInterval { lo: x, hi: x }
    }

    pub fn zero() -> Self {
        RealInterval::point(0.0)
    }

    /// Encloses the exact rational `r`; endpoints verified by exact
    /// comparison, so the result is sound regardless of how `to_f64` rounds.
    pub fn from_rational(r: &BigRational) -> Self {
        let approx = r.to_f64().unwrap_or(0.0);
        if !approx.is_finite() {
            let s = if r.is_negative() { -1.0 } else { 1.0 };
            return if s > 0.0 {
                RealInterval::new(f64::MAX, f64::INFINITY)
            } else {
                RealInterval::new(f64::NEG_INFINITY, f64::MIN)
            };
        }
        let mut lo = next_down(approx);
        let mut hi = next_up(approx);
        // Tighten or expand by exact comparison.
        while BigRational::from_float(lo).map(|l| &l > r).unwrap_or(false) {
            lo = next_down(lo);
        }
        while BigRational::from_float(hi).map(|h| &h < r).unwrap_or(false) {
            hi = next_up(hi);
        }
        if let Some(l) = BigRational::from_float(approx) {
            if &l == r {
                return RealInterval::point(approx);
            }
        }
        RealInterval::new(lo, hi)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_rational(&self, r: &BigRational) -> bool {
        let lo = BigRational::from_float(self.lo);
        let hi = BigRational::from_float(self.hi);
        match (lo, hi) {
            (Some(l), Some(h)) => &l <= r && r <= &h,
            _ => self.lo == f64::NEG_INFINITY || self.hi == f64::INFINITY,
        }
    }

    pub fn contains_interval(&self, other: &RealInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &RealInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn intersect(&self, other: &RealInterval) -> Option<RealInterval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        if lo <= hi {
            Some(RealInterval::new(lo, hi))
        } else {
            None
        }
    }

    pub fn hull(&self, other: &RealInterval) -> RealInterval {
        RealInterval::new(self.lo.min(other.lo), self.hi.max(other.hi))
    }

    pub fn neg(&self) -> RealInterval {
        RealInterval::new(-self.hi, -self.lo)
    }

    pub fn add(&self, other: &RealInterval) -> RealInterval {
        RealInterval::new(next_down(self.lo + other.lo), next_up(self.hi + other.hi))
    }

    pub fn sub(&self, other: &RealInterval) -> RealInterval {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RealInterval) -> RealInterval {
        let cands = [
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        ];
        let lo = cands.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = cands.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        RealInterval::new(next_down(lo), next_up(hi))
    }

    pub fn div(&self, other: &RealInterval) -> RealInterval {
        assert!(
            !(other.lo <= 0.0 && other.hi >= 0.0),
            "interval division by an interval containing zero"
        );
        let cands = [
            self.lo / other.lo,
            self.lo / other.hi,
            self.hi / other.lo,
            self.hi / other.hi,
        ];
        let lo = cands.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = cands.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        RealInterval::new(next_down(lo), next_up(hi))
    }

    pub fn scale(&self, k: f64) -> RealInterval {
        self.mul(&RealInterval::point(k))
    }

    pub fn widen(&self, eps: f64) -> RealInterval {
        assert!(eps >= 0.0);
        RealInterval::new(next_down(self.lo - eps), next_up(self.hi + eps))
    }
}

impl std::fmt::Debug for RealInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{:.17}, {:.17}]", self.lo, self.hi)
    }
}

impl std::fmt::Display for RealInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Nested rational enclosures of sqrt(3): `l/2^prec <= sqrt3 <= (l+1)/2^prec`.
pub fn sqrt3_bounds(prec: u32) -> (BigRational, BigRational) {
    let scale = BigInt::from(1) << prec;
    let l = (BigInt::from(3) * &scale * &scale).sqrt();
    (
        BigRational::new(l.clone(), scale.clone()),
        BigRational::new(l + 1, scale),
    )
}

/// Encloses the exact value a + b*sqrt3 at the given bit precision.
pub fn enclose_sqrt3(v: &SqrtThreeRat, prec: u32) -> RealInterval {
    if v.b.is_zero() {
        return RealInterval::from_rational(&v.a);
    }
    let (s3_lo, s3_hi) = sqrt3_bounds(prec);
    let (blo, bhi) = if v.b.is_positive() {
        (&v.b * &s3_lo, &v.b * &s3_hi)
    } else {
        (&v.b * &s3_hi, &v.b * &s3_lo)
    };
    let lo = RealInterval::from_rational(&(&v.a + blo));
    let hi = RealInterval::from_rational(&(&v.a + bhi));
    RealInterval::new(lo.lo, hi.hi)
}

/// Rectangular complex enclosure with directed-rounding endpoints.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexInterval {
    pub re: RealInterval,
    pub im: RealInterval,
}

impl ComplexInterval {
    pub fn new(re: RealInterval, im: RealInterval) -> Self {
        ComplexInterval { re, im }
    }

    /// Rigorous enclosure of a Q(zeta12) element at `prec` bits of sqrt(3).
    ///
    /// Enclosures at increasing precision are nested (up to the 1-ulp floor
    /// of the endpoint representation), so widths never increase.
    pub fn embed(v: &CycNum, prec: u32) -> Self {
        ComplexInterval {
            re: enclose_sqrt3(&v.re(), prec),
            im: enclose_sqrt3(&v.im(), prec),
        }
    }

    /// Enclosure of |.|^2.
    pub fn norm_sq(&self) -> RealInterval {
        let re2 = self.re.mul(&self.re);
        let im2 = self.im.mul(&self.im);
        let raw = re2.add(&im2);
        // |.|^2 is nonnegative even when the enclosure straddles zero.
        RealInterval::new(raw.lo.max(0.0), raw.hi)
    }

    pub fn width(&self) -> f64 {
        self.re.width().max(self.im.width())
    }
}

/// Exact integer sign-consistent conversion helper: true iff the exact
/// rational equals the float (used by tests).
pub fn rational_equals_f64(r: &BigRational, x: f64) -> bool {
    BigRational::from_float(x).map(|v| &v == r).unwrap_or(false)
}

/// Sign of a BigInt as i32.
pub fn bigint_sign(x: &BigInt) -> i32 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sqrt3::rat;

    #[test]
    fn ulp_stepping() {
        assert!(next_up(1.0) > 1.0);
        assert!(next_down(1.0) < 1.0);
        assert_eq!(next_up(next_down(1.0)), 1.0);
        assert!(next_up(0.0) > 0.0);
        assert!(next_down(0.0) < 0.0);
        assert!(next_up(-1.0) > -1.0);
    }

    #[test]
    fn rational_enclosure_sound() {
        let r = rat(1, 3);
        let iv = RealInterval::from_rational(&r);
        assert!(iv.contains_rational(&r));
        assert!(iv.width() < 1e-15);
        // Exactly representable rationals become points.
        let half = rat(1, 2);
        let iv = RealInterval::from_rational(&half);
        assert_eq!(iv.lo, 0.5);
        assert_eq!(iv.hi, 0.5);
    }

    #[test]
    fn arithmetic_soundness_spot_check() {
        // (1/3 + 1/7) * 3/5 computed exactly vs. by intervals.
        let a = rat(1, 3);
        let b = rat(1, 7);
        let c = rat(3, 5);
        let exact = (&a + &b) * &c;
        let ia = RealInterval::from_rational(&a);
        let ib = RealInterval::from_rational(&b);
        let ic = RealInterval::from_rational(&c);
        let got = ia.add(&ib).mul(&ic);
        assert!(got.contains_rational(&exact));
    }

    #[test]
    fn embed_contains_and_narrows() {
        let v = CycNum::omega() + CycNum::i();
        let mut prev_width = f64::INFINITY;
        for prec in [8u32, 16, 32, 64, 128] {
            let enc = ComplexInterval::embed(&v, prec);
            // Exact real part of omega+i is 1/2, imaginary is 1/2 + sqrt3/2.
            assert!(enc.re.contains(0.5));
            let w = enc.width();
            assert!(w <= prev_width, "width grew at prec {prec}");
            prev_width = w;
        }
        let enc = ComplexInterval::embed(&v, 128);
        assert!(enc.width() < 1e-12);
        // |omega+i|^2 = 2 + sqrt3 ~ 3.7320508
        let n = enc.norm_sq();
        assert!(n.contains(3.7320508075688772));
    }

    #[test]
    fn norm_sq_interval_agrees_with_exact() {
        // Interval containment of the exact norm for a spread of elements.
        for c0 in -2..3i64 {
            for c3 in -2..3i64 {
                let v = CycNum::from_coeffs_i64([c0, 1, -1, c3]);
                let exact = v.norm_sq();
                let enc = ComplexInterval::embed(&v, 80).norm_sq();
                let approx = exact.to_f64();
                assert!(enc.contains(approx) || (enc.lo - approx).abs() < 1e-9);
                // Exact containment via rational bound comparison.
                let ex_enc = enclose_sqrt3(&exact, 120);
                assert!(enc.intersects(&ex_enc));
            }
        }
    }
}
