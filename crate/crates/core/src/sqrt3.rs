//! Exact arithmetic in the real quadratic field Q(sqrt(3)).
//!
//! `SqrtThreeRat` is the scalar type for every squared length, area, and
//! inequality in the crate. It carries exact rational coefficients and a
//! total order computed by sign rationalization, never by floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `a + b*sqrt(3)` with exact rational `a`, `b`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SqrtThreeRat {
    pub a: BigRational,
    pub b: BigRational,
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl SqrtThreeRat {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        SqrtThreeRat { a, b }
    }

    /// `n/d + (bn/bd)*sqrt(3)` from machine integers.
    pub fn from_parts(n: i64, d: i64, bn: i64, bd: i64) -> Self {
        SqrtThreeRat::new(rat(n, d), rat(bn, bd))
    }

    pub fn from_int(n: i64) -> Self {
        SqrtThreeRat::new(int(n), BigRational::zero())
    }

    pub fn from_rational(a: BigRational) -> Self {
        SqrtThreeRat::new(a, BigRational::zero())
    }

    pub fn zero() -> Self {
        SqrtThreeRat::default()
    }

    pub fn one() -> Self {
        SqrtThreeRat::from_int(1)
    }

    /// sqrt(3) itself.
    pub fn sqrt3() -> Self {
        SqrtThreeRat::new(BigRational::zero(), BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Exact sign of `a + b*sqrt(3)`.
    ///
    /// When the signs of `a` and `b` disagree the sign is settled by comparing
    /// `a^2` against `3 b^2`; the two can never be equal for nonzero
    /// coefficients since sqrt(3) is irrational.
    pub fn signum(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        match (sa, sb) {
            (0, 0) => 0,
            (s, 0) | (0, s) => s,
            (1, 1) => 1,
            (-1, -1) => -1,
            _ => {
                let a2 = &self.a * &self.a;
                let b2_3 = &self.b * &self.b * int(3);
                match a2.cmp(&b2_3) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => unreachable!("sqrt(3) is irrational"),
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn inv(&self) -> Self {
        // 1/(a+b*sqrt3) = (a-b*sqrt3)/(a^2-3b^2)
        let den = &self.a * &self.a - &self.b * &self.b * int(3);
        assert!(!den.is_zero(), "division by zero in Q(sqrt3)");
        SqrtThreeRat::new(&self.a / &den, -&self.b / &den)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        SqrtThreeRat::new(&self.a * r, &self.b * r)
    }

    /// Conjugate `a - b*sqrt(3)` (the other real embedding).
    pub fn conj(&self) -> Self {
        SqrtThreeRat::new(self.a.clone(), -self.b.clone())
    }

    /// Exact integer floor.
    pub fn floor(&self) -> BigInt {
        if self.b.is_zero() {
            return self.a.floor().to_integer();
        }
        // Rational enclosure l/d <= sqrt(3) < (l+1)/d with d > denom-scaled |b|
        // so the enclosure of the value spans at most one integer boundary;
        // the boundary case is then settled exactly.
        let d: BigInt = self.b.numer().abs().max(BigInt::from(1)) * BigInt::from(16);
        let l = (BigInt::from(3) * &d * &d).sqrt();
        let lo_s3 = BigRational::new(l.clone(), d.clone());
        let hi_s3 = BigRational::new(l + 1, d);
        let (lo, hi) = if self.b.is_positive() {
            (&self.a + &self.b * lo_s3, &self.a + &self.b * hi_s3)
        } else {
            (&self.a + &self.b * hi_s3, &self.a + &self.b * lo_s3)
        };
        let fl = lo.floor().to_integer();
        let fh = hi.floor().to_integer();
        if fl == fh {
            return fl;
        }
        // Value is within [fl, fh+1) and the enclosure spans the boundary fh.
        let diff = self - &SqrtThreeRat::from_rational(BigRational::from_integer(fh.clone()));
        if diff.signum() >= 0 {
            fh
        } else {
            fl
        }
    }

    /// Nearest integer, ties upward (floor of x + 1/2).
    pub fn round(&self) -> BigInt {
        (self + &SqrtThreeRat::from_parts(1, 2, 0, 1)).floor()
    }

    /// Approximate value, for display and heuristics only.
    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * 3f64.sqrt()
    }
}

fn sign(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for SqrtThreeRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SqrtThreeRat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).signum() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for SqrtThreeRat {
            type Output = SqrtThreeRat;
            fn $method(self, rhs: SqrtThreeRat) -> SqrtThreeRat {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&SqrtThreeRat> for SqrtThreeRat {
            type Output = SqrtThreeRat;
            fn $method(self, rhs: &SqrtThreeRat) -> SqrtThreeRat {
                (&self).$method(rhs)
            }
        }
        impl $trait<SqrtThreeRat> for &SqrtThreeRat {
            type Output = SqrtThreeRat;
            fn $method(self, rhs: SqrtThreeRat) -> SqrtThreeRat {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&SqrtThreeRat> for &SqrtThreeRat {
    type Output = SqrtThreeRat;
    fn add(self, rhs: &SqrtThreeRat) -> SqrtThreeRat {
        SqrtThreeRat::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}
forward_binop!(Add, add);

impl Sub<&SqrtThreeRat> for &SqrtThreeRat {
    type Output = SqrtThreeRat;
    fn sub(self, rhs: &SqrtThreeRat) -> SqrtThreeRat {
        SqrtThreeRat::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}
forward_binop!(Sub, sub);

impl Mul<&SqrtThreeRat> for &SqrtThreeRat {
    type Output = SqrtThreeRat;
    fn mul(self, rhs: &SqrtThreeRat) -> SqrtThreeRat {
        SqrtThreeRat::new(
            &self.a * &rhs.a + &self.b * &rhs.b * int(3),
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}
forward_binop!(Mul, mul);

impl Div<&SqrtThreeRat> for &SqrtThreeRat {
    type Output = SqrtThreeRat;
    fn div(self, rhs: &SqrtThreeRat) -> SqrtThreeRat {
        self * &rhs.inv()
    }
}
forward_binop!(Div, div);

impl Neg for SqrtThreeRat {
    type Output = SqrtThreeRat;
    fn neg(self) -> SqrtThreeRat {
        SqrtThreeRat::new(-self.a, -self.b)
    }
}
impl Neg for &SqrtThreeRat {
    type Output = SqrtThreeRat;
    fn neg(self) -> SqrtThreeRat {
        SqrtThreeRat::new(-self.a.clone(), -self.b.clone())
    }
}

impl AddAssign<&SqrtThreeRat> for SqrtThreeRat {
    fn add_assign(&mut self, rhs: &SqrtThreeRat) {
        *self = &*self + rhs;
    }
}
impl SubAssign<&SqrtThreeRat> for SqrtThreeRat {
    fn sub_assign(&mut self, rhs: &SqrtThreeRat) {
        *self = &*self - rhs;
    }
}
impl MulAssign<&SqrtThreeRat> for SqrtThreeRat {
    fn mul_assign(&mut self, rhs: &SqrtThreeRat) {
        *self = &*self * rhs;
    }
}

/// Serializes as `a + b*r3`, e.g. `7/3 + 4/3*r3`. Round-trips exactly.
impl fmt::Display for SqrtThreeRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*r3", fmt_rat(&self.a), fmt_rat(&self.b))
    }
}

impl fmt::Debug for SqrtThreeRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (~{:.6})", self, self.to_f64())
    }
}

pub(crate) fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn parse_rat(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|e| format!("bad numerator {n:?}: {e}"))?;
        let d = BigInt::from_str(d.trim()).map_err(|e| format!("bad denominator {d:?}: {e}"))?;
        if d.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(BigRational::new(n, d))
    } else {
        let n = BigInt::from_str(s).map_err(|e| format!("bad integer {s:?}: {e}"))?;
        Ok(BigRational::from_integer(n))
    }
}

impl FromStr for SqrtThreeRat {
    type Err = String;

    /// Accepts `a + b*r3`, `a`, `b*r3`, and `a - b*r3`, whitespace optional.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err("empty Q(sqrt3) literal".into());
        }
        // Split at the first top-level +/- separating the two terms.
        let bytes = compact.as_bytes();
        let mut split = None;
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1].is_ascii_digit() {
                split = Some(i);
                break;
            }
        }
        let (a_str, b_str) = match split {
            Some(i) => {
                let sign = if bytes[i] == b'-' { "-" } else { "" };
                (compact[..i].to_string(), format!("{sign}{}", &compact[i + 1..]))
            }
            None => {
                if compact.contains("r3") {
                    ("0".to_string(), compact.clone())
                } else {
                    (compact.clone(), "0".to_string())
                }
            }
        };
        let a = parse_rat(&a_str)?;
        let b = if b_str == "0" {
            BigRational::zero()
        } else {
            let stripped = b_str
                .strip_suffix("*r3")
                .or_else(|| b_str.strip_suffix("r3"))
                .ok_or_else(|| format!("expected r3 term, got {b_str:?}"))?;
            if stripped.is_empty() || stripped == "-" {
                parse_rat(&format!("{stripped}1"))?
            } else {
                parse_rat(stripped)?
            }
        };
        Ok(SqrtThreeRat::new(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q3(n: i64, d: i64, bn: i64, bd: i64) -> SqrtThreeRat {
        SqrtThreeRat::from_parts(n, d, bn, bd)
    }

    #[test]
    fn sign_rationalization() {
        // 2 - sqrt(3) > 0, 3/2 - sqrt(3) < 0
        assert_eq!(q3(2, 1, -1, 1).signum(), 1);
        assert_eq!(q3(3, 2, -1, 1).signum(), -1);
        assert_eq!(q3(-2, 1, 1, 1).signum(), -1);
        assert_eq!(q3(-3, 2, 1, 1).signum(), 1);
        assert_eq!(SqrtThreeRat::zero().signum(), 0);
    }

    #[test]
    fn ordering_matches_float() {
        // Fuzz total-order consistency against floating evaluation.
        let mut vals = Vec::new();
        for n in -6..7 {
            for bn in -6..7 {
                for d in 1..4 {
                    vals.push(q3(n, d, bn, d + 1));
                }
            }
        }
        for x in &vals {
            for y in &vals {
                let exact = x.cmp(y);
                let fx = x.to_f64();
                let fy = y.to_f64();
                if (fx - fy).abs() > 1e-9 {
                    let float = fx.partial_cmp(&fy).unwrap();
                    assert_eq!(exact, float, "{x} vs {y}");
                }
            }
        }
    }

    #[test]
    fn arithmetic_and_inverse() {
        let x = q3(2, 1, 1, 1); // 2 + sqrt3
        let y = &x * &x;
        assert_eq!(y, q3(7, 1, 4, 1)); // (2+sqrt3)^2 = 7+4sqrt3
        assert_eq!(x.inv(), q3(2, 1, -1, 1)); // (2+sqrt3)^-1 = 2-sqrt3
        assert_eq!(&x * &x.inv(), SqrtThreeRat::one());
    }

    #[test]
    fn floor_and_round() {
        assert_eq!(SqrtThreeRat::sqrt3().floor(), BigInt::from(1));
        assert_eq!(q3(0, 1, -1, 1).floor(), BigInt::from(-2)); // -sqrt3 = -1.73..
        assert_eq!(q3(7, 1, 4, 1).floor(), BigInt::from(13)); // 13.92
        assert_eq!(q3(7, 1, 4, 1).round(), BigInt::from(14));
        assert_eq!(q3(5, 1, 0, 1).floor(), BigInt::from(5));
        assert_eq!(q3(-7, 2, 0, 1).floor(), BigInt::from(-4));
        // Large coefficients still exact.
        let big = SqrtThreeRat::new(
            BigRational::new(BigInt::from(10).pow(30), BigInt::from(7)),
            BigRational::new(-BigInt::from(10).pow(29), BigInt::from(11)),
        );
        let fl = big.floor();
        let lo = &big - &SqrtThreeRat::from_rational(BigRational::from_integer(fl.clone()));
        assert!(lo.signum() >= 0);
        let hi = &SqrtThreeRat::from_rational(BigRational::from_integer(fl + 1)) - &big;
        assert!(hi.signum() > 0);
    }

    #[test]
    fn display_roundtrip() {
        let vals = [
            q3(0, 1, 0, 1),
            q3(7, 3, -4, 3),
            q3(-13, 12, 1, 3),
            q3(2, 1, 1, 1),
        ];
        for v in &vals {
            let s = v.to_string();
            let back: SqrtThreeRat = s.parse().unwrap();
            assert_eq!(&back, v, "roundtrip of {s}");
        }
        // Lenient input forms.
        assert_eq!("36".parse::<SqrtThreeRat>().unwrap(), q3(36, 1, 0, 1));
        assert_eq!("2+r3".parse::<SqrtThreeRat>().unwrap(), q3(2, 1, 1, 1));
        assert_eq!("2-1*r3".parse::<SqrtThreeRat>().unwrap(), q3(2, 1, -1, 1));
        assert_eq!("13/3+4/3*r3".parse::<SqrtThreeRat>().unwrap(), q3(13, 3, 4, 3));
    }
}
