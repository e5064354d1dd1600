//! Exact arithmetic in the cyclotomic field Q(zeta_12) and enumeration of its
//! unit group.
//!
//! Elements are stored on the power basis {1, z, z^2, z^3} where z is a
//! primitive 12th root of unity with minimal polynomial x^4 - x^2 + 1, so
//! products reduce through z^4 = z^2 - 1. The named constants of the crate
//! live here: i = z^3, omega = z^2 = (1 + i*sqrt3)/2, sqrt3 = 2z - z^3.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::sqrt3::{fmt_rat, int, parse_rat, SqrtThreeRat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycloError {
    #[error("operation requires an element of Z[zeta12], got {0}")]
    NonIntegral(String),
    #[error("division by zero in Q(zeta12)")]
    DivisionByZero,
    #[error("invalid unit-class range: need 0 <= lo < hi")]
    InvalidRange,
    #[error("parse error: {0}")]
    Parse(String),
}

/// `c0 + c1*z + c2*z^2 + c3*z^3` with exact rational coefficients,
/// z a primitive 12th root of unity.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycNum {
    c: [BigRational; 4],
}

impl CycNum {
    pub fn new(c0: BigRational, c1: BigRational, c2: BigRational, c3: BigRational) -> Self {
        CycNum { c: [c0, c1, c2, c3] }
    }

    pub fn from_coeffs_i64(c: [i64; 4]) -> Self {
        CycNum {
            c: [int(c[0]), int(c[1]), int(c[2]), int(c[3])],
        }
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.c[k]
    }

    pub fn zero() -> Self {
        CycNum::default()
    }

    pub fn one() -> Self {
        CycNum::from_coeffs_i64([1, 0, 0, 0])
    }

    pub fn from_int(n: i64) -> Self {
        CycNum::from_coeffs_i64([n, 0, 0, 0])
    }

    pub fn from_rational(r: BigRational) -> Self {
        CycNum::new(r, BigRational::zero(), BigRational::zero(), BigRational::zero())
    }

    /// The generator z = zeta_12 = e^{i pi/6}.
    pub fn zeta() -> Self {
        CycNum::from_coeffs_i64([0, 1, 0, 0])
    }

    /// z^k for any integer k, reduced onto the power basis.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(12) as usize;
        // Powers 0..12 on the basis; z^6 = -1.
        const TABLE: [[i64; 4]; 12] = [
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
            [-1, 0, 1, 0],  // z^4 = z^2 - 1
            [0, -1, 0, 1],  // z^5 = z^3 - z
            [-1, 0, 0, 0],  // z^6 = -1
            [0, -1, 0, 0],
            [0, 0, -1, 0],
            [0, 0, 0, -1],
            [1, 0, -1, 0],  // z^10 = 1 - z^2
            [0, 1, 0, -1],  // z^11 = z - z^3
        ];
        CycNum::from_coeffs_i64(TABLE[k])
    }

    /// i = z^3.
    pub fn i() -> Self {
        CycNum::zeta_pow(3)
    }

    /// omega = (1 + i sqrt3)/2 = z^2.
    pub fn omega() -> Self {
        CycNum::zeta_pow(2)
    }

    /// sqrt(3) = 2z - z^3.
    pub fn sqrt3() -> Self {
        CycNum::from_coeffs_i64([0, 2, 0, -1])
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(BigRational::is_zero)
    }

    /// True iff the element lies in Z[zeta12].
    pub fn is_integral(&self) -> bool {
        self.c.iter().all(|r| r.denom().is_one())
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        CycNum::new(&self.c[0] * r, &self.c[1] * r, &self.c[2] * r, &self.c[3] * r)
    }

    pub fn div_int(&self, n: i64) -> Self {
        self.scale(&BigRational::new(BigInt::one(), BigInt::from(n)))
    }

    /// Complex conjugation, z -> z^-1.
    pub fn conj(&self) -> Self {
        // Images of the basis under conjugation:
        // 1 -> 1; z -> z - z^3; z^2 -> 1 - z^2; z^3 -> -z^3.
        CycNum::new(
            &self.c[0] + &self.c[2],
            self.c[1].clone(),
            -&self.c[2],
            -&self.c[1] - &self.c[3],
        )
    }

    /// Galois automorphism z -> z^k, for k coprime to 12.
    pub fn galois(&self, k: u8) -> Self {
        assert!(matches!(k, 1 | 5 | 7 | 11), "z -> z^{k} is not an automorphism");
        let mut out = CycNum::from_rational(self.c[0].clone());
        for (j, cj) in self.c.iter().enumerate().skip(1) {
            let img = CycNum::zeta_pow((k as i64) * (j as i64));
            out += &img.scale(cj);
        }
        out
    }

    /// Field norm: the product of all four Galois conjugates, a rational.
    pub fn field_norm(&self) -> BigRational {
        let prod = self * &self.galois(5) * self.galois(7) * self.galois(11);
        assert!(
            prod.c[1].is_zero() && prod.c[2].is_zero() && prod.c[3].is_zero(),
            "field norm must be rational"
        );
        prod.c[0].clone()
    }

    /// True iff `self` is a unit of Z[zeta12]; rejects non-integral input.
    pub fn is_unit(&self) -> Result<bool, CycloError> {
        if !self.is_integral() {
            return Err(CycloError::NonIntegral(self.to_string()));
        }
        let n = self.field_norm();
        Ok(n.numer().abs().is_one() && n.denom().is_one())
    }

    /// Multiplicative inverse via the norm form.
    pub fn inv(&self) -> Result<CycNum, CycloError> {
        let n = self.field_norm();
        if n.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        let cof = self.galois(5) * self.galois(7) * self.galois(11);
        Ok(cof.scale(&n.recip()))
    }

    pub fn pow(&self, e: i64) -> Result<CycNum, CycloError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = CycNum::one();
        for _ in 0..e.unsigned_abs() {
            out *= &base;
        }
        Ok(out)
    }

    /// |self|^2 = self * conj(self), always an element of Q(sqrt3).
    pub fn norm_sq(&self) -> SqrtThreeRat {
        let p = self * &self.conj();
        // Conjugation-invariant elements have the form x + y*(2z - z^3).
        debug_assert!(p.c[2].is_zero() && p.c[1] == -&p.c[3] * int(2));
        SqrtThreeRat::new(p.c[0].clone(), -p.c[3].clone())
    }

    /// Real part as an element of Q(sqrt3).
    pub fn re(&self) -> SqrtThreeRat {
        // Re(z) = sqrt3/2, Re(z^2) = 1/2, Re(z^3) = 0.
        SqrtThreeRat::new(
            &self.c[0] + &self.c[2] / int(2),
            &self.c[1] / int(2),
        )
    }

    /// Imaginary part as an element of Q(sqrt3).
    pub fn im(&self) -> SqrtThreeRat {
        // Im(z) = 1/2, Im(z^2) = sqrt3/2, Im(z^3) = 1.
        SqrtThreeRat::new(
            &self.c[1] / int(2) + &self.c[3],
            &self.c[2] / int(2),
        )
    }

    /// Rebuild from exact real and imaginary parts (Q(zeta12) = Q(sqrt3) + i*Q(sqrt3)).
    pub fn from_re_im(re: &SqrtThreeRat, im: &SqrtThreeRat) -> Self {
        let c1 = &re.b * int(2);
        let c2 = &im.b * int(2);
        let c0 = &re.a - &im.b;
        let c3 = &im.a - &re.b;
        CycNum::new(c0, c1, c2, c3)
    }

    /// Deterministic representation order on coefficient 4-tuples.
    ///
    /// This is not a numeric order on complex values; it exists so canonical
    /// forms and set containers have a stable ordering.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        for k in 0..4 {
            match self.c[k].cmp(&other.c[k]) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Approximate complex value, for display and heuristics only.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        (self.re().to_f64(), self.im().to_f64())
    }

    /// Compact serialization without spaces, used in tiling files.
    pub fn to_compact(&self) -> String {
        format!(
            "{}+{}*z+{}*z^2+{}*z^3",
            fmt_rat(&self.c[0]),
            fmt_rat(&self.c[1]),
            fmt_rat(&self.c[2]),
            fmt_rat(&self.c[3])
        )
    }
}

impl PartialOrd for CycNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.lex_cmp(other))
    }
}

impl Ord for CycNum {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_cmp(other)
    }
}

impl Add<&CycNum> for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        CycNum::new(
            &self.c[0] + &rhs.c[0],
            &self.c[1] + &rhs.c[1],
            &self.c[2] + &rhs.c[2],
            &self.c[3] + &rhs.c[3],
        )
    }
}

impl Sub<&CycNum> for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        CycNum::new(
            &self.c[0] - &rhs.c[0],
            &self.c[1] - &rhs.c[1],
            &self.c[2] - &rhs.c[2],
            &self.c[3] - &rhs.c[3],
        )
    }
}

impl Mul<&CycNum> for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        // Schoolbook product up to degree 6, then reduce with
        // z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1.
        let mut raw = [
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
        ];
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if rhs.c[j].is_zero() {
                    continue;
                }
                raw[i + j] += &self.c[i] * &rhs.c[j];
            }
        }
        let [r0, r1, r2, r3, r4, r5, r6] = raw;
        CycNum::new(r0 - &r4 - &r6, r1 - &r5, r2 + r4, r3 + r5)
    }
}

macro_rules! forward_cyc_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                (&self).$method(rhs)
            }
        }
        impl $trait<CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                self.$method(&rhs)
            }
        }
    };
}
forward_cyc_binop!(Add, add);
forward_cyc_binop!(Sub, sub);
forward_cyc_binop!(Mul, mul);

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum::new(-self.c[0].clone(), -self.c[1].clone(), -self.c[2].clone(), -self.c[3].clone())
    }
}
impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -self.clone()
    }
}

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        *self = &*self + rhs;
    }
}
impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        *self = &*self - rhs;
    }
}
impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = &*self * rhs;
    }
}

/// Serializes as `c0 + c1*z + c2*z^2 + c3*z^3` with rationals `p/q`.
/// Round-trips exactly.
impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}*z + {}*z^2 + {}*z^3",
            fmt_rat(&self.c[0]),
            fmt_rat(&self.c[1]),
            fmt_rat(&self.c[2]),
            fmt_rat(&self.c[3])
        )
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_complex_f64();
        write!(f, "{} (~{:.4}{:+.4}i)", self, re, im)
    }
}

impl FromStr for CycNum {
    type Err = CycloError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(CycloError::Parse("empty Q(zeta12) literal".into()));
        }
        // Terms separated by '+' signs that follow a digit or a 'z'.
        let bytes = compact.as_bytes();
        let mut terms: Vec<String> = Vec::new();
        let mut start = 0usize;
        for i in 1..bytes.len() {
            if bytes[i] == b'+' && (bytes[i - 1].is_ascii_digit() || bytes[i - 1] == b'z') {
                terms.push(compact[start..i].to_string());
                start = i + 1;
            }
        }
        terms.push(compact[start..].to_string());
        let mut c = [
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
        ];
        for t in &terms {
            let (coeff_str, power) = if let Some(base) = t.strip_suffix("*z^2") {
                (base, 2)
            } else if let Some(base) = t.strip_suffix("*z^3") {
                (base, 3)
            } else if let Some(base) = t.strip_suffix("*z") {
                (base, 1)
            } else if t == "z" {
                ("1", 1)
            } else {
                (t.as_str(), 0)
            };
            let r = parse_rat(coeff_str).map_err(CycloError::Parse)?;
            c[power] += r;
        }
        let [c0, c1, c2, c3] = c;
        Ok(CycNum::new(c0, c1, c2, c3))
    }
}

/// One unit class of Z[zeta12] modulo multiplication by 12th roots of unity.
#[derive(Debug, Clone)]
pub struct UnitClass {
    /// Representative unit, a power of the fundamental unit omega + i.
    pub representative: CycNum,
    /// Exponent n with representative = (omega + i)^n.
    pub exponent: i64,
    /// |u|^2 = (2 + sqrt3)^n, shared by the whole class.
    pub modulus_sq: SqrtThreeRat,
    /// Whether the complex conjugate of the representative lies in the same
    /// class (it always does here: conj(omega+i) = z^-5 (omega+i)).
    pub conjugate_in_class: bool,
}

/// True iff u and v generate the same class, i.e. u = z^k v for some k.
pub fn same_unit_class(u: &CycNum, v: &CycNum) -> bool {
    (0..12).any(|k| u == &(&CycNum::zeta_pow(k) * v))
}

/// Enumerates one representative per class {z^k u} of units u of Z[zeta12]
/// with `lo_sq < |u|^2 <= hi_sq`, sorted by modulus.
///
/// The unit group is (torsion) x <omega + i> with |omega + i|^2 = 2 + sqrt3,
/// so classes correspond to exponents n and |u|^2 = (2+sqrt3)^n. Complex
/// conjugation sends (omega+i)^n to z^{-5n} (omega+i)^n, so conjugate classes
/// never enlarge the list; each class records that fact.
pub fn enumerate_unit_classes(
    lo_sq: &SqrtThreeRat,
    hi_sq: &SqrtThreeRat,
) -> Result<Vec<UnitClass>, CycloError> {
    if lo_sq.signum() < 0 || lo_sq >= hi_sq {
        return Err(CycloError::InvalidRange);
    }
    let fu = CycNum::omega() + CycNum::i();
    let growth = SqrtThreeRat::from_parts(2, 1, 1, 1); // |omega+i|^2
    let mut out = Vec::new();
    // Walk exponents downward until moduli fall below lo, upward until above hi.
    let mut n: i64 = 0;
    let mut m = SqrtThreeRat::one();
    // Find the smallest exponent with modulus_sq > lo_sq.
    while &m > lo_sq {
        n -= 1;
        m = &m * &growth.inv();
    }
    while &m <= lo_sq {
        n += 1;
        m = &m * &growth;
    }
    while &m <= hi_sq {
        let rep = fu.pow(n)?;
        debug_assert_eq!(rep.norm_sq(), m);
        debug_assert!(rep.is_unit()?);
        let conj_same = same_unit_class(&rep.conj(), &rep);
        out.push(UnitClass {
            representative: rep,
            exponent: n,
            modulus_sq: m.clone(),
            conjugate_in_class: conj_same,
        });
        n += 1;
        m = &m * &growth;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torsion_relations() {
        // z^3 * z^3 = -1 (i^2 = -1)
        assert_eq!(&CycNum::i() * &CycNum::i(), CycNum::from_int(-1));
        // omega * conj(omega) = 1
        assert_eq!(&CycNum::omega() * &CycNum::omega().conj(), CycNum::one());
        // z^12 = 1 around the clock
        let mut p = CycNum::one();
        for _ in 0..12 {
            p *= &CycNum::zeta();
        }
        assert_eq!(p, CycNum::one());
        for k in 0..12 {
            assert_eq!(CycNum::zeta().pow(k).unwrap(), CycNum::zeta_pow(k));
        }
    }

    #[test]
    fn sqrt3_constant() {
        let s3 = CycNum::sqrt3();
        assert_eq!(&s3 * &s3, CycNum::from_int(3));
        assert_eq!(s3.im(), SqrtThreeRat::zero());
        assert_eq!(s3.re(), SqrtThreeRat::sqrt3());
    }

    #[test]
    fn omega_plus_i_squared_matches_norm() {
        // (z^2 + z^3)^2 expanded symbolically, checked against norm_sq.
        let u = CycNum::omega() + CycNum::i();
        let sq = &u * &u;
        assert_eq!(sq, CycNum::from_coeffs_i64([-2, -2, 1, 2]));
        // |u^2| = |u|^2 = 2 + sqrt3, so norm_sq(u^2) = (2+sqrt3)^2.
        let expect = SqrtThreeRat::from_parts(2, 1, 1, 1);
        assert_eq!(u.norm_sq(), expect);
        assert_eq!(sq.norm_sq(), &expect * &expect);
    }

    #[test]
    fn norm_sq_examples() {
        // omega + i -> 2 + sqrt3
        let u = CycNum::omega() + CycNum::i();
        assert_eq!(u.norm_sq(), SqrtThreeRat::from_parts(2, 1, 1, 1));
        // (-1 + i(sqrt3 + 2))/2 -> 2 + sqrt3
        let m = (CycNum::from_int(-1) + CycNum::i() * (CycNum::sqrt3() + CycNum::from_int(2)))
            .div_int(2);
        assert_eq!(m.norm_sq(), SqrtThreeRat::from_parts(2, 1, 1, 1));
        // 0 -> 0
        assert_eq!(CycNum::zero().norm_sq(), SqrtThreeRat::zero());
    }

    #[test]
    fn norm_sq_multiplicative() {
        let vals = [
            CycNum::from_coeffs_i64([1, -2, 0, 3]),
            CycNum::from_coeffs_i64([0, 1, 1, -1]),
            CycNum::from_coeffs_i64([2, 0, -1, 5]),
            CycNum::omega() + CycNum::i(),
        ];
        for a in &vals {
            for b in &vals {
                assert_eq!((a * b).norm_sq(), &a.norm_sq() * &b.norm_sq());
            }
        }
    }

    #[test]
    fn units() {
        let u = CycNum::omega() + CycNum::i();
        assert!(u.is_unit().unwrap());
        assert!(CycNum::zeta().is_unit().unwrap());
        assert!(!CycNum::from_int(2).is_unit().unwrap());
        assert_eq!(CycNum::from_int(2).field_norm(), int(16));
        // Units closed under product and inverse.
        let v = &u * &CycNum::zeta_pow(7);
        assert!(v.is_unit().unwrap());
        assert!(v.inv().unwrap().is_unit().unwrap());
        assert_eq!(&v * &v.inv().unwrap(), CycNum::one());
        // Non-integral input rejected.
        assert_eq!(
            CycNum::one().div_int(2).is_unit(),
            Err(CycloError::NonIntegral(CycNum::one().div_int(2).to_string()))
        );
    }

    #[test]
    fn galois_is_automorphism() {
        let a = CycNum::from_coeffs_i64([1, 2, -3, 4]);
        let b = CycNum::from_coeffs_i64([-2, 0, 1, 1]);
        for k in [5u8, 7, 11] {
            assert_eq!((&a * &b).galois(k), &a.galois(k) * &b.galois(k));
            assert_eq!((&a + &b).galois(k), &a.galois(k) + &b.galois(k));
        }
        assert_eq!(a.galois(11), a.conj());
    }

    #[test]
    fn conj_of_fundamental_unit_is_torsion_related() {
        let u = CycNum::omega() + CycNum::i();
        // conj(omega + i) = z^-5 (omega + i)
        assert_eq!(u.conj(), &CycNum::zeta_pow(-5) * &u);
        assert!(same_unit_class(&u.conj(), &u));
    }

    #[test]
    fn unit_classes_small_range() {
        let lo = SqrtThreeRat::one();
        let hi = SqrtThreeRat::from_int(36);
        let classes = enumerate_unit_classes(&lo, &hi).unwrap();
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[0].modulus_sq, SqrtThreeRat::from_parts(2, 1, 1, 1));
        assert_eq!(classes[1].modulus_sq, SqrtThreeRat::from_parts(7, 1, 4, 1));
        // (omega+i)^2 is the class of the real unit 2 + sqrt3.
        let real_unit = CycNum::from_int(2) + CycNum::sqrt3();
        assert!(same_unit_class(&classes[1].representative, &real_unit));
    }

    #[test]
    fn unit_classes_empty_range_rejected() {
        let one = SqrtThreeRat::one();
        assert_eq!(
            enumerate_unit_classes(&one, &one).unwrap_err(),
            CycloError::InvalidRange
        );
    }

    #[test]
    fn unit_classes_match_brute_force() {
        // Oracle: all z^k (omega+i)^n with |.|^2 in (1, 2500], deduped by class.
        let lo = SqrtThreeRat::one();
        let hi = SqrtThreeRat::from_int(2500);
        let fu = CycNum::omega() + CycNum::i();
        let mut brute: Vec<CycNum> = Vec::new();
        for n in -8..=8 {
            for k in 0..12 {
                let u = &CycNum::zeta_pow(k) * &fu.pow(n).unwrap();
                let m = u.norm_sq();
                if m > lo && m <= hi && !brute.iter().any(|v| same_unit_class(v, &u)) {
                    brute.push(u);
                }
            }
        }
        let classes = enumerate_unit_classes(&lo, &hi).unwrap();
        assert_eq!(classes.len(), brute.len());
        assert_eq!(classes.len(), 5);
        for c in &classes {
            assert!(brute.iter().any(|v| same_unit_class(v, &c.representative)));
        }
        // Moduli are the first five powers of 2 + sqrt3.
        let g = SqrtThreeRat::from_parts(2, 1, 1, 1);
        let mut m = SqrtThreeRat::one();
        for c in &classes {
            m = &m * &g;
            assert_eq!(c.modulus_sq, m);
        }
    }

    #[test]
    fn display_roundtrip() {
        let vals = [
            CycNum::from_coeffs_i64([1, -2, 0, 3]),
            CycNum::zero(),
            CycNum::sqrt3().div_int(2) + CycNum::i().scale(&rat_13_7()),
        ];
        for v in &vals {
            assert_eq!(v.to_string().parse::<CycNum>().unwrap(), *v);
            assert_eq!(v.to_compact().parse::<CycNum>().unwrap(), *v);
        }
    }

    fn rat_13_7() -> BigRational {
        BigRational::new(BigInt::from(-13), BigInt::from(7))
    }

    #[test]
    fn re_im_roundtrip() {
        let v = CycNum::from_coeffs_i64([1, -2, 5, 3]).div_int(6);
        let back = CycNum::from_re_im(&v.re(), &v.im());
        assert_eq!(back, v);
        // norm_sq = re^2 + im^2
        let n = &v.re() * &v.re() + &v.im() * &v.im();
        assert_eq!(n, v.norm_sq());
    }
}
