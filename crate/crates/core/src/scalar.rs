//! Exact scalars: big rationals and the real quadratic field `Q[√2]`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type BigRat = num_rational::BigRational;

pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_rat(n: BigInt) -> BigRat {
    BigRat::from_integer(n)
}

/// `2^l` as an exact rational; `l` may be negative.
pub fn pow2(l: i64) -> BigRat {
    let p = BigInt::one() << l.unsigned_abs();
    if l >= 0 {
        int_rat(p)
    } else {
        BigRat::new(BigInt::one(), p)
    }
}

/// Sign of a rational as -1, 0 or +1.
pub fn rat_sign(r: &BigRat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// The number `rat + irr·√2`.
///
/// The representation is unique because √2 is irrational, so equality and
/// hashing are componentwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QSqrt2 {
    pub rat: BigRat,
    pub irr: BigRat,
}

impl QSqrt2 {
    pub fn new(rat: BigRat, irr: BigRat) -> Self {
        QSqrt2 { rat, irr }
    }

    pub fn from_ints(rat: i64, irr: i64) -> Self {
        QSqrt2::new(self::rat(rat), self::rat(irr))
    }

    pub fn from_rat(r: BigRat) -> Self {
        QSqrt2::new(r, BigRat::zero())
    }

    pub fn zero() -> Self {
        QSqrt2::default()
    }

    pub fn one() -> Self {
        QSqrt2::from_rat(BigRat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    /// Conjugate `a − b√2`.
    pub fn conj(&self) -> Self {
        QSqrt2::new(self.rat.clone(), -self.irr.clone())
    }

    /// Field norm `a² − 2b²`.
    pub fn norm(&self) -> BigRat {
        &self.rat * &self.rat - rat(2) * &self.irr * &self.irr
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        QSqrt2::new(&self.rat * c, &self.irr * c)
    }

    /// Sign under the real embedding, decided exactly.
    ///
    /// When the two components disagree in sign, `a² − 2b²` tells which one
    /// dominates.
    pub fn sign(&self) -> i8 {
        let sa = rat_sign(&self.rat);
        let sb = rat_sign(&self.irr);
        if sa == sb || sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        match rat_sign(&self.norm()) {
            1 => sa,
            -1 => sb,
            // a² = 2b² has no solution with a, b ≠ 0
            _ => unreachable!("a^2 = 2 b^2 with nonzero rationals"),
        }
    }

    pub fn cmp_real(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(QSqrt2::new(c.rat / &n, c.irr / &n))
    }

    /// Decimal approximation for display only.
    pub fn to_f64(&self) -> f64 {
        let a = self.rat.to_f64().unwrap_or(f64::NAN);
        let b = self.irr.to_f64().unwrap_or(f64::NAN);
        a + b * std::f64::consts::SQRT_2
    }
}

/// Exact `√2^l`: `(2^{l/2}, 0)` for even `l`, `(0, 2^{(l−1)/2})` for odd `l`.
pub fn sqrt2_power(l: i64) -> QSqrt2 {
    if l.rem_euclid(2) == 0 {
        QSqrt2::from_rat(pow2(l.div_euclid(2)))
    } else {
        QSqrt2::new(BigRat::zero(), pow2((l - 1).div_euclid(2)))
    }
}

impl From<BigRat> for QSqrt2 {
    fn from(r: BigRat) -> Self {
        QSqrt2::from_rat(r)
    }
}

impl Add<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn add(self, o: &QSqrt2) -> QSqrt2 {
        QSqrt2::new(&self.rat + &o.rat, &self.irr + &o.irr)
    }
}

impl Sub<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, o: &QSqrt2) -> QSqrt2 {
        QSqrt2::new(&self.rat - &o.rat, &self.irr - &o.irr)
    }
}

impl Mul<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, o: &QSqrt2) -> QSqrt2 {
        // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
        QSqrt2::new(&self.rat * &o.rat + rat(2) * &self.irr * &o.irr, &self.rat * &o.irr + &self.irr * &o.rat)
    }
}

impl Neg for &QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2::new(-self.rat.clone(), -self.irr.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QSqrt2> for QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, o: QSqrt2) -> QSqrt2 {
                (&self).$m(&o)
            }
        }
        impl $tr<&QSqrt2> for QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, o: &QSqrt2) -> QSqrt2 {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        -&self
    }
}

impl AddAssign<&QSqrt2> for QSqrt2 {
    fn add_assign(&mut self, o: &QSqrt2) {
        self.rat += &o.rat;
        self.irr += &o.irr;
    }
}

impl std::iter::Sum for QSqrt2 {
    fn sum<I: Iterator<Item = QSqrt2>>(iter: I) -> QSqrt2 {
        iter.fold(QSqrt2::zero(), |acc, v| acc + v)
    }
}

impl fmt::Display for QSqrt2 {
    /// `a`, `b*sqrt2`, or `a + b*sqrt2` / `a - b*sqrt2`; a unit `b` is
    /// elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn irr_part(b: &BigRat) -> String {
            if b.is_one() {
                "sqrt2".to_string()
            } else {
                format!("{b}*sqrt2")
            }
        }
        match (self.rat.is_zero(), self.irr.is_zero()) {
            (_, true) => write!(f, "{}", self.rat),
            (true, false) if self.irr.is_negative() => write!(f, "-{}", irr_part(&-self.irr.clone())),
            (true, false) => f.write_str(&irr_part(&self.irr)),
            (false, false) => {
                if self.irr.is_negative() {
                    write!(f, "{} - {}", self.rat, irr_part(&-self.irr.clone()))
                } else {
                    write!(f, "{} + {}", self.rat, irr_part(&self.irr))
                }
            }
        }
    }
}
