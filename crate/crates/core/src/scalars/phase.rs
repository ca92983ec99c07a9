use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

/// An element of Q/Z, i.e. the root of unity `exp(2πi·num/den)`.
///
/// Always stored reduced with `0 <= num < den`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase {
    num: u64,
    den: u64,
}

impl Phase {
    pub const ZERO: Phase = Phase { num: 0, den: 1 };
    pub const HALF: Phase = Phase { num: 1, den: 2 };

    /// Builds `num/den mod 1`. Panics if `den == 0`.
    pub fn new(num: i64, den: u64) -> Phase {
        assert!(den > 0, "phase denominator must be positive");
        let d = den as i128;
        let n = (num as i128).rem_euclid(d);
        let g = (n as u64).gcd(&den);
        Phase {
            num: n as u64 / g,
            den: den / g,
        }
    }

    pub fn from_rational(r: &BigRational) -> Phase {
        let den = r.denom().to_u64().expect("phase denominator exceeds u64");
        let num = r.numer().mod_floor(r.denom());
        Phase::new(num.to_i64().expect("phase numerator exceeds i64"), den)
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Multiplicative order of the root of unity.
    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new((self.num as i64).into(), (self.den as i64).into())
    }

    /// The numerator when written over `den`, which must be a multiple of
    /// the reduced denominator.
    pub fn numerator_over(&self, den: u64) -> Option<u64> {
        if den % self.den != 0 {
            return None;
        }
        Some(self.num * (den / self.den))
    }

    pub fn times(&self, k: i64) -> Phase {
        let n = (self.num as i128 * k as i128).rem_euclid(self.den as i128);
        Phase::new(n as i64, self.den)
    }
}

impl Default for Phase {
    fn default() -> Self {
        Phase::ZERO
    }
}

impl Add for Phase {
    type Output = Phase;
    fn add(self, rhs: Phase) -> Phase {
        let l = self.den.lcm(&rhs.den);
        let a = self.num as u128 * (l / self.den) as u128 + rhs.num as u128 * (l / rhs.den) as u128;
        Phase::new((a % l as u128) as i64, l)
    }
}

impl AddAssign for Phase {
    fn add_assign(&mut self, rhs: Phase) {
        *self = *self + rhs;
    }
}

impl Neg for Phase {
    type Output = Phase;
    fn neg(self) -> Phase {
        Phase::new(-(self.num as i64), self.den)
    }
}

impl Sub for Phase {
    type Output = Phase;
    fn sub(self, rhs: Phase) -> Phase {
        self + (-rhs)
    }
}

impl SubAssign for Phase {
    fn sub_assign(&mut self, rhs: Phase) {
        *self = *self - rhs;
    }
}

impl Mul<i64> for Phase {
    type Output = Phase;
    fn mul(self, k: i64) -> Phase {
        self.times(k)
    }
}

impl std::iter::Sum for Phase {
    fn sum<I: Iterator<Item = Phase>>(iter: I) -> Phase {
        iter.fold(Phase::ZERO, |a, b| a + b)
    }
}

impl fmt::Debug for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
