//! Exact elements of cyclotomic fields Q(ζ_N).
//!
//! A [`Cyc`] is stored in the power basis `1, ζ, …, ζ^{φ(N)-1}` of
//! Q(ζ_N), i.e. as the remainder of a polynomial in ζ modulo the N-th
//! cyclotomic polynomial. Binary operations lift both operands to the
//! least common multiple of their levels first, so values coming from
//! different fields can be mixed freely.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use super::Phase;

struct LevelData {
    phi: usize,
    /// `red[k]` is ζ^k written in the power basis, for `0 <= k < N`.
    red: Vec<Vec<i64>>,
}

static LEVELS: Lazy<RwLock<HashMap<u32, Arc<LevelData>>>> = Lazy::new(Default::default);
static CYCLOTOMIC: Lazy<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = Lazy::new(Default::default);

fn poly_divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // both little-endian, den monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Coefficients of the n-th cyclotomic polynomial, little-endian.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    if let Some(p) = CYCLOTOMIC.read().unwrap().get(&n) {
        return p.clone();
    }
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let pd = cyclotomic_polynomial(d);
            poly = poly_divide_exact(&poly, &pd);
        }
    }
    let arc = Arc::new(poly);
    CYCLOTOMIC.write().unwrap().insert(n, arc.clone());
    arc
}

pub fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

fn level_data(n: u32) -> Arc<LevelData> {
    assert!(n > 0, "cyclotomic level must be positive");
    if let Some(d) = LEVELS.read().unwrap().get(&n) {
        return d.clone();
    }
    let phi_poly = cyclotomic_polynomial(n);
    let phi = phi_poly.len() - 1;
    let mut red = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        red.push(cur.clone());
        // multiply by x and reduce
        let top = cur[phi - 1];
        let mut next = vec![0i64; phi];
        for i in (1..phi).rev() {
            next[i] = cur[i - 1];
        }
        if phi == 1 {
            next[0] = 0;
        }
        for i in 0..phi {
            next[i] -= top * phi_poly[i];
        }
        cur = next;
    }
    let data = Arc::new(LevelData { phi, red });
    LEVELS.write().unwrap().insert(n, data.clone());
    data
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// An exact element of Q(ζ_level).
#[derive(Clone)]
pub struct Cyc {
    level: u32,
    coeffs: Vec<BigRational>,
}

impl Cyc {
    pub fn zero() -> Cyc {
        Cyc {
            level: 1,
            coeffs: vec![BigRational::zero()],
        }
    }

    pub fn one() -> Cyc {
        Cyc::from_int(1)
    }

    pub fn from_int(n: i64) -> Cyc {
        Cyc::from_rational(rat(n))
    }

    pub fn from_rational(r: BigRational) -> Cyc {
        Cyc {
            level: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Cyc {
        Cyc::from_rational(BigRational::new(num.into(), den.into()))
    }

    /// Builds a value from raw power-basis coefficients at `level`.
    /// Extra coefficients beyond φ(level) are reduced.
    pub fn from_coeffs(level: u32, coeffs: Vec<BigRational>) -> Cyc {
        let data = level_data(level);
        let mut out = vec![BigRational::zero(); data.phi];
        for (k, c) in coeffs.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &data.red[k % level as usize];
            for (o, &r) in out.iter_mut().zip(row.iter()) {
                if r != 0 {
                    *o += &c * rat(r);
                }
            }
        }
        Cyc { level, coeffs: out }
    }

    /// ζ_n^k.
    pub fn root(n: u32, k: i64) -> Cyc {
        let kk = k.rem_euclid(n as i64) as usize;
        let data = level_data(n);
        Cyc {
            level: n,
            coeffs: data.red[kk].iter().map(|&c| rat(c)).collect(),
        }
    }

    /// exp(2πi·p) as an element of Q(ζ_den).
    pub fn from_phase(p: Phase) -> Cyc {
        Cyc::root(p.den() as u32, p.num() as i64)
    }

    /// The positive square root of a positive integer.
    pub fn sqrt_int(n: u64) -> Cyc {
        assert!(n > 0, "sqrt_int needs a positive argument");
        let mut outside = 1i64;
        let mut squarefree = 1u64;
        let mut m = n;
        let mut p = 2u64;
        while p * p <= m {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            outside *= (p as i64).pow(e / 2);
            if e % 2 == 1 {
                squarefree *= p;
            }
            p += 1;
        }
        if m > 1 {
            squarefree *= m;
        }
        let mut acc = Cyc::from_int(outside);
        let mut rest = squarefree;
        let mut q = 2u64;
        while rest > 1 {
            if rest % q == 0 {
                acc = &acc * &sqrt_prime(q);
                rest /= q;
            }
            q += 1;
        }
        acc
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().map(|r| r.is_one()).unwrap_or(false)
    }

    /// Some(r) iff the value is the rational number r.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Some(n) iff the value is an integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    /// Re-expresses the value in Q(ζ_m); `m` must be a multiple of the level.
    pub fn lift(&self, m: u32) -> Cyc {
        assert!(
            m % self.level == 0,
            "cannot lift level {} to {}",
            self.level,
            m
        );
        if m == self.level {
            return self.clone();
        }
        let step = (m / self.level) as usize;
        let data = level_data(m);
        let mut out = vec![BigRational::zero(); data.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &data.red[(i * step) % m as usize];
            for (o, &r) in out.iter_mut().zip(row.iter()) {
                if r != 0 {
                    *o += c * rat(r);
                }
            }
        }
        Cyc {
            level: m,
            coeffs: out,
        }
    }

    fn common(a: &Cyc, b: &Cyc) -> (Cyc, Cyc) {
        if a.level == b.level {
            return (a.clone(), b.clone());
        }
        let l = a.level.lcm(&b.level);
        (a.lift(l), b.lift(l))
    }

    fn binary_same_level<F>(&self, other: &Cyc, f: F) -> Cyc
    where
        F: Fn(&BigRational, &BigRational) -> BigRational,
    {
        if self.level == other.level {
            let coeffs = self
                .coeffs
                .iter()
                .zip(other.coeffs.iter())
                .map(|(x, y)| f(x, y))
                .collect();
            return Cyc {
                level: self.level,
                coeffs,
            };
        }
        let (a, b) = Cyc::common(self, other);
        a.binary_same_level(&b, f)
    }

    fn mul_impl(&self, other: &Cyc) -> Cyc {
        if self.level != other.level {
            if self.level == 1 {
                return other.scale(&self.coeffs[0]);
            }
            if other.level == 1 {
                return self.scale(&other.coeffs[0]);
            }
            let (a, b) = Cyc::common(self, other);
            return a.mul_impl(&b);
        }
        let data = level_data(self.level);
        let phi = data.phi;
        let mut raw = vec![BigRational::zero(); 2 * phi - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                raw[i + j] += x * y;
            }
        }
        let mut out: Vec<BigRational> = raw[..phi].to_vec();
        for (k, c) in raw.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            let row = &data.red[k % self.level as usize];
            for (o, &r) in out.iter_mut().zip(row.iter()) {
                if r != 0 {
                    *o += c * rat(r);
                }
            }
        }
        Cyc {
            level: self.level,
            coeffs: out,
        }
    }

    pub fn scale(&self, r: &BigRational) -> Cyc {
        Cyc {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// The Galois automorphism ζ ↦ ζ^k (k coprime to the level).
    pub fn galois(&self, k: i64) -> Cyc {
        let n = self.level as i64;
        let kk = k.rem_euclid(n);
        assert!(
            kk.gcd(&n) == 1,
            "Galois exponent {} not coprime to level {}",
            k,
            n
        );
        let data = level_data(self.level);
        let mut out = vec![BigRational::zero(); data.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &data.red[((i as i64 * kk) % n) as usize];
            for (o, &r) in out.iter_mut().zip(row.iter()) {
                if r != 0 {
                    *o += c * rat(r);
                }
            }
        }
        Cyc {
            level: self.level,
            coeffs: out,
        }
    }

    pub fn conj(&self) -> Cyc {
        if self.level <= 2 {
            return self.clone();
        }
        self.galois(-1)
    }

    /// |z|², exact.
    pub fn abs_sq(&self) -> Cyc {
        self * &self.conj()
    }

    pub fn inv(&self) -> Option<Cyc> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(Cyc::from_rational(r.recip()));
        }
        let n = self.level as i64;
        let mut prod = Cyc::one();
        for k in 2..n {
            if k.gcd(&n) == 1 {
                prod = &prod * &self.galois(k);
            }
        }
        let norm = (self * &prod)
            .as_rational()
            .expect("field norm must be rational");
        Some(prod.scale(&norm.recip()))
    }

    pub fn pow(&self, mut e: u32) -> Cyc {
        let mut base = self.clone();
        let mut acc = Cyc::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// If the value is a root of unity, returns it as a phase.
    pub fn as_root_of_unity(&self) -> Option<Phase> {
        let n = self.level;
        let m = if n % 2 == 1 { 2 * n } else { n };
        let z = self.lift(m);
        let data = level_data(m);
        'outer: for k in 0..m as usize {
            for (c, &r) in z.coeffs.iter().zip(data.red[k].iter()) {
                if *c != rat(r) {
                    continue 'outer;
                }
            }
            return Some(Phase::new(k as i64, m as u64));
        }
        None
    }

    /// Floating-point snapshot for diagnostics.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.level as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = c.to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * i as f64 / n;
            acc += Complex64::from_polar(v, ang);
        }
        acc
    }

    /// Coefficients after lifting to `level`, usable as a hash key.
    pub fn key_at(&self, level: u32) -> Vec<BigRational> {
        self.lift(level).coeffs
    }

    /// Smallest level at which the value can be written.
    pub fn conductor(&self) -> u32 {
        let n = self.level;
        for d in 1..=n {
            if n % d != 0 {
                continue;
            }
            // fixed by every σ_k with k ≡ 1 mod d
            let fixed = (1..n as i64)
                .filter(|k| k.gcd(&(n as i64)) == 1 && k % d as i64 == 1 % d as i64)
                .all(|k| self.galois(k) == *self);
            if fixed {
                return d;
            }
        }
        n
    }

    /// Rewrites the value at its conductor level (canonical across levels).
    pub fn minimize(&self) -> Cyc {
        let d = self.conductor();
        if d == self.level {
            return self.clone();
        }
        // solve for the preimage under the lift Q(ζ_d) → Q(ζ_n)
        let phi_d = level_data(d).phi;
        let basis: Vec<Cyc> = (0..phi_d)
            .map(|j| Cyc::root(d, j as i64).lift(self.level))
            .collect();
        let phi_n = self.coeffs.len();
        // augmented matrix phi_n × (phi_d + 1)
        let mut m: Vec<Vec<BigRational>> = (0..phi_n)
            .map(|i| {
                let mut row: Vec<BigRational> = basis.iter().map(|b| b.coeffs[i].clone()).collect();
                row.push(self.coeffs[i].clone());
                row
            })
            .collect();
        let mut piv_row = 0;
        let mut pivots = Vec::new();
        for col in 0..phi_d {
            let Some(r) = (piv_row..phi_n).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(piv_row, r);
            let inv = m[piv_row][col].recip();
            for x in m[piv_row].iter_mut() {
                *x *= &inv;
            }
            for r2 in 0..phi_n {
                if r2 != piv_row && !m[r2][col].is_zero() {
                    let f = m[r2][col].clone();
                    let src = m[piv_row].clone();
                    for (x, s) in m[r2].iter_mut().zip(src.iter()) {
                        *x -= &f * s;
                    }
                }
            }
            pivots.push((piv_row, col));
            piv_row += 1;
        }
        let mut coeffs = vec![BigRational::zero(); phi_d];
        for (r, c) in pivots {
            coeffs[c] = m[r][phi_d].clone();
        }
        Cyc { level: d, coeffs }
    }
}

fn sqrt_prime(p: u64) -> Cyc {
    if p == 2 {
        return &Cyc::root(8, 1) + &Cyc::root(8, 7);
    }
    let pp = p as u32;
    let mut g = Cyc::zero();
    for k in 0..p {
        g += Cyc::root(pp, ((k * k) % p) as i64);
    }
    if p % 4 == 1 {
        g
    } else {
        // g = i·√p
        &g * &Cyc::root(4, 3)
    }
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Cyc) -> bool {
        if self.level == other.level {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Cyc::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyc {}

impl Default for Cyc {
    fn default() -> Self {
        Cyc::zero()
    }
}

impl From<i64> for Cyc {
    fn from(n: i64) -> Cyc {
        Cyc::from_int(n)
    }
}

impl From<Phase> for Cyc {
    fn from(p: Phase) -> Cyc {
        Cyc::from_phase(p)
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            if i == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                if i == 1 {
                    write!(f, "z{}", self.level)?;
                } else {
                    write!(f, "z{}^{}", self.level, i)?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a, 'b> $tr<&'b Cyc> for &'a Cyc {
            type Output = Cyc;
            fn $method(self, rhs: &'b Cyc) -> Cyc {
                let f: fn(&Cyc, &Cyc) -> Cyc = $body;
                f(self, rhs)
            }
        }
        impl $tr<Cyc> for Cyc {
            type Output = Cyc;
            fn $method(self, rhs: Cyc) -> Cyc {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $tr<&'b Cyc> for Cyc {
            type Output = Cyc;
            fn $method(self, rhs: &'b Cyc) -> Cyc {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Cyc> for &'a Cyc {
            type Output = Cyc;
            fn $method(self, rhs: Cyc) -> Cyc {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.binary_same_level(b, |x, y| x + y));
forward_binop!(Sub, sub, |a, b| a.binary_same_level(b, |x, y| x - y));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));
forward_binop!(Div, div, |a, b| a.mul_impl(&b.inv().expect("division by zero Cyc")));

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        -&self
    }
}

impl AddAssign<Cyc> for Cyc {
    fn add_assign(&mut self, rhs: Cyc) {
        *self = &*self + &rhs;
    }
}

impl<'a> AddAssign<&'a Cyc> for Cyc {
    fn add_assign(&mut self, rhs: &'a Cyc) {
        if self.level == rhs.level {
            for (x, y) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
                *x += y;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<Cyc> for Cyc {
    fn sub_assign(&mut self, rhs: Cyc) {
        *self = &*self - &rhs;
    }
}

impl MulAssign<Cyc> for Cyc {
    fn mul_assign(&mut self, rhs: Cyc) {
        *self = &*self * &rhs;
    }
}

impl std::iter::Sum for Cyc {
    fn sum<I: Iterator<Item = Cyc>>(iter: I) -> Cyc {
        iter.fold(Cyc::zero(), |a, b| a + b)
    }
}
