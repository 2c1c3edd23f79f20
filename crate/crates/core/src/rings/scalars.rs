//! Coefficient rings that are not covered by `num`: Gaussian integers, the
//! integral group ring of the cyclic group of order four, the prime field
//! F2 and the dual numbers F2[ε]/(ε²).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `re + im·i` with `i² = -1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt { re: re.into(), im: im.into() }
    }

    pub fn i() -> Self {
        GaussianInt::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// The four units ±1, ±i.
    pub fn inverse(&self) -> Option<Self> {
        let norm = &self.re * &self.re + &self.im * &self.im;
        if !norm.is_one() {
            return None;
        }
        // conjugate of a norm-one element
        Some(GaussianInt { re: self.re.clone(), im: -&self.im })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        GaussianInt { re: &self.re * k, im: &self.im * k }
    }

    /// Both parts even, i.e. membership in the ideal (2).
    pub fn is_even(&self) -> bool {
        self.re.is_even() && self.im.is_even()
    }

    pub fn halve(&self) -> Option<Self> {
        if !self.is_even() {
            return None;
        }
        let two = BigInt::from(2);
        Some(GaussianInt { re: &self.re / &two, im: &self.im / &two })
    }
}

impl Add for &GaussianInt {
    type Output = GaussianInt;
    fn add(self, o: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub for &GaussianInt {
    type Output = GaussianInt;
    fn sub(self, o: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul for &GaussianInt {
    type Output = GaussianInt;
    fn mul(self, o: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt { re: -&self.re, im: -&self.im }
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write_imag(f, &self.im, false),
            (false, false) => {
                write!(f, "{}", self.re)?;
                write_imag(f, &self.im, true)
            }
        }
    }
}

fn write_imag(f: &mut fmt::Formatter<'_>, im: &BigInt, signed: bool) -> fmt::Result {
    let sign = if im.is_negative() { "-" } else if signed { "+" } else { "" };
    if im.abs().is_one() {
        write!(f, "{sign}i")
    } else {
        write!(f, "{sign}{}*i", im.abs())
    }
}

/// `c[0] + c[1]σ + c[2]σ² + c[3]σ³` in ℤ[ℤ/4], with `σ⁴ = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupRingZ4 {
    pub c: [BigInt; 4],
}

impl GroupRingZ4 {
    pub fn new(c0: impl Into<BigInt>, c1: impl Into<BigInt>, c2: impl Into<BigInt>, c3: impl Into<BigInt>) -> Self {
        GroupRingZ4 { c: [c0.into(), c1.into(), c2.into(), c3.into()] }
    }

    pub fn sigma() -> Self {
        GroupRingZ4::new(0, 1, 0, 0)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        GroupRingZ4::new(n, 0, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Zero::is_zero)
    }

    /// Only the trivial units ±σᵏ are recognized.
    pub fn inverse(&self) -> Option<Self> {
        let nonzero: Vec<usize> = (0..4).filter(|&k| !self.c[k].is_zero()).collect();
        if nonzero.len() != 1 || !self.c[nonzero[0]].abs().is_one() {
            return None;
        }
        let k = nonzero[0];
        let mut c: [BigInt; 4] = Default::default();
        c[(4 - k) % 4] = self.c[k].clone();
        Some(GroupRingZ4 { c })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        GroupRingZ4 { c: self.c.clone().map(|x| x * k) }
    }

    /// Membership in (1 - σ²): `c2 = -c0` and `c3 = -c1`.
    pub fn in_one_minus_sigma_sq(&self) -> bool {
        self.c[2] == -&self.c[0] && self.c[3] == -&self.c[1]
    }
}

impl Add for &GroupRingZ4 {
    type Output = GroupRingZ4;
    fn add(self, o: &GroupRingZ4) -> GroupRingZ4 {
        GroupRingZ4 { c: std::array::from_fn(|k| &self.c[k] + &o.c[k]) }
    }
}

impl Sub for &GroupRingZ4 {
    type Output = GroupRingZ4;
    fn sub(self, o: &GroupRingZ4) -> GroupRingZ4 {
        GroupRingZ4 { c: std::array::from_fn(|k| &self.c[k] - &o.c[k]) }
    }
}

impl Mul for &GroupRingZ4 {
    type Output = GroupRingZ4;
    fn mul(self, o: &GroupRingZ4) -> GroupRingZ4 {
        // cyclic convolution of length four
        let mut c: [BigInt; 4] = Default::default();
        for a in 0..4 {
            if self.c[a].is_zero() {
                continue;
            }
            for b in 0..4 {
                c[(a + b) % 4] += &self.c[a] * &o.c[b];
            }
        }
        GroupRingZ4 { c }
    }
}

impl Neg for &GroupRingZ4 {
    type Output = GroupRingZ4;
    fn neg(self) -> GroupRingZ4 {
        GroupRingZ4 { c: self.c.clone().map(|x| -x) }
    }
}

impl fmt::Display for GroupRingZ4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let mono = match k {
                0 => String::new(),
                1 => "σ".to_string(),
                _ => format!("σ^{k}"),
            };
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{sign}{mag}")?,
                (_, true) => write!(f, "{sign}{mono}")?,
                (_, false) => write!(f, "{sign}{mag}*{mono}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// An element of the prime field F2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct F2(pub bool);

impl F2 {
    pub fn from_int(n: &BigInt) -> Self {
        F2(n.is_odd())
    }
}

impl Add for F2 {
    type Output = F2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, o: F2) -> F2 {
        F2(self.0 ^ o.0)
    }
}

impl Mul for F2 {
    type Output = F2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, o: F2) -> F2 {
        F2(self.0 & o.0)
    }
}

impl fmt::Display for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(self.0))
    }
}

/// `a + bε` over F2 with `ε² = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DualF2 {
    pub a: bool,
    pub b: bool,
}

impl DualF2 {
    pub const ZERO: DualF2 = DualF2 { a: false, b: false };
    pub const ONE: DualF2 = DualF2 { a: true, b: false };
    pub const EPS: DualF2 = DualF2 { a: false, b: true };

    pub fn new(a: bool, b: bool) -> Self {
        DualF2 { a, b }
    }

    pub fn is_zero(&self) -> bool {
        !self.a && !self.b
    }

    pub fn is_nilpotent(&self) -> bool {
        !self.a
    }

    /// `(1 + bε)⁻¹ = 1 + bε` in characteristic two.
    pub fn inverse(&self) -> Option<Self> {
        self.a.then_some(*self)
    }
}

impl Add for DualF2 {
    type Output = DualF2;
    fn add(self, o: DualF2) -> DualF2 {
        DualF2 { a: self.a ^ o.a, b: self.b ^ o.b }
    }
}

impl Mul for DualF2 {
    type Output = DualF2;
    fn mul(self, o: DualF2) -> DualF2 {
        DualF2 { a: self.a & o.a, b: (self.a & o.b) ^ (self.b & o.a) }
    }
}

impl fmt::Display for DualF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (false, false) => write!(f, "0"),
            (true, false) => write!(f, "1"),
            (false, true) => write!(f, "ε"),
            (true, true) => write!(f, "1+ε"),
        }
    }
}
