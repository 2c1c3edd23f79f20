use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::scalars::{DualF2, GaussianInt, GroupRingZ4, F2};
use crate::error::{Error, Result};

/// The coefficient ring underneath every polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    Integer,
    Rational,
    Gaussian,
    GroupRingZ4,
    F2,
    DualF2,
}

impl Base {
    pub const ALL: [Base; 6] =
        [Base::Integer, Base::Rational, Base::Gaussian, Base::GroupRingZ4, Base::F2, Base::DualF2];

    pub fn descriptor(self) -> &'static str {
        match self {
            Base::Integer => "Z",
            Base::Rational => "Q",
            Base::Gaussian => "Z[i]",
            Base::GroupRingZ4 => "Z[C4]",
            Base::F2 => "F2",
            Base::DualF2 => "F2[e]/(e^2)",
        }
    }

    pub fn characteristic_two(self) -> bool {
        matches!(self, Base::F2 | Base::DualF2)
    }

    /// Name of the adjoined generator (`i`, `σ`, `ε`), if the base has one.
    pub fn generator(self) -> Option<Coeff> {
        match self {
            Base::Gaussian => Some(Coeff::Gaussian(GaussianInt::i())),
            Base::GroupRingZ4 => Some(Coeff::GroupRingZ4(GroupRingZ4::sigma())),
            Base::DualF2 => Some(Coeff::DualF2(DualF2::EPS)),
            _ => None,
        }
    }

    pub fn generator_names(self) -> &'static [&'static str] {
        match self {
            Base::Gaussian => &["i"],
            Base::GroupRingZ4 => &["σ", "sigma"],
            Base::DualF2 => &["ε", "eps", "e"],
            _ => &[],
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.descriptor())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Integer(BigInt),
    Rational(BigRational),
    Gaussian(GaussianInt),
    GroupRingZ4(GroupRingZ4),
    F2(F2),
    DualF2(DualF2),
}

macro_rules! binop {
    ($name:ident, $op:tt, $f2:expr) => {
        pub fn $name(&self, other: &Coeff) -> Coeff {
            match (self, other) {
                (Coeff::Integer(a), Coeff::Integer(b)) => Coeff::Integer(a $op b),
                (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a $op b),
                (Coeff::Gaussian(a), Coeff::Gaussian(b)) => Coeff::Gaussian(a $op b),
                (Coeff::GroupRingZ4(a), Coeff::GroupRingZ4(b)) => Coeff::GroupRingZ4(a $op b),
                (Coeff::F2(a), Coeff::F2(b)) => Coeff::F2($f2(*a, *b)),
                (Coeff::DualF2(a), Coeff::DualF2(b)) => Coeff::DualF2($f2(*a, *b)),
                (a, b) => panic!("coefficient base mismatch: {} vs {}", a.base(), b.base()),
            }
        }
    };
}

impl Coeff {
    pub fn from_int(base: Base, n: impl Into<BigInt>) -> Coeff {
        let n = n.into();
        match base {
            Base::Integer => Coeff::Integer(n),
            Base::Rational => Coeff::Rational(BigRational::from_integer(n)),
            Base::Gaussian => Coeff::Gaussian(GaussianInt { re: n, im: BigInt::zero() }),
            Base::GroupRingZ4 => Coeff::GroupRingZ4(GroupRingZ4::from_int(n)),
            Base::F2 => Coeff::F2(F2::from_int(&n)),
            Base::DualF2 => Coeff::DualF2(DualF2::new(F2::from_int(&n).0, false)),
        }
    }

    /// Rationals embed only into `Q`; other bases need an integral value.
    pub fn from_rational(base: Base, q: &BigRational) -> Option<Coeff> {
        match base {
            Base::Rational => Some(Coeff::Rational(q.clone())),
            _ if q.is_integer() => Some(Coeff::from_int(base, q.to_integer())),
            _ => None,
        }
    }

    pub fn zero(base: Base) -> Coeff {
        Coeff::from_int(base, 0)
    }

    pub fn one(base: Base) -> Coeff {
        Coeff::from_int(base, 1)
    }

    pub fn base(&self) -> Base {
        match self {
            Coeff::Integer(_) => Base::Integer,
            Coeff::Rational(_) => Base::Rational,
            Coeff::Gaussian(_) => Base::Gaussian,
            Coeff::GroupRingZ4(_) => Base::GroupRingZ4,
            Coeff::F2(_) => Base::F2,
            Coeff::DualF2(_) => Base::DualF2,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Integer(a) => a.is_zero(),
            Coeff::Rational(a) => a.is_zero(),
            Coeff::Gaussian(a) => a.is_zero(),
            Coeff::GroupRingZ4(a) => a.is_zero(),
            Coeff::F2(a) => !a.0,
            Coeff::DualF2(a) => a.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Coeff::one(self.base())
    }

    binop!(add, +, |a, b| a + b);
    binop!(mul, *, |a, b| a * b);

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Integer(a) => Coeff::Integer(-a),
            Coeff::Rational(a) => Coeff::Rational(-a),
            Coeff::Gaussian(a) => Coeff::Gaussian(-a),
            Coeff::GroupRingZ4(a) => Coeff::GroupRingZ4(-a),
            // -1 = 1 in characteristic two
            Coeff::F2(_) | Coeff::DualF2(_) => self.clone(),
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.add(&other.neg())
    }

    pub fn scale_int(&self, k: &BigInt) -> Coeff {
        match self {
            Coeff::Integer(a) => Coeff::Integer(a * k),
            Coeff::Rational(a) => Coeff::Rational(a * BigRational::from_integer(k.clone())),
            Coeff::Gaussian(a) => Coeff::Gaussian(a.scale(k)),
            Coeff::GroupRingZ4(a) => Coeff::GroupRingZ4(a.scale(k)),
            Coeff::F2(_) | Coeff::DualF2(_) => self.mul(&Coeff::from_int(self.base(), k.clone())),
        }
    }

    pub fn inverse(&self) -> Option<Coeff> {
        match self {
            Coeff::Integer(a) => (a.abs().is_one()).then(|| Coeff::Integer(a.clone())),
            Coeff::Rational(a) => (!a.is_zero()).then(|| Coeff::Rational(a.recip())),
            Coeff::Gaussian(a) => a.inverse().map(Coeff::Gaussian),
            Coeff::GroupRingZ4(a) => a.inverse().map(Coeff::GroupRingZ4),
            Coeff::F2(a) => a.0.then_some(Coeff::F2(*a)),
            Coeff::DualF2(a) => a.inverse().map(Coeff::DualF2),
        }
    }

    /// Nilpotent coefficients; only the dual numbers have nonzero ones.
    pub fn is_nilpotent(&self) -> bool {
        match self {
            Coeff::DualF2(a) => a.is_nilpotent(),
            other => other.is_zero(),
        }
    }

    pub fn to_json(&self) -> Value {
        let s = |n: &BigInt| Value::String(n.to_string());
        match self {
            Coeff::Integer(a) => s(a),
            Coeff::Rational(a) => Value::String(format!("{}/{}", a.numer(), a.denom())),
            Coeff::Gaussian(g) => json!([s(&g.re), s(&g.im)]),
            Coeff::GroupRingZ4(g) => Value::Array(g.c.iter().map(s).collect()),
            Coeff::F2(a) => Value::String(a.to_string()),
            Coeff::DualF2(d) => json!([u8::from(d.a).to_string(), u8::from(d.b).to_string()]),
        }
    }

    pub fn from_json(base: Base, v: &Value) -> Result<Coeff> {
        let int = |v: &Value| -> Result<BigInt> {
            match v {
                Value::String(s) => s.trim().parse().map_err(|_| Error::Parse(format!("bad integer {s:?}"))),
                Value::Number(n) if n.is_i64() => Ok(BigInt::from(n.as_i64().unwrap())),
                other => Err(Error::Parse(format!("expected integer, got {other}"))),
            }
        };
        let list = |n: usize| -> Result<Vec<BigInt>> {
            match v {
                Value::Array(a) if a.len() == n => a.iter().map(int).collect(),
                other => Err(Error::Parse(format!("expected {n}-element array for {base}, got {other}"))),
            }
        };
        let bit = |n: &BigInt| -> Result<bool> {
            if n.is_zero() || n.is_one() {
                Ok(n.is_one())
            } else {
                Err(Error::Parse(format!("expected 0 or 1, got {n}")))
            }
        };
        let c = match base {
            Base::Integer => Coeff::Integer(int(v)?),
            Base::Rational => {
                let Value::String(s) = v else {
                    return Err(Error::Parse(format!("expected rational string, got {v}")));
                };
                Coeff::Rational(parse_rational(s)?)
            }
            Base::Gaussian => {
                let p = list(2)?;
                Coeff::Gaussian(GaussianInt::new(p[0].clone(), p[1].clone()))
            }
            Base::GroupRingZ4 => {
                let p = list(4)?;
                Coeff::GroupRingZ4(GroupRingZ4 { c: [p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone()] })
            }
            Base::F2 => Coeff::F2(F2(bit(&int(v)?)?)),
            Base::DualF2 => {
                let p = list(2)?;
                Coeff::DualF2(DualF2::new(bit(&p[0])?, bit(&p[1])?))
            }
        };
        Ok(c)
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Integer(a) => write!(f, "{a}"),
            Coeff::Rational(a) => write!(f, "{a}"),
            Coeff::Gaussian(a) => write!(f, "{a}"),
            Coeff::GroupRingZ4(a) => write!(f, "{a}"),
            Coeff::F2(a) => write!(f, "{a}"),
            Coeff::DualF2(a) => write!(f, "{a}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_each_base() {
        let samples = [
            Coeff::from_int(Base::Integer, -12),
            Coeff::Rational(BigRational::new(BigInt::from(-3), BigInt::from(6))),
            Coeff::Gaussian(GaussianInt::new(2, -5)),
            Coeff::GroupRingZ4(GroupRingZ4::new(1, 0, -1, 7)),
            Coeff::F2(F2(true)),
            Coeff::DualF2(DualF2::new(true, true)),
        ];
        for c in samples {
            let back = Coeff::from_json(c.base(), &c.to_json()).unwrap();
            assert_eq!(back, c);
        }
    }

    #[test]
    fn rational_serializes_reduced() {
        let q = Coeff::Rational(BigRational::new(BigInt::from(4), BigInt::from(-6)));
        assert_eq!(q.to_json(), json!("-2/3"));
        assert_eq!(Coeff::from_int(Base::Rational, 3).to_json(), json!("3/1"));
    }

    #[test]
    fn char_two_reduction() {
        assert!(Coeff::from_int(Base::F2, 2).is_zero());
        assert_eq!(Coeff::from_int(Base::DualF2, -1), Coeff::one(Base::DualF2));
    }

    #[test]
    fn bad_json() {
        assert!(Coeff::from_json(Base::Rational, &json!("1/0")).is_err());
        assert!(Coeff::from_json(Base::Gaussian, &json!(["1"])).is_err());
        assert!(Coeff::from_json(Base::DualF2, &json!(["2", "0"])).is_err());
    }
}
