use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest admissible prime modulus.
pub const MAX_PRIME: u64 = 1 << 31;

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// The prime field of order `p`; fails unless `p` is a prime not exceeding 2^31.
    pub fn prime(p: u64) -> Result<Field> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(Error::Parse(format!("{p} is not a prime in [2, 2^31]")));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(Rational::Small(Ratio::from_integer(n))),
            Field::Prime(p) => Scalar::Mod {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn sign(self, odd: bool) -> Scalar {
        self.from_i64(if odd { -1 } else { 1 })
    }

    /// Maps an exact rational into this field; fails when the denominator vanishes mod p.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Rat(Rational::from_big(q.clone()))),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let num = residue(q.numer(), &pb);
                let den = residue(q.denom(), &pb);
                if den == 0 {
                    return Err(Error::Parse(format!(
                        "denominator of {q} is not invertible mod {p}"
                    )));
                }
                let inv = pow_mod(den, p as u64 - 2, p as u64);
                Ok(Scalar::Mod {
                    value: ((num * inv) % p as u64) as u32,
                    modulus: p,
                })
            }
        }
    }

    /// Parses a coefficient string ("a/b" or an integer) into this field.
    pub fn parse_scalar(self, s: &str) -> Result<Scalar> {
        let q = parse_rational(s)?;
        self.from_rational(&q)
    }
}

fn residue(n: &BigInt, p: &BigInt) -> u64 {
    let r = ((n % p) + p) % p;
    r.to_u64().unwrap_or(0)
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Parses "a/b" (b > 0) or an integer into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("invalid coefficient {s:?}"));
    let int = |x: &str| -> Result<BigInt> {
        let x = x.trim();
        let digits = x.strip_prefix(['-', '+']).unwrap_or(x);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        BigInt::from_str(x).map_err(|_| bad())
    };
    match t.split_once('/') {
        None => Ok(BigRational::from_integer(int(t)?)),
        Some((n, d)) => {
            let d = d.trim();
            if d.starts_with(['-', '+']) {
                return Err(bad());
            }
            let den = int(d)?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(int(n)?, den))
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        match s.trim() {
            "q" | "Q" | "rationals" => Ok(Field::Rational),
            other => {
                let p = other
                    .strip_prefix("fp:")
                    .or_else(|| other.strip_prefix("prime:"))
                    .ok_or_else(|| Error::Parse(format!("unknown field {s:?}")))?;
                let p: u64 = p
                    .parse()
                    .map_err(|_| Error::Parse(format!("unknown field {s:?}")))?;
                Field::prime(p)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

/// Exact rational with an inline fast path for values fitting in `i64`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    Small(Ratio<i64>),
    Big(Box<BigRational>),
}

impl Rational {
    fn from_big(q: BigRational) -> Rational {
        match (q.numer().to_i64(), q.denom().to_i64()) {
            (Some(n), Some(d)) => Rational::Small(Ratio::new_raw(n, d)),
            _ => Rational::Big(Box::new(q)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Rational::Big(b) => (**b).clone(),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Rational::Small(r) => r.is_zero(),
            Rational::Big(b) => b.is_zero(),
        }
    }

    fn add(&self, o: &Rational) -> Rational {
        if let (Rational::Small(a), Rational::Small(b)) = (self, o) {
            if let Some(c) = a.checked_add(b) {
                return Rational::Small(c);
            }
        }
        Rational::from_big(self.to_big() + o.to_big())
    }

    fn sub(&self, o: &Rational) -> Rational {
        if let (Rational::Small(a), Rational::Small(b)) = (self, o) {
            if let Some(c) = a.checked_sub(b) {
                return Rational::Small(c);
            }
        }
        Rational::from_big(self.to_big() - o.to_big())
    }

    fn mul(&self, o: &Rational) -> Rational {
        if let (Rational::Small(a), Rational::Small(b)) = (self, o) {
            if let Some(c) = a.checked_mul(b) {
                return Rational::Small(c);
            }
        }
        Rational::from_big(self.to_big() * o.to_big())
    }

    fn neg(&self) -> Rational {
        match self {
            Rational::Small(a) if *a.numer() != i64::MIN => Rational::Small(-*a),
            _ => Rational::from_big(-self.to_big()),
        }
    }

    fn inv(&self) -> Option<Rational> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Rational::Small(a) if *a.numer() != i64::MIN => Rational::Small(a.recip()),
            _ => Rational::from_big(self.to_big().recip()),
        })
    }
}

/// An element of a [`Field`].
///
/// Arithmetic between scalars of different fields is a logic error and panics;
/// every constructor that accepts external scalars validates the field first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Mod { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.field().one()
    }

    /// Multiplicative inverse, absent for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) => r.inv().map(Scalar::Rat),
            Scalar::Mod { value, modulus } => {
                if *value == 0 {
                    None
                } else {
                    let m = *modulus as u64;
                    Some(Scalar::Mod {
                        value: pow_mod(*value as u64, m - 2, m) as u32,
                        modulus: *modulus,
                    })
                }
            }
        }
    }

    /// Exact rational value, when the field is ℚ.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rat(r) => Some(r.to_big()),
            Scalar::Mod { .. } => None,
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a.add(b)),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => {
                Scalar::Mod {
                    value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            _ => mismatch(self, o),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a.sub(b)),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => {
                Scalar::Mod {
                    value: ((*a as u64 + *p as u64 - *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            _ => mismatch(self, o),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a.mul(b)),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => {
                Scalar::Mod {
                    value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            _ => mismatch(self, o),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(a.neg()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        &self + &o
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        &self - &o
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        &self * &o
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = &*self + o;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                let q = r.to_big();
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Mod { value, modulus } => {
                // Print the balanced representative so that -1 reads as -1.
                let v = *value as i64;
                let m = *modulus as i64;
                if v > m / 2 {
                    write!(f, "{}", v - m)
                } else {
                    write!(f, "{v}")
                }
            }
        }
    }
}

impl Scalar {
    /// Sign of a rational value; `None` over a prime field.
    pub fn signum(&self) -> Option<i32> {
        match self {
            Scalar::Rat(r) => {
                let q = r.to_big();
                Some(if q.is_zero() {
                    0
                } else if q.is_positive() {
                    1
                } else {
                    -1
                })
            }
            Scalar::Mod { .. } => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let q = Field::Rational;
        assert_eq!(q.parse_scalar("6/4").unwrap().to_string(), "3/2");
        assert_eq!(q.parse_scalar("-7").unwrap().to_string(), "-7");
        assert!(q.parse_scalar("1/0").is_err());
        assert!(q.parse_scalar("1/-2").is_err());
        assert!(q.parse_scalar("x").is_err());
        assert!(q.parse_scalar("").is_err());
    }

    #[test]
    fn overflow_promotes_to_big() {
        let q = Field::Rational;
        let big = q.from_i64(i64::MAX);
        let s = &big + &big;
        assert_eq!(s.to_string(), "18446744073709551614");
        let back = &s - &big;
        assert_eq!(back, big);
        assert!(matches!(back, Scalar::Rat(Rational::Small(_))));
        let m = q.from_i64(i64::MIN);
        assert_eq!((-&m).to_string(), "9223372036854775808");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.parse_scalar("1/3").unwrap();
        assert_eq!(&a * &f.from_i64(3), f.one());
        assert_eq!(f.from_i64(-1).to_string(), "-1");
        assert!(Field::prime(8).is_err());
        assert!(Field::prime((1 << 31) + 11).is_err());
        assert_eq!(Field::prime(2147483647).unwrap(), Field::Prime(2147483647));
        assert!(f.parse_scalar("1/7").is_err());
    }

    #[test]
    fn field_strings() {
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("fp:5".parse::<Field>().unwrap(), Field::Prime(5));
        assert_eq!(Field::Prime(5).to_string(), "fp:5");
        assert!("fp:4".parse::<Field>().is_err());
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixing_fields_panics() {
        let _ = &Field::Rational.one() + &Field::Prime(3).one();
    }

    #[test]
    fn inverses() {
        let q = Field::Rational;
        assert_eq!(q.parse_scalar("-2/3").unwrap().inv().unwrap().to_string(), "-3/2");
        assert!(q.zero().inv().is_none());
        let f = Field::Prime(11);
        for v in 1..11 {
            let x = f.from_i64(v);
            assert_eq!(&x * &x.inv().unwrap(), f.one());
        }
    }
}
