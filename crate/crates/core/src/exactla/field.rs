use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use super::LinalgError;

/// The coefficient field of an algebra: a prime field or the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(u32),
    Rationals,
}

/// A field element. Prime-field residues are stored reduced into `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod(u32),
    Rat(BigRational),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// The prime field with `p` elements; `p` must be prime and below 2^31.
    pub fn prime(p: u64) -> Result<Self, LinalgError> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// Number of elements, or `None` for an infinite field.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Prime(p) => Some(*p as u64),
            FieldSpec::Rationals => None,
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Rationals => 0,
        }
    }

    pub fn contains(&self, a: &Scalar) -> bool {
        match (self, a) {
            (FieldSpec::Prime(p), Scalar::Mod(v)) => v < p,
            (FieldSpec::Rationals, Scalar::Rat(_)) => true,
            _ => false,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Prime(_) => Scalar::Mod(0),
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Prime(_) => Scalar::Mod(1),
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Prime(p) => Scalar::Mod(v.rem_euclid(*p as i64) as u32),
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u64 + *y as u64) % *p as u64) as u32)
            }
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => mixed(a, b),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                let p = *p as u64;
                Scalar::Mod(((*x as u64 + p - *y as u64) % p) as u32)
            }
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            _ => mixed(a, b),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u64 * *y as u64) % *p as u64) as u32)
            }
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => mixed(a, b),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.sub(&self.zero(), a)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match (self, a) {
            (FieldSpec::Prime(p), Scalar::Mod(x)) => {
                Some(Scalar::Mod(pow_mod(*x as u64, *p as u64 - 2, *p as u64) as u32))
            }
            (FieldSpec::Rationals, Scalar::Rat(x)) => Some(Scalar::Rat(x.recip())),
            _ => panic!("scalar {a:?} does not belong to {self:?}"),
        }
    }

    /// Parses a decimal integer or a fraction `n/d`. Over 𝔽_p a fraction
    /// denotes `n · d⁻¹`.
    pub fn parse(&self, s: &str) -> Result<Scalar, LinalgError> {
        let s = s.trim();
        let bad = || LinalgError::Parse(s.to_string());
        match self {
            FieldSpec::Prime(p) => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), Some(d.trim())),
                    None => (s, None),
                };
                let reduce = |t: &str| -> Result<Scalar, LinalgError> {
                    let v = BigInt::from_str(t).map_err(|_| bad())?;
                    let r = ((v % BigInt::from(*p)) + BigInt::from(*p)) % BigInt::from(*p);
                    Ok(Scalar::Mod(r.to_u32().expect("residue fits")))
                };
                let n = reduce(num)?;
                match den {
                    None => Ok(n),
                    Some(d) => {
                        let d = reduce(d)?;
                        let di = self.inv(&d).ok_or_else(bad)?;
                        Ok(self.mul(&n, &di))
                    }
                }
            }
            FieldSpec::Rationals => {
                if let Some((_, d)) = s.split_once('/') {
                    if BigInt::from_str(d.trim()).map_err(|_| bad())?.is_zero() {
                        return Err(bad());
                    }
                }
                let q = BigRational::from_str(s).map_err(|_| bad())?;
                Ok(Scalar::Rat(q))
            }
        }
    }

    /// Uniform residue over 𝔽_p; small integers in `[-9, 9]` over ℚ.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self {
            FieldSpec::Prime(p) => Scalar::Mod(rng.gen_range(0..*p)),
            FieldSpec::Rationals => self.from_i64(rng.gen_range(-9..=9)),
        }
    }

    /// Enumerates all elements of a finite field in increasing residue order.
    pub fn elements(&self) -> Option<impl Iterator<Item = Scalar>> {
        match self {
            FieldSpec::Prime(p) => Some((0..*p).map(Scalar::Mod)),
            FieldSpec::Rationals => None,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Rationals => write!(f, "QQ"),
        }
    }
}

fn mixed(a: &Scalar, b: &Scalar) -> ! {
    panic!("mixed-field arithmetic on {a:?} and {b:?}")
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod(v) => *v == 0,
            Scalar::Rat(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod(v) => *v == 1,
            Scalar::Rat(q) => q.is_one(),
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rat(q) if q.is_negative())
    }
}

/// Canonical decimal form: residues in `0..p`, rationals as `n` or `n/d`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod(v) => write!(f, "{v}"),
            Scalar::Rat(q) => write!(f, "{q}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(101).is_ok());
        assert!(FieldSpec::prime(2_147_483_647).is_ok());
        assert!(FieldSpec::prime(4_294_967_291).is_err());
        assert_eq!(FieldSpec::prime(1), Err(LinalgError::NotPrime(1)));
        assert_eq!(FieldSpec::prime(91), Err(LinalgError::NotPrime(91)));
    }

    #[test]
    fn parse_and_format() {
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(f3.parse("-1").unwrap(), Scalar::Mod(2));
        assert_eq!(f3.parse("1/2").unwrap(), Scalar::Mod(2));
        assert!(f3.parse("1/3").is_err());
        assert!(f3.parse("x").is_err());
        let q = FieldSpec::rationals();
        assert_eq!(q.parse("4/6").unwrap().to_string(), "2/3");
        assert_eq!(q.parse("-5").unwrap().to_string(), "-5");
        assert!(q.parse("1/0").is_err());
    }

    #[test]
    fn inverses() {
        let f = FieldSpec::prime(101).unwrap();
        for v in 1..101 {
            let a = Scalar::Mod(v);
            assert!(f.mul(&a, &f.inv(&a).unwrap()).is_one());
        }
        assert_eq!(f.inv(&Scalar::Mod(0)), None);
    }
}
