//! Coefficient fields: the rationals and prime fields `F_p` with `p < 2^63`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible prime characteristic (exclusive).
pub const MAX_PRIME: u64 = 1 << 63;

/// The coefficient field, identified by its characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    characteristic: u64,
}

impl FieldSpec {
    pub const fn rationals() -> Self {
        FieldSpec { characteristic: 0 }
    }

    /// `F_p`. Fails unless `p` is a prime below `2^63`.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= MAX_PRIME || !is_prime(p) {
            return Err(Error::InvalidField(p));
        }
        Ok(FieldSpec { characteristic: p })
    }

    /// `0` for Q, otherwise `p`.
    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 0 {
            Ok(Self::rationals())
        } else {
            Self::prime(characteristic)
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn is_rational(&self) -> bool {
        self.characteristic == 0
    }

    pub fn zero(&self) -> Coeff {
        if self.is_rational() {
            Coeff::Q(BigRational::zero())
        } else {
            Coeff::Fp(0)
        }
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        if self.is_rational() {
            Coeff::Q(BigRational::from_integer(BigInt::from(n)))
        } else {
            let p = self.characteristic as i128;
            Coeff::Fp((n as i128).rem_euclid(p) as u64)
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        if self.is_rational() {
            Coeff::Q(BigRational::from_integer(n.clone()))
        } else {
            let p = BigInt::from(self.characteristic);
            Coeff::Fp(n.mod_floor(&p).to_u64().expect("residue fits u64"))
        }
    }

    /// `num/den` as a field element; `None` when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Coeff> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return None;
        }
        Some(self.mul(&self.from_bigint(num), &self.inv(&d)))
    }

    /// Coerce a rational into this field; `None` when the denominator vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Option<Coeff> {
        self.from_ratio(q.numer(), q.denom())
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x + y),
            (Coeff::Fp(x), Coeff::Fp(y)) => {
                let s = (*x as u128 + *y as u128) % self.characteristic as u128;
                Coeff::Fp(s as u64)
            }
            _ => panic!("mixed coefficient kinds"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match a {
            Coeff::Q(x) => Coeff::Q(-x),
            Coeff::Fp(0) => Coeff::Fp(0),
            Coeff::Fp(x) => Coeff::Fp(self.characteristic - x),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x * y),
            (Coeff::Fp(x), Coeff::Fp(y)) => {
                Coeff::Fp(mul_mod(*x, *y, self.characteristic))
            }
            _ => panic!("mixed coefficient kinds"),
        }
    }

    /// Multiplicative inverse. Panics on zero; callers check first.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        assert!(!a.is_zero(), "inverse of zero");
        match a {
            Coeff::Q(x) => Coeff::Q(x.recip()),
            Coeff::Fp(x) => Coeff::Fp(pow_mod(*x, self.characteristic - 2, self.characteristic)),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }

    /// Whether `c` is a value of this field (right kind, canonical residue).
    pub fn owns(&self, c: &Coeff) -> bool {
        match c {
            Coeff::Q(_) => self.is_rational(),
            Coeff::Fp(x) => !self.is_rational() && *x < self.characteristic,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "q")
        } else {
            write!(f, "fp:{}", self.characteristic)
        }
    }
}

/// An exact field element. Residues are kept in `[0, p)`; rationals are
/// kept reduced with positive denominator (guaranteed by `BigRational`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(BigRational),
    Fp(u64),
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Q(x) => x.is_zero(),
            Coeff::Fp(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Q(x) => x.is_one(),
            Coeff::Fp(x) => *x == 1,
        }
    }

    /// Sign used when printing: rationals carry one, residues never do.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Q(x) => x.is_negative(),
            Coeff::Fp(_) => false,
        }
    }

    /// `"num/den"` or `"num"`; the exact form used at JSON boundaries.
    pub fn to_exact_string(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Q(x) => {
                if x.denom().is_one() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
            Coeff::Fp(x) => write!(f, "{x}"),
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(9_223_372_036_854_775_783)); // largest prime below 2^63
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::prime(1 << 63).is_err());
        assert!(FieldSpec::new(0).unwrap().is_rational());
    }

    #[test]
    fn modular_arithmetic() {
        let f = FieldSpec::prime(7).unwrap();
        let three = f.from_i64(3);
        assert_eq!(f.mul(&three, &f.inv(&three)), f.one());
        assert_eq!(f.from_i64(-1), Coeff::Fp(6));
        assert_eq!(f.add(&f.from_i64(5), &f.from_i64(4)), Coeff::Fp(2));
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(14)).is_none());
    }

    #[test]
    fn rational_arithmetic_is_reduced() {
        let q = FieldSpec::rationals();
        let a = q.from_ratio(&BigInt::from(2), &BigInt::from(-4)).unwrap();
        assert_eq!(a.to_string(), "-1/2");
        assert!(a.is_negative());
        let b = q.add(&a, &q.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap());
        assert!(b.is_zero());
    }
}
