//! Scalar abstraction for exact and floating-point linear algebra.
//!
//! The rank routines in [`crate::linalg`] are generic over [`Field`].  The
//! randomized matroid-parity solver runs over [`Fp`], a prime field whose
//! modulus is chosen at runtime; the rational and floating-point impls back
//! independent cross-checks.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub trait Field:
    Clone + PartialEq + Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    /// Additive identity of the field `self` lives in.
    fn zero_like(&self) -> Self;
    /// Multiplicative identity of the field `self` lives in.
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn inverse(&self) -> Option<Self>;
    /// Pivot preference; elimination picks the largest.
    fn magnitude(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            1.0
        }
    }
}

impl<T> Field for Ratio<T>
where
    T: Clone + Integer + Signed + Debug,
{
    fn zero_like(&self) -> Self {
        Ratio::zero()
    }
    fn one_like(&self) -> Self {
        Ratio::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

macro_rules! float_field {
    ($t:ty) => {
        impl Field for $t {
            fn zero_like(&self) -> Self {
                0.0
            }
            fn one_like(&self) -> Self {
                1.0
            }
            fn is_zero(&self) -> bool {
                self.abs() <= <$t>::EPSILON * 64.0
            }
            fn inverse(&self) -> Option<Self> {
                (!Field::is_zero(self)).then(|| 1.0 / self)
            }
            fn magnitude(&self) -> f64 {
                self.abs() as f64
            }
        }
    };
}

float_field!(f32);
float_field!(f64);

/// Element of the prime field `Z/pZ`, carrying its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    /// `value mod p`.
    pub fn new(value: u64, modulus: u64) -> Self {
        debug_assert!(modulus >= 2);
        Fp {
            value: value % modulus,
            modulus,
        }
    }

    /// Embeds a signed integer.
    pub fn from_i64(value: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        Fp {
            value: (value as i128).rem_euclid(m) as u64,
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::new(1, self.modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }
}

impl Debug for Fp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let s = self.value as u128 + rhs.value as u128;
        Fp {
            value: (s % self.modulus as u128) as u64,
            modulus: self.modulus,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self + (-rhs)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            value: if self.value == 0 {
                0
            } else {
                self.modulus - self.value
            },
            modulus: self.modulus,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let p = self.value as u128 * rhs.value as u128;
        Fp {
            value: (p % self.modulus as u128) as u64,
            modulus: self.modulus,
        }
    }
}

impl Field for Fp {
    fn zero_like(&self) -> Self {
        Fp::new(0, self.modulus)
    }
    fn one_like(&self) -> Self {
        Fp::new(1, self.modulus)
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn inverse(&self) -> Option<Self> {
        // Fermat; the modulus is prime wherever Fp is used as a field.
        (self.value != 0).then(|| self.pow(self.modulus - 2))
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
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

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
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
    'witness: for a in SMALL {
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

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime(c) {
        c += 1;
    }
    c
}
