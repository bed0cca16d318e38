//! Exact field arithmetic over the rationals and over prime fields `F_p`, `p` odd.
//!
//! Both realizations live behind [`FieldElement`], which carries its own
//! context. Arithmetic operators panic when the operands come from different
//! fields; the `checked_*` methods report [`Error::MixedContexts`] instead.
//! Geometry functions validate contexts up front, so the operators are only
//! reached with compatible operands.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Which field values live in: the rationals or `F_p` for an odd prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldContext {
    modulus: Option<u64>,
}

impl FieldContext {
    pub const RATIONALS: FieldContext = FieldContext { modulus: None };

    pub fn rationals() -> Self {
        Self::RATIONALS
    }

    /// `F_p`; rejects `p = 2` and composite moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::CharacteristicTwo);
        }
        if !primal_check::miller_rabin(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldContext { modulus: Some(p) })
    }

    /// Parses a field descriptor: `rationals` or `fp:<p>`.
    pub fn from_descriptor(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if spec == "rationals" {
            return Ok(Self::rationals());
        }
        let p = spec
            .strip_prefix("fp:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::InvalidDescriptor(spec.to_string()))?;
        Self::prime(p)
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn is_finite(&self) -> bool {
        self.modulus.is_some()
    }

    /// `0` for the rationals, `p` for `F_p`.
    pub fn characteristic(&self) -> u64 {
        self.modulus.unwrap_or(0)
    }

    pub fn zero(&self) -> FieldElement {
        self.from_integer(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_integer(1)
    }

    pub fn from_integer(&self, n: i64) -> FieldElement {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match self.modulus {
            None => FieldElement(Repr::Rational(BigRational::from_integer(n.clone()))),
            Some(p) => FieldElement(Repr::Residue {
                value: reduce_bigint(n, p),
                modulus: p,
            }),
        }
    }

    /// `num / den` mapped into this field.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<FieldElement> {
        self.from_integer(num).checked_div(&self.from_integer(den))
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<FieldElement> {
        self.from_bigint(q.numer()).checked_div(&self.from_bigint(q.denom()))
    }

    /// All elements `0, 1, ..., p-1` of a prime field, in ascending order.
    pub fn elements(&self) -> Result<Vec<FieldElement>> {
        match self.modulus {
            None => Err(Error::InfiniteField),
            Some(p) => Ok((0..p)
                .map(|value| FieldElement(Repr::Residue { value, modulus: p }))
                .collect()),
        }
    }

    /// Parses `n` or `n/d` (decimal integers, optional sign) into this field.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        let parse_int =
            |t: &str| BigInt::from_str(t.trim()).map_err(|_| Error::parse(s, "expected an integer or fraction"));
        match s.split_once('/') {
            None => Ok(self.from_bigint(&parse_int(s)?)),
            Some((n, d)) => {
                let (n, d) = (parse_int(n)?, parse_int(d)?);
                self.from_bigint(&n).checked_div(&self.from_bigint(&d))
            }
        }
    }
}

impl fmt::Display for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus {
            None => f.write_str("rationals"),
            Some(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldContext {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_descriptor(s)
    }
}

/// Builds a field context from its descriptor string.
pub fn make_context(spec: &str) -> Result<FieldContext> {
    FieldContext::from_descriptor(spec)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

/// An exact element of the rationals or of a prime field.
///
/// Rationals are kept in lowest terms with a positive denominator; residues
/// satisfy `0 <= value < p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement(Repr);

impl FieldElement {
    pub fn rational(q: BigRational) -> Self {
        FieldElement(Repr::Rational(q))
    }

    pub fn context(&self) -> FieldContext {
        match &self.0 {
            Repr::Rational(_) => FieldContext::RATIONALS,
            Repr::Residue { modulus, .. } => FieldContext {
                modulus: Some(*modulus),
            },
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(q) => Some(q),
            Repr::Residue { .. } => None,
        }
    }

    pub fn residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Residue { value, .. } => Some(*value),
            Repr::Rational(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_zero(),
            Repr::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_one(),
            Repr::Residue { value, .. } => *value == 1,
        }
    }

    /// The element `n` of the same field as `self`.
    pub fn lift(&self, n: i64) -> FieldElement {
        self.context().from_integer(n)
    }

    pub fn zero_like(&self) -> FieldElement {
        self.lift(0)
    }

    pub fn one_like(&self) -> FieldElement {
        self.lift(1)
    }

    /// Integer multiple `k * self`.
    pub fn times(&self, k: i64) -> FieldElement {
        self * &self.lift(k)
    }

    pub fn square(&self) -> FieldElement {
        self * self
    }

    pub fn pow(&self, exp: u32) -> FieldElement {
        match &self.0 {
            Repr::Rational(q) => FieldElement(Repr::Rational(num_traits::pow(q.clone(), exp as usize))),
            Repr::Residue { value, modulus } => FieldElement(Repr::Residue {
                value: pow_mod(*value, exp as u64, *modulus),
                modulus: *modulus,
            }),
        }
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Rational(q) => FieldElement(Repr::Rational(q.recip())),
            Repr::Residue { value, modulus } => FieldElement(Repr::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            }),
        })
    }

    pub fn checked_div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.check_context(rhs)?;
        Ok(self * &rhs.inv()?)
    }

    pub fn checked_add(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.check_context(rhs)?;
        Ok(self + rhs)
    }

    pub fn checked_sub(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.check_context(rhs)?;
        Ok(self - rhs)
    }

    pub fn checked_mul(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.check_context(rhs)?;
        Ok(self * rhs)
    }

    /// Equality that reports mixed contexts instead of answering `false`.
    pub fn checked_eq(&self, rhs: &FieldElement) -> Result<bool> {
        self.check_context(rhs)?;
        Ok(self == rhs)
    }

    fn check_context(&self, rhs: &FieldElement) -> Result<()> {
        if self.context() == rhs.context() {
            Ok(())
        } else {
            Err(Error::MixedContexts)
        }
    }

    /// A square root of `self` if one exists in the field.
    ///
    /// The root is canonical: non-negative over the rationals, the smaller of
    /// the two residues over `F_p`.
    pub fn sqrt(&self) -> Option<FieldElement> {
        match &self.0 {
            Repr::Rational(q) => {
                if q.is_negative() {
                    return None;
                }
                let n = exact_isqrt(q.numer())?;
                let d = exact_isqrt(q.denom())?;
                Some(FieldElement(Repr::Rational(BigRational::new(n, d))))
            }
            Repr::Residue { value, modulus } => sqrt_mod(*value, *modulus).map(|r| {
                FieldElement(Repr::Residue {
                    value: r,
                    modulus: *modulus,
                })
            }),
        }
    }

    pub fn is_square(&self) -> bool {
        self.sqrt().is_some()
    }

    fn add_ref(&self, rhs: &FieldElement) -> FieldElement {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => FieldElement(Repr::Rational(a + b)),
            (Repr::Residue { value: a, modulus: p }, Repr::Residue { value: b, modulus: q }) if p == q => {
                FieldElement(Repr::Residue {
                    value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                    modulus: *p,
                })
            }
            _ => mixed_panic(),
        }
    }

    fn sub_ref(&self, rhs: &FieldElement) -> FieldElement {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => FieldElement(Repr::Rational(a - b)),
            (Repr::Residue { value: a, modulus: p }, Repr::Residue { value: b, modulus: q }) if p == q => {
                FieldElement(Repr::Residue {
                    value: ((*a as u128 + (*p - *b) as u128) % *p as u128) as u64,
                    modulus: *p,
                })
            }
            _ => mixed_panic(),
        }
    }

    fn mul_ref(&self, rhs: &FieldElement) -> FieldElement {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => FieldElement(Repr::Rational(a * b)),
            (Repr::Residue { value: a, modulus: p }, Repr::Residue { value: b, modulus: q }) if p == q => {
                FieldElement(Repr::Residue {
                    value: mul_mod(*a, *b, *p),
                    modulus: *p,
                })
            }
            _ => mixed_panic(),
        }
    }

    fn neg_ref(&self) -> FieldElement {
        match &self.0 {
            Repr::Rational(a) => FieldElement(Repr::Rational(-a)),
            Repr::Residue { value, modulus } => FieldElement(Repr::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            }),
        }
    }
}

#[cold]
fn mixed_panic() -> ! {
    panic!("arithmetic on elements of different fields")
}

/// Checks that all elements share one field and returns it.
pub fn same_context<'a, I>(elements: I) -> Result<FieldContext>
where
    I: IntoIterator<Item = &'a FieldElement>,
{
    let mut iter = elements.into_iter();
    let first = iter
        .next()
        .map(FieldElement::context)
        .unwrap_or(FieldContext::RATIONALS);
    if iter.all(|e| e.context() == first) {
        Ok(first)
    } else {
        Err(Error::MixedContexts)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$inner(rhs)
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$inner(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$inner(rhs)
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$inner(&rhs)
            }
        }
    };
}

impl_binop!(Add, add, add_ref);
impl_binop!(Sub, sub, sub_ref);
impl_binop!(Mul, mul, mul_ref);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(q) => write!(f, "{q}"),
            Repr::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Tonelli-Shanks; returns the smaller of the two roots.
fn sqrt_mod(n: u64, p: u64) -> Option<u64> {
    if n == 0 {
        return Some(0);
    }
    if pow_mod(n, (p - 1) / 2, p) != 1 {
        return None;
    }
    let root = if p % 4 == 3 {
        pow_mod(n, (p + 1) / 4, p)
    } else {
        let mut q = p - 1;
        let mut s = 0u32;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let mut z = 2;
        while pow_mod(z, (p - 1) / 2, p) != p - 1 {
            z += 1;
        }
        let mut m = s;
        let mut c = pow_mod(z, q, p);
        let mut t = pow_mod(n, q, p);
        let mut r = pow_mod(n, q.div_ceil(2), p);
        while t != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2 != 1 {
                t2 = mul_mod(t2, t2, p);
                i += 1;
            }
            let b = pow_mod(c, 1u64 << (m - i - 1), p);
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            r = mul_mod(r, b, p);
        }
        r
    };
    Some(root.min(p - root))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> FieldElement {
        FieldContext::rationals().from_ratio(n, d).unwrap()
    }

    #[test]
    fn descriptors() {
        assert_eq!(make_context("rationals").unwrap(), FieldContext::rationals());
        assert_eq!(make_context("fp:13").unwrap().modulus(), Some(13));
        assert_eq!(make_context("fp:2"), Err(Error::CharacteristicTwo));
        assert_eq!(make_context("fp:15"), Err(Error::NotPrime(15)));
        assert!(matches!(make_context("fp:x"), Err(Error::InvalidDescriptor(_))));
        assert!(matches!(make_context("reals"), Err(Error::InvalidDescriptor(_))));
        assert_eq!(make_context("fp:13").unwrap().to_string(), "fp:13");
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        assert_eq!(q(2, 3) + q(1, 6), q(5, 6));
        assert_eq!((q(2, 3) + q(1, 6)).to_string(), "5/6");
        assert_eq!(q(4, 2).to_string(), "2");
        assert_eq!(q(3, -6).to_string(), "-1/2");
        assert_eq!(q(0, 1).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn inverse_mod_13_matches_brute_force() {
        let f13 = FieldContext::prime(13).unwrap();
        let five = f13.from_integer(5);
        let brute = (0..13).find(|r| (5 * r) % 13 == 1).unwrap();
        assert_eq!(brute, 8);
        assert_eq!(five.inv().unwrap().residue(), Some(brute));
    }

    #[test]
    fn inverse_exhaustive_small_primes() {
        for p in [3u64, 5, 7, 11, 13, 97] {
            let ctx = FieldContext::prime(p).unwrap();
            for a in ctx.elements().unwrap().into_iter().filter(|a| !a.is_zero()) {
                assert!((&a * &a.inv().unwrap()).is_one(), "p={p} a={a}");
            }
        }
    }

    #[test]
    fn enumeration() {
        let f5 = FieldContext::prime(5).unwrap();
        let values: Vec<u64> = f5.elements().unwrap().iter().map(|e| e.residue().unwrap()).collect();
        assert_eq!(values, vec![0, 1, 2, 3, 4]);
        assert_eq!(FieldContext::prime(3).unwrap().elements().unwrap().len(), 3);
        assert_eq!(FieldContext::rationals().elements(), Err(Error::InfiniteField));
    }

    #[test]
    fn square_roots() {
        assert_eq!(q(9, 4).sqrt(), Some(q(3, 2)));
        assert_eq!(q(2, 1).sqrt(), None);
        assert_eq!(q(-4, 1).sqrt(), None);
        assert_eq!(q(0, 1).sqrt(), Some(q(0, 1)));
        let f13 = FieldContext::prime(13).unwrap();
        let brute: Vec<u64> = (0..13).filter(|r| (r * r) % 13 == 3).collect();
        assert_eq!(brute, vec![4, 9]);
        assert_eq!(f13.from_integer(3).sqrt().unwrap().residue(), Some(4));
    }

    #[test]
    fn modular_sqrt_agrees_with_search() {
        // 17 and 97 are 1 mod 8 / 1 mod 16, exercising the full Tonelli-Shanks loop.
        for p in [3u64, 5, 7, 13, 17, 41, 97, 101] {
            let ctx = FieldContext::prime(p).unwrap();
            for t in ctx.elements().unwrap() {
                let v = t.residue().unwrap();
                let brute = (0..p).find(|r| (r * r) % p == v);
                assert_eq!(t.sqrt().and_then(|r| r.residue()), brute, "p={p} t={v}");
            }
        }
    }

    #[test]
    fn large_prime_sqrt() {
        let p = 1_000_000_007u64; // 3 mod 4
        let ctx = FieldContext::prime(p).unwrap();
        let x = ctx.from_integer(123_456_789);
        let r = x.square().sqrt().unwrap();
        assert_eq!(r.square(), x.square());
        let p = 998_244_353u64; // 1 mod 2^23
        let ctx = FieldContext::prime(p).unwrap();
        let x = ctx.from_integer(31_415_926);
        let r = x.square().sqrt().unwrap();
        assert_eq!(r.square(), x.square());
    }

    #[test]
    fn mixed_contexts_are_reported() {
        let a = FieldContext::prime(5).unwrap().from_integer(1);
        let b = FieldContext::prime(7).unwrap().from_integer(1);
        assert_eq!(a.checked_add(&b), Err(Error::MixedContexts));
        assert_eq!(a.checked_eq(&q(1, 1)), Err(Error::MixedContexts));
        assert_eq!(same_context([&a, &b]), Err(Error::MixedContexts));
    }

    #[test]
    fn parsing() {
        let f7 = FieldContext::prime(7).unwrap();
        assert_eq!(f7.parse_element("-1").unwrap().residue(), Some(6));
        assert_eq!(f7.parse_element("1/2").unwrap().residue(), Some(4));
        assert_eq!(f7.parse_element("1/7"), Err(Error::DivisionByZero));
        let qf = FieldContext::rationals();
        assert_eq!(qf.parse_element("-10/4").unwrap(), q(-5, 2));
        assert!(qf.parse_element("abc").unwrap_err().is_parse());
    }

    proptest::proptest! {
        #[test]
        fn rational_inverse(n in -10_000i64..10_000, d in 1i64..10_000) {
            let a = q(n, d);
            if !a.is_zero() {
                proptest::prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn normalization_is_idempotent(n in -10_000i64..10_000, d in 1i64..10_000) {
            let a = q(n, d);
            let r = a.as_rational().unwrap();
            let renormalized = BigRational::new(r.numer().clone(), r.denom().clone());
            proptest::prop_assert_eq!(&renormalized, r);
            proptest::prop_assert!(r.denom().is_positive());
        }

        #[test]
        fn returned_roots_square_back(n in 0i64..5_000, d in 1i64..5_000, p_idx in 0usize..4) {
            let a = q(n * n, d * d);
            let r = a.sqrt().unwrap();
            proptest::prop_assert_eq!(r.square(), a);
            let p = [5u64, 13, 17, 101][p_idx];
            let ctx = FieldContext::prime(p).unwrap();
            let t = ctx.from_integer(n);
            if let Some(r) = t.sqrt() {
                proptest::prop_assert_eq!(r.square(), t);
            }
        }
    }
}
