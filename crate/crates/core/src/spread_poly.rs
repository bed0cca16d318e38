//! Spread polynomials over the integers: recurrence, evaluation in any
//! field, composition, the Chebyshev relation and the spread-cyclotomic
//! factorization.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{same_context, FieldElement};

/// Dense integer polynomial, index = degree, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_i64s(&[c])
    }

    /// The polynomial `s`.
    pub fn variable() -> Self {
        Self::from_i64s(&[0, 1])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Horner evaluation with the coefficients mapped into the field of `s`.
    pub fn eval(&self, s: &FieldElement) -> FieldElement {
        let ctx = s.context();
        let mut acc = ctx.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * s + ctx.from_bigint(c);
        }
        acc
    }

    /// `self(inner(s))`.
    pub fn compose(&self, inner: &IntPolynomial) -> Self {
        let mut acc = IntPolynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &IntPolynomial::new(vec![c.clone()]);
        }
        acc
    }

    /// Exact division of every coefficient by `k`.
    pub fn exact_div(&self, k: &BigInt) -> Result<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return Err(Error::NonIntegralResult);
            }
            out.push(q);
        }
        Ok(Self::new(out))
    }

    /// Long division over the rationals, requiring a zero remainder and an
    /// integral quotient.
    pub fn divide_exact(&self, divisor: &IntPolynomial) -> Result<Self> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::FactorizationFailure("division by the zero polynomial".into()))?;
        let lead = BigRational::from_integer(divisor.coeffs[dd].clone());
        let mut rem: Vec<BigRational> = self.coeffs.iter().cloned().map(BigRational::from_integer).collect();
        if rem.len() < dd + 1 {
            return if self.is_zero() {
                Ok(IntPolynomial::zero())
            } else {
                Err(Error::FactorizationFailure("nonzero remainder".into()))
            };
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] / &lead;
            if !q.is_zero() {
                for (j, c) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * BigRational::from_integer(c.clone());
                }
            }
            quot[i] = q;
        }
        if rem.iter().any(|r| !r.is_zero()) {
            return Err(Error::FactorizationFailure("nonzero remainder".into()));
        }
        if quot.iter().any(|q| !q.is_integer()) {
            return Err(Error::FactorizationFailure("non-integer coefficient".into()));
        }
        Ok(Self::new(quot.into_iter().map(|q| q.to_integer()).collect()))
    }
}

impl fmt::Display for IntPolynomial {
    /// Space-separated coefficients from the constant term up; `0` for the
    /// zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        IntPolynomial::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

pub fn poly_eval(p: &IntPolynomial, s: &FieldElement) -> FieldElement {
    p.eval(s)
}

pub fn poly_compose(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    p.compose(q)
}

/// `S_n` from `S_0 = 0`, `S_1 = s`, `S_n = 2(1-2s)S_{n-1} - S_{n-2} + 2s`.
pub fn spread_poly(n: usize) -> IntPolynomial {
    spread_sequence(n).pop().expect("nonempty")
}

/// `S_0, ..., S_n`.
pub fn spread_sequence(n: usize) -> Vec<IntPolynomial> {
    let mut seq = vec![IntPolynomial::zero()];
    if n == 0 {
        return seq;
    }
    seq.push(IntPolynomial::variable());
    let factor = IntPolynomial::from_i64s(&[2, -4]);
    let two_s = IntPolynomial::from_i64s(&[0, 2]);
    for k in 2..=n {
        let next = &(&(&factor * &seq[k - 1]) - &seq[k - 2]) + &two_s;
        seq.push(next);
    }
    seq
}

/// Chebyshev polynomial of the first kind.
pub fn chebyshev_t(n: usize) -> IntPolynomial {
    let mut prev = IntPolynomial::constant(1);
    if n == 0 {
        return prev;
    }
    let x = IntPolynomial::variable();
    let two_x = IntPolynomial::from_i64s(&[0, 2]);
    let mut cur = x;
    for _ in 2..=n {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `(1 - T_n(1 - 2s)) / 2`.
pub fn spread_via_chebyshev(n: usize) -> Result<IntPolynomial> {
    let t = chebyshev_t(n).compose(&IntPolynomial::from_i64s(&[1, -2]));
    (&IntPolynomial::constant(1) - &t).exact_div(&BigInt::from(2))
}

pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn check_cyclotomic(k: u64, phi: &IntPolynomial) -> Result<()> {
    if phi.degree() != Some(totient(k) as usize) {
        return Err(Error::FactorizationFailure(format!(
            "phi_{k} has degree {:?}, expected {}",
            phi.degree(),
            totient(k)
        )));
    }
    Ok(())
}

/// `phi_k = S_k / prod_{j | k, j < k} phi_j`, without memoization.
pub fn spread_cyclotomic(k: u64) -> Result<IntPolynomial> {
    if k == 0 {
        return Err(Error::FactorizationFailure("index must be positive".into()));
    }
    let mut denom = IntPolynomial::constant(1);
    for j in divisors(k).into_iter().filter(|&j| j < k) {
        denom = &denom * &spread_cyclotomic(j)?;
    }
    let phi = spread_poly(k as usize).divide_exact(&denom)?;
    check_cyclotomic(k, &phi)?;
    Ok(phi)
}

/// Memo tables for `S_n` and `phi_k`. Intended to be owned by one worker;
/// results are identical to the uncached functions.
#[derive(Default, Debug)]
pub struct SpreadCache {
    spread: Vec<IntPolynomial>,
    cyclotomic: HashMap<u64, IntPolynomial>,
}

impl SpreadCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn spread(&mut self, n: usize) -> &IntPolynomial {
        if self.spread.len() <= n {
            self.spread = spread_sequence(n.max(2 * self.spread.len()));
        }
        &self.spread[n]
    }

    pub fn cyclotomic(&mut self, k: u64) -> Result<IntPolynomial> {
        if k == 0 {
            return Err(Error::FactorizationFailure("index must be positive".into()));
        }
        if let Some(p) = self.cyclotomic.get(&k) {
            return Ok(p.clone());
        }
        let mut denom = IntPolynomial::constant(1);
        for j in divisors(k).into_iter().filter(|&j| j < k) {
            denom = &denom * &self.cyclotomic(j)?;
        }
        let phi = self.spread(k as usize).divide_exact(&denom)?;
        check_cyclotomic(k, &phi)?;
        self.cyclotomic.insert(k, phi.clone());
        Ok(phi)
    }
}

/// Both sides of the green-ratio theorem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenRatio {
    pub s: FieldElement,
    pub spread_value: FieldElement,
    pub closed_form: FieldElement,
}

/// `s = -(y-x)^2 / 4xy`, `S_n(s)`, and `-(y^n - x^n)^2 / 4 x^n y^n`.
pub fn spread_at_green_ratio(x: &FieldElement, y: &FieldElement, n: u32) -> Result<GreenRatio> {
    same_context([x, y])?;
    if x.is_zero() || y.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let s = (-(y - x).square()).checked_div(&(x * y).times(4))?;
    let spread_value = spread_poly(n as usize).eval(&s);
    let (xn, yn) = (x.pow(n), y.pow(n));
    let closed_form = (-(&yn - &xn).square()).checked_div(&(xn * yn).times(4))?;
    Ok(GreenRatio {
        s,
        spread_value,
        closed_form,
    })
}

/// `|leading coefficient| = 4^(n-1)`.
pub fn has_power_of_four_lead(n: usize, p: &IntPolynomial) -> bool {
    n >= 1
        && p.degree() == Some(n)
        && p.leading_coefficient().map(Signed::abs) == Some(num_traits::pow(BigInt::from(4), n - 1))
}

/// Product of the given polynomials, `1` for an empty product.
pub fn product<'a>(polys: impl IntoIterator<Item = &'a IntPolynomial>) -> IntPolynomial {
    polys.into_iter().fold(IntPolynomial::constant(1), |acc, p| &acc * p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn r(n: i64, d: i64) -> FieldElement {
        FieldContext::rationals().from_ratio(n, d).unwrap()
    }

    #[test]
    fn first_spread_polynomials() {
        assert!(spread_poly(0).is_zero());
        assert_eq!(spread_poly(1), p(&[0, 1]));
        assert_eq!(spread_poly(2), p(&[0, 4, -4]));
        assert_eq!(spread_poly(3), p(&[0, 9, -24, 16]));
        assert_eq!(spread_poly(4), p(&[0, 16, -80, 128, -64]));
        assert_eq!(spread_poly(5), p(&[0, 25, -200, 560, -640, 256]));
        assert_eq!(spread_poly(6), p(&[0, 36, -420, 1792, -3456, 3072, -1024]));
    }

    #[test]
    fn normalization() {
        assert_eq!(p(&[1, 2, 0, 0]).coefficients().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!((&p(&[1, 1]) - &p(&[1, 1])).degree(), None);
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(spread_poly(3).to_string(), "0 9 -24 16");
    }

    #[test]
    fn evaluation() {
        assert_eq!(spread_poly(2).eval(&r(1, 2)), r(1, 1));
        assert_eq!(spread_poly(3).eval(&r(1, 2)), r(1, 2));
        let f5 = FieldContext::prime(5).unwrap();
        assert!(poly_eval(&spread_poly(3), &f5.from_integer(2)).is_zero());
    }

    #[test]
    fn composition() {
        assert_eq!(poly_compose(&spread_poly(2), &spread_poly(2)), spread_poly(4));
        assert_eq!(poly_compose(&spread_poly(2), &spread_poly(3)), spread_poly(6));
        let q = p(&[3, -1, 7]);
        assert_eq!(q.compose(&IntPolynomial::variable()), q);
        for n in 1..=6 {
            for m in 1..=6 {
                assert_eq!(spread_poly(n).compose(&spread_poly(m)), spread_poly(n * m));
            }
        }
    }

    #[test]
    fn chebyshev() {
        assert_eq!(chebyshev_t(0), p(&[1]));
        assert_eq!(chebyshev_t(1), p(&[0, 1]));
        assert_eq!(chebyshev_t(2), p(&[-1, 0, 2]));
        assert_eq!(chebyshev_t(3), p(&[0, -3, 0, 4]));
        assert_eq!(spread_via_chebyshev(1).unwrap(), p(&[0, 1]));
        for n in 0..=16 {
            assert_eq!(spread_via_chebyshev(n).unwrap(), spread_poly(n));
        }
    }

    #[test]
    fn exact_division_reports_failures() {
        assert_eq!(p(&[1, 2]).exact_div(&BigInt::from(2)), Err(Error::NonIntegralResult));
        assert!(matches!(
            p(&[1, 0, 1]).divide_exact(&p(&[1, 1])),
            Err(Error::FactorizationFailure(_))
        ));
        assert!(matches!(
            p(&[1, 2]).divide_exact(&p(&[0, 2])),
            Err(Error::FactorizationFailure(_))
        ));
        assert_eq!(p(&[-1, 0, 1]).divide_exact(&p(&[1, 1])).unwrap(), p(&[-1, 1]));
    }

    #[test]
    fn spread_cyclotomic_values() {
        let expected: [&[i64]; 12] = [
            &[0, 1],
            &[4, -4],
            &[9, -24, 16],
            &[4, -16, 16],
            &[25, -200, 560, -640, 256],
            &[1, -8, 16],
            &[49, -784, 4704, -13440, 19712, -14336, 4096],
            &[4, -64, 320, -512, 256],
            &[9, -216, 1872, -7296, 13824, -12288, 4096],
            &[1, -24, 176, -384, 256],
            &[
                121, -4840, 75504, -604032, 2818816, -8200192, 15319040, -18382848, 13697024, -5767168, 1048576,
            ],
            &[1, -32, 288, -512, 256],
        ];
        for (i, coeffs) in expected.iter().enumerate() {
            assert_eq!(spread_cyclotomic(i as u64 + 1).unwrap(), p(coeffs), "phi_{}", i + 1);
        }
    }

    #[test]
    fn cyclotomic_product_and_cache() {
        let mut cache = SpreadCache::new();
        for n in 1..=12u64 {
            let factors: Vec<IntPolynomial> = divisors(n).into_iter().map(|k| cache.cyclotomic(k).unwrap()).collect();
            assert_eq!(product(&factors), spread_poly(n as usize));
            assert_eq!(cache.cyclotomic(n).unwrap(), spread_cyclotomic(n).unwrap());
            assert_eq!(cache.spread(n as usize), &spread_poly(n as usize));
        }
    }

    #[test]
    fn degrees_and_leads() {
        for n in 1..=16 {
            assert!(has_power_of_four_lead(n, &spread_poly(n)));
        }
        assert_eq!(spread_poly(2), p(&[0, 4, -4]));
        assert_eq!(totient(1), 1);
        assert_eq!(totient(12), 4);
        assert_eq!(totient(11), 10);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn green_ratio_examples() {
        let g = spread_at_green_ratio(&r(1, 1), &r(1, 1), 5).unwrap();
        assert!(g.s.is_zero() && g.spread_value.is_zero() && g.closed_form.is_zero());
        let g = spread_at_green_ratio(&r(1, 1), &r(2, 1), 2).unwrap();
        assert_eq!(g.s, r(-1, 8));
        assert_eq!(g.spread_value, r(-9, 16));
        assert_eq!(g.closed_form, r(-9, 16));
        let g = spread_at_green_ratio(&r(1, 1), &r(2, 1), 3).unwrap();
        assert_eq!(g.spread_value, r(-49, 32));
        assert_eq!(g.closed_form, r(-49, 32));
        assert_eq!(spread_at_green_ratio(&r(0, 1), &r(2, 1), 3), Err(Error::DivisionByZero));
    }

    proptest! {
        #[test]
        fn consecutive_spreads_form_spread_triples(n in 1usize..=12, a in -50i64..50, b in 1i64..30) {
            let s = r(a, b);
            let prev = spread_poly(n - 1).eval(&s);
            let cur = spread_poly(n).eval(&s);
            prop_assert!(crate::projective::triple_spread_fn(&prev, &s, &cur).is_zero());
        }

        #[test]
        fn green_ratio_agrees(x in -30i64..30, y in -30i64..30, n in 1u32..=8) {
            prop_assume!(x != 0 && y != 0);
            let g = spread_at_green_ratio(&r(x, 1), &r(y, 1), n).unwrap();
            prop_assert_eq!(g.spread_value, g.closed_form);
            let f13 = FieldContext::prime(13).unwrap();
            let (fx, fy) = (f13.from_integer(x), f13.from_integer(y));
            if !fx.is_zero() && !fy.is_zero() {
                let g = spread_at_green_ratio(&fx, &fy, n).unwrap();
                prop_assert_eq!(g.spread_value, g.closed_form);
            }
        }
    }
}
