//! Dense univariate polynomials and rational functions in one variable `t`,
//! used for Hilbert and Poincaré series.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;

/// Coefficients in ascending degree, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    /// `c * t^e`.
    pub fn term(c: Rational, e: usize) -> Self {
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = c;
        Self::new(v)
    }

    /// `1 - t^e`.
    pub fn one_minus_t_pow(e: usize) -> Self {
        &Self::one() - &Self::term(Rational::one(), e)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.0.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn evaluate(&self, t: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(&acc * t) + c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.0[dd].recip();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.0.iter().enumerate() {
                let sub = &c * dc;
                rem[k + i] -= &sub;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{a}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{a}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.0.len().max(rhs.0.len());
        UniPoly::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.0.len().max(rhs.0.len());
        UniPoly::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly(self.0.iter().map(|c| -c).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("denominator vanishes at t = 0")]
    PoleAtZero,
    #[error("zero denominator")]
    ZeroDenominator,
}

/// Reduced quotient of univariate polynomials with monic denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniRationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl UniRationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, SeriesError> {
        if den.is_zero() {
            return Err(SeriesError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(UniRationalFunction {
                num,
                den: UniPoly::one(),
            });
        }
        let g = UniPoly::gcd(&num, &den);
        let num = num.div_rem(&g).0;
        let den = den.div_rem(&g).0;
        let lead = den.leading().unwrap().recip();
        Ok(UniRationalFunction {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    /// Taylor coefficients at `t = 0` of degrees `0..=order`.
    pub fn series_expand(&self, order: usize) -> Result<Vec<Rational>, SeriesError> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(SeriesError::PoleAtZero);
        }
        let inv = d0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            // den * series = num, solved degree by degree
            let mut c = self.num.coeff(k);
            for j in 1..=k.min(self.den.0.len().saturating_sub(1)) {
                c -= &(&self.den.0[j] * &out[k - j]);
            }
            out.push(&c * &inv);
        }
        Ok(out)
    }

    /// Whether `self * multiplier == expected`, by cross-multiplication.
    pub fn identity_check(&self, multiplier: &UniPoly, expected: &UniPoly) -> bool {
        &self.num * multiplier == expected * &self.den
    }
}

impl Mul for &UniRationalFunction {
    type Output = UniRationalFunction;
    fn mul(self, rhs: &UniRationalFunction) -> UniRationalFunction {
        UniRationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

/// Free-function form of [`UniRationalFunction::identity_check`].
pub fn ratfun_identity_check(f: &UniRationalFunction, multiplier: &UniPoly, expected: &UniPoly) -> bool {
    f.identity_check(multiplier, expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[Rational]) -> Vec<i64> {
        v.iter().map(|c| c.to_string().parse().unwrap()).collect()
    }

    #[test]
    fn geometric_series() {
        let f = UniRationalFunction::new(UniPoly::one(), UniPoly::one_minus_t_pow(1)).unwrap();
        assert_eq!(ints(&f.series_expand(3).unwrap()), vec![1, 1, 1, 1]);
        assert!(f.identity_check(&UniPoly::one_minus_t_pow(1), &UniPoly::one()));
        assert!(!f.identity_check(&UniPoly::from_ints(&[1, 1]), &UniPoly::one()));
    }

    #[test]
    fn simple_action_series_by_long_division() {
        let den = &UniPoly::one_minus_t_pow(2) * &UniPoly::one_minus_t_pow(3);
        let f = UniRationalFunction::new(UniPoly::one(), den).unwrap();
        // 1/(1-t^2) = sum t^{2a}, 1/(1-t^3) = sum t^{3b}; count a,b with 2a+3b = k
        let brute: Vec<i64> = (0..=5)
            .map(|k| (0..=k).filter(|a| 2 * a <= k && (k - 2 * a) % 3 == 0).count() as i64)
            .collect();
        assert_eq!(ints(&f.series_expand(5).unwrap()), brute);
        assert_eq!(brute, vec![1, 0, 1, 1, 1, 1]);
    }

    #[test]
    fn pole_at_zero_is_reported() {
        let f = UniRationalFunction::new(UniPoly::one(), UniPoly::from_ints(&[0, 1])).unwrap();
        assert_eq!(f.series_expand(2), Err(SeriesError::PoleAtZero));
    }

    #[test]
    fn gcd_reduction() {
        let a = &UniPoly::from_ints(&[1, 1]) * &UniPoly::from_ints(&[-2, 1]);
        let b = &UniPoly::from_ints(&[1, 1]) * &UniPoly::from_ints(&[3, 1]);
        let f = UniRationalFunction::new(a, b).unwrap();
        assert_eq!(f.numerator(), &UniPoly::from_ints(&[-2, 1]));
        assert_eq!(f.denominator(), &UniPoly::from_ints(&[3, 1]));
    }

    fn small_poly() -> impl Strategy<Value = UniPoly> {
        proptest::collection::vec(-5i64..6, 0..5).prop_map(|v| UniPoly::from_ints(&v))
    }

    proptest! {
        #[test]
        fn cauchy_product(a in small_poly(), b in small_poly(), da in 1i64..4, db in -3i64..4) {
            let f = UniRationalFunction::new(a, UniPoly::from_ints(&[1, -da, 1])).unwrap();
            let g = UniRationalFunction::new(b, UniPoly::from_ints(&[1, db])).unwrap();
            let n = 8;
            let sf = f.series_expand(n).unwrap();
            let sg = g.series_expand(n).unwrap();
            let fg = (&f * &g).series_expand(n).unwrap();
            for k in 0..=n {
                let c: Rational = (0..=k).map(|i| &sf[i] * &sg[k - i]).sum();
                prop_assert_eq!(&c, &fg[k]);
            }
        }

        #[test]
        fn div_rem_reconstructs(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree() < b.degree() || r.is_zero());
        }
    }
}
