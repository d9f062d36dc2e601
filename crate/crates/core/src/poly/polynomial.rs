use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;

use super::monomial::{Monomial, MonomialOrder};
use super::ring::{same_ring, Ring};
use super::PolyError;

/// Exact multivariate polynomial over the rationals.
///
/// Terms are stored sorted by the lexicographic exponent order with no zero
/// coefficients, which makes the representation canonical: two polynomials
/// are equal iff their term vectors are equal.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        Self::monomial(ring, Monomial::one(ring.len()), c)
    }

    pub fn int(ring: &Ring, c: i64) -> Self {
        Self::constant(ring, Rational::from_int(c))
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.len(), ring.len(), "monomial length does not match ring");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// The `i`-th ring variable.
    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.len(), i, 1), Rational::one())
    }

    pub fn var_named(ring: &Ring, name: &str) -> Result<Self, PolyError> {
        Ok(Self::var(ring, ring.require(name)?))
    }

    /// Collects arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), ring.len(), "monomial length does not match ring");
            if c.is_zero() {
                continue;
            }
            acc.entry(m)
                .and_modify(|e| *e += &c)
                .or_insert(c);
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &Ring, acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Parses the plain-text syntax, e.g. `3/2*x^2*y - z + 1`.
    pub fn parse(ring: &Ring, text: &str) -> Result<Self, PolyError> {
        super::text::parse_polynomial(ring, text)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_term(&self) -> Rational {
        match self.terms.first() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rational::zero(),
        }
    }

    /// Total degree; `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    /// Degree with respect to the ring weights.
    pub fn weighted_degree(&self) -> Option<u32> {
        let w = self.ring.weights();
        self.terms.iter().map(|(m, _)| m.weighted_degree(w)).max()
    }

    pub fn is_homogeneous_for(&self, weights: &[u32]) -> bool {
        let mut it = self.terms.iter().map(|(m, _)| m.weighted_degree(weights));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Homogeneous with respect to the ring weights.
    pub fn is_homogeneous(&self) -> bool {
        self.is_homogeneous_for(self.ring.weights())
    }

    /// Variables occurring in some term.
    pub fn support(&self) -> Vec<usize> {
        let mut seen = vec![false; self.ring.len()];
        for (m, _) in &self.terms {
            for i in m.support() {
                seen[i] = true;
            }
        }
        seen.iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| i)
            .collect()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                acc.entry(ma.mul(mb))
                    .and_modify(|e| *e += &c)
                    .or_insert(c);
            }
        }
        Self::from_map(&self.ring, acc)
    }

    /// Multiplies by the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        // multiplication by a monomial preserves the lexicographic order
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(a, b)| (a.mul(m), b * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    /// Replaces the listed variables by polynomials of the same ring.
    /// Unassigned variables map to themselves.
    pub fn substitute(&self, assignment: &[(usize, Polynomial)]) -> Result<Polynomial, PolyError> {
        let mut images: Vec<Polynomial> = (0..self.ring.len())
            .map(|i| Polynomial::var(&self.ring, i))
            .collect();
        for (v, p) in assignment {
            if *v >= self.ring.len() {
                return Err(PolyError::UnknownVariable(format!("#{v}")));
            }
            self.check_ring(p)?;
            images[*v] = p.clone();
        }
        self.map_to(&self.ring, &images)
    }

    /// Substitution by variable names.
    pub fn substitute_named(&self, assignment: &[(&str, Polynomial)]) -> Result<Polynomial, PolyError> {
        let idx = assignment
            .iter()
            .map(|(n, p)| Ok((self.ring.require(n)?, p.clone())))
            .collect::<Result<Vec<_>, PolyError>>()?;
        self.substitute(&idx)
    }

    /// Ring homomorphism sending variable `i` to `images[i]` in `target`.
    pub fn map_to(&self, target: &Ring, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if images.len() != self.ring.len() {
            return Err(PolyError::Arity {
                expected: self.ring.len(),
                got: images.len(),
            });
        }
        if images.iter().any(|p| !same_ring(&p.ring, target)) {
            return Err(PolyError::RingMismatch);
        }
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); images.len()];
        let mut out = Polynomial::zero(target);
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(Polynomial::one(target));
                }
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul_unchecked(&images[i]);
                    cache.push(next);
                }
                term = term.mul_unchecked(&cache[e as usize]);
                if term.is_zero() {
                    break;
                }
            }
            for (tm, tc) in term.terms {
                acc.entry(tm).and_modify(|e| *e += &tc).or_insert(tc);
            }
        }
        if !acc.is_empty() {
            out = Self::from_map(target, acc);
        }
        Ok(out)
    }

    /// Moves the polynomial into `target`, sending variable `i` to variable
    /// `var_map[i]` of the target ring.
    pub fn relabel(&self, target: &Ring, var_map: &[usize]) -> Result<Polynomial, PolyError> {
        if var_map.len() != self.ring.len() {
            return Err(PolyError::Arity {
                expected: self.ring.len(),
                got: var_map.len(),
            });
        }
        if var_map.iter().any(|&j| j >= target.len()) {
            return Err(PolyError::UnknownVariable("relabel target".into()));
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u16; target.len()];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[var_map[i]] += x;
            }
            (Monomial::from_exponents(e), c.clone())
        });
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Moves the polynomial into a ring containing the names of all
    /// variables that occur in it.
    pub fn relabel_by_name(&self, target: &Ring) -> Result<Polynomial, PolyError> {
        let mut map = Vec::with_capacity(self.ring.len());
        for v in 0..self.ring.len() {
            match target.index_of(self.ring.name(v)) {
                Some(j) => map.push(j),
                None => {
                    if self.terms.iter().any(|(m, _)| m.exponent(v) > 0) {
                        return Err(PolyError::UnknownVariable(self.ring.name(v).to_string()));
                    }
                    map.push(usize::MAX);
                }
            }
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u16; target.len()];
            for (i, &x) in m.exponents().iter().enumerate() {
                if x > 0 {
                    e[map[i]] += x;
                }
            }
            (Monomial::from_exponents(e), c.clone())
        });
        Ok(Polynomial::from_terms(target, terms))
    }

    pub fn partial_derivative(&self, v: usize) -> Polynomial {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(v);
            if e == 0 {
                return None;
            }
            let mut exps = m.exponents().to_vec();
            exps[v] -= 1;
            Some((Monomial::from_exponents(exps), c * &Rational::from_int(e as i64)))
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.len());
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &point[i].pow(e as u32);
                }
            }
            total += &t;
        }
        total
    }

    /// Terms sorted descending in `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<&(Monomial, Rational)> {
        let w = self.ring.weights();
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0.exponents(), a.0.exponents(), w));
        v
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<&(Monomial, Rational)> {
        let w = self.ring.weights();
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0.exponents(), b.0.exponents(), w))
    }

    /// Scales so the leading coefficient in `order` is one.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Coprime integer coefficients, leading coefficient (grevlex) positive.
    pub fn primitive(&self) -> Polynomial {
        use num_integer::Integer;
        use num_traits::{Signed, Zero};
        if self.is_zero() {
            return self.clone();
        }
        let den = crate::rational::lcm_of_denominators(self.terms.iter().map(|(_, c)| c));
        let cleared: Vec<num_bigint::BigInt> = self
            .terms
            .iter()
            .map(|(_, c)| c.numer() * (&den / c.denom()))
            .collect();
        let g = cleared.iter().fold(num_bigint::BigInt::zero(), |acc, c| acc.gcd(c));
        let mut scale = Rational::from_bigints(den, g.abs());
        if self.leading_term(MonomialOrder::GrevLex).unwrap().1.is_negative() {
            scale = -scale;
        }
        self.scale(&scale)
    }

    /// Plain-text rendering with terms descending in `order`.
    pub fn to_text(&self, order: MonomialOrder) -> String {
        super::text::format_polynomial(self, order)
    }

    /// Homogeneous component of the given weighted degree.
    pub fn homogeneous_part(&self, degree: u32) -> Polynomial {
        let w = self.ring.weights();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weighted_degree(w) == degree)
                .cloned()
                .collect(),
        }
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(MonomialOrder::GrevLex))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// Operator forms panic on ring mismatch; use the `checked_*` methods to
// handle it as an error.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_poly_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                self.$m(&rhs)
            }
        }
    };
}

forward_poly_owned!(Add, add);
forward_poly_owned!(Sub, sub);
forward_poly_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VariableRegistry;

    fn ring() -> Ring {
        VariableRegistry::new(&["x", "y", "z"]).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn additive_identity_and_difference_of_squares() {
        let r = ring();
        let a = p(&r, "x^2 + 3*y - 1/2");
        assert_eq!(&a + &Polynomial::zero(&r), a);
        let prod = &p(&r, "x + y") * &p(&r, "x - y");
        assert_eq!(prod, p(&r, "x^2 - y^2"));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn primitive_clears_content() {
        let r = ring();
        assert_eq!(p(&r, "-4*x*y + 6*z^2").primitive(), p(&r, "2*x*y - 3*z^2"));
        assert_eq!(p(&r, "1/2*x - 1/3*y").primitive(), p(&r, "3*x - 2*y"));
        assert!(Polynomial::zero(&r).primitive().is_zero());
    }

    #[test]
    fn determinant_square_identity() {
        let r = VariableRegistry::new(&["x11", "x12", "x21", "x22"]).unwrap();
        let lhs = &p(&r, "x11*x22 + x12*x21").pow(2) - &(&p(&r, "4") * &(&p(&r, "x11*x12") * &p(&r, "x21*x22")));
        assert_eq!(lhs, p(&r, "x11*x22 - x12*x21").pow(2));
    }

    #[test]
    fn substitution_parametrizes_cusp() {
        let r = VariableRegistry::new(&["x", "y", "t"]).unwrap();
        let cusp = p(&r, "y^2 - x^3");
        let out = cusp
            .substitute_named(&[("x", p(&r, "t^2")), ("y", p(&r, "t^3"))])
            .unwrap();
        assert!(out.is_zero());
        let f = p(&r, "3*x*y + 2*x - 7");
        let zero = Polynomial::zero(&r);
        let at0 = f
            .substitute_named(&[("x", zero.clone()), ("y", zero)])
            .unwrap();
        assert_eq!(at0, p(&r, "-7"));
    }

    #[test]
    fn derivatives() {
        let r = ring();
        assert_eq!(p(&r, "x^2*y").partial_derivative(0), p(&r, "2*x*y"));
        assert!(p(&r, "5").partial_derivative(1).is_zero());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Polynomial::var(&ring(), 0);
        let other = VariableRegistry::new(&["u"]).unwrap();
        let b = Polynomial::var(&other, 0);
        assert_eq!(a.checked_add(&b), Err(PolyError::RingMismatch));
    }

    #[test]
    fn zero_has_no_degree() {
        let r = ring();
        assert_eq!(Polynomial::zero(&r).degree(), None);
        assert_eq!(p(&r, "x*y^2 + z").degree(), Some(3));
    }
}
