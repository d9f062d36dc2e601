use crate::groebner::{buchberger, GroebnerBasis, GroebnerError, Ideal};
use crate::poly::{Monomial, MonomialOrder, UniPoly, UniRationalFunction};
use crate::rational::Rational;

/// Weighted Hilbert series `numerator / Π(1 - t^{w_i})` of `S/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: UniPoly,
    weights: Vec<u32>,
}

impl HilbertSeries {
    pub fn numerator(&self) -> &UniPoly {
        &self.numerator
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn denominator(&self) -> UniPoly {
        self.weights
            .iter()
            .fold(UniPoly::one(), |acc, &w| &acc * &UniPoly::one_minus_t_pow(w as usize))
    }

    pub fn rational_function(&self) -> UniRationalFunction {
        UniRationalFunction::new(self.numerator.clone(), self.denominator()).expect("nonzero denominator")
    }

    /// `dim (S/I)_d` for `d = 0..=upto`.
    pub fn graded_dimensions(&self, upto: usize) -> Vec<u64> {
        let f = UniRationalFunction::new(self.numerator.clone(), self.denominator()).expect("nonzero denominator");
        f.series_expand(upto)
            .expect("denominator is 1 at t = 0")
            .iter()
            .map(|c| {
                assert!(c.is_integer() && !c.is_negative(), "graded dimension {c}");
                c.to_string().parse().expect("dimension fits in u64")
            })
            .collect()
    }
}

/// Hilbert series from the leading monomials of a Gröbner basis.
pub fn hilbert_series_of_monomials(monomials: &[Monomial], weights: &[u32]) -> HilbertSeries {
    let gens: Vec<Vec<u16>> = monomials.iter().map(|m| m.exponents().to_vec()).collect();
    HilbertSeries {
        numerator: numerator(gens, weights),
        weights: weights.to_vec(),
    }
}

pub fn hilbert_series_of_basis(gb: &GroebnerBasis) -> HilbertSeries {
    hilbert_series_of_monomials(&gb.leading_monomials(), gb.ring().weights())
}

/// Hilbert series of `S/I` for generators homogeneous in the ring weights.
pub fn weighted_hilbert_series(ideal: &Ideal) -> Result<HilbertSeries, GroebnerError> {
    if !ideal.is_homogeneous() {
        return Err(GroebnerError::NotHomogeneous);
    }
    let gb = buchberger(ideal, MonomialOrder::GrevLex)?;
    Ok(hilbert_series_of_basis(&gb))
}

fn weighted_deg(e: &[u16], w: &[u32]) -> usize {
    e.iter().zip(w).map(|(&a, &b)| a as usize * b as usize).sum()
}

fn minimalize(mut gens: Vec<Vec<u16>>) -> Vec<Vec<u16>> {
    gens.sort_by_key(|g| g.iter().map(|&e| e as u32).sum::<u32>());
    gens.dedup();
    let mut out: Vec<Vec<u16>> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.iter().zip(&g).all(|(a, b)| a <= b)) {
            out.push(g);
        }
    }
    out
}

/// Numerator by pivoting on a variable power:
/// `N(I) = N(I + p) + t^{deg p} N(I : p)`.
fn numerator(gens: Vec<Vec<u16>>, w: &[u32]) -> UniPoly {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return UniPoly::one();
    }
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return UniPoly::zero();
    }
    let n = w.len();
    let counts: Vec<usize> = (0..n).map(|v| gens.iter().filter(|g| g[v] > 0).count()).collect();
    let (v, &c) = counts.iter().enumerate().max_by_key(|(i, &c)| (c, std::cmp::Reverse(*i))).unwrap();
    if c <= 1 {
        // pairwise coprime
        return gens.iter().fold(UniPoly::one(), |acc, g| {
            &acc * &UniPoly::one_minus_t_pow(weighted_deg(g, w))
        });
    }
    let e = gens.iter().filter(|g| g[v] > 0).map(|g| g[v]).min().unwrap();
    let mut p = vec![0u16; n];
    p[v] = e;

    let mut plus: Vec<Vec<u16>> = gens.iter().filter(|g| g[v] < e).cloned().collect();
    plus.push(p);
    let colon: Vec<Vec<u16>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[v] = h[v].saturating_sub(e);
            h
        })
        .collect();
    let a = numerator(plus, w);
    let b = numerator(colon, w);
    &a + &(&UniPoly::term(Rational::one(), e as usize * w[v] as usize) * &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VariableRegistry;
    use proptest::prelude::*;

    #[test]
    fn principal_square_in_one_variable() {
        let r = VariableRegistry::new(&["t"]).unwrap();
        let hs = weighted_hilbert_series(&Ideal::parse(&r, &["t^2"]).unwrap()).unwrap();
        let f = hs.rational_function();
        assert_eq!(f.numerator(), &UniPoly::from_ints(&[1, 1]));
        assert_eq!(f.denominator(), &UniPoly::one());
    }

    #[test]
    fn zero_ideal_product_formula() {
        let r = VariableRegistry::with_weights(&["a", "b", "c"], &[1, 2, 3]).unwrap();
        let hs = weighted_hilbert_series(&Ideal::zero(&r)).unwrap();
        assert_eq!(hs.numerator(), &UniPoly::one());
        // partitions of d into parts 1, 2, 3
        let brute: Vec<u64> = (0..12u64)
            .map(|d| {
                let mut c = 0;
                for b in 0..=d / 2 {
                    for k in 0..=d / 3 {
                        if 2 * b + 3 * k <= d {
                            c += 1;
                        }
                    }
                }
                c
            })
            .collect();
        assert_eq!(hs.graded_dimensions(11), brute);
        let plain = VariableRegistry::new(&["x", "y"]).unwrap();
        let hs = weighted_hilbert_series(&Ideal::zero(&plain)).unwrap();
        assert_eq!(hs.graded_dimensions(4), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn rejects_inhomogeneous() {
        let r = VariableRegistry::new(&["x"]).unwrap();
        assert!(weighted_hilbert_series(&Ideal::parse(&r, &["x^2 - x"]).unwrap()).is_err());
    }

    proptest! {
        // the pivot recursion against direct counting of standard monomials
        #[test]
        fn numerator_matches_standard_monomial_count(
            gens in proptest::collection::vec(proptest::collection::vec(0u16..3, 3), 1..5),
            w in proptest::collection::vec(1u32..3, 3),
        ) {
            let monos: Vec<Monomial> = gens.iter().map(|g| Monomial::from_exponents(g.clone())).collect();
            let hs = hilbert_series_of_monomials(&monos, &w);
            let upto = 7usize;
            let mut counts = vec![0u64; upto + 1];
            for a in 0..=upto as u16 {
                for b in 0..=upto as u16 {
                    for c in 0..=upto as u16 {
                        let e = [a, b, c];
                        let d = weighted_deg(&e, &w);
                        if d > upto { continue; }
                        if gens.iter().any(|g| g.iter().zip(&e).all(|(x, y)| x <= y)) { continue; }
                        counts[d] += 1;
                    }
                }
            }
            prop_assert_eq!(hs.graded_dimensions(upto), counts);
        }
    }
}
