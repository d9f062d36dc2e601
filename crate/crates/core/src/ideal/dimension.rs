use std::fmt;

use crate::groebner::{buchberger, GroebnerBasis, GroebnerError, Ideal};
use crate::poly::{Monomial, MonomialOrder};

/// Krull dimension of `S/I`; `Empty` for the unit ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dimension {
    Empty,
    Dim(usize),
}

impl Dimension {
    pub fn value(self) -> Option<usize> {
        match self {
            Dimension::Empty => None,
            Dimension::Dim(d) => Some(d),
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Empty => f.write_str("empty"),
            Dimension::Dim(d) => write!(f, "{d}"),
        }
    }
}

/// Largest set of variables containing the support of no leading monomial.
pub fn dimension_of_leading_monomials(monomials: &[Monomial], nvars: usize) -> Dimension {
    if monomials.iter().any(|m| m.is_one()) {
        return Dimension::Empty;
    }
    let mut sets: Vec<u64> = monomials
        .iter()
        .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
        .collect();
    sets.sort_by_key(|s| s.count_ones());
    sets.dedup();
    let mut minimal: Vec<u64> = Vec::new();
    for s in sets {
        if !minimal.iter().any(|t| t & s == *t) {
            minimal.push(s);
        }
    }
    // complement of an independent set is a hitting set of the supports
    let mut best = nvars;
    min_hitting_set(&minimal, 0, 0, &mut best);
    Dimension::Dim(nvars - best)
}

fn min_hitting_set(sets: &[u64], chosen: u64, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    let unhit = sets.iter().filter(|&&s| s & chosen == 0).min_by_key(|s| s.count_ones());
    match unhit {
        None => *best = size,
        Some(&s) => {
            if size + 1 >= *best {
                return;
            }
            let mut bits = s;
            while bits != 0 {
                let v = bits.trailing_zeros();
                bits &= bits - 1;
                min_hitting_set(sets, chosen | (1 << v), size + 1, best);
            }
        }
    }
}

pub fn dimension_of_basis(gb: &GroebnerBasis) -> Dimension {
    dimension_of_leading_monomials(&gb.leading_monomials(), gb.ring().len())
}

/// Dimension of the affine variety of `I`, via a grevlex basis.
pub fn krull_dimension(ideal: &Ideal) -> Result<Dimension, GroebnerError> {
    let gb = buchberger(ideal, MonomialOrder::GrevLex)?;
    Ok(dimension_of_basis(&gb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VariableRegistry;
    use proptest::prelude::*;

    #[test]
    fn union_of_axes_has_dimension_one() {
        let r = VariableRegistry::new(&["x", "y"]).unwrap();
        assert_eq!(krull_dimension(&Ideal::parse(&r, &["x*y"]).unwrap()).unwrap(), Dimension::Dim(1));
        assert_eq!(krull_dimension(&Ideal::zero(&r)).unwrap(), Dimension::Dim(2));
        assert_eq!(krull_dimension(&Ideal::parse(&r, &["x", "x - 1"]).unwrap()).unwrap(), Dimension::Empty);
    }

    #[test]
    fn twisted_cubic_is_a_curve() {
        let r = VariableRegistry::new(&["x", "y", "z"]).unwrap();
        let i = Ideal::parse(&r, &["y - x^2", "z - x^3"]).unwrap();
        assert_eq!(krull_dimension(&i).unwrap(), Dimension::Dim(1));
    }

    proptest! {
        // brute force over all variable subsets
        #[test]
        fn hitting_set_matches_brute_force(
            gens in proptest::collection::vec(proptest::collection::vec(0u16..2, 6), 1..7)
        ) {
            let monos: Vec<Monomial> = gens.iter().map(|g| Monomial::from_exponents(g.clone())).collect();
            let got = dimension_of_leading_monomials(&monos, 6);
            if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
                prop_assert_eq!(got, Dimension::Empty);
                return Ok(());
            }
            let mut best = 0;
            for s in 0u32..64 {
                let indep = gens.iter().all(|g| g.iter().enumerate().any(|(i, &e)| e > 0 && s & (1 << i) == 0));
                if indep { best = best.max(s.count_ones() as usize); }
            }
            prop_assert_eq!(got, Dimension::Dim(best));
        }
    }
}
