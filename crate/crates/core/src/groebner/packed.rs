//! Fixed-width monomials for the inner loops.

use std::cmp::Ordering;

use crate::poly::{Monomial, MonomialOrder};

use super::GroebnerError;

pub(crate) const MAX_VARS: usize = 32;

/// Exponent vector with cached weighted degrees and a support bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct PMono {
    pub e: [u8; MAX_VARS],
    /// full weighted degree
    pub deg: u32,
    /// weighted degree of the first block
    pub bdeg: u32,
    pub mask: u32,
}

impl std::fmt::Debug for PMono {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", &self.e[..])
    }
}

/// Variable count, weights and monomial order of one computation.
#[derive(Clone, Debug)]
pub(crate) struct Layout {
    pub nvars: usize,
    pub weights: Vec<u32>,
    pub order: MonomialOrder,
    /// size of the first block; 0 means a single block
    pub block: usize,
}

impl Layout {
    pub fn new(weights: &[u32], order: MonomialOrder) -> Result<Self, GroebnerError> {
        if weights.len() > MAX_VARS {
            return Err(GroebnerError::TooManyVariables(weights.len()));
        }
        let block = match order {
            MonomialOrder::Block(k) => k.min(weights.len()),
            _ => 0,
        };
        Ok(Layout {
            nvars: weights.len(),
            weights: weights.to_vec(),
            order,
            block,
        })
    }

    fn finish(&self, e: [u8; MAX_VARS]) -> PMono {
        let mut deg = 0;
        let mut bdeg = 0;
        let mut mask = 0u32;
        for i in 0..self.nvars {
            if e[i] > 0 {
                let d = e[i] as u32 * self.weights[i];
                deg += d;
                if i < self.block {
                    bdeg += d;
                }
                mask |= 1 << i;
            }
        }
        PMono { e, deg, bdeg, mask }
    }

    pub fn pack(&self, m: &Monomial) -> Result<PMono, GroebnerError> {
        let mut e = [0u8; MAX_VARS];
        for (i, &x) in m.exponents().iter().enumerate() {
            e[i] = u8::try_from(x).map_err(|_| GroebnerError::ExponentOverflow)?;
        }
        Ok(self.finish(e))
    }

    pub fn unpack(&self, m: &PMono) -> Monomial {
        Monomial::from_exponents(m.e[..self.nvars].iter().map(|&x| x as u16).collect())
    }

    pub fn mul(&self, a: &PMono, b: &PMono) -> Result<PMono, GroebnerError> {
        let mut e = [0u8; MAX_VARS];
        for i in 0..self.nvars {
            e[i] = a.e[i]
                .checked_add(b.e[i])
                .ok_or(GroebnerError::ExponentOverflow)?;
        }
        Ok(PMono {
            e,
            deg: a.deg + b.deg,
            bdeg: a.bdeg + b.bdeg,
            mask: a.mask | b.mask,
        })
    }

    #[inline]
    pub fn divides(&self, a: &PMono, b: &PMono) -> bool {
        if a.mask & !b.mask != 0 || a.deg > b.deg {
            return false;
        }
        (0..self.nvars).all(|i| a.e[i] <= b.e[i])
    }

    /// `b / a`, assuming `a | b`.
    pub fn quotient(&self, a: &PMono, b: &PMono) -> PMono {
        let mut e = [0u8; MAX_VARS];
        for i in 0..self.nvars {
            e[i] = b.e[i] - a.e[i];
        }
        self.finish(e)
    }

    pub fn lcm(&self, a: &PMono, b: &PMono) -> PMono {
        let mut e = [0u8; MAX_VARS];
        for i in 0..self.nvars {
            e[i] = a.e[i].max(b.e[i]);
        }
        self.finish(e)
    }

    pub fn coprime(&self, a: &PMono, b: &PMono) -> bool {
        a.mask & b.mask == 0
    }

    #[inline]
    pub fn cmp(&self, a: &PMono, b: &PMono) -> Ordering {
        match self.order {
            MonomialOrder::Lex => a.e.cmp(&b.e),
            _ => a
                .bdeg
                .cmp(&b.bdeg)
                .then_with(|| revlex(&a.e[..self.block], &b.e[..self.block]))
                .then_with(|| (a.deg - a.bdeg).cmp(&(b.deg - b.bdeg)))
                .then_with(|| revlex(&a.e[self.block..self.nvars], &b.e[self.block..self.nvars])),
        }
    }
}

#[inline]
fn revlex(a: &[u8], b: &[u8]) -> Ordering {
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}
