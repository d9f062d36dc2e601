//! Buchberger's algorithm on packed polynomials.
//!
//! Pairs are managed with the Gebauer–Möller update and selected by the
//! sugar strategy, which coincides with the normal strategy on homogeneous
//! input. Every polynomial that enters the basis is fully reduced and monic.

use std::time::Instant;

use crate::rational::Rational;

use super::packed::{Layout, PMono};
use super::GroebnerError;

pub(crate) type Term = (PMono, Rational);

#[derive(Clone, Debug)]
pub(crate) struct PPoly {
    /// descending in the layout order
    pub terms: Vec<Term>,
    pub sugar: u32,
}

impl PPoly {
    pub fn lead(&self) -> &PMono {
        &self.terms[0].0
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.mask == 0
    }
}

#[derive(Clone, Debug, Default)]
pub(crate) struct Limits {
    pub max_pairs: Option<u64>,
    pub max_degree: Option<u32>,
    pub deadline: Option<Instant>,
    pub truncate: Option<u32>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GroebnerStats {
    pub pairs_processed: u64,
    pub zero_reductions: u64,
    pub pairs_truncated: u64,
}

pub(crate) struct Ticker<'a> {
    limits: &'a Limits,
    count: u32,
}

impl<'a> Ticker<'a> {
    pub fn new(limits: &'a Limits) -> Self {
        Ticker { limits, count: 0 }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<(), GroebnerError> {
        self.count = self.count.wrapping_add(1);
        if self.count % 512 == 0 {
            self.check_deadline()?;
        }
        Ok(())
    }

    pub fn check_deadline(&self) -> Result<(), GroebnerError> {
        if let Some(d) = self.limits.deadline {
            if Instant::now() >= d {
                return Err(GroebnerError::ResourceLimit("time limit reached".into()));
            }
        }
        Ok(())
    }
}

pub(crate) fn monic(terms: &mut [Term]) {
    if let Some((_, c)) = terms.first() {
        if !c.is_one() {
            let inv = c.recip();
            for t in terms.iter_mut() {
                t.1 = &t.1 * &inv;
            }
        }
    }
}

/// `a - c * q * g`, all inputs sorted descending.
fn sub_mul(lay: &Layout, a: &[Term], g: &[Term], q: &PMono, c: &Rational) -> Result<Vec<Term>, GroebnerError> {
    let mut out = Vec::with_capacity(a.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    let mut gm = match g.first() {
        Some(t) => Some(lay.mul(q, &t.0)?),
        None => None,
    };
    while let Some(m) = gm {
        if i >= a.len() {
            break;
        }
        match lay.cmp(&a[i].0, &m) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((m, -&(c * &g[j].1)));
                j += 1;
                gm = match g.get(j) {
                    Some(t) => Some(lay.mul(q, &t.0)?),
                    None => None,
                };
            }
            std::cmp::Ordering::Equal => {
                let v = &a[i].1 - &(c * &g[j].1);
                if !v.is_zero() {
                    out.push((m, v));
                }
                i += 1;
                j += 1;
                gm = match g.get(j) {
                    Some(t) => Some(lay.mul(q, &t.0)?),
                    None => None,
                };
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < g.len() {
        out.push((lay.mul(q, &g[j].0)?, -&(c * &g[j].1)));
        j += 1;
    }
    Ok(out)
}

pub(crate) fn mul_term(lay: &Layout, p: &[Term], q: &PMono) -> Result<Vec<Term>, GroebnerError> {
    p.iter()
        .map(|(m, c)| Ok((lay.mul(q, m)?, c.clone())))
        .collect()
}

fn find_reducer<'b>(lay: &Layout, m: &PMono, reducers: &[&'b PPoly]) -> Option<&'b PPoly> {
    reducers.iter().copied().find(|g| lay.divides(g.lead(), m))
}

/// Reduces `p` modulo monic `reducers`. With `full` every term is reduced,
/// otherwise only the leading term is brought into normal position.
pub(crate) fn reduce(
    lay: &Layout,
    p: Vec<Term>,
    reducers: &[&PPoly],
    full: bool,
    ticker: &mut Ticker,
) -> Result<Vec<Term>, GroebnerError> {
    let mut rem: Vec<Term> = Vec::new();
    let mut work = p;
    let mut s = 0;
    while s < work.len() {
        ticker.tick()?;
        let (m, c) = &work[s];
        match find_reducer(lay, m, reducers) {
            Some(g) => {
                let q = lay.quotient(g.lead(), m);
                let c = c.clone();
                work = sub_mul(lay, &work[s + 1..], &g.terms[1..], &q, &c)?;
                s = 0;
            }
            None => {
                if !full {
                    rem.extend_from_slice(&work[s..]);
                    return Ok(rem);
                }
                rem.push(work[s].clone());
                s += 1;
            }
        }
    }
    Ok(rem)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: PMono,
    sugar: u32,
}

struct State<'a> {
    lay: &'a Layout,
    polys: Vec<PPoly>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl<'a> State<'a> {
    fn pair_sugar(&self, i: usize, j: usize, lcm: &PMono) -> u32 {
        let (a, b) = (&self.polys[i], &self.polys[j]);
        (a.sugar + lcm.deg - a.lead().deg).max(b.sugar + lcm.deg - b.lead().deg)
    }

    /// Gebauer–Möller update for the new polynomial at index `h`.
    fn update(&mut self, h: usize) {
        let lay = self.lay;
        let lh = *self.polys[h].lead();
        let mut cands: Vec<(usize, PMono, bool)> = self
            .active
            .iter()
            .map(|&g| {
                let lg = self.polys[g].lead();
                (g, lay.lcm(&lh, lg), lay.coprime(&lh, lg))
            })
            .collect();

        let mut kept: Vec<(usize, PMono, bool)> = Vec::new();
        while let Some((g, l, cop)) = cands.pop() {
            let dominated = !cop
                && (cands.iter().any(|(_, l2, _)| lay.divides(l2, &l))
                    || kept.iter().any(|(_, l2, _)| lay.divides(l2, &l)));
            if !dominated {
                kept.push((g, l, cop));
            }
        }

        self.pairs.retain(|p| {
            !(lay.divides(&lh, &p.lcm)
                && lay.lcm(self.polys[p.i].lead(), &lh) != p.lcm
                && lay.lcm(self.polys[p.j].lead(), &lh) != p.lcm)
        });

        for (g, l, cop) in kept {
            if cop {
                continue;
            }
            let sugar = self.pair_sugar(g, h, &l);
            self.pairs.push(Pair { i: g, j: h, lcm: l, sugar });
        }

        let polys = &self.polys;
        self.active.retain(|&g| !lay.divides(&lh, polys[g].lead()));
        self.active.push(h);
    }

    fn select(&mut self) -> Option<Pair> {
        let lay = self.lay;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| a.lcm.deg.cmp(&b.lcm.deg))
                    .then_with(|| lay.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn reducers(&self) -> Vec<&PPoly> {
        self.active.iter().map(|&g| &self.polys[g]).collect()
    }

    fn spoly(&self, p: &Pair) -> Result<Vec<Term>, GroebnerError> {
        let lay = self.lay;
        let (a, b) = (&self.polys[p.i], &self.polys[p.j]);
        let qa = lay.quotient(a.lead(), &p.lcm);
        let qb = lay.quotient(b.lead(), &p.lcm);
        let left = mul_term(lay, &a.terms[1..], &qa)?;
        sub_mul(lay, &left, &b.terms[1..], &qb, &Rational::one())
    }
}

/// Reduced Gröbner basis of `input` (sorted ascending by leading monomial)
/// plus a flag telling whether degree truncation dropped any pair.
pub(crate) fn groebner(
    lay: &Layout,
    input: Vec<PPoly>,
    limits: &Limits,
    stats: &mut GroebnerStats,
) -> Result<(Vec<PPoly>, bool), GroebnerError> {
    let mut ticker = Ticker::new(limits);
    let mut st = State {
        lay,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };

    let mut input = input;
    input.retain(|p| !p.terms.is_empty());
    input.sort_by(|a, b| lay.cmp(a.lead(), b.lead()).then(a.terms.len().cmp(&b.terms.len())));
    for p in input {
        let r = reduce(lay, p.terms, &st.reducers(), true, &mut ticker)?;
        if let Some(h) = insert(&mut st, r, p.sugar) {
            return Ok((vec![h], false));
        }
    }

    let mut truncated = false;
    while let Some(pair) = st.select() {
        ticker.check_deadline()?;
        if let Some(d) = limits.truncate {
            if pair.lcm.deg > d {
                truncated = true;
                stats.pairs_truncated += 1;
                continue;
            }
        }
        if let Some(d) = limits.max_degree {
            if pair.sugar > d {
                return Err(GroebnerError::ResourceLimit(format!(
                    "pair degree {} exceeds bound {d}",
                    pair.sugar
                )));
            }
        }
        stats.pairs_processed += 1;
        if let Some(cap) = limits.max_pairs {
            if stats.pairs_processed > cap {
                return Err(GroebnerError::ResourceLimit(format!("more than {cap} pairs")));
            }
        }
        let s = st.spoly(&pair)?;
        let r = reduce(lay, s, &st.reducers(), true, &mut ticker)?;
        if r.is_empty() {
            stats.zero_reductions += 1;
            continue;
        }
        if let Some(h) = insert(&mut st, r, pair.sugar) {
            return Ok((vec![h], false));
        }
    }

    // interreduce the tails; leading terms are already minimal
    let mut basis: Vec<PPoly> = st.active.iter().map(|&i| st.polys[i].clone()).collect();
    basis.sort_by(|a, b| lay.cmp(a.lead(), b.lead()));
    let mut out = Vec::with_capacity(basis.len());
    for k in 0..basis.len() {
        let others: Vec<&PPoly> = basis
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, p)| p)
            .collect();
        let p = &basis[k];
        let mut terms = vec![p.terms[0].clone()];
        terms.extend(reduce(lay, p.terms[1..].to_vec(), &others, true, &mut ticker)?);
        monic(&mut terms);
        out.push(PPoly {
            terms,
            sugar: p.sugar,
        });
    }
    Ok((out, truncated))
}

/// Adds a reduced nonzero polynomial; returns the unit basis if it is constant.
fn insert(st: &mut State, mut terms: Vec<Term>, sugar: u32) -> Option<PPoly> {
    if terms.is_empty() {
        return None;
    }
    monic(&mut terms);
    let deg = terms.iter().map(|t| t.0.deg).max().unwrap_or(0);
    let p = PPoly {
        terms,
        sugar: sugar.max(deg),
    };
    if p.is_constant() {
        return Some(p);
    }
    st.polys.push(p);
    let h = st.polys.len() - 1;
    st.update(h);
    None
}
