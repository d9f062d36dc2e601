//! Ideals, reduced Gröbner bases, normal forms and membership.

mod engine;
mod packed;

use std::cell::RefCell;
use std::time::{Duration, Instant};

use crate::poly::{same_ring, Monomial, MonomialOrder, PolyError, Polynomial, Ring};

pub use engine::GroebnerStats;
use engine::{Limits, PPoly, Ticker};
use packed::Layout;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{0} variables exceed the supported maximum of 32")]
    TooManyVariables(usize),
    #[error("exponent exceeds 255")]
    ExponentOverflow,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("degree truncation requires weighted-homogeneous generators")]
    NotHomogeneous,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl GroebnerError {
    /// Resource exhaustion, as opposed to a mathematical or input error.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, GroebnerError::ResourceLimit(_))
    }
}

/// Caps on a Buchberger run. `None` means unlimited.
///
/// `truncate_degree` is different in kind: for weighted-homogeneous input it
/// yields a basis that is correct up to that degree, which is all that graded
/// dimension counts need.
#[derive(Clone, Debug, Default)]
pub struct GroebnerConfig {
    pub max_pairs: Option<u64>,
    pub max_degree: Option<u32>,
    pub deadline: Option<Instant>,
    pub truncate_degree: Option<u32>,
}

impl GroebnerConfig {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_timeout(mut self, t: Duration) -> Self {
        self.deadline = Some(Instant::now() + t);
        self
    }

    pub fn truncated(mut self, degree: u32) -> Self {
        self.truncate_degree = Some(degree);
        self
    }
}

thread_local! {
    static AMBIENT: RefCell<GroebnerConfig> = RefCell::new(GroebnerConfig::default());
}

/// Runs `f` with resource caps applied to every Gröbner computation started
/// on this thread. Explicit per-call caps are combined with these (the
/// tighter one wins); truncation is never inherited.
pub fn with_limits<R>(cfg: GroebnerConfig, f: impl FnOnce() -> R) -> R {
    let prev = AMBIENT.with(|a| a.replace(cfg));
    struct Restore(Option<GroebnerConfig>);
    impl Drop for Restore {
        fn drop(&mut self) {
            let prev = self.0.take().unwrap();
            AMBIENT.with(|a| *a.borrow_mut() = prev);
        }
    }
    let _guard = Restore(Some(prev));
    f()
}

fn effective_limits(cfg: &GroebnerConfig) -> Limits {
    let amb = AMBIENT.with(|a| a.borrow().clone());
    fn tighter<T: Ord + Copy>(a: Option<T>, b: Option<T>) -> Option<T> {
        match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, None) => x,
            (None, y) => y,
        }
    }
    Limits {
        max_pairs: tighter(cfg.max_pairs, amb.max_pairs),
        max_degree: tighter(cfg.max_degree, amb.max_degree),
        deadline: tighter(cfg.deadline, amb.deadline),
        truncate: cfg.truncate_degree,
    }
}

/// Finite list of generators in a common ring. Zero generators are dropped.
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Self, GroebnerError> {
        if generators.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(PolyError::RingMismatch.into());
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
        }
    }

    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Self, GroebnerError> {
        let polys = gens
            .iter()
            .map(|s| Polynomial::parse(ring, s))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(ring, polys)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, GroebnerError> {
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, g)
    }

    pub fn with_generators(&self, extra: &[Polynomial]) -> Result<Ideal, GroebnerError> {
        let mut g = self.generators.clone();
        g.extend(extra.iter().cloned());
        Ideal::new(&self.ring, g)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal, GroebnerError> {
        let mut g = Vec::with_capacity(self.len() * other.len());
        for a in &self.generators {
            for b in &other.generators {
                g.push(a.checked_mul(b)?);
            }
        }
        Ideal::new(&self.ring, g)
    }

    /// Moves every generator into `target` by variable name.
    pub fn relabel_by_name(&self, target: &Ring) -> Result<Ideal, GroebnerError> {
        let g = self
            .generators
            .iter()
            .map(|p| p.relabel_by_name(target))
            .collect::<Result<Vec<_>, _>>()?;
        Ideal::new(target, g)
    }

    /// Every generator weighted-homogeneous for the ring weights.
    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    /// One polynomial per line.
    pub fn to_text(&self, order: MonomialOrder) -> String {
        let mut s = String::new();
        for g in &self.generators {
            s.push_str(&g.to_text(order));
            s.push('\n');
        }
        s
    }
}

/// A completed (possibly degree-truncated) Gröbner basis.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ideal: Ideal,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    reduced: bool,
    truncated_at: Option<u32>,
    stats: GroebnerStats,
    layout: Layout,
    packed: Vec<PPoly>,
}

impl GroebnerBasis {
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn ring(&self) -> &Ring {
        &self.ideal.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Basis elements sorted ascending by leading monomial.
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn reduced(&self) -> bool {
        self.reduced
    }

    /// `Some(d)` if pairs above degree `d` were skipped.
    pub fn truncated_at(&self) -> Option<u32> {
        self.truncated_at
    }

    pub fn stats(&self) -> GroebnerStats {
        self.stats
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.packed.iter().map(|p| self.layout.unpack(p.lead())).collect()
    }

    /// Remainder of full multivariate division by the basis.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial, GroebnerError> {
        if !same_ring(p.ring(), self.ring()) {
            return Err(PolyError::RingMismatch.into());
        }
        let limits = effective_limits(&GroebnerConfig::default());
        let mut ticker = Ticker::new(&limits);
        let terms = pack_terms(&self.layout, p)?;
        let reducers: Vec<&PPoly> = self.packed.iter().collect();
        let r = engine::reduce(&self.layout, terms, &reducers, true, &mut ticker)?;
        Ok(unpack_poly(&self.layout, self.ring(), r))
    }

    /// Division trying the basis elements in the given priority order.
    #[cfg(test)]
    pub(crate) fn normal_form_with_priority(&self, p: &Polynomial, perm: &[usize]) -> Polynomial {
        let limits = Limits::default();
        let mut ticker = Ticker::new(&limits);
        let terms = pack_terms(&self.layout, p).unwrap();
        let reducers: Vec<&PPoly> = perm.iter().map(|&i| &self.packed[i]).collect();
        let r = engine::reduce(&self.layout, terms, &reducers, true, &mut ticker).unwrap();
        unpack_poly(&self.layout, self.ring(), r)
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool, GroebnerError> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Checks Buchberger's criterion directly: every S-polynomial of basis
    /// pairs reduces to zero. Meant for tests; quadratic in the basis size.
    pub fn satisfies_buchberger_criterion(&self) -> Result<bool, GroebnerError> {
        let lay = &self.layout;
        let limits = Limits::default();
        let mut ticker = Ticker::new(&limits);
        let reducers: Vec<&PPoly> = self.packed.iter().collect();
        for i in 0..self.packed.len() {
            for j in i + 1..self.packed.len() {
                let (a, b) = (&self.packed[i], &self.packed[j]);
                let l = lay.lcm(a.lead(), b.lead());
                let left = engine::mul_term(lay, &a.terms, &lay.quotient(a.lead(), &l))?;
                let right = engine::mul_term(lay, &b.terms, &lay.quotient(b.lead(), &l))?;
                let s = sub_sorted(lay, left, right);
                if !engine::reduce(lay, s, &reducers, false, &mut ticker)?.is_empty() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn sub_sorted(lay: &Layout, a: Vec<engine::Term>, b: Vec<engine::Term>) -> Vec<engine::Term> {
    let mut all: Vec<engine::Term> = a;
    for (m, c) in b {
        match all.iter_mut().find(|t| t.0 == m) {
            Some(t) => t.1 = &t.1 - &c,
            None => all.push((m, -c)),
        }
    }
    all.retain(|t| !t.1.is_zero());
    all.sort_by(|x, y| lay.cmp(&y.0, &x.0));
    all
}

fn pack_terms(lay: &Layout, p: &Polynomial) -> Result<Vec<engine::Term>, GroebnerError> {
    let mut terms = p
        .terms()
        .iter()
        .map(|(m, c)| Ok((lay.pack(m)?, c.clone())))
        .collect::<Result<Vec<_>, GroebnerError>>()?;
    terms.sort_by(|a, b| lay.cmp(&b.0, &a.0));
    Ok(terms)
}

fn unpack_poly(lay: &Layout, ring: &Ring, terms: Vec<engine::Term>) -> Polynomial {
    Polynomial::from_terms(ring, terms.into_iter().map(|(m, c)| (lay.unpack(&m), c)))
}

/// Reduced Gröbner basis with the ambient resource caps.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
    buchberger_with(ideal, order, &GroebnerConfig::default())
}

pub fn buchberger_with(
    ideal: &Ideal,
    order: MonomialOrder,
    cfg: &GroebnerConfig,
) -> Result<GroebnerBasis, GroebnerError> {
    let ring = ideal.ring();
    let layout = Layout::new(ring.weights(), order)?;
    let limits = effective_limits(cfg);
    if limits.truncate.is_some() && !ideal.is_homogeneous() {
        return Err(GroebnerError::NotHomogeneous);
    }
    let input = ideal
        .generators
        .iter()
        .map(|g| {
            Ok(PPoly {
                terms: pack_terms(&layout, g)?,
                sugar: g.weighted_degree().unwrap_or(0),
            })
        })
        .collect::<Result<Vec<_>, GroebnerError>>()?;
    let mut stats = GroebnerStats::default();
    let (packed, truncated) = engine::groebner(&layout, input, &limits, &mut stats)?;
    let basis = packed
        .iter()
        .map(|p| unpack_poly(&layout, ring, p.terms.clone()))
        .collect();
    Ok(GroebnerBasis {
        ideal: ideal.clone(),
        order,
        basis,
        reduced: true,
        truncated_at: if truncated { limits.truncate } else { None },
        stats,
        layout,
        packed,
    })
}

pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial, GroebnerError> {
    gb.normal_form(p)
}

/// `p ∈ I`, via a grevlex basis.
pub fn ideal_membership(p: &Polynomial, ideal: &Ideal) -> Result<bool, GroebnerError> {
    if !same_ring(p.ring(), ideal.ring()) {
        return Err(PolyError::RingMismatch.into());
    }
    if p.is_zero() {
        return Ok(true);
    }
    buchberger(ideal, MonomialOrder::GrevLex)?.contains(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VariableRegistry;
    use crate::rational::Rational;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn ring(names: &[&str]) -> Ring {
        VariableRegistry::new(names).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = ring(&["x", "y"]);
        let gb = buchberger(&Ideal::parse(&r, &["x^2", "x*y"]).unwrap(), MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb.basis(), &[p(&r, "x*y"), p(&r, "x^2")]);
    }

    #[test]
    fn twisted_cubic_lex_contains_implicit_equation() {
        let r = ring(&["x", "y", "z"]);
        let i = Ideal::parse(&r, &["y - x^2", "z - x^3"]).unwrap();
        let gb = buchberger(&i, MonomialOrder::Lex).unwrap();
        // by hand: y^3 = x^6 = z^2, and x*y = x^3 = z
        let target = p(&r, "z^2 - y^3");
        assert!(gb.basis().iter().any(|g| *g == target || *g == -&target));
        assert!(gb.contains(&p(&r, "x*y - z")).unwrap());
        assert!(gb.satisfies_buchberger_criterion().unwrap());
    }

    #[test]
    fn unit_ideal() {
        let r = ring(&["x", "y"]);
        let gb = buchberger(&Ideal::parse(&r, &["1"]).unwrap(), MonomialOrder::GrevLex).unwrap();
        assert!(gb.is_unit());
        assert_eq!(gb.basis(), &[Polynomial::one(&r)]);
        let gb = buchberger(&Ideal::parse(&r, &["x", "x + 1"]).unwrap(), MonomialOrder::GrevLex).unwrap();
        assert!(gb.is_unit());
    }

    #[test]
    fn membership_basics() {
        let r = ring(&["x"]);
        let i = Ideal::parse(&r, &["x"]).unwrap();
        let gb = buchberger(&i, MonomialOrder::GrevLex).unwrap();
        assert!(gb.normal_form(&p(&r, "x")).unwrap().is_zero());
        assert!(!ideal_membership(&p(&r, "1"), &i).unwrap());
    }

    #[test]
    fn non_radical_witness_rank_one_momentum_ideal() {
        let r = ring(&["x11", "x12", "x21", "x22"]);
        let i = Ideal::parse(&r, &["x11*x12", "x11*x22 + x12*x21", "x21*x22"]).unwrap();
        let gb = buchberger(&i, MonomialOrder::GrevLex).unwrap();
        let det = p(&r, "x11*x22 - x12*x21");
        assert!(!gb.contains(&det).unwrap());
        assert!(gb.contains(&det.pow(2)).unwrap());
    }

    #[test]
    fn caps_are_reported_as_resource_limits() {
        let r = ring(&["x", "y", "z"]);
        let i = Ideal::parse(&r, &["x^3 - y*z^2 + 1", "y^3 - x*z + 2", "z^3 - x^2*y"]).unwrap();
        let cfg = GroebnerConfig {
            max_pairs: Some(1),
            ..Default::default()
        };
        let err = buchberger_with(&i, MonomialOrder::GrevLex, &cfg).unwrap_err();
        assert!(err.is_resource_limit());
        let err = with_limits(
            GroebnerConfig {
                max_degree: Some(2),
                ..Default::default()
            },
            || buchberger(&i, MonomialOrder::GrevLex),
        )
        .unwrap_err();
        assert!(err.is_resource_limit());
        // the ambient cap does not leak out of the scope
        assert!(buchberger(&i, MonomialOrder::GrevLex).is_ok());
    }

    #[test]
    fn truncation_needs_homogeneous_input() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x^2 - y"]).unwrap();
        let cfg = GroebnerConfig::default().truncated(3);
        assert_eq!(
            buchberger_with(&i, MonomialOrder::GrevLex, &cfg).unwrap_err(),
            GroebnerError::NotHomogeneous
        );
    }

    fn random_ideal(seed: u64, r: &Ring) -> Ideal {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = r.len();
        let gens = (0..rng.gen_range(1..4))
            .map(|_| {
                let terms = (0..rng.gen_range(1..4)).map(|_| {
                    let e: Vec<u16> = (0..n).map(|_| rng.gen_range(0..3)).collect();
                    (Monomial::from_exponents(e), Rational::from_int(rng.gen_range(-3..4)))
                });
                Polynomial::from_terms(r, terms)
            })
            .collect();
        Ideal::new(r, gens).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn basis_properties(seed in 0u64..10_000) {
            let r = ring(&["x", "y", "z"]);
            let i = random_ideal(seed, &r);
            let cfg = GroebnerConfig { max_pairs: Some(400), ..Default::default() };
            let gb = match buchberger_with(&i, MonomialOrder::GrevLex, &cfg) {
                Ok(gb) => gb,
                Err(e) => { prop_assert!(e.is_resource_limit()); return Ok(()); }
            };
            // containment soundness
            for g in i.generators() {
                prop_assert!(gb.contains(g).unwrap());
            }
            prop_assert!(gb.satisfies_buchberger_criterion().unwrap());
            // idempotence
            let again = buchberger(&Ideal::new(&r, gb.basis().to_vec()).unwrap(), MonomialOrder::GrevLex).unwrap();
            prop_assert_eq!(again.basis(), gb.basis());
            // membership agrees across orders
            if let Ok(lex) = buchberger_with(&i, MonomialOrder::Lex, &cfg) {
                let first = i.generators().first().cloned().unwrap_or_else(|| p(&r, "y^2"));
                let probe = &(&first * &p(&r, "x - 2*y")) + &p(&r, "z");
                prop_assert_eq!(gb.contains(&probe).unwrap(), lex.contains(&probe).unwrap());
                for g in lex.basis() {
                    prop_assert!(gb.contains(g).unwrap());
                }
            }
        }

        // confluence: the remainder does not depend on which divisor is tried first
        #[test]
        fn normal_form_is_path_independent(seed in 0u64..10_000, perm_seed in 0u64..100) {
            let r = ring(&["x", "y", "z"]);
            let i = random_ideal(seed, &r);
            let cfg = GroebnerConfig { max_pairs: Some(400), ..Default::default() };
            let Ok(gb) = buchberger_with(&i, MonomialOrder::GrevLex, &cfg) else { return Ok(()); };
            let mut perm: Vec<usize> = (0..gb.basis().len()).collect();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(perm_seed);
            use rand::seq::SliceRandom;
            perm.shuffle(&mut rng);
            let probe = p(&r, "x^3*y - 2*z^2*y + 7*x - 1");
            prop_assert_eq!(gb.normal_form(&probe).unwrap(), gb.normal_form_with_priority(&probe, &perm));
        }
    }
}
