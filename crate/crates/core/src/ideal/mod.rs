//! Higher-level ideal queries built on Gröbner bases.

mod dimension;
mod hilbert;

pub use dimension::{dimension_of_basis, dimension_of_leading_monomials, krull_dimension, Dimension};
pub use hilbert::{hilbert_series_of_basis, hilbert_series_of_monomials, weighted_hilbert_series, HilbertSeries};

use std::collections::HashSet;

use crate::groebner::{buchberger, buchberger_with, GroebnerBasis, GroebnerConfig, GroebnerError, Ideal};
use crate::matrix::PolyMatrix;
use crate::poly::{MonomialOrder, Polynomial, Ring, VariableRegistry};

/// A name not used in `ring`, derived from `base`.
pub fn fresh_name(ring: &Ring, base: &str) -> String {
    if ring.index_of(base).is_none() {
        return base.to_string();
    }
    (1..)
        .map(|k| format!("{base}_{k}"))
        .find(|n| ring.index_of(n).is_none())
        .unwrap()
}

/// Every generator of `small` lies in `big`.
pub fn ideal_contains(big: &Ideal, small: &Ideal) -> Result<bool, GroebnerError> {
    let gb = buchberger(big, MonomialOrder::GrevLex)?;
    for g in small.generators() {
        if !gb.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn ideal_equality(a: &Ideal, b: &Ideal) -> Result<bool, GroebnerError> {
    Ok(ideal_contains(a, b)? && ideal_contains(b, a)?)
}

/// Decides membership in the radical of a fixed ideal.
///
/// Small powers are tried against a basis of `I` first; otherwise the
/// auxiliary-variable test `1 ∈ I + (1 - w p)` decides.
pub struct RadicalTester {
    gb: GroebnerBasis,
}

impl RadicalTester {
    pub fn new(ideal: &Ideal) -> Result<Self, GroebnerError> {
        Ok(RadicalTester {
            gb: buchberger(ideal, MonomialOrder::GrevLex)?,
        })
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool, GroebnerError> {
        if p.is_zero() || self.gb.is_unit() {
            return Ok(true);
        }
        let mut q = p.clone();
        for _ in 0..3 {
            if self.gb.contains(&q)? {
                return Ok(true);
            }
            q = &q * p;
        }
        let ring = self.gb.ring();
        let w = fresh_name(ring, "w");
        let mut names = vec![w.clone()];
        names.extend(ring.names().iter().cloned());
        let mut weights = vec![1];
        weights.extend_from_slice(ring.weights());
        let ext = VariableRegistry::with_weights(&names, &weights)?;
        let mut gens = Vec::with_capacity(self.gb.basis().len() + 1);
        for g in self.gb.basis() {
            gens.push(g.relabel_by_name(&ext)?);
        }
        let wp = &Polynomial::var(&ext, 0) * &p.relabel_by_name(&ext)?;
        gens.push(&Polynomial::one(&ext) - &wp);
        let gb = buchberger(&Ideal::new(&ext, gens)?, MonomialOrder::GrevLex)?;
        Ok(gb.is_unit())
    }
}

pub fn radical_membership(p: &Polynomial, ideal: &Ideal) -> Result<bool, GroebnerError> {
    RadicalTester::new(ideal)?.contains(p)
}

/// Every generator of `small` lies in the radical of `big`, i.e.
/// `V(big) ⊆ V(small)`.
pub fn radical_contains(big: &Ideal, small: &Ideal) -> Result<bool, GroebnerError> {
    let t = RadicalTester::new(big)?;
    for g in small.generators() {
        if !t.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Equality of radicals (equality of varieties).
pub fn radical_equal(a: &Ideal, b: &Ideal) -> Result<bool, GroebnerError> {
    Ok(radical_contains(a, b)? && radical_contains(b, a)?)
}

/// Ring with the variables `first` followed by the rest, keeping weights.
fn reorder_ring(ring: &Ring, first: &[usize]) -> Result<(Ring, usize), GroebnerError> {
    let set: HashSet<usize> = first.iter().copied().collect();
    let order: Vec<usize> = first
        .iter()
        .copied()
        .chain((0..ring.len()).filter(|i| !set.contains(i)))
        .collect();
    let names: Vec<&str> = order.iter().map(|&i| ring.name(i)).collect();
    let weights: Vec<u32> = order.iter().map(|&i| ring.weight(i)).collect();
    Ok((VariableRegistry::with_weights(&names, &weights)?, first.len()))
}

fn free_of_first(p: &Polynomial, k: usize) -> bool {
    p.terms().iter().all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0))
}

/// `I ∩ k[keep]`, returned in the original ring.
pub fn elimination_ideal(ideal: &Ideal, keep: &[usize]) -> Result<Ideal, GroebnerError> {
    elimination_ideal_with(ideal, keep, &GroebnerConfig::default())
}

pub fn elimination_ideal_with(ideal: &Ideal, keep: &[usize], cfg: &GroebnerConfig) -> Result<Ideal, GroebnerError> {
    let ring = ideal.ring();
    if let Some(&bad) = keep.iter().find(|&&i| i >= ring.len()) {
        return Err(GroebnerError::InvalidInput(format!("variable index {bad}")));
    }
    let keep: HashSet<usize> = keep.iter().copied().collect();
    let elim: Vec<usize> = (0..ring.len()).filter(|i| !keep.contains(i)).collect();
    let (joined, k) = reorder_ring(ring, &elim)?;
    let gb = buchberger_with(&ideal.relabel_by_name(&joined)?, MonomialOrder::Block(k), cfg)?;
    let gens = gb
        .basis()
        .iter()
        .filter(|g| free_of_first(g, k))
        .map(|g| g.relabel_by_name(ring))
        .collect::<Result<Vec<_>, _>>()?;
    Ideal::new(ring, gens)
}

pub fn elimination_ideal_named(ideal: &Ideal, keep: &[&str]) -> Result<Ideal, GroebnerError> {
    let idx = keep
        .iter()
        .map(|n| ideal.ring().require(n))
        .collect::<Result<Vec<_>, _>>()?;
    elimination_ideal(ideal, &idx)
}

/// `I : f^∞ = (I + (1 - w f)) ∩ S`.
pub fn saturation(ideal: &Ideal, f: &Polynomial) -> Result<Ideal, GroebnerError> {
    if f.is_zero() {
        return Err(GroebnerError::InvalidInput("saturation by zero".into()));
    }
    let ring = ideal.ring();
    let w = fresh_name(ring, "w");
    let mut names = vec![w];
    names.extend(ring.names().iter().cloned());
    let mut weights = vec![1];
    weights.extend_from_slice(ring.weights());
    let ext = VariableRegistry::with_weights(&names, &weights)?;
    let mut gens = ideal.relabel_by_name(&ext)?.generators().to_vec();
    gens.push(&Polynomial::one(&ext) - &(&Polynomial::var(&ext, 0) * &f.relabel_by_name(&ext)?));
    let gb = buchberger(&Ideal::new(&ext, gens)?, MonomialOrder::Block(1))?;
    let out = gb
        .basis()
        .iter()
        .filter(|g| free_of_first(g, 1))
        .map(|g| g.relabel_by_name(ring))
        .collect::<Result<Vec<_>, _>>()?;
    Ideal::new(ring, out)
}

/// `I` plus all `codim x codim` minors of the Jacobian of its generators.
pub fn singular_locus_ideal(ideal: &Ideal, codim: usize) -> Result<Ideal, GroebnerError> {
    let ring = ideal.ring();
    let jac = PolyMatrix::jacobian(ring, ideal.generators());
    let mut gens = ideal.generators().to_vec();
    if codim <= jac.rows().min(jac.cols()) {
        let mut seen = HashSet::new();
        for m in jac.minors(codim) {
            if m.is_zero() {
                continue;
            }
            let key = m.monic(MonomialOrder::GrevLex);
            if seen.insert(key.clone()) {
                gens.push(key);
            }
        }
    }
    Ideal::new(ring, gens)
}

/// Polynomial ring map `source_i ↦ images[i]` into `target / modulus`.
#[derive(Clone, Debug)]
pub struct RingMapKernelQuery {
    pub source: Ring,
    pub images: Vec<Polynomial>,
    pub modulus: Ideal,
}

impl RingMapKernelQuery {
    /// Source variable weights default to the weighted degrees of the images.
    pub fn new<S: AsRef<str>>(
        source_names: &[S],
        images: Vec<Polynomial>,
        modulus: Ideal,
    ) -> Result<Self, GroebnerError> {
        let weights: Vec<u32> = images.iter().map(|p| p.weighted_degree().unwrap_or(1).max(1)).collect();
        Self::with_weights(source_names, &weights, images, modulus)
    }

    pub fn with_weights<S: AsRef<str>>(
        source_names: &[S],
        weights: &[u32],
        images: Vec<Polynomial>,
        modulus: Ideal,
    ) -> Result<Self, GroebnerError> {
        let source = VariableRegistry::with_weights(source_names, weights)?;
        if images.len() != source.len() {
            return Err(GroebnerError::InvalidInput(format!(
                "{} source variables but {} images",
                source.len(),
                images.len()
            )));
        }
        if images.iter().any(|p| !crate::poly::same_ring(p.ring(), modulus.ring())) {
            return Err(crate::poly::PolyError::RingMismatch.into());
        }
        Ok(RingMapKernelQuery { source, images, modulus })
    }

    pub fn target(&self) -> &Ring {
        self.modulus.ring()
    }

    /// True when the whole elimination problem is weighted-homogeneous.
    pub fn is_graded(&self) -> bool {
        self.modulus.is_homogeneous()
            && self
                .images
                .iter()
                .enumerate()
                .all(|(i, p)| p.is_homogeneous() && p.weighted_degree().map_or(true, |d| d == self.source.weight(i)))
    }
}

/// Gröbner basis of the graph ideal `modulus + (s_i - images_i)` under an
/// order eliminating the target variables. Answers kernel and subalgebra
/// questions for one map.
pub struct Presentation {
    query: RingMapKernelQuery,
    joined: Ring,
    ntarget: usize,
    gb: GroebnerBasis,
}

impl Presentation {
    pub fn compute(query: RingMapKernelQuery) -> Result<Self, GroebnerError> {
        Self::compute_with(query, &GroebnerConfig::default())
    }

    /// With `cfg.truncate_degree = Some(d)` the result is valid in source
    /// degrees up to `d`; this requires a graded query.
    pub fn compute_with(query: RingMapKernelQuery, cfg: &GroebnerConfig) -> Result<Self, GroebnerError> {
        let target = query.target().clone();
        let mut names: Vec<String> = target.names().to_vec();
        names.extend(query.source.names().iter().cloned());
        let mut weights = target.weights().to_vec();
        weights.extend_from_slice(query.source.weights());
        let joined = VariableRegistry::with_weights(&names, &weights)?;
        let nt = target.len();
        let mut gens = query.modulus.relabel_by_name(&joined)?.generators().to_vec();
        for (i, img) in query.images.iter().enumerate() {
            gens.push(&Polynomial::var(&joined, nt + i) - &img.relabel_by_name(&joined)?);
        }
        let ideal = Ideal::new(&joined, gens)?;
        if cfg.truncate_degree.is_some() && !ideal.is_homogeneous() {
            return Err(GroebnerError::NotHomogeneous);
        }
        let gb = buchberger_with(&ideal, MonomialOrder::Block(nt), cfg)?;
        Ok(Presentation {
            query,
            joined,
            ntarget: nt,
            gb,
        })
    }

    pub fn query(&self) -> &RingMapKernelQuery {
        &self.query
    }

    pub fn source(&self) -> &Ring {
        &self.query.source
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn truncated_at(&self) -> Option<u32> {
        self.gb.truncated_at()
    }

    /// Kernel generators, in the source ring. They form a Gröbner basis of
    /// the kernel for weighted grevlex on the source.
    pub fn kernel(&self) -> Result<Ideal, GroebnerError> {
        let gens = self
            .gb
            .basis()
            .iter()
            .filter(|g| free_of_first(g, self.ntarget))
            .map(|g| g.relabel_by_name(&self.query.source))
            .collect::<Result<Vec<_>, _>>()?;
        Ideal::new(&self.query.source, gens)
    }

    /// A polynomial in the source variables whose image is congruent to
    /// `candidate` modulo the modulus, or `None` if there is none.
    pub fn express(&self, candidate: &Polynomial) -> Result<Option<Polynomial>, GroebnerError> {
        if let Some(d) = self.gb.truncated_at() {
            let ok = candidate.is_homogeneous() && candidate.weighted_degree().map_or(true, |e| e <= d);
            if !ok {
                return Err(GroebnerError::InvalidInput(format!(
                    "candidate beyond truncation degree {d}"
                )));
            }
        }
        let nf = self.gb.normal_form(&candidate.relabel_by_name(&self.joined)?)?;
        if free_of_first(&nf, self.ntarget) {
            Ok(Some(nf.relabel_by_name(&self.query.source)?))
        } else {
            Ok(None)
        }
    }

    /// Substitutes the images into a source polynomial.
    pub fn pull_back(&self, p: &Polynomial) -> Result<Polynomial, GroebnerError> {
        Ok(p.map_to(self.query.target(), &self.query.images)?)
    }
}

pub fn ring_map_kernel(query: &RingMapKernelQuery) -> Result<Ideal, GroebnerError> {
    Presentation::compute(query.clone())?.kernel()
}

/// Expresses `candidate` through `generators` modulo `modulus`. When all
/// inputs are homogeneous the computation is truncated at the candidate's
/// degree.
pub fn subalgebra_membership(
    candidate: &Polynomial,
    generators: &[Polynomial],
    modulus: &Ideal,
) -> Result<Option<Polynomial>, GroebnerError> {
    let names: Vec<String> = (1..=generators.len()).map(|i| format!("tag{i}")).collect();
    let names: Vec<String> = names.iter().map(|n| fresh_name(modulus.ring(), n)).collect();
    let q = RingMapKernelQuery::new(&names, generators.to_vec(), modulus.clone())?;
    let mut cfg = GroebnerConfig::default();
    if q.is_graded() && candidate.is_homogeneous() {
        cfg.truncate_degree = candidate.weighted_degree();
    }
    Presentation::compute_with(q, &cfg)?.express(candidate)
}

/// A minimal homogeneous generating set, chosen greedily by degree from a
/// Gröbner basis of `I`.
pub fn minimal_generators(ideal: &Ideal) -> Result<Vec<Polynomial>, GroebnerError> {
    if !ideal.is_homogeneous() {
        return Err(GroebnerError::NotHomogeneous);
    }
    let ring = ideal.ring();
    let gb = buchberger(ideal, MonomialOrder::GrevLex)?;
    let mut cands: Vec<Polynomial> = gb.basis().to_vec();
    cands.sort_by_key(|g| g.weighted_degree());
    let mut chosen: Vec<Polynomial> = Vec::new();
    let mut cached: Option<(u32, GroebnerBasis)> = None;
    for g in cands {
        let d = g.weighted_degree().unwrap_or(0);
        let redundant = if chosen.is_empty() {
            false
        } else {
            if cached.as_ref().map_or(true, |(cd, _)| *cd != d) {
                let cfg = GroebnerConfig::default().truncated(d);
                cached = Some((d, buchberger_with(&Ideal::new(ring, chosen.clone())?, MonomialOrder::GrevLex, &cfg)?));
            }
            cached.as_ref().unwrap().1.contains(&g)?
        };
        if !redundant {
            chosen.push(g);
            cached = None;
        }
    }
    Ok(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> Ring {
        VariableRegistry::new(names).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn product_ideal_equality() {
        let r = ring(&["x", "y"]);
        let a = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let b = Ideal::parse(&r, &["x"]).unwrap().product(&Ideal::parse(&r, &["x", "y"]).unwrap()).unwrap();
        assert!(ideal_equality(&a, &b).unwrap());
        assert!(!ideal_equality(&Ideal::parse(&r, &["x"]).unwrap(), &Ideal::parse(&r, &["x^2"]).unwrap()).unwrap());
    }

    #[test]
    fn radical_basics() {
        let r = ring(&["x"]);
        let i = Ideal::parse(&r, &["x^2"]).unwrap();
        assert!(radical_membership(&p(&r, "x"), &i).unwrap());
        assert!(!radical_membership(&p(&r, "x + 1"), &i).unwrap());
        // a high power forces the auxiliary-variable path
        let i = Ideal::parse(&r, &["x^7"]).unwrap();
        assert!(radical_membership(&p(&r, "x"), &i).unwrap());
        assert!(!radical_membership(&p(&r, "x - 1"), &i).unwrap());
    }

    #[test]
    fn cusp_by_elimination() {
        let r = ring(&["t", "x", "y"]);
        let i = Ideal::parse(&r, &["x - t^2", "y - t^3"]).unwrap();
        let e = elimination_ideal_named(&i, &["x", "y"]).unwrap();
        assert_eq!(e.generators().len(), 1);
        let g = e.generators()[0].monic(MonomialOrder::GrevLex);
        assert_eq!(g, p(&r, "x^3 - y^2").monic(MonomialOrder::GrevLex));
    }

    #[test]
    fn saturation_basics() {
        let r = ring(&["x", "y"]);
        let s = saturation(&Ideal::parse(&r, &["x*y"]).unwrap(), &p(&r, "x")).unwrap();
        assert!(ideal_equality(&s, &Ideal::parse(&r, &["y"]).unwrap()).unwrap());
        let s = saturation(&Ideal::parse(&r, &["x"]).unwrap(), &p(&r, "y")).unwrap();
        assert!(ideal_equality(&s, &Ideal::parse(&r, &["x"]).unwrap()).unwrap());
        // saturating twice changes nothing
        let i = Ideal::parse(&r, &["x^2*y", "x*y^3"]).unwrap();
        let once = saturation(&i, &p(&r, "x")).unwrap();
        let twice = saturation(&once, &p(&r, "x")).unwrap();
        assert!(ideal_equality(&once, &twice).unwrap());
        assert!(ideal_contains(&once, &i).unwrap());
    }

    #[test]
    fn identity_map_has_zero_kernel() {
        let r = ring(&["x", "y"]);
        let q = RingMapKernelQuery::new(&["u", "v"], vec![p(&r, "x"), p(&r, "y")], Ideal::zero(&r)).unwrap();
        assert!(ring_map_kernel(&q).unwrap().is_empty());
    }

    #[test]
    fn kernel_of_quadratic_monomials() {
        // x^2, xy, y^2 satisfy exactly uw - v^2
        let r = ring(&["x", "y"]);
        let q = RingMapKernelQuery::new(&["u", "v", "w"], vec![p(&r, "x^2"), p(&r, "x*y"), p(&r, "y^2")], Ideal::zero(&r)).unwrap();
        let pres = Presentation::compute(q).unwrap();
        let k = pres.kernel().unwrap();
        assert_eq!(k.len(), 1);
        let src = pres.source().clone();
        assert!(ideal_equality(&k, &Ideal::parse(&src, &["u*w - v^2"]).unwrap()).unwrap());
        // x^4 + x^3 y is expressible, x is not
        let e = pres.express(&p(&r, "x^4 + x^3*y")).unwrap().unwrap();
        assert_eq!(pres.pull_back(&e).unwrap(), p(&r, "x^4 + x^3*y"));
        assert!(pres.express(&p(&r, "x")).unwrap().is_none());
        assert!(subalgebra_membership(&p(&r, "x^3*y"), &[p(&r, "x^2"), p(&r, "x*y"), p(&r, "y^2")], &Ideal::zero(&r))
            .unwrap()
            .is_some());
    }

    #[test]
    fn singular_locus_of_cone_and_hyperplane() {
        let r = ring(&["x", "y", "z"]);
        let cone = Ideal::parse(&r, &["x^2 + y^2 + z^2"]).unwrap();
        let s = singular_locus_ideal(&cone, 1).unwrap();
        assert!(radical_equal(&s, &Ideal::parse(&r, &["x", "y", "z"]).unwrap()).unwrap());
        let plane = Ideal::parse(&r, &["x"]).unwrap();
        let s = singular_locus_ideal(&plane, 1).unwrap();
        assert_eq!(krull_dimension(&s).unwrap(), Dimension::Empty);
    }

    #[test]
    fn minimal_generators_drop_redundancy() {
        let r = ring(&["x", "y", "z"]);
        let i = Ideal::parse(&r, &["x*y", "x*z", "x*y*z", "x^2*y + x*z^2"]).unwrap();
        assert_eq!(minimal_generators(&i).unwrap().len(), 2);
    }
}
