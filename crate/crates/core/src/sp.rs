//! `Sp_{2n}` acting on `2m` copies of `ℂ^{2n}`: moment ideals, the invariants
//! `z_ij`, the map `ν(X) = XᵗJXQ` onto square-zero elements of `so_{2m}`, and
//! the nilpotent-orbit bookkeeping for its image.

use std::fmt;

use thiserror::Error;

use crate::groebner::{buchberger, GroebnerError, Ideal};
use crate::ideal::{krull_dimension, minimal_generators, radical_membership, Dimension, Presentation, RingMapKernelQuery};
use crate::matrix::{combinations, skew_normal_form, MatrixError, PolyMatrix, RatMatrix};
use crate::poly::{MonomialOrder, Polynomial, Ring, VariableRegistry};
use crate::rational::Rational;
use crate::report::{ReportBuilder, VerificationReport};
use crate::sample::{self, SampleRng};

#[derive(Debug, Error)]
pub enum SpError {
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("matrix is not in Z (A ∈ so_2m, A² = 0, rank ≤ min(2n, m))")]
    NotInZ,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// The coordinate ring of `2n × 2m` matrices `X = (X', X'')`; column `i` of
/// `X` is the `i`-th copy `x^(i)` of `ℂ^{2n}`.
#[derive(Clone, Debug)]
pub struct SpInstance {
    n: usize,
    m: usize,
    ring: Ring,
    x: PolyMatrix,
}

impl SpInstance {
    pub fn new(n: usize, m: usize) -> Self {
        assert!(n >= 1 && m >= 1);
        let (rows, cols) = (2 * n, 2 * m);
        let sep = if rows < 10 && cols < 10 { "" } else { "_" };
        let names: Vec<String> = (0..rows)
            .flat_map(|r| (0..cols).map(move |c| format!("x{}{sep}{}", r + 1, c + 1)))
            .collect();
        let ring = VariableRegistry::new(&names).expect("distinct names");
        let x = PolyMatrix::from_fn(&ring, rows, cols, |r, c| Polynomial::var(&ring, r * cols + c));
        SpInstance { n, m, ring, x }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn x(&self) -> &PolyMatrix {
        &self.x
    }

    pub fn x_prime(&self) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, 2 * self.n, self.m, |r, c| self.x.get(r, c).clone())
    }

    pub fn x_double_prime(&self) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, 2 * self.n, self.m, |r, c| self.x.get(r, c + self.m).clone())
    }

    pub fn j(&self) -> PolyMatrix {
        PolyMatrix::symplectic_j(&self.ring, self.n)
    }

    pub fn q(&self) -> PolyMatrix {
        PolyMatrix::split_q(&self.ring, self.m)
    }

    pub fn var_index(&self, row: usize, col: usize) -> usize {
        row * 2 * self.m + col
    }

    /// Upper-triangle entries of `XQXᵗ`, made primitive.
    pub fn moment_ideal(&self) -> Ideal {
        let xq = self.x.checked_mul(&self.q()).unwrap();
        let s = xq.checked_mul(&self.x.transpose()).unwrap();
        let mut gens = Vec::new();
        for i in 0..2 * self.n {
            for j in i..2 * self.n {
                gens.push(s.get(i, j).primitive());
            }
        }
        Ideal::new(&self.ring, gens).unwrap()
    }

    /// `z_ij = (x^(i))ᵗ J x^(j)` for `1 ≤ i < j ≤ s`, lexicographic in `(i, j)`.
    pub fn invariants(&self, s: usize) -> Vec<Polynomial> {
        assert!(s <= 2 * self.m);
        let mut out = Vec::new();
        for i in 0..s {
            for j in i + 1..s {
                out.push(self.z(i, j));
            }
        }
        out
    }

    fn z(&self, i: usize, j: usize) -> Polynomial {
        let mut acc = Polynomial::zero(&self.ring);
        for r in 0..self.n {
            acc = &acc + &(self.x.get(r, i) * self.x.get(r + self.n, j));
            acc = &acc - &(self.x.get(r + self.n, i) * self.x.get(r, j));
        }
        acc
    }

    /// Images of the variables under `X ↦ gX`.
    pub fn left_action(&self, g: &RatMatrix) -> Vec<Polynomial> {
        let (rows, cols) = (2 * self.n, 2 * self.m);
        let mut out = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let mut acc = Polynomial::zero(&self.ring);
                for s in 0..rows {
                    if !g.get(r, s).is_zero() {
                        acc = &acc + &self.x.get(s, c).scale(g.get(r, s));
                    }
                }
                out.push(acc);
            }
        }
        out
    }

    /// Images of the variables under `X ↦ Xh`.
    pub fn right_action(&self, h: &RatMatrix) -> Vec<Polynomial> {
        let (rows, cols) = (2 * self.n, 2 * self.m);
        let mut out = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let mut acc = Polynomial::zero(&self.ring);
                for t in 0..cols {
                    if !h.get(t, c).is_zero() {
                        acc = &acc + &self.x.get(r, t).scale(h.get(t, c));
                    }
                }
                out.push(acc);
            }
        }
        out
    }

    /// Row-major values of a numeric `X`, as an evaluation point.
    pub fn point(&self, x: &RatMatrix) -> Vec<Rational> {
        assert_eq!((x.rows(), x.cols()), (2 * self.n, 2 * self.m));
        (0..x.rows())
            .flat_map(|r| (0..x.cols()).map(move |c| x.get(r, c).clone()))
            .collect()
    }
}

pub fn sp_moment_ideal(n: usize, m: usize) -> Ideal {
    SpInstance::new(n, m).moment_ideal()
}

/// The `(s choose 2)` invariants `z_ij` of the first `s` copies.
pub fn sp_invariants(n: usize, s: usize) -> Vec<Polynomial> {
    SpInstance::new(n, s.div_ceil(2).max(1)).invariants(s)
}

pub fn z_names(s: usize) -> Vec<String> {
    let mut out = Vec::new();
    for i in 1..=s {
        for j in i + 1..=s {
            out.push(format!("z{i}{j}"));
        }
    }
    out
}

/// Polynomial ring in the `z_ij`, each of weight 2.
pub fn z_ring(s: usize) -> Ring {
    let names = z_names(s);
    VariableRegistry::with_weights(&names, &vec![2; names.len()]).unwrap()
}

/// The skew matrix with entries `z_ij` above the diagonal.
pub fn z_matrix(ring: &Ring, s: usize) -> PolyMatrix {
    PolyMatrix::from_fn(ring, s, s, |i, j| {
        if i < j {
            Polynomial::var_named(ring, &format!("z{}{}", i + 1, j + 1)).unwrap()
        } else if i > j {
            -Polynomial::var_named(ring, &format!("z{}{}", j + 1, i + 1)).unwrap()
        } else {
            Polynomial::zero(ring)
        }
    })
}

/// Plücker relations among the `z_ij` in `z_ring(s)`: `J₁` for `s = 4`; the
/// fifteen four-index relations and the cubic `J₂` for `s = 6`.
pub fn pluecker_relations(s: usize) -> Result<Vec<Polynomial>, SpError> {
    if s != 4 && s != 6 {
        return Err(SpError::Unsupported(format!("Plücker relations for s = {s}")));
    }
    let ring = z_ring(s);
    let z = |i: usize, j: usize| Polynomial::var_named(&ring, &format!("z{i}{j}")).unwrap();
    let mut out = Vec::new();
    for c in combinations(s, 4) {
        let [i, j, k, l] = [c[0] + 1, c[1] + 1, c[2] + 1, c[3] + 1];
        out.push(&(&(&z(i, j) * &z(k, l)) - &(&z(i, k) * &z(j, l))) + &(&z(i, l) * &z(j, k)));
    }
    if s == 6 {
        let t = |a: (usize, usize), b: (usize, usize), c: (usize, usize)| &(&z(a.0, a.1) * &z(b.0, b.1)) * &z(c.0, c.1);
        let j2 = &(&(&(&(&t((1, 4), (2, 5), (3, 6)) + &t((2, 4), (3, 5), (1, 6))) + &t((3, 4), (1, 5), (2, 6)))
            - &t((1, 4), (3, 5), (2, 6)))
            - &t((2, 4), (1, 5), (3, 6)))
            - &t((3, 4), (2, 5), (1, 6));
        out.push(j2);
    }
    Ok(out)
}

/// `ν(X) = XᵗJXQ`.
pub fn nu_map(x: &RatMatrix, n: usize, m: usize) -> RatMatrix {
    assert_eq!((x.rows(), x.cols()), (2 * n, 2 * m));
    &(&(&x.transpose() * &RatMatrix::symplectic_j(n)) * x) * &RatMatrix::split_q(m)
}

/// `XQXᵗ`, which vanishes exactly on `μ⁻¹(0)`.
pub fn moment_value(x: &RatMatrix, m: usize) -> RatMatrix {
    &(x * &RatMatrix::split_q(m)) * &x.transpose()
}

/// `A ∈ so_{2m}` (i.e. `A = -QAᵗQ`), `A² = 0` and `rank A ≤ min(2n, m)`.
pub fn z_membership(a: &RatMatrix, n: usize, m: usize) -> bool {
    if (a.rows(), a.cols()) != (2 * m, 2 * m) {
        return false;
    }
    let q = RatMatrix::split_q(m);
    let skew = -&(&(&q * &a.transpose()) * &q) == *a;
    skew && (a * a).is_zero() && a.rank() <= (2 * n).min(m)
}

/// A point of `μ⁻¹(0)` with `XᵗJXQ = A`, for `A` in `Z`.
///
/// `AQ` is skew, so `AQ = TᵗJ_{2k}T` with `T` the first `2k` rows of the
/// symplectic change of basis. `T` is then embedded into `ℂ^{2n}` by the
/// map sending the `i`-th basis pair of `ℂ^{2k}` to the `i`-th pair of
/// `ℂ^{2n}`, which pulls `J_{2n}` back to `J_{2k}`.
pub fn orbit_preimage(a: &RatMatrix, n: usize, m: usize) -> Result<RatMatrix, SpError> {
    if !z_membership(a, n, m) {
        return Err(SpError::NotInZ);
    }
    let aq = a * &RatMatrix::split_q(m);
    let nf = skew_normal_form(&aq)?;
    let k = nf.rank / 2;
    let t = &nf.r * &nf.s.block(0, 2 * k, 0, 2 * m);
    let u = symplectic_embedding(k, n);
    let x = &u * &t;
    debug_assert!(moment_value(&x, m).is_zero());
    Ok(x)
}

/// `U ∈ Mat_{2n×2k}` with `e_i ↦ e_i`, `f_i ↦ e_{n+i}`; `UᵗJ_{2n}U = J_{2k}`.
pub fn symplectic_embedding(k: usize, n: usize) -> RatMatrix {
    assert!(k <= n);
    RatMatrix::from_fn(2 * n, 2 * k, |r, c| {
        let hit = (c < k && r == c) || (c >= k && r == n + c - k);
        if hit {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// A seeded point of `μ⁻¹(0)`: `(Y | 0)` moved by random symplectic and
/// `Q`-orthogonal group elements. `Y` has random rank.
pub fn random_moment_zero_point(rng: &mut SampleRng, n: usize, m: usize) -> RatMatrix {
    use rand::Rng;
    let keep = rng.gen_range(0..=m);
    let y = sample::random_matrix(rng, 2 * n, m);
    let x0 = RatMatrix::from_fn(2 * n, 2 * m, |r, c| if c < keep { y.get(r, c).clone() } else { Rational::zero() });
    let g = sample::random_symplectic(rng, n);
    let h = sample::random_orthogonal(rng, &RatMatrix::split_q(m));
    &(&g * &x0) * &h
}

/// Block sum of `k` copies of a rank-2 square-zero template in `so_{2m}`:
/// `A = [[0, S], [0, 0]]` with `S` skew of rank `2k`.
pub fn orbit_representative(k: usize, m: usize) -> Result<RatMatrix, SpError> {
    if 2 * k > m {
        return Err(SpError::Unsupported(format!("{k} rank-2 blocks in so_{}", 2 * m)));
    }
    let mut a = RatMatrix::zeros(2 * m, 2 * m);
    for b in 0..k {
        a.set(2 * b, m + 2 * b + 1, Rational::one());
        a.set(2 * b + 1, m + 2 * b, Rational::from_int(-1));
    }
    Ok(a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrbitLabel {
    I,
    II,
}

/// A partition of `2m` indexing a nilpotent orbit of `so_{2m}`. Very even
/// partitions carry one of two opaque labels.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    very_even: bool,
    label: Option<OrbitLabel>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>, label: Option<OrbitLabel>) -> Result<Self, SpError> {
        if parts.iter().any(|&p| p == 0) {
            return Err(SpError::InvalidPartition("zero part".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let total: u32 = parts.iter().sum();
        if total % 2 == 1 || total == 0 {
            return Err(SpError::InvalidPartition(format!("{total} is not a positive even size")));
        }
        for &p in &parts {
            if p % 2 == 0 && parts.iter().filter(|&&q| q == p).count() % 2 == 1 {
                return Err(SpError::InvalidPartition(format!("even part {p} with odd multiplicity")));
            }
        }
        let very_even = parts.iter().all(|p| p % 2 == 0);
        if very_even != label.is_some() {
            return Err(SpError::InvalidPartition(if very_even {
                "very even partition needs a label".into()
            } else {
                "only very even partitions carry a label".into()
            }));
        }
        Ok(Partition { parts, very_even, label })
    }

    /// `[2^{2k}, 1^{2(m-2k)}]`, labeled when very even.
    pub fn square_zero(k: usize, m: usize, label: OrbitLabel) -> Result<Self, SpError> {
        if 2 * k > m {
            return Err(SpError::InvalidPartition(format!("2k = {} exceeds m = {m}", 2 * k)));
        }
        let mut parts = vec![2; 2 * k];
        parts.extend(std::iter::repeat(1).take(2 * (m - 2 * k)));
        let label = (2 * k == m).then_some(label);
        Self::new(parts, label)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn very_even(&self) -> bool {
        self.very_even
    }

    pub fn label(&self) -> Option<OrbitLabel> {
        self.label
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Rank of a nilpotent element with these Jordan blocks.
    pub fn rank(&self) -> u32 {
        self.parts.iter().map(|p| p - 1).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut groups: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match groups.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => groups.push((p, 1)),
            }
        }
        let body: Vec<String> = groups
            .iter()
            .map(|(p, c)| if *c == 1 { p.to_string() } else { format!("{p}^{c}") })
            .collect();
        write!(f, "[{}]", body.join(","))?;
        match self.label {
            Some(OrbitLabel::I) => f.write_str("^I"),
            Some(OrbitLabel::II) => f.write_str("^II"),
            None => Ok(()),
        }
    }
}

/// The orbits making up `Z`: the closures of maximal rank and every stratum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    pub components: Vec<Partition>,
    pub strata: Vec<Partition>,
}

pub fn orbit_decomposition(n: usize, m: usize) -> OrbitDecomposition {
    let bound = (2 * n).min(m);
    let mut strata = Vec::new();
    for k in 0..=bound / 2 {
        if 2 * k == m {
            strata.push(Partition::square_zero(k, m, OrbitLabel::I).unwrap());
            strata.push(Partition::square_zero(k, m, OrbitLabel::II).unwrap());
        } else {
            strata.push(Partition::square_zero(k, m, OrbitLabel::I).unwrap());
        }
    }
    let top = strata.iter().map(|p| p.rank()).max().unwrap();
    let components = strata.iter().filter(|p| p.rank() == top).cloned().collect();
    OrbitDecomposition { components, strata }
}

/// Symplectic resolvability of an orbit closure in `so_{2m}`: either the odd
/// parts are exactly the first `q` for an even `q ≠ 2`, or there are exactly
/// two odd parts and they sit at positions `2k-1, 2k`.
pub fn fu_resolvable(p: &Partition) -> bool {
    let d = p.parts();
    let odd: Vec<usize> = (0..d.len()).filter(|&i| d[i] % 2 == 1).collect();
    let q = odd.len();
    let prefix = odd.iter().enumerate().all(|(i, &pos)| i == pos);
    let first = prefix && q % 2 == 0 && q != 2;
    // 0-based positions 2k-2, 2k-1
    let second = q == 2 && odd[0] % 2 == 0 && odd[1] == odd[0] + 1;
    first || second
}

/// Rewrites `A = XᵗJXQ` in the coordinates `z_ij`.
pub fn a_in_z(ring: &Ring, m: usize) -> PolyMatrix {
    let z = z_matrix(ring, 2 * m);
    z.checked_mul(&PolyMatrix::split_q(ring, m)).unwrap()
}

/// Generators that must vanish on the quotient for `n = 1`: the entries of
/// `A²` and, for `m = 2`, `Pf(QA)`; for `m = 3` also the 3×3 minors of `A`
/// and the fifteen 4×4 sub-Pfaffians of `QA`.
pub struct QuotientEquations {
    pub square: Vec<Polynomial>,
    pub minors: Vec<Polynomial>,
    pub pfaffians: Vec<Polynomial>,
}

pub fn quotient_equations(m: usize) -> QuotientEquations {
    let ring = z_ring(2 * m);
    let a = a_in_z(&ring, m);
    let qa = PolyMatrix::split_q(&ring, m).checked_mul(&a).unwrap();
    let square: Vec<Polynomial> = dedup_nonzero(a.checked_mul(&a).unwrap().entries().to_vec());
    let (minors, pfaffians) = match m {
        2 => (Vec::new(), vec![qa.pfaffian().unwrap()]),
        _ => (dedup_nonzero(a.minors(3)), qa.sub_pfaffians(4).unwrap()),
    };
    QuotientEquations { square, minors, pfaffians }
}

fn dedup_nonzero(polys: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::new();
    for p in polys {
        if p.is_zero() {
            continue;
        }
        let key = p.monic(MonomialOrder::GrevLex);
        if !out.contains(&key) {
            out.push(key);
        }
    }
    out
}

/// Kernel of `z_ij ↦ (x^(i))ᵗJx^(j)` modulo the moment ideal.
pub fn sp_presentation(n: usize, m: usize) -> Result<Presentation, GroebnerError> {
    let inst = SpInstance::new(n, m);
    let q = RingMapKernelQuery::new(&z_names(2 * m), inst.invariants(2 * m), inst.moment_ideal())?;
    Presentation::compute(q)
}

/// The reducedness and quotient claims for `n = 1`, `m ∈ {1, 2, 3}`.
pub fn reducedness_witnesses(n: usize, m: usize) -> Result<VerificationReport, SpError> {
    if n != 1 || !(1..=3).contains(&m) {
        return Err(SpError::Unsupported(format!("reducedness witnesses for (n, m) = ({n}, {m})")));
    }
    let inst = SpInstance::new(n, m);
    let ideal = inst.moment_ideal();
    let claim = match m {
        1 => "μ⁻¹(0) is not reduced: det X ∉ I_μ but (det X)² ∈ I_μ",
        2 => "μ⁻¹(0) has dimension 5; the quotient is {A ∈ so_4 | A² = 0, Pf(QA) = 0}",
        _ => "μ⁻¹(0) has dimension 9; the quotient is the six-dimensional {A ∈ so_6 | A² = 0, rk A ≤ 2, Pf₄(QA) = 0}",
    };
    let mut b = ReportBuilder::new(format!("sp:{n}:{m}"), claim, "sp-moment-quotient");
    b.export("moment_ideal", &ideal);
    b.witness_ideal("I_mu", &ideal);

    if m == 1 {
        let det = inst.invariants(2).remove(0);
        let gb = buchberger(&ideal, MonomialOrder::GrevLex)?;
        b.run("det_not_in_ideal", || Ok((!gb.contains(&det)?, format!("det X = {det}"))));
        b.run("det_squared_in_ideal", || Ok((gb.contains(&det.pow(2))?, "normal form of (det X)^2 is 0".into())));
        b.run("det_in_radical", || Ok((radical_membership(&det, &ideal)?, "det X ∈ √I_mu".into())));
        return Ok(b.finish());
    }

    let expected_dim = 4 * m - 3;
    b.run("moment_dimension", || {
        let d = krull_dimension(&ideal)?;
        Ok((d == Dimension::Dim(expected_dim), format!("dim V(I_mu) = {d}, expected {expected_dim}")))
    });

    let pres = match sp_presentation(n, m) {
        Ok(p) => p,
        Err(e) => {
            b.run("presentation", || Err(e));
            return Ok(b.finish());
        }
    };
    let kernel = pres.kernel()?;
    b.export("kernel", &kernel);
    let eqs = quotient_equations(m);
    let kgb = buchberger(&kernel, MonomialOrder::GrevLex)?;
    let contained = |polys: &[Polynomial]| -> Result<bool, GroebnerError> {
        for p in polys {
            if !kgb.contains(&p.relabel_by_name(kernel.ring())?)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    b.run("square_entries_in_kernel", || {
        Ok((contained(&eqs.square)?, format!("{} distinct entries of A^2", eqs.square.len())))
    });
    if m == 2 {
        b.run("minimal_generators", || {
            let mins = minimal_generators(&kernel)?;
            let listed: Vec<String> = mins.iter().map(|g| g.to_string()).collect();
            Ok((mins.len() == 11, format!("{} minimal generators, expected 11: {}", mins.len(), listed.join("; "))))
        });
        let pf = eqs.pfaffians[0].clone();
        b.run("pfaffian_in_kernel", || Ok((contained(std::slice::from_ref(&pf))?, format!("Pf(QA) = {pf}"))));
        // the Pfaffian is the non-reduced direction of {A² = 0}
        b.run("pfaffian_needed_for_reducedness", || {
            let sq = Ideal::new(pf.ring(), eqs.square.clone())?;
            let sq_gb = buchberger(&sq, MonomialOrder::GrevLex)?;
            let outside = !sq_gb.contains(&pf)?;
            let radical = radical_membership(&pf, &sq)?;
            Ok((outside && radical, format!("Pf(QA) ∉ (A²) = {outside}, Pf(QA) ∈ √(A²) = {radical}")))
        });
    } else {
        b.run("minors_in_kernel", || Ok((contained(&eqs.minors)?, format!("{} distinct 3x3 minors of A", eqs.minors.len()))));
        b.run("pfaffians_in_kernel", || {
            Ok((contained(&eqs.pfaffians)? && eqs.pfaffians.len() == 15, format!("{} sub-Pfaffians Pf_4(QA)", eqs.pfaffians.len())))
        });
        b.run("quotient_dimension", || {
            let d = crate::ideal::dimension_of_basis(&kgb);
            Ok((d == Dimension::Dim(6), format!("dim of the quotient = {d}, expected 6")))
        });
    }
    Ok(b.finish())
}

/// `ν ∘ orbit_preimage = id` on seeded points of `Z`, which are produced as
/// `ν` of seeded points of `μ⁻¹(0)` and as orbit representatives.
pub fn orbit_roundtrip(n: usize, m: usize, samples: usize, seed: u64) -> Result<(usize, Vec<String>), SpError> {
    let mut rng = sample::rng(seed ^ ((n as u64) << 32) ^ m as u64);
    let mut points: Vec<RatMatrix> = (0..=(2 * n).min(m) / 2).filter_map(|k| orbit_representative(k, m).ok()).collect();
    while points.len() < samples {
        let x0 = random_moment_zero_point(&mut rng, n, m);
        points.push(nu_map(&x0, n, m));
    }
    let mut ok = 0;
    let mut notes = Vec::new();
    for a in &points {
        if !z_membership(a, n, m) {
            notes.push(format!("sample of rank {} not in Z", a.rank()));
            continue;
        }
        let x = orbit_preimage(a, n, m)?;
        let fine = nu_map(&x, n, m) == *a && moment_value(&x, m).is_zero();
        if fine {
            ok += 1;
        } else {
            notes.push(format!("round trip failed for a rank-{} point", a.rank()));
        }
    }
    Ok((ok, notes))
}

/// Structural checks available for any `(n, m)`: generator and variable
/// counts of the moment ideal, and exact round trips through `ν`.
pub fn structure_report(n: usize, m: usize, seed: u64) -> VerificationReport {
    let mut b = ReportBuilder::new(
        format!("sp:{n}:{m}"),
        "Sp_2n on (C^2n)^m doubled: μ⁻¹(0) maps onto Z = {A ∈ so_2m | A² = 0, rk A ≤ min(2n, m)}",
        "sp-moment-quotient",
    );
    let inst = SpInstance::new(n, m);
    let ideal = inst.moment_ideal();
    b.export("moment_ideal", &ideal);
    let gens = (2 * n + 1) * 2 * n / 2;
    b.check(
        "moment_generators",
        ideal.len() == gens && ideal.ring().len() == 4 * n * m,
        format!("{} generators in {} variables", ideal.len(), ideal.ring().len()),
    );
    let mut rng = sample::rng(seed);
    let mut zero = true;
    for _ in 0..8 {
        let x = random_moment_zero_point(&mut rng, n, m);
        zero &= moment_value(&x, m).is_zero() && ideal.generators().iter().all(|g| g.evaluate(&inst.point(&x)).is_zero());
    }
    b.check("moment_zero_samples", zero, "8 seeded points of μ⁻¹(0) annihilate I_mu");
    match orbit_roundtrip(n, m, 8, seed) {
        Ok((ok, notes)) => b.check("roundtrip", notes.is_empty(), format!("{ok} exact round trips {notes:?}")),
        Err(e) => b.check("roundtrip", false, e.to_string()),
    };
    b.finish()
}

/// Orbit machinery: round trips and the resolvability table.
pub fn orbits_report(seed: u64) -> VerificationReport {
    let mut b = ReportBuilder::new(
        "orbits",
        "ν is onto Z via explicit preimages; Z is the stated union of square-zero orbits and is symplectically resolvable",
        "sp-orbits",
    );
    let mut total = 0;
    for (n, m) in [(1, 2), (1, 3), (2, 2)] {
        match orbit_roundtrip(n, m, 8, seed) {
            Ok((ok, notes)) => {
                total += ok;
                b.check(&format!("roundtrip_{n}_{m}"), ok == 8 && notes.is_empty(), format!("{ok}/8 exact round trips {notes:?}"));
            }
            Err(e) => {
                b.check(&format!("roundtrip_{n}_{m}"), false, e.to_string());
            }
        }
    }
    b.check("roundtrip_total", total >= 20, format!("{total} points"));
    for m in 1..=6usize {
        let dec = orbit_decomposition(m.div_ceil(2), m);
        let comps: Vec<String> = dec.components.iter().map(|p| p.to_string()).collect();
        let strata: Vec<String> = dec.strata.iter().map(|p| p.to_string()).collect();
        b.witness(format!("m = {m}: components {} strata {}", comps.join(" ∪ "), strata.join(" ⊃ ")));
        let top = if m % 2 == 0 {
            Partition::new(vec![2; m], Some(OrbitLabel::I)).unwrap()
        } else {
            let mut parts = vec![2; m - 1];
            parts.extend([1, 1]);
            Partition::new(parts, None).unwrap()
        };
        b.check(&format!("fu_{m}"), fu_resolvable(&top), format!("{top} resolvable"));
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::normal_form;
    use crate::ideal::ring_map_kernel;

    fn p(r: &Ring, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn moment_ideal_m1_matches_hand_computation() {
        let inst = SpInstance::new(1, 1);
        let r = inst.ring();
        let gens = inst.moment_ideal().generators().to_vec();
        assert_eq!(gens, vec![p(r, "x11*x12"), p(r, "x11*x22 + x12*x21"), p(r, "x21*x22")]);
    }

    #[test]
    fn moment_ideal_m2_and_m3() {
        let inst = SpInstance::new(1, 2);
        let r = inst.ring();
        let gens = inst.moment_ideal().generators().to_vec();
        assert_eq!(
            gens,
            vec![
                p(r, "x11*x13 + x12*x14"),
                p(r, "x11*x23 + x12*x24 + x13*x21 + x14*x22"),
                p(r, "x21*x23 + x22*x24"),
            ]
        );
        let inst = SpInstance::new(1, 3);
        let r = inst.ring();
        let gens = inst.moment_ideal().generators().to_vec();
        assert_eq!(gens[0], p(r, "x11*x14 + x12*x15 + x13*x16"));
        assert_eq!(gens[1], p(r, "x11*x24 + x12*x25 + x13*x26 + x14*x21 + x15*x22 + x16*x23"));
        assert_eq!(gens[2], p(r, "x21*x24 + x22*x25 + x23*x26"));
        assert_eq!(sp_moment_ideal(2, 3).len(), 10);
        assert_eq!(sp_moment_ideal(2, 3).ring().len(), 24);
    }

    #[test]
    fn invariants_are_two_by_two_minors() {
        let inst = SpInstance::new(1, 2);
        let r = inst.ring();
        let z = inst.invariants(4);
        assert_eq!(z.len(), 6);
        assert_eq!(z[0], p(r, "x11*x22 - x12*x21"));
        assert_eq!(z[5], p(r, "x13*x24 - x14*x23"));
        assert_eq!(sp_invariants(1, 2).len(), 1);
    }

    #[test]
    fn three_copies_have_free_invariants() {
        let inst = SpInstance::new(1, 2);
        let q = RingMapKernelQuery::new(&["a", "b", "c"], inst.invariants(3), Ideal::zero(inst.ring())).unwrap();
        assert!(ring_map_kernel(&q).unwrap().is_empty());
    }

    #[test]
    fn plucker_relations_vanish_on_invariants() {
        for s in [4, 6] {
            let inst = SpInstance::new(1, s / 2);
            let z = inst.invariants(s);
            let rels = pluecker_relations(s).unwrap();
            assert_eq!(rels.len(), if s == 4 { 1 } else { 16 });
            for rel in rels {
                assert!(rel.map_to(inst.ring(), &z).unwrap().is_zero(), "{rel}");
            }
        }
        assert!(pluecker_relations(5).is_err());
        let r = z_ring(4);
        assert_eq!(pluecker_relations(4).unwrap()[0], p(&r, "z12*z34 - z13*z24 + z14*z23"));
    }

    #[test]
    fn invariants_and_moment_ideal_are_equivariant() {
        let mut rng = sample::rng(11);
        for (n, m) in [(1, 2), (2, 1)] {
            let inst = SpInstance::new(n, m);
            let z = inst.invariants(2 * m);
            let ideal = inst.moment_ideal();
            let gb = buchberger(&ideal, MonomialOrder::GrevLex).unwrap();
            for _ in 0..4 {
                let g = sample::random_symplectic(&mut rng, n);
                let images = inst.left_action(&g);
                for f in &z {
                    assert_eq!(&f.map_to(inst.ring(), &images).unwrap(), f);
                }
                for f in ideal.generators() {
                    let moved = f.map_to(inst.ring(), &images).unwrap();
                    assert!(normal_form(&moved, &gb).unwrap().is_zero());
                }
                // the orthogonal group on the right preserves μ⁻¹(0) too
                let h = sample::random_orthogonal(&mut rng, &RatMatrix::split_q(m));
                let images = inst.right_action(&h);
                for f in ideal.generators() {
                    assert!(gb.contains(&f.map_to(inst.ring(), &images).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn nu_is_invariant_and_lands_in_z() {
        let mut rng = sample::rng(3);
        assert!(nu_map(&RatMatrix::zeros(2, 4), 1, 2).is_zero());
        for (n, m) in [(1, 2), (1, 3), (2, 2), (2, 3)] {
            for _ in 0..5 {
                let x = random_moment_zero_point(&mut rng, n, m);
                assert!(moment_value(&x, m).is_zero());
                let a = nu_map(&x, n, m);
                assert!(z_membership(&a, n, m));
                let g = sample::random_symplectic(&mut rng, n);
                assert_eq!(nu_map(&(&g * &x), n, m), a);
            }
        }
    }

    #[test]
    fn membership_rejects_rank_excess() {
        assert!(z_membership(&RatMatrix::zeros(4, 4), 1, 2));
        // rank 4 square-zero element of so_8 exceeds min(2n, m) = 2 for n = 1
        let a = orbit_representative(2, 4).unwrap();
        assert!(z_membership(&a, 2, 4));
        assert!(!z_membership(&a, 1, 4));
        // not square zero
        let mut b = RatMatrix::zeros(4, 4);
        b.set(0, 0, Rational::one());
        b.set(2, 2, Rational::from_int(-1));
        assert!(!z_membership(&b, 1, 2));
    }

    #[test]
    fn embedding_pulls_back_the_form() {
        for n in 1..=3 {
            for k in 0..=n {
                let u = symplectic_embedding(k, n);
                assert_eq!(&(&u.transpose() * &RatMatrix::symplectic_j(n)) * &u, RatMatrix::symplectic_j(k));
            }
        }
    }

    #[test]
    fn preimage_of_zero_and_of_very_even_representative() {
        let x = orbit_preimage(&RatMatrix::zeros(4, 4), 1, 2).unwrap();
        assert!(x.is_zero());
        let a = orbit_representative(1, 2).unwrap();
        assert_eq!(a.rank(), 2);
        let x = orbit_preimage(&a, 1, 2).unwrap();
        assert_eq!(nu_map(&x, 1, 2), a);
        assert!(moment_value(&x, 2).is_zero());
        assert!(orbit_preimage(&orbit_representative(2, 4).unwrap(), 1, 4).is_err());
    }

    #[test]
    fn roundtrip_on_seeded_points() {
        for (n, m) in [(1, 2), (1, 3), (2, 2), (2, 3)] {
            let (ok, notes) = orbit_roundtrip(n, m, 8, 0).unwrap();
            assert_eq!(ok, 8, "{notes:?}");
        }
    }

    #[test]
    fn partitions_validate() {
        assert!(Partition::new(vec![2, 1, 1], None).is_err());
        assert!(Partition::new(vec![2, 2], None).is_err());
        assert!(Partition::new(vec![3, 1], Some(OrbitLabel::I)).is_err());
        let p = Partition::new(vec![1, 2, 2, 1], None).unwrap();
        assert_eq!(p.parts(), &[2, 2, 1, 1]);
        assert_eq!(p.to_string(), "[2^2,1^2]");
        assert_eq!(p.rank(), 2);
        assert_eq!(Partition::new(vec![2, 2], Some(OrbitLabel::II)).unwrap().to_string(), "[2^2]^II");
    }

    #[test]
    fn decompositions() {
        let d = orbit_decomposition(1, 3);
        assert_eq!(d.components, vec![Partition::new(vec![2, 2, 1, 1], None).unwrap()]);
        assert_eq!(d.strata.len(), 2);
        let d = orbit_decomposition(1, 2);
        assert_eq!(
            d.components,
            vec![
                Partition::new(vec![2, 2], Some(OrbitLabel::I)).unwrap(),
                Partition::new(vec![2, 2], Some(OrbitLabel::II)).unwrap()
            ]
        );
        let d = orbit_decomposition(1, 1);
        assert_eq!(d.strata, vec![Partition::new(vec![1, 1], None).unwrap()]);
        assert_eq!(d.components, d.strata);
    }

    #[test]
    fn fu_criterion_cases() {
        for m in 1..=6usize {
            if m % 2 == 0 {
                assert!(fu_resolvable(&Partition::new(vec![2; m], Some(OrbitLabel::I)).unwrap()));
            } else {
                let mut parts = vec![2; m - 1];
                parts.extend([1, 1]);
                assert!(fu_resolvable(&Partition::new(parts, None).unwrap()));
            }
        }
        assert!(fu_resolvable(&Partition::new(vec![1, 1], None).unwrap()));
        assert!(fu_resolvable(&Partition::new(vec![1; 6], None).unwrap()));
        // two odd parts not in an aligned pair, q = 2 excluded
        assert!(fu_resolvable(&Partition::new(vec![3, 1, 1, 1], None).unwrap()));
        assert!(fu_resolvable(&Partition::new(vec![2, 2, 1, 1], None).unwrap()));
        // odd parts neither a prefix nor an aligned pair
        assert!(!fu_resolvable(&Partition::new(vec![3, 2, 2, 1], None).unwrap()));
        assert!(!fu_resolvable(&Partition::new(vec![2, 2, 1, 1, 1, 1], None).unwrap()));
    }

    #[test]
    fn reducedness_m1() {
        let r = reducedness_witnesses(1, 1).unwrap();
        assert!(r.passed(), "{r}");
    }
}
