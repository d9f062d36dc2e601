//! `Sl_2` on binary cubics and quartics, on copies of its Lie algebra (via
//! `SO_3` on `ℂ³`), and on `sl_2 ⊕ ℂ²` doubled.

use thiserror::Error;

use crate::groebner::{buchberger, buchberger_with, GroebnerConfig, GroebnerError, Ideal};
use crate::ideal::{
    fresh_name, hilbert_series_of_monomials, ideal_equality, krull_dimension, minimal_generators,
    radical_equal, singular_locus_ideal, subalgebra_membership, Dimension, Presentation, RingMapKernelQuery,
};
use crate::matrix::{MatrixError, PolyMatrix, RatMatrix};
use crate::poly::{Monomial, MonomialOrder, PolyError, Polynomial, Ring, UniPoly, UniRationalFunction, VariableRegistry};
use crate::rational::Rational;
use crate::report::{ReportBuilder, VerificationReport};

#[derive(Debug, Error)]
pub enum Sl2Error {
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

impl Sl2Error {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Sl2Error::Groebner(g) if g.is_resource_limit())
    }
}

fn binom(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// A binary form `Σ C(d,k) a_k x^{d-k} y^k` of degree 3 or 4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<Polynomial>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Polynomial>) -> Result<Self, Sl2Error> {
        if coeffs.len() != 4 && coeffs.len() != 5 {
            return Err(Sl2Error::Unsupported(format!("binary form of degree {}", coeffs.len() as i64 - 1)));
        }
        Ok(BinaryForm { coeffs })
    }

    /// Coefficients named `{prefix}0 .. {prefix}d` in `ring`.
    pub fn symbolic(ring: &Ring, prefix: &str, d: usize) -> Result<Self, Sl2Error> {
        let coeffs = (0..=d)
            .map(|k| Polynomial::var_named(ring, &format!("{prefix}{k}")))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(coeffs)
    }

    /// Numeric coefficients as constant polynomials of `ring`.
    pub fn constant(ring: &Ring, values: &[i64]) -> Result<Self, Sl2Error> {
        Self::new(values.iter().map(|&v| Polynomial::int(ring, v)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    /// `g · A` for the action induced by `g·(x^i y^j) = (gx)^i (gy)^j`.
    pub fn act(&self, g: &RatMatrix) -> BinaryForm {
        let m = form_action_matrix(self.degree(), g);
        let ring = self.coeffs[0].ring();
        let coeffs = (0..=self.degree())
            .map(|l| {
                (0..=self.degree()).fold(Polynomial::zero(ring), |acc, k| &acc + &self.coeffs[k].scale(m.get(l, k)))
            })
            .collect();
        BinaryForm { coeffs }
    }
}

/// Matrix of the induced action on coefficient vectors `(a_0, …, a_d)`.
pub fn form_action_matrix(d: usize, g: &RatMatrix) -> RatMatrix {
    // images of the basis vectors: gx = g11 x + g21 y, gy = g12 x + g22 y,
    // stored as coefficient vectors in (x^{e-l} y^l)_l
    let gx = vec![g.get(0, 0).clone(), g.get(1, 0).clone()];
    let gy = vec![g.get(0, 1).clone(), g.get(1, 1).clone()];
    let mul = |p: &[Rational], q: &[Rational]| -> Vec<Rational> {
        let mut out = vec![Rational::zero(); p.len() + q.len() - 1];
        for (i, a) in p.iter().enumerate() {
            for (j, b) in q.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        out
    };
    let pow = |p: &[Rational], e: usize| (0..e).fold(vec![Rational::one()], |acc, _| mul(&acc, p));
    RatMatrix::from_fn(d + 1, d + 1, |l, k| {
        let img = mul(&pow(&gx, d - k), &pow(&gy, k));
        &img[l] * &Rational::new(binom(d, k), binom(d, l))
    })
}

/// `a0..ad, b0..bd`.
pub fn sym_ring(d: usize) -> Ring {
    let mut names: Vec<String> = (0..=d).map(|k| format!("a{k}")).collect();
    names.extend((0..=d).map(|k| format!("b{k}")));
    VariableRegistry::new(&names).unwrap()
}

/// The invariant symplectic pairing on `S^d ℂ²`.
pub fn sigma_pairing(a: &BinaryForm, b: &BinaryForm) -> Result<Polynomial, Sl2Error> {
    let (a, b) = (a.coeffs(), b.coeffs());
    match (a.len(), b.len()) {
        (4, 4) => Ok(&(&(&a[0] * &b[3]) - &(&a[3] * &b[0])) - &(&(&a[1] * &b[2]) - &(&a[2] * &b[1])).scale(&Rational::from_int(3))),
        (5, 5) => Ok(&(&(&(&a[0] * &b[4]) + &(&b[0] * &a[4])) - &(&(&a[1] * &b[3]) + &(&b[1] * &a[3])).scale(&Rational::from_int(4)))
            + &(&a[2] * &b[2]).scale(&Rational::from_int(6))),
        _ => Err(Sl2Error::Unsupported("pairing of forms of different or unsupported degree".into())),
    }
}

pub fn discriminant_cubic(a: &BinaryForm) -> Result<Polynomial, Sl2Error> {
    if a.degree() != 3 {
        return Err(Sl2Error::Unsupported("discriminant of a non-cubic".into()));
    }
    let c = a.coeffs();
    let t = |k: i64, f: &[(usize, u32)]| {
        f.iter().fold(Polynomial::int(c[0].ring(), k), |acc, &(i, e)| &acc * &c[i].pow(e))
    };
    Ok(t(-4, &[(0, 1), (2, 3)]) + t(-4, &[(1, 3), (3, 1)]) + t(-1, &[(0, 2), (3, 2)]) + t(3, &[(1, 2), (2, 2)])
        + t(6, &[(0, 1), (1, 1), (2, 1), (3, 1)]))
}

/// `a0 a4 - 4 a1 a3 + 3 a2²`.
pub fn quartic_q(a: &BinaryForm) -> Result<Polynomial, Sl2Error> {
    if a.degree() != 4 {
        return Err(Sl2Error::Unsupported("Q of a non-quartic".into()));
    }
    let c = a.coeffs();
    Ok(&(&(&c[0] * &c[4]) - &(&c[1] * &c[3]).scale(&Rational::from_int(4))) + &c[2].pow(2).scale(&Rational::from_int(3)))
}

/// The catalecticant `det((a_{i+j}))`.
pub fn catalecticant(a: &BinaryForm) -> Result<Polynomial, Sl2Error> {
    if a.degree() != 4 {
        return Err(Sl2Error::Unsupported("catalecticant of a non-quartic".into()));
    }
    let c = a.coeffs();
    let ring = c[0].ring();
    Ok(PolyMatrix::from_fn(ring, 3, 3, |i, j| c[i + j].clone()).det()?)
}

/// The 4×4 determinant invariant `T` of two quartics.
pub fn quartic_t(a: &BinaryForm, b: &BinaryForm) -> Result<Polynomial, Sl2Error> {
    if a.degree() != 4 || b.degree() != 4 {
        return Err(Sl2Error::Unsupported("T of non-quartics".into()));
    }
    let (a, b) = (a.coeffs(), b.coeffs());
    let ring = a[0].ring();
    let w = [1, 3, 3, 1];
    let rows = [(a, 0), (a, 1), (b, 0), (b, 1)];
    Ok(PolyMatrix::from_fn(ring, 4, 4, |i, j| rows[i].0[j + rows[i].1].scale(&Rational::from_int(w[j]))).det()?)
}

/// Coefficients of `λ⁰..λʳ` in `f(a + λ b)`.
pub fn polarize(
    f: impl Fn(&[Polynomial]) -> Result<Polynomial, Sl2Error>,
    a: &[Polynomial],
    b: &[Polynomial],
    r: u32,
) -> Result<Vec<Polynomial>, Sl2Error> {
    let ring = a[0].ring();
    let lambda = fresh_name(ring, "lambda");
    let mut names = ring.names().to_vec();
    names.push(lambda);
    let ext = VariableRegistry::with_weights(&names, &[ring.weights(), &[1]].concat())?;
    let l = Polynomial::var(&ext, ring.len());
    let shifted = a
        .iter()
        .zip(b)
        .map(|(x, y)| Ok(&x.relabel_by_name(&ext)? + &(&l * &y.relabel_by_name(&ext)?)))
        .collect::<Result<Vec<_>, PolyError>>()?;
    let value = f(&shifted)?;
    let nl = ring.len();
    let mut parts: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); r as usize + 1];
    for (m, c) in value.terms() {
        let e = m.exponent(nl) as usize;
        if e > r as usize {
            return Err(Sl2Error::Unsupported(format!("f has degree above {r}")));
        }
        parts[e].push((Monomial::from_exponents(m.exponents()[..nl].to_vec()), c.clone()));
    }
    Ok(parts.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect())
}

/// Re-expresses a polynomial in the tag ring of `subalgebra_membership`
/// with readable names.
fn named(p: &Polynomial, names: &[&str]) -> String {
    let ring = VariableRegistry::new(names).unwrap();
    let vars: Vec<Polynomial> = (0..names.len()).map(|i| Polynomial::var(&ring, i)).collect();
    p.map_to(&ring, &vars).map(|q| q.to_string()).unwrap_or_else(|_| p.to_string())
}

fn cubic(c: &[Polynomial]) -> Result<BinaryForm, Sl2Error> {
    BinaryForm::new(c.to_vec())
}

/// `d_0..d_4` from the cubic discriminant.
pub fn polarized_discriminants(ring: &Ring) -> Result<Vec<Polynomial>, Sl2Error> {
    let a = BinaryForm::symbolic(ring, "a", 3)?;
    let b = BinaryForm::symbolic(ring, "b", 3)?;
    polarize(|c| discriminant_cubic(&cubic(c)?), a.coeffs(), b.coeffs(), 4)
}

/// Momentum ideal of `S^d ℂ² ⊕ S^d ℂ²`, in `sym_ring(d)`.
pub fn sym_moment_ideal(d: usize) -> Result<Ideal, Sl2Error> {
    let ring = sym_ring(d);
    let gens: &[&str] = match d {
        3 => &["a1*b3 + a3*b1 - 2*a2*b2", "a0*b3 + a3*b0 - a1*b2 - a2*b1", "2*a1*b1 - a0*b2 - a2*b0"],
        4 => &[
            "b4*a1 - 3*b3*a2 - b1*a4 + 3*b2*a3",
            "a0*b4 - b0*a4 - 2*a1*b3 + 2*b1*a3",
            "b0*a3 - b3*a0 - 3*b1*a2 + 3*b2*a1",
        ],
        _ => return Err(Sl2Error::Unsupported(format!("S^{d}"))),
    };
    Ok(Ideal::parse(&ring, gens)?)
}

/// `S³ℂ²` doubled: `(F, d0, d4)` with the single relation `16 d0 d4 - F⁴`,
/// and the middle polarizations expressible through them.
pub fn sym3_quotient_check() -> VerificationReport {
    let mut b = ReportBuilder::new(
        "sym3",
        "binary cubics doubled: the quotient is generated by F, d0, d4 with the single relation 16 d0 d4 - F^4",
        "sym-cubic",
    );
    if let Err(e) = sym3_inner(&mut b) {
        b.error("construction", e.is_resource_limit(), e.to_string());
    }
    b.finish()
}

fn sym3_inner(b: &mut ReportBuilder) -> Result<(), Sl2Error> {
    let ring = sym_ring(3);
    let ideal = sym_moment_ideal(3)?;
    b.export("moment_ideal", &ideal);
    let fa = BinaryForm::symbolic(&ring, "a", 3)?;
    let fb = BinaryForm::symbolic(&ring, "b", 3)?;
    let f = sigma_pairing(&fa, &fb)?;
    let d = polarized_discriminants(&ring)?;
    b.witness(format!("F = {f}"));
    let q = RingMapKernelQuery::new(&["F", "d0", "d4"], vec![f.clone(), d[0].clone(), d[4].clone()], ideal.clone())?;
    let pres = Presentation::compute(q)?;
    let kernel = pres.kernel()?;
    b.export("kernel", &kernel);
    b.witness_ideal("kernel", &kernel);
    let src = pres.source().clone();
    let rel = Polynomial::parse(&src, "16*d0*d4 - F^4")?;
    let principal = Ideal::new(&src, vec![rel.clone()])?;
    let gb = buchberger(&ideal, MonomialOrder::GrevLex)?;
    b.run("relation_vanishes", || Ok((gb.contains(&pres.pull_back(&rel)?)?, "16 d0 d4 - F^4 ↦ 0 mod I_mu".into())));
    b.run("kernel_radical_principal", || {
        Ok((radical_equal(&kernel, &principal)?, "√ker = √(16 d0 d4 - F^4)".into()))
    });
    b.run("kernel_principal", || Ok((ideal_equality(&kernel, &principal)?, "ker = (16 d0 d4 - F^4)".into())));
    for (k, dk) in d.iter().enumerate().take(4).skip(1) {
        b.run(&format!("d{k}_expressible"), || {
            let e = subalgebra_membership(dk, &[f.clone(), d[0].clone(), d[4].clone()], &ideal)?;
            Ok(match e {
                Some(p) => (true, format!("d{k} ≡ {}", named(&p, &["F", "d0", "d4"]))),
                None => (false, format!("d{k} not in the subalgebra")),
            })
        });
    }
    Ok(())
}

/// `S₃` permuting the coordinates of `(ℂ³)₀ = {y₁+y₂+y₃ = 0}`, two copies,
/// in the coordinates `(u1, u2, v1, v2)` with `u3 = -u1-u2`.
pub struct S3Double {
    ring: Ring,
}

impl Default for S3Double {
    fn default() -> Self {
        Self::new()
    }
}

impl S3Double {
    pub fn new() -> Self {
        S3Double {
            ring: VariableRegistry::new(&["u1", "u2", "v1", "v2"]).unwrap(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The three coordinates of each copy.
    pub fn coordinates(&self) -> [Vec<Polynomial>; 2] {
        let v = |i| Polynomial::var(&self.ring, i);
        [
            vec![v(0), v(1), -&(&v(0) + &v(1))],
            vec![v(2), v(3), -&(&v(2) + &v(3))],
        ]
    }

    /// Variable images under the permutation `y_i ↦ y_{perm[i]}`.
    pub fn permutation_images(&self, perm: [usize; 3]) -> Vec<Polynomial> {
        let [u, v] = self.coordinates();
        vec![u[perm[0]].clone(), u[perm[1]].clone(), v[perm[0]].clone(), v[perm[1]].clone()]
    }

    pub fn group() -> [[usize; 3]; 6] {
        [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]]
    }

    pub fn reynolds(&self, p: &Polynomial) -> Polynomial {
        let sum = Self::group().iter().fold(Polynomial::zero(&self.ring), |acc, perm| {
            &acc + &p.map_to(&self.ring, &self.permutation_images(*perm)).unwrap()
        });
        sum.scale(&Rational::new(1, 6))
    }

    /// Polarized power sums `Σ(u_i + λv_i)^k` for `k = 2, 3`, via Reynolds
    /// averages of `u1^k`.
    pub fn invariants(&self) -> Result<(Vec<Polynomial>, Vec<Polynomial>), Sl2Error> {
        let me = S3Double::new();
        let power_sum = |k: u32| {
            move |c: &[Polynomial]| -> Result<Polynomial, Sl2Error> {
                let ring = c[0].ring();
                // c = (u1, u2) in some ring; the third coordinate is -u1-u2
                let third = -&(&c[0] + &c[1]);
                Ok(&(&c[0].pow(k) + &c[1].pow(k)) + &third.pow(k)).map(|p| {
                    debug_assert!(crate::poly::same_ring(p.ring(), ring));
                    p
                })
            }
        };
        let u = vec![Polynomial::var(&self.ring, 0), Polynomial::var(&self.ring, 1)];
        let v = vec![Polynomial::var(&self.ring, 2), Polynomial::var(&self.ring, 3)];
        // the power sums are three times the averages of u1^k
        for k in [2u32, 3] {
            let avg = me.reynolds(&u[0].pow(k)).scale(&Rational::from_int(3));
            debug_assert_eq!(avg, power_sum(k)(&u)?);
        }
        Ok((polarize(power_sum(2), &u, &v, 2)?, polarize(power_sum(3), &u, &v, 3)?))
    }
}

const QC_NAMES: [&str; 7] = ["q0", "q1", "q2", "c0", "c1", "c2", "c3"];

/// `(Q0..Q2, C0..C3)` and `T` on `sym_ring(4)`.
pub fn quartic_invariants(ring: &Ring) -> Result<(Vec<Polynomial>, Vec<Polynomial>, Polynomial), Sl2Error> {
    let a = BinaryForm::symbolic(ring, "a", 4)?;
    let b = BinaryForm::symbolic(ring, "b", 4)?;
    let q = polarize(|c| quartic_q(&BinaryForm::new(c.to_vec())?), a.coeffs(), b.coeffs(), 2)?;
    let c = polarize(|c| catalecticant(&BinaryForm::new(c.to_vec())?), a.coeffs(), b.coeffs(), 3)?;
    Ok((q, c, quartic_t(&a, &b)?))
}

/// Graded dimensions of `ℂ[tags]/ker` through `degree`, from a presentation
/// truncated at that degree.
fn graded_quotient_dims(pres: &Presentation, degree: u32) -> Result<Vec<u64>, GroebnerError> {
    let kernel = pres.kernel()?;
    let gb = buchberger_with(&kernel, MonomialOrder::GrevLex, &GroebnerConfig::default().truncated(degree))?;
    let lm: Vec<Monomial> = gb.leading_monomials();
    Ok(hilbert_series_of_monomials(&lm, kernel.ring().weights()).graded_dimensions(degree as usize))
}

/// The scalings `q_k ↦ α·p2_k`, `c_k ↦ β·p3_k` tried when matching the two
/// presentations. Only `β²/α³` matters, so `α` stays small.
fn scaling_candidates() -> Vec<(Rational, Rational)> {
    let base: [i64; 12] = [1, 2, 3, 4, 6, 8, 9, 12, 16, 18, 24, 27];
    let mut betas = Vec::new();
    for &p in &base {
        for &q in &base {
            let r = Rational::new(p, q);
            if !betas.contains(&r) {
                betas.push(r.clone());
                betas.push(-r);
            }
        }
    }
    let mut out = Vec::new();
    for alpha in [1, -1, 2, -2, 3, -3] {
        for beta in &betas {
            out.push((Rational::from_int(alpha), beta.clone()));
        }
    }
    out
}

/// `S⁴ℂ²` doubled: `T` is dispensable, and the kernel of `(Q, C)` agrees with
/// the kernel of the `S₃` power sums on `(ℂ³)₀ ⊕ (ℂ³)₀` through degree `degree`.
pub fn sym4_quotient_check(degree: u32) -> VerificationReport {
    let mut b = ReportBuilder::new(
        "sym4",
        "binary quartics doubled: Q0..Q2, C0..C3 generate, and the quotient is (C^3)_0 ⊕ (C^3)_0 / S_3",
        "sym-quartic",
    );
    if let Err(e) = sym4_inner(&mut b, degree) {
        b.error("construction", e.is_resource_limit(), e.to_string());
    }
    b.finish()
}

fn sym4_inner(b: &mut ReportBuilder, degree: u32) -> Result<(), Sl2Error> {
    let ring = sym_ring(4);
    let ideal = sym_moment_ideal(4)?;
    b.export("moment_ideal", &ideal);
    let (q, c, t) = quartic_invariants(&ring)?;
    let gens: Vec<Polynomial> = q.iter().chain(&c).cloned().collect();
    b.run("t_expressible", || {
        Ok(match subalgebra_membership(&t, &gens, &ideal)? {
            Some(p) => (true, format!("T ≡ {}", named(&p, &QC_NAMES))),
            None => (false, "T not in the subalgebra".into()),
        })
    });

    let s3 = S3Double::new();
    b.run("reynolds_idempotent", || {
        let p = Polynomial::parse(s3.ring(), "u1^2*v2 + 3*u2*v1 - u1*u2*v2^2")?;
        let once = s3.reynolds(&p);
        let fixed = S3Double::group()
            .iter()
            .all(|perm| once.map_to(s3.ring(), &s3.permutation_images(*perm)).unwrap() == once);
        Ok((s3.reynolds(&once) == once && fixed, "R∘R = R, image fixed by S_3".into()))
    });
    let (p2, p3) = s3.invariants()?;
    let s3_gens: Vec<Polynomial> = p2.iter().chain(&p3).cloned().collect();

    let cfg = GroebnerConfig::default().truncated(degree);
    let weights = [2, 2, 2, 3, 3, 3, 3];
    let pres4 = Presentation::compute_with(
        RingMapKernelQuery::with_weights(&QC_NAMES, &weights, gens.clone(), ideal.clone())?,
        &cfg,
    )?;
    let pres3 = Presentation::compute_with(
        RingMapKernelQuery::with_weights(&QC_NAMES, &weights, s3_gens, Ideal::zero(s3.ring()))?,
        &cfg,
    )?;
    let dims4 = graded_quotient_dims(&pres4, degree)?;
    let dims3 = graded_quotient_dims(&pres3, degree)?;
    b.check(
        "graded_dimensions_agree",
        dims4 == dims3,
        format!("quartic side {dims4:?}, S_3 side {dims3:?} (degrees 0..={degree})"),
    );

    // discover the dictionary between generators
    let src = pres4.source().clone();
    let k3 = pres3.kernel()?;
    let k4 = pres4.kernel()?;
    let k4_gb = buchberger_with(&k4, MonomialOrder::GrevLex, &cfg)?;
    let found = scaling_candidates().into_iter().find(|(alpha, beta)| {
        let images: Vec<Polynomial> = (0..7)
            .map(|i| {
                let s = if i < 3 { alpha.recip() } else { beta.recip() };
                Polynomial::var(&src, i).scale(&s)
            })
            .collect();
        k3.generators().iter().all(|g| {
            let moved = g.map_to(&src, &images).unwrap();
            k4_gb.contains(&moved).unwrap_or(false)
        })
    });
    match found {
        Some((alpha, beta)) => {
            b.check(
                "correspondence",
                true,
                format!("Q_k = {alpha}·P2_k, C_k = {beta}·P3_k maps the S_3 relations into the quartic kernel"),
            );
            b.witness(format!("{} kernel generators through degree {degree}", k4.len()));
        }
        None => {
            b.check("correspondence", false, "no scaling of the generators matched the two kernels");
        }
    }
    Ok(())
}

/// Ring of `k` vectors of `ℂ³`, named `x, y, z, u` in order.
pub fn so3_ring(k: usize) -> Ring {
    let letters = ["x", "y", "z", "u"];
    let names: Vec<String> = letters[..k].iter().flat_map(|l| (1..=3).map(move |i| format!("{l}{i}"))).collect();
    VariableRegistry::new(&names).unwrap()
}

fn so3_vectors(ring: &Ring, k: usize) -> Vec<Vec<Polynomial>> {
    (0..k).map(|v| (0..3).map(|i| Polynomial::var(ring, 3 * v + i)).collect()).collect()
}

/// Momentum ideal of `ϑ_n` doubled: entries of `X'X''ᵗ - X''X'ᵗ`.
pub fn so3_moment_ideal(n: usize) -> Result<Ideal, Sl2Error> {
    if n != 1 && n != 2 {
        return Err(Sl2Error::Unsupported(format!("SO_3 on {n} copies doubled")));
    }
    let ring = so3_ring(2 * n);
    let mu = so3_moment_matrix(&ring, n);
    let mut gens = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            gens.push(mu.get(i, j).clone());
        }
    }
    Ok(Ideal::new(&ring, gens)?)
}

/// `XJXᵗ = X'X''ᵗ - X''X'ᵗ`; the moment map is `-½ XJXᵗQ`.
pub fn so3_moment_matrix(ring: &Ring, n: usize) -> PolyMatrix {
    let v = so3_vectors(ring, 2 * n);
    let x = PolyMatrix::from_fn(ring, 3, 2 * n, |i, j| v[j][i].clone());
    let j = PolyMatrix::symplectic_j(ring, n);
    x.checked_mul(&j).unwrap().checked_mul(&x.transpose()).unwrap()
}

/// Dot products `t_ij` (`Q = I` on `ℂ³`) and the triple determinants.
pub fn so3_invariants(ring: &Ring, k: usize) -> (Vec<(String, Polynomial)>, Vec<(String, Polynomial)>) {
    let v = so3_vectors(ring, k);
    let mut t = Vec::new();
    for i in 0..k {
        for j in i..k {
            let dot = (0..3).fold(Polynomial::zero(ring), |acc, r| &acc + &(&v[i][r] * &v[j][r]));
            t.push((format!("t{}{}", i + 1, j + 1), dot));
        }
    }
    let mut dets = Vec::new();
    for (idx, c) in crate::matrix::combinations(k, 3).into_iter().enumerate() {
        let m = PolyMatrix::from_fn(ring, 3, 3, |r, s| v[c[s]][r].clone());
        dets.push((format!("T{}", idx + 1), m.det().unwrap()));
    }
    (t, dets)
}

pub fn so3_quotient_checks() -> VerificationReport {
    let mut b = ReportBuilder::new(
        "adjoint",
        "sl_2^2 // Sl_2 is the A_1 cone t12^2 = t11 t22; for sl_2^4 the determinantal invariants are dispensable and the quotient has dimension 6",
        "adjoint",
    );
    if let Err(e) = so3_inner(&mut b) {
        b.error("construction", e.is_resource_limit(), e.to_string());
    }
    b.finish()
}

fn so3_inner(b: &mut ReportBuilder) -> Result<(), Sl2Error> {
    let ring = so3_ring(2);
    let ideal = so3_moment_ideal(1)?;
    b.export("moment_ideal_1", &ideal);
    let mu = so3_moment_matrix(&ring, 1).scale(&Polynomial::constant(&ring, Rational::new(-1, 2)));
    b.check("moment_map_skew", mu.is_skew(), "-1/2 XJX^t is skew");
    let (t, _) = so3_invariants(&ring, 2);
    let names: Vec<&str> = t.iter().map(|(n, _)| n.as_str()).collect();
    let q = RingMapKernelQuery::new(&names, t.iter().map(|(_, p)| p.clone()).collect(), ideal)?;
    let kernel = Presentation::compute(q)?.kernel()?;
    b.witness_ideal("kernel_1", &kernel);
    b.run("a1_relation", || {
        let expected = Ideal::parse(kernel.ring(), &["t12^2 - t11*t22"])?;
        Ok((ideal_equality(&kernel, &expected)?, "ker = (t12^2 - t11 t22)".into()))
    });

    let ring = so3_ring(4);
    let ideal = so3_moment_ideal(2)?;
    b.export("moment_ideal_2", &ideal);
    let (t, dets) = so3_invariants(&ring, 4);
    let tpolys: Vec<Polynomial> = t.iter().map(|(_, p)| p.clone()).collect();
    let names: Vec<&str> = t.iter().map(|(n, _)| n.as_str()).collect();
    for (name, det) in &dets {
        b.run(&format!("{name}_dispensable"), || {
            Ok(match subalgebra_membership(det, &tpolys, &ideal)? {
                Some(p) => (true, format!("{name} ≡ {}", named(&p, &names))),
                None => (false, format!("{name} not in the subalgebra of the t_ij")),
            })
        });
    }
    let pres = Presentation::compute(RingMapKernelQuery::new(&names, tpolys, ideal.clone())?)?;
    let kernel = pres.kernel()?;
    b.export("kernel_2", &kernel);
    b.run("kernel_relations", || {
        let mins = minimal_generators(&kernel)?;
        let listed: Vec<String> = mins.iter().map(|g| g.to_string()).collect();
        Ok((true, format!("{} minimal relations: {}", mins.len(), listed.join("; "))))
    });
    b.run("quotient_dimension", || {
        let dq = krull_dimension(&kernel)?;
        let dmu = krull_dimension(&ideal)?;
        let via_mu = dmu.value().map(|d| d - 3);
        let ok = dq == Dimension::Dim(6) && via_mu == Some(6);
        Ok((ok, format!("dim ker-quotient = {dq}, dim μ⁻¹(0) - dim SO_3 = {dmu} - 3")))
    });
    Ok(())
}

/// `ℂ[a11, a12, a21, b11, b12, b21, x1, x2, y1, y2]` with the symbolic
/// `A, B ∈ sl_2` and `x, y ∈ ℂ²`.
pub struct Sl2Double {
    ring: Ring,
}

impl Default for Sl2Double {
    fn default() -> Self {
        Self::new()
    }
}

impl Sl2Double {
    pub fn new() -> Self {
        Sl2Double {
            ring: VariableRegistry::new(&["a11", "a12", "a21", "b11", "b12", "b21", "x1", "x2", "y1", "y2"]).unwrap(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    fn v(&self, i: usize) -> Polynomial {
        Polynomial::var(&self.ring, i)
    }

    pub fn a(&self) -> PolyMatrix {
        PolyMatrix::new(&self.ring, 2, 2, vec![self.v(0), self.v(1), self.v(2), -self.v(0)]).unwrap()
    }

    pub fn b(&self) -> PolyMatrix {
        PolyMatrix::new(&self.ring, 2, 2, vec![self.v(3), self.v(4), self.v(5), -self.v(3)]).unwrap()
    }

    pub fn x(&self) -> PolyMatrix {
        PolyMatrix::new(&self.ring, 2, 1, vec![self.v(6), self.v(7)]).unwrap()
    }

    pub fn y(&self) -> PolyMatrix {
        PolyMatrix::new(&self.ring, 2, 1, vec![self.v(8), self.v(9)]).unwrap()
    }

    /// `[A, B] + xyᵗ - ½ (yᵗx) I`.
    pub fn moment_matrix(&self) -> PolyMatrix {
        let (a, b) = (self.a(), self.b());
        let comm = a.checked_mul(&b).unwrap().checked_sub(&b.checked_mul(&a).unwrap()).unwrap();
        let xy = self.x().checked_mul(&self.y().transpose()).unwrap();
        let half = self.pairing(&self.y(), &self.x()).scale(&Rational::new(1, 2));
        let shift = PolyMatrix::identity(&self.ring, 2).scale(&half);
        comm.checked_add(&xy).unwrap().checked_sub(&shift).unwrap()
    }

    fn pairing(&self, u: &PolyMatrix, w: &PolyMatrix) -> Polynomial {
        u.transpose().checked_mul(w).unwrap().get(0, 0).clone()
    }

    fn det2(&self, u: &PolyMatrix, w: &PolyMatrix) -> Polynomial {
        &(u.get(0, 0) * w.get(1, 0)) - &(u.get(1, 0) * w.get(0, 0))
    }

    /// The thirteen generating invariants, named.
    pub fn invariants(&self) -> Vec<(&'static str, Polynomial)> {
        let (a, b, x, y) = (self.a(), self.b(), self.x(), self.y());
        let ab = a.checked_mul(&b).unwrap();
        let mul = |m: &PolyMatrix, v: &PolyMatrix| m.checked_mul(v).unwrap();
        vec![
            ("detA", a.det().unwrap()),
            ("detB", b.det().unwrap()),
            ("trAB", ab.trace().unwrap()),
            ("ytx", self.pairing(&y, &x)),
            ("ytAx", self.pairing(&y, &mul(&a, &x))),
            ("ytBx", self.pairing(&y, &mul(&b, &x))),
            ("ytABx", self.pairing(&y, &mul(&ab, &x))),
            ("det_x_Ax", self.det2(&x, &mul(&a, &x))),
            ("det_x_Bx", self.det2(&x, &mul(&b, &x))),
            ("det_x_ABx", self.det2(&x, &mul(&ab, &x))),
            ("det_y_Aty", self.det2(&y, &mul(&a.transpose(), &y))),
            ("det_y_Bty", self.det2(&y, &mul(&b.transpose(), &y))),
            ("det_y_ABty", self.det2(&y, &mul(&ab.transpose(), &y))),
        ]
    }

    /// `z1..z8 = detA, trAB, detB, -yᵗx, det(x|Ax), det(x|Bx), det(y|Aᵗy), det(y|Bᵗy)`.
    ///
    /// With the moment map above, `h1..h9` vanish only for `z4 = -yᵗx`.
    pub fn z_invariants(&self) -> Vec<Polynomial> {
        let inv = self.invariants();
        let get = |n: &str| inv.iter().find(|(k, _)| *k == n).unwrap().1.clone();
        let mut z: Vec<Polynomial> = ["detA", "trAB", "detB", "ytx", "det_x_Ax", "det_x_Bx", "det_y_Aty", "det_y_Bty"]
            .iter()
            .map(|n| get(n))
            .collect();
        z[3] = -&z[3];
        z
    }

    /// The five invariants not among `z1..z8`.
    pub fn omitted_invariants(&self) -> Vec<(&'static str, Polynomial)> {
        self.invariants()
            .into_iter()
            .filter(|(k, _)| ["ytAx", "ytBx", "ytABx", "det_x_ABx", "det_y_ABty"].contains(k))
            .collect()
    }

    /// Variable images under `(A, x, y, B) ↦ (gAg⁻¹, gx, (gᵗ)⁻¹y, gBg⁻¹)`.
    pub fn action(&self, g: &RatMatrix) -> Vec<Polynomial> {
        let ginv = g.inverse().expect("invertible");
        let gp = PolyMatrix::from_rational(&self.ring, g);
        let gi = PolyMatrix::from_rational(&self.ring, &ginv);
        let git = PolyMatrix::from_rational(&self.ring, &ginv.transpose());
        let conj = |m: PolyMatrix| gp.checked_mul(&m).unwrap().checked_mul(&gi).unwrap();
        let a = conj(self.a());
        let b = conj(self.b());
        let x = gp.checked_mul(&self.x()).unwrap();
        let y = git.checked_mul(&self.y()).unwrap();
        vec![
            a.get(0, 0).clone(),
            a.get(0, 1).clone(),
            a.get(1, 0).clone(),
            b.get(0, 0).clone(),
            b.get(0, 1).clone(),
            b.get(1, 0).clone(),
            x.get(0, 0).clone(),
            x.get(1, 0).clone(),
            y.get(0, 0).clone(),
            y.get(1, 0).clone(),
        ]
    }
}

/// Entries `(1,2)`, `(1,1)`, `(2,1)` of the moment matrix.
pub fn sl2c2_moment_ideal() -> Ideal {
    let d = Sl2Double::new();
    let mu = d.moment_matrix();
    Ideal::new(d.ring(), vec![mu.get(0, 1).clone(), mu.get(0, 0).clone(), mu.get(1, 0).clone()]).unwrap()
}

pub fn sl2c2_invariants() -> Vec<Polynomial> {
    Sl2Double::new().invariants().into_iter().map(|(_, p)| p).collect()
}

const Z_NAMES: [&str; 8] = ["z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8"];

/// `z1..z8` with weights `2,2,2,2,3,3,3,3`.
pub fn quotient_ring() -> Ring {
    let names: Vec<String> = (1..=8).map(|i| format!("z{i}")).collect();
    VariableRegistry::with_weights(&names, &[2, 2, 2, 2, 3, 3, 3, 3]).unwrap()
}

pub fn h_relations(ring: &Ring) -> Vec<Polynomial> {
    [
        "(2*z2 - z4)*z7 + 4*z1*z8",
        "(2*z2 + z4)*z8 + 4*z3*z7",
        "(2*z2 + z4)*z5 + 4*z1*z6",
        "(2*z2 - z4)*z6 + 4*z3*z5",
        "(2*z2 + z4)*(2*z2 - z4) - 16*z1*z3",
        "(2*z2 + z4)*z4^2 - 4*z6*z7",
        "(2*z2 - z4)*z4^2 - 4*z5*z8",
        "z3*z4^2 + z6*z8",
        "z1*z4^2 + z5*z7",
    ]
    .iter()
    .map(|s| Polynomial::parse(ring, s).unwrap())
    .collect()
}

pub fn h_ideal() -> Ideal {
    let r = quotient_ring();
    Ideal::new(&r, h_relations(&r)).unwrap()
}

/// The 3×3 matrix whose 2×2 minors cut out `Z`.
pub fn m_matrix(ring: &Ring) -> PolyMatrix {
    PolyMatrix::parse(
        ring,
        &[&["2*z2 - z4", "4*z3", "z8"], &["4*z1", "2*z2 + z4", "-z7"], &["z5", "-z6", "1/4*z4^2"]],
    )
    .unwrap()
}

/// `(z4, …, z8, z2² - 4 z1 z3)`.
pub fn singular_stratum(ring: &Ring) -> Ideal {
    Ideal::parse(ring, &["z4", "z5", "z6", "z7", "z8", "z2^2 - 4*z1*z3"]).unwrap()
}

/// Matches each nonzero minor with a scalar multiple of some `h_i`.
pub fn minors_versus_relations(ring: &Ring) -> Vec<(usize, Rational)> {
    let hs = h_relations(ring);
    let mut out = Vec::new();
    for minor in m_matrix(ring).minors(2) {
        if minor.is_zero() {
            continue;
        }
        for (i, h) in hs.iter().enumerate() {
            let (lm, lc) = h.leading_term(MonomialOrder::GrevLex).unwrap();
            let c = minor
                .terms()
                .iter()
                .find(|(m, _)| m == lm)
                .map(|(_, c)| c * &lc.recip());
            if let Some(c) = c {
                if h.scale(&c) == minor {
                    out.push((i, c));
                    break;
                }
            }
        }
    }
    out
}

pub fn sl2c2_presentation_check() -> VerificationReport {
    let mut b = ReportBuilder::new(
        "sl2c2",
        "(sl_2 ⊕ C^2) doubled: the quotient is C[z1..z8]/(h1..h9), the rank ≤ 1 locus of M, of dimension 4 with the stated singular locus",
        "sl2-plus-c2",
    );
    if let Err(e) = sl2c2_inner(&mut b) {
        b.error("construction", e.is_resource_limit(), e.to_string());
    }
    b.finish()
}

fn sl2c2_inner(b: &mut ReportBuilder) -> Result<(), Sl2Error> {
    let d = Sl2Double::new();
    let ideal = sl2c2_moment_ideal();
    b.export("moment_ideal", &ideal);
    b.witness_ideal("I_mu", &ideal);
    let zr = quotient_ring();
    let hs = h_relations(&zr);
    let h = Ideal::new(&zr, hs.clone())?;
    b.export("relations", &h);
    let z = d.z_invariants();
    let gb = buchberger(&ideal, MonomialOrder::GrevLex)?;
    b.run("relations_vanish", || {
        for (i, hi) in hs.iter().enumerate() {
            if !gb.contains(&hi.map_to(d.ring(), &z)?)? {
                return Ok((false, format!("h{} does not vanish", i + 1)));
            }
        }
        Ok((true, "h1..h9 ↦ 0 mod I_mu".into()))
    });
    b.run("kernel_is_h", || {
        let q = RingMapKernelQuery::with_weights(&Z_NAMES, zr.weights(), z.clone(), ideal.clone())?;
        let kernel = Presentation::compute(q)?.kernel()?;
        let h_here = Ideal::new(kernel.ring(), hs.iter().map(|p| p.relabel_by_name(kernel.ring())).collect::<Result<_, _>>()?)?;
        let mins = minimal_generators(&kernel)?;
        Ok((ideal_equality(&kernel, &h_here)?, format!("ker(z) = (h1..h9), {} minimal generators", mins.len())))
    });
    let matched = minors_versus_relations(&zr);
    let mut hit: Vec<usize> = matched.iter().map(|(i, _)| *i).collect();
    hit.sort_unstable();
    hit.dedup();
    let scalars: Vec<String> = matched.iter().map(|(i, c)| format!("{c}·h{}", i + 1)).collect();
    let units = matched.iter().filter(|(_, c)| c.abs().is_one()).count();
    b.check(
        "minors_match_relations",
        hit.len() == 9 && matched.len() == 9,
        format!("the nine 2x2 minors of M are {} ({} with coefficient ±1)", scalars.join(", "), units),
    );
    for (name, inv) in d.omitted_invariants() {
        b.run(&format!("{name}_expressible"), || {
            Ok(match subalgebra_membership(&inv, &z, &ideal)? {
                Some(p) => (true, format!("{name} ≡ {}", named(&p, &Z_NAMES))),
                None => (false, format!("{name} not in the subalgebra of z1..z8")),
            })
        });
    }
    b.run("quotient_dimension", || {
        let dim = krull_dimension(&h)?;
        Ok((dim == Dimension::Dim(4), format!("dim V(h) = {dim}")))
    });
    b.run("singular_locus", || {
        let sing = singular_locus_ideal(&h, 4)?;
        let s = singular_stratum(&zr);
        Ok((radical_equal(&sing, &s)?, format!("√(h + 4x4 Jacobian minors) = √(z4..z8, z2^2 - 4 z1 z3); {} generators", sing.len())))
    });
    b.run("moment_complete_intersection", || {
        let dim = krull_dimension(&ideal)?;
        Ok((dim == Dimension::Dim(7), format!("dim μ⁻¹(0) = {dim} = 10 - 3")))
    });
    Ok(())
}

/// `-(t⁶ - t⁵ + t⁴ + 2t³ + t² - t + 1) / ((t+1)³ (t²+t+1)³ (t-1)⁷)`.
pub fn poincare_series() -> UniRationalFunction {
    let num = UniPoly::from_ints(&[-1, 1, -1, -2, -1, 1, -1]);
    let den = &(&UniPoly::from_ints(&[1, 1]).pow(3) * &UniPoly::from_ints(&[1, 1, 1]).pow(3)) * &UniPoly::from_ints(&[-1, 1]).pow(7);
    UniRationalFunction::new(num, den).unwrap()
}

/// Numerator of the Hilbert series of thirteen free generators of degrees
/// `2⁴ 3⁶ 4³`, as printed.
pub fn poincare_product_polynomial() -> UniPoly {
    let mut c = vec![0i64; 29];
    for (e, v) in [
        (0, 1),
        (6, -6),
        (7, -8),
        (8, -6),
        (9, 8),
        (10, 24),
        (11, 24),
        (12, 5),
        (13, -24),
        (14, -36),
        (15, -24),
        (16, 5),
        (17, 24),
        (18, 24),
        (19, 8),
        (20, -6),
        (21, -8),
        (22, -6),
        (28, 1),
    ] {
        c[e] = v;
    }
    UniPoly::from_ints(&c)
}

pub fn generator_denominator() -> UniPoly {
    &(&UniPoly::one_minus_t_pow(2).pow(4) * &UniPoly::one_minus_t_pow(3).pow(6)) * &UniPoly::one_minus_t_pow(4).pow(3)
}

pub fn poincare_check() -> VerificationReport {
    let mut b = ReportBuilder::new(
        "poincare",
        "the Poincaré series of (sl_2 ⊕ C^2) doubled starts 1 + 4t^2 + 6t^3 + 13t^4 + 24t^5 and times Π(1 - t^deg) gives the printed polynomial",
        "poincare",
    );
    let p = poincare_series();
    let want: Vec<Rational> = [1, 0, 4, 6, 13, 24].iter().map(|&v| Rational::from_int(v)).collect();
    let got = p.series_expand(5).unwrap();
    b.check("expansion", got == want, format!("coefficients {:?}", got.iter().map(|c| c.to_string()).collect::<Vec<_>>()));
    b.check(
        "product_identity",
        p.identity_check(&generator_denominator(), &poincare_product_polynomial()),
        "P(t)·(1-t^2)^4 (1-t^3)^6 (1-t^4)^3 equals the degree-28 polynomial",
    );
    b.run("invariant_ring_dimensions", || {
        let d = Sl2Double::new();
        let inv = d.invariants();
        let names: Vec<String> = (1..=inv.len()).map(|i| format!("g{i}")).collect();
        let q = RingMapKernelQuery::new(&names, inv.into_iter().map(|(_, p)| p).collect(), Ideal::zero(d.ring()))?;
        let pres = Presentation::compute_with(q, &GroebnerConfig::default().truncated(5))?;
        let dims = graded_quotient_dims(&pres, 5)?;
        Ok((dims == [1, 0, 4, 6, 13, 24], format!("graded dimensions of C[g1..g13]/ker through degree 5: {dims:?}")))
    });
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;

    fn p(r: &Ring, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn pairings_and_discriminant() {
        let r = sym_ring(3);
        let a = BinaryForm::symbolic(&r, "a", 3).unwrap();
        let b = BinaryForm::symbolic(&r, "b", 3).unwrap();
        assert!(sigma_pairing(&a, &a).unwrap().is_zero());
        assert_eq!(sigma_pairing(&a, &b).unwrap(), p(&r, "a0*b3 - a3*b0 - 3*a1*b2 + 3*a2*b1"));
        // x³ against y³
        let x3 = BinaryForm::constant(&r, &[1, 0, 0, 0]).unwrap();
        let y3 = BinaryForm::constant(&r, &[0, 0, 0, 1]).unwrap();
        assert_eq!(sigma_pairing(&x3, &y3).unwrap(), Polynomial::one(&r));
        assert!(discriminant_cubic(&x3).unwrap().is_zero());
        // x²y = 3·(1/3) x²y
        let x2y = BinaryForm::new(vec![Polynomial::zero(&r), Polynomial::constant(&r, Rational::new(1, 3)), Polynomial::zero(&r), Polynomial::zero(&r)]).unwrap();
        assert!(discriminant_cubic(&x2y).unwrap().is_zero());
        // x³ - y³ has distinct roots
        let sep = BinaryForm::constant(&r, &[1, 0, 0, -1]).unwrap();
        assert!(!discriminant_cubic(&sep).unwrap().is_zero());

        let r4 = sym_ring(4);
        let a = BinaryForm::symbolic(&r4, "a", 4).unwrap();
        let self_pair = sigma_pairing(&a, &a).unwrap();
        assert_eq!(self_pair, quartic_q(&a).unwrap().scale(&Rational::from_int(2)));
        assert!(sigma_pairing(&a, &BinaryForm::symbolic(&r, "a", 3).unwrap()).is_err());
    }

    #[test]
    fn polarization_endpoints_and_sum() {
        let r = sym_ring(3);
        let d = polarized_discriminants(&r).unwrap();
        assert_eq!(d.len(), 5);
        let a = BinaryForm::symbolic(&r, "a", 3).unwrap();
        let b = BinaryForm::symbolic(&r, "b", 3).unwrap();
        assert_eq!(d[0], discriminant_cubic(&a).unwrap());
        assert_eq!(d[4], discriminant_cubic(&b).unwrap());
        let sum: Vec<Polynomial> = a.coeffs().iter().zip(b.coeffs()).map(|(x, y)| x + y).collect();
        let total = d.iter().fold(Polynomial::zero(&r), |acc, x| &acc + x);
        assert_eq!(total, discriminant_cubic(&BinaryForm::new(sum).unwrap()).unwrap());
        let r4 = sym_ring(4);
        let (q, c, _) = quartic_invariants(&r4).unwrap();
        assert_eq!((q.len(), c.len()), (3, 4));
    }

    #[test]
    fn form_invariants_are_invariant() {
        let mut rng = sample::rng(2);
        let r3 = sym_ring(3);
        let a3 = BinaryForm::symbolic(&r3, "a", 3).unwrap();
        let b3 = BinaryForm::symbolic(&r3, "b", 3).unwrap();
        let d = polarized_discriminants(&r3).unwrap();
        let f = sigma_pairing(&a3, &b3).unwrap();
        let i3 = sym_moment_ideal(3).unwrap();
        let gb3 = buchberger(&i3, MonomialOrder::GrevLex).unwrap();
        let r4 = sym_ring(4);
        let a4 = BinaryForm::symbolic(&r4, "a", 4).unwrap();
        let b4 = BinaryForm::symbolic(&r4, "b", 4).unwrap();
        let (q, c, t) = quartic_invariants(&r4).unwrap();
        let i4 = sym_moment_ideal(4).unwrap();
        let gb4 = buchberger(&i4, MonomialOrder::GrevLex).unwrap();
        for _ in 0..20 {
            let g = sample::random_sl2(&mut rng);
            let images3: Vec<Polynomial> = a3.act(&g).coeffs().iter().chain(b3.act(&g).coeffs()).cloned().collect();
            for inv in d.iter().chain([&f]) {
                assert_eq!(&inv.map_to(&r3, &images3).unwrap(), inv);
            }
            for gen in i3.generators() {
                assert!(gb3.contains(&gen.map_to(&r3, &images3).unwrap()).unwrap());
            }
            let images4: Vec<Polynomial> = a4.act(&g).coeffs().iter().chain(b4.act(&g).coeffs()).cloned().collect();
            for inv in q.iter().chain(&c).chain([&t]) {
                assert_eq!(&inv.map_to(&r4, &images4).unwrap(), inv);
            }
            for gen in i4.generators() {
                assert!(gb4.contains(&gen.map_to(&r4, &images4).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn moment_ideals_are_bihomogeneous() {
        for d in [3, 4] {
            let ideal = sym_moment_ideal(d).unwrap();
            let r = ideal.ring();
            for g in ideal.generators() {
                for (m, _) in g.terms() {
                    let ea: u16 = m.exponents()[..=d].iter().sum();
                    let eb: u16 = m.exponents()[d + 1..].iter().sum();
                    assert_eq!((ea, eb), (1, 1), "{}", g.to_text(MonomialOrder::GrevLex));
                }
                assert!(crate::poly::same_ring(g.ring(), r));
            }
        }
        assert!(sym_moment_ideal(5).is_err());
    }

    #[test]
    fn reynolds_projects_onto_invariants() {
        let s3 = S3Double::new();
        let r = s3.ring();
        let f = p(r, "u1^3*v2 - 2*u2*v1^2 + v2");
        let once = s3.reynolds(&f);
        assert_eq!(s3.reynolds(&once), once);
        for perm in S3Double::group() {
            assert_eq!(once.map_to(r, &s3.permutation_images(perm)).unwrap(), once);
        }
        let (p2, p3) = s3.invariants().unwrap();
        assert_eq!(p2[0], p(r, "2*u1^2 + 2*u1*u2 + 2*u2^2"));
        assert_eq!(p3.len(), 4);
    }

    #[test]
    fn so3_ideals_match_displayed_generators() {
        let i1 = so3_moment_ideal(1).unwrap();
        let r = i1.ring();
        assert_eq!(i1.generators(), &[p(r, "x1*y2 - x2*y1"), p(r, "x1*y3 - x3*y1"), p(r, "x2*y3 - x3*y2")]);
        let i2 = so3_moment_ideal(2).unwrap();
        let r = i2.ring();
        let want = ["x1*z2 + y1*u2 - x2*z1 - y2*u1", "x1*z3 + y1*u3 - x3*z1 - y3*u1", "x2*z3 + y2*u3 - x3*z2 - y3*u2"];
        for (g, w) in i2.generators().iter().zip(want) {
            assert_eq!(g, &p(r, w));
        }
        assert!(so3_moment_matrix(r, 2).is_skew());
    }

    #[test]
    fn so3_invariants_are_invariant() {
        let mut rng = sample::rng(4);
        let r = so3_ring(4);
        let (t, dets) = so3_invariants(&r, 4);
        assert_eq!((t.len(), dets.len()), (10, 4));
        for _ in 0..5 {
            let g = sample::random_orthogonal(&mut rng, &RatMatrix::identity(3));
            let images: Vec<Polynomial> = (0..4)
                .flat_map(|v| {
                    let r = &r;
                    let g = &g;
                    (0..3).map(move |i| {
                        (0..3).fold(Polynomial::zero(r), |acc, j| &acc + &Polynomial::var(r, 3 * v + j).scale(g.get(i, j)))
                    })
                })
                .collect();
            for (_, inv) in t.iter().chain(&dets) {
                assert_eq!(&inv.map_to(&r, &images).unwrap(), inv);
            }
        }
    }

    #[test]
    fn sl2c2_moment_ideal_as_displayed() {
        let ideal = sl2c2_moment_ideal();
        let r = ideal.ring();
        assert_eq!(
            ideal.generators(),
            &[
                p(r, "2*a11*b12 - 2*a12*b11 + x1*y2"),
                p(r, "a12*b21 - a21*b12 + 1/2*x1*y1 - 1/2*x2*y2"),
                p(r, "2*a21*b11 - 2*a11*b21 + x2*y1"),
            ]
        );
        assert!(ideal.generators().iter().all(|g| g.is_homogeneous() && g.degree() == Some(2)));
        let zero = vec![Rational::zero(); 10];
        assert!(ideal.generators().iter().all(|g| g.evaluate(&zero).is_zero()));
    }

    #[test]
    fn sl2c2_invariants_degrees_and_invariance() {
        let d = Sl2Double::new();
        let inv = d.invariants();
        let degrees: Vec<u32> = inv.iter().map(|(_, p)| p.degree().unwrap()).collect();
        assert_eq!(degrees, vec![2, 2, 2, 2, 3, 3, 4, 3, 3, 4, 3, 3, 4]);
        let r = d.ring();
        // det A = -tr(A²)/2
        let a = d.a();
        let tr = a.checked_mul(&a).unwrap().trace().unwrap();
        assert_eq!(inv[0].1, tr.scale(&Rational::new(-1, 2)));
        assert_eq!(inv[7].1, p(r, "a21*x1^2 - 2*a11*x1*x2 - a12*x2^2"));
        let ideal = sl2c2_moment_ideal();
        let gb = buchberger(&ideal, MonomialOrder::GrevLex).unwrap();
        let mut rng = sample::rng(9);
        for _ in 0..20 {
            let g = sample::random_sl2(&mut rng);
            let images = d.action(&g);
            for (name, f) in &inv {
                assert_eq!(&f.map_to(r, &images).unwrap(), f, "{name}");
            }
            for gen in ideal.generators() {
                assert!(gb.contains(&gen.map_to(r, &images).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn minors_are_multiples_of_relations() {
        let r = quotient_ring();
        let matched = minors_versus_relations(&r);
        assert_eq!(matched.len(), 9);
        let mut idx: Vec<usize> = matched.iter().map(|(i, _)| *i).collect();
        idx.sort_unstable();
        assert_eq!(idx, (0..9).collect::<Vec<_>>());
        assert!(h_ideal().is_homogeneous());
    }

    #[test]
    fn poincare_identities() {
        let r = poincare_check();
        assert_eq!(r.check_passed("expansion"), Some(true));
        assert_eq!(r.check_passed("product_identity"), Some(true));
    }
}
