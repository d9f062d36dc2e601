//! Blow-ups of the `(sl_2 ⊕ ℂ²)`-double quotient `Z ⊂ ℂ⁸` along coordinate
//! centers, worked in affine charts: `Z̃` (center `z4..z8`) and `Y` (center
//! `z4, z7, z8`).

use thiserror::Error;

use crate::groebner::{buchberger, GroebnerError, Ideal};
use crate::ideal::{ideal_equality, krull_dimension, radical_equal, saturation, Dimension};
use crate::matrix::{combinations, PolyMatrix};
use crate::poly::{MonomialOrder, PolyError, Polynomial, Ring, VariableRegistry};
use crate::rational::Rational;
use crate::report::{ReportBuilder, VerificationReport};
use crate::sample::{self, SampleRng};
use crate::sl2::{h_relations, quotient_ring, singular_stratum};

#[derive(Debug, Error)]
pub enum BlowupError {
    #[error("base point is not on Z: {0}")]
    NotOnZ(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

impl BlowupError {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, BlowupError::Groebner(g) if g.is_resource_limit())
    }
}

/// Which blow-up a chart or fiber belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Resolution {
    /// `π: Z̃ → Z`, coordinates `[x4 : … : x8]`.
    Pi,
    /// `π₂: Y → Z`, coordinates `[y4 : y7 : y8]`.
    Pi2,
}

impl Resolution {
    pub fn center(self) -> &'static [usize] {
        match self {
            Resolution::Pi => &[4, 5, 6, 7, 8],
            Resolution::Pi2 => &[4, 7, 8],
        }
    }

    pub fn prefix(self) -> &'static str {
        match self {
            Resolution::Pi => "x",
            Resolution::Pi2 => "y",
        }
    }

    /// `z1..z8` followed by the homogeneous coordinates.
    pub fn joint_ring(self) -> Ring {
        let mut names: Vec<String> = (1..=8).map(|i| format!("z{i}")).collect();
        names.extend(self.center().iter().map(|i| format!("{}{i}", self.prefix())));
        VariableRegistry::new(&names).unwrap()
    }

    /// The 3×3 matrix whose 2×2 minors are the exceptional equations
    /// (`ℓ₁..ℓ₉` resp. `k₁..k₉`), in `joint_ring`.
    pub fn matrix(self, joint: &Ring) -> PolyMatrix {
        let rows: [[&str; 3]; 3] = match self {
            Resolution::Pi => [["2*z2 - z4", "4*z3", "x8"], ["4*z1", "2*z2 + z4", "-x7"], ["x5", "-x6", "1/4*x4^2"]],
            Resolution::Pi2 => [["2*z2 - z4", "4*z3", "y8"], ["4*z1", "2*z2 + z4", "-y7"], ["z5", "-z6", "1/4*z4*y4"]],
        };
        let rows: Vec<&[&str]> = rows.iter().map(|r| r.as_slice()).collect();
        PolyMatrix::parse(joint, &rows).unwrap()
    }

    pub fn exceptional_equations(self, joint: &Ring) -> Vec<Polynomial> {
        self.matrix(joint).minors(2).into_iter().filter(|m| !m.is_zero()).collect()
    }

    /// `z_i u_j - z_j u_i` for the center coordinates.
    pub fn cross_relations(self, joint: &Ring) -> Vec<Polynomial> {
        let c = self.center();
        let mut out = Vec::new();
        for a in 0..c.len() {
            for b in a + 1..c.len() {
                let z = |i: usize| Polynomial::var(joint, i - 1);
                let u = |k: usize| Polynomial::var(joint, 8 + k);
                out.push(&(&z(c[a]) * &u(b)) - &(&z(c[b]) * &u(a)));
            }
        }
        out
    }
}

/// One affine chart `u_j = 1` of a blow-up along a coordinate center.
#[derive(Clone, Debug)]
pub struct BlowupChart {
    pub resolution: Resolution,
    pub ring: Ring,
    pub center: Vec<String>,
    pub chart_var: String,
    pub total_transform: Ideal,
    pub strict_transform: Ideal,
    joint: Ring,
    images: Vec<Polynomial>,
}

impl BlowupChart {
    pub fn new(resolution: Resolution, j: usize) -> Result<Self, BlowupError> {
        let center = resolution.center();
        assert!(center.contains(&j));
        let prefix = resolution.prefix();
        let mut names: Vec<String> = (1..=8).filter(|k| !center.contains(k) || *k == j).map(|k| format!("z{k}")).collect();
        names.extend(center.iter().filter(|&&i| i != j).map(|i| format!("{prefix}{i}")));
        let ring = VariableRegistry::new(&names)?;
        let var = |n: String| Polynomial::var_named(&ring, &n);
        let zj = var(format!("z{j}"))?;
        let mut images = Vec::new();
        for k in 1..=8 {
            images.push(if center.contains(&k) && k != j { &zj * &var(format!("{prefix}{k}"))? } else { var(format!("z{k}"))? });
        }
        for &i in center {
            images.push(if i == j { Polynomial::one(&ring) } else { var(format!("{prefix}{i}"))? });
        }
        let joint = resolution.joint_ring();
        let mut chart = BlowupChart {
            resolution,
            ring: ring.clone(),
            center: center.iter().map(|i| format!("z{i}")).collect(),
            chart_var: format!("{prefix}{j}"),
            total_transform: Ideal::zero(&ring),
            strict_transform: Ideal::zero(&ring),
            joint,
            images,
        };
        let total = h_relations(&quotient_ring()).iter().map(|h| chart.pullback(h)).collect::<Result<Vec<_>, _>>()?;
        chart.total_transform = Ideal::new(&ring, total)?;
        chart.strict_transform = saturation(&chart.total_transform, &zj)?;
        Ok(chart)
    }

    /// Pulls back a polynomial in `z1..z8` (and optionally the homogeneous
    /// coordinates) to the chart.
    pub fn pullback(&self, p: &Polynomial) -> Result<Polynomial, PolyError> {
        p.relabel_by_name(&self.joint)?.map_to(&self.ring, &self.images)
    }

    pub fn exceptional_generator(&self) -> Polynomial {
        let j = &self.chart_var[1..];
        Polynomial::var_named(&self.ring, &format!("z{j}")).unwrap()
    }

    /// The exceptional equations with `u_j = 1` and `z_i = z_j u_i`.
    pub fn dehomogenized_equations(&self) -> Result<Vec<Polynomial>, PolyError> {
        let mut out = Vec::new();
        for e in self.resolution.exceptional_equations(&self.joint) {
            let p = self.pullback(&e)?;
            if !p.is_zero() {
                out.push(p);
            }
        }
        Ok(out)
    }
}

pub fn build_ztilde_charts() -> Result<Vec<BlowupChart>, BlowupError> {
    Resolution::Pi.center().iter().map(|&j| BlowupChart::new(Resolution::Pi, j)).collect()
}

pub fn build_y_charts() -> Result<Vec<BlowupChart>, BlowupError> {
    Resolution::Pi2.center().iter().map(|&j| BlowupChart::new(Resolution::Pi2, j)).collect()
}

/// Jacobian criterion for an equidimensional ideal of codimension `codim`:
/// adds `codim`-minors (reduced, in batches) until the unit ideal appears.
/// Returns whether it did and how many minors were used.
pub fn jacobian_unit(ideal: &Ideal, codim: usize) -> Result<(bool, usize), GroebnerError> {
    let ring = ideal.ring();
    let mut gb = buchberger(ideal, MonomialOrder::GrevLex)?;
    if gb.is_unit() {
        return Ok((true, 0));
    }
    let mut gens = gb.basis().to_vec();
    gens.sort_by_key(|g| (g.degree(), g.len()));
    let jac = PolyMatrix::jacobian(ring, &gens);
    let mut batch = Vec::new();
    let mut used = 0;
    let col_sets = combinations(ring.len(), codim);
    for rows in combinations(gens.len(), codim) {
        for cols in &col_sets {
            let m = jac.minor(&rows, cols);
            if m.is_zero() {
                continue;
            }
            let r = gb.normal_form(&m)?;
            if r.is_zero() {
                continue;
            }
            batch.push(r);
            used += 1;
            if batch.len() >= 16 {
                gb = buchberger(&Ideal::new(ring, [gb.basis(), &batch].concat())?, MonomialOrder::GrevLex)?;
                batch.clear();
                if gb.is_unit() {
                    return Ok((true, used));
                }
            }
        }
    }
    let gb = buchberger(&Ideal::new(ring, [gb.basis(), &batch].concat())?, MonomialOrder::GrevLex)?;
    Ok((gb.is_unit(), used))
}

/// Graph of the chart `x4 = 1` over `(x5, …, x8)`.
pub fn x4_graph_ideal(ring: &Ring) -> Ideal {
    Ideal::parse(
        ring,
        &["z1 + x5*x7", "z2 - x6*x7 - x5*x8", "z3 + x6*x8", "z4 - 2*x6*x7 + 2*x5*x8"],
    )
    .unwrap()
}

/// The local description of `Y` in the chart `y4 = 1`.
pub fn y4_local_matrix(ring: &Ring) -> PolyMatrix {
    PolyMatrix::parse(
        ring,
        &[&["-2*z2 + z4", "4*z3", "-8*y8"], &["-4*z1", "2*z2 + z4", "8*y7"], &["-z5", "-z6", "-2*z4"]],
    )
    .unwrap()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stratum {
    Regular,
    SingularMinusOrigin,
    Origin,
}

#[derive(Clone, Debug)]
pub struct FiberSpec {
    pub base: Vec<Rational>,
    pub stratum: Stratum,
}

impl FiberSpec {
    pub fn new(base: Vec<Rational>, stratum: Stratum) -> Result<Self, BlowupError> {
        let zr = quotient_ring();
        if base.len() != 8 {
            return Err(BlowupError::NotOnZ(format!("{} coordinates", base.len())));
        }
        for (i, h) in h_relations(&zr).iter().enumerate() {
            if !h.evaluate(&base).is_zero() {
                return Err(BlowupError::NotOnZ(format!("h{} = {}", i + 1, h.evaluate(&base))));
            }
        }
        Ok(FiberSpec { base, stratum })
    }

    pub fn from_ints(base: [i64; 8], stratum: Stratum) -> Result<Self, BlowupError> {
        Self::new(base.iter().map(|&v| Rational::from_int(v)).collect(), stratum)
    }
}

/// A point of the regular stratum with `z4 ≠ 0`, from the chart `x4 = 1`.
pub fn regular_point(rng: &mut SampleRng) -> FiberSpec {
    loop {
        let x: Vec<Rational> = (0..4).map(|_| sample::small_nonzero_rational(rng)).collect();
        let (x5, x6, x7, x8) = (&x[0], &x[1], &x[2], &x[3]);
        let z4 = Rational::from_int(2) * (x6 * x7 - x5 * x8);
        if z4.is_zero() {
            continue;
        }
        let base = vec![
            -(x5 * x7),
            x6 * x7 + x5 * x8,
            -(x6 * x8),
            z4.clone(),
            &z4 * x5,
            &z4 * x6,
            &z4 * x7,
            &z4 * x8,
        ];
        return FiberSpec::new(base, Stratum::Regular).expect("graph points lie on Z");
    }
}

/// `ℂ[u_center]`.
pub fn fiber_ring(which: Resolution) -> Ring {
    let names: Vec<String> = which.center().iter().map(|i| format!("{}{i}", which.prefix())).collect();
    VariableRegistry::new(&names).unwrap()
}

/// Equations of the fiber over `base` in the homogeneous coordinates.
pub fn fiber_ideal(base: &[Rational], which: Resolution) -> Result<Ideal, BlowupError> {
    let joint = which.joint_ring();
    let ring = fiber_ring(which);
    let mut images: Vec<Polynomial> = base.iter().map(|c| Polynomial::constant(&ring, c.clone())).collect();
    images.extend((0..ring.len()).map(|i| Polynomial::var(&ring, i)));
    let mut gens = Vec::new();
    for e in which.cross_relations(&joint).into_iter().chain(which.exceptional_equations(&joint)) {
        let p = e.map_to(&ring, &images)?;
        if !p.is_zero() {
            gens.push(p);
        }
    }
    Ok(Ideal::new(&ring, gens)?)
}

/// Points of `ℙ¹` mapped into the fiber over a point of `Z_sing \ {0}`.
pub fn p1_parametrization(base: &[Rational], which: Resolution, a: &Rational, b: &Rational) -> Vec<Rational> {
    let (z1, z2, z3) = (&base[0], &base[1], &base[2]);
    let two = Rational::from_int(2);
    match which {
        Resolution::Pi if !z2.is_zero() => vec![
            a * b,
            &(z2 / &two) * &(b * b),
            -(z3 * &(b * b)),
            &(-(&two * z1) / z2.clone()) * &(a * a),
            a * a,
        ],
        Resolution::Pi if !z1.is_zero() => vec![a * b, a * a, Rational::zero(), -(z1 * &(b * b)), Rational::zero()],
        Resolution::Pi => vec![a * b, Rational::zero(), -(z3 * &(b * b)), Rational::zero(), a * a],
        Resolution::Pi2 if !z2.is_zero() => vec![z2 * b, -(&(&two * z1) * a), z2 * a],
        Resolution::Pi2 if z1.is_zero() => vec![b.clone(), Rational::zero(), a.clone()],
        Resolution::Pi2 => vec![b.clone(), a.clone(), Rational::zero()],
    }
}

fn projective_dimension(d: Dimension) -> Option<i64> {
    d.value().map(|v| v as i64 - 1)
}

/// Fiber of `π` or `π₂` over a stratified base point.
pub fn fiber_check(spec: &FiberSpec, which: Resolution, seed: u64) -> VerificationReport {
    let name = match which {
        Resolution::Pi => "pi",
        Resolution::Pi2 => "pi2",
    };
    let base: Vec<String> = spec.base.iter().map(|c| c.to_string()).collect();
    let mut b = ReportBuilder::new(
        format!("fiber-{name}"),
        format!("fiber of {name} over ({}) [{:?}]", base.join(", "), spec.stratum),
        "fibres",
    );
    let fiber = match fiber_ideal(&spec.base, which) {
        Ok(f) => f,
        Err(e) => {
            b.error("fiber_ideal", e.is_resource_limit(), e.to_string());
            return b.finish();
        }
    };
    b.witness_ideal("fiber", &fiber);
    b.export("fiber", &fiber);
    let ring = fiber.ring().clone();
    let dim = krull_dimension(&fiber);
    let pdim = dim.as_ref().ok().and_then(|d| projective_dimension(*d));
    b.witness(format!("projective dimension {}", pdim.map_or("empty".into(), |d| d.to_string())));
    match spec.stratum {
        Stratum::Regular => {
            let k = which.center().len();
            let point: Vec<Rational> = which.center().iter().map(|&i| spec.base[i - 1].clone()).collect();
            let on = fiber.generators().iter().all(|g| g.evaluate(&point).is_zero());
            let nonzero = point.iter().any(|c| !c.is_zero());
            // z4 = z7 = z8 = 0 off Z_sing: the fiber of π₂ is [1 : 0 : 0]
            let point = if nonzero { point } else { (0..k).map(|i| if i == 0 { Rational::one() } else { Rational::zero() }).collect() };
            let line = PolyMatrix::from_fn(&ring, 2, k, |r, c| {
                if r == 0 {
                    Polynomial::var(&ring, c)
                } else {
                    Polynomial::constant(&ring, point[c].clone())
                }
            });
            let line = Ideal::new(&ring, line.minors(2).into_iter().filter(|m| !m.is_zero()).collect()).unwrap();
            let shown: Vec<String> = point.iter().map(|c| c.to_string()).collect();
            b.check("point_on_fiber", on || !nonzero, format!("[{}]", shown.join(" : ")));
            b.run("single_point", || {
                Ok((radical_equal(&fiber, &line)?, format!("√fiber = ideal of [{}]", shown.join(" : "))))
            });
            b.check("dimension", pdim == Some(0), "projective dimension 0");
        }
        Stratum::SingularMinusOrigin => {
            let mut rng = sample::rng(seed);
            let mut all = true;
            let mut count = 0;
            while count < 12 {
                let a = sample::small_rational(&mut rng);
                let c = sample::small_rational(&mut rng);
                if a.is_zero() && c.is_zero() {
                    continue;
                }
                let p = p1_parametrization(&spec.base, which, &a, &c);
                all &= fiber.generators().iter().all(|g| g.evaluate(&p).is_zero());
                count += 1;
            }
            let edge = p1_parametrization(&spec.base, which, &Rational::one(), &Rational::zero());
            all &= fiber.generators().iter().all(|g| g.evaluate(&edge).is_zero());
            b.check("parametrization", all, format!("{} sampled (a:b) plus (1:0) satisfy the fiber equations", count));
            b.check("dimension", pdim == Some(1), "projective dimension 1 (affine cone of dimension 2)");
        }
        Stratum::Origin => match which {
            Resolution::Pi => {
                b.run("two_planes", || {
                    let expected = Ideal::parse(&ring, &["x5", "x6"])?.product(&Ideal::parse(&ring, &["x7", "x8"])?)?;
                    Ok((ideal_equality(&fiber, &expected)?, "fiber = (x5, x6)(x7, x8)".into()))
                });
                b.run("planes_meet_in_a_point", || {
                    let e1 = Ideal::parse(&ring, &["x5", "x6"])?;
                    let e2 = Ideal::parse(&ring, &["x7", "x8"])?;
                    let meet = e1.sum(&e2)?;
                    let d1 = projective_dimension(krull_dimension(&e1)?);
                    let d2 = projective_dimension(krull_dimension(&e2)?);
                    let dm = projective_dimension(krull_dimension(&meet)?);
                    let at = [1, 0, 0, 0, 0].map(Rational::from_int);
                    let through = meet.generators().iter().all(|g| g.evaluate(&at).is_zero());
                    Ok((
                        d1 == Some(2) && d2 == Some(2) && dm == Some(0) && through,
                        format!("E1, E2 planes (dims {d1:?}, {d2:?}); E1 ∩ E2 = [1:0:0:0:0]"),
                    ))
                });
                b.check("dimension", pdim == Some(2), "projective dimension 2");
            }
            Resolution::Pi2 => {
                b.check("whole_plane", fiber.generators().is_empty(), "no equations: the fiber is all of P^2");
                b.check("dimension", pdim == Some(2), "projective dimension 2");
            }
        },
    }
    b.finish()
}

/// Fiber projective dimensions over the three strata of `π`, as measured.
pub fn fiber_dimensions(seed: u64) -> Result<[Option<i64>; 3], BlowupError> {
    let mut rng = sample::rng(seed);
    let points = [regular_point(&mut rng), FiberSpec::from_ints([1, 2, 1, 0, 0, 0, 0, 0], Stratum::SingularMinusOrigin)?, FiberSpec::from_ints([0; 8], Stratum::Origin)?];
    let mut out = [None; 3];
    for (k, p) in points.iter().enumerate() {
        out[k] = projective_dimension(krull_dimension(&fiber_ideal(&p.base, Resolution::Pi)?)?);
    }
    Ok(out)
}

pub fn semismall_check(seed: u64) -> VerificationReport {
    let mut b = ReportBuilder::new(
        "semismall",
        "π: Z~ → Z is semismall: fiber dimensions (0, 1, 2) equal half the stratum codimensions",
        "semismall",
    );
    let dims = match fiber_dimensions(seed) {
        Ok(d) => d,
        Err(e) => {
            b.error("fibers", e.is_resource_limit(), e.to_string());
            return b.finish();
        }
    };
    let zr = quotient_ring();
    b.run("table", || {
        let z = krull_dimension(&Ideal::new(&zr, h_relations(&zr))?)?;
        let zs = krull_dimension(&singular_stratum(&zr))?;
        let origin = krull_dimension(&Ideal::new(&zr, (0..8).map(|i| Polynomial::var(&zr, i)).collect())?)?;
        let dz = z.value().unwrap_or(0) as i64;
        let codims: Vec<i64> = [z, zs, origin].iter().map(|d| dz - d.value().unwrap_or(0) as i64).collect();
        let ok = codims == [0, 2, 4]
            && dims.iter().zip(&codims).all(|(f, c)| f.map_or(false, |f| 2 * f == *c))
            && dims.windows(2).all(|w| w[0] <= w[1]);
        Ok((ok, format!("fiber dims {dims:?} vs half codims of (Z, Z_sing, 0) with codims {codims:?}")))
    });
    b.finish()
}

/// `codim (π⁻¹ I_S) = 1` on every chart of `Z̃`, for `I_S = (z4, z7, z8, z2² - 4 z1 z3)`.
pub fn divisor_codim_check(charts: &[BlowupChart]) -> VerificationReport {
    let mut b = ReportBuilder::new(
        "divisor",
        "the pullback of I_S to Z~ has codimension 1 in every chart",
        "divisor",
    );
    let zr = quotient_ring();
    let is = Ideal::parse(&zr, &["z4", "z7", "z8", "z2^2 - 4*z1*z3"]).unwrap();
    for chart in charts {
        b.run(&format!("codim_{}", chart.chart_var), || {
            let pulled = is.generators().iter().map(|g| chart.pullback(g)).collect::<Result<Vec<_>, _>>()?;
            let strict = &chart.strict_transform;
            let d0 = krull_dimension(strict)?;
            let d1 = krull_dimension(&strict.with_generators(&pulled)?)?;
            let codim = d0.value().zip(d1.value()).map(|(a, c)| a as i64 - c as i64);
            Ok((codim == Some(1), format!("dim {d0} → {d1}")))
        });
    }
    if let Some(chart) = charts.first() {
        b.run("unit_sentinel", || {
            let d = krull_dimension(&chart.strict_transform.with_generators(&[Polynomial::one(&chart.ring)])?)?;
            Ok((d == Dimension::Empty, format!("pullback of the unit ideal: {d}")))
        });
    }
    b.finish()
}

/// `z5 ↔ z7`, `z6 ↔ z8`, optionally with `z4 ↦ -z4`.
pub fn swap_images(ring: &Ring, negate_z4: bool) -> Vec<Polynomial> {
    let mut images: Vec<Polynomial> = [0, 1, 2, 3, 6, 7, 4, 5].iter().map(|&i| Polynomial::var(ring, i)).collect();
    if negate_z4 {
        images[3] = -&images[3];
    }
    images
}

fn map_ideal(ideal: &Ideal, images: &[Polynomial]) -> Result<Ideal, GroebnerError> {
    let ring = ideal.ring();
    let moved = ideal.generators().iter().map(|g| g.map_to(ring, images)).collect::<Result<Vec<_>, _>>()?;
    Ideal::new(ring, moved)
}

pub fn blowup_report(seed: u64) -> VerificationReport {
    let mut b = ReportBuilder::new(
        "blowup",
        "Z~ = Bl_{Z_sing} Z is smooth with fibers point / P^1 / E1 ∪ E2, semismall; Y = Bl_S Z is locally the rank ≤ 1 locus in sl_3; S pulls back to a divisor",
        "blow-up",
    );
    if let Err(e) = blowup_inner(&mut b, seed) {
        b.error("construction", e.is_resource_limit(), e.to_string());
    }
    b.finish()
}

fn blowup_inner(b: &mut ReportBuilder, seed: u64) -> Result<(), BlowupError> {
    let zr = quotient_ring();
    let h = Ideal::new(&zr, h_relations(&zr))?;
    let charts = build_ztilde_charts()?;
    for chart in &charts {
        let v = &chart.chart_var;
        b.export(&format!("strict_{v}"), &chart.strict_transform);
        b.run(&format!("{v}/exceptional_equations"), || {
            let gb = buchberger(&chart.strict_transform, MonomialOrder::GrevLex)?;
            let eqs = chart.dehomogenized_equations()?;
            for e in &eqs {
                if !gb.contains(e)? {
                    return Ok((false, format!("{e} not in the strict transform")));
                }
            }
            Ok((true, format!("{} dehomogenized ℓ's lie in the strict transform", eqs.len())))
        });
        b.run(&format!("{v}/saturated"), || {
            let again = saturation(&chart.strict_transform, &chart.exceptional_generator())?;
            Ok((ideal_equality(&again, &chart.strict_transform)?, "saturating again changes nothing".into()))
        });
        b.run(&format!("{v}/dimension"), || {
            let d = krull_dimension(&chart.strict_transform)?;
            Ok((d == Dimension::Dim(4), format!("dim {d}")))
        });
        b.run(&format!("{v}/smooth"), || {
            let (unit, used) = jacobian_unit(&chart.strict_transform, 4)?;
            Ok((unit, format!("strict transform + {used} Jacobian 4x4 minors = (1)")))
        });
    }
    let x4 = &charts[0];
    b.run("x4/graph", || {
        Ok((
            ideal_equality(&x4.strict_transform, &x4_graph_ideal(&x4.ring))?,
            "z1 = -x5x7, z2 = x6x7 + x5x8, z3 = -x6x8, z4 = 2(x6x7 - x5x8)".into(),
        ))
    });

    let mut rng = sample::rng(seed);
    let regular = regular_point(&mut rng);
    let fibers = [
        (regular.clone(), Resolution::Pi),
        (FiberSpec::from_ints([1, 2, 1, 0, 0, 0, 0, 0], Stratum::SingularMinusOrigin)?, Resolution::Pi),
        (FiberSpec::from_ints([1, 0, 0, 0, 0, 0, 0, 0], Stratum::SingularMinusOrigin)?, Resolution::Pi),
        (FiberSpec::from_ints([0, 0, 1, 0, 0, 0, 0, 0], Stratum::SingularMinusOrigin)?, Resolution::Pi),
        (FiberSpec::from_ints([0; 8], Stratum::Origin)?, Resolution::Pi),
        (regular, Resolution::Pi2),
        (FiberSpec::from_ints([0, 0, 0, 0, 1, 0, 0, 0], Stratum::Regular)?, Resolution::Pi2),
        (FiberSpec::from_ints([1, 2, 1, 0, 0, 0, 0, 0], Stratum::SingularMinusOrigin)?, Resolution::Pi2),
        (FiberSpec::from_ints([0, 0, 1, 0, 0, 0, 0, 0], Stratum::SingularMinusOrigin)?, Resolution::Pi2),
        (FiberSpec::from_ints([0; 8], Stratum::Origin)?, Resolution::Pi2),
    ];
    for (k, (spec, which)) in fibers.iter().enumerate() {
        b.include(&format!("fiber{k}"), fiber_check(spec, *which, seed.wrapping_add(k as u64)));
    }
    b.include("semismall", semismall_check(seed));
    b.include("divisor", divisor_codim_check(&charts));

    let ycharts = build_y_charts()?;
    for chart in &ycharts {
        let v = &chart.chart_var;
        b.export(&format!("strict_{v}"), &chart.strict_transform);
        b.run(&format!("{v}/exceptional_equations"), || {
            let gb = buchberger(&chart.strict_transform, MonomialOrder::GrevLex)?;
            let eqs = chart.dehomogenized_equations()?;
            let ok = eqs.iter().map(|e| gb.contains(e)).collect::<Result<Vec<_>, _>>()?.into_iter().all(|x| x);
            Ok((ok, format!("{} dehomogenized k's lie in the strict transform", eqs.len())))
        });
        b.run(&format!("{v}/dimension"), || {
            let d = krull_dimension(&chart.strict_transform)?;
            Ok((d == Dimension::Dim(4), format!("dim {d}")))
        });
    }
    let y4 = &ycharts[0];
    let local = y4_local_matrix(&y4.ring);
    b.check("y4/trace_zero", local.trace().map(|t| t.is_zero()).unwrap_or(false), "trace of the local matrix is 0");
    b.run("y4/rank_one_locus", || {
        let minors = Ideal::new(&y4.ring, local.minors(2).into_iter().filter(|m| !m.is_zero()).collect())?;
        let det = local.det().map_err(|e| GroebnerError::InvalidInput(e.to_string()))?;
        let det_ok = buchberger(&minors, MonomialOrder::GrevLex)?.contains(&det)?;
        Ok((
            ideal_equality(&minors, &y4.strict_transform)? && det_ok,
            "strict transform = 2x2 minors of the local matrix; its determinant reduces to 0".into(),
        ))
    });
    b.run("swap_automorphism", || {
        let moved = map_ideal(&h, &swap_images(&zr, false))?;
        let gb = buchberger(&h, MonomialOrder::GrevLex)?;
        let mut outside = Vec::new();
        for (i, g) in moved.generators().iter().enumerate() {
            if !gb.contains(g)? {
                outside.push(format!("h{}", i + 1));
            }
        }
        let detail = if outside.is_empty() {
            "z5 ↔ z7, z6 ↔ z8 preserves (h1..h9)".to_string()
        } else {
            format!("images of {} under z5 ↔ z7, z6 ↔ z8 leave (h1..h9)", outside.join(", "))
        };
        Ok((outside.is_empty() && ideal_equality(&moved, &h)?, detail))
    });
    b.run("swap_with_z4_negated", || {
        let moved = map_ideal(&h, &swap_images(&zr, true))?;
        Ok((ideal_equality(&moved, &h)?, "z5 ↔ z7, z6 ↔ z8, z4 ↦ -z4 preserves (h1..h9)".into()))
    });
    Ok(())
}
