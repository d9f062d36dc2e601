//! Matrices with polynomial or rational entries: products, determinants,
//! Pfaffians, minor ideals and the skew normal form over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::groebner::{GroebnerError, Ideal};
use crate::poly::{same_ring, PolyError, Polynomial, Ring};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("Pfaffian of odd size {0}")]
    OddSize(usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Dense row-major matrix of polynomials over one ring.
#[derive(Clone, PartialEq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(ring: &Ring, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|e| !same_ring(e.ring(), ring)) {
            return Err(PolyError::RingMismatch.into());
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(ring: &Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix::new(ring, rows, cols, entries).expect("entries from another ring")
    }

    /// Rows of plain-text polynomials.
    pub fn parse(ring: &Ring, rows: &[&[&str]]) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(MatrixError::Dimension("ragged rows".into()));
        }
        let entries = rows
            .iter()
            .flat_map(|row| row.iter())
            .map(|s| Polynomial::parse(ring, s))
            .collect::<Result<Vec<_>, _>>()?;
        PolyMatrix::new(ring, r, c, entries)
    }

    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Self {
        Self::from_fn(ring, rows, cols, |_, _| Polynomial::zero(ring))
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        Self::from_rational(ring, &RatMatrix::identity(n))
    }

    pub fn from_rational(ring: &Ring, m: &RatMatrix) -> Self {
        Self::from_fn(ring, m.rows(), m.cols(), |i, j| Polynomial::constant(ring, m.get(i, j).clone()))
    }

    /// Standard symplectic matrix `((0, I_n), (-I_n, 0))`.
    pub fn symplectic_j(ring: &Ring, n: usize) -> Self {
        Self::from_rational(ring, &RatMatrix::symplectic_j(n))
    }

    /// Split quadratic form `((0, I_m), (I_m, 0))`.
    pub fn split_q(ring: &Ring, m: usize) -> Self {
        Self::from_rational(ring, &RatMatrix::split_q(m))
    }

    /// Jacobian of `polys` with respect to every ring variable.
    pub fn jacobian(ring: &Ring, polys: &[Polynomial]) -> Self {
        Self::from_fn(ring, polys.len(), ring.len(), |i, j| polys[i].partial_derivative(j))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<E>(&self, ring: &Ring, f: impl Fn(&Polynomial) -> Result<Polynomial, E>) -> Result<Self, E> {
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.same_shape(other)?;
        Ok(Self::from_fn(&self.ring, self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j)))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.same_shape(other)?;
        Ok(Self::from_fn(&self.ring, self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j)))
    }

    fn same_shape(&self, other: &Self) -> Result<(), MatrixError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(PolyError::RingMismatch.into());
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(MatrixError::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(PolyError::RingMismatch.into());
        }
        if self.cols != other.rows {
            return Err(MatrixError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(&self.ring, self.rows, other.cols, |i, j| {
            let mut acc = Polynomial::zero(&self.ring);
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        }))
    }

    pub fn scale(&self, c: &Polynomial) -> Self {
        self.map(|e| e * c)
    }

    pub fn trace(&self) -> Result<Polynomial, MatrixError> {
        self.require_square()?;
        Ok((0..self.rows).fold(Polynomial::zero(&self.ring), |acc, i| &acc + self.get(i, i)))
    }

    fn require_square(&self) -> Result<(), MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::Dimension(format!("{}x{} is not square", self.rows, self.cols)));
        }
        Ok(())
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> Result<Polynomial, MatrixError> {
        self.require_square()?;
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.minor(&idx, &idx))
    }

    /// Determinant of the submatrix on the given rows and columns.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        assert_eq!(rows.len(), cols.len());
        match rows.len() {
            0 => Polynomial::one(&self.ring),
            1 => self.get(rows[0], cols[0]).clone(),
            2 => {
                &(self.get(rows[0], cols[0]) * self.get(rows[1], cols[1]))
                    - &(self.get(rows[0], cols[1]) * self.get(rows[1], cols[0]))
            }
            _ => {
                let mut acc = Polynomial::zero(&self.ring);
                let rest = &rows[1..];
                for (k, &c) in cols.iter().enumerate() {
                    let a = self.get(rows[0], c);
                    if a.is_zero() {
                        continue;
                    }
                    let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let term = a * &self.minor(rest, &sub_cols);
                    acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                acc
            }
        }
    }

    /// All `k x k` minors, rows and columns in lexicographic order.
    pub fn minors(&self, k: usize) -> Vec<Polynomial> {
        let mut out = Vec::new();
        for r in combinations(self.rows, k) {
            for c in combinations(self.cols, k) {
                out.push(self.minor(&r, &c));
            }
        }
        out
    }

    pub fn is_skew(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                self.get(i, i).is_zero() && (i + 1..self.rows).all(|j| *self.get(i, j) == -self.get(j, i))
            })
    }

    /// Pfaffian by expansion along the first row; `Pf(J_2) = 1`.
    pub fn pfaffian(&self) -> Result<Polynomial, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSkew);
        }
        if self.rows % 2 == 1 {
            return Err(MatrixError::OddSize(self.rows));
        }
        if !self.is_skew() {
            return Err(MatrixError::NotSkew);
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.pf_rec(&idx))
    }

    fn pf_rec(&self, idx: &[usize]) -> Polynomial {
        if idx.is_empty() {
            return Polynomial::one(&self.ring);
        }
        let mut acc = Polynomial::zero(&self.ring);
        for k in 1..idx.len() {
            let a = self.get(idx[0], idx[k]);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != idx[k]).collect();
            let term = a * &self.pf_rec(&rest);
            acc = if k % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// Pfaffians of all principal `2k x 2k` submatrices.
    pub fn sub_pfaffians(&self, k2: usize) -> Result<Vec<Polynomial>, MatrixError> {
        if !self.is_skew() {
            return Err(MatrixError::NotSkew);
        }
        if k2 % 2 == 1 {
            return Err(MatrixError::OddSize(k2));
        }
        Ok(combinations(self.rows, k2).into_iter().map(|s| self.pf_rec(&s)).collect())
    }

    /// Substitutes rational values for all ring variables.
    pub fn evaluate(&self, point: &[Rational]) -> RatMatrix {
        RatMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).evaluate(point))
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Ideal of all `k x k` minors.
pub fn minor_ideal(a: &PolyMatrix, k: usize) -> Result<Ideal, GroebnerError> {
    Ideal::new(a.ring(), a.minors(k))
}

/// Increasing `k`-subsets of `0..n`.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Dense rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn from_ints(rows: usize, cols: usize, v: &[i64]) -> Self {
        assert_eq!(v.len(), rows * cols);
        Self::from_fn(rows, cols, |i, j| Rational::from_int(v[i * cols + j]))
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| Rational::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn symplectic_j(n: usize) -> Self {
        Self::from_fn(2 * n, 2 * n, |i, j| {
            if j == i + n {
                Rational::one()
            } else if i == j + n {
                Rational::from_int(-1)
            } else {
                Rational::zero()
            }
        })
    }

    pub fn split_q(m: usize) -> Self {
        Self::from_fn(2 * m, 2 * m, |i, j| {
            if j == i + m || i == j + m {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn is_skew(&self) -> bool {
        self.rows == self.cols && *self == -&self.transpose()
    }

    /// Rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_fn(r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Rational::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if !a.is_zero() {
                    acc += &(a * other.get(k, j));
                }
            }
            acc
        }))
    }

    fn echelon(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).recip();
            for j in 0..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in 0..m.cols {
                        let v = m.get(i, j) - &(&f * m.get(r, j));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    pub fn det(&self) -> Result<Rational, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::Dimension("not square".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det = &det * &piv;
            let inv = piv.recip();
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) * &inv;
                for j in c..n {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let (e, piv) = aug.echelon();
        if piv.len() < n || piv[n - 1] >= n {
            return None;
        }
        Some(e.block(0, n, n, 2 * n))
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        self.checked_mul(rhs).expect("dimension mismatch")
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - rhs.get(i, j))
    }
}

impl Neg for &RatMatrix {
    type Output = RatMatrix;
    fn neg(self) -> RatMatrix {
        RatMatrix::from_fn(self.rows, self.cols, |i, j| -self.get(i, j))
    }
}

/// `S` with `(S⁻¹)ᵗ A S⁻¹ = diag(Rᵗ J_{2k} R, 0)`.
#[derive(Clone, Debug)]
pub struct SkewNormalForm {
    pub s: RatMatrix,
    pub s_inv: RatMatrix,
    /// the rank `2k`
    pub rank: usize,
    pub r: RatMatrix,
}

impl SkewNormalForm {
    /// Recomputes `(S⁻¹)ᵗ A S⁻¹` and compares with the block form exactly.
    pub fn verify(&self, a: &RatMatrix) -> bool {
        let n = a.rows();
        let k = self.rank / 2;
        let core = &(&self.r.transpose() * &RatMatrix::symplectic_j(k)) * &self.r;
        let expect = RatMatrix::from_fn(n, n, |i, j| {
            if i < 2 * k && j < 2 * k {
                core.get(i, j).clone()
            } else {
                Rational::zero()
            }
        });
        &(&self.s_inv.transpose() * a) * &self.s_inv == expect && &self.s * &self.s_inv == RatMatrix::identity(n)
    }
}

/// Symplectic Gram–Schmidt over the rationals; always returns `R = I`.
pub fn skew_normal_form(a: &RatMatrix) -> Result<SkewNormalForm, MatrixError> {
    if !a.is_skew() {
        return Err(MatrixError::NotSkew);
    }
    let n = a.rows();
    let form = |u: &[Rational], v: &[Rational]| -> Rational {
        let mut acc = Rational::zero();
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !v[j].is_zero() && !a.get(i, j).is_zero() {
                    acc += &(&(&u[i] * a.get(i, j)) * &v[j]);
                }
            }
        }
        acc
    };
    let mut pool: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    let mut es = Vec::new();
    let mut fs = Vec::new();
    loop {
        let mut found = None;
        'search: for i in 0..pool.len() {
            for j in i + 1..pool.len() {
                let w = form(&pool[i], &pool[j]);
                if !w.is_zero() {
                    found = Some((i, j, w));
                    break 'search;
                }
            }
        }
        let Some((i, j, w)) = found else { break };
        let e = pool[i].clone();
        let winv = w.recip();
        let f: Vec<Rational> = pool[j].iter().map(|x| x * &winv).collect();
        let mut rest = Vec::with_capacity(pool.len() - 2);
        for (k, v) in pool.into_iter().enumerate() {
            if k == i || k == j {
                continue;
            }
            let wf = form(&v, &f);
            let we = form(&v, &e);
            let proj: Vec<Rational> = (0..n).map(|t| &(&v[t] - &(&wf * &e[t])) + &(&we * &f[t])).collect();
            rest.push(proj);
        }
        pool = rest;
        es.push(e);
        fs.push(f);
    }
    let k = es.len();
    let cols: Vec<&Vec<Rational>> = es.iter().chain(fs.iter()).chain(pool.iter()).collect();
    let p = RatMatrix::from_fn(n, n, |i, j| cols[j][i].clone());
    let s = p.inverse().expect("symplectic basis is a basis");
    Ok(SkewNormalForm {
        s,
        s_inv: p,
        rank: 2 * k,
        r: RatMatrix::identity(2 * k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VariableRegistry;
    use proptest::prelude::*;

    fn small_matrix(n: usize) -> impl Strategy<Value = RatMatrix> {
        proptest::collection::vec(-4i64..5, n * n).prop_map(move |v| RatMatrix::from_ints(n, n, &v))
    }

    fn skew_from(n: usize, v: &[i64]) -> RatMatrix {
        let mut m = RatMatrix::zeros(n, n);
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                m.set(i, j, Rational::from_int(v[k]));
                m.set(j, i, Rational::from_int(-v[k]));
                k += 1;
            }
        }
        m
    }

    #[test]
    fn j_times_j_transpose_is_identity() {
        let j = RatMatrix::symplectic_j(3);
        assert_eq!(&j * &j.transpose(), RatMatrix::identity(6));
    }

    #[test]
    fn traceless_chart_matrix() {
        let r = VariableRegistry::new(&["z1", "z2", "z3", "z4", "z5", "z6", "y7", "y8"]).unwrap();
        let m = PolyMatrix::parse(
            &r,
            &[
                &["-2*z2 + z4", "4*z3", "-8*y8"],
                &["-4*z1", "2*z2 + z4", "8*y7"],
                &["-z5", "-z6", "-2*z4"],
            ],
        )
        .unwrap();
        assert!(m.trace().unwrap().is_zero());
    }

    #[test]
    fn pfaffian_small_cases() {
        let r = VariableRegistry::new(&["a", "b", "c", "d", "e", "f"]).unwrap();
        let j2 = PolyMatrix::symplectic_j(&r, 1);
        assert!(j2.pfaffian().unwrap().is_one_poly());
        let m = PolyMatrix::parse(
            &r,
            &[
                &["0", "a", "b", "c"],
                &["-a", "0", "d", "e"],
                &["-b", "-d", "0", "f"],
                &["-c", "-e", "-f", "0"],
            ],
        )
        .unwrap();
        let pf = m.pfaffian().unwrap();
        assert_eq!(pf, Polynomial::parse(&r, "a*f - b*e + c*d").unwrap());
        assert_eq!(pf.pow(2), m.det().unwrap());
        assert!(PolyMatrix::identity(&r, 2).pfaffian().is_err());
        assert!(PolyMatrix::zeros(&r, 3, 3).pfaffian().is_err());
    }

    #[test]
    fn rank_one_outer_product_minors_vanish() {
        let r = VariableRegistry::new(&["u1", "u2", "u3", "v1", "v2", "v3"]).unwrap();
        let u = ["u1", "u2", "u3"];
        let v = ["v1", "v2", "v3"];
        let m = PolyMatrix::from_fn(&r, 3, 3, |i, j| {
            Polynomial::parse(&r, &format!("{}*{}", u[i], v[j])).unwrap()
        });
        assert!(m.minors(2).iter().all(|p| p.is_zero()));
        assert_eq!(minor_ideal(&m, 1).unwrap().len(), 9);
    }

    #[test]
    fn skew_normal_form_of_j_and_zero() {
        let j = RatMatrix::symplectic_j(1);
        let snf = skew_normal_form(&j).unwrap();
        assert_eq!(snf.rank, 2);
        assert_eq!(snf.s, RatMatrix::identity(2));
        assert!(snf.verify(&j));
        let z = RatMatrix::zeros(4, 4);
        let snf = skew_normal_form(&z).unwrap();
        assert_eq!(snf.rank, 0);
        assert_eq!(snf.r.rows(), 0);
        assert!(snf.verify(&z));
    }

    impl Polynomial {
        fn is_one_poly(&self) -> bool {
            self.is_constant() && self.constant_term().is_one()
        }
    }

    proptest! {
        #[test]
        fn det_is_multiplicative(a in small_matrix(3), b in small_matrix(3)) {
            prop_assert_eq!((&a * &b).det().unwrap(), &a.det().unwrap() * &b.det().unwrap());
        }

        #[test]
        fn rational_pfaffian_squares_to_det(v in proptest::collection::vec(-5i64..6, 6)) {
            let a = skew_from(4, &v);
            let r = VariableRegistry::new(&["x"]).unwrap();
            let pa = PolyMatrix::from_rational(&r, &a);
            let pf = pa.pfaffian().unwrap().constant_term();
            prop_assert_eq!(&pf * &pf, a.det().unwrap());
            prop_assert_eq!(pa.det().unwrap().constant_term(), a.det().unwrap());
        }

        // rank-4 skew 6x6 matrices as sums of two random decomposable forms
        #[test]
        fn skew_normal_form_round_trip(v in proptest::collection::vec(-3i64..4, 24)) {
            let u = |k: usize| RatMatrix::from_ints(6, 1, &v[6 * k..6 * k + 6]);
            let wedge = |x: &RatMatrix, y: &RatMatrix| &(x * &y.transpose()) - &(y * &x.transpose());
            let a = &wedge(&u(0), &u(1)) + &wedge(&u(2), &u(3));
            let snf = skew_normal_form(&a).unwrap();
            prop_assert!(snf.verify(&a));
            prop_assert_eq!(snf.rank, a.rank());
            prop_assert!(snf.rank <= 4);
        }

        #[test]
        fn laplace_identity_for_three_minors(v in proptest::collection::vec(-4i64..5, 9)) {
            // each 3x3 minor is an entry-weighted combination of 2x2 minors
            let m = RatMatrix::from_ints(3, 3, &v);
            let r = VariableRegistry::new(&["x"]).unwrap();
            let pm = PolyMatrix::from_rational(&r, &m);
            let two = pm.minors(2);
            // cofactor expansion along row 0 uses the minors on rows {1,2}
            let exp = &(&(pm.get(0, 0) * &two[8]) - &(pm.get(0, 1) * &two[7])) + &(pm.get(0, 2) * &two[6]);
            prop_assert_eq!(exp, pm.det().unwrap());
        }
    }

    #[test]
    fn inverse_round_trip() {
        let a = RatMatrix::from_ints(3, 3, &[2, 1, 0, 0, 1, 3, 1, 0, 1]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, RatMatrix::identity(3));
        assert!(RatMatrix::zeros(2, 2).inverse().is_none());
    }
}
