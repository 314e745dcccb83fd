//! Dense matrices over arbitrary ring elements.
//!
//! Determinants come in two flavors: the Leibniz sum as an oracle for
//! small sizes, and a division-free Samuelson-Berkowitz characteristic
//! polynomial for production use (the entry rings here are polynomial
//! rings and group algebras, which have no division).

use std::fmt;

use crate::error::{Error, Result};
use crate::rings::rational::Rational;
use crate::rings::{Invertibility, Ring, Value};

/// Row-major dense matrix; all entries share one ring descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entry_ring: Ring,
    entries: Vec<Value>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entry_ring: Ring, entries: Vec<Value>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Structure(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        for e in &entries {
            if e.ring() != entry_ring {
                return Err(Error::Structure(format!(
                    "entry ring {} != matrix ring {}",
                    e.ring(),
                    entry_ring
                )));
            }
        }
        Ok(Matrix { rows, cols, entry_ring, entries })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        entry_ring: Ring,
        mut f: impl FnMut(usize, usize) -> Value,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix::new(rows, cols, entry_ring, entries)
    }

    pub fn zero(rows: usize, cols: usize, ring: Ring) -> Self {
        let z = ring.zero();
        Matrix {
            rows,
            cols,
            entry_ring: ring,
            entries: vec![z; rows * cols],
        }
    }

    pub fn identity(n: usize, ring: Ring) -> Self {
        let mut m = Matrix::zero(n, n, ring.clone());
        for i in 0..n {
            m.entries[i * n + i] = ring.one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entry_ring(&self) -> &Ring {
        &self.entry_ring
    }

    pub fn get(&self, i: usize, j: usize) -> &Value {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Value) -> Result<()> {
        if v.ring() != self.entry_ring {
            return Err(Error::Structure("entry ring mismatch on set".into()));
        }
        self.entries[i * self.cols + j] = v;
        Ok(())
    }

    pub fn entries(&self) -> &[Value] {
        &self.entries
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        if self.entry_ring != other.entry_ring {
            return Err(Error::Structure("matrix entry ring mismatch".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Structure("matrix shape mismatch in add".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, entry_ring: self.entry_ring.clone(), entries })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entry_ring: self.entry_ring.clone(),
            entries: self.entries.iter().map(Value::neg).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::Structure("matrix shape mismatch in mul".into()));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = self.entry_ring.zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j))?)?;
                }
                entries.push(acc);
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            entry_ring: self.entry_ring.clone(),
            entries,
        })
    }

    pub fn scale(&self, c: &Value) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.mul(c))
            .collect::<Result<_>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, entry_ring: self.entry_ring.clone(), entries })
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            entry_ring: self.entry_ring.clone(),
            entries,
        }
    }

    pub fn map_entries(
        &self,
        target_ring: Ring,
        f: impl Fn(&Value) -> Result<Value>,
    ) -> Result<Self> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>>>()?;
        Matrix::new(self.rows, self.cols, target_ring, entries)
    }

    pub fn submatrix(&self, row0: usize, col0: usize, rows: usize, cols: usize) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(self.get(row0 + i, col0 + j).clone());
            }
        }
        Matrix { rows, cols, entry_ring: self.entry_ring.clone(), entries }
    }

    /// Delete one row and one column (for cofactor expansion).
    fn minor(&self, row: usize, col: usize) -> Self {
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in 0..self.rows {
            if i == row {
                continue;
            }
            for j in 0..self.cols {
                if j == col {
                    continue;
                }
                entries.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            entry_ring: self.entry_ring.clone(),
            entries,
        }
    }

    fn require_commutative(&self, what: &str) -> Result<()> {
        if !self.entry_ring.is_commutative() {
            return Err(Error::Precondition(format!(
                "{what} requires a commutative entry ring"
            )));
        }
        Ok(())
    }

    /// Leibniz-sum determinant, the oracle: sum over permutations of
    /// sgn(s) X_{s(1)1} X_{s(2)2} ... X_{s(m)m}. Sizes above 6 are refused.
    pub fn det_leibniz(&self) -> Result<Value> {
        if !self.is_square() {
            return Err(Error::Structure("determinant of a non-square matrix".into()));
        }
        self.require_commutative("det_leibniz")?;
        let n = self.rows;
        if n > 6 {
            return Err(Error::Precondition(
                "det_leibniz is an oracle for sizes <= 6".into(),
            ));
        }
        if n == 0 {
            return Ok(self.entry_ring.one());
        }
        let mut acc = self.entry_ring.zero();
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            let sign = permutation_sign(&perm);
            let mut term = self.entry_ring.one();
            for (col, &row) in perm.iter().enumerate() {
                term = term.mul(self.get(row, col))?;
            }
            if sign < 0 {
                term = term.neg();
            }
            acc = acc.add(&term)?;
            if !next_permutation(&mut perm) {
                break;
            }
        }
        Ok(acc)
    }

    /// Characteristic polynomial Det(xI - X) by Samuelson-Berkowitz,
    /// division-free over any commutative entry ring. Returns the
    /// coefficient vector c with c[k] the coefficient of x^k; c[n] = 1.
    pub fn charpoly_divfree(&self) -> Result<Vec<Value>> {
        if !self.is_square() {
            return Err(Error::Structure("charpoly of a non-square matrix".into()));
        }
        self.require_commutative("charpoly_divfree")?;
        let n = self.rows;
        let ring = &self.entry_ring;
        // Coefficients stored highest degree first during the iteration.
        let mut coeffs: Vec<Value> = vec![ring.one()];
        for k in 1..=n {
            // Toeplitz column t for the k-th leading principal minor:
            // t[0] = 1, t[1] = -X_kk, t[i] = -(R A^{i-2} S).
            let mut t: Vec<Value> = Vec::with_capacity(k + 1);
            t.push(ring.one());
            t.push(self.get(k - 1, k - 1).neg());
            if k >= 2 {
                let r: Vec<&Value> = (0..k - 1).map(|j| self.get(k - 1, j)).collect();
                let mut v: Vec<Value> = (0..k - 1).map(|i| self.get(i, k - 1).clone()).collect();
                for step in 2..=k {
                    let mut dot = ring.zero();
                    for (rj, vj) in r.iter().zip(&v) {
                        dot = dot.add(&rj.mul(vj)?)?;
                    }
                    t.push(dot.neg());
                    if step < k {
                        // v <- A v with A the (k-1)x(k-1) leading block.
                        let mut next = Vec::with_capacity(k - 1);
                        for i in 0..k - 1 {
                            let mut acc = ring.zero();
                            for (j, vj) in v.iter().enumerate() {
                                acc = acc.add(&self.get(i, j).mul(vj)?)?;
                            }
                            next.push(acc);
                        }
                        v = next;
                    }
                }
            }
            // coeffs <- T_k * coeffs (lower-triangular Toeplitz product).
            let mut next = vec![ring.zero(); k + 1];
            for (j, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (d, td) in t.iter().enumerate() {
                    if j + d > k {
                        break;
                    }
                    if td.is_zero() {
                        continue;
                    }
                    next[j + d] = next[j + d].add(&td.mul(c)?)?;
                }
            }
            coeffs = next;
        }
        coeffs.reverse();
        Ok(coeffs)
    }

    /// Division-free determinant via the characteristic polynomial:
    /// det X = (-1)^n * (constant term of Det(xI - X)).
    pub fn det_divfree(&self) -> Result<Value> {
        let n = self.rows;
        if n == 0 {
            return Ok(self.entry_ring.one());
        }
        if n == 1 {
            self.require_commutative("det_divfree")?;
            return Ok(self.get(0, 0).clone());
        }
        if n == 2 {
            self.require_commutative("det_divfree")?;
            let ad = self.get(0, 0).mul(self.get(1, 1))?;
            let bc = self.get(0, 1).mul(self.get(1, 0))?;
            return ad.sub(&bc);
        }
        let coeffs = self.charpoly_divfree()?;
        let c0 = coeffs[0].clone();
        Ok(if n % 2 == 1 { c0.neg() } else { c0 })
    }

    /// The characteristic polynomial rendered as a sparse polynomial in
    /// one fresh variable, for matrices over the scalar rings (over
    /// group-algebra entry rings the coefficient vector of
    /// `charpoly_divfree` is the representation).
    pub fn charpoly_as_poly(&self, var: &str) -> Result<crate::rings::poly::Poly> {
        use crate::rings::poly::{Poly, Scalar, ScalarRing, VarSet};
        let base = match &self.entry_ring {
            Ring::Rational => ScalarRing::Rational,
            Ring::Cyclotomic(n) => ScalarRing::Cyclotomic(*n),
            other => {
                return Err(Error::Structure(format!(
                    "characteristic polynomial rendering needs scalar entries, got {other}"
                )))
            }
        };
        let vars = VarSet::new(vec![var.to_string()]);
        let coeffs = self.charpoly_divfree()?;
        let terms = coeffs
            .into_iter()
            .enumerate()
            .map(|(k, c)| {
                let s = match c {
                    Value::Rat(r) => Scalar::Rat(r),
                    Value::Cyc(cy) => Scalar::Cyc(cy),
                    _ => unreachable!("scalar entry ring"),
                };
                (vec![k as u32], s)
            })
            .collect();
        Poly::from_terms(vars, base, terms)
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let a = self.get(i / other.rows, j / other.cols);
                let b = other.get(i % other.rows, j % other.cols);
                entries.push(a.mul(b)?);
            }
        }
        Ok(Matrix { rows, cols, entry_ring: self.entry_ring.clone(), entries })
    }

    /// The inner block-Leibniz sum of the commuting-block determinant
    /// theorem: over the n x n grid of m x m blocks, sum over S_n of
    /// sgn(s) X^{(1,s(1))} ... X^{(n,s(n))} with products in that order.
    pub fn block_det_inner(&self, m: usize) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Structure("block determinant of non-square matrix".into()));
        }
        if m == 0 || !self.rows.is_multiple_of(m) {
            return Err(Error::Structure(format!(
                "block size {m} does not divide matrix size {}",
                self.rows
            )));
        }
        let n = self.rows / m;
        if n > 6 {
            return Err(Error::Precondition(
                "block-Leibniz sum restricted to <= 6 blocks per side".into(),
            ));
        }
        let block = |k: usize, l: usize| self.submatrix(k * m, l * m, m, m);
        let mut acc = Matrix::zero(m, m, self.entry_ring.clone());
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            let sign = permutation_sign(&perm);
            let mut term = Matrix::identity(m, self.entry_ring.clone());
            for (k, &l) in perm.iter().enumerate() {
                term = term.mul(&block(k, l))?;
            }
            if sign < 0 {
                term = term.neg();
            }
            acc = acc.add(&term)?;
            if !next_permutation(&mut perm) {
                break;
            }
        }
        Ok(acc)
    }

    /// Inclusion M(m, M(r, B)) -> M(mr, B): expand matrix-valued entries
    /// into blocks.
    pub fn flatten(&self) -> Result<Self> {
        let (r, inner_ring) = match &self.entry_ring {
            Ring::Matrix { size, entry } => (*size, entry.as_ref().clone()),
            _ => {
                return Err(Error::Structure(
                    "flatten requires matrix-valued entries".into(),
                ))
            }
        };
        let rows = self.rows * r;
        let cols = self.cols * r;
        let mut out = Matrix::zero(rows, cols, inner_ring);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let blockv = match self.get(i, j) {
                    Value::Mat(b) => b,
                    _ => return Err(Error::Structure("non-matrix entry".into())),
                };
                if !blockv.is_square() || blockv.rows() != r {
                    return Err(Error::Structure("ragged block sizes".into()));
                }
                for u in 0..r {
                    for v in 0..r {
                        out.entries[(i * r + u) * cols + (j * r + v)] =
                            blockv.get(u, v).clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Inverse of flatten: view an (mr x mr) matrix as m x m over M(r, B).
    pub fn unflatten(&self, r: usize) -> Result<Self> {
        if !self.is_square() || r == 0 || !self.rows.is_multiple_of(r) {
            return Err(Error::Structure(format!(
                "cannot unflatten {}x{} into {r}-blocks",
                self.rows, self.cols
            )));
        }
        let m = self.rows / r;
        let block_ring = Ring::Matrix {
            size: r,
            entry: Box::new(self.entry_ring.clone()),
        };
        Matrix::from_fn(m, m, block_ring, |i, j| {
            Value::Mat(self.submatrix(i * r, j * r, r, r))
        })
    }

    /// Entrywise complex conjugation (cyclotomic entries).
    pub fn conj_entries(&self) -> Result<Self> {
        self.map_entries(self.entry_ring.clone(), |v| v.conj())
    }

    /// Matrix inverse over a field entry ring by Gauss-Jordan
    /// elimination. Returns None for singular input.
    pub fn inverse_field(&self) -> Result<Option<Self>> {
        if !self.is_square() {
            return Err(Error::Structure("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let ring = self.entry_ring.clone();
        let mut work = self.clone();
        let mut inv = Matrix::identity(n, ring.clone());
        for col in 0..n {
            // Find a row with an invertible pivot.
            let mut pivot_row = None;
            for r in col..n {
                if let Invertibility::Invertible(p) = work.get(r, col).try_invert()? {
                    pivot_row = Some((r, p));
                    break;
                }
            }
            let (prow, pinv) = match pivot_row {
                Some(x) => x,
                None => {
                    // Over a field all nonzero entries are invertible, so
                    // an all-zero (or non-invertible) column means singular.
                    if (col..n).all(|r| work.get(r, col).is_zero()) {
                        return Ok(None);
                    }
                    return Err(Error::Precondition(
                        "entry ring does not support elimination (non-invertible pivot)".into(),
                    ));
                }
            };
            if prow != col {
                for j in 0..n {
                    work.entries.swap(col * n + j, prow * n + j);
                    inv.entries.swap(col * n + j, prow * n + j);
                }
            }
            for j in 0..n {
                let w = work.get(col, j).mul(&pinv)?;
                work.entries[col * n + j] = w;
                let iv = inv.get(col, j).mul(&pinv)?;
                inv.entries[col * n + j] = iv;
            }
            for r in 0..n {
                if r == col || work.get(r, col).is_zero() {
                    continue;
                }
                let factor = work.get(r, col).clone();
                for j in 0..n {
                    let w = work.get(r, j).sub(&factor.mul(work.get(col, j))?)?;
                    work.entries[r * n + j] = w;
                    let iv = inv.get(r, j).sub(&factor.mul(inv.get(col, j))?)?;
                    inv.entries[r * n + j] = iv;
                }
            }
        }
        Ok(Some(inv))
    }

    /// Matrix inverse over any commutative entry ring whose determinant
    /// is a unit: adjugate divided by the determinant. None when the
    /// determinant is not a unit.
    pub fn inverse_via_adjugate(&self) -> Result<Option<Self>> {
        if !self.is_square() {
            return Err(Error::Structure("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let det = self.det_divfree()?;
        let det_inv = match det.try_invert()? {
            Invertibility::Invertible(v) => v,
            Invertibility::NotInvertible => return Ok(None),
            Invertibility::Undecidable(msg) => {
                return Err(Error::Precondition(format!(
                    "cannot decide invertibility of determinant: {msg}"
                )))
            }
        };
        if n == 0 {
            return Ok(Some(self.clone()));
        }
        let mut adj = Matrix::zero(n, n, self.entry_ring.clone());
        for i in 0..n {
            for j in 0..n {
                let cof = self.minor(i, j).det_divfree()?;
                let signed = if (i + j) % 2 == 1 { cof.neg() } else { cof };
                // Adjugate is the transpose of the cofactor matrix.
                adj.entries[j * n + i] = signed;
            }
        }
        Ok(Some(adj.scale(&det_inv)?))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// A permutation of {0, ..., N-1} given by its image vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(Error::Structure("image is not a bijection".into()));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    pub fn size(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn sign(&self) -> i32 {
        permutation_sign(&self.image)
    }

    /// Composition in diagram order: (self.then(t))(i) = t(self(i)).
    /// With this convention (s.then(t)) . X = s . (t . X) for the matrix
    /// action below.
    pub fn then(&self, t: &Permutation) -> Result<Permutation> {
        if self.size() != t.size() {
            return Err(Error::Structure("permutation size mismatch".into()));
        }
        Ok(Permutation {
            image: self.image.iter().map(|&i| t.image[i]).collect(),
        })
    }
}

/// The reversal permutation sigma(m, n) on mn points: in 1-based terms it
/// maps m(k-1) + l to n(l-1) + k for k in [n], l in [m].
pub fn sigma_perm(m: usize, n: usize) -> Permutation {
    let mut image = vec![0; m * n];
    for p in 0..m * n {
        let k = p / m; // k-1 in the 1-based formula
        let l = p % m; // l-1
        image[p] = n * l + k;
    }
    Permutation { image }
}

/// The symmetric-group action s . X := (X_{s(i), s(j)}).
pub fn perm_action(sigma: &Permutation, x: &Matrix) -> Result<Matrix> {
    if !x.is_square() || sigma.size() != x.rows() {
        return Err(Error::Structure("permutation size != matrix size".into()));
    }
    Matrix::from_fn(x.rows(), x.cols(), x.entry_ring().clone(), |i, j| {
        x.get(sigma.apply(i), sigma.apply(j)).clone()
    })
}

fn permutation_sign(perm: &[usize]) -> i32 {
    let mut sign = 1;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Lexicographic next permutation; false when wrapped around.
fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Basis of the rational nullspace of a rational matrix (rows of
/// coefficients), via Gaussian elimination.
pub fn rational_nullspace(rows: &[Vec<Rational>], unknowns: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let nrows = m.len();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..unknowns {
        let pivot = (rank..nrows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        let inv = m[rank][col].inverse().unwrap();
        for j in col..unknowns {
            m[rank][j] = &m[rank][j] * &inv;
        }
        for r in 0..nrows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..unknowns {
                    m[r][j] = &m[r][j] - &(&f * &m[rank][j]);
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    let free_cols: Vec<usize> = (0..unknowns).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free_cols {
        let mut v = vec![Rational::zero(); unknowns];
        v[fc] = Rational::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -&m[r][fc];
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::rational::Rational;

    fn rat_mat(rows: usize, cols: usize, vals: &[i64]) -> Matrix {
        Matrix::new(
            rows,
            cols,
            Ring::Rational,
            vals.iter().map(|&v| Value::Rat(Rational::from_integer(v))).collect(),
        )
        .unwrap()
    }

    #[test]
    fn leibniz_identity_and_zero_row() {
        let id = Matrix::identity(3, Ring::Rational);
        assert!(id.det_leibniz().unwrap().is_one());
        let z = rat_mat(2, 2, &[0, 0, 5, 7]);
        assert!(z.det_leibniz().unwrap().is_zero());
    }

    #[test]
    fn charpoly_rotation() {
        // [[0,-1],[1,0]] has characteristic polynomial x^2 + 1.
        let m = rat_mat(2, 2, &[0, -1, 1, 0]);
        let coeffs = m.charpoly_divfree().unwrap();
        assert_eq!(coeffs.len(), 3);
        assert!(coeffs[0].is_one());
        assert!(coeffs[1].is_zero());
        assert!(coeffs[2].is_one());
    }

    #[test]
    fn charpoly_zero_matrix() {
        let m = Matrix::zero(4, 4, Ring::Rational);
        let coeffs = m.charpoly_divfree().unwrap();
        assert!(coeffs[..4].iter().all(Value::is_zero));
        assert!(coeffs[4].is_one());
    }

    #[test]
    fn divfree_matches_leibniz_small() {
        let m = rat_mat(3, 3, &[2, -1, 0, 3, 1, -2, 0, 4, 1]);
        assert_eq!(m.det_divfree().unwrap(), m.det_leibniz().unwrap());
    }

    #[test]
    fn kron_shapes_and_identity() {
        let a = rat_mat(2, 2, &[1, 2, 3, 4]);
        let id = Matrix::identity(2, Ring::Rational);
        let k = id.kron(&a).unwrap();
        assert_eq!(k.rows(), 4);
        // Block diagonal [a, a].
        assert_eq!(k.get(0, 0), a.get(0, 0));
        assert_eq!(k.get(2, 2), a.get(0, 0));
        assert!(k.get(0, 2).is_zero());
        // X (x) [1] = X.
        let one = rat_mat(1, 1, &[1]);
        assert_eq!(a.kron(&one).unwrap(), a);
    }

    #[test]
    fn kron_e12_identity() {
        let mut e12 = Matrix::zero(2, 2, Ring::Rational);
        e12.set(0, 1, Value::Rat(Rational::one())).unwrap();
        let id = Matrix::identity(2, Ring::Rational);
        let k = e12.kron(&id).unwrap();
        // Upper-right 2x2 block is the identity.
        assert!(k.get(0, 2).is_one());
        assert!(k.get(1, 3).is_one());
        assert!(k.get(0, 0).is_zero());
    }

    #[test]
    fn sigma_perm_examples() {
        assert_eq!(sigma_perm(2, 3).image(), &[0, 3, 1, 4, 2, 5]);
        assert_eq!(sigma_perm(2, 2).image(), &[0, 2, 1, 3]);
        assert_eq!(sigma_perm(1, 4).image(), &[0, 1, 2, 3]);
    }

    #[test]
    fn perm_action_group_law() {
        let x = rat_mat(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        let s = Permutation::new(vec![1, 2, 0]).unwrap();
        let t = Permutation::new(vec![2, 0, 1]).unwrap();
        let st = s.then(&t).unwrap();
        let lhs = perm_action(&st, &x).unwrap();
        let rhs = perm_action(&s, &perm_action(&t, &x).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let id = Permutation::identity(3);
        assert_eq!(perm_action(&id, &x).unwrap(), x);
    }

    #[test]
    fn block_det_inner_two_by_two() {
        // 2x2 grid of 1x1 blocks [a,b;c,d] -> ad - bc.
        let m = rat_mat(2, 2, &[3, 4, 5, 6]);
        let inner = m.block_det_inner(1).unwrap();
        assert_eq!(inner.rows(), 1);
        assert_eq!(inner.get(0, 0), &Value::Rat(Rational::from_integer(-2)));
        // n = 1: matrix unchanged.
        assert_eq!(m.block_det_inner(2).unwrap(), m);
    }

    #[test]
    fn flatten_unflatten_roundtrip() {
        let flat = rat_mat(4, 4, &(1..=16).collect::<Vec<i64>>());
        let nested = flat.unflatten(2).unwrap();
        assert_eq!(nested.rows(), 2);
        assert_eq!(nested.flatten().unwrap(), flat);
    }

    #[test]
    fn inverse_rotation() {
        let m = rat_mat(2, 2, &[0, -1, 1, 0]);
        let inv = m.inverse_field().unwrap().unwrap();
        assert_eq!(inv, rat_mat(2, 2, &[0, 1, -1, 0]));
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2, Ring::Rational));
    }

    #[test]
    fn singular_inverse_is_none() {
        let m = rat_mat(2, 2, &[1, 1, 1, 1]);
        assert!(m.inverse_field().unwrap().is_none());
        assert!(m.inverse_via_adjugate().unwrap().is_none());
    }

    #[test]
    fn adjugate_inverse_matches_field_inverse() {
        let m = rat_mat(3, 3, &[2, 1, 0, 1, -1, 3, 0, 2, 1]);
        let a = m.inverse_via_adjugate().unwrap().unwrap();
        let b = m.inverse_field().unwrap().unwrap();
        assert_eq!(a, b);
        assert_eq!(m.mul(&a).unwrap(), Matrix::identity(3, Ring::Rational));
    }

    #[test]
    fn nullspace_of_rank_one() {
        let rows = vec![vec![
            Rational::from_integer(1),
            Rational::from_integer(2),
            Rational::from_integer(3),
        ]];
        let basis = rational_nullspace(&rows, 3);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            let dot = &(&v[0] + &(&Rational::from_integer(2) * &v[1]))
                + &(&Rational::from_integer(3) * &v[2]);
            assert!(dot.is_zero());
        }
    }
}


#[cfg(test)]
mod charpoly_render_tests {
    use super::*;
    use crate::rings::rational::Rational;

    #[test]
    fn rotation_renders_as_x_squared_plus_one() {
        let m = Matrix::new(
            2,
            2,
            Ring::Rational,
            [0, -1, 1, 0]
                .iter()
                .map(|&v| Value::Rat(Rational::from_integer(v)))
                .collect(),
        )
        .unwrap();
        assert_eq!(m.charpoly_as_poly("x").unwrap().to_string(), "x^2 + 1");
        let zero = Matrix::zero(3, 3, Ring::Rational);
        assert_eq!(zero.charpoly_as_poly("x").unwrap().to_string(), "x^3");
    }
}
