//! Exact integer linear algebra: dense matrices over `BigInt`, Smith and
//! Hermite normal forms, primitive vectors and saturated sublattices.
//!
//! A subtorus of `T^m` is identified with the saturated sublattice of `Z^m`
//! it integrates, so most of the torus bookkeeping in this crate reduces to
//! the routines below. Nothing here ever rounds.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("zero vector has no primitive form")]
    ZeroVector,
    #[error("vector {0} is not primitive")]
    NotPrimitive(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("source vectors span rank {rank} < {ambient}")]
    RankDeficient { rank: usize, ambient: usize },
}

pub type Result<T> = std::result::Result<T, LatticeError>;

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: &[Vec<BigInt>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LatticeError::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().cloned());
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Convenience constructor from small integers. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_rows(cols, &rows).expect("ragged matrix literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(LatticeError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `self · v`.
    pub fn apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(LatticeError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(LatticeError::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        Ok(sign * &a[(n - 1, n - 1)])
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let snf = smith_normal_form(self);
        snf.invariant_factors().len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += c * row[src]
    fn add_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * c;
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += c * col[src]
    fn add_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * c;
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Result of [`smith_normal_form`]: `M = u · d · v`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }
}

/// Smith normal form with unimodular transforms.
///
/// Pivots on the entry of smallest absolute value in the remaining block,
/// clears its row and column by Euclidean steps, then restores the
/// divisibility chain by folding offending rows into the pivot row.
/// `u` and `v` are maintained as inverses of the accumulated elementary
/// operations, so `M = u · d · v` holds exactly at the end.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    // Row op on d: row[dst] += c*row[src]  =>  u: col[src] -= c*col[dst].
    // Col op on d: col[dst] += c*col[src]  =>  v: row[src] -= c*row[dst].
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &d[(i, j)];
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(u, d, v);
            };
            d.swap_rows(t, pi);
            u.swap_cols(t, pi);
            d.swap_cols(t, pj);
            v.swap_rows(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&d[(t, t)]);
                d.add_row(i, t, &q);
                u.add_col(t, i, &-&q);
                if !d[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&d[(t, t)]);
                d.add_col(j, t, &q);
                v.add_row(t, j, &-&q);
                if !d[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let pivot = d[(t, t)].clone();
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    d.add_row(t, i, &BigInt::one());
                    u.add_col(i, t, &-BigInt::one());
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_col(t);
        }
    }
    finish(u, d, v)
}

fn finish(u: IntMatrix, d: IntMatrix, v: IntMatrix) -> SmithForm {
    SmithForm { u, d, v }
}

/// Row-style Hermite normal form of the row lattice of `m`, with zero rows
/// dropped: pivots positive, entries above each pivot reduced into
/// `[0, pivot)`. Two matrices have the same row lattice iff their outputs
/// are equal.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let mut h = m.clone();
    let (rows, cols) = (h.rows(), h.cols());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let best = (r..rows)
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&a, &b| h[(a, c)].abs().cmp(&h[(b, c)].abs()));
            let Some(p) = best else { break };
            h.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = -h[(i, c)].div_floor(&h[(r, c)]);
                h.add_row(i, r, &q);
                if !h[(i, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
        }
        for i in 0..r {
            let q = -h[(i, c)].div_floor(&h[(r, c)]);
            if !q.is_zero() {
                h.add_row(i, r, &q);
            }
        }
        r += 1;
    }
    let kept: Vec<Vec<BigInt>> = (0..r).map(|i| h.row(i).to_vec()).collect();
    IntMatrix::from_rows(cols, &kept).expect("rows have uniform width")
}

/// Integer vector with coprime entries whose first nonzero entry is positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimitiveVector(Vec<BigInt>);

impl PrimitiveVector {
    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn from_i64(v: &[i64]) -> Result<Self> {
        primitivize(&v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
    }

    /// Accepts `v` only if it is already primitive; the sign is normalized.
    pub fn new(v: Vec<BigInt>) -> Result<Self> {
        let g = content(&v);
        if g.is_zero() {
            return Err(LatticeError::ZeroVector);
        }
        if !g.is_one() {
            return Err(LatticeError::NotPrimitive(fmt_vec(&v)));
        }
        primitivize(&v)
    }
}

impl fmt::Debug for PrimitiveVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_vec(&self.0))
    }
}

impl fmt::Display for PrimitiveVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_vec(&self.0))
    }
}

pub(crate) fn fmt_vec(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// gcd of all entries, `0` for the zero vector.
pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

pub fn primitivize(v: &[BigInt]) -> Result<PrimitiveVector> {
    let g = content(v);
    if g.is_zero() {
        return Err(LatticeError::ZeroVector);
    }
    let mut out: Vec<BigInt> = v.iter().map(|x| x / &g).collect();
    if out
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative())
    {
        out.iter_mut().for_each(|x| *x = -&*x);
    }
    Ok(PrimitiveVector(out))
}

/// `ad - bc` for vectors `(a,b)`, `(c,d)`.
pub fn det2(v: &PrimitiveVector, w: &PrimitiveVector) -> Result<BigInt> {
    det2_raw(v.coords(), w.coords())
}

pub(crate) fn det2_raw(v: &[BigInt], w: &[BigInt]) -> Result<BigInt> {
    for x in [v, w] {
        if x.len() != 2 {
            return Err(LatticeError::DimensionMismatch {
                expected: 2,
                found: x.len(),
            });
        }
    }
    Ok(&v[0] * &w[1] - &v[1] * &w[0])
}

/// Unimodular `m×m` matrix whose first row is `v`.
pub fn complete_to_unimodular(v: &PrimitiveVector) -> Result<IntMatrix> {
    let row = IntMatrix::from_rows(v.dim(), &[v.coords().to_vec()])?;
    let snf = smith_normal_form(&row);
    if !snf.d[(0, 0)].is_one() {
        return Err(LatticeError::NotPrimitive(v.to_string()));
    }
    // v = u * e_1 * V, with u = ±1.
    let mut out = snf.v;
    if snf.u[(0, 0)].is_negative() {
        out.negate_row(0);
    }
    Ok(out)
}

/// A subtorus of `T^m`, stored as the Hermite basis of its saturated lattice.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimitiveSubtorus {
    ambient_rank: usize,
    basis: IntMatrix,
}

impl PrimitiveSubtorus {
    pub fn trivial(m: usize) -> Self {
        PrimitiveSubtorus {
            ambient_rank: m,
            basis: IntMatrix::zeros(0, m),
        }
    }

    pub fn full(m: usize) -> Self {
        PrimitiveSubtorus {
            ambient_rank: m,
            basis: IntMatrix::identity(m),
        }
    }

    pub fn circle(v: &PrimitiveVector) -> Self {
        subtorus_from_vectors(&[v.coords().to_vec()], v.dim())
            .expect("vector length equals its own dimension")
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// For a rank-one subtorus, its canonical primitive generator.
    pub fn direction(&self) -> Option<PrimitiveVector> {
        (self.rank() == 1)
            .then(|| primitivize(self.basis.row(0)).expect("saturated basis rows are nonzero"))
    }

    pub fn contains(&self, other: &PrimitiveSubtorus) -> bool {
        if other.ambient_rank != self.ambient_rank || other.rank() > self.rank() {
            return false;
        }
        let mut rows = self.basis.row_vecs();
        rows.extend(other.basis.row_vecs());
        let stacked = IntMatrix::from_rows(self.ambient_rank, &rows).expect("uniform width");
        stacked.rank() == self.rank()
    }

    /// Image under the automorphism `psi` (acting on column vectors).
    pub fn image(&self, psi: &IntMatrix) -> Result<PrimitiveSubtorus> {
        let rows = self
            .basis
            .row_vecs()
            .iter()
            .map(|r| psi.apply(r))
            .collect::<Result<Vec<_>>>()?;
        subtorus_from_vectors(&rows, psi.rows())
    }
}

impl fmt::Debug for PrimitiveSubtorus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PrimitiveSubtorus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() == 0 {
            return write!(f, "{{1}}");
        }
        if self.rank() == self.ambient_rank {
            return write!(f, "T^{}", self.ambient_rank);
        }
        let rows: Vec<String> = self.basis.row_vecs().iter().map(|r| fmt_vec(r)).collect();
        write!(f, "<{}>", rows.join(","))
    }
}

/// Saturation of the span of `vs` inside `Z^m`.
pub fn subtorus_from_vectors(vs: &[Vec<BigInt>], m: usize) -> Result<PrimitiveSubtorus> {
    let a = IntMatrix::from_rows(m, vs)?;
    let snf = smith_normal_form(&a);
    let r = snf.invariant_factors().len();
    // Row space of a is spanned by d_i * (row i of v); saturating drops d_i.
    let rows: Vec<Vec<BigInt>> = (0..r).map(|i| snf.v.row(i).to_vec()).collect();
    let sat = IntMatrix::from_rows(m, &rows)?;
    Ok(PrimitiveSubtorus {
        ambient_rank: m,
        basis: hermite_normal_form(&sat),
    })
}

/// The linear map `psi` with `psi(sources[i]) = sign[i] * targets[i]`, if it is
/// integral and unimodular. `sources` must span `Q^m`.
pub fn solve_unimodular_map(
    sources: &[PrimitiveVector],
    targets: &[PrimitiveVector],
    signs: &[bool],
) -> Result<Option<IntMatrix>> {
    let m = sources.first().map_or(0, PrimitiveVector::dim);
    if targets.len() != sources.len() || signs.len() != sources.len() {
        return Err(LatticeError::DimensionMismatch {
            expected: sources.len(),
            found: targets.len().min(signs.len()),
        });
    }
    for v in sources.iter().chain(targets) {
        if v.dim() != m {
            return Err(LatticeError::DimensionMismatch {
                expected: m,
                found: v.dim(),
            });
        }
    }
    let signed: Vec<Vec<BigInt>> = targets
        .iter()
        .zip(signs)
        .map(|(t, &s)| {
            t.coords()
                .iter()
                .map(|x| if s { x.clone() } else { -x })
                .collect()
        })
        .collect();

    // Greedy maximal independent subset of the sources.
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..sources.len() {
        let mut rows: Vec<Vec<BigInt>> = chosen
            .iter()
            .map(|&c| sources[c].coords().to_vec())
            .collect();
        rows.push(sources[i].coords().to_vec());
        if IntMatrix::from_rows(m, &rows)?.rank() == rows.len() {
            chosen.push(i);
        }
        if chosen.len() == m {
            break;
        }
    }
    if chosen.len() < m {
        return Err(LatticeError::RankDeficient {
            rank: chosen.len(),
            ambient: m,
        });
    }

    // psi * S = T with S, T having the chosen vectors as columns.
    let s_t = IntMatrix::from_rows(
        m,
        &chosen
            .iter()
            .map(|&c| sources[c].coords().to_vec())
            .collect::<Vec<_>>(),
    )?;
    let t_t = IntMatrix::from_rows(
        m,
        &chosen
            .iter()
            .map(|&c| signed[c].clone())
            .collect::<Vec<_>>(),
    )?;
    let s = s_t.transpose();
    let t = t_t.transpose();
    let det_s = s.det()?;
    let numer = t.mul(&adjugate(&s)?)?;
    let mut psi = IntMatrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            let (q, r) = numer[(i, j)].div_rem(&det_s);
            if !r.is_zero() {
                return Ok(None);
            }
            psi[(i, j)] = q;
        }
    }
    if !psi.det()?.abs().is_one() {
        return Ok(None);
    }
    for (src, tgt) in sources.iter().zip(&signed) {
        if &psi.apply(src.coords())? != tgt {
            return Ok(None);
        }
    }
    Ok(Some(psi))
}

/// Classical adjoint, `adj(A) · A = det(A) · I`.
pub fn adjugate(a: &IntMatrix) -> Result<IntMatrix> {
    let n = a.rows();
    if n != a.cols() {
        return Err(LatticeError::DimensionMismatch {
            expected: n,
            found: a.cols(),
        });
    }
    let mut adj = IntMatrix::zeros(n, n);
    if n == 1 {
        adj[(0, 0)] = BigInt::one();
        return Ok(adj);
    }
    for i in 0..n {
        for j in 0..n {
            let minor_rows: Vec<Vec<BigInt>> = (0..n)
                .filter(|&r| r != i)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| a[(r, c)].clone())
                        .collect()
                })
                .collect();
            let minor = IntMatrix::from_rows(n - 1, &minor_rows)?.det()?;
            let cof = if (i + j) % 2 == 0 { minor } else { -minor };
            adj[(j, i)] = cof;
        }
    }
    Ok(adj)
}

/// Map sending primitive `from` to primitive `to`: `Q^T · (P^T)^{-1}` where
/// `P`, `Q` complete the vectors to unimodular bases.
pub fn unimodular_sending(from: &PrimitiveVector, to: &PrimitiveVector) -> Result<IntMatrix> {
    let p = complete_to_unimodular(from)?.transpose();
    let q = complete_to_unimodular(to)?.transpose();
    let det = p.det()?;
    let inv = scale(&adjugate(&p)?, &det);
    q.mul(&inv)
}

// Exact inverse of a unimodular matrix: adj / det with det = ±1.
fn scale(m: &IntMatrix, det: &BigInt) -> IntMatrix {
    let mut out = m.clone();
    if det.is_negative() {
        out.data.iter_mut().for_each(|x| *x = -&*x);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn pv(v: &[i64]) -> PrimitiveVector {
        PrimitiveVector::from_i64(v).unwrap()
    }

    #[test]
    fn primitivize_examples() {
        assert_eq!(primitivize(&bi(&[2, 4])).unwrap(), pv(&[1, 2]));
        assert_eq!(
            primitivize(&bi(&[-1, 0])).unwrap().coords(),
            &bi(&[1, 0])[..]
        );
        assert_eq!(
            primitivize(&bi(&[3, -5])).unwrap().coords(),
            &bi(&[3, -5])[..]
        );
        assert_eq!(primitivize(&bi(&[0, 0])), Err(LatticeError::ZeroVector));
        assert_eq!(
            LatticeError::ZeroVector.to_string(),
            "zero vector has no primitive form"
        );
    }

    #[test]
    fn new_rejects_non_primitive() {
        assert!(matches!(
            PrimitiveVector::new(bi(&[2, 4])),
            Err(LatticeError::NotPrimitive(_))
        ));
    }

    fn check_snf(m: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(&s.d).unwrap().mul(&s.v).unwrap(), *m);
        assert!(s.u.det().unwrap().abs().is_one());
        assert!(s.v.det().unwrap().abs().is_one());
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn snf_examples() {
        let s = check_snf(&IntMatrix::identity(2));
        assert_eq!(s.d, IntMatrix::identity(2));

        let s = check_snf(&IntMatrix::from_i64(&[&[2, 4], &[6, 8]]));
        assert_eq!(s.d, IntMatrix::from_i64(&[&[2, 0], &[0, 4]]));

        for q in -6..=6 {
            for k in 0..=7 {
                let s = check_snf(&IntMatrix::from_i64(&[&[1, 0], &[q, k]]));
                assert_eq!(s.d, IntMatrix::from_i64(&[&[1, 0], &[0, k]]));
            }
        }
    }

    #[test]
    fn snf_rectangular_and_zero() {
        check_snf(&IntMatrix::zeros(3, 2));
        check_snf(&IntMatrix::zeros(0, 3));
        let s = check_snf(&IntMatrix::from_i64(&[&[0, 6, 4], &[10, 0, 8]]));
        assert_eq!(s.invariant_factors(), bi(&[2, 2]));
    }

    #[test]
    fn det2_examples() {
        assert_eq!(det2(&pv(&[1, 0]), &pv(&[0, 1])).unwrap(), BigInt::from(1));
        assert_eq!(det2(&pv(&[1, 0]), &pv(&[1, 0])).unwrap(), BigInt::from(0));
        assert_eq!(det2(&pv(&[1, 0]), &pv(&[3, 7])).unwrap(), BigInt::from(7));
        assert!(matches!(
            det2(&pv(&[1, 0, 0]), &pv(&[0, 1, 0])),
            Err(LatticeError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn completion_examples() {
        assert_eq!(
            complete_to_unimodular(&pv(&[1, 0])).unwrap(),
            IntMatrix::identity(2)
        );
        let m = complete_to_unimodular(&pv(&[0, 1])).unwrap();
        assert_eq!(m.row(0), &bi(&[0, 1])[..]);
        assert!(m.det().unwrap().abs().is_one());
        let m = complete_to_unimodular(&pv(&[3, 5])).unwrap();
        assert_eq!(m.row(0), &bi(&[3, 5])[..]);
        assert!(m.det().unwrap().abs().is_one());
    }

    #[test]
    fn subtorus_examples() {
        let t = subtorus_from_vectors(&[bi(&[2, 0])], 2).unwrap();
        assert_eq!(t.rank(), 1);
        assert_eq!(t.basis(), &IntMatrix::from_i64(&[&[1, 0]]));
        let t = subtorus_from_vectors(&[], 2).unwrap();
        assert_eq!(t, PrimitiveSubtorus::trivial(2));
        let t = subtorus_from_vectors(&[bi(&[1, 0]), bi(&[0, 2])], 2).unwrap();
        assert_eq!(t, PrimitiveSubtorus::full(2));
    }

    #[test]
    fn containment() {
        let full = PrimitiveSubtorus::full(2);
        let c = PrimitiveSubtorus::circle(&pv(&[1, 1]));
        let triv = PrimitiveSubtorus::trivial(2);
        assert!(full.contains(&c) && c.contains(&triv) && full.contains(&triv));
        assert!(!c.contains(&full));
        assert!(!c.contains(&PrimitiveSubtorus::circle(&pv(&[1, 0]))));
    }

    #[test]
    fn solve_examples() {
        let e1 = pv(&[1, 0]);
        let e2 = pv(&[0, 1]);
        let psi = solve_unimodular_map(
            &[e1.clone(), e2.clone()],
            &[e2.clone(), e1.clone()],
            &[true, true],
        )
        .unwrap()
        .unwrap();
        assert_eq!(psi, IntMatrix::from_i64(&[&[0, 1], &[1, 0]]));

        let none = solve_unimodular_map(
            &[e1.clone(), e2.clone()],
            &[e1.clone(), pv(&[1, 2])],
            &[true, true],
        )
        .unwrap();
        assert!(none.is_none());

        let d = pv(&[1, 1]);
        let psi = solve_unimodular_map(
            &[e1.clone(), d.clone()],
            &[e1.clone(), d.clone()],
            &[true, true],
        )
        .unwrap()
        .unwrap();
        assert_eq!(psi, IntMatrix::identity(2));

        assert!(matches!(
            solve_unimodular_map(&[e1.clone(), e1.clone()], &[e1.clone(), e1], &[true, true]),
            Err(LatticeError::RankDeficient { .. })
        ));
    }

    #[test]
    fn sending_maps_vector() {
        for (a, b) in [([3, 5], [2, 7]), ([1, 0], [0, 1]), ([4, -1], [1, 1])] {
            let (a, b) = (pv(&a), pv(&b));
            let psi = unimodular_sending(&a, &b).unwrap();
            assert!(psi.det().unwrap().abs().is_one());
            assert_eq!(psi.apply(a.coords()).unwrap(), b.coords());
        }
    }

    #[test]
    fn hnf_canonical() {
        let a = hermite_normal_form(&IntMatrix::from_i64(&[&[2, 3], &[4, 5]]));
        let b = hermite_normal_form(&IntMatrix::from_i64(&[&[2, 1], &[0, 1]]));
        assert_eq!(a, b);
        assert_eq!(a, IntMatrix::from_i64(&[&[2, 0], &[0, 1]]));
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let m = IntMatrix::from_i64(&[&[2, -1, 3], &[0, 4, 1], &[5, 2, -2]]);
        // cofactor expansion along the first row: minors -10, -5, -20
        let expect = 2 * -10 + -5 + 3 * -20;
        assert_eq!(m.det().unwrap(), BigInt::from(expect));
        assert_eq!(
            IntMatrix::from_i64(&[&[0, 1], &[1, 0]]).det().unwrap(),
            BigInt::from(-1)
        );
    }
}
