//! Exact rational linear algebra.
//!
//! Matrices are row-sparse maps from `(row, col)` to [`Rational`]. Reduction
//! always produces the reduced row echelon form, which is unique, so every
//! basis derived from it (kernel bases, cohomology representatives) is
//! reproducible across runs and independent of processing order.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

/// Dense column vector.
pub type RatVector = Vec<Rational>;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("degree {degree} outside complex range {lo}..={hi}")]
    DegreeOutOfRange { degree: i64, lo: i64, hi: i64 },
    #[error("chain map does not commute with the differentials in degree {degree}")]
    NotAChainMap { degree: i64 },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("d∘d is nonzero in degree {degree}")]
    NotAComplex { degree: i64 },
}

type SparseRow = BTreeMap<usize, Rational>;

#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseRow>,
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![SparseRow::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows<T: Into<Rational> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, v.clone().into());
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let conv: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| rat_int(v)).collect())
            .collect();
        Self::from_rows(&conv)
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[RatVector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, v) in columns.iter().enumerate() {
            assert_eq!(v.len(), rows);
            for (r, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    m.data[r].insert(c, x.clone());
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        self.data[r].get(&c).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        if v.is_zero() {
            self.data[r].remove(&c);
        } else {
            self.data[r].insert(c, v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Rational) {
        let cur = self.get(r, c);
        self.set(r, c, cur + v);
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(&c, v)| (r, c, v)))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (r, c, v) in self.entries() {
            t.data[c].insert(r, v.clone());
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            let mut acc = SparseRow::new();
            for (k, a) in row {
                for (c, b) in &other.data[*k] {
                    let e = acc.entry(*c).or_insert_with(Rational::zero);
                    *e += a * b;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.data[r] = acc;
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> RatVector {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .fold(Rational::zero(), |acc, (c, a)| acc + a * &v[*c])
            })
            .collect()
    }

    pub fn scale(&self, s: &Rational) -> RatMatrix {
        let mut out = Self::zeros(self.rows, self.cols);
        if s.is_zero() {
            return out;
        }
        for (r, c, v) in self.entries() {
            out.data[r].insert(c, v * s);
        }
        out
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Rref {
        Rref::of(self)
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Rank by fraction-free (Bareiss) elimination over the integers after
    /// clearing row denominators. Pivots are chosen column-first, which is a
    /// different order from [`Rref`], so the two serve as cross-checks.
    pub fn rank_fraction_free(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = self
            .data
            .iter()
            .map(|row| {
                let lcm = row
                    .values()
                    .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                let mut dense = vec![BigInt::zero(); self.cols];
                for (c, v) in row {
                    dense[*c] = v.numer() * (&lcm / v.denom());
                }
                dense
            })
            .collect();
        let m = self.rows;
        let n = self.cols;
        let mut prev = BigInt::one();
        let mut rank = 0;
        for col in 0..n {
            if rank == m {
                break;
            }
            let Some(p) = (rank..m).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for r in rank + 1..m {
                for c in col + 1..n {
                    let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                    a[r][c] = v;
                }
                a[r][col] = BigInt::zero();
            }
            prev = a[rank][col].clone();
            rank += 1;
        }
        rank
    }
}

/// Reduced row echelon form of a matrix.
///
/// Rows are taken in index order; each new row is reduced against the pivots
/// found so far and, if nonzero, pivots at its lowest column. Earlier pivot
/// rows are back-reduced, so the result is the unique RREF.
#[derive(Clone, Debug)]
pub struct Rref {
    cols: usize,
    /// `(pivot column, normalized row)`, sorted by pivot column.
    rows: Vec<(usize, SparseRow)>,
}

impl Rref {
    fn of(m: &RatMatrix) -> Self {
        // pivot column -> row with leading 1 there, zero in every other pivot column
        let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for row in &m.data {
            let mut row = row.clone();
            let hits: Vec<usize> = row
                .keys()
                .copied()
                .filter(|c| pivots.contains_key(c))
                .collect();
            for c in hits {
                let Some(factor) = row.get(&c).cloned() else {
                    continue;
                };
                let prow = &pivots[&c];
                for (pc, pv) in prow {
                    let e = row.entry(*pc).or_insert_with(Rational::zero);
                    *e -= &factor * pv;
                    if e.is_zero() {
                        row.remove(pc);
                    }
                }
            }
            let Some((&lead, lead_val)) = row.iter().next() else {
                continue;
            };
            let inv = lead_val.recip();
            for v in row.values_mut() {
                *v *= &inv;
            }
            for prow in pivots.values_mut() {
                if let Some(factor) = prow.get(&lead).cloned() {
                    for (c, v) in &row {
                        let e = prow.entry(*c).or_insert_with(Rational::zero);
                        *e -= &factor * v;
                        if e.is_zero() {
                            prow.remove(c);
                        }
                    }
                }
            }
            pivots.insert(lead, row);
        }
        Rref {
            cols: m.cols,
            rows: pivots.into_iter().collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows.iter().map(|(c, _)| *c).collect()
    }

    /// Kernel basis in reduced echelon form: one vector per free column,
    /// with a 1 in that column and zeros in the other free columns.
    pub fn kernel_basis(&self) -> Vec<RatVector> {
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for (c, _) in &self.rows {
                v[*c] = true;
            }
            v
        };
        (0..self.cols)
            .filter(|&f| !pivot_set[f])
            .map(|f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (p, row) in &self.rows {
                    if let Some(x) = row.get(&f) {
                        v[*p] = -x.clone();
                    }
                }
                v
            })
            .collect()
    }
}

pub fn rank_and_kernel(m: &RatMatrix) -> (usize, Vec<RatVector>) {
    let r = m.rref();
    (r.rank(), r.kernel_basis())
}

/// Solve `basis · x = target` for each target, where the basis columns are
/// linearly independent. Returns `None` if some target is outside the span.
pub fn solve_in_basis(
    dim: usize,
    basis: &[RatVector],
    targets: &[RatVector],
) -> Option<Vec<RatVector>> {
    let k = basis.len();
    let mut cols: Vec<RatVector> = basis.to_vec();
    cols.extend(targets.iter().cloned());
    let m = RatMatrix::from_columns(dim, &cols);
    let rref = m.rref();
    if rref.rows.iter().any(|(c, _)| *c >= k) {
        return None;
    }
    debug_assert_eq!(rref.rank(), k, "basis columns must be independent");
    let sols = (0..targets.len())
        .map(|t| {
            let mut x = vec![Rational::zero(); k];
            for (p, row) in &rref.rows {
                if let Some(v) = row.get(&(k + t)) {
                    x[*p] = v.clone();
                }
            }
            x
        })
        .collect();
    Some(sols)
}

/// A bounded cochain complex `C^lo -> ... -> C^hi` over ℚ.
///
/// `differentials[k]` is the matrix of `d: C^{lo+k} -> C^{lo+k+1}`, with shape
/// `dim C^{lo+k+1} x dim C^{lo+k}`.
#[derive(Clone, Debug)]
pub struct CochainComplex<L = String> {
    lo: i64,
    spaces: Vec<Vec<L>>,
    differentials: Vec<RatMatrix>,
}

impl<L: Clone> CochainComplex<L> {
    /// Checks shapes and `d∘d = 0`.
    pub fn new(
        lo: i64,
        spaces: Vec<Vec<L>>,
        differentials: Vec<RatMatrix>,
    ) -> Result<Self, LinalgError> {
        if spaces.is_empty() {
            return Err(LinalgError::Shape(
                "complex needs at least one degree".into(),
            ));
        }
        if differentials.len() + 1 != spaces.len() {
            return Err(LinalgError::Shape(format!(
                "{} spaces need {} differentials, got {}",
                spaces.len(),
                spaces.len() - 1,
                differentials.len()
            )));
        }
        for (k, d) in differentials.iter().enumerate() {
            if d.shape() != (spaces[k + 1].len(), spaces[k].len()) {
                return Err(LinalgError::Shape(format!(
                    "differential in degree {} has shape {:?}, expected {:?}",
                    lo + k as i64,
                    d.shape(),
                    (spaces[k + 1].len(), spaces[k].len())
                )));
            }
        }
        let c = CochainComplex {
            lo,
            spaces,
            differentials,
        };
        c.check_d_squared()?;
        Ok(c)
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.spaces.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi()
    }

    fn slot(&self, q: i64) -> Result<usize, LinalgError> {
        if q < self.lo || q > self.hi() {
            Err(LinalgError::DegreeOutOfRange {
                degree: q,
                lo: self.lo,
                hi: self.hi(),
            })
        } else {
            Ok((q - self.lo) as usize)
        }
    }

    pub fn basis(&self, q: i64) -> Result<&[L], LinalgError> {
        Ok(&self.spaces[self.slot(q)?])
    }

    pub fn dim(&self, q: i64) -> usize {
        self.slot(q).map_or(0, |k| self.spaces[k].len())
    }

    /// `d: C^q -> C^{q+1}`; the zero map at the top degree.
    pub fn differential(&self, q: i64) -> RatMatrix {
        match self.slot(q) {
            Ok(k) if k < self.differentials.len() => self.differentials[k].clone(),
            _ => RatMatrix::zeros(self.dim(q + 1), self.dim(q)),
        }
    }

    pub fn check_d_squared(&self) -> Result<(), LinalgError> {
        for k in 1..self.differentials.len() {
            let dd = self.differentials[k].mul(&self.differentials[k - 1])?;
            if !dd.is_zero() {
                return Err(LinalgError::NotAComplex {
                    degree: self.lo + k as i64 - 1,
                });
            }
        }
        Ok(())
    }

    /// `dim ker d_q − rank d_{q−1}`.
    pub fn cohomology_dim(&self, q: i64) -> Result<usize, LinalgError> {
        self.slot(q)?;
        let n = self.dim(q);
        let out = self.differential(q).rank();
        let inc = self.differential(q - 1).rank();
        Ok(n - out - inc)
    }

    pub fn cohomology_dims(&self) -> Vec<usize> {
        self.degrees()
            .map(|q| self.cohomology_dim(q).expect("degree in range"))
            .collect()
    }

    /// Representatives of a basis of `H^q`, chosen canonically: the reduced
    /// echelon kernel vectors that remain pivots after the image columns.
    pub fn cohomology_basis(&self, q: i64) -> Result<CohomologyBasis, LinalgError> {
        self.slot(q)?;
        let n = self.dim(q);
        let kernel = self.differential(q).rref().kernel_basis();
        let incoming = self.differential(q - 1);
        let image: Vec<RatVector> = (0..incoming.cols())
            .map(|c| (0..n).map(|r| incoming.get(r, c)).collect())
            .collect();
        let mut cols = image.clone();
        cols.extend(kernel.iter().cloned());
        let pivots = RatMatrix::from_columns(n, &cols).rref().pivot_columns();
        let image_basis: Vec<RatVector> = pivots
            .iter()
            .filter(|&&c| c < image.len())
            .map(|&c| image[c].clone())
            .collect();
        let reps: Vec<RatVector> = pivots
            .iter()
            .filter(|&&c| c >= image.len())
            .map(|&c| kernel[c - image.len()].clone())
            .collect();
        Ok(CohomologyBasis {
            dim: n,
            image_basis,
            reps,
        })
    }
}

/// Chosen basis of `H^q = ker d_q / im d_{q−1}`.
#[derive(Clone, Debug)]
pub struct CohomologyBasis {
    dim: usize,
    image_basis: Vec<RatVector>,
    reps: Vec<RatVector>,
}

impl CohomologyBasis {
    pub fn reps(&self) -> &[RatVector] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Coordinates of cocycles in the chosen representative basis.
    pub fn coordinates(&self, cocycles: &[RatVector]) -> Option<Vec<RatVector>> {
        let mut basis = self.image_basis.clone();
        basis.extend(self.reps.iter().cloned());
        let sols = solve_in_basis(self.dim, &basis, cocycles)?;
        let skip = self.image_basis.len();
        Some(sols.into_iter().map(|x| x[skip..].to_vec()).collect())
    }
}

/// Matrix of `H^q(src) -> H^q(dst)` induced by a chain map, in the canonical
/// cohomology bases. `chain_map[k]` maps degree `src.lo() + k`.
pub fn induced_cohomology_map<L: Clone, M: Clone>(
    src: &CochainComplex<L>,
    dst: &CochainComplex<M>,
    chain_map: &[RatMatrix],
    q: i64,
) -> Result<RatMatrix, LinalgError> {
    if src.lo() != dst.lo() || src.hi() != dst.hi() {
        return Err(LinalgError::Shape(
            "source and target complexes must share a degree range".into(),
        ));
    }
    if chain_map.len() != src.spaces.len() {
        return Err(LinalgError::Shape(format!(
            "chain map has {} components, complex has {} degrees",
            chain_map.len(),
            src.spaces.len()
        )));
    }
    for (k, f) in chain_map.iter().enumerate() {
        let deg = src.lo() + k as i64;
        if f.shape() != (dst.dim(deg), src.dim(deg)) {
            return Err(LinalgError::Shape(format!(
                "chain map in degree {deg} has shape {:?}",
                f.shape()
            )));
        }
    }
    check_chain_map(src, dst, chain_map)?;
    let k = src.slot(q)?;
    let hs = src.cohomology_basis(q)?;
    let ht = dst.cohomology_basis(q)?;
    let images: Vec<RatVector> = hs.reps().iter().map(|v| chain_map[k].mul_vec(v)).collect();
    let coords = ht
        .coordinates(&images)
        .ok_or(LinalgError::NotAChainMap { degree: q })?;
    let mut out = RatMatrix::zeros(ht.len(), hs.len());
    for (c, x) in coords.iter().enumerate() {
        for (r, v) in x.iter().enumerate() {
            out.set(r, c, v.clone());
        }
    }
    Ok(out)
}

/// Verifies `d_dst ∘ f_q = f_{q+1} ∘ d_src` in every degree, including the
/// boundary degrees where one side is the zero map.
pub fn check_chain_map<L: Clone, M: Clone>(
    src: &CochainComplex<L>,
    dst: &CochainComplex<M>,
    chain_map: &[RatMatrix],
) -> Result<(), LinalgError> {
    let n = chain_map.len();
    for k in 0..n {
        let deg = src.lo() + k as i64;
        let left = dst.differential(deg).mul(&chain_map[k])?;
        let right = if k + 1 < n {
            chain_map[k + 1].mul(&src.differential(deg))?
        } else {
            RatMatrix::zeros(left.rows(), left.cols())
        };
        if left != right {
            return Err(LinalgError::NotAChainMap { degree: deg });
        }
    }
    Ok(())
}

/// Exact binomial coefficient `C(n, k)` for `n` possibly negative, as the
/// polynomial `n(n−1)…(n−k+1)/k!`; zero for `k < 0`.
pub fn binomial_poly(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= BigInt::from(n - j);
        den *= BigInt::from(j + 1);
    }
    num / den
}

pub fn is_integral(x: &Rational) -> bool {
    x.is_integer()
}

pub fn is_nonneg(x: &Rational) -> bool {
    !x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_full_rank() {
        let (r, k) = rank_and_kernel(&RatMatrix::identity(2));
        assert_eq!(r, 2);
        assert!(k.is_empty());
    }

    #[test]
    fn row_of_ones_kernel() {
        let (r, k) = rank_and_kernel(&RatMatrix::from_i64_rows(&[vec![1, 1]]));
        assert_eq!(r, 1);
        assert_eq!(k, vec![vec![rat_int(-1), rat_int(1)]]);
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let (r, k) = rank_and_kernel(&RatMatrix::zeros(3, 3));
        assert_eq!(r, 0);
        assert_eq!(k.len(), 3);
        assert_eq!(RatMatrix::from_columns(3, &k).rank(), 3);
    }

    #[test]
    fn empty_matrix() {
        let (r, k) = rank_and_kernel(&RatMatrix::zeros(0, 0));
        assert_eq!(r, 0);
        assert!(k.is_empty());
        assert_eq!(RatMatrix::zeros(0, 4).rank_fraction_free(), 0);
    }

    #[test]
    fn fraction_free_agrees_on_rational_matrix() {
        let m = RatMatrix::from_rows(&[
            vec![rat(1, 2), rat(1, 3), rat_int(0)],
            vec![rat_int(3), rat_int(2), rat_int(0)],
            vec![rat(2, 7), rat(-5, 3), rat_int(1)],
        ]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_fraction_free(), 2);
        assert_eq!(m.transpose().rank(), 2);
    }

    #[test]
    fn single_space_complex() {
        let c: CochainComplex = CochainComplex::new(0, vec![vec!["x".into()]], vec![]).unwrap();
        assert_eq!(c.cohomology_dim(0).unwrap(), 1);
        assert!(matches!(
            c.cohomology_dim(1),
            Err(LinalgError::DegreeOutOfRange { .. })
        ));
    }

    #[test]
    fn exact_complex() {
        let c: CochainComplex = CochainComplex::new(
            0,
            vec![vec!["a".into()], vec!["b".into()]],
            vec![RatMatrix::identity(1)],
        )
        .unwrap();
        assert_eq!(c.cohomology_dims(), vec![0, 0]);
    }

    #[test]
    fn d_squared_nonzero_rejected() {
        let err = CochainComplex::<String>::new(
            0,
            vec![vec!["a".into()], vec!["b".into()], vec!["c".into()]],
            vec![RatMatrix::identity(1), RatMatrix::identity(1)],
        )
        .unwrap_err();
        assert_eq!(err, LinalgError::NotAComplex { degree: 0 });
    }

    #[test]
    fn identity_and_zero_chain_maps() {
        // 3-cycle: vertices -> edges coboundary, H^0 = H^1 = 1
        let d = RatMatrix::from_i64_rows(&[vec![-1, 1, 0], vec![-1, 0, 1], vec![0, -1, 1]]);
        let c: CochainComplex<usize> =
            CochainComplex::new(0, vec![vec![0, 1, 2], vec![0, 1, 2]], vec![d]).unwrap();
        let id = vec![RatMatrix::identity(3), RatMatrix::identity(3)];
        for q in 0..=1 {
            assert_eq!(
                induced_cohomology_map(&c, &c, &id, q).unwrap(),
                RatMatrix::identity(1)
            );
        }
        let zero = vec![RatMatrix::zeros(3, 3), RatMatrix::zeros(3, 3)];
        assert!(induced_cohomology_map(&c, &c, &zero, 1).unwrap().is_zero());
    }

    #[test]
    fn non_chain_map_reports_degree() {
        let d = RatMatrix::from_i64_rows(&[vec![1]]);
        let c: CochainComplex<usize> =
            CochainComplex::new(0, vec![vec![0], vec![0]], vec![d]).unwrap();
        let f = vec![RatMatrix::identity(1), RatMatrix::zeros(1, 1)];
        assert_eq!(
            induced_cohomology_map(&c, &c, &f, 0).unwrap_err(),
            LinalgError::NotAChainMap { degree: 0 }
        );
    }

    #[test]
    fn binomial_polynomial_values() {
        assert_eq!(binomial_poly(5, 2), BigInt::from(10));
        assert_eq!(binomial_poly(-1, 2), BigInt::from(1));
        assert_eq!(binomial_poly(-3, 2), BigInt::from(6));
        assert_eq!(binomial_poly(4, 0), BigInt::from(1));
        assert_eq!(binomial_poly(4, -1), BigInt::from(0));
    }
}
