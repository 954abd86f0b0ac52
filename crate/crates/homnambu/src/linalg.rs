//! Dense exact-rational matrices and the linear-algebra kernels backing
//! every space computation in the crate: reduced row echelon form,
//! nullspace, rank and image, linear solve, and subspace membership.
//!
//! Everything here is deterministic: pivots are chosen as the first
//! nonzero entry from the top, pivot entries are normalized to one, and
//! nullspace bases enumerate free columns in ascending index order. Two
//! calls on equal inputs produce identical outputs, which is what makes
//! golden files byte-stable.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::rat::Rat;

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Diagonal matrix from integer entries; convenient for fixtures.
    pub fn diag(entries: &[i64]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, &v) in entries.iter().enumerate() {
            m.set(i, i, Rat::from_integer(v.into()));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c {
                        self.at(r, c).is_one()
                    } else {
                        self.at(r, c).is_zero()
                    }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn scale(&self, s: &Rat) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(r, c) + a * b;
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = Rat::zero();
                for (c, entry) in v.iter().enumerate() {
                    if !entry.is_zero() && !self.at(r, c).is_zero() {
                        acc += self.at(r, c) * entry;
                    }
                }
                acc
            })
            .collect()
    }

    /// Matrix applied to a sparse vector: a combination of columns.
    pub fn mul_sparse(&self, v: &SparseVec) -> SparseVec {
        let mut acc = vec![Rat::zero(); self.rows];
        for (c, coeff) in v {
            for (r, slot) in acc.iter_mut().enumerate() {
                if !self.at(r, *c).is_zero() {
                    *slot += self.at(r, *c) * coeff;
                }
            }
        }
        sparse_from_dense(&acc)
    }

    /// k-fold product; `pow(0)` is the identity.
    pub fn pow(&self, k: usize) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Kronecker product, first factor most significant.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.at(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.at(r2, c2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(r1 * other.rows + r2, c1 * other.cols + c2, a * b);
                    }
                }
            }
        }
        out
    }

    /// n-fold Kronecker power; `kron_pow(0)` is the 1x1 identity.
    pub fn kron_pow(&self, n: usize) -> Matrix {
        let mut acc = Matrix::identity(1);
        for _ in 0..n {
            acc = acc.kron(self);
        }
        acc
    }

    /// Block-diagonal stack of `self` and `other`.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.at(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.at(r, c).clone());
            }
        }
        out
    }

    pub fn commutes_with(&self, other: &Matrix) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// Entries flattened row-major; the coordinate order used whenever a
    /// matrix is treated as a vector of unknowns.
    pub fn flatten(&self) -> Vec<Rat> {
        self.entries.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, entries: Vec<Rat>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix {
            rows,
            cols,
            entries,
        }
    }
}

/// `a*b - b*a`.
pub fn matrix_commutator(a: &Matrix, b: &Matrix) -> Matrix {
    a.mul(b).sub(&b.mul(a))
}

// ---------------------------------------------------------------------------
// Sparse vectors
// ---------------------------------------------------------------------------

/// Sparse vector: nonzero entries as `(index, value)` sorted by index.
pub type SparseVec = Vec<(usize, Rat)>;

pub fn sparse_from_dense(v: &[Rat]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &SparseVec, len: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

pub fn sparse_unit(index: usize) -> SparseVec {
    vec![(index, Rat::one())]
}

/// `acc += s * v`, merging sorted supports.
pub fn sparse_add_scaled(acc: &mut SparseVec, s: &Rat, v: &SparseVec) {
    if s.is_zero() || v.is_empty() {
        return;
    }
    let mut out = SparseVec::with_capacity(acc.len() + v.len());
    let mut i = 0;
    let mut j = 0;
    while i < acc.len() || j < v.len() {
        if j >= v.len() || (i < acc.len() && acc[i].0 < v[j].0) {
            out.push(acc[i].clone());
            i += 1;
        } else if i >= acc.len() || v[j].0 < acc[i].0 {
            out.push((v[j].0, s * &v[j].1));
            j += 1;
        } else {
            let sum = &acc[i].1 + s * &v[j].1;
            if !sum.is_zero() {
                out.push((acc[i].0, sum));
            }
            i += 1;
            j += 1;
        }
    }
    *acc = out;
}

pub fn sparse_scale(v: &SparseVec, s: &Rat) -> SparseVec {
    if s.is_zero() {
        return SparseVec::new();
    }
    v.iter().map(|(i, x)| (*i, x * s)).collect()
}

// ---------------------------------------------------------------------------
// Elimination kernels
// ---------------------------------------------------------------------------

/// Reduced row echelon form together with the pivot column list.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut pivot_row = 0;
    for col in 0..a.cols {
        if pivot_row >= a.rows {
            break;
        }
        let Some(src) = (pivot_row..a.rows).find(|&r| !a.at(r, col).is_zero()) else {
            continue;
        };
        if src != pivot_row {
            for c in 0..a.cols {
                let tmp = a.at(src, c).clone();
                a.set(src, c, a.at(pivot_row, c).clone());
                a.set(pivot_row, c, tmp);
            }
        }
        let inv = a.at(pivot_row, col).clone();
        for c in 0..a.cols {
            let v = a.at(pivot_row, c) / &inv;
            a.set(pivot_row, c, v);
        }
        for r in 0..a.rows {
            if r == pivot_row || a.at(r, col).is_zero() {
                continue;
            }
            let factor = a.at(r, col).clone();
            for c in 0..a.cols {
                let v = a.at(r, c) - &factor * a.at(pivot_row, c);
                a.set(r, c, v);
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    (a, pivots)
}

/// Basis of `{ v : M v = 0 }`. Free variables are enumerated in ascending
/// column order, each basis vector carries a one at its free column, and
/// an empty matrix (zero rows) yields the full standard basis.
pub fn nullspace(m: &Matrix) -> Vec<Vec<Rat>> {
    let (r, pivots) = rref(m);
    let pivot_set: Vec<bool> = {
        let mut set = vec![false; m.cols];
        for &p in &pivots {
            set[p] = true;
        }
        set
    };
    let mut basis = Vec::new();
    for free in 0..m.cols {
        if pivot_set[free] {
            continue;
        }
        let mut v = vec![Rat::zero(); m.cols];
        v[free] = Rat::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r.at(row, free).clone();
        }
        basis.push(v);
    }
    basis
}

/// Rank and the pivot columns of the original matrix, in original order.
pub fn rank_and_image(m: &Matrix) -> (usize, Vec<Vec<Rat>>) {
    let (_, pivots) = rref(m);
    let image = pivots.iter().map(|&c| m.col(c)).collect();
    (pivots.len(), image)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// One exact solution of `M x = b`, free variables pinned to zero, or
/// `None` when the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(m.rows, b.len(), "rhs length mismatch");
    let mut aug = Matrix::zeros(m.rows, m.cols + 1);
    for (r, rhs) in b.iter().enumerate() {
        for c in 0..m.cols {
            aug.set(r, c, m.at(r, c).clone());
        }
        aug.set(r, m.cols, rhs.clone());
    }
    let (r, pivots) = rref(&aug);
    if pivots.contains(&m.cols) {
        return None;
    }
    let mut x = vec![Rat::zero(); m.cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r.at(row, m.cols).clone();
    }
    Some(x)
}

/// Whether `v` is an exact rational combination of `basis`. The zero
/// vector belongs to every subspace, including the empty span.
pub fn subspace_membership(v: &[Rat], basis: &[Vec<Rat>]) -> bool {
    if v.iter().all(Rat::is_zero) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    assert!(
        basis.iter().all(|b| b.len() == v.len()),
        "vector lengths differ"
    );
    let cols: Vec<Vec<Rat>> = basis.to_vec();
    let mut m = Matrix::zeros(v.len(), cols.len());
    for (c, col) in cols.iter().enumerate() {
        for (r, entry) in col.iter().enumerate() {
            m.set(r, c, entry.clone());
        }
    }
    solve(&m, v).is_some()
}

/// `dim span(z) - dim span(b)`, after checking `span(b) ⊆ span(z)`.
pub fn quotient_dimension(z_basis: &[Vec<Rat>], b_basis: &[Vec<Rat>]) -> Result<usize, Error> {
    for v in b_basis {
        if !subspace_membership(v, z_basis) {
            return Err(Error::NotASubspace);
        }
    }
    let dim_of = |vs: &[Vec<Rat>]| {
        if vs.is_empty() {
            0
        } else {
            rank(&Matrix::from_rows(vs.to_vec()))
        }
    };
    Ok(dim_of(z_basis) - dim_of(b_basis))
}

/// Canonicalizes a spanning list into the basis form produced by
/// [`nullspace`]: reduced echelon on reversed column order, so that each
/// vector's last nonzero entry is a one. Re-canonicalizing a nullspace
/// basis reproduces it vector for vector.
pub fn canonical_span_basis(vectors: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let len = vectors[0].len();
    let reversed: Vec<Vec<Rat>> = vectors
        .iter()
        .map(|v| v.iter().rev().cloned().collect())
        .collect();
    let (r, pivots) = rref(&Matrix::from_rows(reversed));
    let mut out: Vec<Vec<Rat>> = (0..pivots.len())
        .map(|row| {
            let mut v: Vec<Rat> = r.row(row).to_vec();
            v.reverse();
            v
        })
        .collect();
    out.sort_by_key(|v| v.iter().rposition(|x| !x.is_zero()).unwrap_or(len));
    out
}

pub fn vec_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Rat], s: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * s).collect()
}

pub fn vec_is_zero(a: &[Rat]) -> bool {
    a.iter().all(Rat::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn nullspace_of_identity_is_empty() {
        assert!(nullspace(&Matrix::identity(2)).is_empty());
    }

    #[test]
    fn nullspace_of_zero_matrix_is_standard_basis() {
        let basis = nullspace(&Matrix::zeros(2, 2));
        assert_eq!(
            basis,
            vec![vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(1)]]
        );
    }

    #[test]
    fn nullspace_of_rank_one_matrix() {
        let basis = nullspace(&m(&[&[1, 2], &[2, 4]]));
        assert_eq!(basis, vec![vec![rat_int(-2), rat_int(1)]]);
        // Substitute back: M v = 0 exactly.
        let mv = m(&[&[1, 2], &[2, 4]]).mul_vec(&basis[0]);
        assert!(vec_is_zero(&mv));
    }

    #[test]
    fn nullspace_of_empty_matrix_is_standard_basis() {
        let empty = Matrix::zeros(0, 3);
        assert_eq!(nullspace(&empty).len(), 3);
    }

    #[test]
    fn rank_and_image_of_identity() {
        let (r, image) = rank_and_image(&Matrix::identity(3));
        assert_eq!(r, 3);
        assert_eq!(image[0], vec![rat_int(1), rat_int(0), rat_int(0)]);
    }

    #[test]
    fn rank_and_image_of_zero() {
        let (r, image) = rank_and_image(&Matrix::zeros(2, 2));
        assert_eq!(r, 0);
        assert!(image.is_empty());
    }

    #[test]
    fn rank_and_image_of_rank_one_matrix() {
        let (r, image) = rank_and_image(&m(&[&[1, 2], &[2, 4]]));
        assert_eq!(r, 1);
        assert_eq!(image, vec![vec![rat_int(1), rat_int(2)]]);
    }

    #[test]
    fn membership_basics() {
        assert!(subspace_membership(&[rat_int(0), rat_int(0)], &[]));
        assert!(!subspace_membership(
            &[rat_int(1), rat_int(0)],
            &[vec![rat_int(0), rat_int(1)]]
        ));
        assert!(subspace_membership(
            &[rat_int(2), rat_int(4)],
            &[vec![rat_int(1), rat_int(2)]]
        ));
    }

    #[test]
    fn quotient_dimension_examples() {
        let e1 = vec![rat_int(1), rat_int(0)];
        let e2 = vec![rat_int(0), rat_int(1)];
        assert_eq!(quotient_dimension(&[e1.clone(), e2], &[e1]).unwrap(), 1);
        assert_eq!(quotient_dimension(&[], &[]).unwrap(), 0);
        let z = vec![
            vec![rat_int(1), rat_int(0), rat_int(0)],
            vec![rat_int(0), rat_int(1), rat_int(1)],
        ];
        let b = vec![vec![rat_int(2), rat_int(0), rat_int(0)]];
        assert_eq!(quotient_dimension(&z, &b).unwrap(), 1);
    }

    #[test]
    fn quotient_dimension_rejects_non_subspace() {
        let z = vec![vec![rat_int(1), rat_int(0)]];
        let b = vec![vec![rat_int(0), rat_int(1)]];
        assert_eq!(quotient_dimension(&z, &b), Err(Error::NotASubspace));
    }

    #[test]
    fn solve_prefers_least_index_solution() {
        // x + y = 2 with free y pinned to zero.
        let a = m(&[&[1, 1]]);
        assert_eq!(
            solve(&a, &[rat_int(2)]).unwrap(),
            vec![rat_int(2), rat_int(0)]
        );
        assert!(solve(&m(&[&[1], &[1]]), &[rat_int(1), rat_int(2)]).is_none());
    }

    #[test]
    fn kron_and_block_diag_shapes() {
        let a = Matrix::diag(&[1, 2]);
        let k = a.kron(&a);
        assert_eq!(k.rows(), 4);
        assert_eq!(*k.at(3, 3), rat_int(4));
        let b = a.block_diag(&Matrix::identity(1));
        assert_eq!(b.rows(), 3);
        assert_eq!(*b.at(2, 2), rat_int(1));
    }

    #[test]
    fn exactness_no_rounding() {
        let a = rat(1, 3);
        let b = rat(1, 7);
        assert_eq!(&(&a + &b) - &b, a);
    }

    proptest! {
        #[test]
        fn rank_nullity_on_random_small_matrices(
            rows in 1usize..5,
            cols in 1usize..5,
            seed in proptest::collection::vec(-4i64..5, 16)
        ) {
            let mut entries = Vec::with_capacity(rows * cols);
            for i in 0..rows * cols {
                entries.push(rat_int(seed[i % seed.len()]));
            }
            let m = Matrix::from_flat(rows, cols, entries);
            let null = nullspace(&m);
            prop_assert_eq!(rank(&m) + null.len(), cols);
            for v in &null {
                prop_assert!(vec_is_zero(&m.mul_vec(v)));
            }
        }

        #[test]
        fn nullspace_basis_is_canonical(
            rows in 1usize..5,
            cols in 2usize..5,
            seed in proptest::collection::vec(-3i64..4, 16)
        ) {
            let mut entries = Vec::with_capacity(rows * cols);
            for i in 0..rows * cols {
                entries.push(rat_int(seed[i % seed.len()]));
            }
            let m = Matrix::from_flat(rows, cols, entries);
            let null = nullspace(&m);
            // Re-reduction is the identity on the reported basis.
            prop_assert_eq!(canonical_span_basis(&null), null.clone());
            // Determinism: a second run reproduces the same list.
            prop_assert_eq!(nullspace(&m), null);
        }

        #[test]
        fn rational_addition_is_exact(n1 in -50i64..50, d1 in 1i64..20, n2 in -50i64..50, d2 in 1i64..20) {
            let a = rat(n1, d1);
            let b = rat(n2, d2);
            prop_assert_eq!(&(&a + &b) - &b, a);
        }
    }
}
