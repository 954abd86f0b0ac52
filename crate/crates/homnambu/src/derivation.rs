//! Derivation and ω-derivation spaces as exact nullspaces, the graded
//! algebra they assemble into, and the inner-derivation ideal.
//!
//! A degree-k derivation is a matrix commuting with the twist whose
//! Leibniz-rule defect vanishes on every basis tuple, with `α^k` on the
//! spectator slots. Both conditions are linear in the unknown matrix
//! entries, so each space is the nullspace of one exact constraint
//! system; bases inherit the deterministic form of the nullspace kernel.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{HomNambuAlgebra, IdentityReport};
use crate::error::Error;
use crate::index::uniform_tuples;
use crate::linalg::{
    canonical_span_basis, matrix_commutator, nullspace, solve, sparse_unit, subspace_membership,
    vec_is_zero, Matrix, SparseVec,
};
use crate::rat::Rat;
use crate::tensor::MultiLinearMap;

/// Default truncation degree for graded assemblies.
pub const DEFAULT_K_MAX: usize = 3;

/// Basis of a derivation space at one twist degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationBasis {
    pub degree: usize,
    pub space_dim: usize,
    pub basis: Vec<Matrix>,
}

impl DerivationBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn flattened(&self) -> Vec<Vec<Rat>> {
        self.basis.iter().map(Matrix::flatten).collect()
    }

    pub fn contains(&self, candidate: &Matrix) -> bool {
        subspace_membership(&candidate.flatten(), &self.flattened())
    }

    /// Coordinates of a member in this basis, if it lies in the span.
    pub fn coordinates(&self, candidate: &Matrix) -> Option<Vec<Rat>> {
        if self.basis.is_empty() {
            return vec_is_zero(&candidate.flatten()).then(Vec::new);
        }
        let flat = self.flattened();
        let cols = flat.len();
        let rows = flat[0].len();
        let mut m = Matrix::zeros(rows, cols);
        for (c, v) in flat.iter().enumerate() {
            for (r, entry) in v.iter().enumerate() {
                m.set(r, c, entry.clone());
            }
        }
        solve(&m, &candidate.flatten())
    }
}

/// `Der_{α^k}` of a multiplicative algebra: the exact solution space of
/// the commutation and Leibniz-rule constraints over the d² entries of
/// the unknown matrix. Assembled analytically, row by row.
pub fn derivation_space(alg: &HomNambuAlgebra, k: usize) -> Result<DerivationBasis, Error> {
    if !alg.is_multiplicative() {
        return Err(Error::NotMultiplicative);
    }
    let d = alg.dim();
    let n = alg.arity();
    let alpha = alg.common_twist();
    let alpha_k = alpha.pow(k);
    let alpha_k_cols: Vec<SparseVec> = (0..d)
        .map(|b| alpha_k.mul_sparse(&sparse_unit(b)))
        .collect();

    let unknowns = d * d;
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(d * d + d.pow(n as u32) * d);

    // D∘α - α∘D = 0, entry (r, c):
    //   Σ_s D[r][s]·α[s][c] - α[r][s]·D[s][c].
    for r in 0..d {
        for c in 0..d {
            let mut row = vec![Rat::zero(); unknowns];
            for s in 0..d {
                row[r * d + s] += alpha.at(s, c);
                row[s * d + c] -= alpha.at(r, s);
            }
            rows.push(row);
        }
    }

    // D[e_t] - Σ_i [α^k e_{t_1}, …, D e_{t_i}, …, α^k e_{t_n}] = 0, one
    // row per basis tuple and output coordinate.
    for tuple in uniform_tuples(d, n) {
        let mut block: Vec<Vec<Rat>> = vec![vec![Rat::zero(); unknowns]; d];
        for (j, c) in alg.bracket().constant(&tuple) {
            for (s, row) in block.iter_mut().enumerate() {
                row[s * d + j] += &c;
            }
        }
        for i in 0..n {
            for r in 0..d {
                let mut args: Vec<SparseVec> = Vec::with_capacity(n);
                for (slot, &t) in tuple.iter().enumerate() {
                    args.push(if slot == i {
                        sparse_unit(r)
                    } else {
                        alpha_k_cols[t].clone()
                    });
                }
                for (s, value) in alg.bracket().apply(&args) {
                    block[s][r * d + tuple[i]] -= &value;
                }
            }
        }
        rows.extend(block);
    }

    let kernel = nullspace(&Matrix::from_rows(rows));
    let basis = kernel
        .into_iter()
        .map(|v| Matrix::from_flat(d, d, v))
        .collect();
    Ok(DerivationBasis {
        degree: k,
        space_dim: d,
        basis,
    })
}

/// `Der^ω_{α^k}` for an arbitrary multilinear map on a bare space; same
/// constraint shape as [`derivation_space`] but assembled through the
/// generic map evaluator, so the two routes can be cross-checked.
pub fn omega_derivation_space(
    space_dim: usize,
    omega: &MultiLinearMap,
    alpha: &Matrix,
    k: usize,
) -> Result<DerivationBasis, Error> {
    if omega.target_dim() != space_dim || omega.source_dims().iter().any(|&s| s != space_dim) {
        return Err(Error::dim_mismatch(
            "ω must map powers of the space into itself",
        ));
    }
    if alpha.rows() != space_dim || alpha.cols() != space_dim {
        return Err(Error::dim_mismatch(
            "twist must be square of the space dimension",
        ));
    }
    let d = space_dim;
    let n = omega.arity();
    let alpha_k = alpha.pow(k);
    let alpha_k_cols: Vec<SparseVec> = (0..d)
        .map(|b| alpha_k.mul_sparse(&sparse_unit(b)))
        .collect();
    let unknowns = d * d;
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for r in 0..d {
        for c in 0..d {
            let mut row = vec![Rat::zero(); unknowns];
            for s in 0..d {
                row[r * d + s] += alpha.at(s, c);
                row[s * d + c] -= alpha.at(r, s);
            }
            rows.push(row);
        }
    }
    for tuple in uniform_tuples(d, n) {
        let mut block: Vec<Vec<Rat>> = vec![vec![Rat::zero(); unknowns]; d];
        let units: Vec<SparseVec> = tuple.iter().map(|&t| sparse_unit(t)).collect();
        for (j, c) in omega.apply(&units) {
            for (s, row) in block.iter_mut().enumerate() {
                row[s * d + j] += &c;
            }
        }
        for i in 0..n {
            for r in 0..d {
                let mut args: Vec<SparseVec> = Vec::with_capacity(n);
                for (slot, &t) in tuple.iter().enumerate() {
                    args.push(if slot == i {
                        sparse_unit(r)
                    } else {
                        alpha_k_cols[t].clone()
                    });
                }
                for (s, value) in omega.apply(&args) {
                    block[s][r * d + tuple[i]] -= &value;
                }
            }
        }
        rows.extend(block);
    }
    let kernel = nullspace(&Matrix::from_rows(rows));
    let basis = kernel
        .into_iter()
        .map(|v| Matrix::from_flat(d, d, v))
        .collect();
    Ok(DerivationBasis {
        degree: k,
        space_dim: d,
        basis,
    })
}

/// Direct check of the ω-α^k-derivation conditions for one candidate.
pub fn is_omega_derivation(f: &Matrix, omega: &MultiLinearMap, alpha: &Matrix, k: usize) -> bool {
    let d = omega.target_dim();
    if f.rows() != d || f.cols() != d || !f.commutes_with(alpha) {
        return false;
    }
    let n = omega.arity();
    let alpha_k = alpha.pow(k);
    let alpha_k_cols: Vec<SparseVec> = (0..d)
        .map(|b| alpha_k.mul_sparse(&sparse_unit(b)))
        .collect();
    let f_cols: Vec<SparseVec> = (0..d).map(|b| f.mul_sparse(&sparse_unit(b))).collect();
    for tuple in uniform_tuples(d, n) {
        let units: Vec<SparseVec> = tuple.iter().map(|&t| sparse_unit(t)).collect();
        let lhs = f.mul_sparse(&omega.apply(&units));
        let mut rhs = SparseVec::new();
        let one = Rat::from_integer(1.into());
        for i in 0..n {
            let mut args: Vec<SparseVec> = Vec::with_capacity(n);
            for (slot, &t) in tuple.iter().enumerate() {
                args.push(if slot == i {
                    f_cols[t].clone()
                } else {
                    alpha_k_cols[t].clone()
                });
            }
            crate::linalg::sparse_add_scaled(&mut rhs, &one, &omega.apply(&args));
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Commutator of graded derivations; the degree adds.
pub fn commutator(d: &Matrix, k: usize, e: &Matrix, s: usize) -> Result<(Matrix, usize), Error> {
    if !d.is_square() || !e.is_square() || d.rows() != e.rows() {
        return Err(Error::dim_mismatch(
            "commutator needs square matrices of the same size",
        ));
    }
    Ok((matrix_commutator(d, e), k + s))
}

/// Membership of `f` in `Der^{ω+σ}_{α^k}`, tested directly against the
/// summed map.
pub fn sum_closure_check(
    f: &Matrix,
    omega: &MultiLinearMap,
    sigma: &MultiLinearMap,
    alpha: &Matrix,
    k: usize,
) -> Result<bool, Error> {
    if omega.source_dims() != sigma.source_dims() || omega.target_dim() != sigma.target_dim() {
        return Err(Error::dim_mismatch("summands must have identical shapes"));
    }
    Ok(is_omega_derivation(f, &omega.add(sigma), alpha, k))
}

// ---------------------------------------------------------------------------
// Graded assembly
// ---------------------------------------------------------------------------

/// Where a graded product landed: coordinates in the concatenated basis,
/// beyond the truncation, or (never, if the degree lemma holds) outside
/// the expected span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradedEntry {
    InRange(Vec<Rat>),
    OutOfTruncation,
    NotInSpan,
}

/// The degrees 0..=k_max of `Der_{α^k}` with the commutator table in
/// concatenated coordinates and the degree-shifting twist `D ↦ D∘α`.
#[derive(Clone, Debug)]
pub struct GradedDerivationAlgebra {
    pub degrees: Vec<DerivationBasis>,
    pub bracket_table: BTreeMap<(usize, usize), GradedEntry>,
    pub twist_table: Vec<GradedEntry>,
    pub hom_lie: IdentityReport,
}

impl GradedDerivationAlgebra {
    pub fn total_dim(&self) -> usize {
        self.degrees.iter().map(DerivationBasis::dim).sum()
    }

    fn offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.degrees.len());
        let mut acc = 0;
        for basis in &self.degrees {
            offsets.push(acc);
            acc += basis.dim();
        }
        offsets
    }

    /// `(degree, matrix)` of every concatenated basis element, in order.
    pub fn elements(&self) -> Vec<(usize, &Matrix)> {
        self.degrees
            .iter()
            .flat_map(|basis| basis.basis.iter().map(move |m| (basis.degree, m)))
            .collect()
    }
}

/// Computes `Der_{α^k}` for k = 0..=k_max, tabulates commutators in
/// concatenated coordinates, the twist action `D ↦ D∘α`, and checks the
/// twisted Lie axioms on the truncation: antisymmetry from the table and
/// the Hom-Jacobi identity evaluated exactly on matrices.
pub fn assemble_der_algebra(
    alg: &HomNambuAlgebra,
    k_max: usize,
) -> Result<GradedDerivationAlgebra, Error> {
    let degrees: Vec<DerivationBasis> = (0..=k_max)
        .map(|k| derivation_space(alg, k))
        .collect::<Result<_, _>>()?;
    let alpha = alg.common_twist();
    let mut out = GradedDerivationAlgebra {
        degrees,
        bracket_table: BTreeMap::new(),
        twist_table: Vec::new(),
        hom_lie: IdentityReport::new(crate::algebra::DEFAULT_WITNESS_CAP),
    };
    let offsets = out.offsets();
    let total = out.total_dim();
    let elements: Vec<(usize, Matrix)> = out
        .elements()
        .into_iter()
        .map(|(k, m)| (k, m.clone()))
        .collect();

    let embed = |degree: usize, coords: Vec<Rat>, offsets: &[usize]| {
        let mut full = vec![Rat::zero(); total];
        for (i, c) in coords.into_iter().enumerate() {
            full[offsets[degree] + i] = c;
        }
        full
    };

    for (a, (ka, ma)) in elements.iter().enumerate() {
        for (b, (kb, mb)) in elements.iter().enumerate() {
            let degree = ka + kb;
            let entry = if degree > k_max {
                GradedEntry::OutOfTruncation
            } else {
                match out.degrees[degree].coordinates(&matrix_commutator(ma, mb)) {
                    Some(coords) => GradedEntry::InRange(embed(degree, coords, &offsets)),
                    None => GradedEntry::NotInSpan,
                }
            };
            out.bracket_table.insert((a, b), entry);
        }
    }

    for (ka, ma) in &elements {
        let shifted = ma.mul(&alpha);
        let entry = if ka + 1 > k_max {
            GradedEntry::OutOfTruncation
        } else {
            match out.degrees[ka + 1].coordinates(&shifted) {
                Some(coords) => GradedEntry::InRange(embed(ka + 1, coords, &offsets)),
                None => GradedEntry::NotInSpan,
            }
        };
        out.twist_table.push(entry);
    }

    // Antisymmetry on the tabulated coordinates.
    for (a, (_, _)) in elements.iter().enumerate() {
        for (b, (_, _)) in elements.iter().enumerate() {
            if let (Some(GradedEntry::InRange(ab)), Some(GradedEntry::InRange(ba))) = (
                out.bracket_table.get(&(a, b)),
                out.bracket_table.get(&(b, a)),
            ) {
                let neg: Vec<Rat> = ba.iter().map(|x| -x).collect();
                let left = ab.clone();
                out.hom_lie.check("antisymmetry", &[a, b], left, neg);
            }
        }
    }

    // Hom-Jacobi with α'(D) = D∘α, evaluated exactly on matrices; no
    // truncation applies at this level.
    for (a, (_, ma)) in elements.iter().enumerate() {
        for (b, (_, mb)) in elements.iter().enumerate() {
            for (c, (_, mc)) in elements.iter().enumerate() {
                let mut sum = Matrix::zeros(alg.dim(), alg.dim());
                for (x, y, z) in [(ma, mb, mc), (mb, mc, ma), (mc, ma, mb)] {
                    let term = matrix_commutator(&x.mul(&alpha), &matrix_commutator(y, z));
                    sum = sum.add(&term);
                }
                out.hom_lie.check(
                    "hom_jacobi",
                    &[a, b, c],
                    sum.flatten(),
                    vec![Rat::zero(); alg.dim() * alg.dim()],
                );
            }
        }
    }

    Ok(out)
}

// ---------------------------------------------------------------------------
// Inner derivations
// ---------------------------------------------------------------------------

/// Inner generators at one degree: the maps `y ↦ [α^k(y), x_1,…,x_{n-1}]`
/// over tuples of α-fixed basis vectors, plus the canonical basis of
/// their span.
#[derive(Clone, Debug)]
pub struct InnerBasis {
    pub degree: usize,
    pub generators: Vec<(Vec<Vec<Rat>>, Matrix)>,
    pub span: Vec<Matrix>,
}

impl InnerBasis {
    pub fn dim(&self) -> usize {
        self.span.len()
    }

    pub fn span_flattened(&self) -> Vec<Vec<Rat>> {
        self.span.iter().map(Matrix::flatten).collect()
    }
}

/// The matrix `y ↦ [α^k(y), x_1, …, x_{n-1}]` for α-fixed arguments.
pub fn inner_derivation(
    alg: &HomNambuAlgebra,
    k: usize,
    args: &[Vec<Rat>],
) -> Result<Matrix, Error> {
    let d = alg.dim();
    let n = alg.arity();
    if args.len() + 1 != n {
        return Err(Error::ArityMismatch {
            expected: n - 1,
            got: args.len(),
        });
    }
    if args.iter().any(|v| v.len() != d) {
        return Err(Error::dim_mismatch(
            "inner-derivation arguments must have the algebra dimension",
        ));
    }
    let alpha = alg.common_twist();
    for v in args {
        if alpha.mul_vec(v) != *v {
            return Err(Error::NotFixedPoint);
        }
    }
    let alpha_k = alpha.pow(k);
    let arg_sparse: Vec<SparseVec> = args
        .iter()
        .map(|v| crate::linalg::sparse_from_dense(v))
        .collect();
    let mut out = Matrix::zeros(d, d);
    for y in 0..d {
        let mut eval_args = Vec::with_capacity(n);
        eval_args.push(alpha_k.mul_sparse(&sparse_unit(y)));
        eval_args.extend(arg_sparse.iter().cloned());
        for (r, value) in alg.bracket().apply(&eval_args) {
            out.set(r, y, value);
        }
    }
    debug_assert!(
        derivation_space(alg, k + 1)
            .map(|b| b.contains(&out))
            .unwrap_or(true),
        "inner derivation must land in the degree-(k+1) derivation space"
    );
    Ok(out)
}

/// Spans the inner generators at degree k over a basis of the α-fixed
/// subspace in each argument slot.
pub fn inner_space(alg: &HomNambuAlgebra, k: usize) -> Result<InnerBasis, Error> {
    if !alg.is_multiplicative() {
        return Err(Error::NotMultiplicative);
    }
    let d = alg.dim();
    let n = alg.arity();
    let alpha = alg.common_twist();
    let fixed = nullspace(&alpha.sub(&Matrix::identity(d)));
    let mut generators = Vec::new();
    for picks in uniform_tuples(fixed.len(), n - 1) {
        let args: Vec<Vec<Rat>> = picks.iter().map(|&p| fixed[p].clone()).collect();
        let matrix = inner_derivation(alg, k, &args)?;
        generators.push((args, matrix));
    }
    let flattened: Vec<Vec<Rat>> = generators
        .iter()
        .map(|(_, m)| m.flatten())
        .filter(|v| !vec_is_zero(v))
        .collect();
    let span = canonical_span_basis(&flattened)
        .into_iter()
        .map(|v| Matrix::from_flat(d, d, v))
        .collect();
    Ok(InnerBasis {
        degree: k,
        generators,
        span,
    })
}

/// Result of the inner-ideal check: every commutator of a computed
/// derivation with an inner generator must land in the inner span at the
/// summed degree, and composing a generator with α must land one degree
/// higher.
#[derive(Clone, Debug)]
pub struct InnIdealReport {
    pub checked: usize,
    pub out_of_truncation: usize,
    pub failures: Vec<String>,
}

impl InnIdealReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn check_inn_ideal(alg: &HomNambuAlgebra, k_max: usize) -> Result<InnIdealReport, Error> {
    let alpha = alg.common_twist();
    let derivations: Vec<DerivationBasis> = (0..=k_max)
        .map(|k| derivation_space(alg, k))
        .collect::<Result<_, _>>()?;
    let inner: Vec<InnerBasis> = (0..=k_max)
        .map(|k| inner_space(alg, k))
        .collect::<Result<_, _>>()?;
    let mut report = InnIdealReport {
        checked: 0,
        out_of_truncation: 0,
        failures: Vec::new(),
    };
    for der in &derivations {
        for (di, d_matrix) in der.basis.iter().enumerate() {
            for inn in &inner {
                let landing = der.degree + inn.degree;
                if landing > k_max {
                    report.out_of_truncation += inn.generators.len();
                    continue;
                }
                for (gi, (_, generator)) in inn.generators.iter().enumerate() {
                    report.checked += 1;
                    let bracket = matrix_commutator(d_matrix, generator);
                    if !subspace_membership(&bracket.flatten(), &inner[landing].span_flattened()) {
                        report.failures.push(format!(
                            "[Der deg {} #{}, ad deg {} #{}] escapes Inn deg {}",
                            der.degree, di, inn.degree, gi, landing
                        ));
                    }
                }
            }
        }
    }
    // α'(ad_k) = ad_k ∘ α is the degree-(k+1) generator family.
    for inn in &inner {
        if inn.degree + 1 > k_max {
            report.out_of_truncation += inn.generators.len();
            continue;
        }
        for (gi, (_, generator)) in inn.generators.iter().enumerate() {
            report.checked += 1;
            let shifted = generator.mul(&alpha);
            if !subspace_membership(&shifted.flatten(), &inner[inn.degree + 1].span_flattened()) {
                report.failures.push(format!(
                    "ad deg {} #{} composed with α escapes Inn deg {}",
                    inn.degree,
                    gi,
                    inn.degree + 1
                ));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rat::rat_int;

    #[test]
    fn leib2_derivations_have_dimension_two() {
        // Frozen from the constraint-assembly oracle and hand
        // elimination: {[[2t, s], [0, t]]}.
        let basis = derivation_space(&fixtures::leib2(), 0).unwrap();
        assert_eq!(basis.dim(), 2);
        let mut e12 = Matrix::zeros(2, 2);
        e12.set(0, 1, rat_int(1));
        assert_eq!(basis.basis[0], e12);
        assert_eq!(
            basis.basis[1],
            Matrix::from_flat(2, 2, vec![rat_int(2), rat_int(0), rat_int(0), rat_int(1),])
        );
    }

    #[test]
    fn abelian_derivations_fill_gl() {
        for k in 0..3 {
            let basis = derivation_space(&fixtures::abelian(3, 2), k).unwrap();
            assert_eq!(basis.dim(), 9);
        }
    }

    #[test]
    fn nambu4_derivations_match_frozen_golden() {
        for k in 0..3 {
            assert_eq!(derivation_space(&fixtures::nambu4(), k).unwrap().dim(), 6);
        }
    }

    #[test]
    fn twisted_fixture_derivations_match_frozen_golden() {
        for k in 0..3 {
            let basis = derivation_space(&fixtures::leib2_twist(), k).unwrap();
            assert_eq!(basis.dim(), 1);
            // diag(2^{k+1}, 1) up to scale.
            let m = &basis.basis[0];
            assert_eq!(m.at(0, 0), &(m.at(1, 1) * &rat_int(1 << (k + 1))));
        }
    }

    #[test]
    fn derivation_space_requires_multiplicative_input() {
        let alg = crate::algebra::HomNambuAlgebra::new(
            fixtures::leib2().bracket().clone(),
            crate::algebra::TwistFamily::new(vec![Matrix::diag(&[1, 2])]),
        )
        .unwrap();
        assert_eq!(derivation_space(&alg, 0), Err(Error::NotMultiplicative));
    }

    #[test]
    fn degrees_coincide_for_identity_twist() {
        let alg = fixtures::leib2();
        let base = derivation_space(&alg, 0).unwrap();
        for k in 1..4 {
            assert_eq!(derivation_space(&alg, k).unwrap().basis, base.basis);
        }
    }

    #[test]
    fn bracket_as_omega_reproduces_derivation_space() {
        for alg in [
            fixtures::leib2(),
            fixtures::nambu4(),
            fixtures::leib2_twist(),
        ] {
            for k in 0..3 {
                let a = derivation_space(&alg, k).unwrap();
                let b =
                    omega_derivation_space(alg.dim(), alg.bracket().map(), &alg.common_twist(), k)
                        .unwrap();
                assert_eq!(a.basis, b.basis, "degree {k}");
            }
        }
    }

    #[test]
    fn zero_omega_leaves_the_centralizer() {
        use crate::tensor::MultiLinearMap;
        let zero = MultiLinearMap::uniform(2, 2, 2);
        let all = omega_derivation_space(2, &zero, &Matrix::identity(2), 0).unwrap();
        assert_eq!(all.dim(), 4);
        let diag = omega_derivation_space(2, &zero, &Matrix::diag(&[4, 2]), 0).unwrap();
        assert_eq!(diag.dim(), 2);
    }

    #[test]
    fn commutator_of_leib2_basis_stays_in_space() {
        let basis = derivation_space(&fixtures::leib2(), 0).unwrap();
        let (comm, degree) = commutator(&basis.basis[0], 0, &basis.basis[1], 0).unwrap();
        assert_eq!(degree, 0);
        assert!(basis.contains(&comm));
        let (self_comm, _) = commutator(&basis.basis[0], 1, &basis.basis[0], 2).unwrap();
        assert!(self_comm.is_zero());
        let (diag_comm, degree) =
            commutator(&Matrix::diag(&[2, 5]), 1, &Matrix::diag(&[-1, 3]), 2).unwrap();
        assert!(diag_comm.is_zero());
        assert_eq!(degree, 3);
        assert!(matches!(
            commutator(&Matrix::diag(&[1, 2]), 0, &Matrix::identity(3), 0),
            Err(Error::DimMismatch { .. })
        ));
    }

    #[test]
    fn graded_assembly_on_abelian_is_matrix_commutator() {
        let graded = assemble_der_algebra(&fixtures::abelian(2, 2), 1).unwrap();
        assert_eq!(graded.degrees[0].dim(), 4);
        assert_eq!(graded.degrees[1].dim(), 4);
        assert!(graded.hom_lie.holds());
        // [E01, E10] lands inside degree 0 with the matrix-commutator value.
        let e01 = &graded.degrees[0].basis[1];
        let e10 = &graded.degrees[0].basis[2];
        match graded.bracket_table.get(&(1, 2)).unwrap() {
            GradedEntry::InRange(coords) => {
                let mut acc = Matrix::zeros(2, 2);
                for (i, c) in coords.iter().take(4).enumerate() {
                    acc = acc.add(&graded.degrees[0].basis[i].scale(c));
                }
                assert_eq!(acc, matrix_commutator(e01, e10));
            }
            other => panic!("expected in-range entry, got {other:?}"),
        }
    }

    #[test]
    fn graded_assembly_flags_truncation_only_beyond_k_max() {
        let graded = assemble_der_algebra(&fixtures::leib2_twist(), 2).unwrap();
        assert!(graded.hom_lie.holds());
        let dims: Vec<usize> = graded.degrees.iter().map(DerivationBasis::dim).collect();
        assert_eq!(dims, vec![1, 1, 1]);
        // Degree 1 + degree 2 exceeds the truncation.
        assert_eq!(
            graded.bracket_table.get(&(1, 2)),
            Some(&GradedEntry::OutOfTruncation)
        );
        assert!(matches!(
            graded.bracket_table.get(&(0, 1)),
            Some(GradedEntry::InRange(_))
        ));
        // Twist shifts the top degree out of range.
        assert_eq!(graded.twist_table[2], GradedEntry::OutOfTruncation);
        assert!(matches!(graded.twist_table[0], GradedEntry::InRange(_)));
    }

    #[test]
    fn inner_derivation_examples() {
        let leib2 = fixtures::leib2();
        let zero_args = vec![vec![rat_int(0), rat_int(0)]];
        assert!(inner_derivation(&leib2, 0, &zero_args).unwrap().is_zero());
        let e2 = vec![vec![rat_int(0), rat_int(1)]];
        let ad = inner_derivation(&leib2, 0, &e2).unwrap();
        assert_eq!(ad, fixtures::leib2_derivation_e12());
        assert!(derivation_space(&leib2, 1).unwrap().contains(&ad));
        // α(e1) = 4·e1 ≠ e1 on the twisted fixture.
        let e1 = vec![vec![rat_int(1), rat_int(0)]];
        assert_eq!(
            inner_derivation(&fixtures::leib2_twist(), 0, &e1),
            Err(Error::NotFixedPoint)
        );
    }

    #[test]
    fn inner_space_dimensions_match_frozen_goldens() {
        assert_eq!(inner_space(&fixtures::leib2(), 0).unwrap().dim(), 1);
        assert_eq!(inner_space(&fixtures::nambu4(), 0).unwrap().dim(), 6);
        assert_eq!(inner_space(&fixtures::leib2_twist(), 0).unwrap().dim(), 0);
        assert_eq!(inner_space(&fixtures::abelian(3, 2), 0).unwrap().dim(), 0);
    }

    #[test]
    fn inner_ideal_holds_on_fixtures() {
        for alg in [
            fixtures::abelian(2, 2),
            fixtures::leib2(),
            fixtures::leib2_twist(),
        ] {
            let report = check_inn_ideal(&alg, 2).unwrap();
            assert!(report.holds(), "failures: {:?}", report.failures);
        }
    }

    #[test]
    fn sum_closure_on_leib2() {
        let alg = fixtures::leib2();
        let bracket = alg.bracket().map().clone();
        let alpha = Matrix::identity(2);
        let basis = derivation_space(&alg, 0).unwrap();
        for f in &basis.basis {
            assert!(sum_closure_check(f, &bracket, &bracket, &alpha, 0).unwrap());
            let zero = MultiLinearMap::uniform(2, 2, 2);
            assert!(sum_closure_check(f, &bracket, &zero, &alpha, 0).unwrap());
            let neg = bracket.scale(&rat_int(-1));
            assert!(sum_closure_check(f, &bracket, &neg, &alpha, 0).unwrap());
        }
    }
}
