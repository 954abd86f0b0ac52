//! n-ary Hom-Nambu algebras as structure constants plus twist matrices,
//! with exhaustive verifiers for the defining identities.
//!
//! An algebra is a triple `(g, [·,…,·], (α_1,…,α_{n-1}))`: a bracket
//! tensor on a `d`-dimensional space and one twist matrix per trailing
//! bracket slot. Verification enumerates basis tuples only; since every
//! identity is multilinear in each argument, the basis instances decide
//! it exactly, and at desk scale the enumeration is a proof rather than
//! a sample.

use crate::error::Error;
use crate::index::uniform_tuples;
use crate::linalg::{
    sparse_add_scaled, sparse_from_dense, sparse_to_dense, sparse_unit, subspace_membership,
    Matrix, SparseVec,
};
use crate::rat::Rat;
use crate::tensor::MultiLinearMap;

pub const DEFAULT_WITNESS_CAP: usize = 10;

/// Structure constants of an n-linear bracket on a d-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTensor {
    dim: usize,
    arity: usize,
    map: MultiLinearMap,
}

impl BracketTensor {
    pub fn new(dim: usize, arity: usize) -> Self {
        assert!(arity >= 1, "bracket arity must be positive");
        BracketTensor {
            dim,
            arity,
            map: MultiLinearMap::uniform(dim, arity, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn map(&self) -> &MultiLinearMap {
        &self.map
    }

    pub fn add_constant(&mut self, tuple: &[usize], target: usize, value: Rat) {
        assert!(
            tuple.iter().all(|&i| i < self.dim) && target < self.dim,
            "index out of range"
        );
        self.map.add_constant(tuple, target, value);
    }

    /// Image of a basis tuple.
    pub fn constant(&self, tuple: &[usize]) -> SparseVec {
        self.map.constant(tuple)
    }

    pub fn apply(&self, args: &[SparseVec]) -> SparseVec {
        self.map.apply(args)
    }

    pub fn entries(&self) -> Vec<(Vec<usize>, usize, Rat)> {
        self.map.entries()
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_zero()
    }
}

/// The twist maps α_1,…,α_{n-1}, one per trailing bracket slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistFamily {
    maps: Vec<Matrix>,
}

impl TwistFamily {
    pub fn new(maps: Vec<Matrix>) -> Self {
        assert!(maps.iter().all(|m| m.is_square()), "twists must be square");
        TwistFamily { maps }
    }

    pub fn identity(dim: usize, arity: usize) -> Self {
        TwistFamily {
            maps: vec![Matrix::identity(dim); arity.saturating_sub(1)],
        }
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// α_{slot+1} in one-based numbering.
    pub fn get(&self, slot: usize) -> &Matrix {
        &self.maps[slot]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn all_equal(&self) -> bool {
        self.maps.windows(2).all(|w| w[0] == w[1])
    }

    pub fn all_identity(&self) -> bool {
        self.maps.iter().all(Matrix::is_identity)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomNambuAlgebra {
    bracket: BracketTensor,
    twists: TwistFamily,
    multiplicative: bool,
}

impl HomNambuAlgebra {
    pub fn new(bracket: BracketTensor, twists: TwistFamily) -> Result<Self, Error> {
        if twists.len() + 1 != bracket.arity() {
            return Err(Error::ArityMismatch {
                expected: bracket.arity().saturating_sub(1),
                got: twists.len(),
            });
        }
        if twists.maps().iter().any(|m| m.rows() != bracket.dim()) {
            return Err(Error::dim_mismatch(
                "twist matrices must match the algebra dimension",
            ));
        }
        let mut alg = HomNambuAlgebra {
            bracket,
            twists,
            multiplicative: false,
        };
        alg.multiplicative = verify_multiplicative_capped(&alg, 1).holds();
        Ok(alg)
    }

    /// Leibniz-style algebra: all twists are the identity.
    pub fn untwisted(bracket: BracketTensor) -> Self {
        let twists = TwistFamily::identity(bracket.dim(), bracket.arity());
        HomNambuAlgebra::new(bracket, twists).expect("identity twists always fit")
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn arity(&self) -> usize {
        self.bracket.arity()
    }

    pub fn bracket(&self) -> &BracketTensor {
        &self.bracket
    }

    pub fn twists(&self) -> &TwistFamily {
        &self.twists
    }

    /// Cached verdict of [`verify_multiplicative`].
    pub fn is_multiplicative(&self) -> bool {
        self.multiplicative
    }

    /// The single twist matrix of a multiplicative algebra; identity for
    /// arity one, where the family is empty.
    pub fn common_twist(&self) -> Matrix {
        if self.twists.is_empty() {
            Matrix::identity(self.dim())
        } else {
            self.twists.get(0).clone()
        }
    }

    /// Sparse columns of each twist, indexed `[slot][basis]`; the basis
    /// images every verifier consumes.
    pub(crate) fn twist_columns(&self) -> Vec<Vec<SparseVec>> {
        self.twists
            .maps()
            .iter()
            .map(|m| {
                (0..self.dim())
                    .map(|b| m.mul_sparse(&sparse_unit(b)))
                    .collect()
            })
            .collect()
    }
}

/// Evaluates the bracket on dense argument vectors.
pub fn bracket_apply(alg: &HomNambuAlgebra, args: &[Vec<Rat>]) -> Result<Vec<Rat>, Error> {
    if args.len() != alg.arity() {
        return Err(Error::ArityMismatch {
            expected: alg.arity(),
            got: args.len(),
        });
    }
    if let Some(bad) = args.iter().find(|a| a.len() != alg.dim()) {
        return Err(Error::dim_mismatch(format!(
            "bracket argument has length {}, algebra dimension is {}",
            bad.len(),
            alg.dim()
        )));
    }
    let sparse: Vec<SparseVec> = args.iter().map(|a| sparse_from_dense(a)).collect();
    Ok(sparse_to_dense(&alg.bracket.apply(&sparse), alg.dim()))
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// One failing identity instance: the basis tuple it happened on and the
/// two sides that should have been equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub label: &'static str,
    pub args: Vec<usize>,
    pub left: Vec<Rat>,
    pub right: Vec<Rat>,
}

/// Outcome of an exhaustive identity check. Witnesses are recorded in
/// evaluation order (ascending multi-index) up to `witness_cap`; the
/// failure count keeps counting past the cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub instances: usize,
    pub failures: usize,
    pub witness_cap: usize,
    pub witnesses: Vec<Witness>,
}

impl IdentityReport {
    pub fn new(witness_cap: usize) -> Self {
        IdentityReport {
            instances: 0,
            failures: 0,
            witness_cap: witness_cap.max(1),
            witnesses: Vec::new(),
        }
    }

    pub fn holds(&self) -> bool {
        self.failures == 0
    }

    pub fn check(&mut self, label: &'static str, args: &[usize], left: Vec<Rat>, right: Vec<Rat>) {
        self.instances += 1;
        if left != right {
            self.failures += 1;
            if self.witnesses.len() < self.witness_cap {
                self.witnesses.push(Witness {
                    label,
                    args: args.to_vec(),
                    left,
                    right,
                });
            }
        }
    }

    fn check_sparse(
        &mut self,
        label: &'static str,
        args: &[usize],
        left: &SparseVec,
        right: &SparseVec,
        dim: usize,
    ) {
        self.instances += 1;
        if left != right {
            self.failures += 1;
            if self.witnesses.len() < self.witness_cap {
                self.witnesses.push(Witness {
                    label,
                    args: args.to_vec(),
                    left: sparse_to_dense(left, dim),
                    right: sparse_to_dense(right, dim),
                });
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Identity verifiers
// ---------------------------------------------------------------------------

/// The fundamental Hom-Nambu identity, checked on every basis
/// `(2n-1)`-tuple `(x_1..x_n, y_1..y_{n-1})` with the slot-indexed
/// twists applied exactly as displayed in the defining equation.
pub fn verify_hom_nambu(alg: &HomNambuAlgebra) -> IdentityReport {
    verify_hom_nambu_capped(alg, DEFAULT_WITNESS_CAP)
}

pub fn verify_hom_nambu_capped(alg: &HomNambuAlgebra, cap: usize) -> IdentityReport {
    let cols = alg.twist_columns();
    hom_nambu_check(alg, cap, "hom_nambu", |slot| &cols[slot])
}

/// The multiplicative reading of the identity: every twist slot uses the
/// single map α. Distinct from [`verify_hom_nambu`] only when the family
/// is non-constant, but kept as a second route so the two can be
/// compared on multiplicative algebras.
pub fn verify_hom_nambu_mult_form(
    alg: &HomNambuAlgebra,
    cap: usize,
) -> Result<IdentityReport, Error> {
    if !alg.is_multiplicative() {
        return Err(Error::NotMultiplicative);
    }
    let alpha = alg.common_twist();
    let cols: Vec<SparseVec> = (0..alg.dim())
        .map(|b| alpha.mul_sparse(&sparse_unit(b)))
        .collect();
    Ok(hom_nambu_check(alg, cap, "hom_nambu_mult", |_| &cols))
}

fn hom_nambu_check<'a>(
    alg: &HomNambuAlgebra,
    cap: usize,
    label: &'static str,
    twist_cols: impl Fn(usize) -> &'a Vec<SparseVec>,
) -> IdentityReport {
    let d = alg.dim();
    let n = alg.arity();
    let mut report = IdentityReport::new(cap);
    for combined in uniform_tuples(d, 2 * n - 1) {
        let (x, y) = combined.split_at(n);
        // Left side: [[x_1..x_n], α_1(y_1), …, α_{n-1}(y_{n-1})].
        let inner = alg.bracket.constant(x);
        let mut args: Vec<SparseVec> = Vec::with_capacity(n);
        args.push(inner);
        for (t, &yj) in y.iter().enumerate() {
            args.push(twist_cols(t)[yj].clone());
        }
        let lhs = alg.bracket.apply(&args);
        // Right side: sum over the slot receiving [x_i, y_1..y_{n-1}].
        let mut rhs = SparseVec::new();
        let one = Rat::from_integer(1.into());
        for i in 0..n {
            let mut inner_args = Vec::with_capacity(n);
            inner_args.push(x[i]);
            inner_args.extend_from_slice(y);
            let inner_i = alg.bracket.constant(&inner_args);
            let mut term_args: Vec<SparseVec> = Vec::with_capacity(n);
            for (t, &xt) in x.iter().enumerate() {
                if t == i {
                    term_args.push(inner_i.clone());
                } else if t < i {
                    term_args.push(twist_cols(t)[xt].clone());
                } else {
                    term_args.push(twist_cols(t - 1)[xt].clone());
                }
            }
            sparse_add_scaled(&mut rhs, &one, &alg.bracket.apply(&term_args));
        }
        report.check_sparse(label, &combined, &lhs, &rhs, d);
    }
    report
}

/// The untwisted Leibniz n-algebra identity. A code path independent of
/// the twist machinery, so its verdicts can be compared against
/// [`verify_hom_nambu`] on identity-twisted algebras.
pub fn verify_leibniz(bracket: &BracketTensor) -> IdentityReport {
    verify_leibniz_capped(bracket, DEFAULT_WITNESS_CAP)
}

pub fn verify_leibniz_capped(bracket: &BracketTensor, cap: usize) -> IdentityReport {
    let d = bracket.dim();
    let n = bracket.arity();
    let one = Rat::from_integer(1.into());
    let mut report = IdentityReport::new(cap);
    for combined in uniform_tuples(d, 2 * n - 1) {
        let (x, y) = combined.split_at(n);
        let mut args: Vec<SparseVec> = Vec::with_capacity(n);
        args.push(bracket.constant(x));
        args.extend(y.iter().map(|&j| sparse_unit(j)));
        let lhs = bracket.apply(&args);
        let mut rhs = SparseVec::new();
        for i in 0..n {
            let mut inner_args = Vec::with_capacity(n);
            inner_args.push(x[i]);
            inner_args.extend_from_slice(y);
            let inner = bracket.constant(&inner_args);
            let mut term_args: Vec<SparseVec> = Vec::with_capacity(n);
            for (t, &xt) in x.iter().enumerate() {
                term_args.push(if t == i {
                    inner.clone()
                } else {
                    sparse_unit(xt)
                });
            }
            sparse_add_scaled(&mut rhs, &one, &bracket.apply(&term_args));
        }
        report.check_sparse("leibniz", &combined, &lhs, &rhs, d);
    }
    report
}

/// Multiplicativity: all twists coincide and the common map is a bracket
/// homomorphism.
pub fn verify_multiplicative(alg: &HomNambuAlgebra) -> IdentityReport {
    verify_multiplicative_capped(alg, DEFAULT_WITNESS_CAP)
}

pub fn verify_multiplicative_capped(alg: &HomNambuAlgebra, cap: usize) -> IdentityReport {
    let d = alg.dim();
    let mut report = IdentityReport::new(cap);
    for slot in 1..alg.twists.len() {
        for b in 0..d {
            report.check(
                "twists_equal",
                &[slot, b],
                alg.twists.get(slot).col(b),
                alg.twists.get(0).col(b),
            );
        }
    }
    let alpha = alg.common_twist();
    let alpha_cols: Vec<SparseVec> = (0..d).map(|b| alpha.mul_sparse(&sparse_unit(b))).collect();
    for tuple in uniform_tuples(d, alg.arity()) {
        let lhs = alpha.mul_sparse(&alg.bracket.constant(&tuple));
        let args: Vec<SparseVec> = tuple.iter().map(|&t| alpha_cols[t].clone()).collect();
        let rhs = alg.bracket.apply(&args);
        report.check_sparse("bracket_compat", &tuple, &lhs, &rhs, d);
    }
    report
}

/// Antisymmetry plus the twisted Jacobi identity (binary case).
pub fn verify_hom_lie(alg: &HomNambuAlgebra) -> Result<IdentityReport, Error> {
    verify_hom_lie_capped(alg, DEFAULT_WITNESS_CAP)
}

pub fn verify_hom_lie_capped(alg: &HomNambuAlgebra, cap: usize) -> Result<IdentityReport, Error> {
    if alg.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            got: alg.arity(),
        });
    }
    let d = alg.dim();
    let alpha = alg.common_twist();
    let alpha_cols: Vec<SparseVec> = (0..d).map(|b| alpha.mul_sparse(&sparse_unit(b))).collect();
    let mut report = IdentityReport::new(cap);
    for pair in uniform_tuples(d, 2) {
        let lhs = alg.bracket.constant(&pair);
        let flipped = alg.bracket.constant(&[pair[1], pair[0]]);
        let rhs = sparse_scale_neg(&flipped);
        report.check_sparse("antisymmetry", &pair, &lhs, &rhs, d);
    }
    let one = Rat::from_integer(1.into());
    for triple in uniform_tuples(d, 3) {
        let mut total = SparseVec::new();
        for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            let inner = alg.bracket.constant(&[triple[b], triple[c]]);
            let term = alg.bracket.apply(&[alpha_cols[triple[a]].clone(), inner]);
            sparse_add_scaled(&mut total, &one, &term);
        }
        report.check_sparse("hom_jacobi", &triple, &total, &SparseVec::new(), d);
    }
    Ok(report)
}

fn sparse_scale_neg(v: &SparseVec) -> SparseVec {
    v.iter().map(|(i, x)| (*i, -x)).collect()
}

/// `[I, g] ⊆ I` and `α(I) ⊆ I` for a binary algebra.
pub fn verify_hom_ideal(subspace: &[Vec<Rat>], alg: &HomNambuAlgebra) -> Result<bool, Error> {
    if alg.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            got: alg.arity(),
        });
    }
    let d = alg.dim();
    let alpha = alg.common_twist();
    for v in subspace {
        if v.len() != d {
            return Err(Error::dim_mismatch(
                "ideal basis vector has the wrong length",
            ));
        }
        let vs = sparse_from_dense(v);
        for j in 0..d {
            let product = alg.bracket.apply(&[vs.clone(), sparse_unit(j)]);
            if !subspace_membership(&sparse_to_dense(&product, d), subspace) {
                return Ok(false);
            }
        }
        if !subspace_membership(&alpha.mul_vec(v), subspace) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `f` intertwines brackets and twists of the two algebras.
pub fn verify_morphism(
    f: &Matrix,
    source: &HomNambuAlgebra,
    target: &HomNambuAlgebra,
) -> Result<IdentityReport, Error> {
    verify_morphism_capped(f, source, target, DEFAULT_WITNESS_CAP)
}

pub fn verify_morphism_capped(
    f: &Matrix,
    source: &HomNambuAlgebra,
    target: &HomNambuAlgebra,
    cap: usize,
) -> Result<IdentityReport, Error> {
    if source.arity() != target.arity() {
        return Err(Error::ArityMismatch {
            expected: source.arity(),
            got: target.arity(),
        });
    }
    if f.rows() != target.dim() || f.cols() != source.dim() {
        return Err(Error::dim_mismatch(format!(
            "morphism matrix is {}x{}, expected {}x{}",
            f.rows(),
            f.cols(),
            target.dim(),
            source.dim()
        )));
    }
    let mut report = IdentityReport::new(cap);
    for slot in 0..source.twists().len() {
        let lhs = f.mul(source.twists().get(slot));
        let rhs = target.twists().get(slot).mul(f);
        for b in 0..source.dim() {
            report.check("twist_compat", &[slot, b], lhs.col(b), rhs.col(b));
        }
    }
    let f_cols: Vec<SparseVec> = (0..source.dim())
        .map(|b| f.mul_sparse(&sparse_unit(b)))
        .collect();
    for tuple in uniform_tuples(source.dim(), source.arity()) {
        let lhs = f.mul_sparse(&source.bracket().constant(&tuple));
        let args: Vec<SparseVec> = tuple.iter().map(|&t| f_cols[t].clone()).collect();
        let rhs = target.bracket().apply(&args);
        report.check_sparse("bracket_compat", &tuple, &lhs, &rhs, target.dim());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rat::{rat, rat_int};

    #[test]
    fn zero_bracket_applies_to_zero() {
        let alg = fixtures::abelian(3, 2);
        let v = vec![rat_int(1), rat_int(2), rat_int(3)];
        let out = bracket_apply(&alg, &[v.clone(), v]).unwrap();
        assert!(out.iter().all(|x| x == &rat_int(0)));
    }

    #[test]
    fn leib2_bracket_reads_off_constants() {
        let alg = fixtures::leib2();
        let e1 = vec![rat_int(1), rat_int(0)];
        let e2 = vec![rat_int(0), rat_int(1)];
        assert_eq!(bracket_apply(&alg, &[e2.clone(), e2.clone()]).unwrap(), e1);
        // Bilinearity: [e1+e2, e2] = [e1,e2] + [e2,e2] = e1.
        let mixed = vec![rat_int(1), rat_int(1)];
        assert_eq!(bracket_apply(&alg, &[mixed, e2]).unwrap(), e1);
    }

    #[test]
    fn bracket_apply_guards_shapes() {
        let alg = fixtures::leib2();
        let e2 = vec![rat_int(0), rat_int(1)];
        assert!(matches!(
            bracket_apply(&alg, std::slice::from_ref(&e2)),
            Err(Error::ArityMismatch { .. })
        ));
        assert!(matches!(
            bracket_apply(&alg, &[e2, vec![rat_int(1)]]),
            Err(Error::DimMismatch { .. })
        ));
    }

    #[test]
    fn bracket_apply_is_multilinear_in_each_slot() {
        let alg = fixtures::nambu4();
        let u = vec![rat(1, 2), rat_int(0), rat_int(3), rat_int(-1)];
        let v = vec![rat_int(2), rat(5, 3), rat_int(0), rat_int(1)];
        let w = vec![rat_int(1), rat_int(1), rat_int(0), rat_int(0)];
        let z = vec![rat_int(0), rat_int(2), rat_int(-2), rat(7, 2)];
        let a = rat(3, 4);
        let b = rat(-2, 5);
        let combo: Vec<Rat> = u.iter().zip(&v).map(|(x, y)| &a * x + &b * y).collect();
        let lhs = bracket_apply(&alg, &[w.clone(), combo, z.clone()]).unwrap();
        let left = bracket_apply(&alg, &[w.clone(), u, z.clone()]).unwrap();
        let right = bracket_apply(&alg, &[w, v, z]).unwrap();
        let expect: Vec<Rat> = left
            .iter()
            .zip(&right)
            .map(|(x, y)| &a * x + &b * y)
            .collect();
        assert_eq!(lhs, expect);
    }

    #[test]
    fn abelian_passes_hom_nambu_with_arbitrary_twists() {
        let bracket = BracketTensor::new(2, 2);
        let twists = TwistFamily::new(vec![Matrix::from_rows(vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(3), rat_int(4)],
        ])]);
        let alg = HomNambuAlgebra::new(bracket, twists).unwrap();
        assert!(verify_hom_nambu(&alg).holds());
    }

    proptest::proptest! {
        #[test]
        fn bracket_apply_is_multilinear_on_random_vectors(
            seeds in proptest::collection::vec((-5i64..6, 1i64..4), 12),
            slot in 0usize..3,
            a in (-4i64..5, 1i64..4),
            b in (-4i64..5, 1i64..4),
        ) {
            let alg = fixtures::nambu4();
            let vec_at = |offset: usize| -> Vec<Rat> {
                (0..4).map(|i| rat(seeds[offset + i].0, seeds[offset + i].1)).collect()
            };
            let base: Vec<Vec<Rat>> = vec![vec_at(0), vec_at(4), vec_at(8)];
            let u = vec_at(4);
            let v = vec_at(8);
            let a = rat(a.0, a.1);
            let b = rat(b.0, b.1);
            let combo: Vec<Rat> = u.iter().zip(&v).map(|(x, y)| &a * x + &b * y).collect();
            let mut args = base.clone();
            args[slot] = combo;
            let lhs = bracket_apply(&alg, &args).unwrap();
            let mut left_args = base.clone();
            left_args[slot] = u;
            let mut right_args = base;
            right_args[slot] = v;
            let left = bracket_apply(&alg, &left_args).unwrap();
            let right = bracket_apply(&alg, &right_args).unwrap();
            let expect: Vec<Rat> =
                left.iter().zip(&right).map(|(x, y)| &a * x + &b * y).collect();
            proptest::prop_assert_eq!(lhs, expect);
        }

        /// On identity twists the twisted and untwisted verifiers are
        /// distinct code paths over the same condition; random brackets
        /// must never split their verdicts or their witness tuples.
        #[test]
        fn twisted_and_untwisted_routes_agree_on_random_brackets(
            entries in proptest::collection::vec((0usize..27, -2i64..3), 0..7),
        ) {
            let mut bracket = BracketTensor::new(3, 2);
            for (raw, value) in entries {
                let tuple = [raw / 9, (raw / 3) % 3];
                bracket.add_constant(&tuple, raw % 3, rat_int(value));
            }
            let alg = HomNambuAlgebra::untwisted(bracket.clone());
            let twisted = verify_hom_nambu_capped(&alg, 30);
            let untwisted = verify_leibniz_capped(&bracket, 30);
            proptest::prop_assert_eq!(twisted.holds(), untwisted.holds());
            proptest::prop_assert_eq!(twisted.failures, untwisted.failures);
            let args_a: Vec<_> = twisted.witnesses.iter().map(|w| w.args.clone()).collect();
            let args_b: Vec<_> = untwisted.witnesses.iter().map(|w| w.args.clone()).collect();
            proptest::prop_assert_eq!(args_a, args_b);
        }
    }

    #[test]
    fn leib2_passes_hom_nambu() {
        let report = verify_hom_nambu(&fixtures::leib2());
        assert!(report.holds());
        assert_eq!(report.instances, 8);
    }

    #[test]
    fn corrupted_leib2_fails_with_first_witness() {
        let alg = fixtures::leib2_corrupt();
        let report = verify_hom_nambu(&alg);
        assert!(!report.holds());
        // First failing triple in ascending multi-index order:
        // (x1,x2,y1) = (e1,e1,e1): lhs = [[e1,e1],e1] = [e2,e1] = 0,
        // rhs = [[e1,e1],e1] + [e1,[e1,e1]] = [e1,e2] = 0 ... the first
        // imbalance appears at (e1,e1,e2): lhs = [e2,e2] = e1,
        // rhs = [[e1,e2],e1] + [e1,[e1,e2]] = 0.
        let w = &report.witnesses[0];
        assert_eq!(w.args, vec![0, 0, 1]);
        assert_eq!(w.left, vec![rat_int(1), rat_int(0)]);
        assert_eq!(w.right, vec![rat_int(0), rat_int(0)]);
    }

    #[test]
    fn multiplicative_verdicts() {
        assert!(verify_multiplicative(&fixtures::leib2()).holds());
        assert!(verify_multiplicative(&fixtures::leib2_twist()).holds());
        // diag(1,2) is not a bracket homomorphism of leib2.
        let twists = TwistFamily::new(vec![Matrix::diag(&[1, 2])]);
        let alg = HomNambuAlgebra::new(fixtures::leib2().bracket().clone(), twists).unwrap();
        let report = verify_multiplicative(&alg);
        assert!(!report.holds());
        assert!(!alg.is_multiplicative());
    }

    #[test]
    fn hom_lie_verdicts() {
        // Abelian with any twist is Hom-Lie.
        assert!(verify_hom_lie(&fixtures::abelian(2, 2)).unwrap().holds());
        // leib2 fails antisymmetry: [e2,e2] = e1 ≠ 0.
        let report = verify_hom_lie(&fixtures::leib2()).unwrap();
        assert!(!report.holds());
        assert!(report.witnesses.iter().any(|w| w.label == "antisymmetry"));
        // [e1,e2] = e2 = -[e2,e1] with identity twist is a Lie algebra.
        let mut bracket = BracketTensor::new(2, 2);
        bracket.add_constant(&[0, 1], 1, rat_int(1));
        bracket.add_constant(&[1, 0], 1, rat_int(-1));
        let alg = HomNambuAlgebra::untwisted(bracket);
        assert!(verify_hom_lie(&alg).unwrap().holds());
        assert!(matches!(
            verify_hom_lie(&fixtures::nambu4()),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn hom_ideal_examples() {
        let mut bracket = BracketTensor::new(2, 2);
        bracket.add_constant(&[0, 1], 1, rat_int(1));
        bracket.add_constant(&[1, 0], 1, rat_int(-1));
        let alg = HomNambuAlgebra::untwisted(bracket);
        let whole = vec![vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(1)]];
        assert!(verify_hom_ideal(&whole, &alg).unwrap());
        assert!(verify_hom_ideal(&[], &alg).unwrap());
        let span_e2 = vec![vec![rat_int(0), rat_int(1)]];
        assert!(verify_hom_ideal(&span_e2, &alg).unwrap());
        let span_e1 = vec![vec![rat_int(1), rat_int(0)]];
        assert!(!verify_hom_ideal(&span_e1, &alg).unwrap());
    }

    #[test]
    fn morphism_verdicts() {
        let leib2 = fixtures::leib2();
        assert!(verify_morphism(&Matrix::identity(2), &leib2, &leib2)
            .unwrap()
            .holds());
        assert!(verify_morphism(&fixtures::rho42(), &leib2, &leib2)
            .unwrap()
            .holds());
        let report = verify_morphism(&Matrix::diag(&[1, 2]), &leib2, &leib2).unwrap();
        assert!(!report.holds());
    }

    #[test]
    fn hom_nambu_and_leibniz_paths_agree_on_identity_twists() {
        for alg in [
            fixtures::leib2(),
            fixtures::nambu4(),
            fixtures::abelian(3, 2),
        ] {
            assert!(alg.twists().all_identity());
            let a = verify_hom_nambu(&alg);
            let b = verify_leibniz(alg.bracket());
            assert_eq!(a.holds(), b.holds());
            assert_eq!(a.instances, b.instances);
        }
        let corrupt = fixtures::leib2_corrupt();
        let a = verify_hom_nambu(&corrupt);
        let b = verify_leibniz(corrupt.bracket());
        assert_eq!(a.holds(), b.holds());
        let wa: Vec<_> = a.witnesses.iter().map(|w| w.args.clone()).collect();
        let wb: Vec<_> = b.witnesses.iter().map(|w| w.args.clone()).collect();
        assert_eq!(wa, wb);
    }

    #[test]
    fn both_hom_nambu_routes_agree_on_multiplicative_algebras() {
        for alg in [
            fixtures::leib2(),
            fixtures::leib2_twist(),
            fixtures::nambu4(),
        ] {
            assert!(alg.is_multiplicative());
            let a = verify_hom_nambu_capped(&alg, 20);
            let b = verify_hom_nambu_mult_form(&alg, 20).unwrap();
            assert_eq!(a.holds(), b.holds());
            assert_eq!(
                a.witnesses
                    .iter()
                    .map(|w| (&w.args, &w.left, &w.right))
                    .collect::<Vec<_>>(),
                b.witnesses
                    .iter()
                    .map(|w| (&w.args, &w.left, &w.right))
                    .collect::<Vec<_>>()
            );
        }
    }
}
