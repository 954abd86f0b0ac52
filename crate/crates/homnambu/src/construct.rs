//! Constructions that produce new algebras and multilinear maps from old
//! ones: twisting a Leibniz algebra along an endomorphism, composing a
//! multiplicative algebra with a morphism, adjoining a derivation,
//! composing multilinear maps, and the tensor-power brackets that turn
//! an (n+1)-ary algebra into a binary one on `g^{⊗n}` (or a `(kn+1)`-ary
//! one into an `(n+1)`-ary one on `g^{⊗k}`).
//!
//! Constructors whose underlying statements have ambiguous hypotheses do
//! not assert anything about their output: they build the algebra and
//! leave the verdict to the identity verifiers.

use num_traits::Zero;

use crate::algebra::{
    verify_leibniz_capped, verify_morphism_capped, BracketTensor, HomNambuAlgebra, TwistFamily,
};
use crate::error::Error;
use crate::index::{linearize_uniform, tuples, uniform_tuples, TensorPowerSpace};
use crate::linalg::{sparse_unit, Matrix, SparseVec};
use crate::rat::Rat;
use crate::tensor::MultiLinearMap;

/// Twists a Leibniz algebra along one of its endomorphisms `ρ`,
/// producing `(g, ρ∘[·,…,·], ρ)`. The output is multiplicative whenever
/// the preconditions hold, and the identity verifiers confirm it.
pub fn twist_by_endomorphism(
    leib: &HomNambuAlgebra,
    rho: &Matrix,
) -> Result<HomNambuAlgebra, Error> {
    if !leib.twists().all_identity() || !verify_leibniz_capped(leib.bracket(), 1).holds() {
        return Err(Error::NotLeibniz);
    }
    if !verify_morphism_capped(rho, leib, leib, 1)?.holds() {
        return Err(Error::NotAMorphism);
    }
    let bracket = compose_bracket(rho, leib.bracket());
    let twists = TwistFamily::new(vec![rho.clone(); leib.arity() - 1]);
    HomNambuAlgebra::new(bracket, twists)
}

/// Composes a multiplicative algebra with a morphism `β`, producing
/// `(g, β∘[·,…,·], β∘α)`.
pub fn compose_twist(alg: &HomNambuAlgebra, beta: &Matrix) -> Result<HomNambuAlgebra, Error> {
    if !alg.is_multiplicative() {
        return Err(Error::NotMultiplicative);
    }
    if !verify_morphism_capped(beta, alg, alg, 1)?.holds() {
        return Err(Error::NotAMorphism);
    }
    let bracket = compose_bracket(beta, alg.bracket());
    let new_twist = beta.mul(&alg.common_twist());
    let twists = TwistFamily::new(vec![new_twist; alg.arity() - 1]);
    HomNambuAlgebra::new(bracket, twists)
}

fn compose_bracket(post: &Matrix, bracket: &BracketTensor) -> BracketTensor {
    let mut out = BracketTensor::new(bracket.dim(), bracket.arity());
    for tuple in uniform_tuples(bracket.dim(), bracket.arity()) {
        let image = post.mul_sparse(&bracket.constant(&tuple));
        for (j, c) in image {
            out.add_constant(&tuple, j, c);
        }
    }
    out
}

/// Adjoins a generator `D` to a binary algebra: on `g ⊕ K·D` the bracket
/// is `[x + a·D, y + b·D] = [x,y] + a·D(y) - b·D(x)` and the twist fixes
/// the new generator. Whether the result satisfies the Hom-Leibniz
/// identity is the caller's check; it does exactly when `D` is an
/// α-derivation.
pub fn derivation_extension(
    alg: &HomNambuAlgebra,
    d_map: &Matrix,
) -> Result<HomNambuAlgebra, Error> {
    if alg.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            got: alg.arity(),
        });
    }
    let d = alg.dim();
    if d_map.rows() != d || d_map.cols() != d {
        return Err(Error::dim_mismatch(
            "derivation matrix must be square of the algebra dimension",
        ));
    }
    let alpha = alg.common_twist();
    if d_map.mul(&alpha) != alpha.mul(d_map) {
        return Err(Error::TwistCommutationFailure);
    }
    let mut bracket = BracketTensor::new(d + 1, 2);
    for (tuple, target, value) in alg.bracket().entries() {
        bracket.add_constant(&tuple, target, value);
    }
    for q in 0..d {
        for r in 0..d {
            let v = d_map.at(r, q);
            if !v.is_zero() {
                bracket.add_constant(&[d, q], r, v.clone());
                bracket.add_constant(&[q, d], r, -v);
            }
        }
    }
    let twists = TwistFamily::new(vec![alpha.block_diag(&Matrix::identity(1))]);
    HomNambuAlgebra::new(bracket, twists)
}

/// Nested composite `σ(a_1,…,a_n) = ω(ω_1(…), …, ω_k(…))`, where the
/// arguments are split among the parts in order.
pub fn compose_multilinear(
    omega: &MultiLinearMap,
    parts: &[MultiLinearMap],
) -> Result<MultiLinearMap, Error> {
    if omega.arity() != parts.len() {
        return Err(Error::ArityMismatch {
            expected: omega.arity(),
            got: parts.len(),
        });
    }
    for (slot, part) in parts.iter().enumerate() {
        if part.target_dim() != omega.source_dims()[slot] {
            return Err(Error::dim_mismatch(format!(
                "part {} targets dimension {}, outer slot expects {}",
                slot + 1,
                part.target_dim(),
                omega.source_dims()[slot]
            )));
        }
    }
    let source_dims: Vec<usize> = parts
        .iter()
        .flat_map(|p| p.source_dims().iter().copied())
        .collect();
    let mut sigma = MultiLinearMap::new(source_dims.clone(), omega.target_dim());
    for tuple in tuples(&source_dims) {
        let mut offset = 0;
        let mut inner_values = Vec::with_capacity(parts.len());
        for part in parts {
            let span = part.arity();
            let args: Vec<SparseVec> = tuple[offset..offset + span]
                .iter()
                .map(|&i| sparse_unit(i))
                .collect();
            inner_values.push(part.apply(&args));
            offset += span;
        }
        for (j, c) in omega.apply(&inner_values) {
            sigma.add_constant(&tuple, j, c);
        }
    }
    Ok(sigma)
}

/// The bilinear map on `A^{⊗n}` that feeds the whole second tensor into
/// slot `slot` of an (n+1)-linear `ω` and twists the remaining factors
/// of the first tensor by `α^twist_power`:
/// `(a_1⊗…⊗a_n, b_1⊗…⊗b_n) ↦ α^k(a_1)⊗…⊗ω(a_i,b_1,…,b_n)⊗…⊗α^k(a_n)`.
pub fn tensor_slot_map(
    omega: &MultiLinearMap,
    slot: usize,
    twist_power: usize,
    alpha: &Matrix,
) -> Result<MultiLinearMap, Error> {
    let base_dim = omega.target_dim();
    if omega.arity() < 2 || omega.source_dims().iter().any(|&s| s != base_dim) {
        return Err(Error::dim_mismatch(
            "slot map needs an (n+1)-linear map with equal source and target dimensions",
        ));
    }
    let n = omega.arity() - 1;
    if slot == 0 || slot > n {
        return Err(Error::index_out_of_range(format!(
            "slot {slot} not in 1..={n}"
        )));
    }
    if alpha.rows() != base_dim || alpha.cols() != base_dim {
        return Err(Error::dim_mismatch(
            "twist matrix must match the base dimension",
        ));
    }
    let space = TensorPowerSpace::new(base_dim, n);
    let total = space.total_dim();
    let alpha_k = alpha.pow(twist_power);
    let alpha_cols: Vec<SparseVec> = (0..base_dim)
        .map(|b| alpha_k.mul_sparse(&sparse_unit(b)))
        .collect();
    let mut out = MultiLinearMap::new(vec![total, total], total);
    for a_tuple in space.basis_tuples() {
        for b_tuple in space.basis_tuples() {
            let mut omega_args = Vec::with_capacity(n + 1);
            omega_args.push(sparse_unit(a_tuple[slot - 1]));
            omega_args.extend(b_tuple.iter().map(|&b| sparse_unit(b)));
            let mut factors: Vec<SparseVec> = Vec::with_capacity(n);
            for (t, &a) in a_tuple.iter().enumerate() {
                if t == slot - 1 {
                    factors.push(omega.apply(&omega_args));
                } else {
                    factors.push(alpha_cols[a].clone());
                }
            }
            let key = [space.index_of(&a_tuple), space.index_of(&b_tuple)];
            for (index, value) in expand_tensor(&factors, base_dim) {
                out.add_constant(&key, index, value);
            }
        }
    }
    Ok(out)
}

/// Expands a list of sparse base-space factors into coordinates of the
/// tensor power, first factor most significant.
fn expand_tensor(factors: &[SparseVec], base_dim: usize) -> SparseVec {
    let supports: Vec<usize> = factors.iter().map(|f| f.len()).collect();
    let mut out = SparseVec::new();
    for combo in tuples(&supports) {
        let mut digits = Vec::with_capacity(factors.len());
        let mut coeff = Rat::from_integer(1.into());
        for (slot, &pick) in combo.iter().enumerate() {
            let (index, value) = &factors[slot][pick];
            digits.push(*index);
            coeff *= value;
        }
        out.push((linearize_uniform(&digits, base_dim), coeff));
    }
    out.sort_by_key(|(i, _)| *i);
    out
}

/// The Leibniz lift `Σ_j id⊗…⊗f⊗…⊗id` of a linear map to a tensor power.
pub fn leibniz_lift(f: &Matrix, power: usize) -> Matrix {
    assert!(f.is_square(), "lift needs a square matrix");
    let d = f.rows();
    let total = d.pow(power as u32);
    let eye = Matrix::identity(d);
    let mut out = Matrix::zeros(total, total);
    for j in 0..power {
        let mut block = Matrix::identity(1);
        for t in 0..power {
            block = block.kron(if t == j { f } else { &eye });
        }
        out = out.add(&block);
    }
    out
}

/// Binary bracket on `g^{⊗n}` from an (n+1)-ary algebra, no twist
/// factors: `[a_1⊗…⊗a_n, b_1⊗…⊗b_n] = Σ_i a_1⊗…⊗[a_i,b_1,…,b_n]⊗…⊗a_n`,
/// with identity twist. The Leibniz verdict on the output is reported by
/// the verifiers, not assumed.
pub fn tensor_leibniz(alg: &HomNambuAlgebra) -> Result<HomNambuAlgebra, Error> {
    if alg.arity() < 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            got: alg.arity(),
        });
    }
    let bracket = tensor_bracket(alg, None)?;
    Ok(HomNambuAlgebra::untwisted(bracket))
}

/// Binary bracket on `g^{⊗n}` with α applied to the spectator factors
/// and twist `α^{⊗n}`; the multiplicative Hom-Leibniz property of the
/// output is the constructed theorem the acceptance suite asserts.
pub fn tensor_hom_leibniz(alg: &HomNambuAlgebra) -> Result<HomNambuAlgebra, Error> {
    if alg.arity() < 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            got: alg.arity(),
        });
    }
    if !alg.is_multiplicative() {
        return Err(Error::NotMultiplicative);
    }
    let alpha = alg.common_twist();
    let bracket = tensor_bracket(alg, Some(&alpha))?;
    let twists = TwistFamily::new(vec![alpha.kron_pow(alg.arity() - 1)]);
    HomNambuAlgebra::new(bracket, twists)
}

fn tensor_bracket(
    alg: &HomNambuAlgebra,
    spectator_twist: Option<&Matrix>,
) -> Result<BracketTensor, Error> {
    let d = alg.dim();
    let n = alg.arity() - 1;
    let space = TensorPowerSpace::new(d, n);
    let total = space.total_dim();
    let twist_cols: Option<Vec<SparseVec>> =
        spectator_twist.map(|m| (0..d).map(|b| m.mul_sparse(&sparse_unit(b))).collect());
    let mut bracket = BracketTensor::new(total, 2);
    for a_tuple in space.basis_tuples() {
        for b_tuple in space.basis_tuples() {
            let key = [space.index_of(&a_tuple), space.index_of(&b_tuple)];
            for i in 0..n {
                let mut inner_args = Vec::with_capacity(n + 1);
                inner_args.push(a_tuple[i]);
                inner_args.extend_from_slice(&b_tuple);
                let inner = alg.bracket().constant(&inner_args);
                if inner.is_empty() {
                    continue;
                }
                let mut factors: Vec<SparseVec> = Vec::with_capacity(n);
                for (t, &a) in a_tuple.iter().enumerate() {
                    if t == i {
                        factors.push(inner.clone());
                    } else {
                        factors.push(match &twist_cols {
                            Some(cols) => cols[a].clone(),
                            None => sparse_unit(a),
                        });
                    }
                }
                for (index, value) in expand_tensor(&factors, d) {
                    bracket.add_constant(&key, index, value);
                }
            }
        }
    }
    Ok(bracket)
}

/// `(n+1)`-ary bracket on `g^{⊗k}` from a `(kn+1)`-ary multiplicative
/// algebra: summand `j` feeds factor `j` of the first tensor argument,
/// followed by every factor of the remaining tensor arguments in order,
/// into the big bracket, and twists the other `k-1` factors by α. The
/// trailing factors enter in lexicographic order `x_{11},…,x_{1k},…,
/// x_{n1},…,x_{nk}`, matching the first displayed summand.
pub fn tensor_power_nary(
    alg: &HomNambuAlgebra,
    k: usize,
    n: usize,
) -> Result<HomNambuAlgebra, Error> {
    if k == 0 || n == 0 || alg.arity() != k * n + 1 {
        return Err(Error::ArityMismatch {
            expected: k * n + 1,
            got: alg.arity(),
        });
    }
    if !alg.is_multiplicative() {
        return Err(Error::NotMultiplicative);
    }
    let d = alg.dim();
    let space = TensorPowerSpace::new(d, k);
    let total = space.total_dim();
    let alpha = alg.common_twist();
    let alpha_cols: Vec<SparseVec> = (0..d).map(|b| alpha.mul_sparse(&sparse_unit(b))).collect();
    let mut bracket = BracketTensor::new(total, n + 1);
    for combined in uniform_tuples(total, n + 1) {
        let factor_tuples: Vec<Vec<usize>> =
            combined.iter().map(|&ix| space.factors_of(ix)).collect();
        for j in 0..k {
            let mut inner_args = Vec::with_capacity(k * n + 1);
            inner_args.push(factor_tuples[0][j]);
            for arg_tuple in &factor_tuples[1..] {
                inner_args.extend_from_slice(arg_tuple);
            }
            let inner = alg.bracket().constant(&inner_args);
            if inner.is_empty() {
                continue;
            }
            let mut factors: Vec<SparseVec> = Vec::with_capacity(k);
            for (t, &a) in factor_tuples[0].iter().enumerate() {
                if t == j {
                    factors.push(inner.clone());
                } else {
                    factors.push(alpha_cols[a].clone());
                }
            }
            for (index, value) in expand_tensor(&factors, d) {
                bracket.add_constant(&combined, index, value);
            }
        }
    }
    let twists = TwistFamily::new(vec![alpha.kron_pow(k); n]);
    HomNambuAlgebra::new(bracket, twists)
}
