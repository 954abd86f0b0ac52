//! The fixture catalog used throughout the test and acceptance suites.
//!
//! - `abelian(d, n)`: zero bracket, identity twists.
//! - `leib2`: two-dimensional Leibniz algebra with `[e2,e2] = e1`.
//! - `nambu4`: four-dimensional ternary algebra with the totally
//!   antisymmetric bracket `[e_i,e_j,e_k] = ±e_l`, signed by the parity
//!   of the permutation `(i,j,k,l)` of `(1,2,3,4)`.
//! - `leib2_twist`: `leib2` composed with the endomorphism
//!   `ρ = diag(4,2)`: bracket `[e2,e2] = 4·e1`, twist `ρ`.
//!
//! Each fixture's validity is asserted by the acceptance suite rather
//! than assumed.

use crate::algebra::{BracketTensor, HomNambuAlgebra, TwistFamily};
use crate::linalg::Matrix;
use crate::rat::rat_int;
use crate::rep::Representation;
use crate::tensor::MultiLinearMap;

pub fn abelian(dim: usize, arity: usize) -> HomNambuAlgebra {
    HomNambuAlgebra::untwisted(BracketTensor::new(dim, arity))
}

pub fn leib2() -> HomNambuAlgebra {
    let mut bracket = BracketTensor::new(2, 2);
    bracket.add_constant(&[1, 1], 0, rat_int(1));
    HomNambuAlgebra::untwisted(bracket)
}

/// `leib2` with the bracket replaced by `[e1,e1]=e2, [e2,e2]=e1`, which
/// violates the Leibniz identity; used to exercise failure witnesses.
pub fn leib2_corrupt() -> HomNambuAlgebra {
    let mut bracket = BracketTensor::new(2, 2);
    bracket.add_constant(&[0, 0], 1, rat_int(1));
    bracket.add_constant(&[1, 1], 0, rat_int(1));
    HomNambuAlgebra::untwisted(bracket)
}

pub fn nambu4() -> HomNambuAlgebra {
    let mut bracket = BracketTensor::new(4, 3);
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                if i == j || j == k || i == k {
                    continue;
                }
                let l = 6 - i - j - k;
                let sign = permutation_sign(&[i, j, k, l]);
                bracket.add_constant(&[i, j, k], l, rat_int(sign));
            }
        }
    }
    HomNambuAlgebra::untwisted(bracket)
}

pub fn leib2_twist() -> HomNambuAlgebra {
    let mut bracket = BracketTensor::new(2, 2);
    bracket.add_constant(&[1, 1], 0, rat_int(4));
    HomNambuAlgebra::new(bracket, TwistFamily::new(vec![rho42()])).expect("shapes fit")
}

/// The `leib2` endomorphism `diag(4, 2)`; a bracket homomorphism since
/// `ρ[e2,e2] = 4·e1 = [2·e2, 2·e2]`.
pub fn rho42() -> Matrix {
    Matrix::diag(&[4, 2])
}

/// The `leib2` derivation sending `e2` to `e1` and `e1` to zero.
pub fn leib2_derivation_e12() -> Matrix {
    let mut m = Matrix::zeros(2, 2);
    m.set(0, 1, rat_int(1));
    m
}

/// One-dimensional `leib2` module built from the functional with
/// `λ(e1) = 0, λ(e2) = 1`: the last slot acts by `[x, μ] = λ(x)·μ` and
/// the first by `[μ, y] = -λ(y)·μ`. The sign pairing is what makes the
/// representation identity collapse to `λ([x,y]) = 0` terms; a one-sided
/// action leaves an unbalanced `λ(x)λ(y)` product.
pub fn leib2_functional_rep() -> Representation {
    let mut first = MultiLinearMap::new(vec![1, 2], 1);
    first.add_constant(&[0, 1], 0, rat_int(-1));
    let mut last = MultiLinearMap::new(vec![2, 1], 1);
    last.add_constant(&[1, 0], 0, rat_int(1));
    Representation::new(1, 2, 2, vec![first, last]).expect("shapes fit")
}

/// Parity of a permutation of `0..len`, as `+1` or `-1`.
pub fn permutation_sign(perm: &[usize]) -> i64 {
    let mut sign = 1i64;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                sign = -sign;
            }
        }
    }
    sign
}
