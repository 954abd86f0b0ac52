//! Basis indexing for tensor powers and mixed products.
//!
//! Tensor bases are ordered row-major with the first factor most
//! significant: `e_{i1} ⊗ … ⊗ e_{in}` sits at position
//! `Σ i_t · d^(n-1-t)`. The same convention, generalized to mixed
//! radices, keys every sparse multilinear map in the crate.

/// A tuple of basis indices into a fixed power of a `dim`-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiIndex {
    dim: usize,
    digits: Vec<usize>,
}

impl MultiIndex {
    pub fn new(dim: usize, digits: Vec<usize>) -> Self {
        assert!(digits.iter().all(|&d| d < dim), "digit out of range");
        MultiIndex { dim, digits }
    }

    pub fn arity(&self) -> usize {
        self.digits.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn digits(&self) -> &[usize] {
        &self.digits
    }

    pub fn linearize(&self) -> usize {
        linearize_uniform(&self.digits, self.dim)
    }

    pub fn delinearize(dim: usize, arity: usize, mut value: usize) -> Self {
        let mut digits = vec![0usize; arity];
        for slot in (0..arity).rev() {
            digits[slot] = value % dim;
            value /= dim;
        }
        assert_eq!(value, 0, "value out of range for this tensor power");
        MultiIndex { dim, digits }
    }
}

pub fn linearize_uniform(digits: &[usize], dim: usize) -> usize {
    let mut acc = 0usize;
    for &d in digits {
        debug_assert!(d < dim);
        acc = acc * dim + d;
    }
    acc
}

/// Mixed-radix linearization; `dims[t]` is the radix of slot `t`.
pub fn linearize_mixed(digits: &[usize], dims: &[usize]) -> usize {
    assert_eq!(digits.len(), dims.len());
    let mut acc = 0usize;
    for (&d, &radix) in digits.iter().zip(dims) {
        debug_assert!(d < radix);
        acc = acc * radix + d;
    }
    acc
}

pub fn delinearize_mixed(mut value: usize, dims: &[usize]) -> Vec<usize> {
    let mut digits = vec![0usize; dims.len()];
    for slot in (0..dims.len()).rev() {
        digits[slot] = value % dims[slot];
        value /= dims[slot];
    }
    debug_assert_eq!(value, 0);
    digits
}

/// Iterates all digit tuples for the given radices in ascending
/// linearized order. An empty radix list yields the single empty tuple.
pub fn tuples(dims: &[usize]) -> TupleIter {
    TupleIter {
        dims: dims.to_vec(),
        next: Some(vec![0; dims.len()]),
        started: false,
    }
}

/// All `arity`-tuples over `0..dim`, ascending.
pub fn uniform_tuples(dim: usize, arity: usize) -> TupleIter {
    tuples(&vec![dim; arity])
}

pub struct TupleIter {
    dims: Vec<usize>,
    next: Option<Vec<usize>>,
    started: bool,
}

impl Iterator for TupleIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if !self.started {
            self.started = true;
            if self.dims.contains(&0) {
                self.next = None;
            }
            return self.next.clone();
        }
        let current = self.next.as_mut()?;
        for slot in (0..self.dims.len()).rev() {
            current[slot] += 1;
            if current[slot] < self.dims[slot] {
                return self.next.clone();
            }
            current[slot] = 0;
        }
        self.next = None;
        None
    }
}

/// The tensor power `V^{⊗ power}` of a `base_dim`-dimensional space,
/// with its basis codec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPowerSpace {
    base_dim: usize,
    power: usize,
}

impl TensorPowerSpace {
    pub fn new(base_dim: usize, power: usize) -> Self {
        TensorPowerSpace { base_dim, power }
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn power(&self) -> usize {
        self.power
    }

    pub fn total_dim(&self) -> usize {
        self.base_dim.pow(self.power as u32)
    }

    pub fn index_of(&self, factors: &[usize]) -> usize {
        assert_eq!(factors.len(), self.power);
        linearize_uniform(factors, self.base_dim)
    }

    pub fn factors_of(&self, index: usize) -> Vec<usize> {
        MultiIndex::delinearize(self.base_dim, self.power, index)
            .digits()
            .to_vec()
    }

    pub fn basis_tuples(&self) -> TupleIter {
        uniform_tuples(self.base_dim, self.power)
    }
}
