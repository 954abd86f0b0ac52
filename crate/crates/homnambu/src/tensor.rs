//! Sparse multilinear maps between coordinate spaces.
//!
//! A [`MultiLinearMap`] stores the coordinates of the images of basis
//! tuples: the entry `(i1,…,ik) -> (j, c)` says the basis tuple
//! `(e_{i1},…,e_{ik})` maps to `c · e_j` plus whatever other entries
//! share the tuple. Absent tuples map to zero. Source slots may have
//! different dimensions, which is how module actions mix algebra and
//! module arguments.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::index::{delinearize_mixed, linearize_mixed, tuples};
use crate::linalg::{sparse_add_scaled, sparse_from_dense, sparse_to_dense, SparseVec};
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiLinearMap {
    source_dims: Vec<usize>,
    target_dim: usize,
    constants: BTreeMap<usize, SparseVec>,
}

impl MultiLinearMap {
    pub fn new(source_dims: Vec<usize>, target_dim: usize) -> Self {
        MultiLinearMap {
            source_dims,
            target_dim,
            constants: BTreeMap::new(),
        }
    }

    /// Map with `arity` source slots of the same dimension.
    pub fn uniform(dim: usize, arity: usize, target_dim: usize) -> Self {
        MultiLinearMap::new(vec![dim; arity], target_dim)
    }

    pub fn arity(&self) -> usize {
        self.source_dims.len()
    }

    pub fn source_dims(&self) -> &[usize] {
        &self.source_dims
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn is_zero(&self) -> bool {
        self.constants.is_empty()
    }

    fn key_of(&self, tuple: &[usize]) -> usize {
        assert_eq!(tuple.len(), self.source_dims.len(), "tuple arity mismatch");
        linearize_mixed(tuple, &self.source_dims)
    }

    /// Accumulates `value` onto the `(tuple, target)` coordinate,
    /// dropping entries that cancel to zero.
    pub fn add_constant(&mut self, tuple: &[usize], target: usize, value: Rat) {
        if value.is_zero() {
            return;
        }
        assert!(target < self.target_dim, "target index out of range");
        let key = self.key_of(tuple);
        let entry = self.constants.entry(key).or_default();
        sparse_add_scaled(entry, &value, &vec![(target, Rat::from_integer(1.into()))]);
        if entry.is_empty() {
            self.constants.remove(&key);
        }
    }

    /// Image of a basis tuple, as a sparse target vector.
    pub fn constant(&self, tuple: &[usize]) -> SparseVec {
        self.constants
            .get(&self.key_of(tuple))
            .cloned()
            .unwrap_or_default()
    }

    /// All stored entries as `(tuple, target, value)`, ascending by
    /// (linearized tuple, target).
    pub fn entries(&self) -> Vec<(Vec<usize>, usize, Rat)> {
        let mut out = Vec::new();
        for (key, vec) in &self.constants {
            let tuple = delinearize_mixed(*key, &self.source_dims);
            for (target, value) in vec {
                out.push((tuple.clone(), *target, value.clone()));
            }
        }
        out
    }

    pub fn constants_len(&self) -> usize {
        self.constants.len()
    }

    /// Evaluates the map on sparse arguments. Chooses between walking
    /// the product of argument supports and walking the stored
    /// constants, whichever is smaller.
    pub fn apply(&self, args: &[SparseVec]) -> SparseVec {
        assert_eq!(args.len(), self.arity(), "argument count mismatch");
        if self.constants.is_empty() {
            return SparseVec::new();
        }
        let mut product = 1usize;
        for arg in args {
            product = product.saturating_mul(arg.len());
            if product == 0 {
                return SparseVec::new();
            }
        }
        let mut acc = vec![Rat::zero(); self.target_dim];
        if product <= self.constants.len() {
            self.apply_by_support(args, &mut acc);
        } else {
            self.apply_by_constants(args, &mut acc);
        }
        sparse_from_dense(&acc)
    }

    fn apply_by_support(&self, args: &[SparseVec], acc: &mut [Rat]) {
        let positions: Vec<usize> = args.iter().map(|a| a.len()).collect();
        for combo in tuples(&positions) {
            let mut coeff = Rat::from_integer(1.into());
            let mut tuple = Vec::with_capacity(args.len());
            for (slot, &pick) in combo.iter().enumerate() {
                let (index, value) = &args[slot][pick];
                tuple.push(*index);
                coeff *= value;
            }
            if let Some(image) = self.constants.get(&self.key_of(&tuple)) {
                for (target, value) in image {
                    acc[*target] += &coeff * value;
                }
            }
        }
    }

    fn apply_by_constants(&self, args: &[SparseVec], acc: &mut [Rat]) {
        'entry: for (key, image) in &self.constants {
            let tuple = delinearize_mixed(*key, &self.source_dims);
            let mut coeff = Rat::from_integer(1.into());
            for (slot, &digit) in tuple.iter().enumerate() {
                match args[slot].binary_search_by_key(&digit, |(i, _)| *i) {
                    Ok(pos) => coeff *= &args[slot][pos].1,
                    Err(_) => continue 'entry,
                }
            }
            for (target, value) in image {
                acc[*target] += &coeff * value;
            }
        }
    }

    pub fn apply_dense(&self, args: &[Vec<Rat>]) -> Vec<Rat> {
        let sparse: Vec<SparseVec> = args.iter().map(|a| sparse_from_dense(a)).collect();
        sparse_to_dense(&self.apply(&sparse), self.target_dim)
    }

    /// Pointwise sum; shapes must agree.
    pub fn add(&self, other: &MultiLinearMap) -> MultiLinearMap {
        assert_eq!(self.source_dims, other.source_dims);
        assert_eq!(self.target_dim, other.target_dim);
        let mut out = self.clone();
        for (tuple, target, value) in other.entries() {
            out.add_constant(&tuple, target, value);
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> MultiLinearMap {
        let mut out = MultiLinearMap::new(self.source_dims.clone(), self.target_dim);
        for (tuple, target, value) in self.entries() {
            out.add_constant(&tuple, target, &value * s);
        }
        out
    }
}
