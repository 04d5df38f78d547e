//! Matroids on small ground sets, described by their rank oracle.
//!
//! Every matroid lives on `E = {1..n}` with `n <= 24`, so subsets fit a single
//! machine word ([`SubsetMask`]). Values are immutable once built and the rank
//! oracle is a pure function, so a `Matroid` can be shared across threads.

mod axioms;
mod construct;
mod iso;
mod json;
mod rank_table;
mod subset;
mod vector;

use std::sync::Arc;

use thiserror::Error;

pub use axioms::{
    check_independence_axioms, check_rank_axioms, downward_closure, AxiomReport, RankAxiomViolation,
};
pub use construct::{
    construct_q, construct_r, construct_s, construct_s_prime, y1_triples, y2_triples,
};
pub use iso::{are_isomorphic_bruteforce, IsoOutcome, MAX_ISO_GROUND_SET};
pub use json::MatroidSpec;
pub use rank_table::RankTable;
pub use subset::{Permutation, SubsetMask, MAX_GROUND_SET};
pub use vector::GfMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("element {element} is outside the ground set 1..{n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("ground set of {n} elements exceeds the limit of {limit}")]
    Capacity { n: usize, limit: usize },
    #[error("rank {r} exceeds ground-set size {n}")]
    RankExceedsGroundSet { r: usize, n: usize },
    #[error("basis family is empty")]
    EmptyBasisFamily,
    #[error("bases {first} and {other} have different cardinalities")]
    UnequalBasisSizes {
        first: SubsetMask,
        other: SubsetMask,
    },
    #[error(
        "basis exchange fails: removing {removed} from {first} admits no element of {second} \
         that restores a basis"
    )]
    ExchangeViolation {
        first: SubsetMask,
        second: SubsetMask,
        removed: usize,
    },
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("permutation acts on {perm} elements but the matroid has {n}")]
    PermutationSize { perm: usize, n: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("matrix entry {value} at row {row}, column {col} is not in 0..{p}")]
    MatrixEntry {
        row: usize,
        col: usize,
        value: u64,
        p: u64,
    },
    #[error("matrix rows must be non-empty and of equal length")]
    MalformedMatrix,
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error("malformed matroid description: {0}")]
    Parse(String),
    #[error("ground-set sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorOp {
    Delete,
    Contract,
}

#[derive(Debug, Clone)]
pub enum MatroidKind {
    Uniform {
        rank: usize,
    },
    /// Sorted, validated basis list.
    Bases(Vec<SubsetMask>),
    Vector(GfMatrix),
    Relabeled {
        base: Arc<Matroid>,
        perm: Permutation,
        inverse: Permutation,
    },
    /// `base \ element` or `base / element`, relabeled onto `{1..n-1}` in order.
    Minor {
        base: Arc<Matroid>,
        element: usize,
        op: MinorOp,
    },
}

#[derive(Debug, Clone)]
pub struct Matroid {
    n: usize,
    kind: MatroidKind,
}

fn check_capacity(n: usize) -> Result<(), MatroidError> {
    if n > MAX_GROUND_SET {
        Err(MatroidError::Capacity {
            n,
            limit: MAX_GROUND_SET,
        })
    } else {
        Ok(())
    }
}

/// Re-inserts a zero bit at position `e - 1`, mapping a subset of `{1..n-1}`
/// back onto the ground set it came from.
fn expand_around(set: SubsetMask, e: usize) -> SubsetMask {
    let bits = set.bits();
    let low_mask = (1u32 << (e - 1)) - 1;
    SubsetMask::from_bits((bits & low_mask) | ((bits & !low_mask) << 1))
}

impl Matroid {
    /// `U_{r,n}`: every `r`-subset is a basis.
    pub fn uniform(r: usize, n: usize) -> Result<Self, MatroidError> {
        check_capacity(n)?;
        if r > n {
            return Err(MatroidError::RankExceedsGroundSet { r, n });
        }
        Ok(Matroid {
            n,
            kind: MatroidKind::Uniform { rank: r },
        })
    }

    /// Builds a matroid from its bases, checking equal cardinality and basis
    /// exchange. Duplicate bases are collapsed.
    pub fn from_bases(n: usize, bases: &[SubsetMask]) -> Result<Self, MatroidError> {
        check_capacity(n)?;
        let first = *bases.first().ok_or(MatroidError::EmptyBasisFamily)?;
        for b in bases {
            b.check_fits(n)?;
            if b.len() != first.len() {
                return Err(MatroidError::UnequalBasisSizes { first, other: *b });
            }
        }
        let mut sorted = bases.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        axioms::check_basis_exchange(&sorted)?;
        Ok(Matroid {
            n,
            kind: MatroidKind::Bases(sorted),
        })
    }

    /// Column matroid of a matrix over GF(p).
    pub fn vector(matrix: GfMatrix) -> Result<Self, MatroidError> {
        check_capacity(matrix.cols())?;
        Ok(Matroid {
            n: matrix.cols(),
            kind: MatroidKind::Vector(matrix),
        })
    }

    pub fn ground_set_size(&self) -> usize {
        self.n
    }

    pub fn ground_set(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    pub fn kind(&self) -> &MatroidKind {
        &self.kind
    }

    /// `ρ(A)`, evaluated directly from the representation.
    pub fn rank(&self, set: SubsetMask) -> Result<usize, MatroidError> {
        set.check_fits(self.n)?;
        Ok(self.rank_unchecked(set))
    }

    pub(crate) fn rank_unchecked(&self, set: SubsetMask) -> usize {
        match &self.kind {
            MatroidKind::Uniform { rank } => set.len().min(*rank),
            MatroidKind::Bases(bases) => bases.iter().map(|&b| (b & set).len()).max().unwrap_or(0),
            MatroidKind::Vector(m) => m.column_rank(set),
            MatroidKind::Relabeled { base, inverse, .. } => base.rank_unchecked(inverse.apply(set)),
            MatroidKind::Minor { base, element, op } => {
                let lifted = expand_around(set, *element);
                match op {
                    MinorOp::Delete => base.rank_unchecked(lifted),
                    MinorOp::Contract => {
                        let e = SubsetMask::singleton(*element);
                        base.rank_unchecked(lifted | e) - base.rank_unchecked(e)
                    }
                }
            }
        }
    }

    /// `ρ(E)`.
    pub fn full_rank(&self) -> usize {
        self.rank_unchecked(self.ground_set())
    }

    pub fn rank_table(&self) -> Result<RankTable, MatroidError> {
        RankTable::build(self)
    }

    /// All bases in ascending mask order.
    pub fn bases(&self) -> Vec<SubsetMask> {
        match &self.kind {
            MatroidKind::Bases(bases) => bases.clone(),
            _ => {
                let table = RankTable::build(self).expect("ground set within capacity");
                table.bases()
            }
        }
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.rank_unchecked(SubsetMask::singleton(e)) == 0
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.rank_unchecked(self.ground_set().remove(e)) + 1 == self.full_rank()
    }

    pub fn delete(self: &Arc<Self>, e: usize) -> Result<Matroid, MatroidError> {
        self.minor(e, MinorOp::Delete)
    }

    pub fn contract(self: &Arc<Self>, e: usize) -> Result<Matroid, MatroidError> {
        self.minor(e, MinorOp::Contract)
    }

    fn minor(self: &Arc<Self>, e: usize, op: MinorOp) -> Result<Matroid, MatroidError> {
        if e == 0 || e > self.n {
            return Err(MatroidError::ElementOutOfRange {
                element: e,
                n: self.n,
            });
        }
        Ok(Matroid {
            n: self.n - 1,
            kind: MatroidKind::Minor {
                base: Arc::clone(self),
                element: e,
                op,
            },
        })
    }

    /// The image of this matroid under `φ`: `ρ'(A) = ρ(φ⁻¹(A))`.
    pub fn relabel(self: &Arc<Self>, perm: &Permutation) -> Result<Matroid, MatroidError> {
        if perm.len() != self.n {
            return Err(MatroidError::PermutationSize {
                perm: perm.len(),
                n: self.n,
            });
        }
        Ok(Matroid {
            n: self.n,
            kind: MatroidKind::Relabeled {
                base: Arc::clone(self),
                perm: perm.clone(),
                inverse: perm.inverse(),
            },
        })
    }
}
