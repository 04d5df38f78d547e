use std::fmt;
use std::ops::{BitAnd, BitOr, Not};

use super::MatroidError;

/// Largest supported ground set.
pub const MAX_GROUND_SET: usize = 24;

/// A subset of the ground set `{1..n}`. Element `e` lives in bit `e - 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask(u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub const fn from_bits(bits: u32) -> Self {
        SubsetMask(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The whole ground set `{1..n}`.
    pub const fn full(n: usize) -> Self {
        if n == 0 {
            SubsetMask(0)
        } else {
            SubsetMask(u32::MAX >> (32 - n))
        }
    }

    pub fn singleton(e: usize) -> Self {
        debug_assert!((1..=32).contains(&e));
        SubsetMask(1 << (e - 1))
    }

    /// Builds a mask from 1-based elements, rejecting anything outside `1..=n`.
    pub fn from_elements<I>(elements: I, n: usize) -> Result<Self, MatroidError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut bits = 0u32;
        for e in elements {
            if e == 0 || e > n {
                return Err(MatroidError::ElementOutOfRange { element: e, n });
            }
            bits |= 1 << (e - 1);
        }
        Ok(SubsetMask(bits))
    }

    /// Ascending 1-based elements.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.elements().collect()
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=32).contains(&e) && self.0 & (1 << (e - 1)) != 0
    }

    pub fn insert(self, e: usize) -> Self {
        SubsetMask(self.0 | (1 << (e - 1)))
    }

    pub fn remove(self, e: usize) -> Self {
        SubsetMask(self.0 & !(1 << (e - 1)))
    }

    pub const fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn difference(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    /// True when no bit at or above `n` is set.
    pub const fn fits(self, n: usize) -> bool {
        n >= 32 || self.0 >> n == 0
    }

    pub(crate) fn check_fits(self, n: usize) -> Result<(), MatroidError> {
        if self.fits(n) {
            Ok(())
        } else {
            let e = 32 - self.0.leading_zeros() as usize;
            Err(MatroidError::ElementOutOfRange { element: e, n })
        }
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    fn bitand(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & rhs.0)
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    fn bitor(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | rhs.0)
    }
}

impl Not for SubsetMask {
    type Output = SubsetMask;
    fn not(self) -> SubsetMask {
        SubsetMask(!self.0)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// A bijection on `{1..n}`; `images[i]` is the image of element `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, MatroidError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(MatroidError::InvalidPermutation(images));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of a single 1-based element.
    pub fn image(&self, e: usize) -> usize {
        self.images[e - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// `φ(A)`.
    pub fn apply(&self, set: SubsetMask) -> SubsetMask {
        let mut bits = 0u32;
        for e in set.elements() {
            bits |= 1 << (self.images[e - 1] - 1);
        }
        SubsetMask(bits)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}
