//! The T-equivalent pairs `R_{r,n}` / `Q_{r,n}` and `S_{4n}` / `S'_{4n}`.
//!
//! Each is a uniform matroid with a few `r`-subsets removed from its basis
//! list. The result is always passed through basis-exchange validation.

use super::{Matroid, MatroidError, SubsetMask, MAX_GROUND_SET};

fn range_mask(lo: usize, hi: usize) -> SubsetMask {
    SubsetMask::from_bits((lo..=hi).fold(0u32, |acc, e| acc | 1 << (e - 1)))
}

fn uniform_minus(r: usize, n: usize, removed: &[SubsetMask]) -> Result<Matroid, MatroidError> {
    let bases: Vec<SubsetMask> = (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == r)
        .map(SubsetMask::from_bits)
        .filter(|b| !removed.contains(b))
        .collect();
    Matroid::from_bases(n, &bases)
}

fn check_rq_params(r: usize, n: usize) -> Result<(), MatroidError> {
    if r < 3 || 2 * r > n {
        return Err(MatroidError::Parameters(format!(
            "R/Q need r >= 3 and 2r <= n, got r={r}, n={n}"
        )));
    }
    if n > MAX_GROUND_SET {
        return Err(MatroidError::Capacity {
            n,
            limit: MAX_GROUND_SET,
        });
    }
    Ok(())
}

/// `U_{r,n}` without the bases `{1..r}` and `{r+1..2r}`.
pub fn construct_r(r: usize, n: usize) -> Result<Matroid, MatroidError> {
    check_rq_params(r, n)?;
    uniform_minus(r, n, &[range_mask(1, r), range_mask(r + 1, 2 * r)])
}

/// `U_{r,n}` without the bases `{1..r}` and `{r..2r-1}`.
pub fn construct_q(r: usize, n: usize) -> Result<Matroid, MatroidError> {
    check_rq_params(r, n)?;
    uniform_minus(r, n, &[range_mask(1, r), range_mask(r, 2 * r - 1)])
}

fn check_s_params(n: usize) -> Result<(), MatroidError> {
    if n < 3 {
        return Err(MatroidError::Parameters(format!(
            "S needs n >= 3, got n={n}"
        )));
    }
    if 4 * n > MAX_GROUND_SET {
        return Err(MatroidError::Capacity {
            n: 4 * n,
            limit: MAX_GROUND_SET,
        });
    }
    Ok(())
}

fn triple(a: usize, b: usize, c: usize) -> SubsetMask {
    SubsetMask::from_bits(1 << (a - 1) | 1 << (b - 1) | 1 << (c - 1))
}

/// A cycle of triples `{s, s+1, s+2}, {s+2, s+3, s+4}, ...` over `len`
/// consecutive elements starting at `start`, closing back onto `start`.
fn triple_cycle(start: usize, len: usize) -> Vec<SubsetMask> {
    let last = start + len - 1;
    let mut out: Vec<SubsetMask> = (0..len / 2 - 1)
        .map(|i| {
            let a = start + 2 * i;
            triple(a, a + 1, a + 2)
        })
        .collect();
    out.push(triple(last - 1, last, start));
    out
}

/// The removed triples of `S_{4n}`: two cycles over `{1..2n}` and `{2n+1..4n}`.
pub fn y1_triples(n: usize) -> Vec<SubsetMask> {
    let mut out = triple_cycle(1, 2 * n);
    out.extend(triple_cycle(2 * n + 1, 2 * n));
    out
}

/// The removed triples of `S'_{4n}`: one cycle over `{1..4n}`.
pub fn y2_triples(n: usize) -> Vec<SubsetMask> {
    triple_cycle(1, 4 * n)
}

/// `U_{3,4n}` minus the triples of [`y1_triples`].
pub fn construct_s(n: usize) -> Result<Matroid, MatroidError> {
    check_s_params(n)?;
    uniform_minus(3, 4 * n, &y1_triples(n))
}

/// `U_{3,4n}` minus the triples of [`y2_triples`].
pub fn construct_s_prime(n: usize) -> Result<Matroid, MatroidError> {
    check_s_params(n)?;
    uniform_minus(3, 4 * n, &y2_triples(n))
}
