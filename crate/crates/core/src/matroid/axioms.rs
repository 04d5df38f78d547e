use std::fmt;

use super::{MatroidError, RankTable, SubsetMask};

/// Outcome of checking a set family against the independence axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomReport {
    Pass,
    /// The family has no members.
    Empty,
    /// `independent` is in the family but its subset `missing` is not.
    NotHereditary {
        independent: SubsetMask,
        missing: SubsetMask,
    },
    /// No element of `larger \ smaller` extends `smaller` inside the family.
    NoAugmentation {
        smaller: SubsetMask,
        larger: SubsetMask,
    },
    /// A member uses an element outside `1..n`.
    OutOfRange(SubsetMask),
}

impl AxiomReport {
    pub fn is_pass(&self) -> bool {
        matches!(self, AxiomReport::Pass)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomReport::Pass => write!(f, "PASS"),
            AxiomReport::Empty => write!(f, "FAIL: the family of independent sets is empty"),
            AxiomReport::NotHereditary {
                independent,
                missing,
            } => write!(
                f,
                "FAIL axiom (i): I={independent} is independent but its subset J={missing} is not"
            ),
            AxiomReport::NoAugmentation { smaller, larger } => write!(
                f,
                "FAIL axiom (ii): I1={smaller}, I2={larger}: no e in I2\\I1 makes I1+e independent"
            ),
            AxiomReport::OutOfRange(set) => write!(f, "FAIL: {set} leaves the ground set"),
        }
    }
}

/// Exhaustive check of the hereditary and augmentation axioms. Members are
/// scanned in ascending mask order and the first failure is reported.
pub fn check_independence_axioms(
    family: &[SubsetMask],
    n: usize,
) -> Result<AxiomReport, MatroidError> {
    if n > 16 {
        return Err(MatroidError::Capacity { n, limit: 16 });
    }
    if family.is_empty() {
        return Ok(AxiomReport::Empty);
    }
    let mut members = family.to_vec();
    members.sort_unstable();
    members.dedup();
    let mut present = vec![false; 1 << n];
    for &m in &members {
        if !m.fits(n) {
            return Ok(AxiomReport::OutOfRange(m));
        }
        present[m.bits() as usize] = true;
    }

    for &set in &members {
        // Proper subsets in ascending mask order.
        let bits = set.bits();
        let mut sub = 0u32;
        loop {
            if sub != bits && !present[sub as usize] {
                return Ok(AxiomReport::NotHereditary {
                    independent: set,
                    missing: SubsetMask::from_bits(sub),
                });
            }
            if sub == bits {
                break;
            }
            sub = sub.wrapping_sub(bits) & bits;
        }
    }

    for &smaller in &members {
        for &larger in &members {
            if smaller.len() >= larger.len() {
                continue;
            }
            let augmentable = larger
                .difference(smaller)
                .elements()
                .any(|e| present[smaller.insert(e).bits() as usize]);
            if !augmentable {
                return Ok(AxiomReport::NoAugmentation { smaller, larger });
            }
        }
    }
    Ok(AxiomReport::Pass)
}

/// The family of all subsets of the given bases.
pub fn downward_closure(n: usize, bases: &[SubsetMask]) -> Vec<SubsetMask> {
    let mut present = vec![false; 1 << n];
    for b in bases {
        let bits = b.bits();
        let mut sub = bits;
        loop {
            present[sub as usize] = true;
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & bits;
        }
    }
    present
        .iter()
        .enumerate()
        .filter(|(_, &p)| p)
        .map(|(m, _)| SubsetMask::from_bits(m as u32))
        .collect()
}

/// For all bases `B1, B2` and `e ∈ B1 \ B2` there must be `f ∈ B2 \ B1`
/// with `B1 - e + f` a basis. `bases` must be sorted and deduplicated.
pub(crate) fn check_basis_exchange(bases: &[SubsetMask]) -> Result<(), MatroidError> {
    let is_basis = |m: SubsetMask| bases.binary_search(&m).is_ok();
    for &first in bases {
        for &second in bases {
            if first == second {
                continue;
            }
            let only_second = second.difference(first);
            for e in first.difference(second).elements() {
                let dropped = first.remove(e);
                if !only_second.elements().any(|f| is_basis(dropped.insert(f))) {
                    return Err(MatroidError::ExchangeViolation {
                        first,
                        second,
                        removed: e,
                    });
                }
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankAxiomViolation {
    NonZeroEmpty(u8),
    /// `ρ(A + e)` is not within `ρ(A) ..= ρ(A) + 1`.
    UnitIncrease {
        set: SubsetMask,
        element: usize,
    },
    /// `ρ(A+e) + ρ(A+f) < ρ(A+e+f) + ρ(A)`.
    Submodularity {
        set: SubsetMask,
        first: usize,
        second: usize,
    },
}

/// Checks `ρ(∅) = 0`, monotonicity with unit increments, and submodularity
/// over every subset. The local forms checked here imply the global ones.
pub fn check_rank_axioms(table: &RankTable) -> Result<(), RankAxiomViolation> {
    let n = table.ground_set_size();
    let ranks = table.as_slice();
    if ranks[0] != 0 {
        return Err(RankAxiomViolation::NonZeroEmpty(ranks[0]));
    }
    for m in 0..ranks.len() {
        let r = ranks[m];
        for e in 0..n {
            let bit = 1 << e;
            if m & bit != 0 {
                continue;
            }
            let re = ranks[m | bit];
            if re < r || re > r + 1 {
                return Err(RankAxiomViolation::UnitIncrease {
                    set: SubsetMask::from_bits(m as u32),
                    element: e + 1,
                });
            }
            for f in e + 1..n {
                let fbit = 1 << f;
                if m & fbit != 0 {
                    continue;
                }
                let lhs = re as u32 + ranks[m | fbit] as u32;
                if lhs < ranks[m | bit | fbit] as u32 + r as u32 {
                    return Err(RankAxiomViolation::Submodularity {
                        set: SubsetMask::from_bits(m as u32),
                        first: e + 1,
                        second: f + 1,
                    });
                }
            }
        }
    }
    Ok(())
}
