use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::matroid::{RankTable, SubsetMask};
use crate::poly::{Exponents, Polynomial};

/// Exponent vector of one summand of the genus-`g` sum, in canonical variable
/// order: `(corank, nullity)` of each `A_i`, then for each pair `i < j` the
/// pairs for `A_i ∩ A_j` and `A_i ∪ A_j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Profile {
    genus: usize,
    exps: Vec<u8>,
}

/// Slot of the `xcap` variable for the 0-based pair `i < j`.
pub(crate) fn pair_slot(genus: usize, i: usize, j: usize) -> usize {
    let preceding = i * (2 * genus - i - 1) / 2 + (j - i - 1);
    2 * genus + 4 * preceding
}

impl Profile {
    pub fn from_exponents(genus: usize, exps: Vec<u8>) -> Self {
        debug_assert_eq!(exps.len(), 2 * genus * genus);
        Profile { genus, exps }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps
    }

    /// `(corank, nullity)` of `A_i`, 1-based `i`.
    pub fn single(&self, i: usize) -> (u8, u8) {
        (self.exps[2 * (i - 1)], self.exps[2 * (i - 1) + 1])
    }

    /// `(corank, nullity)` of `A_i ∩ A_j`, 1-based `i < j`.
    pub fn cap(&self, i: usize, j: usize) -> (u8, u8) {
        let s = pair_slot(self.genus, i - 1, j - 1);
        (self.exps[s], self.exps[s + 1])
    }

    /// `(corank, nullity)` of `A_i ∪ A_j`, 1-based `i < j`.
    pub fn cup(&self, i: usize, j: usize) -> (u8, u8) {
        let s = pair_slot(self.genus, i - 1, j - 1);
        (self.exps[s + 2], self.exps[s + 3])
    }
}

fn corank_nullity(table: &RankTable, set: SubsetMask) -> (u8, u8) {
    let r = table.rank(set);
    (table.full_rank() - r, set.len() as u8 - r)
}

/// The profile of the tuple `(A_1, ..., A_g)`, with `g = subsets.len()`.
pub fn tuple_profile(table: &RankTable, subsets: &[SubsetMask]) -> Profile {
    let g = subsets.len();
    let mut exps = vec![0u8; 2 * g * g];
    for (i, &a) in subsets.iter().enumerate() {
        let (c, v) = corank_nullity(table, a);
        exps[2 * i] = c;
        exps[2 * i + 1] = v;
    }
    for i in 0..g {
        for j in i + 1..g {
            let s = pair_slot(g, i, j);
            let (c, v) = corank_nullity(table, subsets[i] & subsets[j]);
            exps[s] = c;
            exps[s + 1] = v;
            let (c, v) = corank_nullity(table, subsets[i] | subsets[j]);
            exps[s + 2] = c;
            exps[s + 3] = v;
        }
    }
    Profile { genus: g, exps }
}

/// Number of tuples seen per profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileCounter {
    genus: usize,
    counts: BTreeMap<Vec<u8>, BigUint>,
}

impl ProfileCounter {
    pub fn new(genus: usize) -> Self {
        ProfileCounter {
            genus,
            counts: BTreeMap::new(),
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn add(&mut self, profile: &Profile, count: impl Into<BigUint>) {
        self.add_raw(profile.exps.clone(), count.into());
    }

    pub(crate) fn add_raw(&mut self, exps: Vec<u8>, count: BigUint) {
        *self.counts.entry(exps).or_default() += count;
    }

    pub fn merge(&mut self, other: ProfileCounter) {
        assert_eq!(
            self.genus, other.genus,
            "merging counters of different genus"
        );
        for (k, v) in other.counts {
            self.add_raw(k, v);
        }
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn count(&self, profile: &Profile) -> BigUint {
        self.counts.get(&profile.exps).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Profile, &BigUint)> {
        self.counts.iter().map(move |(k, v)| {
            (
                Profile {
                    genus: self.genus,
                    exps: k.clone(),
                },
                v,
            )
        })
    }

    /// Sum of all counts; `2^(g n)` after a complete enumeration.
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// `Σ count · Π_v (v - 1)^e_v`, expanded exactly.
    ///
    /// The counter is first read as a polynomial in the shifted variables
    /// `u_v = v - 1`; each slot is then rewritten with
    /// `u^e = Σ_k C(e,k) v^k (-1)^(e-k)` in turn, merging terms after every
    /// slot so the working set never exceeds the final support by much.
    pub fn expand(&self) -> Polynomial {
        let slots = 2 * self.genus * self.genus;
        let max_exp = self
            .counts
            .keys()
            .flat_map(|k| k.iter().copied())
            .max()
            .unwrap_or(0) as usize;
        let binomials = signed_binomial_rows(max_exp);

        let mut current: HashMap<Exponents, BigInt> = self
            .counts
            .iter()
            .map(|(k, v)| {
                (
                    k.iter().map(|&e| e as u32).collect(),
                    BigInt::from(v.clone()),
                )
            })
            .collect();
        for slot in 0..slots {
            let mut next: HashMap<Exponents, BigInt> = HashMap::with_capacity(current.len());
            for (exps, c) in current {
                let e = exps[slot] as usize;
                if e == 0 {
                    *next.entry(exps).or_default() += c;
                    continue;
                }
                for (k, b) in binomials[e].iter().enumerate() {
                    let mut shifted = exps.clone();
                    shifted[slot] = k as u32;
                    *next.entry(shifted).or_default() += &c * b;
                }
            }
            next.retain(|_, c| !c.is_zero());
            current = next;
        }
        Polynomial::from_terms(self.genus, current)
            .expect("profile length matches the canonical variable count")
    }
}

/// Row `e` holds `C(e,k) (-1)^(e-k)` for `k = 0..=e`: the coefficients of
/// `(v - 1)^e`.
fn signed_binomial_rows(max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for e in 1..=max {
        let prev = &rows[e - 1];
        let mut row = vec![BigInt::zero(); e + 1];
        for k in 0..=e {
            // (v-1)^e = v (v-1)^(e-1) - (v-1)^(e-1)
            if k >= 1 {
                row[k] += &prev[k - 1];
            }
            if k < e {
                row[k] -= &prev[k];
            }
        }
        rows.push(row);
    }
    rows
}
