//! Exhaustive enumeration of `g`-tuples of subsets, aggregated by profile.
//!
//! Work is split by the value of `A_1`. Each worker counts into a private
//! hash map and the maps are summed into a [`ProfileCounter`] afterwards, so
//! the result does not depend on the thread count or schedule.
//!
//! When the whole profile fits 128 bits, it is packed into a `u128` built
//! from precomputed per-subset codes; otherwise every tuple goes through
//! [`tuple_profile`].

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigUint;
use rustc_hash::FxHashMap;

use super::profile::{pair_slot, tuple_profile, ProfileCounter};
use super::TutteError;
use crate::matroid::{RankTable, SubsetMask};

/// Default cap on `log2` of the number of enumerated tuples.
pub const DEFAULT_BUDGET_LOG2: u32 = 26;

#[derive(Clone, Debug)]
pub struct EngineConfig {
    pub threads: usize,
    /// Runs with `g * n` above this are refused.
    pub budget_log2: u32,
    /// Use packed `u128` profile keys when they fit.
    pub packed_keys: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
            budget_log2: DEFAULT_BUDGET_LOG2,
            packed_keys: true,
        }
    }
}

impl EngineConfig {
    pub fn with_threads(threads: usize) -> Self {
        EngineConfig {
            threads: threads.max(1),
            ..Default::default()
        }
    }
}

/// Checks the `2^(g n)` cost against the budget.
pub fn check_budget(genus: usize, n: usize, budget_log2: u32) -> Result<(), TutteError> {
    if genus == 0 {
        return Err(TutteError::ZeroGenus);
    }
    let cost = genus * n;
    if cost > budget_log2 as usize {
        return Err(TutteError::BudgetExceeded {
            genus,
            n,
            log2_cost: cost,
            budget_log2,
        });
    }
    Ok(())
}

/// Counts every profile over all `2^(g n)` tuples.
pub fn profile_counts(
    table: &RankTable,
    genus: usize,
    config: &EngineConfig,
) -> Result<ProfileCounter, TutteError> {
    let n = table.ground_set_size();
    check_budget(genus, n, config.budget_log2)?;
    let bits = bits_per_exponent(n);
    let slots = 2 * genus * genus;
    let counter = if config.packed_keys && slots * bits <= 128 {
        let layout = PackedLayout::new(table, genus, bits);
        run_workers(
            n,
            config.threads,
            genus,
            |range, out| layout.count_range(range, out),
            |k| layout.unpack(k),
        )
    } else {
        let direct = Direct { table, genus };
        run_workers(
            n,
            config.threads,
            genus,
            |range, out| direct.count_range(range, out),
            |k| k,
        )
    };
    Ok(counter)
}

fn bits_per_exponent(n: usize) -> usize {
    (usize::BITS - n.leading_zeros()).max(1) as usize
}

/// Hands out chunks of `A_1` values to `threads` workers and merges their
/// private maps.
fn run_workers<K, F, U>(
    n: usize,
    threads: usize,
    genus: usize,
    count: F,
    unpack: U,
) -> ProfileCounter
where
    K: Send,
    F: Fn(std::ops::Range<u32>, &mut FxHashMap<K, u64>) + Sync,
    U: Fn(K) -> Vec<u8>,
    K: std::hash::Hash + Eq,
{
    let total = 1usize << n;
    let threads = threads.clamp(1, total);
    let chunk = (total / (threads * 16)).max(1);
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<FxHashMap<K, u64>>> = Mutex::new(Vec::with_capacity(threads));

    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| {
                let mut local = FxHashMap::default();
                loop {
                    let start = next.fetch_add(chunk, Ordering::Relaxed);
                    if start >= total {
                        break;
                    }
                    let end = (start + chunk).min(total);
                    count(start as u32..end as u32, &mut local);
                }
                results.lock().expect("worker panicked").push(local);
            });
        }
    });

    let mut counter = ProfileCounter::new(genus);
    for map in results.into_inner().expect("worker panicked") {
        for (k, c) in map {
            counter.add_raw(unpack(k), BigUint::from(c));
        }
    }
    counter
}

struct Direct<'a> {
    table: &'a RankTable,
    genus: usize,
}

impl Direct<'_> {
    fn count_range(&self, first: std::ops::Range<u32>, out: &mut FxHashMap<Vec<u8>, u64>) {
        let size = 1u32 << self.table.ground_set_size();
        let mut tuple = vec![SubsetMask::EMPTY; self.genus];
        for a in first {
            tuple[0] = SubsetMask::from_bits(a);
            self.descend(1, size, &mut tuple, out);
        }
    }

    fn descend(
        &self,
        level: usize,
        size: u32,
        tuple: &mut [SubsetMask],
        out: &mut FxHashMap<Vec<u8>, u64>,
    ) {
        if level == self.genus {
            let p = tuple_profile(self.table, tuple);
            *out.entry(p.exponents().to_vec()).or_insert(0) += 1;
            return;
        }
        for a in 0..size {
            tuple[level] = SubsetMask::from_bits(a);
            self.descend(level + 1, size, tuple, out);
        }
    }
}

/// Bit layout of a packed profile: slot `s` occupies bits `s*b .. (s+1)*b`.
struct PackedLayout {
    genus: usize,
    bits: usize,
    size: u32,
    /// `corank | nullity << b` per subset mask.
    code: Vec<u32>,
    single_shift: Vec<u32>,
    /// `pair_shift[k][j]` = (cap shift, cup shift) for the pair `j < k`.
    pair_shift: Vec<Vec<(u32, u32)>>,
}

impl PackedLayout {
    fn new(table: &RankTable, genus: usize, bits: usize) -> Self {
        let full = table.full_rank() as u32;
        let code = table
            .as_slice()
            .iter()
            .enumerate()
            .map(|(m, &r)| {
                let r = r as u32;
                (full - r) | (m.count_ones() - r) << bits
            })
            .collect();
        let single_shift = (0..genus).map(|i| (2 * i * bits) as u32).collect();
        let pair_shift = (0..genus)
            .map(|k| {
                (0..k)
                    .map(|j| {
                        let s = pair_slot(genus, j, k);
                        ((s * bits) as u32, ((s + 2) * bits) as u32)
                    })
                    .collect()
            })
            .collect();
        PackedLayout {
            genus,
            bits,
            size: 1 << table.ground_set_size(),
            code,
            single_shift,
            pair_shift,
        }
    }

    fn count_range(&self, first: std::ops::Range<u32>, out: &mut FxHashMap<u128, u64>) {
        let mut chosen = vec![0u32; self.genus];
        for a in first {
            chosen[0] = a;
            let key = (self.code[a as usize] as u128) << self.single_shift[0];
            if self.genus == 1 {
                *out.entry(key).or_insert(0) += 1;
            } else {
                self.descend(1, key, &mut chosen, out);
            }
        }
    }

    fn descend(&self, level: usize, key: u128, chosen: &mut [u32], out: &mut FxHashMap<u128, u64>) {
        let last = level + 1 == self.genus;
        let shift = self.single_shift[level];
        let pairs = &self.pair_shift[level];
        for a in 0..self.size {
            let mut k = key | (self.code[a as usize] as u128) << shift;
            for (j, &(cap, cup)) in pairs.iter().enumerate() {
                let b = chosen[j];
                k |= (self.code[(a & b) as usize] as u128) << cap;
                k |= (self.code[(a | b) as usize] as u128) << cup;
            }
            if last {
                *out.entry(k).or_insert(0) += 1;
            } else {
                chosen[level] = a;
                self.descend(level + 1, k, chosen, out);
            }
        }
    }

    fn unpack(&self, key: u128) -> Vec<u8> {
        let slots = 2 * self.genus * self.genus;
        let mask = (1u128 << self.bits) - 1;
        (0..slots)
            .map(|s| ((key >> (s * self.bits)) & mask) as u8)
            .collect()
    }
}
