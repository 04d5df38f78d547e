use super::{
    check_capacity, expand_around, Matroid, MatroidError, MatroidKind, MinorOp, SubsetMask,
};

/// `ρ(A)` for every `A ⊆ E`, indexed by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTable {
    n: usize,
    ranks: Vec<u8>,
}

impl RankTable {
    pub fn build(matroid: &Matroid) -> Result<Self, MatroidError> {
        let n = matroid.ground_set_size();
        check_capacity(n)?;
        let size = 1usize << n;
        let ranks = match matroid.kind() {
            MatroidKind::Uniform { rank } => (0..size)
                .map(|m| (m.count_ones() as usize).min(*rank) as u8)
                .collect(),
            MatroidKind::Bases(bases) => ranks_from_bases(n, bases),
            MatroidKind::Vector(matrix) => {
                let mut ranks = vec![0u8; size];
                matrix.fill_rank_table(&mut ranks);
                ranks
            }
            MatroidKind::Relabeled { base, perm, .. } => {
                let inner = RankTable::build(base)?;
                let mut ranks = vec![0u8; size];
                for (m, &r) in inner.ranks.iter().enumerate() {
                    ranks[perm.apply(SubsetMask::from_bits(m as u32)).bits() as usize] = r;
                }
                ranks
            }
            MatroidKind::Minor { base, element, op } => {
                let inner = RankTable::build(base)?;
                let e = SubsetMask::singleton(*element);
                let offset = match op {
                    MinorOp::Delete => SubsetMask::EMPTY,
                    MinorOp::Contract => e,
                };
                let loop_rank = match op {
                    MinorOp::Delete => 0,
                    MinorOp::Contract => inner.rank(e),
                };
                (0..size as u32)
                    .map(|m| {
                        let lifted = expand_around(SubsetMask::from_bits(m), *element) | offset;
                        inner.rank(lifted) - loop_rank
                    })
                    .collect()
            }
        };
        Ok(RankTable { n, ranks })
    }

    /// Table from raw ranks; `ranks.len()` must be `2^n`.
    pub fn from_ranks(n: usize, ranks: Vec<u8>) -> Result<Self, MatroidError> {
        check_capacity(n)?;
        if ranks.len() != 1 << n {
            return Err(MatroidError::Parameters(format!(
                "rank table of length {} does not match 2^{n}",
                ranks.len()
            )));
        }
        Ok(RankTable { n, ranks })
    }

    pub fn ground_set_size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rank(&self, set: SubsetMask) -> u8 {
        self.ranks[set.bits() as usize]
    }

    pub fn full_rank(&self) -> u8 {
        self.ranks[self.ranks.len() - 1]
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.ranks
    }

    pub fn bases(&self) -> Vec<SubsetMask> {
        let r = self.full_rank();
        self.ranks
            .iter()
            .enumerate()
            .filter(|&(m, &rank)| rank == r && m.count_ones() == r as u32)
            .map(|(m, _)| SubsetMask::from_bits(m as u32))
            .collect()
    }

    /// Table of `M \ n` (the last element removed).
    pub fn delete_last(&self) -> RankTable {
        let half = self.ranks.len() / 2;
        RankTable {
            n: self.n - 1,
            ranks: self.ranks[..half].to_vec(),
        }
    }

    /// Table of `M / n`.
    pub fn contract_last(&self) -> RankTable {
        let half = self.ranks.len() / 2;
        let base = self.ranks[half];
        RankTable {
            n: self.n - 1,
            ranks: self.ranks[half..].iter().map(|&r| r - base).collect(),
        }
    }
}

/// Independence by downward closure from the bases, then
/// `ρ(A) = max_e ρ(A - e)` for dependent `A`.
fn ranks_from_bases(n: usize, bases: &[SubsetMask]) -> Vec<u8> {
    let size = 1usize << n;
    let mut independent = vec![false; size];
    for b in bases {
        independent[b.bits() as usize] = true;
    }
    for m in (0..size).rev() {
        if independent[m] {
            continue;
        }
        let mut free = !m & (size - 1);
        while free != 0 {
            let bit = free & free.wrapping_neg();
            if independent[m | bit] {
                independent[m] = true;
                break;
            }
            free &= free - 1;
        }
    }
    let mut ranks = vec![0u8; size];
    for m in 1..size {
        ranks[m] = if independent[m] {
            m.count_ones() as u8
        } else {
            let mut best = 0;
            let mut rest = m;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                best = best.max(ranks[m ^ bit]);
                rest &= rest - 1;
            }
            best
        };
    }
    ranks
}
