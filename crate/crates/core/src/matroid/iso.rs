use super::{Matroid, MatroidError, Permutation, SubsetMask};

/// Largest ground set the `n!` search accepts.
pub const MAX_ISO_GROUND_SET: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoOutcome {
    /// A bijection carrying the bases of the first matroid onto the second.
    pub witness: Option<Permutation>,
    /// Permutations examined before stopping.
    pub permutations_checked: u64,
}

impl IsoOutcome {
    pub fn is_isomorphic(&self) -> bool {
        self.witness.is_some()
    }
}

/// Tries every permutation of the ground set in lexicographic order.
pub fn are_isomorphic_bruteforce(
    left: &Matroid,
    right: &Matroid,
) -> Result<IsoOutcome, MatroidError> {
    let n = left.ground_set_size();
    if n != right.ground_set_size() {
        return Err(MatroidError::SizeMismatch {
            left: n,
            right: right.ground_set_size(),
        });
    }
    if n > MAX_ISO_GROUND_SET {
        return Err(MatroidError::Capacity {
            n,
            limit: MAX_ISO_GROUND_SET,
        });
    }
    let left_bases = left.bases();
    let right_bases = right.bases();
    let mut is_right_basis = vec![false; 1 << n];
    for b in &right_bases {
        is_right_basis[b.bits() as usize] = true;
    }

    let mut images: Vec<usize> = (1..=n).collect();
    let mut checked = 0u64;
    loop {
        checked += 1;
        // Same basis count, so an injective image is the whole family.
        if left_bases.len() == right_bases.len() {
            let maps_onto = left_bases.iter().all(|b| {
                let image = b
                    .elements()
                    .fold(0u32, |acc, e| acc | 1 << (images[e - 1] - 1));
                is_right_basis[SubsetMask::from_bits(image).bits() as usize]
            });
            if maps_onto {
                return Ok(IsoOutcome {
                    witness: Some(Permutation::new(images)?),
                    permutations_checked: checked,
                });
            }
        }
        if !next_permutation(&mut images) {
            break;
        }
    }
    Ok(IsoOutcome {
        witness: None,
        permutations_checked: checked,
    })
}

fn next_permutation(items: &mut [usize]) -> bool {
    if items.len() < 2 {
        return false;
    }
    let mut i = items.len() - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = items.len() - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}
