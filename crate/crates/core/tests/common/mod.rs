#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use tutte_genus::matroid::{
    construct_q, construct_r, construct_s, construct_s_prime, GfMatrix, Matroid, Permutation,
    SubsetMask,
};
use tutte_genus::poly::{canonical_var_order, Polynomial, VarId};

/// Column matroid of a random matrix over GF(2) or GF(3).
pub fn random_vector_matroid<R: Rng>(rng: &mut R, n: usize) -> Matroid {
    let p = if rng.gen_bool(0.5) { 2 } else { 3 };
    let k = rng.gen_range(1..=4);
    let rows = (0..k)
        .map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect())
        .collect();
    Matroid::vector(GfMatrix::new(p, rows).unwrap()).unwrap()
}

/// A random explicit-bases matroid on `n` elements, via the bases of a
/// random vector matroid.
pub fn random_bases_matroid<R: Rng>(rng: &mut R, n: usize) -> Matroid {
    let v = random_vector_matroid(rng, n);
    Matroid::from_bases(n, &v.bases()).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::new(images).unwrap()
}

/// The named matroids used throughout the tests, with n <= 12.
pub fn named_matroids() -> Vec<(String, Matroid)> {
    let mut out = vec![
        ("U(2,4)".to_string(), Matroid::uniform(2, 4).unwrap()),
        ("U(1,2)".to_string(), Matroid::uniform(1, 2).unwrap()),
        ("R(3,6)".to_string(), construct_r(3, 6).unwrap()),
        ("Q(3,6)".to_string(), construct_q(3, 6).unwrap()),
        ("R(3,7)".to_string(), construct_r(3, 7).unwrap()),
        ("Q(4,8)".to_string(), construct_q(4, 8).unwrap()),
        ("S(3)".to_string(), construct_s(3).unwrap()),
        ("S'(3)".to_string(), construct_s_prime(3).unwrap()),
    ];
    let gf2 = GfMatrix::new(2, vec![vec![1, 0, 1, 1, 0], vec![0, 1, 1, 0, 0]]).unwrap();
    out.push(("GF2 with loop".to_string(), Matroid::vector(gf2).unwrap()));
    let r = Arc::new(construct_r(3, 6).unwrap());
    out.push(("R(3,6)\\6".to_string(), r.delete(6).unwrap()));
    out.push(("R(3,6)/1".to_string(), r.contract(1).unwrap()));
    out
}

/// `T^(g)(M)` straight from the definition: for every tuple, multiply out
/// `(v - 1)^e` for every variable using the matroid's own rank oracle, and
/// add. No rank tables, no profile aggregation.
pub fn brute_force_genus(m: &Matroid, genus: usize) -> Polynomial {
    let n = m.ground_set_size();
    let full = m.full_rank();
    let one = Polynomial::constant(genus, 1).unwrap();
    let shifted: HashMap<VarId, Polynomial> = canonical_var_order(genus)
        .unwrap()
        .into_iter()
        .map(|v| {
            (
                v,
                Polynomial::variable(genus, v)
                    .unwrap()
                    .try_sub(&one)
                    .unwrap(),
            )
        })
        .collect();
    let factor = |x: VarId, y: VarId, a: SubsetMask| {
        let r = m.rank(a).unwrap();
        shifted[&x]
            .try_pow((full - r) as u32)
            .unwrap()
            .try_mul(&shifted[&y].try_pow((a.len() - r) as u32).unwrap())
            .unwrap()
    };
    let mut total = Polynomial::zero(genus).unwrap();
    let size = 1u64 << n;
    for code in 0..size.pow(genus as u32) {
        let tuple: Vec<SubsetMask> = (0..genus)
            .map(|i| SubsetMask::from_bits(((code >> (i * n)) & (size - 1)) as u32))
            .collect();
        let mut term = one.clone();
        for (i, &a) in tuple.iter().enumerate() {
            let i = i as u32 + 1;
            term = term.try_mul(&factor(VarId::X(i), VarId::Y(i), a)).unwrap();
        }
        for i in 0..genus {
            for j in i + 1..genus {
                let (li, lj) = (i as u32 + 1, j as u32 + 1);
                let cap = factor(
                    VarId::xcap(li, lj),
                    VarId::ycap(li, lj),
                    tuple[i] & tuple[j],
                );
                let cup = factor(
                    VarId::xcup(li, lj),
                    VarId::ycup(li, lj),
                    tuple[i] | tuple[j],
                );
                term = term.try_mul(&cap).unwrap().try_mul(&cup).unwrap();
            }
        }
        total = total.try_add(&term).unwrap();
    }
    total
}

pub fn two() -> BigInt {
    BigInt::from(2)
}
