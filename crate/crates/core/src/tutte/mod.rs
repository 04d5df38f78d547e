//! Tutte polynomials of genus `g`.
//!
//! `T^(g)(M)` sums, over every ordered `g`-tuple `(A_1, ..., A_g)` of subsets
//! of `E`, a product of `(x-1)^corank (y-1)^nullity` factors: one pair of
//! variables per `A_i` and two pairs per index pair `i < j` (for `A_i ∩ A_j`
//! and `A_i ∪ A_j`). Genus 1 is the classical Tutte polynomial.

mod engine;
mod profile;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::matroid::{Matroid, MatroidError, RankTable, SubsetMask};
use crate::poly::{Exponents, PolyError, Polynomial, VarId};

pub use engine::{check_budget, profile_counts, EngineConfig, DEFAULT_BUDGET_LOG2};
pub use profile::{tuple_profile, Profile, ProfileCounter};

/// Largest ground set accepted by [`tutte_delete_contract`].
pub const MAX_DELETE_CONTRACT: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TutteError {
    #[error("genus must be at least 1")]
    ZeroGenus,
    #[error(
        "genus-{genus} enumeration over {n} elements needs 2^{log2_cost} tuples, \
         above the budget of 2^{budget_log2}"
    )]
    BudgetExceeded {
        genus: usize,
        n: usize,
        log2_cost: usize,
        budget_log2: u32,
    },
    #[error("ground set of {n} elements exceeds the limit of {limit}")]
    Capacity { n: usize, limit: usize },
    #[error("specialization needs genus >= 2, got {0}")]
    GenusTooSmall(usize),
    #[error("coefficient {coeff} of {monomial} is not divisible by {divisor}")]
    NotDivisible {
        monomial: String,
        coeff: BigInt,
        divisor: BigInt,
    },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The classical Tutte polynomial by the corank-nullity sum over all subsets.
pub fn tutte_sum(matroid: &Matroid) -> Result<Polynomial, TutteError> {
    let table = matroid.rank_table()?;
    let mut counter = ProfileCounter::new(1);
    for m in 0..1u32 << table.ground_set_size() {
        let p = tuple_profile(&table, &[SubsetMask::from_bits(m)]);
        counter.add(&p, 1u32);
    }
    Ok(counter.expand())
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `Σ_{i≤r} C(n,i)(x-1)^(r-i) + Σ_{i>r} C(n,i)(y-1)^(i-r)`.
pub fn tutte_closed_uniform(r: usize, n: usize) -> Result<Polynomial, TutteError> {
    if r > n {
        return Err(MatroidError::RankExceedsGroundSet { r, n }.into());
    }
    let one = Polynomial::constant(1, 1)?;
    let x_minus = Polynomial::variable(1, VarId::X(1))?.try_sub(&one)?;
    let y_minus = Polynomial::variable(1, VarId::Y(1))?.try_sub(&one)?;
    let mut total = Polynomial::zero(1)?;
    for i in 0..=n {
        let factor = if i <= r {
            x_minus.try_pow((r - i) as u32)?
        } else {
            y_minus.try_pow((i - r) as u32)?
        };
        total = total.try_add(&factor.scale(&binomial(n, i)))?;
    }
    Ok(total)
}

/// The classical Tutte polynomial by deletion and contraction of the last
/// element, on rank tables.
pub fn tutte_delete_contract(matroid: &Matroid) -> Result<Polynomial, TutteError> {
    let n = matroid.ground_set_size();
    if n > MAX_DELETE_CONTRACT {
        return Err(TutteError::Capacity {
            n,
            limit: MAX_DELETE_CONTRACT,
        });
    }
    let table = matroid.rank_table()?;
    let x = Polynomial::variable(1, VarId::X(1))?;
    let y = Polynomial::variable(1, VarId::Y(1))?;
    delete_contract(&table, &x, &y)
}

fn delete_contract(
    table: &RankTable,
    x: &Polynomial,
    y: &Polynomial,
) -> Result<Polynomial, TutteError> {
    let n = table.ground_set_size();
    if n == 0 {
        return Ok(Polynomial::constant(1, 1)?);
    }
    let e = SubsetMask::singleton(n);
    let is_loop = table.rank(e) == 0;
    let is_coloop = table.rank(SubsetMask::full(n).remove(n)) + 1 == table.full_rank();
    if is_loop {
        return Ok(y.try_mul(&delete_contract(&table.delete_last(), x, y)?)?);
    }
    if is_coloop {
        return Ok(x.try_mul(&delete_contract(&table.contract_last(), x, y)?)?);
    }
    let deleted = delete_contract(&table.delete_last(), x, y)?;
    let contracted = delete_contract(&table.contract_last(), x, y)?;
    Ok(deleted.try_add(&contracted)?)
}

/// `T^(g)(M)` by exhaustive enumeration of all `2^(g n)` tuples.
pub fn tutte_genus(
    matroid: &Matroid,
    genus: usize,
    config: &EngineConfig,
) -> Result<Polynomial, TutteError> {
    check_budget(genus, matroid.ground_set_size(), config.budget_log2)?;
    let table = matroid.rank_table()?;
    Ok(profile_counts(&table, genus, config)?.expand())
}

/// Sets `x_g`, `y_g` and every pair variable involving `g` to 2, divides by
/// `2^n`, and returns the result as a genus `g - 1` polynomial.
pub fn specialize_down(p: &Polynomial, n: usize) -> Result<Polynomial, TutteError> {
    let genus = p.genus();
    if genus < 2 {
        return Err(TutteError::GenusTooSmall(genus));
    }
    let top = genus as u32;
    let two = BigInt::from(2);
    let partial = p
        .vars()
        .iter()
        .filter(|v| v.involves(top))
        .map(|&v| (v, two.clone()))
        .collect();
    let reduced = p.substitute(&partial);
    let divisor = BigInt::one() << n;
    let divided =
        reduced
            .divide_exact(&divisor)
            .map_err(|(exps, coeff)| TutteError::NotDivisible {
                monomial: describe_monomial(&reduced, &exps),
                coeff,
                divisor: divisor.clone(),
            })?;
    Ok(divided.with_genus(genus - 1)?)
}

fn describe_monomial(p: &Polynomial, exps: &[u32]) -> String {
    let text = p.monomial_text(exps);
    if text.is_empty() {
        "1".to_string()
    } else {
        text
    }
}

/// Largest `m` with `m(m+1)/2 <= n`.
pub fn m1(n: usize) -> Result<usize, TutteError> {
    check_bound_input(n)?;
    let mut m = 0;
    while (m + 1) * (m + 2) / 2 <= n {
        m += 1;
    }
    Ok(m)
}

/// `2 * ceil(sqrt(n))`.
pub fn m2(n: usize) -> Result<usize, TutteError> {
    check_bound_input(n)?;
    let mut k = 0;
    while k * k < n {
        k += 1;
    }
    Ok(2 * k)
}

fn check_bound_input(n: usize) -> Result<(), TutteError> {
    if n < 3 {
        return Err(MatroidError::Parameters(format!("m1/m2 need n >= 3, got {n}")).into());
    }
    Ok(())
}

/// A monomial where two invariants disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub exponents: Exponents,
    pub monomial: String,
    pub left: BigInt,
    pub right: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    Differ(Witness),
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal)
    }
}

/// Compares two already computed invariants.
pub fn compare_polynomials(left: &Polynomial, right: &Polynomial) -> Verdict {
    match left.first_difference(right) {
        None => Verdict::Equal,
        Some((exponents, l, r)) => Verdict::Differ(Witness {
            monomial: describe_monomial(left, &exponents),
            exponents,
            left: l,
            right: r,
        }),
    }
}

/// Computes `T^(g)` of both matroids and compares them.
pub fn compare_invariants(
    left: &Matroid,
    right: &Matroid,
    genus: usize,
    config: &EngineConfig,
) -> Result<Verdict, TutteError> {
    let (n, m) = (left.ground_set_size(), right.ground_set_size());
    if n != m {
        return Err(MatroidError::SizeMismatch { left: n, right: m }.into());
    }
    let a = tutte_genus(left, genus, config)?;
    let b = tutte_genus(right, genus, config)?;
    Ok(compare_polynomials(&a, &b))
}

/// Exact `2^(g n)`, the all-2s value of any `T^(g)`.
pub fn tuple_count(genus: usize, n: usize) -> BigInt {
    BigInt::one() << (genus * n)
}
