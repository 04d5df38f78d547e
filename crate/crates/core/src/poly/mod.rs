//! Sparse multivariate polynomials with big-integer coefficients.
//!
//! A [`Polynomial`] carries an ordered variable list (normally
//! [`canonical_var_order`] for its genus) and a map from dense exponent
//! vectors to nonzero coefficients. Two polynomials are equal exactly when
//! their genus, variable list and term maps agree.

mod format;
mod var;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Neg;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use thiserror::Error;

pub use var::{canonical_var_order, VarId};

/// Exponents in the polynomial's variable order.
pub type Exponents = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("genus must be at least 1")]
    ZeroGenus,
    #[error("operands use different variable sets (genus {left} vs {right})")]
    VariableMismatch { left: usize, right: usize },
    #[error("no value assigned to {0}")]
    MissingVariable(VarId),
    #[error("{0} is not a variable of this polynomial")]
    UnknownVariable(VarId),
    #[error("exponent list has length {found}, expected {expected}")]
    ExponentLength { expected: usize, found: usize },
    #[error("malformed polynomial: {0}")]
    Malformed(String),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    genus: usize,
    vars: Arc<[VarId]>,
    terms: BTreeMap<Exponents, BigInt>,
}

impl Polynomial {
    pub fn zero(genus: usize) -> Result<Self, PolyError> {
        Ok(Polynomial {
            genus,
            vars: canonical_var_order(genus)?.into(),
            terms: BTreeMap::new(),
        })
    }

    /// A polynomial over an explicit variable list.
    pub fn zero_over(genus: usize, vars: Vec<VarId>) -> Self {
        Polynomial {
            genus,
            vars: vars.into(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(genus: usize, c: impl Into<BigInt>) -> Result<Self, PolyError> {
        let mut p = Self::zero(genus)?;
        let exps = vec![0; p.vars.len()];
        p.add_term(exps, c.into());
        Ok(p)
    }

    pub fn variable(genus: usize, var: VarId) -> Result<Self, PolyError> {
        let mut p = Self::zero(genus)?;
        let slot = p.slot(var)?;
        let mut exps = vec![0; p.vars.len()];
        exps[slot] = 1;
        p.add_term(exps, BigInt::one());
        Ok(p)
    }

    /// Collects terms, merging repeated exponent vectors.
    pub fn from_terms<I>(genus: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Exponents, BigInt)>,
    {
        let mut p = Self::zero(genus)?;
        for (exps, c) in terms {
            if exps.len() != p.vars.len() {
                return Err(PolyError::ExponentLength {
                    expected: p.vars.len(),
                    found: exps.len(),
                });
            }
            p.add_term(exps, c);
        }
        Ok(p)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn vars(&self) -> &[VarId] {
        &self.vars
    }

    pub fn has_canonical_vars(&self) -> bool {
        canonical_var_order(self.genus).is_ok_and(|v| v[..] == self.vars[..])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Terms in canonical output order: lexicographically descending
    /// exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn slot(&self, var: VarId) -> Result<usize, PolyError> {
        self.vars
            .iter()
            .position(|&v| v == var)
            .ok_or(PolyError::UnknownVariable(var))
    }

    pub(crate) fn add_term(&mut self, exps: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.genus != other.genus || self.vars != other.vars {
            return Err(PolyError::VariableMismatch {
                left: self.genus,
                right: other.genus,
            });
        }
        Ok(())
    }

    fn empty_like(&self) -> Polynomial {
        Polynomial {
            genus: self.genus,
            vars: Arc::clone(&self.vars),
            terms: BTreeMap::new(),
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.empty_like();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn try_pow(&self, k: u32) -> Result<Polynomial, PolyError> {
        let mut out = self.empty_like();
        out.add_term(vec![0; self.vars.len()], BigInt::one());
        for _ in 0..k {
            out = out.try_mul(self)?;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &BigInt) -> Polynomial {
        let mut out = self.empty_like();
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * factor);
        }
        out
    }

    /// Exact evaluation; every variable must be assigned.
    pub fn evaluate(&self, assignment: &HashMap<VarId, BigInt>) -> Result<BigInt, PolyError> {
        let values = self
            .vars
            .iter()
            .map(|v| assignment.get(v).ok_or(PolyError::MissingVariable(*v)))
            .collect::<Result<Vec<_>, _>>()?;
        let mut total = BigInt::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (value, &e) in values.iter().zip(exps) {
                if e > 0 {
                    term *= Pow::pow(*value, e);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Evaluates with every variable set to `value`.
    pub fn evaluate_all(&self, value: &BigInt) -> BigInt {
        let assignment = self.vars.iter().map(|&v| (v, value.clone())).collect();
        self.evaluate(&assignment).expect("all variables assigned")
    }

    /// Partial evaluation. Substituted variables disappear from the variable
    /// list; the rest keep their relative order and the genus is unchanged.
    pub fn substitute(&self, partial: &HashMap<VarId, BigInt>) -> Polynomial {
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|&i| !partial.contains_key(&self.vars[i]))
            .collect();
        let mut out = Polynomial {
            genus: self.genus,
            vars: keep.iter().map(|&i| self.vars[i]).collect(),
            terms: BTreeMap::new(),
        };
        for (exps, c) in &self.terms {
            let mut coeff = c.clone();
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    if let Some(value) = partial.get(&self.vars[i]) {
                        coeff *= Pow::pow(value, e);
                    }
                }
            }
            out.add_term(keep.iter().map(|&i| exps[i]).collect(), coeff);
        }
        out
    }

    /// Reinterprets the polynomial at `genus` when its variable list already
    /// matches that genus's canonical order.
    pub fn with_genus(mut self, genus: usize) -> Result<Polynomial, PolyError> {
        let vars = canonical_var_order(genus)?;
        if vars[..] != self.vars[..] {
            return Err(PolyError::VariableMismatch {
                left: self.genus,
                right: genus,
            });
        }
        self.genus = genus;
        Ok(self)
    }

    /// Divides every coefficient by `d`, or reports the first term (in
    /// output order) that is not divisible.
    pub fn divide_exact(&self, d: &BigInt) -> Result<Polynomial, (Exponents, BigInt)> {
        let mut out = self.empty_like();
        for (e, c) in self.terms() {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err((e.clone(), c.clone()));
            }
            out.add_term(e.clone(), q);
        }
        Ok(out)
    }

    /// Renames variables through `map`, which must permute the variable list.
    pub fn permute_vars(&self, map: impl Fn(VarId) -> VarId) -> Result<Polynomial, PolyError> {
        let targets = self
            .vars
            .iter()
            .map(|&v| self.slot(map(v)))
            .collect::<Result<Vec<_>, _>>()?;
        let mut seen = vec![false; targets.len()];
        for &t in &targets {
            if std::mem::replace(&mut seen[t], true) {
                return Err(PolyError::Malformed(
                    "variable map is not a bijection".into(),
                ));
            }
        }
        let mut out = self.empty_like();
        for (exps, c) in &self.terms {
            let mut moved = vec![0; exps.len()];
            for (i, &e) in exps.iter().enumerate() {
                moved[targets[i]] = e;
            }
            out.add_term(moved, c.clone());
        }
        Ok(out)
    }

    /// The first monomial, in output order, where the two polynomials differ,
    /// with both coefficients.
    pub fn first_difference(&self, other: &Polynomial) -> Option<(Exponents, BigInt, BigInt)> {
        let mut keys: Vec<&Exponents> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort_unstable_by(|a, b| b.cmp(a));
        keys.dedup();
        keys.into_iter().find_map(|k| {
            let a = self.coefficient(k);
            let b = other.coefficient(k);
            (a != b).then(|| (k.clone(), a, b))
        })
    }

    /// Renders one monomial, e.g. `x1^2*ycap{1,2}`; empty for the constant.
    pub fn monomial_text(&self, exps: &[u32]) -> String {
        format::monomial(&self.vars, exps)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&BigInt::from(-1))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial(g={}, {})", self.genus, self.canonical_text())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}
