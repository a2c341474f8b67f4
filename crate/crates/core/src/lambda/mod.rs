//! The ring Λ of symmetric functions over ℚ.
//!
//! Elements carry one of four basis tags. Conversions all pass through power
//! sums. Bernstein operators act in the Schur basis, where the Pieri rules
//! make them cheap.

mod pieri;
pub(crate) mod tables;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::partition::Partition;
pub(crate) use tables::Terms;
use tables::{add_scaled, add_to, concat_mul};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Power,
    Schur,
    Homog,
    Elem,
}

impl Basis {
    fn symbol(self) -> &'static str {
        match self {
            Basis::Power => "p",
            Basis::Schur => "s",
            Basis::Homog => "h",
            Basis::Elem => "e",
        }
    }
}

/// A finite ℚ-combination of basis elements `b_λ` for one of the four bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaElement {
    basis: Basis,
    terms: Terms,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl LambdaElement {
    pub fn zero(basis: Basis) -> Self {
        LambdaElement {
            basis,
            terms: Terms::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut terms = Terms::new();
        terms.insert(lambda, BigRational::one());
        LambdaElement { basis, terms }
    }

    pub fn from_terms(
        basis: Basis,
        terms: impl IntoIterator<Item = (Partition, BigRational)>,
    ) -> Self {
        let mut out = Self::zero(basis);
        for (k, c) in terms {
            add_to(&mut out.terms, k, c);
        }
        out
    }

    pub(crate) fn from_raw(basis: Basis, terms: Terms) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        LambdaElement { basis, terms }
    }

    /// `s_λ`.
    pub fn s(lambda: &Partition) -> Self {
        Self::basis_element(Basis::Schur, lambda.clone())
    }

    /// `p_μ` (a product of power sums).
    pub fn p_mu(mu: &Partition) -> Self {
        Self::basis_element(Basis::Power, mu.clone())
    }

    fn single(basis: Basis, r: i64) -> Self {
        match r {
            r if r < 0 => Self::zero(basis),
            0 => Self::one(basis),
            r => Self::basis_element(basis, Partition::new(vec![r as u32]).unwrap()),
        }
    }

    /// `p_r`; `p_0` is taken to be 1.
    pub fn p(r: i64) -> Self {
        Self::single(Basis::Power, r)
    }

    /// `h_r`, zero for negative `r`.
    pub fn h(r: i64) -> Self {
        Self::single(Basis::Homog, r)
    }

    /// `e_r`, zero for negative `r`.
    pub fn e(r: i64) -> Self {
        Self::single(Basis::Elem, r)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigRational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Partition, BigRational> {
        self.terms
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigRational {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of 1. Every basis has `b_∅ = 1`, so no conversion is needed.
    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&Partition::empty())
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

    /// Largest degree present, or `None` for zero.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Partition::size).max()
    }

    /// Common degree of all terms, if homogeneous and nonzero.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Partition::size);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Part of degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self::from_raw(
            self.basis,
            self.terms
                .iter()
                .filter(|(k, _)| k.size() == d)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.basis);
        }
        Self::from_raw(
            self.basis,
            self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        )
    }

    /// Sum; the result is in `self`'s basis.
    pub fn add(&self, other: &Self) -> Self {
        let other = other.to_basis(self.basis);
        let mut terms = self.terms.clone();
        add_scaled(&mut terms, &other.terms, &BigRational::one());
        Self::from_raw(self.basis, terms)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn to_basis(&self, target: Basis) -> Self {
        convert(self, target)
    }

    /// The Fock-space vector under `s_λ ↔ λ`; `None` unless every Schur
    /// coefficient is an integer.
    pub fn to_fock(&self) -> Option<FockVector> {
        let s = self.to_basis(Basis::Schur);
        if !s.is_integral() {
            return None;
        }
        let terms: Vec<(Partition, BigInt)> = s
            .terms
            .iter()
            .map(|(k, c)| (k.clone(), c.to_integer()))
            .collect();
        Some(FockVector::from_partitions(
            terms.iter().map(|(k, c)| (k, c.clone())),
        ))
    }

    /// The Schur-basis element `Σ c_λ s_λ` for `Σ c_λ λ`.
    pub fn from_fock(v: &FockVector) -> Result<Self> {
        let terms = v.partition_terms().ok_or_else(|| {
            Error::invalid(format!(
                "charge {} vector has no symmetric function",
                v.charge()
            ))
        })?;
        Ok(Self::from_terms(
            Basis::Schur,
            terms
                .into_iter()
                .map(|(k, c)| (k, BigRational::from_integer(c))),
        ))
    }
}

impl fmt::Display for LambdaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i > 0 {
                f.write_str(" ")?;
            }
            let mag = c.abs();
            if k.is_empty() {
                write!(f, "{sign}{mag}")?;
                continue;
            }
            if mag.is_one() {
                write!(f, "{sign}{}({k})", self.basis.symbol())?;
            } else {
                write!(f, "{sign}{mag}*{}({k})", self.basis.symbol())?;
            }
        }
        Ok(())
    }
}

fn to_power_terms(f: &LambdaElement) -> Terms {
    let expand: fn(&Partition) -> std::sync::Arc<Terms> = match f.basis {
        Basis::Power => return f.terms.clone(),
        Basis::Schur => tables::schur_in_power,
        Basis::Homog => tables::h_monomial_in_power,
        Basis::Elem => tables::e_monomial_in_power,
    };
    let mut out = Terms::new();
    for (k, c) in &f.terms {
        add_scaled(&mut out, &expand(k), c);
    }
    out
}

fn from_power_terms(terms: &Terms, target: Basis) -> Terms {
    let expand: fn(&Partition) -> std::sync::Arc<Terms> = match target {
        Basis::Power => return terms.clone(),
        Basis::Schur => tables::power_in_schur,
        Basis::Homog => tables::p_monomial_in_h,
        Basis::Elem => tables::p_monomial_in_e,
    };
    let mut out = Terms::new();
    for (k, c) in terms {
        add_scaled(&mut out, &expand(k), c);
    }
    out
}

/// Re-expresses `f` in `target`.
pub fn convert(f: &LambdaElement, target: Basis) -> LambdaElement {
    if f.basis == target {
        return f.clone();
    }
    LambdaElement::from_raw(target, from_power_terms(&to_power_terms(f), target))
}

/// Ring product, in `f`'s basis.
pub fn multiply(f: &LambdaElement, g: &LambdaElement) -> LambdaElement {
    match f.basis {
        Basis::Schur => {
            let prod = concat_mul(&to_power_terms(f), &to_power_terms(g));
            LambdaElement::from_raw(Basis::Schur, from_power_terms(&prod, Basis::Schur))
        }
        b => LambdaElement::from_raw(b, concat_mul(&f.terms, &g.to_basis(b).terms)),
    }
}

/// The Hall inner product, `⟨p_λ, p_μ⟩ = z_λ δ_{λμ}`.
pub fn hall_inner(f: &LambdaElement, g: &LambdaElement) -> BigRational {
    if f.basis == Basis::Schur && g.basis == Basis::Schur {
        return f
            .terms
            .iter()
            .filter_map(|(k, c)| g.terms.get(k).map(|d| c * d))
            .sum();
    }
    let fp = to_power_terms(f);
    let gp = to_power_terms(g);
    fp.iter()
        .filter_map(|(k, c)| gp.get(k).map(|d| c * d * BigRational::from_integer(k.z())))
        .sum()
}

/// `p_ρ^⊥` applied to power-sum terms, where `p_r^⊥ = weight(r) ∂/∂p_r`.
pub(crate) fn power_perp_monomial(
    rho: &Partition,
    g: &Terms,
    weight: &dyn Fn(u32) -> BigRational,
) -> Terms {
    let mut cur = g.clone();
    for &r in rho.parts() {
        let w = weight(r);
        let mut next = Terms::new();
        for (nu, c) in &cur {
            let mult = nu.multiplicity(r);
            if mult == 0 {
                continue;
            }
            let lowered = nu.without_part(r).unwrap();
            add_to(&mut next, lowered, c * &w * rat(mult as i64));
        }
        cur = next;
        if cur.is_empty() {
            break;
        }
    }
    cur
}

pub(crate) fn power_perp(f: &Terms, g: &Terms, weight: &dyn Fn(u32) -> BigRational) -> Terms {
    let mut out = Terms::new();
    let gmax = g.keys().map(Partition::size).max().unwrap_or(0);
    for (rho, c) in f {
        if rho.size() > gmax {
            continue;
        }
        add_scaled(&mut out, &power_perp_monomial(rho, g, weight), c);
    }
    out
}

fn hall_weight(r: u32) -> BigRational {
    rat(r as i64)
}

/// `f^⊥ g`, the adjoint of multiplication by `f`; result in `g`'s basis.
pub fn perp(f: &LambdaElement, g: &LambdaElement) -> LambdaElement {
    let out = power_perp(&to_power_terms(f), &to_power_terms(g), &hall_weight);
    LambdaElement::from_raw(g.basis, from_power_terms(&out, g.basis))
}

/// `f ∘ p_m`: each `p_r` becomes `p_{rm}`. The result is in the power basis.
pub fn plethysm_pm(f: &LambdaElement, m: i64) -> Result<LambdaElement> {
    if m <= 0 {
        return Err(Error::invalid(format!(
            "plethysm with p_m needs m >= 1, got {m}"
        )));
    }
    Ok(LambdaElement::from_raw(
        Basis::Power,
        pleth_terms(&to_power_terms(f), m as u32),
    ))
}

pub(crate) fn pleth_terms(terms: &Terms, m: u32) -> Terms {
    terms
        .iter()
        .map(|(k, c)| (k.scaled(m), c.clone()))
        .collect()
}

/// `B_n = Σ_{i≥0} (-1)^i h_{n+i} e_i^⊥`; the result is in the Schur basis.
pub fn bernstein(n: i64, f: &LambdaElement) -> LambdaElement {
    let s = f.to_basis(Basis::Schur);
    LambdaElement::from_raw(Basis::Schur, bernstein_terms(n, &s.terms))
}

fn bernstein_terms(n: i64, schur: &Terms) -> Terms {
    let mut out = Terms::new();
    for (nu, c) in schur {
        add_scaled(&mut out, &pieri::bernstein_schur(n, nu), c);
    }
    out
}

/// `Σ B_{a_{m-1}} ⋯ B_{a_0}` over `a_j ≡ 0 (mod m)` with `Σ a_j = -km`.
/// The result is in the Schur basis.
pub fn phi_creation(m: i64, k: i64, f: &LambdaElement) -> Result<LambdaElement> {
    if m <= 0 {
        return Err(Error::invalid(format!("phi needs m >= 1, got {m}")));
    }
    let s = f.to_basis(Basis::Schur);
    let mut out = Terms::new();
    for (nu, c) in &s.terms {
        let mut start = Terms::new();
        start.insert(nu.clone(), c.clone());
        // B_a kills s_κ when a < -ℓ(κ), and each step adds at most one row.
        let lows: Vec<i64> = (0..m)
            .map(|j| {
                let bound = -(nu.len() as i64 + j);
                bound.div_euclid(m) * m + if bound.rem_euclid(m) == 0 { 0 } else { m }
            })
            .collect();
        let mut suffix_low = vec![0i64; m as usize + 1];
        for j in (0..m as usize).rev() {
            suffix_low[j] = suffix_low[j + 1] + lows[j];
        }
        creation_search(m, -k * m, 0, 0, &start, &lows, &suffix_low, &mut out);
    }
    Ok(LambdaElement::from_raw(Basis::Schur, out))
}

#[allow(clippy::too_many_arguments)]
fn creation_search(
    m: i64,
    target: i64,
    j: usize,
    sum: i64,
    cur: &Terms,
    lows: &[i64],
    suffix_low: &[i64],
    out: &mut Terms,
) {
    if j == lows.len() {
        if sum == target {
            add_scaled(out, cur, &BigRational::one());
        }
        return;
    }
    let max = target - sum - suffix_low[j + 1];
    let mut a = lows[j];
    while a <= max {
        let next = bernstein_terms(a, cur);
        if !next.is_empty() {
            creation_search(m, target, j + 1, sum + a, &next, lows, suffix_low, out);
        }
        a += m;
    }
}

/// `Σ_{i≥0} (-1)^i (h_{n+i} ∘ p_m)(e_i ∘ p_m)^⊥ f`, which equals `φ_{-n}^{(m)}`.
/// The result is in `f`'s basis.
pub fn phi_plethystic(m: i64, n: i64, f: &LambdaElement) -> Result<LambdaElement> {
    if m <= 0 {
        return Err(Error::invalid(format!("phi needs m >= 1, got {m}")));
    }
    let out = phi_plethystic_terms(m as u32, n, &to_power_terms(f));
    Ok(LambdaElement::from_raw(
        f.basis,
        from_power_terms(&out, f.basis),
    ))
}

pub(crate) fn phi_plethystic_terms(m: u32, n: i64, fp: &Terms) -> Terms {
    let deg = fp.keys().map(Partition::size).max().unwrap_or(0);
    let mut out = Terms::new();
    for i in 0..=(deg / m) {
        let j = n + i as i64;
        if j < 0 {
            continue;
        }
        let e_i = pleth_terms(&tables::e_in_power(i), m);
        let lowered = power_perp(&e_i, fp, &hall_weight);
        if lowered.is_empty() {
            continue;
        }
        let h_j = pleth_terms(&tables::h_in_power(j as u32), m);
        let sign = if i % 2 == 0 { rat(1) } else { rat(-1) };
        add_scaled(&mut out, &concat_mul(&h_j, &lowered), &sign);
    }
    out
}
