//! The subring Γ ⊗ ℚ = ℚ[p_1, p_3, p_5, …], Schur Q-functions, the creation
//! operators 𝓑_n and the operators Φ_n^(m).

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lambda::tables::{self, add_scaled, add_to, concat_mul, Memo, Terms};
use crate::lambda::{pleth_terms, power_perp};
use crate::partition::{strict_partitions, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GammaBasis {
    /// Monomials in the odd power sums.
    PowerOdd,
    /// Schur Q-functions `Q_λ`, λ strict.
    QFun,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaElement {
    basis: GammaBasis,
    terms: Terms,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn pow2(e: usize) -> BigRational {
    BigRational::from_integer(BigInt::one() << e)
}

fn label_ok(basis: GammaBasis, lambda: &Partition) -> bool {
    match basis {
        GammaBasis::PowerOdd => lambda.is_all_odd(),
        GammaBasis::QFun => lambda.is_strict(),
    }
}

impl GammaElement {
    pub fn zero(basis: GammaBasis) -> Self {
        GammaElement {
            basis,
            terms: Terms::new(),
        }
    }

    pub fn one(basis: GammaBasis) -> Self {
        let mut terms = Terms::new();
        terms.insert(Partition::empty(), BigRational::one());
        GammaElement { basis, terms }
    }

    /// Builds an element, rejecting labels that are not all-odd (power basis)
    /// or not strict (Q basis).
    pub fn from_terms(
        basis: GammaBasis,
        terms: impl IntoIterator<Item = (Partition, BigRational)>,
    ) -> Result<Self> {
        let mut out = Self::zero(basis);
        for (k, c) in terms {
            if !label_ok(basis, &k) {
                return Err(Error::invalid(format!(
                    "{k} is not a valid {basis:?} label"
                )));
            }
            add_to(&mut out.terms, k, c);
        }
        Ok(out)
    }

    fn from_raw(basis: GammaBasis, terms: Terms) -> Self {
        debug_assert!(terms.keys().all(|k| label_ok(basis, k)));
        GammaElement { basis, terms }
    }

    /// `Q_λ` for strict λ.
    pub fn q(lambda: &Partition) -> Result<Self> {
        Self::from_terms(GammaBasis::QFun, [(lambda.clone(), BigRational::one())])
    }

    /// `p_μ` for all-odd μ.
    pub fn p_mu(mu: &Partition) -> Result<Self> {
        Self::from_terms(GammaBasis::PowerOdd, [(mu.clone(), BigRational::one())])
    }

    pub fn basis(&self) -> GammaBasis {
        self.basis
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigRational {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&Partition::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Partition::size).max()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut terms = Terms::new();
        add_scaled(&mut terms, &self.terms, c);
        Self::from_raw(self.basis, terms)
    }

    pub fn add(&self, other: &Self) -> Self {
        let other = other.to_basis(self.basis);
        let mut terms = self.terms.clone();
        add_scaled(&mut terms, &other.terms, &BigRational::one());
        Self::from_raw(self.basis, terms)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn to_basis(&self, target: GammaBasis) -> Self {
        if self.basis == target {
            return self.clone();
        }
        match target {
            GammaBasis::PowerOdd => Self::from_raw(target, to_power_odd(self)),
            GammaBasis::QFun => Self::from_raw(target, power_odd_to_q(&self.terms)),
        }
    }

    /// Product, in `self`'s basis.
    pub fn multiply(&self, other: &Self) -> Self {
        let prod = concat_mul(&to_power_odd(self), &to_power_odd(other));
        Self::from_raw(GammaBasis::PowerOdd, prod).to_basis(self.basis)
    }

    /// Largest power of two dividing any denominator is the only prime
    /// allowed; returns false if some other prime shows up.
    pub fn has_dyadic_coefficients(&self) -> bool {
        self.terms.values().all(|c| {
            let mut d = c.denom().clone();
            while (&d % 2u32).is_zero() {
                d /= 2u32;
            }
            d.is_one()
        })
    }
}

impl fmt::Display for GammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let sym = match self.basis {
            GammaBasis::PowerOdd => "p",
            GammaBasis::QFun => "Q",
        };
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            match (k.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{sign}{mag}")?,
                (false, true) => write!(f, "{sign}{sym}({k})")?,
                (false, false) => write!(f, "{sign}{mag}*{sym}({k})")?,
            }
        }
        Ok(())
    }
}

fn to_power_odd(f: &GammaElement) -> Terms {
    match f.basis {
        GammaBasis::PowerOdd => f.terms.clone(),
        GammaBasis::QFun => {
            let mut out = Terms::new();
            for (k, c) in &f.terms {
                add_scaled(&mut out, &q_function_power(k), c);
            }
            out
        }
    }
}

fn power_odd_to_q(terms: &Terms) -> Terms {
    let mut degrees: Vec<u32> = terms.keys().map(Partition::size).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut out = Terms::new();
    for d in degrees {
        for lambda in strict_partitions(d) {
            let c = inner_terms(terms, &q_function_power(&lambda)) / pow2(lambda.len());
            add_to(&mut out, lambda, c);
        }
    }
    out
}

fn gamma_weight(r: u32) -> BigRational {
    BigRational::new(BigInt::from(r), BigInt::from(2))
}

fn inner_terms(f: &Terms, g: &Terms) -> BigRational {
    f.iter()
        .filter_map(|(k, c)| {
            g.get(k)
                .map(|d| c * d * BigRational::from_integer(k.z()) / pow2(k.len()))
        })
        .sum()
}

/// `q_n = Σ_i h_{n-i} e_i` in odd power sums; zero for negative `n`.
pub(crate) fn q_power(n: i64) -> Arc<Terms> {
    static MEMO: Memo<i64, Terms> = Memo::new();
    MEMO.get_or_compute(&n, || {
        let mut out = Terms::new();
        if n < 0 {
            return out;
        }
        let n = n as u32;
        for i in 0..=n {
            let prod = concat_mul(&tables::h_in_power(n - i), &tables::e_in_power(i));
            add_scaled(&mut out, &prod, &BigRational::one());
        }
        assert!(
            out.keys().all(Partition::is_all_odd),
            "q_{n} has an even power sum in its expansion"
        );
        out
    })
}

/// `q_n` as an element of Γ.
pub fn q_gen(n: i64) -> GammaElement {
    GammaElement::from_raw(GammaBasis::PowerOdd, (*q_power(n)).clone())
}

fn creation_terms(n: i64, g: &Terms) -> Terms {
    let deg = g.keys().map(Partition::size).max();
    let mut out = Terms::new();
    let Some(deg) = deg else { return out };
    for i in 0..=deg as i64 {
        if n + i < 0 {
            continue;
        }
        let lowered = power_perp(&q_power(i), g, &gamma_weight);
        if lowered.is_empty() {
            continue;
        }
        let sign = if i % 2 == 0 { rat(1) } else { rat(-1) };
        add_scaled(&mut out, &concat_mul(&q_power(n + i), &lowered), &sign);
    }
    out
}

/// `𝓑_n = Σ_{i≥0} (-1)^i q_{n+i} q_i^⊥`; the result is in `f`'s basis.
pub fn creation_calb(n: i64, f: &GammaElement) -> GammaElement {
    let out = creation_terms(n, &to_power_odd(f));
    GammaElement::from_raw(GammaBasis::PowerOdd, out).to_basis(f.basis)
}

/// `Q_λ = 𝓑_{λ_1} ⋯ 𝓑_{λ_l}(1)` in odd power sums.
fn q_function_power(lambda: &Partition) -> Arc<Terms> {
    static MEMO: Memo<Partition, Terms> = Memo::new();
    MEMO.get_or_compute(lambda, || {
        let Some((&first, rest)) = lambda.parts().split_first() else {
            let mut t = Terms::new();
            t.insert(Partition::empty(), BigRational::one());
            return t;
        };
        let inner = q_function_power(&Partition::new(rest.to_vec()).unwrap());
        creation_terms(first as i64, &inner)
    })
}

/// `𝓑_{α_1} ⋯ 𝓑_{α_r}(1)` by direct operator application, in odd power sums.
pub fn q_sequence_by_operators(alpha: &[i64]) -> GammaElement {
    let mut cur = GammaElement::one(GammaBasis::PowerOdd);
    for &a in alpha.iter().rev() {
        cur = creation_calb(a, &cur);
        if cur.is_zero() {
            break;
        }
    }
    cur
}

/// Writes `Q_α` as `c · Q_λ` with λ strict using the reordering rules, or
/// returns `None` when `Q_α = 0`.
pub fn reorder(alpha: &[i64]) -> Option<(BigInt, Partition)> {
    use std::collections::BTreeMap;
    let mut by_abs: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    let mut zeros = Vec::new();
    for (pos, &a) in alpha.iter().enumerate() {
        if a == 0 {
            zeros.push(pos);
        } else {
            by_abs.entry(a.unsigned_abs()).or_default().push(pos);
        }
    }
    let mut head: Vec<(u64, usize)> = Vec::new();
    let mut pairs: Vec<usize> = Vec::new();
    let mut pair_sum: u64 = 0;
    for (&i, positions) in &by_abs {
        let signs: Vec<bool> = positions.iter().map(|&p| alpha[p] > 0).collect();
        let alternates = signs.windows(2).all(|w| w[0] != w[1]);
        if !alternates || !*signs.last().unwrap() {
            return None;
        }
        let rest = if signs.len() % 2 == 1 {
            head.push((i, positions[0]));
            &positions[1..]
        } else {
            &positions[..]
        };
        pair_sum += i * (rest.len() as u64 / 2);
        pairs.extend_from_slice(rest);
    }
    let r = pairs.len() / 2;
    head.sort_unstable_by_key(|&(i, _)| std::cmp::Reverse(i));
    let order: Vec<usize> = head
        .iter()
        .map(|&(_, p)| p)
        .chain(pairs.iter().copied())
        .chain(zeros.iter().copied())
        .collect();
    let inversions = order
        .iter()
        .enumerate()
        .map(|(k, &x)| order[k + 1..].iter().filter(|&&y| y < x).count())
        .sum::<usize>();
    let negative = (inversions + pair_sum as usize) % 2 == 1;
    let mut coeff = BigInt::one() << r;
    if negative {
        coeff = -coeff;
    }
    let lambda = Partition::new(head.iter().map(|&(i, _)| i as u32).collect()).unwrap();
    Some((coeff, lambda))
}

/// `Q_α` as an element of the Q basis, via [`reorder`].
pub fn q_sequence(alpha: &[i64]) -> GammaElement {
    match reorder(alpha) {
        None => GammaElement::zero(GammaBasis::QFun),
        Some((c, lambda)) => GammaElement::from_raw(
            GammaBasis::QFun,
            [(lambda, BigRational::from_integer(c))].into(),
        ),
    }
}

/// The pairing with `⟨p_λ, p_μ⟩ = 2^{-ℓ(λ)} z_λ δ_{λμ}`, so that
/// `⟨Q_λ, Q_μ⟩ = 2^{ℓ(λ)} δ_{λμ}`.
pub fn gamma_inner(f: &GammaElement, g: &GammaElement) -> BigRational {
    if f.basis == GammaBasis::QFun && g.basis == GammaBasis::QFun {
        return f
            .terms
            .iter()
            .filter_map(|(k, c)| g.terms.get(k).map(|d| c * d * pow2(k.len())))
            .sum();
    }
    inner_terms(&to_power_odd(f), &to_power_odd(g))
}

/// `f^⊥ g` for the Γ pairing (`p_r^⊥ = (r/2) ∂/∂p_r`); result in `g`'s basis.
pub fn perp_gamma(f: &GammaElement, g: &GammaElement) -> GammaElement {
    let out = power_perp(&to_power_odd(f), &to_power_odd(g), &gamma_weight);
    GammaElement::from_raw(GammaBasis::PowerOdd, out).to_basis(g.basis)
}

/// `ψ̃` extended linearly: the constant term of `p_{μ_1}^⊥ ⋯ p_{μ_l}^⊥ f`.
pub fn psi_tilde_of(f: &GammaElement, mu: &Partition) -> Result<BigRational> {
    if !mu.is_all_odd() {
        return Err(Error::invalid(format!("{mu} is not all-odd")));
    }
    if let Some(k) = f.terms.keys().find(|k| k.size() != mu.size()) {
        return Err(Error::SizeMismatch(format!(
            "label {k} has size {} but {mu} has size {}",
            k.size(),
            mu.size()
        )));
    }
    let mut single = Terms::new();
    single.insert(mu.clone(), BigRational::one());
    let out = power_perp(&single, &to_power_odd(f), &gamma_weight);
    Ok(out
        .get(&Partition::empty())
        .cloned()
        .unwrap_or_else(BigRational::zero))
}

/// `ψ̃_λ(μ)` for strict λ and all-odd μ.
pub fn psi_tilde(lambda: &Partition, mu: &Partition) -> Result<BigRational> {
    psi_tilde_of(&GammaElement::q(lambda)?, mu)
}

fn require_odd(m: i64) -> Result<()> {
    if m < 1 || m % 2 == 0 {
        return Err(Error::invalid(format!(
            "m must be odd and positive, got {m}"
        )));
    }
    Ok(())
}

/// `Φ_n^{(m)} = Σ_{i≥0} (-1)^i (q_{n+i} ∘ p_m)(q_i ∘ p_m)^⊥`; result in `f`'s basis.
pub fn phi_plethystic_gamma(m: i64, n: i64, f: &GammaElement) -> Result<GammaElement> {
    require_odd(m)?;
    let mu = m as u32;
    let fp = to_power_odd(f);
    let deg = fp.keys().map(Partition::size).max().unwrap_or(0);
    let mut out = Terms::new();
    for i in 0..=(deg / mu) as i64 {
        if n + i < 0 {
            continue;
        }
        let lowered = power_perp(&pleth_terms(&q_power(i), mu), &fp, &gamma_weight);
        if lowered.is_empty() {
            continue;
        }
        let raised = concat_mul(&pleth_terms(&q_power(n + i), mu), &lowered);
        let sign = if i % 2 == 0 { rat(1) } else { rat(-1) };
        add_scaled(&mut out, &raised, &sign);
    }
    Ok(GammaElement::from_raw(GammaBasis::PowerOdd, out).to_basis(f.basis))
}

/// The signed sequences `ε_α · α` summed in `Φ(λ)`, keeping only those
/// whose concatenation with λ is nonzero. Entries are searched in
/// `[-(|λ|+m), |λ|+m]`.
pub fn corollary_sequences(lambda: &Partition, m: i64) -> Result<Vec<(i64, Vec<i64>)>> {
    require_odd(m)?;
    if !lambda.is_strict() {
        return Err(Error::invalid(format!("{lambda} is not strict")));
    }
    let bound = lambda.size() as i64 + m;
    let r = (m - 1) / 2;
    let tail: Vec<i64> = lambda.parts().iter().map(|&x| x as i64).collect();
    let in_class = |res: i64| -> Vec<i64> {
        (-bound..=bound)
            .filter(|a| (a - res).rem_euclid(m) == 0)
            .collect()
    };
    let mut out = Vec::new();
    // Every decreasing choice of c's is a subset of 1..=r.
    for mask in 0u32..(1 << r) {
        let cs: Vec<i64> = (1..=r)
            .rev()
            .filter(|c| mask & (1 << (c - 1)) != 0)
            .collect();
        let mut seqs: Vec<(i64, Vec<i64>)> = vec![(1, Vec::new())];
        for &c in &cs {
            let mut next = Vec::new();
            for (sign, seq) in &seqs {
                for (hi_res, flip) in [(2 * c, -1), (-2 * c, 1)] {
                    for &x in &in_class(hi_res) {
                        for &y in &in_class(-hi_res) {
                            if x > y {
                                let mut s = seq.clone();
                                s.push(x);
                                s.push(y);
                                next.push((sign * flip, s));
                            }
                        }
                    }
                }
            }
            seqs = next;
        }
        for (sign, seq) in seqs {
            let last = -m - seq.iter().sum::<i64>();
            if last.rem_euclid(m) != 0 || last.abs() > bound {
                continue;
            }
            let mut alpha = seq;
            alpha.push(last);
            let mut full = alpha.clone();
            full.extend_from_slice(&tail);
            if reorder(&full).is_some() {
                out.push((sign, alpha));
            }
        }
    }
    Ok(out)
}

/// `Φ(λ)` of the relation for projective characters, in the Q basis.
pub fn phi_corollary(lambda: &Partition, m: i64) -> Result<GammaElement> {
    let tail: Vec<i64> = lambda.parts().iter().map(|&x| x as i64).collect();
    let mut out = Terms::new();
    for (sign, alpha) in corollary_sequences(lambda, m)? {
        let mut full = alpha;
        full.extend_from_slice(&tail);
        if let Some((c, kappa)) = reorder(&full) {
            add_to(&mut out, kappa, BigRational::from_integer(c * sign));
        }
    }
    Ok(GammaElement::from_raw(GammaBasis::QFun, out))
}

/// Both sides of `ψ̃_λ(μ ∪ (m)) = ψ̃_{-½Φ(λ)}(μ)`.
pub fn corollary_check(
    lambda: &Partition,
    m: i64,
    mu: &Partition,
) -> Result<crate::fock::RelationCheck<BigRational>> {
    require_odd(m)?;
    if !mu.is_all_odd() || !mu.has_no_part_divisible_by(m as u32) {
        return Err(Error::invalid(format!(
            "{mu} must be all-odd with no part divisible by {m}"
        )));
    }
    if lambda.size() as i64 != mu.size() as i64 + m {
        return Err(Error::SizeMismatch(format!(
            "|λ| = {} but |μ| + m = {}",
            lambda.size(),
            mu.size() as i64 + m
        )));
    }
    let lhs = psi_tilde(lambda, &mu.with_part(m as u32))?;
    let half = phi_corollary(lambda, m)?.scale(&BigRational::new((-1).into(), 2.into()));
    let rhs = psi_tilde_of(&half, mu)?;
    Ok(crate::fock::RelationCheck { lhs, rhs })
}

/// Coefficient of `u^d` in `∏_{l=1}^{(m-1)/2} (1 + Σ 𝓑_{i,j} u^{i+j}) · Σ_k 𝓑_k u^k`
/// applied to `f`, where `k ≡ 0`, `i ≡ -2l` and `j ≡ 2l (mod m)`. For `d = nm` this is
/// `Φ_n^{(m)} f`. The result is in `f`'s basis.
pub fn projthm_rhs_coeff(m: i64, d: i64, f: &GammaElement) -> Result<GammaElement> {
    require_odd(m)?;
    if d.rem_euclid(m) != 0 || f.is_zero() {
        return Ok(GammaElement::zero(f.basis));
    }
    let fp = to_power_odd(f);
    let deg = fp.keys().map(Partition::size).max().unwrap() as i64;
    let out_deg = deg + d;
    if out_deg < 0 {
        return Ok(GammaElement::zero(f.basis));
    }
    // Entries of a word with nonzero image lie in [-deg f, deg f + d].
    let (lo, hi) = (-deg, out_deg);
    let r = (m - 1) / 2;
    let class =
        |res: i64| -> Vec<i64> { (lo..=hi).filter(|a| (a - res).rem_euclid(m) == 0).collect() };

    let mut out = Terms::new();
    for k in class(0) {
        let start = creation_terms(k, &fp);
        if start.is_empty() {
            continue;
        }
        pair_factors(r, m, d - k, &start, &class, lo, hi, &mut out);
    }
    Ok(GammaElement::from_raw(GammaBasis::PowerOdd, out).to_basis(f.basis))
}

/// Applies factors `l, l-1, …, 1`, each either 1 or some `𝓑_{i,j}`.
#[allow(clippy::too_many_arguments)]
fn pair_factors(
    l: i64,
    m: i64,
    remaining: i64,
    cur: &Terms,
    class: &dyn Fn(i64) -> Vec<i64>,
    lo: i64,
    hi: i64,
    out: &mut Terms,
) {
    if l == 0 {
        if remaining == 0 {
            add_scaled(out, cur, &BigRational::one());
        }
        return;
    }
    if remaining < 2 * lo * l || remaining > 2 * hi * l {
        return;
    }
    pair_factors(l - 1, m, remaining, cur, class, lo, hi, out);
    for i in class(-2 * l) {
        let j = remaining_pair_partner(i, l, m, remaining, lo, hi);
        for j in j {
            if i == j {
                continue;
            }
            // 𝓑_{i,j} = 𝓑_i 𝓑_j for i > j and -𝓑_j 𝓑_i for i < j.
            let (first, second, sign) = if i > j { (j, i, 1) } else { (i, j, -1) };
            let step = creation_terms(first, cur);
            if step.is_empty() {
                continue;
            }
            let mut step = creation_terms(second, &step);
            if step.is_empty() {
                continue;
            }
            if sign < 0 {
                for c in step.values_mut() {
                    *c = -c.clone();
                }
            }
            pair_factors(l - 1, m, remaining - i - j, &step, class, lo, hi, out);
        }
    }
}

fn remaining_pair_partner(i: i64, l: i64, m: i64, remaining: i64, lo: i64, hi: i64) -> Vec<i64> {
    // The factors still to come contribute between 2·lo·(l-1) and 2·hi·(l-1).
    let rest_lo = 2 * lo * (l - 1);
    let rest_hi = 2 * hi * (l - 1);
    let j_min = (remaining - i - rest_hi).max(lo);
    let j_max = (remaining - i - rest_lo).min(hi);
    (j_min..=j_max)
        .filter(|j| (j - 2 * l).rem_euclid(m) == 0)
        .collect()
}

/// `Σ 𝓑_{a_1} 𝓑_{a_0}` over `a_0` even, `a_1` odd, `a_0 + a_1 = 1 - 2k`:
/// the analogue of `Φ` for `m = 2`.
pub fn even_m_control(k: i64, f: &GammaElement) -> GammaElement {
    let fp = to_power_odd(f);
    let Some(deg) = fp.keys().map(Partition::size).max() else {
        return GammaElement::zero(f.basis);
    };
    let deg = deg as i64;
    let total = 1 - 2 * k;
    let mut out = Terms::new();
    for a0 in (-deg..=deg + total.max(0)).filter(|a| a % 2 == 0) {
        let a1 = total - a0;
        let step = creation_terms(a0, &fp);
        if step.is_empty() {
            continue;
        }
        add_scaled(&mut out, &creation_terms(a1, &step), &BigRational::one());
    }
    GammaElement::from_raw(GammaBasis::PowerOdd, out).to_basis(f.basis)
}
