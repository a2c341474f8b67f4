//! The Fock space spanned by maya diagrams, the operators `A_r`, `b̃_r`,
//! `φ_k^(m)`, and character evaluation through them.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::maya::{normalize, ChargedMayaDiagram, MayaDiagram, SignedMaya};
use crate::partition::Partition;

/// A finite integer combination of (charged) maya diagrams, all of one charge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVector {
    charge: i64,
    terms: BTreeMap<ChargedMayaDiagram, BigInt>,
}

impl FockVector {
    pub fn zero(charge: i64) -> Self {
        FockVector {
            charge,
            terms: BTreeMap::new(),
        }
    }

    pub fn vacuum() -> Self {
        Self::from_diagram(&MayaDiagram::vacuum())
    }

    pub fn from_diagram(d: &MayaDiagram) -> Self {
        Self::from_charged(&d.charged())
    }

    pub fn from_partition(p: &Partition) -> Self {
        Self::from_diagram(&MayaDiagram::from_partition(p))
    }

    pub fn from_charged(d: &ChargedMayaDiagram) -> Self {
        let mut v = Self::zero(d.charge());
        v.terms.insert(d.clone(), BigInt::one());
        v
    }

    /// Integer combination of partitions (charge zero).
    pub fn from_partitions<'a>(terms: impl IntoIterator<Item = (&'a Partition, BigInt)>) -> Self {
        let mut v = Self::zero(0);
        for (p, c) in terms {
            v.add_term(MayaDiagram::from_partition(p).charged(), c);
        }
        v
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ChargedMayaDiagram, &BigInt)> {
        self.terms.iter()
    }

    /// Terms as partitions; `None` unless the charge is zero.
    pub fn partition_terms(&self) -> Option<Vec<(Partition, BigInt)>> {
        (self.charge == 0).then(|| {
            self.terms
                .iter()
                .map(|(d, c)| (d.to_maya().unwrap().to_partition(), c.clone()))
                .collect()
        })
    }

    pub fn coefficient(&self, d: &ChargedMayaDiagram) -> BigInt {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    /// Coefficient of the charge-zero vacuum.
    pub fn vacuum_coefficient(&self) -> BigInt {
        if self.charge != 0 {
            return BigInt::zero();
        }
        self.coefficient(&ChargedMayaDiagram::vacuum(0))
    }

    /// Common size of all support diagrams, if homogeneous and nonzero.
    pub fn degree(&self) -> Option<u64> {
        let mut sizes = self.terms.keys().map(ChargedMayaDiagram::size);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    fn add_term(&mut self, d: ChargedMayaDiagram, c: BigInt) {
        debug_assert_eq!(d.charge(), self.charge);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_signed(&mut self, s: SignedMaya<ChargedMayaDiagram>, c: &BigInt) {
        if let SignedMaya::Term { sign, diagram } = s {
            let c = if sign < 0 { -c } else { c.clone() };
            self.add_term(diagram, c);
        }
    }

    /// `self + scale * other`; vectors of different charges cannot be mixed.
    pub fn try_add_scaled(&self, other: &FockVector, scale: &BigInt) -> Result<FockVector> {
        if self.charge != other.charge {
            return Err(Error::ChargeMismatch {
                left: self.charge,
                right: other.charge,
            });
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c * scale);
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &FockVector) -> Result<FockVector> {
        self.try_add_scaled(other, &BigInt::one())
    }

    pub fn try_sub(&self, other: &FockVector) -> Result<FockVector> {
        self.try_add_scaled(other, &-BigInt::one())
    }

    pub fn scale(&self, c: &BigInt) -> FockVector {
        let mut out = FockVector::zero(self.charge);
        for (d, v) in &self.terms {
            out.add_term(d.clone(), v * c);
        }
        out
    }

    fn map_basis(
        &self,
        out_charge: i64,
        f: impl Fn(&ChargedMayaDiagram, &BigInt, &mut FockVector),
    ) -> FockVector {
        let mut out = FockVector::zero(out_charge);
        for (d, c) in &self.terms {
            f(d, c, &mut out);
        }
        out
    }

    fn require_uncharged(&self, what: &str) -> Result<()> {
        if self.charge != 0 {
            return Err(Error::invalid(format!(
                "{what} is defined on charge-0 vectors, got charge {}",
                self.charge
            )));
        }
        Ok(())
    }
}

impl std::ops::Add for &FockVector {
    type Output = FockVector;

    /// Panics on a charge mismatch; use [`FockVector::try_add`] to handle it.
    fn add(self, rhs: &FockVector) -> FockVector {
        self.try_add(rhs)
            .expect("adding Fock vectors of different charge")
    }
}

impl std::ops::Sub for &FockVector {
    type Output = FockVector;

    fn sub(self, rhs: &FockVector) -> FockVector {
        self.try_sub(rhs)
            .expect("subtracting Fock vectors of different charge")
    }
}

impl std::ops::Neg for &FockVector {
    type Output = FockVector;

    fn neg(self) -> FockVector {
        self.scale(&-BigInt::one())
    }
}

impl fmt::Display for FockVector {
    /// Charge-zero vectors print as signed partitions in lexicographic order,
    /// e.g. `+(2,1,1,1,1) -(2,2,1,1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut labelled: Vec<(Option<Partition>, String, &BigInt)> = self
            .terms
            .iter()
            .map(|(d, c)| match d.to_maya() {
                Some(m) => {
                    let lam = m.to_partition();
                    let label = if lam.is_empty() {
                        "∅".to_string()
                    } else {
                        format!("({lam})")
                    };
                    (Some(lam), label, c)
                }
                None => (None, d.to_string(), c),
            })
            .collect();
        labelled.sort_by(|a, b| a.0.cmp(&b.0));
        for (i, (_, label, c)) in labelled.into_iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{sign}{label}")?;
            } else {
                write!(f, "{sign}{mag}{label}")?;
            }
        }
        Ok(())
    }
}

/// `A_r`: replace one entry `x_i` by `x_i - r`, summed over positions.
pub fn apply_a(r: i64, v: &FockVector) -> Result<FockVector> {
    if r <= 0 {
        return Err(Error::invalid(format!("A_r needs r >= 1, got {r}")));
    }
    Ok(v.map_basis(v.charge, |d, c, out| {
        // Lowering a tail entry always collides with a later tail entry.
        let mut head = d.prefix().to_vec();
        for i in 0..head.len() {
            head[i] -= r;
            out.add_signed(normalize(&head, d.charge()), c);
            head[i] += r;
        }
    }))
}

/// `b̃_r`: prepend `r` to every diagram. Raises the charge by one.
pub fn prepend(r: i64, v: &FockVector) -> FockVector {
    v.map_basis(v.charge + 1, |d, c, out| out.add_signed(d.prepend(r), c))
}

/// Subtract `m` from every entry. Lowers the charge by `m`.
pub fn shift(m: i64, v: &FockVector) -> FockVector {
    v.map_basis(v.charge - m, |d, c, out| {
        out.add_term(d.shift(m), c.clone())
    })
}

/// Admissible tuples `(a_0, …, a_{m-1})` for a single diagram: `a_j ≡ j (mod m)`,
/// each `a_j` absent from the diagram, `Σ a_j = m(m-1)/2 - km`.
pub(crate) fn phi_tuples(d: &ChargedMayaDiagram, m: i64, k: i64) -> Vec<Vec<i64>> {
    let low = d.complement().min();
    let absent = |a: i64| a >= low && !d.prefix().contains(&a);
    let target = m * (m - 1) / 2 - k * m;
    // Smallest admissible value in each residue class.
    let lows: Vec<i64> = (0..m)
        .map(|j| {
            let mut a = low + (j - low).rem_euclid(m);
            while !absent(a) {
                a += m;
            }
            a
        })
        .collect();
    let mut suffix_low = vec![0i64; m as usize + 1];
    for j in (0..m as usize).rev() {
        suffix_low[j] = suffix_low[j + 1] + lows[j];
    }

    struct Search<'a> {
        m: i64,
        target: i64,
        lows: &'a [i64],
        suffix_low: &'a [i64],
        absent: &'a dyn Fn(i64) -> bool,
        current: Vec<i64>,
        out: Vec<Vec<i64>>,
    }

    impl Search<'_> {
        fn run(&mut self, j: usize, sum: i64) {
            if j as i64 == self.m {
                if sum == self.target {
                    self.out.push(self.current.clone());
                }
                return;
            }
            let max = self.target - sum - self.suffix_low[j + 1];
            let mut a = self.lows[j];
            while a <= max {
                if (self.absent)(a) {
                    self.current.push(a);
                    self.run(j + 1, sum + a);
                    self.current.pop();
                }
                a += self.m;
            }
        }
    }

    let mut search = Search {
        m,
        target,
        lows: &lows,
        suffix_low: &suffix_low,
        absent: &absent,
        current: Vec::with_capacity(m as usize),
        out: Vec::new(),
    };
    search.run(0, 0);
    search.out
}

/// `φ_k^(m)`: sum of `b̃_{a_{m-1}} ⋯ b̃_{a_0}` over admissible tuples, then
/// shifted back to charge zero.
pub fn phi(m: i64, k: i64, v: &FockVector) -> Result<FockVector> {
    if m <= 0 {
        return Err(Error::invalid(format!("phi needs m >= 1, got {m}")));
    }
    v.require_uncharged("phi")?;
    Ok(v.map_basis(0, |d, c, out| {
        for tuple in phi_tuples(d, m, k) {
            let mut acc = FockVector::from_charged(d);
            for &a in &tuple {
                acc = prepend(a, &acc);
            }
            for (e, s) in shift(m, &acc).terms {
                out.add_term(e, s * c);
            }
        }
    }))
}

/// Coefficient of the vacuum in `A_{μ_1} ⋯ A_{μ_l} v`.
///
/// Every support diagram of `v` must have size `|μ|`.
pub fn character(v: &FockVector, mu: &Partition) -> Result<BigInt> {
    v.require_uncharged("character")?;
    let n = mu.size() as u64;
    if let Some((d, _)) = v.terms().find(|(d, _)| d.size() != n) {
        return Err(Error::SizeMismatch(format!(
            "diagram {d} has size {} but the cycle type {mu} has size {n}",
            d.size()
        )));
    }
    let mut acc = v.clone();
    // Largest part first.
    for &part in mu.parts() {
        if acc.is_zero() {
            break;
        }
        acc = apply_a(part as i64, &acc)?;
    }
    Ok(acc.vacuum_coefficient())
}

/// χ_λ(μ) for a partition λ.
pub fn character_of(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    character(&FockVector::from_partition(lambda), mu)
}

/// Both sides of a character relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck<T> {
    pub lhs: T,
    pub rhs: T,
}

impl<T: PartialEq> RelationCheck<T> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates `χ_λ(μ ∪ (m))` and `χ_{-φ_1^(m)(λ)}(μ)`.
pub fn mainthm_check(
    lambda: &MayaDiagram,
    m: i64,
    mu: &Partition,
) -> Result<RelationCheck<BigInt>> {
    if m <= 1 {
        return Err(Error::invalid(format!("the relation needs m > 1, got {m}")));
    }
    if !mu.has_no_part_divisible_by(m as u32) {
        return Err(Error::invalid(format!("{mu} has a part divisible by {m}")));
    }
    if lambda.size() != mu.size() as u64 + m as u64 {
        return Err(Error::SizeMismatch(format!(
            "|λ| = {} but |μ| + m = {}",
            lambda.size(),
            mu.size() as i64 + m
        )));
    }
    let v = FockVector::from_diagram(lambda);
    let lhs = character(&v, &mu.with_part(m as u32))?;
    let rhs = character(&-&phi(m, 1, &v)?, mu)?;
    Ok(RelationCheck { lhs, rhs })
}

/// Right-hand side of
/// `χ_λ(μ ∪ m^k) = -Σ_{i<k} (-m)^i C(k-1, i) χ_{φ_{i+1}(λ)}(μ ∪ m^{k-1-i})`,
/// recursing on the inner characters until no part `m` is left.
pub fn multim_expand(lambda: &MayaDiagram, m: i64, k: u32, mu: &Partition) -> Result<BigInt> {
    if m <= 1 {
        return Err(Error::invalid(format!(
            "the expansion needs m > 1, got {m}"
        )));
    }
    if k == 0 {
        return Err(Error::invalid("the expansion needs k >= 1"));
    }
    if !mu.has_no_part_divisible_by(m as u32) {
        return Err(Error::invalid(format!("{mu} has a part divisible by {m}")));
    }
    let needed = mu.size() as u64 + (k as u64) * (m as u64);
    if lambda.size() != needed {
        return Err(Error::SizeMismatch(format!(
            "|λ| = {} but |μ| + km = {needed}",
            lambda.size()
        )));
    }
    multim_vector(&FockVector::from_diagram(lambda), m, k, mu)
}

fn multim_vector(v: &FockVector, m: i64, k: u32, mu: &Partition) -> Result<BigInt> {
    if k == 0 {
        return character(v, mu);
    }
    let mut total = BigInt::zero();
    let neg_m = BigInt::from(-m);
    for i in 0..k {
        let image = phi(m, i as i64 + 1, v)?;
        if image.is_zero() {
            continue;
        }
        let coeff = neg_m.pow(i) * binomial(BigInt::from(k - 1), BigInt::from(i));
        total -= coeff * multim_vector(&image, m, k - 1 - i, mu)?;
    }
    Ok(total)
}

/// `Σ_w sgn(w) weight(w(λ+ρ) - ρ)` over permutations `w` of the entries of
/// `λ + ρ`, visiting only those whose every entry passes `admissible`.
fn alternating_sum(
    lambda: &Partition,
    admissible: impl Fn(i64) -> bool,
    weight: impl Fn(&[i64]) -> BigInt,
) -> BigInt {
    struct Search<'a> {
        shifted: Vec<i64>,
        used: Vec<bool>,
        alpha: Vec<i64>,
        admissible: &'a dyn Fn(i64) -> bool,
        weight: &'a dyn Fn(&[i64]) -> BigInt,
        total: BigInt,
    }

    impl Search<'_> {
        fn run(&mut self, pos: usize, inversions: usize) {
            let l = self.shifted.len();
            if pos == l {
                let w = (self.weight)(&self.alpha);
                if inversions.is_multiple_of(2) {
                    self.total += w;
                } else {
                    self.total -= w;
                }
                return;
            }
            let rho = (l - 1 - pos) as i64;
            for src in 0..l {
                if self.used[src] {
                    continue;
                }
                let a = self.shifted[src] - rho;
                if !(self.admissible)(a) {
                    continue;
                }
                let extra = self.used[src + 1..].iter().filter(|&&u| u).count();
                self.used[src] = true;
                self.alpha.push(a);
                self.run(pos + 1, inversions + extra);
                self.alpha.pop();
                self.used[src] = false;
            }
        }
    }

    let l = lambda.len();
    let mut search = Search {
        shifted: (0..l)
            .map(|i| lambda.part(i) as i64 + (l - 1 - i) as i64)
            .collect(),
        used: vec![false; l],
        alpha: Vec::with_capacity(l),
        admissible: &admissible,
        weight: &weight,
        total: BigInt::zero(),
    };
    search.run(0, 0);
    search.total
}

/// Degree of χ_λ from `Σ_w sgn(w) f(w(λ+ρ)-ρ)` with
/// `f(α) = ∏_i C(α_i + ⋯ + α_l - 1, α_i - 1)` (zero unless all `α_i > 0`).
pub fn degree_via_f(lambda: &Partition) -> BigInt {
    alternating_sum(
        lambda,
        |a| a > 0,
        |alpha| {
            let mut acc = BigInt::one();
            let mut suffix: i64 = 0;
            for &a in alpha.iter().rev() {
                suffix += a;
                acc *= binomial(BigInt::from(suffix - 1), BigInt::from(a - 1));
            }
            acc
        },
    )
}

/// Degree of χ_λ from `Σ_w sgn(w) g(w(λ+ρ)-ρ)` with the multinomial
/// `g(α) = (Σα_i)! / ∏ α_i!`, taken as zero when some `α_i < 0`.
pub fn degree_via_g(lambda: &Partition) -> BigInt {
    alternating_sum(
        lambda,
        |a| a >= 0,
        |alpha| {
            let mut acc = BigInt::one();
            let mut total: i64 = 0;
            for &a in alpha {
                total += a;
                acc *= binomial(BigInt::from(total), BigInt::from(a));
            }
            acc
        },
    )
}
