//! Exhaustive, size-bounded checks of the character relations. Cases run in
//! parallel; results are reported in case order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::brauer::{
    brauer_char, brauer_relation_check, walled_relation_check, BrauerLabel, WalledLabel, WalledSide,
};
use crate::error::{Error, Result};
use crate::fock::{self, character_of, degree_via_f, degree_via_g, mainthm_check, multim_expand};
use crate::gamma::{corollary_check, phi_plethystic_gamma, projthm_rhs_coeff, GammaElement};
use crate::lambda::{phi_creation, phi_plethystic, LambdaElement};
use crate::maya::MayaDiagram;
use crate::partition::{partitions, partitions_up_to, strict_partitions, Partition};
use crate::FockVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// `χ_λ(μ ∪ (m)) = χ_{-φ_1^(m)(λ)}(μ)`.
    Main,
    /// The expansion of `χ_λ(μ ∪ m^k)`.
    Multim,
    /// Both degree formulas against `χ_λ(1^n)`.
    Degree,
    /// Plethystic, creation-operator and Fock-space forms of `φ_k^(m)`.
    Bernpm,
    /// The product formula for `Φ_n^(m)`.
    Projthm,
    /// The projective relation `ψ̃_λ(μ ∪ (m)) = ψ̃_{-½Φ(λ)}(μ)`.
    Corollary,
    Brauer,
    Walled,
}

impl Theorem {
    pub const ALL: [Theorem; 8] = [
        Theorem::Main,
        Theorem::Multim,
        Theorem::Degree,
        Theorem::Bernpm,
        Theorem::Projthm,
        Theorem::Corollary,
        Theorem::Brauer,
        Theorem::Walled,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Main => "main",
            Theorem::Multim => "multim",
            Theorem::Degree => "degree",
            Theorem::Bernpm => "bernpm",
            Theorem::Projthm => "projthm",
            Theorem::Corollary => "corollary",
            Theorem::Brauer => "brauer",
            Theorem::Walled => "walled",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown theorem {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub case: String,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.case, self.detail)
    }
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub theorem: Theorem,
    pub max_size: u32,
    pub cases: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn run<C: Sync + Send>(
    theorem: Theorem,
    max_size: u32,
    cases: Vec<C>,
    check: impl Fn(&C) -> Result<Option<Counterexample>> + Sync,
) -> Result<SweepReport> {
    let results: Vec<Result<Option<Counterexample>>> = cases.par_iter().map(&check).collect();
    let mut counterexamples = Vec::new();
    for r in results {
        if let Some(c) = r? {
            counterexamples.push(c);
        }
    }
    Ok(SweepReport {
        theorem,
        max_size,
        cases: cases.len(),
        counterexamples,
    })
}

fn mismatch(
    case: String,
    lhs: impl fmt::Display,
    rhs: impl fmt::Display,
) -> Option<Counterexample> {
    Some(Counterexample {
        case,
        detail: format!("lhs = {lhs}, rhs = {rhs}"),
    })
}

/// Runs the sweep for `theorem` over all cases of size at most `max_size`.
pub fn sweep(theorem: Theorem, max_size: u32) -> Result<SweepReport> {
    match theorem {
        Theorem::Main => main_sweep(max_size, &[2, 3, 4, 5]),
        Theorem::Multim => multim_sweep(max_size, &[2, 3], &[1, 2, 3]),
        Theorem::Degree => degree_sweep(max_size),
        Theorem::Bernpm => bernpm_sweep(max_size, &[1, 2, 3], &[-1, 0, 1, 2]),
        Theorem::Projthm => projthm_sweep(max_size, &[1, 3], &[-2, -1, 0]),
        Theorem::Corollary => corollary_sweep(max_size, &[3, 5]),
        Theorem::Brauer => brauer_sweep(max_size, &[2, 3]),
        Theorem::Walled => walled_sweep(max_size, &[2, 3]),
    }
}

pub fn main_sweep(max_size: u32, ms: &[u32]) -> Result<SweepReport> {
    let mut cases = Vec::new();
    for lambda in partitions_up_to(max_size) {
        for &m in ms {
            if lambda.size() < m {
                continue;
            }
            for mu in partitions(lambda.size() - m) {
                if mu.has_no_part_divisible_by(m) {
                    cases.push((lambda.clone(), m, mu));
                }
            }
        }
    }
    run(Theorem::Main, max_size, cases, |(lambda, m, mu)| {
        let check = mainthm_check(&MayaDiagram::from_partition(lambda), *m as i64, mu)?;
        Ok((!check.holds())
            .then(|| mismatch(format!("λ={lambda}, m={m}, μ={mu}"), &check.lhs, &check.rhs))
            .flatten())
    })
}

pub fn multim_sweep(max_size: u32, ms: &[u32], ks: &[u32]) -> Result<SweepReport> {
    let mut cases = Vec::new();
    for lambda in partitions_up_to(max_size) {
        for &m in ms {
            for &k in ks {
                if lambda.size() < k * m {
                    continue;
                }
                for mu in partitions(lambda.size() - k * m) {
                    if mu.has_no_part_divisible_by(m) {
                        cases.push((lambda.clone(), m, k, mu));
                    }
                }
            }
        }
    }
    run(Theorem::Multim, max_size, cases, |(lambda, m, k, mu)| {
        let rhs = multim_expand(&MayaDiagram::from_partition(lambda), *m as i64, *k, mu)?;
        let lhs = character_of(lambda, &mu.with_parts(*m, *k as usize))?;
        Ok((lhs != rhs)
            .then(|| mismatch(format!("λ={lambda}, m={m}, k={k}, μ={mu}"), &lhs, &rhs))
            .flatten())
    })
}

pub fn degree_sweep(max_size: u32) -> Result<SweepReport> {
    run(
        Theorem::Degree,
        max_size,
        partitions_up_to(max_size),
        |lambda| {
            let ones = Partition::new(vec![1; lambda.size() as usize])?;
            let chi = character_of(lambda, &ones)?;
            let f = degree_via_f(lambda);
            let g = degree_via_g(lambda);
            Ok((f != chi || g != chi).then(|| Counterexample {
                case: format!("λ={lambda}"),
                detail: format!("f = {f}, g = {g}, χ(1^n) = {chi}"),
            }))
        },
    )
}

pub fn bernpm_sweep(max_size: u32, ms: &[i64], ks: &[i64]) -> Result<SweepReport> {
    let mut cases = Vec::new();
    for lambda in partitions_up_to(max_size) {
        for &m in ms {
            for &k in ks {
                cases.push((lambda.clone(), m, k));
            }
        }
    }
    run(Theorem::Bernpm, max_size, cases, |(lambda, m, k)| {
        let s = LambdaElement::s(lambda);
        let fock =
            LambdaElement::from_fock(&fock::phi(*m, *k, &FockVector::from_partition(lambda))?)?;
        let creation = phi_creation(*m, *k, &s)?;
        let pleth = phi_plethystic(*m, -*k, &s)?;
        Ok((fock != creation || fock != pleth).then(|| Counterexample {
            case: format!("λ={lambda}, m={m}, k={k}"),
            detail: format!("fock = {fock}, creation = {creation}, plethystic = {pleth}"),
        }))
    })
}

pub fn projthm_sweep(max_size: u32, ms: &[i64], ns: &[i64]) -> Result<SweepReport> {
    let mut cases = Vec::new();
    for d in 0..=max_size {
        for lambda in strict_partitions(d) {
            for &m in ms {
                for &n in ns {
                    cases.push((lambda.clone(), m, n));
                }
            }
        }
    }
    run(Theorem::Projthm, max_size, cases, |(lambda, m, n)| {
        let f = GammaElement::q(lambda)?;
        let lhs = phi_plethystic_gamma(*m, *n, &f)?;
        let rhs = projthm_rhs_coeff(*m, n * m, &f)?;
        Ok((lhs != rhs)
            .then(|| mismatch(format!("λ={lambda}, m={m}, n={n}"), &lhs, &rhs))
            .flatten())
    })
}

pub fn corollary_sweep(max_size: u32, ms: &[u32]) -> Result<SweepReport> {
    let mut cases = Vec::new();
    for d in 0..=max_size {
        for lambda in strict_partitions(d) {
            for &m in ms {
                if d < m {
                    continue;
                }
                for mu in partitions(d - m) {
                    if mu.is_all_odd() && mu.has_no_part_divisible_by(m) {
                        cases.push((lambda.clone(), m, mu));
                    }
                }
            }
        }
    }
    run(Theorem::Corollary, max_size, cases, |(lambda, m, mu)| {
        let check = corollary_check(lambda, *m as i64, mu)?;
        Ok((!check.holds())
            .then(|| mismatch(format!("λ={lambda}, m={m}, μ={mu}"), &check.lhs, &check.rhs))
            .flatten())
    })
}

pub fn brauer_sweep(max_size: u32, ms: &[u32]) -> Result<SweepReport> {
    let mut cases = Vec::new();
    for n in 0..=max_size {
        for lambda in partitions_up_to(n) {
            if !BrauerLabel::is_valid(n, &lambda) {
                continue;
            }
            for &m in ms {
                if n < m {
                    continue;
                }
                for mu in partitions(n - m) {
                    if mu.has_no_part_divisible_by(m) {
                        cases.push((BrauerLabel::new(n, lambda.clone())?, m, mu));
                    }
                }
            }
        }
    }
    run(Theorem::Brauer, max_size, cases, |(label, m, mu)| {
        let check = brauer_relation_check(label, *m as i64, mu)?;
        Ok((!check.holds()).then(|| Counterexample {
            case: format!("λ={}, n={}, m={m}, μ={mu}", label.lambda(), label.n()),
            detail: format!(
                "lhs = {}, with ε_m·id: {}, with ε_m·φ_0: {}",
                check.lhs, check.rhs_identity, check.rhs_phi0
            ),
        }))
    })
}

/// `brauer_char(λ, 1^n) = χ_λ(1^n)` for `|λ| = n ≤ max_size`.
pub fn brauer_degree_sweep(max_size: u32) -> Result<SweepReport> {
    run(
        Theorem::Brauer,
        max_size,
        partitions_up_to(max_size),
        |lambda| {
            let n = lambda.size();
            let ones = Partition::new(vec![1; n as usize])?;
            let lhs = brauer_char(&BrauerLabel::new(n, lambda.clone())?, &ones)?;
            let rhs = num_rational::BigRational::from_integer(character_of(lambda, &ones)?);
            Ok((lhs != rhs)
                .then(|| mismatch(format!("λ={lambda}"), &lhs, &rhs))
                .flatten())
        },
    )
}

pub fn walled_sweep(max_size: u32, ms: &[u32]) -> Result<SweepReport> {
    let mut cases = Vec::new();
    for total in 0..=max_size {
        for r in 0..=total {
            let s = total - r;
            for i in 0..=r.min(s) {
                for lambda in partitions(r - i) {
                    for kappa in partitions(s - i) {
                        let label = WalledLabel::new(r, s, lambda.clone(), kappa.clone())?;
                        for &m in ms {
                            for side in [WalledSide::Left, WalledSide::Right] {
                                let (rm, sm) = match side {
                                    WalledSide::Left => (r.checked_sub(m), Some(s)),
                                    WalledSide::Right => (Some(r), s.checked_sub(m)),
                                };
                                let (Some(rm), Some(sm)) = (rm, sm) else {
                                    continue;
                                };
                                for mu in partitions(rm) {
                                    if !mu.has_no_part_divisible_by(m) {
                                        continue;
                                    }
                                    for nu in partitions(sm) {
                                        if nu.has_no_part_divisible_by(m) {
                                            cases.push((label.clone(), m, side, mu.clone(), nu));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    run(
        Theorem::Walled,
        max_size,
        cases,
        |(label, m, side, mu, nu)| {
            let check = walled_relation_check(label, *m as i64, *side, mu, nu)?;
            Ok((!check.holds())
                .then(|| {
                    mismatch(
                        format!("{label}, m={m}, side={side:?}, μ={mu}, ν={nu}"),
                        &check.lhs,
                        &check.rhs,
                    )
                })
                .flatten())
        },
    )
}

/// Character table of `S_n`, rows and columns in reverse lexicographic order.
pub fn symmetric_table(n: u32) -> Result<Vec<Vec<BigInt>>> {
    let labels = partitions(n);
    labels
        .par_iter()
        .map(|lambda| labels.iter().map(|mu| character_of(lambda, mu)).collect())
        .collect()
}
