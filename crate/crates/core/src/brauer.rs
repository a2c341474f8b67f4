//! Characters of Brauer and walled Brauer algebras at permutations, via
//! Frobenius-type formulas on Λ and Λ ⊗ Λ.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lambda::tables::{add_to, Terms};
use crate::lambda::{phi_plethystic, Basis, LambdaElement};
use crate::partition::Partition;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn epsilon(r: u32) -> i64 {
    if r.is_multiple_of(2) {
        1
    } else {
        0
    }
}

/// A label `λ` of an irreducible character of the Brauer algebra on `n` strands.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BrauerLabel {
    n: u32,
    lambda: Partition,
}

impl BrauerLabel {
    pub fn new(n: u32, lambda: Partition) -> Result<Self> {
        if !Self::is_valid(n, &lambda) {
            return Err(Error::invalid(format!(
                "{lambda} does not label a character of D_{n}: n - |λ| must be even and nonnegative"
            )));
        }
        Ok(BrauerLabel { n, lambda })
    }

    pub fn is_valid(n: u32, lambda: &Partition) -> bool {
        lambda.size() <= n && (n - lambda.size()).is_multiple_of(2)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }
}

impl fmt::Display for BrauerLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; n={})", self.lambda, self.n)
    }
}

/// `A^{br}_r = p_r + p_r^⊥ + ε_r`, where `ε_r` is 1 for even `r` and 0 otherwise.
/// The result is in `f`'s basis.
pub fn abr_apply(r: i64, f: &LambdaElement) -> Result<LambdaElement> {
    if r <= 0 {
        return Err(Error::invalid(format!("A^br_r needs r >= 1, got {r}")));
    }
    let fp = f.to_basis(Basis::Power);
    let out = abr_terms(r as u32, fp.terms(), u32::MAX);
    Ok(LambdaElement::from_terms(Basis::Power, out).to_basis(f.basis()))
}

/// `A^{br}_r` on power-sum terms, dropping results of degree above `cap`.
fn abr_terms(r: u32, terms: &Terms, cap: u32) -> Terms {
    let eps = epsilon(r);
    let mut out = Terms::new();
    for (nu, c) in terms {
        if nu.size() + r <= cap {
            add_to(&mut out, nu.with_part(r), c.clone());
        }
        let mult = nu.multiplicity(r);
        if mult > 0 {
            add_to(
                &mut out,
                nu.without_part(r).unwrap(),
                c * rat(r as i64 * mult as i64),
            );
        }
        if eps != 0 && nu.size() <= cap {
            add_to(&mut out, nu.clone(), c.clone());
        }
    }
    out
}

/// Constant term of `A^{br}_{μ_1} ⋯ A^{br}_{μ_l} f`, with no check on labels.
pub fn brauer_constant_term(f: &LambdaElement, mu: &Partition) -> BigRational {
    let mut cur = f.to_basis(Basis::Power).into_terms();
    let parts = mu.parts();
    let mut capacity: u32 = mu.size();
    cur.retain(|k, _| k.size() <= capacity);
    for &r in parts.iter().rev() {
        capacity -= r;
        cur = abr_terms(r, &cur, capacity);
        cur.retain(|k, _| k.size() <= capacity);
        if cur.is_empty() {
            break;
        }
    }
    cur.get(&Partition::empty())
        .cloned()
        .unwrap_or_else(BigRational::zero)
}

/// `χ^{(n)}_λ(μ)`.
pub fn brauer_char(label: &BrauerLabel, mu: &Partition) -> Result<BigRational> {
    if mu.size() != label.n {
        return Err(Error::SizeMismatch(format!(
            "cycle type {mu} has size {} but n = {}",
            mu.size(),
            label.n
        )));
    }
    Ok(brauer_constant_term(&LambdaElement::s(&label.lambda), mu))
}

/// Values for `χ^{(n)}_λ(μ ∪ (m)) = χ^{(n-m)}_{φ(λ)}(μ)` under both choices
/// `φ = -φ_1^{(m)} + ε_m` and `φ = -φ_1^{(m)} + ε_m φ_0^{(m)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerRelation {
    pub lhs: BigRational,
    pub rhs_identity: BigRational,
    pub rhs_phi0: BigRational,
    /// Schur labels in either `φ(λ)` that are not labels for `n - m`; the
    /// formula assigns them the value 0.
    pub invalid_labels: Vec<Partition>,
}

impl BrauerRelation {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs_identity && self.lhs == self.rhs_phi0
    }
}

fn require_m_and_mu(m: i64, mu: &Partition) -> Result<()> {
    if m <= 1 {
        return Err(Error::invalid(format!("the relation needs m > 1, got {m}")));
    }
    if !mu.has_no_part_divisible_by(m as u32) {
        return Err(Error::invalid(format!("{mu} has a part divisible by {m}")));
    }
    Ok(())
}

fn invalid_in(f: &LambdaElement, n: u32, out: &mut Vec<Partition>) {
    for k in f.terms().keys() {
        if !BrauerLabel::is_valid(n, k) && !out.contains(k) {
            out.push(k.clone());
        }
    }
}

pub fn brauer_relation_check(
    label: &BrauerLabel,
    m: i64,
    mu: &Partition,
) -> Result<BrauerRelation> {
    require_m_and_mu(m, mu)?;
    if mu.size() as i64 + m != label.n as i64 {
        return Err(Error::SizeMismatch(format!(
            "|μ| + m = {} but n = {}",
            mu.size() as i64 + m,
            label.n
        )));
    }
    let s = LambdaElement::s(&label.lambda);
    let lhs = brauer_char(label, &mu.with_part(m as u32))?;
    let eps = rat(epsilon(m as u32));
    let minus_phi1 = phi_plethystic(m, -1, &s)?.scale(&rat(-1));
    let first = minus_phi1.add(&s.scale(&eps));
    let second = minus_phi1.add(&phi_plethystic(m, 0, &s)?.scale(&eps));
    let n2 = label.n - m as u32;
    let mut invalid_labels = Vec::new();
    invalid_in(&first, n2, &mut invalid_labels);
    invalid_in(&second, n2, &mut invalid_labels);
    invalid_labels.sort();
    Ok(BrauerRelation {
        lhs,
        rhs_identity: brauer_constant_term(&first, mu),
        rhs_phi0: brauer_constant_term(&second, mu),
        invalid_labels,
    })
}

/// A label `[λ, κ]` for the walled Brauer algebra `D_{r,s}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WalledLabel {
    r: u32,
    s: u32,
    lambda: Partition,
    kappa: Partition,
}

impl WalledLabel {
    pub fn new(r: u32, s: u32, lambda: Partition, kappa: Partition) -> Result<Self> {
        if !Self::is_valid(r, s, &lambda, &kappa) {
            return Err(Error::invalid(format!(
                "[{lambda}; {kappa}] does not label a character of D_({r},{s})"
            )));
        }
        Ok(WalledLabel {
            r,
            s,
            lambda,
            kappa,
        })
    }

    pub fn is_valid(r: u32, s: u32, lambda: &Partition, kappa: &Partition) -> bool {
        lambda.size() <= r && kappa.size() <= s && r - lambda.size() == s - kappa.size()
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn kappa(&self) -> &Partition {
        &self.kappa
    }
}

impl fmt::Display for WalledLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}; {}] (r={}, s={})",
            self.lambda, self.kappa, self.r, self.s
        )
    }
}

/// An element of Λ ⊗ Λ in the power-sum basis of each factor.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorLambda {
    terms: BTreeMap<(Partition, Partition), BigRational>,
}

fn add_pair(
    terms: &mut BTreeMap<(Partition, Partition), BigRational>,
    key: (Partition, Partition),
    c: BigRational,
) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl TensorLambda {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::tensor(
            &LambdaElement::one(Basis::Power),
            &LambdaElement::one(Basis::Power),
        )
    }

    /// `f ⊗ g`.
    pub fn tensor(f: &LambdaElement, g: &LambdaElement) -> Self {
        let f = f.to_basis(Basis::Power);
        let g = g.to_basis(Basis::Power);
        let mut out = Self::zero();
        for (a, c) in f.terms() {
            for (b, d) in g.terms() {
                add_pair(&mut out.terms, (a.clone(), b.clone()), c * d);
            }
        }
        out
    }

    pub fn from_terms(
        terms: impl IntoIterator<Item = ((Partition, Partition), BigRational)>,
    ) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            add_pair(&mut out.terms, k, c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<(Partition, Partition), BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> BigRational {
        self.terms
            .get(&(Partition::empty(), Partition::empty()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            add_pair(&mut out.terms, k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    /// Applies a linear map of Λ to the first (`X`) factor.
    pub fn map_x(&self, f: impl Fn(&LambdaElement) -> LambdaElement) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            let image = f(&LambdaElement::p_mu(a)).to_basis(Basis::Power);
            for (a2, d) in image.terms() {
                add_pair(&mut out.terms, (a2.clone(), b.clone()), c * d);
            }
        }
        out
    }

    /// Applies a linear map of Λ to the second (`Y`) factor.
    pub fn map_y(&self, f: impl Fn(&LambdaElement) -> LambdaElement) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            let image = f(&LambdaElement::p_mu(b)).to_basis(Basis::Power);
            for (b2, d) in image.terms() {
                add_pair(&mut out.terms, (a.clone(), b2.clone()), c * d);
            }
        }
        out
    }
}

impl fmt::Display for TensorLambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            write!(f, "{sign}{}*p({a})⊗p({b})", c.abs())?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WalledSign {
    /// `A^+_i = p_i^⊥(X) + p_i(Y)`.
    Plus,
    /// `A^-_i = p_i(X) + p_i^⊥(Y)`.
    Minus,
}

type PairTerms = BTreeMap<(Partition, Partition), BigRational>;

fn raise(nu: &Partition, i: u32) -> Partition {
    nu.with_part(i)
}

fn lower(nu: &Partition, i: u32) -> Option<(Partition, i64)> {
    let mult = nu.multiplicity(i);
    (mult > 0).then(|| (nu.without_part(i).unwrap(), i as i64 * mult as i64))
}

fn walled_terms(
    sign: WalledSign,
    i: u32,
    terms: &PairTerms,
    keep: impl Fn(&Partition, &Partition) -> bool,
) -> PairTerms {
    let mut out = PairTerms::new();
    let mut push = |k: (Partition, Partition), c: BigRational| {
        if keep(&k.0, &k.1) {
            add_pair(&mut out, k, c);
        }
    };
    for ((a, b), c) in terms {
        match sign {
            WalledSign::Plus => {
                if let Some((a2, w)) = lower(a, i) {
                    push((a2, b.clone()), c * rat(w));
                }
                push((a.clone(), raise(b, i)), c.clone());
            }
            WalledSign::Minus => {
                push((raise(a, i), b.clone()), c.clone());
                if let Some((b2, w)) = lower(b, i) {
                    push((a.clone(), b2), c * rat(w));
                }
            }
        }
    }
    out
}

pub fn walled_apply(sign: WalledSign, i: i64, t: &TensorLambda) -> Result<TensorLambda> {
    if i <= 0 {
        return Err(Error::invalid(format!("A^±_i needs i >= 1, got {i}")));
    }
    Ok(TensorLambda {
        terms: walled_terms(sign, i as u32, &t.terms, |_, _| true),
    })
}

/// Constant term of `A^+_{μ_1} ⋯ A^+_{μ_l} A^-_{ν_1} ⋯ A^-_{ν_{l'}} t`, with no
/// label checks.
pub fn walled_constant_term(t: &TensorLambda, mu: &Partition, nu: &Partition) -> BigRational {
    let mut cur = t.terms.clone();
    let mut nu_left = nu.size();
    let mu_total = mu.size();
    // A^- applies first; afterwards only A^+ can lower X, and nothing lowers Y.
    for &i in nu.parts().iter().rev() {
        nu_left -= i;
        cur = walled_terms(WalledSign::Minus, i, &cur, |a, b| {
            a.size() <= mu_total && b.size() <= nu_left
        });
        if cur.is_empty() {
            return BigRational::zero();
        }
    }
    let mut mu_left = mu_total;
    for &i in mu.parts().iter().rev() {
        mu_left -= i;
        cur = walled_terms(WalledSign::Plus, i, &cur, |a, b| {
            a.size() <= mu_left && b.is_empty()
        });
        if cur.is_empty() {
            return BigRational::zero();
        }
    }
    cur.get(&(Partition::empty(), Partition::empty()))
        .cloned()
        .unwrap_or_else(BigRational::zero)
}

/// `χ^{(r,s)}_{[λ,κ]}(μ, ν)`.
pub fn walled_char(label: &WalledLabel, mu: &Partition, nu: &Partition) -> Result<BigRational> {
    if mu.size() != label.r || nu.size() != label.s {
        return Err(Error::SizeMismatch(format!(
            "cycle types ({mu}; {nu}) have sizes ({}, {}) but (r, s) = ({}, {})",
            mu.size(),
            nu.size(),
            label.r,
            label.s
        )));
    }
    let t = TensorLambda::tensor(
        &LambdaElement::s(&label.lambda),
        &LambdaElement::s(&label.kappa),
    );
    Ok(walled_constant_term(&t, mu, nu))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WalledSide {
    /// The extra `m`-cycle sits on the `r` strands and `φ` acts on `λ`.
    Left,
    /// The extra `m`-cycle sits on the `s` strands and `φ` acts on `κ`.
    Right,
}

/// Both sides of the walled relation, plus Schur labels in the `φ` image that
/// are not labels of the smaller algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalledRelation {
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub invalid_labels: Vec<(Partition, Partition)>,
}

impl WalledRelation {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn walled_relation_check(
    label: &WalledLabel,
    m: i64,
    side: WalledSide,
    mu: &Partition,
    nu: &Partition,
) -> Result<WalledRelation> {
    require_m_and_mu(m, mu)?;
    require_m_and_mu(m, nu)?;
    let mm = m as u32;
    let (mu_full, nu_full) = match side {
        WalledSide::Left => (mu.with_part(mm), nu.clone()),
        WalledSide::Right => (mu.clone(), nu.with_part(mm)),
    };
    if mu_full.size() != label.r || nu_full.size() != label.s {
        return Err(Error::SizeMismatch(format!(
            "cycle types ({mu_full}; {nu_full}) do not match (r, s) = ({}, {})",
            label.r, label.s
        )));
    }
    walled_relation_values(&label.lambda, &label.kappa, m, side, mu, nu)
}

/// The two sides of the walled relation for an arbitrary pair `(λ, κ)`,
/// whether or not it labels a character.
pub fn walled_relation_values(
    lambda: &Partition,
    kappa: &Partition,
    m: i64,
    side: WalledSide,
    mu: &Partition,
    nu: &Partition,
) -> Result<WalledRelation> {
    require_m_and_mu(m, mu)?;
    require_m_and_mu(m, nu)?;
    let mm = m as u32;
    let (mu_full, nu_full) = match side {
        WalledSide::Left => (mu.with_part(mm), nu.clone()),
        WalledSide::Right => (mu.clone(), nu.with_part(mm)),
    };
    let s_lambda = LambdaElement::s(lambda);
    let s_kappa = LambdaElement::s(kappa);
    let lhs = walled_constant_term(
        &TensorLambda::tensor(&s_lambda, &s_kappa),
        &mu_full,
        &nu_full,
    );
    let (x, y) = match side {
        WalledSide::Left => (phi_plethystic(m, -1, &s_lambda)?.scale(&rat(-1)), s_kappa),
        WalledSide::Right => (s_lambda, phi_plethystic(m, -1, &s_kappa)?.scale(&rat(-1))),
    };
    let mut invalid_labels = Vec::new();
    let xs = x.to_basis(Basis::Schur);
    let ys = y.to_basis(Basis::Schur);
    for a in xs.terms().keys() {
        for b in ys.terms().keys() {
            if !WalledLabel::is_valid(mu.size(), nu.size(), a, b) {
                invalid_labels.push((a.clone(), b.clone()));
            }
        }
    }
    let rhs = walled_constant_term(&TensorLambda::tensor(&x, &y), mu, nu);
    Ok(WalledRelation {
        lhs,
        rhs,
        invalid_labels,
    })
}

/// Convenience for `n = |λ|`, `μ = (1^n)`.
pub fn brauer_degree(lambda: &Partition) -> BigRational {
    let n = lambda.size();
    brauer_constant_term(
        &LambdaElement::s(lambda),
        &Partition::new(vec![1; n as usize]).unwrap(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn pair(a: &[u32], b: &[u32], c: i64) -> ((Partition, Partition), BigRational) {
        ((p(a), p(b)), rat(c))
    }

    #[test]
    fn abr_examples() {
        let one = LambdaElement::one(Basis::Power);
        assert_eq!(abr_apply(2, &one).unwrap(), LambdaElement::p(2).add(&one));
        let s1 = LambdaElement::s(&p(&[1]));
        let expected = crate::lambda::multiply(&LambdaElement::p(1), &s1)
            .add(&LambdaElement::one(Basis::Power));
        assert_eq!(abr_apply(1, &s1).unwrap(), expected.to_basis(Basis::Schur));
        assert_eq!(abr_apply(3, &one).unwrap(), LambdaElement::p(3));
        assert!(abr_apply(0, &one).is_err());
    }

    #[test]
    fn brauer_char_examples() {
        let l = BrauerLabel::new(2, Partition::empty()).unwrap();
        assert_eq!(brauer_char(&l, &p(&[2])).unwrap(), rat(1));
        let l = BrauerLabel::new(1, p(&[1])).unwrap();
        assert_eq!(brauer_char(&l, &p(&[1])).unwrap(), rat(1));
        assert!(BrauerLabel::new(3, p(&[2])).is_err());
        assert!(brauer_char(&l, &p(&[2])).is_err());
    }

    #[test]
    fn brauer_relation_examples() {
        let cases = [
            (4, p(&[2]), 2, p(&[1, 1])),
            (3, p(&[1]), 3, Partition::empty()),
            (5, p(&[3, 2]), 2, p(&[3])),
        ];
        for (n, lam, m, mu) in cases {
            let check = brauer_relation_check(&BrauerLabel::new(n, lam).unwrap(), m, &mu).unwrap();
            assert!(check.holds(), "{check:?}");
        }
    }

    #[test]
    fn walled_apply_examples() {
        let one = TensorLambda::one();
        assert_eq!(
            walled_apply(WalledSign::Minus, 1, &one).unwrap(),
            TensorLambda::from_terms([pair(&[1], &[], 1)])
        );
        let t = TensorLambda::from_terms([pair(&[1], &[], 1)]);
        assert_eq!(
            walled_apply(WalledSign::Plus, 1, &t).unwrap(),
            TensorLambda::from_terms([pair(&[], &[], 1), pair(&[1], &[1], 1)])
        );
        assert_eq!(
            walled_apply(WalledSign::Plus, 2, &one).unwrap(),
            TensorLambda::from_terms([pair(&[], &[2], 1)])
        );
    }

    #[test]
    fn walled_char_examples() {
        let l = WalledLabel::new(1, 1, Partition::empty(), Partition::empty()).unwrap();
        assert_eq!(walled_char(&l, &p(&[1]), &p(&[1])).unwrap(), rat(1));
        let l = WalledLabel::new(1, 0, p(&[1]), Partition::empty()).unwrap();
        assert_eq!(
            walled_char(&l, &p(&[1]), &Partition::empty()).unwrap(),
            rat(1)
        );
    }

    #[test]
    fn walled_relation_examples() {
        // [(1), (1)] is not a label for (r, s) = (3, 1); the identity of
        // constant terms still holds for it.
        assert!(WalledLabel::new(3, 1, p(&[1]), p(&[1])).is_err());
        for side in [WalledSide::Left, WalledSide::Right] {
            let check =
                walled_relation_values(&p(&[1]), &p(&[1]), 2, side, &p(&[1]), &p(&[1])).unwrap();
            assert!(check.holds(), "{check:?}");
        }
        let l = WalledLabel::new(3, 1, p(&[2]), Partition::empty()).unwrap();
        let check = walled_relation_check(&l, 2, WalledSide::Left, &p(&[1]), &p(&[1])).unwrap();
        assert!(check.holds(), "{check:?}");
        let l = WalledLabel::new(1, 3, Partition::empty(), p(&[2])).unwrap();
        let check = walled_relation_check(&l, 2, WalledSide::Right, &p(&[1]), &p(&[1])).unwrap();
        assert!(check.holds(), "{check:?}");
        let l = WalledLabel::new(3, 0, p(&[2, 1]), Partition::empty()).unwrap();
        let check = walled_relation_check(
            &l,
            3,
            WalledSide::Left,
            &Partition::empty(),
            &Partition::empty(),
        )
        .unwrap();
        assert!(check.holds(), "{check:?}");
    }
}
