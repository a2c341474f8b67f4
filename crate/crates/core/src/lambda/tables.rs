//! Cached change-of-basis data. Everything is expressed relative to power sums.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::partition::{partitions, Partition};

pub(crate) type Terms = BTreeMap<Partition, BigRational>;

/// A process-wide memo table. Values are computed outside the lock, so a
/// computation may itself consult other memo tables (or this one).
pub(crate) struct Memo<K, V> {
    inner: OnceLock<RwLock<HashMap<K, Arc<V>>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Memo {
            inner: OnceLock::new(),
        }
    }

    pub(crate) fn get_or_compute(&self, key: &K, compute: impl FnOnce() -> V) -> Arc<V> {
        let map = self.inner.get_or_init(Default::default);
        if let Some(v) = map.read().unwrap().get(key) {
            return v.clone();
        }
        let value = Arc::new(compute());
        map.write()
            .unwrap()
            .entry(key.clone())
            .or_insert(value)
            .clone()
    }
}

pub(crate) fn add_to(terms: &mut Terms, key: Partition, c: BigRational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
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

pub(crate) fn add_scaled(acc: &mut Terms, other: &Terms, scale: &BigRational) {
    for (k, c) in other {
        add_to(acc, k.clone(), c * scale);
    }
}

/// Product in a multiplicative basis (power, homogeneous or elementary):
/// labels concatenate.
pub(crate) fn concat_mul(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            add_to(&mut out, ka.union(kb), ca * cb);
        }
    }
    out
}

fn unit() -> Terms {
    let mut t = Terms::new();
    t.insert(Partition::empty(), BigRational::one());
    t
}

fn ratio(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

/// `h_n = Σ_{μ ⊢ n} p_μ / z_μ`.
pub(crate) fn h_in_power(n: u32) -> Arc<Terms> {
    static MEMO: Memo<u32, Terms> = Memo::new();
    MEMO.get_or_compute(&n, || {
        partitions(n)
            .into_iter()
            .map(|mu| {
                let c = ratio(BigInt::one(), mu.z());
                (mu, c)
            })
            .collect()
    })
}

/// `e_n = Σ_{μ ⊢ n} (-1)^{n-ℓ(μ)} p_μ / z_μ`.
pub(crate) fn e_in_power(n: u32) -> Arc<Terms> {
    static MEMO: Memo<u32, Terms> = Memo::new();
    MEMO.get_or_compute(&n, || {
        partitions(n)
            .into_iter()
            .map(|mu| {
                let sign = if (n as usize - mu.len()).is_multiple_of(2) {
                    1
                } else {
                    -1
                };
                let c = ratio(BigInt::from(sign), mu.z());
                (mu, c)
            })
            .collect()
    })
}

fn product_in_power(lambda: &Partition, single: fn(u32) -> Arc<Terms>) -> Terms {
    lambda
        .parts()
        .iter()
        .fold(unit(), |acc, &r| concat_mul(&acc, &single(r)))
}

pub(crate) fn h_monomial_in_power(lambda: &Partition) -> Arc<Terms> {
    static MEMO: Memo<Partition, Terms> = Memo::new();
    MEMO.get_or_compute(lambda, || product_in_power(lambda, h_in_power))
}

pub(crate) fn e_monomial_in_power(lambda: &Partition) -> Arc<Terms> {
    static MEMO: Memo<Partition, Terms> = Memo::new();
    MEMO.get_or_compute(lambda, || product_in_power(lambda, e_in_power))
}

/// `p_n` in the homogeneous basis: `p_n = n h_n - Σ_{i<n} p_i h_{n-i}`.
pub(crate) fn p_in_h(n: u32) -> Arc<Terms> {
    static MEMO: Memo<u32, Terms> = Memo::new();
    MEMO.get_or_compute(&n, || {
        let mut out = Terms::new();
        if n == 0 {
            return unit();
        }
        add_to(
            &mut out,
            Partition::new(vec![n]).unwrap(),
            BigRational::from_integer(n.into()),
        );
        for i in 1..n {
            for (k, c) in p_in_h(i).iter() {
                add_to(&mut out, k.with_part(n - i), -c.clone());
            }
        }
        out
    })
}

/// `p_n` in the elementary basis:
/// `(-1)^{n-1} p_n = n e_n - Σ_{i<n} (-1)^{i-1} e_{n-i} p_i`.
pub(crate) fn p_in_e(n: u32) -> Arc<Terms> {
    static MEMO: Memo<u32, Terms> = Memo::new();
    MEMO.get_or_compute(&n, || {
        if n == 0 {
            return unit();
        }
        let mut out = Terms::new();
        add_to(
            &mut out,
            Partition::new(vec![n]).unwrap(),
            BigRational::from_integer(n.into()),
        );
        for i in 1..n {
            let sign = if (i - 1) % 2 == 0 { -1 } else { 1 };
            for (k, c) in p_in_e(i).iter() {
                add_to(
                    &mut out,
                    k.with_part(n - i),
                    c * BigRational::from_integer(sign.into()),
                );
            }
        }
        if (n - 1) % 2 == 1 {
            for c in out.values_mut() {
                *c = -c.clone();
            }
        }
        out
    })
}

pub(crate) fn p_monomial_in_h(mu: &Partition) -> Arc<Terms> {
    static MEMO: Memo<Partition, Terms> = Memo::new();
    MEMO.get_or_compute(mu, || {
        mu.parts()
            .iter()
            .fold(unit(), |acc, &r| concat_mul(&acc, &p_in_h(r)))
    })
}

pub(crate) fn p_monomial_in_e(mu: &Partition) -> Arc<Terms> {
    static MEMO: Memo<Partition, Terms> = Memo::new();
    MEMO.get_or_compute(mu, || {
        mu.parts()
            .iter()
            .fold(unit(), |acc, &r| concat_mul(&acc, &p_in_e(r)))
    })
}

/// Expands `det[a_{rows_i - i + j}]` into monomials in the `a_k`, with `a_0 = 1`
/// and `a_k = 0` for `k < 0`.
fn jacobi_trudi(rows: &[u32]) -> Terms {
    let l = rows.len();
    let mut out = Terms::new();
    let mut used = vec![false; l];
    let mut picked: Vec<u32> = Vec::with_capacity(l);

    fn go(
        i: usize,
        rows: &[u32],
        used: &mut [bool],
        picked: &mut Vec<u32>,
        inversions: usize,
        out: &mut Terms,
    ) {
        let l = rows.len();
        if i == l {
            let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
            add_to(
                out,
                Partition::from_unsorted(picked.iter().copied().filter(|&k| k > 0).collect()),
                BigRational::from_integer(sign.into()),
            );
            return;
        }
        for j in 0..l {
            if used[j] {
                continue;
            }
            let idx = rows[i] as i64 - i as i64 + j as i64;
            if idx < 0 {
                continue;
            }
            let extra = used[j + 1..].iter().filter(|&&u| u).count();
            used[j] = true;
            picked.push(idx as u32);
            go(i + 1, rows, used, picked, inversions + extra, out);
            picked.pop();
            used[j] = false;
        }
    }

    go(0, rows, &mut used, &mut picked, 0, &mut out);
    out
}

/// Expansion of `s_λ` in power sums, via whichever Jacobi–Trudi determinant is smaller.
pub(crate) fn schur_in_power(lambda: &Partition) -> Arc<Terms> {
    static MEMO: Memo<Partition, Terms> = Memo::new();
    MEMO.get_or_compute(lambda, || {
        let conj = lambda.conjugate();
        let (rows, monomial): (&Partition, fn(&Partition) -> Arc<Terms>) =
            if lambda.len() <= conj.len() {
                (lambda, h_monomial_in_power)
            } else {
                (&conj, e_monomial_in_power)
            };
        let mut out = Terms::new();
        for (mono, c) in jacobi_trudi(rows.parts()) {
            add_scaled(&mut out, &monomial(&mono), &c);
        }
        out
    })
}

/// Expansion of `p_μ` in Schur functions: the coefficient of `s_λ` is
/// `z_μ [p_μ] s_λ`.
pub(crate) fn power_in_schur(mu: &Partition) -> Arc<Terms> {
    static MEMO: Memo<u32, HashMap<Partition, Arc<Terms>>> = Memo::new();
    let n = mu.size();
    let table = MEMO.get_or_compute(&n, || {
        let lambdas = partitions(n);
        let mut cols: HashMap<Partition, Terms> =
            lambdas.iter().map(|m| (m.clone(), Terms::new())).collect();
        for lambda in &lambdas {
            for (nu, c) in schur_in_power(lambda).iter() {
                let z = BigRational::from_integer(nu.z());
                add_to(cols.get_mut(nu).unwrap(), lambda.clone(), c * z);
            }
        }
        cols.into_iter().map(|(k, v)| (k, Arc::new(v))).collect()
    });
    table[mu].clone()
}
