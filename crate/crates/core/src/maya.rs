//! Maya diagrams, charged maya diagrams and sign-tracking normalization.
//!
//! A maya diagram `[x_1, x_2, …]` is a strictly decreasing integer sequence
//! with `x_i = -i` for all large `i`. Only the prefix that differs from this
//! vacuum tail is stored, which for a diagram coming from a partition λ is
//! exactly `λ_i - i` for `i ≤ ℓ(λ)`. A charged diagram with charge `c` has
//! tail `x_i = c - i` instead.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A charged maya diagram: entries `prefix` followed by `x_i = charge - i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChargedMayaDiagram {
    charge: i64,
    prefix: Vec<i64>,
}

/// A maya diagram of charge zero; one-to-one with partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MayaDiagram {
    prefix: Vec<i64>,
}

/// Result of normalizing an arbitrary integer sequence: zero (a repeated
/// entry), or a sign times a canonical diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignedMaya<D> {
    Zero,
    Term { sign: i8, diagram: D },
}

impl<D> SignedMaya<D> {
    pub fn map<E>(self, f: impl FnOnce(D) -> E) -> SignedMaya<E> {
        match self {
            SignedMaya::Zero => SignedMaya::Zero,
            SignedMaya::Term { sign, diagram } => SignedMaya::Term {
                sign,
                diagram: f(diagram),
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SignedMaya::Zero)
    }

    pub fn negate(self) -> Self {
        match self {
            SignedMaya::Zero => SignedMaya::Zero,
            SignedMaya::Term { sign, diagram } => SignedMaya::Term {
                sign: -sign,
                diagram,
            },
        }
    }
}

fn strip_tail(charge: i64, prefix: &mut Vec<i64>) {
    while let Some(&last) = prefix.last() {
        if last == charge - prefix.len() as i64 {
            prefix.pop();
        } else {
            break;
        }
    }
}

/// Number of pairs `i < j` with `values[i] < values[j]`, i.e. the inversions
/// relative to decreasing order. Sorts `values` decreasingly as a side effect.
fn merge_count(values: &mut [i64], scratch: &mut Vec<i64>) -> u64 {
    let n = values.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut count =
        merge_count(&mut values[..mid], scratch) + merge_count(&mut values[mid..], scratch);
    scratch.clear();
    let (mut i, mut j) = (0, mid);
    while i < mid && j < n {
        if values[i] >= values[j] {
            scratch.push(values[i]);
            i += 1;
        } else {
            count += (mid - i) as u64;
            scratch.push(values[j]);
            j += 1;
        }
    }
    scratch.extend_from_slice(&values[i..mid]);
    scratch.extend_from_slice(&values[j..n]);
    values.copy_from_slice(scratch);
    count
}

/// Normalize the sequence `head` followed by the tail `x_i = charge - i`
/// (`i > head.len()`). Returns the sign of the sorting permutation and the
/// sorted diagram, or zero if any entry repeats (including a repeat of a
/// tail entry).
pub fn normalize(head: &[i64], charge: i64) -> SignedMaya<ChargedMayaDiagram> {
    let k = head.len() as i64;
    // Tail entries are exactly the integers <= charge - k - 1.
    let floor = charge - k - 1;
    if head.iter().any(|&x| x <= floor) {
        return SignedMaya::Zero;
    }
    let mut sorted = head.to_vec();
    let mut scratch = Vec::with_capacity(sorted.len());
    let inversions = merge_count(&mut sorted, &mut scratch);
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return SignedMaya::Zero;
    }
    strip_tail(charge, &mut sorted);
    SignedMaya::Term {
        sign: if inversions.is_multiple_of(2) { 1 } else { -1 },
        diagram: ChargedMayaDiagram {
            charge,
            prefix: sorted,
        },
    }
}

/// Normalize a charge-zero sequence.
pub fn normalize_uncharged(head: &[i64]) -> SignedMaya<MayaDiagram> {
    normalize(head, 0).map(|d| MayaDiagram { prefix: d.prefix })
}

impl ChargedMayaDiagram {
    /// Build from a strictly decreasing prefix; the tail is stripped to canonical form.
    pub fn new(charge: i64, prefix: Vec<i64>) -> Result<Self> {
        match normalize(&prefix, charge) {
            SignedMaya::Term { sign: 1, diagram } if prefix.windows(2).all(|w| w[0] > w[1]) => {
                Ok(diagram)
            }
            _ => Err(Error::invalid(format!(
                "{prefix:?} is not a strictly decreasing prefix compatible with charge {charge}"
            ))),
        }
    }

    pub fn vacuum(charge: i64) -> Self {
        ChargedMayaDiagram {
            charge,
            prefix: Vec::new(),
        }
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    pub fn prefix(&self) -> &[i64] {
        &self.prefix
    }

    /// Entry `x_i` (1-based).
    pub fn entry(&self, i: usize) -> i64 {
        assert!(i >= 1, "maya indices start at 1");
        self.prefix
            .get(i - 1)
            .copied()
            .unwrap_or(self.charge - i as i64)
    }

    /// `b̃_r`: prepend `r`. The charge grows by one.
    pub fn prepend(&self, r: i64) -> SignedMaya<ChargedMayaDiagram> {
        let mut head = Vec::with_capacity(self.prefix.len() + 1);
        head.push(r);
        head.extend_from_slice(&self.prefix);
        normalize(&head, self.charge + 1)
    }

    /// `[x_1 - m, x_2 - m, …]`; the charge drops by `m`.
    pub fn shift(&self, m: i64) -> Self {
        ChargedMayaDiagram {
            charge: self.charge - m,
            prefix: self.prefix.iter().map(|x| x - m).collect(),
        }
    }

    /// Lossless for charge zero.
    pub fn to_maya(&self) -> Option<MayaDiagram> {
        (self.charge == 0).then(|| MayaDiagram {
            prefix: self.prefix.clone(),
        })
    }

    /// Size Σ_i (x_i - c + i).
    pub fn size(&self) -> u64 {
        self.prefix
            .iter()
            .enumerate()
            .map(|(i, &x)| (x - self.charge + i as i64 + 1) as u64)
            .sum()
    }

    /// The integers absent from the diagram, increasing: a finite prefix
    /// followed by the tail `y_i = c + i - 1`.
    pub fn complement(&self) -> Complement {
        let k = self.prefix.len() as i64;
        let low = self.charge - k;
        let high = self.prefix.first().copied().unwrap_or(low - 1);
        let mut ys: Vec<i64> = (low..=high).filter(|v| !self.prefix.contains(v)).collect();
        while let Some(&last) = ys.last() {
            if last == self.charge + ys.len() as i64 - 1 {
                ys.pop();
            } else {
                break;
            }
        }
        Complement {
            charge: self.charge,
            prefix: ys,
        }
    }
}

impl MayaDiagram {
    pub fn vacuum() -> Self {
        MayaDiagram { prefix: Vec::new() }
    }

    /// Build from a strictly decreasing prefix with implicit tail `x_i = -i`.
    pub fn new(prefix: Vec<i64>) -> Result<Self> {
        ChargedMayaDiagram::new(0, prefix).map(|d| MayaDiagram { prefix: d.prefix })
    }

    pub fn from_partition(p: &Partition) -> Self {
        to_maya(p)
    }

    pub fn prefix(&self) -> &[i64] {
        &self.prefix
    }

    pub fn entry(&self, i: usize) -> i64 {
        assert!(i >= 1, "maya indices start at 1");
        self.prefix.get(i - 1).copied().unwrap_or(-(i as i64))
    }

    pub fn is_vacuum(&self) -> bool {
        self.prefix.is_empty()
    }

    pub fn size(&self) -> u64 {
        size(self)
    }

    pub fn to_partition(&self) -> Partition {
        to_partition(self)
    }

    pub fn charged(&self) -> ChargedMayaDiagram {
        ChargedMayaDiagram {
            charge: 0,
            prefix: self.prefix.clone(),
        }
    }

    pub fn complement(&self) -> Complement {
        complement(self)
    }
}

impl From<MayaDiagram> for ChargedMayaDiagram {
    fn from(d: MayaDiagram) -> Self {
        ChargedMayaDiagram {
            charge: 0,
            prefix: d.prefix,
        }
    }
}

impl From<&Partition> for MayaDiagram {
    fn from(p: &Partition) -> Self {
        to_maya(p)
    }
}

/// `(λ_1, …, λ_l) ↦ [λ_1 - 1, λ_2 - 2, …]`.
pub fn to_maya(p: &Partition) -> MayaDiagram {
    MayaDiagram {
        prefix: p
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &part)| part as i64 - (i as i64 + 1))
            .collect(),
    }
}

/// `[x_1, x_2, …] ↦ (x_1 + 1, x_2 + 2, …)` with trailing zeros dropped.
pub fn to_partition(d: &MayaDiagram) -> Partition {
    let parts = d
        .prefix
        .iter()
        .enumerate()
        .map(|(i, &x)| (x + i as i64 + 1) as u32)
        .collect();
    Partition::new(parts).expect("canonical maya prefix yields a partition")
}

pub fn size(d: &MayaDiagram) -> u64 {
    d.prefix
        .iter()
        .enumerate()
        .map(|(i, &x)| (x + i as i64 + 1) as u64)
        .sum()
}

/// Increasing sequence `y_1 < y_2 < …` of integers missing from a diagram.
/// For charge `c` the tail is `y_i = c + i - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complement {
    charge: i64,
    prefix: Vec<i64>,
}

impl Complement {
    pub fn prefix(&self) -> &[i64] {
        &self.prefix
    }

    pub fn entry(&self, i: usize) -> i64 {
        assert!(i >= 1);
        self.prefix
            .get(i - 1)
            .copied()
            .unwrap_or(self.charge + i as i64 - 1)
    }

    /// Smallest absent integer.
    pub fn min(&self) -> i64 {
        self.entry(1)
    }

    /// Σ_i (i - 1 - y_i) for charge zero; equals the size of the diagram.
    pub fn weight(&self) -> i64 {
        self.prefix
            .iter()
            .enumerate()
            .map(|(i, &y)| i as i64 + self.charge - y)
            .sum()
    }
}

pub fn complement(d: &MayaDiagram) -> Complement {
    d.charged().complement()
}

/// Conjugate partition, read off the complement: `[-1-y_1, -1-y_2, …]`.
pub fn conjugate(p: &Partition) -> Partition {
    let comp = complement(&to_maya(p));
    let prefix: Vec<i64> = comp.prefix.iter().map(|y| -1 - y).collect();
    match normalize_uncharged(&prefix) {
        SignedMaya::Term { diagram, .. } => to_partition(&diagram),
        SignedMaya::Zero => unreachable!("complement entries are distinct"),
    }
}

impl fmt::Display for ChargedMayaDiagram {
    /// `[x1,…,xk | t]` where `t = k + 1` is the first implicit index;
    /// nonzero charge is appended as `@c`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.prefix.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        if self.prefix.is_empty() {
            write!(f, "| {}]", self.prefix.len() + 1)?;
        } else {
            write!(f, " | {}]", self.prefix.len() + 1)?;
        }
        if self.charge != 0 {
            write!(f, "@{}", self.charge)?;
        }
        Ok(())
    }
}

impl fmt::Display for MayaDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.charged().fmt(f)
    }
}

impl FromStr for ChargedMayaDiagram {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let (body, charge) = match text.rsplit_once('@') {
            Some((b, c)) => {
                let charge = c
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| Error::parse(b.len() + 1, format!("malformed charge {c:?}")))?;
                (b.trim_end(), charge)
            }
            None => (text, 0),
        };
        let inner = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| Error::parse(0, "expected a diagram of the form [x1,…,xk | t]"))?;
        let (entries, tail) = inner
            .split_once('|')
            .ok_or_else(|| Error::parse(1, "missing '| t' tail marker"))?;
        let mut prefix = Vec::new();
        let mut pos = 1;
        if !entries.trim().is_empty() {
            for token in entries.split(',') {
                let value = token.trim().parse::<i64>().map_err(|_| {
                    Error::parse(pos, format!("expected an integer, found {token:?}"))
                })?;
                prefix.push(value);
                pos += token.len() + 1;
            }
        }
        let tail_pos = entries.len() + 2;
        let tail_index: usize = tail
            .trim()
            .parse()
            .map_err(|_| Error::parse(tail_pos, format!("malformed tail index {tail:?}")))?;
        if tail_index != prefix.len() + 1 {
            return Err(Error::parse(
                tail_pos,
                format!(
                    "tail index {tail_index} does not follow the {} listed entries",
                    prefix.len()
                ),
            ));
        }
        let diagram = ChargedMayaDiagram::new(charge, prefix.clone())
            .map_err(|e| Error::parse(1, e.to_string()))?;
        if diagram.prefix.len() != prefix.len() {
            return Err(Error::parse(
                tail_pos,
                "listed entries already agree with the tail; the form is not minimal",
            ));
        }
        Ok(diagram)
    }
}

impl FromStr for MayaDiagram {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let d: ChargedMayaDiagram = text.parse()?;
        d.to_maya()
            .ok_or_else(|| Error::invalid(format!("expected charge 0, found {}", d.charge)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{partitions, partitions_up_to};
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn term(sign: i8, prefix: &[i64], charge: i64) -> SignedMaya<ChargedMayaDiagram> {
        SignedMaya::Term {
            sign,
            diagram: ChargedMayaDiagram::new(charge, prefix.to_vec()).unwrap(),
        }
    }

    #[test]
    fn partition_to_maya_examples() {
        assert_eq!(to_maya(&p(&[4, 2, 2])).prefix(), &[3, 0, -1]);
        assert!(to_maya(&Partition::empty()).is_vacuum());
        assert_eq!(to_maya(&p(&[1])).prefix(), &[0]);
        assert_eq!(to_maya(&p(&[1])).entry(2), -2);
    }

    #[test]
    fn maya_to_partition_examples() {
        let d = MayaDiagram::new(vec![3, 0, -1, -4, -5]).unwrap();
        assert_eq!(d.to_partition(), p(&[4, 2, 2]));
        assert_eq!(MayaDiagram::vacuum().to_partition(), Partition::empty());
        let d = MayaDiagram::new(vec![1, -1, -2, -3, -4, -6]).unwrap();
        assert_eq!(d.to_partition(), p(&[2, 1, 1, 1, 1]));
    }

    #[test]
    fn normalize_examples() {
        // Charge-2 sequences from prepending two entries to (4,2,2).
        assert_eq!(
            normalize(&[1, -2, 3, 0, -1], 2),
            term(1, &[3, 1, 0, -1, -2], 2)
        );
        assert_eq!(
            normalize(&[-3, 2, 3, 0, -1], 2),
            term(-1, &[3, 2, 0, -1, -3], 2)
        );
        assert_eq!(normalize(&[1, 1], 0), SignedMaya::Zero);
        // Repeating a tail entry is also zero.
        assert_eq!(normalize(&[5, -3], 0), SignedMaya::Zero);
    }

    #[test]
    fn size_examples() {
        assert_eq!(MayaDiagram::vacuum().size(), 0);
        assert_eq!(MayaDiagram::new(vec![3, 0, -1]).unwrap().size(), 8);
        assert_eq!(MayaDiagram::new(vec![0]).unwrap().size(), 1);
    }

    #[test]
    fn complement_of_a_row() {
        let d = to_maya(&p(&[2]));
        let c = d.complement();
        assert_eq!(c.prefix(), &[-1, 0]);
        assert_eq!(c.entry(3), 2);
        assert_eq!(c.entry(7), 6);
        // Oracle: list the absent integers directly in a window.
        let present: Vec<i64> = (1..=30).map(|i| d.entry(i)).collect();
        let absent: Vec<i64> = (-30..30).filter(|v| !present.contains(v)).collect();
        for (i, &y) in absent.iter().take(20).enumerate() {
            assert_eq!(c.entry(i + 1), y);
        }
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&p(&[3])), p(&[1, 1, 1]));
        assert_eq!(conjugate(&p(&[2, 1])), p(&[2, 1]));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
    }

    fn transpose(lam: &Partition) -> Partition {
        let width = lam.part(0);
        Partition::from_unsorted(
            (1..=width)
                .map(|c| lam.parts().iter().filter(|&&r| r >= c).count() as u32)
                .collect(),
        )
    }

    #[test]
    fn round_trip_all_partitions_up_to_20() {
        for n in 0..=20 {
            for lam in partitions(n) {
                let d = to_maya(&lam);
                assert_eq!(d.size(), n as u64);
                assert_eq!(to_partition(&d), lam);
            }
        }
    }

    #[test]
    fn conjugation_properties_up_to_15() {
        for lam in partitions_up_to(15) {
            let c = conjugate(&lam);
            assert_eq!(c, transpose(&lam));
            assert_eq!(conjugate(&c), lam);
            assert_eq!(c.size(), lam.size());
            let d = to_maya(&lam);
            assert_eq!(d.complement().weight(), d.size() as i64);
        }
        for a in 1..8u32 {
            for b in 0..8usize {
                let hook = p(&[a]).with_parts(1, b);
                let expected = p(&[b as u32 + 1]).with_parts(1, a as usize - 1);
                assert_eq!(conjugate(&hook), expected);
            }
        }
    }

    #[test]
    fn text_form_round_trips() {
        let d = to_maya(&p(&[4, 2, 2]));
        assert_eq!(d.to_string(), "[3,0,-1 | 4]");
        assert_eq!("[3,0,-1 | 4]".parse::<MayaDiagram>().unwrap(), d);
        assert_eq!(MayaDiagram::vacuum().to_string(), "[| 1]");
        assert_eq!(
            "[| 1]".parse::<MayaDiagram>().unwrap(),
            MayaDiagram::vacuum()
        );
        let c = ChargedMayaDiagram::new(2, vec![3, 1, 0, -1, -2]).unwrap();
        assert_eq!(c.to_string(), "[3,1,0,-1,-2 | 6]@2");
        assert_eq!(c.to_string().parse::<ChargedMayaDiagram>().unwrap(), c);
        assert!("[3,0,-1 | 7]".parse::<MayaDiagram>().is_err());
        assert!("[3,0,-4 | 4]".parse::<MayaDiagram>().is_err());
        assert!("[0,1 | 3]".parse::<MayaDiagram>().is_err());
    }

    #[test]
    fn shift_and_charge() {
        let c = ChargedMayaDiagram::new(2, vec![3, 1, 0, -1, -2]).unwrap();
        let s = c.shift(2);
        assert_eq!(s.charge(), 0);
        assert_eq!(s.to_maya().unwrap().to_partition(), p(&[2, 1, 1, 1, 1]));
        assert_eq!(s.shift(-2), c);
    }

    proptest! {
        #[test]
        fn adjacent_swap_flips_sign(
            values in proptest::collection::hash_set(-12i64..12, 1..8),
            pos in 0usize..7,
        ) {
            let head: Vec<i64> = values.into_iter().collect();
            prop_assume!(head.len() >= 2);
            let i = pos % (head.len() - 1);
            let mut swapped = head.clone();
            swapped.swap(i, i + 1);
            let charge = 3;
            let a = normalize(&head, charge);
            let b = normalize(&swapped, charge);
            prop_assert_eq!(a.negate(), b);
        }
    }
}
