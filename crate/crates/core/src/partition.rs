//! Integer partitions: the labels of characters and of cycle types.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The derived ordering is lexicographic on the parts, so sorting a slice of
/// partitions of the same size and reversing it gives reverse lexicographic
/// order, `(n), (n-1,1), …, (1^n)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for (i, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(Error::invalid(format!("part {} is zero", i + 1)));
            }
            if i > 0 && parts[i - 1] < p {
                return Err(Error::invalid(format!(
                    "parts are not weakly decreasing at position {}",
                    i + 1
                )));
            }
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts, ℓ(λ).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), with zero padding past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_all_odd(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1)
    }

    pub fn has_no_part_divisible_by(&self, m: u32) -> bool {
        m != 0 && self.0.iter().all(|p| p % m != 0)
    }

    /// `self ∪ (part)`: append a part and re-sort.
    pub fn with_part(&self, part: u32) -> Self {
        self.with_parts(part, 1)
    }

    /// `self ∪ (part^count)`.
    pub fn with_parts(&self, part: u32, count: usize) -> Self {
        let mut parts = self.0.clone();
        parts.extend(std::iter::repeat_n(part, count));
        Partition::from_unsorted(parts)
    }

    /// Union of two partitions (the cycle type of a product of disjoint permutations).
    pub fn union(&self, other: &Partition) -> Self {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            if j == other.0.len() || (i < self.0.len() && self.0[i] >= other.0[j]) {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        Partition(parts)
    }

    /// Multiply every part by `m`.
    pub fn scaled(&self, m: u32) -> Self {
        Partition(self.0.iter().map(|p| p * m).collect())
    }

    /// Remove one occurrence of `part`, if present.
    pub fn without_part(&self, part: u32) -> Option<Self> {
        let pos = self.0.iter().position(|&p| p == part)?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Some(Partition(parts))
    }

    /// Multiplicity of `part`.
    pub fn multiplicity(&self, part: u32) -> usize {
        self.0.iter().filter(|&&p| p == part).count()
    }

    /// `(part, multiplicity)` pairs in decreasing order of part.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// z_λ = ∏ i^{m_i} m_i!, the centralizer order of a permutation of cycle type λ.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (part, mult) in self.multiplicities() {
            for k in 1..=mult {
                acc *= BigInt::from(part) * BigInt::from(k);
            }
        }
        acc
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Self {
        crate::maya::conjugate(self)
    }

    /// Multiplicative form, e.g. `4^2 3 1^3`.
    pub fn to_multiplicative(&self) -> String {
        self.multiplicities()
            .into_iter()
            .map(|(p, m)| {
                if m == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{m}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Partition {
    /// Comma form `4,2,2`; the empty partition prints as `∅`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts the comma form `4,2,2` and the multiplicative form `4^2 3 1^3`.
    /// The empty partition is written as an empty string, `()` or `∅`.
    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let offset = text.len() - text.trim_start().len();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        let offset = if inner.len() != trimmed.len() {
            offset + 1
        } else {
            offset
        };
        if inner.trim().is_empty() || inner.trim() == "∅" {
            return Ok(Partition::empty());
        }
        if inner.contains(',') {
            parse_comma(inner, offset)
        } else {
            parse_multiplicative(inner, offset)
        }
    }
}

fn parse_number(token: &str, position: usize) -> Result<u32> {
    let value: i64 = token
        .trim()
        .parse()
        .map_err(|_| Error::parse(position, format!("expected an integer, found {token:?}")))?;
    if value <= 0 {
        return Err(Error::parse(
            position,
            format!("part {value} is not positive"),
        ));
    }
    u32::try_from(value).map_err(|_| Error::parse(position, "part too large"))
}

fn parse_comma(text: &str, offset: usize) -> Result<Partition> {
    let mut parts = Vec::new();
    let mut pos = offset;
    for token in text.split(',') {
        let lead = token.len() - token.trim_start().len();
        let part = parse_number(token, pos + lead)?;
        if let Some(&prev) = parts.last() {
            if prev < part {
                return Err(Error::parse(
                    pos + lead,
                    format!(
                        "part {part} follows smaller part {prev}; parts must be weakly decreasing"
                    ),
                ));
            }
        }
        parts.push(part);
        pos += token.chars().count() + 1;
    }
    Ok(Partition(parts))
}

fn parse_multiplicative(text: &str, offset: usize) -> Result<Partition> {
    let mut parts: Vec<u32> = Vec::new();
    let mut pos = offset;
    let mut rest = text;
    while !rest.is_empty() {
        let skip = rest.len() - rest.trim_start().len();
        pos += rest[..skip].chars().count();
        rest = &rest[skip..];
        if rest.is_empty() {
            break;
        }
        let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
        let token = &rest[..end];
        let (base, exp) = match token.split_once('^') {
            Some((b, e)) => {
                let exp_pos = pos + b.chars().count() + 1;
                let exp: usize = e
                    .parse()
                    .map_err(|_| Error::parse(exp_pos, format!("malformed exponent {e:?}")))?;
                if exp == 0 {
                    return Err(Error::parse(exp_pos, "exponent must be positive"));
                }
                (b, exp)
            }
            None => (token, 1),
        };
        let part = parse_number(base, pos)?;
        if let Some(&prev) = parts.last() {
            if prev <= part {
                return Err(Error::parse(
                    pos,
                    format!("part {part} follows part {prev}; list parts in decreasing order"),
                ));
            }
        }
        parts.extend(std::iter::repeat_n(part, exp));
        pos += token.chars().count();
        rest = &rest[end..];
    }
    Ok(Partition(parts))
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    out
}

fn fill_partitions(
    remaining: u32,
    max_part: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        fill_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// Partitions of every size `0..=max_size`, smallest size first.
pub fn partitions_up_to(max_size: u32) -> Vec<Partition> {
    (0..=max_size).flat_map(partitions).collect()
}

/// Strict partitions of `n`, reverse lexicographic.
pub fn strict_partitions(n: u32) -> Vec<Partition> {
    partitions(n)
        .into_iter()
        .filter(Partition::is_strict)
        .collect()
}

/// All-odd partitions of `n`, reverse lexicographic.
pub fn odd_partitions(n: u32) -> Vec<Partition> {
    partitions(n)
        .into_iter()
        .filter(Partition::is_all_odd)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn parses_comma_and_multiplicative_forms() {
        assert_eq!("4,2,2".parse::<Partition>().unwrap(), p(&[4, 2, 2]));
        assert_eq!(
            "4^2 3 1^3".parse::<Partition>().unwrap(),
            p(&[4, 4, 3, 1, 1, 1])
        );
        assert_eq!("2 1^4".parse::<Partition>().unwrap(), p(&[2, 1, 1, 1, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("∅".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("(3,1)".parse::<Partition>().unwrap(), p(&[3, 1]));
    }

    #[test]
    fn rejects_malformed_partitions() {
        match "2,3".parse::<Partition>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!("3,0".parse::<Partition>().is_err());
        assert!("3,-1".parse::<Partition>().is_err());
        assert!("4^x 1".parse::<Partition>().is_err());
        assert!("4^0".parse::<Partition>().is_err());
        assert!("1 2".parse::<Partition>().is_err());
        assert!("a,b".parse::<Partition>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for lam in partitions_up_to(8) {
            let text = lam.to_string();
            assert_eq!(text.parse::<Partition>().unwrap(), lam);
            if !lam.is_empty() {
                assert_eq!(lam.to_multiplicative().parse::<Partition>().unwrap(), lam);
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        // Euler: strict and all-odd partitions are equinumerous.
        for n in 0..=15 {
            assert_eq!(strict_partitions(n).len(), odd_partitions(n).len());
        }
    }

    #[test]
    fn reverse_lex_order() {
        let got: Vec<String> = partitions(4).iter().map(|l| l.to_string()).collect();
        assert_eq!(got, vec!["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
    }

    #[test]
    fn z_values() {
        assert_eq!(p(&[2]).z(), BigInt::from(2));
        assert_eq!(p(&[1, 1, 1]).z(), BigInt::from(6));
        assert_eq!(p(&[2, 2, 1]).z(), BigInt::from(8));
        assert_eq!(Partition::empty().z(), BigInt::from(1));
    }

    #[test]
    fn predicates_and_unions() {
        assert!(p(&[4, 3, 2]).is_strict());
        assert!(!p(&[4, 2, 2]).is_strict());
        assert!(p(&[5, 1]).is_all_odd());
        assert!(p(&[5, 1]).has_no_part_divisible_by(3));
        assert!(!p(&[6, 1]).has_no_part_divisible_by(3));
        assert_eq!(p(&[3, 1, 1, 1]).with_part(2), p(&[3, 2, 1, 1, 1]));
        assert_eq!(p(&[3, 1]).with_parts(2, 2), p(&[3, 2, 2, 1]));
        assert_eq!(p(&[3, 1]).union(&p(&[2, 2])), p(&[3, 2, 2, 1]));
    }
}
