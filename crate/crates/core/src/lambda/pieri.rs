//! Pieri rules in the Schur basis and the Bernstein operators built from them.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::tables::{add_to, Memo, Terms};
use crate::partition::Partition;

/// All `ρ ⊆ ν` with `ν/ρ` a vertical strip of `size` boxes.
pub(crate) fn remove_vertical_strip(nu: &Partition, size: u32) -> Vec<Partition> {
    let parts = nu.parts();
    let l = parts.len();
    let mut out = Vec::new();
    if size as usize > l {
        return out;
    }
    let mut cur = parts.to_vec();

    // Decide rows from the bottom up so the "row below" is already final.
    fn go(row: usize, left: u32, parts: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left as usize > row {
            return;
        }
        if row == 0 {
            if left == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        let r = row - 1;
        let below = cur.get(r + 1).copied().unwrap_or(0);
        go(r, left, parts, cur, out);
        if left > 0 && parts[r] > below {
            cur[r] -= 1;
            go(r, left - 1, parts, cur, out);
            cur[r] += 1;
        }
    }

    go(l, size, parts, &mut cur, &mut out);
    out
}

/// All `κ ⊇ ν` with `κ/ν` a horizontal strip of `size` boxes.
pub(crate) fn add_horizontal_strip(nu: &Partition, size: u32) -> Vec<Partition> {
    let mut parts = nu.parts().to_vec();
    parts.push(0);
    let mut out = Vec::new();
    let mut cur = parts.clone();

    fn go(row: usize, left: u32, parts: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row == parts.len() {
            if left == 0 {
                out.push(Partition::from_unsorted(
                    cur.iter().copied().filter(|&x| x > 0).collect(),
                ));
            }
            return;
        }
        let cap = if row == 0 {
            left
        } else {
            (parts[row - 1] - parts[row]).min(left)
        };
        for add in 0..=cap {
            cur[row] = parts[row] + add;
            go(row + 1, left - add, parts, cur, out);
        }
        cur[row] = parts[row];
    }

    go(0, size, &parts, &mut cur, &mut out);
    out
}

/// `B_n(s_ν) = Σ_i (-1)^i h_{n+i} e_i^⊥ s_ν`, in the Schur basis.
pub(crate) fn bernstein_schur(n: i64, nu: &Partition) -> Arc<Terms> {
    static MEMO: Memo<(i64, Partition), Terms> = Memo::new();
    MEMO.get_or_compute(&(n, nu.clone()), || {
        let mut out = Terms::new();
        for i in 0..=nu.size() {
            let j = n + i as i64;
            if j < 0 {
                continue;
            }
            let sign = if i % 2 == 0 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            for rho in remove_vertical_strip(nu, i) {
                for kappa in add_horizontal_strip(&rho, j as u32) {
                    add_to(&mut out, kappa, sign.clone());
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn strips() {
        let mut got = add_horizontal_strip(&p(&[1]), 1);
        got.sort();
        assert_eq!(got, vec![p(&[1, 1]), p(&[2])]);
        let mut got = remove_vertical_strip(&p(&[2, 1]), 1);
        got.sort();
        assert_eq!(got, vec![p(&[1, 1]), p(&[2])]);
        assert_eq!(remove_vertical_strip(&p(&[2]), 2), vec![]);
        assert_eq!(
            remove_vertical_strip(&p(&[1, 1]), 2),
            vec![Partition::empty()]
        );
        assert_eq!(add_horizontal_strip(&Partition::empty(), 3), vec![p(&[3])]);
    }
}
