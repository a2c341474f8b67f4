#![allow(dead_code)]

//! Independent oracles: symmetric functions expanded as polynomials in a
//! fixed number of variables, built from first principles.

use std::collections::BTreeMap;

use mayachar::{Basis, LambdaElement, Partition};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Poly = BTreeMap<Vec<u32>, BigRational>;

pub fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn ones(n: u32) -> Partition {
    Partition::new(vec![1; n as usize]).unwrap()
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn add(poly: &mut Poly, exps: Vec<u32>, c: BigRational) {
    if c.is_zero() {
        return;
    }
    let e = poly.entry(exps.clone()).or_insert_with(BigRational::zero);
    *e += c;
    if e.is_zero() {
        poly.remove(&exps);
    }
}

pub fn constant(d: usize, c: BigRational) -> Poly {
    let mut out = Poly::new();
    add(&mut out, vec![0; d], c);
    out
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            add(&mut out, e, ca * cb);
        }
    }
    out
}

/// `Σ_i x_i^r`.
pub fn power_sum(r: u32, d: usize) -> Poly {
    let mut out = Poly::new();
    for i in 0..d {
        let mut e = vec![0; d];
        e[i] = r;
        add(&mut out, e, BigRational::one());
    }
    out
}

/// All monomials of degree `r` (multisets of variables).
pub fn complete(r: u32, d: usize) -> Poly {
    let mut out = Poly::new();
    fn go(i: usize, left: u32, e: &mut Vec<u32>, out: &mut Poly) {
        if i + 1 == e.len() {
            e[i] = left;
            add(out, e.clone(), BigRational::one());
            e[i] = 0;
            return;
        }
        for k in 0..=left {
            e[i] = k;
            go(i + 1, left - k, e, out);
        }
        e[i] = 0;
    }
    if d == 0 {
        return if r == 0 {
            constant(0, BigRational::one())
        } else {
            out
        };
    }
    go(0, r, &mut vec![0; d], &mut out);
    out
}

/// Square-free monomials of degree `r` (subsets of variables).
pub fn elementary(r: u32, d: usize) -> Poly {
    let mut out = Poly::new();
    for mask in 0u32..(1 << d) {
        if mask.count_ones() == r {
            let e = (0..d).map(|i| (mask >> i) & 1).collect();
            add(&mut out, e, BigRational::one());
        }
    }
    out
}

/// Sum over semistandard tableaux of shape λ with entries `< d`.
pub fn schur_poly(lambda: &Partition, d: usize) -> Poly {
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len as usize).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<usize>> = lambda
        .parts()
        .iter()
        .map(|&l| vec![0; l as usize])
        .collect();
    let mut out = Poly::new();
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        d: usize,
        out: &mut Poly,
    ) {
        if k == cells.len() {
            let mut e = vec![0u32; d];
            for row in grid.iter() {
                for &v in row {
                    e[v] += 1;
                }
            }
            add(out, e, BigRational::one());
            return;
        }
        let (i, j) = cells[k];
        let lo_left = if j > 0 { grid[i][j - 1] } else { 0 };
        let lo_above = if i > 0 { grid[i - 1][j] + 1 } else { 0 };
        for v in lo_left.max(lo_above)..d {
            grid[i][j] = v;
            go(k + 1, cells, grid, d, out);
        }
    }
    go(0, &cells, &mut grid, d, &mut out);
    out
}

pub fn basis_poly(basis: Basis, lambda: &Partition, d: usize) -> Poly {
    let single: fn(u32, usize) -> Poly = match basis {
        Basis::Schur => return schur_poly(lambda, d),
        Basis::Power => power_sum,
        Basis::Homog => complete,
        Basis::Elem => elementary,
    };
    lambda
        .parts()
        .iter()
        .fold(constant(d, BigRational::one()), |acc, &r| {
            mul(&acc, &single(r, d))
        })
}

pub fn to_poly(f: &LambdaElement, d: usize) -> Poly {
    let mut out = Poly::new();
    for (lambda, c) in f.terms() {
        for (e, v) in basis_poly(f.basis(), lambda, d) {
            add(&mut out, e, v * c);
        }
    }
    out
}
