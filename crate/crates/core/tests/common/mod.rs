//! Independent realizations used as test oracles.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use vogan::{Family, VoganDiagram};

/// Positive roots generated from the Cartan matrix alone by raising simple
/// root strings height by height.
pub fn roots_from_cartan(a: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let n = a.len();
    let unit = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let mut all: HashSet<Vec<i64>> = (0..n).map(unit).collect();
    let mut layer: Vec<Vec<i64>> = (0..n).map(unit).collect();
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| a[i][j] * beta[j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        layer = next.into_iter().filter(|r| !all.contains(r)).collect();
        all.extend(layer.iter().cloned());
    }
    all.into_iter().collect()
}

/// The standard orthonormal-basis realization of a classical root system.
pub struct Realization {
    pub simple: Vec<Vec<i64>>,
    pub positive: Vec<Vec<i64>>,
    family: Family,
    rank: usize,
}

fn e(dim: usize, a: usize, s: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[a] = s;
    v
}

fn add(x: &[i64], y: &[i64]) -> Vec<i64> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn dot(x: &[i64], y: &[i64]) -> i64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

impl Realization {
    pub fn new(family: Family, rank: usize) -> Self {
        let dim = if family == Family::A { rank + 1 } else { rank };
        let diff = |a: usize, b: usize| add(&e(dim, a, 1), &e(dim, b, -1));
        let plus = |a: usize, b: usize| add(&e(dim, a, 1), &e(dim, b, 1));
        let mut simple: Vec<Vec<i64>> = (0..rank - 1).map(|i| diff(i, i + 1)).collect();
        simple.push(match family {
            Family::A => diff(rank - 1, rank),
            Family::B => e(dim, rank - 1, 1),
            Family::C => e(dim, rank - 1, 2),
            Family::D => plus(rank - 2, rank - 1),
        });
        let mut positive = Vec::new();
        for a in 0..dim {
            for b in a + 1..dim {
                positive.push(diff(a, b));
                if family != Family::A {
                    positive.push(plus(a, b));
                }
            }
            match family {
                Family::B => positive.push(e(dim, a, 1)),
                Family::C => positive.push(e(dim, a, 2)),
                _ => {}
            }
        }
        Realization { simple, positive, family, rank }
    }

    /// Coefficients of an orthonormal-basis vector over the simple roots.
    pub fn coefficients(&self, v: &[i64]) -> Vec<i64> {
        let l = self.rank;
        let partial: Vec<i64> = v.iter().scan(0, |s, x| {
            *s += x;
            Some(*s)
        }).collect();
        let mut c: Vec<i64> = partial[..l].to_vec();
        match self.family {
            Family::A | Family::B => {}
            Family::C => c[l - 1] = partial[l - 1] / 2,
            Family::D => {
                c[l - 1] = partial[l - 1] / 2;
                c[l - 2] = c[l - 1] - v[l - 1];
            }
        }
        c
    }

    /// ξ_i = 2(φ_S, γ_i)/(γ_i, γ_i) for every node, from inner products.
    pub fn xi(&self, diagram: &VoganDiagram) -> Vec<i64> {
        let dim = self.simple[0].len();
        let mut phi = vec![0i64; dim];
        for root in &self.positive {
            let c = self.coefficients(root);
            let touched: i64 = diagram.painted().iter().map(|&i| c[i - 1]).sum();
            let eps = if touched % 2 == 1 { 1 } else { -1 };
            let in_span = touched == 0;
            let weight = -2 * eps - if in_span { 2 } else { 0 };
            for (p, r) in phi.iter_mut().zip(root) {
                *p += weight * r;
            }
        }
        self.simple
            .iter()
            .map(|g| {
                let num = 2 * dot(&phi, g);
                let den = dot(g, g);
                assert_eq!(num % den, 0, "ξ must be integral");
                num / den
            })
            .collect()
    }
}

pub fn painted_from_mask(rank: usize, mask: u64) -> Vec<usize> {
    (1..=rank).filter(|i| mask & (1 << (i - 1)) != 0).collect()
}

pub fn all_diagrams(family: Family, rank: usize) -> impl Iterator<Item = VoganDiagram> {
    (1u64..1 << rank).map(move |mask| VoganDiagram::new(family, rank, painted_from_mask(rank, mask)).unwrap())
}
