//! Permutations on `0..n` and permutation group orders.
//!
//! Permutations are image vectors; `compose(a, b)` applies `a` first.

use num_bigint::BigUint;
use num_traits::One;

pub type Perm = Vec<usize>;

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

pub fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i == x)
}

/// `a` then `b`.
pub fn compose(a: &[usize], b: &[usize]) -> Perm {
    a.iter().map(|&x| b[x]).collect()
}

pub fn inverse(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// Cycles, each starting at its smallest point, ordered by that point.
pub fn cycles(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cyc.push(x);
            x = p[x];
        }
        out.push(cyc);
    }
    out
}

/// Whether the group generated by `gens` acts transitively on `0..n`.
pub fn is_transitive(n: usize, gens: &[&[usize]]) -> bool {
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g[x];
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == n
}

struct Level {
    base: usize,
    gens: Vec<Perm>,
    /// `transversal[p]` maps the base point to `p`.
    transversal: Vec<Option<Perm>>,
    orbit: Vec<usize>,
}

/// Base and strong generating set, built by deterministic Schreier-Sims.
pub struct StabilizerChain {
    n: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(n: usize, gens: &[Perm]) -> Self {
        let mut chain = StabilizerChain { n, levels: Vec::new() };
        for g in gens {
            if !is_identity(g) {
                let (residue, level) = chain.sift(g.clone(), 0);
                if !is_identity(&residue) {
                    chain.add_generator(0, level, residue);
                }
            }
        }
        chain
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, g: &[usize]) -> bool {
        is_identity(&self.sift(g.to_vec(), 0).0)
    }

    /// Strips `g` through levels `from..`; returns the residue and the level
    /// where stripping stopped.
    fn sift(&self, mut g: Perm, from: usize) -> (Perm, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let beta = g[level.base];
            match &level.transversal[beta] {
                Some(u) => g = compose(&g, &inverse(u)),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    /// Adds `g`, which fixes the first `j` base points, to the strong
    /// generators of levels `lo..=j`, deepest first.
    fn add_generator(&mut self, lo: usize, j: usize, g: Perm) {
        for k in (lo..=j).rev() {
            self.extend_level(k, g.clone());
        }
    }

    fn extend_level(&mut self, i: usize, g: Perm) {
        if i == self.levels.len() {
            let base = (0..self.n)
                .find(|&x| g[x] != x)
                .expect("non-identity generator moves a point");
            let mut transversal = vec![None; self.n];
            transversal[base] = Some(identity(self.n));
            self.levels.push(Level {
                base,
                gens: Vec::new(),
                transversal,
                orbit: vec![base],
            });
        }
        self.levels[i].gens.push(g);
        let new_gen = self.levels[i].gens.len() - 1;

        // Old orbit points only need the new generator; points discovered
        // here need every generator.
        let old_len = self.levels[i].orbit.len();
        let mut idx = 0;
        while idx < self.levels[i].orbit.len() {
            let p = self.levels[i].orbit[idx];
            let gen_range = if idx < old_len {
                new_gen..new_gen + 1
            } else {
                0..self.levels[i].gens.len()
            };
            for gi in gen_range {
                let level = &self.levels[i];
                let s = &level.gens[gi];
                let up = level.transversal[p].as_ref().expect("orbit point");
                let q = s[p];
                let ups = compose(up, s);
                if level.transversal[q].is_none() {
                    let level = &mut self.levels[i];
                    level.transversal[q] = Some(ups);
                    level.orbit.push(q);
                } else {
                    let uq = level.transversal[q].as_ref().expect("orbit point");
                    let schreier = compose(&ups, &inverse(uq));
                    if !is_identity(&schreier) {
                        let (residue, j) = self.sift(schreier, i + 1);
                        if !is_identity(&residue) {
                            self.add_generator(i + 1, j, residue);
                        }
                    }
                }
            }
            idx += 1;
        }
    }
}

/// Order of the group generated by `gens` on `0..n`.
pub fn group_order(n: usize, gens: &[Perm]) -> BigUint {
    StabilizerChain::new(n, gens).order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn closure_order(n: usize, gens: &[Perm]) -> usize {
        let mut seen: HashSet<Perm> = HashSet::new();
        let id = identity(n);
        let mut stack = vec![id.clone()];
        seen.insert(id);
        while let Some(x) = stack.pop() {
            for g in gens {
                let y = compose(&x, g);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn symmetric_and_cyclic_groups() {
        let transposition = vec![1, 0, 2, 3, 4];
        let five_cycle = vec![1, 2, 3, 4, 0];
        assert_eq!(
            group_order(5, &[transposition, five_cycle.clone()]),
            BigUint::from(120u32)
        );
        assert_eq!(group_order(5, &[five_cycle]), BigUint::from(5u32));
        assert_eq!(group_order(3, &[]), BigUint::one());
    }

    #[test]
    fn large_symmetric_group() {
        let n = 30;
        let t: Perm = (0..n).map(|i| if i < 2 { 1 - i } else { i }).collect();
        let c: Perm = (0..n).map(|i| (i + 1) % n).collect();
        let expect = (1..=n as u32).fold(BigUint::one(), |a, k| a * BigUint::from(k));
        assert_eq!(group_order(n, &[t, c]), expect);
    }

    #[test]
    fn agrees_with_closure_on_small_groups() {
        // a few groups on 6 and 7 points
        let cases: Vec<(usize, Vec<Perm>)> = vec![
            (6, vec![vec![1, 0, 3, 2, 5, 4], vec![2, 4, 0, 5, 1, 3]]),
            (6, vec![vec![1, 2, 0, 4, 5, 3]]),
            (7, vec![vec![1, 2, 3, 4, 5, 6, 0], vec![0, 2, 4, 6, 1, 3, 5]]),
            (6, vec![vec![1, 0, 2, 3, 4, 5], vec![0, 2, 1, 3, 4, 5], vec![0, 1, 2, 4, 3, 5]]),
        ];
        for (n, gens) in cases {
            assert_eq!(
                group_order(n, &gens),
                BigUint::from(closure_order(n, &gens)),
                "{gens:?}"
            );
        }
    }

    #[test]
    fn membership() {
        let chain = StabilizerChain::new(4, &[vec![1, 2, 3, 0]]);
        assert!(chain.contains(&[2, 3, 0, 1]));
        assert!(!chain.contains(&[1, 0, 2, 3]));
    }

    #[test]
    fn cycle_decomposition() {
        assert_eq!(cycles(&[1, 0, 2]), vec![vec![0, 1], vec![2]]);
        assert!(is_transitive(3, &[&[1, 2, 0]]));
        assert!(!is_transitive(3, &[&[1, 0, 2]]));
    }
}
