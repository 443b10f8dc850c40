//! Coset actions of the modular group on the classical congruence
//! subgroups.
//!
//! Cosets `Hg` are identified with invariants of `g` reduced mod `N`:
//!
//! * `Gamma0(N)`: the bottom row `(c : d)` as a point of `P^1(Z/N)`;
//! * `Gamma1(N)`: the bottom row `(c, d)` up to sign;
//! * `Gamma(N)`: the whole matrix mod `N`, up to sign.
//!
//! `S` and `L` act by right multiplication. The identity coset is point 0.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::graph::RibbonGraph;
use crate::perm::Perm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Gamma0,
    Gamma1,
    GammaFull,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gamma0" | "g0" => Ok(Family::Gamma0),
            "gamma1" | "g1" => Ok(Family::Gamma1),
            "gamma" | "full" => Ok(Family::GammaFull),
            _ => Err(Error::parse("congruence family", s)),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Gamma0 => "gamma0",
            Family::Gamma1 => "gamma1",
            Family::GammaFull => "gamma",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CongruenceSpec {
    pub family: Family,
    pub level: u64,
}

impl CongruenceSpec {
    pub fn new(family: Family, level: u64) -> Result<Self> {
        if level < 1 {
            return Err(Error::BadLevel);
        }
        Ok(CongruenceSpec { family, level })
    }
}

type Row = (u64, u64);

fn neg(x: u64, n: u64) -> u64 {
    (n - x) % n
}

/// Right action on a row vector `(c, d)`.
fn row_s((c, d): Row, n: u64) -> Row {
    (d, neg(c, n))
}

fn row_l((c, d): Row, n: u64) -> Row {
    ((c + d) % n, neg(c, n))
}

fn units(n: u64) -> Vec<u64> {
    (1..=n).map(|u| u % n).filter(|&u| u.gcd(&n) == 1).collect()
}

fn p1_canonical((c, d): Row, n: u64, units: &[u64]) -> Row {
    units
        .iter()
        .map(|&u| (c * u % n, d * u % n))
        .min()
        .expect("at least one unit")
}

fn pm_canonical((c, d): Row, n: u64) -> Row {
    (c, d).min((neg(c, n), neg(d, n)))
}

fn action_on_points(points: &[Row], canon: impl Fn(Row) -> Row, n: u64) -> (Perm, Perm) {
    let index: HashMap<Row, usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let s = points.iter().map(|&p| index[&canon(row_s(p, n))]).collect();
    let l = points.iter().map(|&p| index[&canon(row_l(p, n))]).collect();
    (s, l)
}

fn gamma0(n: u64) -> (Perm, Perm) {
    let units = units(n);
    let mut points = BTreeSet::new();
    for c in 0..n {
        for d in 0..n {
            if c.gcd(&d).gcd(&n) == 1 {
                points.insert(p1_canonical((c, d), n, &units));
            }
        }
    }
    let points: Vec<Row> = points.into_iter().collect();
    action_on_points(&points, |p| p1_canonical(p, n, &units), n)
}

fn gamma1(n: u64) -> (Perm, Perm) {
    let mut points = BTreeSet::new();
    for c in 0..n {
        for d in 0..n {
            if c.gcd(&d).gcd(&n) == 1 {
                points.insert(pm_canonical((c, d), n));
            }
        }
    }
    let points: Vec<Row> = points.into_iter().collect();
    action_on_points(&points, |p| pm_canonical(p, n), n)
}

type Elt = [u64; 4];

fn elt_canonical(m: Elt, n: u64) -> Elt {
    let negm = m.map(|x| neg(x, n));
    m.min(negm)
}

fn elt_mul(a: Elt, b: Elt, n: u64) -> Elt {
    [
        (a[0] * b[0] + a[1] * b[2]) % n,
        (a[0] * b[1] + a[1] * b[3]) % n,
        (a[2] * b[0] + a[3] * b[2]) % n,
        (a[2] * b[1] + a[3] * b[3]) % n,
    ]
}

fn gamma_full(n: u64) -> (Perm, Perm) {
    let m = |x: i64| x.rem_euclid(n as i64) as u64;
    let s_mat = [m(0), m(-1), m(1), m(0)];
    let l_mat = [m(1), m(-1), m(1), m(0)];
    let id = elt_canonical([m(1), 0, 0, m(1)], n);
    let mut index: HashMap<Elt, usize> = HashMap::from([(id, 0)]);
    let mut elts = vec![id];
    let mut s = Vec::new();
    let mut l = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    let mut lookup = |e: Elt, elts: &mut Vec<Elt>, queue: &mut VecDeque<usize>| -> usize {
        let e = elt_canonical(e, n);
        *index.entry(e).or_insert_with(|| {
            elts.push(e);
            queue.push_back(elts.len() - 1);
            elts.len() - 1
        })
    };
    while let Some(i) = queue.pop_front() {
        let x = elts[i];
        let si = lookup(elt_mul(x, s_mat, n), &mut elts, &mut queue);
        let li = lookup(elt_mul(x, l_mat, n), &mut elts, &mut queue);
        for (v, j) in [(&mut s, si), (&mut l, li)] {
            if v.len() <= i {
                v.resize(i + 1, usize::MAX);
            }
            v[i] = j;
        }
    }
    (s, l)
}

/// Images of `S` and `L` acting on the cosets of the subgroup.
pub fn coset_action(spec: &CongruenceSpec) -> (Perm, Perm) {
    let n = spec.level;
    match spec.family {
        Family::Gamma0 => gamma0(n),
        Family::Gamma1 => gamma1(n),
        Family::GammaFull => gamma_full(n),
    }
}

pub fn congruence_graph(spec: &CongruenceSpec) -> Result<RibbonGraph> {
    let (s, l) = coset_action(spec);
    RibbonGraph::from_permutation_pair(&s, &l)
}

/// Index of `Gamma0(N)` by the product formula `N prod (1 + 1/p)`.
pub fn gamma0_index(n: u64) -> u64 {
    let mut m = n;
    let mut index = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            index = index / p * (p + 1);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        index = index / m * (m + 1);
    }
    index
}
