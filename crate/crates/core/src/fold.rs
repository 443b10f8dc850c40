//! Finite cores of quotients of the Farey tree.
//!
//! A core is a partial action of `S` and `L` on a finite set of edges
//! (cosets), with edge 0 the base. Where the action is undefined a Farey
//! branch is attached; those slots become stubs of the ribbon graph.

use std::collections::{BTreeMap, VecDeque};

use crate::graph::{RibbonGraph, VertexKind};
use crate::word::{Letter, Word};

/// Partial action: `s` is a partial involution, `l` a partial injection
/// whose complete orbits have length 1 or 3.
#[derive(Debug, Clone, Default)]
pub(crate) struct PartialAction {
    s: Vec<Option<usize>>,
    l: Vec<Option<usize>>,
}

impl PartialAction {
    fn with_nodes(n: usize) -> Self {
        PartialAction {
            s: vec![None; n],
            l: vec![None; n],
        }
    }

    fn add_node(&mut self) -> usize {
        self.s.push(None);
        self.l.push(None);
        self.s.len() - 1
    }

    /// Ribbon graph with edge `i` on half-edges `2i` (circle) and `2i+1`
    /// (bullet); stubs follow from `2n` on.
    pub(crate) fn to_graph(&self) -> RibbonGraph {
        let n = self.s.len();
        let mut alpha: Vec<usize> = (0..2 * n).map(|h| h ^ 1).collect();
        let mut sigma = vec![0; 2 * n];
        let mut kind: Vec<VertexKind> = (0..2 * n)
            .map(|h| if h % 2 == 0 { VertexKind::Circle } else { VertexKind::Bullet })
            .collect();
        let mut new_stub = |k: VertexKind, alpha: &mut Vec<usize>, sigma: &mut Vec<usize>| {
            let h = alpha.len();
            alpha.push(h);
            sigma.push(h);
            kind.push(k);
            h
        };

        for i in 0..n {
            match self.s[i] {
                Some(j) => sigma[2 * i] = 2 * j,
                None => {
                    let t = new_stub(VertexKind::Circle, &mut alpha, &mut sigma);
                    sigma[2 * i] = t;
                    sigma[t] = 2 * i;
                }
            }
        }

        let mut linv = vec![None; n];
        for (i, t) in self.l.iter().enumerate() {
            if let Some(j) = *t {
                linv[j] = Some(i);
            }
        }
        let mut done = vec![false; n];
        for i in 0..n {
            if done[i] {
                continue;
            }
            // back up to the start of an open chain, if any
            let mut start = i;
            while let Some(p) = linv[start] {
                if p == i {
                    break;
                }
                start = p;
            }
            let mut orbit = vec![start];
            let mut x = start;
            let closed = loop {
                match self.l[x] {
                    Some(y) if y == start => break true,
                    Some(y) => {
                        orbit.push(y);
                        x = y;
                    }
                    None => break false,
                }
            };
            for &x in &orbit {
                done[x] = true;
            }
            let mut ring: Vec<usize> = orbit.iter().map(|&x| 2 * x + 1).collect();
            if !closed {
                while ring.len() < 3 {
                    ring.push(new_stub(VertexKind::Bullet, &mut alpha, &mut sigma));
                }
            }
            for k in 0..ring.len() {
                sigma[ring[k]] = ring[(k + 1) % ring.len()];
            }
        }
        RibbonGraph::new(alpha, sigma, kind, Some(0)).expect("partial action yields a valid graph")
    }
}

/// Union-find over edges with relations to be folded.
struct Folder {
    parent: Vec<usize>,
    s_rel: Vec<(usize, usize)>,
    l_rel: Vec<(usize, usize)>,
}

impl Folder {
    fn new() -> Self {
        Folder {
            parent: vec![0],
            s_rel: Vec::new(),
            l_rel: Vec::new(),
        }
    }

    fn fresh(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // the smaller root survives, so the base stays at 0
        let (keep, drop) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[drop] = keep;
        true
    }

    /// Attaches a fresh closed path at the base spelling `w`.
    fn add_loop(&mut self, w: &Word) {
        let k = w.len();
        let mut cur = 0;
        for (i, &letter) in w.letters().iter().enumerate() {
            let next = if i + 1 == k { 0 } else { self.fresh() };
            match letter {
                Letter::S => self.s_rel.push((cur, next)),
                Letter::L => self.l_rel.push((cur, next)),
                Letter::LL => self.l_rel.push((next, cur)),
            }
            cur = next;
        }
    }

    fn canonical_relations(&mut self) {
        let mut s: Vec<(usize, usize)> = Vec::with_capacity(self.s_rel.len());
        for i in 0..self.s_rel.len() {
            let (a, b) = self.s_rel[i];
            let (a, b) = (self.find(a), self.find(b));
            s.push((a.min(b), a.max(b)));
        }
        s.sort_unstable();
        s.dedup();
        let mut l: Vec<(usize, usize)> = Vec::with_capacity(self.l_rel.len());
        for i in 0..self.l_rel.len() {
            let (a, b) = self.l_rel[i];
            l.push((self.find(a), self.find(b)));
        }
        l.sort_unstable();
        l.dedup();
        self.s_rel = s;
        self.l_rel = l;
    }

    /// Folds until `S` is a partial involution and `L` a partial injection
    /// with every two-step chain closed into a triangle.
    fn fold(&mut self) {
        loop {
            self.canonical_relations();
            let mut merges = Vec::new();

            let mut s_nb: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for &(a, b) in &self.s_rel {
                s_nb.entry(a).or_default().push(b);
                if a != b {
                    s_nb.entry(b).or_default().push(a);
                }
            }
            let mut l_out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            let mut l_in: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for &(a, b) in &self.l_rel {
                l_out.entry(a).or_default().push(b);
                l_in.entry(b).or_default().push(a);
            }
            for map in [&s_nb, &l_out, &l_in] {
                for targets in map.values() {
                    for t in &targets[1..] {
                        merges.push((targets[0], *t));
                    }
                }
            }
            if merges.is_empty() {
                // relations are functions now; close L-chains a -> b -> c
                let mut added = Vec::new();
                for &(a, b) in &self.l_rel {
                    if let Some(c) = l_out.get(&b).map(|v| v[0]) {
                        match l_out.get(&c).map(|v| v[0]) {
                            None => added.push((c, a)),
                            Some(d) if d != a => merges.push((d, a)),
                            Some(_) => {}
                        }
                    }
                }
                if added.is_empty() && merges.is_empty() {
                    return;
                }
                self.l_rel.extend(added);
            }
            for (a, b) in merges {
                self.union(a, b);
            }
        }
    }

    /// Relabels the folded classes in breadth-first order from the base.
    fn into_action(mut self) -> PartialAction {
        self.canonical_relations();
        let mut s: BTreeMap<usize, usize> = BTreeMap::new();
        for &(a, b) in &self.s_rel {
            s.insert(a, b);
            s.insert(b, a);
        }
        let l: BTreeMap<usize, usize> = self.l_rel.iter().copied().collect();
        let linv: BTreeMap<usize, usize> = self.l_rel.iter().map(|&(a, b)| (b, a)).collect();

        let root = self.find(0);
        let mut label: BTreeMap<usize, usize> = BTreeMap::from([(root, 0)]);
        let mut order = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for map in [&s, &l, &linv] {
                if let Some(&y) = map.get(&x) {
                    if !label.contains_key(&y) {
                        label.insert(y, order.len());
                        order.push(y);
                        queue.push_back(y);
                    }
                }
            }
        }
        let mut action = PartialAction::with_nodes(order.len());
        for (i, x) in order.iter().enumerate() {
            action.s[i] = s.get(x).map(|y| label[y]);
            action.l[i] = l.get(x).map(|y| label[y]);
        }
        action
    }
}

/// Finite core of the quotient of the Farey tree by the subgroup generated
/// by `gens`: a loop per generator is attached at the base edge and the
/// result is folded. Remaining free slots are stubs. The empty list gives
/// a single edge with every slot stubbed.
pub fn fold_subgroup_graph(gens: &[Word]) -> RibbonGraph {
    let mut folder = Folder::new();
    for g in gens {
        folder.add_loop(g);
    }
    folder.fold();
    folder.into_action().to_graph()
}

/// The ball of radius `radius` in the Farey tree, grown from the bullet
/// end of the base edge: odd steps open the bullets on the boundary, even
/// steps the circles. The circle slot of the base edge stays a stub.
pub fn farey_ball(radius: usize) -> RibbonGraph {
    let mut action = PartialAction::with_nodes(1);
    let mut frontier = vec![0];
    for step in 1..=radius {
        let mut next = Vec::new();
        for &x in &frontier {
            if step % 2 == 1 {
                let a = action.add_node();
                let b = action.add_node();
                action.l[x] = Some(a);
                action.l[a] = Some(b);
                action.l[b] = Some(x);
                next.extend([a, b]);
            } else {
                let y = action.add_node();
                action.s[x] = Some(y);
                action.s[y] = Some(x);
                next.push(y);
            }
        }
        frontier = next;
    }
    action.to_graph()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Side;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_subgroup() {
        let g = fold_subgroup_graph(&[]);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.stubs().len(), 3);
        assert!(g.generators().unwrap().is_empty());
    }

    #[test]
    fn order_two_subgroup() {
        let g = fold_subgroup_graph(&[w("S")]);
        assert_eq!(g.edge_count(), 1);
        // circle closed on itself, bullet side open
        assert_eq!(g.sigma(0), 0);
        assert_eq!(g.stubs().len(), 2);
        assert!(g.stubs().iter().all(|&h| g.kind(h) == VertexKind::Bullet));
        assert_eq!(g.loop_to_word(&[1, 0]).unwrap(), w("S"));
        assert_eq!(g.generators().unwrap(), vec![w("S")]);
    }

    #[test]
    fn parabolic_spine() {
        let g = fold_subgroup_graph(&[w("(LS)^6")]);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.stubs().len(), 6);
        let spine = g.spine().unwrap();
        assert_eq!(spine.edges.len(), 12);
        assert_eq!(spine.branches.len(), 6);
        assert!(spine.branches.iter().all(|&s| s == spine.branches[0]));
        assert_eq!(g.loop_to_word(&spine.walk).unwrap(), w("(LS)^6"));
    }

    #[test]
    fn cark_core() {
        let g = fold_subgroup_graph(&[w("LSLLS")]);
        assert_eq!(g.edge_count(), 4);
        let spine = g.spine().unwrap();
        assert_eq!(spine.edges.len(), 4);
        assert!(spine.branches.contains(&Side::Left));
        assert!(spine.branches.contains(&Side::Right));
        let read = g.loop_to_word(&spine.walk).unwrap();
        assert!(read.is_conjugate_to(&w("LSLLS")));
    }

    #[test]
    fn folding_collapses_relations() {
        // L^3 = 1 folds a triangle onto the base
        let g = fold_subgroup_graph(&[w("L")]);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.sigma(1), 1);
        // the whole group: the modular arc
        let g = fold_subgroup_graph(&[w("S"), w("L")]);
        assert!(g.is_isomorphic(&RibbonGraph::modular_arc()));
        assert!(!g.has_stubs());
        // T and S T^2 S generate Gamma0(2)
        let g = fold_subgroup_graph(&[w("LS"), w("SLSL")]);
        assert!(!g.has_stubs());
        assert_eq!(g.edge_count(), 3);
        assert!(g.contains(&w("LSLS")).unwrap());
        assert!(!g.contains(&w("S")).unwrap());
        assert!(!g.contains(&w("L")).unwrap());
    }

    #[test]
    fn balls() {
        assert_eq!(farey_ball(0).edge_count(), 1);
        assert_eq!(farey_ball(0).stubs().len(), 3);
        assert_eq!(farey_ball(1).edge_count(), 3);
        assert_eq!(farey_ball(2).edge_count(), 5);
        assert_eq!(farey_ball(3).edge_count(), 9);
        for r in 0..7 {
            let g = farey_ball(r);
            assert_eq!(g.vertices().len(), g.edge_count() + 1);
            assert!(g.spine().is_none());
            assert!(g.generators().unwrap().is_empty());
        }
    }
}
