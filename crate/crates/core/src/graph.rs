//! Modular graphs: bipartite ribbon graphs covering the modular arc `o--*`.
//!
//! Half-edges are numbered `0..n`. `alpha` pairs the two half-edges of an
//! edge, `sigma` rotates counterclockwise around a vertex, and every
//! half-edge carries the kind of the vertex it sits on: a circle (the order
//! two point, degree 1 or 2) or a bullet (the order three point, degree 1
//! or 3).
//!
//! Quotients by subgroups of infinite index are stored as a finite core.
//! Each missing slot around a vertex is a *stub*: a half-edge in the vertex
//! rotation whose `alpha` is itself. A whole Farey branch hangs off every
//! stub.
//!
//! Conventions used throughout:
//!
//! * the edges of a graph are cosets `Hg`; crossing the circle end of an
//!   edge multiplies by `S`, and crossing a bullet from half-edge `a` to
//!   `sigma(a)` multiplies by `L` (a left turn), to `sigma^2(a)` by `LL`;
//! * faces are the orbits of `sigma . alpha`, and the length of a face is
//!   the number of bullet half-edges on it (the cusp width).

use std::collections::VecDeque;
use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{self, Perm};
use crate::word::{Letter, Word};

pub const GRAPH_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    Circle,
    Bullet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonGraph {
    alpha: Vec<usize>,
    sigma: Vec<usize>,
    kind: Vec<VertexKind>,
    base: Option<usize>,
}

/// A vertex: one cycle of `sigma`, listed from its smallest half-edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub kind: VertexKind,
    pub half_edges: Vec<usize>,
}

impl Vertex {
    pub fn degree(&self) -> usize {
        self.half_edges.len()
    }
}

/// A closed face walk, as the half-edges it visits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub half_edges: Vec<usize>,
    /// Number of bullet visits, i.e. the width of the cusp.
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Passport {
    pub edges: usize,
    pub genus: usize,
    pub punctures: usize,
    pub circle_degrees: Vec<usize>,
    pub bullet_degrees: Vec<usize>,
    pub face_degrees: Vec<usize>,
    #[serde(serialize_with = "crate::json::serialize_biguint")]
    pub monodromy_order: BigUint,
}

impl Passport {
    pub fn vertex_count(&self) -> usize {
        self.circle_degrees.len() + self.bullet_degrees.len()
    }

    /// `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edges as i64 + self.face_degrees.len() as i64
    }
}

/// Which side of the walking direction a Farey branch leaves the spine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

/// The unique cycle of a graph whose core is a single loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spine {
    /// Spine edges in walking order, starting from the base edge when it
    /// lies on the spine.
    pub edges: Vec<usize>,
    /// Closed walk around the spine, usable with [`RibbonGraph::loop_to_word`].
    pub walk: Vec<usize>,
    /// Side of every stub hanging directly off a spine vertex, in walking
    /// order.
    pub branches: Vec<Side>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct GraphJson {
    schema_version: u32,
    half_edges: usize,
    alpha: Vec<usize>,
    sigma: Vec<usize>,
    vtype: Vec<VertexKind>,
    base: Option<usize>,
    stubs: Vec<usize>,
}

impl RibbonGraph {
    /// Checked constructor.
    pub fn new(
        alpha: Vec<usize>,
        sigma: Vec<usize>,
        kind: Vec<VertexKind>,
        base: Option<usize>,
    ) -> Result<Self> {
        let g = RibbonGraph { alpha, sigma, kind, base };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        let n = self.alpha.len();
        let bad = |m: &str| Err(Error::InvalidGraph(m.to_string()));
        if n == 0 || self.sigma.len() != n || self.kind.len() != n {
            return bad("alpha, sigma and vtype must be nonempty and of equal length");
        }
        if !perm::is_permutation(&self.sigma) {
            return bad("sigma is not a permutation");
        }
        if self.alpha.iter().any(|&a| a >= n) || (0..n).any(|h| self.alpha[self.alpha[h]] != h) {
            return bad("alpha is not an involution");
        }
        for h in 0..n {
            let a = self.alpha[h];
            if a != h && self.kind[a] == self.kind[h] {
                return bad("an edge joins two vertices of the same kind");
            }
        }
        for cyc in perm::cycles(&self.sigma) {
            let k = self.kind[cyc[0]];
            if cyc.iter().any(|&h| self.kind[h] != k) {
                return bad("vertex mixes half-edge kinds");
            }
            let ok = match k {
                VertexKind::Circle => cyc.len() <= 2,
                VertexKind::Bullet => cyc.len() == 1 || cyc.len() == 3,
            };
            if !ok {
                return bad("vertex degree violates the covering conditions");
            }
        }
        if self.edge_count() == 0 {
            return bad("graph has no edges");
        }
        if !perm::is_transitive(n, &[&self.alpha, &self.sigma]) {
            return bad("graph is disconnected");
        }
        if let Some(b) = self.base {
            if b >= n || self.is_stub(b) {
                return bad("base must be a real half-edge");
            }
        }
        Ok(())
    }

    /// Graph of the transitive action given by the images of `S` and `L` on
    /// `0..d`. Edge `i` has circle half-edge `2i` and bullet half-edge
    /// `2i+1`; the base is the circle half-edge of edge 0.
    pub fn from_permutation_pair(sigma_s: &[usize], sigma_l: &[usize]) -> Result<Self> {
        let d = sigma_s.len();
        if d == 0 || sigma_l.len() != d {
            return Err(Error::NotAnAction("permutations must have equal positive degree".into()));
        }
        if !perm::is_permutation(sigma_s) || !perm::is_permutation(sigma_l) {
            return Err(Error::NotAnAction("input is not a permutation".into()));
        }
        if !perm::is_identity(&perm::compose(sigma_s, sigma_s)) {
            return Err(Error::NotAnAction("image of S does not square to 1".into()));
        }
        let l3 = perm::compose(&perm::compose(sigma_l, sigma_l), sigma_l);
        if !perm::is_identity(&l3) {
            return Err(Error::NotAnAction("image of L does not cube to 1".into()));
        }
        if !perm::is_transitive(d, &[sigma_s, sigma_l]) {
            return Err(Error::NotTransitive);
        }
        let mut alpha = vec![0; 2 * d];
        let mut sigma = vec![0; 2 * d];
        let mut kind = vec![VertexKind::Circle; 2 * d];
        for i in 0..d {
            alpha[2 * i] = 2 * i + 1;
            alpha[2 * i + 1] = 2 * i;
            sigma[2 * i] = 2 * sigma_s[i];
            sigma[2 * i + 1] = 2 * sigma_l[i] + 1;
            kind[2 * i + 1] = VertexKind::Bullet;
        }
        RibbonGraph::new(alpha, sigma, kind, Some(0))
    }

    /// The modular arc `o--*`, the quotient by the whole modular group.
    pub fn modular_arc() -> Self {
        RibbonGraph::from_permutation_pair(&[0], &[0]).expect("valid action")
    }

    pub fn half_edge_count(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self, h: usize) -> usize {
        self.alpha[h]
    }

    pub fn sigma(&self, h: usize) -> usize {
        self.sigma[h]
    }

    pub fn kind(&self, h: usize) -> VertexKind {
        self.kind[h]
    }

    pub fn base(&self) -> Option<usize> {
        self.base
    }

    pub fn with_base(mut self, base: Option<usize>) -> Result<Self> {
        self.base = base;
        self.validate()?;
        Ok(self)
    }

    pub fn is_stub(&self, h: usize) -> bool {
        self.alpha[h] == h
    }

    pub fn stubs(&self) -> Vec<usize> {
        (0..self.alpha.len()).filter(|&h| self.is_stub(h)).collect()
    }

    pub fn has_stubs(&self) -> bool {
        (0..self.alpha.len()).any(|h| self.is_stub(h))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.alpha.len()).filter(|&h| !self.is_stub(h)).count() / 2
    }

    /// Edges as `(circle half-edge, bullet half-edge)`, ordered by the
    /// circle half-edge. The position in this list is the edge index.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.alpha.len())
            .filter(|&h| !self.is_stub(h) && self.kind[h] == VertexKind::Circle)
            .map(|h| (h, self.alpha[h]))
            .collect()
    }

    /// Edge index of every real half-edge (`None` for stubs).
    pub fn edge_of_half_edges(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.alpha.len()];
        for (e, (c, b)) in self.edges().into_iter().enumerate() {
            out[c] = Some(e);
            out[b] = Some(e);
        }
        out
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        perm::cycles(&self.sigma)
            .into_iter()
            .map(|half_edges| Vertex {
                kind: self.kind[half_edges[0]],
                half_edges,
            })
            .collect()
    }

    fn vertex_of_half_edges(&self) -> Vec<usize> {
        let mut out = vec![0; self.alpha.len()];
        for (v, cyc) in perm::cycles(&self.sigma).into_iter().enumerate() {
            for h in cyc {
                out[h] = v;
            }
        }
        out
    }

    /// Actions of `S` and `L` on edges. Only defined without stubs.
    pub fn edge_actions(&self) -> Result<(Perm, Perm)> {
        if self.has_stubs() {
            return Err(Error::HasStubs);
        }
        let edge_of = self.edge_of_half_edges();
        let edges = self.edges();
        let s = edges
            .iter()
            .map(|&(c, _)| edge_of[self.sigma[c]].expect("real half-edge"))
            .collect();
        let l = edges
            .iter()
            .map(|&(_, b)| edge_of[self.sigma[b]].expect("real half-edge"))
            .collect();
        Ok((s, l))
    }

    /// Orbits of `sigma . alpha`, each reported once, ordered by their
    /// smallest half-edge.
    pub fn faces(&self) -> Result<Vec<Face>> {
        if self.has_stubs() {
            return Err(Error::HasStubs);
        }
        let phi: Perm = (0..self.alpha.len())
            .map(|h| self.sigma[self.alpha[h]])
            .collect();
        Ok(perm::cycles(&phi)
            .into_iter()
            .map(|half_edges| {
                let length = half_edges
                    .iter()
                    .filter(|&&h| self.kind[h] == VertexKind::Bullet)
                    .count();
                Face { half_edges, length }
            })
            .collect())
    }

    pub fn passport(&self) -> Result<Passport> {
        let faces = self.faces()?;
        let (s, l) = self.edge_actions()?;
        let mut circle_degrees = Vec::new();
        let mut bullet_degrees = Vec::new();
        for v in self.vertices() {
            match v.kind {
                VertexKind::Circle => circle_degrees.push(v.degree()),
                VertexKind::Bullet => bullet_degrees.push(v.degree()),
            }
        }
        let mut face_degrees: Vec<usize> = faces.iter().map(|f| f.length).collect();
        for v in [&mut circle_degrees, &mut bullet_degrees, &mut face_degrees] {
            v.sort_unstable_by(|a, b| b.cmp(a));
        }
        let edges = self.edge_count();
        let chi = (circle_degrees.len() + bullet_degrees.len() + face_degrees.len()) as i64
            - edges as i64;
        debug_assert!(chi <= 2 && (2 - chi) % 2 == 0);
        Ok(Passport {
            edges,
            genus: ((2 - chi) / 2) as usize,
            punctures: face_degrees.len(),
            circle_degrees,
            bullet_degrees,
            face_degrees,
            monodromy_order: perm::group_order(edges, &[s, l]),
        })
    }

    /// Reads the group element of a closed walk based at the base edge.
    ///
    /// The walk is a list of half-edges: entry `i` is the half-edge along
    /// which the walk leaves its current vertex, so the walk then stands at
    /// `alpha(walk[i])` and must leave next along a half-edge of that same
    /// vertex. The first and last entries must lie on the base edge. At a
    /// circle the step reads `S`; at a bullet it reads `L` for a left turn
    /// (`walk[i+1] = sigma(alpha(walk[i]))`) and `LL` for a right turn;
    /// turning back reads nothing. An empty walk is the trivial loop.
    pub fn loop_to_word(&self, walk: &[usize]) -> Result<Word> {
        let base = self.base.ok_or(Error::NoBase)?;
        if walk.is_empty() {
            return Ok(Word::identity());
        }
        let n = self.alpha.len();
        let on_base = |h: usize| h == base || h == self.alpha[base];
        if walk.iter().any(|&h| h >= n) {
            return Err(Error::NotAdjacent(0));
        }
        if !on_base(walk[0]) || !on_base(walk[walk.len() - 1]) {
            return Err(Error::NotClosed);
        }
        let mut letters = Vec::new();
        for i in 0..walk.len() - 1 {
            if self.is_stub(walk[i]) {
                return Err(Error::NotAdjacent(i));
            }
            let arrive = self.alpha[walk[i]];
            let next = walk[i + 1];
            let turn1 = self.sigma[arrive];
            let turn2 = self.sigma[turn1];
            let letter = match self.kind[arrive] {
                VertexKind::Circle if next == turn1 => Some(Letter::S),
                VertexKind::Bullet if next == turn1 => Some(Letter::L),
                VertexKind::Bullet if next == turn2 => Some(Letter::LL),
                _ if next == arrive => None,
                _ => return Err(Error::NotAdjacent(i + 1)),
            };
            if self.is_stub(next) {
                return Err(Error::NotAdjacent(i + 1));
            }
            letters.extend(letter);
        }
        Ok(Word::from_letters(&letters))
    }

    /// Whether `w` lies in the subgroup of loops at the base edge. A reduced
    /// word that walks off the core into a Farey branch never comes back.
    pub fn contains(&self, w: &Word) -> Result<bool> {
        let base = self.base.ok_or(Error::NoBase)?;
        let edge_of = self.edge_of_half_edges();
        let edges = self.edges();
        let start = edge_of[base].expect("base is real");
        let mut e = start;
        for &letter in w.letters() {
            let (c, b) = edges[e];
            let next = match letter {
                Letter::S => self.sigma[c],
                Letter::L => self.sigma[b],
                Letter::LL => self.sigma[self.sigma[b]],
            };
            match edge_of[next] {
                Some(f) => e = f,
                None => return Ok(false),
            }
        }
        Ok(e == start)
    }

    /// Generators of the subgroup of loops at the base edge, one for every
    /// crossing outside a breadth-first spanning tree of the edges.
    pub fn generators(&self) -> Result<Vec<Word>> {
        let base = self.base.ok_or(Error::NoBase)?;
        let edge_of = self.edge_of_half_edges();
        let edges = self.edges();
        let step = |e: usize, letter: Letter| -> Option<usize> {
            let (c, b) = edges[e];
            let h = match letter {
                Letter::S => self.sigma[c],
                Letter::L => self.sigma[b],
                Letter::LL => self.sigma[self.sigma[b]],
            };
            edge_of[h]
        };
        let start = edge_of[base].expect("base is real");
        let mut tree: Vec<Option<Word>> = vec![None; edges.len()];
        tree[start] = Some(Word::identity());
        let mut queue = VecDeque::from([start]);
        while let Some(e) = queue.pop_front() {
            for letter in [Letter::S, Letter::L, Letter::LL] {
                if let Some(f) = step(e, letter) {
                    if tree[f].is_none() {
                        let w = tree[e].as_ref().expect("visited").mul(&Word::from_letters(&[letter]));
                        tree[f] = Some(w);
                        queue.push_back(f);
                    }
                }
            }
        }
        let mut out: Vec<Word> = Vec::new();
        for e in 0..edges.len() {
            for letter in [Letter::S, Letter::L] {
                if let Some(f) = step(e, letter) {
                    let g = tree[e]
                        .as_ref()
                        .expect("connected")
                        .mul(&Word::from_letters(&[letter]))
                        .mul(&tree[f].as_ref().expect("connected").invert());
                    if !g.is_identity() && !out.contains(&g) && !out.contains(&g.invert()) {
                        out.push(g);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The spine, if the core of the graph (what remains after repeatedly
    /// pruning edges at vertices of real degree one) is a single cycle.
    pub fn spine(&self) -> Option<Spine> {
        let vertex_of = self.vertex_of_half_edges();
        let edges = self.edges();
        let nv = vertex_of.iter().copied().max().map_or(0, |m| m + 1);
        let mut alive = vec![true; edges.len()];
        let mut degree = vec![0usize; nv];
        for &(c, b) in &edges {
            degree[vertex_of[c]] += 1;
            degree[vertex_of[b]] += 1;
        }
        loop {
            let mut pruned = false;
            for (e, &(c, b)) in edges.iter().enumerate() {
                let (vc, vb) = (vertex_of[c], vertex_of[b]);
                if alive[e] && (degree[vc] <= 1 || degree[vb] <= 1) {
                    alive[e] = false;
                    degree[vc] -= 1;
                    degree[vb] -= 1;
                    pruned = true;
                }
            }
            if !pruned {
                break;
            }
        }
        let core: Vec<usize> = (0..edges.len()).filter(|&e| alive[e]).collect();
        if core.is_empty() || (0..nv).any(|v| degree[v] != 0 && degree[v] != 2) {
            return None;
        }
        let edge_of = self.edge_of_half_edges();
        let start = self
            .base
            .and_then(|b| edge_of[b])
            .filter(|&e| alive[e])
            .unwrap_or(core[0]);

        // Walk from the circle end of the start edge towards its bullet.
        let first = edges[start].0;
        let mut walk = vec![first];
        let mut spine_edges = vec![start];
        let mut branches = Vec::new();
        let mut at = self.alpha[first];
        loop {
            let vertex: Vec<usize> = {
                let mut v = vec![at];
                let mut x = self.sigma[at];
                while x != at {
                    v.push(x);
                    x = self.sigma[x];
                }
                v
            };
            let exit = *vertex
                .iter()
                .find(|&&h| h != at && edge_of[h].is_some_and(|e| alive[e]))?;
            if self.kind[at] == VertexKind::Bullet {
                let left_turn = self.sigma[at] == exit;
                let other = if left_turn { self.sigma[exit] } else { self.sigma[at] };
                if self.is_stub(other) {
                    branches.push(if left_turn { Side::Right } else { Side::Left });
                }
            } else if vertex.len() == 2 && vertex.iter().any(|&h| self.is_stub(h)) {
                unreachable!("circle of degree two on the spine has no free slot");
            }
            walk.push(exit);
            let e = edge_of[exit].expect("real");
            if e == start {
                break;
            }
            spine_edges.push(e);
            at = self.alpha[exit];
        }
        if spine_edges.len() != core.len() {
            return None;
        }
        Some(Spine { edges: spine_edges, walk, branches })
    }

    /// Canonical code up to relabelling of half-edges: the least
    /// breadth-first relabelling over all starting half-edges. The base is
    /// ignored.
    pub fn canonical_code(&self) -> Vec<usize> {
        let n = self.alpha.len();
        (0..n).map(|start| self.bfs_code(start)).min().unwrap_or_default()
    }

    fn bfs_code(&self, start: usize) -> Vec<usize> {
        let n = self.alpha.len();
        let mut label = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        label[start] = 0;
        order.push(start);
        let mut i = 0;
        while i < order.len() {
            let x = order[i];
            for y in [self.alpha[x], self.sigma[x]] {
                if label[y] == usize::MAX {
                    label[y] = order.len();
                    order.push(y);
                }
            }
            i += 1;
        }
        let mut code = Vec::with_capacity(3 * n + 1);
        code.push(n);
        for &x in &order {
            code.push(self.kind[x] as usize);
            code.push(label[self.alpha[x]]);
            code.push(label[self.sigma[x]]);
        }
        code
    }

    pub fn is_isomorphic(&self, other: &RibbonGraph) -> bool {
        self.alpha.len() == other.alpha.len() && self.canonical_code() == other.canonical_code()
    }

    pub fn to_json(&self) -> String {
        let doc = GraphJson {
            schema_version: GRAPH_SCHEMA_VERSION,
            half_edges: self.alpha.len(),
            alpha: self.alpha.clone(),
            sigma: self.sigma.clone(),
            vtype: self.kind.clone(),
            base: self.base,
            stubs: self.stubs(),
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidGraph(e.to_string()))?;
        if doc.schema_version != GRAPH_SCHEMA_VERSION {
            return Err(Error::InvalidGraph(format!(
                "unsupported schemaVersion {}",
                doc.schema_version
            )));
        }
        if doc.half_edges != doc.alpha.len() {
            return Err(Error::InvalidGraph("halfEdges disagrees with alpha".into()));
        }
        let g = RibbonGraph::new(doc.alpha, doc.sigma, doc.vtype, doc.base)?;
        let mut stubs = doc.stubs;
        stubs.sort_unstable();
        if stubs != g.stubs() {
            return Err(Error::InvalidGraph("stubs must be exactly the fixed points of alpha".into()));
        }
        Ok(g)
    }

    /// Graphviz rendering. Circles are open nodes, bullets filled dots,
    /// stubs dashed rays, and the base edge is drawn bold.
    pub fn to_dot(&self) -> String {
        let vertex_of = self.vertex_of_half_edges();
        let vertices = self.vertices();
        let mut out = String::new();
        out.push_str("digraph modular_graph {\n");
        let _ = writeln!(out, "  graph [comment=\"schemaVersion={GRAPH_SCHEMA_VERSION}\"];");
        out.push_str("  node [label=\"\"];\n");
        out.push_str("  edge [arrowhead=none];\n");
        for (v, vert) in vertices.iter().enumerate() {
            match vert.kind {
                VertexKind::Circle => {
                    let _ = writeln!(out, "  v{v} [shape=circle, width=0.2];");
                }
                VertexKind::Bullet => {
                    let _ = writeln!(
                        out,
                        "  v{v} [shape=circle, style=filled, fillcolor=black, width=0.12];"
                    );
                }
            }
        }
        let base_edge = self.base.and_then(|b| self.edge_of_half_edges()[b]);
        for (e, (c, b)) in self.edges().into_iter().enumerate() {
            let bold = if Some(e) == base_edge { ", penwidth=2.5" } else { "" };
            let _ = writeln!(
                out,
                "  v{} -> v{} [label=\"e{e}\"{bold}];",
                vertex_of[c], vertex_of[b]
            );
        }
        for (i, h) in self.stubs().into_iter().enumerate() {
            let _ = writeln!(out, "  t{i} [shape=point, style=invis];");
            let _ = writeln!(out, "  v{} -> t{i} [style=dashed];", vertex_of[h]);
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gamma0_2() -> RibbonGraph {
        // (1 2) and (1 2 3), zero-based
        RibbonGraph::from_permutation_pair(&[1, 0, 2], &[1, 2, 0]).unwrap()
    }

    #[test]
    fn modular_arc() {
        let g = RibbonGraph::modular_arc();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.vertices().len(), 2);
        assert_eq!(g.faces().unwrap().len(), 1);
        let p = g.passport().unwrap();
        assert_eq!((p.edges, p.genus, p.punctures), (1, 0, 1));
        assert_eq!(p.circle_degrees, vec![1]);
        assert_eq!(p.bullet_degrees, vec![1]);
        assert_eq!(p.monodromy_order, BigUint::from(1u32));
    }

    #[test]
    fn gamma0_2_graph() {
        let g = gamma0_2();
        let vs = g.vertices();
        assert_eq!(vs.iter().filter(|v| v.kind == VertexKind::Circle).count(), 2);
        assert_eq!(vs.iter().filter(|v| v.kind == VertexKind::Bullet).count(), 1);
        let faces = g.faces().unwrap();
        assert_eq!(faces.len(), 2);
        let p = g.passport().unwrap();
        assert_eq!((p.edges, p.genus, p.punctures), (3, 0, 2));
        assert_eq!(p.circle_degrees, vec![2, 1]);
        assert_eq!(p.bullet_degrees, vec![3]);
        assert_eq!(p.face_degrees, vec![2, 1]);
        assert_eq!(p.monodromy_order, BigUint::from(6u32));
    }

    #[test]
    fn six_edge_example() {
        let g = RibbonGraph::from_permutation_pair(&[1, 0, 3, 2, 5, 4], &[2, 3, 4, 5, 0, 1])
            .unwrap();
        let vs = g.vertices();
        assert_eq!(vs.iter().filter(|v| v.kind == VertexKind::Circle).count(), 3);
        assert_eq!(vs.iter().filter(|v| v.kind == VertexKind::Bullet).count(), 2);
        let p = g.passport().unwrap();
        assert_eq!(p.euler_characteristic(), 2 - 2 * p.genus as i64);
    }

    #[test]
    fn action_errors() {
        assert!(matches!(
            RibbonGraph::from_permutation_pair(&[1, 2, 0], &[0, 1, 2]),
            Err(Error::NotAnAction(_))
        ));
        assert!(matches!(
            RibbonGraph::from_permutation_pair(&[0, 1], &[1, 0]),
            Err(Error::NotAnAction(_))
        ));
        assert!(matches!(
            RibbonGraph::from_permutation_pair(&[0, 1], &[0, 1]),
            Err(Error::NotTransitive)
        ));
        assert!(matches!(
            RibbonGraph::from_permutation_pair(&[0, 0], &[0, 1]),
            Err(Error::NotAnAction(_))
        ));
    }

    #[test]
    fn faces_match_cycles_of_s_then_l() {
        let s = [1, 0, 3, 2, 5, 4];
        let l = [2, 3, 4, 5, 0, 1];
        let g = RibbonGraph::from_permutation_pair(&s, &l).unwrap();
        let sl = perm::compose(&s, &l);
        assert_eq!(g.faces().unwrap().len(), perm::cycles(&sl).len());
    }

    #[test]
    fn json_round_trip_and_rejection() {
        let g = gamma0_2();
        let text = g.to_json();
        assert!(text.contains("\"schemaVersion\": 1"));
        assert_eq!(RibbonGraph::from_json(&text).unwrap(), g);
        let broken = text.replace("\"schemaVersion\": 1", "\"schemaVersion\": 9");
        assert!(RibbonGraph::from_json(&broken).is_err());
    }

    #[test]
    fn relabelled_actions_are_isomorphic() {
        let a = RibbonGraph::from_permutation_pair(&[1, 0, 2], &[1, 2, 0]).unwrap();
        let b = RibbonGraph::from_permutation_pair(&[0, 2, 1], &[2, 0, 1]).unwrap();
        assert!(a.is_isomorphic(&b));
        // reversed rotation at the bullet, equal after swapping edges 0 and 1
        let c = RibbonGraph::from_permutation_pair(&[1, 0, 2], &[2, 0, 1]).unwrap();
        assert!(a.is_isomorphic(&c));
        let d = RibbonGraph::from_permutation_pair(&[0, 1, 2], &[1, 2, 0]).unwrap();
        assert!(!a.is_isomorphic(&d));
        assert!(!a.is_isomorphic(&RibbonGraph::modular_arc()));
    }

    #[test]
    fn stubs_block_finite_invariants() {
        let g = RibbonGraph::new(
            vec![1, 0, 2],
            vec![0, 2, 1],
            vec![VertexKind::Circle, VertexKind::Bullet, VertexKind::Bullet],
            Some(0),
        );
        // a bullet of degree two is not allowed
        assert!(g.is_err());
    }

    #[test]
    fn walks_read_words() {
        let g = gamma0_2();
        assert_eq!(g.loop_to_word(&[]).unwrap(), Word::identity());
        assert_eq!(g.loop_to_word(&[0]).unwrap(), Word::identity());
        // edge i has half-edges (2i, 2i+1); bullet rotation 1 -> 3 -> 5,
        // circle rotation 0 <-> 2
        let w = g.loop_to_word(&[0, 3, 0]).unwrap();
        assert_eq!(w, "LS".parse::<Word>().unwrap());
        assert!(g.contains(&w).unwrap());
        assert!(!g.contains(&"S".parse().unwrap()).unwrap());
        // out along edge 1 and straight back
        assert!(g.loop_to_word(&[0, 3, 2, 1]).unwrap().is_identity());
        assert!(matches!(g.loop_to_word(&[2, 3]), Err(Error::NotClosed)));
        assert!(matches!(g.loop_to_word(&[0, 4, 1]), Err(Error::NotAdjacent(1))));
    }
}
