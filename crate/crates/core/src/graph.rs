//! Clique-independent graphs: a join of complete blocks and edgeless blocks,
//! plus a universal sink 0.
//!
//! For compositions mu and nu with n = |mu| + |nu|, the clique blocks occupy
//! the vertex intervals descending from n (K_1 = {n, n-1, ..., n-mu_1+1} and
//! so on) and the independent blocks ascend from 1 (I_1 = {1, ..., nu_1} and
//! so on). Any two vertices in distinct blocks are adjacent, vertices inside a
//! clique block are adjacent, vertices inside an independent block are not,
//! and the sink 0 is adjacent to everything.

use crate::error::{Error, Result};
use std::fmt;

/// A tuple of positive integers. The empty composition is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "every part must be positive, got {parts:?}"
            )));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// |mu| = sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// l(mu) = number of parts.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Parses comma-separated positive integers; "-" denotes the empty
    /// composition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Composition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let part: usize = piece
                .trim()
                .parse()
                .map_err(|_| Error::ParseError(format!("bad composition part {piece:?}")))?;
            parts.push(part);
        }
        Composition::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    Clique,
    Independent,
}

/// One component: the interval of vertices lo..=hi together with its kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub kind: ComponentKind,
    pub lo: usize,
    pub hi: usize,
}

impl Block {
    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false // blocks always hold at least one vertex
    }

    pub fn contains(&self, v: usize) -> bool {
        self.lo <= v && v <= self.hi
    }

    /// Vertices of the block in increasing order.
    pub fn vertices(&self) -> impl DoubleEndedIterator<Item = usize> {
        self.lo..=self.hi
    }
}

/// The block layout shared by the graph and the shuffle set: clique blocks
/// K_1, K_2, ... descending from n, then independent blocks I_1, I_2, ...
/// ascending from 1. Blocks are listed clique blocks first.
pub fn component_blocks(mu: &Composition, nu: &Composition) -> Vec<Block> {
    let n = mu.size() + nu.size();
    let mut blocks = Vec::with_capacity(mu.num_parts() + nu.num_parts());
    let mut hi = n;
    for &part in mu.parts() {
        blocks.push(Block { kind: ComponentKind::Clique, lo: hi - part + 1, hi });
        hi -= part;
    }
    let mut lo = 1;
    for &part in nu.parts() {
        blocks.push(Block { kind: ComponentKind::Independent, lo, hi: lo + part - 1 });
        lo += part;
    }
    blocks
}

/// The graph on {0} ∪ [n] described in the module docs. Adjacency is stored
/// implicitly through component ids; no edge list is ever materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueIndependentGraph {
    mu: Composition,
    nu: Composition,
    n: usize,
    blocks: Vec<Block>,
    component_of: Vec<usize>,
}

impl CliqueIndependentGraph {
    /// Builds the graph for the pair (mu, nu). Rejects |mu| + |nu| = 0.
    pub fn new(mu: Composition, nu: Composition) -> Result<Self> {
        let n = mu.size() + nu.size();
        if n == 0 {
            return Err(Error::InvalidComposition(
                "both compositions are empty".into(),
            ));
        }
        let blocks = component_blocks(&mu, &nu);
        let mut component_of = vec![usize::MAX; n + 1];
        for (id, block) in blocks.iter().enumerate() {
            for v in block.vertices() {
                component_of[v] = id;
            }
        }
        debug_assert!(component_of[1..].iter().all(|&c| c != usize::MAX));
        Ok(CliqueIndependentGraph { mu, nu, n, blocks, component_of })
    }

    /// Convenience constructor from part slices.
    pub fn from_parts(mu: &[usize], nu: &[usize]) -> Result<Self> {
        CliqueIndependentGraph::new(Composition::new(mu.to_vec())?, Composition::new(nu.to_vec())?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mu(&self) -> &Composition {
        &self.mu
    }

    pub fn nu(&self) -> &Composition {
        &self.nu
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v > self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    /// Component id of a non-sink vertex.
    pub fn component_of(&self, v: usize) -> usize {
        assert!(v >= 1 && v <= self.n, "non-sink vertex expected, got {v}");
        self.component_of[v]
    }

    pub fn component_kind(&self, id: usize) -> ComponentKind {
        self.blocks[id].kind
    }

    /// Degree of any vertex including the sink. Clique vertices have degree n,
    /// a vertex in an independent block of size s has degree n - s + 1, and
    /// the sink has degree n.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        if v == 0 {
            return Ok(self.n);
        }
        let block = &self.blocks[self.component_of[v]];
        Ok(match block.kind {
            ComponentKind::Clique => self.n,
            ComponentKind::Independent => self.n - block.len() + 1,
        })
    }

    /// Whether u and v are joined by an edge. Symmetric and irreflexive; the
    /// sink is adjacent to every other vertex.
    pub fn adjacent(&self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(false);
        }
        if u == 0 || v == 0 {
            return Ok(true);
        }
        let cu = self.component_of[u];
        let cv = self.component_of[v];
        Ok(cu != cv || self.blocks[cu].kind == ComponentKind::Clique)
    }

    /// Number of edges not incident to the sink:
    /// C(n,2) - sum_i C(nu_i,2).
    pub fn non_sink_edge_count(&self) -> usize {
        let choose2 = |k: usize| k * k.saturating_sub(1) / 2;
        let removed: usize = self.nu.parts().iter().map(|&p| choose2(p)).sum();
        choose2(self.n) - removed
    }

    /// The companion graph with every independent block turned into a clique
    /// (the complete graph on [n] plus sink, keeping the block intervals).
    pub fn all_cliques(&self) -> CliqueIndependentGraph {
        let mut blocks = self.blocks.clone();
        for b in &mut blocks {
            b.kind = ComponentKind::Clique;
        }
        let mut parts: Vec<(usize, usize)> = blocks.iter().map(|b| (b.hi, b.len())).collect();
        parts.sort_by_key(|&(hi, _)| std::cmp::Reverse(hi));
        let mu = Composition { parts: parts.into_iter().map(|(_, len)| len).collect() };
        CliqueIndependentGraph {
            mu,
            nu: Composition::empty(),
            n: self.n,
            blocks,
            component_of: self.component_of.clone(),
        }
    }
}

impl fmt::Display for CliqueIndependentGraph {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "G^({},{})", self.mu, self.nu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked_example_graph() -> CliqueIndependentGraph {
        CliqueIndependentGraph::from_parts(&[4, 3], &[3, 2]).unwrap()
    }

    #[test]
    fn degrees_of_the_worked_graph() {
        let g = worked_example_graph();
        assert_eq!(g.n(), 12);
        for v in 1..=3 {
            assert_eq!(g.degree(v).unwrap(), 10);
        }
        for v in 4..=5 {
            assert_eq!(g.degree(v).unwrap(), 11);
        }
        for v in 6..=12 {
            assert_eq!(g.degree(v).unwrap(), 12);
        }
        assert_eq!(g.degree(0).unwrap(), 12);
    }

    #[test]
    fn star_graph_degrees() {
        for n in 1..=6 {
            let g = CliqueIndependentGraph::from_parts(&[], &[n]).unwrap();
            for v in 1..=n {
                assert_eq!(g.degree(v).unwrap(), 1);
            }
            assert_eq!(g.non_sink_edge_count(), 0);
        }
    }

    #[test]
    fn three_vertex_mixed_graph() {
        let g = CliqueIndependentGraph::from_parts(&[2], &[1]).unwrap();
        assert_eq!(g.n(), 3);
        let blocks = g.blocks();
        assert_eq!(blocks.len(), 2);
        assert_eq!((blocks[0].lo, blocks[0].hi), (2, 3));
        assert_eq!(blocks[0].kind, ComponentKind::Clique);
        assert_eq!((blocks[1].lo, blocks[1].hi), (1, 1));
        assert_eq!(blocks[1].kind, ComponentKind::Independent);
        for v in 1..=3 {
            assert_eq!(g.degree(v).unwrap(), 3);
        }
    }

    #[test]
    fn adjacency_on_the_worked_graph() {
        let g = worked_example_graph();
        assert!(!g.adjacent(1, 2).unwrap());
        assert!(!g.adjacent(4, 5).unwrap());
        assert!(g.adjacent(9, 12).unwrap());
        assert!(g.adjacent(6, 8).unwrap());
        assert!(g.adjacent(1, 4).unwrap());
        assert!(g.adjacent(3, 12).unwrap());
        for v in 1..=12 {
            assert!(g.adjacent(0, v).unwrap());
            assert!(!g.adjacent(v, v).unwrap());
        }
        assert!(g.adjacent(13, 1).is_err());
    }

    #[test]
    fn non_sink_edge_counts() {
        assert_eq!(worked_example_graph().non_sink_edge_count(), 62);
        let k3 = CliqueIndependentGraph::from_parts(&[3], &[]).unwrap();
        assert_eq!(k3.non_sink_edge_count(), 3);
    }

    #[test]
    fn blocks_partition_the_vertex_set() {
        for (mu, nu) in [(vec![4, 3], vec![3, 2]), (vec![1, 2], vec![2]), (vec![], vec![2, 3])] {
            let g = CliqueIndependentGraph::from_parts(&mu, &nu).unwrap();
            let mut seen = vec![false; g.n() + 1];
            for b in g.blocks() {
                for v in b.vertices() {
                    assert!(!seen[v]);
                    seen[v] = true;
                }
            }
            assert!(seen[1..].iter().all(|&s| s));
        }
    }

    // Handshake identity: degrees over {0} ∪ [n] sum to twice the edge count.
    #[test]
    fn degree_sum_identity() {
        for mu in [vec![], vec![1], vec![3], vec![2, 1]] {
            for nu in [vec![], vec![2], vec![1, 1], vec![3, 1]] {
                if mu.is_empty() && nu.is_empty() {
                    continue;
                }
                let g = CliqueIndependentGraph::from_parts(&mu, &nu).unwrap();
                let degree_sum: usize = (0..=g.n()).map(|v| g.degree(v).unwrap()).sum();
                assert_eq!(degree_sum, 2 * (g.non_sink_edge_count() + g.n()));
            }
        }
    }

    // The implicit adjacency predicate against a naive reconstruction from
    // component ids.
    #[test]
    fn adjacency_matches_naive_reconstruction() {
        let g = CliqueIndependentGraph::from_parts(&[2, 1], &[2, 2]).unwrap();
        for u in 0..=g.n() {
            for v in 0..=g.n() {
                let naive = u != v
                    && (u == 0
                        || v == 0
                        || g.component_of(u) != g.component_of(v)
                        || g.component_kind(g.component_of(u)) == ComponentKind::Clique);
                assert_eq!(g.adjacent(u, v).unwrap(), naive);
                assert_eq!(g.adjacent(u, v).unwrap(), g.adjacent(v, u).unwrap());
            }
        }
    }

    #[test]
    fn rejects_bad_compositions() {
        assert!(Composition::new(vec![2, 0]).is_err());
        assert!(CliqueIndependentGraph::new(Composition::empty(), Composition::empty()).is_err());
    }

    #[test]
    fn composition_text_form() {
        assert_eq!(Composition::parse("4,3").unwrap().parts(), &[4, 3]);
        assert_eq!(Composition::parse("-").unwrap(), Composition::empty());
        assert_eq!(Composition::parse("4, 3").unwrap().to_string(), "4,3");
        assert_eq!(Composition::empty().to_string(), "-");
        assert!(Composition::parse("4,0").is_err());
        assert!(Composition::parse("a").is_err());
    }

    #[test]
    fn all_cliques_companion() {
        let g = worked_example_graph();
        let lifted = g.all_cliques();
        assert_eq!(lifted.n(), 12);
        assert_eq!(lifted.mu().parts(), &[4, 3, 2, 3]);
        assert!(lifted.nu().is_empty());
        for v in 1..=12 {
            assert_eq!(lifted.degree(v).unwrap(), 12);
        }
        for u in 1..=12 {
            for v in 1..=12 {
                assert_eq!(lifted.adjacent(u, v).unwrap(), u != v);
            }
        }
        // Block intervals are preserved.
        assert_eq!(lifted.blocks().len(), g.blocks().len());
        for (a, b) in lifted.blocks().iter().zip(g.blocks()) {
            assert_eq!((a.lo, a.hi), (b.lo, b.hi));
            assert_eq!(a.kind, ComponentKind::Clique);
        }
    }
}
