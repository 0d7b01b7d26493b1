//! Mixed graphs: the input of branching greedoids, graphic matroids and the
//! strength computation.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::subset::SubsetMask;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub tail: usize,
    pub head: usize,
    pub directed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedGraph {
    nodes: Vec<String>,
    edges: Vec<Edge>,
    root: usize,
}

impl MixedGraph {
    /// `edges` are `(id, tail, head, directed)` with endpoints given by node label.
    /// Without a root, the first node is used.
    pub fn new<S: AsRef<str>>(
        nodes: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (S, S, S, bool)>,
        root: Option<&str>,
    ) -> Result<Self> {
        let nodes: Vec<String> = nodes.into_iter().map(|s| s.as_ref().to_string()).collect();
        let mut node_index = HashMap::new();
        for (i, n) in nodes.iter().enumerate() {
            if node_index.insert(n.as_str(), i).is_some() {
                return Err(Error::BadParams(format!("duplicate node {n:?}")));
            }
        }
        let lookup = |label: &str| {
            node_index
                .get(label)
                .copied()
                .ok_or_else(|| Error::BadParams(format!("unknown node {label:?}")))
        };
        let mut seen = HashMap::new();
        let mut out = Vec::new();
        for (id, tail, head, directed) in edges {
            let id = id.as_ref().to_string();
            if seen.insert(id.clone(), ()).is_some() {
                return Err(Error::BadParams(format!("duplicate edge id {id:?}")));
            }
            out.push(Edge { id, tail: lookup(tail.as_ref())?, head: lookup(head.as_ref())?, directed });
        }
        let root = match root {
            Some(r) => lookup(r)?,
            None if !nodes.is_empty() => 0,
            None => return Err(Error::BadParams("graph has no nodes".into())),
        };
        Ok(MixedGraph { nodes, edges: out, root })
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn edge_ids(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.id.clone()).collect()
    }

    /// Number of connected components of `(V, edges)` with directions ignored.
    pub fn components(&self, edges: SubsetMask) -> usize {
        let mut uf = UnionFind::new(self.nodes.len());
        let mut count = self.nodes.len();
        for i in edges.iter() {
            let e = &self.edges[i];
            if uf.union(e.tail, e.head) {
                count -= 1;
            }
        }
        count
    }

    /// True iff `edges` contains no cycle, directions ignored.
    pub fn is_forest(&self, edges: SubsetMask) -> bool {
        let mut uf = UnionFind::new(self.nodes.len());
        edges.iter().all(|i| uf.union(self.edges[i].tail, self.edges[i].head))
    }

    /// Walks `edges` outward from the root. Returns, for every reached edge, the
    /// node it was entered from, provided `edges` is a tree containing the root
    /// whose directed edges all point away from it.
    pub fn root_tree(&self, edges: SubsetMask) -> Option<Vec<Option<usize>>> {
        let mut parent_node: Vec<Option<usize>> = vec![None; self.edges.len()];
        let mut visited = vec![false; self.nodes.len()];
        visited[self.root] = true;
        let mut stack = vec![self.root];
        let mut reached_edges = 0usize;
        let mut reached_nodes = 1usize;
        while let Some(v) = stack.pop() {
            for i in edges.iter() {
                let e = &self.edges[i];
                if parent_node[i].is_some() {
                    continue;
                }
                let other = if e.tail == v {
                    e.head
                } else if e.head == v {
                    e.tail
                } else {
                    continue;
                };
                if visited[other] || (e.directed && e.tail != v) {
                    return None;
                }
                parent_node[i] = Some(v);
                reached_edges += 1;
                visited[other] = true;
                reached_nodes += 1;
                stack.push(other);
            }
        }
        (reached_edges == edges.len() && reached_nodes == edges.len() + 1).then_some(parent_node)
    }

    /// Branching-greedoid feasibility of an edge set.
    pub fn is_root_tree(&self, edges: SubsetMask) -> bool {
        self.root_tree(edges).is_some()
    }

    /// The far endpoint of a tree edge, i.e. the endpoint not on the root side.
    pub fn child_node(&self, edge: usize, entered_from: usize) -> usize {
        let e = &self.edges[edge];
        if e.tail == entered_from { e.head } else { e.tail }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
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
        self.parent[ra] = rb;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1() -> MixedGraph {
        MixedGraph::new(
            ["r", "v", "u"],
            [("a", "r", "v", false), ("b", "r", "v", false), ("c", "v", "u", false)],
            Some("r"),
        )
        .unwrap()
    }

    #[test]
    fn parallel_edges_are_not_a_tree() {
        let g = fig1();
        assert!(!g.is_root_tree(SubsetMask::from_indices([0, 1])));
        assert!(g.is_root_tree(SubsetMask::from_indices([1, 2])));
        assert!(!g.is_root_tree(SubsetMask::from_indices([2])));
        assert!(g.is_root_tree(SubsetMask::EMPTY));
    }

    #[test]
    fn directed_edges_must_point_away_from_root() {
        let g = MixedGraph::new(["r", "v"], [("in", "v", "r", true), ("out", "r", "v", true)], Some("r"))
            .unwrap();
        assert!(!g.is_root_tree(SubsetMask::singleton(0)));
        assert!(g.is_root_tree(SubsetMask::singleton(1)));
    }

    #[test]
    fn counts_components() {
        let g = fig1();
        assert_eq!(g.components(SubsetMask::EMPTY), 3);
        assert_eq!(g.components(SubsetMask::from_indices([0, 1])), 2);
        assert!(!g.is_forest(SubsetMask::from_indices([0, 1])));
    }
}
