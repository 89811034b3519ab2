//! Unlabeled trees on a few vertices, one per isomorphism class.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::labeling::SimpleGraph;

pub const TREE_ENUMERATION_CAP: usize = 10;

/// Every tree on `n` vertices up to isomorphism, each relabeled in
/// canonical breadth-first order and sorted by canonical code.
///
/// Built by attaching a leaf to every vertex of every tree on `n − 1`
/// vertices and keeping one tree per canonical code.
pub fn enumerate_trees(n: usize) -> Result<Vec<SimpleGraph>> {
    if n == 0 {
        return Err(Error::Domain("trees need at least one vertex".into()));
    }
    if n > TREE_ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            limit: TREE_ENUMERATION_CAP as u64,
            requested: n as u64,
        });
    }
    let mut level: BTreeMap<Vec<u8>, Vec<(usize, usize)>> = BTreeMap::new();
    level.insert(vec![b'(', b')'], Vec::new());
    for size in 2..=n {
        let mut next = BTreeMap::new();
        for edges in level.values() {
            for v in 0..size - 1 {
                let mut grown = edges.clone();
                grown.push((v, size - 1));
                let (code, relabeled) = canonical_tree(size, &grown);
                next.entry(code).or_insert(relabeled);
            }
        }
        level = next;
    }
    level
        .into_values()
        .map(|edges| SimpleGraph::tree(n, edges))
        .collect()
}

/// Canonical code of a tree (minimum AHU string over its centres) and the
/// tree relabeled breadth-first from that centre.
pub fn canonical_tree(n: usize, edges: &[(usize, usize)]) -> (Vec<u8>, Vec<(usize, usize)>) {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut best: Option<(Vec<u8>, usize)> = None;
    for c in centers(&adj) {
        let code = encode(&adj, c, usize::MAX);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            best = Some((code, c));
        }
    }
    let (code, root) = best.expect("a tree has a centre");
    (code, relabel(&adj, root))
}

fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut leaves: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= leaves.len();
        let mut next = Vec::new();
        for &l in &leaves {
            deg[l] = 0;
            for &w in &adj[l] {
                if deg[w] > 0 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        leaves = next;
    }
    leaves.sort_unstable();
    leaves
}

fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> Vec<u8> {
    let mut kids: Vec<Vec<u8>> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(adj, w, v))
        .collect();
    kids.sort();
    let mut out = vec![b'('];
    for k in kids {
        out.extend(k);
    }
    out.push(b')');
    out
}

fn relabel(adj: &[Vec<usize>], root: usize) -> Vec<(usize, usize)> {
    let mut label = vec![usize::MAX; adj.len()];
    label[root] = 0;
    let mut queue = vec![(root, usize::MAX)];
    let mut edges = Vec::new();
    let mut head = 0;
    while head < queue.len() {
        let (v, parent) = queue[head];
        head += 1;
        let mut kids: Vec<(Vec<u8>, usize)> = adj[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| (encode(adj, w, v), w))
            .collect();
        kids.sort();
        for (_, w) in kids {
            label[w] = queue.len();
            edges.push((label[v], label[w]));
            queue.push((w, v));
        }
    }
    edges
}
