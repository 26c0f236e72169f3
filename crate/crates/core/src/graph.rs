//! Immutable simple graphs whose vertices carry stable integer ids.
//!
//! Internally vertices are addressed by dense indices `0..n` in increasing id
//! order, so an index order is also an id order. Induced subgraphs keep the
//! ids of the host, which is what lets witnesses and splitters found deep in a
//! decomposition be reported in the numbering of the input file.

use std::collections::BTreeSet;

use crate::bits::Bits;
use crate::error::{Error, Result};

pub type VertexId = u32;
pub type VertexSet = BTreeSet<VertexId>;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    ids: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from vertex ids and id pairs. Loops are rejected,
    /// parallel edges collapse.
    pub fn from_edges<I, E>(ids: I, edges: E) -> Result<Graph>
    where
        I: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let ids: Vec<VertexId> = ids.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let mut adj = vec![Vec::new(); ids.len()];
        for (u, v) in edges {
            if u == v {
                return Err(Error::Loop(u));
            }
            let i = ids.binary_search(&u).map_err(|_| Error::UnknownVertex(u))?;
            let j = ids.binary_search(&v).map_err(|_| Error::UnknownVertex(v))?;
            adj[i].push(j);
            adj[j].push(i);
        }
        Ok(Graph::from_raw(ids, adj))
    }

    /// Graph on ids `0..n` with edges given by index pairs.
    pub fn from_index_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            assert!(u != v && u < n && v < n, "bad edge ({u},{v}) for n = {n}");
            adj[u].push(v);
            adj[v].push(u);
        }
        Graph::from_raw((0..n as VertexId).collect(), adj)
    }

    fn from_raw(ids: Vec<VertexId>, mut adj: Vec<Vec<usize>>) -> Graph {
        let mut m = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Graph { ids, adj, m: m / 2 }
    }

    pub fn empty() -> Graph {
        Graph::default()
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ids(&self) -> &[VertexId] {
        &self.ids
    }

    #[inline]
    pub fn id(&self, i: usize) -> VertexId {
        self.ids[i]
    }

    pub fn index_of(&self, id: VertexId) -> Option<usize> {
        self.ids.binary_search(&id).ok()
    }

    pub fn contains(&self, id: VertexId) -> bool {
        self.index_of(id).is_some()
    }

    /// Index of `id`, or an `UnknownVertex` error.
    pub fn index(&self, id: VertexId) -> Result<usize> {
        self.index_of(id).ok_or(Error::UnknownVertex(id))
    }

    pub fn max_id(&self) -> Option<VertexId> {
        self.ids.last().copied()
    }

    /// An id strictly larger than every id in the graph.
    pub fn fresh_id(&self) -> VertexId {
        self.max_id().map_or(0, |x| x + 1)
    }

    #[inline]
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    #[inline]
    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        let (a, b) = if self.adj[i].len() <= self.adj[j].len() { (i, j) } else { (j, i) };
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn adjacent_ids(&self, u: VertexId, v: VertexId) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) => self.adjacent(i, j),
            _ => false,
        }
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, l)| l.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    pub fn edge_ids(&self) -> Vec<(VertexId, VertexId)> {
        self.edges().map(|(i, j)| (self.ids[i], self.ids[j])).collect()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.ids.iter().copied().collect()
    }

    pub fn to_ids(&self, idx: impl IntoIterator<Item = usize>) -> VertexSet {
        idx.into_iter().map(|i| self.ids[i]).collect()
    }

    pub fn to_indices(&self, s: &VertexSet) -> Result<Vec<usize>> {
        s.iter().map(|&v| self.index(v)).collect()
    }

    /// Subgraph induced by the given indices (any order, duplicates ignored).
    pub fn induced(&self, idx: &[usize]) -> Graph {
        let mut keep = vec![usize::MAX; self.n()];
        let mut sorted: Vec<usize> = idx.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for (k, &i) in sorted.iter().enumerate() {
            keep[i] = k;
        }
        let ids = sorted.iter().map(|&i| self.ids[i]).collect();
        let adj = sorted
            .iter()
            .map(|&i| self.adj[i].iter().filter_map(|&j| (keep[j] != usize::MAX).then_some(keep[j])).collect())
            .collect();
        let mut g = Graph { ids, adj, m: 0 };
        g.m = g.adj.iter().map(Vec::len).sum::<usize>() / 2;
        g
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        Ok(self.induced(&self.to_indices(s)?))
    }

    /// Subgraph induced by every vertex except the given indices.
    pub fn without(&self, idx: &[usize]) -> Graph {
        let mut drop = vec![false; self.n()];
        for &i in idx {
            drop[i] = true;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&i| !drop[i]).collect();
        self.induced(&keep)
    }

    pub fn without_ids(&self, s: &VertexSet) -> Graph {
        let idx: Vec<usize> = s.iter().filter_map(|&v| self.index_of(v)).collect();
        self.without(&idx)
    }

    /// Adds a new vertex adjacent to the given existing vertices.
    pub fn with_vertex(&self, id: VertexId, nbrs: &VertexSet) -> Result<Graph> {
        if self.contains(id) {
            return Err(Error::Precondition(format!("vertex {id} already present")));
        }
        let mut edges = self.edge_ids();
        for &w in nbrs {
            if !self.contains(w) {
                return Err(Error::UnknownVertex(w));
            }
            edges.push((id, w));
        }
        Graph::from_edges(self.ids.iter().copied().chain([id]), edges)
    }

    /// Renames vertices through `f`, which must be injective.
    pub fn relabel(&self, f: impl Fn(VertexId) -> VertexId) -> Result<Graph> {
        let ids: Vec<VertexId> = self.ids.iter().map(|&v| f(v)).collect();
        let distinct: BTreeSet<_> = ids.iter().collect();
        if distinct.len() != ids.len() {
            return Err(Error::Precondition("relabeling is not injective".into()));
        }
        let edges = self.edges().map(|(i, j)| (ids[i], ids[j])).collect::<Vec<_>>();
        Graph::from_edges(ids.iter().copied(), edges)
    }

    /// Same graph on ids `0..n`, preserving id order.
    pub fn compact(&self) -> Graph {
        Graph { ids: (0..self.n() as VertexId).collect(), adj: self.adj.clone(), m: self.m }
    }

    /// Connected components as sorted index lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_sets(&self) -> Vec<VertexSet> {
        self.components().into_iter().map(|c| self.to_ids(c)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    pub fn is_clique(&self, idx: &[usize]) -> bool {
        idx.iter().enumerate().all(|(k, &i)| idx[k + 1..].iter().all(|&j| self.adjacent(i, j)))
    }

    pub fn is_clique_ids(&self, s: &VertexSet) -> bool {
        match self.to_indices(s) {
            Ok(idx) => self.is_clique(&idx),
            Err(_) => false,
        }
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m * 2 == n * n.saturating_sub(1)
    }

    /// Number of unordered non-adjacent pairs.
    pub fn non_edges(&self) -> usize {
        let n = self.n();
        n * n.saturating_sub(1) / 2 - self.m
    }

    /// Adjacency rows as bitsets.
    pub fn bit_rows(&self) -> Vec<Bits> {
        self.adj
            .iter()
            .map(|l| {
                let mut b = Bits::new(self.n());
                for &j in l {
                    b.set(j);
                }
                b
            })
            .collect()
    }

    pub fn has_triangle(&self) -> bool {
        self.edges().any(|(i, j)| sorted_intersects(&self.adj[i], &self.adj[j]))
    }
}

/// True when two sorted slices share an element.
pub(crate) fn sorted_intersects(a: &[usize], b: &[usize]) -> bool {
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        match a[x].cmp(&b[y]) {
            std::cmp::Ordering::Less => x += 1,
            std::cmp::Ordering::Greater => y += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// The graphs that come with names.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Named {
    Petersen,
    Heawood,
    House,
    Diamond,
    Bowtie,
    Cycle(usize),
    Clique(usize),
    Path(usize),
    Wheel(usize),
    Star(usize),
}

impl Named {
    /// Parses `petersen`, `cycle(5)`, `cycle:5` or `cycle5`.
    pub fn parse(s: &str) -> Result<Named> {
        let s = s.trim().to_ascii_lowercase();
        let split = s.find(|c: char| c.is_ascii_digit() || c == '(' || c == ':');
        let (head, tail) = match split {
            Some(k) => s.split_at(k),
            None => (s.as_str(), ""),
        };
        let arg = tail.trim_matches(|c| c == '(' || c == ')' || c == ':');
        let num = || arg.parse::<usize>().ok().filter(|&k| k >= 1).ok_or_else(|| Error::UnknownName(s.clone()));
        let plain = |g: Named| if arg.is_empty() { Ok(g) } else { Err(Error::UnknownName(s.clone())) };
        match head {
            "petersen" => plain(Named::Petersen),
            "heawood" => plain(Named::Heawood),
            "house" => plain(Named::House),
            "diamond" => plain(Named::Diamond),
            "bowtie" => plain(Named::Bowtie),
            "cycle" | "c" => num().map(Named::Cycle),
            "clique" | "k" => num().map(Named::Clique),
            "path" | "p" => num().map(Named::Path),
            "wheel" | "w" => num().map(Named::Wheel),
            "star" => num().map(Named::Star),
            _ => Err(Error::UnknownName(s.clone())),
        }
    }

    pub fn build(self) -> Graph {
        match self {
            Named::Petersen => {
                let mut e = Vec::new();
                for i in 0..5 {
                    e.push((i, (i + 1) % 5));
                    e.push((i, i + 5));
                    e.push((i + 5, (i + 2) % 5 + 5));
                }
                Graph::from_index_edges(10, &e)
            }
            Named::Heawood => {
                let mut e = Vec::new();
                for i in 0..14 {
                    e.push((i, (i + 1) % 14));
                    if i % 2 == 0 {
                        e.push((i, (i + 5) % 14));
                    }
                }
                Graph::from_index_edges(14, &e)
            }
            // a=0, b=1, c=2, d=3, e=4
            Named::House => Graph::from_index_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)]),
            Named::Diamond => Graph::from_index_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]),
            Named::Bowtie => Graph::from_index_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]),
            Named::Cycle(n) => {
                let e: Vec<_> = match n {
                    1 => vec![],
                    2 => vec![(0, 1)],
                    _ => (0..n).map(|i| (i, (i + 1) % n)).collect(),
                };
                Graph::from_index_edges(n, &e)
            }
            Named::Clique(n) => {
                let e: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
                Graph::from_index_edges(n, &e)
            }
            Named::Path(n) => {
                let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Graph::from_index_edges(n, &e)
            }
            // hub is vertex n, rim is the cycle on 0..n
            Named::Wheel(n) => {
                let mut e: Vec<_> = if n >= 3 { (0..n).map(|i| (i, (i + 1) % n)).collect() } else { (1..n).map(|i| (i - 1, i)).collect() };
                e.extend((0..n).map(|i| (i, n)));
                Graph::from_index_edges(n + 1, &e)
            }
            // center is vertex 0
            Named::Star(n) => {
                let e: Vec<_> = (1..=n).map(|i| (0, i)).collect();
                Graph::from_index_edges(n + 1, &e)
            }
        }
    }
}

pub fn named_graph(name: &str) -> Result<Graph> {
    Ok(Named::parse(name)?.build())
}
