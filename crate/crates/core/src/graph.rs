//! Dense simple graphs over `0..order` stored as bitset rows.

use std::collections::VecDeque;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        let words = order.div_ceil(64).max(1);
        Self {
            order,
            words,
            bits: vec![0; words * order],
        }
    }

    pub fn from_edges(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::empty(order);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Adds the undirected edge `{u, v}`. Self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.order && v < self.order, "vertex out of range");
        if u == v {
            return;
        }
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + bit)
            })
        })
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|u| self.degree(u)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order)
            .flat_map(|u| {
                self.neighbors(u)
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn is_regular(&self, degree: usize) -> bool {
        (0..self.order).all(|u| self.degree(u) == degree)
    }

    pub fn adjacency_f64(&self) -> Vec<f64> {
        let n = self.order;
        let mut a = vec![0.0; n * n];
        for (u, v) in self.edges() {
            a[u * n + v] = 1.0;
            a[v * n + u] = 1.0;
        }
        a
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap() + 1;
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(d);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.order];
        let mut count = 0;
        for start in 0..self.order {
            if seen[start] {
                continue;
            }
            count += 1;
            for (v, d) in self.distances_from(start).into_iter().enumerate() {
                if d.is_some() {
                    seen[v] = true;
                }
            }
        }
        count
    }

    /// One traversal from vertex 0 reaches everything. Graphs with fewer than
    /// two vertices count as connected only when they have exactly one.
    pub fn is_connected(&self) -> bool {
        self.order > 0 && self.distances_from(0).iter().all(Option::is_some)
    }

    /// Proper 2-colouring, if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color: Vec<Option<u8>> = vec![None; self.order];
        for start in 0..self.order {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(0);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let c = color[u].unwrap();
                for v in self.neighbors(u) {
                    match color[v] {
                        None => {
                            color[v] = Some(1 - c);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self::from_edges(
            self.order,
            self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitset_rows_span_words() {
        let mut g = Graph::empty(130);
        g.add_edge(0, 129);
        g.add_edge(64, 65);
        g.add_edge(3, 3);
        assert!(g.has_edge(129, 0));
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![129]);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edges(), vec![(0, 129), (64, 65)]);
    }

    #[test]
    fn connectivity_and_coloring() {
        let path = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        assert!(path.is_connected());
        assert_eq!(path.two_coloring(), Some(vec![0, 1, 0, 1]));
        let triangles = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert!(!triangles.is_connected());
        assert_eq!(triangles.component_count(), 2);
        assert!(triangles.two_coloring().is_none());
        assert!(!Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
    }
}
