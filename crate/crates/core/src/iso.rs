//! Exact graph isomorphism by individualization and refinement.
//!
//! Both graphs are coloured in lockstep: every refinement round maps the
//! signatures of both graphs through one shared, sorted table, so colour ids
//! mean the same thing on either side. Colour-class sizes that disagree prune
//! the branch. Individualizing a vertex also splits every cell by BFS
//! distance to it. Discrete colourings yield a candidate bijection that is
//! checked edge by edge before it is returned.

use std::collections::BTreeMap;

use crate::graph::Graph;

type Coloring = Vec<u32>;

/// An edge-preserving bijection `a -> b` (`map[u]` is the image of `u`), or
/// `None` when the graphs are not isomorphic.
pub fn brute_force_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return None;
    }
    let ca: Coloring = a.degrees().into_iter().map(|d| d as u32).collect();
    let cb: Coloring = b.degrees().into_iter().map(|d| d as u32).collect();
    let (ca, cb) = recolor(&ca, &cb, |v| (ca[v], 0, 0), |v| (cb[v], 0, 0))?;
    search(a, b, ca, cb)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    brute_force_isomorphism(a, b).is_some()
}

/// Assigns shared colour ids to per-vertex signatures. `None` when the two
/// graphs end up with different colour-class sizes.
fn recolor<K: Ord + Clone>(
    ca: &Coloring,
    cb: &Coloring,
    key_a: impl Fn(usize) -> K,
    key_b: impl Fn(usize) -> K,
) -> Option<(Coloring, Coloring)> {
    let keys_a: Vec<K> = (0..ca.len()).map(key_a).collect();
    let keys_b: Vec<K> = (0..cb.len()).map(key_b).collect();
    let mut table: BTreeMap<K, (u32, i64)> = BTreeMap::new();
    for k in &keys_a {
        table.entry(k.clone()).or_insert((0, 0)).1 += 1;
    }
    for k in &keys_b {
        table.entry(k.clone()).or_insert((0, 0)).1 -= 1;
    }
    if table.values().any(|&(_, balance)| balance != 0) {
        return None;
    }
    for (id, entry) in table.values_mut().enumerate() {
        entry.0 = id as u32;
    }
    Some((
        keys_a.iter().map(|k| table[k].0).collect(),
        keys_b.iter().map(|k| table[k].0).collect(),
    ))
}

fn color_count(c: &Coloring) -> usize {
    let mut seen: Vec<u32> = c.clone();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Iterated neighbourhood refinement to a stable (equitable) colouring.
fn refine(
    a: &Graph,
    b: &Graph,
    mut ca: Coloring,
    mut cb: Coloring,
) -> Option<(Coloring, Coloring)> {
    let mut classes = color_count(&ca);
    loop {
        let signature = |g: &Graph, c: &Coloring, v: usize| {
            let mut around: Vec<u32> = g.neighbors(v).map(|u| c[u]).collect();
            around.sort_unstable();
            (c[v], around)
        };
        let (na, nb) = recolor(&ca, &cb, |v| signature(a, &ca, v), |v| signature(b, &cb, v))?;
        let refined = color_count(&na);
        ca = na;
        cb = nb;
        if refined == classes {
            return Some((ca, cb));
        }
        classes = refined;
    }
}

fn distance_key(g: &Graph, source: usize) -> Vec<u32> {
    g.distances_from(source)
        .into_iter()
        .map(|d| d.map_or(u32::MAX, |d| d as u32))
        .collect()
}

fn search(a: &Graph, b: &Graph, ca: Coloring, cb: Coloring) -> Option<Vec<usize>> {
    let (ca, cb) = refine(a, b, ca, cb)?;
    let n = ca.len();

    let mut sizes: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &ca {
        *sizes.entry(c).or_default() += 1;
    }
    let target = sizes
        .iter()
        .filter(|(_, &size)| size > 1)
        .min_by_key(|(&color, &size)| (size, color))
        .map(|(&color, _)| color);

    let Some(target) = target else {
        let mut map = vec![0; n];
        let mut by_color = vec![0; n];
        for (w, &c) in cb.iter().enumerate() {
            by_color[c as usize] = w;
        }
        for (v, &c) in ca.iter().enumerate() {
            map[v] = by_color[c as usize];
        }
        return a
            .edges()
            .into_iter()
            .all(|(u, v)| b.has_edge(map[u], map[v]))
            .then_some(map);
    };

    let v = (0..n)
        .find(|&v| ca[v] == target)
        .expect("cell is non-empty");
    let dist_a = distance_key(a, v);
    for w in (0..n).filter(|&w| cb[w] == target) {
        let dist_b = distance_key(b, w);
        let Some((na, nb)) = recolor(
            &ca,
            &cb,
            |x| (ca[x], x != v, dist_a[x]),
            |x| (cb[x], x != w, dist_b[x]),
        ) else {
            continue;
        };
        if let Some(map) = search(a, b, na, nb) {
            return Some(map);
        }
    }
    None
}
