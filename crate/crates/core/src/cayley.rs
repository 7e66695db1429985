//! Connection sets, Cayley graphs on `D_2n`, circulants, connectivity and
//! hamiltonian cycles.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dihedral::{inverse_of, product, DihedralElement};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::number_theory::{gcd, gcd_many};

/// Shape of a cubic connection set. Exponents are stored reduced mod `n`:
/// type-I keeps the smaller of `k, n-k`, type-II keeps `k1 < k2 < k3`,
/// type-III keeps `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CubicType {
    /// `{a^k, a^-k, b*a^i}`
    TypeI { k: u64, i: u64 },
    /// `{b*a^k1, b*a^k2, b*a^k3}`
    TypeII { k1: u64, k2: u64, k3: u64 },
    /// `{a^(n/2), b*a^i, b*a^j}`, even `n` only
    TypeIII { i: u64, j: u64 },
}

impl CubicType {
    pub fn label(&self) -> &'static str {
        match self {
            CubicType::TypeI { .. } => "I",
            CubicType::TypeII { .. } => "II",
            CubicType::TypeIII { .. } => "III",
        }
    }
}

impl fmt::Display for CubicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CubicType::TypeI { k, i } => write!(f, "type-I(k={k}, i={i})"),
            CubicType::TypeII { k1, k2, k3 } => write!(f, "type-II({k1}, {k2}, {k3})"),
            CubicType::TypeIII { i, j } => write!(f, "type-III(i={i}, j={j})"),
        }
    }
}

/// A symmetric, identity-free subset of `D_2n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConnectionSet {
    n: u64,
    elements: Vec<DihedralElement>,
    cubic_type: Option<CubicType>,
}

impl ConnectionSet {
    /// Validates `raw` as a connection set; duplicates collapse.
    pub fn new(n: u64, raw: impl IntoIterator<Item = DihedralElement>) -> Result<Self> {
        validate_connection_set(n, raw)
    }

    /// Comma-separated element tokens; duplicate tokens are rejected.
    pub fn parse(text: &str, n: u64) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidOrder(n));
        }
        let mut seen = BTreeSet::new();
        for token in text.split(',') {
            if token.trim().is_empty() {
                if text.trim().is_empty() {
                    break;
                }
                return Err(Error::Parse(format!("empty element in {text:?}")));
            }
            let x = DihedralElement::parse(token, n)?;
            if !seen.insert(x) {
                return Err(Error::Parse(format!("duplicate element {x}")));
            }
        }
        validate_connection_set(n, seen)
    }

    /// Like `new`, but the result must be a typed cubic set.
    fn new_cubic(n: u64, raw: impl IntoIterator<Item = DihedralElement>) -> Result<Self> {
        let set = Self::new(n, raw)?;
        set.require_cubic()?;
        Ok(set)
    }

    pub fn type_one(n: u64, k: i64, i: i64) -> Result<Self> {
        Self::new_cubic(
            n,
            [
                DihedralElement::rotation(k, n),
                DihedralElement::rotation(-k, n),
                DihedralElement::reflection(i, n),
            ],
        )
    }

    pub fn type_two(n: u64, exponents: [i64; 3]) -> Result<Self> {
        Self::new_cubic(n, exponents.map(|k| DihedralElement::reflection(k, n)))
    }

    pub fn type_three(n: u64, i: i64, j: i64) -> Result<Self> {
        if n % 2 == 1 {
            return Err(Error::UnclassifiableCubic);
        }
        Self::new_cubic(
            n,
            [
                DihedralElement::rotation(n as i64 / 2, n),
                DihedralElement::reflection(i, n),
                DihedralElement::reflection(j, n),
            ],
        )
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Sorted in vertex order.
    pub fn elements(&self) -> &[DihedralElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The cubic template, or `UnclassifiableCubic` for the rotation-only
    /// cubic sets and `NotCubic` when `|S| != 3`.
    pub fn require_cubic(&self) -> Result<CubicType> {
        match (self.cubic_type, self.elements.len()) {
            (Some(t), _) => Ok(t),
            (None, 3) => Err(Error::UnclassifiableCubic),
            (None, _) => Err(Error::NotCubic),
        }
    }

    pub fn cubic_type(&self) -> Option<CubicType> {
        self.cubic_type
    }

    pub fn contains(&self, x: DihedralElement) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Exponents of the reflections in the set, ascending.
    pub fn reflection_exponents(&self) -> Vec<u64> {
        self.elements
            .iter()
            .filter(|x| x.is_reflection())
            .map(|x| x.exponent())
            .collect()
    }
}

impl fmt::Display for ConnectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn validate_connection_set(
    n: u64,
    raw: impl IntoIterator<Item = DihedralElement>,
) -> Result<ConnectionSet> {
    if n < 3 {
        return Err(Error::InvalidOrder(n));
    }
    let mut elements = Vec::new();
    for x in raw {
        if x.exponent() >= n {
            return Err(Error::MismatchedModulus(n));
        }
        elements.push(x);
    }
    elements.sort_unstable();
    elements.dedup();
    if elements.contains(&DihedralElement::IDENTITY) {
        return Err(Error::ContainsIdentity);
    }
    for &x in &elements {
        if elements.binary_search(&inverse_of(x, n)).is_err() {
            return Err(Error::NotSymmetric(x.to_string()));
        }
    }
    let cubic_type = if elements.len() == 3 {
        detect_cubic_type(n, &elements)
    } else {
        None
    };
    Ok(ConnectionSet {
        n,
        elements,
        cubic_type,
    })
}

/// `elements` is sorted, symmetric and identity-free. Templates are tried in
/// the order I, III, II. `{a^k, a^-k, a^(n/2)}` matches none of them.
fn detect_cubic_type(n: u64, elements: &[DihedralElement]) -> Option<CubicType> {
    let rotations: Vec<u64> = elements
        .iter()
        .filter(|x| !x.is_reflection())
        .map(|x| x.exponent())
        .collect();
    let reflections: Vec<u64> = elements
        .iter()
        .filter(|x| x.is_reflection())
        .map(|x| x.exponent())
        .collect();
    match (rotations.as_slice(), reflections.as_slice()) {
        (&[k, other], &[i]) if (k + other) % n == 0 && 2 * k != n => {
            Some(CubicType::TypeI { k: k.min(other), i })
        }
        (&[half], &[i, j]) if 2 * half == n => Some(CubicType::TypeIII { i, j }),
        (&[], &[k1, k2, k3]) => Some(CubicType::TypeII { k1, k2, k3 }),
        _ => None,
    }
}

/// Every cubic connection set of `D_2n`: type-I, then type-III (even `n`),
/// then type-II.
pub fn cubic_connection_sets(n: u64) -> Result<Vec<ConnectionSet>> {
    if n < 3 {
        return Err(Error::InvalidOrder(n));
    }
    let mut sets = Vec::new();
    for k in 1..=(n - 1) / 2 {
        for i in 0..n {
            sets.push(ConnectionSet::type_one(n, k as i64, i as i64)?);
        }
    }
    if n.is_multiple_of(2) {
        for i in 0..n {
            for j in i + 1..n {
                sets.push(ConnectionSet::type_three(n, i as i64, j as i64)?);
            }
        }
    }
    for k1 in 0..n {
        for k2 in k1 + 1..n {
            for k3 in k2 + 1..n {
                sets.push(ConnectionSet::type_two(n, [k1, k2, k3].map(|k| k as i64))?);
            }
        }
    }
    Ok(sets)
}

/// `X(D_2n, S)` on the fixed vertex order `a^0..a^(n-1), b*a^0..b*a^(n-1)`,
/// with `g ~ h` iff `h * g^-1` lies in `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyGraph {
    connection_set: ConnectionSet,
    graph: Graph,
}

impl CayleyGraph {
    pub fn n(&self) -> u64 {
        self.connection_set.n
    }

    pub fn connection_set(&self) -> &ConnectionSet {
        &self.connection_set
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex(&self, index: usize) -> DihedralElement {
        DihedralElement::from_index(index, self.n())
    }
}

pub fn build_graph(set: &ConnectionSet) -> CayleyGraph {
    let n = set.n;
    let mut graph = Graph::empty(2 * n as usize);
    for g in crate::dihedral::elements(n) {
        for &s in &set.elements {
            // h * g^-1 = s  <=>  h = s * g
            let h = product(s, g, n);
            graph.add_edge(g.index(n), h.index(n));
        }
    }
    CayleyGraph {
        connection_set: set.clone(),
        graph,
    }
}

/// `C_n x K_2`: the n-cycle on `0..n`, its copy on `n..2n`, and the rungs `t -- n+t`.
pub fn build_prism(n: u64) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidOrder(n));
    }
    let n = n as usize;
    Ok(Graph::from_edges(
        2 * n,
        (0..n).flat_map(|t| {
            let next = (t + 1) % n;
            [(t, next), (n + t, n + next), (t, n + t)]
        }),
    ))
}

/// `X(Z_n, R)` with `i ~ i + r` for `r` in `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantGraph {
    n: u64,
    residues: Vec<u64>,
    graph: Graph,
}

impl CirculantGraph {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }
}

pub fn build_circulant(n: u64, residues: &[i64]) -> Result<CirculantGraph> {
    if n < 1 {
        return Err(Error::InvalidOrder(n));
    }
    let set: BTreeSet<u64> = residues
        .iter()
        .map(|&r| r.rem_euclid(n as i64) as u64)
        .collect();
    if set.contains(&0) {
        return Err(Error::ContainsZero);
    }
    if let Some(r) = set.iter().find(|&&r| !set.contains(&(n - r))) {
        return Err(Error::NotSymmetric(r.to_string()));
    }
    let order = n as usize;
    let graph = Graph::from_edges(
        order,
        (0..order).flat_map(|i| set.iter().map(move |&r| (i, (i + r as usize) % order))),
    );
    Ok(CirculantGraph {
        n,
        residues: set.into_iter().collect(),
        graph,
    })
}

/// Connectivity of a cubic Cayley graph from the gcd of its exponents alone.
pub fn is_connected_gcd(set: &ConnectionSet) -> Result<bool> {
    let n = set.n;
    let diff = |x: u64, y: u64| x as i64 - y as i64;
    Ok(match set.require_cubic()? {
        CubicType::TypeI { k, .. } => gcd(k, n) == 1,
        CubicType::TypeII { k1, k2, k3 } => {
            gcd_many(&[diff(k1, k2), diff(k1, k3), diff(k2, k3)], n) == 1
        }
        CubicType::TypeIII { i, j } => gcd_many(&[diff(i, j)], n / 2) == 1,
    })
}

/// Connectivity by traversal. Graphs on fewer than two vertices are never
/// reported connected here since no Cayley graph on `D_2n` has them.
pub fn is_connected_bfs(graph: &Graph) -> bool {
    graph.order() >= 2 && graph.is_connected()
}

/// Checks that `cycle` lists every vertex once and that consecutive vertices,
/// including last-to-first, are adjacent.
pub fn is_hamiltonian_cycle(graph: &Graph, cycle: &[usize]) -> bool {
    let order = graph.order();
    if cycle.len() != order || order < 3 {
        return false;
    }
    let mut seen = vec![false; order];
    for &v in cycle {
        if v >= order || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    (0..order).all(|t| graph.has_edge(cycle[t], cycle[(t + 1) % order]))
}

/// Walks `x, s1*x, s2*s1*x, ...` alternating two reflections whose exponent
/// difference generates `Z_n`.
fn alternating_reflection_cycle(n: u64, reflections: &[u64]) -> Option<Vec<DihedralElement>> {
    let (x, y) = reflections.iter().enumerate().find_map(|(idx, &x)| {
        reflections[idx + 1..]
            .iter()
            .find(|&&y| gcd(y - x, n) == 1)
            .map(|&y| (x, y))
    })?;
    let steps = [
        DihedralElement::reflection(x as i64, n),
        DihedralElement::reflection(y as i64, n),
    ];
    let mut walk = Vec::with_capacity(2 * n as usize);
    let mut g = DihedralElement::IDENTITY;
    for t in 0..2 * n as usize {
        walk.push(g);
        g = product(steps[t % 2], g, n);
    }
    Some(walk)
}

/// An explicit Hamilton cycle of a connected cubic Cayley graph, verified
/// before it is returned.
pub fn hamiltonian_witness(set: &ConnectionSet) -> Result<Vec<DihedralElement>> {
    let n = set.n;
    if !is_connected_gcd(set)? {
        return Err(Error::NotConnected);
    }
    let walk = match set.cubic_type.expect("checked by is_connected_gcd") {
        CubicType::TypeI { k, i } => {
            // a^0, a^k, ..., a^((n-1)k), then back along b*a^(i+(n-1)k), ..., b*a^i
            let rotations = (0..n).map(|t| DihedralElement::rotation((t * k) as i64, n));
            let reflections = (0..n)
                .rev()
                .map(|t| DihedralElement::reflection((i + t * k) as i64, n));
            rotations.chain(reflections).collect()
        }
        CubicType::TypeII { k1, k2, k3 } => alternating_reflection_cycle(n, &[k1, k2, k3])
            .ok_or_else(|| {
                Error::WitnessConstructionFailed(
                    "no reflection pair with exponent difference coprime to n".into(),
                )
            })?,
        CubicType::TypeIII { i, j } => alternating_reflection_cycle(n, &[i, j])
            .ok_or_else(|| Error::WitnessConstructionFailed("gcd(i - j, n) != 1".into()))?,
    };
    let graph = build_graph(set);
    let indices: Vec<usize> = walk.iter().map(|x| x.index(n)).collect();
    if !is_hamiltonian_cycle(&graph.graph, &indices) {
        return Err(Error::WitnessConstructionFailed(format!(
            "constructed walk is not a Hamilton cycle of X(D_{}, {set})",
            2 * n
        )));
    }
    Ok(walk)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rot(k: i64, n: u64) -> DihedralElement {
        DihedralElement::rotation(k, n)
    }

    fn refl(k: i64, n: u64) -> DihedralElement {
        DihedralElement::reflection(k, n)
    }

    #[test]
    fn validation_examples() {
        let s = ConnectionSet::new(7, [rot(1, 7), rot(6, 7), refl(0, 7)]).unwrap();
        assert_eq!(s.cubic_type(), Some(CubicType::TypeI { k: 1, i: 0 }));
        let s = ConnectionSet::new(7, [refl(0, 7), refl(1, 7), refl(3, 7)]).unwrap();
        assert_eq!(
            s.cubic_type(),
            Some(CubicType::TypeII {
                k1: 0,
                k2: 1,
                k3: 3
            })
        );
        assert!(matches!(
            ConnectionSet::new(7, [rot(1, 7), refl(0, 7)]),
            Err(Error::NotSymmetric(_))
        ));
        assert_eq!(
            ConnectionSet::new(7, [DihedralElement::IDENTITY]),
            Err(Error::ContainsIdentity)
        );
        let s = ConnectionSet::new(6, [rot(3, 6), refl(4, 6), refl(1, 6)]).unwrap();
        assert_eq!(s.cubic_type(), Some(CubicType::TypeIII { i: 1, j: 4 }));
        let s = ConnectionSet::new(8, [rot(5, 8), rot(3, 8), refl(2, 8)]).unwrap();
        assert_eq!(s.cubic_type(), Some(CubicType::TypeI { k: 3, i: 2 }));
    }

    #[test]
    fn rotation_only_cubic_sets_have_no_type() {
        let s = ConnectionSet::new(8, [rot(1, 8), rot(7, 8), rot(4, 8)]).unwrap();
        assert_eq!(s.cubic_type(), None);
        assert_eq!(s.require_cubic(), Err(Error::UnclassifiableCubic));
        assert_eq!(is_connected_gcd(&s), Err(Error::UnclassifiableCubic));
        assert_eq!(hamiltonian_witness(&s), Err(Error::UnclassifiableCubic));
        assert_eq!(ConnectionSet::type_one(8, 4, 0), Err(Error::NotCubic));
        assert_eq!(ConnectionSet::type_two(7, [1, 1, 2]), Err(Error::NotCubic));
        assert_eq!(ConnectionSet::type_three(8, 3, 3), Err(Error::NotCubic));
        assert_eq!(
            ConnectionSet::type_three(7, 0, 1),
            Err(Error::UnclassifiableCubic)
        );
    }

    #[test]
    fn parse_grammar() {
        let s = ConnectionSet::parse("a, a^2, b", 3).unwrap();
        assert_eq!(s.cubic_type(), Some(CubicType::TypeI { k: 1, i: 0 }));
        let s = ConnectionSet::parse("b,b*a^1,b*a^3", 7).unwrap();
        assert_eq!(
            s.cubic_type(),
            Some(CubicType::TypeII {
                k1: 0,
                k2: 1,
                k3: 3
            })
        );
        assert!(ConnectionSet::parse("b,b", 7).is_err());
        assert!(ConnectionSet::parse("b,,a", 7).is_err());
        assert!(ConnectionSet::parse("", 7).unwrap().is_empty());
        assert_eq!(ConnectionSet::parse("e,b", 7), Err(Error::ContainsIdentity));
    }

    #[test]
    fn graph_is_regular_and_loopless() {
        for n in 3..10 {
            for set in cubic_connection_sets(n).unwrap() {
                let g = build_graph(&set);
                assert!(g.graph().is_regular(3), "{set}");
                assert!((0..2 * n as usize).all(|v| !g.graph().has_edge(v, v)));
            }
        }
        let empty = build_graph(&ConnectionSet::new(6, []).unwrap());
        assert_eq!(empty.graph().order(), 12);
        assert_eq!(empty.graph().edge_count(), 0);
    }

    #[test]
    fn type_two_is_bipartite_on_cosets() {
        let set = ConnectionSet::type_two(5, [0, 1, 2]).unwrap();
        let g = build_graph(&set);
        let colors = g.graph().two_coloring().unwrap();
        assert!(colors[..5].iter().all(|&c| c == colors[0]));
        assert!(colors[5..].iter().all(|&c| c != colors[0]));
    }

    #[test]
    fn circulant_examples() {
        let c5 = build_circulant(5, &[1, 4]).unwrap();
        assert!(c5.graph().is_regular(2) && c5.graph().is_connected());
        let two_triangles = build_circulant(6, &[2, 4]).unwrap();
        assert_eq!(two_triangles.graph().component_count(), 2);
        assert!(matches!(
            build_circulant(5, &[1]),
            Err(Error::NotSymmetric(_))
        ));
        assert_eq!(build_circulant(5, &[0]), Err(Error::ContainsZero));
    }

    #[test]
    fn gcd_connectivity_examples() {
        let s = ConnectionSet::type_two(9, [0, 3, 6]).unwrap();
        assert!(!is_connected_gcd(&s).unwrap());
        assert!(!is_connected_bfs(build_graph(&s).graph()));
        for s in cubic_connection_sets(7).unwrap() {
            assert!(is_connected_gcd(&s).unwrap());
        }
        let s = ConnectionSet::type_one(8, 2, 0).unwrap();
        assert!(!is_connected_gcd(&s).unwrap());
        assert!(!is_connected_bfs(build_graph(&s).graph()));
        let prism = ConnectionSet::type_one(3, 1, 0).unwrap();
        assert!(is_connected_bfs(build_graph(&prism).graph()));
        assert!(!is_connected_bfs(&Graph::empty(6)));
        let s = ConnectionSet::new(7, [rot(1, 7), rot(6, 7)]).unwrap();
        assert_eq!(is_connected_gcd(&s), Err(Error::NotCubic));
    }

    #[test]
    fn hamiltonian_examples() {
        let s = ConnectionSet::type_two(5, [0, 1, 2]).unwrap();
        let cycle = hamiltonian_witness(&s).unwrap();
        assert_eq!(cycle.len(), 10);
        // consecutive vertices differ by b or b*a
        for t in 0..10 {
            let (g, h) = (cycle[t], cycle[(t + 1) % 10]);
            let step = product(h, inverse_of(g, 5), 5);
            assert!(step == refl(0, 5) || step == refl(1, 5), "{g} -> {h}");
        }
        let prism = ConnectionSet::type_one(3, 1, 0).unwrap();
        assert_eq!(hamiltonian_witness(&prism).unwrap().len(), 6);
        let s = ConnectionSet::type_two(9, [0, 3, 6]).unwrap();
        assert_eq!(hamiltonian_witness(&s), Err(Error::NotConnected));
    }

    #[test]
    fn prism_shape() {
        let g = build_prism(3).unwrap();
        assert_eq!(g.edge_count(), 9);
        assert!(g.is_regular(3));
        assert!(build_prism(4).unwrap().two_coloring().is_some());
        assert!(build_prism(5).unwrap().two_coloring().is_none());
        assert!(build_prism(2).is_err());
    }

    #[test]
    fn hamiltonian_checker_rejects_bad_walks() {
        let g = build_prism(4).unwrap();
        assert!(is_hamiltonian_cycle(&g, &[0, 1, 2, 3, 7, 6, 5, 4]));
        assert!(!is_hamiltonian_cycle(&g, &[0, 1, 2, 3, 7, 6, 5]));
        assert!(!is_hamiltonian_cycle(&g, &[0, 1, 2, 3, 7, 6, 4, 5]));
        assert!(!is_hamiltonian_cycle(&g, &[0, 1, 2, 3, 7, 6, 5, 5]));
    }
}
