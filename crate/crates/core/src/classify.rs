//! Isomorphism classes of cubic Cayley graphs on `D_2p`, `p` an odd prime.
//!
//! Every type-II set `{b*a^s1, b*a^s2, b*a^s3}` is mapped by an automorphism
//! to `{b, b*a, b*a^s}` with `s` in `Z_p \ {0, 1}`, and two such normal forms
//! are isomorphic exactly when `s` and `t` share an orbit of
//! `s -> {s, 1/s, 1-s, (s-1)/s, 1/(1-s), s/(s-1)}`.

use serde::{Deserialize, Serialize};

use crate::cayley::{cubic_connection_sets, ConnectionSet, CubicType};
use crate::dihedral::{enumerate_automorphisms, DihedralAutomorphism, DihedralElement};
use crate::error::{Error, Result};
use crate::number_theory::{count_classes, mod_inverse, require_odd_prime, ModInt};

/// The normal form `{b, b*a, b*a^s}` of a type-II set together with the
/// automorphism that produces it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CanonicalType2 {
    pub p: u64,
    pub s: ModInt,
    pub automorphism: DihedralAutomorphism,
}

impl CanonicalType2 {
    pub fn connection_set(&self) -> ConnectionSet {
        ConnectionSet::type_two(self.p, [0, 1, self.s.value() as i64])
            .expect("normal form is a valid type-II set")
    }
}

/// Sorts the exponents `s1 < s2 < s3` and applies `sigma` with
/// `lambda = (s2 - s1)^-1`, `k = -lambda * s1`, giving `s = lambda * (s3 - s1)`.
pub fn canonicalize_type2(exponents: [u64; 3], p: u64) -> Result<CanonicalType2> {
    require_odd_prime(p)?;
    let mut e = exponents.map(|x| x % p);
    e.sort_unstable();
    let [s1, s2, s3] = e;
    if s1 == s2 || s2 == s3 {
        return Err(Error::DegenerateSet);
    }
    let lambda = mod_inverse(ModInt::new((s2 - s1) as i64, p)?)?;
    let k = ModInt::new(-(s1 as i64), p)?.mul(lambda)?;
    let s = ModInt::new((s3 - s1) as i64, p)?.mul(lambda)?;
    let automorphism = DihedralAutomorphism::new(lambda.value() as i64, k.value() as i64, p)?;

    let image = ConnectionSet::new(
        p,
        e.iter()
            .map(|&x| automorphism.apply_unchecked(DihedralElement::reflection(x as i64, p))),
    )?;
    let canonical = CanonicalType2 { p, s, automorphism };
    assert_eq!(
        image,
        canonical.connection_set(),
        "normalising automorphism misapplied"
    );
    Ok(canonical)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceClass {
    pub representative: u64,
    pub members: Vec<u64>,
    pub size: usize,
}

impl EquivalenceClass {
    fn from_members(mut members: Vec<u64>) -> Self {
        members.sort_unstable();
        members.dedup();
        Self {
            representative: members[0],
            size: members.len(),
            members,
        }
    }

    pub fn contains(&self, s: u64) -> bool {
        self.members.binary_search(&s).is_ok()
    }
}

fn check_domain(s: u64, p: u64) -> Result<()> {
    if s >= p || s < 2 {
        Err(Error::OutOfDomain(s))
    } else {
        Ok(())
    }
}

/// The orbit `[s]` in `Z_p \ {0, 1}`.
pub fn class_of(s: u64, p: u64) -> Result<EquivalenceClass> {
    require_odd_prime(p)?;
    check_domain(s, p)?;
    let s = ModInt::new(s as i64, p)?;
    let one = ModInt::new(1, p)?;
    let inv = |x: ModInt| mod_inverse(x);
    let s_inv = inv(s)?;
    let one_minus = one.sub(s)?;
    let s_minus_one = s.sub(one)?;
    let members = [
        s,
        s_inv,
        one_minus,
        s_minus_one.mul(s_inv)?,
        inv(one_minus)?,
        s.mul(inv(s_minus_one)?)?,
    ];
    Ok(EquivalenceClass::from_members(
        members.iter().map(|m| m.value()).collect(),
    ))
}

/// The six isomorphism conditions between `{b, b*a, b*a^s}` and `{b, b*a, b*a^t}`.
pub fn equivalent(s: u64, t: u64, p: u64) -> Result<bool> {
    require_odd_prime(p)?;
    check_domain(s, p)?;
    check_domain(t, p)?;
    let (s, t, p) = (s as i128, t as i128, p as i128);
    let zero = |x: i128| x.rem_euclid(p) == 0;
    let st = s * t;
    Ok(zero(s - t)
        || zero(st - 1)
        || zero(s + t - 1)
        || zero(s - st - 1)
        || zero(t - st - 1)
        || zero(s + t - st))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTable {
    pub p: u64,
    /// Sorted by representative.
    pub classes: Vec<EquivalenceClass>,
}

impl ClassTable {
    pub fn total_elements(&self) -> usize {
        self.classes.iter().map(|c| c.size).sum()
    }

    pub fn n_tilde(&self) -> u64 {
        self.classes.len() as u64
    }

    /// Type-II classes plus the single type-I class.
    pub fn big_n_tilde(&self) -> u64 {
        self.n_tilde() + 1
    }

    pub fn class_containing(&self, s: u64) -> Option<&EquivalenceClass> {
        self.classes.iter().find(|c| c.contains(s))
    }
}

pub fn enumerate_classes(p: u64) -> Result<ClassTable> {
    require_odd_prime(p)?;
    let mut assigned = vec![false; p as usize];
    let mut classes = Vec::new();
    for s in 2..p {
        if assigned[s as usize] {
            continue;
        }
        let class = class_of(s, p)?;
        for &m in &class.members {
            assigned[m as usize] = true;
        }
        classes.push(class);
    }
    Ok(ClassTable { p, classes })
}

fn require_cubic_on(set: &ConnectionSet, p: u64) -> Result<CubicType> {
    if set.n() != p {
        return Err(Error::MismatchedOrder(set.n(), p));
    }
    set.require_cubic()
}

/// Isomorphism of two cubic Cayley graphs on `D_2p` decided from their
/// connection sets alone.
pub fn isomorphic(s: &ConnectionSet, t: &ConnectionSet, p: u64) -> Result<bool> {
    require_odd_prime(p)?;
    let ts = require_cubic_on(s, p)?;
    let tt = require_cubic_on(t, p)?;
    Ok(match (ts, tt) {
        (CubicType::TypeI { .. }, CubicType::TypeI { .. }) => true,
        (
            CubicType::TypeII { k1, k2, k3 },
            CubicType::TypeII {
                k1: l1,
                k2: l2,
                k3: l3,
            },
        ) => {
            let a = canonicalize_type2([k1, k2, k3], p)?;
            let b = canonicalize_type2([l1, l2, l3], p)?;
            equivalent(a.s.value(), b.s.value(), p)?
        }
        _ => false,
    })
}

/// Image of a connection set under an automorphism.
pub fn apply_to_set(sigma: &DihedralAutomorphism, set: &ConnectionSet) -> Result<ConnectionSet> {
    if sigma.n() != set.n() {
        return Err(Error::MismatchedModulus(set.n()));
    }
    ConnectionSet::new(
        set.n(),
        set.elements().iter().map(|&x| sigma.apply_unchecked(x)),
    )
}

/// First automorphism (by `(lambda, k)`) carrying `s` onto `t`, if any.
pub fn find_cayley_isomorphism(
    s: &ConnectionSet,
    t: &ConnectionSet,
) -> Result<Option<DihedralAutomorphism>> {
    if s.n() != t.n() {
        return Err(Error::MismatchedOrder(s.n(), t.n()));
    }
    if s.len() != t.len() {
        return Ok(None);
    }
    for sigma in enumerate_automorphisms(s.n())? {
        let hit = s
            .elements()
            .iter()
            .all(|&x| t.contains(sigma.apply_unchecked(x)));
        if hit {
            return Ok(Some(sigma));
        }
    }
    Ok(None)
}

/// All `(p-1)/2 * p` type-I and `C(p, 3)` type-II connection sets of `D_2p`.
pub fn enumerate_cubic_sets(p: u64) -> Result<Vec<ConnectionSet>> {
    require_odd_prime(p)?;
    cubic_connection_sets(p)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsomorphismClass {
    /// `{a, a^-1, b}` or `{b, b*a, b*a^s}` with `s` the class minimum.
    pub representative: ConnectionSet,
    pub members: Vec<ConnectionSet>,
}

/// Partitions every cubic connection set of `D_2p` by [`isomorphic`].
pub fn classify_all(p: u64) -> Result<Vec<IsomorphismClass>> {
    let mut groups: Vec<Vec<ConnectionSet>> = Vec::new();
    for set in enumerate_cubic_sets(p)? {
        let mut placed = false;
        for group in groups.iter_mut() {
            if isomorphic(&group[0], &set, p)? {
                group.push(set.clone());
                placed = true;
                break;
            }
        }
        if !placed {
            groups.push(vec![set]);
        }
    }
    let mut classes = groups
        .into_iter()
        .map(|members| {
            let representative = canonical_representative(&members[0], p)?;
            Ok(IsomorphismClass {
                representative,
                members,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    classes.sort_by(|a, b| {
        a.representative
            .cubic_type()
            .cmp(&b.representative.cubic_type())
    });
    Ok(classes)
}

/// `{a, a^-1, b}` for type-I, `{b, b*a, b*a^s}` with minimal `s` for type-II.
pub fn canonical_representative(set: &ConnectionSet, p: u64) -> Result<ConnectionSet> {
    match require_cubic_on(set, p)? {
        CubicType::TypeI { .. } => ConnectionSet::type_one(p, 1, 0),
        CubicType::TypeII { k1, k2, k3 } => {
            let canonical = canonicalize_type2([k1, k2, k3], p)?;
            let rep = class_of(canonical.s.value(), p)?.representative;
            ConnectionSet::type_two(p, [0, 1, rep as i64])
        }
        CubicType::TypeIII { .. } => Err(Error::InvalidModulus(p)),
    }
}

/// Hand-checked class tables of `Z_p \ {0, 1}` for `p <= 23`.
pub const KNOWN_CLASS_TABLES: &[(u64, &[&[u64]])] = &[
    (3, &[&[2]]),
    (5, &[&[2, 3, 4]]),
    (7, &[&[2, 4, 6], &[3, 5]]),
    (11, &[&[2, 6, 10], &[3, 4, 5, 7, 8, 9]]),
    (13, &[&[2, 7, 12], &[3, 5, 6, 9, 11, 8], &[4, 10]]),
    (
        17,
        &[&[2, 9, 16], &[3, 6, 8, 15, 12, 10], &[4, 5, 7, 13, 14, 11]],
    ),
    (
        19,
        &[
            &[2, 10, 18],
            &[3, 7, 9, 11, 13, 17],
            &[4, 5, 6, 14, 15, 16],
            &[8, 12],
        ],
    ),
    (
        23,
        &[
            &[2, 12, 22],
            &[3, 8, 11, 13, 16, 21],
            &[4, 6, 9, 20, 18, 15],
            &[5, 7, 10, 14, 17, 19],
        ],
    ),
];

/// Whether `table` matches the known classes for its prime, compared as sets
/// of sets. `None` when no reference exists for that prime.
pub fn matches_known_table(table: &ClassTable) -> Option<bool> {
    let (_, known) = KNOWN_CLASS_TABLES.iter().find(|(p, _)| *p == table.p)?;
    let mut expected: Vec<Vec<u64>> = known
        .iter()
        .map(|c| {
            let mut c = c.to_vec();
            c.sort_unstable();
            c
        })
        .collect();
    expected.sort();
    let mut actual: Vec<Vec<u64>> = table.classes.iter().map(|c| c.members.clone()).collect();
    actual.sort();
    Some(actual == expected)
}

/// Class count by enumeration against the closed-form count.
pub fn count_matches_enumeration(p: u64) -> Result<bool> {
    let report = count_classes(p)?;
    let table = enumerate_classes(p)?;
    Ok(report.n_tilde == table.n_tilde() && report.big_n_tilde == table.big_n_tilde())
}
