use dihedral_cayley::cayley::{build_graph, ConnectionSet};
use dihedral_cayley::dihedral::{multiply, DihedralAutomorphism, DihedralElement};
use dihedral_cayley::export::{from_graph6, to_graph6};
use dihedral_cayley::graph::Graph;
use dihedral_cayley::number_theory::{
    gcd, is_odd_prime, legendre, mod_inverse, pow_mod, sqrt_mod, ModInt,
};
use dihedral_cayley::spectra::{char_poly, eigenvalues, symmetric_eigenvalues};
use proptest::prelude::*;

const PRIMES: &[u64] = &[3, 5, 7, 11, 13, 101, 1009, 7919, 65537, 1_000_003];

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(PRIMES)
}

fn element(n: u64) -> impl Strategy<Value = DihedralElement> {
    (any::<bool>(), 0..n as i64).prop_map(move |(r, e)| {
        if r {
            DihedralElement::reflection(e, n)
        } else {
            DihedralElement::rotation(e, n)
        }
    })
}

fn random_graph() -> impl Strategy<Value = Graph> {
    (1usize..40).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..3 * n)
            .prop_map(move |edges| Graph::from_edges(n, edges))
    })
}

proptest! {
    #[test]
    fn modint_matches_wide_arithmetic(a in any::<i64>(), b in any::<i64>(), m in 1u64..1 << 40) {
        let x = ModInt::new(a, m).unwrap();
        let y = ModInt::new(b, m).unwrap();
        let mm = m as i128;
        let reduce = |v: i128| v.rem_euclid(mm) as u64;
        prop_assert_eq!(x.add(y).unwrap().value(), reduce(a as i128 + b as i128));
        prop_assert_eq!(x.sub(y).unwrap().value(), reduce(a as i128 - b as i128));
        prop_assert_eq!(x.mul(y).unwrap().value(), reduce(reduce(a as i128) as i128 * reduce(b as i128) as i128));
        prop_assert_eq!(x.neg().value(), reduce(-(a as i128)));
    }

    #[test]
    fn inverse_multiplies_to_one(a in 1i64..1 << 30, p in prime()) {
        let x = ModInt::new(a, p).unwrap();
        prop_assume!(x.value() != 0);
        let inv = mod_inverse(x).unwrap();
        prop_assert_eq!(x.mul(inv).unwrap().value(), 1);
    }

    #[test]
    fn legendre_is_multiplicative(a in any::<i32>(), b in any::<i32>(), p in prime()) {
        let la = legendre(a as i64, p).unwrap().as_i8();
        let lb = legendre(b as i64, p).unwrap().as_i8();
        let lab = legendre((a as i64 * b as i64).rem_euclid(p as i64), p).unwrap().as_i8();
        prop_assert_eq!(lab, la * lb);
    }

    #[test]
    fn square_roots_square_back(a in any::<i32>(), p in prime()) {
        let roots = sqrt_mod(a as i64, p).unwrap();
        let target = (a as i64).rem_euclid(p as i64) as u64;
        let symbol = legendre(a as i64, p).unwrap().as_i8();
        prop_assert_eq!(roots.len(), (symbol + 1) as usize);
        for r in roots {
            prop_assert_eq!(r.mul(r).unwrap().value(), target);
        }
    }

    #[test]
    fn euler_criterion_by_pow_mod(a in 1u64..1_000_000, p in prime()) {
        prop_assume!(a % p != 0);
        let e = pow_mod(a, (p - 1) / 2, p);
        prop_assert!(e == 1 || e == p - 1);
        prop_assert_eq!(e == 1, legendre(a as i64, p).unwrap().as_i8() == 1);
    }

    #[test]
    fn odd_prime_test_agrees_with_trial_division(n in 0u64..20_000) {
        let trial = n > 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
        prop_assert_eq!(is_odd_prime(n), trial);
    }

    #[test]
    fn automorphisms_are_homomorphisms(
        (n, lambda, k, x, y) in (3u64..40).prop_flat_map(|n| (Just(n), 1..n as i64, 0..n as i64, element(n), element(n)))
    ) {
        prop_assume!(gcd(lambda as u64, n) == 1);
        let sigma = DihedralAutomorphism::new(lambda, k, n).unwrap();
        let xy = multiply(x, y, n).unwrap();
        let lhs = sigma.apply(xy).unwrap();
        let rhs = multiply(sigma.apply(x).unwrap(), sigma.apply(y).unwrap(), n).unwrap();
        prop_assert_eq!(lhs, rhs);
        let back = sigma.inverse().unwrap().apply(sigma.apply(x).unwrap()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn multiplication_is_associative(
        (n, x, y, z) in (3u64..30).prop_flat_map(|n| (Just(n), element(n), element(n), element(n)))
    ) {
        let left = multiply(multiply(x, y, n).unwrap(), z, n).unwrap();
        let right = multiply(x, multiply(y, z, n).unwrap(), n).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn graph6_round_trips(g in random_graph()) {
        let text = to_graph6(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn char_poly_is_relabelling_invariant(g in random_graph(), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(char_poly(&g), char_poly(&g.permuted(&perm)));
    }

    #[test]
    fn eigenvalues_preserve_trace_of_square(g in random_graph()) {
        let ev = eigenvalues(&g);
        let sum: f64 = ev.iter().sum();
        let squares: f64 = ev.iter().map(|x| x * x).sum();
        prop_assert!(sum.abs() < 1e-9);
        prop_assert!((squares - 2.0 * g.edge_count() as f64).abs() < 1e-8);
        // roots of the characteristic polynomial, up to conditioning
        let poly = char_poly(&g);
        for &x in &ev {
            let scale: f64 = (0..=poly.degree()).map(|k| (x.abs() + 1.0).powi(k as i32)).sum();
            prop_assert!(poly.evaluate(x).abs() <= 1e-6 * scale);
        }
    }

    #[test]
    fn jacobi_on_random_symmetric_matrices(entries in prop::collection::vec(-5.0f64..5.0, 36)) {
        let n = 6;
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                m[i * n + j] = entries[i * n + j];
                m[j * n + i] = entries[i * n + j];
            }
        }
        let ev = symmetric_eigenvalues(&m, n);
        let trace: f64 = (0..n).map(|i| m[i * n + i]).sum();
        let frob: f64 = m.iter().map(|x| x * x).sum();
        prop_assert!((ev.iter().sum::<f64>() - trace).abs() < 1e-9);
        prop_assert!((ev.iter().map(|x| x * x).sum::<f64>() - frob).abs() < 1e-8);
        prop_assert!(ev.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn cayley_graphs_are_regular(
        (n, picks) in (3u64..20).prop_flat_map(|n| (Just(n), prop::collection::vec(element(n), 1..6)))
    ) {
        let mut set: Vec<DihedralElement> = Vec::new();
        for x in picks {
            if x.is_identity() {
                continue;
            }
            set.push(x);
            set.push(dihedral_cayley::dihedral::inverse(x, n).unwrap());
        }
        prop_assume!(!set.is_empty());
        let s = ConnectionSet::new(n, set).unwrap();
        let g = build_graph(&s);
        prop_assert!(g.graph().is_regular(s.len()));
    }
}
