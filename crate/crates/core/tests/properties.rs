use higgs_core::exact::{frac, from_int, q};
use higgs_core::hn::{discriminant_identity, partitions_at_most, HNFactor, HNType};
use higgs_core::lattice::signature;
use higgs_core::{c2_gbun, n_points, solve_delta, ChowClass, HiggsNumerics, NSVector, QNSVector, Rational};
use higgs_core::{SpectralCover, SurfaceGeometry};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn preset() -> impl Strategy<Value = SurfaceGeometry> {
    prop_oneof![
        Just("p2"),
        Just("p1xp1"),
        Just("hypersurface:4"),
        Just("hypersurface:5"),
        Just("hypersurface:7"),
    ]
    .prop_map(|name| SurfaceGeometry::preset(name).unwrap())
}

fn vector(rank: usize, bound: i64) -> impl Strategy<Value = NSVector> {
    prop::collection::vec(-bound..=bound, rank).prop_map(|v| NSVector::from_i64s(&v))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=7).prop_map(|(n, d)| frac(n, d))
}

fn chow(rank: usize) -> impl Strategy<Value = ChowClass> {
    (rational(), prop::collection::vec(rational(), rank), rational())
        .prop_map(|(a, b, c)| ChowClass::new(a, QNSVector(b), c))
}

fn surface_and_chow() -> impl Strategy<Value = (SurfaceGeometry, ChowClass, ChowClass, ChowClass)> {
    preset().prop_flat_map(|x| {
        let n = x.rank();
        (Just(x), chow(n), chow(n), chow(n))
    })
}

/// Inertia from Descartes' rule on the characteristic polynomial, which has only
/// real roots for a symmetric matrix. Coefficients via Faddeev–LeVerrier.
fn inertia_oracle(gram: &[Vec<i64>]) -> (usize, usize, usize) {
    let n = gram.len();
    let a: Vec<Vec<Rational>> = gram.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect();
    let matmul = |x: &Vec<Vec<Rational>>, y: &Vec<Vec<Rational>>| -> Vec<Vec<Rational>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).fold(Rational::zero(), |acc, k| acc + &x[i][k] * &y[k][j])).collect())
            .collect()
    };
    // p(λ) = λⁿ + c₁λⁿ⁻¹ + … + cₙ
    let mut coeffs = vec![q(1)];
    let mut m: Vec<Vec<Rational>> = (0..n).map(|i| (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect()).collect();
    for k in 1..=n {
        let am = matmul(&a, &m);
        let trace = (0..n).fold(Rational::zero(), |acc, i| acc + &am[i][i]);
        let ck = -trace / q(k as i64);
        coeffs.push(ck.clone());
        m = am;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &ck;
        }
    }
    let zeros = coeffs.iter().rev().take_while(|c| c.is_zero()).count();
    let sign_changes = |cs: &[Rational]| {
        let signs: Vec<bool> = cs.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    let trimmed = &coeffs[..coeffs.len() - zeros];
    let pos = sign_changes(trimmed);
    // p(-λ): flip the sign of odd-degree terms
    let deg = trimmed.len() - 1;
    let flipped: Vec<Rational> =
        trimmed.iter().enumerate().map(|(i, c)| if (deg - i) % 2 == 1 { -c } else { c.clone() }).collect();
    let neg = sign_changes(&flipped);
    (pos, neg, zeros)
}

fn symmetric(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(-4i64..=4, n * n).prop_map(move |v| {
        let mut g = vec![vec![0; n]; n];
        for i in 0..n {
            for j in i..n {
                g[i][j] = v[i * n + j];
                g[j][i] = v[i * n + j];
            }
        }
        g
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn signature_matches_characteristic_polynomial(g in (1usize..=4).prop_flat_map(symmetric)) {
        let big: Vec<Vec<BigInt>> = g.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        let (pos, neg, zeros) = inertia_oracle(&g);
        match signature(&big) {
            Ok(sig) => {
                prop_assert_eq!(zeros, 0);
                prop_assert_eq!(sig, (pos, neg));
            }
            Err(_) => prop_assert!(zeros > 0),
        }
    }

    #[test]
    fn pair_is_symmetric_and_bilinear(
        (x, u, v, w) in preset().prop_flat_map(|x| { let n = x.rank(); (Just(x), vector(n, 9), vector(n, 9), vector(n, 9)) }),
        a in -5i64..=5, b in -5i64..=5,
    ) {
        let lat = x.lattice();
        prop_assert_eq!(lat.pair(&u, &v).unwrap(), lat.pair(&v, &u).unwrap());
        let combo = &u.scale(&BigInt::from(a)) + &v.scale(&BigInt::from(b));
        let lhs = lat.pair(&combo, &w).unwrap();
        let rhs = q(a) * lat.pair(&u, &w).unwrap() + q(b) * lat.pair(&v, &w).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn divide_round_trip(
        (x, d) in preset().prop_flat_map(|x| { let n = x.rank(); (Just(x), vector(n, 50)) }),
        r in 1u32..=10,
    ) {
        let v = d.scale(&BigInt::from(r)).to_q();
        prop_assert_eq!(x.lattice().divide(&v, r).unwrap(), Some(d));
    }

    #[test]
    fn chow_ring_axioms((x, a, b, c) in surface_and_chow()) {
        let ab = x.chow_mul(&a, &b).unwrap();
        prop_assert_eq!(&ab, &x.chow_mul(&b, &a).unwrap());
        prop_assert_eq!(
            x.chow_mul(&ab, &c).unwrap(),
            x.chow_mul(&a, &x.chow_mul(&b, &c).unwrap()).unwrap()
        );
        prop_assert_eq!(x.chow_mul(&a, &(&b + &c)).unwrap(), &ab + &x.chow_mul(&a, &c).unwrap());
        prop_assert_eq!(x.chow_mul(&ChowClass::one(x.rank()), &a).unwrap(), a.clone());
        if !a.deg0.is_zero() {
            let inv = x.chow_inverse(&a).unwrap();
            prop_assert_eq!(x.chow_mul(&a, &inv).unwrap(), ChowClass::one(x.rank()));
        }
    }

    #[test]
    fn chern_character_is_exponential(
        (x, d1, d2) in preset().prop_flat_map(|x| { let n = x.rank(); (Just(x), vector(n, 6), vector(n, 6)) }),
    ) {
        let sum = x.line_bundle_ch(&(&d1 + &d2).to_q()).unwrap();
        let prod = x.chow_mul(&x.line_bundle_ch(&d1.to_q()).unwrap(), &x.line_bundle_ch(&d2.to_q()).unwrap()).unwrap();
        prop_assert_eq!(sum, prod);
    }

    #[test]
    fn riemann_roch_transport_agrees(
        (x, delta) in preset().prop_flat_map(|x| { let n = x.rank(); (Just(x), vector(n, 5)) }),
        r in 1u32..=6,
        n in 0u64..=20,
    ) {
        let s = SpectralCover::new(x.clone(), r).unwrap();
        let (up, down) = s.chi_two_ways(&delta, n).unwrap();
        prop_assert_eq!(up, down);
        // line-bundle Riemann–Roch on X for χ(O(δ) ⊗ π_*O) when n = 0
        if n == 0 {
            let lat = x.lattice();
            let mut direct = Rational::zero();
            for i in 0..r {
                let d = &delta - &x.polarization().scale(&BigInt::from(i));
                let dd = lat.pair(&d, &d).unwrap();
                let dk = lat.pair(&d, x.canonical()).unwrap();
                direct += from_int(x.chi_o()) + (dd - dk) / q(2);
            }
            prop_assert_eq!(s.chi_two_ways(&delta, 0).unwrap().0, direct);
        }
    }

    #[test]
    fn noether_on_spectral_surface(x in preset(), r in 1u32..=8) {
        let s = SpectralCover::new(x, r).unwrap();
        prop_assert_eq!(s.chi_structure_sheaf(), s.noether_chi().unwrap());
    }

    #[test]
    fn points_equal_excess_over_threshold(
        (x, c1) in preset().prop_flat_map(|x| { let n = x.rank(); (Just(x), vector(n, 10)) }),
        r in 1u32..=6,
        c2 in -100i64..=100,
    ) {
        let h = HiggsNumerics::new(r, c1, c2).unwrap();
        let gbun = c2_gbun(&x, &h).unwrap();
        prop_assert_eq!(n_points(&x, &h).unwrap(), q(c2) - &gbun.value);
        if solve_delta(&x, &h).unwrap().is_some() {
            prop_assert!(gbun.integral);
        }
    }

    #[test]
    fn discriminant_identity_on_synthetic_filtrations(
        (x, factors) in preset().prop_flat_map(|x| {
            let n = x.rank();
            let factor = (1u32..=4, vector(n, 5), -5i64..=5).prop_map(|(r, c1, c2)| HNFactor::new(r, c1, c2));
            (Just(x), prop::collection::vec(factor, 1..=5))
        }),
    ) {
        let t = HNType::new(factors).unwrap();
        let (lhs, rhs) = discriminant_identity(&x, &t).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn partitions_match_brute_force(n in 0u64..=12, k in 1u32..=4) {
        // every k-tuple in 0..=n, keep nonincreasing ones with the right sum
        let mut brute = Vec::new();
        let mut tuple = vec![0u64; k as usize];
        loop {
            if tuple.iter().sum::<u64>() == n && tuple.windows(2).all(|w| w[0] >= w[1]) {
                brute.push(tuple.clone());
            }
            let mut i = k as usize;
            loop {
                if i == 0 { break; }
                i -= 1;
                if tuple[i] < n { tuple[i] += 1; break; }
                tuple[i] = 0;
                if i == 0 { i = usize::MAX; break; }
            }
            if i == usize::MAX { break; }
        }
        brute.sort();
        brute.reverse();
        prop_assert_eq!(partitions_at_most(n, k), brute);
    }
}
