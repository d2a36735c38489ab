use std::f64::consts::{PI, TAU};

use galq_core::codes::{cyclic_code, cyclic_extension_matrix, plane_axioms_check, xn1_divisors};
use galq_core::gf::{FieldSpec, FqPoly};
use galq_core::pg::{
    arc_search, bruck_ryser_excluded, build_pg, classify_arc, incidence_matrix, is_arc, max2,
    max3_binary, plane_max_arc, ArcClass, PointSet, SearchMode,
};
use galq_core::phase::{
    fourier_vector, galois_expectation, galois_phase_operator, lock_operator,
    pegg_barnett_operator, s_sum, s_sum_closed_form,
};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;

#[test]
fn phase_operators_are_hermitian() {
    for q in 2..=64usize {
        assert!(
            pegg_barnett_operator(q, 0.3).unwrap().hermitian_deviation() < TOL,
            "q={q}"
        );
        let lock = lock_operator(q).unwrap();
        assert!(lock.spectral.hermitian_deviation() < TOL, "q={q}");
        assert!(lock.ramanujan.hermitian_deviation() < TOL, "q={q}");
    }
}

#[test]
fn ramanujan_kernel_is_the_coprime_projector() {
    for q in 2..=50usize {
        let lock = lock_operator(q).unwrap();
        assert!(lock.projector_deviation < 1e-9, "q={q}");
        let squared = lock.ramanujan.matmul(&lock.ramanujan).unwrap();
        assert!(
            squared.max_entry_difference(&lock.ramanujan).unwrap() < 1e-9,
            "q={q}"
        );
        let rank = lock.ramanujan.trace().re;
        let phi = (1..=q)
            .filter(|&k| galq_core::numtheory::gcd(k as u64, q as u64) == 1)
            .count();
        assert!((rank - phi as f64).abs() < 1e-9);
    }
}

#[test]
fn pegg_barnett_diagonalizes_on_fourier_vectors() {
    let q = 4;
    let theta0 = 0.25;
    let op = pegg_barnett_operator(q, theta0).unwrap();
    let matrix = DMatrix::from_fn(q, q, |r, c| op.entries[r][c]);
    let mut eigenvalues: Vec<f64> = matrix
        .clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect();
    eigenvalues.sort_by(f64::total_cmp);
    for (k, lambda) in eigenvalues.iter().enumerate() {
        assert!((lambda - (theta0 + TAU * k as f64 / q as f64)).abs() < 1e-9);
    }
    for k in 0..q {
        let v = nalgebra::DVector::from_vec(fourier_vector(q, k));
        let image = &matrix * &v;
        let lambda = theta0 + TAU * k as f64 / q as f64;
        assert!((image - v * Complex64::new(lambda, 0.0)).norm() < 1e-9);
    }
}

#[test]
fn s_sum_matches_geometric_series_for_prime_q() {
    for q in [3u64, 5, 7, 11, 13] {
        let f = FieldSpec::prime(q as u32).unwrap();
        for n in f.elements() {
            for m in f.elements() {
                let direct = s_sum(&f, n, m).unwrap();
                let closed = s_sum_closed_form(&f, n, m);
                assert!((direct - closed).norm() < 1e-8, "q={q}");
            }
        }
    }
}

#[test]
fn galois_operator_paths_agree() {
    for q in [3u64, 5, 7, 9] {
        let f = FieldSpec::with_order(q).unwrap();
        for a in f.elements() {
            for k in 0..=1 {
                let op = galois_phase_operator(&f, a, k).unwrap();
                assert!(op.max_discrepancy < 1e-9, "q={q} a={} k={k}", a.index());
                assert!(op.spectral.hermitian_deviation() < 1e-9);
            }
        }
    }
}

#[test]
fn galois_expectation_agrees_with_operator() {
    for q in [3u64, 5, 7, 9] {
        let f = FieldSpec::with_order(q).unwrap();
        for a in f.elements() {
            let e = galois_expectation(&f, a, 1, 0.7).unwrap();
            assert!((e.value - e.direct).abs() < 1e-9, "q={q}");
            assert!(e.imaginary_residue < 1e-9);
            assert!((e.diagonal - PI * (q - 1) as f64 / q as f64).abs() < 1e-9);
        }
    }
}

/// Codewords as `u(x)·g(x)` over all messages of degree below `k`.
fn weights_from_polynomial_multiples(n: usize, field: &FieldSpec, g: &FqPoly) -> Vec<u64> {
    let k = n - g.degree().unwrap();
    let q = field.q();
    let mut counts = vec![0u64; n + 1];
    for message in 0..(q as u64).pow(k as u32) {
        let mut rest = message;
        let coeffs: Vec<u32> = (0..k)
            .map(|_| {
                let c = (rest % q as u64) as u32;
                rest /= q as u64;
                c
            })
            .collect();
        let word = FqPoly::new(field, coeffs).unwrap().mul(field, g);
        counts[word.coeffs().iter().filter(|&&c| c != 0).count()] += 1;
    }
    counts
}

#[test]
fn weight_distributions_match_polynomial_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let choices: [(u64, &[usize]); 4] = [
        (2, &[7, 9, 15]),
        (3, &[8, 10, 11]),
        (4, &[5, 7, 9]),
        (5, &[6, 8]),
    ];
    for _ in 0..10 {
        let (q, lengths) = choices[rng.gen_range(0..choices.len())];
        let n = lengths[rng.gen_range(0..lengths.len())];
        let f = FieldSpec::with_order(q).unwrap();
        let divisors = xn1_divisors(n, &f).unwrap();
        let g = &divisors[rng.gen_range(0..divisors.len() - 1)];
        let code = cyclic_code(n, &f, g).unwrap();
        if code.size() > 1 << 16 {
            continue;
        }
        let report = code.min_distance().unwrap();
        assert_eq!(
            report.weight_distribution,
            weights_from_polynomial_multiples(n, &f, g),
            "q={q} n={n}"
        );
        assert!(report.d_min <= n - code.k + 1, "Singleton");
        assert_eq!(report.is_mds, report.singleton_gap == 0);
    }
}

#[test]
fn divisor_cofactors_multiply_to_x_pow_n_minus_one() {
    for (q, n) in [(2u64, 7usize), (2, 15), (3, 8), (4, 5), (5, 4)] {
        let f = FieldSpec::with_order(q).unwrap();
        let divisors = xn1_divisors(n, &f).unwrap();
        let target = FqPoly::x_pow_minus_one(&f, n);
        for g in &divisors {
            let (h, r) = target.divrem(&f, g);
            assert!(r.is_zero());
            assert!(divisors.contains(&h.monic(&f)));
        }
    }
}

#[test]
fn cyclic_codes_are_shift_closed() {
    let f = FieldSpec::with_order(3).unwrap();
    let divisors = xn1_divisors(8, &f).unwrap();
    for g in &divisors[1..divisors.len() - 1] {
        let code = cyclic_code(8, &f, g).unwrap();
        let mut words = std::collections::HashSet::new();
        code.for_each_codeword(|w| {
            words.insert(w.to_vec());
        })
        .unwrap();
        assert_eq!(words.len() as u64, code.size());
        for w in &words {
            let mut shifted = w.clone();
            shifted.rotate_right(1);
            assert!(words.contains(&shifted));
        }
        assert_eq!(cyclic_extension_matrix(8, &f, g).unwrap().len(), 8);
    }
}

#[test]
fn projective_space_counts_and_incidence() {
    for (delta, q) in [
        (2usize, 2u64),
        (2, 3),
        (2, 4),
        (2, 5),
        (2, 7),
        (2, 8),
        (3, 2),
        (3, 3),
        (3, 4),
    ] {
        let f = FieldSpec::with_order(q).unwrap();
        let space = build_pg(delta, &f).unwrap();
        assert_eq!(space.point_count() as u64, max2(delta as u32 + 1, q));
        let lines = if delta == 2 {
            max2(3, q)
        } else {
            (q * q + 1) * (q * q + q + 1)
        };
        assert_eq!(space.lines().len() as u64, lines);
        for p in 0..space.point_count() {
            assert_eq!(space.lines_through(p).len() as u64, max2(delta as u32, q));
        }
    }
}

#[test]
fn planes_satisfy_axioms() {
    for q in [2u64, 3, 4, 5, 7] {
        let space = build_pg(2, &FieldSpec::with_order(q).unwrap()).unwrap();
        let report = plane_axioms_check(&incidence_matrix(&space).unwrap());
        assert!(report.pass, "q={q}");
        assert_eq!(report.order, Some(q as usize));
    }
}

#[test]
fn maximal_arcs_and_their_tangents() {
    for (q, size, class) in [
        (2u64, 4usize, ArcClass::Hyperoval),
        (3, 4, ArcClass::Oval),
        (4, 6, ArcClass::Hyperoval),
    ] {
        let space = build_pg(2, &FieldSpec::with_order(q).unwrap()).unwrap();
        let found = arc_search(&space, SearchMode::Exhaustive).unwrap();
        assert_eq!(found.size, size, "q={q}");
        assert_eq!(found.size as u64, plane_max_arc(q));
        let set = PointSet::new(&space, found.points.clone()).unwrap();
        assert!(is_arc(&set).is_arc());
        assert_eq!(classify_arc(&set).unwrap().1, class);
        if class == ArcClass::Hyperoval {
            let oval = PointSet::new(&space, found.points[1..].to_vec()).unwrap();
            assert_eq!(classify_arc(&oval).unwrap().1, ArcClass::Oval);
        }
    }
}

#[test]
fn binary_solid_cap_matches_formula() {
    let space = build_pg(3, &FieldSpec::prime(2).unwrap()).unwrap();
    let cap = arc_search(&space, SearchMode::Exhaustive).unwrap();
    assert_eq!(cap.size as u64, max3_binary(4));
}

#[test]
fn bruck_ryser_exclusions_up_to_35() {
    let excluded: Vec<u64> = (2..=35).filter(|&q| bruck_ryser_excluded(q)).collect();
    assert_eq!(excluded, vec![6, 14, 21, 22, 30, 33]);
}
