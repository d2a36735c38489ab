use galq_core::chars::{
    gamma_expected_magnitude, gamma_sum, gauss_sum_field, gauss_sum_ring, unit_group_characters,
    weil_sweep, CharacterSpec, TrivialConvention,
};
use galq_core::gf::FieldSpec;
use galq_core::gring::RingSpec;
use galq_core::mub::{
    bell_fourier, bell_galois, entanglement_check, galois_bell_bases, gram_deviation, mub_even,
    mub_odd, verify_unbiasedness, DEFAULT_TOLERANCE,
};
use num_complex::Complex64;

const TOL: f64 = 1e-9;

fn odd_orders() -> impl Iterator<Item = u64> {
    [3u64, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27].into_iter()
}

#[test]
fn additive_characters_are_homomorphisms() {
    for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64] {
        let f = FieldSpec::with_order(q).unwrap();
        for c in f.elements().step_by(((q / 8) as usize).max(1)) {
            let kappa = CharacterSpec::additive_field(&f, c).unwrap();
            for x in f.elements() {
                for y in f.elements() {
                    let lhs = kappa.evaluate(f.add(x, y)).unwrap();
                    let rhs = kappa.evaluate(x).unwrap() * kappa.evaluate(y).unwrap();
                    assert!((lhs - rhs).norm() < TOL, "q={q}");
                }
            }
        }
    }
    for m in 1..=3 {
        let r = RingSpec::new(m).unwrap();
        let kappa = CharacterSpec::canonical_additive_ring(&r);
        for x in r.elements() {
            for y in r.elements() {
                let lhs = kappa.evaluate(r.add(x, y)).unwrap();
                let rhs = kappa.evaluate(x).unwrap() * kappa.evaluate(y).unwrap();
                assert!((lhs - rhs).norm() < TOL, "m={m}");
            }
        }
    }
}

#[test]
fn multiplicative_characters_are_orthogonal() {
    for q in [3u64, 4, 5, 7, 8, 9, 16, 25] {
        let f = FieldSpec::with_order(q).unwrap();
        let chars: Vec<_> = (0..q - 1)
            .map(|j| CharacterSpec::multiplicative_field(&f, j).unwrap())
            .collect();
        for (j, psi) in chars.iter().enumerate() {
            for (l, chi) in chars.iter().enumerate() {
                let inner: Complex64 = f
                    .elements()
                    .skip(1)
                    .map(|x| psi.evaluate(x).unwrap() * chi.evaluate(x).unwrap().conj())
                    .sum();
                let expected = if j == l { (q - 1) as f64 } else { 0.0 };
                assert!((inner - expected).norm() < 1e-8, "q={q} j={j} l={l}");
            }
        }
    }
}

#[test]
fn field_gauss_sums_have_magnitude_root_q() {
    for q in [3u64, 4, 5, 7, 8, 9, 11, 16, 25, 27] {
        let f = FieldSpec::with_order(q).unwrap();
        let kappa = CharacterSpec::canonical_additive_field(&f);
        for j in 1..q - 1 {
            let psi = CharacterSpec::multiplicative_field(&f, j).unwrap();
            let g = gauss_sum_field(&f, &psi, &kappa, None, None).unwrap();
            assert!((g.norm() - (q as f64).sqrt()).abs() < 1e-8, "q={q} j={j}");
        }
        let trivial = CharacterSpec::multiplicative_field(&f, 0).unwrap();
        let g = gauss_sum_field(&f, &trivial, &kappa, None, None).unwrap();
        assert!((g - Complex64::new(-1.0, 0.0)).norm() < 1e-8);
    }
}

#[test]
fn teichmuller_sum_trichotomy() {
    for m in 1..=4 {
        let r = RingSpec::new(m).unwrap();
        for y in r.elements() {
            let magnitude = gamma_sum(&r, y).unwrap().norm();
            let expected = gamma_expected_magnitude(&r, y).unwrap();
            assert!((magnitude - expected).abs() < 1e-8, "m={m} y={}", y.index());
        }
    }
}

#[test]
fn unit_character_table_is_unitary() {
    for m in 1..=3 {
        let r = RingSpec::new(m).unwrap();
        let chars = unit_group_characters(&r).unwrap();
        let units: Vec<_> = r.elements().filter(|&x| r.is_unit(x)).collect();
        assert_eq!(chars.len(), units.len());
        let order = units.len() as f64;
        for (j, psi) in chars.iter().enumerate() {
            for (l, chi) in chars.iter().enumerate() {
                let inner: Complex64 = units
                    .iter()
                    .map(|&u| psi.evaluate(u).unwrap() * chi.evaluate(u).unwrap().conj())
                    .sum();
                let expected = if j == l { order } else { 0.0 };
                assert!((inner - expected).norm() < 1e-8, "m={m} j={j} l={l}");
            }
        }
        for (a, &u) in units.iter().enumerate() {
            for &v in &units[a..] {
                for psi in &chars {
                    let lhs = psi.evaluate(r.mul(u, v)).unwrap();
                    let rhs = psi.evaluate(u).unwrap() * psi.evaluate(v).unwrap();
                    assert!((lhs - rhs).norm() < TOL);
                }
            }
        }
    }
}

#[test]
fn ring_gauss_sums_respect_bound_for_unit_arguments() {
    for m in 1..=3 {
        let r = RingSpec::new(m).unwrap();
        let bound = (1u64 << m) as f64;
        for psi in unit_group_characters(&r).unwrap() {
            for y in r.elements().filter(|&y| r.is_unit(y)) {
                let g = gauss_sum_ring(&r, &psi, y, TrivialConvention::UnitSupported).unwrap();
                assert!(
                    g.norm() <= bound + 1e-8,
                    "m={m} psi={} |G|={}",
                    psi.parameter(),
                    g.norm()
                );
            }
        }
    }
}

/// For `y = 2u` with `u` a nonzero Teichmüller element, a character that is
/// trivial on `1 + 2R` but not on `T*` reaches `2^{3m/2}`.
#[test]
fn ring_gauss_bound_fails_on_the_maximal_ideal() {
    let r = RingSpec::new(2).unwrap();
    let y = r.add(r.one(), r.one());
    let worst = unit_group_characters(&r)
        .unwrap()
        .iter()
        .map(|psi| {
            gauss_sum_ring(&r, psi, y, TrivialConvention::UnitSupported)
                .unwrap()
                .norm()
        })
        .fold(0f64, f64::max);
    assert!((worst - 8.0).abs() < 1e-8, "worst={worst}");
    assert!(worst > 4.0);
}

#[test]
fn weil_sweep_stays_within_bound() {
    for q in [3u64, 4, 5, 7, 8, 9, 16, 25, 27, 49] {
        let f = FieldSpec::with_order(q).unwrap();
        let sweep = weil_sweep(&f, 200, 6, 0x5eed ^ q, 1e-9).unwrap();
        assert_eq!(sweep.samples.len(), 200);
        assert!(sweep.all_pass, "q={q}");
    }
}

#[test]
fn odd_mubs_are_complete_and_unbiased() {
    for q in odd_orders() {
        let f = FieldSpec::with_order(q).unwrap();
        let set = mub_odd(&f, 1).unwrap();
        assert!(set.is_complete(), "q={q}");
        let report = verify_unbiasedness(&set, DEFAULT_TOLERANCE).unwrap();
        assert!(report.pass, "q={q}: {report:?}");
    }
}

#[test]
fn even_mubs_are_complete_and_unbiased() {
    for m in 1..=4 {
        let r = RingSpec::new(m).unwrap();
        let set = mub_even(&r, 1).unwrap();
        assert!(set.is_complete(), "m={m}");
        assert!(
            verify_unbiasedness(&set, DEFAULT_TOLERANCE).unwrap().pass,
            "m={m}"
        );
    }
}

#[test]
fn unbiasedness_does_not_depend_on_k() {
    for k in 0..=2 {
        for q in [3u64, 5, 9] {
            let f = FieldSpec::with_order(q).unwrap();
            assert!(
                verify_unbiasedness(&mub_odd(&f, k).unwrap(), TOL)
                    .unwrap()
                    .pass
            );
        }
        for m in 1..=3 {
            let r = RingSpec::new(m).unwrap();
            assert!(
                verify_unbiasedness(&mub_even(&r, k).unwrap(), TOL)
                    .unwrap()
                    .pass
            );
        }
    }
}

#[test]
fn fourier_bell_states_are_orthonormal_and_entangled() {
    for q in 2..=5usize {
        let states: Vec<_> = (0..q)
            .flat_map(|h| (0..q).map(move |k| bell_fourier(q, h, k).unwrap()))
            .collect();
        assert!(gram_deviation(&states).unwrap() < TOL, "q={q}");
        for s in &states {
            assert!(entanglement_check(s, TOL).unwrap().pass);
        }
    }
}

#[test]
fn galois_bell_states_are_maximally_entangled() {
    for q in [3u64, 5, 7, 9] {
        let f = FieldSpec::with_order(q).unwrap();
        for a in f.elements() {
            for h in f.elements() {
                let state = bell_galois(&f, a, h, f.one()).unwrap();
                let report = entanglement_check(&state, TOL).unwrap();
                assert!(report.pass, "q={q}");
                assert_eq!(report.subsystem_dim, q as usize);
            }
        }
    }
}

#[test]
fn galois_bell_sub_bases_are_unbiased() {
    for q in [3u64, 5] {
        let f = FieldSpec::with_order(q).unwrap();
        for h in f.elements() {
            let set = galois_bell_bases(&f, h).unwrap();
            assert_eq!(set.bases.len(), q as usize);
            assert!((set.overlap - 1.0 / (q as f64).sqrt()).abs() < 1e-15);
            assert!(verify_unbiasedness(&set, TOL).unwrap().pass, "q={q}");
        }
    }
}
