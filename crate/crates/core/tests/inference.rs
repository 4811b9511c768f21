use rayon::prelude::*;

use extremo::inference::{
    bootstrap_band, permutation_band_lag1, permutation_band_per_lag, stationary_bootstrap_indices,
    stationary_bootstrap_resample, BandMethod, BandScope, BandSpec, ExtremogramConfig,
};
use extremo::oracle::rho_linear;
use extremo::simulate::{sim_ar1, sim_linear, NoiseSpec};
use extremo::{derive_stream, Error, Functional, SeriesMatrix, TailSet, ThresholdSpec};

fn config(q: f64, max_lag: usize) -> ExtremogramConfig {
    let up = TailSet::upper(1.0).unwrap();
    ExtremogramConfig { a: up.clone(), b: up, threshold: ThresholdSpec::quantile(q, Functional::Upper), max_lag }
}

fn iid(n: usize, seed: u64) -> SeriesMatrix {
    sim_ar1(0.0, &NoiseSpec::standard_normal(), n, 0, &mut derive_stream(seed, 40)).unwrap()
}

#[test]
fn bootstrap_covers_the_linear_oracle() {
    let psi = [1.0, 0.5];
    let oracle = rho_linear(&psi, 1.0, 1.0, 1).unwrap().value;
    assert!((oracle - 1.0 / 3.0).abs() < 1e-15);
    let cfg = config(0.98, 1);
    let seeds = 20u64;
    let covered = (0..seeds)
        .into_par_iter()
        .filter(|&seed| {
            let x = sim_linear(&psi, &NoiseSpec::Pareto { alpha: 1.0 }, 2, 50_000, &mut derive_stream(seed, 41)).unwrap();
            let band = bootstrap_band(&x, &cfg, 200, 0.05, 0.95, &derive_stream(seed, 42)).unwrap();
            let (lo, hi) = band.bands[1];
            lo <= oracle && oracle <= hi
        })
        .count();
    assert!(covered * 10 >= 8 * seeds as usize, "{covered}/{seeds}");
}

#[test]
fn two_replicates_at_full_confidence() {
    let x = iid(3000, 1);
    let cfg = config(0.95, 3);
    let rng = derive_stream(7, 0);
    let band = bootstrap_band(&x, &cfg, 2, 0.05, 1.0, &rng).unwrap();
    assert_eq!((band.replicates, band.dropped), (2, 0));
    let reps: Vec<Vec<f64>> = (0..2)
        .map(|k| {
            let r = stationary_bootstrap_resample(&x, 0.05, &mut rng.substream(k)).unwrap();
            cfg.estimate(&r).unwrap().estimates
        })
        .collect();
    for (h, (&a, &b)) in reps[0].iter().zip(&reps[1]).enumerate() {
        assert_eq!(band.bands[h], (a.min(b), a.max(b)));
    }
}

#[test]
fn bootstrap_is_deterministic() {
    let x = iid(4000, 2);
    let cfg = config(0.95, 5);
    let a = bootstrap_band(&x, &cfg, 60, 0.05, 0.9, &derive_stream(11, 1)).unwrap();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(3).build().unwrap();
    let b = pool.install(|| bootstrap_band(&x, &cfg, 60, 0.05, 0.9, &derive_stream(11, 1)).unwrap());
    assert_eq!(a.bands, b.bands);
    let c = bootstrap_band(&x, &cfg, 60, 0.05, 0.9, &derive_stream(12, 1)).unwrap();
    assert_ne!(a.bands, c.bands);
}

#[test]
fn bootstrap_with_p_one_is_iid_resampling() {
    let mut rng = derive_stream(5, 5);
    let idx = stationary_bootstrap_indices(20_000, 1.0, &mut rng).unwrap();
    let runs = idx.windows(2).filter(|w| w[1] == (w[0] + 1) % 20_000).count();
    assert!(runs < 10, "{runs}");
}

#[test]
fn replicates_preserve_length_and_values() {
    let x = iid(500, 3);
    let original = x.column(0);
    let mut sorted = original.clone();
    sorted.sort_by(f64::total_cmp);
    for k in 0..20 {
        let r = stationary_bootstrap_resample(&x, 0.1, &mut derive_stream(13, k)).unwrap();
        assert_eq!(r.len(), x.len());
        for v in r.column(0) {
            assert!(sorted.binary_search_by(|p| p.total_cmp(&v)).is_ok());
        }
    }
}

#[test]
fn too_many_dropped_replicates() {
    let mut v = vec![0.5; 400];
    v[17] = 3.0;
    let x = SeriesMatrix::from_column(v).unwrap();
    let up = TailSet::upper(1.0).unwrap();
    let cfg = ExtremogramConfig { a: up.clone(), b: up, threshold: ThresholdSpec::Absolute(2.0), max_lag: 1 };
    let r = bootstrap_band(&x, &cfg, 100, 0.01, 0.9, &derive_stream(1, 2));
    assert!(matches!(r, Err(Error::TooManyFailedReplicates { .. })));
}

#[test]
fn widening_never_narrows() {
    let x = iid(3000, 4);
    let cfg = config(0.95, 4);
    let mut prev: Option<Vec<(f64, f64)>> = None;
    for c in [0.5, 0.8, 0.9, 0.95, 0.98] {
        let b = permutation_band_per_lag(&x, &cfg, 99, c, &derive_stream(6, 0)).unwrap();
        if let Some(p) = &prev {
            for (new, old) in b.iter().zip(p) {
                assert!(new.0 <= old.0 && new.1 >= old.1);
            }
        }
        prev = Some(b);
    }
}

#[test]
fn permutation_null_keeps_most_lags_inside() {
    let cfg = config(0.96, 40);
    let fractions: Vec<f64> = (0..30u64)
        .into_par_iter()
        .map(|seed| {
            let x = iid(6000, 100 + seed);
            let est = cfg.estimate(&x).unwrap().estimates;
            let (lo, hi) = permutation_band_lag1(&x, &cfg, 99, 0.98, &derive_stream(seed, 43)).unwrap();
            est[1..].iter().filter(|&&r| r >= lo && r <= hi).count() as f64 / 40.0
        })
        .collect();
    let avg = fractions.iter().sum::<f64>() / fractions.len() as f64;
    assert!(avg >= 0.95, "{avg}");
}

#[test]
fn band_spec_validation() {
    let ok = BandSpec { method: BandMethod::Permutation { n_perm: 99 }, confidence: 0.98, scope: BandScope::LagOneHorizontal };
    assert!(ok.validate().is_ok());
    let bad_n = BandSpec { method: BandMethod::Permutation { n_perm: 0 }, ..ok };
    assert!(bad_n.validate().is_err());
    let bad_c = BandSpec { confidence: 0.0, ..ok };
    assert!(bad_c.validate().is_err());
    let bad_p = BandSpec { method: BandMethod::StationaryBootstrap { n_boot: 100, p: 0.0 }, ..ok };
    assert!(bad_p.validate().is_err());
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn denominator_is_permutation_invariant(seed in 0u64..1000, q in 0.8f64..0.97) {
            let x = iid(400, seed);
            let cfg = config(q, 2);
            let den = cfg.estimate(&x).unwrap().denominator;
            let mut v = x.column(0);
            use rand::seq::SliceRandom;
            let mut rng = derive_stream(seed, 44);
            for _ in 0..5 {
                v.shuffle(&mut rng);
                let p = SeriesMatrix::from_column(v.clone()).unwrap();
                prop_assert_eq!(cfg.estimate(&p).unwrap().denominator, den);
            }
        }

        #[test]
        fn bootstrap_indices_in_range(n in 1usize..300, p in 0.001f64..=1.0, seed in 0u64..1000) {
            let idx = stationary_bootstrap_indices(n, p, &mut derive_stream(seed, 45)).unwrap();
            prop_assert_eq!(idx.len(), n);
            prop_assert!(idx.iter().all(|&i| i < n));
        }

        #[test]
        fn lag1_band_contains_its_own_permutations(seed in 0u64..1000) {
            let x = iid(300, seed);
            let cfg = config(0.9, 1);
            let (lo, hi) = permutation_band_lag1(&x, &cfg, 19, 1.0, &derive_stream(seed, 46)).unwrap();
            prop_assert!(lo <= hi);
            prop_assert!((0.0..=1.0).contains(&lo) && (0.0..=1.0).contains(&hi));
        }
    }
}
