#[path = "../../core/tests/support/mod.rs"]
mod support;

use brui_core::econ::{bootstrap_irf, fit_var, BootstrapSpec};
use brui_core::{build_indices, Lexicon, Month, Report};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn parallel_indices_equal_serial() {
    let lex = Lexicon::standard();
    for seed in 0..10 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut month: Month = "2019-01".parse().unwrap();
        let mut reports = Vec::new();
        for _ in 0..12 {
            reports.push(Report::new(month, support::random_report(&mut rng, 400)).unwrap());
            month = month.succ();
        }
        assert_eq!(
            build_indices(&reports, &lex, 10),
            brui::parallel::build_indices(&reports, &lex, 10)
        );
    }
    assert!(brui::parallel::build_indices(&[], &lex, 0).is_err());
}

#[test]
fn parallel_bootstrap_equals_serial() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let dgp = support::random_stable_model(&mut rng, 3, 1);
    let data = support::simulate(&mut rng, &dgp, 120);
    let model = fit_var(&data, 2).unwrap();
    let spec = BootstrapSpec {
        horizon: 8,
        reps: 199,
        level: 68.0,
        seed: 77,
    };
    let a = bootstrap_irf(&model, &data, &spec).unwrap();
    let b = brui::parallel::bootstrap_irf(&model, &data, &spec).unwrap();
    let bits = |r: &brui_core::econ::IrfResult| -> Vec<u64> {
        [&r.point, &r.lower, &r.upper]
            .iter()
            .flat_map(|x| x.as_slice().iter().map(|v| v.to_bits()))
            .collect()
    };
    assert_eq!(bits(&a), bits(&b));
    assert_eq!((a.reps, a.discarded, a.seed), (b.reps, b.discarded, b.seed));
}
