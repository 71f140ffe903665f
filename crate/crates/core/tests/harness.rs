use netbrain::dynamics::WalkPolicy;
use netbrain::generators::{GeneratorSpec, Model};
use netbrain::harness::{run_experiment, sweep, GroupBy, SweepAxis};
use netbrain::{aggregate, Aggregate, ExperimentConfig, GraphSource, StartSelection};

fn er_config(k: f64, policies: Vec<WalkPolicy>, stride: usize, reps: usize) -> ExperimentConfig {
    let mut cfg = ExperimentConfig::new(
        GraphSource::Generator(GeneratorSpec::new(Model::Er, 1000, k, 17)),
        policies,
        StartSelection::DegreeRankedStride { stride },
        23,
    );
    cfg.repetitions_per_start = reps;
    cfg
}

#[test]
fn full_discovery_costs_more_than_half() {
    let r = run_experiment(&er_config(8.0, vec![WalkPolicy::Standard], 100, 10)).unwrap();
    let agg: Vec<Aggregate> = aggregate(&r.curves, GroupBy::Policy).unwrap();
    assert_eq!(agg.len(), 1);
    assert_eq!(agg[0].n_samples, 100);
    assert!(agg[0].mean_at(1.0).unwrap() > agg[0].mean_at(0.5).unwrap());
    // Different seeds give different curves.
    assert!(agg[0].sd_at(0.9).unwrap() > 0.0);
    for c in &r.curves {
        assert!(c.curve.steps().windows(2).all(|w| w[0] <= w[1]));
    }
}

#[test]
fn thread_count_does_not_change_results() {
    let cfg = er_config(6.0, WalkPolicy::ALL.to_vec(), 200, 3);
    let parallel = run_experiment(&cfg).unwrap();
    std::env::set_var("NETBRAIN_THREADS", "1");
    let serial = run_experiment(&cfg);
    std::env::remove_var("NETBRAIN_THREADS");
    let serial = serial.unwrap();
    assert_eq!(parallel.curves, serial.curves);
}

#[test]
fn model_sweep_covers_every_model() {
    let mut base = ExperimentConfig::new(
        GraphSource::Generator(GeneratorSpec::new(Model::Er, 400, 6.0, 5)),
        vec![WalkPolicy::LookAhead],
        StartSelection::TopHubs { count: 2 },
        8,
    );
    base.repetitions_per_start = 2;
    let points = sweep::<f64>(&base, &SweepAxis::Model(Model::ALL.to_vec())).unwrap();
    assert_eq!(points.len(), 6);
    for (point, model) in points.iter().zip(Model::ALL) {
        assert_eq!(point.label, format!("model={model}"));
        assert_eq!(point.result.curves.len(), 4);
        assert_eq!(point.aggregates.len(), 1);
        assert_eq!(point.aggregates[0].group, point.label);
    }
}

#[test]
fn k_sweep_trend_for_standard_walks() {
    let base = er_config(4.0, vec![WalkPolicy::Standard], 100, 5);
    let points = sweep::<f64>(&base, &SweepAxis::KAvg(vec![4.0, 16.0])).unwrap();
    let means: Vec<f64> = points.iter().map(|p| p.aggregates[0].mean_at(0.9).unwrap()).collect();
    assert!(means[1] < means[0], "{means:?}");
}

#[test]
fn hub_degree_buckets() {
    let mut base = ExperimentConfig::new(
        GraphSource::Generator(GeneratorSpec::new(Model::Ba, 500, 4.0, 2)),
        vec![WalkPolicy::LookAhead],
        StartSelection::DegreeRankedStride { stride: 25 },
        3,
    );
    base.repetitions_per_start = 2;
    let points = sweep::<f64>(&base, &SweepAxis::HubDegree).unwrap();
    assert_eq!(points.len(), 1);
    let point = &points[0];
    let degrees: Vec<usize> = point.aggregates.iter().map(|a| a.start_degree.unwrap()).collect();
    let mut expected: Vec<usize> = point.result.curves.iter().map(|c| c.start_degree).collect();
    expected.sort_unstable();
    expected.dedup();
    let mut got = degrees.clone();
    got.sort_unstable();
    assert_eq!(got, expected);
    let total: usize = point.aggregates.iter().map(|a| a.n_samples).sum();
    assert_eq!(total, point.result.curves.len());
}
