use ratswarm::{registry, run, Algorithm, RunConfig};

fn mean_final(algorithm: Algorithm, id: &str) -> f64 {
    let problem = registry::lookup(id).unwrap();
    let total: f64 = (1..=30u64)
        .map(|seed| run(&problem, &RunConfig::new(algorithm, seed)).unwrap().final_fitness)
        .sum();
    total / 30.0
}

#[test]
fn mrso_solves_sphere() {
    let mean = mean_final(Algorithm::Mrso, "F1");
    assert!(mean <= 1e-3, "{mean}");
}

#[test]
fn schwefel_respects_floor_and_ordering() {
    let floor = -418.9829 * 10.0;
    let mrso = mean_final(Algorithm::Mrso, "F8");
    let rso = mean_final(Algorithm::Rso, "F8");
    assert!(mrso >= floor - 1e-6 && rso >= floor - 1e-6);
    assert!(mrso < rso, "{mrso} vs {rso}");
}

#[test]
fn single_iteration_run() {
    for id in ["F3", "welded_beam"] {
        let problem = registry::lookup(id).unwrap();
        let record = run(&problem, &RunConfig::new(Algorithm::Rso, 5).with_population(2).with_iterations(1)).unwrap();
        assert_eq!(record.history.len(), 1);
        assert_eq!(record.evaluations, 4);
    }
}
