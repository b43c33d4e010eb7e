use coxeter_complex::diagram::Family;
use coxeter_complex::gap::run_gap_experiment;
use coxeter_complex::Realization;
use std::time::Instant;

fn main() {
    for (fam, rank) in [(Family::D, 4usize), (Family::A, 4)] {
        let real = Realization::new(fam, rank).unwrap();
        let t = Instant::now();
        let report = run_gap_experiment(&real, 5, 200, 20260816, 2).unwrap();
        let empties = report.runs.iter().filter(|r| r.is_empty).count();
        let spheres = report.runs.iter().filter(|r| r.estimate.as_ref().map_or(false, |e| e.is_sphere)).count();
        let max_samples = report.runs.iter().filter_map(|r| r.estimate.as_ref()).map(|e| e.samples).max().unwrap_or(0);
        let max_rad = report.runs.iter().filter_map(|r| r.estimate.as_ref()).filter(|e| !e.is_sphere).map(|e| e.radius_estimate).fold(0.0f64, f64::max);
        println!("{}: all_pass={} empties={} spheres={} max_samples={} max_radius={:.6} elapsed={:?}",
            report.realization, report.all_pass, empties, spheres, max_samples, max_rad, t.elapsed());
    }
}
