//! Regression suite: every frozen table and orbit-class file under
//! `golden/` must be reproduced exactly by a fresh enumeration.

use coxeter_complex::realization::Realization;
use coxeter_complex::tables::{self, GoldenOrbits, GoldenTables};
use coxeter_complex::Family;

fn golden_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../golden")
        .canonicalize()
        .expect("golden directory exists at the workspace root")
}

const GOLDEN_KEYS: &[(&str, Family, usize)] = &[
    ("e6", Family::E6, 6),
    ("e7", Family::E7, 7),
    ("e8", Family::E8, 8),
    ("d4", Family::D, 4),
    ("d5", Family::D, 5),
    ("d6", Family::D, 6),
    ("d7", Family::D, 7),
    ("d8", Family::D, 8),
];

#[test]
fn frozen_tables_are_reproduced_exactly() {
    let dir = golden_dir();
    let mut verified = 0usize;
    for &(key, family, rank) in GOLDEN_KEYS {
        let real = Realization::new(family, rank).unwrap();
        let path = dir.join(format!("tables_{key}.json"));
        let text = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("read {}: {e}", path.display()));
        let golden: GoldenTables = serde_json::from_str(&text).unwrap();
        let family_token = serde_json::to_value(family).unwrap();
        assert_eq!(family_token.as_str().unwrap(), golden.family);
        assert_eq!(golden.rank, rank);
        let reports = tables::verify_tables(&real, &golden).unwrap();
        for report in &reports {
            assert!(
                report.pass,
                "{} table {} drifted from its frozen version:\n  {}",
                real.name(),
                report.label,
                report.diffs.join("\n  ")
            );
            verified += 1;
        }
    }
    // 9 + 4 + 3 tables for E8/E7/E6 and 6 per D rank, 5 ranks.
    assert_eq!(verified, 9 + 4 + 3 + 5 * 6);
}

#[test]
fn frozen_orbit_classes_are_reproduced_exactly() {
    let dir = golden_dir();
    for &(key, family, rank) in GOLDEN_KEYS {
        let real = Realization::new(family, rank).unwrap();
        let path = dir.join(format!("orbits_{key}.json"));
        let text = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("read {}: {e}", path.display()));
        let golden: GoldenOrbits = serde_json::from_str(&text).unwrap();
        let reports = tables::verify_orbits(&real, &golden).unwrap();
        assert_eq!(reports.len(), rank);
        for report in &reports {
            assert!(
                report.pass,
                "{} orbit classes {} drifted:\n  {}",
                real.name(),
                report.label,
                report.diffs.join("\n  ")
            );
        }
    }
}

#[test]
fn tsv_projection_matches_frozen_tables() {
    let dir = golden_dir();
    for &(key, _, _) in GOLDEN_KEYS {
        let tsv_path = dir.join(format!("tables_{key}.tsv"));
        let frozen = std::fs::read_to_string(&tsv_path)
            .unwrap_or_else(|e| panic!("read {}: {e}", tsv_path.display()));
        let json_path = dir.join(format!("tables_{key}.json"));
        let golden: GoldenTables =
            serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
        assert_eq!(
            tables::tables_tsv(&golden),
            frozen,
            "TSV projection for {key} no longer matches the frozen file"
        );
    }
}
