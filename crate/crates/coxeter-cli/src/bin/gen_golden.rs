//! Regenerates the frozen reference tables under `golden/`.
//!
//! For every realization with curated reference tables (E6, E7, E8, D4–D8)
//! this writes `tables_<key>.json` (complete bigon tables with classified
//! segments, plus a `tables_<key>.tsv` projection for human diffing) and
//! `orbits_<key>.json` (display-class decompositions of every vertex orbit).
//!
//! Usage: `gen-golden [output-dir]` (default `golden`).

use anyhow::{Context, Result};
use coxeter_complex::tables::{compute_golden_orbits, compute_standard_tables, tables_tsv};
use coxeter_complex::{Family, Realization};
use std::path::Path;

fn write(path: &Path, body: &str) -> Result<()> {
    std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))?;
    println!("wrote {}", path.display());
    Ok(())
}

fn main() -> Result<()> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "golden".into());
    let out = Path::new(&out);
    std::fs::create_dir_all(out)?;

    let specs: &[(Family, usize, &str)] = &[
        (Family::E6, 6, "e6"),
        (Family::E7, 7, "e7"),
        (Family::E8, 8, "e8"),
        (Family::D, 4, "d4"),
        (Family::D, 5, "d5"),
        (Family::D, 6, "d6"),
        (Family::D, 7, "d7"),
        (Family::D, 8, "d8"),
    ];

    for &(family, rank, key) in specs {
        let t0 = std::time::Instant::now();
        let real = Realization::new(family, rank)?;

        let tables = compute_standard_tables(&real)?;
        let mut tables_json = serde_json::to_string_pretty(&tables)?;
        tables_json.push('\n');
        write(&out.join(format!("tables_{key}.json")), &tables_json)?;
        write(&out.join(format!("tables_{key}.tsv")), &tables_tsv(&tables))?;

        let orbits = compute_golden_orbits(&real)?;
        let mut orbits_json = serde_json::to_string_pretty(&orbits)?;
        orbits_json.push('\n');
        write(&out.join(format!("orbits_{key}.json")), &orbits_json)?;

        println!("{} done in {:?}", real.name(), t0.elapsed());
    }
    Ok(())
}
