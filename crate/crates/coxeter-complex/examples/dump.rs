use coxeter_complex::tables::{compute_standard_tables, compute_golden_orbits, tables_tsv};
use coxeter_complex::{Family, Realization};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let fam = args.get(1).map(|s| s.as_str()).unwrap_or("E8");
    let (family, rank) = match fam {
        "E8" => (Family::E8, 8),
        "E7" => (Family::E7, 7),
        "E6" => (Family::E6, 6),
        "D4" => (Family::D, 4),
        "D5" => (Family::D, 5),
        "D6" => (Family::D, 6),
        "D7" => (Family::D, 7),
        "D8" => (Family::D, 8),
        "A4" => (Family::A, 4),
        _ => panic!("unknown: {fam}"),
    };
    let real = Realization::new(family, rank).unwrap();
    let t0 = std::time::Instant::now();
    let golden = compute_standard_tables(&real).unwrap();
    println!("{}", tables_tsv(&golden));
    let orbits = compute_golden_orbits(&real).unwrap();
    for t in &orbits.types {
        println!("orbit type {} size {}", t.vertex_type, t.size);
        for c in &t.classes {
            let coords: Vec<String> = c.representative.iter().map(|v| v.to_string()).collect();
            println!("  class ({}) size {}", coords.join(","), c.size);
        }
    }
    eprintln!("elapsed {:?}", t0.elapsed());
}
