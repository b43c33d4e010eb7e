use coxeter_complex::lab::{find_configuration_star, find_configuration_star_star};
use coxeter_complex::{Family, Realization};

fn main() {
    let e8 = Realization::new(Family::E8, 8).unwrap();
    let star = find_configuration_star(&e8).unwrap();
    println!("star all_pass={}", star.all_pass);
    for c in &star.checks {
        println!("  [{}] {} {}", if c.pass { "ok" } else { "FAIL" }, c.name, c.detail);
    }
    let ss = find_configuration_star_star(&e8).unwrap();
    println!("star_star all_pass={}", ss.all_pass);
    for c in &ss.checks {
        println!("  [{}] {} {}", if c.pass { "ok" } else { "FAIL" }, c.name, c.detail);
    }
}
