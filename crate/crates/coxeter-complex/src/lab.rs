use crate::cos::Cos;
use crate::diagram::{Family, TypeSet};
use crate::error::{Error, Result};
use crate::geometry::{flag_labels, link_common_chamber, point_type, vertex_orbit, vertex_type};
use crate::realization::Realization;
use crate::segment::{angle, direction, link_trace, midpoint, singular_span, trace_segment};
use crate::vector::Ray;
use num_rational::Ratio;
use serde::Serialize;
use std::collections::BTreeSet;

/// One named exact check inside a structured report.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn push_check(list: &mut Vec<Check>, name: &str, pass: bool, detail: String) {
    list.push(Check {
        name: name.to_string(),
        pass,
        detail,
    });
}

fn all_pass(list: &[Check]) -> bool {
    list.iter().all(|c| c.pass)
}

// ---------------------------------------------------------------------------
// Root-type vertex orbits
// ---------------------------------------------------------------------------

/// The vertex label whose orbit consists exactly of the root rays, where one
/// exists: `n−1` for `D_n` (n ≥ 4), `1` for `E6`, `2` for `E7`, `8` for `E8`.
pub fn root_type_label(real: &Realization) -> Result<usize> {
    match (real.family(), real.rank()) {
        (Family::D, n) if n >= 4 => Ok(n - 1),
        (Family::E6, _) => Ok(1),
        (Family::E7, _) => Ok(2),
        (Family::E8, _) => Ok(8),
        _ => Err(Error::UnsupportedRealization(format!(
            "{} has no root-type vertex orbit",
            real.name()
        ))),
    }
}

/// Report that one vertex orbit coincides with the set of root rays.
#[derive(Clone, Debug, Serialize)]
pub struct RootTypeReport {
    pub realization: String,
    pub label: usize,
    pub orbit_size: usize,
    pub root_ray_count: usize,
    pub matches: bool,
}

/// Verifies that the designated vertex orbit is exactly the set of rays
/// spanned by roots (each wall contributes its two normal rays).
pub fn check_root_type_vertices(real: &Realization) -> Result<RootTypeReport> {
    let label = root_type_label(real)?;
    let orbit: BTreeSet<Ray> = vertex_orbit(real, label)?.into_iter().collect();
    let mut root_rays: BTreeSet<Ray> = BTreeSet::new();
    for r in real.positive_roots() {
        root_rays.insert(r.clone());
        root_rays.insert(r.antipode());
    }
    Ok(RootTypeReport {
        realization: real.name(),
        label,
        orbit_size: orbit.len(),
        root_ray_count: root_rays.len(),
        matches: orbit == root_rays,
    })
}

// ---------------------------------------------------------------------------
// Wall structure in the D family
// ---------------------------------------------------------------------------

/// Report on the singular spheres spanned by pairwise orthogonal top
/// vertices in `D_n`.
#[derive(Clone, Debug, Serialize)]
pub struct WallReport {
    pub realization: String,
    /// `n−2` pairwise orthogonal top vertices lying on one wall.
    pub on_wall: Vec<Ray>,
    /// The wall containing them.
    pub wall_root: Ray,
    /// `n−1` pairwise orthogonal top vertices (one more); their hull sphere
    /// is not a subcomplex.
    pub extended: Vec<Ray>,
    /// A point of the extended hull sphere interior to a chamber.
    pub interior_witness: Ray,
    pub checks: Vec<Check>,
    pub all_pass: bool,
}

/// Verifies the two wall facts in `D_n` (n ≥ 4):
///
/// * `n−2` pairwise orthogonal top vertices lie on a common wall and span a
///   singular sphere of dimension `n−3` (codimension 1 inside the wall);
/// * extending to `n−1` pairwise orthogonal top vertices spans a sphere of
///   dimension `n−2` that is **not** contained in any wall — it passes
///   through the interior of a chamber, so it is not a subcomplex.
pub fn check_wall_orthogonal_vertices(real: &Realization) -> Result<WallReport> {
    if real.family() != Family::D || real.rank() < 4 {
        return Err(Error::UnsupportedRealization(format!(
            "wall report needs the D family of rank ≥ 4, got {}",
            real.name()
        )));
    }
    let n = real.rank();
    let axis = |i: usize| -> Ray {
        let mut c = vec![0i64; n];
        c[i] = 1;
        Ray::new(c).expect("axis vector")
    };
    let on_wall: Vec<Ray> = (0..n - 2).map(axis).collect();
    let extended: Vec<Ray> = (0..n - 1).map(axis).collect();
    let wall_root = real.simple_root(n)?.clone();
    let mut checks = Vec::new();

    let mut orthogonal = true;
    for i in 0..extended.len() {
        for j in i + 1..extended.len() {
            orthogonal &= extended[i].dot(&extended[j])? == 0;
        }
    }
    push_check(&mut checks, "pairwise_orthogonal", orthogonal, String::new());

    let mut top_type = true;
    for p in &extended {
        top_type &= vertex_type(real, p)? == Some(n);
    }
    push_check(
        &mut checks,
        "all_top_type_vertices",
        top_type,
        format!("expected vertex type {n}"),
    );

    let mut on_the_wall = true;
    for p in &on_wall {
        on_the_wall &= wall_root.dot(p)? == 0;
    }
    push_check(
        &mut checks,
        "first_family_lies_on_wall",
        on_the_wall,
        format!("wall {wall_root}"),
    );

    let refs: Vec<&Ray> = on_wall.iter().collect();
    let span = singular_span(real, &refs)?;
    let hull_dim = crate::geometry::rank_of_vectors(&refs) - 1;
    push_check(
        &mut checks,
        "wall_family_spans_singular_sphere",
        span.sphere_dim == n - 3 && hull_dim == n - 3,
        format!(
            "singular sphere dim {} vs hull sphere dim {hull_dim}",
            span.sphere_dim
        ),
    );

    let refs_ext: Vec<&Ray> = extended.iter().collect();
    let span_ext = singular_span(real, &refs_ext)?;
    let hull_ext = crate::geometry::rank_of_vectors(&refs_ext) - 1;
    push_check(
        &mut checks,
        "extended_family_escapes_every_wall",
        span_ext.sphere_dim == n - 1 && hull_ext == n - 2,
        format!(
            "smallest singular sphere dim {} ≠ hull sphere dim {hull_ext}",
            span_ext.sphere_dim
        ),
    );

    let mut witness_coords = vec![0i64; n];
    for (i, slot) in witness_coords.iter_mut().enumerate().take(n - 1) {
        *slot = (i + 1) as i64;
    }
    let interior_witness = Ray::new(witness_coords)?;
    let t = point_type(real, &interior_witness)?;
    push_check(
        &mut checks,
        "hull_sphere_meets_chamber_interior",
        t.len() == n,
        format!("witness {interior_witness} has type {t}"),
    );

    let pass = all_pass(&checks);
    Ok(WallReport {
        realization: real.name(),
        on_wall,
        wall_root,
        extended,
        interior_witness,
        checks,
        all_pass: pass,
    })
}

// ---------------------------------------------------------------------------
// The two distinguished top-vertex configurations in E8
// ---------------------------------------------------------------------------

/// First configuration: three top vertices pairwise at distance 2π/3 found
/// from midpoints, closing up at a bottom-rank vertex.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigStarReport {
    pub x1: Ray,
    pub x2: Ray,
    pub y3: Ray,
    pub x3: Ray,
    pub y2: Ray,
    pub z1: Ray,
    pub checks: Vec<Check>,
    pub all_pass: bool,
}

fn expect_e8(real: &Realization) -> Result<()> {
    if real.family() != Family::E8 {
        return Err(Error::UnsupportedRealization(format!(
            "configuration search is specific to E8, got {}",
            real.name()
        )));
    }
    Ok(())
}

fn cos_from(sign: i8, num: i128, den: i128) -> Cos {
    Cos::from_sign_square(sign, Ratio::new(num, den)).expect("valid cosine square")
}

/// Finds the first configuration deterministically: `x1 = v_8`, then the
/// lexicographically first orbit members satisfying the defining exact
/// conditions, then verifies every claimed property of the configuration.
pub fn find_configuration_star(real: &Realization) -> Result<ConfigStarReport> {
    expect_e8(real)?;
    let orbit = vertex_orbit(real, 8)?;
    let x1 = real.vertex(8)?.clone();
    let minus_half = cos_from(-1, 1, 4);
    let third_neg = cos_from(-1, 1, 9);

    let x2 = orbit
        .iter()
        .find(|c| Cos::between(&x1, c).map(|v| v == minus_half).unwrap_or(false))
        .cloned()
        .ok_or_else(|| Error::InvalidArgument("no top vertex at distance 2π/3".into()))?;
    let y3 = midpoint(&x1, &x2)?;

    let x3 = orbit
        .iter()
        .find(|c| {
            (|| -> Result<bool> {
                if Cos::between(&y3, c)? != minus_half {
                    return Ok(false);
                }
                if angle(&y3, c, &x1)? != third_neg {
                    return Ok(false);
                }
                let t = link_trace(real, &[y3.clone()], &direction(&y3, c)?, &direction(&y3, &x1)?)?;
                Ok(t.type_string == "727")
            })()
            .unwrap_or(false)
        })
        .cloned()
        .ok_or_else(|| Error::InvalidArgument("no partner vertex for the midpoint".into()))?;

    let mut checks = Vec::new();
    push_check(
        &mut checks,
        "midpoint_is_top_vertex",
        vertex_type(real, &y3)? == Some(8),
        format!("{y3}"),
    );
    let side = trace_segment(real, &x1, &y3)?;
    push_check(
        &mut checks,
        "x1_y3_is_short_edge_path",
        side.type_string == "878" && side.cos == cos_from(1, 1, 4),
        format!("type {} at {}", side.type_string, side.cos),
    );
    let long_side = trace_segment(real, &y3, &x3)?;
    push_check(
        &mut checks,
        "y3_x3_is_long_path",
        long_side.type_string == "87878" && long_side.cos == minus_half,
        format!("type {} at {}", long_side.type_string, long_side.cos),
    );
    let mid = midpoint(&x1, &y3)?;
    push_check(
        &mut checks,
        "inner_midpoint_is_seven_vertex",
        vertex_type(real, &mid)? == Some(7),
        format!("{mid}"),
    );
    let cross = trace_segment(real, &mid, &x3)?;
    push_check(
        &mut checks,
        "midpoint_to_x3_path",
        cross.type_string == "72768" && cross.cos == cos_from(-1, 1, 3),
        format!("type {} at {}", cross.type_string, cross.cos),
    );
    push_check(
        &mut checks,
        "right_angle_at_inner_midpoint",
        angle(&mid, &x1, &x3)? == Cos::zero(),
        String::new(),
    );
    push_check(
        &mut checks,
        "x1_x3_distance_two_thirds_pi",
        Cos::between(&x1, &x3)? == minus_half,
        String::new(),
    );
    let y2 = midpoint(&x1, &x3)?;
    push_check(
        &mut checks,
        "second_midpoint_is_top_vertex",
        vertex_type(real, &y2)? == Some(8),
        format!("{y2}"),
    );
    let z1 = midpoint(&y2, &y3)?;
    push_check(
        &mut checks,
        "closing_midpoint_is_type_two_vertex",
        vertex_type(real, &z1)? == Some(2),
        format!("{z1}"),
    );
    let pass = all_pass(&checks);
    Ok(ConfigStarReport {
        x1,
        x2,
        y3,
        x3,
        y2,
        z1,
        checks,
        all_pass: pass,
    })
}

/// Second configuration: directions at `x1` extending the first
/// configuration by a fourth top vertex, producing an equilateral direction
/// triangle with a common center in the link.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigStarStarReport {
    pub star: ConfigStarReport,
    pub xi2: Ray,
    pub xi3: Ray,
    pub zeta: Ray,
    pub x: Ray,
    pub xi: Ray,
    pub gamma: Ray,
    pub w: Ray,
    pub omega: Ray,
    pub z: Ray,
    pub v: Ray,
    pub checks: Vec<Check>,
    pub all_pass: bool,
}

/// Finds the second configuration on top of a verified first one and checks
/// every claimed property.
pub fn find_configuration_star_star(real: &Realization) -> Result<ConfigStarStarReport> {
    expect_e8(real)?;
    let star = find_configuration_star(real)?;
    let (x1, x2, x3, y3, z1) = (
        star.x1.clone(),
        star.x2.clone(),
        star.x3.clone(),
        star.y3.clone(),
        star.z1.clone(),
    );
    let xi2 = direction(&x1, &x2)?;
    let xi3 = direction(&x1, &x3)?;
    let zeta = direction(&x1, &z1)?;
    let orbit = vertex_orbit(real, 8)?;
    let half = cos_from(1, 1, 4);
    let minus_half = cos_from(-1, 1, 4);
    let third_neg = cos_from(-1, 1, 9);
    let inv_sqrt3_neg = cos_from(-1, 1, 3);

    let x = orbit
        .iter()
        .find(|c| {
            (|| -> Result<bool> {
                if Cos::between(&x1, c)? != half {
                    return Ok(false);
                }
                let xi = direction(&x1, c)?;
                if Cos::between(&xi, &xi2)? != third_neg
                    || Cos::between(&xi, &xi3)? != third_neg
                {
                    return Ok(false);
                }
                if Cos::between(&zeta, &xi)? != inv_sqrt3_neg {
                    return Ok(false);
                }
                let t = link_trace(real, std::slice::from_ref(&x1), &xi, &zeta)?;
                Ok(t.type_string == "7672")
            })()
            .unwrap_or(false)
        })
        .cloned()
        .ok_or_else(|| Error::InvalidArgument("no fourth top vertex found".into()))?;
    let xi = direction(&x1, &x)?;

    let mut checks = Vec::new();
    for (name, other) in [("xi2", &xi2), ("xi3", &xi3)] {
        push_check(
            &mut checks,
            &format!("zeta_right_angle_to_{name}"),
            angle(&zeta, &xi, other)? == Cos::zero(),
            String::new(),
        );
        push_check(
            &mut checks,
            &format!("xi_to_{name}_distance"),
            Cos::between(&xi, other)? == third_neg,
            String::new(),
        );
    }
    for (name, a, b) in [
        ("xi_xi2", &xi, &xi2),
        ("xi_xi3", &xi, &xi3),
        ("xi2_xi3", &xi2, &xi3),
    ] {
        let t = link_trace(real, std::slice::from_ref(&x1), a, b)?;
        push_check(
            &mut checks,
            &format!("triangle_side_{name}"),
            t.type_string == "727" && t.cos == third_neg,
            format!("type {} at {}", t.type_string, t.cos),
        );
    }
    let gamma = Ray::sum(&[&xi, &xi2, &xi3])?;
    let gamma_labels = flag_labels(real, &[x1.clone(), gamma.clone()])?
        .difference(&flag_labels(real, std::slice::from_ref(&x1))?);
    push_check(
        &mut checks,
        "center_is_link_seven_vertex",
        gamma_labels == TypeSet::singleton(7),
        format!("labels {gamma_labels}"),
    );
    let third_pos = cos_from(1, 1, 9);
    for (name, d) in [("xi", &xi), ("xi2", &xi2), ("xi3", &xi3)] {
        push_check(
            &mut checks,
            &format!("center_to_{name}_cos_one_third"),
            Cos::between(&gamma, d)? == third_pos,
            String::new(),
        );
    }
    // The midpoints of the triangle's sides are 2-vertices of the link, and
    // the central 7-vertex spans a common link cell with each of them.
    for (name, a, b) in [
        ("xi_xi2", &xi, &xi2),
        ("xi_xi3", &xi, &xi3),
        ("xi2_xi3", &xi2, &xi3),
    ] {
        let mid = midpoint(a, b)?;
        let mid_labels = flag_labels(real, &[x1.clone(), mid.clone()])?
            .difference(&flag_labels(real, std::slice::from_ref(&x1))?);
        let adjacent = link_common_chamber(real, &x1, &[gamma.clone(), mid.clone()])?;
        push_check(
            &mut checks,
            &format!("center_adjacent_to_midpoint_{name}"),
            mid_labels == TypeSet::singleton(2) && adjacent,
            format!("labels {mid_labels}, cofacial {adjacent}"),
        );
    }
    let w = midpoint(&x, &x2)?;
    push_check(
        &mut checks,
        "w_is_top_vertex",
        vertex_type(real, &w)? == Some(8),
        format!("{w}"),
    );
    let omega = direction(&x1, &w)?;
    push_check(
        &mut checks,
        "omega_is_direction_midpoint",
        omega == midpoint(&xi, &xi2)?,
        format!("{omega}"),
    );
    let z = midpoint(&x1, &w)?;
    push_check(
        &mut checks,
        "z_is_type_two_vertex",
        vertex_type(real, &z)? == Some(2),
        format!("{z}"),
    );
    push_check(
        &mut checks,
        "z_direction_matches_omega",
        direction(&x1, &z)? == omega,
        String::new(),
    );
    let zx3_angle = angle(&x1, &z, &x3)?;
    let zx3_link = link_trace(real, std::slice::from_ref(&x1), &omega, &xi3)?;
    push_check(
        &mut checks,
        "angle_x1_between_z_and_x3",
        zx3_angle == inv_sqrt3_neg && zx3_link.type_string == "2767",
        format!("angle {zx3_angle}, link type {}", zx3_link.type_string),
    );
    let zx3 = trace_segment(real, &z, &x3)?;
    push_check(
        &mut checks,
        "z_to_x3_segment",
        zx3.type_string == "2828" && zx3.cos == cos_from(-1, 1, 2),
        format!("type {} at {}", zx3.type_string, zx3.cos),
    );
    let v = zx3.breakpoints[0].point.clone();
    push_check(
        &mut checks,
        "first_breakpoint_is_top_vertex",
        vertex_type(real, &v)? == Some(8),
        format!("{v}"),
    );
    push_check(
        &mut checks,
        "x3_to_w_distance",
        Cos::between(&x3, &w)? == minus_half,
        String::new(),
    );
    for (name, other) in [("x1", &x1), ("w", &w), ("y3", &y3), ("x", &x)] {
        push_check(
            &mut checks,
            &format!("right_angle_at_z_toward_{name}"),
            angle(&z, &x3, other)? == Cos::zero(),
            String::new(),
        );
    }
    let x1w = trace_segment(real, &x1, &w)?;
    push_check(
        &mut checks,
        "x1_to_w_right_distance",
        x1w.cos == Cos::zero() && x1w.type_string == "828",
        format!("type {} at {}", x1w.type_string, x1w.cos),
    );
    let y3x = trace_segment(real, &y3, &x)?;
    push_check(
        &mut checks,
        "y3_to_x_right_distance",
        y3x.cos == Cos::zero() && y3x.type_string == "828",
        format!("type {} at {}", y3x.type_string, y3x.cos),
    );
    let far_mid = midpoint(&x3, &w)?;
    push_check(
        &mut checks,
        "far_midpoint_is_top_vertex",
        vertex_type(real, &far_mid)? == Some(8),
        format!("{far_mid}"),
    );
    push_check(
        &mut checks,
        "center_extends_to_two_thirds_pi",
        Cos::between(&x1, &far_mid)? == minus_half && direction(&x1, &far_mid)? == gamma,
        format!("{far_mid}"),
    );
    let pass = all_pass(&checks) && star.all_pass;
    Ok(ConfigStarStarReport {
        star,
        xi2,
        xi3,
        zeta,
        x,
        xi,
        gamma,
        w,
        omega,
        z,
        v,
        checks,
        all_pass: pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_type_orbits_match() {
        for (family, rank) in [
            (Family::D, 4),
            (Family::D, 5),
            (Family::E6, 6),
            (Family::E7, 7),
            (Family::E8, 8),
        ] {
            let real = Realization::new(family, rank).unwrap();
            let report = check_root_type_vertices(&real).unwrap();
            assert!(report.matches, "{}", real.name());
            assert_eq!(report.orbit_size, report.root_ray_count);
        }
    }

    #[test]
    fn root_type_label_rejects_small_d() {
        let d3 = Realization::new(Family::D, 3).unwrap();
        assert!(root_type_label(&d3).is_err());
        let a4 = Realization::new(Family::A, 4).unwrap();
        assert!(root_type_label(&a4).is_err());
    }

    #[test]
    fn wall_facts_hold_in_d4() {
        let d4 = Realization::new(Family::D, 4).unwrap();
        let report = check_wall_orthogonal_vertices(&d4).unwrap();
        assert!(report.all_pass, "{:#?}", report.checks);
    }

    #[test]
    fn wall_report_needs_d_family() {
        let e6 = Realization::new(Family::E6, 6).unwrap();
        assert!(check_wall_orthogonal_vertices(&e6).is_err());
    }
}
