use crate::error::{Error, Result};
use crate::realization::Realization;
use crate::segment::singular_span;
use crate::vector::Ray;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeSet;
use std::f64::consts::{FRAC_PI_2, PI};

/// All cells of the complex, each as its sorted vertex list.
///
/// Chambers are enumerated by walking the chamber adjacency graph: the
/// neighbor across the panel omitting the type-`j` vertex is obtained by
/// reflecting that vertex in the unique wall containing the rest of the
/// chamber's vertices. Cells are the nonempty vertex subsets of chambers.
pub fn all_cells(real: &Realization) -> Result<Vec<Vec<Ray>>> {
    let n = real.rank();
    let fundamental: Vec<Ray> = real.vertices().to_vec();
    let mut chambers: BTreeSet<Vec<Ray>> = BTreeSet::new();
    let mut queue = vec![fundamental.clone()];
    chambers.insert(fundamental);
    while let Some(tuple) = queue.pop() {
        for j in 0..n {
            let mut wall = None;
            'root: for r in real.positive_roots() {
                for (k, v) in tuple.iter().enumerate() {
                    if k != j && r.dot(v)? != 0 {
                        continue 'root;
                    }
                }
                wall = Some(r);
                break;
            }
            let wall = wall.ok_or_else(|| {
                Error::InvalidArgument("panel not contained in any wall".into())
            })?;
            let mut neighbor = tuple.clone();
            neighbor[j] = neighbor[j].reflect(wall)?;
            if !chambers.contains(&neighbor) {
                chambers.insert(neighbor.clone());
                queue.push(neighbor);
            }
        }
    }
    let mut cells: BTreeSet<Vec<Ray>> = BTreeSet::new();
    for tuple in &chambers {
        for mask in 1u32..(1 << n) {
            let mut cell: Vec<Ray> = (0..n)
                .filter(|&j| mask & (1 << j) != 0)
                .map(|j| tuple[j].clone())
                .collect();
            cell.sort();
            cells.insert(cell);
        }
    }
    Ok(cells.into_iter().collect())
}

/// The subcomplex cut out of the sphere by a finite set of closed
/// half-apartments `⟨c, ·⟩ ≥ 0`.
///
/// Because every constraint boundary is a wall of the complex, each cell
/// lies entirely inside or outside each half-apartment, so the intersection
/// is exactly the union of the kept cells; it is convex as an intersection
/// of convex sets.
#[derive(Clone, Debug, Serialize)]
pub struct ConvexSubcomplex {
    /// The defining constraints, as oriented wall normals.
    pub constraints: Vec<Ray>,
    /// All complex vertices satisfying every inequality, sorted.
    pub vertices: Vec<Ray>,
    /// All cells all of whose vertices satisfy every inequality, sorted.
    /// Closed under passing to faces.
    pub cells: Vec<Vec<Ray>>,
}

impl ConvexSubcomplex {
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// The cells not properly contained in another cell of the subcomplex.
    /// Their union is the whole region.
    pub fn maximal_cells(&self) -> Vec<&Vec<Ray>> {
        let index: BTreeSet<&Vec<Ray>> = self.cells.iter().collect();
        let mut non_maximal: BTreeSet<&Vec<Ray>> = BTreeSet::new();
        for cell in &self.cells {
            let m = cell.len();
            for mask in 1u32..((1 << m) - 1) {
                let sub: Vec<Ray> = (0..m)
                    .filter(|&j| mask & (1 << j) != 0)
                    .map(|j| cell[j].clone())
                    .collect();
                if let Some(&found) = index.get(&sub) {
                    non_maximal.insert(found);
                }
            }
        }
        self.cells
            .iter()
            .filter(|c| !non_maximal.contains(c))
            .collect()
    }
}

/// Intersects the complex with the given closed half-apartments.
///
/// `cells` must be the full cell list from [`all_cells`]. An unsatisfiable
/// constraint set yields the empty subcomplex.
pub fn convex_intersection(
    cells: &[Vec<Ray>],
    constraints: Vec<Ray>,
) -> Result<ConvexSubcomplex> {
    let satisfied = |v: &Ray| -> Result<bool> {
        for c in &constraints {
            if c.dot(v)? < 0 {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let mut kept: Vec<Vec<Ray>> = Vec::new();
    'cell: for cell in cells {
        for v in cell {
            if !satisfied(v)? {
                continue 'cell;
            }
        }
        kept.push(cell.clone());
    }
    let vertices: Vec<Ray> = kept
        .iter()
        .filter(|c| c.len() == 1)
        .map(|c| c[0].clone())
        .collect();
    Ok(ConvexSubcomplex {
        constraints,
        vertices,
        cells: kept,
    })
}

/// Intersects the complex with `root_count` random closed half-apartments
/// (distinct walls, independently random orientations). Deterministic in the
/// seed.
pub fn random_convex_intersection(
    real: &Realization,
    cells: &[Vec<Ray>],
    root_count: usize,
    seed: u64,
) -> Result<ConvexSubcomplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let positive = real.positive_roots();
    let picks = sample(&mut rng, positive.len(), root_count.min(positive.len()));
    let constraints: Vec<Ray> = picks
        .iter()
        .map(|i| {
            let r = &positive[i];
            if rng.gen::<bool>() {
                r.clone()
            } else {
                r.antipode()
            }
        })
        .collect();
    convex_intersection(cells, constraints)
}

/// Discretized circumradius data for a convex subcomplex.
#[derive(Clone, Debug, Serialize)]
pub struct RadiusEstimate {
    /// Whether the subcomplex is exactly a whole singular sphere (or the
    /// whole complex). Decided exactly; the numeric fields are then 0/unused.
    pub is_sphere: bool,
    /// `min` over candidate centers of the `max` distance to the subdivision
    /// points: the circumradius as resolved by the discretization.
    pub radius_estimate: f64,
    /// Largest diameter of a final subdivision simplex. Every point of the
    /// region is within `mesh` of a sample point, so the true circumradius
    /// is at most `radius_estimate + mesh`: that sum is the honest upper
    /// bound, and `radius_estimate` itself is the value at the configured
    /// depth (candidate centers are also discretized, so it is not a lower
    /// bound on the true circumradius).
    pub mesh: f64,
    /// `radius_estimate + mesh`.
    pub radius_upper_bound: f64,
    /// Cosine of the honest upper bound: `cos(min(radius_upper_bound, π))`;
    /// the cosine of the true circumradius is at least this.
    pub radius_cos_lower_bound: f64,
    /// A point whose closed quarter-sphere neighborhood provably contains
    /// the region: `⟨c, v⟩ ≥ 0` for every kept vertex, verified in exact
    /// arithmetic — when the small candidate search finds one.
    pub exact_center: Option<Ray>,
    /// Number of deduplicated subdivision points used.
    pub samples: usize,
    pub depth: usize,
}

fn unit(v: &Ray) -> Vec<f64> {
    v.unit_f64()
}

fn angle_f64(a: &[f64], b: &[f64]) -> f64 {
    dot_f64(a, b).clamp(-1.0, 1.0).acos()
}

fn dot_f64(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalized_mean(points: &[&Vec<f64>]) -> Vec<f64> {
    let dim = points[0].len();
    let mut mean = vec![0.0; dim];
    for p in points {
        for (m, x) in mean.iter_mut().zip(p.iter()) {
            *m += x;
        }
    }
    let norm = dot_f64(&mean, &mean).sqrt();
    for m in &mut mean {
        *m /= norm;
    }
    mean
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::with_capacity(m);
    let mut used = vec![false; m];
    fn rec(m: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if current.len() == m {
            out.push(current.clone());
            return;
        }
        for j in 0..m {
            if !used[j] {
                used[j] = true;
                current.push(j);
                rec(m, current, used, out);
                current.pop();
                used[j] = false;
            }
        }
    }
    rec(m, &mut current, &mut used, &mut out);
    out
}

/// Emits the vertices of the final simplices of the `depth`-fold barycentric
/// subdivision of `simplex` (points on the unit sphere), tracking the
/// largest final-simplex diameter in `mesh`.
fn subdivide(simplex: &[Vec<f64>], depth: usize, mesh: &mut f64, points: &mut Vec<Vec<f64>>) {
    if depth == 0 || simplex.len() == 1 {
        for i in 0..simplex.len() {
            for j in (i + 1)..simplex.len() {
                let d = angle_f64(&simplex[i], &simplex[j]);
                if d > *mesh {
                    *mesh = d;
                }
            }
        }
        points.extend_from_slice(simplex);
        return;
    }
    // The maximal simplices of one barycentric subdivision correspond to
    // the orderings of the vertex set: the chain of barycenters of the
    // prefix subsets.
    for perm in permutations(simplex.len()) {
        let child: Vec<Vec<f64>> = (1..=simplex.len())
            .map(|k| {
                let prefix: Vec<&Vec<f64>> = perm[..k].iter().map(|&j| &simplex[j]).collect();
                normalized_mean(&prefix)
            })
            .collect();
        subdivide(&child, depth - 1, mesh, points);
    }
}

fn dedup_key(p: &[f64]) -> Vec<i64> {
    p.iter().map(|x| (x * 1e9).round() as i64).collect()
}

/// Whether the subcomplex is exactly the set of cells lying on every wall
/// containing all of its vertices — i.e. a whole singular sphere (the whole
/// complex when no wall contains them all). Exact arithmetic.
fn is_singular_sphere(
    real: &Realization,
    cells: &[Vec<Ray>],
    sub: &ConvexSubcomplex,
) -> Result<bool> {
    let vertex_refs: Vec<&Ray> = sub.vertices.iter().collect();
    let span = singular_span(real, &vertex_refs)?;
    let mut sphere_cells = 0usize;
    'sphere_cell: for cell in cells {
        for v in cell {
            for r in &span.roots {
                if r.dot(v)? != 0 {
                    continue 'sphere_cell;
                }
            }
        }
        sphere_cells += 1;
    }
    debug_assert!(sub.cells.len() <= sphere_cells);
    Ok(sub.cells.len() == sphere_cells)
}

/// Exact-arithmetic certificate search: a candidate point `c` with
/// `⟨c, v⟩ ≥ 0` for every vertex of the subcomplex, which (with every cell
/// inside the quarter-sphere around `c` by convexity of the cosine
/// condition) proves circumradius ≤ π/2.
fn exact_center_certificate(sub: &ConvexSubcomplex) -> Result<Option<Ray>> {
    let vertex_refs: Vec<&Ray> = sub.vertices.iter().collect();
    let mut candidates: Vec<Ray> = sub.vertices.clone();
    for cell in &sub.cells {
        if cell.len() > 1 {
            let refs: Vec<&Ray> = cell.iter().collect();
            candidates.push(Ray::sum(&refs)?);
        }
    }
    if vertex_refs.len() > 1 {
        candidates.push(Ray::sum(&vertex_refs)?);
    }
    candidates.extend(sub.constraints.iter().cloned());
    'candidate: for c in &candidates {
        for v in &sub.vertices {
            if c.dot(v)? < 0 {
                continue 'candidate;
            }
        }
        return Ok(Some(c.clone()));
    }
    Ok(None)
}

/// Estimates the circumradius of a nonempty convex subcomplex, or decides
/// exactly that it is a whole singular sphere.
///
/// The subcomplex's maximal cells are barycentrically subdivided `depth`
/// times; the candidate centers and the sampled points are both the
/// (deduplicated) vertices of the final simplices, and the estimate is the
/// min over centers of the max distance to the samples. `cells` must be the
/// full cell list of the complex (used for the sphere decision).
pub fn intrinsic_radius_estimate(
    real: &Realization,
    cells: &[Vec<Ray>],
    sub: &ConvexSubcomplex,
    depth: usize,
) -> Result<RadiusEstimate> {
    if sub.is_empty() {
        return Err(Error::InvalidArgument(
            "the empty subcomplex has no radius".into(),
        ));
    }
    if is_singular_sphere(real, cells, sub)? {
        return Ok(RadiusEstimate {
            is_sphere: true,
            radius_estimate: 0.0,
            mesh: 0.0,
            radius_upper_bound: 0.0,
            radius_cos_lower_bound: 1.0,
            exact_center: None,
            samples: 0,
            depth,
        });
    }
    let exact_center = exact_center_certificate(sub)?;

    let mut mesh = 0.0f64;
    let mut raw_points: Vec<Vec<f64>> = Vec::new();
    for cell in sub.maximal_cells() {
        let simplex: Vec<Vec<f64>> = cell.iter().map(unit).collect();
        subdivide(&simplex, depth, &mut mesh, &mut raw_points);
    }
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut points: Vec<Vec<f64>> = Vec::new();
    for p in raw_points {
        if seen.insert(dedup_key(&p)) {
            points.push(p);
        }
    }
    // Order samples far-from-centroid first so that bad candidate centers
    // are rejected after few comparisons.
    let centroid = {
        let refs: Vec<&Vec<f64>> = points.iter().collect();
        normalized_mean(&refs)
    };
    points.sort_by(|a, b| {
        dot_f64(&centroid, a)
            .partial_cmp(&dot_f64(&centroid, b))
            .unwrap()
    });

    // Min over candidate centers of the max distance to the samples,
    // tracked as max-min of cosines with early exit.
    let mut best_cos = -2.0f64;
    if let Some(c) = &exact_center {
        let cu = unit(c);
        best_cos = points
            .iter()
            .map(|p| dot_f64(&cu, p))
            .fold(f64::INFINITY, f64::min);
    }
    for c in &points {
        let mut min_cos = f64::INFINITY;
        for p in &points {
            let d = dot_f64(c, p);
            if d <= best_cos {
                min_cos = f64::NEG_INFINITY;
                break;
            }
            if d < min_cos {
                min_cos = d;
            }
        }
        if min_cos > best_cos {
            best_cos = min_cos;
        }
    }
    let radius_estimate = best_cos.clamp(-1.0, 1.0).acos();
    let radius_upper_bound = radius_estimate + mesh;
    Ok(RadiusEstimate {
        is_sphere: false,
        radius_estimate,
        mesh,
        radius_upper_bound,
        radius_cos_lower_bound: radius_upper_bound.min(PI).cos(),
        exact_center,
        samples: points.len(),
        depth,
    })
}

/// Outcome of one random halfspace-intersection run.
#[derive(Clone, Debug, Serialize)]
pub struct GapRun {
    pub seed: u64,
    /// The chosen constraints, as oriented wall normals: the region is
    /// `⟨c, ·⟩ ≥ 0` for every listed `c`.
    pub constraints: Vec<Ray>,
    pub kept_cells: usize,
    pub kept_vertices: usize,
    pub is_empty: bool,
    /// Radius data for a nonempty region (`None` when empty).
    pub estimate: Option<RadiusEstimate>,
    /// Empty, or a whole singular sphere, or estimated radius ≤ π/2 + 1e-6.
    pub passes: bool,
}

/// Aggregate outcome of a batch of runs.
#[derive(Clone, Debug, Serialize)]
pub struct GapReport {
    pub realization: String,
    pub roots_per_run: usize,
    pub depth: usize,
    pub runs: Vec<GapRun>,
    pub all_pass: bool,
}

fn run_once(
    real: &Realization,
    cells: &[Vec<Ray>],
    roots_per_run: usize,
    seed: u64,
    depth: usize,
) -> Result<GapRun> {
    let sub = random_convex_intersection(real, cells, roots_per_run, seed)?;
    if sub.is_empty() {
        return Ok(GapRun {
            seed,
            constraints: sub.constraints,
            kept_cells: 0,
            kept_vertices: 0,
            is_empty: true,
            estimate: None,
            passes: true,
        });
    }
    let estimate = intrinsic_radius_estimate(real, cells, &sub, depth)?;
    let passes = estimate.is_sphere || estimate.radius_estimate <= FRAC_PI_2 + 1e-6;
    Ok(GapRun {
        seed,
        kept_cells: sub.cells.len(),
        kept_vertices: sub.vertices.len(),
        constraints: sub.constraints,
        is_empty: false,
        estimate: Some(estimate),
        passes,
    })
}

/// Runs the thin-complex gap experiment: repeatedly intersect the sphere
/// with random root halfspaces and verify that the resulting convex
/// subcomplex is a whole singular sphere or has estimated circumradius
/// ≤ π/2 + 1e-6 at the given subdivision depth — never anything between.
pub fn run_gap_experiment(
    real: &Realization,
    roots_per_run: usize,
    runs: usize,
    seed: u64,
    depth: usize,
) -> Result<GapReport> {
    if roots_per_run == 0 {
        return Err(Error::InvalidArgument(
            "need at least one constraint per run".into(),
        ));
    }
    let cells = all_cells(real)?;
    let mut results = Vec::with_capacity(runs);
    for index in 0..runs {
        results.push(run_once(
            real,
            &cells,
            roots_per_run,
            seed + index as u64,
            depth,
        )?);
    }
    let all = results.iter().all(|r| r.passes);
    Ok(GapReport {
        realization: real.name(),
        roots_per_run,
        depth,
        runs: results,
        all_pass: all,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Family;

    #[test]
    fn cell_counts_in_small_complexes() {
        // Rank 2 A: hexagon — 6 vertices + 6 edges.
        let a2 = Realization::new(Family::A, 2).unwrap();
        let cells = all_cells(&a2).unwrap();
        assert_eq!(cells.len(), 12);
        // Rank 3 A: 14 vertices, 36 edges, 24 triangles.
        let a3 = Realization::new(Family::A, 3).unwrap();
        let cells = all_cells(&a3).unwrap();
        assert_eq!(cells.len(), 74);
        let verts = cells.iter().filter(|c| c.len() == 1).count();
        let edges = cells.iter().filter(|c| c.len() == 2).count();
        let tris = cells.iter().filter(|c| c.len() == 3).count();
        assert_eq!((verts, edges, tris), (14, 36, 24));
    }

    #[test]
    fn d4_cell_census() {
        let d4 = Realization::new(Family::D, 4).unwrap();
        let cells = all_cells(&d4).unwrap();
        let chambers = cells.iter().filter(|c| c.len() == 4).count();
        assert_eq!(chambers, 192);
        let verts = cells.iter().filter(|c| c.len() == 1).count();
        assert_eq!(verts, 8 + 8 + 24 + 8);
    }

    #[test]
    fn no_constraints_give_the_full_sphere() {
        let d4 = Realization::new(Family::D, 4).unwrap();
        let cells = all_cells(&d4).unwrap();
        let sub = convex_intersection(&cells, Vec::new()).unwrap();
        assert_eq!(sub.cells.len(), cells.len());
        let est = intrinsic_radius_estimate(&d4, &cells, &sub, 1).unwrap();
        assert!(est.is_sphere);
    }

    #[test]
    fn opposite_roots_cut_out_a_wall() {
        let d4 = Realization::new(Family::D, 4).unwrap();
        let cells = all_cells(&d4).unwrap();
        let r = d4.positive_roots()[0].clone();
        let sub = convex_intersection(&cells, vec![r.clone(), r.antipode()]).unwrap();
        assert!(!sub.is_empty());
        for v in &sub.vertices {
            assert_eq!(r.dot(v).unwrap(), 0);
        }
        let est = intrinsic_radius_estimate(&d4, &cells, &sub, 1).unwrap();
        assert!(est.is_sphere);
    }

    #[test]
    fn contradictory_constraints_give_the_empty_subcomplex() {
        let d4 = Realization::new(Family::D, 4).unwrap();
        let cells = all_cells(&d4).unwrap();
        // x1 ≥ |x2| and −x1 ≥ |x3| force x1 = x2 = x3 = 0; x3 = x4 then
        // kills the remaining axis, so no point of the sphere satisfies all
        // six — every constraint is a wall normal of the complex.
        let c = |v: [i64; 4]| Ray::new(v.to_vec()).unwrap();
        let sub = convex_intersection(
            &cells,
            vec![
                c([1, 1, 0, 0]),
                c([1, -1, 0, 0]),
                c([-1, 0, 1, 0]),
                c([-1, 0, -1, 0]),
                c([0, 0, 1, -1]),
                c([0, 0, -1, 1]),
            ],
        )
        .unwrap();
        assert!(sub.is_empty());
        assert!(sub.vertices.is_empty());
        assert!(intrinsic_radius_estimate(&d4, &cells, &sub, 1).is_err());
    }

    #[test]
    fn single_chamber_radius_is_below_right_angle() {
        // The fundamental chamber: intersection of the simple-root
        // halfspaces. Its circumradius must come out below π/2.
        let d4 = Realization::new(Family::D, 4).unwrap();
        let cells = all_cells(&d4).unwrap();
        let sub = convex_intersection(&cells, d4.simple_roots().to_vec()).unwrap();
        let chambers: Vec<_> = sub.cells.iter().filter(|c| c.len() == 4).collect();
        assert_eq!(chambers.len(), 1);
        assert_eq!(sub.vertices.len(), 4);
        let est = intrinsic_radius_estimate(&d4, &cells, &sub, 2).unwrap();
        assert!(!est.is_sphere);
        assert!(est.exact_center.is_some());
        assert!(est.radius_estimate <= FRAC_PI_2 + 1e-6);
        // Oracle: the smallest cap enclosing the four vertex representatives.
        // The farthest point of the chamber from any near center is a vertex
        // (the distance function is convex on the chamber), so the estimate
        // is sandwiched between the cap radius and cap radius + mesh.
        let oracle = smallest_enclosing_cap(&d4);
        assert!(oracle < FRAC_PI_2);
        assert!(est.radius_estimate >= oracle - 1e-9);
        assert!(est.radius_estimate <= oracle + est.mesh);
    }

    /// Radius of the smallest spherical cap containing the fundamental
    /// chamber's vertices: the minimax center is equidistant from its
    /// support set, so scan the equidistant points of all vertex subsets.
    fn smallest_enclosing_cap(real: &Realization) -> f64 {
        let units: Vec<Vec<f64>> = real.vertices().iter().map(|v| v.unit_f64()).collect();
        let n = units.len();
        let mut best = f64::INFINITY;
        for mask in 1u32..(1 << n) {
            let subset: Vec<&Vec<f64>> = (0..n)
                .filter(|&j| mask & (1 << j) != 0)
                .map(|j| &units[j])
                .collect();
            if let Some(center) = equidistant_point(&subset) {
                let radius = units
                    .iter()
                    .map(|u| angle_f64(&center, u))
                    .fold(0.0f64, f64::max);
                best = best.min(radius);
            }
        }
        best
    }

    /// The point equidistant from the given unit vectors (their "spherical
    /// circumcenter"): solve `G·λ = 1` on the subset's Gram matrix and
    /// normalize `Σλ_i u_i`. `None` for degenerate subsets.
    fn equidistant_point(units: &[&Vec<f64>]) -> Option<Vec<f64>> {
        let k = units.len();
        if k == 1 {
            return Some(units[0].clone());
        }
        let mut g: Vec<Vec<f64>> = (0..k)
            .map(|i| {
                let mut row: Vec<f64> = (0..k).map(|j| dot_f64(units[i], units[j])).collect();
                row.push(1.0);
                row
            })
            .collect();
        for col in 0..k {
            let pivot = (col..k)
                .max_by(|&a, &b| g[a][col].abs().partial_cmp(&g[b][col].abs()).unwrap())
                .unwrap();
            g.swap(col, pivot);
            let p = g[col][col];
            if p.abs() < 1e-12 {
                return None;
            }
            for j in col..=k {
                g[col][j] /= p;
            }
            for i in 0..k {
                if i != col {
                    let f = g[i][col];
                    for j in col..=k {
                        g[i][j] -= f * g[col][j];
                    }
                }
            }
        }
        let dim = units[0].len();
        let mut center = vec![0.0; dim];
        for i in 0..k {
            for (c, x) in center.iter_mut().zip(units[i].iter()) {
                *c += g[i][k] * x;
            }
        }
        let norm = dot_f64(&center, &center).sqrt();
        if norm < 1e-12 {
            return None;
        }
        for c in &mut center {
            *c /= norm;
        }
        Some(center)
    }

    #[test]
    fn single_halfspace_has_its_normal_as_center() {
        let d4 = Realization::new(Family::D, 4).unwrap();
        let report = run_gap_experiment(&d4, 1, 8, 1234, 1).unwrap();
        assert!(report.all_pass);
        for run in &report.runs {
            assert!(!run.is_empty);
            let est = run.estimate.as_ref().unwrap();
            assert!(est.is_sphere || est.exact_center.is_some());
        }
    }

    #[test]
    fn experiment_is_reproducible() {
        let d4 = Realization::new(Family::D, 4).unwrap();
        let a = run_gap_experiment(&d4, 3, 5, 77, 1).unwrap();
        let b = run_gap_experiment(&d4, 3, 5, 77, 1).unwrap();
        for (x, y) in a.runs.iter().zip(&b.runs) {
            assert_eq!(x.constraints, y.constraints);
            assert_eq!(x.kept_cells, y.kept_cells);
            assert_eq!(x.passes, y.passes);
        }
    }

    #[test]
    fn deeper_subdivision_shrinks_the_mesh() {
        let d4 = Realization::new(Family::D, 4).unwrap();
        let cells = all_cells(&d4).unwrap();
        let sub = convex_intersection(&cells, d4.simple_roots().to_vec()).unwrap();
        let d1 = intrinsic_radius_estimate(&d4, &cells, &sub, 1).unwrap();
        let d2 = intrinsic_radius_estimate(&d4, &cells, &sub, 2).unwrap();
        assert!(d2.mesh < d1.mesh);
        assert!(d2.samples > d1.samples);
        assert!(d2.radius_upper_bound <= d1.radius_upper_bound + 1e-12);
    }
}
