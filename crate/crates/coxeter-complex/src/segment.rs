use crate::cos::Cos;
use crate::diagram::{Diagram, TypeSet};
use crate::error::{Error, Result};
use crate::geometry::{
    apply_word, apply_word_inverse, descend_parabolic, descend_to_chamber, flag_descend,
    rank_of_vectors,
};
use crate::realization::Realization;
use crate::vector::Ray;
use num_rational::Ratio;
use std::collections::BTreeSet;

/// The direction of the geodesic from `x` toward `y`: the component of `y`
/// orthogonal to `x`, i.e. `⟨x,x⟩·y − ⟨x,y⟩·x`. This is a point of the unit
/// sphere of directions at `x`.
pub fn direction(x: &Ray, y: &Ray) -> Result<Ray> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch(x.dim(), y.dim()));
    }
    if x == y {
        return Err(Error::CoincidentPoints);
    }
    if *x == y.antipode() {
        return Err(Error::AntipodalPoints);
    }
    Ray::combine(x.norm_sq(), y, -x.dot(y)?, x)
}

/// The cosine of the angle at `base` between the geodesics toward `y` and
/// toward `z`.
pub fn angle(base: &Ray, y: &Ray, z: &Ray) -> Result<Cos> {
    Cos::between(&direction(base, y)?, &direction(base, z)?)
}

/// The midpoint of the (non-degenerate) geodesic from `x` to `y`.
///
/// The bisecting direction is `x/|x| + y/|y|`, which is a rational ray iff
/// the reduced norm ratio `|y|²/|x|² = p/q` has both `p` and `q` perfect
/// squares; then the midpoint is `√p·x + √q·y`. Otherwise the midpoint has
/// irrational coordinates and cannot be represented.
pub fn midpoint(x: &Ray, y: &Ray) -> Result<Ray> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch(x.dim(), y.dim()));
    }
    if x == y {
        return Err(Error::CoincidentPoints);
    }
    if *x == y.antipode() {
        return Err(Error::AntipodalPoints);
    }
    let ratio = Ratio::new(y.norm_sq(), x.norm_sq());
    let (p, q) = (*ratio.numer(), *ratio.denom());
    match (crate::cos::integer_sqrt(p), crate::cos::integer_sqrt(q)) {
        (Some(a), Some(b)) => Ray::combine(a, x, b, y),
        _ => Err(Error::IrrationalMidpoint(p, q)),
    }
}

/// A wall-crossing point in the open arc from `from` to `to`.
#[derive(Clone, Debug)]
pub struct Breakpoint {
    /// Position along the chord `(1−t)·from + t·to`, strictly between 0 and 1.
    /// (Chord parameter, not arclength; the order along the arc is the same.)
    pub parameter: Ratio<i128>,
    /// The crossing point itself.
    pub point: Ray,
    /// Type of the cell whose relative interior contains the point.
    pub labels: TypeSet,
}

/// A sample from the relative interior of one maximal open subarc between
/// consecutive breakpoints (or endpoints).
#[derive(Clone, Debug)]
pub struct IntervalSample {
    pub point: Ray,
    /// Type of the cell whose relative interior contains the whole subarc.
    pub labels: TypeSet,
}

/// A geodesic segment between two non-antipodal, distinct points, decomposed
/// along the walls of the complex.
#[derive(Clone, Debug)]
pub struct SegmentTrace {
    pub from: Ray,
    pub to: Ray,
    /// Cosine of the segment's length.
    pub cos: Cos,
    pub from_labels: TypeSet,
    pub to_labels: TypeSet,
    pub breakpoints: Vec<Breakpoint>,
    pub intervals: Vec<IntervalSample>,
    /// Stop sequence: endpoint and breakpoint types, e.g. `"232"`.
    pub type_string: String,
    /// Whether the whole segment lies in the 1-skeleton of a singular
    /// sphere, i.e. every open subarc lies in a cell of dimension ≤ 1.
    pub singular: bool,
    /// Dimension of the largest cell whose relative interior the segment
    /// meets (0 would mean a single vertex; 1 means edges only).
    pub hull_dim: usize,
    cells: Vec<Vec<Ray>>,
}

impl SegmentTrace {
    /// All closed cells whose relative interior the segment meets,
    /// endpoint cells included. Each cell is given by its sorted vertex
    /// list; the list of cells is sorted and duplicate-free.
    pub fn cells_met(&self) -> &[Vec<Ray>] {
        &self.cells
    }

    /// All vertices of all cells met, sorted and duplicate-free.
    pub fn vertices_met(&self) -> Vec<Ray> {
        let set: BTreeSet<Ray> = self.cells.iter().flatten().cloned().collect();
        set.into_iter().collect()
    }
}

fn stop_string(labels: &TypeSet) -> String {
    if labels.len() == 1 {
        let l = labels.iter().next().unwrap();
        if l <= 9 {
            return l.to_string();
        }
    }
    format!("({labels})")
}

fn type_string_of(from: &TypeSet, stops: &[TypeSet], to: &TypeSet) -> String {
    let mut s = stop_string(from);
    for labels in stops {
        s.push_str(&stop_string(labels));
    }
    s.push_str(&stop_string(to));
    s
}

/// Shared chord walk: crossing parameters and points for the given walls,
/// plus one interior sample per maximal subarc.
fn chord_walk(
    x: &Ray,
    y: &Ray,
    roots: &[Ray],
) -> Result<(Vec<(Ratio<i128>, Ray)>, Vec<Ray>)> {
    let mut params: BTreeSet<Ratio<i128>> = BTreeSet::new();
    for r in roots {
        let a = r.dot(x)?;
        let b = r.dot(y)?;
        if (a > 0 && b < 0) || (a < 0 && b > 0) {
            params.insert(Ratio::new(a, a - b));
        }
    }
    let params: Vec<Ratio<i128>> = params.into_iter().collect();
    let point_at = |t: Ratio<i128>| -> Result<Ray> {
        Ray::combine(*t.denom() - *t.numer(), x, *t.numer(), y)
    };
    let mut breakpoints = Vec::with_capacity(params.len());
    for &t in &params {
        breakpoints.push((t, point_at(t)?));
    }
    let mut fenceposts = vec![Ratio::new(0, 1)];
    fenceposts.extend(params.iter().copied());
    fenceposts.push(Ratio::new(1, 1));
    let mut samples = Vec::with_capacity(fenceposts.len() - 1);
    for w in fenceposts.windows(2) {
        let mid = (w[0] + w[1]) / 2;
        samples.push(point_at(mid)?);
    }
    Ok((breakpoints, samples))
}

/// Classifies the geodesic segment from `x` to `y` against the walls of the
/// complex: where it crosses walls, which cells its open pieces lie in, its
/// stop sequence, and whether it is singular.
pub fn trace_segment(real: &Realization, x: &Ray, y: &Ray) -> Result<SegmentTrace> {
    for p in [x, y] {
        if p.dim() != real.ambient_dim() {
            return Err(Error::DimensionMismatch(p.dim(), real.ambient_dim()));
        }
        if !real.contains(p)? {
            return Err(Error::OutsideRegion(format!(
                "point {p} lies outside the {} subspace",
                real.name()
            )));
        }
    }
    if x == y {
        return Err(Error::CoincidentPoints);
    }
    if *x == y.antipode() {
        return Err(Error::AntipodalPoints);
    }
    let cos = Cos::between(x, y)?;
    let (raw_breakpoints, raw_samples) = chord_walk(x, y, real.positive_roots())?;

    let mut cells: BTreeSet<Vec<Ray>> = BTreeSet::new();
    let mut classify = |p: &Ray| -> Result<TypeSet> {
        let (rep, word) = descend_to_chamber(real, p)?;
        let labels = crate::geometry::chamber_point_type(real, &rep)?;
        let mut cell_vertices: Vec<Ray> = Vec::with_capacity(labels.len());
        for j in labels.iter() {
            cell_vertices.push(apply_word_inverse(real, real.vertex(j)?, &word)?);
        }
        cell_vertices.sort();
        cells.insert(cell_vertices);
        Ok(labels)
    };

    let from_labels = classify(x)?;
    let to_labels = classify(y)?;
    let mut breakpoints = Vec::with_capacity(raw_breakpoints.len());
    for (parameter, point) in raw_breakpoints {
        let labels = classify(&point)?;
        breakpoints.push(Breakpoint { parameter, point, labels });
    }
    let mut intervals = Vec::with_capacity(raw_samples.len());
    let mut hull_dim = 0usize;
    for point in raw_samples {
        let labels = classify(&point)?;
        hull_dim = hull_dim.max(labels.len().saturating_sub(1));
        intervals.push(IntervalSample { point, labels });
    }
    let singular = hull_dim <= 1;
    let stop_sets: Vec<TypeSet> = breakpoints.iter().map(|b| b.labels).collect();
    let type_string = type_string_of(&from_labels, &stop_sets, &to_labels);
    Ok(SegmentTrace {
        from: x.clone(),
        to: y.clone(),
        cos,
        from_labels,
        to_labels,
        breakpoints,
        intervals,
        type_string,
        singular,
        hull_dim,
        cells: cells.into_iter().collect(),
    })
}

/// The stop sequence of the segment from `x` to `y` (see [`trace_segment`]).
pub fn segment_type(real: &Realization, x: &Ray, y: &Ray) -> Result<String> {
    Ok(trace_segment(real, x, y)?.type_string)
}

/// The singular span of a set of points: all walls containing every point,
/// and the dimension of the singular sphere they cut out.
#[derive(Clone, Debug)]
pub struct SingularSpan {
    /// Positive roots vanishing on every input point.
    pub roots: Vec<Ray>,
    /// Dimension of the sphere obtained by intersecting those walls with
    /// the complex's sphere (`rank − #independent roots − 1`).
    pub sphere_dim: usize,
}

/// Computes the smallest singular sphere containing all given points.
pub fn singular_span(real: &Realization, points: &[&Ray]) -> Result<SingularSpan> {
    let mut roots = Vec::new();
    'root: for r in real.positive_roots() {
        for p in points {
            if r.dot(p)? != 0 {
                continue 'root;
            }
        }
        roots.push(r.clone());
    }
    let refs: Vec<&Ray> = roots.iter().collect();
    let independent = rank_of_vectors(&refs);
    let sphere_dim = real
        .space_dim()
        .checked_sub(independent + 1)
        .ok_or_else(|| Error::InvalidArgument("walls cut out an empty locus".into()))?;
    Ok(SingularSpan { roots, sphere_dim })
}

/// The complex of directions at a point or flag, presented by its walls
/// inside the ambient complex.
#[derive(Clone, Debug)]
pub struct LinkRealization {
    /// All positive ambient roots vanishing on the flag — the walls of the
    /// link complex.
    pub roots: Vec<Ray>,
    /// A simple system for those walls, keyed by ambient label: the
    /// fundamental walls through the flag's cell, transported back to the
    /// flag's own position. Sorted by label.
    pub simple_roots: Vec<(usize, Ray)>,
    /// Diagram computed from the Cartan pairings of the simple system. Its
    /// node labels are the ambient labels that survive in the link.
    pub diagram: Diagram,
}

/// The link complex of a single point: the space of directions at `x`.
///
/// Its diagram is the ambient diagram with the labels of `x`'s cell deleted
/// (computed here from actual root pairings, not by deletion).
pub fn link_realization(real: &Realization, x: &Ray) -> Result<LinkRealization> {
    flag_link_realization(real, std::slice::from_ref(x))
}

/// The iterated link complex of a flag (a base point, then directions at it,
/// refining further and further links).
pub fn flag_link_realization(real: &Realization, flag: &[Ray]) -> Result<LinkRealization> {
    if flag.is_empty() {
        return Err(Error::InvalidArgument(
            "the link of an empty flag is the whole complex".into(),
        ));
    }
    let (members, word) = flag_descend(real, flag)?;
    let mut simple_roots = Vec::new();
    'label: for l in 1..=real.rank() {
        let r = real.simple_root(l)?;
        for m in &members {
            if r.dot(m)? != 0 {
                continue 'label;
            }
        }
        simple_roots.push((l, apply_word_inverse(real, r, &word)?));
    }
    let mut roots = Vec::new();
    'wall: for r in real.positive_roots() {
        for m in flag {
            if r.dot(m)? != 0 {
                continue 'wall;
            }
        }
        roots.push(r.clone());
    }
    let diagram = Diagram::from_simple_system(&simple_roots)?;
    debug_assert_eq!(roots.len(), {
        // Transport is a group element: it must carry the walls through the
        // descended flag bijectively onto the walls through the original.
        let mut count = 0;
        'back: for r in real.positive_roots() {
            for m in &members {
                if r.dot(m)? != 0 {
                    continue 'back;
                }
            }
            count += 1;
        }
        count
    });
    Ok(LinkRealization {
        roots,
        simple_roots,
        diagram,
    })
}

/// One stop of a segment traced inside an (iterated) link, with the ambient
/// labels that name it there.
#[derive(Clone, Debug)]
pub struct LinkStop {
    pub parameter: Ratio<i128>,
    pub point: Ray,
    pub labels: TypeSet,
}

/// A geodesic segment inside the link of a flag, decomposed along the walls
/// of the link complex. Labels are the ambient labels of the link vertices.
#[derive(Clone, Debug)]
pub struct LinkTrace {
    pub cos: Cos,
    pub from_labels: TypeSet,
    pub to_labels: TypeSet,
    pub breakpoints: Vec<LinkStop>,
    pub type_string: String,
    pub singular: bool,
    pub hull_dim: usize,
}

/// Traces the geodesic from `from` to `to` inside the link of `flag`.
///
/// The flag is a sequence (base point; then directions at it, refining
/// further and further links). `from` and `to` must be orthogonal to every
/// flag member; the trace uses only the walls containing the whole flag,
/// which are exactly the walls of the link complex.
pub fn link_trace(
    real: &Realization,
    flag: &[Ray],
    from: &Ray,
    to: &Ray,
) -> Result<LinkTrace> {
    if flag.is_empty() {
        return Err(Error::InvalidArgument("link trace needs a nonempty flag".into()));
    }
    let (members, word) = flag_descend(real, flag)?;
    let from = apply_word(real, from, &word)?;
    let to = apply_word(real, to, &word)?;
    for m in &members {
        for p in [&from, &to] {
            if m.dot(p)? != 0 {
                return Err(Error::InvalidArgument(
                    "link trace endpoints must be orthogonal to the flag".into(),
                ));
            }
        }
    }
    if from == to {
        return Err(Error::CoincidentPoints);
    }
    if from == to.antipode() {
        return Err(Error::AntipodalPoints);
    }
    // Active labels: fundamental walls containing every flag member. These
    // are the simple roots of the link complex.
    let mut active = TypeSet::empty();
    'label: for l in 1..=real.rank() {
        for m in &members {
            if real.simple_root(l)?.dot(m)? != 0 {
                continue 'label;
            }
        }
        active.insert(l);
    }
    // Walls of the link complex: all walls containing every flag member.
    let mut link_roots = Vec::new();
    'wall: for r in real.positive_roots() {
        for m in &members {
            if r.dot(m)? != 0 {
                continue 'wall;
            }
        }
        link_roots.push(r.clone());
    }
    let cos = Cos::between(&from, &to)?;
    let classify = |p: &Ray| -> Result<TypeSet> {
        let (rep, _) = descend_parabolic(real, p, &active)?;
        let mut labels = TypeSet::empty();
        for l in active.iter() {
            if real.simple_root(l)?.dot(&rep)? > 0 {
                labels.insert(l);
            }
        }
        Ok(labels)
    };
    let (raw_breakpoints, raw_samples) = chord_walk(&from, &to, &link_roots)?;
    let from_labels = classify(&from)?;
    let to_labels = classify(&to)?;
    let mut breakpoints = Vec::with_capacity(raw_breakpoints.len());
    for (parameter, point) in raw_breakpoints {
        let labels = classify(&point)?;
        breakpoints.push(LinkStop { parameter, point, labels });
    }
    let mut hull_dim = 0usize;
    for point in &raw_samples {
        let labels = classify(point)?;
        hull_dim = hull_dim.max(labels.len().saturating_sub(1));
    }
    let singular = hull_dim <= 1;
    let stop_sets: Vec<TypeSet> = breakpoints.iter().map(|b| b.labels).collect();
    let type_string = type_string_of(&from_labels, &stop_sets, &to_labels);
    Ok(LinkTrace {
        cos,
        from_labels,
        to_labels,
        breakpoints,
        type_string,
        singular,
        hull_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Family;

    fn real(family: Family, rank: usize) -> Realization {
        Realization::new(family, rank).unwrap()
    }

    fn ray(coords: &[i64]) -> Ray {
        Ray::new(coords.to_vec()).unwrap()
    }

    #[test]
    fn link_of_a_fundamental_vertex_drops_its_node() {
        use crate::diagram::Family;
        // Rank-7 E: the link of the branch-end vertex 7 is a rank-6 E complex
        // on the surviving labels 1..6.
        let e7 = real(Family::E7, 7);
        let link = link_realization(&e7, e7.vertex(7).unwrap()).unwrap();
        let labels: Vec<usize> = link.simple_roots.iter().map(|(l, _)| *l).collect();
        assert_eq!(labels, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(
            link.diagram.classify_component().unwrap(),
            (Family::E6, 6)
        );
        assert_eq!(link.diagram, e7.diagram().link(7));
        // Rank-8 E: the link of a type-2 vertex is a rank-7 D complex.
        let e8 = real(Family::E8, 8);
        let link = link_realization(&e8, e8.vertex(2).unwrap()).unwrap();
        assert_eq!(
            link.diagram.classify_component().unwrap(),
            (Family::D, 7)
        );
        assert_eq!(link.diagram, e8.diagram().link(2));
    }

    #[test]
    fn link_at_a_translated_vertex_transports_the_simple_system() {
        use crate::diagram::Family;
        let e8 = real(Family::E8, 8);
        // A type-2 vertex away from the fundamental chamber.
        let x = ray(&[4, 0, 0, 0, 0, 0, 0, 0]);
        let link = link_realization(&e8, &x).unwrap();
        assert_eq!(
            link.diagram.classify_component().unwrap(),
            (Family::D, 7)
        );
        for (_, r) in &link.simple_roots {
            assert_eq!(r.dot(&x).unwrap(), 0);
        }
        // The simple system generates within the vanishing walls: every
        // simple root is one of them.
        for (_, r) in &link.simple_roots {
            assert!(link.roots.contains(r) || link.roots.contains(&r.antipode()));
        }
        // Rank drops by one from the ambient complex: 7 link labels.
        assert_eq!(link.simple_roots.len(), 7);
    }

    #[test]
    fn iterated_link_of_a_flag() {
        use crate::diagram::Family;
        // Flag (v_8; direction toward v_7) in rank-8 E: the first link is a
        // rank-7 E complex, and the direction toward v_7 is its label-7
        // vertex, so the iterated link is rank-6 E on labels 1..6.
        let e8 = real(Family::E8, 8);
        let v8 = e8.vertex(8).unwrap().clone();
        let v7 = e8.vertex(7).unwrap().clone();
        let xi = direction(&v8, &v7).unwrap();
        let link = flag_link_realization(&e8, &[v8, xi]).unwrap();
        let labels: Vec<usize> = link.simple_roots.iter().map(|(l, _)| *l).collect();
        assert_eq!(labels, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(
            link.diagram.classify_component().unwrap(),
            (Family::E6, 6)
        );
    }

    #[test]
    fn direction_is_orthogonal_and_oriented() {
        let x = ray(&[1, 0, 0, 0]);
        let y = ray(&[3, 4, 0, 0]);
        let d = direction(&x, &y).unwrap();
        assert_eq!(d.dot(&x).unwrap(), 0);
        assert!(d.dot(&y).unwrap() > 0);
        assert_eq!(d, ray(&[0, 1, 0, 0]));
    }

    #[test]
    fn direction_rejects_degenerate_pairs() {
        let x = ray(&[1, 2]);
        assert_eq!(direction(&x, &x), Err(Error::CoincidentPoints));
        assert_eq!(direction(&x, &x.antipode()), Err(Error::AntipodalPoints));
    }

    #[test]
    fn midpoint_of_equal_norm_points() {
        let x = ray(&[1, 0, 0]);
        let y = ray(&[0, 1, 0]);
        assert_eq!(midpoint(&x, &y).unwrap(), ray(&[1, 1, 0]));
    }

    #[test]
    fn midpoint_with_square_norm_ratio() {
        // |y|²/|x|² = 8/2 = 4: midpoint is 2x + y.
        let x = ray(&[0, 0, 0, 0, 0, 0, -1, -1]);
        let y = ray(&[-1, -1, -1, -1, -1, -1, -1, 1]);
        assert_eq!(
            midpoint(&x, &y).unwrap(),
            ray(&[-1, -1, -1, -1, -1, -1, -3, -1])
        );
    }

    #[test]
    fn midpoint_irrational_is_reported() {
        let x = ray(&[1, 0]);
        let y = ray(&[1, 1]);
        assert_eq!(midpoint(&x, &y), Err(Error::IrrationalMidpoint(2, 1)));
    }

    #[test]
    fn d4_vertex_to_vertex_wall_path() {
        // In D4, v_4 = e_4 and its image e_3 are at π/2 with the midpoint
        // e_3 + e_4 of type 3.
        let d4 = real(Family::D, 4);
        let x = ray(&[0, 0, 0, 1]);
        let y = ray(&[0, 0, 1, 0]);
        let t = trace_segment(&d4, &x, &y).unwrap();
        assert_eq!(t.type_string, "434");
        assert!(t.singular);
        assert_eq!(t.hull_dim, 1);
        assert_eq!(t.cos, Cos::zero());
        assert_eq!(t.breakpoints.len(), 1);
        assert_eq!(t.breakpoints[0].point, ray(&[0, 0, 1, 1]));
    }

    #[test]
    fn d5_type_one_to_one_crossing() {
        // (1,1,1,1,1) to the double sign-flip (−1,−1,1,1,1): cosine 1/5,
        // crossing the single wall x_1 + x_2 = 0 at the vertex (0,0,1,1,1).
        let d5 = real(Family::D, 5);
        let x = ray(&[1, 1, 1, 1, 1]);
        let y = ray(&[-1, -1, 1, 1, 1]);
        let t = trace_segment(&d5, &x, &y).unwrap();
        assert_eq!(t.cos, Cos::rational(1, 5).unwrap());
        assert_eq!(t.type_string, "131");
        assert!(t.singular);
        assert_eq!(t.breakpoints[0].point, ray(&[0, 0, 1, 1, 1]));
    }

    #[test]
    fn segment_reversal_mirrors_the_trace() {
        let e6 = real(Family::E6, 6);
        let x = e6.vertex(2).unwrap().clone();
        let y = ray(&[3, 0, 0, 0, 0, 1, 1, 1]);
        let forward = trace_segment(&e6, &x, &y).unwrap();
        let backward = trace_segment(&e6, &y, &x).unwrap();
        assert_eq!(forward.cos, backward.cos);
        assert_eq!(
            forward.type_string.chars().rev().collect::<String>(),
            backward.type_string
        );
        assert_eq!(forward.singular, backward.singular);
        assert_eq!(forward.cells_met(), backward.cells_met());
    }

    #[test]
    fn singular_span_of_orthogonal_axis_vertices() {
        // e_4 and e_5 in D5 lie on the wall x_1 = x_2 (among others); the
        // span drops three dimensions.
        let d5 = real(Family::D, 5);
        let x = ray(&[0, 0, 0, 1, 0]);
        let y = ray(&[0, 0, 0, 0, 1]);
        let span = singular_span(&d5, &[&x, &y]).unwrap();
        assert_eq!(span.sphere_dim, 1);
        for r in &span.roots {
            assert_eq!(r.dot(&x).unwrap(), 0);
            assert_eq!(r.dot(&y).unwrap(), 0);
        }
    }

    #[test]
    fn link_trace_inside_a_vertex_link() {
        // Link of v_4 = e_4 in D4 is a rank-3 complex on e_4^⊥ with labels
        // {1,2,3}. The directions e_3 and e_2 are link vertices of label 3;
        // their connecting arc passes through the interior of the link edge
        // {1,2} at (0,1,1,0), so it is not singular.
        let d4 = real(Family::D, 4);
        let base = ray(&[0, 0, 0, 1]);
        let from = ray(&[0, 0, 1, 0]);
        let to = ray(&[0, 1, 0, 0]);
        let t = link_trace(&d4, &[base], &from, &to).unwrap();
        assert_eq!(t.cos, Cos::zero());
        assert_eq!(t.type_string, "3(12)3");
        assert!(!t.singular);
        assert_eq!(t.hull_dim, 2);
        assert_eq!(t.breakpoints.len(), 1);
        assert_eq!(t.breakpoints[0].point, ray(&[0, 1, 1, 0]));
    }
}
