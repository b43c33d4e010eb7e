use crate::diagram::{Diagram, Family, TypeSet};
use crate::error::{Error, Result};
use crate::realization::Realization;
use crate::vector::Ray;
use num_rational::Ratio;
use num_traits::Zero;
use rand::Rng;
use std::collections::{BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

/// Which violated fundamental wall to reflect at while descending a point
/// into the fundamental chamber. Both strategies reach the same chamber
/// representative (it is unique); only the word differs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescentStrategy {
    /// Reflect at the violated root with the smallest label (the default).
    LowestIndex,
    /// Reflect at the violated root with the largest label.
    HighestIndex,
}

fn descent_cap(real: &Realization) -> usize {
    4 * real.positive_roots().len() + 64
}

/// Descends `p` into the closed fundamental chamber, reflecting at the
/// lowest-index violated wall each step. Returns the chamber representative
/// together with the word of reflection labels in the order applied.
pub fn descend_to_chamber(real: &Realization, p: &Ray) -> Result<(Ray, Vec<usize>)> {
    descend_with(real, p, DescentStrategy::LowestIndex)
}

/// Descends `p` into the closed fundamental chamber with the given strategy.
pub fn descend_with(
    real: &Realization,
    p: &Ray,
    strategy: DescentStrategy,
) -> Result<(Ray, Vec<usize>)> {
    let all = TypeSet::from_iter(1..=real.rank());
    descend_parabolic_with(real, p, &all, strategy)
}

/// Descends `p` using only the simple reflections with labels in `gens`,
/// until `⟨r_l, p⟩ ≥ 0` for every `l ∈ gens`.
pub fn descend_parabolic(real: &Realization, p: &Ray, gens: &TypeSet) -> Result<(Ray, Vec<usize>)> {
    descend_parabolic_with(real, p, gens, DescentStrategy::LowestIndex)
}

fn descend_parabolic_with(
    real: &Realization,
    p: &Ray,
    gens: &TypeSet,
    strategy: DescentStrategy,
) -> Result<(Ray, Vec<usize>)> {
    if p.dim() != real.ambient_dim() {
        return Err(Error::DimensionMismatch(p.dim(), real.ambient_dim()));
    }
    let mut current = p.clone();
    let mut word = Vec::new();
    let cap = descent_cap(real);
    for _ in 0..cap {
        let mut violated = None;
        for l in gens.iter() {
            if real.simple_root(l)?.dot(&current)? < 0 {
                violated = Some(l);
                if strategy == DescentStrategy::LowestIndex {
                    break;
                }
            }
        }
        match violated {
            None => return Ok((current, word)),
            Some(l) => {
                current = current.reflect(real.simple_root(l)?)?;
                word.push(l);
            }
        }
    }
    Err(Error::InvalidArgument(
        "descent failed to terminate within the inversion bound".into(),
    ))
}

/// The type of the cell whose relative interior contains `p`: the set of
/// labels `l` with `⟨r_l, p′⟩ > 0` for the chamber representative `p′`.
pub fn point_type(real: &Realization, p: &Ray) -> Result<TypeSet> {
    let (rep, _) = descend_to_chamber(real, p)?;
    chamber_point_type(real, &rep)
}

/// Type of a point already inside the closed fundamental chamber.
pub fn chamber_point_type(real: &Realization, rep: &Ray) -> Result<TypeSet> {
    let mut t = TypeSet::empty();
    for l in 1..=real.rank() {
        let d = real.simple_root(l)?.dot(rep)?;
        debug_assert!(d >= 0, "chamber_point_type expects a chamber point");
        if d > 0 {
            t.insert(l);
        }
    }
    Ok(t)
}

/// `Some(label)` when `p` is a vertex of the complex, `None` otherwise.
pub fn vertex_type(real: &Realization, p: &Ray) -> Result<Option<usize>> {
    let t = point_type(real, p)?;
    Ok(if t.len() == 1 { t.iter().next() } else { None })
}

/// Applies the reflections of `word` to `p` in order (the map a descent
/// performed on its input).
pub fn apply_word(real: &Realization, p: &Ray, word: &[usize]) -> Result<Ray> {
    let mut current = p.clone();
    for &l in word {
        current = current.reflect(real.simple_root(l)?)?;
    }
    Ok(current)
}

/// Applies the inverse of `word` (reflections in reverse order). If a
/// descent of `x` produced `(x′, word)`, this carries fundamental-chamber
/// data back to the cell containing `x`.
pub fn apply_word_inverse(real: &Realization, p: &Ray, word: &[usize]) -> Result<Ray> {
    let mut current = p.clone();
    for &l in word.iter().rev() {
        current = current.reflect(real.simple_root(l)?)?;
    }
    Ok(current)
}

/// Full orbit of `p` under the reflection group, sorted.
pub fn orbit_of(real: &Realization, p: &Ray) -> Result<Vec<Ray>> {
    let all = TypeSet::from_iter(1..=real.rank());
    stab_orbit(real, p, &all)
}

/// Orbit of the fundamental vertex with the given label, sorted.
pub fn vertex_orbit(real: &Realization, label: usize) -> Result<Vec<Ray>> {
    orbit_of(real, real.vertex(label)?)
}

/// Orbit of `p` under the parabolic subgroup generated by the simple
/// reflections with labels in `gens`, sorted.
pub fn stab_orbit(real: &Realization, p: &Ray, gens: &TypeSet) -> Result<Vec<Ray>> {
    if p.dim() != real.ambient_dim() {
        return Err(Error::DimensionMismatch(p.dim(), real.ambient_dim()));
    }
    let mut seen: BTreeSet<Ray> = BTreeSet::new();
    let mut queue: Vec<Ray> = vec![p.clone()];
    seen.insert(p.clone());
    while let Some(q) = queue.pop() {
        for l in gens.iter() {
            let image = q.reflect(real.simple_root(l)?)?;
            if seen.insert(image.clone()) {
                queue.push(image);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Descends a flag (a sequence of pairwise distinct rays refining a chain of
/// links) to its normal form: the first member becomes dominant, each later
/// member becomes dominant for the parabolic fixing all earlier members.
/// Returns the descended flag and the combined word applied to every member.
pub fn flag_descend(real: &Realization, flag: &[Ray]) -> Result<(Vec<Ray>, Vec<usize>)> {
    let mut members: Vec<Ray> = flag.to_vec();
    let mut word: Vec<usize> = Vec::new();
    let mut active = TypeSet::from_iter(1..=real.rank());
    for k in 0..members.len() {
        let (rep, stage_word) = descend_parabolic(real, &members[k], &active)?;
        for member in members.iter_mut().skip(k + 1) {
            *member = apply_word(real, member, &stage_word)?;
        }
        for (j, member) in members.iter().enumerate().take(k) {
            debug_assert_eq!(
                apply_word(real, member, &stage_word)?,
                *member,
                "stage {k} moved earlier flag member {j}"
            );
        }
        word.extend_from_slice(&stage_word);
        let mut next_active = TypeSet::empty();
        for l in active.iter() {
            if real.simple_root(l)?.dot(&rep)? == 0 {
                next_active.insert(l);
            }
        }
        members[k] = rep;
        active = next_active;
    }
    Ok((members, word))
}

/// Labels consumed by a flag: for each member in the descended flag, the
/// labels (among those vanishing on all earlier members) it pairs positively
/// with. For a one-point flag this is the point type; appending a direction
/// to a flag adds exactly the labels naming that direction in the iterated
/// link.
pub fn flag_labels(real: &Realization, flag: &[Ray]) -> Result<TypeSet> {
    let (members, _) = flag_descend(real, flag)?;
    let mut active = TypeSet::from_iter(1..=real.rank());
    let mut used = TypeSet::empty();
    for member in &members {
        let mut next_active = TypeSet::empty();
        for l in active.iter() {
            let d = real.simple_root(l)?.dot(member)?;
            debug_assert!(d >= 0, "descended flag member pairs negatively");
            if d > 0 {
                used.insert(l);
            } else {
                next_active.insert(l);
            }
        }
        active = next_active;
    }
    Ok(used)
}

/// Whether all the given points lie in one closed chamber — equivalently,
/// whether the cells containing them are faces of a common cell (for
/// vertices: whether they are pairwise adjacent or equal).
///
/// Decided exactly by stagewise flag descent: each stage moves a point by
/// the stabilizer of the earlier points' face, which acts transitively on
/// the chambers containing that face, so the points share a chamber exactly
/// when every member of the descended flag lands in the fundamental one.
pub fn common_chamber(real: &Realization, points: &[Ray]) -> Result<bool> {
    let (members, _) = flag_descend(real, points)?;
    for member in &members {
        for l in 1..=real.rank() {
            if real.simple_root(l)?.dot(member)? < 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether the given directions at `base` lie in one closed chamber of the
/// link complex of `base` — for link vertices: whether they are pairwise
/// adjacent there.
///
/// Same stagewise-descent argument as [`common_chamber`], run inside the
/// link: the walls of the link are the ambient walls through `base`, so the
/// directions are cofacial exactly when, after flag descent of
/// `(base, dirs...)`, every descended direction is nonnegative against every
/// fundamental wall through the descended base point.
pub fn link_common_chamber(real: &Realization, base: &Ray, dirs: &[Ray]) -> Result<bool> {
    for d in dirs {
        if base.dot(d)? != 0 {
            return Err(Error::InvalidArgument(
                "link points must be orthogonal to the base point".into(),
            ));
        }
    }
    let mut flag = Vec::with_capacity(dirs.len() + 1);
    flag.push(base.clone());
    flag.extend_from_slice(dirs);
    let (members, _) = flag_descend(real, &flag)?;
    let mut active = TypeSet::empty();
    for l in 1..=real.rank() {
        if real.simple_root(l)?.dot(&members[0])? == 0 {
            active.insert(l);
        }
    }
    for member in &members[1..] {
        for l in active.iter() {
            if real.simple_root(l)?.dot(member)? < 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The opposition involution on vertex labels: entry `i − 1` holds the type
/// of the antipode of the fundamental vertex `v_i`.
pub fn opposition_involution(real: &Realization) -> Result<Vec<usize>> {
    let mut map = Vec::with_capacity(real.rank());
    for i in 1..=real.rank() {
        let anti = real.vertex(i)?.antipode();
        match vertex_type(real, &anti)? {
            Some(j) => map.push(j),
            None => {
                return Err(Error::InvalidArgument(format!(
                    "antipode of vertex {i} is not a vertex"
                )))
            }
        }
    }
    Ok(map)
}

/// Exact rank of a set of integer vectors (Gaussian elimination over the
/// rationals).
pub fn rank_of_vectors(vectors: &[&Ray]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let cols = vectors[0].dim();
    let mut rows: Vec<Vec<Ratio<i128>>> = vectors
        .iter()
        .map(|v| {
            v.coords()
                .iter()
                .map(|&c| Ratio::from_integer(i128::from(c)))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_value = rows[rank][col];
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col] / pivot_value;
                for c in col..cols {
                    let delta = factor * rows[rank][c];
                    rows[r][c] -= delta;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// A random nonzero integer point in the realization's subspace: a small
/// random combination of the subspace basis vectors.
pub fn random_subspace_point<R: Rng>(real: &Realization, rng: &mut R) -> Ray {
    loop {
        let mut coords = vec![0i128; real.ambient_dim()];
        for basis_vector in real.subspace_basis() {
            let weight = i128::from(rng.gen_range(-9i32..=9));
            for (slot, &b) in coords.iter_mut().zip(basis_vector.iter()) {
                *slot += weight * i128::from(b);
            }
        }
        if coords.iter().any(|&c| c != 0) {
            return Ray::from_i128(coords).expect("nonzero vector with small coordinates");
        }
    }
}

// ---------------------------------------------------------------------------
// Group orders
// ---------------------------------------------------------------------------

/// Which fundamental vertex has the smallest orbit, per family — used to
/// anchor the orbit–stabilizer recursion for group orders.
fn best_pivot(family: Family, rank: usize) -> usize {
    match family {
        Family::A | Family::D => rank,
        Family::E6 => 2,
        Family::E7 => 7,
        Family::E8 => 8,
    }
}

fn order_memo() -> &'static Mutex<HashMap<(Family, usize), u128>> {
    static MEMO: OnceLock<Mutex<HashMap<(Family, usize), u128>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn weyl_order_connected(family: Family, rank: usize) -> Result<u128> {
    if let Some(&cached) = order_memo().lock().unwrap().get(&(family, rank)) {
        return Ok(cached);
    }
    let real = Realization::new(family, rank)?;
    let pivot = best_pivot(family, rank);
    let orbit_size = vertex_orbit(&real, pivot)?.len() as u128;
    let residue = real.diagram().delete(&TypeSet::singleton(pivot));
    let order = orbit_size
        .checked_mul(weyl_order(&residue)?)
        .ok_or(Error::Overflow)?;
    order_memo().lock().unwrap().insert((family, rank), order);
    Ok(order)
}

/// Order of the reflection group of a (possibly disconnected, possibly
/// empty) diagram, computed by orbit–stabilizer recursion: the orbit of a
/// well-chosen fundamental vertex is enumerated directly and the stabilizer
/// is the group of the diagram with that node deleted.
pub fn weyl_order(diagram: &Diagram) -> Result<u128> {
    let mut order: u128 = 1;
    for component in diagram.components() {
        let (family, rank) = component.classify_component()?;
        order = order
            .checked_mul(weyl_order_connected(family, rank)?)
            .ok_or(Error::Overflow)?;
    }
    Ok(order)
}

/// Order of the full reflection group of the realization.
pub fn group_order(real: &Realization) -> Result<u128> {
    weyl_order(real.diagram())
}

/// Order of the stabilizer of the fundamental face with the given type set:
/// the parabolic subgroup generated by the reflections whose walls contain
/// the face (labels outside the type set).
pub fn face_stabilizer_order(real: &Realization, face: &TypeSet) -> Result<u128> {
    weyl_order(&real.diagram().delete(face))
}

/// Number of faces in the orbit of the fundamental face with this type set.
pub fn face_orbit_size(real: &Realization, face: &TypeSet) -> Result<u128> {
    let total = group_order(real)?;
    let stab = face_stabilizer_order(real, face)?;
    debug_assert_eq!(total % stab, 0);
    Ok(total / stab)
}
