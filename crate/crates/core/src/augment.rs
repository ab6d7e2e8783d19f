//! The ideal right-angled polyhedron `P` of a fully augmented link.
//!
//! Encircling every twist region of a diagram with a crossing circle and
//! removing full twists gives a fully augmented link whose complement is two
//! copies of an IRP `P` glued along their boundaries (Agol–Thurston). Its
//! 1-skeleton is read off the diagram graph `G` directly: one red vertex per
//! twist (the crossing circle), one black vertex per edge of `G`, four spokes
//! from each red vertex to its edge-blacks, and one chord per axis corner.
//! The chord, the two spokes of the corner and the red vertex bound a dark
//! triangle; the remaining (white) faces correspond to the faces of `G`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linkdiag::TwistReducedDiagram;
use crate::planar::CombinatorialMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentedPolyhedron {
    map: CombinatorialMap,
    red: Vec<usize>,
    black: Vec<usize>,
    dark_faces: Vec<usize>,
    white_census: BTreeMap<usize, usize>,
    twists: usize,
}

/// Serialized form: the map of `P` plus its red vertices, dark faces and
/// white census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AugmentedFile {
    pub darts: usize,
    pub alpha: Vec<usize>,
    pub sigma: Vec<usize>,
    pub red: Vec<usize>,
    pub dark_faces: Vec<usize>,
    pub white_census: BTreeMap<usize, usize>,
}

fn inconsistent(msg: impl Into<String>) -> Error {
    Error::ConstructionInconsistency(msg.into())
}

/// Assemble `P` from a twist-reduced diagram and check its invariants.
///
/// Dart layout for a diagram with `t` vertices (`4t` darts): dart `x` of `G`
/// gives the red spoke end `2x` and black spoke end `2x + 1`; the `k`-th
/// axis corner gives the chord ends `8t + 2k` (at the black vertex of the
/// corner's first dart) and `8t + 2k + 1`.
pub fn augment(d: &TwistReducedDiagram) -> Result<AugmentedPolyhedron> {
    let g = d.map();
    let t = g.vertex_count();
    if t < 2 {
        return Err(Error::invalid("augmentation needs at least two twist regions"));
    }
    let nd = g.dart_count();
    debug_assert_eq!(nd, 4 * t);

    // corner_id[x] = index of the axis corner (x, σx), if it is one.
    let mut corner_id = vec![usize::MAX; nd];
    let mut k = 0;
    for v in 0..t {
        for x in d.axis_corners(v) {
            corner_id[x] = k;
            k += 1;
        }
    }
    let chord_base = 2 * nd;
    let total = chord_base + 2 * k;
    let c1 = |x: usize| (corner_id[x] != usize::MAX).then(|| chord_base + 2 * corner_id[x]);
    let c2 = |x: usize| (corner_id[x] != usize::MAX).then(|| chord_base + 2 * corner_id[x] + 1);

    let mut alpha = vec![0; total];
    let mut sigma = vec![usize::MAX; total];
    for x in 0..nd {
        alpha[2 * x] = 2 * x + 1;
        alpha[2 * x + 1] = 2 * x;
        sigma[2 * x] = 2 * g.sigma(x);
    }
    for j in 0..k {
        alpha[chord_base + 2 * j] = chord_base + 2 * j + 1;
        alpha[chord_base + 2 * j + 1] = chord_base + 2 * j;
    }
    // Black vertex of edge {x, αx}, counterclockwise with x pointing west.
    for x in 0..nd {
        let y = g.alpha(x);
        if x > y {
            continue;
        }
        let ring: Vec<usize> = [Some(2 * y + 1), c2(g.sigma_inv(y)), c1(x), Some(2 * x + 1), c2(g.sigma_inv(x)), c1(y)]
            .into_iter()
            .flatten()
            .collect();
        if ring.len() != 4 {
            return Err(inconsistent(format!(
                "edge {{{x}, {y}}} touches {} axis corners instead of 2",
                ring.len() - 2
            )));
        }
        for i in 0..4 {
            sigma[ring[i]] = ring[(i + 1) % 4];
        }
    }
    if sigma.contains(&usize::MAX) {
        return Err(inconsistent("a chord end was not attached to a black vertex"));
    }

    let map = CombinatorialMap::from_permutations(alpha, sigma)
        .map_err(|e| inconsistent(format!("assembled map is invalid: {e}")))?;

    let red: Vec<usize> = (0..t).map(|v| map.vertex_of(2 * g.vertex_darts(v)[0])).collect();
    let mut black: Vec<usize> = (0..nd).map(|x| map.vertex_of(2 * x + 1)).collect();
    black.sort_unstable();
    black.dedup();

    let mut dark_faces = Vec::with_capacity(k);
    for x in (0..nd).filter(|&x| corner_id[x] != usize::MAX) {
        let f = map.face_of(2 * x + 1);
        if map.face_size(f) != 3 {
            return Err(inconsistent(format!(
                "axis corner at dart {x} bounds a {}-gon, not a triangle",
                map.face_size(f)
            )));
        }
        let reds = map.face_darts(f).iter().filter(|&&e| e < chord_base && e % 2 == 0).count();
        if reds != 1 {
            return Err(inconsistent(format!("dark face {f} meets {reds} red vertices")));
        }
        dark_faces.push(f);
    }
    dark_faces.sort_unstable();
    dark_faces.dedup();

    let mut white_census = BTreeMap::new();
    for f in 0..map.face_count() {
        if dark_faces.binary_search(&f).is_err() {
            *white_census.entry(map.face_size(f)).or_insert(0) += 1;
        }
    }

    let p = AugmentedPolyhedron { map, red, black, dark_faces, white_census, twists: t };
    p.check_invariants()?;
    Ok(p)
}

impl AugmentedPolyhedron {
    fn check_invariants(&self) -> Result<()> {
        let t = self.twists;
        let c = self.map.census();
        if (c.v, c.e, c.f) != (3 * t, 6 * t, 3 * t + 2) {
            return Err(inconsistent(format!(
                "expected V, E, F = {}, {}, {}; got {}, {}, {}",
                3 * t,
                6 * t,
                3 * t + 2,
                c.v,
                c.e,
                c.f
            )));
        }
        if !c.is_regular(4) {
            return Err(inconsistent("P is not 4-regular"));
        }
        if self.black.len() != 2 * t {
            return Err(inconsistent(format!("expected {} black vertices, got {}", 2 * t, self.black.len())));
        }
        if self.dark_faces.len() != 2 * t {
            return Err(inconsistent(format!("expected {} dark triangles, got {}", 2 * t, self.dark_faces.len())));
        }
        if c.min_face() < 3 {
            return Err(inconsistent(format!("P has a face with {} sides", c.min_face())));
        }
        let sum: usize = self.white_census.iter().map(|(&n, &f)| n * f).sum();
        if sum != 6 * t {
            return Err(Error::CensusMismatch { expected: 6 * t, found: sum });
        }
        Ok(())
    }

    pub fn map(&self) -> &CombinatorialMap {
        &self.map
    }

    /// Red vertices (crossing circles), indexed by diagram vertex.
    pub fn red_vertices(&self) -> &[usize] {
        &self.red
    }

    /// Black vertices (diagram edges), sorted.
    pub fn black_vertices(&self) -> &[usize] {
        &self.black
    }

    /// The `2t` dark triangles, sorted.
    pub fn dark_faces(&self) -> &[usize] {
        &self.dark_faces
    }

    pub fn twist_count(&self) -> usize {
        self.twists
    }

    /// White face census `n → f_n`.
    pub fn white_face_census(&self) -> &BTreeMap<usize, usize> {
        &self.white_census
    }

    /// `Δ`: white triangles, so that `P` has `Δ + 2t` triangles in all.
    pub fn white_triangles(&self) -> usize {
        self.white_census.get(&3).copied().unwrap_or(0)
    }

    pub fn to_file(&self) -> AugmentedFile {
        let m = self.map.to_file();
        let mut red = self.red.clone();
        red.sort_unstable();
        AugmentedFile {
            darts: m.darts,
            alpha: m.alpha,
            sigma: m.sigma,
            red,
            dark_faces: self.dark_faces.clone(),
            white_census: self.white_census.clone(),
        }
    }
}

/// Free-function form of [`AugmentedPolyhedron::white_face_census`].
pub fn white_face_census(p: &AugmentedPolyhedron) -> BTreeMap<usize, usize> {
    p.white_census.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkdiag::two_bridge_diagram;

    #[test]
    fn b55_17() {
        let p = augment(&two_bridge_diagram(55, 17).unwrap()).unwrap();
        let c = p.map().census();
        assert_eq!((c.v, c.e, c.f), (9, 18, 11));
        assert_eq!(p.dark_faces().len(), 6);
        assert_eq!(p.white_face_census(), &BTreeMap::from([(3, 2), (4, 3)]));
    }

    #[test]
    fn b5_2() {
        let p = augment(&two_bridge_diagram(5, 2).unwrap()).unwrap();
        let c = p.map().census();
        assert_eq!((c.v, c.e, c.f), (6, 12, 8));
        let sum: usize = p.white_face_census().iter().map(|(n, f)| n * f).sum();
        assert_eq!(sum, 12);
        assert_eq!(p.white_face_census().values().sum::<usize>(), 4);
    }

    #[test]
    fn red_vertices_touch_two_dark_triangles() {
        let p = augment(&two_bridge_diagram(89, 34).unwrap()).unwrap();
        let m = p.map();
        for &r in p.red_vertices() {
            let darts = m.vertex_darts(r);
            let dark = darts.iter().filter(|&&d| p.dark_faces().contains(&m.face_of(d))).count();
            assert_eq!(dark, 2);
        }
    }
}
