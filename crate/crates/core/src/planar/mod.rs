//! Dart-based combinatorial maps of planar (multi)graphs.
//!
//! Darts are `0..2E`. `alpha` pairs the two darts of an edge, `sigma` rotates
//! counterclockwise around a vertex, and faces are the orbits of
//! `phi(d) = sigma(alpha(d))`. Vertex and face ids are orbit indices, with
//! orbits ordered by their minimal dart.

mod builders;
mod ops;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use builders::{
    antiprism, bipyramid, cube, octahedron, prism, pyramid, tetrahedron, twisted_antiprism, two_apex_pyramid, Family,
};
pub use ops::{is_three_connected, maps_isomorphic};

/// Vertex/edge/face counts and degree and face-size histograms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeletonCensus {
    pub v: usize,
    pub e: usize,
    pub f: usize,
    /// degree → number of vertices of that degree
    pub degree_counts: BTreeMap<usize, usize>,
    /// size → number of faces of that size
    pub face_counts: BTreeMap<usize, usize>,
}

impl SkeletonCensus {
    pub fn degree_count(&self, n: usize) -> usize {
        self.degree_counts.get(&n).copied().unwrap_or(0)
    }

    pub fn face_count(&self, n: usize) -> usize {
        self.face_counts.get(&n).copied().unwrap_or(0)
    }

    pub fn euler(&self) -> i64 {
        self.v as i64 - self.e as i64 + self.f as i64
    }

    pub fn min_degree(&self) -> usize {
        self.degree_counts.keys().next().copied().unwrap_or(0)
    }

    pub fn min_face(&self) -> usize {
        self.face_counts.keys().next().copied().unwrap_or(0)
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.degree_counts.len() == 1 && self.degree_counts.contains_key(&k)
    }
}

/// A validated genus-0 combinatorial map. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialMap {
    alpha: Vec<usize>,
    sigma: Vec<usize>,
    sigma_inv: Vec<usize>,
    vertex_of: Vec<usize>,
    face_of: Vec<usize>,
    vertices: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
}

/// Serialized form: `{"darts": N, "alpha": [...], "sigma": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    pub darts: usize,
    pub alpha: Vec<usize>,
    pub sigma: Vec<usize>,
}

fn check_permutation(p: &[usize], which: &'static str) -> Result<()> {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return Err(Error::NotPermutation { which, len: p.len() });
        }
        seen[x] = true;
    }
    Ok(())
}

/// Orbits of `p`, each starting at its minimal element, ordered by that
/// element. Returns the orbits and the orbit index of every point.
fn orbits(p: &[usize]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut id = vec![usize::MAX; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if id[start] != usize::MAX {
            continue;
        }
        let k = out.len();
        let mut orbit = Vec::new();
        let mut d = start;
        loop {
            id[d] = k;
            orbit.push(d);
            d = p[d];
            if d == start {
                break;
            }
        }
        out.push(orbit);
    }
    (out, id)
}

impl CombinatorialMap {
    /// Validate `(alpha, sigma)` and build the map.
    pub fn from_permutations(alpha: Vec<usize>, sigma: Vec<usize>) -> Result<Self> {
        if alpha.len() != sigma.len() {
            return Err(Error::LengthMismatch { alpha: alpha.len(), sigma: sigma.len() });
        }
        let n = alpha.len();
        if n == 0 {
            return Err(Error::EmptyMap);
        }
        check_permutation(&alpha, "alpha")?;
        check_permutation(&sigma, "sigma")?;
        for d in 0..n {
            if alpha[d] == d {
                return Err(Error::FixedDart(d));
            }
            if alpha[alpha[d]] != d {
                return Err(Error::NotInvolution(d));
            }
        }

        let mut reached = vec![false; n];
        let mut stack = vec![0];
        reached[0] = true;
        let mut count = 1;
        while let Some(d) = stack.pop() {
            for nb in [alpha[d], sigma[d]] {
                if !reached[nb] {
                    reached[nb] = true;
                    count += 1;
                    stack.push(nb);
                }
            }
        }
        if count != n {
            return Err(Error::Disconnected { reached: count, total: n });
        }

        let mut sigma_inv = vec![0; n];
        for (d, &s) in sigma.iter().enumerate() {
            sigma_inv[s] = d;
        }
        let phi: Vec<usize> = (0..n).map(|d| sigma[alpha[d]]).collect();
        let (vertices, vertex_of) = orbits(&sigma);
        let (faces, face_of) = orbits(&phi);
        let euler = vertices.len() as i64 - (n / 2) as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(Error::Genus { euler });
        }
        Ok(Self { alpha, sigma, sigma_inv, vertex_of, face_of, vertices, faces })
    }

    pub fn from_file(file: &MapFile) -> Result<Self> {
        if file.alpha.len() != file.darts {
            return Err(Error::LengthMismatch { alpha: file.alpha.len(), sigma: file.darts });
        }
        Self::from_permutations(file.alpha.clone(), file.sigma.clone())
    }

    pub fn to_file(&self) -> MapFile {
        MapFile { darts: self.dart_count(), alpha: self.alpha.clone(), sigma: self.sigma.clone() }
    }

    pub fn dart_count(&self) -> usize {
        self.alpha.len()
    }

    pub fn edge_count(&self) -> usize {
        self.alpha.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn alpha(&self, d: usize) -> usize {
        self.alpha[d]
    }

    pub fn sigma(&self, d: usize) -> usize {
        self.sigma[d]
    }

    pub fn sigma_inv(&self, d: usize) -> usize {
        self.sigma_inv[d]
    }

    pub fn phi(&self, d: usize) -> usize {
        self.sigma[self.alpha[d]]
    }

    pub fn alpha_perm(&self) -> &[usize] {
        &self.alpha
    }

    pub fn sigma_perm(&self) -> &[usize] {
        &self.sigma
    }

    pub fn vertex_of(&self, d: usize) -> usize {
        self.vertex_of[d]
    }

    pub fn face_of(&self, d: usize) -> usize {
        self.face_of[d]
    }

    /// Darts around vertex `v` in counterclockwise order, starting at its
    /// minimal dart.
    pub fn vertex_darts(&self, v: usize) -> &[usize] {
        &self.vertices[v]
    }

    /// Darts along face `f` in `phi` order, starting at its minimal dart.
    pub fn face_darts(&self, f: usize) -> &[usize] {
        &self.faces[f]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.vertices[v].len()
    }

    pub fn face_size(&self, f: usize) -> usize {
        self.faces[f].len()
    }

    pub fn census(&self) -> SkeletonCensus {
        let mut degree_counts = BTreeMap::new();
        for orbit in &self.vertices {
            *degree_counts.entry(orbit.len()).or_insert(0) += 1;
        }
        let mut face_counts = BTreeMap::new();
        for orbit in &self.faces {
            *face_counts.entry(orbit.len()).or_insert(0) += 1;
        }
        SkeletonCensus {
            v: self.vertex_count(),
            e: self.edge_count(),
            f: self.face_count(),
            degree_counts,
            face_counts,
        }
    }

    /// Conjugate by a dart relabelling: dart `d` becomes `perm[d]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.dart_count();
        if perm.len() != n {
            return Err(Error::invalid("relabelling has the wrong length"));
        }
        check_permutation(perm, "relabelling")?;
        let mut alpha = vec![0; n];
        let mut sigma = vec![0; n];
        for d in 0..n {
            alpha[perm[d]] = perm[self.alpha[d]];
            sigma[perm[d]] = perm[self.sigma[d]];
        }
        Self::from_permutations(alpha, sigma)
    }

    /// Build a map of a simple plane graph from its face boundaries.
    ///
    /// Each face is a cycle of vertex ids. The first face is the outer face,
    /// listed counterclockwise as drawn; the remaining faces may be listed in
    /// either direction and are oriented to agree with it. Darts are numbered
    /// in face order, so dart 0 lies on the outer face.
    pub fn from_faces(vertex_count: usize, faces: &[Vec<usize>]) -> Result<Self> {
        if faces.is_empty() {
            return Err(Error::EmptyMap);
        }
        for f in faces {
            if f.len() < 2 {
                return Err(Error::invalid("faces need at least two vertices"));
            }
            if f.iter().any(|&v| v >= vertex_count) {
                return Err(Error::invalid("face refers to an unknown vertex"));
            }
        }

        // Orient faces so every edge is traversed once in each direction.
        let mut oriented: Vec<Option<Vec<usize>>> = vec![None; faces.len()];
        let mut by_edge: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (i, f) in faces.iter().enumerate() {
            for k in 0..f.len() {
                let (a, b) = (f[k], f[(k + 1) % f.len()]);
                by_edge.entry((a.min(b), a.max(b))).or_default().push(i);
            }
        }
        let has_directed =
            |f: &[usize], a: usize, b: usize| (0..f.len()).any(|k| f[k] == a && f[(k + 1) % f.len()] == b);
        oriented[0] = Some(faces[0].clone());
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let fi = oriented[i].clone().expect("queued faces are oriented");
            for k in 0..fi.len() {
                let (a, b) = (fi[k], fi[(k + 1) % fi.len()]);
                for &j in &by_edge[&(a.min(b), a.max(b))] {
                    if j == i || oriented[j].is_some() {
                        continue;
                    }
                    let mut fj = faces[j].clone();
                    if has_directed(&fj, a, b) {
                        fj.reverse();
                    }
                    oriented[j] = Some(fj);
                    queue.push_back(j);
                }
            }
        }
        let oriented: Vec<Vec<usize>> = oriented
            .into_iter()
            .map(|f| f.ok_or_else(|| Error::invalid("face list is not connected")))
            .collect::<Result<_>>()?;

        let mut dart_id: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut next_in_face = Vec::new();
        for f in &oriented {
            let base = next_in_face.len();
            for k in 0..f.len() {
                let key = (f[k], f[(k + 1) % f.len()]);
                if dart_id.insert(key, base + k).is_some() {
                    return Err(Error::invalid(format!(
                        "directed edge {}->{} appears twice; faces are inconsistently oriented",
                        key.0, key.1
                    )));
                }
                next_in_face.push(base + (k + 1) % f.len());
            }
        }
        let n = next_in_face.len();
        let mut alpha = vec![0; n];
        for (&(a, b), &d) in &dart_id {
            alpha[d] =
                *dart_id.get(&(b, a)).ok_or_else(|| Error::invalid(format!("edge {a}-{b} lies on only one face")))?;
        }
        // phi = sigma ∘ alpha, so sigma = phi ∘ alpha.
        let sigma = (0..n).map(|d| next_in_face[alpha[d]]).collect();
        Self::from_permutations(alpha, sigma)
    }

    /// The medial map: one 4-valent vertex per edge, one edge per corner.
    ///
    /// Dart `x` of `self` contributes medial darts `2x` and `2x+1`, the ends
    /// at the midpoint of `x`'s edge of the medial edges for the corners
    /// clockwise and counterclockwise of `x`.
    pub fn medial(&self) -> Self {
        let n = self.dart_count();
        let mut alpha = vec![0; 2 * n];
        let mut sigma = vec![0; 2 * n];
        for x in 0..n {
            alpha[2 * x] = 2 * self.sigma_inv[x] + 1;
            alpha[2 * x + 1] = 2 * self.sigma[x];
            sigma[2 * x + 1] = 2 * x;
            sigma[2 * x] = 2 * self.alpha[x] + 1;
        }
        Self::from_permutations(alpha, sigma).expect("medial of a valid map is valid")
    }

    /// The dual map on the same darts: `sigma` becomes `phi`.
    pub fn dual(&self) -> Self {
        let sigma = (0..self.dart_count()).map(|d| self.phi(d)).collect();
        Self::from_permutations(self.alpha.clone(), sigma).expect("dual of a valid map is valid")
    }

    /// The mirror image: `sigma` reversed.
    pub fn mirror(&self) -> Self {
        Self::from_permutations(self.alpha.clone(), self.sigma_inv.clone()).expect("mirror of a valid map is valid")
    }
}

/// Validate a map given as raw permutations and return its census.
pub fn validate_map(alpha: &[usize], sigma: &[usize]) -> Result<SkeletonCensus> {
    Ok(CombinatorialMap::from_permutations(alpha.to_vec(), sigma.to_vec())?.census())
}
