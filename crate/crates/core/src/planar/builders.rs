//! Face-list constructions of the polyhedral families.

use std::fmt;
use std::str::FromStr;

use super::CombinatorialMap;
use crate::error::{Error, Result};

fn need(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min {
        Err(Error::invalid(format!("{what} needs n >= {min}, got {n}")))
    } else {
        Ok(())
    }
}

fn build(vertex_count: usize, faces: Vec<Vec<usize>>) -> CombinatorialMap {
    CombinatorialMap::from_faces(vertex_count, &faces).expect("family face lists are consistent")
}

/// Pyramid over an `n`-gon. Base `0..n`, apex `n`; the base is the outer face.
pub fn pyramid(n: usize) -> Result<CombinatorialMap> {
    need(n, 3, "pyramid")?;
    let mut faces = vec![(0..n).collect::<Vec<_>>()];
    for i in 0..n {
        faces.push(vec![n, i, (i + 1) % n]);
    }
    Ok(build(n + 1, faces))
}

/// Bipyramid over an `n`-gon. Equator `0..n`, apexes `n` (inside the
/// equator) and `n+1` (outside).
pub fn bipyramid(n: usize) -> Result<CombinatorialMap> {
    need(n, 3, "bipyramid")?;
    let (a, b) = (n, n + 1);
    let mut faces = Vec::new();
    for i in 0..n {
        faces.push(vec![b, i, (i + 1) % n]);
    }
    for i in 0..n {
        faces.push(vec![a, i, (i + 1) % n]);
    }
    Ok(build(n + 2, faces))
}

/// Prism over an `n`-gon. Outer ring `0..n`, inner ring `n..2n`.
pub fn prism(n: usize) -> Result<CombinatorialMap> {
    need(n, 3, "prism")?;
    let mut faces = vec![(0..n).collect::<Vec<_>>(), (n..2 * n).collect()];
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![i, j, n + j, n + i]);
    }
    Ok(build(2 * n, faces))
}

/// Antiprism over an `n`-gon. Outer ring `u_i = i`, inner ring `w_i = n+i`
/// rotated by `π/n`, so `w_i` sits between `u_i` and `u_{i+1}`.
pub fn antiprism(n: usize) -> Result<CombinatorialMap> {
    need(n, 3, "antiprism")?;
    let mut faces = vec![(0..n).collect::<Vec<_>>(), (n..2 * n).collect()];
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![i, j, n + i]);
        faces.push(vec![n + i, j, n + j]);
    }
    Ok(build(2 * n, faces))
}

pub fn tetrahedron() -> CombinatorialMap {
    pyramid(3).expect("n = 3")
}

pub fn cube() -> CombinatorialMap {
    prism(4).expect("n = 4")
}

pub fn octahedron() -> CombinatorialMap {
    bipyramid(4).expect("n = 4")
}

/// Two-apex pyramid `W_n`: an `n`-gonal base `0..n` with adjacent apexes
/// `a = n` over the edge `v_0 v_1` and `b = n+1` over `v_2 .. v_{n-1}`.
///
/// `E = 2n + 1`, `V_3 = n + 1`, `p_3 = n − 2`; `W_4` is the triangular prism.
pub fn two_apex_pyramid(n: usize) -> Result<CombinatorialMap> {
    need(n, 4, "two-apex pyramid")?;
    let (a, b) = (n, n + 1);
    let mut faces = vec![(0..n).collect::<Vec<_>>()];
    faces.push(vec![a, 0, 1]);
    faces.push(vec![a, 1, 2, b]);
    for i in 2..n - 1 {
        faces.push(vec![b, i, i + 1]);
    }
    faces.push(vec![b, a, 0, n - 1]);
    Ok(build(n + 2, faces))
}

/// Twisted antiprism `A(n)*`, the medial graph of `W_n`.
///
/// Vertices: an outer ring `O_0..O_{n-1}` (`0..n`), then `L = n`, `R = n+1`,
/// `C = n+2` and `S_2..S_{n-1}` (`n+3..2n+1`). The outer ring bounds an
/// antiprism-like band of triangles; the inner part is the triangle `LRC`
/// and the `(n−2)`-gon `C S_2 .. S_{n-1}`.
pub fn twisted_antiprism(n: usize) -> Result<CombinatorialMap> {
    need(n, 4, "twisted antiprism")?;
    let o = |i: usize| i;
    let (l, r, c) = (n, n + 1, n + 2);
    let s = |i: usize| n + 1 + i;
    let mut faces = vec![(0..n).collect::<Vec<_>>()];
    faces.push(vec![o(n - 1), o(0), l]);
    faces.push(vec![o(0), o(1), r]);
    for i in 2..n {
        faces.push(vec![o(i - 1), o(i), s(i)]);
    }
    faces.push(vec![l, o(0), r]);
    faces.push(vec![r, o(1), s(2), c]);
    for i in 2..n - 1 {
        faces.push(vec![s(i), o(i), s(i + 1)]);
    }
    faces.push(vec![c, l, o(n - 1), s(n - 1)]);
    faces.push(vec![l, r, c]);
    let mut inner = vec![c];
    inner.extend((2..n).map(s));
    faces.push(inner);
    Ok(build(2 * n + 1, faces))
}

/// The named families, for lookup by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Tetrahedron,
    Cube,
    Octahedron,
    Pyramid,
    Bipyramid,
    Prism,
    Antiprism,
    TwoApexPyramid,
    TwistedAntiprism,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Tetrahedron,
        Family::Cube,
        Family::Octahedron,
        Family::Pyramid,
        Family::Bipyramid,
        Family::Prism,
        Family::Antiprism,
        Family::TwoApexPyramid,
        Family::TwistedAntiprism,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Tetrahedron => "tetrahedron",
            Family::Cube => "cube",
            Family::Octahedron => "octahedron",
            Family::Pyramid => "pyramid",
            Family::Bipyramid => "bipyramid",
            Family::Prism => "prism",
            Family::Antiprism => "antiprism",
            Family::TwoApexPyramid => "two-apex-pyramid",
            Family::TwistedAntiprism => "twisted-antiprism",
        }
    }

    /// Whether the family is parametrised by `n`.
    pub fn takes_n(self) -> bool {
        !matches!(self, Family::Tetrahedron | Family::Cube | Family::Octahedron)
    }

    pub fn min_n(self) -> usize {
        match self {
            Family::TwoApexPyramid | Family::TwistedAntiprism => 4,
            _ => 3,
        }
    }

    /// Build the member with parameter `n` (ignored for fixed solids).
    pub fn build(self, n: usize) -> Result<CombinatorialMap> {
        match self {
            Family::Tetrahedron => Ok(tetrahedron()),
            Family::Cube => Ok(cube()),
            Family::Octahedron => Ok(octahedron()),
            Family::Pyramid => pyramid(n),
            Family::Bipyramid => bipyramid(n),
            Family::Prism => prism(n),
            Family::Antiprism => antiprism(n),
            Family::TwoApexPyramid => two_apex_pyramid(n),
            Family::TwistedAntiprism => twisted_antiprism(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| Error::invalid(format!("unknown family '{s}'")))
    }
}
