use std::collections::BTreeSet;

use super::CombinatorialMap;
use crate::error::{Error, Result};

/// True iff deleting any two vertices leaves the underlying graph connected.
///
/// Brute force over all vertex pairs; fine for maps of a few hundred darts.
pub fn is_three_connected(m: &CombinatorialMap) -> Result<bool> {
    let n = m.vertex_count();
    if n < 4 {
        return Err(Error::invalid(format!("3-connectivity needs V >= 4, got {n}")));
    }
    let adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| m.vertex_darts(v).iter().map(|&d| m.vertex_of(m.alpha(d))).filter(|&w| w != v).collect())
        .collect();
    let mut seen = vec![false; n];
    let mut stack = Vec::with_capacity(n);
    for a in 0..n {
        for b in a + 1..n {
            seen.iter_mut().for_each(|s| *s = false);
            seen[a] = true;
            seen[b] = true;
            let start = (0..n).find(|&v| !seen[v]).expect("V >= 4 leaves vertices");
            seen[start] = true;
            stack.push(start);
            let mut count = 1;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
            if count != n - 2 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Try to extend `0 ↦ target` to an isomorphism carrying `alpha_a` to
/// `alpha_b` and `sigma_a` to `sigma_b` (or `sigma_b⁻¹` when `mirrored`).
fn extends(a: &CombinatorialMap, b: &CombinatorialMap, target: usize, mirrored: bool) -> bool {
    let n = a.dart_count();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    image[0] = target;
    used[target] = true;
    let mut stack = vec![0];
    while let Some(d) = stack.pop() {
        let fd = image[d];
        let pairs = [(a.alpha(d), b.alpha(fd)), (a.sigma(d), if mirrored { b.sigma_inv(fd) } else { b.sigma(fd) })];
        for (x, y) in pairs {
            if image[x] == usize::MAX {
                if used[y] {
                    return false;
                }
                image[x] = y;
                used[y] = true;
                stack.push(x);
            } else if image[x] != y {
                return false;
            }
        }
    }
    // Connectivity makes the propagated map total; it is then a bijection
    // commuting with both generators.
    true
}

/// Decide whether two maps are isomorphic, allowing reflection.
pub fn maps_isomorphic(a: &CombinatorialMap, b: &CombinatorialMap) -> bool {
    if a.dart_count() != b.dart_count() {
        return false;
    }
    let (ca, cb) = (a.census(), b.census());
    if ca != cb {
        return false;
    }
    let anchor_degree = a.degree(a.vertex_of(0));
    let anchor_face = a.face_size(a.face_of(0));
    (0..b.dart_count()).any(|t| {
        if b.degree(b.vertex_of(t)) != anchor_degree {
            return false;
        }
        let direct = b.face_size(b.face_of(t)) == anchor_face && extends(a, b, t, false);
        // Under reflection the face through a dart is traced backwards and
        // lands on the face through alpha(t).
        direct || extends(a, b, t, true)
    })
}

#[cfg(test)]
mod tests {
    use super::super::*;

    #[test]
    fn three_connectivity() {
        assert!(is_three_connected(&tetrahedron()).unwrap());
        assert!(is_three_connected(&cube()).unwrap());
        // Quadrilateral with one diagonal: the diagonal's ends form a 2-cut.
        let book = CombinatorialMap::from_faces(4, &[vec![0, 1, 2, 3], vec![0, 1, 2], vec![0, 2, 3]]).unwrap();
        assert!(!is_three_connected(&book).unwrap());
        let tri = CombinatorialMap::from_faces(3, &[vec![0, 1, 2], vec![2, 1, 0]]).unwrap();
        assert!(is_three_connected(&tri).is_err());
    }

    #[test]
    fn isomorphism_basics() {
        let t = tetrahedron();
        assert!(maps_isomorphic(&t, &t));
        assert!(!maps_isomorphic(&t, &cube()));
        assert!(maps_isomorphic(&t, &t.dual()));
        assert!(maps_isomorphic(&cube().dual(), &octahedron()));
        assert!(maps_isomorphic(&t, &t.mirror()));
    }

    #[test]
    fn antiprism3_is_octahedron() {
        assert!(maps_isomorphic(&antiprism(3).unwrap(), &octahedron()));
    }

    #[test]
    fn w4_is_triangular_prism() {
        assert!(maps_isomorphic(&two_apex_pyramid(4).unwrap(), &prism(3).unwrap()));
    }

    #[test]
    fn dual_of_prism_is_bipyramid() {
        for n in 3..8 {
            assert!(maps_isomorphic(&prism(n).unwrap().dual(), &bipyramid(n).unwrap()));
            assert!(!maps_isomorphic(&prism(n).unwrap(), &antiprism(n).unwrap().dual()));
        }
    }
}
