//! Twist decompositions, continued fractions and twist-reduced diagrams.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::planar::CombinatorialMap;

/// Signed half-turn counts `n_1..n_t` of the twist regions of a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistDecomposition {
    lengths: Vec<i64>,
}

impl TwistDecomposition {
    pub fn new(lengths: Vec<i64>) -> Result<Self> {
        if lengths.is_empty() {
            return Err(Error::invalid("a diagram has at least one twist"));
        }
        if let Some(i) = lengths.iter().position(|&n| n == 0) {
            return Err(Error::invalid(format!("twist {} has length 0", i + 1)));
        }
        Ok(Self { lengths })
    }

    pub fn lengths(&self) -> &[i64] {
        &self.lengths
    }

    pub fn stats(&self) -> TwistStats {
        let mut t_counts = BTreeMap::new();
        for n in &self.lengths {
            *t_counts.entry(n.unsigned_abs()).or_insert(0) += 1;
        }
        TwistStats { t: self.lengths.len(), c: self.lengths.iter().map(|n| n.unsigned_abs()).sum(), t_counts }
    }
}

/// Twist count `t`, crossing count `c`, and the histogram `t_i` of twist
/// lengths. `g_i`, the number of twists of length at least `i`, is derived.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistStats {
    pub t: usize,
    pub c: u64,
    pub t_counts: BTreeMap<u64, usize>,
}

impl TwistStats {
    /// Build stats directly from a histogram `length → count`.
    pub fn from_counts(t_counts: BTreeMap<u64, usize>) -> Result<Self> {
        if t_counts.contains_key(&0) {
            return Err(Error::invalid("twist lengths are positive"));
        }
        let t_counts: BTreeMap<u64, usize> = t_counts.into_iter().filter(|&(_, k)| k > 0).collect();
        let t = t_counts.values().sum();
        if t == 0 {
            return Err(Error::invalid("a diagram has at least one twist"));
        }
        let c = t_counts.iter().map(|(&len, &k)| len * k as u64).sum();
        Ok(Self { t, c, t_counts })
    }

    /// `t_i`: twists of length exactly `i`.
    pub fn t_i(&self, i: u64) -> usize {
        self.t_counts.get(&i).copied().unwrap_or(0)
    }

    /// `g_i`: twists of length at least `i`.
    pub fn g_i(&self, i: u64) -> usize {
        self.t_counts.range(i..).map(|(_, &k)| k).sum()
    }

    pub fn min_length(&self) -> u64 {
        *self.t_counts.keys().next().expect("t >= 1")
    }
}

/// Continued fraction `p/q = a_1 + 1/(a_2 + 1/(… + 1/a_n))` with all
/// `a_i ≥ 1` and `a_n ≥ 2`.
pub fn continued_fraction(p: i64, q: i64) -> Result<Vec<i64>> {
    if p < 2 || q <= 0 || q >= p {
        return Err(Error::invalid(format!("need p >= 2 and 0 < q < p, got {p}/{q}")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::invalid(format!("{p} and {q} are not coprime")));
    }
    let (mut a, mut b) = (p, q);
    let mut out = Vec::new();
    while b != 0 {
        out.push(a / b);
        (a, b) = (b, a % b);
    }
    Ok(out)
}

/// Inverse of [`continued_fraction`]: the reduced fraction `(p, q)`.
pub fn fraction_from_terms(terms: &[i64]) -> Result<(i64, i64)> {
    let (&last, rest) = terms.split_last().ok_or_else(|| Error::invalid("no terms"))?;
    let (mut p, mut q) = (last, 1i64);
    for &a in rest.iter().rev() {
        (p, q) = (a * p + q, p);
    }
    Ok((p, q))
}

/// A 4-regular diagram graph with one vertex per twist region.
///
/// `axis[v]` picks the opposite corner pair of vertex `v` that the crossing
/// circle of the twist occupies: with `d` the minimal dart of `v`, axis 0 is
/// the corners `(d, σd)` and `(σ²d, σ³d)`, axis 1 the other two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistReducedDiagram {
    map: CombinatorialMap,
    axis: Vec<u8>,
    lengths: Vec<i64>,
}

/// Serialized form: a map file plus per-vertex `axis` and `lengths`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramFile {
    pub darts: usize,
    pub alpha: Vec<usize>,
    pub sigma: Vec<usize>,
    pub axis: Vec<u8>,
    pub lengths: Vec<i64>,
}

impl TwistReducedDiagram {
    pub fn new(map: CombinatorialMap, axis: Vec<u8>, lengths: Vec<i64>) -> Result<Self> {
        let v = map.vertex_count();
        if let Some(u) = (0..v).find(|&u| map.degree(u) != 4) {
            return Err(Error::invalid(format!("diagram vertex {u} has degree {}", map.degree(u))));
        }
        if axis.len() != v || lengths.len() != v {
            return Err(Error::invalid(format!(
                "axis and lengths need one entry per vertex ({v}), got {} and {}",
                axis.len(),
                lengths.len()
            )));
        }
        if axis.iter().any(|&a| a > 1) {
            return Err(Error::invalid("axis entries are 0 or 1"));
        }
        if lengths.contains(&0) {
            return Err(Error::invalid("twist lengths are nonzero"));
        }
        Ok(Self { map, axis, lengths })
    }

    pub fn from_file(f: &DiagramFile) -> Result<Self> {
        let map = CombinatorialMap::from_file(&crate::planar::MapFile {
            darts: f.darts,
            alpha: f.alpha.clone(),
            sigma: f.sigma.clone(),
        })?;
        Self::new(map, f.axis.clone(), f.lengths.clone())
    }

    pub fn to_file(&self) -> DiagramFile {
        let m = self.map.to_file();
        DiagramFile {
            darts: m.darts,
            alpha: m.alpha,
            sigma: m.sigma,
            axis: self.axis.clone(),
            lengths: self.lengths.clone(),
        }
    }

    pub fn map(&self) -> &CombinatorialMap {
        &self.map
    }

    pub fn axis(&self) -> &[u8] {
        &self.axis
    }

    pub fn lengths(&self) -> &[i64] {
        &self.lengths
    }

    pub fn twist_count(&self) -> usize {
        self.lengths.len()
    }

    pub fn decomposition(&self) -> TwistDecomposition {
        TwistDecomposition::new(self.lengths.clone()).expect("validated lengths")
    }

    /// The two axis corners of vertex `v`, each given by its first dart `x`
    /// (the corner between `x` and `σx`).
    pub fn axis_corners(&self, v: usize) -> [usize; 2] {
        let d = self.map.vertex_darts(v)[0];
        let s = |x: usize| self.map.sigma(x);
        if self.axis[v] == 0 {
            [d, s(s(d))]
        } else {
            [s(d), s(s(s(d)))]
        }
    }
}

/// `(p, q')` with `q' = min(q, p − q)`. `b(p/(p−q))` is the mirror image of
/// `b(p/q)`, so the complement volume is unchanged, and with `2q' < p` the
/// first continued-fraction term is at least 2. The last term always is.
pub fn conway_normal_form(p: i64, q: i64) -> Result<(i64, i64)> {
    continued_fraction(p, q)?;
    Ok((p, q.min(p - q)))
}

/// Twist-reduced diagram of the two-bridge link `b(p/q)` in Conway normal
/// form. The fraction is first passed through [`conway_normal_form`]; a
/// leading term 1 would merge with its neighbour and overcount twists.
///
/// Four horizontal strand positions `0..4` (top to bottom). The odd-numbered
/// twists `a_1, a_3, …` act on positions 1 and 2, the others on 0 and 1. On
/// the left, caps join positions 0–1 and 2–3; on the right, 0–1 and 2–3 for
/// an odd number of twists and 1–2 and 0–3 (nested) for an even number.
/// Each twist region becomes one vertex with darts `NW, SW, SE, NE` in
/// counterclockwise order; every axis is 0, the west and east corners, which
/// is where the crossing circle meets the twist's two strands.
pub fn two_bridge_diagram(p: i64, q: i64) -> Result<TwistReducedDiagram> {
    let (p, q) = conway_normal_form(p, q)?;
    let terms = continued_fraction(p, q)?;
    let t = terms.len();
    if t < 2 {
        return Err(Error::invalid(format!("b({p}/{q}) has a single twist region; its diagram graph is degenerate")));
    }
    const NW: usize = 0;
    const SW: usize = 1;
    const SE: usize = 2;
    const NE: usize = 3;

    // Cap nodes are degree-2 helpers with darts numbered from 4t; they are
    // smoothed away once every strand is joined.
    let mut alpha: Vec<usize> = vec![usize::MAX; 4 * t + 8];
    let mut next_helper = 4 * t;
    let mut caps: Vec<(usize, usize)> = Vec::new();
    let mut new_cap = |caps: &mut Vec<(usize, usize)>| {
        let c = (next_helper, next_helper + 1);
        next_helper += 2;
        caps.push(c);
        c
    };
    let join = |alpha: &mut Vec<usize>, a: usize, b: usize| {
        alpha[a] = b;
        alpha[b] = a;
    };

    let mut open = [0usize; 4];
    let (h0, h1) = new_cap(&mut caps);
    let (h2, h3) = new_cap(&mut caps);
    open[0] = h0;
    open[1] = h1;
    open[2] = h2;
    open[3] = h3;
    for i in 0..t {
        let top = if i % 2 == 0 { 1 } else { 0 };
        let base = 4 * i;
        join(&mut alpha, open[top], base + NW);
        join(&mut alpha, open[top + 1], base + SW);
        open[top] = base + NE;
        open[top + 1] = base + SE;
    }
    let right: [(usize, usize); 2] = if t % 2 == 1 { [(0, 1), (2, 3)] } else { [(1, 2), (0, 3)] };
    for (x, y) in right {
        let (c0, c1) = new_cap(&mut caps);
        join(&mut alpha, open[x], c0);
        join(&mut alpha, open[y], c1);
    }
    for (c0, c1) in caps {
        let (u, w) = (alpha[c0], alpha[c1]);
        debug_assert!(u != c1, "a closed loop of caps has no crossings");
        join(&mut alpha, u, w);
    }
    alpha.truncate(4 * t);
    let sigma: Vec<usize> = (0..4 * t).map(|d| 4 * (d / 4) + (d % 4 + 1) % 4).collect();

    let map = CombinatorialMap::from_permutations(alpha, sigma)?;
    // Vertex i owns darts 4i..4i+3, so orbit order is twist order.
    let lengths = terms.iter().enumerate().map(|(i, &a)| if i % 2 == 0 { -a } else { a }).collect();
    TwistReducedDiagram::new(map, vec![0; t], lengths)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn continued_fraction_examples() {
        assert_eq!(continued_fraction(55, 17).unwrap(), vec![3, 4, 4]);
        assert_eq!(continued_fraction(2, 1).unwrap(), vec![2]);
        assert_eq!(fraction_from_terms(&[3, 4, 4]).unwrap(), (55, 17));
        assert!(continued_fraction(1, 1).is_err());
        assert!(continued_fraction(6, 4).is_err());
        assert!(continued_fraction(5, 5).is_err());
        assert!(continued_fraction(5, 0).is_err());
    }

    #[test]
    fn stats_examples() {
        let s = TwistDecomposition::new(vec![3, 4, 4]).unwrap().stats();
        assert_eq!((s.t, s.c), (3, 11));
        assert_eq!((s.t_i(3), s.t_i(4), s.g_i(4), s.g_i(5)), (1, 2, 2, 0));
        let s = TwistDecomposition::new(vec![1]).unwrap().stats();
        assert_eq!((s.t, s.c, s.t_i(1), s.g_i(2)), (1, 1, 1, 0));
        let s = TwistDecomposition::new(vec![-2, -2]).unwrap().stats();
        assert_eq!((s.t, s.c, s.t_i(2)), (2, 4, 2));
        assert!(TwistDecomposition::new(vec![2, 0]).is_err());
        assert!(TwistDecomposition::new(vec![]).is_err());
    }

    #[test]
    fn two_bridge_counts() {
        let d = two_bridge_diagram(55, 17).unwrap();
        let c = d.map().census();
        assert_eq!((c.v, c.e, c.f), (3, 6, 5));
        assert_eq!(d.lengths(), &[-3, 4, -4]);
        let c = two_bridge_diagram(5, 2).unwrap().map().census();
        assert_eq!((c.v, c.e, c.f), (2, 4, 4));
        assert!(two_bridge_diagram(3, 1).is_err());
        // 5/3 = [1, 1, 2] is the mirror of 5/2 = [2, 2]: two twists, not three.
        assert_eq!(conway_normal_form(5, 3).unwrap(), (5, 2));
        assert_eq!(two_bridge_diagram(5, 3).unwrap().twist_count(), 2);
        assert_eq!(two_bridge_diagram(55, 38).unwrap().lengths().len(), 3);
        assert!(two_bridge_diagram(4, 3).is_err());
    }

    #[test]
    fn diagram_file_round_trip() {
        let d = two_bridge_diagram(55, 17).unwrap();
        let json = serde_json::to_string(&d.to_file()).unwrap();
        let back: DiagramFile = serde_json::from_str(&json).unwrap();
        assert_eq!(TwistReducedDiagram::from_file(&back).unwrap(), d);
    }
}
