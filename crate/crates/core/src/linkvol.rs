//! Volume bounds for hyperbolic link complements from diagram data.
//!
//! Hyperbolicity is always a caller-asserted precondition. Other hypotheses
//! (alternating, reduced, named exclusions) are carried in [`LinkFlags`] and
//! only gate applicability in [`link_report`]; the individual bound
//! functions check just the numeric preconditions.

use std::collections::BTreeMap;

use num_rational::Rational64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr::{q, VolumeExpr};
use crate::linkdiag::{TwistDecomposition, TwistStats};
use crate::report::{Bound, BoundKind, BoundReport};

fn r(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

fn na(msg: impl Into<String>) -> Error {
    Error::not_applicable(msg)
}

/// Adams: `v_tet(4c − 16)` for knots other than the figure-eight.
pub fn adams_crossing_bound(c: u64, is_figure_eight: bool) -> Result<VolumeExpr> {
    if c < 3 {
        return Err(Error::invalid(format!("needs c >= 3, got {c}")));
    }
    if is_figure_eight {
        return Err(na("excluded for the figure-eight knot (volume 2 v_tet)"));
    }
    Ok(VolumeExpr::v_tet(r(4 * c as i64 - 16)))
}

/// Adams (2013): `v_oct(c − 5) + 4v_tet` for `c ≥ 5`.
pub fn adams_octahedral_bound(c: u64) -> Result<VolumeExpr> {
    if c < 5 {
        return Err(Error::invalid(format!("needs c >= 5, got {c}")));
    }
    Ok(VolumeExpr::v_oct(r(c as i64 - 5)) + VolumeExpr::v_tet(r(4)))
}

/// Agol–Thurston: `10v_tet(t − 1)`.
pub fn agol_thurston_bound(t: usize) -> Result<VolumeExpr> {
    if t < 1 {
        return Err(Error::invalid("needs t >= 1"));
    }
    Ok(VolumeExpr::v_tet(r(10 * (t as i64 - 1))))
}

/// Dasbach–Tsvietkova: `v_tet(4t₁ + 6t₂ + 8t₃ + 10g₄ − a)` with `a = 10` if
/// `g₄ ≠ 0`, else `7` if `t₃ ≠ 0`, else `6`.
pub fn dasbach_tsvietkova_bound(s: &TwistStats) -> VolumeExpr {
    let (t1, t2, t3, g4) = (s.t_i(1), s.t_i(2), s.t_i(3), s.g_i(4));
    let a = if g4 != 0 {
        10
    } else if t3 != 0 {
        7
    } else {
        6
    };
    VolumeExpr::v_tet(r((4 * t1 + 6 * t2 + 8 * t3 + 10 * g4) as i64 - a))
}

/// Which constant Adams' twist bound subtracts; the first matching case wins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AdamsCase {
    /// `g₂ = 0`
    AllOnes,
    /// `g₃ = 0`, `t₂ ≥ 1`
    MaxTwo,
    /// `g₄ = 0`, `t₃ ≥ 1`
    MaxThree,
    /// `g₅ = 0`, `t₄ ≥ 1`
    MaxFour,
    /// `g₅ ≥ 1`
    FiveOrMore,
}

impl AdamsCase {
    pub const ALL: [AdamsCase; 5] =
        [AdamsCase::AllOnes, AdamsCase::MaxTwo, AdamsCase::MaxThree, AdamsCase::MaxFour, AdamsCase::FiveOrMore];

    pub fn select(s: &TwistStats) -> AdamsCase {
        if s.g_i(2) == 0 {
            AdamsCase::AllOnes
        } else if s.g_i(3) == 0 && s.t_i(2) >= 1 {
            AdamsCase::MaxTwo
        } else if s.g_i(4) == 0 && s.t_i(3) >= 1 {
            AdamsCase::MaxThree
        } else if s.g_i(5) == 0 && s.t_i(4) >= 1 {
            AdamsCase::MaxFour
        } else {
            // The cases are exhaustive: failing the first four forces g₅ ≥ 1.
            debug_assert!(s.g_i(5) >= 1);
            AdamsCase::FiveOrMore
        }
    }

    /// The subtracted constant `a`, exactly.
    pub fn constant(self) -> VolumeExpr {
        let lob = |c: i64, n: i64| VolumeExpr::lob(r(c), q(1, n));
        match self {
            AdamsCase::AllOnes => VolumeExpr::v_oct(r(7)) - VolumeExpr::v_tet(r(10)),
            AdamsCase::MaxTwo => VolumeExpr::v_tet(r(11)),
            AdamsCase::MaxThree => lob(32, 8) + VolumeExpr::v_tet(r(5)) - VolumeExpr::v_oct(r(1)) - lob(14, 7),
            AdamsCase::MaxFour => lob(40, 10) + lob(12, 6) - VolumeExpr::v_tet(r(2)) - lob(8, 4) - lob(18, 9),
            AdamsCase::FiveOrMore => VolumeExpr::v_tet(r(4)) + lob(12, 6) + lob(60, 10) - lob(54, 9),
        }
    }
}

/// The per-twist coefficients of Adams' twist bound, for lengths 1, 2, 3,
/// 4 and at least 5: `v_oct, 6v_tet, 16Λ(π/8), 20Λ(π/10), 10v_tet`.
pub fn adams_twist_coefficients() -> [VolumeExpr; 5] {
    [
        VolumeExpr::v_oct(r(1)),
        VolumeExpr::v_tet(r(6)),
        VolumeExpr::lob(r(16), q(1, 8)),
        VolumeExpr::lob(r(20), q(1, 10)),
        VolumeExpr::v_tet(r(10)),
    ]
}

/// Adams (2017): `t₁v_oct + t₂·6v_tet + t₃·16Λ(π/8) + t₄·20Λ(π/10) +
/// g₅·10v_tet − a` for reduced alternating diagrams with `c ≥ 5`, `t ≥ 3`,
/// other than the Borromean rings.
pub fn adams_twist_bound(s: &TwistStats) -> Result<VolumeExpr> {
    if s.t < 3 {
        return Err(na(format!("needs t >= 3, got {}", s.t)));
    }
    if s.c < 5 {
        return Err(na(format!("needs c >= 5, got {}", s.c)));
    }
    let counts = [s.t_i(1), s.t_i(2), s.t_i(3), s.t_i(4), s.g_i(5)];
    let mut out = -AdamsCase::select(s).constant();
    for (k, coeff) in counts.iter().zip(adams_twist_coefficients()) {
        out = out + coeff * (*k as i64);
    }
    Ok(out)
}

/// Twist-number bound `10v_tet(t − 1.4)` for hyperbolic diagrams with
/// `t > 8`, from the polyhedron of the fully augmented link.
pub fn twist_number_bound(t: usize) -> Result<VolumeExpr> {
    if t <= 8 {
        return Err(na(format!("needs t > 8, got {t}")));
    }
    Ok(VolumeExpr::v_tet(r(10 * t as i64 - 14)))
}

/// Refinement `10v_tet(t − 1.3 − Δ/10)` when `P` has `Δ + 2t` triangles.
pub fn twist_number_refined_bound(t: usize, delta: usize) -> Result<VolumeExpr> {
    if t <= 8 {
        return Err(na(format!("needs t > 8, got {t}")));
    }
    Ok(VolumeExpr::v_tet(r(10 * t as i64 - 13 - delta as i64)))
}

/// Futer–Kalfagianni–Purcell lower bound `0.70735(t − 1)` for reduced
/// alternating diagrams with every twist of length at least 7.
pub fn fkp_lower_bound(t: usize, min_twist_length: u64) -> Result<VolumeExpr> {
    if t < 2 {
        return Err(na(format!("needs t >= 2, got {t}")));
    }
    if min_twist_length < 7 {
        return Err(na(format!("needs every twist of length >= 7, shortest is {min_twist_length}")));
    }
    Ok(VolumeExpr::constant(q(70735, 100000) * r(t as i64 - 1)))
}

/// Guéritaud–Futer bounds for two-bridge links:
/// `2v_tet·t − 2.7066 ≤ vol ≤ 2v_oct(t − 1)`.
pub fn two_bridge_bounds(t: usize) -> Result<(VolumeExpr, VolumeExpr)> {
    if t < 2 {
        return Err(Error::invalid(format!("needs t >= 2, got {t}")));
    }
    let t = t as i64;
    let lower = VolumeExpr::v_tet(r(2 * t)) - VolumeExpr::constant(q(27066, 10000));
    let upper = VolumeExpr::v_oct(r(2 * (t - 1)));
    Ok((lower, upper))
}

/// Dasbach–Lin bounds from the second and penultimate Jones coefficients
/// of a prime alternating non-torus knot:
/// `v_oct·max(|a_{m−1}|, |a_{n+1}| − 1) ≤ vol ≤ 10v_tet(|a_{n+1}| + |a_{m−1}| − 1)`.
///
/// The lower bound is read so that `b(55/17)` (`|a_{n+1}| = 1`,
/// `|a_{m−1}| = 2`) gives `2v_oct`.
pub fn jones_bounds(abs_second: u64, abs_penultimate: u64) -> Result<(VolumeExpr, VolumeExpr)> {
    let (a, b) = (abs_second as i64, abs_penultimate as i64);
    let upper = VolumeExpr::v_tet(r(10 * (a + b - 1)));
    if a + b - 1 <= 0 {
        return Err(na("degenerate coefficients: the upper bound is not positive"));
    }
    let lower = VolumeExpr::v_oct(r(b.max(a - 1)));
    Ok((lower, upper))
}

/// `(4t − 8)v_tet + 2Σ_n n·f_n·Λ(π/n)` from the white face census of `P`.
pub fn white_face_corollary_bound(t: usize, white: &BTreeMap<usize, usize>) -> Result<VolumeExpr> {
    if t < 2 {
        return Err(Error::invalid(format!("needs t >= 2, got {t}")));
    }
    if let Some(&n) = white.keys().find(|&&n| n < 3) {
        return Err(Error::invalid(format!("white faces have at least 3 sides, got {n}")));
    }
    let sum: usize = white.iter().map(|(&n, &f)| n * f).sum();
    if sum != 6 * t {
        return Err(Error::CensusMismatch { expected: 6 * t, found: sum });
    }
    let mut out = VolumeExpr::v_tet(r(4 * t as i64 - 8));
    for (&n, &f) in white {
        out = out + VolumeExpr::lob(r(2 * (n * f) as i64), q(1, n as i64));
    }
    Ok(out)
}

/// Caller-asserted facts about the link and diagram. All default to false.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct LinkFlags {
    pub alternating: bool,
    pub reduced: bool,
    pub not_figure_eight: bool,
    pub not_borromean: bool,
    pub two_bridge: bool,
    pub knot: bool,
}

/// Optional extra inputs to [`link_report`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LinkExtras {
    /// White face census `n → f_n` of the augmentation polyhedron.
    pub white_census: Option<BTreeMap<usize, usize>>,
    /// `(|a_{n+1}|, |a_{m−1}|)` from the Jones polynomial.
    pub jones: Option<(u64, u64)>,
}

fn gate(ok: bool, why: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(na(why))
    }
}

/// Evaluate every link bound with its applicability under `flags`.
pub fn link_report(d: &TwistDecomposition, flags: &LinkFlags, extras: &LinkExtras) -> BoundReport {
    let s = d.stats();
    let alt_red = flags.alternating && flags.reduced;
    let mut rep = BoundReport::default();
    let up = BoundKind::Upper;
    let lo = BoundKind::Lower;

    rep.push(Bound::new(
        "adams_crossing",
        up,
        gate(flags.not_figure_eight, "requires --not-figure-eight").and_then(|_| adams_crossing_bound(s.c, false)),
        &["hyperbolic", "not-figure-eight", "c>=3"],
        "Adams (1983)",
    ));
    rep.push(Bound::new(
        "adams_octahedral",
        up,
        adams_octahedral_bound(s.c),
        &["hyperbolic", "c>=5"],
        "Adams (2013); a published evaluation at c = 11 reads 26.078932, direct evaluation gives 26.042941",
    ));
    rep.push(Bound::new(
        "agol_thurston",
        up,
        agol_thurston_bound(s.t),
        &["hyperbolic"],
        "Agol-Thurston, appendix to Lackenby (2004)",
    ));
    rep.push(Bound::new(
        "dasbach_tsvietkova",
        up,
        gate(flags.reduced, "requires --reduced").map(|_| dasbach_tsvietkova_bound(&s)),
        &["hyperbolic", "reduced"],
        "Dasbach-Tsvietkova (2015, 2019)",
    ));
    rep.push(Bound::new(
        "adams_twist",
        up,
        gate(alt_red, "requires --alternating and --reduced")
            .and_then(|_| gate(flags.not_borromean, "requires --not-borromean"))
            .and_then(|_| adams_twist_bound(&s)),
        &["hyperbolic", "reduced-alternating", "not-borromean", "c>=5", "t>=3"],
        "Adams (2017), Theorem 3.1",
    ));
    rep.push(Bound::new(
        "twist_number",
        up,
        twist_number_bound(s.t),
        &["hyperbolic", "t>8"],
        "polyhedral decomposition of the fully augmented link",
    ));
    let delta = extras.white_census.as_ref().map(|w| w.get(&3).copied().unwrap_or(0));
    rep.push(Bound::new(
        "twist_number_refined",
        up,
        delta
            .ok_or_else(|| na("requires the white face census"))
            .and_then(|delta| twist_number_refined_bound(s.t, delta)),
        &["hyperbolic", "t>8", "white-census"],
        "twist-number bound counting the white triangles of P",
    ));
    rep.push(Bound::new(
        "white_face",
        up,
        extras
            .white_census
            .as_ref()
            .ok_or_else(|| na("requires the white face census"))
            .and_then(|w| white_face_corollary_bound(s.t, w)),
        &["hyperbolic", "white-census"],
        "bipyramid bound on the faces of P (Adams 2017 regular bipyramids)",
    ));
    rep.push(Bound::new(
        "fkp",
        lo,
        gate(alt_red, "requires --alternating and --reduced").and_then(|_| fkp_lower_bound(s.t, s.min_length())),
        &["hyperbolic", "reduced-alternating", "t>=2", "twist-length>=7"],
        "Futer-Kalfagianni-Purcell (2008)",
    ));
    let tb = gate(flags.two_bridge, "requires --two-bridge")
        .and_then(|_| gate(alt_red, "requires --alternating and --reduced"))
        .and_then(|_| two_bridge_bounds(s.t));
    let tb_hyp = ["hyperbolic", "two-bridge", "reduced-alternating", "t>=2"];
    rep.push(Bound::new("two_bridge_lower", lo, tb.clone().map(|b| b.0), &tb_hyp, "Gueritaud-Futer (2006)"));
    rep.push(Bound::new("two_bridge_upper", up, tb.map(|b| b.1), &tb_hyp, "Gueritaud-Futer (2006)"));
    let jb = gate(flags.alternating, "requires --alternating")
        .and_then(|_| gate(flags.knot, "requires a knot"))
        .and_then(|_| extras.jones.ok_or_else(|| na("requires Jones coefficients")))
        .and_then(|(a, b)| jones_bounds(a, b));
    let jb_hyp = ["hyperbolic", "prime-alternating-non-torus-knot", "jones-coefficients"];
    rep.push(Bound::new(
        "jones_lower",
        lo,
        jb.clone().map(|b| b.0),
        &jb_hyp,
        "Dasbach-Lin (2007); read as v_oct max(|a_{m-1}|, |a_{n+1}| - 1)",
    ));
    rep.push(Bound::new("jones_upper", up, jb.map(|b| b.1), &jb_hyp, "Dasbach-Lin (2007)"));

    if s.t > 8 {
        rep.compare("twist_number", "agol_thurston", "for t > 8 the gap is exactly 4 v_tet");
    }
    if let Some(w) = &extras.white_census {
        let sum: usize = w.iter().map(|(&n, &f)| n * f).sum();
        if sum != 6 * s.t {
            rep.warn(format!(
                "white census sums to {sum}, but a polyhedron with {} dark triangles needs {}",
                2 * s.t,
                6 * s.t
            ));
        }
    }
    rep
}
