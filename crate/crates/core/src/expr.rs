//! Exact volume expressions: rational combinations of a few transcendental
//! basis constants, evaluated to floating point only on request.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::numerics::{lobachevsky, v_oct, v_tet};

/// A basis constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    /// The number 1.
    One,
    VTet,
    VOct,
    /// `Λ(π·r)` with `0 < r < 1/2` and `r ∉ {1/3, 1/4}` after normalisation.
    Lob(Rational64),
    /// `π ln(n/2)`.
    PiLnHalf(u32),
}

impl Basis {
    pub fn value(&self) -> f64 {
        match *self {
            Basis::One => 1.0,
            Basis::VTet => v_tet(),
            Basis::VOct => v_oct(),
            Basis::Lob(r) => {
                lobachevsky(std::f64::consts::PI * r.to_f64().expect("small rational")).expect("finite angle")
            }
            Basis::PiLnHalf(n) => std::f64::consts::PI * (n as f64 / 2.0).ln(),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::One => write!(f, "1"),
            Basis::VTet => write!(f, "v_tet"),
            Basis::VOct => write!(f, "v_oct"),
            Basis::Lob(r) => {
                if r.numer() == &1 {
                    write!(f, "Λ(π/{})", r.denom())
                } else {
                    write!(f, "Λ({}π/{})", r.numer(), r.denom())
                }
            }
            Basis::PiLnHalf(n) => write!(f, "π ln({n}/2)"),
        }
    }
}

/// `Σ coeff · basis`, kept in normal form: no zero coefficients and every
/// `Lob` argument reduced to `(0, 1/2)`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct VolumeExpr {
    terms: BTreeMap<Basis, Rational64>,
}

pub fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

impl VolumeExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(coeff: Rational64, basis: Basis) -> Self {
        let mut e = Self::zero();
        e.push(coeff, basis);
        e
    }

    pub fn constant(c: Rational64) -> Self {
        Self::term(c, Basis::One)
    }

    pub fn v_tet(c: Rational64) -> Self {
        Self::term(c, Basis::VTet)
    }

    pub fn v_oct(c: Rational64) -> Self {
        Self::term(c, Basis::VOct)
    }

    /// `c · Λ(π·r)` for any rational `r`, folded by periodicity and oddness.
    pub fn lob(c: Rational64, r: Rational64) -> Self {
        Self::term(c, Basis::Lob(r))
    }

    pub fn pi_ln_half(c: Rational64, n: u32) -> Self {
        Self::term(c, Basis::PiLnHalf(n))
    }

    fn push(&mut self, coeff: Rational64, basis: Basis) {
        let (coeff, basis) = match normalise(coeff, basis) {
            Some(cb) => cb,
            None => return,
        };
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(basis).or_insert_with(Rational64::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&basis);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, basis: Basis) -> Rational64 {
        let (c, b) = match normalise(Rational64::one(), basis) {
            Some(cb) => cb,
            None => return Rational64::zero(),
        };
        self.terms.get(&b).map_or(Rational64::zero(), |v| *v / c)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Basis, &Rational64)> {
        self.terms.iter()
    }

    pub fn eval(&self) -> f64 {
        // Sum in basis order so the result is reproducible bit for bit.
        self.terms.iter().map(|(b, c)| c.to_f64().expect("small rational") * b.value()).sum()
    }

    pub fn scale(&self, c: Rational64) -> Self {
        let mut out = Self::zero();
        for (b, k) in &self.terms {
            out.push(*k * c, *b);
        }
        out
    }
}

/// Reduce `Λ(πr)` to a canonical representative: `r ∈ (0, 1/2)`,
/// with `Λ(π/3) = v_tet/3` and `Λ(π/4) = v_oct/8` substituted.
fn normalise(coeff: Rational64, basis: Basis) -> Option<(Rational64, Basis)> {
    let Basis::Lob(r) = basis else {
        return Some((coeff, basis));
    };
    let mut r = r - Rational64::from_integer(r.floor().to_integer());
    let mut coeff = coeff;
    let half = q(1, 2);
    if r > half {
        r = Rational64::one() - r;
        coeff = -coeff;
    }
    if r.is_zero() || r == half {
        return None;
    }
    if r == q(1, 3) {
        return Some((coeff / 3, Basis::VTet));
    }
    if r == q(1, 4) {
        return Some((coeff / 8, Basis::VOct));
    }
    Some((coeff, Basis::Lob(r)))
}

impl Add for VolumeExpr {
    type Output = VolumeExpr;
    fn add(mut self, rhs: VolumeExpr) -> VolumeExpr {
        for (b, c) in rhs.terms {
            self.push(c, b);
        }
        self
    }
}

impl Sub for VolumeExpr {
    type Output = VolumeExpr;
    fn sub(self, rhs: VolumeExpr) -> VolumeExpr {
        self + (-rhs)
    }
}

impl Neg for VolumeExpr {
    type Output = VolumeExpr;
    fn neg(self) -> VolumeExpr {
        self.scale(-Rational64::one())
    }
}

impl Mul<Rational64> for VolumeExpr {
    type Output = VolumeExpr;
    fn mul(self, rhs: Rational64) -> VolumeExpr {
        self.scale(rhs)
    }
}

impl Mul<i64> for VolumeExpr {
    type Output = VolumeExpr;
    fn mul(self, rhs: i64) -> VolumeExpr {
        self.scale(Rational64::from_integer(rhs))
    }
}

impl fmt::Display for VolumeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *b == Basis::One {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{mag} {b}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lob_normalisation() {
        let e = VolumeExpr::lob(q(3, 1), q(1, 3));
        assert_eq!(e, VolumeExpr::v_tet(q(1, 1)));
        let e = VolumeExpr::lob(q(8, 1), q(1, 4));
        assert_eq!(e, VolumeExpr::v_oct(q(1, 1)));
        assert!(VolumeExpr::lob(q(5, 1), q(1, 2)).is_zero());
        assert!(VolumeExpr::lob(q(5, 1), q(2, 1)).is_zero());
        let a = VolumeExpr::lob(q(1, 1), q(7, 8));
        assert_eq!(a, VolumeExpr::lob(q(-1, 1), q(1, 8)));
        let b = VolumeExpr::lob(q(1, 1), q(-1, 8));
        assert_eq!(b, a);
    }

    #[test]
    fn arithmetic_cancels() {
        let e = VolumeExpr::v_tet(q(3, 1)) - VolumeExpr::v_tet(q(3, 1));
        assert!(e.is_zero());
        assert_eq!(e.eval(), 0.0);
    }

    #[test]
    fn display_is_readable() {
        let e = VolumeExpr::v_tet(q(3, 1)) - VolumeExpr::v_oct(q(5, 2)) + VolumeExpr::lob(q(16, 1), q(1, 8));
        assert_eq!(e.to_string(), "3 v_tet - 5/2 v_oct + 16 Λ(π/8)");
        assert_eq!(VolumeExpr::zero().to_string(), "0");
        assert_eq!(VolumeExpr::constant(q(-27066, 10000)).to_string(), "-13533/5000");
    }

    #[test]
    fn eval_matches_constants() {
        let e = VolumeExpr::v_oct(q(6, 1)) + VolumeExpr::v_tet(q(4, 1));
        assert!((e.eval() - 26.042_940_686).abs() < 1e-8);
    }
}
