//! Scale families of sets bounded away from zero.
//!
//! A [`TailSet`] is a product over coordinates, each coordinate either
//! unconstrained or restricted to a finite union of rays and intervals that
//! avoid zero. Membership at scale `u` is `x ∈ u·A ⇔ x/u ∈ A`. Every piece is
//! closed on the side away from zero: `Ray(+, c) = [c, ∞)`,
//! `Ray(−, c) = (−∞, −c]`, a positive interval is `(lo, hi]` and a negative
//! one `[lo, hi)`.

use crate::error::{invalid, Error, Result};
use crate::series::SeriesMatrix;
use crate::threshold::Functional;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Piece {
    Ray { direction: Direction, cut: f64 },
    Interval { lo: f64, hi: f64 },
}

impl Piece {
    fn validate(&self) -> Result<()> {
        match *self {
            Piece::Ray { cut, .. } if !(cut > 0.0 && cut.is_finite()) => {
                Err(invalid("cut", format!("ray cut must be positive and finite, got {cut}")))
            }
            Piece::Interval { lo, hi } if !(lo < hi && lo.is_finite() && hi.is_finite()) => {
                Err(invalid("interval", format!("need lo < hi, got [{lo}, {hi}]")))
            }
            Piece::Interval { lo, hi } if lo <= 0.0 && hi >= 0.0 => {
                Err(invalid("interval", format!("[{lo}, {hi}] contains zero")))
            }
            _ => Ok(()),
        }
    }

    /// Membership of a scaled value `z = x/u`.
    pub fn contains(&self, z: f64) -> bool {
        match *self {
            Piece::Ray { direction: Direction::Up, cut } => z >= cut,
            Piece::Ray { direction: Direction::Down, cut } => z <= -cut,
            Piece::Interval { lo, hi } if lo > 0.0 => z > lo && z <= hi,
            Piece::Interval { lo, hi } => z >= lo && z < hi,
        }
    }

    fn sign(&self) -> f64 {
        match *self {
            Piece::Ray { direction: Direction::Up, .. } => 1.0,
            Piece::Ray { direction: Direction::Down, .. } => -1.0,
            Piece::Interval { lo, .. } => lo.signum(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TailSet {
    coords: Vec<Option<Vec<Piece>>>,
}

impl TailSet {
    /// A product set; `None` leaves a coordinate unconstrained.
    pub fn product(coords: Vec<Option<Vec<Piece>>>) -> Result<Self> {
        if coords.iter().all(Option::is_none) {
            return Err(invalid("tail set", "at least one coordinate must be constrained"));
        }
        for pieces in coords.iter().flatten() {
            if pieces.is_empty() {
                return Err(invalid("tail set", "constrained coordinate has no pieces"));
            }
            pieces.iter().try_for_each(Piece::validate)?;
        }
        Ok(Self { coords })
    }

    pub fn univariate(pieces: Vec<Piece>) -> Result<Self> {
        Self::product(vec![Some(pieces)])
    }

    /// `[cut, ∞)`.
    pub fn upper(cut: f64) -> Result<Self> {
        Self::univariate(vec![Piece::Ray { direction: Direction::Up, cut }])
    }

    /// `(−∞, −cut]`.
    pub fn lower(cut: f64) -> Result<Self> {
        Self::univariate(vec![Piece::Ray { direction: Direction::Down, cut }])
    }

    /// `{|x| ≥ cut}`.
    pub fn two_sided(cut: f64) -> Result<Self> {
        Self::univariate(vec![
            Piece::Ray { direction: Direction::Up, cut },
            Piece::Ray { direction: Direction::Down, cut },
        ])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Option<Vec<Piece>>] {
        &self.coords
    }

    /// Whether the row `x` lies in `u·A`.
    pub fn contains(&self, x: &[f64], u: f64) -> bool {
        self.coords.iter().zip(x).all(|(pieces, &xj)| match pieces {
            None => true,
            Some(pieces) => {
                let z = xj / u;
                pieces.iter().any(|p| p.contains(z))
            }
        })
    }

    /// The threshold functional matching this set's orientation: upward sets
    /// use the raw upper tail, downward sets the lower tail, mixed sets the
    /// absolute value.
    pub fn natural_functional(&self) -> Functional {
        let signs: Vec<f64> = self.coords.iter().flatten().flatten().map(Piece::sign).collect();
        if self.dim() == 1 && signs.iter().all(|&s| s > 0.0) {
            Functional::Upper
        } else if self.dim() == 1 && signs.iter().all(|&s| s < 0.0) {
            Functional::Lower
        } else {
            Functional::AbsValue
        }
    }
}

/// `1{X_t ∈ u·A}` for every row of the series.
pub fn exceedance_indicators(series: &SeriesMatrix, set: &TailSet, u: f64) -> Result<Vec<bool>> {
    if !(u > 0.0 && u.is_finite()) {
        return Err(invalid("u", format!("scale must be positive and finite, got {u}")));
    }
    if set.dim() != series.dim() {
        return Err(Error::DimensionMismatch {
            expected: series.dim(),
            got: set.dim(),
        });
    }
    Ok(series.rows().map(|row| set.contains(row, u)).collect())
}
