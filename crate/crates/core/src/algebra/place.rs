use std::fmt;

use crate::algebra::poly::Poly;
use crate::error::{Error, Result};

/// A place of `F_q(t)`: a monic irreducible polynomial or the place at infinity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Finite(Poly),
    Infinity,
}

impl Place {
    /// Finite place of a monic irreducible polynomial (verified).
    pub fn finite(pi: Poly) -> Result<Place> {
        if !pi.is_monic() {
            return Err(Error::InvalidPlace(format!("{pi} is not monic")));
        }
        if !pi.is_irreducible() {
            return Err(Error::InvalidPlace(format!("{pi} is not irreducible")));
        }
        Ok(Place::Finite(pi))
    }

    /// Residue degree: `deg(pi)` for finite places, 1 at infinity.
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(pi) => pi.degree().unwrap(),
            Place::Infinity => 1,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(pi) => write!(f, "{pi}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Place({self})")
    }
}

/// A finite set of places `S`; infinity is tracked by a flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaceSet {
    finite: Vec<Poly>,
    pub infinity: bool,
}

impl PlaceSet {
    /// `S = {inf}`.
    pub fn infinity_only() -> PlaceSet {
        PlaceSet {
            finite: Vec::new(),
            infinity: true,
        }
    }

    /// Builds a set from monic irreducibles (verified, deduplicated).
    pub fn new(finite: Vec<Poly>, infinity: bool) -> Result<PlaceSet> {
        let mut out: Vec<Poly> = Vec::new();
        for pi in finite {
            Place::finite(pi.clone())?;
            if !out.contains(&pi) {
                out.push(pi);
            }
        }
        out.sort();
        Ok(PlaceSet {
            finite: out,
            infinity,
        })
    }

    pub fn finite_places(&self) -> &[Poly] {
        &self.finite
    }

    pub fn contains(&self, place: &Place) -> bool {
        match place {
            Place::Infinity => self.infinity,
            Place::Finite(pi) => self.finite.contains(pi),
        }
    }

    pub fn len(&self) -> usize {
        self.finite.len() + usize::from(self.infinity)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn places(&self) -> Vec<Place> {
        let mut v: Vec<Place> = self.finite.iter().cloned().map(Place::Finite).collect();
        if self.infinity {
            v.push(Place::Infinity);
        }
        v
    }
}

impl Default for PlaceSet {
    fn default() -> Self {
        PlaceSet::infinity_only()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Field;

    #[test]
    fn finite_places_are_verified() {
        let f = Field::prime(5).unwrap();
        assert!(Place::finite(Poly::from_i64s(&f, &[2, 0, 1])).is_ok());
        assert!(Place::finite(Poly::from_i64s(&f, &[1, 0, 1])).is_err());
        assert!(Place::finite(Poly::from_i64s(&f, &[1, 2])).is_err());
        let s = PlaceSet::new(
            vec![Poly::from_i64s(&f, &[0, 1]), Poly::from_i64s(&f, &[0, 1])],
            true,
        )
        .unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.contains(&Place::Infinity));
    }
}
