use num_traits::{One, Zero};

use super::AlgebraKind;
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::twobridge::Params;

/// Coordinates of an element in the distinguished basis, tagged with the
/// algebra it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgElement {
    tag: (Params, AlgebraKind),
    coords: Vec<Rational>,
}

impl AlgElement {
    pub(crate) fn new(tag: (Params, AlgebraKind), coords: Vec<Rational>) -> Self {
        AlgElement { tag, coords }
    }

    pub(crate) fn tag(&self) -> (Params, AlgebraKind) {
        self.tag
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub(crate) fn coords_mut(&mut self) -> &mut [Rational] {
        &mut self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// `Some((i, c))` when the element is `c e_i`.
    pub(crate) fn as_scaled_basis(&self) -> Option<(usize, Rational)> {
        let mut nz = self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero());
        let (i, c) = nz.next()?;
        if nz.next().is_some() {
            return None;
        }
        Some((i, c.clone()))
    }

    pub fn scale(&self, c: &Rational) -> AlgElement {
        if c.is_one() {
            return self.clone();
        }
        AlgElement {
            tag: self.tag,
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> AlgElement {
        AlgElement {
            tag: self.tag,
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn add(&self, other: &AlgElement) -> Result<AlgElement> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &AlgElement) -> Result<AlgElement> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &AlgElement,
        f: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<AlgElement> {
        if self.tag != other.tag || self.coords.len() != other.coords.len() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(AlgElement {
            tag: self.tag,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }
}
