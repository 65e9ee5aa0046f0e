//! Injective partial maps on `{0..degree-1}`, the elements of the symmetric
//! inverse monoid. Composition is left to right: `(p ∘ q)(x) = q(p(x))`, so
//! evaluating a word over generators is a direct fold.

use std::fmt;

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialBijection {
    degree: usize,
    images: Vec<Option<usize>>,
}

impl PartialBijection {
    pub fn new(degree: usize, images: Vec<Option<usize>>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Rejected("degree must be at least 1".into()));
        }
        if images.len() != degree {
            return Err(Error::Rejected(format!(
                "expected {} image entries, got {}",
                degree,
                images.len()
            )));
        }
        let mut preimage_of = vec![None; degree];
        for (x, img) in images.iter().enumerate() {
            if let Some(y) = *img {
                if y >= degree {
                    return Err(Error::Rejected(format!(
                        "image {y} of point {x} is out of range for degree {degree}"
                    )));
                }
                if let Some(prev) = preimage_of[y] {
                    return Err(Error::Rejected(format!(
                        "not injective: points {prev} and {x} both map to {y}"
                    )));
                }
                preimage_of[y] = Some(x);
            }
        }
        Ok(PartialBijection { degree, images })
    }

    pub fn from_pairs(degree: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut images = vec![None; degree];
        for &(x, y) in pairs {
            if x >= degree {
                return Err(Error::Rejected(format!(
                    "point {x} is out of range for degree {degree}"
                )));
            }
            if images[x].is_some() {
                return Err(Error::Rejected(format!("point {x} listed twice")));
            }
            images[x] = Some(y);
        }
        Self::new(degree, images)
    }

    /// The identity map on all of `{0..degree-1}`.
    pub fn identity(degree: usize) -> Self {
        PartialBijection {
            degree,
            images: (0..degree).map(Some).collect(),
        }
    }

    /// The nowhere-defined map, the zero of the symmetric inverse monoid.
    pub fn empty(degree: usize) -> Self {
        PartialBijection {
            degree,
            images: vec![None; degree],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.images.get(x).copied().flatten()
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.degree).filter(|&x| self.images[x].is_some())
    }

    pub fn domain_size(&self) -> usize {
        self.images.iter().filter(|i| i.is_some()).count()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, i)| *i == Some(x))
    }

    /// `self` then `other`: the result maps `x` to `other(self(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::Rejected(format!(
                "degree mismatch: {} vs {}",
                self.degree, other.degree
            )));
        }
        let images = self
            .images
            .iter()
            .map(|i| i.and_then(|y| other.images[y]))
            .collect();
        // Composition of injective maps is injective; skip revalidation.
        Ok(PartialBijection {
            degree: self.degree,
            images,
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![None; self.degree];
        for (x, img) in self.images.iter().enumerate() {
            if let Some(y) = *img {
                images[y] = Some(x);
            }
        }
        PartialBijection {
            degree: self.degree,
            images,
        }
    }

    /// Every injective partial map of the given degree, in a fixed order:
    /// lexicographic by image tuple with "undefined" sorting first.
    pub fn all_of_degree(degree: usize) -> Vec<Self> {
        assert!(degree >= 1, "degree must be at least 1");
        let mut out = Vec::new();
        // Odometer over {undefined, 0, .., degree-1}^degree, point 0 most
        // significant; keep the injective ones.
        let mut digits = vec![0usize; degree]; // 0 = undefined, k+1 = point k
        loop {
            let images: Vec<Option<usize>> = digits
                .iter()
                .map(|&d| if d == 0 { None } else { Some(d - 1) })
                .collect();
            let mut seen = vec![false; degree];
            let injective = images.iter().flatten().all(|&y| {
                let fresh = !seen[y];
                seen[y] = true;
                fresh
            });
            if injective {
                out.push(PartialBijection { degree, images });
            }
            let mut pos = degree;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                if digits[pos] < degree {
                    digits[pos] += 1;
                    break;
                }
                digits[pos] = 0;
            }
        }
    }
}

impl fmt::Display for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for (x, img) in self.images.iter().enumerate() {
            if let Some(y) = *img {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}->{y}")?;
                first = false;
            }
        }
        write!(f, "}}")
    }
}
