//! Permutations of {0..m-1} as image arrays.

use std::fmt;

use crate::{Error, Result};

/// A permutation of `0..degree`, stored as its image sequence.
///
/// Composition is left-to-right: `(a.compose(&b))(x) = b(a(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    img: Vec<u32>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.img)
    }
}

impl Permutation {
    /// Build from an image sequence, checking it is a bijection.
    pub fn from_images(img: Vec<u32>) -> Result<Permutation> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &x in &img {
            if (x as usize) >= n || seen[x as usize] {
                return Err(Error::NotAPermutation { len: n });
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { img })
    }

    pub fn identity(degree: usize) -> Permutation {
        Permutation { img: (0..degree as u32).collect() }
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.img
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.img[x as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// self followed by other.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { img: self.img.iter().map(|&x| other.img[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut img = vec![0u32; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x as usize] = i as u32;
        }
        Permutation { img }
    }

    /// Smallest point moved by this permutation.
    pub fn first_moved_point(&self) -> Option<u32> {
        self.img.iter().enumerate().find(|&(i, &x)| i as u32 != x).map(|(i, _)| i as u32)
    }

    /// Build a permutation on `0..m` from disjoint cycles (free points fixed).
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Permutation> {
        let mut img: Vec<u32> = (0..degree as u32).collect();
        for cyc in cycles {
            for w in cyc.windows(2) {
                if w[0] as usize >= degree {
                    return Err(Error::PointOutOfRange { point: w[0] as usize, degree });
                }
                img[w[0] as usize] = w[1];
            }
            if let (Some(&last), Some(&first)) = (cyc.last(), cyc.first()) {
                if last as usize >= degree {
                    return Err(Error::PointOutOfRange { point: last as usize, degree });
                }
                img[last as usize] = first;
            }
        }
        Permutation::from_images(img)
    }
}
