//! Monomial ideals stored by their minimal generating set.

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Removes every monomial divisible by another member of `gens`.
///
/// Duplicates collapse to their first occurrence and the surviving monomials
/// keep their input order. The unit monomial is rejected since it would
/// generate the whole ring.
pub fn minimalize(gens: &[Monomial]) -> Result<Vec<Monomial>> {
    Ok(minimalize_reporting(gens)?.0)
}

/// Like [`minimalize`], also returning the dropped (redundant) monomials.
pub fn minimalize_reporting(gens: &[Monomial]) -> Result<(Vec<Monomial>, Vec<Monomial>)> {
    if let Some(first) = gens.first() {
        for g in gens {
            if g.ambient() != first.ambient() {
                return Err(Error::AmbientMismatch {
                    left: first.ambient(),
                    right: g.ambient(),
                });
            }
        }
    }
    if gens.iter().any(Monomial::is_unit) {
        return Err(Error::UnitGenerator);
    }
    let mut kept = Vec::new();
    let mut dropped = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let redundant = gens.iter().enumerate().any(|(k, h)| {
            k != i && h.divides_unchecked(g) && (h != g || k < i)
        });
        if redundant {
            dropped.push(g.clone());
        } else {
            kept.push(g.clone());
        }
    }
    Ok((kept, dropped))
}

/// A nonzero proper monomial ideal of `K[x_1, ..., x_n]`, held as its minimal
/// generating set `G(I)`.
///
/// Generators keep the order in which they were supplied. Equality compares
/// generator *sets*, so two ideals listing the same generators in a different
/// order are equal.
#[derive(Clone, Debug)]
pub struct MonomialIdeal {
    ambient: usize,
    generators: Vec<Monomial>,
    degree: u32,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens` in `ambient` variables,
    /// discarding redundant generators.
    pub fn new(ambient: usize, gens: Vec<Monomial>) -> Result<Self> {
        Ok(Self::new_reporting(ambient, gens)?.0)
    }

    /// Like [`MonomialIdeal::new`], also returning the discarded generators.
    pub fn new_reporting(ambient: usize, gens: Vec<Monomial>) -> Result<(Self, Vec<Monomial>)> {
        if ambient == 0 {
            return Err(Error::ZeroAmbient);
        }
        if gens.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        if let Some(g) = gens.iter().find(|g| g.ambient() != ambient) {
            return Err(Error::AmbientMismatch {
                left: ambient,
                right: g.ambient(),
            });
        }
        let (generators, dropped) = minimalize_reporting(&gens)?;
        Ok((Self::from_minimal_unchecked(ambient, generators), dropped))
    }

    /// Builds an ideal from a set already known to be minimal, failing with
    /// [`Error::NotMinimal`] if it is not.
    pub fn from_minimal(ambient: usize, gens: Vec<Monomial>) -> Result<Self> {
        let (ideal, dropped) = Self::new_reporting(ambient, gens)?;
        if let Some(d) = dropped.first() {
            return Err(Error::NotMinimal(format!("{d} is redundant")));
        }
        Ok(ideal)
    }

    pub(crate) fn from_minimal_unchecked(ambient: usize, generators: Vec<Monomial>) -> Self {
        let degree = generators.iter().map(Monomial::degree).max().unwrap_or(0);
        MonomialIdeal {
            ambient,
            generators,
            degree,
        }
    }

    /// Convenience constructor from exponent rows.
    pub fn from_exponents(rows: &[&[u16]]) -> Result<Self> {
        let ambient = rows.first().map(|r| r.len()).ok_or(Error::ZeroIdeal)?;
        let gens = rows
            .iter()
            .map(|r| Monomial::new(r.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ambient, gens)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// The minimal generators `G(I)`, in insertion order.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// `deg(I)`: the largest degree of a minimal generator.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    /// Membership test for a monomial.
    pub fn contains(&self, u: &Monomial) -> Result<bool> {
        if u.ambient() != self.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: u.ambient(),
            });
        }
        Ok(self.generators.iter().any(|g| g.divides_unchecked(u)))
    }

    /// `lcm(G(I))`.
    pub fn lcm_of_generators(&self) -> Monomial {
        let mut acc = Monomial::unit(self.ambient).expect("ambient is positive");
        for g in &self.generators {
            acc = acc.lcm_unchecked(g);
        }
        acc
    }

    /// The same generators in a ring with `n >= ambient` variables.
    pub fn embed(&self, n: usize) -> Result<Self> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.embed(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_minimal_unchecked(n, gens))
    }

    /// Generators sorted lexicographically by exponent vector.
    pub fn sorted_generators(&self) -> Vec<Monomial> {
        let mut g = self.generators.clone();
        g.sort();
        g
    }

    /// True iff distinct minimal generators are pairwise coprime.
    pub fn is_complete_intersection(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| {
            (i + 1..g.len()).all(|k| {
                g[i].exponents()
                    .iter()
                    .zip(g[k].exponents())
                    .all(|(&a, &b)| a == 0 || b == 0)
            })
        })
    }

    /// Asserts the stored generator set is pairwise incomparable.
    pub(crate) fn check_minimal(&self) -> Result<()> {
        let g = &self.generators;
        for i in 0..g.len() {
            for k in 0..g.len() {
                if i != k && g[i].divides_unchecked(&g[k]) {
                    return Err(Error::Internal(format!(
                        "{} divides {} in a generator set expected to be minimal",
                        g[i], g[k]
                    )));
                }
            }
        }
        Ok(())
    }
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.sorted_generators() == other.sorted_generators()
    }
}

impl Eq for MonomialIdeal {}

impl std::fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ") in T_{}", self.ambient)
    }
}
