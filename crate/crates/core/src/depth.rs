//! Multigraded Betti numbers and depth of `T_n / I` read off the lcm-lattice.
//!
//! For a lattice element `m != 1`, `b_{i,m}(T_n/I)` is the dimension of the
//! reduced homology `H̃_{i-2}` of the open interval `(1, m)`; `b_{0,1} = 1`.
//! Coefficients are taken in the two-element field.

use crate::error::{Error, Result};
use crate::homology::order_complex_betti;
use crate::ideal::MonomialIdeal;
use crate::lattice::LcmLattice;
use crate::monomial::Monomial;

/// Largest generator count accepted by [`depth_quotient`].
pub const MAX_DEPTH_GENERATORS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiEntry {
    pub homological: usize,
    pub multidegree: Monomial,
    pub value: usize,
}

/// Nonzero multigraded Betti numbers of `T_n/I`, sorted by homological index
/// and then by multidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: Vec<BettiEntry>,
}

impl BettiTable {
    pub fn projective_dimension(&self) -> usize {
        self.entries.iter().map(|e| e.homological).max().unwrap_or(0)
    }

    /// Total Betti number `β_i = Σ_m b_{i,m}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|e| e.homological == i)
            .map(|e| e.value)
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthReport {
    pub ambient: usize,
    pub value: usize,
    pub projective_dimension: usize,
    pub betti: BettiTable,
}

/// Multigraded Betti table of `T_n/I` from order-complex homology of `L_I`.
pub fn betti_table(i: &MonomialIdeal) -> Result<BettiTable> {
    if i.len() > MAX_DEPTH_GENERATORS {
        return Err(Error::TooLarge {
            what: "depth oracle generators",
            size: i.len(),
            cap: MAX_DEPTH_GENERATORS,
        });
    }
    let lattice = LcmLattice::build(i)?;
    let mut entries = vec![BettiEntry {
        homological: 0,
        multidegree: lattice.element(lattice.bottom()).clone(),
        value: 1,
    }];
    for m in 0..lattice.len() {
        if m == lattice.bottom() {
            continue;
        }
        let reduced = order_complex_betti(&lattice, m);
        for (k, &v) in reduced.values().iter().enumerate() {
            // values[k] is H̃_{k-1}, contributing to homological index k + 1
            if v > 0 {
                entries.push(BettiEntry {
                    homological: k + 1,
                    multidegree: lattice.element(m).clone(),
                    value: v,
                });
            }
        }
    }
    entries.sort_by(|a, b| {
        (a.homological, &a.multidegree).cmp(&(b.homological, &b.multidegree))
    });
    Ok(BettiTable { entries })
}

/// `depth(T_n/I) = n - pd(T_n/I)`.
pub fn depth_quotient(i: &MonomialIdeal) -> Result<DepthReport> {
    let betti = betti_table(i)?;
    let pd = betti.projective_dimension();
    let value = i.ambient().checked_sub(pd).ok_or_else(|| {
        Error::Internal(format!(
            "projective dimension {pd} exceeds {} variables",
            i.ambient()
        ))
    })?;
    Ok(DepthReport {
        ambient: i.ambient(),
        value,
        projective_dimension: pd,
        betti,
    })
}
