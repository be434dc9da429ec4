//! Depth and Stanley depth bookkeeping across spreads.
//!
//! For `I ⊂ T_n` of degree `d` the harness checks
//!
//! * `depth(T_nd/I^σn) ≤ depth(T_n/I) + n(d-1)`, and the same bound for
//!   `sdepth` of the quotient and of the ideal;
//! * equality in all three whenever `L_I ≅ L_{I^σn}`;
//! * for every `t ≥ n`, the spread `I^σt ⊂ T_td` differs from `I^σn ⊂ T_nd`
//!   only by `(t-n)d` free variables, so all three invariants shift by
//!   exactly that amount;
//! * when `I` is smooth, `depth(T_td/I^σt) = depth(T_n/I) + td - n` and the
//!   same for both Stanley depths.

use crate::depth::depth_quotient;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lattice::{is_isomorphic, LcmLattice};
use crate::sdepth::{sdepth_ideal, sdepth_quotient};
use crate::smooth::check_smooth_ideal;
use crate::spread::spread_ideal_padded;

/// The three invariants of one ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub ambient: usize,
    pub depth: usize,
    pub sdepth_quotient: usize,
    pub sdepth_ideal: usize,
}

impl Invariants {
    pub fn compute(i: &MonomialIdeal) -> Result<Self> {
        Ok(Invariants {
            ambient: i.ambient(),
            depth: depth_quotient(i)?.value,
            sdepth_quotient: sdepth_quotient(i)?.value,
            sdepth_ideal: sdepth_ideal(i)?.value,
        })
    }

    fn triple(&self) -> [usize; 3] {
        [self.depth, self.sdepth_quotient, self.sdepth_ideal]
    }
}

const NAMES: [&str; 3] = ["depth T/I", "sdepth T/I", "sdepth I"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawCheck {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawsReport {
    pub n: usize,
    pub degree: usize,
    pub base: Invariants,
    /// `(t, invariants of I^σt ⊂ T_td)`, always starting with `t = n`.
    pub spreads: Vec<(usize, Invariants)>,
    pub lattices_isomorphic: bool,
    pub smooth: bool,
    pub checks: Vec<LawCheck>,
}

impl LawsReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

/// Run every applicable law for `t = n` and each `t` in `ts` (all `t ≥ n`).
///
/// Oracle size caps surface as [`Error::TooLarge`].
pub fn verify_spreading_laws(i: &MonomialIdeal, ts: &[usize]) -> Result<LawsReport> {
    let n = i.ambient();
    let d = i.degree() as usize;
    if let Some(&bad) = ts.iter().find(|&&t| t < n) {
        return Err(Error::BadParameter(format!(
            "spreading parameter t={bad} is below n={n}"
        )));
    }
    let mut list = vec![n];
    for &t in ts {
        if !list.contains(&t) {
            list.push(t);
        }
    }
    list[1..].sort_unstable();

    let base = Invariants::compute(i)?;
    let mut spreads = Vec::with_capacity(list.len());
    let mut spread_n = None;
    for &t in &list {
        let s = spread_ideal_padded(i, t)?;
        spreads.push((t, Invariants::compute(&s)?));
        if t == n {
            spread_n = Some(s);
        }
    }
    let spread_n = spread_n.ok_or_else(|| Error::Internal("missing t = n spread".into()))?;
    let lattices_isomorphic =
        is_isomorphic(&LcmLattice::build(i)?, &LcmLattice::build(&spread_n)?).is_some();
    let smooth = check_smooth_ideal(i)?.is_smooth();

    let mut checks = Vec::new();
    let at_n = spreads[0].1.triple();
    let shift = n * (d - 1);
    for k in 0..3 {
        let (lhs, rhs) = (at_n[k], base.triple()[k] + shift);
        checks.push(LawCheck {
            name: format!("{} bound", NAMES[k]),
            holds: lhs <= rhs,
            detail: format!("{lhs} <= {rhs}"),
        });
        if lattices_isomorphic {
            checks.push(LawCheck {
                name: format!("{} equality (isomorphic lattices)", NAMES[k]),
                holds: lhs == rhs,
                detail: format!("{lhs} == {rhs}"),
            });
        }
    }
    for &(t, inv) in &spreads[1..] {
        let extra = (t - n) * d;
        for k in 0..3 {
            let (lhs, rhs) = (inv.triple()[k], at_n[k] + extra);
            checks.push(LawCheck {
                name: format!("{} transfer t={t}", NAMES[k]),
                holds: lhs == rhs,
                detail: format!("{lhs} == {rhs}"),
            });
        }
    }
    if smooth {
        for &(t, inv) in &spreads {
            for k in 0..3 {
                let (lhs, rhs) = (inv.triple()[k], base.triple()[k] + t * d - n);
                checks.push(LawCheck {
                    name: format!("{} smooth shift t={t}", NAMES[k]),
                    holds: lhs == rhs,
                    detail: format!("{lhs} == {rhs}"),
                });
            }
        }
    }
    Ok(LawsReport {
        n,
        degree: d,
        base,
        spreads,
        lattices_isomorphic,
        smooth,
        checks,
    })
}
