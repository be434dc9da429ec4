//! Stanley depth by interval partitions of the characteristic poset.
//!
//! With `g` the exponent vector of `lcm(G(I))`, the poset is the box
//! `[0, g]`. The points outside `I` (for `T_n/I`) or inside `I` (for `I`) are
//! partitioned into intervals `[a, b]`; an interval is worth
//! `|{j : b_j = g_j}|`, a partition is worth its cheapest interval, and the
//! Stanley depth is the best partition value.
//!
//! The search fixes a target `k` and tries to cover the side exactly with
//! intervals worth at least `k`, always starting from the lexicographically
//! least uncovered point (which must be a lower corner). Targets are tried
//! from the largest plausible value downward.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Largest characteristic poset accepted by the Stanley depth search.
pub const MAX_POSET_POINTS: usize = 4096;

/// Which side of the characteristic poset is partitioned.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Points outside the ideal: Stanley depth of `T_n/I`.
    Quotient,
    /// Points inside the ideal: Stanley depth of `I`.
    Ideal,
}

/// The box `[0, g]` with membership flags.
#[derive(Clone, Debug)]
pub struct CharacteristicPoset {
    bound: Vec<u16>,
    /// Points in lexicographic order (mixed radix, first coordinate most
    /// significant).
    points: Vec<Vec<u16>>,
    in_ideal: Vec<bool>,
}

impl CharacteristicPoset {
    pub fn new(i: &MonomialIdeal) -> Result<Self> {
        let bound = i.lcm_of_generators().exponents().to_vec();
        let size = bound
            .iter()
            .try_fold(1usize, |acc, &g| acc.checked_mul(g as usize + 1))
            .filter(|&s| s <= MAX_POSET_POINTS)
            .ok_or_else(|| Error::TooLarge {
                what: "characteristic poset points",
                size: bound
                    .iter()
                    .fold(1usize, |acc, &g| acc.saturating_mul(g as usize + 1)),
                cap: MAX_POSET_POINTS,
            })?;
        let mut points = Vec::with_capacity(size);
        let mut cur = vec![0u16; bound.len()];
        loop {
            points.push(cur.clone());
            // increment the mixed-radix counter, last coordinate fastest
            let mut pos = bound.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                if cur[pos] < bound[pos] {
                    cur[pos] += 1;
                    for c in cur.iter_mut().skip(pos + 1) {
                        *c = 0;
                    }
                    break;
                }
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if pos == usize::MAX {
                break;
            }
        }
        let in_ideal = points
            .iter()
            .map(|c| {
                i.generators()
                    .iter()
                    .any(|g| g.exponents().iter().zip(c).all(|(a, b)| a <= b))
            })
            .collect();
        Ok(CharacteristicPoset {
            bound,
            points,
            in_ideal,
        })
    }

    pub fn bound(&self) -> &[u16] {
        &self.bound
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, k: usize) -> &[u16] {
        &self.points[k]
    }

    pub fn in_ideal(&self, k: usize) -> bool {
        self.in_ideal[k]
    }

    fn index(&self, c: &[u16]) -> usize {
        c.iter()
            .zip(&self.bound)
            .fold(0, |acc, (&x, &g)| acc * (g as usize + 1) + x as usize)
    }

    /// Number of coordinates where `b` reaches the bound.
    pub fn saturation(&self, b: &[u16]) -> usize {
        b.iter().zip(&self.bound).filter(|(x, g)| x == g).count()
    }

    fn on_side(&self, k: usize, side: Side) -> bool {
        match side {
            Side::Quotient => !self.in_ideal[k],
            Side::Ideal => self.in_ideal[k],
        }
    }

    /// Indices of every point of the interval `[a, b]`.
    fn interval(&self, a: &[u16], b: &[u16]) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = a.to_vec();
        loop {
            out.push(self.index(&cur));
            let mut pos = cur.len();
            let mut done = true;
            while pos > 0 {
                pos -= 1;
                if cur[pos] < b[pos] {
                    cur[pos] += 1;
                    let len = cur.len();
                    cur[pos + 1..len].copy_from_slice(&a[pos + 1..len]);
                    done = false;
                    break;
                }
            }
            if done {
                return out;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdepthReport {
    pub ambient: usize,
    pub side: Side,
    pub value: usize,
    /// Lower and upper corners of the partition realizing `value`.
    pub partition: Vec<(Monomial, Monomial)>,
}

pub fn sdepth_quotient(i: &MonomialIdeal) -> Result<SdepthReport> {
    sdepth(i, Side::Quotient)
}

pub fn sdepth_ideal(i: &MonomialIdeal) -> Result<SdepthReport> {
    sdepth(i, Side::Ideal)
}

pub fn sdepth(i: &MonomialIdeal, side: Side) -> Result<SdepthReport> {
    let poset = CharacteristicPoset::new(i)?;
    let members: Vec<usize> = (0..poset.len()).filter(|&k| poset.on_side(k, side)).collect();
    if members.is_empty() {
        return Err(Error::Internal("empty side of the characteristic poset".into()));
    }
    let best_single = members
        .iter()
        .map(|&k| poset.saturation(poset.point(k)))
        .max()
        .unwrap_or(0);
    for target in (0..=best_single.min(i.ambient())).rev() {
        let mut search = Search {
            poset: &poset,
            side,
            target,
            covered: vec![false; poset.len()],
            failed: HashSet::new(),
            chosen: Vec::new(),
        };
        if search.cover() {
            let partition = search
                .chosen
                .iter()
                .map(|&(a, b)| {
                    Ok((
                        Monomial::new(poset.point(a).to_vec())?,
                        Monomial::new(poset.point(b).to_vec())?,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(SdepthReport {
                ambient: i.ambient(),
                side,
                value: target,
                partition,
            });
        }
    }
    Err(Error::Internal("no interval partition found, not even singletons".into()))
}

struct Search<'a> {
    poset: &'a CharacteristicPoset,
    side: Side,
    target: usize,
    covered: Vec<bool>,
    failed: HashSet<Vec<u64>>,
    chosen: Vec<(usize, usize)>,
}

impl Search<'_> {
    fn key(&self) -> Vec<u64> {
        let mut words = vec![0u64; self.covered.len().div_ceil(64)];
        for (k, _) in self.covered.iter().enumerate().filter(|(_, &c)| c) {
            words[k / 64] |= 1 << (k % 64);
        }
        words
    }

    fn cover(&mut self) -> bool {
        let p = self.poset;
        let Some(low) = (0..p.len()).find(|&k| !self.covered[k] && p.on_side(k, self.side)) else {
            return true;
        };
        let key = self.key();
        if self.failed.contains(&key) {
            return false;
        }
        let a = p.point(low).to_vec();
        // candidate upper corners, largest intervals first
        let mut candidates: Vec<(usize, Vec<usize>)> = Vec::new();
        for hi in low..p.len() {
            let b = p.point(hi);
            if p.saturation(b) < self.target || !a.iter().zip(b).all(|(x, y)| x <= y) {
                continue;
            }
            if !p.on_side(hi, self.side) || self.covered[hi] {
                continue;
            }
            let cells = p.interval(&a, b);
            if cells
                .iter()
                .all(|&c| !self.covered[c] && p.on_side(c, self.side))
            {
                candidates.push((hi, cells));
            }
        }
        candidates.sort_by(|x, y| y.1.len().cmp(&x.1.len()).then(x.0.cmp(&y.0)));
        for (hi, cells) in candidates {
            for &c in &cells {
                self.covered[c] = true;
            }
            self.chosen.push((low, hi));
            if self.cover() {
                return true;
            }
            self.chosen.pop();
            for &c in &cells {
                self.covered[c] = false;
            }
        }
        self.failed.insert(key);
        false
    }
}
