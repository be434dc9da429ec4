//! Smooth spreadability: deciding whether one residue-preserving relabeling
//! of the variables of `T_{nd}` carries `σ^n(u)` onto `u^p` for every `u` of a
//! monomial set at once.
//!
//! The decision is pairwise. For a generator `u_i` and a variable `x_j`, let
//! `p_{i,j} = a_{i,1} + ... + a_{i,j-1}`; the variables of `σ^n(u_i)` with
//! residue `j` are `(p_{i,j} + s) n + j` for `0 <= s < a_{i,j}`, while those of
//! `u_i^p` are `s n + j`. Writing everything in "slots" `s` of a residue class,
//! generator `i` occupies the slot interval `[p_{i,j}, p_{i,j} + a_{i,j})` and
//! has to be sent onto the prefix `[0, a_{i,j})`. A slot permutation doing this
//! for every generator exists exactly when any two such intervals meet in
//! `min(a_{i,j}, a_{ℓ,j})` slots, i.e. when the intervals of a residue class
//! form a chain under inclusion.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::spread::{polarize, sigma_t};

/// A residue-preserving permutation `τ` of `{1, ..., nd}` with
/// `τ(σ^n(u)) = u^p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothCertificate {
    n: usize,
    d: usize,
    /// `tau[k - 1] = τ(k)`.
    tau: Vec<usize>,
}

impl SmoothCertificate {
    /// Wraps an explicit permutation of `{1, ..., nd}` (given 1-based, with
    /// `tau[k - 1] = τ(k)`). Only the permutation shape is checked here; use
    /// [`verify_certificate`] for the residue and image conditions.
    pub fn from_permutation(n: usize, d: usize, tau: Vec<usize>) -> Result<Self> {
        let nd = n * d;
        if tau.len() != nd {
            return Err(Error::ShapeMismatch(format!(
                "permutation has {} entries, expected n d = {nd}",
                tau.len()
            )));
        }
        let mut seen = vec![false; nd];
        for &v in &tau {
            if v == 0 || v > nd || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::ShapeMismatch(format!(
                    "not a permutation of 1..={nd}"
                )));
            }
        }
        Ok(SmoothCertificate { n, d, tau })
    }

    /// Assembles `τ(s n + j) = λ_j(s) n + j` from per-residue slot permutations.
    pub fn from_column_maps(n: usize, d: usize, columns: &[Vec<usize>]) -> Result<Self> {
        if columns.len() != n || columns.iter().any(|c| c.len() != d) {
            return Err(Error::ShapeMismatch(format!(
                "need {n} column maps of length {d}"
            )));
        }
        let mut tau = vec![0; n * d];
        for (j0, col) in columns.iter().enumerate() {
            for (s, &target) in col.iter().enumerate() {
                tau[s * n + j0] = target * n + j0 + 1;
            }
        }
        Self::from_permutation(n, d, tau)
    }

    pub fn identity(n: usize, d: usize) -> Self {
        SmoothCertificate {
            n,
            d,
            tau: (1..=n * d).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `τ(k)` for `1 <= k <= nd`.
    pub fn apply(&self, k: usize) -> usize {
        self.tau[k - 1]
    }

    pub fn permutation(&self) -> &[usize] {
        &self.tau
    }

    /// `τ(k) ≡ k (mod n)` for every `k`.
    pub fn respects_residues(&self) -> bool {
        self.tau
            .iter()
            .enumerate()
            .all(|(k0, &v)| (v + self.n - (k0 + 1) % self.n) % self.n == 0)
    }

    /// The slot permutations `λ_j` (0-based slots, `j = 1..=n` in order), or
    /// `None` if `τ` does not respect residues.
    pub fn column_maps(&self) -> Option<Vec<Vec<usize>>> {
        if !self.respects_residues() {
            return None;
        }
        Some(
            (0..self.n)
                .map(|j0| {
                    (0..self.d)
                        .map(|s| (self.tau[s * self.n + j0] - 1) / self.n)
                        .collect()
                })
                .collect(),
        )
    }

    /// Relabels each variable `x_k` of `u` (ambient `nd`) to `x_{τ(k)}`.
    pub fn relabel(&self, u: &Monomial) -> Result<Monomial> {
        if u.ambient() != self.tau.len() {
            return Err(Error::AmbientMismatch {
                left: self.tau.len(),
                right: u.ambient(),
            });
        }
        let mut exps = vec![0; u.ambient()];
        for (k0, &e) in u.exponents().iter().enumerate() {
            exps[self.tau[k0] - 1] = e;
        }
        Monomial::new(exps)
    }

    /// Disjoint cycle decomposition, fixed points omitted, each cycle starting
    /// at its least element. The identity yields no cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.tau.len()];
        let mut out = Vec::new();
        for start in 1..=self.tau.len() {
            if seen[start - 1] || self.tau[start - 1] == start {
                seen[start - 1] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut k = self.tau[start - 1];
            while k != start {
                seen[k - 1] = true;
                cycle.push(k);
                k = self.tau[k - 1];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle notation such as `(2 5)(3 6 9)`; `()` for the identity.
    pub fn cycle_notation(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let parts: Vec<String> = c.iter().map(|k| k.to_string()).collect();
                format!("({})", parts.join(" "))
            })
            .collect()
    }
}

/// A failing pair for the pairwise intersection condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothWitness {
    /// 0-based positions of the two monomials in the input set, `first < second`.
    pub first: usize,
    pub second: usize,
    /// 1-based variable index.
    pub variable: usize,
    /// `min(a_{i,j}, a_{ℓ,j})`.
    pub expected: usize,
    /// Size of the intersection of the two position sets.
    pub found: usize,
    /// Variables of `σ^n(u_first)` with residue `j` (1-based).
    pub first_positions: Vec<usize>,
    pub second_positions: Vec<usize>,
}

impl fmt::Display for SmoothWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set = |v: &[usize]| {
            let parts: Vec<String> = v.iter().map(|k| k.to_string()).collect();
            format!("{{{}}}", parts.join(","))
        };
        write!(
            f,
            "i={} l={} j={} expected={} found={} |{} ∩ {}|",
            self.first + 1,
            self.second + 1,
            self.variable,
            self.expected,
            self.found,
            set(&self.first_positions),
            set(&self.second_positions)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SmoothVerdict {
    Smooth(SmoothCertificate),
    NotSmooth(SmoothWitness),
}

impl SmoothVerdict {
    pub fn is_smooth(&self) -> bool {
        matches!(self, SmoothVerdict::Smooth(_))
    }

    pub fn certificate(&self) -> Option<&SmoothCertificate> {
        match self {
            SmoothVerdict::Smooth(c) => Some(c),
            SmoothVerdict::NotSmooth(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&SmoothWitness> {
        match self {
            SmoothVerdict::Smooth(_) => None,
            SmoothVerdict::NotSmooth(w) => Some(w),
        }
    }
}

/// Half-open slot interval `[start, start + len)` of generator `u` in the
/// residue class of `x_j` (1-based).
fn slot_interval(u: &Monomial, j: usize) -> (usize, usize) {
    let prefix: usize = u.exponents()[..j - 1].iter().map(|&e| e as usize).sum();
    (prefix, u.exponent(j) as usize)
}

/// The variables `(p + s) n + j`, `0 <= s < len`, of `σ^n(u)` with residue `j`.
pub fn position_set(u: &Monomial, j: usize) -> Vec<usize> {
    let n = u.ambient();
    let (start, len) = slot_interval(u, j);
    (start..start + len).map(|s| s * n + j).collect()
}

fn common_ambient(set: &[Monomial]) -> Result<usize> {
    let n = set.first().ok_or(Error::EmptySet)?.ambient();
    if let Some(u) = set.iter().find(|u| u.ambient() != n) {
        return Err(Error::AmbientMismatch {
            left: n,
            right: u.ambient(),
        });
    }
    Ok(n)
}

/// Scans every pair `i < ℓ` and variable `j` (in that order) for a violation of
/// the intersection identity.
pub fn find_witness(set: &[Monomial]) -> Result<Option<SmoothWitness>> {
    let n = common_ambient(set)?;
    for i in 0..set.len() {
        for l in i + 1..set.len() {
            for j in 1..=n {
                let a = position_set(&set[i], j);
                let b = position_set(&set[l], j);
                let expected = a.len().min(b.len());
                let found = a.iter().filter(|k| b.contains(k)).count();
                if expected != found {
                    return Ok(Some(SmoothWitness {
                        first: i,
                        second: l,
                        variable: j,
                        expected,
                        found,
                        first_positions: a,
                        second_positions: b,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Decides smooth spreadability of a monomial set, returning a verified
/// certificate or a concrete witness.
///
/// `d` is the largest degree in the set.
pub fn check_smooth(set: &[Monomial]) -> Result<SmoothVerdict> {
    let n = common_ambient(set)?;
    if let Some(w) = find_witness(set)? {
        return Ok(SmoothVerdict::NotSmooth(w));
    }
    let d = set.iter().map(Monomial::degree).max().unwrap_or(0) as usize;
    let cert = build_certificate(set, n, d)?;
    if !verify_certificate(set, &cert)? {
        return Err(Error::Internal(
            "constructed certificate failed verification".into(),
        ));
    }
    Ok(SmoothVerdict::Smooth(cert))
}

/// [`check_smooth`] applied to `G(I)`.
pub fn check_smooth_ideal(i: &MonomialIdeal) -> Result<SmoothVerdict> {
    check_smooth(i.generators())
}

fn build_certificate(set: &[Monomial], n: usize, d: usize) -> Result<SmoothCertificate> {
    let mut columns = Vec::with_capacity(n);
    for j in 1..=n {
        let intervals: Vec<(usize, usize)> = set
            .iter()
            .map(|u| slot_interval(u, j))
            .filter(|&(_, len)| len > 0)
            .collect();
        let col = match chain_column(&intervals, d) {
            Some(col) if column_fits(&col, &intervals) => col,
            _ => search_column(&intervals, d).ok_or_else(|| {
                Error::Internal(format!(
                    "no slot permutation for residue {j} although every pair is nested"
                ))
            })?,
        };
        columns.push(col);
    }
    SmoothCertificate::from_column_maps(n, d, &columns)
}

/// Inside-out assignment along the chain of nested intervals: the shortest
/// interval goes onto `[0, len)`, each longer one fills the next block with
/// its new slots, and slots outside every interval take what is left. All
/// assignments are in ascending order.
fn chain_column(intervals: &[(usize, usize)], d: usize) -> Option<Vec<usize>> {
    let mut chain: Vec<(usize, usize)> = intervals.to_vec();
    chain.sort_by_key(|&(start, len)| (len, start));
    chain.dedup();
    let mut map = vec![usize::MAX; d];
    let mut next = 0;
    for &(start, len) in &chain {
        if start + len > d {
            return None;
        }
        for s in start..start + len {
            if map[s] == usize::MAX {
                map[s] = next;
                next += 1;
            }
        }
        if next != len {
            return None;
        }
    }
    for slot in map.iter_mut().filter(|v| **v == usize::MAX) {
        *slot = next;
        next += 1;
    }
    Some(map)
}

fn column_fits(col: &[usize], intervals: &[(usize, usize)]) -> bool {
    intervals.iter().all(|&(start, len)| {
        (0..col.len()).all(|s| (start..start + len).contains(&s) == (col[s] < len))
    })
}

/// Backtracking over slot bijections; only reached if the chain assignment
/// fails its own check.
fn search_column(intervals: &[(usize, usize)], d: usize) -> Option<Vec<usize>> {
    fn go(
        s: usize,
        d: usize,
        intervals: &[(usize, usize)],
        used: &mut [bool],
        col: &mut Vec<usize>,
    ) -> bool {
        if s == d {
            return true;
        }
        for v in 0..d {
            if used[v] {
                continue;
            }
            let ok = intervals
                .iter()
                .all(|&(start, len)| (start..start + len).contains(&s) == (v < len));
            if !ok {
                continue;
            }
            used[v] = true;
            col.push(v);
            if go(s + 1, d, intervals, used, col) {
                return true;
            }
            col.pop();
            used[v] = false;
        }
        false
    }
    let mut used = vec![false; d];
    let mut col = Vec::with_capacity(d);
    go(0, d, intervals, &mut used, &mut col).then_some(col)
}

/// Checks that `cert` respects residues and carries `σ^n(u)` onto `u^p` (both
/// in `n d` variables, `d = cert.d()`) for every `u` in the set.
pub fn verify_certificate(set: &[Monomial], cert: &SmoothCertificate) -> Result<bool> {
    let n = common_ambient(set)?;
    let max_deg = set.iter().map(Monomial::degree).max().unwrap_or(0) as usize;
    if cert.n != n || cert.d < max_deg {
        return Err(Error::ShapeMismatch(format!(
            "certificate for n = {}, d = {} does not fit n = {n}, max degree {max_deg}",
            cert.n, cert.d
        )));
    }
    if !cert.respects_residues() {
        return Ok(false);
    }
    let nd = n * cert.d;
    for u in set {
        if u.is_unit() {
            continue;
        }
        let spread = sigma_t(u, n)?.embed(nd)?;
        let target = polarize(u, cert.d as u32)?;
        if cert.relabel(&spread)? != target {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of the two-variable shortcut.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum T2Verdict {
    /// Total degrees are nondecreasing along the staircase: smooth.
    SufficientHolds,
    /// A necessary condition fails: not smooth.
    NecessaryFails,
    /// Neither test decides; use [`check_smooth`].
    Indeterminate,
}

/// Staircase test for ideals of `K[x_1, x_2]`.
///
/// Generators `x_1^{a_i} x_2^{b_i}` are sorted with `a` decreasing (so `b`
/// increasing). With `s_i = a_i + b_i`, a nondecreasing `s` is sufficient. The
/// necessary conditions checked are: `s_2 <= ... <= s_{m-1}`; `s_1 <= s_2`
/// when `b_1 > 0`; and `s_{m-1} <= s_m` when `a_m > 0` and `b_{m-1} > 0`.
pub fn check_smooth_t2(i: &MonomialIdeal) -> Result<T2Verdict> {
    if i.ambient() != 2 {
        return Err(Error::BadAmbient {
            expected: 2,
            found: i.ambient(),
        });
    }
    let mut gens: Vec<(u32, u32)> = i
        .generators()
        .iter()
        .map(|g| (u32::from(g.exponent(1)), u32::from(g.exponent(2))))
        .collect();
    gens.sort_by_key(|g| std::cmp::Reverse(g.0));
    let sums: Vec<u32> = gens.iter().map(|&(a, b)| a + b).collect();
    let m = gens.len();

    if sums.windows(2).all(|w| w[0] <= w[1]) {
        return Ok(T2Verdict::SufficientHolds);
    }
    let inner_ok = m < 3 || sums[1..m - 1].windows(2).all(|w| w[0] <= w[1]);
    let first_ok = !(m >= 2 && gens[0].1 > 0 && sums[0] > sums[1]);
    let last_ok = !(m >= 2 && gens[m - 1].0 > 0 && gens[m - 2].1 > 0 && sums[m - 2] > sums[m - 1]);
    if inner_ok && first_ok && last_ok {
        Ok(T2Verdict::Indeterminate)
    } else {
        Ok(T2Verdict::NecessaryFails)
    }
}

/// `J = (G(I) ∪ {v})` in `n'` variables, where `v` only involves
/// `x_{n+1}, ..., x_{n'}`. `I` and `J` are smooth together or not at all.
pub fn adjoin_disjoint(i: &MonomialIdeal, v: &Monomial) -> Result<MonomialIdeal> {
    let n = i.ambient();
    let n_prime = v.ambient();
    if v.is_unit() {
        return Err(Error::UnitGenerator);
    }
    if n_prime <= n {
        return Err(Error::BadParameter(format!(
            "target ambient {n_prime} must exceed {n}"
        )));
    }
    if v.support().iter().any(|&j| j <= n) {
        return Err(Error::SupportOverlap { n });
    }
    let mut gens = i.embed(n_prime)?.generators().to_vec();
    gens.push(v.clone());
    MonomialIdeal::new(n_prime, gens)
}

/// Tests the degree condition for adjoining pure powers `x_{j_ℓ}^{d_ℓ}`: each
/// `d_ℓ` must be at least `deg(u^{(ℓ)})` for every generator `u` divisible by
/// `x_{j_ℓ}`, where `u^{(ℓ)}` keeps only `x_1, ..., x_{j_ℓ}`. When it holds and
/// `I` is smooth, so is the enlarged ideal.
pub fn adjoin_pure_powers_condition(i: &MonomialIdeal, powers: &[(usize, u16)]) -> Result<bool> {
    let n = i.ambient();
    if powers.windows(2).any(|w| w[0].0 >= w[1].0) {
        return Err(Error::BadParameter(
            "power variables must be strictly increasing".into(),
        ));
    }
    for &(j, d) in powers {
        if j == 0 || j > n || d == 0 {
            return Err(Error::BadParameter(format!("bad power x{j}^{d}")));
        }
        let p = Monomial::power(n, j, d)?;
        for g in i.generators() {
            if p.divides_unchecked(g) || g.divides_unchecked(&p) {
                return Err(Error::NotMinimal(format!("{p} is comparable with {g}")));
            }
        }
    }
    Ok(powers.iter().all(|&(j, d)| {
        i.generators()
            .iter()
            .filter(|u| u.exponent(j) > 0)
            .map(|u| u.exponents()[..j].iter().map(|&e| u32::from(e)).sum::<u32>())
            .all(|truncated| u32::from(d) >= truncated)
    }))
}

/// The ideal `(I, x_{j_1}^{d_1}, ...)`, minimality checked.
pub fn adjoin_pure_powers(i: &MonomialIdeal, powers: &[(usize, u16)]) -> Result<MonomialIdeal> {
    adjoin_pure_powers_condition(i, powers)?;
    let mut gens = i.generators().to_vec();
    for &(j, d) in powers {
        gens.push(Monomial::power(i.ambient(), j, d)?);
    }
    MonomialIdeal::from_minimal(i.ambient(), gens)
}

/// All products `u v` for `u` in `left` (all of one degree, ambient `n`) and
/// `v` in `right` (supported on `x_{n+1}, ..., x_{n'}`, ambient `n'`). Both
/// inputs must be smooth; the product set then is as well.
///
/// Products are listed with `u` varying slowest and duplicates removed.
pub fn product_construct(left: &[Monomial], right: &[Monomial]) -> Result<Vec<Monomial>> {
    let n = common_ambient(left)?;
    let n_prime = common_ambient(right)?;
    if left.iter().chain(right).any(Monomial::is_unit) {
        return Err(Error::UnitGenerator);
    }
    let d = left[0].degree();
    if let Some((idx, u)) = left.iter().enumerate().find(|(_, u)| u.degree() != d) {
        return Err(Error::DegreeMismatch {
            index: idx + 1,
            expected: d,
            found: u.degree(),
        });
    }
    if n_prime <= n || right.iter().any(|v| v.support().iter().any(|&j| j <= n)) {
        return Err(Error::SupportOverlap { n });
    }
    if !check_smooth(left)?.is_smooth() {
        return Err(Error::NotSmoothInput("left"));
    }
    if !check_smooth(right)?.is_smooth() {
        return Err(Error::NotSmoothInput("right"));
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for u in left {
        let u = u.embed(n_prime)?;
        for v in right {
            let p = u.mul(v)?;
            if seen.insert(p.clone()) {
                out.push(p);
            }
        }
    }
    Ok(out)
}
