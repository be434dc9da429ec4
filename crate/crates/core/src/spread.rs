//! The squarefree (spreading) operator, its iterates, polarization, and the
//! re-embedding that relates `I^{σ^n}` to `I^{σ^t}` for `t >= n`.

use crate::error::{Error, Result};
use crate::ideal::{minimalize, MonomialIdeal};
use crate::monomial::Monomial;

/// `σ(u)`: the `k`-th sorted index `i_k` becomes `i_k + (k - 1)`.
///
/// The result lives in `n + max(deg(u) - 1, 0)` variables.
pub fn sigma(u: &Monomial) -> Result<Monomial> {
    sigma_t(u, 1)
}

/// `σ^t(u)`: the `k`-th sorted index `i_k` becomes `i_k + (k - 1) t`.
///
/// The result is `t`-spread and lives in `n + t (deg(u) - 1)` variables
/// (`n` for the unit). `t = 0` returns `u` unchanged.
pub fn sigma_t(u: &Monomial, t: usize) -> Result<Monomial> {
    let idx = u.indices();
    let extra = t
        .checked_mul(idx.len().saturating_sub(1))
        .ok_or(Error::ExponentOverflow)?;
    let ambient = u.ambient().checked_add(extra).ok_or(Error::ExponentOverflow)?;
    let shifted: Vec<usize> = idx.iter().enumerate().map(|(k, &i)| i + k * t).collect();
    Monomial::from_indices(ambient, &shifted)
}

/// Inverse of [`sigma_t`] on `t`-spread monomials: subtracts `(k - 1) t` from
/// the `k`-th sorted index and places the result in `n` variables.
pub fn unspread(u: &Monomial, t: usize, n: usize) -> Result<Monomial> {
    if !u.is_t_spread(t) {
        return Err(Error::BadParameter(format!("{u} is not {t}-spread")));
    }
    let idx: Vec<usize> = u
        .indices()
        .iter()
        .enumerate()
        .map(|(k, &i)| i - k * t)
        .collect();
    Monomial::from_indices(n, &idx)
}

fn ensure_nonzero(i: &MonomialIdeal) -> Result<()> {
    if i.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    Ok(())
}

/// `I^{σ^t}` in its exact ambient `n + t (d - 1)`, `d = deg(I)`.
///
/// For `t >= n` the spread generators are always minimal. Below that they
/// need not be (`σ(x1^2 x2) = x1 x2 x4` divides `σ(x1^4)`), and redundant
/// ones are dropped.
pub fn spread_ideal(i: &MonomialIdeal, t: usize) -> Result<MonomialIdeal> {
    ensure_nonzero(i)?;
    let d = i.degree() as usize;
    let ambient = i.ambient() + t * (d - 1);
    spread_into(i, t, ambient)
}

/// `I^{σ^t}` in the padded ambient `t d`, available when `t >= n`.
pub fn spread_ideal_padded(i: &MonomialIdeal, t: usize) -> Result<MonomialIdeal> {
    ensure_nonzero(i)?;
    if t < i.ambient() {
        return Err(Error::BadParameter(format!(
            "padded ambient needs t >= n, got t = {t} < n = {}",
            i.ambient()
        )));
    }
    spread_into(i, t, t * i.degree() as usize)
}

fn spread_into(i: &MonomialIdeal, t: usize, ambient: usize) -> Result<MonomialIdeal> {
    let gens = i
        .generators()
        .iter()
        .map(|u| sigma_t(u, t)?.embed(ambient))
        .collect::<Result<Vec<_>>>()?;
    if t < i.ambient() {
        return Ok(MonomialIdeal::from_minimal_unchecked(ambient, minimalize(&gens)?));
    }
    let out = MonomialIdeal::from_minimal_unchecked(ambient, gens);
    out.check_minimal()?;
    Ok(out)
}

/// Polarization `u^p = ∏_j x_j x_{j+n} ... x_{j+(a_j-1)n}` in `n d` variables,
/// where `n` is the ambient of `u`.
///
/// `d` must be at least `deg(u)`; passing a shared `d` lets a whole generator
/// set land in one ring.
pub fn polarize(u: &Monomial, d: u32) -> Result<Monomial> {
    if u.degree() > d {
        return Err(Error::DegreeBound {
            degree: u.degree(),
            bound: d,
        });
    }
    if d == 0 {
        return Err(Error::BadParameter("polarization needs d >= 1".into()));
    }
    let n = u.ambient();
    let mut idx = Vec::with_capacity(u.degree() as usize);
    for j in 1..=n {
        idx.extend((0..u.exponent(j) as usize).map(|s| j + s * n));
    }
    Monomial::from_indices(n * d as usize, &idx)
}

/// `I^p` in `n d` variables, `d = deg(I)`.
pub fn polarize_ideal(i: &MonomialIdeal) -> Result<MonomialIdeal> {
    ensure_nonzero(i)?;
    let d = i.degree();
    let gens = i
        .generators()
        .iter()
        .map(|u| polarize(u, d))
        .collect::<Result<Vec<_>>>()?;
    let out = MonomialIdeal::from_minimal_unchecked(i.ambient() * d as usize, gens);
    out.check_minimal()?;
    Ok(out)
}

/// The variable map `x_j -> x_{φ(j)}` from `T_{nd}` to `T_{td}` with
/// `φ(j) = floor((j - 1) / n) (t - n) + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpreadEmbedding {
    n: usize,
    t: usize,
    d: usize,
}

impl SpreadEmbedding {
    pub fn new(n: usize, t: usize, d: usize) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::BadParameter("n and d must be positive".into()));
        }
        if t < n {
            return Err(Error::BadParameter(format!("need t >= n, got t = {t} < n = {n}")));
        }
        Ok(SpreadEmbedding { n, t, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn source_ambient(&self) -> usize {
        self.n * self.d
    }

    pub fn target_ambient(&self) -> usize {
        self.t * self.d
    }

    /// `φ(j)` for `1 <= j <= n d`.
    pub fn phi(&self, j: usize) -> usize {
        debug_assert!(j >= 1 && j <= self.source_ambient());
        (j - 1) / self.n * (self.t - self.n) + j
    }

    /// The full table `(j, φ(j))`.
    pub fn table(&self) -> Vec<(usize, usize)> {
        (1..=self.source_ambient()).map(|j| (j, self.phi(j))).collect()
    }

    /// Relabels the variables of a monomial of `T_{nd}`.
    pub fn apply(&self, u: &Monomial) -> Result<Monomial> {
        if u.ambient() != self.source_ambient() {
            return Err(Error::AmbientMismatch {
                left: self.source_ambient(),
                right: u.ambient(),
            });
        }
        let mut exps = vec![0; self.target_ambient()];
        for (j, &e) in u.exponents().iter().enumerate() {
            exps[self.phi(j + 1) - 1] = e;
        }
        Monomial::new(exps)
    }
}

/// Computes `Φ_t(I^{σ^n})` and checks it against `I^{σ^t}` (padded to `t d`
/// variables) generator by generator.
pub fn embed_spread(i: &MonomialIdeal, t: usize) -> Result<(MonomialIdeal, SpreadEmbedding)> {
    ensure_nonzero(i)?;
    let n = i.ambient();
    if t < n {
        return Err(Error::BadParameter(format!("need t >= n, got t = {t} < n = {n}")));
    }
    let emb = SpreadEmbedding::new(n, t, i.degree() as usize)?;
    let base = spread_ideal(i, n)?;
    let gens = base
        .generators()
        .iter()
        .map(|g| emb.apply(g))
        .collect::<Result<Vec<_>>>()?;
    let direct = spread_ideal_padded(i, t)?;
    if gens.as_slice() != direct.generators() {
        return Err(Error::Internal(format!(
            "re-embedded spread differs from the direct spread for t = {t}"
        )));
    }
    Ok((MonomialIdeal::from_minimal_unchecked(emb.target_ambient(), gens), emb))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(n: usize, i: &[usize]) -> Monomial {
        Monomial::from_indices(n, i).unwrap()
    }

    fn ideal(rows: &[&[u16]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(rows).unwrap()
    }

    #[test]
    fn small_t_spreads_drop_redundant_generators() {
        let i = ideal(&[&[4, 0], &[2, 1], &[0, 2]]);
        let s = spread_ideal(&i, 1).unwrap();
        assert_eq!(s.ambient(), 5);
        assert_eq!(s.generators(), &[idx(5, &[1, 2, 4]), idx(5, &[2, 3])]);
        assert_eq!(spread_ideal(&i, 2).unwrap().len(), 3);
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&idx(2, &[1, 1])).unwrap(), idx(3, &[1, 2]));
        let one = Monomial::unit(3).unwrap();
        assert_eq!(sigma(&one).unwrap(), one);
        let u = idx(2, &[1, 1, 2]);
        let twice = sigma(&sigma(&u).unwrap()).unwrap();
        assert_eq!(twice, idx(6, &[1, 3, 6]));
        assert_eq!(sigma_t(&u, 2).unwrap(), twice);
    }

    #[test]
    fn sigma_t_examples() {
        assert_eq!(sigma_t(&idx(3, &[2, 2, 3]), 3).unwrap(), idx(9, &[2, 5, 9]));
        let u = idx(3, &[1, 2, 2]);
        assert_eq!(sigma_t(&u, 0).unwrap(), u);
        let cube = idx(1, &[1, 1, 1]);
        let closed = sigma_t(&cube, 3).unwrap();
        assert_eq!(closed.indices(), vec![1, 4, 7]);
        let mut iter = cube.clone();
        for _ in 0..3 {
            iter = sigma(&iter).unwrap();
        }
        assert_eq!(iter, closed);
    }

    #[test]
    fn unspread_inverts() {
        let u = idx(3, &[1, 1, 3]);
        let s = sigma_t(&u, 4).unwrap();
        assert_eq!(unspread(&s, 4, 3).unwrap(), u);
        assert!(unspread(&idx(3, &[1, 2]), 2, 3).is_err());
    }

    #[test]
    fn spread_ideal_examples() {
        let i = ideal(&[&[2, 0], &[0, 2]]);
        let s = spread_ideal(&i, 1).unwrap();
        assert_eq!(s.ambient(), 3);
        assert_eq!(s.generators(), &[idx(3, &[1, 2]), idx(3, &[2, 3])]);
        let j = ideal(&[&[2, 1], &[0, 2]]);
        let s2 = spread_ideal(&j, 2).unwrap();
        assert_eq!(s2.generators(), &[idx(6, &[1, 3, 6]), idx(6, &[2, 4])]);
        assert_eq!(spread_ideal(&j, 0).unwrap(), j);
    }

    #[test]
    fn padded_spread_requires_t_at_least_n() {
        let j = ideal(&[&[2, 1], &[0, 2]]);
        assert_eq!(spread_ideal_padded(&j, 3).unwrap().ambient(), 9);
        assert!(spread_ideal_padded(&j, 1).is_err());
    }

    #[test]
    fn polarize_examples() {
        let u = idx(3, &[2, 2, 3]);
        assert_eq!(polarize(&u, 3).unwrap(), idx(9, &[2, 5, 3]));
        let sf = idx(3, &[1, 3]);
        assert_eq!(polarize(&sf, 2).unwrap(), sf.embed(6).unwrap());
        let v = idx(2, &[1, 1, 2, 2]);
        assert_eq!(polarize(&v, 4).unwrap(), idx(8, &[1, 2, 3, 4]));
        assert_eq!(
            polarize(&v, 3).unwrap_err(),
            Error::DegreeBound { degree: 4, bound: 3 }
        );
    }

    #[test]
    fn polarize_ideal_examples() {
        let i = ideal(&[&[1, 1, 1], &[0, 2, 1]]);
        let p = polarize_ideal(&i).unwrap();
        assert_eq!(p.ambient(), 9);
        assert_eq!(p.generators(), &[idx(9, &[1, 2, 3]), idx(9, &[2, 5, 3])]);

        let j = ideal(&[&[2, 2], &[0, 3]]);
        let q = polarize_ideal(&j).unwrap();
        assert_eq!(q.ambient(), 8);
        assert_eq!(q.generators(), &[idx(8, &[1, 3, 2, 4]), idx(8, &[2, 4, 6])]);

        let sf = ideal(&[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(polarize_ideal(&sf).unwrap(), sf.embed(6).unwrap());
    }

    #[test]
    fn embedding_table() {
        let e = SpreadEmbedding::new(2, 3, 3).unwrap();
        assert_eq!(
            e.table(),
            vec![(1, 1), (2, 2), (3, 4), (4, 5), (5, 7), (6, 8)]
        );
        let id = SpreadEmbedding::new(2, 2, 2).unwrap();
        assert!(id.table().iter().all(|&(j, p)| j == p));
    }

    #[test]
    fn embed_spread_examples() {
        let i = ideal(&[&[2, 0], &[0, 2]]);
        let (img, e) = embed_spread(&i, 2).unwrap();
        assert_eq!(img, spread_ideal(&i, 2).unwrap());
        assert!(e.table().iter().all(|&(j, p)| j == p));

        let j = ideal(&[&[2, 1], &[0, 2]]);
        let (img, _) = embed_spread(&j, 3).unwrap();
        assert_eq!(img.generators(), &[idx(9, &[1, 4, 8]), idx(9, &[2, 5])]);

        let (img, _) = embed_spread(&j, 3).unwrap();
        assert!(img.generators().iter().all(|g| g.is_t_spread(3)));
        assert!(matches!(embed_spread(&j, 1), Err(Error::BadParameter(_))));
    }
}
