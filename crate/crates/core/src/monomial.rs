//! Monomials as exponent vectors over a fixed number of variables.
//!
//! Variables are addressed 1-based (`x1, x2, ...`) everywhere in the public
//! API. The raw exponent slice returned by [`Monomial::exponents`] is of course
//! 0-based, so `exponents()[j - 1]` is the exponent of `x_j`.

use std::fmt;

use crate::error::{Error, Result};

/// Per-variable exponent type.
pub type Exp = u16;

/// A monomial `x_1^{a_1} ... x_n^{a_n}` in a ring with `n` variables.
///
/// Ordering is lexicographic on the exponent vector (after the ambient size),
/// which is the ordering used for every deterministic listing in this crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<Exp>,
}

impl Monomial {
    /// Builds a monomial from its exponent vector. The ambient size is the
    /// vector length and must be positive; the total degree must fit in 32 bits.
    pub fn new(exps: Vec<Exp>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::ZeroAmbient);
        }
        // u16 entries cannot overflow a u32 sum below 65537 variables.
        if exps.len() > u16::MAX as usize {
            return Err(Error::ExponentOverflow);
        }
        Ok(Monomial { exps })
    }

    /// Builds a monomial from wide exponents, rejecting entries above `u16::MAX`.
    pub fn from_u32s(exps: &[u32]) -> Result<Self> {
        let exps = exps
            .iter()
            .map(|&e| Exp::try_from(e).map_err(|_| Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Self::new(exps)
    }

    /// The unit monomial `1` in `n` variables.
    pub fn unit(n: usize) -> Result<Self> {
        Self::new(vec![0; n])
    }

    /// The variable `x_j` (1-based) in `n` variables.
    pub fn var(n: usize, j: usize) -> Result<Self> {
        Self::power(n, j, 1)
    }

    /// The pure power `x_j^k`.
    pub fn power(n: usize, j: usize, k: Exp) -> Result<Self> {
        if j == 0 || j > n {
            return Err(Error::BadParameter(format!(
                "variable x{j} outside x1..x{n}"
            )));
        }
        let mut exps = vec![0; n];
        exps[j - 1] = k;
        Self::new(exps)
    }

    /// Builds `x_{i_1} x_{i_2} ... x_{i_d}` from a list of 1-based variable
    /// indices (any order, repeats allowed).
    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        let mut exps = vec![0 as Exp; n];
        for &i in indices {
            if i == 0 || i > n {
                return Err(Error::BadParameter(format!(
                    "variable x{i} outside x1..x{n}"
                )));
            }
            exps[i - 1] = exps[i - 1].checked_add(1).ok_or(Error::ExponentOverflow)?;
        }
        Self::new(exps)
    }

    /// Number of variables of the ambient ring.
    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[Exp] {
        &self.exps
    }

    /// Exponent of `x_j` (1-based); zero outside the ambient range.
    pub fn exponent(&self, j: usize) -> Exp {
        if j == 0 {
            return 0;
        }
        self.exps.get(j - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Sorted 1-based variable indices `i_1 <= ... <= i_d`, with `x_j` repeated
    /// `a_j` times.
    pub fn indices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree() as usize);
        for (j, &e) in self.exps.iter().enumerate() {
            out.extend(std::iter::repeat_n(j + 1, e as usize));
        }
        out
    }

    /// 1-based indices of the variables dividing this monomial.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, _)| j + 1)
            .collect()
    }

    fn check_ambient(&self, other: &Monomial) -> Result<()> {
        if self.ambient() != other.ambient() {
            return Err(Error::AmbientMismatch {
                left: self.ambient(),
                right: other.ambient(),
            });
        }
        Ok(())
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial { exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Ok(Monomial { exps })
    }

    /// Product of two monomials, with overflow checked.
    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    /// True iff consecutive sorted indices differ by at least `t`.
    pub fn is_t_spread(&self, t: usize) -> bool {
        self.indices().windows(2).all(|w| w[1] - w[0] >= t)
    }

    /// The same monomial viewed in a ring with `n >= ambient` variables.
    pub fn embed(&self, n: usize) -> Result<Monomial> {
        if n < self.ambient() {
            return Err(Error::BadParameter(format!(
                "cannot embed {} variables into {n}",
                self.ambient()
            )));
        }
        let mut exps = self.exps.clone();
        exps.resize(n, 0);
        Monomial::new(exps)
    }

    /// Space separated exponent vector, as used by the ideal file format.
    pub fn exponent_string(&self) -> String {
        let parts: Vec<String> = self.exps.iter().map(|e| e.to_string()).collect();
        parts.join(" ")
    }
}

/// Renders as `x1^2*x2`, or `1` for the unit monomial.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let mut first = true;
        for (j, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", j + 1)?;
            } else {
                write!(f, "x{}^{}", j + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [n={}]", self.ambient())
    }
}
