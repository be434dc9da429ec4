/*!
Spreading, polarization and smooth spreadability of monomial ideals.

A monomial `u = x_{i_1} x_{i_2} ⋯ x_{i_d}` with `i_1 ≤ ⋯ ≤ i_d` spreads to
`σ^t(u) = x_{i_1} x_{i_2 + t} ⋯ x_{i_d + (d-1)t}`, a squarefree monomial.
Applied to the minimal generators of `I ⊂ T_n = K[x_1, …, x_n]` this gives
the ideal `I^σt`. The polarization `I^p` is another squarefree model of `I`
living in `T_nd`, where `d` is the largest generator degree.

`I` is *smoothly spreadable* when some permutation of the variables of `T_nd`,
fixing each residue class modulo `n`, carries `I^p` onto `I^σn`. This crate
decides that property exactly and returns either a checked certificate or a
witness pair of generators.

The rest of the crate is about comparing `I` with its spread: lcm-lattices,
lattice isomorphism, the join-preserving map `δ : L_{I^σn} → L_I`, and small
exact oracles for depth and Stanley depth.

```
use monospread::{check_smooth_ideal, spread_ideal, MonomialIdeal};

let i = MonomialIdeal::from_exponents(&[&[2, 1], &[0, 2]])?;
let s = spread_ideal(&i, 2)?;
assert_eq!(s.to_string(), "(x1*x3*x6, x2*x4) in T_6");
assert!(!check_smooth_ideal(&i)?.is_smooth());
# Ok::<(), monospread::Error>(())
```
*/

#![deny(missing_debug_implementations)]

pub mod depth;
mod error;
pub mod homology;
mod ideal;
pub mod laws;
pub mod lattice;
mod monomial;
pub mod sdepth;
pub mod smooth;
pub mod spread;

pub use crate::depth::{depth_quotient, BettiTable, DepthReport};
pub use crate::error::{Error, Result};
pub use crate::ideal::{minimalize, minimalize_reporting, MonomialIdeal};
pub use crate::laws::{verify_spreading_laws, LawsReport};
pub use crate::lattice::{build_delta, hasse_dot, is_isomorphic, verify_delta, LatticeMap, LcmLattice};
pub use crate::monomial::{Exp, Monomial};
pub use crate::sdepth::{sdepth_ideal, sdepth_quotient, SdepthReport};
pub use crate::smooth::{
    check_smooth, check_smooth_ideal, check_smooth_t2, verify_certificate, SmoothCertificate,
    SmoothVerdict, SmoothWitness, T2Verdict,
};
pub use crate::spread::{
    embed_spread, polarize, polarize_ideal, sigma, sigma_t, spread_ideal, spread_ideal_padded,
    SpreadEmbedding,
};

// Keep the guide's code samples compiling.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/spreading.md")]
    mod spreading {}
    #[doc = include_str!("../../../book/src/smooth.md")]
    mod smooth {}
    #[doc = include_str!("../../../book/src/lattices.md")]
    mod lattices {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
}
