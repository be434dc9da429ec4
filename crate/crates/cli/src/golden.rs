//! Built-in replay table of worked examples with known answers.
//!
//! Each row recomputes its answer from scratch through the library and
//! compares it with the recorded one.

use monospread::smooth::{adjoin_pure_powers, adjoin_pure_powers_condition, product_construct};
use monospread::{
    check_smooth, check_smooth_ideal, depth_quotient, is_isomorphic, polarize_ideal, spread_ideal,
    spread_ideal_padded, verify_certificate, verify_spreading_laws, LcmLattice, Monomial,
    MonomialIdeal, Result, SmoothCertificate,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub label: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn row(label: &'static str, check: impl FnOnce() -> Result<(bool, String)>) -> Row {
    match check() {
        Ok((pass, detail)) => Row {
            label,
            pass,
            detail,
        },
        Err(e) => Row {
            label,
            pass: false,
            detail: format!("error: {e}"),
        },
    }
}

fn ideal(rows: &[&[u16]]) -> Result<MonomialIdeal> {
    MonomialIdeal::from_exponents(rows)
}

/// The ideal generated by squarefree monomials given as index lists.
fn squarefree(n: usize, gens: &[&[usize]]) -> Result<MonomialIdeal> {
    let gens = gens
        .iter()
        .map(|g| Monomial::from_indices(n, g))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(n, gens)
}

fn monomials(rows: &[&[u16]]) -> Result<Vec<Monomial>> {
    rows.iter().map(|r| Monomial::new(r.to_vec())).collect()
}

fn spread_is(i: &MonomialIdeal, t: usize, expected: &[&[usize]]) -> Result<(bool, String)> {
    let s = spread_ideal(i, t)?;
    let e = squarefree(s.ambient(), expected)?;
    Ok((s == e, format!("t={t}: {s}")))
}

pub fn replay() -> Vec<Row> {
    let mut rows = Vec::new();

    rows.push(row("pair (x1x2x3, x2^2x3) is smooth", || {
        let set = monomials(&[&[1, 1, 1], &[0, 2, 1]])?;
        let verdict = check_smooth(&set)?;
        Ok(match verdict.certificate() {
            Some(c) => (
                verify_certificate(&set, c)?,
                format!("YES tau {}", c.cycle_notation()),
            ),
            None => (false, "NO".into()),
        })
    }));
    rows.push(row("pair (x1x2x3, x2^2x3) accepts tau (2 5)(3 6 9)", || {
        let set = monomials(&[&[1, 1, 1], &[0, 2, 1]])?;
        let tau = SmoothCertificate::from_permutation(3, 3, vec![1, 5, 6, 4, 2, 9, 7, 8, 3])?;
        let ok = verify_certificate(&set, &tau)?
            && !verify_certificate(&set, &SmoothCertificate::identity(3, 3))?;
        Ok((ok, format!("tau {} verified, identity rejected", tau.cycle_notation())))
    }));
    rows.push(row("pair (x1x2x3, x2^2x3) spread and polarization", || {
        let i = ideal(&[&[1, 1, 1], &[0, 2, 1]])?;
        let s = spread_ideal(&i, 3)?;
        let p = polarize_ideal(&i)?;
        let ok = s == squarefree(9, &[&[1, 5, 9], &[2, 5, 9]])?
            && p == squarefree(9, &[&[1, 2, 3], &[2, 3, 5]])?;
        Ok((ok, format!("t=3: {s}; polarization {p}")))
    }));
    rows.push(row("pair (x1^3x2x3^2, x1x2^2x3^3) is not smooth", || {
        let set = monomials(&[&[3, 1, 2], &[1, 2, 3]])?;
        Ok(match check_smooth(&set)?.witness() {
            Some(w) => (
                (w.first, w.second, w.variable, w.expected, w.found) == (0, 1, 2, 1, 0),
                format!("NO {w}"),
            ),
            None => (false, "YES".into()),
        })
    }));
    rows.push(row("(x1^3, x2x3) is c.i., first two spreads are not", || {
        let i = ideal(&[&[3, 0, 0], &[0, 1, 1]])?;
        let (a, da) = spread_is(&i, 1, &[&[1, 2, 3], &[2, 4]])?;
        let (b, db) = spread_is(&i, 2, &[&[1, 3, 5], &[2, 5]])?;
        let s1 = spread_ideal(&i, 1)?;
        let s2 = spread_ideal(&i, 2)?;
        let ok = a
            && b
            && i.is_complete_intersection()
            && !s1.is_complete_intersection()
            && !s2.is_complete_intersection();
        Ok((ok, format!("{da}; {db}")))
    }));
    rows.push(row("(x1^3, x2x3) spreads are c.i. for t = 3, 4, 5", || {
        let i = ideal(&[&[3, 0, 0], &[0, 1, 1]])?;
        let mut ok = true;
        let mut detail = Vec::new();
        for t in 3..=5 {
            let (same, d) = spread_is(&i, t, &[&[1, t + 1, 2 * t + 1], &[2, t + 3]])?;
            ok &= same && spread_ideal(&i, t)?.is_complete_intersection();
            detail.push(d);
        }
        Ok((ok, detail.join("; ")))
    }));
    rows.push(row("(x1^2x2, x2^2) spread at t = 2", || {
        let i = ideal(&[&[2, 1], &[0, 2]])?;
        let (same, d) = spread_is(&i, 2, &[&[1, 3, 6], &[2, 4]])?;
        Ok((same && spread_ideal(&i, 2)?.is_complete_intersection(), d))
    }));
    rows.push(row("(x1^2x2, x2^2) spreads, c.i. exactly for t >= 2", || {
        let i = ideal(&[&[2, 1], &[0, 2]])?;
        let mut ok = !i.is_complete_intersection() && !check_smooth_ideal(&i)?.is_smooth();
        for t in 1..=5 {
            let (same, _) = spread_is(&i, t, &[&[1, 1 + t, 2 + 2 * t], &[2, 2 + t]])?;
            ok &= same && spread_ideal(&i, t)?.is_complete_intersection() == (t >= 2);
        }
        Ok((ok, "t=1..5 match, not smooth".into()))
    }));
    rows.push(row("product of (x1^2x2, x1x2^2, x2^3) and (x3^2, x3x4^2)", || {
        let left = monomials(&[&[2, 1], &[1, 2], &[0, 3]])?;
        let right = monomials(&[&[0, 0, 2, 0], &[0, 0, 1, 2]])?;
        let prod = product_construct(&left, &right)?;
        let expected = monomials(&[
            &[2, 1, 2, 0],
            &[1, 2, 2, 0],
            &[0, 3, 2, 0],
            &[2, 1, 1, 2],
            &[1, 2, 1, 2],
            &[0, 3, 1, 2],
        ])?;
        let same = prod.len() == expected.len() && expected.iter().all(|u| prod.contains(u));
        let smooth = check_smooth(&prod)?.is_smooth();
        Ok((same && smooth, format!("{} products, smooth {smooth}", prod.len())))
    }));
    rows.push(row("product of (x1x2, x2^2) and {x3, x3^2}", || {
        let left = monomials(&[&[1, 1], &[0, 2]])?;
        let right = monomials(&[&[0, 0, 1], &[0, 0, 2]])?;
        let prod = product_construct(&left, &right)?;
        let expected = monomials(&[&[1, 1, 1], &[1, 1, 2], &[0, 2, 1], &[0, 2, 2]])?;
        let smooth = check_smooth(&prod)?.is_smooth();
        let sub = check_smooth_ideal(&ideal(&[&[1, 1, 1], &[0, 2, 2]])?)?.is_smooth();
        Ok((
            prod == expected && smooth && sub,
            format!("smooth {smooth}, (x1x2x3, x2^2x3^2) smooth {sub}"),
        ))
    }));
    rows.push(row("(x1x2x3, x2^2x3^2) with x1^2, x2^3, x3^4 adjoined", || {
        let j = ideal(&[&[1, 1, 1], &[0, 2, 2]])?;
        let powers = [(1, 2), (2, 3), (3, 4)];
        let cond = adjoin_pure_powers_condition(&j, &powers)?;
        let l = adjoin_pure_powers(&j, &powers)?;
        let smooth = check_smooth_ideal(&l)?.is_smooth();
        Ok((cond && smooth && l.len() == 5, format!("condition {cond}, smooth {smooth}")))
    }));
    rows.push(row("(x1x2^2x3^2, x2^3x3^3) is smooth", || {
        let i = ideal(&[&[1, 2, 2], &[0, 3, 3]])?;
        let v = check_smooth_ideal(&i)?;
        Ok((v.is_smooth(), if v.is_smooth() { "YES".into() } else { "NO".into() }))
    }));
    rows.push(row("(x1x2x3^2, x2^3x3^3) is not smooth", || {
        let i = ideal(&[&[1, 1, 2], &[0, 3, 3]])?;
        Ok(match check_smooth_ideal(&i)?.witness() {
            Some(w) => (
                (w.variable, w.expected, w.found) == (3, 2, 1)
                    && w.first_positions == [9, 12]
                    && w.second_positions == [12, 15, 18],
                format!("NO {w}"),
            ),
            None => (false, "YES".into()),
        })
    }));
    rows.push(row("(x1^2x2^2, x2^3) keeps its lcm-lattice", || {
        let i = ideal(&[&[2, 2], &[0, 3]])?;
        let s = spread_ideal(&i, 2)?;
        let same = s == squarefree(s.ambient(), &[&[1, 3, 6, 8], &[2, 4, 6]])?;
        let iso = is_isomorphic(&LcmLattice::build(&i)?, &LcmLattice::build(&s)?).is_some();
        let smooth = check_smooth_ideal(&i)?.is_smooth();
        Ok((same && iso && !smooth, format!("{s}, iso {iso}, smooth {smooth}")))
    }));
    rows.push(row("(x1^4, x1^2x2, x2^2) changes its lcm-lattice", || {
        let i = ideal(&[&[4, 0], &[2, 1], &[0, 2]])?;
        let s = spread_ideal(&i, 2)?;
        let same = s == squarefree(s.ambient(), &[&[1, 3, 5, 7], &[1, 3, 6], &[2, 4]])?;
        let iso = is_isomorphic(&LcmLattice::build(&i)?, &LcmLattice::build(&s)?).is_some();
        Ok((same && !iso, format!("{s}, iso {iso}")))
    }));
    rows.push(row("smooth (x1x2x3, x2^2x3): invariants shift at t = 3, 4", || {
        let i = ideal(&[&[1, 1, 1], &[0, 2, 1]])?;
        let r = verify_spreading_laws(&i, &[4])?;
        let shifts = r.checks.iter().filter(|c| c.name.contains("smooth shift")).count();
        Ok((
            r.smooth && r.all_hold() && shifts == 6,
            format!("{} checks, {shifts} smooth shifts", r.checks.len()),
        ))
    }));
    rows.push(row("(x1^2x2, x2^2): bounds at t = 2", || {
        let i = ideal(&[&[2, 1], &[0, 2]])?;
        let base = depth_quotient(&i)?.value;
        let spread = depth_quotient(&spread_ideal_padded(&i, 2)?)?.value;
        let r = verify_spreading_laws(&i, &[])?;
        let bounds = r.checks.iter().filter(|c| c.name.ends_with("bound")).collect::<Vec<_>>();
        let ok = spread == 4 && base + 4 == 4 && bounds.len() == 3 && bounds.iter().all(|c| c.holds);
        Ok((ok, format!("depth {spread} <= {base} + 4")))
    }));

    rows
}
