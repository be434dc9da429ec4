//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the table is always printed. Random
//! samples come from ChaCha8 streams with fixed seeds.

mod common;

use std::time::{Duration, Instant};

use monospread::depth::betti_table;
use monospread::smooth::{adjoin_disjoint, adjoin_pure_powers, adjoin_pure_powers_condition, product_construct};
use monospread::{
    build_delta, check_smooth, check_smooth_ideal, check_smooth_t2, depth_quotient, is_isomorphic,
    spread_ideal, spread_ideal_padded, verify_certificate, verify_delta, verify_spreading_laws,
    Error, LcmLattice, Monomial, MonomialIdeal, SmoothCertificate, T2Verdict,
};
use monospread_cli::ideal_file::{parse_ideal, write_ideal};
use monospread_oracles::{smooth_by_exhaustion, taylor_betti};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

struct Criterion {
    id: usize,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn lib<T>(r: monospread::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn m(e: &[u16]) -> Monomial {
    Monomial::new(e.to_vec()).unwrap()
}

fn ideal(rows: &[&[u16]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(rows).unwrap()
}

fn squarefree(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
    let gens = gens.iter().map(|g| Monomial::from_indices(n, g).unwrap()).collect();
    MonomialIdeal::new(n, gens).unwrap()
}

fn raw(gens: &[Monomial]) -> Vec<Vec<u32>> {
    gens.iter()
        .map(|u| u.exponents().iter().map(|&e| u32::from(e)).collect())
        .collect()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_monomial(r: &mut ChaCha8Rng, n: usize, max_e: u16) -> Monomial {
    Monomial::new((0..n).map(|_| r.gen_range(0..=max_e)).collect()).unwrap()
}

/// Up to `max_m` random nonunit monomials in `n` variables, or `None` if all
/// drawn monomials are the unit.
fn random_ideal(r: &mut ChaCha8Rng, n: usize, max_m: usize, max_e: u16) -> Option<MonomialIdeal> {
    let m = r.gen_range(1..=max_m);
    let gens: Vec<Monomial> = (0..m)
        .map(|_| random_monomial(r, n, max_e))
        .filter(|u| !u.is_unit())
        .collect();
    (!gens.is_empty()).then(|| MonomialIdeal::new(n, gens).unwrap())
}

/// A complete intersection: every variable goes to one of `k` generators or
/// to none.
fn random_ci(r: &mut ChaCha8Rng, n: usize, max_e: u16) -> Option<MonomialIdeal> {
    let k = r.gen_range(1..=n);
    let mut rows = vec![vec![0u16; n]; k];
    for j in 0..n {
        if r.gen_bool(0.8) {
            rows[r.gen_range(0..k)][j] = r.gen_range(1..=max_e);
        }
    }
    let gens: Vec<Monomial> = rows
        .into_iter()
        .filter(|row| row.iter().any(|&e| e > 0))
        .map(|row| Monomial::new(row).unwrap())
        .collect();
    (!gens.is_empty()).then(|| MonomialIdeal::new(n, gens).unwrap())
}

fn example_pair_replay() -> Outcome {
    let smooth = [m(&[1, 1, 1]), m(&[0, 2, 1])];
    let verdict = lib(check_smooth(&smooth))?;
    let cert = verdict.certificate().ok_or("first pair reported NO")?;
    ensure(lib(verify_certificate(&smooth, cert))?, || "returned certificate fails".into())?;
    let tau = lib(SmoothCertificate::from_permutation(3, 3, vec![1, 5, 6, 4, 2, 9, 7, 8, 3]))?;
    ensure(tau.cycle_notation() == "(2 5)(3 6 9)", || tau.cycle_notation())?;
    ensure(lib(verify_certificate(&smooth, &tau))?, || "explicit tau rejected".into())?;
    let rigid = [m(&[3, 1, 2]), m(&[1, 2, 3])];
    let verdict = lib(check_smooth(&rigid))?;
    let w = verdict.witness().ok_or("second pair reported YES")?;
    Ok(format!("YES tau {}; NO {w}", cert.cycle_notation()))
}

fn position_pair_replay() -> Outcome {
    let yes = ideal(&[&[1, 2, 2], &[0, 3, 3]]);
    ensure(lib(check_smooth_ideal(&yes))?.is_smooth(), || "first pair reported NO".into())?;
    let no = ideal(&[&[1, 1, 2], &[0, 3, 3]]);
    let verdict = lib(check_smooth_ideal(&no))?;
    let w = verdict.witness().ok_or("second pair reported YES")?;
    ensure((w.variable, w.expected, w.found) == (3, 2, 1), || format!("witness {w}"))?;
    Ok(format!("NO {w}"))
}

fn spread_ci_replay() -> Outcome {
    let i = ideal(&[&[3, 0, 0], &[0, 1, 1]]);
    ensure(i.is_complete_intersection(), || "(x1^3, x2x3) not c.i.".into())?;
    for t in 1..=2 {
        let s = lib(spread_ideal(&i, t))?;
        ensure(!s.is_complete_intersection(), || format!("t={t} spread {s} is c.i."))?;
    }
    ensure(
        lib(spread_ideal(&i, 1))? == squarefree(5, &[&[1, 2, 3], &[2, 4]]),
        || "t=1 spread".into(),
    )?;
    ensure(
        lib(spread_ideal(&i, 2))? == squarefree(7, &[&[1, 3, 5], &[2, 5]]),
        || "t=2 spread".into(),
    )?;
    for t in 3..=5 {
        let s = lib(spread_ideal(&i, t))?;
        let e = squarefree(s.ambient(), &[&[1, t + 1, 2 * t + 1], &[2, 3 + t]]);
        ensure(s == e && s.is_complete_intersection(), || format!("t={t}: {s}"))?;
    }
    let j = ideal(&[&[2, 1], &[0, 2]]);
    let s = lib(spread_ideal(&j, 2))?;
    ensure(
        s == squarefree(6, &[&[1, 3, 6], &[2, 4]]) && s.is_complete_intersection(),
        || format!("{s}"),
    )?;
    Ok("(x1^3, x2x3) t=1..5 and (x1^2x2, x2^2) t=2 as recorded".into())
}

fn checker_vs_exhaustion() -> Outcome {
    let mut r = rng(0x5EED_0004);
    let mut tried = 0;
    let mut smooth = 0;
    while tried < 600 {
        let n = r.gen_range(1..=3);
        let k = r.gen_range(1..=3);
        let set: Vec<Monomial> = (0..k)
            .map(|_| random_monomial(&mut r, n, 3))
            .filter(|u| !u.is_unit() && u.degree() <= 4)
            .collect();
        if set.is_empty() {
            continue;
        }
        tried += 1;
        let fast = lib(check_smooth(&set))?.is_smooth();
        let brute = smooth_by_exhaustion(&raw(&set)).is_some();
        ensure(fast == brute, || format!("disagree on {set:?}: checker {fast}, search {brute}"))?;
        smooth += usize::from(fast);
    }
    Ok(format!("{tried} sets agree ({smooth} smooth)"))
}

fn closure_properties() -> Outcome {
    let mut r = rng(0x5EED_0005);

    let mut ci = 0;
    while ci < 250 {
        let n = r.gen_range(1..=4);
        let Some(i) = random_ci(&mut r, n, 3) else { continue };
        ensure(lib(check_smooth_ideal(&i))?.is_smooth(), || format!("c.i. {i} not smooth"))?;
        ci += 1;
    }

    let mut adjoined = 0;
    while adjoined < 120 {
        let n = r.gen_range(1..=3);
        let Some(i) = random_ideal(&mut r, n, 3, 3) else { continue };
        let extra = r.gen_range(1..=2);
        let mut v = vec![0u16; n];
        v.extend((0..extra).map(|_| r.gen_range(0..=3)));
        let v = m(&v);
        if v.is_unit() {
            continue;
        }
        let j = lib(adjoin_disjoint(&i, &v))?;
        let (a, b) = (
            lib(check_smooth_ideal(&i))?.is_smooth(),
            lib(check_smooth_ideal(&j))?.is_smooth(),
        );
        ensure(a == b, || format!("{i}: {a}, with {v}: {b}"))?;
        adjoined += 1;
    }

    let mut powers_checked = 0;
    let mut attempts = 0;
    while powers_checked < 120 {
        attempts += 1;
        if attempts > 100_000 {
            return Err(format!("only {powers_checked} pure-power constructions found"));
        }
        let n = r.gen_range(2..=3);
        let Some(i) = random_ideal(&mut r, n, 3, 2) else { continue };
        if !lib(check_smooth_ideal(&i))?.is_smooth() {
            continue;
        }
        let mut powers = Vec::new();
        for j in 1..=n {
            if r.gen_bool(0.6) {
                powers.push((j, r.gen_range(1..=5u16)));
            }
        }
        if powers.is_empty() {
            continue;
        }
        match adjoin_pure_powers_condition(&i, &powers) {
            Ok(true) => {}
            Ok(false) | Err(Error::NotMinimal(_)) => continue,
            Err(e) => return Err(e.to_string()),
        }
        let l = lib(adjoin_pure_powers(&i, &powers))?;
        ensure(lib(check_smooth_ideal(&l))?.is_smooth(), || {
            format!("{i} with powers {powers:?} gives non-smooth {l}")
        })?;
        powers_checked += 1;
    }

    let mut products = 0;
    let mut attempts = 0;
    while products < 120 {
        attempts += 1;
        if attempts > 100_000 {
            return Err(format!("only {products} product constructions found"));
        }
        let n = r.gen_range(1..=2);
        let d = r.gen_range(1..=3u32);
        let left: Vec<Monomial> = (0..r.gen_range(1..=3))
            .map(|_| random_monomial(&mut r, n, 3))
            .filter(|u| u.degree() == d)
            .collect();
        let n2 = n + r.gen_range(1..=2);
        let right: Vec<Monomial> = (0..r.gen_range(1..=2))
            .map(|_| {
                let mut e = vec![0u16; n];
                e.extend((n..n2).map(|_| r.gen_range(0..=2)));
                m(&e)
            })
            .filter(|u| !u.is_unit())
            .collect();
        if left.is_empty() || right.is_empty() {
            continue;
        }
        if !lib(check_smooth(&left))?.is_smooth() || !lib(check_smooth(&right))?.is_smooth() {
            continue;
        }
        let prod = lib(product_construct(&left, &right))?;
        ensure(lib(check_smooth(&prod))?.is_smooth(), || {
            format!("{left:?} times {right:?} not smooth")
        })?;
        products += 1;
    }
    Ok(format!(
        "{ci} c.i., {adjoined} disjoint adjunctions, {powers_checked} pure-power, {products} product"
    ))
}

fn staircase_conditions() -> Outcome {
    let mut r = rng(0x5EED_0006);
    let mut tried = 0;
    let mut literal_clause_broken = 0;
    while tried < 600 {
        let Some(i) = random_ideal(&mut r, 2, 4, 4) else { continue };
        tried += 1;
        let mut g: Vec<(i32, i32)> = i
            .generators()
            .iter()
            .map(|u| (i32::from(u.exponent(1)), i32::from(u.exponent(2))))
            .collect();
        g.sort_by_key(|x| std::cmp::Reverse(x.0));
        let s: Vec<i32> = g.iter().map(|&(a, b)| a + b).collect();
        let k = s.len();
        let smooth = lib(check_smooth_ideal(&i))?.is_smooth();
        let sufficient = s.windows(2).all(|w| w[0] <= w[1]);
        ensure(!sufficient || smooth, || format!("{i}: nondecreasing degrees but not smooth"))?;
        if smooth && k >= 2 {
            let inner = k < 3 || s[1..k - 1].windows(2).all(|w| w[0] <= w[1]);
            let head = g[0].1 == 0 || s[0] <= s[1];
            let tail = g[k - 1].0 == 0 || g[k - 2].1 == 0 || s[k - 2] <= s[k - 1];
            ensure(inner && head && tail, || format!("{i}: smooth but staircase chain fails"))?;
            if g[k - 1].0 > 0 && s[k - 2] > s[k - 1] {
                literal_clause_broken += 1;
            }
        }
        let verdict = lib(check_smooth_t2(&i))?;
        let consistent = match verdict {
            T2Verdict::SufficientHolds => smooth,
            T2Verdict::NecessaryFails => !smooth,
            T2Verdict::Indeterminate => true,
        };
        ensure(consistent, || format!("{i}: shortcut {verdict:?}, checker {smooth}"))?;
    }
    Ok(format!(
        "{tried} ideals; {literal_clause_broken} smooth ideals need the b_(m-1) > 0 guard"
    ))
}

fn lattice_replay() -> Outcome {
    let keep = ideal(&[&[2, 2], &[0, 3]]);
    let s = lib(spread_ideal(&keep, 2))?;
    ensure(s == squarefree(8, &[&[1, 3, 6, 8], &[2, 4, 6]]), || format!("{s}"))?;
    let iso = is_isomorphic(&lib(LcmLattice::build(&keep))?, &lib(LcmLattice::build(&s))?);
    ensure(iso.is_some(), || "first pair not isomorphic".into())?;
    let change = ideal(&[&[4, 0], &[2, 1], &[0, 2]]);
    let s = lib(spread_ideal(&change, 2))?;
    ensure(s == squarefree(8, &[&[1, 3, 5, 7], &[1, 3, 6], &[2, 4]]), || format!("{s}"))?;
    let iso = is_isomorphic(&lib(LcmLattice::build(&change))?, &lib(LcmLattice::build(&s))?);
    ensure(iso.is_none(), || "second pair isomorphic".into())?;
    Ok("ISO and NONISO as recorded".into())
}

fn delta_suite() -> Outcome {
    let mut r = rng(0x5EED_0008);
    let mut tried = 0;
    let mut smooth = 0;
    let mut violations = Vec::new();
    while tried < 250 {
        let n = r.gen_range(1..=3);
        let Some(i) = random_ideal(&mut r, n, 4, 3) else { continue };
        tried += 1;
        match build_delta(&i) {
            Ok(map) => {
                if !verify_delta(&map) {
                    violations.push(format!("{i}: δ fails verification"));
                }
            }
            Err(Error::WellDefinednessViolation(why)) => {
                violations.push(format!("{i}: δ not well defined ({why})"));
            }
            Err(e) => return Err(e.to_string()),
        }
        if lib(check_smooth_ideal(&i))?.is_smooth() {
            smooth += 1;
            let s = lib(spread_ideal(&i, n))?;
            let iso = is_isomorphic(&lib(LcmLattice::build(&i))?, &lib(LcmLattice::build(&s))?);
            if iso.is_none() {
                violations.push(format!("{i}: smooth but lattices differ"));
            }
        }
    }
    if violations.is_empty() {
        Ok(format!("{tried} ideals, {smooth} smooth, no violations"))
    } else {
        Err(format!("{} of {tried} violate: {}", violations.len(), violations.join("; ")))
    }
}

fn betti_cross_oracle() -> Outcome {
    let mut r = rng(0x5EED_0009);
    let mut tried = 0;
    while tried < 120 {
        let n = r.gen_range(1..=4);
        let Some(i) = random_ideal(&mut r, n, 4, 3) else { continue };
        tried += 1;
        let ours: std::collections::BTreeMap<(usize, Vec<u32>), usize> = lib(betti_table(&i))?
            .entries
            .into_iter()
            .map(|e| {
                let md = e.multidegree.exponents().iter().map(|&x| u32::from(x)).collect();
                ((e.homological, md), e.value)
            })
            .collect();
        ensure(ours == taylor_betti(&raw(i.generators())), || format!("Betti numbers of {i}"))?;
    }
    let mut sanity = 0;
    while sanity < 120 {
        let n = r.gen_range(1..=5);
        let (i, expected) = if sanity % 2 == 0 {
            let u = random_monomial(&mut r, n, 3);
            if u.is_unit() {
                continue;
            }
            (MonomialIdeal::new(n, vec![u]).unwrap(), n - 1)
        } else {
            let Some(i) = random_ci(&mut r, n, 3) else { continue };
            let k = i.len();
            (i, n - k)
        };
        let got = lib(depth_quotient(&i))?.value;
        ensure(got == expected, || format!("depth of {i}: {got}, expected {expected}"))?;
        sanity += 1;
    }
    Ok(format!("{tried} Betti tables agree, {sanity} depth checks"))
}

/// Every ideal with at most `max_m` generators in `n <= 3` variables whose
/// degree `d` satisfies `n d <= 6`.
fn ideals_with_small_polarization(max_m: usize) -> Vec<MonomialIdeal> {
    let mut all = Vec::new();
    for n in 1..=3usize {
        let budget = 6 / n;
        let mut monos = Vec::new();
        let mut e = vec![0u16; n];
        loop {
            let deg: usize = e.iter().map(|&x| x as usize).sum();
            if deg >= 1 && deg <= budget {
                monos.push(m(&e));
            }
            let Some(k) = (0..n).find(|&k| (e[k] as usize) < budget) else { break };
            e[k] += 1;
            for x in &mut e[..k] {
                *x = 0;
            }
        }
        let mut stack: Vec<Vec<usize>> = (0..monos.len()).map(|k| vec![k]).collect();
        while let Some(choice) = stack.pop() {
            let gens: Vec<Monomial> = choice.iter().map(|&k| monos[k].clone()).collect();
            let antichain = gens.iter().enumerate().all(|(a, u)| {
                gens.iter().enumerate().all(|(b, v)| a == b || !u.divides(v).unwrap())
            });
            if !antichain {
                continue;
            }
            if choice.len() < max_m {
                for k in choice.last().unwrap() + 1..monos.len() {
                    let mut next = choice.clone();
                    next.push(k);
                    stack.push(next);
                }
            }
            all.push(MonomialIdeal::from_minimal(n, gens).unwrap());
        }
    }
    all.sort_by_key(|i| i.to_string());
    all
}

fn law_harness() -> Outcome {
    let mut r = rng(0x5EED_0010);
    let population = ideals_with_small_polarization(4);
    let picks = rand::seq::index::sample(&mut r, population.len(), 60);
    let mut tried = 0;
    let mut iso = 0;
    let mut violations = Vec::new();
    for k in picks.iter() {
        let i = &population[k];
        tried += 1;
        let report = lib(verify_spreading_laws(i, &[i.ambient() + 1]))?;
        iso += usize::from(report.lattices_isomorphic);
        for c in report.failures() {
            violations.push(format!("{i}: {} ({})", c.name, c.detail));
        }
    }

    let smooth = ideal(&[&[1, 1, 1], &[0, 2, 1]]);
    let report = lib(verify_spreading_laws(&smooth, &[4]))?;
    let shifts = report.checks.iter().filter(|c| c.name.contains("smooth shift")).count();
    if !report.smooth || shifts != 6 || !report.all_hold() {
        violations.push(format!("{smooth}: smooth shifts at t = 3, 4 fail"));
    }

    let stair = ideal(&[&[2, 1], &[0, 2]]);
    let base = lib(depth_quotient(&stair))?.value;
    let spread = lib(depth_quotient(&lib(spread_ideal_padded(&stair, 2))?))?.value;
    if !(spread == 4 && base + 4 == 4) {
        violations.push(format!("{stair}: depth {spread} vs {base} + 4"));
    }

    if violations.is_empty() {
        Ok(format!(
            "{tried} of {} ideals ({iso} with isomorphic lattices), no violations",
            population.len()
        ))
    } else {
        Err(format!(
            "{} violations in {tried} of {} ideals: {}",
            violations.len(),
            population.len(),
            violations.join("; ")
        ))
    }
}

fn cli_contract() -> Outcome {
    let o = common::cli(&["verify-paper"]);
    ensure(o.code == 0 && !o.stdout.contains("FAIL"), || format!("verify-paper:\n{}", o.stdout))?;
    let rows = o.stdout.lines().count() - 1;
    let fixtures = common::fixtures();
    for path in &fixtures {
        let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
        let i = parse_ideal(&text).map_err(|e| e.to_string())?.ideal;
        let printed = write_ideal(&i);
        let back = parse_ideal(&printed).map_err(|e| e.to_string())?.ideal;
        ensure(back == i && write_ideal(&back) == printed, || {
            format!("{} does not round-trip", path.display())
        })?;
    }
    let first = common::transcript();
    ensure(first == common::transcript(), || "transcript differs between runs".into())?;
    let snapshot = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/expected/transcript.txt");
    let expected = std::fs::read_to_string(&snapshot).map_err(|e| e.to_string())?;
    ensure(first == expected, || "transcript differs from the snapshot".into())?;
    Ok(format!(
        "{rows} replay rows, {} fixtures x {} commands byte-exact",
        fixtures.len(),
        common::COMMANDS.len()
    ))
}

fn main() {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, name: "three-variable pair replay", limit: secs(1), run: example_pair_replay },
        Criterion { id: 2, name: "position-set pair replay", limit: secs(1), run: position_pair_replay },
        Criterion { id: 3, name: "spread and c.i. replay", limit: secs(1), run: spread_ci_replay },
        Criterion { id: 4, name: "checker vs exhaustive search", limit: secs(60), run: checker_vs_exhaustion },
        Criterion { id: 5, name: "closure constructions", limit: secs(60), run: closure_properties },
        Criterion { id: 6, name: "two-variable staircase conditions", limit: secs(30), run: staircase_conditions },
        Criterion { id: 7, name: "lcm-lattice replay", limit: secs(1), run: lattice_replay },
        Criterion { id: 8, name: "comparison map suite", limit: secs(60), run: delta_suite },
        Criterion { id: 9, name: "Betti cross-oracle and depth sanity", limit: secs(120), run: betti_cross_oracle },
        Criterion { id: 10, name: "depth and Stanley depth laws", limit: secs(300), run: law_harness },
        Criterion { id: 11, name: "CLI contract", limit: secs(10), run: cli_contract },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let took = start.elapsed();
        let (pass, detail) = match outcome {
            Ok(d) if took <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}; took {took:.2?}, limit {:?}", c.limit)),
            Err(e) => (false, e),
        };
        failed += usize::from(!pass);
        let mark = if pass { "PASS" } else { "FAIL" };
        println!("acceptance {:>2} {mark} {} [{took:.2?}]: {detail}", c.id, c.name);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
