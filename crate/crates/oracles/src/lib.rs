//! Slow, literal reference computations for cross-checking `monospread`.
//!
//! Everything here works on plain exponent vectors (`Vec<u32>`, one entry per
//! variable) and deliberately shares no code with the main crate. The
//! algorithms are the naive ones: enumerate every permutation, every subset,
//! every partition. Keep inputs tiny.

use std::collections::{BTreeMap, HashMap};

pub type Exps = Vec<u32>;

fn degree(u: &[u32]) -> usize {
    u.iter().map(|&a| a as usize).sum()
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Drop duplicates and non-minimal entries; output is sorted.
pub fn minimal(gens: &[Exps]) -> Vec<Exps> {
    let mut out: Vec<Exps> = Vec::new();
    for (k, u) in gens.iter().enumerate() {
        let redundant = gens
            .iter()
            .enumerate()
            .any(|(l, v)| l != k && divides(v, u) && (v != u || l < k));
        if !redundant {
            out.push(u.clone());
        }
    }
    out.sort();
    out
}

/// Variables of `σ^n(u)` as 1-based indices: the `k`-th smallest variable
/// index `i_k` (with repetition) moves to `i_k + (k - 1) n`.
pub fn spread_support(u: &[u32], n: usize) -> Vec<usize> {
    let mut idx = Vec::new();
    for (j, &a) in u.iter().enumerate() {
        for _ in 0..a {
            idx.push(j + 1);
        }
    }
    idx.iter().enumerate().map(|(k, &i)| i + k * n).collect()
}

/// Variables of the polarization `u^p`: `x_j x_{j+n} ⋯ x_{j+(a_j-1)n}` for
/// each `j`.
pub fn polar_support(u: &[u32], n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for (j, &a) in u.iter().enumerate() {
        for s in 0..a as usize {
            out.push(j + 1 + s * n);
        }
    }
    out.sort_unstable();
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// Search every permutation `τ` of `{1, …, nd}` that preserves residues
/// mod `n` for one sending the variables of `σ^n(u)` onto those of `u^p`
/// for every `u` in `set`. Returns `τ` (as `tau[k-1] = τ(k)`) if found.
///
/// `d` defaults to the largest degree in `set`.
pub fn smooth_by_exhaustion(set: &[Exps]) -> Option<Vec<usize>> {
    let n = set.first().map_or(0, |u| u.len());
    let d = set.iter().map(|u| degree(u)).max().unwrap_or(0);
    if n == 0 || d == 0 {
        return Some(Vec::new());
    }
    let spreads: Vec<Vec<usize>> = set.iter().map(|u| spread_support(u, n)).collect();
    let polars: Vec<Vec<usize>> = set.iter().map(|u| polar_support(u, n)).collect();
    let perms = permutations(d);
    // τ acts on each residue class separately and a residue class of σ^n(u)
    // must land on the same class of u^p, so the classes can be searched one
    // at a time without losing any permutation.
    let mut tau = vec![0usize; n * d];
    for j in 1..=n {
        let class = |v: &[usize]| -> Vec<usize> {
            v.iter().copied().filter(|&k| (k - 1) % n == j - 1).collect()
        };
        let found = perms.iter().find(|p| {
            spreads.iter().zip(&polars).all(|(sp, po)| {
                let mut image: Vec<usize> =
                    class(sp).iter().map(|&k| p[(k - 1) / n] * n + j).collect();
                image.sort_unstable();
                image == class(po)
            })
        })?;
        for s in 0..d {
            tau[s * n + j - 1] = found[s] * n + j;
        }
    }
    Some(tau)
}

/// Rank over GF(2) by plain row reduction on boolean rows.
fn rank_gf2(mut rows: Vec<Vec<bool>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col]) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][col] {
                let pivot = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Multigraded Betti numbers of `S/I` over GF(2) from the Taylor complex.
///
/// In multidegree `b` the Taylor complex tensored with the field keeps the
/// basis elements `e_F` with `lcm(F) = b`, in homological degree `|F|`, and
/// the face `F \ {x}` survives in the boundary exactly when it has the same
/// lcm. The result maps `(i, b)` to the nonzero `b_{i,b}`.
pub fn taylor_betti(gens: &[Exps]) -> BTreeMap<(usize, Exps), usize> {
    let gens = minimal(gens);
    let m = gens.len();
    let n = gens.first().map_or(0, Vec::len);
    let mut strands: HashMap<Exps, Vec<u32>> = HashMap::new();
    for mask in 0u32..(1 << m) {
        let mut l = vec![0; n];
        for (k, g) in gens.iter().enumerate() {
            if mask & (1 << k) != 0 {
                l = lcm(&l, g);
            }
        }
        strands.entry(l).or_default().push(mask);
    }
    let mut out = BTreeMap::new();
    for (b, masks) in strands {
        let mut by_size: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for &f in &masks {
            by_size.entry(f.count_ones() as usize).or_default().push(f);
        }
        let top = by_size.keys().copied().max().unwrap_or(0);
        // rank of the map from size i to size i - 1
        let mut ranks = vec![0usize; top + 2];
        for i in 1..=top {
            let (Some(src), Some(dst)) = (by_size.get(&i), by_size.get(&(i - 1))) else {
                continue;
            };
            let rows: Vec<Vec<bool>> = src
                .iter()
                .map(|&f| dst.iter().map(|&g| g & f == g && (f ^ g).count_ones() == 1).collect())
                .collect();
            ranks[i] = rank_gf2(rows);
        }
        for i in 0..=top {
            let dim = by_size.get(&i).map_or(0, Vec::len);
            let h = dim - ranks[i] - ranks[i + 1];
            if h > 0 {
                out.insert((i, b.clone()), h);
            }
        }
    }
    out
}

/// `n - max{i : b_i != 0}` from [`taylor_betti`].
pub fn taylor_depth(gens: &[Exps]) -> usize {
    let n = gens.first().map_or(0, Vec::len);
    let pd = taylor_betti(gens).keys().map(|(i, _)| *i).max().unwrap_or(0);
    n - pd
}

/// Decide whether the lcm-lattices of two ideals are isomorphic by trying
/// every bijection of minimal generators and comparing which subsets share
/// an lcm.
pub fn lcm_lattices_isomorphic(a: &[Exps], b: &[Exps]) -> bool {
    let a = minimal(a);
    let b = minimal(b);
    if a.len() != b.len() {
        return false;
    }
    let m = a.len();
    let labels = |gens: &[Exps]| -> Vec<Exps> {
        let n = gens.first().map_or(0, Vec::len);
        (0u32..(1 << m))
            .map(|mask| {
                let mut l = vec![0; n];
                for (k, g) in gens.iter().enumerate() {
                    if mask & (1 << k) != 0 {
                        l = lcm(&l, g);
                    }
                }
                l
            })
            .collect()
    };
    let la = labels(&a);
    let lb = labels(&b);
    permutations(m).into_iter().any(|p| {
        let image = |mask: u32| -> usize {
            (0..m)
                .filter(|&k| mask & (1 << k) != 0)
                .fold(0, |acc, k| acc | 1 << p[k])
        };
        (0u32..(1 << m)).all(|x| {
            (0u32..(1 << m)).all(|y| (la[x as usize] == la[y as usize]) == (lb[image(x)] == lb[image(y)]))
        })
    })
}

/// Stanley depth by trying every interval partition of the relevant side of
/// `[0, g]`, `g` the lcm exponent vector. `of_ideal` selects the points in
/// the ideal; otherwise the points outside it.
pub fn sdepth_by_exhaustion(gens: &[Exps], of_ideal: bool) -> usize {
    let gens = minimal(gens);
    let n = gens.first().map_or(0, Vec::len);
    let g = gens.iter().fold(vec![0; n], |acc, u| lcm(&acc, u));
    let mut points: Vec<Exps> = vec![Vec::new()];
    for &gj in &g {
        points = points
            .into_iter()
            .flat_map(|p| {
                (0..=gj).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    points.retain(|c| gens.iter().any(|u| divides(u, c)) == of_ideal);
    points.sort();
    assert!(points.len() <= 128, "poset too large for the exhaustive oracle");
    best_partition(&points, &g, 0, &mut HashMap::new()).unwrap_or(0)
}

/// Best achievable minimum score for the points not in `covered`, trying
/// every interval through the least uncovered point. Memoized on `covered`.
fn best_partition(
    points: &[Exps],
    g: &[u32],
    covered: u128,
    memo: &mut HashMap<u128, Option<usize>>,
) -> Option<usize> {
    let Some(low) = (0..points.len()).find(|&k| covered & (1 << k) == 0) else {
        return Some(usize::MAX);
    };
    if let Some(&v) = memo.get(&covered) {
        return v;
    }
    let mut best: Option<usize> = None;
    for hi in 0..points.len() {
        if covered & (1 << hi) != 0 || !divides(&points[low], &points[hi]) {
            continue;
        }
        let members: Vec<usize> = (0..points.len())
            .filter(|&k| divides(&points[low], &points[k]) && divides(&points[k], &points[hi]))
            .collect();
        let size: usize = points[low]
            .iter()
            .zip(&points[hi])
            .map(|(a, b)| (b - a + 1) as usize)
            .product();
        if members.len() != size || members.iter().any(|&k| covered & (1 << k) != 0) {
            continue;
        }
        let score = points[hi].iter().zip(g).filter(|(x, y)| x == y).count();
        let mask = members.iter().fold(covered, |acc, &k| acc | 1 << k);
        if let Some(rest) = best_partition(points, g, mask, memo) {
            let v = rest.min(score);
            best = Some(best.map_or(v, |b| b.max(v)));
        }
    }
    memo.insert(covered, best);
    best
}
