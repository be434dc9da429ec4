//! lcm-lattices of monomial ideals, lattice isomorphism, and the comparison
//! map from the lattice of `I^{σ^n}` down to the lattice of `I`.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::spread::spread_ideal;

/// Largest generator count accepted by the lattice builders.
pub const MAX_ATOMS: usize = 20;

/// Largest element count for which the order, join and meet tables are built.
pub const MAX_ELEMENTS: usize = 4096;

/// The lcm-lattice `L_I`: all lcms of subsets of `G(I)` ordered by
/// divisibility, with `1` at the bottom.
///
/// Elements are stored sorted lexicographically by exponent vector, so the
/// bottom is always element `0`.
#[derive(Clone, Debug)]
pub struct LcmLattice {
    ambient: usize,
    atoms: Vec<Monomial>,
    elements: Vec<Monomial>,
    /// `atom_sets[e]`: bitmask of the atoms dividing element `e`.
    atom_sets: Vec<u32>,
    /// `atom_index[k]`: element index of atom `k`.
    atom_index: Vec<usize>,
    leq: Vec<Vec<bool>>,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
    covers: Vec<(usize, usize)>,
    top: usize,
}

impl LcmLattice {
    /// Builds `L_I`.
    pub fn build(i: &MonomialIdeal) -> Result<Self> {
        if i.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        if i.len() > MAX_ATOMS {
            return Err(Error::TooLarge {
                what: "lcm-lattice generators",
                size: i.len(),
                cap: MAX_ATOMS,
            });
        }
        let atoms = i.generators().to_vec();
        let bottom = Monomial::unit(i.ambient())?;

        // Closure of {1} under lcm with atoms yields every subset lcm.
        let mut elements = vec![bottom.clone()];
        let mut index: HashMap<Monomial, usize> = HashMap::from([(bottom, 0)]);
        let mut frontier = 0;
        while frontier < elements.len() {
            let e = elements[frontier].clone();
            frontier += 1;
            for a in &atoms {
                let j = e.lcm_unchecked(a);
                if !index.contains_key(&j) {
                    index.insert(j.clone(), elements.len());
                    elements.push(j);
                    if elements.len() > MAX_ELEMENTS {
                        return Err(Error::TooLarge {
                            what: "lcm-lattice elements",
                            size: elements.len(),
                            cap: MAX_ELEMENTS,
                        });
                    }
                }
            }
        }
        elements.sort();
        Ok(Self::from_elements(i.ambient(), atoms, elements))
    }

    fn from_elements(ambient: usize, atoms: Vec<Monomial>, elements: Vec<Monomial>) -> Self {
        let size = elements.len();
        let index: HashMap<&Monomial, usize> =
            elements.iter().enumerate().map(|(k, e)| (e, k)).collect();
        let atom_index: Vec<usize> = atoms.iter().map(|a| index[a]).collect();
        let atom_sets: Vec<u32> = elements
            .iter()
            .map(|e| {
                atoms
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.divides_unchecked(e))
                    .fold(0u32, |acc, (k, _)| acc | (1 << k))
            })
            .collect();
        let leq: Vec<Vec<bool>> = elements
            .iter()
            .map(|a| elements.iter().map(|b| a.divides_unchecked(b)).collect())
            .collect();
        let join: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| index[&a.lcm_unchecked(b)])
                    .collect()
            })
            .collect();
        let mut meet = vec![vec![0; size]; size];
        for x in 0..size {
            for y in x..size {
                // greatest common lower bound inside the lattice
                let lower: Vec<usize> = (0..size).filter(|&z| leq[z][x] && leq[z][y]).collect();
                let glb = lower
                    .iter()
                    .copied()
                    .find(|&z| lower.iter().all(|&w| leq[w][z]))
                    .expect("finite lattice has meets");
                meet[x][y] = glb;
                meet[y][x] = glb;
            }
        }
        let mut covers = Vec::new();
        for x in 0..size {
            for y in 0..size {
                if x != y
                    && leq[x][y]
                    && !(0..size).any(|z| z != x && z != y && leq[x][z] && leq[z][y])
                {
                    covers.push((x, y));
                }
            }
        }
        let top = (0..size)
            .find(|&t| (0..size).all(|e| leq[e][t]))
            .expect("lattice has a top");
        LcmLattice {
            ambient,
            atoms,
            elements,
            atom_sets,
            atom_index,
            leq,
            join,
            meet,
            covers,
            top,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn element(&self, e: usize) -> &Monomial {
        &self.elements[e]
    }

    /// The generators, in the order of `G(I)`.
    pub fn atoms(&self) -> &[Monomial] {
        &self.atoms
    }

    /// Element index of each atom.
    pub fn atom_indices(&self) -> &[usize] {
        &self.atom_index
    }

    /// Bitmask of atoms (by position in [`LcmLattice::atoms`]) below `e`.
    pub fn atom_set(&self, e: usize) -> u32 {
        self.atom_sets[e]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn index_of(&self, u: &Monomial) -> Option<usize> {
        self.elements.binary_search(u).ok()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    /// Greatest lower bound within the lattice (not the componentwise gcd).
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    /// Hasse diagram edges `(lower, upper)` in lexicographic order.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Length of the longest chain from the bottom to each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0; self.len()];
        // lex order on exponents is a linear extension of divisibility
        for y in 0..self.len() {
            for x in 0..y {
                if self.leq[x][y] {
                    h[y] = h[y].max(h[x] + 1);
                }
            }
        }
        h
    }

    /// Order-invariant fingerprint of an element, used to prune isomorphism
    /// search.
    fn signature(&self, e: usize, heights: &[usize]) -> (usize, usize, usize, u32) {
        let down = (0..self.len()).filter(|&x| self.leq[x][e]).count();
        let up = (0..self.len()).filter(|&x| self.leq[e][x]).count();
        (heights[e], down, up, self.atom_sets[e].count_ones())
    }
}

/// Searches for a lattice isomorphism `L1 -> L2`, returned as the image index
/// of each element of `L1`.
pub fn is_isomorphic(l1: &LcmLattice, l2: &LcmLattice) -> Option<Vec<usize>> {
    if l1.len() != l2.len() || l1.atoms.len() != l2.atoms.len() {
        return None;
    }
    let h1 = l1.heights();
    let h2 = l2.heights();
    let mut s1: Vec<_> = (0..l1.len()).map(|e| l1.signature(e, &h1)).collect();
    let mut s2: Vec<_> = (0..l2.len()).map(|e| l2.signature(e, &h2)).collect();
    let atom_sig1: Vec<_> = l1.atom_index.iter().map(|&e| s1[e]).collect();
    let atom_sig2: Vec<_> = l2.atom_index.iter().map(|&e| s2[e]).collect();
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return None;
    }

    let m = l1.atoms.len();
    let mut assign = vec![usize::MAX; m];
    let mut used = vec![false; m];
    if extend(l1, l2, &atom_sig1, &atom_sig2, 0, &mut assign, &mut used) {
        let map = induced_map(l1, l2, &assign)?;
        Some(map)
    } else {
        None
    }
}

fn map_mask(mask: u32, assign: &[usize], upto: usize) -> u32 {
    (0..upto)
        .filter(|&k| mask & (1 << k) != 0)
        .fold(0, |acc, k| acc | (1 << assign[k]))
}

fn extend(
    l1: &LcmLattice,
    l2: &LcmLattice,
    sig1: &[(usize, usize, usize, u32)],
    sig2: &[(usize, usize, usize, u32)],
    k: usize,
    assign: &mut [usize],
    used: &mut [bool],
) -> bool {
    let m = assign.len();
    if k == m {
        return induced_map(l1, l2, assign).is_some();
    }
    let placed: u32 = if k == 0 { 0 } else { (1u32 << k) - 1 };
    for c in 0..m {
        if used[c] || sig1[k] != sig2[c] {
            continue;
        }
        assign[k] = c;
        // joins of the new atom with each placed atom must agree on which
        // placed atoms they dominate
        let consistent = (0..k).all(|p| {
            let j1 = l1.join(l1.atom_index[k], l1.atom_index[p]);
            let j2 = l2.join(l2.atom_index[c], l2.atom_index[assign[p]]);
            let below1 = l1.atom_sets[j1] & (placed | (1 << k));
            let image: u32 = map_mask(below1, assign, k + 1);
            let image_used: u32 = (0..=k).fold(0, |acc, q| acc | (1 << assign[q]));
            l1.atom_sets[j1].count_ones() == l2.atom_sets[j2].count_ones()
                && (l2.atom_sets[j2] & image_used) == image
        });
        if consistent {
            used[c] = true;
            if extend(l1, l2, sig1, sig2, k + 1, assign, used) {
                return true;
            }
            used[c] = false;
        }
        assign[k] = usize::MAX;
    }
    false
}

/// Extends an atom bijection by joins and checks it is a lattice isomorphism.
fn induced_map(l1: &LcmLattice, l2: &LcmLattice, assign: &[usize]) -> Option<Vec<usize>> {
    let m = assign.len();
    let by_mask: HashMap<u32, usize> = (0..l2.len()).map(|e| (l2.atom_sets[e], e)).collect();
    let mut map = Vec::with_capacity(l1.len());
    for e in 0..l1.len() {
        let image_mask = map_mask(l1.atom_sets[e], assign, m);
        // join of the image atoms
        let mut j = l2.bottom();
        for k in 0..m {
            if image_mask & (1 << k) != 0 {
                j = l2.join(j, l2.atom_index[k]);
            }
        }
        if by_mask.get(&image_mask) != Some(&j) {
            return None;
        }
        map.push(j);
    }
    let mut hit = vec![false; l2.len()];
    for &v in &map {
        if std::mem::replace(&mut hit[v], true) {
            return None;
        }
    }
    for a in 0..l1.len() {
        for b in 0..l1.len() {
            if map[l1.join(a, b)] != l2.join(map[a], map[b])
                || map[l1.meet(a, b)] != l2.meet(map[a], map[b])
            {
                return None;
            }
        }
    }
    Some(map)
}

/// A total map between the elements of two lattices.
#[derive(Clone, Debug)]
pub struct LatticeMap {
    pub source: LcmLattice,
    pub target: LcmLattice,
    /// `values[e]`: target index of source element `e`.
    pub values: Vec<usize>,
}

impl LatticeMap {
    pub fn identity(l: &LcmLattice) -> Self {
        LatticeMap {
            source: l.clone(),
            target: l.clone(),
            values: (0..l.len()).collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        self.values.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }
}

/// Builds `δ: L_{I^{σ^n}} -> L_I`, sending the lcm of the spread generators of
/// a subset to the lcm of the original generators of the same subset.
///
/// Every subset is enumerated; two subsets with equal spread-side lcm must
/// have equal source-side lcm, otherwise [`Error::WellDefinednessViolation`].
pub fn build_delta(i: &MonomialIdeal) -> Result<LatticeMap> {
    let spread = spread_ideal(i, i.ambient())?;
    let source = LcmLattice::build(&spread)?;
    let target = LcmLattice::build(i)?;
    let mut values = vec![usize::MAX; source.len()];

    fn walk(
        k: usize,
        spread_lcm: &Monomial,
        base_lcm: &Monomial,
        sg: &[Monomial],
        bg: &[Monomial],
        source: &LcmLattice,
        target: &LcmLattice,
        values: &mut [usize],
    ) -> Result<()> {
        if k == sg.len() {
            let s = source.index_of(spread_lcm).ok_or_else(|| {
                Error::Internal(format!("{spread_lcm} missing from the spread lattice"))
            })?;
            let t = target.index_of(base_lcm).ok_or_else(|| {
                Error::Internal(format!("{base_lcm} missing from the lattice"))
            })?;
            if values[s] == usize::MAX {
                values[s] = t;
            } else if values[s] != t {
                return Err(Error::WellDefinednessViolation(format!(
                    "{spread_lcm} maps to both {} and {}",
                    target.element(values[s]),
                    base_lcm
                )));
            }
            return Ok(());
        }
        walk(k + 1, spread_lcm, base_lcm, sg, bg, source, target, values)?;
        let s2 = spread_lcm.lcm_unchecked(&sg[k]);
        let b2 = base_lcm.lcm_unchecked(&bg[k]);
        walk(k + 1, &s2, &b2, sg, bg, source, target, values)
    }

    walk(
        0,
        &Monomial::unit(spread.ambient())?,
        &Monomial::unit(i.ambient())?,
        spread.generators(),
        i.generators(),
        &source,
        &target,
        &mut values,
    )?;
    if values.contains(&usize::MAX) {
        return Err(Error::Internal("δ is not total".into()));
    }
    Ok(LatticeMap {
        source,
        target,
        values,
    })
}

/// True iff the map preserves joins, is onto, and sends bottom to bottom.
pub fn verify_delta(map: &LatticeMap) -> bool {
    let (s, t, v) = (&map.source, &map.target, &map.values);
    if v.len() != s.len() || v.iter().any(|&x| x >= t.len()) {
        return false;
    }
    if v[s.bottom()] != t.bottom() {
        return false;
    }
    let mut hit = vec![false; t.len()];
    for &x in v {
        hit[x] = true;
    }
    if hit.contains(&false) {
        return false;
    }
    (0..s.len()).all(|a| (0..s.len()).all(|b| v[s.join(a, b)] == t.join(v[a], v[b])))
}

/// The Hasse diagram as a DOT digraph, edges pointing from an element to the
/// elements covering it.
pub fn hasse_dot(l: &LcmLattice) -> String {
    render_dot(&l.elements, &l.covers)
}

/// DOT text for any finite poset given by node labels and cover pairs.
pub fn render_dot<T: std::fmt::Display>(labels: &[T], covers: &[(usize, usize)]) -> String {
    let mut out = String::from("digraph lcm_lattice {\n");
    out.push_str("  rankdir=BT;\n");
    for (k, e) in labels.iter().enumerate() {
        let _ = writeln!(out, "  n{k} [label=\"{e}\"];");
    }
    for &(a, b) in covers {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}
