//! Reduced simplicial homology over the two-element field, specialised to
//! order complexes of open intervals in an lcm-lattice.

use std::collections::HashMap;

use crate::lattice::LcmLattice;

/// Dense bit-packed GF(2) vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub(crate) fn zeros(len: usize) -> Self {
        BitRow {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub(crate) fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    fn lowest(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    fn xor(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }
}

/// Rank over GF(2) of the matrix whose columns are `cols`.
pub(crate) fn gf2_rank(cols: Vec<BitRow>) -> usize {
    // pivot position -> reduced vector
    let mut pivots: HashMap<usize, BitRow> = HashMap::new();
    let mut rank = 0;
    for mut v in cols {
        while let Some(p) = v.lowest() {
            match pivots.get(&p) {
                Some(r) => v.xor(r),
                None => {
                    pivots.insert(p, v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Reduced Betti numbers `β̃_k` for `k = -1, 0, 1, ...`, stored so that
/// `values[k + 1] = β̃_k`. Trailing zeros are trimmed (at least one entry is
/// kept).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedBetti {
    values: Vec<usize>,
}

impl ReducedBetti {
    /// `β̃_dim`, zero outside the stored range.
    pub fn get(&self, dim: isize) -> usize {
        if dim < -1 {
            return 0;
        }
        self.values.get((dim + 1) as usize).copied().unwrap_or(0)
    }

    /// Raw values, index `k + 1` holding `β̃_k`.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_acyclic(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }
}

/// Reduced homology of a simplicial complex given by its faces grouped by
/// dimension (`faces[k]` lists the `k`-dimensional faces as sorted vertex
/// lists). The complex must be closed under taking faces; the empty face is
/// implicit.
pub(crate) fn reduced_homology(faces: &[Vec<Vec<usize>>]) -> ReducedBetti {
    // chain group sizes: c[0] is the (-1)-dimensional empty face
    let mut counts = vec![1usize];
    counts.extend(faces.iter().map(Vec::len));
    // rank of ∂ from dimension k to k - 1, indexed by k + 1
    let mut ranks = vec![0usize; counts.len() + 1];
    for (k, level) in faces.iter().enumerate() {
        let cols: Vec<BitRow> = if k == 0 {
            level
                .iter()
                .map(|_| {
                    let mut r = BitRow::zeros(1);
                    r.flip(0);
                    r
                })
                .collect()
        } else {
            let index: HashMap<&[usize], usize> = faces[k - 1]
                .iter()
                .enumerate()
                .map(|(i, f)| (f.as_slice(), i))
                .collect();
            level
                .iter()
                .map(|face| {
                    let mut r = BitRow::zeros(faces[k - 1].len());
                    for drop in 0..face.len() {
                        let sub: Vec<usize> = face
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != drop)
                            .map(|(_, &v)| v)
                            .collect();
                        r.flip(index[sub.as_slice()]);
                    }
                    r
                })
                .collect()
        };
        ranks[k + 1] = gf2_rank(cols);
    }
    let mut values: Vec<usize> = (0..counts.len())
        .map(|i| counts[i] - ranks[i] - ranks[i + 1])
        .collect();
    while values.len() > 1 && values.last() == Some(&0) {
        values.pop();
    }
    ReducedBetti { values }
}

/// Reduced Betti numbers of the order complex of the open interval
/// `(bottom, m)` of `lattice`, where `m` is an element index other than the
/// bottom. An empty interval has `β̃_{-1} = 1`.
pub fn order_complex_betti(lattice: &LcmLattice, m: usize) -> ReducedBetti {
    assert_ne!(m, lattice.bottom(), "interval upper end must not be the bottom");
    let inside: Vec<usize> = (0..lattice.len())
        .filter(|&e| e != lattice.bottom() && e != m && lattice.leq(e, m))
        .collect();
    let mut faces: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut chain = Vec::new();
    collect_chains(lattice, &inside, 0, &mut chain, &mut faces);
    reduced_homology(&faces)
}

/// All nonempty chains of `inside` (given in a linear extension), grouped by
/// dimension.
fn collect_chains(
    lattice: &LcmLattice,
    inside: &[usize],
    from: usize,
    chain: &mut Vec<usize>,
    faces: &mut Vec<Vec<Vec<usize>>>,
) {
    for pos in from..inside.len() {
        let e = inside[pos];
        if chain.last().is_some_and(|&last| !lattice.leq(last, e)) {
            continue;
        }
        chain.push(e);
        let dim = chain.len() - 1;
        if faces.len() <= dim {
            faces.push(Vec::new());
        }
        faces[dim].push(chain.clone());
        collect_chains(lattice, inside, pos + 1, chain, faces);
        chain.pop();
    }
}
