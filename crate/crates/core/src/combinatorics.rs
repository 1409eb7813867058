//! Exact subset combinatorics: binomial coefficients, colexicographic
//! ranking/unranking of k-subsets, and subset enumeration.
//!
//! Colexicographic order is the single indexing convention for every vector
//! and matrix dimension of size C(n, k) in this crate. All vertex ids are
//! 1-based.

use crate::error::{Error, Result};

/// Binomial coefficient C(n, k) in exact integer arithmetic.
///
/// Returns 0 when `k < 0` or `k > n`. Overflow of 64-bit capacity is a hard
/// error, never a silent wraparound.
pub fn binomial(n: u64, k: i64) -> Result<u64> {
    if k < 0 || k as u64 > n {
        return Ok(0);
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc: u128 = 1;
    for i in 1..=k {
        // acc stays an exact binomial prefix C(n-k+i, i), so the division
        // is exact. Prefixes are monotone in i, so checking each step
        // against u64::MAX is equivalent to checking the result.
        acc = acc * (n - k + i) as u128 / i as u128;
        if acc > u64::MAX as u128 {
            return Err(Error::Overflow { n, k });
        }
    }
    Ok(acc as u64)
}

/// `binomial` coerced to `usize`, for use as a vector/matrix dimension.
pub fn binomial_usize(n: usize, k: i64) -> Result<usize> {
    let b = binomial(n as u64, k)?;
    usize::try_from(b).map_err(|_| Error::Overflow {
        n: n as u64,
        k: k as u64,
    })
}

/// A sorted k-subset of the ground set [1, n].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KSubset {
    elements: Vec<usize>,
    n: usize,
}

impl KSubset {
    /// Validates that `elements` is strictly increasing with entries in [1, n].
    pub fn new(elements: Vec<usize>, n: usize) -> Result<Self> {
        for (i, &v) in elements.iter().enumerate() {
            if v < 1 || v > n {
                return Err(Error::InvalidSubset(format!(
                    "element {v} outside ground set [1, {n}]"
                )));
            }
            if i > 0 && elements[i - 1] >= v {
                return Err(Error::InvalidSubset(format!(
                    "elements not strictly increasing at position {i}"
                )));
            }
        }
        Ok(Self { elements, n })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Ground set size n.
    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.elements.binary_search(&v).is_ok()
    }

    /// The subset with `v` added. Errors if `v` is already present or out of range.
    pub fn with(&self, v: usize) -> Result<KSubset> {
        if v < 1 || v > self.n {
            return Err(Error::InvalidSubset(format!(
                "element {v} outside ground set [1, {}]",
                self.n
            )));
        }
        match self.elements.binary_search(&v) {
            Ok(_) => Err(Error::InvalidSubset(format!("element {v} already present"))),
            Err(pos) => {
                let mut elements = self.elements.clone();
                elements.insert(pos, v);
                Ok(KSubset {
                    elements,
                    n: self.n,
                })
            }
        }
    }

    /// The subset with `v` removed. Errors if `v` is absent.
    pub fn without(&self, v: usize) -> Result<KSubset> {
        match self.elements.binary_search(&v) {
            Ok(pos) => {
                let mut elements = self.elements.clone();
                elements.remove(pos);
                Ok(KSubset {
                    elements,
                    n: self.n,
                })
            }
            Err(_) => Err(Error::InvalidSubset(format!("element {v} not present"))),
        }
    }
}

/// Colexicographic rank of a k-subset, paired with its (n, k) context.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsetIndex {
    pub rank: u64,
    pub n: usize,
    pub k: usize,
}

/// Colex rank of a subset: rank(s) = sum over positions i = 1..k of
/// C(s_i - 1, i), with s sorted ascending. Bijective onto [0, C(n, k)).
pub fn rank_colex(s: &KSubset) -> Result<SubsetIndex> {
    let mut rank: u64 = 0;
    for (i, &v) in s.elements().iter().enumerate() {
        rank += binomial((v - 1) as u64, (i + 1) as i64)?;
    }
    Ok(SubsetIndex {
        rank,
        n: s.ambient(),
        k: s.len(),
    })
}

/// Inverse of [`rank_colex`].
pub fn unrank_colex(n: usize, k: usize, rank: u64) -> Result<KSubset> {
    let size = binomial(n as u64, k as i64)?;
    if rank >= size {
        return Err(Error::RankOutOfRange { n, k, rank, size });
    }
    let mut remaining = rank;
    let mut elements = vec![0usize; k];
    let mut upper = n;
    for i in (1..=k).rev() {
        // Largest c with C(c - 1, i) <= remaining; scan downward from the
        // previous element (colex digits are strictly decreasing here).
        let mut c = upper;
        loop {
            let below = binomial((c - 1) as u64, i as i64)?;
            if below <= remaining {
                remaining -= below;
                elements[i - 1] = c;
                upper = c - 1;
                break;
            }
            c -= 1;
        }
    }
    KSubset::new(elements, n)
}

/// All C(n, k) subsets in colexicographic order; position i holds
/// `unrank_colex(n, k, i)`.
pub fn enumerate_subsets(n: usize, k: usize) -> Vec<KSubset> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![KSubset {
            elements: Vec::new(),
            n,
        }];
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(KSubset {
            elements: cur.clone(),
            n,
        });
        // Colex successor: bump the lowest position that has headroom,
        // resetting everything below it to 1..i.
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            let cap = if i + 1 < k { cur[i + 1] - 1 } else { n };
            if cur[i] < cap {
                cur[i] += 1;
                for (j, slot) in cur.iter_mut().enumerate().take(i) {
                    *slot = j + 1;
                }
                break;
            }
            i += 1;
        }
    }
}

/// Sorted symmetric difference of two subsets over the same ground set.
pub fn symmetric_difference(a: &KSubset, b: &KSubset) -> Result<KSubset> {
    if a.ambient() != b.ambient() {
        return Err(Error::InvalidSubset(format!(
            "ambient mismatch: {} vs {}",
            a.ambient(),
            b.ambient()
        )));
    }
    let (xs, ys) = (a.elements(), b.elements());
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < xs.len() && j < ys.len() {
        match xs[i].cmp(&ys[j]) {
            std::cmp::Ordering::Less => {
                out.push(xs[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(ys[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&xs[i..]);
    out.extend_from_slice(&ys[j..]);
    KSubset::new(out, a.ambient())
}
