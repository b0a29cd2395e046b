//! The correspondence between pairs of `n`-subsets of `[m + n]` and maximum
//! arrangements on a `2n x 2m` board.
//!
//! A subset pair `(R, C)` is shifted to a monotone sequence of strip-matrix
//! indices `(r_i - i + 1, c_i - i + 1)`; stacking the indexed strips top to
//! bottom gives the board. Decoding cuts the board into strips, locates each
//! one in the matrix and undoes the shift.

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::board::Board;
use crate::error::BijectionError;
use crate::strip::{strip_entry, Strip, StripMatrix};

/// `R` and `C`: two strictly increasing `n`-subsets of `1..=m + n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SubsetPair {
    n: usize,
    m: usize,
    #[serde(rename = "R")]
    rows: Vec<usize>,
    #[serde(rename = "C")]
    cols: Vec<usize>,
}

impl SubsetPair {
    /// Sorts both subsets; rejects duplicates, out-of-range values and sizes
    /// other than `n`.
    pub fn new(
        n: usize,
        m: usize,
        mut rows: Vec<usize>,
        mut cols: Vec<usize>,
    ) -> Result<SubsetPair, BijectionError> {
        if n == 0 || m == 0 {
            return Err(BijectionError::ZeroSize { n, m });
        }
        if rows.len() != n || cols.len() != n {
            return Err(BijectionError::LengthMismatch {
                n,
                r: rows.len(),
                c: cols.len(),
            });
        }
        let max = m + n;
        for set in [&mut rows, &mut cols] {
            if let Some(&value) = set.iter().find(|&&v| v == 0 || v > max) {
                return Err(BijectionError::SubsetOutOfRange { value, max });
            }
            set.sort_unstable();
            if let Some(w) = set.windows(2).find(|w| w[0] == w[1]) {
                return Err(BijectionError::DuplicateElement(w[0]));
            }
        }
        Ok(SubsetPair { n, m, rows, cols })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `R`, ascending.
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// `C`, ascending.
    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    /// `{"n":n,"m":m,"R":[...],"C":[...]}`
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("subset serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<SubsetPair, BijectionError> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            n: usize,
            m: usize,
            #[serde(rename = "R")]
            rows: Vec<usize>,
            #[serde(rename = "C")]
            cols: Vec<usize>,
        }
        let raw: Raw =
            serde_json::from_str(text).map_err(|e| BijectionError::Malformed(e.to_string()))?;
        SubsetPair::new(raw.n, raw.m, raw.rows, raw.cols)
    }

    /// All subset pairs for the given sizes, `R`-major in lexicographic order.
    pub fn all(n: usize, m: usize) -> impl Iterator<Item = SubsetPair> {
        let subsets = Combinations::new(m + n, n).collect::<Vec<_>>();
        let inner = subsets.clone();
        subsets.into_iter().flat_map(move |rows| {
            inner.clone().into_iter().map(move |cols| SubsetPair {
                n,
                m,
                rows: rows.clone(),
                cols,
            })
        })
    }
}

/// Lexicographic `k`-subsets of `1..=universe`.
struct Combinations {
    universe: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(universe: usize, k: usize) -> Self {
        let current = (k <= universe).then(|| (1..=k).collect());
        Combinations { universe, current }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        let mut next = out.clone();
        // rightmost position that can still grow
        if let Some(pos) = (0..k)
            .rev()
            .find(|&p| next[p] < self.universe - (k - 1 - p))
        {
            next[pos] += 1;
            for q in pos + 1..k {
                next[q] = next[q - 1] + 1;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Strip-matrix indices `(a_i, b_i)`, weakly increasing in both coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexSeq {
    m: usize,
    pairs: Vec<(usize, usize)>,
}

impl IndexSeq {
    pub fn new(m: usize, pairs: Vec<(usize, usize)>) -> Result<IndexSeq, BijectionError> {
        if m == 0 || pairs.is_empty() {
            return Err(BijectionError::ZeroSize { n: pairs.len(), m });
        }
        if let Some(&(a, b)) = pairs
            .iter()
            .find(|&&(a, b)| !(1..=m + 1).contains(&a) || !(1..=m + 1).contains(&b))
        {
            return Err(BijectionError::IndexOutOfRange { a, b, max: m + 1 });
        }
        if let Some(position) = first_descent(&pairs) {
            return Err(BijectionError::NonMonotone { position });
        }
        Ok(IndexSeq { m, pairs })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }
}

/// 1-based position `i` of the first `i` with `a_i > a_{i+1}` or `b_i > b_{i+1}`.
fn first_descent(pairs: &[(usize, usize)]) -> Option<usize> {
    pairs
        .windows(2)
        .position(|w| w[0].0 > w[1].0 || w[0].1 > w[1].1)
        .map(|p| p + 1)
}

pub fn subsets_to_index_seq(p: &SubsetPair) -> IndexSeq {
    let pairs = p
        .rows
        .iter()
        .zip(&p.cols)
        .enumerate()
        .map(|(i, (&r, &c))| (r - i, c - i))
        .collect();
    IndexSeq { m: p.m, pairs }
}

pub fn index_seq_to_subsets(s: &IndexSeq) -> SubsetPair {
    let (rows, cols) = s
        .pairs
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| (a + i, b + i))
        .unzip();
    SubsetPair {
        n: s.pairs.len(),
        m: s.m,
        rows,
        cols,
    }
}

/// Stacks strip `(a_i, b_i)` of the width-`m` matrix for each `i`, top to
/// bottom.
pub fn phi(p: &SubsetPair) -> Board {
    let seq = subsets_to_index_seq(p);
    let strips = seq
        .pairs
        .iter()
        .map(|&(a, b)| strip_entry(p.m, a, b).expect("shifted subsets index the matrix"));
    stack_strips(p.n, p.m, strips)
}

fn stack_strips(n: usize, m: usize, strips: impl Iterator<Item = Strip>) -> Board {
    let pawns = strips.enumerate().flat_map(|(k, s)| {
        s.to_board()
            .pawns()
            .iter()
            .map(|c| (c.row + 2 * k, c.col))
            .collect::<Vec<_>>()
    });
    Board::new(2 * n, 2 * m, pawns).expect("strip cells stay in range")
}

/// Decodes a maximum independent arrangement back to its subset pair.
pub fn phi_inverse(b: &Board) -> Result<SubsetPair, BijectionError> {
    let matrix = StripMatrix::build((b.cols() / 2).max(1)).expect("positive width");
    phi_inverse_with(b, &matrix)
}

/// [`phi_inverse`] against a prebuilt matrix of width `b.cols() / 2`.
pub fn phi_inverse_with(b: &Board, matrix: &StripMatrix) -> Result<SubsetPair, BijectionError> {
    if !b.rows().is_multiple_of(2) || !b.cols().is_multiple_of(2) {
        return Err(BijectionError::OddDimensions {
            rows: b.rows(),
            cols: b.cols(),
        });
    }
    assert_eq!(
        matrix.m(),
        b.cols() / 2,
        "matrix width must match the board"
    );
    if let Some(&pair) = b.violations().first() {
        return Err(BijectionError::NotIndependent(pair));
    }
    let n = b.rows() / 2;
    let m = b.cols() / 2;
    if b.pawn_count() != 2 * n * m {
        return Err(BijectionError::NotMaximum(format!(
            "{} pawns, a maximum arrangement has {}",
            b.pawn_count(),
            2 * n * m
        )));
    }
    let mut pairs = Vec::with_capacity(n);
    for k in 0..n {
        let band = b.row_band(2 * k + 1, 2);
        let strip = Strip::from_board(&band).ok_or_else(|| {
            BijectionError::NotMaximum(format!(
                "rows {}-{} do not split into 2x2 patterns",
                2 * k + 1,
                2 * k + 2
            ))
        })?;
        let at = matrix.locate(&strip).map_err(|e| {
            BijectionError::NotMaximum(format!("rows {}-{}: {e}", 2 * k + 1, 2 * k + 2))
        })?;
        pairs.push(at);
    }
    if let Some(position) = first_descent(&pairs) {
        return Err(BijectionError::InternalNonMonotone { position });
    }
    Ok(index_seq_to_subsets(&IndexSeq { m, pairs }))
}

/// `C(m + n, n)^2`.
pub fn arrangement_count(n: usize, m: usize) -> BigUint {
    let c = subset_count(m + n, n);
    &c * &c
}

fn subset_count(universe: usize, k: usize) -> BigUint {
    binomial(BigUint::from(universe), BigUint::from(k))
}

/// Lexicographic rank of an ascending subset among the `k`-subsets of
/// `1..=universe`.
pub fn rank_subset(universe: usize, subset: &[usize]) -> BigUint {
    let k = subset.len();
    let mut rank = BigUint::zero();
    let mut prev = 0;
    for (i, &s) in subset.iter().enumerate() {
        for skipped in prev + 1..s {
            rank += subset_count(universe - skipped, k - i - 1);
        }
        prev = s;
    }
    rank
}

/// Inverse of [`rank_subset`]. The caller keeps `rank` below `C(universe, k)`.
pub fn unrank_subset(universe: usize, k: usize, rank: &BigUint) -> Vec<usize> {
    let mut rank = rank.clone();
    let mut out = Vec::with_capacity(k);
    let mut candidate = 1;
    for i in 0..k {
        loop {
            let block = subset_count(universe - candidate, k - i - 1);
            if rank < block {
                out.push(candidate);
                candidate += 1;
                break;
            }
            rank -= block;
            candidate += 1;
        }
    }
    out
}

/// `rank(R) * C(m + n, n) + rank(C)`.
pub fn rank(b: &Board) -> Result<BigUint, BijectionError> {
    let p = phi_inverse(b)?;
    Ok(rank_pair(&p))
}

pub fn rank_pair(p: &SubsetPair) -> BigUint {
    let universe = p.m + p.n;
    rank_subset(universe, &p.rows) * subset_count(universe, p.n) + rank_subset(universe, &p.cols)
}

pub fn unrank_pair(k: &BigUint, n: usize, m: usize) -> Result<SubsetPair, BijectionError> {
    if n == 0 || m == 0 {
        return Err(BijectionError::ZeroSize { n, m });
    }
    let total = arrangement_count(n, m);
    if k >= &total {
        return Err(BijectionError::RankOutOfRange {
            rank: k.to_string(),
            count: total.to_string(),
        });
    }
    let per = subset_count(m + n, n);
    let rows = unrank_subset(m + n, n, &(k / &per));
    let cols = unrank_subset(m + n, n, &(k % &per));
    Ok(SubsetPair { n, m, rows, cols })
}

pub fn unrank(k: &BigUint, n: usize, m: usize) -> Result<Board, BijectionError> {
    unrank_pair(k, n, m).map(|p| phi(&p))
}
