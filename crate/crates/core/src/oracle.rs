//! Brute-force engines that know nothing about strips or subsets.
//!
//! Everything here works from the attack relation alone: a row bitmask is
//! always internally independent, and two consecutive rows clash when a bit
//! of one sits diagonally next to a bit of the other. Row masks use bit `k`
//! for column `k + 1`.

use num_bigint::BigUint;
use num_traits::{CheckedAdd, One, Zero};

use crate::board::Board;
use crate::error::OracleError;
use crate::strip::StripMatrix;

/// Largest supported side length.
pub const MAX_SIDE: usize = 14;

/// Enumeration refuses boards with more maximum arrangements than this.
pub const ENUMERATION_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub max_pawns: usize,
    pub num_max_arrangements: BigUint,
}

/// A search frame: the pawn mask of the row just filled and the pawns placed
/// so far.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProfileState {
    pub prev_mask: u32,
    pub placed: u32,
}

fn check_size(rows: usize, cols: usize) -> Result<(), OracleError> {
    if rows == 0 || cols == 0 || rows > MAX_SIDE || cols > MAX_SIDE {
        return Err(OracleError::UnsupportedSize {
            rows,
            cols,
            max: MAX_SIDE,
        });
    }
    Ok(())
}

/// Squares of the next row attacked from `mask`.
#[inline]
fn shadow(mask: u32, full: u32) -> u32 {
    ((mask << 1) | (mask >> 1)) & full
}

/// Submasks of `allowed` in ascending numeric order.
fn submasks_ascending(allowed: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(1 << allowed.count_ones());
    let mut sub = allowed;
    loop {
        out.push(sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & allowed;
    }
    out.reverse();
    out
}

/// Row-by-row transfer: `best[p]` is the largest number of pawns the rows
/// still to come can hold when the row above them has mask `p`.
struct SuffixBounds {
    cols: usize,
    /// `tables[r][p]` covers rows `r..rows`; `tables[rows]` is all zeros.
    tables: Vec<Vec<u8>>,
}

impl SuffixBounds {
    fn new(rows: usize, cols: usize) -> Self {
        let states = 1usize << cols;
        let full = (states - 1) as u32;
        let mut tables = vec![vec![0u8; states]; rows + 1];
        for r in (0..rows).rev() {
            let (head, tail) = tables.split_at_mut(r + 1);
            let next = &tail[0];
            let here = &mut head[r];
            for p in 0..states as u32 {
                let allowed = full & !shadow(p, full);
                let mut best = 0u8;
                let mut sub = allowed;
                loop {
                    let v = sub.count_ones() as u8 + next[sub as usize];
                    best = best.max(v);
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & allowed;
                }
                here[p as usize] = best;
            }
        }
        SuffixBounds { cols, tables }
    }

    fn full(&self) -> u32 {
        ((1u64 << self.cols) - 1) as u32
    }

    fn bound(&self, row: usize, prev: u32) -> u8 {
        self.tables[row][prev as usize]
    }
}

/// Largest number of mutually nonattacking pawns on the board.
pub fn max_pawn_count(rows: usize, cols: usize) -> Result<usize, OracleError> {
    check_size(rows, cols)?;
    let full = ((1u64 << cols) - 1) as u32;
    // forward row transfer keeping the best total per last-row mask
    let mut best: Vec<i32> = vec![-1; 1 << cols];
    best[0] = 0;
    let mut first = true;
    for _ in 0..rows {
        let mut next = vec![-1i32; 1 << cols];
        for (p, &score) in best.iter().enumerate() {
            if score < 0 {
                continue;
            }
            let allowed = if first {
                full
            } else {
                full & !shadow(p as u32, full)
            };
            let mut sub = allowed;
            loop {
                let v = score + sub.count_ones() as i32;
                if v > next[sub as usize] {
                    next[sub as usize] = v;
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & allowed;
            }
        }
        first = false;
        best = next;
    }
    Ok(best.into_iter().max().unwrap_or(0) as usize)
}

/// Cell-by-cell profile DP tracking `(most pawns, ways to get them)` per
/// state. Returns `None` if a count overflows `T`.
///
/// State bits `0..cols` hold the newest pawn in each column: the current row
/// left of the cursor, the previous row from the cursor on. Bit `cols` keeps
/// the previous-row square diagonally up-left of the cursor, which the
/// current row has already overwritten.
fn profile_count<T>(rows: usize, cols: usize) -> Option<(usize, T)>
where
    T: Clone + Zero + One + CheckedAdd,
{
    let states = 1usize << (cols + 1);
    let saved = 1u32 << cols;
    let mut best: Vec<i32> = vec![-1; states];
    let mut ways: Vec<T> = vec![T::zero(); states];
    best[0] = 0;
    ways[0] = T::one();

    let relax = |best: &mut [i32], ways: &mut [T], state: usize, score: i32, w: &T| -> Option<()> {
        if score > best[state] {
            best[state] = score;
            ways[state] = w.clone();
        } else if score == best[state] {
            ways[state] = ways[state].checked_add(w)?;
        }
        Some(())
    };

    for _ in 0..rows {
        for c in 0..cols {
            let mut next_best = vec![-1; states];
            let mut next_ways = vec![T::zero(); states];
            let bit = 1u32 << c;
            for state in 0..states {
                let score = best[state];
                if score < 0 {
                    continue;
                }
                let s = state as u32;
                let up = s & bit;
                let up_left = c > 0 && s & saved != 0;
                let up_right = c + 1 < cols && s & (bit << 1) != 0;
                let carried = (s & !(bit | saved)) | if up != 0 { saved } else { 0 };
                relax(
                    &mut next_best,
                    &mut next_ways,
                    carried as usize,
                    score,
                    &ways[state],
                )?;
                if !up_left && !up_right {
                    relax(
                        &mut next_best,
                        &mut next_ways,
                        (carried | bit) as usize,
                        score + 1,
                        &ways[state],
                    )?;
                }
            }
            best = next_best;
            ways = next_ways;
        }
    }

    let max = *best.iter().max()?;
    let mut total = T::zero();
    for (b, w) in best.iter().zip(&ways) {
        if *b == max {
            total = total.checked_add(w)?;
        }
    }
    Some((max as usize, total))
}

/// Maximum pawn count and the exact number of placements achieving it.
pub fn count_max_arrangements(rows: usize, cols: usize) -> Result<CountResult, OracleError> {
    check_size(rows, cols)?;
    let (max_pawns, num_max_arrangements) = match profile_count::<u128>(rows, cols) {
        Some((max, n)) => (max, BigUint::from(n)),
        None => profile_count::<BigUint>(rows, cols).expect("big integers do not overflow"),
    };
    Ok(CountResult {
        max_pawns,
        num_max_arrangements,
    })
}

/// Every maximum placement, ordered lexicographically by the sequence of row
/// masks (row 1 first, masks compared as integers).
pub fn enumerate_max_arrangements(rows: usize, cols: usize) -> Result<Vec<Board>, OracleError> {
    let mut out = Vec::new();
    for_each_max_arrangement(rows, cols, |b| out.push(b))?;
    Ok(out)
}

/// Streaming form of [`enumerate_max_arrangements`], same order.
pub fn for_each_max_arrangement<F>(rows: usize, cols: usize, mut emit: F) -> Result<(), OracleError>
where
    F: FnMut(Board),
{
    check_size(rows, cols)?;
    let count = count_max_arrangements(rows, cols)?.num_max_arrangements;
    if count > BigUint::from(ENUMERATION_LIMIT) {
        return Err(OracleError::TooMany {
            count: count.to_string(),
            limit: ENUMERATION_LIMIT,
        });
    }
    let bounds = SuffixBounds::new(rows, cols);
    let full = bounds.full();
    let target = bounds.bound(0, 0) as u32;

    let mut masks = vec![0u64; rows];
    fn descend<F: FnMut(Board)>(
        row: usize,
        state: ProfileState,
        target: u32,
        full: u32,
        bounds: &SuffixBounds,
        masks: &mut [u64],
        emit: &mut F,
    ) {
        let rows = masks.len();
        if row == rows {
            if state.placed == target {
                let b =
                    Board::from_row_masks(rows, bounds.cols, masks).expect("masks fit the board");
                emit(b);
            }
            return;
        }
        let allowed = if row == 0 {
            full
        } else {
            full & !shadow(state.prev_mask, full)
        };
        for mask in submasks_ascending(allowed) {
            let placed = state.placed + mask.count_ones();
            // the suffix bound is exact, so this keeps only completable rows
            if placed + bounds.bound(row + 1, mask) as u32 != target {
                continue;
            }
            masks[row] = mask as u64;
            descend(
                row + 1,
                ProfileState {
                    prev_mask: mask,
                    placed,
                },
                target,
                full,
                bounds,
                masks,
                emit,
            );
        }
    }
    descend(
        0,
        ProfileState {
            prev_mask: 0,
            placed: 0,
        },
        target,
        full,
        &bounds,
        &mut masks,
        &mut emit,
    );
    Ok(())
}

/// Number of length-`n` chains of strip-matrix indices that weakly increase
/// in both coordinates, computed with 2-D prefix sums.
pub fn count_via_strip_chains(n: usize, m: usize) -> BigUint {
    if n == 0 || m == 0 {
        return BigUint::zero();
    }
    let side = m + 1;
    let mut ways = vec![BigUint::one(); side * side];
    for _ in 1..n {
        let mut next = vec![BigUint::zero(); side * side];
        for i in 0..side {
            for j in 0..side {
                let mut v = ways[i * side + j].clone();
                if i > 0 {
                    v += &next[(i - 1) * side + j];
                }
                if j > 0 {
                    v += &next[i * side + j - 1];
                }
                if i > 0 && j > 0 {
                    v -= &next[(i - 1) * side + j - 1];
                }
                next[i * side + j] = v;
            }
        }
        ways = next;
    }
    ways.iter().sum()
}

/// Transfer-matrix count over the stacking relation decided on actual
/// boards, rather than over index dominance.
pub fn count_via_strip_stacking(n: usize, matrix: &StripMatrix) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    let entries = matrix.entries();
    let below: Vec<Vec<usize>> = entries
        .iter()
        .map(|top| {
            entries
                .iter()
                .enumerate()
                .filter(|(_, bottom)| {
                    crate::strip::can_stack_strips(top, bottom).expect("same matrix width")
                })
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    let mut ways = vec![BigUint::one(); entries.len()];
    for _ in 1..n {
        let mut next = vec![BigUint::zero(); entries.len()];
        for (k, w) in ways.iter().enumerate() {
            for &b in &below[k] {
                next[b] += w;
            }
        }
        ways = next;
    }
    ways.iter().sum()
}
