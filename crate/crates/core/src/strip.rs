//! Two-row strips and the strip matrix.
//!
//! A maximum arrangement on a `2 x 2m` rectangle splits into `m` blocks of
//! `2 x 2`, each holding two pawns in one of four patterns:
//!
//! ```text
//!  A     B     C     D
//!  PP    .P    ..    P.
//!  ..    .P    PP    P.
//! ```
//!
//! The strip matrix lists every such arrangement exactly once, laid out so
//! that a strip may sit directly above another iff its matrix index is
//! weakly smaller in both coordinates.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::board::{Board, Cell};
use crate::error::StripError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SquareType {
    /// Top row.
    A,
    /// Right column.
    B,
    /// Bottom row.
    C,
    /// Left column.
    D,
}

impl SquareType {
    pub const ALL: [SquareType; 4] = [SquareType::A, SquareType::B, SquareType::C, SquareType::D];

    /// Occupied cells inside the block, `(row, col)` 1-based.
    pub const fn cells(self) -> [(usize, usize); 2] {
        match self {
            SquareType::A => [(1, 1), (1, 2)],
            SquareType::B => [(1, 2), (2, 2)],
            SquareType::C => [(2, 1), (2, 2)],
            SquareType::D => [(1, 1), (2, 1)],
        }
    }

    /// Block occupancy as a 4-bit mask: bit 0 top-left, 1 top-right,
    /// 2 bottom-left, 3 bottom-right.
    pub const fn mask(self) -> u8 {
        match self {
            SquareType::A => 0b0011,
            SquareType::B => 0b1010,
            SquareType::C => 0b1100,
            SquareType::D => 0b0101,
        }
    }

    pub fn from_mask(mask: u8) -> Option<SquareType> {
        SquareType::ALL.into_iter().find(|t| t.mask() == mask)
    }

    /// The replacement applied to a leftmost block when moving one row down
    /// the strip matrix: `A -> D`, everything else `-> C`.
    pub const fn descend(self) -> SquareType {
        match self {
            SquareType::A => SquareType::D,
            SquareType::B | SquareType::C | SquareType::D => SquareType::C,
        }
    }

    pub const fn symbol(self) -> char {
        match self {
            SquareType::A => 'A',
            SquareType::B => 'B',
            SquareType::C => 'C',
            SquareType::D => 'D',
        }
    }

    pub fn from_symbol(ch: char) -> Result<SquareType, StripError> {
        match ch {
            'A' => Ok(SquareType::A),
            'B' => Ok(SquareType::B),
            'C' => Ok(SquareType::C),
            'D' => Ok(SquareType::D),
            other => Err(StripError::UnknownSquare(other)),
        }
    }
}

/// Whether `right` may sit immediately to the right of `left`, decided on
/// the 2x4 board the two blocks form.
pub fn can_follow(left: SquareType, right: SquareType) -> bool {
    Strip::from_word(vec![left, right])
        .to_board()
        .is_independent()
}

/// A row of `m` blocks, leftmost first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Strip {
    word: Vec<SquareType>,
}

impl Strip {
    /// Panics on an empty word; use [`str::parse`] for fallible input.
    pub fn from_word(word: Vec<SquareType>) -> Strip {
        assert!(!word.is_empty(), "strips have at least one block");
        Strip { word }
    }

    pub fn width(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[SquareType] {
        &self.word
    }

    /// The `2 x 2m` board; block `k` covers columns `2k - 1` and `2k`.
    pub fn to_board(&self) -> Board {
        let pawns = self.word.iter().enumerate().flat_map(|(k, t)| {
            t.cells()
                .into_iter()
                .map(move |(r, c)| Cell::new(r, 2 * k + c))
        });
        Board::new(2, 2 * self.width(), pawns).expect("block cells stay in range")
    }

    /// Splits a two-row board into blocks. `None` if the width is odd or some
    /// block does not hold one of the four patterns.
    pub fn from_board(board: &Board) -> Option<Strip> {
        if board.rows() != 2 || !board.cols().is_multiple_of(2) {
            return None;
        }
        let mut masks = vec![0u8; board.cols() / 2];
        for p in board.pawns() {
            let block = (p.col - 1) / 2;
            let bit = 2 * (p.row - 1) + (p.col - 1) % 2;
            masks[block] |= 1 << bit;
        }
        masks
            .into_iter()
            .map(SquareType::from_mask)
            .collect::<Option<Vec<_>>>()
            .map(Strip::from_word)
    }

    /// True when the word has the shape `D* A* B*` or `D* C* B*`.
    pub fn is_canonical(&self) -> bool {
        let mut rest = self.word.as_slice();
        let skip = |rest: &mut &[SquareType], t: SquareType| {
            while rest.first() == Some(&t) {
                *rest = &rest[1..];
            }
        };
        skip(&mut rest, SquareType::D);
        match rest.first() {
            Some(SquareType::A) => skip(&mut rest, SquareType::A),
            Some(SquareType::C) => skip(&mut rest, SquareType::C),
            _ => {}
        }
        skip(&mut rest, SquareType::B);
        rest.is_empty()
    }
}

impl fmt::Display for Strip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.word {
            write!(f, "{}", t.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for Strip {
    type Err = StripError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let word = s
            .trim()
            .chars()
            .map(SquareType::from_symbol)
            .collect::<Result<Vec<_>, _>>()?;
        if word.is_empty() {
            return Err(StripError::ZeroWidth);
        }
        Ok(Strip { word })
    }
}

fn check_index(m: usize, i: usize, j: usize) -> Result<(), StripError> {
    if m == 0 {
        return Err(StripError::ZeroWidth);
    }
    if !(1..=m + 1).contains(&i) || !(1..=m + 1).contains(&j) {
        return Err(StripError::IndexOutOfRange { i, j, max: m + 1 });
    }
    Ok(())
}

/// First-row entry `j`: `m + 1 - j` blocks of A followed by `j - 1` of B.
pub fn first_row_strip(m: usize, j: usize) -> Result<Strip, StripError> {
    check_index(m, 1, j)?;
    let mut word = vec![SquareType::A; m + 1 - j];
    word.extend(std::iter::repeat_n(SquareType::B, j - 1));
    Ok(Strip::from_word(word))
}

/// Entry `(i, j)`: the first-row entry `j` with its leftmost `i - 1` blocks
/// replaced by their [`SquareType::descend`] image.
pub fn strip_entry(m: usize, i: usize, j: usize) -> Result<Strip, StripError> {
    check_index(m, i, j)?;
    let mut word = first_row_strip(m, j)?.word;
    for t in &mut word[..i - 1] {
        *t = t.descend();
    }
    Ok(Strip::from_word(word))
}

/// Whether `top` may sit directly above `bottom` on a `4 x 2m` board.
pub fn can_stack_strips(top: &Strip, bottom: &Strip) -> Result<bool, StripError> {
    if top.width() != bottom.width() {
        return Err(StripError::WidthMismatch {
            top: top.width(),
            bottom: bottom.width(),
        });
    }
    let board = top
        .to_board()
        .stack(&bottom.to_board())
        .expect("equal widths stack");
    Ok(board.is_independent())
}

/// The `(m+1) x (m+1)` strip matrix, indexed from 1.
#[derive(Debug, Clone)]
pub struct StripMatrix {
    m: usize,
    entries: Vec<Strip>,
    index: HashMap<Strip, (usize, usize)>,
}

impl StripMatrix {
    pub fn build(m: usize) -> Result<StripMatrix, StripError> {
        Self::build_with(m, strip_entry)
    }

    /// Builds the matrix from an arbitrary entry function. Later duplicates
    /// do not replace earlier ones in the lookup index.
    pub fn build_with<F>(m: usize, mut entry: F) -> Result<StripMatrix, StripError>
    where
        F: FnMut(usize, usize, usize) -> Result<Strip, StripError>,
    {
        if m == 0 {
            return Err(StripError::ZeroWidth);
        }
        let side = m + 1;
        let mut entries = Vec::with_capacity(side * side);
        let mut index = HashMap::with_capacity(side * side);
        for i in 1..=side {
            for j in 1..=side {
                let s = entry(m, i, j)?;
                index.entry(s.clone()).or_insert((i, j));
                entries.push(s);
            }
        }
        Ok(StripMatrix { m, entries, index })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn side(&self) -> usize {
        self.m + 1
    }

    pub fn get(&self, i: usize, j: usize) -> Result<&Strip, StripError> {
        check_index(self.m, i, j)?;
        Ok(&self.entries[(i - 1) * self.side() + (j - 1)])
    }

    /// All entries in row-major order.
    pub fn entries(&self) -> &[Strip] {
        &self.entries
    }

    /// `((i, j), strip)` for every entry, row-major.
    pub fn indexed(&self) -> impl Iterator<Item = ((usize, usize), &Strip)> + '_ {
        let side = self.side();
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, s)| ((k / side + 1, k % side + 1), s))
    }

    /// The position of `s`; unique when the matrix is well formed.
    pub fn locate(&self, s: &Strip) -> Result<(usize, usize), StripError> {
        if s.width() != self.m {
            return Err(StripError::MatrixWidth {
                width: s.width(),
                matrix: self.m,
            });
        }
        self.index
            .get(s)
            .copied()
            .ok_or_else(|| StripError::NotInMatrix(s.to_string()))
    }

    pub fn has_distinct_entries(&self) -> bool {
        self.index.len() == self.entries.len()
    }

    /// Words laid out as a grid: entries separated by spaces, matrix rows by
    /// blank lines.
    pub fn render_words(&self) -> String {
        self.entries
            .chunks(self.side())
            .map(|row| {
                let words: Vec<String> = row.iter().map(Strip::to_string).collect();
                words.join(" ") + "\n"
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Pawn diagrams of each matrix row side by side, matrix rows separated by
    /// blank lines.
    pub fn render_ascii(&self) -> String {
        self.entries
            .chunks(self.side())
            .map(|row| {
                let drawn: Vec<String> = row.iter().map(|s| s.to_board().render_ascii()).collect();
                let mut out = String::new();
                for line in 0..2 {
                    let parts: Vec<&str> =
                        drawn.iter().map(|d| d.lines().nth(line).unwrap()).collect();
                    out.push_str(&parts.join(" "));
                    out.push('\n');
                }
                out
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .entries
            .chunks(self.side())
            .map(|row| row.iter().map(Strip::to_string).collect())
            .collect();
        serde_json::json!({ "m": self.m, "entries": rows }).to_string()
    }
}

/// Every independent placement of `2m` pawns on a `2 x 2m` board, found by
/// search over the raw attack relation and then split into blocks.
///
/// Column states are 2-bit masks (bit 0 top, bit 1 bottom). Adjacent columns
/// conflict when a pawn in one has a diagonal neighbour in the other.
pub fn enumerate_strips(m: usize) -> Result<Vec<Strip>, StripError> {
    if m == 0 {
        return Err(StripError::ZeroWidth);
    }
    let width = 2 * m;
    let conflict = |left: u8, right: u8| {
        let top_bottom = left & 1 != 0 && right & 2 != 0;
        let bottom_top = left & 2 != 0 && right & 1 != 0;
        top_bottom || bottom_top
    };

    let mut found = Vec::new();
    let mut columns = Vec::with_capacity(width);
    fn search(
        width: usize,
        target: usize,
        placed: usize,
        columns: &mut Vec<u8>,
        found: &mut Vec<Vec<u8>>,
        conflict: &dyn Fn(u8, u8) -> bool,
    ) {
        let remaining = width - columns.len();
        // at most two pawns per column
        if placed + 2 * remaining < target {
            return;
        }
        if remaining == 0 {
            if placed == target {
                found.push(columns.clone());
            }
            return;
        }
        for state in 0u8..4 {
            if columns.last().is_some_and(|&prev| conflict(prev, state)) {
                continue;
            }
            columns.push(state);
            search(
                width,
                target,
                placed + state.count_ones() as usize,
                columns,
                found,
                conflict,
            );
            columns.pop();
        }
    }
    search(width, width, 0, &mut columns, &mut found, &conflict);

    let mut strips = Vec::with_capacity(found.len());
    for cols in found {
        let pawns = cols.iter().enumerate().flat_map(|(c, &state)| {
            (0..2)
                .filter(move |r| state >> r & 1 == 1)
                .map(move |r| Cell::new(r + 1, c + 1))
        });
        let board = Board::new(2, width, pawns).expect("search stays on the board");
        debug_assert!(board.is_independent());
        let strip = Strip::from_board(&board)
            .ok_or_else(|| StripError::Undecomposable(board.render_ascii()))?;
        strips.push(strip);
    }
    strips.sort();
    strips.dedup();
    Ok(strips)
}

#[cfg(test)]
mod tests {
    use super::*;
    use SquareType::{A, B, C, D};

    fn s(word: &str) -> Strip {
        word.parse().unwrap()
    }

    #[test]
    fn descend_table() {
        assert_eq!(A.descend(), D);
        assert_eq!(B.descend(), C);
        assert_eq!(C.descend(), C);
        assert_eq!(D.descend(), C);
        for t in SquareType::ALL {
            assert_eq!(t.descend().descend(), C);
        }
    }

    #[test]
    fn square_patterns_are_independent_pairs() {
        for t in SquareType::ALL {
            let b = Strip::from_word(vec![t]).to_board();
            assert_eq!(b.pawn_count(), 2);
            assert!(b.is_independent());
            assert_eq!(SquareType::from_mask(t.mask()), Some(t));
        }
    }

    #[test]
    fn first_row_examples() {
        assert_eq!(first_row_strip(3, 1).unwrap(), s("AAA"));
        assert_eq!(first_row_strip(3, 4).unwrap(), s("BBB"));
        assert_eq!(first_row_strip(3, 2).unwrap(), s("AAB"));
        assert!(matches!(
            first_row_strip(3, 5),
            Err(StripError::IndexOutOfRange { .. })
        ));
        assert!(first_row_strip(3, 0).is_err());
    }

    #[test]
    fn entry_examples() {
        assert_eq!(strip_entry(3, 1, 2).unwrap(), s("AAB"));
        assert_eq!(strip_entry(3, 3, 3).unwrap(), s("DCB"));
        assert_eq!(strip_entry(3, 4, 1).unwrap(), s("DDD"));
        assert!(strip_entry(3, 5, 1).is_err());
        assert!(strip_entry(0, 1, 1).is_err());
    }

    #[test]
    fn entries_follow_closed_form() {
        for m in 1..=6 {
            for i in 1..=m + 1 {
                for j in 1..=m + 1 {
                    let expected: Vec<SquareType> = if i - 1 <= m + 1 - j {
                        std::iter::repeat_n(D, i - 1)
                            .chain(std::iter::repeat_n(A, m + 2 - i - j))
                            .chain(std::iter::repeat_n(B, j - 1))
                            .collect()
                    } else {
                        std::iter::repeat_n(D, m + 1 - j)
                            .chain(std::iter::repeat_n(C, i + j - m - 2))
                            .chain(std::iter::repeat_n(B, m + 1 - i))
                            .collect()
                    };
                    let e = strip_entry(m, i, j).unwrap();
                    assert_eq!(e.word(), expected.as_slice(), "m={m} i={i} j={j}");
                    assert!(e.is_canonical());
                }
            }
        }
    }

    #[test]
    fn matrix_small_cases() {
        let m1 = StripMatrix::build(1).unwrap();
        assert_eq!(m1.entries(), &[s("A"), s("B"), s("D"), s("C")]);
        let m3 = StripMatrix::build(3).unwrap();
        assert_eq!(m3.entries().len(), 16);
        assert_eq!(
            &m3.entries()[..4],
            &[s("AAA"), s("AAB"), s("ABB"), s("BBB")]
        );
        assert_eq!(StripMatrix::build(5).unwrap().entries().len(), 36);
        assert!(StripMatrix::build(0).is_err());
    }

    #[test]
    fn strip_boards() {
        let a = Strip::from_word(vec![A]).to_board();
        assert_eq!(a.pawns(), &[Cell::new(1, 1), Cell::new(1, 2)]);
        let aab = s("AAB").to_board();
        let expected = [(1, 1), (1, 2), (1, 3), (1, 4), (1, 6), (2, 6)].map(Cell::from);
        assert_eq!(aab.pawns(), &expected);
        assert!(aab.is_independent());
        let ddd = s("DDD").to_board();
        let mut expected = [(1, 1), (2, 1), (1, 3), (2, 3), (1, 5), (2, 5)].map(Cell::from);
        expected.sort();
        assert_eq!(ddd.pawns(), &expected);
        assert_eq!(Strip::from_board(&ddd), Some(s("DDD")));
    }

    #[test]
    fn follow_table_matches_attack_model() {
        let allowed = |l: SquareType| -> &'static [SquareType] {
            match l {
                A => &[A, B],
                B => &[B],
                C => &[B, C],
                D => &[A, B, C, D],
            }
        };
        for l in SquareType::ALL {
            for r in SquareType::ALL {
                assert_eq!(can_follow(l, r), allowed(l).contains(&r), "{l:?}{r:?}");
            }
        }
        assert!(!can_follow(B, A));
        assert!(can_follow(D, C));
        assert!(!can_follow(A, C));
    }

    #[test]
    fn census_small() {
        assert_eq!(
            enumerate_strips(1).unwrap(),
            vec![s("A"), s("B"), s("C"), s("D")]
        );
        assert_eq!(enumerate_strips(2).unwrap().len(), 9);
        let mut from_matrix = StripMatrix::build(3).unwrap().entries().to_vec();
        from_matrix.sort();
        assert_eq!(enumerate_strips(3).unwrap(), from_matrix);
    }

    #[test]
    fn stacking_examples() {
        let m = StripMatrix::build(3).unwrap();
        let e = |i, j| m.get(i, j).unwrap();
        assert!(can_stack_strips(e(1, 1), e(2, 2)).unwrap());
        assert!(!can_stack_strips(e(2, 1), e(1, 1)).unwrap());
        for s in m.entries() {
            assert!(can_stack_strips(s, s).unwrap());
        }
        assert!(matches!(
            can_stack_strips(&s("AB"), &s("ABB")),
            Err(StripError::WidthMismatch { .. })
        ));
    }

    #[test]
    fn locate_examples() {
        let m = StripMatrix::build(3).unwrap();
        assert_eq!(m.locate(&s("AAB")).unwrap(), (1, 2));
        assert_eq!(m.locate(&s("DCB")).unwrap(), (3, 3));
        assert!(matches!(
            m.locate(&s("CAA")),
            Err(StripError::NotInMatrix(_))
        ));
        assert!(matches!(
            m.locate(&s("CA")),
            Err(StripError::MatrixWidth { .. })
        ));
        for ((i, j), strip) in m.indexed() {
            assert_eq!(m.locate(strip).unwrap(), (i, j));
        }
    }

    #[test]
    fn canonical_shapes_count() {
        fn words(m: usize) -> Vec<Vec<SquareType>> {
            if m == 0 {
                return vec![vec![]];
            }
            words(m - 1)
                .into_iter()
                .flat_map(|w| {
                    SquareType::ALL.into_iter().map(move |t| {
                        let mut w = w.clone();
                        w.push(t);
                        w
                    })
                })
                .collect()
        }
        for m in 1..=5 {
            let matrix = StripMatrix::build(m).unwrap();
            let canonical: Vec<Strip> = words(m)
                .into_iter()
                .map(Strip::from_word)
                .filter(Strip::is_canonical)
                .collect();
            assert_eq!(canonical.len(), (m + 1) * (m + 2) - (m + 1));
            for c in &canonical {
                assert!(matrix.locate(c).is_ok(), "{c}");
            }
        }
    }

    #[test]
    fn parse_and_render() {
        assert!(matches!(
            "AXB".parse::<Strip>(),
            Err(StripError::UnknownSquare('X'))
        ));
        assert!(matches!("".parse::<Strip>(), Err(StripError::ZeroWidth)));
        let m1 = StripMatrix::build(1).unwrap();
        assert_eq!(m1.render_words(), "A B\n\nD C\n");
        assert_eq!(m1.render_ascii(), "PP .P\n.. .P\n\nP. ..\nP. PP\n");
        assert_eq!(m1.to_json(), r#"{"entries":[["A","B"],["D","C"]],"m":1}"#);
    }
}
