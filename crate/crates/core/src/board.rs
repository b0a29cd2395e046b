//! Boards, the pawn attack relation, and the text formats boards travel in.
//!
//! Coordinates are 1-based with row 1 at the top. Pawns are kept in
//! row-major order, so two boards holding the same cells compare equal.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::BoardError;

/// A square on the board, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl From<(usize, usize)> for Cell {
    fn from((row, col): (usize, usize)) -> Self {
        Cell { row, col }
    }
}

/// Two pawns attack each other exactly when they sit on diagonally adjacent
/// squares. Facing does not matter: one of the two is always the attacker.
pub fn attacks(p: Cell, q: Cell) -> bool {
    p.row.abs_diff(q.row) == 1 && p.col.abs_diff(q.col) == 1
}

/// A pawn placement on a `rows x cols` board.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Board {
    rows: usize,
    cols: usize,
    pawns: Vec<Cell>,
}

impl Board {
    /// Builds a board, sorting the pawns into canonical order.
    pub fn new<I, C>(rows: usize, cols: usize, pawns: I) -> Result<Self, BoardError>
    where
        I: IntoIterator<Item = C>,
        C: Into<Cell>,
    {
        if rows == 0 || cols == 0 {
            return Err(BoardError::EmptyDimensions { rows, cols });
        }
        let mut pawns: Vec<Cell> = pawns.into_iter().map(Into::into).collect();
        if let Some(&cell) = pawns
            .iter()
            .find(|c| c.row == 0 || c.col == 0 || c.row > rows || c.col > cols)
        {
            return Err(BoardError::OutOfRange { cell, rows, cols });
        }
        pawns.sort_unstable();
        if let Some(w) = pawns.windows(2).find(|w| w[0] == w[1]) {
            return Err(BoardError::DuplicateCell(w[0]));
        }
        Ok(Board { rows, cols, pawns })
    }

    pub fn empty(rows: usize, cols: usize) -> Result<Self, BoardError> {
        Board::new(rows, cols, std::iter::empty::<Cell>())
    }

    /// Builds a board from one bitmask per row; bit `k` marks column `k + 1`.
    pub fn from_row_masks(rows: usize, cols: usize, masks: &[u64]) -> Result<Self, BoardError> {
        if masks.len() != rows {
            return Err(BoardError::MaskCount {
                expected: rows,
                found: masks.len(),
            });
        }
        let pawns = masks.iter().enumerate().flat_map(|(r, &mask)| {
            (0..64)
                .filter(move |bit| mask >> bit & 1 == 1)
                .map(move |bit| Cell::new(r + 1, bit + 1))
        });
        Board::new(rows, cols, pawns)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Pawns in row-major order.
    pub fn pawns(&self) -> &[Cell] {
        &self.pawns
    }

    pub fn pawn_count(&self) -> usize {
        self.pawns.len()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.pawns.binary_search(&cell).is_ok()
    }

    /// One bitmask per row, bit `k` for column `k + 1`. Widths above 64 are
    /// not representable.
    pub fn row_masks(&self) -> Vec<u64> {
        assert!(self.cols <= 64, "row masks need at most 64 columns");
        let mut masks = vec![0u64; self.rows];
        for p in &self.pawns {
            masks[p.row - 1] |= 1 << (p.col - 1);
        }
        masks
    }

    /// Mirror across the main diagonal.
    pub fn transpose(&self) -> Board {
        let pawns = self.pawns.iter().map(|p| Cell::new(p.col, p.row));
        Board::new(self.cols, self.rows, pawns).expect("transposed cells stay in range")
    }

    /// The rectangle of rows `first..first + height` as a board of its own.
    pub fn row_band(&self, first: usize, height: usize) -> Board {
        let pawns = self
            .pawns
            .iter()
            .filter(|p| p.row >= first && p.row < first + height)
            .map(|p| Cell::new(p.row - first + 1, p.col));
        Board::new(height, self.cols, pawns).expect("band cells stay in range")
    }

    /// Stacks `self` directly above `below`. Widths must match.
    pub fn stack(&self, below: &Board) -> Result<Board, BoardError> {
        if self.cols != below.cols {
            return Err(BoardError::WidthMismatch {
                top: self.cols,
                bottom: below.cols,
            });
        }
        let shifted = below
            .pawns
            .iter()
            .map(|p| Cell::new(p.row + self.rows, p.col));
        Board::new(
            self.rows + below.rows,
            self.cols,
            self.pawns.iter().copied().chain(shifted),
        )
    }

    fn occupancy(&self) -> Vec<bool> {
        let mut grid = vec![false; self.rows * self.cols];
        for p in &self.pawns {
            grid[(p.row - 1) * self.cols + (p.col - 1)] = true;
        }
        grid
    }

    /// Every attacking pair, each listed once with the row-major earlier cell
    /// first, sorted by that cell.
    pub fn violations(&self) -> Vec<(Cell, Cell)> {
        let grid = self.occupancy();
        let occupied = |r: usize, c: usize| grid[(r - 1) * self.cols + (c - 1)];
        let mut out = Vec::new();
        for &p in &self.pawns {
            if p.row == self.rows {
                continue;
            }
            if p.col > 1 && occupied(p.row + 1, p.col - 1) {
                out.push((p, Cell::new(p.row + 1, p.col - 1)));
            }
            if p.col < self.cols && occupied(p.row + 1, p.col + 1) {
                out.push((p, Cell::new(p.row + 1, p.col + 1)));
            }
        }
        out
    }

    pub fn is_independent(&self) -> bool {
        let grid = self.occupancy();
        let occupied = |r: usize, c: usize| grid[(r - 1) * self.cols + (c - 1)];
        self.pawns.iter().all(|p| {
            p.row == self.rows
                || !((p.col > 1 && occupied(p.row + 1, p.col - 1))
                    || (p.col < self.cols && occupied(p.row + 1, p.col + 1)))
        })
    }

    /// `P` for a pawn, `.` for an empty square, one line per row.
    pub fn render_ascii(&self) -> String {
        let grid = self.occupancy();
        let mut out = String::with_capacity(self.rows * (self.cols + 1));
        for row in grid.chunks(self.cols) {
            out.extend(row.iter().map(|&p| if p { 'P' } else { '.' }));
            out.push('\n');
        }
        out
    }

    /// Parses the output of [`Board::render_ascii`]. The final newline is
    /// optional.
    pub fn from_ascii(text: &str) -> Result<Board, BoardError> {
        let body = text.strip_suffix('\n').unwrap_or(text);
        if body.is_empty() {
            return Err(BoardError::Ascii("no rows".into()));
        }
        let lines: Vec<&str> = body.split('\n').collect();
        let cols = lines[0].chars().count();
        let mut pawns = Vec::new();
        for (r, line) in lines.iter().enumerate() {
            if line.chars().count() != cols {
                return Err(BoardError::Ascii(format!(
                    "row {} has {} squares, expected {}",
                    r + 1,
                    line.chars().count(),
                    cols
                )));
            }
            for (c, ch) in line.chars().enumerate() {
                match ch {
                    'P' => pawns.push(Cell::new(r + 1, c + 1)),
                    '.' => {}
                    other => {
                        return Err(BoardError::Ascii(format!(
                            "unexpected character {other:?} at row {}, column {}",
                            r + 1,
                            c + 1
                        )))
                    }
                }
            }
        }
        Board::new(lines.len(), cols, pawns)
    }

    /// Canonical JSON: `{"rows":R,"cols":C,"pawns":[[r,c],...]}`.
    pub fn to_json(&self) -> String {
        let raw = BoardJson {
            rows: self.rows,
            cols: self.cols,
            pawns: self.pawns.iter().map(|p| [p.row, p.col]).collect(),
        };
        serde_json::to_string(&raw).expect("board serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Board, BoardError> {
        let raw: BoardJson =
            serde_json::from_str(text).map_err(|e| BoardError::Malformed(e.to_string()))?;
        Board::new(
            raw.rows,
            raw.cols,
            raw.pawns.into_iter().map(|[r, c]| Cell::new(r, c)),
        )
    }

    /// Accepts either JSON or ASCII, picking by the first non-blank character.
    pub fn parse(text: &str) -> Result<Board, BoardError> {
        if text.trim_start().starts_with('{') {
            Board::from_json(text)
        } else {
            Board::from_ascii(text.trim_start_matches(['\r', ' ', '\t', '\n']).trim_end())
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BoardJson {
    rows: usize,
    cols: usize,
    pawns: Vec<[usize; 2]>,
}
