use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A Young diagram given by its weakly decreasing row lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Structural(alloc::format!("rows {rows:?} are not weakly decreasing")));
        }
        Ok(YoungDiagram { rows })
    }

    pub fn empty() -> Self {
        YoungDiagram { rows: Vec::new() }
    }

    /// `[1^k, 0^{n-k}]`.
    pub fn column(k: usize, n: usize) -> Self {
        YoungDiagram { rows: (0..n).map(|i| usize::from(i < k)).collect() }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Number of nonzero rows.
    pub fn height(&self) -> usize {
        self.rows.iter().take_while(|&&l| l > 0).count()
    }

    pub fn boxes(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes() == 0
    }

    /// Cells `(i, j)`, both counted from one, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, &l)| (1..=l).map(move |j| (i + 1, j)))
    }

    /// `m_i`, the number of columns of length `i`, for `i = 1..=n`.
    pub fn column_counts(&self, n: usize) -> Vec<usize> {
        (1..=n).map(|i| self.row(i - 1) - self.row(i)).collect()
    }

    fn row(&self, i: usize) -> usize {
        self.rows.get(i).copied().unwrap_or(0)
    }

    /// Whether the diagram is a single column `[1^k]` with `1 ≤ k < n`.
    pub fn is_column_shape(&self, n: usize) -> bool {
        let k = self.height();
        k >= 1 && k < n && self.rows.iter().all(|&l| l <= 1)
    }

    /// Removes every column of length `n`, padding to `n` rows.
    pub fn strip_full_columns(&self, n: usize) -> Self {
        let full = if self.rows.len() >= n { self.row(n - 1) } else { 0 };
        YoungDiagram { rows: (0..n).map(|i| self.row(i) - full).collect() }
    }

    /// Pads with zero rows to `n` rows; `None` if there are more nonzero
    /// rows than that.
    pub fn padded(&self, n: usize) -> Option<Self> {
        (self.height() <= n).then(|| YoungDiagram { rows: (0..n).map(|i| self.row(i)).collect() })
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, l) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("]")
    }
}

/// All diagrams with at most `n` rows (padded to `n`) and at most
/// `max_boxes` boxes: by box count, then lexicographically decreasing.
pub fn enumerate_diagrams(n: usize, max_boxes: usize) -> Vec<YoungDiagram> {
    fn rec(left: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for l in (0..=cap.min(left)).rev() {
            cur.push(l);
            rec(left - l, l, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for m in 0..=max_boxes {
        let mut parts = Vec::new();
        rec(m, m, n, &mut Vec::new(), &mut parts);
        out.extend(parts.into_iter().map(|rows| YoungDiagram { rows }));
    }
    out
}
