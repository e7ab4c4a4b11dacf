//! Bead diagrams of `β_{s,t}`.
//!
//! The largest element `st - s - t` sits at the bottom-left of the base
//! block. Moving up a row subtracts `s`, moving right a column subtracts `t`.
//! Extended diagrams add rows below (each `+s`) and columns on the left
//! (each `+t`); in those every value may appear more than once.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::closure::CoreParams;
use crate::partition::BetaSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BeadDiagram {
    params: CoreParams,
    extra_rows: u32,
    extra_cols: u32,
    /// Top row first.
    rows: Vec<Vec<Option<u32>>>,
    /// Diagram row offset `r` of the top row; the base block has `r >= 0`.
    top_offset: i64,
}

/// JSON view of a diagram: `{"rows": [[{"v": 23, "circled": true}, null]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BeadGrid {
    pub rows: Vec<Vec<Option<GridCell>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridCell {
    pub v: u32,
    pub circled: bool,
}

pub fn build(params: CoreParams, extra_rows: u32, extra_cols: u32) -> BeadDiagram {
    let (s, t) = (i64::from(params.s()), i64::from(params.t()));
    let corner = params.frobenius();
    let (ext_r, ext_c) = (i64::from(extra_rows), i64::from(extra_cols));
    let largest = corner + ext_r * s + ext_c * t;
    if largest <= 0 {
        return BeadDiagram {
            params,
            extra_rows,
            extra_cols,
            rows: Vec::new(),
            top_offset: 0,
        };
    }
    let top_offset = (corner + ext_c * t - 1).div_euclid(s);
    let last_col = (corner + ext_r * s - 1).div_euclid(t);
    let rows = (-ext_r..=top_offset)
        .rev()
        .map(|r| {
            (-ext_c..=last_col)
                .map(|c| {
                    let v = corner - r * s - c * t;
                    (v > 0).then_some(v as u32)
                })
                .collect()
        })
        .collect();
    BeadDiagram {
        params,
        extra_rows,
        extra_cols,
        rows,
        top_offset,
    }
}

impl BeadDiagram {
    pub fn params(&self) -> CoreParams {
        self.params
    }

    pub fn extra_rows(&self) -> u32 {
        self.extra_rows
    }

    pub fn extra_cols(&self) -> u32 {
        self.extra_cols
    }

    /// Grid rows, top row first. Every row has the same length.
    pub fn rows(&self) -> &[Vec<Option<u32>>] {
        &self.rows
    }

    /// Populated cells of each row from the bottom row up.
    pub fn rows_bottom_up(&self) -> Vec<Vec<u32>> {
        self.rows
            .iter()
            .rev()
            .map(|row| row.iter().flatten().copied().collect())
            .collect()
    }

    pub fn cell(&self, row: usize, col: usize) -> Option<u32> {
        self.rows.get(row).and_then(|r| r.get(col)).copied().flatten()
    }

    /// Whether grid position `(row, col)` lies in the base (unextended) block.
    pub fn is_base(&self, row: usize, col: usize) -> bool {
        let r = self.top_offset - row as i64;
        r >= 0 && col >= self.extra_cols as usize && self.cell(row, col).is_some()
    }

    /// Values of the base block, i.e. `β_{s,t}`.
    pub fn base_values(&self) -> BetaSet {
        let values = self.positions().filter(|&(r, c)| self.is_base(r, c)).map(|(r, c)| {
            self.cell(r, c).expect("populated")
        });
        BetaSet::from_unsorted(values).expect("base block values are distinct")
    }

    fn positions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| (0..row.len()).map(move |c| (r, c)))
    }

    pub fn to_grid(&self, circled: &BetaSet) -> BeadGrid {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| cell.map(|v| GridCell { v, circled: circled.contains(v) }))
                    .collect()
            })
            .collect();
        BeadGrid { rows }
    }
}

/// Fixed-width text rendering. Every cell is as wide as the widest value;
/// circled values are wrapped in parentheses, other values padded with
/// spaces, and each line has its trailing spaces removed.
pub fn render(d: &BeadDiagram, circled: &BetaSet) -> String {
    render_rows(&d.rows, circled)
}

/// [`render`] for any grid of optional values, top row first.
pub fn render_rows(rows: &[Vec<Option<u32>>], circled: &BetaSet) -> String {
    let widest = rows
        .iter()
        .flatten()
        .flatten()
        .max()
        .map_or(1, |v| v.to_string().len());
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push(' ');
            }
            match cell {
                Some(v) if circled.contains(*v) => write!(line, "({v:>widest$})"),
                Some(v) => write!(line, " {v:>widest$} "),
                None => write!(line, "{:1$}", "", widest + 2),
            }
            .expect("writing to a String");
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Core test read off the diagram: every circled value lies in the base
/// block, and every circled base cell has circled neighbours above and to
/// the right wherever those cells exist.
pub fn diagram_core_check(d: &BeadDiagram, circled: &BetaSet) -> bool {
    let mut found = BetaSet::empty();
    for (r, c) in d.positions() {
        if !d.is_base(r, c) {
            continue;
        }
        let v = d.cell(r, c).expect("base cells are populated");
        if !circled.contains(v) {
            continue;
        }
        found = found.union(&BetaSet::from_sorted_unchecked(vec![v]));
        let above = r.checked_sub(1).and_then(|up| d.cell(up, c));
        let right = d.cell(r, c + 1);
        if [above, right].into_iter().flatten().any(|n| !circled.contains(n)) {
            return false;
        }
    }
    found.len() == circled.len()
}
