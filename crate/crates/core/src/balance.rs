//! Distance-balance predicate, per-edge imbalance diagnostics and the Szeged
//! index.

use serde::Serialize;

use crate::graph::{all_pairs_distances, DistanceMatrix, Graph, GraphError};

/// `|W_xy|` and `|W_yx|` for one edge `x < y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeBalance {
    pub x: usize,
    pub y: usize,
    pub closer_to_x: usize,
    pub closer_to_y: usize,
}

impl EdgeBalance {
    pub fn imbalance(&self) -> usize {
        self.closer_to_x.abs_diff(self.closer_to_y)
    }

    pub fn is_balanced(&self) -> bool {
        self.closer_to_x == self.closer_to_y
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImbalanceReport {
    /// One record per edge, lexicographic edge order.
    pub records: Vec<EdgeBalance>,
    pub balanced: bool,
    /// Edge of maximal imbalance; ties go to the lexicographically smallest.
    pub worst_edge: Option<(usize, usize)>,
}

fn count_closer(dist: &DistanceMatrix, x: usize, y: usize) -> EdgeBalance {
    let (mut cx, mut cy) = (0, 0);
    for (a, b) in dist.row(x).iter().zip(dist.row(y)) {
        if a < b {
            cx += 1;
        } else if b < a {
            cy += 1;
        }
    }
    EdgeBalance { x, y, closer_to_x: cx, closer_to_y: cy }
}

fn edge_balances(g: &Graph) -> Result<Vec<EdgeBalance>, GraphError> {
    let dist = all_pairs_distances(g)?;
    Ok(g.edges().map(|(x, y)| count_closer(&dist, x, y)).collect())
}

pub fn is_distance_balanced(g: &Graph) -> Result<bool, GraphError> {
    let dist = all_pairs_distances(g)?;
    Ok(g.edges().all(|(x, y)| count_closer(&dist, x, y).is_balanced()))
}

pub fn imbalance_report(g: &Graph) -> Result<ImbalanceReport, GraphError> {
    let records = edge_balances(g)?;
    let balanced = records.iter().all(EdgeBalance::is_balanced);
    let worst_edge = if balanced {
        None
    } else {
        // max_by_key keeps the last maximum; scan manually for the first.
        let mut worst = records[0];
        for r in &records[1..] {
            if r.imbalance() > worst.imbalance() {
                worst = *r;
            }
        }
        Some((worst.x, worst.y))
    };
    Ok(ImbalanceReport { records, balanced, worst_edge })
}

/// Szeged index `sum_{xy in E} |W_xy| * |W_yx|`.
///
/// Each term is at most `n^2 / 4` and there are fewer than `n^2 / 2` edges,
/// so the `u64` result cannot overflow for `n <= 40_000`.
pub fn szeged_index(g: &Graph) -> Result<u64, GraphError> {
    Ok(edge_balances(g)?.iter().map(|r| r.closer_to_x as u64 * r.closer_to_y as u64).sum())
}
