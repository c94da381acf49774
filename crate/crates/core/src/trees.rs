//! Starlike trees, brooms, and recognition of the tree families with
//! maximum degree at least `n - 3`.
//!
//! Canonical labels: the center `o` is vertex 0, its neighbours
//! `x_1..x_m` are `1..=m`, and the pendant vertices `y`, `z` (when present)
//! are `m + 1` and `m + 2`.
//!
//! | family | order | edges besides `o x_i` |
//! |--------|-------|-----------------------|
//! | `Star`  `K_{1,m}`        | `m + 1` | none |
//! | `S2`    `S(2,1^{m-1})`   | `m + 2` | `x_1 y` |
//! | `S22`   `S(2^2,1^{m-2})` | `m + 3` | `x_1 y`, `x_2 z` |
//! | `S3`    `S(3,1^{m-1})`   | `m + 3` | `x_1 y`, `y z` |
//! | `Broom`                  | `m + 3` | `x_1 y`, `x_1 z` |

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("starlike spec has no branches")]
    EmptySpec,
    #[error("invalid starlike spec {0:?}")]
    BadSpec(String),
    #[error("{family} needs m >= {min}, got {m}")]
    ParameterTooSmall { family: FamilyTag, m: usize, min: usize },
    #[error("input is not a tree")]
    NotATree,
}

/// Branch lengths `n_1, ..., n_k` of a starlike tree `S(n_1, ..., n_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarlikeSpec {
    branches: Vec<usize>,
}

impl StarlikeSpec {
    pub fn new(branches: Vec<usize>) -> Result<Self, TreeError> {
        if branches.is_empty() {
            return Err(TreeError::EmptySpec);
        }
        if branches.contains(&0) {
            return Err(TreeError::BadSpec(format!("{branches:?}")));
        }
        Ok(Self { branches })
    }

    /// From `(length, multiplicity)` pairs, e.g. `[(3, 1), (1, 4)]` for `S(3,1^4)`.
    pub fn from_powers(powers: &[(usize, usize)]) -> Result<Self, TreeError> {
        Self::new(powers.iter().flat_map(|&(len, mult)| std::iter::repeat(len).take(mult)).collect())
    }

    pub fn branches(&self) -> &[usize] {
        &self.branches
    }

    pub fn order(&self) -> usize {
        self.branches.iter().sum::<usize>() + 1
    }

    /// The named family this spec belongs to, if any.
    pub fn family(&self) -> Option<(FamilyTag, usize)> {
        let mut sorted = self.branches.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let m = sorted.len();
        let ones = sorted.iter().filter(|&&b| b == 1).count();
        match (&sorted[..m - ones], ones) {
            ([], _) => Some((FamilyTag::Star, m)),
            ([2], _) => Some((FamilyTag::S2, m)),
            ([2, 2], _) => Some((FamilyTag::S22, m)),
            ([3], _) => Some((FamilyTag::S3, m)),
            _ => None,
        }
    }
}

impl FromStr for StarlikeSpec {
    type Err = TreeError;

    /// Comma-separated lengths with optional `^multiplicity`: `"3,1^4"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Err(TreeError::EmptySpec);
        }
        let bad = || TreeError::BadSpec(s.to_string());
        let mut powers = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let (len, mult) = match part.split_once('^') {
                Some((l, e)) => (l.trim(), e.trim().parse::<usize>().map_err(|_| bad())?),
                None => (part, 1),
            };
            let len: usize = len.parse().map_err(|_| bad())?;
            if len == 0 {
                return Err(bad());
            }
            powers.push((len, mult));
        }
        Self::from_powers(&powers)
    }
}

impl fmt::Display for StarlikeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.branches.len() {
            let len = self.branches[i];
            let run = self.branches[i..].iter().take_while(|&&b| b == len).count();
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if run > 1 {
                write!(f, "{len}^{run}")?;
            } else {
                write!(f, "{len}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Family tags in classification precedence order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyTag {
    /// `K_{1,m}`.
    Star,
    /// `S(2,1^{m-1})`.
    S2,
    /// `S(2^2,1^{m-2})`.
    S22,
    /// `S(3,1^{m-1})`.
    S3,
    /// Star plus two pendants on `x_1`.
    Broom,
    /// Non-tree graph with a dominating vertex.
    MaxDegMinus1,
    Other,
}

impl FamilyTag {
    pub const TREE_FAMILIES: [FamilyTag; 5] =
        [FamilyTag::Star, FamilyTag::S2, FamilyTag::S22, FamilyTag::S3, FamilyTag::Broom];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Star => "star",
            FamilyTag::S2 => "s2",
            FamilyTag::S22 => "s22",
            FamilyTag::S3 => "s3",
            FamilyTag::Broom => "broom",
            FamilyTag::MaxDegMinus1 => "max_deg_n_minus_1",
            FamilyTag::Other => "other",
        }
    }

    /// True for the five tree families that [`family_tree`] can build.
    pub fn is_tree_family(self) -> bool {
        self < FamilyTag::MaxDegMinus1
    }

    /// Smallest `m` for which [`family_tree`] builds this family.
    pub fn min_m(self) -> usize {
        match self {
            FamilyTag::Star => 0,
            FamilyTag::S2 => 1,
            FamilyTag::S22 | FamilyTag::S3 => 2,
            FamilyTag::Broom => 3,
            FamilyTag::MaxDegMinus1 | FamilyTag::Other => usize::MAX,
        }
    }

    /// Vertex count of the family member with parameter `m`.
    pub fn order(self, m: usize) -> usize {
        match self {
            FamilyTag::Star => m + 1,
            FamilyTag::S2 => m + 2,
            _ => m + 3,
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyTag::TREE_FAMILIES
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| TreeError::BadSpec(s.to_string()))
    }
}

/// Result of [`classify_tree`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeFamily {
    pub tag: FamilyTag,
    /// Degree of the central vertex, which is the maximum degree.
    pub m: usize,
    /// `relabeling[v]` is the canonical label of input vertex `v`.
    pub relabeling: Vec<usize>,
}

impl TreeFamily {
    pub fn is_recognized(&self) -> bool {
        self.tag.is_tree_family()
    }

    /// Maps canonical labels back to input labels.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.relabeling.len()];
        for (v, &c) in self.relabeling.iter().enumerate() {
            inv[c] = v;
        }
        inv
    }
}

/// The canonically labelled member of a tree family.
pub fn family_tree(tag: FamilyTag, m: usize) -> Result<Graph, TreeError> {
    if !tag.is_tree_family() {
        return Err(TreeError::BadSpec(tag.name().to_string()));
    }
    if m < tag.min_m() {
        return Err(TreeError::ParameterTooSmall { family: tag, m, min: tag.min_m() });
    }
    let (y, z) = (m + 1, m + 2);
    let mut edges: Vec<(usize, usize)> = (1..=m).map(|x| (0, x)).collect();
    match tag {
        FamilyTag::Star => {}
        FamilyTag::S2 => edges.push((1, y)),
        FamilyTag::S22 => edges.extend([(1, y), (2, z)]),
        FamilyTag::S3 => edges.extend([(1, y), (y, z)]),
        FamilyTag::Broom => edges.extend([(1, y), (1, z)]),
        FamilyTag::MaxDegMinus1 | FamilyTag::Other => unreachable!("rejected above"),
    }
    Ok(Graph::from_edge_list(tag.order(m), edges).expect("canonical edges are in range"))
}

/// Builds `S(n_1, ..., n_k)` with the center at vertex 0.
///
/// Named families use the canonical layout; otherwise branch `j` occupies
/// consecutive indices, nearest-to-center first.
pub fn starlike(spec: &StarlikeSpec) -> Graph {
    if let Some((tag, m)) = spec.family() {
        return family_tree(tag, m).expect("named families are valid for every m >= 1");
    }
    let mut edges = Vec::with_capacity(spec.order() - 1);
    let mut next = 1;
    for &len in spec.branches() {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edge_list(spec.order(), edges).expect("branch indices are in range")
}

/// The broom on `m + 3` vertices; `m >= 3` keeps it distinct from `S(2,1^2)`.
pub fn broom(m: usize) -> Result<Graph, TreeError> {
    family_tree(FamilyTag::Broom, m)
}

/// Identifies the family of a tree with `Δ >= n - 3` and the relabeling to
/// its canonical form.
///
/// Where families coincide at small `m`, precedence is
/// `Star > S2 > S22 > S3 > Broom`; among equally good centers the smallest
/// index wins.
pub fn classify_tree(t: &Graph) -> Result<TreeFamily, TreeError> {
    if !t.is_tree() {
        return Err(TreeError::NotATree);
    }
    let delta = t.max_degree();
    let best = (0..t.n())
        .filter(|&c| t.degree(c) == delta)
        .filter_map(|c| classify_at(t, c))
        .min_by_key(|(tag, _)| *tag);
    Ok(match best {
        Some((tag, relabeling)) => TreeFamily { tag, m: delta, relabeling },
        None => TreeFamily { tag: FamilyTag::Other, m: delta, relabeling: (0..t.n()).collect() },
    })
}

fn classify_at(t: &Graph, center: usize) -> Option<(FamilyTag, Vec<usize>)> {
    let n = t.n();
    let m = t.degree(center);
    let xs: Vec<usize> = t.neighbors(center).collect();
    let rest: Vec<usize> = (0..n).filter(|&v| v != center && !t.has_edge(center, v)).collect();
    // The unique neighbour of `v` among `xs`, if any.
    let anchor = |v: usize| t.neighbors(v).find(|&u| u != center && t.has_edge(center, u));

    let mut relabel = vec![usize::MAX; n];
    relabel[center] = 0;
    // x_1, x_2 first (as given), then the remaining neighbours by index.
    let place_xs = |relabel: &mut Vec<usize>, first: &[usize]| {
        for (label, &x) in (1..).zip(first.iter().chain(xs.iter().filter(|x| !first.contains(x)))) {
            relabel[x] = label;
        }
    };

    let tag = match rest[..] {
        [] => {
            place_xs(&mut relabel, &[]);
            FamilyTag::Star
        }
        [y] => {
            place_xs(&mut relabel, &[anchor(y)?]);
            relabel[y] = m + 1;
            FamilyTag::S2
        }
        [a, b] => {
            let (tag, y, z, first) = if t.has_edge(a, b) {
                let (y, z) = if anchor(a).is_some() { (a, b) } else { (b, a) };
                (FamilyTag::S3, y, z, vec![anchor(y)?])
            } else {
                let (xa, xb) = (anchor(a)?, anchor(b)?);
                if xa == xb {
                    (FamilyTag::Broom, a, b, vec![xa])
                } else {
                    (FamilyTag::S22, a, b, vec![xa, xb])
                }
            };
            place_xs(&mut relabel, &first);
            relabel[y] = m + 1;
            relabel[z] = m + 2;
            tag
        }
        _ => return None,
    };
    Some((tag, relabel))
}
