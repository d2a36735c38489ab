//! Finite projective spaces `PG(δ, q)` built from coordinates over `F_q`,
//! with arc and cap analysis and incidence structure.

mod arcs;
mod incidence;

use serde::Serialize;

pub use arcs::{
    arc_search, classify_arc, is_arc, is_ovoid, tangent_profile, ArcClass, ArcReport, ArcSearch,
    SearchMode, MAX_EXHAUSTIVE_POINTS,
};
pub use incidence::{
    bruck_ryser_excluded, canonical_form, incidence_matrix, max2, max3_binary, max3_plane,
    max3_solid, permutation_equivalent, plane_max_arc, sum_of_two_squares, MAX_CANONICAL_SIZE,
};

use crate::error::{Error, Result};
use crate::gf::FieldSpec;

/// Bound on `q^{δ+1}`.
pub const MAX_COORDINATE_SPACE: u64 = 1 << 20;

#[derive(Debug, Clone)]
pub struct ProjectiveSpace {
    delta: usize,
    field: FieldSpec,
    /// Representatives with first nonzero coordinate 1, in lexicographic order.
    points: Vec<Vec<u32>>,
    /// Sorted point indices of each line.
    lines: Vec<Vec<usize>>,
    lines_through: Vec<Vec<usize>>,
    /// Coordinate code -> point index of the normalized vector.
    point_of_code: Vec<u32>,
}

/// Serializable view of a space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpaceSummary {
    pub delta: usize,
    pub q: u32,
    pub points: Vec<Vec<u32>>,
    pub lines: Vec<Vec<usize>>,
}

impl ProjectiveSpace {
    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn lines_through(&self, point: usize) -> &[usize] {
        &self.lines_through[point]
    }

    pub fn summary(&self) -> SpaceSummary {
        SpaceSummary {
            delta: self.delta,
            q: self.q(),
            points: self.points.clone(),
            lines: self.lines.clone(),
        }
    }

    fn code(&self, v: &[u32]) -> usize {
        let q = self.q() as usize;
        v.iter().fold(0usize, |acc, &c| acc * q + c as usize)
    }

    /// Index of the point spanned by a nonzero vector.
    pub fn point_of(&self, v: &[u32]) -> Option<usize> {
        if v.len() != self.delta + 1 || v.iter().all(|&c| c == 0) {
            return None;
        }
        match self.point_of_code[self.code(v)] {
            u32::MAX => None,
            i => Some(i as usize),
        }
    }

    /// Sorted points on the line through two distinct points.
    pub fn line_through(&self, i: usize, j: usize) -> Vec<usize> {
        let (pi, pj) = (&self.points[i], &self.points[j]);
        let mut on_line: Vec<usize> = (0..self.q())
            .map(|x| {
                let v: Vec<u32> = pi
                    .iter()
                    .zip(pj)
                    .map(|(&a, &b)| self.field.add_idx(self.field.mul_idx(x, a), b))
                    .collect();
                self.point_of(&v)
                    .expect("span of independent points is nonzero")
            })
            .collect();
        on_line.push(i);
        on_line.sort_unstable();
        on_line
    }

    /// Whether three points lie on a common line.
    pub fn collinear(&self, i: usize, j: usize, k: usize) -> bool {
        if i == j || j == k || i == k {
            return true;
        }
        self.line_through(i, j).binary_search(&k).is_ok()
    }
}

/// `PG(δ, q)` for `δ ∈ {2, 3}`.
pub fn build_pg(delta: usize, field: &FieldSpec) -> Result<ProjectiveSpace> {
    if !(2..=3).contains(&delta) {
        return Err(Error::UnsupportedDelta(delta));
    }
    let q = field.q() as u64;
    let size = q.pow(delta as u32 + 1);
    if size > MAX_COORDINATE_SPACE {
        return Err(Error::SpaceTooLarge(size));
    }
    let dim = delta + 1;
    let decode = |mut code: u64| {
        let mut v = vec![0u32; dim];
        for slot in v.iter_mut().rev() {
            *slot = (code % q) as u32;
            code /= q;
        }
        v
    };
    let points: Vec<Vec<u32>> = (1..size)
        .map(decode)
        .filter(|v| v.iter().find(|&&c| c != 0) == Some(&1))
        .collect();

    let mut point_of_code = vec![u32::MAX; size as usize];
    for code in 1..size {
        let v = decode(code);
        let lead = *v.iter().find(|&&c| c != 0).expect("nonzero vector");
        let inv = field.inv_idx(lead).expect("nonzero lead");
        let normalized: Vec<u32> = v.iter().map(|&c| field.mul_idx(c, inv)).collect();
        let idx = points
            .binary_search_by(|p| p.as_slice().cmp(normalized.as_slice()))
            .expect("normalized vector is a listed point");
        point_of_code[code as usize] = idx as u32;
    }

    let mut space = ProjectiveSpace {
        delta,
        field: field.clone(),
        points,
        lines: Vec::new(),
        lines_through: Vec::new(),
        point_of_code,
    };

    let n = space.points.len();
    let mut lines = Vec::new();
    let mut covered = vec![false; n];
    for i in 0..n {
        covered.iter_mut().for_each(|c| *c = false);
        for j in i + 1..n {
            if covered[j] {
                continue;
            }
            let line = space.line_through(i, j);
            for &k in &line {
                covered[k] = true;
            }
            if line[0] == i {
                lines.push(line);
            }
        }
    }
    lines.sort();
    let mut lines_through = vec![Vec::new(); n];
    for (l, line) in lines.iter().enumerate() {
        for &pt in line {
            lines_through[pt].push(l);
        }
    }
    space.lines = lines;
    space.lines_through = lines_through;
    Ok(space)
}

/// A set of points of a space, kept sorted and deduplicated.
#[derive(Debug, Clone)]
pub struct PointSet<'a> {
    space: &'a ProjectiveSpace,
    indices: Vec<usize>,
}

impl<'a> PointSet<'a> {
    pub fn new(space: &'a ProjectiveSpace, mut indices: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= space.point_count()) {
            return Err(Error::InvalidPoint(bad));
        }
        indices.sort_unstable();
        indices.dedup();
        Ok(Self { space, indices })
    }

    pub fn space(&self) -> &'a ProjectiveSpace {
        self.space
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, point: usize) -> bool {
        self.indices.binary_search(&point).is_ok()
    }
}
