use rayon::prelude::*;
use serde::Serialize;

use super::{PointSet, ProjectiveSpace};
use crate::error::{Error, Result};
use crate::gf::rank;

/// Largest space searched exhaustively.
pub const MAX_EXHAUSTIVE_POINTS: usize = 21;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArcReport {
    /// No three points collinear (arc in a plane, cap in a solid).
    pub no_three_collinear: bool,
    /// First collinear triple in lexicographic order.
    pub collinear_triple: Option<[usize; 3]>,
    /// Every `δ + 1` points are linearly independent.
    pub general_position: bool,
    /// First dependent `(δ+1)`-subset in lexicographic order.
    pub dependent_subset: Option<Vec<usize>>,
}

impl ArcReport {
    /// Arc in the sense that any `δ + 1` points form a basis.
    pub fn is_arc(&self) -> bool {
        self.general_position
    }

    pub fn is_cap(&self) -> bool {
        self.no_three_collinear
    }
}

fn first_combination<F: FnMut(&[usize]) -> bool>(
    items: &[usize],
    size: usize,
    mut bad: F,
) -> Option<Vec<usize>> {
    fn walk<F: FnMut(&[usize]) -> bool>(
        items: &[usize],
        size: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        bad: &mut F,
    ) -> bool {
        if chosen.len() == size {
            return bad(chosen);
        }
        for i in start..items.len() {
            chosen.push(items[i]);
            if walk(items, size, i + 1, chosen, bad) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(size);
    walk(items, size, 0, &mut chosen, &mut bad).then_some(chosen)
}

pub fn is_arc(set: &PointSet<'_>) -> ArcReport {
    let space = set.space();
    let collinear_triple =
        first_combination(set.indices(), 3, |t| space.collinear(t[0], t[1], t[2]))
            .map(|t| [t[0], t[1], t[2]]);
    let dependent_subset = if space.delta() == 2 {
        collinear_triple.map(|t| t.to_vec())
    } else {
        first_combination(set.indices(), space.delta() + 1, |subset| {
            let rows: Vec<Vec<u32>> = subset.iter().map(|&i| space.points()[i].clone()).collect();
            rank(space.field(), &rows) < subset.len()
        })
    };
    ArcReport {
        no_three_collinear: collinear_triple.is_none(),
        collinear_triple,
        general_position: dependent_subset.is_none(),
        dependent_subset,
    }
}

/// Lines through `point` that meet the set only there.
pub fn tangent_profile(set: &PointSet<'_>, point: usize) -> Result<usize> {
    if !set.contains(point) {
        return Err(Error::PointNotInSet(point));
    }
    if !is_arc(set).no_three_collinear {
        return Err(Error::NotAnArc);
    }
    let space = set.space();
    Ok(space
        .lines_through(point)
        .iter()
        .filter(|&&l| {
            space.lines()[l]
                .iter()
                .all(|&x| x == point || !set.contains(x))
        })
        .count())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ArcClass {
    /// Exactly one tangent at every point.
    Oval,
    /// No tangents anywhere.
    Hyperoval,
    Neither,
}

/// Tangent counts per point and the resulting classification.
pub fn classify_arc(set: &PointSet<'_>) -> Result<(Vec<usize>, ArcClass)> {
    let counts = set
        .indices()
        .iter()
        .map(|&p| tangent_profile(set, p))
        .collect::<Result<Vec<_>>>()?;
    let class = if !counts.is_empty() && counts.iter().all(|&c| c == 1) {
        ArcClass::Oval
    } else if !counts.is_empty() && counts.iter().all(|&c| c == 0) {
        ArcClass::Hyperoval
    } else {
        ArcClass::Neither
    };
    Ok((counts, class))
}

/// A cap whose tangent lines at each point span exactly a hyperplane.
pub fn is_ovoid(set: &PointSet<'_>) -> bool {
    let space = set.space();
    if set.is_empty() || !is_arc(set).no_three_collinear {
        return false;
    }
    set.indices().iter().all(|&p| {
        let rows: Vec<Vec<u32>> = space
            .lines_through(p)
            .iter()
            .filter(|&&l| space.lines()[l].iter().all(|&x| x == p || !set.contains(x)))
            .flat_map(|&l| space.lines()[l].iter().map(|&x| space.points()[x].clone()))
            .collect();
        !rows.is_empty() && rank(space.field(), &rows) == space.delta()
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Exhaustive,
    Greedy,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArcSearch {
    pub mode: SearchMode,
    pub delta: usize,
    pub q: u32,
    pub size: usize,
    pub points: Vec<usize>,
    /// True when the search proves no larger set exists.
    pub certified_maximum: bool,
}

/// Largest set with no three collinear points.
///
/// Exhaustive mode runs a bitset depth-first search from each first
/// point in parallel and returns the lexicographically smallest set of
/// maximum size. Greedy mode adds points in index order while allowed.
pub fn arc_search(space: &ProjectiveSpace, mode: SearchMode) -> Result<ArcSearch> {
    let points = match mode {
        SearchMode::Exhaustive => exhaustive(space)?,
        SearchMode::Greedy => greedy(space),
    };
    Ok(ArcSearch {
        mode,
        delta: space.delta(),
        q: space.q(),
        size: points.len(),
        points,
        certified_maximum: mode == SearchMode::Exhaustive,
    })
}

fn greedy(space: &ProjectiveSpace) -> Vec<usize> {
    let n = space.point_count();
    let mut blocked = vec![false; n];
    let mut chosen: Vec<usize> = Vec::new();
    for v in 0..n {
        if blocked[v] {
            continue;
        }
        for &s in &chosen {
            for x in space.line_through(s, v) {
                blocked[x] = true;
            }
        }
        blocked[v] = true;
        chosen.push(v);
    }
    chosen
}

struct Search<'a> {
    line_mask: &'a [Vec<u32>],
    best: Vec<usize>,
}

impl Search<'_> {
    /// `blocked` holds members and every point collinear with two members.
    fn extend(&mut self, chosen: &mut Vec<usize>, blocked: u32, candidates: u32) {
        if chosen.len() > self.best.len() {
            self.best = chosen.clone();
        }
        let mut rest = candidates & !blocked;
        while rest != 0 {
            if chosen.len() + rest.count_ones() as usize <= self.best.len() {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let newly = chosen
                .iter()
                .fold(1u32 << v, |acc, &s| acc | self.line_mask[s][v]);
            chosen.push(v);
            self.extend(chosen, blocked | newly, rest);
            chosen.pop();
        }
    }
}

fn exhaustive(space: &ProjectiveSpace) -> Result<Vec<usize>> {
    let n = space.point_count();
    if n > MAX_EXHAUSTIVE_POINTS {
        return Err(Error::SearchSpaceTooLarge(n));
    }
    let mut line_mask = vec![vec![0u32; n]; n];
    for line in space.lines() {
        let mask = line.iter().fold(0u32, |acc, &p| acc | 1 << p);
        for &a in line {
            for &b in line {
                if a != b {
                    line_mask[a][b] = mask;
                }
            }
        }
    }
    let all = (1u32 << n) - 1;
    let per_first: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut search = Search {
                line_mask: &line_mask,
                best: Vec::new(),
            };
            let above = all & !((1u32 << (first + 1)) - 1);
            search.extend(&mut vec![first], 1 << first, above);
            search.best
        })
        .collect();
    let mut best: Vec<usize> = Vec::new();
    for candidate in per_first {
        if candidate.len() > best.len() {
            best = candidate;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;
    use crate::pg::build_pg;

    #[test]
    fn fano_line_is_not_an_arc() {
        let space = build_pg(2, &FieldSpec::prime(2).unwrap()).unwrap();
        let line = space.lines()[0].clone();
        let report = is_arc(&PointSet::new(&space, line.clone()).unwrap());
        assert!(!report.is_arc());
        assert_eq!(report.collinear_triple.map(|t| t.to_vec()), Some(line));
        let pair = PointSet::new(&space, vec![0, 1]).unwrap();
        assert!(is_arc(&pair).is_arc());
    }

    #[test]
    fn hyperoval_in_fano_plane() {
        let space = build_pg(2, &FieldSpec::prime(2).unwrap()).unwrap();
        let found = arc_search(&space, SearchMode::Exhaustive).unwrap();
        assert_eq!(found.size, 4);
        let set = PointSet::new(&space, found.points.clone()).unwrap();
        assert!(is_arc(&set).is_arc());
        assert_eq!(
            classify_arc(&set).unwrap(),
            (vec![0; 4], ArcClass::Hyperoval)
        );
        let three = PointSet::new(&space, found.points[..3].to_vec()).unwrap();
        // q + 1 = 3 points: each lies on two secants and one tangent.
        assert_eq!(classify_arc(&three).unwrap(), (vec![1; 3], ArcClass::Oval));
    }

    #[test]
    fn oval_in_pg23() {
        let space = build_pg(2, &FieldSpec::prime(3).unwrap()).unwrap();
        let found = arc_search(&space, SearchMode::Exhaustive).unwrap();
        assert_eq!(found.size, 4);
        let set = PointSet::new(&space, found.points).unwrap();
        assert_eq!(classify_arc(&set).unwrap().1, ArcClass::Oval);
    }

    #[test]
    fn tangent_errors() {
        let space = build_pg(2, &FieldSpec::prime(2).unwrap()).unwrap();
        let line = PointSet::new(&space, space.lines()[0].clone()).unwrap();
        assert_eq!(
            tangent_profile(&line, space.lines()[0][0]),
            Err(Error::NotAnArc)
        );
        let pair = PointSet::new(&space, vec![0, 1]).unwrap();
        assert_eq!(tangent_profile(&pair, 5), Err(Error::PointNotInSet(5)));
    }

    #[test]
    fn greedy_is_maximal() {
        let space = build_pg(2, &FieldSpec::prime(5).unwrap()).unwrap();
        let found = arc_search(&space, SearchMode::Greedy).unwrap();
        let set = PointSet::new(&space, found.points.clone()).unwrap();
        assert!(is_arc(&set).is_arc());
        for v in 0..space.point_count() {
            if set.contains(v) {
                continue;
            }
            let mut extended = found.points.clone();
            extended.push(v);
            assert!(!is_arc(&PointSet::new(&space, extended).unwrap()).is_arc());
        }
        assert_eq!(
            arc_search(&space, SearchMode::Exhaustive).unwrap_err(),
            Error::SearchSpaceTooLarge(31)
        );
    }

    #[test]
    fn elliptic_quadric_is_ovoid() {
        // x0 x1 + x2² + x2 x3 + x3² = 0 over F_2 has 5 points.
        let f2 = FieldSpec::prime(2).unwrap();
        let space = build_pg(3, &f2).unwrap();
        let quadric: Vec<usize> = (0..space.point_count())
            .filter(|&i| {
                let v = &space.points()[i];
                (v[0] * v[1] + v[2] * v[2] + v[2] * v[3] + v[3] * v[3]) % 2 == 0
            })
            .collect();
        assert_eq!(quadric.len(), 5);
        let set = PointSet::new(&space, quadric).unwrap();
        assert!(is_ovoid(&set));
        let cap = arc_search(&space, SearchMode::Exhaustive).unwrap();
        assert_eq!(cap.size, 8);
        assert!(!is_ovoid(&PointSet::new(&space, cap.points).unwrap()));
    }
}
