//! Planar heap embeddings of fully commutative (321-avoiding) reduced words.
//!
//! Word positions are 1-based throughout this module. Position `j` sits at
//! the lattice point `(i_j, level(j))`; levels increase along the word for
//! non-commuting letters, so lower cones point towards earlier letters.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::deodhar::{defect_set, Mask};
use crate::error::{Error, Result};
use crate::perm::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub col: i32,
    pub level: i32,
}

impl Point {
    pub fn new(col: i32, level: i32) -> Self {
        Self { col, level }
    }

    fn offset(self, dc: i32, dl: i32) -> Self {
        Self::new(self.col + dc, self.level + dl)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeDirection {
    /// Points at or below the apex.
    Lower,
    /// Points at or above the apex.
    Upper,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConeMembers {
    /// Positions strictly inside the cone (`|alpha| < beta`).
    pub interior: BTreeSet<usize>,
    /// Positions on the boundary (`|alpha| = beta`), apex included.
    pub boundary: BTreeSet<usize>,
}

impl ConeMembers {
    pub fn all(&self) -> BTreeSet<usize> {
        self.interior.union(&self.boundary).copied().collect()
    }
}

/// Whether `p` lies in the cone with the given apex, and if so whether it is
/// on the boundary.
pub fn cone_contains(apex: Point, dir: ConeDirection, p: Point) -> Option<bool> {
    let alpha = (p.col - apex.col).abs();
    let beta = match dir {
        ConeDirection::Lower => apex.level - p.level,
        ConeDirection::Upper => p.level - apex.level,
    };
    (alpha <= beta).then_some(alpha == beta)
}

#[derive(Clone, Debug)]
pub struct HeapEmbedding {
    word: Word,
    points: Vec<Point>,
    /// Classes of the raw-level adjacency relation, 1-based positions.
    components: Vec<Vec<usize>>,
    piece: Vec<usize>,
    index: HashMap<Point, usize>,
}

#[derive(Serialize)]
struct HeapJson<'a> {
    word: &'a [u8],
    points: Vec<[i32; 2]>,
    components: &'a [Vec<usize>],
}

/// Leftmost-stacking levels: a letter sits one above the highest earlier
/// letter it fails to commute with, or at 0 if it commutes with everything
/// before it.
pub fn level_raw(a: &Word) -> Result<Vec<i32>> {
    a.require_fully_commutative()?;
    Ok(raw_levels(a.letters()))
}

fn raw_levels(letters: &[u8]) -> Vec<i32> {
    let mut levels: Vec<i32> = Vec::with_capacity(letters.len());
    for (j, &x) in letters.iter().enumerate() {
        let below = (0..j)
            .filter(|&m| letters[m].abs_diff(x) <= 1)
            .map(|m| levels[m] + 1)
            .max();
        levels.push(below.unwrap_or(0));
    }
    levels
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

fn classes(parent: &mut [usize]) -> Vec<Vec<usize>> {
    let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); parent.len()];
    for x in 0..parent.len() {
        let r = find(parent, x);
        by_root[r].push(x);
    }
    by_root.into_iter().filter(|c| !c.is_empty()).collect()
}

/// Covering pairs `(below, above)` of the heap poset, 0-based. In a fully
/// commutative word, `k` covers the last earlier occurrence of each adjacent
/// letter, provided no copy of `i_k` intervenes.
fn covers(letters: &[u8]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (k, &x) in letters.iter().enumerate() {
        let same = (0..k).rev().find(|&m| letters[m] == x);
        for adj in [x.wrapping_sub(1), x + 1] {
            if let Some(j) = (0..k).rev().find(|&m| letters[m] == adj) {
                if same.is_none_or(|s| s < j) {
                    out.push((j, k));
                }
            }
        }
    }
    out
}

pub fn build_heap(a: &Word) -> Result<HeapEmbedding> {
    a.require_fully_commutative()?;
    let letters = a.letters();
    let r = letters.len();
    let raw = raw_levels(letters);

    let mut parent: Vec<usize> = (0..r).collect();
    for j in 0..r {
        for k in j + 1..r {
            if letters[j].abs_diff(letters[k]) == 1 && raw[j].abs_diff(raw[k]) == 1 {
                union(&mut parent, j, k);
            }
        }
    }
    let components = classes(&mut parent);

    // Coalescing: every covering pair is placed one level apart. Within a
    // connected piece of the Hasse diagram this determines the levels up to
    // a common shift; each piece is then normalised to start at level 0.
    let cover_pairs = covers(letters);
    let mut adj: Vec<Vec<(usize, i32)>> = vec![Vec::new(); r];
    for &(j, k) in &cover_pairs {
        adj[j].push((k, 1));
        adj[k].push((j, -1));
    }
    let mut level: Vec<Option<i32>> = vec![None; r];
    let mut piece = vec![usize::MAX; r];
    let mut piece_count = 0;
    for start in 0..r {
        if level[start].is_some() {
            continue;
        }
        level[start] = Some(0);
        piece[start] = piece_count;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let lx = level[x].unwrap();
            for &(y, d) in &adj[x] {
                match level[y] {
                    None => {
                        level[y] = Some(lx + d);
                        piece[y] = piece_count;
                        members.push(y);
                        queue.push_back(y);
                    }
                    Some(ly) if ly != lx + d => {
                        return Err(Error::Internal(format!(
                            "inconsistent heap levels at positions {} and {}",
                            x + 1,
                            y + 1
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
        let min = members.iter().map(|&m| level[m].unwrap()).min().unwrap();
        for &m in &members {
            level[m] = Some(level[m].unwrap() - min);
        }
        piece_count += 1;
    }
    let levels: Vec<i32> = level.into_iter().map(Option::unwrap).collect();

    for comp in &components {
        let shift = levels[comp[0]] - raw[comp[0]];
        if comp.iter().any(|&m| levels[m] - raw[m] != shift) {
            return Err(Error::Internal(
                "coalescing moved a component non-uniformly".into(),
            ));
        }
    }

    let points: Vec<Point> = letters
        .iter()
        .zip(&levels)
        .map(|(&c, &l)| Point::new(c as i32, l))
        .collect();
    let index = points
        .iter()
        .enumerate()
        .map(|(j, &p)| (p, j + 1))
        .collect();
    let heap = HeapEmbedding {
        word: a.clone(),
        points,
        components: components
            .into_iter()
            .map(|c| c.into_iter().map(|m| m + 1).collect())
            .collect(),
        piece,
        index,
    };
    heap.check_invariants()?;
    Ok(heap)
}

impl HeapEmbedding {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn levels(&self) -> Vec<i32> {
        self.points.iter().map(|p| p.level).collect()
    }

    /// `pt(j)` for 1-based `j`.
    pub fn pt(&self, j: usize) -> Point {
        self.points[j - 1]
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// The word position at a lattice point, if that point is in the heap.
    pub fn position_at(&self, p: Point) -> Option<usize> {
        self.index.get(&p).copied()
    }

    /// Two positions lie in the same connected piece of the heap poset.
    pub fn same_piece(&self, j: usize, k: usize) -> bool {
        self.piece[j - 1] == self.piece[k - 1]
    }

    fn check_invariants(&self) -> Result<()> {
        let letters = self.word.letters();
        for j in 0..letters.len() {
            for k in j + 1..letters.len() {
                if letters[j].abs_diff(letters[k]) <= 1
                    && self.points[j].level >= self.points[k].level
                {
                    return Err(Error::Internal(format!(
                        "heap order violated between positions {} and {}",
                        j + 1,
                        k + 1
                    )));
                }
            }
        }
        if self.index.len() != self.points.len() {
            return Err(Error::Internal("two positions share a heap point".into()));
        }
        Ok(())
    }

    /// Walks from `pt(j)` one diagonal step at a time, yielding heap
    /// positions until the first lattice point outside the heap.
    pub fn diagonal_run(&self, j: usize, dc: i32, dl: i32) -> impl Iterator<Item = usize> + '_ {
        let mut p = self.pt(j);
        std::iter::from_fn(move || {
            p = p.offset(dc, dl);
            self.position_at(p)
        })
    }

    pub fn to_json(&self) -> String {
        let j = HeapJson {
            word: self.word.letters(),
            points: self.points.iter().map(|p| [p.col, p.level]).collect(),
            components: &self.components,
        };
        serde_json::to_string(&j).expect("heap serialises")
    }
}

pub fn cone_points(h: &HeapEmbedding, j: usize, dir: ConeDirection) -> ConeMembers {
    let apex = h.pt(j);
    let mut out = ConeMembers::default();
    for (k, &p) in h.points().iter().enumerate() {
        match cone_contains(apex, dir, p) {
            Some(true) => {
                out.boundary.insert(k + 1);
            }
            Some(false) => {
                out.interior.insert(k + 1);
            }
            None => {}
        }
    }
    out
}

/// Lattice points of `Cone_lower(top) ∩ Cone_upper(bottom)` on the sublattice
/// of the two apexes.
pub fn diamond_lattice(top: Point, bottom: Point) -> Vec<Point> {
    let mut out = Vec::new();
    let parity = (top.col + top.level).rem_euclid(2);
    for level in bottom.level..=top.level {
        for col in (top.col - (top.level - level))..=(top.col + (top.level - level)) {
            let p = Point::new(col, level);
            if (col + level).rem_euclid(2) == parity
                && cone_contains(bottom, ConeDirection::Upper, p).is_some()
            {
                out.push(p);
            }
        }
    }
    out
}

/// Monospace picture of the heap: one column per generator, level 0 on top
/// and levels growing down the page. With a mask, `1`/`0` mark the bits and `D`/`d` mark defects whose
/// bit is `1`/`0`.
pub fn render_ascii(h: &HeapEmbedding, mask: Option<&Mask>) -> Result<String> {
    if h.is_empty() {
        return Ok(String::new());
    }
    let marks: Vec<char> = match mask {
        None => vec!['o'; h.len()],
        Some(m) => {
            let defects = defect_set(h.word(), m)?;
            (1..=h.len())
                .map(|j| match (m.bit(j), defects.defects.contains(&j)) {
                    (true, true) => 'D',
                    (false, true) => 'd',
                    (true, false) => '1',
                    (false, false) => '0',
                })
                .collect()
        }
    };
    let ncols = h.word().n() - 1;
    let max_level = h.points().iter().map(|p| p.level).max().unwrap();
    let min_level = h.points().iter().map(|p| p.level).min().unwrap();
    let label_width = max_level.to_string().len().max(min_level.to_string().len());
    let mut out = String::new();
    for level in min_level..=max_level {
        let mut row = format!("{level:>label_width$} |");
        for col in 1..=ncols as i32 {
            let c = h
                .position_at(Point::new(col, level))
                .map_or('.', |j| marks[j - 1]);
            row.push(' ');
            row.push(c);
        }
        let _ = writeln!(out, "{}", row.trim_end());
    }
    let mut footer = format!("{:>label_width$}  ", "");
    for col in 1..=ncols {
        let _ = write!(footer, "{}", col % 10);
        footer.push(' ');
    }
    let _ = writeln!(out, "{}", footer.trim_end());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Word {
        Word::parse(s, None).unwrap()
    }

    #[test]
    fn raw_level_examples() {
        assert_eq!(level_raw(&word("1 3")).unwrap(), vec![0, 0]);
        assert_eq!(level_raw(&word("2 1 3 2")).unwrap(), vec![0, 1, 1, 2]);
        let fig = level_raw(&word("9 6 7 8 2 1 3 2 4 5 6")).unwrap();
        assert_eq!(fig[0], 0);
        assert_eq!(fig[3], 2);
        assert_eq!(level_raw(&word("1 2 4 3")).unwrap(), vec![0, 1, 0, 2]);
        assert_eq!(level_raw(&word("1 2 1")), Err(Error::Not321Avoiding));
    }

    #[test]
    fn single_component_is_not_shifted() {
        let h = build_heap(&word("2 1 3 2")).unwrap();
        assert_eq!(h.levels(), vec![0, 1, 1, 2]);
        assert_eq!(h.components().len(), 1);
    }

    #[test]
    fn coalescing_brings_the_lone_letter_next_to_its_neighbour() {
        let h = build_heap(&word("9 6 7 8 2 1 3 2 4 5 6")).unwrap();
        let raw = level_raw(h.word()).unwrap();
        assert!(h.components().iter().any(|c| c == &vec![1]));
        assert_eq!(raw[3] - raw[0], 2);
        assert_eq!(h.pt(4).level - h.pt(1).level, 1);
    }

    #[test]
    fn hexagon_heap_shape() {
        let h = build_heap(&word("3 2 1 5 4 3 2 6 5 4 3 7 6 5")).unwrap();
        let mut per_level: std::collections::BTreeMap<i32, Vec<i32>> = Default::default();
        for p in h.points() {
            per_level.entry(p.level).or_default().push(p.col);
        }
        for cols in per_level.values_mut() {
            cols.sort();
        }
        let rows: Vec<Vec<i32>> = per_level.into_values().collect();
        assert_eq!(
            rows,
            vec![
                vec![3, 5],
                vec![2, 4, 6],
                vec![1, 3, 5, 7],
                vec![2, 4, 6],
                vec![3, 5]
            ]
        );
        assert_eq!(h.components().len(), 1);
    }

    #[test]
    fn cone_of_minimal_element() {
        let h = build_heap(&word("2 1 3 2")).unwrap();
        let lower = cone_points(&h, 1, ConeDirection::Lower);
        assert_eq!(lower.all(), BTreeSet::from([1]));
        let upper = cone_points(&h, 1, ConeDirection::Upper);
        assert_eq!(upper.all(), BTreeSet::from([1, 2, 3, 4]));
        assert_eq!(upper.interior, BTreeSet::from([4]));
    }

    #[test]
    fn render_examples() {
        let h = build_heap(&Word::empty(3)).unwrap();
        assert_eq!(render_ascii(&h, None).unwrap(), "");
        let h = build_heap(&word("2 1 3 2")).unwrap();
        let pic = render_ascii(&h, None).unwrap();
        assert_eq!(pic, "0 | . o .\n1 | o . o\n2 | . o .\n   1 2 3\n");
        assert_eq!(pic, render_ascii(&h, None).unwrap());
        let m: Mask = "(1,0,0,0)".parse().unwrap();
        let pic = render_ascii(&h, Some(&m)).unwrap();
        assert!(pic.contains('0') && pic.contains('1'));
        let h = build_heap(&word("1 2")).unwrap();
        assert_eq!(
            render_ascii(&h, None).unwrap(),
            "0 | o .\n1 | . o\n   1 2\n"
        );
    }

    #[test]
    fn json_shape() {
        let h = build_heap(&word("2 1 3 2")).unwrap();
        assert_eq!(
            h.to_json(),
            r#"{"word":[2,1,3,2],"points":[[2,0],[1,1],[3,1],[2,2]],"components":[[1,2,3,4]]}"#
        );
    }
}
