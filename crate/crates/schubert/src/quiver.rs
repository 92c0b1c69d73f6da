//! The quiver of a (co)minuscule reduced word: arrows, partial order,
//! peaks, heights, holes, and the combinatorial shape characterization of
//! minuscule elements. Vertices are 1-based word positions; an arrow i -> j
//! makes i strictly larger in the partial order, so vertex 1 is at the top
//! and the last vertex is the unique minimal one.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystemData, TypeLetter, Variant};
use crate::weyl;

/// Successor / predecessor maps and arrows for a colored word, before any
/// shape validation.
fn succ_pred(word: &[usize]) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let r = word.len();
    let mut succ = vec![None; r];
    let mut pred = vec![None; r];
    for i in 0..r {
        for j in i + 1..r {
            if word[j] == word[i] {
                succ[i] = Some(j + 1);
                break;
            }
        }
        for j in (0..i).rev() {
            if word[j] == word[i] {
                pred[i] = Some(j + 1);
                break;
            }
        }
    }
    (succ, pred)
}

fn arrows_of(rs: &RootSystemData, variant: Variant, word: &[usize]) -> Vec<(usize, usize)> {
    let r = word.len();
    let (succ, _) = succ_pred(word);
    let mut arrows = Vec::new();
    for i in 0..r {
        let upper = succ[i].map(|s| s - 1).unwrap_or(r);
        for j in i + 1..upper {
            if rs.color_pairing(variant, word[i], word[j]) != 0 {
                arrows.push((i + 1, j + 1));
            }
        }
    }
    arrows
}

/// Shape conditions (ii)/(iii) of the quiver characterization plus
/// uniqueness of the minimal vertex, checked on an arbitrary colored word.
/// Condition (i), which ties the last color to the weight, is separate so
/// that the same check applies to part quivers and glued words.
pub fn structural_shape(rs: &RootSystemData, variant: Variant, word: &[usize]) -> bool {
    let r = word.len();
    if r == 0 {
        return true;
    }
    let (succ, _) = succ_pred(word);
    let arrows = arrows_of(rs, variant, word);
    let mut targets: Vec<Vec<usize>> = vec![Vec::new(); r];
    for &(i, j) in &arrows {
        targets[i - 1].push(j);
    }
    // Unique minimal vertex and it is the last one.
    let sinks: Vec<usize> = (1..=r).filter(|&v| targets[v - 1].is_empty()).collect();
    if sinks != [r] && r > 1 {
        return false;
    }
    for i in 1..r {
        let ts = &targets[i - 1];
        let pairings: Vec<i64> = ts
            .iter()
            .map(|&j| rs.color_pairing(variant, word[i - 1], word[j - 1]))
            .collect();
        let ok = if succ[i - 1].is_none() {
            pairings.len() == 1 && pairings[0] == -1
        } else {
            (pairings.len() == 2 && pairings.iter().all(|&p| p == -1))
                || (pairings.len() == 1 && pairings[0] == -2)
        };
        if !ok {
            return false;
        }
    }
    true
}

/// Full shape check of the minuscule-quiver characterization: the word's
/// quiver has the required arrow pattern and its last color is the weight's
/// simple root. Reducedness is not assumed; this is the point of the check.
pub fn check_minuscule_shape(
    rs: &RootSystemData,
    variant: Variant,
    word: &[usize],
    weight: usize,
) -> bool {
    if word.is_empty() {
        return true;
    }
    if *word.last().unwrap() != weight {
        return false;
    }
    structural_shape(rs, variant, word)
}

#[derive(Debug, Clone)]
pub struct MinusculeQuiver {
    pub rs: Arc<RootSystemData>,
    pub variant: Variant,
    pub weight: usize,
    pub word: Vec<usize>,
    /// Arrows (i, j) with i above j, 1-based, sorted.
    pub arrows: Vec<(usize, usize)>,
    succ: Vec<Option<usize>>,
    pred: Vec<Option<usize>>,
    /// geq[i][j]: vertex i+1 is >= vertex j+1 in the partial order.
    geq: Vec<Vec<bool>>,
    pub peaks: Vec<usize>,
    pub heights: Vec<usize>,
}

impl MinusculeQuiver {
    /// Build the quiver of a reduced (co)minuscule word, validating both
    /// preconditions.
    pub fn build(
        rs: Arc<RootSystemData>,
        word: &[usize],
        weight: usize,
        variant: Variant,
    ) -> Result<Self> {
        if !weyl::is_reduced(&rs, word)? {
            return Err(Error::input("word is not reduced".to_string()));
        }
        if !weyl::is_minuscule_element(&rs, word, weight, variant)? {
            return Err(Error::input(format!(
                "word is not a {variant} element for omega_{weight}"
            )));
        }
        Ok(Self::from_word_unchecked(rs, word, weight, variant))
    }

    /// Build the quiver combinatorics of an arbitrary colored word. Used for
    /// part quivers and gluing tests, where the word is not a minuscule
    /// element in its own right.
    pub fn from_word_unchecked(
        rs: Arc<RootSystemData>,
        word: &[usize],
        weight: usize,
        variant: Variant,
    ) -> Self {
        let r = word.len();
        let (succ, pred) = succ_pred(word);
        let arrows = arrows_of(&rs, variant, word);
        // Reachability closure; arrows always point to larger indices.
        let mut geq = vec![vec![false; r]; r];
        for i in 0..r {
            geq[i][i] = true;
        }
        for i in (0..r).rev() {
            let outgoing: Vec<usize> = arrows
                .iter()
                .filter(|&&(a, _)| a == i + 1)
                .map(|&(_, b)| b - 1)
                .collect();
            for j in outgoing {
                for k in 0..r {
                    if geq[j][k] {
                        geq[i][k] = true;
                    }
                }
            }
        }
        let peaks: Vec<usize> = (1..=r)
            .filter(|&v| arrows.iter().all(|&(_, j)| j != v))
            .collect();
        // Heights: 1 + longest arrow-path from the vertex to the last one.
        let mut heights = vec![1usize; r];
        for i in (0..r).rev() {
            let best = arrows
                .iter()
                .filter(|&&(a, _)| a == i + 1)
                .map(|&(_, b)| heights[b - 1] + 1)
                .max();
            if let Some(h) = best {
                heights[i] = h;
            }
        }
        MinusculeQuiver {
            rs,
            variant,
            weight,
            word: word.to_vec(),
            arrows,
            succ,
            pred,
            geq,
            peaks,
            heights,
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.word[v - 1]
    }

    pub fn successor(&self, v: usize) -> Option<usize> {
        self.succ[v - 1]
    }

    pub fn predecessor(&self, v: usize) -> Option<usize> {
        self.pred[v - 1]
    }

    /// v >= u in the partial order generated by the arrows.
    pub fn geq(&self, v: usize, u: usize) -> bool {
        self.geq[v - 1][u - 1]
    }

    pub fn height(&self, v: usize) -> usize {
        self.heights[v - 1]
    }

    pub fn is_peak(&self, v: usize) -> bool {
        self.peaks.contains(&v)
    }

    /// Vertices with no outgoing arrow (the minimal vertices).
    pub fn minimal_vertices(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&v| self.arrows.iter().all(|&(a, _)| a != v))
            .collect()
    }

    pub fn passes_shape_check(&self) -> bool {
        check_minuscule_shape(&self.rs, self.variant, &self.word, self.weight)
    }

    /// Holes: vertices with no predecessor whose color can be glued on top
    /// of the quiver while keeping the shape conditions. Minuscule type-C
    /// quivers are projective spaces and are defined hole-free.
    pub fn holes(&self) -> Vec<usize> {
        if self.variant == Variant::Minuscule && self.rs.type_letter == TypeLetter::C {
            return Vec::new();
        }
        (1..=self.len())
            .filter(|&v| {
                self.pred[v - 1].is_none() && {
                    let mut glued = Vec::with_capacity(self.len() + 1);
                    glued.push(self.color(v));
                    glued.extend_from_slice(&self.word);
                    structural_shape(&self.rs, self.variant, &glued)
                }
            })
            .collect()
    }

    /// Quiver of the word with a maximal vertex removed; covers of the
    /// Bruhat order on the quotient.
    pub fn remove_maximal_vertex(&self, v: usize) -> Result<MinusculeQuiver> {
        if !self.is_peak(v) {
            return Err(Error::input(format!("vertex {v} is not a peak")));
        }
        let word: Vec<usize> = self
            .word
            .iter()
            .enumerate()
            .filter(|&(i, _)| i + 1 != v)
            .map(|(_, &c)| c)
            .collect();
        MinusculeQuiver::build(Arc::clone(&self.rs), &word, self.weight, self.variant)
    }

    /// Lexicographically smallest linear extension (larger vertices first)
    /// read off as a color sequence; rebuilds an identical quiver and is
    /// equal across all reduced words of the same element.
    pub fn canonical_word(&self) -> Vec<usize> {
        let r = self.len();
        let mut indegree = vec![0usize; r];
        for &(_, j) in &self.arrows {
            indegree[j - 1] += 1;
        }
        let mut emitted = vec![false; r];
        let mut out = Vec::with_capacity(r);
        for _ in 0..r {
            let v = (1..=r)
                .filter(|&v| !emitted[v - 1] && indegree[v - 1] == 0)
                .min_by_key(|&v| self.color(v))
                .expect("DAG always has an available vertex");
            emitted[v - 1] = true;
            out.push(self.color(v));
            for &(a, b) in &self.arrows {
                if a == v {
                    indegree[b - 1] -= 1;
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> QuiverJson {
        QuiverJson {
            r#type: self.rs.type_letter.to_string(),
            rank: self.rs.rank,
            weight: self.weight,
            variant: self.variant.to_string(),
            word: self.word.clone(),
            vertices: {
                let holes = self.holes();
                (1..=self.len())
                    .map(|v| VertexJson {
                        index: v,
                        color: self.color(v),
                        height: self.height(v),
                        peak: self.is_peak(v),
                        hole: holes.contains(&v),
                        successor: self.successor(v),
                        predecessor: self.predecessor(v),
                    })
                    .collect()
            },
            arrows: self.arrows.clone(),
        }
    }

    /// Graphviz DOT: one node per vertex labeled "i:α_c", one edge per
    /// arrow, vertices rank-grouped by height.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph quiver {\n");
        for v in 1..=self.len() {
            s.push_str(&format!(
                "  v{v} [label=\"{v}:a{}\"];\n",
                self.color(v)
            ));
        }
        let max_h = self.heights.iter().copied().max().unwrap_or(0);
        for h in (1..=max_h).rev() {
            let group: Vec<String> = (1..=self.len())
                .filter(|&v| self.height(v) == h)
                .map(|v| format!("v{v}"))
                .collect();
            if !group.is_empty() {
                s.push_str(&format!("  {{ rank=same; {}; }}\n", group.join("; ")));
            }
        }
        for &(i, j) in &self.arrows {
            s.push_str(&format!("  v{i} -> v{j};\n"));
        }
        s.push_str("}\n");
        s
    }

    /// ASCII grid rendering: columns by color,
    /// rows by height (top row = largest height). Peaks are marked with '*'
    /// and holes with '!'.
    pub fn to_ascii(&self) -> String {
        let holes = self.holes();
        let max_h = self.heights.iter().copied().max().unwrap_or(0);
        let width = 5;
        let mut s = String::new();
        s.push_str(&" ".repeat(3));
        for c in 1..=self.rs.rank {
            s.push_str(&format!("{:^width$}", format!("a{c}")));
        }
        s.push('\n');
        for h in (1..=max_h).rev() {
            s.push_str(&format!("{h:>2} "));
            for c in 1..=self.rs.rank {
                let cell = (1..=self.len())
                    .find(|&v| self.height(v) == h && self.color(v) == c);
                match cell {
                    Some(v) => {
                        let mut label = v.to_string();
                        if self.is_peak(v) {
                            label.push('*');
                        }
                        if holes.contains(&v) {
                            label.push('!');
                        }
                        s.push_str(&format!("{label:^width$}"));
                    }
                    None => s.push_str(&" ".repeat(width)),
                }
            }
            s.push('\n');
        }
        s
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VertexJson {
    pub index: usize,
    pub color: usize,
    pub height: usize,
    pub peak: bool,
    pub hole: bool,
    pub successor: Option<usize>,
    pub predecessor: Option<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct QuiverJson {
    pub r#type: String,
    pub rank: usize,
    pub weight: usize,
    pub variant: String,
    pub word: Vec<usize>,
    pub vertices: Vec<VertexJson>,
    pub arrows: Vec<(usize, usize)>,
}
