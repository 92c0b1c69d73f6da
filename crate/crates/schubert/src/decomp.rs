//! Peak-ordering decompositions of a minuscule quiver, neatness and
//! smoothness verdicts, and the classification of Q-factorializations and
//! IH-small resolutions.

use std::collections::BTreeMap;
use std::sync::Arc;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::MinusculeQuiver;
use crate::weyl;

pub const DEFAULT_PEAK_BOUND: usize = 8;

/// One generalized decomposition of the quiver: the ordering of peaks, the
/// induced parts (original vertex numbering), the words read off the parts,
/// and the per-part minimal vertices m_w(Q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeakDecomposition {
    pub ordering: Vec<usize>,
    pub parts: Vec<Vec<usize>>,
    pub part_words: Vec<Vec<usize>>,
    /// Unique minimal vertex of each part, in original numbering.
    pub minimal_vertices: Vec<usize>,
    /// Unique peak of each part, in original numbering.
    pub part_peaks: Vec<usize>,
    pub neat: bool,
    pub smooth: bool,
}

impl PeakDecomposition {
    pub fn ih_small(&self) -> bool {
        self.neat && self.smooth
    }
}

/// Split the quiver at a peak: `remainder` is the set of vertices below
/// some other peak, `part` its complement (which contains `p` and no other
/// peak).
pub fn split_at_peak(q: &MinusculeQuiver, p: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    if !q.is_peak(p) {
        return Err(Error::input(format!("vertex {p} is not a peak")));
    }
    let others: Vec<usize> = q.peaks.iter().copied().filter(|&x| x != p).collect();
    let remainder: Vec<usize> = (1..=q.len())
        .filter(|&v| others.iter().any(|&o| q.geq(o, v)))
        .collect();
    let part: Vec<usize> = (1..=q.len()).filter(|&v| !remainder.contains(&v)).collect();
    Ok((part, remainder))
}

/// Rebuild the quiver of a part from its word; the part inherits the
/// ambient root system, variant and weight.
pub fn part_quiver(q: &MinusculeQuiver, part: &[usize]) -> MinusculeQuiver {
    let word: Vec<usize> = part.iter().map(|&v| q.color(v)).collect();
    MinusculeQuiver::from_word_unchecked(Arc::clone(&q.rs), &word, q.weight, q.variant)
}

pub fn decompose(q: &MinusculeQuiver, ordering: &[usize]) -> Result<PeakDecomposition> {
    let mut sorted = ordering.to_vec();
    sorted.sort_unstable();
    if sorted != q.peaks {
        return Err(Error::input(format!(
            "ordering {ordering:?} is not a permutation of the peaks {:?}",
            q.peaks
        )));
    }
    let mut remaining: Vec<usize> = (1..=q.len()).collect();
    let mut parts = Vec::with_capacity(ordering.len());
    let mut part_words = Vec::with_capacity(ordering.len());
    let mut minimal_vertices = Vec::with_capacity(ordering.len());
    let mut part_peaks = Vec::with_capacity(ordering.len());
    for (idx, &p) in ordering.iter().enumerate() {
        let later = &ordering[idx + 1..];
        let part: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&v| !later.iter().any(|&o| q.geq(o, v)))
            .collect();
        remaining.retain(|v| !part.contains(v));
        if !part.contains(&p) {
            return Err(Error::invariant(format!(
                "peak {p} fell outside its own part"
            )));
        }
        let sub = part_quiver(q, &part);
        if sub.peaks.len() != 1 {
            return Err(Error::invariant(format!(
                "part {part:?} has {} peaks instead of one",
                sub.peaks.len()
            )));
        }
        let minima = sub.minimal_vertices();
        if minima.len() != 1 {
            return Err(Error::invariant(format!(
                "part {part:?} has {} minimal vertices instead of one",
                minima.len()
            )));
        }
        part_peaks.push(part[sub.peaks[0] - 1]);
        minimal_vertices.push(part[minima[0] - 1]);
        part_words.push(sub.word.clone());
        parts.push(part);
    }
    if !remaining.is_empty() {
        return Err(Error::invariant(format!(
            "vertices {remaining:?} not covered by any part"
        )));
    }
    // Product compatibility: the concatenated part words form a reduced
    // word for the original element, so lengths add.
    let concat: Vec<usize> = part_words.iter().flatten().copied().collect();
    if !weyl::is_reduced(&q.rs, &concat)? {
        return Err(Error::invariant(
            "concatenated part words are not reduced".to_string(),
        ));
    }
    let rho = q.rs.weyl_vector();
    if weyl::act_on_vector(&q.rs, &concat, &rho)? != weyl::act_on_vector(&q.rs, &q.word, &rho)? {
        return Err(Error::invariant(
            "part words do not multiply back to the element".to_string(),
        ));
    }
    let neat = ordering
        .windows(2)
        .all(|w| q.height(w[0]) <= q.height(w[1]));
    let smooth = parts.iter().all(|part| part_quiver(q, part).holes().is_empty());
    Ok(PeakDecomposition {
        ordering: ordering.to_vec(),
        parts,
        part_words,
        minimal_vertices,
        part_peaks,
        neat,
        smooth,
    })
}

pub fn is_neat(d: &PeakDecomposition) -> bool {
    d.neat
}

pub fn is_smooth(d: &PeakDecomposition) -> bool {
    d.smooth
}

/// A distinct decomposition together with every peak ordering that
/// produces it. Identity of a decomposition is the ordered sequence of
/// part vertex-sets.
#[derive(Debug, Clone)]
pub struct DistinctDecomposition {
    pub decomposition: PeakDecomposition,
    pub orderings: Vec<Vec<usize>>,
}

/// Evaluate all s! peak orderings and deduplicate by the ordered sequence
/// of parts. Result is sorted by the part-sequence key; each entry's
/// representative ordering is the lexicographically smallest one.
pub fn enumerate_decompositions(
    q: &MinusculeQuiver,
    max_peaks: usize,
) -> Result<Vec<DistinctDecomposition>> {
    let s = q.peaks.len();
    if s > max_peaks {
        return Err(Error::resource(format!(
            "{s} peaks exceed the bound {max_peaks}"
        )));
    }
    let mut by_parts: BTreeMap<Vec<Vec<usize>>, DistinctDecomposition> = BTreeMap::new();
    // `permutations` of a sorted slice yields lexicographic order, so the
    // first ordering seen for each part sequence is the lex-smallest.
    let perms: Vec<Vec<usize>> = if s == 0 {
        vec![Vec::new()]
    } else {
        q.peaks.iter().copied().permutations(s).collect()
    };
    for ordering in perms {
        let d = decompose(q, &ordering)?;
        by_parts
            .entry(d.parts.clone())
            .and_modify(|e| e.orderings.push(ordering.clone()))
            .or_insert_with(|| DistinctDecomposition {
                decomposition: d,
                orderings: vec![ordering.clone()],
            });
    }
    Ok(by_parts.into_values().collect())
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ElementJson {
    pub r#type: String,
    pub rank: usize,
    pub weight: usize,
    pub variant: String,
    pub word: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct DecompositionJson {
    pub orderings: Vec<Vec<usize>>,
    pub parts: Vec<Vec<usize>>,
    pub words: Vec<Vec<usize>>,
    pub neat: bool,
    pub smooth: bool,
    pub ih_small: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CountsJson {
    pub qfact: usize,
    pub ih_small: usize,
}

/// Full classification of the Q-factorializations (distinct decompositions)
/// and IH-small resolutions (neat and smooth ones) of one element.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassificationReport {
    pub element: ElementJson,
    pub decompositions: Vec<DecompositionJson>,
    pub counts: CountsJson,
}

pub fn classify(q: &MinusculeQuiver, max_peaks: usize) -> Result<ClassificationReport> {
    let distinct = enumerate_decompositions(q, max_peaks)?;
    let decompositions: Vec<DecompositionJson> = distinct
        .iter()
        .map(|d| DecompositionJson {
            orderings: d.orderings.clone(),
            parts: d.decomposition.parts.clone(),
            words: d.decomposition.part_words.clone(),
            neat: d.decomposition.neat,
            smooth: d.decomposition.smooth,
            ih_small: d.decomposition.ih_small(),
        })
        .collect();
    let ih_small = decompositions.iter().filter(|d| d.ih_small).count();
    Ok(ClassificationReport {
        element: ElementJson {
            r#type: q.rs.type_letter.to_string(),
            rank: q.rs.rank,
            weight: q.weight,
            variant: q.variant.to_string(),
            word: q.word.clone(),
        },
        counts: CountsJson {
            qfact: decompositions.len(),
            ih_small,
        },
        decompositions,
    })
}
