//! Divisor-class bookkeeping on intermediate varieties: gamma-roots, the
//! lambda-coefficient formula, nef and effective cone generators, the
//! cone-peeling algorithm, and an exact Mori-dream cover check at desk
//! scale.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::decomp::{self, PeakDecomposition};
use crate::error::{Error, Result};
use crate::exec;
use crate::linalg::{rat, Rat};
use crate::quiver::MinusculeQuiver;
use crate::rootsys::RootSystemData;
use crate::weyl;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasisTag {
    /// One coordinate per quiver vertex (Bott-Samelson divisor basis).
    Xi,
    /// One coordinate per peak (divisor basis of the intermediate variety).
    Dhat,
}

/// An exact rational divisor class tagged with its basis. In the Dhat basis
/// the coordinates are indexed by the peaks in ascending vertex order, and
/// a class is effective iff all coordinates are nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass {
    pub basis: BasisTag,
    pub coords: Vec<Rat>,
}

impl DivisorClass {
    pub fn is_effective(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }
}

/// A simplicial cone in the Dhat basis.
#[derive(Debug, Clone)]
pub struct ConeDescription {
    pub peaks: Vec<usize>,
    pub generators: Vec<DivisorClass>,
    pub simplicial: bool,
}

/// The roots gamma_i = s_{beta_1} ... s_{beta_{i-1}}(beta_i): r pairwise
/// distinct positive roots for a reduced word.
pub fn gamma_roots(rs: &RootSystemData, word: &[usize]) -> Result<Vec<Vec<Rat>>> {
    if !weyl::is_reduced(rs, word)? {
        return Err(Error::input("word is not reduced".to_string()));
    }
    weyl::prefix_roots(rs, word)
}

/// Exact matrix of pairings <gamma_i^vee, gamma_j>.
pub fn gamma_pairings(rs: &RootSystemData, word: &[usize]) -> Result<Vec<Vec<i64>>> {
    let gammas = gamma_roots(rs, word)?;
    let r = gammas.len();
    let mut m = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..r {
            m[i][j] = rs.pairing(&gammas[i], &gammas[j])?;
        }
    }
    Ok(m)
}

/// Coefficients lambda^k_i expressing the nef line-bundle class L_i in the
/// xi-basis: defined for exactly the vertices k >= i in the quiver order.
pub fn lambda_coeffs(q: &MinusculeQuiver, i: usize) -> Result<BTreeMap<usize, i64>> {
    if i == 0 || i > q.len() {
        return Err(Error::input(format!(
            "vertex {i} out of range 1..={}",
            q.len()
        )));
    }
    let gammas = weyl::prefix_roots(&q.rs, &q.word)?;
    let mut out = BTreeMap::new();
    for k in 1..=q.len() {
        if !q.geq(k, i) {
            continue;
        }
        let mut lambda: i64 = if q.color(k) == q.color(i) { 1 } else { 0 };
        for j in k + 1..=i {
            if q.color(j) == q.color(i) {
                lambda += q.rs.pairing(&gammas[k - 1], &gammas[j - 1])?;
            }
        }
        out.insert(k, lambda);
    }
    Ok(out)
}

/// Class of L_i pushed down to the Dhat basis: coordinates (lambda^p_i)
/// over the peaks, zero when the peak is not above i. Independent of the
/// chosen decomposition.
pub fn pushforward_to_dhat(q: &MinusculeQuiver, i: usize) -> Result<DivisorClass> {
    let lambdas = lambda_coeffs(q, i)?;
    let coords = q
        .peaks
        .iter()
        .map(|p| rat(lambdas.get(p).copied().unwrap_or(0)))
        .collect();
    Ok(DivisorClass {
        basis: BasisTag::Dhat,
        coords,
    })
}

/// Nef cone of the intermediate variety of a decomposition: one generator
/// per part-minimal vertex. The generator matrix is asserted invertible.
pub fn nef_cone(q: &MinusculeQuiver, d: &PeakDecomposition) -> Result<ConeDescription> {
    let generators: Vec<DivisorClass> = d
        .minimal_vertices
        .iter()
        .map(|&m| pushforward_to_dhat(q, m))
        .collect::<Result<_>>()?;
    let matrix: Vec<Vec<Rat>> = generators.iter().map(|g| g.coords.clone()).collect();
    if !matrix.is_empty() && crate::linalg::invert(&matrix).is_none() {
        return Err(Error::invariant(
            "nef cone generator matrix is singular".to_string(),
        ));
    }
    Ok(ConeDescription {
        peaks: q.peaks.clone(),
        generators,
        simplicial: true,
    })
}

/// Effective cone: the nonnegative orthant in the Dhat basis.
pub fn effective_cone(q: &MinusculeQuiver) -> ConeDescription {
    let s = q.peaks.len();
    let generators = (0..s)
        .map(|i| {
            let mut coords = vec![Rat::zero(); s];
            coords[i] = rat(1);
            DivisorClass {
                basis: BasisTag::Dhat,
                coords,
            }
        })
        .collect();
    ConeDescription {
        peaks: q.peaks.clone(),
        generators,
        simplicial: true,
    }
}

/// Outcome of peeling an effective class: the induced peak ordering and the
/// peel trace (vertex i_0 and coefficient mu per step). The input class is
/// exactly the sum of mu * L_{i_0} over the steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelResult {
    pub ordering: Vec<usize>,
    pub steps: Vec<(usize, Rat)>,
}

pub fn peel(q: &MinusculeQuiver, class: &DivisorClass) -> Result<PeelResult> {
    if class.basis != BasisTag::Dhat {
        return Err(Error::input("peel expects a class in the Dhat basis".to_string()));
    }
    let s = q.peaks.len();
    if class.coords.len() != s {
        return Err(Error::input(format!(
            "class has {} coordinates, expected one per peak ({s})",
            class.coords.len()
        )));
    }
    if !class.is_effective() {
        return Err(Error::input("class has a negative coordinate".to_string()));
    }
    let mut d = class.coords.clone();
    // When each peak's coordinate hit zero; 0 = zero from the start.
    let mut zero_step: Vec<usize> = d
        .iter()
        .map(|c| if c.is_zero() { 0 } else { usize::MAX })
        .collect();
    let mut steps = Vec::new();
    let mut step = 0usize;
    while d.iter().any(|c| !c.is_zero()) {
        step += 1;
        if step > s + 1 {
            return Err(Error::invariant("peel failed to terminate".to_string()));
        }
        // N: peaks whose current coefficient is zero; Q': vertices not
        // below any of them.
        let n_peaks: Vec<usize> = q
            .peaks
            .iter()
            .enumerate()
            .filter(|(idx, _)| d[*idx].is_zero())
            .map(|(_, &p)| p)
            .collect();
        let q_prime: Vec<usize> = (1..=q.len())
            .filter(|&v| !n_peaks.iter().any(|&p| q.geq(p, v)))
            .collect();
        // Minimal vertex of Q', smallest index on ties.
        let i0 = *q_prime
            .iter()
            .find(|&&v| !q_prime.iter().any(|&u| u != v && q.geq(v, u)))
            .ok_or_else(|| Error::invariant("peel found no minimal vertex".to_string()))?;
        let gen = pushforward_to_dhat(q, i0)?;
        // Largest mu keeping the class effective.
        let mu = gen
            .coords
            .iter()
            .zip(&d)
            .filter(|(g, _)| g.is_positive())
            .map(|(g, c)| c / g)
            .min()
            .ok_or_else(|| Error::invariant("peel generator has no support".to_string()))?;
        let mut zeroed_any = false;
        for idx in 0..s {
            d[idx] -= mu * gen.coords[idx];
            if d[idx].is_negative() {
                return Err(Error::invariant("peel produced a negative coefficient".to_string()));
            }
            if d[idx].is_zero() && zero_step[idx] == usize::MAX {
                zero_step[idx] = step;
                zeroed_any = true;
            }
        }
        if !zeroed_any {
            return Err(Error::invariant("peel step zeroed no new peak".to_string()));
        }
        steps.push((i0, mu));
    }
    // Peaks zeroed later come earlier in the ordering; ties and the
    // initially-zero peaks are completed by smallest index.
    let mut order: Vec<usize> = (0..s).collect();
    order.sort_by_key(|&idx| (std::cmp::Reverse(zero_step[idx]), q.peaks[idx]));
    let ordering = order.into_iter().map(|idx| q.peaks[idx]).collect();
    Ok(PeelResult { ordering, steps })
}

/// Check that a peel trace reproduces the class exactly and only uses nef
/// generators of the decomposition induced by its own ordering.
pub fn check_peel(
    q: &MinusculeQuiver,
    class: &DivisorClass,
    result: &PeelResult,
) -> Result<()> {
    let s = q.peaks.len();
    let mut rebuilt = vec![Rat::zero(); s];
    for &(i0, mu) in &result.steps {
        if mu.is_negative() {
            return Err(Error::Verification(format!("negative mu at vertex {i0}")));
        }
        let gen = pushforward_to_dhat(q, i0)?;
        for idx in 0..s {
            rebuilt[idx] += mu * gen.coords[idx];
        }
    }
    if rebuilt != class.coords {
        return Err(Error::Verification(format!(
            "peel trace rebuilds {rebuilt:?}, expected {:?}",
            class.coords
        )));
    }
    let dec = decomp::decompose(q, &result.ordering)?;
    for &(i0, _) in &result.steps {
        if !dec.minimal_vertices.contains(&i0) {
            return Err(Error::Verification(format!(
                "peel vertex {i0} is not minimal in the emitted decomposition"
            )));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------
// Exact 2-d geometry for the cross-section cover check (3 peaks): convex
// polygon clipping and shoelace areas over the rationals.

type Pt = (Rat, Rat);

fn cross(o: Pt, a: Pt, b: Pt) -> Rat {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn polygon_area2(poly: &[Pt]) -> Rat {
    // Twice the signed area.
    let mut a = Rat::zero();
    for i in 0..poly.len() {
        let p = poly[i];
        let q = poly[(i + 1) % poly.len()];
        a += p.0 * q.1 - q.0 * p.1;
    }
    a
}

fn ensure_ccw(poly: &mut Vec<Pt>) {
    if polygon_area2(poly).is_negative() {
        poly.reverse();
    }
}

/// Clip a convex polygon by the half-plane left of the directed edge a->b.
fn clip_halfplane(poly: &[Pt], a: Pt, b: Pt) -> Vec<Pt> {
    let mut out = Vec::new();
    let n = poly.len();
    for i in 0..n {
        let cur = poly[i];
        let next = poly[(i + 1) % n];
        let c_cur = cross(a, b, cur);
        let c_next = cross(a, b, next);
        if !c_cur.is_negative() {
            out.push(cur);
        }
        if (c_cur.is_negative() && c_next.is_positive())
            || (c_cur.is_positive() && c_next.is_negative())
        {
            let t = c_cur / (c_cur - c_next);
            out.push((cur.0 + t * (next.0 - cur.0), cur.1 + t * (next.1 - cur.1)));
        }
    }
    out
}

fn intersection_area2(p: &[Pt], q: &[Pt]) -> Rat {
    let mut clipped: Vec<Pt> = p.to_vec();
    ensure_ccw(&mut clipped);
    let mut q = q.to_vec();
    ensure_ccw(&mut q);
    for i in 0..q.len() {
        if clipped.is_empty() {
            break;
        }
        clipped = clip_halfplane(&clipped, q[i], q[(i + 1) % q.len()]);
    }
    if clipped.len() < 3 {
        Rat::zero()
    } else {
        polygon_area2(&clipped).abs()
    }
}

// ---------------------------------------------------------------------

/// Result of the Mori-dream cover verification.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoverReport {
    pub peaks: Vec<usize>,
    pub decompositions: usize,
    pub generators_nonnegative: bool,
    pub samples_checked: usize,
    pub peel_failures: Vec<String>,
    /// Exact cross-section cover check, performed for at most 3 peaks.
    pub exact_cover: Option<bool>,
    /// Diagnostic: nef-cone interiors pairwise disjoint (exact for <= 3 peaks).
    pub interiors_disjoint: Option<bool>,
    pub passed: bool,
}

fn sample_points(s: usize, seed: u64, n: usize) -> Vec<Vec<Rat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts = Vec::with_capacity(n);
    for _ in 0..n {
        let p: Vec<Rat> = (0..s)
            .map(|_| Rat::new(rng.gen_range(0..=24), rng.gen_range(1..=6)))
            .collect();
        pts.push(p);
    }
    pts
}

/// Certify Eff = union of the nef cones: generator positivity, exact
/// reconstruction by peeling on a deterministic sample (plus generators and
/// orthant facet midpoints), and an exact cross-section cover check when
/// there are at most 3 peaks.
pub fn verify_mds_cover(
    q: &MinusculeQuiver,
    seed: u64,
    n_samples: usize,
    max_peaks: usize,
) -> Result<CoverReport> {
    let s = q.peaks.len();
    let distinct = decomp::enumerate_decompositions(q, max_peaks)?;
    let cones: Vec<ConeDescription> = distinct
        .iter()
        .map(|d| nef_cone(q, &d.decomposition))
        .collect::<Result<_>>()?;

    let generators_nonnegative = cones
        .iter()
        .all(|c| c.generators.iter().all(|g| g.is_effective()));

    // Sample set: seeded rationals, the nef generators themselves, the
    // orthant unit generators and the facet midpoints (pairwise unit sums
    // scaled by 1/2).
    let mut points = sample_points(s, seed, n_samples);
    for c in &cones {
        for g in &c.generators {
            points.push(g.coords.clone());
        }
    }
    for i in 0..s {
        let mut unit = vec![Rat::zero(); s];
        unit[i] = rat(1);
        points.push(unit.clone());
        for j in i + 1..s {
            let mut mid = unit.clone();
            mid[j] = Rat::new(1, 2);
            mid[i] = Rat::new(1, 2);
            points.push(mid);
        }
    }
    points.push(vec![Rat::zero(); s]);

    let outcomes = exec::par_map(&points, |coords| {
        let class = DivisorClass {
            basis: BasisTag::Dhat,
            coords: coords.clone(),
        };
        peel(q, &class)
            .and_then(|res| check_peel(q, &class, &res))
            .map_err(|e| format!("point {coords:?}: {e}"))
    });
    let peel_failures: Vec<String> = outcomes.into_iter().filter_map(|o| o.err()).collect();
    let samples_checked = points.len();

    // Distinct decompositions can share a nef cone (swapping two commuting
    // singleton parts changes the part sequence but not the variety), so
    // the cover is over the distinct cones.
    let mut seen: Vec<Vec<Vec<Rat>>> = Vec::new();
    let mut distinct_cones: Vec<&ConeDescription> = Vec::new();
    for c in &cones {
        let mut key: Vec<Vec<Rat>> = c.generators.iter().map(|g| g.coords.clone()).collect();
        key.sort();
        if !seen.contains(&key) {
            seen.push(key);
            distinct_cones.push(c);
        }
    }
    let cones: Vec<ConeDescription> = distinct_cones.into_iter().cloned().collect();

    // Exact cover on the cross-section simplex for s <= 3.
    let (exact_cover, interiors_disjoint) = match s {
        0 | 1 => (Some(true), Some(true)),
        2 => {
            // Each cone is an interval in the barycentric coordinate of the
            // second peak; the union must be [0,1] without gaps.
            let mut intervals: Vec<(Rat, Rat)> = cones
                .iter()
                .map(|c| {
                    let mut ys: Vec<Rat> = c
                        .generators
                        .iter()
                        .map(|g| {
                            let total = g.coords[0] + g.coords[1];
                            g.coords[1] / total
                        })
                        .collect();
                    ys.sort();
                    (ys[0], ys[ys.len() - 1])
                })
                .collect();
            intervals.sort();
            let mut covered = true;
            let mut disjoint = true;
            let mut reach = Rat::zero();
            for (a, b) in &intervals {
                if *a > reach {
                    covered = false;
                }
                if *a < reach {
                    disjoint = false;
                }
                if *b > reach {
                    reach = *b;
                }
            }
            if reach != rat(1) {
                covered = false;
            }
            (Some(covered), Some(disjoint))
        }
        3 => {
            // Cross-section triangles in barycentric coordinates (y, z).
            let tris: Vec<Vec<Pt>> = cones
                .iter()
                .map(|c| {
                    c.generators
                        .iter()
                        .map(|g| {
                            let total: Rat = g.coords.iter().sum();
                            (g.coords[1] / total, g.coords[2] / total)
                        })
                        .collect()
                })
                .collect();
            let total_area2: Rat = tris.iter().map(|t| polygon_area2(t).abs()).sum();
            let mut disjoint = true;
            for i in 0..tris.len() {
                for j in i + 1..tris.len() {
                    if !intersection_area2(&tris[i], &tris[j]).is_zero() {
                        disjoint = false;
                    }
                }
            }
            // Containment in the simplex is automatic (coordinates are
            // nonnegative and sum to 1), so area equality plus disjoint
            // interiors is an exact cover certificate.
            (Some(total_area2 == rat(1) && disjoint), Some(disjoint))
        }
        _ => (None, None),
    };

    let passed = generators_nonnegative
        && peel_failures.is_empty()
        && exact_cover.unwrap_or(true);
    Ok(CoverReport {
        peaks: q.peaks.clone(),
        decompositions: distinct.len(),
        generators_nonnegative,
        samples_checked,
        peel_failures,
        exact_cover,
        interiors_disjoint,
        passed,
    })
}

/// JSON shape for cones: rationals serialized as "p/q" strings.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ConeJson {
    pub basis: String,
    pub peaks: Vec<usize>,
    pub generators: Vec<Vec<String>>,
    pub simplicial: bool,
}

pub fn rational_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n
            .trim()
            .parse()
            .map_err(|_| Error::input(format!("bad rational '{s}'")))?;
        let d: i64 = d
            .trim()
            .parse()
            .map_err(|_| Error::input(format!("bad rational '{s}'")))?;
        if d == 0 {
            return Err(Error::input(format!("zero denominator in '{s}'")));
        }
        Ok(Rat::new(n, d))
    } else {
        let n: i64 = s
            .parse()
            .map_err(|_| Error::input(format!("bad rational '{s}'")))?;
        Ok(rat(n))
    }
}

impl ConeDescription {
    pub fn to_json(&self) -> ConeJson {
        ConeJson {
            basis: "dhat".to_string(),
            peaks: self.peaks.clone(),
            generators: self
                .generators
                .iter()
                .map(|g| g.coords.iter().map(rational_to_string).collect())
                .collect(),
            simplicial: self.simplicial,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Variant;
    use std::sync::Arc;

    fn quiver(spec: &str, word: &[usize], weight: usize, variant: Variant) -> MinusculeQuiver {
        let rs = Arc::new(RootSystemData::from_spec(spec).unwrap());
        MinusculeQuiver::build(rs, word, weight, variant).unwrap()
    }

    fn a5() -> MinusculeQuiver {
        quiver("A5", &[3, 1, 2, 5, 4, 3], 3, Variant::Minuscule)
    }

    fn c4() -> MinusculeQuiver {
        quiver("C4", &[3, 4, 1, 2, 3, 4], 4, Variant::Cominuscule)
    }

    #[test]
    fn gamma_roots_basics() {
        let a2 = RootSystemData::from_spec("A2").unwrap();
        let g = gamma_roots(&a2, &[1, 2]).unwrap();
        assert_eq!(g[0], a2.simple_root(1).to_vec());
        assert_eq!(
            g[1],
            crate::linalg::add(a2.simple_root(1), a2.simple_root(2))
        );
        assert!(gamma_roots(&a2, &[1, 1]).is_err());

        // gamma_6 of the A5 example word is the full root sum.
        let a5rs = RootSystemData::from_spec("A5").unwrap();
        let g = gamma_roots(&a5rs, &[3, 1, 2, 5, 4, 3]).unwrap();
        let all: Vec<Rat> = (1..=5).fold(vec![Rat::zero(); a5rs.dim], |acc, i| {
            crate::linalg::add(&acc, a5rs.simple_root(i))
        });
        assert_eq!(g[5], all);
        // Pairwise distinct positive roots.
        for (i, gi) in g.iter().enumerate() {
            assert!(a5rs.is_positive_root(gi));
            for gj in &g[i + 1..] {
                assert_ne!(gi, gj);
            }
        }
    }

    #[test]
    fn gamma_pairing_values() {
        let a2 = RootSystemData::from_spec("A2").unwrap();
        let m = gamma_pairings(&a2, &[1, 2]).unwrap();
        assert_eq!(m[0][0], 2);
        assert_eq!(m[1][1], 2);
        assert_eq!(m[0][1], 1);
        let c2 = RootSystemData::from_spec("C2").unwrap();
        let m = gamma_pairings(&c2, &[1, 2]).unwrap();
        assert_eq!(m[0][1], 2);
    }

    #[test]
    fn lambda_examples() {
        let a2q = quiver("A2", &[1, 2], 2, Variant::Minuscule);
        let l = lambda_coeffs(&a2q, 2).unwrap();
        assert_eq!(l, BTreeMap::from([(1, 1), (2, 1)]));
        let l1 = lambda_coeffs(&a2q, 1).unwrap();
        assert_eq!(l1, BTreeMap::from([(1, 1)]));

        let c2q = quiver("C2", &[1, 2], 2, Variant::Cominuscule);
        let l = lambda_coeffs(&c2q, 2).unwrap();
        assert_eq!(l, BTreeMap::from([(1, 2), (2, 1)]));
    }

    #[test]
    fn pushforward_examples() {
        let q = a5();
        assert_eq!(
            pushforward_to_dhat(&q, 3).unwrap().coords,
            vec![rat(1), rat(1), rat(0)]
        );
        assert_eq!(
            pushforward_to_dhat(&q, 6).unwrap().coords,
            vec![rat(1), rat(1), rat(1)]
        );
        assert_eq!(
            pushforward_to_dhat(&q, 1).unwrap().coords,
            vec![rat(1), rat(0), rat(0)]
        );
    }

    #[test]
    fn nef_cones_of_a5() {
        let q = a5();
        let d = decomp::decompose(&q, &[1, 2, 4]).unwrap();
        let cone = nef_cone(&q, &d).unwrap();
        let coords: Vec<Vec<Rat>> = cone.generators.iter().map(|g| g.coords.clone()).collect();
        assert_eq!(
            coords,
            vec![
                vec![rat(1), rat(0), rat(0)],
                vec![rat(1), rat(1), rat(0)],
                vec![rat(1), rat(1), rat(1)],
            ]
        );
        let d = decomp::decompose(&q, &[2, 1, 4]).unwrap();
        let cone = nef_cone(&q, &d).unwrap();
        let coords: Vec<Vec<Rat>> = cone.generators.iter().map(|g| g.coords.clone()).collect();
        assert_eq!(
            coords,
            vec![
                vec![rat(0), rat(1), rat(0)],
                vec![rat(1), rat(1), rat(0)],
                vec![rat(1), rat(1), rat(1)],
            ]
        );
    }

    #[test]
    fn effective_cone_is_orthant() {
        let q = a5();
        let cone = effective_cone(&q);
        assert_eq!(cone.generators.len(), 3);
        for (i, g) in cone.generators.iter().enumerate() {
            for (j, c) in g.coords.iter().enumerate() {
                assert_eq!(*c, if i == j { rat(1) } else { rat(0) });
            }
        }
    }

    #[test]
    fn peel_traces() {
        let q = a5();
        // D = Dhat_1.
        let class = DivisorClass {
            basis: BasisTag::Dhat,
            coords: vec![rat(1), rat(0), rat(0)],
        };
        let res = peel(&q, &class).unwrap();
        assert_eq!(res.steps, vec![(1, rat(1))]);
        check_peel(&q, &class, &res).unwrap();

        // D = (2,1,1): first peel at the global minimum, then at vertex 1.
        let class = DivisorClass {
            basis: BasisTag::Dhat,
            coords: vec![rat(2), rat(1), rat(1)],
        };
        let res = peel(&q, &class).unwrap();
        assert_eq!(res.steps, vec![(6, rat(1)), (1, rat(1))]);
        assert_eq!(res.ordering, vec![1, 2, 4]);
        check_peel(&q, &class, &res).unwrap();

        // D = 0: empty trace.
        let class = DivisorClass {
            basis: BasisTag::Dhat,
            coords: vec![rat(0); 3],
        };
        let res = peel(&q, &class).unwrap();
        assert!(res.steps.is_empty());
        check_peel(&q, &class, &res).unwrap();

        // Negative input is an input error.
        let class = DivisorClass {
            basis: BasisTag::Dhat,
            coords: vec![rat(-1), rat(0), rat(0)],
        };
        assert!(matches!(peel(&q, &class), Err(Error::Input(_))));
    }

    #[test]
    fn pushforward_is_decomposition_independent() {
        let q = a5();
        // Vertex 6 is minimal in the last part of every decomposition.
        let reference = pushforward_to_dhat(&q, 6).unwrap();
        for d in decomp::enumerate_decompositions(&q, 8).unwrap() {
            for &m in &d.decomposition.minimal_vertices {
                if m == 6 {
                    assert_eq!(pushforward_to_dhat(&q, 6).unwrap(), reference);
                }
            }
        }
    }

    #[test]
    fn mds_cover_a5_and_c4() {
        let report = verify_mds_cover(&a5(), 42, 200, 8).unwrap();
        assert!(report.passed, "{report:?}");
        assert_eq!(report.exact_cover, Some(true));
        assert_eq!(report.interiors_disjoint, Some(true));
        assert_eq!(report.decompositions, 6);

        let report = verify_mds_cover(&c4(), 42, 200, 8).unwrap();
        assert!(report.passed, "{report:?}");
        assert_eq!(report.exact_cover, Some(true));
        assert_eq!(report.decompositions, 2);
    }

    #[test]
    fn single_peak_cover_is_trivial() {
        let q = quiver("A2", &[2, 1], 1, Variant::Minuscule);
        let report = verify_mds_cover(&q, 1, 50, 8).unwrap();
        assert!(report.passed);
        assert_eq!(report.exact_cover, Some(true));
    }

    #[test]
    fn polygon_clipping_basics() {
        let t1 = vec![(rat(0), rat(0)), (rat(2), rat(0)), (rat(0), rat(2))];
        let t2 = vec![(rat(1), rat(1)), (rat(3), rat(1)), (rat(1), rat(3))];
        // Triangles touch at one point: zero overlap.
        assert!(intersection_area2(&t1, &t2).is_zero());
        let t3 = vec![(rat(0), rat(0)), (rat(2), rat(0)), (rat(2), rat(2))];
        // Overlap of t1 and t3 is the triangle (0,0),(2,0),(1,1): area 1.
        assert_eq!(intersection_area2(&t1, &t3), rat(2));
        assert_eq!(polygon_area2(&t1).abs(), rat(4));
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rational_to_string(&Rat::new(3, 2)), "3/2");
        assert_eq!(rational_to_string(&rat(5)), "5");
        assert_eq!(parse_rational("3/2").unwrap(), Rat::new(3, 2));
        assert_eq!(parse_rational("-4").unwrap(), rat(-4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}

