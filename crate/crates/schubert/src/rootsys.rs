//! Exact realizations of the simple root systems A--G in their Bourbaki
//! Euclidean models. All pairings are computed geometrically over the
//! rationals and asserted integral; the Cartan matrix is derived from the
//! model, never typed in from a table.

use std::collections::HashMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, dot, rat, sub, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            TypeLetter::A => 'A',
            TypeLetter::B => 'B',
            TypeLetter::C => 'C',
            TypeLetter::D => 'D',
            TypeLetter::E => 'E',
            TypeLetter::F => 'F',
            TypeLetter::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// Which side of the minuscule/cominuscule duality a computation lives on.
/// Cominuscule checks pair against the transposed Cartan matrix (the dual
/// group has the same Weyl group).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Variant {
    Minuscule,
    Cominuscule,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Minuscule => write!(f, "minuscule"),
            Variant::Cominuscule => write!(f, "cominuscule"),
        }
    }
}

impl Variant {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "minuscule" => Ok(Variant::Minuscule),
            "cominuscule" => Ok(Variant::Cominuscule),
            other => Err(Error::input(format!(
                "unknown variant '{other}' (expected minuscule or cominuscule)"
            ))),
        }
    }
}

/// A root together with its integer coordinates in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootVector {
    pub coords: Vec<Rat>,
    pub coeffs: Vec<i64>,
}

impl RootVector {
    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }
}

/// One simple root system: Bourbaki Euclidean model, Cartan matrix,
/// fundamental weights and the full (finite) set of roots. Immutable after
/// construction.
#[derive(Debug)]
pub struct RootSystemData {
    pub type_letter: TypeLetter,
    pub rank: usize,
    /// Dimension of the ambient Euclidean space.
    pub dim: usize,
    /// Simple roots, 0-indexed internally; the public API is 1-based.
    pub simple_roots: Vec<Vec<Rat>>,
    /// cartan[i][j] = <alpha_{i+1}^vee, alpha_{j+1}>.
    pub cartan: Vec<Vec<i64>>,
    pub fundamental_weights: Vec<Vec<Rat>>,
    roots: Vec<RootVector>,
    root_index: HashMap<Vec<Rat>, usize>,
    highest: usize,
    /// Pseudo-inverse pieces for expressing vectors in the simple-root basis.
    gram_inv: Vec<Vec<Rat>>,
}

fn simple_roots_for(letter: TypeLetter, rank: usize) -> Result<(usize, Vec<Vec<Rat>>)> {
    let n = rank;
    let e = |dim: usize, i: usize| -> Vec<Rat> {
        let mut v = vec![Rat::zero(); dim];
        v[i] = rat(1);
        v
    };
    let ok = match letter {
        TypeLetter::A => n >= 1,
        TypeLetter::B | TypeLetter::C => n >= 2,
        TypeLetter::D => n >= 3,
        TypeLetter::E => (6..=8).contains(&n),
        TypeLetter::F => n == 4,
        TypeLetter::G => n == 2,
    };
    if !ok {
        return Err(Error::input(format!(
            "invalid simple type {letter}{n}"
        )));
    }
    let (dim, roots): (usize, Vec<Vec<Rat>>) = match letter {
        TypeLetter::A => {
            let dim = n + 1;
            (dim, (0..n).map(|i| sub(&e(dim, i), &e(dim, i + 1))).collect())
        }
        TypeLetter::B => {
            let dim = n;
            let mut rs: Vec<Vec<Rat>> =
                (0..n - 1).map(|i| sub(&e(dim, i), &e(dim, i + 1))).collect();
            rs.push(e(dim, n - 1));
            (dim, rs)
        }
        TypeLetter::C => {
            let dim = n;
            let mut rs: Vec<Vec<Rat>> =
                (0..n - 1).map(|i| sub(&e(dim, i), &e(dim, i + 1))).collect();
            rs.push(linalg::scale(&e(dim, n - 1), rat(2)));
            (dim, rs)
        }
        TypeLetter::D => {
            let dim = n;
            let mut rs: Vec<Vec<Rat>> =
                (0..n - 1).map(|i| sub(&e(dim, i), &e(dim, i + 1))).collect();
            rs.push(linalg::add(&e(dim, n - 2), &e(dim, n - 1)));
            (dim, rs)
        }
        TypeLetter::E => {
            let dim = 8;
            let half = Rat::new(1, 2);
            let mut a1 = vec![-half; 8];
            a1[0] = half;
            a1[7] = half;
            let mut all = vec![a1, linalg::add(&e(dim, 0), &e(dim, 1))];
            for i in 0..6 {
                all.push(sub(&e(dim, i + 1), &e(dim, i)));
            }
            all.truncate(n);
            (dim, all)
        }
        TypeLetter::F => {
            let dim = 4;
            let half = Rat::new(1, 2);
            let a4 = vec![half, -half, -half, -half];
            (
                dim,
                vec![
                    sub(&e(dim, 1), &e(dim, 2)),
                    sub(&e(dim, 2), &e(dim, 3)),
                    e(dim, 3),
                    a4,
                ],
            )
        }
        TypeLetter::G => {
            let dim = 3;
            let mut a2 = vec![rat(-2), rat(1), rat(1)];
            a2[0] = rat(-2);
            (dim, vec![sub(&e(dim, 0), &e(dim, 1)), a2])
        }
    };
    Ok((dim, roots))
}

impl RootSystemData {
    pub fn build(type_letter: TypeLetter, rank: usize) -> Result<Self> {
        let (dim, simple_roots) = simple_roots_for(type_letter, rank)?;

        // Cartan matrix from the Euclidean model.
        let mut cartan = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            let norm = dot(&simple_roots[i], &simple_roots[i]);
            for j in 0..rank {
                let p = rat(2) * dot(&simple_roots[i], &simple_roots[j]) / norm;
                if !p.is_integer() {
                    return Err(Error::invariant(format!(
                        "non-integral Cartan entry ({},{})",
                        i + 1,
                        j + 1
                    )));
                }
                cartan[i][j] = p.to_integer();
            }
        }

        // Fundamental weights: omega_j = sum_k c_k alpha_k with C c = e_j.
        let cartan_rat: Vec<Vec<Rat>> = cartan
            .iter()
            .map(|row| row.iter().map(|&x| rat(x)).collect())
            .collect();
        let mut fundamental_weights = Vec::with_capacity(rank);
        for j in 0..rank {
            let mut ej = vec![Rat::zero(); rank];
            ej[j] = rat(1);
            let c = linalg::solve(&cartan_rat, &ej)
                .ok_or_else(|| Error::invariant("singular Cartan matrix".to_string()))?;
            let mut w = vec![Rat::zero(); dim];
            for (k, ck) in c.iter().enumerate() {
                w = linalg::add(&w, &linalg::scale(&simple_roots[k], *ck));
            }
            fundamental_weights.push(w);
        }

        // Gram matrix pseudo-inverse for simple-root-basis coordinates.
        let gram: Vec<Vec<Rat>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| dot(&simple_roots[i], &simple_roots[j]))
                    .collect()
            })
            .collect();
        let gram_inv = linalg::invert(&gram)
            .ok_or_else(|| Error::invariant("singular Gram matrix".to_string()))?;

        let mut rs = RootSystemData {
            type_letter,
            rank,
            dim,
            simple_roots,
            cartan,
            fundamental_weights,
            roots: Vec::new(),
            root_index: HashMap::new(),
            highest: 0,
            gram_inv,
        };
        rs.enumerate_roots()?;
        Ok(rs)
    }

    /// Parse a spec string like "A5", "c4", "E6" (case-insensitive).
    pub fn parse_spec(spec: &str) -> Result<(TypeLetter, usize)> {
        let s = spec.trim();
        let mut chars = s.chars();
        let letter = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => TypeLetter::A,
            Some('B') => TypeLetter::B,
            Some('C') => TypeLetter::C,
            Some('D') => TypeLetter::D,
            Some('E') => TypeLetter::E,
            Some('F') => TypeLetter::F,
            Some('G') => TypeLetter::G,
            _ => return Err(Error::input(format!("unparseable root system '{spec}'"))),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::input(format!("unparseable rank in '{spec}'")))?;
        let ok = match letter {
            TypeLetter::A => rank >= 1,
            TypeLetter::B | TypeLetter::C => rank >= 2,
            TypeLetter::D => rank >= 3,
            TypeLetter::E => (6..=8).contains(&rank),
            TypeLetter::F => rank == 4,
            TypeLetter::G => rank == 2,
        };
        if !ok {
            return Err(Error::input(format!(
                "rank {rank} is out of range for type {letter}"
            )));
        }
        Ok((letter, rank))
    }

    pub fn from_spec(spec: &str) -> Result<Self> {
        let (letter, rank) = Self::parse_spec(spec)?;
        Self::build(letter, rank)
    }

    fn enumerate_roots(&mut self) -> Result<()> {
        // Orbit closure of the simple roots under all simple reflections.
        let mut queue: Vec<RootVector> = (0..self.rank)
            .map(|i| {
                let mut coeffs = vec![0i64; self.rank];
                coeffs[i] = 1;
                RootVector {
                    coords: self.simple_roots[i].clone(),
                    coeffs,
                }
            })
            .collect();
        let mut index: HashMap<Vec<Rat>, usize> = HashMap::new();
        let mut roots: Vec<RootVector> = Vec::new();
        for r in queue.drain(..) {
            if !index.contains_key(&r.coords) {
                index.insert(r.coords.clone(), roots.len());
                roots.push(r);
            }
        }
        let mut head = 0;
        while head < roots.len() {
            let current = roots[head].clone();
            head += 1;
            for i in 1..=self.rank {
                let p = self.pairing_simple(i, &current.coords);
                if p == 0 {
                    continue;
                }
                let coords = self.reflect(i, &current.coords);
                if index.contains_key(&coords) {
                    continue;
                }
                let mut coeffs = current.coeffs.clone();
                coeffs[i - 1] -= p;
                index.insert(coords.clone(), roots.len());
                roots.push(RootVector { coords, coeffs });
            }
        }
        // Highest root: the positive root of maximal height.
        let highest = roots
            .iter()
            .enumerate()
            .filter(|(_, r)| r.is_positive())
            .max_by_key(|(_, r)| r.coeffs.iter().sum::<i64>())
            .map(|(i, _)| i)
            .ok_or_else(|| Error::invariant("no positive roots".to_string()))?;
        self.roots = roots;
        self.root_index = index;
        self.highest = highest;
        Ok(())
    }

    /// <alpha_i^vee, v> for a 1-based simple index, exact integer.
    pub fn pairing_simple(&self, i: usize, v: &[Rat]) -> i64 {
        let alpha = &self.simple_roots[i - 1];
        let p = rat(2) * dot(alpha, v) / dot(alpha, alpha);
        debug_assert!(p.is_integer());
        p.to_integer()
    }

    /// <gamma^vee, delta> = 2(gamma,delta)/(gamma,gamma), asserted integral.
    pub fn pairing(&self, gamma: &[Rat], delta: &[Rat]) -> Result<i64> {
        let norm = dot(gamma, gamma);
        if norm.is_zero() {
            return Err(Error::input("pairing against a zero-length vector".to_string()));
        }
        let p = rat(2) * dot(gamma, delta) / norm;
        if !p.is_integer() {
            return Err(Error::invariant(format!("non-integral pairing {p}")));
        }
        Ok(p.to_integer())
    }

    fn reflect(&self, i: usize, v: &[Rat]) -> Vec<Rat> {
        let p = self.pairing_simple(i, v);
        linalg::sub(v, &linalg::scale(&self.simple_roots[i - 1], rat(p)))
    }

    /// Simple reflection s_i applied to a vector (1-based index).
    pub fn simple_reflection(&self, i: usize, v: &[Rat]) -> Result<Vec<Rat>> {
        if i == 0 || i > self.rank {
            return Err(Error::input(format!(
                "simple index {i} out of range 1..={}",
                self.rank
            )));
        }
        Ok(self.reflect(i, v))
    }

    pub fn simple_root(&self, i: usize) -> &[Rat] {
        &self.simple_roots[i - 1]
    }

    pub fn fundamental_weight(&self, i: usize) -> &[Rat] {
        &self.fundamental_weights[i - 1]
    }

    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &RootVector> {
        self.roots.iter().filter(|r| r.is_positive())
    }

    pub fn highest_root(&self) -> &RootVector {
        &self.roots[self.highest]
    }

    pub fn is_root(&self, v: &[Rat]) -> bool {
        self.root_index.contains_key(v)
    }

    pub fn root_data(&self, v: &[Rat]) -> Option<&RootVector> {
        self.root_index.get(v).map(|&i| &self.roots[i])
    }

    pub fn is_positive_root(&self, v: &[Rat]) -> bool {
        self.root_data(v).map_or(false, |r| r.is_positive())
    }

    /// Coordinates of `v` in the simple-root basis, `None` when `v` is
    /// outside the span.
    pub fn coeffs_in_simple_basis(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let proj: Vec<Rat> = (0..self.rank)
            .map(|i| dot(&self.simple_roots[i], v))
            .collect();
        let coeffs = linalg::mat_vec(&self.gram_inv, &proj);
        let mut rebuilt = vec![Rat::zero(); self.dim];
        for (k, c) in coeffs.iter().enumerate() {
            rebuilt = linalg::add(&rebuilt, &linalg::scale(&self.simple_roots[k], *c));
        }
        if rebuilt == v { Some(coeffs) } else { None }
    }

    /// Color pairing <beta_i^vee, beta_j> between simple roots, transposed
    /// in the cominuscule variant.
    pub fn color_pairing(&self, variant: Variant, i: usize, j: usize) -> i64 {
        match variant {
            Variant::Minuscule => self.cartan[i - 1][j - 1],
            Variant::Cominuscule => self.cartan[j - 1][i - 1],
        }
    }

    /// Weight pairing <alpha_i^vee, omega_j> in the given variant. In both
    /// variants this is the Kronecker delta, but we keep the transposition
    /// explicit for uniformity.
    pub fn weight_pairing(&self, variant: Variant, i: usize, j: usize) -> i64 {
        let _ = variant;
        if i == j { 1 } else { 0 }
    }

    /// Fundamental weight indices that are minuscule (1-based).
    pub fn minuscule_weights(&self) -> Vec<usize> {
        (1..=self.rank)
            .filter(|&j| {
                self.positive_roots().all(|beta| {
                    self.pairing(&beta.coords, &self.fundamental_weights[j - 1])
                        .map(|p| p <= 1)
                        .unwrap_or(false)
                })
            })
            .collect()
    }

    /// Fundamental weight indices that are cominuscule: the coefficient of
    /// the corresponding simple root in the highest root is 1.
    pub fn cominuscule_weights(&self) -> Vec<usize> {
        let theta = self.highest_root().coeffs.clone();
        (1..=self.rank).filter(|&j| theta[j - 1] == 1).collect()
    }

    pub fn weights_for(&self, variant: Variant) -> Vec<usize> {
        match variant {
            Variant::Minuscule => self.minuscule_weights(),
            Variant::Cominuscule => self.cominuscule_weights(),
        }
    }

    /// Sum of all fundamental weights; has trivial stabilizer in W, so its
    /// image identifies a Weyl group element.
    pub fn weyl_vector(&self) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        for w in &self.fundamental_weights {
            v = linalg::add(&v, w);
        }
        v
    }

    /// Classical root count for this type, used as a sanity check.
    pub fn expected_root_count(&self) -> usize {
        let n = self.rank;
        match self.type_letter {
            TypeLetter::A => n * (n + 1),
            TypeLetter::B | TypeLetter::C => 2 * n * n,
            TypeLetter::D => 2 * n * (n - 1),
            TypeLetter::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            TypeLetter::F => 48,
            TypeLetter::G => 12,
        }
    }
}

#[allow(unused)]
fn sign_ok(x: &Rat) -> bool {
    !x.is_negative()
}
