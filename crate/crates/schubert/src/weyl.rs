//! Weyl-group words: reduced-word tests, lengths, minuscule coset
//! enumeration and the brute-force Bruhat oracle. Words are sequences of
//! 1-based simple indices; position 1 is the leftmost factor of
//! w = s_{beta_1} ... s_{beta_r}, so acting on a vector applies the
//! rightmost letter first.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::linalg::Rat;
use crate::rootsys::{RootSystemData, Variant};

/// Default bound for the exhaustive reduced-word oracle.
pub const DEFAULT_WORD_BOUND: usize = 12;

pub fn check_word(rs: &RootSystemData, word: &[usize]) -> Result<()> {
    for &i in word {
        if i == 0 || i > rs.rank {
            return Err(Error::input(format!(
                "letter {i} out of range 1..={}",
                rs.rank
            )));
        }
    }
    Ok(())
}

/// Apply w = s_{beta_1} ... s_{beta_r} to a vector (rightmost letter first).
pub fn act_on_vector(rs: &RootSystemData, word: &[usize], v: &[Rat]) -> Result<Vec<Rat>> {
    check_word(rs, word)?;
    let mut v = v.to_vec();
    for &i in word.iter().rev() {
        v = rs.simple_reflection(i, &v)?;
    }
    Ok(v)
}

/// Prefix roots gamma_i = s_{beta_1} ... s_{beta_{i-1}}(beta_i).
pub fn prefix_roots(rs: &RootSystemData, word: &[usize]) -> Result<Vec<Vec<Rat>>> {
    check_word(rs, word)?;
    let mut out = Vec::with_capacity(word.len());
    for (i, &letter) in word.iter().enumerate() {
        out.push(act_on_vector(rs, &word[..i], rs.simple_root(letter))?);
    }
    Ok(out)
}

/// A word is reduced iff its prefix roots are all positive (they are then
/// automatically pairwise distinct).
pub fn is_reduced(rs: &RootSystemData, word: &[usize]) -> Result<bool> {
    let gammas = prefix_roots(rs, word)?;
    Ok(gammas.iter().all(|g| rs.is_positive_root(g)))
}

/// Length of the group element: the number of positive roots sent negative.
pub fn length(rs: &RootSystemData, word: &[usize]) -> Result<usize> {
    check_word(rs, word)?;
    let mut count = 0;
    for beta in rs.positive_roots() {
        let img = act_on_vector(rs, word, &beta.coords)?;
        let data = rs
            .root_data(&img)
            .ok_or_else(|| Error::invariant("root image is not a root".to_string()))?;
        if !data.is_positive() {
            count += 1;
        }
    }
    Ok(count)
}

fn inverse_word(word: &[usize]) -> Vec<usize> {
    word.iter().rev().copied().collect()
}

/// True iff l(s_i w) < l(w), i.e. some reduced word of w starts with s_i.
fn has_left_descent(rs: &RootSystemData, word: &[usize], i: usize) -> Result<bool> {
    // l(s_i w) < l(w) iff w^{-1}(alpha_i) is negative.
    let img = act_on_vector(rs, &inverse_word(word), rs.simple_root(i))?;
    let data = rs
        .root_data(&img)
        .ok_or_else(|| Error::invariant("root image is not a root".to_string()))?;
    Ok(!data.is_positive())
}

/// Lexicographically smallest reduced word for the element of `word`.
pub fn canonical_word(rs: &RootSystemData, word: &[usize]) -> Result<Vec<usize>> {
    let mut current = word.to_vec();
    let mut len = length(rs, &current)?;
    let mut out = Vec::with_capacity(len);
    while len > 0 {
        let mut picked = None;
        for i in 1..=rs.rank {
            if has_left_descent(rs, &current, i)? {
                picked = Some(i);
                break;
            }
        }
        let i = picked.ok_or_else(|| Error::invariant("no descent on nontrivial element".to_string()))?;
        out.push(i);
        let mut next = vec![i];
        next.extend_from_slice(&current);
        // Reduce the representative word so lengths stay cheap to compute.
        current = shorten(rs, &next)?;
        len -= 1;
    }
    Ok(out)
}

/// Produce some reduced word for the element of `word` (deletion procedure).
pub fn shorten(rs: &RootSystemData, word: &[usize]) -> Result<Vec<usize>> {
    let mut w = word.to_vec();
    loop {
        if is_reduced(rs, &w)? {
            return Ok(w);
        }
        // Find the first non-positive prefix root and apply the exchange
        // property: delete the offending pair.
        let gammas = prefix_roots(rs, &w)?;
        let j = gammas
            .iter()
            .position(|g| !rs.is_positive_root(g))
            .expect("non-reduced word has a negative prefix root");
        // gamma_j negative means s_{beta_1}..s_{beta_{j-1}} has a reduced
        // word ending in beta_j; delete position j and the matching earlier
        // position k with gamma_k = -gamma_j reflected appropriately.
        let target = crate::linalg::scale(&gammas[j], crate::linalg::rat(-1));
        let k = gammas[..j]
            .iter()
            .position(|g| {
                // gamma_k = s_{beta_1}..s_{beta_{k-1}}(beta_k); the exchange
                // condition is gamma_k = -gamma_j
                *g == target
            })
            .expect("exchange partner exists");
        let mut next = Vec::with_capacity(w.len() - 2);
        for (idx, &letter) in w.iter().enumerate() {
            if idx != j && idx != k {
                next.push(letter);
            }
        }
        w = next;
    }
}

/// True iff `word` is a minimal coset representative modulo W_{P_omega} and
/// omega is (co)minuscule for `rs`. Errors on non-reduced input or a weight
/// outside the (co)minuscule table.
pub fn is_minuscule_element(
    rs: &RootSystemData,
    word: &[usize],
    weight: usize,
    variant: Variant,
) -> Result<bool> {
    if weight == 0 || weight > rs.rank {
        return Err(Error::input(format!(
            "weight index {weight} out of range 1..={}",
            rs.rank
        )));
    }
    if !rs.weights_for(variant).contains(&weight) {
        return Err(Error::input(format!(
            "omega_{weight} is not {variant} in type {}{}",
            rs.type_letter, rs.rank
        )));
    }
    if !is_reduced(rs, word)? {
        return Err(Error::input("word is not reduced".to_string()));
    }
    for i in 1..=rs.rank {
        if i == weight {
            continue;
        }
        let img = act_on_vector(rs, word, rs.simple_root(i))?;
        if !rs.is_positive_root(&img) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Enumerate every (co)minuscule element of W/W_{P_omega}, returned as
/// canonical words sorted by length then lexicographically.
pub fn enumerate_minuscule(
    rs: &RootSystemData,
    weight: usize,
    variant: Variant,
) -> Result<Vec<Vec<usize>>> {
    if weight == 0 || weight > rs.rank {
        return Err(Error::input(format!(
            "weight index {weight} out of range 1..={}",
            rs.rank
        )));
    }
    if !rs.weights_for(variant).contains(&weight) {
        return Err(Error::input(format!(
            "omega_{weight} is not {variant} in type {}{}",
            rs.type_letter, rs.rank
        )));
    }
    // Breadth-first search over the orbit W.omega; orbit points correspond
    // bijectively to minimal coset representatives.
    let omega = rs.fundamental_weight(weight).to_vec();
    let mut seen: HashMap<Vec<Rat>, Vec<usize>> = HashMap::new();
    seen.insert(omega.clone(), Vec::new());
    let mut queue = VecDeque::new();
    queue.push_back(omega);
    let mut words = Vec::new();
    while let Some(v) = queue.pop_front() {
        let word = seen[&v].clone();
        words.push(word.clone());
        for i in 1..=rs.rank {
            let img = rs.simple_reflection(i, &v)?;
            if img != v && !seen.contains_key(&img) {
                let mut w = vec![i];
                w.extend_from_slice(&word);
                seen.insert(img.clone(), w);
                queue.push_back(img);
            }
        }
    }
    let mut out = Vec::with_capacity(words.len());
    for w in words {
        out.push(canonical_word(rs, &w)?);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out.dedup();
    Ok(out)
}

/// All reduced words for the element of `word`, exhaustively via left
/// descents. Bounded: errors when the length exceeds `bound`.
pub fn all_reduced_words(
    rs: &RootSystemData,
    word: &[usize],
    bound: usize,
) -> Result<BTreeSet<Vec<usize>>> {
    if !is_reduced(rs, word)? {
        return Err(Error::input("word is not reduced".to_string()));
    }
    if word.len() > bound {
        return Err(Error::resource(format!(
            "word length {} exceeds bound {bound}",
            word.len()
        )));
    }
    fn go(
        rs: &RootSystemData,
        word: &[usize],
        memo: &mut HashMap<Vec<Rat>, BTreeSet<Vec<usize>>>,
    ) -> Result<BTreeSet<Vec<usize>>> {
        let key = act_on_vector(rs, word, &rs.weyl_vector())?;
        if let Some(hit) = memo.get(&key) {
            return Ok(hit.clone());
        }
        let mut out = BTreeSet::new();
        if word.is_empty() {
            out.insert(Vec::new());
        } else {
            for i in 1..=rs.rank {
                if has_left_descent(rs, word, i)? {
                    let mut prefixed = vec![i];
                    prefixed.extend_from_slice(word);
                    let rest = shorten(rs, &prefixed)?;
                    for tail in go(rs, &rest, memo)? {
                        let mut w = vec![i];
                        w.extend(tail);
                        out.insert(w);
                    }
                }
            }
        }
        memo.insert(key, out.clone());
        Ok(out)
    }
    let mut memo = HashMap::new();
    go(rs, word, &mut memo)
}

/// Bruhat order u <= w via the subword property, both words reduced.
pub fn bruhat_leq(rs: &RootSystemData, u: &[usize], w: &[usize]) -> Result<bool> {
    if !is_reduced(rs, u)? || !is_reduced(rs, w)? {
        return Err(Error::input("bruhat_leq requires reduced words".to_string()));
    }
    fn go(rs: &RootSystemData, u: &[usize], w: &[usize]) -> Result<bool> {
        if u.is_empty() {
            return Ok(true);
        }
        if u.len() > w.len() {
            return Ok(false);
        }
        let s = w[0];
        let rest = &w[1..];
        if has_left_descent(rs, u, s)? {
            let mut su = vec![s];
            su.extend_from_slice(u);
            let su = shorten(rs, &su)?;
            go(rs, &su, rest)
        } else {
            go(rs, u, rest)
        }
    }
    go(rs, u, w)
}

/// Serialize a word as comma-separated 1-based indices.
pub fn word_to_string(word: &[usize]) -> String {
    word.iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parse "3,1,2,5,4,3" into a word. The empty string is the identity.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::input(format!("bad word letter '{tok}'")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{self, rat};
    use crate::rootsys::TypeLetter;

    fn rs(spec: &str) -> RootSystemData {
        RootSystemData::from_spec(spec).unwrap()
    }

    #[test]
    fn act_identity_and_single() {
        let a1 = rs("A1");
        let v = a1.fundamental_weight(1).to_vec();
        assert_eq!(act_on_vector(&a1, &[], &v).unwrap(), v);
        let img = act_on_vector(&a1, &[1], &v).unwrap();
        assert_eq!(img, linalg::sub(&v, a1.simple_root(1)));
    }

    #[test]
    fn act_minuscule_word_stepwise() {
        // Along a minuscule word every step subtracts one simple root.
        let a5 = rs("A5");
        let word = [3, 1, 2, 5, 4, 3];
        let mut expected = a5.fundamental_weight(3).to_vec();
        for &i in word.iter().rev() {
            expected = linalg::sub(&expected, a5.simple_root(i));
        }
        let got = act_on_vector(&a5, &word, a5.fundamental_weight(3)).unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn reducedness() {
        let a5 = rs("A5");
        assert!(!is_reduced(&a5, &[1, 1]).unwrap());
        assert!(is_reduced(&a5, &[3, 1, 2, 5, 4, 3]).unwrap());
        let a2 = rs("A2");
        assert!(!is_reduced(&a2, &[1, 2, 1, 2]).unwrap());
        assert!(is_reduced(&a2, &[1, 2, 1]).unwrap());
    }

    #[test]
    fn lengths() {
        let a2 = rs("A2");
        assert_eq!(length(&a2, &[]).unwrap(), 0);
        assert_eq!(length(&a2, &[1, 2, 1, 2]).unwrap(), 2);
        let c4 = rs("C4");
        assert_eq!(length(&c4, &[3, 4, 1, 2, 3, 4]).unwrap(), 6);
    }

    /// Independent oracle: inversion count in the (signed) permutation
    /// realization for classical types.
    fn inversion_length(rs_: &RootSystemData, word: &[usize]) -> usize {
        // Act on the coordinate vector (1, 2, ..., dim) and count inversions
        // of the resulting signed sequence. For type A this is the classical
        // permutation inversion count; for B/C it is inv + sum over negative
        // entries; D differs (handled separately below).
        let base: Vec<Rat> = (1..=rs_.dim as i64).map(rat).collect();
        let img = act_on_vector(rs_, word, &base).unwrap();
        let vals: Vec<i64> = img
            .iter()
            .map(|x| {
                assert!(x.is_integer());
                x.to_integer()
            })
            .collect();
        // vals encodes a signed permutation u with u(e_i) = sign * e_|v|.
        // e_i - e_j (i<j) maps to sgn_i e_a - sgn_j e_b, negative iff:
        //   (+,+): a > b; (+,-): never; (-,+): always; (-,-): a < b.
        // e_i + e_j maps to sgn_i e_a + sgn_j e_b, negative iff:
        //   (+,+): never; (+,-): a > b; (-,+): a > b; (-,-): always.
        // e_i (B) / 2e_i (C) maps negative iff sgn_i is negative.
        let diff_inverted = |s: i64, t: i64| match (s > 0, t > 0) {
            (true, true) => s > t,
            (true, false) => false,
            (false, true) => true,
            (false, false) => -s < -t,
        };
        let sum_inverted = |s: i64, t: i64| match (s > 0, t > 0) {
            (true, true) => false,
            (true, false) => s > -t,
            (false, true) => -s < t,
            (false, false) => true,
        };
        let n = vals.len();
        match rs_.type_letter {
            TypeLetter::A => {
                let mut inv = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if vals[i] > vals[j] {
                            inv += 1;
                        }
                    }
                }
                inv
            }
            TypeLetter::B | TypeLetter::C => {
                let mut l = 0;
                for i in 0..n {
                    if vals[i] < 0 {
                        l += 1;
                    }
                    for j in i + 1..n {
                        if diff_inverted(vals[i], vals[j]) {
                            l += 1;
                        }
                        if sum_inverted(vals[i], vals[j]) {
                            l += 1;
                        }
                    }
                }
                l
            }
            TypeLetter::D => {
                let mut l = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if diff_inverted(vals[i], vals[j]) {
                            l += 1;
                        }
                        if sum_inverted(vals[i], vals[j]) {
                            l += 1;
                        }
                    }
                }
                l
            }
            _ => panic!("classical types only"),
        }
    }

    #[test]
    fn length_matches_inversion_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for spec in ["A4", "B3", "C4", "D4"] {
            let r = rs(spec);
            for _ in 0..60 {
                let len = rng.gen_range(0..10);
                let word: Vec<usize> =
                    (0..len).map(|_| rng.gen_range(1..=r.rank)).collect();
                assert_eq!(
                    length(&r, &word).unwrap(),
                    inversion_length(&r, &word),
                    "{spec} {word:?}"
                );
            }
        }
    }

    #[test]
    fn reduced_iff_length_equals_wordlen() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let r = rs("B3");
        for _ in 0..120 {
            let len = rng.gen_range(0..9);
            let word: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=r.rank)).collect();
            assert_eq!(
                is_reduced(&r, &word).unwrap(),
                length(&r, &word).unwrap() == word.len(),
                "{word:?}"
            );
        }
    }

    #[test]
    fn minuscule_membership() {
        let a5 = rs("A5");
        assert!(is_minuscule_element(&a5, &[], 3, Variant::Minuscule).unwrap());
        assert!(is_minuscule_element(&a5, &[3, 1, 2, 5, 4, 3], 3, Variant::Minuscule).unwrap());
        // Non-reduced input is an error, not `false`.
        assert!(matches!(
            is_minuscule_element(&a5, &[1, 3, 1, 2, 5, 4, 3], 3, Variant::Minuscule),
            Err(Error::Input(_))
        ));
        // Non-(co)minuscule weight is an input error distinct from false.
        let c4 = rs("C4");
        assert!(matches!(
            is_minuscule_element(&c4, &[], 2, Variant::Minuscule),
            Err(Error::Input(_))
        ));
        assert!(is_minuscule_element(&c4, &[3, 4, 1, 2, 3, 4], 4, Variant::Cominuscule).unwrap());
    }

    #[test]
    fn enumerate_quotients() {
        let a2 = rs("A2");
        let elems = enumerate_minuscule(&a2, 1, Variant::Minuscule).unwrap();
        assert_eq!(elems, vec![vec![], vec![1], vec![2, 1]]);

        let a5 = rs("A5");
        let elems = enumerate_minuscule(&a5, 3, Variant::Minuscule).unwrap();
        assert_eq!(elems.len(), 20); // binomial(6,3)
        for w in &elems {
            assert!(is_reduced(&a5, w).unwrap());
            assert!(is_minuscule_element(&a5, w, 3, Variant::Minuscule).unwrap());
        }

        let c4 = rs("C4");
        let elems = enumerate_minuscule(&c4, 4, Variant::Cominuscule).unwrap();
        assert_eq!(elems.len(), 16); // 2^4 4! / 4!
    }

    #[test]
    fn reduced_word_sets() {
        let a2 = rs("A2");
        assert_eq!(
            all_reduced_words(&a2, &[1], DEFAULT_WORD_BOUND).unwrap(),
            BTreeSet::from([vec![1]])
        );
        assert_eq!(
            all_reduced_words(&a2, &[1, 2, 1], DEFAULT_WORD_BOUND).unwrap(),
            BTreeSet::from([vec![1, 2, 1], vec![2, 1, 2]])
        );
        let a5 = rs("A5");
        let words = all_reduced_words(&a5, &[3, 1, 2, 5, 4, 3], DEFAULT_WORD_BOUND).unwrap();
        assert!(words.contains(&vec![3, 1, 2, 5, 4, 3]));
        for w in &words {
            assert!(is_reduced(&a5, w).unwrap());
            assert_eq!(
                canonical_word(&a5, w).unwrap(),
                canonical_word(&a5, &[3, 1, 2, 5, 4, 3]).unwrap()
            );
        }
        // Resource bound.
        assert!(matches!(
            all_reduced_words(&a5, &[3, 1, 2, 5, 4, 3], 3),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn bruhat_subword_oracle() {
        let a2 = rs("A2");
        assert!(bruhat_leq(&a2, &[], &[1, 2]).unwrap());
        assert!(bruhat_leq(&a2, &[1], &[1, 2]).unwrap());
        assert!(!bruhat_leq(&a2, &[2, 1], &[1, 2]).unwrap());
        let a5 = rs("A5");
        assert!(bruhat_leq(&a5, &[3], &[3, 1, 2, 5, 4, 3]).unwrap());
    }

    #[test]
    fn bruhat_is_partial_order_on_small_quotient() {
        let a3 = rs("A3");
        let elems = enumerate_minuscule(&a3, 2, Variant::Minuscule).unwrap();
        for u in &elems {
            assert!(bruhat_leq(&a3, u, u).unwrap());
            for w in &elems {
                let uw = bruhat_leq(&a3, u, w).unwrap();
                let wu = bruhat_leq(&a3, w, u).unwrap();
                if uw && wu {
                    assert_eq!(u, w);
                }
                for v in &elems {
                    if uw && bruhat_leq(&a3, w, v).unwrap() {
                        assert!(bruhat_leq(&a3, u, v).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn word_strings() {
        assert_eq!(parse_word("3,1,2,5,4,3").unwrap(), vec![3, 1, 2, 5, 4, 3]);
        assert_eq!(parse_word("").unwrap(), Vec::<usize>::new());
        assert!(parse_word("3,x").is_err());
        assert_eq!(word_to_string(&[3, 1, 2]), "3,1,2");
    }
}
