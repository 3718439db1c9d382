//! Weyl group word calculus: canonical reduced words, the action on weights
//! and roots, lengths and inversions, longest elements of parabolic
//! subgroups, minimal coset representatives, Bruhat order, minimal translator
//! elements, and diagram automorphisms induced by `−w_{0,J}`.
//!
//! Elements are represented by the permutation they induce on the root list
//! (the action on the simple roots already determines the element; the full
//! permutation makes lengths and descent tests cheap). The stored word is
//! always the lexicographically least reduced word, obtained greedily from
//! left descents, so word equality and element equality coincide.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::rootsys::{weyl_group_order, RootSystem, Weight};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeylError {
    #[error("simple root a{} is short; only long roots are conjugate to the highest root", .0 + 1)]
    ShortRoot(usize),
    #[error("minimal translator for a{} is not unique at its length", .0 + 1)]
    DuplicateMinimal(usize),
    #[error("Weyl group order {order} exceeds enumeration budget {budget}")]
    BudgetExceeded { order: u128, budget: u128 },
    #[error("word is not reduced")]
    NotReduced,
}

/// Subset of simple-root indices (0-based) defining a standard parabolic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ParabolicSubset(pub Vec<usize>);

impl ParabolicSubset {
    pub fn new(mut indices: Vec<usize>) -> ParabolicSubset {
        indices.sort_unstable();
        indices.dedup();
        ParabolicSubset(indices)
    }

    pub fn empty() -> ParabolicSubset {
        ParabolicSubset(Vec::new())
    }

    pub fn full(rank: usize) -> ParabolicSubset {
        ParabolicSubset((0..rank).collect())
    }

    pub fn complement(&self, rank: usize) -> ParabolicSubset {
        ParabolicSubset((0..rank).filter(|i| !self.0.contains(i)).collect())
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Weyl group element with its canonical reduced word.
#[derive(Clone)]
pub struct WeylElement {
    rs: Arc<RootSystem>,
    word: Vec<usize>,
    perm: Vec<u32>,
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W[{self}]")
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        for (k, i) in self.word.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{}", i + 1)?;
        }
        Ok(())
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.perm == other.perm
            && self.rs.type_label == other.rs.type_label
            && self.rs.rank == other.rs.rank
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.perm.hash(state);
    }
}

fn identity_perm(rs: &RootSystem) -> Vec<u32> {
    (0..rs.num_roots() as u32).collect()
}

fn invert_perm(p: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; p.len()];
    for (i, &t) in p.iter().enumerate() {
        inv[t as usize] = i as u32;
    }
    inv
}

/// Length = number of positive roots sent to negatives.
fn inversion_count(rs: &RootSystem, perm: &[u32]) -> usize {
    (0..rs.num_positive())
        .filter(|&k| !rs.is_positive_root(perm[k] as usize))
        .count()
}

/// Greedy extraction of the lexicographically least reduced word: repeatedly
/// strip the smallest left descent.
fn canonical_word(rs: &RootSystem, perm: &[u32]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut pinv = invert_perm(&p);
    let mut word = Vec::new();
    loop {
        let descent = (0..rs.rank).find(|&i| {
            let si = rs.simple_root_index(i);
            !rs.is_positive_root(pinv[si] as usize)
        });
        let Some(i) = descent else { break };
        word.push(i);
        let refl = rs.simple_reflection_perm(i);
        for entry in p.iter_mut() {
            *entry = refl[*entry as usize];
        }
        let mut new_inv = vec![0u32; pinv.len()];
        for (b, slot) in new_inv.iter_mut().enumerate() {
            *slot = pinv[refl[b] as usize];
        }
        pinv = new_inv;
    }
    debug_assert!(p.iter().enumerate().all(|(i, &t)| i as u32 == t));
    word
}

impl WeylElement {
    pub fn identity(rs: &Arc<RootSystem>) -> WeylElement {
        WeylElement {
            rs: rs.clone(),
            word: Vec::new(),
            perm: identity_perm(rs),
        }
    }

    pub fn simple(rs: &Arc<RootSystem>, i: usize) -> WeylElement {
        WeylElement {
            rs: rs.clone(),
            word: vec![i],
            perm: rs.simple_reflection_perm(i).to_vec(),
        }
    }

    /// Canonical representative of the element `s_{i_1} ⋯ s_{i_k}` given by
    /// any (not necessarily reduced) word.
    pub fn from_word(rs: &Arc<RootSystem>, word: &[usize]) -> WeylElement {
        let mut perm = identity_perm(rs);
        for &i in word {
            assert!(i < rs.rank, "letter out of range");
            let refl = rs.simple_reflection_perm(i);
            // Right multiplication: (w s_i)(β) = w(s_i(β)).
            let mut next = vec![0u32; perm.len()];
            for (b, slot) in next.iter_mut().enumerate() {
                *slot = perm[refl[b] as usize];
            }
            perm = next;
        }
        WeylElement::from_perm(rs, perm)
    }

    fn from_perm(rs: &Arc<RootSystem>, perm: Vec<u32>) -> WeylElement {
        let word = canonical_word(rs, &perm);
        debug_assert_eq!(word.len(), inversion_count(rs, &perm));
        WeylElement {
            rs: rs.clone(),
            word,
            perm,
        }
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    /// Canonical (lexicographically least) reduced word, 0-based letters.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Image of the root with the given index.
    pub fn act_root(&self, idx: usize) -> usize {
        self.perm[idx] as usize
    }

    /// Action on a weight, applying the reflections of the word right to
    /// left; satisfies `act(uv, μ) = act(u, act(v, μ))`.
    pub fn act(&self, mu: &Weight) -> Weight {
        let mut m = mu.clone();
        for &i in self.word.iter().rev() {
            m = self.rs.simple_reflect_weight(i, &m);
        }
        m
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement::from_perm(&self.rs, invert_perm(&self.perm))
    }

    /// Group product `self · other`.
    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        let mut perm = vec![0u32; self.perm.len()];
        for (b, slot) in perm.iter_mut().enumerate() {
            *slot = self.perm[other.perm[b] as usize];
        }
        WeylElement::from_perm(&self.rs, perm)
    }

    /// `ℓ(s_i w) < ℓ(w)`, i.e. `w⁻¹(α_i) < 0`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let si = self.rs.simple_root_index(i);
        let preimage = self.perm.iter().position(|&t| t as usize == si).unwrap();
        !self.rs.is_positive_root(preimage)
    }

    /// `ℓ(w s_i) < ℓ(w)`, i.e. `w(α_i) < 0`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let si = self.rs.simple_root_index(i);
        !self.rs.is_positive_root(self.perm[si] as usize)
    }

    /// Inversion set: positive roots sent to negatives.
    pub fn inversions(&self) -> Vec<usize> {
        (0..self.rs.num_positive())
            .filter(|&k| !self.rs.is_positive_root(self.perm[k] as usize))
            .collect()
    }

    /// Key identifying the element: images of the simple roots.
    fn fingerprint(&self) -> Vec<u32> {
        (0..self.rs.rank)
            .map(|i| self.perm[self.rs.simple_root_index(i)])
            .collect()
    }
}

/// The canonical reduced form of a word; `Err(NotReduced)` when the word is
/// longer than the element it spells.
pub fn canonicalize(rs: &Arc<RootSystem>, word: &[usize]) -> WeylElement {
    WeylElement::from_word(rs, word)
}

pub fn check_reduced(rs: &Arc<RootSystem>, word: &[usize]) -> Result<WeylElement, WeylError> {
    let w = WeylElement::from_word(rs, word);
    if w.len() == word.len() {
        Ok(w)
    } else {
        Err(WeylError::NotReduced)
    }
}

/// Longest element `w_{0,J}` of the standard parabolic subgroup `W_J`.
pub fn longest_element(rs: &Arc<RootSystem>, j: &ParabolicSubset) -> WeylElement {
    let mut w = WeylElement::identity(rs);
    loop {
        let Some(i) = j.iter().find(|&i| !w.has_right_descent(i)) else {
            return w;
        };
        w = w.mul(&WeylElement::simple(rs, i));
    }
}

/// The unique minimal-length element of `w·W_J`; sends every `α_j`, `j ∈ J`,
/// to a positive root. Idempotent.
pub fn min_coset_rep(w: &WeylElement, j: &ParabolicSubset) -> WeylElement {
    let rs = w.root_system().clone();
    let mut u = w.clone();
    loop {
        let Some(i) = j.iter().find(|&i| u.has_right_descent(i)) else {
            return u;
        };
        u = u.mul(&WeylElement::simple(&rs, i));
    }
}

/// Bruhat order by the memoizable descent recursion:
/// with `s` a left descent of `w`, `u ≤ w` iff (`su < u` ⟹ `su ≤ sw`) else
/// `u ≤ sw`.
pub fn bruhat_leq(u: &WeylElement, w: &WeylElement) -> bool {
    if u.len() > w.len() {
        return false;
    }
    if u.is_identity() {
        return true;
    }
    let rs = u.root_system().clone();
    let i = (0..rs.rank)
        .find(|&i| w.has_left_descent(i))
        .expect("w != e has a descent");
    let s = WeylElement::simple(&rs, i);
    let sw = s.mul(w);
    if u.has_left_descent(i) {
        bruhat_leq(&s.mul(u), &sw)
    } else {
        bruhat_leq(u, &sw)
    }
}

/// Minimal translators of the highest root: `u` is the shortest element with
/// `u⁻¹(α_0) = α_i` and `v` the shortest with `v⁻¹(α_0) = −α_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Translators {
    pub u: WeylElement,
    pub v: WeylElement,
}

const SEARCH_NODE_CAP: u64 = 5_000_000;

/// Breadth-first search over the Weyl group by word length. The uniqueness of
/// the minimal element at its level is asserted; a duplicate would falsify
/// the translator uniqueness statement.
pub fn find_v_alpha(rs: &Arc<RootSystem>, i: usize) -> Result<Translators, WeylError> {
    use crate::rootsys::LengthClass;
    if rs.root(rs.simple_root_index(i)).length_class == LengthClass::Short {
        return Err(WeylError::ShortRoot(i));
    }
    let si = rs.simple_root_index(i);
    let target_u = rs.highest_root_index();
    let target_v = rs.negate(target_u);

    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut level: Vec<WeylElement> = vec![WeylElement::identity(rs)];
    seen.insert(level[0].fingerprint());
    let mut found_u: Option<WeylElement> = None;
    let mut found_v: Option<WeylElement> = None;
    let mut visited: u64 = 0;

    while !level.is_empty() {
        let mut hits_u = Vec::new();
        let mut hits_v = Vec::new();
        for w in &level {
            // w⁻¹(α_0) = ±α_i ⟺ w(±α_i) = α_0 ⟺ w(α_i) = ±α_0.
            if w.act_root(si) == target_u {
                hits_u.push(w.clone());
            }
            if w.act_root(si) == target_v {
                hits_v.push(w.clone());
            }
        }
        if found_u.is_none() && !hits_u.is_empty() {
            if hits_u.len() > 1 {
                return Err(WeylError::DuplicateMinimal(i));
            }
            found_u = Some(hits_u.pop().unwrap());
        }
        if found_v.is_none() && !hits_v.is_empty() {
            if hits_v.len() > 1 {
                return Err(WeylError::DuplicateMinimal(i));
            }
            found_v = Some(hits_v.pop().unwrap());
        }
        if let (Some(u), Some(v)) = (&found_u, &found_v) {
            // One extra reflection separates the two translators:
            // (u s_α)⁻¹(α_0) = s_α(α) = −α, and the lengths are g−2, g−1.
            let s = WeylElement::simple(rs, i);
            assert_eq!(*v, u.mul(&s), "translator factorization v_α = u_α·s_α");
            assert_eq!(u.len() + 1, v.len());
            assert_eq!(u.len() as i64, rs.dual_coxeter_number() - 2);
            return Ok(Translators {
                u: u.clone(),
                v: v.clone(),
            });
        }
        let mut next = Vec::new();
        for w in &level {
            for k in 0..rs.rank {
                if w.has_right_descent(k) {
                    continue;
                }
                let longer = w.mul(&WeylElement::simple(rs, k));
                visited += 1;
                if visited > SEARCH_NODE_CAP {
                    return Err(WeylError::BudgetExceeded {
                        order: weyl_group_order(rs.type_label, rs.rank),
                        budget: SEARCH_NODE_CAP as u128,
                    });
                }
                if seen.insert(longer.fingerprint()) {
                    next.push(longer);
                }
            }
        }
        level = next;
    }
    unreachable!("the highest-root orbit always meets ±α_i for long α_i")
}

/// `τ(α_j) = −w_{0,J}(α_j)`: the diagram automorphism of `J`.
pub fn diagram_automorphism(rs: &Arc<RootSystem>, j: &ParabolicSubset) -> HashMap<usize, usize> {
    let w0j = longest_element(rs, j);
    let mut map = HashMap::new();
    for idx in j.iter() {
        let image = rs.negate(w0j.act_root(rs.simple_root_index(idx)));
        let root = rs.root(image);
        assert_eq!(
            root.height, 1,
            "−w_{{0,J}} must send simple roots of J to simple roots"
        );
        let target = root.alpha.iter().position(|&k| k == 1).unwrap();
        assert!(j.contains(target));
        map.insert(idx, target);
    }
    // The map must preserve the Cartan submatrix on J.
    for a in j.iter() {
        for b in j.iter() {
            assert_eq!(rs.cartan[a][b], rs.cartan[map[&a]][map[&b]]);
        }
    }
    map
}

/// All elements of the Weyl group in length order (breadth-first), each once.
pub fn enumerate_w(rs: &Arc<RootSystem>, budget: u128) -> Result<Vec<WeylElement>, WeylError> {
    let order = weyl_group_order(rs.type_label, rs.rank);
    if order > budget {
        return Err(WeylError::BudgetExceeded { order, budget });
    }
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut out = Vec::with_capacity(order as usize);
    let mut level = vec![WeylElement::identity(rs)];
    seen.insert(level[0].fingerprint());
    while !level.is_empty() {
        level.sort_by(|a, b| a.word.cmp(&b.word));
        let mut next = Vec::new();
        for w in &level {
            for k in 0..rs.rank {
                if w.has_right_descent(k) {
                    continue;
                }
                let longer = w.mul(&WeylElement::simple(rs, k));
                if seen.insert(longer.fingerprint()) {
                    next.push(longer);
                }
            }
        }
        out.append(&mut level);
        level = next;
    }
    debug_assert_eq!(out.len() as u128, order);
    Ok(out)
}

/// Minimal coset representatives `W^J`, in length order, each exactly once.
pub fn enumerate_wj(
    rs: &Arc<RootSystem>,
    j: &ParabolicSubset,
    budget: u128,
) -> Result<Vec<WeylElement>, WeylError> {
    let all = enumerate_w(rs, budget)?;
    Ok(all
        .into_iter()
        .filter(|w| j.iter().all(|idx| !w.has_right_descent(idx)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::TypeLabel;

    fn sys(label: TypeLabel, rank: usize) -> Arc<RootSystem> {
        Arc::new(RootSystem::build(label, rank).unwrap())
    }

    /// 1-based helper so tests read like written reduced words.
    fn w1(rs: &Arc<RootSystem>, word: &[usize]) -> WeylElement {
        let shifted: Vec<usize> = word.iter().map(|&i| i - 1).collect();
        WeylElement::from_word(rs, &shifted)
    }

    fn weight_of_alpha(rs: &RootSystem, alpha: &[i64]) -> Weight {
        let idx = rs.root_index(alpha).unwrap();
        rs.root(idx).omega.clone()
    }

    #[test]
    fn square_of_generator_is_identity() {
        let rs = sys(TypeLabel::A, 2);
        assert!(WeylElement::from_word(&rs, &[0, 0]).is_identity());
    }

    #[test]
    fn braid_relation_canonicalizes() {
        let rs = sys(TypeLabel::A, 2);
        let a = w1(&rs, &[1, 2, 1]);
        let b = w1(&rs, &[2, 1, 2]);
        assert_eq!(a, b);
        assert_eq!(a.word(), b.word());
        assert_eq!(a.len(), 3);
    }

    #[test]
    fn b2_longest_element_has_length_four() {
        let rs = sys(TypeLabel::B, 2);
        let w = w1(&rs, &[1, 2, 1, 2]);
        assert_eq!(w.len(), 4);
        assert_eq!(w.len(), w.inversions().len());
        assert_eq!(w, longest_element(&rs, &ParabolicSubset::full(2)));
    }

    #[test]
    fn act_is_homomorphic() {
        let rs = sys(TypeLabel::B, 3);
        let u = w1(&rs, &[1, 2]);
        let v = w1(&rs, &[3, 2, 1]);
        let uv = u.mul(&v);
        let mu = Weight(vec![1, -1, 2]);
        assert_eq!(uv.act(&mu), u.act(&v.act(&mu)));
        assert_eq!(WeylElement::identity(&rs).act(&mu), mu);
    }

    #[test]
    fn g2_simple_reflection_action() {
        let rs = sys(TypeLabel::G, 2);
        let s1 = w1(&rs, &[1]);
        let alpha2 = rs.simple_root_weight(1);
        let image = s1.act(&alpha2);
        assert_eq!(image, weight_of_alpha(&rs, &[3, 1]));
        // α_2 + 3α_1 = α_0 − α_2.
        let a0 = rs.highest_root().omega.clone();
        assert_eq!(image, &a0 - &alpha2);
    }

    #[test]
    fn f4_translator_inverse_sends_highest_to_minus_alpha2() {
        let rs = sys(TypeLabel::F, 4);
        let v2 = w1(&rs, &[1, 2, 3, 2, 4, 3, 1, 2]);
        assert_eq!(v2.len(), 8);
        let vi = v2.inverse();
        let image = vi.act_root(rs.highest_root_index());
        assert_eq!(image, rs.negate(rs.simple_root_index(1)));
    }

    #[test]
    fn bn_translator_sends_alpha_n_to_full_support_root() {
        for n in [2usize, 3, 4, 5] {
            let rs = sys(TypeLabel::B, n);
            let mut letters: Vec<usize> = (2..=n).collect();
            letters.extend(1..=n - 1);
            let v = w1(&rs, &letters);
            let expect = weight_of_alpha(&rs, &vec![1; n]);
            assert_eq!(v.act(&rs.simple_root_weight(n - 1)), expect, "B{n}");
        }
    }

    #[test]
    fn longest_element_examples() {
        let g2 = sys(TypeLabel::G, 2);
        assert_eq!(
            longest_element(&g2, &ParabolicSubset::new(vec![0])),
            w1(&g2, &[1])
        );
        assert!(longest_element(&g2, &ParabolicSubset::empty()).is_identity());

        let f4 = sys(TypeLabel::F, 4);
        let w = longest_element(&f4, &ParabolicSubset::new(vec![1, 2, 3]));
        assert_eq!(w.len(), 9);
        for i in [1, 2, 3] {
            assert!(w.has_right_descent(i));
        }
    }

    #[test]
    fn min_coset_rep_examples() {
        let b3 = sys(TypeLabel::B, 3);
        let full = ParabolicSubset::full(3);
        let w0 = longest_element(&b3, &full);
        assert!(min_coset_rep(&w0, &full).is_identity());

        let j3 = ParabolicSubset::new(vec![2]);
        let rep = min_coset_rep(&w0, &j3);
        assert_eq!(rep.len(), 8);
        assert_eq!(rep, min_coset_rep(&rep, &j3));

        // Elements of W_J reduce to the identity.
        let inside = w1(&b3, &[3]);
        assert!(min_coset_rep(&inside, &j3).is_identity());
    }

    /// Subword oracle for the Bruhat order on a small group.
    fn bruhat_oracle(u: &WeylElement, w: &WeylElement) -> bool {
        fn is_subword(needle: &[usize], hay: &[usize]) -> bool {
            let mut it = hay.iter();
            needle.iter().all(|n| it.any(|h| h == n))
        }
        // Any single reduced word of w suffices for the subword property as
        // long as we test all reduced words of u; do the converse instead:
        // enumerate reduced words of w and test u's canonical word... the
        // subword property needs one reduced word of w containing SOME
        // reduced word of u. Enumerate all reduced words of both.
        fn reduced_words(w: &WeylElement) -> Vec<Vec<usize>> {
            if w.is_identity() {
                return vec![Vec::new()];
            }
            let rs = w.root_system().clone();
            let mut out = Vec::new();
            for i in 0..rs.rank {
                if w.has_left_descent(i) {
                    let rest = WeylElement::simple(&rs, i).mul(w);
                    for mut tail in reduced_words(&rest) {
                        let mut word = vec![i];
                        word.append(&mut tail);
                        out.push(word);
                    }
                }
            }
            out
        }
        let uw = reduced_words(u);
        reduced_words(w)
            .iter()
            .any(|hay| uw.iter().any(|needle| is_subword(needle, hay)))
    }

    #[test]
    fn bruhat_matches_subword_oracle_on_a2_and_b2() {
        for (label, rank) in [(TypeLabel::A, 2), (TypeLabel::B, 2)] {
            let rs = sys(label, rank);
            let all = enumerate_w(&rs, 1 << 20).unwrap();
            for u in &all {
                for w in &all {
                    assert_eq!(
                        bruhat_leq(u, w),
                        bruhat_oracle(u, w),
                        "{label}{rank}: {u} vs {w}"
                    );
                }
            }
        }
    }

    #[test]
    fn bruhat_basics() {
        let rs = sys(TypeLabel::A, 2);
        let e = WeylElement::identity(&rs);
        let s1 = w1(&rs, &[1]);
        let s2 = w1(&rs, &[2]);
        let s21 = w1(&rs, &[2, 1]);
        assert!(bruhat_leq(&e, &s21));
        assert!(bruhat_leq(&s21, &s21));
        assert!(bruhat_leq(&s1, &s21));
        assert!(!bruhat_leq(&s2, &s1));
    }

    #[test]
    fn translators_found_by_bfs() {
        let g2 = sys(TypeLabel::G, 2);
        let t = find_v_alpha(&g2, 1).unwrap();
        assert_eq!(t.v, w1(&g2, &[2, 1, 2]));
        assert_eq!(t.v.len(), 3);
        assert_eq!(t.u.len(), 2);
        assert_eq!(find_v_alpha(&g2, 0).unwrap_err(), WeylError::ShortRoot(0));

        let f4 = sys(TypeLabel::F, 4);
        let t = find_v_alpha(&f4, 1).unwrap();
        assert_eq!(t.v, w1(&f4, &[1, 2, 3, 2, 4, 3, 1, 2]));
        assert_eq!(t.v.len(), 8);

        let b4 = sys(TypeLabel::B, 4);
        let t = find_v_alpha(&b4, 2).unwrap();
        assert_eq!(t.v, w1(&b4, &[2, 3, 4, 1, 2, 3]));
        assert_eq!(t.v.len(), 6);

        let c4 = sys(TypeLabel::C, 4);
        let t = find_v_alpha(&c4, 3).unwrap();
        assert_eq!(t.v, w1(&c4, &[1, 2, 3, 4]));
    }

    #[test]
    fn translator_factorization() {
        // v_α = u_α s_α and ℓ(u_α) = g − 2 for long simple roots.
        for (label, rank) in [
            (TypeLabel::B, 3),
            (TypeLabel::C, 3),
            (TypeLabel::F, 4),
            (TypeLabel::G, 2),
            (TypeLabel::A, 3),
            (TypeLabel::D, 4),
        ] {
            let rs = sys(label, rank);
            let g = rs.dual_coxeter_number();
            for i in 0..rank {
                let Ok(t) = find_v_alpha(&rs, i) else {
                    continue;
                };
                assert_eq!(t.u.len() as i64, g - 2, "{label}{rank} i={i}");
                assert_eq!(t.v.len() as i64, g - 1);
                assert_eq!(t.u.mul(&WeylElement::simple(&rs, i)), t.v);
                // v⁻¹(α_0) = −α_i and u⁻¹(α_0) = α_i.
                let a0 = rs.highest_root_index();
                let ai = rs.simple_root_index(i);
                assert_eq!(t.v.inverse().act_root(a0), rs.negate(ai));
                assert_eq!(t.u.inverse().act_root(a0), ai);
            }
        }
    }

    #[test]
    fn diagram_automorphism_cases() {
        // Non-simply-laced full S: identity.
        for (label, rank) in [
            (TypeLabel::B, 4),
            (TypeLabel::C, 3),
            (TypeLabel::F, 4),
            (TypeLabel::G, 2),
        ] {
            let rs = sys(label, rank);
            let tau = diagram_automorphism(&rs, &ParabolicSubset::full(rank));
            for i in 0..rank {
                assert_eq!(tau[&i], i, "{label}{rank}");
            }
        }
        // A_2 subdiagram inside B_3 (α_1, α_2 are a long simply-laced pair).
        let b3 = sys(TypeLabel::B, 3);
        let tau = diagram_automorphism(&b3, &ParabolicSubset::new(vec![0, 1]));
        assert_eq!(tau[&0], 1);
        assert_eq!(tau[&1], 0);
        // Singletons are fixed.
        let tau = diagram_automorphism(&b3, &ParabolicSubset::new(vec![2]));
        assert_eq!(tau[&2], 2);
    }

    #[test]
    fn enumeration_counts() {
        let g2 = sys(TypeLabel::G, 2);
        assert_eq!(
            enumerate_wj(&g2, &ParabolicSubset::empty(), 1 << 20)
                .unwrap()
                .len(),
            12
        );
        assert_eq!(
            enumerate_wj(&g2, &ParabolicSubset::full(2), 1 << 20).unwrap(),
            vec![WeylElement::identity(&g2)]
        );

        let f4 = sys(TypeLabel::F, 4);
        let all = enumerate_wj(&f4, &ParabolicSubset::empty(), 1 << 20).unwrap();
        assert_eq!(all.len(), 1152);
        // Length order and ℓ = |inversions| along the way.
        for pair in all.windows(2) {
            assert!(pair[0].len() <= pair[1].len());
        }
        for w in all.iter().step_by(37) {
            assert_eq!(w.len(), w.inversions().len());
        }
    }

    #[test]
    fn enumeration_budget_refuses_e8() {
        let e8 = sys(TypeLabel::E, 8);
        match enumerate_w(&e8, 1_000_000) {
            Err(WeylError::BudgetExceeded { order, .. }) => {
                assert_eq!(order, 696_729_600);
            }
            other => panic!("expected budget refusal, got {:?}", other.map(|v| v.len())),
        }
    }

    #[test]
    fn coset_representatives_multiply_back() {
        let b3 = sys(TypeLabel::B, 3);
        let j = ParabolicSubset::new(vec![0, 2]);
        let reps = enumerate_wj(&b3, &j, 1 << 20).unwrap();
        // |W^J| · |W_J| = |W|.
        assert_eq!(reps.len() * 4, 48);
        for w in &reps {
            assert_eq!(&min_coset_rep(w, &j), w);
        }
    }
}
