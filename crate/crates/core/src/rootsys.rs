//! Finite root systems of all simple types with exact integer data.
//!
//! Conventions:
//! * Simple roots are numbered in Bourbaki order (0-based in code, 1-based in
//!   display): for `B_n` the short root is `α_n`, for `C_n` the long root is
//!   `α_n`, for `F_4` the long roots are `α_1, α_2`, for `G_2` the short root
//!   is `α_1`.
//! * The Cartan matrix is stored as `cartan[i][j] = ⟨α_j, α_i∨⟩`, so the
//!   fundamental-weight coordinates of a root are the Cartan transform of its
//!   simple-root coordinates.
//! * Roots are listed positives first (sorted by height, then by simple-root
//!   coordinates), then the negatives in the mirrored order, so index
//!   arithmetic `i ↔ i ± n_pos` realizes negation.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Simple type letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLabel {
    pub fn parse(s: &str) -> Option<TypeLabel> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Some(TypeLabel::A),
            "B" => Some(TypeLabel::B),
            "C" => Some(TypeLabel::C),
            "D" => Some(TypeLabel::D),
            "E" => Some(TypeLabel::E),
            "F" => Some(TypeLabel::F),
            "G" => Some(TypeLabel::G),
            _ => None,
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            TypeLabel::A => 'A',
            TypeLabel::B => 'B',
            TypeLabel::C => 'C',
            TypeLabel::D => 'D',
            TypeLabel::E => 'E',
            TypeLabel::F => 'F',
            TypeLabel::G => 'G',
        };
        write!(f, "{c}")
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("no simple root system of type {label}{rank}")]
    InvalidType { label: TypeLabel, rank: usize },
}

/// Integral weight in the fundamental-weight basis: coordinate `i` is the
/// pairing with the simple coroot `α_i∨`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Weight {
        Weight(vec![0; rank])
    }

    /// Fundamental weight `ω_i` (0-based `i`).
    pub fn fundamental(rank: usize, i: usize) -> Weight {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LengthClass {
    Long,
    Short,
}

/// A root stored in both coordinate systems.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    /// Coefficients over the simple roots.
    pub alpha: Vec<i64>,
    /// Fundamental-weight coordinates (Cartan transform of `alpha`).
    pub omega: Weight,
    /// Sum of the `alpha` coefficients.
    pub height: i64,
    pub length_class: LengthClass,
}

impl Root {
    pub fn is_positive(&self) -> bool {
        self.height > 0
    }

    /// Simple roots in the support (indices with nonzero coefficient).
    pub fn support(&self) -> Vec<usize> {
        self.alpha
            .iter()
            .enumerate()
            .filter(|(_, &k)| k != 0)
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &k) in self.alpha.iter().enumerate() {
            if k == 0 {
                continue;
            }
            if first {
                if k < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                f.write_str(if k < 0 { "-" } else { "+" })?;
            }
            let a = k.abs();
            if a != 1 {
                write!(f, "{a}")?;
            }
            write!(f, "a{}", i + 1)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Complete root system of a simple type, closed under negation.
#[derive(Debug)]
pub struct RootSystem {
    pub type_label: TypeLabel,
    pub rank: usize,
    /// `cartan[i][j] = ⟨α_j, α_i∨⟩`.
    pub cartan: Vec<Vec<i64>>,
    /// Relative squared lengths of the simple roots (short roots get 2).
    norm2_simple: Vec<i64>,
    roots: Vec<Root>,
    n_pos: usize,
    /// Coefficients of each `β∨` over the simple coroots, per root index.
    coroot_table: Vec<Vec<i64>>,
    norm2: Vec<i64>,
    index_of: HashMap<Vec<i64>, usize>,
    /// Permutation of root indices induced by each simple reflection.
    refl: Vec<Vec<u32>>,
    highest: usize,
    highest_short: Option<usize>,
}

impl RootSystem {
    /// Builds the root system by closing the simple roots under simple
    /// reflections, tracking coroots alongside.
    pub fn build(type_label: TypeLabel, rank: usize) -> Result<RootSystem, RootSystemError> {
        let cartan = cartan_matrix(type_label, rank).ok_or(RootSystemError::InvalidType {
            label: type_label,
            rank,
        })?;
        let norm2_simple = simple_norms(&cartan);

        // Closure under simple reflections; alpha and coroot coordinates are
        // reflected in tandem so no inner product is ever evaluated.
        let mut seen: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..rank {
            let mut a = vec![0i64; rank];
            a[i] = 1;
            let mut c = vec![0i64; rank];
            c[i] = 1;
            seen.insert(a.clone(), c);
            queue.push(a);
        }
        while let Some(a) = queue.pop() {
            let c = seen[&a].clone();
            for i in 0..rank {
                let pa: i64 = (0..rank).map(|j| cartan[i][j] * a[j]).sum();
                let mut a2 = a.clone();
                a2[i] -= pa;
                if seen.contains_key(&a2) {
                    continue;
                }
                // s_i on the coroot lattice: c ↦ c − ⟨α_i, Σ c_j α_j∨⟩ e_i.
                let pc: i64 = (0..rank).map(|j| c[j] * cartan[j][i]).sum();
                let mut c2 = c.clone();
                c2[i] -= pc;
                seen.insert(a2.clone(), c2);
                queue.push(a2);
            }
        }

        let mut positives: Vec<Vec<i64>> = seen
            .keys()
            .filter(|a| a.iter().all(|&k| k >= 0))
            .cloned()
            .collect();
        positives.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let n_pos = positives.len();

        let mut alphas: Vec<Vec<i64>> = positives;
        for k in 0..n_pos {
            let neg: Vec<i64> = alphas[k].iter().map(|x| -x).collect();
            alphas.push(neg);
        }

        let mut roots = Vec::with_capacity(2 * n_pos);
        let mut coroot_table = Vec::with_capacity(2 * n_pos);
        let mut norm2 = Vec::with_capacity(2 * n_pos);
        let mut index_of = HashMap::with_capacity(2 * n_pos);
        let d_long = *norm2_simple.iter().max().unwrap();
        for (idx, a) in alphas.iter().enumerate() {
            let omega = Weight(
                (0..rank)
                    .map(|i| (0..rank).map(|j| cartan[i][j] * a[j]).sum())
                    .collect(),
            );
            let height: i64 = a.iter().sum();
            let n2 = root_norm2(&cartan, &norm2_simple, a);
            let length_class = if n2 == d_long {
                LengthClass::Long
            } else {
                LengthClass::Short
            };
            let coroot = seen[a].clone();
            // Cross-check the tracked coroot against β∨ = 2β/(β,β).
            for i in 0..rank {
                debug_assert_eq!(coroot[i] * n2, a[i] * norm2_simple[i]);
            }
            roots.push(Root {
                alpha: a.clone(),
                omega,
                height,
                length_class,
            });
            coroot_table.push(coroot);
            norm2.push(n2);
            index_of.insert(a.clone(), idx);
        }

        let mut refl = Vec::with_capacity(rank);
        for i in 0..rank {
            let mut perm = vec![0u32; 2 * n_pos];
            for (idx, r) in roots.iter().enumerate() {
                let p = r.omega.0[i];
                let mut a2 = r.alpha.clone();
                a2[i] -= p;
                perm[idx] = index_of[&a2] as u32;
            }
            refl.push(perm);
        }

        let highest = (0..n_pos)
            .max_by_key(|&k| (roots[k].height, std::cmp::Reverse(roots[k].alpha.clone())))
            .unwrap();
        let highest_short = if norm2_simple.iter().all(|&d| d == d_long) {
            None
        } else {
            let k = (0..n_pos)
                .filter(|&k| roots[k].length_class == LengthClass::Short)
                .max_by_key(|&k| roots[k].height)
                .unwrap();
            Some(k)
        };

        let rs = RootSystem {
            type_label,
            rank,
            cartan,
            norm2_simple,
            roots,
            n_pos,
            coroot_table,
            norm2,
            index_of,
            refl,
            highest,
            highest_short,
        };
        debug_assert_eq!(rs.n_pos, expected_positive_count(type_label, rank));
        Ok(rs)
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.roots[idx]
    }

    pub fn is_positive_root(&self, idx: usize) -> bool {
        idx < self.n_pos
    }

    /// Index of `−β`.
    pub fn negate(&self, idx: usize) -> usize {
        if idx < self.n_pos {
            idx + self.n_pos
        } else {
            idx - self.n_pos
        }
    }

    /// Index of the simple root `α_i` in the root list.
    pub fn simple_root_index(&self, i: usize) -> usize {
        let mut a = vec![0i64; self.rank];
        a[i] = 1;
        self.index_of[&a]
    }

    pub fn root_index(&self, alpha: &[i64]) -> Option<usize> {
        self.index_of.get(alpha).copied()
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.highest]
    }

    pub fn highest_root_index(&self) -> usize {
        self.highest
    }

    pub fn highest_short_root(&self) -> Option<&Root> {
        self.highest_short.map(|k| &self.roots[k])
    }

    /// Permutation of the root list under `s_i`.
    pub fn simple_reflection_perm(&self, i: usize) -> &[u32] {
        &self.refl[i]
    }

    /// `(β, β)` in the normalization where short simple roots have length
    /// squared 2.
    pub fn root_norm2(&self, idx: usize) -> i64 {
        self.norm2[idx]
    }

    pub fn simple_norm2(&self, i: usize) -> i64 {
        self.norm2_simple[i]
    }

    pub fn is_simply_laced(&self) -> bool {
        self.highest_short.is_none()
    }

    /// Coefficients of `β∨` over the simple coroots.
    pub fn coroot(&self, idx: usize) -> &[i64] {
        &self.coroot_table[idx]
    }

    /// `⟨μ, β∨⟩` via coroot-table expansion; bilinear in `μ`.
    pub fn pairing(&self, mu: &Weight, root_idx: usize) -> i64 {
        self.coroot_table[root_idx]
            .iter()
            .zip(&mu.0)
            .map(|(c, m)| c * m)
            .sum()
    }

    /// `s_i(μ) = μ − ⟨μ, α_i∨⟩ α_i` on weights.
    pub fn simple_reflect_weight(&self, i: usize, mu: &Weight) -> Weight {
        let p = mu.0[i];
        Weight(
            (0..self.rank)
                .map(|k| mu.0[k] - p * self.cartan[k][i])
                .collect(),
        )
    }

    /// `α_i` as a weight (the `i`-th column of the Cartan matrix).
    pub fn simple_root_weight(&self, i: usize) -> Weight {
        Weight((0..self.rank).map(|k| self.cartan[k][i]).collect())
    }

    /// Simple roots whose coefficient in the highest root is 1.
    pub fn co_minuscule_roots(&self) -> Vec<usize> {
        let c = &self.roots[self.highest].alpha;
        (0..self.rank).filter(|&i| c[i] == 1).collect()
    }

    /// Indices `i` with `⟨ω_i, β∨⟩ ≤ 1` for every positive root `β`.
    pub fn minuscule_weights(&self) -> Vec<usize> {
        (0..self.rank)
            .filter(|&i| {
                let w = Weight::fundamental(self.rank, i);
                (0..self.n_pos).all(|b| self.pairing(&w, b) <= 1)
            })
            .collect()
    }

    /// Dual Coxeter number `g = 1 + Σ č_i` with
    /// `č_i = (α_i,α_i)/(α_0,α_0) · c_i`.
    pub fn dual_coxeter_number(&self) -> i64 {
        let c = &self.roots[self.highest].alpha;
        let d0 = self.norm2[self.highest];
        let num: i64 = (0..self.rank).map(|i| c[i] * self.norm2_simple[i]).sum();
        assert_eq!(num % d0, 0, "dual Coxeter sum must be integral");
        1 + num / d0
    }
}

/// `(β, β)` from the symmetrized Cartan data, exact integers.
fn root_norm2(cartan: &[Vec<i64>], norm2_simple: &[i64], alpha: &[i64]) -> i64 {
    let rank = alpha.len();
    let mut twice = 0i64;
    for i in 0..rank {
        for j in 0..rank {
            twice += alpha[i] * alpha[j] * norm2_simple[i] * cartan[i][j];
        }
    }
    assert_eq!(twice % 2, 0);
    twice / 2
}

/// Relative squared lengths of simple roots, inferred from Cartan-matrix
/// asymmetry only (never from a metric); normalized so short roots get 2.
fn simple_norms(cartan: &[Vec<i64>]) -> Vec<i64> {
    let rank = cartan.len();
    // Propagate d_j = d_i · a_ij / a_ji along the Dynkin graph.
    let mut d = vec![0i64; rank];
    d[0] = 12;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..rank {
            if j == i || cartan[i][j] == 0 || d[j] != 0 {
                continue;
            }
            let num = d[i] * cartan[i][j];
            assert_eq!(num % cartan[j][i], 0);
            d[j] = num / cartan[j][i];
            stack.push(j);
        }
    }
    let g = d.iter().fold(0i64, |acc, &x| gcd(acc, x.abs()));
    for x in d.iter_mut() {
        *x /= g;
    }
    let min = *d.iter().min().unwrap();
    if min == 1 {
        for x in d.iter_mut() {
            *x *= 2;
        }
    }
    d
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn expected_positive_count(label: TypeLabel, n: usize) -> usize {
    match label {
        TypeLabel::A => n * (n + 1) / 2,
        TypeLabel::B | TypeLabel::C => n * n,
        TypeLabel::D => n * (n - 1),
        TypeLabel::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        TypeLabel::F => 24,
        TypeLabel::G => 6,
    }
}

/// Order of the Weyl group, for enumeration budgets.
pub fn weyl_group_order(label: TypeLabel, n: usize) -> u128 {
    fn fact(k: usize) -> u128 {
        (1..=k as u128).product()
    }
    match label {
        TypeLabel::A => fact(n + 1),
        TypeLabel::B | TypeLabel::C => (1u128 << n) * fact(n),
        TypeLabel::D => (1u128 << (n - 1)) * fact(n),
        TypeLabel::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        TypeLabel::F => 1152,
        TypeLabel::G => 12,
    }
}

/// Bourbaki Cartan matrix with entries `⟨α_j, α_i∨⟩` at `[i][j]`, or `None`
/// for an invalid (type, rank) combination.
fn cartan_matrix(label: TypeLabel, n: usize) -> Option<Vec<Vec<i64>>> {
    let valid = match label {
        TypeLabel::A => n >= 1,
        TypeLabel::B => n >= 2,
        TypeLabel::C => n >= 3,
        TypeLabel::D => n >= 4,
        TypeLabel::E => (6..=8).contains(&n),
        TypeLabel::F => n == 4,
        TypeLabel::G => n == 2,
    };
    if !valid {
        return None;
    }
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let edge = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match label {
        TypeLabel::A => {
            for i in 0..n - 1 {
                edge(&mut a, i, i + 1);
            }
        }
        TypeLabel::B => {
            for i in 0..n - 1 {
                edge(&mut a, i, i + 1);
            }
            // α_{n-1} long, α_n short: ⟨α_{n-1}, α_n∨⟩ = −2.
            a[n - 1][n - 2] = -2;
        }
        TypeLabel::C => {
            for i in 0..n - 1 {
                edge(&mut a, i, i + 1);
            }
            // α_{n-1} short, α_n long: ⟨α_n, α_{n-1}∨⟩ = −2.
            a[n - 2][n - 1] = -2;
        }
        TypeLabel::D => {
            for i in 0..n - 2 {
                edge(&mut a, i, i + 1);
            }
            edge(&mut a, n - 3, n - 1);
        }
        TypeLabel::E => {
            // Chain 1-3-4-5-6(-7-8), with 2 attached to 4 (Bourbaki).
            edge(&mut a, 0, 2);
            edge(&mut a, 2, 3);
            edge(&mut a, 3, 4);
            edge(&mut a, 4, 5);
            if n >= 7 {
                edge(&mut a, 5, 6);
            }
            if n == 8 {
                edge(&mut a, 6, 7);
            }
            edge(&mut a, 1, 3);
        }
        TypeLabel::F => {
            edge(&mut a, 0, 1);
            edge(&mut a, 1, 2);
            edge(&mut a, 2, 3);
            // α_2 long, α_3 short.
            a[2][1] = -2;
        }
        TypeLabel::G => {
            // α_1 short, α_2 long: ⟨α_2, α_1∨⟩ = −3.
            a[0][1] = -3;
            a[1][0] = -1;
        }
    }
    Some(a)
}
