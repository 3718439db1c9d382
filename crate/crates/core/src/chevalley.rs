//! Chevalley-basis realization of the simple Lie algebra attached to a root
//! system, with exact integer structure constants, plus the torus-stable
//! subspace machinery used by the cohomology recursion.
//!
//! Structure constants are produced by the extraspecial-pair method: for each
//! non-simple positive root `δ` the pair `(β, γ)`, `β + γ = δ` with `β`
//! minimal in the root order, gets `N_{β,γ} = p+1 > 0`; every other constant
//! is forced by the standard triple and quadruple relations among the `N`'s.
//! The whole table is validated against `|N_{β,γ}| = p+1` and the Jacobi
//! identity at build time (exhaustively through rank 4, sampled at rank 5 and
//! above), so a conventions bug cannot survive construction.
//!
//! A `TSubspace` is a torus-stable subspace of the algebra: a set of root
//! lines together with a rational subspace of the Cartan. Since all root
//! spaces of the adjoint module are one-dimensional, this shape is fully
//! general, and all linear algebra happens on the (tiny) Cartan block.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use num_rational::Rational64;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::ratmat::{int_vec, rat, Rat, RatMat};
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::ParabolicSubset;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChevalleyError {
    #[error("Jacobi identity failed on a basis triple; structure constants are inconsistent")]
    JacobiFailure,
    #[error("subspace is not stable under the Borel subalgebra")]
    BNotStable,
}

/// The Lie algebra in a Chevalley basis `{x_β} ∪ {h_i = α_i∨}`.
pub struct LieAlgebra {
    rs: Arc<RootSystem>,
    /// `N_{β,γ}` for ordered pairs of positive roots with `β + γ` a root.
    pos_table: HashMap<(usize, usize), i64>,
}

/// Element in basis coordinates: root-line coefficients plus a Cartan vector
/// over the simple coroots.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Elem {
    pub roots: BTreeMap<usize, i64>,
    pub h: Vec<i64>,
}

impl Elem {
    fn zero(rank: usize) -> Elem {
        Elem {
            roots: BTreeMap::new(),
            h: vec![0; rank],
        }
    }

    fn is_zero(&self) -> bool {
        self.roots.values().all(|&c| c == 0) && self.h.iter().all(|&c| c == 0)
    }

    fn add_scaled(&mut self, other: &Elem, k: i64) {
        for (&r, &c) in &other.roots {
            *self.roots.entry(r).or_insert(0) += k * c;
        }
        for (slot, &c) in self.h.iter_mut().zip(&other.h) {
            *slot += k * c;
        }
    }
}

impl LieAlgebra {
    pub fn build(rs: &Arc<RootSystem>) -> Result<LieAlgebra, ChevalleyError> {
        let mut lie = LieAlgebra {
            rs: rs.clone(),
            pos_table: HashMap::new(),
        };
        lie.fill_positive_table();
        lie.assert_magnitudes();
        lie.verify_jacobi()?;
        Ok(lie)
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.rs.num_roots() + self.rs.rank
    }

    /// Largest `k ≥ 0` with `γ − kβ` a root.
    fn down_string_length(&self, beta: usize, gamma: usize) -> i64 {
        let rs = &self.rs;
        let b = &rs.root(beta).alpha;
        let mut cur = rs.root(gamma).alpha.clone();
        let mut p = 0;
        loop {
            for (slot, &x) in cur.iter_mut().zip(b) {
                *slot -= x;
            }
            if cur.iter().all(|&k| k == 0) || rs.root_index(&cur).is_none() {
                return p;
            }
            p += 1;
        }
    }

    pub(crate) fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        let sum: Vec<i64> = self
            .rs
            .root(a)
            .alpha
            .iter()
            .zip(&self.rs.root(b).alpha)
            .map(|(x, y)| x + y)
            .collect();
        if sum.iter().all(|&k| k == 0) {
            None
        } else {
            self.rs.root_index(&sum)
        }
    }

    fn fill_positive_table(&mut self) {
        let rs = self.rs.clone();
        let n_pos = rs.num_positive();
        // Positive roots are already stored in (height, lex) order; process
        // sums by increasing height so every reference points backwards.
        for delta in 0..n_pos {
            if rs.root(delta).height < 2 {
                continue;
            }
            let mut pairs: Vec<(usize, usize)> = Vec::new();
            for beta in 0..n_pos {
                let da = &rs.root(delta).alpha;
                let ba = &rs.root(beta).alpha;
                let rest: Vec<i64> = da.iter().zip(ba).map(|(d, b)| d - b).collect();
                if rest.iter().all(|&k| k >= 0) {
                    if let Some(gamma) = rs.root_index(&rest) {
                        if gamma < n_pos && beta < gamma {
                            pairs.push((beta, gamma));
                        }
                    }
                }
            }
            pairs.sort_unstable();
            let &(xs_beta, xs_gamma) = pairs.first().expect("every non-simple root splits");
            let p = self.down_string_length(xs_beta, xs_gamma);
            self.pos_table.insert((xs_beta, xs_gamma), p + 1);
            self.pos_table.insert((xs_gamma, xs_beta), -(p + 1));
            for &(xi, eta) in pairs.iter().skip(1) {
                let n = self.solve_special_pair(delta, xs_beta, xs_gamma, xi, eta);
                self.pos_table.insert((xi, eta), n);
                self.pos_table.insert((eta, xi), -n);
            }
        }
    }

    /// Quadruple relation on `(γ, β, −ξ, −η)` (sum zero, no two opposite)
    /// solved for `N_{ξ,η}`, given the extraspecial pair `(β, γ)` of `δ`.
    fn solve_special_pair(
        &self,
        delta: usize,
        beta: usize,
        gamma: usize,
        xi: usize,
        eta: usize,
    ) -> i64 {
        let rs = &self.rs;
        let neg = |r: usize| rs.negate(r);
        let norm = |r: usize| Rational64::from_integer(rs.root_norm2(r));
        let mut rhs = Rational64::zero();
        // N_{β,−ξ} N_{γ,−η} / (β−ξ, β−ξ)
        if let Some(s) = self.sum_index(beta, neg(xi)) {
            let t1 = self.n_const(beta, neg(xi)) * self.n_const(gamma, neg(eta));
            rhs += Rational64::from_integer(t1) / norm(s);
        }
        // N_{−ξ,γ} N_{β,−η} / (γ−ξ, γ−ξ)
        if let Some(s) = self.sum_index(neg(xi), gamma) {
            let t2 = self.n_const(neg(xi), gamma) * self.n_const(beta, neg(eta));
            rhs += Rational64::from_integer(t2) / norm(s);
        }
        let n_gamma_beta = Rational64::from_integer(self.n_const(gamma, beta));
        let neg_n = -(norm(delta) * rhs) / n_gamma_beta;
        // neg_n is N_{−ξ,−η}; flip for N_{ξ,η}.
        let val = -neg_n;
        assert!(val.is_integer(), "special-pair constant must be integral");
        val.to_integer()
    }

    /// `N_{a,b}` for arbitrary root indices with `a + b` a root
    /// (0 when `a + b` is not a root; `a + b = 0` is not a valid query).
    pub fn n_const(&self, a: usize, b: usize) -> i64 {
        let rs = &self.rs;
        let n_pos = rs.num_positive();
        if self.sum_index(a, b).is_none() {
            assert!(rs.negate(a) != b, "n_const is undefined on opposite roots");
            return 0;
        }
        match (a < n_pos, b < n_pos) {
            (true, true) => self.pos_table[&(a, b)],
            (false, false) => -self.pos_table[&(rs.negate(a), rs.negate(b))],
            (false, true) => -self.mixed(b, rs.negate(a)),
            (true, false) => self.mixed(a, rs.negate(b)),
        }
    }

    /// `N_{x,−γ}` for positive `x, γ` with `x − γ` a nonzero root, reduced to
    /// the positive table through the triple relation
    /// `N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)` for `a + b + c = 0`.
    fn mixed(&self, x: usize, gamma: usize) -> i64 {
        let rs = &self.rs;
        let s = self
            .sum_index(x, rs.negate(gamma))
            .expect("difference is a root");
        let norm = |r: usize| Rational64::from_integer(rs.root_norm2(r));
        let val = if rs.is_positive_root(s) {
            // a = x, b = −γ, c = −s: N_{x,−γ} = (s,s)/(x,x) · N_{−γ,−s}.
            norm(s) / norm(x) * Rational64::from_integer(-self.pos_table[&(gamma, s)])
        } else {
            // t = γ − x > 0: N_{x,−γ} = (t,t)/(γ,γ) · N_{t,x}.
            let t = rs.negate(s);
            norm(t) / norm(gamma) * Rational64::from_integer(self.pos_table[&(t, x)])
        };
        assert!(val.is_integer(), "mixed constant must be integral");
        val.to_integer()
    }

    fn assert_magnitudes(&self) {
        let rs = &self.rs;
        for a in 0..rs.num_roots() {
            for b in 0..rs.num_roots() {
                if rs.negate(a) == b || self.sum_index(a, b).is_none() {
                    continue;
                }
                let p = self.down_string_length(a, b);
                assert_eq!(
                    self.n_const(a, b).abs(),
                    p + 1,
                    "|N| = p+1 violated at ({a},{b})"
                );
                assert_eq!(self.n_const(a, b), -self.n_const(b, a));
                assert_eq!(
                    self.n_const(a, b),
                    -self.n_const(rs.negate(a), rs.negate(b))
                );
            }
        }
    }

    /// Bracket of two basis-coordinate elements.
    pub fn bracket(&self, a: &Elem, b: &Elem) -> Elem {
        let rs = &self.rs;
        let rank = rs.rank;
        let mut out = Elem::zero(rank);
        for (&r1, &c1) in &a.roots {
            for (&r2, &c2) in &b.roots {
                let k = c1 * c2;
                if k == 0 {
                    continue;
                }
                if rs.negate(r1) == r2 {
                    // [x_β, x_{−β}] = h_β.
                    for (slot, &co) in out.h.iter_mut().zip(rs.coroot(r1)) {
                        *slot += k * co;
                    }
                } else if let Some(t) = self.sum_index(r1, r2) {
                    *out.roots.entry(t).or_insert(0) += k * self.n_const(r1, r2);
                }
            }
        }
        // [h, x_β] = ⟨β, h⟩ x_β and [x_β, h] = −⟨β, h⟩ x_β.
        for (&r2, &c2) in &b.roots {
            let pairing: i64 = rs
                .root(r2)
                .omega
                .0
                .iter()
                .zip(&a.h)
                .map(|(o, c)| o * c)
                .sum();
            *out.roots.entry(r2).or_insert(0) += pairing * c2;
        }
        for (&r1, &c1) in &a.roots {
            let pairing: i64 = rs
                .root(r1)
                .omega
                .0
                .iter()
                .zip(&b.h)
                .map(|(o, c)| o * c)
                .sum();
            *out.roots.entry(r1).or_insert(0) -= pairing * c1;
        }
        out.roots.retain(|_, c| *c != 0);
        out
    }

    pub fn basis_elem(&self, which: BasisIndex) -> Elem {
        let rank = self.rs.rank;
        let mut e = Elem::zero(rank);
        match which {
            BasisIndex::Root(r) => {
                e.roots.insert(r, 1);
            }
            BasisIndex::Cartan(i) => {
                e.h[i] = 1;
            }
        }
        e
    }

    fn jacobi_holds(&self, a: &Elem, b: &Elem, c: &Elem) -> bool {
        let mut sum = self.bracket(&self.bracket(a, b), c);
        sum.add_scaled(&self.bracket(&self.bracket(b, c), a), 1);
        sum.add_scaled(&self.bracket(&self.bracket(c, a), b), 1);
        sum.roots.retain(|_, k| *k != 0);
        sum.is_zero()
    }

    /// Exhaustive for rank ≤ 4, 10^4 seeded random triples otherwise.
    fn verify_jacobi(&self) -> Result<(), ChevalleyError> {
        let basis: Vec<BasisIndex> = (0..self.rs.num_roots())
            .map(BasisIndex::Root)
            .chain((0..self.rs.rank).map(BasisIndex::Cartan))
            .collect();
        let elems: Vec<Elem> = basis.iter().map(|&b| self.basis_elem(b)).collect();
        if self.rs.rank <= 4 {
            for a in &elems {
                for b in &elems {
                    for c in &elems {
                        if !self.jacobi_holds(a, b, c) {
                            return Err(ChevalleyError::JacobiFailure);
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x4c49_4541);
            for _ in 0..10_000 {
                let pick = |rng: &mut ChaCha8Rng| elems[rng.gen_range(0..elems.len())].clone();
                let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
                if !self.jacobi_holds(&a, &b, &c) {
                    return Err(ChevalleyError::JacobiFailure);
                }
            }
        }
        Ok(())
    }

    /// `𝔟 = 𝔥 ⊕ ⊕_{β>0} 𝔤_{−β}` (the Borel opposite to the positive one).
    pub fn borel(&self) -> TSubspace {
        let rs = &self.rs;
        let lines = (rs.num_positive()..rs.num_roots()).collect();
        TSubspace {
            lines,
            cartan: RatMat::identity(rs.rank),
        }
    }

    /// `𝔭_J = 𝔟 ⊕ {x_β : β ∈ R⁺ ∩ span J}`.
    pub fn parabolic(&self, j: &ParabolicSubset) -> TSubspace {
        let rs = &self.rs;
        let mut sub = self.borel();
        for idx in 0..rs.num_positive() {
            if rs.root(idx).support().iter().all(|&s| j.contains(s)) {
                sub.lines.insert(idx);
            }
        }
        sub
    }

    /// The whole algebra as a subspace.
    pub fn full(&self) -> TSubspace {
        TSubspace {
            lines: (0..self.rs.num_roots()).collect(),
            cartan: RatMat::identity(self.rs.rank),
        }
    }

    /// Is `M` stable under `ad 𝔟`, i.e. under all lowering operators
    /// `ad x_{−α_j}` (Cartan stability is structural)?
    pub fn is_b_stable(&self, m: &TSubspace) -> bool {
        (0..self.rs.rank)
            .all(|j| self.stable_under(m, self.rs.negate(self.rs.simple_root_index(j))))
    }

    fn stable_under(&self, m: &TSubspace, gen: usize) -> bool {
        let rs = &self.rs;
        for &b in &m.lines {
            if rs.negate(b) == gen {
                // ad(x_ρ) x_{−ρ} = h_ρ must land in the Cartan part.
                if !m.cartan.colspace_contains(&int_vec(rs.coroot(gen))) {
                    return false;
                }
            } else if let Some(t) = self.sum_index(gen, b) {
                if !m.lines.contains(&t) {
                    return false;
                }
            }
        }
        if !m.lines.contains(&gen) && m.cartan.cols() > 0 {
            // ad(x_ρ) h = −⟨ρ, h⟩ x_ρ: the functional ⟨ρ, ·⟩ must kill the
            // Cartan part when the target line is absent.
            let f: Vec<Rat> = rs.root(gen).omega.0.iter().map(|&x| rat(x)).collect();
            for col in 0..m.cartan.cols() {
                let v = m.cartan.col(col);
                let val: Rat = f.iter().zip(&v).map(|(a, b)| a * b).sum();
                if !val.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Largest subspace of `M` stable under `ad 𝔟` and `ad x_{α_i}`,
    /// computed by fixed-point iteration with exact rational kernels on the
    /// Cartan block. Realizes `H^0(s_{α_i}, M)` for a `B`-stable `M ⊆ 𝔤`.
    pub fn largest_pstable_subspace(
        &self,
        m: &TSubspace,
        i: usize,
    ) -> Result<TSubspace, ChevalleyError> {
        if !self.is_b_stable(m) {
            return Err(ChevalleyError::BNotStable);
        }
        let rs = &self.rs;
        let mut gens: Vec<usize> = (0..rs.rank)
            .map(|j| rs.negate(rs.simple_root_index(j)))
            .collect();
        gens.push(rs.simple_root_index(i));
        let mut lines = m.lines.clone();
        let mut cartan = m.cartan.canon_colspace();
        loop {
            let mut changed = false;
            for &g in &gens {
                let doomed: Vec<usize> = lines
                    .iter()
                    .copied()
                    .filter(|&b| {
                        if rs.negate(b) == g {
                            !cartan.colspace_contains(&int_vec(rs.coroot(g)))
                        } else if let Some(t) = self.sum_index(g, b) {
                            !lines.contains(&t)
                        } else {
                            false
                        }
                    })
                    .collect();
                if !doomed.is_empty() {
                    changed = true;
                    for b in doomed {
                        lines.remove(&b);
                    }
                }
                if !lines.contains(&g) && cartan.cols() > 0 {
                    let f: Vec<Rat> = rs.root(g).omega.0.iter().map(|&x| rat(x)).collect();
                    let restricted = cartan.restrict_to_functional_kernel(&f);
                    if restricted.cols() != cartan.cols() {
                        cartan = restricted;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let out = TSubspace { lines, cartan };
        debug_assert!(self.is_b_stable(&out));
        debug_assert!(self.stable_under(&out, rs.simple_root_index(i)));
        Ok(out)
    }

    /// Graded Jordan strings of `ad x_{−α_i}` on a `B`-stable subspace.
    pub fn string_decomposition(
        &self,
        m: &TSubspace,
        i: usize,
    ) -> Result<StringDecomp, ChevalleyError> {
        if !self.is_b_stable(m) {
            return Err(ChevalleyError::BNotStable);
        }
        let rs = &self.rs;
        let rank = rs.rank;
        let zero_key = vec![0i64; rank];
        // Weight nodes keyed by root-lattice coordinates.
        let mut nodes: BTreeMap<Vec<i64>, Node> = BTreeMap::new();
        for &b in &m.lines {
            nodes.insert(rs.root(b).alpha.clone(), Node::Line(b));
        }
        if m.cartan.cols() > 0 {
            nodes.insert(zero_key.clone(), Node::Cartan);
        }
        let node_dim = |n: &Node| match n {
            Node::Line(_) => 1,
            Node::Cartan => m.cartan.cols(),
        };
        let mut strings: Vec<StringBlock> = Vec::new();
        let shift = |key: &[i64], times: i64| {
            let mut k = key.to_vec();
            k[i] += times;
            k
        };
        for key in nodes.keys().cloned().collect::<Vec<_>>() {
            if nodes.contains_key(&shift(&key, 1)) {
                continue; // not a chain top
            }
            // Maximal contiguous run downward from this top.
            let mut run_keys = vec![key.clone()];
            let mut cur = shift(&key, -1);
            while nodes.contains_key(&cur) {
                run_keys.push(cur.clone());
                cur = shift(&cur, -1);
            }
            let spaces: Vec<&Node> = run_keys.iter().map(|k| &nodes[k]).collect();
            let maps: Vec<RatMat> = (0..spaces.len().saturating_sub(1))
                .map(|t| self.lowering_block(m, i, spaces[t], spaces[t + 1]))
                .collect();
            // Rank of the composite V_a → V_b.
            let composite_rank = |a: usize, b: usize| -> usize {
                if a == b {
                    return node_dim(spaces[a]);
                }
                let mut prod = maps[a].clone();
                for map in maps.iter().take(b).skip(a + 1) {
                    prod = map.mul(&prod);
                }
                prod.rank()
            };
            let mlen = spaces.len();
            // Index pairs (a, b) range over the grid of possible string
            // spans; positional arithmetic is the point here.
            #[allow(clippy::needless_range_loop)]
            for a in 0..mlen {
                for b in a..mlen {
                    let r = |x: isize, y: isize| -> usize {
                        if x < 0 || y >= mlen as isize {
                            0
                        } else {
                            composite_rank(x as usize, y as usize)
                        }
                    };
                    let (ai, bi) = (a as isize, b as isize);
                    let count = r(ai, bi) as i64 - r(ai - 1, bi) as i64 - r(ai, bi + 1) as i64
                        + r(ai - 1, bi + 1) as i64;
                    assert!(count >= 0);
                    if count > 0 {
                        let top = self.node_weight(&run_keys[a]);
                        let len = b - a + 1;
                        let c = rs.pairing(&top, rs.simple_root_index(i)) - (len as i64 - 1);
                        assert!(
                            c <= 0,
                            "B-stable subspaces are lower-closed: string (top {top:?}, d {len}) has c = {c} > 0"
                        );
                        strings.push(StringBlock {
                            top,
                            len,
                            mult: count as usize,
                        });
                    }
                }
            }
        }
        strings.sort_by(|a, b| a.top.cmp(&b.top).then(a.len.cmp(&b.len)));
        let mut merged: Vec<StringBlock> = Vec::new();
        for s in strings {
            if let Some(last) = merged.last_mut() {
                if last.top == s.top && last.len == s.len {
                    last.mult += s.mult;
                    continue;
                }
            }
            merged.push(s);
        }
        let decomp = StringDecomp {
            alpha: i,
            strings: merged,
        };
        assert_eq!(decomp.total_dim(), m.dim(), "string dimensions must add up");
        debug_assert!(self.strings_reconstruct_character(m, i, &decomp));
        Ok(decomp)
    }

    fn node_weight(&self, key: &[i64]) -> Weight {
        if key.iter().all(|&k| k == 0) {
            Weight::zero(self.rs.rank)
        } else {
            self.rs.root(self.rs.root_index(key).unwrap()).omega.clone()
        }
    }

    /// Matrix block of `ad x_{−α_i}` from one weight node to the next one
    /// down, in the node bases (root lines are unit vectors, the Cartan node
    /// uses the columns of `m.cartan`).
    fn lowering_block(&self, m: &TSubspace, i: usize, from: &Node, to: &Node) -> RatMat {
        let rs = &self.rs;
        let lower = rs.negate(rs.simple_root_index(i));
        match (from, to) {
            (Node::Line(b), Node::Line(t)) => {
                debug_assert_eq!(self.sum_index(lower, *b), Some(*t));
                RatMat::from_int_cols(1, &[vec![self.n_const(lower, *b)]])
            }
            (Node::Line(b), Node::Cartan) => {
                // b must be the line of α_i: image is −h_{α_i}.
                debug_assert_eq!(rs.negate(*b), lower);
                let target: Vec<Rat> = rs.coroot(*b).iter().map(|&x| rat(-x)).collect();
                let coords = solve_in_colspace(&m.cartan, &target)
                    .expect("B-stability puts h_{α_i} in the Cartan part");
                RatMat::from_cols(m.cartan.cols(), vec![coords])
            }
            (Node::Cartan, Node::Line(t)) => {
                debug_assert_eq!(*t, lower);
                // h ↦ ⟨α_i, h⟩ x_{−α_i}.
                let f: Vec<Rat> = (0..rs.rank).map(|k| rat(rs.cartan[k][i])).collect();
                let mut row = RatMat::zeros(1, m.cartan.cols());
                for j in 0..m.cartan.cols() {
                    let col = m.cartan.col(j);
                    row[(0, j)] = f.iter().zip(&col).map(|(a, b)| a * b).sum();
                }
                row
            }
            (Node::Cartan, Node::Cartan) => unreachable!("weight 0 is not α_i-adjacent to itself"),
        }
    }

    fn strings_reconstruct_character(
        &self,
        m: &TSubspace,
        i: usize,
        decomp: &StringDecomp,
    ) -> bool {
        let rs = &self.rs;
        let alpha_w = rs.simple_root_weight(i);
        let mut counts: BTreeMap<Weight, i64> = BTreeMap::new();
        for s in &decomp.strings {
            let mut w = s.top.clone();
            for _ in 0..s.len {
                *counts.entry(w.clone()).or_insert(0) += s.mult as i64;
                w = &w - &alpha_w;
            }
        }
        let mut expect: BTreeMap<Weight, i64> = BTreeMap::new();
        for &b in &m.lines {
            *expect.entry(rs.root(b).omega.clone()).or_insert(0) += 1;
        }
        if m.cartan.cols() > 0 {
            expect.insert(Weight::zero(rs.rank), m.cartan.cols() as i64);
        }
        counts == expect
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisIndex {
    Root(usize),
    Cartan(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Node {
    Line(usize),
    Cartan,
}

/// Solve `C x = v` inside the column space; `None` when `v` is outside.
fn solve_in_colspace(c: &RatMat, v: &[Rat]) -> Option<Vec<Rat>> {
    let rows = c.rows();
    let cols = c.cols();
    let mut aug = RatMat::zeros(rows, cols + 1);
    for r in 0..rows {
        for j in 0..cols {
            aug[(r, j)] = c[(r, j)].clone();
        }
        aug[(r, cols)] = v[r].clone();
    }
    let pivots = aug.rref();
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[(row, cols)].clone();
    }
    Some(x)
}

/// Torus-stable subspace of the algebra: root lines plus a rational subspace
/// of the Cartan, stored in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TSubspace {
    lines: BTreeSet<usize>,
    cartan: RatMat,
}

impl TSubspace {
    pub fn new(lines: BTreeSet<usize>, cartan: RatMat) -> TSubspace {
        TSubspace {
            lines,
            cartan: cartan.canon_colspace(),
        }
    }

    pub fn dim(&self) -> usize {
        self.lines.len() + self.cartan.cols()
    }

    pub fn lines(&self) -> &BTreeSet<usize> {
        &self.lines
    }

    pub fn cartan(&self) -> &RatMat {
        &self.cartan
    }

    pub fn cartan_dim(&self) -> usize {
        self.cartan.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Is `self ⊆ other`?
    pub fn contained_in(&self, other: &TSubspace) -> bool {
        self.lines.is_subset(&other.lines) && other.cartan.colspace_contains_all(&self.cartan)
    }

    /// Weights with multiplicities (`0` carries the Cartan dimension).
    pub fn weights(&self, rs: &RootSystem) -> Vec<(Weight, usize)> {
        let mut out: Vec<(Weight, usize)> = self
            .lines
            .iter()
            .map(|&b| (rs.root(b).omega.clone(), 1))
            .collect();
        if self.cartan.cols() > 0 {
            out.push((Weight::zero(rs.rank), self.cartan.cols()));
        }
        out.sort();
        out
    }
}

/// Graded Jordan type of a lowering operator: each string is an
/// indecomposable `V' ⊗ ℂ_λ` with `⟨λ, α_i∨⟩ = ⟨top, α_i∨⟩ − (d − 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringDecomp {
    pub alpha: usize,
    pub strings: Vec<StringBlock>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringBlock {
    pub top: Weight,
    pub len: usize,
    pub mult: usize,
}

impl StringDecomp {
    pub fn total_dim(&self) -> usize {
        self.strings.iter().map(|s| s.len * s.mult).sum()
    }

    /// `c = ⟨top, α_i∨⟩ − (d − 1)` for a block.
    pub fn c_value(&self, rs: &RootSystem, block: &StringBlock) -> i64 {
        rs.pairing(&block.top, rs.simple_root_index(self.alpha)) - (block.len as i64 - 1)
    }
}
