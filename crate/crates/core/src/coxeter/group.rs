use std::collections::VecDeque;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use super::spec::{CoxeterSpec, GenSet, Generator};
use super::todd_coxeter;
use crate::error::{Error, Result};

/// Default bound on the number of group elements enumerated.
pub const DEFAULT_CAP: usize = 50_000;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// Handle to an element of a [`CoxeterGroup`]: its position in ShortLex order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement(pub(crate) u32);

impl GroupElement {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A finite Coxeter group with all elements enumerated in ShortLex order.
#[derive(Debug)]
pub struct CoxeterGroup {
    id: u64,
    spec: CoxeterSpec,
    words: Vec<Vec<u8>>,
    length: Vec<u32>,
    right: Vec<Vec<u32>>,
    left: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    longest: GroupElement,
}

impl CoxeterGroup {
    /// Enumerates the group; fails if it has more than `cap` elements.
    pub fn build(spec: CoxeterSpec, cap: usize) -> Result<Self> {
        let rank = spec.rank();
        let limit = cap.saturating_mul(8).max(4096);
        let cosets = todd_coxeter::enumerate(spec.matrix(), limit).ok_or(Error::InfiniteOrTooLarge { cap })?;
        if cosets.len() > cap {
            return Err(Error::InfiniteOrTooLarge { cap });
        }
        let n = cosets.len();

        // ShortLex BFS from the identity coset (coset 0 is the subgroup itself).
        let mut order = vec![u32::MAX; n];
        let mut words: Vec<Vec<u8>> = Vec::with_capacity(n);
        let mut length = Vec::with_capacity(n);
        let mut queue = VecDeque::from([0u32]);
        order[0] = 0;
        words.push(Vec::new());
        length.push(0u32);
        let mut by_index = vec![0u32];
        while let Some(c) = queue.pop_front() {
            let ci = order[c as usize] as usize;
            for (s, &d) in cosets[c as usize].iter().enumerate() {
                if order[d as usize] == u32::MAX {
                    order[d as usize] = words.len() as u32;
                    let mut w = words[ci].clone();
                    w.push(s as u8);
                    words.push(w);
                    length.push(length[ci] + 1);
                    by_index.push(d);
                    queue.push_back(d);
                }
            }
        }
        debug_assert_eq!(words.len(), n);

        let mut right = vec![vec![0u32; n]; rank];
        for (i, &c) in by_index.iter().enumerate() {
            for (s, row) in right.iter_mut().enumerate() {
                row[i] = order[cosets[c as usize][s] as usize];
            }
        }
        let mut inverse = vec![0u32; n];
        for (i, w) in words.iter().enumerate() {
            let mut x = 0u32;
            for &s in w.iter().rev() {
                x = right[s as usize][x as usize];
            }
            inverse[i] = x;
        }
        let mut left = vec![vec![0u32; n]; rank];
        for s in 0..rank {
            for i in 0..n {
                left[s][i] = inverse[right[s][inverse[i] as usize] as usize];
            }
        }
        let longest = GroupElement((0..n).max_by_key(|&i| (length[i], std::cmp::Reverse(i))).unwrap() as u32);
        Ok(Self {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            spec,
            words,
            length,
            right,
            left,
            inverse,
            longest,
        })
    }

    pub fn named(name: &str) -> Result<Self> {
        Self::build(CoxeterSpec::named(name)?, DEFAULT_CAP)
    }

    /// Process-unique identity used to reject mixing objects from different groups.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn spec(&self) -> &CoxeterSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(0)
    }

    pub fn generator(&self, s: Generator) -> GroupElement {
        GroupElement(self.right[s][0])
    }

    pub fn generators(&self) -> GenSet {
        GenSet::full(self.rank())
    }

    /// Checked conversion from a raw index.
    pub fn element(&self, index: usize) -> Result<GroupElement> {
        if index < self.order() {
            Ok(GroupElement(index as u32))
        } else {
            Err(Error::ElementOutOfRange(index))
        }
    }

    /// All elements in ShortLex order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order() as u32).map(GroupElement)
    }

    pub fn length(&self, w: GroupElement) -> usize {
        self.length[w.index()] as usize
    }

    /// `(-1)^l(w)`
    pub fn sign(&self, w: GroupElement) -> i64 {
        if self.length(w).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The ShortLex-least reduced word, 0-based generators.
    pub fn word(&self, w: GroupElement) -> &[u8] {
        &self.words[w.index()]
    }

    /// `s1s2s1` style label; `e` for the identity.
    pub fn format(&self, w: GroupElement) -> String {
        let word = self.word(w);
        if word.is_empty() {
            return "e".to_string();
        }
        word.iter().map(|s| format!("s{}", s + 1)).collect()
    }

    /// 1-based reduced word, the external representation.
    pub fn word_one_based(&self, w: GroupElement) -> Vec<usize> {
        self.word(w).iter().map(|&s| s as usize + 1).collect()
    }

    pub fn from_word(&self, word: &[Generator]) -> Result<GroupElement> {
        let mut x = self.identity();
        for &s in word {
            if s >= self.rank() {
                return Err(Error::GeneratorOutOfRange(s + 1));
            }
            x = self.right_mul(x, s);
        }
        Ok(x)
    }

    /// `s w`
    pub fn left_mul(&self, s: Generator, w: GroupElement) -> GroupElement {
        GroupElement(self.left[s][w.index()])
    }

    /// `w s`
    pub fn right_mul(&self, w: GroupElement, s: Generator) -> GroupElement {
        GroupElement(self.right[s][w.index()])
    }

    pub fn multiply(&self, g: GroupElement, h: GroupElement) -> GroupElement {
        self.word(h).iter().fold(g, |x, &s| self.right_mul(x, s as usize))
    }

    pub fn inverse(&self, w: GroupElement) -> GroupElement {
        GroupElement(self.inverse[w.index()])
    }

    pub fn is_left_descent(&self, s: Generator, w: GroupElement) -> bool {
        self.length(self.left_mul(s, w)) < self.length(w)
    }

    pub fn is_right_descent(&self, w: GroupElement, s: Generator) -> bool {
        self.length(self.right_mul(w, s)) < self.length(w)
    }

    pub fn descents(&self, w: GroupElement, side: Side) -> GenSet {
        GenSet::from_gens((0..self.rank()).filter(|&s| match side {
            Side::Left => self.is_left_descent(s, w),
            Side::Right => self.is_right_descent(w, s),
        }))
    }

    /// Bruhat order via the lifting property: for a left descent `s` of `y`,
    /// `x <= y` iff `sx <= sy` when `sx < x`, and iff `x <= sy` otherwise.
    pub fn bruhat_leq(&self, x: GroupElement, y: GroupElement) -> bool {
        let (mut x, mut y) = (x, y);
        loop {
            if self.length(x) > self.length(y) {
                return false;
            }
            if self.length(x) == 0 {
                return true;
            }
            if self.length(x) == self.length(y) {
                return x == y;
            }
            let s = self.word(y)[0] as usize;
            if self.is_left_descent(s, x) {
                x = self.left_mul(s, x);
            }
            y = self.left_mul(s, y);
        }
    }

    /// Left weak order: `y = w x` with `l(y) = l(w) + l(x)`.
    pub fn weak_left_leq(&self, x: GroupElement, y: GroupElement) -> bool {
        let w = self.multiply(y, self.inverse(x));
        self.length(w) + self.length(x) == self.length(y)
    }

    pub fn longest(&self) -> GroupElement {
        self.longest
    }

    /// The longest element `w_J` of the parabolic subgroup generated by `j`.
    pub fn longest_element(&self, j: GenSet) -> GroupElement {
        let mut w = self.identity();
        'grow: loop {
            for s in j.iter() {
                if !self.is_right_descent(w, s) {
                    w = self.right_mul(w, s);
                    continue 'grow;
                }
            }
            return w;
        }
    }

    /// Elements of the parabolic subgroup `W_J`, in ShortLex order.
    pub fn parabolic_subgroup(&self, j: GenSet) -> Vec<GroupElement> {
        self.elements()
            .filter(|&w| self.word(w).iter().all(|&s| j.contains(s as usize)))
            .collect()
    }

    /// Coefficients of the length generating function `sum_w q^l(w)`.
    pub fn length_distribution(&self) -> Vec<usize> {
        let mut v = vec![0usize; self.length(self.longest) + 1];
        for &l in &self.length {
            v[l as usize] += 1;
        }
        v
    }
}
