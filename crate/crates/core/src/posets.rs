//! The poset of gaps of the numerical semigroup `<s, t>` and its order ideals.
//!
//! For coprime `s, t` the elements are the positive integers that are not of
//! the form `a*s + b*t` with `a, b >= 0`, and `y` covers `x` when
//! `y - x` is `s` or `t`. A partition is an `(s, t)`-core exactly when its
//! beta-set is an order ideal of this poset, so enumerating ideals
//! enumerates cores.
//!
//! `T_s` denotes the case `t = s + 1`. Its elements are `m*s + j` with
//! `m + 1 <= j <= s - 1`, a staircase whose rank-0 row is `1..s`. The
//! decomposition machinery at the bottom of this module works in those
//! `(m, j)` coordinates.

use std::fmt::Write as _;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::partitions::{has_property_p, BetaSet, Partition};
use crate::{Error, Natural, Result};

/// The finite poset of semigroup gaps for coprime `(s, t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorePoset {
    s: u32,
    t: u32,
    elements: Vec<u32>,
    ranks: Vec<u32>,
    member: Vec<bool>,
}

impl CorePoset {
    pub fn new(s: u32, t: u32) -> Result<Self> {
        if s == 0 {
            return Err(Error::ZeroParameter("s"));
        }
        if t == 0 {
            return Err(Error::ZeroParameter("t"));
        }
        if s == t {
            return Err(Error::EqualParameters(s));
        }
        if s.gcd(&t) != 1 {
            return Err(Error::NotCoprime { s, t });
        }
        Ok(Self::sieve(s, t))
    }

    /// `T_s = P_(s, s+1)`; `T_0` is the empty poset.
    pub fn staircase(s: u32) -> Self {
        if s == 0 {
            return CorePoset {
                s: 0,
                t: 1,
                elements: Vec::new(),
                ranks: Vec::new(),
                member: Vec::new(),
            };
        }
        Self::sieve(s, s + 1)
    }

    fn sieve(s: u32, t: u32) -> Self {
        // largest gap is the Frobenius number st - s - t
        let frobenius = i64::from(s) * i64::from(t) - i64::from(s) - i64::from(t);
        let len = (frobenius + 1).max(0) as usize;
        let (su, tu) = (s as usize, t as usize);
        let mut reachable = vec![false; len];
        for n in 0..len {
            reachable[n] =
                n == 0 || (n >= su && reachable[n - su]) || (n >= tu && reachable[n - tu]);
        }
        let member: Vec<bool> = reachable.iter().map(|&r| !r).collect();
        let elements: Vec<u32> = (1..len as u32).filter(|&n| member[n as usize]).collect();

        let mut poset = CorePoset {
            s,
            t,
            elements,
            ranks: Vec::new(),
            member,
        };
        let mut ranks: Vec<u32> = Vec::with_capacity(poset.elements.len());
        for (idx, &y) in poset.elements.iter().enumerate() {
            let rank = poset
                .lower_covers(y)
                .map(|x| ranks[poset.index_of(x).expect("lower cover is an element")] + 1)
                .max()
                .unwrap_or(0);
            debug_assert_eq!(idx, ranks.len());
            ranks.push(rank);
        }
        poset.ranks = ranks;
        poset
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// Elements in ascending order.
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        x != 0 && self.member.get(x as usize).copied().unwrap_or(false)
    }

    fn index_of(&self, x: u32) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    /// Elements covered by `y`.
    pub fn lower_covers(&self, y: u32) -> impl Iterator<Item = u32> + '_ {
        [self.s, self.t]
            .into_iter()
            .filter_map(move |d| y.checked_sub(d))
            .filter(move |&x| self.contains(x))
    }

    /// Elements covering `x`.
    pub fn upper_covers(&self, x: u32) -> impl Iterator<Item = u32> + '_ {
        [self.s, self.t]
            .into_iter()
            .map(move |d| x + d)
            .filter(move |&y| self.contains(y))
    }

    /// All cover pairs `(x, y)`, sorted.
    pub fn covers(&self) -> Vec<(u32, u32)> {
        let mut pairs: Vec<(u32, u32)> = self
            .elements
            .iter()
            .flat_map(|&y| self.lower_covers(y).map(move |x| (x, y)))
            .collect();
        pairs.sort_unstable();
        pairs
    }

    pub fn minimals(&self) -> Vec<u32> {
        self.elements
            .iter()
            .zip(&self.ranks)
            .filter(|(_, &rank)| rank == 0)
            .map(|(&x, _)| x)
            .collect()
    }

    /// Length of the longest chain from a minimal element up to `x`.
    pub fn rank(&self, x: u32) -> Option<u32> {
        self.index_of(x).map(|i| self.ranks[i])
    }

    pub fn is_order_ideal(&self, members: &[u32]) -> bool {
        members
            .iter()
            .all(|&y| self.contains(y) && self.lower_covers(y).all(|x| members.contains(&x)))
    }

    /// Hasse diagram in DOT: edges `x -> y` for covers, one `rank=same`
    /// group per rank, drawn bottom to top.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph \"P({},{})\" {{", self.s, self.t).unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        writeln!(out, "  node [shape=circle];").unwrap();
        let height = self.ranks.iter().copied().max();
        for rank in 0..=height.unwrap_or(0) {
            if height.is_none() {
                break;
            }
            let row: Vec<String> = self
                .elements
                .iter()
                .zip(&self.ranks)
                .filter(|(_, &r)| r == rank)
                .map(|(x, _)| x.to_string())
                .collect();
            writeln!(out, "  {{ rank=same; {}; }}", row.join("; ")).unwrap();
        }
        for (x, y) in self.covers() {
            writeln!(out, "  {x} -> {y};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// A downward-closed subset of a [`CorePoset`], members ascending.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderIdeal {
    members: Vec<u32>,
}

impl OrderIdeal {
    /// Wraps a member list; sorts and deduplicates but does not check closure.
    pub fn new(members: impl IntoIterator<Item = u32>) -> Self {
        let mut members: Vec<u32> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        OrderIdeal { members }
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn beta_set(&self) -> BetaSet {
        BetaSet::new(self.members.iter().copied())
            .expect("poset elements are distinct and positive")
    }

    pub fn has_property_p(&self, l: u32) -> Result<bool> {
        has_property_p(&self.members, l)
    }
}

impl Serialize for OrderIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(serializer)
    }
}

/// The core partition whose beta-set is `ideal`.
pub fn ideal_to_partition(ideal: &OrderIdeal) -> Partition {
    ideal.beta_set().to_partition()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Choice {
    Skip,
    Take,
    Forced,
}

/// Depth-first stream of every order ideal of a poset.
///
/// Elements are decided from largest to smallest; an element is forced in
/// once something covering it is in, otherwise it is first left out and
/// later taken. Ideals therefore come out in lexicographic order of their
/// descending member lists: for `P(3,4)` that is `{}`, `{1}`, `{2}`,
/// `{1,2}`, `{1,2,5}`. Memory stays linear in the poset size.
#[derive(Debug, Clone)]
pub struct OrderIdeals {
    descending: Vec<u32>,
    upper: Vec<[Option<usize>; 2]>,
    choice: Vec<Choice>,
    started: bool,
    done: bool,
}

impl OrderIdeals {
    fn new(poset: &CorePoset) -> Self {
        let descending: Vec<u32> = poset.elements.iter().rev().copied().collect();
        let position = |y: u32| descending.binary_search_by(|e| y.cmp(e)).ok();
        let upper = descending
            .iter()
            .map(|&x| {
                let mut slots = [None, None];
                for (slot, y) in slots.iter_mut().zip(poset.upper_covers(x)) {
                    *slot = position(y);
                }
                slots
            })
            .collect();
        OrderIdeals {
            choice: vec![Choice::Skip; descending.len()],
            descending,
            upper,
            started: false,
            done: false,
        }
    }

    fn is_in(&self, idx: usize) -> bool {
        self.choice[idx] != Choice::Skip
    }

    fn descend(&mut self, from: usize) {
        for idx in from..self.descending.len() {
            let forced = self.upper[idx].iter().flatten().any(|&u| self.is_in(u));
            self.choice[idx] = if forced { Choice::Forced } else { Choice::Skip };
        }
    }

    fn current(&self) -> OrderIdeal {
        let members = (0..self.descending.len())
            .rev()
            .filter(|&idx| self.is_in(idx))
            .map(|idx| self.descending[idx])
            .collect();
        OrderIdeal { members }
    }
}

impl Iterator for OrderIdeals {
    type Item = OrderIdeal;

    fn next(&mut self) -> Option<OrderIdeal> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend(0);
            return Some(self.current());
        }
        match self.choice.iter().rposition(|&c| c == Choice::Skip) {
            Some(idx) => {
                self.choice[idx] = Choice::Take;
                self.descend(idx + 1);
                Some(self.current())
            }
            None => {
                self.done = true;
                None
            }
        }
    }
}

pub fn enumerate_order_ideals(poset: &CorePoset) -> OrderIdeals {
    OrderIdeals::new(poset)
}

/// Every `(s, t)`-core, in the order of [`OrderIdeals`].
pub fn enumerate_core_partitions(s: u32, t: u32) -> Result<impl Iterator<Item = Partition>> {
    let poset = CorePoset::new(s, t)?;
    Ok(enumerate_order_ideals(&poset).map(|ideal| ideal_to_partition(&ideal)))
}

/// Least rank-0 element `i < s` of `T_s` missing from `ideal`, or `s` when
/// all of `1..s` are present.
pub fn smallest_missing_rank0(ideal: &OrderIdeal, s: u32) -> u32 {
    assert!(s >= 1, "T_0 has no rank-0 elements");
    (1..s).find(|&i| !ideal.contains(i)).unwrap_or(s)
}

/// `(m, j)` with `n = m*s + j` for an element `n` of `T_s`.
fn staircase_coords(n: u32, s: u32) -> (u32, u32) {
    (n / s, n % s)
}

/// An ideal of `T_s` with smallest missing rank-0 element `split`, cut into
/// the forced prefix `1..split`, an ideal of `T_{split-1}` (the part above
/// the prefix) and an ideal of `T_{s-split}` (the part right of `split`).
///
/// Both relabelings keep the `m` coordinate ordering, so they are
/// increasing maps and take consecutive integers to consecutive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealDecomposition {
    pub s: u32,
    pub split: u32,
    pub prefix: Vec<u32>,
    pub left: OrderIdeal,
    pub right: OrderIdeal,
}

/// `(m, j) -> (m - 1, j - 1)` in `T_{i-1}`, valid for `m >= 1`, `j < i`.
fn to_left(n: u32, s: u32, i: u32) -> u32 {
    let (m, j) = staircase_coords(n, s);
    (m - 1) * (i - 1) + (j - 1)
}

fn from_left(n: u32, s: u32, i: u32) -> u32 {
    let (m, j) = staircase_coords(n, i - 1);
    (m + 1) * s + j + 1
}

/// `(m, j) -> (m, j - i)` in `T_{s-i}`, valid for `j >= m + 1 + i`.
fn to_right(n: u32, s: u32, i: u32) -> u32 {
    let (m, j) = staircase_coords(n, s);
    m * (s - i) + (j - i)
}

fn from_right(n: u32, s: u32, i: u32) -> u32 {
    let (m, j) = staircase_coords(n, s - i);
    m * s + j + i
}

/// Which decomposition part an element of `T_s` falls into, given `split`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Prefix,
    Left,
    Right,
    /// at or above `split` itself; never in an ideal of `J_split`
    Above,
}

pub fn region_of(n: u32, s: u32, split: u32) -> Region {
    let (m, j) = staircase_coords(n, s);
    if j < split {
        if m == 0 {
            Region::Prefix
        } else {
            Region::Left
        }
    } else if j >= m + 1 + split {
        Region::Right
    } else {
        Region::Above
    }
}

impl IdealDecomposition {
    /// Inverse of [`decompose_ideal`].
    pub fn recompose(&self) -> OrderIdeal {
        let (s, i) = (self.s, self.split);
        let left = self.left.members.iter().map(|&n| from_left(n, s, i));
        let right = self.right.members.iter().map(|&n| from_right(n, s, i));
        OrderIdeal::new(self.prefix.iter().copied().chain(left).chain(right))
    }

    /// The three parts with their original `T_s` labels.
    pub fn parts_in_place(&self) -> [Vec<u32>; 3] {
        let (s, i) = (self.s, self.split);
        [
            self.prefix.clone(),
            self.left
                .members
                .iter()
                .map(|&n| from_left(n, s, i))
                .collect(),
            self.right
                .members
                .iter()
                .map(|&n| from_right(n, s, i))
                .collect(),
        ]
    }
}

/// Splits an ideal of `T_s` at its smallest missing rank-0 element.
pub fn decompose_ideal(ideal: &OrderIdeal, s: u32) -> IdealDecomposition {
    let split = smallest_missing_rank0(ideal, s);
    let mut prefix = Vec::new();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for &n in &ideal.members {
        match region_of(n, s, split) {
            Region::Prefix => prefix.push(n),
            Region::Left => left.push(to_left(n, s, split)),
            Region::Right => right.push(to_right(n, s, split)),
            Region::Above => {
                panic!("{n} lies above missing element {split}; not an ideal of T_{s}")
            }
        }
    }
    let decomposition = IdealDecomposition {
        s,
        split,
        prefix,
        left: OrderIdeal { members: left },
        right: OrderIdeal { members: right },
    };
    debug_assert!(parts_are_separated(&decomposition.parts_in_place()));
    decomposition
}

/// True when elements drawn from different parts always differ by more than 1.
pub fn parts_are_separated(parts: &[Vec<u32>]) -> bool {
    parts.iter().enumerate().all(|(a, xs)| {
        parts[a + 1..]
            .iter()
            .all(|ys| xs.iter().all(|&x| ys.iter().all(|&y| x.abs_diff(y) > 1)))
    })
}

/// Number of ideals of `T_s` with property `P_p`, by filtering the full
/// enumeration.
pub fn count_ideals_with_property_enumerated(s: u32, p: u32) -> Result<Natural> {
    if p == 0 {
        return Err(Error::ZeroParameter("p"));
    }
    let poset = CorePoset::staircase(s);
    let mut count = 0u64;
    for ideal in enumerate_order_ideals(&poset) {
        if ideal.has_property_p(p)? {
            count += 1;
        }
    }
    Ok(Natural::from(count))
}

/// `C_{p,r}(k)`, the number of ideals of `T_{kp+r}` with property `P_p`,
/// for `0 <= r < p`, filled by
///
/// `C_{p,0}(k) = sum_{i<k} C_{p,0}(i) C_{p,p-1}(k-i-1)` and
/// `C_{p,r}(k) = sum_{i<=k} C_{p,0}(i) C_{p,r-1}(k-i)` for `r > 0`,
///
/// from `C_{p,r}(0) = 1`.
#[derive(Debug, Clone)]
pub struct PropertyCountTable {
    p: u32,
    rows: Vec<Vec<Natural>>,
}

impl PropertyCountTable {
    /// Table covering every `s <= max_s`.
    pub fn new(p: u32, max_s: u32) -> Result<Self> {
        if p == 0 {
            return Err(Error::ZeroParameter("p"));
        }
        let width = p as usize;
        let max_k = (max_s / p) as usize;
        let mut rows: Vec<Vec<Natural>> = vec![vec![Natural::one(); width]];
        for k in 1..=max_k {
            let mut row = vec![Natural::zero(); width];
            row[0] = (0..k)
                .map(|i| &rows[i][0] * &rows[k - i - 1][width - 1])
                .sum();
            for r in 1..width {
                // the i = 0 and i = k terms read the row being filled
                let mut acc = &rows[0][0] * &row[r - 1];
                acc += &row[0] * &rows[0][r - 1];
                for i in 1..k {
                    acc += &rows[i][0] * &rows[k - i][r - 1];
                }
                row[r] = acc;
            }
            rows.push(row);
        }
        Ok(PropertyCountTable { p, rows })
    }

    /// `C_{p,r}(k)` with `0 <= r < p`.
    pub fn get(&self, k: u32, r: u32) -> Option<&Natural> {
        if r >= self.p {
            return None;
        }
        self.rows.get(k as usize).map(|row| &row[r as usize])
    }

    pub fn for_s(&self, s: u32) -> Option<&Natural> {
        let (k, r) = s.div_rem(&self.p);
        self.get(k, r)
    }
}

/// Number of ideals of `T_s` with property `P_p`, by the recurrence.
pub fn count_ideals_with_property(s: u32, p: u32) -> Result<Natural> {
    let table = PropertyCountTable::new(p, s)?;
    Ok(table.for_s(s).cloned().expect("table covers s"))
}
