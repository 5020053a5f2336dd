//! Brute-force reference computations for the integration suites. Nothing
//! here calls into the library's enumeration code.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Hook lengths by walking each box's arm and leg.
pub fn hooks_by_walking(parts: &[u32]) -> Vec<Vec<u32>> {
    (0..parts.len())
        .map(|i| {
            (0..parts[i] as usize)
                .map(|j| {
                    let right = parts[i] as usize - j - 1;
                    let below = (i + 1..parts.len())
                        .filter(|&r| parts[r] as usize > j)
                        .count();
                    (1 + right + below) as u32
                })
                .collect()
        })
        .collect()
}

pub fn is_core_by_walking(parts: &[u32], t: u32) -> bool {
    hooks_by_walking(parts).iter().flatten().all(|h| h % t != 0)
}

/// Every partition with parts in `step, 2*step, ...` whose corner hook
/// `parts[0] + len - 1` is at most `max_hook`.
pub fn partitions_with_corner_hook(max_hook: u32, step: u32) -> Vec<Vec<u32>> {
    fn extend(prefix: &mut Vec<u32>, cap: u32, max_hook: u32, step: u32, out: &mut Vec<Vec<u32>>) {
        out.push(prefix.clone());
        let first = prefix.first().copied();
        let mut part = step;
        while part <= cap {
            let head = first.unwrap_or(part);
            // corner hook after appending: head + (len + 1) - 1
            if head + prefix.len() as u32 > max_hook {
                break;
            }
            prefix.push(part);
            extend(prefix, part, max_hook, step, out);
            prefix.pop();
            part += step;
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_hook, max_hook, step, &mut out);
    out
}

/// All `(s, t)`-cores, via the fact that every hook of a core avoids the
/// semigroup `<s, t>`, so the corner hook is at most `st - s - t`.
pub fn brute_force_cores(s: u32, t: u32, step: u32) -> BTreeSet<Vec<u32>> {
    let frobenius = (s * t).saturating_sub(s + t);
    partitions_with_corner_hook(frobenius.max(1), step)
        .into_iter()
        .filter(|parts| is_core_by_walking(parts, s) && is_core_by_walking(parts, t))
        .collect()
}

/// Gaps of `<s, t>` by trial representation.
pub fn semigroup_gaps(s: u32, t: u32) -> Vec<u32> {
    let limit = s * t;
    (1..limit)
        .filter(|&n| !(0..=n / s).any(|a| (n - a * s) % t == 0))
        .collect()
}

/// Order ideals of the gap poset by testing every subset.
pub fn brute_force_ideals(s: u32, t: u32) -> BTreeSet<Vec<u32>> {
    let gaps = semigroup_gaps(s, t);
    assert!(gaps.len() <= 20, "too many subsets");
    (0u32..1 << gaps.len())
        .map(|mask| {
            gaps.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &g)| g)
                .collect::<Vec<u32>>()
        })
        .filter(|set| {
            set.iter().all(|&y| {
                [s, t]
                    .iter()
                    .all(|&d| y < d || !gaps.contains(&(y - d)) || set.contains(&(y - d)))
            })
        })
        .collect()
}

/// Maximal runs of consecutive integers, naively.
pub fn property_p_naive(set: &[u32], l: u32) -> bool {
    let set: BTreeSet<u32> = set.iter().copied().collect();
    set.iter()
        .filter(|&&x| x == 0 || !set.contains(&(x - 1)))
        .all(|&start| {
            let mut len = 0;
            while set.contains(&(start + len)) {
                len += 1;
            }
            len % l == 0
        })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    Leaf,
    Star(Vec<Tree>),
}

/// Coral diagrams grown by literally placing `p`-stars on terminal edges
/// one at a time, in every possible order, deduplicating shapes.
pub fn coral_by_placement(p: u32, r: u32, k: u32) -> BTreeSet<Vec<Tree>> {
    fn leaves(trees: &[Tree]) -> usize {
        trees
            .iter()
            .map(|t| match t {
                Tree::Leaf => 1,
                Tree::Star(c) => leaves(c),
            })
            .sum()
    }
    fn place(trees: &[Tree], mut target: usize, p: u32) -> (Vec<Tree>, usize) {
        let mut out = Vec::with_capacity(trees.len());
        for tree in trees {
            match tree {
                Tree::Leaf if target == 0 => {
                    out.push(Tree::Star(vec![Tree::Leaf; p as usize]));
                    target = usize::MAX;
                }
                Tree::Leaf => {
                    out.push(Tree::Leaf);
                    target = target.wrapping_sub(1);
                }
                Tree::Star(children) => {
                    let (c, rest) = place(children, target, p);
                    out.push(Tree::Star(c));
                    target = rest;
                }
            }
        }
        (out, target)
    }
    let mut level: BTreeSet<Vec<Tree>> = BTreeSet::from([vec![Tree::Leaf; r as usize]]);
    for _ in 0..k {
        level = level
            .iter()
            .flat_map(|trees| (0..leaves(trees)).map(move |i| place(trees, i, p).0))
            .collect();
    }
    level
}

/// Dyck words of semilength `k`.
pub fn dyck_count(k: u32) -> u64 {
    let len = 2 * k;
    (0u64..1 << len)
        .filter(|word| {
            let mut height = 0i32;
            (0..len).all(|bit| {
                height += if word >> bit & 1 == 1 { 1 } else { -1 };
                height >= 0
            }) && height == 0
        })
        .count() as u64
}

pub fn binomial_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row[k as usize]
}

pub fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
