//! Coral diagrams: rooted plane trees grown from an `r`-star by placing
//! `p`-stars atop terminal edges.
//!
//! A diagram is stored as its final shape, not as a placement history:
//! the root carries `r` edges, and the top of every edge is either a leaf or
//! the base of a `p`-star, recursively.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::numbers::WeakCompositions;
use crate::{Error, Natural, Result};

/// What sits on top of an edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Leaf,
    /// A `p`-star whose `p` edges carry these branches, leftmost first.
    Star(Vec<Branch>),
}

impl Branch {
    pub fn star_count(&self) -> usize {
        match self {
            Branch::Leaf => 0,
            Branch::Star(children) => 1 + children.iter().map(Branch::star_count).sum::<usize>(),
        }
    }

    fn is_well_formed(&self, p: u32) -> bool {
        match self {
            Branch::Leaf => true,
            Branch::Star(children) => {
                children.len() == p as usize && children.iter().all(|c| c.is_well_formed(p))
            }
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::Leaf => write!(f, "."),
            Branch::Star(children) => {
                write!(f, "[")?;
                for child in children {
                    write!(f, "{child}")?;
                }
                write!(f, "]")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CoralDiagram {
    p: u32,
    root: Vec<Branch>,
}

impl CoralDiagram {
    /// Checks that every star has exactly `p` edges.
    pub fn new(p: u32, root: Vec<Branch>) -> Result<Self> {
        if p == 0 {
            return Err(Error::ZeroParameter("p"));
        }
        if !root.iter().all(|b| b.is_well_formed(p)) {
            return Err(Error::RootArity {
                expected: "p-stars with exactly p edges",
                found: root.len(),
            });
        }
        Ok(CoralDiagram { p, root })
    }

    /// The bare `r`-star.
    pub fn bare(p: u32, r: u32) -> Result<Self> {
        CoralDiagram::new(p, vec![Branch::Leaf; r as usize])
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn root_arity(&self) -> usize {
        self.root.len()
    }

    pub fn root(&self) -> &[Branch] {
        &self.root
    }

    pub fn star_count(&self) -> usize {
        self.root.iter().map(Branch::star_count).sum()
    }

    /// DOT drawing with the root at the bottom; star bases are filled.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph coral {{").unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        writeln!(out, "  node [shape=circle, label=\"\", width=0.18];").unwrap();
        writeln!(out, "  n0 [shape=doublecircle];").unwrap();
        let mut next_id = 1usize;
        for branch in &self.root {
            emit_branch(&mut out, branch, 0, &mut next_id);
        }
        out.push_str("}\n");
        out
    }
}

fn emit_branch(out: &mut String, branch: &Branch, parent: usize, next_id: &mut usize) {
    let id = *next_id;
    *next_id += 1;
    match branch {
        Branch::Leaf => writeln!(out, "  n{id};").unwrap(),
        Branch::Star(_) => writeln!(out, "  n{id} [style=filled, fillcolor=black];").unwrap(),
    }
    writeln!(out, "  n{parent} -> n{id};").unwrap();
    if let Branch::Star(children) = branch {
        for child in children {
            emit_branch(out, child, id, next_id);
        }
    }
}

impl fmt::Display for CoralDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for branch in &self.root {
            write!(f, "{branch}")?;
        }
        write!(f, ">")
    }
}

type Forests = Box<dyn Iterator<Item = Vec<Branch>>>;

/// Every branch carrying exactly `stars` stars.
fn branches(p: u32, stars: u32) -> Box<dyn Iterator<Item = Branch>> {
    if stars == 0 {
        Box::new(std::iter::once(Branch::Leaf))
    } else {
        Box::new(forests(p, p as usize, stars - 1).map(Branch::Star))
    }
}

/// Every sequence of `slots` branches with `stars` stars in total; budgets
/// run through weak compositions in lexicographic order, leftmost first.
fn forests(p: u32, slots: usize, stars: u32) -> Forests {
    Box::new(WeakCompositions::new(stars, slots).flat_map(move |budget| product(p, budget)))
}

fn product(p: u32, budget: Vec<u32>) -> Forests {
    match budget.split_first() {
        None => Box::new(std::iter::once(Vec::new())),
        Some((&first, rest)) => {
            let rest = rest.to_vec();
            Box::new(branches(p, first).flat_map(move |head| {
                product(p, rest.clone()).map(move |mut tail| {
                    tail.insert(0, head.clone());
                    tail
                })
            }))
        }
    }
}

/// Lazy stream of every coral diagram of type `(p, r, k)`, each once.
pub fn enumerate_coral(p: u32, r: u32, k: u32) -> Result<impl Iterator<Item = CoralDiagram>> {
    if p == 0 {
        return Err(Error::ZeroParameter("p"));
    }
    Ok(forests(p, r as usize, k).map(move |root| CoralDiagram { p, root }))
}

/// Number of diagrams of type `(p, r, k)` by counting shapes: a branch with
/// `j > 0` stars is a star over `p` branches holding `j - 1`, and a root of
/// arity `n` splits its budget over `n` branches.
pub fn count_coral(p: u32, r: u32, k: u32) -> Result<Natural> {
    if p == 0 {
        return Err(Error::ZeroParameter("p"));
    }
    let slots = r.max(p) as usize;
    let k = k as usize;
    // forest[n][j]: sequences of n branches with j stars
    let mut branch = vec![Natural::zero(); k + 1];
    let mut forest = vec![vec![Natural::zero(); k + 1]; slots + 1];
    for j in 0..=k {
        branch[j] = if j == 0 {
            Natural::one()
        } else {
            forest[p as usize][j - 1].clone()
        };
        forest[0][j] = if j == 0 {
            Natural::one()
        } else {
            Natural::zero()
        };
        for n in 1..=slots {
            forest[n][j] = (0..=j).map(|i| &branch[i] * &forest[n - 1][j - i]).sum();
        }
    }
    Ok(forest[r as usize][k].clone())
}

/// Splits the root into its leftmost edge and the remaining `r - 1`.
pub fn split_at_root(d: &CoralDiagram) -> Result<(CoralDiagram, CoralDiagram)> {
    if d.root.len() < 2 {
        return Err(Error::RootArity {
            expected: "at least 2",
            found: d.root.len(),
        });
    }
    let (first, rest) = d.root.split_at(1);
    Ok((
        CoralDiagram {
            p: d.p,
            root: first.to_vec(),
        },
        CoralDiagram {
            p: d.p,
            root: rest.to_vec(),
        },
    ))
}

/// Inverse of [`split_at_root`]: `left`'s single edge becomes the leftmost.
pub fn join_at_root(left: &CoralDiagram, right: &CoralDiagram) -> Result<CoralDiagram> {
    if left.p != right.p {
        return Err(Error::ArityMismatch(left.p, right.p));
    }
    if left.root.len() != 1 {
        return Err(Error::RootArity {
            expected: "1",
            found: left.root.len(),
        });
    }
    let mut root = left.root.clone();
    root.extend(right.root.iter().cloned());
    Ok(CoralDiagram { p: left.p, root })
}

/// Contracts the single root edge of a `(p, 1, k)` diagram, `k >= 1`, so the
/// star above it becomes a root of arity `p`.
pub fn contract_root_star(d: &CoralDiagram) -> Result<CoralDiagram> {
    match d.root.as_slice() {
        [Branch::Star(children)] => Ok(CoralDiagram {
            p: d.p,
            root: children.clone(),
        }),
        [Branch::Leaf] => Err(Error::NoStarAtop),
        other => Err(Error::RootArity {
            expected: "1",
            found: other.len(),
        }),
    }
}

/// Inverse of [`contract_root_star`]: puts a new root edge under a root of
/// arity `p`.
pub fn expand_root_star(d: &CoralDiagram) -> Result<CoralDiagram> {
    if d.root.len() != d.p as usize {
        return Err(Error::RootArity {
            expected: "p",
            found: d.root.len(),
        });
    }
    Ok(CoralDiagram {
        p: d.p,
        root: vec![Branch::Star(d.root.clone())],
    })
}
