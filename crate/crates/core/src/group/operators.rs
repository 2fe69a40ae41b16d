//! Weight −1 Rota-Baxter operators on group-likes.
//!
//! On ℚ[G] the operator identity restricted to group-likes reads
//! `B(g)B(h) = B(B(g)·h·B(g)⁻¹·g)`. Everything here works with that form.

use std::collections::BTreeSet;

use super::{GroupMap, GroupTable};
use crate::check::{Check, Witness};
use crate::error::{Error, Result};

/// Default largest group order [`enumerate_group_rb`] will search.
pub const DEFAULT_ENUMERATION_CAP: usize = 12;

/// Environment variable that overrides [`DEFAULT_ENUMERATION_CAP`].
pub const ENUMERATION_CAP_VAR: &str = "RBHOPF_ENUM_CAP";

/// The enumeration cap in effect: `RBHOPF_ENUM_CAP` if set and valid,
/// otherwise [`DEFAULT_ENUMERATION_CAP`].
pub fn enumeration_cap() -> usize {
    std::env::var(ENUMERATION_CAP_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ENUMERATION_CAP)
}

/// `B(g)·h·B(g)⁻¹·g`, the argument on the right-hand side of the identity.
fn twisted(g: &GroupTable, bg: usize, x: usize, h: usize) -> usize {
    g.product(&[bg, h, g.inv(bg), x])
}

/// Checks the group-level identity for every pair, reporting the
/// lexicographically first failing `(g, h)`.
pub fn group_rb_check(g: &GroupTable, f: &GroupMap) -> Check {
    let n = g.order();
    if f.len() != n || f.images.iter().any(|&v| v >= n) {
        return Err(Witness::new(&[], format!("not a total map on a group of order {n}")));
    }
    for x in 0..n {
        let bx = f.apply(x);
        for h in 0..n {
            let lhs = g.mul(bx, f.apply(h));
            let k = twisted(g, bx, x, h);
            let rhs = f.apply(k);
            if lhs != rhs {
                return Err(Witness::new(
                    &[x, h],
                    format!("B({x})B({h}) = {lhs} but B({k}) = {rhs}"),
                ));
            }
        }
    }
    Ok(())
}

/// Partial assignment with an undo trail, shared by both searches.
struct Partial {
    values: Vec<Option<usize>>,
    trail: Vec<usize>,
    queue: Vec<usize>,
}

impl Partial {
    fn new(n: usize) -> Self {
        Partial {
            values: vec![None; n],
            trail: Vec::new(),
            queue: Vec::new(),
        }
    }

    /// Assigns `x ↦ v`; false on conflict with an existing value.
    fn set(&mut self, x: usize, v: usize) -> bool {
        match self.values[x] {
            Some(old) => old == v,
            None => {
                self.values[x] = Some(v);
                self.trail.push(x);
                self.queue.push(x);
                true
            }
        }
    }

    fn mark(&self) -> usize {
        self.trail.len()
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().expect("trail above mark");
            self.values[x] = None;
        }
        self.queue.clear();
    }

    fn first_unassigned(&self) -> Option<usize> {
        self.values.iter().position(Option::is_none)
    }

    fn finished(&self) -> GroupMap {
        GroupMap::new(self.values.iter().map(|v| v.expect("complete")).collect())
    }
}

/// Enforces the pair constraint `B(x)B(y) = B(B(x)·y·B(x)⁻¹·x)` once
/// `B(x)` is known, in whichever direction the known values allow.
fn rb_pair(g: &GroupTable, p: &mut Partial, x: usize, y: usize) -> bool {
    let bx = p.values[x].expect("caller assigned x");
    let k = twisted(g, bx, x, y);
    match (p.values[y], p.values[k]) {
        (Some(by), Some(bk)) => g.mul(bx, by) == bk,
        (Some(by), None) => p.set(k, g.mul(bx, by)),
        (None, Some(bk)) => p.set(y, g.mul(g.inv(bx), bk)),
        (None, None) => true,
    }
}

fn rb_propagate(g: &GroupTable, p: &mut Partial) -> bool {
    let n = g.order();
    while let Some(z) = p.queue.pop() {
        // z in the role of x
        for y in 0..n {
            if !rb_pair(g, p, z, y) {
                return false;
            }
        }
        for x in 0..n {
            let Some(bx) = p.values[x] else { continue };
            // z in the role of y
            if !rb_pair(g, p, x, z) {
                return false;
            }
            // z in the role of the twisted argument: y = B(x)⁻¹·z·x⁻¹·B(x)
            let y = g.product(&[g.inv(bx), z, g.inv(x), bx]);
            if !rb_pair(g, p, x, y) {
                return false;
            }
        }
    }
    true
}

/// Every weight −1 operator on `g`, in lexicographic order of image tuples.
///
/// Backtracking over the smallest unassigned element with `B(e) = e` forced
/// and every pair constraint propagated as soon as it becomes decidable.
pub fn enumerate_group_rb(g: &GroupTable, cap: usize) -> Result<Vec<GroupMap>> {
    if g.order() > cap {
        return Err(Error::CapExceeded {
            what: "group order",
            value: g.order(),
            cap,
        });
    }
    let mut p = Partial::new(g.order());
    let mut out = Vec::new();
    if p.set(g.identity(), g.identity()) && rb_propagate(g, &mut p) {
        search(g, &mut p, &mut out, &rb_propagate);
    }
    out.sort();
    out.dedup();
    debug_assert!(out.iter().all(|f| group_rb_check(g, f).is_ok()));
    Ok(out)
}

fn search(
    g: &GroupTable,
    p: &mut Partial,
    out: &mut Vec<GroupMap>,
    propagate: &dyn Fn(&GroupTable, &mut Partial) -> bool,
) {
    let Some(x) = p.first_unassigned() else {
        out.push(p.finished());
        return;
    };
    for v in 0..g.order() {
        let mark = p.mark();
        if p.set(x, v) && propagate(g, p) {
            search(g, p, out, propagate);
        }
        p.undo_to(mark);
    }
}

fn hom_propagate(g: &GroupTable, p: &mut Partial) -> bool {
    let n = g.order();
    while let Some(z) = p.queue.pop() {
        let fz = p.values[z].expect("queued elements are assigned");
        for y in 0..n {
            // f(zy) = f(z)f(y) and f(yz) = f(y)f(z), solved for whichever side is open
            for (a, b, left) in [(z, y, true), (y, z, false)] {
                let ab = g.mul(a, b);
                let ok = match (p.values[y], p.values[ab]) {
                    (Some(fy), Some(fab)) => fab == if left { g.mul(fz, fy) } else { g.mul(fy, fz) },
                    (Some(fy), None) => p.set(ab, if left { g.mul(fz, fy) } else { g.mul(fy, fz) }),
                    (None, Some(fab)) => p.set(
                        y,
                        if left {
                            g.mul(g.inv(fz), fab)
                        } else {
                            g.mul(fab, g.inv(fz))
                        },
                    ),
                    (None, None) => true,
                };
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Every group endomorphism of `g`, in lexicographic order of image tuples.
pub fn enumerate_endomorphisms(g: &GroupTable) -> Vec<GroupMap> {
    let mut p = Partial::new(g.order());
    let mut out = Vec::new();
    if p.set(g.identity(), g.identity()) && hom_propagate(g, &mut p) {
        search(g, &mut p, &mut out, &hom_propagate);
    }
    out.sort();
    debug_assert!(out.iter().all(|f| g.is_homomorphism(f)));
    out
}

/// Bijective endomorphisms.
pub fn automorphisms(g: &GroupTable) -> Vec<GroupMap> {
    enumerate_endomorphisms(g)
        .into_iter()
        .filter(|f| f.images.iter().collect::<BTreeSet<_>>().len() == g.order())
        .collect()
}

/// For abelian `g` the operator identity collapses to `B(gh) = B(g)B(h)`;
/// this compares the two enumerations.
pub fn abelian_rb_equals_endomorphisms(g: &GroupTable, cap: usize) -> Result<bool> {
    if !g.is_abelian() {
        return Err(Error::Precondition(format!("{} is not abelian", g.name())));
    }
    Ok(enumerate_group_rb(g, cap)? == enumerate_endomorphisms(g))
}

/// Number of orbits of `ops` under conjugation `B ↦ α∘B∘α⁻¹` by automorphisms.
/// `ops` should be closed under that action, as a full enumeration is.
pub fn operator_orbit_count(g: &GroupTable, ops: &[GroupMap]) -> usize {
    let auts = automorphisms(g);
    let inverses: Vec<Vec<usize>> = auts
        .iter()
        .map(|a| {
            let mut inv = vec![0; g.order()];
            for (x, &ax) in a.images.iter().enumerate() {
                inv[ax] = x;
            }
            inv
        })
        .collect();
    let mut seen = BTreeSet::new();
    let mut orbits = 0;
    for b in ops {
        if seen.contains(b) {
            continue;
        }
        orbits += 1;
        for (a, a_inv) in auts.iter().zip(&inverses) {
            let conj = GroupMap::new((0..g.order()).map(|x| a.apply(b.apply(a_inv[x]))).collect());
            seen.insert(conj);
        }
    }
    orbits
}

/// Group-level tilde operator `g ↦ g·B(g⁻¹)`.
pub fn tilde_group_map(g: &GroupTable, b: &GroupMap) -> GroupMap {
    GroupMap::new((0..g.order()).map(|x| g.mul(x, b.apply(g.inv(x)))).collect())
}
