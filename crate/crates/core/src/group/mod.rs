//! Finite groups as Cayley tables.
//!
//! Group algebras ℚ[G] are the only source of nontrivial examples, so the
//! tables here drive everything downstream. Element 0 is not assumed to be
//! the identity for user-supplied tables, but every built-in constructor
//! puts the identity first.

mod catalog;
mod operators;

use std::fmt;

use crate::check::Witness;
use crate::error::{Error, Result};

pub use catalog::{catalog, catalog_group, CATALOG_NAMES};
pub use operators::{
    abelian_rb_equals_endomorphisms, automorphisms, enumerate_endomorphisms, enumerate_group_rb, enumeration_cap,
    group_rb_check, operator_orbit_count, tilde_group_map, DEFAULT_ENUMERATION_CAP, ENUMERATION_CAP_VAR,
};

/// A finite group given by its full multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    name: String,
    order: usize,
    mult: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

/// A total function G → G, stored as its image tuple.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupMap {
    pub images: Vec<usize>,
}

impl GroupMap {
    pub fn new(images: Vec<usize>) -> Self {
        GroupMap { images }
    }

    pub fn identity(g: &GroupTable) -> Self {
        GroupMap::new((0..g.order()).collect())
    }

    pub fn constant(g: &GroupTable, value: usize) -> Self {
        GroupMap::new(vec![value; g.order()])
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Parses a comma- or whitespace-separated image tuple such as `0,3,0,3`.
    pub fn parse(s: &str) -> Result<Self> {
        let images = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad image {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupMap { images })
    }
}

impl fmt::Display for GroupMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl GroupTable {
    /// Validates a raw table; the error names the first violated axiom.
    pub fn from_cayley_table(name: impl Into<String>, rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidGroup {
                axiom: "non-empty",
                witness: Witness::new(&[], "empty table"),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup {
                    axiom: "square table",
                    witness: Witness::new(&[i], format!("row has {} entries, expected {n}", row.len())),
                });
            }
            if let Some(j) = row.iter().position(|&v| v >= n) {
                return Err(Error::InvalidGroup {
                    axiom: "closure",
                    witness: Witness::new(&[i, j], format!("entry {} is not an element", row[j])),
                });
            }
        }
        latin_square(&rows)?;
        let identity = (0..n)
            .find(|&e| (0..n).all(|i| rows[e][i] == i && rows[i][e] == i))
            .ok_or_else(|| Error::InvalidGroup {
                axiom: "identity",
                witness: Witness::new(&[], "no two-sided identity element"),
            })?;
        let inverse = (0..n)
            .map(|i| {
                (0..n)
                    .find(|&j| rows[i][j] == identity && rows[j][i] == identity)
                    .ok_or_else(|| Error::InvalidGroup {
                        axiom: "inverse",
                        witness: Witness::new(&[i], "no two-sided inverse"),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if rows[rows[a][b]][c] != rows[a][rows[b][c]] {
                        return Err(Error::InvalidGroup {
                            axiom: "associativity",
                            witness: Witness::new(&[a, b, c], "(ab)c != a(bc)"),
                        });
                    }
                }
            }
        }
        Ok(GroupTable {
            name: name.into(),
            order: n,
            mult: rows.into_iter().flatten().collect(),
            identity,
            inverse,
        })
    }

    /// ℤ/n with `i·j = (i + j) mod n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("cyclic group of order 0".into()));
        }
        Self::from_fn(format!("Z{n}"), n, |i, j| (i + j) % n)
    }

    /// Dihedral group of order 2n: index k is rᵏ, index n + k is s·rᵏ.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("dihedral group D0".into()));
        }
        let split = |x: usize| (x / n, x % n);
        Self::from_fn(format!("D{n}"), 2 * n, |x, y| {
            let ((sa, a), (sb, b)) = (split(x), split(y));
            // s^sa r^a s^sb r^b = s^(sa+sb) r^(±a + b)
            let rot = if sb == 1 { (b + n - a) % n } else { (a + b) % n };
            ((sa + sb) % 2) * n + rot
        })
    }

    /// Symmetric group on `n ≤ 4` points; permutations in lexicographic
    /// order, product `(pq)(k) = p(q(k))`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 4 {
            return Err(Error::Precondition(format!("symmetric group S{n} is outside 1..=4")));
        }
        let perms = permutations(n);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed under composition");
        Self::from_fn(format!("S{n}"), perms.len(), |a, b| {
            let c: Vec<usize> = (0..n).map(|k| perms[a][perms[b][k]]).collect();
            index(&c)
        })
    }

    /// Quaternion group: indices 0..8 are 1, -1, i, -i, j, -j, k, -k.
    pub fn quaternion8() -> Self {
        // unit products: (unit, sign) for units 1, i, j, k
        const TABLE: [[(usize, bool); 4]; 4] = [
            [(0, false), (1, false), (2, false), (3, false)],
            [(1, false), (0, true), (3, false), (2, true)],
            [(2, false), (3, true), (0, true), (1, false)],
            [(3, false), (2, false), (1, true), (0, true)],
        ];
        Self::from_fn("Q8", 8, |x, y| {
            let (u, su) = (x / 2, x % 2 == 1);
            let (v, sv) = (y / 2, y % 2 == 1);
            let (w, sw) = TABLE[u][v];
            2 * w + usize::from(su ^ sv ^ sw)
        })
        .expect("Q8 table is a group")
    }

    /// Direct product; element `(a, b)` has index `a·|B| + b`.
    pub fn direct_product(a: &GroupTable, b: &GroupTable) -> Self {
        let m = b.order;
        GroupTable::from_fn(format!("{}x{}", a.name, b.name), a.order * m, |x, y| {
            a.mul(x / m, y / m) * m + b.mul(x % m, y % m)
        })
        .expect("direct product of groups is a group")
    }

    fn from_fn(name: impl Into<String>, n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
        Self::from_cayley_table(name, rows)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }

    /// Left-to-right product of `xs`.
    pub fn product(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.identity, |acc, &x| self.mul(acc, x))
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.mult.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn is_homomorphism(&self, f: &GroupMap) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| f.apply(self.mul(a, b)) == self.mul(f.apply(a), f.apply(b))))
    }

    /// Parses the text format: a line `order n`, then `n` rows of `n`
    /// whitespace-separated 0-based indices. Blank lines and `#` comments
    /// are ignored.
    pub fn parse_cayley(name: impl Into<String>, text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty Cayley table file".into()))?;
        let n = header
            .strip_prefix("order")
            .map(str::trim)
            .and_then(|s| s.parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(format!("expected `order n`, found {header:?}")))?;
        let rows: Vec<Vec<usize>> = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        if rows.len() != n {
            return Err(Error::Parse(format!(
                "header says order {n} but found {} rows",
                rows.len()
            )));
        }
        Self::from_cayley_table(name, rows)
    }

    pub fn to_cayley_text(&self) -> String {
        let mut out = format!("order {}\n", self.order);
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupTable({}, order {})", self.name, self.order)
    }
}

fn latin_square(rows: &[Vec<usize>]) -> Result<()> {
    let n = rows.len();
    for (i, row) in rows.iter().enumerate() {
        let mut seen = vec![false; n];
        for (j, &v) in row.iter().enumerate() {
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidGroup {
                    axiom: "Latin square",
                    witness: Witness::new(&[i, j], format!("row {i} repeats {v}")),
                });
            }
        }
    }
    for j in 0..n {
        let mut seen = vec![false; n];
        for (i, row) in rows.iter().enumerate() {
            if std::mem::replace(&mut seen[row[j]], true) {
                return Err(Error::InvalidGroup {
                    axiom: "Latin square",
                    witness: Witness::new(&[i, j], format!("column {j} repeats {}", row[j])),
                });
            }
        }
    }
    Ok(())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        let z1 = GroupTable::cyclic(1).unwrap();
        assert_eq!(z1.order(), 1);
        assert_eq!(z1.identity(), 0);
        assert_eq!(GroupTable::cyclic(2).unwrap().inv(1), 1);
        assert_eq!(GroupTable::cyclic(6).unwrap().element_order(5), 6);
        assert!(GroupTable::cyclic(0).is_err());
    }

    #[test]
    fn symmetric_three_is_nonabelian() {
        let s3 = GroupTable::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.identity(), 0);
        assert_eq!(GroupTable::symmetric(4).unwrap().order(), 24);
        assert!(GroupTable::symmetric(5).is_err());
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = GroupTable::quaternion8();
        let involutions = (0..8).filter(|&x| q.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
        assert!(!q.is_abelian());
    }

    #[test]
    fn dihedral_relations() {
        let d4 = GroupTable::dihedral(4).unwrap();
        assert_eq!(d4.order(), 8);
        let (r, s) = (1, 4);
        // s r s = r⁻¹
        assert_eq!(d4.product(&[s, r, s]), d4.inv(r));
        assert_eq!(d4.element_order(r), 4);
        assert!(!d4.is_abelian());
    }

    #[test]
    fn repeated_row_names_latin_square() {
        let err = GroupTable::from_cayley_table("bad", vec![vec![0, 1, 2], vec![0, 1, 2], vec![2, 0, 1]]).unwrap_err();
        assert!(
            matches!(
                err,
                Error::InvalidGroup {
                    axiom: "Latin square",
                    ..
                }
            ),
            "{err}"
        );
    }

    #[test]
    fn non_associative_quasigroup_rejected() {
        // A Latin square with identity 0 and inverses that is not associative.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = GroupTable::from_cayley_table("loop", rows).unwrap_err();
        assert!(
            matches!(
                err,
                Error::InvalidGroup {
                    axiom: "associativity",
                    ..
                }
            ),
            "{err}"
        );
    }

    #[test]
    fn missing_identity_rejected() {
        let err = GroupTable::from_cayley_table("negated sum", vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]])
            .unwrap_err();
        assert!(matches!(err, Error::InvalidGroup { axiom: "identity", .. }), "{err}");
    }

    #[test]
    fn cayley_text_roundtrip() {
        let d3 = GroupTable::dihedral(3).unwrap();
        let text = d3.to_cayley_text();
        let back = GroupTable::parse_cayley("D3", &text).unwrap();
        assert_eq!(back, d3);
        assert!(GroupTable::parse_cayley("x", "order 2\n0 1\n").is_err());
        assert!(GroupTable::parse_cayley("x", "ord 1\n0\n").is_err());
    }

    #[test]
    fn direct_product_order_and_commutativity() {
        let z2 = GroupTable::cyclic(2).unwrap();
        let v4 = GroupTable::direct_product(&z2, &z2);
        assert_eq!(v4.name(), "Z2xZ2");
        assert!(v4.is_abelian());
        assert!((1..4).all(|x| v4.element_order(x) == 2));
    }
}
