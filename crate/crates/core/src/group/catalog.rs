use super::GroupTable;
use crate::error::{Error, Result};

/// Names of the built-in groups, in catalog order.
pub const CATALOG_NAMES: &[&str] = &[
    "Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "S3", "Z7", "Z8", "Z2xZ4", "Z2xZ2xZ2", "D4", "Q8", "Z9", "Z3xZ3",
    "Z10", "D5", "Z11", "Z12", "Z2xZ6", "D6", "S4",
];

const MAX_ORDER: usize = 24;

/// The built-in catalog, ordered by group order.
pub fn catalog() -> Vec<GroupTable> {
    CATALOG_NAMES
        .iter()
        .map(|n| catalog_group(n).expect("catalog names resolve"))
        .collect()
}

/// Resolves a group name.
///
/// Accepts `Zn`, `Dn` (order 2n), `Sn` (n ≤ 4), `Q8`, `V4` and direct
/// products joined by `x`, such as `Z2xZ4`. Orders above 24 are refused.
pub fn catalog_group(name: &str) -> Result<GroupTable> {
    let trimmed = name.trim();
    if trimmed.eq_ignore_ascii_case("V4") {
        return catalog_group("Z2xZ2");
    }
    let factors: Vec<&str> = trimmed.split(['x', 'X']).collect();
    if factors.iter().any(|f| f.is_empty()) {
        return Err(Error::UnknownGroup(name.to_string()));
    }
    let mut order = 1usize;
    let mut group: Option<GroupTable> = None;
    for f in factors {
        let g = factor(f).ok_or_else(|| Error::UnknownGroup(name.to_string()))?;
        order = order.saturating_mul(g.order());
        if order > MAX_ORDER {
            return Err(Error::CapExceeded {
                what: "group order",
                value: order,
                cap: MAX_ORDER,
            });
        }
        group = Some(match group {
            None => g,
            Some(acc) => GroupTable::direct_product(&acc, &g),
        });
    }
    group.ok_or_else(|| Error::UnknownGroup(name.to_string()))
}

fn factor(token: &str) -> Option<GroupTable> {
    if token.eq_ignore_ascii_case("Q8") {
        return Some(GroupTable::quaternion8());
    }
    if !token.is_ascii() {
        return None;
    }
    let (kind, digits) = token.split_at(1);
    let n: usize = digits.parse().ok()?;
    match kind {
        "Z" | "C" if (1..=MAX_ORDER).contains(&n) => GroupTable::cyclic(n).ok(),
        "D" if (1..=MAX_ORDER / 2).contains(&n) => GroupTable::dihedral(n).ok(),
        "S" => GroupTable::symmetric(n).ok(),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_sorted_by_order_and_named_consistently() {
        let groups = catalog();
        assert!(groups.windows(2).all(|w| w[0].order() <= w[1].order()));
        for (g, name) in groups.iter().zip(CATALOG_NAMES) {
            assert_eq!(g.name(), *name);
        }
        assert_eq!(groups.last().unwrap().order(), 24);
    }

    #[test]
    fn names_resolve() {
        assert_eq!(catalog_group("V4").unwrap().name(), "Z2xZ2");
        assert_eq!(catalog_group("D3").unwrap().order(), 6);
        assert!(matches!(catalog_group("Z25"), Err(Error::UnknownGroup(_))));
        assert!(matches!(catalog_group("S4xZ2"), Err(Error::CapExceeded { .. })));
        assert!(matches!(catalog_group("A5"), Err(Error::UnknownGroup(_))));
        assert!(matches!(catalog_group("Z2x"), Err(Error::UnknownGroup(_))));
    }
}
