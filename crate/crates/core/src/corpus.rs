//! The built-in groups of order at most 8.

use crate::algebra::Group;

/// Names of the corpus groups in their canonical order.
pub const NAMES: [&str; 13] = [
    "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "V4", "S3", "D4", "Q8", "Z2xZ4", "Z2^3",
];

/// Builds a corpus group by name (case-insensitive).
pub fn group(name: &str) -> Option<Group> {
    let lower = name.to_ascii_lowercase();
    let g = match lower.as_str() {
        "z1" | "trivial" => Group::cyclic(1),
        "v4" | "z2xz2" => Group::elementary_abelian_2(2),
        "s3" => Group::symmetric(3),
        "s4" => Group::symmetric(4),
        "d4" => Group::dihedral_square(),
        "q8" => Group::quaternion(),
        "z2xz4" => Group::direct_product(&Group::cyclic(2), &Group::cyclic(4)),
        "z2^3" | "z2xz2xz2" => Group::elementary_abelian_2(3),
        _ => {
            let n: usize = lower.strip_prefix('z')?.parse().ok()?;
            if n == 0 {
                return None;
            }
            Group::cyclic(n)
        }
    };
    Some(g)
}

/// The thirteen corpus groups with their names.
pub fn all() -> Vec<(&'static str, Group)> {
    NAMES
        .iter()
        .map(|&name| (name, group(name).expect("corpus names resolve")))
        .collect()
}

/// File stem used for a corpus group's table file.
pub fn file_stem(name: &str) -> String {
    match name {
        "Z2^3" => "z2xz2xz2".to_string(),
        other => other.to_ascii_lowercase(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_groups_certify() {
        let groups = all();
        assert_eq!(groups.len(), 13);
        for (name, g) in &groups {
            assert!(g.audit(), "{name}");
            assert_eq!(g.identity(), 0, "{name}");
            assert!(g.order() <= 8);
        }
        assert!(group("nonsense").is_none());
        assert!(group("z0").is_none());
        assert_eq!(file_stem("Z2^3"), "z2xz2xz2");
    }
}
