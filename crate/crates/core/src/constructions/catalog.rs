use super::geometry::{
    affine_plane_group, ag_lines, biplane11, biplane11_group, inversive_plane4,
    inversive_plane4_group, pg_lines, projective_plane_group,
};
use super::groups::{wreath, young, BundledGroup};
use super::partitions::{
    maximal_meet, transversal_pairs, transversal_triples, transversals_of_pairs, unions_of_cells,
    within_two_cells, UniformPartition,
};
use super::witt::{m11_twelve_point_design, witt};
use crate::design::Design;
use crate::error::{Error, Result};
use crate::group::PermGroup;

/// Parameters accepted by [`construct`]; unused fields are ignored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstructionParams {
    pub q: Option<usize>,
    pub n: Option<usize>,
    pub v: Option<usize>,
    pub k: Option<usize>,
    pub y: Option<Vec<usize>>,
    pub a: Option<usize>,
    pub b: Option<usize>,
}

/// Construction names understood by [`construct`].
pub const CONSTRUCTIONS: [&str; 12] = [
    "pg-lines",
    "ag-lines",
    "biplane",
    "inversive-plane",
    "witt",
    "m11-hexads",
    "example1",
    "example2",
    "example3",
    "example4",
    "example5",
    "disjoint-blocks",
];

fn need(value: Option<usize>, flag: &str, name: &str) -> Result<usize> {
    value.ok_or_else(|| Error::Precondition(format!("{name} needs --{flag}")))
}

/// A named design together with the group it is paired with.
pub fn construct(name: &str, p: &ConstructionParams) -> Result<(Design, PermGroup)> {
    match name {
        "pg-lines" => {
            let q = need(p.q, "q", name)?;
            Ok((pg_lines(q)?, projective_plane_group(q, false)?))
        }
        "ag-lines" => {
            let q = p.q.unwrap_or(4);
            Ok((ag_lines(q)?, affine_plane_group(q, true)?))
        }
        "biplane" => Ok((biplane11()?, biplane11_group()?)),
        "inversive-plane" => Ok((inversive_plane4()?, inversive_plane4_group()?)),
        "witt" => {
            let n = need(p.n, "n", name)?;
            let g = match n {
                24 => BundledGroup::M24,
                23 => BundledGroup::M23,
                22 => BundledGroup::M22,
                12 => BundledGroup::M12,
                _ => return Err(Error::Unsupported(format!("no Witt design on {n} points"))),
            };
            Ok((witt(n)?, g.load()?))
        }
        "m11-hexads" => Ok((m11_twelve_point_design()?, BundledGroup::M11On12.load()?)),
        "example1" => {
            let v = need(p.v, "v", name)?;
            let k = need(p.k, "k", name)?;
            let y = p
                .y
                .clone()
                .ok_or_else(|| Error::Precondition(format!("{name} needs --y")))?;
            let rest: Vec<usize> = (0..v).filter(|x| !y.contains(x)).collect();
            Ok((maximal_meet(v, k, &y)?, young(v, &[y, rest])?))
        }
        "example2" => {
            let a = need(p.a, "a", name)?;
            let k = need(p.k, "k", name)?;
            Ok((within_two_cells(a, k)?, wreath(a, 2)?))
        }
        "example3" => {
            let b = need(p.b, "b", name)?;
            let k = need(p.k, "k", name)?;
            Ok((transversals_of_pairs(b, k)?, wreath(2, b)?))
        }
        "example4" => {
            let a = need(p.a, "a", name)?;
            let b = need(p.b, "b", name)?;
            Ok((transversal_triples(a, b)?, wreath(a, b)?))
        }
        "example5" => {
            let a = need(p.a, "a", name)?;
            let b = need(p.b, "b", name)?;
            Ok((transversal_pairs(a, b)?, wreath(a, b)?))
        }
        "disjoint-blocks" => {
            let a = need(p.a, "a", name)?;
            let b = need(p.b, "b", name)?;
            Ok((unions_of_cells(&UniformPartition::standard(a, b)?, 1)?, wreath(a, b)?))
        }
        _ => Err(Error::Unsupported(format!(
            "unknown construction {name:?}; expected one of {}",
            CONSTRUCTIONS.join(", ")
        ))),
    }
}

/// A shipped example: label, design and paired group.
#[derive(Debug, Clone)]
pub struct BundledExample {
    pub label: String,
    pub design: Design,
    pub group: PermGroup,
}

/// Every design the crate can build with its paired group, at fixed small parameters.
pub fn bundled_examples() -> Result<Vec<BundledExample>> {
    let some = |x: usize| Some(x);
    let specs: Vec<(&str, ConstructionParams)> = vec![
        ("pg-lines", ConstructionParams { q: some(2), ..Default::default() }),
        ("pg-lines", ConstructionParams { q: some(3), ..Default::default() }),
        ("pg-lines", ConstructionParams { q: some(4), ..Default::default() }),
        ("ag-lines", ConstructionParams { q: some(4), ..Default::default() }),
        ("biplane", ConstructionParams::default()),
        ("inversive-plane", ConstructionParams::default()),
        ("witt", ConstructionParams { n: some(12), ..Default::default() }),
        ("witt", ConstructionParams { n: some(22), ..Default::default() }),
        ("witt", ConstructionParams { n: some(23), ..Default::default() }),
        ("witt", ConstructionParams { n: some(24), ..Default::default() }),
        ("m11-hexads", ConstructionParams::default()),
        (
            "example1",
            ConstructionParams { v: some(8), k: some(3), y: Some(vec![0, 1]), ..Default::default() },
        ),
        (
            "example1",
            ConstructionParams { v: some(7), k: some(2), y: Some(vec![0, 1, 2, 3]), ..Default::default() },
        ),
        (
            "example1",
            ConstructionParams { v: some(9), k: some(4), y: Some(vec![0, 1, 2]), ..Default::default() },
        ),
        ("example2", ConstructionParams { a: some(4), k: some(4), ..Default::default() }),
        ("example2", ConstructionParams { a: some(4), k: some(2), ..Default::default() }),
        ("example2", ConstructionParams { a: some(5), k: some(3), ..Default::default() }),
        ("example3", ConstructionParams { b: some(4), k: some(2), ..Default::default() }),
        ("example3", ConstructionParams { b: some(4), k: some(4), ..Default::default() }),
        ("example3", ConstructionParams { b: some(5), k: some(3), ..Default::default() }),
        ("example4", ConstructionParams { a: some(3), b: some(3), ..Default::default() }),
        ("example4", ConstructionParams { a: some(3), b: some(4), ..Default::default() }),
        ("example5", ConstructionParams { a: some(3), b: some(2), ..Default::default() }),
        ("example5", ConstructionParams { a: some(3), b: some(3), ..Default::default() }),
        ("disjoint-blocks", ConstructionParams { a: some(3), b: some(3), ..Default::default() }),
        ("disjoint-blocks", ConstructionParams { a: some(4), b: some(2), ..Default::default() }),
    ];
    specs
        .into_iter()
        .map(|(name, p)| {
            let (design, group) = construct(name, &p)?;
            Ok(BundledExample {
                label: label(name, &p),
                design,
                group,
            })
        })
        .collect()
}

fn label(name: &str, p: &ConstructionParams) -> String {
    let mut parts = vec![name.to_string()];
    let fields = [("q", p.q), ("n", p.n), ("v", p.v), ("k", p.k), ("a", p.a), ("b", p.b)];
    for (flag, value) in fields {
        if let Some(x) = value {
            parts.push(format!("{flag}={x}"));
        }
    }
    if let Some(y) = &p.y {
        let ys: Vec<String> = y.iter().map(usize::to_string).collect();
        parts.push(format!("y={}", ys.join(",")));
    }
    parts.join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_bundled_group_preserves_its_design() {
        for ex in bundled_examples().unwrap() {
            ex.group.preserves(&ex.design).unwrap_or_else(|e| panic!("{}: {e}", ex.label));
        }
    }

    #[test]
    fn missing_parameters_are_reported() {
        assert!(construct("pg-lines", &ConstructionParams::default()).is_err());
        assert!(construct("nonsense", &ConstructionParams::default()).is_err());
    }
}
