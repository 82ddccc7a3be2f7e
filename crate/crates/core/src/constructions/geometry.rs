use super::field::FiniteField;
use super::groups::BundledGroup;
use crate::design::Design;
use crate::error::{Error, Result};
use crate::group::{orbit_of_subset, PermGroup};
use crate::johnson::{KSubset, MAX_POINTS};
use crate::perm::Permutation;

type Matrix3 = [[usize; 3]; 3];

/// Points of `PG(2,q)` as normalised homogeneous triples (first nonzero
/// coordinate 1), in lexicographic order.
fn projective_points(f: &FiniteField) -> Vec<[usize; 3]> {
    let q = f.order();
    let mut pts = vec![[0, 0, 1]];
    pts.extend((0..q).map(|z| [0, 1, z]));
    for y in 0..q {
        pts.extend((0..q).map(|z| [1, y, z]));
    }
    pts
}

fn normalise(f: &FiniteField, p: [usize; 3]) -> [usize; 3] {
    let lead = p.iter().copied().find(|&c| c != 0).expect("nonzero vector");
    let inv = f.inv(lead).expect("nonzero");
    p.map(|c| f.mul(c, inv))
}

fn projective_index(f: &FiniteField, p: [usize; 3]) -> usize {
    let q = f.order();
    match normalise(f, p) {
        [0, 0, _] => 0,
        [0, _, z] => 1 + z,
        [_, y, z] => 1 + q + y * q + z,
    }
}

fn plane_size(q: usize) -> Result<usize> {
    let v = q * q + q + 1;
    if v > MAX_POINTS {
        return Err(Error::Unsupported(format!(
            "PG(2,{q}) has {v} points, more than {MAX_POINTS}"
        )));
    }
    Ok(v)
}

/// Lines of `PG(2,q)`: `v = q²+q+1`, `k = q+1`.
pub fn pg_lines(q: usize) -> Result<Design> {
    let v = plane_size(q)?;
    let f = FiniteField::new(q)?;
    let pts = projective_points(&f);
    let lines: Vec<KSubset> = pts
        .iter()
        .map(|l| {
            let bits = pts.iter().enumerate().fold(0u64, |acc, (i, p)| {
                let dot = (0..3).fold(0, |s, j| f.add(s, f.mul(l[j], p[j])));
                if dot == 0 {
                    acc | 1 << i
                } else {
                    acc
                }
            });
            KSubset::from_bits(bits)
        })
        .collect();
    Design::new(v, q + 1, lines)
}

fn matrix_permutation(f: &FiniteField, pts: &[[usize; 3]], m: &Matrix3) -> Result<Permutation> {
    let images = pts
        .iter()
        .map(|p| {
            let img = [0, 1, 2].map(|i| (0..3).fold(0, |s, j| f.add(s, f.mul(m[i][j], p[j]))));
            projective_index(f, img)
        })
        .collect();
    Permutation::new(images)
}

/// `PGL(3,q)` on the points of `PG(2,q)`, from the elementary matrices
/// `I + E_ij` and `diag(ω,1,1)`; with `semilinear` the Frobenius map is added.
pub fn projective_plane_group(q: usize, semilinear: bool) -> Result<PermGroup> {
    plane_size(q)?;
    let f = FiniteField::new(q)?;
    let pts = projective_points(&f);
    let mut gens = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let mut m: Matrix3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
                m[i][j] = 1;
                gens.push(matrix_permutation(&f, &pts, &m)?);
            }
        }
    }
    if q > 2 {
        let m: Matrix3 = [[f.primitive(), 0, 0], [0, 1, 0], [0, 0, 1]];
        gens.push(matrix_permutation(&f, &pts, &m)?);
    }
    if semilinear && f.degree() > 1 {
        let images = pts
            .iter()
            .map(|p| projective_index(&f, p.map(|c| f.frobenius(c))))
            .collect();
        gens.push(Permutation::new(images)?);
    }
    PermGroup::new(pts.len(), gens)
}

fn affine_size(q: usize) -> Result<usize> {
    if q * q > MAX_POINTS {
        return Err(Error::Unsupported(format!("AG(2,{q}) has more than {MAX_POINTS} points")));
    }
    Ok(q * q)
}

/// Lines of `AG(2,q)`, point `(x,y)` labelled `x·q + y`.
pub fn ag_lines(q: usize) -> Result<Design> {
    let v = affine_size(q)?;
    let f = FiniteField::new(q)?;
    let mut lines = Vec::new();
    for m in 0..q {
        for c in 0..q {
            let bits = (0..q).fold(0u64, |acc, x| acc | 1 << (x * q + f.add(f.mul(m, x), c)));
            lines.push(KSubset::from_bits(bits));
        }
    }
    for c in 0..q {
        lines.push(KSubset::from_bits((0..q).fold(0u64, |acc, y| acc | 1 << (c * q + y))));
    }
    Design::new(v, q, lines)
}

/// `AGL(2,q)`, or `AΓL(2,q)` with `semilinear`, on the points of `AG(2,q)`.
pub fn affine_plane_group(q: usize, semilinear: bool) -> Result<PermGroup> {
    let v = affine_size(q)?;
    let f = FiniteField::new(q)?;
    let perm = |map: &dyn Fn(usize, usize) -> (usize, usize)| {
        let images = (0..v)
            .map(|i| {
                let (x, y) = map(i / q, i % q);
                x * q + y
            })
            .collect();
        Permutation::new(images)
    };
    let w = f.primitive();
    let mut gens = vec![
        perm(&|x, y| (f.add(x, 1), y))?,
        perm(&|x, y| (x, f.add(y, 1)))?,
        perm(&|x, y| (f.add(x, y), y))?,
        perm(&|x, y| (x, f.add(x, y)))?,
    ];
    if q > 2 {
        gens.push(perm(&|x, y| (f.mul(w, x), y))?);
    }
    if semilinear && f.degree() > 1 {
        gens.push(perm(&|x, y| (f.frobenius(x), f.frobenius(y)))?);
    }
    PermGroup::new(v, gens)
}

/// Point label on `PG(1,q)`: `0` is `∞`, `e + 1` is the field element `e`.
fn line_label(f: &FiniteField, x: usize, y: usize) -> usize {
    match f.inv(y) {
        None => 0,
        Some(inv) => f.mul(x, inv) + 1,
    }
}

fn mobius(f: &FiniteField, m: [[usize; 2]; 2]) -> Result<Permutation> {
    let q = f.order();
    let images = (0..=q)
        .map(|label| {
            let (x, y) = if label == 0 { (1, 0) } else { (label - 1, 1) };
            line_label(
                f,
                f.add(f.mul(m[0][0], x), f.mul(m[0][1], y)),
                f.add(f.mul(m[1][0], x), f.mul(m[1][1], y)),
            )
        })
        .collect();
    Permutation::new(images)
}

/// `PGL(2,q)`, or `PΓL(2,q)` with `semilinear`, on the `q+1` points of `PG(1,q)`.
pub fn projective_line_group(q: usize, semilinear: bool) -> Result<PermGroup> {
    if q + 1 > MAX_POINTS {
        return Err(Error::Unsupported(format!("PG(1,{q}) has more than {MAX_POINTS} points")));
    }
    let f = FiniteField::new(q)?;
    let mut gens = vec![
        mobius(&f, [[1, 1], [0, 1]])?,
        mobius(&f, [[0, 1], [1, 0]])?,
    ];
    if q > 2 {
        gens.push(mobius(&f, [[f.primitive(), 0], [0, 1]])?);
    }
    if semilinear && f.degree() > 1 {
        let images = (0..=q)
            .map(|l| if l == 0 { 0 } else { f.frobenius(l - 1) + 1 })
            .collect();
        gens.push(Permutation::new(images)?);
    }
    PermGroup::new(q + 1, gens)
}

/// The 2-(11,5,2) biplane: translates of the squares `{1,3,4,5,9}` mod 11.
pub fn biplane11() -> Result<Design> {
    let base = [1usize, 3, 4, 5, 9];
    let lists: Vec<Vec<usize>> = (0..11)
        .map(|s| base.iter().map(|x| (x + s) % 11).collect())
        .collect();
    Design::from_point_lists(11, 5, &lists)
}

pub fn biplane11_group() -> Result<PermGroup> {
    BundledGroup::L2_11.load()
}

/// Circles of the inversive plane of order 4: images of `GF(4) ∪ {∞}` under `PGL(2,16)`.
pub fn inversive_plane4() -> Result<Design> {
    let f = FiniteField::new(16)?;
    let base = f
        .subfield(4)?
        .into_iter()
        .fold(1u64, |acc, e| acc | 1 << (e + 1));
    let g = projective_line_group(16, false)?;
    Design::new(17, 5, orbit_of_subset(&g, KSubset::from_bits(base)))
}

/// `PΓL(2,16)` on the 17 points of the inversive plane of order 4.
pub fn inversive_plane4_group() -> Result<PermGroup> {
    projective_line_group(16, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn plane_line_counts() {
        for q in [2, 3, 4, 5, 7] {
            let d = pg_lines(q).unwrap();
            assert_eq!(d.len(), q * q + q + 1);
            for (i, a) in d.blocks().iter().enumerate() {
                for b in &d.blocks()[i + 1..] {
                    assert_eq!(a.meet(*b), 1);
                }
            }
            for x in 0..d.v() {
                assert_eq!(d.blocks().iter().filter(|b| b.contains(x)).count(), q + 1);
            }
        }
        assert!(pg_lines(8).is_err());
        assert!(pg_lines(9).is_err());
    }

    #[test]
    fn plane_group_orders() {
        for (q, order) in [(2u64, 168u64), (3, 5616), (4, 60480)] {
            let g = projective_plane_group(q as usize, false).unwrap();
            assert_eq!(g.order(), BigUint::from(order));
            g.preserves(&pg_lines(q as usize).unwrap()).unwrap();
        }
        assert_eq!(
            projective_plane_group(4, true).unwrap().order(),
            BigUint::from(120960u64)
        );
    }

    #[test]
    fn affine_plane() {
        let d = ag_lines(4).unwrap();
        assert_eq!(d.len(), 20);
        let g = affine_plane_group(4, true).unwrap();
        assert_eq!(g.order(), BigUint::from(5760u32));
        g.preserves(&d).unwrap();
        assert_eq!(affine_plane_group(3, false).unwrap().order(), BigUint::from(432u32));
    }

    #[test]
    fn line_groups() {
        for (q, order) in [(4u64, 60u64), (5, 120), (7, 336), (16, 4080)] {
            assert_eq!(projective_line_group(q as usize, false).unwrap().order(), BigUint::from(order));
        }
        assert_eq!(projective_line_group(16, true).unwrap().order(), BigUint::from(16320u32));
        assert_eq!(projective_line_group(9, true).unwrap().order(), BigUint::from(1440u32));
    }

    #[test]
    fn biplane_and_inversive_plane() {
        let b = biplane11().unwrap();
        assert_eq!(b.len(), 11);
        biplane11_group().unwrap().preserves(&b).unwrap();
        let c = inversive_plane4().unwrap();
        assert_eq!(c.len(), 68);
        inversive_plane4_group().unwrap().preserves(&c).unwrap();
    }
}
