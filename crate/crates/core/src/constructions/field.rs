use crate::error::{Error, Result};

const FIELD_DATA: &str = include_str!("../../data/fields.txt");

/// `GF(q)` by explicit tables.
///
/// Element `e` stands for the polynomial whose base-`p` digits are the
/// coefficients of `e`; `0` and `1` are the additive and multiplicative
/// identities and [`FiniteField::primitive`] generates the multiplicative group.
#[derive(Debug, Clone)]
pub struct FiniteField {
    q: usize,
    p: usize,
    degree: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    log: Vec<usize>,
    exp: Vec<usize>,
}

fn lookup(q: usize) -> Result<(usize, Vec<usize>)> {
    for line in FIELD_DATA.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Integrity(format!("bad field line {line:?}"))))
            .collect::<Result<_>>()?;
        if nums[0] == q {
            return Ok((nums[1], nums[2..].to_vec()));
        }
    }
    Err(Error::Unsupported(format!("no field table for q = {q}")))
}

impl FiniteField {
    pub fn new(q: usize) -> Result<Self> {
        let (p, poly) = lookup(q)?;
        let degree = poly.len() - 1;
        if p.pow(degree as u32) != q || poly[0] != 1 {
            return Err(Error::Integrity(format!("field line for q = {q} is inconsistent")));
        }
        let to_digits = |mut e: usize| {
            let mut d = vec![0; degree];
            for slot in d.iter_mut() {
                *slot = e % p;
                e /= p;
            }
            d
        };
        let from_digits = |d: &[usize]| d.iter().rev().fold(0, |acc, &c| acc * p + c);
        let mut add = vec![0; q * q];
        for x in 0..q {
            let dx = to_digits(x);
            for y in 0..q {
                let dy = to_digits(y);
                let sum: Vec<usize> = dx.iter().zip(&dy).map(|(a, b)| (a + b) % p).collect();
                add[x * q + y] = from_digits(&sum);
            }
        }
        // low-order coefficients of the monic polynomial, constant term first
        let low: Vec<usize> = poly[1..].iter().rev().copied().collect();
        let mut exp = Vec::with_capacity(q - 1);
        let mut log = vec![usize::MAX; q];
        let mut cur = vec![0; degree];
        cur[0] = 1;
        for i in 0..q - 1 {
            let e = from_digits(&cur);
            if log[e] != usize::MAX {
                return Err(Error::Integrity(format!("polynomial for q = {q} is not primitive")));
            }
            log[e] = i;
            exp.push(e);
            let top = cur[degree - 1];
            for j in (1..degree).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            for j in 0..degree {
                cur[j] = (cur[j] + (p - low[j]) * top) % p;
            }
        }
        let mut mul = vec![0; q * q];
        for x in 1..q {
            for y in 1..q {
                mul[x * q + y] = exp[(log[x] + log[y]) % (q - 1)];
            }
        }
        Ok(FiniteField {
            q,
            p,
            degree,
            add,
            mul,
            log,
            exp,
        })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.q + y]
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.q + y]
    }

    pub fn neg(&self, x: usize) -> usize {
        (0..self.q).find(|&y| self.add(x, y) == 0).expect("additive inverse")
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, x: usize) -> Option<usize> {
        (x != 0).then(|| self.exp[(self.q - 1 - self.log[x]) % (self.q - 1)])
    }

    pub fn primitive(&self) -> usize {
        self.exp[1 % (self.q - 1)]
    }

    /// `ω^i` for the primitive element `ω`.
    pub fn power_of_primitive(&self, i: usize) -> usize {
        self.exp[i % (self.q - 1)]
    }

    pub fn pow(&self, x: usize, n: usize) -> usize {
        if n == 0 {
            return 1;
        }
        if x == 0 {
            return 0;
        }
        self.exp[self.log[x] * n % (self.q - 1)]
    }

    /// `x ↦ x^p`.
    pub fn frobenius(&self, x: usize) -> usize {
        self.pow(x, self.p)
    }

    /// The subfield of order `r`, sorted.
    pub fn subfield(&self, r: usize) -> Result<Vec<usize>> {
        if r < 2 || !(self.q - 1).is_multiple_of(r - 1) {
            return Err(Error::Unsupported(format!("GF({}) has no subfield of order {r}", self.q)));
        }
        let step = (self.q - 1) / (r - 1);
        let mut out: Vec<usize> = (0..r - 1).map(|i| self.exp[i * step]).collect();
        out.push(0);
        out.sort_unstable();
        Ok(out)
    }
}
