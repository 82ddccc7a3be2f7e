use crate::error::{Error, Result};

const GOLAY_DATA: &str = include_str!("../../data/golay24.txt");

/// The extended binary Golay code of length 24, from a shipped generator matrix.
#[derive(Debug, Clone)]
pub struct GolayCode {
    basis: Vec<u32>,
}

impl GolayCode {
    pub fn bundled() -> Result<Self> {
        Self::parse(GOLAY_DATA)
    }

    /// Rows of 24 `0`/`1` characters; column `j` is coordinate `j`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut basis = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if line.len() != 24 {
                return Err(Error::parse(idx + 1, "rows must have 24 entries"));
            }
            let mut word = 0u32;
            for (j, c) in line.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => word |= 1 << j,
                    _ => return Err(Error::parse(idx + 1, format!("unexpected {c:?}"))),
                }
            }
            basis.push(word);
        }
        let code = GolayCode { basis };
        code.validate()?;
        Ok(code)
    }

    fn validate(&self) -> Result<()> {
        if self.basis.len() != 12 {
            return Err(Error::Integrity(format!("expected 12 rows, found {}", self.basis.len())));
        }
        let words = self.codewords();
        if words.iter().collect::<std::collections::HashSet<_>>().len() != 4096 {
            return Err(Error::Integrity("generator rows are not independent".into()));
        }
        if let Some(w) = words.iter().find(|w| **w != 0 && w.count_ones() < 8) {
            return Err(Error::Integrity(format!("codeword {w:#x} has weight below 8")));
        }
        Ok(())
    }

    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    /// All 4096 codewords, by iterating every combination of basis rows.
    pub fn codewords(&self) -> Vec<u32> {
        (0u32..1 << self.basis.len())
            .map(|m| {
                self.basis
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| m >> i & 1 == 1)
                    .fold(0, |acc, (_, w)| acc ^ w)
            })
            .collect()
    }

    pub fn words_of_weight(&self, w: u32) -> Vec<u32> {
        let mut out: Vec<u32> = self.codewords().into_iter().filter(|c| c.count_ones() == w).collect();
        out.sort_unstable();
        out
    }

    pub fn minimum_weight(&self) -> u32 {
        self.codewords()
            .into_iter()
            .filter(|&c| c != 0)
            .map(u32::count_ones)
            .min()
            .unwrap_or(0)
    }
}
