use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Index of a simple reflection, 0-based internally and printed 1-based.
pub type Generator = usize;

/// A subset of the simple reflections, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct GenSet(pub u32);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn full(rank: usize) -> Self {
        GenSet(if rank >= 32 { u32::MAX } else { (1u32 << rank) - 1 })
    }

    pub fn singleton(s: Generator) -> Self {
        GenSet(1 << s)
    }

    pub fn from_gens(gens: impl IntoIterator<Item = Generator>) -> Self {
        GenSet(gens.into_iter().fold(0, |m, s| m | (1 << s)))
    }

    /// Parses a 1-based, comma-separated list such as `1,3`; empty means the empty set.
    pub fn parse_one_based(s: &str, rank: usize) -> Result<Self> {
        let mut set = GenSet::EMPTY;
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let i: usize = part
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator `{part}`")))?;
            if i == 0 || i > rank {
                return Err(Error::GeneratorOutOfRange(i));
            }
            set = set.with(i - 1);
        }
        Ok(set)
    }

    pub fn contains(self, s: Generator) -> bool {
        self.0 >> s & 1 == 1
    }

    pub fn with(self, s: Generator) -> Self {
        GenSet(self.0 | 1 << s)
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(self, rank: usize) -> Self {
        GenSet(!self.0 & GenSet::full(rank).0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Generator> {
        (0..32).filter(move |&s| self.contains(s))
    }

    /// 1-based indices, the external representation.
    pub fn one_based(self) -> Vec<usize> {
        self.iter().map(|s| s + 1).collect()
    }

    /// All subsets of `{0..rank}` ordered lexicographically by their sorted
    /// 1-based member lists (the empty set first).
    pub fn all_subsets_lex(rank: usize) -> Vec<GenSet> {
        let mut v: Vec<GenSet> = (0..1u32 << rank).map(GenSet).collect();
        v.sort_by_key(|j| j.one_based());
        v
    }
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.one_based().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A Coxeter matrix with an optional type name.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CoxeterSpec {
    matrix: Vec<Vec<u32>>,
    name: Option<String>,
}

impl CoxeterSpec {
    /// Validates a Coxeter matrix: symmetric, ones on the diagonal, entries `>= 2` elsewhere.
    pub fn new(matrix: Vec<Vec<u32>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("rank must be positive".into()));
        }
        if n > 16 {
            return Err(Error::InvalidMatrix(format!("rank {n} exceeds 16")));
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!("row {} has {} entries", i + 1, row.len())));
            }
            for (j, &m) in row.iter().enumerate() {
                if i == j && m != 1 {
                    return Err(Error::InvalidMatrix(format!("diagonal entry ({0},{0}) is {m}", i + 1)));
                }
                if i != j && m < 2 {
                    return Err(Error::InvalidMatrix(format!("entry ({},{}) is {m}", i + 1, j + 1)));
                }
                if matrix[j][i] != m {
                    return Err(Error::InvalidMatrix(format!("not symmetric at ({},{})", i + 1, j + 1)));
                }
            }
        }
        Ok(Self { matrix, name: None })
    }

    /// Standard Coxeter matrices: `A<n>`, `B<n>`, `D<n>`, `H3`, `F4`, `I2(<m>)`.
    /// Node numbering follows Bourbaki.
    pub fn named(name: &str) -> Result<Self> {
        let unknown = || Error::UnknownType(name.to_string());
        let name = name.trim();
        let chain = |n: usize, edges: &[(usize, usize, u32)]| -> Vec<Vec<u32>> {
            let mut m = vec![vec![2u32; n]; n];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 1;
            }
            for &(a, b, v) in edges {
                m[a][b] = v;
                m[b][a] = v;
            }
            m
        };
        let matrix = if let Some(rest) = name.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            let m: u32 = rest.parse().map_err(|_| unknown())?;
            if m < 2 {
                return Err(unknown());
            }
            chain(2, &[(0, 1, m)])
        } else if name == "H3" {
            chain(3, &[(0, 1, 5), (1, 2, 3)])
        } else if name == "F4" {
            chain(4, &[(0, 1, 3), (1, 2, 4), (2, 3, 3)])
        } else {
            let (kind, num) = name.split_at(1);
            let n: usize = num.parse().map_err(|_| unknown())?;
            let path: Vec<(usize, usize, u32)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1, 3)).collect();
            match kind {
                "A" if n >= 1 => chain(n, &path),
                "B" if n >= 2 => {
                    let mut e = path;
                    e.last_mut().unwrap().2 = 4;
                    chain(n, &e)
                }
                "D" if n >= 4 => {
                    let mut e: Vec<_> = path[..n - 2].to_vec();
                    e.push((n - 3, n - 1, 3));
                    chain(n, &e)
                }
                _ => return Err(unknown()),
            }
        };
        let mut spec = Self::new(matrix)?;
        spec.name = Some(name.to_string());
        Ok(spec)
    }

    /// Plain-text matrix file: first line the rank, then one row per line.
    pub fn parse_matrix_text(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace();
        let n: usize = tokens
            .next()
            .ok_or_else(|| Error::InvalidMatrix("empty matrix file".into()))?
            .parse()
            .map_err(|_| Error::InvalidMatrix("rank is not an integer".into()))?;
        let mut matrix = vec![vec![0u32; n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = tokens
                    .next()
                    .ok_or_else(|| Error::InvalidMatrix(format!("missing entry ({},{})", i + 1, j + 1)))?
                    .parse()
                    .map_err(|_| Error::InvalidMatrix(format!("bad entry ({},{})", i + 1, j + 1)))?;
            }
        }
        if tokens.next().is_some() {
            return Err(Error::InvalidMatrix("trailing data after matrix".into()));
        }
        Self::new(matrix)
    }

    pub fn to_matrix_text(&self) -> String {
        let mut s = format!("{}\n", self.rank());
        for row in &self.matrix {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn m(&self, s: Generator, t: Generator) -> u32 {
        self.matrix[s][t]
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn label(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("matrix:{}", &self.content_hash()[..12]))
    }

    /// SHA-256 of the canonical matrix text; keys on-disk caches.
    pub fn content_hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_matrix_text().as_bytes()))
    }
}

impl FromStr for CoxeterSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::named(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_types() {
        let b3 = CoxeterSpec::named("B3").unwrap();
        assert_eq!(b3.matrix(), &[vec![1, 3, 2], vec![3, 1, 4], vec![2, 4, 1]]);
        let d4 = CoxeterSpec::named("D4").unwrap();
        assert_eq!(d4.m(1, 3), 3);
        assert_eq!(d4.m(2, 3), 2);
        assert_eq!(CoxeterSpec::named("I2(7)").unwrap().m(0, 1), 7);
        assert!(matches!(CoxeterSpec::named("X3"), Err(Error::UnknownType(_))));
        assert!(CoxeterSpec::named("A0").is_err());
        assert!(CoxeterSpec::named("I2(1)").is_err());
    }

    #[test]
    fn matrix_validation() {
        assert!(matches!(
            CoxeterSpec::new(vec![vec![1, 3], vec![2, 1]]),
            Err(Error::InvalidMatrix(_))
        ));
        assert!(matches!(CoxeterSpec::new(vec![vec![2]]), Err(Error::InvalidMatrix(_))));
        assert!(matches!(
            CoxeterSpec::new(vec![vec![1, 1], vec![1, 1]]),
            Err(Error::InvalidMatrix(_))
        ));
        assert!(CoxeterSpec::new(vec![]).is_err());
    }

    #[test]
    fn matrix_text_round_trip() {
        let a3 = CoxeterSpec::named("A3").unwrap();
        let back = CoxeterSpec::parse_matrix_text(&a3.to_matrix_text()).unwrap();
        assert_eq!(back.matrix(), a3.matrix());
        assert_eq!(back.content_hash(), a3.content_hash());
        assert!(CoxeterSpec::parse_matrix_text("2\n1 3\n3").is_err());
    }

    #[test]
    fn gensets() {
        let j = GenSet::parse_one_based("1,3", 3).unwrap();
        assert_eq!(j.to_string(), "{1,3}");
        assert_eq!(j.complement(3), GenSet::singleton(1));
        assert!(GenSet::parse_one_based("4", 3).is_err());
        assert_eq!(GenSet::parse_one_based("", 3).unwrap(), GenSet::EMPTY);
        let lex: Vec<String> = GenSet::all_subsets_lex(2).iter().map(|j| j.to_string()).collect();
        assert_eq!(lex, ["{}", "{1}", "{1,2}", "{2}"]);
    }
}
