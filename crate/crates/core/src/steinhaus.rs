//! Steinhaus triangles over `Z/nZ` and balanced sequences.
//!
//! The triangle of `(a_1, ..., a_m)` has the sequence as its first row and
//! each later row formed by summing adjacent entries of the row above, so
//! it holds `m(m+1)/2` residues. A sequence is balanced when every residue
//! appears in its triangle equally often.

use serde::Serialize;

use crate::arith::reduce;
use crate::error::{Error, Result};

/// A non-empty sequence of residues modulo `modulus`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZnSequence {
    modulus: u64,
    elements: Vec<u64>,
}

impl ZnSequence {
    /// Wraps residues that are already reduced into `[0, modulus)`.
    pub fn new(modulus: u64, elements: Vec<u64>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if elements.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(&value) = elements.iter().find(|&&x| x >= modulus) {
            return Err(Error::ResidueOutOfRange { value, modulus });
        }
        Ok(Self { modulus, elements })
    }

    /// Reduces arbitrary integers modulo `modulus`.
    pub fn from_integers(modulus: u64, values: &[i64]) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        Self::new(
            modulus,
            values.iter().map(|&x| reduce(x, modulus)).collect(),
        )
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Residue multiplicities of a Steinhaus triangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleSummary {
    pub modulus: u64,
    pub length: u64,
    /// `counts[r]` is the multiplicity of residue `r`.
    pub counts: Vec<u64>,
    pub total: u64,
    pub balanced: bool,
}

impl TriangleSummary {
    pub fn multiplicity(&self, residue: u64) -> u64 {
        self.counts.get(residue as usize).copied().unwrap_or(0)
    }

    /// `(residue, multiplicity)` for every residue that occurs.
    pub fn occurring(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c > 0)
            .map(|(r, &c)| (r as u64, c))
    }
}

#[inline]
fn add_mod(x: u64, y: u64, n: u64) -> u64 {
    ((x as u128 + y as u128) % n as u128) as u64
}

/// Builds the triangle row by row in place and tallies each entry.
pub fn triangle(seq: &ZnSequence) -> TriangleSummary {
    let n = seq.modulus;
    let m = seq.len() as u64;
    let mut counts = vec![0u64; n as usize];
    let mut row = seq.elements.clone();
    while !row.is_empty() {
        for &x in &row {
            counts[x as usize] += 1;
        }
        for j in 0..row.len() - 1 {
            row[j] = add_mod(row[j], row[j + 1], n);
        }
        row.pop();
    }
    let balanced = counts.windows(2).all(|w| w[0] == w[1]);
    TriangleSummary {
        modulus: n,
        length: m,
        counts,
        total: m * (m + 1) / 2,
        balanced,
    }
}

/// All rows of the triangle; row `i` has `m - i` entries.
pub fn triangle_rows(seq: &ZnSequence) -> Vec<Vec<u64>> {
    let n = seq.modulus;
    let mut rows = vec![seq.elements.clone()];
    while rows.last().map_or(0, Vec::len) > 1 {
        let last = rows.last().unwrap();
        let next = last.windows(2).map(|w| add_mod(w[0], w[1], n)).collect();
        rows.push(next);
    }
    rows
}

pub fn is_balanced(seq: &ZnSequence) -> bool {
    triangle(seq).balanced
}

/// Whether `n` divides `C(m+1, 2)`, the necessary length condition for a
/// balanced sequence of length `m` in `Z/nZ`.
pub fn length_admissible(m: u64, n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let size = m as u128 * (m as u128 + 1) / 2;
    size.is_multiple_of(n as u128)
}

/// `(c, c + d, ..., c + (m-1) d)` reduced modulo `n`.
pub fn ap_sequence(c: i64, d: i64, m: usize, n: u64) -> Result<ZnSequence> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if m == 0 {
        return Err(Error::EmptySequence);
    }
    let start = reduce(c, n);
    let step = reduce(d, n);
    let elements = (0..m as u64)
        .map(|i| ((start as u128 + i as u128 * step as u128) % n as u128) as u64)
        .collect();
    ZnSequence::new(n, elements)
}

/// Scans every progression `(c, d)` in `[0, n)^2` in lexicographic order and
/// returns the first whose length-`m` triangle is balanced. Odd `n` only.
pub fn search_balanced_ap(n: u64, m: usize) -> Result<Option<(u64, u64)>> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if n.is_multiple_of(2) {
        return Err(Error::EvenModulus(n));
    }
    if m == 0 {
        return Err(Error::EmptySequence);
    }
    if !length_admissible(m as u64, n) {
        return Ok(None);
    }
    for c in 0..n {
        for d in 0..n {
            if is_balanced(&ap_sequence(c as i64, d as i64, m, n)?) {
                return Ok(Some((c, d)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // entry (i, j) of the triangle as sum_k C(i, k) a_{j+k}
    fn binomial_rows(seq: &ZnSequence) -> Vec<Vec<u64>> {
        let n = seq.modulus() as u128;
        let a = seq.elements();
        let m = a.len();
        let mut pascal = vec![vec![1u128]];
        for i in 1..m {
            let prev = &pascal[i - 1];
            let mut row = vec![1u128; i + 1];
            for k in 1..i {
                row[k] = (prev[k - 1] + prev[k]) % n;
            }
            pascal.push(row);
        }
        (0..m)
            .map(|i| {
                (0..m - i)
                    .map(|j| {
                        let s: u128 = (0..=i).map(|k| pascal[i][k] % n * a[j + k] as u128).sum();
                        (s % n) as u64
                    })
                    .collect()
            })
            .collect()
    }

    fn brute_search(n: u64, m: usize) -> Option<(u64, u64)> {
        (0..n)
            .flat_map(|c| (0..n).map(move |d| (c, d)))
            .find(|&(c, d)| {
                let seq = ap_sequence(c as i64, d as i64, m, n).unwrap();
                let mut counts = vec![0; n as usize];
                for x in triangle_rows(&seq).into_iter().flatten() {
                    counts[x as usize] += 1;
                }
                counts.iter().all(|&x| x == counts[0])
            })
    }

    #[test]
    fn balanced_example_mod_5() {
        let seq = ZnSequence::new(5, vec![2, 2, 3, 3]).unwrap();
        let t = triangle(&seq);
        assert_eq!(t.counts, vec![2, 2, 2, 2, 2]);
        assert!(t.balanced);
        assert_eq!(t.total, 10);
        assert_eq!(
            triangle_rows(&seq),
            vec![vec![2, 2, 3, 3], vec![4, 0, 1], vec![4, 1], vec![0]]
        );
        assert!(is_balanced(&seq));
    }

    #[test]
    fn small_triangles() {
        let t = triangle(&ZnSequence::new(7, vec![4]).unwrap());
        assert_eq!(t.occurring().collect::<Vec<_>>(), vec![(4, 1)]);
        let t = triangle(&ZnSequence::new(3, vec![1, 1]).unwrap());
        assert_eq!(t.counts, vec![0, 2, 1]);
        assert!(!t.balanced);
        assert!(is_balanced(&ZnSequence::new(1, vec![0]).unwrap()));
        let t = triangle(&ZnSequence::new(3, vec![1, 2]).unwrap());
        assert_eq!(t.counts, vec![1, 1, 1]);
        assert!(t.balanced);
    }

    #[test]
    fn sequence_validation() {
        assert_eq!(ZnSequence::new(5, vec![]), Err(Error::EmptySequence));
        assert_eq!(
            ZnSequence::new(5, vec![1, 5]),
            Err(Error::ResidueOutOfRange {
                value: 5,
                modulus: 5
            })
        );
        assert_eq!(ZnSequence::new(0, vec![0]), Err(Error::ZeroModulus));
        assert_eq!(
            ZnSequence::from_integers(5, &[-1, 7]).unwrap().elements(),
            &[4, 2]
        );
    }

    #[test]
    fn length_admissible_examples() {
        assert!(length_admissible(4, 5));
        for m in 1..20 {
            assert!(length_admissible(m, 1));
        }
        assert!(!length_admissible(3, 5));
    }

    #[test]
    fn ap_sequence_examples() {
        assert_eq!(ap_sequence(2, 1, 2, 5).unwrap().elements(), &[2, 3]);
        assert_eq!(ap_sequence(2, 1, 4, 5).unwrap().elements(), &[2, 3, 4, 0]);
        assert_eq!(ap_sequence(-1, -2, 3, 7).unwrap().elements(), &[6, 4, 2]);
        for n in 1..=6u64 {
            for m in 1..=6 {
                let zero = ap_sequence(0, 0, m, n).unwrap();
                assert_eq!(is_balanced(&zero), n == 1);
            }
        }
    }

    #[test]
    fn search_examples() {
        assert_eq!(search_balanced_ap(3, 3).unwrap(), Some((1, 2)));
        assert_eq!(search_balanced_ap(5, 3).unwrap(), None);
        // 5 | C(5, 2) but no progression of length 4 is balanced in Z/5Z;
        // (2, 2, 3, 3) is not a progression
        assert!(length_admissible(4, 5));
        assert_eq!(search_balanced_ap(5, 4).unwrap(), None);
        assert_eq!(search_balanced_ap(4, 3), Err(Error::EvenModulus(4)));
    }

    #[test]
    fn search_matches_exhaustive_scan() {
        for n in (1..=9u64).step_by(2) {
            for m in 1..=20 {
                assert_eq!(
                    search_balanced_ap(n, m).unwrap(),
                    brute_search(n, m),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn balanced_implies_admissible_exhaustive() {
        for n in 1..=4u64 {
            for m in 1..=6usize {
                let total = (n as usize).pow(m as u32);
                for code in 0..total {
                    let mut x = code;
                    let elements = (0..m)
                        .map(|_| {
                            let r = (x % n as usize) as u64;
                            x /= n as usize;
                            r
                        })
                        .collect();
                    let seq = ZnSequence::new(n, elements).unwrap();
                    if is_balanced(&seq) {
                        assert!(length_admissible(m as u64, n));
                    }
                }
            }
        }
    }

    fn sequence_strategy() -> impl Strategy<Value = ZnSequence> {
        (1u64..=12, 1usize..=12).prop_flat_map(|(n, m)| {
            proptest::collection::vec(0..n, m).prop_map(move |v| ZnSequence::new(n, v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn iterative_rows_match_binomial_formula(seq in sequence_strategy()) {
            prop_assert_eq!(triangle_rows(&seq), binomial_rows(&seq));
        }

        #[test]
        fn summary_is_consistent(seq in sequence_strategy()) {
            let t = triangle(&seq);
            let m = seq.len() as u64;
            prop_assert_eq!(t.counts.iter().sum::<u64>(), m * (m + 1) / 2);
            prop_assert_eq!(t.total, m * (m + 1) / 2);
            let mut counts = vec![0u64; seq.modulus() as usize];
            for x in triangle_rows(&seq).into_iter().flatten() {
                counts[x as usize] += 1;
            }
            prop_assert_eq!(&t.counts, &counts);
            if t.balanced {
                prop_assert!(length_admissible(m, seq.modulus()));
            }
        }

        #[test]
        fn triangle_is_linear(
            (n, x, y) in (1u64..=12, 1usize..=12).prop_flat_map(|(n, m)| (
                Just(n),
                proptest::collection::vec(0..n, m),
                proptest::collection::vec(0..n, m),
            ))
        ) {
            let sum: Vec<u64> = x.iter().zip(&y).map(|(a, b)| (a + b) % n).collect();
            let rx = triangle_rows(&ZnSequence::new(n, x).unwrap());
            let ry = triangle_rows(&ZnSequence::new(n, y).unwrap());
            let rs = triangle_rows(&ZnSequence::new(n, sum).unwrap());
            for ((a, b), s) in rx.iter().flatten().zip(ry.iter().flatten()).zip(rs.iter().flatten()) {
                prop_assert_eq!((a + b) % n, *s);
            }
        }
    }
}
