//! Combinatorics of the parabolic quotient W^Theta: labeled strings, Bruhat
//! order, lengths, simple reflections, and the positive roots of the shape.
//!
//! Elements of W^Theta are encoded as length-n strings over {0,..,d}; the
//! permutation representative is derived on demand. The block sizes read
//! p_1,..,p_{d+1}, where the longest element is d^p1 (d-1)^p2 ... 0^p_{d+1}.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeylError {
    #[error("invalid shape: {0}")]
    BadShape(String),
    #[error("invalid labeled string: {0}")]
    BadString(String),
}

/// Block sizes of a parabolic quotient. For the Grassmannian case d=1 this
/// is (k, n-k); degenerate k in {0, n} is allowed there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaShape {
    blocks: Vec<usize>,
}

impl ThetaShape {
    pub fn new(blocks: Vec<usize>) -> Result<Self, WeylError> {
        if blocks.is_empty() || blocks.iter().sum::<usize>() == 0 {
            return Err(WeylError::BadShape("empty shape".into()));
        }
        if blocks.len() > 2 && blocks.iter().any(|&p| p == 0) {
            return Err(WeylError::BadShape(
                "zero block only allowed in the two-block case".into(),
            ));
        }
        Ok(ThetaShape { blocks })
    }

    pub fn grassmannian(k: usize, n: usize) -> Result<Self, WeylError> {
        if k > n || n == 0 {
            return Err(WeylError::BadShape(format!("k={k} out of range for n={n}")));
        }
        Self::new(vec![k, n - k])
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().sum()
    }

    /// Number of label values minus one (strings use {0,..,d}).
    pub fn d(&self) -> usize {
        self.blocks.len() - 1
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn is_grassmannian(&self) -> bool {
        self.blocks.len() == 2
    }

    /// For d=1, the number of 1s.
    pub fn k(&self) -> usize {
        self.blocks[0]
    }

    /// The longest element: d^p1 (d-1)^p2 ... 0^p_{d+1}.
    pub fn longest_string(&self) -> LabeledString {
        let d = self.d();
        let mut labels = Vec::with_capacity(self.n());
        for (i, &p) in self.blocks.iter().enumerate() {
            labels.extend(std::iter::repeat((d - i) as u8).take(p));
        }
        LabeledString(labels)
    }

    /// The lattice-model bottom boundary omega = 0^{n-k} 1^k (d=1 only).
    pub fn omega(&self) -> LabeledString {
        assert!(self.is_grassmannian(), "omega is defined for d=1 shapes");
        let mut labels = vec![0u8; self.n() - self.k()];
        labels.extend(std::iter::repeat(1u8).take(self.k()));
        LabeledString(labels)
    }

    /// Positive roots y_i - y_j of G/P as pairs (i, j), 1-based, i < j:
    /// exactly the position pairs landing in different blocks of the
    /// longest element.
    pub fn positive_roots(&self) -> Vec<(usize, usize)> {
        let w0 = self.longest_string();
        let n = self.n();
        let mut roots = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if w0.0[i] != w0.0[j] {
                    roots.push((i + 1, j + 1));
                }
            }
        }
        roots
    }

    /// Every string with this shape's content, in (length, lex) order —
    /// a linear extension of Bruhat order used by the triangular solves.
    pub fn all_strings(&self) -> Vec<LabeledString> {
        let mut labels: Vec<u8> = Vec::with_capacity(self.n());
        let d = self.d();
        for (i, &p) in self.blocks.iter().enumerate() {
            labels.extend(std::iter::repeat((d - i) as u8).take(p));
        }
        labels.sort_unstable();
        let mut out = Vec::new();
        // Multiset permutations in lexicographic order.
        loop {
            out.push(LabeledString(labels.clone()));
            // next_permutation
            let n = labels.len();
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| labels[i] < labels[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| labels[j] > labels[i]).unwrap();
            labels.swap(i, j);
            labels[i + 1..].reverse();
        }
        out.sort_by_key(|s| (s.length(), s.0.clone()));
        out
    }

    pub fn contains(&self, s: &LabeledString) -> bool {
        if s.len() != self.n() {
            return false;
        }
        let d = self.d();
        let mut counts = vec![0usize; d + 1];
        for &l in &s.0 {
            if l as usize > d {
                return false;
            }
            counts[l as usize] += 1;
        }
        self.blocks
            .iter()
            .enumerate()
            .all(|(i, &p)| counts[d - i] == p)
    }
}

impl fmt::Display for ThetaShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_grassmannian() {
            write!(f, "{},{}", self.k(), self.n())
        } else {
            let parts: Vec<String> = self.blocks.iter().map(|p| p.to_string()).collect();
            write!(f, "{}", parts.join("+"))
        }
    }
}

impl FromStr for ThetaShape {
    type Err = WeylError;

    /// "k,n" for the Grassmannian or "p1+p2+..." for general shapes.
    fn from_str(s: &str) -> Result<Self, WeylError> {
        if let Some((k, n)) = s.split_once(',') {
            let k: usize = k
                .trim()
                .parse()
                .map_err(|_| WeylError::BadShape(s.into()))?;
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| WeylError::BadShape(s.into()))?;
            return ThetaShape::grassmannian(k, n);
        }
        let blocks: Result<Vec<usize>, _> = s.split('+').map(|p| p.trim().parse()).collect();
        ThetaShape::new(blocks.map_err(|_| WeylError::BadShape(s.into()))?)
    }
}

/// An element of W^Theta as a string over {0,..,d}.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledString(Vec<u8>);

impl LabeledString {
    pub fn new(labels: Vec<u8>) -> Self {
        LabeledString(labels)
    }

    pub fn labels(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u8 {
        self.0[i]
    }

    /// Coxeter length of the minimal coset representative: the number of
    /// inversions of the string.
    pub fn length(&self) -> usize {
        let mut inv = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Swap entries i, i+1 (1-based simple reflection index).
    pub fn apply_r(&self, i: usize) -> LabeledString {
        assert!(i >= 1 && i < self.0.len(), "reflection index out of range");
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        LabeledString(v)
    }

    /// Swap entries at 1-based positions j and k (a general transposition).
    pub fn apply_transposition(&self, j: usize, k: usize) -> LabeledString {
        let mut v = self.0.clone();
        v.swap(j - 1, k - 1);
        LabeledString(v)
    }

    /// Positions i (1-based) with s_i > s_{i+1}.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.0.len())
            .filter(|&i| self.0[i - 1] > self.0[i])
            .collect()
    }

    /// Smallest 1-based position with s_i < s_{i+1}, if any.
    pub fn first_ascent(&self) -> Option<usize> {
        (1..self.0.len()).find(|&i| self.0[i - 1] < self.0[i])
    }

    /// The minimal-length permutation sigma (one-line, 1-based image vector)
    /// with sigma(sorted ascending) = self: positions of each letter are
    /// matched in increasing order.
    pub fn to_permutation(&self) -> Vec<usize> {
        let n = self.0.len();
        let mut sorted = self.0.clone();
        sorted.sort_unstable();
        // For each letter, queue of positions in self (ascending).
        let mut targets: std::collections::BTreeMap<u8, std::collections::VecDeque<usize>> =
            Default::default();
        for (pos, &l) in self.0.iter().enumerate() {
            targets.entry(l).or_default().push_back(pos + 1);
        }
        let mut sigma = vec![0usize; n];
        for (i, &l) in sorted.iter().enumerate() {
            sigma[i] = targets.get_mut(&l).unwrap().pop_front().unwrap();
        }
        sigma
    }
}

impl fmt::Display for LabeledString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LabeledString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for LabeledString {
    type Err = WeylError;
    fn from_str(s: &str) -> Result<Self, WeylError> {
        let mut labels = Vec::with_capacity(s.len());
        for c in s.chars() {
            let d = c
                .to_digit(10)
                .ok_or_else(|| WeylError::BadString(s.into()))?;
            labels.push(d as u8);
        }
        if labels.is_empty() {
            return Err(WeylError::BadString("empty string".into()));
        }
        Ok(LabeledString(labels))
    }
}

impl Serialize for LabeledString {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LabeledString {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Bruhat order on minimal coset representatives via the dominance
/// criterion on prefix counts: a <= b iff for every prefix and every letter
/// threshold, a has no more large letters than b.
pub fn bruhat_leq(a: &LabeledString, b: &LabeledString) -> bool {
    assert_eq!(a.len(), b.len(), "strings of different length");
    let d = a.0.iter().chain(b.0.iter()).copied().max().unwrap_or(0);
    for level in 1..=d {
        let mut ca = 0i64;
        let mut cb = 0i64;
        for i in 0..a.len() {
            if a.0[i] >= level {
                ca += 1;
            }
            if b.0[i] >= level {
                cb += 1;
            }
            if ca > cb {
                return false;
            }
        }
    }
    true
}

/// A sequence of simple-reflection indices transforming the longest string
/// into `target`, each step decreasing length by exactly one. Computed as
/// the reverse of the first-ascent bubble path from `target` up to w_0.
pub fn descent_path(target: &LabeledString) -> Vec<usize> {
    let mut path = Vec::new();
    let mut s = target.clone();
    while let Some(i) = s.first_ascent() {
        s = s.apply_r(i);
        path.push(i);
    }
    path.reverse();
    path
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> LabeledString {
        x.parse().unwrap()
    }

    #[test]
    fn longest_strings() {
        assert_eq!(
            ThetaShape::grassmannian(1, 2)
                .unwrap()
                .longest_string()
                .to_string(),
            "10"
        );
        assert_eq!(
            ThetaShape::grassmannian(2, 4)
                .unwrap()
                .longest_string()
                .to_string(),
            "1100"
        );
        assert_eq!(
            ThetaShape::grassmannian(0, 2)
                .unwrap()
                .longest_string()
                .to_string(),
            "00"
        );
        assert_eq!(
            ThetaShape::new(vec![1, 1, 1])
                .unwrap()
                .longest_string()
                .to_string(),
            "210"
        );
    }

    #[test]
    fn lengths() {
        assert_eq!(s("10").length(), 1);
        assert_eq!(s("0011").length(), 0);
        assert_eq!(s("1100").length(), 4);
        assert_eq!(s("210").length(), 3);
    }

    #[test]
    fn bruhat_basics() {
        assert!(bruhat_leq(&s("01"), &s("10")));
        assert!(!bruhat_leq(&s("10"), &s("01")));
        assert!(bruhat_leq(&s("0101"), &s("0101")));
        assert!(bruhat_leq(&s("0101"), &s("1010")));
        assert!(!bruhat_leq(&s("0110"), &s("1001")));
        assert!(!bruhat_leq(&s("1001"), &s("0110")));
    }

    /// Brute-force Bruhat order on S_n via the subword property of reduced
    /// words, used to validate the dominance criterion.
    fn bruhat_leq_perm_bruteforce(u: &[usize], v: &[usize]) -> bool {
        // Ehresmann tableau criterion on one-line notation.
        let n = u.len();
        for k in 1..=n {
            let mut a: Vec<usize> = u[..k].to_vec();
            let mut b: Vec<usize> = v[..k].to_vec();
            a.sort_unstable();
            b.sort_unstable();
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return false;
            }
        }
        true
    }

    #[test]
    fn bruhat_matches_bruteforce_on_grassmannian_permutations() {
        for n in 2..=5 {
            for k in 0..=n {
                let shape = ThetaShape::grassmannian(k, n).unwrap();
                let all = shape.all_strings();
                for a in &all {
                    for b in &all {
                        let via_perm = bruhat_leq_perm_bruteforce(
                            &a.to_permutation(),
                            &b.to_permutation(),
                        );
                        assert_eq!(
                            bruhat_leq(a, b),
                            via_perm,
                            "mismatch at {a} vs {b} in Gr({k},{n})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn bruhat_is_partial_order_with_unique_maximum() {
        let shape = ThetaShape::new(vec![1, 2, 1]).unwrap();
        let all = shape.all_strings();
        let w0 = shape.longest_string();
        for a in &all {
            assert!(bruhat_leq(a, &w0));
            for b in &all {
                if bruhat_leq(a, b) && bruhat_leq(b, a) {
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn apply_r_involution_and_examples() {
        assert_eq!(s("10").apply_r(1), s("01"));
        assert_eq!(s("1100").apply_r(2), s("1010"));
        for x in ThetaShape::grassmannian(2, 4).unwrap().all_strings() {
            for i in 1..4 {
                assert_eq!(x.apply_r(i).apply_r(i), x);
            }
        }
    }

    #[test]
    fn descent_paths() {
        assert!(descent_path(&s("10")).is_empty());
        assert_eq!(descent_path(&s("01")), vec![1]);
        let path = descent_path(&s("0011"));
        assert_eq!(path.len(), 4);
        // Each step from w_0 decreases length by exactly one and lands on
        // the target.
        let mut cur = s("1100");
        let mut len = cur.length();
        for &i in &path {
            cur = cur.apply_r(i);
            assert_eq!(cur.length(), len - 1);
            len -= 1;
        }
        assert_eq!(cur, s("0011"));
    }

    #[test]
    fn descent_path_reaches_every_string() {
        for shape in [
            ThetaShape::grassmannian(2, 4).unwrap(),
            ThetaShape::new(vec![1, 1, 1]).unwrap(),
            ThetaShape::new(vec![1, 2, 1]).unwrap(),
        ] {
            let w0 = shape.longest_string();
            for target in shape.all_strings() {
                let mut cur = w0.clone();
                let mut len = cur.length();
                for &i in &descent_path(&target) {
                    assert!(cur.get(i - 1) > cur.get(i), "not a descent step");
                    cur = cur.apply_r(i);
                    assert_eq!(cur.length(), len - 1);
                    len -= 1;
                }
                assert_eq!(cur, target);
            }
        }
    }

    #[test]
    fn positive_roots_follow_blocks() {
        let shape = ThetaShape::grassmannian(1, 3).unwrap();
        assert_eq!(shape.positive_roots(), vec![(1, 2), (1, 3)]);
        let shape = ThetaShape::grassmannian(2, 4).unwrap();
        assert_eq!(
            shape.positive_roots(),
            vec![(1, 3), (1, 4), (2, 3), (2, 4)]
        );
        let flag = ThetaShape::new(vec![1, 1, 1]).unwrap();
        assert_eq!(flag.positive_roots(), vec![(1, 2), (1, 3), (2, 3)]);
        // length of w_0 equals the number of positive roots
        assert_eq!(
            flag.longest_string().length(),
            flag.positive_roots().len()
        );
    }

    #[test]
    fn permutation_of_string() {
        assert_eq!(s("10").to_permutation(), vec![2, 1]);
        assert_eq!(s("01").to_permutation(), vec![1, 2]);
        assert_eq!(s("100").to_permutation(), vec![2, 3, 1]);
    }

    #[test]
    fn shape_parsing_round_trip() {
        let g: ThetaShape = "2,4".parse().unwrap();
        assert_eq!(g, ThetaShape::grassmannian(2, 4).unwrap());
        assert_eq!(g.to_string(), "2,4");
        let f: ThetaShape = "1+1+1".parse().unwrap();
        assert_eq!(f, ThetaShape::new(vec![1, 1, 1]).unwrap());
        assert_eq!(f.to_string(), "1+1+1");
    }
}
