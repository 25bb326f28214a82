use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::subset::Subset;
use crate::error::{Error, Result};

/// Strictly increasing sequence `A_1 ⊊ A_2 ⊊ ... ⊊ A_l` of subsets of `[m]`.
/// The chain with no subsets at all stands for the empty face.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Chain(pub Vec<Subset>);

impl Chain {
    pub fn new(subsets: Vec<Subset>) -> Result<Chain> {
        if subsets.windows(2).any(|w| !w[0].is_proper_subset_of(w[1])) {
            return Err(Error::InvalidParameter(format!(
                "subsets are not strictly increasing: {}",
                Chain(subsets)
            )));
        }
        Ok(Chain(subsets))
    }

    pub fn from_elements(sets: &[&[usize]]) -> Result<Chain> {
        Chain::new(sets.iter().map(|s| Subset::from_elements(s)).collect())
    }

    pub fn empty() -> Chain {
        Chain(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn subsets(&self) -> &[Subset] {
        &self.0
    }

    pub fn first(&self) -> Option<Subset> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Subset> {
        self.0.last().copied()
    }

    /// Membership in `C(m, n)`: if `A_1` is nonempty then
    /// `|A_l \ A_1| <= n - 1`; if `A_1` is empty and `l >= 2` then
    /// `|A_l \ A_2| <= n - 1`. The empty chain is not a member.
    pub fn is_admissible(&self, m: usize, n: usize) -> bool {
        let Some(last) = self.last() else {
            return false;
        };
        if !last.is_subset_of(Subset::full(m)) {
            return false;
        }
        let first = self.0[0];
        if !first.is_empty() {
            last.minus(first).len() < n
        } else if self.len() >= 2 {
            last.minus(self.0[1]).len() < n
        } else {
            true
        }
    }

    /// Whether `A_1 = ∅` and `|A_l| >= n`, the case in which the face lies on
    /// the hyperplane `x_1 + ... + x_m = C(n+1, 2)`.
    pub fn touches_top(&self, n: usize) -> bool {
        match (self.first(), self.last()) {
            (Some(first), Some(last)) => first.is_empty() && last.len() >= n,
            _ => false,
        }
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join(" < "))
    }
}

/// Number of missing ranks `|A_l| - l + 1`, the dimension of the matching face.
pub fn missing_ranks(c: &Chain) -> Result<usize> {
    let last = c.last().ok_or(Error::EmptyChain)?;
    Ok(last.len() + 1 - c.len())
}

/// All chains of `C(m, n)` (plus the empty chain when requested), ordered by
/// length and then by the list of bitmasks.
pub fn enumerate_chains(m: usize, n: usize, include_empty: bool) -> Vec<Chain> {
    fn extend(current: &mut Vec<Subset>, full: Subset, n: usize, out: &mut Vec<Chain>) {
        let chain = Chain(current.clone());
        if !chain.is_admissible(full.len(), n) {
            // Growing the top set only increases the size differences.
            return;
        }
        out.push(chain);
        let top = *current.last().expect("chains are extended from a seed");
        let free = full.minus(top);
        let mut sub = free.0;
        while sub != 0 {
            current.push(top.union(Subset(sub)));
            extend(current, full, n, out);
            current.pop();
            sub = (sub - 1) & free.0;
        }
    }

    let full = Subset::full(m);
    let mut out = Vec::new();
    if include_empty {
        out.push(Chain::empty());
    }
    for start in Subset::all(m) {
        let mut current = vec![start];
        extend(&mut current, full, n, &mut out);
    }
    out.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.0.iter().map(|s| s.0).cmp(b.0.iter().map(|s| s.0)))
    });
    out
}

/// A facet label: `Elem(i)` is the facet `x_i = 0`, `Set(S)` is the facet
/// `sum_{i in S} x_i = C(n+1,2) - C(n+1-|S|,2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Marker {
    Elem(usize),
    Set(Subset),
}

impl fmt::Display for Marker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Marker::Elem(i) => write!(f, "{i}"),
            Marker::Set(s) => write!(f, "{s}"),
        }
    }
}

/// The set `R_C` of facets containing the face of `c`; the empty chain gets
/// every facet.
pub fn r_set(c: &Chain, m: usize, n: usize) -> BTreeSet<Marker> {
    let full = Subset::full(m);
    let mut out = BTreeSet::new();
    let Some(last) = c.last() else {
        out.extend((1..=m).map(Marker::Elem));
        out.extend(
            Subset::all(m)
                .filter(|s| !s.is_empty() && (s.len() < n || s.len() == m))
                .map(Marker::Set),
        );
        return out;
    };
    out.extend(full.minus(last).elements().into_iter().map(Marker::Elem));
    let l = c.len();
    if c.touches_top(n) {
        for j in 1..l.saturating_sub(1) {
            out.insert(Marker::Set(last.minus(c.0[j])));
        }
        out.insert(Marker::Set(full));
    } else {
        for j in 0..l.saturating_sub(1) {
            out.insert(Marker::Set(last.minus(c.0[j])));
        }
    }
    out
}

/// Returns `(R_{c1}, R_{c2}, c1 <= c2)`, where the order is
/// `c1 <= c2` iff `R_{c2} ⊆ R_{c1}`.
pub fn r_set_and_order(
    c1: &Chain,
    c2: &Chain,
    m: usize,
    n: usize,
) -> (BTreeSet<Marker>, BTreeSet<Marker>, bool) {
    let r1 = r_set(c1, m, n);
    let r2 = r_set(c2, m, n);
    let le = r2.is_subset(&r1);
    (r1, r2, le)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_chains(m: usize, n: usize) -> Vec<Chain> {
        // every strictly increasing sequence of subsets, filtered by the definition
        let subsets: Vec<Subset> = Subset::all(m).collect();
        let mut all: Vec<Vec<Subset>> = subsets.iter().map(|&s| vec![s]).collect();
        let mut frontier = all.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for seq in &frontier {
                let top = *seq.last().unwrap();
                for &s in &subsets {
                    if top.is_proper_subset_of(s) {
                        let mut longer = seq.clone();
                        longer.push(s);
                        next.push(longer);
                    }
                }
            }
            all.extend(next.iter().cloned());
            frontier = next;
        }
        let mut out: Vec<Chain> = all
            .into_iter()
            .map(Chain)
            .filter(|c| {
                let first = c.0[0];
                let last = *c.0.last().unwrap();
                if !first.is_empty() {
                    last.minus(first).len() < n
                } else if c.len() >= 2 {
                    last.minus(c.0[1]).len() < n
                } else {
                    true
                }
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn pentagon_and_segment_chain_counts() {
        assert_eq!(enumerate_chains(2, 2, false).len(), 11);
        assert_eq!(enumerate_chains(2, 7, false).len(), 11);
        assert_eq!(enumerate_chains(1, 1, false).len(), 3);
        assert_eq!(enumerate_chains(1, 1, true).len(), 4);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for m in 1..=4 {
            for n in 1..=5 {
                let mut fast = enumerate_chains(m, n, false);
                fast.sort();
                assert_eq!(fast, brute_force_chains(m, n), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn chain_count_by_missing_ranks_for_p33() {
        let mut by_rank = [0usize; 4];
        for c in enumerate_chains(3, 3, false) {
            by_rank[missing_ranks(&c).unwrap()] += 1;
        }
        assert_eq!(by_rank, [16, 24, 10, 1]);
    }

    #[test]
    fn chain_sets_stabilize_once_n_reaches_m() {
        for m in 1..=4 {
            assert_eq!(
                enumerate_chains(m, m, true),
                enumerate_chains(m, m + 3, true)
            );
        }
    }

    #[test]
    fn missing_rank_examples() {
        let m = 6;
        let c = Chain::new(vec![Subset::EMPTY, Subset::full(m)]).unwrap();
        assert_eq!(missing_ranks(&c).unwrap(), m - 1);
        let c1 =
            Chain::from_elements(&[&[1, 2, 3], &[1, 2, 3, 4, 5], &[1, 2, 3, 4, 5, 6, 7]]).unwrap();
        assert_eq!(missing_ranks(&c1).unwrap(), 5);
        assert_eq!(missing_ranks(&Chain(vec![Subset::full(m)])).unwrap(), m);
        assert_eq!(missing_ranks(&Chain::empty()), Err(Error::EmptyChain));
        assert!(Chain::from_elements(&[&[1, 2], &[1]]).is_err());
    }

    #[test]
    fn face_order_example() {
        let c1 = Chain::from_elements(&[&[], &[1, 2], &[1, 2, 3], &[1, 2, 3, 4]]).unwrap();
        let c2 = Chain::from_elements(&[&[1, 2, 5], &[1, 2, 3, 4, 5]]).unwrap();
        let (r1, r2, le) = r_set_and_order(&c1, &c2, 6, 4);
        let expect2: BTreeSet<Marker> =
            [Marker::Elem(6), Marker::Set(Subset::from_elements(&[3, 4]))].into();
        let expect1: BTreeSet<Marker> = [
            Marker::Elem(5),
            Marker::Elem(6),
            Marker::Set(Subset::from_elements(&[4])),
            Marker::Set(Subset::from_elements(&[3, 4])),
            Marker::Set(Subset::full(6)),
        ]
        .into();
        assert_eq!(r2, expect2);
        assert_eq!(r1, expect1);
        assert!(le);
        let (_, _, reverse) = r_set_and_order(&c2, &c1, 6, 4);
        assert!(!reverse);
    }

    #[test]
    fn empty_chain_is_bottom_and_full_chain_is_top() {
        let (m, n) = (3, 2);
        let top = Chain(vec![Subset::full(m)]);
        assert!(r_set(&top, m, n).is_empty());
        for c in enumerate_chains(m, n, true) {
            assert!(r_set_and_order(&Chain::empty(), &c, m, n).2);
            assert!(r_set_and_order(&c, &top, m, n).2);
        }
    }
}
