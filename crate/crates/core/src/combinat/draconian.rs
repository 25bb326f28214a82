use serde::Serialize;

use super::subset::Subset;

/// Which sum constraint a draconian enumeration uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Entries sum to exactly `m` (volume formula).
    Volume,
    /// Entries sum to at most `m` (Ehrhart formula).
    Ehrhart,
}

/// Nonnegative integer vector indexed by the sets `I_1, ..., I_N`: first the
/// singletons `{1}, ..., {m}`, then the pairs `{i, j}` with `i < j` in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DraconianSeq {
    pub m: usize,
    pub a: Vec<u32>,
}

impl DraconianSeq {
    pub fn singletons(&self) -> &[u32] {
        &self.a[..self.m]
    }

    pub fn pairs(&self) -> &[u32] {
        &self.a[self.m..]
    }

    pub fn total(&self) -> u32 {
        self.a.iter().sum()
    }
}

/// The index sets `I_k`: singletons first, then lexicographic pairs.
pub fn index_sets(m: usize) -> Vec<Subset> {
    let mut sets: Vec<Subset> = (1..=m).map(Subset::singleton).collect();
    sets.extend(pair_sets(m));
    sets
}

/// The pairs `{i, j}`, `i < j`, in lexicographic order.
pub fn pair_sets(m: usize) -> Vec<Subset> {
    let mut sets = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            sets.push(Subset::from_elements(&[i, j]));
        }
    }
    sets
}

/// Hall-type condition `sum_{k in S} a_k <= |∪_{k in S} I_k|` for all
/// nonempty `S`, decided by bipartite matching: every one of the `a_k` tokens
/// of set `k` must be matched to a distinct element of `I_k`.
pub fn hall_by_matching(a: &[u32], sets: &[Subset], m: usize) -> bool {
    let tokens: Vec<Subset> = a
        .iter()
        .zip(sets)
        .flat_map(|(&count, &set)| std::iter::repeat_n(set, count as usize))
        .collect();
    if tokens.len() > m {
        return false;
    }
    let mut owner: Vec<Option<usize>> = vec![None; m + 1];
    fn augment(
        token: usize,
        tokens: &[Subset],
        owner: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        for e in tokens[token].elements() {
            if visited[e] {
                continue;
            }
            visited[e] = true;
            let free = match owner[e] {
                None => true,
                Some(other) => augment(other, tokens, owner, visited),
            };
            if free {
                owner[e] = Some(token);
                return true;
            }
        }
        false
    }
    (0..tokens.len()).all(|t| {
        let mut visited = vec![false; m + 1];
        augment(t, &tokens, &mut owner, &mut visited)
    })
}

/// The same condition by scanning subsets of the support. Indices with
/// `a_k = 0` only enlarge the union, so restricting to the support loses
/// nothing.
pub fn hall_by_scan(a: &[u32], sets: &[Subset]) -> bool {
    let support: Vec<usize> = (0..a.len()).filter(|&k| a[k] > 0).collect();
    if support.len() >= 32 {
        return false;
    }
    (1u64..1 << support.len()).all(|mask| {
        let mut sum = 0u32;
        let mut union = Subset::EMPTY;
        for (bit, &k) in support.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                sum += a[k];
                union = union.union(sets[k]);
            }
        }
        sum as usize <= union.len()
    })
}

fn bounds_ok(a: &[u32], m: usize) -> bool {
    a.len() == m * (m + 1) / 2
        && a.iter()
            .enumerate()
            .all(|(k, &v)| v <= if k < m { 1 } else { 2 })
}

/// Draconian test via matching (the default route).
pub fn draconian_check(a: &DraconianSeq) -> bool {
    bounds_ok(&a.a, a.m) && hall_by_matching(&a.a, &index_sets(a.m), a.m)
}

/// Draconian test via exhaustive subset scan (the oracle route).
pub fn draconian_check_scan(a: &DraconianSeq) -> bool {
    bounds_ok(&a.a, a.m) && hall_by_scan(&a.a, &index_sets(a.m))
}

/// Enumerates nonnegative vectors over `sets` with per-entry caps and the
/// given total constraint, keeping those that pass the Hall condition.
/// Output is in lexicographic order of the vectors.
pub fn enumerate_hall_vectors(
    sets: &[Subset],
    caps: &[u32],
    m: usize,
    mode: Mode,
) -> Vec<Vec<u32>> {
    struct Search<'a> {
        sets: &'a [Subset],
        caps: &'a [u32],
        m: usize,
        mode: Mode,
        out: Vec<Vec<u32>>,
    }

    impl Search<'_> {
        fn go(&mut self, pos: usize, remaining: u32, current: &mut Vec<u32>) {
            // every prefix was checked on the way down, so a full vector is Hall
            if pos == self.sets.len() {
                if self.mode == Mode::Ehrhart || remaining == 0 {
                    self.out.push(current.clone());
                }
                return;
            }
            for v in 0..=self.caps[pos].min(remaining) {
                current.push(v);
                // a zero entry adds no token, so the checked prefix stays valid
                if v == 0 || hall_by_matching(current, &self.sets[..=pos], self.m) {
                    self.go(pos + 1, remaining - v, current);
                }
                current.pop();
            }
        }
    }

    let mut search = Search {
        sets,
        caps,
        m,
        mode,
        out: Vec::new(),
    };
    search.go(0, m as u32, &mut Vec::new());
    search.out
}

/// All draconian sequences for `m` under the given mode.
pub fn enumerate_draconian(m: usize, mode: Mode) -> Vec<DraconianSeq> {
    let sets = index_sets(m);
    let caps: Vec<u32> = (0..sets.len()).map(|k| if k < m { 1 } else { 2 }).collect();
    enumerate_hall_vectors(&sets, &caps, m, mode)
        .into_iter()
        .map(|a| DraconianSeq { m, a })
        .collect()
}

/// Sequences supported on the pairs only (entries at most 2), the indexing set
/// of the parking-function specialization at `n = m - 1`.
pub fn enumerate_pair_sequences(m: usize, mode: Mode) -> Vec<Vec<u32>> {
    let sets = pair_sets(m);
    let caps = vec![2; sets.len()];
    enumerate_hall_vectors(&sets, &caps, m, mode)
}
