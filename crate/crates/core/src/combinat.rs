//! Small enumeration helpers shared across modules.

/// Iterator over the `k`-subsets of `{0, ..., n-1}` in colexicographic order.
///
/// Each subset is yielded as a strictly increasing index vector.
#[derive(Debug, Clone)]
pub struct ColexSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

pub fn colex_subsets(n: usize, k: usize) -> ColexSubsets {
    let current = (k <= n).then(|| (0..k).collect());
    ColexSubsets { n, current }
}

impl Iterator for ColexSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        let mut next = out.clone();
        // smallest position that can be bumped without colliding with its successor
        let mut i = 0;
        while i < k {
            let limit = if i + 1 < k { next[i + 1] } else { self.n };
            if next[i] + 1 < limit {
                next[i] += 1;
                for (j, slot) in next.iter_mut().enumerate().take(i) {
                    *slot = j;
                }
                self.current = Some(next);
                return Some(out);
            }
            i += 1;
        }
        Some(out)
    }
}

/// Rearranges `items` into the lexicographically next permutation.
/// Returns `false` (leaving `items` sorted ascending) once the last one has been passed.
pub fn next_permutation<T: Ord>(items: &mut [T]) -> bool {
    if items.len() < 2 {
        return false;
    }
    let mut i = items.len() - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        items.reverse();
        return false;
    }
    let mut j = items.len() - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}

/// All permutations of `0..n` in lexicographic order of their image sequences.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![current.clone()];
    while next_permutation(&mut current) {
        out.push(current.clone());
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}
