//! Dense renaming of integer tuples, the shared step behind every
//! doubling-based identifier table in the crate.

/// Stable counting sort of `order` by `key(order[i])`, keys in `0..bound`.
fn counting_sort_by<F: Fn(usize) -> usize>(order: &[usize], bound: usize, key: F) -> Vec<usize> {
    let mut count = vec![0usize; bound + 1];
    for &x in order {
        count[key(x) + 1] += 1;
    }
    for b in 1..=bound {
        count[b] += count[b - 1];
    }
    let mut out = vec![0usize; order.len()];
    for &x in order {
        let k = key(x);
        out[count[k]] = x;
        count[k] += 1;
    }
    out
}

/// Assigns dense identifiers `0..count` to pairs so that equal pairs get
/// equal ids and ids follow the lexicographic order of the pairs. Both
/// components must be `< bound`. Returns `(ids, count)`.
pub fn rename_pairs(pairs: &[(u32, u32)], bound: usize) -> (Vec<u32>, usize) {
    let n = pairs.len();
    if n == 0 {
        return (Vec::new(), 0);
    }
    let idx: Vec<usize> = (0..n).collect();
    let by_second = counting_sort_by(&idx, bound, |x| pairs[x].1 as usize);
    let sorted = counting_sort_by(&by_second, bound, |x| pairs[x].0 as usize);
    let mut ids = vec![0u32; n];
    let mut next = 0u32;
    for w in 0..n {
        if w > 0 && pairs[sorted[w]] != pairs[sorted[w - 1]] {
            next += 1;
        }
        ids[sorted[w]] = next;
    }
    (ids, next as usize + 1)
}

/// Renames arbitrary symbols to dense ids preserving their order.
pub fn rename_symbols<T: Ord + Copy>(symbols: &[T]) -> (Vec<u32>, usize) {
    let mut distinct: Vec<T> = symbols.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let ids = symbols
        .iter()
        .map(|s| distinct.binary_search(s).expect("present") as u32)
        .collect();
    (ids, distinct.len())
}
