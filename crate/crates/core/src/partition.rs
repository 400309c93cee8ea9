//! Integer partitions and symmetric-group characters by the
//! Murnaghan–Nakayama rule.

use std::fmt;

/// A partition as a non-increasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Conjugate partition (rows and columns of the Young diagram swapped).
    pub fn transpose(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((1..=width).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n`, in reverse lexicographic order: `(n)` first and
/// `(1,...,1)` last.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `chi_lambda` evaluated on the class of cycle type `mu`.
///
/// Works on beta-sets: removing a rim hook of length `r` moves one bead from
/// position `b` to the free position `b - r`, with sign `(-1)` to the number of
/// beads jumped over.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.size(), mu.size(), "partitions of different sizes");
    let len = lambda.0.len();
    let beta: Vec<usize> = lambda
        .0
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    strip(beta, &mu.0)
}

fn strip(beta: Vec<usize>, hooks: &[usize]) -> i64 {
    let Some((&r, rest)) = hooks.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (pos, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let jumped = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut next = beta.clone();
        next[pos] = target;
        let value = strip(next, rest);
        total += if jumped % 2 == 0 { value } else { -value };
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions(3)[0], Partition::new(vec![3]));
        assert_eq!(partitions(3)[2], Partition::new(vec![1, 1, 1]));
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(Partition::new(vec![3, 1]).transpose(), Partition::new(vec![2, 1, 1]));
        assert_eq!(Partition::new(vec![2, 2]).transpose(), Partition::new(vec![2, 2]));
        for p in partitions(7) {
            assert_eq!(p.transpose().transpose(), p);
        }
    }

    #[test]
    fn s3_characters() {
        let classes = [vec![1, 1, 1], vec![2, 1], vec![3]].map(Partition::new);
        let row = |l: Vec<usize>| -> Vec<i64> {
            let l = Partition::new(l);
            classes.iter().map(|m| mn_character(&l, m)).collect()
        };
        assert_eq!(row(vec![3]), vec![1, 1, 1]);
        assert_eq!(row(vec![1, 1, 1]), vec![1, -1, 1]);
        assert_eq!(row(vec![2, 1]), vec![2, 0, -1]);
    }

    #[test]
    fn degrees_square_sum() {
        for n in 1..=7usize {
            let ones = Partition::new(vec![1; n]);
            let sum: i64 = partitions(n).iter().map(|l| mn_character(l, &ones).pow(2)).sum();
            assert_eq!(sum, (1..=n as i64).product::<i64>());
        }
    }

    #[test]
    fn display() {
        assert_eq!(Partition::new(vec![1, 2]).to_string(), "(2,1)");
    }
}
