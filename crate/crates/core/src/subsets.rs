/// All `k`-subsets of `0..n` as bitmasks, in increasing numeric (colex) order.
#[derive(Clone, Debug)]
pub struct KSubsets {
    n: usize,
    next: Option<u64>,
}

impl KSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        debug_assert!(n <= 64);
        let next = if k > n {
            None
        } else if k == 64 {
            Some(u64::MAX)
        } else {
            Some((1u64 << k) - 1)
        };
        Self { n, next }
    }
}

impl Iterator for KSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let low = cur & cur.wrapping_neg();
            let ripple = cur.wrapping_add(low);
            if ripple == 0 {
                None
            } else {
                let ones = ((cur ^ ripple) >> 2) / low;
                let nxt = ripple | ones;
                (self.n == 64 || nxt >> self.n == 0).then_some(nxt)
            }
        };
        Some(cur)
    }
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}
