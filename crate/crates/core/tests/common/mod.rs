//! Reference arithmetic for tests, written from the defining formulas and
//! sharing no code with the library.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;

/// `(power of s, power of t) -> coefficient`.
pub type Poly2 = BTreeMap<(u32, u32), BigInt>;

/// `C_0..=C_max` by the Segner recurrence.
pub fn catalans(max: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::from(1)];
    for n in 0..max {
        let next = (0..=n).map(|i| &c[i] * &c[n - i]).sum();
        c.push(next);
    }
    c
}

/// Row `n` of Pascal's triangle.
pub fn pascal(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    for _ in 0..n {
        let mut next = vec![BigInt::from(1)];
        next.extend(row.windows(2).map(|w| &w[0] + &w[1]));
        next.push(BigInt::from(1));
        row = next;
    }
    row
}

pub fn choose(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::from(0);
    }
    pascal(n as usize)[k as usize].clone()
}

fn add(p: &mut Poly2, key: (u32, u32), c: BigInt) {
    let e = p.entry(key).or_insert_with(|| BigInt::from(0));
    *e += c;
    if *e == BigInt::from(0) {
        p.remove(&key);
    }
}

/// `p_n = sum_k (-1)^k C(n-k, k) t^(n-k)`, placed at `s^s_pow`.
pub fn p_n(n: u32, s_pow: u32) -> Poly2 {
    let mut out = Poly2::new();
    for k in 0..=n / 2 {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        add(&mut out, (s_pow, n - k), choose(i64::from(n - k), i64::from(k)) * sign);
    }
    out
}

/// Complete basis of a straight edge with `a` segments: `sum_k C(a-1, k-1) s^k p_k`.
pub fn p_bar(a: u32) -> Poly2 {
    let mut out = Poly2::new();
    for k in 1..=a {
        let w = choose(i64::from(a - 1), i64::from(k - 1));
        for (key, c) in p_n(k, k) {
            add(&mut out, key, c * &w);
        }
    }
    out
}

pub fn mul(a: &Poly2, b: &Poly2) -> Poly2 {
    let mut out = Poly2::new();
    for (&(s1, t1), c1) in a {
        for (&(s2, t2), c2) in b {
            add(&mut out, (s1 + s2, t1 + t2), c1 * c2);
        }
    }
    out
}

pub fn from_terms(terms: &[(u32, u32, i64)]) -> Poly2 {
    let mut out = Poly2::new();
    for &(s, t, c) in terms {
        add(&mut out, (s, t), BigInt::from(c));
    }
    out
}

/// `t^n -> C_(n-2)` (zero below `n = 2`); returns `s-power -> value`.
pub fn pair(p: &Poly2) -> BTreeMap<u32, BigInt> {
    let top = p.keys().map(|&(_, t)| t as usize).max().unwrap_or(0);
    let c = catalans(top);
    let mut out: BTreeMap<u32, BigInt> = BTreeMap::new();
    for (&(s, t), coeff) in p {
        if t >= 2 {
            *out.entry(s).or_insert_with(|| BigInt::from(0)) += coeff * &c[t as usize - 2];
        }
    }
    out.retain(|_, v| *v != BigInt::from(0));
    out
}

/// Renders `s-power -> value` like the library's polynomial text.
pub fn render(p: &BTreeMap<u32, BigInt>) -> String {
    if p.is_empty() {
        return "0".into();
    }
    p.iter()
        .rev()
        .map(|(k, c)| match k {
            0 => format!("{c}"),
            1 => format!("{c}*s"),
            _ => format!("{c}*s^{k}"),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Small deterministic generator for exhaustive-style checks.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn below(&mut self, m: u64) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (self.0 >> 33) % m
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// All distinct permutations of `items`, in lexicographic order.
pub fn permutations(items: &[u32]) -> Vec<Vec<u32>> {
    let mut v = items.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    loop {
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else { return out };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot has a successor");
        v.swap(i - 1, j);
        v[i..].reverse();
        out.push(v.clone());
    }
}

/// Multisets of size `len` over `1..=max`, each sorted.
pub fn multisets(len: usize, max: u32) -> Vec<Vec<u32>> {
    fn go(len: usize, lo: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in lo..=max {
            cur.push(v);
            go(len, v, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, 1, max, &mut Vec::new(), &mut out);
    out
}

/// Every height vector `(0, h_1, .., h_(n-1), 0)` with `|h_i| <= bound`.
pub fn height_grid(segments: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0]];
    for _ in 1..segments {
        out = out
            .into_iter()
            .flat_map(|v| (-bound..=bound).map(move |h| [v.clone(), vec![h]].concat()))
            .collect();
    }
    out.into_iter().map(|mut v| {
        v.push(0);
        v
    }).collect()
}
