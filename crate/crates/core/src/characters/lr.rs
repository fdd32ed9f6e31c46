//! Littlewood–Richardson coefficients by direct enumeration of LR tableaux.
//!
//! Used to cross-check the orbit-method tensor product on type A. Sizes
//! here are tiny, so the enumeration is deliberately naive.

use std::collections::BTreeMap;

/// Partitions of `n` with at most `max_len` parts, in decreasing
/// lexicographic order.
pub fn partitions(n: u32, max_len: usize) -> Vec<Vec<u32>> {
    fn go(n: u32, max_part: u32, max_len: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        if prefix.len() == max_len {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            prefix.push(p);
            go(n - p, p, max_len, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, max_len, &mut Vec::new(), &mut out);
    out
}

fn part(p: &[u32], i: usize) -> u32 {
    p.get(i).copied().unwrap_or(0)
}

/// Shapes `ν ⊇ λ` with `|ν| = |λ| + extra` and at most `max_len` rows.
fn containing_shapes(lambda: &[u32], extra: u32, max_len: usize) -> Vec<Vec<u32>> {
    fn go(
        lambda: &[u32],
        row: usize,
        left: u32,
        max_len: usize,
        prefix: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if row == max_len {
            if left == 0 {
                let mut nu = prefix.clone();
                while nu.last() == Some(&0) {
                    nu.pop();
                }
                out.push(nu);
            }
            return;
        }
        let lo = part(lambda, row);
        let hi = if row == 0 { lo + left } else { prefix[row - 1].min(lo + left) };
        if hi < lo {
            return;
        }
        for v in lo..=hi {
            prefix.push(v);
            go(lambda, row + 1, left - (v - lo), max_len, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if lambda.len() > max_len {
        return out;
    }
    go(lambda, 0, extra, max_len, &mut Vec::new(), &mut out);
    out
}

/// Number of LR tableaux of shape `ν/λ` and content `μ`: semistandard
/// fillings whose reverse row reading word is a lattice word.
pub fn lr_coefficient(lambda: &[u32], mu: &[u32], nu: &[u32]) -> u64 {
    let rows = nu.len();
    if (0..rows.max(lambda.len())).any(|i| part(lambda, i) > part(nu, i)) {
        return 0;
    }
    let size_nu: u32 = nu.iter().sum();
    let size: u32 = lambda.iter().sum::<u32>() + mu.iter().sum::<u32>();
    if size_nu != size {
        return 0;
    }
    let letters = mu.len();
    let mut filling: Vec<Vec<u32>> = (0..rows)
        .map(|i| vec![0; (part(nu, i) - part(lambda, i)) as usize])
        .collect();
    let mut content = vec![0u32; letters + 1];

    fn fill(
        lambda: &[u32],
        nu: &[u32],
        mu: &[u32],
        filling: &mut Vec<Vec<u32>>,
        content: &mut Vec<u32>,
        row: usize,
        col: usize,
    ) -> u64 {
        if row == nu.len() {
            return u64::from((1..content.len()).all(|i| content[i] == mu[i - 1]));
        }
        let width = filling[row].len();
        if col == width {
            // Row finished: its letters are read right to left; the running
            // content must stay a lattice word at every step.
            let mut running = content.clone();
            for &v in filling[row].iter() {
                running[v as usize] -= 1;
            }
            for &v in filling[row].iter().rev() {
                running[v as usize] += 1;
                let v = v as usize;
                if v > 1 && running[v] > running[v - 1] {
                    return 0;
                }
            }
            return fill(lambda, nu, mu, filling, content, row + 1, 0);
        }
        let abs_col = part(lambda, row) as usize + col;
        let left = if col > 0 { filling[row][col - 1] } else { 1 };
        let mut total = 0;
        for v in left.max(1)..=(mu.len() as u32) {
            if content[v as usize] >= mu[v as usize - 1] {
                continue;
            }
            if row > 0 {
                let above_start = part(lambda, row - 1) as usize;
                if abs_col >= above_start {
                    let above = filling[row - 1][abs_col - above_start];
                    if v <= above {
                        continue;
                    }
                }
            }
            filling[row][col] = v;
            content[v as usize] += 1;
            total += fill(lambda, nu, mu, filling, content, row, col + 1);
            content[v as usize] -= 1;
        }
        total
    }

    if letters == 0 {
        return u64::from(lambda.iter().zip(nu).all(|(a, b)| a == b) && lambda.len() == nu.len());
    }
    fill(lambda, nu, mu, &mut filling, &mut content, 0, 0)
}

/// `s_λ s_μ = Σ c^ν_{λμ} s_ν`, keeping only `ν` with at most `max_len` rows.
pub fn lr_product(lambda: &[u32], mu: &[u32], max_len: usize) -> BTreeMap<Vec<u32>, u64> {
    let extra: u32 = mu.iter().sum();
    containing_shapes(lambda, extra, max_len)
        .into_iter()
        .filter_map(|nu| {
            let c = lr_coefficient(lambda, mu, &nu);
            (c > 0).then_some((nu, c))
        })
        .collect()
}
