//! Worked tables for the small modules, transcribed by hand, plus oracles
//! shared by the integration tests and the acceptance harness.
#![allow(dead_code)]

use num::{BigInt, BigRational, Zero};
use slgt_core::{sqrt_rational, GtPattern, Partition, RadicalScalar};

/// `n = 3` pattern from the upper/lower rows `"p1,p2;q"` under `m`.
pub fn pat3(m: &str, lower: &str) -> GtPattern {
    format!("{m};{lower}").parse().expect("table pattern")
}

pub fn part(s: &str) -> Partition {
    s.parse().expect("table partition")
}

/// `a/b · √r`.
pub fn rad(a: i64, b: i64, r: u64) -> RadicalScalar {
    RadicalScalar::term(BigRational::new(a.into(), b.into()), r)
}

pub const BASIS_110: [&str; 3] = ["1,1;1", "1,0;1", "1,0;0"];

pub const BASIS_210: [&str; 8] = [
    "1,0;0", "1,0;1", "1,1;1", "2,0;0", "2,0;1", "2,1;1", "2,0;2", "2,1;2",
];

/// Eigenvalue tables over `BASIS_210`.
pub const H11_210: [i64; 8] = [0, 1, 1, 0, 1, 1, 2, 2];
pub const H22_210: [i64; 8] = [1, 0, 1, 2, 1, 2, 0, 1];
pub const H33_210: [i64; 8] = [2, 2, 1, 1, 1, 0, 1, 0];

/// `(source, target, coefficient as (a, b, r) = a/b·√r)`.
pub type ActionRow = (&'static str, &'static str, (i64, i64, u64));

pub const E12_210: [ActionRow; 4] = [
    ("1,0;0", "1,0;1", (1, 1, 1)),
    ("2,0;0", "2,0;1", (1, 1, 2)),
    ("2,0;1", "2,0;2", (1, 1, 2)),
    ("2,1;1", "2,1;2", (1, 1, 1)),
];

pub const F21_210: [ActionRow; 4] = [
    ("1,0;1", "1,0;0", (1, 1, 1)),
    ("2,0;1", "2,0;0", (1, 1, 2)),
    ("2,0;2", "2,0;1", (1, 1, 2)),
    ("2,1;2", "2,1;1", (1, 1, 1)),
];

/// As printed; the `(1,0;1)` row lists only its first term.
pub const E23_210: [ActionRow; 5] = [
    ("1,0;0", "2,0;0", (1, 1, 1)),
    ("1,0;1", "2,0;1", (1, 2, 2)),
    ("1,1;1", "2,1;1", (1, 2, 6)),
    ("2,0;1", "2,1;1", (1, 2, 2)),
    ("2,0;2", "2,1;2", (1, 1, 1)),
];

/// As printed; the `(2,1;1)` row lists only its first term.
pub const F32_210: [ActionRow; 5] = [
    ("1,1;1", "1,0;1", (1, 2, 6)),
    ("2,0;0", "1,0;0", (1, 1, 1)),
    ("2,0;1", "1,0;1", (1, 2, 2)),
    ("2,1;1", "1,1;1", (1, 2, 6)),
    ("2,1;2", "2,0;2", (1, 1, 1)),
];

/// Terms missing from the printed rows, forced by adjointness.
pub const E23_MISSING: ActionRow = ("1,0;1", "1,1;1", (1, 2, 6));
pub const F32_MISSING: ActionRow = ("2,1;1", "2,0;1", (1, 2, 2));

pub const WEIGHTS_210: [(&str, &str); 8] = [
    ("1,0;0", "ε_2 + 2ε_3"),
    ("1,0;1", "ε_1 + 2ε_3"),
    ("1,1;1", "ε_1 + ε_2 + ε_3"),
    ("2,0;0", "2ε_2 + ε_3"),
    ("2,0;1", "ε_1 + ε_2 + ε_3"),
    ("2,1;1", "ε_1 + 2ε_2"),
    ("2,0;2", "2ε_1 + ε_3"),
    ("2,1;2", "2ε_1 + ε_2"),
];

/// `(pattern, written exponents, monomial)` for the canonical schedule.
pub type WordRow = (&'static str, [u32; 3], &'static str);

pub const CANONICAL_210: [WordRow; 8] = [
    ("2,1;2", [0, 0, 0], "F12^0 F23^0 F12^0"),
    ("2,0;2", [0, 1, 0], "F12^0 F23^1 F12^0"),
    ("2,1;1", [0, 0, 1], "F12^1 F23^0 F12^0"),
    ("2,0;1", [0, 1, 1], "F12^1 F23^1 F12^0"),
    ("2,0;0", [0, 1, 2], "F12^2 F23^1 F12^0"),
    ("1,1;1", [1, 1, 0], "F12^0 F23^1 F12^1"),
    ("1,0;1", [1, 2, 0], "F12^0 F23^2 F12^1"),
    ("1,0;0", [1, 2, 1], "F12^1 F23^2 F12^1"),
];

pub const ALTERNATE_210: [WordRow; 8] = [
    ("2,1;2", [0, 0, 0], "F23^0 F12^0 F23^0"),
    ("2,0;2", [0, 0, 1], "F23^1 F12^0 F23^0"),
    ("2,1;1", [0, 1, 0], "F23^0 F12^1 F23^0"),
    ("2,0;1", [0, 1, 1], "F23^1 F12^1 F23^0"),
    ("2,0;0", [1, 2, 0], "F23^0 F12^2 F23^1"),
    ("1,1;1", [0, 1, 1], "F23^1 F12^1 F23^0"),
    ("1,0;1", [0, 1, 2], "F23^2 F12^1 F23^0"),
    ("1,0;0", [1, 2, 1], "F23^1 F12^2 F23^1"),
];

/// The printed set following the alternate table; seven elements.
pub const ALTERNATE_210_SET: [&str; 7] = [
    "F23^0 F12^0 F23^0",
    "F23^1 F12^0 F23^0",
    "F23^0 F12^1 F23^0",
    "F23^1 F12^1 F23^0",
    "F23^0 F12^2 F23^1",
    "F23^2 F12^1 F23^0",
    "F23^1 F12^2 F23^1",
];

pub const CANONICAL_320: [WordRow; 15] = [
    ("3,2;3", [0, 0, 0], "F12^0 F23^0 F12^0"),
    ("3,1;3", [0, 1, 0], "F12^0 F23^1 F12^0"),
    ("3,0;3", [0, 2, 0], "F12^0 F23^2 F12^0"),
    ("3,2;2", [0, 0, 1], "F12^1 F23^0 F12^0"),
    ("3,1;2", [0, 1, 1], "F12^1 F23^1 F12^0"),
    ("3,0;2", [0, 2, 1], "F12^1 F23^2 F12^0"),
    ("3,1;1", [0, 1, 2], "F12^2 F23^1 F12^0"),
    ("3,0;1", [0, 2, 2], "F12^2 F23^2 F12^0"),
    ("3,0;0", [0, 2, 3], "F12^3 F23^2 F12^0"),
    ("2,2;2", [1, 1, 0], "F12^0 F23^1 F12^1"),
    ("2,1;2", [1, 2, 0], "F12^0 F23^2 F12^1"),
    ("2,0;2", [1, 3, 0], "F12^0 F23^3 F12^1"),
    ("2,1;1", [1, 2, 1], "F12^1 F23^2 F12^1"),
    ("2,0;1", [1, 3, 1], "F12^1 F23^3 F12^1"),
    ("2,0;0", [1, 3, 2], "F12^2 F23^3 F12^1"),
];

pub const ALTERNATE_320: [WordRow; 15] = [
    ("3,2;3", [0, 0, 0], "F23^0 F12^0 F23^0"),
    ("3,1;3", [0, 0, 1], "F23^1 F12^0 F23^0"),
    ("3,0;3", [0, 0, 2], "F23^2 F12^0 F23^0"),
    ("3,2;2", [0, 1, 0], "F23^0 F12^1 F23^0"),
    ("3,1;2", [0, 1, 1], "F23^1 F12^1 F23^0"),
    ("3,0;2", [0, 1, 2], "F23^2 F12^1 F23^0"),
    ("3,1;1", [1, 2, 0], "F23^0 F12^2 F23^1"),
    ("3,0;1", [1, 2, 1], "F23^1 F12^2 F23^1"),
    ("3,0;0", [2, 3, 0], "F23^0 F12^3 F23^2"),
    ("2,2;2", [0, 1, 1], "F23^1 F12^1 F23^0"),
    ("2,1;2", [0, 1, 2], "F23^2 F12^1 F23^0"),
    ("2,0;2", [0, 1, 3], "F23^3 F12^1 F23^0"),
    ("2,1;1", [1, 2, 1], "F23^1 F12^2 F23^1"),
    ("2,0;1", [1, 2, 2], "F23^2 F12^2 F23^1"),
    ("2,0;0", [2, 3, 1], "F23^1 F12^3 F23^2"),
];

/// The five-pattern sum of the `(3,2,0)` walk-through.
pub const WALKTHROUGH_320: [&str; 5] = ["3,1;1", "3,1;2", "2,2;2", "3,0;1", "2,1;1"];

fn ratio(num: i64, den: i64) -> Option<BigRational> {
    if den == 0 {
        None
    } else {
        Some(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
}

fn root(sq: Option<BigRational>) -> RadicalScalar {
    let sq = sq.expect("closed form denominator vanished on a valid target");
    assert!(!sq.is_zero(), "closed form vanished on a valid target");
    sqrt_rational(&sq).expect("closed form radicand negative on a valid target")
}

/// `(target lower rows, coefficient)` pairs from the printed `n = 3`
/// formulas, skipping invalid targets.
pub fn closed_form(gen: &str, xi: &GtPattern) -> Vec<(GtPattern, RadicalScalar)> {
    let m: Vec<i64> = xi.row(3).to_vec();
    let (m1, m2, m3) = (m[0], m[1], m[2]);
    let (p1, p2, q) = (xi.entry(2, 1), xi.entry(2, 2), xi.entry(1, 1));
    let mut out = Vec::new();
    let mut push = |k: usize, i: usize, d: i64, c: &dyn Fn() -> Option<BigRational>| {
        if let Some(t) = xi.shifted(k, i, d) {
            out.push((t, root(c())));
        }
    };
    match gen {
        "E12" => push(1, 1, 1, &|| ratio((p1 - q) * (q - p2 + 1), 1)),
        "F21" => push(1, 1, -1, &|| ratio((p1 - q + 1) * (q - p2), 1)),
        "E23" => {
            push(2, 1, 1, &|| {
                ratio(
                    (m1 - p1) * (m2 - p1 - 1) * (m3 - p1 - 2) * (p1 - q + 1),
                    (p1 - p2 + 2) * (p1 - p2 + 1),
                )
            });
            push(2, 2, 1, &|| {
                ratio(
                    (m1 - p2 + 1) * (m2 - p2) * (m3 - p2 - 1) * (p2 - q),
                    (p1 - p2 + 1) * (p1 - p2),
                )
            });
        }
        "F32" => {
            push(2, 1, -1, &|| {
                ratio(
                    (m1 - p1 + 1) * (m2 - p1) * (m3 - p1 - 1) * (p1 - q),
                    (p1 - p2 + 1) * (p1 - p2),
                )
            });
            push(2, 2, -1, &|| {
                ratio(
                    (m1 - p2 + 2) * (m2 - p2 + 1) * (m3 - p2) * (p2 - q - 1),
                    (p1 - p2 + 2) * (p1 - p2 + 1),
                )
            });
        }
        other => panic!("no closed form for {other}"),
    }
    out
}

/// All normalized partitions with `n` parts and `m_1 ≤ max`.
pub fn partitions(n: usize, max: i64) -> Vec<Partition> {
    fn rec(n: usize, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if cur.len() + 1 == n {
            let mut parts = cur.clone();
            parts.push(0);
            out.push(Partition::new(parts).unwrap());
            return;
        }
        for v in (0..=cap).rev() {
            cur.push(v);
            rec(n, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max, &mut Vec::new(), &mut out);
    out
}

/// Brute-force pattern count: every integer array between the bounds,
/// filtered by the interleaving conditions.
pub fn brute_count(p: &Partition) -> usize {
    let top = p.parts().to_vec();
    fn rec(row: &[i64]) -> usize {
        if row.len() == 1 {
            return 1;
        }
        let lo = *row.last().unwrap();
        let hi = row[0];
        let k = row.len() - 1;
        let mut total = 0;
        let mut cand = vec![lo; k];
        loop {
            if (0..k).all(|i| row[i] >= cand[i] && cand[i] >= row[i + 1]) {
                total += rec(&cand);
            }
            // odometer over [lo, hi]^k
            let mut i = 0;
            loop {
                if i == k {
                    return total;
                }
                if cand[i] < hi {
                    cand[i] += 1;
                    break;
                }
                cand[i] = lo;
                i += 1;
            }
        }
    }
    rec(&top)
}

/// `Σ_k (Σ row_β(k) − Σ row_ξ(k))` over the rows below the top.
pub fn sum_to_beta_content(xi: &GtPattern) -> i64 {
    let top = xi.row(xi.n());
    (1..xi.n())
        .map(|k| top[..k].iter().sum::<i64>() - xi.row(k).iter().sum::<i64>())
        .sum()
}
