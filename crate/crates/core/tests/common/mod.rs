//! Shared corpora and independent oracles for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rmx_core::{
    from_table, Bicharacter, CycNumber, FunctionTable, GradedSpace, Group, Rational, Side,
    Tensor2,
};

/// Every presentation used by the exhaustive suites, order ≤ 12.
pub const CORPUS: &[&str] = &[
    "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z11", "Z12", "Z2xZ2",
    "Z4xZ2", "Z2xZ2xZ2", "Z3xZ3", "Z6xZ2", "Z2xZ3",
];

pub fn groups_up_to(order: usize) -> Vec<Group> {
    CORPUS
        .iter()
        .map(|s| Group::parse(s).unwrap())
        .filter(|g| g.order() <= order)
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// ⟨α', α⟩ straight from the exponent vectors: Π_i ζ_{d_i}^{r_i a_i},
/// written at conductor e as ζ_e^{Σ r_i a_i e/d_i}.
pub fn pairing_oracle(g: &Group, chi: usize, a: usize) -> CycNumber {
    let e = g.exponent() as i64;
    let (r, x) = (g.exponents(chi), g.exponents(a));
    let p: i64 = g
        .spec()
        .orders()
        .iter()
        .enumerate()
        .map(|(i, &d)| r[i] as i64 * x[i] as i64 * (e / d as i64))
        .sum();
    CycNumber::root_of_unity(g.field(), p)
}

/// Fourfold sum (1/n²) Σ_{α',β',α,β} σ(α,β)⟨α',α⟩*⟨β',β⟩* α'⊗β' with plain
/// field operations and complex conjugation for the starred pairings.
pub fn ansatz_oracle(t: &FunctionTable) -> Tensor2 {
    let g = t.group();
    let n = g.order();
    let inv_n2 = Rational::new(1, (n * n) as i64);
    let mut terms = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let mut c = g.zero();
            for a in 0..n {
                let pa = pairing_oracle(g, x, a).conjugate();
                for b in 0..n {
                    let pb = pairing_oracle(g, y, b).conjugate();
                    c = &c + &(&(t.get(a, b) * &pa) * &pb);
                }
            }
            terms.push(((x, y), c.scale(&inv_n2)));
        }
    }
    Tensor2::from_terms(g, Side::Star, terms)
}

/// Counts bicharacters without the K-matrix parameterization: every
/// assignment of roots ζ_e^t to generator pairs is extended by
/// σ(a, b) = Π v_ij^{a_i b_j} and kept iff the table validates.
pub fn brute_force_bicharacter_count(g: &Group) -> usize {
    let r = g.spec().rank();
    let e = g.exponent() as usize;
    let n = g.order();
    let slots = r * r;
    let total = e.pow(slots as u32);
    let mut seen = BTreeSet::new();
    let mut assign = vec![0usize; slots];
    for code in 0..total {
        let mut c = code;
        for s in assign.iter_mut() {
            *s = c % e;
            c /= e;
        }
        let table = FunctionTable::from_fn(g, |a, b| {
            let (xa, xb) = (g.exponents(a), g.exponents(b));
            let mut p = 0usize;
            for i in 0..r {
                for j in 0..r {
                    p += assign[i * r + j] * xa[i] as usize * xb[j] as usize;
                }
            }
            CycNumber::root_of_unity(g.field(), p as i64)
        });
        if from_table(&table).is_ok() {
            let key: Vec<String> = (0..n * n)
                .map(|k| table.get(k / n, k % n).to_string())
                .collect();
            seen.insert(key);
        }
    }
    seen.len()
}

/// Random nowhere-zero value: a root of unity, or a small rational.
fn random_value(g: &Group, rng: &mut ChaCha8Rng) -> CycNumber {
    if rng.gen_bool(0.75) {
        g.root(rng.gen_range(0..g.exponent() as i64))
    } else {
        let choices = [(2, 1), (-1, 1), (1, 2), (3, 1), (-2, 3)];
        let (p, q) = choices[rng.gen_range(0..choices.len())];
        CycNumber::from_rational(g.field(), Rational::new(p, q))
    }
}

/// At least `count` nowhere-zero tables that are not bicharacters. Half are
/// bicharacters with a single entry perturbed, half are fully random.
pub fn non_bicharacter_corpus(g: &Group, count: usize, seed: u64) -> Vec<FunctionTable> {
    let mut rng = rng(seed ^ (g.order() as u64) << 32);
    let n = g.order();
    let bichars: Vec<Bicharacter> = rmx_core::enumerate_all(g).collect();
    let mut out = Vec::new();
    while out.len() < count {
        let t = if out.len() % 2 == 0 {
            let s = &bichars[rng.gen_range(0..bichars.len())];
            let mut t = s.table();
            let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let v = t.get(a, b) * &random_value(g, &mut rng);
            t.set(a, b, v);
            t
        } else {
            FunctionTable::from_fn(g, |_, _| random_value(g, &mut rng))
        };
        if t.first_zero().is_none() && from_table(&t).is_err() {
            out.push(t);
        }
    }
    out
}

/// A space with `d` basis vectors in every degree.
pub fn uniform_space(g: &Group, d: usize) -> GradedSpace {
    GradedSpace::from_dims(g, &(0..g.order()).map(|i| (i, d)).collect()).unwrap()
}

/// Random per-degree dimensions in `0..=max`.
pub fn random_space(g: &Group, max: usize, rng: &mut ChaCha8Rng) -> GradedSpace {
    let dims = (0..g.order())
        .map(|i| (i, rng.gen_range(0..=max)))
        .collect();
    GradedSpace::from_dims(g, &dims).unwrap()
}

/// Every space with per-degree dimensions in {0, 1, 2}.
pub fn all_small_spaces(g: &Group) -> Vec<GradedSpace> {
    let n = g.order();
    (0..3usize.pow(n as u32))
        .map(|mut code| {
            let dims = (0..n)
                .map(|i| {
                    let d = code % 3;
                    code /= 3;
                    (i, d)
                })
                .collect();
            GradedSpace::from_dims(g, &dims).unwrap()
        })
        .collect()
}

/// A random element of ℚ(ζ_N) with small coefficients.
pub fn random_cyc(g: &Group, rng: &mut ChaCha8Rng) -> CycNumber {
    let e = g.exponent() as i64;
    let mut acc = g.zero();
    for _ in 0..rng.gen_range(1..4) {
        let r = Rational::new(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        acc = &acc + &g.root(rng.gen_range(0..e)).scale(&r);
    }
    acc
}
