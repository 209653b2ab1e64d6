//! Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic only.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use rand::Rng;
use rmx_core::braiding::{braid_from_coquasi, braid_from_r, braid_graded, Comodule, Module};
use rmx_core::cyclotomic::{cyclotomic_polynomial, divisors, poly_mul};
use rmx_core::group::check_orthogonality_completeness;
use rmx_core::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn axiom_suite() -> Outcome {
    let mut total = 0usize;
    for g in groups_up_to(12) {
        let expected = bicharacter_count(&g);
        let all: Vec<Bicharacter> = enumerate_all(&g).collect();
        ensure(all.len() as u64 == expected, || {
            format!("{}: enumerated {} of {expected}", g.spec(), all.len())
        })?;
        let product: u64 = g
            .spec()
            .orders()
            .iter()
            .flat_map(|&a| g.spec().orders().iter().map(move |&b| (a, b)))
            .map(|(a, b)| rational::gcd(a as u64, b as u64))
            .product();
        ensure(product == expected, || format!("{}: Π gcd = {product}", g.spec()))?;
        if g.order() <= 8 {
            let brute = brute_force_bicharacter_count(&g);
            ensure(brute as u64 == expected, || {
                format!("{}: brute force found {brute}, expected {expected}", g.spec())
            })?;
        }
        for s in &all {
            let r = r_from_bicharacter(s);
            let rep = verify_urm(&r);
            ensure(rep.passed(), || {
                format!("{} {}: {:?}", g.spec(), s.k_spec(), rep.failures().collect::<Vec<_>>())
            })?;
            ensure(check_yang_baxter(&r).pass, || {
                format!("{} {}: Yang-Baxter fails", g.spec(), s.k_spec())
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} R-matrices pass URM1-URM4, counit, antipode and YBE"))
}

fn iff_direction() -> Outcome {
    let mut total = 0;
    for g in groups_up_to(8) {
        let corpus = non_bicharacter_corpus(&g, 20, 7);
        ensure(corpus.len() >= 20, || format!("{}: corpus too small", g.spec()))?;
        for t in &corpus {
            let rep = verify_urm(&r_from_table(t));
            ensure(!rep.holds("URM3") || !rep.holds("URM4"), || {
                format!("{}: a non-bicharacter passes URM3 and URM4", g.spec())
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} non-bicharacter tables all fail URM3 or URM4"))
}

fn triangularity() -> Outcome {
    let mut total = 0;
    for g in groups_up_to(8) {
        for s in enumerate_all(&g) {
            let tri = is_triangular(&r_from_bicharacter(&s)).map_err(|e| e.to_string())?;
            ensure(tri == s.is_commutation_factor(), || {
                format!("{} {}: triangular = {tri}", g.spec(), s.k_spec())
            })?;
            total += 1;
        }
    }
    let z4: Vec<i64> = (1..=4)
        .filter(|&k| is_triangular(&r_from_bicharacter(&cyclic_bicharacter(4, k))).unwrap())
        .map(|k| k % 4)
        .collect();
    ensure(z4 == vec![2, 0], || format!("Z4 triangular k = {z4:?}"))?;
    Ok(format!("{total} bicharacters classified; Z4 triangular exactly for k in {{0, 2}}"))
}

fn pairing_roundtrip() -> Outcome {
    let mut total = 0;
    for g in groups_up_to(12) {
        for s in enumerate_all(&g) {
            // induced_pairing itself rejects support off Δ₁ × Δ₂ and degenerate τ
            let p = s
                .induced_pairing()
                .map_err(|e| format!("{} {}: {e}", g.spec(), s.k_spec()))?;
            ensure(r_from_pairing(&p) == r_from_bicharacter(&s), || {
                format!("{} {}: R^τ ≠ R_σ", g.spec(), s.k_spec())
            })?;
            ensure(p.delta1.order() == p.m && p.delta2.order() == p.m, || {
                format!("{} {}: |Δ| ≠ m", g.spec(), s.k_spec())
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} bicharacters reconstructed from (Δ₁, Δ₂, τ)"))
}

fn cyclic_closed_form() -> Outcome {
    let mut total = 0;
    for n in 1..=12u32 {
        for k in 1..=n as i64 {
            let s = cyclic_bicharacter(n, k);
            let r = r_from_bicharacter(&s);
            ensure(r_cyclic(n, k) == r, || format!("n={n} k={k}"))?;
            ensure(ansatz_oracle(&s.table()) == r, || format!("oracle n={n} k={k}"))?;
            total += 1;
        }
    }
    let g = Group::parse("Z2").unwrap();
    let half = |x: i64| CycNumber::from_rational(g.field(), Rational::new(x, 2));
    let super_r = Tensor2::from_terms(
        &g,
        Side::Star,
        [((0, 0), half(1)), ((0, 1), half(1)), ((1, 0), half(1)), ((1, 1), half(-1))],
    );
    ensure(r_cyclic(2, 1) == super_r, || "super R-matrix mismatch".into())?;
    Ok(format!("{total} (n, k) pairs agree; Z2 gives ½(1⊗1 + 1⊗χ + χ⊗1 − χ⊗χ)"))
}

fn duality_bridge() -> Outcome {
    let mut total = 0;
    for g in groups_up_to(12) {
        let mut tables: Vec<FunctionTable> = enumerate_all(&g).map(|s| s.table()).collect();
        if g.order() <= 8 {
            tables.extend(non_bicharacter_corpus(&g, 20, 7));
        }
        let other = tables[tables.len() / 2].clone();
        for t in &tables {
            let r = r_from_table(t);
            let form = BilinearForm::from_tensor(&r).map_err(|e| e.to_string())?;
            ensure(form.table() == t, || format!("{}: ϱ from R differs from σ", g.spec()))?;
            let coquasi = form.verify_coquasi().passed();
            let urm = verify_urm(&r).passed();
            ensure(coquasi == urm, || {
                format!("{}: coquasi {coquasi} vs URM {urm}", g.spec())
            })?;
            let f2 = BilinearForm::from_table(other.clone());
            let conv = form.convolution(&f2).map_err(|e| e.to_string())?;
            let pointwise = t.pointwise_mul(&other).map_err(|e| e.to_string())?;
            ensure(conv.table() == &pointwise, || {
                format!("{}: convolution is not pointwise", g.spec())
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} forms: coquasi ⟺ URM, convolution = pointwise product"))
}

fn braiding_agreement() -> Outcome {
    let mut rng = rng(11);
    let mut checked = 0usize;
    for g in groups_up_to(6) {
        let spaces = if g.order() <= 4 {
            all_small_spaces(&g)
        } else {
            let mut v = vec![uniform_space(&g, 2), uniform_space(&g, 1)];
            v.extend((0..40).map(|_| random_space(&g, 2, &mut rng)));
            v
        };
        let full = uniform_space(&g, 2);
        let mut has_non_skew = false;
        let mut symmetry_failed = false;
        for s in enumerate_all(&g) {
            let r = r_from_bicharacter(&s);
            let form = BilinearForm::from_table(s.table());
            for v in &spaces {
                for w in &spaces {
                    let a = braid_graded(&s, v, w).map_err(|e| e.to_string())?;
                    let b = braid_from_r(&r, v, w).map_err(|e| e.to_string())?;
                    let c = braid_from_coquasi(&form, v, w).map_err(|e| e.to_string())?;
                    ensure(a == b && b == c, || {
                        format!("{} {}: braidings disagree", g.spec(), s.k_spec())
                    })?;
                    checked += 1;
                }
            }
            let u = random_space(&g, 1, &mut rng);
            let v1 = uniform_space(&g, 1);
            let rep = verify_category_axioms(&s, &full, &v1, &u).map_err(|e| e.to_string())?;
            ensure(rep.report.passed(), || {
                format!("{} {}: {:?}", g.spec(), s.k_spec(), rep.report)
            })?;
            ensure(rep.symmetric == s.is_commutation_factor(), || {
                format!("{} {}: symmetric = {}", g.spec(), s.k_spec(), rep.symmetric)
            })?;
            if !s.is_commutation_factor() {
                has_non_skew = true;
                symmetry_failed |= !rep.symmetric;
            }
        }
        ensure(has_non_skew == symmetry_failed, || {
            format!("{}: no non-skew bicharacter breaks symmetry", g.spec())
        })?;
    }
    Ok(format!("{checked} (σ, V, W) triples agree; hexagons, braid relation, symmetry hold"))
}

fn dictionaries() -> Outcome {
    let mut rng = rng(13);
    let mut total = 0;
    for g in groups_up_to(8) {
        for _ in 0..100 {
            let v = random_space(&g, 3, &mut rng);
            let m = Module::from_grading(&v).grading().map_err(|e| e.to_string())?;
            ensure(m == v, || format!("{}: module round-trip", g.spec()))?;
            let c = Comodule::from_grading(&v).grading().map_err(|e| e.to_string())?;
            ensure(c == v, || format!("{}: comodule round-trip", g.spec()))?;
            total += 1;
        }
    }
    Ok(format!("{total} graded spaces survive both round-trips"))
}

fn arithmetic() -> Outcome {
    for n in 1..=64u64 {
        let mut prod = vec![1i64];
        for d in divisors(n) {
            prod = poly_mul(&prod, &cyclotomic_polynomial(d));
        }
        let mut expect = vec![0i64; n as usize + 1];
        expect[0] = -1;
        expect[n as usize] = 1;
        ensure(prod == expect, || format!("Π Φ_d ≠ x^{n} − 1"))?;
    }
    let mut rng = rng(17);
    let fields: Vec<Group> = (1..=24).map(|n| Group::parse(&format!("Z{n}")).unwrap()).collect();
    let mut inverted = 0;
    for _ in 0..10_000 {
        let g = &fields[rng.gen_range(0..fields.len())];
        let (a, b, c) = (random_cyc(g, &mut rng), random_cyc(g, &mut rng), random_cyc(g, &mut rng));
        let zero = g.zero();
        let one = g.one();
        let ok = &(&a + &b) + &c == &a + &(&b + &c)
            && &a + &b == &b + &a
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &b == &b * &a
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && &a + &zero == a
            && &a * &one == a
            && (&a + &(-&a)).is_zero();
        ensure(ok, || format!("field axiom fails at conductor {}", g.exponent()))?;
        if !a.is_zero() {
            let inv = a.inv().map_err(|e| e.to_string())?;
            ensure((&a * &inv).is_one(), || format!("a·a⁻¹ ≠ 1 for {a}"))?;
            inverted += 1;
        }
    }
    for g in groups_up_to(12) {
        ensure(check_orthogonality_completeness(g.spec()).passed(), || {
            format!("{}: orthogonality fails", g.spec())
        })?;
    }
    Ok(format!("Φ products N ≤ 64, 10000 field cases ({inverted} inverses), orthogonality"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("axiom suite", axiom_suite),
        ("iff direction", iff_direction),
        ("triangularity classification", triangularity),
        ("pairing roundtrip", pairing_roundtrip),
        ("cyclic closed form", cyclic_closed_form),
        ("duality bridge", duality_bridge),
        ("braiding triple agreement", braiding_agreement),
        ("dictionaries", dictionaries),
        ("arithmetic foundation", arithmetic),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {}: PASS  {name}: {msg} ({secs:.1}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {msg} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
