use std::path::Path;

use rayon::prelude::*;
use rmx_core::braiding::{braid_from_coquasi, braid_from_r, braid_graded, verify_category_axioms};
use rmx_core::group::exponent_string;
use rmx_core::{
    check_yang_baxter, enumerate_all, is_triangular, parse_k_matrix, r_cyclic, r_from_bicharacter,
    verify_urm, AxiomCheck, Bicharacter, BilinearForm, CycNumber, GradedSpace, Group, Subgroup,
    Tensor2,
};
use serde_json::{json, Value};

use crate::args::{BicharChoice, Command};
use crate::report::RunReport;
use crate::Failure;

const DEFAULT_MAX_ORDER: usize = 64;

fn max_order() -> Result<usize, Failure> {
    match std::env::var("RMX_MAX_ORDER") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("RMX_MAX_ORDER must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

fn load_group(spec: &str) -> Result<Group, Failure> {
    let group = Group::parse(spec)?;
    let cap = max_order()?;
    if group.order() > cap {
        return Err(Failure::Usage(format!(
            "group order {} exceeds RMX_MAX_ORDER = {cap}",
            group.order()
        )));
    }
    Ok(group)
}

fn bichar_from_spec(group: &Group, spec: &str) -> Result<Bicharacter, Failure> {
    let k = parse_k_matrix(spec)?;
    let sigma = Bicharacter::from_matrix(group, &k)?;
    if Bicharacter::needs_reduction(group, &k) {
        eprintln!(
            "warning: K entries reduced modulo gcd(d_i, d_j): {} becomes {}",
            spec.trim(),
            sigma.k_spec()
        );
    }
    Ok(sigma)
}

fn bichar_from_k(group: &Group, k: i64) -> Result<Bicharacter, Failure> {
    if group.spec().rank() != 1 {
        return Err(Failure::Usage(format!(
            "--k needs a cyclic group, got {}",
            group.spec()
        )));
    }
    bichar_from_spec(group, &k.to_string())
}

fn select(group: &Group, bichar: Option<&str>, k: Option<i64>) -> Result<Bicharacter, Failure> {
    match (bichar, k) {
        (Some(b), None) => bichar_from_spec(group, b),
        (None, Some(k)) => bichar_from_k(group, k),
        _ => Err(Failure::Usage("give exactly one of --bichar or --k".into())),
    }
}

/// The argument list with output paths masked, so reports written to
/// different files are identical.
fn sanitize(echo: Vec<String>) -> Vec<String> {
    let mut out = Vec::with_capacity(echo.len());
    let mut mask_next = false;
    for a in echo {
        if mask_next {
            out.push("<path>".into());
            mask_next = false;
        } else if a == "--json" || a == "--out" {
            mask_next = true;
            out.push(a);
        } else if let Some((flag, _)) = a.split_once('=').filter(|(f, _)| *f == "--json" || *f == "--out") {
            out.push(format!("{flag}=<path>"));
        } else {
            out.push(a);
        }
    }
    out
}

fn scalar(c: &CycNumber) -> String {
    format!("{c} ≈ {}", c.approx_string())
}

fn basis(group: &Group, idx: usize) -> String {
    format!("χ[{}]", exponent_string(group.exponents(idx)))
}

fn print_tensor(group: &Group, r: &Tensor2) {
    for (&(a, b), c) in r.terms() {
        println!("  {} ⊗ {}   {}", basis(group, a), basis(group, b), scalar(c));
    }
}

fn subgroup_json(s: &Subgroup) -> Value {
    json!(s.exponent_vectors())
}

pub fn run(command: Command, echo: Vec<String>) -> Result<RunReport, Failure> {
    let echo = sanitize(echo);
    match command {
        Command::Enumerate {
            group,
            commutation_factors_only,
            json,
        } => enumerate(echo, &group.group, commutation_factors_only, json.json.as_deref()),
        Command::Verify {
            group,
            all,
            bichar,
            k,
            jobs,
            json,
        } => {
            let g = load_group(&group.group)?;
            let sigmas = if all {
                enumerate_all(&g).collect()
            } else {
                vec![select(&g, bichar.as_deref(), k)?]
            };
            verify(echo, &g, sigmas, jobs, json.json.as_deref())
        }
        Command::Rmatrix {
            group,
            choice,
            verify,
            json,
        } => rmatrix(echo, &group.group, &choice, verify, json.json.as_deref()),
        Command::Coquasi {
            group,
            bichar,
            cotriangular,
            json,
        } => coquasi(echo, &group.group, &bichar, cotriangular, json.json.as_deref()),
        Command::Braid {
            group,
            bichar,
            dims,
            check_ybe,
            json,
        } => braid(echo, &group.group, &bichar, &dims, check_ybe, json.json.as_deref()),
        Command::Dump { group, choice, out } => dump(echo, &group.group, &choice, &out),
    }
}

fn emit(mut report: RunReport, json: Option<&Path>) -> Result<RunReport, Failure> {
    report.finish();
    report.print_failures();
    if let Some(p) = json {
        report.write_json(p)?;
    }
    Ok(report)
}

fn enumerate(
    echo: Vec<String>,
    spec: &str,
    only_cf: bool,
    json: Option<&Path>,
) -> Result<RunReport, Failure> {
    let g = load_group(spec)?;
    let mut report = RunReport::new(echo, g.spec().to_string());
    let all: Vec<Bicharacter> = enumerate_all(&g).collect();
    let cf = all.iter().filter(|s| s.is_commutation_factor()).count();
    let mut listed = Vec::new();
    for s in &all {
        let is_cf = s.is_commutation_factor();
        if only_cf && !is_cf {
            continue;
        }
        println!(
            "{}{}",
            s.k_spec(),
            if is_cf { "  [commutation factor]" } else { "" }
        );
        listed.push(json!({"K": s.k_spec(), "commutation_factor": is_cf}));
    }
    println!(
        "{} bicharacters, {} commutation factors on {}",
        all.len(),
        cf,
        g.spec()
    );
    report.data = json!({
        "bicharacters": listed,
        "count": all.len(),
        "commutation_factors": cf,
    });
    emit(report, json)
}

/// Everything `verify` checks for one bicharacter.
struct Verdict {
    k_spec: String,
    items: Vec<AxiomCheck>,
    triangular: Option<bool>,
    commutation_factor: bool,
}

fn verify_one(sigma: &Bicharacter) -> Verdict {
    let g = sigma.group();
    let r = r_from_bicharacter(sigma);
    let mut items = verify_urm(&r).axioms;
    items.push(check_yang_baxter(&r));
    let form = BilinearForm::from_table(sigma.table());
    items.extend(
        form.verify_coquasi()
            .axioms
            .into_iter()
            .map(|mut a| {
                a.name = format!("coquasi {}", a.name);
                a
            }),
    );
    let triangular = is_triangular(&r).ok();
    let cf = sigma.is_commutation_factor();
    items.push(AxiomCheck::new(
        "triangular_iff_commutation_factor",
        triangular == Some(cf),
        None,
    ));
    let v = GradedSpace::from_dims(g, &(0..g.order()).map(|i| (i, 1)).collect())
        .expect("valid degrees");
    match verify_category_axioms(sigma, &v, &v, &v) {
        Ok(cat) => {
            items.extend(cat.report.axioms);
            items.push(AxiomCheck::new(
                "symmetric_iff_commutation_factor",
                cat.symmetric == cf,
                None,
            ));
        }
        Err(e) => items.push(AxiomCheck::new(format!("category ({e})"), false, None)),
    }
    Verdict {
        k_spec: sigma.k_spec(),
        items,
        triangular,
        commutation_factor: cf,
    }
}

fn verify(
    echo: Vec<String>,
    g: &Group,
    sigmas: Vec<Bicharacter>,
    jobs: usize,
    json: Option<&Path>,
) -> Result<RunReport, Failure> {
    if jobs == 0 {
        return Err(Failure::Usage("--jobs must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let verdicts: Vec<Verdict> = pool.install(|| sigmas.par_iter().map(verify_one).collect());
    let mut report = RunReport::new(echo, g.spec().to_string());
    let mut structures = Vec::new();
    for v in verdicts {
        let pass = v.items.iter().all(|i| i.pass);
        println!(
            "{}  {}  triangular={}  commutation_factor={}",
            v.k_spec,
            if pass { "pass" } else { "FAIL" },
            v.triangular.map_or("n/a".to_string(), |t| t.to_string()),
            v.commutation_factor
        );
        structures.push(json!({
            "K": v.k_spec,
            "pass": pass,
            "triangular": v.triangular,
            "commutation_factor": v.commutation_factor,
        }));
        for mut item in v.items {
            item.name = format!("{}: {}", v.k_spec, item.name);
            report.push(item);
        }
    }
    let all_pass = report.items.iter().all(|i| i.pass);
    println!(
        "{} structures verified, {}",
        structures.len(),
        if all_pass { "all pass" } else { "some checks FAILED" }
    );
    report.data = json!({"verified": structures.len(), "structures": structures});
    emit(report, json)
}

fn build_r(g: &Group, choice: &BicharChoice) -> Result<(Bicharacter, Tensor2), Failure> {
    let sigma = select(g, choice.bichar.as_deref(), choice.k)?;
    let r = match choice.k {
        Some(k) => r_cyclic(g.order() as u32, k),
        None => r_from_bicharacter(&sigma),
    };
    Ok((sigma, r))
}

fn rmatrix(
    echo: Vec<String>,
    spec: &str,
    choice: &BicharChoice,
    verify: bool,
    json: Option<&Path>,
) -> Result<RunReport, Failure> {
    let g = load_group(spec)?;
    let (sigma, r) = build_r(&g, choice)?;
    let mut report = RunReport::new(echo, g.spec().to_string());
    println!("R for {} on {} ({} terms):", sigma.k_spec(), g.spec(), r.len());
    print_tensor(&g, &r);
    let mut data = json!({"K": sigma.k_spec(), "tensor": r.to_records()});
    if verify {
        report.push_report("", verify_urm(&r));
        report.push(check_yang_baxter(&r));
        let tri = is_triangular(&r).ok();
        data["triangular"] = json!(tri);
        let pass = report.items.iter().all(|i| i.pass);
        println!(
            "axioms: {}  triangular={}",
            if pass { "pass" } else { "FAIL" },
            tri.map_or("n/a".to_string(), |t| t.to_string())
        );
    }
    report.data = data;
    emit(report, json)
}

fn coquasi(
    echo: Vec<String>,
    spec: &str,
    bichar: &str,
    cotriangular: bool,
    json: Option<&Path>,
) -> Result<RunReport, Failure> {
    let g = load_group(spec)?;
    let sigma = bichar_from_spec(&g, bichar)?;
    let form = BilinearForm::from_table(sigma.table());
    let mut report = RunReport::new(echo, g.spec().to_string());
    let rep = form.verify_coquasi();
    let pass = rep.passed();
    report.push_report("", rep);
    println!(
        "coquasitriangular axioms for {}: {}",
        sigma.k_spec(),
        if pass { "pass" } else { "FAIL" }
    );
    let mut data = json!({"K": sigma.k_spec()});
    if cotriangular && pass {
        let cot = form.is_cotriangular()?;
        report.push_report("", form.antipode_relations_check()?);
        println!("cotriangular={cot}");
        data["cotriangular"] = json!(cot);
    }
    report.data = data;
    emit(report, json)
}

fn braid(
    echo: Vec<String>,
    spec: &str,
    bichar: &str,
    dims: &str,
    check_ybe: bool,
    json: Option<&Path>,
) -> Result<RunReport, Failure> {
    let g = load_group(spec)?;
    let sigma = bichar_from_spec(&g, bichar)?;
    let v = GradedSpace::parse_dims(&g, dims)?;
    let psi = braid_graded(&sigma, &v, &v)?;
    let from_r = braid_from_r(&r_from_bicharacter(&sigma), &v, &v)?;
    let from_form = braid_from_coquasi(&BilinearForm::from_table(sigma.table()), &v, &v)?;
    let mut report = RunReport::new(echo, g.spec().to_string());
    report.push(AxiomCheck::new("braid_from_r agrees", from_r == psi, None));
    report.push(AxiomCheck::new("braid_from_coquasi agrees", from_form == psi, None));
    println!("ψ on V ⊗ V, dim V = {}:", v.dim());
    let m = psi.matrix();
    let mut entries = Vec::new();
    for col in 0..m.cols() {
        for (row, c) in m.column(col) {
            println!("  ψ[{row}, {col}] = {}", scalar(c));
            entries.push(json!({"row": row, "col": col, "c": c}));
        }
    }
    let mut data = json!({"K": sigma.k_spec(), "space": v.to_json(), "matrix": entries});
    if check_ybe {
        let cat = verify_category_axioms(&sigma, &v, &v, &v)?;
        println!("symmetric={}  commutation_factor={}", cat.symmetric, cat.commutation_factor);
        data["symmetric"] = json!(cat.symmetric);
        data["commutation_factor"] = json!(cat.commutation_factor);
        report.push_report("", cat.report);
    }
    let pass = report.items.iter().all(|i| i.pass);
    println!("checks: {}", if pass { "pass" } else { "FAIL" });
    report.data = data;
    emit(report, json)
}

fn dump(
    echo: Vec<String>,
    spec: &str,
    choice: &BicharChoice,
    out: &Path,
) -> Result<RunReport, Failure> {
    let g = load_group(spec)?;
    let (sigma, r) = build_r(&g, choice)?;
    let p = sigma.induced_pairing()?;
    let tri = is_triangular(&r)?;
    let mut report = RunReport::new(echo, g.spec().to_string());
    let doc = json!({
        "group": g.spec().to_string(),
        "K": sigma.k_spec(),
        "triangular": tri,
        "kernels": {"N1": subgroup_json(&p.n1), "N2": subgroup_json(&p.n2)},
        "delta": {"Delta1": subgroup_json(&p.delta1), "Delta2": subgroup_json(&p.delta2)},
        "m": p.m,
        "tensor": r.to_records(),
    });
    let text = serde_json::to_string_pretty(&doc).expect("serializable") + "\n";
    std::fs::write(out, text)
        .map_err(|e| Failure::Io(format!("cannot write {}: {e}", out.display())))?;
    println!(
        "wrote {} terms of R for {} on {} to {}",
        r.len(),
        sigma.k_spec(),
        g.spec(),
        out.display()
    );
    report.data = doc;
    report.finish();
    Ok(report)
}
