//! `rootsys`, `forms`, `weights`, `lattice` and `ope` commands.

use cosetlab::bilinear::{Level, ScWeight};
use cosetlab::lattice::{
    build_e_minus_lattice, build_e_plus_lattice, build_l_minus, build_l_plus, build_qsc_dual_lattice,
    discriminant_group, enumerate_by_norm, kernel_k, IntegralLattice,
};
use cosetlab::linalg::QMatrix;
use cosetlab::ope::{verify_all, verify_fst_homomorphism, verify_hminus_heisenberg, verify_jalpha_heisenberg, OpeReport};
use cosetlab::rational::{fmt_q, parse_q, q, to_i64};
use cosetlab::rootsys::{RootSystem, Weight};
use cosetlab::{Error, Result};
use serde_json::{json, Value};

use crate::args::{LatticeArgs, LatticeKind, LevelArgs, OpeCheck, ScInput, TypeArgs};
use crate::parse::{parse_ints, parse_vec};
use crate::report::{jints, jmat, jq, jvec, tmat, tvec, Report};

pub fn root_system(a: &TypeArgs) -> Result<RootSystem> {
    RootSystem::build(&a.ty, a.rank)
}

pub fn level(a: &LevelArgs) -> Result<Level> {
    Level::new(&root_system(&a.ty)?, parse_q(&a.level)?)
}

pub fn rootsys_info(a: &TypeArgs) -> Result<Report> {
    let rs = root_system(a)?;
    let n = rs.rank();
    let mut r = Report::new("rootsys info");
    r.set("type", rs.cartan_type().to_string());
    r.set("rank", n);
    r.set("num_positive", rs.num_positive());
    r.set("dim", rs.dim());
    r.set("dual_coxeter", rs.dual_coxeter());
    r.line(format!("type {}: rank {n}, N = {}, dim = {}, h∨ = {}", rs.cartan_type(), rs.num_positive(), rs.dim(), rs.dual_coxeter()));

    let mut roots = vec![];
    r.line("positive roots (simple-root coordinates, norm):");
    for root in rs.positive_roots() {
        let norm = rs.root_norm(root);
        r.line(format!("  {:?}  {}", root, fmt_q(&norm)));
        roots.push(json!({"root": jints(root), "norm": jq(&norm), "height": rs.height(root)}));
    }
    r.set("positive_roots", roots);
    r.set("symmetrized_cartan", jmat(rs.symmetrized_cartan()));
    let ql = rs.long_root_lattice_gram();
    r.set("long_root_lattice_gram", jmat(&ql));
    r.text.extend(tmat("long root lattice Gram", &ql));

    let mut hvee = vec![];
    let mut all_hvee = true;
    for i in 0..n {
        let w = rs.check_hvee_identity(&rs.fundamental_weight(i));
        all_hvee &= w.holds;
        hvee.push(json!({"weight": i + 1, "lhs": jvec(&w.lhs.0), "rhs": jvec(&w.rhs.0), "holds": w.holds}));
    }
    r.set("hvee_identity", hvee);
    r.check("h∨ identity on fundamental weights", all_hvee);

    let coweights = (0..n).all(|i| (0..n).all(|j| rs.pair_coweight(&rs.positive_weight(j), i) == q(i64::from(i == j))));
    r.set("coweights_dual", coweights);
    r.check("fundamental coweights dual to simple roots", coweights);
    let even = (0..n).all(|i| to_i64(ql.get(i, i)).is_some_and(|x| x % 2 == 0));
    r.set("long_root_lattice_even", even);
    r.check("long root lattice even", even);
    Ok(r)
}

pub fn forms_verify(a: &LevelArgs) -> Result<Report> {
    let lv = level(a)?;
    let mut r = Report::new("forms verify");
    r.set("type", lv.rs().cartan_type().to_string());
    r.set("level", jq(lv.k()));
    r.line(format!("type {}, k = {}, k + h∨ = {}", lv.rs().cartan_type(), fmt_q(lv.k()), fmt_q(lv.shifted())));
    for (name, m) in [("g", lv.g()), ("g_star", lv.g_star()), ("G", lv.big_g()), ("G_star", lv.big_g_star())] {
        r.set(&format!("gram_{name}"), jmat(m));
        r.text.extend(tmat(name, m));
    }
    let small = lv.g().mul(lv.g_star()).is_identity();
    let big = lv.big_g().mul(lv.big_g_star()).is_identity();
    r.set("g_inverse", small);
    r.set("G_inverse", big);
    r.check("g·g* = I", small);
    r.check("G·G* = I", big);

    let c = lv.central_charges();
    r.set("central_charges", json!({"c_af": jq(&c.c_af), "c_sc": jq(&c.c_sc), "c_sc_alt": jq(&c.c_sc_alt), "agree": c.formulas_agree()}));
    r.line(format!("c_af = {}, c_sc = {} (alternative formula {})", fmt_q(&c.c_af), fmt_q(&c.c_sc), fmt_q(&c.c_sc_alt)));
    r.check("central charge formulas agree", c.formulas_agree());

    // The E⁻ isometry is stated for positive integral levels only.
    if lv.k().is_integer() && *lv.k() > q(0) {
        let target = build_e_minus_lattice(lv.rs(), lv.k())?.gram_q();
        let holds = lv.e_minus_pullback_gram() == target;
        r.set("e_minus_isometry", holds);
        r.check("E- isometry through G*", holds);
    } else {
        r.set("e_minus_isometry", Value::Null);
        r.line("E- isometry: not applicable (k is not a positive integer)");
    }
    Ok(r)
}

fn sc_input(lv: &Level, input: &ScInput) -> Result<ScWeight> {
    let n = lv.rs().num_positive();
    match (&input.j, &input.jstar) {
        (Some(j), _) => Ok(lv.sc_from_j(parse_vec(j, n, "--j")?)),
        (None, Some(js)) => Ok(lv.sc_from_jstar(parse_vec(js, n, "--jstar")?)),
        (None, None) => Err(Error::InvalidArgument("one of --j or --jstar is required".into())),
    }
}

fn sc_json(mu: &ScWeight) -> Value {
    json!({"j": jvec(mu.j_values()), "jstar": jvec(mu.jstar_values())})
}

pub fn weights_to_sc(a: &LevelArgs, weight: &str) -> Result<Report> {
    let lv = level(a)?;
    let mu = Weight(parse_vec(weight, lv.rs().rank(), "--weight")?);
    let sc = lv.weight_to_sc(&mu);
    let mut r = Report::new("weights to-sc");
    r.set("weight", jvec(&mu.0));
    r.set("sc_weight", sc_json(&sc));
    r.set("in_q_sc", sc.in_q_sc());
    r.set("conformal_weight", jq(&lv.conformal_weight_plus(&mu)));
    r.line(format!("mu = {mu}"));
    r.line(format!("mu_sc J-values:  {}", tvec(sc.j_values())));
    r.line(format!("mu_sc J*-values: {}", tvec(sc.jstar_values())));
    r.line(format!("Delta+_mu = {}", fmt_q(&lv.conformal_weight_plus(&mu))));
    r.check("(mu_sc)_af = mu", lv.sc_weight_to_af(&sc) == mu);
    Ok(r)
}

pub fn weights_to_af(a: &LevelArgs, input: &ScInput) -> Result<Report> {
    let lv = level(a)?;
    let sc = sc_input(&lv, input)?;
    let af = lv.sc_weight_to_af(&sc);
    let mut r = Report::new("weights to-af");
    r.set("sc_weight", sc_json(&sc));
    r.set("weight", jvec(&af.0));
    r.set("conformal_weight", jq(&lv.conformal_weight_minus(&sc)));
    r.line(format!("lambda J*-values: {}", tvec(sc.jstar_values())));
    r.line(format!("lambda_af = {af}"));
    r.line(format!("D(lambda) = {}", fmt_q(&lv.conformal_weight_minus(&sc))));
    Ok(r)
}

pub fn weights_converse(a: &LevelArgs, input: &ScInput) -> Result<Report> {
    let lv = level(a)?;
    let sc = sc_input(&lv, input)?;
    let c = lv.converse_congruence_check(&sc);
    let mut r = Report::new("weights converse");
    r.set("sc_weight", sc_json(&sc));
    r.set(
        "violations",
        c.violations.iter().map(|v| json!({"root": jints(&v.root), "value": jq(&v.value)})).collect::<Vec<_>>(),
    );
    r.set("differences", jvec(&c.differences));
    r.set("hypothesis_holds", c.hypothesis_holds);
    r.set("verdict", c.verdict);
    for v in &c.violations {
        r.line(format!("  mu(xi~({:?})) = {} is not an integer", v.root, fmt_q(&v.value)));
    }
    r.check("mu is integral on every xi~(alpha)", c.hypothesis_holds);
    if c.hypothesis_holds {
        r.line(format!("mu(J_alpha) - (mu_af)_sc(J_alpha): {}", tvec(&c.differences)));
        r.check("differences are integers", c.verdict);
    }
    Ok(r)
}

fn need_type(a: &LatticeArgs) -> Result<RootSystem> {
    match (&a.ty, a.rank) {
        (Some(t), Some(n)) => RootSystem::build(t, n),
        _ => Err(Error::InvalidArgument("--type and --rank are required for this lattice".into())),
    }
}

fn need_level(a: &LatticeArgs) -> Result<cosetlab::Q> {
    match &a.level {
        Some(k) => parse_q(k),
        None => Err(Error::InvalidArgument("--level is required for this lattice".into())),
    }
}

fn build_lattice(a: &LatticeArgs) -> Result<(String, IntegralLattice)> {
    Ok(match a.lattice {
        LatticeKind::Custom => {
            let Some(g) = &a.gram else {
                return Err(Error::InvalidArgument("--gram is required for --lattice custom".into()));
            };
            let rows: Vec<Vec<i64>> = g.split(';').map(parse_ints).collect::<Result<_>>()?;
            let labels = (0..rows.len()).map(|i| format!("e{}", i + 1)).collect();
            ("custom".into(), IntegralLattice::with_standard_cocycle(labels, rows)?)
        }
        LatticeKind::LPlus => ("l-plus".into(), build_l_plus(&need_type(a)?)),
        LatticeKind::LMinus => ("l-minus".into(), build_l_minus(&need_type(a)?)),
        LatticeKind::Kernel => ("kernel".into(), kernel_k(&need_type(a)?).lattice),
        LatticeKind::QscDual => ("qsc-dual".into(), build_qsc_dual_lattice(&need_type(a)?)?),
        LatticeKind::EPlus => ("e-plus".into(), build_e_plus_lattice(&need_type(a)?, &need_level(a)?)?),
        LatticeKind::EMinus => ("e-minus".into(), build_e_minus_lattice(&need_type(a)?, &need_level(a)?)?),
    })
}

fn describe(r: &mut Report, name: &str, l: &IntegralLattice) {
    r.set("lattice", name);
    r.set("rank", l.rank());
    r.set("gram", Value::Array(l.gram().iter().map(|row| jints(row)).collect()));
    r.text.extend(tmat(&format!("{name} lattice Gram"), &QMatrix::from_i64(l.gram())));
}

pub fn lattice_disc(a: &LatticeArgs, expect: Option<&str>) -> Result<Report> {
    let (name, l) = build_lattice(a)?;
    let mut r = Report::new("lattice disc");
    describe(&mut r, &name, &l);
    let divisors = discriminant_group(&l)?;
    let order: num_bigint::BigInt = divisors.iter().product();
    let shown: Vec<String> = divisors.iter().map(|d| d.to_string()).collect();
    r.set("divisors", shown.iter().map(|d| Value::String(d.clone())).collect::<Vec<_>>());
    r.set("order", order.to_string());
    r.set("determinant", jq(&l.gram_q().determinant()));
    r.line(format!("elementary divisors: [{}]", shown.join(", ")));
    r.line(format!("order: {order}"));
    if let Some(e) = expect {
        let want: Vec<String> = parse_ints(e)?.iter().map(|x| x.to_string()).collect();
        r.set("expected", want.iter().map(|d| Value::String(d.clone())).collect::<Vec<_>>());
        r.check(&format!("divisors equal [{}]", want.join(", ")), want == shown);
    }
    Ok(r)
}

pub fn lattice_enum(a: &LatticeArgs, bound: &str) -> Result<Report> {
    let (name, l) = build_lattice(a)?;
    let b = parse_q(bound)?;
    let vs = enumerate_by_norm(&l, &b)?;
    let mut r = Report::new("lattice enum");
    describe(&mut r, &name, &l);
    r.set("bound", jq(&b));
    r.set("count", vs.len());
    r.set("vectors", vs.iter().map(|v| json!({"v": jints(&v.0), "norm": l.norm(&v.0)})).collect::<Vec<_>>());
    r.line(format!("{} vectors with |norm| <= {}:", vs.len(), fmt_q(&b)));
    for v in &vs {
        r.line(format!("  {v}  norm {}", l.norm(&v.0)));
    }
    Ok(r)
}

pub fn ope_verify(a: &LevelArgs, check: OpeCheck) -> Result<Report> {
    let lv = level(a)?;
    let (name, rep): (&str, OpeReport) = match check {
        OpeCheck::Jalpha => ("jalpha", verify_jalpha_heisenberg(&lv)?),
        OpeCheck::Hminus => ("hminus", verify_hminus_heisenberg(&lv)?),
        OpeCheck::Fst => ("fst", verify_fst_homomorphism(&lv)?),
        OpeCheck::All => ("all", verify_all(&lv)?),
    };
    let mut r = Report::new("ope verify");
    let mut v = serde_json::to_value(&rep).expect("reports serialize");
    if let Value::Object(m) = &mut v {
        let tables = rep.pole2_tables.iter().map(|(k, t)| (k.clone(), jmat(t))).collect();
        m.insert("pole2_tables".into(), Value::Object(tables));
    }
    r.set("report", v);
    r.line(format!("check {name} on {} at k = {}", rep.cartan_type, rep.level));
    r.line(format!("OPE pairs compared: {}, skew-symmetry checks: {}", rep.pairs_checked, rep.skew_checked));
    for m in &rep.mismatches {
        r.line(format!("  {} x {} pole {}: expected {} got {}", m.left, m.right, m.pole, m.expected, m.got));
    }
    for s in &rep.skew_failures {
        r.line(format!("  skew-symmetry fails for {s}"));
    }
    for c in rep.central_terms.iter().filter(|c| c.differs) {
        r.line(format!("  central term at {}: normalized form gives {}, literal level {}", c.root, c.normalized, c.literal));
    }
    r.check("all OPEs agree", rep.mismatches.is_empty());
    r.check("skew-symmetry", rep.skew_failures.is_empty());
    let agree = rep.pole2_tables.iter().all(|(k, t)| match k.as_str() {
        "J.J" => t == lv.g(),
        "J*.J" => t.is_identity(),
        "J*.J*" => t == lv.g_star(),
        "H-.H-" => t == lv.big_g(),
        _ => true,
    });
    if !rep.pole2_tables.is_empty() {
        r.check("pole-2 tables equal the Gram matrices", agree);
    }
    Ok(r)
}
