//! `char` and `flow` commands.

use std::path::Path;

use cosetlab::bilinear::ScWeight;
use cosetlab::charflow::*;
use cosetlab::lattice::LatticeVector;
use cosetlab::rational::{fmt_q, parse_q};
use cosetlab::rootsys::Weight;
use cosetlab::{Error, Result, Q};
use serde_json::{json, Value};

use crate::algebra::level;
use crate::args::LevelArgs;
use crate::parse::parse_vec;
use crate::report::{jints, jq, jvec, tvec, Report};

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

fn write_doc(path: &Path, doc: &SeedDoc) -> Result<()> {
    let text = serde_json::to_string_pretty(&doc.to_json_value()).expect("documents serialize");
    std::fs::write(path, text + "\n").map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))
}

pub fn load_seed(path: &Path) -> Result<AfCharacter> {
    validate_seed(&SeedDoc::from_json(&read(path)?)?)
}

fn weight_arg(ch: &AfCharacter, s: Option<&str>, what: &str) -> Result<Weight> {
    match s {
        Some(s) => Ok(Weight(parse_vec(s, ch.level.rs().rank(), what)?)),
        None => Ok(ch.base.clone()),
    }
}

fn opt_q(x: &Option<Q>) -> Value {
    x.as_ref().map_or(Value::Null, jq)
}

fn opt_q_text(x: &Option<Q>) -> String {
    x.as_ref().map_or("exact".into(), fmt_q)
}

fn character_lines<W: CharWeight>(r: &mut Report, ch: &FormalCharacter<W>, show: &dyn Fn(&W) -> String) {
    r.line(format!("{} character, {} weights listed:", ch.side(), ch.strings.len()));
    for (w, s) in &ch.strings {
        let floor = s.floor.as_ref().map_or("?".into(), fmt_q);
        r.line(format!("  {}: {}  (min exponent {floor})", show(w), s.series));
    }
}

fn sc_show(w: &ScWeight) -> String {
    format!("J*{}", tvec(w.jstar_values()))
}

fn diffs_json<W: CharWeight>(diffs: &[WeightDiff<W>], show: &dyn Fn(&W) -> String) -> Value {
    Value::Array(
        diffs
            .iter()
            .map(|d| json!({"weight": show(&d.weight), "certified_to": opt_q(&d.certified_to), "diff": d.diff.to_string()}))
            .collect(),
    )
}

pub fn char_roundtrip(seed: &Path, t: &str, mu: Option<&str>) -> Result<Report> {
    let ch = load_seed(seed)?;
    let t = parse_q(t)?;
    let mu = weight_arg(&ch, mu, "--mu")?;
    let rep = roundtrip_check(&ch, &mu, &t)?;
    let mut r = Report::new("char roundtrip");
    r.set("T", jq(&t));
    r.set("mu", jvec(&mu.0));
    r.set("weights_compared", rep.weights_compared);
    r.set("certified_order", opt_q(&rep.certified_order));
    r.set("terms_certified", rep.terms_certified);
    r.set("seed_terms", rep.seed_terms);
    r.set("diffs", diffs_json(&rep.diffs, &|w: &Weight| w.to_string()));
    r.line(format!("T = {}, mu = {mu}", fmt_q(&t)));
    r.line(format!("weights compared: {}", rep.weights_compared));
    r.line(format!("certified to q^{}", opt_q_text(&rep.certified_order)));
    r.line(format!("seed terms inside the certified range: {}/{}", rep.terms_certified, rep.seed_terms));
    for d in &rep.diffs {
        r.line(format!("  at {}: difference {}", d.weight, d.diff));
    }
    r.check("defermionize(fermionize(ch)) = ch", rep.holds);
    Ok(r)
}

pub fn char_fermionize(seed: &Path, t: &str, mu: Option<&str>, output: Option<&Path>) -> Result<Report> {
    let ch = load_seed(seed)?;
    let t = parse_q(t)?;
    let mu = weight_arg(&ch, mu, "--mu")?;
    let out = fermionize_character(&ch, &mu, &t)?;
    let doc = emit_character(&out);
    if let Some(p) = output {
        write_doc(p, &doc)?;
    }
    let mut r = Report::new("char fermionize");
    r.set("T", jq(&t));
    r.set("mu", jvec(&mu.0));
    r.set("character", doc.to_json_value());
    r.line(format!("T = {}, mu = {mu}, Delta+_mu = {}", fmt_q(&t), fmt_q(&ch.level.conformal_weight_plus(&mu))));
    character_lines(&mut r, &out, &sc_show);
    Ok(r)
}

pub fn char_defermionize(input: &Path, t: &str, lambda: Option<&str>, output: Option<&Path>) -> Result<Report> {
    let ch = validate_sc_character(&SeedDoc::from_json(&read(input)?)?)?;
    let t = parse_q(t)?;
    let lam = match lambda {
        Some(s) => ch.level.sc_from_jstar(parse_vec(s, ch.level.rs().num_positive(), "--lambda")?),
        None => ch.base.clone(),
    };
    let out = defermionize_character(&ch, &lam, &t)?;
    let doc = emit_character(&out);
    if let Some(p) = output {
        write_doc(p, &doc)?;
    }
    let mut r = Report::new("char defermionize");
    r.set("T", jq(&t));
    r.set("lambda_jstar", jvec(lam.jstar_values()));
    r.set("character", doc.to_json_value());
    r.line(format!("T = {}, lambda = {}, D(lambda) = {}", fmt_q(&t), sc_show(&lam), fmt_q(&ch.level.conformal_weight_minus(&lam))));
    character_lines(&mut r, &out, &|w: &Weight| w.to_string());
    Ok(r)
}

pub fn char_cflemma(seed: &Path, gamma: &str, t: &str, mu: Option<&str>, bound: i64) -> Result<Report> {
    let ch = load_seed(seed)?;
    let t = parse_q(t)?;
    let mu = weight_arg(&ch, mu, "--mu")?;
    let g = Weight(parse_vec(gamma, ch.level.rs().rank(), "--gamma")?);
    let rep = cflemma_check(&ch, &g, &mu, &t, bound)?;
    let mut r = Report::new("char cflemma");
    r.set("gamma", jvec(&g.0));
    r.set("T", jq(&t));
    r.set("bound", bound);
    r.set("certified_norm", rep.certified_norm);
    r.set(
        "members",
        rep.members
            .iter()
            .map(|m| json!({"xi": jints(&m.xi.0), "zeta": jints(&m.zeta.0), "exponent": jq(&m.exponent)}))
            .collect::<Vec<_>>(),
    );
    r.set("diff", rep.diff.to_string());
    r.line(format!("gamma = {g}, T = {}, enumeration bound {bound} (solution norm {})", fmt_q(&t), rep.certified_norm));
    for m in &rep.members {
        r.line(format!("  S(gamma) member xi = {}, zeta = {}, q^{}", m.xi, m.zeta, fmt_q(&m.exponent)));
    }
    if !rep.holds {
        r.line(format!("  difference: {}", rep.diff));
    }
    r.check("lattice sum identity", rep.holds);
    Ok(r)
}

fn pairwise(simple: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let mut out = simple.clone();
    for i in 0..simple.len() {
        for j in i..simple.len() {
            out.push(simple[i].iter().zip(&simple[j]).map(|(a, b)| a + b).collect());
        }
    }
    out
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

pub fn flow_check(seed: &Path, t: &str, sc_gamma: &[String], af_gamma: &[String]) -> Result<Report> {
    let ch = load_seed(seed)?;
    let t = parse_q(t)?;
    let lv = ch.level.clone();
    let (l, n) = (lv.rs().rank(), lv.rs().num_positive());
    let base = ch.base.clone();
    let mut r = Report::new("flow check");
    r.set("T", jq(&t));
    r.line(format!("T = {}, base weight {base}", fmt_q(&t)));

    let sc_gammas: Vec<Weight> = if sc_gamma.is_empty() {
        pairwise((0..l).map(|i| unit(l, i)).collect()).iter().map(|g| Weight::from_ints(g)).collect()
    } else {
        sc_gamma.iter().map(|s| parse_vec(s, l, "--sc-gamma").map(Weight)).collect::<Result<_>>()?
    };
    let m = fermionize_character(&ch, &base, &t)?;
    let mut sc_rows = vec![];
    for g in &sc_gammas {
        if !g.is_in_root_lattice() {
            return Err(Error::InvalidArgument(format!("--sc-gamma {g} is not in the root lattice")));
        }
        let direct = fermionize_character(&ch, &base.sub(g), &t)?;
        let flowed = spectral_flow_sc(&m, g)?;
        let holds = compare_characters(&direct, &flowed).is_empty() && CharWeight::same_coset(&direct.base, &flowed.base);
        sc_rows.push(json!({"gamma": jvec(&g.0), "holds": holds}));
        r.check(&format!("sc flow equivariance, gamma = {g}"), holds);
    }
    r.set("sc_equivariance", sc_rows);

    let af_gammas: Vec<ScWeight> = if af_gamma.is_empty() {
        pairwise((0..l).map(|i| unit(n, i)).collect()).into_iter().map(|v| lv.g_sc_plus(&LatticeVector(v))).collect()
    } else {
        af_gamma.iter().map(|s| parse_vec(s, n, "--af-gamma").map(|v| lv.sc_from_jstar(v))).collect::<Result<_>>()?
    };
    let lam = m.base.clone();
    let a = defermionize_character(&m, &lam, &t)?;
    let mut af_rows = vec![];
    for g in &af_gammas {
        let direct = defermionize_character(&m, &lam.add(g), &t)?;
        let flowed = spectral_flow_af(&a, g)?;
        let holds = compare_characters(&direct, &flowed).is_empty();
        af_rows.push(json!({"gamma_jstar": jvec(g.jstar_values()), "holds": holds}));
        r.check(&format!("af flow equivariance, gamma = J*{}", tvec(g.jstar_values())), holds);
    }
    r.set("af_equivariance", af_rows);

    let mut composition = true;
    for x in &sc_gammas {
        for y in &sc_gammas {
            composition &= spectral_flow_sc(&spectral_flow_sc(&m, x)?, y)?.strings == spectral_flow_sc(&m, &x.add(y))?.strings;
        }
    }
    for x in &af_gammas {
        for y in &af_gammas {
            composition &= spectral_flow_af(&spectral_flow_af(&a, x)?, y)?.strings == spectral_flow_af(&a, &x.add(y))?.strings;
        }
    }
    let identity = spectral_flow_sc(&m, &Weight::zero(l))?.strings == m.strings
        && spectral_flow_af(&a, &lv.sc_zero())?.strings == a.strings;
    r.set("composition", composition);
    r.set("identity", identity);
    r.check("flows compose additively", composition);
    r.check("gamma = 0 acts trivially", identity);
    Ok(r)
}

pub fn flow_diagnostics_cmd(a: &LevelArgs, gamma: &str) -> Result<Report> {
    let lv = level(a)?;
    let g = lv.sc_from_jstar(parse_vec(gamma, lv.rs().num_positive(), "--gamma")?);
    let d = flow_diagnostics(&lv, &g)?;
    let mut r = Report::new("flow diagnostics");
    r.set("gamma_jstar", jvec(g.jstar_values()));
    r.set("h_af", jvec(&d.h_af));
    r.set("xi_gamma", jints(&d.xi_gamma.0));
    r.set("zeta_gamma", jints(&d.zeta_gamma.0));
    r.set("h_gamma", jvec(&d.h_gamma));
    r.set("weight_shift", jvec(&d.weight_shift.0));
    r.text.extend(d.to_string().lines().map(String::from));
    Ok(r)
}
