use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use gga_core::contraction::{
    canonical_form, catalog_sets, contraction_survey, enumerate_nice, orbit_classify, verify_contraction,
};
use gga_core::json::AlgebraFile;
use gga_core::linalg::{format_scalar, int, Matrix};
use gga_core::oracle::oracle_compare;
use gga_core::reps::{
    generates_full_matrix_algebra, intertwiner_dim, verify_homomorphism, verify_irreducible, RepKind, Representation,
};
use gga_core::{catalog_algebra, AlgebraKind, ContractionSpec, Error, GGAlgebra, MaskKind, NiceSet, Result};

use crate::report::Report;

fn coefficient_dim(kind: AlgebraKind) -> usize {
    match kind {
        AlgebraKind::D4 => 4,
        AlgebraKind::B3 => 3,
        AlgebraKind::G2 => 2,
    }
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(format_scalar).collect()).collect()
}

pub fn build(echo: Vec<String>, kind: AlgebraKind, mask: MaskKind, out: Option<&Path>) -> Result<Option<Report>> {
    let a = catalog_algebra(kind, mask);
    let text = a.to_json()?;
    let Some(path) = out else {
        println!("{text}");
        return Ok(None);
    };
    fs::write(path, &text).map_err(|e| Error::Unsupported(format!("cannot write {}: {e}", path.display())))?;
    let mut r = Report::new(echo);
    r.stat("out", path.display().to_string());
    r.stat("d", a.coeff_dim());
    r.stat("mask", a.mask().indices());
    r.stat("dim", a.dim());
    r.stat("nonzero_twist_keys", a.twist().nonzero_pairs().len());
    Ok(Some(r))
}

pub fn verify(
    echo: Vec<String>,
    kind: Option<AlgebraKind>,
    mask: MaskKind,
    input: Option<&Path>,
) -> Result<Option<Report>> {
    let mut r = Report::new(echo);
    let (a, kind) = match input {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Unsupported(format!("cannot read {}: {e}", path.display())))?;
            let file: AlgebraFile = serde_json::from_str(&text)?;
            let kind = match kind {
                Some(k) => k,
                None => file.name.parse()?,
            };
            let a = file.to_algebra()?;
            let reference = MaskKind::ALL.into_iter().find(|m| m.mask() == a.mask());
            let same = reference.is_some_and(|m| catalog_algebra(kind, m).structure() == a.structure());
            r.check("matches catalog construction", same, "");
            (a, kind)
        }
        None => {
            let kind = kind.expect("clap requires --algebra without --input");
            (catalog_algebra(kind, mask), kind)
        }
    };
    verify_algebra(&mut r, &a, kind)?;
    Ok(Some(r))
}

fn verify_algebra(r: &mut Report, a: &GGAlgebra, kind: AlgebraKind) -> Result<()> {
    let d = coefficient_dim(kind);
    r.expect("coefficient dim", a.coeff_dim(), d);
    if a.coeff_dim() != d {
        return Ok(());
    }
    let has_neutral = a.mask().contains(0);
    let lie = a.verify_lie();
    let detail = format!(
        "{} pairs, {} triples, {} violations",
        lie.pairs_checked,
        lie.triples_checked,
        lie.skew.len() + lie.jacobi.len()
    );
    r.check("lie axioms", lie.is_lie(), detail);
    let dim = d * a.mask().len();
    r.expect(format!("dim {dim}"), a.dim(), dim);

    let center = if has_neutral { d } else { 0 };
    r.expect(format!("center dim {center}"), a.center().dim(), center);
    let derived = a.derived_series().get(1).map_or(0, |s| s.dim());
    r.expect(format!("derived algebra dim {}", 7 * d), derived, 7 * d);

    let c = kind.killing_constant();
    let gram = a.killing();
    let expect = kind.coefficient_gram().scale(&int(c));
    let mut bad_blocks = Vec::new();
    for i in a.mask().indices() {
        for j in a.mask().indices() {
            let block = a.killing_block(&gram, i, j)?;
            let ok = if i == j && i != 0 { block == expect } else { block.is_zero() };
            if !ok {
                bad_blocks.push(format!("({i},{j})"));
            }
        }
    }
    r.check(format!("Killing constant {c}"), bad_blocks.is_empty(), bad_blocks.join(" "));
    let radical = a.killing_radical();
    let nondegenerate = radical == a.center();
    r.check(
        "Killing nondegenerate",
        nondegenerate,
        format!("radical dim {}, center dim {}", radical.dim(), a.center().dim()),
    );

    if matches!(kind, AlgebraKind::D4 | AlgebraKind::B3) {
        let o = oracle_compare(a)?;
        r.check("oracle match", o.is_match(), format!("{} pairs, {} mismatches", o.pairs_checked, o.mismatches.len()));
    }
    r.stat("algebra", kind.name());
    r.stat("mask", a.mask().indices());
    r.stat("fingerprint", a.fingerprint());
    Ok(())
}

pub fn killing(echo: Vec<String>, kind: AlgebraKind, mask: MaskKind) -> Result<Option<Report>> {
    let a = catalog_algebra(kind, mask);
    let gram = a.killing();
    let c = kind.killing_constant();
    let expect = kind.coefficient_gram().scale(&int(c));
    let mut r = Report::new(echo);
    let mut blocks = BTreeMap::new();
    let mut off_diagonal_zero = true;
    for i in a.mask().indices() {
        for j in a.mask().indices() {
            let block = a.killing_block(&gram, i, j)?;
            if i == j {
                if i != 0 {
                    r.check(format!("block g{i} = {c} x coefficient Gram"), block == expect, "");
                }
                blocks.insert(format!("g{i}"), matrix_strings(&block));
            } else {
                off_diagonal_zero &= block.is_zero();
            }
        }
    }
    r.check("off-degree blocks vanish", off_diagonal_zero, "");
    let radical = a.killing_radical();
    let neutral = if a.mask().contains(0) { a.component_subspace(0) } else { gga_core::Subspace::zero(a.dim()) };
    r.check("radical = neutral component", radical == neutral, format!("radical dim {}", radical.dim()));
    r.stat("algebra", kind.name());
    r.stat("mask", mask.name());
    r.stat("constant", c);
    r.stat("coefficient_gram", matrix_strings(&kind.coefficient_gram()));
    r.stat("diagonal_blocks", blocks);
    r.stat("rank", gram.rank());
    r.stat("radical_dim", radical.dim());
    Ok(Some(r))
}

pub fn nice_sets(echo: Vec<String>, classify: bool) -> Result<Option<Report>> {
    let all = enumerate_nice();
    let mut r = Report::new(echo);
    r.stat("nice_sets", all.len());
    let cat = catalog_sets();
    r.check("catalog sets are nice", cat.iter().all(|t| all.contains(t)), "");
    if classify {
        let orbits = orbit_classify(&all);
        r.expect("24 orbits", orbits.len(), 24);
        let mut rows = Vec::new();
        let mut one_each = true;
        for o in &orbits {
            let hits: Vec<String> =
                (0..24).filter(|&n| canonical_form(cat[n]) == o.canonical).map(|n| format!("T{}", n + 1)).collect();
            one_each &= hits.len() == 1;
            rows.push(serde_json::json!({
                "canonical": o.canonical.to_string(),
                "size": o.members.len(),
                "catalog": hits,
            }));
        }
        r.check("one catalog set per orbit", one_each, "");
        let singleton = |t: NiceSet| orbits.iter().any(|o| o.members == [t]);
        r.check("empty set and X are singleton orbits", singleton(NiceSet::EMPTY) && singleton(NiceSet::ALL), "");
        r.stat("orbits", rows);
    }
    Ok(Some(r))
}

pub fn contract(
    echo: Vec<String>,
    kind: AlgebraKind,
    spec: &ContractionSpec,
    mask: MaskKind,
) -> Result<Option<Report>> {
    let eps = spec.build();
    let mut r = Report::new(echo);
    let report = verify_contraction(&eps);
    r.check("graded contraction conditions", report.is_ok(), format!("{} generating triples", report.triples_checked));
    r.check("support is nice", eps.support().is_nice(), eps.support().to_string());
    r.stat("algebra", kind.name());
    r.stat("mask", mask.name());
    r.stat("map", spec.to_string());
    r.stat("support", eps.support().to_string());
    if report.is_ok() {
        let c = gga_core::contraction::contract(&catalog_algebra(kind, mask), &eps)?;
        let lie = c.verify_lie();
        r.check("lie axioms", lie.is_lie(), format!("{} triples", lie.triples_checked));
        r.stat("fingerprint", c.fingerprint());
    }
    Ok(Some(r))
}

pub fn survey(
    echo: Vec<String>,
    kinds: Vec<AlgebraKind>,
    masks: Vec<MaskKind>,
    maps: Vec<ContractionSpec>,
) -> Result<Option<Report>> {
    let kinds = if kinds.is_empty() { AlgebraKind::ALL.to_vec() } else { kinds };
    let masks = if masks.is_empty() { MaskKind::ALL.to_vec() } else { masks };
    let maps = if maps.is_empty() {
        let mut m = ContractionSpec::all_nice();
        m.extend(["eta:2", "mu:2", "beta:2,3"].map(|s| s.parse().expect("default maps parse")));
        m
    } else {
        maps
    };
    let pairs: Vec<(AlgebraKind, MaskKind)> = kinds.iter().flat_map(|&k| masks.iter().map(move |&m| (k, m))).collect();
    let rows = contraction_survey(&pairs, &maps)?;
    let mut r = Report::new(echo);
    let not_lie: Vec<String> =
        rows.iter().filter(|x| !x.lie).map(|x| format!("{} {} {}", x.algebra, x.mask, x.map)).collect();
    r.check("all rows are Lie algebras", not_lie.is_empty(), not_lie.join("; "));
    r.stat("row_count", rows.len());
    r.stat("rows", rows);
    Ok(Some(r))
}

pub fn rep(echo: Vec<String>, which: RepKind, check: bool) -> Result<Option<Report>> {
    let (rep, alg) = Representation::catalog(which)?;
    let mut r = Report::new(echo);
    r.stat("representation", which.name());
    r.stat("source", format!("{} gx", which.source()));
    r.stat("source_dim", alg.dim());
    r.stat("module_dim", rep.module_dim);
    if check {
        let bad = verify_homomorphism(&rep, alg.structure())?;
        r.check("homomorphism", bad.is_empty(), format!("{} violating pairs", bad.len()));
        r.check("irreducible", verify_irreducible(&rep), "");
        r.check("operators span the full matrix algebra", generates_full_matrix_algebra(&rep), "");
        r.expect("self-intertwiners dim 1", intertwiner_dim(&rep, &rep)?, 1);
        let eight = [RepKind::Rho1, RepKind::Rho2, RepKind::Rho3];
        if eight.contains(&which) {
            for other in eight.into_iter().filter(|&o| o != which) {
                let (o, _) = Representation::catalog(other)?;
                r.expect(format!("no intertwiners to {other}"), intertwiner_dim(&rep, &o)?, 0);
            }
        }
    }
    Ok(Some(r))
}
