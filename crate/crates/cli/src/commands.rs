//! The four commands, generic over the coefficient field.

use ainfty::{AInftyStructure, Flavor};
use cohom::{
    build, cc_der_isomorphism, cohomology_dims, cyclic_complex, cyclic_derivation_complexes, dihedral_complexes, filtration_piece,
    hochschild_complex, hochschild_pm_complexes, Theory,
};
use deform::{infinitesimal_moduli, DeformationContext};
use exactnum::Scalar;
use serde_json::json;

use crate::input::Input;
use crate::report::{check_json, derivation_lines, element_json, element_lines, superscript, table_json, Report};

/// Errors that abort a command (as opposed to failed assertions).
pub type CmdResult<T> = Result<T, String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Complexes at truncation `N` read `m` through weight `N + 2` (exactness
/// of the stability probe at `N + 1`); files describe `m` completely, so
/// the structure is built that far.
fn structure_for_complexes<F: Scalar>(input: &Input, n: usize) -> CmdResult<AInftyStructure<F>> {
    input.structure::<F>(n + 2).map_err(err)
}

fn header<F: Scalar>(r: &mut Report, input: &Input, s: &AInftyStructure<F>, n: usize) {
    if let Some(d) = &input.doc.description {
        r.line(d.clone());
        r.set("description", json!(d));
    }
    let basis: Vec<String> = s.base().space().basis().iter().map(|b| format!("{} (degree {})", b.name, b.degree)).collect();
    let flags = s.flags();
    r.line(format!("field: {}", F::field_name()));
    r.line(format!("basis: {}", if basis.is_empty() { "(empty)".to_string() } else { basis.join(", ") }));
    r.line(format!("truncation N = {n}; involutive: {}, cyclic: {}", flags.involutive, flags.cyclic));
    if let Some(f) = s.base().form() {
        r.line(format!("form degree d = {}", f.degree));
    }
    r.set("field", json!(F::field_name()));
    r.set("truncation", json!(n));
    r.set("basis", json!(s.base().space().basis().iter().map(|b| json!({"name": b.name, "degree": b.degree})).collect::<Vec<_>>()));
    r.set("flags", json!({"involutive": flags.involutive, "cyclic": flags.cyclic}));
}

pub fn validate<F: Scalar>(input: &Input, file: &str, max_weight: Option<usize>) -> CmdResult<Report> {
    let n = input.truncation(max_weight).map_err(err)?;
    let s = input.structure::<F>(n).map_err(err)?;
    let mut r = Report::new("validate", file);
    header(&mut r, input, &s, n);
    let comps = derivation_lines(&s, s.m().images(), "m");
    r.line("dual components of m (w_v is the generator dual to v):");
    if comps.is_empty() {
        r.line("  m = 0");
    }
    for (lhs, rhs) in &comps {
        r.line(format!("  {lhs} = {rhs}"));
    }
    r.set("m", element_json(&comps));
    for c in s.validate() {
        r.block(&c.to_string());
        r.push("checks", check_json(&c));
        r.assert(c.check.clone(), c.passed());
    }
    Ok(r)
}

pub struct CohomologyArgs {
    pub theory: Theory,
    pub max_weight: Option<usize>,
    pub degrees: Option<(i64, i64)>,
    pub filtration: Option<i64>,
    pub decompose: bool,
}

pub fn cohomology<F: Scalar>(input: &Input, file: &str, a: &CohomologyArgs) -> CmdResult<Report> {
    let n = input.truncation(a.max_weight).map_err(err)?;
    let window = input.window(a.degrees, n).map_err(err)?;
    let s = structure_for_complexes::<F>(input, n)?;
    let mut r = Report::new("cohomology", file);
    header(&mut r, input, &s, n);
    r.line(format!("degrees {}..{}", window.0, window.1));
    r.set("degrees", json!([window.0, window.1]));
    let table = |t: Theory| -> CmdResult<cohom::CohomologyTable> {
        let mut c = build(&s, t, n, window).map_err(|e| format!("{t}: {e}"))?;
        if let Some(k) = a.filtration {
            c = filtration_piece(&c, k).map_err(err)?;
        }
        Ok(cohomology_dims(&c))
    };
    let mut theories = vec![a.theory];
    if a.decompose {
        let (p, m) = a.theory.summands().ok_or_else(|| format!("{} has no ± decomposition; use hh, hc or cycder", a.theory))?;
        theories.extend([p, m]);
    }
    let mut tables = Vec::new();
    for t in &theories {
        let tab = table(*t)?;
        r.line("");
        r.line(format!("[{t}]{}", a.filtration.map(|k| format!(" filtration piece ≥ {k}")).unwrap_or_default()));
        r.block(&tab.to_string());
        let mut j = table_json(&tab);
        j["theory"] = json!(t.name());
        r.push("tables", j);
        tables.push(tab);
    }
    if let Some(k) = a.filtration {
        r.set("filtration", json!(k));
    }
    if a.decompose {
        let additive = tables[0].rows.iter().all(|row| {
            let p = tables[1].dim(row.degree).unwrap_or(0);
            let m = tables[2].dim(row.degree).unwrap_or(0);
            row.dim == p + m
        });
        r.line("");
        r.line(format!(
            "additivity {} = {} + {} in every degree: {}",
            theories[0],
            theories[1],
            theories[2],
            if additive { "OK" } else { "FAIL" }
        ));
        r.set("additivity", json!(additive));
        r.assert("additivity", additive);
    }
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum DeformAction {
    /// Check the Maurer–Cartan equation for the file's `eta`.
    McCheck,
    /// Apply the gauge action of the file's `y` to `eta`.
    Gauge,
    /// Dimension of the infinitesimal moduli, compared with cohomology.
    Moduli,
}

pub struct DeformArgs<'a> {
    pub action: DeformAction,
    pub ring: Option<&'a str>,
    pub flavor: Option<&'a str>,
    pub max_weight: Option<usize>,
}

/// The second cohomology that classifies first-order deformations of the
/// flavor, from the complexes at truncation `N`: its label, its dimension,
/// and for cyclic flavors a second computation through the cyclic
/// derivation complex.
fn moduli_cohomology<F: Scalar>(big: &AInftyStructure<F>, n: usize, flavor: Flavor) -> CmdResult<(String, usize, Option<(String, usize)>)> {
    Ok(match flavor {
        Flavor::Plain => {
            let c = filtration_piece(&hochschild_complex(big, n, (2, 2)).map_err(err)?, 1).map_err(err)?;
            ("HH²(≥1)".into(), c.cohomology_dim(2), None)
        }
        Flavor::Involutive => {
            let (plus, _) = hochschild_pm_complexes(big, n, (2, 2)).map_err(err)?;
            ("HH²₊(≥1)".into(), filtration_piece(&plus, 1).map_err(err)?.cohomology_dim(2), None)
        }
        Flavor::Cyclic | Flavor::CyclicInvolutive => {
            let d = big.base().form().ok_or("cyclic flavors need a form")?.degree;
            let k = d + 2;
            let (whole, pm) = cyclic_derivation_complexes(big, n, (1, 1)).map_err(err)?;
            let (cc, der, name, der_name) = if flavor == Flavor::Cyclic {
                (cyclic_complex(big, n + 1, (k, k)).map_err(err)?, whole, "HC", "H¹(Der^cycl(≥1))")
            } else {
                let plus = pm.ok_or("the cyclic involutive flavor needs an involution-invariant form")?.0;
                (dihedral_complexes(big, n + 1, (k, k)).map_err(err)?.0, plus, "HD₊", "H¹(Der^cycl₊(≥1))")
            };
            let from_cc = filtration_piece(&cc, 1).map_err(err)?.cohomology_dim(k);
            let from_der = filtration_piece(&der, 1).map_err(err)?.cohomology_dim(1);
            (format!("{name}{}(≥1)", superscript(k)), from_cc, Some((der_name.to_string(), from_der)))
        }
    })
}

pub fn deform<F: Scalar>(input: &Input, file: &str, a: &DeformArgs) -> CmdResult<Report> {
    let n = input.truncation(a.max_weight).map_err(err)?;
    let big = structure_for_complexes::<F>(input, n)?;
    let s = big.retruncate(n).map_err(err)?;
    let (ring, flavor) = input.deformation_setup(a.ring, a.flavor).map_err(err)?;
    let mut r = Report::new("deform", file);
    header(&mut r, input, &s, n);
    r.line(format!("flavor: {}", flavor.label()));
    r.set("flavor", json!(flavor.label()));
    match a.action {
        DeformAction::Moduli => {
            r.set("action", json!("moduli"));
            let m = infinitesimal_moduli(&s, flavor).map_err(err)?;
            r.line(m.to_string());
            let (label, h2, second) = moduli_cohomology(&big, n, flavor)?;
            let matches = m.dim == h2;
            r.line(format!("dim = {}, {label} = {h2}, {}", m.dim, if matches { "MATCH" } else { "MISMATCH" }));
            r.assert(format!("moduli dimension equals {label}"), matches);
            r.set(
                "moduli",
                json!({"cochains": m.cochains, "cocycles": m.cocycles, "coboundaries": m.coboundaries, "dim": m.dim}),
            );
            r.set("cohomology", json!({"label": label, "dim": h2}));
            if let Some((l2, v2)) = second {
                let ok = v2 == h2;
                r.line(format!("{l2} = {v2}, {}", if ok { "MATCH" } else { "MISMATCH" }));
                r.assert(format!("{l2} equals {label}"), ok);
                r.set("cyclic_derivations", json!({"label": l2, "dim": v2}));
            }
        }
        DeformAction::McCheck | DeformAction::Gauge => {
            let c = DeformationContext::new(s.clone(), ring, flavor).map_err(err)?;
            r.line(format!("ring: {}", c.ring()));
            r.set("ring", json!(c.ring().to_string()));
            let entry = input.doc.deformation.clone().unwrap_or_default();
            let eta = input.element(&c, &entry.eta, 1).map_err(err)?;
            let eta_lines = element_lines(&s, c.ring(), &eta, "eta");
            r.line("eta:");
            if eta_lines.is_empty() {
                r.line("  eta = 0");
            }
            for (lhs, rhs) in &eta_lines {
                r.line(format!("  {lhs} = {rhs}"));
            }
            r.set("eta", element_json(&eta_lines));
            let verdict = c.mc_check(&eta).map_err(err)?;
            match &verdict.witness {
                None => r.line("eta: MC"),
                Some(w) => r.line(format!("eta: not MC ({w})")),
            }
            r.set("eta_is_mc", json!(verdict.is_mc()));
            r.assert("eta satisfies the Maurer–Cartan equation", verdict.is_mc());
            if a.action == DeformAction::Gauge {
                r.set("action", json!("gauge"));
                if !verdict.is_mc() {
                    return Ok(r);
                }
                let y = input.element(&c, &entry.y, 0).map_err(err)?;
                let y_lines = element_lines(&s, c.ring(), &y, "y");
                r.line("y:");
                if y_lines.is_empty() {
                    r.line("  y = 0");
                }
                for (lhs, rhs) in &y_lines {
                    r.line(format!("  {lhs} = {rhs}"));
                }
                r.set("y", element_json(&y_lines));
                let moved = c.gauge(&y, &eta).map_err(err)?;
                let moved_lines = element_lines(&s, c.ring(), &moved, "e^y·eta");
                r.line("e^y·eta:");
                if moved_lines.is_empty() {
                    r.line("  e^y·eta = 0");
                }
                for (lhs, rhs) in &moved_lines {
                    r.line(format!("  {lhs} = {rhs}"));
                }
                r.set("gauged", element_json(&moved_lines));
                let still = c.mc_check(&moved).map_err(err)?.is_mc();
                r.line(format!("e^y·eta: {}", if still { "MC preserved" } else { "NOT MC" }));
                r.assert("gauge action preserves the Maurer–Cartan equation", still);
                let conj = c.gauge_by_automorphism(&y, &eta).map_err(err)?;
                let agrees = conj == moved;
                r.line(format!(
                    "conjugation by exp(y): {}",
                    if agrees { "agrees with the gauge action" } else { "DISAGREES with the gauge action" }
                ));
                r.assert("gauge action equals conjugation by exp(y)", agrees);
                r.set("gauged_is_mc", json!(still));
            } else {
                r.set("action", json!("mc-check"));
            }
        }
    }
    Ok(r)
}

pub fn iso_check<F: Scalar>(input: &Input, file: &str, max_weight: Option<usize>) -> CmdResult<Report> {
    let n = input.truncation(max_weight).map_err(err)?;
    let s = structure_for_complexes::<F>(input, n)?;
    let mut r = Report::new("iso-check", file);
    header(&mut r, input, &s, n);
    let iso = cc_der_isomorphism(&s, n).map_err(err)?;
    r.block(&iso.to_string());
    let weights: Vec<_> = iso
        .weights
        .iter()
        .map(|l| {
            json!({"weight": l.weight, "derivations": l.derivations, "coinvariants": l.coinvariants, "rank": l.rank, "chain_map": l.chain_map, "ok": l.ok()})
        })
        .collect();
    let degrees: Vec<_> = iso
        .degrees
        .iter()
        .map(|l| {
            json!({"degree": l.degree, "der_cochains": l.der_cochains, "cc_cochains": l.cc_cochains, "der_cohomology": l.der_cohomology, "cc_cohomology": l.cc_cohomology, "ok": l.ok()})
        })
        .collect();
    r.set("weights", json!(weights));
    r.set("degrees", json!(degrees));
    if let Some(signed) = &iso.signed {
        let lines: Vec<_> = signed
            .iter()
            .map(|l| json!({"weight": l.weight, "plus": [l.plus.0, l.plus.1, l.plus.2], "minus": [l.minus.0, l.minus.1, l.minus.2], "intertwines": l.intertwines, "ok": l.ok()}))
            .collect();
        r.set("signed_parts", json!(lines));
        r.assert("+/- parts match", signed.iter().all(|l| l.ok()));
    }
    r.assert("f is bijective per weight and a chain map", iso.weights.iter().all(|l| l.ok()));
    r.assert("cochain and cohomology dimensions agree per degree", iso.degrees.iter().all(|l| l.ok()));
    if let Some(sd) = &iso.signed_degrees {
        r.assert("+/- cohomology agrees per degree", sd.iter().all(|(p, m)| p.ok() && m.ok()));
    }
    Ok(r)
}
