//! Human-readable rendering of the report views in [`crate::output`].

use std::fmt::Write;

use crate::output::{
    CertificateJson, CertifyJson, DimsJson, FieldJson, IdealJson, LrsJson, ModPJson, ReportJson, VerifyJson,
    WarningJson,
};

/// `[a, b, c]` (constant first) as `a + b*t + c*t^2`.
fn element(coeffs: &[String]) -> String {
    poly(coeffs, "t")
}

fn poly(coeffs: &[String], var: &str) -> String {
    let mut terms: Vec<String> = Vec::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c == "0" {
            continue;
        }
        let (neg, abs) = match c.strip_prefix('-') {
            Some(a) => (true, a),
            None => (false, c.as_str()),
        };
        let monomial = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        let body = match (i, abs) {
            (0, _) => abs.to_string(),
            (_, "1") => monomial,
            _ => format!("{abs}*{monomial}"),
        };
        terms.push(match (terms.is_empty(), neg) {
            (true, true) => format!("-{body}"),
            (true, false) => body,
            (false, true) => format!("- {body}"),
            (false, false) => format!("+ {body}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" ")
    }
}

fn field_line(out: &mut String, f: &FieldJson) {
    let status = match &f.witness_prime {
        Some(p) => format!("irreducible (mod {p})"),
        None => "irreducibility unverified".to_string(),
    };
    let _ = writeln!(out, "field:          Q[t]/({}), degree {}, {status}", poly(&f.min_poly, "t"), f.degree);
}

fn ideal(i: &IdealJson) -> String {
    format!(
        "({}, {}) e={} f={}{}",
        i.p,
        poly(&i.factor, "t"),
        i.e,
        i.f,
        if i.certified { "" } else { " [uncertified]" }
    )
}

fn certificate(out: &mut String, indent: &str, c: &CertificateJson) {
    let _ = writeln!(
        out,
        "{indent}ideal {}: s_eff = {}, bound {}{}",
        ideal(&c.ideal),
        c.s_eff,
        c.bound,
        if c.tight { " (tight)" } else { "" }
    );
    for r in &c.residues {
        let _ = writeln!(out, "{indent}  {} -> {}", element(&r.alpha), poly(&r.residue, "t"));
    }
}

fn modp(out: &mut String, m: &ModPJson) {
    let _ = writeln!(out, "mod-p search:   primes <= {}, {} certificate(s)", m.prime_limit, m.all.len());
    match &m.best {
        Some(best) => {
            let _ = writeln!(out, "  best:");
            certificate(out, "    ", best);
        }
        None => {
            let _ = writeln!(out, "  no certificate found");
        }
    }
}

fn lrs(out: &mut String, l: &LrsJson) {
    let _ = writeln!(out, "LRS ratios:     s = {}, N = {}", l.s, l.n);
    for r in &l.ratios {
        let _ = writeln!(
            out,
            "  K_{} = {}   min poly {}   {}, degree {}",
            r.j,
            element(&r.value),
            poly(&r.min_poly, "x"),
            if r.is_integer { "integral" } else { "not integral" },
            r.degree
        );
    }
    let bound = match (l.bound_kind, &l.bound_value, &l.strict_below) {
        ("non_integral", Some(v), _) => format!("|X| <= N = {v} (some K_j is not an algebraic integer)"),
        ("degree_refined", Some(v), Some(sb)) => format!(
            "|X| < {sb}, so |X| <= {v} (all K_j integral, t = {})",
            l.t.unwrap_or(0)
        ),
        _ => "no upper bound (all K_j are rational integers)".to_string(),
    };
    let _ = writeln!(out, "  {bound}");
    for t in &l.thresholds {
        let _ = writeln!(
            out,
            "  t = {}: |X| >= {} forces every K_j integral of degree <= {}: {}",
            t.t,
            t.threshold,
            t.t,
            if t.satisfied {
                "consistent".to_string()
            } else {
                format!("not the case, so |X| < {}", t.threshold)
            }
        );
    }
}

fn warnings(out: &mut String, ws: &[WarningJson]) {
    for w in ws {
        let _ = writeln!(out, "warning: {}", w.message);
    }
}

fn distances(out: &mut String, ds: &[Vec<String>]) {
    let list: Vec<String> = ds.iter().map(|d| element(d)).collect();
    let _ = writeln!(out, "distances:      {{{}}}", list.join(", "));
}

pub fn report(r: &ReportJson) -> String {
    let mut out = String::new();
    field_line(&mut out, &r.field);
    let _ = writeln!(
        out,
        "d = {}, s = {}, |X| = {}",
        r.d,
        r.s,
        r.cardinality.map_or("unknown".to_string(), |n| n.to_string())
    );
    distances(&mut out, &r.distances);
    let _ = writeln!(out, "absolute bound: {}", r.absolute_bound);
    modp(&mut out, &r.modp);
    match &r.lrs {
        Some(l) => lrs(&mut out, l),
        None => {
            let _ = writeln!(out, "LRS ratios:     not applicable (s < 2)");
        }
    }
    let _ = writeln!(
        out,
        "best bound:     {} ({}){}",
        r.best_bound,
        r.best_source,
        if r.tight { ", tight" } else { "" }
    );
    warnings(&mut out, &r.warnings);
    out
}

pub fn certify(c: &CertifyJson) -> String {
    let mut out = String::new();
    field_line(&mut out, &c.field);
    let _ = writeln!(out, "d = {}, s = {}", c.d, c.s);
    distances(&mut out, &c.distances);
    modp(&mut out, &c.modp);
    for cert in c.modp.all.iter().skip(1) {
        certificate(&mut out, "  ", cert);
    }
    for s in &c.modp.skipped {
        let _ = writeln!(out, "  skipped ({}, {}): {}", s.p, poly(&s.factor, "t"), s.reason);
    }
    warnings(&mut out, &c.warnings);
    out
}

pub fn lrs_only(l: &LrsJson) -> String {
    let mut out = String::new();
    lrs(&mut out, l);
    out
}

pub fn verify(v: &VerifyJson) -> String {
    let mut out = String::new();
    match &v.congruence_pattern {
        Some(p) => {
            let a: Vec<String> = p.a_list.iter().map(|x| element(x)).collect();
            let _ = writeln!(
                out,
                "congruence pattern at {} with a = [{}]: {}",
                ideal(&p.ideal),
                a.join(", "),
                if p.pass { "pass" } else { "FAIL" }
            );
            if let Some(w) = &p.witness {
                let _ = writeln!(out, "  witness: entry ({}, {}) {}", w.row, w.col, w.kind);
            }
        }
        None => {
            let _ = writeln!(out, "congruence pattern: no certificate to check");
        }
    }
    for l in &v.lrs {
        let _ = writeln!(
            out,
            "j = {}: K_j = {}, rank {} <= N = {}: {}, multiplicity of -K_j: {}{}",
            l.j,
            element(&l.k_j),
            l.rank,
            l.n,
            if l.rank_ok { "ok" } else { "FAIL" },
            l.eigen_multiplicity,
            if l.nullity_ok { "" } else { " (below nullity: FAIL)" }
        );
    }
    out
}

pub fn dims(d: &DimsJson) -> String {
    let mut out = String::new();
    for e in &d.table {
        let _ = writeln!(out, "dim P_{}(R^{}) = {}", e.s, d.d, e.dim);
    }
    out
}
