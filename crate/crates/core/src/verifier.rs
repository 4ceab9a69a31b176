//! End-to-end checks of the classification of simplicial reflexive
//! polytopes with `3d - 1` vertices, of the `3d` vertex bound's equality
//! case, and of the reflexive polygon counts, as line-oriented reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::analysis::{check_lemmas, classify_case, nu_kind, special_facets, CaseLabel, LemmaId, NuKind, Tally};
use crate::canonical::{is_isomorphic, normal_form};
use crate::constructions::{casagrande_extremal, classification_members, construct, NamedPolytope};
use crate::enumeration::{enumerate_reflexive_polygons, five_vertex_taxonomy, PolygonClass, POLYGON_CLASSES};
use crate::error::{Error, Result};
use crate::polytope::LatticePolytope;

/// Summary of one polytope examined by a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeSummary {
    pub name: String,
    pub dim: usize,
    pub vertex_count: usize,
    pub picard: Option<usize>,
    pub smooth: bool,
    pub nu_kind: NuKind,
    pub special_facets: usize,
    /// Case labels of the special facets, by label.
    pub cases: BTreeMap<CaseLabel, usize>,
}

impl PolytopeSummary {
    fn new(name: String, p: &LatticePolytope) -> Self {
        PolytopeSummary {
            name,
            dim: p.dim(),
            vertex_count: p.num_vertices(),
            picard: p.picard_number().ok(),
            smooth: p.is_smooth_fano(),
            nu_kind: nu_kind(p),
            special_facets: 0,
            cases: BTreeMap::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub subject: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaLine {
    pub subject: String,
    pub lemma: LemmaId,
    pub tally: Tally,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub title: String,
    pub dimension: Option<usize>,
    pub polytopes: Vec<PolytopeSummary>,
    /// Pairwise isomorphism among `polytopes`, when computed.
    pub isomorphism: Vec<Vec<bool>>,
    pub checks: Vec<Check>,
    pub lemmas: Vec<LemmaLine>,
}

impl VerificationReport {
    fn new(title: &str, dimension: Option<usize>) -> Self {
        VerificationReport {
            title: title.to_string(),
            dimension,
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.lemmas.iter().all(|l| l.violations.is_empty())
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn lemma_violations(&self) -> usize {
        self.lemmas.iter().map(|l| l.violations.len()).sum()
    }

    fn check(&mut self, name: &str, subject: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            subject: subject.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    fn expect_eq<T: PartialEq + std::fmt::Display>(&mut self, name: &str, subject: &str, got: T, want: T) {
        let detail = format!("got {got}, expected {want}");
        self.check(name, subject, got == want, detail);
    }

    fn add_lemmas(&mut self, subject: &str, p: &LatticePolytope) {
        match check_lemmas(p) {
            Ok(report) => {
                for lemma in LemmaId::ALL {
                    self.lemmas.push(LemmaLine {
                        subject: subject.to_string(),
                        lemma,
                        tally: report.tally(lemma),
                        violations: report
                            .violations
                            .iter()
                            .filter(|v| v.lemma == lemma)
                            .map(|v| v.to_string())
                            .collect(),
                    });
                }
            }
            Err(e) => self.check("lemmas", subject, false, e.to_string()),
        }
    }

    fn add_isomorphism_matrix(&mut self, polytopes: &[LatticePolytope]) {
        self.isomorphism = polytopes
            .iter()
            .map(|p| polytopes.iter().map(|q| is_isomorphic(p, q)).collect())
            .collect();
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self.dimension {
            Some(d) => writeln!(out, "REPORT {} d={d}", self.title),
            None => writeln!(out, "REPORT {}", self.title),
        }
        .expect("write to string");
        for s in &self.polytopes {
            let picard = s.picard.map_or("-".to_string(), |r| r.to_string());
            let cases: Vec<String> = s.cases.iter().map(|(c, n)| format!("{c}:{n}")).collect();
            let cases = if cases.is_empty() { "-".to_string() } else { cases.join(",") };
            let _ = writeln!(
                out,
                "POLYTOPE {} dim={} vertices={} picard={picard} smooth={} nu={} special={} cases={cases}",
                s.name,
                s.dim,
                s.vertex_count,
                if s.smooth { "yes" } else { "no" },
                s.nu_kind,
                s.special_facets,
            );
        }
        for (i, row) in self.isomorphism.iter().enumerate() {
            let cells: Vec<&str> = row.iter().map(|&b| if b { "1" } else { "0" }).collect();
            let _ = writeln!(out, "ISO {} {}", self.polytopes[i].name, cells.join(" "));
        }
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                let _ = writeln!(out, "CHECK {} {} {status}", c.name, c.subject);
            } else {
                let _ = writeln!(out, "CHECK {} {} {status} {}", c.name, c.subject, c.detail);
            }
        }
        for l in &self.lemmas {
            let _ = writeln!(
                out,
                "LEMMA-TALLY {} {} checked={} vacuous={} violations={}",
                l.subject,
                l.lemma,
                l.tally.checked,
                l.tally.vacuous,
                l.violations.len()
            );
            for v in &l.violations {
                let _ = writeln!(out, "{v}");
            }
        }
        let _ = writeln!(out, "VERDICT: {}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }
}

/// Fills the special-facet fields of a summary and checks each case label
/// against the level of the vertex sum.
fn record_cases(report: &mut VerificationReport, summary: &mut PolytopeSummary, p: &LatticePolytope) {
    let special = match special_facets(p) {
        Ok(s) => s,
        Err(e) => return report.check("special-facets", &summary.name, false, e.to_string()),
    };
    summary.special_facets = special.len();
    let mut failures = Vec::new();
    for &k in &special {
        match classify_case(p, k) {
            Ok(label) => *summary.cases.entry(label).or_insert(0) += 1,
            Err(e) => failures.push(format!("facet {k}: {e}")),
        }
    }
    let detail = if failures.is_empty() {
        format!("{} special facets classified", special.len())
    } else {
        failures.join("; ")
    };
    report.check("case-table", &summary.name, failures.is_empty(), detail);
}

/// Checks the classification list in dimension `d`, for `3 <= d <= 7`.
pub fn verify_theorem(d: usize) -> Result<VerificationReport> {
    if !(3..=7).contains(&d) {
        return Err(Error::Domain(format!("classification check runs for 3 <= d <= 7, got {d}")));
    }
    let mut report = VerificationReport::new("classification", Some(d));
    let members = match classification_members(d) {
        Ok(m) => m,
        Err(e) => {
            report.check("build", "list", false, e.to_string());
            return Ok(report);
        }
    };
    let expected_members = if d % 2 == 0 { 3 } else { 2 };
    report.expect_eq("member-count", "list", members.len(), expected_members);

    for m in &members {
        let p = &m.polytope;
        let name = m.label();
        let mut summary = PolytopeSummary::new(name.clone(), p);
        report.check("dimension", &name, p.dim() == d, format!("dim {}", p.dim()));
        report.check("reflexive", &name, p.is_reflexive(), "");
        report.check("simplicial", &name, p.is_simplicial(), "");
        report.expect_eq("vertex-count", &name, p.num_vertices(), 3 * d - 1);
        match p.picard_number() {
            Ok(r) => report.expect_eq("picard", &name, r, 2 * d - 1),
            Err(e) => report.check("picard", &name, false, e.to_string()),
        }
        report.expect_eq("nu-kind", &name, summary.nu_kind, m.factor.nu_kind());
        record_cases(&mut report, &mut summary, p);
        report.polytopes.push(summary);
    }

    let polytopes: Vec<LatticePolytope> = members.iter().map(|m| m.polytope.clone()).collect();
    report.add_isomorphism_matrix(&polytopes);
    let distinct = (0..polytopes.len())
        .all(|i| (0..polytopes.len()).all(|j| i == j || !report.isomorphism[i][j]));
    report.check("pairwise-non-isomorphic", "list", distinct, "");
    let smooth = members.iter().filter(|m| m.polytope.is_smooth_fano()).count();
    report.expect_eq("smooth-count", "list", smooth, if d % 2 == 0 { 1 } else { 2 });
    report.check(
        "completeness",
        "list",
        true,
        "not searched; the list is checked for validity and distinctness only",
    );

    for m in &members {
        report.add_lemmas(&m.label(), &m.polytope);
    }
    Ok(report)
}

/// Checks that the free sum of `d / 2` hexagons reaches `3d` vertices with
/// Picard number `2d`, and that no catalogued polytope of dimension `d`
/// exceeds `3d` vertices.
pub fn verify_casagrande(d: usize) -> Result<VerificationReport> {
    if d < 2 || d > 8 || d % 2 != 0 {
        return Err(Error::Domain(format!("hexagon-sum check runs for even 2 <= d <= 8, got {d}")));
    }
    let mut report = VerificationReport::new("casagrande", Some(d));
    let p = match casagrande_extremal(d) {
        Ok(p) => p,
        Err(e) => {
            report.check("build", "extremal", false, e.to_string());
            return Ok(report);
        }
    };
    let name = format!("{}*v2", d / 2);
    let summary = PolytopeSummary::new(name.clone(), &p);
    report.check("reflexive", &name, p.is_reflexive(), "");
    report.check("simplicial", &name, p.is_simplicial(), "");
    report.check("smooth", &name, p.is_smooth_fano(), "");
    report.expect_eq("vertex-count", &name, p.num_vertices(), 3 * d);
    match p.picard_number() {
        Ok(r) => report.expect_eq("picard", &name, r, 2 * d),
        Err(e) => report.check("picard", &name, false, e.to_string()),
    }
    report.expect_eq("nu-kind", &name, summary.nu_kind, NuKind::Zero);
    report.polytopes.push(summary);

    let mut corpus: Vec<(String, LatticePolytope)> = Vec::new();
    if d == 2 {
        match enumerate_reflexive_polygons() {
            Ok(classes) => {
                for (k, c) in classes.into_iter().enumerate() {
                    corpus.push((format!("polygon-{}", k + 1), c.representative));
                }
            }
            Err(e) => report.check("corpus", "polygons", false, e.to_string()),
        }
    } else {
        match classification_members(d) {
            Ok(members) => corpus.extend(members.into_iter().map(|m| (m.label(), m.polytope))),
            Err(e) => report.check("corpus", "list", false, e.to_string()),
        }
    }
    corpus.push((name, p));
    for (name, q) in &corpus {
        let bound = q.num_vertices() <= 3 * d;
        report.check("vertex-bound", name, bound, format!("{} <= {}", q.num_vertices(), 3 * d));
    }
    Ok(report)
}

/// Enumerates the reflexive polygons and matches the named hexagon and
/// pentagons against the classes found.
pub fn verify_polygon_landscape() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("polygons", Some(2));
    let classes = match enumerate_reflexive_polygons() {
        Ok(c) => c,
        Err(e) => {
            report.check("enumeration", "polygons", false, e.to_string());
            return Ok(report);
        }
    };
    for (k, c) in classes.iter().enumerate() {
        let name = format!("polygon-{}", k + 1);
        report.polytopes.push(PolytopeSummary::new(name.clone(), &c.representative));
        let (interior, _) = c.representative.lattice_points();
        report.check(
            "reflexive",
            &name,
            c.representative.is_reflexive() && interior.len() == 1,
            format!("{} interior lattice points", interior.len()),
        );
    }
    let count = |k: usize| classes.iter().filter(|c| c.vertex_count == k).count();
    report.expect_eq("class-count", "polygons", classes.len(), POLYGON_CLASSES);
    report.expect_eq("five-vertex-count", "polygons", count(5), 3);
    report.expect_eq("six-vertex-count", "polygons", count(6), 1);
    let histogram: Vec<String> = (3..=6).map(|k| format!("{k}:{}", count(k))).collect();
    report.check("vertex-histogram", "polygons", true, histogram.join(","));

    let hexagons: Vec<&PolygonClass> = classes.iter().filter(|c| c.vertex_count == 6).collect();
    match (construct(NamedPolytope::V2), hexagons.as_slice()) {
        (Ok(v2), [hex]) => {
            report.check("matches-class", "v2", normal_form(&v2) == hex.normal_form, "");
            report.check("smooth", "v2", hex.smooth, "");
        }
        (Err(e), _) => report.check("build", "v2", false, e.to_string()),
        _ => report.check("matches-class", "v2", false, "no unique six-vertex class"),
    }

    match five_vertex_taxonomy(&classes) {
        Ok(t) => {
            for name in [NamedPolytope::TV2, NamedPolytope::E1, NamedPolytope::E2] {
                let class = t.get(name).expect("five-vertex name");
                match construct(name) {
                    Ok(p) => {
                        report.check("matches-class", name.name(), normal_form(&p) == class.normal_form, "");
                        report.expect_eq("nu-kind", name.name(), class.nu_kind, name.nu_kind());
                    }
                    Err(e) => report.check("build", name.name(), false, e.to_string()),
                }
            }
        }
        Err(e) => report.check("taxonomy", "polygons", false, e.to_string()),
    }
    Ok(report)
}

/// All polytopes the checks run over: the polygon classes, the named
/// polytopes and the classification lists up to dimension `max_dim`.
pub fn corpus(max_dim: usize) -> Result<Vec<(String, LatticePolytope)>> {
    let mut out = Vec::new();
    for (k, c) in enumerate_reflexive_polygons()?.into_iter().enumerate() {
        out.push((format!("polygon-{}", k + 1), c.representative));
    }
    for name in [NamedPolytope::Q3, NamedPolytope::Q3P] {
        out.push((name.to_string(), construct(name)?));
    }
    for d in 3..=max_dim {
        for m in classification_members(d)? {
            if m.hexagons > 0 {
                out.push((m.label(), m.polytope));
            }
        }
    }
    Ok(out)
}
