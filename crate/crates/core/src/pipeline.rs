//! The end-to-end check: build `W̄𝒢`, `N𝒢` (and `W𝒢` for groups), compare
//! them through `φ`, and certify that the comparison is an equivalence.

use serde::{Deserialize, Serialize};

use crate::comparison::{
    check_naturality, induced_map_with_budget, iota_vertex, phi_functor_failures, phi_one_is_identity, phi_vertex,
    uniqueness_by_exhaustion,
};
use crate::hc::nerve::DEFAULT_BUDGET;
use crate::hc::wbar_via_representable;
use crate::instance::InstanceSpec;
use crate::invariants::{certify_equivalence, CertifyReport};
use crate::simplicial::{is_kan, is_kan_fibration};
use crate::wbar::{build_w_total, check_principal_fibration, classical_nerve_map, is_constant};
use crate::{Error, Result, SCHEMA_VERSION};

/// Largest dimension the structural suites for `φ` run to.
const PHI_SUITE_DIM: usize = 3;

/// Check families that can be switched off individually.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub identities: bool,
    pub kan: bool,
    pub fibration: bool,
    pub naturality: bool,
    pub equivalence: bool,
}

impl Default for Checks {
    fn default() -> Self {
        Self { identities: true, kan: true, fibration: true, naturality: true, equivalence: true }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub instance: InstanceSpec,
    pub dim: usize,
    pub through: usize,
    pub checks: Checks,
    pub budget: u64,
}

impl RunConfig {
    pub fn new(instance: InstanceSpec, dim: usize, through: usize) -> Result<Self> {
        let cfg = Self { instance, dim, through, checks: Checks::default(), budget: DEFAULT_BUDGET };
        cfg.check()?;
        Ok(cfg)
    }

    pub fn check(&self) -> Result<()> {
        if self.through + 1 > self.dim {
            return Err(Error::Precondition(format!(
                "homology through {} needs dimension at least {}, got {}",
                self.through,
                self.through + 1,
                self.dim
            )));
        }
        if self.budget == 0 {
            return Err(Error::Precondition("the enumeration budget must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub wbar: Vec<usize>,
    pub nerve: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub schema: u32,
    pub instance: String,
    pub dim: usize,
    pub through: usize,
    pub counts: Counts,
    pub clauses: Vec<Clause>,
    pub skipped: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertifyReport>,
    pub passed: bool,
}

impl TheoremReport {
    pub fn first_failure(&self) -> Option<&Clause> {
        self.clauses.iter().find(|c| !c.passed)
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let r: TheoremReport = serde_json::from_str(s)?;
        if r.schema != SCHEMA_VERSION {
            return Err(Error::Schema { expected: SCHEMA_VERSION, found: r.schema });
        }
        Ok(r)
    }

    /// A few lines for people.
    pub fn summary(&self) -> String {
        let mut out = format!("instance {} (N = {}, homology through {})\n", self.instance, self.dim, self.through);
        out.push_str(&format!("  W̄ counts {:?}\n  N counts {:?}\n", self.counts.wbar, self.counts.nerve));
        if let Some(t) = &self.counts.total {
            out.push_str(&format!("  W counts {t:?}\n"));
        }
        for c in &self.clauses {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            if c.detail.is_empty() {
                out.push_str(&format!("  {mark} {}\n", c.name));
            } else {
                out.push_str(&format!("  {mark} {}: {}\n", c.name, c.detail));
            }
        }
        for s in &self.skipped {
            out.push_str(&format!("  skip {s}\n"));
        }
        if let Some(cert) = &self.certificate {
            let hs: Vec<String> = cert.source_homology().iter().map(|h| format!("H{}={h}", h.k)).collect();
            out.push_str(&format!("  π₁ order {}, {}\n", cert.pi1.order, hs.join(", ")));
        }
        out.push_str(if self.passed { "PASS\n" } else { "FAIL\n" });
        out
    }
}

struct Clauses(Vec<Clause>);

impl Clauses {
    fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.0.push(Clause { name: name.into(), passed, detail: detail.into() });
    }

    fn push_failures(&mut self, name: &str, failures: &[String]) {
        let detail = failures.first().map(|f| format!("{} failure(s), first: {f}", failures.len())).unwrap_or_default();
        self.push(name, failures.is_empty(), detail);
    }
}

/// Runs every enabled check. Construction errors (including an exhausted
/// budget) are returned as `Err`; failed checks are recorded in the report.
pub fn verify_theorem(cfg: &RunConfig) -> Result<TheoremReport> {
    cfg.check()?;
    let (n, d) = (cfg.dim, cfg.through);
    let horns = n.min(3);
    let g = cfg.instance.build(n)?;
    let mut clauses = Clauses(Vec::new());
    let mut skipped = Vec::new();

    let cmp = induced_map_with_budget(&g, n, cfg.budget)?;
    let one_object = g.is_group();
    let total = if one_object { Some(build_w_total(&g, n)?) } else { None };
    if !one_object {
        skipped.push("total space W: defined here for one-object instances only".to_string());
    }

    if cfg.checks.identities {
        clauses.push_failures("groupoid.valid", &g.validate());
        let v = |s: &crate::simplicial::TruncatedSSet| s.validate().iter().map(ToString::to_string).collect::<Vec<_>>();
        clauses.push_failures("wbar.valid", &v(&cmp.wbar));
        clauses.push_failures("nerve.valid", &v(&cmp.nerve.sset));
        if let Some(w) = &total {
            clauses.push_failures("total.valid", &v(&w.total));
        }
        let rejected: u64 = cmp.nerve.stats.iter().map(|s| s.rejected).sum();
        clauses.push("nerve.no-rejected-candidates", rejected == 0, if rejected == 0 { String::new() } else { format!("{rejected} rejected") });
        let (_, rep) = wbar_via_representable(&g, n)?;
        let rep_ok = rep.validate().is_empty() && rep.is_isomorphism();
        clauses.push("wbar.representable-agrees", rep_ok, "");
    }

    if cfg.checks.naturality {
        let top = n.min(PHI_SUITE_DIM);
        clauses.push("phi.one-is-identity", phi_one_is_identity(), "");
        let mut functor = Vec::new();
        for k in 0..=top {
            functor.extend(phi_functor_failures(k)?);
        }
        clauses.push_failures("phi.functor", &functor);
        let mut iota = Vec::new();
        for m in 0..=n.min(4) {
            for i in 0..=m {
                for j in i..=m {
                    let expect: Vec<usize> = (0..j - i).collect();
                    let got = iota_vertex(m, i, j)?;
                    if got != expect || phi_vertex(i, j, (1 << i) | (1 << j)) != expect {
                        iota.push(format!("n={m}, ({i}, {j}) gives {got:?}"));
                    }
                }
            }
        }
        clauses.push_failures("phi.iota-vertices", &iota);
        let nat = check_naturality(top, top)?;
        clauses.push("phi.naturality", nat.passed(), format!("{} maps, {} chains", nat.maps_checked, nat.chains_checked));
        let uniq = uniqueness_by_exhaustion(top)?;
        clauses.push("phi.unique", uniq.passed(), format!("{} of {} families survive", uniq.survivors, uniq.families));
    }

    if cfg.checks.kan {
        for (name, s) in [("kan.wbar", &cmp.wbar), ("kan.nerve", &cmp.nerve.sset)] {
            let r = is_kan(s, horns)?;
            clauses.push(name, r.kan, format!("{} horns", r.horns_checked));
        }
        if let Some(w) = &total {
            let r = is_kan_fibration(&w.projection, horns)?;
            clauses.push("kan.total-to-wbar", r.kan, format!("{} horns", r.horns_checked));
        }
    }

    if cfg.checks.fibration {
        if let Some(w) = &total {
            let r = check_principal_fibration(w, horns, d.min(2))?;
            clauses.push_failures("total.principal-contractible", &r.failures);
        }
    }

    clauses.push_failures("comparison.simplicial", &cmp.map.validate().iter().map(ToString::to_string).collect::<Vec<_>>());
    if is_constant(&g) {
        clauses.push("constant.bijective", cmp.map.is_levelwise_bijective(), "");
        let classical = classical_nerve_map(&g, &cmp.wbar)?;
        clauses.push("constant.classical-nerve", classical.is_isomorphism() && cmp.map.is_isomorphism(), "");
        if one_object {
            let h = g.arrows(0);
            let expect: Vec<usize> = (0..=n as u32).map(|k| h.pow(k)).collect();
            let ok = cmp.wbar.counts() == expect.as_slice() && cmp.nerve.sset.counts() == expect.as_slice();
            clauses.push("constant.counts", ok, format!("{expect:?}"));
        }
    }

    let certificate = if cfg.checks.equivalence {
        let cert = certify_equivalence(&cmp.map, d)?;
        clauses.push("equivalence", cert.passed, cert.failure().unwrap_or_default());
        Some(cert)
    } else {
        None
    };

    let passed = clauses.0.iter().all(|c| c.passed);
    Ok(TheoremReport {
        schema: SCHEMA_VERSION,
        instance: cfg.instance.to_string(),
        dim: n,
        through: d,
        counts: Counts {
            wbar: cmp.wbar.counts().to_vec(),
            nerve: cmp.nerve.sset.counts().to_vec(),
            total: total.as_ref().map(|w| w.total.counts().to_vec()),
        },
        clauses: clauses.0,
        skipped,
        certificate,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclic_run_passes() {
        let cfg = RunConfig::new(InstanceSpec::parse_group_arg("cyclic:2").unwrap(), 3, 2).unwrap();
        let r = verify_theorem(&cfg).unwrap();
        assert!(r.passed, "{}", r.summary());
        assert_eq!(TheoremReport::from_json_str(&r.to_json_string()).unwrap(), r);
    }

    #[test]
    fn config_rejects_deep_homology() {
        assert!(RunConfig::new(InstanceSpec::parse_group_arg("c2").unwrap(), 3, 3).is_err());
    }
}
