//! End-to-end acceptance run. Prints one line per criterion and fails if
//! any criterion fails. Time limits are fixed below.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hcnerve::comparison::{
    check_naturality, induced_map, iota_vertex, phi_one_is_identity, uniqueness_by_exhaustion, Comparison,
};
use hcnerve::groups::SimplicialGroupoid;
use hcnerve::hc::wbar_via_representable;
use hcnerve::instance::{standard_instances, StandardInstance};
use hcnerve::invariants::certify_equivalence;
use hcnerve::simplicial::{is_kan, is_kan_fibration};
use hcnerve::wbar::{build_w_total, check_principal_fibration, classical_nerve_map, TotalSpace};

/// Per-instance limit for building and validating every side.
const BUILD_LIMIT: Duration = Duration::from_secs(120);
/// Per-instance limit for one `verify-theorem` run of the binary.
const CLI_LIMIT: Duration = Duration::from_secs(600);
/// Horn dimensions checked for the Kan conditions.
const HORNS: usize = 3;

struct Built {
    inst: StandardInstance,
    g: SimplicialGroupoid,
    cmp: Comparison,
    total: Option<TotalSpace>,
    elapsed: Duration,
}

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn build_all() -> Result<Vec<Built>, String> {
    standard_instances()
        .into_iter()
        .map(|inst| {
            let start = Instant::now();
            let g = inst.spec.build(inst.dim).map_err(|e| format!("{}: {e}", inst.name))?;
            let cmp = induced_map(&g, inst.dim).map_err(|e| format!("{}: {e}", inst.name))?;
            let total = if g.is_group() {
                Some(build_w_total(&g, inst.dim).map_err(|e| format!("{}: {e}", inst.name))?)
            } else {
                None
            };
            Ok(Built { inst, g, cmp, total, elapsed: start.elapsed() })
        })
        .collect()
}

fn validity(built: &[Built]) -> Outcome {
    let mut worst = Duration::ZERO;
    for b in built {
        let start = Instant::now();
        let name = b.inst.name;
        ensure(b.cmp.wbar.validate().is_empty(), || format!("{name}: W̄ fails validation"))?;
        ensure(b.cmp.nerve.sset.validate().is_empty(), || format!("{name}: N fails validation"))?;
        if let Some(w) = &b.total {
            ensure(w.total.validate().is_empty(), || format!("{name}: W fails validation"))?;
        }
        let t = b.elapsed + start.elapsed();
        ensure(t < BUILD_LIMIT, || format!("{name}: took {t:?}"))?;
        worst = worst.max(t);
    }
    Ok(format!("{} instances, slowest {:.2}s (limit {}s); W skipped for the groupoid", built.len(), worst.as_secs_f64(), BUILD_LIMIT.as_secs()))
}

fn engines_agree(built: &[Built]) -> Outcome {
    for b in built {
        let (rep, map) = wbar_via_representable(&b.g, b.inst.dim).map_err(|e| e.to_string())?;
        ensure(rep.validate().is_empty() && map.validate().is_empty(), || format!("{}: representable W̄ invalid", b.inst.name))?;
        ensure(map.is_isomorphism(), || format!("{}: engines disagree", b.inst.name))?;
    }
    Ok("levelwise bijection on every instance".into())
}

fn phi_checks() -> Outcome {
    ensure(phi_one_is_identity(), || "φ₁ is not the identity".into())?;
    for n in 0..=4 {
        for i in 0..=n {
            for j in i..=n {
                let v = iota_vertex(n, i, j).map_err(|e| e.to_string())?;
                ensure(v == (0..j - i).collect::<Vec<_>>(), || format!("ι-vertex ({n}, {i}, {j}) = {v:?}"))?;
            }
        }
    }
    let nat = check_naturality(3, 3).map_err(|e| e.to_string())?;
    ensure(nat.passed(), || format!("naturality fails: {:?}", nat.failures.first()))?;
    let uniq = uniqueness_by_exhaustion(3).map_err(|e| e.to_string())?;
    ensure(uniq.passed(), || format!("{} survivors", uniq.survivors))?;
    Ok(format!(
        "naturality on {} maps, uniqueness {} of {} families",
        nat.maps_checked, uniq.survivors, uniq.families
    ))
}

fn kan(built: &[Built]) -> Outcome {
    let mut horns = 0;
    for b in built {
        for (side, s) in [("W̄", &b.cmp.wbar), ("N", &b.cmp.nerve.sset)] {
            let r = is_kan(s, HORNS).map_err(|e| e.to_string())?;
            ensure(r.kan, || format!("{}: {side} has an unfillable horn {:?}", b.inst.name, r.first_failure))?;
            horns += r.horns_checked;
        }
        if let Some(w) = &b.total {
            let r = is_kan_fibration(&w.projection, HORNS).map_err(|e| e.to_string())?;
            ensure(r.kan, || format!("{}: W → W̄ fails to lift {:?}", b.inst.name, r.first_failure))?;
            horns += r.horns_checked;
        }
    }
    Ok(format!("{horns} horns up to dimension {HORNS}"))
}

fn principal(built: &[Built]) -> Outcome {
    let mut count = 0;
    for b in built {
        let Some(w) = &b.total else { continue };
        let r = check_principal_fibration(w, HORNS, 2).map_err(|e| e.to_string())?;
        ensure(r.free && r.quotient_is_base, || format!("{}: {:?}", b.inst.name, r.failures))?;
        ensure(r.components == 1 && r.pi1_order == Some(1), || format!("{}: π₀ {} π₁ {:?}", b.inst.name, r.components, r.pi1_order))?;
        ensure(r.reduced_homology_vanishes, || format!("{}: reduced homology", b.inst.name))?;
        count += 1;
    }
    Ok(format!("{count} one-object instances: free, W/G = W̄, π₀ = π₁ = 1, reduced H_≤2 = 0"))
}

fn equivalence(built: &[Built]) -> Outcome {
    let mut orders = Vec::new();
    for b in built {
        let r = certify_equivalence(&b.cmp.map, b.inst.through).map_err(|e| e.to_string())?;
        ensure(r.passed, || format!("{}: {}", b.inst.name, r.failure().unwrap_or_default()))?;
        ensure(r.homology.len() == b.inst.through + 1, || format!("{}: homology depth", b.inst.name))?;
        if let Some(h) = b.inst.spec.constant_group() {
            ensure(r.pi1.order == h.order(), || format!("{}: π₁ order {}", b.inst.name, r.pi1.order))?;
            orders.push(r.pi1.order);
            if h.order() == 2 {
                let want: Vec<(usize, Vec<u64>)> = vec![(1, vec![]), (0, vec![2]), (0, vec![]), (0, vec![2])];
                for side in [r.source_homology(), r.target_homology()] {
                    let got: Vec<(usize, Vec<u64>)> = side.iter().map(|g| (g.rank, g.torsion.clone())).collect();
                    ensure(got == want, || format!("C2 homology {got:?}"))?;
                }
            }
        }
    }
    ensure(orders == [2, 3, 6], || format!("π₁ orders {orders:?}"))?;
    Ok(format!("π₁ orders {orders:?}; H(C2) = Z, Z/2, 0, Z/2 on both sides"))
}

fn constant(built: &[Built]) -> Outcome {
    let mut count = 0;
    for b in built {
        let Some(h) = b.inst.spec.constant_group() else { continue };
        let name = b.inst.name;
        ensure(b.cmp.map.is_levelwise_bijective(), || format!("{name}: not bijective"))?;
        let classical = classical_nerve_map(&b.g, &b.cmp.wbar).map_err(|e| e.to_string())?;
        ensure(classical.is_isomorphism(), || format!("{name}: W̄ is not the classical nerve"))?;
        let want: Vec<usize> = (0..=b.inst.dim as u32).map(|n| h.order().pow(n)).collect();
        ensure(b.cmp.wbar.counts() == want.as_slice(), || format!("{name}: W̄ counts {:?}", b.cmp.wbar.counts()))?;
        ensure(b.cmp.nerve.sset.counts() == want.as_slice(), || format!("{name}: N counts {:?}", b.cmp.nerve.sset.counts()))?;
        count += 1;
    }
    Ok(format!("{count} constant groups: bijective, classical nerve, |H|ⁿ simplices"))
}

fn cli_runs() -> Outcome {
    let mut worst = Duration::ZERO;
    for inst in standard_instances() {
        let flag = if inst.spec.is_group() == Some(false) { "--groupoid" } else { "--group" };
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_hcnerve"))
            .args(["verify-theorem", flag, &inst.spec.to_string()])
            .args(["--dim", &inst.dim.to_string(), "--through", &inst.through.to_string()])
            .output()
            .map_err(|e| e.to_string())?;
        let t = start.elapsed();
        ensure(out.status.code() == Some(0), || {
            format!("{}: exit {:?}\n{}", inst.name, out.status.code(), String::from_utf8_lossy(&out.stdout))
        })?;
        ensure(t < CLI_LIMIT, || format!("{}: took {t:?}", inst.name))?;
        worst = worst.max(t);
    }
    Ok(format!("exit 0 everywhere, slowest {:.2}s (limit {}s)", worst.as_secs_f64(), CLI_LIMIT.as_secs()))
}

fn main() -> ExitCode {
    let built = match build_all() {
        Ok(b) => b,
        Err(e) => {
            println!("acceptance: construction failed: {e}");
            return ExitCode::FAILURE;
        }
    };
    let criteria: [Criterion; 8] = [
        ("W̄, W and N satisfy the simplicial identities", Box::new(|| validity(&built))),
        ("tuple and representable W̄ agree", Box::new(|| engines_agree(&built))),
        ("φ: unit, ι-vertices, naturality, uniqueness", Box::new(phi_checks)),
        ("Kan conditions and the lifting property of W → W̄", Box::new(|| kan(&built))),
        ("W → W̄ is principal with contractible total space", Box::new(|| principal(&built))),
        ("the comparison is certified an equivalence", Box::new(|| equivalence(&built))),
        ("constant groups: isomorphism onto the classical nerve", Box::new(|| constant(&built))),
        ("verify-theorem exits 0 on every instance", Box::new(cli_runs)),
    ];
    let mut failed = 0;
    for (k, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {title} [{detail}] ({secs:.2}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {title}: {why} ({secs:.2}s)", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
