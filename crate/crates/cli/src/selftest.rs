//! Randomized consistency checks run by `fiveclass selftest`.

use fiveclass_core::ahss::{self, TwistKind};
use fiveclass_core::algebra::{self, StandardForm};
use fiveclass_core::bordism::{BordismElement, Category, GroupKind};
use fiveclass_core::bundle::{self, BundleInput};
use fiveclass_core::sample;

use crate::{CliError, Report};

struct Check {
    name: &'static str,
    failures: Vec<String>,
    cases: usize,
}

impl Check {
    fn new(name: &'static str) -> Check {
        Check { name, failures: Vec::new(), cases: 0 }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 5 {
            self.failures.push(detail());
        }
    }
}

fn bundle_checks(seed: u64, count: usize) -> Vec<Check> {
    let mut rng = sample::rng(seed);
    let mut relations = Check::new("bundle invariants satisfy the parity relations");
    let mut stable = Check::new("stabilization adds one S2xS2 summand");
    let mut basis = Check::new("classification is independent of the basis");
    let mut sign = Check::new("classification is independent of the sign of c1");
    for _ in 0..count {
        let input = sample::random_bundle_input(&mut rng, 16);
        let u = sample::random_unimodular_matrix(&mut rng, input.form().rank(), 12);
        let describe = || format!("form of rank {}, ks {}, c1 = {}", input.form().rank(), input.ks(), input.c1());
        let cl = match bundle::classify(&input) {
            Ok(cl) => cl,
            Err(e) => {
                relations.record(false, || format!("{}: {e}", describe()));
                continue;
            }
        };
        relations.record(
            algebra::check_relations(&cl.invariants)
                && StandardForm::from_invariants(&cl.invariants).ok().as_ref() == Some(&cl.homeo_form),
            describe,
        );
        let st = bundle::classify(&input.stabilize());
        stable.record(
            st.as_ref()
                .is_ok_and(|s| s.r == cl.r + 2 && s.k == cl.k + 1 && (s.w2type, s.q, s.s) == (cl.w2type, cl.q, cl.s)),
            describe,
        );
        let moved = input
            .form()
            .change_basis(&u)
            .ok()
            .and_then(|f| BundleInput::new(f, input.ks(), input.c1().change_basis(&u)).ok())
            .and_then(|m| bundle::classify(&m).ok());
        basis.record(moved.as_ref() == Some(&cl), describe);
        sign.record(bundle::classify(&input.negate()).ok().as_ref() == Some(&cl), describe);
    }
    vec![relations, stable, basis, sign]
}

fn bordism_checks() -> Check {
    let mut check = Check::new("bordism group axioms and forgetful map");
    for kind in GroupKind::ALL {
        let all = BordismElement::all(kind);
        let zero = BordismElement::zero(kind);
        for a in &all {
            check.record(a.add(&a.neg()).ok().as_ref() == Some(&zero), || format!("{a} + (-{a}) != 0"));
            check.record(a.times(i64::from(kind.order())) == zero, || format!("order of {a}"));
            if kind.category == Category::Smooth {
                for b in &all {
                    let lhs = a.add(b).ok().and_then(|s| s.forget_smooth().ok());
                    let rhs = a.forget_smooth().and_then(|x| x.add(&b.forget_smooth()?)).ok();
                    check.record(lhs.is_some() && lhs == rhs, || format!("forget({a} + {b})"));
                }
            }
        }
    }
    check
}

fn ahss_checks() -> Check {
    let mut check = Check::new("spectral sequence orders match the closed forms");
    for twist in TwistKind::ALL {
        let first = if twist == TwistKind::Gamma { 1 } else { 0 };
        for r in first..=ahss::MAX_ORDER_R {
            let res = ahss::omega5_order(r, twist);
            check.record(res.as_ref().is_ok_and(|o| o.order == o.closed_form_order), || match &res {
                Ok(o) => format!("r = {r}, {twist}: {} vs {}", o.order, o.closed_form_order),
                Err(e) => format!("r = {r}, {twist}: {e}"),
            });
        }
    }
    check
}

fn enumeration_checks() -> Check {
    let mut check = Check::new("standard forms are distinct and round-trip");
    for category in [Category::Smooth, Category::Top] {
        let forms = algebra::enumerate(8, category);
        for (i, f) in forms.iter().enumerate() {
            let back = algebra::normalize(&f.to_expression()).ok();
            check.record(back.as_ref() == Some(f), || format!("{f} normalizes elsewhere"));
            check.record(forms[i + 1..].iter().all(|g| g.invariants() != f.invariants()), || format!("{f} duplicated"));
        }
    }
    check
}

pub fn run(seed: u64, count: usize) -> Result<Report, CliError> {
    let mut checks = bundle_checks(seed, count);
    checks.push(bordism_checks());
    checks.push(ahss_checks());
    checks.push(enumeration_checks());

    let mut lines = vec![format!("seed {seed:#x}, {count} random bundles")];
    let mut failed = 0;
    for c in &checks {
        let status = if c.failures.is_empty() { "ok  " } else { "FAIL" };
        lines.push(format!("[{status}] {} ({} cases)", c.name, c.cases));
        for f in &c.failures {
            lines.push(format!("         {f}"));
        }
        failed += usize::from(!c.failures.is_empty());
    }
    let text = lines.join("\n");
    if failed > 0 {
        return Err(CliError::Internal(format!("{failed} selftest check(s) failed\n{text}")));
    }
    Ok(Report::text(text))
}
