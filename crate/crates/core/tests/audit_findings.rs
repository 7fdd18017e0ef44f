use vogan::audit::{audit_family, AuditOptions};
use vogan::BranchStats;
use vogan::Family;

fn mismatched(stats: &[BranchStats]) -> Vec<&str> {
    stats.iter().filter(|s| s.mismatched > 0).map(|s| s.label.as_str()).collect()
}

fn find<'a>(stats: &'a [BranchStats], label: &str) -> &'a BranchStats {
    stats.iter().find(|s| s.label == label).unwrap()
}

#[test]
fn published_mismatch_pattern() {
    let opts = AuditOptions::default();
    let a = audit_family::<i64>(Family::A, 10, &opts).unwrap();
    let b = audit_family::<i64>(Family::B, 8, &opts).unwrap();
    let c = audit_family::<i64>(Family::C, 8, &opts).unwrap();
    let d = audit_family::<i64>(Family::D, 8, &opts).unwrap();
    for report in [&a, &b, &c, &d] {
        assert_eq!(report.mid.mismatched, 0);
        assert!(report.xi.iter().all(|s| s.mismatched <= s.tested));
    }

    assert!(mismatched(&a.xi).is_empty());
    assert_eq!(mismatched(&b.xi), ["B-at-l"]);
    assert_eq!(
        mismatched(&c.xi),
        ["C-interior-l-painted", "C-at-l", "C-at-l-1-l-painted", "C-at-l-1-l-unpainted"]
    );
    assert_eq!(mismatched(&d.xi), ["D-interior-fork-odd", "D-at-l-2-fork-odd", "D-fork-one"]);

    assert_eq!(
        mismatched(&c.xi_sum_difference),
        ["C-at-l", "C-at-l-1-l-painted", "C-at-l-1-l-unpainted"]
    );
    assert_eq!(mismatched(&d.xi_sum_difference), ["D-interior-fork-odd"]);

    let fit = find(&c.xi_sum_difference, "C-at-l-1-l-unpainted").offset_fit.unwrap();
    assert_eq!((fit.c, fit.exact), (-4, true));
}

#[test]
fn gamma_and_tau_mismatch_pattern() {
    let opts = AuditOptions::default();
    let summary: Vec<(Family, Vec<String>, Vec<String>)> = Family::ALL
        .iter()
        .map(|&f| {
            let r = audit_family::<i64>(f, 8, &opts).unwrap();
            let own = |s: &[BranchStats]| mismatched(s).into_iter().map(String::from).collect();
            (f, own(&r.gamma), own(&r.tau))
        })
        .collect();
    for (family, gamma, tau) in &summary {
        match family {
            Family::A | Family::B => assert!(gamma.is_empty() && tau.is_empty(), "{family}"),
            Family::C => {
                assert!(gamma.is_empty());
                assert_eq!(tau, &["C-at-l-1-l-painted"]);
            }
            Family::D => {
                assert_eq!(gamma, &["gamma-D-interior", "gamma-D-at-fork"]);
                assert_eq!(tau, &["D-interior-fork-odd", "D-fork-both"]);
            }
        }
    }
    let c = audit_family::<i64>(Family::C, 8, &opts).unwrap();
    let fit = find(&c.tau, "C-at-l-1-l-painted").offset_fit.unwrap();
    assert_eq!((fit.c, fit.exact), (-1, true));
}
