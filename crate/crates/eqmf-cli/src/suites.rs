//! The verification suites behind `eqmf verify`.

use serde_json::{json, Value};

use eqmf::extremal::{
    coeff_formula, extremal_expansion, extremal_mdo, formula_ids, sign_regression, verify_e_sets,
};
use eqmf::identities::{
    positivity_divisibility, ramanujan_checks, verify_divisor_identity, DivisorFormId,
};
use eqmf::report::Check;

/// Ramanujan identities, the identity chains of the explicit examples,
/// their positivity/divisibility certificates, and the empirical
/// integrality of the two divisor/tau forms.
pub fn identities_suite(order: usize) -> Vec<Check> {
    let order = order.max(8);
    let mut checks = ramanujan_checks(order);
    for id in DivisorFormId::all() {
        let report = verify_divisor_identity(*id, order);
        checks.push(Check::from_bool(
            format!("{id} identity chain"),
            report.agree(),
            match report.first_mismatch {
                None => format!(
                    "{} representations agree to order {order}",
                    report.representations.len()
                ),
                Some((name, at)) => format!("mismatch against {name} at q^{at}"),
            },
        ));
    }
    for (id, divisor) in [(DivisorFormId::F6D3, 6u64), (DivisorFormId::F8D2, 30)] {
        let certs = positivity_divisibility(id, order as u64);
        checks.push(Check::from_bool(
            format!("{id} positivity and divisibility"),
            certs.is_ok(),
            match certs {
                Ok(list) => format!(
                    "{} certificates, every summand divisible by {divisor}, all totals positive",
                    list.len()
                ),
                Err(e) => e.to_string(),
            },
        ));
    }
    for id in [DivisorFormId::F12D1, DivisorFormId::F14D1] {
        let series = eqmf::identities::divisor_form(id, order + 1);
        match series.first_non_integral() {
            None => checks.push(Check::empirical(
                format!("{id} integral"),
                format!("coefficients integral to order {order}; proof cited, not reproduced"),
            )),
            Some((exp, value)) => checks.push(Check::fail(
                format!("{id} integral"),
                format!("coefficient of q^{exp} is {value}"),
            )),
        }
    }
    checks
}

/// Path-sum oracle against the forward recurrence, the closed forms
/// against the expansions, and the depth-2 sign regression.
pub fn oracles_suite() -> Vec<Check> {
    let mut checks = Vec::new();
    for (depth, weight, lambda) in [
        (1u32, 6u64, 1usize),
        (1, 12, 2),
        (2, 4, 1),
        (2, 8, 2),
        (3, 6, 2),
        (4, 12, 5),
    ] {
        let op = extremal_mdo(depth, weight).expect("base-class operator");
        let sol = op.frobenius_solve(lambda, 11).expect("simple exponent");
        let bad = (1..=10).find(|&n| {
            op.frobenius_path_sum(lambda, n).expect("n <= 12") != sol.series.coeff(lambda + n)
        });
        checks.push(Check::from_bool(
            format!("path-sum oracle: depth {depth} weight {weight}"),
            bad.is_none(),
            match bad {
                None => "path sum equals forward recurrence for n <= 10".to_string(),
                Some(n) => format!("first disagreement at n = {n}"),
            },
        ));
    }
    for &id in formula_ids() {
        let Some(reference) = id.reference() else {
            continue;
        };
        let mut witness = None;
        for k in 1..=4u64 {
            let weight = reference.modulus * k + reference.residue;
            let Ok(series) = extremal_expansion(reference.depth, weight, reference.index + 1)
            else {
                continue; // nonexistent low-weight pairs
            };
            let lead = series.leading_exponent().expect("normalized expansion");
            let expansion = series.coeff(lead + reference.index);
            let formula = coeff_formula(id, k);
            if expansion != formula {
                witness = Some((k, formula, expansion));
                break;
            }
        }
        checks.push(Check::from_bool(
            format!("closed form {id} matches expansion"),
            witness.is_none(),
            match witness {
                None => "agrees for k <= 4".to_string(),
                Some((k, f, e)) => format!("k = {k}: formula {f}, expansion {e}"),
            },
        ));
    }
    let sign = sign_regression();
    checks.push(Check::from_bool(
        "depth-2 a(1) printed sign is inconsistent",
        sign.printed_sign_inconsistent(),
        format!(
            "printed {} vs matrix {}, recurrence {}, divisor oracle {}",
            sign.printed_value,
            sign.corrected_value,
            sign.recurrence_value,
            sign.divisor_oracle_value
        ),
    ));
    checks
}

/// Candidate sets and membership verification for every depth: the
/// checks, the sets as JSON, and the sets as display tables.
pub fn esets_suite(order: usize) -> (Vec<Check>, Value, String) {
    let report = verify_e_sets(order);
    let sets = json!({
        "e1_superset": report.e1_superset,
        "e1_known_members": report.e1_known_members,
        "e2": report.e2,
        "e3": report.e3,
        "e4": report.e4,
        "order": report.order,
    });
    let fmt = |set: &std::collections::BTreeSet<u64>| {
        let items: Vec<String> = set.iter().map(u64::to_string).collect();
        format!("{{{}}}", items.join(", "))
    };
    let tables = format!(
        "  E1 superset ({} weights): {}\n  E1 known members (empirical): {:?}\n  E2 = {}\n  E3 = {}\n  E4 = {}\n",
        report.e1_superset.len(),
        fmt(&report.e1_superset),
        report.e1_known_members,
        fmt(&report.e2),
        fmt(&report.e3),
        fmt(&report.e4),
    );
    (report.checks, sets, tables)
}
