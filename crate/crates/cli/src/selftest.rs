//! Golden checks against the bundled eight-tank instance.

use stackgame_core::oracles::{brute_force_attacker, SimplexGrid};
use stackgame_core::rational::{int, parse_rational};
use stackgame_core::*;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn q(s: &str) -> Rational {
    parse_rational(s).expect("golden literal")
}

fn qs(items: &[&str]) -> Vec<Rational> {
    items.iter().map(|s| q(s)).collect()
}

fn show(values: &[Rational]) -> String {
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn compare(name: &'static str, got: Result<String>, expected: String) -> Check {
    match got {
        Ok(got) if got == expected => Check { name, passed: true, detail: got },
        Ok(got) => Check { name, passed: false, detail: format!("expected {expected}, got {got}") },
        Err(e) => Check { name, passed: false, detail: format!("error: {e}") },
    }
}

fn vertex(k: usize) -> AttackVector {
    AttackVector::vertex(8, k - 1).expect("eight assets")
}

/// Runs every golden check. `grid_cap` bounds the grid scan in the last check.
pub fn run_checks(grid_cap: u128) -> Vec<Check> {
    let g = GameInstance::eight_tank_example();
    let mut checks = Vec::new();

    checks.push(compare(
        "feasibility",
        Ok({
            let r = check_feasibility(&g);
            format!("feasible={} sums=({}, {})", r.feasible, r.sum_condition_one, r.sum_condition_two)
        }),
        "feasible=true sums=(1, 0)".into(),
    ));
    checks.push(compare(
        "anchor solve",
        solve_anchor(g.prefix()).map(|(r, c)| format!("({r}, {c})")),
        "(4, -5)".into(),
    ));
    checks.push(compare(
        "anchor identity",
        Ok(anchor_omega_identity(&g).to_string()),
        "-1".into(),
    ));
    checks.push(compare(
        "family at 0",
        defense_family_at(&g, &int(0)).map(|d| show(d.entries())),
        show(&qs(&["1/3", "1/5", "1/6", "1/7", "1/12", "1/20", "1/42", "0"])),
    ));
    checks.push(compare(
        "family at 1",
        defense_family_at(&g, &int(1)).map(|d| show(d.entries())),
        show(&qs(&["0", "0", "0", "0", "0", "0", "0", "1"])),
    ));
    checks.push(compare(
        "anchor interval",
        feasible_anchor_interval(&g).map(|i| format!("[{}, {}]", i.lo, i.hi)),
        "[0, 1]".into(),
    ));
    for (k, regime, pb, pr) in [(8, "positive", "3", "5"), (5, "negative", "10/3", "4"), (7, "negative", "-39/14", "4")] {
        let name = match k {
            8 => "solve e8",
            5 => "solve e5",
            _ => "solve e7",
        };
        checks.push(compare(
            name,
            solve(&g, &vertex(k)).map(|r| format!("{} {} {}", r.regime, r.defender_payoff, r.attacker_payoff)),
            format!("{regime} {pb} {pr}"),
        ));
    }
    let mut slice = vec![int(0); 8];
    slice[4] = q("9/10");
    slice[7] = q("1/10");
    checks.push(compare(
        "solve on zero slope",
        AttackVector::new(slice).and_then(|a| solve(&g, &a)).map(|r| {
            format!("{} {} {} {}", r.regime, r.optimal_defense.is_indeterminate(), r.defender_payoff, r.attacker_payoff)
        }),
        "zero true 3 4".into(),
    ));
    checks.push(compare(
        "deltas at e8",
        compute_deltas(&g, &vertex(8)).map(|d| format!("{} {}", &d.delta1 - &d.delta3, d.delta2)),
        "0 3".into(),
    ));
    let coefficients = defender_payoff_coefficients(&g);
    checks.push(compare(
        "coefficients c1",
        coefficients.clone().map(|c| show(&c.high)),
        show(&qs(&["-2", "1", "-4", "-2", "3", "-1", "-3", "3"])),
    ));
    checks.push(compare(
        "coefficients c2",
        coefficients.map(|c| show(&c.low)),
        show(&qs(&["4/3", "2", "-11/6", "-1", "10/3", "-3/4", "-39/14", "0"])),
    ));

    let problem = build_hyperplane_problem(&g);
    checks.push(compare(
        "hyperplane",
        problem.clone().map(|p| format!("{} = {}", show(&p.alpha), p.rhs)),
        format!("{} = 3", show(&qs(&["19/3", "4", "31/6", "4", "10/3", "13/4", "45/14"]))),
    ));
    checks.push(compare(
        "objective",
        problem.clone().map(|p| show(&p.objective)),
        show(&qs(&["4/3", "2", "-11/6", "-1", "10/3", "-3/4", "-39/14"])),
    ));
    checks.push(compare(
        "payoff ratios",
        problem.clone().and_then(|p| payoff_ratios(&p)).map(|t| {
            let r: Vec<Rational> = t.ratios.iter().flatten().cloned().collect();
            format!("{} feasible={}", show(&r), t.feasible_indices.len())
        }),
        format!("{} feasible=7", show(&qs(&["12/19", "3/2", "-33/31", "-3/4", "3", "-9/13", "-13/5"]))),
    ));
    checks.push(compare(
        "constrained extrema",
        problem.clone().and_then(|p| constrained_extrema(&p)).map(|e| {
            format!(
                "min {} at {} max {} at {}",
                e.min_value,
                show(e.min_attack.entries()),
                e.max_value,
                show(e.max_attack.entries())
            )
        }),
        format!(
            "min -13/5 at {} max 3 at {}",
            show(&qs(&["0", "0", "0", "0", "0", "0", "14/15", "1/15"])),
            show(&qs(&["0", "0", "0", "0", "9/10", "0", "0", "1/10"]))
        ),
    ));
    checks.push(compare(
        "threshold",
        problem.and_then(|p| Ok((exceeds_threshold(&p, &int(5))?, exceeds_threshold(&p, &int(2))?))).map(|(a, b)| format!("{a} {b}")),
        "false true".into(),
    ));

    let region = PayoffRegion::new(&g);
    checks.push(compare(
        "vertex images",
        region.clone().map(|r| {
            let parts: Vec<String> = r.vertices.iter().map(|p| format!("({}, {})", p.x, p.y)).collect();
            parts.join(" ")
        }),
        "(-2, 4/3) (1, 2) (-4, -11/6) (-2, -1) (3, 10/3) (-1, -3/4) (-3, -39/14) (3, 0)".into(),
    ));
    checks.push(compare(
        "pareto frontier",
        region.map(|r| {
            let parts: Vec<String> = r.pareto.iter().map(|p| format!("{} ({}, {})", r.label_of(p), p.x, p.y)).collect();
            parts.join(" ")
        }),
        "T5 (3, 10/3)".into(),
    ));

    checks.push(compare(
        "indifference",
        (|| {
            let mut out = Vec::new();
            for d in ["0", "1/4", "1/2", "3/4", "1"] {
                let v = defense_family_at(&g, &q(d))?;
                let gap = indifference_gap(&g, &v)?;
                let pay = g.attacker_payoff(&v, &AttackVector::uniform(8)?)?;
                out.push(format!("{pay}|{gap}"));
            }
            Ok(out.join(" "))
        })(),
        "4|0 17/4|0 9/2|0 19/4|0 5|0".into(),
    ));

    checks.push(compare(
        "grid best response",
        (|| {
            let v = defense_family_at(&g, &q("1/2"))?;
            let (best, _) = brute_force_attacker(&g, &v)?;
            let mut beaten = 0usize;
            for point in SimplexGrid::with_cap(8, 4, grid_cap)? {
                if g.attacker_payoff(&v, &AttackVector::new(point)?)? > best {
                    beaten += 1;
                }
            }
            Ok(format!("best {best} beaten {beaten}"))
        })(),
        "best 9/2 beaten 0".into(),
    ));

    checks
}
