//! JSON report documents. Field order follows struct order, so output is
//! stable byte for byte.

use serde::Serialize;
use stackgame_core::rational::to_f64;
use stackgame_core::{
    AnchorInterval, AttackVector, ConstrainedExtrema, FeasibilityReport, GameInstance, HyperplaneProblem, PayoffRegion, PlanarPoint,
    RatioTable, Rational, SolveReport,
};

/// An exact value with a decimal rendering beside it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Num {
    pub exact: String,
    pub decimal: f64,
}

impl From<&Rational> for Num {
    fn from(r: &Rational) -> Self {
        Num { exact: r.to_string(), decimal: to_f64(r) }
    }
}

fn nums(values: &[Rational]) -> Vec<Num> {
    values.iter().map(Num::from).collect()
}

#[derive(Debug, Serialize)]
pub struct AssetCheckDoc {
    pub index: usize,
    pub name: String,
    pub omega_attacker_negative: bool,
    pub lower: Num,
    pub upper: Num,
    pub passed: bool,
}

#[derive(Debug, Serialize)]
pub struct FeasibilityDoc {
    pub feasible: bool,
    pub anchor: String,
    pub anchor_cost_attacker: Num,
    pub per_asset_checks: Vec<AssetCheckDoc>,
    pub sum_condition_one: Num,
    pub sum_condition_one_holds: bool,
    pub sum_condition_two: Num,
    pub sum_condition_two_holds: bool,
    pub failed_conditions: Vec<String>,
}

impl FeasibilityDoc {
    pub fn new(instance: &GameInstance, report: &FeasibilityReport) -> Self {
        let anchor_cost = &instance.anchor().cost_attacker;
        let mut failed = Vec::new();
        for check in report.failed_assets() {
            let name = &instance.assets()[check.index].name;
            failed.push(format!(
                "interval for {name}: anchor attacker cost {anchor_cost} not in [{}, {}]",
                check.lower, check.upper
            ));
        }
        if !report.sum_one_holds() {
            failed.push(format!("sum condition one is {}, expected 1", report.sum_condition_one));
        }
        if !report.sum_two_holds() {
            failed.push(format!("sum condition two is {}, expected 0", report.sum_condition_two));
        }
        FeasibilityDoc {
            feasible: report.feasible,
            anchor: instance.anchor().name.clone(),
            anchor_cost_attacker: anchor_cost.into(),
            per_asset_checks: report
                .per_asset_checks
                .iter()
                .map(|c| AssetCheckDoc {
                    index: c.index + 1,
                    name: instance.assets()[c.index].name.clone(),
                    omega_attacker_negative: c.omega_negative,
                    lower: (&c.lower).into(),
                    upper: (&c.upper).into(),
                    passed: c.passed,
                })
                .collect(),
            sum_condition_one: (&report.sum_condition_one).into(),
            sum_condition_one_holds: report.sum_one_holds(),
            sum_condition_two: (&report.sum_condition_two).into(),
            sum_condition_two_holds: report.sum_two_holds(),
            failed_conditions: failed,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct IntervalDoc {
    pub lo: Num,
    pub hi: Num,
}

impl From<&AnchorInterval> for IntervalDoc {
    fn from(i: &AnchorInterval) -> Self {
        IntervalDoc { lo: (&i.lo).into(), hi: (&i.hi).into() }
    }
}

#[derive(Debug, Serialize)]
pub struct DeltaDoc {
    pub delta1: Num,
    pub delta2: Num,
    pub delta3: Num,
}

#[derive(Debug, Serialize)]
pub struct SolveDoc {
    pub assets: Vec<String>,
    pub attack: Vec<Num>,
    pub deltas: DeltaDoc,
    pub regime: String,
    pub anchor_interval: IntervalDoc,
    pub indeterminate: bool,
    pub anchor_probability: Num,
    pub defense: Vec<Num>,
    pub defender_payoff: Num,
    pub attacker_payoff: Num,
    /// One-based indices of the attacker's best responses to `defense`.
    pub attacker_best_responses: Vec<usize>,
}

impl SolveDoc {
    pub fn new(
        instance: &GameInstance,
        attack: &AttackVector,
        interval: &AnchorInterval,
        report: &SolveReport,
        best_responses: &[usize],
    ) -> Self {
        SolveDoc {
            assets: instance.assets().iter().map(|a| a.name.clone()).collect(),
            attack: nums(attack.entries()),
            deltas: DeltaDoc {
                delta1: (&report.deltas.delta1).into(),
                delta2: (&report.deltas.delta2).into(),
                delta3: (&report.deltas.delta3).into(),
            },
            regime: report.regime.to_string(),
            anchor_interval: interval.into(),
            indeterminate: report.optimal_defense.is_indeterminate(),
            anchor_probability: report.optimal_defense.anchor_probability().into(),
            defense: nums(report.optimal_defense.defense().entries()),
            defender_payoff: (&report.defender_payoff).into(),
            attacker_payoff: (&report.attacker_payoff).into(),
            attacker_best_responses: best_responses.iter().map(|i| i + 1).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ExtremumDoc {
    pub value: Num,
    pub attack: Vec<Num>,
}

#[derive(Debug, Serialize)]
pub struct BoundsDoc {
    pub alpha: Vec<Num>,
    pub rhs: Num,
    pub objective: Vec<Num>,
    /// `null` where the constraint coefficient is zero.
    pub ratios: Vec<Option<Num>>,
    pub feasible_indices: Vec<usize>,
    pub min: ExtremumDoc,
    pub max: ExtremumDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exceeds_threshold: Option<ThresholdDoc>,
}

#[derive(Debug, Serialize)]
pub struct ThresholdDoc {
    pub threshold: Num,
    pub exceeded: bool,
}

impl BoundsDoc {
    pub fn new(problem: &HyperplaneProblem, ratios: &RatioTable, extrema: &ConstrainedExtrema) -> Self {
        BoundsDoc {
            alpha: nums(&problem.alpha),
            rhs: (&problem.rhs).into(),
            objective: nums(&problem.objective),
            ratios: ratios.ratios.iter().map(|r| r.as_ref().map(Num::from)).collect(),
            feasible_indices: ratios.feasible_indices.iter().map(|i| i + 1).collect(),
            min: ExtremumDoc { value: (&extrema.min_value).into(), attack: nums(extrema.min_attack.entries()) },
            max: ExtremumDoc { value: (&extrema.max_value).into(), attack: nums(extrema.max_attack.entries()) },
            exceeds_threshold: None,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PointDoc {
    pub label: String,
    pub x: Num,
    pub y: Num,
}

#[derive(Debug, Serialize)]
pub struct RegionDoc {
    pub vertices: Vec<PointDoc>,
    pub hull: Vec<PointDoc>,
    pub pareto: Vec<PointDoc>,
}

impl RegionDoc {
    pub fn new(region: &PayoffRegion) -> Self {
        let points = |ps: &[PlanarPoint]| {
            ps.iter()
                .map(|p| PointDoc { label: region.label_of(p), x: (&p.x).into(), y: (&p.y).into() })
                .collect()
        };
        RegionDoc { vertices: points(&region.vertices), hull: points(&region.hull), pareto: points(&region.pareto) }
    }
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report documents always serialize");
    s.push('\n');
    s
}
