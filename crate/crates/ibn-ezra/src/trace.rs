//! Renders derivation trees and arithmetic plans as indented text and
//! as a stable structured (JSON) format. Values serialize as decimal
//! strings so unbounded integers survive any consumer.

use serde::{Deserialize, Serialize};

use crate::combinatorics::DerivationNode;
use crate::medieval::{MultiplicationPlan, SquarePlan, SquareRule, SquareStep};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Text,
    Structured,
    None,
}

/// Structured-format record for one derivation node. Field names and
/// nesting are the stable machine interface.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct DerivationRecord {
    pub rule: String,
    pub n: u64,
    pub k: u64,
    pub value: String,
    pub children: Vec<DerivationRecord>,
}

impl DerivationRecord {
    pub fn from_node(node: &DerivationNode) -> Self {
        DerivationRecord {
            rule: node.rule.name().to_string(),
            n: node.query.n(),
            k: node.query.k(),
            value: node.value.to_string(),
            children: node.children.iter().map(|c| DerivationRecord::from_node(c)).collect(),
        }
    }
}

/// Structured-format record for one squaring step.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SquareStepRecord {
    pub rule: String,
    pub operand: u64,
    pub value: String,
    pub sub: Option<Box<SquareStepRecord>>,
}

impl SquareStepRecord {
    pub fn from_step(step: &SquareStep) -> Self {
        SquareStepRecord {
            rule: step.rule.name().to_string(),
            operand: step.operand,
            value: step.value.to_string(),
            sub: step.sub.as_deref().map(|s| Box::new(SquareStepRecord::from_step(s))),
        }
    }
}

/// Structured-format record for a multiplication plan.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct MultiplicationRecord {
    pub x: u64,
    pub y: u64,
    pub adjusted_y: u64,
    pub a: u64,
    pub b: u64,
    pub correction: String,
    pub value: String,
    pub square_a: SquareStepRecord,
    pub square_b: SquareStepRecord,
}

impl MultiplicationRecord {
    pub fn from_plan(plan: &MultiplicationPlan) -> Self {
        MultiplicationRecord {
            x: plan.x,
            y: plan.y,
            adjusted_y: plan.adjusted_y,
            a: plan.a,
            b: plan.b,
            correction: plan.correction.to_string(),
            value: plan.value.to_string(),
            square_a: SquareStepRecord::from_step(&plan.square_a.root),
            square_b: SquareStepRecord::from_step(&plan.square_b.root),
        }
    }
}

/// One line per node, two spaces of indent per depth; children in
/// canonical order.
pub fn render_derivation(node: &DerivationNode, format: RenderFormat) -> String {
    match format {
        RenderFormat::None => String::new(),
        RenderFormat::Structured => {
            serde_json::to_string(&DerivationRecord::from_node(node)).expect("serializable tree")
        }
        RenderFormat::Text => {
            let mut out = String::new();
            render_derivation_text(node, 0, &mut out);
            out
        }
    }
}

fn render_derivation_text(node: &DerivationNode, depth: usize, out: &mut String) {
    for _ in 0..depth {
        out.push_str("  ");
    }
    out.push_str(&format!(
        "C({},{}) = {} via {}\n",
        node.query.n(),
        node.query.k(),
        node.value,
        node.rule.name()
    ));
    for child in &node.children {
        render_derivation_text(child, depth + 1, out);
    }
}

/// One line per step, innermost first.
pub fn render_square_plan(plan: &SquarePlan, format: RenderFormat) -> String {
    match format {
        RenderFormat::None => String::new(),
        RenderFormat::Structured => {
            serde_json::to_string(&SquareStepRecord::from_step(&plan.root))
                .expect("serializable plan")
        }
        RenderFormat::Text => {
            let mut out = String::new();
            for step in plan.steps() {
                out.push_str(&square_step_line(step));
                out.push('\n');
            }
            out
        }
    }
}

fn square_step_line(step: &SquareStep) -> String {
    let n = step.operand;
    match step.rule {
        SquareRule::Table => format!("{n}\u{b2} = {} (Table)", step.value),
        SquareRule::ThreeA => {
            let inner = &step.sub.as_ref().expect("ThreeA has inner square").value;
            format!("{n}\u{b2} = 10\u{b7}{inner} \u{2212} {inner} = {} (ThreeA)", step.value)
        }
        SquareRule::PlusOne => {
            let m = n - 1;
            let inner = &step.sub.as_ref().expect("PlusOne has inner square").value;
            format!("{n}\u{b2} = {inner} + {} + 1 = {} (PlusOne)", 2 * m, step.value)
        }
        SquareRule::MinusOne => {
            let m = n + 1;
            let inner = &step.sub.as_ref().expect("MinusOne has inner square").value;
            format!("{n}\u{b2} = {inner} \u{2212} {} + 1 = {} (MinusOne)", 2 * m, step.value)
        }
    }
}

/// Both squaring plans followed by the difference-of-squares line.
pub fn render_multiply_plan(plan: &MultiplicationPlan, format: RenderFormat) -> String {
    match format {
        RenderFormat::None => String::new(),
        RenderFormat::Structured => {
            serde_json::to_string(&MultiplicationRecord::from_plan(plan))
                .expect("serializable plan")
        }
        RenderFormat::Text => {
            let mut out = String::new();
            for step in plan.square_a.steps() {
                out.push_str(&square_step_line(step));
                out.push('\n');
            }
            for step in plan.square_b.steps() {
                out.push_str(&square_step_line(step));
                out.push('\n');
            }
            let a_sq = plan.square_a.value();
            let b_sq = plan.square_b.value();
            if plan.correction == 0 {
                out.push_str(&format!(
                    "{}\u{b7}{} = {}\u{b2} \u{2212} {}\u{b2} = {} \u{2212} {} = {}\n",
                    plan.x, plan.y, plan.a, plan.b, a_sq, b_sq, plan.value
                ));
            } else {
                out.push_str(&format!(
                    "{}\u{b7}{} = {}\u{b2} \u{2212} {}\u{b2} \u{2212} {} = {} \u{2212} {} \u{2212} {} = {}\n",
                    plan.x, plan.y, plan.a, plan.b, plan.x, a_sq, b_sq, plan.x, plan.value
                ));
            }
            out
        }
    }
}

/// Historical phrasing of the triangular sum: "m times (m/2 + 1/2)".
pub fn render_sum(m: u64, value: &num_bigint::BigUint) -> String {
    format!("1 + 2 + \u{2026} + {m} = {m} times ({m}/2 + 1/2) = {value}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{binomial_derive, BinomialQuery, Strategy};
    use crate::limits::Limits;
    use crate::medieval::{multiply_plan, square_plan};
    use num_bigint::BigUint;

    fn limits() -> Limits {
        Limits::default()
    }

    fn derive(n: u64, k: u64) -> DerivationNode {
        binomial_derive(
            BinomialQuery::new(n, k, &limits()).unwrap(),
            Strategy::IbnEzra,
            &limits(),
        )
        .unwrap()
    }

    #[test]
    fn text_root_line_for_seven_four() {
        let text = render_derivation(&derive(7, 4), RenderFormat::Text);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "C(7,4) = 35 via HockeyStick");
        assert_eq!(lines[1], "  C(6,3) = 20 via HockeyStick");
        let depth1: Vec<&&str> = lines
            .iter()
            .filter(|l| l.starts_with("  C") && !l.starts_with("   "))
            .collect();
        assert_eq!(depth1.len(), 4);
    }

    #[test]
    fn text_trivial_single_line() {
        let text = render_derivation(&derive(5, 5), RenderFormat::Text);
        assert_eq!(text, "C(5,5) = 1 via Trivial\n");
    }

    #[test]
    fn structured_triangular() {
        let json = render_derivation(&derive(7, 2), RenderFormat::Structured);
        assert_eq!(
            json,
            r#"{"rule":"TriangularFormula","n":7,"k":2,"value":"21","children":[]}"#
        );
    }

    #[test]
    fn none_is_empty() {
        assert_eq!(render_derivation(&derive(7, 4), RenderFormat::None), "");
    }

    #[test]
    fn line_count_equals_node_count() {
        for (n, k) in [(7, 4), (10, 5), (6, 2), (4, 4)] {
            let node = derive(n, k);
            let text = render_derivation(&node, RenderFormat::Text);
            assert_eq!(text.lines().count(), node.node_count());
        }
    }

    #[test]
    fn deterministic_output() {
        let a = render_derivation(&derive(9, 4), RenderFormat::Structured);
        let b = render_derivation(&derive(9, 4), RenderFormat::Structured);
        assert_eq!(a, b);
    }

    fn recompute(record: &DerivationRecord) -> BigUint {
        let stored: BigUint = record.value.parse().unwrap();
        match record.rule.as_str() {
            "HockeyStick" => record.children.iter().map(recompute).sum(),
            "TriangularFormula" => {
                let n = BigUint::from(record.n);
                (&n - 1u32) * &n / 2u32
            }
            "Trivial" => stored.clone(),
            _ => stored.clone(),
        }
    }

    #[test]
    fn structured_round_trip_recomputes() {
        let node = derive(8, 4);
        let json = render_derivation(&node, RenderFormat::Structured);
        let record: DerivationRecord = serde_json::from_str(&json).unwrap();
        fn walk(r: &DerivationRecord) {
            let stored: BigUint = r.value.parse().unwrap();
            assert_eq!(recompute(r), stored);
            r.children.iter().for_each(walk);
        }
        walk(&record);
    }

    #[test]
    fn square_plan_text() {
        let plan = square_plan(12, &limits()).unwrap();
        let text = render_square_plan(&plan, RenderFormat::Text);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines, vec![
            "4\u{b2} = 16 (Table)",
            "12\u{b2} = 10\u{b7}16 \u{2212} 16 = 144 (ThreeA)",
        ]);
    }

    #[test]
    fn square_plan_text_plus_one() {
        let plan = square_plan(13, &limits()).unwrap();
        let text = render_square_plan(&plan, RenderFormat::Text);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[2], "13\u{b2} = 144 + 24 + 1 = 169 (PlusOne)");
    }

    #[test]
    fn square_plan_single_digit() {
        let plan = square_plan(7, &limits()).unwrap();
        assert_eq!(render_square_plan(&plan, RenderFormat::Text), "7\u{b2} = 49 (Table)\n");
    }

    #[test]
    fn square_structured_round_trip() {
        let plan = square_plan(13, &limits()).unwrap();
        let json = render_square_plan(&plan, RenderFormat::Structured);
        let record: SquareStepRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(record.rule, "PlusOne");
        assert_eq!(record.value, "169");
        assert_eq!(record.sub.as_ref().unwrap().rule, "ThreeA");
    }

    #[test]
    fn multiply_text_same_parity() {
        let plan = multiply_plan(8, 6, &limits()).unwrap();
        let text = render_multiply_plan(&plan, RenderFormat::Text);
        assert!(text.ends_with("8\u{b7}6 = 7\u{b2} \u{2212} 1\u{b2} = 49 \u{2212} 1 = 48\n"));
    }

    #[test]
    fn multiply_structured() {
        let plan = multiply_plan(7, 6, &limits()).unwrap();
        let json = render_multiply_plan(&plan, RenderFormat::Structured);
        let record: MultiplicationRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(record.correction, "-7");
        assert_eq!(record.value, "42");
    }

    #[test]
    fn sum_phrasing() {
        assert_eq!(
            render_sum(20, &BigUint::from(210u32)),
            "1 + 2 + \u{2026} + 20 = 20 times (20/2 + 1/2) = 210"
        );
    }
}
