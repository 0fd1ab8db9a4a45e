//! Squaring by the recursions (3a)^2 = 10a^2 - a^2 and
//! (n +- 1)^2 = n^2 +- 2n + 1, grounded in a memorized single-digit
//! table, and multiplication reduced to two squarings via
//! (a+b)(a-b) = a^2 - b^2.

use num_bigint::BigUint;

use crate::limits::{Limits, Result};

const DIGIT_SQUARES: [u64; 10] = [0, 1, 4, 9, 16, 25, 36, 49, 64, 81];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SquareRule {
    /// Single-digit square from the memorized table.
    Table,
    /// (3a)^2 = 10a^2 - a^2.
    ThreeA,
    /// n^2 = (n-1)^2 + 2(n-1) + 1.
    PlusOne,
    /// n^2 = (n+1)^2 - 2(n+1) + 1.
    MinusOne,
}

impl SquareRule {
    pub fn name(&self) -> &'static str {
        match self {
            SquareRule::Table => "Table",
            SquareRule::ThreeA => "ThreeA",
            SquareRule::PlusOne => "PlusOne",
            SquareRule::MinusOne => "MinusOne",
        }
    }
}

/// One application of a squaring rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareStep {
    pub rule: SquareRule,
    pub operand: u64,
    pub value: BigUint,
    /// The step computing the inner square this one depends on.
    pub sub: Option<Box<SquareStep>>,
}

/// A complete squaring plan for one target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarePlan {
    pub target: u64,
    pub root: SquareStep,
    pub depth: u64,
}

impl SquarePlan {
    pub fn value(&self) -> &BigUint {
        &self.root.value
    }

    /// Steps from innermost to outermost.
    pub fn steps(&self) -> Vec<&SquareStep> {
        let mut chain = Vec::new();
        let mut step = &self.root;
        loop {
            chain.push(step);
            match &step.sub {
                Some(inner) => step = inner,
                None => break,
            }
        }
        chain.reverse();
        chain
    }
}

/// Builds the squaring plan for n: table below 10, otherwise dispatch
/// on n mod 3 so every branch reaches a multiple of 3 and shrinks.
pub fn square_plan(n: u64, limits: &Limits) -> Result<SquarePlan> {
    limits.check(n)?;
    let root = square_step(n);
    let mut depth = 1;
    let mut step = &root;
    while let Some(inner) = &step.sub {
        depth += 1;
        step = inner;
    }
    Ok(SquarePlan { target: n, root, depth })
}

fn square_step(n: u64) -> SquareStep {
    if n <= 9 {
        return SquareStep {
            rule: SquareRule::Table,
            operand: n,
            value: BigUint::from(DIGIT_SQUARES[n as usize]),
            sub: None,
        };
    }
    match n % 3 {
        0 => {
            let inner = square_step(n / 3);
            let value = &inner.value * 10u32 - &inner.value;
            SquareStep {
                rule: SquareRule::ThreeA,
                operand: n,
                value,
                sub: Some(Box::new(inner)),
            }
        }
        1 => {
            let m = n - 1;
            let inner = square_step(m);
            let value = &inner.value + BigUint::from(2 * m + 1);
            SquareStep {
                rule: SquareRule::PlusOne,
                operand: n,
                value,
                sub: Some(Box::new(inner)),
            }
        }
        _ => {
            let m = n + 1;
            let inner = square_step(m);
            let value = &inner.value - BigUint::from(2 * m - 1);
            SquareStep {
                rule: SquareRule::MinusOne,
                operand: n,
                value,
                sub: Some(Box::new(inner)),
            }
        }
    }
}

/// Multiplication reduced to two squarings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicationPlan {
    pub x: u64,
    pub y: u64,
    /// y, or y + 1 when the parities of x and y differ.
    pub adjusted_y: u64,
    pub a: u64,
    pub b: u64,
    /// 0, or -x when the parity fix was applied (x*y = x*(y+1) - x).
    pub correction: i128,
    pub square_a: SquarePlan,
    pub square_b: SquarePlan,
    pub value: BigUint,
}

/// x*y = ((x+y)/2)^2 - ((x-y)/2)^2 when x and y share parity; with
/// mixed parity, y is bumped to y + 1 and x is subtracted back out.
pub fn multiply_plan(x: u64, y: u64, limits: &Limits) -> Result<MultiplicationPlan> {
    limits.check(x)?;
    limits.check(y)?;
    let (adjusted_y, correction) = if x % 2 == y % 2 {
        (y, 0i128)
    } else {
        (y + 1, -(x as i128))
    };
    let a = (x + adjusted_y) / 2;
    let b = x.abs_diff(adjusted_y) / 2;
    let square_a = square_plan_unchecked(a);
    let square_b = square_plan_unchecked(b);
    let value = square_a.value() - square_b.value() - BigUint::from(correction.unsigned_abs() as u64);
    Ok(MultiplicationPlan {
        x,
        y,
        adjusted_y,
        a,
        b,
        correction,
        square_a,
        square_b,
        value,
    })
}

// a and b stay within one of the inputs' magnitude plus one; the entry
// check on x and y already bounds them.
fn square_plan_unchecked(n: u64) -> SquarePlan {
    let root = square_step(n);
    let mut depth = 1;
    let mut step = &root;
    while let Some(inner) = &step.sub {
        depth += 1;
        step = inner;
    }
    SquarePlan { target: n, root, depth }
}

/// Smallest d with 3^d >= max(n, 1), i.e. ceil(log3 n).
pub fn ceil_log3(n: u64) -> u64 {
    let n = n.max(1);
    let mut d = 0;
    let mut p: u64 = 1;
    while p < n {
        p = p.saturating_mul(3);
        d += 1;
    }
    d
}
