use super::Expr;
use crate::error::{Error, Result};

/// What a variable compiles to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operand {
    Slot(usize),
    Const(bool),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Load(u32),
    Const(bool),
    Not,
    And,
    Or,
}

/// An expression compiled to postfix form over numbered input slots.
///
/// Evaluation is bit-sliced: every slot holds a 64-bit lane, bit `t` of which
/// is the variable's value in the `t`-th of up to 64 independent assignments.
/// A single assignment is evaluated by broadcasting each bit to `0` or `!0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Program {
    ops: Vec<Op>,
    depth: usize,
}

impl Program {
    pub fn compile<F>(expr: &Expr, resolve: F) -> Result<Program>
    where
        F: Fn(&str) -> Option<Operand>,
    {
        fn emit<F>(e: &Expr, resolve: &F, ops: &mut Vec<Op>) -> Result<()>
        where
            F: Fn(&str) -> Option<Operand>,
        {
            match e {
                Expr::Const(b) => ops.push(Op::Const(*b)),
                Expr::Var(name) => match resolve(name) {
                    Some(Operand::Slot(i)) => ops.push(Op::Load(i as u32)),
                    Some(Operand::Const(b)) => ops.push(Op::Const(b)),
                    None => return Err(Error::MissingVariable(name.clone())),
                },
                Expr::Not(inner) => {
                    emit(inner, resolve, ops)?;
                    ops.push(Op::Not);
                }
                Expr::And(a, b) => {
                    emit(a, resolve, ops)?;
                    emit(b, resolve, ops)?;
                    ops.push(Op::And);
                }
                Expr::Or(a, b) => {
                    emit(a, resolve, ops)?;
                    emit(b, resolve, ops)?;
                    ops.push(Op::Or);
                }
            }
            Ok(())
        }

        let mut ops = Vec::new();
        emit(expr, &resolve, &mut ops)?;
        let mut depth = 0usize;
        let mut max = 0usize;
        for op in &ops {
            match op {
                Op::Load(_) | Op::Const(_) => depth += 1,
                Op::Not => {}
                Op::And | Op::Or => depth -= 1,
            }
            max = max.max(depth);
        }
        Ok(Program { ops, depth: max })
    }

    /// Maximum evaluation stack depth.
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Evaluates 64 assignments at once. `stack` is scratch space.
    #[inline]
    pub fn eval(&self, lanes: &[u64], stack: &mut Vec<u64>) -> u64 {
        stack.clear();
        for op in &self.ops {
            match *op {
                Op::Load(i) => stack.push(lanes[i as usize]),
                Op::Const(b) => stack.push(if b { !0 } else { 0 }),
                Op::Not => {
                    let top = stack.last_mut().expect("operand");
                    *top = !*top;
                }
                Op::And => {
                    let b = stack.pop().expect("operand");
                    let a = stack.last_mut().expect("operand");
                    *a &= b;
                }
                Op::Or => {
                    let b = stack.pop().expect("operand");
                    let a = stack.last_mut().expect("operand");
                    *a |= b;
                }
            }
        }
        stack.pop().expect("result")
    }

    /// Evaluates a single assignment.
    pub fn eval_bits(&self, bits: &[bool]) -> bool {
        let lanes: Vec<u64> = bits.iter().map(|&b| if b { !0 } else { 0 }).collect();
        let mut stack = Vec::with_capacity(self.depth);
        self.eval(&lanes, &mut stack) & 1 == 1
    }
}
