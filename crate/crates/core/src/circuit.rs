//! Circuit data model and evaluation.
//!
//! A circuit is a directed acyclic multigraph of typed gates with ordered
//! wires and one designated output gate. Non-output sinks are allowed.
//! Wire order matters for tally oracle gates: wire position `p` carries bit
//! `p` of the promise string `0^{m-i}1^i`, so the number of trailing 1-wires
//! equals the queried unary length `i`.
//!
//! Single-polarity circuits (only OR computation gates, or only AND) compute
//! a disjunction (conjunction) over the set of input indices that can reach
//! the output gate, possibly forced by a constant. [`support`] extracts that
//! reachability structure and [`semantic_eval`] evaluates it directly; the
//! two routes agree on every valid circuit.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::Word;

pub type GateId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GateKind {
    /// Reads input variable `index` (0 = leftmost character of the word).
    Input(usize),
    Const0,
    Const1,
    Or,
    And,
    Not,
    TallyOracle,
}

impl GateKind {
    pub fn is_source(&self) -> bool {
        matches!(self, GateKind::Input(_) | GateKind::Const0 | GateKind::Const1)
    }

    pub fn name(&self) -> &'static str {
        match self {
            GateKind::Input(_) => "input",
            GateKind::Const0 => "const0",
            GateKind::Const1 => "const1",
            GateKind::Or => "or",
            GateKind::And => "and",
            GateKind::Not => "not",
            GateKind::TallyOracle => "tally_oracle",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gate {
    pub id: GateId,
    pub kind: GateKind,
    /// Ordered wires; repeated entries are distinct wires (multigraph).
    pub inputs: Vec<GateId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    pub gates: Vec<Gate>,
    pub output: GateId,
    pub n_inputs: usize,
}

/// Polarity of a single-polarity circuit or construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Or,
    And,
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Polarity::Or => "or",
            Polarity::And => "and",
        })
    }
}

/// Answers tally-language membership queries `1^k in T` by unary length `k`.
pub trait TallyPredicate {
    fn contains(&self, len: usize) -> bool;
}

impl TallyPredicate for BTreeSet<usize> {
    fn contains(&self, len: usize) -> bool {
        BTreeSet::contains(self, &len)
    }
}

impl<F: Fn(usize) -> bool> TallyPredicate for F {
    fn contains(&self, len: usize) -> bool {
        self(len)
    }
}

/// One invariant violation found by [`Circuit::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    IdMismatch { position: usize, id: GateId },
    DanglingWire { gate: GateId, target: GateId },
    BadFanIn { gate: GateId, kind: &'static str, got: usize },
    InputIndexOutOfRange { gate: GateId, index: usize, n_inputs: usize },
    MissingOutput { output: GateId },
    Cycle { gate: GateId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::IdMismatch { position, id } => {
                write!(f, "gate at position {position} has id {id}; ids must be dense 0..n in order")
            }
            Violation::DanglingWire { gate, target } => {
                write!(f, "gate {gate} has a wire from nonexistent gate {target}")
            }
            Violation::BadFanIn { gate, kind, got } => {
                write!(f, "gate {gate} ({kind}) has invalid fan-in {got}")
            }
            Violation::InputIndexOutOfRange { gate, index, n_inputs } => {
                write!(f, "gate {gate} reads input {index} but the circuit declares {n_inputs} inputs")
            }
            Violation::MissingOutput { output } => {
                write!(f, "designated output {output} does not exist")
            }
            Violation::Cycle { gate } => {
                write!(f, "gate {gate} lies on a cycle; the gate graph must be acyclic")
            }
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("word length {got} does not match the circuit's {expected} inputs")]
    WordLength { expected: usize, got: usize },
    #[error("circuit contains tally oracle gates but no oracle was supplied")]
    MissingOracle { gate: GateId },
    #[error("tally oracle gate {gate} was fed values outside the 0*1* promise")]
    PromiseViolation { gate: GateId },
    #[error("gate {gate} references nonexistent gate {target}")]
    DanglingWire { gate: GateId, target: GateId },
    #[error("evaluation hit a cycle at gate {gate}")]
    Cyclic { gate: GateId },
    #[error("output gate {output} does not exist")]
    MissingOutput { output: GateId },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SupportError {
    #[error("gate {gate} ({kind}) conflicts with declared polarity {polarity}")]
    PolarityViolation { gate: GateId, kind: &'static str, polarity: Polarity },
    #[error("output gate {output} does not exist")]
    MissingOutput { output: GateId },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SemanticEvalError {
    #[error("support references input {index} but the word has length {len}")]
    IndexOutOfRange { index: usize, len: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("cannot enumerate over {n} inputs (limit {limit}); truth tables get too large")]
    TooManyInputs { n: usize, limit: usize },
}

/// The reachability semantics of a single-polarity circuit.
///
/// `reachable_inputs` holds every input index with a directed path to the
/// output gate. `forcing_constant` records whether the dominating constant
/// (1 for OR, 0 for AND) reaches the output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Support {
    pub polarity: Polarity,
    pub reachable_inputs: BTreeSet<usize>,
    pub forcing_constant: bool,
}

impl Circuit {
    /// Number of wires.
    pub fn size(&self) -> usize {
        self.gates.iter().map(|g| g.inputs.len()).sum()
    }

    /// Length of the longest directed path from a fan-in-0 gate to the
    /// output gate, counted in wires. `None` if the circuit is cyclic or the
    /// output is missing.
    pub fn depth(&self) -> Option<usize> {
        let order = self.topo_order()?;
        if self.output >= self.gates.len() {
            return None;
        }
        let mut depth = vec![0usize; self.gates.len()];
        for &id in &order {
            let d = self.gates[id]
                .inputs
                .iter()
                .filter(|&&src| src < self.gates.len())
                .map(|&src| depth[src] + 1)
                .max()
                .unwrap_or(0);
            depth[id] = d;
        }
        Some(depth[self.output])
    }

    /// Kahn's algorithm over the multigraph; `None` on a cycle.
    ///
    /// Gates are identified by position; wires to nonexistent gates are
    /// skipped here (the validator reports them separately).
    fn topo_order(&self) -> Option<Vec<GateId>> {
        let order = self.kahn_order();
        (order.len() == self.gates.len()).then_some(order)
    }

    /// Topological prefix: every gate whose dependencies resolved, in order.
    /// Gates on (or downstream of) a cycle are absent.
    fn kahn_order(&self) -> Vec<GateId> {
        let n = self.gates.len();
        let mut indegree = vec![0usize; n];
        for (id, gate) in self.gates.iter().enumerate() {
            indegree[id] = gate.inputs.iter().filter(|&&src| src < n).count();
        }
        let mut consumers: Vec<Vec<GateId>> = vec![Vec::new(); n];
        for (id, gate) in self.gates.iter().enumerate() {
            for &src in &gate.inputs {
                if src < n {
                    consumers[src].push(id);
                }
            }
        }
        let mut queue: std::collections::VecDeque<GateId> =
            (0..n).filter(|&id| indegree[id] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(id) = queue.pop_front() {
            order.push(id);
            for &next in &consumers[id] {
                indegree[next] -= 1;
                if indegree[next] == 0 {
                    queue.push_back(next);
                }
            }
        }
        order
    }

    /// Checks every structural invariant and returns all violations found.
    /// An empty list means the circuit is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut violations = Vec::new();
        let n = self.gates.len();
        for (position, gate) in self.gates.iter().enumerate() {
            if gate.id != position {
                violations.push(Violation::IdMismatch { position, id: gate.id });
            }
            let fan_in = gate.inputs.len();
            let bad = match gate.kind {
                GateKind::Input(_) | GateKind::Const0 | GateKind::Const1 => fan_in != 0,
                GateKind::Not => fan_in != 1,
                GateKind::Or | GateKind::And | GateKind::TallyOracle => fan_in == 0,
            };
            if bad {
                violations.push(Violation::BadFanIn {
                    gate: position,
                    kind: gate.kind.name(),
                    got: fan_in,
                });
            }
            if let GateKind::Input(index) = gate.kind {
                if index >= self.n_inputs {
                    violations.push(Violation::InputIndexOutOfRange {
                        gate: position,
                        index,
                        n_inputs: self.n_inputs,
                    });
                }
            }
            for &target in &gate.inputs {
                if target >= n {
                    violations.push(Violation::DanglingWire { gate: position, target });
                }
            }
        }
        if self.output >= n {
            violations.push(Violation::MissingOutput { output: self.output });
        }
        let order = self.kahn_order();
        if order.len() != n {
            // One violation naming the smallest gate left unresolved.
            let mut resolved = vec![false; n];
            for id in order {
                resolved[id] = true;
            }
            if let Some(gate) = (0..n).find(|&id| !resolved[id]) {
                violations.push(Violation::Cycle { gate });
            }
        }
        violations
    }

    /// Inductively assigns a Boolean value to every gate in the output cone
    /// and returns the output gate's value.
    ///
    /// `oracle` must be supplied iff the circuit contains tally oracle gates;
    /// each oracle gate's input values must form `0^{m-i}1^i`, and the gate
    /// then evaluates to `oracle(i)`.
    pub fn evaluate(
        &self,
        word: &Word,
        oracle: Option<&dyn TallyPredicate>,
    ) -> Result<bool, EvalError> {
        if word.len() != self.n_inputs {
            return Err(EvalError::WordLength { expected: self.n_inputs, got: word.len() });
        }
        if self.output >= self.gates.len() {
            return Err(EvalError::MissingOutput { output: self.output });
        }
        let n = self.gates.len();
        let mut value: Vec<Option<bool>> = vec![None; n];
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state = vec![0u8; n];
        let mut stack: Vec<(GateId, usize)> = vec![(self.output, 0)];
        state[self.output] = 1;
        while let Some(&(id, next_child)) = stack.last() {
            let gate = &self.gates[id];
            if next_child < gate.inputs.len() {
                stack.last_mut().unwrap().1 += 1;
                let child = gate.inputs[next_child];
                if child >= n {
                    return Err(EvalError::DanglingWire { gate: id, target: child });
                }
                match state[child] {
                    0 => {
                        state[child] = 1;
                        stack.push((child, 0));
                    }
                    1 => return Err(EvalError::Cyclic { gate: child }),
                    _ => {}
                }
                continue;
            }
            stack.pop();
            state[id] = 2;
            let ins = || gate.inputs.iter().map(|&c| value[c].expect("child evaluated"));
            let v = match gate.kind {
                GateKind::Input(index) => word.bit(index).unwrap_or(false),
                GateKind::Const0 => false,
                GateKind::Const1 => true,
                GateKind::Or => ins().any(|b| b),
                GateKind::And => ins().all(|b| b),
                GateKind::Not => !value[gate.inputs[0]].expect("child evaluated"),
                GateKind::TallyOracle => {
                    let oracle = oracle.ok_or(EvalError::MissingOracle { gate: id })?;
                    let vals: Vec<bool> = ins().collect();
                    let ones = vals.iter().filter(|&&b| b).count();
                    let m = vals.len();
                    if vals[..m - ones].iter().any(|&b| b) {
                        return Err(EvalError::PromiseViolation { gate: id });
                    }
                    oracle.contains(ones)
                }
            };
            value[id] = Some(v);
        }
        Ok(value[self.output].expect("output evaluated"))
    }

    /// Derives the [`Support`] of a single-polarity circuit by solving the
    /// reachability questions "which sources reach the output gate?".
    pub fn support(&self, polarity: Polarity) -> Result<Support, SupportError> {
        for gate in &self.gates {
            let conforms = match gate.kind {
                GateKind::Input(_) | GateKind::Const0 | GateKind::Const1 => true,
                GateKind::Or => polarity == Polarity::Or,
                GateKind::And => polarity == Polarity::And,
                GateKind::Not | GateKind::TallyOracle => false,
            };
            if !conforms {
                return Err(SupportError::PolarityViolation {
                    gate: gate.id,
                    kind: gate.kind.name(),
                    polarity,
                });
            }
        }
        if self.output >= self.gates.len() {
            return Err(SupportError::MissingOutput { output: self.output });
        }
        // Walk wires backwards from the output.
        let mut visited = vec![false; self.gates.len()];
        let mut queue = std::collections::VecDeque::from([self.output]);
        visited[self.output] = true;
        let mut reachable_inputs = BTreeSet::new();
        let mut forcing_constant = false;
        while let Some(id) = queue.pop_front() {
            let gate = &self.gates[id];
            match gate.kind {
                GateKind::Input(index) => {
                    reachable_inputs.insert(index);
                }
                GateKind::Const1 if polarity == Polarity::Or => forcing_constant = true,
                GateKind::Const0 if polarity == Polarity::And => forcing_constant = true,
                _ => {}
            }
            for &src in &gate.inputs {
                if src < self.gates.len() && !visited[src] {
                    visited[src] = true;
                    queue.push_back(src);
                }
            }
        }
        Ok(Support { polarity, reachable_inputs, forcing_constant })
    }
}

/// Evaluates a [`Support`] directly on a word:
/// OR polarity is `forcing v (v over reachable bits)`, AND polarity is
/// `!forcing ^ (^ over reachable bits)` with the empty conjunction equal to 1.
pub fn semantic_eval(support: &Support, word: &Word) -> Result<bool, SemanticEvalError> {
    let mut bits = Vec::with_capacity(support.reachable_inputs.len());
    for &index in &support.reachable_inputs {
        let bit = word
            .bit(index)
            .ok_or(SemanticEvalError::IndexOutOfRange { index, len: word.len() })?;
        bits.push(bit);
    }
    Ok(match support.polarity {
        Polarity::Or => support.forcing_constant || bits.iter().any(|&b| b),
        Polarity::And => !support.forcing_constant && bits.iter().all(|&b| b),
    })
}

/// A Boolean function on `n_vars` inputs as a packed table. Row `r` holds the
/// value on the word whose character `j` is bit `j` of `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TruthTable {
    n_vars: usize,
    bits: u64,
}

impl TruthTable {
    pub const MAX_VARS: usize = 6;

    pub fn from_fn(n_vars: usize, f: impl Fn(&Word) -> bool) -> Self {
        assert!(n_vars <= Self::MAX_VARS);
        let mut bits = 0u64;
        for r in 0..(1u64 << n_vars) {
            let word = Word::from_bits((0..n_vars).map(|j| (r >> j) & 1 == 1).collect());
            if f(&word) {
                bits |= 1 << r;
            }
        }
        TruthTable { n_vars, bits }
    }

    pub fn constant(n_vars: usize, value: bool) -> Self {
        Self::from_fn(n_vars, |_| value)
    }

    pub fn or_of(n_vars: usize, indices: &[usize]) -> Self {
        Self::from_fn(n_vars, |w| indices.iter().any(|&j| w.bit(j) == Some(true)))
    }

    pub fn and_of(n_vars: usize, indices: &[usize]) -> Self {
        Self::from_fn(n_vars, |w| indices.iter().all(|&j| w.bit(j) == Some(true)))
    }

    pub fn parity(n_vars: usize) -> Self {
        Self::from_fn(n_vars, |w| w.count_ones() % 2 == 1)
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn value_on(&self, word: &Word) -> Option<bool> {
        if word.len() != self.n_vars {
            return None;
        }
        let mut r = 0u64;
        for (j, bit) in word.iter().enumerate() {
            if bit {
                r |= 1 << j;
            }
        }
        Some((self.bits >> r) & 1 == 1)
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..(1u64 << self.n_vars) {
            f.write_str(if (self.bits >> r) & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Every truth table a polarity-circuit on `n` inputs can realize: the two
/// constants plus the disjunction (conjunction) over each nonempty index set.
/// Exactly `2^n + 1` tables.
pub fn enumerate_monotone_functions(
    n: usize,
    polarity: Polarity,
) -> Result<BTreeSet<TruthTable>, EnumerateError> {
    const LIMIT: usize = 5;
    if n > LIMIT {
        return Err(EnumerateError::TooManyInputs { n, limit: LIMIT });
    }
    let mut tables = BTreeSet::new();
    tables.insert(TruthTable::constant(n, false));
    tables.insert(TruthTable::constant(n, true));
    for mask in 1u32..(1u32 << n) {
        let indices: Vec<usize> = (0..n).filter(|&j| (mask >> j) & 1 == 1).collect();
        tables.insert(match polarity {
            Polarity::Or => TruthTable::or_of(n, &indices),
            Polarity::And => TruthTable::and_of(n, &indices),
        });
    }
    Ok(tables)
}

/// Incremental circuit constructor used by the compilers. Gate ids are dense
/// and assigned in insertion order.
#[derive(Debug, Default)]
pub struct CircuitBuilder {
    gates: Vec<Gate>,
    n_inputs: usize,
}

impl CircuitBuilder {
    pub fn new(n_inputs: usize) -> Self {
        CircuitBuilder { gates: Vec::new(), n_inputs }
    }

    pub fn push(&mut self, kind: GateKind, inputs: Vec<GateId>) -> GateId {
        let id = self.gates.len();
        self.gates.push(Gate { id, kind, inputs });
        id
    }

    /// Appends one more wire into an existing gate.
    pub fn wire(&mut self, from: GateId, into: GateId) {
        self.gates[into].inputs.push(from);
    }

    pub fn finish(self, output: GateId) -> Circuit {
        Circuit { gates: self.gates, output, n_inputs: self.n_inputs }
    }
}

// ---------------------------------------------------------------------------
// JSON circuit files: {"n_inputs", "output", "gates": [{"id","kind","index"?,"inputs"}]}
// ---------------------------------------------------------------------------

#[derive(Debug, Error)]
pub enum CircuitFileError {
    #[error("invalid circuit JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("gate {gate}: {message}")]
    Format { gate: GateId, message: String },
}

#[derive(Serialize, Deserialize)]
struct CircuitRepr {
    n_inputs: usize,
    output: usize,
    gates: Vec<GateRepr>,
}

#[derive(Serialize, Deserialize)]
struct GateRepr {
    id: usize,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    index: Option<usize>,
    inputs: Vec<usize>,
}

impl Circuit {
    pub fn to_json(&self) -> String {
        let repr = CircuitRepr {
            n_inputs: self.n_inputs,
            output: self.output,
            gates: self
                .gates
                .iter()
                .map(|g| GateRepr {
                    id: g.id,
                    kind: g.kind.name().to_string(),
                    index: match g.kind {
                        GateKind::Input(index) => Some(index),
                        _ => None,
                    },
                    inputs: g.inputs.clone(),
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&repr).expect("circuit serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Circuit, CircuitFileError> {
        let repr: CircuitRepr = serde_json::from_str(text)?;
        let mut gates = Vec::with_capacity(repr.gates.len());
        for g in repr.gates {
            let kind = match (g.kind.as_str(), g.index) {
                ("input", Some(index)) => GateKind::Input(index),
                ("input", None) => {
                    return Err(CircuitFileError::Format {
                        gate: g.id,
                        message: "kind \"input\" requires an \"index\" field".into(),
                    })
                }
                (other, Some(_)) => {
                    return Err(CircuitFileError::Format {
                        gate: g.id,
                        message: format!("kind {other:?} does not take an \"index\" field"),
                    })
                }
                ("const0", None) => GateKind::Const0,
                ("const1", None) => GateKind::Const1,
                ("or", None) => GateKind::Or,
                ("and", None) => GateKind::And,
                ("not", None) => GateKind::Not,
                ("tally_oracle", None) => GateKind::TallyOracle,
                (other, None) => {
                    return Err(CircuitFileError::Format {
                        gate: g.id,
                        message: format!("unknown gate kind {other:?}"),
                    })
                }
            };
            gates.push(Gate { id: g.id, kind, inputs: g.inputs });
        }
        Ok(Circuit { gates, output: repr.output, n_inputs: repr.n_inputs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn or_of_input_and_const0() -> Circuit {
        let mut b = CircuitBuilder::new(1);
        let x = b.push(GateKind::Input(0), vec![]);
        let z = b.push(GateKind::Const0, vec![]);
        let o = b.push(GateKind::Or, vec![x, z]);
        b.finish(o)
    }

    #[test]
    fn minimal_constant_circuit_is_valid() {
        let mut b = CircuitBuilder::new(0);
        let c = b.push(GateKind::Const1, vec![]);
        let circuit = b.finish(c);
        assert_eq!(circuit.validate(), vec![]);
        assert_eq!(circuit.evaluate(&Word::empty(), None), Ok(true));
        assert_eq!(circuit.size(), 0);
        assert_eq!(circuit.depth(), Some(0));
    }

    #[test]
    fn not_gate_fan_in_is_checked() {
        let mut b = CircuitBuilder::new(1);
        let x = b.push(GateKind::Input(0), vec![]);
        let n = b.push(GateKind::Not, vec![x, x]);
        let circuit = b.finish(n);
        let violations = circuit.validate();
        assert_eq!(violations.len(), 1);
        assert!(matches!(violations[0], Violation::BadFanIn { gate: 1, got: 2, .. }));
    }

    #[test]
    fn two_cycle_reports_one_acyclicity_violation() {
        let gates = vec![
            Gate { id: 0, kind: GateKind::Or, inputs: vec![1] },
            Gate { id: 1, kind: GateKind::Or, inputs: vec![0] },
        ];
        let circuit = Circuit { gates, output: 0, n_inputs: 0 };
        let cycles: Vec<_> = circuit
            .validate()
            .into_iter()
            .filter(|v| matches!(v, Violation::Cycle { .. }))
            .collect();
        assert_eq!(cycles, vec![Violation::Cycle { gate: 0 }]);
    }

    #[test]
    fn evaluate_or_identity() {
        let circuit = or_of_input_and_const0();
        assert_eq!(circuit.evaluate(&"1".parse().unwrap(), None), Ok(true));
        assert_eq!(circuit.evaluate(&"0".parse().unwrap(), None), Ok(false));
    }

    #[test]
    fn evaluate_and_pair() {
        let mut b = CircuitBuilder::new(2);
        let x0 = b.push(GateKind::Input(0), vec![]);
        let x1 = b.push(GateKind::Input(1), vec![]);
        let a = b.push(GateKind::And, vec![x0, x1]);
        let circuit = b.finish(a);
        assert_eq!(circuit.evaluate(&"10".parse().unwrap(), None), Ok(false));
        assert_eq!(circuit.evaluate(&"11".parse().unwrap(), None), Ok(true));
    }

    #[test]
    fn evaluate_length_mismatch() {
        let circuit = or_of_input_and_const0();
        assert_eq!(
            circuit.evaluate(&"10".parse().unwrap(), None),
            Err(EvalError::WordLength { expected: 1, got: 2 })
        );
    }

    /// Enumerates all four promise inputs of a 3-wire oracle gate against
    /// the "even length" predicate.
    #[test]
    fn tally_oracle_gate_counts_trailing_ones() {
        let mut b = CircuitBuilder::new(3);
        let xs: Vec<GateId> = (0..3).map(|j| b.push(GateKind::Input(j), vec![])).collect();
        let g = b.push(GateKind::TallyOracle, xs);
        let circuit = b.finish(g);
        let even = |k: usize| k % 2 == 0;
        let cases = [("000", true), ("001", false), ("011", true), ("111", false)];
        for (word, expected) in cases {
            let got = circuit.evaluate(&word.parse().unwrap(), Some(&even)).unwrap();
            assert_eq!(got, expected, "promise input {word}");
        }
        // "010" violates the promise.
        assert_eq!(
            circuit.evaluate(&"010".parse().unwrap(), Some(&even)),
            Err(EvalError::PromiseViolation { gate: 3 })
        );
        // No oracle supplied.
        assert_eq!(
            circuit.evaluate(&"001".parse().unwrap(), None),
            Err(EvalError::MissingOracle { gate: 3 })
        );
    }

    #[test]
    fn support_reports_direct_wiring() {
        let mut b = CircuitBuilder::new(2);
        let _x0 = b.push(GateKind::Input(0), vec![]);
        let x1 = b.push(GateKind::Input(1), vec![]);
        let z = b.push(GateKind::Const0, vec![]);
        let o = b.push(GateKind::Or, vec![x1, z]);
        let circuit = b.finish(o);
        let support = circuit.support(Polarity::Or).unwrap();
        assert_eq!(support.reachable_inputs, BTreeSet::from([1]));
        assert!(!support.forcing_constant);
    }

    #[test]
    fn support_sees_transitive_forcing_constant() {
        let mut b = CircuitBuilder::new(1);
        let one = b.push(GateKind::Const1, vec![]);
        let mid = b.push(GateKind::Or, vec![one]);
        let o = b.push(GateKind::Or, vec![mid]);
        let circuit = b.finish(o);
        let support = circuit.support(Polarity::Or).unwrap();
        assert!(support.forcing_constant);
        for word in Word::all_of_length(1) {
            assert_eq!(circuit.evaluate(&word, None), Ok(true));
        }
    }

    #[test]
    fn support_rejects_mixed_polarity() {
        let mut b = CircuitBuilder::new(1);
        let x = b.push(GateKind::Input(0), vec![]);
        let a = b.push(GateKind::And, vec![x]);
        let o = b.push(GateKind::Or, vec![a]);
        let circuit = b.finish(o);
        assert!(matches!(
            circuit.support(Polarity::Or),
            Err(SupportError::PolarityViolation { gate: 1, .. })
        ));
    }

    #[test]
    fn semantic_eval_cases() {
        let s = Support {
            polarity: Polarity::Or,
            reachable_inputs: BTreeSet::from([0]),
            forcing_constant: false,
        };
        assert_eq!(semantic_eval(&s, &"0".parse().unwrap()), Ok(false));

        let empty_and = Support {
            polarity: Polarity::And,
            reachable_inputs: BTreeSet::new(),
            forcing_constant: false,
        };
        for word in Word::all_up_to_length(3) {
            assert_eq!(semantic_eval(&empty_and, &word), Ok(true));
        }

        let s02 = Support {
            polarity: Polarity::Or,
            reachable_inputs: BTreeSet::from([0, 2]),
            forcing_constant: false,
        };
        assert_eq!(semantic_eval(&s02, &"001".parse().unwrap()), Ok(true));
        assert!(matches!(
            semantic_eval(&s02, &"0".parse().unwrap()),
            Err(SemanticEvalError::IndexOutOfRange { index: 2, len: 1 })
        ));
    }

    #[test]
    fn enumerate_one_variable_or_functions() {
        let tables = enumerate_monotone_functions(1, Polarity::Or).unwrap();
        assert_eq!(tables.len(), 3);
        assert!(tables.contains(&TruthTable::constant(1, false)));
        assert!(tables.contains(&TruthTable::constant(1, true)));
        assert!(tables.contains(&TruthTable::or_of(1, &[0])));
    }

    #[test]
    fn enumerate_counts_and_exclusions() {
        for n in 1..=5 {
            for polarity in [Polarity::Or, Polarity::And] {
                let tables = enumerate_monotone_functions(n, polarity).unwrap();
                assert_eq!(tables.len(), (1usize << n) + 1, "n={n} polarity={polarity}");
            }
        }
        // The conjunction of two variables is not an OR function, the
        // disjunction is not an AND function, and parity is neither.
        for n in 2..=5 {
            let or_set = enumerate_monotone_functions(n, Polarity::Or).unwrap();
            let and_set = enumerate_monotone_functions(n, Polarity::And).unwrap();
            assert!(!or_set.contains(&TruthTable::and_of(n, &[0, 1])));
            assert!(!and_set.contains(&TruthTable::or_of(n, &[0, 1])));
            assert!(!or_set.contains(&TruthTable::parity(n)));
            assert!(!and_set.contains(&TruthTable::parity(n)));
        }
        assert!(enumerate_monotone_functions(6, Polarity::Or).is_err());
    }

    #[test]
    fn json_round_trip_is_byte_stable() {
        let circuit = or_of_input_and_const0();
        let text = circuit.to_json();
        let parsed = Circuit::from_json(&text).unwrap();
        assert_eq!(parsed, circuit);
        assert_eq!(parsed.to_json(), text);
    }

    #[test]
    fn json_rejects_misshapen_gates() {
        let bad = r#"{"n_inputs":1,"output":0,"gates":[{"id":0,"kind":"or","index":2,"inputs":[]}]}"#;
        assert!(matches!(
            Circuit::from_json(bad),
            Err(CircuitFileError::Format { gate: 0, .. })
        ));
        let missing = r#"{"n_inputs":1,"output":0,"gates":[{"id":0,"kind":"input","inputs":[]}]}"#;
        assert!(Circuit::from_json(missing).is_err());
    }
}
