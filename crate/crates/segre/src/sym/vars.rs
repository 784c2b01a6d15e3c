//! Variable tables: ordered symbol lists shared by all symbolic values.

use std::fmt;
use std::sync::Arc;

/// A named variable together with its exponent convention.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolDef {
    pub name: String,
    /// Negative exponents allowed when true.
    pub laurent: bool,
}

/// An ordered list of symbols. Every polynomial stores exponent vectors
/// indexed against one table; operations require both operands to agree.
///
/// The symbol order is also the tie-break order of the graded-lexicographic
/// term order, so it fixes canonical printed forms.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct VariableTable {
    symbols: Vec<SymbolDef>,
}

impl VariableTable {
    pub fn new(symbols: &[(&str, bool)]) -> Arc<Self> {
        let mut seen = std::collections::HashSet::new();
        for (name, _) in symbols {
            assert!(seen.insert(*name), "duplicate symbol {name}");
        }
        Arc::new(VariableTable {
            symbols: symbols
                .iter()
                .map(|(name, laurent)| SymbolDef {
                    name: (*name).to_owned(),
                    laurent: *laurent,
                })
                .collect(),
        })
    }

    /// K-picture table for classes and puzzles: `b`, `q`, `z1..zn`.
    /// All invertible (the K-side base ring is Z[b,b^-1,q,q^-1,z^±]).
    pub fn k_classes(n: usize) -> Arc<Self> {
        let mut syms: Vec<(String, bool)> = vec![("b".into(), true), ("q".into(), true)];
        for i in 1..=n {
            syms.push((format!("z{i}"), true));
        }
        Self::from_owned(syms)
    }

    /// K-picture table extended by the lattice row parameters `x1..xn`.
    pub fn k_lattice(n: usize) -> Arc<Self> {
        let mut syms: Vec<(String, bool)> = vec![("b".into(), true), ("q".into(), true)];
        for i in 1..=n {
            syms.push((format!("z{i}"), true));
        }
        for i in 1..=n {
            syms.push((format!("x{i}"), true));
        }
        Self::from_owned(syms)
    }

    /// Connective table: `b`, `xq`, `t1..tn`, none invertible
    /// (the base ring is Z[b], and t, xq are formal-group variables).
    pub fn connective(n: usize) -> Arc<Self> {
        let mut syms: Vec<(String, bool)> = vec![("b".into(), false), ("xq".into(), false)];
        for i in 1..=n {
            syms.push((format!("t{i}"), false));
        }
        Self::from_owned(syms)
    }

    /// Template table for fugacity catalogs: `b`, `q` and a spectral
    /// placeholder `z` to be bound per puzzle position.
    pub fn k_template() -> Arc<Self> {
        Self::new(&[("b", true), ("q", true), ("z", true)])
    }

    /// Connective fugacity template: the placeholder `z` stands for an
    /// `x_lambda` expression and is bound to one when a tile is placed.
    pub fn connective_template() -> Arc<Self> {
        Self::new(&[("b", false), ("xq", false), ("z", false)])
    }

    fn from_owned(symbols: Vec<(String, bool)>) -> Arc<Self> {
        let mut seen = std::collections::HashSet::new();
        for (name, _) in &symbols {
            assert!(seen.insert(name.clone()), "duplicate symbol {name}");
        }
        Arc::new(VariableTable {
            symbols: symbols
                .into_iter()
                .map(|(name, laurent)| SymbolDef { name, laurent })
                .collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.symbols[idx].name
    }

    pub fn laurent(&self, idx: usize) -> bool {
        self.symbols[idx].laurent
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s.name == name)
    }

    pub fn symbols(&self) -> impl Iterator<Item = &SymbolDef> {
        self.symbols.iter()
    }
}

impl fmt::Display for VariableTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.symbols.iter().map(|s| s.name.as_str()).collect();
        write!(f, "[{}]", names.join(", "))
    }
}

/// Two values may be combined only when their tables agree structurally.
pub fn same_table(a: &Arc<VariableTable>, b: &Arc<VariableTable>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
