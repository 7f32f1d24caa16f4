//! Functional-graph export in Graphviz DOT.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use lifestory_core::{classify_seed, trajectory, DigitString, DynamicsError, MapKind};

/// The map restricted to states reachable from a set of seeds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FunctionalGraph {
    /// Each state with its image under the map; nodes in canonical order.
    pub edges: BTreeMap<DigitString, DigitString>,
    pub cycle_nodes: BTreeSet<DigitString>,
}

impl FunctionalGraph {
    /// Seeds in `lo..=hi` whose sequence is undefined are left out.
    pub fn from_range(
        map_kind: MapKind,
        lo: u64,
        hi: u64,
        max_steps: usize,
    ) -> Result<Self, DynamicsError> {
        let mut graph = Self::default();
        for seed in (lo..=hi).map(DigitString::from_u64) {
            if !classify_seed(&seed).is_infinite() || graph.edges.contains_key(&seed) {
                continue;
            }
            let t = trajectory(map_kind, &seed, max_steps)?;
            let len = t.pre_period() + t.period();
            for n in 0..len {
                graph.edges.insert(t.term(n).clone(), t.term(n + 1).clone());
            }
            graph.cycle_nodes.extend(t.cycle.iter().cloned());
        }
        Ok(graph)
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "digraph {name} {{").unwrap();
        for node in self.edges.keys() {
            let shape = if self.cycle_nodes.contains(node) {
                "doublecircle"
            } else {
                "circle"
            };
            writeln!(out, "  \"{node}\" [shape={shape}];").unwrap();
        }
        for (from, to) in &self.edges {
            writeln!(out, "  \"{from}\" -> \"{to}\";").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lifestory_core::DEFAULT_MAX_STEPS;

    fn names(set: &BTreeSet<DigitString>) -> Vec<String> {
        set.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn cv_graph_cycles() {
        let g = FunctionalGraph::from_range(MapKind::Cv, 0, 30, DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(
            names(&g.cycle_nodes),
            ["03", "12", "22", "002", "011", "111", "201", "1001"]
        );
        // every successor is itself a node
        assert!(g.edges.values().all(|to| g.edges.contains_key(to)));
    }

    #[test]
    fn cls_graph_cycle() {
        let g = FunctionalGraph::from_range(MapKind::Cls, 0, 10, DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(names(&g.cycle_nodes), ["6300000100", "7101001000"]);
        let dot = g.to_dot("cls");
        assert!(dot.starts_with("digraph cls {\n"));
        assert!(dot.contains("  \"6300000100\" [shape=doublecircle];\n"));
        assert!(dot.contains("  \"0\" -> \"1000000000\";\n"));
        assert!(dot.contains("  \"0\" [shape=circle];\n"));
        assert_eq!(dot, g.to_dot("cls"));
    }
}
