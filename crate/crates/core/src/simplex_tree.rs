//! The simplex tree: a trie over sorted vertex words with one node per simplex.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::simplex::{Level, Simplex, VertexId};

#[derive(Debug, Clone, Default)]
struct Node {
    children: BTreeMap<VertexId, Node>,
    value: Level,
}

#[derive(Debug, Clone, Default)]
pub struct SimplexTree {
    root: BTreeMap<VertexId, Node>,
    nodes: usize,
}

impl SimplexTree {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts `s` with all of its faces. A face already present keeps the
    /// smaller of its value and `level`.
    pub fn insert(&mut self, s: &Simplex, level: Level) {
        for face in s.all_faces() {
            let mut children = &mut self.root;
            let (last, prefix) = face.vertices().split_last().expect("non-empty");
            for v in prefix {
                children = &mut children
                    .get_mut(v)
                    .expect("faces are visited shortest first")
                    .children;
            }
            match children.get_mut(last) {
                Some(node) => node.value = node.value.min(level),
                None => {
                    children.insert(
                        *last,
                        Node {
                            children: BTreeMap::new(),
                            value: level,
                        },
                    );
                    self.nodes += 1;
                }
            }
        }
    }

    fn find(&self, s: &Simplex) -> Option<&Node> {
        let (first, rest) = s.vertices().split_first()?;
        let mut node = self.root.get(first)?;
        for v in rest {
            node = node.children.get(v)?;
        }
        Some(node)
    }

    pub fn membership(&self, s: &Simplex) -> bool {
        self.find(s).is_some()
    }

    pub fn filtration(&self, s: &Simplex) -> Result<Level> {
        self.find(s)
            .map(|n| n.value)
            .ok_or_else(|| Error::NotInComplex(s.clone()))
    }

    /// Exactly the number of simplices.
    pub fn node_count(&self) -> usize {
        self.nodes
    }

    /// Every stored simplex with its value, in lexicographic word order.
    pub fn simplices(&self) -> Vec<(Simplex, Level)> {
        fn walk(
            children: &BTreeMap<VertexId, Node>,
            word: &mut Vec<VertexId>,
            out: &mut Vec<(Simplex, Level)>,
        ) {
            for (&v, node) in children {
                word.push(v);
                out.push((Simplex::from_sorted(word.clone()), node.value));
                walk(&node.children, word, out);
                word.pop();
            }
        }
        let mut out = Vec::with_capacity(self.nodes);
        walk(&self.root, &mut Vec::new(), &mut out);
        out
    }
}
