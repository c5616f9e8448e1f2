//! Tarjan's strongly connected components on small adjacency lists, with
//! reusable buffers so that it can be run once per labeling.

#[derive(Debug, Default, Clone)]
pub(crate) struct Tarjan {
    index: Vec<u32>,
    low: Vec<u32>,
    on_stack: Vec<bool>,
    stack: Vec<usize>,
    comp: Vec<u32>,
    counter: u32,
    components: u32,
}

const UNVISITED: u32 = u32::MAX;

impl Tarjan {
    /// Component id of every vertex.
    pub(crate) fn run(&mut self, adj: &[Vec<usize>]) -> &[u32] {
        let n = adj.len();
        self.index.clear();
        self.index.resize(n, UNVISITED);
        self.low.clear();
        self.low.resize(n, 0);
        self.on_stack.clear();
        self.on_stack.resize(n, false);
        self.comp.clear();
        self.comp.resize(n, 0);
        self.stack.clear();
        self.counter = 0;
        self.components = 0;
        for v in 0..n {
            if self.index[v] == UNVISITED {
                self.visit(v, adj);
            }
        }
        &self.comp
    }

    fn visit(&mut self, v: usize, adj: &[Vec<usize>]) {
        self.index[v] = self.counter;
        self.low[v] = self.counter;
        self.counter += 1;
        self.stack.push(v);
        self.on_stack[v] = true;
        for &w in &adj[v] {
            if self.index[w] == UNVISITED {
                self.visit(w, adj);
                self.low[v] = self.low[v].min(self.low[w]);
            } else if self.on_stack[w] {
                self.low[v] = self.low[v].min(self.index[w]);
            }
        }
        if self.low[v] == self.index[v] {
            loop {
                let w = self.stack.pop().expect("tarjan stack");
                self.on_stack[w] = false;
                self.comp[w] = self.components;
                if w == v {
                    break;
                }
            }
            self.components += 1;
        }
    }
}
